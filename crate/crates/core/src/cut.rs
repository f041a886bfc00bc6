//! Single-boundary up-sets (cuts) of a lex value group.
//!
//! Ideals and submodules of a valuation ring with value group `Γ` correspond
//! to up-closed subsets of `Γ`. This module works with the family of cuts
//! that have one boundary at a convex-subgroup level:
//!
//! ```text
//! Cut { level: k, bound: b, closed } = { γ : π_k(γ) > b }    (open)
//!                                    = { γ : π_k(γ) ≥ b }    (closed)
//! ```
//!
//! where `π_k` drops the last `k` coordinates. `Empty` is the zero module,
//! `All` the whole quotient field. The family is closed under meet, join,
//! sum, colon, v-closure, projection and preimage; the case tables below
//! are certified point-by-point by the membership oracle in `oracle`.
//!
//! Canonical form: an open cut whose quotient has a minimal positive
//! element `ε` is rewritten as the closed cut at `bound + ε`, so equality
//! of canonical cuts is syntactic.

use crate::error::{Error, Result};
use crate::group::{ConvexSubgroup, GroupElement, OrderedGroup};
use std::cmp::Ordering;

/// Up-closed subset of a value group with a single boundary.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UpSet {
    /// The empty up-set: the zero module.
    Empty,
    /// The whole group: the quotient field.
    All,
    /// `{ γ : π_level(γ) >(≥) bound }`; `bound` lives in the quotient.
    Cut {
        level: usize,
        bound: GroupElement,
        closed: bool,
    },
}

impl UpSet {
    pub fn is_empty_set(&self) -> bool {
        matches!(self, UpSet::Empty)
    }

    pub fn is_all(&self) -> bool {
        matches!(self, UpSet::All)
    }
}

impl OrderedGroup {
    /// Builds a cut after validating the bound against the quotient at `level`,
    /// and canonicalizes it.
    pub fn make_cut(&self, level: usize, bound: Vec<crate::rational::Rat>, closed: bool) -> Result<UpSet> {
        if level >= self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: level,
            });
        }
        let q = self.quotient(ConvexSubgroup(level));
        let bound = q.element(bound)?;
        Ok(self.canonicalize(UpSet::Cut {
            level,
            bound,
            closed,
        }))
    }

    /// `{ γ : γ ≥ 0 }`, the valuation ring itself.
    pub fn unit_cut(&self) -> UpSet {
        UpSet::Cut {
            level: 0,
            bound: self.zero(),
            closed: true,
        }
    }

    /// The prime at level `depth`: `{ γ : π(γ) > 0 }`, canonicalized.
    pub fn prime_cut(&self, depth: usize) -> UpSet {
        assert!(depth < self.rank());
        let q = self.quotient(ConvexSubgroup(depth));
        self.canonicalize(UpSet::Cut {
            level: depth,
            bound: q.zero(),
            closed: false,
        })
    }

    /// Rewrites an open cut as a closed one when the quotient has a minimal
    /// positive element; otherwise returns the cut unchanged.
    pub fn canonicalize(&self, s: UpSet) -> UpSet {
        match s {
            UpSet::Cut {
                level,
                bound,
                closed: false,
            } => match self
                .min_positive(ConvexSubgroup(level))
                .expect("level below rank")
            {
                Some(eps) => {
                    let q = self.quotient(ConvexSubgroup(level));
                    UpSet::Cut {
                        level,
                        bound: q.add(&bound, &eps).expect("same quotient"),
                        closed: true,
                    }
                }
                None => UpSet::Cut {
                    level,
                    bound,
                    closed: false,
                },
            },
            other => other,
        }
    }

    /// Membership of a group element in an up-set.
    pub fn cut_member(&self, s: &UpSet, g: &GroupElement) -> Result<bool> {
        if g.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: g.len(),
            });
        }
        Ok(match s {
            UpSet::Empty => false,
            UpSet::All => true,
            UpSet::Cut {
                level,
                bound,
                closed,
            } => {
                let p = g.truncated(self.rank() - level);
                match p.cmp(bound) {
                    Ordering::Greater => true,
                    Ordering::Equal => *closed,
                    Ordering::Less => false,
                }
            }
        })
    }

    /// Set containment `s ⊆ t`. Up-sets of a chain are themselves a chain,
    /// so for any two cuts at least one direction holds.
    pub fn cut_leq(&self, s: &UpSet, t: &UpSet) -> bool {
        match (s, t) {
            (UpSet::Empty, _) => true,
            (_, UpSet::All) => true,
            (UpSet::All, t) => t.is_all(),
            (s, UpSet::Empty) => s.is_empty_set(),
            (
                UpSet::Cut {
                    level: k1,
                    bound: b1,
                    closed: c1,
                },
                UpSet::Cut {
                    level: k2,
                    bound: b2,
                    closed: c2,
                },
            ) => {
                let n = self.rank();
                match k1.cmp(k2) {
                    Ordering::Equal => match b1.cmp(b2) {
                        Ordering::Greater => true,
                        Ordering::Equal => *c2 || !*c1,
                        Ordering::Less => false,
                    },
                    // s is the finer cut: its image at level k2 is the closed
                    // up-set at the truncated bound.
                    Ordering::Less => {
                        let r = b1.truncated(n - k2);
                        match r.cmp(b2) {
                            Ordering::Greater => true,
                            Ordering::Equal => *c2,
                            Ordering::Less => false,
                        }
                    }
                    // s is the coarser cut: its fibers extend unboundedly below,
                    // so t must be dominated strictly on the shared head.
                    Ordering::Greater => {
                        let r = b2.truncated(n - k1);
                        if *c1 {
                            b1.cmp(&r) == Ordering::Greater
                        } else {
                            b1.cmp(&r) != Ordering::Less
                        }
                    }
                }
            }
        }
    }

    /// `(s ∩ t, s ∪ t)`: ideal intersection and ideal sum.
    pub fn cut_meet_join(&self, s: &UpSet, t: &UpSet) -> (UpSet, UpSet) {
        if self.cut_leq(s, t) {
            (s.clone(), t.clone())
        } else {
            (t.clone(), s.clone())
        }
    }

    pub fn cut_meet(&self, s: &UpSet, t: &UpSet) -> UpSet {
        self.cut_meet_join(s, t).0
    }

    pub fn cut_join(&self, s: &UpSet, t: &UpSet) -> UpSet {
        self.cut_meet_join(s, t).1
    }

    /// Minkowski sum with up-closure: the ideal product.
    ///
    /// For cuts at levels `k1 ≤ k2`, the sum lives at the coarser level `k2`
    /// with bound `b2 + π(b1)`; the flag comes from the coarser cut, except
    /// at equal levels where it is the conjunction.
    pub fn cut_add(&self, s: &UpSet, t: &UpSet) -> Result<UpSet> {
        match (s, t) {
            (UpSet::Empty, UpSet::All) | (UpSet::All, UpSet::Empty) => {
                Err(Error::UndefinedProduct)
            }
            (UpSet::Empty, _) | (_, UpSet::Empty) => Ok(UpSet::Empty),
            (UpSet::All, _) | (_, UpSet::All) => Ok(UpSet::All),
            (
                UpSet::Cut {
                    level: k1,
                    bound: b1,
                    closed: c1,
                },
                UpSet::Cut {
                    level: k2,
                    bound: b2,
                    closed: c2,
                },
            ) => {
                let n = self.rank();
                let (kf, bf, cf, kc, bc, cc) = if k1 <= k2 {
                    (*k1, b1, *c1, *k2, b2, *c2)
                } else {
                    (*k2, b2, *c2, *k1, b1, *c1)
                };
                let q = self.quotient(ConvexSubgroup(kc));
                let bound = q.add(bc, &bf.truncated(n - kc))?;
                let closed = if kf == kc { cf && cc } else { cc };
                Ok(self.canonicalize(UpSet::Cut {
                    level: kc,
                    bound,
                    closed,
                }))
            }
        }
    }

    /// Residual `(s : t) = { γ : γ + t ⊆ s }`, the ideal colon.
    pub fn cut_colon(&self, s: &UpSet, t: &UpSet) -> Result<UpSet> {
        match (s, t) {
            (_, UpSet::Empty) => Err(Error::ZeroDivisor),
            (UpSet::Empty, _) => Ok(UpSet::Empty),
            (UpSet::All, _) => Ok(UpSet::All),
            (s, UpSet::All) => Ok(if s.is_all() { UpSet::All } else { UpSet::Empty }),
            (
                UpSet::Cut {
                    level: ks,
                    bound: bs,
                    closed: cs,
                },
                UpSet::Cut {
                    level: kt,
                    bound: bt,
                    closed: ct,
                },
            ) => {
                let n = self.rank();
                let out = match kt.cmp(ks) {
                    // Divisor finer than s: its image at level ks is attained,
                    // so the worst translate is by the truncated bound.
                    Ordering::Less => {
                        let q = self.quotient(ConvexSubgroup(*ks));
                        UpSet::Cut {
                            level: *ks,
                            bound: q.sub(bs, &bt.truncated(n - ks))?,
                            closed: *cs,
                        }
                    }
                    Ordering::Equal => {
                        let q = self.quotient(ConvexSubgroup(*ks));
                        UpSet::Cut {
                            level: *ks,
                            bound: q.sub(bs, bt)?,
                            // an open divisor (dense quotient) lets the bound
                            // itself back in.
                            closed: if *ct { *cs } else { true },
                        }
                    }
                    // Divisor coarser than s: its fibers reach unboundedly
                    // far down, forcing strict head domination.
                    Ordering::Greater => {
                        let q = self.quotient(ConvexSubgroup(*kt));
                        UpSet::Cut {
                            level: *kt,
                            bound: q.sub(&bs.truncated(n - kt), bt)?,
                            closed: !*ct,
                        }
                    }
                };
                Ok(self.canonicalize(out))
            }
        }
    }

    /// Divisorial closure `I ↦ (V : (V : I))`.
    ///
    /// On a valuation ring the only nondivisorial modules are the translates
    /// of the maximal ideal when it is nonprincipal; those are exactly the
    /// level-0 open cuts (a dense-last group), which close to the same bound.
    /// Everything else is fixed.
    pub fn cut_v_close(&self, s: &UpSet) -> UpSet {
        match self.canonicalize(s.clone()) {
            UpSet::Cut {
                level: 0,
                bound,
                closed: false,
            } => UpSet::Cut {
                level: 0,
                bound,
                closed: true,
            },
            other => other,
        }
    }

    /// Up-closure of the image in the quotient at `h`: extension of the
    /// module to the localization at level `h`. Requires `h < rank`.
    ///
    /// A cut at level `k ≥ h` descends with the same bound and flag. A cut at
    /// level `k < h` has positive elements of the kernel above any fiber, so
    /// its image closes at the truncated bound.
    pub fn cut_project(&self, s: &UpSet, h: ConvexSubgroup) -> UpSet {
        assert!(h.depth() < self.rank(), "projection to the trivial group");
        let n = self.rank();
        let hd = h.depth();
        match s {
            UpSet::Empty => UpSet::Empty,
            UpSet::All => UpSet::All,
            UpSet::Cut {
                level,
                bound,
                closed,
            } => {
                let q = self.quotient(h);
                if *level >= hd {
                    UpSet::Cut {
                        level: level - hd,
                        bound: bound.clone(),
                        closed: *closed,
                    }
                } else {
                    q.canonicalize(UpSet::Cut {
                        level: 0,
                        bound: bound.truncated(n - hd),
                        closed: true,
                    })
                }
            }
        }
    }

    /// Preimage in `self` of an up-set of the quotient at `h`: contraction of
    /// a localized module back to the branch group.
    pub fn cut_preimage(&self, s: &UpSet, h: ConvexSubgroup) -> UpSet {
        let hd = h.depth();
        assert!(hd < self.rank());
        match s {
            UpSet::Empty => UpSet::Empty,
            UpSet::All => UpSet::All,
            UpSet::Cut {
                level,
                bound,
                closed,
            } => {
                debug_assert!(level + hd < self.rank() || bound.is_empty() == (level + hd == self.rank()));
                UpSet::Cut {
                    level: level + hd,
                    bound: bound.clone(),
                    closed: *closed,
                }
            }
        }
    }

    /// Translate of an up-set by a group element: the principal scaling `x·I`.
    pub fn cut_translate(&self, s: &UpSet, shift: &GroupElement) -> Result<UpSet> {
        match s {
            UpSet::Empty => Ok(UpSet::Empty),
            UpSet::All => Ok(UpSet::All),
            UpSet::Cut {
                level,
                bound,
                closed,
            } => {
                let q = self.quotient(ConvexSubgroup(*level));
                let shifted = q.add(bound, &shift.truncated(self.rank() - level))?;
                Ok(UpSet::Cut {
                    level: *level,
                    bound: shifted,
                    closed: *closed,
                })
            }
        }
    }
}

/// Renders against the owning group, for error messages and reports.
pub fn cut_display(group: &OrderedGroup, s: &UpSet) -> String {
    match s {
        UpSet::Empty => "zero".to_string(),
        UpSet::All => "full".to_string(),
        UpSet::Cut {
            level,
            bound,
            closed,
        } => {
            let rel = if *closed { ">=" } else { ">" };
            if *level == 0 {
                format!("{{{rel}{bound}}}")
            } else {
                format!("{{pi_{level}{rel}{bound}}} over {group}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FactorKind::{self, Dense, Discrete};
    use crate::rational::{rat, rint, Rat};

    fn grp(kinds: &[FactorKind]) -> OrderedGroup {
        OrderedGroup::new(kinds.to_vec()).unwrap()
    }

    fn el(g: &OrderedGroup, coords: &[Rat]) -> GroupElement {
        g.element(coords.to_vec()).unwrap()
    }

    #[test]
    fn member_cases() {
        let z = grp(&[Discrete]);
        let s = z.make_cut(0, vec![rint(3)], true).unwrap();
        assert!(z.cut_member(&s, &el(&z, &[rint(3)])).unwrap());

        let zq = grp(&[Discrete, Dense]);
        let open = zq.make_cut(0, vec![rint(0), rint(0)], false).unwrap();
        assert!(!zq.cut_member(&open, &el(&zq, &[rint(0), rint(0)])).unwrap());

        let p = zq.make_cut(1, vec![rint(1)], true).unwrap();
        assert!(zq
            .cut_member(&p, &el(&zq, &[rint(1), rint(-100)]))
            .unwrap());
    }

    #[test]
    fn canonical_rewrites_open_discrete() {
        let z = grp(&[Discrete]);
        let s = z.make_cut(0, vec![rint(0)], false).unwrap();
        assert_eq!(s, z.make_cut(0, vec![rint(1)], true).unwrap());

        // dense quotient keeps open cuts open
        let q = grp(&[Dense]);
        let t = q.make_cut(0, vec![rint(0)], false).unwrap();
        assert!(matches!(t, UpSet::Cut { closed: false, .. }));

        // level-1 quotient of ZxQ is Z, so the height-1 prime closes at 1
        let zq = grp(&[Discrete, Dense]);
        assert_eq!(
            zq.prime_cut(1),
            zq.make_cut(1, vec![rint(1)], true).unwrap()
        );
    }

    #[test]
    fn leq_cases() {
        let z = grp(&[Discrete]);
        let s5 = z.make_cut(0, vec![rint(5)], true).unwrap();
        let s2 = z.make_cut(0, vec![rint(2)], true).unwrap();
        assert!(z.cut_leq(&s5, &s2));
        assert!(!z.cut_leq(&s2, &s5));
        assert!(z.cut_leq(&UpSet::All, &UpSet::All));

        // the height-1 prime of ZxQ sits inside the maximal ideal:
        // as up-sets {pi_1 >= 1} is contained in {> (0,0)}
        let zq = grp(&[Discrete, Dense]);
        let max = zq.make_cut(0, vec![rint(0), rint(0)], false).unwrap();
        let p = zq.prime_cut(1);
        assert!(zq.cut_leq(&p, &max));
        assert!(!zq.cut_leq(&max, &p));
    }

    #[test]
    fn meet_join_picks_min_max() {
        let z = grp(&[Discrete]);
        let s2 = z.make_cut(0, vec![rint(2)], true).unwrap();
        let s5 = z.make_cut(0, vec![rint(5)], true).unwrap();
        assert_eq!(z.cut_meet_join(&s2, &s5), (s5.clone(), s2.clone()));
        assert_eq!(
            z.cut_meet_join(&UpSet::Empty, &s2),
            (UpSet::Empty, s2.clone())
        );

        let zq = grp(&[Discrete, Dense]);
        let max = zq.make_cut(0, vec![rint(0), rint(0)], false).unwrap();
        let p = zq.prime_cut(1);
        assert_eq!(zq.cut_meet_join(&max, &p), (p.clone(), max.clone()));
    }

    #[test]
    fn add_cases() {
        let z = grp(&[Discrete]);
        let a = z.make_cut(0, vec![rint(2)], true).unwrap();
        let b = z.make_cut(0, vec![rint(3)], true).unwrap();
        assert_eq!(
            z.cut_add(&a, &b).unwrap(),
            z.make_cut(0, vec![rint(5)], true).unwrap()
        );

        // M·M = M for the idempotent dense maximal ideal of ZxQ
        let zq = grp(&[Discrete, Dense]);
        let m = zq.make_cut(0, vec![rint(0), rint(0)], false).unwrap();
        assert_eq!(zq.cut_add(&m, &m).unwrap(), m);

        // mixed level: level-1 cut plus level-0 cut stays at level 1 and
        // shifts by the head of the level-0 bound
        let p1 = zq.make_cut(1, vec![rint(1)], true).unwrap();
        let c = zq.make_cut(0, vec![rint(0), rat(1, 2)], true).unwrap();
        assert_eq!(
            zq.cut_add(&p1, &c).unwrap(),
            zq.make_cut(1, vec![rint(1)], true).unwrap()
        );

        assert!(z.cut_add(&UpSet::Empty, &UpSet::All).is_err());
        assert_eq!(z.cut_add(&UpSet::Empty, &a).unwrap(), UpSet::Empty);
        assert_eq!(z.cut_add(&UpSet::All, &a).unwrap(), UpSet::All);
    }

    #[test]
    fn colon_cases() {
        let z = grp(&[Discrete]);
        let s5 = z.make_cut(0, vec![rint(5)], true).unwrap();
        let s2 = z.make_cut(0, vec![rint(2)], true).unwrap();
        assert_eq!(
            z.cut_colon(&s5, &s2).unwrap(),
            z.make_cut(0, vec![rint(3)], true).unwrap()
        );

        // (M : M) = V on a rank-one dense group
        let q = grp(&[Dense]);
        let m = q.make_cut(0, vec![rint(0)], false).unwrap();
        assert_eq!(q.cut_colon(&m, &m).unwrap(), q.unit_cut());

        // {>(1,0)} : {>=(1,0)} = {>(0,0)} over ZxQ
        let zq = grp(&[Discrete, Dense]);
        let so = zq.make_cut(0, vec![rint(1), rint(0)], false).unwrap();
        let sc = zq.make_cut(0, vec![rint(1), rint(0)], true).unwrap();
        assert_eq!(
            zq.cut_colon(&so, &sc).unwrap(),
            zq.make_cut(0, vec![rint(0), rint(0)], false).unwrap()
        );

        assert!(z.cut_colon(&s5, &UpSet::Empty).is_err());
        assert_eq!(z.cut_colon(&UpSet::Empty, &s2).unwrap(), UpSet::Empty);
        assert_eq!(z.cut_colon(&s5, &UpSet::All).unwrap(), UpSet::Empty);
        assert_eq!(z.cut_colon(&UpSet::All, &s2).unwrap(), UpSet::All);
    }

    #[test]
    fn colon_by_coarser_divisor() {
        // (V : P) over ZxQ where P is the height-1 prime: every translate of P
        // inside V must dominate strictly in the head coordinate.
        let zq = grp(&[Discrete, Dense]);
        let v = zq.unit_cut();
        let p = zq.prime_cut(1);
        assert_eq!(
            zq.cut_colon(&v, &p).unwrap(),
            zq.make_cut(1, vec![rint(0)], true).unwrap()
        );
    }

    #[test]
    fn v_closure() {
        let q = grp(&[Dense]);
        let m = q.make_cut(0, vec![rint(0)], false).unwrap();
        assert_eq!(q.cut_v_close(&m), q.unit_cut());

        let z = grp(&[Discrete]);
        let s = z.make_cut(0, vec![rint(3)], true).unwrap();
        assert_eq!(z.cut_v_close(&s), s);

        // cuts at positive level are divisorial
        let zq = grp(&[Discrete, Dense]);
        let p = zq.prime_cut(1);
        assert_eq!(zq.cut_v_close(&p), p);
    }

    #[test]
    fn v_closure_agrees_with_double_colon() {
        let groups = [
            grp(&[Dense]),
            grp(&[Discrete]),
            grp(&[Discrete, Dense]),
            grp(&[Discrete, Discrete]),
        ];
        for g in &groups {
            let mut cuts = vec![g.unit_cut(), g.prime_cut(0)];
            for lvl in 0..g.rank() {
                let q = g.quotient(ConvexSubgroup(lvl));
                for b in [-2i64, 0, 3] {
                    let mut coords = vec![rint(b)];
                    coords.resize(q.rank(), rint(0));
                    cuts.push(g.make_cut(lvl, coords.clone(), true).unwrap());
                    cuts.push(g.make_cut(lvl, coords, false).unwrap());
                }
            }
            let unit = g.unit_cut();
            for s in &cuts {
                let inner = g.cut_colon(&unit, s).unwrap();
                let double = g.cut_colon(&unit, &inner).unwrap();
                assert_eq!(g.cut_v_close(s), double, "v != (V:(V:I)) on {g} for {s:?}");
            }
        }
    }

    #[test]
    fn project_cases() {
        let zq = grp(&[Discrete, Dense]);
        let s = zq.make_cut(0, vec![rint(2), rat(1, 3)], true).unwrap();
        let z = zq.quotient(ConvexSubgroup(1));
        assert_eq!(
            zq.cut_project(&s, ConvexSubgroup(1)),
            z.make_cut(0, vec![rint(2)], true).unwrap()
        );

        let p = zq.prime_cut(1);
        assert_eq!(
            zq.cut_project(&p, ConvexSubgroup(1)),
            z.make_cut(0, vec![rint(1)], true).unwrap()
        );

        assert_eq!(zq.cut_project(&s, ConvexSubgroup(0)), s);
    }

    #[test]
    fn preimage_cases() {
        let zq = grp(&[Discrete, Dense]);
        let z = zq.quotient(ConvexSubgroup(1));
        let s = z.make_cut(0, vec![rint(2)], true).unwrap();
        assert_eq!(
            zq.cut_preimage(&s, ConvexSubgroup(1)),
            zq.make_cut(1, vec![rint(2)], true).unwrap()
        );
        let t = z.make_cut(0, vec![rint(0)], false).unwrap(); // canonical {>=1}
        assert_eq!(
            zq.cut_preimage(&t, ConvexSubgroup(1)),
            zq.make_cut(1, vec![rint(1)], true).unwrap()
        );
        assert_eq!(zq.cut_preimage(&UpSet::All, ConvexSubgroup(1)), UpSet::All);
    }

    #[test]
    fn round_trip_project_preimage() {
        let zq = grp(&[Discrete, Dense]);
        let h = ConvexSubgroup(1);
        let cuts = [
            zq.unit_cut(),
            zq.prime_cut(0),
            zq.prime_cut(1),
            zq.make_cut(0, vec![rint(-1), rat(1, 2)], false).unwrap(),
            zq.make_cut(1, vec![rint(3)], true).unwrap(),
        ];
        for s in &cuts {
            let back = zq.cut_preimage(&zq.cut_project(s, h), h);
            assert!(zq.cut_leq(s, &back), "round trip must contain {s:?}");
            if let UpSet::Cut { level, .. } = s {
                if *level >= h.depth() {
                    assert_eq!(&back, s);
                }
            }
        }
    }
}
