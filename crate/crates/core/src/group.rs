//! Lexicographic products of ordered abelian groups.
//!
//! A value group here is a finite lex product of `Z` (discrete) and `Q`
//! (dense) factors, leftmost factor most significant. Convex subgroups of
//! such a product are exactly the suffixes of the factor list, so each one
//! is identified by its depth (number of trailing factors it spans).

use crate::error::{Error, Result};
use crate::rational::{is_integer, rat_one, rat_str, rat_zero, Rat};
use std::cmp::Ordering;

/// One factor of a lex product: `Discrete` is the integers, `Dense` the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorKind {
    Discrete,
    Dense,
}

impl std::fmt::Display for FactorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FactorKind::Discrete => write!(f, "Z"),
            FactorKind::Dense => write!(f, "Q"),
        }
    }
}

/// A convex subgroup, given as the last `depth` factors of the owning group.
///
/// Depth 0 is the trivial subgroup; depth equal to the rank is the whole group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConvexSubgroup(pub usize);

impl ConvexSubgroup {
    pub fn depth(self) -> usize {
        self.0
    }
}

/// Totally ordered abelian group: a lex product of [`FactorKind`] factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedGroup {
    factors: Vec<FactorKind>,
}

/// A point of an [`OrderedGroup`], one exact rational per factor.
///
/// Comparison is lexicographic from the most significant coordinate. `Ord`
/// panics on rank mismatch; elements of distinct groups must not be mixed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    coords: Vec<Rat>,
}

impl GroupElement {
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Keeps the leading `len` coordinates (projection along a convex subgroup).
    pub fn truncated(&self, len: usize) -> GroupElement {
        assert!(len <= self.coords.len(), "cannot truncate {} coords to {len}", self.coords.len());
        GroupElement {
            coords: self.coords[..len].to_vec(),
        }
    }

    pub fn from_coords(coords: Vec<Rat>) -> GroupElement {
        GroupElement { coords }
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(
            self.coords.len(),
            other.coords.len(),
            "lex comparison of elements of different rank"
        );
        for (a, b) in self.coords.iter().zip(&other.coords) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl std::fmt::Display for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(rat_str).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl OrderedGroup {
    pub fn new(factors: Vec<FactorKind>) -> Result<OrderedGroup> {
        if factors.is_empty() {
            return Err(Error::InvalidModel(vec![crate::error::Diagnostic::new(
                "group",
                "a value group needs at least one factor",
            )]));
        }
        Ok(OrderedGroup { factors })
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[FactorKind] {
        &self.factors
    }

    /// The quotient by the convex subgroup of the given depth: the leading
    /// `rank - depth` factors. Requires `depth < rank`.
    pub fn quotient(&self, h: ConvexSubgroup) -> OrderedGroup {
        assert!(h.depth() < self.rank(), "quotient by the whole group");
        OrderedGroup {
            factors: self.factors[..self.rank() - h.depth()].to_vec(),
        }
    }

    /// Validates coordinate count and integrality at discrete factors.
    pub fn element(&self, coords: Vec<Rat>) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        for (i, (c, k)) in coords.iter().zip(&self.factors).enumerate() {
            if *k == FactorKind::Discrete && !is_integer(c) {
                return Err(Error::IntegerCoordRequired {
                    index: i,
                    value: rat_str(c),
                });
            }
        }
        Ok(GroupElement { coords })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![rat_zero(); self.rank()],
        }
    }

    pub fn cmp_elems(&self, g: &GroupElement, h: &GroupElement) -> Result<Ordering> {
        self.check_rank(g)?;
        self.check_rank(h)?;
        Ok(g.cmp(h))
    }

    pub fn add(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check_rank(g)?;
        self.check_rank(h)?;
        Ok(GroupElement {
            coords: g
                .coords
                .iter()
                .zip(&h.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn neg(&self, g: &GroupElement) -> GroupElement {
        GroupElement {
            coords: g.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn sub(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.add(g, &self.neg(h))
    }

    /// Minimal positive element of the quotient by `h`, if one exists.
    ///
    /// The quotient has a minimal positive element exactly when its last
    /// factor is discrete, in which case it is `(0, ..., 0, 1)`. Equivalently:
    /// the maximal ideal of the localization at level `h` is principal.
    pub fn min_positive(&self, h: ConvexSubgroup) -> Result<Option<GroupElement>> {
        if h.depth() >= self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: h.depth(),
            });
        }
        let q_rank = self.rank() - h.depth();
        match self.factors[q_rank - 1] {
            FactorKind::Dense => Ok(None),
            FactorKind::Discrete => {
                let mut coords = vec![rat_zero(); q_rank];
                coords[q_rank - 1] = rat_one();
                Ok(Some(GroupElement { coords }))
            }
        }
    }

    fn check_rank(&self, g: &GroupElement) -> Result<()> {
        if g.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: g.len(),
            });
        }
        Ok(())
    }
}

impl std::fmt::Display for OrderedGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}
