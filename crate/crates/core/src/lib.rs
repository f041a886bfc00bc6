pub mod cut;
pub mod error;
pub mod group;
pub mod rational;
