//! Reflexive (divisorial) monomial ideals of numerical semigroup rings.
//!
//! For a numerical semigroup `S`, the ring `K[[t^S]]` is a one-dimensional
//! analytically irreducible local ring whose monomial fractional ideals are
//! exactly the relative ideals of `S`. Products, colons, canonical duality,
//! divisorial and integral closures then reduce to exact arithmetic on
//! cofinite integer sets, which this crate implements together with ring
//! classifiers (Gorenstein, almost Gorenstein, minimal multiplicity, Arf)
//! and an exhaustive harness that checks the reflexivity characterizations
//! of those classes on every semigroup up to a genus bound.

mod bits;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod harness;
pub mod ideal;
pub mod semigroup;

pub use classify::{classify, ClassificationReport};
pub use enumerate::{
    ideals_between, semigroups_up_to_genus, CensusJson, CensusSummary, IdealCensus,
    SemigroupUniverse,
};
pub use error::{Error, Result};
pub use harness::{HarnessConfig, TheoremId, VerificationReport};
pub use ideal::{blowup_semigroup, IdealJson, NormalizationCertificate, RelativeIdeal};
pub use semigroup::NumericalSemigroup;
