//! Ring classes of `K[[t^S]]` decided on the semigroup, with witnesses.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// One integer certifying each negative flag; `None` when the flag holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Witnesses {
    /// Least element of `K ∖ S`.
    pub gorenstein: Option<i64>,
    /// Least element of `(K + m) ∖ m`.
    pub almost_gorenstein: Option<i64>,
    /// Least element of `(e + (m − m)) △ m`.
    pub minimal_multiplicity: Option<i64>,
    /// Least `v` with `(v + ℕ) ∩ S` not stable.
    pub arf: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationReport {
    pub generators: Vec<u64>,
    pub frobenius: i64,
    pub genus: usize,
    pub embedding_dimension: usize,
    pub multiplicity: u64,
    pub gorenstein: bool,
    pub almost_gorenstein: bool,
    pub minimal_multiplicity: bool,
    pub arf: bool,
    pub witness: Witnesses,
}

/// Smallest integer in exactly one of the two ideals.
fn first_difference(a: &RelativeIdeal, b: &RelativeIdeal) -> Option<i64> {
    let lo = a.min().min(b.min());
    let hi = a.stable_from().max(b.stable_from());
    (lo..hi).find(|&z| a.contains(z) != b.contains(z))
}

/// Smallest element of `a ∖ b`.
fn first_outside(a: &RelativeIdeal, b: &RelativeIdeal) -> Option<i64> {
    let hi = a.stable_from().max(b.stable_from());
    (a.min()..hi).find(|&z| a.contains(z) && !b.contains(z))
}

fn gorenstein_witness(s: &Arc<NumericalSemigroup>) -> Option<i64> {
    first_difference(&RelativeIdeal::canonical(s), &RelativeIdeal::unit(s))
}

/// `K = S`.
pub fn is_gorenstein(s: &Arc<NumericalSemigroup>) -> bool {
    gorenstein_witness(s).is_none()
}

fn almost_gorenstein_witness(s: &Arc<NumericalSemigroup>) -> Option<i64> {
    let m = RelativeIdeal::maximal(s);
    let km = RelativeIdeal::canonical(s)
        .sum(&m)
        .expect("same ambient semigroup");
    first_outside(&km, &m)
}

/// `K + m ⊆ m`.
pub fn is_almost_gorenstein(s: &Arc<NumericalSemigroup>) -> bool {
    almost_gorenstein_witness(s).is_none()
}

fn stability_witness(e: &RelativeIdeal) -> Option<i64> {
    first_difference(&e.end_ring().translate(e.min()), e)
}

/// `m` is stable.
pub fn has_minimal_multiplicity(s: &Arc<NumericalSemigroup>) -> bool {
    RelativeIdeal::maximal(s).is_stable()
}

/// The integrally closed ideals `(v + ℕ) ∩ S` for `v ∈ S ∩ [0, F + 1]`.
/// Every integrally closed ideal of `S` is one of these or a tail `[v, →)`
/// with `v > F + 1`.
pub fn integrally_closed_ideals(s: &Arc<NumericalSemigroup>) -> Vec<RelativeIdeal> {
    s.small_elements()
        .into_iter()
        .map(|v| {
            RelativeIdeal::from_generators(s, &[v])
                .and_then(|p| p.integral_closure())
                .expect("v + S is an integral ideal")
        })
        .collect()
}

fn arf_witness(s: &Arc<NumericalSemigroup>) -> Option<i64> {
    integrally_closed_ideals(s)
        .into_iter()
        .find(|e| !e.is_stable())
        .map(|e| e.min())
}

/// Every integrally closed ideal is stable.
pub fn is_arf(s: &Arc<NumericalSemigroup>) -> bool {
    arf_witness(s).is_none()
}

pub fn classify(s: &Arc<NumericalSemigroup>) -> ClassificationReport {
    let witness = Witnesses {
        gorenstein: gorenstein_witness(s),
        almost_gorenstein: almost_gorenstein_witness(s),
        minimal_multiplicity: stability_witness(&RelativeIdeal::maximal(s)),
        arf: arf_witness(s),
    };
    ClassificationReport {
        generators: s.minimal_generators().to_vec(),
        frobenius: s.frobenius(),
        genus: s.genus(),
        embedding_dimension: s.embedding_dimension(),
        multiplicity: s.multiplicity(),
        gorenstein: witness.gorenstein.is_none(),
        almost_gorenstein: witness.almost_gorenstein.is_none(),
        minimal_multiplicity: witness.minimal_multiplicity.is_none(),
        arf: witness.arf.is_none(),
        witness,
    }
}
