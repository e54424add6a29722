//! Relative ideals of a numerical semigroup.
//!
//! A relative ideal `E ⊆ ℤ` satisfies `E + S ⊆ E`, has a least element and
//! contains every integer from some point on. It is the exponent set of a
//! monomial fractional ideal of `K[[t^S]]`: sums of relative ideals are
//! products of ideals, `E − F = {z : z + F ⊆ E}` is the colon `I : J`, and
//! translation by `z` is multiplication by `t^z`.
//!
//! The normal form is `(min, stable_from, window)` where `[stable_from, →)`
//! is the minimal all-member tail and `window` records membership on
//! `[min, stable_from)`. Equality is structural on that triple.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::{shifted_subset, Bits};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone)]
pub struct RelativeIdeal {
    semigroup: Arc<NumericalSemigroup>,
    min: i64,
    stable_from: i64,
    window: Bits,
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.min == other.min
            && self.stable_from == other.stable_from
            && self.window == other.window
    }
}

impl Eq for RelativeIdeal {}

impl Hash for RelativeIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.min.hash(state);
        self.stable_from.hash(state);
        self.window.hash(state);
    }
}

/// Shifts `z` and `w` realizing an ideal inside a standard window, with the
/// translated ideal `result = z + w + E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationCertificate {
    pub z: i64,
    pub w: i64,
    pub result: RelativeIdeal,
}

/// JSON rendering of an ideal: explicit members below `stableFrom`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdealJson {
    pub min: i64,
    pub stable_from: i64,
    pub members: Vec<i64>,
}

impl RelativeIdeal {
    /// Normalizes the set whose membership on `[lo, lo + bits.len())` is
    /// given by `bits` and which contains every integer from
    /// `lo + bits.len()` on.
    fn normalize(semigroup: Arc<NumericalSemigroup>, lo: i64, bits: Bits) -> Self {
        let len = bits.len();
        let Some(first) = bits.first_one() else {
            let min = lo + len as i64;
            return RelativeIdeal {
                semigroup,
                min,
                stable_from: min,
                window: Bits::zeros(0),
            };
        };
        let end = match bits.last_zero() {
            Some(last) if last > first => last + 1,
            _ => first,
        };
        RelativeIdeal {
            semigroup,
            min: lo + first as i64,
            stable_from: lo + end as i64,
            window: bits.slice(first, end),
        }
    }

    fn from_predicate(
        semigroup: Arc<NumericalSemigroup>,
        lo: i64,
        hi: i64,
        mut member: impl FnMut(i64) -> bool,
    ) -> Self {
        let len = (hi - lo).max(0) as usize;
        let bits = Bits::from_fn(len, |i| member(lo + i as i64));
        Self::normalize(semigroup, lo, bits)
    }

    /// `⋃ (g + S)` over the given generators.
    pub fn from_generators(semigroup: &Arc<NumericalSemigroup>, gens: &[i64]) -> Result<Self> {
        let lo = *gens.iter().min().ok_or(Error::EmptyGenerators)?;
        let hi = lo + semigroup.frobenius() + 1;
        let s = semigroup.clone();
        Ok(Self::from_predicate(semigroup.clone(), lo, hi, |z| {
            gens.iter().any(|&g| s.is_member(z - g))
        }))
    }

    /// Builds `members ∪ [stable_from, →)`, checking that it is closed under
    /// adding elements of `S`.
    pub fn from_members(
        semigroup: &Arc<NumericalSemigroup>,
        members: &[i64],
        stable_from: i64,
    ) -> Result<Self> {
        let lo = members
            .iter()
            .copied()
            .min()
            .unwrap_or(stable_from)
            .min(stable_from);
        let ideal =
            Self::from_predicate(semigroup.clone(), lo, stable_from, |z| members.contains(&z));
        let closed = ideal.elements_below(ideal.stable_from).iter().all(|&e| {
            semigroup
                .minimal_generators()
                .iter()
                .all(|&g| ideal.contains(e + g as i64))
        });
        if closed {
            Ok(ideal)
        } else {
            Err(Error::NotAnIdeal(format!(
                "members {members:?} with tail from {stable_from} are not closed under S"
            )))
        }
    }

    pub fn from_json(semigroup: &Arc<NumericalSemigroup>, json: &IdealJson) -> Result<Self> {
        let ideal = Self::from_members(semigroup, &json.members, json.stable_from)?;
        if ideal.to_json() != *json {
            return Err(Error::NotAnIdeal(format!("{json:?} is not in normal form")));
        }
        Ok(ideal)
    }

    /// `S` itself.
    pub fn unit(semigroup: &Arc<NumericalSemigroup>) -> Self {
        let s = semigroup.clone();
        Self::from_predicate(semigroup.clone(), 0, semigroup.frobenius() + 1, |z| {
            s.is_member(z)
        })
    }

    /// `S ∖ {0}`.
    pub fn maximal(semigroup: &Arc<NumericalSemigroup>) -> Self {
        let s = semigroup.clone();
        Self::from_predicate(semigroup.clone(), 1, semigroup.frobenius() + 1, |z| {
            s.is_member(z)
        })
    }

    /// The conductor `[F + 1, →)`.
    pub fn conductor(semigroup: &Arc<NumericalSemigroup>) -> Self {
        Self::tail(semigroup, semigroup.frobenius() + 1)
    }

    /// `ℕ`, the normalization.
    pub fn normalization(semigroup: &Arc<NumericalSemigroup>) -> Self {
        Self::tail(semigroup, 0)
    }

    /// The interval `[from, →)`.
    pub fn tail(semigroup: &Arc<NumericalSemigroup>, from: i64) -> Self {
        RelativeIdeal {
            semigroup: semigroup.clone(),
            min: from,
            stable_from: from,
            window: Bits::zeros(0),
        }
    }

    /// The standard canonical ideal `K = {F − s : s ∉ S}`, with `S ⊆ K ⊆ ℕ`.
    pub fn canonical(semigroup: &Arc<NumericalSemigroup>) -> Self {
        let s = semigroup.clone();
        let f = semigroup.frobenius();
        Self::from_predicate(semigroup.clone(), 0, f + 1, |z| !s.is_member(f - z))
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    /// Least element; `t^min` is the minimal reduction.
    pub fn min(&self) -> i64 {
        self.min
    }

    pub fn stable_from(&self) -> i64 {
        self.stable_from
    }

    #[inline]
    pub fn contains(&self, z: i64) -> bool {
        if z < self.min {
            false
        } else if z >= self.stable_from {
            true
        } else {
            self.window.get((z - self.min) as usize)
        }
    }

    /// Members below `bound`, ascending.
    pub fn elements_below(&self, bound: i64) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .window
            .iter_ones()
            .map(|i| self.min + i as i64)
            .take_while(|&z| z < bound)
            .collect();
        out.extend(self.stable_from.max(self.min)..bound);
        out
    }

    /// Explicit members `[min, stable_from)`.
    pub fn small_elements(&self) -> Vec<i64> {
        self.elements_below(self.stable_from)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.semigroup, &other.semigroup)
            || self.semigroup.minimal_generators() == other.semigroup.minimal_generators()
        {
            Ok(())
        } else {
            Err(Error::MismatchedSemigroups)
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        if self.min < other.min || self.stable_from < other.stable_from {
            return false;
        }
        shifted_subset(
            &self.window,
            &other.window,
            (self.min - other.min) as usize,
            self.window.len(),
        )
    }

    /// `z + E`.
    pub fn translate(&self, z: i64) -> Self {
        RelativeIdeal {
            semigroup: self.semigroup.clone(),
            min: self.min + z,
            stable_from: self.stable_from + z,
            window: self.window.clone(),
        }
    }

    /// `E + F`, the product of the ideals.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let lo = self.min + other.min;
        let hi = (self.stable_from + other.min).min(other.stable_from + self.min);
        let mut bits = Bits::zeros((hi - lo) as usize);
        for j in other.window.iter_ones() {
            bits.or_shifted(&self.window, j);
        }
        Ok(Self::normalize(self.semigroup.clone(), lo, bits))
    }

    /// `E − F = {z : z + F ⊆ E}`, the colon `I : J`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let (e, f) = (self, other);
        // z ≥ min(E) − min(F) is forced by min(F); z ≥ stable_from(E) − min(F)
        // always belongs.
        let lo = e.min - f.min;
        let hi = e.stable_from - f.min;
        let mut bits = Bits::zeros((hi - lo) as usize);
        for z in lo..hi {
            if z + f.stable_from < e.stable_from {
                continue;
            }
            let n = (e.stable_from - z - f.min) as usize;
            let shift = (z + f.min - e.min) as usize;
            if shifted_subset(&f.window, &e.window, shift, n) {
                bits.set((z - lo) as usize);
            }
        }
        Ok(Self::normalize(self.semigroup.clone(), lo, bits))
    }

    /// `K − E`, the canonical dual.
    pub fn dual(&self) -> Self {
        Self::canonical(&self.semigroup)
            .colon(self)
            .expect("same ambient semigroup")
    }

    /// `S − (S − E)`, the divisorial closure.
    pub fn reflexive_closure(&self) -> Self {
        let unit = Self::unit(&self.semigroup);
        let inner = unit.colon(self).expect("same ambient semigroup");
        unit.colon(&inner).expect("same ambient semigroup")
    }

    /// `H − (H − E)`.
    pub fn h_closure(&self, h: &Self) -> Result<Self> {
        h.colon(&h.colon(self)?)
    }

    /// `(min(E) + ℕ) ∩ S`; defined only for `E ⊆ S`.
    pub fn integral_closure(&self) -> Result<Self> {
        if !self.is_integral() {
            return Err(Error::NotIntegral(self.to_string()));
        }
        let s = self.semigroup.clone();
        let hi = self.min.max(s.frobenius() + 1);
        Ok(Self::from_predicate(
            self.semigroup.clone(),
            self.min,
            hi,
            |z| s.is_member(z),
        ))
    }

    /// `E ⊆ S`.
    pub fn is_integral(&self) -> bool {
        self.is_subset_of(&Self::unit(&self.semigroup))
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexive_closure() == *self
    }

    pub fn is_h_reflexive(&self, h: &Self) -> Result<bool> {
        Ok(self.h_closure(h)? == *self)
    }

    pub fn is_integrally_closed(&self) -> Result<bool> {
        Ok(self.integral_closure()? == *self)
    }

    /// `min(E) + (E − E) = E`.
    pub fn is_stable(&self) -> bool {
        self.end_ring().translate(self.min) == *self
    }

    pub fn is_principal(&self) -> bool {
        *self == Self::unit(&self.semigroup).translate(self.min)
    }

    /// `E − E`, the multiplier ring `I : I`.
    pub fn end_ring(&self) -> Self {
        self.colon(self).expect("same ambient semigroup")
    }

    /// `z = min(K − E)` places `z + E` between `C` and `K`.
    pub fn normalize_to_canonical_window(&self) -> NormalizationCertificate {
        let z = self.dual().min;
        NormalizationCertificate {
            z,
            w: 0,
            result: self.translate(z),
        }
    }

    /// For reflexive `E`: `z = min(K − E)`, `w = min(S − (z + E))`, and the
    /// result `w + z + E` lies between `C` and `S`.
    pub fn normalize_reflexive(&self) -> Result<NormalizationCertificate> {
        if !self.is_reflexive() {
            return Err(Error::NotReflexive(self.to_string()));
        }
        let z = self.dual().min;
        let shifted = self.translate(z);
        let w = Self::unit(&self.semigroup).colon(&shifted)?.min;
        Ok(NormalizationCertificate {
            z,
            w,
            result: shifted.translate(w),
        })
    }

    /// Reads a relative ideal containing `0` and closed under addition as a
    /// numerical semigroup (an overring of `S` inside `ℕ`).
    pub fn as_semigroup(&self) -> Result<NumericalSemigroup> {
        if self.min != 0 {
            return Err(Error::NotASemigroup(format!(
                "least element of {self} is not 0"
            )));
        }
        if !self.sum(self)?.is_subset_of(self) {
            return Err(Error::NotASemigroup(format!(
                "{self} is not additively closed"
            )));
        }
        let table = (0..self.stable_from).map(|z| self.contains(z)).collect();
        Ok(NumericalSemigroup::from_table(table))
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            min: self.min,
            stable_from: self.stable_from,
            members: self.small_elements(),
        }
    }

    /// `min=…, window=…, stable_from=…` with the window as a bit string.
    pub fn describe(&self) -> String {
        let window: String = (0..self.window.len())
            .map(|i| if self.window.get(i) { '1' } else { '0' })
            .collect();
        format!(
            "min={}, window={}, stable_from={}",
            self.min, window, self.stable_from
        )
    }
}

/// The blow-up `B = m − m` as a numerical semigroup.
pub fn blowup_semigroup(semigroup: &Arc<NumericalSemigroup>) -> NumericalSemigroup {
    RelativeIdeal::maximal(semigroup)
        .end_ring()
        .as_semigroup()
        .expect("m − m is an overring of S")
}

impl fmt::Display for RelativeIdeal {
    /// `e₁ e₂ … | ≥c`: explicit members, then the tail threshold.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.small_elements() {
            write!(f, "{e} ")?;
        }
        write!(f, "| ≥{}", self.stable_from)
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelativeIdeal({self} over ⟨{}⟩)", self.semigroup)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
    }

    fn ideal(s: &Arc<NumericalSemigroup>, gens: &[i64]) -> RelativeIdeal {
        RelativeIdeal::from_generators(s, gens).unwrap()
    }

    #[test]
    fn generated_ideals() {
        let s = sg(&[3, 7, 8]);
        let e = ideal(&s, &[6, 10, 11]);
        assert_eq!(e.small_elements(), vec![6]);
        assert_eq!(e.stable_from(), 9);
        assert_eq!(ideal(&s, &[0]), RelativeIdeal::unit(&s));

        let s = sg(&[7, 10, 13]);
        let e = ideal(&s, &[7, 13]);
        assert_eq!(e.min(), 7);
        for z in -5..80 {
            assert_eq!(
                e.contains(z),
                s.is_member(z - 7) || s.is_member(z - 13),
                "{z}"
            );
        }
    }

    #[test]
    fn distinguished_ideals() {
        let s = sg(&[5, 7, 9]);
        let k = RelativeIdeal::canonical(&s);
        assert_eq!(k.small_elements(), vec![0, 2, 5, 7, 9, 10, 11, 12]);
        assert_eq!(k.stable_from(), 14);
        let k = RelativeIdeal::canonical(&sg(&[4, 5, 7]));
        assert_eq!(k.small_elements(), vec![0, 3, 4, 5]);
        assert_eq!(k.stable_from(), 7);

        let n = sg(&[1]);
        assert_eq!(
            RelativeIdeal::canonical(&n),
            RelativeIdeal::normalization(&n)
        );
        assert_eq!(
            RelativeIdeal::conductor(&n),
            RelativeIdeal::normalization(&n)
        );
        assert_eq!(RelativeIdeal::maximal(&n), RelativeIdeal::tail(&n, 1));
    }

    #[test]
    fn sums() {
        let s = sg(&[3, 7, 8]);
        let m = RelativeIdeal::maximal(&s);
        let m2 = m.sum(&m).unwrap();
        assert_eq!(m2.to_string(), "6 | ≥9");
        assert_eq!(m2, m.translate(3));
        let e = ideal(&s, &[6, 10, 11]);
        assert_eq!(e.sum(&RelativeIdeal::unit(&s)).unwrap(), e);

        let s = sg(&[4, 5, 7]);
        let m = RelativeIdeal::maximal(&s);
        let km = RelativeIdeal::canonical(&s).sum(&m).unwrap();
        assert!(km.is_subset_of(&m));
    }

    #[test]
    fn colons() {
        let s = sg(&[7, 10, 13]);
        let e = ideal(&s, &[7, 13]);
        assert_eq!(e.end_ring(), ideal(&s, &[0, 29, 32]));

        for gens in [&[5u64, 7, 9][..], &[4, 5, 7], &[1], &[2, 3]] {
            let s = sg(gens);
            let (k, c, n, u) = (
                RelativeIdeal::canonical(&s),
                RelativeIdeal::conductor(&s),
                RelativeIdeal::normalization(&s),
                RelativeIdeal::unit(&s),
            );
            assert_eq!(k.colon(&k).unwrap(), u);
            assert_eq!(u.colon(&c).unwrap(), n);
            assert_eq!(k.colon(&c).unwrap(), n);
            assert_eq!(k.colon(&n).unwrap(), c);
        }
    }

    #[test]
    fn mismatched_semigroups() {
        let a = RelativeIdeal::unit(&sg(&[2, 3]));
        let b = RelativeIdeal::unit(&sg(&[3, 4, 5]));
        assert_eq!(a.sum(&b), Err(Error::MismatchedSemigroups));
        assert_eq!(a.colon(&b), Err(Error::MismatchedSemigroups));
        // Structurally equal ambient semigroups behind different pointers are fine.
        assert!(a.sum(&RelativeIdeal::unit(&sg(&[3, 2]))).is_ok());
    }

    #[test]
    fn translation() {
        let s = sg(&[3, 7, 8]);
        let e = ideal(&s, &[6, 10, 11]);
        assert_eq!(e.translate(0), e);
        assert_eq!(e.translate(-3), RelativeIdeal::maximal(&s));
        let s = sg(&[3, 5, 7]);
        let t = RelativeIdeal::maximal(&s).translate(2);
        assert_eq!(t.small_elements(), vec![5]);
        assert_eq!(t.stable_from(), 7);
    }

    #[test]
    fn closures() {
        let s = sg(&[3, 7, 8]);
        let e = ideal(&s, &[6, 8, 10]);
        let r = e.reflexive_closure();
        assert_eq!(r, RelativeIdeal::tail(&s, 6));
        assert!(r.contains(7) && !e.contains(7));

        let s = sg(&[7, 10, 13]);
        let e = ideal(&s, &[7, 13]);
        assert!(e.reflexive_closure().contains(10) && !e.contains(10));
        assert_eq!(e.integral_closure().unwrap(), RelativeIdeal::maximal(&s));

        let s = sg(&[5, 7, 9]);
        let m = RelativeIdeal::maximal(&s);
        assert_eq!(m.dual().dual(), m);
        let e = ideal(&s, &[7, 9, 10]);
        assert_eq!(e.integral_closure().unwrap(), e);

        let s = sg(&[3, 5, 7]);
        let e = ideal(&s, &[5, 7, 9]);
        assert_eq!(e.integral_closure().unwrap(), RelativeIdeal::conductor(&s));
    }

    #[test]
    fn integral_closure_requires_integral_ideal() {
        let s = sg(&[3, 7, 8]);
        let e = RelativeIdeal::maximal(&s).translate(-1);
        assert!(matches!(e.integral_closure(), Err(Error::NotIntegral(_))));
        assert!(matches!(
            e.is_integrally_closed(),
            Err(Error::NotIntegral(_))
        ));
    }

    #[test]
    fn predicates() {
        let s = sg(&[3, 7, 8]);
        let e = ideal(&s, &[6, 10, 11]);
        assert!(e.is_reflexive());
        assert!(!e.is_integrally_closed().unwrap());
        assert!(RelativeIdeal::maximal(&s).is_stable());
        let p = RelativeIdeal::unit(&s).translate(5);
        assert!(p.is_principal() && p.is_reflexive());
        assert!(!e.is_principal());
    }

    #[test]
    fn blowup_ring() {
        let s = sg(&[4, 5, 7]);
        let b = RelativeIdeal::maximal(&s).end_ring();
        assert_eq!(b, RelativeIdeal::unit(&sg(&[3, 4, 5])));
        assert_eq!(blowup_semigroup(&s).minimal_generators(), &[3, 4, 5]);
        assert_eq!(
            blowup_semigroup(&sg(&[3, 7, 8])).minimal_generators(),
            &[3, 4, 5]
        );
        assert_eq!(blowup_semigroup(&sg(&[1])).minimal_generators(), &[1]);
        assert_eq!(RelativeIdeal::unit(&s).end_ring(), RelativeIdeal::unit(&s));
        assert!(RelativeIdeal::maximal(&s).as_semigroup().is_err());
    }

    #[test]
    fn normalization_certificates() {
        let s = sg(&[3, 7, 8]);
        let u = RelativeIdeal::unit(&s);
        let cert = u.normalize_to_canonical_window();
        assert_eq!((cert.z, cert.w), (0, 0));
        assert_eq!(cert.result, u);

        let e = ideal(&s, &[6, 10, 11]);
        let m = RelativeIdeal::maximal(&s);
        let cert = e.normalize_to_canonical_window();
        assert_eq!(cert.z, -3);
        assert_eq!(cert.result, m);
        assert_eq!(m.translate(100).normalize_to_canonical_window().result, m);

        let cert = e.normalize_reflexive().unwrap();
        assert_eq!((cert.z, cert.w), (-3, 0));
        assert_eq!(cert.result, m);
        assert!(RelativeIdeal::conductor(&s).is_subset_of(&cert.result));

        let g = sg(&[2, 3]);
        let k = RelativeIdeal::canonical(&g);
        let cert = k.normalize_reflexive().unwrap();
        assert_eq!(
            (cert.z, cert.w, cert.result),
            (0, 0, RelativeIdeal::unit(&g))
        );
        let p = RelativeIdeal::unit(&s)
            .translate(9)
            .normalize_reflexive()
            .unwrap();
        assert_eq!(p.result, u);

        let bad = ideal(&s, &[6, 8, 10]);
        assert!(matches!(
            bad.normalize_reflexive(),
            Err(Error::NotReflexive(_))
        ));
    }

    #[test]
    fn json_and_text() {
        let s = sg(&[3, 7, 8]);
        let e = ideal(&s, &[6, 10, 11]);
        let json = e.to_json();
        assert_eq!(
            serde_json::to_string(&json).unwrap(),
            r#"{"min":6,"stableFrom":9,"members":[6]}"#
        );
        assert_eq!(RelativeIdeal::from_json(&s, &json).unwrap(), e);
        assert_eq!(e.describe(), "min=6, window=100, stable_from=9");
        assert!(RelativeIdeal::from_members(&s, &[6, 7], 20).is_err());
    }
}
