//! Naive reference implementations used to cross-check the library.
//!
//! Everything here works on explicit member sets and direct quantifier
//! scans, without the library's bit windows or shifted-subset tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use semiref::{NumericalSemigroup, RelativeIdeal};

/// Membership table for a semigroup: closure of the generators by a
/// quadratic sweep, up to `bound`.
pub fn members_up_to(gens: &[u64], bound: usize) -> Vec<bool> {
    let mut m = vec![false; bound];
    if let Some(first) = m.first_mut() {
        *first = true;
    }
    for z in 1..bound {
        for a in 1..=z {
            if m[z - a] && gens.contains(&(a as u64)) {
                m[z] = true;
                break;
            }
        }
    }
    m
}

/// A cofinite set of integers: `members` is exact on `[lo, hi)`, everything
/// below `lo` is absent and everything from `hi` on is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaiveSet {
    pub lo: i64,
    pub hi: i64,
    pub members: BTreeSet<i64>,
}

impl NaiveSet {
    pub fn contains(&self, z: i64) -> bool {
        z >= self.hi || (z >= self.lo && self.members.contains(&z))
    }

    pub fn from_ideal(e: &RelativeIdeal) -> Self {
        let lo = e.min();
        let hi = e.stable_from();
        NaiveSet {
            lo,
            hi,
            members: (lo..hi).filter(|&z| e.contains(z)).collect(),
        }
    }

    pub fn of_semigroup(s: &NumericalSemigroup) -> Self {
        let hi = s.frobenius() + 1;
        let table = members_up_to(s.minimal_generators(), hi.max(0) as usize);
        NaiveSet {
            lo: 0,
            hi,
            members: (0..hi).filter(|&z| table[z as usize]).collect(),
        }
    }

    fn with_range(lo: i64, hi: i64, member: impl Fn(i64) -> bool) -> Self {
        NaiveSet {
            lo,
            hi,
            members: (lo..hi).filter(|&z| member(z)).collect(),
        }
    }

    /// True when the two sets agree on every integer.
    pub fn same_as(&self, e: &RelativeIdeal) -> bool {
        let lo = self.lo.min(e.min()) - 1;
        let hi = self.hi.max(e.stable_from()) + 1;
        (lo..hi).all(|z| self.contains(z) == e.contains(z))
    }

    pub fn subset_of(&self, other: &NaiveSet) -> bool {
        let lo = self.lo.min(other.lo);
        let hi = self.hi.max(other.hi);
        (lo..hi).all(|z| !self.contains(z) || other.contains(z))
    }
}

/// `{a + b : a ∈ e, b ∈ f}` by enumerating pairs.
pub fn sum(e: &NaiveSet, f: &NaiveSet) -> NaiveSet {
    // e.hi + f.lo and everything above it is a sum.
    let hi = e.hi + f.lo;
    let mut out = BTreeSet::new();
    for a in e.lo..hi - f.lo {
        if !e.contains(a) {
            continue;
        }
        for b in f.lo..hi - e.lo {
            if f.contains(b) && a + b < hi {
                out.insert(a + b);
            }
        }
    }
    NaiveSet {
        lo: e.lo + f.lo,
        hi,
        members: out,
    }
}

/// `{z : z + f ⊆ e}` by checking every element of `f` up to a safe bound.
pub fn colon(e: &NaiveSet, f: &NaiveSet) -> NaiveSet {
    let lo = e.lo - f.lo;
    let hi = e.hi - f.lo;
    // Past `reach`, every b is in f and z + b lands in e's tail.
    let reach = (e.hi - lo).max(f.hi);
    NaiveSet::with_range(lo, hi, |z| {
        (f.lo..=reach).all(|b| !f.contains(b) || e.contains(z + b))
    })
}

pub fn reflexive_closure(s: &NaiveSet, e: &NaiveSet) -> NaiveSet {
    colon(s, &colon(s, e))
}

/// `(min e + ℕ) ∩ S`.
pub fn integral_closure(s: &NaiveSet, e: &NaiveSet) -> NaiveSet {
    let v = (e.lo..).find(|&z| e.contains(z)).unwrap();
    NaiveSet::with_range(v, s.hi.max(v), |z| s.contains(z))
}

/// `{z : F − z ∉ S}`.
pub fn canonical(s: &NaiveSet, frobenius: i64) -> NaiveSet {
    NaiveSet::with_range(0, frobenius + 1, |z| !s.contains(frobenius - z))
}

/// Every numerical semigroup of genus at most `g`, as sorted gap lists, by
/// testing each subset of `[1, 2g]` for closure of its complement.
pub fn gap_sets_brute_force(g: usize) -> BTreeSet<Vec<u64>> {
    let top = 2 * g as u64;
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << top) {
        if mask.count_ones() as usize > g {
            continue;
        }
        let gaps: Vec<u64> = (1..=top).filter(|&z| mask >> (z - 1) & 1 == 1).collect();
        let is_gap = |z: u64| gaps.contains(&z);
        let closed = (1..=top)
            .all(|a| (a..=top).all(|b| is_gap(a) || is_gap(b) || a + b > top || !is_gap(a + b)));
        if closed {
            out.insert(gaps);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleOp {
    Sum,
    Colon,
    ReflexiveClosure,
    IntegralClosure,
}

/// Compares one library operation against the naive version on every
/// semigroup of genus `<= g`:
///
/// * binary operations on every pair drawn from the census `[C, S]` together
///   with `K`, `C`, `ℕ`, `m`, `m − m` and a shifted copy of each;
/// * closures on every ideal of the window `[C, K]` and on shifted copies
///   (integral translates for the integral closure).
///
/// Returns the number of instances compared.
pub fn oracle_sweep(g: usize, op: OracleOp) -> Result<u64, String> {
    use semiref::enumerate::fractional_representatives;
    use semiref::{ideals_between, semigroups_up_to_genus};

    let universe = semigroups_up_to_genus(g).map_err(|e| e.to_string())?;
    let mut count = 0;
    for s in &universe.semigroups {
        let naive_s = NaiveSet::of_semigroup(s);
        let fail = |what: &str, ideals: &[&RelativeIdeal]| {
            let shown: Vec<String> = ideals.iter().map(|e| e.to_string()).collect();
            Err(format!(
                "{op:?} mismatch on ⟨{s}⟩ for {}: {what}",
                shown.join(" ; ")
            ))
        };
        match op {
            OracleOp::Sum | OracleOp::Colon => {
                let mut pool: Vec<RelativeIdeal> = ideals_between(s).ideals().cloned().collect();
                let m = RelativeIdeal::maximal(s);
                pool.extend([
                    RelativeIdeal::canonical(s),
                    RelativeIdeal::normalization(s),
                    m.end_ring(),
                ]);
                let shifted: Vec<RelativeIdeal> = pool
                    .iter()
                    .enumerate()
                    .map(|(i, e)| e.translate(i as i64 % 7 - 3))
                    .collect();
                pool.extend(shifted);
                let naive: Vec<NaiveSet> = pool.iter().map(NaiveSet::from_ideal).collect();
                for (a, na) in pool.iter().zip(&naive) {
                    for (b, nb) in pool.iter().zip(&naive) {
                        let (got, want) = if op == OracleOp::Sum {
                            (a.sum(b).unwrap(), sum(na, nb))
                        } else {
                            (a.colon(b).unwrap(), colon(na, nb))
                        };
                        count += 1;
                        if !want.same_as(&got) {
                            return fail(&format!("library {got}, naive {want:?}"), &[a, b]);
                        }
                    }
                }
            }
            OracleOp::ReflexiveClosure => {
                for (i, e) in fractional_representatives(s).iter().enumerate() {
                    for t in [0, i as i64 % 11 - 5] {
                        let e = e.translate(t);
                        let want = reflexive_closure(&naive_s, &NaiveSet::from_ideal(&e));
                        let got = e.reflexive_closure();
                        count += 1;
                        if !want.same_as(&got) {
                            return fail(&format!("library {got}, naive {want:?}"), &[&e]);
                        }
                    }
                }
            }
            OracleOp::IntegralClosure => {
                let unit = RelativeIdeal::unit(s);
                for e in fractional_representatives(s) {
                    // Smallest shift making e integral, then one more element of S - e.
                    let admissible = NaiveSet::from_ideal(&unit.colon(&e).unwrap());
                    let shifts: Vec<i64> = (admissible.lo..)
                        .filter(|&t| admissible.contains(t))
                        .take(2)
                        .collect();
                    for t in shifts {
                        let e = e.translate(t);
                        let want = integral_closure(&naive_s, &NaiveSet::from_ideal(&e));
                        let got = e.integral_closure().map_err(|err| err.to_string())?;
                        count += 1;
                        if !want.same_as(&got) {
                            return fail(&format!("library {got}, naive {want:?}"), &[&e]);
                        }
                    }
                    let outside = e.translate(admissible.lo - 1);
                    if outside.integral_closure().is_ok() {
                        return fail("closure accepted a non-integral ideal", &[&outside]);
                    }
                }
            }
        }
    }
    Ok(count)
}

/// Tree enumeration versus gap-subset brute force, as gap sets and as
/// per-genus counts.
pub fn enumeration_agrees(g: usize) -> Result<usize, String> {
    let universe = semiref::semigroups_up_to_genus(g).map_err(|e| e.to_string())?;
    let tree: BTreeSet<Vec<u64>> = universe.semigroups.iter().map(|s| s.gaps()).collect();
    let brute = gap_sets_brute_force(g);
    if tree.len() != universe.len() {
        return Err("tree enumeration produced duplicates".into());
    }
    if tree != brute {
        let missing: Vec<_> = brute.difference(&tree).take(3).collect();
        let extra: Vec<_> = tree.difference(&brute).take(3).collect();
        return Err(format!("missing {missing:?}, extra {extra:?}"));
    }
    for (genus, &n) in universe.per_genus_counts.iter().enumerate() {
        let brute_n = brute.iter().filter(|gaps| gaps.len() == genus).count();
        if brute_n != n {
            return Err(format!("genus {genus}: tree {n}, brute force {brute_n}"));
        }
    }
    Ok(brute.len())
}
