//! Verification universes: every numerical semigroup up to a genus bound and,
//! per semigroup, every relative ideal inside a standard window.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{IdealJson, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_GENUS_LIMIT: usize = 20;

#[derive(Clone, Debug)]
pub struct SemigroupUniverse {
    pub genus_bound: usize,
    /// Sorted lexicographically by gap set.
    pub semigroups: Vec<Arc<NumericalSemigroup>>,
    /// `per_genus_counts[g]` semigroups of genus exactly `g`.
    pub per_genus_counts: Vec<usize>,
}

impl SemigroupUniverse {
    /// A universe made of the given semigroups, in the given order.
    pub fn from_semigroups(semigroups: Vec<NumericalSemigroup>) -> Self {
        let genus_bound = semigroups.iter().map(|s| s.genus()).max().unwrap_or(0);
        let mut per_genus_counts = vec![0; genus_bound + 1];
        for s in &semigroups {
            per_genus_counts[s.genus()] += 1;
        }
        SemigroupUniverse {
            genus_bound,
            semigroups: semigroups.into_iter().map(Arc::new).collect(),
            per_genus_counts,
        }
    }

    pub fn len(&self) -> usize {
        self.semigroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.semigroups.is_empty()
    }
}

pub fn semigroups_up_to_genus(g: usize) -> Result<SemigroupUniverse> {
    semigroups_up_to_genus_with_limit(g, DEFAULT_GENUS_LIMIT)
}

/// Walks the genus tree: the root is `ℕ`, and the children of `S` are the
/// `S ∖ {a}` for minimal generators `a > F(S)`.
pub fn semigroups_up_to_genus_with_limit(g: usize, limit: usize) -> Result<SemigroupUniverse> {
    if g > limit {
        return Err(Error::GenusBoundExceeded {
            requested: g,
            limit,
        });
    }
    let mut level = vec![NumericalSemigroup::naturals()];
    let mut per_genus_counts = vec![1];
    let mut all = level.clone();
    for _ in 0..g {
        level = level
            .par_iter()
            .flat_map_iter(|s| {
                s.minimal_generators()
                    .iter()
                    .filter(|&&a| a as i64 > s.frobenius())
                    .filter_map(|&a| s.remove_generator(a))
                    .collect::<Vec<_>>()
            })
            .collect();
        per_genus_counts.push(level.len());
        all.extend(level.iter().cloned());
    }
    let mut keyed: Vec<(Vec<u64>, NumericalSemigroup)> =
        all.into_iter().map(|s| (s.gaps(), s)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(SemigroupUniverse {
        genus_bound: g,
        semigroups: keyed.into_iter().map(|(_, s)| Arc::new(s)).collect(),
        per_genus_counts,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdealFlags {
    pub reflexive: bool,
    pub integrally_closed: bool,
    pub stable: bool,
    pub principal: bool,
    /// `B + E ⊆ E` for the blow-up `B = m − m`.
    pub b_ideal: bool,
}

#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub ideal: RelativeIdeal,
    pub flags: IdealFlags,
}

/// Every relative ideal `E` with `C ⊆ E ⊆ S`, with flags.
#[derive(Clone, Debug)]
pub struct IdealCensus {
    pub semigroup: Arc<NumericalSemigroup>,
    pub entries: Vec<CensusEntry>,
}

impl IdealCensus {
    pub fn ideals(&self) -> impl Iterator<Item = &RelativeIdeal> {
        self.entries.iter().map(|e| &e.ideal)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntryJson {
    pub ideal: IdealJson,
    pub flags: IdealFlags,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusJson {
    pub generators: Vec<u64>,
    pub ideals: Vec<CensusEntryJson>,
}

/// Per-semigroup line of a streamed census: invariants and flag counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusSummary {
    pub generators: Vec<u64>,
    pub frobenius: i64,
    pub genus: usize,
    pub multiplicity: u64,
    pub embedding_dimension: usize,
    pub ideals: usize,
    pub reflexive: usize,
    pub integrally_closed: usize,
    pub stable: usize,
    pub principal: usize,
    pub b_ideal: usize,
}

impl IdealCensus {
    pub fn to_json(&self) -> CensusJson {
        CensusJson {
            generators: self.semigroup.minimal_generators().to_vec(),
            ideals: self
                .entries
                .iter()
                .map(|e| CensusEntryJson {
                    ideal: e.ideal.to_json(),
                    flags: e.flags,
                })
                .collect(),
        }
    }

    /// Rebuilds a census, recomputing every flag and rejecting mismatches.
    pub fn from_json(json: &CensusJson) -> Result<Self> {
        let s = Arc::new(NumericalSemigroup::from_generators(&json.generators)?);
        let blowup = RelativeIdeal::maximal(&s).end_ring();
        let entries = json
            .ideals
            .iter()
            .map(|e| {
                let ideal = RelativeIdeal::from_json(&s, &e.ideal)?;
                let flags = flags_of(&ideal, &blowup);
                if flags != e.flags {
                    return Err(Error::NotAnIdeal(format!(
                        "flags of {ideal} are {flags:?}, not {:?}",
                        e.flags
                    )));
                }
                Ok(CensusEntry { ideal, flags })
            })
            .collect::<Result<_>>()?;
        Ok(IdealCensus {
            semigroup: s,
            entries,
        })
    }

    pub fn summary(&self) -> CensusSummary {
        let s = &self.semigroup;
        let count =
            |f: fn(&IdealFlags) -> bool| self.entries.iter().filter(|e| f(&e.flags)).count();
        CensusSummary {
            generators: s.minimal_generators().to_vec(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            multiplicity: s.multiplicity(),
            embedding_dimension: s.embedding_dimension(),
            ideals: self.len(),
            reflexive: count(|f| f.reflexive),
            integrally_closed: count(|f| f.integrally_closed),
            stable: count(|f| f.stable),
            principal: count(|f| f.principal),
            b_ideal: count(|f| f.b_ideal),
        }
    }
}

pub fn flags_of(ideal: &RelativeIdeal, blowup: &RelativeIdeal) -> IdealFlags {
    IdealFlags {
        reflexive: ideal.is_reflexive(),
        integrally_closed: ideal.is_integrally_closed().unwrap_or(false),
        stable: ideal.is_stable(),
        principal: ideal.is_principal(),
        b_ideal: blowup
            .sum(ideal)
            .map(|b| b.is_subset_of(ideal))
            .unwrap_or(false),
    }
}

pub fn ideals_between(s: &Arc<NumericalSemigroup>) -> IdealCensus {
    let blowup = RelativeIdeal::maximal(s).end_ring();
    let entries = ideals_in_window(s, &RelativeIdeal::unit(s))
        .into_iter()
        .map(|ideal| {
            let flags = flags_of(&ideal, &blowup);
            CensusEntry { ideal, flags }
        })
        .collect();
    IdealCensus {
        semigroup: s.clone(),
        entries,
    }
}

/// Every relative ideal `E` with `C ⊆ E ⊆ K`. Up to translation these are
/// all relative ideals of `S`.
pub fn fractional_representatives(s: &Arc<NumericalSemigroup>) -> Vec<RelativeIdeal> {
    ideals_in_window(s, &RelativeIdeal::canonical(s))
}

/// All `E` with `C ⊆ E ⊆ upper`, where `C ⊆ upper ⊆ ℕ`.
///
/// Candidates in `upper ∩ [0, F]` are decided from the top down; a candidate
/// may join only when every `s + g` (g a minimal generator) below the
/// conductor has already joined. Output order is deterministic: C first.
pub fn ideals_in_window(s: &Arc<NumericalSemigroup>, upper: &RelativeIdeal) -> Vec<RelativeIdeal> {
    let f = s.frobenius();
    let candidates: Vec<i64> = upper.elements_below(f + 1).into_iter().rev().collect();
    let gens: Vec<i64> = s.minimal_generators().iter().map(|&g| g as i64).collect();
    let width = (f + 1).max(0) as usize;
    let mut chosen = vec![false; width];
    let mut out = Vec::new();
    collect_closed(s, &candidates, &gens, f, 0, &mut chosen, &mut out);
    out
}

fn collect_closed(
    s: &Arc<NumericalSemigroup>,
    candidates: &[i64],
    gens: &[i64],
    f: i64,
    depth: usize,
    chosen: &mut Vec<bool>,
    out: &mut Vec<RelativeIdeal>,
) {
    let Some(&c) = candidates.get(depth) else {
        let members: Vec<i64> = (0..=f).filter(|&z| chosen[z as usize]).collect();
        out.push(
            RelativeIdeal::from_members(s, &members, f + 1)
                .expect("closed candidate sets are ideals"),
        );
        return;
    };
    collect_closed(s, candidates, gens, f, depth + 1, chosen, out);
    if gens.iter().all(|&g| c + g > f || chosen[(c + g) as usize]) {
        chosen[c as usize] = true;
        collect_closed(s, candidates, gens, f, depth + 1, chosen, out);
        chosen[c as usize] = false;
    }
}
