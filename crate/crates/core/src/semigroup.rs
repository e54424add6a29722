//! Numerical semigroups: cofinite additive submonoids of ℕ.
//!
//! A [`NumericalSemigroup`] is the value semigroup of the monomial ring
//! `K[[t^S]]`. Membership is stored only on `[0, F+1]`; every query past the
//! Frobenius number answers `true` and every negative query answers `false`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NumericalSemigroup {
    minimal_generators: Vec<u64>,
    frobenius: i64,
    multiplicity: u64,
    genus: usize,
    #[serde(skip)]
    membership: Vec<bool>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`. Redundant generators are dropped.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::NonPositiveGenerator(0));
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NotCofinite(gens.to_vec(), g));
        }

        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let smallest = sorted[0] as usize;

        // Forward DP; a run of `smallest` consecutive members means every
        // larger integer is a member too.
        let mut member = vec![true];
        let mut run = 1usize;
        while run < smallest {
            let z = member.len();
            let is = sorted
                .iter()
                .take_while(|&&g| g as usize <= z)
                .any(|&g| member[z - g as usize]);
            member.push(is);
            run = if is { run + 1 } else { 0 };
        }
        let frobenius = member.len() as i64 - smallest as i64 - 1;
        member.truncate((frobenius + 2) as usize);
        debug_assert!(frobenius < 0 || !member[frobenius as usize]);
        Ok(Self::from_table(member))
    }

    /// Builds the semigroup with the given gap set, checking closure.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        let frobenius = gaps.iter().copied().max().map_or(-1, |g| g as i64);
        let mut table = vec![true; (frobenius + 2) as usize];
        for &g in gaps {
            if g == 0 {
                return Err(Error::NotASemigroup("0 cannot be a gap".into()));
            }
            table[g as usize] = false;
        }
        for a in 1..table.len() {
            for b in a..table.len() - a {
                if table[a] && table[b] && !table[a + b] {
                    return Err(Error::NotASemigroup(format!(
                        "{a} + {b} = {} is a gap",
                        a + b
                    )));
                }
            }
        }
        Ok(Self::from_table(table))
    }

    /// `table[z]` is membership of `z` for `z` in `[0, len)`, with everything
    /// from `len` on a member. The table must describe a closed set.
    pub(crate) fn from_table(mut table: Vec<bool>) -> Self {
        let frobenius = table.iter().rposition(|&b| !b).map_or(-1, |f| f as i64);
        table.truncate((frobenius + 2) as usize);
        if table.is_empty() {
            table.push(true);
        }
        let genus = table.iter().filter(|&&b| !b).count();
        let multiplicity = (1..table.len()).find(|&z| table[z]).unwrap_or(table.len()) as u64;

        let is_member = |z: u64| (z as usize) >= table.len() || table[z as usize];
        // Minimal generators lie below max(F + e, e) + 1.
        let top = (frobenius + multiplicity as i64).max(multiplicity as i64) as u64;
        let minimal_generators = (1..=top)
            .filter(|&s| is_member(s) && !(1..s).any(|a| is_member(a) && is_member(s - a)))
            .collect();

        NumericalSemigroup {
            minimal_generators,
            frobenius,
            multiplicity,
            genus,
            membership: table,
        }
    }

    /// The semigroup `ℕ`.
    pub fn naturals() -> Self {
        Self::from_table(vec![true])
    }

    #[inline]
    pub fn is_member(&self, z: i64) -> bool {
        z >= 0 && (z > self.frobenius || self.membership[z as usize])
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.minimal_generators
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// The gaps `ℕ ∖ S` in ascending order.
    pub fn gaps(&self) -> Vec<u64> {
        (1..=self.frobenius.max(0))
            .filter(|&z| !self.is_member(z))
            .map(|z| z as u64)
            .collect()
    }

    /// Members of `S` in `[0, F + 1]` (the small elements plus the conductor).
    pub fn small_elements(&self) -> Vec<i64> {
        (0..=self.frobenius + 1)
            .filter(|&z| self.is_member(z))
            .collect()
    }

    pub fn is_naturals(&self) -> bool {
        self.frobenius < 0
    }

    /// `S ∖ {a}` for a minimal generator `a > F(S)`: a child in the genus tree.
    pub fn remove_generator(&self, a: u64) -> Option<Self> {
        if (a as i64) <= self.frobenius || !self.minimal_generators.contains(&a) {
            return None;
        }
        let a = a as usize;
        let mut table: Vec<bool> = (0..a + 2).map(|z| self.is_member(z as i64)).collect();
        table[a] = false;
        Some(Self::from_table(table))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.minimal_generators.iter().map(u64::to_string).collect();
        write!(f, "{}", gens.join(","))
    }
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    /// Accepts `⟨a,b,c⟩`, `<a,b,c>` or a bare `a,b,c`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches(['⟨', '<'])
            .trim_end_matches(['⟩', '>']);
        let gens = parse_list(body)?;
        let gens: Vec<u64> = gens
            .into_iter()
            .map(|g| {
                if g > 0 {
                    Ok(g as u64)
                } else {
                    Err(Error::NonPositiveGenerator(g))
                }
            })
            .collect::<Result<_>>()?;
        Self::from_generators(&gens)
    }
}

/// Parses a comma- or whitespace-separated list of integers.
pub fn parse_list(s: &str) -> Result<Vec<i64>> {
    let items: Vec<&str> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if items.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    items
        .into_iter()
        .map(|t| {
            t.parse::<i64>().map_err(|e| Error::Parse {
                input: s.to_string(),
                reason: format!("{t:?}: {e}"),
            })
        })
        .collect()
}
