//! Exhaustive checks of the reflexivity characterizations.
//!
//! Every check runs over a [`SemigroupUniverse`]. For each semigroup `S` the
//! harness builds a [`SemigroupContext`] holding:
//!
//! * the census `[C, S]` of relative ideals between the conductor and `S`;
//! * the fractional window `[C, K]`, which up to translation contains every
//!   relative ideal of `S`;
//! * seeded random translates of every window ideal, so statements about
//!   fractional ideals are exercised away from the normalized position.
//!
//! Statements are theorems, so any counterexample is an implementation bug.
//! Checks run in parallel across semigroups and are merged in universe
//! order; reports are deterministic for a given seed.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{self, integrally_closed_ideals};
use crate::enumerate::{
    fractional_representatives, ideals_between, IdealCensus, SemigroupUniverse,
};
use crate::error::Error;
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_SEED: u64 = 0x5e31_2ef1;
pub const DEFAULT_TRANSLATES: usize = 3;
const SHIFT_RANGE: i64 = 64;
/// Extra integral ideals per window ideal for the integral-ideal checks.
const INTEGRAL_SHIFTS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
    T12,
    T13,
    T14,
    T15,
    T16,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
        TheoremId::T11,
        TheoremId::T12,
        TheoremId::T13,
        TheoremId::T14,
        TheoremId::T15,
        TheoremId::T16,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1 => "bass",
            TheoremId::T2 => "window-normalization",
            TheoremId::T3 => "colon-equalities",
            TheoremId::T4 => "sandwich-absorption",
            TheoremId::T5 => "almost-gorenstein-endomorphism",
            TheoremId::T6 => "h-reflexivity",
            TheoremId::T7 => "almost-gorenstein-blowup",
            TheoremId::T8 => "minimal-multiplicity",
            TheoremId::T9 => "arf",
            TheoremId::T10 => "misc-remarks",
            TheoremId::T11 => "canonical-duality",
            TheoremId::T12 => "closure-laws",
            TheoremId::T13 => "translation-invariance",
            TheoremId::T14 => "classifier-consistency",
            TheoremId::T15 => "translation-rigidity",
            TheoremId::T16 => "canonical-multiplier-sufficiency",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::T1 => "S Gorenstein iff every E in [C,K] is reflexive (every ideal, up to translation)",
            TheoremId::T2 => "z = min(K-E) gives C <= z+E <= K; reflexive E also gives w = 0 and C <= z+E <= S",
            TheoremId::T3 => "K-K = S, K-N = C, K-C = N, S-C = N",
            TheoremId::T4 => "S-(S-E) <= cl(E); C <= E <= J (J closed) gives S-E = J-E and, for non-principal reflexive E, J-J <= E-E and min(E)+(cl E - cl E) <= S-(S-E)",
            TheoremId::T5 => "S almost Gorenstein iff (non-principal E reflexive iff K <= E-E)",
            TheoremId::T6 => "C <= E <= J, J integrally closed: S-(S-E) = J-(J-E)",
            TheoremId::T7 => "S almost Gorenstein iff (non-principal E reflexive iff B+E <= E)",
            TheoremId::T8 => "m stable iff m is B-reflexive iff (non-principal E reflexive iff B+E <= E and B-(B-E) = E); m stable iff m+(m-2m) = B",
            TheoremId::T9 => "S Arf iff reflexive E in [C,S] are integrally closed iff every reflexive ideal translates to a closed E in [C,S]",
            TheoremId::T10 => "H-reflexivity is transitive; J-J reflexive for closed J >= C; B <= E-E for non-principal reflexive E",
            TheoremId::T11 => "K-(K-E) = E",
            TheoremId::T12 => "closures are extensive and idempotent; integrally closed implies reflexive",
            TheoremId::T13 => "reflexive, stable and principal are translation invariant",
            TheoremId::T14 => "Arf implies minimal multiplicity; minimal multiplicity iff embedding dimension = multiplicity; Gorenstein implies almost Gorenstein",
            TheoremId::T15 => "C <= E <= a+E <= S forces a = 0",
            TheoremId::T16 => "K <= E-E implies E reflexive",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    /// Accepts `T7`, `t7`, `7` or the check name.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        TheoremId::ALL
            .into_iter()
            .find(|id| {
                id.to_string().eq_ignore_ascii_case(t)
                    || id.to_string()[1..] == *t
                    || id.name() == t
            })
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "unknown theorem id".into(),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HarnessConfig {
    /// Random translates per window ideal.
    pub translates: usize,
    pub seed: u64,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            translates: DEFAULT_TRANSLATES,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct UniverseSummary {
    pub description: String,
    pub genus_bound: usize,
    pub semigroups: usize,
    pub census_ideals: usize,
    pub window_ideals: usize,
    pub translates_per_ideal: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Counterexample {
    pub semigroup: Vec<u64>,
    pub ideals: Vec<String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub theorem_id: String,
    pub name: String,
    pub statement: String,
    pub universe: UniverseSummary,
    pub instances_checked: u64,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

/// Everything the checks need about one semigroup.
pub struct SemigroupContext {
    pub s: Arc<NumericalSemigroup>,
    pub unit: RelativeIdeal,
    pub maximal: RelativeIdeal,
    pub canonical: RelativeIdeal,
    pub conductor: RelativeIdeal,
    pub naturals: RelativeIdeal,
    /// `B = m − m`.
    pub blowup: RelativeIdeal,
    pub census: IdealCensus,
    /// `(v + ℕ) ∩ S` for `v ∈ S ∩ [0, F + 1]`.
    pub closed: Vec<RelativeIdeal>,
    /// `[C, K]`.
    pub window: Vec<RelativeIdeal>,
    /// Translation amounts, one list per window ideal.
    pub shifts: Vec<Vec<i64>>,
    /// Fixed ideals used as `H`, `F` in H-reflexivity statements.
    pub distinguished: Vec<RelativeIdeal>,
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn semigroup_key(s: &NumericalSemigroup) -> u64 {
    s.minimal_generators()
        .iter()
        .fold(0xcbf2_9ce4_8422_2325, |h, &g| splitmix(h ^ g))
}

impl SemigroupContext {
    pub fn new(s: &Arc<NumericalSemigroup>, config: &HarnessConfig) -> Self {
        let unit = RelativeIdeal::unit(s);
        let maximal = RelativeIdeal::maximal(s);
        let blowup = maximal.end_ring();
        let census = ideals_between(s);
        let window = fractional_representatives(s);

        let mut rng = ChaCha8Rng::seed_from_u64(splitmix(config.seed ^ semigroup_key(s)));
        let shifts = window
            .iter()
            .map(|_| {
                (0..config.translates)
                    .map(|_| rng.gen_range(-SHIFT_RANGE..=SHIFT_RANGE))
                    .collect()
            })
            .collect();

        let canonical = RelativeIdeal::canonical(s);
        let conductor = RelativeIdeal::conductor(s);
        let naturals = RelativeIdeal::normalization(s);
        let mut distinguished = vec![
            unit.clone(),
            maximal.clone(),
            canonical.clone(),
            conductor.clone(),
            naturals.clone(),
            blowup.clone(),
        ];
        for _ in 0..2 {
            let pick = rng.gen_range(0..census.len());
            distinguished.push(census.entries[pick].ideal.clone());
        }

        SemigroupContext {
            s: s.clone(),
            closed: integrally_closed_ideals(s),
            unit,
            maximal,
            canonical,
            conductor,
            naturals,
            blowup,
            census,
            window,
            shifts,
            distinguished,
        }
    }

    /// Window ideals followed by their translates, tagged with the window index.
    pub fn fractional_instances(&self) -> impl Iterator<Item = (usize, RelativeIdeal)> + '_ {
        self.window.iter().enumerate().flat_map(move |(i, e)| {
            std::iter::once((i, e.clone()))
                .chain(self.shifts[i].iter().map(move |&t| (i, e.translate(t))))
        })
    }

    /// Integral ideals `t + E` for the smallest few `t ∈ S − E`, over window
    /// ideals `E`. These include the census and ideals not containing `C`.
    pub fn integral_instances(&self) -> impl Iterator<Item = RelativeIdeal> + '_ {
        self.window.iter().flat_map(move |e| {
            let admissible = col(&self.unit, e);
            admissible
                .elements_below(admissible.min() + 64)
                .into_iter()
                .take(INTEGRAL_SHIFTS)
                .map(move |t| e.translate(t))
                .collect::<Vec<_>>()
        })
    }
}

fn col(a: &RelativeIdeal, b: &RelativeIdeal) -> RelativeIdeal {
    a.colon(b).expect("ideals share the ambient semigroup")
}

fn add(a: &RelativeIdeal, b: &RelativeIdeal) -> RelativeIdeal {
    a.sum(b).expect("ideals share the ambient semigroup")
}

fn closure(e: &RelativeIdeal) -> RelativeIdeal {
    e.integral_closure().expect("integral ideal")
}

#[derive(Default)]
struct Tally {
    instances: u64,
}

type Step = Result<(), Counterexample>;

impl Tally {
    fn check(&mut self, ok: bool, cx: impl FnOnce() -> Counterexample) -> Step {
        self.instances += 1;
        if ok {
            Ok(())
        } else {
            Err(cx())
        }
    }
}

fn cx(
    ctx: &SemigroupContext,
    ideals: &[&RelativeIdeal],
    expected: &str,
    actual: impl fmt::Display,
) -> Counterexample {
    Counterexample {
        semigroup: ctx.s.minimal_generators().to_vec(),
        ideals: ideals.iter().map(|e| e.to_string()).collect(),
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

fn check_bass_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    let gorenstein = classify::is_gorenstein(&ctx.s);
    let mut all_reflexive = true;
    for e in &ctx.window {
        let r = e.is_reflexive();
        all_reflexive &= r;
        t.check(!gorenstein || r, || {
            cx(ctx, &[e], "reflexive (S is Gorenstein)", "not reflexive")
        })?;
    }
    t.check(gorenstein == all_reflexive, || {
        cx(
            ctx,
            &[&ctx.canonical],
            "Gorenstein iff every ideal in [C,K] is reflexive",
            format!("gorenstein={gorenstein}, all reflexive={all_reflexive}"),
        )
    })
}

fn check_window_normalization_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    for (_, e) in ctx.fractional_instances() {
        let cert = e.normalize_to_canonical_window();
        let r = &cert.result;
        let ok = cert.w == 0
            && *r == e.translate(cert.z)
            && ctx.conductor.is_subset_of(r)
            && r.is_subset_of(&ctx.canonical)
            && !e.translate(cert.z - 1).is_subset_of(&ctx.canonical);
        t.check(ok, || {
            cx(
                ctx,
                &[&e, r],
                "C <= z+E <= K with z = min(K-E)",
                format!("z = {}", cert.z),
            )
        })?;
        if e.is_reflexive() {
            let cert = e.normalize_reflexive().expect("reflexive input");
            let r = &cert.result;
            let ok = cert.w == 0
                && *r == e.translate(cert.z)
                && ctx.conductor.is_subset_of(r)
                && r.is_subset_of(&ctx.unit);
            t.check(ok, || {
                cx(
                    ctx,
                    &[&e, r],
                    "w = 0 and C <= z+E <= S",
                    format!("z = {}, w = {}", cert.z, cert.w),
                )
            })?;
        }
    }
    Ok(())
}

fn check_colon_equalities_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    let (k, s, c, n) = (&ctx.canonical, &ctx.unit, &ctx.conductor, &ctx.naturals);
    let cases = [
        ("K-K = S", col(k, k), s),
        ("K-N = C", col(k, n), c),
        ("K-C = N", col(k, c), n),
        ("S-C = N", col(s, c), n),
    ];
    for (label, got, want) in &cases {
        t.check(got == *want, || cx(ctx, &[want], label, got))?;
    }
    Ok(())
}

fn check_sandwich_and_absorption_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    for e in ctx.integral_instances() {
        let refl = e.reflexive_closure();
        let cl = closure(&e);
        t.check(refl.is_subset_of(&cl), || {
            cx(
                ctx,
                &[&e],
                "S-(S-E) <= cl(E)",
                format!("S-(S-E) = {refl}, cl(E) = {cl}"),
            )
        })?;
        if ctx.conductor.is_subset_of(&e) && !e.is_principal() {
            let lower = col(&cl, &cl).translate(e.min());
            t.check(lower.is_subset_of(&refl), || {
                cx(
                    ctx,
                    &[&e],
                    "min(E) + (cl E - cl E) <= S-(S-E)",
                    format!("{lower} vs {refl}"),
                )
            })?;
        }
    }
    for e in ctx.census.ideals() {
        let reflexive = e.is_reflexive();
        let principal = e.is_principal();
        let s_colon = col(&ctx.unit, e);
        for j in ctx.closed.iter().filter(|j| e.is_subset_of(j)) {
            let j_colon = col(j, e);
            t.check(s_colon == j_colon, || {
                cx(
                    ctx,
                    &[e, j],
                    "S-E = J-E",
                    format!("S-E = {s_colon}, J-E = {j_colon}"),
                )
            })?;
            if reflexive && !principal {
                let jj = j.end_ring();
                let ee = e.end_ring();
                t.check(jj.is_subset_of(&ee), || {
                    cx(
                        ctx,
                        &[e, j],
                        "J-J <= E-E",
                        format!("J-J = {jj}, E-E = {ee}"),
                    )
                })?;
                let cl = closure(e);
                let lower = col(&cl, &cl).translate(e.min());
                t.check(lower.is_subset_of(e), || {
                    cx(ctx, &[e, j], "min(E) + (cl E - cl E) <= E", lower)
                })?;
            }
        }
    }
    Ok(())
}

/// `ring_property ⟺ ∀ non-principal fractional E: reflexive(E) ⟺ side(E)`.
fn check_characterization(
    ctx: &SemigroupContext,
    t: &mut Tally,
    ring_property: bool,
    label: &str,
    side: impl Fn(&RelativeIdeal) -> bool,
) -> Step {
    let mut disagreement = None;
    for (i, e) in ctx.fractional_instances() {
        if ctx.window[i].is_principal() {
            continue;
        }
        let reflexive = e.is_reflexive();
        let other = side(&e);
        if ring_property {
            t.check(reflexive == other, || {
                cx(
                    ctx,
                    &[&e],
                    label,
                    format!("reflexive={reflexive}, other side={other}"),
                )
            })?;
        } else if reflexive != other && disagreement.is_none() {
            disagreement = Some(e);
        }
    }
    t.check(ring_property || disagreement.is_some(), || {
        cx(
            ctx,
            &[],
            label,
            "ring property fails yet every ideal satisfies the equivalence",
        )
    })
}

fn check_ag_endomorphism_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    let ag = classify::is_almost_gorenstein(&ctx.s);
    check_characterization(
        ctx,
        t,
        ag,
        "almost Gorenstein: reflexive iff K <= E-E",
        |e| ctx.canonical.is_subset_of(&e.end_ring()),
    )
}

fn check_h_reflexivity_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    for e in ctx.census.ideals() {
        let refl = e.reflexive_closure();
        for j in ctx.closed.iter().filter(|j| e.is_subset_of(j)) {
            let h = e.h_closure(j).expect("same ambient semigroup");
            t.check(refl == h, || {
                cx(ctx, &[e, j], "S-(S-E) = J-(J-E)", format!("{refl} vs {h}"))
            })?;
        }
    }
    Ok(())
}

fn is_b_ideal(ctx: &SemigroupContext, e: &RelativeIdeal) -> bool {
    add(&ctx.blowup, e).is_subset_of(e)
}

fn check_ag_blowup_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    let ag = classify::is_almost_gorenstein(&ctx.s);
    check_characterization(
        ctx,
        t,
        ag,
        "almost Gorenstein: reflexive iff B+E <= E",
        |e| is_b_ideal(ctx, e),
    )
}

fn check_minmult_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    let (m, b) = (&ctx.maximal, &ctx.blowup);
    let stable = m.is_stable();
    let b_reflexive = m.is_h_reflexive(b).expect("same ambient semigroup");
    t.check(stable == b_reflexive, || {
        cx(
            ctx,
            &[m, b],
            "m stable iff B-(B-m) = m",
            format!("stable={stable}, B-reflexive={b_reflexive}"),
        )
    })?;
    let x = add(m, &col(m, &add(m, m)));
    t.check(stable == (x == *b), || {
        cx(
            ctx,
            &[m, b, &x],
            "m stable iff m+(m-2m) = B",
            format!("stable={stable}"),
        )
    })?;
    check_characterization(
        ctx,
        t,
        stable,
        "minimal multiplicity: reflexive iff B-ideal and B-reflexive",
        |e| is_b_ideal(ctx, e) && e.is_h_reflexive(b).expect("same ambient semigroup"),
    )
}

fn check_arf_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    let arf = classify::is_arf(&ctx.s);
    let census_closed = ctx
        .census
        .entries
        .iter()
        .filter(|c| c.flags.reflexive)
        .all(|c| c.flags.integrally_closed);
    t.check(arf == census_closed, || {
        cx(
            ctx,
            &[],
            "Arf iff every reflexive census ideal is integrally closed",
            format!("arf={arf}, census={census_closed}"),
        )
    })?;
    let mut fractional_closed = true;
    for (_, e) in ctx.fractional_instances() {
        if !e.is_reflexive() {
            continue;
        }
        let r = e.normalize_reflexive().expect("reflexive input").result;
        let in_window = ctx.conductor.is_subset_of(&r) && r.is_subset_of(&ctx.unit);
        t.check(in_window, || {
            cx(ctx, &[&e, &r], "translate in [C,S]", "outside [C,S]")
        })?;
        if !r.is_integrally_closed().expect("integral ideal") {
            fractional_closed = false;
            if arf {
                return t.check(false, || {
                    cx(
                        ctx,
                        &[&e, &r],
                        "Arf: reflexive ideal translates to an integrally closed one",
                        "not closed",
                    )
                });
            }
        }
    }
    t.check(arf == fractional_closed, || {
        cx(
            ctx,
            &[],
            "Arf iff reflexive fractional ideals are translates of closed census ideals",
            format!("arf={arf}"),
        )
    })
}

fn check_misc_remarks_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    let d = &ctx.distinguished;
    let dd: Vec<Vec<bool>> = d
        .iter()
        .map(|h| {
            d.iter()
                .map(|f| h.is_h_reflexive(f).expect("same ambient semigroup"))
                .collect()
        })
        .collect();
    for e in ctx.census.ideals() {
        let er: Vec<bool> = d
            .iter()
            .map(|h| e.is_h_reflexive(h).expect("same ambient semigroup"))
            .collect();
        for (hi, h) in d.iter().enumerate() {
            for (fi, f) in d.iter().enumerate() {
                t.check(!(er[hi] && dd[hi][fi]) || er[fi], || {
                    cx(
                        ctx,
                        &[e, h, f],
                        "E H-reflexive and H F-reflexive imply E F-reflexive",
                        "not F-reflexive",
                    )
                })?;
            }
        }
    }
    for j in &ctx.closed {
        let jj = j.end_ring();
        t.check(jj.is_reflexive(), || {
            cx(ctx, &[j, &jj], "J-J reflexive", "not reflexive")
        })?;
    }
    for (i, e) in ctx.fractional_instances() {
        if ctx.window[i].is_principal() || !e.is_reflexive() {
            continue;
        }
        t.check(ctx.blowup.is_subset_of(&e.end_ring()), || {
            cx(ctx, &[&e], "m-m <= E-E", e.end_ring())
        })?;
    }
    Ok(())
}

fn check_duality_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    for (_, e) in ctx.fractional_instances() {
        let back = e.dual().dual();
        t.check(back == e, || cx(ctx, &[&e], "K-(K-E) = E", back))?;
    }
    Ok(())
}

fn check_closure_laws_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    for (_, e) in ctx.fractional_instances() {
        let r = e.reflexive_closure();
        t.check(e.is_subset_of(&r) && r.reflexive_closure() == r, || {
            cx(ctx, &[&e], "E <= S-(S-E) and closure idempotent", r)
        })?;
    }
    for e in ctx.census.ideals() {
        for h in &ctx.distinguished {
            let hc = e.h_closure(h).expect("same ambient semigroup");
            t.check(e.is_subset_of(&hc), || cx(ctx, &[e, h], "E <= H-(H-E)", hc))?;
        }
    }
    for e in ctx.integral_instances() {
        let cl = closure(&e);
        let ok = e.is_subset_of(&cl)
            && cl.is_subset_of(&ctx.unit)
            && cl.min() == e.min()
            && closure(&cl) == cl
            && (cl != e || e.is_reflexive());
        t.check(ok, || {
            cx(
                ctx,
                &[&e],
                "E <= cl(E) <= S, same min, idempotent, closed => reflexive",
                cl,
            )
        })?;
    }
    let distinct: HashSet<&RelativeIdeal> = ctx.census.ideals().collect();
    let closed_count = ctx
        .census
        .entries
        .iter()
        .filter(|c| c.flags.integrally_closed)
        .count();
    let ok = distinct.len() == ctx.census.len()
        && distinct.contains(&ctx.unit)
        && distinct.contains(&ctx.conductor)
        && closed_count == ctx.s.small_elements().len();
    t.check(ok, || {
        cx(
            ctx,
            &[],
            "census distinct, contains C and S, |closed| = |S ∩ [0,F+1]|",
            format!("closed={closed_count}"),
        )
    })
}

fn check_translation_invariance_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    for (i, e) in ctx.window.iter().enumerate() {
        let base = (e.is_reflexive(), e.is_stable(), e.is_principal());
        for &s in &ctx.shifts[i] {
            let moved = e.translate(s);
            let got = (
                moved.is_reflexive(),
                moved.is_stable(),
                moved.is_principal(),
            );
            t.check(base == got, || {
                cx(ctx, &[e, &moved], &format!("{base:?}"), format!("{got:?}"))
            })?;
        }
    }
    Ok(())
}

fn check_classifier_consistency_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    let r = classify::classify(&ctx.s);
    let nu_eq_e = r.embedding_dimension as u64 == r.multiplicity;
    let ok = (!r.arf || r.minimal_multiplicity)
        && (r.minimal_multiplicity == nu_eq_e)
        && (!r.gorenstein || r.almost_gorenstein)
        && (r.embedding_dimension as u64 <= r.multiplicity)
        && r.gorenstein == (ctx.canonical == ctx.unit);
    t.check(ok, || {
        cx(
            ctx,
            &[],
            "consistent classification flags",
            format!("{r:?}"),
        )
    })
}

fn check_translation_rigidity_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    let census: HashSet<&RelativeIdeal> = ctx.census.ideals().collect();
    let reach = ctx.s.frobenius() + 1;
    for e in ctx.census.ideals() {
        let clash = (-reach..=reach)
            .filter(|&a| a != 0)
            .map(|a| e.translate(a))
            .find(|j| census.contains(j) && e.is_subset_of(j));
        t.check(clash.is_none(), || {
            let j = clash.clone().unwrap();
            cx(
                ctx,
                &[e, &j],
                "no census translate contains E",
                format!("shift {}", j.min() - e.min()),
            )
        })?;
    }
    Ok(())
}

fn check_canonical_sufficiency_in(ctx: &SemigroupContext, t: &mut Tally) -> Step {
    for (_, e) in ctx.fractional_instances() {
        let ok = !ctx.canonical.is_subset_of(&e.end_ring()) || e.is_reflexive();
        t.check(ok, || {
            cx(ctx, &[&e], "K <= E-E implies reflexive", "not reflexive")
        })?;
    }
    Ok(())
}

fn run_in(id: TheoremId, ctx: &SemigroupContext, t: &mut Tally) -> Step {
    match id {
        TheoremId::T1 => check_bass_in(ctx, t),
        TheoremId::T2 => check_window_normalization_in(ctx, t),
        TheoremId::T3 => check_colon_equalities_in(ctx, t),
        TheoremId::T4 => check_sandwich_and_absorption_in(ctx, t),
        TheoremId::T5 => check_ag_endomorphism_in(ctx, t),
        TheoremId::T6 => check_h_reflexivity_in(ctx, t),
        TheoremId::T7 => check_ag_blowup_in(ctx, t),
        TheoremId::T8 => check_minmult_in(ctx, t),
        TheoremId::T9 => check_arf_in(ctx, t),
        TheoremId::T10 => check_misc_remarks_in(ctx, t),
        TheoremId::T11 => check_duality_in(ctx, t),
        TheoremId::T12 => check_closure_laws_in(ctx, t),
        TheoremId::T13 => check_translation_invariance_in(ctx, t),
        TheoremId::T14 => check_classifier_consistency_in(ctx, t),
        TheoremId::T15 => check_translation_rigidity_in(ctx, t),
        TheoremId::T16 => check_canonical_sufficiency_in(ctx, t),
    }
}

struct Outcome {
    instances: u64,
    counterexample: Option<Counterexample>,
}

/// Runs the selected checks over the universe; one report per id, in the
/// order given.
pub fn run_checks(
    universe: &SemigroupUniverse,
    ids: &[TheoremId],
    config: &HarnessConfig,
) -> Vec<VerificationReport> {
    let per_semigroup: Vec<(usize, usize, Vec<Outcome>)> = universe
        .semigroups
        .par_iter()
        .map(|s| {
            let ctx = SemigroupContext::new(s, config);
            let outcomes = ids
                .iter()
                .map(|&id| {
                    let mut t = Tally::default();
                    let result = run_in(id, &ctx, &mut t);
                    Outcome {
                        instances: t.instances,
                        counterexample: result.err(),
                    }
                })
                .collect();
            (ctx.census.len(), ctx.window.len(), outcomes)
        })
        .collect();

    let summary = UniverseSummary {
        description: format!(
            "all numerical semigroups of genus <= {}; census [C,S] and window [C,K] with {} seeded translates each",
            universe.genus_bound, config.translates
        ),
        genus_bound: universe.genus_bound,
        semigroups: universe.len(),
        census_ideals: per_semigroup.iter().map(|p| p.0).sum(),
        window_ideals: per_semigroup.iter().map(|p| p.1).sum(),
        translates_per_ideal: config.translates,
        seed: config.seed,
    };

    ids.iter()
        .enumerate()
        .map(|(k, &id)| {
            let instances = per_semigroup.iter().map(|p| p.2[k].instances).sum();
            let counterexample = per_semigroup
                .iter()
                .find_map(|p| p.2[k].counterexample.clone());
            VerificationReport {
                theorem_id: id.to_string(),
                name: id.name().to_string(),
                statement: id.statement().to_string(),
                universe: summary.clone(),
                instances_checked: instances,
                passed: counterexample.is_none(),
                counterexample,
            }
        })
        .collect()
}

fn run_one(
    id: TheoremId,
    universe: &SemigroupUniverse,
    config: &HarnessConfig,
) -> VerificationReport {
    run_checks(universe, &[id], config).remove(0)
}

pub fn check_bass(universe: &SemigroupUniverse, config: &HarnessConfig) -> VerificationReport {
    run_one(TheoremId::T1, universe, config)
}

pub fn check_window_normalization(
    universe: &SemigroupUniverse,
    config: &HarnessConfig,
) -> VerificationReport {
    run_one(TheoremId::T2, universe, config)
}

pub fn check_colon_equalities(
    universe: &SemigroupUniverse,
    config: &HarnessConfig,
) -> VerificationReport {
    run_one(TheoremId::T3, universe, config)
}

pub fn check_sandwich_and_absorption(
    universe: &SemigroupUniverse,
    config: &HarnessConfig,
) -> VerificationReport {
    run_one(TheoremId::T4, universe, config)
}

pub fn check_ag_endomorphism(
    universe: &SemigroupUniverse,
    config: &HarnessConfig,
) -> VerificationReport {
    run_one(TheoremId::T5, universe, config)
}

pub fn check_h_reflexivity(
    universe: &SemigroupUniverse,
    config: &HarnessConfig,
) -> VerificationReport {
    run_one(TheoremId::T6, universe, config)
}

pub fn check_ag_blowup(universe: &SemigroupUniverse, config: &HarnessConfig) -> VerificationReport {
    run_one(TheoremId::T7, universe, config)
}

pub fn check_minmult(universe: &SemigroupUniverse, config: &HarnessConfig) -> VerificationReport {
    run_one(TheoremId::T8, universe, config)
}

pub fn check_arf(universe: &SemigroupUniverse, config: &HarnessConfig) -> VerificationReport {
    run_one(TheoremId::T9, universe, config)
}

pub fn check_misc_remarks(
    universe: &SemigroupUniverse,
    config: &HarnessConfig,
) -> VerificationReport {
    run_one(TheoremId::T10, universe, config)
}

/// A concrete example where a converse fails, or where a hypothesis cannot
/// be dropped.
struct Witness {
    id: &'static str,
    name: &'static str,
    statement: &'static str,
    semigroup: &'static [u64],
    ideal: &'static [i64],
    holds: fn(&Arc<NumericalSemigroup>, &RelativeIdeal) -> bool,
}

const WITNESSES: [Witness; 7] = [
    Witness {
        id: "W1",
        name: "multiplier-inclusion-not-sufficient",
        statement: "C <= E <= m, m-m <= E-E (in fact equal), yet E is not reflexive: 10 in S-(S-E) minus E",
        semigroup: &[7, 10, 13],
        ideal: &[7, 13],
        holds: |s, e| {
            let m = RelativeIdeal::maximal(s);
            let r = e.reflexive_closure();
            RelativeIdeal::conductor(s).is_subset_of(e)
                && m.end_ring() == e.end_ring()
                && e.end_ring() == RelativeIdeal::from_generators(s, &[0, 29, 32]).unwrap()
                && r.contains(10)
                && !e.contains(10)
        },
    },
    Witness {
        id: "W2",
        name: "closure-absorption-not-sufficient",
        statement: "min(E) + (cl E - cl E) <= E with cl E = m, yet E is not reflexive",
        semigroup: &[7, 10, 13],
        ideal: &[7, 13],
        holds: |s, e| {
            let cl = closure(e);
            cl == RelativeIdeal::maximal(s)
                && col(&cl, &cl).translate(e.min()).is_subset_of(e)
                && !e.is_reflexive()
        },
    },
    Witness {
        id: "W3",
        name: "conductor-hypothesis-needed",
        statement: "E = 2+m in <3,5,7> is reflexive and non-principal with cl E = C, but 5 + (C-C) = C is not inside E",
        semigroup: &[3, 5, 7],
        ideal: &[5, 7, 9],
        holds: |s, e| {
            let c = RelativeIdeal::conductor(s);
            let cl = closure(e);
            e.is_reflexive()
                && !e.is_principal()
                && !c.is_subset_of(e)
                && cl == c
                && !col(&c, &c).translate(e.min()).is_subset_of(e)
        },
    },
    Witness {
        id: "W4",
        name: "canonical-multiplier-not-necessary",
        statement: "E = (7,9,10) in <5,7,9> is integrally closed, hence reflexive, but 2 in K and 2+9 not in E",
        semigroup: &[5, 7, 9],
        ideal: &[7, 9, 10],
        holds: |s, e| {
            let k = RelativeIdeal::canonical(s);
            e.is_integrally_closed().unwrap()
                && e.is_reflexive()
                && k.contains(2)
                && !e.contains(11)
                && !k.is_subset_of(&e.end_ring())
        },
    },
    Witness {
        id: "W5",
        name: "b-ideal-not-b-reflexive",
        statement: "E = (5,7,8) in <4,5,7> is reflexive and a B-ideal, but 6 in B-(B-E) minus E",
        semigroup: &[4, 5, 7],
        ideal: &[5, 7, 8],
        holds: |s, e| {
            let b = RelativeIdeal::maximal(s).end_ring();
            let bb = e.h_closure(&b).unwrap();
            e.is_reflexive() && add(&b, e).is_subset_of(e) && bb.contains(6) && !e.contains(6)
        },
    },
    Witness {
        id: "W6",
        name: "b-ideal-not-reflexive",
        statement: "E = (6,8,10) in <3,7,8> is a B-ideal, but 7 in S-(S-E) minus E",
        semigroup: &[3, 7, 8],
        ideal: &[6, 8, 10],
        holds: |s, e| {
            let b = RelativeIdeal::maximal(s).end_ring();
            add(&b, e).is_subset_of(e) && e.reflexive_closure().contains(7) && !e.contains(7)
        },
    },
    Witness {
        id: "W7",
        name: "arf-conductor-hypothesis-needed",
        statement: "E = (6,10,11) in the Arf semigroup <3,7,8> is reflexive, not integrally closed, misses C, and E-3 = m",
        semigroup: &[3, 7, 8],
        ideal: &[6, 10, 11],
        holds: |s, e| {
            e.is_reflexive()
                && !e.is_integrally_closed().unwrap()
                && !RelativeIdeal::conductor(s).is_subset_of(e)
                && e.translate(-3) == RelativeIdeal::maximal(s)
                && classify::is_arf(s)
        },
    },
];

/// Reproduces the pinned examples where converses fail or hypotheses are
/// needed; guards the universe checks against passing vacuously.
pub fn non_implication_witnesses() -> Vec<VerificationReport> {
    WITNESSES
        .iter()
        .map(|w| {
            let s = Arc::new(NumericalSemigroup::from_generators(w.semigroup).expect("valid"));
            let e = RelativeIdeal::from_generators(&s, w.ideal).expect("nonempty");
            let holds = (w.holds)(&s, &e);
            VerificationReport {
                theorem_id: w.id.to_string(),
                name: w.name.to_string(),
                statement: w.statement.to_string(),
                universe: UniverseSummary {
                    description: format!("pinned example <{}> with E = {e}", s),
                    genus_bound: s.genus(),
                    semigroups: 1,
                    census_ideals: 0,
                    window_ideals: 0,
                    translates_per_ideal: 0,
                    seed: 0,
                },
                instances_checked: 1,
                passed: holds,
                counterexample: (!holds).then(|| Counterexample {
                    semigroup: s.minimal_generators().to_vec(),
                    ideals: vec![e.to_string()],
                    expected: w.statement.to_string(),
                    actual: "example does not behave as stated".into(),
                }),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::semigroups_up_to_genus;

    fn universe_of(gens: &[&[u64]]) -> SemigroupUniverse {
        SemigroupUniverse::from_semigroups(
            gens.iter()
                .map(|g| NumericalSemigroup::from_generators(g).unwrap())
                .collect(),
        )
    }

    #[test]
    fn theorem_ids_parse() {
        assert_eq!("T7".parse::<TheoremId>().unwrap(), TheoremId::T7);
        assert_eq!("t12".parse::<TheoremId>().unwrap(), TheoremId::T12);
        assert_eq!("3".parse::<TheoremId>().unwrap(), TheoremId::T3);
        assert_eq!("arf".parse::<TheoremId>().unwrap(), TheoremId::T9);
        assert!("T17".parse::<TheoremId>().is_err());
    }

    #[test]
    fn naturals_only() {
        let u = semigroups_up_to_genus(0).unwrap();
        let reports = run_checks(&u, &TheoremId::ALL, &HarnessConfig::default());
        for r in &reports {
            assert!(r.passed, "{r:?}");
            assert!(r.instances_checked > 0, "{}", r.theorem_id);
        }
    }

    #[test]
    fn small_semigroups_pass_every_check() {
        let u = universe_of(&[
            &[2, 3],
            &[5, 7, 9],
            &[4, 5, 7],
            &[3, 7, 8],
            &[3, 5, 7],
            &[7, 10, 13],
        ]);
        for r in run_checks(&u, &TheoremId::ALL, &HarnessConfig::default()) {
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn bass_on_single_semigroups() {
        let config = HarnessConfig::default();
        let r = check_bass(&universe_of(&[&[2, 3]]), &config);
        assert!(r.passed);
        assert_eq!(r.instances_checked, 3);
        assert!(check_bass(&universe_of(&[&[5, 7, 9]]), &config).passed);
    }

    #[test]
    fn detects_a_wrong_classification() {
        // A characterization check must fail when the ring property and the
        // ideal-side statement disagree.
        let s = Arc::new(NumericalSemigroup::from_generators(&[3, 7, 8]).unwrap());
        let ctx = SemigroupContext::new(&s, &HarnessConfig::default());
        let mut t = Tally::default();
        let wrong = check_characterization(&ctx, &mut t, true, "forced", |e| is_b_ideal(&ctx, e));
        assert!(wrong.is_err());
        let mut t = Tally::default();
        let vacuous = check_characterization(&ctx, &mut t, false, "forced", |e| e.is_reflexive());
        assert!(vacuous.is_err());
    }

    #[test]
    fn witnesses_reproduce() {
        for w in non_implication_witnesses() {
            assert!(w.passed, "{w:?}");
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let u = semigroups_up_to_genus(4).unwrap();
        let config = HarnessConfig {
            translates: 2,
            seed: 7,
        };
        let a = serde_json::to_string(&run_checks(&u, &TheoremId::ALL, &config)).unwrap();
        let b = serde_json::to_string(&run_checks(&u, &TheoremId::ALL, &config)).unwrap();
        assert_eq!(a, b);
    }
}
