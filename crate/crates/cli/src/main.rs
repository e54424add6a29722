use std::io::{self, Write};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use semiref::classify::{classify, ClassificationReport};
use semiref::enumerate::{ideals_between, semigroups_up_to_genus};
use semiref::harness::{self, HarnessConfig, TheoremId, VerificationReport};
use semiref::semigroup::parse_list;
use semiref::{
    blowup_semigroup, Error, IdealJson, NormalizationCertificate, NumericalSemigroup, RelativeIdeal,
};

#[derive(Parser)]
#[command(
    name = "semiref",
    version,
    about = "Reflexive ideals of numerical semigroup rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a semigroup and print K, C and the blow-up B.
    Analyze {
        /// Generators, e.g. "3,7,8" or "⟨3,7,8⟩".
        semigroup: NumericalSemigroup,
        #[command(flatten)]
        out: Output,
    },
    /// Apply one ideal operation.
    Ideal {
        semigroup: NumericalSemigroup,
        /// Ideal generators; the first is the primary ideal, a second one is
        /// the auxiliary ideal of binary operations.
        #[arg(long = "ideal", required = true, allow_hyphen_values = true)]
        ideals: Vec<String>,
        #[arg(long)]
        op: Op,
        /// Shift for `translate`.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
        #[command(flatten)]
        out: Output,
    },
    /// List every ideal between C and S with flags, or stream one summary
    /// per semigroup up to a genus bound.
    Census {
        #[arg(required_unless_present = "genus_max", conflicts_with = "genus_max")]
        semigroup: Option<NumericalSemigroup>,
        #[arg(long)]
        genus_max: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Run the verification checks over every semigroup up to a genus bound.
    Verify {
        #[arg(long, default_value_t = 12)]
        genus_max: usize,
        /// Restrict to these checks (T1..T16 or a check name); repeatable.
        #[arg(long = "theorem")]
        theorems: Vec<TheoremId>,
        #[arg(long, default_value_t = harness::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = harness::DEFAULT_TRANSLATES)]
        translates: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Sum,
    Colon,
    Dual,
    ReflexiveClosure,
    HClosure,
    IntegralClosure,
    EndRing,
    Translate,
    Normalize,
    NormalizeReflexive,
    IsReflexive,
    IsHReflexive,
    IsIntegral,
    IsIntegrallyClosed,
    IsStable,
    IsPrincipal,
    IsBIdeal,
    Describe,
}

impl Op {
    fn name(self) -> String {
        self.to_possible_value().unwrap().get_name().to_string()
    }

    fn is_binary(self) -> bool {
        matches!(self, Op::Sum | Op::Colon | Op::HClosure | Op::IsHReflexive)
    }
}

enum Failure {
    Usage(String),
    Counterexample,
    /// The reader closed stdout, e.g. `semiref census ... | head`.
    ClosedPipe,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::ClosedPipe
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { semigroup, out } => analyze(semigroup, out.format),
        Command::Ideal {
            semigroup,
            ideals,
            op,
            shift,
            out,
        } => ideal(semigroup, &ideals, op, shift, out.format),
        Command::Census {
            semigroup,
            genus_max,
            out,
        } => census(semigroup, genus_max, out.format),
        Command::Verify {
            genus_max,
            theorems,
            seed,
            translates,
            out,
        } => verify(
            genus_max,
            &theorems,
            HarnessConfig { translates, seed },
            out.format,
        ),
    };
    match result {
        Ok(()) | Err(Failure::ClosedPipe) => ExitCode::SUCCESS,
        Err(Failure::Counterexample) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn print_json(value: &impl Serialize) -> Outcome {
    let mut stdout = io::stdout().lock();
    serde_json::to_writer_pretty(&mut stdout, value).map_err(io::Error::from)?;
    writeln!(stdout)?;
    Ok(())
}

#[derive(Serialize)]
struct Analysis {
    #[serde(flatten)]
    report: ClassificationReport,
    #[serde(rename = "K")]
    canonical: IdealJson,
    #[serde(rename = "C")]
    conductor: IdealJson,
    #[serde(rename = "B")]
    blowup: String,
}

fn analyze(s: NumericalSemigroup, format: Format) -> Outcome {
    let s = Arc::new(s);
    let report = classify(&s);
    let k = RelativeIdeal::canonical(&s);
    let c = RelativeIdeal::conductor(&s);
    let b = blowup_semigroup(&s);
    if format == Format::Json {
        return print_json(&Analysis {
            report,
            canonical: k.to_json(),
            conductor: c.to_json(),
            blowup: b.to_string(),
        });
    }
    let flag = |holds: bool, witness: Option<i64>| match witness {
        Some(w) if !holds => format!("false (witness {w})"),
        _ => holds.to_string(),
    };
    let w = &report.witness;
    println!("S = ⟨{s}⟩");
    println!(
        "frobenius {}, genus {}, multiplicity {}, embedding dimension {}",
        report.frobenius, report.genus, report.multiplicity, report.embedding_dimension
    );
    println!(
        "gorenstein            {}",
        flag(report.gorenstein, w.gorenstein)
    );
    println!(
        "almost gorenstein     {}",
        flag(report.almost_gorenstein, w.almost_gorenstein)
    );
    println!(
        "minimal multiplicity  {}",
        flag(report.minimal_multiplicity, w.minimal_multiplicity)
    );
    println!("arf                   {}", flag(report.arf, w.arf));
    println!("K = {k}");
    println!("C = {c}");
    println!("B = ⟨{b}⟩");
    Ok(())
}

fn parse_ideal(s: &Arc<NumericalSemigroup>, text: &str) -> Result<RelativeIdeal, Failure> {
    Ok(RelativeIdeal::from_generators(s, &parse_list(text)?)?)
}

enum Value {
    Ideal(RelativeIdeal),
    Flag(bool),
    Certificate(NormalizationCertificate),
    Text(String),
}

fn ideal(s: NumericalSemigroup, texts: &[String], op: Op, shift: i64, format: Format) -> Outcome {
    let s = Arc::new(s);
    let ideals = texts
        .iter()
        .map(|t| parse_ideal(&s, t))
        .collect::<Result<Vec<_>, _>>()?;
    let wanted = if op.is_binary() { 2 } else { 1 };
    if ideals.len() != wanted {
        return Err(Failure::Usage(format!(
            "--op {} takes {wanted} --ideal argument(s), got {}",
            op.name(),
            ideals.len()
        )));
    }
    let e = &ideals[0];
    let aux = ideals.get(1);
    let value = match op {
        Op::Sum => Value::Ideal(e.sum(aux.unwrap())?),
        Op::Colon => Value::Ideal(e.colon(aux.unwrap())?),
        Op::Dual => Value::Ideal(e.dual()),
        Op::ReflexiveClosure => Value::Ideal(e.reflexive_closure()),
        Op::HClosure => Value::Ideal(e.h_closure(aux.unwrap())?),
        Op::IntegralClosure => Value::Ideal(e.integral_closure()?),
        Op::EndRing => Value::Ideal(e.end_ring()),
        Op::Translate => Value::Ideal(e.translate(shift)),
        Op::Normalize => Value::Certificate(e.normalize_to_canonical_window()),
        Op::NormalizeReflexive => Value::Certificate(e.normalize_reflexive()?),
        Op::IsReflexive => Value::Flag(e.is_reflexive()),
        Op::IsHReflexive => Value::Flag(e.is_h_reflexive(aux.unwrap())?),
        Op::IsIntegral => Value::Flag(e.is_integral()),
        Op::IsIntegrallyClosed => Value::Flag(e.is_integrally_closed()?),
        Op::IsStable => Value::Flag(e.is_stable()),
        Op::IsPrincipal => Value::Flag(e.is_principal()),
        Op::IsBIdeal => {
            let b = RelativeIdeal::maximal(&s).end_ring();
            Value::Flag(b.sum(e)?.is_subset_of(e))
        }
        Op::Describe => Value::Text(e.describe()),
    };

    if format == Format::Json {
        let result = match &value {
            Value::Ideal(r) => json!(r.to_json()),
            Value::Flag(b) => json!(b),
            Value::Certificate(c) => json!({ "z": c.z, "w": c.w, "result": c.result.to_json() }),
            Value::Text(t) => json!(t),
        };
        let inputs: Vec<IdealJson> = ideals.iter().map(RelativeIdeal::to_json).collect();
        return print_json(&json!({
            "semigroup": s.minimal_generators(),
            "op": op.name(),
            "inputs": inputs,
            "result": result,
        }));
    }
    match value {
        Value::Ideal(r) => println!("{r}"),
        Value::Flag(b) => println!("{b}"),
        Value::Certificate(c) => println!("z = {}, w = {}, result = {}", c.z, c.w, c.result),
        Value::Text(t) => println!("{t}"),
    }
    Ok(())
}

fn flag_names(f: &semiref::enumerate::IdealFlags) -> String {
    [
        (f.reflexive, "reflexive"),
        (f.integrally_closed, "integrally-closed"),
        (f.stable, "stable"),
        (f.principal, "principal"),
        (f.b_ideal, "b-ideal"),
    ]
    .iter()
    .filter(|(on, _)| *on)
    .map(|(_, name)| *name)
    .collect::<Vec<_>>()
    .join(" ")
}

fn census(s: Option<NumericalSemigroup>, genus_max: Option<usize>, format: Format) -> Outcome {
    let mut stdout = io::stdout().lock();
    if let Some(s) = s {
        let c = ideals_between(&Arc::new(s));
        if format == Format::Json {
            drop(stdout);
            return print_json(&c.to_json());
        }
        writeln!(
            stdout,
            "S = ⟨{}⟩, {} ideals between C and S",
            c.semigroup,
            c.len()
        )?;
        for e in &c.entries {
            writeln!(stdout, "{}  [{}]", e.ideal, flag_names(&e.flags))?;
        }
        return Ok(());
    }

    let g = genus_max.expect("clap requires a semigroup or --genus-max");
    let universe = semigroups_up_to_genus(g)?;
    for s in &universe.semigroups {
        let sum = ideals_between(s).summary();
        if format == Format::Json {
            serde_json::to_writer(&mut stdout, &sum).map_err(io::Error::from)?;
            writeln!(stdout)?;
        } else {
            writeln!(
                stdout,
                "⟨{s}⟩ F={} g={} ideals={} reflexive={} integrally-closed={} stable={} principal={} b-ideal={}",
                sum.frobenius,
                sum.genus,
                sum.ideals,
                sum.reflexive,
                sum.integrally_closed,
                sum.stable,
                sum.principal,
                sum.b_ideal
            )?;
        }
    }
    Ok(())
}

fn verify(
    genus_max: usize,
    theorems: &[TheoremId],
    config: HarnessConfig,
    format: Format,
) -> Outcome {
    let universe = semigroups_up_to_genus(genus_max)?;
    let ids: Vec<TheoremId> = if theorems.is_empty() {
        TheoremId::ALL.to_vec()
    } else {
        let mut ids = theorems.to_vec();
        ids.sort();
        ids.dedup();
        ids
    };
    let mut reports = harness::run_checks(&universe, &ids, &config);
    if theorems.is_empty() {
        reports.extend(harness::non_implication_witnesses());
    }
    let passed = reports.iter().all(|r| r.passed);

    if format == Format::Json {
        print_json(&reports)?;
    } else {
        print_text_reports(&reports)?;
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Counterexample)
    }
}

fn print_text_reports(reports: &[VerificationReport]) -> Outcome {
    let mut stdout = io::stdout().lock();
    if let Some(u) = reports
        .iter()
        .map(|r| &r.universe)
        .find(|u| u.translates_per_ideal > 0 || u.census_ideals > 0)
    {
        writeln!(
            stdout,
            "universe: {} semigroups (genus <= {}), {} census ideals, {} window ideals, {} translates, seed {}",
            u.semigroups, u.genus_bound, u.census_ideals, u.window_ideals, u.translates_per_ideal, u.seed
        )?;
    }
    for r in reports {
        let verdict = if r.passed { "pass" } else { "FAIL" };
        writeln!(
            stdout,
            "{:<4} {:<34} {verdict}  instances={}",
            r.theorem_id, r.name, r.instances_checked
        )?;
        if let Some(c) = &r.counterexample {
            let gens: Vec<String> = c.semigroup.iter().map(u64::to_string).collect();
            writeln!(stdout, "     S = ⟨{}⟩", gens.join(","))?;
            for e in &c.ideals {
                writeln!(stdout, "     ideal {e}")?;
            }
            writeln!(stdout, "     expected: {}", c.expected)?;
            writeln!(stdout, "     actual:   {}", c.actual)?;
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    writeln!(stdout, "{} checks, {failed} failed", reports.len())?;
    Ok(())
}
