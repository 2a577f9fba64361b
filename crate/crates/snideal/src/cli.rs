//! Batch command line surface: ring summaries, ideal classification,
//! Z_n cofactor tables, and the check registry.
//!
//! Exit codes: 0 success, 1 registry violations, 2 bad input or unknown
//! check, 3 multiplicative set meets the ideal.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classify::{classify_ideal, IdealReport};
use crate::construct::build_ring;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, MultSet};
use crate::ring::{Caps, FiniteRing, RingSpec};
use crate::theorems::{
    find_check, render_json, render_text, run_all, run_check, CheckReport, CorpusSpec, LabStore,
};
use crate::zn::{factorize, zn_brute_force_sn, zn_fast_classify, ZnRegime};

#[derive(Parser)]
#[command(name = "snideal", version, about = "laboratory for ideals of finite commutative rings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Summarize a ring: order, units, nilradical, predicates
    Ring(RingArgs),
    /// Classify one ideal, optionally against a multiplicative set
    Classify(ClassifyArgs),
    /// Tabulate Z_n against its prime cofactor sets
    Table(TableArgs),
    /// Run registry checks over a generated corpus
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Markdown,
}

#[derive(Args)]
struct RingArgs {
    /// Residue ring Z_n
    #[arg(long, value_name = "N", conflicts_with = "spec")]
    zn: Option<u64>,
    /// JSON ring spec file
    #[arg(long, value_name = "FILE")]
    spec: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Residue ring Z_n
    #[arg(long, value_name = "N", conflicts_with = "spec")]
    zn: Option<u64>,
    /// JSON ring spec file
    #[arg(long, value_name = "FILE")]
    spec: Option<PathBuf>,
    /// Ideal generators (element indices; residues for Z_n)
    #[arg(long, value_name = "GENS", value_delimiter = ',', num_args = 1.., required = true)]
    ideal: Vec<u64>,
    /// Seed of the multiplicative set (closed up, 1 inserted)
    #[arg(long, value_name = "SEEDS", value_delimiter = ',', num_args = 1..)]
    mult: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    /// Single modulus
    #[arg(long, value_name = "N", conflicts_with_all = ["min", "max"])]
    n: Option<u64>,
    /// Lower end of the modulus range
    #[arg(long, default_value_t = 2)]
    min: u64,
    /// Upper end of the modulus range (inclusive)
    #[arg(long)]
    max: Option<u64>,
    /// One row per single prime cofactor instead of every nonempty subset
    #[arg(long)]
    all_prime_cofactors: bool,
    /// Cross-check each row against the definitional scanner
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check ids, or "all" for the whole registry
    #[arg(value_name = "CHECK")]
    checks: Vec<String>,
    /// Additional check ids
    #[arg(long = "check", value_name = "ID")]
    check_flags: Vec<String>,
    /// Run the pinned worked-instance replications
    #[arg(long)]
    examples: bool,
    /// Override the corpus Z_n bound
    #[arg(long, value_name = "N")]
    max_n: Option<u64>,
    /// JSON corpus spec file (missing fields take their defaults)
    #[arg(long, value_name = "FILE")]
    corpus: Option<PathBuf>,
    /// Per-check timings on stderr
    #[arg(long)]
    progress: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::NotDisjoint => 3,
                _ => 2,
            })
        }
    }
}

fn dispatch(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Ring(a) => cmd_ring(a),
        Cmd::Classify(a) => cmd_classify(a),
        Cmd::Table(a) => cmd_table(a),
        Cmd::Verify(a) => cmd_verify(a),
    }
}

fn load_spec(zn: Option<u64>, file: Option<PathBuf>) -> Result<RingSpec> {
    match (zn, file) {
        (Some(n), None) => Ok(RingSpec::Zn(n)),
        (None, Some(path)) => {
            let body = std::fs::read_to_string(&path)
                .map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&body)
                .map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))
        }
        _ => Err(Error::InvalidSpec("give exactly one of --zn or --spec".into())),
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Labels of a set, elided past 64 elements.
fn preview(ring: &FiniteRing, set: &ElemSet) -> String {
    if set.len() <= 64 {
        let all: Vec<String> = set.iter().map(|e| ring.label(e)).collect();
        return all.join(", ");
    }
    let mut head: Vec<String> = set.iter().take(16).map(|e| ring.label(e)).collect();
    head.push("...".into());
    head.join(", ")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

// ---------------------------------------------------------------------
// ring

/// Predicates go exhaustive over pairs, so they are only computed at desk
/// scale; larger rings still get counts and previews.
const PREDICATE_ORDER_MAX: usize = 4096;

#[derive(Serialize)]
struct PredSummary {
    is_field: bool,
    is_von_neumann_regular: bool,
    is_un_ring: bool,
    is_reduced: bool,
    is_domain: bool,
}

#[derive(Serialize)]
struct RingSummary {
    spec: RingSpec,
    name: String,
    order: usize,
    zero: usize,
    one: usize,
    unit_count: usize,
    nilpotent_count: usize,
    zero_divisor_count: usize,
    /// Element indices; omitted past order 4096.
    units: Option<Vec<usize>>,
    nilradical: Option<Vec<usize>>,
    predicates: Option<PredSummary>,
}

fn cmd_ring(a: RingArgs) -> Result<u8> {
    let spec = load_spec(a.zn, a.spec)?;
    let caps = Caps::from_env();
    let built = build_ring(&spec, &caps)?;
    let ring = built.ring.clone();
    let small = ring.order() <= PREDICATE_ORDER_MAX;
    let summary = RingSummary {
        spec,
        name: ring.display_name(),
        order: ring.order(),
        zero: ring.zero(),
        one: ring.one(),
        unit_count: ring.units().len(),
        nilpotent_count: ring.nilpotents().len(),
        zero_divisor_count: ring.zero_divisors().len(),
        units: small.then(|| ring.units().elements()),
        nilradical: small.then(|| ring.nilpotents().elements()),
        predicates: small.then(|| {
            let p = ring.predicates();
            PredSummary {
                is_field: p.is_field,
                is_von_neumann_regular: p.is_von_neumann_regular,
                is_un_ring: p.is_un_ring,
                is_reduced: ring.is_reduced(),
                is_domain: ring.is_domain(),
            }
        }),
    };
    match a.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&summary).unwrap()),
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!("ring: {}\n", summary.name));
            out.push_str(&format!("order: {}\n", summary.order));
            out.push_str(&format!("zero: {}\n", ring.label(summary.zero)));
            out.push_str(&format!("one: {}\n", ring.label(summary.one)));
            out.push_str(&format!(
                "units ({}): {}\n",
                summary.unit_count,
                preview(&ring, ring.units())
            ));
            out.push_str(&format!(
                "nilradical ({}): {}\n",
                summary.nilpotent_count,
                preview(&ring, ring.nilpotents())
            ));
            out.push_str(&format!(
                "zero divisors ({}): {}\n",
                summary.zero_divisor_count,
                preview(&ring, ring.zero_divisors())
            ));
            match &summary.predicates {
                Some(p) => {
                    out.push_str(&format!("field: {}\n", yn(p.is_field)));
                    out.push_str(&format!("von neumann regular: {}\n", yn(p.is_von_neumann_regular)));
                    out.push_str(&format!("un-ring: {}\n", yn(p.is_un_ring)));
                    out.push_str(&format!("reduced: {}\n", yn(p.is_reduced)));
                    out.push_str(&format!("domain: {}\n", yn(p.is_domain)));
                }
                None => out.push_str(&format!(
                    "predicates: skipped (order above {PREDICATE_ORDER_MAX})\n"
                )),
            }
            print!("{out}");
        }
        Format::Csv | Format::Markdown => {
            let mut rows: Vec<(&str, String)> = vec![
                ("ring", summary.name.clone()),
                ("order", summary.order.to_string()),
                ("zero", ring.label(summary.zero)),
                ("one", ring.label(summary.one)),
                ("units", format!("{} elements", summary.unit_count)),
                ("nilradical", preview(&ring, ring.nilpotents())),
                ("zero divisors", format!("{} elements", summary.zero_divisor_count)),
            ];
            if let Some(p) = &summary.predicates {
                rows.push(("field", yn(p.is_field).into()));
                rows.push(("von neumann regular", yn(p.is_von_neumann_regular).into()));
                rows.push(("un-ring", yn(p.is_un_ring).into()));
                rows.push(("reduced", yn(p.is_reduced).into()));
                rows.push(("domain", yn(p.is_domain).into()));
            }
            print!("{}", kv_rows(a.format, &rows));
        }
    }
    Ok(0)
}

fn kv_rows(format: Format, rows: &[(&str, String)]) -> String {
    let mut out = String::new();
    if format == Format::Markdown {
        out.push_str("| field | value |\n|---|---|\n");
        for (k, v) in rows {
            out.push_str(&format!("| {k} | {v} |\n"));
        }
    } else {
        out.push_str("field,value\n");
        for (k, v) in rows {
            out.push_str(&format!("{},{}\n", csv_field(k), csv_field(v)));
        }
    }
    out
}

// ---------------------------------------------------------------------
// classify

fn cmd_classify(a: ClassifyArgs) -> Result<u8> {
    let spec = load_spec(a.zn, a.spec)?;
    let caps = Caps::from_env();
    let built = build_ring(&spec, &caps)?;
    let ring = built.ring.clone();
    let gens: Vec<usize> = a.ideal.iter().map(|&g| g as usize).collect();
    for &g in &gens {
        ring.check_elem(g)?;
    }
    let ideal = Ideal::generate(&ring, &gens)?;
    let mult = match &a.mult {
        Some(seed) => {
            let seed: Vec<usize> = seed.iter().map(|&s| s as usize).collect();
            for &s in &seed {
                ring.check_elem(s)?;
            }
            Some(MultSet::close(&ring, &seed)?)
        }
        None => None,
    };
    let report = classify_ideal(&ideal, mult.as_ref())?;
    match a.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        Format::Text => print!("{}", classify_text(&report)),
        Format::Csv | Format::Markdown => print!("{}", classify_rows(a.format, &report)),
    }
    Ok(0)
}

fn outcome_note(p: &crate::classify::PredicateOutcome) -> String {
    if p.holds {
        if p.witness_labels.is_empty() {
            String::new()
        } else {
            format!("  witnesses: {}", p.witness_labels.join(", "))
        }
    } else if let Some((a, b)) = &p.counterexample_labels {
        format!("  counterexample: ({a}, {b})")
    } else {
        String::new()
    }
}

fn classify_text(r: &IdealReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("ring: {}\n", r.ring));
    out.push_str(&format!("order: {}\n", r.order));
    let ideal_elems: Vec<String> = r.ideal_elements.iter().map(|e| e.to_string()).collect();
    out.push_str(&format!("ideal: {} = {{{}}}\n", r.ideal, ideal_elems.join(", ")));
    out.push_str(&format!("radical: {}\n", r.radical));
    let nil: Vec<String> = r.nilradical_elements.iter().map(|e| e.to_string()).collect();
    out.push_str(&format!("nilradical: {{{}}}\n", nil.join(", ")));
    if let Some(m) = &r.multset {
        out.push_str(&format!(
            "mult set ({}): {}  [disjoint from ideal: {}; within units: {}]\n",
            m.elements.len(),
            m.labels.join(", "),
            yn(m.disjoint_from_ideal),
            yn(m.within_units),
        ));
    }
    for p in &r.predicates {
        out.push_str(&format!("{}: {}{}\n", p.predicate, yn(p.holds), outcome_note(p)));
    }
    if let Some(s) = r.least_s_scaling_into_nilradical {
        out.push_str(&format!("least s with s*I nilpotent: {s}\n"));
    }
    for c in &r.colon_by_witness {
        out.push_str(&format!("(I : {}) = {}\n", c.s_label, c.display));
    }
    out
}

fn classify_rows(format: Format, r: &IdealReport) -> String {
    let mut out = String::new();
    if format == Format::Markdown {
        out.push_str(&format!("ring: {}, order {}, ideal {}\n\n", r.ring, r.order, r.ideal));
        out.push_str("| predicate | holds | witnesses | counterexample |\n|---|---|---|---|\n");
    } else {
        out.push_str("predicate,holds,witnesses,counterexample\n");
    }
    for p in &r.predicates {
        let w = p.witness_labels.join(" ");
        let c = p
            .counterexample_labels
            .as_ref()
            .map(|(a, b)| format!("({a}, {b})"))
            .unwrap_or_default();
        if format == Format::Markdown {
            out.push_str(&format!("| {} | {} | {} | {} |\n", p.predicate, yn(p.holds), w, c));
        } else {
            out.push_str(&format!(
                "{},{},{},{}\n",
                csv_field(&p.predicate),
                yn(p.holds),
                csv_field(&w),
                csv_field(&c)
            ));
        }
    }
    out
}

// ---------------------------------------------------------------------
// table

#[derive(Serialize)]
struct TableRow {
    n: u64,
    p: Vec<u64>,
    regime: ZnRegime,
    generators: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

fn cofactor_sets(n: u64, singletons_only: bool) -> Vec<Vec<u64>> {
    let primes: Vec<u64> = factorize(n).into_iter().map(|(p, _)| p).collect();
    if singletons_only {
        return primes.iter().map(|&p| vec![p]).collect();
    }
    let mut subs: Vec<Vec<u64>> = (1u32..(1 << primes.len()))
        .map(|mask| {
            primes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect()
        })
        .collect();
    subs.sort_by(|a: &Vec<u64>, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    subs
}

fn cmd_table(a: TableArgs) -> Result<u8> {
    let (lo, hi) = match (a.n, a.max) {
        (Some(n), _) => (n, n),
        (None, Some(max)) => (a.min, max),
        (None, None) => return Err(Error::InvalidSpec("give --n or --max".into())),
    };
    if lo < 2 || lo > hi {
        return Err(Error::InvalidSpec(format!("bad modulus range {lo}..={hi}")));
    }
    let mut rows = Vec::new();
    for n in lo..=hi {
        for p_set in cofactor_sets(n, a.all_prime_cofactors) {
            let cls = zn_fast_classify(n, &p_set)?;
            let verified = if a.verify {
                Some(zn_brute_force_sn(n, &p_set)? == cls.generators)
            } else {
                None
            };
            rows.push(TableRow { n, p: p_set, regime: cls.regime, generators: cls.generators, verified });
        }
    }
    let gens_disp = |r: &TableRow| -> String {
        if r.regime == ZnRegime::None {
            "-".to_string()
        } else {
            let g: Vec<String> = r.generators.iter().map(|d| format!("\u{27e8}{d}\u{27e9}")).collect();
            g.join(", ")
        }
    };
    let p_disp = |r: &TableRow| -> String {
        let p: Vec<String> = r.p.iter().map(|p| p.to_string()).collect();
        format!("{{{}}}", p.join(","))
    };
    match a.format {
        Format::Json => {
            let doc = serde_json::json!({ "schema": "zn-table/1", "rows": rows });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Markdown => {
            let mut out = String::new();
            if a.verify {
                out.push_str("| n | P | regime | S-n ideals | agrees |\n|--:|---|---|---|---|\n");
            } else {
                out.push_str("| n | P | regime | S-n ideals |\n|--:|---|---|---|\n");
            }
            for r in &rows {
                out.push_str(&format!("| {} | {} | {} | {} |", r.n, p_disp(r), r.regime, gens_disp(r)));
                if let Some(v) = r.verified {
                    out.push_str(&format!(" {} |", yn(v)));
                }
                out.push('\n');
            }
            print!("{out}");
        }
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                out.push_str(&format!("Z_{}  P={}  {}  {}", r.n, p_disp(r), r.regime, gens_disp(r)));
                if let Some(v) = r.verified {
                    out.push_str(if v { "  [scanner agrees]" } else { "  [SCANNER DISAGREES]" });
                }
                out.push('\n');
            }
            print!("{out}");
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(if a.verify {
                "n,P,regime,generators,agrees\n"
            } else {
                "n,P,regime,generators\n"
            });
            for r in &rows {
                let p: Vec<String> = r.p.iter().map(|p| p.to_string()).collect();
                let g: Vec<String> = r.generators.iter().map(|d| d.to_string()).collect();
                out.push_str(&format!("{},{},{},{}", r.n, p.join(" "), r.regime, g.join(" ")));
                if let Some(v) = r.verified {
                    out.push_str(&format!(",{}", yn(v)));
                }
                out.push('\n');
            }
            print!("{out}");
        }
    }
    let all_agree = rows.iter().all(|r| r.verified.unwrap_or(true));
    Ok(if all_agree { 0 } else { 1 })
}

// ---------------------------------------------------------------------
// verify

fn cmd_verify(a: VerifyArgs) -> Result<u8> {
    let mut corpus = match &a.corpus {
        Some(path) => {
            let body = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&body)
                .map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))?
        }
        None => CorpusSpec::default(),
    };
    if let Some(n) = a.max_n {
        corpus.zn_max = n;
    }
    let mut ids: Vec<String> = a.checks.clone();
    ids.extend(a.check_flags.iter().cloned());
    if a.examples {
        ids.push("EXAMPLES".to_string());
    }
    let everything = ids.is_empty() || ids.iter().any(|s| s.eq_ignore_ascii_case("all"));
    if !everything {
        for id in &ids {
            if find_check(id).is_none() {
                return Err(Error::UnknownCheck(id.clone()));
            }
        }
    }
    let store = LabStore::new(Caps::from_env());
    let reports: Vec<CheckReport> = if everything {
        run_all(&corpus, &store, a.progress)?
    } else {
        let mut out = Vec::with_capacity(ids.len());
        for id in &ids {
            let report = run_check(id, &corpus, &store)?;
            if a.progress {
                eprintln!(
                    "{}: {} instances, {} violations ({} ms)",
                    report.id,
                    report.instances,
                    report.violations.len(),
                    report.elapsed_ms
                );
            }
            out.push(report);
        }
        out
    };
    match a.format {
        Format::Text => print!("{}", render_text(&reports)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&render_json(&reports)).unwrap()),
        Format::Csv | Format::Markdown => {
            let mut out = String::new();
            if a.format == Format::Markdown {
                out.push_str("| check | instances | passes | skipped | findings | violations |\n");
                out.push_str("|---|--:|--:|--:|--:|--:|\n");
            } else {
                out.push_str("check,instances,passes,skipped,findings,violations\n");
            }
            for r in &reports {
                if a.format == Format::Markdown {
                    out.push_str(&format!(
                        "| {} | {} | {} | {} | {} | {} |\n",
                        r.id,
                        r.instances,
                        r.passes,
                        r.skipped,
                        r.findings.len(),
                        r.violations.len()
                    ));
                } else {
                    out.push_str(&format!(
                        "{},{},{},{},{},{}\n",
                        r.id,
                        r.instances,
                        r.passes,
                        r.skipped,
                        r.findings.len(),
                        r.violations.len()
                    ));
                }
            }
            print!("{out}");
        }
    }
    Ok(if crate::theorems::total_violations(&reports) == 0 { 0 } else { 1 })
}
