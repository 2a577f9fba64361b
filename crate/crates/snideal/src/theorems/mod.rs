//! Executable check registry over a generated corpus of finite rings.
//!
//! Every check pairs a generator with an evaluator. The generator walks
//! the corpus and emits self-contained instances (ring spec plus element
//! lists); the evaluator re-derives everything from one instance. A
//! violation therefore replays in isolation from its serialization alone,
//! and the whole report is deterministic for a fixed corpus spec.
//!
//! Instance data keys are small: `"s"` and `"t"` hold multiplicative-set
//! element lists, `"ideal"` holds an ideal's element list, `"part"` selects
//! a sub-claim, and expected values are spelled out (`"expect_gens"`, ...)
//! so tampering with a serialized instance is caught on replay.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, MultSet};
use crate::ring::{Elem, RingSpec};

pub mod corpus;
pub mod lab;

mod checks_basic;
mod checks_ext;
mod checks_transfer;
mod checks_zn;
mod examples;

pub use corpus::CorpusSpec;
pub use lab::{Lab, LabStore};

/// One testable instance of a check: the ring it runs on plus whatever
/// element lists the evaluator needs. Serialization is the replay format.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub check: String,
    pub ring: RingSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, Vec<u64>>,
}

impl Instance {
    pub fn new(check: &str, ring: RingSpec) -> Instance {
        Instance { check: check.to_string(), ring, data: BTreeMap::new() }
    }

    pub fn put(mut self, key: &str, values: Vec<u64>) -> Instance {
        self.data.insert(key.to_string(), values);
        self
    }

    /// Canonical serialization; the sort key for report merging.
    pub fn key(&self) -> String {
        serde_json::to_string(self).expect("instances serialize")
    }

    pub fn field(&self, key: &str) -> Result<&Vec<u64>> {
        self.data
            .get(key)
            .ok_or_else(|| Error::Precondition(format!("instance is missing field '{key}'")))
    }

    pub fn one(&self, key: &str) -> Result<u64> {
        let v = self.field(key)?;
        if v.len() != 1 {
            return Err(Error::Precondition(format!(
                "instance field '{key}' holds {} values, expected 1",
                v.len()
            )));
        }
        Ok(v[0])
    }

    pub fn elems(&self, key: &str, order: usize) -> Result<Vec<Elem>> {
        let v = self.field(key)?;
        let mut out = Vec::with_capacity(v.len());
        for &x in v {
            if x as usize >= order {
                return Err(Error::IndexRange { index: x as usize, order });
            }
            out.push(x as Elem);
        }
        Ok(out)
    }

    pub fn elemset(&self, key: &str, order: usize) -> Result<ElemSet> {
        Ok(ElemSet::from_iter(order, self.elems(key, order)?))
    }

    /// Rebuilds a multiplicative set from a field, re-validating closure.
    pub fn multset(&self, key: &str, lab: &Lab) -> Result<MultSet> {
        MultSet::from_elements(lab.ring(), &self.elemset(key, lab.ring().order())?)
    }

    /// Rebuilds an ideal from a field, re-validating the ideal axioms.
    pub fn ideal(&self, key: &str, lab: &Lab) -> Result<Ideal> {
        Ideal::from_elements(lab.ring(), &self.elemset(key, lab.ring().order())?)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The claim held (or its hypothesis was empty; see the `vacuous` tag).
    Pass,
    /// The instance cannot exercise the claim; the note says why.
    Skip,
    /// A search instance that located what it was looking for.
    Found,
    /// The claim failed. Always an implementation bug, never a refutation.
    Violation,
}

/// Evaluator outcome for one instance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Eval {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Eval {
    pub fn pass() -> Eval {
        Eval { status: Status::Pass, tags: Vec::new(), note: None }
    }

    pub fn tagged(self, tag: &str) -> Eval {
        let mut tags = self.tags;
        tags.push(tag.to_string());
        Eval { tags, ..self }
    }

    pub fn skip(reason: &str) -> Eval {
        Eval { status: Status::Skip, tags: Vec::new(), note: Some(reason.to_string()) }
    }

    pub fn found(detail: String) -> Eval {
        Eval { status: Status::Found, tags: Vec::new(), note: Some(detail) }
    }

    pub fn violation(detail: String) -> Eval {
        Eval { status: Status::Violation, tags: Vec::new(), note: Some(detail) }
    }
}

pub const TAG_COLLAPSED: &str = "collapsed-regime";
pub const TAG_VACUOUS: &str = "vacuous";

/// A retained instance: a violation or a search finding.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub instance: Instance,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
    pub detail: String,
}

/// Aggregated result of one check over the corpus.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub summary: String,
    pub instances: u64,
    pub passes: u64,
    pub skipped: u64,
    pub tag_counts: BTreeMap<String, u64>,
    pub skip_reasons: BTreeMap<String, u64>,
    pub findings: Vec<InstanceRecord>,
    pub violations: Vec<InstanceRecord>,
    pub elapsed_ms: u64,
}

impl CheckReport {
    fn new(id: &str, summary: &str) -> CheckReport {
        CheckReport {
            id: id.to_string(),
            summary: summary.to_string(),
            instances: 0,
            passes: 0,
            skipped: 0,
            tag_counts: BTreeMap::new(),
            skip_reasons: BTreeMap::new(),
            findings: Vec::new(),
            violations: Vec::new(),
            elapsed_ms: 0,
        }
    }

    fn absorb(&mut self, instance: Instance, eval: Eval) {
        self.instances += 1;
        for tag in &eval.tags {
            *self.tag_counts.entry(tag.clone()).or_insert(0) += 1;
        }
        match eval.status {
            Status::Pass => self.passes += 1,
            Status::Skip => {
                self.skipped += 1;
                let reason = eval.note.unwrap_or_else(|| "unspecified".to_string());
                *self.skip_reasons.entry(reason).or_insert(0) += 1;
            }
            Status::Found => {
                self.findings.push(InstanceRecord {
                    instance,
                    tags: eval.tags,
                    detail: eval.note.unwrap_or_default(),
                });
            }
            Status::Violation => {
                self.violations.push(InstanceRecord {
                    instance,
                    tags: eval.tags,
                    detail: eval.note.unwrap_or_default(),
                });
            }
        }
    }
}

/// Instances stream from generator to evaluator through this sink, so a
/// run never materializes a whole corpus sweep in memory.
pub type Sink<'a> = dyn FnMut(Instance) -> Result<()> + 'a;

pub struct CheckDef {
    pub id: &'static str,
    pub summary: &'static str,
    pub gen: fn(&CorpusSpec, &LabStore, &mut Sink) -> Result<()>,
    pub eval: fn(&Instance, &LabStore) -> Result<Eval>,
}

/// Registry order is fixed; reports and the CLI list checks in this order.
pub fn all_checks() -> &'static [CheckDef] {
    &REGISTRY
}

static REGISTRY: &[CheckDef] = &[
    checks_basic::T_P1,
    checks_basic::T_CHAR,
    checks_basic::T_CHAR2,
    checks_basic::T_COLON,
    checks_basic::T_REG,
    checks_basic::T_UN,
    checks_basic::T_INTEG,
    checks_zn::T_ZN,
    checks_zn::T_ZNGEN,
    checks_basic::T_MAX,
    checks_basic::T_PROD,
    checks_basic::T_FAM,
    checks_basic::T_SUBSET,
    checks_basic::T_SAT,
    checks_transfer::T_LOC,
    checks_transfer::T_LOC_IFF,
    checks_transfer::T_HOM,
    checks_transfer::T_QUOT,
    checks_basic::T_SUM,
    checks_transfer::T_CART,
    checks_transfer::T_CROSS_NEG,
    checks_transfer::T_CROSS_POS,
    checks_ext::T_IDL,
    checks_ext::T_ID,
    checks_ext::T_AMA,
    checks_ext::T_AMA2,
    checks_ext::T_AMA_CORS,
    checks_ext::T_CONSTRUCT,
    examples::EXAMPLES,
    examples::SUBSET_CONVERSE,
    examples::AMA_NONEQUIV,
    examples::IDEALIZ_CONVERSE,
];

pub fn find_check(id: &str) -> Option<&'static CheckDef> {
    REGISTRY.iter().find(|c| c.id == id)
}

/// Runs one check over the corpus, streaming instances straight into its
/// evaluator. Violations and findings are sorted by instance serialization
/// so reports merge deterministically.
pub fn run_check(id: &str, corpus: &CorpusSpec, store: &LabStore) -> Result<CheckReport> {
    let def = find_check(id).ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
    let started = Instant::now();
    let mut report = CheckReport::new(def.id, def.summary);
    {
        let mut sink = |instance: Instance| -> Result<()> {
            let eval = (def.eval)(&instance, store)?;
            report.absorb(instance, eval);
            Ok(())
        };
        (def.gen)(corpus, store, &mut sink)?;
    }
    report.violations.sort_by(|a, b| a.instance.key().cmp(&b.instance.key()));
    report.findings.sort_by(|a, b| a.instance.key().cmp(&b.instance.key()));
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// Runs the whole registry in order. Progress (with timings) goes to
/// stderr only, keeping stdout byte-stable across runs.
pub fn run_all(corpus: &CorpusSpec, store: &LabStore, progress: bool) -> Result<Vec<CheckReport>> {
    let mut out = Vec::with_capacity(REGISTRY.len());
    for def in REGISTRY {
        let report = run_check(def.id, corpus, store)?;
        if progress {
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
    Ok(out)
}

/// Re-evaluates a serialized instance in isolation.
pub fn replay(instance: &Instance, store: &LabStore) -> Result<Eval> {
    let def = find_check(&instance.check)
        .ok_or_else(|| Error::UnknownCheck(instance.check.clone()))?;
    (def.eval)(instance, store)
}

pub fn total_violations(reports: &[CheckReport]) -> usize {
    reports.iter().map(|r| r.violations.len()).sum()
}

/// Human-readable report. Deliberately omits timings so two runs over the
/// same corpus emit identical bytes.
pub fn render_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!("{}  {}\n", r.id, r.summary));
        out.push_str(&format!(
            "  instances {}  passes {}  skipped {}  findings {}  violations {}\n",
            r.instances,
            r.passes,
            r.skipped,
            r.findings.len(),
            r.violations.len()
        ));
        if !r.tag_counts.is_empty() {
            let tags: Vec<String> =
                r.tag_counts.iter().map(|(t, n)| format!("{t} x{n}")).collect();
            out.push_str(&format!("  tags: {}\n", tags.join(", ")));
        }
        for (reason, n) in &r.skip_reasons {
            out.push_str(&format!("  skipped: {reason} x{n}\n"));
        }
        for f in &r.findings {
            out.push_str(&format!("  found: {}\n    instance: {}\n", f.detail, f.instance.key()));
        }
        for v in &r.violations {
            out.push_str(&format!(
                "  VIOLATION: {}\n    instance: {}\n",
                v.detail,
                v.instance.key()
            ));
        }
        out.push('\n');
    }
    let instances: u64 = reports.iter().map(|r| r.instances).sum();
    out.push_str(&format!(
        "total: {} checks, {} instances, {} violations\n",
        reports.len(),
        instances,
        total_violations(reports)
    ));
    out
}

/// JSON report; includes timings, which the text form omits.
pub fn render_json(reports: &[CheckReport]) -> serde_json::Value {
    serde_json::json!({
        "schema": "verify-report/1",
        "checks": reports,
        "total_instances": reports.iter().map(|r| r.instances).sum::<u64>(),
        "total_violations": total_violations(reports),
    })
}
