//! Full-corpus run of every registered check.

use snideal::{run_all, total_violations, Caps, CorpusSpec, LabStore, Status};

#[test]
fn full_corpus_run_is_clean() {
    let corpus = CorpusSpec::default();
    let store = LabStore::new(Caps::default());
    let reports = run_all(&corpus, &store, false).expect("corpus run");
    for r in &reports {
        println!(
            "{:<16} {:>6} instances {:>6} passes {:>5} skipped {:>3} findings {:>3} violations ({} ms)",
            r.id,
            r.instances,
            r.passes,
            r.skipped,
            r.findings.len(),
            r.violations.len(),
            r.elapsed_ms,
        );
        for v in &r.violations {
            println!("  VIOLATION {}: {}", v.instance.key(), v.detail);
        }
    }
    for r in &reports {
        assert!(r.instances > 0, "{} generated no instances", r.id);
    }
    assert_eq!(total_violations(&reports), 0, "corpus run must be violation-free");
    let subset = reports.iter().find(|r| r.id == "SUBSET-CONVERSE").expect("registered");
    assert!(!subset.findings.is_empty(), "the pinned subset separation must be found");
    let ama = reports.iter().find(|r| r.id == "AMA-NONEQUIV").expect("registered");
    assert!(!ama.findings.is_empty(), "the pinned wide/glued separation must be found");
}

#[test]
fn replay_agrees_with_recorded_findings() {
    let corpus = CorpusSpec {
        zn_max: 16,
        ..CorpusSpec::default()
    };
    let store = LabStore::new(Caps::default());
    let fresh = LabStore::new(Caps::default());
    let mut replayed = 0;
    for id in ["SUBSET-CONVERSE", "AMA-NONEQUIV"] {
        let report = snideal::run_check(id, &corpus, &store).expect("corpus run");
        for rec in &report.findings {
            let eval = snideal::replay(&rec.instance, &fresh).expect("replay");
            assert_eq!(eval.status, Status::Found, "replay of {}", rec.instance.key());
            replayed += 1;
        }
    }
    assert!(replayed > 0, "expected at least one retained instance to replay");
}
