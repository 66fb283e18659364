//! Acceptance run: every bundled suite, one line per criterion with its timing.

use std::io::Write;
use torsidl::suites::{corpora_dir, run_suite, SUITES};

#[test]
fn acceptance_criteria() {
    let dir = corpora_dir(None);
    // Written to the raw stdout handle so the lines show up without --nocapture.
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (i, (name, description, budget)) in SUITES.iter().enumerate() {
        let o = run_suite(name, &dir).expect("suite names come from the suite table");
        let budget = budget.map_or("no limit".to_string(), |b| format!("limit {b} s"));
        let status = if o.passed { "PASS" } else { "FAIL" };
        let secs = o.elapsed_ms as f64 / 1000.0;
        let checks = o.checks.len();
        writeln!(out, "criterion {}: {status} {name}: {description} [{checks} checks, {secs:.2} s, {budget}]", i + 1)
            .unwrap();
        for c in o.checks.iter().filter(|c| !c.passed) {
            writeln!(out, "    failed: {} {}", c.name, c.detail).unwrap();
        }
        if !o.passed {
            failed.push(*name);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
