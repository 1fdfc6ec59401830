use std::io::Write;

use discarr::acceptance::{run_criterion, CRITERIA, DEFAULT_SEED};

#[test]
fn acceptance_suite() {
    let mut out = std::io::stdout();
    let mut failed = Vec::new();
    for &(id, _, _) in &CRITERIA {
        let r = run_criterion(id, DEFAULT_SEED).expect("known criterion");
        writeln!(out, "{}", r.line()).unwrap();
        out.flush().unwrap();
        if !r.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
