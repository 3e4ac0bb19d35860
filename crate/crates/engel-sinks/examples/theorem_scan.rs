//! The aggregate verification run: every built-in group is checked for
//! the cyclic-sink hypothesis, the headline implication (cyclic sinks
//! force a cyclic residual), and the companion claim suites. This is the
//! library-API equivalent of `engel-sinks scan --all`.
//!
//! ```sh
//! cargo run --release -p engel-sinks --example theorem_scan
//! ```

use engel_sinks::cli::{scan_corpus, ClaimSuites};

fn main() {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let document = scan_corpus(&[], &ClaimSuites::all(), jobs, false, true).unwrap();

    println!(
        "{:<12} {:>6} {:>11} {:>10}  claims",
        "group", "order", "hypothesis", "residual"
    );
    for report in &document.groups {
        let claims: Vec<String> = report
            .lemmas
            .iter()
            .map(|(k, v)| format!("{k}:{}", v.as_str()))
            .collect();
        println!(
            "{:<12} {:>6} {:>11} {:>7}{:<3}  {}",
            report.group,
            report.order,
            if report.hypothesis { "holds" } else { "fails" },
            report.gamma_inf.order,
            if report.gamma_inf.cyclic { "(c)" } else { "" },
            claims.join(" ")
        );
    }

    println!("\naggregate:");
    for (claim, counts) in &document.aggregate {
        println!(
            "  {:<8} pass {:>3}  fail {:>3}  inconclusive {:>3}",
            claim, counts.pass, counts.fail, counts.inconclusive
        );
    }
    if document.violations.is_empty() {
        println!("violations: none");
    } else {
        println!("violations: {:?}", document.violations);
        std::process::exit(1);
    }
}
