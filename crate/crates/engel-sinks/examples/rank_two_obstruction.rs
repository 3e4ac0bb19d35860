//! The rank-2 obstruction: when two nontrivial unit actions live on
//! independent procyclic coordinates, the diagonal action traps a rank-2
//! submodule at every commutator depth — the span
//! `{((ba-1)^n, 0), (0, (bb-1)^n)}` inside `(Z/p^k)^2` needs two
//! generators whenever the precision can see both coordinates. A rank-2
//! set can never generate a procyclic (one-generator) module.
//!
//! ```sh
//! cargo run -p engel-sinks --example rank_two_obstruction
//! ```

use num_bigint::BigInt;

use engel_sinks::padic::{
    diagonal_sink_rank, min_generators, smith_invariant_factors, ModuleSpan, RankOutcome,
    TruncatedPadicUnit,
};

fn main() {
    let (p, k) = (3u64, 6u32);
    let unit_a = TruncatedPadicUnit::from_u64(p, k, 4).unwrap();
    let unit_b = TruncatedPadicUnit::from_u64(p, k, 7).unwrap();
    println!("p = {p}, precision {p}^{k}, ba = 4, bb = 7");
    for n in 1..=6 {
        println!(
            "  n = {n}: diagonal rank {:?}",
            diagonal_sink_rank(&unit_a, &unit_b, n).unwrap()
        );
    }

    // one trivial direction drops the rank to 1; two drop it to 0
    let one = TruncatedPadicUnit::from_u64(p, k, 1).unwrap();
    println!(
        "ba = 1: {:?}; both = 1: {:?}",
        diagonal_sink_rank(&one, &unit_b, 1).unwrap(),
        diagonal_sink_rank(&one, &one, 1).unwrap()
    );

    // behind the rank: Smith normal form over the integers
    let span = ModuleSpan::new(
        p,
        k,
        vec![
            vec![BigInt::from(3), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(6)],
        ],
    );
    let factors = smith_invariant_factors(span.rows());
    println!(
        "\nspan {{(3,0),(0,6)}}: invariant factors {factors:?}, min generators {}",
        min_generators(&span)
    );

    // insufficient precision is reported, never silently truncated
    let shallow_a = unit_a.at_precision(2).unwrap();
    let shallow_b = unit_b.at_precision(2).unwrap();
    match diagonal_sink_rank(&shallow_a, &shallow_b, 3).unwrap() {
        RankOutcome::PrecisionExhausted => {
            println!("at precision {p}^2, depth 3 is invisible: precision-exhausted")
        }
        RankOutcome::Rank(r) => println!("rank {r}"),
    }
}
