//! Index growth of iterated action-commutator submodules of `Z/p^k`:
//! for a unit `b`, the n-th submodule `{x (b-1)^n}` has index `p^(n*v)`
//! with `v = v_p(b-1)`, until the precision ceiling — at which point the
//! explicit marker comes back and the caller raises `k`.
//!
//! ```sh
//! cargo run -p engel-sinks --example padic_index_growth
//! ```

use engel_sinks::padic::{
    commutator_submodule_index, valuation, SubmoduleIndex, TruncatedPadicUnit, Valuation,
};

fn main() {
    let (p, b, k) = (3u64, 4u64, 8u32);
    let unit = TruncatedPadicUnit::from_u64(p, k, b).unwrap();
    let v = match valuation(p, b as i64 - 1) {
        Valuation::Finite(v) => v,
        Valuation::Infinite => unreachable!("b != 1"),
    };
    println!("p = {p}, b = {b}, v_p(b-1) = {v}, precision {p}^{k}");
    println!("{:>3} {:>14} {:>10}", "n", "outcome", "index");
    for n in 1..=10 {
        match commutator_submodule_index(&unit, n) {
            SubmoduleIndex::Exponent(e) => {
                println!("{n:>3} {:>14} {:>10}", format!("e = {e}"), format!("{p}^{e}"))
            }
            SubmoduleIndex::PrecisionExhausted => {
                println!("{n:>3} {:>14} {:>10}", "exhausted", "-");
            }
            SubmoduleIndex::Central => println!("{n:>3} {:>14} {:>10}", "central", "-"),
        }
    }

    // raising the precision extends the visible range without changing
    // the values already seen
    let fine = unit.at_precision(20).unwrap();
    println!("\nat precision {p}^20:");
    for n in [2u64, 8, 12, 19] {
        println!("  n = {n:>2}: {:?}", commutator_submodule_index(&fine, n));
    }

    // a central action: every commutator vanishes
    let central = TruncatedPadicUnit::from_u64(3, 8, 1).unwrap();
    println!("\nb = 1: {:?}", commutator_submodule_index(&central, 3));
}
