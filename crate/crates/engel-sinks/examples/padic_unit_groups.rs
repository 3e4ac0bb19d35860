//! Structure of the unit groups `(Z/p^k)^*`: cyclic of order
//! `(p-1) p^(k-1)` for odd primes, and `C2 x C_{2^(k-2)}` for `p = 2`
//! once `k >= 3` — the finite truncations of the procyclic automorphism
//! group picture, with the small-k exceptions at `p = 2` shown
//! explicitly.
//!
//! ```sh
//! cargo run -p engel-sinks --example padic_unit_groups
//! ```

use engel_sinks::padic::unit_group_structure;

fn main() {
    println!("{:>3} {:>3} {:>10} {:<22} {}", "p", "k", "order", "invariant factors", "shape");
    for p in [3u64, 5, 7] {
        for k in 1..=5u32 {
            let s = unit_group_structure(p, k).unwrap();
            let inv: Vec<String> = s.invariant_factors.iter().map(|d| d.to_string()).collect();
            println!(
                "{:>3} {:>3} {:>10} {:<22} {}",
                p,
                k,
                s.order.to_string(),
                inv.join(" | "),
                s.display()
            );
        }
    }
    println!("\np = 2 (the stable pattern starts at k = 3):");
    for k in 1..=8u32 {
        let s = unit_group_structure(2, k).unwrap();
        let inv: Vec<String> = s.invariant_factors.iter().map(|d| d.to_string()).collect();
        println!(
            "{:>3} {:>3} {:>10} {:<22} {}",
            2,
            k,
            s.order.to_string(),
            inv.join(" | "),
            s.display()
        );
    }

    // the generator-verified path handles moduli far beyond enumeration
    let s = unit_group_structure(3, 40).unwrap();
    println!("\n(Z/3^40)^*: order {}, {}", s.order, s.display());
}
