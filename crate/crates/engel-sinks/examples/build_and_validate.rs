//! Group construction and validation: close a permutation generating
//! set into a full multiplication table, validate a raw Cayley table,
//! and see the rejection paths fire.
//!
//! ```sh
//! cargo run -p engel-sinks --example build_and_validate
//! ```

use engel_sinks::group::{BuildOptions, GroupTable};
use engel_sinks::perm::PermGenSet;

fn main() {
    let opts = BuildOptions::default();

    // S3 from a transposition and a 3-cycle (0-based cycles)
    let gens = PermGenSet::from_cycles(3, &[&[&[0, 1]], &[&[0, 1, 2]]]).unwrap();
    let s3 = GroupTable::from_generators(&gens, &opts).unwrap();
    println!("closed <(0 1), (0 1 2)> into a group of order {}", s3.order());
    for x in 0..s3.order() {
        println!("  element {x}: {} (order {})", s3.label(x).unwrap(), s3.element_order(x));
    }

    // the order-21 semidirect product from its two generators
    let gens = PermGenSet::from_cycles(
        7,
        &[&[&[0, 1, 2, 3, 4, 5, 6]], &[&[1, 2, 4], &[3, 6, 5]]],
    )
    .unwrap();
    let g21 = GroupTable::from_generators(&gens, &opts).unwrap();
    println!(
        "\nclosed the doubling action on 7 points into order {} (abelian: {})",
        g21.order(),
        g21.is_abelian()
    );

    // a valid raw Cayley table: the Klein four group
    let klein = GroupTable::from_cayley_table(
        &[
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ],
        &opts,
    )
    .unwrap();
    println!("\nKlein table accepted: order {}, exponent {}", klein.order(), klein.exponent());

    // rejection: an idempotent non-identity entry breaks the Latin property
    let bad = GroupTable::from_cayley_table(&[vec![0, 1], vec![1, 1]], &opts);
    println!("bad table rejected: {}", bad.unwrap_err());

    // rejection: the size cap
    let gens = PermGenSet::from_cycles(7, &[&[&[0, 1, 2, 3, 4, 5, 6]]]).unwrap();
    let capped = GroupTable::from_generators(
        &gens,
        &BuildOptions {
            size_cap: 5,
            ..Default::default()
        },
    );
    println!("cap enforced: {}", capped.unwrap_err());
}
