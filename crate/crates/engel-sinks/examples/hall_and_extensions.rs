//! The two instance checks feeding the `2.5` and `ord` claim suites:
//! the Hall-commutator covering `P = [P, H]` of the residual's Sylow
//! subgroups, and the bounded-class / series-containment facts for
//! groups generated by a normal nilpotent subgroup and one element.
//!
//! ```sh
//! cargo run -p engel-sinks --example hall_and_extensions
//! ```

use engel_sinks::corpus::{find_builtin, make_group};
use engel_sinks::engel::{
    check_hall_commutator_covering, check_normal_nilpotent_extension, discover_hall_subgroup,
};
use engel_sinks::group::{prime_factors, BuildOptions};

fn main() {
    let opts = BuildOptions::default();

    println!("Hall commutator covering, per metanilpotent group and prime:");
    for id in ["S3", "C7:C3", "D30", "A4", "S3xC4", "D10xC6"] {
        let g = make_group(&find_builtin(id).unwrap(), &opts).unwrap();
        for (p, _) in prime_factors(g.order()) {
            let hall = discover_hall_subgroup(&g, p);
            let outcome = check_hall_commutator_covering(&g, p, None).unwrap();
            println!(
                "  {id:<8} p = {p:>2}: Hall order {:>3}, outcome {outcome:?}",
                hall.map(|h| h.order()).unwrap_or(0),
            );
        }
    }

    println!("\nnormal nilpotent base plus one element:");
    for id in ["S3", "C7:C3", "D30", "A4"] {
        let g = make_group(&find_builtin(id).unwrap(), &opts).unwrap();
        let base = g.fitting_subgroup();
        let a = (0..g.order())
            .find(|&a| {
                let mut seeds = base.elements().to_vec();
                seeds.push(a);
                g.subgroup_closure(&seeds).unwrap().is_full()
            })
            .expect("these groups are base-plus-one-element");
        for n in 1..=2 {
            let report = check_normal_nilpotent_extension(&g, &base, a, n).unwrap();
            println!(
                "  {id:<8} base order {:>3} (class {}), a = {a}, n = {n}: \
                 least f with series term inside E_n: {:?}, Engel bound: {:?}",
                base.order(),
                report.base_class,
                report.minimal_series_index,
                report.engel_bound.map(|b| b.holds)
            );
        }
    }
}
