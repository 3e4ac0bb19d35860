//! Coprime actions by conjugation: the fixed-point product and
//! commutator stability identities, their quotient form, the cyclic
//! refinements, normal p-complements, and the complement criterion
//! probe.
//!
//! ```sh
//! cargo run -p engel-sinks --example coprime_actions
//! ```

use engel_sinks::corpus::{find_builtin, make_group};
use engel_sinks::engel::{
    cyclic_automorphisms_commute, frobenius_complement_probe, harvest_coprime_instances,
    normal_p_complement, CoprimeActionInstance,
};
use engel_sinks::group::BuildOptions;

fn main() {
    let opts = BuildOptions::default();

    // the fixed-point-free action of C3 on C7 inside the order-21 group
    let g21 = make_group(&find_builtin("C7:C3").unwrap(), &opts).unwrap();
    let target = g21.sylow_subgroup(7);
    let actors = g21.sylow_subgroup(3);
    let instance = CoprimeActionInstance::new(&g21, target, actors).unwrap();
    println!(
        "C7 acted on by C3: fixed points {}, [N,A] order {}",
        instance.fixed_points().order(),
        instance.action_commutators().order()
    );
    println!("identity checks: {:?}", instance.run_checks());

    // harvested instances across a few groups
    for id in ["S4", "C30", "D30", "S3xC4"] {
        let g = make_group(&find_builtin(id).unwrap(), &opts).unwrap();
        let instances = harvest_coprime_instances(&g, 8);
        let all_pass = instances.iter().all(|i| i.run_checks().all_pass());
        println!("{id}: {} instances harvested, all pass: {all_pass}", instances.len());
    }

    // automorphisms of a cyclic subgroup commute: the rotation C8 of D16
    // under its involutions
    let d16 = make_group(&find_builtin("D16").unwrap(), &opts).unwrap();
    let cyclic_c8 = (0..d16.order())
        .find(|&x| d16.element_order(x) == 8)
        .map(|x| d16.subgroup_closure(&[x]).unwrap())
        .unwrap();
    let involutions: Vec<usize> = (0..d16.order())
        .filter(|&x| d16.element_order(x) == 2)
        .collect();
    println!(
        "\nD16: induced automorphisms of its C8 commute: {:?}",
        cyclic_automorphisms_commute(&d16, &cyclic_c8, &involutions)
    );

    // normal 2-complements: present in S3, absent in S4
    for id in ["S3", "S4", "Q8"] {
        let g = make_group(&find_builtin(id).unwrap(), &opts).unwrap();
        match normal_p_complement(&g, 2) {
            Some(k) => println!("{id}: normal 2-complement of order {}", k.order()),
            None => println!("{id}: no normal 2-complement"),
        }
        println!(
            "{id}: complement criterion probe: {:?}",
            frobenius_complement_probe(&g, 2, 64)
        );
    }
}
