//! Minimal Engel sinks up close: the stable-image computation, the
//! independent orbit-cycle oracle, Engel elements, the equivariance of
//! sinks under conjugation, and the measured relation between the sink
//! subgroup and the iterated-commutator subgroups.
//!
//! ```sh
//! cargo run -p engel-sinks --example engel_sinks_tour
//! ```

use engel_sinks::corpus::{find_builtin, make_group};
use engel_sinks::engel::{
    is_engel_element, iterated_commutator_subgroup, minimal_sink, sink_conjugation_equivariance,
    sink_containment, sink_orbit_oracle,
};
use engel_sinks::group::BuildOptions;

fn main() {
    let s3 = make_group(&find_builtin("S3").unwrap(), &BuildOptions::default()).unwrap();

    println!("element-by-element sinks in S3:");
    for g in 0..s3.order() {
        let sink = minimal_sink(&s3, g);
        let oracle = sink_orbit_oracle(&s3, g);
        assert_eq!(sink.elements, oracle, "the two constructions always agree");
        println!(
            "  g = {} {:<9} sink size {}, depth {}, <sink> order {}, cyclic {}, Engel {}",
            g,
            s3.label(g).unwrap(),
            sink.elements.len(),
            sink.depth,
            sink.generated.order(),
            sink.cyclic,
            is_engel_element(&s3, g),
        );
    }

    // a transposition has sink A3: every long-enough commutator [x,g,...,g]
    // lands there
    let sink = minimal_sink(&s3, 1);
    for x in 0..s3.order() {
        assert!(sink.contains(s3.iterated_commutator(x, 1, sink.depth.max(1))));
    }
    println!("definitional check: all long commutators land in the sink");

    println!(
        "sink conjugation equivariance on S3: {:?}",
        sink_conjugation_equivariance(&s3, 200)
    );

    // measured containments between <sink> and the iterated-commutator
    // subgroups (recorded, not asserted, in general)
    for n in 1..=3 {
        let c = sink_containment(&s3, 1, n);
        let en = iterated_commutator_subgroup(&s3, 1, n);
        println!(
            "n = {n}: |E_n| = {}, <sink> in E_n: {}, E_n in <sink>: {}",
            en.order(),
            c.generated_inside_iterated,
            c.iterated_inside_generated
        );
    }

    // a group where the hypothesis fails: some sink generates a
    // non-cyclic subgroup
    let s4 = make_group(&find_builtin("S4").unwrap(), &BuildOptions::default()).unwrap();
    let worst = (0..s4.order())
        .map(|g| minimal_sink(&s4, g))
        .max_by_key(|s| s.generated.order())
        .unwrap();
    println!(
        "\nS4: element {} has <sink> of order {} (cyclic: {}), so the cyclic-sink hypothesis fails",
        worst.owner,
        worst.generated.order(),
        worst.cyclic
    );
}
