//! The structural toolkit on one group: lower central and derived
//! series, the residual, Sylow subgroups, p-cores, the Fitting subgroup,
//! Fitting height, and quotients.
//!
//! ```sh
//! cargo run -p engel-sinks --example series_and_structure [ID]
//! ```

use engel_sinks::corpus::{find_builtin, make_group};
use engel_sinks::group::{prime_factors, BuildOptions};

fn main() {
    let id = std::env::args().nth(1).unwrap_or_else(|| "S4".to_string());
    let spec = find_builtin(&id).unwrap_or_else(|| {
        eprintln!("unknown id {id:?}; try S4, D30, C7:C3, ...");
        std::process::exit(2);
    });
    let g = make_group(&spec, &BuildOptions::default()).unwrap();
    println!("{id}: order {}", g.order());

    let lcs = g.lower_central_series();
    let orders: Vec<usize> = lcs.terms.iter().map(|t| t.order()).collect();
    println!("lower central series orders: {orders:?}");
    let residual = g.gamma_infinity();
    println!(
        "residual: order {}, cyclic: {}",
        residual.order(),
        g.is_cyclic_subgroup(&residual)
    );

    let ds = g.derived_series();
    let orders: Vec<usize> = ds.terms.iter().map(|t| t.order()).collect();
    println!("derived series orders:       {orders:?}");
    println!(
        "soluble: {}, nilpotent: {}, metanilpotent: {}, metabelian: {}",
        g.is_soluble(),
        g.is_nilpotent(),
        g.is_metanilpotent(),
        g.is_metabelian()
    );

    for (p, _) in prime_factors(g.order()) {
        let sylow = g.sylow_subgroup(p);
        let core = g.p_core(p);
        println!(
            "p = {p}: Sylow order {}, core order {}",
            sylow.order(),
            core.order()
        );
    }

    let fitting = g.fitting_subgroup();
    println!("Fitting subgroup order: {}", fitting.order());
    match g.fitting_height() {
        Ok(h) => {
            println!("Fitting height: {h}");
            let chain = g.lower_fitting_series();
            let orders: Vec<usize> = chain.terms.iter().map(|t| t.order()).collect();
            println!("iterated-residual chain orders: {orders:?}");
        }
        Err(e) => println!("Fitting height: {e}"),
    }

    if !residual.is_trivial() && !residual.is_full() {
        let quotient = g.quotient_group(&residual).unwrap();
        println!(
            "G / residual: order {}, nilpotent: {}",
            quotient.group.order(),
            quotient.group.is_nilpotent()
        );
    }
}
