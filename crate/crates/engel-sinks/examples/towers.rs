//! Towers of prime-power subgroups: exact verification of the three
//! defining conditions and the best-effort search along the
//! iterated-residual chain, including the height-3 tower inside the
//! order-24 symmetric group.
//!
//! ```sh
//! cargo run -p engel-sinks --example towers
//! ```

use engel_sinks::corpus::{find_builtin, make_group};
use engel_sinks::engel::{find_tower, verify_tower};
use engel_sinks::group::BuildOptions;

fn main() {
    let opts = BuildOptions::default();

    for id in ["C12", "S3", "S4", "S4xC3", "A5"] {
        let g = make_group(&find_builtin(id).unwrap(), &opts).unwrap();
        println!("{id} (order {}):", g.order());
        for height in 1..=3usize {
            match find_tower(&g, height) {
                Some(tower) => {
                    let orders: Vec<usize> = tower.stages.iter().map(|s| s.order()).collect();
                    let ok = verify_tower(&g, &tower.stages);
                    println!("  height {height}: stage orders {orders:?}, verified: {ok}");
                }
                None => println!("  height {height}: none found"),
            }
        }
    }

    // hand-built tower in S3: a Sylow 2 on top of the rotation subgroup
    let s3 = make_group(&find_builtin("S3").unwrap(), &opts).unwrap();
    let p1 = s3.subgroup_closure(&[1]).unwrap();
    let p2 = s3.sylow_subgroup(3);
    println!(
        "\nhand-built tower [C2, C3] in S3 verifies: {}",
        verify_tower(&s3, &[p1.clone(), p2.clone()])
    );
    println!(
        "reversed stages [C3, C2] verify: {}",
        verify_tower(&s3, &[p2, p1])
    );
}
