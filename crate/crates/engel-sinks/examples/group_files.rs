//! The group-file format end to end: write both flavors (cycle
//! generators and a raw Cayley table), load them back, and show the
//! line-numbered diagnostics on malformed input.
//!
//! ```sh
//! cargo run -p engel-sinks --example group_files
//! ```

use engel_sinks::corpus::{load_group, parse_group_text};
use engel_sinks::group::BuildOptions;

fn main() {
    let opts = BuildOptions::default();
    let dir = std::env::temp_dir().join("engel-sinks-example");
    std::fs::create_dir_all(&dir).unwrap();

    // cycle-notation flavor: one generator per line, 1-based points
    let cycles_path = dir.join("s3.group");
    std::fs::write(&cycles_path, "# S3 on three points\ndegree: 3\n(1 2)\n(1 2 3)\n").unwrap();
    let s3 = load_group(&cycles_path, &opts).unwrap();
    println!("{}: order {}", cycles_path.display(), s3.order());

    // Cayley-table flavor: header then rows of 0-based indices
    let table_path = dir.join("klein.group");
    std::fs::write(
        &table_path,
        "cayley: 4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n",
    )
    .unwrap();
    let klein = load_group(&table_path, &opts).unwrap();
    println!(
        "{}: order {}, exponent {}",
        table_path.display(),
        klein.order(),
        klein.exponent()
    );

    // rejections carry line numbers
    for bad in [
        "degree: 4\n(1 2)(2 3)\n",      // overlapping cycles in one generator
        "degree: 3\n(1 4)\n",           // point out of range
        "cayley: 2\n0 1\n1 1\n",        // not a Latin square
        "size: 3\n",                    // unknown header
    ] {
        match parse_group_text(bad, &opts) {
            Ok(_) => println!("unexpectedly accepted {bad:?}"),
            Err(e) => println!("rejected as expected: {e}"),
        }
    }
}
