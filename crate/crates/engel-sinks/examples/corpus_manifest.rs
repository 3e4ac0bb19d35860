//! Prints the built-in corpus manifest, one JSON object per line:
//! `{"id","family","params","order","gamma_inf_order"}`.
//!
//! The committed copy lives at `data/corpus_manifest.jsonl`; regenerate
//! it with
//!
//! ```sh
//! cargo run -p engel-sinks --example corpus_manifest > crates/engel-sinks/data/corpus_manifest.jsonl
//! ```

use engel_sinks::corpus;
use engel_sinks::BuildOptions;

fn main() {
    let manifest =
        corpus::render_manifest(&BuildOptions::default()).expect("the built-in corpus builds");
    print!("{manifest}");
}
