//! Deterministic constructors for the built-in group families, the
//! pinned regression manifest, and ingestion of user-supplied groups.
//!
//! Every algebraic family is realized as an explicit permutation
//! generating set and closed through the common table construction, so
//! all validation runs on one path. `make_group` is deterministic:
//! identical specs produce identical tables.

mod file;

pub use file::{load_group, parse_group_text};

use std::fmt;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::CorpusError;
use crate::group::{BuildOptions, GroupTable};
use crate::padic::is_prime;
use crate::perm::{Perm, PermGenSet};

/// A constructible group: a family with parameters, or a file source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// `C_n`, `n >= 1`.
    Cyclic(usize),
    /// Dihedral group of order `2 * half`, `half >= 3`.
    Dihedral { half: usize },
    /// Generalized quaternion group of 2-power order `>= 8`.
    GeneralizedQuaternion { order: usize },
    /// `S_n`, `n >= 2`.
    Symmetric(usize),
    /// `A_n`, `n >= 3`.
    Alternating(usize),
    /// Extraspecial group of order `p^3` and exponent `p`, odd prime `p`.
    Extraspecial { p: usize },
    /// `C_p x| C_q` with the generator of `C_q` acting as `x -> x^r`;
    /// requires `r^q = 1 (mod p)` and `r != 1 (mod p)`.
    SemidirectCyclic { p: usize, q: usize, r: usize },
    /// Direct product of two specs.
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    /// A group file in the documented format.
    FromFile(PathBuf),
}

impl GroupSpec {
    /// Canonical id, e.g. `C12`, `D12`, `Q16`, `S4`, `A5`, `E27`,
    /// `C7:C3`, `Q8xC3`.
    pub fn id(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("C{n}"),
            GroupSpec::Dihedral { half } => format!("D{}", 2 * half),
            GroupSpec::GeneralizedQuaternion { order } => format!("Q{order}"),
            GroupSpec::Symmetric(n) => format!("S{n}"),
            GroupSpec::Alternating(n) => format!("A{n}"),
            GroupSpec::Extraspecial { p } => format!("E{}", p * p * p),
            GroupSpec::SemidirectCyclic { p, q, .. } => format!("C{p}:C{q}"),
            GroupSpec::DirectProduct(a, b) => format!("{}x{}", a.id(), b.id()),
            GroupSpec::FromFile(path) => path.display().to_string(),
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            GroupSpec::Cyclic(_) => "cyclic",
            GroupSpec::Dihedral { .. } => "dihedral",
            GroupSpec::GeneralizedQuaternion { .. } => "generalized_quaternion",
            GroupSpec::Symmetric(_) => "symmetric",
            GroupSpec::Alternating(_) => "alternating",
            GroupSpec::Extraspecial { .. } => "extraspecial",
            GroupSpec::SemidirectCyclic { .. } => "semidirect_cyclic",
            GroupSpec::DirectProduct(..) => "direct_product",
            GroupSpec::FromFile(_) => "from_file",
        }
    }

    /// Family parameters as JSON-ready values.
    pub fn params(&self) -> serde_json::Value {
        use serde_json::json;
        match self {
            GroupSpec::Cyclic(n) => json!([n]),
            GroupSpec::Dihedral { half } => json!([half]),
            GroupSpec::GeneralizedQuaternion { order } => json!([order]),
            GroupSpec::Symmetric(n) => json!([n]),
            GroupSpec::Alternating(n) => json!([n]),
            GroupSpec::Extraspecial { p } => json!([p]),
            GroupSpec::SemidirectCyclic { p, q, r } => json!([p, q, r]),
            GroupSpec::DirectProduct(a, b) => json!([a.id(), b.id()]),
            GroupSpec::FromFile(path) => json!([path.display().to_string()]),
        }
    }

    fn invalid(&self, reason: impl Into<String>) -> CorpusError {
        CorpusError::InvalidParams {
            family: self.family().to_string(),
            reason: reason.into(),
        }
    }

    /// The permutation generating set realizing an algebraic family.
    pub fn perm_generators(&self) -> Result<PermGenSet, CorpusError> {
        match self {
            GroupSpec::Cyclic(n) => {
                if *n == 0 {
                    return Err(self.invalid("n must be at least 1"));
                }
                let gens = if *n == 1 {
                    Vec::new()
                } else {
                    vec![full_cycle(*n)]
                };
                Ok(PermGenSet::new(*n, gens)?)
            }
            GroupSpec::Dihedral { half } => {
                if *half < 3 {
                    return Err(self.invalid("half order must be at least 3"));
                }
                let n = *half;
                let rotation = full_cycle(n);
                let reflection =
                    Perm::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())?;
                Ok(PermGenSet::new(n, vec![rotation, reflection])?)
            }
            GroupSpec::GeneralizedQuaternion { order } => {
                if *order < 8 || !order.is_power_of_two() {
                    return Err(self.invalid("order must be a power of two, at least 8"));
                }
                Ok(quaternion_generators(*order))
            }
            GroupSpec::Symmetric(n) => {
                if *n < 2 {
                    return Err(self.invalid("n must be at least 2"));
                }
                let mut gens = vec![transposition(*n)];
                if *n > 2 {
                    gens.push(full_cycle(*n));
                }
                Ok(PermGenSet::new(*n, gens)?)
            }
            GroupSpec::Alternating(n) => {
                if *n < 3 {
                    return Err(self.invalid("n must be at least 3"));
                }
                let three_cycle = Perm::from_images(
                    (0..*n)
                        .map(|i| match i {
                            0 => 1u32,
                            1 => 2,
                            2 => 0,
                            other => other as u32,
                        })
                        .collect(),
                )?;
                let mut gens = vec![three_cycle];
                if *n > 3 {
                    // even n: cycle the points 1..n, odd n: all of them
                    let images: Vec<u32> = if n % 2 == 0 {
                        (0..*n)
                            .map(|i| {
                                if i == 0 {
                                    0
                                } else if i == n - 1 {
                                    1
                                } else {
                                    (i + 1) as u32
                                }
                            })
                            .collect()
                    } else {
                        (0..*n).map(|i| ((i + 1) % n) as u32).collect()
                    };
                    gens.push(Perm::from_images(images)?);
                }
                Ok(PermGenSet::new(*n, gens)?)
            }
            GroupSpec::Extraspecial { p } => {
                if *p < 3 || !is_prime(*p as u64) {
                    return Err(self.invalid("p must be an odd prime"));
                }
                Ok(heisenberg_generators(*p))
            }
            GroupSpec::SemidirectCyclic { p, q, r } => {
                if !is_prime(*p as u64) {
                    return Err(self.invalid("p must be prime"));
                }
                if *q < 2 {
                    return Err(self.invalid("q must be at least 2"));
                }
                let r = r % p;
                if r <= 1 {
                    return Err(self.invalid("r must differ from 1 modulo p"));
                }
                if pow_mod(r, *q, *p) != 1 {
                    return Err(self.invalid("r^q must be 1 modulo p"));
                }
                Ok(semidirect_generators(*p, *q, r))
            }
            GroupSpec::DirectProduct(a, b) => {
                let left = a.perm_generators()?;
                let right = b.perm_generators()?;
                Ok(direct_product_generators(&left, &right))
            }
            GroupSpec::FromFile(_) => Err(self.invalid(
                "file-backed specs are loaded, not generated; use make_group",
            )),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// Builds the group a spec describes.
pub fn make_group(spec: &GroupSpec, opts: &BuildOptions) -> Result<GroupTable, CorpusError> {
    match spec {
        GroupSpec::FromFile(path) => load_group(path, opts),
        _ => Ok(GroupTable::from_generators(&spec.perm_generators()?, opts)?),
    }
}

fn full_cycle(n: usize) -> Perm {
    Perm::from_images((0..n).map(|i| ((i + 1) % n) as u32).collect()).expect("cycle is a bijection")
}

fn transposition(n: usize) -> Perm {
    Perm::from_images(
        (0..n)
            .map(|i| match i {
                0 => 1u32,
                1 => 0,
                other => other as u32,
            })
            .collect(),
    )
    .expect("transposition is a bijection")
}

fn pow_mod(base: usize, exp: usize, modulus: usize) -> usize {
    let mut acc = 1usize;
    let mut base = base % modulus;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Right-regular representation of the generalized quaternion group:
/// elements are `a^i b^j` with `a` of order `order/2` and
/// `b^2 = a^(order/4)`, `a^b = a^-1`.
fn quaternion_generators(order: usize) -> PermGenSet {
    let h = order / 2; // order of a
    let t = order / 4; // b^2 = a^t
    let index = |i: usize, j: usize| i * 2 + j;
    let mult = |x: usize, y: usize| -> usize {
        let (i1, j1) = (x / 2, x % 2);
        let (i2, j2) = (y / 2, y % 2);
        if j1 == 0 {
            index((i1 + i2) % h, j2)
        } else if j2 == 0 {
            index((i1 + h - i2 % h) % h, 1)
        } else {
            index((i1 + h - i2 % h + t) % h, 0)
        }
    };
    let translation = |g: usize| -> Perm {
        Perm::from_images((0..order).map(|x| mult(x, g) as u32).collect())
            .expect("right translation is a bijection")
    };
    PermGenSet::new(order, vec![translation(index(1, 0)), translation(index(0, 1))])
        .expect("degrees agree")
}

/// Right-regular representation of the Heisenberg group modulo `p`:
/// triples `(x, y, z)` with `(x1,y1,z1)(x2,y2,z2) =
/// (x1+x2, y1+y2, z1+z2+x1*y2)`.
fn heisenberg_generators(p: usize) -> PermGenSet {
    let order = p * p * p;
    let index = |x: usize, y: usize, z: usize| (x * p + y) * p + z;
    let mult = |a: usize, b: usize| -> usize {
        let (x1, y1, z1) = (a / (p * p), a / p % p, a % p);
        let (x2, y2, z2) = (b / (p * p), b / p % p, b % p);
        index((x1 + x2) % p, (y1 + y2) % p, (z1 + z2 + x1 * y2) % p)
    };
    let translation = |g: usize| -> Perm {
        Perm::from_images((0..order).map(|a| mult(a, g) as u32).collect())
            .expect("right translation is a bijection")
    };
    PermGenSet::new(
        order,
        vec![translation(index(1, 0, 0)), translation(index(0, 1, 0))],
    )
    .expect("degrees agree")
}

/// `C_p x| C_q` on `p + q` points: the p-cycle on the first block, and
/// multiplication-by-r on it paired with a q-cycle on the second block
/// so the construction stays faithful even when the action is not.
fn semidirect_generators(p: usize, q: usize, r: usize) -> PermGenSet {
    let degree = p + q;
    let a = Perm::from_images(
        (0..degree)
            .map(|i| if i < p { ((i + 1) % p) as u32 } else { i as u32 })
            .collect(),
    )
    .expect("bijection");
    let b = Perm::from_images(
        (0..degree)
            .map(|i| {
                if i < p {
                    (i * r % p) as u32
                } else {
                    (p + (i - p + 1) % q) as u32
                }
            })
            .collect(),
    )
    .expect("r is invertible modulo p");
    PermGenSet::new(degree, vec![a, b]).expect("degrees agree")
}

fn direct_product_generators(left: &PermGenSet, right: &PermGenSet) -> PermGenSet {
    let degree = left.degree + right.degree;
    let mut generators = Vec::with_capacity(left.generators.len() + right.generators.len());
    for g in &left.generators {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for i in 0..left.degree {
            images[i] = g.apply(i) as u32;
        }
        generators.push(Perm::from_images(images).expect("bijection"));
    }
    for g in &right.generators {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for i in 0..right.degree {
            images[left.degree + i] = (left.degree + g.apply(i)) as u32;
        }
        generators.push(Perm::from_images(images).expect("bijection"));
    }
    PermGenSet::new(degree, generators).expect("degrees agree")
}

/// The built-in verification corpus: 42 groups across all families, with
/// orders up to 500.
pub fn builtin_corpus() -> Vec<GroupSpec> {
    use GroupSpec::*;
    let mut specs = vec![
        Cyclic(1),
        Cyclic(2),
        Cyclic(3),
        Cyclic(4),
        Cyclic(6),
        Cyclic(8),
        Cyclic(12),
        Cyclic(30),
        Cyclic(100),
        Cyclic(210),
        Cyclic(256),
        Dihedral { half: 3 },
        Dihedral { half: 4 },
        Dihedral { half: 5 },
        Dihedral { half: 6 },
        Dihedral { half: 8 },
        Dihedral { half: 15 },
        Dihedral { half: 21 },
        Dihedral { half: 64 },
        Dihedral { half: 125 },
        GeneralizedQuaternion { order: 8 },
        GeneralizedQuaternion { order: 16 },
        GeneralizedQuaternion { order: 32 },
        GeneralizedQuaternion { order: 64 },
        Symmetric(3),
        Symmetric(4),
        Symmetric(5),
        Alternating(4),
        Alternating(5),
        Extraspecial { p: 3 },
        Extraspecial { p: 5 },
        SemidirectCyclic { p: 7, q: 3, r: 2 },
        SemidirectCyclic { p: 5, q: 4, r: 2 },
        SemidirectCyclic { p: 13, q: 3, r: 3 },
        SemidirectCyclic { p: 11, q: 5, r: 3 },
        SemidirectCyclic { p: 19, q: 3, r: 7 },
        SemidirectCyclic { p: 23, q: 11, r: 2 },
    ];
    specs.push(DirectProduct(
        Box::new(GeneralizedQuaternion { order: 8 }),
        Box::new(Cyclic(3)),
    ));
    specs.push(DirectProduct(Box::new(Symmetric(3)), Box::new(Cyclic(4))));
    specs.push(DirectProduct(Box::new(Symmetric(4)), Box::new(Cyclic(3))));
    specs.push(DirectProduct(Box::new(Symmetric(3)), Box::new(Symmetric(3))));
    specs.push(DirectProduct(
        Box::new(Dihedral { half: 5 }),
        Box::new(Cyclic(6)),
    ));
    specs
}

/// Looks a spec up by its canonical id within the built-in corpus.
pub fn find_builtin(id: &str) -> Option<GroupSpec> {
    builtin_corpus().into_iter().find(|s| s.id() == id)
}

/// One line of the pinned corpus manifest.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ManifestEntry {
    pub id: String,
    pub family: String,
    pub params: serde_json::Value,
    pub order: usize,
    pub gamma_inf_order: usize,
}

/// Computes the manifest entry for one spec (building the group).
pub fn manifest_entry(spec: &GroupSpec, opts: &BuildOptions) -> Result<ManifestEntry, CorpusError> {
    let group = make_group(spec, opts)?;
    Ok(ManifestEntry {
        id: spec.id(),
        family: spec.family().to_string(),
        params: spec.params(),
        order: group.order(),
        gamma_inf_order: group.gamma_infinity().order(),
    })
}

/// Renders the whole built-in corpus manifest, one JSON object per line.
pub fn render_manifest(opts: &BuildOptions) -> Result<String, CorpusError> {
    let mut out = String::new();
    for spec in builtin_corpus() {
        let entry = manifest_entry(&spec, opts)?;
        out.push_str(&serde_json::to_string(&entry).expect("manifest serializes"));
        out.push('\n');
    }
    Ok(out)
}

/// The manifest committed with the crate, for regression comparison.
pub const PINNED_MANIFEST: &str = include_str!("../../data/corpus_manifest.jsonl");
