//! Permutations on `0..degree` and disjoint-cycle notation.
//!
//! Permutations are stored as image maps: `images[i]` is where point `i`
//! goes. Composition is left-to-right (`a.then(b)` applies `a` first),
//! matching a right action of the group on points.

use std::fmt;

use crate::error::GroupError;

/// A permutation of `0..degree`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    /// Identity permutation on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image map, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &img) in images.iter().enumerate() {
            if img as usize >= n || seen[img as usize] {
                return Err(GroupError::NotBijective { point: i });
            }
            seen[img as usize] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// Composition applying `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u32 == img)
    }

    /// Disjoint-cycle rendering over 1-based points, e.g. `(1 2)(3 4)`.
    /// The identity renders as `()`.
    pub fn cycle_string(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut point = start;
            let mut first = true;
            loop {
                seen[point] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&(point + 1).to_string());
                first = false;
                point = self.apply(point);
                if point == start {
                    break;
                }
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]", self.cycle_string())
    }
}

/// A set of permutation generators on a common degree: the input to
/// group construction.
#[derive(Clone, Debug)]
pub struct PermGenSet {
    pub degree: usize,
    pub generators: Vec<Perm>,
}

impl PermGenSet {
    /// Validates degrees and bijectivity (bijectivity is enforced by
    /// `Perm` itself; degree mismatches are caught here).
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::InvalidDegree { degree });
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(PermGenSet { degree, generators })
    }

    /// Convenience: build generators from 0-based cycle lists, e.g.
    /// `&[&[0, 1]]` for a transposition.
    pub fn from_cycles(degree: usize, cycles: &[&[&[usize]]]) -> Result<Self, GroupError> {
        let mut gens = Vec::with_capacity(cycles.len());
        for gen_cycles in cycles {
            gens.push(perm_from_cycles(degree, gen_cycles)?);
        }
        PermGenSet::new(degree, gens)
    }
}

/// Builds one permutation from a list of 0-based cycles. Points repeated
/// across (or within) the cycles of one generator are rejected.
pub fn perm_from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Perm, GroupError> {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut touched = vec![false; degree];
    for cycle in cycles {
        for (i, &pt) in cycle.iter().enumerate() {
            if pt >= degree {
                return Err(GroupError::PointOutOfRange { point: pt, degree });
            }
            if touched[pt] {
                return Err(GroupError::OverlappingCycles { point: pt });
            }
            touched[pt] = true;
            let next = cycle[(i + 1) % cycle.len()];
            if next >= degree {
                return Err(GroupError::PointOutOfRange { point: next, degree });
            }
            images[pt] = next as u32;
        }
    }
    Perm::from_images(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_left_to_right() {
        let a = perm_from_cycles(3, &[&[0, 1]]).unwrap();
        let b = perm_from_cycles(3, &[&[0, 1, 2]]).unwrap();
        // apply (0 1) then (0 1 2): 0 -> 1 -> 2
        assert_eq!(a.then(&b).apply(0), 2);
        // apply (0 1 2) then (0 1): 0 -> 1 -> 0
        assert_eq!(b.then(&a).apply(0), 0);
        assert_eq!(b.then(&a).apply(2), 1);
    }

    #[test]
    fn inverse_roundtrip() {
        let b = perm_from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        assert!(b.then(&b.inverse()).is_identity());
        assert!(b.inverse().then(&b).is_identity());
    }

    #[test]
    fn overlapping_cycles_rejected() {
        let err = perm_from_cycles(4, &[&[0, 1], &[1, 2]]).unwrap_err();
        assert!(matches!(err, GroupError::OverlappingCycles { point: 1 }));
    }

    #[test]
    fn cycle_string_is_one_based() {
        let p = perm_from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        assert_eq!(p.cycle_string(), "(1 2)(3 4)");
        assert_eq!(Perm::identity(4).cycle_string(), "()");
    }
}
