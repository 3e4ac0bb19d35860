//! Quotient groups by verified-normal subgroups, and the Frattini
//! quotient of a p-group.

use crate::error::GroupError;
use crate::group::{p_part, BuildOptions, GroupTable, SubgroupHandle};

/// A quotient table together with the projection from parent indices to
/// quotient indices. Coset 0 is the image of the identity; cosets are
/// numbered by their smallest parent element.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: GroupTable,
    pub projection: Vec<usize>,
    /// Smallest parent element of each coset.
    pub representatives: Vec<usize>,
}

impl Quotient {
    /// Pulls a subgroup of the quotient back to the parent.
    pub fn preimage(&self, parent: &GroupTable, sub: &SubgroupHandle) -> SubgroupHandle {
        let mask = sub.member_mask();
        let elements: Vec<usize> = (0..parent.order())
            .filter(|&x| mask[self.projection[x]])
            .collect();
        SubgroupHandle::from_parts(elements.clone(), elements, parent.order())
    }

    /// Image of a parent subgroup in the quotient.
    pub fn image(&self, sub: &SubgroupHandle) -> SubgroupHandle {
        let elements: Vec<usize> = sub.elements().iter().map(|&x| self.projection[x]).collect();
        SubgroupHandle::from_parts(elements, vec![], self.group.order())
    }
}

impl GroupTable {
    /// Coset multiplication table for `G / N`. Fails if `N` is not
    /// normal.
    pub fn quotient_group(&self, normal: &SubgroupHandle) -> Result<Quotient, GroupError> {
        if !self.is_normal(normal) {
            return Err(GroupError::NotNormal {
                sub: normal.order(),
                order: self.order(),
            });
        }
        let n = self.order();
        let mut projection = vec![usize::MAX; n];
        let mut representatives = Vec::new();
        for x in 0..n {
            if projection[x] != usize::MAX {
                continue;
            }
            let id = representatives.len();
            representatives.push(x);
            for &h in normal.elements() {
                projection[self.mul(x, h)] = id;
            }
        }
        let m = representatives.len();
        let mut mul = vec![0u32; m * m];
        for a in 0..m {
            for b in 0..m {
                mul[a * m + b] = projection[self.mul(representatives[a], representatives[b])] as u32;
            }
        }
        let rows: Vec<Vec<usize>> = (0..m)
            .map(|a| (0..m).map(|b| mul[a * m + b] as usize).collect())
            .collect();
        let mut group = GroupTable::from_cayley_table(&rows, &BuildOptions::default())?;
        let labels = representatives
            .iter()
            .map(|&r| match self.label(r) {
                Some(l) => format!("{l}*N"),
                None => format!("{r}*N"),
            })
            .collect();
        group.set_labels(Some(labels));
        Ok(Quotient {
            group,
            projection,
            representatives,
        })
    }

    /// True iff the order is a power of `p` for the given prime.
    pub fn is_p_group(&self, p: usize) -> bool {
        p_part(self.order(), p) == self.order()
    }

    /// The unique prime `p` with `|G| = p^a`, if any (nontrivial groups).
    pub fn p_group_prime(&self) -> Option<usize> {
        let factors = super::prime_factors(self.order());
        match factors.as_slice() {
            [(p, _)] => Some(*p),
            _ => None,
        }
    }

    /// Quotient of a p-group by its Frattini subgroup
    /// `Φ(P) = <commutators, p-th powers>`; the result is elementary
    /// abelian.
    pub fn frattini_quotient(&self) -> Result<GroupTable, GroupError> {
        let p = self
            .p_group_prime()
            .ok_or(GroupError::NotPGroup { order: self.order() })?;
        let full = self.full_subgroup();
        let mut seeds = Vec::new();
        for x in 0..self.order() {
            for y in 0..self.order() {
                let c = self.commutator(x, y);
                if c != 0 {
                    seeds.push(c);
                }
            }
            let xp = self.power(x, p);
            if xp != 0 {
                seeds.push(xp);
            }
        }
        seeds.sort_unstable();
        seeds.dedup();
        let frattini = self.closure_unchecked(&seeds);
        debug_assert!(full.contains_all(&frattini));
        Ok(self.quotient_group(&frattini)?.group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::BuildOptions;
    use crate::perm::PermGenSet;

    fn build(degree: usize, cycles: &[&[&[usize]]]) -> GroupTable {
        let gens = PermGenSet::from_cycles(degree, cycles).unwrap();
        GroupTable::from_generators(&gens, &BuildOptions::default()).unwrap()
    }

    fn s3() -> GroupTable {
        build(3, &[&[&[0, 1]], &[&[0, 1, 2]]])
    }

    fn s4() -> GroupTable {
        build(4, &[&[&[0, 1]], &[&[0, 1, 2, 3]]])
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = s3();
        let q = g.quotient_group(&g.full_subgroup()).unwrap();
        assert_eq!(q.group.order(), 1);
    }

    #[test]
    fn s3_mod_a3_is_c2() {
        let g = s3();
        let a3 = g
            .subgroup_closure(&(0..6).filter(|&x| g.element_order(x) == 3).collect::<Vec<_>>())
            .unwrap();
        let q = g.quotient_group(&a3).unwrap();
        assert_eq!(q.group.order(), 2);
        assert_eq!(q.projection[0], 0);
        // order arithmetic: |G| = |N| * |G/N|
        assert_eq!(g.order(), a3.order() * q.group.order());
    }

    #[test]
    fn s4_mod_klein_looks_like_s3() {
        let g = s4();
        // the Klein subgroup of S4: identity plus the three double
        // transpositions, i.e. the non-identity elements of order 2 whose
        // conjugacy class has size 3.
        let double_transpositions: Vec<usize> = (0..24)
            .filter(|&x| {
                g.element_order(x) == 2
                    && (0..24).filter(|&y| g.conjugate(x, y) != x).count() == 16
            })
            .collect();
        assert_eq!(double_transpositions.len(), 3);
        let v4 = g.subgroup_closure(&double_transpositions).unwrap();
        assert_eq!(v4.order(), 4);
        let q = g.quotient_group(&v4).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian());
    }

    #[test]
    fn non_normal_subgroup_rejected() {
        let g = s3();
        let t = g.subgroup_closure(&[1]).unwrap();
        assert!(matches!(
            g.quotient_group(&t),
            Err(GroupError::NotNormal { .. })
        ));
    }

    #[test]
    fn frattini_of_c4_is_c2_quotient() {
        let c4 = build(4, &[&[&[0, 1, 2, 3]]]);
        let q = c4.frattini_quotient().unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn frattini_of_elementary_abelian_is_identity_quotient() {
        let rows = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        let v4 = GroupTable::from_cayley_table(&rows, &BuildOptions::default()).unwrap();
        let q = v4.frattini_quotient().unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.exponent(), 2);
    }

    #[test]
    fn frattini_rejects_mixed_order() {
        let g = s3();
        assert!(matches!(
            g.frattini_quotient(),
            Err(GroupError::NotPGroup { order: 6 })
        ));
    }
}
