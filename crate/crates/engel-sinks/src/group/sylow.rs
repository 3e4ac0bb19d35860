//! Sylow subgroups by normalizer extension, p-cores, the Fitting
//! subgroup, and Fitting height.

use crate::error::GroupError;
use crate::group::{p_part, prime_factors, GroupTable, SubgroupHandle};

impl GroupTable {
    /// A Sylow p-subgroup, built by normalizer extension: starting from
    /// `<x>` for the first element of order `p`, repeatedly pick the
    /// lowest-index element of the normalizer whose p-th power falls in
    /// the current subgroup and extend, until the full p-part is reached.
    /// Deterministic given the table. Returns the trivial subgroup when
    /// `p` does not divide the order.
    pub fn sylow_subgroup(&self, p: usize) -> SubgroupHandle {
        let target = p_part(self.order(), p);
        if target == 1 {
            return self.trivial_subgroup();
        }
        // lowest-index element of order p: take the first element whose
        // order is divisible by p and power it down.
        let seed = (0..self.order())
            .find_map(|x| {
                let ord = self.element_order(x);
                if ord % p == 0 {
                    Some(self.power(x, ord / p))
                } else {
                    None
                }
            })
            .expect("Cauchy guarantees an element of order p");
        let mut current = self.closure_unchecked(&[seed]);
        while current.order() < target {
            let normalizer = self.normalizer(&current);
            let mask = current.member_mask();
            let extend = normalizer
                .elements()
                .iter()
                .copied()
                .find(|&z| !mask[z] && mask[self.power(z, p)])
                .expect("normalizer growth provides a p-extension");
            let mut seeds = current.generators().to_vec();
            seeds.push(extend);
            let next = self.closure_unchecked(&seeds);
            debug_assert_eq!(next.order(), current.order() * p);
            current = next;
        }
        current
    }

    /// `O_p(G)`: intersection of the conjugates of one Sylow p-subgroup.
    pub fn p_core(&self, p: usize) -> SubgroupHandle {
        let sylow = self.sylow_subgroup(p);
        let mut core = sylow.clone();
        for y in 0..self.order() {
            if core.is_trivial() {
                break;
            }
            core = core.intersect(&sylow.conjugate_by(self, y));
        }
        core
    }

    /// The Fitting subgroup `F(G) = <O_p(G) : p | |G|>`.
    pub fn fitting_subgroup(&self) -> SubgroupHandle {
        let mut seeds = Vec::new();
        for (p, _) in prime_factors(self.order()) {
            seeds.extend_from_slice(self.p_core(p).elements());
        }
        self.closure_unchecked(&seeds)
    }

    /// Ascending Fitting series `1 = F_0 <= F_1 <= ...` where
    /// `F_{i+1}/F_i = F(G/F_i)`, as parent-level handles. Stops when the
    /// series reaches `G` or stalls (insoluble).
    pub fn ascending_fitting_series(&self) -> Vec<SubgroupHandle> {
        let mut terms = vec![self.trivial_subgroup()];
        loop {
            let current = terms.last().unwrap();
            if current.is_full() {
                break;
            }
            let quotient = self
                .quotient_group(current)
                .expect("Fitting terms are normal");
            let next_layer = quotient.group.fitting_subgroup();
            let next = quotient.preimage(self, &next_layer);
            if next.order() == current.order() {
                break; // stalled: F(G/F_i) trivial on a nontrivial quotient
            }
            terms.push(next);
        }
        terms
    }

    /// Fitting height of a soluble group: the length of the ascending
    /// Fitting series.
    pub fn fitting_height(&self) -> Result<usize, GroupError> {
        let series = self.ascending_fitting_series();
        if !series.last().unwrap().is_full() {
            return Err(GroupError::NotSoluble);
        }
        Ok(series.len() - 1)
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
    fn sylow_of_p_group_is_everything() {
        let c8 = build(8, &[&[&[0, 1, 2, 3, 4, 5, 6, 7]]]);
        assert!(c8.sylow_subgroup(2).is_full());
    }

    #[test]
    fn sylow_2_of_s4_has_order_8() {
        let g = s4();
        let p = g.sylow_subgroup(2);
        assert_eq!(p.order(), 8);
        // dihedral of order 8: non-abelian, exponent 4
        let (t, _) = g.subgroup_table(&p);
        assert!(!t.is_abelian());
        assert_eq!(t.exponent(), 4);
    }

    #[test]
    fn sylow_7_of_order_21_group_is_normal() {
        let g = build(7, &[&[&[0, 1, 2, 3, 4, 5, 6]], &[&[1, 2, 4], &[3, 6, 5]]]);
        let p = g.sylow_subgroup(7);
        assert_eq!(p.order(), 7);
        assert!(g.is_normal(&p));
        assert_eq!(g.p_core(7).order(), 7);
    }

    #[test]
    fn sylow_for_non_divisor_is_trivial() {
        let g = s3();
        assert!(g.sylow_subgroup(5).is_trivial());
    }

    #[test]
    fn sylow_conjugates_share_order() {
        let g = s4();
        let p = g.sylow_subgroup(3);
        assert_eq!(p.order(), 3);
        for y in 0..g.order() {
            assert_eq!(p.conjugate_by(&g, y).order(), 3);
        }
    }

    #[test]
    fn p_core_is_normal_and_inside_sylow_conjugates(){
        let g = s4();
        let core = g.p_core(2);
        assert_eq!(core.order(), 4);
        assert!(g.is_normal(&core));
        let sylow = g.sylow_subgroup(2);
        for y in 0..g.order() {
            assert!(sylow.conjugate_by(&g, y).contains_all(&core));
        }
        assert!(g.p_core(3).is_trivial());
    }

    #[test]
    fn fitting_subgroup_of_s4_is_klein() {
        let g = s4();
        let f = g.fitting_subgroup();
        assert_eq!(f.order(), 4);
        let (t, _) = g.subgroup_table(&f);
        assert!(t.is_nilpotent());
    }

    #[test]
    fn fitting_heights() {
        assert_eq!(s3().fitting_height().unwrap(), 2);
        assert_eq!(s4().fitting_height().unwrap(), 3);
        let q8_like = build(8, &[&[&[0, 1, 2, 3, 4, 5, 6, 7]]]);
        assert_eq!(q8_like.fitting_height().unwrap(), 1);
    }

    #[test]
    fn fitting_height_rejects_insoluble() {
        let a5 = build(5, &[&[&[0, 1, 2]], &[&[0, 1, 2, 3, 4]]]);
        assert_eq!(a5.fitting_height(), Err(GroupError::NotSoluble));
    }

    #[test]
    fn ascending_and_descending_fitting_lengths_agree() {
        for g in [s3(), s4()] {
            let ascending = g.fitting_height().unwrap();
            let descending = g.lower_fitting_series().strict_length();
            assert_eq!(ascending, descending);
        }
    }
}
