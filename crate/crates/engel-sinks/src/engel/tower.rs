//! Towers of prime-power subgroups: exact verification and a best-effort
//! search along the iterated-residual series.

use crate::group::{prime_factors, GroupTable, SubgroupHandle};

/// A system of prime-power subgroups `P_1, ..., P_k` where every earlier
/// stage normalizes every later one and each later stage is recovered as
/// the residual of its product with the stage above:
/// `P_{i+1} = γ∞(P_{i+1} P_i)`.
#[derive(Clone, Debug)]
pub struct Tower {
    pub stages: Vec<SubgroupHandle>,
}

impl Tower {
    pub fn height(&self) -> usize {
        self.stages.len()
    }
}

/// Checks the three tower conditions exactly.
pub fn verify_tower(group: &GroupTable, stages: &[SubgroupHandle]) -> bool {
    if stages.is_empty() {
        return false;
    }
    // nontrivial prime-power orders
    for stage in stages {
        if stage.is_trivial() || prime_factors(stage.order()).len() != 1 {
            return false;
        }
    }
    // downward normalization
    for i in 0..stages.len() {
        for j in i + 1..stages.len() {
            let mask = stages[j].member_mask();
            let normalizes = stages[i]
                .elements()
                .iter()
                .all(|&g| stages[j].elements().iter().all(|&h| mask[group.conjugate(h, g)]));
            if !normalizes {
                return false;
            }
        }
    }
    // residual recovery on adjacent stages
    for i in 0..stages.len() - 1 {
        let mut seeds = stages[i + 1].elements().to_vec();
        seeds.extend_from_slice(stages[i].elements());
        let product = group.closure_unchecked(&seeds);
        let (table, embed) = group.subgroup_table(&product);
        let residual = group.lift_handle(&table.gamma_infinity(), &embed);
        if !residual.same_elements(&stages[i + 1]) {
            return false;
        }
    }
    true
}

/// Best-effort tower search: stages are assembled bottom-up from Sylow
/// subgroups of the iterated-residual layers, restricted to the common
/// normalizer of the stages already chosen, with lowest-prime-first tie
/// breaking. May return `None` even when a tower exists; whatever it
/// returns has passed [`verify_tower`].
pub fn find_tower(group: &GroupTable, height: usize) -> Option<Tower> {
    if height == 0 {
        return None;
    }
    let chain = group.lower_fitting_series();
    if !chain.stabilized_at_trivial() {
        return None; // insoluble: the residual chain stalls
    }
    let full_height = chain.strict_length();
    if height > full_height {
        return None;
    }
    let offset = full_height - height;

    let mut stages: Vec<SubgroupHandle> = Vec::new(); // built deepest-first
    let mut below_prime: Option<usize> = None;
    for i in (1..=height).rev() {
        let ambient = &chain.terms[offset + i - 1];
        let layer = ambient.order() / chain.terms[offset + i].order();
        // restrict to elements normalizing every stage already chosen
        let mut allowed = ambient.clone();
        for stage in &stages {
            allowed = allowed.intersect(&group.normalizer(stage));
        }
        let mut primes: Vec<usize> = prime_factors(layer).into_iter().map(|(p, _)| p).collect();
        primes.retain(|&p| Some(p) != below_prime && allowed.order() % p == 0);

        let mut chosen: Option<(usize, SubgroupHandle)> = None;
        for &p in &primes {
            let (table, embed) = group.subgroup_table(&allowed);
            let candidate = group.lift_handle(&table.sylow_subgroup(p), &embed);
            if candidate.is_trivial() {
                continue;
            }
            if let Some(last) = stages.last() {
                // adjacent condition: the stage below must be the residual
                // of its product with this candidate
                let mut seeds = last.elements().to_vec();
                seeds.extend_from_slice(candidate.elements());
                let product = group.closure_unchecked(&seeds);
                let (pt, pembed) = group.subgroup_table(&product);
                let residual = group.lift_handle(&pt.gamma_infinity(), &pembed);
                if !residual.same_elements(last) {
                    continue;
                }
            }
            chosen = Some((p, candidate));
            break;
        }
        let (p, stage) = chosen?;
        below_prime = Some(p);
        stages.push(stage);
    }
    stages.reverse();
    if verify_tower(group, &stages) {
        Some(Tower { stages })
    } else {
        None
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
    fn nilpotent_group_has_height_one_tower() {
        let c12 = build(12, &[&[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]]]);
        let tower = find_tower(&c12, 1).unwrap();
        assert_eq!(tower.height(), 1);
        // lowest prime first: the Sylow 2-subgroup
        assert_eq!(tower.stages[0].order(), 4);
        assert!(verify_tower(&c12, &tower.stages));
    }

    #[test]
    fn s3_height_two_tower() {
        let g = s3();
        let tower = find_tower(&g, 2).unwrap();
        let orders: Vec<usize> = tower.stages.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![2, 3]);
        assert!(verify_tower(&g, &tower.stages));
    }

    #[test]
    fn s3_manual_tower_verifies() {
        let g = s3();
        let p1 = g.subgroup_closure(&[1]).unwrap(); // a Sylow 2
        let a3 = g.sylow_subgroup(3);
        assert!(verify_tower(&g, &[p1, a3]));
    }

    #[test]
    fn tower_stage_order_matters_in_s4() {
        // [V4, C3] fails: V4 does not normalize the chosen C3, and the
        // residual of their product recovers V4 rather than C3. The
        // reversed pair [C3, V4] meets all three conditions.
        let g = s4();
        let v4 = g.p_core(2);
        let c3 = g.sylow_subgroup(3);
        assert!(!verify_tower(&g, &[v4.clone(), c3.clone()]));
        assert!(verify_tower(&g, &[c3, v4]));
    }

    #[test]
    fn s4_yields_height_three_tower() {
        let g = s4();
        let tower = find_tower(&g, 3).unwrap();
        assert_eq!(tower.height(), 3);
        let orders: Vec<usize> = tower.stages.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![2, 3, 4]);
        assert!(verify_tower(&g, &tower.stages));
    }

    #[test]
    fn insoluble_group_yields_no_tower() {
        let a5 = build(5, &[&[&[0, 1, 2]], &[&[0, 1, 2, 3, 4]]]);
        for k in 1..=3 {
            assert!(find_tower(&a5, k).is_none());
        }
    }

    #[test]
    fn height_above_fitting_height_yields_none() {
        assert!(find_tower(&s3(), 3).is_none());
    }
}
