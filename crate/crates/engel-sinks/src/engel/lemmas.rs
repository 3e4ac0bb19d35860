//! Instance checks for the structural claims that feed the scan suites:
//! the Hall-commutator covering of Sylow subgroups of the residual,
//! normality of iterated-commutator subgroups in metabelian groups, and
//! the bounded-class / series-containment facts for normal nilpotent
//! extensions by one element.

use crate::engel::iterated_commutator_subgroup;
use crate::error::GroupError;
use crate::group::{p_part, prime_factors, GroupTable, SubgroupHandle};

/// Outcome of [`check_hall_commutator_covering`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HallCoveringOutcome {
    /// `P = [P, H]` held.
    Pass,
    /// A Hall subgroup was found but the identity failed.
    Fail,
    /// No Hall p'-subgroup was discovered.
    Inconclusive,
}

/// For a metanilpotent group, checks that the Sylow p-subgroup `P` of
/// the residual satisfies `P = [P, H]` for a Hall p'-subgroup `H`.
/// If no Hall subgroup is supplied one is searched for: first as the
/// closure of the Sylow subgroups away from `p`, then (for small groups)
/// over two-generated subgroups of the right order.
pub fn check_hall_commutator_covering(
    group: &GroupTable,
    p: usize,
    hall: Option<&SubgroupHandle>,
) -> Result<HallCoveringOutcome, GroupError> {
    if !group.is_metanilpotent() {
        return Err(GroupError::NotMetanilpotent);
    }
    let coprime_part = group.order() / p_part(group.order(), p);
    let hall = match hall {
        Some(h) => {
            if h.order() != coprime_part {
                return Err(GroupError::Hypothesis(format!(
                    "supplied subgroup of order {} is not a Hall {}'-subgroup (expected order {})",
                    h.order(),
                    p,
                    coprime_part
                )));
            }
            h.clone()
        }
        None => match discover_hall_subgroup(group, p) {
            Some(h) => h,
            None => return Ok(HallCoveringOutcome::Inconclusive),
        },
    };

    let residual = group.gamma_infinity();
    let (rt, embed) = group.subgroup_table(&residual);
    let sylow = group.lift_handle(&rt.sylow_subgroup(p), &embed);

    let mut seeds = Vec::new();
    for &x in sylow.elements() {
        for &h in hall.elements() {
            let c = group.commutator(x, h);
            if c != 0 {
                seeds.push(c);
            }
        }
    }
    seeds.sort_unstable();
    seeds.dedup();
    let covered = group.closure_unchecked(&seeds);
    if covered.same_elements(&sylow) {
        Ok(HallCoveringOutcome::Pass)
    } else {
        Ok(HallCoveringOutcome::Fail)
    }
}

/// Hall p'-subgroup search. The closure of the Sylow subgroups away from
/// `p` always contains the p'-part; it is accepted only when it is
/// exactly that big. The fallback scans two-generated subgroups on small
/// groups.
pub fn discover_hall_subgroup(group: &GroupTable, p: usize) -> Option<SubgroupHandle> {
    let coprime_part = group.order() / p_part(group.order(), p);
    if coprime_part == 1 {
        return Some(group.trivial_subgroup());
    }
    let mut seeds = Vec::new();
    for (q, _) in prime_factors(group.order()) {
        if q != p {
            seeds.extend_from_slice(group.sylow_subgroup(q).generators());
        }
    }
    let closure = group.closure_unchecked(&seeds);
    if closure.order() == coprime_part {
        return Some(closure);
    }
    const PAIR_SCAN_LIMIT: usize = 200;
    if group.order() <= PAIR_SCAN_LIMIT {
        let coprime_elements: Vec<usize> = (0..group.order())
            .filter(|&x| group.element_order(x) % p != 0)
            .collect();
        for (i, &x) in coprime_elements.iter().enumerate() {
            for &y in &coprime_elements[i..] {
                let h = group.closure_unchecked(&[x, y]);
                if h.order() == coprime_part {
                    return Some(h);
                }
            }
        }
    }
    None
}

/// For a metabelian group, checks that the iterated-commutator subgroup
/// of `g` is conjugation-invariant for every depth `1..=n_max`.
pub fn check_iterated_commutator_normality(
    group: &GroupTable,
    g: usize,
    n_max: usize,
) -> Result<bool, GroupError> {
    if !group.is_metabelian() {
        return Err(GroupError::NotMetabelian);
    }
    group.check_element(g)?;
    for n in 1..=n_max {
        let sub = iterated_commutator_subgroup(group, g, n);
        if !group.is_normal(&sub) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Facts measured for a group `G = <M, a>` with `M` normal nilpotent:
/// the bounded-class check when `a` is an n-Engel element, and the least
/// lower-central index whose term lands inside the iterated-commutator
/// subgroup of `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalNilpotentExtensionReport {
    /// Nilpotency class of the normal base `M`.
    pub base_class: usize,
    /// Populated when `a` is n-Engel in `G`.
    pub engel_bound: Option<EngelBoundCheck>,
    /// Least `f` with `γ_f(G)` inside the depth-`n` iterated-commutator
    /// subgroup of `a`; `None` if even the stable term escapes.
    pub minimal_series_index: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngelBoundCheck {
    /// Nilpotency class of the whole group, when nilpotent.
    pub group_class: Option<usize>,
    /// The bound `base_class * n`.
    pub bound: usize,
    /// `group_class <= bound`; false also covers a non-nilpotent group,
    /// which would already contradict the bounded-class claim.
    pub holds: bool,
}

pub fn check_normal_nilpotent_extension(
    group: &GroupTable,
    base: &SubgroupHandle,
    a: usize,
    n: usize,
) -> Result<NormalNilpotentExtensionReport, GroupError> {
    assert!(n >= 1);
    group.check_element(a)?;
    if !group.is_normal(base) {
        return Err(GroupError::NotNormal {
            sub: base.order(),
            order: group.order(),
        });
    }
    let (base_table, _) = group.subgroup_table(base);
    let base_class = base_table
        .nilpotency_class()
        .ok_or_else(|| GroupError::Hypothesis("base subgroup is not nilpotent".into()))?;
    let mut seeds = base.elements().to_vec();
    seeds.push(a);
    if !group.closure_unchecked(&seeds).is_full() {
        return Err(GroupError::Hypothesis(
            "base subgroup and the extra element do not generate the group".into(),
        ));
    }

    let is_n_engel =
        (0..group.order()).all(|x| group.iterated_commutator(x, a, n) == 0);
    let engel_bound = if is_n_engel {
        let group_class = group.nilpotency_class();
        let bound = base_class.max(1) * n;
        let holds = matches!(group_class, Some(c) if c <= bound);
        Some(EngelBoundCheck {
            group_class,
            bound,
            holds,
        })
    } else {
        None
    };

    let iterated = iterated_commutator_subgroup(group, a, n);
    let series = group.lower_central_series();
    let minimal_series_index = series
        .terms
        .iter()
        .position(|term| iterated.contains_all(term))
        .map(|idx| idx + 1); // series is 1-indexed

    Ok(NormalNilpotentExtensionReport {
        base_class,
        engel_bound,
        minimal_series_index,
    })
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

    fn order21() -> GroupTable {
        build(7, &[&[&[0, 1, 2, 3, 4, 5, 6]], &[&[1, 2, 4], &[3, 6, 5]]])
    }

    #[test]
    fn s3_hall_covering_passes() {
        let g = s3();
        assert_eq!(
            check_hall_commutator_covering(&g, 3, None).unwrap(),
            HallCoveringOutcome::Pass
        );
        // explicit Hall subgroup: a C2
        let h = g.subgroup_closure(&[1]).unwrap();
        assert_eq!(
            check_hall_commutator_covering(&g, 3, Some(&h)).unwrap(),
            HallCoveringOutcome::Pass
        );
    }

    #[test]
    fn order21_hall_covering_passes() {
        let g = order21();
        assert_eq!(
            check_hall_commutator_covering(&g, 7, None).unwrap(),
            HallCoveringOutcome::Pass
        );
    }

    #[test]
    fn nilpotent_covering_is_vacuous() {
        let c12 = build(12, &[&[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]]]);
        for p in [2, 3] {
            assert_eq!(
                check_hall_commutator_covering(&c12, p, None).unwrap(),
                HallCoveringOutcome::Pass
            );
        }
    }

    #[test]
    fn non_metanilpotent_rejected() {
        assert_eq!(
            check_hall_commutator_covering(&s4(), 2, None),
            Err(GroupError::NotMetanilpotent)
        );
    }

    #[test]
    fn wrong_hall_order_rejected() {
        let g = s3();
        let bad = g.sylow_subgroup(3);
        assert!(matches!(
            check_hall_commutator_covering(&g, 3, Some(&bad)),
            Err(GroupError::Hypothesis(_))
        ));
    }

    #[test]
    fn iterated_commutator_subgroups_normal_in_metabelian() {
        let g = s3();
        for x in 0..6 {
            assert_eq!(check_iterated_commutator_normality(&g, x, 5), Ok(true));
        }
        let g21 = order21();
        for x in 0..21 {
            assert_eq!(check_iterated_commutator_normality(&g21, x, 5), Ok(true));
        }
    }

    #[test]
    fn metabelian_precondition_enforced() {
        assert_eq!(
            check_iterated_commutator_normality(&s4(), 1, 3),
            Err(GroupError::NotMetabelian)
        );
    }

    #[test]
    fn s3_extension_report() {
        let g = s3();
        let a3 = g.sylow_subgroup(3);
        let report = check_normal_nilpotent_extension(&g, &a3, 1, 1).unwrap();
        assert_eq!(report.base_class, 1);
        // a transposition is not 1-Engel in S3
        assert!(report.engel_bound.is_none());
        // γ2(S3) = A3 = E_1(a)
        assert_eq!(report.minimal_series_index, Some(2));
    }

    #[test]
    fn nilpotent_extension_bound_holds() {
        let c4 = build(4, &[&[&[0, 1, 2, 3]]]);
        let report = check_normal_nilpotent_extension(&c4, &c4.full_subgroup(), 1, 2).unwrap();
        assert_eq!(report.base_class, 1);
        let bound = report.engel_bound.unwrap();
        assert!(bound.holds);
        assert_eq!(bound.group_class, Some(1));
        // everything is already trivial at the class+1 term
        assert_eq!(report.minimal_series_index, Some(2));
    }

    #[test]
    fn generation_hypothesis_enforced() {
        let g = s3();
        let a3 = g.sylow_subgroup(3);
        // a three-cycle plus A3 does not generate S3
        assert!(matches!(
            check_normal_nilpotent_extension(&g, &a3, 2, 1),
            Err(GroupError::Hypothesis(_))
        ));
    }
}
