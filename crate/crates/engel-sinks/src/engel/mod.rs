//! Minimal Engel sinks and the operations built on them.
//!
//! For an element `g`, iterating `f_g(x) = [x, g]` on the whole group
//! gives a descending chain of image sets `S_0 = G`, `S_{m+1} = f_g(S_m)`
//! whose fixed point is the smallest Engel sink `ε(g)`: the set every
//! sufficiently long commutator `[x, g, ..., g]` lands in. The module
//! computes that fixed point, cross-checks it against an independent
//! orbit-cycle construction, and derives the per-element data the
//! verification harness consumes.

mod coprime;
mod lemmas;
mod report;
mod tower;

pub use coprime::{
    cyclic_automorphisms_commute, frobenius_complement_probe, harvest_coprime_instances,
    normal_p_complement, CoprimeActionChecks, CoprimeActionInstance,
};
pub use lemmas::{
    check_hall_commutator_covering, check_iterated_commutator_normality,
    check_normal_nilpotent_extension, discover_hall_subgroup, EngelBoundCheck,
    HallCoveringOutcome, NormalNilpotentExtensionReport,
};
pub use report::{verify_main_theorem, GammaInfFacts, LemmaOutcome, SinkWitness, TheoremReport};
pub use tower::{find_tower, verify_tower, Tower};

use crate::group::{GroupTable, SubgroupHandle};

/// The minimal Engel sink of one element, with the derived data the
/// cyclic-sink hypothesis is evaluated on.
#[derive(Clone, Debug)]
pub struct EngelSink {
    /// The element the sink belongs to.
    pub owner: usize,
    /// Sorted fixed-point image set of `x -> [x, owner]`.
    pub elements: Vec<usize>,
    /// Least `m` with `S_m = S_{m+1}`.
    pub depth: usize,
    /// Subgroup generated by the sink.
    pub generated: SubgroupHandle,
    /// Whether that subgroup is cyclic.
    pub cyclic: bool,
}

impl EngelSink {
    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// The sink is `{1}` exactly when the owner is an Engel element.
    pub fn is_trivial(&self) -> bool {
        self.elements == [0]
    }
}

/// Stable-image construction of the minimal sink: iterate the set map
/// `S -> { [x, g] : x in S }` from the whole group down to its fixed
/// point. Each image is a subset of its predecessor, so the chain
/// stabilizes in at most `|G|` steps.
pub fn minimal_sink(group: &GroupTable, g: usize) -> EngelSink {
    let n = group.order();
    let mut current: Vec<usize> = (0..n).collect();
    let mut depth = 0;
    loop {
        let mut mask = vec![false; n];
        let mut next = Vec::with_capacity(current.len());
        for &x in &current {
            let c = group.commutator(x, g);
            if !mask[c] {
                mask[c] = true;
                next.push(c);
            }
        }
        next.sort_unstable();
        if next == current {
            break;
        }
        current = next;
        depth += 1;
    }
    let generated = group
        .subgroup_closure(&current)
        .expect("sink elements are in range");
    let cyclic = group.is_cyclic_subgroup(&generated);
    EngelSink {
        owner: g,
        elements: current,
        depth,
        generated,
        cyclic,
    }
}

/// Independent oracle for the same set: walk the functional graph of
/// `f_g` from every start and collect the union of its cycles. Agrees
/// with [`minimal_sink`] on every finite group.
pub fn sink_orbit_oracle(group: &GroupTable, g: usize) -> Vec<usize> {
    const UNSEEN: u8 = 0;
    const IN_PROGRESS: u8 = 1;
    const DONE: u8 = 2;
    let n = group.order();
    let mut state = vec![UNSEEN; n];
    let mut on_cycle = vec![false; n];
    let mut path = Vec::new();
    for start in 0..n {
        if state[start] != UNSEEN {
            continue;
        }
        path.clear();
        let mut x = start;
        while state[x] == UNSEEN {
            state[x] = IN_PROGRESS;
            path.push(x);
            x = group.commutator(x, g);
        }
        if state[x] == IN_PROGRESS {
            // the tail of `path` from `x` onward is a new cycle
            let cycle_start = path.iter().position(|&y| y == x).unwrap();
            for &y in &path[cycle_start..] {
                on_cycle[y] = true;
            }
        }
        for &y in &path {
            state[y] = DONE;
        }
    }
    (0..n).filter(|&x| on_cycle[x]).collect()
}

/// The subgroup generated by all left-normed commutators
/// `[x, g, ..., g]` with `n` copies of `g`, over all `x`.
pub fn iterated_commutator_subgroup(group: &GroupTable, g: usize, n: usize) -> SubgroupHandle {
    assert!(n >= 1);
    let mut seeds: Vec<usize> = (0..group.order())
        .map(|x| group.iterated_commutator(x, g, n))
        .collect();
    seeds.sort_unstable();
    seeds.dedup();
    group.closure_unchecked(&seeds)
}

pub fn is_engel_element(group: &GroupTable, g: usize) -> bool {
    minimal_sink(group, g).is_trivial()
}

/// Every element Engel. For finite groups this coincides with
/// nilpotency, which the test suite cross-checks on the whole corpus.
pub fn is_engel_group(group: &GroupTable) -> bool {
    (0..group.order()).all(|g| is_engel_element(group, g))
}

/// Checks `ε(g^y) = ε(g)^y` for all pairs, or on a deterministic sample
/// above `full_scan_limit`. Returns the first counterexample.
pub fn sink_conjugation_equivariance(
    group: &GroupTable,
    full_scan_limit: usize,
) -> Result<(), (usize, usize)> {
    let n = group.order();
    let sinks: Vec<Vec<usize>> = (0..n).map(|g| minimal_sink(group, g).elements).collect();
    let pairs: Vec<(usize, usize)> = if n <= full_scan_limit {
        (0..n).flat_map(|g| (0..n).map(move |y| (g, y))).collect()
    } else {
        // deterministic stride-based sample of about full_scan_limit^2 pairs
        let step = (n / full_scan_limit).max(1);
        (0..n)
            .step_by(step)
            .flat_map(|g| (0..n).step_by(step).map(move |y| (g, y)))
            .collect()
    };
    for (g, y) in pairs {
        let conj_owner = group.conjugate(g, y);
        let mut conj_sink: Vec<usize> = sinks[g].iter().map(|&s| group.conjugate(s, y)).collect();
        conj_sink.sort_unstable();
        if sinks[conj_owner] != conj_sink {
            return Err((g, y));
        }
    }
    Ok(())
}

/// Measured (not asserted) containments between the subgroup generated
/// by the minimal sink and the n-fold iterated-commutator subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SinkContainment {
    pub generated_inside_iterated: bool,
    pub iterated_inside_generated: bool,
}

pub fn sink_containment(group: &GroupTable, g: usize, n: usize) -> SinkContainment {
    let sink = minimal_sink(group, g);
    let en = iterated_commutator_subgroup(group, g, n);
    SinkContainment {
        generated_inside_iterated: en.contains_all(&sink.generated),
        iterated_inside_generated: sink.generated.contains_all(&en),
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
    fn sinks_in_abelian_groups_are_trivial() {
        let c6 = build(6, &[&[&[0, 1, 2, 3, 4, 5]]]);
        for g in 0..6 {
            let sink = minimal_sink(&c6, g);
            assert!(sink.is_trivial());
            assert!(sink.depth <= 1);
            assert!(sink.cyclic);
        }
    }

    #[test]
    fn s3_transposition_sink_is_a3() {
        let g = s3();
        let sink = minimal_sink(&g, 1);
        assert_eq!(sink.elements.len(), 3);
        assert_eq!(sink.generated.order(), 3);
        assert!(sink.cyclic);
        assert_eq!(sink.depth, 1);
        assert!(!is_engel_element(&g, 1));
    }

    #[test]
    fn s3_three_cycle_is_engel() {
        let g = s3();
        let sink = minimal_sink(&g, 2);
        assert!(sink.is_trivial());
        assert_eq!(sink.depth, 2);
        assert!(is_engel_element(&g, 2));
    }

    #[test]
    fn oracle_matches_stable_image_on_s4() {
        let g = s4();
        for x in 0..g.order() {
            assert_eq!(minimal_sink(&g, x).elements, sink_orbit_oracle(&g, x));
        }
    }

    #[test]
    fn sink_is_bijective_under_f_g() {
        let g = s4();
        for x in 0..g.order() {
            let sink = minimal_sink(&g, x);
            let mut image: Vec<usize> = sink
                .elements
                .iter()
                .map(|&s| g.commutator(s, x))
                .collect();
            image.sort_unstable();
            image.dedup();
            assert_eq!(image, sink.elements);
            assert!(sink.contains(0));
        }
    }

    #[test]
    fn depth_is_minimal() {
        let g = s3();
        for x in 0..g.order() {
            let sink = minimal_sink(&g, x);
            if sink.depth == 0 {
                assert_eq!(sink.elements.len(), g.order());
                continue;
            }
            // at depth - 1 the image has not yet stabilized
            let mut set: Vec<usize> = (0..g.order()).collect();
            for _ in 0..sink.depth - 1 {
                let mut next: Vec<usize> = set.iter().map(|&v| g.commutator(v, x)).collect();
                next.sort_unstable();
                next.dedup();
                set = next;
            }
            assert_ne!(set, sink.elements);
        }
    }

    #[test]
    fn iterated_commutator_subgroups_on_s3() {
        let g = s3();
        // transposition, n = 1: the commutator image generates A3
        assert_eq!(iterated_commutator_subgroup(&g, 1, 1).order(), 3);
        // abelian: everything collapses
        let c4 = build(4, &[&[&[0, 1, 2, 3]]]);
        for n in 1..4 {
            assert!(iterated_commutator_subgroup(&c4, 1, n).is_trivial());
        }
    }

    #[test]
    fn engel_group_iff_nilpotent_small_cases() {
        let d8 = build(4, &[&[&[0, 1, 2, 3]], &[&[1, 3]]]);
        assert_eq!(d8.order(), 8);
        assert!(is_engel_group(&d8));
        assert!(d8.is_nilpotent());
        let g = s3();
        assert!(!is_engel_group(&g));
        assert!(!g.is_nilpotent());
    }

    #[test]
    fn equivariance_full_scan() {
        for g in [s3(), s4()] {
            assert_eq!(sink_conjugation_equivariance(&g, 200), Ok(()));
        }
    }

    #[test]
    fn long_commutators_land_in_sink() {
        let g = s4();
        for owner in 0..g.order() {
            let sink = minimal_sink(&g, owner);
            let n = sink.depth.max(1);
            for x in 0..g.order() {
                assert!(sink.contains(g.iterated_commutator(x, owner, n)));
                assert!(sink.contains(g.iterated_commutator(x, owner, n + 1)));
            }
        }
    }

    #[test]
    fn containment_is_measured_both_ways_on_s3() {
        let g = s3();
        let c = sink_containment(&g, 1, 1);
        // for a transposition in S3 both sides collapse to A3
        assert!(c.generated_inside_iterated);
        assert!(c.iterated_inside_generated);
    }
}
