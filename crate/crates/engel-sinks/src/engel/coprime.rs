//! Coprime actions by conjugation inside one ambient group: the
//! fixed-point and commutator identities, the abelian-automorphism check
//! for cyclic targets, normal p-complements, and the complement
//! criterion probe.

use crate::error::GroupError;
use crate::group::{gcd, p_part, prime_factors, GroupTable, SubgroupHandle};
use crate::perm::{Perm, PermGenSet};

/// A normal subgroup acted on, by conjugation, by a subgroup of coprime
/// order of the same ambient group.
#[derive(Clone, Debug)]
pub struct CoprimeActionInstance<'g> {
    pub group: &'g GroupTable,
    /// The normal target `N`.
    pub target: SubgroupHandle,
    /// The acting subgroup `A`, with `gcd(|N|, |A|) = 1`.
    pub actors: SubgroupHandle,
}

impl<'g> CoprimeActionInstance<'g> {
    pub fn new(
        group: &'g GroupTable,
        target: SubgroupHandle,
        actors: SubgroupHandle,
    ) -> Result<Self, GroupError> {
        if !group.is_normal(&target) {
            return Err(GroupError::NotNormal {
                sub: target.order(),
                order: group.order(),
            });
        }
        if gcd(target.order(), actors.order()) != 1 {
            return Err(GroupError::NotCoprime {
                n: target.order(),
                a: actors.order(),
            });
        }
        Ok(CoprimeActionInstance {
            group,
            target,
            actors,
        })
    }

    /// Fixed points of the action: `C_N(A)`.
    pub fn fixed_points(&self) -> SubgroupHandle {
        let elements: Vec<usize> = self
            .target
            .elements()
            .iter()
            .copied()
            .filter(|&x| {
                self.actors
                    .elements()
                    .iter()
                    .all(|&a| self.group.conjugate(x, a) == x)
            })
            .collect();
        SubgroupHandle::from_parts(elements.clone(), elements, self.group.order())
    }

    /// `[N, A]`: generated by `x^-1 * x^a` over the target and actors.
    pub fn action_commutators(&self) -> SubgroupHandle {
        self.commutators_of(&self.target)
    }

    fn commutators_of(&self, from: &SubgroupHandle) -> SubgroupHandle {
        let mut seeds = Vec::new();
        for &x in from.elements() {
            for &a in self.actors.elements() {
                let c = self.group.mul(self.group.inv(x), self.group.conjugate(x, a));
                if c != 0 {
                    seeds.push(c);
                }
            }
        }
        seeds.sort_unstable();
        seeds.dedup();
        self.group.closure_unchecked(&seeds)
    }

    /// Runs the identity checks. `(iv)` and `(v)` are populated only for
    /// cyclic prime-power / cyclic 2-power targets respectively.
    pub fn run_checks(&self) -> CoprimeActionChecks {
        let group = self.group;
        let fixed = self.fixed_points();
        let commutators = self.action_commutators();

        // (i) N = C_N(A) [N, A]
        let mut product_mask = vec![false; group.order()];
        let mut product_count = 0usize;
        for &c in fixed.elements() {
            for &k in commutators.elements() {
                let x = group.mul(c, k);
                if !product_mask[x] {
                    product_mask[x] = true;
                    product_count += 1;
                }
            }
        }
        let fixed_point_product = product_count == self.target.order()
            && self.target.elements().iter().all(|&x| product_mask[x]);

        // (ii) [N, A, A] = [N, A]
        let twice = self.commutators_of(&commutators);
        let commutator_stability = twice.same_elements(&commutators);

        // (iii) C_{N/M}(A) = C_N(A) M / M with M = [N, A]
        let fixed_points_pass_to_quotient = self.check_quotient_fixed_points(&fixed, &commutators);

        let target_prime_power = prime_factors(self.target.order()).len() == 1;
        let target_cyclic = group.is_cyclic_subgroup(&self.target);

        let induced_cyclic = if target_cyclic && target_prime_power && !self.target.is_trivial() {
            Some(self.induced_action_is_cyclic())
        } else {
            None
        };
        let induced_trivial = if target_cyclic && p_part(self.target.order(), 2) == self.target.order()
        {
            Some(
                self.actors
                    .elements()
                    .iter()
                    .all(|&a| self.target.elements().iter().all(|&x| group.conjugate(x, a) == x)),
            )
        } else {
            None
        };

        CoprimeActionChecks {
            fixed_point_product,
            commutator_stability,
            fixed_points_pass_to_quotient,
            induced_cyclic,
            induced_trivial,
        }
    }

    fn check_quotient_fixed_points(
        &self,
        fixed: &SubgroupHandle,
        commutators: &SubgroupHandle,
    ) -> bool {
        let group = self.group;
        let (nt, embed) = group.subgroup_table(&self.target);
        let mut pos = vec![usize::MAX; group.order()];
        for (i, &e) in embed.iter().enumerate() {
            pos[e] = i;
        }
        let inner_m = SubgroupHandle::from_parts(
            commutators.elements().iter().map(|&x| pos[x]).collect(),
            vec![],
            nt.order(),
        );
        let quotient = match nt.quotient_group(&inner_m) {
            Ok(q) => q,
            Err(_) => return false,
        };
        // cosets fixed by every actor
        let fixed_cosets: Vec<usize> = (0..quotient.group.order())
            .filter(|&coset| {
                let rep = embed[quotient.representatives[coset]];
                self.actors
                    .elements()
                    .iter()
                    .all(|&a| quotient.projection[pos[group.conjugate(rep, a)]] == coset)
            })
            .collect();
        // image of the parent fixed points
        let mut image: Vec<usize> = fixed
            .elements()
            .iter()
            .map(|&x| quotient.projection[pos[x]])
            .collect();
        image.sort_unstable();
        image.dedup();
        fixed_cosets == image
    }

    /// The image of `A` acting on the target, as an abstract permutation
    /// group; cyclic iff `A` modulo its kernel on `N` is cyclic.
    fn induced_action_is_cyclic(&self) -> bool {
        let group = self.group;
        let degree = self.target.order();
        let mut pos = vec![usize::MAX; group.order()];
        for (i, &e) in self.target.elements().iter().enumerate() {
            pos[e] = i;
        }
        let gens: Vec<Perm> = self
            .actors
            .elements()
            .iter()
            .map(|&a| {
                let images: Vec<u32> = self
                    .target
                    .elements()
                    .iter()
                    .map(|&x| pos[group.conjugate(x, a)] as u32)
                    .collect();
                Perm::from_images(images).expect("conjugation permutes the target")
            })
            .collect();
        let genset = PermGenSet::new(degree, gens).expect("degrees match");
        let image = GroupTable::from_generators(&genset, &Default::default())
            .expect("induced image is a small group");
        image.is_cyclic()
    }
}

/// Results of the coprime-action identity checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoprimeActionChecks {
    /// `N = C_N(A) [N, A]`
    pub fixed_point_product: bool,
    /// `[N, A, A] = [N, A]`
    pub commutator_stability: bool,
    /// `C_{N/M}(A) = C_N(A) M / M` for the invariant `M = [N, A]`
    pub fixed_points_pass_to_quotient: bool,
    /// induced action image cyclic (cyclic prime-power targets only)
    pub induced_cyclic: Option<bool>,
    /// induced action trivial (cyclic 2-power targets only)
    pub induced_trivial: Option<bool>,
}

impl CoprimeActionChecks {
    pub fn all_pass(&self) -> bool {
        self.fixed_point_product
            && self.commutator_stability
            && self.fixed_points_pass_to_quotient
            && self.induced_cyclic.unwrap_or(true)
            && self.induced_trivial.unwrap_or(true)
    }
}

/// Harvests coprime-action instances from one group: candidate targets
/// are the residual, the p-cores, and small normal cyclic subgroups;
/// actors are the Sylow subgroups of primes away from the target.
pub fn harvest_coprime_instances<'g>(
    group: &'g GroupTable,
    max_instances: usize,
) -> Vec<CoprimeActionInstance<'g>> {
    let mut targets: Vec<SubgroupHandle> = Vec::new();
    let push_target = |h: SubgroupHandle, targets: &mut Vec<SubgroupHandle>| {
        if h.is_trivial() || h.is_full() {
            return;
        }
        if targets.iter().any(|t| t.same_elements(&h)) {
            return;
        }
        targets.push(h);
    };
    push_target(group.gamma_infinity(), &mut targets);
    for (p, _) in prime_factors(group.order()) {
        push_target(group.p_core(p), &mut targets);
    }
    // normal cyclic subgroups generated by single elements, lowest first
    for x in 1..group.order() {
        if targets.len() >= 8 {
            break;
        }
        let h = group.closure_unchecked(&[x]);
        if group.is_normal(&h) {
            push_target(h, &mut targets);
        }
    }

    let mut instances = Vec::new();
    let group_primes = prime_factors(group.order());
    for target in targets {
        for &(q, _) in &group_primes {
            if instances.len() >= max_instances {
                return instances;
            }
            if target.order() % q == 0 {
                continue;
            }
            let actors = group.sylow_subgroup(q);
            if actors.is_trivial() {
                continue;
            }
            if let Ok(inst) = CoprimeActionInstance::new(group, target.clone(), actors) {
                instances.push(inst);
            }
        }
    }
    instances
}

/// Checks that the automorphisms a set of actors induces on a cyclic
/// subgroup commute pairwise. Errors if the target is not cyclic or an
/// actor fails to normalize it.
pub fn cyclic_automorphisms_commute(
    group: &GroupTable,
    target: &SubgroupHandle,
    actors: &[usize],
) -> Result<bool, GroupError> {
    if !group.is_cyclic_subgroup(target) {
        return Err(GroupError::NotCyclicTarget {
            order: target.order(),
        });
    }
    let mask = target.member_mask();
    for &a in actors {
        group.check_element(a)?;
        if target.elements().iter().any(|&x| !mask[group.conjugate(x, a)]) {
            return Err(GroupError::ActorDoesNotNormalize { actor: a });
        }
    }
    for &a in actors {
        for &b in actors {
            for &x in target.elements() {
                let ab = group.conjugate(group.conjugate(x, a), b);
                let ba = group.conjugate(group.conjugate(x, b), a);
                if ab != ba {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Normal p-complement, when it exists: the set of elements of order
/// coprime to `p`, accepted iff it is multiplication-closed and has
/// exactly the p'-part of the group order.
pub fn normal_p_complement(group: &GroupTable, p: usize) -> Option<SubgroupHandle> {
    let coprime_part = group.order() / p_part(group.order(), p);
    let members: Vec<usize> = (0..group.order())
        .filter(|&x| group.element_order(x) % p != 0)
        .collect();
    if members.len() != coprime_part {
        return None;
    }
    let mut mask = vec![false; group.order()];
    for &x in &members {
        mask[x] = true;
    }
    for &x in &members {
        for &y in &members {
            if !mask[group.mul(x, y)] {
                return None;
            }
        }
    }
    Some(SubgroupHandle::from_parts(
        members.clone(),
        members,
        group.order(),
    ))
}

/// Verdict of [`frobenius_complement_probe`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeVerdict {
    /// Criterion and complement existence agree on the enumerated family.
    Pass,
    /// A p-subgroup fails the quotient condition although a complement
    /// exists: a genuine criterion violation.
    Fail,
    /// No complement exists but no failing subgroup was found within the
    /// enumerated family and budget.
    Inconclusive,
}

/// Probes the normal p-complement criterion: enumerates nontrivial
/// p-subgroups (cyclic ones, two-generated ones, and the Sylow subgroup,
/// up to `budget`), checks that `N_G(H)/C_G(H)` is a p-group for each,
/// and compares the aggregate with complement existence.
pub fn frobenius_complement_probe(group: &GroupTable, p: usize, budget: usize) -> ProbeVerdict {
    let complement = normal_p_complement(group, p).is_some();
    let mut enumerated: Vec<SubgroupHandle> = Vec::new();
    let mut any_fail = false;

    let consider = |h: SubgroupHandle, enumerated: &mut Vec<SubgroupHandle>| -> bool {
        if h.is_trivial() || p_part(h.order(), p) != h.order() {
            return false;
        }
        if enumerated.iter().any(|e| e.same_elements(&h)) {
            return false;
        }
        enumerated.push(h);
        true
    };

    let quotient_is_p_group = |h: &SubgroupHandle| -> bool {
        let normalizer = group.normalizer(h);
        let centralizer = group
            .centralizer(h.elements())
            .expect("subgroup elements are in range");
        let q = normalizer.order() / centralizer.order();
        p_part(q, p) == q
    };

    let sylow = group.sylow_subgroup(p);
    if consider(sylow, &mut enumerated) {
        any_fail |= !quotient_is_p_group(enumerated.last().unwrap());
    }

    let p_elements: Vec<usize> = (1..group.order())
        .filter(|&x| {
            let ord = group.element_order(x);
            p_part(ord, p) == ord
        })
        .collect();
    'outer: for (i, &x) in p_elements.iter().enumerate() {
        if enumerated.len() >= budget {
            break;
        }
        if consider(group.closure_unchecked(&[x]), &mut enumerated) {
            any_fail |= !quotient_is_p_group(enumerated.last().unwrap());
        }
        for &y in &p_elements[i + 1..] {
            if enumerated.len() >= budget {
                break 'outer;
            }
            if consider(group.closure_unchecked(&[x, y]), &mut enumerated) {
                any_fail |= !quotient_is_p_group(enumerated.last().unwrap());
            }
        }
    }

    match (any_fail, complement) {
        (true, false) | (false, true) => ProbeVerdict::Pass,
        (true, true) => ProbeVerdict::Fail,
        (false, false) => ProbeVerdict::Inconclusive,
    }
}
