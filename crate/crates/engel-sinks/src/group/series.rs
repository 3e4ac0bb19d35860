//! Descending structural series: lower central, derived, and the
//! iterated-residual (lower Fitting) series.

use crate::group::{GroupTable, SubgroupHandle};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    LowerCentral,
    Derived,
    Fitting,
}

/// A descending chain of subgroups. The chain is always run to its fixed
/// point, so the last two terms are equal; that repeated tail witnesses
/// stabilization.
#[derive(Clone, Debug)]
pub struct Series {
    pub kind: SeriesKind,
    pub terms: Vec<SubgroupHandle>,
}

impl Series {
    /// The stable term.
    pub fn last(&self) -> &SubgroupHandle {
        self.terms.last().expect("series is never empty")
    }

    pub fn stabilized_at_trivial(&self) -> bool {
        self.last().is_trivial()
    }

    /// Number of strictly descending steps before stabilization.
    pub fn strict_length(&self) -> usize {
        self.terms.len() - 2
    }
}

impl GroupTable {
    /// `[H, K]`: the subgroup generated by commutators `[h, k]`.
    pub fn commutator_subgroup(&self, h: &SubgroupHandle, k: &SubgroupHandle) -> SubgroupHandle {
        let mut seeds = Vec::new();
        for &x in h.elements() {
            for &y in k.elements() {
                let c = self.commutator(x, y);
                if c != 0 {
                    seeds.push(c);
                }
            }
        }
        seeds.sort_unstable();
        seeds.dedup();
        self.closure_unchecked(&seeds)
    }

    /// Lower central series: `G = γ1 ⊇ γ2 ⊇ ...` with
    /// `γ_{i+1} = [γ_i, G]`, run to stabilization.
    pub fn lower_central_series(&self) -> Series {
        let full = self.full_subgroup();
        let mut terms = vec![full.clone()];
        loop {
            let current = terms.last().unwrap();
            let next = self.commutator_subgroup(current, &full);
            let stable = next.same_elements(current);
            terms.push(next);
            if stable {
                break;
            }
        }
        Series {
            kind: SeriesKind::LowerCentral,
            terms,
        }
    }

    /// The stable term of the lower central series. For a finite group
    /// the descending chain stabilizes, so this equals the intersection
    /// of all terms.
    pub fn gamma_infinity(&self) -> SubgroupHandle {
        self.lower_central_series().last().clone()
    }

    /// Derived series `G ⊇ G' ⊇ G'' ⊇ ...`, run to stabilization.
    pub fn derived_series(&self) -> Series {
        let mut terms = vec![self.full_subgroup()];
        loop {
            let current = terms.last().unwrap();
            let next = self.commutator_subgroup(current, current);
            let stable = next.same_elements(current);
            terms.push(next);
            if stable {
                break;
            }
        }
        Series {
            kind: SeriesKind::Derived,
            terms,
        }
    }

    pub fn is_soluble(&self) -> bool {
        self.derived_series().stabilized_at_trivial()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().stabilized_at_trivial()
    }

    /// Nilpotency class, when defined.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        if series.stabilized_at_trivial() {
            Some(series.strict_length())
        } else {
            None
        }
    }

    /// Derived length, when defined.
    pub fn derived_length(&self) -> Option<usize> {
        let series = self.derived_series();
        if series.stabilized_at_trivial() {
            Some(series.strict_length())
        } else {
            None
        }
    }

    /// Derived length at most 2.
    pub fn is_metabelian(&self) -> bool {
        matches!(self.derived_length(), Some(len) if len <= 2)
    }

    /// The residual is nilpotent, i.e. the group is nilpotent-by-nilpotent.
    pub fn is_metanilpotent(&self) -> bool {
        let residual = self.gamma_infinity();
        let (table, _) = self.subgroup_table(&residual);
        table.is_nilpotent()
    }

    /// Iterated-residual series `G ⊇ γ∞(G) ⊇ γ∞(γ∞(G)) ⊇ ...`, the
    /// fastest descending normal series with nilpotent factors. Runs to
    /// stabilization; it reaches the trivial group iff `G` is soluble.
    pub fn lower_fitting_series(&self) -> Series {
        let mut terms = vec![self.full_subgroup()];
        loop {
            let current = terms.last().unwrap();
            let (table, embed) = self.subgroup_table(current);
            let next = self.lift_handle(&table.gamma_infinity(), &embed);
            let stable = next.same_elements(current);
            terms.push(next);
            if stable {
                break;
            }
        }
        Series {
            kind: SeriesKind::Fitting,
            terms,
        }
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
    fn abelian_residual_is_trivial() {
        let c6 = build(6, &[&[&[0, 1, 2, 3, 4, 5]]]);
        assert!(c6.gamma_infinity().is_trivial());
        assert!(c6.is_nilpotent());
        assert_eq!(c6.nilpotency_class(), Some(1));
    }

    #[test]
    fn s3_series() {
        let g = s3();
        let lcs = g.lower_central_series();
        assert_eq!(lcs.terms[1].order(), 3);
        let residual = g.gamma_infinity();
        assert_eq!(residual.order(), 3);
        assert!(g.is_cyclic_subgroup(&residual));
        assert_eq!(g.derived_length(), Some(2));
        assert!(!g.is_nilpotent());
        assert!(g.is_soluble());
        assert!(g.is_metabelian());
        assert!(g.is_metanilpotent());
    }

    #[test]
    fn s4_residual_is_a4() {
        // γ2(S4) = A4 and [A4, S4] = A4, so the series stabilizes at A4.
        let g = s4();
        let residual = g.gamma_infinity();
        assert_eq!(residual.order(), 12);
        assert!(!g.is_cyclic_subgroup(&residual));
        assert!(!g.is_metanilpotent());
        assert!(g.is_soluble());
        assert_eq!(g.derived_length(), Some(3));
    }

    #[test]
    fn order_21_is_soluble_not_nilpotent() {
        let g = build(7, &[&[&[0, 1, 2, 3, 4, 5, 6]], &[&[1, 2, 4], &[3, 6, 5]]]);
        assert!(g.is_soluble());
        assert_eq!(g.derived_length(), Some(2));
        assert!(!g.is_nilpotent());
        assert_eq!(g.gamma_infinity().order(), 7);
    }

    #[test]
    fn a5_is_insoluble() {
        let g = build(5, &[&[&[0, 1, 2]], &[&[0, 1, 2, 3, 4]]]);
        assert_eq!(g.order(), 60);
        assert!(!g.is_soluble());
        assert_eq!(g.derived_length(), None);
        // perfect: the derived series is constant at A5
        let ds = g.derived_series();
        assert_eq!(ds.last().order(), 60);
    }

    #[test]
    fn lcs_terms_are_normal_and_descending() {
        let g = s4();
        let lcs = g.lower_central_series();
        for window in lcs.terms.windows(2) {
            assert!(window[0].contains_all(&window[1]));
        }
        for term in &lcs.terms {
            assert!(g.is_normal(term));
        }
    }

    #[test]
    fn lower_fitting_series_of_s4_has_three_steps() {
        let g = s4();
        let series = g.lower_fitting_series();
        let orders: Vec<usize> = series.terms.iter().map(|t| t.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1, 1]);
    }
}
