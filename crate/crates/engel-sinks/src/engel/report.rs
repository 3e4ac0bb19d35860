//! Per-group verification of the cyclic-sink theorem and its companion
//! claims, producing the serializable [`TheoremReport`].
//!
//! The hypothesis under test: every element's minimal sink generates a
//! cyclic subgroup. When it holds the report additionally asserts that
//! the group has a normal 2-complement (claim 2.3), is soluble (claim
//! 2.4), and — when the group is metanilpotent — that the residual is
//! cyclic by the two-step route (claim 2.6). The headline implication
//! ("theorem") is that the residual γ∞ is cyclic. Any failed implication
//! is a violation; a hypothesis that simply does not hold is not.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::engel::{minimal_sink, normal_p_complement};
use crate::group::GroupTable;

/// Per-element sink summary.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SinkWitness {
    /// Element index.
    pub g: usize,
    /// Size of the minimal sink.
    pub size: usize,
    /// Order of the subgroup the sink generates.
    pub gen_order: usize,
    /// Whether that subgroup is cyclic.
    pub cyclic: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GammaInfFacts {
    pub order: usize,
    pub cyclic: bool,
}

/// Outcome of one claim check on one group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LemmaOutcome {
    Pass,
    Fail,
    /// The claim's precondition did not apply, or a search came up empty.
    Inconclusive,
}

impl LemmaOutcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaOutcome::Pass => "pass",
            LemmaOutcome::Fail => "fail",
            LemmaOutcome::Inconclusive => "inconclusive",
        }
    }
}

/// Everything the harness measured on one group. Serializes with stable
/// key order for diff-based regression tests.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub group: String,
    pub order: usize,
    /// All minimal sinks generate cyclic subgroups.
    pub hypothesis: bool,
    /// Per-element summaries; populated on demand.
    pub sinks: Vec<SinkWitness>,
    pub gamma_inf: GammaInfFacts,
    pub lemmas: BTreeMap<String, LemmaOutcome>,
}

impl TheoremReport {
    /// Claims that failed, as `claim` keys.
    pub fn violations(&self) -> Vec<String> {
        self.lemmas
            .iter()
            .filter(|(_, &v)| v == LemmaOutcome::Fail)
            .map(|(k, _)| k.clone())
            .collect()
    }
}

/// Runs the core verification on one group: computes every minimal sink,
/// evaluates the cyclic-sink hypothesis, and checks the implications the
/// theorem and its companion claims make for this group.
pub fn verify_main_theorem(group: &GroupTable, id: &str) -> TheoremReport {
    let sinks: Vec<SinkWitness> = (0..group.order())
        .map(|g| {
            let sink = minimal_sink(group, g);
            SinkWitness {
                g,
                size: sink.elements.len(),
                gen_order: sink.generated.order(),
                cyclic: sink.cyclic,
            }
        })
        .collect();
    let hypothesis = sinks.iter().all(|w| w.cyclic);

    let residual = group.gamma_infinity();
    let gamma_inf = GammaInfFacts {
        order: residual.order(),
        cyclic: group.is_cyclic_subgroup(&residual),
    };

    let mut lemmas = BTreeMap::new();
    // headline implication: cyclic sinks force a cyclic residual
    lemmas.insert(
        "theorem".to_string(),
        if !hypothesis || gamma_inf.cyclic {
            LemmaOutcome::Pass
        } else {
            LemmaOutcome::Fail
        },
    );
    if hypothesis {
        let complement = normal_p_complement(group, 2);
        let odd_part = {
            let mut m = group.order();
            while m % 2 == 0 {
                m /= 2;
            }
            m
        };
        lemmas.insert(
            "2.3".to_string(),
            match complement {
                Some(k) if k.order() == odd_part => LemmaOutcome::Pass,
                _ => LemmaOutcome::Fail,
            },
        );
        lemmas.insert(
            "2.4".to_string(),
            if group.is_soluble() {
                LemmaOutcome::Pass
            } else {
                LemmaOutcome::Fail
            },
        );
        lemmas.insert(
            "2.6".to_string(),
            if group.is_metanilpotent() {
                if gamma_inf.cyclic {
                    LemmaOutcome::Pass
                } else {
                    LemmaOutcome::Fail
                }
            } else {
                LemmaOutcome::Inconclusive
            },
        );
    } else {
        lemmas.insert("2.3".to_string(), LemmaOutcome::Inconclusive);
        lemmas.insert("2.4".to_string(), LemmaOutcome::Inconclusive);
        lemmas.insert("2.6".to_string(), LemmaOutcome::Inconclusive);
    }

    TheoremReport {
        group: id.to_string(),
        order: group.order(),
        hypothesis,
        sinks,
        gamma_inf,
        lemmas,
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

    #[test]
    fn s3_report() {
        let g = build(3, &[&[&[0, 1]], &[&[0, 1, 2]]]);
        let report = verify_main_theorem(&g, "S3");
        assert!(report.hypothesis);
        assert_eq!(report.sinks.len(), 6);
        assert_eq!(report.gamma_inf.order, 3);
        assert!(report.gamma_inf.cyclic);
        assert_eq!(report.lemmas["theorem"], LemmaOutcome::Pass);
        assert_eq!(report.lemmas["2.3"], LemmaOutcome::Pass);
        assert_eq!(report.lemmas["2.4"], LemmaOutcome::Pass);
        assert_eq!(report.lemmas["2.6"], LemmaOutcome::Pass);
        assert!(report.violations().is_empty());
    }

    #[test]
    fn s4_hypothesis_fails_without_violation() {
        let g = build(4, &[&[&[0, 1]], &[&[0, 1, 2, 3]]]);
        let report = verify_main_theorem(&g, "S4");
        assert!(!report.hypothesis);
        assert!(!report.gamma_inf.cyclic);
        assert_eq!(report.lemmas["theorem"], LemmaOutcome::Pass);
        assert_eq!(report.lemmas["2.3"], LemmaOutcome::Inconclusive);
        assert!(report.violations().is_empty());
    }

    #[test]
    fn nilpotent_report_is_trivially_green() {
        let c12 = build(12, &[&[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]]]);
        let report = verify_main_theorem(&c12, "C12");
        assert!(report.hypothesis);
        assert_eq!(report.gamma_inf.order, 1);
        assert!(report.gamma_inf.cyclic);
        assert!(report.sinks.iter().all(|w| w.size == 1 && w.cyclic));
        assert!(report.violations().is_empty());
    }

    #[test]
    fn report_serializes_with_stable_keys() {
        let g = build(3, &[&[&[0, 1]], &[&[0, 1, 2]]]);
        let report = verify_main_theorem(&g, "S3");
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.starts_with("{\"group\":\"S3\",\"order\":6,\"hypothesis\":true,"));
        assert!(json.contains("\"lemmas\":{\"2.3\":\"pass\",\"2.4\":\"pass\",\"2.6\":\"pass\",\"theorem\":\"pass\"}"));
    }
}
