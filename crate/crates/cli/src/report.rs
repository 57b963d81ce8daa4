//! Serializable reports. Field order is declaration order, so JSON output is
//! deterministic; timings are only present when explicitly requested.

use std::fmt::Write as _;

use maxinv_core::theorem::{
    check_non_p_nilpotent_characterization, check_schmidt_specialization,
    check_solubility_implication, check_two_prime_conclusion, cross_validate, Instance, NamedCheck,
};
use maxinv_core::{CaseReport, HypothesisVerdict, Result, Subgroup};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub name: String,
    pub degree: usize,
    pub order: usize,
    pub factorization: Vec<PrimePower>,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionInfo {
    pub name: String,
    pub order: usize,
    /// Per automorphism generator, the images of the group's generators.
    pub generators: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupInfo {
    pub order: usize,
    pub generators: Vec<String>,
}

impl From<&Subgroup> for SubgroupInfo {
    fn from(h: &Subgroup) -> Self {
        SubgroupInfo {
            order: h.order(),
            generators: h
                .generator_permutations()
                .iter()
                .map(ToString::to_string)
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisInfo {
    pub holds: bool,
    pub vacuous: bool,
    pub maximal_invariant_count: usize,
    pub relevant: Vec<SubgroupInfo>,
    pub offending: Vec<SubgroupInfo>,
}

impl HypothesisInfo {
    fn new(v: &HypothesisVerdict, maximal_invariant_count: usize) -> Self {
        HypothesisInfo {
            holds: v.holds,
            vacuous: v.vacuous,
            maximal_invariant_count,
            relevant: v.relevant.iter().map(SubgroupInfo::from).collect(),
            offending: v.offending.iter().map(SubgroupInfo::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedPrime {
    pub name: String,
    pub prime: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessInfo {
    pub name: String,
    pub order: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutationInfo {
    pub case: u8,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationInfo {
    /// 1 to 4, or null when no case holds.
    pub case: Option<u8>,
    pub tag: Option<String>,
    pub primes: Vec<NamedPrime>,
    pub witnesses: Vec<WitnessInfo>,
    pub matching: Vec<u8>,
    pub refutations: Vec<RefutationInfo>,
    /// Every witness condition re-verified from the stored witnesses.
    pub replay_ok: bool,
    pub replay_failure: Option<String>,
}

impl ClassificationInfo {
    fn new(r: &CaseReport, inst: &Instance) -> Result<Self> {
        let replay = r.replay(inst)?;
        Ok(ClassificationInfo {
            case: r.case.map(|c| c.number()),
            tag: r.case.map(|c| c.tag().to_string()),
            primes: r
                .witness_primes
                .iter()
                .map(|&(name, prime)| NamedPrime {
                    name: name.to_string(),
                    prime,
                })
                .collect(),
            witnesses: r
                .witnesses
                .iter()
                .map(|w| {
                    let info = SubgroupInfo::from(&w.subgroup);
                    WitnessInfo {
                        name: w.name.to_string(),
                        order: info.order,
                        generators: info.generators,
                    }
                })
                .collect(),
            matching: r.matching.iter().map(|c| c.number()).collect(),
            refutations: r
                .refutations
                .iter()
                .map(|f| RefutationInfo {
                    case: f.case.number(),
                    reason: f.reason.clone(),
                })
                .collect(),
            replay_ok: replay.is_ok(),
            replay_failure: replay.err(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoPrimeConclusionInfo {
    pub premise: bool,
    pub solvable: bool,
    pub prime_divisors: usize,
    pub normal_invariant_sylow: Option<u64>,
    pub passed: bool,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolubilityInfo {
    pub premise: bool,
    pub solvable: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonPNilpotentInfo {
    pub p_nilpotent: bool,
    pub hypothesis: bool,
    pub classified_p_normal_q: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchmidtInfo {
    pub minimal_non_nilpotent: bool,
    pub cyclic_complement_form: Vec<NamedPrimeFlag>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedPrimeFlag {
    pub prime: u64,
    pub value: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Satellites {
    pub two_prime_conclusion: TwoPrimeConclusionInfo,
    pub solubility: SolubilityInfo,
    pub non_p_nilpotent: NonPNilpotentInfo,
    /// Only evaluated under the trivial action.
    pub schmidt: Option<SchmidtInfo>,
}

impl Satellites {
    pub fn all_passed(&self) -> bool {
        self.two_prime_conclusion.passed
            && self.solubility.passed
            && self.non_p_nilpotent.passed
            && self.schmidt.as_ref().is_none_or(|s| s.passed)
    }
}

pub fn two_prime_info(inst: &Instance) -> Result<TwoPrimeConclusionInfo> {
    let a = check_two_prime_conclusion(inst)?;
    Ok(TwoPrimeConclusionInfo {
        premise: a.premise,
        solvable: a.solvable,
        prime_divisors: a.prime_divisors,
        normal_invariant_sylow: a.normal_invariant_sylow,
        passed: a.passed,
        failure: a.failure,
    })
}

pub fn schmidt_info(inst: &Instance) -> Result<Option<SchmidtInfo>> {
    Ok(check_schmidt_specialization(inst)?.map(|s| SchmidtInfo {
        minimal_non_nilpotent: s.minimal_non_nilpotent,
        cyclic_complement_form: s
            .per_prime
            .iter()
            .map(|&(prime, value)| NamedPrimeFlag { prime, value })
            .collect(),
        passed: s.passed,
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub lattice_ms: f64,
    pub analysis_ms: f64,
}

/// Everything known about one `(G, A, p)` triple.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema: u32,
    pub group: GroupInfo,
    pub action: ActionInfo,
    pub prime: u64,
    pub lattice_size: usize,
    pub hypothesis: HypothesisInfo,
    pub classification: ClassificationInfo,
    pub consistent: bool,
    pub satellites: Satellites,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl CheckReport {
    pub fn build(
        inst: &Instance,
        group_name: &str,
        action_name: &str,
        p: u64,
        schmidt: Option<SchmidtInfo>,
    ) -> Result<Self> {
        let cv = cross_validate(inst, p)?;
        let sol = check_solubility_implication(inst, p)?;
        let cor = check_non_p_nilpotent_characterization(inst, p)?;
        Ok(CheckReport {
            schema: SCHEMA_VERSION,
            group: group_info(inst, group_name),
            action: action_info(inst, action_name),
            prime: p,
            lattice_size: inst.lattice().len(),
            hypothesis: HypothesisInfo::new(&cv.hypothesis, inst.maximal_invariant().len()),
            classification: ClassificationInfo::new(&cv.case, inst)?,
            consistent: cv.consistent,
            satellites: Satellites {
                two_prime_conclusion: two_prime_info(inst)?,
                solubility: SolubilityInfo {
                    premise: sol.premise,
                    solvable: sol.solvable,
                    passed: sol.passed,
                },
                non_p_nilpotent: NonPNilpotentInfo {
                    p_nilpotent: cor.p_nilpotent,
                    hypothesis: cor.hypothesis,
                    classified_p_normal_q: cor.classified_p_normal_q,
                    passed: cor.passed,
                },
                schmidt,
            },
            timings: None,
        })
    }

    /// Consistent, witnesses replay, and every implied statement verified.
    pub fn all_passed(&self) -> bool {
        self.consistent && self.classification.replay_ok && self.satellites.all_passed()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let g = &self.group;
        let fact: Vec<String> = g
            .factorization
            .iter()
            .map(|f| {
                if f.exponent == 1 {
                    f.prime.to_string()
                } else {
                    format!("{}^{}", f.prime, f.exponent)
                }
            })
            .collect();
        let _ = writeln!(
            s,
            "group      {} (order {} = {}, degree {})",
            g.name,
            g.order,
            fact.join("·"),
            g.degree
        );
        let _ = writeln!(
            s,
            "action     {} (order {})",
            self.action.name, self.action.order
        );
        let _ = writeln!(s, "prime      {}", self.prime);
        let _ = writeln!(s, "subgroups  {}", self.lattice_size);
        let h = &self.hypothesis;
        let _ = writeln!(
            s,
            "hypothesis {}{} ({} maximal invariant, {} of order divisible by p, {} non-nilpotent)",
            if h.holds { "holds" } else { "fails" },
            if h.vacuous { " vacuously" } else { "" },
            h.maximal_invariant_count,
            h.relevant.len(),
            h.offending.len()
        );
        for o in &h.offending {
            let _ = writeln!(
                s,
                "  offending  order {:<4} <{}>",
                o.order,
                o.generators.join(", ")
            );
        }
        let c = &self.classification;
        match c.case {
            Some(n) => {
                let primes: Vec<String> = c
                    .primes
                    .iter()
                    .map(|p| format!("{}={}", p.name, p.prime))
                    .collect();
                let _ = writeln!(
                    s,
                    "case       ({}) {} [{}]",
                    n,
                    c.tag.as_deref().unwrap_or(""),
                    primes.join(", ")
                );
                for w in &c.witnesses {
                    let _ = writeln!(
                        s,
                        "  {:<4} order {:<4} <{}>",
                        w.name,
                        w.order,
                        w.generators.join(", ")
                    );
                }
                if c.matching.len() > 1 {
                    let _ = writeln!(s, "  also matches cases {:?}", &c.matching[1..]);
                }
            }
            None => {
                let _ = writeln!(s, "case       none");
            }
        }
        for r in &c.refutations {
            let _ = writeln!(s, "  not ({}): {}", r.case, r.reason);
        }
        let _ = writeln!(
            s,
            "replay     {}",
            if c.replay_ok { "ok" } else { "FAILED" }
        );
        if let Some(f) = &c.replay_failure {
            let _ = writeln!(s, "  {f}");
        }
        let _ = writeln!(s, "consistent {}", self.consistent);
        let sat = &self.satellites;
        let pf = |b: bool| if b { "pass" } else { "FAIL" };
        let _ = writeln!(
            s,
            "checks     two-prime conclusion {} (premise {}), solubility {} (premise {}), non-p-nilpotent form {}{}",
            pf(sat.two_prime_conclusion.passed),
            sat.two_prime_conclusion.premise,
            pf(sat.solubility.passed),
            sat.solubility.premise,
            pf(sat.non_p_nilpotent.passed),
            match &sat.schmidt {
                Some(sc) => format!(", minimal non-nilpotent form {}", pf(sc.passed)),
                None => String::new(),
            }
        );
        if let Some(t) = &self.timings {
            let _ = writeln!(
                s,
                "timings    lattice {:.1} ms, analysis {:.1} ms",
                t.lattice_ms, t.analysis_ms
            );
        }
        s
    }
}

pub fn group_info(inst: &Instance, name: &str) -> GroupInfo {
    let g = inst.group();
    GroupInfo {
        name: name.to_string(),
        degree: g.degree(),
        order: g.order(),
        factorization: inst
            .factorization()
            .factors()
            .iter()
            .map(|&(prime, exponent)| PrimePower { prime, exponent })
            .collect(),
        generators: g.generators().iter().map(ToString::to_string).collect(),
    }
}

pub fn action_info(inst: &Instance, name: &str) -> ActionInfo {
    ActionInfo {
        name: name.to_string(),
        order: inst.action().order(),
        generators: inst
            .action()
            .generators()
            .iter()
            .map(|a| {
                a.generator_images()
                    .iter()
                    .map(ToString::to_string)
                    .collect()
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureInfo {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl From<&NamedCheck> for FixtureInfo {
    fn from(c: &NamedCheck) -> Self {
        FixtureInfo {
            name: c.name.clone(),
            passed: c.passed,
            detail: c.detail.clone(),
        }
    }
}
