//! Deciding "every maximal A-invariant subgroup of order divisible by p is
//! nilpotent" two ways: directly over the lattice, and through the four
//! structural cases with explicit witnesses. The two deciders are
//! cross-validated, and several implied statements are checked alongside.

use std::fmt;
use std::sync::Arc;

use crate::action::{is_invariant, maximal_invariant_subgroups, restrict_action, CoprimeAction};
use crate::error::{Error, Result};
use crate::lattice::{all_subgroups, is_normal_in_parent, join, meet, LatticeIndex, Subgroup};
use crate::perm_core::PermGroup;
use crate::structure::{
    centralizes, internal_product_kind, internal_product_kind_in, invariant_sylows, is_nilpotent,
    is_p_nilpotent, is_solvable, normal_sylow, PrimeFactorization, ProductKind,
};

/// A group with its lattice and a coprime action, plus the maximal
/// invariant subgroups every query needs.
pub struct Instance {
    lattice: LatticeIndex,
    action: CoprimeAction,
    factorization: PrimeFactorization,
    maximal_invariant: Vec<Subgroup>,
}

impl Instance {
    /// Enumerates the lattice of the action's target.
    pub fn new(action: CoprimeAction) -> Result<Self> {
        let lattice = all_subgroups(action.target())?;
        Self::with_lattice(lattice, action)
    }

    pub fn with_lattice(lattice: LatticeIndex, action: CoprimeAction) -> Result<Self> {
        let maximal_invariant = maximal_invariant_subgroups(&action, &lattice)?;
        Ok(Instance {
            factorization: PrimeFactorization::of(lattice.parent().order() as u64),
            lattice,
            action,
            maximal_invariant,
        })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        self.lattice.parent()
    }

    pub fn lattice(&self) -> &LatticeIndex {
        &self.lattice
    }

    pub fn action(&self) -> &CoprimeAction {
        &self.action
    }

    pub fn factorization(&self) -> &PrimeFactorization {
        &self.factorization
    }

    pub fn maximal_invariant(&self) -> &[Subgroup] {
        &self.maximal_invariant
    }

    pub fn whole(&self) -> &Subgroup {
        self.lattice.whole()
    }

    fn check_prime(&self, p: u64) -> Result<()> {
        if self.factorization.exponent(p) == 0 {
            return Err(Error::PrimeDoesNotDivide {
                prime: p,
                order: self.group().order(),
            });
        }
        Ok(())
    }

    fn sylow_order(&self, p: u64) -> usize {
        self.factorization.p_part(p) as usize
    }
}

#[derive(Debug, Clone)]
pub struct HypothesisVerdict {
    pub prime: u64,
    pub holds: bool,
    /// No maximal invariant subgroup has order divisible by the prime.
    pub vacuous: bool,
    /// Maximal invariant subgroups whose order the prime divides.
    pub relevant: Vec<Subgroup>,
    /// The non-nilpotent ones among `relevant`.
    pub offending: Vec<Subgroup>,
}

pub fn hypothesis_holds(inst: &Instance, p: u64) -> Result<HypothesisVerdict> {
    inst.check_prime(p)?;
    let relevant: Vec<Subgroup> = inst
        .maximal_invariant
        .iter()
        .filter(|m| (m.order() as u64).is_multiple_of(p))
        .cloned()
        .collect();
    let offending: Vec<Subgroup> = relevant
        .iter()
        .filter(|m| !is_nilpotent(m))
        .cloned()
        .collect();
    Ok(HypothesisVerdict {
        prime: p,
        holds: offending.is_empty(),
        vacuous: relevant.is_empty(),
        relevant,
        offending,
    })
}

/// The four structural shapes, tested in this order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    /// `G` is nilpotent.
    Nilpotent,
    /// `G = Q ⋊ P` with `Q` a normal Sylow `q`-subgroup, `q ≠ p`.
    QNormalP,
    /// `G = P ⋊ Q` with `P` the normal Sylow `p`-subgroup.
    PNormalQ,
    /// `G = P × (Q ⋊ R)` for three distinct primes.
    PTimesQR,
}

impl Case {
    pub const ALL: [Case; 4] = [
        Case::Nilpotent,
        Case::QNormalP,
        Case::PNormalQ,
        Case::PTimesQR,
    ];

    pub fn number(self) -> u8 {
        match self {
            Case::Nilpotent => 1,
            Case::QNormalP => 2,
            Case::PNormalQ => 3,
            Case::PTimesQR => 4,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Case::Nilpotent => "nilpotent",
            Case::QNormalP => "q_normal_p",
            Case::PNormalQ => "p_normal_q",
            Case::PTimesQR => "p_times_qr",
        }
    }

    pub fn shape(self) -> &'static str {
        match self {
            Case::Nilpotent => "G nilpotent",
            Case::QNormalP => "G = Q ⋊ P",
            Case::PNormalQ => "G = P ⋊ Q",
            Case::PTimesQR => "G = P × (Q ⋊ R)",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.number(), self.shape())
    }
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub name: &'static str,
    pub subgroup: Subgroup,
}

#[derive(Debug, Clone)]
pub struct Refutation {
    pub case: Case,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct CaseReport {
    pub prime: u64,
    /// First matching case, or `None` when no case holds.
    pub case: Option<Case>,
    /// Witness subgroups of the first matching case.
    pub witnesses: Vec<Witness>,
    /// Named primes of the first matching case (`p`, `q`, `r`).
    pub witness_primes: Vec<(&'static str, u64)>,
    /// Every case that holds; the classifier reports the first.
    pub matching: Vec<Case>,
    /// Why each non-matching case fails.
    pub refutations: Vec<Refutation>,
}

impl CaseReport {
    pub fn witness(&self, name: &str) -> Option<&Subgroup> {
        self.witnesses
            .iter()
            .find(|w| w.name == name)
            .map(|w| &w.subgroup)
    }

    fn witness_prime(&self, name: &str) -> Option<u64> {
        self.witness_primes
            .iter()
            .find(|(n, _)| *n == name)
            .map(|&(_, p)| p)
    }

    /// Re-checks every condition of the reported case against the stored
    /// witnesses. `Ok(Err(reason))` means a condition failed.
    pub fn replay(&self, inst: &Instance) -> Result<Verdict> {
        let Some(case) = self.case else {
            return Ok(Ok(()));
        };
        let w = |name: &str| {
            self.witness(name)
                .cloned()
                .ok_or_else(|| format!("missing witness {name}"))
        };
        let pr = |name: &str| {
            self.witness_prime(name)
                .ok_or_else(|| format!("missing prime {name}"))
        };
        macro_rules! get {
            ($e:expr) => {
                match $e {
                    Ok(v) => v,
                    Err(msg) => return Ok(Err(msg)),
                }
            };
        }
        match case {
            Case::Nilpotent => Ok(if is_nilpotent(inst.whole()) {
                Ok(())
            } else {
                Err("G is not nilpotent".into())
            }),
            Case::QNormalP => {
                let found = TwoPrime {
                    normal: get!(w("Q")),
                    complement: get!(w("P")),
                    normal_core: get!(w("Q0")),
                    complement_max: get!(w("P0")),
                };
                verify_two_prime(inst, get!(pr("q")), get!(pr("p")), &found)
            }
            Case::PNormalQ => {
                let found = TwoPrime {
                    normal: get!(w("P")),
                    complement: get!(w("Q")),
                    normal_core: get!(w("P0")),
                    complement_max: get!(w("Q0")),
                };
                verify_two_prime(inst, get!(pr("p")), get!(pr("q")), &found)
            }
            Case::PTimesQR => {
                let found = CaseFour {
                    p_sylow: get!(w("P")),
                    inner: TwoPrime {
                        normal: get!(w("Q")),
                        complement: get!(w("R")),
                        normal_core: get!(w("Q0")),
                        complement_max: get!(w("R0")),
                    },
                    qr: get!(w("QR")),
                };
                verify_case_four(inst, get!(pr("p")), get!(pr("q")), get!(pr("r")), &found)
            }
        }
    }
}

/// `Err(reason)` names the first failed condition.
pub type Verdict = std::result::Result<(), String>;
type Found<T> = std::result::Result<T, String>;

macro_rules! require {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Ok(Err(format!($($fmt)+)));
        }
    };
}

/// Witnesses of the shape `G = N ⋊ C` shared by cases (2), (3) and the
/// inner factor of case (4).
#[derive(Debug, Clone)]
struct TwoPrime {
    /// Normal Sylow subgroup.
    normal: Subgroup,
    /// Invariant Sylow complement.
    complement: Subgroup,
    /// Invariant proper subgroup of `normal`, normal in `G`, with
    /// `normal_core × complement` the unique nilpotent maximal invariant
    /// subgroup containing `complement`.
    normal_core: Subgroup,
    /// Unique maximal invariant subgroup of `complement`.
    complement_max: Subgroup,
}

/// Conditions for `G = N ⋊ C` with `N` the normal Sylow `n_prime`-subgroup
/// and `C` an invariant Sylow `c_prime`-subgroup:
///
/// * `C` has a unique maximal invariant subgroup `C₀` (under the restricted
///   action) and `[N, C₀] = 1`;
/// * `N` has an invariant proper subgroup `N₀`, normal in `G`, such that
///   `N₀ × C` is the unique nilpotent maximal invariant subgroup of `G`
///   containing `C`.
fn verify_two_prime(inst: &Instance, n_prime: u64, c_prime: u64, w: &TwoPrime) -> Result<Verdict> {
    let act = inst.action();
    require!(n_prime != c_prime, "primes coincide ({n_prime})");
    require!(
        inst.factorization.exponent(n_prime) > 0 && inst.factorization.exponent(c_prime) > 0,
        "{n_prime} or {c_prime} does not divide |G|"
    );
    for s in [&w.normal, &w.complement, &w.normal_core, &w.complement_max] {
        require!(s.same_parent(inst.whole()), "witness from another group");
    }

    let (n, c) = (&w.normal, &w.complement);
    require!(
        n.order() == inst.sylow_order(n_prime) && is_normal_in_parent(n),
        "no normal Sylow {n_prime}-subgroup"
    );
    require!(
        is_invariant(n, act)?,
        "normal Sylow {n_prime}-subgroup is not invariant (a characteristic subgroup must be)"
    );
    require!(
        c.order() == inst.sylow_order(c_prime) && is_invariant(c, act)?,
        "Sylow {c_prime}-witness is not an invariant Sylow subgroup"
    );
    let kind = internal_product_kind(n, c)?;
    require!(
        matches!(kind, ProductKind::SemidirectXNormal | ProductKind::Direct),
        "G is not the product of its normal Sylow {n_prime}-subgroup and a Sylow {c_prime}-subgroup"
    );

    // C₀: the unique maximal invariant subgroup of C, computed inside C.
    let c_max = &w.complement_max;
    require!(c_max.is_subgroup_of(c), "C₀ is not inside C");
    let restricted = restrict_action(act, c)?;
    let c_inst = Instance::new(restricted.action.clone())?;
    let inside = restricted.embedded.pull(c_max)?;
    require!(
        c_inst.maximal_invariant() == [inside],
        "Sylow {c_prime}-subgroup has {} maximal invariant subgroups, not exactly one",
        c_inst.maximal_invariant().len()
    );
    require!(
        centralizes(n, c_max)?,
        "[N, C₀] ≠ 1 for the Sylow {n_prime}-subgroup N and C₀ of order {}",
        c_max.order()
    );

    // N₀ and uniqueness of the nilpotent maximal invariant subgroup over C.
    let n0 = &w.normal_core;
    require!(
        n0.is_subgroup_of(n) && n0.is_proper() && n0.order() < n.order(),
        "N₀ is not a proper subgroup of N"
    );
    require!(is_invariant(n0, act)?, "N₀ is not invariant");
    require!(is_normal_in_parent(n0), "N₀ is not normal in G");
    let m = join(n0, c)?;
    require!(
        internal_product_kind_in(n0, c, &m)? == ProductKind::Direct,
        "N₀C is not the direct product N₀ × C"
    );
    require!(
        inst.maximal_invariant().contains(&m),
        "N₀ × C (order {}) is not a maximal invariant subgroup",
        m.order()
    );
    require!(is_nilpotent(&m), "N₀ × C is not nilpotent");
    let over_c: Vec<&Subgroup> = inst
        .maximal_invariant()
        .iter()
        .filter(|h| c.is_subgroup_of(h) && is_nilpotent(h))
        .collect();
    require!(
        over_c == [&m],
        "{} nilpotent maximal invariant subgroups contain the Sylow {c_prime}-subgroup, not exactly N₀ × C",
        over_c.len()
    );
    Ok(Ok(()))
}

/// Derives `C₀` and `N₀` for each invariant Sylow `c_prime`-subgroup and
/// returns the first candidate passing [`verify_two_prime`].
fn find_two_prime(inst: &Instance, n_prime: u64, c_prime: u64) -> Result<Found<TwoPrime>> {
    let act = inst.action();
    let Some(normal) = normal_sylow(inst.lattice(), n_prime)? else {
        return Ok(Err(format!("the Sylow {n_prime}-subgroup is not normal")));
    };
    let candidates = invariant_sylows(inst.lattice(), act, c_prime)?;
    if candidates.is_empty() {
        return Ok(Err(format!("no invariant Sylow {c_prime}-subgroup")));
    }
    let mut first_failure = None;
    for complement in candidates {
        let attempt = (|| -> Result<Found<TwoPrime>> {
            if internal_product_kind(&normal, &complement)? == ProductKind::NotProduct {
                return Ok(Err(format!(
                    "G is not the product of its Sylow {n_prime}- and Sylow {c_prime}-subgroups"
                )));
            }
            let restricted = restrict_action(act, &complement)?;
            let c_inst = Instance::new(restricted.action.clone())?;
            let [c_max] = c_inst.maximal_invariant() else {
                return Ok(Err(format!(
                    "Sylow {c_prime}-subgroup has {} maximal invariant subgroups, not exactly one",
                    c_inst.maximal_invariant().len()
                )));
            };
            let complement_max = restricted.embedded.lift(c_max);
            let over: Vec<&Subgroup> = inst
                .maximal_invariant()
                .iter()
                .filter(|h| complement.is_subgroup_of(h) && is_nilpotent(h))
                .collect();
            let [m] = over.as_slice() else {
                return Ok(Err(format!(
                    "{} nilpotent maximal invariant subgroups contain the Sylow {c_prime}-subgroup, not exactly one",
                    over.len()
                )));
            };
            let normal_core = meet(m, &normal)?;
            Ok(Ok(TwoPrime {
                normal: normal.clone(),
                complement: complement.clone(),
                normal_core,
                complement_max,
            }))
        })()?;
        let verdict = match attempt {
            Ok(found) => match verify_two_prime(inst, n_prime, c_prime, &found)? {
                Ok(()) => return Ok(Ok(found)),
                Err(reason) => reason,
            },
            Err(reason) => reason,
        };
        first_failure.get_or_insert(verdict);
    }
    Ok(Err(first_failure.expect("at least one candidate")))
}

#[derive(Debug, Clone)]
struct CaseFour {
    p_sylow: Subgroup,
    inner: TwoPrime,
    qr: Subgroup,
}

/// `G = P × (Q ⋊ R)`: `P`, `Q` normal Sylow, `R` invariant Sylow, the inner
/// conditions hold inside `Q ⋊ R` with the restricted action, and `Q ⋊ R` is
/// the unique non-nilpotent maximal invariant subgroup of `G`.
fn verify_case_four(inst: &Instance, p: u64, q: u64, r: u64, w: &CaseFour) -> Result<Verdict> {
    let act = inst.action();
    require!(
        p != q && q != r && p != r,
        "primes {p}, {q}, {r} are not distinct"
    );
    for prime in [p, q, r] {
        require!(
            inst.factorization.exponent(prime) > 0,
            "{prime} does not divide |G|"
        );
    }
    let (big_p, big_q, big_r) = (&w.p_sylow, &w.inner.normal, &w.inner.complement);
    for s in [
        big_p,
        big_q,
        big_r,
        &w.qr,
        &w.inner.normal_core,
        &w.inner.complement_max,
    ] {
        require!(s.same_parent(inst.whole()), "witness from another group");
    }
    require!(
        big_p.order() == inst.sylow_order(p) && is_normal_in_parent(big_p),
        "no normal Sylow {p}-subgroup"
    );
    require!(
        big_q.order() == inst.sylow_order(q) && is_normal_in_parent(big_q),
        "no normal Sylow {q}-subgroup"
    );
    require!(
        is_invariant(big_p, act)? && is_invariant(big_q, act)?,
        "a normal Sylow subgroup is not invariant (a characteristic subgroup must be)"
    );
    require!(
        big_r.order() == inst.sylow_order(r) && is_invariant(big_r, act)?,
        "Sylow {r}-witness is not an invariant Sylow subgroup"
    );
    let qr = join(big_q, big_r)?;
    require!(qr == w.qr, "QR witness differs from the join of Q and R");
    require!(is_invariant(&qr, act)?, "QR is not invariant");
    require!(
        internal_product_kind(big_p, &qr)? == ProductKind::Direct,
        "G is not the direct product P × QR"
    );

    let restricted = restrict_action(act, &qr)?;
    let inner_inst = Instance::new(restricted.action.clone())?;
    let pulled = TwoPrime {
        normal: restricted.embedded.pull(big_q)?,
        complement: restricted.embedded.pull(big_r)?,
        normal_core: restricted.embedded.pull(&w.inner.normal_core)?,
        complement_max: restricted.embedded.pull(&w.inner.complement_max)?,
    };
    if let Err(reason) = verify_two_prime(&inner_inst, q, r, &pulled)? {
        return Ok(Err(format!("inside QR: {reason}")));
    }

    let non_nilpotent: Vec<&Subgroup> = inst
        .maximal_invariant()
        .iter()
        .filter(|h| !is_nilpotent(h))
        .collect();
    require!(
        non_nilpotent == [&qr],
        "{} non-nilpotent maximal invariant subgroups, QR is not the unique one",
        non_nilpotent.len()
    );
    Ok(Ok(()))
}

fn find_case_four(inst: &Instance, p: u64) -> Result<Found<(u64, u64, CaseFour)>> {
    let primes: Vec<u64> = inst.factorization.primes().collect();
    if primes.len() != 3 {
        return Ok(Err(format!(
            "|G| has {} prime divisors, not 3",
            primes.len()
        )));
    }
    let Some(p_sylow) = normal_sylow(inst.lattice(), p)? else {
        return Ok(Err(format!("the Sylow {p}-subgroup is not normal")));
    };
    let others: Vec<u64> = primes.into_iter().filter(|&x| x != p).collect();
    let mut failures = Vec::new();
    for (q, r) in [(others[0], others[1]), (others[1], others[0])] {
        let Some(big_q) = normal_sylow(inst.lattice(), q)? else {
            failures.push(format!("q={q}: the Sylow {q}-subgroup is not normal"));
            continue;
        };
        let candidates = invariant_sylows(inst.lattice(), inst.action(), r)?;
        if candidates.is_empty() {
            failures.push(format!("q={q}, r={r}: no invariant Sylow {r}-subgroup"));
        }
        for big_r in candidates {
            let qr = join(&big_q, &big_r)?;
            if !is_invariant(&qr, inst.action())? {
                failures.push(format!("q={q}, r={r}: QR is not invariant"));
                continue;
            }
            let restricted = restrict_action(inst.action(), &qr)?;
            let inner_inst = Instance::new(restricted.action.clone())?;
            let inner = match find_two_prime(&inner_inst, q, r)? {
                Ok(found) => found,
                Err(reason) => {
                    failures.push(format!("q={q}, r={r}: inside QR: {reason}"));
                    continue;
                }
            };
            let lift = |h: &Subgroup| restricted.embedded.lift(h);
            let found = CaseFour {
                p_sylow: p_sylow.clone(),
                inner: TwoPrime {
                    normal: lift(&inner.normal),
                    complement: lift(&inner.complement),
                    normal_core: lift(&inner.normal_core),
                    complement_max: lift(&inner.complement_max),
                },
                qr,
            };
            match verify_case_four(inst, p, q, r, &found)? {
                Ok(()) => return Ok(Ok((q, r, found))),
                Err(reason) => failures.push(format!("q={q}, r={r}: {reason}")),
            }
        }
    }
    Ok(Err(failures.join("; ")))
}

fn two_prime_case(inst: &Instance, p: u64, case: Case) -> Result<Found<CaseMatch>> {
    let others: Vec<u64> = inst.factorization.primes().filter(|&x| x != p).collect();
    if others.is_empty() {
        return Ok(Err(format!("G is a {p}-group")));
    }
    let mut failures = Vec::new();
    for q in others {
        let (n_prime, c_prime) = match case {
            Case::QNormalP => (q, p),
            _ => (p, q),
        };
        match find_two_prime(inst, n_prime, c_prime)? {
            Ok(t) => {
                let (witnesses, primes) = match case {
                    Case::QNormalP => (
                        vec![
                            ("Q", t.normal),
                            ("P", t.complement),
                            ("Q0", t.normal_core),
                            ("P0", t.complement_max),
                        ],
                        vec![("p", p), ("q", q)],
                    ),
                    _ => (
                        vec![
                            ("P", t.normal),
                            ("Q", t.complement),
                            ("P0", t.normal_core),
                            ("Q0", t.complement_max),
                        ],
                        vec![("p", p), ("q", q)],
                    ),
                };
                return Ok(Ok(CaseMatch { witnesses, primes }));
            }
            Err(reason) => failures.push(format!("q={q}: {reason}")),
        }
    }
    Ok(Err(failures.join("; ")))
}

struct CaseMatch {
    witnesses: Vec<(&'static str, Subgroup)>,
    primes: Vec<(&'static str, u64)>,
}

fn evaluate_case(inst: &Instance, p: u64, case: Case) -> Result<Found<CaseMatch>> {
    match case {
        Case::Nilpotent => Ok(if is_nilpotent(inst.whole()) {
            Ok(CaseMatch {
                witnesses: Vec::new(),
                primes: vec![("p", p)],
            })
        } else {
            Err("G is not nilpotent".into())
        }),
        Case::QNormalP | Case::PNormalQ => two_prime_case(inst, p, case),
        Case::PTimesQR => Ok(find_case_four(inst, p)?.map(|(q, r, f)| CaseMatch {
            witnesses: vec![
                ("P", f.p_sylow),
                ("Q", f.inner.normal),
                ("R", f.inner.complement),
                ("Q0", f.inner.normal_core),
                ("R0", f.inner.complement_max),
                ("QR", f.qr),
            ],
            primes: vec![("p", p), ("q", q), ("r", r)],
        })),
    }
}

/// Evaluates all four cases; reports the first that holds, with canonical
/// witnesses, and a refutation for each case that does not.
pub fn classify(inst: &Instance, p: u64) -> Result<CaseReport> {
    inst.check_prime(p)?;
    let mut report = CaseReport {
        prime: p,
        case: None,
        witnesses: Vec::new(),
        witness_primes: Vec::new(),
        matching: Vec::new(),
        refutations: Vec::new(),
    };
    for case in Case::ALL {
        match evaluate_case(inst, p, case)? {
            Ok(found) => {
                report.matching.push(case);
                if report.case.is_none() {
                    report.case = Some(case);
                    report.witnesses = found
                        .witnesses
                        .into_iter()
                        .map(|(name, subgroup)| Witness { name, subgroup })
                        .collect();
                    report.witness_primes = found.primes;
                }
            }
            Err(reason) => report.refutations.push(Refutation { case, reason }),
        }
    }
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct CrossValidation {
    pub hypothesis: HypothesisVerdict,
    pub case: CaseReport,
    /// The hypothesis holds iff some case holds.
    pub consistent: bool,
}

pub fn cross_validate(inst: &Instance, p: u64) -> Result<CrossValidation> {
    let hypothesis = hypothesis_holds(inst, p)?;
    let case = classify(inst, p)?;
    let consistent = hypothesis.holds == case.case.is_some();
    Ok(CrossValidation {
        hypothesis,
        case,
        consistent,
    })
}

/// If every maximal invariant subgroup is nilpotent but `G` is not, then `G`
/// is solvable, `|G|` has exactly two prime divisors, and some Sylow
/// subgroup is normal and invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPrimeConclusionCheck {
    pub premise: bool,
    pub solvable: bool,
    pub prime_divisors: usize,
    /// Prime of the first normal invariant Sylow subgroup, if any.
    pub normal_invariant_sylow: Option<u64>,
    pub passed: bool,
    pub failure: Option<String>,
}

pub fn check_two_prime_conclusion(inst: &Instance) -> Result<TwoPrimeConclusionCheck> {
    let g_nilpotent = is_nilpotent(inst.whole());
    let premise = !g_nilpotent && inst.maximal_invariant().iter().all(is_nilpotent);
    let solvable = is_solvable(inst.whole());
    let primes: Vec<u64> = inst.factorization.primes().collect();
    let mut normal_invariant_sylow = None;
    for &p in &primes {
        if let Some(s) = normal_sylow(inst.lattice(), p)? {
            if is_invariant(&s, inst.action())? {
                normal_invariant_sylow = Some(p);
                break;
            }
        }
    }
    let failure = if !premise {
        None
    } else if !solvable {
        Some("G is not solvable".to_string())
    } else if primes.len() != 2 {
        Some(format!("|G| has {} prime divisors, not 2", primes.len()))
    } else if normal_invariant_sylow.is_none() {
        Some("no normal invariant Sylow subgroup".to_string())
    } else {
        None
    };
    Ok(TwoPrimeConclusionCheck {
        premise,
        solvable,
        prime_divisors: primes.len(),
        normal_invariant_sylow,
        passed: failure.is_none(),
        failure,
    })
}

/// The hypothesis for `p` implies `G` is solvable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolubilityCheck {
    pub premise: bool,
    pub solvable: bool,
    pub passed: bool,
}

pub fn check_solubility_implication(inst: &Instance, p: u64) -> Result<SolubilityCheck> {
    let premise = hypothesis_holds(inst, p)?.holds;
    let solvable = is_solvable(inst.whole());
    Ok(SolubilityCheck {
        premise,
        solvable,
        passed: !premise || solvable,
    })
}

/// `G` is not `p`-nilpotent and the hypothesis holds, iff the classifier
/// reports `G = P ⋊ Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonPNilpotentCheck {
    pub p_nilpotent: bool,
    pub hypothesis: bool,
    pub classified_p_normal_q: bool,
    pub passed: bool,
}

pub fn check_non_p_nilpotent_characterization(
    inst: &Instance,
    p: u64,
) -> Result<NonPNilpotentCheck> {
    let p_nilpotent = is_p_nilpotent(inst.lattice(), p)?;
    let hypothesis = hypothesis_holds(inst, p)?.holds;
    let classified = classify(inst, p)?.case == Some(Case::PNormalQ);
    Ok(NonPNilpotentCheck {
        p_nilpotent,
        hypothesis,
        classified_p_normal_q: classified,
        passed: (!p_nilpotent && hypothesis) == classified,
    })
}

pub fn is_cyclic(h: &Subgroup) -> bool {
    let g = h.parent();
    h.elements().any(|x| g.element_order(x) == h.order())
}

/// With the trivial action: every maximal subgroup nilpotent and `G` not,
/// iff for each prime the classifier reports case (2) or (3) with a cyclic
/// non-normal Sylow subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchmidtCheck {
    pub minimal_non_nilpotent: bool,
    /// Per prime: whether the classifier produced the cyclic-complement form.
    pub per_prime: Vec<(u64, bool)>,
    pub passed: bool,
}

pub fn check_schmidt_specialization(inst: &Instance) -> Result<Option<SchmidtCheck>> {
    if !inst.action().is_trivial() {
        return Ok(None);
    }
    let minimal_non_nilpotent =
        !is_nilpotent(inst.whole()) && inst.maximal_invariant().iter().all(is_nilpotent);
    let mut per_prime = Vec::new();
    for p in inst.factorization.primes() {
        let report = classify(inst, p)?;
        let complement = match report.case {
            Some(Case::QNormalP) => report.witness("P"),
            Some(Case::PNormalQ) => report.witness("Q"),
            _ => None,
        };
        per_prime.push((p, complement.is_some_and(is_cyclic)));
    }
    let passed = per_prime
        .iter()
        .all(|&(_, form)| form == minimal_non_nilpotent);
    Ok(Some(SchmidtCheck {
        minimal_non_nilpotent,
        per_prime,
        passed,
    }))
}

/// The quaternion group under an order-3 automorphism: a unique maximal
/// invariant subgroup, of order 2, although the group is not cyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionFixtureCheck {
    pub action_order: usize,
    pub maximal_invariant_orders: Vec<usize>,
    pub has_element_of_order_eight: bool,
    pub passed: bool,
}

pub fn check_quaternion_fixture() -> Result<QuaternionFixtureCheck> {
    let g = Arc::new(crate::catalog::quaternion(8));
    let aut =
        crate::action::build_automorphism(&g, &crate::catalog::quaternion_cycling_images(&g))?;
    let act = crate::action::build_action(&g, vec![aut])?;
    let inst = Instance::new(act)?;
    let orders: Vec<usize> = inst
        .maximal_invariant()
        .iter()
        .map(Subgroup::order)
        .collect();
    let has_eight = (0..g.order()).any(|x| g.element_order(x) == 8);
    Ok(QuaternionFixtureCheck {
        action_order: inst.action().order(),
        passed: orders == [2] && !has_eight && inst.action().order() == 3,
        maximal_invariant_orders: orders,
        has_element_of_order_eight: has_eight,
    })
}

#[derive(Debug, Clone)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The quaternion fixture plus the trivial-action specialization on a few
/// built-in groups.
pub fn check_reference_fixtures() -> Result<Vec<NamedCheck>> {
    let mut out = Vec::new();
    let q = check_quaternion_fixture()?;
    out.push(NamedCheck {
        name: "Q8 with order-3 action".into(),
        passed: q.passed,
        detail: format!(
            "maximal invariant orders {:?}, element of order 8: {}",
            q.maximal_invariant_orders, q.has_element_of_order_eight
        ),
    });
    let fixtures: [(&str, PermGroup); 4] = [
        ("SL(2,3)", crate::catalog::sl23()),
        ("S3", crate::catalog::symmetric(3)),
        ("S4", crate::catalog::symmetric(4)),
        ("Q8", crate::catalog::quaternion(8)),
    ];
    for (name, g) in fixtures {
        let g = Arc::new(g);
        let inst = Instance::new(CoprimeAction::trivial(&g))?;
        let s = check_schmidt_specialization(&inst)?.expect("trivial action");
        out.push(NamedCheck {
            name: format!("{name} minimal non-nilpotent form"),
            passed: s.passed,
            detail: format!(
                "minimal non-nilpotent: {}, cyclic-complement form per prime: {:?}",
                s.minimal_non_nilpotent, s.per_prime
            ),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{build_action, build_automorphism};
    use crate::catalog;

    fn trivial(g: PermGroup) -> Instance {
        let g = Arc::new(g);
        Instance::new(CoprimeAction::trivial(&g)).unwrap()
    }

    #[test]
    fn hypothesis_on_symmetric_three() {
        let inst = trivial(catalog::symmetric(3));
        let v = hypothesis_holds(&inst, 3).unwrap();
        assert!(v.holds && !v.vacuous);
        assert_eq!(v.relevant.len(), 1);
        assert_eq!(
            hypothesis_holds(&inst, 5).unwrap_err(),
            Error::PrimeDoesNotDivide { prime: 5, order: 6 }
        );
    }

    #[test]
    fn hypothesis_fails_on_alternating_five() {
        let inst = trivial(catalog::alternating(5));
        let v = hypothesis_holds(&inst, 5).unwrap();
        assert!(!v.holds);
        assert!(v.offending.iter().any(|h| h.order() == 10));
    }

    #[test]
    fn symmetric_three_cases() {
        let inst = trivial(catalog::symmetric(3));
        let r2 = classify(&inst, 2).unwrap();
        assert_eq!(r2.case, Some(Case::QNormalP));
        assert_eq!(r2.witness("Q").unwrap().order(), 3);
        assert!(r2.witness("Q0").unwrap().is_trivial());
        let r3 = classify(&inst, 3).unwrap();
        assert_eq!(r3.case, Some(Case::PNormalQ));
        assert!(r2.replay(&inst).unwrap().is_ok());
        assert!(r3.replay(&inst).unwrap().is_ok());
    }

    #[test]
    fn abelian_is_case_one() {
        let inst = trivial(catalog::cyclic(12));
        for p in [2, 3] {
            let r = classify(&inst, p).unwrap();
            assert_eq!(r.case, Some(Case::Nilpotent));
        }
    }

    #[test]
    fn sl23_cases_two_and_three() {
        let inst = trivial(catalog::sl23());
        let r = classify(&inst, 3).unwrap();
        assert_eq!(r.case, Some(Case::QNormalP), "{:?}", r.refutations);
        assert_eq!(r.witness("Q").unwrap().order(), 8);
        assert_eq!(r.witness("P").unwrap().order(), 3);
        assert_eq!(r.witness("Q0").unwrap().order(), 2);
        assert!(r.witness("P0").unwrap().is_trivial());
        assert!(r.replay(&inst).unwrap().is_ok());

        let r = classify(&inst, 2).unwrap();
        assert_eq!(r.case, Some(Case::PNormalQ), "{:?}", r.refutations);
        assert_eq!(r.witness("P0").unwrap().order(), 2);
        assert!(r.witness("Q0").unwrap().is_trivial());
    }

    #[test]
    fn case_four_on_c5_times_sl23() {
        let g = catalog::direct_product(&[&catalog::cyclic(5), &catalog::sl23()]);
        let inst = trivial(g);
        let r = classify(&inst, 5).unwrap();
        assert_eq!(r.case, Some(Case::PTimesQR), "{:?}", r.refutations);
        assert_eq!(r.witness("QR").unwrap().order(), 24);
        assert!(r.replay(&inst).unwrap().is_ok());
        for p in [2, 3] {
            let cv = cross_validate(&inst, p).unwrap();
            assert!(!cv.hypothesis.holds && cv.case.case.is_none() && cv.consistent);
        }
    }

    #[test]
    fn quaternion_under_order_three_action() {
        let q = check_quaternion_fixture().unwrap();
        assert!(q.passed, "{q:?}");
        let g = Arc::new(catalog::quaternion(8));
        let aut = build_automorphism(&g, &catalog::quaternion_cycling_images(&g)).unwrap();
        let inst = Instance::new(build_action(&g, vec![aut]).unwrap()).unwrap();
        let cv = cross_validate(&inst, 2).unwrap();
        assert!(cv.hypothesis.holds && cv.consistent);
        assert_eq!(cv.case.case, Some(Case::Nilpotent));
    }

    #[test]
    fn frobenius_21_with_involutory_action() {
        let g = Arc::new(catalog::frobenius(7, 3));
        let aut = build_automorphism(&g, &catalog::frobenius_kernel_power_images(&g, 6)).unwrap();
        let inst = Instance::new(build_action(&g, vec![aut]).unwrap()).unwrap();
        let orders: Vec<_> = inst
            .maximal_invariant()
            .iter()
            .map(Subgroup::order)
            .collect();
        assert_eq!(orders, vec![3, 7]);
        assert_eq!(classify(&inst, 7).unwrap().case, Some(Case::PNormalQ));
        assert_eq!(classify(&inst, 3).unwrap().case, Some(Case::QNormalP));
        let a = check_two_prime_conclusion(&inst).unwrap();
        assert!(a.premise && a.passed);
    }

    #[test]
    fn two_prime_conclusion_examples() {
        let s3 = check_two_prime_conclusion(&trivial(catalog::symmetric(3))).unwrap();
        assert!(s3.premise && s3.passed && s3.normal_invariant_sylow == Some(3));
        let sl = check_two_prime_conclusion(&trivial(catalog::sl23())).unwrap();
        assert!(sl.premise && sl.passed && sl.normal_invariant_sylow == Some(2));
        let c = check_two_prime_conclusion(&trivial(catalog::cyclic(6))).unwrap();
        assert!(!c.premise && c.passed);
    }

    #[test]
    fn non_p_nilpotent_examples() {
        let sl = trivial(catalog::sl23());
        let c = check_non_p_nilpotent_characterization(&sl, 2).unwrap();
        assert!(!c.p_nilpotent && c.hypothesis && c.classified_p_normal_q && c.passed);
        let s3 = trivial(catalog::symmetric(3));
        let c = check_non_p_nilpotent_characterization(&s3, 2).unwrap();
        assert!(c.p_nilpotent && !c.classified_p_normal_q && c.passed);
        let c6 = trivial(catalog::cyclic(6));
        let c = check_non_p_nilpotent_characterization(&c6, 2).unwrap();
        assert!(c.passed && !c.classified_p_normal_q);
    }

    #[test]
    fn reference_fixtures_pass() {
        for check in check_reference_fixtures().unwrap() {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
        let s = check_schmidt_specialization(&trivial(catalog::sl23()))
            .unwrap()
            .unwrap();
        assert!(s.minimal_non_nilpotent);
        let s = check_schmidt_specialization(&trivial(catalog::symmetric(4)))
            .unwrap()
            .unwrap();
        assert!(!s.minimal_non_nilpotent && s.per_prime.iter().all(|&(_, f)| !f));
    }

    #[test]
    fn replay_detects_tampered_witness() {
        let inst = trivial(catalog::sl23());
        let mut r = classify(&inst, 3).unwrap();
        let trivial_sub = inst.lattice().trivial().clone();
        for w in &mut r.witnesses {
            if w.name == "Q0" {
                w.subgroup = trivial_sub.clone();
            }
        }
        assert!(r.replay(&inst).unwrap().is_err());
    }
}
