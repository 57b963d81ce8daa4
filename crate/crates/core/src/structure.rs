//! Sylow subgroups, nilpotency, p-nilpotency, solvability, centralizing
//! conditions and internal products.

use std::fmt;
use std::sync::Arc;

use crate::action::{is_invariant, CoprimeAction};
use crate::error::{Error, Result};
use crate::lattice::{is_normal, is_normal_in_parent, meet, LatticeIndex, Subgroup};
use crate::perm_core::{commutator_subgroup, derived_series, PermGroup};

/// `n = ∏ pᵉ` with primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn of(n: u64) -> Self {
        assert!(n >= 1);
        let mut factors = Vec::new();
        let mut m = n;
        let mut p = 2u64;
        while p * p <= m {
            if m.is_multiple_of(p) {
                let mut e = 0;
                while m.is_multiple_of(p) {
                    m /= p;
                    e += 1;
                }
                factors.push((p, e));
            }
            p += 1;
        }
        if m > 1 {
            factors.push((m, 1));
        }
        PrimeFactorization { factors }
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// Largest power of `p` dividing `n`.
    pub fn p_part(&self, p: u64) -> u64 {
        p.pow(self.exponent(p))
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, &(p, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("·")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn sylow_order(group_order: usize, p: u64) -> Result<usize> {
    let f = PrimeFactorization::of(group_order as u64);
    if !is_prime(p) || f.exponent(p) == 0 {
        return Err(Error::PrimeDoesNotDivide {
            prime: p,
            order: group_order,
        });
    }
    Ok(f.p_part(p) as usize)
}

/// All Sylow `p`-subgroups of the lattice's group, in lattice order.
pub fn sylow_subgroups(lat: &LatticeIndex, p: u64) -> Result<Vec<Subgroup>> {
    let size = sylow_order(lat.parent().order(), p)?;
    Ok(lat.of_order(size).cloned().collect())
}

pub fn invariant_sylows(lat: &LatticeIndex, act: &CoprimeAction, p: u64) -> Result<Vec<Subgroup>> {
    let mut out = Vec::new();
    for s in sylow_subgroups(lat, p)? {
        if is_invariant(&s, act)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// First invariant Sylow `p`-subgroup in lattice order.
pub fn invariant_sylow(
    lat: &LatticeIndex,
    act: &CoprimeAction,
    p: u64,
) -> Result<Option<Subgroup>> {
    Ok(invariant_sylows(lat, act, p)?.into_iter().next())
}

/// The Sylow `p`-subgroup when it is normal (equivalently, unique).
pub fn normal_sylow(lat: &LatticeIndex, p: u64) -> Result<Option<Subgroup>> {
    let sylows = sylow_subgroups(lat, p)?;
    Ok(if sylows.len() == 1 {
        sylows.into_iter().next()
    } else {
        None
    })
}

/// Every Sylow subgroup of `h` is normal in `h`.
///
/// A Sylow `p`-subgroup of `h` is normal iff it is the only one, iff the
/// `p`-elements of `h` number exactly the full `p`-power of `|h|`, so the
/// test needs no lattice of `h`.
pub fn is_nilpotent(h: &Subgroup) -> bool {
    let parent = h.parent();
    let f = PrimeFactorization::of(h.order() as u64);
    f.factors().iter().all(|&(p, e)| {
        let p_elements = h
            .elements()
            .filter(|&x| is_power_of(parent.element_order(x) as u64, p))
            .count();
        p_elements as u64 == p.pow(e)
    })
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// `γ₁ = H`, `γₖ₊₁ = [γₖ, H]`, up to and including the first repeated term.
pub fn lower_central_series(h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = commutator_subgroup(last, h).expect("same parent");
        if &next == last {
            return series;
        }
        series.push(next);
    }
}

pub fn is_nilpotent_by_central_series(h: &Subgroup) -> bool {
    lower_central_series(h)
        .last()
        .is_some_and(Subgroup::is_trivial)
}

/// Normal subgroup of order `|G| / |Sylow p|`, if any.
pub fn normal_p_complement(lat: &LatticeIndex, p: u64) -> Result<Option<Subgroup>> {
    let n = lat.parent().order();
    let complement_order = n / sylow_order(n, p)?;
    Ok(lat
        .of_order(complement_order)
        .find(|h| is_normal_in_parent(h))
        .cloned())
}

pub fn is_p_nilpotent(lat: &LatticeIndex, p: u64) -> Result<bool> {
    Ok(normal_p_complement(lat, p)?.is_some())
}

pub fn is_solvable(h: &Subgroup) -> bool {
    derived_series(h).last().is_some_and(Subgroup::is_trivial)
}

pub fn is_group_solvable(g: &Arc<PermGroup>) -> bool {
    is_solvable(&Subgroup::whole(g))
}

/// Every element of `x` commutes with every element of `y`.
pub fn centralizes(x: &Subgroup, y: &Subgroup) -> Result<bool> {
    x.check_same_parent(y)?;
    let g = x.parent();
    Ok(x.elements()
        .all(|a| y.elements().all(|b| g.mul(a, b) == g.mul(b, a))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Direct,
    /// `X ⋊ Y`: `X` normal, `Y` not.
    SemidirectXNormal,
    /// `Y ⋊ X`: `Y` normal, `X` not.
    SemidirectYNormal,
    NotProduct,
}

/// How `x` and `y` factor the ambient group `k`: trivial meet and
/// `|x||y| = |k|`, then normality of each factor in `k`.
pub fn internal_product_kind_in(x: &Subgroup, y: &Subgroup, k: &Subgroup) -> Result<ProductKind> {
    x.check_same_parent(y)?;
    x.check_same_parent(k)?;
    if !x.is_subgroup_of(k) || !y.is_subgroup_of(k) {
        return Ok(ProductKind::NotProduct);
    }
    if !meet(x, y)?.is_trivial() || x.order() * y.order() != k.order() {
        return Ok(ProductKind::NotProduct);
    }
    Ok(match (is_normal(x, k)?, is_normal(y, k)?) {
        (true, true) => ProductKind::Direct,
        (true, false) => ProductKind::SemidirectXNormal,
        (false, true) => ProductKind::SemidirectYNormal,
        (false, false) => ProductKind::NotProduct,
    })
}

/// [`internal_product_kind_in`] with the whole parent group as ambient.
pub fn internal_product_kind(x: &Subgroup, y: &Subgroup) -> Result<ProductKind> {
    internal_product_kind_in(x, y, &Subgroup::whole(x.parent()))
}
