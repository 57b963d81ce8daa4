//! Brute-force reference computations. Everything here works on raw element
//! indices and the multiplication table; none of it calls the lattice,
//! structure, or classification code under test.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use maxinv_core::{CoprimeAction, PermGroup};

pub type Elems = Vec<usize>;

pub fn closure(g: &PermGroup, gens: &[usize]) -> Elems {
    let mut seen = BTreeSet::from([PermGroup::IDENTITY]);
    let mut stack = vec![PermGroup::IDENTITY];
    while let Some(x) = stack.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Subgroups generated by at most `max_gens` elements, or all subgroups when
/// `max_gens` is `None`. Each maps to one generating set.
pub fn subgroups(g: &PermGroup, max_gens: Option<usize>) -> BTreeMap<Elems, Vec<usize>> {
    let mut all: BTreeMap<Elems, Vec<usize>> = BTreeMap::new();
    all.insert(vec![PermGroup::IDENTITY], Vec::new());
    let mut layer: Vec<(Elems, Vec<usize>)> = vec![(vec![PermGroup::IDENTITY], Vec::new())];
    let mut rounds = 0;
    while !layer.is_empty() && max_gens.is_none_or(|m| rounds < m) {
        rounds += 1;
        let mut next = Vec::new();
        for (h, gens) in &layer {
            for x in 0..g.order() {
                if h.binary_search(&x).is_ok() {
                    continue;
                }
                let mut more = gens.clone();
                more.push(x);
                let k = closure(g, &more);
                if !all.contains_key(&k) {
                    all.insert(k.clone(), more.clone());
                    next.push((k, more));
                }
            }
        }
        layer = next;
    }
    all
}

pub fn commutator(g: &PermGroup, x: usize, y: usize) -> usize {
    let xi = g.inv(x);
    let yi = g.inv(y);
    g.mul(g.mul(xi, yi), g.mul(x, y))
}

/// Nilpotency through the upper central series.
pub fn is_nilpotent(g: &PermGroup, h: &[usize]) -> bool {
    let mut z: BTreeSet<usize> = BTreeSet::from([PermGroup::IDENTITY]);
    loop {
        let next: BTreeSet<usize> = h
            .iter()
            .copied()
            .filter(|&x| h.iter().all(|&y| z.contains(&commutator(g, x, y))))
            .collect();
        if next.len() == h.len() {
            return true;
        }
        if next == z {
            return false;
        }
        z = next;
    }
}

pub fn derived(g: &PermGroup, h: &[usize]) -> Elems {
    let comms: BTreeSet<usize> = h
        .iter()
        .flat_map(|&x| h.iter().map(move |&y| (x, y)))
        .map(|(x, y)| commutator(g, x, y))
        .collect();
    closure(g, &comms.into_iter().collect::<Vec<_>>())
}

pub fn is_solvable(g: &PermGroup) -> bool {
    let mut h: Elems = (0..g.order()).collect();
    loop {
        let d = derived(g, &h);
        if d.len() == 1 {
            return true;
        }
        if d.len() == h.len() {
            return false;
        }
        h = d;
    }
}

pub fn is_normal(g: &PermGroup, h: &[usize]) -> bool {
    (0..g.order()).all(|x| {
        h.iter()
            .all(|&y| h.binary_search(&g.mul(g.mul(g.inv(x), y), x)).is_ok())
    })
}

pub fn is_invariant(act: &CoprimeAction, h: &[usize]) -> bool {
    act.generators()
        .iter()
        .all(|a| h.iter().all(|&y| h.binary_search(&a.apply(y)).is_ok()))
}

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Maximal proper invariant subgroups, given every subgroup.
pub fn maximal_invariant(g: &PermGroup, act: &CoprimeAction, all: &[Elems]) -> Vec<Elems> {
    let inv: Vec<&Elems> = all
        .iter()
        .filter(|h| h.len() < g.order() && is_invariant(act, h))
        .collect();
    inv.iter()
        .filter(|h| !inv.iter().any(|k| k.len() > h.len() && is_subset(h, k)))
        .map(|h| (*h).clone())
        .collect()
}

pub fn p_part(n: usize, p: u64) -> usize {
    let p = p as usize;
    let mut m = n;
    let mut out = 1;
    while m.is_multiple_of(p) {
        m /= p;
        out *= p;
    }
    out
}

pub fn prime_divisors(n: usize) -> Vec<u64> {
    (2..=n)
        .filter(|&d| n.is_multiple_of(d) && (2..d).all(|e| d % e != 0))
        .map(|d| d as u64)
        .collect()
}

/// The hypothesis: every maximal invariant subgroup of order divisible by
/// `p` is nilpotent.
pub fn hypothesis(g: &PermGroup, maximal: &[Elems], p: u64) -> bool {
    maximal
        .iter()
        .filter(|h| h.len() % p as usize == 0)
        .all(|h| is_nilpotent(g, h))
}

/// `p`-nilpotent iff the `p'`-elements generate a subgroup of order `|G|_{p'}`.
pub fn is_p_nilpotent(g: &PermGroup, p: u64) -> bool {
    let pp: Vec<usize> = (0..g.order())
        .filter(|&x| !g.element_order(x).is_multiple_of(p as usize))
        .collect();
    closure(g, &pp).len() == g.order() / p_part(g.order(), p)
}

pub fn center(g: &PermGroup, h: &[usize]) -> Elems {
    h.iter()
        .copied()
        .filter(|&x| h.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
        .collect()
}
