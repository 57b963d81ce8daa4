//! Subgroups and the full subgroup lattice.

mod bitset;
mod subgroup;

use std::collections::HashMap;
use std::sync::Arc;

pub use bitset::ElementSet;
pub use subgroup::{Embedded, Subgroup};

use crate::error::{Error, Result};
use crate::perm_core::PermGroup;

pub const DEFAULT_LATTICE_CAP: usize = 512;
const CONTAINMENT_MATRIX_LIMIT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeConfig {
    /// Largest group order whose lattice will be enumerated.
    pub order_cap: usize,
}

impl Default for LatticeConfig {
    fn default() -> Self {
        LatticeConfig {
            order_cap: DEFAULT_LATTICE_CAP,
        }
    }
}

/// Every subgroup of one group, deduplicated and sorted by `(order, members)`.
pub struct LatticeIndex {
    parent: Arc<PermGroup>,
    subgroups: Vec<Subgroup>,
    positions: HashMap<ElementSet, usize>,
    /// `supersets[i]` holds `j` iff `subgroups[i] ⊆ subgroups[j]`.
    supersets: Option<Vec<ElementSet>>,
}

impl LatticeIndex {
    pub fn parent(&self) -> &Arc<PermGroup> {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        if !Arc::ptr_eq(h.parent(), &self.parent) {
            return None;
        }
        self.positions.get(h.members()).copied()
    }

    pub fn trivial(&self) -> &Subgroup {
        &self.subgroups[0]
    }

    pub fn whole(&self) -> &Subgroup {
        self.subgroups
            .last()
            .expect("lattice always holds the whole group")
    }

    /// Whether `subgroups[i] ⊆ subgroups[j]`.
    pub fn is_contained(&self, i: usize, j: usize) -> bool {
        match &self.supersets {
            Some(rows) => rows[i].contains(j),
            None => self.subgroups[i]
                .members()
                .is_subset(self.subgroups[j].members()),
        }
    }

    /// Subgroups of a given order, in lattice order.
    pub fn of_order(&self, order: usize) -> impl Iterator<Item = &Subgroup> + '_ {
        self.subgroups.iter().filter(move |h| h.order() == order)
    }

    /// Subgroups contained in `h`.
    pub fn below<'a>(&'a self, h: &'a Subgroup) -> impl Iterator<Item = &'a Subgroup> + 'a {
        self.subgroups.iter().filter(move |k| k.is_subgroup_of(h))
    }

    pub fn maximal_subgroups(&self) -> Vec<Subgroup> {
        maximal_members(&self.subgroups).expect("single parent")
    }
}

pub fn all_subgroups(parent: &Arc<PermGroup>) -> Result<LatticeIndex> {
    all_subgroups_with(parent, &LatticeConfig::default())
}

/// Cyclic-extension enumeration.
///
/// Every subgroup is generated by its elements of prime-power order, so
/// starting from the cyclic subgroups of prime-power order and repeatedly
/// joining a known subgroup with one such cyclic subgroup reaches every
/// subgroup. Deduplication is by bitset.
pub fn all_subgroups_with(parent: &Arc<PermGroup>, config: &LatticeConfig) -> Result<LatticeIndex> {
    let n = parent.order();
    if n > config.order_cap {
        return Err(Error::CapExceeded {
            what: "lattice group order",
            cap: config.order_cap,
            reached: n,
        });
    }

    let mut cyclic: Vec<(usize, ElementSet)> = Vec::new();
    let mut cyclic_seen: HashMap<ElementSet, ()> = HashMap::new();
    for x in 0..n {
        if !is_prime_power(parent.element_order(x)) {
            continue;
        }
        let set = ElementSet::from_indices(n, parent.closure_of(&[x]));
        if cyclic_seen.insert(set.clone(), ()).is_none() {
            cyclic.push((x, set));
        }
    }

    // (members, generators)
    let mut found: Vec<(ElementSet, Vec<usize>)> = Vec::new();
    let mut positions: HashMap<ElementSet, usize> = HashMap::new();
    let trivial = ElementSet::from_indices(n, [PermGroup::IDENTITY]);
    positions.insert(trivial.clone(), 0);
    found.push((trivial, Vec::new()));
    let mut frontier: Vec<usize> = Vec::new();
    for (x, set) in &cyclic {
        positions.insert(set.clone(), found.len());
        frontier.push(found.len());
        found.push((set.clone(), vec![*x]));
    }

    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &h in &frontier {
            for (x, cset) in &cyclic {
                if cset.is_subset(&found[h].0) {
                    continue;
                }
                let mut gens = found[h].1.clone();
                gens.push(*x);
                let joined = extend_closure(parent, &found[h].0, &gens);
                if !positions.contains_key(&joined) {
                    positions.insert(joined.clone(), found.len());
                    next.push(found.len());
                    found.push((joined, gens));
                }
            }
        }
        frontier = next;
    }

    let mut subgroups: Vec<Subgroup> = found
        .into_iter()
        .map(|(set, _)| Subgroup::from_members_unchecked(parent, set))
        .collect();
    subgroups.sort();
    let positions: HashMap<ElementSet, usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, h)| (h.members().clone(), i))
        .collect();

    let count = subgroups.len();
    let supersets = (count <= CONTAINMENT_MATRIX_LIMIT).then(|| {
        subgroups
            .iter()
            .map(|h| {
                ElementSet::from_indices(
                    count,
                    subgroups
                        .iter()
                        .enumerate()
                        .filter(|(_, k)| h.members().is_subset(k.members()))
                        .map(|(j, _)| j),
                )
            })
            .collect()
    });

    Ok(LatticeIndex {
        parent: Arc::clone(parent),
        subgroups,
        positions,
        supersets,
    })
}

/// Closes `seed ∪ gens` under right multiplication by `gens`. When `seed` is
/// a subgroup generated by a subset of `gens`, the result is `⟨gens⟩`.
fn extend_closure(parent: &PermGroup, seed: &ElementSet, gens: &[usize]) -> ElementSet {
    let mut set = seed.clone();
    let mut queue: Vec<usize> = seed.iter().collect();
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &g in gens {
            let y = parent.mul(x, g);
            if set.insert(y) {
                queue.push(y);
            }
        }
    }
    set
}

fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n && !n.is_multiple_of(p) {
        p += 1;
    }
    let p = if n.is_multiple_of(p) { p } else { n };
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// Proper members not strictly contained in another proper member, sorted
/// by `(order, members)`.
pub fn maximal_members(candidates: &[Subgroup]) -> Result<Vec<Subgroup>> {
    if let Some(first) = candidates.first() {
        for c in candidates {
            first.check_same_parent(c)?;
        }
    }
    let proper: Vec<&Subgroup> = candidates.iter().filter(|h| h.is_proper()).collect();
    let mut out: Vec<Subgroup> = proper
        .iter()
        .filter(|h| {
            !proper
                .iter()
                .any(|k| k.order() > h.order() && h.members().is_subset(k.members()))
        })
        .map(|h| (*h).clone())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Smallest subgroup containing both.
pub fn join(h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    h.check_same_parent(k)?;
    let parent = h.parent();
    let union = h.members().union(k.members());
    let gens: Vec<usize> = union.iter().collect();
    Ok(Subgroup::from_members_unchecked(
        parent,
        extend_closure(parent, &union, &gens),
    ))
}

pub fn meet(h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    h.check_same_parent(k)?;
    Ok(Subgroup::from_members_unchecked(
        h.parent(),
        h.members().intersection(k.members()),
    ))
}

/// Whether `h` is normal in `k`; requires `h ⊆ k`.
pub fn is_normal(h: &Subgroup, k: &Subgroup) -> Result<bool> {
    h.check_same_parent(k)?;
    if !h.members().is_subset(k.members()) {
        return Err(Error::NotContained);
    }
    let parent = h.parent();
    Ok(k.elements()
        .all(|g| h.elements().all(|x| h.contains(parent.conjugate(x, g)))))
}

/// `h` normal in its parent group.
pub fn is_normal_in_parent(h: &Subgroup) -> bool {
    is_normal(h, &Subgroup::whole(h.parent())).expect("whole group contains h")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn lat(g: PermGroup) -> LatticeIndex {
        all_subgroups(&Arc::new(g)).unwrap()
    }

    fn orders(l: &LatticeIndex) -> Vec<usize> {
        l.subgroups().iter().map(Subgroup::order).collect()
    }

    #[test]
    fn cyclic_four() {
        let l = lat(catalog::cyclic(4));
        assert_eq!(orders(&l), vec![1, 2, 4]);
    }

    #[test]
    fn symmetric_three() {
        let l = lat(catalog::symmetric(3));
        assert_eq!(orders(&l), vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn quaternion() {
        let l = lat(catalog::quaternion(8));
        assert_eq!(orders(&l), vec![1, 2, 4, 4, 4, 8]);
    }

    #[test]
    fn prime_powers() {
        assert!(is_prime_power(2) && is_prime_power(8) && is_prime_power(9) && is_prime_power(7));
        assert!(!is_prime_power(1) && !is_prime_power(6) && !is_prime_power(12));
    }

    #[test]
    fn cap_is_enforced() {
        let g = Arc::new(catalog::symmetric(4));
        let err = all_subgroups_with(&g, &LatticeConfig { order_cap: 10 });
        assert!(matches!(
            err,
            Err(Error::CapExceeded {
                cap: 10,
                reached: 24,
                ..
            })
        ));
    }

    #[test]
    fn maximal_members_examples() {
        let c4 = lat(catalog::cyclic(4));
        let m = maximal_members(c4.subgroups()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 2);

        let s3 = lat(catalog::symmetric(3));
        let m = maximal_members(s3.subgroups()).unwrap();
        assert_eq!(
            m.iter().map(Subgroup::order).collect::<Vec<_>>(),
            vec![2, 2, 2, 3]
        );

        let pair = [s3.trivial().clone(), s3.whole().clone()];
        let m = maximal_members(&pair).unwrap();
        assert_eq!(m, vec![s3.trivial().clone()]);
    }

    #[test]
    fn mixed_parents_rejected() {
        let a = lat(catalog::cyclic(4));
        let b = lat(catalog::cyclic(4));
        assert_eq!(
            maximal_members(&[a.trivial().clone(), b.whole().clone()]).unwrap_err(),
            Error::MixedParents
        );
        assert_eq!(
            join(a.trivial(), b.trivial()).unwrap_err(),
            Error::MixedParents
        );
        assert_eq!(
            meet(a.trivial(), b.trivial()).unwrap_err(),
            Error::MixedParents
        );
    }

    #[test]
    fn join_meet_in_symmetric_three() {
        let s3 = lat(catalog::symmetric(3));
        let twos: Vec<_> = s3.of_order(2).cloned().collect();
        assert_eq!(join(&twos[0], &twos[1]).unwrap().order(), 6);
        assert!(meet(&twos[0], &twos[1]).unwrap().is_trivial());
        for h in s3.subgroups() {
            assert_eq!(&join(h, s3.trivial()).unwrap(), h);
            assert_eq!(&meet(h, s3.whole()).unwrap(), h);
        }
    }

    #[test]
    fn normality() {
        let q8 = lat(catalog::quaternion(8));
        let center = q8.of_order(2).next().unwrap();
        assert!(is_normal(center, q8.whole()).unwrap());

        let s3 = lat(catalog::symmetric(3));
        let two = s3.of_order(2).next().unwrap();
        assert!(!is_normal(two, s3.whole()).unwrap());
        let three = s3.of_order(3).next().unwrap();
        assert!(is_normal(three, s3.whole()).unwrap());
        assert_eq!(is_normal(s3.whole(), two).unwrap_err(), Error::NotContained);
    }

    #[test]
    fn index_two_subgroups_are_normal() {
        for g in [
            catalog::symmetric(4),
            catalog::dihedral(6),
            catalog::quaternion(16),
        ] {
            let l = lat(g);
            for h in l.subgroups() {
                for k in l.subgroups() {
                    if h.is_subgroup_of(k) && k.order() == 2 * h.order() {
                        assert!(is_normal(h, k).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn containment_matrix_matches_bitsets() {
        let l = lat(catalog::symmetric(4));
        assert_eq!(l.len(), 30);
        for i in 0..l.len() {
            for j in 0..l.len() {
                assert_eq!(
                    l.is_contained(i, j),
                    l.get(i).members().is_subset(l.get(j).members())
                );
            }
        }
    }
}
