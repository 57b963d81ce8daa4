//! Automorphisms given as element-index permutations, coprime actions, and
//! invariant-subgroup queries.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::{maximal_members, ElementSet, Embedded, LatticeIndex, Subgroup};
use crate::perm_core::{PermGroup, Permutation};

/// Upper bound on the size of a generated automorphism group.
pub const DEFAULT_ACTION_CAP: usize = 20_000;

/// An automorphism of a [`PermGroup`], stored as the permutation it induces
/// on element indices.
#[derive(Clone)]
pub struct Automorphism {
    target: Arc<PermGroup>,
    map: Vec<u32>,
}

impl Automorphism {
    pub fn identity(target: &Arc<PermGroup>) -> Self {
        Automorphism {
            target: Arc::clone(target),
            map: (0..target.order() as u32).collect(),
        }
    }

    /// Validates an element-index map: bijective, identity-fixing, and
    /// multiplicative on every pair.
    pub fn from_element_map(target: &Arc<PermGroup>, map: Vec<usize>) -> Result<Self> {
        let n = target.order();
        if map.len() != n {
            return Err(Error::NotBijective);
        }
        let mut hit = vec![false; n];
        for &x in &map {
            if x >= n || std::mem::replace(&mut hit[x], true) {
                return Err(Error::NotBijective);
            }
        }
        if map[PermGroup::IDENTITY] != PermGroup::IDENTITY {
            return Err(Error::NotAHomomorphism("identity is not fixed".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if map[target.mul(i, j)] != target.mul(map[i], map[j]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "φ({}·{}) ≠ φ({})·φ({})",
                        target.element(i),
                        target.element(j),
                        target.element(i),
                        target.element(j)
                    )));
                }
            }
        }
        Ok(Automorphism {
            target: Arc::clone(target),
            map: map.into_iter().map(|x| x as u32).collect(),
        })
    }

    pub fn target(&self) -> &Arc<PermGroup> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, element: usize) -> usize {
        self.map[element] as usize
    }

    pub fn element_map(&self) -> &[u32] {
        &self.map
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            target: Arc::clone(&self.target),
            map: self.map.iter().map(|&x| other.map[x as usize]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = power.then(self);
            k += 1;
        }
        k
    }

    pub fn image_of(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(set.capacity(), set.iter().map(|x| self.apply(x)))
    }

    /// Image of each of the target's generators.
    pub fn generator_images(&self) -> Vec<Permutation> {
        self.target
            .generator_indices()
            .iter()
            .map(|&g| self.target.element(self.apply(g)).clone())
            .collect()
    }
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.target, &other.target) && self.map == other.map
    }
}

impl Eq for Automorphism {}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.generator_images().iter().map(|p| p.to_string()))
            .finish()
    }
}

/// Extends images of the group's generators (0-based generator index,
/// image permutation) to an automorphism, following the closure's spanning
/// tree, then validates it exhaustively.
pub fn build_automorphism(
    target: &Arc<PermGroup>,
    gen_images: &[(usize, Permutation)],
) -> Result<Automorphism> {
    let count = target.generators().len();
    let mut images: Vec<Option<usize>> = vec![None; count];
    for (index, image) in gen_images {
        if *index >= count {
            return Err(Error::GeneratorOutOfRange {
                index: *index,
                count,
            });
        }
        if images[*index].is_some() {
            return Err(Error::DuplicateImage { index: *index });
        }
        let element = (image.degree() == target.degree())
            .then(|| target.index_of(image))
            .flatten()
            .ok_or(Error::ImageNotInGroup { index: *index })?;
        images[*index] = Some(element);
    }
    let images: Vec<usize> = images
        .into_iter()
        .enumerate()
        .map(|(index, img)| img.ok_or(Error::MissingImage { index }))
        .collect::<Result<_>>()?;

    let mut map = vec![usize::MAX; target.order()];
    map[PermGroup::IDENTITY] = PermGroup::IDENTITY;
    let tree = target.spanning_tree();
    for e in target.bfs_order().skip(1) {
        let (parent, k) = tree[e].expect("non-identity elements have a parent");
        map[e] = target.mul(map[parent as usize], images[k as usize]);
    }
    for (k, &g) in target.generator_indices().iter().enumerate() {
        if map[g] != images[k] {
            return Err(Error::NotAHomomorphism(format!(
                "generator {} is forced to {} but was given {}",
                k + 1,
                target.element(map[g]),
                target.element(images[k])
            )));
        }
    }
    Automorphism::from_element_map(target, map)
}

/// The group of automorphisms generated by some automorphisms of `G`, with
/// order coprime to `|G|`.
#[derive(Clone)]
pub struct CoprimeAction {
    target: Arc<PermGroup>,
    generators: Vec<Automorphism>,
    elements: Vec<Automorphism>,
}

impl CoprimeAction {
    pub fn trivial(target: &Arc<PermGroup>) -> Self {
        CoprimeAction {
            target: Arc::clone(target),
            generators: Vec::new(),
            elements: vec![Automorphism::identity(target)],
        }
    }

    pub fn target(&self) -> &Arc<PermGroup> {
        &self.target
    }

    pub fn generators(&self) -> &[Automorphism] {
        &self.generators
    }

    /// All automorphisms in the generated group, identity first.
    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }
}

impl fmt::Debug for CoprimeAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoprimeAction")
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

pub fn build_action(target: &Arc<PermGroup>, auts: Vec<Automorphism>) -> Result<CoprimeAction> {
    build_action_with(target, auts, DEFAULT_ACTION_CAP)
}

/// Closes the automorphisms under composition and checks coprimality.
pub fn build_action_with(
    target: &Arc<PermGroup>,
    auts: Vec<Automorphism>,
    cap: usize,
) -> Result<CoprimeAction> {
    if auts.iter().any(|a| !Arc::ptr_eq(a.target(), target)) {
        return Err(Error::MixedTargets);
    }
    let identity = Automorphism::identity(target);
    let mut seen: HashMap<Vec<u32>, ()> = HashMap::new();
    seen.insert(identity.map.clone(), ());
    let mut found = vec![identity];
    let mut head = 0;
    while head < found.len() {
        let x = found[head].clone();
        for a in &auts {
            let y = x.then(a);
            if seen.contains_key(&y.map) {
                continue;
            }
            if found.len() >= cap {
                return Err(Error::CapExceeded {
                    what: "automorphism group order",
                    cap,
                    reached: found.len() + 1,
                });
            }
            seen.insert(y.map.clone(), ());
            found.push(y);
        }
        head += 1;
    }
    found.sort_by(|a, b| a.map.cmp(&b.map));

    let action_order = found.len();
    let group_order = target.order();
    let gcd = action_order.gcd(&group_order);
    if gcd != 1 {
        return Err(Error::NotCoprime {
            action_order,
            group_order,
            gcd,
        });
    }
    Ok(CoprimeAction {
        target: Arc::clone(target),
        generators: auts,
        elements: found,
    })
}

fn check_target(h: &Subgroup, act: &CoprimeAction) -> Result<()> {
    if Arc::ptr_eq(h.parent(), act.target()) {
        Ok(())
    } else {
        Err(Error::MixedTargets)
    }
}

/// Invariance under the generating automorphisms, which implies invariance
/// under the whole generated group.
pub fn is_invariant(h: &Subgroup, act: &CoprimeAction) -> Result<bool> {
    check_target(h, act)?;
    Ok(act
        .generators()
        .iter()
        .all(|a| &a.image_of(h.members()) == h.members()))
}

/// Invariance checked against every element of the acting group.
pub fn is_invariant_under_all(h: &Subgroup, act: &CoprimeAction) -> Result<bool> {
    check_target(h, act)?;
    Ok(act
        .elements()
        .iter()
        .all(|a| &a.image_of(h.members()) == h.members()))
}

pub fn invariant_subgroups(act: &CoprimeAction, lat: &LatticeIndex) -> Result<Vec<Subgroup>> {
    if !Arc::ptr_eq(lat.parent(), act.target()) {
        return Err(Error::MixedTargets);
    }
    let mut out = Vec::new();
    for h in lat.subgroups() {
        if is_invariant(h, act)? {
            out.push(h.clone());
        }
    }
    Ok(out)
}

/// Proper invariant subgroups not contained in a larger proper invariant
/// subgroup, sorted by `(order, members)`.
pub fn maximal_invariant_subgroups(
    act: &CoprimeAction,
    lat: &LatticeIndex,
) -> Result<Vec<Subgroup>> {
    let invariant = invariant_subgroups(act, lat)?;
    maximal_members(&invariant)
}

/// Orbits of the acting group on the lattice, as lattice positions.
pub fn lattice_orbits(act: &CoprimeAction, lat: &LatticeIndex) -> Result<Vec<Vec<usize>>> {
    if !Arc::ptr_eq(lat.parent(), act.target()) {
        return Err(Error::MixedTargets);
    }
    let mut assigned = vec![false; lat.len()];
    let mut orbits = Vec::new();
    for start in 0..lat.len() {
        if assigned[start] {
            continue;
        }
        let mut orbit: Vec<usize> = act
            .elements()
            .iter()
            .map(|a| {
                let image = a.image_of(lat.get(start).members());
                let h = Subgroup::from_members(lat.parent(), image)?;
                lat.position(&h).ok_or(Error::NotClosed)
            })
            .collect::<Result<_>>()?;
        orbit.sort_unstable();
        orbit.dedup();
        for &i in &orbit {
            assigned[i] = true;
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// An invariant subgroup as a group of its own, with the induced action.
#[derive(Clone)]
pub struct Restriction {
    pub embedded: Embedded,
    pub action: CoprimeAction,
}

impl fmt::Debug for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Restriction")
            .field("order", &self.group().order())
            .field("action", &self.action)
            .finish()
    }
}

impl Restriction {
    pub fn group(&self) -> &Arc<PermGroup> {
        self.embedded.group()
    }
}

pub fn restrict_action(act: &CoprimeAction, h: &Subgroup) -> Result<Restriction> {
    if !is_invariant(h, act)? {
        return Err(Error::NotInvariant);
    }
    let embedded = h.as_group()?;
    let child = Arc::clone(embedded.group());
    let restricted = act
        .generators()
        .iter()
        .map(|a| {
            let map = (0..child.order())
                .map(|k| {
                    embedded
                        .to_child(a.apply(embedded.to_parent(k)))
                        .expect("invariant subgroup maps into itself")
                })
                .collect();
            Automorphism::from_element_map(&child, map)
        })
        .collect::<Result<Vec<_>>>()?;
    let action = build_action(&child, restricted)?;
    Ok(Restriction { embedded, action })
}
