use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::ElementSet;
use crate::error::{Error, Result};
use crate::perm_core::{generate_group, PermGroup, Permutation};

/// A subgroup of a [`PermGroup`], stored as a bitset over the parent's
/// element indices.
///
/// Equality requires the same parent (by pointer) and the same members.
/// Ordering ignores the parent and sorts by `(order, members)`.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<PermGroup>,
    members: ElementSet,
}

impl Subgroup {
    pub fn trivial(parent: &Arc<PermGroup>) -> Self {
        Subgroup {
            parent: Arc::clone(parent),
            members: ElementSet::from_indices(parent.order(), [PermGroup::IDENTITY]),
        }
    }

    pub fn whole(parent: &Arc<PermGroup>) -> Self {
        Subgroup {
            parent: Arc::clone(parent),
            members: ElementSet::full(parent.order()),
        }
    }

    /// Subgroup generated by the given element indices.
    pub fn generated_by(parent: &Arc<PermGroup>, generators: &[usize]) -> Self {
        Subgroup {
            parent: Arc::clone(parent),
            members: ElementSet::from_indices(parent.order(), parent.closure_of(generators)),
        }
    }

    /// Validates that `members` is a subgroup.
    pub fn from_members(parent: &Arc<PermGroup>, members: ElementSet) -> Result<Self> {
        if members.capacity() != parent.order() || !members.contains(PermGroup::IDENTITY) {
            return Err(Error::NotClosed);
        }
        let list: Vec<usize> = members.iter().collect();
        for &i in &list {
            for &j in &list {
                if !members.contains(parent.mul(i, j)) {
                    return Err(Error::NotClosed);
                }
            }
        }
        Ok(Subgroup {
            parent: Arc::clone(parent),
            members,
        })
    }

    /// Caller guarantees closure.
    pub(crate) fn from_members_unchecked(parent: &Arc<PermGroup>, members: ElementSet) -> Self {
        debug_assert!(members.contains(PermGroup::IDENTITY));
        Subgroup {
            parent: Arc::clone(parent),
            members,
        }
    }

    pub fn parent(&self) -> &Arc<PermGroup> {
        &self.parent
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.count()
    }

    pub fn contains(&self, element: usize) -> bool {
        self.members.contains(element)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn same_parent(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent)
    }

    pub(crate) fn check_same_parent(&self, other: &Subgroup) -> Result<()> {
        if self.same_parent(other) {
            Ok(())
        } else {
            Err(Error::MixedParents)
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.same_parent(other) && self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_whole()
    }

    /// `g⁻¹ H g`.
    pub fn conjugate_by(&self, g: usize) -> Subgroup {
        let members = ElementSet::from_indices(
            self.parent.order(),
            self.members.iter().map(|x| self.parent.conjugate(x, g)),
        );
        Subgroup::from_members_unchecked(&self.parent, members)
    }

    /// Greedy generating set: scan members in index order, keeping each one
    /// not already generated by the previous picks.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = ElementSet::from_indices(self.parent.order(), [PermGroup::IDENTITY]);
        for x in self.members.iter() {
            if span.contains(x) {
                continue;
            }
            gens.push(x);
            span = ElementSet::from_indices(self.parent.order(), self.parent.closure_of(&gens));
            if span.count() == self.order() {
                break;
            }
        }
        gens
    }

    pub fn generator_permutations(&self) -> Vec<Permutation> {
        self.generators()
            .into_iter()
            .map(|i| self.parent.element(i).clone())
            .collect()
    }

    /// This subgroup as a group in its own right.
    ///
    /// Because the parent's elements are sorted, the subgroup's elements keep
    /// their relative order: child index `k` maps to the `k`-th member.
    pub fn as_group(&self) -> Result<Embedded> {
        let members: Vec<usize> = self.members.iter().collect();
        let perms: Vec<Permutation> = members
            .iter()
            .map(|&i| self.parent.element(i).clone())
            .collect();
        let gens = {
            let g = self.generator_permutations();
            if g.is_empty() {
                vec![Permutation::identity(self.parent.degree())]
            } else {
                g
            }
        };
        let group = generate_group(&gens)?;
        debug_assert_eq!(group.elements(), perms.as_slice());
        let mut to_child = vec![None; self.parent.order()];
        for (k, &i) in members.iter().enumerate() {
            to_child[i] = Some(k as u32);
        }
        Ok(Embedded {
            group: Arc::new(group),
            to_parent: members,
            to_child,
            parent: Arc::clone(&self.parent),
        })
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, <", self.order())?;
        for (k, p) in self.generator_permutations().iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(">)")
    }
}

/// A subgroup rebuilt as a standalone [`PermGroup`], with index maps in
/// both directions.
#[derive(Clone)]
pub struct Embedded {
    group: Arc<PermGroup>,
    parent: Arc<PermGroup>,
    to_parent: Vec<usize>,
    to_child: Vec<Option<u32>>,
}

impl Embedded {
    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn parent(&self) -> &Arc<PermGroup> {
        &self.parent
    }

    pub fn to_parent(&self, child: usize) -> usize {
        self.to_parent[child]
    }

    pub fn to_child(&self, parent_index: usize) -> Option<usize> {
        self.to_child[parent_index].map(|k| k as usize)
    }

    /// Image in the parent of a subgroup of the embedded group.
    pub fn lift(&self, h: &Subgroup) -> Subgroup {
        debug_assert!(Arc::ptr_eq(h.parent(), &self.group));
        let members =
            ElementSet::from_indices(self.parent.order(), h.elements().map(|k| self.to_parent[k]));
        Subgroup::from_members_unchecked(&self.parent, members)
    }

    /// Preimage of a parent subgroup lying inside the embedded one.
    pub fn pull(&self, h: &Subgroup) -> Result<Subgroup> {
        if !Arc::ptr_eq(h.parent(), &self.parent) {
            return Err(Error::MixedParents);
        }
        let mut members = ElementSet::empty(self.group.order());
        for i in h.elements() {
            let k = self.to_child(i).ok_or(Error::NotContained)?;
            members.insert(k);
        }
        Ok(Subgroup::from_members_unchecked(&self.group, members))
    }
}
