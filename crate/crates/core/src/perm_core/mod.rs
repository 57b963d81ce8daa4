//! Permutations, group closure, and commutator subgroups.

mod group;
mod permutation;

pub use group::{generate_group, generate_group_with, GroupConfig, PermGroup, DEFAULT_ELEMENT_CAP};
pub use permutation::Permutation;

use crate::error::Result;
use crate::lattice::{ElementSet, Subgroup};

/// `[X, Y]`: the subgroup generated by all `x⁻¹y⁻¹xy` with `x ∈ X`, `y ∈ Y`.
pub fn commutator_subgroup(x: &Subgroup, y: &Subgroup) -> Result<Subgroup> {
    x.check_same_parent(y)?;
    let parent = x.parent();
    let commutators = ElementSet::from_indices(
        parent.order(),
        x.elements()
            .flat_map(|a| y.elements().map(move |b| parent.commutator(a, b))),
    );
    let gens: Vec<usize> = commutators.iter().collect();
    Ok(Subgroup::generated_by(parent, &gens))
}

pub fn derived_subgroup(h: &Subgroup) -> Subgroup {
    commutator_subgroup(h, h).expect("same parent")
}

/// `H ⊇ H' ⊇ H'' ⊇ ...` up to and including the first repeated term.
pub fn derived_series(h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = derived_subgroup(last);
        if &next == last {
            return series;
        }
        series.push(next);
    }
}
