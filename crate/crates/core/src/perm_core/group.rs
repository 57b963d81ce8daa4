use std::collections::HashMap;
use std::fmt;

use super::Permutation;
use crate::error::{Error, Result};

pub const DEFAULT_ELEMENT_CAP: usize = 2000;

/// Limits applied while closing a generating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupConfig {
    pub element_cap: usize,
}

impl Default for GroupConfig {
    fn default() -> Self {
        GroupConfig {
            element_cap: DEFAULT_ELEMENT_CAP,
        }
    }
}

/// A finite permutation group with every element enumerated.
///
/// Elements are sorted lexicographically by their image sequences, so the
/// identity (images `0, 1, 2, ..`) always sits at index 0. Products are
/// left-to-right: `mul(i, j)` is the index of "apply element `i`, then
/// element `j`". The multiplication table is dense, `order()²` entries.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_indices: Vec<usize>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    element_orders: Vec<u32>,
    /// Breadth-first spanning tree: `tree[e] = Some((parent, k))` means
    /// `elements[e] = elements[parent] * generators[k]`.
    tree: Vec<Option<(u32, u32)>>,
    /// Element indices in breadth-first discovery order; parents precede children.
    bfs_order: Vec<u32>,
}

impl PermGroup {
    /// Identity is always at index 0 under lexicographic element order.
    pub const IDENTITY: usize = 0;

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element indices of the generators, in generator order.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn identity_index(&self) -> usize {
        Self::IDENTITY
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.lookup.get(p).map(|&i| i as usize)
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.order() + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    /// `x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xy = self.mul(x, y);
        let yx_inv = self.inv(self.mul(y, x));
        self.mul(yx_inv, xy)
    }

    /// `g⁻¹ x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn element_order(&self, i: usize) -> usize {
        self.element_orders[i] as usize
    }

    pub fn spanning_tree(&self) -> &[Option<(u32, u32)>] {
        &self.tree
    }

    pub fn bfs_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.bfs_order.iter().map(|&i| i as usize)
    }

    /// Closure of `generators` inside this group, as sorted element indices.
    pub fn closure_of(&self, generators: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[Self::IDENTITY] = true;
        let mut queue = vec![Self::IDENTITY];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in generators {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        queue.sort_unstable();
        queue
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

pub fn generate_group(gens: &[Permutation]) -> Result<PermGroup> {
    generate_group_with(gens, &GroupConfig::default())
}

/// Breadth-first product closure of `gens`.
pub fn generate_group_with(gens: &[Permutation], config: &GroupConfig) -> Result<PermGroup> {
    let first = gens.first().ok_or(Error::NoGenerators)?;
    let degree = first.degree();
    if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: bad.degree(),
        });
    }

    let mut found: Vec<Permutation> = vec![Permutation::identity(degree)];
    let mut seen: HashMap<Permutation, u32> = HashMap::new();
    seen.insert(found[0].clone(), 0);
    let mut bfs_tree: Vec<Option<(u32, u32)>> = vec![None];
    let mut head = 0;
    while head < found.len() {
        let x = found[head].clone();
        for (k, g) in gens.iter().enumerate() {
            let y = x.then(g);
            if seen.contains_key(&y) {
                continue;
            }
            if found.len() >= config.element_cap {
                return Err(Error::CapExceeded {
                    what: "group order",
                    cap: config.element_cap,
                    reached: found.len() + 1,
                });
            }
            seen.insert(y.clone(), found.len() as u32);
            bfs_tree.push(Some((head as u32, k as u32)));
            found.push(y);
        }
        head += 1;
    }

    let n = found.len();
    let mut by_rank: Vec<usize> = (0..n).collect();
    by_rank.sort_unstable_by(|&a, &b| found[a].cmp(&found[b]));
    // bfs id -> canonical index
    let mut canon = vec![0u32; n];
    for (rank, &b) in by_rank.iter().enumerate() {
        canon[b] = rank as u32;
    }
    let elements: Vec<Permutation> = by_rank.iter().map(|&b| found[b].clone()).collect();
    let lookup: HashMap<Permutation, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i as u32))
        .collect();
    debug_assert!(elements[0].is_identity());

    let mut tree = vec![None; n];
    for (b, node) in bfs_tree.iter().enumerate() {
        tree[canon[b] as usize] = node.map(|(parent, k)| (canon[parent as usize], k));
    }
    let bfs_order: Vec<u32> = (0..n).map(|b| canon[b]).collect();

    // right multiplication by each generator
    let right: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| elements.iter().map(|x| lookup[&x.then(g)]).collect())
        .collect();

    let mut mul = vec![0u32; n * n];
    for i in 0..n {
        let row = &mut mul[i * n..(i + 1) * n];
        row[PermGroup::IDENTITY] = i as u32;
        for &j in &bfs_order[1..] {
            let (parent, k) = tree[j as usize].expect("non-identity has a parent");
            row[j as usize] = right[k as usize][row[parent as usize] as usize];
        }
    }

    let mut inv = vec![0u32; n];
    for i in 0..n {
        inv[i] = lookup[&elements[i].inverse()];
    }

    let element_orders = elements.iter().map(|p| p.order() as u32).collect();
    let generator_indices = gens.iter().map(|g| lookup[g] as usize).collect();

    Ok(PermGroup {
        degree,
        generators: gens.to_vec(),
        generator_indices,
        elements,
        lookup,
        mul,
        inv,
        element_orders,
        tree,
        bfs_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn perm(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    /// Independent closure: multiply every pair of known elements until nothing new appears.
    fn brute_closure(gens: &[Permutation]) -> Vec<Permutation> {
        let mut set: std::collections::BTreeSet<Permutation> = gens.iter().cloned().collect();
        set.insert(Permutation::identity(gens[0].degree()));
        loop {
            let snapshot: Vec<_> = set.iter().cloned().collect();
            let before = set.len();
            for a in &snapshot {
                for b in &snapshot {
                    set.insert(a.then(b));
                }
            }
            if set.len() == before {
                return set.into_iter().collect();
            }
        }
    }

    pub(crate) fn quaternion_regular() -> Vec<Permutation> {
        // units encoded as (sign, unit) with unit in {1,i,j,k}; index = 2*unit + sign
        let table = |a: usize, b: usize| -> usize {
            // unit products: [unit_a][unit_b] -> (sign flip, unit)
            const T: [[(usize, usize); 4]; 4] = [
                [(0, 0), (0, 1), (0, 2), (0, 3)],
                [(0, 1), (1, 0), (0, 3), (1, 2)],
                [(0, 2), (1, 3), (1, 0), (0, 1)],
                [(0, 3), (0, 2), (1, 1), (1, 0)],
            ];
            let (sa, ua) = (a % 2, a / 2);
            let (sb, ub) = (b % 2, b / 2);
            let (s, u) = T[ua][ub];
            2 * u + (sa ^ sb ^ s)
        };
        [2usize, 4]
            .iter()
            .map(|&g| Permutation::from_images((0..8).map(|x| table(x, g)).collect()).unwrap())
            .collect()
    }

    #[test]
    fn cyclic_closure() {
        let g = generate_group(&[perm("(1 2 3)", 3)]).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.element(0).is_identity());
    }

    #[test]
    fn symmetric_three_matches_brute_force() {
        let gens = [perm("(1 2)", 3), perm("(1 2 3)", 3)];
        let g = generate_group(&gens).unwrap();
        let brute = brute_closure(&gens);
        assert_eq!(brute.len(), 6);
        assert_eq!(g.elements(), brute.as_slice());
    }

    #[test]
    fn quaternion_regular_representation() {
        let gens = quaternion_regular();
        assert_eq!(brute_closure(&gens).len(), 8);
        let g = generate_group(&gens).unwrap();
        assert_eq!(g.order(), 8);
        // exactly one involution in Q8
        assert_eq!((0..8).filter(|&i| g.element_order(i) == 2).count(), 1);
    }

    #[test]
    fn cap_exceeded_reports_cap() {
        let gens = [perm("(1 2)", 5), perm("(1 2 3 4 5)", 5)];
        let err = generate_group_with(&gens, &GroupConfig { element_cap: 50 }).unwrap_err();
        match err {
            Error::CapExceeded { cap, reached, .. } => {
                assert_eq!(cap, 50);
                assert!(reached > 50);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degree_mismatch_and_empty() {
        assert!(matches!(
            generate_group(&[perm("(1 2)", 2), perm("(1 2)", 3)]),
            Err(Error::DegreeMismatch {
                expected: 2,
                found: 3
            })
        ));
        assert!(matches!(generate_group(&[]), Err(Error::NoGenerators)));
    }

    fn check_table(g: &PermGroup) {
        let n = g.order();
        let check = |i: usize, j: usize| {
            assert_eq!(g.element(g.mul(i, j)), &g.element(i).then(g.element(j)));
        };
        if n <= 64 {
            for i in 0..n {
                for j in 0..n {
                    check(i, j);
                }
            }
        } else {
            let mut rng = rand::rngs::StdRng::seed_from_u64(7);
            for _ in 0..10_000 {
                check(rng.gen_range(0..n), rng.gen_range(0..n));
            }
        }
        for i in 0..n {
            assert_eq!(g.mul(i, g.inv(i)), PermGroup::IDENTITY);
        }
    }

    #[test]
    fn multiplication_table_matches_composition() {
        check_table(&generate_group(&[perm("(1 2)", 3), perm("(1 2 3)", 3)]).unwrap());
        check_table(&generate_group(&quaternion_regular()).unwrap());
        check_table(&generate_group(&[perm("(1 2)", 5), perm("(1 2 3 4 5)", 5)]).unwrap());
    }

    #[test]
    fn closure_is_idempotent_and_divides_factorial() {
        let g = generate_group(&[perm("(1 2)(3 4)", 5), perm("(1 2 3 4 5)", 5)]).unwrap();
        assert_eq!(120 % g.order(), 0);
        let again = generate_group(g.elements()).unwrap();
        assert_eq!(again.elements(), g.elements());
    }

    #[test]
    fn spanning_tree_rebuilds_every_element() {
        let g = generate_group(&[perm("(1 2)", 4), perm("(1 2 3 4)", 4)]).unwrap();
        for e in g.bfs_order() {
            match g.spanning_tree()[e] {
                None => assert_eq!(e, PermGroup::IDENTITY),
                Some((parent, k)) => {
                    let gk = g.generator_indices()[k as usize];
                    assert_eq!(g.mul(parent as usize, gk), e);
                }
            }
        }
    }
}
