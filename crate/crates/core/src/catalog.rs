//! Constructors for small permutation groups and a few of their
//! automorphisms, used as fixtures by tests and the census corpus.
//!
//! Every constructor panics only on arguments outside its documented range;
//! the generated groups are all far below the default element cap.

use crate::perm_core::{generate_group, PermGroup, Permutation};

fn build(gens: Vec<Permutation>) -> PermGroup {
    generate_group(&gens).expect("catalog groups stay under the element cap")
}

fn cycle(n: usize) -> Permutation {
    Permutation::from_images((0..n).map(|x| (x + 1) % n).collect()).expect("rotation")
}

/// Right-regular representation of a group given by its multiplication rule
/// on `0..n`, generated by the listed elements.
fn regular(n: usize, mul: impl Fn(usize, usize) -> usize, gens: &[usize]) -> PermGroup {
    build(
        gens.iter()
            .map(|&g| {
                Permutation::from_images((0..n).map(|x| mul(x, g)).collect()).expect("regular")
            })
            .collect(),
    )
}

/// Cyclic group of order `n` acting on `n` points.
pub fn cyclic(n: usize) -> PermGroup {
    assert!(n >= 1);
    build(vec![cycle(n)])
}

/// Symmetries of the regular `n`-gon; order `2n`, `n >= 3`.
pub fn dihedral(n: usize) -> PermGroup {
    assert!(n >= 3);
    let reflection =
        Permutation::from_images((0..n).map(|x| (n - x) % n).collect()).expect("reflection");
    build(vec![cycle(n), reflection])
}

/// Dicyclic group `⟨a, x | a^{2m} = 1, x² = a^m, x⁻¹ a x = a⁻¹⟩` of order
/// `4m` in its regular representation; generators are `a` then `x`.
pub fn dicyclic(m: usize) -> PermGroup {
    assert!(m >= 1);
    let two_m = 2 * m;
    // element a^k x^e has index k + 2m·e
    let mul = |u: usize, v: usize| -> usize {
        let (k, e) = (u % two_m, u / two_m);
        let (l, f) = (v % two_m, v / two_m);
        if e == 0 {
            (k + l) % two_m + two_m * f
        } else if f == 0 {
            (k + two_m - l) % two_m + two_m
        } else {
            (k + two_m - l + m) % two_m
        }
    };
    regular(4 * m, mul, &[1, two_m])
}

/// Generalized quaternion group of the given 2-power order (at least 8).
pub fn quaternion(order: usize) -> PermGroup {
    assert!(order >= 8 && order.is_power_of_two());
    dicyclic(order / 4)
}

pub fn symmetric(n: usize) -> PermGroup {
    assert!(n >= 2);
    if n == 2 {
        return cyclic(2);
    }
    let transposition = Permutation::from_cycles(n, &[&[0, 1]]).expect("transposition");
    build(vec![transposition, cycle(n)])
}

pub fn alternating(n: usize) -> PermGroup {
    assert!(n >= 3);
    let three = Permutation::from_cycles(n, &[&[0, 1, 2]]).expect("3-cycle");
    if n == 3 {
        return build(vec![three]);
    }
    let long: Vec<usize> = if n % 2 == 1 {
        (0..n).collect()
    } else {
        (1..n).collect()
    };
    build(vec![
        three,
        Permutation::from_cycles(n, &[&long]).expect("long cycle"),
    ])
}

fn mult_order(u: usize, p: usize) -> usize {
    let mut x = u % p;
    let mut k = 1;
    while x != 1 {
        x = x * u % p;
        k += 1;
    }
    k
}

/// Affine group `x ↦ ux + c` on `Z/p` with `u` ranging over the unique
/// order-`q` subgroup of units; order `pq`, requires `q | p - 1`.
/// Generators are the translation `x ↦ x + 1` then the scaling.
pub fn frobenius(p: usize, q: usize) -> PermGroup {
    assert!(q >= 2 && (p - 1).is_multiple_of(q));
    let unit = (2..p)
        .find(|&u| mult_order(u, p) == q)
        .expect("units of Z/p are cyclic");
    build(vec![cycle(p), scaling(p, unit)])
}

fn scaling(p: usize, unit: usize) -> Permutation {
    Permutation::from_images((0..p).map(|x| x * unit % p).collect()).expect("unit scaling")
}

/// Nonzero vectors of `F₃²`, indexed `0..8`.
fn f3_plane_points() -> Vec<(usize, usize)> {
    (0..9)
        .map(|v| (v / 3, v % 3))
        .filter(|&v| v != (0, 0))
        .collect()
}

fn f3_matrix(m: [[usize; 2]; 2]) -> Permutation {
    let pts = f3_plane_points();
    let images = pts
        .iter()
        .map(|&(x, y)| {
            let img = (
                (m[0][0] * x + m[0][1] * y) % 3,
                (m[1][0] * x + m[1][1] * y) % 3,
            );
            pts.iter().position(|&q| q == img).expect("invertible")
        })
        .collect();
    Permutation::from_images(images).expect("matrix action")
}

/// `SL(2, 3)` acting on the 8 nonzero vectors of `F₃²`; order 24.
pub fn sl23() -> PermGroup {
    build(vec![
        f3_matrix([[1, 1], [0, 1]]),
        f3_matrix([[0, 2], [1, 0]]),
    ])
}

/// `GL(2, 3)` acting on the 8 nonzero vectors of `F₃²`; order 48.
pub fn gl23() -> PermGroup {
    build(vec![
        f3_matrix([[1, 1], [0, 1]]),
        f3_matrix([[0, 2], [1, 0]]),
        f3_matrix([[2, 0], [0, 1]]),
    ])
}

/// `PSL(2, 7)` acting on the projective line over `F₇` (point 7 is ∞); order 168.
pub fn psl27() -> PermGroup {
    const INF: usize = 7;
    let translate = Permutation::from_images(
        (0..8)
            .map(|x| if x == INF { INF } else { (x + 1) % 7 })
            .collect(),
    )
    .expect("translation");
    let square = Permutation::from_images(
        (0..8)
            .map(|x| if x == INF { INF } else { 2 * x % 7 })
            .collect(),
    )
    .expect("scaling");
    let invert = Permutation::from_images(
        (0..8)
            .map(|x| match x {
                INF => 0,
                0 => INF,
                // -1/x: inverse of x is x^5 mod 7
                _ => (7 - x.pow(5) % 7) % 7,
            })
            .collect(),
    )
    .expect("inversion");
    build(vec![translate, square, invert])
}

/// External direct product on disjoint point sets; the product's generators
/// are the factors' generators in order, each shifted onto its block.
pub fn direct_product(factors: &[&PermGroup]) -> PermGroup {
    assert!(!factors.is_empty());
    let total: usize = factors.iter().map(|g| g.degree()).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for g in factors {
        gens.extend(g.generators().iter().map(|p| p.shifted(offset, total)));
        offset += g.degree();
    }
    build(gens)
}

pub fn elementary_abelian(p: usize, rank: usize) -> PermGroup {
    let c = cyclic(p);
    let copies: Vec<&PermGroup> = (0..rank).map(|_| &c).collect();
    direct_product(&copies)
}

/// Generator images, as consumed by
/// [`build_automorphism`](crate::action::build_automorphism).
pub type GeneratorImages = Vec<(usize, Permutation)>;

fn power(p: &Permutation, k: usize) -> Permutation {
    (0..k).fold(Permutation::identity(p.degree()), |acc, _| acc.then(p))
}

/// The order-3 automorphism of a group of order 8 generated by two elements
/// `i, j` of order 4 (the quaternion group): `i ↦ j`, `j ↦ ij`.
pub fn quaternion_cycling_images(q8: &PermGroup) -> GeneratorImages {
    let gens = q8.generators();
    assert_eq!(gens.len(), 2);
    vec![(0, gens[1].clone()), (1, gens[0].then(&gens[1]))]
}

/// `g ↦ g^k` on every generator; an automorphism of an abelian group when
/// `k` is a unit modulo the exponent.
pub fn power_images(g: &PermGroup, k: usize) -> GeneratorImages {
    g.generators()
        .iter()
        .enumerate()
        .map(|(i, p)| (i, power(p, k)))
        .collect()
}

/// For a [`frobenius`] group: translation `t ↦ t^k`, scaling fixed.
/// Conjugation by `x ↦ kx` in the full affine group.
pub fn frobenius_kernel_power_images(g: &PermGroup, k: usize) -> GeneratorImages {
    let gens = g.generators();
    vec![(0, power(&gens[0], k)), (1, gens[1].clone())]
}

/// On a group generated by `a, b` (in that order) with `a, b, ab` forming
/// an orbit: `a ↦ b`, `b ↦ ab`. Order 3 on the Klein four-group.
pub fn klein_cycling_images(v4: &PermGroup) -> GeneratorImages {
    let gens = v4.generators();
    vec![(0, gens[1].clone()), (1, gens[0].then(&gens[1]))]
}

/// Companion matrix of `x³ + x + 1` on `(C₂)³` with generators `e₁, e₂, e₃`:
/// `e₁ ↦ e₂`, `e₂ ↦ e₃`, `e₃ ↦ e₁e₂`. Order 7.
pub fn singer_images(e: &PermGroup) -> GeneratorImages {
    let gens = e.generators();
    assert_eq!(gens.len(), 3);
    vec![
        (0, gens[1].clone()),
        (1, gens[2].clone()),
        (2, gens[0].then(&gens[1])),
    ]
}

/// Lifts generator images of factor `which` of a [`direct_product`] to the
/// product, fixing every other factor's generators.
pub fn lift_to_product(
    factors: &[&PermGroup],
    which: usize,
    images: &GeneratorImages,
) -> GeneratorImages {
    let total: usize = factors.iter().map(|g| g.degree()).sum();
    let mut out = Vec::new();
    let mut offset = 0;
    let mut gen_base = 0;
    for (f, g) in factors.iter().enumerate() {
        for (k, p) in g.generators().iter().enumerate() {
            let image = if f == which {
                let (_, img) = images
                    .iter()
                    .find(|(idx, _)| *idx == k)
                    .expect("image for every factor generator");
                img.shifted(offset, total)
            } else {
                p.shifted(offset, total)
            };
            out.push((gen_base + k, image));
        }
        offset += g.degree();
        gen_base += g.generators().len();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(cyclic(1).order(), 1);
        assert_eq!(cyclic(12).order(), 12);
        assert_eq!(dihedral(5).order(), 10);
        assert_eq!(dicyclic(3).order(), 12);
        assert_eq!(quaternion(8).order(), 8);
        assert_eq!(quaternion(16).order(), 16);
        assert_eq!(symmetric(3).order(), 6);
        assert_eq!(symmetric(5).order(), 120);
        assert_eq!(alternating(4).order(), 12);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(frobenius(7, 3).order(), 21);
        assert_eq!(frobenius(13, 3).order(), 39);
        assert_eq!(frobenius(11, 5).order(), 55);
        assert_eq!(sl23().order(), 24);
        assert_eq!(gl23().order(), 48);
        assert_eq!(psl27().order(), 168);
        assert_eq!(elementary_abelian(2, 3).order(), 8);
        assert_eq!(direct_product(&[&cyclic(5), &sl23()]).order(), 120);
    }

    #[test]
    fn quaternion_has_single_involution_and_no_order_eight() {
        let q = quaternion(8);
        let invols = (0..8).filter(|&i| q.element_order(i) == 2).count();
        assert_eq!(invols, 1);
        assert!((0..8).all(|i| q.element_order(i) != 8));
    }

    #[test]
    fn sl23_center_has_order_two() {
        let g = sl23();
        let central: Vec<usize> = (0..g.order())
            .filter(|&z| (0..g.order()).all(|y| g.mul(z, y) == g.mul(y, z)))
            .collect();
        assert_eq!(central.len(), 2);
    }
}
