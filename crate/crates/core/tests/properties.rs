use std::sync::{Arc, OnceLock};

use maxinv_core::action::{
    invariant_subgroups, is_invariant, lattice_orbits, maximal_invariant_subgroups,
};
use maxinv_core::lattice::{join, maximal_members, meet};
use maxinv_core::{
    all_subgroups, build_action, build_automorphism, catalog, generate_group, CoprimeAction,
    LatticeIndex, Permutation, Subgroup,
};
use proptest::prelude::*;
use proptest::sample::Index;

struct Case {
    name: &'static str,
    lattice: LatticeIndex,
    action: CoprimeAction,
}

fn acted(
    g: maxinv_core::PermGroup,
    images: impl FnOnce(&maxinv_core::PermGroup) -> catalog::GeneratorImages,
) -> (Arc<maxinv_core::PermGroup>, CoprimeAction) {
    let imgs = images(&g);
    let g = Arc::new(g);
    let aut = build_automorphism(&g, &imgs).unwrap();
    let act = build_action(&g, vec![aut]).unwrap();
    (g, act)
}

fn cases() -> &'static [Case] {
    static CELL: OnceLock<Vec<Case>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        let mut push = |name, (g, action): (Arc<maxinv_core::PermGroup>, CoprimeAction)| {
            out.push(Case {
                name,
                lattice: all_subgroups(&g).unwrap(),
                action,
            })
        };
        let trivial = |g: maxinv_core::PermGroup| {
            let g = Arc::new(g);
            let act = CoprimeAction::trivial(&g);
            (g, act)
        };
        push("S4", trivial(catalog::symmetric(4)));
        push("D12", trivial(catalog::dihedral(6)));
        push("SL(2,3)", trivial(catalog::sl23()));
        push("C2xC2xC2", trivial(catalog::elementary_abelian(2, 3)));
        push(
            "Q8 order 3",
            acted(catalog::quaternion(8), catalog::quaternion_cycling_images),
        );
        push(
            "F21 order 2",
            acted(catalog::frobenius(7, 3), |g| {
                catalog::frobenius_kernel_power_images(g, 6)
            }),
        );
        push(
            "C2^3 order 7",
            acted(catalog::elementary_abelian(2, 3), catalog::singer_images),
        );
        push(
            "C3xC3 inversion",
            acted(catalog::elementary_abelian(3, 2), |g| {
                catalog::power_images(g, 2)
            }),
        );
        out
    })
}

fn case_and_pair() -> impl Strategy<Value = (usize, Index, Index)> {
    (0..cases().len(), any::<Index>(), any::<Index>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn greedy_generators_regenerate_the_subgroup((c, i, _) in case_and_pair()) {
        let lat = &cases()[c].lattice;
        let h = lat.get(i.index(lat.len()));
        let again = Subgroup::generated_by(h.parent(), &h.generators());
        prop_assert_eq!(&again, h);
    }

    #[test]
    fn lagrange((c, i, _) in case_and_pair()) {
        let lat = &cases()[c].lattice;
        let h = lat.get(i.index(lat.len()));
        prop_assert_eq!(h.parent().order() % h.order(), 0);
    }

    #[test]
    fn absorption((c, i, j) in case_and_pair()) {
        let lat = &cases()[c].lattice;
        let h = lat.get(i.index(lat.len()));
        let k = lat.get(j.index(lat.len()));
        prop_assert_eq!(&join(h, &meet(h, k).unwrap()).unwrap(), h);
        prop_assert_eq!(&meet(h, &join(h, k).unwrap()).unwrap(), h);
        // the join is the smallest lattice member above both
        let jn = join(h, k).unwrap();
        let above: Vec<&Subgroup> = lat
            .subgroups()
            .iter()
            .filter(|x| h.is_subgroup_of(x) && k.is_subgroup_of(x))
            .collect();
        prop_assert!(above.iter().all(|x| jn.is_subgroup_of(x)));
        prop_assert!(above.contains(&&jn));
    }

    #[test]
    fn invariant_subgroups_closed_under_meet_and_join((c, i, j) in case_and_pair()) {
        let case = &cases()[c];
        let inv = invariant_subgroups(&case.action, &case.lattice).unwrap();
        let h = &inv[i.index(inv.len())];
        let k = &inv[j.index(inv.len())];
        prop_assert!(is_invariant(&meet(h, k).unwrap(), &case.action).unwrap(), "{}", case.name);
        prop_assert!(is_invariant(&join(h, k).unwrap(), &case.action).unwrap(), "{}", case.name);
    }
}

#[test]
fn maximal_members_form_an_antichain_covering_the_proper_members() {
    for case in cases() {
        let inv = invariant_subgroups(&case.action, &case.lattice).unwrap();
        let max = maximal_invariant_subgroups(&case.action, &case.lattice).unwrap();
        assert_eq!(max, maximal_members(&inv).unwrap());
        for (a, h) in max.iter().enumerate() {
            assert!(h.is_proper());
            for (b, k) in max.iter().enumerate() {
                assert!(a == b || !h.is_subgroup_of(k), "{}", case.name);
            }
        }
        for h in inv.iter().filter(|h| h.is_proper()) {
            assert!(max.iter().any(|m| h.is_subgroup_of(m)), "{}", case.name);
        }
    }
}

#[test]
fn orbits_partition_the_lattice() {
    for case in cases() {
        let orbits = lattice_orbits(&case.action, &case.lattice).unwrap();
        let mut seen: Vec<usize> = orbits.iter().flatten().copied().collect();
        seen.sort_unstable();
        assert_eq!(
            seen,
            (0..case.lattice.len()).collect::<Vec<_>>(),
            "{}",
            case.name
        );
        for orbit in &orbits {
            let order = case.lattice.get(orbit[0]).order();
            assert!(orbit.iter().all(|&i| case.lattice.get(i).order() == order));
            // orbit sizes divide the order of the acting group
            assert_eq!(case.action.order() % orbit.len(), 0, "{}", case.name);
            let fixed = orbit.len() == 1;
            assert_eq!(
                fixed,
                is_invariant(case.lattice.get(orbit[0]), &case.action).unwrap()
            );
        }
    }
}

fn small_perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| {
            Permutation::from_images(v.into_iter().map(|x| x as usize).collect()).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_generators_close_to_a_group(gens in prop::collection::vec(small_perm(5), 1..3)) {
        let g = generate_group(&gens).unwrap();
        prop_assert_eq!(120 % g.order(), 0);
        for x in 0..g.order() {
            for y in 0..g.order() {
                let expected = g.element(x).then(g.element(y));
                prop_assert_eq!(g.element(g.mul(x, y)), &expected);
            }
        }
        let lat = all_subgroups(&Arc::new(g)).unwrap();
        for h in lat.subgroups() {
            prop_assert_eq!(lat.parent().order() % h.order(), 0);
        }
    }
}
