//! The built-in census corpus: groups from the catalog paired with the
//! trivial action or a bundled coprime action.

use std::sync::Arc;

use maxinv_core::catalog::{self, GeneratorImages};
use maxinv_core::{build_action, build_automorphism, CoprimeAction, PermGroup, Result};

pub struct CorpusEntry {
    pub name: String,
    pub action_name: String,
    pub group: Arc<PermGroup>,
    /// Generator images of each automorphism generator; empty for the
    /// trivial action.
    pub automorphisms: Vec<GeneratorImages>,
}

impl CorpusEntry {
    fn trivial(name: &str, group: PermGroup) -> Self {
        CorpusEntry {
            name: name.to_string(),
            action_name: "trivial".to_string(),
            group: Arc::new(group),
            automorphisms: Vec::new(),
        }
    }

    fn acted(
        name: &str,
        action_name: &str,
        group: PermGroup,
        images: impl FnOnce(&PermGroup) -> GeneratorImages,
    ) -> Self {
        let imgs = images(&group);
        CorpusEntry {
            name: name.to_string(),
            action_name: action_name.to_string(),
            group: Arc::new(group),
            automorphisms: vec![imgs],
        }
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn key(&self) -> String {
        format!("{} / {}", self.name, self.action_name)
    }

    pub fn action(&self) -> Result<CoprimeAction> {
        let auts = self
            .automorphisms
            .iter()
            .map(|images| build_automorphism(&self.group, images))
            .collect::<Result<Vec<_>>>()?;
        build_action(&self.group, auts)
    }
}

/// Every corpus entry, in a fixed order.
pub fn corpus() -> Vec<CorpusEntry> {
    use CorpusEntry as E;
    let q8 = catalog::quaternion(8);
    let c5 = catalog::cyclic(5);
    let s3 = catalog::symmetric(3);
    let sl23 = catalog::sl23();
    vec![
        // nilpotent
        E::trivial("C2", catalog::cyclic(2)),
        E::trivial("C4", catalog::cyclic(4)),
        E::trivial("C6", catalog::cyclic(6)),
        E::trivial("C12", catalog::cyclic(12)),
        E::trivial("V4", catalog::elementary_abelian(2, 2)),
        E::acted(
            "V4",
            "order-3 cycling",
            catalog::elementary_abelian(2, 2),
            catalog::klein_cycling_images,
        ),
        E::acted(
            "C2^3",
            "order-7 Singer cycle",
            catalog::elementary_abelian(2, 3),
            catalog::singer_images,
        ),
        E::acted("C5", "order-4 power x->x^2", catalog::cyclic(5), |g| {
            catalog::power_images(g, 2)
        }),
        E::acted("C7", "order-3 power x->x^2", catalog::cyclic(7), |g| {
            catalog::power_images(g, 2)
        }),
        E::acted(
            "C3xC3",
            "order-2 inversion",
            catalog::elementary_abelian(3, 2),
            |g| catalog::power_images(g, 2),
        ),
        E::trivial("D8", catalog::dihedral(4)),
        E::trivial("Q8", q8.clone()),
        E::acted(
            "Q8",
            "order-3 cycling",
            q8.clone(),
            catalog::quaternion_cycling_images,
        ),
        E::trivial("Q16", catalog::quaternion(16)),
        E::trivial(
            "D8xC3",
            catalog::direct_product(&[&catalog::dihedral(4), &catalog::cyclic(3)]),
        ),
        E::acted(
            "Q8xC5",
            "order-3 cycling on Q8",
            catalog::direct_product(&[&q8, &c5]),
            |_| catalog::lift_to_product(&[&q8, &c5], 0, &catalog::quaternion_cycling_images(&q8)),
        ),
        // solvable, not nilpotent
        E::trivial("S3", s3.clone()),
        E::trivial("D10", catalog::dihedral(5)),
        E::trivial("D12", catalog::dihedral(6)),
        E::trivial("D14", catalog::dihedral(7)),
        E::acted(
            "D14",
            "order-3 kernel power",
            catalog::frobenius(7, 2),
            |g| catalog::frobenius_kernel_power_images(g, 2),
        ),
        E::trivial("Dic12", catalog::dicyclic(3)),
        E::trivial("A4", catalog::alternating(4)),
        E::trivial("S4", catalog::symmetric(4)),
        E::trivial("F20", catalog::frobenius(5, 4)),
        E::trivial("F21", catalog::frobenius(7, 3)),
        E::acted(
            "F21",
            "order-2 kernel inversion",
            catalog::frobenius(7, 3),
            |g| catalog::frobenius_kernel_power_images(g, 6),
        ),
        E::acted(
            "F39",
            "order-4 kernel power",
            catalog::frobenius(13, 3),
            |g| catalog::frobenius_kernel_power_images(g, 5),
        ),
        E::acted(
            "F55",
            "order-2 kernel inversion",
            catalog::frobenius(11, 5),
            |g| catalog::frobenius_kernel_power_images(g, 10),
        ),
        E::trivial("SL(2,3)", sl23.clone()),
        E::trivial("GL(2,3)", catalog::gl23()),
        E::trivial("C5xS3", catalog::direct_product(&[&c5, &s3])),
        E::trivial("S3xS3", catalog::direct_product(&[&s3, &s3])),
        E::trivial(
            "C5xA4",
            catalog::direct_product(&[&c5, &catalog::alternating(4)]),
        ),
        E::trivial(
            "C2xS4",
            catalog::direct_product(&[&catalog::cyclic(2), &catalog::symmetric(4)]),
        ),
        E::trivial("C5xSL(2,3)", catalog::direct_product(&[&c5, &sl23])),
        // not solvable
        E::trivial("A5", catalog::alternating(5)),
        E::trivial("S5", catalog::symmetric(5)),
        E::trivial("PSL(2,7)", catalog::psl27()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds_a_coprime_action() {
        for e in corpus() {
            let act = e
                .action()
                .unwrap_or_else(|err| panic!("{}: {err}", e.key()));
            assert_eq!(act.order() == 1, e.automorphisms.is_empty(), "{}", e.key());
            assert!(e.order() <= 192);
        }
    }

    #[test]
    fn keys_are_unique() {
        let mut keys: Vec<String> = corpus().iter().map(CorpusEntry::key).collect();
        let n = keys.len();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), n);
    }

    #[test]
    fn bundled_action_orders() {
        let orders: Vec<(String, usize)> = corpus()
            .iter()
            .filter(|e| !e.automorphisms.is_empty())
            .map(|e| (e.key(), e.action().unwrap().order()))
            .collect();
        let get = |k: &str| orders.iter().find(|(key, _)| key.starts_with(k)).unwrap().1;
        assert_eq!(get("Q8 /"), 3);
        assert_eq!(get("F21 /"), 2);
        assert_eq!(get("F39 /"), 4);
        assert_eq!(get("C2^3 /"), 7);
        assert_eq!(get("D14 /"), 3);
    }
}
