use std::fmt;

use crate::error::PermError;

/// A bijection on the points `0..degree`.
///
/// The derived ordering compares image sequences lexicographically, which is
/// the canonical element order used by [`PermGroup`](super::PermGroup).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        for &x in &images {
            if x >= degree {
                return Err(PermError::PointOutOfRange {
                    point: x + 1,
                    degree,
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(PermError::NotBijective);
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Builds a permutation from 0-based cycles. Points not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &x in cycle.iter() {
                if x >= degree {
                    return Err(PermError::PointOutOfRange {
                        point: x + 1,
                        degree,
                    });
                }
                if std::mem::replace(&mut used[x], true) {
                    return Err(PermError::RepeatedPoint { point: x + 1 });
                }
            }
            for (k, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `"(1 2 3)(4 5)"`.
    ///
    /// Points inside a cycle may be separated by whitespace or commas.
    /// `"()"` is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let text = text.trim();
        if text.is_empty() {
            return Err(PermError::MalformedCycle("empty permutation text".into()));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let Some(body_and_tail) = rest.strip_prefix('(') else {
                return Err(PermError::MalformedCycle(format!(
                    "expected '(' at {:?}",
                    rest
                )));
            };
            let Some(close) = body_and_tail.find(')') else {
                return Err(PermError::MalformedCycle("unbalanced parentheses".into()));
            };
            let body = &body_and_tail[..close];
            if body.contains('(') {
                return Err(PermError::MalformedCycle("nested '('".into()));
            }
            let mut cycle = Vec::new();
            for token in body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
            {
                let point: usize = token.parse().map_err(|_| {
                    PermError::MalformedCycle(format!("non-numeric token {:?}", token))
                })?;
                if point < 1 || point > degree {
                    return Err(PermError::PointOutOfRange { point, degree });
                }
                cycle.push(point - 1);
            }
            cycles.push(cycle);
            rest = body_and_tail[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// Left-to-right product: apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// Places `self` on points `offset..offset+degree` of a larger domain.
    pub fn shifted(&self, offset: usize, total_degree: usize) -> Permutation {
        assert!(offset + self.degree() <= total_degree);
        let mut images: Vec<u32> = (0..total_degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_identity() {
        let p = Permutation::parse("()", 3).unwrap();
        assert_eq!(p, Permutation::identity(3));
        assert!(p.is_identity());
    }

    #[test]
    fn parse_three_cycle() {
        let p = Permutation::parse("(1 2 3)", 3).unwrap();
        assert_eq!(p.images(), &[1, 2, 0]);
    }

    #[test]
    fn parse_accepts_commas_and_spacing() {
        let p = Permutation::parse("  (1,2)( 3 4 ) ", 4).unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 2]);
    }

    #[test]
    fn parse_rejects_repeated_point() {
        assert_eq!(
            Permutation::parse("(1 2)(1 3)", 3),
            Err(PermError::RepeatedPoint { point: 1 })
        );
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert_eq!(
            Permutation::parse("(1 4)", 3),
            Err(PermError::PointOutOfRange {
                point: 4,
                degree: 3
            })
        );
        assert_eq!(
            Permutation::parse("(0 1)", 3),
            Err(PermError::PointOutOfRange {
                point: 0,
                degree: 3
            })
        );
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in ["(1 2", "1 2)", "(1 a)", "((1 2))", "", "(1 2)x"] {
            assert!(
                matches!(
                    Permutation::parse(bad, 3),
                    Err(PermError::MalformedCycle(_))
                ),
                "{bad:?} should be malformed"
            );
        }
    }

    #[test]
    fn display_is_one_based_cycles() {
        let p = Permutation::parse("(3 1)(2 4)", 5).unwrap();
        assert_eq!(p.to_string(), "(1 3)(2 4)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    #[test]
    fn then_applies_left_first() {
        let a = Permutation::parse("(1 2)", 3).unwrap();
        let b = Permutation::parse("(2 3)", 3).unwrap();
        // 1 -> 2 -> 3
        assert_eq!(a.then(&b).apply(0), 2);
        assert_eq!(a.then(&b).order(), 3);
    }

    fn arb_perm(max_degree: usize) -> impl Strategy<Value = Permutation> {
        (1..=max_degree)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_composes_to_identity(p in arb_perm(12)) {
            prop_assert!(p.then(&p.inverse()).is_identity());
            prop_assert!(p.inverse().then(&p).is_identity());
        }

        #[test]
        fn display_parse_round_trip(p in arb_perm(12)) {
            let text = p.to_string();
            prop_assert_eq!(Permutation::parse(&text, p.degree()).unwrap(), p);
        }
    }
}
