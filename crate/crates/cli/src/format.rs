//! Line-oriented `.grp` and `.aut` files.
//!
//! ```text
//! # quaternion group, regular representation
//! name Q8
//! degree 8
//! gen (1 3 2 4)(5 8 6 7)
//! gen (1 5 2 6)(3 7 4 8)
//! ```
//!
//! ```text
//! aut
//! map 1 (1 5 2 6)(3 7 4 8)
//! map 2 (1 7 2 8)(3 6 4 5)
//! ```
//!
//! `#` starts a comment; blank lines are ignored. Points and generator
//! numbers are 1-based.

use std::fmt;
use std::sync::Arc;

use maxinv_core::{
    build_action, build_automorphism, Automorphism, CoprimeAction, PermError, PermGroup,
    Permutation,
};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn split_keyword(line: &str) -> (&str, &str) {
    match line.split_once(char::is_whitespace) {
        Some((k, rest)) => (k, rest.trim()),
        None => (line, ""),
    }
}

fn perm_error(line: usize, e: PermError) -> ParseError {
    err(line, e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut name = None;
        let mut degree: Option<usize> = None;
        let mut generators = Vec::new();
        let mut last_line = 0;
        for (line, content) in content_lines(text) {
            last_line = line;
            let (keyword, rest) = split_keyword(content);
            match keyword {
                "name" => {
                    if rest.is_empty() {
                        return Err(err(line, "empty name"));
                    }
                    if name.replace(rest.to_string()).is_some() {
                        return Err(err(line, "duplicate name"));
                    }
                }
                "degree" => {
                    let n: usize = rest
                        .parse()
                        .map_err(|_| err(line, format!("invalid degree {rest:?}")))?;
                    if n == 0 {
                        return Err(err(line, "degree must be positive"));
                    }
                    if degree.replace(n).is_some() {
                        return Err(err(line, "duplicate degree"));
                    }
                }
                "gen" => {
                    let n = degree.ok_or_else(|| err(line, "gen before degree"))?;
                    generators.push(Permutation::parse(rest, n).map_err(|e| perm_error(line, e))?);
                }
                other => return Err(err(line, format!("unknown keyword {other:?}"))),
            }
        }
        let degree = degree.ok_or_else(|| err(last_line, "missing degree"))?;
        if generators.is_empty() {
            return Err(err(last_line, "no gen lines"));
        }
        Ok(GroupSpec {
            name,
            degree,
            generators,
        })
    }

    pub fn from_group(name: Option<&str>, group: &PermGroup) -> Self {
        GroupSpec {
            name: name.map(str::to_string),
            degree: group.degree(),
            generators: group.generators().to_vec(),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "name {name}")?;
        }
        writeln!(f, "degree {}", self.degree)?;
        for g in &self.generators {
            writeln!(f, "gen {g}")?;
        }
        Ok(())
    }
}

/// One block per automorphism; each entry is a 1-based generator number and
/// its image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionSpec {
    pub automorphisms: Vec<Vec<(usize, Permutation)>>,
}

/// Failure to turn a parsed action file into a coprime action.
#[derive(Debug, Error)]
pub enum ActionSpecError {
    #[error("automorphism block {block}: {source}")]
    InvalidAutomorphism {
        block: usize,
        source: maxinv_core::Error,
    },
    #[error(transparent)]
    Action(maxinv_core::Error),
}

impl ActionSpec {
    pub fn parse(text: &str, degree: usize) -> Result<Self, ParseError> {
        let mut automorphisms: Vec<Vec<(usize, Permutation)>> = Vec::new();
        for (line, content) in content_lines(text) {
            let (keyword, rest) = split_keyword(content);
            match keyword {
                "aut" => {
                    if !rest.is_empty() {
                        return Err(err(line, "unexpected text after aut"));
                    }
                    automorphisms.push(Vec::new());
                }
                "map" => {
                    let block = automorphisms
                        .last_mut()
                        .ok_or_else(|| err(line, "map outside an aut block"))?;
                    let (k, cycles) = split_keyword(rest);
                    let k: usize = k
                        .parse()
                        .map_err(|_| err(line, format!("invalid generator number {k:?}")))?;
                    if k == 0 {
                        return Err(err(line, "generator numbers are 1-based"));
                    }
                    if cycles.is_empty() {
                        return Err(err(line, "missing image"));
                    }
                    let image =
                        Permutation::parse(cycles, degree).map_err(|e| perm_error(line, e))?;
                    block.push((k, image));
                }
                other => return Err(err(line, format!("unknown keyword {other:?}"))),
            }
        }
        Ok(ActionSpec { automorphisms })
    }

    pub fn from_action(action: &CoprimeAction) -> Self {
        ActionSpec {
            automorphisms: action
                .generators()
                .iter()
                .map(|a| {
                    a.generator_images()
                        .into_iter()
                        .enumerate()
                        .map(|(k, p)| (k + 1, p))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn build(&self, group: &Arc<PermGroup>) -> Result<CoprimeAction, ActionSpecError> {
        let auts = self
            .automorphisms
            .iter()
            .enumerate()
            .map(|(b, block)| {
                let images: Vec<(usize, Permutation)> =
                    block.iter().map(|(k, p)| (k - 1, p.clone())).collect();
                build_automorphism(group, &images).map_err(|source| {
                    ActionSpecError::InvalidAutomorphism {
                        block: b + 1,
                        source,
                    }
                })
            })
            .collect::<Result<Vec<Automorphism>, _>>()?;
        build_action(group, auts).map_err(ActionSpecError::Action)
    }
}

impl fmt::Display for ActionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.automorphisms {
            writeln!(f, "aut")?;
            for (k, p) in block {
                writeln!(f, "map {k} {p}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use maxinv_core::{catalog, generate_group};

    #[test]
    fn parses_group_with_comments() {
        let text = "# S3\nname S3\n\ndegree 3\ngen (1 2)   # transposition\ngen (1 2 3)\n";
        let spec = GroupSpec::parse(text).unwrap();
        assert_eq!(spec.name.as_deref(), Some("S3"));
        assert_eq!(spec.degree, 3);
        assert_eq!(generate_group(&spec.generators).unwrap().order(), 6);
    }

    #[test]
    fn group_errors_carry_line_numbers() {
        assert_eq!(GroupSpec::parse("gen (1 2)\n").unwrap_err().line, 1);
        assert_eq!(
            GroupSpec::parse("degree 3\ngen (1 4)\n").unwrap_err().line,
            2
        );
        assert_eq!(GroupSpec::parse("degree 3\nfoo\n").unwrap_err().line, 2);
        assert!(GroupSpec::parse("degree 3\n").is_err());
        assert!(GroupSpec::parse("degree x\ngen ()\n").is_err());
        assert!(GroupSpec::parse("degree 3\ndegree 3\ngen ()\n").is_err());
        assert!(GroupSpec::parse("degree 3\ngen (1 2)(1 3)\n").is_err());
    }

    #[test]
    fn parses_action_blocks() {
        let text = "aut\nmap 1 (1 2 3)\n# second\naut\nmap 1 ()\n";
        let spec = ActionSpec::parse(text, 3).unwrap();
        assert_eq!(spec.automorphisms.len(), 2);
        assert_eq!(spec.automorphisms[0][0].0, 1);
        assert!(ActionSpec::parse("map 1 ()\n", 3).is_err());
        assert!(ActionSpec::parse("aut\nmap 0 ()\n", 3).is_err());
        assert!(ActionSpec::parse("aut\nmap 1\n", 3).is_err());
    }

    #[test]
    fn action_round_trip_through_text() {
        let g = Arc::new(catalog::quaternion(8));
        let aut = build_automorphism(&g, &catalog::quaternion_cycling_images(&g)).unwrap();
        let act = build_action(&g, vec![aut]).unwrap();
        let spec = ActionSpec::from_action(&act);
        let reparsed = ActionSpec::parse(&spec.to_string(), g.degree()).unwrap();
        assert_eq!(reparsed, spec);
        assert_eq!(reparsed.build(&g).unwrap().order(), 3);
    }

    #[test]
    fn invalid_automorphism_is_reported_by_block() {
        let g = Arc::new(catalog::cyclic(4));
        let spec = ActionSpec::parse("aut\nmap 1 (1 2)\n", 4).unwrap();
        assert!(matches!(
            spec.build(&g),
            Err(ActionSpecError::InvalidAutomorphism { block: 1, .. })
        ));
    }
}
