//! Group specifications: the text format, built-in constructors and the
//! default verification corpus.

mod builtin;
mod parse;

use std::sync::Arc;

use crate::group::{Group, GroupError};
use crate::perm::Permutation;

pub use builtin::{builtin, direct_product, parse_builtin_expr, BuiltinError};
pub use parse::{parse_spec, SpecError};

/// Tag: a group known to satisfy the inverse-class product property.
pub const TAG_INVERSE_FREE: &str = "inverse-free";
/// Tag: the group has the cyclic-complement structure with a non-normal
/// centralizer `C`.
pub const TAG_C_NOT_NORMAL: &str = "c-not-normal";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub tags: Vec<String>,
}

impl GroupSpec {
    pub fn new(name: impl Into<String>, generators: Vec<Permutation>) -> Self {
        let degree = generators.first().map_or(1, Permutation::degree);
        Self {
            name: name.into(),
            degree,
            generators,
            tags: Vec::new(),
        }
    }

    pub fn with_tag(mut self, tag: &str) -> Self {
        self.tags.push(tag.to_string());
        self
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }

    /// One line of the group file format.
    pub fn render(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        let mut line = format!(
            "group {} degree {} gens {}",
            self.name,
            self.degree,
            gens.join("; ")
        );
        if !self.tags.is_empty() {
            line.push_str(" tags ");
            line.push_str(&self.tags.join(","));
        }
        line
    }

    pub fn realize(&self) -> Result<Group, GroupError> {
        Group::generate(&self.generators, &self.name)
    }

    pub fn realize_with_cap(&self, cap: usize) -> Result<Group, GroupError> {
        Group::generate_with_cap(&self.generators, &self.name, cap)
    }
}

/// Specs paired with their realized groups, in a fixed order.
#[derive(Debug, Clone)]
pub struct Corpus {
    entries: Vec<(GroupSpec, Arc<Group>)>,
}

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("duplicate group name `{0}`")]
    DuplicateName(String),
    #[error("group `{name}`: {source}")]
    Realize { name: String, source: GroupError },
}

impl Corpus {
    pub fn from_specs(specs: Vec<GroupSpec>) -> Result<Corpus, CorpusError> {
        let mut entries: Vec<(GroupSpec, Arc<Group>)> = Vec::with_capacity(specs.len());
        for spec in specs {
            if entries.iter().any(|(s, _)| s.name == spec.name) {
                return Err(CorpusError::DuplicateName(spec.name));
            }
            let group = spec.realize().map_err(|source| CorpusError::Realize {
                name: spec.name.clone(),
                source,
            })?;
            entries.push((spec, Arc::new(group)));
        }
        Ok(Corpus { entries })
    }

    pub fn entries(&self) -> &[(GroupSpec, Arc<Group>)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&(GroupSpec, Arc<Group>)> {
        self.entries.iter().find(|(s, _)| s.name == name)
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|(s, _)| s.name.as_str()).collect()
    }
}

const EXTRASPECIAL_27: &str = "group 3^1+2 degree 9 gens (0 1 2)(3 4 5)(6 7 8); (1 4 7)(2 8 5)";

/// Specs of the default corpus, without realizing them.
pub fn default_specs() -> Vec<GroupSpec> {
    let b = |name: &str, params: &[usize]| builtin(name, params).expect("built-in parameters");
    let dp = |a: GroupSpec, c: GroupSpec| direct_product(&a, &c);
    vec![
        b("cyclic", &[1]),
        b("cyclic", &[2]),
        b("cyclic", &[6]),
        b("cyclic", &[8]),
        dp(b("cyclic", &[2]), b("cyclic", &[2])),
        dp(b("cyclic", &[3]), b("cyclic", &[3])),
        b("quaternion", &[8]),
        b("dihedral", &[4]),
        parse_spec(EXTRASPECIAL_27).expect("fixed text").remove(0),
        b("quaternion", &[16]),
        b("symmetric", &[3]),
        b("dihedral", &[5]),
        b("symmetric", &[4]),
        b("symmetric", &[5]),
        b("alternating", &[4]),
        b("alternating", &[5]),
        b("sl23", &[]),
        b("sl23_semidirect", &[]),
        b("q8_semidirect", &[]),
        b("order54", &[]),
        b("frobenius_field", &[3]),
        b("frobenius_field", &[4]),
        b("frobenius_field", &[5]),
        b("frobenius_field", &[7]),
        b("frobenius_field", &[8]),
        b("frobenius_field", &[9]),
        b("frobenius", &[7, 3]),
        b("frobenius", &[5, 4]),
        dp(b("symmetric", &[3]), b("cyclic", &[2])),
        dp(b("symmetric", &[3]), b("cyclic", &[3])),
        dp(b("quaternion", &[8]), b("cyclic", &[3])),
        dp(b("alternating", &[4]), b("cyclic", &[2])),
        dp(b("frobenius", &[7, 3]), b("cyclic", &[2])),
        dp(b("symmetric", &[3]), b("symmetric", &[3])),
        dp(b("dihedral", &[4]), b("symmetric", &[3])),
        dp(b("alternating", &[5]), b("cyclic", &[2])),
        dp(b("alternating", &[5]), b("frobenius", &[7, 3])),
    ]
}

/// The built-in verification corpus.
pub fn default_corpus() -> Corpus {
    Corpus::from_specs(default_specs()).expect("default corpus realizes within the cap")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_contents() {
        let c = default_corpus();
        assert!(c.len() >= 25);
        assert_eq!(c.get("A5").unwrap().1.order(), 60);
        assert_eq!(c.get("order54").unwrap().1.order(), 54);
        assert_eq!(c.get("3^1+2").unwrap().1.order(), 27);
        let again = default_corpus();
        for ((_, a), (_, b)) in c.entries().iter().zip(again.entries()) {
            assert_eq!(a.order(), b.order());
            assert_eq!(a.elements(), b.elements());
        }
        assert!(c.entries().iter().all(|(_, g)| g.order() <= 2000));
    }

    #[test]
    fn extraspecial_has_exponent_three() {
        let g = parse_spec(EXTRASPECIAL_27).unwrap()[0].realize().unwrap();
        assert_eq!(g.order(), 27);
        assert_eq!(g.exponent(), 3);
        assert_eq!(g.center().order(), 3);
        assert!(!g.is_abelian());
    }

    #[test]
    fn render_round_trips_for_builtins() {
        for spec in default_specs() {
            let parsed = parse_spec(&spec.render()).unwrap();
            assert_eq!(parsed, vec![spec]);
        }
    }

    #[test]
    fn duplicate_names_rejected() {
        let s = builtin("cyclic", &[2]).unwrap();
        assert!(matches!(
            Corpus::from_specs(vec![s.clone(), s]),
            Err(CorpusError::DuplicateName(_))
        ));
    }
}
