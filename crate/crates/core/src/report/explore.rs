//! Report-only scans over a corpus. Nothing here asserts.

use rayon::prelude::*;
use serde::Serialize;

use super::{GroupContext, ReportError};
use crate::corpus::Corpus;
use crate::predicates::{
    class_product_condition, multiplicative_characters, two_class_rows, Evaluation,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetabelianFinding {
    pub group: String,
    pub order: usize,
    pub fitting_order: usize,
    pub quotient_order: usize,
    /// `G/F(G)` has trivial second derived subgroup.
    pub quotient_metabelian: bool,
}

/// Groups whose prime-power coprime class products are classes, with whether
/// `G/F(G)` is metabelian.
pub fn metabelian_quotient_scan(corpus: &Corpus) -> Result<Vec<MetabelianFinding>, ReportError> {
    let found: Result<Vec<Option<MetabelianFinding>>, ReportError> = corpus
        .entries()
        .par_iter()
        .map(|(spec, g)| {
            let ctx = GroupContext::new(spec, g.clone())?;
            let hypothesis = class_product_condition(&ctx.classes, None, Evaluation::ClassPairs)
                .map_err(|source| ReportError::Predicate {
                    group: spec.name.clone(),
                    source,
                })?;
            if !hypothesis.holds {
                return Ok(None);
            }
            let fitting = g.fitting_subgroup();
            let quotient = g
                .quotient(&fitting)
                .expect("the Fitting subgroup is normal");
            Ok(Some(MetabelianFinding {
                group: spec.name.clone(),
                order: g.order(),
                fitting_order: fitting.order(),
                quotient_order: quotient.group.order(),
                quotient_metabelian: quotient.group.structure_predicates().is_metabelian,
            }))
        })
        .collect();
    Ok(found?.into_iter().flatten().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicativeFinding {
    pub group: String,
    pub order: usize,
    pub row: usize,
    pub degree: u64,
    /// Prime of a normal p-subgroup off which the row vanishes.
    pub vanishing_prime: Option<usize>,
    pub vanishing_order: Option<usize>,
    /// Nonzero on exactly two classes.
    pub two_class_support: bool,
}

/// Faithful nonlinear rows with `χ(xy) = χ(x)χ(y)` on all coprime pairs, in
/// nonnilpotent groups.
pub fn faithful_multiplicative_scan(
    corpus: &Corpus,
) -> Result<Vec<MultiplicativeFinding>, ReportError> {
    let found: Result<Vec<Vec<MultiplicativeFinding>>, ReportError> = corpus
        .entries()
        .par_iter()
        .filter(|(_, g)| !g.is_nilpotent())
        .map(|(spec, g)| {
            let ctx = GroupContext::new(spec, g.clone())?;
            let two_class = two_class_rows(&ctx.table);
            Ok(multiplicative_characters(&ctx.table)
                .into_iter()
                .filter(|m| m.is_faithful && m.degree > 1)
                .map(|m| MultiplicativeFinding {
                    group: spec.name.clone(),
                    order: g.order(),
                    row: m.row,
                    degree: m.degree,
                    vanishing_prime: m.vanishing_normal_p_subgroup.as_ref().and_then(|(p, _)| *p),
                    vanishing_order: m
                        .vanishing_normal_p_subgroup
                        .as_ref()
                        .map(|(_, n)| n.order()),
                    two_class_support: two_class.contains(&m.row),
                })
                .collect())
        })
        .collect();
    Ok(found?.into_iter().flatten().collect())
}
