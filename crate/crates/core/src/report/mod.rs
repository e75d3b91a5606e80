//! Per-group verification reports, tabular output and exploration scans.

mod checks;
mod explore;
mod tables;

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::chartab::{CharTableError, CharacterTable};
use crate::classes::ClassData;
use crate::corpus::{Corpus, GroupSpec};
use crate::group::{Group, StructurePredicates};
use crate::predicates::{PredicateError, Witness};

pub use checks::run_check;
pub use explore::{
    faithful_multiplicative_scan, metabelian_quotient_scan, MetabelianFinding,
    MultiplicativeFinding,
};
pub use tables::{
    class_report, render_classes_text, render_table_text, table_report, ClassSummary,
    ClassesReport, RowReport, TableReport,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("group `{group}`: character table: {source}")]
    CharTable {
        group: String,
        #[source]
        source: CharTableError,
    },
    #[error("group `{group}`: {source}")]
    Predicate {
        group: String,
        #[source]
        source: PredicateError,
    },
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// One family of verifications, addressed on the command line by its label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// `o(xy) = o(x)o(y)` on coprime pairs versus nilpotency.
    OrderProduct,
    /// `|(xy)^G| = |x^G||y^G|` on prime-power pairs versus nilpotency.
    ClassSizeProduct,
    /// The per-prime class-size condition versus a Sylow direct factor.
    SylowDirectFactor,
    /// Class products of prime-power classes are classes, implying solvability.
    ClassProduct,
    /// The per-prime class-product condition, implying p-solvability.
    PClassProduct,
    /// Class products against the character formulation, on every class pair.
    ClassCharacterEquivalence,
    /// No p, q, r-element triple with product 1 versus p-solvability.
    TripleProduct,
    /// `χ(xy) = χ(x)χ(y)` versus the structural classification.
    CharacterProduct,
    /// Consequences of multiplicativity on a pair of classes.
    MultiplicativeClassPair,
    /// Class products over `{2, p, q}`, implying no chief factor divisible by `pq`.
    PiClassProduct,
    /// Class products whenever `x^G ≠ (y⁻¹)^G`.
    InverseFreeClassProduct,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::OrderProduct,
        Check::ClassSizeProduct,
        Check::SylowDirectFactor,
        Check::ClassProduct,
        Check::PClassProduct,
        Check::ClassCharacterEquivalence,
        Check::TripleProduct,
        Check::CharacterProduct,
        Check::MultiplicativeClassPair,
        Check::PiClassProduct,
        Check::InverseFreeClassProduct,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Check::OrderProduct => "BW",
            Check::ClassSizeProduct => "A",
            Check::SylowDirectFactor => "2.2",
            Check::ClassProduct => "B",
            Check::PClassProduct => "2.5",
            Check::ClassCharacterEquivalence => "2.3",
            Check::TripleProduct => "2.4",
            Check::CharacterProduct => "C",
            Check::MultiplicativeClassPair => "3.1",
            Check::PiClassProduct => "4.2",
            Check::InverseFreeClassProduct => "DY",
        }
    }

    pub fn from_label(label: &str) -> Option<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.label().eq_ignore_ascii_case(label))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `predicate ⟺ reference`.
    Iff,
    /// `predicate ⇒ reference`.
    Implies,
    /// `predicate` must be true; `reference` repeats it.
    Holds,
}

impl Relation {
    fn satisfied(self, predicate: bool, reference: bool) -> bool {
        match self {
            Relation::Iff => predicate == reference,
            Relation::Implies => !predicate || reference,
            Relation::Holds => predicate,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    #[serde(flatten)]
    pub witness: Witness,
    /// The witness elements (or class representatives) in cycle notation.
    pub cycles: Vec<String>,
}

impl WitnessReport {
    pub fn new(cd: &ClassData, witness: Witness) -> WitnessReport {
        let g = cd.group();
        let elements = match witness {
            Witness::ClassPair { left, right } => vec![cd.rep(left), cd.rep(right)],
            _ => witness.elements(),
        };
        WitnessReport {
            cycles: elements.iter().map(|&e| g.element(e).to_string()).collect(),
            witness,
        }
    }

    /// Compact single-line form used in the CSV summary.
    pub fn compact(&self) -> String {
        let kind = match self.witness {
            Witness::Pair { .. } => "pair",
            Witness::SplitProduct { .. } => "split_product",
            Witness::Triple { .. } => "triple",
            Witness::Character { row, .. } => {
                return format!("character row {row}: {}", self.cycles.join(" ; "))
            }
            Witness::ClassPair { .. } => "class_pair",
            Witness::Row { row } => return format!("row {row}"),
        };
        format!("{kind}: {}", self.cycles.join(" ; "))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub property: &'static str,
    /// Primes the outcome is specific to.
    pub parameters: Vec<usize>,
    pub relation: Relation,
    pub predicate: bool,
    pub reference: bool,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

impl CheckOutcome {
    pub(crate) fn new(
        check: Check,
        property: &'static str,
        parameters: Vec<usize>,
        relation: Relation,
        predicate: bool,
        reference: bool,
    ) -> CheckOutcome {
        CheckOutcome {
            check: check.label(),
            property,
            parameters,
            relation,
            predicate,
            reference,
            holds: relation.satisfied(predicate, reference),
            witness: None,
        }
    }

    pub(crate) fn with_witness(mut self, cd: &ClassData, witness: Option<Witness>) -> CheckOutcome {
        self.witness = witness.map(|w| WitnessReport::new(cd, w));
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub schema_version: u32,
    pub group: String,
    pub order: usize,
    pub degree: usize,
    pub class_count: usize,
    pub tags: Vec<String>,
    pub structure: StructurePredicates,
    pub character_degrees: Vec<u64>,
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
    /// Milliseconds per stage; only present when requested, since it breaks
    /// byte-for-byte reproducibility.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<&'static str, f64>>,
}

impl PropertyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Checks to run; empty means all.
    pub checks: Vec<Check>,
    /// Restrict per-prime checks to this prime.
    pub prime: Option<usize>,
    pub timings: bool,
}

impl VerifyOptions {
    fn selected(&self) -> Vec<Check> {
        if self.checks.is_empty() {
            Check::ALL.to_vec()
        } else {
            let mut checks = self.checks.clone();
            checks.sort();
            checks.dedup();
            checks
        }
    }
}

/// Everything the checks read, computed once per group.
pub struct GroupContext {
    pub spec: GroupSpec,
    pub classes: Arc<ClassData>,
    pub table: CharacterTable,
    pub structure: StructurePredicates,
}

impl GroupContext {
    pub fn new(spec: &GroupSpec, group: Arc<Group>) -> Result<GroupContext, ReportError> {
        let classes = Arc::new(ClassData::new(group.clone()));
        let table =
            CharacterTable::compute(classes.clone()).map_err(|source| ReportError::CharTable {
                group: spec.name.clone(),
                source,
            })?;
        Ok(GroupContext {
            spec: spec.clone(),
            structure: group.structure_predicates(),
            classes,
            table,
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        self.classes.group()
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Builds the report for one group.
pub fn analyze(
    spec: &GroupSpec,
    group: Arc<Group>,
    options: &VerifyOptions,
) -> Result<PropertyReport, ReportError> {
    let start = Instant::now();
    let ctx = GroupContext::new(spec, group)?;
    let setup = elapsed_ms(start);
    let start = Instant::now();
    let mut checks = Vec::new();
    for check in options.selected() {
        checks.extend(run_check(&ctx, check, options.prime).map_err(|source| {
            ReportError::Predicate {
                group: spec.name.clone(),
                source,
            }
        })?);
    }
    let timings_ms = options
        .timings
        .then(|| BTreeMap::from([("setup", setup), ("checks", elapsed_ms(start))]));
    let g = ctx.group();
    Ok(PropertyReport {
        schema_version: SCHEMA_VERSION,
        group: spec.name.clone(),
        order: g.order(),
        degree: g.degree(),
        class_count: ctx.classes.len(),
        tags: spec.tags.clone(),
        structure: ctx.structure,
        character_degrees: ctx.table.degrees(),
        passed: checks.iter().all(|c| c.holds),
        checks,
        timings_ms,
    })
}

/// Analyzes every corpus entry in parallel; results keep corpus order.
pub fn verify_corpus(
    corpus: &Corpus,
    options: &VerifyOptions,
) -> Vec<Result<PropertyReport, ReportError>> {
    corpus
        .entries()
        .par_iter()
        .map(|(spec, group)| analyze(spec, group.clone(), options))
        .collect()
}

/// Writes one JSON object per line.
pub fn write_json_lines<W: Write>(
    reports: &[PropertyReport],
    mut out: W,
) -> Result<(), ReportError> {
    for report in reports {
        serde_json::to_writer(&mut out, report).map_err(std::io::Error::from)?;
        writeln!(out)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CsvRow<'a> {
    group: &'a str,
    order: usize,
    check: &'a str,
    property: &'a str,
    parameters: String,
    relation: Relation,
    predicate: bool,
    reference: bool,
    holds: bool,
    witness: String,
}

/// Writes one CSV row per group and check outcome.
pub fn write_csv<W: Write>(reports: &[PropertyReport], out: W) -> Result<(), ReportError> {
    let mut writer = csv::Writer::from_writer(out);
    for report in reports {
        for c in &report.checks {
            writer.serialize(CsvRow {
                group: &report.group,
                order: report.order,
                check: c.check,
                property: c.property,
                parameters: c
                    .parameters
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(";"),
                relation: c.relation,
                predicate: c.predicate,
                reference: c.reference,
                holds: c.holds,
                witness: c
                    .witness
                    .as_ref()
                    .map(WitnessReport::compact)
                    .unwrap_or_default(),
            })?;
        }
    }
    writer.flush()?;
    Ok(())
}

/// Aligned plain-text summary: one line per group.
pub fn render_summary(reports: &[PropertyReport]) -> String {
    let width = reports
        .iter()
        .map(|r| r.group.len())
        .max()
        .unwrap_or(5)
        .max(5);
    let mut out = format!(
        "{:<width$}  {:>6}  {:>7}  {:>6}  {}\n",
        "group", "order", "classes", "checks", "status"
    );
    for r in reports {
        let failed: Vec<String> = r
            .failures()
            .map(|c| {
                if c.parameters.is_empty() {
                    format!("{}/{}", c.check, c.property)
                } else {
                    let params: Vec<String> =
                        c.parameters.iter().map(ToString::to_string).collect();
                    format!("{}/{}[{}]", c.check, c.property, params.join(","))
                }
            })
            .collect();
        let status = if failed.is_empty() {
            "ok".to_string()
        } else {
            format!("FAILED {}", failed.join(" "))
        };
        out.push_str(&format!(
            "{:<width$}  {:>6}  {:>7}  {:>6}  {}\n",
            r.group,
            r.order,
            r.class_count,
            r.checks.len(),
            status
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{builtin, default_corpus};

    fn report(name: &str, params: &[usize], options: &VerifyOptions) -> PropertyReport {
        let spec = builtin(name, params).unwrap();
        let g = Arc::new(spec.realize().unwrap());
        analyze(&spec, g, options).unwrap()
    }

    #[test]
    fn labels_round_trip() {
        for c in Check::ALL {
            assert_eq!(Check::from_label(c.label()), Some(c));
        }
        assert_eq!(Check::from_label("bw"), Some(Check::OrderProduct));
        assert_eq!(Check::from_label("2.1"), None);
    }

    #[test]
    fn s3_report_passes_every_check() {
        let r = report("symmetric", &[3], &VerifyOptions::default());
        assert!(r.passed, "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.character_degrees, vec![1, 1, 2]);
        let bw: Vec<&CheckOutcome> = r.checks.iter().filter(|c| c.check == "BW").collect();
        assert!(bw.iter().all(|c| !c.predicate && !c.reference));
        let w = bw[0].witness.as_ref().unwrap();
        assert_eq!(w.cycles.len(), 2);
    }

    #[test]
    fn filtering_by_check_and_prime() {
        let options = VerifyOptions {
            checks: vec![Check::SylowDirectFactor],
            prime: Some(3),
            timings: false,
        };
        let r = report("symmetric", &[4], &options);
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.checks[0].parameters, vec![3]);
        assert!(r.checks.iter().all(|c| c.check == "2.2"));
    }

    #[test]
    fn output_is_deterministic() {
        let corpus = default_corpus();
        let small = Corpus::from_specs(
            corpus
                .entries()
                .iter()
                .filter(|(_, g)| g.order() <= 24)
                .map(|(s, _)| s.clone())
                .collect(),
        )
        .unwrap();
        let render = || {
            let reports: Vec<PropertyReport> = verify_corpus(&small, &VerifyOptions::default())
                .into_iter()
                .map(Result::unwrap)
                .collect();
            let mut json = Vec::new();
            write_json_lines(&reports, &mut json).unwrap();
            let mut csv = Vec::new();
            write_csv(&reports, &mut csv).unwrap();
            (
                json,
                csv,
                reports.iter().map(|r| r.group.clone()).collect::<Vec<_>>(),
            )
        };
        let first = render();
        assert_eq!(first, render());
        assert_eq!(first.2, small.names());
        let text = String::from_utf8(first.0).unwrap();
        assert_eq!(text.lines().count(), small.len());
        for line in text.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["schema_version"], SCHEMA_VERSION);
            assert!(v.get("timings_ms").is_none());
        }
        let csv = String::from_utf8(first.1).unwrap();
        assert!(csv.starts_with(
            "group,order,check,property,parameters,relation,predicate,reference,holds,witness"
        ));
    }
}
