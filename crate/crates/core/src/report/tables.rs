use serde::Serialize;

use super::SCHEMA_VERSION;
use crate::chartab::{render_complex, CharacterTable};
use crate::classes::ClassData;

const PRECISION: u32 = 6;

#[derive(Debug, Clone, Serialize)]
pub struct ClassSummary {
    pub index: usize,
    pub size: usize,
    pub element_order: usize,
    pub representative: String,
    pub inverse_class: usize,
    pub centralizer_order: usize,
}

fn class_summaries(cd: &ClassData) -> Vec<ClassSummary> {
    let g = cd.group();
    (0..cd.len())
        .map(|i| ClassSummary {
            index: i,
            size: cd.size(i),
            element_order: cd.element_order(i),
            representative: g.element(cd.rep(i)).to_string(),
            inverse_class: cd.inverse_class(i),
            centralizer_order: cd.centralizer_order(i),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassesReport {
    pub schema_version: u32,
    pub group: String,
    pub order: usize,
    pub classes: Vec<ClassSummary>,
}

pub fn class_report(cd: &ClassData) -> ClassesReport {
    ClassesReport {
        schema_version: SCHEMA_VERSION,
        group: cd.group().name().to_string(),
        order: cd.group().order(),
        classes: class_summaries(cd),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RowReport {
    pub degree: u64,
    /// Exact values as polynomials in `z = exp(2πi/e)`.
    pub values: Vec<String>,
    /// `[re, im]` rounded to six decimals.
    pub complex: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub schema_version: u32,
    pub group: String,
    pub order: usize,
    pub exponent: usize,
    pub prime: u64,
    pub classes: Vec<ClassSummary>,
    pub rows: Vec<RowReport>,
}

pub fn table_report(table: &CharacterTable) -> TableReport {
    TableReport {
        schema_version: SCHEMA_VERSION,
        group: table.group().name().to_string(),
        order: table.group().order(),
        exponent: table.exponent(),
        prime: table.prime(),
        classes: class_summaries(table.classes()),
        rows: table
            .rows()
            .iter()
            .map(|row| RowReport {
                degree: row.degree,
                values: row.values.iter().map(ToString::to_string).collect(),
                complex: row
                    .values
                    .iter()
                    .map(|v| {
                        let c = render_complex(v, PRECISION);
                        [c.re, c.im]
                    })
                    .collect(),
            })
            .collect(),
    }
}

fn format_complex([re, im]: [f64; 2]) -> String {
    let num = |x: f64| {
        let s = format!("{x:.3}");
        let s = s.trim_end_matches('0').trim_end_matches('.');
        if s == "-0" {
            "0".to_string()
        } else {
            s.to_string()
        }
    };
    match (re == 0.0, im == 0.0) {
        (_, true) => num(re),
        (true, false) => format!("{}i", num(im)),
        (false, false) => {
            let sign = if im < 0.0 { '-' } else { '+' };
            format!("{}{sign}{}i", num(re), num(im.abs()))
        }
    }
}

fn aligned(header: Vec<String>, body: Vec<Vec<String>>) -> String {
    let cols = header.len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            std::iter::once(&header)
                .chain(&body)
                .map(|row| row[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |row: &[String]| {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:>w$}"))
            .collect();
        cells.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&header);
    for row in &body {
        out.push_str(&line(row));
    }
    out
}

/// Character table as aligned text: a class header, then one line per row with
/// complex renderings, then the exact values.
pub fn render_table_text(report: &TableReport) -> String {
    let mut out = format!(
        "{}  order {}  exponent {}  (z = exp(2πi/{}))\n\n",
        report.group, report.order, report.exponent, report.exponent
    );
    let mut header = vec!["class".to_string()];
    header.extend(report.classes.iter().map(|c| c.index.to_string()));
    let mut body = vec![
        std::iter::once("size".to_string())
            .chain(report.classes.iter().map(|c| c.size.to_string()))
            .collect::<Vec<_>>(),
        std::iter::once("order".to_string())
            .chain(report.classes.iter().map(|c| c.element_order.to_string()))
            .collect(),
    ];
    for (k, row) in report.rows.iter().enumerate() {
        body.push(
            std::iter::once(format!("χ{k}"))
                .chain(row.complex.iter().map(|&c| format_complex(c)))
                .collect(),
        );
    }
    out.push_str(&aligned(header, body));
    let irrational: Vec<String> = report
        .rows
        .iter()
        .enumerate()
        .flat_map(|(k, row)| {
            row.values
                .iter()
                .enumerate()
                .filter(|(_, v)| v.parse::<i64>().is_err())
                .map(move |(c, v)| format!("χ{k}({c}) = {v}"))
        })
        .collect();
    if !irrational.is_empty() {
        out.push_str("\nexact values:\n");
        for line in irrational {
            out.push_str(&format!("  {line}\n"));
        }
    }
    out
}

pub fn render_classes_text(report: &ClassesReport) -> String {
    let mut out = format!("{}  order {}\n\n", report.group, report.order);
    let header = [
        "class",
        "size",
        "order",
        "centralizer",
        "inverse",
        "representative",
    ]
    .map(String::from)
    .to_vec();
    let body = report
        .classes
        .iter()
        .map(|c| {
            vec![
                c.index.to_string(),
                c.size.to_string(),
                c.element_order.to_string(),
                c.centralizer_order.to_string(),
                c.inverse_class.to_string(),
                c.representative.clone(),
            ]
        })
        .collect();
    out.push_str(&aligned(header, body));
    out
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::corpus::builtin;

    fn table(name: &str, params: &[usize]) -> CharacterTable {
        let g = Arc::new(builtin(name, params).unwrap().realize().unwrap());
        CharacterTable::compute(Arc::new(ClassData::new(g))).unwrap()
    }

    #[test]
    fn s3_table_report() {
        let r = table_report(&table("symmetric", &[3]));
        assert_eq!(r.rows.len(), 3);
        assert_eq!(
            r.rows.iter().map(|x| x.degree).collect::<Vec<_>>(),
            vec![1, 1, 2]
        );
        assert_eq!(r.rows[2].values, vec!["2", "-1", "0"]);
        let text = render_table_text(&r);
        assert!(text.contains("χ2"));
        assert!(!text.contains("exact values"));
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(format_complex([1.0, 0.0]), "1");
        assert_eq!(format_complex([-0.5, 0.866025]), "-0.5+0.866i");
        assert_eq!(format_complex([0.0, -1.0]), "-1i");
        let c3 = render_table_text(&table_report(&table("cyclic", &[3])));
        assert!(c3.contains("exact values"));
        assert!(c3.contains("z"));
    }

    #[test]
    fn classes_text_lists_representatives() {
        let g = Arc::new(builtin("symmetric", &[3]).unwrap().realize().unwrap());
        let cd = ClassData::new(g);
        let text = render_classes_text(&class_report(&cd));
        assert!(text.contains("(0 1)"));
        assert_eq!(text.lines().count(), 2 + 1 + 3);
    }
}
