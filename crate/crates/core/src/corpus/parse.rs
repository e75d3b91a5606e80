//! Line-oriented group file format:
//!
//! ```text
//! # comment
//! group S3 degree 3 gens (0 1); (0 1 2)
//! group C1 degree 1 gens ()
//! group V4 degree 4 gens (0 1)(2 3); (0 2)(1 3) tags abelian,klein
//! ```
//!
//! Points are 0-based. Each generator is a product of disjoint cycles; `()`
//! denotes the identity. The trailing `tags` clause is optional.

use std::collections::HashSet;

use thiserror::Error;

use super::GroupSpec;
use crate::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("{line}:{column}: syntax error: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: duplicate group name `{name}`")]
    DuplicateName {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("{line}:{column}: point {point} out of range for degree {degree}")]
    PointOutOfRange {
        line: usize,
        column: usize,
        point: usize,
        degree: usize,
    },
    #[error("{line}:{column}: point {point} repeated; cycles do not form a bijection")]
    NonBijective {
        line: usize,
        column: usize,
        point: usize,
    },
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Self {
            chars: src.char_indices().collect(),
            pos: 0,
            line,
            src,
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn error(&self, message: impl Into<String>) -> SpecError {
        SpecError::Syntax {
            line: self.line,
            column: self.column(),
            message: message.into(),
        }
    }

    /// A maximal run of characters that are not whitespace, `;` or `(`.
    fn word(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if !c.is_whitespace() && c != ';' && c != '(') {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        let lo = self.chars[start].0;
        let hi = self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i);
        Some((start + 1, &self.src[lo..hi]))
    }

    fn keyword(&mut self, kw: &str) -> Result<(), SpecError> {
        let col = {
            self.skip_ws();
            self.column()
        };
        match self.word() {
            Some((_, w)) if w == kw => Ok(()),
            Some((c, w)) => Err(SpecError::Syntax {
                line: self.line,
                column: c,
                message: format!("expected `{kw}`, found `{w}`"),
            }),
            None => Err(SpecError::Syntax {
                line: self.line,
                column: col,
                message: format!("expected `{kw}`"),
            }),
        }
    }

    fn number(&mut self) -> Result<(usize, usize), SpecError> {
        self.skip_ws();
        let col = self.column();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a non-negative integer"));
        }
        let text: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        text.parse()
            .map(|n| (col, n))
            .map_err(|_| SpecError::Syntax {
                line: self.line,
                column: col,
                message: format!("integer `{text}` too large"),
            })
    }

    /// One generator: a nonempty run of parenthesized cycles.
    fn generator(&mut self, degree: usize) -> Result<Permutation, SpecError> {
        self.skip_ws();
        if self.peek() != Some('(') {
            return Err(self.error("expected `(` starting a cycle"));
        }
        let mut cycles = Vec::new();
        let mut seen = vec![false; degree];
        while self.peek() == Some('(') {
            self.pos += 1;
            let mut cycle = Vec::new();
            loop {
                self.skip_ws();
                match self.peek() {
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    Some(',') if !cycle.is_empty() => self.pos += 1,
                    Some(c) if c.is_ascii_digit() => {
                        let (column, point) = self.number()?;
                        if point >= degree {
                            return Err(SpecError::PointOutOfRange {
                                line: self.line,
                                column,
                                point,
                                degree,
                            });
                        }
                        if seen[point] {
                            return Err(SpecError::NonBijective {
                                line: self.line,
                                column,
                                point,
                            });
                        }
                        seen[point] = true;
                        cycle.push(point);
                    }
                    Some(c) => return Err(self.error(format!("unexpected `{c}` inside cycle"))),
                    None => return Err(self.error("unterminated cycle")),
                }
            }
            cycles.push(cycle);
            // cycles may be separated by blanks
            let save = self.pos;
            self.skip_ws();
            if self.peek() != Some('(') {
                self.pos = save;
            }
        }
        Ok(Permutation::from_cycles(degree, &cycles).expect("validated above"))
    }
}

fn parse_line(text: &str, line: usize) -> Result<Option<(usize, GroupSpec)>, SpecError> {
    let body = text.split('#').next().unwrap_or("");
    let mut cur = Cursor::new(body, line);
    if cur.at_end() {
        return Ok(None);
    }
    cur.keyword("group")?;
    let (name_col, name) = cur
        .word()
        .ok_or_else(|| cur.error("expected a group name"))?;
    cur.keyword("degree")?;
    let (deg_col, degree) = cur.number()?;
    if degree == 0 {
        return Err(SpecError::Syntax {
            line,
            column: deg_col,
            message: "degree must be positive".into(),
        });
    }
    cur.keyword("gens")?;
    let mut generators = vec![cur.generator(degree)?];
    let mut tags = Vec::new();
    loop {
        if cur.at_end() {
            break;
        }
        if cur.peek() == Some(';') {
            cur.pos += 1;
            generators.push(cur.generator(degree)?);
            continue;
        }
        cur.keyword("tags")?;
        let (_, list) = cur.word().ok_or_else(|| cur.error("expected tag list"))?;
        tags = list
            .split(',')
            .filter(|t| !t.is_empty())
            .map(String::from)
            .collect();
        if !cur.at_end() {
            return Err(cur.error("trailing input after tags"));
        }
        break;
    }
    Ok(Some((
        name_col,
        GroupSpec {
            name: name.to_string(),
            degree,
            generators,
            tags,
        },
    )))
}

/// Parses every `group` line of a file.
pub fn parse_spec(text: &str) -> Result<Vec<GroupSpec>, SpecError> {
    let mut names = HashSet::new();
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        if let Some((column, spec)) = parse_line(raw, line)? {
            if !names.insert(spec.name.clone()) {
                return Err(SpecError::DuplicateName {
                    line,
                    column,
                    name: spec.name,
                });
            }
            out.push(spec);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_s3() {
        let specs = parse_spec("group S3 degree 3 gens (0 1); (0 1 2)").unwrap();
        assert_eq!(specs.len(), 1);
        assert_eq!(specs[0].name, "S3");
        assert_eq!(specs[0].degree, 3);
        assert_eq!(specs[0].generators.len(), 2);
        assert_eq!(specs[0].realize().unwrap().order(), 6);
    }

    #[test]
    fn comments_blank_lines_and_tags() {
        let text = "# header\n\n  group V4 degree 4 gens (0 1)(2 3);(0 2)(1 3) tags abelian,klein # trailing\n\
                    group C1 degree 1 gens ()\n";
        let specs = parse_spec(text).unwrap();
        assert_eq!(specs.len(), 2);
        assert_eq!(specs[0].tags, vec!["abelian", "klein"]);
        assert_eq!(specs[0].realize().unwrap().order(), 4);
        assert_eq!(specs[1].realize().unwrap().order(), 1);
    }

    #[test]
    fn point_out_of_range() {
        let err = parse_spec("group X degree 3 gens (0 3)").unwrap_err();
        assert_eq!(
            err,
            SpecError::PointOutOfRange {
                line: 1,
                column: 26,
                point: 3,
                degree: 3
            }
        );
    }

    #[test]
    fn duplicate_name() {
        let err =
            parse_spec("group C2 degree 2 gens (0 1)\ngroup C2 degree 2 gens (0 1)").unwrap_err();
        assert!(matches!(
            err,
            SpecError::DuplicateName {
                line: 2,
                column: 7,
                ..
            }
        ));
    }

    #[test]
    fn repeated_point_is_not_bijective() {
        let err = parse_spec("group X degree 4 gens (0 1)(1 2)").unwrap_err();
        assert!(matches!(
            err,
            SpecError::NonBijective {
                line: 1,
                point: 1,
                ..
            }
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_spec("\ngroup X degre 3 gens (0 1)").unwrap_err();
        assert!(matches!(
            err,
            SpecError::Syntax {
                line: 2,
                column: 9,
                ..
            }
        ));
        assert!(parse_spec("group X degree 3 gens (0 1").is_err());
        assert!(parse_spec("group X degree 3 gens").is_err());
        assert!(parse_spec("group X degree 0 gens ()").is_err());
        assert!(parse_spec("group X degree 3 gens (0 1) junk").is_err());
        assert!(parse_spec("group X degree 3 gens (0 a)").is_err());
    }
}
