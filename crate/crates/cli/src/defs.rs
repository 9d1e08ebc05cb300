//! Line-oriented algebra definition files.
//!
//! A file declares a quotient of a weighted polynomial ring and optional
//! named degree-1 forms:
//!
//! ```text
//! # comment
//! ring: x y
//! weights: 1 1
//! ideal:
//!   x^2
//!   y^2
//! forms:
//!   diag = x + y
//! ```
//!
//! `ring:` lists variable names; `weights:` is optional and defaults to
//! all ones; `ideal:` and `forms:` open sections whose entries are
//! comma-separated polynomials, either on the header line or on the
//! following lines. A form entry may carry a `name =` prefix. `#` starts
//! a comment anywhere. Every diagnostic points at the file, and at the
//! 1-based line and column when one position is responsible.

use std::path::Path;

use lefschetz_core::constructions::GradedAlgebra;
use lefschetz_core::graded::LinearForm;
use lefschetz_core::polyring::{
    parse_polynomial, GroebnerBasis, Polynomial, PolyError, QuotientPresentation, RingSpec,
};

#[derive(Debug)]
pub struct Definition {
    pub algebra: GradedAlgebra,
    pub forms: Vec<(String, LinearForm)>,
}

#[derive(Debug, thiserror::Error)]
pub enum DefError {
    #[error("{path}: {message}")]
    File { path: String, message: String },
    #[error("{path}:{line}:{col}: {message}")]
    At { path: String, line: usize, col: usize, message: String },
}

/// One section entry: its text and the 1-based position of its first
/// character in the source file.
struct Entry {
    text: String,
    line: usize,
    col: usize,
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    None,
    Ideal,
    Forms,
}

pub fn load(path: &Path) -> Result<Definition, DefError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|e| DefError::File { path: shown.clone(), message: e.to_string() })?;
    parse(&text, &shown)
}

fn parse(text: &str, path: &str) -> Result<Definition, DefError> {
    let mut ring_decl: Option<(Vec<String>, usize)> = None;
    let mut weight_decl: Option<(Vec<u32>, usize)> = None;
    let mut ideal_entries: Vec<Entry> = Vec::new();
    let mut form_entries: Vec<Entry> = Vec::new();
    let mut section = Section::None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line: String = raw.chars().take_while(|&c| c != '#').collect();
        if line.trim().is_empty() {
            continue;
        }
        let indent = line.chars().take_while(|c| c.is_whitespace()).count();
        let body = line.trim_start();

        if let Some(rest) = body.strip_prefix("ring:") {
            if ring_decl.is_some() {
                return Err(DefError::At {
                    path: path.into(),
                    line: line_no,
                    col: indent + 1,
                    message: "duplicate ring: section".into(),
                });
            }
            let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if names.is_empty() {
                return Err(DefError::At {
                    path: path.into(),
                    line: line_no,
                    col: indent + 1,
                    message: "ring: needs at least one variable name".into(),
                });
            }
            ring_decl = Some((names, line_no));
            section = Section::None;
        } else if let Some(rest) = body.strip_prefix("weights:") {
            if weight_decl.is_some() {
                return Err(DefError::At {
                    path: path.into(),
                    line: line_no,
                    col: indent + 1,
                    message: "duplicate weights: section".into(),
                });
            }
            let offset = indent + "weights:".len();
            let mut weights = Vec::new();
            for (col, token) in tokens_with_columns(rest, offset) {
                let w: u32 = token.parse().map_err(|_| DefError::At {
                    path: path.into(),
                    line: line_no,
                    col,
                    message: format!("`{token}` is not a positive integer weight"),
                })?;
                weights.push(w);
            }
            weight_decl = Some((weights, line_no));
            section = Section::None;
        } else if let Some(rest) = body.strip_prefix("ideal:") {
            section = Section::Ideal;
            split_entries(rest, line_no, indent + "ideal:".len(), &mut ideal_entries);
        } else if let Some(rest) = body.strip_prefix("forms:") {
            section = Section::Forms;
            split_entries(rest, line_no, indent + "forms:".len(), &mut form_entries);
        } else {
            match section {
                Section::Ideal => split_entries(&line, line_no, 0, &mut ideal_entries),
                Section::Forms => split_entries(&line, line_no, 0, &mut form_entries),
                Section::None => {
                    return Err(DefError::At {
                        path: path.into(),
                        line: line_no,
                        col: indent + 1,
                        message: "expected a section header: ring:, weights:, ideal:, or forms:"
                            .into(),
                    });
                }
            }
        }
    }

    let (names, ring_line) = ring_decl.ok_or_else(|| DefError::File {
        path: path.into(),
        message: "missing ring: section".into(),
    })?;
    let weights = match weight_decl {
        Some((w, line)) => {
            if w.len() != names.len() {
                return Err(DefError::At {
                    path: path.into(),
                    line,
                    col: 1,
                    message: format!("{} weights for {} variables", w.len(), names.len()),
                });
            }
            w
        }
        None => vec![1; names.len()],
    };
    let ring = RingSpec::new(names.clone(), weights).map_err(|e| DefError::At {
        path: path.into(),
        line: ring_line,
        col: 1,
        message: e.to_string(),
    })?;

    if ideal_entries.is_empty() {
        return Err(DefError::File {
            path: path.into(),
            message: PolyError::NotArtinian { variables: names.join(", ") }.to_string(),
        });
    }
    let mut generators = Vec::with_capacity(ideal_entries.len());
    for entry in &ideal_entries {
        let poly = parse_poly_at(&entry.text, &ring, path, entry)?;
        if poly.is_zero() {
            return Err(DefError::At {
                path: path.into(),
                line: entry.line,
                col: entry.col,
                message: "ideal generator is zero".into(),
            });
        }
        if !poly.is_homogeneous() {
            return Err(DefError::At {
                path: path.into(),
                line: entry.line,
                col: entry.col,
                message: "ideal generator is not homogeneous in the declared weights".into(),
            });
        }
        generators.push(poly);
    }

    let at_file = |e: &dyn std::fmt::Display| DefError::File { path: path.into(), message: e.to_string() };
    let gb = GroebnerBasis::compute(&generators).map_err(|e| at_file(&e))?;
    let pres = QuotientPresentation::build(gb).map_err(|e| at_file(&e))?;
    let algebra = GradedAlgebra::from_presentation(pres).map_err(|e| at_file(&e))?;

    let mut forms: Vec<(String, LinearForm)> = Vec::new();
    for entry in &form_entries {
        let (name, expr, expr_entry) = split_form_name(entry);
        let poly = parse_poly_at(&expr, &ring, path, &expr_entry)?;
        let form = algebra.form_from_polynomial(&poly).map_err(|e| DefError::At {
            path: path.into(),
            line: expr_entry.line,
            col: expr_entry.col,
            message: e.to_string(),
        })?;
        let name = name.unwrap_or_else(|| algebra.module().form_name(&form));
        if forms.iter().any(|(n, _)| *n == name) {
            return Err(DefError::At {
                path: path.into(),
                line: entry.line,
                col: entry.col,
                message: format!("duplicate form name `{name}`"),
            });
        }
        forms.push((name, form));
    }

    Ok(Definition { algebra, forms })
}

/// Parses one polynomial, shifting the parser's in-entry column by the
/// entry's position in the file.
fn parse_poly_at(
    text: &str,
    ring: &std::sync::Arc<RingSpec>,
    path: &str,
    entry: &Entry,
) -> Result<Polynomial, DefError> {
    parse_polynomial(text, ring).map_err(|e| DefError::At {
        path: path.into(),
        line: entry.line,
        col: entry.col + e.col - 1,
        message: e.msg,
    })
}

/// Splits `rest` on commas into entries, recording each entry's 1-based
/// starting column. `offset` is the 0-based column where `rest` begins.
fn split_entries(rest: &str, line: usize, offset: usize, out: &mut Vec<Entry>) {
    let mut col = offset;
    for piece in rest.split(',') {
        let leading = piece.chars().take_while(|c| c.is_whitespace()).count();
        let text = piece.trim();
        if !text.is_empty() {
            out.push(Entry { text: text.to_string(), line, col: col + leading + 1 });
        }
        col += piece.chars().count() + 1;
    }
}

fn tokens_with_columns(rest: &str, offset: usize) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut col = offset;
    let mut current = String::new();
    let mut start = 0;
    for c in rest.chars() {
        col += 1;
        if c.is_whitespace() {
            if !current.is_empty() {
                out.push((start, std::mem::take(&mut current)));
            }
        } else {
            if current.is_empty() {
                start = col;
            }
            current.push(c);
        }
    }
    if !current.is_empty() {
        out.push((start, current));
    }
    out
}

/// Splits an optional `name =` prefix off a form entry, returning the
/// name, the expression text, and an entry positioned at the expression.
fn split_form_name(entry: &Entry) -> (Option<String>, String, Entry) {
    match entry.text.split_once('=') {
        Some((left, right)) => {
            let name = left.trim().to_string();
            let eaten = left.chars().count() + 1;
            let leading = right.chars().take_while(|c| c.is_whitespace()).count();
            let expr = right.trim().to_string();
            (
                (!name.is_empty()).then_some(name),
                expr,
                Entry { text: String::new(), line: entry.line, col: entry.col + eaten + leading },
            )
        }
        None => (
            None,
            entry.text.clone(),
            Entry { text: String::new(), line: entry.line, col: entry.col },
        ),
    }
}
