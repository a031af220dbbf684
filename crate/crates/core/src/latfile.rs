//! The `.lat` text format.
//!
//! ```text
//! # two-element chain
//! N 2
//! NAMES 0 1
//! ORDER
//! 11
//! 01
//! MUL
//! 0 0
//! 0 1
//! SIGMA atoms: 1
//! ```
//!
//! `ORDER` row `i` has a `1` in column `j` iff element `i` lies below
//! element `j`. `HOM` blocks (`HOM name` / `SOURCE file` / `TARGET file` /
//! `i -> j` lines / `END`) may follow. `#` starts a comment; blank lines
//! are ignored. Hom files on their own are just `i -> j` lines.

use std::fmt::Write as _;

use crate::element_set::{ElementSet, MAX_ELEMENTS};
use crate::error::{LatticeError, ParseError};
use crate::lattice::{MultLattice, RawLattice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBlock {
    pub name: String,
    pub source: String,
    pub target: String,
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatFile {
    pub n: usize,
    pub names: Option<Vec<String>>,
    pub order: Vec<Vec<bool>>,
    pub mul: Vec<Vec<usize>>,
    pub sigmas: Vec<(String, Vec<usize>)>,
    pub homs: Vec<HomBlock>,
}

impl LatFile {
    pub fn from_lattice(l: &MultLattice) -> Self {
        let raw = l.to_raw();
        LatFile {
            n: l.len(),
            names: raw.names,
            order: raw.leq,
            mul: raw.mul,
            sigmas: Vec::new(),
            homs: Vec::new(),
        }
    }

    pub fn with_sigma(mut self, name: impl Into<String>, set: ElementSet) -> Self {
        self.sigmas.push((name.into(), set.iter().collect()));
        self
    }

    pub fn to_lattice(&self) -> Result<MultLattice, LatticeError> {
        MultLattice::validate(RawLattice {
            leq: self.order.clone(),
            mul: self.mul.clone(),
            names: self.names.clone(),
        })
    }

    /// Custom classes declared by `SIGMA` lines.
    pub fn custom_classes(&self) -> Vec<(String, ElementSet)> {
        self.sigmas
            .iter()
            .map(|(name, idx)| (name.clone(), idx.iter().copied().collect()))
            .collect()
    }
}

/// Canonical text: sections in fixed order, single spaces, no comments.
pub fn serialize_latfile(f: &LatFile) -> String {
    let mut out = String::new();
    writeln!(out, "N {}", f.n).unwrap();
    if let Some(names) = &f.names {
        writeln!(out, "NAMES {}", names.join(" ")).unwrap();
    }
    out.push_str("ORDER\n");
    for row in &f.order {
        out.extend(row.iter().map(|&b| if b { '1' } else { '0' }));
        out.push('\n');
    }
    out.push_str("MUL\n");
    for row in &f.mul {
        out.push_str(&join_indices(row));
        out.push('\n');
    }
    for (name, idx) in &f.sigmas {
        if idx.is_empty() {
            writeln!(out, "SIGMA {name}:").unwrap();
        } else {
            writeln!(out, "SIGMA {name}: {}", join_indices(idx)).unwrap();
        }
    }
    for h in &f.homs {
        writeln!(out, "HOM {}", h.name).unwrap();
        writeln!(out, "SOURCE {}", h.source).unwrap();
        writeln!(out, "TARGET {}", h.target).unwrap();
        for (i, j) in &h.pairs {
            writeln!(out, "{i} -> {j}").unwrap();
        }
        out.push_str("END\n");
    }
    out
}

/// Shorthand for serializing a bare lattice.
pub fn serialize_lattice(l: &MultLattice) -> String {
    serialize_latfile(&LatFile::from_lattice(l))
}

fn join_indices(v: &[usize]) -> String {
    v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

/// A whitespace-separated token with its 1-based column.
#[derive(Clone, Copy)]
struct Tok<'s> {
    text: &'s str,
    col: usize,
}

struct Line<'s> {
    no: usize,
    toks: Vec<Tok<'s>>,
    /// column just past the last token, for errors about missing input
    end_col: usize,
}

fn lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let mut toks = Vec::new();
        let mut start: Option<usize> = None;
        let mut col = 0;
        for (byte, ch) in content.char_indices() {
            col += 1;
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    toks.push(Tok { text: &content[s..byte], col: col_of(content, s) });
                }
            } else if start.is_none() {
                start = Some(byte);
            }
        }
        if let Some(s) = start {
            toks.push(Tok { text: &content[s..], col: col_of(content, s) });
        }
        if !toks.is_empty() {
            out.push(Line { no: i + 1, toks, end_col: col + 1 });
        }
    }
    out
}

fn col_of(s: &str, byte: usize) -> usize {
    s[..byte].chars().count() + 1
}

fn syntax(line: usize, col: usize, expected: impl Into<String>) -> ParseError {
    ParseError::SyntaxError { line, col, expected: expected.into() }
}

fn parse_index(tok: Tok, line: usize, n: usize) -> Result<usize, ParseError> {
    if !tok.text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(line, tok.col, "element index"));
    }
    match tok.text.parse::<usize>() {
        Ok(v) if v < n => Ok(v),
        Ok(v) => Err(ParseError::IndexOutOfRange { line, col: tok.col, value: v, n }),
        Err(_) => Err(ParseError::IndexOutOfRange { line, col: tok.col, value: usize::MAX, n }),
    }
}

fn expect_arity(line: &Line, count: usize, expected: &str) -> Result<(), ParseError> {
    if line.toks.len() < count {
        return Err(syntax(line.no, line.end_col, expected));
    }
    if line.toks.len() > count {
        return Err(syntax(line.no, line.toks[count].col, "end of line"));
    }
    Ok(())
}

/// `i -> j` with both sides range-checked.
fn parse_arrow(line: &Line, n_src: usize, n_tgt: usize) -> Result<(usize, usize), ParseError> {
    let t = &line.toks;
    if t.len() >= 2 && t[1].text != "->" {
        return Err(syntax(line.no, t[1].col, "`->`"));
    }
    expect_arity(line, 3, "`i -> j`")?;
    Ok((parse_index(t[0], line.no, n_src)?, parse_index(t[2], line.no, n_tgt)?))
}

const SECTIONS: &str = "N, NAMES, ORDER, MUL, SIGMA or HOM";

/// Parses a `.lat` file. Errors carry the line and column of the first
/// offending token.
pub fn parse_latfile(text: &str) -> Result<LatFile, ParseError> {
    let ls = lines(text);
    let mut it = ls.iter().peekable();

    let first = it.next().ok_or_else(|| syntax(1, 1, "`N <count>`"))?;
    if first.toks[0].text != "N" {
        return Err(syntax(first.no, first.toks[0].col, "`N <count>`"));
    }
    expect_arity(first, 2, "element count")?;
    let n_tok = first.toks[1];
    let n = match n_tok.text.parse::<usize>() {
        Ok(v) if (1..=MAX_ELEMENTS).contains(&v) && n_tok.text.bytes().all(|b| b.is_ascii_digit()) => v,
        _ => return Err(syntax(first.no, n_tok.col, format!("element count between 1 and {MAX_ELEMENTS}"))),
    };

    let mut names: Option<Vec<String>> = None;
    let mut order: Option<Vec<Vec<bool>>> = None;
    let mut mul: Option<Vec<Vec<usize>>> = None;
    let mut sigmas: Vec<(String, Vec<usize>)> = Vec::new();
    let mut homs: Vec<HomBlock> = Vec::new();
    let mut last_line = first.no;

    while let Some(line) = it.next() {
        last_line = line.no;
        let head = line.toks[0];
        let dup = |section: &str| ParseError::DuplicateSection {
            line: line.no,
            col: head.col,
            section: section.to_string(),
        };
        match head.text {
            "N" => return Err(dup("N")),
            "NAMES" => {
                if names.is_some() {
                    return Err(dup("NAMES"));
                }
                let found = line.toks.len() - 1;
                if found != n {
                    return Err(ParseError::DimensionMismatch { line: line.no, col: head.col, expected: n, found });
                }
                names = Some(line.toks[1..].iter().map(|t| t.text.to_string()).collect());
            }
            "ORDER" => {
                if order.is_some() {
                    return Err(dup("ORDER"));
                }
                expect_arity(line, 1, "end of line")?;
                let mut rows = Vec::with_capacity(n);
                for _ in 0..n {
                    let row = next_row(&mut it, line.no, &ls, n, rows.len())?;
                    last_line = row.no;
                    if row.toks.len() > 1 {
                        return Err(syntax(row.no, row.toks[1].col, "a single run of 0/1"));
                    }
                    let tok = row.toks[0];
                    let mut bits = Vec::with_capacity(n);
                    for (k, ch) in tok.text.chars().enumerate() {
                        match ch {
                            '0' => bits.push(false),
                            '1' => bits.push(true),
                            _ => return Err(syntax(row.no, tok.col + k, "`0` or `1`")),
                        }
                    }
                    if bits.len() != n {
                        return Err(ParseError::DimensionMismatch {
                            line: row.no,
                            col: tok.col,
                            expected: n,
                            found: bits.len(),
                        });
                    }
                    rows.push(bits);
                }
                order = Some(rows);
            }
            "MUL" => {
                if mul.is_some() {
                    return Err(dup("MUL"));
                }
                expect_arity(line, 1, "end of line")?;
                let mut rows = Vec::with_capacity(n);
                for _ in 0..n {
                    let row = next_row(&mut it, line.no, &ls, n, rows.len())?;
                    last_line = row.no;
                    if row.toks.len() != n {
                        return Err(ParseError::DimensionMismatch {
                            line: row.no,
                            col: row.toks[0].col,
                            expected: n,
                            found: row.toks.len(),
                        });
                    }
                    let r = row.toks.iter().map(|&t| parse_index(t, row.no, n)).collect::<Result<Vec<_>, _>>()?;
                    rows.push(r);
                }
                mul = Some(rows);
            }
            "SIGMA" => {
                let name_tok = line.toks.get(1).ok_or_else(|| syntax(line.no, line.end_col, "`<name>:`"))?;
                let name = name_tok
                    .text
                    .strip_suffix(':')
                    .filter(|s| !s.is_empty() && !s.contains(':'))
                    .ok_or_else(|| syntax(line.no, name_tok.col, "`<name>:`"))?;
                if sigmas.iter().any(|(s, _)| s == name) {
                    return Err(ParseError::DuplicateSection {
                        line: line.no,
                        col: name_tok.col,
                        section: format!("SIGMA {name}"),
                    });
                }
                let idx = line.toks[2..].iter().map(|&t| parse_index(t, line.no, n)).collect::<Result<Vec<_>, _>>()?;
                sigmas.push((name.to_string(), idx));
            }
            "HOM" => {
                expect_arity(line, 2, "hom name")?;
                let name = line.toks[1].text.to_string();
                if homs.iter().any(|h| h.name == name) {
                    return Err(ParseError::DuplicateSection {
                        line: line.no,
                        col: line.toks[1].col,
                        section: format!("HOM {name}"),
                    });
                }
                let mut file_ref = |key: &str| -> Result<String, ParseError> {
                    let l = it.next().ok_or_else(|| syntax(last_line + 1, 1, format!("`{key} <file>`")))?;
                    last_line = l.no;
                    if l.toks[0].text != key {
                        return Err(syntax(l.no, l.toks[0].col, format!("`{key} <file>`")));
                    }
                    expect_arity(l, 2, "file name")?;
                    Ok(l.toks[1].text.to_string())
                };
                let source = file_ref("SOURCE")?;
                let target = file_ref("TARGET")?;
                let mut pairs = Vec::new();
                loop {
                    let l = it.next().ok_or_else(|| syntax(last_line + 1, 1, "`END`"))?;
                    last_line = l.no;
                    if l.toks[0].text == "END" {
                        expect_arity(l, 1, "end of line")?;
                        break;
                    }
                    // endpoints refer to other files, so only syntax is checked here
                    pairs.push(parse_arrow(l, usize::MAX, usize::MAX)?);
                }
                homs.push(HomBlock { name, source, target, pairs });
            }
            _ => return Err(syntax(line.no, head.col, SECTIONS)),
        }
    }

    let order = order.ok_or_else(|| syntax(last_line + 1, 1, "ORDER section"))?;
    let mul = mul.ok_or_else(|| syntax(last_line + 1, 1, "MUL section"))?;
    Ok(LatFile { n, names, order, mul, sigmas, homs })
}

/// The next table row, or a dimension error positioned where the table
/// ended early.
fn next_row<'a, 's>(
    it: &mut std::iter::Peekable<std::slice::Iter<'a, Line<'s>>>,
    header: usize,
    all: &[Line],
    n: usize,
    have: usize,
) -> Result<&'a Line<'s>, ParseError> {
    match it.peek() {
        Some(l) if !is_section(l.toks[0].text) => Ok(it.next().unwrap()),
        Some(l) => Err(ParseError::DimensionMismatch { line: l.no, col: 1, expected: n, found: have }),
        None => {
            let line = all.last().map_or(header, |l| l.no) + 1;
            Err(ParseError::DimensionMismatch { line, col: 1, expected: n, found: have })
        }
    }
}

fn is_section(tok: &str) -> bool {
    matches!(tok, "N" | "NAMES" | "ORDER" | "MUL" | "SIGMA" | "HOM")
}

/// Parses a hom file: one `i -> j` line per source element, each source
/// index exactly once. Returns the map as a table.
pub fn parse_homfile(text: &str, n_src: usize, n_tgt: usize) -> Result<Vec<usize>, ParseError> {
    let ls = lines(text);
    let mut map = vec![None; n_src];
    for line in &ls {
        let (i, j) = parse_arrow(line, n_src, n_tgt)?;
        if map[i].is_some() {
            return Err(syntax(line.no, line.toks[0].col, "each source index once"));
        }
        map[i] = Some(j);
    }
    let found = map.iter().filter(|m| m.is_some()).count();
    if found != n_src {
        let line = ls.last().map_or(1, |l| l.no + 1);
        return Err(ParseError::DimensionMismatch { line, col: 1, expected: n_src, found });
    }
    Ok(map.into_iter().map(Option::unwrap).collect())
}

/// Canonical hom file text for a map table.
pub fn serialize_homfile(map: &[usize]) -> String {
    map.iter().enumerate().map(|(i, j)| format!("{i} -> {j}\n")).collect()
}
