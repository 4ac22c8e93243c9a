//! Line-oriented input files.
//!
//! ```text
//! # W-tensor
//! tensor 3 2
//! 2 1 1
//! 1 2 1
//! 1 1 2
//! ```
//!
//! Headers: `tensor <d> <n>` (tuples of 1-based indices), `symm <d> <n>`
//! (exponent vectors summing to `d`), `mideal <n>` (exponent vectors),
//! `pideal <n>` (terms `<p>/<q> : e1 … en`, generators separated by `--`)
//! and `matrix <n>` (`n` rows of `n` rationals). `#` starts a comment.
//! Rationals are `p/q` or integers; decimals are rejected.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ideal::{LinearChange, MonomialIdeal, PolyIdeal, SparsePolynomial};
use crate::tensor::{SymmetricSupport, TensorSupport};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputDocument {
    Tensor(TensorSupport),
    Symm(SymmetricSupport),
    MonomialIdeal(MonomialIdeal),
    PolyIdeal(PolyIdeal),
    Matrix(LinearChange),
}

impl InputDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            InputDocument::Tensor(_) => "tensor",
            InputDocument::Symm(_) => "symm",
            InputDocument::MonomialIdeal(_) => "mideal",
            InputDocument::PolyIdeal(_) => "pideal",
            InputDocument::Matrix(_) => "matrix",
        }
    }
}

/// A diagnostic pointing at a 1-based line of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Parses `p/q` or an integer.
pub fn parse_rational(token: &str) -> Option<Rational> {
    let digits = |s: &str| {
        let body = s.strip_prefix(['-', '+']).unwrap_or(s);
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    let (p, q) = match token.split_once('/') {
        Some((p, q)) => (p, q),
        None => (token, "1"),
    };
    if !digits(p) || !q.bytes().all(|b| b.is_ascii_digit()) || q.is_empty() {
        return None;
    }
    let q = BigInt::from_str(q).ok()?;
    if q.is_zero() {
        return None;
    }
    Some(Rational::new(BigInt::from_str(p).ok()?, q))
}

/// Comma-separated rationals, as taken by `--alpha`.
pub fn parse_rational_list(text: &str) -> Option<Vec<Rational>> {
    text.split(',').map(|t| parse_rational(t.trim())).collect()
}

fn content_lines(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let line = line.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            (!tokens.is_empty()).then_some((i + 1, tokens))
        })
        .collect()
}

fn parse_count(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    match token.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => err(line, format!("{what} must be a positive integer, found {token:?}")),
    }
}

fn parse_ints<T: FromStr>(line: usize, tokens: &[&str], arity: usize, what: &str) -> Result<Vec<T>, ParseError> {
    if tokens.len() != arity {
        return err(line, format!("expected {arity} {what}, found {}", tokens.len()));
    }
    tokens
        .iter()
        .map(|t| t.parse::<T>().or_else(|_| err(line, format!("invalid integer {t:?}"))))
        .collect()
}

pub fn parse_input(text: &str) -> Result<InputDocument, ParseError> {
    let lines = content_lines(text);
    let Some(((header_line, header), body)) = lines.split_first() else {
        return err(1, "empty input: expected a header line");
    };
    let header_line = *header_line;
    let last_line = body.last().map_or(header_line, |(l, _)| *l);
    let args = &header[1..];
    let expect_args = |k: usize| -> Result<(), ParseError> {
        if args.len() == k {
            Ok(())
        } else {
            err(header_line, format!("header `{}` takes {k} arguments, found {}", header[0], args.len()))
        }
    };

    match header[0] {
        "tensor" => {
            expect_args(2)?;
            let d = parse_count(header_line, args[0], "order")?;
            let n = parse_count(header_line, args[1], "dimension")?;
            let mut seen = BTreeSet::new();
            for (line, tokens) in body {
                let tuple: Vec<usize> = parse_ints(*line, tokens, d, "indices")?;
                if let Some(j) = tuple.iter().find(|&&j| j == 0 || j > n) {
                    return err(*line, format!("index {j} outside 1..={n}"));
                }
                if !seen.insert(tuple) {
                    return err(*line, "duplicate tuple");
                }
            }
            TensorSupport::new(d, n, seen)
                .map(InputDocument::Tensor)
                .or_else(|e| err(last_line, e.to_string()))
        }
        "symm" => {
            expect_args(2)?;
            let d = parse_count(header_line, args[0], "degree")?;
            let n = parse_count(header_line, args[1], "variable count")?;
            let mut seen = BTreeSet::new();
            for (line, tokens) in body {
                let m: Vec<u32> = parse_ints(*line, tokens, n, "exponents")?;
                if m.iter().map(|&e| e as usize).sum::<usize>() != d {
                    return err(*line, format!("exponents do not sum to {d}"));
                }
                if !seen.insert(m) {
                    return err(*line, "duplicate exponent vector");
                }
            }
            SymmetricSupport::new(d, n, seen)
                .map(InputDocument::Symm)
                .or_else(|e| err(last_line, e.to_string()))
        }
        "mideal" => {
            expect_args(1)?;
            let n = parse_count(header_line, args[0], "variable count")?;
            let mut seen = BTreeSet::new();
            for (line, tokens) in body {
                let m: Vec<u32> = parse_ints(*line, tokens, n, "exponents")?;
                if !seen.insert(m) {
                    return err(*line, "duplicate generator");
                }
            }
            if seen.is_empty() {
                return err(last_line, "ideal has no generators");
            }
            MonomialIdeal::new(n, seen)
                .map(InputDocument::MonomialIdeal)
                .or_else(|e| err(last_line, e.to_string()))
        }
        "pideal" => {
            expect_args(1)?;
            let n = parse_count(header_line, args[0], "variable count")?;
            parse_poly_ideal(n, body, header_line)
        }
        "matrix" => {
            expect_args(1)?;
            let n = parse_count(header_line, args[0], "dimension")?;
            if body.len() != n {
                return err(last_line, format!("expected {n} matrix rows, found {}", body.len()));
            }
            let mut rows = Vec::with_capacity(n);
            for (line, tokens) in body {
                if tokens.len() != n {
                    return err(*line, format!("expected {n} entries, found {}", tokens.len()));
                }
                let row = tokens
                    .iter()
                    .map(|t| parse_rational(t).map_or_else(|| err(*line, format!("invalid rational {t:?}")), Ok))
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push(row);
            }
            LinearChange::new(rows)
                .map(InputDocument::Matrix)
                .or_else(|e| err(last_line, e.to_string()))
        }
        other => err(
            header_line,
            format!("unknown header {other:?}; expected tensor, symm, mideal, pideal or matrix"),
        ),
    }
}

fn parse_poly_ideal(n: usize, body: &[(usize, Vec<&str>)], header_line: usize) -> Result<InputDocument, ParseError> {
    let mut generators = Vec::new();
    let mut current: Vec<(Vec<u32>, Rational)> = Vec::new();
    let mut block_start = header_line;
    let mut finish = |terms: &mut Vec<(Vec<u32>, Rational)>, line: usize| -> Result<(), ParseError> {
        if terms.is_empty() {
            return err(line, "empty generator");
        }
        let f = SparsePolynomial::from_terms(n, terms.drain(..)).expect("exponent lengths checked");
        generators.push(f);
        Ok(())
    };
    for (line, tokens) in body {
        if tokens.as_slice() == ["--"] {
            finish(&mut current, *line)?;
            block_start = *line;
            continue;
        }
        let joined = tokens.join(" ");
        let Some((coeff, exps)) = joined.split_once(':') else {
            return err(*line, "expected a term `<p>/<q> : e1 ... en`");
        };
        let Some(c) = parse_rational(coeff.trim()) else {
            return err(*line, format!("invalid coefficient {:?}", coeff.trim()));
        };
        if c.is_zero() {
            return err(*line, "zero coefficient");
        }
        let exps: Vec<&str> = exps.split_whitespace().collect();
        let e: Vec<u32> = parse_ints(*line, &exps, n, "exponents")?;
        if current.iter().any(|(f, _)| *f == e) {
            return err(*line, "duplicate term in generator");
        }
        current.push((e, c));
    }
    let end = body.last().map_or(block_start, |(l, _)| *l);
    finish(&mut current, end)?;
    PolyIdeal::new(n, generators)
        .map(InputDocument::PolyIdeal)
        .or_else(|e| err(end, e.to_string()))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Canonical text form; [`parse_input`] reads it back to an equal document.
pub fn serialize(doc: &InputDocument) -> String {
    let mut out = String::new();
    match doc {
        InputDocument::Tensor(v) => {
            out.push_str(&format!("tensor {} {}\n", v.order(), v.dim()));
            for t in v.tuples() {
                out.push_str(&join(t));
                out.push('\n');
            }
        }
        InputDocument::Symm(v) => {
            out.push_str(&format!("symm {} {}\n", v.degree(), v.vars()));
            for m in v.exponents() {
                out.push_str(&join(m));
                out.push('\n');
            }
        }
        InputDocument::MonomialIdeal(a) => {
            use crate::ideal::Ideal;
            out.push_str(&format!("mideal {}\n", a.vars()));
            for g in a.generators() {
                out.push_str(&join(g));
                out.push('\n');
            }
        }
        InputDocument::PolyIdeal(a) => {
            use crate::ideal::Ideal;
            out.push_str(&format!("pideal {}\n", a.vars()));
            for (k, g) in a.generators().iter().enumerate() {
                if k > 0 {
                    out.push_str("--\n");
                }
                for (e, c) in g.terms() {
                    out.push_str(&format!("{c} : {}\n", join(e)));
                }
            }
        }
        InputDocument::Matrix(m) => {
            out.push_str(&format!("matrix {}\n", m.dim()));
            for row in m.matrix() {
                out.push_str(&join(row));
                out.push('\n');
            }
        }
    }
    out
}
