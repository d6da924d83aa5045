//! The session description language: lexer, parser, printer, and expression evaluation.
//!
//! A session declares quivers, algebras, representations, and families, and
//! lists commands to run:
//!
//! ```text
//! quiver Q { vertices: v; arrows: X: v -> v, Y: v -> v; }
//! algebra A over Q { relations: X*Y + Z^3; flavor: complete; }
//! rep R of A { dim: v=1; X = [[0]]; Y = [[0]]; field: q; }
//! grideal A degree=5;
//! ```

mod ast;
mod lexer;
mod parser;
mod printer;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{parse_rational, Field, FieldElem};
use crate::ncalg::{NCPoly, PathWord};
use crate::quiver::Quiver;

pub use ast::*;
pub use lexer::Pos;

/// A syntax error with its 1-based source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(pos: Pos, message: impl Into<String>) -> Self {
        ParseError {
            line: pos.line,
            col: pos.col,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parses a whole session file.
pub fn parse(src: &str) -> Result<SessionFile, ParseError> {
    parser::Parser::new(src)?.session()
}

/// Parses a single expression.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = parser::Parser::new(src)?;
    let e = p.expr()?;
    p.expect_eof()?;
    Ok(e)
}

/// Parses and evaluates polynomial text over the given quiver.
pub fn parse_poly(q: &Arc<Quiver>, src: &str, field: Field) -> Result<NCPoly> {
    let e = parse_expr(src)?;
    eval_poly(&e, q, field)
}

fn zeta(field: Field) -> Result<FieldElem> {
    match field {
        Field::Rational => Err(Error::Field(
            "`zeta` requires a cyclotomic field (cyclo:m)".into(),
        )),
        Field::Cyclotomic(m) => Ok(FieldElem::root_of_unity(m, 1)),
    }
}

fn literal(n: &str, d: Option<&str>) -> Result<FieldElem> {
    let text = match d {
        Some(d) => format!("{n}/{d}"),
        None => n.to_string(),
    };
    parse_rational(&text)
        .map(FieldElem::from_rational)
        .ok_or_else(|| Error::Field(format!("bad number `{text}`")))
}

/// Evaluates an expression to a polynomial; constants are multiples of the unit.
pub fn eval_poly(e: &Expr, q: &Arc<Quiver>, field: Field) -> Result<NCPoly> {
    let unit = || NCPoly::one(q);
    Ok(match e {
        Expr::Int(n) => unit().scale(&literal(n, None)?),
        Expr::Ratio(n, d) => unit().scale(&literal(n, Some(d))?),
        Expr::Zeta => unit().scale(&zeta(field)?),
        Expr::Name(s) => {
            if let Some(v) = s.strip_prefix("e_").and_then(|v| q.vertex_index(v)) {
                NCPoly::vertex(q, v)
            } else {
                let a = q.require_arrow(s)?;
                NCPoly::word(q, PathWord::arrow(q, a))
            }
        }
        Expr::Inverse(s) => {
            let a = q.require_arrow(&crate::ncalg::inverse_name(s))?;
            NCPoly::word(q, PathWord::arrow(q, a))
        }
        Expr::Pow(b, k) => {
            let base = eval_poly(b, q, field)?;
            let mut acc = unit();
            for _ in 0..*k {
                acc = acc.multiply(&base)?;
            }
            acc
        }
        Expr::Product(fs) => {
            let mut acc = eval_poly(&fs[0], q, field)?;
            for x in &fs[1..] {
                acc = acc.multiply(&eval_poly(x, q, field)?)?;
            }
            acc
        }
        Expr::Sum(ts) => {
            let mut acc = NCPoly::zero(q);
            let (plus, minus) = (FieldElem::one(), FieldElem::from_int(-1));
            for (neg, t) in ts {
                let v = eval_poly(t, q, field)?;
                acc.add_scaled(if *neg { &minus } else { &plus }, &v);
            }
            acc
        }
        Expr::Group(x) => eval_poly(x, q, field)?,
    })
}

/// Evaluates a scalar expression (numbers, `zeta`, and arithmetic only).
pub fn eval_scalar(e: &Expr, field: Field) -> Result<FieldElem> {
    Ok(match e {
        Expr::Int(n) => literal(n, None)?,
        Expr::Ratio(n, d) => literal(n, Some(d))?,
        Expr::Zeta => zeta(field)?,
        Expr::Name(s) | Expr::Inverse(s) => {
            return Err(Error::Field(format!("`{s}` is not a scalar")))
        }
        Expr::Pow(b, k) => {
            let base = eval_scalar(b, field)?;
            (0..*k).fold(FieldElem::one(), |acc, _| acc * &base)
        }
        Expr::Product(fs) => {
            let mut acc = FieldElem::one();
            for x in fs {
                acc *= &eval_scalar(x, field)?;
            }
            acc
        }
        Expr::Sum(ts) => {
            let mut acc = FieldElem::zero();
            for (neg, t) in ts {
                let v = eval_scalar(t, field)?;
                acc = if *neg { acc - v } else { acc + v };
            }
            acc
        }
        Expr::Group(x) => eval_scalar(x, field)?,
    })
}

/// Evaluates a matrix literal.
pub fn eval_matrix(m: &MatrixExpr, field: Field) -> Result<crate::linalg::Matrix> {
    let rows = m
        .iter()
        .map(|r| r.iter().map(|e| eval_scalar(e, field)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    crate::linalg::Matrix::from_rows(rows)
}

/// Parses a scalar such as `3/2` or `1 - zeta^2`.
pub fn parse_scalar(src: &str, field: Field) -> Result<FieldElem> {
    eval_scalar(&parse_expr(src)?, field)
}
