use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::quiver::Quiver;

use super::word::PathWord;

/// A finitely supported linear combination of paths over a fixed quiver.
#[derive(Clone, Debug)]
pub struct NCPoly {
    quiver: Arc<Quiver>,
    terms: BTreeMap<PathWord, FieldElem>,
}

pub(crate) fn same_quiver(a: &Arc<Quiver>, b: &Arc<Quiver>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for NCPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_quiver(&self.quiver, &other.quiver)
    }
}

impl Eq for NCPoly {}

impl NCPoly {
    pub fn zero(q: &Arc<Quiver>) -> Self {
        NCPoly {
            quiver: q.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The unit `Σ_v e_v`.
    pub fn one(q: &Arc<Quiver>) -> Self {
        let terms = (0..q.num_vertices())
            .map(|v| (PathWord::vertex(v), FieldElem::one()))
            .collect();
        NCPoly {
            quiver: q.clone(),
            terms,
        }
    }

    pub fn vertex(q: &Arc<Quiver>, v: usize) -> Self {
        Self::word(q, PathWord::vertex(v))
    }

    pub fn word(q: &Arc<Quiver>, w: PathWord) -> Self {
        Self::term(q, w, FieldElem::one())
    }

    pub fn term(q: &Arc<Quiver>, w: PathWord, c: FieldElem) -> Self {
        let mut p = Self::zero(q);
        p.add_term(w, c);
        p
    }

    pub fn arrow(q: &Arc<Quiver>, name: &str) -> Result<Self> {
        let a = q.require_arrow(name)?;
        Ok(Self::word(q, PathWord::arrow(q, a)))
    }

    pub fn from_terms(q: &Arc<Quiver>, terms: impl IntoIterator<Item = (PathWord, FieldElem)>) -> Self {
        let mut p = Self::zero(q);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Parses polynomial text such as `3*a*b - 1/2*e_v + z^2` over ℚ.
    pub fn parse(q: &Arc<Quiver>, src: &str) -> Result<Self> {
        crate::dsl::parse_poly(q, src, Field::Rational)
    }

    /// Parses polynomial text whose coefficients may involve `zeta`.
    pub fn parse_in(q: &Arc<Quiver>, src: &str, field: Field) -> Result<Self> {
        crate::dsl::parse_poly(q, src, field)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn terms(&self) -> &BTreeMap<PathWord, FieldElem> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<PathWord, FieldElem> {
        self.terms
    }

    pub fn coeff(&self, w: &PathWord) -> FieldElem {
        self.terms.get(w).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: PathWord, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other` (same quiver assumed).
    pub fn add_scaled(&mut self, c: &FieldElem, other: &NCPoly) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), c * x);
        }
    }

    pub fn scale(&self, c: &FieldElem) -> NCPoly {
        if c.is_zero() {
            return Self::zero(&self.quiver);
        }
        NCPoly {
            quiver: self.quiver.clone(),
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    fn check_quiver(&self, other: &NCPoly) -> Result<()> {
        if same_quiver(&self.quiver, &other.quiver) {
            Ok(())
        } else {
            Err(Error::QuiverMismatch)
        }
    }

    pub fn checked_add(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check_quiver(other)?;
        let mut out = self.clone();
        out.add_scaled(&FieldElem::one(), other);
        Ok(out)
    }

    /// Bilinear extension of path concatenation; incomposable products vanish.
    pub fn multiply(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check_quiver(other)?;
        let mut out = Self::zero(&self.quiver);
        for (u, x) in &self.terms {
            for (v, y) in &other.terms {
                if let Some(w) = u.concat(v) {
                    out.add_term(w, x * y);
                }
            }
        }
        Ok(out)
    }

    /// `u · self · v` for words `u`, `v`.
    pub fn sandwich(&self, u: &PathWord, v: &PathWord) -> NCPoly {
        let mut out = Self::zero(&self.quiver);
        for (w, c) in &self.terms {
            if let Some(x) = u.concat(w).and_then(|uw| uw.concat(v)) {
                out.add_term(x, c.clone());
            }
        }
        out
    }

    /// Length of the longest word (the graded degree); `None` for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(PathWord::len).max()
    }

    /// Length of the shortest word (the adic order); `None` for zero.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(PathWord::len).min()
    }

    pub fn homogeneous_part(&self, d: usize) -> NCPoly {
        NCPoly {
            quiver: self.quiver.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of least degree.
    pub fn min_part(&self) -> Result<NCPoly> {
        let d = self.min_degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_part(d))
    }

    /// The homogeneous component of greatest degree.
    pub fn max_part(&self) -> Result<NCPoly> {
        let d = self.max_degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_part(d))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// Drops all words longer than `d`.
    pub fn truncate(&self, d: usize) -> NCPoly {
        NCPoly {
            quiver: self.quiver.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() <= d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Leading (greatest) word and its coefficient.
    pub fn leading(&self) -> Option<(&PathWord, &FieldElem)> {
        self.terms.last_key_value()
    }

    /// The common `(head, tail)` of all words, if there is one.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let ends = (first.head(), first.tail());
        it.all(|w| (w.head(), w.tail()) == ends).then_some(ends)
    }

    /// Splits into the nonzero pieces `e_h · self · e_t`, ordered by `(h, t)`.
    pub fn split_by_endpoints(&self) -> Vec<((usize, usize), NCPoly)> {
        let mut parts: BTreeMap<(usize, usize), NCPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            parts
                .entry((w.head(), w.tail()))
                .or_insert_with(|| Self::zero(&self.quiver))
                .add_term(w.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    /// `p b⁻¹`: keeps words ending in `b`, with that arrow removed.
    pub fn right_strip(&self, b: usize) -> NCPoly {
        let q = &self.quiver;
        let mut out = Self::zero(q);
        for (w, c) in &self.terms {
            if w.arrows().last() == Some(&b) {
                out.add_term(w.subword(q, 0, w.len() - 1), c.clone());
            }
        }
        out
    }

    /// `b⁻¹ p`: keeps words starting with `b`, with that arrow removed.
    pub fn left_strip(&self, b: usize) -> NCPoly {
        let q = &self.quiver;
        let mut out = Self::zero(q);
        for (w, c) in &self.terms {
            if w.arrows().first() == Some(&b) {
                out.add_term(w.subword(q, 1, w.len()), c.clone());
            }
        }
        out
    }

    /// The smallest field containing every coefficient.
    pub fn field(&self) -> Field {
        self.terms
            .values()
            .find_map(FieldElem::order)
            .map_or(Field::Rational, Field::Cyclotomic)
    }

    /// Re-expresses the polynomial over another quiver using arrow and vertex names.
    pub fn transport(&self, target: &Arc<Quiver>) -> Result<NCPoly> {
        let q = &self.quiver;
        let mut out = Self::zero(target);
        for (w, c) in &self.terms {
            let tw = if w.is_vertex() {
                PathWord::vertex(target.require_vertex(&q.vertices()[w.head()])?)
            } else {
                let names: Vec<&str> = w.arrows().iter().map(|&a| q.arrow(a).name.as_str()).collect();
                PathWord::from_names(target, &names)?
            };
            out.add_term(tw, c.clone());
        }
        Ok(out)
    }
}

fn render_coeff(c: &FieldElem) -> (bool, String) {
    if c.is_rational() {
        let neg = c.is_negative_rational();
        let abs = if neg { -c } else { c.clone() };
        (neg, if abs.is_one() { String::new() } else { abs.to_string() })
    } else {
        (false, format!("({c})"))
    }
}

impl fmt::Display for NCPoly {
    /// Terms in increasing word order, e.g. `X*Y^2 - 2*Y*X*Y + Y^2*X`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (neg, coef) = render_coeff(c);
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if coef.is_empty() {
                write!(f, "{}", w.render(&self.quiver))?;
            } else {
                write!(f, "{}*{}", coef, w.render(&self.quiver))?;
            }
        }
        Ok(())
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        self.checked_add(rhs).expect("quiver mismatch")
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        self.checked_add(&-rhs).expect("quiver mismatch")
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.multiply(rhs).expect("quiver mismatch")
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&FieldElem::from_int(-1))
    }
}

impl Add for NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: NCPoly) -> NCPoly {
        &self + &rhs
    }
}

impl Sub for NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: NCPoly) -> NCPoly {
        &self - &rhs
    }
}

impl Mul for NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: NCPoly) -> NCPoly {
        &self * &rhs
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}
