use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::quiver::Quiver;

use super::poly::NCPoly;
use super::word::PathWord;

/// A linear combination of cycles up to rotation, keyed by the least rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Superpotential {
    quiver: Arc<Quiver>,
    classes: BTreeMap<PathWord, FieldElem>,
}

impl Superpotential {
    pub fn zero(q: &Arc<Quiver>) -> Self {
        Superpotential {
            quiver: q.clone(),
            classes: BTreeMap::new(),
        }
    }

    /// The class of a polynomial in `ℂQ/[ℂQ, ℂQ]`; every word must be a cycle of length ≥ 1.
    pub fn from_poly(p: &NCPoly) -> Result<Self> {
        let mut w = Self::zero(p.quiver());
        for (word, c) in p.terms() {
            w.add_cycle(word, c.clone())?;
        }
        Ok(w)
    }

    pub fn parse(q: &Arc<Quiver>, src: &str) -> Result<Self> {
        Self::from_poly(&NCPoly::parse(q, src)?)
    }

    pub fn add_cycle(&mut self, word: &PathWord, c: FieldElem) -> Result<()> {
        if !word.is_cycle() {
            return Err(Error::Inconsistent(format!(
                "`{}` is not a cycle of positive length",
                word.render(&self.quiver)
            )));
        }
        let key = word.canonical_rotation(&self.quiver);
        let e = self.classes.entry(key.clone()).or_insert_with(FieldElem::zero);
        *e += c;
        if e.is_zero() {
            self.classes.remove(&key);
        }
        Ok(())
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn classes(&self) -> &BTreeMap<PathWord, FieldElem> {
        &self.classes
    }

    pub fn is_zero(&self) -> bool {
        self.classes.is_empty()
    }

    /// Representatives with their coefficients as a polynomial.
    pub fn to_poly(&self) -> NCPoly {
        NCPoly::from_terms(
            &self.quiver,
            self.classes.iter().map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    /// `↻W`: each cycle replaced by the sum of all its rotations.
    pub fn cyclic_symmetrize(&self) -> NCPoly {
        let mut out = NCPoly::zero(&self.quiver);
        for (w, c) in &self.classes {
            for r in w.rotations(&self.quiver) {
                out.add_term(r, c.clone());
            }
        }
        out
    }

    /// `∂_a W = (↻W) a⁻¹`.
    pub fn cyclic_derivative(&self, a: usize) -> NCPoly {
        self.cyclic_symmetrize().right_strip(a)
    }

    /// `a⁻¹ (↻W)`, which agrees with [`Superpotential::cyclic_derivative`].
    pub fn left_cyclic_derivative(&self, a: usize) -> NCPoly {
        self.cyclic_symmetrize().left_strip(a)
    }

    pub fn homogeneous_part(&self, d: usize) -> Superpotential {
        Superpotential {
            quiver: self.quiver.clone(),
            classes: self
                .classes
                .iter()
                .filter(|(w, _)| w.len() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Superpotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// `↻W` as a free function.
pub fn cyclic_symmetrize(w: &Superpotential) -> NCPoly {
    w.cyclic_symmetrize()
}

/// `∂_a W` for the arrow named `a`.
pub fn cyclic_derivative(w: &Superpotential, a: &str) -> Result<NCPoly> {
    let idx = w.quiver.require_arrow(a)?;
    Ok(w.cyclic_derivative(idx))
}
