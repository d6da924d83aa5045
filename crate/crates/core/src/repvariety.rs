//! Coordinate-ring data of representation schemes: the entry functions
//! `f_p^{ij}`, the ideal `𝔦_α`, Jacobian ranks at a point, and orbit and
//! stabilizer dimension bookkeeping.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::extcalc::{check_representation, hom_dim, Representation};
use crate::field::FieldElem;
use crate::linalg::Matrix;
use crate::ncalg::{PathWord, Presentation};
use crate::quiver::{gl_dim, rep_space_dim, DimVector, Quiver};

/// The coordinate `f_a^{ij}` (0-based `i`, `j` internally).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub arrow: usize,
    pub row: usize,
    pub col: usize,
}

/// Exponent vector of a commutative monomial.
pub type Monomial = BTreeMap<Var, u32>;

/// A commutative polynomial in the entry coordinates of one quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommPoly {
    quiver: Arc<Quiver>,
    terms: BTreeMap<Monomial, FieldElem>,
}

/// External variable name `f_ARROW_i_j` (1-based); `'` and `^-1` are spelled out.
pub fn var_name(q: &Quiver, v: Var) -> String {
    let name = q.arrow(v.arrow).name.replace("^-1", "inv").replace('\'', "star");
    format!("f_{}_{}_{}", name, v.row + 1, v.col + 1)
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut m = a.clone();
    for (v, e) in b {
        *m.entry(*v).or_insert(0) += e;
    }
    m
}

impl CommPoly {
    pub fn zero(q: &Arc<Quiver>) -> Self {
        CommPoly {
            quiver: q.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(q: &Arc<Quiver>, c: FieldElem) -> Self {
        let mut p = Self::zero(q);
        p.add_term(Monomial::new(), c);
        p
    }

    pub fn var(q: &Arc<Quiver>, v: Var) -> Self {
        let mut p = Self::zero(q);
        p.add_term(BTreeMap::from([(v, 1)]), FieldElem::one());
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, FieldElem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(FieldElem::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, c: &FieldElem, other: &CommPoly) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), c * x);
        }
    }

    pub fn mul(&self, other: &CommPoly) -> CommPoly {
        let mut out = CommPoly::zero(&self.quiver);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(mono_mul(m1, m2), c1 * c2);
            }
        }
        out
    }

    /// Value at the point given by the representation's matrices.
    pub fn eval(&self, r: &Representation) -> FieldElem {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.iter().fold(c.clone(), |acc, (v, e)| {
                    let x = r.matrix(v.arrow).get(v.row, v.col);
                    (0..*e).fold(acc, |a, _| a * x)
                })
            })
            .sum()
    }

    /// `∂f/∂v` evaluated at the representation.
    pub fn partial_at(&self, v: Var, r: &Representation) -> FieldElem {
        let mut total = FieldElem::zero();
        for (m, c) in &self.terms {
            let Some(&e) = m.get(&v) else { continue };
            let mut term = c * &FieldElem::from_int(e as i64);
            for (w, k) in m {
                let k = if *w == v { k - 1 } else { *k };
                let x = r.matrix(w.arrow).get(w.row, w.col);
                for _ in 0..k {
                    term *= x;
                }
            }
            total += term;
        }
        total
    }

    pub fn variables(&self) -> impl Iterator<Item = Var> + '_ {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.keys().copied()).collect();
        vs.sort();
        vs.dedup();
        vs.into_iter()
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let factors: Vec<String> = m
                .iter()
                .map(|(v, e)| {
                    let n = var_name(&self.quiver, *v);
                    if *e == 1 {
                        n
                    } else {
                        format!("{n}^{e}")
                    }
                })
                .collect();
            let (neg, abs) = if c.is_negative_rational() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let coeff = if abs.is_atomic() {
                abs.to_string()
            } else {
                format!("({abs})")
            };
            if factors.is_empty() {
                f.write_str(&coeff)?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{coeff}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// The generic matrix of an arrow, with entries the coordinate functions.
fn generic(q: &Arc<Quiver>, alpha: &DimVector, a: usize) -> Vec<Vec<CommPoly>> {
    let arr = q.arrow(a);
    let (r, c) = (alpha.get(arr.head) as usize, alpha.get(arr.tail) as usize);
    (0..r)
        .map(|i| {
            (0..c)
                .map(|j| CommPoly::var(q, Var { arrow: a, row: i, col: j }))
                .collect()
        })
        .collect()
}

fn identity(q: &Arc<Quiver>, n: usize) -> Vec<Vec<CommPoly>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        CommPoly::constant(q, FieldElem::one())
                    } else {
                        CommPoly::zero(q)
                    }
                })
                .collect()
        })
        .collect()
}

fn mat_mul(q: &Arc<Quiver>, a: &[Vec<CommPoly>], b: &[Vec<CommPoly>], inner: usize, cols: usize) -> Vec<Vec<CommPoly>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = CommPoly::zero(q);
                    for k in 0..inner {
                        acc.add_scaled(&FieldElem::one(), &row[k].mul(&b[k][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// The generic matrix of a path.
fn path_matrix(q: &Arc<Quiver>, alpha: &DimVector, w: &PathWord) -> Vec<Vec<CommPoly>> {
    let mut acc = identity(q, alpha.get(w.head()) as usize);
    let mut inner = alpha.get(w.head()) as usize;
    for &a in w.arrows() {
        let cols = alpha.get(q.arrow(a).tail) as usize;
        acc = mat_mul(q, &acc, &generic(q, alpha, a), inner, cols);
        inner = cols;
    }
    acc
}

/// `f_p^{ij} = Σ f_{a₁}^{i i₁} f_{a₂}^{i₁ i₂} ⋯ f_{a_k}^{i_{k−1} j}` with 1-based `i`, `j`.
pub fn path_function(q: &Arc<Quiver>, p: &PathWord, i: usize, j: usize, alpha: &DimVector) -> Result<CommPoly> {
    alpha.check_for(q)?;
    let (rows, cols) = (alpha.get(p.head()) as usize, alpha.get(p.tail()) as usize);
    if i == 0 || i > rows {
        return Err(Error::IndexOutOfRange { index: i, bound: rows });
    }
    if j == 0 || j > cols {
        return Err(Error::IndexOutOfRange { index: j, bound: cols });
    }
    Ok(path_matrix(q, alpha, p).swap_remove(i - 1).swap_remove(j - 1))
}

/// One generator of `𝔦_α`: entry `(i, j)` (1-based) of a relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepIdealGenerator {
    pub relation: String,
    pub i: usize,
    pub j: usize,
    pub poly: CommPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepIdeal {
    pub alpha: DimVector,
    pub generators: Vec<RepIdealGenerator>,
    quiver: Arc<Quiver>,
}

impl RepIdeal {
    /// All coordinates of `Rep_α Q`, in arrow then row then column order.
    pub fn variables(&self) -> Vec<Var> {
        let q = &self.quiver;
        let mut vs = Vec::new();
        for (a, arr) in q.arrows().iter().enumerate() {
            for row in 0..self.alpha.get(arr.head) as usize {
                for col in 0..self.alpha.get(arr.tail) as usize {
                    vs.push(Var { arrow: a, row, col });
                }
            }
        }
        vs
    }

    pub fn to_json(&self) -> Value {
        json!({
            "alpha": self.alpha.0,
            "variables": self.variables().into_iter().map(|v| var_name(&self.quiver, v)).collect::<Vec<_>>(),
            "generators": self.generators.iter().map(|g| json!({
                "relation": g.relation,
                "i": g.i,
                "j": g.j,
                "poly": g.poly.to_string(),
            })).collect::<Vec<_>>(),
        })
    }

    /// One polynomial per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for g in &self.generators {
            s.push_str(&g.poly.to_string());
            s.push('\n');
        }
        s
    }
}

/// Generators `f_r^{ij}` of `𝔦_α` for every relation (unit relations included) and entry.
pub fn rep_ideal(p: &Presentation, alpha: &DimVector) -> Result<RepIdeal> {
    let q = p.quiver();
    alpha.check_for(q)?;
    let mut generators = Vec::new();
    for r in p.relations() {
        let (h, t) = r.endpoints();
        let (rows, cols) = (alpha.get(h) as usize, alpha.get(t) as usize);
        let mut acc: Vec<Vec<CommPoly>> = vec![vec![CommPoly::zero(q); cols]; rows];
        for (w, c) in r.poly.terms() {
            let m = path_matrix(q, alpha, w);
            for (i, row) in m.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    acc[i][j].add_scaled(c, x);
                }
            }
        }
        for (i, row) in acc.into_iter().enumerate() {
            for (j, poly) in row.into_iter().enumerate() {
                generators.push(RepIdealGenerator {
                    relation: r.label.clone(),
                    i: i + 1,
                    j: j + 1,
                    poly,
                });
            }
        }
    }
    Ok(RepIdeal {
        alpha: alpha.clone(),
        generators,
        quiver: q.clone(),
    })
}

/// The Jacobian of the generators of `𝔦_α` at `M`.
pub fn jacobian(ideal: &RepIdeal, m: &Representation) -> Matrix {
    let vars = ideal.variables();
    let mut j = Matrix::zeros(ideal.generators.len(), vars.len());
    for (r, g) in ideal.generators.iter().enumerate() {
        for (c, v) in vars.iter().enumerate() {
            if g.poly.terms.keys().any(|mono| mono.contains_key(v)) {
                j.set(r, c, g.poly.partial_at(*v, m));
            }
        }
    }
    j
}

/// `dim T_M Rep_α A = dim Rep_α Q − rank J(M)`.
pub fn tangent_space_dim(p: &Presentation, m: &Representation) -> Result<usize> {
    if !crate::extcalc::same_presentation_ref(p, m.presentation()) {
        return Err(Error::PresentationMismatch);
    }
    let check = check_representation(m)?;
    if !check.ok {
        return Err(Error::NotRepresentation(format!(
            "relation `{}` does not vanish",
            check.failures[0].0
        )));
    }
    let ideal = rep_ideal(p, m.alpha())?;
    let n = rep_space_dim(p.quiver(), m.alpha())? as usize;
    Ok(n - jacobian(&ideal, m).rank())
}

/// `dim GL_α − dim End_A(M)`.
pub fn orbit_dim(m: &Representation) -> Result<usize> {
    Ok(gl_dim(m.alpha()) as usize - hom_dim(m, m)?)
}

/// `dim GL_α − dim_M Rep_α A + dim_M iss_α A`.
pub fn generic_stab_dim(gl_alpha: i64, rep_dim_at_m: i64, iss_dim_at_m: i64) -> i64 {
    gl_alpha - rep_dim_at_m + iss_dim_at_m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{Flavor, NCPoly};

    fn rep(p: &Arc<Presentation>, alpha: Vec<u64>, ms: &[(&str, &[&[i64]])]) -> Representation {
        let given = ms
            .iter()
            .map(|(a, m)| (a.to_string(), Matrix::from_ints(m)))
            .collect();
        Representation::new(p.clone(), DimVector(alpha), given).unwrap()
    }

    #[test]
    fn path_functions() {
        let q = Arc::new(Quiver::loops(&["a", "b"]));
        let alpha = DimVector(vec![2]);
        let w = PathWord::from_names(&q, &["a", "b"]).unwrap();
        let f = path_function(&q, &w, 1, 1, &alpha).unwrap();
        assert_eq!(f.to_string(), "f_a_1_1*f_b_1_1 + f_a_1_2*f_b_2_1");
        let e = path_function(&q, &PathWord::vertex(0), 1, 2, &alpha).unwrap();
        assert!(e.is_zero());
        assert!(path_function(&q, &w, 3, 1, &alpha).is_err());
        let q2 = Arc::new(Quiver::from_parts(&["1", "2"], &[("a", "1", "2")]).unwrap());
        let a = PathWord::from_names(&q2, &["a"]).unwrap();
        assert_eq!(
            path_function(&q2, &a, 1, 1, &DimVector(vec![1, 1])).unwrap().to_string(),
            "f_a_1_1"
        );
    }

    #[test]
    fn ideals() {
        let q = Arc::new(Quiver::loops(&["x"]));
        let p = Presentation::parse(&q, &["x^2"]).unwrap();
        let i = rep_ideal(&p, &DimVector(vec![1])).unwrap();
        assert_eq!(i.to_text(), "f_x_1_1^2\n");
        let q2 = Arc::new(Quiver::loops(&["X", "Y"]));
        let p2 = Presentation::parse(&q2, &["X*Y - Y*X"]).unwrap();
        let i2 = rep_ideal(&p2, &DimVector(vec![2])).unwrap();
        assert_eq!(i2.generators.len(), 4);
        assert_eq!(
            i2.generators[1].poly.to_string(),
            "f_X_1_1*f_Y_1_2 - f_X_1_2*f_Y_1_1 + f_X_1_2*f_Y_2_2 - f_X_2_2*f_Y_1_2"
        );
        let qd = Arc::new(Quiver::loops(&["x"]).double());
        let pp = crate::ncalg::preprojective_presentation(&qd).unwrap();
        let ipp = rep_ideal(&pp, &DimVector(vec![1])).unwrap();
        assert_eq!(ipp.generators.len(), 1);
        assert!(ipp.generators[0].poly.is_zero());
    }

    #[test]
    fn tangent_dims() {
        let q = Arc::new(Quiver::loops(&["X", "Y"]));
        let p = Arc::new(Presentation::parse(&q, &["X*Y - Y*X"]).unwrap());
        let m = rep(&p, vec![2], &[("X", &[&[1, 0], &[0, 2]]), ("Y", &[&[3, 0], &[0, 5]])]);
        assert_eq!(tangent_space_dim(&p, &m).unwrap(), 6);
        assert_eq!(orbit_dim(&m).unwrap(), 2);
        let q1 = Arc::new(Quiver::loops(&["x"]));
        let p1 = Arc::new(Presentation::parse(&q1, &["x^2"]).unwrap());
        let z = rep(&p1, vec![1], &[("x", &[&[0]])]);
        assert_eq!(tangent_space_dim(&p1, &z).unwrap(), 1);
        let bad = rep(&p1, vec![1], &[("x", &[&[1]])]);
        assert!(tangent_space_dim(&p1, &bad).is_err());
        let free = Arc::new(Presentation::from_relations(&q, Vec::<NCPoly>::new(), Flavor::Graded).unwrap());
        let fm = rep(&free, vec![2], &[("X", &[&[1, 2], &[3, 4]]), ("Y", &[&[0, 0], &[0, 0]])]);
        assert_eq!(tangent_space_dim(&free, &fm).unwrap(), 8);
        assert_eq!(generic_stab_dim(1, 3, 3), 1);
    }
}
