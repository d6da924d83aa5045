use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::linalg::{Echelon, Matrix, SparseVec};

use super::representation::{same_presentation, Representation};

fn require_same(x: &Representation, y: &Representation) -> Result<()> {
    if same_presentation(x.presentation(), y.presentation()) {
        Ok(())
    } else {
        Err(Error::PresentationMismatch)
    }
}

/// Column offsets of the blocks `Hom(X_v, Y_v)` in the unknown vector.
fn vertex_offsets(x: &Representation, y: &Representation) -> (Vec<usize>, usize) {
    let n = x.presentation().quiver().num_vertices();
    let mut offs = Vec::with_capacity(n);
    let mut total = 0;
    for v in 0..n {
        offs.push(total);
        total += y.dim(v) * x.dim(v);
    }
    (offs, total)
}

/// Adds `c · A E B` to the equation block starting at `row0`, where `E`
/// ranges over the unknown block at `col0` with `ecols` columns.
#[allow(clippy::too_many_arguments)]
fn add_sandwich(
    m: &mut Matrix,
    row0: usize,
    out_cols: usize,
    col0: usize,
    ecols: usize,
    c: &FieldElem,
    a: &Matrix,
    b: &Matrix,
) {
    for p in 0..a.rows() {
        for k in 0..a.cols() {
            let apk = a.get(p, k);
            if apk.is_zero() {
                continue;
            }
            let ca = c * apk;
            for l in 0..b.rows() {
                for qq in 0..b.cols() {
                    let blq = b.get(l, qq);
                    if blq.is_zero() {
                        continue;
                    }
                    let (r, col) = (row0 + p * out_cols + qq, col0 + k * ecols + l);
                    let v = m.get(r, col) + &(&ca * blq);
                    m.set(r, col, v);
                }
            }
        }
    }
}

/// Linear conditions on `φ = (φ_v)` for `ρ_Y(a) φ_{t(a)} = φ_{h(a)} ρ_X(a)` over non-inverse arrows.
fn hom_system(x: &Representation, y: &Representation) -> Matrix {
    let p = x.presentation();
    let q = p.quiver();
    let (offs, unknowns) = vertex_offsets(x, y);
    let arrows: Vec<usize> = (0..q.num_arrows()).filter(|&a| !p.is_inverse_arrow(a)).collect();
    let rows: usize = arrows
        .iter()
        .map(|&a| y.dim(q.arrow(a).head) * x.dim(q.arrow(a).tail))
        .sum();
    let mut m = Matrix::zeros(rows, unknowns);
    let one = FieldElem::one();
    let minus = FieldElem::from_int(-1);
    let mut row0 = 0;
    for a in arrows {
        let (h, t) = (q.arrow(a).head, q.arrow(a).tail);
        let out_cols = x.dim(t);
        // ρ_Y(a) φ_t I − I φ_h ρ_X(a)
        add_sandwich(&mut m, row0, out_cols, offs[t], x.dim(t), &one, y.matrix(a), &Matrix::identity(x.dim(t)));
        add_sandwich(&mut m, row0, out_cols, offs[h], x.dim(h), &minus, &Matrix::identity(y.dim(h)), x.matrix(a));
        row0 += y.dim(h) * out_cols;
    }
    m
}

/// `dim Hom_A(X, Y)`.
pub fn hom_dim(x: &Representation, y: &Representation) -> Result<usize> {
    require_same(x, y)?;
    let m = hom_system(x, y);
    Ok(m.cols() - m.rank())
}

/// The pieces of an Ext¹ computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ext1Report {
    pub dim: usize,
    /// Dimension of the cocycles (derivations killing every relation).
    pub z1: usize,
    /// Dimension of the inner derivations `a ↦ ρ_Y(a)φ − φρ_X(a)`.
    pub b1: usize,
    pub hom: usize,
}

impl Ext1Report {
    pub fn to_json(&self) -> Value {
        json!({"dim": self.dim, "z1": self.z1, "b1": self.b1, "hom": self.hom})
    }
}

/// The cocycle system: unknown `δ(a) ∈ Hom(X_{t(a)}, Y_{h(a)})` for every
/// non-inverse arrow, one block of equations `δ(r) = 0` per non-unit relation.
fn cocycle_system(x: &Representation, y: &Representation) -> Matrix {
    let p = x.presentation();
    let q = p.quiver();
    let mut offs = vec![usize::MAX; q.num_arrows()];
    let mut unknowns = 0;
    for a in 0..q.num_arrows() {
        if !p.is_inverse_arrow(a) {
            offs[a] = unknowns;
            unknowns += y.dim(q.arrow(a).head) * x.dim(q.arrow(a).tail);
        }
    }
    let partner: BTreeMap<usize, usize> = p.inverses().iter().map(|&(g, gi)| (gi, g)).collect();
    let rels: Vec<_> = p.relations().iter().filter(|r| !r.unit).collect();
    let rows: usize = rels
        .iter()
        .map(|r| {
            let (h, t) = r.endpoints();
            y.dim(h) * x.dim(t)
        })
        .sum();
    let mut m = Matrix::zeros(rows, unknowns);
    let mut row0 = 0;
    for r in rels {
        let (h, t) = r.endpoints();
        let out_cols = x.dim(t);
        for (w, c) in r.poly.terms() {
            let arrows = w.arrows();
            let k = arrows.len();
            // prefixes ρ_Y(a_1⋯a_i) and suffixes ρ_X(a_i⋯a_k)
            let mut pre = vec![Matrix::identity(y.dim(h))];
            for &a in arrows {
                let next = pre.last().unwrap() * y.matrix(a);
                pre.push(next);
            }
            let mut suf = vec![Matrix::identity(x.dim(t)); k + 1];
            for i in (0..k).rev() {
                suf[i] = x.matrix(arrows[i]) * &suf[i + 1];
            }
            for (i, &a) in arrows.iter().enumerate() {
                match partner.get(&a) {
                    None => {
                        let ecols = x.dim(q.arrow(a).tail);
                        add_sandwich(&mut m, row0, out_cols, offs[a], ecols, c, &pre[i], &suf[i + 1]);
                    }
                    Some(&g) => {
                        // δ(g⁻¹) = −ρ_Y(g⁻¹) δ(g) ρ_X(g⁻¹)
                        let ecols = x.dim(q.arrow(g).tail);
                        add_sandwich(&mut m, row0, out_cols, offs[g], ecols, &-c, &pre[i + 1], &suf[i]);
                    }
                }
            }
        }
        row0 += y.dim(h) * out_cols;
    }
    m
}

/// `dim Ext¹_A(X, Y)` as cocycles modulo coboundaries.
pub fn ext1(x: &Representation, y: &Representation) -> Result<Ext1Report> {
    require_same(x, y)?;
    let z = cocycle_system(x, y);
    let z1 = z.cols() - z.rank();
    let hom = hom_dim(x, y)?;
    let n = x.presentation().quiver().num_vertices();
    let b1 = (0..n).map(|v| y.dim(v) * x.dim(v)).sum::<usize>() - hom;
    Ok(Ext1Report {
        dim: z1 - b1,
        z1,
        b1,
        hom,
    })
}

pub fn ext1_dim(x: &Representation, y: &Representation) -> Result<usize> {
    Ok(ext1(x, y)?.dim)
}

/// `ρ(a)` as a block of the `N × N` matrix on `⊕_v M_v`.
fn embedded(r: &Representation, a: usize) -> Matrix {
    let q = r.presentation().quiver();
    let mut offs = vec![0];
    for v in 0..q.num_vertices() {
        offs.push(offs[v] + r.dim(v));
    }
    let n = r.total_dim();
    let arr = q.arrow(a);
    let mut m = Matrix::zeros(n, n);
    m.set_block(offs[arr.head], offs[arr.tail], r.matrix(a));
    m
}

fn flatten(m: &Matrix) -> SparseVec<usize> {
    m.entries()
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Dimension of the image of the path algebra in `End(⊕_v M_v)`.
pub fn image_dim(r: &Representation) -> usize {
    let q = r.presentation().quiver();
    let n = r.total_dim();
    let gens: Vec<Matrix> = (0..q.num_arrows()).map(|a| embedded(r, a)).collect();
    let mut span: Echelon<usize> = Echelon::new();
    let mut queue = Vec::new();
    let mut off = 0;
    for v in 0..q.num_vertices() {
        let mut e = Matrix::zeros(n, n);
        for i in off..off + r.dim(v) {
            e.set(i, i, FieldElem::one());
        }
        off += r.dim(v);
        if span.insert(flatten(&e)).is_some() {
            queue.push(e);
        }
    }
    while let Some(b) = queue.pop() {
        for g in &gens {
            let c = g * &b;
            if span.insert(flatten(&c)).is_some() {
                queue.push(c);
            }
        }
    }
    span.dim()
}

/// Absolute simplicity: the path algebra maps onto `End(M)` (Burnside) and `End_A(M)` is scalar.
pub fn is_simple(r: &Representation) -> Result<bool> {
    let n = r.total_dim();
    if n == 0 {
        return Ok(false);
    }
    Ok(image_dim(r) == n * n && hom_dim(r, r)? == 1)
}

/// `S_1^{⊕ε_1} ⊕ ⋯ ⊕ S_k^{⊕ε_k}` with certified simple, pairwise distinct factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleModule {
    factors: Vec<(Representation, usize)>,
}

impl SemisimpleModule {
    pub fn new(factors: Vec<(Representation, usize)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::NotSimple("no factors".into()));
        }
        for (i, (s, mult)) in factors.iter().enumerate() {
            require_same(s, &factors[0].0)?;
            if *mult == 0 {
                return Err(Error::NotSimple(format!("factor {} has multiplicity 0", i + 1)));
            }
            if !is_simple(s)? {
                return Err(Error::NotSimple(format!("factor {} is not simple", i + 1)));
            }
            for (j, (t, _)) in factors.iter().enumerate().take(i) {
                if hom_dim(t, s)? != 0 {
                    return Err(Error::NotSimple(format!(
                        "factors {} and {} are isomorphic",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(SemisimpleModule { factors })
    }

    pub fn factors(&self) -> &[(Representation, usize)] {
        &self.factors
    }

    /// The module itself as one representation.
    pub fn module(&self) -> Result<Representation> {
        let mut acc: Option<Representation> = None;
        for (s, k) in &self.factors {
            let p = s.power(*k)?;
            acc = Some(match acc {
                None => p,
                Some(a) => a.direct_sum(&p)?,
            });
        }
        Ok(acc.unwrap())
    }
}
