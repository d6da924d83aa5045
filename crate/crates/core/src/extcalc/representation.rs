use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::linalg::Matrix;
use crate::ncalg::{NCPoly, PathWord, Presentation};
use crate::quiver::DimVector;

/// A finite-dimensional representation: one matrix `α_{h(a)} × α_{t(a)}` per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    presentation: Arc<Presentation>,
    alpha: DimVector,
    matrices: Vec<Matrix>,
    field: Field,
}

pub(crate) fn same_presentation(a: &Arc<Presentation>, b: &Arc<Presentation>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn field_of(m: &Matrix) -> Result<Field> {
    m.entries()
        .iter()
        .filter_map(FieldElem::order)
        .try_fold(Field::Rational, |f, k| f.join(Field::Cyclotomic(k)))
}

impl Representation {
    /// Builds a representation from matrices keyed by arrow name.
    ///
    /// Matrices of inverse arrows default to the inverses of their partners;
    /// other missing matrices are allowed only when they have a zero dimension.
    pub fn new(
        presentation: Arc<Presentation>,
        alpha: DimVector,
        given: BTreeMap<String, Matrix>,
    ) -> Result<Self> {
        let q = presentation.quiver().clone();
        alpha.check_for(&q)?;
        for name in given.keys() {
            q.require_arrow(name)?;
        }
        let mut matrices: Vec<Option<Matrix>> = vec![None; q.num_arrows()];
        for (a, arr) in q.arrows().iter().enumerate() {
            let shape = (alpha.get(arr.head) as usize, alpha.get(arr.tail) as usize);
            if let Some(m) = given.get(&arr.name) {
                if m.shape() != shape {
                    return Err(Error::Shape(format!(
                        "matrix of `{}` is {}×{}, expected {}×{}",
                        arr.name,
                        m.rows(),
                        m.cols(),
                        shape.0,
                        shape.1
                    )));
                }
                matrices[a] = Some(m.clone());
            } else if shape.0 * shape.1 == 0 {
                matrices[a] = Some(Matrix::zeros(shape.0, shape.1));
            }
        }
        for &(g, gi) in presentation.inverses() {
            if matrices[gi].is_none() {
                let m = matrices[g].as_ref().ok_or_else(|| {
                    Error::Shape(format!("missing matrix for arrow `{}`", q.arrow(g).name))
                })?;
                let inv = m
                    .inverse()
                    .ok_or_else(|| Error::Singular(format!("matrix of `{}`", q.arrow(g).name)))?;
                matrices[gi] = Some(inv);
            }
        }
        let matrices = matrices
            .into_iter()
            .enumerate()
            .map(|(a, m)| {
                m.ok_or_else(|| Error::Shape(format!("missing matrix for arrow `{}`", q.arrow(a).name)))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut field = Field::Rational;
        for m in &matrices {
            field = field.join(field_of(m)?)?;
        }
        Ok(Representation {
            presentation,
            alpha,
            matrices,
            field,
        })
    }

    /// Declares a field for the representation; entries must lie in it.
    pub fn with_field(mut self, field: Field) -> Result<Self> {
        if let Field::Cyclotomic(m) = self.field {
            if m > 2 && field.order() != m {
                return Err(Error::Field(format!(
                    "entries need cyclo:{m}, declared {field}"
                )));
            }
        }
        self.field = field;
        Ok(self)
    }

    /// Heisenberg representation `ρ_{a,b}` of size `n`: `X` is `a` times the
    /// cyclic shift, `Y = b·diag(ζ, ζ², …, ζⁿ)` with `ζ` a primitive `n`-th root of unity.
    pub fn heisenberg_rho(
        presentation: Arc<Presentation>,
        n: usize,
        a: FieldElem,
        b: FieldElem,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Inconsistent("ρ needs a positive size".into()));
        }
        if a.is_zero() || b.is_zero() {
            return Err(Error::Singular("ρ_{a,b} needs nonzero a and b".into()));
        }
        let q = presentation.quiver().clone();
        if q.num_vertices() != 1 {
            return Err(Error::Inconsistent("ρ_{a,b} needs a one-vertex quiver".into()));
        }
        let mut x = Matrix::zeros(n, n);
        let mut y = Matrix::zeros(n, n);
        for i in 0..n {
            x.set(i, (i + 1) % n, a.clone());
            y.set(i, i, &b * &FieldElem::root_of_unity(n as u32, (i + 1) as u32));
        }
        let mut given = BTreeMap::new();
        given.insert(q.arrow(q.require_arrow("X")?).name.clone(), x);
        given.insert(q.arrow(q.require_arrow("Y")?).name.clone(), y);
        Self::new(presentation, DimVector(vec![n as u64]), given)?.with_field(Field::Cyclotomic(n as u32))
    }

    /// Loads `{"alpha": {v: n} | [n, …], "matrices": {arrow: [[entry]]}, "field": "q" | "cyclo:m"}`.
    pub fn from_json(presentation: Arc<Presentation>, v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Inconsistent(format!("representation JSON: {m}"));
        let q = presentation.quiver().clone();
        let field = match v.get("field") {
            None => Field::Rational,
            Some(Value::String(s)) => Field::parse(s)?,
            Some(_) => return Err(bad("`field` must be a string")),
        };
        let alpha = match v.get("alpha") {
            Some(Value::Array(xs)) => DimVector(
                xs.iter()
                    .map(|x| x.as_u64().ok_or_else(|| bad("dimensions must be integers")))
                    .collect::<Result<_>>()?,
            ),
            Some(Value::Object(m)) => {
                let mut d = vec![0; q.num_vertices()];
                for (name, x) in m {
                    d[q.require_vertex(name)?] =
                        x.as_u64().ok_or_else(|| bad("dimensions must be integers"))?;
                }
                DimVector(d)
            }
            _ => return Err(bad("missing `alpha`")),
        };
        let mut given = BTreeMap::new();
        if let Some(ms) = v.get("matrices") {
            let ms = ms.as_object().ok_or_else(|| bad("`matrices` must be an object"))?;
            for (name, rows) in ms {
                let rows = rows.as_array().ok_or_else(|| bad("matrix must be a list of rows"))?;
                let mut parsed = Vec::new();
                for r in rows {
                    let r = r.as_array().ok_or_else(|| bad("matrix row must be a list"))?;
                    let mut row = Vec::new();
                    for x in r {
                        row.push(match x {
                            Value::String(s) => crate::dsl::parse_scalar(s, field)?,
                            Value::Number(n) => FieldElem::from_int(
                                n.as_i64().ok_or_else(|| bad("numbers must be integers or strings"))?,
                            ),
                            _ => return Err(bad("entries must be strings or integers")),
                        });
                    }
                    parsed.push(row);
                }
                let rows_n = parsed.len();
                let m = if rows_n == 0 {
                    let arr = q.arrow(q.require_arrow(name)?);
                    Matrix::zeros(0, alpha.get(arr.tail) as usize)
                } else {
                    Matrix::from_rows(parsed)?
                };
                given.insert(name.clone(), m);
            }
        }
        Self::new(presentation, alpha, given)?.with_field(field)
    }

    pub fn to_json(&self) -> Value {
        let q = self.presentation.quiver();
        let mut ms = serde_json::Map::new();
        for (a, m) in self.matrices.iter().enumerate() {
            let rows: Vec<Vec<String>> = m
                .to_rows()
                .into_iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect();
            ms.insert(q.arrow(a).name.clone(), json!(rows));
        }
        let alpha: serde_json::Map<String, Value> = q
            .vertices()
            .iter()
            .enumerate()
            .map(|(v, n)| (n.clone(), json!(self.alpha.get(v))))
            .collect();
        json!({"alpha": alpha, "matrices": ms, "field": self.field.to_string()})
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.presentation
    }

    pub fn alpha(&self) -> &DimVector {
        &self.alpha
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn matrix(&self, a: usize) -> &Matrix {
        &self.matrices[a]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn dim(&self, v: usize) -> usize {
        self.alpha.get(v) as usize
    }

    pub fn total_dim(&self) -> usize {
        self.alpha.total() as usize
    }

    /// `ρ(w)`; the idempotent `e_v` maps to the identity on `M_v`.
    pub fn path_matrix(&self, w: &PathWord) -> Matrix {
        let mut acc = Matrix::identity(self.dim(w.head()));
        for &a in w.arrows() {
            acc = &acc * &self.matrices[a];
        }
        acc
    }

    /// `ρ(f)` for a polynomial whose words share head and tail.
    pub fn eval(&self, f: &NCPoly) -> Result<Matrix> {
        let (h, t) = f.endpoints().ok_or_else(|| {
            Error::NotVertexDiagonal(format!("`{f}` has no common endpoints"))
        })?;
        let mut acc = Matrix::zeros(self.dim(h), self.dim(t));
        for (w, c) in f.terms() {
            acc = &acc + &self.path_matrix(w).scale(c);
        }
        Ok(acc)
    }

    /// Vertex-wise direct sum.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if !same_presentation(&self.presentation, &other.presentation) {
            return Err(Error::PresentationMismatch);
        }
        let alpha = DimVector(
            self.alpha
                .0
                .iter()
                .zip(&other.alpha.0)
                .map(|(a, b)| a + b)
                .collect(),
        );
        let field = self.field.join(other.field)?;
        Ok(Representation {
            presentation: self.presentation.clone(),
            alpha,
            matrices: self
                .matrices
                .iter()
                .zip(&other.matrices)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
            field,
        })
    }

    /// `M^{⊕k}`.
    pub fn power(&self, k: usize) -> Result<Representation> {
        if k == 0 {
            return Err(Error::Inconsistent("multiplicity must be positive".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.direct_sum(self)?;
        }
        Ok(acc)
    }
}

/// Outcome of [`check_representation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepCheck {
    pub ok: bool,
    /// Labels of violated relations with the offending value.
    pub failures: Vec<(String, Matrix)>,
}

impl RepCheck {
    pub fn to_json(&self) -> Value {
        json!({
            "ok": self.ok,
            "failures": self.failures.iter().map(|(l, m)| json!({"relation": l, "value": m.to_string()})).collect::<Vec<_>>(),
        })
    }
}

/// Evaluates every relation (unit relations included) at the representation.
pub fn check_representation(r: &Representation) -> Result<RepCheck> {
    let mut failures = Vec::new();
    for rel in r.presentation.relations() {
        let v = r.eval(&rel.poly)?;
        if !v.is_zero() {
            failures.push((rel.label.clone(), v));
        }
    }
    Ok(RepCheck {
        ok: failures.is_empty(),
        failures,
    })
}

pub(crate) fn same_presentation_ref(p: &Presentation, a: &Arc<Presentation>) -> bool {
    std::ptr::eq(p, &**a) || *p == **a
}
