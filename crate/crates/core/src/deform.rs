//! Expansion of relations along parameterized families of representations.
//!
//! A family `θ(T) = 1 ⊗ ρ_M + Σ T_i ⊗ θ_i + Σ T_iT_j ⊗ θ_{ij} + ⋯` assigns a
//! matrix-valued noncommutative power series to every arrow. Substituting it
//! into the relations and collapsing scalar coefficients yields candidate
//! local-model relations in the symbols `T_i`, whose minimal parts give the
//! tangent cone.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::extcalc::Representation;
use crate::field::FieldElem;
use crate::linalg::Matrix;
use crate::ncalg::{Flavor, NCPoly, PathWord, Presentation};
use crate::quiver::Quiver;
use crate::rewrite::{gr_ideal, GrIdealReport};

/// A word in the symbols, as symbol indices; ordered by length, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolWord(pub Vec<usize>);

impl Ord for SymbolWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for SymbolWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl SymbolWord {
    pub fn empty() -> Self {
        SymbolWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn concat(&self, other: &SymbolWord) -> SymbolWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SymbolWord(v)
    }
}

/// `Σ_w w ⊗ C_w`: matrix coefficients indexed by symbol words of length `≤ K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSeries {
    rows: usize,
    cols: usize,
    symbols: usize,
    order: usize,
    coeffs: BTreeMap<SymbolWord, Matrix>,
}

impl TensorSeries {
    pub fn zero(rows: usize, cols: usize, symbols: usize, order: usize) -> Self {
        TensorSeries {
            rows,
            cols,
            symbols,
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// `1 ⊗ m`.
    pub fn constant(m: Matrix, symbols: usize, order: usize) -> Self {
        let mut s = Self::zero(m.rows(), m.cols(), symbols, order);
        s.add(SymbolWord::empty(), m);
        s
    }

    pub fn identity(n: usize, symbols: usize, order: usize) -> Self {
        Self::constant(Matrix::identity(n), symbols, order)
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn symbols(&self) -> usize {
        self.symbols
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &BTreeMap<SymbolWord, Matrix> {
        &self.coeffs
    }

    pub fn coeff(&self, w: &SymbolWord) -> Matrix {
        self.coeffs
            .get(w)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.rows, self.cols))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `w ⊗ m`; words longer than the order are dropped.
    pub fn add(&mut self, w: SymbolWord, m: Matrix) {
        assert_eq!(m.shape(), (self.rows, self.cols), "coefficient shape");
        assert!(w.0.iter().all(|&s| s < self.symbols), "unknown symbol");
        if w.len() > self.order || m.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&w) {
            Some(old) => &old + &m,
            None => m,
        };
        if !sum.is_zero() {
            self.coeffs.insert(w, sum);
        }
    }

    pub fn add_scaled(&mut self, c: &FieldElem, other: &TensorSeries) {
        for (w, m) in &other.coeffs {
            self.add(w.clone(), m.scale(c));
        }
    }

    /// The part of total degree `d`.
    pub fn degree_part(&self, d: usize) -> BTreeMap<SymbolWord, Matrix> {
        self.coeffs
            .iter()
            .filter(|(w, _)| w.len() == d)
            .map(|(w, m)| (w.clone(), m.clone()))
            .collect()
    }

    /// Least degree with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(SymbolWord::len).min()
    }

    /// `Σ c_w w` when every coefficient is `c_w · I`.
    pub fn scalar_collapse(&self) -> Option<BTreeMap<SymbolWord, FieldElem>> {
        self.coeffs
            .iter()
            .map(|(w, m)| m.as_scalar().map(|c| (w.clone(), c)))
            .collect()
    }

    /// The scalar series of one matrix entry.
    pub fn entry(&self, i: usize, j: usize) -> BTreeMap<SymbolWord, FieldElem> {
        self.coeffs
            .iter()
            .filter(|(_, m)| !m.get(i, j).is_zero())
            .map(|(w, m)| (w.clone(), m.get(i, j).clone()))
            .collect()
    }
}

/// Word-concatenation convolution `(w ⊗ A)(v ⊗ B) = wv ⊗ AB`, truncated at the order.
pub fn ts_multiply(u: &TensorSeries, v: &TensorSeries) -> Result<TensorSeries> {
    if u.cols != v.rows {
        return Err(Error::Shape(format!(
            "series of shape {}×{} times {}×{}",
            u.rows, u.cols, v.rows, v.cols
        )));
    }
    if u.symbols != v.symbols || u.order != v.order {
        return Err(Error::Inconsistent(
            "series use different symbols or truncation orders".into(),
        ));
    }
    let mut out = TensorSeries::zero(u.rows, v.cols, u.symbols, u.order);
    for (w1, a) in &u.coeffs {
        for (w2, b) in &v.coeffs {
            if w1.len() + w2.len() <= u.order {
                out.add(w1.concat(w2), a * b);
            }
        }
    }
    Ok(out)
}

/// Two-sided inverse through the truncation order: `Σ_k (−C₀⁻¹N)^k C₀⁻¹` for `s = C₀ + N`.
pub fn geometric_inverse(s: &TensorSeries) -> Result<TensorSeries> {
    if s.rows != s.cols {
        return Err(Error::Shape("only square series are invertible".into()));
    }
    let c0 = s.coeff(&SymbolWord::empty());
    let c0inv = c0
        .inverse()
        .ok_or_else(|| Error::Singular("constant term of the series".into()))?;
    let mut n = s.clone();
    n.coeffs.remove(&SymbolWord::empty());
    // x = −C₀⁻¹ N
    let mut x = TensorSeries::zero(s.rows, s.cols, s.symbols, s.order);
    for (w, m) in &n.coeffs {
        x.add(w.clone(), (&c0inv * m).scale(&FieldElem::from_int(-1)));
    }
    let mut power = TensorSeries::identity(s.rows, s.symbols, s.order);
    let mut sum = power.clone();
    for _ in 0..s.order {
        power = ts_multiply(&power, &x)?;
        if power.is_zero() {
            break;
        }
        sum.add_scaled(&FieldElem::one(), &power);
    }
    ts_multiply(&sum, &TensorSeries::constant(c0inv, s.symbols, s.order))
}

/// How the family's series were specified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyPattern {
    /// `θ(a) = (1 + T_i) ⊗ ρ_M(a)` with one symbol per non-inverse arrow.
    Unit,
    /// Explicit coefficients `(arrow, word) → matrix` of positive degree.
    Table(Vec<(String, Vec<String>, Matrix)>),
}

/// A family `θ` through a base representation, truncated at order `K`.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    base: Representation,
    symbols: Vec<String>,
    order: usize,
    series: Vec<TensorSeries>,
    /// Transversality and local covering cannot be checked symbolically.
    pub hypotheses_asserted: bool,
}

impl FamilySpec {
    /// Builds the family and derives series of inverse arrows.
    ///
    /// Symbols default to `T1, T2, …`; for the unit pattern there is one per
    /// non-inverse arrow, for tables the names used in the table are taken in
    /// order of first appearance unless given explicitly.
    pub fn new(
        base: Representation,
        pattern: FamilyPattern,
        order: usize,
        symbols: Option<Vec<String>>,
    ) -> Result<Self> {
        let p = base.presentation().clone();
        let q = p.quiver().clone();
        let direct: Vec<usize> = (0..q.num_arrows()).filter(|&a| !p.is_inverse_arrow(a)).collect();
        let symbols = match (&pattern, symbols) {
            (_, Some(s)) if !s.is_empty() => s,
            (FamilyPattern::Unit, _) => (1..=direct.len()).map(|i| format!("T{i}")).collect(),
            (FamilyPattern::Table(entries), _) => {
                let mut seen: Vec<String> = Vec::new();
                for (_, w, _) in entries {
                    for s in w {
                        if !seen.contains(s) {
                            seen.push(s.clone());
                        }
                    }
                }
                seen
            }
        };
        for (i, s) in symbols.iter().enumerate() {
            crate::quiver::check_identifier(s)?;
            if symbols[..i].contains(s) {
                return Err(Error::DuplicateId(s.clone()));
            }
        }
        let k = symbols.len();
        let mut series: Vec<Option<TensorSeries>> = (0..q.num_arrows())
            .map(|a| {
                if p.is_inverse_arrow(a) {
                    None
                } else {
                    Some(TensorSeries::constant(base.matrix(a).clone(), k, order))
                }
            })
            .collect();
        match &pattern {
            FamilyPattern::Unit => {
                if k != direct.len() {
                    return Err(Error::Inconsistent(format!(
                        "unit pattern needs {} symbols, got {k}",
                        direct.len()
                    )));
                }
                for (i, &a) in direct.iter().enumerate() {
                    series[a]
                        .as_mut()
                        .unwrap()
                        .add(SymbolWord(vec![i]), base.matrix(a).clone());
                }
            }
            FamilyPattern::Table(entries) => {
                for (name, w, m) in entries {
                    let a = q.require_arrow(name)?;
                    if p.is_inverse_arrow(a) {
                        return Err(Error::Inconsistent(format!(
                            "series of `{name}` is derived from its partner"
                        )));
                    }
                    let idx = w
                        .iter()
                        .map(|s| {
                            symbols
                                .iter()
                                .position(|t| t == s)
                                .ok_or_else(|| Error::UnknownArrow(s.clone()))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    if idx.is_empty() {
                        return Err(Error::Inconsistent(
                            "the constant term is the base representation".into(),
                        ));
                    }
                    let s = series[a].as_mut().unwrap();
                    if m.shape() != s.shape() {
                        return Err(Error::Shape(format!(
                            "coefficient of `{name}` has shape {}×{}",
                            m.rows(),
                            m.cols()
                        )));
                    }
                    s.add(SymbolWord(idx), m.clone());
                }
            }
        }
        for &(g, gi) in p.inverses() {
            series[gi] = Some(geometric_inverse(series[g].as_ref().unwrap())?);
        }
        let series: Vec<TensorSeries> = series.into_iter().map(Option::unwrap).collect();
        for (a, s) in series.iter().enumerate() {
            if &s.coeff(&SymbolWord::empty()) != base.matrix(a) {
                return Err(Error::Inconsistent(format!(
                    "θ(0) differs from the base point at `{}`",
                    q.arrow(a).name
                )));
            }
        }
        Ok(FamilySpec {
            base,
            symbols,
            order,
            series,
            hypotheses_asserted: false,
        })
    }

    pub fn base(&self) -> &Representation {
        &self.base
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        self.base.presentation()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn series(&self, a: usize) -> &TensorSeries {
        &self.series[a]
    }

    /// One-vertex quiver with a loop per symbol.
    pub fn symbol_quiver(&self) -> Result<Quiver> {
        let mut q = Quiver::new();
        q.add_vertex("v")?;
        for s in &self.symbols {
            q.add_arrow(s, "v", "v")?;
        }
        Ok(q)
    }

    /// First-order transversality: the `θ_i` are independent modulo the
    /// tangent space `{a ↦ ξ_{h(a)} ρ(a) − ρ(a) ξ_{t(a)}}` of the orbit.
    pub fn first_order_transversal(&self) -> bool {
        let p = self.presentation();
        let q = p.quiver();
        let base = &self.base;
        let direct: Vec<usize> = (0..q.num_arrows()).filter(|&a| !p.is_inverse_arrow(a)).collect();
        let flat = |blocks: &dyn Fn(usize) -> Matrix| -> Vec<FieldElem> {
            direct
                .iter()
                .flat_map(|&a| blocks(a).entries().to_vec())
                .collect()
        };
        let mut orbit_rows = Vec::new();
        for v in 0..q.num_vertices() {
            let n = base.dim(v);
            for i in 0..n {
                for j in 0..n {
                    let row = flat(&|a| {
                        let arr = q.arrow(a);
                        let mut m = Matrix::zeros(base.dim(arr.head), base.dim(arr.tail));
                        let rho = base.matrix(a);
                        // ξ = E_ij at vertex v
                        if arr.head == v {
                            for c in 0..rho.cols() {
                                let x = m.get(i, c) + rho.get(j, c);
                                m.set(i, c, x);
                            }
                        }
                        if arr.tail == v {
                            for r in 0..rho.rows() {
                                let x = m.get(r, j) - rho.get(r, i);
                                m.set(r, j, x);
                            }
                        }
                        m
                    });
                    orbit_rows.push(row);
                }
            }
        }
        let theta_rows: Vec<Vec<FieldElem>> = (0..self.symbols.len())
            .map(|s| flat(&|a| self.series[a].coeff(&SymbolWord(vec![s]))))
            .collect();
        let width = theta_rows.first().map_or(0, Vec::len);
        if width == 0 {
            return theta_rows.is_empty();
        }
        let rank = |rows: &[Vec<FieldElem>]| {
            if rows.is_empty() {
                0
            } else {
                Matrix::from_rows(rows.to_vec()).map_or(0, |m| m.rank())
            }
        };
        let r_orbit = rank(&orbit_rows);
        let mut all = orbit_rows;
        all.extend(theta_rows);
        rank(&all) == r_orbit + self.symbols.len()
    }
}

/// `r(θ(T))`, evaluated word by word and truncated at the family order.
pub fn expand_relation(fs: &FamilySpec, r: &NCPoly) -> Result<TensorSeries> {
    let p = fs.presentation();
    if !crate::ncalg::same_quiver(r.quiver(), p.quiver()) {
        return Err(Error::QuiverMismatch);
    }
    let (h, t) = r
        .endpoints()
        .ok_or_else(|| Error::NotVertexDiagonal(format!("`{r}` has no common endpoints")))?;
    let (k, order) = (fs.symbols.len(), fs.order);
    let mut out = TensorSeries::zero(fs.base.dim(h), fs.base.dim(t), k, order);
    for (w, c) in r.terms() {
        out.add_scaled(c, &word_series(fs, w)?);
    }
    Ok(out)
}

fn word_series(fs: &FamilySpec, w: &PathWord) -> Result<TensorSeries> {
    let mut acc = TensorSeries::identity(fs.base.dim(w.head()), fs.symbols.len(), fs.order);
    for &a in w.arrows() {
        acc = ts_multiply(&acc, &fs.series[a])?;
    }
    Ok(acc)
}

/// A relation of the candidate local model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalRelation {
    pub label: String,
    pub poly: NCPoly,
    /// Whether every coefficient collapsed to a multiple of the identity.
    pub scalar: bool,
}

/// Candidate local model `ℂ⟨⟨T⟩⟩/⟨r_κ⟩` truncated at the family order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalModel {
    pub quiver: Arc<Quiver>,
    pub relations: Vec<LocalRelation>,
    pub order: usize,
}

impl LocalModel {
    pub fn presentation(&self) -> Result<Presentation> {
        Presentation::new(
            self.quiver.clone(),
            self.relations
                .iter()
                .map(|r| (r.label.clone(), r.poly.clone()))
                .collect(),
            Vec::new(),
            Flavor::Complete,
        )
    }
}

fn to_poly(q: &Arc<Quiver>, terms: BTreeMap<SymbolWord, FieldElem>) -> Result<NCPoly> {
    let mut p = NCPoly::zero(q);
    for (w, c) in terms {
        let word = if w.is_empty() {
            PathWord::vertex(0)
        } else {
            PathWord::from_arrows(q, w.0)?
        };
        p.add_term(word, c);
    }
    Ok(p)
}

/// Scalar-collapsed expansions of every non-unit relation, or their entries when
/// a coefficient is not a multiple of the identity. Zero expansions are dropped.
pub fn local_model_relations(fs: &FamilySpec) -> Result<LocalModel> {
    let q = Arc::new(fs.symbol_quiver()?);
    let mut relations = Vec::new();
    for r in fs.presentation().relations().iter().filter(|r| !r.unit) {
        let s = expand_relation(fs, &r.poly)?;
        if s.is_zero() {
            continue;
        }
        let collapsed = if s.rows == s.cols { s.scalar_collapse() } else { None };
        match collapsed {
            Some(terms) => relations.push(LocalRelation {
                label: r.label.clone(),
                poly: to_poly(&q, terms)?,
                scalar: true,
            }),
            None => {
                for i in 0..s.rows {
                    for j in 0..s.cols {
                        let e = s.entry(i, j);
                        if e.is_empty() {
                            continue;
                        }
                        relations.push(LocalRelation {
                            label: format!("{}[{},{}]", r.label, i + 1, j + 1),
                            poly: to_poly(&q, e)?,
                            scalar: false,
                        });
                    }
                }
            }
        }
    }
    Ok(LocalModel {
        quiver: q,
        relations,
        order: fs.order,
    })
}

/// `gr` of the local-model ideal at bound `K`, with its gradability verdict.
pub fn tangent_cone_relations(fs: &FamilySpec) -> Result<GrIdealReport> {
    let model = local_model_relations(fs)?;
    if model.relations.is_empty() {
        return Err(Error::NoMinimalPart(fs.order));
    }
    gr_ideal(&model.presentation()?, fs.order)
}

impl fmt::Display for TensorSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(w, m)| {
                let word = if w.is_empty() {
                    "1".to_string()
                } else {
                    w.0.iter().map(|s| format!("T{}", s + 1)).collect::<Vec<_>>().join("*")
                };
                format!("{word} ⊗ {m}")
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Everything the `deform` command reports.
#[derive(Clone, Debug)]
pub struct DeformReport {
    pub model: LocalModel,
    pub tangent_cone: Option<GrIdealReport>,
    pub tangent_cone_error: Option<String>,
    pub transversal: bool,
    pub hypotheses_asserted: bool,
}

/// Runs the whole pipeline: local model, first-order transversality, tangent cone.
pub fn deform(fs: &FamilySpec) -> Result<DeformReport> {
    let model = local_model_relations(fs)?;
    let (tangent_cone, tangent_cone_error) = match tangent_cone_relations(fs) {
        Ok(r) => (Some(r), None),
        Err(e) => (None, Some(e.to_string())),
    };
    Ok(DeformReport {
        model,
        tangent_cone,
        tangent_cone_error,
        transversal: fs.first_order_transversal(),
        hypotheses_asserted: fs.hypotheses_asserted,
    })
}

impl DeformReport {
    pub fn to_json(&self) -> Value {
        json!({
            "status": if self.hypotheses_asserted { "local model" } else { "candidate local model" },
            "symbols": self.model.quiver.arrows().iter().map(|a| a.name.clone()).collect::<Vec<_>>(),
            "order": self.model.order,
            "relations": self.model.relations.iter().map(|r| json!({
                "label": r.label,
                "poly": r.poly.to_string(),
                "scalar": r.scalar,
            })).collect::<Vec<_>>(),
            "first_order_transversal": self.transversal,
            "tangent_cone": self.tangent_cone.as_ref().map(GrIdealReport::to_json),
            "tangent_cone_error": self.tangent_cone_error,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{group_algebra_presentation, GroupKind};
    use crate::quiver::DimVector;

    fn w(v: &[usize]) -> SymbolWord {
        SymbolWord(v.to_vec())
    }

    fn heis_family(n: usize, k: usize) -> FamilySpec {
        let p = Arc::new(group_algebra_presentation(GroupKind::Heisenberg).unwrap());
        let r = Representation::heisenberg_rho(p, n, FieldElem::one(), FieldElem::one()).unwrap();
        FamilySpec::new(r, FamilyPattern::Unit, k, None).unwrap()
    }

    #[test]
    fn multiply_and_invert() {
        let one = Matrix::identity(1);
        let mut s = TensorSeries::constant(one.clone(), 1, 2);
        s.add(w(&[0]), one.clone());
        let inv = geometric_inverse(&s).unwrap();
        assert_eq!(inv.coeff(&w(&[0, 0])), one);
        assert_eq!(inv.coeff(&w(&[0])), one.scale(&FieldElem::from_int(-1)));
        assert_eq!(ts_multiply(&s, &inv).unwrap(), TensorSeries::identity(1, 1, 2));
        assert_eq!(ts_multiply(&inv, &s).unwrap(), TensorSeries::identity(1, 1, 2));
        let mut a = TensorSeries::zero(1, 1, 2, 3);
        a.add(w(&[0]), Matrix::from_ints(&[&[2]]));
        let mut b = TensorSeries::zero(1, 1, 2, 3);
        b.add(w(&[1]), Matrix::from_ints(&[&[3]]));
        assert_eq!(ts_multiply(&a, &b).unwrap().coeff(&w(&[0, 1])), Matrix::from_ints(&[&[6]]));
        let mut sing = TensorSeries::zero(1, 1, 1, 2);
        sing.add(w(&[0]), one);
        assert!(geometric_inverse(&sing).is_err());
    }

    #[test]
    fn heisenberg_expansion() {
        let fs = heis_family(2, 3);
        let p = fs.presentation().clone();
        let s = expand_relation(&fs, &p.relations()[0].poly).unwrap();
        assert_eq!(s.min_degree(), Some(3));
        let c = s.scalar_collapse().unwrap();
        let deg3: BTreeMap<_, _> = c.into_iter().filter(|(w, _)| w.len() == 3).collect();
        // ρ(XYX⁻¹Y⁻¹) = −I for n = 2
        let expect = BTreeMap::from([
            (w(&[1, 0, 0]), FieldElem::from_int(-1)),
            (w(&[0, 1, 0]), FieldElem::from_int(2)),
            (w(&[0, 0, 1]), FieldElem::from_int(-1)),
        ]);
        assert_eq!(deg3, expect);
        let model = local_model_relations(&fs).unwrap();
        let shown: Vec<String> = model.relations.iter().map(|r| r.poly.to_string()).collect();
        assert_eq!(shown, ["-T1^2*T2 + 2*T1*T2*T1 - T2*T1^2", "T1*T2^2 - 2*T2*T1*T2 + T2^2*T1"]);
        let cone = tangent_cone_relations(&fs).unwrap();
        assert!(cone.gradable);
        assert_eq!(cone.generators.len(), 2);
        assert!(fs.first_order_transversal());
    }

    #[test]
    fn surface_one_expansion() {
        let p = Arc::new(group_algebra_presentation(GroupKind::Surface(1)).unwrap());
        let given = [("X1", 1), ("Y1", 1)]
            .iter()
            .map(|(a, v)| (a.to_string(), Matrix::from_ints(&[&[*v]])))
            .collect();
        let base = Representation::new(p, DimVector(vec![1]), given).unwrap();
        let fs = FamilySpec::new(base.clone(), FamilyPattern::Unit, 2, None).unwrap();
        let model = local_model_relations(&fs).unwrap();
        assert_eq!(model.relations[0].poly.to_string(), "T1*T2 - T2*T1");
        let cone = tangent_cone_relations(&fs).unwrap();
        assert_eq!(cone.generators[0].to_string(), "T1*T2 - T2*T1");
        let constant = FamilySpec::new(base, FamilyPattern::Table(vec![]), 3, Some(vec!["T1".into()])).unwrap();
        assert!(local_model_relations(&constant).unwrap().relations.is_empty());
        assert!(matches!(tangent_cone_relations(&constant), Err(Error::NoMinimalPart(3))));
    }

    #[test]
    fn truncation_is_stable() {
        let small = heis_family(2, 3);
        let big = heis_family(2, 4);
        let r = small.presentation().relations()[1].poly.clone();
        let a = expand_relation(&small, &r).unwrap();
        let b = expand_relation(&big, &r).unwrap();
        for d in 0..=3 {
            assert_eq!(a.degree_part(d), b.degree_part(d));
        }
    }
}
