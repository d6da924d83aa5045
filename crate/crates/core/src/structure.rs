//! Recognition of preprojective and superpotential structure in relation systems.
//!
//! Quadratic-leading relations `r_i = Σ g_{ab} ba + d_i` (one per vertex) are
//! preprojective exactly when vertex scalars `α_i ≠ 0` make `α_{t(a)} g_{ab}`
//! antisymmetric and nondegenerate; a symplectic base change within each
//! head/tail class then brings them to the standard form. Relations indexed by
//! arrows come from a superpotential when `∂_a W = r_a` is solvable.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::linalg::Matrix;
use crate::ncalg::{same_quiver, NCPoly, PathWord, Superpotential};
use crate::quiver::Quiver;

/// Quadratic coefficients `g_{ab}` (coefficient of `ba` in the relation at `t(a)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPairing {
    pub quiver: Arc<Quiver>,
    /// Nonzero entries only; `g_{ab} ≠ 0` forces `h(a) = t(b)` and `t(a) = h(b)`.
    pub g: BTreeMap<(usize, usize), FieldElem>,
    /// Vertex scalars; all ones until [`preprojective_form`] finds others.
    pub alpha: Vec<FieldElem>,
    /// Parts of degree ≥ 3, one per input relation.
    pub higher: Vec<NCPoly>,
}

impl QuadraticPairing {
    pub fn coeff(&self, a: usize, b: usize) -> FieldElem {
        self.g.get(&(a, b)).cloned().unwrap_or_else(FieldElem::zero)
    }

    /// `α_{t(a)} g_{ab}`.
    pub fn scaled(&self, a: usize, b: usize) -> FieldElem {
        &self.alpha[self.quiver.arrow(a).tail] * &self.coeff(a, b)
    }

    /// Whether `α_{t(a)} g_{ab} = −α_{t(b)} g_{ba}` for all arrows.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.quiver.num_arrows();
        (0..n).all(|a| (0..n).all(|b| self.scaled(a, b) == -self.scaled(b, a)))
    }
}

/// Reads `g` off the degree-2 parts of vertex-diagonal relations.
///
/// Zero relations are ignored; at most one relation may sit at each vertex.
pub fn extract_quadratic(q: &Arc<Quiver>, relations: &[NCPoly]) -> Result<QuadraticPairing> {
    let mut g = BTreeMap::new();
    let mut higher = Vec::new();
    let mut seen = BTreeSet::new();
    for r in relations {
        if !same_quiver(r.quiver(), q) {
            return Err(Error::QuiverMismatch);
        }
        if r.is_zero() {
            higher.push(r.clone());
            continue;
        }
        let (h, t) = r
            .endpoints()
            .filter(|(h, t)| h == t)
            .ok_or_else(|| Error::NotVertexDiagonal(r.to_string()))?;
        if !seen.insert(h) {
            return Err(Error::Inconsistent(format!(
                "two relations at vertex `{}`",
                q.vertices()[h]
            )));
        }
        let found = r.min_degree().unwrap_or(0);
        if found != 2 {
            return Err(Error::MinDegree { expected: 2, found });
        }
        debug_assert_eq!(h, t);
        let mut rest = NCPoly::zero(q);
        for (w, c) in r.terms() {
            if let [b, a] = *w.arrows() {
                g.insert((a, b), c.clone());
            } else {
                rest.add_term(w.clone(), c.clone());
            }
        }
        higher.push(rest);
    }
    Ok(QuadraticPairing {
        quiver: q.clone(),
        g,
        alpha: vec![FieldElem::one(); q.num_vertices()],
        higher,
    })
}

/// Why a system is not preprojective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PreprojectiveWitness {
    /// Antisymmetry forces `α_v = 0`.
    ForcedZeroScalar { vertex: String },
    /// The scaled pairing between arrows `i → j` and `j → i` is singular.
    Degenerate {
        vertices: (String, String),
        arrows: usize,
        rank: usize,
    },
}

impl PreprojectiveWitness {
    pub fn describe(&self) -> String {
        match self {
            PreprojectiveWitness::ForcedZeroScalar { vertex } => format!(
                "the antisymmetry conditions force the scalar at `{vertex}` to vanish"
            ),
            PreprojectiveWitness::Degenerate { vertices, arrows, rank } => format!(
                "pairing between `{}` and `{}` has rank {rank} on {arrows} arrows",
                vertices.0, vertices.1
            ),
        }
    }
}

/// The standard form reached by a symplectic base change.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreprojectiveForm {
    pub alpha: Vec<FieldElem>,
    /// New arrow `k` is `Σ c_j · old arrow j`; only arrows that change are listed.
    pub base_change: BTreeMap<usize, Vec<(usize, FieldElem)>>,
    /// `(a, a*)` with `α_{t(a*)} g'_{a* a} = 1` in the new basis.
    pub pairs: Vec<(usize, usize)>,
    pub pairing: QuadraticPairing,
}

impl PreprojectiveForm {
    pub fn is_identity(&self) -> bool {
        self.base_change.is_empty() && self.alpha.iter().all(FieldElem::is_one)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PreprojectiveVerdict {
    Yes(PreprojectiveForm),
    No(PreprojectiveWitness),
}

impl PreprojectiveVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, PreprojectiveVerdict::Yes(_))
    }

    pub fn to_json(&self) -> Value {
        match self {
            PreprojectiveVerdict::Yes(f) => {
                let q = &f.pairing.quiver;
                let name = |a: usize| q.arrow(a).name.clone();
                json!({
                    "preprojective": true,
                    "alpha": q.vertices().iter().zip(&f.alpha)
                        .map(|(v, x)| (v.clone(), json!(x.to_string())))
                        .collect::<serde_json::Map<_, _>>(),
                    "pairs": f.pairs.iter().map(|&(a, s)| json!([name(a), name(s)])).collect::<Vec<_>>(),
                    "base_change": f.base_change.iter().map(|(&a, comb)| {
                        let terms: Vec<String> = comb.iter().map(|(b, c)| format!("({c})*{}", name(*b))).collect();
                        (name(a), json!(terms.join(" + ")))
                    }).collect::<serde_json::Map<_, _>>(),
                    "identity": f.is_identity(),
                })
            }
            PreprojectiveVerdict::No(w) => json!({
                "preprojective": false,
                "witness": w.describe(),
            }),
        }
    }
}

/// `Σ_j c_j · e_j` over arrow indices.
type Combo = BTreeMap<usize, FieldElem>;

fn unit(a: usize) -> Combo {
    BTreeMap::from([(a, FieldElem::one())])
}

fn form(p: &QuadraticPairing, x: &Combo, y: &Combo) -> FieldElem {
    let mut s = FieldElem::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            let w = p.scaled(*a, *b);
            if !w.is_zero() {
                s += &(&(ca * cb) * &w);
            }
        }
    }
    s
}

fn axpy(y: &mut Combo, c: &FieldElem, x: &Combo) {
    for (k, v) in x {
        let e = y.entry(*k).or_insert_with(FieldElem::zero);
        *e += &(c * v);
        if e.is_zero() {
            y.remove(k);
        }
    }
}

/// Nonzero vertex scalars making the scaled pairing antisymmetric, preferring all ones.
fn find_scalars(p: &QuadraticPairing) -> std::result::Result<Vec<FieldElem>, PreprojectiveWitness> {
    let q = &p.quiver;
    let n = q.num_vertices();
    let mut rows = Vec::new();
    for (&(a, b), c) in &p.g {
        // α_{t(a)} g_{ab} + α_{t(b)} g_{ba} = 0
        let mut row = vec![FieldElem::zero(); n];
        row[q.arrow(a).tail] += c;
        row[q.arrow(b).tail] += &p.coeff(b, a);
        if row.iter().any(|x| !x.is_zero()) {
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Ok(vec![FieldElem::one(); n]);
    }
    let system = Matrix::from_rows(rows).expect("rows share a length");
    let ones = vec![FieldElem::one(); n];
    if system.apply(&ones).iter().all(FieldElem::is_zero) {
        return Ok(ones);
    }
    let basis = system.nullspace();
    for v in 0..n {
        if basis.iter().all(|b| b[v].is_zero()) {
            return Err(PreprojectiveWitness::ForcedZeroScalar {
                vertex: q.vertices()[v].clone(),
            });
        }
    }
    // each coordinate of Σ t^k b_k is a nonzero polynomial of degree < dim in t
    for t in 1..=(n * basis.len() + 1) as i64 {
        let mut x = vec![FieldElem::zero(); n];
        let mut pow = FieldElem::one();
        for b in &basis {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += &(&pow * bi);
            }
            pow = &pow * &FieldElem::from_int(t);
        }
        if x.iter().all(|c| !c.is_zero()) {
            return Ok(x);
        }
    }
    unreachable!("a generic combination has no zero coordinate")
}

/// Tries to pair a class directly when the pairing matrix is a signed permutation with entries ±1.
fn direct_pairs(p: &QuadraticPairing, side: &[usize], other: &[usize]) -> Option<Vec<(usize, usize)>> {
    let mut pairs = Vec::new();
    let mut used = BTreeSet::new();
    for &a in side {
        if used.contains(&a) {
            continue;
        }
        let hits: Vec<usize> = other.iter().copied().filter(|&b| !p.scaled(b, a).is_zero()).collect();
        let [b] = hits[..] else { return None };
        let w = p.scaled(b, a);
        if used.contains(&b) || used.contains(&a) {
            return None;
        }
        if w.is_one() {
            pairs.push((a, b));
        } else if (-&w).is_one() {
            pairs.push((b, a));
        } else {
            return None;
        }
        used.insert(a);
        used.insert(b);
    }
    Some(pairs)
}

/// Decides preprojective form of relations with quadratic leading parts.
pub fn preprojective_form(q: &Arc<Quiver>, relations: &[NCPoly]) -> Result<PreprojectiveVerdict> {
    let mut p = extract_quadratic(q, relations)?;
    match find_scalars(&p) {
        Ok(alpha) => p.alpha = alpha,
        Err(w) => return Ok(PreprojectiveVerdict::No(w)),
    }
    debug_assert!(p.is_antisymmetric());
    let n = q.num_vertices();
    let mut base_change = BTreeMap::new();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i..n {
            let forward: Vec<usize> = (0..q.num_arrows())
                .filter(|&a| q.arrow(a).tail == i && q.arrow(a).head == j)
                .collect();
            let backward: Vec<usize> = if i == j {
                Vec::new()
            } else {
                (0..q.num_arrows())
                    .filter(|&a| q.arrow(a).tail == j && q.arrow(a).head == i)
                    .collect()
            };
            let class: Vec<usize> = forward.iter().chain(&backward).copied().collect();
            if class.is_empty() {
                continue;
            }
            let rank = Matrix::from_rows(
                class
                    .iter()
                    .map(|&a| class.iter().map(|&b| p.scaled(a, b)).collect())
                    .collect(),
            )?
            .rank();
            if rank < class.len() {
                return Ok(PreprojectiveVerdict::No(PreprojectiveWitness::Degenerate {
                    vertices: (q.vertices()[i].clone(), q.vertices()[j].clone()),
                    arrows: class.len(),
                    rank,
                }));
            }
            let direct = if i == j {
                direct_pairs(&p, &forward, &forward)
            } else {
                direct_pairs(&p, &forward, &backward)
            };
            if let Some(d) = direct {
                let mut d = d;
                d.sort();
                pairs.extend(d);
                continue;
            }
            let (class_pairs, change) = if i == j {
                symplectic_loops(&p, &forward)
            } else {
                symplectic_cross(&p, &forward, &backward)?
            };
            pairs.extend(class_pairs);
            for (a, combo) in change {
                if combo != unit(a) {
                    base_change.insert(a, combo.into_iter().collect());
                }
            }
        }
    }
    pairs.sort();
    Ok(PreprojectiveVerdict::Yes(PreprojectiveForm {
        alpha: p.alpha.clone(),
        base_change,
        pairs,
        pairing: p,
    }))
}

/// Arrows `A: i → j` keep their basis; `B: j → i` is replaced by the dual basis `a*`.
#[allow(clippy::type_complexity)]
fn symplectic_cross(
    p: &QuadraticPairing,
    forward: &[usize],
    backward: &[usize],
) -> Result<(Vec<(usize, usize)>, Vec<(usize, Combo)>)> {
    // ω(b, a) for b ∈ B, a ∈ A; nondegeneracy makes it square and invertible
    let omega = Matrix::from_rows(
        backward
            .iter()
            .map(|&b| forward.iter().map(|&a| p.scaled(b, a)).collect())
            .collect(),
    )?;
    let inv = omega
        .inverse()
        .ok_or_else(|| Error::Singular("pairing block".into()))?;
    // a_k* = Σ_l (Ω⁻¹)_{k l} b_l, so that ω(a_k*, a_m) = δ_{km}
    let mut pairs = Vec::new();
    let mut change = Vec::new();
    for (k, &a) in forward.iter().enumerate() {
        let star = backward[k];
        let combo: Combo = backward
            .iter()
            .enumerate()
            .filter(|(l, _)| !inv.get(k, *l).is_zero())
            .map(|(l, &b)| (b, inv.get(k, l).clone()))
            .collect();
        pairs.push((a, star));
        change.push((star, combo));
    }
    Ok((pairs, change))
}

/// Symplectic Gram–Schmidt on the loops at one vertex.
fn symplectic_loops(p: &QuadraticPairing, loops: &[usize]) -> (Vec<(usize, usize)>, Vec<(usize, Combo)>) {
    let mut remaining: Vec<(usize, Combo)> = loops.iter().map(|&a| (a, unit(a))).collect();
    let mut pairs = Vec::new();
    let mut change = Vec::new();
    while let Some((ea, e)) = (!remaining.is_empty()).then(|| remaining.remove(0)) {
        let pos = remaining
            .iter()
            .position(|(_, f)| !form(p, f, &e).is_zero())
            .expect("nondegenerate pairing");
        let (fa, mut f) = remaining.remove(pos);
        let scale = form(p, &f, &e).inv().expect("nonzero");
        f = f.into_iter().map(|(k, v)| (k, &v * &scale)).collect();
        for (_, v) in remaining.iter_mut() {
            let (ve, vf) = (form(p, v, &e), form(p, v, &f));
            axpy(v, &-ve, &f);
            axpy(v, &vf, &e);
        }
        pairs.push((ea, fa));
        change.push((ea, e));
        change.push((fa, f));
    }
    (pairs, change)
}

/// Why relations do not come from a superpotential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperpotentialCertificate {
    pub degree: usize,
    /// `Σ y_k (coefficient of word_k in r_{a_k})` vanishes on every `∂W` but not on the input.
    pub combination: Vec<(String, String, FieldElem)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuperpotentialVerdict {
    Yes(Superpotential),
    No(SuperpotentialCertificate),
}

impl SuperpotentialVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, SuperpotentialVerdict::Yes(_))
    }

    pub fn to_json(&self) -> Value {
        match self {
            SuperpotentialVerdict::Yes(w) => json!({"superpotential": true, "W": w.to_string()}),
            SuperpotentialVerdict::No(c) => json!({
                "superpotential": false,
                "degree": c.degree,
                "certificate": c.combination.iter()
                    .map(|(a, w, y)| json!({"arrow": a, "word": w, "weight": y.to_string()}))
                    .collect::<Vec<_>>(),
            }),
        }
    }
}

/// Solves `∂_a W = r_a` for every arrow, one degree at a time.
///
/// `relations[a]` is the relation indexed by arrow `a`; it must lie in `e_{t(a)} ℂQ e_{h(a)}`.
pub fn superpotential_form(q: &Arc<Quiver>, relations: &[NCPoly]) -> Result<SuperpotentialVerdict> {
    if relations.len() != q.num_arrows() {
        return Err(Error::Shape(format!(
            "{} relations for {} arrows",
            relations.len(),
            q.num_arrows()
        )));
    }
    let mut degrees = BTreeSet::new();
    for (a, r) in relations.iter().enumerate() {
        if !same_quiver(r.quiver(), q) {
            return Err(Error::QuiverMismatch);
        }
        let arr = q.arrow(a);
        for w in r.terms().keys() {
            if w.head() != arr.tail || w.tail() != arr.head {
                return Err(Error::Shape(format!(
                    "`{}` in the relation of `{}` does not run from `{}` to `{}`",
                    w.render(q),
                    arr.name,
                    q.vertices()[arr.head],
                    q.vertices()[arr.tail]
                )));
            }
            degrees.insert(w.len());
        }
    }
    let mut total = Superpotential::zero(q);
    for d in degrees {
        let parts: Vec<NCPoly> = relations.iter().map(|r| r.homogeneous_part(d)).collect();
        match solve_degree(q, &parts, d)? {
            Ok(w) => {
                for (c, x) in w.classes() {
                    total.add_cycle(c, x.clone())?;
                }
            }
            Err(cert) => return Ok(SuperpotentialVerdict::No(cert)),
        }
    }
    Ok(SuperpotentialVerdict::Yes(total))
}

fn solve_degree(
    q: &Arc<Quiver>,
    parts: &[NCPoly],
    d: usize,
) -> Result<std::result::Result<Superpotential, SuperpotentialCertificate>> {
    // only classes containing some `w·a` with `w` in the support of `r_a` can occur
    let mut classes = BTreeSet::new();
    for (a, r) in parts.iter().enumerate() {
        for w in r.terms().keys() {
            let cycle = w
                .concat(&PathWord::arrow(q, a))
                .expect("endpoints checked");
            classes.insert(cycle.canonical_rotation(q));
        }
    }
    let classes: Vec<PathWord> = classes.into_iter().collect();
    let derivs: Vec<Vec<NCPoly>> = classes
        .iter()
        .map(|c| {
            let mut w = Superpotential::zero(q);
            w.add_cycle(c, FieldElem::one()).expect("cycle");
            (0..q.num_arrows()).map(|a| w.cyclic_derivative(a)).collect()
        })
        .collect();
    let mut eqs: BTreeSet<(usize, PathWord)> = BTreeSet::new();
    for (a, r) in parts.iter().enumerate() {
        eqs.extend(r.terms().keys().map(|w| (a, w.clone())));
    }
    for ds in &derivs {
        for (a, da) in ds.iter().enumerate() {
            eqs.extend(da.terms().keys().map(|w| (a, w.clone())));
        }
    }
    let eqs: Vec<(usize, PathWord)> = eqs.into_iter().collect();
    let mut m = Matrix::zeros(eqs.len(), classes.len());
    let mut rhs = Vec::with_capacity(eqs.len());
    for (row, (a, w)) in eqs.iter().enumerate() {
        for (col, ds) in derivs.iter().enumerate() {
            m.set(row, col, ds[*a].coeff(w));
        }
        rhs.push(parts[*a].coeff(w));
    }
    if let Some(x) = m.solve(&rhs) {
        let mut w = Superpotential::zero(q);
        for (c, xc) in classes.iter().zip(x) {
            w.add_cycle(c, xc)?;
        }
        return Ok(Ok(w));
    }
    let y = m
        .transpose()
        .nullspace()
        .into_iter()
        .find(|y| !y.iter().zip(&rhs).map(|(a, b)| a * b).sum::<FieldElem>().is_zero())
        .expect("an inconsistent system has a separating functional");
    let combination = eqs
        .iter()
        .zip(y)
        .filter(|(_, c)| !c.is_zero())
        .map(|((a, w), c)| (q.arrow(*a).name.clone(), w.render(q), c))
        .collect();
    Ok(Err(SuperpotentialCertificate { degree: d, combination }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::preprojective_relations;

    fn poly(q: &Arc<Quiver>, s: &str) -> NCPoly {
        NCPoly::parse(q, s).unwrap()
    }

    #[test]
    fn extract_examples() {
        let qd = Arc::new(Quiver::loops(&["x"]).double());
        let rels = preprojective_relations(&qd).unwrap();
        let p = extract_quadratic(&qd, &rels).unwrap();
        let (x, xs) = (0, 1);
        assert_eq!(p.coeff(xs, x), FieldElem::one());
        assert_eq!(p.coeff(x, xs), FieldElem::from_int(-1));
        let q = Arc::new(Quiver::loops(&["a", "b"]));
        let p2 = extract_quadratic(&q, &[poly(&q, "b*a - a*b + b^3")]).unwrap();
        assert_eq!(p2.coeff(0, 1), FieldElem::one());
        assert_eq!(p2.coeff(1, 0), FieldElem::from_int(-1));
        assert_eq!(p2.higher[0], poly(&q, "b^3"));
        let p3 = extract_quadratic(&q, &[poly(&q, "a^2")]).unwrap();
        assert_eq!(p3.coeff(0, 0), FieldElem::one());
        assert!(matches!(
            extract_quadratic(&q, &[poly(&q, "a^3")]),
            Err(Error::MinDegree { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn preprojective_examples() {
        let q = Arc::new(Quiver::from_parts(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "1", "3")]).unwrap());
        let qd = Arc::new(q.double());
        let v = preprojective_form(&qd, &preprojective_relations(&qd).unwrap()).unwrap();
        let PreprojectiveVerdict::Yes(f) = &v else { panic!("{v:?}") };
        assert!(f.is_identity());
        assert_eq!(f.pairs, qd.pairing().unwrap().to_vec());
        let one = Arc::new(Quiver::loops(&["a"]));
        let no = preprojective_form(&one, &[poly(&one, "a^2")]).unwrap();
        assert!(matches!(no, PreprojectiveVerdict::No(PreprojectiveWitness::ForcedZeroScalar { .. })));
    }

    #[test]
    fn nontrivial_scalars_and_base_change() {
        let q = Arc::new(Quiver::from_parts(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap());
        // a b at vertex 2, b a at vertex 1, scaled differently
        let rels = [poly(&q, "3*b*a"), poly(&q, "-a*b")];
        let PreprojectiveVerdict::Yes(f) = preprojective_form(&q, &rels).unwrap() else { panic!() };
        assert!(f.pairing.is_antisymmetric());
        assert!(!f.alpha.iter().all(FieldElem::is_one));
        let loops = Arc::new(Quiver::loops(&["x", "y", "z", "w"]));
        let r = poly(&loops, "2*x*y - 2*y*x + x*z - z*x + w*z - z*w");
        let PreprojectiveVerdict::Yes(f) = preprojective_form(&loops, &[r]).unwrap() else { panic!() };
        assert_eq!(f.pairs.len(), 2);
        for &(a, s) in &f.pairs {
            let ca = f.base_change.get(&a).cloned().unwrap_or_else(|| vec![(a, FieldElem::one())]);
            let cs = f.base_change.get(&s).cloned().unwrap_or_else(|| vec![(s, FieldElem::one())]);
            let (ca, cs): (Combo, Combo) = (ca.into_iter().collect(), cs.into_iter().collect());
            assert!(form(&f.pairing, &cs, &ca).is_one());
        }
        let deg = preprojective_form(&loops, &[poly(&loops, "x*y - y*x")]).unwrap();
        assert!(matches!(deg, PreprojectiveVerdict::No(PreprojectiveWitness::Degenerate { rank: 2, .. })));
    }

    #[test]
    fn superpotential_examples() {
        let q = Arc::new(Quiver::loops(&["X", "Y"]));
        let rels = [poly(&q, "X*Y^2 + Y^2*X - 2*Y*X*Y"), poly(&q, "Y*X^2 + X^2*Y - 2*X*Y*X")];
        let SuperpotentialVerdict::Yes(w) = superpotential_form(&q, &rels).unwrap() else { panic!() };
        assert_eq!(w, Superpotential::parse(&q, "X^2*Y^2 - X*Y*X*Y").unwrap());
        let SuperpotentialVerdict::Yes(w) = superpotential_form(&q, &[poly(&q, "Y"), poly(&q, "X")]).unwrap() else { panic!() };
        assert_eq!(w, Superpotential::parse(&q, "X*Y").unwrap());
        let SuperpotentialVerdict::Yes(w) = superpotential_form(&q, &[poly(&q, "X"), NCPoly::zero(&q)]).unwrap() else { panic!() };
        assert_eq!(w, Superpotential::parse(&q, "1/2*X^2").unwrap());
        let no = superpotential_form(&q, &[poly(&q, "Y"), NCPoly::zero(&q)]).unwrap();
        assert!(!no.is_yes());
        let a2 = Arc::new(Quiver::from_parts(&["1", "2"], &[("a", "1", "2")]).unwrap());
        assert!(matches!(superpotential_form(&a2, &[poly(&a2, "a")]), Err(Error::Shape(_))));
    }
}
