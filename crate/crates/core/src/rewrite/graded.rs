use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::linalg::{sparse_axpy, Echelon, SparseVec};
use crate::ncalg::{Flavor, NCPoly, PathWord, Presentation};
use crate::quiver::Quiver;

use super::system::{words_by_length, RewriteSystem};

/// Local order key: lower degree dominates, so the pivot of a row is a word
/// of least length.
type LocalKey = (Reverse<usize>, PathWord);

/// Minimal homogeneous generators of the associated graded ideal `gr 𝔦`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrIdealReport {
    /// Sorted by degree, then by least word; each has leading coefficient 1 on its least word.
    pub generators: Vec<NCPoly>,
    /// For each generator, an element of the truncated ideal whose minimal part it is.
    pub lifts: Vec<NCPoly>,
    pub degree_bound: usize,
    /// Whether `gr 𝔦` is generated by the minimal parts of the relations in degrees `≤ D`.
    pub gradable: bool,
    /// `dim (gr 𝔦)_d` for `d = 0..=D`.
    pub dims: Vec<usize>,
}

impl GrIdealReport {
    pub fn to_json(&self) -> Value {
        json!({
            "generators": self.generators.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "degree_bound": self.degree_bound,
            "gradable": self.gradable,
            "dims": self.dims,
        })
    }
}

/// Result of the two gradability tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradabilityReport {
    pub gradable: bool,
    /// Verdict from comparing `gr 𝔦` with the ideal of minimal parts.
    pub by_generators: bool,
    /// Verdict from lifting syzygies among the minimal parts.
    pub by_syzygies: bool,
    /// A minimal part of an ideal element not in the ideal of minimal parts.
    pub witness: Option<NCPoly>,
    pub degree_bound: usize,
}

impl GradabilityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "gradable": self.gradable,
            "by_generators": self.by_generators,
            "by_syzygies": self.by_syzygies,
            "witness": self.witness.as_ref().map(ToString::to_string),
            "degree_bound": self.degree_bound,
        })
    }
}

fn check_gr_input(p: &Presentation, d: usize) -> Result<()> {
    if let Some(r) = p.relations().iter().find(|r| r.unit) {
        return Err(Error::NotAdmissible(format!("`{}` (unit relation)", r.label)));
    }
    if let Some(r) = p
        .relations()
        .iter()
        .find(|r| r.poly.min_degree().unwrap_or(2) < 2)
    {
        return Err(Error::NotAdmissible(format!("`{}`", r.label)));
    }
    let needed = p.max_relation_degree();
    if d < needed {
        return Err(Error::DegreeTooSmall { bound: d, needed });
    }
    Ok(())
}

fn to_local(f: &NCPoly) -> SparseVec<LocalKey> {
    f.terms()
        .iter()
        .map(|(w, c)| ((Reverse(w.len()), w.clone()), c.clone()))
        .collect()
}

fn from_local(q: &Arc<Quiver>, v: &SparseVec<LocalKey>) -> NCPoly {
    NCPoly::from_terms(q, v.iter().map(|((_, w), c)| (w.clone(), c.clone())))
}

fn to_rev(f: &NCPoly) -> SparseVec<Reverse<PathWord>> {
    f.terms()
        .iter()
        .map(|(w, c)| (Reverse(w.clone()), c.clone()))
        .collect()
}

fn from_rev(q: &Arc<Quiver>, v: &SparseVec<Reverse<PathWord>>) -> NCPoly {
    NCPoly::from_terms(q, v.iter().map(|(Reverse(w), c)| (w.clone(), c.clone())))
}

/// Words `u` with `tail(u) = v` of each length, and words `w` with `head(w) = v`.
struct WordTable {
    into: Vec<BTreeMap<usize, Vec<PathWord>>>,
    out_of: Vec<BTreeMap<usize, Vec<PathWord>>>,
}

impl WordTable {
    fn new(q: &Quiver, d: usize) -> Self {
        let words = words_by_length(q, d);
        let mut into = vec![BTreeMap::new(); d + 1];
        let mut out_of = vec![BTreeMap::new(); d + 1];
        for (len, ws) in words.into_iter().enumerate() {
            for w in ws {
                into[len]
                    .entry(w.tail())
                    .or_insert_with(Vec::new)
                    .push(w.clone());
                out_of[len].entry(w.head()).or_insert_with(Vec::new).push(w);
            }
        }
        WordTable { into, out_of }
    }

    fn ending_at(&self, len: usize, v: usize) -> &[PathWord] {
        self.into[len].get(&v).map_or(&[], Vec::as_slice)
    }

    fn starting_at(&self, len: usize, v: usize) -> &[PathWord] {
        self.out_of[len].get(&v).map_or(&[], Vec::as_slice)
    }

    /// All `u f v` with `|u| + |v| = k`, truncated at `d`.
    fn sandwiches<'a>(&'a self, f: &'a NCPoly, k: usize, d: usize) -> impl Iterator<Item = NCPoly> + 'a {
        let (h, t) = f.endpoints().expect("vertex-pure");
        (0..=k).flat_map(move |a| {
            self.ending_at(a, h).iter().flat_map(move |u| {
                self.starting_at(k - a, t)
                    .iter()
                    .map(move |v| f.sandwich(u, v).truncate(d))
            })
        })
    }
}

/// The truncated ideal `𝔦 + 𝒲^{D+1}` in a local-order echelon form.
fn truncated_ideal(p: &Presentation, d: usize, table: &WordTable) -> Echelon<LocalKey> {
    let mut ech = Echelon::new();
    for r in p.relations() {
        let m = r.poly.min_degree().unwrap();
        if m > d {
            continue;
        }
        for k in 0..=d - m {
            for x in table.sandwiches(&r.poly, k, d) {
                if !x.is_zero() {
                    ech.insert(to_local(&x));
                }
            }
        }
    }
    ech
}

/// Minimal homogeneous generators of `gr 𝔦` in degrees `≤ D`.
pub fn gr_ideal(p: &Presentation, degree_bound: usize) -> Result<GrIdealReport> {
    let d = degree_bound;
    check_gr_input(p, d)?;
    let q = p.quiver();
    let table = WordTable::new(q, d);
    let ideal = truncated_ideal(p, d, &table);

    let mut by_degree: Vec<Vec<(PathWord, NCPoly)>> = vec![Vec::new(); d + 1];
    for ((Reverse(len), w), row) in ideal.rows() {
        by_degree[*len].push((w.clone(), from_local(q, row)));
    }
    let dims: Vec<usize> = by_degree.iter().map(Vec::len).collect();

    let mut generators: Vec<NCPoly> = Vec::new();
    let mut lifts: Vec<NCPoly> = Vec::new();
    for deg in 0..=d {
        if by_degree[deg].is_empty() {
            continue;
        }
        let mut graded: Echelon<Reverse<PathWord>> = Echelon::new();
        for (_, row) in &by_degree[deg] {
            graded.insert(to_rev(&row.homogeneous_part(deg)));
        }
        let mut lower: Echelon<Reverse<PathWord>> = Echelon::new();
        for g in &generators {
            let e = g.min_degree().unwrap();
            for x in table.sandwiches(g, deg - e, d) {
                lower.insert(to_rev(&x));
            }
        }
        for (pivot, row) in graded.rows().rev() {
            if lower.row(pivot).is_some() {
                continue;
            }
            let g = from_rev(q, row);
            // ideal rows are fully reduced, so pivot coefficients give the combination
            let mut lift = NCPoly::zero(q);
            for (w, row) in &by_degree[deg] {
                let c = g.coeff(w);
                if !c.is_zero() {
                    lift.add_scaled(&c, row);
                }
            }
            generators.push(g);
            lifts.push(lift);
        }
    }

    let naive = naive_presentation(p)?;
    let rs = RewriteSystem::complete(&naive, d)?;
    let mut gradable = true;
    for g in &generators {
        if !rs.normal_form(g)?.is_zero() {
            gradable = false;
            break;
        }
    }
    Ok(GrIdealReport {
        generators,
        lifts,
        degree_bound: d,
        gradable,
        dims,
    })
}

/// The presentation by the minimal parts of the relations.
fn naive_presentation(p: &Presentation) -> Result<Presentation> {
    let rels = p
        .relations()
        .iter()
        .map(|r| Ok((r.label.clone(), r.poly.min_part()?)))
        .collect::<Result<Vec<_>>>()?;
    Presentation::new(p.quiver().clone(), rels, Vec::new(), Flavor::Graded)
}

/// Decides whether `gr 𝔦 = ⟨r_min⟩` in degrees `≤ D`, by two independent routes.
///
/// The first compares the minimal generators of `gr 𝔦` against the rewriting
/// system of the minimal parts. The second lifts every syzygy
/// `Σ c u r_min v = 0` to `Σ c u r v` and tests its minimal part for
/// membership in `⟨r_min⟩`.
pub fn is_gradable(p: &Presentation, degree_bound: usize) -> Result<GradabilityReport> {
    let d = degree_bound;
    let report = gr_ideal(p, d)?;
    let naive = naive_presentation(p)?;
    let rs = RewriteSystem::complete(&naive, d)?;
    let mut witness = None;
    if !report.gradable {
        for g in &report.generators {
            if !rs.normal_form(g)?.is_zero() {
                witness = Some(g.clone());
                break;
            }
        }
    }

    let q = p.quiver();
    let table = WordTable::new(q, d);
    let rels: Vec<(NCPoly, NCPoly)> = p
        .relations()
        .iter()
        .map(|r| Ok((r.poly.clone(), r.poly.min_part()?)))
        .collect::<Result<_>>()?;
    let mut by_syzygies = true;
    'outer: for deg in 2..d {
        // triples (u, i, v) with |u| + deg(r_i,min) + |v| = deg
        let mut triples: Vec<(PathWord, usize, PathWord)> = Vec::new();
        for (i, (_, m)) in rels.iter().enumerate() {
            let e = m.min_degree().unwrap();
            if e > deg {
                continue;
            }
            let (h, t) = m.endpoints().unwrap();
            let k = deg - e;
            for a in 0..=k {
                for u in table.ending_at(a, h) {
                    for v in table.starting_at(k - a, t) {
                        triples.push((u.clone(), i, v.clone()));
                    }
                }
            }
        }
        for combo in kernel(&triples, |(u, i, v)| rels[*i].1.sandwich(u, v)) {
            let mut lift = NCPoly::zero(q);
            for (j, c) in combo {
                let (u, i, v) = &triples[j];
                lift.add_scaled(&c, &rels[*i].0.sandwich(u, v).truncate(d));
            }
            if lift.is_zero() {
                continue;
            }
            let low = lift.min_part()?;
            if !rs.normal_form(&low)?.is_zero() {
                by_syzygies = false;
                if witness.is_none() {
                    witness = Some(low);
                }
                break 'outer;
            }
        }
    }
    Ok(GradabilityReport {
        gradable: report.gradable && by_syzygies,
        by_generators: report.gradable,
        by_syzygies,
        witness,
        degree_bound: d,
    })
}

/// Linear dependencies among `image(item)`, each as sparse coefficients on item indices.
fn kernel<T>(
    items: &[T],
    image: impl Fn(&T) -> NCPoly,
) -> Vec<BTreeMap<usize, FieldElem>> {
    let mut rows: BTreeMap<PathWord, (SparseVec<PathWord>, SparseVec<usize>)> = BTreeMap::new();
    let mut out = Vec::new();
    for (j, it) in items.iter().enumerate() {
        let mut v: SparseVec<PathWord> = image(it).into_terms();
        let mut combo: SparseVec<usize> = BTreeMap::from([(j, FieldElem::one())]);
        loop {
            let Some((k, c)) = v.last_key_value().map(|(k, c)| (k.clone(), c.clone())) else {
                out.push(combo);
                break;
            };
            match rows.get(&k) {
                Some((row, rc)) => {
                    let neg = -c;
                    sparse_axpy(&mut v, &neg, row);
                    sparse_axpy(&mut combo, &neg, rc);
                }
                None => {
                    let inv = c.inv().unwrap();
                    let v: SparseVec<PathWord> = v.into_iter().map(|(w, x)| (w, x * &inv)).collect();
                    let combo = combo.into_iter().map(|(w, x)| (w, x * &inv)).collect();
                    rows.insert(k, (v, combo));
                    break;
                }
            }
        }
    }
    out
}

/// Number of minimal relations in degrees `≤ D` between each ordered pair of vertices,
/// keyed by `(head, tail)` vertex names.
pub fn minimal_relation_counts(
    p: &Presentation,
    degree_bound: usize,
) -> Result<BTreeMap<(String, String), usize>> {
    let report = gr_ideal(p, degree_bound)?;
    let q = p.quiver();
    let mut counts = BTreeMap::new();
    for g in &report.generators {
        let (h, t) = g.endpoints().unwrap();
        *counts
            .entry((q.vertices()[h].clone(), q.vertices()[t].clone()))
            .or_insert(0) += 1;
    }
    Ok(counts)
}
