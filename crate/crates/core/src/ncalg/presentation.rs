use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::quiver::Quiver;

use super::poly::NCPoly;
use super::superpotential::Superpotential;
use super::word::PathWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Graded,
    Complete,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Graded => "graded",
            Flavor::Complete => "complete",
        }
    }
}

/// One relation of a presentation; `unit` marks the automatically added
/// `g g⁻¹ − e`, `g⁻¹ g − e` relations of invertible arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub poly: NCPoly,
    pub unit: bool,
}

impl Relation {
    /// `(head, tail)` of the relation (always defined after splitting).
    pub fn endpoints(&self) -> (usize, usize) {
        self.poly.endpoints().expect("relations are nonzero and vertex-pure")
    }
}

/// `ℂQ / ⟨r_i⟩` with a set of formally invertible arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    quiver: Arc<Quiver>,
    relations: Vec<Relation>,
    inverses: Vec<(usize, usize)>,
    flavor: Flavor,
    admissible: bool,
}

/// Conventional name of the inverse arrow of `g`.
pub fn inverse_name(g: &str) -> String {
    format!("{g}^-1")
}

/// Adds (or finds) an arrow `g^-1` for each invertible arrow `g`.
///
/// Returns the extended quiver together with `(g, g^-1)` index pairs.
pub fn adjoin_inverses(q: &Quiver, invertible: &[&str]) -> Result<(Quiver, Vec<(usize, usize)>)> {
    let mut q = q.clone();
    let mut pairs = Vec::new();
    for g in invertible {
        let gi = q.require_arrow(g)?;
        if pairs.iter().any(|&(x, _)| x == gi) {
            return Err(Error::DuplicateId(g.to_string()));
        }
        let name = inverse_name(g);
        let (h, t) = (q.arrow(gi).head, q.arrow(gi).tail);
        let inv = match q.arrow_index(&name) {
            Some(i) => {
                let a = q.arrow(i);
                if a.head != t || a.tail != h {
                    return Err(Error::Inconsistent(format!(
                        "`{name}` does not reverse the endpoints of `{g}`"
                    )));
                }
                i
            }
            None => {
                let (tv, hv) = (q.vertices()[h].clone(), q.vertices()[t].clone());
                q.add_arrow(&name, &tv, &hv)?
            }
        };
        pairs.push((gi, inv));
    }
    Ok((q, pairs))
}

impl Presentation {
    /// Validates and normalizes a presentation.
    ///
    /// Relations are split into their vertex-pure pieces (labels get a
    /// `[head,tail]` suffix when a relation splits), zero pieces are dropped,
    /// and unit relations are appended for every `(g, g⁻¹)` pair.
    pub fn new(
        quiver: Arc<Quiver>,
        relations: Vec<(String, NCPoly)>,
        inverses: Vec<(usize, usize)>,
        flavor: Flavor,
    ) -> Result<Self> {
        let mut rels = Vec::new();
        for (label, r) in relations {
            if !super::same_quiver(r.quiver(), &quiver) {
                return Err(Error::QuiverMismatch);
            }
            let parts = r.split_by_endpoints();
            let split = parts.len() > 1;
            for ((h, t), p) in parts {
                let label = if split {
                    format!("{label}[{},{}]", quiver.vertices()[h], quiver.vertices()[t])
                } else {
                    label.clone()
                };
                if flavor == Flavor::Graded && !p.is_homogeneous() {
                    return Err(Error::NotHomogeneous(format!("{label}: {p}")));
                }
                rels.push(Relation {
                    label,
                    poly: p,
                    unit: false,
                });
            }
        }
        for &(g, gi) in &inverses {
            let (ga, gia) = (quiver.arrow(g), quiver.arrow(gi));
            if ga.head != gia.tail || ga.tail != gia.head {
                return Err(Error::Inconsistent(format!(
                    "`{}` does not reverse `{}`",
                    gia.name, ga.name
                )));
            }
            let w = PathWord::from_arrows(&quiver, vec![g, gi])?;
            let wi = PathWord::from_arrows(&quiver, vec![gi, g])?;
            let minus = FieldElem::from_int(-1);
            for (word, v, side) in [(w, ga.head, "r"), (wi, ga.tail, "l")] {
                let mut p = NCPoly::word(&quiver, word);
                p.add_term(PathWord::vertex(v), minus.clone());
                rels.push(Relation {
                    label: format!("unit_{}_{side}", ga.name),
                    poly: p,
                    unit: true,
                });
            }
        }
        let admissible = rels.iter().all(|r| r.poly.min_degree().unwrap_or(2) >= 2);
        Ok(Presentation {
            quiver,
            relations: rels,
            inverses,
            flavor,
            admissible,
        })
    }

    /// Convenience constructor with generated labels `r1, r2, …`.
    pub fn from_relations(quiver: &Arc<Quiver>, relations: Vec<NCPoly>, flavor: Flavor) -> Result<Self> {
        let labelled = relations
            .into_iter()
            .enumerate()
            .map(|(i, r)| (format!("r{}", i + 1), r))
            .collect();
        Self::new(quiver.clone(), labelled, Vec::new(), flavor)
    }

    /// Parses each relation string against the quiver (graded flavor if all are homogeneous).
    pub fn parse(quiver: &Arc<Quiver>, relations: &[&str]) -> Result<Self> {
        let polys = relations
            .iter()
            .map(|s| NCPoly::parse(quiver, s))
            .collect::<Result<Vec<_>>>()?;
        let flavor = if polys.iter().all(NCPoly::is_homogeneous) {
            Flavor::Graded
        } else {
            Flavor::Complete
        };
        Self::from_relations(quiver, polys, flavor)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Relation polynomials in order.
    pub fn polys(&self) -> Vec<NCPoly> {
        self.relations.iter().map(|r| r.poly.clone()).collect()
    }

    pub fn inverses(&self) -> &[(usize, usize)] {
        &self.inverses
    }

    /// Whether the arrow is the formal inverse of another arrow.
    pub fn is_inverse_arrow(&self, a: usize) -> bool {
        self.inverses.iter().any(|&(_, i)| i == a)
    }

    /// Whether the arrow was declared invertible.
    pub fn is_invertible(&self, a: usize) -> bool {
        self.inverses.iter().any(|&(g, _)| g == a)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// True when every relation lies in the square of the arrow ideal.
    pub fn is_admissible(&self) -> bool {
        self.admissible
    }

    pub fn has_unit_relations(&self) -> bool {
        self.relations.iter().any(|r| r.unit)
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations
            .iter()
            .filter_map(|r| r.poly.max_degree())
            .max()
            .unwrap_or(0)
    }
}

/// `Σ_{h(a)=i} a a* − Σ_{t(a)=i} a* a` for every vertex `i` (zero entries included).
pub fn preprojective_relations(qd: &Arc<Quiver>) -> Result<Vec<NCPoly>> {
    let pairs = qd.pairing().ok_or(Error::NotDouble)?;
    let mut out = Vec::new();
    for i in 0..qd.num_vertices() {
        let mut r = NCPoly::zero(qd);
        for &(a, s) in pairs {
            let arr = qd.arrow(a);
            if arr.head == i {
                r.add_term(PathWord::from_arrows(qd, vec![a, s])?, FieldElem::one());
            }
            if arr.tail == i {
                r.add_term(PathWord::from_arrows(qd, vec![s, a])?, FieldElem::from_int(-1));
            }
        }
        out.push(r);
    }
    Ok(out)
}

/// The preprojective algebra of a double quiver, one relation per vertex.
pub fn preprojective_presentation(qd: &Arc<Quiver>) -> Result<Presentation> {
    let rels = preprojective_relations(qd)?;
    let labelled = rels
        .into_iter()
        .enumerate()
        .map(|(i, r)| (format!("pp_{}", qd.vertices()[i]), r))
        .collect();
    Presentation::new(qd.clone(), labelled, Vec::new(), Flavor::Graded)
}

/// `ℂQ / ⟨∂_a W⟩`, one relation per arrow labelled by the arrow name.
pub fn superpotential_relations(w: &Superpotential) -> Result<Presentation> {
    let q = w.quiver();
    let mut rels = Vec::new();
    for (a, arr) in q.arrows().iter().enumerate() {
        rels.push((arr.name.clone(), w.cyclic_derivative(a)));
    }
    let flavor = if rels.iter().all(|(_, r)| r.is_homogeneous()) {
        Flavor::Graded
    } else {
        Flavor::Complete
    };
    Presentation::new(q.clone(), rels, Vec::new(), flavor)
}

/// Built-in group algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// Fundamental group of a closed orientable surface of the given genus.
    Surface(u32),
    /// The discrete Heisenberg group.
    Heisenberg,
}

fn word_of(q: &Arc<Quiver>, names: &[&str]) -> Result<NCPoly> {
    Ok(NCPoly::word(q, PathWord::from_names(q, names)?))
}

/// The group algebra as a one-vertex quiver with formal inverse loops.
///
/// Surface groups use loops `X1, Y1, …, Xg, Yg` and the relation
/// `X1 Y1 X1⁻¹ Y1⁻¹ ⋯ Xg Yg Xg⁻¹ Yg⁻¹ − e`; the Heisenberg group uses `X, Y`
/// with relations `XYX⁻¹Y⁻¹ − YX⁻¹Y⁻¹X` and `XYX⁻¹Y⁻¹ − Y⁻¹XYX⁻¹`.
pub fn group_algebra_presentation(kind: GroupKind) -> Result<Presentation> {
    let gens: Vec<String> = match kind {
        GroupKind::Surface(0) => {
            return Err(Error::Inconsistent("genus must be at least 1".into()))
        }
        GroupKind::Surface(g) => (1..=g)
            .flat_map(|i| [format!("X{i}"), format!("Y{i}")])
            .collect(),
        GroupKind::Heisenberg => vec!["X".into(), "Y".into()],
    };
    let names: Vec<&str> = gens.iter().map(String::as_str).collect();
    let base = Quiver::loops(&names);
    let (q, inverses) = adjoin_inverses(&base, &names)?;
    let q = Arc::new(q);
    let inv: Vec<String> = gens.iter().map(|g| inverse_name(g)).collect();
    let rels = match kind {
        GroupKind::Surface(g) => {
            let mut word = Vec::new();
            for i in 0..g as usize {
                let (x, y) = (2 * i, 2 * i + 1);
                word.extend([
                    gens[x].as_str(),
                    gens[y].as_str(),
                    inv[x].as_str(),
                    inv[y].as_str(),
                ]);
            }
            let r = &word_of(&q, &word)? - &NCPoly::one(&q);
            vec![("surface".to_string(), r)]
        }
        GroupKind::Heisenberg => {
            let (x, y, xi, yi) = ("X", "Y", inv[0].as_str(), inv[1].as_str());
            let c = word_of(&q, &[x, y, xi, yi])?;
            let r1 = &c - &word_of(&q, &[y, xi, yi, x])?;
            let r2 = &c - &word_of(&q, &[yi, x, y, xi])?;
            vec![("h1".to_string(), r1), ("h2".to_string(), r2)]
        }
    };
    Presentation::new(q, rels, inverses, Flavor::Complete)
}
