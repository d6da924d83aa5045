//! Quivers, dimension vectors, and closed-form dimension and arrow-count formulas.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

/// An arrow `tail -> head`, with endpoints stored as vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub name: String,
    pub head: usize,
    pub tail: usize,
}

/// A finite quiver with ordered vertices and arrows.
///
/// Declaration order matters: it fixes the arrow order used by every
/// monomial order in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    /// `(a, a*)` arrow index pairs when the quiver was produced by [`Quiver::double`].
    pairing: Option<Vec<(usize, usize)>>,
}

pub(crate) fn check_identifier(name: &str) -> Result<()> {
    let invalid = |reason: &str| {
        Err(Error::InvalidId {
            name: name.to_string(),
            reason: reason.to_string(),
        })
    };
    if name.is_empty() {
        return invalid("empty identifier");
    }
    if name.chars().any(|c| c.is_whitespace() || "*+,;:=[](){}\"#".contains(c)) {
        return invalid("contains a reserved character");
    }
    Ok(())
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a quiver from vertex names and `(name, tail, head)` triples.
    pub fn from_parts(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let mut q = Quiver::new();
        for v in vertices {
            q.add_vertex(v)?;
        }
        for (a, t, h) in arrows {
            q.add_arrow(a, t, h)?;
        }
        Ok(q)
    }

    /// One vertex `v` carrying the given loops.
    pub fn loops(names: &[&str]) -> Self {
        let arrows: Vec<_> = names.iter().map(|n| (*n, "v", "v")).collect();
        Quiver::from_parts(&["v"], &arrows).expect("valid loop quiver")
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize> {
        check_identifier(name)?;
        if self.vertex_index(name).is_some() {
            return Err(Error::DuplicateId(name.to_string()));
        }
        self.vertices.push(name.to_string());
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, name: &str, tail: &str, head: &str) -> Result<usize> {
        check_identifier(name)?;
        if name == "zeta" || name.starts_with("e_") {
            return Err(Error::InvalidId {
                name: name.to_string(),
                reason: "`zeta` and names starting with `e_` are reserved".into(),
            });
        }
        if self.arrow_index(name).is_some() {
            return Err(Error::DuplicateId(name.to_string()));
        }
        let t = self.require_vertex(tail)?;
        let h = self.require_vertex(head)?;
        self.arrows.push(Arrow {
            name: name.to_string(),
            head: h,
            tail: t,
        });
        self.pairing = None;
        Ok(self.arrows.len() - 1)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn require_vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn require_arrow(&self, name: &str) -> Result<usize> {
        self.arrow_index(name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    /// `(a, a*)` index pairs if this quiver is a double.
    pub fn pairing(&self) -> Option<&[(usize, usize)]> {
        self.pairing.as_deref()
    }

    /// Records an explicit `(a, a*)` pairing; each pair must have swapped endpoints
    /// and every arrow must occur exactly once.
    pub fn set_pairing(&mut self, pairs: Vec<(usize, usize)>) -> Result<()> {
        let mut seen = BTreeSet::new();
        for &(a, b) in &pairs {
            let (x, y) = (self.arrows.get(a), self.arrows.get(b));
            let (Some(x), Some(y)) = (x, y) else {
                return Err(Error::IndexOutOfRange {
                    index: a.max(b),
                    bound: self.arrows.len(),
                });
            };
            if x.head != y.tail || x.tail != y.head {
                return Err(Error::Inconsistent(format!(
                    "paired arrows {} and {} do not have swapped endpoints",
                    x.name, y.name
                )));
            }
            if !seen.insert(a) || !seen.insert(b) {
                return Err(Error::Inconsistent("arrow paired twice".into()));
            }
        }
        if seen.len() != self.arrows.len() {
            return Err(Error::Inconsistent("not every arrow is paired".into()));
        }
        self.pairing = Some(pairs);
        Ok(())
    }

    fn fresh_star_name(&self, base: &str, taken: &BTreeSet<String>) -> String {
        let mut name = format!("{base}'");
        while taken.contains(&name) || self.arrow_index(&name).is_some() {
            name.push('\'');
        }
        name
    }

    /// The double quiver: every arrow `a` gains a reversed partner named `a'`
    /// (with further primes appended until the name is fresh).
    pub fn double(&self) -> Quiver {
        let mut q = Quiver {
            vertices: self.vertices.clone(),
            arrows: self.arrows.clone(),
            pairing: None,
        };
        let mut taken = BTreeSet::new();
        let mut pairs = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            let star = self.fresh_star_name(&a.name, &taken);
            taken.insert(star.clone());
            q.arrows.push(Arrow {
                name: star,
                head: a.tail,
                tail: a.head,
            });
            pairs.push((i, q.arrows.len() - 1));
        }
        q.pairing = Some(pairs);
        q
    }

    /// Full subquiver on `keep`, preserving the declaration order.
    pub fn restrict(&self, keep: &[&str]) -> Result<Quiver> {
        let mut keep_idx = BTreeSet::new();
        for v in keep {
            keep_idx.insert(self.require_vertex(v)?);
        }
        let mut new_index = vec![None; self.vertices.len()];
        let mut q = Quiver::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if keep_idx.contains(&i) {
                new_index[i] = Some(q.vertices.len());
                q.vertices.push(v.clone());
            }
        }
        let mut arrow_map = vec![None; self.arrows.len()];
        for (i, a) in self.arrows.iter().enumerate() {
            if let (Some(h), Some(t)) = (new_index[a.head], new_index[a.tail]) {
                arrow_map[i] = Some(q.arrows.len());
                q.arrows.push(Arrow {
                    name: a.name.clone(),
                    head: h,
                    tail: t,
                });
            }
        }
        if let Some(pairs) = &self.pairing {
            let kept: Vec<_> = pairs
                .iter()
                .filter_map(|&(a, b)| Some((arrow_map[a]?, arrow_map[b]?)))
                .collect();
            q.pairing = Some(kept);
        }
        Ok(q)
    }

    /// Graphviz rendering: one node per vertex, one labelled edge per arrow.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{}\" {{", escape(name));
        for v in &self.vertices {
            let _ = writeln!(s, "  \"{}\";", escape(v));
        }
        for a in &self.arrows {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                escape(&self.vertices[a.tail]),
                escape(&self.vertices[a.head]),
                escape(&a.name)
            );
        }
        s.push_str("}\n");
        s
    }

    /// Number of arrows `tail -> head` between the given vertex indices.
    pub fn arrow_count(&self, tail: usize, head: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.tail == tail && a.head == head)
            .count()
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A dimension vector, stored in the vertex order of its quiver.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DimVector(pub Vec<u64>);

impl DimVector {
    /// Builds a dimension vector from `(vertex, dim)` entries; every vertex must appear once.
    pub fn from_entries(q: &Quiver, entries: &[(&str, u64)]) -> Result<Self> {
        let mut v = vec![None; q.num_vertices()];
        for (name, d) in entries {
            let i = q.require_vertex(name)?;
            if v[i].replace(*d).is_some() {
                return Err(Error::DuplicateId(name.to_string()));
            }
        }
        let missing: Vec<_> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| x.is_none())
            .map(|(i, _)| q.vertices()[i].clone())
            .collect();
        if !missing.is_empty() {
            return Err(Error::Shape(format!(
                "dimension vector lacks vertices {}",
                missing.join(", ")
            )));
        }
        Ok(DimVector(v.into_iter().map(Option::unwrap).collect()))
    }

    pub fn get(&self, v: usize) -> u64 {
        self.0[v]
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn check_for(&self, q: &Quiver) -> Result<()> {
        if self.0.len() != q.num_vertices() {
            return Err(Error::Shape(format!(
                "dimension vector has {} entries, quiver has {} vertices",
                self.0.len(),
                q.num_vertices()
            )));
        }
        Ok(())
    }
}

/// `dim GL_α = Σ_v α_v²`.
pub fn gl_dim(alpha: &DimVector) -> u64 {
    alpha.0.iter().map(|a| a * a).sum()
}

/// `dim Rep_α Q = Σ_a α_{h(a)} α_{t(a)}`.
pub fn rep_space_dim(q: &Quiver, alpha: &DimVector) -> Result<u64> {
    alpha.check_for(q)?;
    Ok(q.arrows
        .iter()
        .map(|a| alpha.get(a.head) * alpha.get(a.tail))
        .sum())
}

/// Arrow count of the local quiver at a semisimple point of a preprojective
/// algebra: `2·[i=j] + Σ_a α^i(h a) α^j(t a) − 2 Σ_v α^i(v) α^j(v)`.
///
/// A negative value means the input is inconsistent and is reported as an error.
pub fn cb_arrow_count(qd: &Quiver, local_dims: &[DimVector], i: usize, j: usize) -> Result<i64> {
    let bound = local_dims.len();
    for &k in &[i, j] {
        if k >= bound {
            return Err(Error::IndexOutOfRange { index: k, bound });
        }
    }
    let (ai, aj) = (&local_dims[i], &local_dims[j]);
    ai.check_for(qd)?;
    aj.check_for(qd)?;
    let arrows: i64 = qd
        .arrows
        .iter()
        .map(|a| (ai.get(a.head) * aj.get(a.tail)) as i64)
        .sum();
    let verts: i64 = (0..qd.num_vertices())
        .map(|v| (ai.get(v) * aj.get(v)) as i64)
        .sum();
    let n = if i == j { 2 } else { 0 } + arrows - 2 * verts;
    if n < 0 {
        return Err(Error::Inconsistent(format!(
            "arrow count for ({i}, {j}) evaluates to {n}"
        )));
    }
    Ok(n)
}

/// The local quiver of a surface group algebra of genus `g` at a semisimple
/// point whose simple factors have the given dimensions, together with those
/// dimensions as a vector over its vertices `S1, S2, …`.
pub fn surface_local_quiver(g: u64, dims: &[u64]) -> Result<(Quiver, DimVector)> {
    if g == 0 {
        return Err(Error::Inconsistent("genus must be at least 1".into()));
    }
    if dims.contains(&0) {
        return Err(Error::Inconsistent("simple dimensions must be positive".into()));
    }
    let mut q = Quiver::new();
    let names: Vec<String> = (1..=dims.len()).map(|i| format!("S{i}")).collect();
    for n in &names {
        q.add_vertex(n)?;
    }
    for (i, &ni) in dims.iter().enumerate() {
        for (j, &nj) in dims.iter().enumerate() {
            let count = if i == j {
                2 * (g - 1) * ni * ni + 2
            } else {
                2 * ni * nj * (g - 1)
            };
            for k in 1..=count {
                let name = if i == j {
                    format!("l{}_{}", i + 1, k)
                } else {
                    format!("a{}_{}_{}", i + 1, j + 1, k)
                };
                q.add_arrow(&name, &names[i], &names[j])?;
            }
        }
    }
    Ok((q, DimVector(dims.to_vec())))
}

/// `dim Rep_n Π_g`: `n² + n` for `g = 1`, `(2g − 1) n² + 1` for `g > 1`.
pub fn dim_rep_preproj(g: u64, n: u64) -> Result<u64> {
    match (g, n) {
        (0, _) | (_, 0) => Err(Error::Inconsistent(
            "genus and dimension must be positive".into(),
        )),
        (1, n) => Ok(n * n + n),
        (g, n) => Ok((2 * g - 1) * n * n + 1),
    }
}
