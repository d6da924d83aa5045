use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ncalg::Presentation;
use crate::quiver::{DimVector, Quiver};
use crate::rewrite::minimal_relation_counts;

use super::ext::{ext1_dim, SemisimpleModule};

/// The local quiver `Q_M` and local dimension vector `α_M` of a semisimple module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalQuiverResult {
    /// Vertices `S1, …, Sk`; `ext1_matrix[i][j]` arrows run from `S(j+1)` to `S(i+1)`.
    pub quiver: Quiver,
    pub alpha: DimVector,
    /// `ext1_matrix[i][j] = dim Ext¹(S_i, S_j)`.
    pub ext1_matrix: Vec<Vec<usize>>,
    /// Minimal relation counts from `S_j` to `S_i` of a supplied tangent-cone presentation.
    pub ext2_lower: Option<Vec<Vec<usize>>>,
}

/// Builds `Q_M` with `dim Ext¹(S_i, S_j)` arrows `j → i`.
pub fn local_quiver(m: &SemisimpleModule) -> Result<LocalQuiverResult> {
    let fs = m.factors();
    let k = fs.len();
    let mut ext = vec![vec![0; k]; k];
    for (i, row) in ext.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            *e = ext1_dim(&fs[i].0, &fs[j].0)?;
        }
    }
    let mut q = Quiver::new();
    let names: Vec<String> = (1..=k).map(|i| format!("S{i}")).collect();
    for n in &names {
        q.add_vertex(n)?;
    }
    for i in 0..k {
        for j in 0..k {
            // arrows S_i → S_j
            for c in 1..=ext[j][i] {
                let name = if i == j {
                    format!("l{}_{}", i + 1, c)
                } else {
                    format!("a{}_{}_{}", i + 1, j + 1, c)
                };
                q.add_arrow(&name, &names[i], &names[j])?;
            }
        }
    }
    Ok(LocalQuiverResult {
        quiver: q,
        alpha: DimVector(fs.iter().map(|(_, e)| *e as u64).collect()),
        ext1_matrix: ext,
        ext2_lower: None,
    })
}

impl LocalQuiverResult {
    /// Fills `ext2_lower` from the minimal relations of a presentation over `Q_M`.
    pub fn attach_ext2_lower(&mut self, cone: &Presentation, degree_bound: usize) -> Result<()> {
        if cone.quiver().vertices() != self.quiver.vertices() {
            return Err(Error::Inconsistent(
                "tangent-cone presentation must live on the local quiver's vertices".into(),
            ));
        }
        let k = self.quiver.num_vertices();
        let mut m = vec![vec![0; k]; k];
        for ((h, t), n) in minimal_relation_counts(cone, degree_bound)? {
            let hi = self.quiver.require_vertex(&h)?;
            let ti = self.quiver.require_vertex(&t)?;
            m[hi][ti] = n;
        }
        self.ext2_lower = Some(m);
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let k = self.quiver.num_vertices();
        json!({
            "vertices": k,
            "loops": (0..k).map(|i| self.ext1_matrix[i][i]).collect::<Vec<_>>(),
            "arrows": self.ext1_matrix,
            "alpha": self.alpha.0,
            "ext2_lower": self.ext2_lower,
        })
    }
}
