use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// A path in a quiver: either a vertex idempotent or a composable arrow sequence.
///
/// For `a₁a₂⋯a_k` composability means `t(a_i) = h(a_{i+1})`; the head is
/// `h(a₁)` and the tail is `t(a_k)`. Words are ordered deglex: by length,
/// then lexicographically by arrow declaration index, with idempotents
/// ordered by vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PathWord {
    head: usize,
    tail: usize,
    arrows: Vec<usize>,
}

impl PathWord {
    pub fn vertex(v: usize) -> Self {
        PathWord {
            head: v,
            tail: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        let arr = q.arrow(a);
        PathWord {
            head: arr.head,
            tail: arr.tail,
            arrows: vec![a],
        }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::Inconsistent(
                "an empty arrow sequence needs a base vertex".into(),
            ));
        };
        for (i, w) in arrows.windows(2).enumerate() {
            if q.arrow(w[0]).tail != q.arrow(w[1]).head {
                return Err(Error::NotComposable { position: i + 1 });
            }
        }
        let last = *arrows.last().unwrap();
        Ok(PathWord {
            head: q.arrow(first).head,
            tail: q.arrow(last).tail,
            arrows,
        })
    }

    /// Builds a word from arrow names.
    pub fn from_names(q: &Quiver, names: &[&str]) -> Result<Self> {
        let idx = names
            .iter()
            .map(|n| q.require_arrow(n))
            .collect::<Result<Vec<_>>>()?;
        Self::from_arrows(q, idx)
    }

    pub fn head(&self) -> usize {
        self.head
    }

    pub fn tail(&self) -> usize {
        self.tail
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_cycle(&self) -> bool {
        !self.arrows.is_empty() && self.head == self.tail
    }

    /// `self · other`, or `None` when `t(self) ≠ h(other)`.
    pub fn concat(&self, other: &PathWord) -> Option<PathWord> {
        if self.tail != other.head {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.len() + other.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&other.arrows);
        Some(PathWord {
            head: self.head,
            tail: other.tail,
            arrows,
        })
    }

    /// Subword `a_{start+1} ⋯ a_{end}`; empty ranges give the idempotent at the cut.
    pub fn subword(&self, q: &Quiver, start: usize, end: usize) -> PathWord {
        if start == end {
            let v = if start == 0 {
                self.head
            } else {
                q.arrow(self.arrows[start - 1]).tail
            };
            return PathWord::vertex(v);
        }
        let arrows = self.arrows[start..end].to_vec();
        PathWord {
            head: q.arrow(arrows[0]).head,
            tail: q.arrow(arrows[arrows.len() - 1]).tail,
            arrows,
        }
    }

    /// Position of the first occurrence of `pattern` as a contiguous subword.
    pub fn find(&self, pattern: &PathWord) -> Option<usize> {
        if pattern.is_vertex() {
            return None;
        }
        self.arrows
            .windows(pattern.len())
            .position(|w| w == pattern.arrows.as_slice())
    }

    pub fn contains(&self, pattern: &PathWord) -> bool {
        self.find(pattern).is_some()
    }

    /// All rotations of a cycle (`n` of them, repeated rotations included).
    pub fn rotations(&self, q: &Quiver) -> Vec<PathWord> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut arrows = self.arrows[i..].to_vec();
                arrows.extend_from_slice(&self.arrows[..i]);
                let v = q.arrow(arrows[0]).head;
                PathWord {
                    head: v,
                    tail: v,
                    arrows,
                }
            })
            .collect()
    }

    /// The least rotation under the word order.
    pub fn canonical_rotation(&self, q: &Quiver) -> PathWord {
        self.rotations(q)
            .into_iter()
            .min()
            .unwrap_or_else(|| self.clone())
    }

    /// Renders the word using arrow names, e.g. `X^2*Y` or `e_v`.
    pub fn render(&self, q: &Quiver) -> String {
        if self.is_vertex() {
            return format!("e_{}", q.vertices()[self.head]);
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.arrows.len() {
            let a = self.arrows[i];
            let name = &q.arrow(a).name;
            let mut run = 1;
            if !name.contains('^') {
                while i + run < self.arrows.len() && self.arrows[i + run] == a {
                    run += 1;
                }
            }
            if run > 1 {
                parts.push(format!("{name}^{run}"));
            } else {
                parts.push(name.clone());
            }
            i += run;
        }
        parts.join("*")
    }
}

impl Ord for PathWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.head.cmp(&other.head))
            .then_with(|| self.tail.cmp(&other.tail))
    }
}

impl PartialOrd for PathWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
