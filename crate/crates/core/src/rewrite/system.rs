use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::ncalg::{NCPoly, PathWord, Presentation};
use crate::quiver::Quiver;

/// `lead → Σ tail`, i.e. the monic ideal element `lead − Σ tail`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lead: PathWord,
    pub tail: Vec<(PathWord, FieldElem)>,
}

impl Rule {
    /// The ideal element `lead − tail`.
    pub fn element(&self, q: &Arc<Quiver>) -> NCPoly {
        let mut p = NCPoly::word(q, self.lead.clone());
        for (w, c) in &self.tail {
            p.add_term(w.clone(), -c);
        }
        p
    }
}

type Terms = BTreeMap<PathWord, FieldElem>;

/// A rewriting system for `ℂQ / (𝔦 + 𝒲^{D+1})` under the deglex order.
///
/// Every word longer than the degree bound `D` is treated as zero, so the
/// completion terminates. All overlap ambiguities of words up to length `D`
/// resolve, which makes normal forms of polynomials of degree `≤ D` unique
/// in the truncated quotient. For homogeneous relations the truncated
/// quotient agrees with `A` in degrees `≤ D`; for inhomogeneous relations
/// statements about membership in `𝔦` itself are only certified up to
/// [`RewriteSystem::membership_bound`].
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    presentation: Presentation,
    degree_bound: usize,
    rules: BTreeMap<PathWord, Vec<(PathWord, FieldElem)>>,
    complete_up_to: usize,
    membership_bound: usize,
}

/// Finds a rule lead occurring in `w`; returns `(start, lead length, lead)`.
fn find_divisor<'a>(
    q: &Quiver,
    rules: &'a BTreeMap<PathWord, Vec<(PathWord, FieldElem)>>,
    vertex_leads: &BTreeSet<usize>,
    w: &PathWord,
) -> Option<(usize, usize, &'a PathWord)> {
    let n = w.len();
    if !vertex_leads.is_empty() {
        for i in 0..=n {
            let v = if i == 0 {
                w.head()
            } else {
                q.arrow(w.arrows()[i - 1]).tail
            };
            if vertex_leads.contains(&v) {
                let (k, _) = rules.get_key_value(&PathWord::vertex(v))?;
                return Some((i, 0, k));
            }
        }
    }
    for len in 1..=n {
        for i in 0..=n - len {
            let sub = w.subword(q, i, i + len);
            if let Some((k, _)) = rules.get_key_value(&sub) {
                return Some((i, len, k));
            }
        }
    }
    None
}

fn splice(q: &Quiver, w: &PathWord, start: usize, len: usize, middle: &PathWord) -> PathWord {
    let u = w.subword(q, 0, start);
    let v = w.subword(q, start + len, w.len());
    u.concat(middle)
        .and_then(|um| um.concat(&v))
        .expect("rule tails share the endpoints of their leads")
}

struct Reducer<'a> {
    q: &'a Quiver,
    rules: &'a BTreeMap<PathWord, Vec<(PathWord, FieldElem)>>,
    vertex_leads: BTreeSet<usize>,
    bound: usize,
}

impl<'a> Reducer<'a> {
    fn new(
        q: &'a Quiver,
        rules: &'a BTreeMap<PathWord, Vec<(PathWord, FieldElem)>>,
        bound: usize,
    ) -> Self {
        let vertex_leads = rules
            .keys()
            .filter(|w| w.is_vertex())
            .map(PathWord::head)
            .collect();
        Reducer {
            q,
            rules,
            vertex_leads,
            bound,
        }
    }

    /// Full normal form; words longer than the bound are discarded.
    fn reduce(&self, mut f: Terms) -> Terms {
        f.retain(|w, _| w.len() <= self.bound);
        let mut done = Terms::new();
        while let Some((w, c)) = f.pop_last() {
            match find_divisor(self.q, self.rules, &self.vertex_leads, &w) {
                None => {
                    done.insert(w, c);
                }
                Some((start, len, lead)) => {
                    for (t, tc) in &self.rules[lead] {
                        let nw = splice(self.q, &w, start, len, t);
                        if nw.len() > self.bound {
                            continue;
                        }
                        let e = f.entry(nw.clone()).or_insert_with(FieldElem::zero);
                        *e += &c * tc;
                        if e.is_zero() {
                            f.remove(&nw);
                        }
                    }
                }
            }
        }
        done
    }
}

/// All words of each length `0..=max`, sorted.
pub(crate) fn words_by_length(q: &Quiver, max: usize) -> Vec<Vec<PathWord>> {
    let mut out: Vec<Vec<PathWord>> = vec![(0..q.num_vertices()).map(PathWord::vertex).collect()];
    for _ in 1..=max {
        let prev = out.last().unwrap();
        let mut next = Vec::new();
        for w in prev {
            for (a, arr) in q.arrows().iter().enumerate() {
                if arr.head == w.tail() {
                    next.push(w.concat(&PathWord::arrow(q, a)).unwrap());
                }
            }
        }
        next.sort();
        out.push(next);
    }
    out
}

fn monic(mut f: Terms) -> Option<Rule> {
    let (lead, c) = f.pop_last()?;
    let inv = c.inv().unwrap();
    let tail = f.into_iter().map(|(w, x)| (w, -(x * &inv))).collect();
    Some(Rule { lead, tail })
}

impl RewriteSystem {
    /// Completes the relations of `p` in `ℂQ/𝒲^{D+1}`.
    pub fn complete(p: &Presentation, degree_bound: usize) -> Result<Self> {
        let needed = p.max_relation_degree();
        if degree_bound < needed {
            return Err(Error::DegreeTooSmall {
                bound: degree_bound,
                needed,
            });
        }
        let q = p.quiver().clone();
        let d = degree_bound;
        let words = words_by_length(&q, d);
        let mut rules: BTreeMap<PathWord, Vec<(PathWord, FieldElem)>> = BTreeMap::new();
        let mut queue: Vec<Terms> = p
            .relations()
            .iter()
            .map(|r| r.poly.truncate(d).into_terms())
            .filter(|t| !t.is_empty())
            .collect();
        let mul = |u: &PathWord, f: &Terms, v: &PathWord| -> Terms {
            let mut out = Terms::new();
            for (w, c) in f {
                if u.len() + w.len() + v.len() > d {
                    continue;
                }
                if let Some(x) = u.concat(w).and_then(|uw| uw.concat(v)) {
                    let e = out.entry(x.clone()).or_insert_with(FieldElem::zero);
                    *e += c;
                    if e.is_zero() {
                        out.remove(&x);
                    }
                }
            }
            out
        };
        while let Some(f) = {
            // smallest leading word first keeps intermediate rules short
            queue.sort_by(|a, b| b.last_key_value().map(|x| x.0).cmp(&a.last_key_value().map(|x| x.0)));
            queue.pop()
        } {
            let r = Reducer::new(&q, &rules, d).reduce(f);
            let Some(rule) = monic(r) else { continue };
            let element: Terms = {
                let mut t: Terms = rule.tail.iter().map(|(w, c)| (w.clone(), -c)).collect();
                t.insert(rule.lead.clone(), FieldElem::one());
                t
            };
            // rules whose lead contains the new lead are no longer reduced
            let stale: Vec<PathWord> = rules
                .keys()
                .filter(|l| {
                    if rule.lead.is_vertex() {
                        let through = (0..=l.len()).any(|i| {
                            let v = if i == 0 { l.head() } else { q.arrow(l.arrows()[i - 1]).tail };
                            v == rule.lead.head()
                        });
                        through
                    } else {
                        l.contains(&rule.lead)
                    }
                })
                .cloned()
                .collect();
            for l in stale {
                let tail = rules.remove(&l).unwrap();
                let mut t: Terms = tail.into_iter().map(|(w, c)| (w, -c)).collect();
                t.insert(l, FieldElem::one());
                queue.push(t);
            }
            let lead = rule.lead.clone();
            // overlap ambiguities with every existing rule and with itself
            if !lead.is_vertex() {
                let mut partners: Vec<(PathWord, Terms)> = rules
                    .iter()
                    .filter(|(l, _)| !l.is_vertex())
                    .map(|(l, tail)| {
                        let mut t: Terms = tail.iter().map(|(w, c)| (w.clone(), -c)).collect();
                        t.insert(l.clone(), FieldElem::one());
                        (l.clone(), t)
                    })
                    .collect();
                partners.push((lead.clone(), element.clone()));
                for (l2, f2) in &partners {
                    for (a, fa, b, fb) in [(&lead, &element, l2, f2), (l2, f2, &lead, &element)] {
                        // suffix of a equals prefix of b
                        let (la, lb) = (a.len(), b.len());
                        for k in 1..la.min(lb) {
                            if la + lb - k > d {
                                continue;
                            }
                            if a.arrows()[la - k..] == b.arrows()[..k] {
                                let u = a.subword(&q, 0, la - k);
                                let v = b.subword(&q, k, lb);
                                let mut s = mul(&PathWord::vertex(a.head()), fa, &v);
                                for (w, c) in mul(&u, fb, &PathWord::vertex(b.tail())) {
                                    let e = s.entry(w.clone()).or_insert_with(FieldElem::zero);
                                    *e -= &c;
                                    if e.is_zero() {
                                        s.remove(&w);
                                    }
                                }
                                if !s.is_empty() {
                                    queue.push(s);
                                }
                            }
                        }
                    }
                }
            }
            // multiples pushed just past the bound whose shorter tail terms survive
            let min_tail = rule.tail.iter().map(|(w, _)| w.len()).min();
            if let Some(m) = min_tail {
                if m < lead.len() && lead.len() <= d {
                    let extra = d + 1 - lead.len();
                    for a in 0..=extra {
                        let b = extra - a;
                        for u in words[a].iter().filter(|u| u.tail() == lead.head()) {
                            for v in words[b].iter().filter(|v| v.head() == lead.tail()) {
                                let s = mul(u, &element, v);
                                if !s.is_empty() {
                                    queue.push(s);
                                }
                            }
                        }
                    }
                }
            }
            rules.insert(lead, rule.tail);
        }
        // interreduce tails
        let leads: Vec<PathWord> = rules.keys().cloned().collect();
        for l in leads {
            let tail = rules.remove(&l).unwrap();
            let t: Terms = tail.into_iter().collect();
            let reduced = Reducer::new(&q, &rules, d).reduce(t);
            rules.insert(l, reduced.into_iter().collect());
        }
        let homogeneous = p.relations().iter().all(|r| r.poly.is_homogeneous());
        let membership_bound = if homogeneous { d } else { d - needed };
        Ok(RewriteSystem {
            presentation: p.clone(),
            degree_bound: d,
            rules,
            complete_up_to: d,
            membership_bound,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    /// Degree up to which all ambiguities resolve in the truncated quotient.
    pub fn complete_up_to(&self) -> usize {
        self.complete_up_to
    }

    /// Degree up to which normal forms certify membership in `𝔦` itself.
    pub fn membership_bound(&self) -> usize {
        self.membership_bound
    }

    pub fn rules(&self) -> Vec<Rule> {
        self.rules
            .iter()
            .map(|(lead, tail)| Rule {
                lead: lead.clone(),
                tail: tail.clone(),
            })
            .collect()
    }

    pub fn rule_leads(&self) -> impl Iterator<Item = &PathWord> {
        self.rules.keys()
    }

    /// Whether some rule lead occurs in `w`.
    pub fn is_reducible(&self, w: &PathWord) -> bool {
        let r = Reducer::new(self.presentation.quiver(), &self.rules, self.degree_bound);
        find_divisor(r.q, r.rules, &r.vertex_leads, w).is_some()
    }

    /// The unique irreducible representative of `f` modulo the truncated ideal.
    pub fn normal_form(&self, f: &NCPoly) -> Result<NCPoly> {
        let q = self.presentation.quiver();
        if !crate::ncalg::same_quiver(f.quiver(), q) {
            return Err(Error::QuiverMismatch);
        }
        if let Some(deg) = f.max_degree() {
            if deg > self.complete_up_to {
                return Err(Error::DegreeExceedsBound {
                    degree: deg,
                    bound: self.complete_up_to,
                });
            }
        }
        let r = Reducer::new(q, &self.rules, self.degree_bound).reduce(f.terms().clone());
        Ok(NCPoly::from_terms(q, r))
    }

    /// Number of irreducible words of each length `0..=D`.
    pub fn graded_dims(&self) -> Vec<usize> {
        let q = self.presentation.quiver();
        let d = self.degree_bound;
        let mut dims = vec![0; d + 1];
        let reducer = Reducer::new(q, &self.rules, d);
        let mut stack: Vec<PathWord> = (0..q.num_vertices())
            .filter(|v| !reducer.vertex_leads.contains(v))
            .map(PathWord::vertex)
            .collect();
        while let Some(w) = stack.pop() {
            dims[w.len()] += 1;
            if w.len() == d {
                continue;
            }
            for (a, arr) in q.arrows().iter().enumerate() {
                if arr.head != w.tail() || reducer.vertex_leads.contains(&arr.tail) {
                    continue;
                }
                let nw = w.concat(&PathWord::arrow(q, a)).unwrap();
                let n = nw.len();
                let reducible = (0..n).any(|i| self.rules.contains_key(&nw.subword(q, i, n)));
                if !reducible {
                    stack.push(nw);
                }
            }
        }
        dims
    }
}
