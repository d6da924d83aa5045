//! One test per acceptance criterion. Each prints a single PASS/FAIL line with
//! its tolerance and timing; timings are measured with the tests serialized.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use quivercone::deform::{expand_relation, tangent_cone_relations, FamilyPattern, FamilySpec};
use quivercone::extcalc::{ext1, ext1_dim, local_quiver, Representation, SemisimpleModule};
use quivercone::linalg::Matrix;
use quivercone::ncalg::{
    group_algebra_presentation, preprojective_relations, Flavor, GroupKind, NCPoly, PathWord,
    Presentation, Superpotential,
};
use quivercone::quiver::{cb_arrow_count, surface_local_quiver, DimVector, Quiver};
use quivercone::repvariety::tangent_space_dim;
use quivercone::rewrite::{complete, gr_ideal};
use quivercone::session::{Options, Session};
use quivercone::structure::{preprojective_form, superpotential_form, PreprojectiveVerdict, SuperpotentialVerdict};
use quivercone::FieldElem;

static SERIAL: Mutex<()> = Mutex::new(());

fn verdict(n: u32, what: &str, ok: bool, detail: &str, elapsed: Duration, limit: Duration) {
    let pass = ok && elapsed < limit;
    let line = format!(
        "{} criterion {n}: {what}; {detail}; {:.3}s (limit {:.1}s)\n",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs_f64()
    );
    let mut out = std::io::stdout().lock();
    out.write_all(line.as_bytes()).unwrap();
    out.flush().unwrap();
    assert!(ok, "criterion {n} failed: {detail}");
    assert!(elapsed < limit, "criterion {n} exceeded its time limit");
}

fn shown(ps: &[NCPoly]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

#[test]
fn criterion_1_gradability_golden() {
    let _g = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let xyz = Arc::new(Quiver::loops(&["X", "Y", "Z"]));
    let rels = ["X*Y + Z^3", "Y*X + Z^3"].map(|s| NCPoly::parse(&xyz, s).unwrap());
    let p = Presentation::from_relations(&xyz, rels.to_vec(), Flavor::Complete).unwrap();
    let t = Instant::now();
    let r = gr_ideal(&p, 5).unwrap();
    let t1 = t.elapsed();
    let ok1 = shown(&r.generators) == ["X*Y", "Y*X", "X*Z^3 - Z^3*X", "Y*Z^3 - Z^3*Y"] && !r.gradable;

    let xy = Arc::new(Quiver::loops(&["X", "Y"]));
    let rels = ["X*Y + X*Y*X", "Y*X + X*Y*X"].map(|s| NCPoly::parse(&xy, s).unwrap());
    let p = Presentation::from_relations(&xy, rels.to_vec(), Flavor::Complete).unwrap();
    let t = Instant::now();
    let r2 = gr_ideal(&p, 5).unwrap();
    let t2 = t.elapsed();
    let ok2 = shown(&r2.generators) == ["X*Y", "Y*X"] && r2.gradable;
    verdict(
        1,
        "gr ideals at D=5",
        ok1 && ok2,
        &format!(
            "exact generator match; {:?} gradable={}, {:?} gradable={}; per-case {:.3}s/{:.3}s < 1s",
            shown(&r.generators),
            r.gradable,
            shown(&r2.generators),
            r2.gradable,
            t1.as_secs_f64(),
            t2.as_secs_f64()
        ),
        t1.max(t2),
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_cyclic_derivative_golden() {
    let _g = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let golden = include_str!("golden/cyclic_derivatives.txt");
    let t = Instant::now();
    let session = Session::from_source(
        "quiver Q { vertices: v; arrows: X: v -> v, Y: v -> v; }\nspderiv Q \"X^2*Y^2 - X*Y*X*Y\";",
        Options::default(),
    )
    .unwrap();
    let reports = session.run();
    let text = reports[0].outcome.as_ref().unwrap().text.clone();
    let q = Arc::new(Quiver::loops(&["X", "Y"]));
    let w = Superpotential::parse(&q, "X^2*Y^2 - X*Y*X*Y").unwrap();
    let direct = format!("d_X = {}\nd_Y = {}\n", w.cyclic_derivative(0), w.cyclic_derivative(1));
    let elapsed = t.elapsed();
    verdict(
        2,
        "cyclic derivatives of X^2Y^2 - XYXY",
        text == golden && direct == golden,
        "byte-exact against the golden file (session and library paths)",
        elapsed,
        Duration::from_millis(100),
    );
}

#[test]
fn criterion_3_heisenberg_pipeline() {
    let _g = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let t = Instant::now();
    let p = Arc::new(group_algebra_presentation(GroupKind::Heisenberg).unwrap());
    let base = Representation::heisenberg_rho(p.clone(), 2, FieldElem::one(), FieldElem::one()).unwrap();
    let fs = FamilySpec::new(base, FamilyPattern::Unit, 3, None).unwrap();
    let tq = Arc::new(fs.symbol_quiver().unwrap());
    let w = Superpotential::parse(&tq, "T1^2*T2^2 - T1*T2*T1*T2").unwrap();
    let (d1, d2) = (w.cyclic_derivative(0), w.cyclic_derivative(1));

    let mut low_zero = true;
    let mut cubic = Vec::new();
    for r in p.relations().iter().filter(|r| !r.unit) {
        let s = expand_relation(&fs, &r.poly).unwrap();
        low_zero &= (0..=2).all(|d| s.degree_part(d).is_empty());
        let terms: Vec<(PathWord, FieldElem)> = s
            .scalar_collapse()
            .expect("scalar coefficients")
            .into_iter()
            .filter(|(w, _)| w.len() == 3)
            .map(|(w, c)| (PathWord::from_arrows(&tq, w.0).unwrap(), c))
            .collect();
        cubic.push(NCPoly::from_terms(&tq, terms));
    }
    // each cubic part is a nonzero multiple of one derivative
    let multiple = |f: &NCPoly, g: &NCPoly| -> Option<FieldElem> {
        let (w, c) = g.leading()?;
        let lambda = &f.coeff(w) * &c.inv()?;
        (!lambda.is_zero() && *f == g.scale(&lambda)).then_some(lambda)
    };
    let l1 = multiple(&cubic[0], &d2);
    let l2 = multiple(&cubic[1], &d1);
    let cone = tangent_cone_relations(&fs).unwrap();
    let elapsed = t.elapsed();
    verdict(
        3,
        "Heisenberg rho_{1,1}, n=2, unit family, K=3",
        low_zero && l1.is_some() && l2.is_some() && cone.gradable,
        &format!(
            "degree<=2 exactly zero: {low_zero}; cubic parts = ({}) * d_T2 W and ({}) * d_T1 W with rho(XYX^-1Y^-1) = -I; gradable at 3: {}",
            l1.map_or("none".into(), |x| x.to_string()),
            l2.map_or("none".into(), |x| x.to_string()),
            cone.gradable
        ),
        elapsed,
        Duration::from_secs(5),
    );
}

fn character(p: &Arc<Presentation>, values: &[(&str, i64)]) -> Representation {
    let given = values
        .iter()
        .map(|(a, v)| (a.to_string(), Matrix::from_ints(&[&[*v]])))
        .collect();
    Representation::new(p.clone(), DimVector(vec![1]), given).unwrap()
}

#[test]
fn criterion_4_surface_local_quiver() {
    let _g = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let t = Instant::now();
    let p2 = Arc::new(group_algebra_presentation(GroupKind::Surface(2)).unwrap());
    let triv = character(&p2, &[("X1", 1), ("Y1", 1), ("X2", 1), ("Y2", 1)]);
    let chi = character(&p2, &[("X1", 2), ("Y1", 1), ("X2", 1), ("Y2", 1)]);
    let e = [
        [ext1_dim(&triv, &triv).unwrap(), ext1_dim(&triv, &chi).unwrap()],
        [ext1_dim(&chi, &triv).unwrap(), ext1_dim(&chi, &chi).unwrap()],
    ];
    let m = SemisimpleModule::new(vec![(triv, 1), (chi, 1)]).unwrap();
    let lq = local_quiver(&m).unwrap();
    let (expected, alpha) = surface_local_quiver(2, &[1, 1]).unwrap();
    let same = lq.quiver == expected && lq.alpha == alpha;

    let p1 = Arc::new(group_algebra_presentation(GroupKind::Surface(1)).unwrap());
    let a = character(&p1, &[("X1", 1), ("Y1", 1)]);
    let b = character(&p1, &[("X1", 2), ("Y1", 3)]);
    let cross1 = (ext1_dim(&a, &b).unwrap(), ext1_dim(&b, &a).unwrap());
    let elapsed = t.elapsed();
    verdict(
        4,
        "surface-group local quivers",
        e == [[4, 2], [2, 4]] && same && cross1 == (0, 0),
        &format!("g=2 Ext1 matrix {e:?}, equals surface_local_quiver(2,[1,1]): {same}; g=1 cross arrows {cross1:?}"),
        elapsed,
        Duration::from_secs(5),
    );
}

/// Words of length `≤ d` in `k` loops.
fn loop_words(k: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..k {
                let mut v: Vec<usize> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn word(q: &Arc<Quiver>, w: &[usize]) -> PathWord {
    if w.is_empty() {
        PathWord::vertex(0)
    } else {
        PathWord::from_arrows(q, w.to_vec()).unwrap()
    }
}

fn random_matrix(rng: &mut StdRng, n: usize) -> Matrix {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| FieldElem::from_int(rng.gen_range(-2..=2))).collect())
        .collect();
    Matrix::from_rows(rows).unwrap()
}

#[test]
fn criterion_5_ext_vs_jacobian() {
    let _g = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    let t = Instant::now();
    let mut instances = 0;
    let mut mismatches = Vec::new();
    while instances < 24 {
        let k = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=3);
        let names: Vec<String> = (0..k).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let q = Arc::new(Quiver::loops(&refs));
        let mats: Vec<Matrix> = (0..k).map(|_| random_matrix(&mut rng, n)).collect();
        // relations vanishing at the chosen point: kernel of word evaluation
        let words = loop_words(k, 3);
        let evals: Vec<Matrix> = words
            .iter()
            .map(|w| w.iter().fold(Matrix::identity(n), |acc, &a| &acc * &mats[a]))
            .collect();
        let mut m = Matrix::zeros(n * n, words.len());
        for (c, e) in evals.iter().enumerate() {
            for (r, x) in e.entries().iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        let kernel = m.nullspace();
        if kernel.is_empty() {
            continue;
        }
        let count = rng.gen_range(1..=2);
        let mut rels = Vec::new();
        for _ in 0..count {
            let mut coeffs = vec![FieldElem::zero(); words.len()];
            for b in &kernel {
                let c = FieldElem::from_int(rng.gen_range(-2..=2));
                for (x, y) in coeffs.iter_mut().zip(b) {
                    *x += &(&c * y);
                }
            }
            let poly = NCPoly::from_terms(&q, words.iter().zip(coeffs).map(|(w, c)| (word(&q, w), c)));
            if !poly.is_zero() {
                rels.push(poly);
            }
        }
        if rels.is_empty() {
            continue;
        }
        let p = Arc::new(Presentation::from_relations(&q, rels, Flavor::Complete).unwrap());
        let given: BTreeMap<String, Matrix> = names.iter().cloned().zip(mats).collect();
        let rep = Representation::new(p.clone(), DimVector(vec![n as u64]), given).unwrap();
        let tangent = tangent_space_dim(&p, &rep).unwrap();
        let z1 = ext1(&rep, &rep).unwrap().z1;
        if tangent != z1 {
            mismatches.push((k, n, tangent, z1));
        }
        instances += 1;
    }
    let elapsed = t.elapsed();
    verdict(
        5,
        "tangent_space_dim equals dim Z1",
        mismatches.is_empty(),
        &format!("{instances} random instances (<=3 loops, degree <=3, alpha <=3), exact equality; mismatches {mismatches:?}"),
        elapsed,
        Duration::from_secs(30),
    );
}

/// All arrow multisets on `n` vertices with at most `max` arrows, up to relabelling vertices.
fn quivers_up_to_iso(n: usize, max: usize) -> Vec<Vec<(usize, usize)>> {
    let types: Vec<(usize, usize)> = (0..n).flat_map(|t| (0..n).map(move |h| (t, h))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<(usize, usize)>, usize)> = vec![(vec![], 0)];
    while let Some((arrows, start)) = stack.pop() {
        let canon = perms
            .iter()
            .map(|p| {
                let mut v: Vec<(usize, usize)> = arrows.iter().map(|&(t, h)| (p[t], p[h])).collect();
                v.sort();
                v
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(arrows.clone());
        }
        if arrows.len() < max {
            for (i, &ty) in types.iter().enumerate().skip(start) {
                let mut next = arrows.clone();
                next.push(ty);
                stack.push((next, i));
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn random_cycle(rng: &mut StdRng, q: &Quiver, len: usize) -> Option<PathWord> {
    let start = rng.gen_range(0..q.num_vertices());
    let mut arrows = Vec::new();
    // build a₁a₂⋯ from the head side: t(a_i) = h(a_{i+1})
    let mut at = start;
    for i in 0..len {
        let choices: Vec<usize> = (0..q.num_arrows())
            .filter(|&a| q.arrow(a).head == at && (i + 1 < len || q.arrow(a).tail == start))
            .collect();
        if choices.is_empty() {
            return None;
        }
        let a = choices[rng.gen_range(0..choices.len())];
        arrows.push(a);
        at = q.arrow(a).tail;
    }
    PathWord::from_arrows(q, arrows).ok()
}

#[test]
fn criterion_6_preprojective_and_superpotential_round_trips() {
    let _g = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let t = Instant::now();
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=4 {
        for arrows in quivers_up_to_iso(n, 6) {
            let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let mut q = Quiver::new();
            for v in &names {
                q.add_vertex(v).unwrap();
            }
            for (i, &(t, h)) in arrows.iter().enumerate() {
                q.add_arrow(&format!("a{i}"), &names[t], &names[h]).unwrap();
            }
            let qd = Arc::new(q.double());
            let rels = preprojective_relations(&qd).unwrap();
            let ok = match preprojective_form(&qd, &rels).unwrap() {
                PreprojectiveVerdict::Yes(f) => {
                    f.is_identity() && f.pairs == qd.pairing().unwrap() && f.pairing.is_antisymmetric()
                }
                PreprojectiveVerdict::No(_) => false,
            };
            if !ok {
                failures.push(arrows.clone());
            }
            checked += 1;
        }
    }

    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let mut sp_checked = 0;
    let mut sp_failures = 0;
    let shapes: [(&[&str], &[(&str, &str, &str)]); 3] = [
        (&["v"], &[("X", "v", "v"), ("Y", "v", "v")]),
        (&["v"], &[("X", "v", "v"), ("Y", "v", "v"), ("Z", "v", "v")]),
        (&["1", "2"], &[("a", "1", "2"), ("b", "2", "1"), ("c", "2", "1"), ("l", "1", "1")]),
    ];
    while sp_checked < 30 {
        let (vs, arrs) = shapes[sp_checked % shapes.len()];
        let q = Arc::new(Quiver::from_parts(vs, arrs).unwrap());
        let mut w = Superpotential::zero(&q);
        for _ in 0..rng.gen_range(1..=4) {
            let len = rng.gen_range(1..=5);
            if let Some(c) = random_cycle(&mut rng, &q, len) {
                let coeff = FieldElem::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3));
                w.add_cycle(&c, coeff).unwrap();
            }
        }
        let rels: Vec<NCPoly> = (0..q.num_arrows()).map(|a| w.cyclic_derivative(a)).collect();
        let good = match superpotential_form(&q, &rels).unwrap() {
            SuperpotentialVerdict::Yes(w2) => (0..q.num_arrows()).all(|a| w2.cyclic_derivative(a) == rels[a]),
            SuperpotentialVerdict::No(_) => false,
        };
        if !good {
            sp_failures += 1;
        }
        sp_checked += 1;
    }
    let elapsed = t.elapsed();
    verdict(
        6,
        "preprojective and superpotential round trips",
        failures.is_empty() && sp_failures == 0,
        &format!(
            "{checked} quivers (<=4 vertices, <=6 arrows, up to isomorphism) with identity scalars, base change and pairing; failures {}; {sp_checked} random W of degree <=5, failures {sp_failures}",
            failures.len()
        ),
        elapsed,
        Duration::from_secs(30),
    );
}

/// `dim` per length of the words that are not leading words of `(𝔦 + 𝒲^{D+1})/𝒲^{D+1}`,
/// from an elimination over the full word basis.
fn oracle_dims(q: &Arc<Quiver>, rels: &[NCPoly], d: usize) -> Vec<usize> {
    let k = q.num_arrows();
    let words = loop_words(k, d);
    // columns in decreasing deglex order, so the first nonzero column of a row is its leading word
    let mut cols: Vec<PathWord> = words.iter().map(|w| word(q, w)).collect();
    cols.sort();
    cols.reverse();
    let index: BTreeMap<PathWord, usize> = cols.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut rows = Vec::new();
    for r in rels {
        let deg_min = r.min_degree().unwrap();
        for u in words.iter().filter(|u| u.len() + deg_min <= d) {
            for v in words.iter().filter(|v| u.len() + v.len() + deg_min <= d) {
                let mut row = vec![FieldElem::zero(); cols.len()];
                for (w, c) in r.terms() {
                    if u.len() + w.len() + v.len() > d {
                        continue;
                    }
                    let mut full = u.clone();
                    full.extend_from_slice(w.arrows());
                    full.extend_from_slice(v);
                    row[index[&word(q, &full)]] += c;
                }
                rows.push(row);
            }
        }
    }
    let pivots: BTreeSet<usize> = if rows.is_empty() {
        BTreeSet::new()
    } else {
        Matrix::from_rows(rows).unwrap().rref().1.into_iter().collect()
    };
    let mut dims = vec![0; d + 1];
    for (i, w) in cols.iter().enumerate() {
        if !pivots.contains(&i) {
            dims[w.len()] += 1;
        }
    }
    dims
}

#[test]
fn criterion_7_truncated_rewrite_oracle() {
    let _g = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let t = Instant::now();
    let mut cases = Vec::new();
    let mut bad = Vec::new();
    for case in 0..40 {
        let k = rng.gen_range(1..=2);
        let names: Vec<String> = (0..k).map(|i| ["X", "Y"][i].to_string()).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let q = Arc::new(Quiver::loops(&refs));
        let d = rng.gen_range(2..=4);
        let homogeneous = case % 2 == 0;
        let mut rels = Vec::new();
        for _ in 0..rng.gen_range(1..=2) {
            let lo = rng.gen_range(2..=d.min(3));
            let hi = if homogeneous { lo } else { rng.gen_range(lo..=d) };
            let terms: Vec<(PathWord, FieldElem)> = loop_words(k, hi)
                .into_iter()
                .filter(|w| w.len() >= lo)
                .filter_map(|w| {
                    let c = if rng.gen_bool(0.5) { rng.gen_range(-2..=2) } else { 0 };
                    (c != 0).then(|| (word(&q, &w), FieldElem::from_int(c)))
                })
                .collect();
            let poly = NCPoly::from_terms(&q, terms);
            if !poly.is_zero() {
                rels.push(poly);
            }
        }
        if rels.is_empty() || rels.iter().map(|r| r.max_degree().unwrap()).max().unwrap() > d {
            continue;
        }
        let flavor = if rels.iter().all(NCPoly::is_homogeneous) { Flavor::Graded } else { Flavor::Complete };
        let p = Presentation::from_relations(&q, rels.clone(), flavor).unwrap();
        let got = complete(&p, d).unwrap().graded_dims();
        let want = oracle_dims(&q, &rels, d);
        if got != want {
            bad.push((shown(&rels), d, got.clone(), want));
        }
        cases.push(homogeneous);
    }
    let elapsed = t.elapsed();
    verdict(
        7,
        "graded_dims against exhaustive elimination",
        cases.len() >= 10 && bad.is_empty(),
        &format!(
            "{} random presentations on <=2 loops with D<=4 ({} inhomogeneous), exact equality; mismatches {bad:?}",
            cases.len(),
            cases.iter().filter(|h| !**h).count()
        ),
        elapsed,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_8_crawley_boevey_formula() {
    let _g = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let dv = |v: &[u64]| DimVector(v.to_vec());
    let one_loop = Quiver::loops(&["x"]).double();
    let two_loops = Quiver::loops(&["x", "y"]).double();
    let three_loops = Quiver::loops(&["x", "y", "z"]).double();
    let a2 = Quiver::from_parts(&["1", "2"], &[("a", "1", "2")]).unwrap().double();
    // values evaluated by hand from 2[i=j] + Σ_a α^i(h a) α^j(t a) − 2 Σ_v α^i(v) α^j(v)
    let cases: Vec<(&Quiver, Vec<DimVector>, usize, usize, i64)> = vec![
        (&one_loop, vec![dv(&[1])], 0, 0, 2),
        (&one_loop, vec![dv(&[2])], 0, 0, 2),
        (&two_loops, vec![dv(&[1])], 0, 0, 4),
        (&two_loops, vec![dv(&[3])], 0, 0, 20),
        (&a2, vec![dv(&[1, 1])], 0, 0, 0),
        (&three_loops, vec![dv(&[2])], 0, 0, 18),
        (&one_loop, vec![dv(&[1]), dv(&[1])], 0, 1, 0),
        (&a2, vec![dv(&[1, 0]), dv(&[0, 1])], 0, 1, 1),
    ];
    let t = Instant::now();
    let got: Vec<i64> = cases
        .iter()
        .map(|(q, dims, i, j, _)| cb_arrow_count(q, dims, *i, *j).unwrap())
        .collect();
    let elapsed = t.elapsed();
    let want: Vec<i64> = cases.iter().map(|c| c.4).collect();
    verdict(
        8,
        "local-quiver arrow counts for preprojective algebras",
        got == want,
        &format!("{} hand-evaluated inputs, exact; got {got:?}", cases.len()),
        elapsed,
        Duration::from_millis(100),
    );
}
