//! Randomized invariants.

use std::collections::BTreeMap;
use std::sync::Arc;

use proptest::prelude::*;

use quivercone::deform::{geometric_inverse, ts_multiply, SymbolWord, TensorSeries};
use quivercone::dsl;
use quivercone::extcalc::{ext1_dim, Representation};
use quivercone::linalg::Matrix;
use quivercone::ncalg::{preprojective_relations, Flavor, NCPoly, PathWord, Presentation, Superpotential};
use quivercone::quiver::{DimVector, Quiver};
use quivercone::repvariety::{path_function, CommPoly};
use quivercone::rewrite::complete;
use quivercone::structure::{preprojective_form, PreprojectiveVerdict};
use quivercone::FieldElem;

fn two_loops() -> Arc<Quiver> {
    Arc::new(Quiver::loops(&["X", "Y"]))
}

fn kronecker() -> Arc<Quiver> {
    Arc::new(Quiver::from_parts(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2"), ("c", "2", "1")]).unwrap())
}

/// Polynomials in two loops: up to five terms of length `≤ 3` with small coefficients.
fn loop_poly() -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((prop::collection::vec(0usize..2, 0..=3), -3i64..=3, 1i64..=3), 0..=5).prop_map(|terms| {
        let q = two_loops();
        NCPoly::from_terms(
            &q,
            terms.into_iter().map(|(w, n, d)| {
                let word = if w.is_empty() {
                    PathWord::vertex(0)
                } else {
                    PathWord::from_arrows(&q, w).unwrap()
                };
                (word, FieldElem::ratio(n, d))
            }),
        )
    })
}

fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| {
        Matrix::from_vec(n, n, v.into_iter().map(FieldElem::from_int).collect())
    })
}

fn free_rep(n: usize) -> impl Strategy<Value = Representation> {
    (small_matrix(n), small_matrix(n)).prop_map(move |(x, y)| {
        let q = two_loops();
        let p = Arc::new(Presentation::from_relations(&q, vec![], Flavor::Graded).unwrap());
        let given = BTreeMap::from([("X".to_string(), x), ("Y".to_string(), y)]);
        Representation::new(p, DimVector(vec![n as u64]), given).unwrap()
    })
}

/// 2×2 series in two symbols truncated at order 3.
fn series() -> impl Strategy<Value = TensorSeries> {
    prop::collection::vec((prop::collection::vec(0usize..2, 0..=3), small_matrix(2)), 0..=4).prop_map(|terms| {
        let mut s = TensorSeries::zero(2, 2, 2, 3);
        for (w, m) in terms {
            s.add(SymbolWord(w), m);
        }
        s
    })
}

fn invertible_series() -> impl Strategy<Value = TensorSeries> {
    (series(), -3i64..=3).prop_map(|(s, shift)| {
        let mut s = s;
        let c0 = s.coeff(&SymbolWord::empty());
        // make the constant term c0 + kI invertible for some k
        for k in [shift, 5, 7, 11] {
            let m = c0.checked_add(&Matrix::scalar(2, FieldElem::from_int(k))).unwrap();
            if m.inverse().is_some() {
                s.add(SymbolWord::empty(), Matrix::scalar(2, FieldElem::from_int(k)));
                return s;
            }
        }
        unreachable!("c0 has at most two eigenvalues")
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn multiplication_is_associative(f in loop_poly(), g in loop_poly(), h in loop_poly()) {
        let left = f.multiply(&g).unwrap().multiply(&h).unwrap();
        let right = f.multiply(&g.multiply(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let one = NCPoly::one(f.quiver());
        prop_assert_eq!(f.multiply(&one).unwrap(), f.clone());
        prop_assert_eq!(one.multiply(&f).unwrap(), f);
    }

    #[test]
    fn polynomial_print_parse_round_trip(f in loop_poly()) {
        let back = NCPoly::parse(f.quiver(), &f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn session_print_is_a_fixpoint(rels in prop::collection::vec(loop_poly(), 1..=3), degree in 2usize..=6) {
        let body: Vec<String> = rels.iter().filter(|r| !r.is_zero()).map(ToString::to_string).collect();
        prop_assume!(!body.is_empty());
        let src = format!(
            "quiver Q {{ vertices: v; arrows: X: v -> v, Y: v -> v; }}\nalgebra A over Q {{ relations: {}; flavor: complete; }}\ngrideal A degree={degree};\n",
            body.join("; ")
        );
        let once = dsl::parse(&src).unwrap().to_string();
        let twice = dsl::parse(&once).unwrap().to_string();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn cyclic_derivative_ignores_rotation(words in prop::collection::vec((prop::collection::vec(0usize..2, 1..=5), 0usize..5, -3i64..=3), 1..=4)) {
        let q = two_loops();
        let mut w = Superpotential::zero(&q);
        let mut rotated = Superpotential::zero(&q);
        for (arrows, shift, c) in words {
            let s = shift % arrows.len();
            let mut r = arrows[s..].to_vec();
            r.extend_from_slice(&arrows[..s]);
            w.add_cycle(&PathWord::from_arrows(&q, arrows).unwrap(), FieldElem::from_int(c)).unwrap();
            rotated.add_cycle(&PathWord::from_arrows(&q, r).unwrap(), FieldElem::from_int(c)).unwrap();
        }
        for a in 0..2 {
            prop_assert_eq!(w.cyclic_derivative(a), rotated.cyclic_derivative(a));
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_kills_relations(rels in prop::collection::vec(loop_poly(), 1..=2), f in loop_poly()) {
        let rels: Vec<NCPoly> = rels.into_iter().filter(|r| !r.is_zero() && r.min_degree().unwrap() >= 1).collect();
        prop_assume!(!rels.is_empty());
        let q = two_loops();
        let p = Presentation::from_relations(&q, rels.clone(), Flavor::Complete).unwrap();
        let sys = complete(&p, 4).unwrap();
        let nf = sys.normal_form(&f).unwrap();
        prop_assert_eq!(sys.normal_form(&nf).unwrap(), nf.clone());
        for r in &rels {
            prop_assert!(sys.normal_form(r).unwrap().is_zero());
        }
        let mut diff = f.clone();
        diff.add_scaled(&FieldElem::from_int(-1), &nf);
        prop_assert!(sys.normal_form(&diff).unwrap().is_zero());
    }

    #[test]
    fn ext_is_additive(x in free_rep(1), y in free_rep(2), z in free_rep(1)) {
        let xy = x.direct_sum(&y).unwrap();
        prop_assert_eq!(
            ext1_dim(&xy, &z).unwrap(),
            ext1_dim(&x, &z).unwrap() + ext1_dim(&y, &z).unwrap()
        );
        prop_assert_eq!(
            ext1_dim(&z, &xy).unwrap(),
            ext1_dim(&z, &x).unwrap() + ext1_dim(&z, &y).unwrap()
        );
    }

    #[test]
    fn path_functions_multiply(u in prop::collection::vec(0usize..2, 1..=2), v in prop::collection::vec(0usize..2, 1..=2), r in free_rep(2)) {
        let q = two_loops();
        let alpha = DimVector(vec![2]);
        let pu = PathWord::from_arrows(&q, u.clone()).unwrap();
        let pv = PathWord::from_arrows(&q, v.clone()).unwrap();
        let uv = PathWord::from_arrows(&q, [u, v].concat()).unwrap();
        for i in 1..=2 {
            for j in 1..=2 {
                let mut sum = CommPoly::zero(&q);
                for k in 1..=2 {
                    let a = path_function(&q, &pu, i, k, &alpha).unwrap();
                    let b = path_function(&q, &pv, k, j, &alpha).unwrap();
                    sum.add_scaled(&FieldElem::one(), &a.mul(&b));
                }
                let f = path_function(&q, &uv, i, j, &alpha).unwrap();
                prop_assert_eq!(&f, &sum);
                prop_assert_eq!(f.eval(&r), r.path_matrix(&uv).get(i - 1, j - 1).clone());
            }
        }
    }

    #[test]
    fn preprojective_form_survives_arrow_rescaling(scales in prop::collection::vec(prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3, 5]), 6)) {
        let qd = Arc::new(kronecker().double());
        let rels = preprojective_relations(&qd).unwrap();
        // substitute a ↦ c_a a in every relation
        let scaled: Vec<NCPoly> = rels
            .iter()
            .map(|r| {
                NCPoly::from_terms(&qd, r.terms().iter().map(|(w, c)| {
                    let f = w.arrows().iter().fold(c.clone(), |acc, &a| acc * FieldElem::from_int(scales[a]));
                    (w.clone(), f)
                }))
            })
            .collect();
        match preprojective_form(&qd, &scaled).unwrap() {
            PreprojectiveVerdict::Yes(form) => prop_assert!(form.pairing.is_antisymmetric()),
            PreprojectiveVerdict::No(w) => prop_assert!(false, "rejected: {}", w.describe()),
        }
    }

    #[test]
    fn symmetric_pairing_is_rejected(c in prop::sample::select(vec![1i64, 2, 3])) {
        // X*Y + c*Y*X at a single vertex gives g symmetric, never antisymmetric after scaling
        let q = two_loops();
        let r = NCPoly::parse(&q, &format!("X*Y + {c}*Y*X")).unwrap();
        let verdict = preprojective_form(&q, &[r]).unwrap();
        prop_assert!(!verdict.is_yes());
    }

    #[test]
    fn series_multiplication_is_associative(a in series(), b in series(), c in series()) {
        let left = ts_multiply(&ts_multiply(&a, &b).unwrap(), &c).unwrap();
        let right = ts_multiply(&a, &ts_multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let one = TensorSeries::identity(2, 2, 3);
        prop_assert_eq!(ts_multiply(&a, &one).unwrap(), a);
    }

    #[test]
    fn geometric_inverse_is_two_sided(s in invertible_series()) {
        let inv = geometric_inverse(&s).unwrap();
        let one = TensorSeries::identity(2, 2, 3);
        prop_assert_eq!(ts_multiply(&s, &inv).unwrap(), one.clone());
        prop_assert_eq!(ts_multiply(&inv, &s).unwrap(), one);
    }
}
