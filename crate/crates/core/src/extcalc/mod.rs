//! Hom and Ext¹ between finite-dimensional representations, simplicity
//! certificates, and the local quiver of a semisimple module.

mod ext;
mod local;
mod representation;

pub use ext::{ext1, ext1_dim, hom_dim, image_dim, is_simple, Ext1Report, SemisimpleModule};
pub use local::{local_quiver, LocalQuiverResult};
pub(crate) use representation::same_presentation_ref;
pub use representation::{check_representation, RepCheck, Representation};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::FieldElem;
    use crate::linalg::Matrix;
    use crate::ncalg::{group_algebra_presentation, GroupKind, Presentation};
    use crate::quiver::{surface_local_quiver, DimVector, Quiver};

    fn scalar_rep(p: &Arc<Presentation>, values: &[(&str, i64)]) -> Representation {
        let given = values
            .iter()
            .map(|(a, v)| (a.to_string(), Matrix::from_ints(&[&[*v]])))
            .collect();
        Representation::new(p.clone(), DimVector(vec![1]), given).unwrap()
    }

    fn surface(g: u32) -> Arc<Presentation> {
        Arc::new(group_algebra_presentation(GroupKind::Surface(g)).unwrap())
    }

    fn trivial(p: &Arc<Presentation>, g: u32, x1: i64) -> Representation {
        let mut vals = vec![];
        let names: Vec<String> = (1..=g).flat_map(|i| [format!("X{i}"), format!("Y{i}")]).collect();
        for n in &names {
            vals.push((n.as_str(), if n == "X1" { x1 } else { 1 }));
        }
        scalar_rep(p, &vals)
    }

    #[test]
    fn heisenberg_rho_checks() {
        let p = Arc::new(group_algebra_presentation(GroupKind::Heisenberg).unwrap());
        let r = Representation::heisenberg_rho(p.clone(), 2, FieldElem::one(), FieldElem::one()).unwrap();
        assert_eq!(r.matrix(0), &Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        assert!(check_representation(&r).unwrap().ok);
        assert!(is_simple(&r).unwrap());
        let e = ext1(&r, &r).unwrap();
        assert_eq!((e.dim, e.hom), (2, 1));
        let r3 = Representation::heisenberg_rho(p, 3, FieldElem::one(), FieldElem::one()).unwrap();
        assert!(check_representation(&r3).unwrap().ok);
        assert_eq!(ext1_dim(&r3, &r3).unwrap(), 2);
    }

    #[test]
    fn failed_check_reports_relation() {
        let q = Arc::new(Quiver::loops(&["x"]));
        let p = Arc::new(Presentation::parse(&q, &["x^2"]).unwrap());
        let r = scalar_rep(&p, &[("x", 1)]);
        let c = check_representation(&r).unwrap();
        assert!(!c.ok);
        assert_eq!(c.failures[0].0, "r1");
    }

    #[test]
    fn surface_ext_counts() {
        let p = surface(2);
        let t = trivial(&p, 2, 1);
        let chi = trivial(&p, 2, 2);
        assert!(check_representation(&chi).unwrap().ok);
        assert_eq!(ext1_dim(&t, &t).unwrap(), 4);
        let e = ext1(&chi, &t).unwrap();
        assert_eq!((e.z1, e.b1, e.dim), (3, 1, 2));
        assert_eq!(hom_dim(&chi, &t).unwrap(), 0);
        let m = SemisimpleModule::new(vec![(t, 1), (chi, 1)]).unwrap();
        let lq = local_quiver(&m).unwrap();
        assert_eq!(lq.ext1_matrix, vec![vec![4, 2], vec![2, 4]]);
        assert_eq!(lq.quiver, surface_local_quiver(2, &[1, 1]).unwrap().0);
        let p1 = surface(1);
        let m1 = SemisimpleModule::new(vec![(trivial(&p1, 1, 1), 1), (trivial(&p1, 1, 2), 1)]).unwrap();
        assert_eq!(local_quiver(&m1).unwrap().ext1_matrix, vec![vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn hom_additivity_and_simplicity() {
        let q = Arc::new(Quiver::loops(&["X", "Y"]));
        let p = Arc::new(Presentation::from_relations(&q, vec![], crate::ncalg::Flavor::Graded).unwrap());
        let s = scalar_rep(&p, &[("X", 1), ("Y", 2)]);
        let s2 = s.direct_sum(&s).unwrap();
        assert_eq!(hom_dim(&s2, &s).unwrap(), 2);
        assert_eq!(ext1_dim(&s, &s).unwrap(), 2);
        assert!(!is_simple(&s2).unwrap());
        assert!(SemisimpleModule::new(vec![(s.clone(), 1), (s.clone(), 2)]).is_err());
        let m = SemisimpleModule::new(vec![(s, 3)]).unwrap();
        let lq = local_quiver(&m).unwrap();
        assert_eq!(lq.quiver.num_arrows(), 2);
        assert_eq!(lq.alpha, DimVector(vec![3]));
    }

    #[test]
    fn json_roundtrip() {
        let q = Arc::new(Quiver::from_parts(&["1", "2"], &[("a", "1", "2")]).unwrap());
        let p = Arc::new(Presentation::from_relations(&q, vec![], crate::ncalg::Flavor::Graded).unwrap());
        let v = serde_json::json!({"alpha": {"1": 1, "2": 2}, "matrices": {"a": [["1/2"], [3]]}, "field": "q"});
        let r = Representation::from_json(p.clone(), &v).unwrap();
        assert_eq!(r.matrix(0).get(0, 0), &FieldElem::ratio(1, 2));
        assert_eq!(Representation::from_json(p, &r.to_json()).unwrap(), r);
    }
}
