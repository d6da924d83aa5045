//! Path algebras: words, noncommutative polynomials, superpotential calculus,
//! and presentations `ℂQ / ⟨r_i⟩`.

mod poly;
mod presentation;
mod superpotential;
mod word;

pub use poly::NCPoly;
pub(crate) use poly::same_quiver;

pub use presentation::{
    adjoin_inverses, group_algebra_presentation, inverse_name, preprojective_presentation,
    preprojective_relations, superpotential_relations, Flavor, GroupKind, Presentation, Relation,
};
pub use superpotential::{cyclic_derivative, cyclic_symmetrize, Superpotential};
pub use word::PathWord;

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::FieldElem;
    use crate::quiver::Quiver;

    fn xy() -> Arc<Quiver> {
        Arc::new(Quiver::loops(&["X", "Y"]))
    }

    fn p(q: &Arc<Quiver>, s: &str) -> NCPoly {
        NCPoly::parse(q, s).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let q = Arc::new(Quiver::from_parts(&["1", "2"], &[("a", "2", "1")]).unwrap());
        let a = p(&q, "a");
        assert_eq!(&p(&q, "e_1") * &a, a);
        assert!((&p(&q, "e_2") * &a).is_zero());
        assert!((&a * &a).is_zero());
        let q = xy();
        assert_eq!(&p(&q, "X + Y") * &p(&q, "X - Y"), p(&q, "X^2 - X*Y + Y*X - Y^2"));
    }

    #[test]
    fn multiply_rejects_foreign_quiver() {
        let a = p(&xy(), "X");
        let b = p(&Arc::new(Quiver::loops(&["Z"])), "Z");
        assert_eq!(a.multiply(&b), Err(crate::error::Error::QuiverMismatch));
    }

    #[test]
    fn min_part_examples() {
        let q = xy();
        assert_eq!(p(&q, "X*Y + X*Y*X").min_part().unwrap(), p(&q, "X*Y"));
        assert_eq!(p(&q, "X*Y - Y*X").min_part().unwrap(), p(&q, "X*Y - Y*X"));
        assert_eq!(p(&q, "e_v + X").min_part().unwrap(), p(&q, "e_v"));
        assert!(NCPoly::zero(&q).min_part().is_err());
        assert_eq!(p(&q, "X + X*Y*X").max_degree(), Some(3));
        assert_eq!(p(&q, "X + X*Y*X").min_degree(), Some(1));
    }

    #[test]
    fn symmetrize_examples() {
        let q = xy();
        let w = Superpotential::parse(&q, "X*Y").unwrap();
        assert_eq!(w.cyclic_symmetrize(), p(&q, "X*Y + Y*X"));
        let w = Superpotential::parse(&q, "X^2*Y^2").unwrap();
        assert_eq!(
            w.cyclic_symmetrize(),
            p(&q, "X*X*Y*Y + X*Y*Y*X + Y*Y*X*X + Y*X*X*Y")
        );
        let w = Superpotential::parse(&q, "X*Y*X*Y").unwrap();
        assert_eq!(w.cyclic_symmetrize(), p(&q, "2*X*Y*X*Y + 2*Y*X*Y*X"));
    }

    #[test]
    fn strip_examples() {
        let q = xy();
        let (x, y) = (0, 1);
        assert_eq!(p(&q, "X*Y").right_strip(y), p(&q, "X"));
        assert!(p(&q, "X*Y").right_strip(x).is_zero());
        assert_eq!(p(&q, "2*X*Y*X + Y*X").right_strip(x), p(&q, "2*X*Y + Y"));
        assert_eq!(p(&q, "X*Y").left_strip(x), p(&q, "Y"));
    }

    #[test]
    fn derivative_examples() {
        let q = xy();
        let w = Superpotential::parse(&q, "X^2*Y^2 - X*Y*X*Y").unwrap();
        assert_eq!(
            cyclic_derivative(&w, "X").unwrap(),
            p(&q, "X*Y*Y + Y*Y*X - 2*Y*X*Y")
        );
        assert_eq!(
            cyclic_derivative(&w, "Y").unwrap(),
            p(&q, "X*X*Y + Y*X*X - 2*X*Y*X")
        );
        let w = Superpotential::parse(&q, "X*Y").unwrap();
        assert_eq!(cyclic_derivative(&w, "X").unwrap(), p(&q, "Y"));
        let q3 = Arc::new(Quiver::loops(&["X", "Y", "Z"]));
        let w = Superpotential::parse(&q3, "X*Y").unwrap();
        assert!(cyclic_derivative(&w, "Z").unwrap().is_zero());
    }

    #[test]
    fn derivative_display() {
        let q = xy();
        let w = Superpotential::parse(&q, "X^2*Y^2 - X*Y*X*Y").unwrap();
        assert_eq!(
            cyclic_derivative(&w, "X").unwrap().to_string(),
            "X*Y^2 - 2*Y*X*Y + Y^2*X"
        );
    }

    #[test]
    fn non_cycles_are_not_superpotentials() {
        let q = Arc::new(Quiver::from_parts(&["1", "2"], &[("a", "2", "1")]).unwrap());
        assert!(Superpotential::parse(&q, "a").is_err());
        assert!(Superpotential::parse(&q, "e_1").is_err());
    }

    #[test]
    fn preprojective_examples() {
        let d = Arc::new(Quiver::loops(&["x"]).double());
        let r = preprojective_relations(&d).unwrap();
        assert_eq!(r, vec![p(&d, "x*x' - x'*x")]);

        let a2 = Quiver::from_parts(&["1", "2"], &[("a", "2", "1")]).unwrap();
        let d = Arc::new(a2.double());
        let r = preprojective_relations(&d).unwrap();
        assert_eq!(r, vec![p(&d, "a*a'"), p(&d, "-a'*a")]);

        let g2 = Arc::new(Quiver::loops(&["X1", "Y1", "X2", "Y2"]).double());
        assert_eq!(preprojective_relations(&g2).unwrap()[0].len(), 8);
        assert!(preprojective_relations(&xy()).is_err());
    }

    #[test]
    fn superpotential_presentation_examples() {
        let q = xy();
        let w = Superpotential::parse(&q, "X^2*Y^2 - X*Y*X*Y").unwrap();
        let pres = superpotential_relations(&w).unwrap();
        assert_eq!(
            pres.polys(),
            vec![
                p(&q, "X*Y*Y + Y*Y*X - 2*Y*X*Y"),
                p(&q, "Y*X*X + X*X*Y - 2*X*Y*X")
            ]
        );
        let qx = Arc::new(Quiver::loops(&["X"]));
        let w = Superpotential::parse(&qx, "1/2*X^2").unwrap();
        assert_eq!(superpotential_relations(&w).unwrap().polys(), vec![p(&qx, "X")]);
        let w = Superpotential::zero(&q);
        assert!(superpotential_relations(&w).unwrap().relations().is_empty());
    }

    #[test]
    fn group_presentations() {
        let s1 = group_algebra_presentation(GroupKind::Surface(1)).unwrap();
        assert_eq!(s1.quiver().num_arrows(), 4);
        assert_eq!(s1.relations().len(), 5);
        assert_eq!(s1.relations().iter().filter(|r| r.unit).count(), 4);
        let q = s1.quiver();
        assert_eq!(
            s1.relations()[0].poly,
            p(q, "X1*Y1*X1^-1*Y1^-1 - e_v")
        );
        assert!(!s1.is_admissible());

        let s2 = group_algebra_presentation(GroupKind::Surface(2)).unwrap();
        assert_eq!(s2.quiver().num_arrows(), 8);
        assert_eq!(s2.relations()[0].poly.max_degree(), Some(8));

        let h = group_algebra_presentation(GroupKind::Heisenberg).unwrap();
        let q = h.quiver();
        assert_eq!(h.relations().len(), 6);
        assert_eq!(
            h.relations()[0].poly,
            p(q, "X*Y*X^-1*Y^-1 - Y*X^-1*Y^-1*X")
        );
        assert_eq!(
            h.relations()[1].poly,
            p(q, "X*Y*X^-1*Y^-1 - Y^-1*X*Y*X^-1")
        );
    }

    #[test]
    fn presentation_splits_relations() {
        let q = Arc::new(Quiver::from_parts(&["1", "2"], &[("a", "2", "1"), ("b", "1", "2")]).unwrap());
        let r = p(&q, "a*b + b*a");
        let pres = Presentation::from_relations(&q, vec![r], Flavor::Graded).unwrap();
        let labels: Vec<_> = pres.relations().iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, ["r1[1,1]", "r1[2,2]"]);
        assert!(pres.is_admissible());
        let inhom = p(&q, "a*b + a*b*a*b");
        assert!(matches!(
            Presentation::from_relations(&q, vec![inhom], Flavor::Graded),
            Err(crate::error::Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn cyclotomic_coefficients_print() {
        let q = xy();
        let z = FieldElem::root_of_unity(3, 1);
        let mut f = NCPoly::zero(&q);
        f.add_term(PathWord::from_names(&q, &["X"]).unwrap(), z + FieldElem::one());
        assert_eq!(f.to_string(), "(1 + zeta)*X");
        let back = NCPoly::parse_in(&q, &f.to_string(), crate::field::Field::Cyclotomic(3)).unwrap();
        assert_eq!(back, f);
    }
}
