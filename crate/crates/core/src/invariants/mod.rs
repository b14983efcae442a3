//! Krull dimension, height, zerodivisors, regular sequences, grade and
//! Cohen-Macaulay verdicts.

mod dimension;
mod grade;
mod sequences;

pub use dimension::{dim_quotient, height, krull_dim};
pub use grade::{grade, validate_certificate, CertificateRecord, CertificateViolation, GradeCertificate};
pub use sequences::{
    ideal_in_zerodivisors, is_permutable_regular_sequence, is_regular_sequence, is_zerodivisor,
};

use crate::algebra::AlgebraPresentation;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct CmVerdict {
    pub algebra: AlgebraPresentation,
    pub dim: usize,
    /// Grade of the irrelevant ideal.
    pub depth: usize,
    pub is_cm: bool,
    pub certificate: GradeCertificate,
}

/// Graded Cohen-Macaulay test: depth of the irrelevant ideal equals the
/// Krull dimension. Only homogeneous presentations are accepted.
pub fn is_cohen_macaulay(a: &AlgebraPresentation, seed: u64) -> Result<CmVerdict> {
    if !a.is_homogeneous() {
        return Err(Error::GradedOnly(a.to_string()));
    }
    let dim = krull_dim(a)?;
    let certificate = grade(a, &a.irrelevant_ideal(), seed)?;
    let depth = certificate.grade;
    Ok(CmVerdict { algebra: a.clone(), dim, depth, is_cm: dim == depth, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Ambient, Polynomial};

    fn ring(vars: &[&str], rels: &[&str]) -> AlgebraPresentation {
        let amb = Ambient::with_vars(vars);
        let rels = rels.iter().map(|r| crate::frontend::parse_polynomial(&amb, r).unwrap()).collect();
        AlgebraPresentation::new(&amb, rels).unwrap()
    }

    fn polys(a: &AlgebraPresentation, ps: &[&str]) -> Vec<Polynomial> {
        ps.iter().map(|s| a.poly(s).unwrap()).collect()
    }

    /// `a` is a valid annihilator witness for `f`: a ∉ J and a*f ∈ J.
    fn witnesses(a: &AlgebraPresentation, f: &str, w: &Polynomial) -> bool {
        let j = a.relations();
        !j.contains(w).unwrap() && j.contains(&w.mul(&a.poly(f).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(krull_dim(&ring(&["x", "y", "z"], &["x*y"])).unwrap(), 2);
        assert_eq!(krull_dim(&ring(&["x", "y"], &["x^2", "x*y"])).unwrap(), 1);
        assert_eq!(krull_dim(&ring(&[], &[])).unwrap(), 0);
        let a = ring(&["x", "y"], &[]);
        assert_eq!(dim_quotient(&a, &a.ideal_of(&["x"])).unwrap(), 1);
        assert_eq!(dim_quotient(&a, &a.ideal_of(&["x", "y"])).unwrap(), 0);
        let a = ring(&["x", "y"], &["x*y"]);
        assert_eq!(dim_quotient(&a, &a.ideal_of(&["x"])).unwrap(), 1);
        assert!(matches!(dim_quotient(&a, &a.ideal_of(&["x + 1 - x"])), Err(Error::ImproperIdeal(_))));
    }

    #[test]
    fn heights() {
        let a = ring(&["x", "y", "z"], &[]);
        assert_eq!(height(&a, &a.ideal_of(&["x", "y"])).unwrap(), 2);
        assert_eq!(height(&a, &a.zero_ideal()).unwrap(), 0);
        let t = crate::algebra::tensor(&ring(&["x", "y"], &[]), &ring(&["z"], &[])).unwrap();
        assert_eq!(height(&t, &t.ideal_of(&["x", "y", "z"])).unwrap(), 3);
    }

    #[test]
    fn zerodivisors() {
        let a = ring(&["x", "y"], &["x*y"]);
        let w = is_zerodivisor(&a, &a.poly("x").unwrap()).unwrap().unwrap();
        assert!(witnesses(&a, "x", &w));
        let a = ring(&["x", "y"], &[]);
        assert_eq!(is_zerodivisor(&a, &a.poly("x").unwrap()).unwrap(), None);
        let a = ring(&["x", "y"], &["x^2", "x*y"]);
        let w = is_zerodivisor(&a, &a.poly("x").unwrap()).unwrap().unwrap();
        assert!(witnesses(&a, "x", &w));
        // an element of J is a zerodivisor with witness 1
        let w = is_zerodivisor(&a, &a.poly("x*y").unwrap()).unwrap().unwrap();
        assert!(w.is_unit());
    }

    #[test]
    fn ideals_of_zerodivisors() {
        let a = ring(&["x", "y"], &["x^2", "x*y"]);
        let w = ideal_in_zerodivisors(&a, &a.ideal_of(&["x", "y"])).unwrap().unwrap();
        assert!(witnesses(&a, "x", &w) && witnesses(&a, "y", &w));
        let a = ring(&["x", "y"], &[]);
        assert_eq!(ideal_in_zerodivisors(&a, &a.ideal_of(&["x"])).unwrap(), None);
        let a = ring(&["x", "y"], &["x*y"]);
        let w = ideal_in_zerodivisors(&a, &a.ideal_of(&["x"])).unwrap().unwrap();
        assert!(witnesses(&a, "x", &w));
        assert!(ideal_in_zerodivisors(&a, &a.ideal_of(&["1 + x*y"])).is_err());
    }

    #[test]
    fn regular_sequences() {
        let a = ring(&["x", "y"], &[]);
        assert!(is_regular_sequence(&a, &polys(&a, &["x", "y"])).unwrap());
        assert!(!is_regular_sequence(&a, &polys(&a, &["x", "x"])).unwrap());
        assert!(is_regular_sequence(&a, &[]).unwrap());
        let b = ring(&["x", "y"], &["x - 1"]);
        assert!(!is_regular_sequence(&b, &polys(&b, &["x"])).unwrap());
    }

    #[test]
    fn permutable_sequences() {
        let a = ring(&["x", "y"], &[]);
        assert!(is_permutable_regular_sequence(&a, &polys(&a, &["x", "y"])).unwrap());
        assert!(is_permutable_regular_sequence(&a, &[]).unwrap());
        let a = ring(&["x", "y", "z"], &[]);
        let seq = polys(&a, &["x", "y*(1 - x)", "z*(1 - x)"]);
        assert!(is_regular_sequence(&a, &seq).unwrap());
        assert!(!is_permutable_regular_sequence(&a, &seq).unwrap());
        let long = polys(&a, &["x", "y", "z", "x^2", "y^2", "z^2"]);
        assert_eq!(
            is_permutable_regular_sequence(&a, &long).unwrap_err(),
            Error::PermutationBound { len: 6, bound: 5 }
        );
    }

    #[test]
    fn grades() {
        let a = ring(&["x", "y"], &[]);
        let i = a.ideal_of(&["x", "y"]);
        let c = grade(&a, &i, 1).unwrap();
        assert_eq!(c.grade, 2);
        validate_certificate(&c, &a, &i).unwrap();

        let a = ring(&["x", "y"], &["x^2", "x*y"]);
        let i = a.ideal_of(&["x", "y"]);
        let c = grade(&a, &i, 1).unwrap();
        assert_eq!(c.grade, 0);
        assert!(witnesses(&a, "x", &c.witness) && witnesses(&a, "y", &c.witness));
        validate_certificate(&c, &a, &i).unwrap();

        let a = ring(&["x", "y", "z"], &[]);
        let i = a.ideal_of(&["x*y", "x*z"]);
        let c = grade(&a, &i, 1).unwrap();
        assert_eq!(c.grade, 1);
        validate_certificate(&c, &a, &i).unwrap();
    }

    #[test]
    fn grade_rejects_improper_and_foreign_ideals() {
        let a = ring(&["x"], &[]);
        assert!(matches!(grade(&a, &a.ideal_of(&["x - x + 1"]), 0), Err(Error::ImproperIdeal(_))));
        let b = ring(&["y"], &[]);
        assert_eq!(grade(&a, &b.ideal_of(&["y"]), 0).unwrap_err(), Error::OwnerMismatch);
    }

    #[test]
    fn tampered_certificates_are_rejected() {
        let a = ring(&["x", "y"], &[]);
        let i = a.ideal_of(&["x", "y"]);
        let good = grade(&a, &i, 3).unwrap();

        let mut c = good.clone();
        c.grade = 1;
        assert!(matches!(validate_certificate(&c, &a, &i), Err(CertificateViolation::LengthMismatch { .. })));

        let mut c = good.clone();
        c.witness = a.poly("x").unwrap();
        assert!(validate_certificate(&c, &a, &i).is_err());

        let mut c = good.clone();
        c.sequence[1] = c.sequence[0].clone();
        assert!(validate_certificate(&c, &a, &i).is_err());

        let mut c = good;
        c.sequence.pop();
        c.stage_ideals.pop();
        c.grade = 1;
        assert!(validate_certificate(&c, &a, &i).is_err());
    }

    #[test]
    fn nzd_search_can_be_exhausted() {
        // no generator is a nonzerodivisor on F[x,y]/(xy) but x + y is; with
        // zero retries the search gives up
        let limits = crate::polyring::Limits { nzd_retries: 0, ..Default::default() };
        let amb = Ambient::new(["x", "y"], crate::polyring::PrimeField::default(), limits).unwrap();
        let a = AlgebraPresentation::new(&amb, vec![a_poly(&amb, "x*y")]).unwrap();
        let i = a.ideal_of(&["x", "y"]);
        assert_eq!(grade(&a, &i, 0).unwrap_err(), Error::NzdSearchExhausted { retries: 0 });
        let a = ring(&["x", "y"], &["x*y"]);
        assert_eq!(grade(&a, &a.ideal_of(&["x", "y"]), 0).unwrap().grade, 1);
    }

    fn a_poly(amb: &std::sync::Arc<Ambient>, s: &str) -> Polynomial {
        crate::frontend::parse_polynomial(amb, s).unwrap()
    }

    #[test]
    fn cohen_macaulay_verdicts() {
        assert!(is_cohen_macaulay(&ring(&["x", "y"], &[]), 0).unwrap().is_cm);
        let v = is_cohen_macaulay(&ring(&["x", "y"], &["x^2", "x*y"]), 0).unwrap();
        assert_eq!((v.is_cm, v.dim, v.depth), (false, 1, 0));
        assert!(is_cohen_macaulay(&ring(&["x"], &["x^2"]), 0).unwrap().is_cm);
        assert!(matches!(is_cohen_macaulay(&ring(&["x"], &["x^2 - x"]), 0), Err(Error::GradedOnly(_))));
    }
}
