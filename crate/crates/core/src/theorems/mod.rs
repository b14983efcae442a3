//! Theorem checks on concrete tensor products, with embedded grade
//! certificates, and the seeded instance corpus that drives them.

mod checks;
mod corpus;

pub use checks::{
    check_lemma_1_2, check_prop_2_3_a, check_remark_2_5, check_thm_1_1_a, check_thm_1_1_b, check_thm_1_1_c,
    check_thm_2_1, concatenated_sequence, contracted_generators, merged_sequence,
};
pub use corpus::{generate_corpus, Corpus, CorpusBudget, CorpusInstance, FactorKind, InstanceRecord};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraIdeal, AlgebraPresentation};
use crate::invariants::{validate_certificate, CertificateRecord, CertificateViolation, GradeCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CheckId {
    #[serde(rename = "thm_1_1_a")]
    Thm11a,
    #[serde(rename = "thm_1_1_b")]
    Thm11b,
    #[serde(rename = "thm_1_1_c")]
    Thm11c,
    #[serde(rename = "lemma_1_2")]
    Lemma12,
    #[serde(rename = "prop_2_3_a")]
    Prop23a,
    #[serde(rename = "thm_2_1")]
    Thm21,
    #[serde(rename = "remark_2_5")]
    Remark25,
}

impl CheckId {
    pub const ALL: [CheckId; 7] = [
        CheckId::Thm11a,
        CheckId::Thm11b,
        CheckId::Thm11c,
        CheckId::Lemma12,
        CheckId::Prop23a,
        CheckId::Thm21,
        CheckId::Remark25,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Thm11a => "thm_1_1_a",
            CheckId::Thm11b => "thm_1_1_b",
            CheckId::Thm11c => "thm_1_1_c",
            CheckId::Lemma12 => "lemma_1_2",
            CheckId::Prop23a => "prop_2_3_a",
            CheckId::Thm21 => "thm_2_1",
            CheckId::Remark25 => "remark_2_5",
        }
    }

    pub fn from_str_opt(s: &str) -> Option<CheckId> {
        Self::ALL.into_iter().find(|c| c.as_str() == s)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(i64),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A hypothesis of the statement does not hold for the inputs.
    Skipped,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Error => "error",
        }
    }
}

/// A grade certificate with the algebra and ideal it certifies.
#[derive(Clone, Debug)]
pub struct CertifiedGrade {
    pub label: String,
    pub algebra: AlgebraPresentation,
    pub ideal: AlgebraIdeal,
    pub certificate: GradeCertificate,
}

impl CertifiedGrade {
    pub fn revalidate(&self) -> Result<(), CertificateViolation> {
        validate_certificate(&self.certificate, &self.algebra, &self.ideal)
    }

    pub fn record(&self) -> LabeledCertificate {
        LabeledCertificate { label: self.label.clone(), ideal: self.ideal.to_string(), certificate: self.certificate.record() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledCertificate {
    pub label: String,
    pub ideal: String,
    #[serde(flatten)]
    pub certificate: CertificateRecord,
}

/// One identity instantiated on concrete inputs.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub check_id: CheckId,
    pub inputs: Vec<String>,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub status: Status,
    /// The violated hypothesis when skipped.
    pub skipped_reason: Option<String>,
    pub certificates: Vec<CertifiedGrade>,
    pub assumptions: Vec<String>,
}

impl TheoremReport {
    pub(crate) fn compared(
        check_id: CheckId,
        inputs: Vec<String>,
        lhs: Value,
        rhs: Value,
        certificates: Vec<CertifiedGrade>,
        assumptions: Vec<String>,
    ) -> Self {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        TheoremReport {
            check_id,
            inputs,
            lhs: Some(lhs),
            rhs: Some(rhs),
            status,
            skipped_reason: None,
            certificates,
            assumptions,
        }
    }

    pub(crate) fn skipped(check_id: CheckId, inputs: Vec<String>, reason: impl Into<String>) -> Self {
        TheoremReport {
            check_id,
            inputs,
            lhs: None,
            rhs: None,
            status: Status::Skipped,
            skipped_reason: Some(reason.into()),
            certificates: Vec::new(),
            assumptions: Vec::new(),
        }
    }

    /// Re-validates every embedded certificate from scratch.
    pub fn revalidate(&self) -> Result<(), (String, CertificateViolation)> {
        for c in &self.certificates {
            c.revalidate().map_err(|e| (c.label.clone(), e))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tensor;
    use crate::polyring::{Ambient, Polynomial};

    fn ring(vars: &[&str], rels: &[&str]) -> AlgebraPresentation {
        let amb = Ambient::with_vars(vars);
        let rels = rels.iter().map(|r| crate::frontend::parse_polynomial(&amb, r).unwrap()).collect();
        AlgebraPresentation::new(&amb, rels).unwrap()
    }

    fn polys(a: &AlgebraPresentation, ps: &[&str]) -> Vec<Polynomial> {
        ps.iter().map(|s| a.poly(s).unwrap()).collect()
    }

    fn ints(r: &TheoremReport) -> (i64, i64) {
        match (&r.lhs, &r.rhs) {
            (Some(Value::Int(l)), Some(Value::Int(r))) => (*l, *r),
            other => panic!("not an integer comparison: {other:?}"),
        }
    }

    fn assert_pass(r: &TheoremReport) {
        assert_eq!(r.status, Status::Pass, "{r:?}");
        r.revalidate().unwrap();
    }

    #[test]
    fn thm_1_1_a_examples() {
        let a = ring(&["x", "y"], &[]);
        let r = check_thm_1_1_a(&a, &ring(&["z"], &[]), &a.ideal_of(&["x", "y"]), 7).unwrap();
        assert_pass(&r);
        assert_eq!(ints(&r), (2, 2));
        let a = ring(&["x", "y"], &["x^2", "x*y"]);
        let r = check_thm_1_1_a(&a, &ring(&["z"], &[]), &a.ideal_of(&["x", "y"]), 7).unwrap();
        assert_pass(&r);
        assert_eq!(ints(&r), (0, 0));
        let a = ring(&["x"], &[]);
        let r = check_thm_1_1_a(&a, &ring(&["y"], &["y^2"]), &a.ideal_of(&["x"]), 7).unwrap();
        assert_pass(&r);
        assert_eq!(ints(&r), (1, 1));
    }

    #[test]
    fn thm_1_1_b_examples() {
        let (a, b) = (ring(&["x", "y"], &[]), ring(&["z"], &[]));
        let r = check_thm_1_1_b(&a, &b, &a.ideal_of(&["x", "y"]), &b.ideal_of(&["z"]), 1).unwrap();
        assert_pass(&r);
        assert_eq!(ints(&r), (3, 3));
        let a = ring(&["x", "y"], &["x^2", "x*y"]);
        let r = check_thm_1_1_b(&a, &b, &a.ideal_of(&["x", "y"]), &b.ideal_of(&["z"]), 1).unwrap();
        assert_pass(&r);
        assert_eq!(ints(&r), (1, 1));
        let (a, b) = (ring(&["x"], &["x^2"]), ring(&["y"], &[]));
        let r = check_thm_1_1_b(&a, &b, &a.ideal_of(&["x"]), &b.ideal_of(&["y"]), 1).unwrap();
        assert_pass(&r);
        assert_eq!(ints(&r), (1, 1));
    }

    #[test]
    fn thm_1_1_c_examples() {
        let (a, b) = (ring(&["x"], &[]), ring(&["y", "z"], &[]));
        let r = check_thm_1_1_c(&a, &b, &a.ideal_of(&["x"]), &b.ideal_of(&["y", "z"]), 2).unwrap();
        assert_pass(&r);
        assert_eq!(ints(&r), (1, 1));
        let (a, b) = (ring(&["x"], &[]), ring(&["y"], &[]));
        let r = check_thm_1_1_c(&a, &b, &a.ideal_of(&["x"]), &b.ideal_of(&["y"]), 2).unwrap();
        assert_eq!(ints(&r), (1, 1));
        let (a, b) = (ring(&["x", "y"], &[]), ring(&["u", "v"], &[]));
        let r = check_thm_1_1_c(&a, &b, &a.ideal_of(&["x", "y"]), &b.ideal_of(&["u", "v"]), 2).unwrap();
        assert_pass(&r);
        assert_eq!(ints(&r), (2, 2));
        let r = check_thm_1_1_c(&a, &b, &a.zero_ideal(), &b.ideal_of(&["u"]), 2).unwrap();
        assert_eq!(r.status, Status::Skipped);
    }

    #[test]
    fn improper_inputs_are_skipped() {
        let (a, b) = (ring(&["x"], &[]), ring(&["y"], &[]));
        let r = check_thm_1_1_a(&a, &b, &a.ideal_of(&["x + 1 - x"]), 0).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(r.skipped_reason.unwrap().contains("proper"));
    }

    #[test]
    fn lemma_1_2_examples() {
        let (a, b) = (ring(&["x", "y"], &[]), ring(&["u", "v"], &[]));
        let r = check_lemma_1_2(&a, &b, &polys(&a, &["x", "y"]), &polys(&b, &["u", "v"]), 0).unwrap();
        assert_eq!(r.status, Status::Pass);
        let (a, b) = (ring(&["x"], &[]), ring(&["u"], &[]));
        let r = check_lemma_1_2(&a, &b, &polys(&a, &["x"]), &polys(&b, &["u"]), 0).unwrap();
        assert_eq!(r.status, Status::Pass);
        let (a, b) = (ring(&["x", "y", "z"], &[]), ring(&["u", "v", "w"], &[]));
        let r = check_lemma_1_2(&a, &b, &polys(&a, &["x", "y", "z"]), &polys(&b, &["u", "v", "w"]), 0).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.assumptions.iter().any(|s| s == "6 orders checked"));
    }

    #[test]
    fn lemma_1_2_preconditions() {
        let (a, b) = (ring(&["x", "y"], &[]), ring(&["u", "v"], &[]));
        let r = check_lemma_1_2(&a, &b, &polys(&a, &["x"]), &polys(&b, &["u", "v"]), 0).unwrap();
        assert_eq!(r.status, Status::Skipped);
        let r = check_lemma_1_2(&a, &b, &polys(&a, &["x", "x"]), &polys(&b, &["u", "v"]), 0).unwrap();
        assert_eq!(r.status, Status::Skipped);
    }

    #[test]
    fn prop_2_3_a_examples() {
        let t = tensor(&ring(&["x"], &[]), &ring(&["y"], &[])).unwrap();
        let r = check_prop_2_3_a(&t, &t.ideal_of(&["x", "y"]), 0).unwrap();
        assert_eq!((r.status, ints(&r)), (Status::Pass, (2, 2)));
        let r = check_prop_2_3_a(&t, &t.ideal_of(&["x - y"]), 0).unwrap();
        assert_eq!((r.status, ints(&r)), (Status::Pass, (1, 1)));
        let t = tensor(&ring(&["x", "y"], &[]), &ring(&["z"], &[])).unwrap();
        let r = check_prop_2_3_a(&t, &t.ideal_of(&["x", "z"]), 0).unwrap();
        assert_eq!((r.status, ints(&r)), (Status::Pass, (2, 2)));
        assert!(r.assumptions.iter().any(|s| s.contains("prime")));
    }

    #[test]
    fn thm_2_1_examples() {
        let r = check_thm_2_1(&ring(&["x", "y"], &["x^2", "x*y"]), &ring(&["z"], &[]), 0).unwrap();
        assert_pass(&r);
        assert_eq!(r.lhs, Some(Value::Bool(false)));
        let r = check_thm_2_1(&ring(&["x"], &["x^2"]), &ring(&["y"], &["y^3"]), 0).unwrap();
        assert_pass(&r);
        assert_eq!(r.lhs, Some(Value::Bool(true)));
        let r = check_thm_2_1(&ring(&["x", "y"], &["x^2 + y^2"]), &ring(&["u", "v"], &["u*v"]), 0).unwrap();
        assert_pass(&r);
        assert_eq!(r.lhs, Some(Value::Bool(true)));
    }

    #[test]
    fn remark_2_5_examples() {
        let t = tensor(&ring(&["x"], &[]), &ring(&["y"], &[])).unwrap();
        let r = check_remark_2_5(&t, &t.ideal_of(&["x", "y"]), 0).unwrap();
        assert_pass(&r);
        assert_eq!(ints(&r), (2, 2));
        let t = tensor(&ring(&["x", "y"], &[]), &ring(&["z"], &[])).unwrap();
        let r = check_remark_2_5(&t, &t.ideal_of(&["x", "y", "z"]), 0).unwrap();
        assert_pass(&r);
        assert_eq!(ints(&r), (3, 3));
        let t = tensor(&ring(&["x"], &[]), &ring(&["y", "z"], &[])).unwrap();
        let r = check_remark_2_5(&t, &t.ideal_of(&["x", "y"]), 0).unwrap();
        assert_pass(&r);
        assert_eq!(ints(&r), (2, 2));
    }

    #[test]
    fn remark_2_5_hypothesis() {
        // q = (y^2) in F[y]/(y^3) is not generated by a regular sequence
        let t = tensor(&ring(&["x"], &[]), &ring(&["y"], &["y^3"])).unwrap();
        let r = check_remark_2_5(&t, &t.ideal_of(&["x", "y^2"]), 0).unwrap();
        assert_eq!(r.status, Status::Skipped, "{r:?}");
    }

    #[test]
    fn check_ids_round_trip() {
        for id in CheckId::ALL {
            assert_eq!(CheckId::from_str_opt(id.as_str()), Some(id));
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{id}\""));
        }
        assert_eq!(CheckId::from_str_opt("thm_9"), None);
    }

    #[test]
    fn corpus_is_deterministic_and_labelled() {
        let c1 = generate_corpus(1, CorpusBudget::small()).unwrap();
        let c2 = generate_corpus(1, CorpusBudget::small()).unwrap();
        let r1: Vec<_> = c1.instances.iter().map(CorpusInstance::record).collect();
        let r2: Vec<_> = c2.instances.iter().map(CorpusInstance::record).collect();
        assert_eq!(r1, r2);
        assert!(r1.iter().any(|r| r.a == "F_32003[x,y]/(x^2, x*y)" && r.b == "F_32003[z]"));
        for inst in &c1.instances {
            assert!(inst.i.is_proper().unwrap() && !inst.i.is_zero().unwrap());
            assert!(inst.j.is_proper().unwrap() && !inst.j.is_zero().unwrap());
            if let Some(p) = &inst.prime {
                assert!(p.generators().iter().all(|g| g.total_degree().unwrap() <= 1));
                assert!(p.is_proper().unwrap());
            }
            assert_eq!(inst.xs.len(), inst.ys.len());
        }
        let other = generate_corpus(2, CorpusBudget::small()).unwrap();
        let r3: Vec<_> = other.instances.iter().map(CorpusInstance::record).collect();
        assert_ne!(r1, r3);
    }

    #[test]
    fn corpus_budgets_parse() {
        assert_eq!(CorpusBudget::parse("small"), Some(CorpusBudget::small()));
        assert_eq!(CorpusBudget::parse("12").unwrap().instances, 12);
        assert_eq!(CorpusBudget::parse("huge"), None);
    }
}
