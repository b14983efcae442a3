use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::sequences::{annihilator_witness, find_nzd};
use crate::algebra::{AlgebraIdeal, AlgebraPresentation};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, ideal_quotient, normal_form, IdealPresentation};
use crate::polyring::{MonomialOrder, Polynomial};

/// A maximal regular sequence in `I` together with an element `a` outside
/// the final stage ideal that `I` multiplies into it.
#[derive(Clone, Debug)]
pub struct GradeCertificate {
    pub sequence: Vec<Polynomial>,
    pub witness: Polynomial,
    /// `J ⊂ J + (f_1) ⊂ ... ⊂ J + (f_1, .., f_n)`.
    pub stage_ideals: Vec<IdealPresentation>,
    pub grade: usize,
}

/// Printable form of a certificate; polynomials in canonical term order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub grade: usize,
    pub sequence: Vec<String>,
    pub witness: String,
    pub stages: Vec<Vec<String>>,
}

impl GradeCertificate {
    pub fn record(&self) -> CertificateRecord {
        CertificateRecord {
            grade: self.grade,
            sequence: self.sequence.iter().map(ToString::to_string).collect(),
            witness: self.witness.to_string(),
            stages: self
                .stage_ideals
                .iter()
                .map(|s| s.generators().iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

/// Grade of a proper ideal: extend a regular sequence inside `I` until `I`
/// consists of zerodivisors on the quotient, which the annihilator witness
/// detects. The result does not depend on `seed`; only the chosen sequence
/// may.
pub fn grade(a: &AlgebraPresentation, ideal: &AlgebraIdeal, seed: u64) -> Result<GradeCertificate> {
    if !ideal.owner().same_as(a) {
        return Err(Error::OwnerMismatch);
    }
    ideal.require_proper()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stage = a.relations().clone();
    let mut stages = vec![stage.clone()];
    let mut sequence = Vec::new();
    loop {
        if let Some(witness) = annihilator_witness(&stage, ideal.generators())? {
            let grade = sequence.len();
            return Ok(GradeCertificate { sequence, witness, stage_ideals: stages, grade });
        }
        debug_assert!(sequence.len() <= a.nvars(), "grade is bounded by the dimension");
        let f = find_nzd(&stage, ideal.generators(), &mut rng)?;
        stage = stage.sum(&IdealPresentation::new(a.ambient(), vec![f.clone()])?)?;
        stages.push(stage.clone());
        sequence.push(f);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CertificateViolation {
    #[error("grade {grade} differs from sequence length {len}")]
    LengthMismatch { grade: usize, len: usize },
    #[error("stage {0} does not match the relations plus the sequence prefix")]
    StageMismatch(usize),
    #[error("sequence element {0} is not in the ideal")]
    NotInIdeal(usize),
    #[error("sequence element {0} is a zerodivisor modulo the previous stage")]
    Zerodivisor(usize),
    #[error("final stage ideal is not proper")]
    ImproperStage,
    #[error("witness lies in the final stage ideal")]
    WitnessInStage,
    #[error("ideal generator {0} times the witness is not in the final stage ideal")]
    WitnessNotAnnihilating(usize),
    #[error("kernel error during validation: {0}")]
    Kernel(#[from] Error),
}

fn reduces_to_zero(f: &Polynomial, gb: &[Polynomial]) -> Result<bool> {
    Ok(normal_form(f, gb, &MonomialOrder::GrevLex)?.is_zero())
}

/// Re-checks every certificate condition from scratch with fresh Groebner
/// bases, normal forms and ideal quotients.
pub fn validate_certificate(
    cert: &GradeCertificate,
    a: &AlgebraPresentation,
    ideal: &AlgebraIdeal,
) -> Result<(), CertificateViolation> {
    let ord = MonomialOrder::GrevLex;
    if cert.grade != cert.sequence.len() {
        return Err(CertificateViolation::LengthMismatch { grade: cert.grade, len: cert.sequence.len() });
    }
    if cert.stage_ideals.len() != cert.sequence.len() + 1 {
        return Err(CertificateViolation::StageMismatch(cert.stage_ideals.len().min(cert.sequence.len())));
    }
    let amb = a.ambient();
    let relations: Vec<Polynomial> = a.relations().generators().to_vec();
    let ideal_gens: Vec<Polynomial> = ideal.lift().generators().to_vec();
    let ideal_gb = buchberger(&ideal_gens, &ord)?;

    let mut stage_gens = relations.clone();
    let mut stage_gb = buchberger(&stage_gens, &ord)?;
    for k in 0..=cert.sequence.len() {
        // the recorded stage generates the same ideal as the rebuilt one
        let recorded = cert.stage_ideals[k].generators();
        let recorded_gb = buchberger(recorded, &ord)?;
        let same = recorded.iter().all(|g| reduces_to_zero(g, &stage_gb).unwrap_or(false))
            && stage_gens.iter().all(|g| reduces_to_zero(g, &recorded_gb).unwrap_or(false));
        if !same {
            return Err(CertificateViolation::StageMismatch(k));
        }
        let Some(f) = cert.sequence.get(k) else { break };
        if !reduces_to_zero(f, &ideal_gb)? {
            return Err(CertificateViolation::NotInIdeal(k));
        }
        let stage = IdealPresentation::new(amb, stage_gens.clone())?;
        let principal = IdealPresentation::new(amb, vec![f.clone()])?;
        let colon = ideal_quotient(&stage, &principal)?;
        for g in colon.generators() {
            if !reduces_to_zero(g, &stage_gb)? {
                return Err(CertificateViolation::Zerodivisor(k));
            }
        }
        stage_gens.push(f.clone());
        stage_gb = buchberger(&stage_gens, &ord)?;
    }
    if reduces_to_zero(&Polynomial::one(amb), &stage_gb)? {
        return Err(CertificateViolation::ImproperStage);
    }
    if reduces_to_zero(&cert.witness, &stage_gb)? {
        return Err(CertificateViolation::WitnessInStage);
    }
    for (i, g) in ideal_gens.iter().enumerate() {
        if !reduces_to_zero(&g.mul(&cert.witness)?, &stage_gb)? {
            return Err(CertificateViolation::WitnessNotAnnihilating(i));
        }
    }
    Ok(())
}
