use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use super::ast::{Command, Declaration, Expr, SessionAst};
use super::lexer::CmpOp;
use super::report::{CommandResult, RunReport, Status, Value};
use crate::algebra::{tensor, AlgebraIdeal, AlgebraPresentation};
use crate::error::{Error, Result};
use crate::invariants::{dim_quotient, grade, height, is_cohen_macaulay, krull_dim};
use crate::polyring::{Ambient, Limits, Polynomial, PrimeField, DEFAULT_PRIME};
use crate::theorems::{
    check_lemma_1_2, check_prop_2_3_a, check_remark_2_5, check_thm_1_1_a, check_thm_1_1_b, check_thm_1_1_c,
    check_thm_2_1, CertifiedGrade, CheckId, LabeledCertificate, TheoremReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub prime: u64,
    pub seed: u64,
    pub gb_step_budget: u64,
    pub nzd_retries: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        let l = Limits::default();
        RunConfig { prime: DEFAULT_PRIME as u64, seed: 0, gb_step_budget: l.gb_step_budget, nzd_retries: l.nzd_retries }
    }
}

impl RunConfig {
    fn limits(&self) -> Limits {
        Limits { gb_step_budget: self.gb_step_budget, nzd_retries: self.nzd_retries, ..Limits::default() }
    }
}

struct Env {
    field: PrimeField,
    limits: Limits,
    rings: HashMap<String, AlgebraPresentation>,
    ideals: HashMap<String, AlgebraIdeal>,
}

fn rehome(f: &Polynomial, target: &Arc<Ambient>) -> Polynomial {
    let map: Vec<usize> = (0..target.nvars()).collect();
    f.remap(target, &map)
}

impl Env {
    fn ring(&self, name: &str) -> Result<&AlgebraPresentation> {
        self.rings.get(name).ok_or_else(|| Error::UnknownVariable(format!("ring {name} (declaration failed)")))
    }

    fn ideal(&self, name: &str) -> Result<&AlgebraIdeal> {
        self.ideals.get(name).ok_or_else(|| Error::UnknownVariable(format!("ideal {name} (declaration failed)")))
    }

    /// The ideal `name` as an ideal of `ring`.
    fn ideal_in(&self, name: &str, ring: &AlgebraPresentation) -> Result<AlgebraIdeal> {
        let i = self.ideal(name)?;
        if i.owner().same_as(ring) {
            Ok(i.clone())
        } else {
            i.image_in(ring)
        }
    }

    fn declare(&mut self, d: &Declaration) -> Result<()> {
        match d {
            Declaration::Ring { name, vars, relations } => {
                let amb = Ambient::new(vars.iter().cloned(), self.field, self.limits)?;
                let rels = relations.iter().map(|r| rehome(r, &amb)).collect();
                self.rings.insert(name.clone(), AlgebraPresentation::new(&amb, rels)?);
            }
            Declaration::Tensor { name, left, right, .. } => {
                let t = tensor(self.ring(left)?, self.ring(right)?)?;
                self.rings.insert(name.clone(), t);
            }
            Declaration::Ideal { name, ring, generators } => {
                let owner = self.ring(ring)?.clone();
                let gens = generators.iter().map(|g| rehome(g, owner.ambient())).collect();
                self.ideals.insert(name.clone(), AlgebraIdeal::new(&owner, gens)?);
            }
        }
        Ok(())
    }

    fn eval(&self, e: &Expr, seed: u64, certs: &mut Vec<CertifiedGrade>) -> Result<Value> {
        Ok(match e {
            Expr::Int(v) => Value::Int(*v),
            Expr::Bool(b) => Value::Bool(*b),
            Expr::Grade { ring, ideal } => {
                let a = self.ring(ring)?;
                let i = self.ideal_in(ideal, a)?;
                let cert = grade(a, &i, seed)?;
                let g = cert.grade as i64;
                certs.push(CertifiedGrade { label: e.to_string(), algebra: a.clone(), ideal: i, certificate: cert });
                Value::Int(g)
            }
            Expr::Dim { ring, ideal: None } => Value::Int(krull_dim(self.ring(ring)?)? as i64),
            Expr::Dim { ring, ideal: Some(i) } => {
                let a = self.ring(ring)?;
                Value::Int(dim_quotient(a, &self.ideal_in(i, a)?)? as i64)
            }
            Expr::Height { ring, ideal } => {
                let a = self.ring(ring)?;
                Value::Int(height(a, &self.ideal_in(ideal, a)?)? as i64)
            }
            Expr::IsCm { ring } => {
                let a = self.ring(ring)?;
                let v = is_cohen_macaulay(a, seed)?;
                certs.push(CertifiedGrade {
                    label: format!("depth({ring})"),
                    algebra: a.clone(),
                    ideal: a.irrelevant_ideal(),
                    certificate: v.certificate,
                });
                Value::Bool(v.is_cm)
            }
        })
    }

    fn check(&self, id: CheckId, args: &[String], seed: u64) -> Result<TheoremReport> {
        let r = |k: usize| self.ring(&args[k]);
        match id {
            CheckId::Thm11a => {
                let a = r(0)?;
                check_thm_1_1_a(a, r(1)?, &self.ideal_in(&args[2], a)?, seed)
            }
            CheckId::Thm11b | CheckId::Thm11c | CheckId::Lemma12 => {
                let (a, b) = (r(0)?, r(1)?);
                let i = self.ideal_in(&args[2], a)?;
                let j = self.ideal_in(&args[3], b)?;
                match id {
                    CheckId::Thm11b => check_thm_1_1_b(a, b, &i, &j, seed),
                    CheckId::Thm11c => check_thm_1_1_c(a, b, &i, &j, seed),
                    _ => check_lemma_1_2(a, b, i.generators(), j.generators(), seed),
                }
            }
            CheckId::Prop23a | CheckId::Remark25 => {
                let t = r(0)?;
                let p = self.ideal_in(&args[1], t)?;
                if id == CheckId::Prop23a {
                    check_prop_2_3_a(t, &p, seed)
                } else {
                    check_remark_2_5(t, &p, seed)
                }
            }
            CheckId::Thm21 => check_thm_2_1(r(0)?, r(1)?, seed),
        }
    }
}

fn compare(op: CmpOp, l: &Value, r: &Value) -> Result<bool, String> {
    use std::cmp::Ordering::*;
    let ord = match (l, r) {
        (Value::Int(a), Value::Int(b)) => a.cmp(b),
        (Value::Bool(a), Value::Bool(b)) if matches!(op, CmpOp::Eq | CmpOp::Ne) => a.cmp(b),
        _ => return Err(format!("cannot compare {l} {} {r}", op.as_str())),
    };
    Ok(match op {
        CmpOp::Eq => ord == Equal,
        CmpOp::Ne => ord != Equal,
        CmpOp::Lt => ord == Less,
        CmpOp::Le => ord != Greater,
        CmpOp::Gt => ord == Greater,
        CmpOp::Ge => ord != Less,
    })
}

fn records(certs: &[CertifiedGrade]) -> Vec<LabeledCertificate> {
    certs.iter().map(CertifiedGrade::record).collect()
}

fn run_command(env: &Env, cmd: &Command, seed: u64) -> CommandResult {
    let text = cmd.to_string();
    let mut certs = Vec::new();
    let mut result = match cmd {
        Command::Compute(e) => match env.eval(e, seed, &mut certs) {
            Ok(v) => CommandResult {
                command: text,
                status: Status::Pass,
                lhs: Some(v),
                rhs: None,
                inputs: Vec::new(),
                certificate: records(&certs),
                assumptions: Vec::new(),
                skipped_reason: None,
                error: None,
                elapsed_us: 0,
            },
            Err(err) => CommandResult::error(text, err),
        },
        Command::Assert { lhs, op, rhs } => {
            let values = env.eval(lhs, seed, &mut certs).and_then(|l| Ok((l, env.eval(rhs, seed, &mut certs)?)));
            match values {
                Err(err) => CommandResult::error(text, err),
                Ok((l, r)) => match compare(*op, &l, &r) {
                    Err(msg) => CommandResult::error(text, msg),
                    Ok(holds) => CommandResult {
                        command: text,
                        status: if holds { Status::Pass } else { Status::Fail },
                        lhs: Some(l),
                        rhs: Some(r),
                        inputs: Vec::new(),
                        certificate: records(&certs),
                        assumptions: Vec::new(),
                        skipped_reason: None,
                        error: None,
                        elapsed_us: 0,
                    },
                },
            }
        }
        Command::Check { id, args } => match env.check(*id, args, seed) {
            Err(err) => CommandResult::error(text, err),
            Ok(report) => {
                let res = CommandResult {
                    command: text,
                    status: report.status,
                    lhs: report.lhs.clone(),
                    rhs: report.rhs.clone(),
                    inputs: report.inputs.clone(),
                    certificate: report.certificates.iter().map(CertifiedGrade::record).collect(),
                    assumptions: report.assumptions.clone(),
                    skipped_reason: report.skipped_reason.clone(),
                    error: None,
                    elapsed_us: 0,
                };
                certs = report.certificates;
                res
            }
        },
    };
    if result.status == Status::Pass {
        for c in &certs {
            if let Err(v) = c.revalidate() {
                result.status = Status::Error;
                result.error = Some(format!("certificate {} rejected: {v}", c.label));
                break;
            }
        }
    }
    result
}

/// Runs a parsed session. Declarations are built first; failures there and
/// in commands are recorded per entry and never abort the run. Command `k`
/// (0-based) uses seed `config.seed + k`.
pub fn execute(ast: &SessionAst, config: &RunConfig) -> Result<RunReport> {
    let field = PrimeField::new(config.prime)?;
    let mut env = Env { field, limits: config.limits(), rings: HashMap::new(), ideals: HashMap::new() };
    let mut results = Vec::new();
    for d in &ast.declarations {
        let start = Instant::now();
        if let Err(err) = env.declare(d) {
            let mut r = CommandResult::error(d.to_string(), err);
            r.elapsed_us = start.elapsed().as_micros() as u64;
            results.push(r);
        }
    }
    for (k, cmd) in ast.commands.iter().enumerate() {
        let start = Instant::now();
        let mut r = run_command(&env, cmd, config.seed.wrapping_add(k as u64));
        r.elapsed_us = start.elapsed().as_micros() as u64;
        results.push(r);
    }
    Ok(RunReport { version: env!("CARGO_PKG_VERSION").to_string(), prime: config.prime, seed: config.seed, results })
}
