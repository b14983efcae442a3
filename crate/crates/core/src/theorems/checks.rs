use super::{CertifiedGrade, CheckId, TheoremReport, Value};
use crate::algebra::{
    contract, embed_ideal, joined_ideal, product_ideal, tensor, AlgebraIdeal, AlgebraPresentation, Side,
};
use crate::error::{Error, Result};
use crate::invariants::{
    dim_quotient, grade, height, is_cohen_macaulay, is_permutable_regular_sequence, is_regular_sequence,
};
use crate::polyring::Polynomial;

const EQUIDIMENSIONAL: &str = "factors and tensor equidimensional: height = dim - dim of quotient";
const PRIME: &str = "P asserted prime (not verified)";

fn certified(label: &str, a: &AlgebraPresentation, ideal: &AlgebraIdeal, seed: u64) -> Result<CertifiedGrade> {
    let certificate = grade(a, ideal, seed)?;
    Ok(CertifiedGrade { label: label.to_string(), algebra: a.clone(), ideal: ideal.clone(), certificate })
}

fn digest(a: &AlgebraPresentation) -> String {
    a.to_string()
}

fn ideal_digest(name: &str, i: &AlgebraIdeal) -> String {
    format!("{name} = {i}")
}

fn renaming_note(t: &AlgebraPresentation) -> Option<String> {
    let parts = t.tensor_parts()?;
    if parts.renaming.is_empty() {
        return None;
    }
    let table: Vec<String> = parts.renaming.iter().map(|(a, b)| format!("{a}->{b}")).collect();
    Some(format!("right factor variables renamed: {}", table.join(", ")))
}

/// Precondition failures become `Skipped`; everything else propagates.
fn proper_or_skip(id: CheckId, inputs: &[String], name: &str, i: &AlgebraIdeal) -> Result<Option<TheoremReport>> {
    if i.is_proper()? {
        Ok(None)
    } else {
        Ok(Some(TheoremReport::skipped(id, inputs.to_vec(), format!("{name} is not a proper ideal"))))
    }
}

fn grade_value(c: &CertifiedGrade) -> i64 {
    c.certificate.grade as i64
}

/// `G(I ⊗ B) = G(I)`.
pub fn check_thm_1_1_a(
    a: &AlgebraPresentation,
    b: &AlgebraPresentation,
    i: &AlgebraIdeal,
    seed: u64,
) -> Result<TheoremReport> {
    let id = CheckId::Thm11a;
    let inputs = vec![digest(a), digest(b), ideal_digest("I", i)];
    if let Some(r) = proper_or_skip(id, &inputs, "I", i)? {
        return Ok(r);
    }
    let t = tensor(a, b)?;
    let ei = embed_ideal(i, &t, Side::Left)?;
    let lhs = certified("G(I⊗B)", &t, &ei, seed)?;
    let rhs = certified("G(I)", a, i, seed)?;
    let assumptions = renaming_note(&t).into_iter().collect();
    Ok(TheoremReport::compared(
        id,
        inputs,
        Value::Int(grade_value(&lhs)),
        Value::Int(grade_value(&rhs)),
        vec![lhs, rhs],
        assumptions,
    ))
}

/// `G(I ⊗ B + A ⊗ J) = G(I) + G(J)`.
pub fn check_thm_1_1_b(
    a: &AlgebraPresentation,
    b: &AlgebraPresentation,
    i: &AlgebraIdeal,
    j: &AlgebraIdeal,
    seed: u64,
) -> Result<TheoremReport> {
    let id = CheckId::Thm11b;
    let inputs = vec![digest(a), digest(b), ideal_digest("I", i), ideal_digest("J", j)];
    if let Some(r) = proper_or_skip(id, &inputs, "I", i)?.or(proper_or_skip(id, &inputs, "J", j)?) {
        return Ok(r);
    }
    let t = tensor(a, b)?;
    let joined = joined_ideal(i, j, &t)?;
    let lhs = certified("G(I⊗B+A⊗J)", &t, &joined, seed)?;
    let gi = certified("G(I)", a, i, seed)?;
    let gj = certified("G(J)", b, j, seed)?;
    let rhs = grade_value(&gi) + grade_value(&gj);
    let assumptions = renaming_note(&t).into_iter().collect();
    Ok(TheoremReport::compared(
        id,
        inputs,
        Value::Int(grade_value(&lhs)),
        Value::Int(rhs),
        vec![lhs, gi, gj],
        assumptions,
    ))
}

/// `G(I ⊗ J) = min(G(I), G(J))` for nonzero proper `I`, `J`.
pub fn check_thm_1_1_c(
    a: &AlgebraPresentation,
    b: &AlgebraPresentation,
    i: &AlgebraIdeal,
    j: &AlgebraIdeal,
    seed: u64,
) -> Result<TheoremReport> {
    let id = CheckId::Thm11c;
    let inputs = vec![digest(a), digest(b), ideal_digest("I", i), ideal_digest("J", j)];
    if let Some(r) = proper_or_skip(id, &inputs, "I", i)?.or(proper_or_skip(id, &inputs, "J", j)?) {
        return Ok(r);
    }
    if i.is_zero()? || j.is_zero()? {
        return Ok(TheoremReport::skipped(id, inputs, "I and J must be nonzero"));
    }
    let t = tensor(a, b)?;
    let prod = product_ideal(i, j, &t)?;
    let lhs = certified("G(I⊗J)", &t, &prod, seed)?;
    let gi = certified("G(I)", a, i, seed)?;
    let gj = certified("G(J)", b, j, seed)?;
    let rhs = grade_value(&gi).min(grade_value(&gj));
    let assumptions = renaming_note(&t).into_iter().collect();
    Ok(TheoremReport::compared(
        id,
        inputs,
        Value::Int(grade_value(&lhs)),
        Value::Int(rhs),
        vec![lhs, gi, gj],
        assumptions,
    ))
}

/// `[x_1 ⊗ y_1, .., x_n ⊗ y_n]` inside `t`.
pub fn merged_sequence(t: &AlgebraPresentation, xs: &[Polynomial], ys: &[Polynomial]) -> Result<Vec<Polynomial>> {
    xs.iter()
        .zip(ys)
        .map(|(x, y)| t.embed_poly(x, Side::Left)?.mul(&t.embed_poly(y, Side::Right)?))
        .collect()
}

/// `[x_1 ⊗ 1, .., x_n ⊗ 1, 1 ⊗ y_1, .., 1 ⊗ y_m]` inside `t`.
pub fn concatenated_sequence(
    t: &AlgebraPresentation,
    xs: &[Polynomial],
    ys: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    let mut out = Vec::with_capacity(xs.len() + ys.len());
    for x in xs {
        out.push(t.embed_poly(x, Side::Left)?);
    }
    for y in ys {
        out.push(t.embed_poly(y, Side::Right)?);
    }
    Ok(out)
}

/// Permutable `xs` in `A` and `ys` in `B` of equal length give a permutable
/// sequence `x_i ⊗ y_i` in `A ⊗ B`.
pub fn check_lemma_1_2(
    a: &AlgebraPresentation,
    b: &AlgebraPresentation,
    xs: &[Polynomial],
    ys: &[Polynomial],
    _seed: u64,
) -> Result<TheoremReport> {
    let id = CheckId::Lemma12;
    let show = |s: &[Polynomial]| s.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    let inputs = vec![digest(a), digest(b), format!("xs = [{}]", show(xs)), format!("ys = [{}]", show(ys))];
    if xs.len() != ys.len() {
        return Ok(TheoremReport::skipped(id, inputs, "xs and ys must have equal length"));
    }
    if !is_permutable_regular_sequence(a, xs)? {
        return Ok(TheoremReport::skipped(id, inputs, "xs is not a permutable A-sequence"));
    }
    if !is_permutable_regular_sequence(b, ys)? {
        return Ok(TheoremReport::skipped(id, inputs, "ys is not a permutable B-sequence"));
    }
    let t = tensor(a, b)?;
    let merged = merged_sequence(&t, xs, ys)?;
    let lhs = is_permutable_regular_sequence(&t, &merged)?;
    let mut assumptions: Vec<String> = renaming_note(&t).into_iter().collect();
    assumptions.push(format!("{} orders checked", (1..=merged.len()).product::<usize>()));
    Ok(TheoremReport::compared(id, inputs, Value::Bool(lhs), Value::Bool(true), Vec::new(), assumptions))
}

fn factor_digests(t: &AlgebraPresentation) -> Result<(AlgebraPresentation, AlgebraPresentation)> {
    let parts = t.tensor_parts().ok_or(Error::NotATensor)?;
    Ok((parts.left.clone(), parts.right.clone()))
}

/// `ht P = ht p + ht q + ht P/(p ⊗ B + A ⊗ q)` with `p = P ∩ A`, `q = P ∩ B`.
pub fn check_prop_2_3_a(t: &AlgebraPresentation, p: &AlgebraIdeal, _seed: u64) -> Result<TheoremReport> {
    let id = CheckId::Prop23a;
    let (a, b) = factor_digests(t)?;
    let mut inputs = vec![digest(&a), digest(&b), ideal_digest("P", p)];
    if let Some(r) = proper_or_skip(id, &inputs, "P", p)? {
        return Ok(r);
    }
    let pa = contract(p, Side::Left)?;
    let qb = contract(p, Side::Right)?;
    inputs.push(ideal_digest("p", &pa));
    inputs.push(ideal_digest("q", &qb));
    let lhs = height(t, p)?;
    let joined = joined_ideal(&pa, &qb, t)?;
    let quotient = t.quotient(&joined)?;
    let rest = height(&quotient, &p.image_in(&quotient)?)?;
    let rhs = height(&a, &pa)? + height(&b, &qb)? + rest;
    let mut assumptions = vec![PRIME.to_string(), EQUIDIMENSIONAL.to_string()];
    assumptions.extend(renaming_note(t));
    Ok(TheoremReport::compared(
        id,
        inputs,
        Value::Int(lhs as i64),
        Value::Int(rhs as i64),
        Vec::new(),
        assumptions,
    ))
}

/// `A ⊗ B` is Cohen-Macaulay iff `A` and `B` are (graded presentations).
pub fn check_thm_2_1(a: &AlgebraPresentation, b: &AlgebraPresentation, seed: u64) -> Result<TheoremReport> {
    let id = CheckId::Thm21;
    let inputs = vec![digest(a), digest(b)];
    let t = tensor(a, b)?;
    let vt = is_cohen_macaulay(&t, seed)?;
    let va = is_cohen_macaulay(a, seed)?;
    let vb = is_cohen_macaulay(b, seed)?;
    let mut assumptions = vec![
        "graded presentations: CM iff depth of the irrelevant ideal equals dimension".to_string(),
        format!("dim/depth: A {}/{}, B {}/{}, A⊗B {}/{}", va.dim, va.depth, vb.dim, vb.depth, vt.dim, vt.depth),
    ];
    assumptions.extend(renaming_note(&t));
    let cert = |label: &str, v: crate::invariants::CmVerdict| CertifiedGrade {
        label: label.to_string(),
        ideal: v.algebra.irrelevant_ideal(),
        algebra: v.algebra,
        certificate: v.certificate,
    };
    let (lhs, rhs) = (vt.is_cm, va.is_cm && vb.is_cm);
    Ok(TheoremReport::compared(
        id,
        inputs,
        Value::Bool(lhs),
        Value::Bool(rhs),
        vec![cert("depth(A⊗B)", vt), cert("depth(A)", va), cert("depth(B)", vb)],
        assumptions,
    ))
}

/// Generators of a contraction that are nonzero in the factor algebra.
pub fn contracted_generators(ideal: &AlgebraIdeal) -> Result<Vec<Polynomial>> {
    let rels = ideal.owner().relations();
    let mut out = Vec::new();
    for g in ideal.generators() {
        if !rels.contains(g)? {
            out.push(g.clone());
        }
    }
    Ok(out)
}

/// `G(P) = G(p) + G(q) + G(P/(p ⊗ B + A ⊗ q))` when `p` and `q` are generated
/// by regular sequences; when both are maximal, additionally
/// `G(P/(p ⊗ B + A ⊗ q)) = ht(P/(p ⊗ B + A ⊗ q))`.
pub fn check_remark_2_5(t: &AlgebraPresentation, p: &AlgebraIdeal, seed: u64) -> Result<TheoremReport> {
    let id = CheckId::Remark25;
    let (a, b) = factor_digests(t)?;
    let mut inputs = vec![digest(&a), digest(&b), ideal_digest("P", p)];
    if let Some(r) = proper_or_skip(id, &inputs, "P", p)? {
        return Ok(r);
    }
    let pa = contract(p, Side::Left)?;
    let qb = contract(p, Side::Right)?;
    inputs.push(ideal_digest("p", &pa));
    inputs.push(ideal_digest("q", &qb));
    if !is_regular_sequence(&a, &contracted_generators(&pa)?)? {
        return Ok(TheoremReport::skipped(id, inputs, "p = P∩A is not generated by an A-sequence"));
    }
    if !is_regular_sequence(&b, &contracted_generators(&qb)?)? {
        return Ok(TheoremReport::skipped(id, inputs, "q = P∩B is not generated by a B-sequence"));
    }
    let lhs = certified("G(P)", t, p, seed)?;
    let gp = certified("G(p)", &a, &pa, seed)?;
    let gq = certified("G(q)", &b, &qb, seed)?;
    let joined = joined_ideal(&pa, &qb, t)?;
    let quotient = t.quotient(&joined)?;
    let image = p.image_in(&quotient)?;
    let rest = certified("G(P/(p⊗B+A⊗q))", &quotient, &image, seed)?;
    let rhs = grade_value(&gp) + grade_value(&gq) + grade_value(&rest);
    let mut assumptions = vec![PRIME.to_string()];
    assumptions.extend(renaming_note(t));
    let lhs_value = grade_value(&lhs);
    let mut rhs_value = rhs;
    if dim_quotient(&a, &pa)? == 0 && dim_quotient(&b, &qb)? == 0 {
        // both displays must hold; report whichever side disagrees with lhs
        let ht_rest = height(&quotient, &image)? as i64;
        let second = grade_value(&gp) + grade_value(&gq) + ht_rest;
        assumptions.push(format!("p and q maximal: also checked G(P) = G(p) + G(q) + ht(P/(p⊗B+A⊗q)) = {second}"));
        assumptions.push(EQUIDIMENSIONAL.to_string());
        if lhs_value == rhs {
            rhs_value = second;
        }
    }
    Ok(TheoremReport::compared(
        id,
        inputs,
        Value::Int(lhs_value),
        Value::Int(rhs_value),
        vec![lhs, gp, gq, rest],
        assumptions,
    ))
}
