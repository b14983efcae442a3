//! Test-side oracles that avoid the Groebner engine where possible.
#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use cmtensor_core::groebner::{buchberger, eliminate, ideal_quotient, normal_form, IdealPresentation};
use cmtensor_core::polyring::{Ambient, MonomialOrder, Polynomial};
use cmtensor_core::theorems::CertifiedGrade;
use cmtensor_core::AlgebraPresentation;

fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u16>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first as u16);
            out.push(rest);
        }
    }
    out
}

/// Rank of a matrix over F_p by Gaussian elimination.
fn rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let inv = pow_mod(rows[r][c], p - 2, p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + p - f * rows[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn homogeneous_part(f: &Polynomial, d: u32) -> HashMap<Vec<u16>, u64> {
    f.terms()
        .iter()
        .filter(|t| t.mono.degree() == d)
        .map(|t| (t.mono.exponents().to_vec(), t.coeff as u64))
        .collect()
}

/// Membership in an ideal with homogeneous generators by linear algebra:
/// each homogeneous component of `f` must lie in the span of the
/// monomial multiples of the generators of that degree.
pub fn homogeneous_membership(f: &Polynomial, gens: &[Polynomial]) -> bool {
    let amb = f.ambient();
    let n = amb.nvars();
    let p = amb.field().modulus() as u64;
    let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    assert!(gens.iter().all(|g| g.is_homogeneous()), "oracle needs homogeneous generators");
    let Some(top) = f.total_degree() else { return true };
    for d in 0..=top {
        let fd = homogeneous_part(f, d);
        if fd.is_empty() {
            continue;
        }
        let cols = monomials_of_degree(n, d);
        let index: HashMap<&Vec<u16>, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for g in &gens {
            let dg = g.total_degree().unwrap();
            if dg > d {
                continue;
            }
            for m in monomials_of_degree(n, d - dg) {
                let mut row = vec![0u64; cols.len()];
                for t in g.terms() {
                    let e: Vec<u16> = t.mono.exponents().iter().zip(&m).map(|(a, b)| a + b).collect();
                    row[index[&e]] = t.coeff as u64;
                }
                rows.push(row);
            }
        }
        let before = rank(rows.clone(), p);
        let mut frow = vec![0u64; cols.len()];
        for (m, c) in &fd {
            frow[index[m]] = *c;
        }
        rows.push(frow);
        if rank(rows, p) != before {
            return false;
        }
    }
    true
}

/// Krull dimension as the largest set `S` of variables with `J ∩ k[S] = 0`,
/// found by exhaustive search over subsets.
pub fn subset_dimension(amb: &Arc<Ambient>, relations: &[Polynomial]) -> usize {
    let n = amb.nvars();
    let j = IdealPresentation::new(amb, relations.to_vec()).unwrap();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let front: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
        if eliminate(&j, &front).unwrap().is_zero_ideal() {
            best = size;
        }
    }
    best
}

/// Re-checks a grade certificate from scratch using only `buchberger`,
/// `normal_form` and `ideal_quotient` over fresh grevlex ideals.
pub fn audit_certificate(c: &CertifiedGrade) -> Result<(), String> {
    let ord = MonomialOrder::GrevLex;
    let a: &AlgebraPresentation = &c.algebra;
    let amb = a.ambient();
    let cert = &c.certificate;
    if cert.grade != cert.sequence.len() {
        return Err(format!("{}: grade {} but {} sequence elements", c.label, cert.grade, cert.sequence.len()));
    }
    let relations = a.relations().generators().to_vec();
    let mut lift = relations.clone();
    lift.extend(c.ideal.generators().iter().cloned());
    let lift_gb = buchberger(&lift, &ord).unwrap();
    let mut stage = relations.clone();
    for (k, f) in cert.sequence.iter().enumerate() {
        if !normal_form(f, &lift_gb, &ord).unwrap().is_zero() {
            return Err(format!("{}: element {k} not in the ideal", c.label));
        }
        let stage_gb = buchberger(&stage, &ord).unwrap();
        let st = IdealPresentation::new(amb, stage.clone()).unwrap();
        let fi = IdealPresentation::new(amb, vec![f.clone()]).unwrap();
        let q = ideal_quotient(&st, &fi).unwrap();
        if q.generators().iter().any(|g| !normal_form(g, &stage_gb, &ord).unwrap().is_zero()) {
            return Err(format!("{}: element {k} is a zerodivisor", c.label));
        }
        stage.push(f.clone());
    }
    let gb = buchberger(&stage, &ord).unwrap();
    let one = Polynomial::one(amb);
    if normal_form(&one, &gb, &ord).unwrap().is_zero() {
        return Err(format!("{}: final stage is not proper", c.label));
    }
    if normal_form(&cert.witness, &gb, &ord).unwrap().is_zero() {
        return Err(format!("{}: witness lies in the final stage", c.label));
    }
    for g in c.ideal.generators() {
        if !normal_form(&g.mul(&cert.witness).unwrap(), &gb, &ord).unwrap().is_zero() {
            return Err(format!("{}: I*a not contained in the final stage", c.label));
        }
    }
    Ok(())
}
