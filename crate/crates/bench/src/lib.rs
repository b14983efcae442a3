//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use cmtensor_core::frontend::parse_polynomial;
use cmtensor_core::polyring::{Ambient, Polynomial};
use cmtensor_core::AlgebraPresentation;

/// The cyclic-n system in variables `x0..x{n-1}`.
pub fn cyclic(n: usize) -> (Arc<Ambient>, Vec<Polynomial>) {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let amb = Ambient::new(names.iter().cloned(), Default::default(), Default::default()).expect("distinct names");
    let mut gens = Vec::with_capacity(n);
    for len in 1..n {
        let terms: Vec<String> = (0..n)
            .map(|start| (0..len).map(|k| names[(start + k) % n].as_str()).collect::<Vec<_>>().join("*"))
            .collect();
        gens.push(parse_polynomial(&amb, &terms.join(" + ")).expect("valid"));
    }
    gens.push(parse_polynomial(&amb, &format!("{} - 1", names.join("*"))).expect("valid"));
    (amb, gens)
}

pub fn algebra(vars: &[&str], relations: &[&str]) -> AlgebraPresentation {
    let amb = Ambient::with_vars(vars);
    let rels = relations.iter().map(|r| parse_polynomial(&amb, r).expect("valid")).collect();
    AlgebraPresentation::new(&amb, rels).expect("nonzero algebra")
}

pub const SESSION: &str = "ring A = poly(x, y) / (x^2, x*y);
ring B = poly(z, w) / (z*w);
ring T = tensor(A, B);
ideal I = A:(x, y);
ideal J = B:(z, w);
ideal P = T:(x, y, z, w);
assert grade(A, I) == 0;
check thm_1_1_b(A, B, I, J);
check thm_1_1_c(A, B, I, J);
check thm_2_1(A, B);
check prop_2_3_a(T, P);
";
