use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{tensor, AlgebraIdeal, AlgebraPresentation};
use crate::error::Result;
use crate::invariants::{is_cohen_macaulay, is_permutable_regular_sequence, is_regular_sequence};
use crate::polyring::{Ambient, Limits, Monomial, Polynomial, PrimeField};

/// Size limits for [`generate_corpus`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusBudget {
    /// Randomly generated instances, on top of the fixed ones.
    pub instances: usize,
    /// At most 4.
    pub max_vars_per_factor: usize,
    /// At most 3.
    pub max_degree: u32,
}

impl CorpusBudget {
    pub fn small() -> Self {
        CorpusBudget { instances: 8, max_vars_per_factor: 3, max_degree: 2 }
    }

    pub fn medium() -> Self {
        CorpusBudget { instances: 40, max_vars_per_factor: 4, max_degree: 3 }
    }

    pub fn large() -> Self {
        CorpusBudget { instances: 80, max_vars_per_factor: 4, max_degree: 3 }
    }

    /// `small`, `medium`, `large`, or a number of random instances.
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "small" => Some(Self::small()),
            "medium" => Some(Self::medium()),
            "large" => Some(Self::large()),
            n => n.parse().ok().map(|instances| CorpusBudget { instances, ..Self::medium() }),
        }
    }

    fn clamped(self) -> Self {
        CorpusBudget {
            instances: self.instances,
            max_vars_per_factor: self.max_vars_per_factor.clamp(2, 4),
            max_degree: self.max_degree.clamp(2, 3),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    Polynomial,
    CompleteIntersection,
    NonCohenMacaulay,
    Artinian,
}

impl FactorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FactorKind::Polynomial => "polynomial",
            FactorKind::CompleteIntersection => "complete_intersection",
            FactorKind::NonCohenMacaulay => "non_cohen_macaulay",
            FactorKind::Artinian => "artinian",
        }
    }

    /// The Cohen-Macaulay label the generator promises (and self-checks).
    pub fn cm_label(self) -> bool {
        !matches!(self, FactorKind::NonCohenMacaulay)
    }
}

#[derive(Clone, Debug)]
pub struct CorpusInstance {
    pub label: String,
    pub a: AlgebraPresentation,
    pub b: AlgebraPresentation,
    pub a_kind: FactorKind,
    pub b_kind: FactorKind,
    pub i: AlgebraIdeal,
    pub j: AlgebraIdeal,
    pub tensor: AlgebraPresentation,
    /// A linear (hence prime) ideal of the tensor; only when both factors
    /// are polynomial rings.
    pub prime: Option<AlgebraIdeal>,
    /// Permutable sequences of equal length (possibly empty).
    pub xs: Vec<Polynomial>,
    pub ys: Vec<Polynomial>,
    pub assumptions: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub seed: u64,
    pub instances: Vec<CorpusInstance>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub label: String,
    pub a: String,
    pub b: String,
    pub a_kind: FactorKind,
    pub b_kind: FactorKind,
    pub a_cm: bool,
    pub b_cm: bool,
    pub tensor: String,
    pub i: Vec<String>,
    pub j: Vec<String>,
    pub prime: Option<Vec<String>>,
    pub xs: Vec<String>,
    pub ys: Vec<String>,
    pub assumptions: Vec<String>,
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

impl CorpusInstance {
    pub fn record(&self) -> InstanceRecord {
        InstanceRecord {
            label: self.label.clone(),
            a: self.a.to_string(),
            b: self.b.to_string(),
            a_kind: self.a_kind,
            b_kind: self.b_kind,
            a_cm: self.a_kind.cm_label(),
            b_cm: self.b_kind.cm_label(),
            tensor: self.tensor.to_string(),
            i: strings(self.i.generators()),
            j: strings(self.j.generators()),
            prime: self.prime.as_ref().map(|p| strings(p.generators())),
            xs: strings(&self.xs),
            ys: strings(&self.ys),
            assumptions: self.assumptions.clone(),
        }
    }
}

const LEFT_NAMES: [&str; 4] = ["x", "y", "z", "w"];
const RIGHT_NAMES: [&str; 4] = ["u", "v", "s", "r"];

struct Gen {
    rng: ChaCha8Rng,
    field: PrimeField,
    limits: Limits,
    budget: CorpusBudget,
}

struct Factor {
    algebra: AlgebraPresentation,
    kind: FactorKind,
}

impl Gen {
    fn ambient(&self, names: &[&str]) -> Arc<Ambient> {
        Ambient::new(names.iter().copied(), self.field, self.limits).expect("distinct names")
    }

    fn algebra(&self, names: &[&str], relations: &[&str]) -> AlgebraPresentation {
        let amb = self.ambient(names);
        let rels = relations
            .iter()
            .map(|r| crate::frontend::parse_polynomial(&amb, r).expect("corpus relation parses"))
            .collect();
        AlgebraPresentation::new(&amb, rels).expect("corpus algebras are nonzero")
    }

    fn coeff(&mut self) -> u32 {
        self.rng.gen_range(1..self.field.modulus())
    }

    fn monomial(&mut self, n: usize, degree: u32) -> Monomial {
        let mut e = vec![0u16; n];
        for _ in 0..degree {
            e[self.rng.gen_range(0..n)] += 1;
        }
        Monomial::from_exponents(e)
    }

    /// Homogeneous form with up to `nterms` terms.
    fn form(&mut self, amb: &Arc<Ambient>, degree: u32, nterms: usize) -> Polynomial {
        loop {
            let terms: Vec<(Monomial, u32)> =
                (0..nterms).map(|_| (self.monomial(amb.nvars(), degree), self.coeff())).collect();
            let f = Polynomial::from_terms(amb, terms);
            if !f.is_zero() {
                return f;
            }
        }
    }

    fn polynomial_ring(&mut self, names: &[&str], n: usize) -> Factor {
        Factor { algebra: AlgebraPresentation::polynomial_ring(&self.ambient(&names[..n])), kind: FactorKind::Polynomial }
    }

    fn complete_intersection(&mut self, names: &[&str]) -> Result<Factor> {
        let n = self.rng.gen_range(2..=self.budget.max_vars_per_factor);
        let amb = self.ambient(&names[..n]);
        let poly = AlgebraPresentation::polynomial_ring(&amb);
        let c = self.rng.gen_range(1..=(n - 1).min(2));
        for _ in 0..16 {
            let forms: Vec<Polynomial> = (0..c)
                .map(|_| {
                    let d = self.rng.gen_range(2..=self.budget.max_degree);
                    let t = self.rng.gen_range(2..=3);
                    self.form(&amb, d, t)
                })
                .collect();
            if is_regular_sequence(&poly, &forms)? {
                return Ok(Factor { algebra: AlgebraPresentation::new(&amb, forms)?, kind: FactorKind::CompleteIntersection });
            }
        }
        // pure powers always form a regular sequence
        let forms = (0..c).map(|k| Polynomial::var(&amb, k).pow(2)).collect::<Result<Vec<_>>>()?;
        Ok(Factor { algebra: AlgebraPresentation::new(&amb, forms)?, kind: FactorKind::CompleteIntersection })
    }

    fn non_cm(&mut self, names: &[&str]) -> Factor {
        let (x, y, z, w) = (names[0], names[1], names[2], names[3]);
        let sq = |a: &str| format!("{a}^2");
        let m = |a: &str, b: &str| format!("{a}*{b}");
        let mut templates: Vec<(usize, Vec<String>)> = vec![
            (2, vec![sq(x), m(x, y)]),
            (3, vec![sq(x), m(x, y)]),
            (2, vec![format!("{x}^3"), format!("{x}^2*{y}")]),
            (3, vec![sq(x), m(x, y), m(x, z)]),
            (3, vec![sq(y), m(x, y)]),
        ];
        if self.budget.max_vars_per_factor >= 4 {
            templates.push((4, vec![m(x, z), m(x, w), m(y, z), m(y, w)]));
            templates.push((4, vec![sq(x), m(x, y)]));
        }
        templates.retain(|(n, _)| *n <= self.budget.max_vars_per_factor);
        let (n, rels) = templates.choose(&mut self.rng).expect("nonempty").clone();
        let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
        Factor { algebra: self.algebra(&names[..n], &rels), kind: FactorKind::NonCohenMacaulay }
    }

    fn artinian(&mut self, names: &[&str]) -> Factor {
        let (x, y) = (names[0], names[1]);
        let templates: Vec<(usize, Vec<String>)> = vec![
            (1, vec![format!("{x}^2")]),
            (1, vec![format!("{x}^3")]),
            (2, vec![format!("{x}^2"), format!("{y}^2")]),
            (2, vec![format!("{x}^2"), format!("{x}*{y}"), format!("{y}^2")]),
            (2, vec![format!("{x}^2"), format!("{y}^3")]),
        ];
        let (n, rels) = templates.choose(&mut self.rng).expect("nonempty").clone();
        let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
        Factor { algebra: self.algebra(&names[..n], &rels), kind: FactorKind::Artinian }
    }

    fn factor(&mut self, kind: FactorKind, names: &[&str]) -> Result<Factor> {
        let f = match kind {
            FactorKind::Polynomial => {
                let n = self.rng.gen_range(1..=self.budget.max_vars_per_factor.min(3));
                self.polynomial_ring(names, n)
            }
            FactorKind::CompleteIntersection => self.complete_intersection(names)?,
            FactorKind::NonCohenMacaulay => self.non_cm(names),
            FactorKind::Artinian => self.artinian(names),
        };
        let verdict = is_cohen_macaulay(&f.algebra, 0)?;
        assert_eq!(verdict.is_cm, kind.cm_label(), "corpus self-check failed for {}", f.algebra);
        Ok(f)
    }

    /// A nonzero ideal generated by polynomials without constant term
    /// (hence proper in these graded algebras).
    fn ideal(&mut self, a: &AlgebraPresentation) -> Result<AlgebraIdeal> {
        let amb = a.ambient().clone();
        let n = amb.nvars();
        for _ in 0..32 {
            let gens: Vec<Polynomial> = match self.rng.gen_range(0..4) {
                0 => {
                    let k = self.rng.gen_range(1..=n);
                    let mut idx: Vec<usize> = (0..n).collect();
                    idx.shuffle(&mut self.rng);
                    idx[..k].iter().map(|&i| Polynomial::var(&amb, i)).collect()
                }
                1 => {
                    let k = self.rng.gen_range(1..=3);
                    (0..k)
                        .map(|_| {
                            let d = self.rng.gen_range(1..=self.budget.max_degree);
                            let m = self.monomial(n, d);
                            Polynomial::from_terms(&amb, [(m, 1)])
                        })
                        .collect()
                }
                2 => {
                    let k = self.rng.gen_range(1..=2);
                    (0..k)
                        .map(|_| {
                            let mut f = Polynomial::zero(&amb);
                            for _ in 0..self.rng.gen_range(1..=3) {
                                let d = self.rng.gen_range(1..=2);
                                let m = self.monomial(n, d);
                                let c = self.coeff();
                                f = f.add(&Polynomial::from_terms(&amb, [(m, c)])).expect("same ambient");
                            }
                            f
                        })
                        .collect()
                }
                _ => (0..n).map(|i| Polynomial::var(&amb, i)).collect(),
            };
            let mut distinct: Vec<Polynomial> = Vec::with_capacity(gens.len());
            for g in gens {
                if !distinct.contains(&g) {
                    distinct.push(g);
                }
            }
            let ideal = AlgebraIdeal::new(a, distinct)?;
            if ideal.is_proper()? && !ideal.is_zero()? {
                return Ok(ideal);
            }
        }
        Ok(a.irrelevant_ideal())
    }

    /// A proper ideal generated by random affine linear forms.
    fn linear_prime(&mut self, t: &AlgebraPresentation) -> Result<Option<AlgebraIdeal>> {
        let amb = t.ambient().clone();
        let n = amb.nvars();
        for _ in 0..16 {
            let r = self.rng.gen_range(1..=n);
            let mut gens = Vec::with_capacity(r);
            for _ in 0..r {
                let mut f = if self.rng.gen_bool(0.5) {
                    Polynomial::var(&amb, self.rng.gen_range(0..n))
                } else {
                    let mut f = Polynomial::zero(&amb);
                    for _ in 0..self.rng.gen_range(2..=3) {
                        let v = Polynomial::var(&amb, self.rng.gen_range(0..n));
                        f = f.add(&v.scale(self.coeff()))?;
                    }
                    f
                };
                if self.rng.gen_bool(0.25) {
                    f = f.add(&Polynomial::constant(&amb, self.rng.gen_range(1..10)))?;
                }
                if !f.is_zero() && !gens.contains(&f) {
                    gens.push(f);
                }
            }
            if gens.is_empty() || gens.iter().any(|g| g.total_degree() == Some(0)) {
                continue;
            }
            let p = AlgebraIdeal::new(t, gens)?;
            if p.is_proper()? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }

    /// Permutable sequence of length `len` in a polynomial ring: powers of
    /// distinct variables or random forms, verified.
    fn permutable_sequence(&mut self, a: &AlgebraPresentation, len: usize) -> Result<Option<Vec<Polynomial>>> {
        let amb = a.ambient().clone();
        let n = amb.nvars();
        for attempt in 0..8 {
            let seq: Vec<Polynomial> = if attempt % 2 == 0 {
                let mut idx: Vec<usize> = (0..n).collect();
                idx.shuffle(&mut self.rng);
                idx[..len]
                    .iter()
                    .map(|&i| Polynomial::var(&amb, i).pow(self.rng.gen_range(1..=2)))
                    .collect::<Result<_>>()?
            } else {
                (0..len)
                    .map(|_| {
                        let d = self.rng.gen_range(1..=2);
                        self.form(&amb, d, 2)
                    })
                    .collect()
            };
            if is_permutable_regular_sequence(a, &seq)? {
                return Ok(Some(seq));
            }
        }
        Ok(None)
    }

    fn instance(&mut self, label: String, fa: Factor, fb: Factor) -> Result<CorpusInstance> {
        let i = self.ideal(&fa.algebra)?;
        let j = self.ideal(&fb.algebra)?;
        self.assemble(label, fa, fb, i, j, true)
    }

    fn assemble(
        &mut self,
        label: String,
        fa: Factor,
        fb: Factor,
        i: AlgebraIdeal,
        j: AlgebraIdeal,
        random_extras: bool,
    ) -> Result<CorpusInstance> {
        let t = tensor(&fa.algebra, &fb.algebra)?;
        let mut assumptions = Vec::new();
        let (mut prime, mut xs, mut ys) = (None, Vec::new(), Vec::new());
        let both_poly = fa.kind == FactorKind::Polynomial && fb.kind == FactorKind::Polynomial;
        if both_poly && random_extras {
            prime = self.linear_prime(&t)?;
            if prime.is_some() {
                assumptions.push("P generated by affine linear forms: prime".to_string());
            }
            let max_len = fa.algebra.nvars().min(fb.algebra.nvars()).min(3);
            let len = self.rng.gen_range(1..=max_len);
            if let (Some(x), Some(y)) =
                (self.permutable_sequence(&fa.algebra, len)?, self.permutable_sequence(&fb.algebra, len)?)
            {
                xs = x;
                ys = y;
            }
        }
        if both_poly {
            assumptions.push("factors are polynomial rings: domains, equidimensional".to_string());
        }
        Ok(CorpusInstance {
            label,
            a: fa.algebra,
            b: fb.algebra,
            a_kind: fa.kind,
            b_kind: fb.kind,
            i,
            j,
            tensor: t,
            prime,
            xs,
            ys,
            assumptions,
        })
    }

    fn fixed(&mut self) -> Result<Vec<CorpusInstance>> {
        use FactorKind::*;
        let mut out = Vec::new();
        let mut add = |g: &mut Gen,
                       label: &str,
                       (an, ar, ak): (&[&str], &[&str], FactorKind),
                       (bn, br, bk): (&[&str], &[&str], FactorKind),
                       i: &[&str],
                       j: &[&str],
                       extras: (Option<&[&str]>, &[&str], &[&str])|
         -> Result<()> {
            let fa = Factor { algebra: g.algebra(an, ar), kind: ak };
            let fb = Factor { algebra: g.algebra(bn, br), kind: bk };
            let (ia, jb) = (fa.algebra.ideal_of(i), fb.algebra.ideal_of(j));
            let mut inst = g.assemble(label.to_string(), fa, fb, ia, jb, false)?;
            if let Some(p) = extras.0 {
                inst.prime = Some(inst.tensor.ideal_of(p));
            }
            inst.xs = extras.1.iter().map(|s| inst.a.poly(s).expect("parses")).collect();
            inst.ys = extras.2.iter().map(|s| inst.b.poly(s).expect("parses")).collect();
            out.push(inst);
            Ok(())
        };
        let none: (Option<&[&str]>, &[&str], &[&str]) = (None, &[], &[]);
        add(self, "fixed:xy-z", (&["x", "y"], &[], Polynomial), (&["z"], &[], Polynomial), &["x", "y"], &["z"],
            (Some(&["x", "y", "z"]), &["x"], &["z"]))?;
        add(self, "fixed:noncm-z", (&["x", "y"], &["x^2", "x*y"], NonCohenMacaulay), (&["z"], &[], Polynomial),
            &["x", "y"], &["z"], none)?;
        add(self, "fixed:x-artinian", (&["x"], &[], Polynomial), (&["y"], &["y^2"], Artinian), &["x"], &["y"], none)?;
        add(self, "fixed:artinian-y", (&["x"], &["x^2"], Artinian), (&["y"], &[], Polynomial), &["x"], &["y"], none)?;
        add(self, "fixed:x-yz", (&["x"], &[], Polynomial), (&["y", "z"], &[], Polynomial), &["x"], &["y", "z"],
            (Some(&["x", "y"]), &["x"], &["y"]))?;
        add(self, "fixed:xy-uv", (&["x", "y"], &[], Polynomial), (&["u", "v"], &[], Polynomial), &["x", "y"],
            &["u", "v"], (Some(&["x - u"]), &["x", "y"], &["u", "v"]))?;
        add(self, "fixed:artinian-artinian", (&["x"], &["x^2"], Artinian), (&["y"], &["y^3"], Artinian), &["x"],
            &["y"], none)?;
        add(self, "fixed:hypersurfaces", (&["x", "y"], &["x^2 + y^2"], CompleteIntersection),
            (&["u", "v"], &["u*v"], CompleteIntersection), &["x"], &["u", "v"], none)?;
        drop(add);
        Ok(out)
    }
}

/// Deterministic instance corpus for `seed`: a fixed list of reference
/// instances followed by `budget.instances` random ones cycling through
/// polynomial rings, homogeneous complete intersections, non-CM algebras of
/// the `(x^2, xy)` family and Artinian quotients. Every factor's CM label is
/// verified during generation.
pub fn generate_corpus(seed: u64, budget: CorpusBudget) -> Result<Corpus> {
    generate_corpus_over(seed, budget, PrimeField::default())
}

pub fn generate_corpus_over(seed: u64, budget: CorpusBudget, field: PrimeField) -> Result<Corpus> {
    use FactorKind::*;
    let budget = budget.clamped();
    // concatenated Lemma 1.2 sequences reach length 6
    let limits = Limits { permutation_bound: 6, ..Limits::default() };
    let mut g = Gen { rng: ChaCha8Rng::seed_from_u64(seed), field, limits, budget };
    let mut instances = g.fixed()?;
    let schedule = [
        (Polynomial, Polynomial),
        (NonCohenMacaulay, Polynomial),
        (Polynomial, Polynomial),
        (CompleteIntersection, Polynomial),
        (Polynomial, Polynomial),
        (Polynomial, NonCohenMacaulay),
        (Polynomial, Polynomial),
    ];
    let rotating = [
        (Artinian, Polynomial),
        (Artinian, Artinian),
        (CompleteIntersection, CompleteIntersection),
        (NonCohenMacaulay, Artinian),
    ];
    for k in 0..budget.instances {
        let slot = k % (schedule.len() + 1);
        let (ka, kb) = if slot < schedule.len() { schedule[slot] } else { rotating[(k / 8) % rotating.len()] };
        // every fifth instance reuses the left names on the right to exercise renaming
        let right: &[&str] = if k % 5 == 4 { &LEFT_NAMES } else { &RIGHT_NAMES };
        let fa = g.factor(ka, &LEFT_NAMES)?;
        let fb = g.factor(kb, right)?;
        let label = format!("random:{k}:{}-{}", ka.as_str(), kb.as_str());
        instances.push(g.instance(label, fa, fb)?);
    }
    Ok(Corpus { seed, instances })
}
