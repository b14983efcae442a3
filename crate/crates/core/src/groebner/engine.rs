//! Buchberger's algorithm on polynomials stored as term vectors sorted
//! decreasingly under the working order.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, PrimeField, Term};

pub(crate) type WPoly = Vec<Term>;

pub(crate) struct Engine<'a> {
    ord: &'a MonomialOrder,
    field: PrimeField,
    budget: u64,
    steps: u64,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

impl<'a> Engine<'a> {
    pub fn new(ord: &'a MonomialOrder, field: PrimeField, budget: u64) -> Self {
        Engine { ord, field, budget, steps: 0 }
    }

    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            Err(Error::StepBudgetExceeded { budget: self.budget })
        } else {
            Ok(())
        }
    }

    /// `p - c * m * g`.
    fn sub_mul(&self, p: &[Term], c: u32, m: &Monomial, g: &[Term]) -> WPoly {
        let f = self.field;
        let nc = f.neg(c);
        let mut out = Vec::with_capacity(p.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let mut gj = g.first().map(|t| t.mono.mul(m));
        while i < p.len() {
            let Some(gm) = gj.as_ref() else { break };
            match self.ord.cmp(&p[i].mono, gm) {
                Ordering::Greater => {
                    out.push(p[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { mono: gj.take().unwrap(), coeff: f.mul(nc, g[j].coeff) });
                    j += 1;
                    gj = g.get(j).map(|t| t.mono.mul(m));
                }
                Ordering::Equal => {
                    let s = f.add(p[i].coeff, f.mul(nc, g[j].coeff));
                    if s != 0 {
                        out.push(Term { mono: gj.take().unwrap(), coeff: s });
                    }
                    i += 1;
                    j += 1;
                    gj = g.get(j).map(|t| t.mono.mul(m));
                }
            }
        }
        out.extend_from_slice(&p[i..]);
        if let Some(gm) = gj {
            out.push(Term { mono: gm, coeff: f.mul(nc, g[j].coeff) });
            out.extend(g[j + 1..].iter().map(|t| Term { mono: t.mono.mul(m), coeff: f.mul(nc, t.coeff) }));
        }
        out
    }

    /// Full reduction of `f` by `basis` (multivariate division). The first
    /// basis element whose leading monomial divides the current term is used.
    pub fn reduce(&mut self, f: &[Term], basis: &[&WPoly]) -> Result<WPoly> {
        let field = self.field;
        let mut p: WPoly = f.to_vec();
        let mut start = 0;
        let mut rem = Vec::new();
        while start < p.len() {
            let lt = &p[start];
            match basis.iter().find(|g| g[0].mono.divides(&lt.mono)) {
                Some(g) => {
                    self.tick()?;
                    let m = g[0].mono.quotient_of(&lt.mono);
                    let c = field.mul(lt.coeff, field.inv(g[0].coeff));
                    p = self.sub_mul(&p[start..], c, &m, g);
                    start = 0;
                }
                None => {
                    rem.push(lt.clone());
                    start += 1;
                }
            }
        }
        Ok(rem)
    }

    /// Exact quotient `h / g`, or `None` when `g` does not divide `h`.
    pub fn divide_exact(&mut self, h: &[Term], g: &WPoly) -> Result<Option<WPoly>> {
        let field = self.field;
        let inv = field.inv(g[0].coeff);
        let mut p: WPoly = h.to_vec();
        let mut q = Vec::new();
        while let Some(lt) = p.first() {
            if !g[0].mono.divides(&lt.mono) {
                return Ok(None);
            }
            self.tick()?;
            let m = g[0].mono.quotient_of(&lt.mono);
            let c = field.mul(lt.coeff, inv);
            p = self.sub_mul(&p, c, &m, g);
            q.push(Term { mono: m, coeff: c });
        }
        Ok(Some(q))
    }

    fn monic(&self, mut p: WPoly) -> WPoly {
        if let Some(lc) = p.first().map(|t| t.coeff) {
            if lc != 1 {
                let inv = self.field.inv(lc);
                for t in &mut p {
                    t.coeff = self.field.mul(t.coeff, inv);
                }
            }
        }
        p
    }

    fn spoly(&self, f: &WPoly, g: &WPoly, lcm: &Monomial) -> WPoly {
        // f and g are monic
        let mf = f[0].mono.quotient_of(lcm);
        let mg = g[0].mono.quotient_of(lcm);
        let scaled: WPoly = f[1..].iter().map(|t| Term { mono: t.mono.mul(&mf), coeff: t.coeff }).collect();
        self.sub_mul(&scaled, 1, &mg, &g[1..])
    }

    /// Reduced Groebner basis: monic, interreduced, sorted by increasing
    /// leading monomial. Zero input polynomials are ignored.
    pub fn reduced_groebner(&mut self, gens: Vec<WPoly>) -> Result<Vec<WPoly>> {
        let mut polys: Vec<WPoly> = Vec::new();
        let mut basis: Vec<usize> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();

        let mut gens: Vec<WPoly> = gens.into_iter().filter(|g| !g.is_empty()).collect();
        gens.sort_by(|a, b| self.ord.cmp(&a[0].mono, &b[0].mono));
        for g in gens {
            let h = {
                let refs: Vec<&WPoly> = basis.iter().map(|&k| &polys[k]).collect();
                self.reduce(&g, &refs)?
            };
            if !h.is_empty() {
                polys.push(self.monic(h));
                self.update(&polys, &mut basis, &mut pairs, polys.len() - 1);
            }
        }

        while !pairs.is_empty() {
            let k = (0..pairs.len())
                .min_by(|&a, &b| {
                    let (la, lb) = (&pairs[a].lcm, &pairs[b].lcm);
                    la.degree().cmp(&lb.degree()).then_with(|| self.ord.cmp(la, lb))
                })
                .unwrap();
            let pair = pairs.swap_remove(k);
            let s = self.spoly(&polys[pair.i], &polys[pair.j], &pair.lcm);
            let h = {
                let refs: Vec<&WPoly> = basis.iter().map(|&k| &polys[k]).collect();
                self.reduce(&s, &refs)?
            };
            if !h.is_empty() {
                let h = self.monic(h);
                let unit = h[0].mono.is_one();
                polys.push(h);
                self.update(&polys, &mut basis, &mut pairs, polys.len() - 1);
                if unit {
                    break;
                }
            }
        }

        // `basis` is minimal; interreduce tails.
        let mut out = Vec::with_capacity(basis.len());
        for (pos, &k) in basis.iter().enumerate() {
            let others: Vec<&WPoly> =
                basis.iter().enumerate().filter(|&(q, _)| q != pos).map(|(_, &k)| &polys[k]).collect();
            let head = polys[k][0].clone();
            let tail = self.reduce(&polys[k][1..], &others)?;
            let mut g = Vec::with_capacity(tail.len() + 1);
            g.push(head);
            g.extend(tail);
            out.push(g);
        }
        out.sort_by(|a, b| self.ord.cmp(&a[0].mono, &b[0].mono));
        Ok(out)
    }

    /// Gebauer-Moeller installation of the new element `h`: applies the
    /// coprime-leading-monomial and chain criteria.
    fn update(&self, polys: &[WPoly], basis: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
        let lm_h = &polys[h][0].mono;
        let mut c: Vec<(usize, Monomial)> = basis.iter().map(|&g| (g, lm_h.lcm(&polys[g][0].mono))).collect();
        let mut d: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = c.pop() {
            let coprime = lm_h.is_coprime(&polys[g1][0].mono);
            let dominated = c.iter().chain(d.iter()).any(|(_, l2)| l2.divides(&l1));
            if coprime || !dominated {
                d.push((g1, l1));
            }
        }
        pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && lm_h.lcm(&polys[p.i][0].mono) != p.lcm
                && lm_h.lcm(&polys[p.j][0].mono) != p.lcm)
        });
        pairs.extend(
            d.into_iter()
                .filter(|(g, _)| !lm_h.is_coprime(&polys[*g][0].mono))
                .map(|(g, lcm)| Pair { i: g, j: h, lcm }),
        );
        basis.retain(|&g| !lm_h.divides(&polys[g][0].mono));
        basis.push(h);
    }
}
