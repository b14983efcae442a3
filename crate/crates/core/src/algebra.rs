//! Finitely presented algebras `F_p[x_1..x_n]/J`, their tensor products and
//! the transport of ideals between a tensor product and its factors.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::IdealPresentation;
use crate::polyring::{Ambient, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Variable names of a tensor product: the left names unchanged, clashing
/// right names suffixed with the smallest index making them fresh. Returns
/// the names and the `(old, new)` renaming table of the right factor.
pub fn tensor_variable_names(left: &[String], right: &[String]) -> (Vec<String>, Vec<(String, String)>) {
    let mut names: Vec<String> = left.to_vec();
    let mut renaming = Vec::new();
    for v in right {
        if !names.contains(v) {
            names.push(v.clone());
            continue;
        }
        let mut k = 1;
        let fresh = loop {
            let cand = format!("{v}{k}");
            if !names.contains(&cand) && !right.contains(&cand) {
                break cand;
            }
            k += 1;
        };
        renaming.push((v.clone(), fresh.clone()));
        names.push(fresh);
    }
    (names, renaming)
}

/// How a tensor presentation was assembled from its factors.
#[derive(Clone, Debug)]
pub struct TensorParts {
    pub left: AlgebraPresentation,
    pub right: AlgebraPresentation,
    /// Slot in the tensor ambient of each left variable.
    pub left_map: Vec<usize>,
    pub right_map: Vec<usize>,
    /// Renamed right-factor variables, `(original, new)`.
    pub renaming: Vec<(String, String)>,
}

impl TensorParts {
    pub fn factor(&self, side: Side) -> &AlgebraPresentation {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn map(&self, side: Side) -> &[usize] {
        match side {
            Side::Left => &self.left_map,
            Side::Right => &self.right_map,
        }
    }
}

struct AlgebraInner {
    ambient: Arc<Ambient>,
    relations: IdealPresentation,
    homogeneous: bool,
    tensor: Option<TensorParts>,
}

/// `F_p[vars]/J`, always nonzero. Cheap to clone.
#[derive(Clone)]
pub struct AlgebraPresentation {
    inner: Arc<AlgebraInner>,
}

impl fmt::Debug for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraPresentation({self})")
    }
}

impl fmt::Display for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = &self.inner.ambient;
        write!(f, "F_{}[{}]", a.field().modulus(), a.names().join(","))?;
        let rels = self.inner.relations.generators();
        if !rels.is_empty() {
            write!(f, "/{}", self.inner.relations)?;
        }
        Ok(())
    }
}

impl AlgebraPresentation {
    /// Validates that the relations do not generate the unit ideal.
    pub fn new(ambient: &Arc<Ambient>, relations: Vec<Polynomial>) -> Result<Self> {
        let relations = IdealPresentation::new(ambient, relations)?;
        Self::from_relations(relations, None)
    }

    pub fn polynomial_ring(ambient: &Arc<Ambient>) -> Self {
        Self::new(ambient, Vec::new()).expect("polynomial rings are nonzero")
    }

    fn from_relations(relations: IdealPresentation, tensor: Option<TensorParts>) -> Result<Self> {
        if !relations.is_proper()? {
            return Err(Error::ZeroRing);
        }
        let homogeneous = relations.generators().iter().all(Polynomial::is_homogeneous);
        Ok(AlgebraPresentation {
            inner: Arc::new(AlgebraInner { ambient: relations.ambient().clone(), relations, homogeneous, tensor }),
        })
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.inner.ambient
    }

    pub fn relations(&self) -> &IdealPresentation {
        &self.inner.relations
    }

    pub fn is_homogeneous(&self) -> bool {
        self.inner.homogeneous
    }

    pub fn tensor_parts(&self) -> Option<&TensorParts> {
        self.inner.tensor.as_ref()
    }

    pub fn nvars(&self) -> usize {
        self.inner.ambient.nvars()
    }

    /// Same presentation: identical object, or same ambient and relation list.
    pub fn same_as(&self, other: &AlgebraPresentation) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (*self.inner.ambient == *other.inner.ambient
                && self.inner.relations.generators() == other.inner.relations.generators())
    }

    /// Parses `text` as a polynomial in this algebra's variables.
    pub fn poly(&self, text: &str) -> Result<Polynomial, crate::frontend::ParseError> {
        crate::frontend::parse_polynomial(self.ambient(), text)
    }

    /// The ideal generated by `text`-polynomials; panics on parse errors.
    /// Intended for tests and examples.
    pub fn ideal_of(&self, gens: &[&str]) -> AlgebraIdeal {
        let gens = gens.iter().map(|g| self.poly(g).expect("valid polynomial")).collect();
        AlgebraIdeal::new(self, gens).expect("same ambient")
    }

    /// The ideal generated by all variables.
    pub fn irrelevant_ideal(&self) -> AlgebraIdeal {
        let a = self.ambient();
        let gens = (0..a.nvars()).map(|i| Polynomial::var(a, i)).collect();
        AlgebraIdeal::new(self, gens).expect("same ambient")
    }

    pub fn zero_ideal(&self) -> AlgebraIdeal {
        AlgebraIdeal::new(self, Vec::new()).expect("same ambient")
    }

    /// `self / I`, presented by the lift of `I`.
    pub fn quotient(&self, ideal: &AlgebraIdeal) -> Result<AlgebraPresentation> {
        if !ideal.owner.same_as(self) {
            return Err(Error::OwnerMismatch);
        }
        match Self::from_relations(ideal.lift.clone(), None) {
            Err(Error::ZeroRing) => Err(Error::ImproperIdeal(ideal.to_string())),
            r => r,
        }
    }

    /// Embeds a polynomial of the `side` factor into this tensor product.
    pub fn embed_poly(&self, f: &Polynomial, side: Side) -> Result<Polynomial> {
        let parts = self.tensor_parts().ok_or(Error::NotATensor)?;
        parts.factor(side).ambient().check_same(f.ambient())?;
        Ok(f.remap(self.ambient(), parts.map(side)))
    }
}

/// `A ⊗ B` on the disjoint union of the variables, clashing right variables
/// renamed, with both relation sets.
pub fn tensor(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<AlgebraPresentation> {
    let (fa, fb) = (a.ambient().field(), b.ambient().field());
    if fa != fb {
        return Err(Error::AmbientMismatch { left: a.ambient().describe(), right: b.ambient().describe() });
    }
    let (names, renaming) = tensor_variable_names(a.ambient().names(), b.ambient().names());
    let ambient = Ambient::new(names, fa, a.ambient().limits())?;
    let na = a.nvars();
    let left_map: Vec<usize> = (0..na).collect();
    let right_map: Vec<usize> = (na..na + b.nvars()).collect();
    let mut rels: Vec<Polynomial> = a.relations().generators().iter().map(|g| g.remap(&ambient, &left_map)).collect();
    rels.extend(b.relations().generators().iter().map(|g| g.remap(&ambient, &right_map)));
    let relations = IdealPresentation::new(&ambient, rels)?;
    let parts = TensorParts { left: a.clone(), right: b.clone(), left_map, right_map, renaming };
    let t = AlgebraPresentation::from_relations(relations, Some(parts))?;
    debug_assert_eq!(t.is_homogeneous(), a.is_homogeneous() && b.is_homogeneous());
    Ok(t)
}

/// An ideal of an algebra, stored through its lift to the ambient
/// polynomial ring (user generators plus the relations).
#[derive(Clone)]
pub struct AlgebraIdeal {
    owner: AlgebraPresentation,
    generators: Vec<Polynomial>,
    lift: IdealPresentation,
}

impl fmt::Debug for AlgebraIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraIdeal({self} in {})", self.owner)
    }
}

impl fmt::Display for AlgebraIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl AlgebraIdeal {
    pub fn new(owner: &AlgebraPresentation, generators: Vec<Polynomial>) -> Result<Self> {
        let ambient = owner.ambient();
        let mut lift_gens = Vec::with_capacity(generators.len() + owner.relations().generators().len());
        for g in &generators {
            ambient.check_same(g.ambient())?;
            lift_gens.push(g.remap(ambient, &(0..ambient.nvars()).collect::<Vec<_>>()));
        }
        let generators = lift_gens.clone();
        lift_gens.extend(owner.relations().generators().iter().cloned());
        let lift = IdealPresentation::new(ambient, lift_gens)?;
        Ok(AlgebraIdeal { owner: owner.clone(), generators, lift })
    }

    pub fn owner(&self) -> &AlgebraPresentation {
        &self.owner
    }

    /// Generators as given, without the relations.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn lift(&self) -> &IdealPresentation {
        &self.lift
    }

    pub fn is_proper(&self) -> Result<bool> {
        self.lift.is_proper()
    }

    pub fn require_proper(&self) -> Result<()> {
        if self.is_proper()? {
            Ok(())
        } else {
            Err(Error::ImproperIdeal(self.to_string()))
        }
    }

    /// The zero ideal of the owner algebra, i.e. every generator lies in
    /// the relations.
    pub fn is_zero(&self) -> Result<bool> {
        let rels = self.owner.relations();
        for g in &self.generators {
            if !rels.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.lift.contains(f)
    }

    /// Equal as ideals of the same algebra.
    pub fn equals(&self, other: &AlgebraIdeal) -> Result<bool> {
        self.lift.equals(&other.lift)
    }

    /// The same generators viewed in another presentation on the same ambient
    /// (for instance the image of `P` in `T / (p ⊗ B + A ⊗ q)`).
    pub fn image_in(&self, target: &AlgebraPresentation) -> Result<AlgebraIdeal> {
        AlgebraIdeal::new(target, self.generators.clone())
    }
}

/// `I ⊗ B` (side left) or `A ⊗ J` (side right) inside the tensor `t`.
pub fn embed_ideal(ideal: &AlgebraIdeal, t: &AlgebraPresentation, side: Side) -> Result<AlgebraIdeal> {
    let parts = t.tensor_parts().ok_or(Error::NotATensor)?;
    if !parts.factor(side).same_as(ideal.owner()) {
        return Err(Error::SideMismatch(side.as_str()));
    }
    let gens = ideal.generators().iter().map(|g| g.remap(t.ambient(), parts.map(side))).collect();
    AlgebraIdeal::new(t, gens)
}

/// `I ⊗ B + A ⊗ J`.
pub fn joined_ideal(i: &AlgebraIdeal, j: &AlgebraIdeal, t: &AlgebraPresentation) -> Result<AlgebraIdeal> {
    i.require_proper()?;
    j.require_proper()?;
    let ei = embed_ideal(i, t, Side::Left)?;
    let ej = embed_ideal(j, t, Side::Right)?;
    let gens = ei.generators().iter().chain(ej.generators()).cloned().collect();
    AlgebraIdeal::new(t, gens)
}

/// `I ⊗ J`, generated by the products of embedded generators.
pub fn product_ideal(i: &AlgebraIdeal, j: &AlgebraIdeal, t: &AlgebraPresentation) -> Result<AlgebraIdeal> {
    i.require_proper()?;
    j.require_proper()?;
    let ei = embed_ideal(i, t, Side::Left)?;
    let ej = embed_ideal(j, t, Side::Right)?;
    let mut gens = Vec::with_capacity(ei.generators().len() * ej.generators().len());
    for f in ei.generators() {
        for g in ej.generators() {
            gens.push(f.mul(g)?);
        }
    }
    AlgebraIdeal::new(t, gens)
}

/// `P ∩ A` (left) or `P ∩ B` (right): eliminates the other factor's
/// variables from the lift of `P`.
pub fn contract(p: &AlgebraIdeal, side: Side) -> Result<AlgebraIdeal> {
    let t = p.owner();
    let parts = t.tensor_parts().ok_or(Error::NotATensor)?;
    let eliminated = p.lift().eliminate(parts.map(side.other()))?;
    let factor = parts.factor(side);
    let keep = parts.map(side);
    let gens = eliminated.generators().iter().map(|g| g.restrict(factor.ambient(), keep)).collect();
    AlgebraIdeal::new(factor, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(vars: &[&str], rels: &[&str]) -> AlgebraPresentation {
        let amb = Ambient::with_vars(vars);
        let rels = rels.iter().map(|r| crate::frontend::parse_polynomial(&amb, r).unwrap()).collect();
        AlgebraPresentation::new(&amb, rels).unwrap()
    }

    fn same(i: &AlgebraIdeal, gens: &[&str]) -> bool {
        i.equals(&i.owner().ideal_of(gens)).unwrap()
    }

    #[test]
    fn presentations() {
        assert_eq!(ring(&["x"], &[]).to_string(), "F_32003[x]");
        assert_eq!(ring(&["x", "y"], &["x^2", "x*y"]).to_string(), "F_32003[x,y]/(x^2, x*y)");
        let amb = Ambient::with_vars(&["x"]);
        assert_eq!(AlgebraPresentation::new(&amb, vec![Polynomial::one(&amb)]).unwrap_err(), Error::ZeroRing);
        let amb = Ambient::with_vars(&["x", "y"]);
        let rels = vec![Polynomial::var(&amb, 0), Polynomial::var(&amb, 0).sub(&Polynomial::one(&amb)).unwrap()];
        assert_eq!(AlgebraPresentation::new(&amb, rels).unwrap_err(), Error::ZeroRing);
    }

    #[test]
    fn tensors() {
        let t = tensor(&ring(&["x"], &[]), &ring(&["y"], &[])).unwrap();
        assert_eq!(t.ambient().names(), ["x", "y"]);
        assert!(t.relations().is_zero_ideal());
        let t = tensor(&ring(&["x"], &["x^2"]), &ring(&["y"], &["y^3"])).unwrap();
        assert_eq!(t.to_string(), "F_32003[x,y]/(x^2, y^3)");
        let a = ring(&["x", "y"], &["x^2", "x*y"]);
        let t = tensor(&a, &ring(&[], &[])).unwrap();
        assert_eq!(t.ambient().names(), a.ambient().names());
        assert!(t.relations().equals(a.relations()).unwrap());
    }

    #[test]
    fn clashing_names_are_renamed() {
        let t = tensor(&ring(&["x", "y"], &["x*y"]), &ring(&["x", "x1"], &["x^2"])).unwrap();
        assert_eq!(t.ambient().names(), ["x", "y", "x2", "x1"]);
        assert_eq!(t.tensor_parts().unwrap().renaming, vec![("x".to_string(), "x2".to_string())]);
        assert!(t.relations().equals(&t.relations().reordered(crate::polyring::MonomialOrder::Lex)).unwrap());
        assert!(t.relations().contains(&t.poly("x2^2").unwrap()).unwrap());
    }

    #[test]
    fn embeddings() {
        let (a, b) = (ring(&["x"], &[]), ring(&["y"], &[]));
        let t = tensor(&a, &b).unwrap();
        let e = embed_ideal(&a.ideal_of(&["x"]), &t, Side::Left).unwrap();
        assert!(same(&e, &["x"]));
        let e = embed_ideal(&a.zero_ideal(), &t, Side::Left).unwrap();
        assert!(e.is_zero().unwrap());
        assert_eq!(embed_ideal(&a.ideal_of(&["x"]), &t, Side::Right).unwrap_err(), Error::SideMismatch("right"));
        assert_eq!(embed_ideal(&a.ideal_of(&["x"]), &a, Side::Left).unwrap_err(), Error::NotATensor);

        let (a, b) = (ring(&["x", "y"], &[]), ring(&["z"], &[]));
        let t = tensor(&a, &b).unwrap();
        assert!(same(&embed_ideal(&a.ideal_of(&["x", "y"]), &t, Side::Left).unwrap(), &["x", "y"]));
        assert!(same(&joined_ideal(&a.ideal_of(&["x", "y"]), &b.ideal_of(&["z"]), &t).unwrap(), &["x", "y", "z"]));
    }

    #[test]
    fn joined_and_product_ideals() {
        let (a, b) = (ring(&["x"], &[]), ring(&["y"], &[]));
        let t = tensor(&a, &b).unwrap();
        assert!(same(&joined_ideal(&a.ideal_of(&["x"]), &b.ideal_of(&["y"]), &t).unwrap(), &["x", "y"]));
        assert!(joined_ideal(&a.zero_ideal(), &b.zero_ideal(), &t).unwrap().is_zero().unwrap());
        assert!(same(&product_ideal(&a.ideal_of(&["x"]), &b.ideal_of(&["y"]), &t).unwrap(), &["x*y"]));
        assert!(product_ideal(&a.ideal_of(&["x"]), &b.zero_ideal(), &t).unwrap().is_zero().unwrap());

        let (a, b) = (ring(&["x"], &[]), ring(&["y", "z"], &[]));
        let t = tensor(&a, &b).unwrap();
        assert!(same(&product_ideal(&a.ideal_of(&["x"]), &b.ideal_of(&["y", "z"]), &t).unwrap(), &["x*y", "x*z"]));
        let unit = a.ideal_of(&["1 + x - x"]);
        assert!(matches!(joined_ideal(&unit, &b.zero_ideal(), &t), Err(Error::ImproperIdeal(_))));
    }

    #[test]
    fn contractions() {
        let (a, b) = (ring(&["x"], &[]), ring(&["y"], &[]));
        let t = tensor(&a, &b).unwrap();
        assert!(same(&contract(&t.ideal_of(&["x", "y"]), Side::Left).unwrap(), &["x"]));
        assert!(contract(&t.ideal_of(&["x - y"]), Side::Left).unwrap().is_zero().unwrap());
        let t = tensor(&ring(&["x", "y"], &[]), &ring(&["z"], &[])).unwrap();
        let q = contract(&t.ideal_of(&["x", "y", "z"]), Side::Right).unwrap();
        assert!(same(&q, &["z"]));
        assert_eq!(q.owner().ambient().names(), ["z"]);
    }

    #[test]
    fn contraction_sees_relations() {
        // in F[x]/(x^2) ⊗ F[y], the ideal (x - y) contracts to (x^2) = 0 on the left
        let t = tensor(&ring(&["x"], &["x^2"]), &ring(&["y"], &[])).unwrap();
        let p = contract(&t.ideal_of(&["x - y"]), Side::Right).unwrap();
        assert!(same(&p, &["y^2"]));
    }
}
