//! Group rings `F2[G]` and `Z[G]` over deck groups.
//!
//! Elements are sparse maps from canonical group elements to nonzero
//! arbitrary-precision coefficients. Over `F2[Z]` they are exactly Laurent
//! polynomials in `t`, over `F2[Z^2]` Laurent polynomials in `s, t`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::deckgroup::{nilpotent_times_z, DeckElement, DeckGroup, DeckValue, Word};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coefficients {
    F2,
    #[serde(alias = "int", alias = "z")]
    Integers,
}

impl Coefficients {
    pub fn normalize(&self, c: BigInt) -> BigInt {
        match self {
            Coefficients::F2 => c.mod_floor(&BigInt::from(2)),
            Coefficients::Integers => c,
        }
    }

    pub fn is_unit(&self, c: &BigInt) -> bool {
        match self {
            Coefficients::F2 => c.is_one(),
            Coefficients::Integers => c.abs().is_one(),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "f2" => Ok(Coefficients::F2),
            "int" | "z" | "integers" => Ok(Coefficients::Integers),
            _ => Err(Error::Parse { what: "coefficient ring", input: s.to_string() }),
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coefficients::F2 => "F2",
            Coefficients::Integers => "Z",
        })
    }
}

/// A finite formal sum `Σ c_g g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    group: DeckGroup,
    coeffs: Coefficients,
    terms: BTreeMap<DeckElement, BigInt>,
}

impl RingElement {
    pub fn zero(group: DeckGroup, coeffs: Coefficients) -> Self {
        RingElement { group, coeffs, terms: BTreeMap::new() }
    }

    pub fn one(group: DeckGroup, coeffs: Coefficients) -> Self {
        Self::monomial(group.identity(), coeffs, BigInt::one())
    }

    pub fn monomial(g: DeckElement, coeffs: Coefficients, c: impl Into<BigInt>) -> Self {
        let mut r = Self::zero(g.group(), coeffs);
        r.add_term(g, c.into());
        r
    }

    /// Sums the given terms, collapsing repeats.
    pub fn from_terms(
        group: DeckGroup,
        coeffs: Coefficients,
        terms: impl IntoIterator<Item = (DeckElement, BigInt)>,
    ) -> Result<Self> {
        let mut r = Self::zero(group, coeffs);
        for (g, c) in terms {
            if g.group() != group {
                return Err(Error::GroupMismatch { left: group.to_string(), right: g.group().to_string() });
            }
            r.add_term(g, c);
        }
        Ok(r)
    }

    /// Laurent polynomial in one variable from `(exponent, coefficient)` pairs.
    pub fn laurent(coeffs: Coefficients, terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let group = DeckGroup::FreeAbelian { rank: 1 };
        let mut r = Self::zero(group, coeffs);
        for (e, c) in terms {
            let g = group.generator_power(1, e).expect("rank one");
            r.add_term(g, BigInt::from(c));
        }
        r
    }

    pub(crate) fn add_term(&mut self, g: DeckElement, c: BigInt) {
        let entry = self.terms.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                let c = self.coeffs.normalize(c);
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let c = self.coeffs.normalize(o.get() + c);
                if c.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = c;
                }
            }
        }
    }

    pub fn group(&self) -> DeckGroup {
        self.group
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coeffs
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DeckElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coefficient(&self.group.identity()).is_one()
    }

    pub fn coefficient(&self, g: &DeckElement) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_else(BigInt::zero)
    }

    fn check_compatible(&self, other: &RingElement) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch { left: self.group.to_string(), right: other.group.to_string() });
        }
        if self.coeffs != other.coeffs {
            return Err(Error::CoefficientMismatch { left: self.coeffs.to_string(), right: other.coeffs.to_string() });
        }
        Ok(())
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.check_compatible(other)?;
        let mut r = self.clone();
        for (g, c) in &other.terms {
            r.add_term(g.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RingElement {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> RingElement {
        let mut r = Self::zero(self.group, self.coeffs);
        for (g, d) in &self.terms {
            r.add_term(g.clone(), c * d);
        }
        r
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.check_compatible(other)?;
        let mut r = Self::zero(self.group, self.coeffs);
        for (g, c) in &self.terms {
            for (h, d) in &other.terms {
                r.add_term(g.mul_unchecked(h), c * d);
            }
        }
        Ok(r)
    }

    pub fn pow(&self, k: u32) -> Result<RingElement> {
        let mut r = Self::one(self.group, self.coeffs);
        for _ in 0..k {
            r = r.mul(self)?;
        }
        Ok(r)
    }

    /// `g · self`.
    pub fn left_translate(&self, g: &DeckElement) -> Result<RingElement> {
        if g.group() != self.group {
            return Err(Error::GroupMismatch { left: self.group.to_string(), right: g.group().to_string() });
        }
        let mut r = Self::zero(self.group, self.coeffs);
        for (h, c) in &self.terms {
            r.add_term(g.mul_unchecked(h), c.clone());
        }
        Ok(r)
    }

    /// `self · g`.
    pub fn right_translate(&self, g: &DeckElement) -> Result<RingElement> {
        if g.group() != self.group {
            return Err(Error::GroupMismatch { left: self.group.to_string(), right: g.group().to_string() });
        }
        let mut r = Self::zero(self.group, self.coeffs);
        for (h, c) in &self.terms {
            r.add_term(h.mul_unchecked(g), c.clone());
        }
        Ok(r)
    }

    /// The involution `Σ c_g g ↦ Σ c_g g⁻¹`.
    pub fn conjugate(&self) -> RingElement {
        let mut r = Self::zero(self.group, self.coeffs);
        for (g, c) in &self.terms {
            r.add_term(g.inverse(), c.clone());
        }
        r
    }

    /// Sum of coefficients: the image under the map to the trivial group.
    pub fn augmentation(&self) -> BigInt {
        self.coeffs.normalize(self.terms.values().sum())
    }

    /// Pushes every term through `hom`, collecting collisions.
    pub fn apply_hom(&self, hom: &Hom) -> Result<RingElement> {
        let target = hom.target(self.group)?;
        let mut r = Self::zero(target, self.coeffs);
        for (g, c) in &self.terms {
            r.add_term(hom.apply(g)?, c.clone());
        }
        Ok(r)
    }

    /// Reinterprets the coefficients in another ring (reduction mod 2 when
    /// going to `F2`).
    pub fn with_coefficients(&self, coeffs: Coefficients) -> RingElement {
        let mut r = Self::zero(self.group, coeffs);
        for (g, c) in &self.terms {
            r.add_term(g.clone(), c.clone());
        }
        r
    }

    /// One term whose coefficient is a unit of the coefficient ring.
    pub fn is_monomial_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| self.coeffs.is_unit(c))
    }

    /// Exponent of `t` for single-variable Laurent elements.
    fn degrees(&self) -> Result<Vec<BigInt>> {
        match self.group {
            DeckGroup::FreeAbelian { rank: 1 } => {
                Ok(self.terms.keys().map(|g| g.as_vector().expect("vector")[0].clone()).collect())
            }
            DeckGroup::Free { rank: 1 } => {
                Ok(self.terms.keys().map(|g| BigInt::from(g.as_word().expect("word").exponent_sum(1))).collect())
            }
            other => Err(Error::Unsupported(format!("a single-variable Laurent ring, got {other}"))),
        }
    }

    pub fn min_degree(&self) -> Result<Option<BigInt>> {
        Ok(self.degrees()?.into_iter().min())
    }

    pub fn max_degree(&self) -> Result<Option<BigInt>> {
        Ok(self.degrees()?.into_iter().max())
    }

    /// Translate so the componentwise-minimal exponent vector sits at the
    /// origin; over `Z` also fix the sign of the first term to be positive.
    /// Two elements are associates iff their normal forms agree.
    pub fn associate_normal_form(&self) -> Result<RingElement> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let shift = match self.group {
            DeckGroup::FreeAbelian { rank } => {
                let mut mins = vec![None::<BigInt>; rank as usize];
                for g in self.terms.keys() {
                    for (m, e) in mins.iter_mut().zip(g.as_vector().expect("vector")) {
                        if m.as_ref().is_none_or(|cur| e < cur) {
                            *m = Some(e.clone());
                        }
                    }
                }
                let v = mins.into_iter().map(|m| -m.expect("nonempty")).collect();
                DeckElement::from_vector(self.group, v)?
            }
            DeckGroup::Free { rank: 1 } => {
                let min = self.min_degree()?.expect("nonempty");
                let e = (-min).to_i64().ok_or(Error::Unsupported("exponent in i64 range".into()))?;
                self.group.generator_power(1, e)?
            }
            DeckGroup::Cyclic { modulus } => {
                // Every translate is a candidate; keep the smallest map.
                let mut best: Option<RingElement> = None;
                for r in 0..modulus {
                    let g = DeckElement::from_residue(self.group, r as i64)?;
                    let cand = self.left_translate(&g)?.sign_normalized();
                    if best.as_ref().is_none_or(|b| cand.cmp_terms(b) == std::cmp::Ordering::Less) {
                        best = Some(cand);
                    }
                }
                return Ok(best.expect("modulus >= 1"));
            }
            other => return Err(Error::Unsupported(format!("a commutative group ring, got {other}"))),
        };
        Ok(self.left_translate(&shift)?.sign_normalized())
    }

    fn sign_normalized(&self) -> RingElement {
        match self.terms.values().next() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    fn cmp_terms(&self, other: &RingElement) -> std::cmp::Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }

    /// Human-readable sum in increasing term order, e.g.
    /// `t^-3 + t^-1 + 1 + t + t^3`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (g, c)) in self.display_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = g.monomial();
            if mono == "1" {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else if matches!(g.value(), DeckValue::Word(_)) {
                out.push_str(&format!("{abs}*{mono}"));
            } else {
                out.push_str(&format!("{abs}{mono}"));
            }
        }
        out
    }

    /// Terms in display order. Cyclic elements are shown by their balanced
    /// residue, so they are sorted by that instead of the stored residue.
    fn display_terms(&self) -> Vec<(&DeckElement, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        if let DeckGroup::Cyclic { modulus } = self.group {
            v.sort_by_key(|(g, _)| crate::deckgroup::balanced(g.as_residue().expect("residue"), modulus));
        }
        v
    }

    /// `[(token, coefficient)]` in increasing term order.
    pub fn term_list(&self) -> Vec<(String, BigInt)> {
        self.terms.iter().map(|(g, c)| (g.token(), c.clone())).collect()
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Coefficient as it appears in JSON: a number when it fits, else a string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WireInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for WireInt {
    fn from(c: &BigInt) -> Self {
        match c.to_i64() {
            Some(v) => WireInt::Small(v),
            None => WireInt::Big(c.to_string()),
        }
    }
}

impl TryFrom<&WireInt> for BigInt {
    type Error = Error;
    fn try_from(w: &WireInt) -> Result<BigInt> {
        match w {
            WireInt::Small(v) => Ok(BigInt::from(*v)),
            WireInt::Big(s) => s.parse().map_err(|_| Error::Parse { what: "integer", input: s.clone() }),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct WireRingElement {
    group: DeckGroup,
    coefficients: Coefficients,
    terms: Vec<(String, WireInt)>,
}

impl Serialize for RingElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireRingElement {
            group: self.group,
            coefficients: self.coeffs,
            terms: self.terms.iter().map(|(g, c)| (g.token(), WireInt::from(c))).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = WireRingElement::deserialize(d)?;
        let group = wire.group.validate().map_err(serde::de::Error::custom)?;
        let mut terms = Vec::with_capacity(wire.terms.len());
        for (tok, c) in &wire.terms {
            let g = group.parse_element(tok).map_err(serde::de::Error::custom)?;
            terms.push((g, BigInt::try_from(c).map_err(serde::de::Error::custom)?));
        }
        RingElement::from_terms(group, wire.coefficients, terms).map_err(serde::de::Error::custom)
    }
}

/// Group homomorphisms the engine pushes ring elements through.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hom {
    /// `x_i ↦ weights[i-1] ∈ Z^r`.
    Abelianize { weights: Vec<Vec<i64>> },
    /// `x_i ↦ weights[i-1] mod m`.
    CyclicProject { weights: Vec<i64>, modulus: u64 },
    /// `F_n → H ≅ Z^2`, `g ↦ (a, b)` where `φ(g) = φ(w)^a φ(x_n)^b`. Fails on
    /// terms outside `⟨w, x_n⟩`.
    BrunnianCoordinates { n: u32 },
}

impl Hom {
    pub fn abelianization(rank: u32) -> Hom {
        let weights = (0..rank)
            .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
            .collect();
        Hom::Abelianize { weights }
    }

    pub fn target(&self, source: DeckGroup) -> Result<DeckGroup> {
        match self {
            Hom::Abelianize { weights } => {
                let r = weights.first().map_or(0, |w| w.len() as u32);
                if weights.iter().any(|w| w.len() as u32 != r) {
                    return Err(Error::InvalidParameter("ragged abelianization weights".into()));
                }
                DeckGroup::free_abelian(r)
            }
            Hom::CyclicProject { modulus, .. } => {
                if let DeckGroup::Cyclic { modulus: src } = source {
                    if src % modulus != 0 {
                        return Err(Error::InvalidParameter(format!(
                            "Z/{src} does not map onto Z/{modulus}"
                        )));
                    }
                }
                DeckGroup::cyclic(*modulus)
            }
            Hom::BrunnianCoordinates { n } => match source {
                DeckGroup::Free { rank } if rank == *n && *n >= 2 => DeckGroup::free_abelian(2),
                other => Err(Error::GroupMismatch { left: format!("F_{n}"), right: other.to_string() }),
            },
        }
    }

    fn generator_images(&self, g: &DeckElement) -> Result<Vec<BigInt>> {
        let weight_rows: Vec<Vec<i64>> = match self {
            Hom::Abelianize { weights } => weights.clone(),
            Hom::CyclicProject { weights, .. } => weights.iter().map(|w| vec![*w]).collect(),
            Hom::BrunnianCoordinates { .. } => unreachable!(),
        };
        let dim = weight_rows.first().map_or(0, Vec::len);
        let mut out = vec![BigInt::zero(); dim];
        let mut add = |gen: u32, e: &BigInt| -> Result<()> {
            let row = weight_rows.get((gen - 1) as usize).ok_or(Error::GeneratorOutOfRange {
                index: gen,
                rank: weight_rows.len() as u32,
            })?;
            for (o, w) in out.iter_mut().zip(row) {
                *o += e * w;
            }
            Ok(())
        };
        match g.value() {
            DeckValue::Word(w) => {
                for &(gen, e) in w.letters() {
                    add(gen, &BigInt::from(e))?;
                }
            }
            DeckValue::Vector(v) => {
                for (i, e) in v.iter().enumerate() {
                    if !e.is_zero() {
                        add(i as u32 + 1, e)?;
                    }
                }
            }
            DeckValue::Residue(r) => {
                if *r != 0 {
                    add(1, &BigInt::from(*r))?;
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, g: &DeckElement) -> Result<DeckElement> {
        let target = self.target(g.group())?;
        match self {
            Hom::Abelianize { .. } => DeckElement::from_vector(target, self.generator_images(g)?),
            Hom::CyclicProject { modulus, .. } => {
                let v = self.generator_images(g)?.pop().unwrap_or_else(BigInt::zero);
                let r = v.mod_floor(&BigInt::from(*modulus)).to_i64().expect("residue fits");
                DeckElement::from_residue(target, r)
            }
            Hom::BrunnianCoordinates { n } => {
                let word = g.as_word().expect("free group element");
                let (m, b) = nilpotent_times_z(word, *n)?;
                let a = m.corner_coordinate().ok_or_else(|| Error::NotInSubgroup { term: word.to_string(), n: *n })?;
                // φ(w)^a = I + a·E_{1,n} and φ(x_n) = (I, 1).
                DeckElement::from_vector(target, vec![a, BigInt::from(b)])
            }
        }
    }
}

/// `dim_F2 F2[t^±1]/(a)`, or `None` ("infinite") when `a = 0`.
///
/// `F2[t^±1]` is a Euclidean domain whose units are the monomials, so the
/// quotient by a nonzero `a` has dimension `maxdeg a - mindeg a`.
pub fn laurent_span(a: &RingElement) -> Result<Option<u64>> {
    if a.coefficients() != Coefficients::F2 {
        return Err(Error::Unsupported("F2 coefficients".into()));
    }
    match (a.min_degree()?, a.max_degree()?) {
        (Some(lo), Some(hi)) => Ok(Some((hi - lo).to_u64().expect("span fits in u64"))),
        _ => Ok(None),
    }
}

/// True iff `a = u·b` for a monomial unit `u`.
pub fn are_associates(a: &RingElement, b: &RingElement) -> Result<bool> {
    a.check_compatible(b)?;
    Ok(a.associate_normal_form()? == b.associate_normal_form()?)
}

/// Convenience for word-built elements of `F2[F_n]` / `Z[F_n]`.
pub fn word_element(group: DeckGroup, coeffs: Coefficients, w: &Word) -> Result<RingElement> {
    Ok(RingElement::monomial(DeckElement::from_word(group, w.clone())?, coeffs, 1))
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn coeffs() -> impl Strategy<Value = Coefficients> {
        prop_oneof![Just(Coefficients::F2), Just(Coefficients::Integers)]
    }

    fn free_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((1u32..=2, prop_oneof![Just(-1i64), Just(1), Just(2)]), 0..4).prop_map(Word::reduce)
    }

    /// A random element of `R[F_2]` with a few terms.
    fn free_element(c: Coefficients) -> impl Strategy<Value = RingElement> {
        prop::collection::vec((free_word(), -3i64..=3), 0..5).prop_map(move |terms| {
            let group = DeckGroup::Free { rank: 2 };
            RingElement::from_terms(
                group,
                c,
                terms.into_iter().map(|(w, k)| (DeckElement::from_word(group, w).unwrap(), BigInt::from(k))),
            )
            .unwrap()
        })
    }

    fn laurent2(c: Coefficients, nonzero: bool) -> impl Strategy<Value = RingElement> {
        prop::collection::vec(((-4i64..=4, -4i64..=4), -3i64..=3), 1..6)
            .prop_map(move |terms| {
                let group = DeckGroup::FreeAbelian { rank: 2 };
                RingElement::from_terms(
                    group,
                    c,
                    terms.into_iter().map(|((a, b), k)| {
                        (DeckElement::from_vector(group, vec![a.into(), b.into()]).unwrap(), BigInt::from(k))
                    }),
                )
                .unwrap()
            })
            .prop_filter("nonzero", move |x| !nonzero || !x.is_zero())
    }

    fn laurent1() -> impl Strategy<Value = RingElement> {
        prop::collection::vec((-6i64..=6, 0i64..=1), 1..8)
            .prop_map(|terms| RingElement::laurent(Coefficients::F2, terms))
            .prop_filter("nonzero", |x| !x.is_zero())
    }

    fn triple() -> impl Strategy<Value = (RingElement, RingElement, RingElement)> {
        coeffs().prop_flat_map(|c| (free_element(c), free_element(c), free_element(c)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms((a, b, c) in triple()) {
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            let left = a.mul(&b.add(&c).unwrap()).unwrap();
            prop_assert_eq!(left, a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
            let right = a.add(&b).unwrap().mul(&c).unwrap();
            prop_assert_eq!(right, a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert!(a.sub(&a).unwrap().is_zero());
            let one = RingElement::one(a.group(), a.coefficients());
            prop_assert_eq!(a.mul(&one).unwrap(), a.clone());
        }

        #[test]
        fn conjugation_reverses_products((a, b, _c) in triple()) {
            prop_assert_eq!(a.mul(&b).unwrap().conjugate(), b.conjugate().mul(&a.conjugate()).unwrap());
        }
    }

    proptest! {
        #[test]
        fn homs_preserve_products((a, b) in coeffs().prop_flat_map(|c| (free_element(c), free_element(c)))) {
            for hom in [
                Hom::abelianization(2),
                Hom::CyclicProject { weights: vec![2, -3], modulus: 7 },
                Hom::Abelianize { weights: vec![vec![1, 1], vec![0, -1]] },
            ] {
                let lhs = a.mul(&b).unwrap().apply_hom(&hom).unwrap();
                let rhs = a.apply_hom(&hom).unwrap().mul(&b.apply_hom(&hom).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
                let sum = a.add(&b).unwrap().apply_hom(&hom).unwrap();
                prop_assert_eq!(sum, a.apply_hom(&hom).unwrap().add(&b.apply_hom(&hom).unwrap()).unwrap());
            }
        }

        #[test]
        fn associates_form_an_equivalence(
            (a, b) in coeffs().prop_flat_map(|c| (laurent2(c, true), laurent2(c, true))),
            s in -5i64..=5,
            t in -5i64..=5,
            neg in any::<bool>(),
        ) {
            let group = a.group();
            let u = DeckElement::from_vector(group, vec![s.into(), t.into()]).unwrap();
            let unit = RingElement::monomial(u, a.coefficients(), if neg { -1 } else { 1 });
            let au = a.mul(&unit).unwrap();
            prop_assert!(are_associates(&a, &a).unwrap());
            prop_assert!(are_associates(&a, &au).unwrap());
            prop_assert!(are_associates(&au, &a).unwrap());
            prop_assert_eq!(are_associates(&a, &b).unwrap(), are_associates(&b, &a).unwrap());
            prop_assert_eq!(are_associates(&au, &b).unwrap(), are_associates(&a, &b).unwrap());
            prop_assert_eq!(are_associates(&a, &b.mul(&unit).unwrap()).unwrap(), are_associates(&a, &b).unwrap());
        }

        #[test]
        fn span_is_additive(a in laurent1(), b in laurent1()) {
            let ab = a.mul(&b).unwrap();
            let total = laurent_span(&a).unwrap().unwrap() + laurent_span(&b).unwrap().unwrap();
            prop_assert_eq!(laurent_span(&ab).unwrap(), Some(total));
        }
    }
}
