//! Second homology of covers in the lifted sphere/disk basis.
//!
//! A class is a finite sum of translates `g·Ã` of lifted generators. All
//! intersection data comes from a [`PairingTable`]: the entry `P_{A,B}` is the
//! group ring element `Σ_g ⟨Ã, g·B̃⟩ g`, and equivariance `⟨g x, g y⟩ = ⟨x, y⟩`
//! extends it to every pair of lifts.
//!
//! A barbell with cuffs `A₁, A₂` and bar holonomy `c` lifts to one barbell per
//! deck element `u`, with cuffs `u·Ã₁` and `u·c·Ã₂`. On homology each lift acts
//! by `x ↦ x + ⟨x, u·Ã₁⟩ u·c·Ã₂ − ⟨x, u·c·Ã₂⟩ u·Ã₁`, and since distinct lifts
//! are disjoint the lifted diffeomorphism acts by the sum over all `u`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::deckgroup::{DeckElement, DeckGroup};
use crate::error::{Error, Result};
use crate::groupring::{Coefficients, RingElement, WireInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelKind {
    Sphere,
    Disk,
    Meridian,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorLabel {
    pub name: String,
    pub kind: LabelKind,
}

impl GeneratorLabel {
    pub fn sphere(name: &str) -> Self {
        GeneratorLabel { name: name.into(), kind: LabelKind::Sphere }
    }

    pub fn disk(name: &str) -> Self {
        GeneratorLabel { name: name.into(), kind: LabelKind::Disk }
    }

    pub fn meridian(name: &str) -> Self {
        GeneratorLabel { name: name.into(), kind: LabelKind::Meridian }
    }
}

/// How a pairing behaves under swapping its arguments:
/// `⟨A, B⟩ = ε ⟨B, A⟩`, with `ε = (−1)^{pq}` for classes of dimensions `p, q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    #[default]
    Symmetric,
    Antisymmetric,
}

/// Stored entries `P_{A,B}`; the reversed pairs are derived through the
/// involution `P_{B,A}(g) = ε P_{A,B}(g⁻¹)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairingTable {
    entries: BTreeMap<(String, String), RingElement>,
    symmetry: Symmetry,
}

impl PairingTable {
    pub fn new(symmetry: Symmetry) -> Self {
        PairingTable { entries: BTreeMap::new(), symmetry }
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn insert(&mut self, a: &str, b: &str, value: RingElement) {
        self.entries.insert((a.to_string(), b.to_string()), value);
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(String, String), &RingElement)> {
        self.entries.iter()
    }

    fn stored(&self, a: &str, b: &str) -> Option<RingElement> {
        if let Some(p) = self.entries.get(&(a.to_string(), b.to_string())) {
            return Some(p.clone());
        }
        self.entries.get(&(b.to_string(), a.to_string())).map(|p| {
            let q = p.conjugate();
            match self.symmetry {
                Symmetry::Symmetric => q,
                Symmetry::Antisymmetric => q.neg(),
            }
        })
    }
}

/// Everything the engine needs to know about a cover: deck group,
/// coefficients, generators, their pairings and handle roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Geometry {
    pub name: String,
    pub group: DeckGroup,
    pub coeffs: Coefficients,
    labels: Vec<GeneratorLabel>,
    pub pairings: PairingTable,
    /// Attaching spheres of the top handles: the relations of π₂.
    pub attaching: Vec<String>,
    /// Disks dual to the belt spheres: the generators of π₂.
    pub disks: Vec<String>,
    /// Classes that die in the homology of interest (e.g. meridians).
    pub kernel: Vec<EquivClass>,
    /// Labels whose lifts are homologous to the lifts of another label
    /// (parallel copies); used when comparing classes in homology.
    pub aliases: BTreeMap<String, String>,
}

impl Geometry {
    pub fn new(name: &str, group: DeckGroup, coeffs: Coefficients, symmetry: Symmetry) -> Self {
        Geometry {
            name: name.into(),
            group,
            coeffs,
            labels: Vec::new(),
            pairings: PairingTable::new(symmetry),
            attaching: Vec::new(),
            disks: Vec::new(),
            kernel: Vec::new(),
            aliases: BTreeMap::new(),
        }
    }

    pub fn add_label(&mut self, label: GeneratorLabel) -> Result<()> {
        if self.labels.iter().any(|l| l.name == label.name) {
            return Err(Error::DuplicateLabel(label.name));
        }
        self.labels.push(label);
        Ok(())
    }

    pub fn with_labels(mut self, labels: impl IntoIterator<Item = GeneratorLabel>) -> Result<Self> {
        for l in labels {
            self.add_label(l)?;
        }
        Ok(self)
    }

    pub fn labels(&self) -> &[GeneratorLabel] {
        &self.labels
    }

    pub fn label(&self, name: &str) -> Result<&GeneratorLabel> {
        self.labels.iter().find(|l| l.name == name).ok_or_else(|| Error::UnknownLabel(name.into()))
    }

    /// Records `P_{A,B}` given as `(deck element, coefficient)` pairs.
    pub fn set_pairing(&mut self, a: &str, b: &str, terms: impl IntoIterator<Item = (DeckElement, i64)>) -> Result<()> {
        self.label(a)?;
        self.label(b)?;
        let p = RingElement::from_terms(self.group, self.coeffs, terms.into_iter().map(|(g, c)| (g, BigInt::from(c))))?;
        self.pairings.insert(a, b, p);
        Ok(())
    }

    pub fn set_pairing_element(&mut self, a: &str, b: &str, p: RingElement) -> Result<()> {
        self.label(a)?;
        self.label(b)?;
        if p.group() != self.group || p.coefficients() != self.coeffs {
            return Err(Error::GroupMismatch { left: self.group.to_string(), right: p.group().to_string() });
        }
        self.pairings.insert(a, b, p);
        Ok(())
    }

    /// `P_{A,B} = Σ_g ⟨Ã, g·B̃⟩ g`. Missing entries are zero, except between
    /// two disks where the pairing is undefined.
    pub fn pairing(&self, a: &str, b: &str) -> Result<RingElement> {
        let ka = self.label(a)?.kind;
        let kb = self.label(b)?.kind;
        if let Some(p) = self.pairings.stored(a, b) {
            return Ok(p);
        }
        if ka == LabelKind::Disk && kb == LabelKind::Disk {
            return Err(Error::UndefinedPairing(a.into(), b.into()));
        }
        Ok(RingElement::zero(self.group, self.coeffs))
    }

    /// Checks the declared roles and table references.
    pub fn validate(&self) -> Result<()> {
        for ((a, b), p) in self.pairings.entries() {
            self.label(a)?;
            self.label(b)?;
            if p.group() != self.group {
                return Err(Error::GroupMismatch { left: self.group.to_string(), right: p.group().to_string() });
            }
        }
        for a in &self.attaching {
            if self.label(a)?.kind != LabelKind::Sphere {
                return Err(Error::Scenario(format!("attaching label {a:?} is not a sphere")));
            }
        }
        for d in &self.disks {
            if self.label(d)?.kind != LabelKind::Disk {
                return Err(Error::Scenario(format!("disk label {d:?} is not a disk")));
            }
        }
        for (from, to) in &self.aliases {
            self.label(from)?;
            self.label(to)?;
        }
        for k in &self.kernel {
            self.check_class(k)?;
        }
        Ok(())
    }

    fn check_class(&self, x: &EquivClass) -> Result<()> {
        if x.group != self.group || x.coeffs != self.coeffs {
            return Err(Error::GroupMismatch { left: self.group.to_string(), right: x.group.to_string() });
        }
        for (label, _) in x.terms.keys() {
            self.label(label)?;
        }
        Ok(())
    }

    pub fn class(&self) -> EquivClass {
        EquivClass::zero(self.group, self.coeffs)
    }

    /// The lift `g·Ã`.
    pub fn lift(&self, label: &str, g: &DeckElement) -> Result<EquivClass> {
        self.label(label)?;
        let mut x = self.class();
        x.add_term(label, g.clone(), BigInt::one());
        Ok(x)
    }

    /// The preferred lift `Ã`.
    pub fn basis(&self, label: &str) -> Result<EquivClass> {
        self.lift(label, &self.group.identity())
    }
}

/// A finite sum `Σ c · g·Ã`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EquivClass {
    group: DeckGroup,
    coeffs: Coefficients,
    terms: BTreeMap<(String, DeckElement), BigInt>,
}

impl EquivClass {
    pub fn zero(group: DeckGroup, coeffs: Coefficients) -> Self {
        EquivClass { group, coeffs, terms: BTreeMap::new() }
    }

    pub fn group(&self) -> DeckGroup {
        self.group
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coeffs
    }

    pub fn add_term(&mut self, label: &str, g: DeckElement, c: BigInt) {
        let key = (label.to_string(), g);
        let sum = self.coeffs.normalize(self.terms.get(&key).cloned().unwrap_or_default() + c);
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    /// Builder form of [`EquivClass::add_term`].
    pub fn with_term(mut self, label: &str, g: DeckElement, c: impl Into<BigInt>) -> Self {
        self.add_term(label, g, c.into());
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&str, &DeckElement, &BigInt)> {
        self.terms.iter().map(|((l, g), c)| (l.as_str(), g, c))
    }

    pub fn coefficient(&self, label: &str, g: &DeckElement) -> BigInt {
        self.terms.get(&(label.to_string(), g.clone())).cloned().unwrap_or_default()
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

    fn check_compatible(&self, other: &EquivClass) -> Result<()> {
        if self.group != other.group || self.coeffs != other.coeffs {
            return Err(Error::GroupMismatch { left: self.group.to_string(), right: other.group.to_string() });
        }
        Ok(())
    }

    pub fn add(&self, other: &EquivClass) -> Result<EquivClass> {
        self.check_compatible(other)?;
        let mut r = self.clone();
        for ((l, g), c) in &other.terms {
            r.add_term(l, g.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, other: &EquivClass) -> Result<EquivClass> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> EquivClass {
        let mut r = EquivClass::zero(self.group, self.coeffs);
        for ((l, g), d) in &self.terms {
            r.add_term(l, g.clone(), c * d);
        }
        r
    }

    /// `g · x`.
    pub fn translate(&self, g: &DeckElement) -> Result<EquivClass> {
        if g.group() != self.group {
            return Err(Error::GroupMismatch { left: self.group.to_string(), right: g.group().to_string() });
        }
        let mut r = EquivClass::zero(self.group, self.coeffs);
        for ((l, h), c) in &self.terms {
            r.add_term(l, g.mul_unchecked(h), c.clone());
        }
        Ok(r)
    }

    /// Replaces labels according to `aliases` (homologous parallel copies).
    pub fn identify(&self, aliases: &BTreeMap<String, String>) -> EquivClass {
        let mut r = EquivClass::zero(self.group, self.coeffs);
        for ((l, g), c) in &self.terms {
            let target = aliases.get(l).unwrap_or(l);
            r.add_term(target, g.clone(), c.clone());
        }
        r
    }

    /// Pushforward to a quotient of the deck group, e.g. to the base space
    /// via the trivial group.
    pub fn push_forward(&self, hom: &crate::groupring::Hom) -> Result<EquivClass> {
        let target = hom.target(self.group)?;
        let mut r = EquivClass::zero(target, self.coeffs);
        for ((l, g), c) in &self.terms {
            r.add_term(l, hom.apply(g)?, c.clone());
        }
        Ok(r)
    }

    /// `t^-2 S_h + S_v - 3 t S_h` style rendering, terms in sorted order.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        let mut keys: Vec<_> = self.terms.iter().collect();
        if let DeckGroup::Cyclic { modulus } = self.group {
            keys.sort_by_key(|((l, g), _)| (l.clone(), crate::deckgroup::balanced(g.as_residue().expect("residue"), modulus)));
        }
        for (i, ((l, g), c)) in keys.into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            if !abs.is_one() {
                out.push_str(&format!("{abs} "));
            }
            let mono = g.monomial();
            if mono != "1" {
                if mono.contains(' ') {
                    out.push_str(&format!("({mono}) "));
                } else {
                    out.push_str(&format!("{mono} "));
                }
            }
            out.push_str(l);
        }
        out
    }

    pub fn term_list(&self) -> Vec<(String, String, BigInt)> {
        self.terms.iter().map(|((l, g), c)| (l.clone(), g.token(), c.clone())).collect()
    }
}

impl fmt::Display for EquivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Serialize, Deserialize)]
struct WireClass {
    group: DeckGroup,
    coefficients: Coefficients,
    terms: Vec<(String, String, WireInt)>,
}

impl Serialize for EquivClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireClass {
            group: self.group,
            coefficients: self.coeffs,
            terms: self.terms.iter().map(|((l, g), c)| (l.clone(), g.token(), WireInt::from(c))).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EquivClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = WireClass::deserialize(d)?;
        let group = wire.group.validate().map_err(serde::de::Error::custom)?;
        let mut x = EquivClass::zero(group, wire.coefficients);
        for (l, tok, c) in &wire.terms {
            let g = group.parse_element(tok).map_err(serde::de::Error::custom)?;
            x.add_term(l, g, BigInt::try_from(c).map_err(serde::de::Error::custom)?);
        }
        Ok(x)
    }
}

/// A barbell in the base, described by what the lifting needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarbellSpec {
    pub cuff1: String,
    pub cuff2: String,
    /// Bar holonomy `c`: lifted cuff pairs are `(u·Ã₁, u·c·Ã₂)`.
    pub holonomy: DeckElement,
    /// Orientation multipliers for the two cuffs. Reversing one cuff gives
    /// the inverse barbell when the cuffs pair trivially with each other.
    pub signs: (i8, i8),
    /// Number of times the diffeomorphism is applied (`β^k`).
    pub iterate: u32,
    /// Alternative lift: post-compose every application with this deck
    /// translation. `None` is the lift fixing the preimage of the complement.
    pub offset: Option<DeckElement>,
}

impl BarbellSpec {
    pub fn new(cuff1: &str, cuff2: &str, holonomy: DeckElement) -> Self {
        BarbellSpec { cuff1: cuff1.into(), cuff2: cuff2.into(), holonomy, signs: (1, 1), iterate: 1, offset: None }
    }

    pub fn iterate(mut self, k: u32) -> Self {
        self.iterate = k;
        self
    }

    pub fn signs(mut self, s1: i8, s2: i8) -> Self {
        self.signs = (s1, s2);
        self
    }

    /// The inverse barbell: one cuff orientation reversed.
    pub fn inverse(mut self) -> Self {
        self.signs = (-self.signs.0, -self.signs.1);
        self
    }

    pub fn offset(mut self, g: DeckElement) -> Self {
        self.offset = Some(g);
        self
    }
}

/// One uncollapsed summand produced by a barbell application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contribution {
    pub coefficient: BigInt,
    pub label: String,
    pub element: DeckElement,
}

/// `Σ_g ⟨x, g·B̃⟩ g`. A term `c·u·Ã` contributes `c·u·P_{A,B}`.
pub fn equivariant_pairing(geom: &Geometry, x: &EquivClass, b: &str) -> Result<RingElement> {
    geom.check_class(x)?;
    geom.label(b)?;
    let mut out = RingElement::zero(geom.group, geom.coeffs);
    let mut cache: BTreeMap<&str, RingElement> = BTreeMap::new();
    for ((a, u), c) in &x.terms {
        let p = match cache.get(a.as_str()) {
            Some(p) => p.clone(),
            None => {
                let p = geom.pairing(a, b)?;
                cache.insert(a, p.clone());
                p
            }
        };
        out = out.add(&p.left_translate(u)?.scale(c))?;
    }
    Ok(out)
}

/// `⟨x, y⟩` between two classes in the same cover.
pub fn pair_classes(geom: &Geometry, x: &EquivClass, y: &EquivClass) -> Result<BigInt> {
    geom.check_class(y)?;
    let mut total = BigInt::zero();
    let mut by_label: BTreeMap<&str, RingElement> = BTreeMap::new();
    for ((b, h), d) in &y.terms {
        if !by_label.contains_key(b.as_str()) {
            by_label.insert(b, equivariant_pairing(geom, x, b)?);
        }
        total += by_label[b.as_str()].coefficient(h) * d;
    }
    Ok(geom.coeffs.normalize(total))
}

fn check_spec(geom: &Geometry, spec: &BarbellSpec) -> Result<()> {
    for cuff in [&spec.cuff1, &spec.cuff2] {
        if geom.label(cuff)?.kind != LabelKind::Sphere {
            return Err(Error::CuffNotSphere(cuff.clone()));
        }
    }
    if spec.holonomy.group() != geom.group {
        return Err(Error::GroupMismatch { left: geom.group.to_string(), right: spec.holonomy.group().to_string() });
    }
    if let Some(o) = &spec.offset {
        if o.group() != geom.group {
            return Err(Error::GroupMismatch { left: geom.group.to_string(), right: o.group().to_string() });
        }
    }
    if !matches!(spec.signs.0, 1 | -1) || !matches!(spec.signs.1, 1 | -1) {
        return Err(Error::InvalidParameter(format!("cuff signs must be ±1, got {:?}", spec.signs)));
    }
    for (a, b) in [(&spec.cuff1, &spec.cuff1), (&spec.cuff1, &spec.cuff2), (&spec.cuff2, &spec.cuff2)] {
        if !geom.pairing(a, b)?.is_zero() {
            return Err(Error::CuffsIntersect(a.clone(), b.clone()));
        }
    }
    Ok(())
}

/// The correction terms of one application of the lifted barbell, before
/// anything is collected. Pairing `c·g·Ã` with `u·Ã₁` is nonzero exactly when
/// `g⁻¹u` is in the support of `P_{A,A₁}`, which makes the sum over `u` finite.
pub fn barbell_contributions(geom: &Geometry, x: &EquivClass, spec: &BarbellSpec) -> Result<Vec<Contribution>> {
    check_spec(geom, spec)?;
    geom.check_class(x)?;
    let c = &spec.holonomy;
    let c_inv = c.inverse();
    let s1 = BigInt::from(spec.signs.0);
    let s2 = BigInt::from(spec.signs.1);
    let mut out = Vec::new();
    for ((a, g), coef) in &x.terms {
        let p1 = geom.pairing(a, &spec.cuff1)?;
        for (h, p) in p1.terms() {
            let u = g.mul_unchecked(h);
            out.push(Contribution {
                coefficient: &s1 * coef * p,
                label: spec.cuff2.clone(),
                element: u.mul_unchecked(c),
            });
        }
        let p2 = geom.pairing(a, &spec.cuff2)?;
        for (h, p) in p2.terms() {
            let u = g.mul_unchecked(h).mul_unchecked(&c_inv);
            out.push(Contribution { coefficient: -(&s2 * coef * p), label: spec.cuff1.clone(), element: u });
        }
    }
    Ok(out)
}

fn apply_once(geom: &Geometry, x: &EquivClass, spec: &BarbellSpec) -> Result<EquivClass> {
    let mut r = x.clone();
    for t in barbell_contributions(geom, x, spec)? {
        r.add_term(&t.label, t.element, t.coefficient);
    }
    match &spec.offset {
        Some(o) => r.translate(o),
        None => Ok(r),
    }
}

/// Homology action of the lifted barbell diffeomorphism, `iterate` times.
pub fn barbell_action(geom: &Geometry, x: &EquivClass, spec: &BarbellSpec) -> Result<EquivClass> {
    check_spec(geom, spec)?;
    let mut r = x.clone();
    for _ in 0..spec.iterate {
        r = apply_once(geom, &r, spec)?;
    }
    Ok(r)
}

/// Applies the barbells in order: `specs[0]` acts first.
pub fn action_sequence(geom: &Geometry, x: &EquivClass, specs: &[BarbellSpec]) -> Result<EquivClass> {
    specs.iter().try_fold(x.clone(), |acc, s| barbell_action(geom, &acc, s))
}

/// Raw summands of `action_sequence`: the terms of `x` followed by every
/// contribution of every application, each computed on the collected class
/// of the previous step. Collecting the list gives the action's value.
pub fn action_expansion(geom: &Geometry, x: &EquivClass, specs: &[BarbellSpec]) -> Result<Vec<Contribution>> {
    let mut raw: Vec<Contribution> = x
        .terms()
        .map(|(l, g, c)| Contribution { coefficient: c.clone(), label: l.into(), element: g.clone() })
        .collect();
    let mut cur = x.clone();
    for spec in specs {
        check_spec(geom, spec)?;
        if spec.offset.is_some() {
            return Err(Error::Unsupported("raw expansion without lift offsets".into()));
        }
        for _ in 0..spec.iterate {
            let contribs = barbell_contributions(geom, &cur, spec)?;
            for t in &contribs {
                cur.add_term(&t.label, t.element.clone(), t.coefficient.clone());
            }
            raw.extend(contribs);
        }
    }
    Ok(raw)
}

/// `[⟨x, ·D̃_1⟩, ⟨x, ·D̃_2⟩, …]`: one row of the presentation matrix.
pub fn intersection_polynomial(geom: &Geometry, x: &EquivClass, disks: &[String]) -> Result<Vec<RingElement>> {
    disks.iter().map(|d| equivariant_pairing(geom, x, d)).collect()
}

/// Which basis elements count as "inside the summand".
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AllowedSupport {
    /// Every translate of these labels is allowed.
    pub labels: BTreeSet<String>,
    /// Individual lifts that are allowed.
    pub lifts: BTreeSet<(String, DeckElement)>,
}

impl AllowedSupport {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn labels<'a>(names: impl IntoIterator<Item = &'a str>) -> Self {
        AllowedSupport { labels: names.into_iter().map(String::from).collect(), lifts: BTreeSet::new() }
    }

    pub fn lifts<'a>(items: impl IntoIterator<Item = (&'a str, DeckElement)>) -> Self {
        AllowedSupport { labels: BTreeSet::new(), lifts: items.into_iter().map(|(l, g)| (l.to_string(), g)).collect() }
    }

    fn contains(&self, label: &str, g: &DeckElement) -> bool {
        self.labels.contains(label) || self.lifts.contains(&(label.to_string(), g.clone()))
    }
}

/// Is `x ≡ y (mod span kernel)` for some `y` supported on `allowed`?
///
/// Classes are compared in the geometry's homology basis: labels are first
/// identified through `geom.aliases`, then the question becomes whether the
/// restriction of `x` to the non-allowed coordinates lies in the span of the
/// restricted kernel generators, decided exactly over `F2` or `Z`.
pub fn summand_membership(
    geom: &Geometry,
    x: &EquivClass,
    allowed: &AllowedSupport,
    kernel: &[EquivClass],
) -> Result<bool> {
    geom.check_class(x)?;
    let canon = |label: &str| geom.aliases.get(label).cloned().unwrap_or_else(|| label.to_string());
    let allowed = AllowedSupport {
        labels: allowed.labels.iter().map(|l| canon(l)).collect(),
        lifts: allowed.lifts.iter().map(|(l, g)| (canon(l), g.clone())).collect(),
    };
    let restrict = |c: &EquivClass| -> BTreeMap<(String, DeckElement), BigInt> {
        c.identify(&geom.aliases)
            .terms
            .into_iter()
            .filter(|((l, g), _)| !allowed.contains(l, g))
            .collect()
    };
    let target = restrict(x);
    let cols: Vec<_> = kernel.iter().map(|k| {
        geom.check_class(k)?;
        Ok(restrict(k))
    }).collect::<Result<_>>()?;
    let mut coords: BTreeSet<(String, DeckElement)> = target.keys().cloned().collect();
    for c in &cols {
        coords.extend(c.keys().cloned());
    }
    let coords: Vec<_> = coords.into_iter().collect();
    let matrix: Vec<Vec<BigInt>> = coords
        .iter()
        .map(|key| cols.iter().map(|c| c.get(key).cloned().unwrap_or_default()).collect())
        .collect();
    let rhs: Vec<BigInt> = coords.iter().map(|key| target.get(key).cloned().unwrap_or_default()).collect();
    Ok(solvable(&matrix, &rhs, geom.coeffs))
}

/// Witness values `⟨y, W⟩` and `⟨K_j, W⟩` for each witness class `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCheck {
    pub target_values: Vec<BigInt>,
    pub kernel_values: Vec<Vec<BigInt>>,
    /// True when the values prove `y ∉ span(kernel)`.
    pub refuted: bool,
}

/// Certifies `y ∉ span(kernel)` using only pairings: if `y = Σ a_j K_j` then
/// `⟨y, W⟩ = Σ a_j ⟨K_j, W⟩` for every witness `W`, so an unsolvable system
/// of witness equations refutes membership without knowing a basis.
pub fn witness_refutation(
    geom: &Geometry,
    y: &EquivClass,
    kernel: &[EquivClass],
    witnesses: &[EquivClass],
) -> Result<WitnessCheck> {
    let target_values: Vec<BigInt> = witnesses.iter().map(|w| pair_classes(geom, y, w)).collect::<Result<_>>()?;
    let kernel_values: Vec<Vec<BigInt>> = kernel
        .iter()
        .map(|k| witnesses.iter().map(|w| pair_classes(geom, k, w)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let matrix: Vec<Vec<BigInt>> = (0..witnesses.len())
        .map(|i| kernel_values.iter().map(|col| col[i].clone()).collect())
        .collect();
    let refuted = !solvable(&matrix, &target_values, geom.coeffs);
    Ok(WitnessCheck { target_values, kernel_values, refuted })
}

/// Does `A c = b` have a solution with entries in the coefficient ring?
///
/// Column operations over `Z` (or `F2`) bring `A` to column echelon form; the
/// triangular system is then solved with exact divisibility checks.
pub fn solvable(a: &[Vec<BigInt>], b: &[BigInt], coeffs: Coefficients) -> bool {
    let rows = b.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|v| coeffs.normalize(v.clone())).collect()).collect();
    let rhs: Vec<BigInt> = b.iter().map(|v| coeffs.normalize(v.clone())).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    for r in 0..rows {
        if next == ncols {
            break;
        }
        // Euclid across columns next.. until a single nonzero remains in row r.
        loop {
            let nz: Vec<usize> = (next..ncols).filter(|&j| !m[r][j].is_zero()).collect();
            if nz.len() <= 1 {
                if let Some(&j) = nz.first() {
                    swap_cols(&mut m, j, next);
                    pivots.push((r, next));
                    next += 1;
                }
                break;
            }
            let p = *nz.iter().min_by_key(|&&j| m[r][j].abs()).expect("nonempty");
            for &j in &nz {
                if j != p {
                    let q = &m[r][j] / &m[r][p];
                    for row in m.iter_mut() {
                        let v = coeffs.normalize(&row[j] - &q * &row[p]);
                        row[j] = v;
                    }
                }
            }
        }
    }
    let mut sol = vec![BigInt::zero(); ncols];
    let mut pi = 0;
    for r in 0..rows {
        let mut residual = rhs[r].clone();
        for (j, s) in sol.iter().enumerate() {
            if !s.is_zero() {
                residual -= &m[r][j] * s;
            }
        }
        let residual = coeffs.normalize(residual);
        if pi < pivots.len() && pivots[pi].0 == r {
            let col = pivots[pi].1;
            let d = &m[r][col];
            if coeffs == Coefficients::F2 {
                sol[col] = residual;
            } else {
                if !(&residual % d).is_zero() {
                    return false;
                }
                sol[col] = &residual / d;
            }
            pi += 1;
        } else if !residual.is_zero() {
            return false;
        }
    }
    true
}

fn swap_cols(m: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> DeckGroup {
        DeckGroup::free_abelian(1).unwrap()
    }

    fn t(e: i64) -> DeckElement {
        z().generator_power(1, e).unwrap()
    }

    /// Complement of the unknotted torus: `P_{S_h,S_v} = 1 + t`, `P_{D_v,S_v} = 1`.
    fn torus() -> Geometry {
        let mut g = Geometry::new("torus", z(), Coefficients::F2, Symmetry::Symmetric)
            .with_labels([GeneratorLabel::sphere("S_h"), GeneratorLabel::sphere("S_v"), GeneratorLabel::disk("D_v")])
            .unwrap();
        g.set_pairing("S_h", "S_v", [(t(0), 1), (t(1), 1)]).unwrap();
        g.set_pairing("D_v", "S_v", [(t(0), 1)]).unwrap();
        g
    }

    #[test]
    fn pairing_through_involution() {
        let g = torus();
        assert_eq!(g.pairing("S_v", "S_h").unwrap(), RingElement::laurent(Coefficients::F2, [(0, 1), (-1, 1)]));
        assert!(g.pairing("S_h", "D_v").unwrap().is_zero());
        assert!(g.pairing("D_v", "D_v").is_err());
        assert!(g.pairing("S_x", "D_v").is_err());
    }

    #[test]
    fn equivariant_pairing_examples() {
        let g = torus();
        let one = RingElement::laurent(Coefficients::F2, [(0, 1)]);
        assert_eq!(equivariant_pairing(&g, &g.basis("S_v").unwrap(), "D_v").unwrap(), one);
        assert!(equivariant_pairing(&g, &g.basis("S_h").unwrap(), "D_v").unwrap().is_zero());
        let x = g.lift("S_v", &t(2)).unwrap().add(&g.lift("S_v", &t(3)).unwrap()).unwrap();
        assert_eq!(
            equivariant_pairing(&g, &x, "D_v").unwrap(),
            RingElement::laurent(Coefficients::F2, [(2, 1), (3, 1)])
        );
    }

    #[test]
    fn five_sphere_class() {
        let g = torus();
        let spec = BarbellSpec::new("S_h", "S_h", t(1));
        let r = barbell_action(&g, &g.basis("S_v").unwrap(), &spec).unwrap();
        let expected = g.class()
            .with_term("S_v", t(0), 1)
            .with_term("S_h", t(-2), 1)
            .with_term("S_h", t(-1), 1)
            .with_term("S_h", t(0), 1)
            .with_term("S_h", t(1), 1);
        assert_eq!(r, expected);
        assert_eq!(r.render(), "t^-2 S_h + t^-1 S_h + S_h + t S_h + S_v");
    }

    #[test]
    fn cuffs_must_be_disjoint_spheres() {
        let g = torus();
        assert!(matches!(
            barbell_action(&g, &g.class(), &BarbellSpec::new("S_h", "S_v", t(0))),
            Err(Error::CuffsIntersect(..))
        ));
        assert!(matches!(
            barbell_action(&g, &g.class(), &BarbellSpec::new("D_v", "S_h", t(0))),
            Err(Error::CuffNotSphere(_))
        ));
        let c = DeckGroup::cyclic(3).unwrap().identity();
        assert!(barbell_action(&g, &g.class(), &BarbellSpec::new("S_h", "S_h", c)).is_err());
    }

    #[test]
    fn class_disjoint_from_cuffs_is_fixed() {
        let g = torus();
        let x = g.basis("S_h").unwrap();
        assert_eq!(barbell_action(&g, &x, &BarbellSpec::new("S_h", "S_h", t(3))).unwrap(), x);
        assert_eq!(action_sequence(&g, &x, &[]).unwrap(), x);
    }

    #[test]
    fn offset_translates_the_result() {
        let g = torus();
        let x = g.basis("S_v").unwrap();
        let plain = barbell_action(&g, &x, &BarbellSpec::new("S_h", "S_h", t(1))).unwrap();
        let shifted = barbell_action(&g, &x, &BarbellSpec::new("S_h", "S_h", t(1)).offset(t(5))).unwrap();
        assert_eq!(shifted, plain.translate(&t(5)).unwrap());
    }

    #[test]
    fn solver_over_integers_and_f2() {
        let i = |v: i64| BigInt::from(v);
        // 2c = 3 has no integer solution but 2c = 4 does.
        assert!(!solvable(&[vec![i(2)]], &[i(3)], Coefficients::Integers));
        assert!(solvable(&[vec![i(2)]], &[i(4)], Coefficients::Integers));
        // 2c₁ + 3c₂ = 1 is solvable.
        assert!(solvable(&[vec![i(2), i(3)]], &[i(1)], Coefficients::Integers));
        assert!(!solvable(&[vec![i(1)], vec![i(1)]], &[i(1), i(0)], Coefficients::F2));
        assert!(solvable(&[], &[], Coefficients::F2));
        assert!(!solvable(&[vec![]], &[i(1)], Coefficients::Integers));
    }

    #[test]
    fn membership_with_aliases_and_kernel() {
        let c = DeckGroup::cyclic(7).unwrap();
        let r = |k: i64| DeckElement::from_residue(c, k).unwrap();
        let mut g = Geometry::new("toy", c, Coefficients::Integers, Symmetry::Symmetric)
            .with_labels([GeneratorLabel::sphere("S"), GeneratorLabel::sphere("S'"), GeneratorLabel::disk("D")])
            .unwrap();
        g.aliases.insert("S'".into(), "S".into());
        let x = g.class().with_term("D", r(0), 1).with_term("S", r(2), 1).with_term("S'", r(2), -1);
        assert!(summand_membership(&g, &x, &AllowedSupport::labels(["D"]), &[]).unwrap());
        let y = g.class().with_term("S", r(2), 2);
        let k = g.class().with_term("S'", r(2), 1);
        assert!(summand_membership(&g, &y, &AllowedSupport::none(), std::slice::from_ref(&k)).unwrap());
        let y3 = g.class().with_term("S", r(2), 3).with_term("S", r(1), 1);
        assert!(!summand_membership(&g, &y3, &AllowedSupport::none(), &[k]).unwrap());
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::groupring::laurent_span;
    use proptest::prelude::*;

    fn z() -> DeckGroup {
        DeckGroup::FreeAbelian { rank: 1 }
    }

    fn t(e: i64) -> DeckElement {
        z().generator_power(1, e).unwrap()
    }

    fn torus(coeffs: Coefficients) -> Geometry {
        let sign = if coeffs == Coefficients::F2 { 1 } else { -1 };
        let mut g = Geometry::new("torus", z(), coeffs, Symmetry::Symmetric)
            .with_labels([GeneratorLabel::sphere("S_h"), GeneratorLabel::sphere("S_v"), GeneratorLabel::disk("D_v")])
            .unwrap();
        g.set_pairing("S_h", "S_v", [(t(0), 1), (t(1), sign)]).unwrap();
        g.set_pairing("D_v", "S_v", [(t(0), 1)]).unwrap();
        g
    }

    fn class_on(labels: &'static [&'static str], coeffs: Coefficients) -> impl Strategy<Value = EquivClass> {
        prop::collection::vec((prop::sample::select(labels), -6i64..=6, -3i64..=3), 0..8).prop_map(move |terms| {
            terms.into_iter().fold(EquivClass::zero(z(), coeffs), |x, (l, e, c)| x.with_term(l, t(e), c))
        })
    }

    fn coeffs() -> impl Strategy<Value = Coefficients> {
        prop_oneof![Just(Coefficients::F2), Just(Coefficients::Integers)]
    }

    const ALL: &[&str] = &["S_h", "S_v", "D_v"];

    proptest! {
        #[test]
        fn action_is_linear(
            (c, x, y) in coeffs().prop_flat_map(|c| (Just(c), class_on(ALL, c), class_on(ALL, c))),
            e in -4i64..=4,
            k in 1u32..=3,
            cuff in prop::sample::select(&["S_h", "S_v"][..]),
        ) {
            let g = torus(c);
            let spec = BarbellSpec::new(cuff, cuff, t(e)).iterate(k);
            let lhs = barbell_action(&g, &x.add(&y).unwrap(), &spec).unwrap();
            let rhs = barbell_action(&g, &x, &spec).unwrap().add(&barbell_action(&g, &y, &spec).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn classes_missing_the_cuffs_are_fixed(
            (c, x) in coeffs().prop_flat_map(|c| (Just(c), class_on(&["S_h", "D_v"], c))),
            e in -4i64..=4,
        ) {
            let g = torus(c);
            let spec = BarbellSpec::new("S_h", "S_h", t(e));
            prop_assert_eq!(barbell_action(&g, &x, &spec).unwrap(), x);
        }

        #[test]
        fn inverse_undoes_the_action(
            (c, x) in coeffs().prop_flat_map(|c| (Just(c), class_on(ALL, c))),
            e in -4i64..=4,
        ) {
            let g = torus(c);
            let spec = BarbellSpec::new("S_v", "S_v", t(e));
            let there = barbell_action(&g, &x, &spec).unwrap();
            prop_assert_eq!(barbell_action(&g, &there, &spec.inverse()).unwrap(), x);
        }

        #[test]
        fn support_stays_within_the_degree_bound(k in 1i64..=10, l in 1i64..=10) {
            let g = torus(Coefficients::F2);
            let specs = [BarbellSpec::new("S_h", "S_h", t(k)), BarbellSpec::new("S_v", "S_v", t(l))];
            let x = action_sequence(&g, &g.basis("S_v").unwrap(), &specs).unwrap();
            let bound = k + l + 1;
            for (_, el, _) in x.terms() {
                let e = i64::try_from(&el.as_vector().unwrap()[0]).unwrap();
                prop_assert!((-bound..=bound).contains(&e), "exponent {} outside ±{}", e, bound);
            }
        }
    }

    #[test]
    fn span_of_the_knot_polynomial() {
        let g = torus(Coefficients::F2);
        for k in 1..=10 {
            for l in 1..=10 {
                let specs = [BarbellSpec::new("S_h", "S_h", t(k)), BarbellSpec::new("S_v", "S_v", t(l))];
                let x = action_sequence(&g, &g.basis("S_v").unwrap(), &specs).unwrap();
                let f = intersection_polynomial(&g, &x, &["D_v".to_string()]).unwrap().remove(0);
                assert_eq!(laurent_span(&f).unwrap(), Some((2 * k + 2 * l + 2) as u64), "k={k} l={l}");
            }
        }
    }
}
