//! Presentations of π₂ of complements and the invariants read off them.
//!
//! Rows are indexed by attaching spheres (relations) and columns by disks
//! (generators); the entry in row `s`, column `r` is the equivariant pairing
//! of the image of the `s`-th attaching sphere with the `r`-th disk.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::deckgroup::{brunnian_word, DeckElement, DeckGroup};
use crate::equivariant::{action_sequence, intersection_polynomial, BarbellSpec, Geometry};
use crate::error::{Error, Result};
use crate::groupring::{are_associates, laurent_span, word_element, Coefficients, Hom, RingElement};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationMatrix {
    pub group: DeckGroup,
    pub coefficients: Coefficients,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub entries: Vec<Vec<RingElement>>,
}

impl PresentationMatrix {
    pub fn new(group: DeckGroup, coefficients: Coefficients, entries: Vec<Vec<RingElement>>) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        for row in &entries {
            if row.len() != cols {
                return Err(Error::Shape("ragged matrix".into()));
            }
            for e in row {
                if e.group() != group || e.coefficients() != coefficients {
                    return Err(Error::GroupMismatch { left: group.to_string(), right: e.group().to_string() });
                }
            }
        }
        let row_labels = (1..=entries.len()).map(|i| format!("r{i}")).collect();
        let col_labels = (1..=cols).map(|j| format!("c{j}")).collect();
        Ok(PresentationMatrix { group, coefficients, row_labels, col_labels, entries })
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn get(&self, r: usize, c: usize) -> &RingElement {
        &self.entries[r][c]
    }

    pub fn render_rows(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|row| format!("[{}]", row.iter().map(RingElement::render).collect::<Vec<_>>().join(", ")))
            .collect()
    }
}

impl fmt::Display for PresentationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format!("[{}]", self.render_rows().join(", ")))
    }
}

/// Pushes each attaching sphere through the barbells (in application order)
/// and pairs the result with every disk.
pub fn present_from_scenario(
    geom: &Geometry,
    barbells: &[BarbellSpec],
    attaching: &[String],
    disks: &[String],
) -> Result<PresentationMatrix> {
    let mut entries = Vec::with_capacity(attaching.len());
    for a in attaching {
        let x = action_sequence(geom, &geom.basis(a)?, barbells)?;
        entries.push(intersection_polynomial(geom, &x, disks)?);
    }
    for d in disks {
        geom.label(d)?;
    }
    let mut m = PresentationMatrix::new(geom.group, geom.coeffs, entries)?;
    m.row_labels = attaching.to_vec();
    m.col_labels = disks.to_vec();
    Ok(m)
}

/// An invariant of the presented module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleInvariant {
    /// `dim_F2` of `F2[t^±1]/(f)`; `None` means infinite.
    F2LaurentDim { dim: Option<u64> },
    /// Direct sum of cyclic modules `R/(g_i)`; a zero factor is a free summand.
    CyclicFactors { factors: Vec<RingElement> },
    FittingGens { level: usize, generators: Vec<RingElement> },
    NontrivialityWitness { description: String },
}

/// `dim_F2 F2[t^±1]/(f)` for a 1×1 presentation over `F2[Z]`.
pub fn f2_quotient_dim(m: &PresentationMatrix) -> Result<Option<u64>> {
    if m.rows() != 1 || m.cols() != 1 {
        return Err(Error::Shape(format!("expected 1x1, got {}x{}", m.rows(), m.cols())));
    }
    if m.coefficients != Coefficients::F2 || m.group != (DeckGroup::FreeAbelian { rank: 1 }) {
        return Err(Error::Shape(format!("expected F2[Z], got {}[{}]", m.coefficients, m.group)));
    }
    laurent_span(m.get(0, 0))
}

/// Multiplies by the monomial unit that puts the lowest degree at 0 and
/// makes the leading coefficient positive. Zero stays zero.
pub fn normalize_factor(g: &RingElement) -> Result<RingElement> {
    if g.group() != (DeckGroup::FreeAbelian { rank: 1 }) {
        return Err(Error::Unsupported(format!("a Laurent ring in one variable, got {}", g.group())));
    }
    let Some(lo) = g.min_degree()? else {
        return Ok(g.clone());
    };
    let shift = DeckElement::from_vector(g.group(), vec![-lo])?;
    let h = g.left_translate(&shift)?;
    let leading = h.terms().last().map(|(_, c)| c.clone()).unwrap_or_default();
    Ok(if leading.is_negative() { h.neg() } else { h })
}

/// `k(t - 1)` style: integer content times primitive part.
pub fn render_factored(g: &RingElement) -> String {
    if g.is_zero() {
        return "0".into();
    }
    let content = g.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    if content.is_one() || g.len() == 1 {
        return g.render();
    }
    let prim = RingElement::from_terms(
        g.group(),
        g.coefficients(),
        g.terms().map(|(e, c)| (e.clone(), c / &content)),
    )
    .expect("same group");
    format!("{content}({})", prim.render())
}

/// Cokernel of a zero-diagonal 2×2 matrix over `Z[t^±1]`: the two
/// antidiagonal entries, normalized.
pub fn antidiagonal_cokernel(m: &PresentationMatrix) -> Result<Vec<RingElement>> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::Shape(format!("expected 2x2, got {}x{}", m.rows(), m.cols())));
    }
    if m.group != (DeckGroup::FreeAbelian { rank: 1 }) {
        return Err(Error::Shape(format!("expected a Laurent ring, got {}", m.group)));
    }
    if !m.get(0, 0).is_zero() || !m.get(1, 1).is_zero() {
        return Err(Error::Shape("diagonal is not zero".into()));
    }
    // Each relation involves a single generator, so the module splits as
    // R/(f₀₁) ⊕ R/(f₁₀); a zero entry leaves a free summand.
    Ok(vec![normalize_factor(m.get(0, 1))?, normalize_factor(m.get(1, 0))?])
}

fn determinant(m: &[Vec<RingElement>], group: DeckGroup, coeffs: Coefficients) -> Result<RingElement> {
    match m.len() {
        0 => Ok(RingElement::one(group, coeffs)),
        1 => Ok(m[0][0].clone()),
        n => {
            let mut acc = RingElement::zero(group, coeffs);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<RingElement>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = m[0][j].mul(&determinant(&minor, group, coeffs)?)?;
                acc = if j % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
            }
            Ok(acc)
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Generators of the `level`-th Fitting ideal: all `(n - level)`-minors,
/// where `n` is the number of generators (columns).
pub fn fitting_generators(m: &PresentationMatrix, level: usize) -> Result<Vec<RingElement>> {
    if !m.group.is_commutative() {
        return Err(Error::Unsupported(format!("a commutative ring, got {}", m.group)));
    }
    let n = m.cols();
    if level >= n {
        return Ok(vec![RingElement::one(m.group, m.coefficients)]);
    }
    let size = n - level;
    if size > m.rows() {
        return Ok(vec![RingElement::zero(m.group, m.coefficients)]);
    }
    let mut out = Vec::new();
    for rows in combinations(m.rows(), size) {
        for cols in combinations(n, size) {
            let sub: Vec<Vec<RingElement>> =
                rows.iter().map(|&r| cols.iter().map(|&c| m.entries[r][c].clone()).collect()).collect();
            out.push(determinant(&sub, m.group, m.coefficients)?);
        }
    }
    Ok(out)
}

/// `f_{k,ℓ} = 1 + (x_n⁻¹ + 1)(w^{-k} + w^k)(1 + x_n)(w^{-ℓ} + w^ℓ)` in `F2[F_n]`.
pub fn brunnian_polynomial(k: i64, l: i64, n: u32) -> Result<RingElement> {
    let group = DeckGroup::free(n)?;
    let f2 = Coefficients::F2;
    let w = brunnian_word(n)?;
    let xn = crate::deckgroup::Word::generator(n);
    let one = RingElement::one(group, f2);
    let pair = |e: i64| -> Result<RingElement> {
        word_element(group, f2, &w.pow(-e))?.add(&word_element(group, f2, &w.pow(e))?)
    };
    let left = word_element(group, f2, &xn.inverse())?.add(&one)?;
    let right = one.add(&word_element(group, f2, &xn)?)?;
    one.add(&left.mul(&pair(k)?)?.mul(&right)?.mul(&pair(l)?)?)
}

/// `φ(f_{k,ℓ}) ∈ F2[H] ≅ F2[s^±1, t^±1]` with `s = φ(w)`, `t = φ(x_n)`.
pub fn brunnian_image(k: i64, l: i64, n: u32) -> Result<RingElement> {
    brunnian_polynomial(k, l, n)?.apply_hom(&Hom::BrunnianCoordinates { n })
}

/// Outcome of the module comparison; `distinguished` is a proof of
/// non-isomorphism, `false` only means the test is inconclusive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrunnianComparison {
    pub distinguished: bool,
    pub first_nontrivial: bool,
    pub second_nontrivial: bool,
}

pub fn compare_brunnian_modules(k: i64, l: i64, k2: i64, l2: i64, n: u32) -> Result<BrunnianComparison> {
    if [k, l, k2, l2].iter().any(|&v| v < 1) || n < 2 {
        return Err(Error::InvalidParameter(format!("need k, l >= 1 and n >= 2, got ({k},{l}),({k2},{l2}), n={n}")));
    }
    let a = brunnian_image(k, l, n)?;
    let b = if (k, l) == (k2, l2) { a.clone() } else { brunnian_image(k2, l2, n)? };
    Ok(BrunnianComparison {
        distinguished: !are_associates(&a, &b)?,
        first_nontrivial: !a.is_monomial_unit(),
        second_nontrivial: !b.is_monomial_unit(),
    })
}

/// True when the principal ideals of `φ(f_{k,ℓ})` and `φ(f_{k',ℓ'})` differ.
pub fn distinguish_brunnian_modules(k: i64, l: i64, k2: i64, l2: i64, n: u32) -> Result<bool> {
    Ok(compare_brunnian_modules(k, l, k2, l2, n)?.distinguished)
}

/// The class `Σ_{ℓ=2}^n a_ℓ μ_ℓ` subject to "a_ℓ = 0 for ℓ in each set";
/// true iff only the zero class survives.
pub fn brunnian_disk_obstruction(n: u32, vanishing_sets: &[BTreeSet<u32>]) -> bool {
    let forced: BTreeSet<u32> = vanishing_sets.iter().flatten().copied().collect();
    (2..=n).all(|l| forced.contains(&l))
}

/// Removing component `k` unlinks the rest, which forces `a_ℓ = 0` for `ℓ ≠ k`.
pub fn removal_vanishing_sets(n: u32) -> Vec<BTreeSet<u32>> {
    (2..=n).map(|k| (2..=n).filter(|&l| l != k).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(terms: &[(i64, i64)]) -> RingElement {
        RingElement::laurent(Coefficients::Integers, terms.iter().copied())
    }

    fn simple_5d(k: i64) -> PresentationMatrix {
        let z = RingElement::laurent(Coefficients::Integers, []);
        let g = DeckGroup::free_abelian(1).unwrap();
        PresentationMatrix::new(
            g,
            Coefficients::Integers,
            vec![vec![z.clone(), zp(&[(0, k), (-1, -k)])], vec![zp(&[(-1, k), (0, -k)]), z]],
        )
        .unwrap()
    }

    #[test]
    fn cokernel_normalization() {
        for k in 1..=3 {
            let expected = zp(&[(1, k), (0, -k)]);
            assert_eq!(antidiagonal_cokernel(&simple_5d(k)).unwrap(), vec![expected.clone(), expected]);
        }
        assert_eq!(render_factored(&zp(&[(1, 3), (0, -3)])), "3(-1 + t)");
        let one = zp(&[(0, 1)]);
        let z = RingElement::laurent(Coefficients::Integers, []);
        let swap = PresentationMatrix::new(one.group(), Coefficients::Integers, vec![vec![z.clone(), one.clone()], vec![one.clone(), z]]).unwrap();
        assert_eq!(antidiagonal_cokernel(&swap).unwrap(), vec![one.clone(), one]);
    }

    #[test]
    fn cokernel_rejects_other_shapes() {
        let one = zp(&[(0, 1)]);
        let m = PresentationMatrix::new(one.group(), Coefficients::Integers, vec![vec![one.clone(), one.clone()], vec![one.clone(), one]]).unwrap();
        assert!(matches!(antidiagonal_cokernel(&m), Err(Error::Shape(_))));
    }

    #[test]
    fn fitting_ideals() {
        let k = 2;
        let fitt = fitting_generators(&simple_5d(k), 0).unwrap();
        assert_eq!(fitt.len(), 1);
        // k²(t - 1)² up to a monomial unit
        let expected = zp(&[(2, 4), (1, -8), (0, 4)]);
        assert!(are_associates(&fitt[0], &expected).unwrap());
        let one = RingElement::laurent(Coefficients::F2, [(0, 1)]);
        let m = PresentationMatrix::new(one.group(), Coefficients::F2, vec![vec![one.clone()]]).unwrap();
        assert_eq!(fitting_generators(&m, 0).unwrap(), vec![one.clone()]);
        assert_eq!(fitting_generators(&m, 1).unwrap(), vec![one]);
        let fit1 = fitting_generators(&simple_5d(3), 1).unwrap();
        assert_eq!(fit1.iter().filter(|g| !g.is_zero()).count(), 2);
    }

    #[test]
    fn f2_dimension() {
        let f = RingElement::laurent(Coefficients::F2, [(-3, 1), (-1, 1), (0, 1), (1, 1), (3, 1)]);
        let m = PresentationMatrix::new(f.group(), Coefficients::F2, vec![vec![f]]).unwrap();
        assert_eq!(f2_quotient_dim(&m).unwrap(), Some(6));
        assert!(f2_quotient_dim(&simple_5d(1)).is_err());
    }

    #[test]
    fn brunnian_image_matches_closed_form() {
        let g = DeckGroup::free_abelian(2).unwrap();
        let f2 = Coefficients::F2;
        let mono = |a: i64, b: i64| RingElement::monomial(DeckElement::from_vector(g, vec![a.into(), b.into()]).unwrap(), f2, 1);
        for (k, l, n) in [(1, 1, 2), (1, 2, 3), (2, 3, 3)] {
            let one = mono(0, 0);
            let expected = one
                .add(
                    &mono(0, -1).add(&one).unwrap()
                        .mul(&mono(-k, 0).add(&mono(k, 0)).unwrap()).unwrap()
                        .mul(&one.add(&mono(0, 1)).unwrap()).unwrap()
                        .mul(&mono(-l, 0).add(&mono(l, 0)).unwrap()).unwrap(),
                )
                .unwrap();
            assert_eq!(brunnian_image(k, l, n).unwrap(), expected);
        }
    }

    #[test]
    fn brunnian_distinctness_examples() {
        assert!(distinguish_brunnian_modules(1, 1, 1, 2, 2).unwrap());
        assert!(!distinguish_brunnian_modules(1, 2, 2, 1, 3).unwrap());
        assert!(!distinguish_brunnian_modules(2, 2, 2, 2, 3).unwrap());
        assert!(distinguish_brunnian_modules(0, 1, 1, 1, 3).is_err());
    }

    #[test]
    fn disk_obstruction() {
        assert!(brunnian_disk_obstruction(3, &removal_vanishing_sets(3)));
        assert!(!brunnian_disk_obstruction(2, &removal_vanishing_sets(2)));
        assert!(brunnian_disk_obstruction(1, &[]));
        assert!(brunnian_disk_obstruction(5, &removal_vanishing_sets(5)));
        let only_one: Vec<_> = removal_vanishing_sets(4).into_iter().take(1).collect();
        assert!(!brunnian_disk_obstruction(4, &only_one));
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn laurent(c: Coefficients) -> impl Strategy<Value = RingElement> {
        prop::collection::vec((-5i64..=5, -3i64..=3), 0..6).prop_map(move |t| RingElement::laurent(c, t))
    }

    proptest! {
        #[test]
        fn fitt0_of_one_by_one_is_the_entry(f in laurent(Coefficients::Integers)) {
            let m = PresentationMatrix::new(f.group(), f.coefficients(), vec![vec![f.clone()]]).unwrap();
            prop_assert_eq!(fitting_generators(&m, 0).unwrap(), vec![f]);
        }

        #[test]
        fn normalized_factors_are_associates(f in laurent(Coefficients::Integers).prop_filter("nonzero", |f| !f.is_zero())) {
            let n = normalize_factor(&f).unwrap();
            prop_assert!(are_associates(&n, &f).unwrap());
            prop_assert_eq!(normalize_factor(&n).unwrap(), n);
        }
    }

    #[test]
    fn product_form_dimensions() {
        let f2 = Coefficients::F2;
        for k in 1..=10 {
            for l in 1..=10 {
                let sym = |e: i64| RingElement::laurent(f2, [(e, 1), (-e, 1)]);
                let f = RingElement::one(DeckGroup::FreeAbelian { rank: 1 }, f2)
                    .add(&sym(1).mul(&sym(k)).unwrap().mul(&sym(l)).unwrap())
                    .unwrap();
                let m = PresentationMatrix::new(f.group(), f2, vec![vec![f]]).unwrap();
                assert_eq!(f2_quotient_dim(&m).unwrap(), Some((2 * k + 2 * l + 2) as u64), "k={k} l={l}");
            }
        }
    }

    #[test]
    fn cokernel_factors_are_never_units() {
        let z = Coefficients::Integers;
        for k in -4i64..=4 {
            let off = RingElement::laurent(z, [(0, k), (-1, -k)]);
            let zero = RingElement::laurent(z, []);
            let m = PresentationMatrix::new(off.group(), z, vec![vec![zero.clone(), off.clone()], vec![off.neg(), zero]]).unwrap();
            let factors = antidiagonal_cokernel(&m).unwrap();
            let expected = RingElement::laurent(z, [(1, k.abs()), (0, -k.abs())]);
            for f in &factors {
                assert!(!f.is_monomial_unit(), "k={k}");
                assert_eq!(f.is_zero(), k == 0);
                if k != 0 {
                    assert_eq!(f, &expected);
                }
            }
        }
        // Fitt_0 = k^2 (t-1)^2 tells distinct |k| apart.
        let fitt = |k: i64| {
            let z = Coefficients::Integers;
            let off = RingElement::laurent(z, [(0, k), (-1, -k)]);
            let zero = RingElement::laurent(z, []);
            let m = PresentationMatrix::new(off.group(), z, vec![vec![zero.clone(), off.clone()], vec![off.neg(), zero]]).unwrap();
            fitting_generators(&m, 0).unwrap().remove(0)
        };
        for a in 1..=4 {
            for b in 1..=4 {
                assert_eq!(are_associates(&fitt(a), &fitt(b)).unwrap(), a == b);
            }
        }
    }
}
