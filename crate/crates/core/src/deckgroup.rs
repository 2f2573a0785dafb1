//! Deck transformation groups and the homomorphisms classes get pushed through.
//!
//! Three kinds of group appear: free groups `F_n` (words in `x1..xn`), free
//! abelian groups `Z^r` (exponent vectors) and finite cyclic groups `Z/m`.
//! Composition is left-to-right concatenation, so `a.mul(b)` means "a then b"
//! when read as a path, and the commutator is `[a, b] = a⁻¹ b⁻¹ a b`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A freely reduced word in a free group, generators indexed from 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<(u32, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    /// `x_index^exp`, reduced (so `exp == 0` gives the identity).
    pub fn generator_power(index: u32, exp: i64) -> Self {
        let mut w = Word::identity();
        w.push(index, exp);
        w
    }

    pub fn generator(index: u32) -> Self {
        Self::generator_power(index, 1)
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce(letters: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let mut w = Word::identity();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    /// Same as [`Word::reduce`] but checks every index against `rank`.
    pub fn reduce_checked(letters: impl IntoIterator<Item = (u32, i64)>, rank: u32) -> Result<Self> {
        let mut w = Word::identity();
        for (g, e) in letters {
            if g == 0 || g > rank {
                return Err(Error::GeneratorOutOfRange { index: g, rank });
            }
            w.push(g, e);
        }
        Ok(w)
    }

    fn push(&mut self, g: u32, e: i64) {
        if e == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(last) if last.0 == g => {
                last.1 += e;
                if last.1 == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((g, e)),
        }
    }

    pub fn letters(&self) -> &[(u32, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters counted with multiplicity, `|x1^3 x2^-1| = 4`.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn max_generator(&self) -> u32 {
        self.letters.iter().map(|&(g, _)| g).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.inverse().mul(&other.inverse()).mul(self).mul(other)
    }

    /// Exponent sum of generator `g`.
    pub fn exponent_sum(&self, g: u32) -> i64 {
        self.letters.iter().filter(|l| l.0 == g).map(|l| l.1).sum()
    }

    /// The word with every `x_g` letter deleted.
    pub fn drop_generator(&self, g: u32) -> Word {
        Word::reduce(self.letters.iter().copied().filter(|l| l.0 != g))
    }

    /// Parses `"x1^-1 x2 x1"`; `"1"` and the empty string are the identity.
    pub fn parse(s: &str) -> Result<Word> {
        let err = || Error::Parse { what: "word", input: s.to_string() };
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "1" {
            return Ok(Word::identity());
        }
        let mut letters = Vec::new();
        for tok in trimmed.split_whitespace() {
            let rest = tok.strip_prefix('x').ok_or_else(err)?;
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e.parse::<i64>().map_err(|_| err())?),
                None => (rest, 1),
            };
            let idx = idx.parse::<u32>().map_err(|_| err())?;
            if idx == 0 || exp == 0 {
                return Err(err());
            }
            letters.push((idx, exp));
        }
        Ok(Word::reduce(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, &(g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if e == 1 {
                write!(f, "x{g}")?;
            } else {
                write!(f, "x{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// `w_1 = x1`, `w_{m+1} = [w_m, x_{m+1}]`; returns `w_{n-1}` in `F_n`.
pub fn brunnian_word(n: u32) -> Result<Word> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("brunnian word needs n >= 2, got {n}")));
    }
    let mut w = Word::generator(1);
    for m in 2..n {
        w = w.commutator(&Word::generator(m));
    }
    Ok(w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DeckGroup {
    Free { rank: u32 },
    FreeAbelian { rank: u32 },
    Cyclic { modulus: u64 },
}

impl DeckGroup {
    pub fn free(rank: u32) -> Result<Self> {
        Self::validate(DeckGroup::Free { rank })
    }

    pub fn free_abelian(rank: u32) -> Result<Self> {
        Self::validate(DeckGroup::FreeAbelian { rank })
    }

    pub fn cyclic(modulus: u64) -> Result<Self> {
        Self::validate(DeckGroup::Cyclic { modulus })
    }

    /// The trivial group, used for computations with no covering.
    pub fn trivial() -> Self {
        DeckGroup::Cyclic { modulus: 1 }
    }

    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            DeckGroup::Free { rank } | DeckGroup::FreeAbelian { rank } => rank >= 1,
            DeckGroup::Cyclic { modulus } => modulus >= 1,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidGroup(self.to_string()))
        }
    }

    pub fn is_commutative(&self) -> bool {
        match self {
            DeckGroup::Free { rank } => *rank == 1,
            _ => true,
        }
    }

    pub fn identity(&self) -> DeckElement {
        let value = match *self {
            DeckGroup::Free { .. } => DeckValue::Word(Word::identity()),
            DeckGroup::FreeAbelian { rank } => DeckValue::Vector(vec![BigInt::zero(); rank as usize]),
            DeckGroup::Cyclic { .. } => DeckValue::Residue(0),
        };
        DeckElement { group: *self, value }
    }

    /// The `i`-th standard generator (1-based).
    pub fn generator(&self, i: u32) -> Result<DeckElement> {
        self.generator_power(i, 1)
    }

    pub fn generator_power(&self, i: u32, e: i64) -> Result<DeckElement> {
        match *self {
            DeckGroup::Free { rank } => {
                DeckElement::from_word(*self, Word::reduce_checked([(i, e)], rank)?)
            }
            DeckGroup::FreeAbelian { rank } => {
                if i == 0 || i > rank {
                    return Err(Error::GeneratorOutOfRange { index: i, rank });
                }
                let mut v = vec![BigInt::zero(); rank as usize];
                v[(i - 1) as usize] = BigInt::from(e);
                Ok(DeckElement { group: *self, value: DeckValue::Vector(v) })
            }
            DeckGroup::Cyclic { .. } => {
                if i != 1 {
                    return Err(Error::GeneratorOutOfRange { index: i, rank: 1 });
                }
                Ok(self.residue(&BigInt::from(e)))
            }
        }
    }

    fn residue(&self, r: &BigInt) -> DeckElement {
        let DeckGroup::Cyclic { modulus } = *self else {
            unreachable!("residue on non-cyclic group")
        };
        let v = r.mod_floor(&BigInt::from(modulus)).to_u64().expect("residue fits");
        DeckElement { group: *self, value: DeckValue::Residue(v) }
    }

    /// Parses an element token: an integer residue for cyclic groups, and a
    /// word string otherwise (pushed through abelianization for `Z^r`). Word
    /// strings are accepted for cyclic groups too.
    pub fn parse_element(&self, s: &str) -> Result<DeckElement> {
        let trimmed = s.trim();
        let w = match self.monomial_vars() {
            Some(vars) if trimmed.starts_with(vars) => Word::parse(&monomial_to_word(trimmed, vars))?,
            _ => Word::parse(trimmed)?,
        };
        self.from_word_image(&w)
    }

    /// Variable names used by [`DeckElement::monomial`], which
    /// [`DeckGroup::parse_element`] also accepts.
    fn monomial_vars(&self) -> Option<&'static [char]> {
        match self {
            DeckGroup::FreeAbelian { rank: 1 } | DeckGroup::Cyclic { .. } => Some(&['t']),
            DeckGroup::FreeAbelian { rank: 2 } => Some(&['s', 't']),
            _ => None,
        }
    }

    /// Image of a free-group word under the canonical map onto this group.
    pub fn from_word_image(&self, w: &Word) -> Result<DeckElement> {
        match *self {
            DeckGroup::Free { .. } => DeckElement::from_word(*self, w.clone()),
            DeckGroup::FreeAbelian { rank } => {
                if w.max_generator() > rank {
                    return Err(Error::GeneratorOutOfRange { index: w.max_generator(), rank });
                }
                let v = (1..=rank).map(|g| BigInt::from(w.exponent_sum(g))).collect();
                Ok(DeckElement { group: *self, value: DeckValue::Vector(v) })
            }
            DeckGroup::Cyclic { .. } => {
                if w.max_generator() > 1 {
                    return Err(Error::GeneratorOutOfRange { index: w.max_generator(), rank: 1 });
                }
                Ok(self.residue(&BigInt::from(w.exponent_sum(1))))
            }
        }
    }
}

impl fmt::Display for DeckGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeckGroup::Free { rank } => write!(f, "F_{rank}"),
            DeckGroup::FreeAbelian { rank } => write!(f, "Z^{rank}"),
            DeckGroup::Cyclic { modulus } => write!(f, "Z/{modulus}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DeckValue {
    Word(Word),
    Vector(Vec<BigInt>),
    Residue(u64),
}

/// A group element tagged with its group; always in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DeckElement {
    group: DeckGroup,
    value: DeckValue,
}

impl PartialOrd for DeckElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DeckElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.group.cmp(&other.group).then_with(|| self.value.cmp(&other.value))
    }
}

impl DeckElement {
    pub fn from_word(group: DeckGroup, w: Word) -> Result<Self> {
        match group {
            DeckGroup::Free { rank } => {
                if w.max_generator() > rank {
                    return Err(Error::GeneratorOutOfRange { index: w.max_generator(), rank });
                }
                Ok(DeckElement { group, value: DeckValue::Word(w) })
            }
            _ => group.from_word_image(&w),
        }
    }

    pub fn from_vector(group: DeckGroup, v: Vec<BigInt>) -> Result<Self> {
        match group {
            DeckGroup::FreeAbelian { rank } if v.len() == rank as usize => {
                Ok(DeckElement { group, value: DeckValue::Vector(v) })
            }
            _ => Err(Error::GroupMismatch { left: group.to_string(), right: format!("vector of length {}", v.len()) }),
        }
    }

    pub fn from_residue(group: DeckGroup, r: i64) -> Result<Self> {
        match group {
            DeckGroup::Cyclic { .. } => Ok(group.residue(&BigInt::from(r))),
            _ => Err(Error::GroupMismatch { left: group.to_string(), right: "residue".into() }),
        }
    }

    pub fn group(&self) -> DeckGroup {
        self.group
    }

    pub fn value(&self) -> &DeckValue {
        &self.value
    }

    pub fn as_word(&self) -> Option<&Word> {
        match &self.value {
            DeckValue::Word(w) => Some(w),
            _ => None,
        }
    }

    pub fn as_vector(&self) -> Option<&[BigInt]> {
        match &self.value {
            DeckValue::Vector(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match self.value {
            DeckValue::Residue(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_identity(&self) -> bool {
        match &self.value {
            DeckValue::Word(w) => w.is_identity(),
            DeckValue::Vector(v) => v.iter().all(Zero::is_zero),
            DeckValue::Residue(r) => *r == 0,
        }
    }

    fn check_same(&self, other: &DeckElement) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch { left: self.group.to_string(), right: other.group.to_string() });
        }
        Ok(())
    }

    pub fn mul(&self, other: &DeckElement) -> Result<DeckElement> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Group law without the group check; callers guarantee a common group.
    pub(crate) fn mul_unchecked(&self, other: &DeckElement) -> DeckElement {
        let value = match (&self.value, &other.value) {
            (DeckValue::Word(a), DeckValue::Word(b)) => DeckValue::Word(a.mul(b)),
            (DeckValue::Vector(a), DeckValue::Vector(b)) => {
                DeckValue::Vector(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (DeckValue::Residue(a), DeckValue::Residue(b)) => {
                let DeckGroup::Cyclic { modulus } = self.group else { unreachable!() };
                DeckValue::Residue(((*a as u128 + *b as u128) % modulus as u128) as u64)
            }
            _ => unreachable!("canonical values always match their group"),
        };
        DeckElement { group: self.group, value }
    }

    pub fn inverse(&self) -> DeckElement {
        let value = match &self.value {
            DeckValue::Word(w) => DeckValue::Word(w.inverse()),
            DeckValue::Vector(v) => DeckValue::Vector(v.iter().map(|x| -x).collect()),
            DeckValue::Residue(r) => {
                let DeckGroup::Cyclic { modulus } = self.group else { unreachable!() };
                DeckValue::Residue((modulus - r) % modulus)
            }
        };
        DeckElement { group: self.group, value }
    }

    pub fn pow(&self, k: i64) -> DeckElement {
        match &self.value {
            DeckValue::Word(w) => DeckElement { group: self.group, value: DeckValue::Word(w.pow(k)) },
            DeckValue::Vector(v) => DeckElement {
                group: self.group,
                value: DeckValue::Vector(v.iter().map(|x| x * k).collect()),
            },
            DeckValue::Residue(r) => self.group.residue(&(BigInt::from(*r) * k)),
        }
    }

    pub fn commutator(&self, other: &DeckElement) -> Result<DeckElement> {
        self.check_same(other)?;
        Ok(self.inverse().mul_unchecked(&other.inverse()).mul_unchecked(self).mul_unchecked(other))
    }

    /// Serialization token: word string, or integer for cyclic groups.
    pub fn token(&self) -> String {
        match &self.value {
            DeckValue::Word(w) => w.to_string(),
            DeckValue::Vector(v) => {
                let w: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| !e.is_zero())
                    .map(|(i, e)| if e.is_one() { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                    .collect();
                if w.is_empty() {
                    "1".into()
                } else {
                    w.join(" ")
                }
            }
            DeckValue::Residue(r) if r.is_zero() => "1".into(),
            DeckValue::Residue(r) if r.is_one() => "x1".into(),
            DeckValue::Residue(r) => format!("x1^{r}"),
        }
    }

    /// Human-readable monomial: `t^k` / `s^a t^b` for small abelian groups,
    /// balanced residues for cyclic groups, words otherwise.
    pub fn monomial(&self) -> String {
        fn power(var: &str, e: &BigInt) -> String {
            if e.is_one() {
                var.to_string()
            } else {
                format!("{var}^{e}")
            }
        }
        match (&self.group, &self.value) {
            (DeckGroup::FreeAbelian { rank }, DeckValue::Vector(v)) if *rank <= 2 => {
                let vars: &[&str] = if *rank == 1 { &["t"] } else { &["s", "t"] };
                let parts: Vec<String> =
                    v.iter().zip(vars).filter(|(e, _)| !e.is_zero()).map(|(e, var)| power(var, e)).collect();
                if parts.is_empty() {
                    "1".into()
                } else {
                    parts.join(" ")
                }
            }
            (DeckGroup::Cyclic { modulus }, DeckValue::Residue(r)) => {
                let e = balanced(*r, *modulus);
                if e == 0 {
                    "1".into()
                } else {
                    power("t", &BigInt::from(e))
                }
            }
            _ => self.token(),
        }
    }
}

/// `s^2 t^-1` to `x1^2 x2^-1`, with variables numbered in the order given.
fn monomial_to_word(s: &str, vars: &[char]) -> String {
    s.split_whitespace()
        .map(|tok| {
            let mut chars = tok.chars();
            match chars.next().and_then(|c| vars.iter().position(|v| *v == c)) {
                Some(i) => format!("x{}{}", i + 1, chars.as_str()),
                None => tok.to_string(),
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Representative of `r mod m` in `(-m/2, m/2]`.
pub fn balanced(r: u64, m: u64) -> i64 {
    let r = r as i128;
    let m = m as i128;
    (if 2 * r > m { r - m } else { r }) as i64
}

impl fmt::Display for DeckElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// Weighted exponent sum of a word, reduced mod `m`.
pub fn cyclic_project(word: &Word, weights: &[i64], m: u64) -> Result<DeckElement> {
    let group = DeckGroup::cyclic(m)?;
    let mut total = BigInt::zero();
    for &(g, e) in word.letters() {
        let w = weights.get((g - 1) as usize).ok_or(Error::GeneratorOutOfRange {
            index: g,
            rank: weights.len() as u32,
        })?;
        total += BigInt::from(*w) * e;
    }
    Ok(group.residue(&total))
}

/// Unipotent upper-triangular integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniTriMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl UniTriMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        UniTriMatrix { n, entries }
    }

    /// `I + c·E_{i,j}` with 1-based `i < j`.
    pub fn elementary(n: usize, i: usize, j: usize, c: i64) -> Self {
        assert!(1 <= i && i < j && j <= n, "elementary matrix index out of range");
        let mut m = Self::identity(n);
        m.entries[(i - 1) * n + (j - 1)] = BigInt::from(c);
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 1-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn mul(&self, other: &UniTriMatrix) -> UniTriMatrix {
        assert_eq!(self.n, other.n, "size mismatch");
        let n = self.n;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in i..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in k..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        UniTriMatrix { n, entries }
    }

    /// Inverse of a unipotent matrix, by back substitution.
    pub fn inverse(&self) -> UniTriMatrix {
        let n = self.n;
        let mut inv = Self::identity(n);
        for j in 0..n {
            for i in (0..j).rev() {
                let mut s = BigInt::zero();
                for k in (i + 1)..=j {
                    s += &self.entries[i * n + k] * &inv.entries[k * n + j];
                }
                inv.entries[i * n + j] = -s;
            }
        }
        inv
    }

    /// True iff the matrix is `I + a·E_{1,n}`; returns `a`.
    pub fn corner_coordinate(&self) -> Option<BigInt> {
        let n = self.n;
        let mut probe = self.clone();
        if n >= 2 {
            probe.entries[n - 1] = BigInt::zero();
        }
        if probe.is_identity() {
            Some(if n >= 2 { self.entries[n - 1].clone() } else { BigInt::zero() })
        } else {
            None
        }
    }
}

impl fmt::Display for UniTriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.entries[i * self.n + j].to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// `ψ(x_i) = I + E_{i,i+1}` on `F_{n-1}`, extended multiplicatively.
pub fn unitriangular_rep(word: &Word, n: usize) -> Result<UniTriMatrix> {
    if n < 1 {
        return Err(Error::InvalidParameter("matrix size must be positive".into()));
    }
    let mut m = UniTriMatrix::identity(n);
    for &(g, e) in word.letters() {
        let g_us = g as usize;
        if g_us >= n {
            return Err(Error::OutsideRepresentation { index: g, size: n });
        }
        // (I + E)^e = I + e·E since E² = 0 for a superdiagonal unit.
        m = m.mul(&UniTriMatrix::elementary(n, g_us, g_us + 1, e));
    }
    Ok(m)
}

/// `φ : F_n → U_n × Z`: delete `x_n` letters and apply `ψ`, and record the
/// exponent sum of `x_n`.
pub fn nilpotent_times_z(word: &Word, n: u32) -> Result<(UniTriMatrix, i64)> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("rank must be at least 2, got {n}")));
    }
    if word.max_generator() > n {
        return Err(Error::GeneratorOutOfRange { index: word.max_generator(), rank: n });
    }
    let head = unitriangular_rep(&word.drop_generator(n), n as usize)?;
    Ok((head, word.exponent_sum(n)))
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn letters(rank: u32, len: usize) -> impl Strategy<Value = Vec<(u32, i64)>> {
        prop::collection::vec((1..=rank, -3i64..=3).prop_filter("nonzero exponent", |(_, e)| *e != 0), 0..len)
    }

    fn word(rank: u32) -> impl Strategy<Value = Word> {
        letters(rank, 12).prop_map(Word::reduce)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn reduce_is_idempotent(ls in letters(3, 16)) {
            let w = Word::reduce(ls);
            prop_assert_eq!(Word::reduce(w.letters().iter().copied()), w.clone());
            prop_assert!(w.letters().windows(2).all(|p| p[0].0 != p[1].0));
        }

        #[test]
        fn inverse_cancels(w in word(3)) {
            prop_assert!(w.mul(&w.inverse()).is_identity());
            prop_assert!(w.inverse().mul(&w).is_identity());
        }
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(a in word(3), b in word(3), c in word(3)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn psi_is_a_homomorphism(a in word(4), b in word(4)) {
            let n = 5;
            let lhs = unitriangular_rep(&a.mul(&b), n).unwrap();
            let rhs = unitriangular_rep(&a, n).unwrap().mul(&unitriangular_rep(&b, n).unwrap());
            prop_assert_eq!(lhs, rhs);
            prop_assert!(unitriangular_rep(&a.inverse(), n).unwrap().mul(&unitriangular_rep(&a, n).unwrap()).is_identity());
        }

        #[test]
        fn parse_display_round_trip(w in word(4)) {
            prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
        }

        #[test]
        fn cyclic_project_is_a_homomorphism(a in word(2), b in word(2), m in 1u64..40) {
            let weights = [3, -1];
            let lhs = cyclic_project(&a.mul(&b), &weights, m).unwrap();
            let rhs = cyclic_project(&a, &weights, m).unwrap().mul(&cyclic_project(&b, &weights, m).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn brunnian_word_maps_to_corner_elementary() {
        for n in 2..=8u32 {
            let psi = unitriangular_rep(&brunnian_word(n).unwrap(), n as usize).unwrap();
            assert_eq!(psi, UniTriMatrix::elementary(n as usize, 1, n as usize, 1), "n={n}");
        }
    }

    #[test]
    fn w_and_last_generator_span_z2() {
        for n in 2..=5u32 {
            let w = brunnian_word(n).unwrap();
            let x = Word::generator(n);
            let phi = |g: &Word| nilpotent_times_z(g, n).unwrap();
            assert_eq!(phi(&w.mul(&x)), phi(&x.mul(&w)), "φ(w), φ(x_n) commute for n={n}");
            for a in -20i64..=20 {
                for b in -20i64..=20 {
                    let (m, z) = phi(&w.pow(a).mul(&x.pow(b)));
                    assert_eq!(m.is_identity() && z == 0, a == 0 && b == 0, "n={n} a={a} b={b}");
                }
            }
        }
    }
}
