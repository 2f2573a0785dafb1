//! Reference computations that share no code with the engine: plain maps of
//! exponents to coefficients, and an explicit enumeration of every lift of a
//! barbell in a finite cover.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A sparse polynomial over `F2` in variables `s, t` with integer exponents.
pub type F2Poly2 = BTreeMap<(i64, i64), u8>;

pub fn f2_mono(s: i64, t: i64) -> F2Poly2 {
    BTreeMap::from([((s, t), 1)])
}

pub fn f2_add(a: &F2Poly2, b: &F2Poly2) -> F2Poly2 {
    let mut out = a.clone();
    for (k, v) in b {
        let e = out.entry(*k).or_insert(0);
        *e ^= v;
    }
    out.retain(|_, v| *v == 1);
    out
}

pub fn f2_mul(a: &F2Poly2, b: &F2Poly2) -> F2Poly2 {
    let mut out = F2Poly2::new();
    for x in a.keys() {
        for y in b.keys() {
            *out.entry((x.0 + y.0, x.1 + y.1)).or_insert(0) ^= 1;
        }
    }
    out.retain(|_, v| *v == 1);
    out
}

/// Shifted so the componentwise minimum exponent is zero: equal keys for
/// exactly the associates in `F2[s^±1, t^±1]`.
pub fn associate_key(p: &F2Poly2) -> Vec<(i64, i64)> {
    let ms = p.keys().map(|k| k.0).min().unwrap_or(0);
    let mt = p.keys().map(|k| k.1).min().unwrap_or(0);
    p.keys().map(|(s, t)| (s - ms, t - mt)).collect()
}

/// `1 + (t⁻¹ + 1)(s^-k + s^k)(1 + t)(s^-l + s^l)`, where `s` stands for the
/// image of the Brunnian word and `t` for the last meridian.
pub fn brunnian_image_oracle(k: i64, l: i64) -> F2Poly2 {
    let one = f2_mono(0, 0);
    let a = f2_add(&f2_mono(0, -1), &one);
    let b = f2_add(&f2_mono(-k, 0), &f2_mono(k, 0));
    let c = f2_add(&one, &f2_mono(0, 1));
    let d = f2_add(&f2_mono(-l, 0), &f2_mono(l, 0));
    f2_add(&one, &f2_mul(&f2_mul(&f2_mul(&a, &b), &c), &d))
}

/// Dense integer intersection form on every lift `(label, residue)` of a
/// finite cyclic cover, built from the stored pairing entries by the rule
/// `⟨g·A, h·B⟩ = P_{A,B}(g⁻¹h)` and symmetry.
/// `(label index, residue)` of one lift.
type Lift = (usize, i64);

pub struct LiftForm {
    pub m: i64,
    pub labels: Vec<String>,
    form: BTreeMap<(Lift, Lift), i64>,
}

impl LiftForm {
    /// `entries[(a, b)]` lists `(residue, coefficient)` of `P_{a,b}`.
    pub fn new(m: i64, labels: &[&str], entries: &BTreeMap<(usize, usize), Vec<(i64, i64)>>) -> Self {
        let mut form = BTreeMap::new();
        for (&(a, b), terms) in entries {
            for &(r, c) in terms {
                for g in 0..m {
                    let h = (g + r).rem_euclid(m);
                    *form.entry(((a, g), (b, h))).or_insert(0) += c;
                    *form.entry(((b, h), (a, g))).or_insert(0) += c;
                }
            }
        }
        LiftForm { m, labels: labels.iter().map(|s| s.to_string()).collect(), form }
    }

    pub fn pair(&self, x: &BTreeMap<(usize, i64), i64>, y: (usize, i64)) -> i64 {
        x.iter().map(|(&k, &c)| c * self.form.get(&(k, y)).copied().unwrap_or(0)).sum()
    }

    /// One application of the barbell: every lift `u` carries cuffs
    /// `(u·cuff1, u·c·cuff2)` and contributes
    /// `s1⟨x, A₁⟩ A₂ − s2⟨x, A₂⟩ A₁`.
    pub fn apply(
        &self,
        x: &BTreeMap<(usize, i64), i64>,
        cuffs: (usize, usize),
        c: i64,
        signs: (i64, i64),
    ) -> BTreeMap<(usize, i64), i64> {
        let mut out = x.clone();
        for u in 0..self.m {
            let a1 = (cuffs.0, u);
            let a2 = (cuffs.1, (u + c).rem_euclid(self.m));
            let p1 = self.pair(x, a1);
            let p2 = self.pair(x, a2);
            *out.entry(a2).or_insert(0) += signs.0 * p1;
            *out.entry(a1).or_insert(0) -= signs.1 * p2;
        }
        out.retain(|_, v| *v != 0);
        out
    }
}

/// A random finite-cover geometry: two cuff spheres that pair trivially with
/// each other and with themselves, plus a disk and a third sphere with random
/// pairings against both cuffs.
pub struct RandomCover {
    pub m: i64,
    pub entries: BTreeMap<(usize, usize), Vec<(i64, i64)>>,
}

pub const COVER_LABELS: [&str; 4] = ["A", "B", "D", "X"];

pub fn random_cover(rng: &mut ChaCha8Rng, m: i64) -> RandomCover {
    let mut entries = BTreeMap::new();
    for (a, b) in [(2usize, 0usize), (2, 1), (3, 0), (3, 1)] {
        let n = rng.gen_range(0..=3);
        let terms: Vec<(i64, i64)> = (0..n).map(|_| (rng.gen_range(0..m), rng.gen_range(-2..=2))).collect();
        entries.insert((a, b), terms);
    }
    RandomCover { m, entries }
}

pub fn random_class(rng: &mut ChaCha8Rng, m: i64) -> BTreeMap<(usize, i64), i64> {
    let mut x = BTreeMap::new();
    for _ in 0..rng.gen_range(1..=6) {
        *x.entry((rng.gen_range(0..4), rng.gen_range(0..m))).or_insert(0) += rng.gen_range(-3..=3);
    }
    x.retain(|_, v| *v != 0);
    x
}
