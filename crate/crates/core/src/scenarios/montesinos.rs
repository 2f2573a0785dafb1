//! Gluing maps of the standard torus and the genus-one manifolds they give.
//!
//! A matrix `(a b; c d)` acts on `H₁(T²)` in the basis `[μ], [λ]`, where `μ`
//! bounds in the horizontal handlebody. Gluing two horizontal handlebodies by
//! it gives the Heegaard diagram `α = μ`, `β = aμ + cλ`, so the first column
//! alone determines the manifold.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GluingMatrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl GluingMatrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let m = GluingMatrix { a, b, c, d };
        if m.det() != 1 {
            return Err(Error::InvalidParameter(format!("gluing matrix {m} has determinant {}", m.det())));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        GluingMatrix { a: 1, b: 0, c: 0, d: 1 }
    }

    /// `(0 -1; 1 0)`, swapping meridian and longitude.
    pub fn rotation() -> Self {
        GluingMatrix { a: 0, b: -1, c: 1, d: 0 }
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn entry_sum(&self) -> i64 {
        self.a + self.b + self.c + self.d
    }
}

impl fmt::Display for GluingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

/// The map extends over `S⁴` iff the entry sum is even.
pub fn montesinos_parity(m: &GluingMatrix) -> bool {
    m.entry_sum().rem_euclid(2) == 0
}

/// Genus-one manifolds up to homeomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ManifoldTag {
    S3,
    S1xS2,
    /// `L(p, q)` with `q` the least representative of its class under
    /// `q ↦ ±q^{±1} mod p`.
    Lens { p: u64, q: u64 },
}

impl ManifoldTag {
    /// `L(p, q)` in canonical form; `p = 1` is `S³` and `p = 0` is `S¹×S²`.
    pub fn lens(p: i64, q: i64) -> Result<Self> {
        let p = p.unsigned_abs();
        match p {
            0 => Ok(ManifoldTag::S1xS2),
            1 => Ok(ManifoldTag::S3),
            _ => {
                let q = q.rem_euclid(p as i64) as u64;
                if q.gcd(&p) != 1 {
                    return Err(Error::InvalidParameter(format!("L({p},{q}) needs coprime entries")));
                }
                Ok(ManifoldTag::Lens { p, q: canonical_q(p, q) })
            }
        }
    }
}

impl fmt::Display for ManifoldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldTag::S3 => f.write_str("S^3"),
            ManifoldTag::S1xS2 => f.write_str("S^1 x S^2"),
            ManifoldTag::Lens { p, q } => write!(f, "L({p},{q})"),
        }
    }
}

fn canonical_q(p: u64, q: u64) -> u64 {
    let inv = mod_inverse(q as i64, p as i64).expect("coprime") as u64;
    [q, p - q, inv, p - inv].into_iter().map(|x| x % p).min().expect("nonempty")
}

fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let e = a.extended_gcd(&m);
    (e.gcd.abs() == 1).then(|| (e.x * e.gcd).rem_euclid(m))
}

/// Standard genus-one classification from the first column `(a; c)`.
pub fn classify_gluing(m: &GluingMatrix) -> ManifoldTag {
    ManifoldTag::lens(m.c, m.a).expect("determinant one makes the column primitive")
}

/// A determinant-one, even-sum matrix whose gluing gives `L(p, q)`.
///
/// When `p + q` is even the search runs for `(p, p+q)` instead, which names
/// the same lens space. The first column is `(q; p)`, i.e. `β = qμ + pλ`;
/// the second column comes from the extended gcd and is shifted by the
/// first column when needed to fix the parity.
pub fn montesinos_matrix_for(p: i64, q: i64) -> Result<GluingMatrix> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParameter(format!("p and q must be nonzero, got ({p}, {q})")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidParameter(format!("p and q must be coprime, got ({p}, {q})")));
    }
    let q = if (p + q).rem_euclid(2) == 0 { p + q } else { q };
    let (a, c) = (q, p);
    // a·d − b·c = 1 from a·x + c·y = 1 with d = x, b = −y.
    let e = a.extended_gcd(&c);
    let sign = e.gcd.signum();
    let (d, b) = (e.x * sign, -e.y * sign);
    let mut m = GluingMatrix::new(a, b, c, d)?;
    if !montesinos_parity(&m) {
        m = GluingMatrix::new(a, b + a, c, d + c)?;
    }
    debug_assert!(montesinos_parity(&m));
    Ok(m)
}

/// Whether the tag is `L(p, q)` (or `S³` for `|p| = 1`).
pub fn realizes_lens(tag: ManifoldTag, p: i64, q: i64) -> bool {
    ManifoldTag::lens(p, q).map(|t| t == tag).unwrap_or(false)
}
