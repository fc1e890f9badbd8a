//! 2×2 integer matrices, with GL₂(Z) order classification and centralizers
//! of finite-order elements.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A 2×2 matrix with exact `i64` entries, row-major.
///
/// Serializes as `[[a11, a12], [a21, a22]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[[i64; 2]; 2]", into = "[[i64; 2]; 2]")]
pub struct Mat2 {
    pub a11: i64,
    pub a12: i64,
    pub a21: i64,
    pub a22: i64,
}

impl From<[[i64; 2]; 2]> for Mat2 {
    fn from(rows: [[i64; 2]; 2]) -> Self {
        Mat2::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }
}

impl From<Mat2> for [[i64; 2]; 2] {
    fn from(m: Mat2) -> Self {
        m.rows()
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a11, self.a12, self.a21, self.a22)
    }
}

/// Multiplicative order of an element of GL₂(Z).
///
/// Finite orders in GL₂(Z) are always one of 1, 2, 3, 4, 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatOrder {
    Finite(u8),
    Infinite,
}

impl MatOrder {
    pub fn is_finite(self) -> bool {
        matches!(self, MatOrder::Finite(_))
    }
}

impl fmt::Display for MatOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatOrder::Finite(n) => write!(f, "{n}"),
            MatOrder::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for MatOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Entries of a matrix that a congruence test ignores (the `*` positions).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Wildcards {
    pub a11: bool,
    pub a12: bool,
    pub a21: bool,
    pub a22: bool,
}

impl Wildcards {
    pub const NONE: Wildcards = Wildcards { a11: false, a12: false, a21: false, a22: false };
    pub const A12: Wildcards = Wildcards { a12: true, ..Wildcards::NONE };
    pub const A21: Wildcards = Wildcards { a21: true, ..Wildcards::NONE };

    fn as_array(self) -> [bool; 4] {
        [self.a11, self.a12, self.a21, self.a22]
    }
}

fn mul_add(a: i64, b: i64, c: i64, d: i64) -> Result<i64> {
    a.checked_mul(b)
        .and_then(|ab| c.checked_mul(d).and_then(|cd| ab.checked_add(cd)))
        .ok_or(Error::Overflow("matrix product"))
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 { a11: 1, a12: 0, a21: 0, a22: 1 };
    pub const NEG_IDENTITY: Mat2 = Mat2 { a11: -1, a12: 0, a21: 0, a22: -1 };

    pub const fn new(a11: i64, a12: i64, a21: i64, a22: i64) -> Self {
        Mat2 { a11, a12, a21, a22 }
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.a11, self.a12], [self.a21, self.a22]]
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a11, self.a12, self.a21, self.a22]
    }

    pub fn max_abs_entry(&self) -> u64 {
        self.entries().iter().map(|e| e.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::IDENTITY
    }

    pub fn checked_neg(&self) -> Result<Mat2> {
        let neg = |x: i64| x.checked_neg().ok_or(Error::Overflow("matrix negation"));
        Ok(Mat2::new(neg(self.a11)?, neg(self.a12)?, neg(self.a21)?, neg(self.a22)?))
    }

    pub fn checked_mul(&self, rhs: &Mat2) -> Result<Mat2> {
        Ok(Mat2::new(
            mul_add(self.a11, rhs.a11, self.a12, rhs.a21)?,
            mul_add(self.a11, rhs.a12, self.a12, rhs.a22)?,
            mul_add(self.a21, rhs.a11, self.a22, rhs.a21)?,
            mul_add(self.a21, rhs.a12, self.a22, rhs.a22)?,
        ))
    }

    pub fn det(&self) -> Result<i64> {
        self.a11
            .checked_mul(self.a22)
            .and_then(|d| self.a12.checked_mul(self.a21).and_then(|o| d.checked_sub(o)))
            .ok_or(Error::Overflow("determinant"))
    }

    /// Trace, computed in `i128` so it never overflows.
    pub fn trace(&self) -> i128 {
        self.a11 as i128 + self.a22 as i128
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(self.det(), Ok(1) | Ok(-1))
    }

    /// Inverse in GL₂(Z): the adjugate for det = 1, the negated adjugate for det = −1.
    pub fn inverse(&self) -> Result<Mat2> {
        let adj = Mat2::new(self.a22, self.a12, self.a21, self.a11);
        let neg = |x: i64| x.checked_neg().ok_or(Error::Overflow("matrix inverse"));
        match self.det() {
            Ok(1) => Ok(Mat2::new(adj.a11, neg(adj.a12)?, neg(adj.a21)?, adj.a22)),
            Ok(-1) => Ok(Mat2::new(neg(adj.a11)?, adj.a12, adj.a21, neg(adj.a22)?)),
            _ => Err(Error::NotUnimodular(*self)),
        }
    }

    /// `self^k` by binary exponentiation. Negative `k` requires a unimodular matrix.
    pub fn pow(&self, k: i64) -> Result<Mat2> {
        let mut base = if k < 0 { self.inverse()? } else { *self };
        let mut e = k.unsigned_abs();
        let mut acc = Mat2::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn commutes_with(&self, other: &Mat2) -> Result<bool> {
        Ok(self.checked_mul(other)? == other.checked_mul(self)?)
    }

    /// Order read off from determinant and trace.
    ///
    /// * `|A| = 1` iff `A = E`
    /// * `|A| = 2` iff `A = −E`, or `det A = −1` and `tr A = 0`
    /// * `|A| = 3` iff `det A = 1` and `tr A = −1`
    /// * `|A| = 4` iff `det A = 1` and `tr A = 0`
    /// * `|A| = 6` iff `det A = 1` and `tr A = 1`
    pub fn order(&self) -> Result<MatOrder> {
        let det = self.det().map_err(|_| Error::NotUnimodular(*self))?;
        let tr = self.trace();
        let order = match (det, tr) {
            _ if self.is_identity() => MatOrder::Finite(1),
            _ if *self == Mat2::NEG_IDENTITY => MatOrder::Finite(2),
            (-1, 0) => MatOrder::Finite(2),
            (1, -1) => MatOrder::Finite(3),
            (1, 0) => MatOrder::Finite(4),
            (1, 1) => MatOrder::Finite(6),
            (1, _) | (-1, _) => MatOrder::Infinite,
            _ => return Err(Error::NotUnimodular(*self)),
        };
        Ok(order)
    }

    /// Order found by multiplying out `A, A², …, A^cutoff`.
    pub fn order_by_iteration(&self, cutoff: u32) -> Result<MatOrder> {
        if !self.is_unimodular() {
            return Err(Error::NotUnimodular(*self));
        }
        let mut power = *self;
        for n in 1..=cutoff {
            if power.is_identity() {
                return Ok(MatOrder::Finite(n as u8));
            }
            if n < cutoff {
                power = power.checked_mul(self)?;
            }
        }
        Ok(MatOrder::Infinite)
    }

    /// Centralizer in GL₂(Z) of a matrix of order 2, 3, 4 or 6 other than −E,
    /// sorted and without duplicates.
    ///
    /// `{±E, ±A}` for orders 2 and 4; `{±E, ±A, ±A⁻¹}` for orders 3 and 6.
    pub fn centralizer_finite(&self) -> Result<Vec<Mat2>> {
        if *self == Mat2::NEG_IDENTITY {
            return Err(Error::UnsupportedOrder(*self));
        }
        let mut out = vec![Mat2::IDENTITY, Mat2::NEG_IDENTITY, *self, self.checked_neg()?];
        match self.order()? {
            MatOrder::Finite(2) | MatOrder::Finite(4) => {}
            MatOrder::Finite(3) | MatOrder::Finite(6) => {
                let inv = self.inverse()?;
                out.push(inv);
                out.push(inv.checked_neg()?);
            }
            _ => return Err(Error::UnsupportedOrder(*self)),
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// `self ≡ other (mod k)` on every entry not marked as a wildcard.
    pub fn congruent_mod(&self, other: &Mat2, k: u64, wildcards: Wildcards) -> bool {
        debug_assert!(k >= 2);
        let k = k as i128;
        self.entries()
            .iter()
            .zip(other.entries())
            .zip(wildcards.as_array())
            .all(|((&a, b), skip)| skip || (a as i128 - b as i128).rem_euclid(k) == 0)
    }
}
