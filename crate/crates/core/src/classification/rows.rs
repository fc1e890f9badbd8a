//! The twelve families of valid pairs: generators and membership predicates.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::brace::BraceSpec;
use crate::error::{Error, Result};
use crate::gl2z::{Mat2, Wildcards};

/// A case of the classification table, written `"1.1"` … `"4.2"`.
///
/// The leading digit is the determinant block:
/// 1 = (det φ, det ψ) = (1, 1), 2 = (1, −1), 3 = (−1, 1), 4 = (−1, −1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowLabel {
    R11,
    R12,
    R13,
    R14,
    R15,
    R16,
    R21,
    R22,
    R31,
    R32,
    R41,
    R42,
}

impl RowLabel {
    pub const ALL: [RowLabel; 12] = [
        RowLabel::R11,
        RowLabel::R12,
        RowLabel::R13,
        RowLabel::R14,
        RowLabel::R15,
        RowLabel::R16,
        RowLabel::R21,
        RowLabel::R22,
        RowLabel::R31,
        RowLabel::R32,
        RowLabel::R41,
        RowLabel::R42,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RowLabel::R11 => "1.1",
            RowLabel::R12 => "1.2",
            RowLabel::R13 => "1.3",
            RowLabel::R14 => "1.4",
            RowLabel::R15 => "1.5",
            RowLabel::R16 => "1.6",
            RowLabel::R21 => "2.1",
            RowLabel::R22 => "2.2",
            RowLabel::R31 => "3.1",
            RowLabel::R32 => "3.2",
            RowLabel::R41 => "4.1",
            RowLabel::R42 => "4.2",
        }
    }

    /// `(det φ, det ψ)` shared by every pair of the row.
    pub fn determinants(self) -> (i64, i64) {
        match self {
            RowLabel::R11
            | RowLabel::R12
            | RowLabel::R13
            | RowLabel::R14
            | RowLabel::R15
            | RowLabel::R16 => (1, 1),
            RowLabel::R21 | RowLabel::R22 => (1, -1),
            RowLabel::R31 | RowLabel::R32 => (-1, 1),
            RowLabel::R41 | RowLabel::R42 => (-1, -1),
        }
    }
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RowLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RowLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == s.trim())
            .ok_or_else(|| Error::BadParams(format!("unknown row {s:?}")))
    }
}

impl Serialize for RowLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for RowLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "-1" => Ok(Sign::Minus),
            other => Err(Error::BadParams(format!("sign must be +1 or -1, got {other:?}"))),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.value())
    }
}

/// Integer parameters of a row. Which ones a row reads:
///
/// | row      | parameters                     |
/// |----------|--------------------------------|
/// | 1.1      | `sign1`, `sign2`               |
/// | 1.2      | `m`, `p`, `q` with gcd(p,q)=1  |
/// | 1.3, 1.4 | `p`, `q`, `sign1`              |
/// | 1.5, 1.6 | `m`, `n`                       |
/// | 2.x, 3.x | `p`, `q`, `sign1`              |
/// | 4.1      | `m`, `n`, and `p` when m = n   |
/// | 4.2      | `m`, `p`, `sign1`              |
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct RowParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign1: Option<Sign>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign2: Option<Sign>,
}

impl RowParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn m(mut self, m: i64) -> Self {
        self.m = Some(m);
        self
    }

    pub fn p(mut self, p: i64) -> Self {
        self.p = Some(p);
        self
    }

    pub fn q(mut self, q: i64) -> Self {
        self.q = Some(q);
        self
    }

    pub fn n(mut self, n: i64) -> Self {
        self.n = Some(n);
        self
    }

    pub fn sign1(mut self, s: Sign) -> Self {
        self.sign1 = Some(s);
        self
    }

    pub fn sign2(mut self, s: Sign) -> Self {
        self.sign2 = Some(s);
        self
    }
}

fn need<T>(value: Option<T>, name: &str, label: RowLabel) -> Result<T> {
    value.ok_or_else(|| Error::BadParams(format!("row {label} needs parameter {name}")))
}

fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow("row generator"))
}

fn mat(a11: i128, a12: i128, a21: i128, a22: i128) -> Result<Mat2> {
    Ok(Mat2::new(narrow(a11)?, narrow(a12)?, narrow(a21)?, narrow(a22)?))
}

fn exact_sqrt(radicand: i128) -> Result<i128> {
    if radicand < 0 {
        return Err(Error::Integrality(format!("radicand {radicand} is negative")));
    }
    let root = (radicand as u128).isqrt() as i128;
    if root * root != radicand {
        return Err(Error::Integrality(format!("radicand {radicand} is not a perfect square")));
    }
    Ok(root)
}

fn exact_div(num: i128, den: i128) -> Result<i128> {
    if den == 0 || num % den != 0 {
        return Err(Error::Integrality(format!("{num}/{den} is not an integer")));
    }
    Ok(num / den)
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Builds the pair `(φ, ψ)` of row `label` from its parameters.
pub fn generate_row(label: RowLabel, params: &RowParams) -> Result<BraceSpec> {
    // |param| < 2^31 keeps every product of four parameters inside i128
    let int = |v: Option<i64>, name: &str| -> Result<i128> {
        let v = need(v, name, label)?;
        if v.unsigned_abs() > i32::MAX as u64 {
            return Err(Error::Overflow("row parameter"));
        }
        Ok(v as i128)
    };
    let sign = |v: Option<Sign>, name: &str| need(v, name, label).map(|s| s.value() as i128);
    let e = Mat2::IDENTITY;
    let neg_e = Mat2::NEG_IDENTITY;

    let (phi, psi) = match label {
        RowLabel::R11 => {
            let pick = |s: i128| if s > 0 { e } else { neg_e };
            (pick(sign(params.sign1, "sign1")?), pick(sign(params.sign2, "sign2")?))
        }
        RowLabel::R12 => {
            let (m, p, q) = (int(params.m, "m")?, int(params.p, "p")?, int(params.q, "q")?);
            if gcd(p, q) != 1 {
                return Err(Error::Gcd { p: p as i64, q: q as i64 });
            }
            let phi = mat(1 + m * p * p * q, m * p * q * q, -m * p * p * p, 1 - m * p * p * q)?;
            let psi = mat(1 + m * p * q * q, m * q * q * q, -m * p * p * q, 1 - m * p * q * q)?;
            (phi, psi)
        }
        RowLabel::R13 | RowLabel::R14 => {
            let (p, q) = (int(params.p, "p")?, int(params.q, "q")?);
            let root = sign(params.sign1, "sign1")? * exact_sqrt(-3 - 12 * p * q)?;
            let (d1, d2) = (exact_div(-1 + root, 2)?, exact_div(-1 - root, 2)?);
            if label == RowLabel::R13 {
                (e, mat(d1, q, 3 * p, d2)?)
            } else {
                (mat(d1, 3 * p, q, d2)?, e)
            }
        }
        RowLabel::R15 => {
            let (m, n) = (int(params.m, "m")?, int(params.n, "n")?);
            if m == n {
                return Err(Error::BadParams("row 1.5 needs m != n".into()));
            }
            let f = exact_div(1 + n + 2 * m + 3 * m * n, n - m)?;
            let phi = mat(f, 2 + 3 * n + f, 1 + 3 * m - f, -1 - f)?;
            (phi, phi)
        }
        RowLabel::R16 => {
            let (m, n) = (int(params.m, "m")?, int(params.n, "n")?);
            if 1 + n + m == 0 {
                return Err(Error::BadParams("row 1.6 needs m + n != -1".into()));
            }
            let f = exact_div(3 * m * n + m + n, 1 + n + m)?;
            let phi = mat(f, 1 + 3 * n - f, -1 - 3 * m + f, -1 - f)?;
            (phi, phi.inverse()?)
        }
        RowLabel::R21 | RowLabel::R31 => {
            let (p, q) = (int(params.p, "p")?, int(params.q, "q")?);
            let root = sign(params.sign1, "sign1")? * exact_sqrt(1 - 2 * p * q)?;
            if label == RowLabel::R21 {
                (e, mat(root, q, 2 * p, -root)?)
            } else {
                (mat(root, 2 * p, q, -root)?, e)
            }
        }
        RowLabel::R22 | RowLabel::R32 => {
            let (p, q) = (int(params.p, "p")?, int(params.q, "q")?);
            let root = sign(params.sign1, "sign1")? * exact_sqrt(1 - 4 * p * q)?;
            let m = mat(root, 2 * p, 2 * q, -root)?;
            if label == RowLabel::R22 {
                (neg_e, m)
            } else {
                (m, neg_e)
            }
        }
        RowLabel::R41 => {
            let (m, n) = (int(params.m, "m")?, int(params.n, "n")?);
            let phi = if m == n {
                let p = int(params.p, "p")?;
                match m {
                    0 => mat(p, 1 + p, 1 - p, -p)?,
                    -1 => mat(p, p - 1, -1 - p, -p)?,
                    _ => return Err(Error::BadParams("row 4.1 with m = n needs m in {0, -1}".into())),
                }
            } else {
                let d = n - m;
                let f = exact_div(m + n + 2 * m * n, d)?;
                mat(f, exact_div(2 * n * (1 + n), d)?, exact_div(-2 * m * (1 + m), d)?, -f)?
            };
            (phi, phi)
        }
        RowLabel::R42 => {
            let (m, p) = (int(params.m, "m")?, int(params.p, "p")?);
            let root = sign(params.sign1, "sign1")? * exact_sqrt(1 - 4 * m * p)?;
            let phi = mat(root, 2 * m, 2 * p, -root)?;
            (phi, phi.checked_neg()?)
        }
    };
    let spec = BraceSpec::new(phi, psi)?;
    debug_assert!(
        spec.check_pair().map(|v| v.valid).unwrap_or(true),
        "row {label} generator produced an invalid pair {spec}"
    );
    Ok(spec)
}

/// The pair `φ = ψ = [[1+m, m], [−m, 1−m]]`, row 1.2 with p = q = 1.
pub fn bardakov_left(m: i64) -> Result<BraceSpec> {
    generate_row(RowLabel::R12, &RowParams::new().m(m).p(1).q(1))
}

/// The pair `φ = ψ = [[1+m, 2+m], [−m, −1−m]]`, a member of row 4.1.
pub fn bardakov_right(m: i64) -> Result<BraceSpec> {
    let p = m.checked_add(1).ok_or(Error::Overflow("row generator"))?;
    generate_row(RowLabel::R41, &RowParams::new().m(0).n(0).p(p))
}

/// Canonical parameters of a row 1.2 pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Row12Params {
    pub m: i64,
    pub p: i64,
    pub q: i64,
}

/// Recovers `(m, p, q)` for a pair of row 1.2, or `None` if it is not in the row.
///
/// Every such pair is `φ = E + mp·N`, `ψ = E + mq·N` with the primitive
/// nilpotent `N = [[pq, q²], [−p², −pq]]`, so `N` is the primitive part of
/// whichever of `φ − E`, `ψ − E` is nonzero. Sign is fixed by `p > 0`, or
/// `p = 0` and `q > 0`. The pair `(E, E)` reports `m = 0, p = 1, q = 0`.
pub fn recover_row12(spec: &BraceSpec) -> Option<Row12Params> {
    let minus_e = |a: Mat2| -> [i128; 4] {
        [a.a11 as i128 - 1, a.a12 as i128, a.a21 as i128, a.a22 as i128 - 1]
    };
    let (dphi, dpsi) = (minus_e(spec.phi()), minus_e(spec.psi()));
    let zero = [0i128; 4];
    if dphi == zero && dpsi == zero {
        return Some(Row12Params { m: 0, p: 1, q: 0 });
    }
    if spec.phi().det().ok()? != 1 || spec.psi().det().ok()? != 1 {
        return None;
    }
    let base = if dphi != zero { dphi } else { dpsi };
    let g = base.iter().fold(0, |acc, &x| gcd(acc, x));
    let mut prim = base.map(|x| x / g);
    if !(prim[1] > 0 || prim[2] < 0) {
        prim = prim.map(|x| -x);
    }
    let (q_sq, p_sq) = (prim[1], -prim[2]);
    let p = exact_sqrt(p_sq).ok()?;
    let mut q = exact_sqrt(q_sq).ok()?;
    if p * q != prim[0] {
        q = -q;
    }
    let nil = [p * q, q * q, -p * p, -p * q];
    if nil != prim {
        return None;
    }
    let coefficient = |d: [i128; 4]| -> Option<i128> {
        let (i, &k) = nil.iter().enumerate().find(|(_, &k)| k != 0)?;
        let c = exact_div(d[i], k).ok()?;
        (nil.map(|x| c * x) == d).then_some(c)
    };
    let (alpha, beta) = (coefficient(dphi)?, coefficient(dpsi)?);
    let m = if p != 0 { exact_div(alpha, p).ok()? } else { exact_div(beta, q).ok()? };
    if m * p != alpha || m * q != beta {
        return None;
    }
    Some(Row12Params { m: narrow(m).ok()?, p: narrow(p).ok()?, q: narrow(q).ok()? })
}

fn one_of(phi: &Mat2, k: u64, patterns: &[Mat2]) -> bool {
    patterns.iter().any(|pat| phi.congruent_mod(pat, k, Wildcards::NONE))
}

/// Whether `spec` satisfies the condition of row `label`.
pub fn matches_row(label: RowLabel, spec: &BraceSpec) -> Result<bool> {
    let (phi, psi) = (spec.phi(), spec.psi());
    if (phi.det()?, psi.det()?) != label.determinants() {
        return Ok(false);
    }
    let e = Mat2::IDENTITY;
    let neg_e = Mat2::NEG_IDENTITY;
    let is_pm_e = |a: Mat2| a == e || a == neg_e;
    let m = Mat2::new;
    let hit = match label {
        RowLabel::R11 => is_pm_e(phi) && is_pm_e(psi),
        RowLabel::R12 => recover_row12(spec).is_some(),
        RowLabel::R13 => {
            phi == e && psi.congruent_mod(&e, 3, Wildcards::A12) && psi.trace() == -1
        }
        RowLabel::R14 => {
            psi == e && phi.congruent_mod(&e, 3, Wildcards::A21) && phi.trace() == -1
        }
        RowLabel::R15 => {
            psi == phi
                && one_of(&phi, 3, &[m(0, 2, 1, 2), m(2, 1, 2, 0), e])
                && phi.trace() == -1
        }
        RowLabel::R16 => {
            psi == phi.inverse()?
                && one_of(&phi, 3, &[m(0, 1, 2, 2), m(2, 2, 1, 0), e])
                && phi.trace() == -1
        }
        RowLabel::R21 => {
            phi == e && psi.congruent_mod(&e, 2, Wildcards::A12) && psi.trace() == 0
        }
        RowLabel::R22 => phi == neg_e && psi.congruent_mod(&e, 2, Wildcards::NONE) && psi.trace() == 0,
        RowLabel::R31 => {
            psi == e && phi.congruent_mod(&e, 2, Wildcards::A21) && phi.trace() == 0
        }
        RowLabel::R32 => psi == neg_e && phi.congruent_mod(&e, 2, Wildcards::NONE) && phi.trace() == 0,
        RowLabel::R41 => psi == phi && one_of(&phi, 2, &[e, m(0, 1, 1, 0)]) && phi.trace() == 0,
        RowLabel::R42 => {
            psi == phi.checked_neg()? && phi.congruent_mod(&e, 2, Wildcards::NONE) && phi.trace() == 0
        }
    };
    Ok(hit)
}

/// Every row whose condition `spec` satisfies. Rows may overlap.
pub fn row_membership(spec: &BraceSpec) -> Result<BTreeSet<RowLabel>> {
    let mut out = BTreeSet::new();
    for label in RowLabel::ALL {
        if matches_row(label, spec)? {
            out.insert(label);
        }
    }
    Ok(out)
}
