//! The brace `(Z², ⊕, ⊙)` defined by a pair `(φ, ψ)` of unimodular matrices.
//!
//! Elements of Z² are column vectors `a = a1·x + a2·y`. The λ-map is
//! `λ_a = φ^{a1} ψ^{a2}` and the multiplicative operation is
//! `a ⊙ b = a ⊕ λ_a(b)`.
//!
//! A pair is valid (gives a brace) iff `φψ = ψφ` and
//!
//! ```text
//! φ^{φ11−1} ψ^{φ21} = E,   φ^{φ12} ψ^{φ22−1} = E,
//! φ^{ψ11−1} ψ^{ψ21} = E,   φ^{ψ12} ψ^{ψ22−1} = E.
//! ```
//!
//! The same four conditions are also evaluated in kernel form,
//! `⊖u ⊕ λ_w(u) ∈ Ker λ` for generators `u, w ∈ {x, y}`, as an independent
//! self-check. Regularity of `H_λ = {(a, λ_a)}` in the holomorph is not
//! checked directly since it quantifies over all of Z²; [`BraceSpec::h_lambda_closed`]
//! tests the closure law pointwise instead.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gl2z::Mat2;

/// An element of the additive group Z². Serializes as `[x1, x2]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Vec2 {
    pub x1: i64,
    pub x2: i64,
}

impl From<[i64; 2]> for Vec2 {
    fn from(v: [i64; 2]) -> Self {
        Vec2::new(v[0], v[1])
    }
}

impl From<Vec2> for [i64; 2] {
    fn from(v: Vec2) -> Self {
        [v.x1, v.x2]
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x1, self.x2)
    }
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x1: 0, x2: 0 };
    /// The generator `x`.
    pub const X: Vec2 = Vec2 { x1: 1, x2: 0 };
    /// The generator `y`.
    pub const Y: Vec2 = Vec2 { x1: 0, x2: 1 };

    pub const fn new(x1: i64, x2: i64) -> Self {
        Vec2 { x1, x2 }
    }

    /// `a ⊕ b`
    pub fn oplus(self, other: Vec2) -> Result<Vec2> {
        match (self.x1.checked_add(other.x1), self.x2.checked_add(other.x2)) {
            (Some(x1), Some(x2)) => Ok(Vec2::new(x1, x2)),
            _ => Err(Error::Overflow("vector sum")),
        }
    }

    /// `⊖a`
    pub fn ominus(self) -> Result<Vec2> {
        match (self.x1.checked_neg(), self.x2.checked_neg()) {
            (Some(x1), Some(x2)) => Ok(Vec2::new(x1, x2)),
            _ => Err(Error::Overflow("vector negation")),
        }
    }
}

impl Mat2 {
    /// Matrix acting on a column vector.
    pub fn apply(&self, v: Vec2) -> Result<Vec2> {
        let row = |a: i64, b: i64| {
            a.checked_mul(v.x1)
                .and_then(|p| b.checked_mul(v.x2).and_then(|q| p.checked_add(q)))
                .ok_or(Error::Overflow("matrix-vector product"))
        };
        Ok(Vec2::new(row(self.a11, self.a12)?, row(self.a21, self.a22)?))
    }
}

/// A candidate pair `(φ, ψ) = (λ_x, λ_y)`. Both matrices are unimodular.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct BraceSpec {
    phi: Mat2,
    psi: Mat2,
}

#[derive(Deserialize)]
struct RawSpec {
    phi: Mat2,
    psi: Mat2,
}

impl TryFrom<RawSpec> for BraceSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        BraceSpec::new(raw.phi, raw.psi)
    }
}

impl fmt::Display for BraceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(phi={}, psi={})", self.phi, self.psi)
    }
}

/// Outcome of [`BraceSpec::check_pair`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub valid: bool,
    pub commuting: bool,
    pub eq4_results: [bool; 4],
    pub kernel_results: [bool; 4],
}

impl Verdict {
    /// The two routes to the four conditions agree.
    pub fn routes_agree(&self) -> bool {
        self.eq4_results.iter().all(|&b| b) == self.kernel_results.iter().all(|&b| b)
    }
}

impl BraceSpec {
    pub fn new(phi: Mat2, psi: Mat2) -> Result<Self> {
        for m in [phi, psi] {
            if !m.is_unimodular() {
                return Err(Error::NotUnimodular(m));
            }
        }
        Ok(BraceSpec { phi, psi })
    }

    /// The trivial brace `(E, E)`, where `⊙ = ⊕`.
    pub fn trivial() -> Self {
        BraceSpec { phi: Mat2::IDENTITY, psi: Mat2::IDENTITY }
    }

    pub fn phi(&self) -> Mat2 {
        self.phi
    }

    pub fn psi(&self) -> Mat2 {
        self.psi
    }

    /// `φ^{e1} ψ^{e2}`
    fn word(&self, e1: i64, e2: i64) -> Result<Mat2> {
        self.phi.pow(e1)?.checked_mul(&self.psi.pow(e2)?)
    }

    /// `λ_a = φ^{a1} ψ^{a2}`
    pub fn lambda_of(&self, a: Vec2) -> Result<Mat2> {
        self.word(a.x1, a.x2)
    }

    /// `a ⊙ b = a ⊕ λ_a(b)`
    pub fn odot(&self, a: Vec2, b: Vec2) -> Result<Vec2> {
        a.oplus(self.lambda_of(a)?.apply(b)?)
    }

    /// Inverse of `a` in the multiplicative group: `⊖λ_a⁻¹(a)`.
    pub fn odot_inverse(&self, a: Vec2) -> Result<Vec2> {
        self.lambda_of(a)?.inverse()?.apply(a)?.ominus()
    }

    pub fn in_lambda_kernel(&self, v: Vec2) -> Result<bool> {
        Ok(self.lambda_of(v)?.is_identity())
    }

    /// Evaluates commutation, the four power equalities with exponents read
    /// off the matrix entries, and the same four conditions in kernel form.
    pub fn check_pair(&self) -> Result<Verdict> {
        let (f, g) = (self.phi, self.psi);
        let sub1 = |x: i64| x.checked_sub(1).ok_or(Error::Overflow("exponent"));
        let exponents = [
            (sub1(f.a11)?, f.a21),
            (f.a12, sub1(f.a22)?),
            (sub1(g.a11)?, g.a21),
            (g.a12, sub1(g.a22)?),
        ];
        let mut eq4_results = [false; 4];
        for (slot, (e1, e2)) in eq4_results.iter_mut().zip(exponents) {
            *slot = self.word(e1, e2)?.is_identity();
        }

        // ⊖u ⊕ λ_w(u), in the same order: (u,w) = (x,x), (y,x), (x,y), (y,y)
        let mut kernel_results = [false; 4];
        let cases = [(Vec2::X, Vec2::X), (Vec2::Y, Vec2::X), (Vec2::X, Vec2::Y), (Vec2::Y, Vec2::Y)];
        for (slot, (u, w)) in kernel_results.iter_mut().zip(cases) {
            let v = u.ominus()?.oplus(self.lambda_of(w)?.apply(u)?)?;
            *slot = self.in_lambda_kernel(v)?;
        }

        let commuting = f.commutes_with(&g)?;
        Ok(Verdict {
            valid: commuting && eq4_results.iter().all(|&b| b),
            commuting,
            eq4_results,
            kernel_results,
        })
    }

    pub fn is_valid(&self) -> Result<bool> {
        Ok(self.check_pair()?.valid)
    }

    /// `a⊙(b⊕c) = (a⊙b) ⊕ (⊖a) ⊕ (a⊙c)`
    pub fn brace_axiom_holds(&self, a: Vec2, b: Vec2, c: Vec2) -> Result<bool> {
        let lhs = self.odot(a, b.oplus(c)?)?;
        let rhs = self.odot(a, b)?.oplus(a.ominus()?)?.oplus(self.odot(a, c)?)?;
        Ok(lhs == rhs)
    }

    /// `a⊙(b⊙c) = (a⊙b)⊙c`
    pub fn odot_associative(&self, a: Vec2, b: Vec2, c: Vec2) -> Result<bool> {
        let lhs = self.odot(a, self.odot(b, c)?)?;
        let rhs = self.odot(self.odot(a, b)?, c)?;
        Ok(lhs == rhs)
    }

    pub fn hol_element(&self, a: Vec2) -> Result<HolElement> {
        Ok(HolElement { g: a, f: self.lambda_of(a)? })
    }

    /// `(a, λ_a)·(b, λ_b) = (a⊙b, λ_{a⊙b})` in the holomorph.
    pub fn h_lambda_closed(&self, a: Vec2, b: Vec2) -> Result<bool> {
        let product = self.hol_element(a)?.mul(&self.hol_element(b)?)?;
        let ab = self.odot(a, b)?;
        Ok(product == self.hol_element(ab)?)
    }
}

/// An element `(g, f)` of `Hol(Z²) = Z² ⋊ GL₂(Z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HolElement {
    pub g: Vec2,
    pub f: Mat2,
}

impl HolElement {
    pub fn new(g: Vec2, f: Mat2) -> Result<Self> {
        if !f.is_unimodular() {
            return Err(Error::NotUnimodular(f));
        }
        Ok(HolElement { g, f })
    }

    pub fn identity() -> Self {
        HolElement { g: Vec2::ZERO, f: Mat2::IDENTITY }
    }

    /// `(g1, f1)·(g2, f2) = (g1 ⊕ f1(g2), f1 f2)`
    pub fn mul(&self, other: &HolElement) -> Result<HolElement> {
        Ok(HolElement {
            g: self.g.oplus(self.f.apply(other.g)?)?,
            f: self.f.checked_mul(&other.f)?,
        })
    }

    /// The projection `π(g, f) = g`.
    pub fn project(&self) -> Vec2 {
        self.g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(a: i64, b: i64) -> Vec2 {
        Vec2::new(a, b)
    }

    fn bardakov() -> BraceSpec {
        let a = Mat2::new(2, 1, -1, 0);
        BraceSpec::new(a, a).unwrap()
    }

    fn shear() -> BraceSpec {
        BraceSpec::new(Mat2::new(1, 1, 0, 1), Mat2::IDENTITY).unwrap()
    }

    #[test]
    fn additive_group() {
        assert_eq!(v(1, 2).oplus(v(3, 4)).unwrap(), v(4, 6));
        assert_eq!(Vec2::ZERO.ominus().unwrap(), Vec2::ZERO);
        let a = v(-7, 3);
        assert_eq!(a.oplus(a.ominus().unwrap()).unwrap(), Vec2::ZERO);
        assert!(v(i64::MAX, 0).oplus(v(1, 0)).is_err());
        assert!(v(i64::MIN, 0).ominus().is_err());
    }

    #[test]
    fn lambda() {
        let t = BraceSpec::trivial();
        assert_eq!(t.lambda_of(v(5, -3)).unwrap(), Mat2::IDENTITY);
        let s = bardakov();
        assert_eq!(s.lambda_of(v(1, 1)).unwrap(), Mat2::new(3, 2, -2, -1));
        assert_eq!(s.lambda_of(v(1, -1)).unwrap(), Mat2::IDENTITY);
    }

    #[test]
    fn multiplication() {
        assert_eq!(BraceSpec::trivial().odot(v(1, 2), v(3, 4)).unwrap(), v(4, 6));
        let s = bardakov();
        assert_eq!(s.odot(v(1, 0), v(0, 1)).unwrap(), v(2, 0));
        for spec in [bardakov(), shear()] {
            assert_eq!(spec.odot(Vec2::ZERO, v(4, -2)).unwrap(), v(4, -2));
        }
    }

    #[test]
    fn multiplicative_inverse() {
        assert_eq!(BraceSpec::trivial().odot_inverse(v(1, 2)).unwrap(), v(-1, -2));
        let s = bardakov();
        let inv = s.odot_inverse(v(1, 0)).unwrap();
        assert_eq!(inv, v(0, -1));
        assert_eq!(s.odot(v(1, 0), inv).unwrap(), Vec2::ZERO);
        assert_eq!(s.odot(inv, v(1, 0)).unwrap(), Vec2::ZERO);
        assert_eq!(shear().odot_inverse(Vec2::ZERO).unwrap(), Vec2::ZERO);
    }

    #[test]
    fn kernel_membership() {
        assert!(shear().in_lambda_kernel(Vec2::ZERO).unwrap());
        assert!(bardakov().in_lambda_kernel(v(1, -1)).unwrap());
        assert!(!shear().in_lambda_kernel(v(1, 0)).unwrap());
    }

    #[test]
    fn verdicts() {
        let t = BraceSpec::trivial().check_pair().unwrap();
        assert!(t.valid && t.commuting);
        assert!(bardakov().check_pair().unwrap().valid);
        let bad = shear().check_pair().unwrap();
        assert!(!bad.valid);
        assert!(bad.commuting);
        assert_eq!(bad.eq4_results, [true, false, true, true]);
        assert_eq!(bad.kernel_results, [true, false, true, true]);

        let nc = BraceSpec::new(Mat2::new(1, 1, 0, 1), Mat2::new(1, 0, 1, 1)).unwrap();
        let verdict = nc.check_pair().unwrap();
        assert!(!verdict.commuting && !verdict.valid);
    }

    #[test]
    fn rejects_non_unimodular() {
        assert_eq!(
            BraceSpec::new(Mat2::new(2, 0, 0, 1), Mat2::IDENTITY),
            Err(Error::NotUnimodular(Mat2::new(2, 0, 0, 1)))
        );
        let json = r#"{"phi":[[2,0],[0,1]],"psi":[[1,0],[0,1]]}"#;
        assert!(serde_json::from_str::<BraceSpec>(json).is_err());
    }

    #[test]
    fn axiom_and_associativity() {
        let (a, b, c) = (v(1, 0), v(0, 1), v(1, 1));
        assert!(BraceSpec::trivial().brace_axiom_holds(a, b, c).unwrap());
        assert!(bardakov().brace_axiom_holds(a, b, c).unwrap());
        // the compatibility law holds for any homomorphic λ
        assert!(shear().brace_axiom_holds(a, b, c).unwrap());
        assert!(shear().brace_axiom_holds(v(-2, 3), v(4, 1), v(0, -3)).unwrap());

        let s = shear();
        let lhs = s.odot(a, s.odot(b, b).unwrap()).unwrap();
        let rhs = s.odot(s.odot(a, b).unwrap(), b).unwrap();
        assert_eq!((lhs, rhs), (v(3, 2), v(4, 2)));
        assert!(!s.odot_associative(a, b, b).unwrap());
    }

    #[test]
    fn holomorph() {
        let f = Mat2::new(2, 1, -1, 0);
        let h = HolElement::new(v(3, -1), f).unwrap();
        assert_eq!(HolElement::identity().mul(&h).unwrap(), h);
        assert_eq!(h.mul(&HolElement::identity()).unwrap(), h);
        let p = HolElement::new(v(1, 0), f).unwrap().mul(&HolElement::new(v(0, 1), f).unwrap()).unwrap();
        assert_eq!(p, HolElement { g: v(2, 0), f: Mat2::new(3, 2, -2, -1) });
        assert_eq!(p.project(), v(2, 0));
        assert!(HolElement::new(Vec2::ZERO, Mat2::new(1, 1, 1, 1)).is_err());
    }

    #[test]
    fn closure_of_h_lambda() {
        assert!(BraceSpec::trivial().h_lambda_closed(v(2, 3), v(-1, 4)).unwrap());
        let s = bardakov();
        for a1 in -4..=4 {
            for a2 in -4..=4 {
                assert!(s.h_lambda_closed(v(a1, a2), v(a2, -a1)).unwrap());
            }
        }
        assert!(!shear().h_lambda_closed(v(1, 0), v(0, 1)).unwrap());
    }

    #[test]
    fn json_forms() {
        let s = bardakov();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"phi":[[2,1],[-1,0]],"psi":[[2,1],[-1,0]]}"#);
        assert_eq!(serde_json::from_str::<BraceSpec>(&text).unwrap(), s);
        let verdict = serde_json::to_string(&shear().check_pair().unwrap()).unwrap();
        assert_eq!(
            verdict,
            r#"{"valid":false,"commuting":true,"eq4_results":[true,false,true,true],"kernel_results":[true,false,true,true]}"#
        );
    }
}
