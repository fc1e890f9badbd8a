//! The set-theoretic Yang–Baxter solution attached to a brace:
//!
//! ```text
//! r(x, y) = (⊖x ⊕ (x⊙y), (⊖x ⊕ (x⊙y))⁻¹ ⊙ x ⊙ y)
//! ```
//!
//! where `⁻¹` is the inverse in the multiplicative group.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::brace::{BraceSpec, Vec2};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PairZ2 {
    pub first: Vec2,
    pub second: Vec2,
}

impl PairZ2 {
    pub const fn new(first: Vec2, second: Vec2) -> Self {
        PairZ2 { first, second }
    }
}

/// The map `r` of a pair already known to be a brace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct YbeSolution {
    spec: BraceSpec,
}

impl YbeSolution {
    /// Fails with [`Error::InvalidSpec`] unless `spec` passes `check_pair`.
    pub fn new(spec: BraceSpec) -> Result<Self> {
        if !spec.check_pair()?.valid {
            return Err(Error::InvalidSpec(spec.to_string()));
        }
        Ok(YbeSolution { spec })
    }

    pub fn spec(&self) -> BraceSpec {
        self.spec
    }

    pub fn apply(&self, x: Vec2, y: Vec2) -> Result<PairZ2> {
        let s = &self.spec;
        let xy = s.odot(x, y)?;
        let first = x.ominus()?.oplus(xy)?;
        let second = s.odot(s.odot_inverse(first)?, xy)?;
        Ok(PairZ2::new(first, second))
    }

    /// `(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r)` at `(x, y, z)`.
    pub fn ybe_holds(&self, x: Vec2, y: Vec2, z: Vec2) -> Result<bool> {
        let r12 = |t: [Vec2; 3]| -> Result<[Vec2; 3]> {
            let p = self.apply(t[0], t[1])?;
            Ok([p.first, p.second, t[2]])
        };
        let r23 = |t: [Vec2; 3]| -> Result<[Vec2; 3]> {
            let p = self.apply(t[1], t[2])?;
            Ok([t[0], p.first, p.second])
        };
        let start = [x, y, z];
        let lhs = r12(r23(r12(start)?)?)?;
        let rhs = r23(r12(r23(start)?)?)?;
        Ok(lhs == rhs)
    }

    pub fn involutive_at(&self, x: Vec2, y: Vec2) -> Result<bool> {
        let once = self.apply(x, y)?;
        Ok(self.apply(once.first, once.second)? == PairZ2::new(x, y))
    }

    /// Left component: `v ↦ first(r(x, v)) = λ_x(v)` is inverted explicitly
    /// with `λ_x⁻¹` and must return `y`. Right component: `w ↦ second(r(w, y))`
    /// must not send any other `w` of the box `[−half_width, half_width]²` to
    /// the value it takes at `w = x`.
    pub fn nondegenerate_at(&self, x: Vec2, y: Vec2, half_width: i64) -> Result<bool> {
        let image = self.apply(x, y)?;
        let lambda_x = self.spec.lambda_of(x)?;
        if image.first != lambda_x.apply(y)? || lambda_x.inverse()?.apply(image.first)? != y {
            return Ok(false);
        }
        for w1 in -half_width..=half_width {
            for w2 in -half_width..=half_width {
                let w = Vec2::new(w1, w2);
                if w != x && self.apply(w, y)?.second == image.second {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Runs all three checks on `samples` seeded triples from the box
    /// `[−half_width, half_width]²`. Identical arguments give an identical report.
    pub fn run_suite(&self, samples: usize, seed: u64, half_width: i64) -> Result<YbeReport> {
        let triples = sample_triples(samples, seed, half_width);
        let outcomes = triples
            .par_iter()
            .map(|&[x, y, z]| -> Result<(bool, bool, bool)> {
                Ok((
                    self.ybe_holds(x, y, z)?,
                    self.involutive_at(x, y)?,
                    self.nondegenerate_at(x, y, half_width)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;

        let mut report = YbeReport {
            spec: self.spec,
            seed,
            r#box: half_width,
            samples,
            ybe_failures: Vec::new(),
            involutivity_failures: Vec::new(),
            nondegeneracy_failures: Vec::new(),
        };
        for (&[x, y, z], (ybe, inv, nondeg)) in triples.iter().zip(outcomes) {
            if !ybe {
                report.ybe_failures.push([x, y, z]);
            }
            if !inv {
                report.involutivity_failures.push(PairZ2::new(x, y));
            }
            if !nondeg {
                report.nondegeneracy_failures.push(PairZ2::new(x, y));
            }
        }
        report.ybe_failures.sort();
        report.ybe_failures.dedup();
        report.involutivity_failures.sort();
        report.involutivity_failures.dedup();
        report.nondegeneracy_failures.sort();
        report.nondegeneracy_failures.dedup();
        Ok(report)
    }
}

/// Deterministic triples of points with coordinates in `[−half_width, half_width]`.
pub fn sample_triples(samples: usize, seed: u64, half_width: i64) -> Vec<[Vec2; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let point = |rng: &mut ChaCha8Rng| {
        Vec2::new(rng.gen_range(-half_width..=half_width), rng.gen_range(-half_width..=half_width))
    };
    (0..samples).map(|_| [point(&mut rng), point(&mut rng), point(&mut rng)]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YbeReport {
    pub spec: BraceSpec,
    pub seed: u64,
    pub r#box: i64,
    pub samples: usize,
    pub ybe_failures: Vec<[Vec2; 3]>,
    pub involutivity_failures: Vec<PairZ2>,
    pub nondegeneracy_failures: Vec<PairZ2>,
}

impl YbeReport {
    pub fn is_clean(&self) -> bool {
        self.ybe_failures.is_empty()
            && self.involutivity_failures.is_empty()
            && self.nondegeneracy_failures.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl2z::Mat2;

    fn v(a: i64, b: i64) -> Vec2 {
        Vec2::new(a, b)
    }

    fn bardakov() -> YbeSolution {
        let a = Mat2::new(2, 1, -1, 0);
        YbeSolution::new(BraceSpec::new(a, a).unwrap()).unwrap()
    }

    #[test]
    fn trivial_brace_gives_flip() {
        let r = YbeSolution::new(BraceSpec::trivial()).unwrap();
        assert_eq!(r.apply(v(1, 2), v(-3, 5)).unwrap(), PairZ2::new(v(-3, 5), v(1, 2)));
        assert_eq!(r.apply(v(4, 4), v(4, 4)).unwrap(), PairZ2::new(v(4, 4), v(4, 4)));
        assert!(r.ybe_holds(v(1, 0), v(0, 1), v(2, -2)).unwrap());
        assert!(r.involutive_at(v(1, 0), v(3, 3)).unwrap());
        assert!(r.nondegenerate_at(v(1, 0), v(3, 3), 4).unwrap());
    }

    #[test]
    fn bardakov_values() {
        let r = bardakov();
        assert_eq!(r.apply(v(1, 0), v(0, 1)).unwrap(), PairZ2::new(v(1, 0), v(0, 1)));
        // x⊙y = (2,0), first = (2,-1), first⁻¹ = (-1,0), (-1,0)⊙(2,0) = (-1,2)
        assert_eq!(r.apply(v(0, 1), v(1, 0)).unwrap(), PairZ2::new(v(2, -1), v(-1, 2)));
        assert_eq!(r.apply(v(2, -1), v(-1, 2)).unwrap(), PairZ2::new(v(0, 1), v(1, 0)));
        assert!(r.involutive_at(v(0, 1), v(1, 0)).unwrap());
        assert!(r.ybe_holds(Vec2::ZERO, Vec2::ZERO, Vec2::ZERO).unwrap());
    }

    #[test]
    fn rejects_invalid_pairs() {
        let shear = BraceSpec::new(Mat2::new(1, 1, 0, 1), Mat2::IDENTITY).unwrap();
        assert!(matches!(YbeSolution::new(shear), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn suite_is_reproducible() {
        let r = bardakov();
        let a = r.run_suite(200, 7, 4).unwrap();
        let b = r.run_suite(200, 7, 4).unwrap();
        assert_eq!(a, b);
        assert!(a.is_clean());
        assert_eq!(sample_triples(10, 1, 4), sample_triples(10, 1, 4));
        assert_ne!(sample_triples(10, 1, 4), sample_triples(10, 2, 4));
        assert!(sample_triples(500, 3, 2)
            .iter()
            .flatten()
            .all(|p| p.x1.abs() <= 2 && p.x2.abs() <= 2));
    }
}
