//! Brute-force cross-validation of the classification on bounded boxes.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::rows::{generate_row, row_membership, RowLabel, RowParams, Sign};
use crate::brace::BraceSpec;
use crate::error::{Error, Result};
use crate::gl2z::{Mat2, MatOrder};

/// Every matrix with entries in `[−bound, bound]` and determinant ±1,
/// in lexicographic order of `(a11, a12, a21, a22)`.
pub fn enumerate_unimodular(bound: u32) -> impl Iterator<Item = Mat2> {
    let b = bound as i64;
    (-b..=b).flat_map(move |a11| {
        (-b..=b).flat_map(move |a12| {
            (-b..=b).flat_map(move |a21| {
                (-b..=b)
                    .map(move |a22| Mat2::new(a11, a12, a21, a22))
                    .filter(|m| m.is_unimodular())
            })
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RowInstance {
    pub row: RowLabel,
    pub spec: BraceSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub bound: u32,
    /// Ordered pairs `(φ, ψ)` examined.
    pub candidates: u64,
    pub valid_pairs: u64,
    pub commuting_pairs: u64,
    /// Valid pairs per matched row; a pair in several rows counts in each.
    pub row_histogram: BTreeMap<RowLabel, u64>,
    /// Valid pairs matching no row.
    pub unmatched_valid: Vec<BraceSpec>,
    /// Pairs matching a row condition, or produced by a row generator, that are not valid.
    pub invalid_row_instances: Vec<RowInstance>,
    /// Commuting pairs whose power-equality and kernel-form checks disagree.
    pub kernel_mismatches: Vec<BraceSpec>,
    /// Pairs whose evaluation overflowed `i64`.
    pub overflows: Vec<BraceSpec>,
    /// Row-generator outputs that fit in the box.
    pub generator_instances: u64,
    /// Valid pairs in a row that the bounded generator grid never produced.
    pub generator_gaps: Vec<RowInstance>,
}

impl SearchReport {
    /// True when every valid pair matched a row and every row instance was valid.
    pub fn classification_holds(&self) -> bool {
        self.unmatched_valid.is_empty() && self.invalid_row_instances.is_empty()
    }
}

#[derive(Default)]
struct Partial {
    candidates: u64,
    valid: u64,
    commuting: u64,
    histogram: BTreeMap<RowLabel, u64>,
    unmatched: Vec<BraceSpec>,
    invalid_rows: Vec<RowInstance>,
    kernel_mismatches: Vec<BraceSpec>,
    overflows: Vec<BraceSpec>,
    matched: Vec<RowInstance>,
}

fn visit(partial: &mut Partial, spec: BraceSpec) -> Result<()> {
    let verdict = spec.check_pair()?;
    let rows = row_membership(&spec)?;
    if verdict.commuting {
        partial.commuting += 1;
        if !verdict.routes_agree() {
            partial.kernel_mismatches.push(spec);
        }
    }
    if verdict.valid {
        partial.valid += 1;
        if rows.is_empty() {
            partial.unmatched.push(spec);
        }
        for &row in &rows {
            *partial.histogram.entry(row).or_default() += 1;
            partial.matched.push(RowInstance { row, spec });
        }
    } else {
        partial.invalid_rows.extend(rows.into_iter().map(|row| RowInstance { row, spec }));
    }
    Ok(())
}

fn scan_phi(phi: Mat2, psis: &[Mat2]) -> Partial {
    let mut partial = Partial::default();
    for &psi in psis {
        partial.candidates += 1;
        let spec = BraceSpec::new(phi, psi).expect("enumerated matrices are unimodular");
        match visit(&mut partial, spec) {
            Ok(()) => {}
            Err(Error::Overflow(_)) => partial.overflows.push(spec),
            Err(e) => unreachable!("unexpected error on {spec}: {e}"),
        }
    }
    partial
}

/// Parameter tuples for `label` with every integer parameter in `[−radius, radius]`.
pub fn parameter_grid(label: RowLabel, radius: i64) -> Vec<RowParams> {
    let r = -radius..=radius;
    let mut out = Vec::new();
    match label {
        RowLabel::R11 => {
            for s1 in Sign::BOTH {
                for s2 in Sign::BOTH {
                    out.push(RowParams::new().sign1(s1).sign2(s2));
                }
            }
        }
        RowLabel::R12 => {
            for m in r.clone() {
                for p in r.clone() {
                    for q in r.clone() {
                        out.push(RowParams::new().m(m).p(p).q(q));
                    }
                }
            }
        }
        RowLabel::R15 | RowLabel::R16 => {
            for m in r.clone() {
                for n in r.clone() {
                    out.push(RowParams::new().m(m).n(n));
                }
            }
        }
        RowLabel::R41 => {
            for m in r.clone() {
                for n in r.clone() {
                    if m == n {
                        for p in r.clone() {
                            out.push(RowParams::new().m(m).n(n).p(p));
                        }
                    } else {
                        out.push(RowParams::new().m(m).n(n));
                    }
                }
            }
        }
        RowLabel::R42 => {
            for m in r.clone() {
                for p in r.clone() {
                    for s in Sign::BOTH {
                        out.push(RowParams::new().m(m).p(p).sign1(s));
                    }
                }
            }
        }
        RowLabel::R13 | RowLabel::R14 | RowLabel::R21 | RowLabel::R22 | RowLabel::R31 | RowLabel::R32 => {
            for p in r.clone() {
                for q in r.clone() {
                    for s in Sign::BOTH {
                        out.push(RowParams::new().p(p).q(q).sign1(s));
                    }
                }
            }
        }
    }
    out
}

/// Radius of the parameter grid used for a box of half-width `bound`.
pub fn grid_radius(bound: u32) -> i64 {
    2 * bound as i64 + 2
}

/// Row-generator outputs over [`parameter_grid`] whose entries lie in `[−bound, bound]`.
/// Parameter tuples the generator rejects (non-square radicands, inexact
/// division, gcd ≠ 1, overflow) are skipped.
pub fn generator_instances(bound: u32) -> BTreeSet<RowInstance> {
    let radius = grid_radius(bound);
    let mut out = BTreeSet::new();
    for row in RowLabel::ALL {
        for params in parameter_grid(row, radius) {
            if let Ok(spec) = generate_row(row, &params) {
                let fits = [spec.phi(), spec.psi()].iter().all(|m| m.max_abs_entry() <= bound as u64);
                if fits {
                    out.insert(RowInstance { row, spec });
                }
            }
        }
    }
    out
}

/// Checks every ordered pair of unimodular matrices with entries in
/// `[−bound, bound]` against the row conditions, and every row-generator
/// output in the same box against validity.
///
/// Parallel and sequential execution produce identical reports.
pub fn exhaustive_search(bound: u32, execution: Execution) -> SearchReport {
    assert!(bound >= 1, "bound must be positive");
    let mats: Vec<Mat2> = enumerate_unimodular(bound).collect();
    let partials: Vec<Partial> = match execution {
        Execution::Sequential => mats.iter().map(|&phi| scan_phi(phi, &mats)).collect(),
        Execution::Parallel => mats.par_iter().map(|&phi| scan_phi(phi, &mats)).collect(),
    };

    let mut total = Partial::default();
    for p in partials {
        total.candidates += p.candidates;
        total.valid += p.valid;
        total.commuting += p.commuting;
        for (row, k) in p.histogram {
            *total.histogram.entry(row).or_default() += k;
        }
        total.unmatched.extend(p.unmatched);
        total.invalid_rows.extend(p.invalid_rows);
        total.kernel_mismatches.extend(p.kernel_mismatches);
        total.overflows.extend(p.overflows);
        total.matched.extend(p.matched);
    }

    let generated = generator_instances(bound);
    let mut invalid_rows: BTreeSet<RowInstance> = total.invalid_rows.into_iter().collect();
    for inst in &generated {
        match inst.spec.check_pair() {
            Ok(v) if v.valid => {}
            _ => {
                invalid_rows.insert(inst.clone());
            }
        }
    }
    let mut generator_gaps: Vec<RowInstance> =
        total.matched.into_iter().filter(|inst| !generated.contains(inst)).collect();
    generator_gaps.sort();

    let mut row_histogram: BTreeMap<RowLabel, u64> = RowLabel::ALL.iter().map(|&l| (l, 0)).collect();
    row_histogram.extend(total.histogram);

    total.unmatched.sort();
    total.kernel_mismatches.sort();
    total.overflows.sort();
    SearchReport {
        bound,
        candidates: total.candidates,
        valid_pairs: total.valid,
        commuting_pairs: total.commuting,
        row_histogram,
        unmatched_valid: total.unmatched,
        invalid_row_instances: invalid_rows.into_iter().collect(),
        kernel_mismatches: total.kernel_mismatches,
        overflows: total.overflows,
        generator_instances: generated.len() as u64,
        generator_gaps,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderDisagreement {
    pub matrix: Mat2,
    pub by_predicate: MatOrder,
    pub by_iteration: MatOrder,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrdersReport {
    pub bound: u32,
    pub matrices: u64,
    /// Matrices per order, keyed `"1"`, `"2"`, `"3"`, `"4"`, `"6"`, `"inf"`.
    pub order_histogram: BTreeMap<String, u64>,
    pub disagreements: Vec<OrderDisagreement>,
}

/// Compares the determinant/trace order rule with repeated multiplication
/// (cutoff 12) on every unimodular matrix in the box.
pub fn orders_crosscheck(bound: u32) -> Result<OrdersReport> {
    let mut report = OrdersReport {
        bound,
        matrices: 0,
        order_histogram: ["1", "2", "3", "4", "6", "inf"].iter().map(|k| (k.to_string(), 0)).collect(),
        disagreements: Vec::new(),
    };
    for a in enumerate_unimodular(bound) {
        report.matrices += 1;
        let by_predicate = a.order()?;
        let by_iteration = a.order_by_iteration(12)?;
        *report.order_histogram.entry(by_iteration.to_string()).or_default() += 1;
        if by_predicate != by_iteration {
            report.disagreements.push(OrderDisagreement { matrix: a, by_predicate, by_iteration });
        }
    }
    Ok(report)
}
