//! Brute-force oracles that share no code with the library's arithmetic.
//! Golden counts below were produced by these oracles and are frozen here.

use zbrace::classification::{
    enumerate_unimodular, exhaustive_search, recover_row12, Execution, RowLabel,
};
use zbrace::{BraceSpec, Mat2};

type M = [[i128; 2]; 2];

const ID: M = [[1, 0], [0, 1]];

fn mul(a: M, b: M) -> M {
    let mut c = [[0i128; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn det(a: M) -> i128 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

fn inv(a: M) -> M {
    let d = det(a);
    [[a[1][1] * d, -a[0][1] * d], [-a[1][0] * d, a[0][0] * d]]
}

/// Repeated multiplication, one factor at a time.
fn power(a: M, k: i128) -> M {
    let step = if k < 0 { inv(a) } else { a };
    (0..k.abs()).fold(ID, |acc, _| mul(acc, step))
}

fn oracle_valid(f: M, g: M) -> bool {
    if mul(f, g) != mul(g, f) {
        return false;
    }
    let exps = [
        (f[0][0] - 1, f[1][0]),
        (f[0][1], f[1][1] - 1),
        (g[0][0] - 1, g[1][0]),
        (g[0][1], g[1][1] - 1),
    ];
    exps.iter().all(|&(a, b)| mul(power(f, a), power(g, b)) == ID)
}

fn all_unimodular(bound: i128) -> Vec<M> {
    let r = -bound..=bound;
    let mut out = Vec::new();
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    let m = [[a, b], [c, d]];
                    if det(m).abs() == 1 {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

fn to_m(a: Mat2) -> M {
    a.rows().map(|r| r.map(i128::from))
}

fn count_valid(bound: i128) -> u64 {
    let mats = all_unimodular(bound);
    let mut n = 0;
    for &f in &mats {
        for &g in &mats {
            if oracle_valid(f, g) {
                n += 1;
            }
        }
    }
    n
}

// Frozen oracle outputs.
const N1: usize = 40;
const N2: usize = 104;
const V1: u64 = 34;
const V2: u64 = 90;

#[test]
fn unimodular_counts_match_direct_loop() {
    assert_eq!(all_unimodular(1).len(), N1);
    assert_eq!(all_unimodular(2).len(), N2);
    for bound in 1..=3u32 {
        let lib: Vec<M> = enumerate_unimodular(bound).map(to_m).collect();
        let direct = all_unimodular(bound as i128);
        assert_eq!(lib, direct, "bound {bound}");
        let mut dedup = lib.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), lib.len());
    }
    assert!(N2 >= N1);
}

#[test]
fn valid_pair_counts_match_oracle() {
    assert_eq!(count_valid(1), V1);
    assert_eq!(count_valid(2), V2);
    assert_eq!(exhaustive_search(1, Execution::Sequential).valid_pairs, V1);
    assert_eq!(exhaustive_search(2, Execution::Parallel).valid_pairs, V2);
}

#[test]
fn check_pair_agrees_with_oracle_pairwise() {
    let mats: Vec<Mat2> = enumerate_unimodular(2).collect();
    for &f in &mats {
        for &g in &mats {
            let spec = BraceSpec::new(f, g).unwrap();
            let lib = spec.check_pair().unwrap().valid;
            assert_eq!(lib, oracle_valid(to_m(f), to_m(g)), "{spec}");
        }
    }
}

#[test]
fn trivial_pair_is_valid_at_bound_one() {
    assert!(oracle_valid(ID, ID));
    let report = exhaustive_search(1, Execution::Sequential);
    assert!(report.row_histogram[&RowLabel::R11] >= 1);
    assert!(report.row_histogram[&RowLabel::R12] >= 1);
}

/// Row 1.2 membership by bounded search over `(m, p, q)` with gcd(p, q) = 1
/// and `|m|·max(|p|,|q|)³ ≤ max|entry| + 1`.
fn row12_by_search(f: M, g: M) -> bool {
    if f == ID && g == ID {
        return true;
    }
    let max_entry = f.iter().chain(g.iter()).flatten().map(|x| x.abs()).max().unwrap();
    let cap = max_entry + 1;
    let mut k = 0i128;
    while (k + 1).pow(3) <= cap {
        k += 1;
    }
    let gcd = |mut a: i128, mut b: i128| {
        (a, b) = (a.abs(), b.abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    for p in -k..=k {
        for q in -k..=k {
            if gcd(p, q) != 1 {
                continue;
            }
            let top = p.abs().max(q.abs()).pow(3);
            for m in -cap..=cap {
                if m.abs() * top > cap {
                    continue;
                }
                let phi = [[1 + m * p * p * q, m * p * q * q], [-m * p * p * p, 1 - m * p * p * q]];
                let psi = [[1 + m * p * q * q, m * q * q * q], [-m * p * p * q, 1 - m * p * q * q]];
                if phi == f && psi == g {
                    return true;
                }
            }
        }
    }
    false
}

#[test]
fn row12_recovery_matches_bounded_search() {
    let mats: Vec<Mat2> = enumerate_unimodular(3).collect();
    let mut hits = 0;
    for &f in &mats {
        for &g in &mats {
            let spec = BraceSpec::new(f, g).unwrap();
            let closed_form = recover_row12(&spec).is_some();
            assert_eq!(closed_form, row12_by_search(to_m(f), to_m(g)), "{spec}");
            hits += closed_form as u32;
        }
    }
    assert!(hits > 0);
}
