//! Shared helpers for the integration suites: labelled pass/fail
//! wrappers, a seeded RNG, random graded-ideal generators, exact
//! rational linear algebra, and a brute-force minimum-weight basis
//! search used as an independent oracle.

#![allow(dead_code)]

use curvestab::poly::{
    graded_dimension_by_rank, hilbert_function, initial_ideal, monomials_of_degree,
    weighted_basis_sum, Ideal, Monomial, Polynomial,
};
use curvestab::rational::{int, Rat};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};

/// Runs a closure and prints exactly one `[PASS]`/`[FAIL]` line for it,
/// re-raising any panic so the surrounding test still fails.
pub fn checked(label: &str, f: impl FnOnce()) {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(()) => println!("[PASS] {label}"),
        Err(cause) => {
            println!("[FAIL] {label}");
            resume_unwind(cause);
        }
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random monomial of the given total degree in `nvars` variables.
pub fn random_monomial(rng: &mut StdRng, nvars: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; nvars];
    for _ in 0..degree {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::new(exps)
}

/// Homogeneous monomial ideal with 2..=4 generators of degree 1..=3.
pub fn random_monomial_ideal(rng: &mut StdRng) -> Ideal {
    let nvars = 5;
    let count = rng.gen_range(2..=4);
    let gens = (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            Polynomial::term(int(1), random_monomial(rng, nvars, d))
        })
        .collect();
    Ideal::new(gens, nvars)
}

/// Homogeneous binomial ideal: 2..=3 differences of distinct equal-degree
/// monomials, degrees 2..=3.
pub fn random_binomial_ideal(rng: &mut StdRng) -> Ideal {
    let nvars = 5;
    let count = rng.gen_range(2..=3);
    let gens = (0..count)
        .map(|_| {
            let d = rng.gen_range(2..=3);
            let lhs = random_monomial(rng, nvars, d);
            let rhs = loop {
                let m = random_monomial(rng, nvars, d);
                if m != lhs {
                    break m;
                }
            };
            Polynomial::term(int(1), lhs).sub(&Polynomial::term(int(1), rhs))
        })
        .collect();
    Ideal::new(gens, nvars)
}

/// Random integer weight vector with entries in -9..=9, not all equal.
pub fn random_weights(rng: &mut StdRng) -> [i64; 5] {
    loop {
        let mut w = [0i64; 5];
        for x in &mut w {
            *x = rng.gen_range(-9..=9);
        }
        if w.iter().any(|&x| x != w[0]) {
            return w;
        }
    }
}

pub fn to_rat_weights(w: &[i64; 5]) -> Vec<Rat> {
    w.iter().map(|&x| int(x)).collect()
}

/// Gaussian elimination; consumes the rows and returns the rank.
pub fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][col].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for c in col..ncols {
                    let delta = &factor * &rows[r][c];
                    rows[i][c] = &rows[i][c] - delta;
                }
            }
        }
        r += 1;
    }
    r
}

/// Reduced row-echelon form with its pivot columns.
fn echelon(mut rows: Vec<Vec<Rat>>) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][col].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for c in 0..ncols {
                    let delta = &factor * &rows[r][c];
                    rows[i][c] = &rows[i][c] - delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Coordinate vectors spanning the degree-`m` graded piece of a
/// homogeneous ideal, over the basis `monomials_of_degree(nvars, m)`.
pub fn degree_piece(ideal: &Ideal, m: u32) -> Vec<Vec<Rat>> {
    let nvars = ideal.nvars();
    let monos = monomials_of_degree(nvars, m);
    let index: BTreeMap<&Monomial, usize> =
        monos.iter().enumerate().map(|(i, mo)| (mo, i)).collect();
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let Some(d) = g.total_degree() else { continue };
        if d > m {
            continue;
        }
        for mult in monomials_of_degree(nvars, m - d) {
            let p = g.mul_term(&int(1), &mult);
            let mut row = vec![Rat::zero(); monos.len()];
            for (mono, c) in p.terms() {
                row[index[mono]] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

fn reduce_vector(mut v: Vec<Rat>, rref: &[Vec<Rat>], pivots: &[usize]) -> Vec<Rat> {
    for (row, &col) in rref.iter().zip(pivots) {
        if !v[col].is_zero() {
            let factor = v[col].clone();
            for c in 0..v.len() {
                let delta = &factor * &row[c];
                v[c] = &v[c] - delta;
            }
        }
    }
    v
}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        visit(&idx);
        // advance to the next k-combination of 0..n in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] + (k - i) < n {
                break;
            }
        }
        if idx[i] + (k - i) >= n {
            return;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exhaustive minimum of the total weight over every monomial basis of
/// the degree-`m` quotient piece. Monomials lying in the ideal modulo
/// the given relations can never appear in a basis and are filtered
/// out before subset enumeration.
pub fn brute_force_min_basis_weight(ideal: &Ideal, weights: &[Rat], m: u32) -> Rat {
    let monos = monomials_of_degree(ideal.nvars(), m);
    let (rref, pivots) = echelon(degree_piece(ideal, m));
    let quotient_dim = monos.len() - rref.len();

    let mut candidates: Vec<(usize, Vec<Rat>)> = Vec::new();
    for (j, _) in monos.iter().enumerate() {
        let mut e = vec![Rat::zero(); monos.len()];
        e[j] = int(1);
        let r = reduce_vector(e, &rref, &pivots);
        if r.iter().any(|x| !x.is_zero()) {
            candidates.push((j, r));
        }
    }
    assert!(
        candidates.len() <= 16,
        "test ideal too large for exhaustive basis enumeration"
    );

    let mut best: Option<Rat> = None;
    combinations(candidates.len(), quotient_dim, |subset| {
        let rows: Vec<Vec<Rat>> = subset
            .iter()
            .map(|&i| candidates[i].1.clone())
            .collect();
        if rank(rows) == quotient_dim {
            let total: Rat = subset
                .iter()
                .map(|&i| monos[candidates[i].0].weight(weights))
                .sum();
            if best.as_ref().map_or(true, |b| &total < b) {
                best = Some(total);
            }
        }
    });
    best.expect("quotient piece has at least one monomial basis")
}

/// Total weight of the standard-monomial basis selected by the
/// weighted order.
pub fn standard_basis_weight(ideal: &Ideal, weights: &[Rat], m: u32) -> Rat {
    let init = initial_ideal(ideal, weights);
    weighted_basis_sum(&init, weights, m)
}

/// Asserts that counting standard monomials of the initial ideal
/// agrees with the exact-rank dimension of the quotient piece.
pub fn assert_macaulay(ideal: &Ideal, weights: &[Rat], degrees: &[u32]) {
    let init = initial_ideal(ideal, weights);
    for &m in degrees {
        let combinatorial = hilbert_function(&init, m);
        let by_rank = graded_dimension_by_rank(ideal, m)
            .expect("rank-based dimension is defined for homogeneous input");
        assert_eq!(
            combinatorial, by_rank,
            "standard-monomial count {combinatorial} != rank-based dimension {by_rank} \
             at degree {m} for weights {weights:?}"
        );
    }
}

/// The five fixed small-quotient ideals used by the exhaustive
/// weight-minimality check. Each contains enough variables that every
/// graded piece of the quotient in degree <= 3 has at most a handful
/// of candidate basis monomials.
pub fn small_quotient_ideals() -> Vec<Ideal> {
    let n = 5;
    let var = |i: usize| Polynomial::var(i, n);
    let mono = |exps: [u32; 5]| Polynomial::term(int(1), Monomial::new(exps.to_vec()));
    vec![
        // conic in three variables
        Ideal::new(
            vec![
                mono([0, 2, 0, 0, 0]).sub(&mono([1, 0, 1, 0, 0])),
                var(3),
                var(4),
            ],
            n,
        ),
        // one mixed monomial
        Ideal::new(vec![mono([1, 1, 0, 0, 0]), var(3), var(4)], n),
        // two squares
        Ideal::new(
            vec![mono([2, 0, 0, 0, 0]), mono([0, 2, 0, 0, 0]), var(3), var(4)],
            n,
        ),
        // binomial plus monomial
        Ideal::new(
            vec![
                mono([2, 0, 0, 0, 0]).sub(&mono([0, 2, 0, 0, 0])),
                mono([0, 1, 1, 0, 0]),
                var(3),
                var(4),
            ],
            n,
        ),
        // two effective variables
        Ideal::new(vec![mono([2, 1, 0, 0, 0]), var(2), var(3), var(4)], n),
    ]
}
