use super::groebner::{groebner_basis, reduce};
use super::monomial::{monomials_of_degree, Monomial};
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::rational::{int, Rat};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Polynomial ideal with per-order Gröbner basis cache.
#[derive(Debug)]
pub struct Ideal {
    gens: Vec<Polynomial>,
    nvars: usize,
    cache: RwLock<HashMap<String, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            gens: self.gens.clone(),
            nvars: self.nvars,
            cache: RwLock::new(self.cache.read().unwrap().clone()),
        }
    }
}

impl PartialEq for Ideal {
    /// Equality of generator sets as reduced grevlex bases.
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars
            && *self.groebner(&MonomialOrder::GrevLex) == *other.groebner(&MonomialOrder::GrevLex)
    }
}

impl Ideal {
    pub fn new(gens: Vec<Polynomial>, nvars: usize) -> Self {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            gens,
            nvars,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    /// Reduced Gröbner basis under `order`, cached per order.
    pub fn groebner(&self, order: &MonomialOrder) -> Arc<Vec<Polynomial>> {
        let key = order.cache_key();
        if let Some(b) = self.cache.read().unwrap().get(&key) {
            return Arc::clone(b);
        }
        let basis = Arc::new(groebner_basis(&self.gens, order));
        self.cache
            .write()
            .unwrap()
            .insert(key, Arc::clone(&basis));
        Arc::clone(&basis)
    }

    /// Ideal membership via normal form.
    pub fn contains(&self, p: &Polynomial) -> bool {
        let order = MonomialOrder::GrevLex;
        let basis = self.groebner(&order);
        reduce(p, &basis, &order).is_zero()
    }

    /// Minimal monomial generators (valid when the ideal is monomial).
    pub fn monomial_generators(&self) -> Vec<Monomial> {
        assert!(self.is_monomial(), "monomial ideal required");
        let all: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| g.terms().next().unwrap().0.clone())
            .collect();
        let mut minimal = Vec::new();
        for (i, m) in all.iter().enumerate() {
            let dominated = all
                .iter()
                .enumerate()
                .any(|(j, n)| j != i && n.divides(m) && (n != m || j < i));
            if !dominated {
                minimal.push(m.clone());
            }
        }
        minimal.sort();
        minimal.dedup();
        minimal
    }
}

/// Contracts `ideal` to the subring in the kept variables.
///
/// Uses a weight order with weight 1 on the eliminated variables and
/// grevlex tiebreak, which is an elimination order for that block. The
/// result is re-indexed to the kept variables.
pub fn eliminate(ideal: &Ideal, keep: &[usize]) -> Ideal {
    let nvars = ideal.nvars();
    let dropped: Vec<usize> = (0..nvars).filter(|v| !keep.contains(v)).collect();
    if dropped.is_empty() {
        return ideal.clone();
    }
    let w: Vec<Rat> = (0..nvars)
        .map(|v| if dropped.contains(&v) { int(1) } else { int(0) })
        .collect();
    let order = MonomialOrder::Weighted(w);
    let basis = ideal.groebner(&order);
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter(|g| {
            g.leading_monomial(&order)
                .map_or(false, |m| m.avoids(&dropped))
        })
        .map(|g| g.project(keep))
        .collect();
    Ideal::new(kept, keep.len())
}

/// Intersection of two ideals via the one-extra-variable trick:
/// I ∩ J = (t·I + (1−t)·J) ∩ k[x].
pub fn intersect(a: &Ideal, b: &Ideal) -> Ideal {
    debug_assert_eq!(a.nvars(), b.nvars());
    let n = a.nvars();
    let t = Polynomial::var(n, n + 1);
    let one_minus_t = Polynomial::constant(Rat::one(), n + 1).sub(&t);
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(g.extend(n + 1).mul(&t));
    }
    for g in b.generators() {
        gens.push(g.extend(n + 1).mul(&one_minus_t));
    }
    let big = Ideal::new(gens, n + 1);
    let keep: Vec<usize> = (0..n).collect();
    eliminate(&big, &keep)
}

/// Normalizes a weight vector so that all entries are non-negative by
/// subtracting the minimum. For homogeneous ideals this shifts every
/// degree-m weight by a constant and leaves the graded order unchanged.
fn shift_nonneg(weights: &[Rat]) -> Vec<Rat> {
    let min = weights.iter().min().cloned().unwrap_or_else(Rat::zero);
    weights.iter().map(|w| w - &min).collect()
}

/// Monomial ideal of leading terms of a homogeneous ideal under the
/// weighted order (higher weight leads, grevlex tiebreak).
pub fn initial_ideal(ideal: &Ideal, weights: &[Rat]) -> Ideal {
    debug_assert!(ideal.is_homogeneous(), "homogeneous ideal required");
    let order = MonomialOrder::Weighted(shift_nonneg(weights));
    let basis = ideal.groebner(&order);
    let gens: Vec<Polynomial> = basis
        .iter()
        .filter_map(|g| {
            g.leading_monomial(&order)
                .map(|m| Polynomial::term(Rat::one(), m.clone()))
        })
        .collect();
    Ideal::new(gens, ideal.nvars())
}

/// Degree-m standard monomials of a monomial ideal (monomials outside
/// the ideal), in the deterministic enumeration order.
pub fn standard_monomials(ideal: &Ideal, m: u32) -> Vec<Monomial> {
    let gens = ideal.monomial_generators();
    monomials_of_degree(ideal.nvars(), m)
        .into_iter()
        .filter(|mm| !gens.iter().any(|g| g.divides(mm)))
        .collect()
}

/// Number of degree-m standard monomials.
pub fn hilbert_function(ideal: &Ideal, m: u32) -> i64 {
    standard_monomials(ideal, m).len() as i64
}

/// Sum of `<weights, exponents>` over all degree-m standard monomials.
pub fn weighted_basis_sum(ideal: &Ideal, weights: &[Rat], m: u32) -> Rat {
    let mut acc = Rat::zero();
    for mm in standard_monomials(ideal, m) {
        acc += mm.weight(weights);
    }
    acc
}

/// Dimension of the degree-m graded piece of S/I by exact linear
/// algebra on the generator multiples: an oracle route independent of
/// the standard-monomial count.
pub fn graded_dimension_by_rank(ideal: &Ideal, m: u32) -> Result<i64> {
    if !ideal.is_homogeneous() {
        return Err(Error::UnsupportedModel(
            "graded dimension requires a homogeneous ideal".into(),
        ));
    }
    let nvars = ideal.nvars();
    let cols: Vec<Monomial> = monomials_of_degree(nvars, m);
    let col_index: HashMap<&Monomial, usize> =
        cols.iter().enumerate().map(|(i, c)| (c, i)).collect();
    // rows: monomial multiples of each generator landing in degree m
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for g in ideal.generators() {
        let d = match g.total_degree() {
            Some(d) if d <= m => d,
            _ => continue,
        };
        for mult in monomials_of_degree(nvars, m - d) {
            let prod = g.mul_term(&Rat::one(), &mult);
            let mut row = vec![Rat::zero(); cols.len()];
            for (mm, c) in prod.terms() {
                row[col_index[mm]] = c.clone();
            }
            rows.push(row);
        }
    }
    let rank = rank_exact(&mut rows);
    Ok(cols.len() as i64 - rank as i64)
}

/// Exact Gaussian elimination rank over the rationals.
fn rank_exact(rows: &mut [Vec<Rat>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for c in col..ncols {
            let v = &rows[rank][c] * &inv;
            rows[rank][c] = v;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..ncols {
                    let v = &rows[r][c] - &(&rows[rank][c] * &f);
                    rows[r][c] = v;
                }
            }
        }
        rank += 1;
    }
    rank
}
