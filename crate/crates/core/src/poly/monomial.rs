use crate::rational::Rat;
use num_traits::Zero;
use std::fmt;

/// Exponent vector. The ambient ring has 5 variables x0..x4; helper
/// variables (elimination parameters, the intersection tag) extend the
/// vector past index 4.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self; caller guarantees divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// <w, exponents> as an exact rational.
    pub fn weight(&self, w: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (e, wi) in self.exps.iter().zip(w) {
            if *e != 0 {
                acc += wi * Rat::from_integer((*e).into());
            }
        }
        acc
    }

    /// True if the monomial involves none of the listed variables.
    pub fn avoids(&self, vars: &[usize]) -> bool {
        vars.iter().all(|&v| self.exp(v) == 0)
    }

    /// Restricts to the given variable indices (used after elimination).
    pub fn project(&self, keep: &[usize]) -> Monomial {
        Monomial {
            exps: keep.iter().map(|&v| self.exp(v)).collect(),
        }
    }

    /// Extends the exponent vector with zeros up to `nvars`.
    pub fn extend(&self, nvars: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(nvars.max(exps.len()), 0);
        Monomial { exps }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.exps.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `d` in `nvars` variables, in a fixed
/// deterministic (lexicographic exponent) order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, idx: usize, remaining: u32) {
    if idx + 1 == current.len() {
        current[idx] = remaining;
        out.push(Monomial::new(current.clone()));
        current[idx] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[idx] = e;
        fill(out, current, idx + 1, remaining - e);
        current[idx] = 0;
    }
}
