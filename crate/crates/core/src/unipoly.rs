//! Dense univariate polynomials in the Hilbert parameter `m`, with
//! exact rational coefficients.

use crate::error::{Error, Result};
use crate::rational::{fmt_rat, int, Rat};
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in a formal parameter, coefficients indexed by power,
/// lowest degree first. Trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial c·m^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    /// Convenience constructor from small integers, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        UniPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of m^k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, m: i64) -> Rat {
        self.eval(&int(m))
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPoly::new(out)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign_neg = c < &Rat::zero();
            if first {
                if sign_neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign_neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let one = mag == int(1);
            match k {
                0 => write!(f, "{}", fmt_rat(&mag))?,
                1 => {
                    if one {
                        write!(f, "m")?
                    } else {
                        write!(f, "{}*m", fmt_rat(&mag))?
                    }
                }
                _ => {
                    if one {
                        write!(f, "m^{k}")?
                    } else {
                        write!(f, "{}*m^{k}", fmt_rat(&mag))?
                    }
                }
            }
        }
        Ok(())
    }
}

/// Interpolates the polynomial of degree <= `degree_bound` through the
/// samples and checks that it reproduces every supplied sample.
///
/// Requires at least `degree_bound + 3` samples at consecutive integer
/// arguments; the extra points beyond the interpolation window act as a
/// stabilization check and trip `NotStabilized` on any deviation.
pub fn interpolate_stable_polynomial(
    samples: &[(i64, Rat)],
    degree_bound: usize,
) -> Result<UniPoly> {
    let needed = degree_bound + 3;
    if samples.len() < needed {
        return Err(Error::NotEnoughSamples {
            needed,
            got: samples.len(),
        });
    }
    for (i, w) in samples.windows(2).enumerate() {
        if w[1].0 != w[0].0 + 1 {
            return Err(Error::NonConsecutiveSamples { index: i + 1 });
        }
    }
    let p = lagrange(&samples[..=degree_bound]);
    for (m, v) in samples {
        let got = p.eval_int(*m);
        if &got != v {
            return Err(Error::NotStabilized {
                m: *m,
                expected: crate::rational::fmt_rat(v),
                got: crate::rational::fmt_rat(&got),
            });
        }
    }
    Ok(p)
}

/// Lagrange interpolation through the given points (exact).
pub fn lagrange(points: &[(i64, Rat)]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial for node xi
        let mut basis = UniPoly::constant(int(1));
        let mut denom = Rat::from_integer(1.into());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &UniPoly::new(vec![int(-*xj), int(1)]);
            denom *= int(*xi) - int(*xj);
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn eval_is_exact() {
        // 2m^2 - 7m + 5
        let p = UniPoly::from_ints(&[5, -7, 2]);
        assert_eq!(p.eval_int(3), int(2));
        assert_eq!(p.eval_int(5), int(20));
        assert_eq!(p.eval(&rat(1, 2)), int(2));
    }

    #[test]
    fn interpolate_linear() {
        let samples: Vec<_> = (2..=6).map(|m| (m, int(6 * m - 1))).collect();
        let p = interpolate_stable_polynomial(&samples, 1).unwrap();
        assert_eq!(p, UniPoly::from_ints(&[-1, 6]));
    }

    #[test]
    fn interpolate_quadratic() {
        let samples: Vec<_> = (3..=8).map(|m| (m, int(2 * m * m - 7 * m + 5))).collect();
        let p = interpolate_stable_polynomial(&samples, 2).unwrap();
        assert_eq!(p, UniPoly::from_ints(&[5, -7, 2]));
    }

    #[test]
    fn interpolate_constant_zero() {
        let samples: Vec<_> = (1..=4).map(|m| (m, int(0))).collect();
        let p = interpolate_stable_polynomial(&samples, 0).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn interpolate_detects_non_polynomial_tail() {
        let mut samples: Vec<_> = (2..=6).map(|m| (m, int(6 * m - 1))).collect();
        samples.last_mut().unwrap().1 = int(36);
        match interpolate_stable_polynomial(&samples, 1) {
            Err(Error::NotStabilized { m: 6, .. }) => {}
            other => panic!("expected NotStabilized, got {other:?}"),
        }
    }

    #[test]
    fn interpolate_requires_window() {
        let samples: Vec<_> = (2..=4).map(|m| (m, int(m))).collect();
        assert!(matches!(
            interpolate_stable_polynomial(&samples, 2),
            Err(Error::NotEnoughSamples { .. })
        ));
        let gap = vec![(2, int(1)), (4, int(2)), (5, int(3)), (6, int(4))];
        assert!(matches!(
            interpolate_stable_polynomial(&gap, 1),
            Err(Error::NonConsecutiveSamples { .. })
        ));
    }

    #[test]
    fn display_form() {
        let p = UniPoly::from_ints(&[5, -7, 2]);
        assert_eq!(p.to_string(), "2*m^2 - 7*m + 5");
        assert_eq!(UniPoly::zero().to_string(), "0");
        let q = UniPoly::new(vec![rat(-1, 2), int(0), int(1)]);
        assert_eq!(q.to_string(), "m^2 - 1/2");
    }
}
