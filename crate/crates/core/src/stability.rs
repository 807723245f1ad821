//! Hilbert–Mumford machinery: SL-normalization, weighted Hilbert
//! indices, balanced pointed-curve indices, Chow indices, instability
//! certificates, versal deformation weights, and the balance
//! inequality.

use crate::curves::SingularityKind;
use crate::error::{Error, Result};
use crate::poly::{hilbert_function, initial_ideal, weighted_basis_sum, Ideal};
use crate::rational::{int, rat, Rat};
use crate::unipoly::{interpolate_stable_polynomial, UniPoly};
use num_traits::{Signed, Zero};
use std::ops::RangeInclusive;

/// One-parameter subgroup given by five integral GL weights, with the
/// SL-normalized rational weights cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePS {
    gl_weights: [i64; 5],
    sl_weights: Vec<Rat>,
}

impl OnePS {
    pub fn new(gl_weights: [i64; 5]) -> Self {
        let sl_weights = sl_normalize(&gl_weights);
        OnePS {
            gl_weights,
            sl_weights,
        }
    }

    pub fn gl_weights(&self) -> &[i64; 5] {
        &self.gl_weights
    }

    pub fn sl_weights(&self) -> &[Rat] {
        &self.sl_weights
    }

    pub fn sum_gl(&self) -> i64 {
        self.gl_weights.iter().sum()
    }

    pub fn inverse(&self) -> OnePS {
        let mut w = self.gl_weights;
        for v in &mut w {
            *v = -*v;
        }
        OnePS::new(w)
    }
}

/// Weights minus their mean; the result sums to zero.
pub fn sl_normalize(gl_weights: &[i64; 5]) -> Vec<Rat> {
    let sum: i64 = gl_weights.iter().sum();
    let mean = rat(sum, 5);
    gl_weights.iter().map(|&w| int(w) - &mean).collect()
}

/// Ambient GIT setup: bicanonical pointed genus-two curves in P^4.
#[derive(Debug, Clone)]
pub struct AmbientConfig {
    pub degree: i64,
    pub n_plus_1: i64,
    pub hilbert_polynomial: UniPoly,
}

impl Default for AmbientConfig {
    fn default() -> Self {
        AmbientConfig {
            degree: 6,
            n_plus_1: 5,
            // P(m) = 6m - 1 = d*m - genus + 1 with genus 2
            hilbert_polynomial: UniPoly::from_ints(&[-1, 6]),
        }
    }
}

/// Chow index conventions exposed side by side: `Leading` is the m^2
/// coefficient of the Hilbert index polynomial, `Doubled` is twice
/// that. Regression anchors record which convention they certify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChowConvention {
    Leading,
    Doubled,
}

impl ChowConvention {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "leading" => Some(ChowConvention::Leading),
            "doubled" => Some(ChowConvention::Doubled),
            _ => None,
        }
    }
}

/// Hilbert–Mumford index of the m-th Hilbert point with respect to
/// `rho`, through the weight-minimal (standard-monomial) basis:
///
///   mu_m = (m * P(m) / 5) * sum(gl) - weighted_basis_sum(in(I, gl), gl, m)
///
/// Invariant under adding a constant to all GL weights.
pub fn hilbert_index(ideal: &Ideal, rho: &OnePS, m: i64, config: &AmbientConfig) -> Result<Rat> {
    let gl: Vec<Rat> = rho.gl_weights.iter().map(|&w| int(w)).collect();
    let init = initial_ideal(ideal, &gl);
    let count = hilbert_function(&init, m as u32);
    let expected = config.hilbert_polynomial.eval_int(m);
    if int(count) != expected {
        let expected_i64 = expected
            .to_integer()
            .try_into()
            .unwrap_or(i64::MAX);
        return Err(Error::HilbertMismatch {
            m,
            expected: expected_i64,
            found: count,
        });
    }
    let sum_gl = int(rho.sum_gl());
    let term = int(m) * int(count) / int(5) * sum_gl;
    Ok(term - weighted_basis_sum(&init, &gl, m as u32))
}

/// Degree-<=2 interpolant of the Hilbert index over `m_range`, with
/// stabilization check.
pub fn hilbert_index_polynomial(
    ideal: &Ideal,
    rho: &OnePS,
    m_range: RangeInclusive<i64>,
    config: &AmbientConfig,
) -> Result<UniPoly> {
    let mut samples = Vec::new();
    for m in m_range {
        samples.push((m, hilbert_index(ideal, rho, m, config)?));
    }
    interpolate_stable_polynomial(&samples, 2)
}

/// Marked-point index: the negative of the minimal SL weight over the
/// nonzero coordinates of the point.
pub fn point_index(coords: &[Rat], rho: &OnePS) -> Rat {
    let min = coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, _)| rho.sl_weights[i].clone())
        .min()
        .expect("point must be nonzero");
    -min
}

/// Upper bound of `point_index` over all points of P^4: the maximum of
/// the negatives of the SL weights.
pub fn point_index_bound(rho: &OnePS) -> Rat {
    let min = rho.sl_weights.iter().min().cloned().unwrap();
    -min
}

/// Index with the balanced linearization: Hilbert index plus
/// (2/3) m^2 times the marked-point index.
pub fn balanced_index(
    ideal: &Ideal,
    point: &[Rat],
    rho: &OnePS,
    m: i64,
    config: &AmbientConfig,
) -> Result<Rat> {
    let h = hilbert_index(ideal, rho, m, config)?;
    let p = point_index(point, rho);
    Ok(h + rat(2, 3) * int(m) * int(m) * p)
}

/// Chow index as the m^2 behavior of the Hilbert index polynomial.
pub fn chow_index(
    ideal: &Ideal,
    rho: &OnePS,
    convention: ChowConvention,
    m_range: RangeInclusive<i64>,
    config: &AmbientConfig,
) -> Result<Rat> {
    let p = hilbert_index_polynomial(ideal, rho, m_range, config)?;
    let leading = p.coeff(2);
    Ok(match convention {
        ChowConvention::Leading => leading,
        ChowConvention::Doubled => int(2) * leading,
    })
}

/// Chow index of the pointed curve: curve part plus 4/3 times the
/// point part.
pub fn chow_combined_index(
    ideal: &Ideal,
    point: &[Rat],
    rho: &OnePS,
    convention: ChowConvention,
    m_range: RangeInclusive<i64>,
    config: &AmbientConfig,
) -> Result<Rat> {
    let c = chow_index(ideal, rho, convention, m_range, config)?;
    Ok(c + rat(4, 3) * point_index(point, rho))
}

/// Arithmetic side of the instability lemmas: the upper bound
///
///   -e_lower + (2d/(N+1)) * sum(gl) + (4/3) * point term
///
/// where the point term is the override when given, else the
/// worst-case `point_index_bound` when `with_point`, else 0. A
/// negative return certifies instability.
pub fn instability_certificate(
    rho: &OnePS,
    e_lower: &Rat,
    with_point: bool,
    point_bound_override: Option<&Rat>,
    config: &AmbientConfig,
) -> Rat {
    let slope = rat(2 * config.degree, config.n_plus_1);
    let bound = -e_lower + slope * int(rho.sum_gl());
    let point_term = match (point_bound_override, with_point) {
        (Some(p), _) => p.clone(),
        (None, true) => point_index_bound(rho),
        (None, false) => Rat::zero(),
    };
    bound + rat(4, 3) * point_term
}

/// Weights of the 1-PS action on the local versal deformation space of
/// a quasi-homogeneous singularity, from the weights on the local
/// parameters x and y.
pub fn versal_weights(
    sing: SingularityKind,
    wt_x: &Rat,
    wt_y: &Rat,
) -> Result<Vec<Rat>> {
    match sing {
        // xy = a
        SingularityKind::Node => Ok(vec![wt_x + wt_y]),
        // y^2 = x^3 + a x + b, quasi-homogeneous when 2 wt_y = 3 wt_x
        SingularityKind::Cusp => {
            if int(2) * wt_y != int(3) * wt_x {
                return Err(Error::NotQuasiHomogeneous(
                    "cusp requires 2*wt_y = 3*wt_x".into(),
                ));
            }
            Ok(vec![int(2) * wt_y - wt_x, int(2) * wt_y])
        }
        // y^2 = x^4 + a x^2 + b x + c, quasi-homogeneous when wt_y = 2 wt_x
        SingularityKind::Tacnode => {
            if wt_y != &(int(2) * wt_x) {
                return Err(Error::NotQuasiHomogeneous(
                    "tacnode requires wt_y = 2*wt_x".into(),
                ));
            }
            Ok(vec![
                int(2) * wt_y - int(2) * wt_x,
                int(2) * wt_y - wt_x,
                int(2) * wt_y,
            ])
        }
        other => Err(Error::UnsupportedModel(format!(
            "versal weights are defined for node, cusp, tacnode; got {}",
            other.name()
        ))),
    }
}

/// Subcurve data for the balance inequality.
#[derive(Debug, Clone)]
pub struct SubcurveData {
    /// deg C1
    pub deg1: i64,
    /// genus of C1
    pub g1: i64,
    /// #(C1 ∩ closure of C − C1)
    pub w: i64,
    /// 1 when the marked point lies on C1
    pub delta_p: i64,
    /// span dimension, = deg1 + 1 − g1 for non-special embeddings
    pub n1_plus_1: i64,
}

impl SubcurveData {
    pub fn non_special(deg1: i64, g1: i64, w: i64, delta_p: i64) -> Self {
        SubcurveData {
            deg1,
            g1,
            w,
            delta_p,
            n1_plus_1: deg1 + 1 - g1,
        }
    }
}

/// Both sides of the headline balance inequality
/// |deg C1 − 2 deg_{C1} ω_C(p)| <= w/2 and of the intermediate bound
/// 2 deg C1 + w <= (12/5 + 4/15)(n1+1) − (4/3) delta_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceReport {
    pub bound_holds: bool,
    pub lhs: Rat,
    pub rhs: Rat,
    pub intermediate_holds: bool,
    pub intermediate_lhs: Rat,
    pub intermediate_rhs: Rat,
}

pub fn balance_check(data: &SubcurveData) -> BalanceReport {
    // deg_{C1} omega_C(p) = 2 g1 - 2 + w + delta_p
    let deg_omega = 2 * data.g1 - 2 + data.w + data.delta_p;
    let lhs = (int(data.deg1) - int(2 * deg_omega)).abs();
    let rhs = rat(data.w, 2);
    let intermediate_lhs = int(2 * data.deg1 + data.w);
    let intermediate_rhs =
        (rat(12, 5) + rat(4, 15)) * int(data.n1_plus_1) - rat(4, 3) * int(data.delta_p);
    BalanceReport {
        bound_holds: lhs <= rhs,
        lhs,
        rhs,
        intermediate_holds: intermediate_lhs <= intermediate_rhs,
        intermediate_lhs,
        intermediate_rhs,
    }
}

/// Summary of the index computations for one (curve, point, 1-PS)
/// triple.
#[derive(Debug, Clone)]
pub struct IndexReport {
    pub index_polynomial: UniPoly,
    pub chow_leading: Rat,
    pub chow_doubled: Rat,
    pub point_index: Option<Rat>,
    pub balanced_polynomial: Option<UniPoly>,
}

pub fn index_report(
    ideal: &Ideal,
    point: Option<&[Rat]>,
    rho: &OnePS,
    m_range: RangeInclusive<i64>,
    config: &AmbientConfig,
) -> Result<IndexReport> {
    let index_polynomial = hilbert_index_polynomial(ideal, rho, m_range, config)?;
    let chow_leading = index_polynomial.coeff(2);
    let chow_doubled = int(2) * &chow_leading;
    let point_index_val = point.map(|p| point_index(p, rho));
    let balanced_polynomial = point_index_val.as_ref().map(|p| {
        &index_polynomial + &UniPoly::monomial(rat(2, 3) * p, 2)
    });
    Ok(IndexReport {
        index_polynomial,
        chow_leading,
        chow_doubled,
        point_index: point_index_val,
        balanced_polynomial,
    })
}
