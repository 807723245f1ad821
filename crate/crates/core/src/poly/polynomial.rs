use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::rational::{fmt_rat, int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Multivariate polynomial over exact rationals. Only nonzero
/// coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rat, nvars: usize) -> Self {
        Polynomial::from_terms(vec![(Monomial::one(nvars), c)], nvars)
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        Polynomial::from_terms(vec![(Monomial::var(i, nvars), Rat::one())], nvars)
    }

    pub fn term(c: Rat, m: Monomial) -> Self {
        let nvars = m.nvars();
        Polynomial::from_terms(vec![(m, c)], nvars)
    }

    pub fn from_terms(terms: Vec<(Monomial, Rat)>, nvars: usize) -> Self {
        let mut map: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            let entry = map.entry(m).or_insert_with(Rat::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Polynomial { nvars, terms: map }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Single-term test (monomial ideals are built from these).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.terms
            .keys()
            .max_by(|a, b| order.cmp(a, b))
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rat)> {
        self.leading_monomial(order).map(|m| (m, &self.terms[m]))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rat::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let entry = out.entry(m).or_insert_with(Rat::zero);
                *entry += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn mul_scalar(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, c: &Rat, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a * c))
                .collect(),
        }
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.mul_scalar(&inv)
            }
        }
    }

    /// Substitutes `subs[i]` for variable i. The substitutes live in a
    /// ring with `target_nvars` variables.
    pub fn substitute(&self, subs: &[Polynomial], target_nvars: usize) -> Polynomial {
        let mut acc = Polynomial::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(c.clone(), target_nvars);
            for (i, e) in m.exps().iter().enumerate() {
                for _ in 0..*e {
                    prod = prod.mul(&subs[i]);
                }
            }
            acc = acc.add(&prod);
        }
        acc
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.exps().iter().enumerate() {
                for _ in 0..*e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Re-indexes variables; `keep[j]` is the old index of new variable j.
    /// Caller guarantees the polynomial avoids all dropped variables.
    pub fn project(&self, keep: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.project(keep), c.clone()))
            .collect();
        Polynomial {
            nvars: keep.len(),
            terms,
        }
    }

    /// Pads the exponent vectors with zeros up to `nvars`.
    pub fn extend(&self, nvars: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.extend(nvars), c.clone()))
            .collect();
        Polynomial { nvars, terms }
    }

    /// Canonical text form: terms sorted grevlex descending, rationals
    /// as `p/q`.
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let order = MonomialOrder::GrevLex;
        let mut ms: Vec<&Monomial> = self.terms.keys().collect();
        ms.sort_by(|a, b| order.cmp(b, a));
        let mut first = true;
        for m in ms {
            let c = &self.terms[m];
            let mag = c.abs();
            let neg = c < &Rat::zero();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{}", fmt_rat(&mag))?;
            } else if mag == int(1) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{}", fmt_rat(&mag), m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(i, 5)
    }

    #[test]
    fn arithmetic_and_zero_trim() {
        let p = x(0).mul(&x(2)).sub(&x(1).mul(&x(1)));
        assert_eq!(p.num_terms(), 2);
        assert!(p.is_homogeneous());
        let q = p.sub(&p);
        assert!(q.is_zero());
    }

    #[test]
    fn display_canonical() {
        let p = x(0).mul(&x(2)).sub(&x(1).mul(&x(1)));
        assert_eq!(p.to_string(), "-x1^2 + x0*x2");
        let c = Polynomial::constant(crate::rational::rat(1, 2), 5);
        assert_eq!(c.to_string(), "1/2");
    }

    #[test]
    fn substitute_parametrization() {
        // x0*x2 - x1^2 vanishes under x0 = s^2, x1 = s t, x2 = t^2
        let p = x(0).mul(&x(2)).sub(&x(1).mul(&x(1)));
        let s = Polynomial::var(0, 2);
        let t = Polynomial::var(1, 2);
        let subs = vec![
            s.mul(&s),
            s.mul(&t),
            t.mul(&t),
            Polynomial::zero(2),
            Polynomial::zero(2),
        ];
        assert!(p.substitute(&subs, 2).is_zero());
    }

    #[test]
    fn eval_at_point() {
        let p = x(0).mul(&x(2)).sub(&x(1).mul(&x(1)));
        let pt = [int(1), int(2), int(4), int(0), int(0)];
        assert_eq!(p.eval(&pt), int(0));
        let pt2 = [int(1), int(1), int(4), int(0), int(0)];
        assert_eq!(p.eval(&pt2), int(3));
    }
}
