//! Buchberger's algorithm with the coprimality criterion and full
//! autoreduction. Pair selection and tie-breaking are deterministic, so
//! identical inputs produce bit-identical reduced bases.

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use std::cmp::Ordering;

/// Full normal form of `p` with respect to `basis`: no term of the
/// result is divisible by any leading monomial of the basis.
pub fn reduce(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let leads: Vec<(&Monomial, &crate::rational::Rat)> = basis
        .iter()
        .filter_map(|g| g.leading_term(order))
        .collect();
    let mut remainder = Polynomial::zero(p.nvars());
    let mut work = p.clone();
    'outer: while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        for (i, (gm, gc)) in leads.iter().enumerate() {
            if gm.divides(&lm) {
                let q = gm.quotient(&lm);
                let factor = &lc / *gc;
                work = work.sub(&basis[i].mul_term(&factor, &q));
                continue 'outer;
            }
        }
        // leading term irreducible; move it to the remainder
        remainder = remainder.add(&Polynomial::term(lc.clone(), lm.clone()));
        work = work.sub(&Polynomial::term(lc, lm));
    }
    remainder
}

/// S-polynomial of f and g.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let l = fm.lcm(gm);
    let qf = fm.quotient(&l);
    let qg = gm.quotient(&l);
    f.mul_term(&fc.recip(), &qf)
        .sub(&g.mul_term(&gc.recip(), &qg))
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
/// Zero generators are dropped; an empty input yields an empty basis.
pub fn groebner_basis(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return basis;
    }
    // deterministic starting order
    basis.sort_by(|a, b| poly_key_cmp(a, b, order));

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while !pairs.is_empty() {
        // normal selection: smallest lcm degree first, then index order
        pairs.sort_by(|&(a, b), &(c, d)| {
            let l1 = lcm_degree(&basis[a], &basis[b], order);
            let l2 = lcm_degree(&basis[c], &basis[d], order);
            l1.cmp(&l2).then(a.cmp(&c)).then(b.cmp(&d))
        });
        let (i, j) = pairs.remove(0);
        let fi = &basis[i];
        let fj = &basis[j];
        let (mi, _) = fi.leading_term(order).unwrap();
        let (mj, _) = fj.leading_term(order).unwrap();
        if mi.is_coprime(mj) {
            continue; // Buchberger's first criterion
        }
        let s = s_polynomial(fi, fj, order);
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            let k = basis.len();
            for t in 0..k {
                pairs.push((t, k));
            }
            basis.push(r);
        }
    }
    autoreduce(basis, order)
}

/// Minimalizes and fully reduces a Gröbner basis; output is monic and
/// sorted by leading monomial descending under `order`.
fn autoreduce(mut basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lmi = basis[i].leading_monomial(order).unwrap().clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lmj = basis[j].leading_monomial(order).unwrap();
            if lmj.divides(&lmi) && (lmj != &lmi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    // tail-reduce every element against the rest
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| if j != i { Some(g.clone()) } else { None })
            .collect();
        let r = reduce(&minimal[i], &others, order).monic(order);
        if !r.is_zero() {
            reduced.push(r);
        }
    }
    reduced.sort_by(|a, b| {
        let la = a.leading_monomial(order).unwrap();
        let lb = b.leading_monomial(order).unwrap();
        order.cmp(lb, la)
    });
    reduced
}

fn lcm_degree(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> u32 {
    let (mf, _) = f.leading_term(order).unwrap();
    let (mg, _) = g.leading_term(order).unwrap();
    mf.lcm(mg).degree()
}

fn poly_key_cmp(a: &Polynomial, b: &Polynomial, order: &MonomialOrder) -> Ordering {
    match (a.leading_monomial(order), b.leading_monomial(order)) {
        (Some(ma), Some(mb)) => order.cmp(ma, mb).then_with(|| {
            // fall back to full term maps for a strict deterministic key
            let sa = a.to_string();
            let sb = b.to_string();
            sa.cmp(&sb)
        }),
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(i, 5)
    }

    #[test]
    fn principal_monomial_ideal() {
        let g = groebner_basis(&[x(0)], &MonomialOrder::GrevLex);
        assert_eq!(g, vec![x(0)]);
    }

    #[test]
    fn empty_input_yields_empty_basis() {
        assert!(groebner_basis(&[], &MonomialOrder::GrevLex).is_empty());
        assert!(groebner_basis(&[Polynomial::zero(5)], &MonomialOrder::GrevLex).is_empty());
    }

    #[test]
    fn already_reduced_basis_is_returned_as_is() {
        // <x3, x4, x0*x2 - x1^2> is already a reduced basis under grevlex
        // (hand oracle: every S-polynomial reduces to zero). Under grevlex
        // x1^2 beats x0*x2, so the monic representative is x1^2 - x0*x2.
        let conic = x(1).mul(&x(1)).sub(&x(0).mul(&x(2)));
        let gens = vec![x(3), x(4), conic.neg()];
        let g = groebner_basis(&gens, &MonomialOrder::GrevLex);
        assert_eq!(g.len(), 3);
        assert!(g.contains(&x(3)));
        assert!(g.contains(&x(4)));
        assert!(g.contains(&conic));
    }

    #[test]
    fn s_polynomials_of_basis_reduce_to_zero() {
        // twisted-cubic style generators in x0..x3
        let g1 = x(0).mul(&x(2)).sub(&x(1).mul(&x(1)));
        let g2 = x(1).mul(&x(3)).sub(&x(2).mul(&x(2)));
        let g3 = x(0).mul(&x(3)).sub(&x(1).mul(&x(2)));
        let order = MonomialOrder::GrevLex;
        let basis = groebner_basis(&[g1, g2, g3], &order);
        for i in 0..basis.len() {
            for j in 0..i {
                let s = s_polynomial(&basis[i], &basis[j], &order);
                assert!(reduce(&s, &basis, &order).is_zero());
            }
        }
    }

    #[test]
    fn reduction_is_full_normal_form() {
        let order = MonomialOrder::GrevLex;
        let basis = vec![x(0).sub(&x(1))];
        // x0^2 + x0 reduces to x1^2 + x1
        let p = x(0).mul(&x(0)).add(&x(0));
        let r = reduce(&p, &basis, &order);
        assert_eq!(r, x(1).mul(&x(1)).add(&x(1)));
    }

    #[test]
    fn deterministic_output() {
        let g1 = x(0).mul(&x(2)).sub(&x(1).mul(&x(1)));
        let g2 = x(1).mul(&x(3)).sub(&x(2).mul(&x(2)));
        let g3 = x(0).mul(&x(3)).sub(&x(1).mul(&x(2)));
        let order = MonomialOrder::GrevLex;
        let a = groebner_basis(&[g1.clone(), g2.clone(), g3.clone()], &order);
        let b = groebner_basis(&[g3, g1, g2], &order);
        assert_eq!(a, b);
    }

    #[test]
    fn weighted_leading_terms() {
        // <x0 + x1> with weights (1,0,0,0,0): x0 leads
        let order = MonomialOrder::Weighted(vec![int(1), int(0), int(0), int(0), int(0)]);
        let p = x(0).add(&x(1));
        assert_eq!(
            p.leading_monomial(&order).unwrap(),
            &super::super::monomial::Monomial::var(0, 5)
        );
    }
}
