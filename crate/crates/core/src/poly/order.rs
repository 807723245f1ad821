use super::monomial::Monomial;
use crate::rational::{fmt_rat, Rat};
use std::cmp::Ordering;

/// Monomial orders registered in the engine.
///
/// The weighted order compares by `<w, exponents>` first (larger weight
/// means larger monomial) and breaks ties with grevlex. Restricted to a
/// fixed degree it is a strict total order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Weight vector, grevlex tiebreak.
    Weighted(Vec<Rat>),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::Weighted(w) => {
                let wa = a.weight(w);
                let wb = b.weight(w);
                wa.cmp(&wb).then_with(|| grevlex(a, b))
            }
        }
    }

    /// Canonical key for caching Gröbner bases per order.
    pub fn cache_key(&self) -> String {
        match self {
            MonomialOrder::GrevLex => "grevlex".to_string(),
            MonomialOrder::Lex => "lex".to_string(),
            MonomialOrder::Weighted(w) => {
                let parts: Vec<String> = w.iter().map(fmt_rat).collect();
                format!("weighted[{}]", parts.join(","))
            }
        }
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps().iter().zip(b.exps()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Graded reverse lexicographic: higher total degree wins; on equal
/// degree the monomial with the smaller exponent in the last differing
/// variable is larger.
fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.exps().iter().zip(b.exps()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // smaller exponent in the rightmost differing slot => larger
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}
