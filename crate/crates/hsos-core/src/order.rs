//! Monomial orders: lex, grevlex, and a block elimination order.

use std::cmp::Ordering;
use std::fmt;

use crate::ring::{cmp_grevlex, cmp_lex, Monomial};

/// A multiplicative total order on monomials with 1 minimal.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    /// Elimination order: the first `head` variables dominate. Both blocks
    /// are compared by grevlex, head block first, so any monomial involving
    /// a head variable beats every monomial in the tail variables alone.
    Block { head: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::Grevlex => cmp_grevlex(a, b),
            MonomialOrder::Block { head } => {
                let (ha, ta) = split(a, *head);
                let (hb, tb) = split(b, *head);
                cmp_grevlex(&ha, &hb).then_with(|| cmp_grevlex(&ta, &tb))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Block { .. } => "block",
        }
    }
}

fn split(m: &Monomial, head: usize) -> (Monomial, Monomial) {
    let exps = m.exps();
    (
        Monomial::new(exps[..head].to_vec()),
        Monomial::new(exps[head..].to_vec()),
    )
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn lex_prefers_early_variables() {
        let order = MonomialOrder::Lex;
        assert_eq!(order.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(order.cmp(&m(&[1, 0]), &m(&[0, 7])), Ordering::Greater);
    }

    #[test]
    fn grevlex_is_graded() {
        let order = MonomialOrder::Grevlex;
        assert_eq!(order.cmp(&m(&[1, 1]), &m(&[1, 0])), Ordering::Greater);
        // z1*z2^2 beats z1^2*z3
        assert_eq!(
            order.cmp(&m(&[1, 2, 0]), &m(&[2, 0, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn block_order_eliminates_head_variables() {
        // one head variable t, two tail variables
        let order = MonomialOrder::Block { head: 1 };
        // t beats any tail-only monomial
        assert_eq!(order.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        // within tail-only, grevlex applies
        assert_eq!(order.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn orders_are_multiplicative_and_one_minimal() {
        let orders = [
            MonomialOrder::Lex,
            MonomialOrder::Grevlex,
            MonomialOrder::Block { head: 1 },
        ];
        let samples = [
            m(&[0, 0, 0]),
            m(&[1, 0, 0]),
            m(&[0, 1, 0]),
            m(&[0, 0, 3]),
            m(&[2, 1, 0]),
            m(&[1, 1, 1]),
            m(&[0, 2, 2]),
        ];
        for order in orders {
            let one = m(&[0, 0, 0]);
            for a in &samples {
                if *a != one {
                    assert_eq!(order.cmp(a, &one), Ordering::Greater);
                }
                for b in &samples {
                    let raw = order.cmp(a, b);
                    for w in &samples {
                        assert_eq!(order.cmp(&a.mul(w), &b.mul(w)), raw);
                    }
                }
            }
        }
    }
}
