//! Sparse multivariate polynomials over Q(i).
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`] (structural order =
//! grevlex), so iteration, rendering, and serialization are deterministic.
//! No zero coefficient is ever stored.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gauss::{GaussRat, Rat};
use crate::order::MonomialOrder;
use crate::ring::{monomials_of_degree, same_ring, Monomial, RingContext};

#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<RingContext>,
    terms: BTreeMap<Monomial, GaussRat>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<RingContext>) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<RingContext>) -> Self {
        Self::constant(ring, GaussRat::one())
    }

    pub fn constant(ring: &Arc<RingContext>, c: GaussRat) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.n()), c);
        }
        p
    }

    /// The variable `x_j` as a polynomial.
    pub fn variable(ring: &Arc<RingContext>, j: usize) -> Self {
        Self::term(ring, Monomial::var(ring.n(), j), GaussRat::one())
    }

    pub fn term(ring: &Arc<RingContext>, m: Monomial, c: GaussRat) -> Self {
        assert_eq!(m.nvars(), ring.n(), "monomial arity");
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I>(ring: &Arc<RingContext>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, GaussRat)>,
    {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussRat)> {
        self.terms.iter()
    }

    /// Terms in descending grevlex order (the canonical display order).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &GaussRat)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussRat {
        self.terms.get(m).cloned().unwrap_or_else(GaussRat::zero)
    }

    fn add_term(&mut self, m: Monomial, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial (degree is undefined).
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Ok(Some(d))` if every term has degree `d`, `Ok(None)` for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let Some(first) = degrees.next() else {
            return Ok(None);
        };
        for d in degrees {
            if d != first {
                return Err(Error::NotHomogeneous {
                    lo: d.min(first),
                    hi: d.max(first),
                });
            }
        }
        Ok(Some(first))
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// The order-maximal term. Errors on the zero polynomial.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(&Monomial, &GaussRat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<&Monomial> {
        Ok(self.leading_term(order)?.0)
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        same_ring(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        same_ring(&self.ring, &other.ring)?;
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussRat) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &GaussRat) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Self::one(&self.ring);
        for _ in 0..e {
            out = out.mul(self).expect("same ring");
        }
        out
    }

    /// Rescales so the given order's leading coefficient is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Result<Polynomial> {
        let (_, lc) = self.leading_term(order)?;
        let inv = lc.inv()?;
        Ok(self.scale(&inv))
    }

    /// Coordinates in the grevlex-descending monomial basis of degree `d`.
    /// The polynomial must be homogeneous of degree `d` (or zero).
    pub fn coefficient_vector(&self, d: u32) -> Result<Vec<GaussRat>> {
        match self.homogeneous_degree()? {
            None => {}
            Some(deg) if deg == d => {}
            Some(deg) => {
                return Err(Error::WrongDegree {
                    expected: d,
                    found: deg,
                })
            }
        }
        let basis = monomials_of_degree(self.ring.n(), d);
        Ok(basis.iter().map(|m| self.coeff(m)).collect())
    }

    /// Rebuilds a homogeneous polynomial from coordinates in the same basis
    /// that [`coefficient_vector`](Self::coefficient_vector) uses.
    pub fn from_coefficient_vector(
        ring: &Arc<RingContext>,
        d: u32,
        coords: &[GaussRat],
    ) -> Polynomial {
        let basis = monomials_of_degree(ring.n(), d);
        assert_eq!(basis.len(), coords.len(), "coordinate length");
        Self::from_terms(
            ring,
            basis.into_iter().zip(coords.iter().cloned()),
        )
    }

    /// Moves the polynomial into a ring with extra leading variables
    /// (`self`'s variables become the tail block).
    pub fn lift_to(&self, bigger: &Arc<RingContext>, offset: usize) -> Polynomial {
        let n = bigger.n();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u32; n];
            exps[offset..offset + m.nvars()].copy_from_slice(m.exps());
            (Monomial::new(exps), c.clone())
        });
        Polynomial::from_terms(bigger, terms)
    }

    /// Projects back from an extended ring, dropping the first `offset`
    /// variables. Returns `None` if any term uses a dropped variable.
    pub fn project_from(&self, smaller: &Arc<RingContext>, offset: usize) -> Option<Polynomial> {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            if m.exps()[..offset].iter().any(|&e| e > 0) {
                return None;
            }
            terms.push((Monomial::new(m.exps()[offset..].to_vec()), c.clone()));
        }
        Some(Polynomial::from_terms(smaller, terms))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    /// Canonical rendering: grevlex-descending terms joined by `+`/`-`, with
    /// coefficients in the text grammar (`parse` of the output reproduces
    /// the polynomial exactly).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms_desc().enumerate() {
            let lead = k == 0;
            // A real coefficient joins with its sign; a properly complex one
            // is parenthesized and joined with '+'.
            if c.is_real() {
                let mag = c.re.abs();
                if c.re.is_negative() {
                    write!(f, "{}", if lead { "-" } else { " - " })?;
                } else if !lead {
                    write!(f, " + ")?;
                }
                if m.is_one() {
                    write!(f, "{mag}")?;
                } else if mag.is_one() {
                    write!(f, "{}", m.render(&self.ring))?;
                } else {
                    write!(f, "{}*{}", mag, m.render(&self.ring))?;
                }
            } else if c.re.is_zero() {
                // purely imaginary: b*i*monomial
                let mag = c.im.abs();
                if c.im.is_negative() {
                    write!(f, "{}", if lead { "-" } else { " - " })?;
                } else if !lead {
                    write!(f, " + ")?;
                }
                let coeff = if mag.is_one() {
                    "i".to_string()
                } else {
                    format!("{mag}*i")
                };
                if m.is_one() {
                    write!(f, "{coeff}")?;
                } else {
                    write!(f, "{}*{}", coeff, m.render(&self.ring))?;
                }
            } else {
                if !lead {
                    write!(f, " + ")?;
                }
                if m.is_one() {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "({})*{}", c, m.render(&self.ring))?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Scale a polynomial by a real rational.
pub fn scale_real(p: &Polynomial, r: &Rat) -> Polynomial {
    p.scale(&GaussRat::from_rat(r.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring2() -> Arc<RingContext> {
        RingContext::new(vec!["x", "y"]).unwrap()
    }

    fn p(ring: &Arc<RingContext>, s: &str) -> Polynomial {
        parse_polynomial(s, ring).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring2();
        let lhs = p(&r, "x+y").mul(&p(&r, "x-y")).unwrap();
        assert_eq!(lhs, p(&r, "x^2 - y^2"));
    }

    #[test]
    fn additive_inverse_cancels() {
        let r = ring2();
        let q = p(&r, "3*x^2 - 1/2*y + i");
        assert!(q.add(&q.neg()).unwrap().is_zero());
    }

    #[test]
    fn term_by_term_product() {
        // (z2^2 + z2*z4) * z3 = z2^2*z3 + z2*z3*z4, each factor term times z3
        let r = RingContext::standard(4);
        let lhs = p(&r, "z2^2 + z2*z4").mul(&p(&r, "z3")).unwrap();
        assert_eq!(lhs, p(&r, "z2^2*z3 + z2*z3*z4"));
        assert_eq!(lhs.num_terms(), 2);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = ring2();
        let b = RingContext::new(vec!["u", "v"]).unwrap();
        let err = p(&a, "x").add(&p(&b, "u")).unwrap_err();
        assert!(matches!(err, Error::RingMismatch { .. }));
    }

    #[test]
    fn leading_terms() {
        let r = ring2();
        let q = p(&r, "x + y");
        let (m, c) = q.leading_term(&MonomialOrder::Lex).unwrap();
        assert_eq!(m.exps(), &[1, 0]);
        assert!(c.is_one());

        // single term: any order gives the same answer
        let r4 = RingContext::standard(4);
        let q = p(&r4, "z4^2");
        for order in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
            let (m, _) = q.leading_term(&order).unwrap();
            assert_eq!(m.exps(), &[0, 0, 0, 2]);
        }

        let r3 = RingContext::new(vec!["z1", "z2", "z3"]).unwrap();
        let q = p(&r3, "z1*z2^2 + z1^2*z3");
        let (m, _) = q.leading_term(&MonomialOrder::Grevlex).unwrap();
        assert_eq!(m.exps(), &[1, 2, 0]);
    }

    #[test]
    fn zero_polynomial_has_no_leading_term_or_degree() {
        let r = ring2();
        let z = Polynomial::zero(&r);
        assert!(matches!(
            z.leading_term(&MonomialOrder::Grevlex),
            Err(Error::ZeroPolynomial)
        ));
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn degree_of_product_adds() {
        let r = ring2();
        let a = p(&r, "x^2*y + x");
        let b = p(&r, "y^3 - x*y");
        assert_eq!(
            a.mul(&b).unwrap().degree(),
            Some(a.degree().unwrap() + b.degree().unwrap())
        );
    }

    #[test]
    fn coefficient_vectors() {
        let r4 = RingContext::standard(4);
        let q = p(&r4, "z2*z3 + z1*z4");
        let v = q.coefficient_vector(2).unwrap();
        assert_eq!(v.len(), 10);
        let ones = v.iter().filter(|c| c.is_one()).count();
        let zeros = v.iter().filter(|c| c.is_zero()).count();
        assert_eq!((ones, zeros), (2, 8));

        let z = Polynomial::zero(&r4);
        assert!(z.coefficient_vector(2).unwrap().iter().all(GaussRat::is_zero));

        // entries land at the slots of the grevlex-descending basis
        let r = ring2();
        let q = p(&r, "3*x^2 - 1/2*y^2");
        let v = q.coefficient_vector(2).unwrap();
        assert_eq!(v[0], GaussRat::from_int(3));
        assert!(v[1].is_zero());
        assert_eq!(v[2], GaussRat::new(crate::gauss::rat(-1, 2), Rat::zero()));
    }

    #[test]
    fn coefficient_vector_rejects_inhomogeneous() {
        let r = ring2();
        assert!(matches!(
            p(&r, "x^2 + y").coefficient_vector(2),
            Err(Error::NotHomogeneous { .. })
        ));
        assert!(matches!(
            p(&r, "x^2").coefficient_vector(3),
            Err(Error::WrongDegree { .. })
        ));
    }

    #[test]
    fn coefficient_vector_round_trip() {
        let r = ring2();
        let q = p(&r, "x^2 - 2*x*y + i*y^2");
        let v = q.coefficient_vector(2).unwrap();
        assert_eq!(Polynomial::from_coefficient_vector(&r, 2, &v), q);
    }

    #[test]
    fn rendering_is_canonical() {
        let r = ring2();
        assert_eq!(p(&r, "y + x").to_string(), "x + y");
        assert_eq!(p(&r, "0").to_string(), "0");
        assert_eq!(p(&r, "x*y - x^2").to_string(), "-x^2 + x*y");
        assert_eq!(p(&r, "(1/2 + i)*x + 2").to_string(), "(1/2+i)*x + 2");
        assert_eq!(p(&r, "i*y - x").to_string(), "-x + i*y");
    }
}
