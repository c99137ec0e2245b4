//! Polynomial ring contexts and monomials.
//!
//! A [`RingContext`] fixes the number of variables and their names; a
//! [`Monomial`] is an exponent vector of that length. The structural `Ord`
//! on `Monomial` is the graded reverse lexicographic (grevlex) order, and
//! [`monomials_of_degree`] enumerates a graded piece in grevlex-descending
//! order. That fixed enumeration is what makes coefficient vectors and
//! matrix layouts reproducible across runs.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The ambient polynomial ring: variable count and names.
#[derive(Debug, PartialEq, Eq)]
pub struct RingContext {
    vars: Vec<String>,
}

impl RingContext {
    /// Builds a ring with the given variable names. Names must be unique,
    /// start with a letter, continue with alphanumerics or `_`, and must not
    /// be `i` (reserved for the imaginary unit in the text grammar).
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing("need at least one variable".into()));
        }
        for v in &vars {
            let mut chars = v.chars();
            let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
            if !head_ok || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
            if v == "i" {
                return Err(Error::InvalidRing(
                    "`i` is reserved for the imaginary unit".into(),
                ));
            }
        }
        for (k, v) in vars.iter().enumerate() {
            if vars[..k].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(RingContext { vars }))
    }

    /// The standard ring in `n` variables `z1, ..., zn`.
    pub fn standard(n: usize) -> Arc<Self> {
        Self::new((1..=n).map(|j| format!("z{j}")).collect()).expect("valid names")
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, j: usize) -> &str {
        &self.vars[j]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// Checks that two ring handles denote the same ring (by value).
pub fn same_ring(a: &Arc<RingContext>, b: &Arc<RingContext>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch {
            left: a.vars().join(","),
            right: b.vars().join(","),
        })
    }
}

/// An exponent vector. Length always equals the ring's variable count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The single variable `x_j`.
    pub fn var(n: usize, j: usize) -> Self {
        let mut exps = vec![0; n];
        exps[j] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Multiply by the single variable `x_j`.
    pub fn mul_var(&self, j: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[j] += 1;
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        })
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

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Renders with the ring's variable names, e.g. `z1^2*z3`.
    pub fn render(&self, ring: &RingContext) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (j, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ring.var_name(j).to_string()),
                _ => parts.push(format!("{}^{}", ring.var_name(j), e)),
            }
        }
        parts.join("*")
    }
}

/// Grevlex comparison: higher total degree wins; on ties the monomial with
/// the smaller exponent at the last differing variable is larger.
pub fn cmp_grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.exps.iter().zip(&b.exps).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Lexicographic comparison with earlier variables dominating.
pub fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().zip(&b.exps) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    /// Structural order = grevlex, so ordered containers iterate graded pieces
    /// in a reproducible order.
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_grevlex(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}

/// All monomials of total degree `d` in `n` variables, grevlex-descending.
/// There are exactly C(n+d-1, d) of them.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill(&mut out, &mut current, 0, d);
    out.sort_by(|a, b| cmp_grevlex(b, a));
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, var: usize, remaining: u32) {
    if var == current.len() - 1 {
        current[var] = remaining;
        out.push(Monomial::new(current.clone()));
        current[var] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e;
        fill(out, current, var + 1, remaining - e);
        current[var] = 0;
    }
}

/// C(n+d-1, d) as u64; the dimension of the degree-`d` graded piece.
pub fn graded_dim(n: usize, d: u32) -> u64 {
    binomial(n as u64 + d as u64 - 1, d as u64)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc as u64
}
