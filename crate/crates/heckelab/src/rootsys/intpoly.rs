//! Univariate polynomials with arbitrary-precision integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// Coefficients in ascending degree order; leading coefficient nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn constant(c: i64) -> Self {
        let mut p = IntPoly(vec![BigInt::from(c)]);
        p.trim();
        p
    }

    pub fn from_coeffs(c: Vec<BigInt>) -> Self {
        let mut p = IntPoly(c);
        p.trim();
        p
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// x^n - 1
    pub fn xn_minus_1(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = -BigInt::one();
        c[n] = BigInt::one();
        IntPoly(c)
    }

    /// Monic product of (X - roots[i]).
    pub fn from_roots(roots: &[BigInt]) -> Self {
        let mut p = IntPoly(vec![BigInt::one()]);
        for r in roots {
            let factor = IntPoly(vec![-r.clone(), BigInt::one()]);
            p = p.mul(&factor);
        }
        p
    }

    fn trim(&mut self) {
        while self.0.last().map_or(false, |c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut c = vec![BigInt::zero(); n];
        for (i, x) in self.0.iter().enumerate() {
            c[i] += x;
        }
        for (i, x) in o.0.iter().enumerate() {
            c[i] += x;
        }
        Self::from_coeffs(c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut c = vec![BigInt::zero(); n];
        for (i, x) in self.0.iter().enumerate() {
            c[i] += x;
        }
        for (i, x) in o.0.iter().enumerate() {
            c[i] -= x;
        }
        Self::from_coeffs(c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            for (j, y) in o.0.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        Self::from_coeffs(c)
    }

    /// Exact division by a monic (or unit leading) divisor; None if inexact.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut rem = self.0.clone();
        if rem.len() < d.0.len() {
            return if self.is_zero() { Some(Self::zero()) } else { None };
        }
        let dl = d.0.last().unwrap().clone();
        let mut quo = vec![BigInt::zero(); rem.len() - d.0.len() + 1];
        for k in (0..quo.len()).rev() {
            let top = rem[k + d.0.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            if (&top % &dl) != BigInt::zero() {
                return None;
            }
            let q = &top / &dl;
            quo[k] = q.clone();
            for (i, dc) in d.0.iter().enumerate() {
                rem[k + i] -= dc * &q;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quo))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficient of X^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// The d-th cyclotomic polynomial.
pub fn cyclotomic(d: usize) -> IntPoly {
    let mut p = IntPoly::xn_minus_1(d);
    for e in 1..d {
        if d % e == 0 {
            let phi = cyclotomic(e);
            p = p.exact_div(&phi).expect("cyclotomic division is exact");
        }
    }
    p
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (sign, mag) = if let Some(m) = s.strip_prefix('-') { ("-", m.to_string()) } else { ("+", s) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 => {
                    if mag == "1" {
                        write!(f, "X")?
                    } else {
                        write!(f, "{mag}*X")?
                    }
                }
                _ => {
                    if mag == "1" {
                        write!(f, "X^{k}")?
                    } else {
                        write!(f, "{mag}*X^{k}")?
                    }
                }
            }
        }
        Ok(())
    }
}
