//! The exact scalar field: fractions of integer Laurent polynomials in the
//! Hecke parameter `q` and spectral variables `z1..zk`.
//!
//! Variable 0 is always `q`; variables `1..nvars` are the spectral symbols
//! `z1, z2, ...`. The number of variables is fixed per computation context
//! so that all matrix entries of one computation live in a single field.
//!
//! [`RatFunc`] keeps a canonical form at all times: numerator and
//! denominator coprime up to a unit monomial, denominator monomial-free
//! (minimal exponent zero in every variable) with coprime integer
//! coefficients and positive leading coefficient in lex order. Equality of
//! rational functions is therefore structural equality.

mod gcd;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

/// Exact rational scalar.
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum CoeffError {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("denominator (or negative power) vanishes at the given point")]
    PoleAtPoint,
    #[error("assignment does not cover all {0} variables")]
    MissingAssignment(usize),
}

pub(crate) fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms map exponent vectors (length = `nvars`) to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<i32>, Rational>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Rational::one(), nvars)
    }

    pub fn int(n: i64, nvars: usize) -> Self {
        Self::constant(rat_int(n), nvars)
    }

    /// The monomial `c * x^exps`.
    pub fn monomial(exps: Vec<i32>, c: Rational, nvars: usize) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length mismatch");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// `x_i^k` for variable index `i` (0 = q, 1 = z1, ...).
    pub fn var_pow(i: usize, k: i32, nvars: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = k;
        Self::monomial(e, Rational::one(), nvars)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    fn insert_term(&mut self, exps: Vec<i32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn neg_inplace(&mut self) {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "mixed variable contexts");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "mixed variable contexts");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "mixed variable contexts");
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    /// Minimal exponent of each variable over all terms (0 for the zero poly).
    pub fn min_exps(&self) -> Vec<i32> {
        let mut m = vec![0; self.nvars];
        let mut first = true;
        for e in self.terms.keys() {
            if first {
                m.copy_from_slice(e);
                first = false;
            } else {
                for (mi, &ei) in m.iter_mut().zip(e) {
                    *mi = (*mi).min(ei);
                }
            }
        }
        m
    }

    pub fn shift(&self, by: &[i32]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let ne: Vec<i32> = e.iter().zip(by).map(|(a, b)| a + b).collect();
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Leading (lex-largest exponent) term.
    pub fn lead(&self) -> Option<(&Vec<i32>, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree span, used as a coarse size measure in tests.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Evaluate at an exact rational point. Fails on negative powers of 0.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, CoeffError> {
        if point.len() != self.nvars {
            return Err(CoeffError::MissingAssignment(self.nvars));
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if point[i].is_zero() && k < 0 {
                    return Err(CoeffError::PoleAtPoint);
                }
                let p = pow_rat(&point[i], k);
                t *= p;
            }
            acc += t;
        }
        Ok(acc)
    }
}

fn pow_rat(b: &Rational, k: i32) -> Rational {
    if k == 0 {
        return Rational::one();
    }
    let mut acc = Rational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= b;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Element of the fraction field of Laurent polynomials, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn nvars(&self) -> usize {
        self.num.nvars
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn zero(nvars: usize) -> Self {
        RatFunc { num: LaurentPoly::zero(nvars), den: LaurentPoly::one(nvars) }
    }

    pub fn one(nvars: usize) -> Self {
        RatFunc { num: LaurentPoly::one(nvars), den: LaurentPoly::one(nvars) }
    }

    pub fn int(n: i64, nvars: usize) -> Self {
        RatFunc { num: LaurentPoly::int(n, nvars), den: LaurentPoly::one(nvars) }
    }

    pub fn from_rational(c: Rational, nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::constant(c, nvars))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let nv = p.nvars;
        Self::new(p, LaurentPoly::one(nv))
    }

    /// `q^k` in the given context.
    pub fn q_pow(k: i32, nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::var_pow(0, k, nvars))
    }

    pub fn q(nvars: usize) -> Self {
        Self::q_pow(1, nvars)
    }

    /// Spectral variable `z_j` (1-based) in the given context.
    pub fn z(j: usize, nvars: usize) -> Self {
        assert!(j >= 1 && j < nvars, "z index out of range");
        Self::from_poly(LaurentPoly::var_pow(j, 1, nvars))
    }

    pub fn var_pow(i: usize, k: i32, nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::var_pow(i, k, nvars))
    }

    /// Build `num/den`, reducing to canonical form. Panics if `den = 0`
    /// (internal misuse); use [`RatFunc::try_div`] for checked division.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert_eq!(num.nvars, den.nvars, "mixed variable contexts");
        assert!(!den.is_zero(), "zero denominator");
        let mut rf = RatFunc { num, den };
        rf.normalize();
        rf
    }

    fn normalize(&mut self) {
        let nv = self.num.nvars;
        if self.num.is_zero() {
            self.den = LaurentPoly::one(nv);
            return;
        }
        // Monomial denominators are units: absorb into the numerator.
        if self.den.terms.len() == 1 {
            let (e, c) = self.den.terms.iter().next().unwrap();
            let shift: Vec<i32> = e.iter().map(|&x| -x).collect();
            let inv = c.recip();
            self.num = self.num.shift(&shift).scale(&inv);
            self.den = LaurentPoly::one(nv);
            return;
        }
        // Shift both to ordinary polynomials (min exponent 0), tracking the
        // net monomial which is a unit of the Laurent ring.
        let na = self.num.min_exps();
        let db = self.den.min_exps();
        let nord = self.num.shift(&na.iter().map(|&e| -e).collect::<Vec<_>>());
        let dord = self.den.shift(&db.iter().map(|&e| -e).collect::<Vec<_>>());
        let g = gcd::poly_gcd(&nord, &dord);
        let (mut n2, mut d2) = if g.is_constant() {
            (nord, dord)
        } else {
            (gcd::exact_div(&nord, &g), gcd::exact_div(&dord, &g))
        };
        // Scale so the denominator has coprime integer coefficients with
        // positive lex-leading coefficient.
        let c = den_normalizer(&d2);
        if !c.is_one() {
            let inv = c.recip();
            d2 = d2.scale(&inv);
            n2 = n2.scale(&inv);
        }
        // Reapply the net monomial shift to the numerator.
        let shift: Vec<i32> = na.iter().zip(&db).map(|(a, b)| a - b).collect();
        self.num = n2.shift(&shift);
        self.den = d2;
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num == LaurentPoly::one(self.num.nvars) && self.den == LaurentPoly::one(self.num.nvars)
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::new(self.num.add_ref(&other.num), self.den.clone());
        }
        let n = self.num.mul_ref(&other.den).add_ref(&other.num.mul_ref(&self.den));
        let d = self.den.mul_ref(&other.den);
        Self::new(n, d)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.neg_ref();
        }
        if self.den == other.den {
            return Self::new(self.num.sub_ref(&other.num), self.den.clone());
        }
        let n = self.num.mul_ref(&other.den).sub_ref(&other.num.mul_ref(&self.den));
        let d = self.den.mul_ref(&other.den);
        Self::new(n, d)
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars());
        }
        Self::new(self.num.mul_ref(&other.num), self.den.mul_ref(&other.den))
    }

    pub fn neg_ref(&self) -> Self {
        let mut n = self.num.clone();
        n.neg_inplace();
        RatFunc { num: n, den: self.den.clone() }
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, CoeffError> {
        if other.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::new(self.num.mul_ref(&other.den), self.den.mul_ref(&other.num)))
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        Self::one(self.nvars()).try_div(self)
    }

    pub fn pow(&self, k: i32) -> Self {
        if k == 0 {
            return Self::one(self.nvars());
        }
        let base = if k < 0 { self.inv().expect("inverting zero") } else { self.clone() };
        let mut acc = Self::one(self.nvars());
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul_ref(&base);
        }
        acc
    }

    /// Decide `a = b` in the fraction field. Canonical forms make this a
    /// structural check; kept as a named operation for clarity at call sites.
    pub fn canonical_equal(&self, other: &Self) -> bool {
        self == other
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, CoeffError> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(CoeffError::PoleAtPoint);
        }
        let n = self.num.eval(point)?;
        Ok(n / d)
    }

    /// Substitute each variable by a rational function (possibly in a
    /// different variable context). All assignments must share one context.
    pub fn subst(&self, assign: &[RatFunc]) -> Result<Self, CoeffError> {
        assert_eq!(assign.len(), self.nvars(), "assignment length mismatch");
        let out_nv = if assign.is_empty() { 0 } else { assign[0].nvars() };
        let sub_poly = |p: &LaurentPoly| -> Result<RatFunc, CoeffError> {
            let mut acc = RatFunc::zero(out_nv);
            for (e, c) in &p.terms {
                let mut t = RatFunc::from_rational(c.clone(), out_nv);
                for (i, &k) in e.iter().enumerate() {
                    if k != 0 {
                        if assign[i].is_zero() && k < 0 {
                            return Err(CoeffError::PoleAtPoint);
                        }
                        t = t.mul_ref(&assign[i].pow(k));
                    }
                }
                acc = acc.add_ref(&t);
            }
            Ok(acc)
        };
        let n = sub_poly(&self.num)?;
        let d = sub_poly(&self.den)?;
        if d.is_zero() {
            return Err(CoeffError::PoleAtPoint);
        }
        n.try_div(&d)
    }

    /// JSON encoding per the toolkit's wire schema: each side is a list of
    /// terms `[e_1, ..., e_k, "coef"]` with exact decimal rational strings.
    pub fn to_json(&self) -> serde_json::Value {
        let enc = |p: &LaurentPoly| -> serde_json::Value {
            let mut terms = Vec::new();
            for (e, c) in &p.terms {
                let mut row: Vec<serde_json::Value> =
                    e.iter().map(|&x| serde_json::Value::from(x)).collect();
                row.push(serde_json::Value::from(format_rational(c)));
                terms.push(serde_json::Value::from(row));
            }
            serde_json::Value::from(terms)
        };
        serde_json::json!({ "num": enc(&self.num), "den": enc(&self.den) })
    }
}

pub fn format_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Rational `c` such that `p / c` has coprime integer coefficients and a
/// positive lex-leading coefficient.
fn den_normalizer(p: &LaurentPoly) -> Rational {
    use num_integer::Integer;
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for c in p.terms.values() {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    if num_gcd.is_zero() {
        return Rational::one();
    }
    let mut c = Rational::new(num_gcd, den_lcm);
    if let Some((_, lead)) = p.lead() {
        if lead.is_negative() {
            c = -c;
        }
    }
    c
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = var_names(self.nvars);
        let mut first = true;
        // Print lex-largest terms first.
        for (e, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                if k == 1 {
                    mono.push_str(&names[i]);
                } else {
                    mono.push_str(&format!("{}^{}", names[i], k));
                }
            }
            let cs = format_rational(c);
            let (sign, mag) = if let Some(stripped) = cs.strip_prefix('-') {
                ("-", stripped.to_string())
            } else {
                ("+", cs)
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den == LaurentPoly::one(self.nvars()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

pub(crate) fn var_names(nvars: usize) -> Vec<String> {
    let mut v = vec!["q".to_string()];
    for j in 1..nvars {
        v.push(format!("z{j}"));
    }
    v.truncate(nvars.max(0));
    if nvars == 0 {
        v.clear();
    }
    v
}

macro_rules! impl_binop {
    ($trait:ident, $m:ident, $inner:ident) => {
        impl $trait for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                self.$inner(rhs)
            }
        }
        impl $trait for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$inner(&rhs)
            }
        }
        impl $trait<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$inner(rhs)
            }
        }
    };
}

impl_binop!(Add, add, add_ref);
impl_binop!(Sub, sub, sub_ref);
impl_binop!(Mul, mul, mul_ref);

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::try_div(self, rhs).expect("division by zero rational function")
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        RatFunc::try_div(&self, &rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_ref()
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(nv: usize) -> RatFunc {
        RatFunc::q(nv)
    }

    #[test]
    fn difference_of_squares() {
        // (q + q^-1)(q - q^-1) = q^2 - q^-2
        let a = q(1) + q(1).pow(-1);
        let b = q(1) - q(1).pow(-1);
        let expect = q(1).pow(2) - q(1).pow(-2);
        assert_eq!(a * b, expect);
    }

    #[test]
    fn common_factor_cancellation() {
        // (q z - z) / (q - 1) = z
        let nv = 2;
        let z = RatFunc::z(1, nv);
        let num = q(nv).mul_ref(&z) - z.clone();
        let den = q(nv) - RatFunc::one(nv);
        assert_eq!(num.try_div(&den).unwrap(), z);
    }

    #[test]
    fn additive_identity() {
        let x = (q(1) + RatFunc::int(3, 1)).try_div(&(q(1).pow(2) - RatFunc::int(7, 1))).unwrap();
        assert_eq!(x.add_ref(&RatFunc::zero(1)), x);
    }

    #[test]
    fn canonical_equal_examples() {
        // 1/(1 - q^-2) = q^2/(q^2 - 1)
        let one = RatFunc::one(1);
        let a = one.try_div(&(RatFunc::one(1) - q(1).pow(-2))).unwrap();
        let b = q(1).pow(2).try_div(&(q(1).pow(2) - RatFunc::one(1))).unwrap();
        assert!(a.canonical_equal(&b));
        assert!(!q(1).canonical_equal(&q(1).pow(-1)));
        // commutativity against an arbitrary element
        let e = (q(1) + RatFunc::int(2, 1)).try_div(&(q(1).pow(3) - RatFunc::int(5, 1))).unwrap();
        let c = q(1) + q(1).pow(-1);
        assert!(c.mul_ref(&e).canonical_equal(&e.mul_ref(&c)));
    }

    #[test]
    fn evaluate_examples() {
        // q + q^-1 at q = 2 -> 5/2
        let f = q(1) + q(1).pow(-1);
        let v = f.evaluate(&[rat_int(2)]).unwrap();
        assert_eq!(v, Rational::new(BigInt::from(5), BigInt::from(2)));
        // (q^2 - 1)/(q - 1) at q = 1 -> 2 after cancellation
        let g = (q(1).pow(2) - RatFunc::one(1)).try_div(&(q(1) - RatFunc::one(1))).unwrap();
        assert_eq!(g.evaluate(&[rat_int(1)]).unwrap(), rat_int(2));
        // z1/z2 at 3, 3 -> 1
        let h = RatFunc::z(1, 3).try_div(&RatFunc::z(2, 3)).unwrap();
        assert_eq!(h.evaluate(&[rat_int(9), rat_int(3), rat_int(3)]).unwrap(), rat_int(1));
    }

    #[test]
    fn pole_detection() {
        let f = RatFunc::one(1).try_div(&(q(1) - RatFunc::one(1))).unwrap();
        assert_eq!(f.evaluate(&[rat_int(1)]), Err(CoeffError::PoleAtPoint));
        let g = q(1).pow(-1);
        assert_eq!(g.evaluate(&[rat_int(0)]), Err(CoeffError::PoleAtPoint));
    }

    #[test]
    fn division_by_zero_flagged() {
        assert_eq!(q(1).try_div(&RatFunc::zero(1)), Err(CoeffError::DivisionByZero));
    }

    #[test]
    fn denominator_canonical_form() {
        // 1/(1 - q^-2): den must be monomial-free with positive lex lead.
        let a = RatFunc::one(1).try_div(&(RatFunc::one(1) - q(1).pow(-2))).unwrap();
        assert_eq!(a.den().min_exps(), vec![0]);
        let lead = a.den().lead().unwrap();
        assert!(lead.1 > &Rational::zero());
    }

    #[test]
    fn subst_specialization() {
        // f(q, z1) = (z1 - q)/(z1 + q); substitute z1 = q^2.
        let nv = 2;
        let z = RatFunc::z(1, nv);
        let f = (z.clone() - q(nv)).try_div(&(z + q(nv))).unwrap();
        let fq = f.subst(&[q(1), q(1).pow(2)]).unwrap();
        let expect = (q(1).pow(2) - q(1)).try_div(&(q(1).pow(2) + q(1))).unwrap();
        assert_eq!(fq, expect);
    }

    #[test]
    fn json_schema_shape() {
        let f = (q(1) + q(1).pow(-1)).try_div(&(q(1) - RatFunc::int(1, 1))).unwrap();
        let j = f.to_json();
        assert!(j.get("num").unwrap().is_array());
        assert!(j.get("den").unwrap().is_array());
        let t = &j["num"][0];
        assert!(t[0].is_i64());
        assert!(t[1].is_string());
    }
}
