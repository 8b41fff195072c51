//! Multivariate polynomial gcd over the rationals via primitive
//! pseudo-remainder sequences with recursive content extraction.
//!
//! Inputs are [`LaurentPoly`] values with non-negative exponents (callers
//! shift Laurent units away first). Results are normalized to coprime
//! integer coefficients with positive lex-leading coefficient, so that the
//! canonical form of a fraction is unique.

use super::{LaurentPoly, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Normalize to coprime integer coefficients, positive lex-leading one.
fn normalize_unit(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return p.clone();
    }
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for c in p.terms.values() {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut c = Rational::new(num_gcd, den_lcm);
    if p.lead().unwrap().1.is_negative() {
        c = -c;
    }
    p.scale(&c.recip())
}

pub fn exact_div(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    assert!(!b.is_zero(), "exact division by zero");
    let nv = a.nvars;
    let mut rem = a.clone();
    let mut quo = LaurentPoly::zero(nv);
    let (eb, cb) = {
        let (e, c) = b.lead().unwrap();
        (e.clone(), c.clone())
    };
    while !rem.is_zero() {
        let (ea, ca) = {
            let (e, c) = rem.lead().unwrap();
            (e.clone(), c.clone())
        };
        let eq: Vec<i32> = ea.iter().zip(&eb).map(|(x, y)| x - y).collect();
        assert!(eq.iter().all(|&e| e >= 0), "exact division failed (monomial)");
        let cq = ca / &cb;
        let t = LaurentPoly::monomial(eq, cq, nv);
        quo = quo.add_ref(&t);
        rem = rem.sub_ref(&t.mul_ref(b));
    }
    quo
}

fn deg_in(p: &LaurentPoly, v: usize) -> i32 {
    p.terms.keys().map(|e| e[v]).max().unwrap_or(0)
}

/// Coefficient of `x_v^k` as a polynomial with `x_v`-exponent zeroed.
fn coeff_of(p: &LaurentPoly, v: usize, k: i32) -> LaurentPoly {
    let mut out = LaurentPoly::zero(p.nvars);
    for (e, c) in &p.terms {
        if e[v] == k {
            let mut ne = e.clone();
            ne[v] = 0;
            out.terms.insert(ne, c.clone());
        }
    }
    out
}

fn mul_var_pow(p: &LaurentPoly, v: usize, k: i32) -> LaurentPoly {
    let mut by = vec![0; p.nvars];
    by[v] = k;
    p.shift(&by)
}

/// Content with respect to the main variable `v`: gcd of the univariate
/// coefficients (polynomials in the remaining variables).
fn content_wrt(p: &LaurentPoly, v: usize) -> LaurentPoly {
    let mut g = LaurentPoly::zero(p.nvars);
    for k in 0..=deg_in(p, v) {
        let c = coeff_of(p, v, k);
        if c.is_zero() {
            continue;
        }
        g = poly_gcd(&g, &c);
        if g.is_constant() && !g.is_zero() {
            break;
        }
    }
    g
}

fn pseudo_rem(pp: &LaurentPoly, qq: &LaurentPoly, v: usize) -> LaurentPoly {
    let dq = deg_in(qq, v);
    let lq = coeff_of(qq, v, dq);
    let mut p = pp.clone();
    while !p.is_zero() {
        let dp = deg_in(&p, v);
        if dp < dq {
            break;
        }
        let lp = coeff_of(&p, v, dp);
        p = p.mul_ref(&lq).sub_ref(&mul_var_pow(&lp.mul_ref(qq), v, dp - dq));
    }
    p
}

/// Gcd of ordinary (non-negative exponent) multivariate polynomials over Q,
/// normalized to coprime integer coefficients and positive leading term.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let nv = a.nvars;
    if a.is_zero() {
        return normalize_unit(b);
    }
    if b.is_zero() {
        return normalize_unit(a);
    }
    // Main variable: highest index actually present in either polynomial.
    let v = (0..nv).rev().find(|&v| deg_in(a, v) > 0 || deg_in(b, v) > 0);
    let v = match v {
        None => return LaurentPoly::one(nv), // both constants
        Some(v) => v,
    };
    let ca = content_wrt(a, v);
    let cb = content_wrt(b, v);
    let cg = poly_gcd(&ca, &cb);
    let pa = exact_div(a, &ca);
    let pb = exact_div(b, &cb);
    let (mut p, mut q) = if deg_in(&pa, v) >= deg_in(&pb, v) { (pa, pb) } else { (pb, pa) };
    loop {
        let r = pseudo_rem(&p, &q, v);
        if r.is_zero() {
            break;
        }
        if deg_in(&r, v) == 0 {
            // Coprime in the main variable.
            q = LaurentPoly::one(nv);
            break;
        }
        let cr = content_wrt(&r, v);
        p = q;
        q = exact_div(&r, &cr);
    }
    let prim = if q.is_constant() { LaurentPoly::one(nv) } else { exact_div(&q, &content_wrt(&q, v)) };
    normalize_unit(&cg.mul_ref(&prim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat_int;

    fn poly(terms: &[(&[i32], i64)], nv: usize) -> LaurentPoly {
        let mut p = LaurentPoly::zero(nv);
        for (e, c) in terms {
            p = p.add_ref(&LaurentPoly::monomial(e.to_vec(), rat_int(*c), nv));
        }
        p
    }

    #[test]
    fn univariate_gcd() {
        // gcd(q^2 - 1, q^2 - 2q + 1) = q - 1
        let a = poly(&[(&[2], 1), (&[0], -1)], 1);
        let b = poly(&[(&[2], 1), (&[1], -2), (&[0], 1)], 1);
        let g = poly_gcd(&a, &b);
        assert_eq!(g, poly(&[(&[1], 1), (&[0], -1)], 1));
    }

    #[test]
    fn multivariate_gcd_with_content() {
        // gcd((q+1)(q z - 1), (q+1)(z + 2)) = q + 1  in vars (q, z)
        let f1 = poly(&[(&[1, 0], 1), (&[0, 0], 1)], 2);
        let f2 = poly(&[(&[1, 1], 1), (&[0, 0], -1)], 2);
        let f3 = poly(&[(&[0, 1], 1), (&[0, 0], 2)], 2);
        let a = f1.mul_ref(&f2);
        let b = f1.mul_ref(&f3);
        assert_eq!(poly_gcd(&a, &b), f1);
    }

    #[test]
    fn coprime_returns_one() {
        let a = poly(&[(&[1, 0], 1), (&[0, 0], 1)], 2); // q + 1
        let b = poly(&[(&[0, 1], 1), (&[0, 0], 1)], 2); // z + 1
        assert_eq!(poly_gcd(&a, &b), LaurentPoly::one(2));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = poly(&[(&[2, 1], 3), (&[1, 0], -1), (&[0, 2], 5)], 2);
        let b = poly(&[(&[1, 1], 2), (&[0, 0], 7)], 2);
        let prod = a.mul_ref(&b);
        assert_eq!(exact_div(&prod, &b), a);
    }
}
