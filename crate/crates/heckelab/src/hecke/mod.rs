//! The finite Hecke algebra of S_r and the extended affine Hecke algebra of
//! GL_r in Bernstein normal form.
//!
//! Elements are finitely supported sums `sum c_{w,lambda} T_w X^lambda` with
//! coefficients in the rational-function field. The quadratic relation is
//!
//! ```text
//! T_k^2 = 1 + (q^{-1} - q) T_k          (eigenvalues q^{-1} and -q)
//! ```
//!
//! and products are normal-ordered with the cross relation
//!
//! ```text
//! T_k X^lambda = X^{s_k lambda} T_k
//!              + (q^{-1} - q) (X^lambda - X^{s_k lambda}) / (1 - X^{a_k})
//! ```
//!
//! where `a_k = e_k - e_{k+1}`. The orientation of the correction term is
//! not a free choice here: it is the unique one (among the four sign and
//! denominator variants) for which the deformed permutation action on the
//! Schur-Weyl space commutes with the quantum group action; the bimodule
//! test suite exercises exactly that.

pub mod module;
pub mod present;

use crate::coeff::RatFunc;
use crate::perm::Perm;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum HeckeError {
    #[error("Hom space has dimension {0}, expected 1")]
    HomDimensionNotOne(usize),
    #[error("intertwiner cannot be normalized: unit-coefficient entry vanishes")]
    NormalizationFailed,
    #[error("module fails relation {0}")]
    RelationFailed(String),
    #[error("IM-presentation conversion did not terminate")]
    ConversionDiverged,
}

/// Ambient algebra data: rank of GL_r and the coefficient field context.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeckeAlgebra {
    pub r: usize,
    pub nvars: usize,
}

/// Normal-form element: finitely supported map (w, lambda) -> coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElem {
    pub r: usize,
    pub nvars: usize,
    pub terms: BTreeMap<(Perm, Vec<i32>), RatFunc>,
}

impl HeckeAlgebra {
    pub fn new(r: usize, nvars: usize) -> Self {
        assert!(r >= 1 && nvars >= 1);
        HeckeAlgebra { r, nvars }
    }

    pub fn zero(&self) -> HeckeElem {
        HeckeElem { r: self.r, nvars: self.nvars, terms: BTreeMap::new() }
    }

    pub fn one(&self) -> HeckeElem {
        self.scalar(RatFunc::one(self.nvars))
    }

    pub fn scalar(&self, c: RatFunc) -> HeckeElem {
        let mut e = self.zero();
        e.insert(Perm::identity(self.r), vec![0; self.r], c);
        e
    }

    /// Generator T_k, 1-based k in 1..r.
    pub fn t_gen(&self, k: usize) -> HeckeElem {
        let mut e = self.zero();
        e.insert(Perm::simple(k, self.r), vec![0; self.r], RatFunc::one(self.nvars));
        e
    }

    /// T_k^{-1} = T_k + (q - q^{-1}).
    pub fn t_gen_inv(&self, k: usize) -> HeckeElem {
        let mut e = self.t_gen(k);
        e.insert(Perm::identity(self.r), vec![0; self.r], self.q_pow(1).sub_ref(&self.q_pow(-1)));
        e
    }

    /// Basis element T_w.
    pub fn t_word(&self, w: &Perm) -> HeckeElem {
        let mut e = self.zero();
        e.insert(w.clone(), vec![0; self.r], RatFunc::one(self.nvars));
        e
    }

    /// Lattice monomial X^lambda.
    pub fn x_monomial(&self, lambda: &[i32]) -> HeckeElem {
        assert_eq!(lambda.len(), self.r);
        let mut e = self.zero();
        e.insert(Perm::identity(self.r), lambda.to_vec(), RatFunc::one(self.nvars));
        e
    }

    pub fn basis_elem(&self, w: &Perm, lambda: &[i32], c: RatFunc) -> HeckeElem {
        let mut e = self.zero();
        e.insert(w.clone(), lambda.to_vec(), c);
        e
    }

    pub fn q_pow(&self, k: i32) -> RatFunc {
        RatFunc::q_pow(k, self.nvars)
    }

    /// q^{-1} - q, the coefficient in the quadratic relation.
    pub fn qdiff(&self) -> RatFunc {
        self.q_pow(-1).sub_ref(&self.q_pow(1))
    }

    /// Left multiplication T_k . T_u in the finite Hecke algebra.
    fn tgen_times_tw(&self, k: usize, u: &Perm) -> Vec<(Perm, RatFunc)> {
        let sk = Perm::simple(k, self.r);
        let sku = sk.compose(u);
        if sku.length() > u.length() {
            vec![(sku, RatFunc::one(self.nvars))]
        } else {
            vec![(sku, RatFunc::one(self.nvars)), (u.clone(), self.qdiff())]
        }
    }

    /// The finite correction of the cross relation:
    /// (q^{-1} - q) (X^lambda - X^{s_k lambda}) / (1 - X^{a_k})
    /// expanded as an explicit sum of lattice monomials.
    fn cross_correction(&self, k: usize, lambda: &[i32]) -> Vec<(Vec<i32>, RatFunc)> {
        let d = lambda[k - 1] - lambda[k];
        let mut out = Vec::new();
        if d == 0 {
            return out;
        }
        if d > 0 {
            // (q - q^{-1}) sum_{t=1..d} X^{lambda - t a}
            let c = self.q_pow(1).sub_ref(&self.q_pow(-1));
            for t in 1..=d {
                let mut mu = lambda.to_vec();
                mu[k - 1] -= t;
                mu[k] += t;
                out.push((mu, c.clone()));
            }
        } else {
            // (q^{-1} - q) sum_{t=0..|d|-1} X^{lambda + t a}
            let c = self.qdiff();
            for t in 0..(-d) {
                let mut mu = lambda.to_vec();
                mu[k - 1] += t;
                mu[k] -= t;
                out.push((mu, c.clone()));
            }
        }
        out
    }

    /// Normal-order X^lambda T_w as sum c T_u X^mu.
    fn x_past_word(&self, lambda: &[i32], w: &Perm) -> HeckeElem {
        if w.is_identity() {
            return self.x_monomial(lambda);
        }
        // w = s_k w' with l(w') = l(w) - 1
        let word = w.reduced_word();
        let k = word[0];
        let sk = Perm::simple(k, self.r);
        let wp = sk.compose(w);
        debug_assert!(wp.length() + 1 == w.length());
        // X^lambda T_k = T_k X^{s lambda} + corr_k(lambda)
        let slam = sk.act_right(lambda);
        let mut out = self.zero();
        // T_k . (X^{s lambda} T_{w'})
        let inner = self.x_past_word(&slam, &wp);
        for ((u, mu), c) in &inner.terms {
            for (v, c2) in self.tgen_times_tw(k, u) {
                out.insert(v, mu.clone(), c.mul_ref(&c2));
            }
        }
        // corr terms times T_{w'}
        for (nu, c) in self.cross_correction(k, lambda) {
            let tail = self.x_past_word(&nu, &wp);
            for ((u, mu), c2) in &tail.terms {
                out.insert(u.clone(), mu.clone(), c.mul_ref(c2));
            }
        }
        out
    }

    /// Product in normal form.
    pub fn mul(&self, a: &HeckeElem, b: &HeckeElem) -> HeckeElem {
        let mut out = self.zero();
        for ((w1, l1), c1) in &a.terms {
            let w1word = w1.reduced_word();
            for ((w2, l2), c2) in &b.terms {
                let c = c1.mul_ref(c2);
                // T_{w1} X^{l1} T_{w2} X^{l2}
                let mid = self.x_past_word(l1, w2);
                for ((u, mu), cm) in &mid.terms {
                    // attach T_{w1} on the left, one generator at a time
                    let mut acc: Vec<(Perm, RatFunc)> = vec![(u.clone(), cm.mul_ref(&c))];
                    for &k in w1word.iter().rev() {
                        let mut next: Vec<(Perm, RatFunc)> = Vec::new();
                        for (v, cv) in acc {
                            for (v2, c3) in self.tgen_times_tw(k, &v) {
                                next.push((v2, cv.mul_ref(&c3)));
                            }
                        }
                        acc = next;
                    }
                    let mut lam: Vec<i32> = mu.clone();
                    for (x, y) in lam.iter_mut().zip(l2) {
                        *x += y;
                    }
                    for (v, cv) in acc {
                        out.insert(v, lam.clone(), cv);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, a: &HeckeElem, b: &HeckeElem) -> HeckeElem {
        let mut out = a.clone();
        for ((w, l), c) in &b.terms {
            out.insert(w.clone(), l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, a: &HeckeElem, b: &HeckeElem) -> HeckeElem {
        let mut out = a.clone();
        for ((w, l), c) in &b.terms {
            out.insert(w.clone(), l.clone(), c.neg_ref());
        }
        out
    }

    pub fn scale(&self, a: &HeckeElem, c: &RatFunc) -> HeckeElem {
        let mut out = self.zero();
        for ((w, l), c0) in &a.terms {
            out.insert(w.clone(), l.clone(), c0.mul_ref(c));
        }
        out
    }

    pub fn product(&self, factors: &[&HeckeElem]) -> HeckeElem {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Parabolic idempotent for the character chi on the subalgebra
    /// generated by {T_k : k in j_set} (1-based indices):
    ///   trivial: sum q^{-l(w)} T_w / sum q^{-2 l(w)}
    ///   sign:    sum (-q)^{l(w)} T_w / sum q^{2 l(w)}
    pub fn parabolic_idempotent(&self, j_set: &[usize], chi: HChar) -> HeckeElem {
        let elems = crate::perm::parabolic_elements(self.r, j_set);
        let mut num = self.zero();
        let mut den = RatFunc::zero(self.nvars);
        for w in &elems {
            let l = w.length() as i32;
            let (cw, dw) = match chi {
                HChar::Trivial => (self.q_pow(-l), self.q_pow(-2 * l)),
                HChar::Sign => {
                    let sign = if l % 2 == 0 { RatFunc::one(self.nvars) } else { RatFunc::int(-1, self.nvars) };
                    (sign.mul_ref(&self.q_pow(l)), self.q_pow(2 * l))
                }
            };
            num.insert(w.clone(), vec![0; self.r], cw);
            den = den.add_ref(&dw);
        }
        self.scale(&num, &den.inv().expect("denominator nonzero"))
    }
}

/// The two 1-dimensional characters of a finite Hecke algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HChar {
    Trivial,
    Sign,
}

impl HChar {
    /// Value on a generator T_k.
    pub fn value(&self, nvars: usize) -> RatFunc {
        match self {
            HChar::Trivial => RatFunc::q_pow(-1, nvars),
            HChar::Sign => RatFunc::q_pow(1, nvars).neg_ref(),
        }
    }

    /// Value on a basis element T_w.
    pub fn value_on(&self, w: &Perm, nvars: usize) -> RatFunc {
        self.value(nvars).pow(w.length() as i32)
    }
}

impl HeckeElem {
    pub fn insert(&mut self, w: Perm, lambda: Vec<i32>, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((w, lambda)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Perm, lambda: &[i32]) -> RatFunc {
        self.terms
            .get(&(w.clone(), lambda.to_vec()))
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(self.nvars))
    }

    /// Support restricted to the finite Hecke subalgebra (lambda = 0)?
    pub fn is_finite(&self) -> bool {
        self.terms.keys().all(|(_, l)| l.iter().all(|&x| x == 0))
    }
}

impl std::fmt::Display for HeckeElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((w, l), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if !w.is_identity() {
                write!(f, " T[{:?}]", w.0)?;
            }
            if l.iter().any(|&x| x != 0) {
                write!(f, " X{l:?}")?;
            }
        }
        Ok(())
    }
}

/// Deterministic random elements for the relation suites.
pub fn random_elem(alg: &HeckeAlgebra, rng: &mut impl rand::Rng, max_terms: usize, deg: i32) -> HeckeElem {
    let perms = crate::perm::all_perms(alg.r);
    let mut e = alg.zero();
    let nterms = rng.gen_range(1..=max_terms);
    for _ in 0..nterms {
        let w = perms[rng.gen_range(0..perms.len())].clone();
        let lambda: Vec<i32> = (0..alg.r).map(|_| rng.gen_range(-deg..=deg)).collect();
        let qexp = rng.gen_range(-2..=2);
        let scale = rng.gen_range(-3i64..=3);
        if scale == 0 {
            continue;
        }
        e.insert(w, lambda, alg.q_pow(qexp).mul_ref(&RatFunc::int(scale, alg.nvars)));
    }
    e
}

/// Relation suite on the abstract algebra: quadratic, braid, lattice
/// commutativity, the cross relation, and randomized associativity.
pub fn relation_suite(alg: &HeckeAlgebra, seed: u64, triples: usize) -> crate::report::CheckReport {
    use rand::SeedableRng;
    let mut rep = crate::report::CheckReport::new();
    let r = alg.r;
    for k in 1..r {
        let t = alg.t_gen(k);
        let lhs = alg.mul(&t, &t);
        let rhs = alg.add(&alg.one(), &alg.scale(&t, &alg.qdiff()));
        rep.add(format!("quadratic T{k}"), lhs == rhs, String::new());
    }
    for k in 1..r.saturating_sub(1) {
        let a = alg.t_gen(k);
        let b = alg.t_gen(k + 1);
        let lhs = alg.product(&[&a, &b, &a]);
        let rhs = alg.product(&[&b, &a, &b]);
        rep.add(format!("braid T{k} T{} T{k}", k + 1), lhs == rhs, String::new());
    }
    for i in 1..r {
        for j in i + 2..r {
            let lhs = alg.mul(&alg.t_gen(i), &alg.t_gen(j));
            let rhs = alg.mul(&alg.t_gen(j), &alg.t_gen(i));
            rep.add(format!("commuting T{i} T{j}"), lhs == rhs, String::new());
        }
    }
    // X commutativity and invertibility
    for i in 0..r {
        for j in 0..r {
            let mut ei = vec![0; r];
            ei[i] = 1;
            let mut ej = vec![0; r];
            ej[j] = -1;
            let lhs = alg.mul(&alg.x_monomial(&ei), &alg.x_monomial(&ej));
            let rhs = alg.mul(&alg.x_monomial(&ej), &alg.x_monomial(&ei));
            rep.add(format!("lattice commute X{i} X{j}^-1"), lhs == rhs, String::new());
        }
    }
    // cross relation against its defining expansion, on both generator signs
    for k in 1..r {
        for j in 0..r {
            for sgn in [1i32, -1] {
                let mut lam = vec![0; r];
                lam[j] = sgn;
                let t = alg.t_gen(k);
                let x = alg.x_monomial(&lam);
                let lhs = alg.mul(&t, &x);
                let sk = Perm::simple(k, r);
                let slam: Vec<i32> = sk.act_right(&lam);
                let mut rhs = alg.mul(&alg.x_monomial(&slam), &t);
                for (nu, c) in alg.cross_correction(k, &lam) {
                    rhs = alg.add(&rhs, &alg.scale(&alg.x_monomial(&nu), &c));
                }
                rep.add(format!("cross T{k} X^(e{j}*{sgn})"), lhs == rhs, String::new());
            }
        }
    }
    // T_k X^{e_k} T_k = X^{e_{k+1}} (derived identity pinning the orientation)
    for k in 1..r {
        let mut ek = vec![0; r];
        ek[k - 1] = 1;
        let mut ek1 = vec![0; r];
        ek1[k] = 1;
        let lhs = alg.product(&[&alg.t_gen(k), &alg.x_monomial(&ek), &alg.t_gen(k)]);
        rep.add(format!("T{k} X^e{k} T{k} = X^e{}", k + 1), lhs == alg.x_monomial(&ek1), String::new());
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut ok = true;
    for _ in 0..triples {
        let a = random_elem(alg, &mut rng, 3, 2);
        let b = random_elem(alg, &mut rng, 3, 2);
        let c = random_elem(alg, &mut rng, 3, 2);
        let lhs = alg.mul(&alg.mul(&a, &b), &c);
        let rhs = alg.mul(&a, &alg.mul(&b, &c));
        if lhs != rhs {
            ok = false;
            break;
        }
    }
    rep.add(format!("associativity on {triples} random triples"), ok, String::new());
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_and_quadratic() {
        let alg = HeckeAlgebra::new(2, 1);
        let t = alg.t_gen(1);
        assert_eq!(alg.mul(&alg.one(), &t), t);
        assert_eq!(alg.mul(&t, &alg.one()), t);
        // T^2 = 1 + (q^{-1} - q) T
        let t2 = alg.mul(&t, &t);
        let expect = alg.add(&alg.one(), &alg.scale(&t, &alg.qdiff()));
        assert_eq!(t2, expect);
        // inverse
        assert_eq!(alg.mul(&alg.t_gen_inv(1), &t), alg.one());
    }

    #[test]
    fn lattice_part_commutative() {
        let alg = HeckeAlgebra::new(3, 1);
        let a = alg.x_monomial(&[1, -2, 0]);
        let b = alg.x_monomial(&[0, 1, 3]);
        assert_eq!(alg.mul(&a, &b), alg.mul(&b, &a));
        assert_eq!(alg.mul(&a, &b), alg.x_monomial(&[1, -1, 3]));
    }

    #[test]
    fn relation_suite_r3() {
        let alg = HeckeAlgebra::new(3, 1);
        let rep = relation_suite(&alg, 12345, 25);
        for item in rep.failures() {
            eprintln!("FAIL {}", item.name);
        }
        assert!(rep.all_pass());
    }

    #[test]
    fn idempotents_rank_one_formulas() {
        let alg = HeckeAlgebra::new(2, 1);
        let nv = 1;
        // trivial: (q T + q^2)/(1 + q^2)
        let e1 = alg.parabolic_idempotent(&[1], HChar::Trivial);
        let denom = RatFunc::one(nv).add_ref(&RatFunc::q_pow(2, nv));
        let coeff_t = RatFunc::q_pow(1, nv).try_div(&denom).unwrap();
        let coeff_1 = RatFunc::q_pow(2, nv).try_div(&denom).unwrap();
        assert_eq!(e1.coeff(&Perm::simple(1, 2), &[0, 0]), coeff_t);
        assert_eq!(e1.coeff(&Perm::identity(2), &[0, 0]), coeff_1);
        // sign: (1 - q T)/(1 + q^2)
        let es = alg.parabolic_idempotent(&[1], HChar::Sign);
        assert_eq!(
            es.coeff(&Perm::simple(1, 2), &[0, 0]),
            RatFunc::q_pow(1, nv).neg_ref().try_div(&denom).unwrap()
        );
        assert_eq!(es.coeff(&Perm::identity(2), &[0, 0]), RatFunc::one(nv).try_div(&denom).unwrap());
        // e_triv + e_sign = 1 for a single reflection
        assert_eq!(alg.add(&e1, &es), alg.one());
        // empty parabolic: identity
        assert_eq!(alg.parabolic_idempotent(&[], HChar::Trivial), alg.one());
    }

    #[test]
    fn idempotents_are_idempotent_with_eigenvalue() {
        for (r, j_set) in [(2usize, vec![1usize]), (3, vec![1]), (3, vec![1, 2])] {
            let alg = HeckeAlgebra::new(r, 1);
            for chi in [HChar::Trivial, HChar::Sign] {
                let e = alg.parabolic_idempotent(&j_set, chi);
                assert_eq!(alg.mul(&e, &e), e, "e^2 = e for {j_set:?}");
                for &k in &j_set {
                    let t = alg.t_gen(k);
                    let te = alg.mul(&t, &e);
                    let et = alg.mul(&e, &t);
                    let ce = alg.scale(&e, &chi.value(1));
                    assert_eq!(te, ce, "left eigen");
                    assert_eq!(et, ce, "right eigen");
                }
            }
        }
    }
}
