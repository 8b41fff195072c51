//! The quantum affine algebra U_q(sl-hat(m)) as operator data: Chevalley
//! generators E_i, F_i, K_i^{+-1} indexed by Z/m, the Fock action on C[Z]
//! and its tensor powers via the coproduct
//!
//! ```text
//! E_i -> E_i (x) K_i^{-1} + 1 (x) E_i
//! F_i -> F_i (x) 1 + K_i (x) F_i
//! K_i -> K_i (x) K_i
//! ```
//!
//! and the shifted evaluation modules V(z) = C[Z] / span{ v_i - z v_{i+m} }.
//! All delta-subscripts are computed as residues in {0, ..., m-1}.

use crate::coeff::RatFunc;
use crate::linalg::Mat;
use crate::report::CheckReport;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum QaffError {
    #[error("tensor factors have mixed m: {0} vs {1}")]
    MixedM(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QGenKind {
    E,
    F,
    KPlus,
    KMinus,
}

/// A Chevalley generator E_i, F_i or K_i^{+-1} with residue index i mod m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QGenerator {
    pub kind: QGenKind,
    pub index: usize,
}

impl QGenerator {
    pub fn new(kind: QGenKind, index: usize, m: usize) -> Self {
        QGenerator { kind, index: index % m }
    }

    pub fn all(m: usize) -> Vec<QGenerator> {
        let mut v = Vec::new();
        for i in 0..m {
            for kind in [QGenKind::E, QGenKind::F, QGenKind::KPlus, QGenKind::KMinus] {
                v.push(QGenerator { kind, index: i });
            }
        }
        v
    }
}

/// Finitely supported vector in (C[Z])^{(x) r} over the scalar field,
/// indexed by integer vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockVector {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<i64>, RatFunc>,
}

impl FockVector {
    pub fn zero(nvars: usize) -> Self {
        FockVector { nvars, terms: BTreeMap::new() }
    }

    pub fn basis(idx: Vec<i64>, nvars: usize) -> Self {
        let mut v = Self::zero(nvars);
        v.terms.insert(idx, RatFunc::one(nvars));
        v
    }

    pub fn insert(&mut self, idx: Vec<i64>, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add_ref(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.insert(k.clone(), c.clone());
        }
        out
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.insert(k.clone(), c.neg_ref());
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k, c0) in &self.terms {
            out.insert(k.clone(), c0.mul_ref(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

pub(crate) fn residue(j: i64, m: usize) -> usize {
    j.rem_euclid(m as i64) as usize
}

/// K_i-weight of the basis vector v_j: exponent delta_{i,j} - delta_{i+1,j}
/// with residue subscripts.
fn k_exponent(i: usize, j: i64, m: usize) -> i32 {
    let jr = residue(j, m);
    let d1 = i32::from(jr == i % m);
    let d2 = i32::from(jr == (i + 1) % m);
    d1 - d2
}

/// Action of a generator on the r-fold Fock space via the iterated
/// coproduct; linear extension over a finitely supported vector.
pub fn fock_action(g: QGenerator, v: &FockVector, m: usize, r: usize) -> FockVector {
    let nv = v.nvars;
    let mut out = FockVector::zero(nv);
    for (idx, c) in &v.terms {
        assert_eq!(idx.len(), r);
        match g.kind {
            QGenKind::KPlus | QGenKind::KMinus => {
                let sgn = if g.kind == QGenKind::KPlus { 1 } else { -1 };
                let e: i32 = idx.iter().map(|&j| k_exponent(g.index, j, m)).sum();
                out.insert(idx.clone(), c.mul_ref(&RatFunc::q_pow(sgn * e, nv)));
            }
            QGenKind::E => {
                // E_i v_j = delta_{i+1, j} v_{j-1}; slot t carries K_i^{-1}
                // on the slots after it.
                for t in 0..r {
                    if residue(idx[t], m) == (g.index + 1) % m {
                        let tail: i32 = (t + 1..r).map(|u| -k_exponent(g.index, idx[u], m)).sum();
                        let mut nidx = idx.clone();
                        nidx[t] -= 1;
                        out.insert(nidx, c.mul_ref(&RatFunc::q_pow(tail, nv)));
                    }
                }
            }
            QGenKind::F => {
                // F_i v_j = delta_{i, j} v_{j+1}; slot t carries K_i on the
                // slots before it.
                for t in 0..r {
                    if residue(idx[t], m) == g.index % m {
                        let head: i32 = (0..t).map(|u| k_exponent(g.index, idx[u], m)).sum();
                        let mut nidx = idx.clone();
                        nidx[t] += 1;
                        out.insert(nidx, c.mul_ref(&RatFunc::q_pow(head, nv)));
                    }
                }
            }
        }
    }
    out
}

/// A finite-dimensional U_q(sl-hat(m))-module given by generator matrices.
#[derive(Debug, Clone)]
pub struct QModule {
    pub m: usize,
    pub nvars: usize,
    pub dim: usize,
    pub e_mats: Vec<Mat>,
    pub f_mats: Vec<Mat>,
    pub k_mats: Vec<Mat>,
    pub k_inv_mats: Vec<Mat>,
    /// spectral parameters of the evaluation factors, in order
    pub spectra: Vec<RatFunc>,
    pub labels: Vec<String>,
}

impl QModule {
    pub fn gen_mat(&self, g: QGenerator) -> &Mat {
        match g.kind {
            QGenKind::E => &self.e_mats[g.index],
            QGenKind::F => &self.f_mats[g.index],
            QGenKind::KPlus => &self.k_mats[g.index],
            QGenKind::KMinus => &self.k_inv_mats[g.index],
        }
    }
}

/// The m-dimensional shifted evaluation module with parameter z: the
/// quotient of C[Z] by v_i = z v_{i+m}, basis u_0..u_{m-1}.
pub fn eval_module(m: usize, z: &RatFunc) -> QModule {
    let nv = z.nvars();
    let mut e_mats = Vec::new();
    let mut f_mats = Vec::new();
    let mut k_mats = Vec::new();
    let mut k_inv_mats = Vec::new();
    // reduce v_j (j in Z) to z^{-k} u_res with j = res + k m
    let reduce = |j: i64| -> (usize, i32) {
        let res = residue(j, m);
        let k = (j - res as i64) / m as i64;
        (res, -(k as i32))
    };
    for i in 0..m {
        let mut e = Mat::zero(m, m, nv);
        let mut f = Mat::zero(m, m, nv);
        let mut k = Mat::zero(m, m, nv);
        let mut kinv = Mat::zero(m, m, nv);
        for j in 0..m {
            // E_i u_j
            if j == (i + 1) % m {
                let (res, zp) = reduce(j as i64 - 1);
                e[(res, j)] = z.pow(zp);
            }
            // F_i u_j
            if j == i % m {
                let (res, zp) = reduce(j as i64 + 1);
                f[(res, j)] = z.pow(zp);
            }
            let ke = k_exponent(i, j as i64, m);
            k[(j, j)] = RatFunc::q_pow(ke, nv);
            kinv[(j, j)] = RatFunc::q_pow(-ke, nv);
        }
        e_mats.push(e);
        f_mats.push(f);
        k_mats.push(k);
        k_inv_mats.push(kinv);
    }
    QModule {
        m,
        nvars: nv,
        dim: m,
        e_mats,
        f_mats,
        k_mats,
        k_inv_mats,
        spectra: vec![z.clone()],
        labels: (0..m).map(|j| format!("u{j}")).collect(),
    }
}

/// Tensor product along the coproduct; the result is independent of
/// bracketing by coassociativity (see the tests).
pub fn tensor(mods: &[&QModule]) -> Result<QModule, QaffError> {
    assert!(!mods.is_empty());
    let m = mods[0].m;
    let nv = mods[0].nvars;
    for md in mods {
        if md.m != m {
            return Err(QaffError::MixedM(m, md.m));
        }
    }
    let f = mods.len();
    let dim: usize = mods.iter().map(|md| md.dim).product();
    let mut e_mats = Vec::new();
    let mut f_mats = Vec::new();
    let mut k_mats = Vec::new();
    let mut k_inv_mats = Vec::new();
    for i in 0..m {
        // E_i: sum_t 1^{(<t)} (x) E_i^{(t)} (x) K_i^{-1 (>t)}
        let mut e = Mat::zero(dim, dim, nv);
        let mut ff = Mat::zero(dim, dim, nv);
        for t in 0..f {
            let mut term_e = Mat::identity(1, nv);
            let mut term_f = Mat::identity(1, nv);
            for (u, md) in mods.iter().enumerate() {
                let id = Mat::identity(md.dim, nv);
                let fe: &Mat = if u < t {
                    &id
                } else if u == t {
                    &md.e_mats[i]
                } else {
                    &md.k_inv_mats[i]
                };
                term_e = term_e.kron(fe);
                let fb: &Mat = if u < t {
                    &md.k_mats[i]
                } else if u == t {
                    &md.f_mats[i]
                } else {
                    &id
                };
                term_f = term_f.kron(fb);
            }
            e = e.add(&term_e);
            ff = ff.add(&term_f);
        }
        e_mats.push(e);
        f_mats.push(ff);
        let mut k = Mat::identity(1, nv);
        let mut kinv = Mat::identity(1, nv);
        for md in mods {
            k = k.kron(&md.k_mats[i]);
            kinv = kinv.kron(&md.k_inv_mats[i]);
        }
        k_mats.push(k);
        k_inv_mats.push(kinv);
    }
    let mut labels = vec![String::new()];
    for md in mods {
        let mut next = Vec::new();
        for a in &labels {
            for b in &md.labels {
                next.push(if a.is_empty() { b.clone() } else { format!("{a}.{b}") });
            }
        }
        labels = next;
    }
    let spectra = mods.iter().flat_map(|md| md.spectra.iter().cloned()).collect();
    Ok(QModule { m, nvars: nv, dim, e_mats, f_mats, k_mats, k_inv_mats, spectra, labels })
}

/// Affine Cartan pairing a_{i,j} for sl-hat(m), m >= 2.
pub fn cartan_aij(i: usize, j: usize, m: usize) -> i32 {
    assert!(m >= 2);
    if m == 2 {
        return if i == j { 2 } else { -2 };
    }
    let d = (i + m - j) % m;
    if d == 0 {
        2
    } else if d == 1 || d == m - 1 {
        -1
    } else {
        0
    }
}

/// Exact verification of the defining relations (R1)-(R4) on a module.
/// For m = 1 only the relations with a meaningful index range are checked;
/// for m = 2 the Serre relations degenerate (i+1 = i-1) and are recorded
/// as skipped, following the printed index conditions.
pub fn verify_relations(md: &QModule) -> CheckReport {
    let mut rep = CheckReport::new();
    let m = md.m;
    let nv = md.nvars;
    let id = Mat::identity(md.dim, nv);
    for i in 0..m {
        let ok = md.k_mats[i].mul(&md.k_inv_mats[i]) == id && md.k_inv_mats[i].mul(&md.k_mats[i]) == id;
        rep.add(format!("(R1) K{i} K{i}^-1 = 1"), ok, String::new());
        for j in 0..m {
            let ok = md.k_mats[i].mul(&md.k_mats[j]) == md.k_mats[j].mul(&md.k_mats[i]);
            rep.add(format!("(R1) K{i} K{j} commute"), ok, String::new());
        }
    }
    if m >= 2 {
        for i in 0..m {
            for j in 0..m {
                let a = cartan_aij(i, j, m);
                let lhs = md.k_mats[i].mul(&md.e_mats[j]);
                let rhs = md.e_mats[j].mul(&md.k_mats[i]).scale(&RatFunc::q_pow(a, nv));
                rep.add(format!("(R2) K{i} E{j}"), lhs == rhs, format!("a = {a}"));
                let lhs = md.k_mats[i].mul(&md.f_mats[j]);
                let rhs = md.f_mats[j].mul(&md.k_mats[i]).scale(&RatFunc::q_pow(-a, nv));
                rep.add(format!("(R2) K{i} F{j}"), lhs == rhs, format!("a = {a}"));
            }
        }
    } else {
        rep.add("(R2) skipped", true, "m = 1: no Cartan pairing");
    }
    // (R3) [E_i, F_j] = delta_{ij} (K_i - K_i^{-1})/(q - q^{-1})
    let qden = RatFunc::q_pow(1, nv).sub_ref(&RatFunc::q_pow(-1, nv));
    for i in 0..m {
        for j in 0..m {
            let comm = md.e_mats[i].mul(&md.f_mats[j]).sub(&md.f_mats[j].mul(&md.e_mats[i]));
            let rhs = if i == j {
                md.k_mats[i]
                    .sub(&md.k_inv_mats[i])
                    .scale(&qden.inv().expect("q - q^{-1} invertible"))
            } else {
                Mat::zero(md.dim, md.dim, nv)
            };
            rep.add(format!("(R3) [E{i}, F{j}]"), comm == rhs, String::new());
        }
    }
    // (R4)
    if m == 2 {
        rep.add(
            "(R4) skipped",
            true,
            "m = 2: i+1 and i-1 coincide, printed Serre relations degenerate",
        );
    } else if m >= 3 {
        let qplus = RatFunc::q_pow(1, nv).add_ref(&RatFunc::q_pow(-1, nv));
        for i in 0..m {
            for j in 0..m {
                let d = (i + m - j) % m;
                if d == 0 {
                    continue;
                }
                if d == 1 || d == m - 1 {
                    // Serre: A^2 B + B A^2 = (q + q^{-1}) A B A
                    for (name, mats) in [("E", &md.e_mats), ("F", &md.f_mats)] {
                        let a = &mats[i];
                        let b = &mats[j];
                        let lhs = a.mul(a).mul(b).add(&b.mul(a).mul(a));
                        let rhs = a.mul(b).mul(a).scale(&qplus);
                        rep.add(format!("(R4) Serre {name}{i} {name}{j}"), lhs == rhs, String::new());
                    }
                } else {
                    for (name, mats) in [("E", &md.e_mats), ("F", &md.f_mats)] {
                        let a = &mats[i];
                        let b = &mats[j];
                        rep.add(
                            format!("(R4) commute {name}{i} {name}{j}"),
                            a.mul(b) == b.mul(a),
                            String::new(),
                        );
                    }
                }
            }
        }
    }
    rep
}
