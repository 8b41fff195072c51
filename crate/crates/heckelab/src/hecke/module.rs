//! Finite-dimensional left modules over the extended affine Hecke algebra:
//! principal series, one-dimensional characters, the IM twist, induced
//! right modules from parabolic characters, and intertwiners between
//! principal series computed by exact linear solves.

use super::present::ImPresentation;
use super::{HChar, HeckeAlgebra, HeckeElem, HeckeError};
use crate::coeff::RatFunc;
use crate::linalg::Mat;
use crate::perm::{all_perms, min_coset_reps, parabolic_elements, Perm};
use std::collections::BTreeMap;

/// A left module given by generator matrices over the scalar field.
#[derive(Debug, Clone)]
pub struct FinModule {
    pub r: usize,
    pub nvars: usize,
    pub dim: usize,
    /// matrices of T_1..T_{r-1}
    pub t_mats: Vec<Mat>,
    /// matrices of X^{e_1}..X^{e_r}
    pub x_mats: Vec<Mat>,
    /// inverses of the X matrices
    pub x_inv_mats: Vec<Mat>,
    pub basis_labels: Vec<String>,
}

impl FinModule {
    /// Construct and verify all defining relations. The verification is the
    /// constructor's contract: a FinModule that exists is a module.
    pub fn new(
        r: usize,
        nvars: usize,
        t_mats: Vec<Mat>,
        x_mats: Vec<Mat>,
        basis_labels: Vec<String>,
    ) -> Result<Self, HeckeError> {
        let dim = basis_labels.len();
        let x_inv_mats: Vec<Mat> = x_mats
            .iter()
            .map(|m| m.inverse().ok_or(HeckeError::RelationFailed("X invertible".into())))
            .collect::<Result<_, _>>()?;
        let module = FinModule { r, nvars, dim, t_mats, x_mats, x_inv_mats, basis_labels };
        module.verify()?;
        Ok(module)
    }

    pub fn verify(&self) -> Result<(), HeckeError> {
        let nv = self.nvars;
        let id = Mat::identity(self.dim, nv);
        let qdiff = RatFunc::q_pow(-1, nv).sub_ref(&RatFunc::q_pow(1, nv));
        let q = RatFunc::q_pow(1, nv);
        let qi = RatFunc::q_pow(-1, nv);
        for (k, t) in self.t_mats.iter().enumerate() {
            let lhs = t.mul(t);
            let rhs = id.add(&t.scale(&qdiff));
            if lhs != rhs {
                return Err(HeckeError::RelationFailed(format!("quadratic T{}", k + 1)));
            }
        }
        for k in 0..self.t_mats.len().saturating_sub(1) {
            let a = &self.t_mats[k];
            let b = &self.t_mats[k + 1];
            if a.mul(b).mul(a) != b.mul(a).mul(b) {
                return Err(HeckeError::RelationFailed(format!("braid T{} T{}", k + 1, k + 2)));
            }
        }
        for i in 0..self.t_mats.len() {
            for j in i + 2..self.t_mats.len() {
                if self.t_mats[i].mul(&self.t_mats[j]) != self.t_mats[j].mul(&self.t_mats[i]) {
                    return Err(HeckeError::RelationFailed(format!("commuting T{} T{}", i + 1, j + 1)));
                }
            }
        }
        for i in 0..self.r {
            for j in 0..self.r {
                if self.x_mats[i].mul(&self.x_mats[j]) != self.x_mats[j].mul(&self.x_mats[i]) {
                    return Err(HeckeError::RelationFailed(format!("X{i} X{j} commute")));
                }
            }
        }
        // cross relation on lattice generators:
        //   T_k X^{e_k}   = X^{e_{k+1}} T_k + (q - q^{-1}) X^{e_{k+1}}
        //   T_k X^{e_{k+1}} = X^{e_k} T_k + (q^{-1} - q) X^{e_{k+1}}
        //   T_k X^{e_j}   = X^{e_j} T_k   (j != k, k+1)
        for k in 1..self.r {
            let t = &self.t_mats[k - 1];
            for j in 0..self.r {
                let lhs = t.mul(&self.x_mats[j]);
                let rhs = if j + 1 == k {
                    let c = q.sub_ref(&qi);
                    self.x_mats[k].mul(t).add(&self.x_mats[k].scale(&c))
                } else if j == k {
                    let c = qi.sub_ref(&q);
                    self.x_mats[k - 1].mul(t).add(&self.x_mats[k].scale(&c))
                } else {
                    self.x_mats[j].mul(t)
                };
                if lhs != rhs {
                    return Err(HeckeError::RelationFailed(format!("cross T{k} X{j}")));
                }
            }
        }
        Ok(())
    }

    /// Matrix of a normal-form element acting on the module.
    pub fn act(&self, e: &HeckeElem) -> Mat {
        let mut out = Mat::zero(self.dim, self.dim, self.nvars);
        for ((w, lam), c) in &e.terms {
            let mut m = Mat::identity(self.dim, self.nvars);
            for k in w.reduced_word() {
                m = m.mul(&self.t_mats[k - 1]);
            }
            for (j, &lj) in lam.iter().enumerate() {
                let f = if lj >= 0 { &self.x_mats[j] } else { &self.x_inv_mats[j] };
                for _ in 0..lj.unsigned_abs() {
                    m = m.mul(f);
                }
            }
            out = out.add(&m.scale(c));
        }
        out
    }

    /// All generator matrices in a fixed order (T's then X's), used by the
    /// Hom-space solvers.
    pub fn generator_mats(&self) -> Vec<&Mat> {
        self.t_mats.iter().chain(self.x_mats.iter()).collect()
    }
}

/// The r!-dimensional principal series with spectral vector z: the module
/// H tensor_{C[Y]} chi_z with basis {T_w (x) 1 : w in S_r}, ordered by the
/// lex order on one-line permutation words.
pub fn principal_series(alg: &HeckeAlgebra, z: &[RatFunc]) -> Result<FinModule, HeckeError> {
    assert_eq!(z.len(), alg.r, "need one spectral value per coordinate");
    let perms = all_perms(alg.r);
    let index: BTreeMap<Perm, usize> = perms.iter().cloned().zip(0..).collect();
    let chi = |lam: &[i32]| -> RatFunc {
        let mut c = RatFunc::one(alg.nvars);
        for (j, &lj) in lam.iter().enumerate() {
            if lj != 0 {
                c = c.mul_ref(&z[j].pow(lj));
            }
        }
        c
    };
    let act_matrix = |gen: &HeckeElem| -> Mat {
        let mut m = Mat::zero(perms.len(), perms.len(), alg.nvars);
        for (col, w) in perms.iter().enumerate() {
            let prod = alg.mul(gen, &alg.t_word(w));
            for ((u, lam), c) in &prod.terms {
                let row = index[u];
                let add = c.mul_ref(&chi(lam));
                m[(row, col)] = m[(row, col)].add_ref(&add);
            }
        }
        m
    };
    let t_mats: Vec<Mat> = (1..alg.r).map(|k| act_matrix(&alg.t_gen(k))).collect();
    let x_mats: Vec<Mat> = (0..alg.r)
        .map(|j| {
            let mut e = vec![0; alg.r];
            e[j] = 1;
            act_matrix(&alg.x_monomial(&e))
        })
        .collect();
    let labels: Vec<String> = perms.iter().map(|w| format!("T{:?}", w.0)).collect();
    FinModule::new(alg.r, alg.nvars, t_mats, x_mats, labels)
}

/// Generic symbolic principal series: z_j are the spectral variables of a
/// field context with nvars = r + 1.
pub fn principal_series_symbolic(r: usize) -> Result<FinModule, HeckeError> {
    let nvars = r + 1;
    let alg = HeckeAlgebra::new(r, nvars);
    let z: Vec<RatFunc> = (1..=r).map(|j| RatFunc::z(j, nvars)).collect();
    principal_series(&alg, &z)
}

/// One-dimensional module: T_k acts by the character value, X^{e_j} by the
/// given scalars. The scalars must satisfy x_k / x_{k+1} = q^2 (trivial) or
/// q^{-2} (sign); this is checked by the module verifier.
pub fn character_module(
    alg: &HeckeAlgebra,
    chi: HChar,
    x_scalars: &[RatFunc],
) -> Result<FinModule, HeckeError> {
    assert_eq!(x_scalars.len(), alg.r);
    let t = chi.value(alg.nvars);
    let t_mats: Vec<Mat> = (1..alg.r).map(|_| Mat::from_fn(1, 1, alg.nvars, |_, _| t.clone())).collect();
    let x_mats: Vec<Mat> =
        x_scalars.iter().map(|x| Mat::from_fn(1, 1, alg.nvars, |_, _| x.clone())).collect();
    FinModule::new(alg.r, alg.nvars, t_mats, x_mats, vec!["v".into()])
}

/// IM twist: generator g acts on the twist by the matrix of IM(g).
/// T_k matrices become -T_k^{-1} = -T_k + (q^{-1} - q); X matrices are the
/// actions of the cached IM(X^{e_j}).
pub fn twist_by_im(m: &FinModule, im: &ImPresentation) -> Result<FinModule, HeckeError> {
    assert_eq!(m.r, im.alg.r);
    assert_eq!(m.nvars, im.alg.nvars);
    let nv = m.nvars;
    let qdiff = RatFunc::q_pow(-1, nv).sub_ref(&RatFunc::q_pow(1, nv));
    let id = Mat::identity(m.dim, nv);
    let t_mats: Vec<Mat> =
        m.t_mats.iter().map(|t| t.scale(&RatFunc::int(-1, nv)).add(&id.scale(&qdiff))).collect();
    let mut x_mats = Vec::new();
    for j in 0..m.r {
        let mut e = vec![0; m.r];
        e[j] = 1;
        let elem = im.im_involution(&im.alg.x_monomial(&e));
        x_mats.push(m.act(&elem));
    }
    FinModule::new(m.r, m.nvars, t_mats, x_mats, m.basis_labels.clone())
}

/// Right module induced from a character of a parabolic subalgebra:
/// e_chi H with C[Y]-basis {e_chi T_w : w minimal coset representatives}.
pub struct InducedModule {
    pub alg: HeckeAlgebra,
    pub j_set: Vec<usize>,
    pub chi: HChar,
    pub reps: Vec<Perm>,
    /// each u in S_r factored as u_J . rep: stores (chi(T_{u_J}), rep index)
    coset_of: BTreeMap<Perm, (RatFunc, usize)>,
}

/// Element of the induced module: map (rep index, lambda) -> coefficient.
pub type InducedVec = BTreeMap<(usize, Vec<i32>), RatFunc>;

impl InducedModule {
    pub fn new(alg: HeckeAlgebra, j_set: Vec<usize>, chi: HChar) -> Self {
        let reps = min_coset_reps(alg.r, &j_set);
        let parab = parabolic_elements(alg.r, &j_set);
        let mut coset_of = BTreeMap::new();
        for (i, w) in reps.iter().enumerate() {
            for u in &parab {
                // u w has parabolic part u and rep w; lengths add for
                // minimal-length representatives
                let uw = u.compose(w);
                debug_assert_eq!(uw.length(), u.length() + w.length());
                coset_of.insert(uw, (chi.value_on(u, alg.nvars), i));
            }
        }
        InducedModule { alg, j_set, chi, reps, coset_of }
    }

    pub fn rank_over_lattice(&self) -> usize {
        self.reps.len()
    }

    pub fn basis_vec(&self, rep_idx: usize) -> InducedVec {
        let mut v = InducedVec::new();
        v.insert((rep_idx, vec![0; self.alg.r]), RatFunc::one(self.alg.nvars));
        v
    }

    /// Right action v . a, reducing e_chi T_u = chi(T_{u_J}) e_chi T_{u^J}.
    pub fn act(&self, v: &InducedVec, a: &HeckeElem) -> InducedVec {
        let mut out = InducedVec::new();
        for ((rep_idx, lam), c) in v {
            let base = self.alg.basis_elem(&self.reps[*rep_idx], lam, c.clone());
            let prod = self.alg.mul(&base, a);
            for ((u, mu), c2) in &prod.terms {
                let (chi_val, rep) = &self.coset_of[u];
                let key = (*rep, mu.clone());
                let add = c2.mul_ref(chi_val);
                match out.entry(key) {
                    std::collections::btree_map::Entry::Vacant(slot) => {
                        if !add.is_zero() {
                            slot.insert(add);
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut slot) => {
                        let s = slot.get().add_ref(&add);
                        if s.is_zero() {
                            slot.remove();
                        } else {
                            *slot.get_mut() = s;
                        }
                    }
                }
            }
        }
        out
    }
}

/// A basis of Hom_H(src, tgt) for modules over the same algebra, by exact
/// nullspace computation. Returns the unique intertwiner normalized so
/// entry (0,0) = 1 (the coefficient of the first basis vector in the image
/// of the first basis vector).
pub fn intertwiner(src: &FinModule, tgt: &FinModule) -> Result<Mat, HeckeError> {
    assert_eq!(src.r, tgt.r);
    assert_eq!(src.nvars, tgt.nvars);
    // X-generators first: their rows are sparser and eliminate cheaply.
    let mut gens: Vec<(&Mat, &Mat)> = Vec::new();
    for j in 0..src.r {
        gens.push((&src.x_mats[j], &tgt.x_mats[j]));
    }
    for k in 0..src.t_mats.len() {
        gens.push((&src.t_mats[k], &tgt.t_mats[k]));
    }
    let basis = crate::linalg::hom_basis(&gens, src.dim, tgt.dim, src.nvars);
    if basis.len() != 1 {
        return Err(HeckeError::HomDimensionNotOne(basis.len()));
    }
    let a = basis.into_iter().next().unwrap();
    let pivot = a[(0, 0)].clone();
    if pivot.is_zero() {
        return Err(HeckeError::NormalizationFailed);
    }
    Ok(a.scale(&pivot.inv().unwrap()))
}
