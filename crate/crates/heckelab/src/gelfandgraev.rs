//! Gelfand-Graev machinery for type (C1) covers of GL_r on the Hecke side:
//! cover parameters, the orbit-indexed decomposition of the dual module,
//! the functor F_GG on finite modules (per-orbit images of parabolic sign
//! idempotents), Whittaker dimensions, the theta/Steinberg character
//! modules, stability, and the comparison with F_SW after the IM twist.

use crate::coeff::RatFunc;
use crate::hecke::module::{character_module, twist_by_im, FinModule};
use crate::hecke::present::ImPresentation;
use crate::hecke::{HChar, HeckeAlgebra, HeckeElem};
use crate::linalg::Mat;
use crate::perm::{block_stabilizer_gens, min_coset_reps, Perm};
use crate::qaff::FockVector;
use crate::schurweyl::{f_sw, hecke_right_action, split_index, SWContext, TensorQuotient};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GGError {
    #[error("cover is not of type (C1): n = {n} does not divide q = {qpar}")]
    NotTypeC1 { n: i64, qpar: i64 },
    #[error("state space {0}^{1} exceeds the bound")]
    StateSpaceTooLarge(usize, usize),
    #[error("comparison failed: {0}")]
    ComparisonFailed(String),
}

/// Brylinski-Deligne parameters (p, q) of a cover of GL_r together with the
/// cover degree n. Type (C1) requires n | q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverParams {
    pub p: i64,
    pub qpar: i64,
    pub n: i64,
}

impl CoverParams {
    /// Q(alpha-vee) = 2p - q for the standard basis bilinear form.
    pub fn q_alpha_vee(&self) -> i64 {
        2 * self.p - self.qpar
    }
}

/// n_alpha = n / gcd(2p, n); under (C1) this agrees with
/// n / gcd(n, Q(alpha-vee)), which is asserted.
pub fn cover_nalpha(cp: &CoverParams) -> Result<i64, GGError> {
    if cp.n <= 0 || cp.qpar.rem_euclid(cp.n) != 0 {
        return Err(GGError::NotTypeC1 { n: cp.n, qpar: cp.qpar });
    }
    let g1 = num_integer::gcd(2 * cp.p, cp.n).abs();
    let n_alpha = cp.n / g1;
    let g2 = num_integer::gcd(cp.n, cp.q_alpha_vee()).abs();
    assert_eq!(n_alpha, cp.n / g2, "the two n_alpha formulas agree under (C1)");
    Ok(n_alpha)
}

/// One S_r-orbit on (Z/n_alpha)^r: weakly increasing representative, its
/// block stabilizer, and the orbit size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDatum {
    pub representative: Vec<usize>,
    /// 1-based simple-reflection indices generating the stabilizer
    pub stabilizer_gens: Vec<usize>,
    pub stabilizer_order: usize,
    pub orbit_size: usize,
}

/// The Gelfand-Graev dual module as an orbit-indexed list: one sign
/// induction per W-orbit on (Z/n_alpha)^r.
#[derive(Debug, Clone)]
pub struct GGModule {
    pub n_alpha: usize,
    pub r: usize,
    pub orbits: Vec<OrbitDatum>,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Enumerate S_r-orbits on (Z/n_alpha)^r: one weakly increasing
/// representative per multiset.
pub fn gg_decomposition(n_alpha: usize, r: usize, bound: usize) -> Result<GGModule, GGError> {
    let size = n_alpha.checked_pow(r as u32).unwrap_or(usize::MAX);
    if size > bound {
        return Err(GGError::StateSpaceTooLarge(n_alpha, r));
    }
    let mut reps: Vec<Vec<usize>> = Vec::new();
    let mut cur = vec![0usize; r];
    loop {
        reps.push(cur.clone());
        // next weakly increasing tuple over [0, n_alpha)
        let mut i = r;
        loop {
            if i == 0 {
                cur.clear();
                break;
            }
            i -= 1;
            if cur[i] + 1 < n_alpha {
                let v = cur[i] + 1;
                for x in cur.iter_mut().skip(i) {
                    *x = v;
                }
                break;
            }
        }
        if cur.is_empty() {
            break;
        }
    }
    let orbits = reps
        .into_iter()
        .map(|rep| {
            let gens = block_stabilizer_gens(&rep);
            // stabilizer order = product of block factorials
            let mut order = 1usize;
            let mut run = 1usize;
            for i in 1..=r {
                if i < r && rep[i] == rep[i - 1] {
                    run += 1;
                } else {
                    order *= factorial(run);
                    run = 1;
                }
            }
            if r == 0 {
                order = 1;
            }
            OrbitDatum {
                representative: rep,
                stabilizer_gens: gens,
                stabilizer_order: order,
                orbit_size: factorial(r) / order,
            }
        })
        .collect();
    Ok(GGModule { n_alpha, r, orbits })
}

impl GGModule {
    /// Stability: some orbit is free; for GL_r this happens iff n_alpha >= r.
    pub fn is_stable(&self) -> bool {
        self.orbits.iter().any(|o| o.stabilizer_order == 1)
    }

    pub fn free_count(&self) -> usize {
        self.orbits.iter().filter(|o| o.stabilizer_order == 1).count()
    }
}

/// One orbit component of F_GG(M): the image of the parabolic sign
/// idempotent, with an explicit basis of vectors in M.
#[derive(Debug, Clone)]
pub struct GGComponent {
    pub orbit: OrbitDatum,
    pub dim: usize,
    /// basis of e_sign . M as column vectors in M-coordinates
    pub basis: Vec<Vec<RatFunc>>,
    /// the idempotent matrix itself
    pub projector: Mat,
}

/// F_GG(M): per-orbit images of the parabolic sign idempotents.
pub fn f_gg(m: &FinModule, gg: &GGModule) -> Vec<GGComponent> {
    let alg = HeckeAlgebra::new(m.r, m.nvars);
    gg.orbits
        .iter()
        .map(|orbit| {
            let e = alg.parabolic_idempotent(&orbit.stabilizer_gens, HChar::Sign);
            let proj = m.act(&e);
            // image basis: columns of proj at the pivot columns of its RREF
            let mut red = proj.clone();
            let pivots = red.rref();
            let basis: Vec<Vec<RatFunc>> = pivots.iter().map(|&c| proj.col(c)).collect();
            GGComponent { orbit: orbit.clone(), dim: basis.len(), basis, projector: proj }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct WhittakerReport {
    pub per_orbit: Vec<(Vec<usize>, usize)>,
    pub total: usize,
}

/// Whittaker dimension of M: total dimension of F_GG(M) with the per-orbit
/// breakdown.
pub fn whittaker_dim(m: &FinModule, gg: &GGModule) -> WhittakerReport {
    let comps = f_gg(m, gg);
    let per_orbit: Vec<(Vec<usize>, usize)> =
        comps.iter().map(|c| (c.orbit.representative.clone(), c.dim)).collect();
    let total = comps.iter().map(|c| c.dim).sum();
    WhittakerReport { per_orbit, total }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialKind {
    Theta,
    Steinberg,
}

/// The one-dimensional theta (T -> q^{-1}) and Steinberg (T -> -q) modules.
/// The X-scalars are forced up to a global twist c by the cross relation:
/// consecutive ratios q^2 for theta and q^{-2} for Steinberg.
pub fn special_module(
    alg: &HeckeAlgebra,
    kind: SpecialKind,
    twist: Option<RatFunc>,
) -> FinModule {
    let c = twist.unwrap_or_else(|| RatFunc::one(alg.nvars));
    let (chi, step) = match kind {
        SpecialKind::Theta => (HChar::Trivial, 2i32),
        SpecialKind::Steinberg => (HChar::Sign, -2i32),
    };
    let xs: Vec<RatFunc> = (0..alg.r)
        .map(|j| c.mul_ref(&RatFunc::q_pow(step * (alg.r as i32 - 1 - j as i32), alg.nvars)))
        .collect();
    character_module(alg, chi, &xs).expect("derived X-scalars satisfy the cross relation")
}

/// Zero-dimensional module, for degenerate functor checks.
pub fn zero_module(alg: &HeckeAlgebra) -> FinModule {
    FinModule {
        r: alg.r,
        nvars: alg.nvars,
        dim: 0,
        t_mats: (1..alg.r).map(|_| Mat::zero(0, 0, alg.nvars)).collect(),
        x_mats: (0..alg.r).map(|_| Mat::zero(0, 0, alg.nvars)).collect(),
        x_inv_mats: (0..alg.r).map(|_| Mat::zero(0, 0, alg.nvars)).collect(),
        basis_labels: Vec::new(),
    }
}

/// Result of the comparison between F_GG(M) and F_SW(IM* M).
#[derive(Debug, Clone)]
pub struct CompareReport {
    pub dim_gg: usize,
    pub dim_sw: usize,
    pub per_orbit: Vec<(Vec<usize>, usize, usize)>,
    pub iso_invertible: bool,
    pub probes_checked: usize,
}

/// Compare F_SW(IM* M) with F_GG(M): equal total and per-orbit dimensions,
/// an explicit invertible orbitwise map x -> class(v-tilde_{y0} (x) x), and
/// equivariance of that map with respect to probe endomorphisms
/// e_{sign,y0'} T_u e_{sign,y0} (computed on the Gelfand-Graev side) versus
/// their IM images acting through the Schur-Weyl right action.
pub fn compare_sw_gg(
    m: &FinModule,
    ctx: &SWContext,
    gg: &GGModule,
) -> Result<CompareReport, GGError> {
    assert_eq!(ctx.m, gg.n_alpha, "context m must equal n_alpha");
    assert_eq!(ctx.r, gg.r);
    assert_eq!(ctx.nvars, m.nvars);
    let alg = HeckeAlgebra::new(m.r, m.nvars);
    let im = ImPresentation::new(alg);
    let twisted = twist_by_im(m, &im)
        .map_err(|e| GGError::ComparisonFailed(format!("IM twist failed: {e}")))?;
    let quo = f_sw(&twisted, ctx)
        .map_err(|e| GGError::ComparisonFailed(format!("F_SW failed: {e}")))?;
    let comps = f_gg(m, gg);
    let dim_gg: usize = comps.iter().map(|c| c.dim).sum();
    let dim_sw = quo.dim;
    if dim_gg != dim_sw {
        return Err(GGError::ComparisonFailed(format!("dim mismatch {dim_gg} vs {dim_sw}")));
    }
    // per-orbit SW dimension: rank of the span of classes over the orbit
    let mut per_orbit = Vec::new();
    for c in &comps {
        let orbit_members = orbit_box_members(&c.orbit, ctx);
        let mut cols = Vec::new();
        for y in &orbit_members {
            for b in 0..m.dim {
                cols.push(quo.class_of(y, b));
            }
        }
        let rank = if cols.is_empty() { 0 } else { Mat::from_cols(&cols, ctx.nvars).rank() };
        if rank != c.dim {
            return Err(GGError::ComparisonFailed(format!(
                "orbit {:?}: GG dim {} vs SW rank {}",
                c.orbit.representative, c.dim, rank
            )));
        }
        per_orbit.push((c.orbit.representative.clone(), c.dim, rank));
    }
    // global map: x in e_sign M |-> class(v-tilde_{y0} (x) x)
    let mut cols: Vec<Vec<RatFunc>> = Vec::new();
    for c in &comps {
        for bv in &c.basis {
            cols.push(class_of_vector(&quo, &c.orbit.representative, bv));
        }
    }
    let phi = Mat::from_cols(&cols, ctx.nvars);
    let iso_invertible = phi.rows == phi.cols && phi.inverse().is_some();
    if !iso_invertible && dim_gg > 0 {
        return Err(GGError::ComparisonFailed("orbitwise map not invertible".into()));
    }
    // probe equivariance
    let mut probes_checked = 0;
    let probe_words: Vec<Perm> = crate::perm::all_perms(m.r);
    for (ci, c_src) in comps.iter().enumerate() {
        for c_tgt in comps.iter() {
            for u in &probe_words {
                // p = e_{sign, tgt} T_u e_{sign, src}
                let e_src = alg.parabolic_idempotent(&c_src.orbit.stabilizer_gens, HChar::Sign);
                let e_tgt = alg.parabolic_idempotent(&c_tgt.orbit.stabilizer_gens, HChar::Sign);
                let p = alg.product(&[&e_tgt, &alg.t_word(u), &e_src]);
                if p.is_zero() {
                    continue;
                }
                let p_mat = m.act(&p);
                let im_p = im.im_involution(&p);
                for bv in &c_src.basis {
                    // left side: class at tgt of p x
                    let px = p_mat.apply(bv);
                    let lhs = class_of_vector(&quo, &c_tgt.orbit.representative, &px);
                    // right side: Fock route through v-tilde_{y0'} . IM(p)
                    let rhs = probe_via_fock(&quo, &twisted, &c_tgt.orbit.representative, &im_p, bv, ctx);
                    if lhs != rhs {
                        return Err(GGError::ComparisonFailed(format!(
                            "probe T_{:?} from orbit {:?} to {:?} fails",
                            u.0, c_src.orbit.representative, c_tgt.orbit.representative
                        )));
                    }
                    probes_checked += 1;
                }
                // limit probe volume: a couple of basis vectors per pair
                if probes_checked > 200 {
                    break;
                }
            }
        }
        let _ = ci;
    }
    Ok(CompareReport { dim_gg, dim_sw, per_orbit, iso_invertible, probes_checked })
}

/// All box vectors in the W-orbit of the representative.
fn orbit_box_members(orbit: &OrbitDatum, ctx: &SWContext) -> Vec<Vec<usize>> {
    let reps = min_coset_reps(ctx.r, &orbit.stabilizer_gens);
    reps.iter().map(|w| w.act_right(&orbit.representative)).collect()
}

/// Quotient class of v-tilde_{y0} (x) x for a coordinate vector x in M.
fn class_of_vector(quo: &TensorQuotient, y0: &[usize], x: &[RatFunc]) -> Vec<RatFunc> {
    let mut acc = vec![RatFunc::zero(quo.ctx.nvars); quo.dim];
    for (b, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cls = quo.class_of(y0, b);
        for (i, v) in cls.iter().enumerate() {
            if !v.is_zero() {
                acc[i] = acc[i].add_ref(&c.mul_ref(v));
            }
        }
    }
    acc
}

/// class( (v-tilde_{y0'} . xi) (x) x ) computed through the Schur-Weyl
/// right action and the tau reduction with the twisted module's X-action.
fn probe_via_fock(
    quo: &TensorQuotient,
    twisted: &FinModule,
    y0_tgt: &[usize],
    xi: &HeckeElem,
    x: &[RatFunc],
    ctx: &SWContext,
) -> Vec<RatFunc> {
    let v0 = FockVector::basis(y0_tgt.iter().map(|&c| c as i64).collect(), ctx.nvars);
    let moved = hecke_right_action(&v0, xi, ctx);
    let mut acc = vec![RatFunc::zero(ctx.nvars); quo.dim];
    for (idx, c) in &moved.terms {
        let (res, lam) = split_index(idx, ctx.m);
        // X^lam acts on the twisted module side
        let mut mv = x.to_vec();
        for (t, &lt) in lam.iter().enumerate() {
            let mat = if lt >= 0 { &twisted.x_mats[t] } else { &twisted.x_inv_mats[t] };
            for _ in 0..lt.unsigned_abs() {
                mv = mat.apply(&mv);
            }
        }
        let cls = class_of_vector(quo, &res, &mv);
        for (i, v) in cls.iter().enumerate() {
            if !v.is_zero() {
                acc[i] = acc[i].add_ref(&c.mul_ref(v));
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::module::principal_series;

    #[test]
    fn cover_arithmetic() {
        // Savin cover (p, q) = (-1, 0), n = 3
        assert_eq!(cover_nalpha(&CoverParams { p: -1, qpar: 0, n: 3 }).unwrap(), 3);
        assert_eq!(cover_nalpha(&CoverParams { p: 1, qpar: 4, n: 4 }).unwrap(), 2);
        assert!(matches!(
            cover_nalpha(&CoverParams { p: 1, qpar: 3, n: 2 }),
            Err(GGError::NotTypeC1 { .. })
        ));
    }

    #[test]
    fn decomposition_small() {
        let gg = gg_decomposition(2, 2, 1 << 20).unwrap();
        assert_eq!(gg.orbits.len(), 3);
        let orders: Vec<usize> = gg.orbits.iter().map(|o| o.stabilizer_order).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 2);
        assert_eq!(orders.iter().filter(|&&o| o == 1).count(), 1);

        let gg = gg_decomposition(1, 3, 1 << 20).unwrap();
        assert_eq!(gg.orbits.len(), 1);
        assert_eq!(gg.orbits[0].stabilizer_order, 6);

        // multiset count C(n_alpha + r - 1, r)
        let gg = gg_decomposition(3, 2, 1 << 20).unwrap();
        assert_eq!(gg.orbits.len(), 6);
    }

    #[test]
    fn orbit_sizes_partition_box() {
        for (na, r) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3), (4, 2)] {
            let gg = gg_decomposition(na, r, 1 << 20).unwrap();
            let total: usize = gg.orbits.iter().map(|o| o.orbit_size).sum();
            assert_eq!(total, na.pow(r as u32), "({na},{r})");
            for o in &gg.orbits {
                assert_eq!(o.orbit_size * o.stabilizer_order, factorial(r));
            }
        }
    }

    #[test]
    fn stability_grid() {
        for r in 1..=4usize {
            for na in 1..=6usize {
                let gg = gg_decomposition(na, r, 1 << 22).unwrap();
                assert_eq!(gg.is_stable(), na >= r, "(n_alpha, r) = ({na}, {r})");
            }
        }
    }

    #[test]
    fn binomial_dimension_formulas() {
        // theta: C(n_alpha, r) over free orbits; steinberg: orbit count
        fn binom(n: usize, k: usize) -> usize {
            if k > n {
                return 0;
            }
            let mut v = 1usize;
            for i in 0..k {
                v = v * (n - i) / (i + 1);
            }
            v
        }
        for r in 1..=3usize {
            for na in 1..=4usize {
                let gg = gg_decomposition(na, r, 1 << 22).unwrap();
                let alg = HeckeAlgebra::new(r, 1);
                let theta = special_module(&alg, SpecialKind::Theta, None);
                let st = special_module(&alg, SpecialKind::Steinberg, None);
                let wt = whittaker_dim(&theta, &gg);
                let ws = whittaker_dim(&st, &gg);
                assert_eq!(wt.total, binom(na, r), "theta ({na},{r})");
                assert_eq!(ws.total, binom(na + r - 1, r), "st ({na},{r})");
                assert_eq!(wt.total, gg.free_count());
                assert_eq!(ws.total, gg.orbits.len());
            }
        }
    }

    #[test]
    fn twisted_theta_has_same_dimensions() {
        // an unramified twist does not change the Whittaker dimensions
        let alg = HeckeAlgebra::new(2, 2);
        let c = RatFunc::z(1, 2);
        let gg = gg_decomposition(2, 2, 1 << 20).unwrap();
        let plain = special_module(&alg, SpecialKind::Theta, None);
        let twisted = special_module(&alg, SpecialKind::Theta, Some(c));
        assert_eq!(whittaker_dim(&plain, &gg).total, whittaker_dim(&twisted, &gg).total);
    }

    #[test]
    fn f_gg_of_principal_series() {
        // dims per orbit 1, 1, 2 for (n_alpha, r) = (2, 2); total 4
        let nv = 3;
        let alg = HeckeAlgebra::new(2, nv);
        let ps = principal_series(&alg, &[RatFunc::z(1, nv), RatFunc::z(2, nv)]).unwrap();
        let gg = gg_decomposition(2, 2, 1 << 20).unwrap();
        let rep = whittaker_dim(&ps, &gg);
        assert_eq!(rep.total, 4);
        let mut dims: Vec<usize> = rep.per_orbit.iter().map(|x| x.1).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 2]);
    }

    #[test]
    fn compare_theta_r2() {
        // both sides one-dimensional for theta at n_alpha = r = 2
        let alg = HeckeAlgebra::new(2, 1);
        let theta = special_module(&alg, SpecialKind::Theta, None);
        let gg = gg_decomposition(2, 2, 1 << 20).unwrap();
        let ctx = SWContext::new(2, 2);
        let rep = compare_sw_gg(&theta, &ctx, &gg).unwrap();
        assert_eq!(rep.dim_gg, 1);
        assert_eq!(rep.dim_sw, 1);
        assert!(rep.iso_invertible);
    }

    #[test]
    fn compare_zero_module() {
        let alg = HeckeAlgebra::new(2, 1);
        let z = zero_module(&alg);
        let gg = gg_decomposition(2, 2, 1 << 20).unwrap();
        let ctx = SWContext::new(2, 2);
        let rep = compare_sw_gg(&z, &ctx, &gg).unwrap();
        assert_eq!(rep.dim_gg, 0);
        assert_eq!(rep.dim_sw, 0);
    }

    #[test]
    fn compare_principal_series_2_2() {
        let nv = 3;
        let alg = HeckeAlgebra::new(2, nv);
        let ps = principal_series(&alg, &[RatFunc::z(1, nv), RatFunc::z(2, nv)]).unwrap();
        let gg = gg_decomposition(2, 2, 1 << 20).unwrap();
        let ctx = SWContext::with_nvars(2, 2, nv);
        let rep = compare_sw_gg(&ps, &ctx, &gg).unwrap();
        assert_eq!(rep.dim_gg, 4);
        assert_eq!(rep.dim_sw, 4);
        assert!(rep.iso_invertible);
        assert!(rep.probes_checked > 0);
    }
}
