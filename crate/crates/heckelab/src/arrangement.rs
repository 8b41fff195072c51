//! Coxeter hyperplane arrangement combinatorics: the intersection lattice
//! with its Möbius function, characteristic and Euler-Poincaré polynomials,
//! Weyl-orbit enumeration on Y/nY, Whittaker dimension formulas, Sommers
//! multiplicities, and the stability predicate.

use crate::rootsys::{IntPoly, RootSystem, WeylElement};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ArrangementError {
    #[error("rank {0} exceeds the lattice enumeration guard")]
    RankTooLarge(usize),
    #[error("state space n^r = {0} exceeds the bound {1}")]
    StateSpaceTooLarge(u128, u128),
    #[error("modulus {0} is not coprime to |W| = {1}")]
    BadModulus(i64, usize),
    #[error("character system has no nonnegative integer solution")]
    NoNonnegativeSolution,
}

/// An intersection of root hyperplanes, keyed by the row-reduced echelon
/// basis of the covectors vanishing on it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subspace {
    /// RREF over Q of the annihilator span (each row a covector).
    pub annihilator_rref: Vec<Vec<BigRational>>,
    pub dim: usize,
}

fn rref_rows(rows: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for col in 0..ncols {
        let p = (rank..nrows).find(|&i| !m[i][col].is_zero());
        let Some(p) = p else { continue };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for j in 0..ncols {
            m[rank][j] = &m[rank][j] * &inv;
        }
        for i in 0..nrows {
            if i != rank && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..ncols {
                    let t = &m[rank][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    m
}

impl Subspace {
    fn from_covectors(covs: &[Vec<i64>], rank: usize) -> Subspace {
        let rows: Vec<Vec<BigRational>> = covs
            .iter()
            .map(|c| c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        let r = rref_rows(&rows);
        Subspace { dim: rank - r.len(), annihilator_rref: r }
    }

    /// x <= y in the intersection lattice (reverse inclusion of subspaces)
    /// iff ann(x) is contained in ann(y).
    fn leq(&self, other: &Subspace) -> bool {
        if self.annihilator_rref.len() > other.annihilator_rref.len() {
            return false;
        }
        let mut stacked = other.annihilator_rref.clone();
        stacked.extend(self.annihilator_rref.iter().cloned());
        rref_rows(&stacked).len() == other.annihilator_rref.len()
    }
}

#[derive(Debug, Clone)]
pub struct IntersectionLattice {
    /// All intersections, ambient space first, ordered by codimension.
    pub elements: Vec<Subspace>,
    /// mu(ambient, x) per element.
    pub mobius: Vec<BigInt>,
    pub rank: usize,
}

/// Build the full intersection lattice of the Coxeter arrangement with
/// Möbius values by top-down recursion.
pub fn build_lattice(rs: &RootSystem) -> Result<IntersectionLattice, ArrangementError> {
    if rs.rank > 4 {
        return Err(ArrangementError::RankTooLarge(rs.rank));
    }
    let covs = &rs.positive_roots;
    let ambient = Subspace::from_covectors(&[], rs.rank);
    let mut seen: BTreeSet<Subspace> = BTreeSet::new();
    seen.insert(ambient.clone());
    let mut frontier = vec![ambient];
    while let Some(x) = frontier.pop() {
        for c in covs {
            let mut gens = x.annihilator_rref.clone();
            gens.push(c.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect());
            let r = rref_rows(&gens);
            if r.len() == x.annihilator_rref.len() {
                continue; // hyperplane already contains x
            }
            let nx = Subspace { dim: rs.rank - r.len(), annihilator_rref: r };
            if seen.insert(nx.clone()) {
                frontier.push(nx);
            }
        }
    }
    let mut elements: Vec<Subspace> = seen.into_iter().collect();
    elements.sort_by_key(|s| (s.annihilator_rref.len(), s.annihilator_rref.clone()));
    // mu(0^, 0^) = 1; mu(0^, x) = -sum_{z < x} mu(0^, z)
    let mut mobius = vec![BigInt::zero(); elements.len()];
    mobius[0] = BigInt::one();
    for i in 1..elements.len() {
        let mut s = BigInt::zero();
        for j in 0..elements.len() {
            if j != i && elements[j].leq(&elements[i]) {
                s += &mobius[j];
            }
        }
        mobius[i] = -s;
    }
    Ok(IntersectionLattice { elements, mobius, rank: rs.rank })
}

/// Characteristic polynomial: sum over lattice elements of mu(x) X^{dim x}.
pub fn char_poly(lat: &IntersectionLattice) -> IntPoly {
    let mut coeffs = vec![BigInt::zero(); lat.rank + 1];
    for (x, mu) in lat.elements.iter().zip(&lat.mobius) {
        coeffs[x.dim] += mu;
    }
    IntPoly::from_coeffs(coeffs)
}

/// Euler-Poincaré polynomial of the arrangement complement: prod (1 + m_j X).
pub fn ep_poly(rs: &RootSystem) -> IntPoly {
    let mut p = IntPoly::from_i64(&[1]);
    for m in rs.exponents() {
        p = p.mul(&IntPoly::from_i64(&[1, m as i64]));
    }
    p
}

/// Check the Orlik-Solomon identity char(X) = X^r EP(-1/X) coefficientwise:
/// coefficient of X^{r-i} in char equals (-1)^i (coefficient of X^i in EP).
pub fn orlik_solomon_identity_holds(rs: &RootSystem, lat: &IntersectionLattice) -> bool {
    let cp = char_poly(lat);
    let ep = ep_poly(rs);
    let r = rs.rank;
    (0..=r).all(|i| {
        let lhs = cp.coeff(r - i);
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        lhs == sign * ep.coeff(i)
    })
}

#[derive(Debug, Clone)]
pub struct OrbitDatum {
    pub representative: Vec<i64>,
    pub size: usize,
    pub stabilizer_order: usize,
    /// Reflections fixing the representative (indices into rs.reflections()).
    pub stabilizer_reflections: Vec<usize>,
    /// Order of the subgroup generated by those reflections; recorded so
    /// the caller can see whether the stabilizer is reflection-generated.
    pub reflection_subgroup_order: usize,
}

#[derive(Debug, Clone)]
pub struct OrbitTable {
    pub modulus: i64,
    pub rank: usize,
    pub weyl_order: usize,
    pub orbits: Vec<OrbitDatum>,
    pub total: usize,
    pub free: usize,
}

fn index_of(point: &[i64], n: i64) -> usize {
    let mut idx = 0usize;
    for &x in point {
        idx = idx * (n as usize) + x as usize;
    }
    idx
}

fn point_of(mut idx: usize, n: i64, r: usize) -> Vec<i64> {
    let mut v = vec![0i64; r];
    for i in (0..r).rev() {
        v[i] = (idx % n as usize) as i64;
        idx /= n as usize;
    }
    v
}

/// Exhaustive W-orbit enumeration on (Z/n)^r in the simple-coroot basis.
pub fn orbit_table(rs: &RootSystem, n: i64, bound: u128) -> Result<OrbitTable, ArrangementError> {
    assert!(n >= 1);
    let r = rs.rank;
    let size = (n as u128).pow(r as u32);
    if size > bound {
        return Err(ArrangementError::StateSpaceTooLarge(size, bound));
    }
    let size = size as usize;
    let group = rs.weyl_group();
    let reflections = rs.reflections();
    let gens = &rs.simple_reflections;
    let mut visited = vec![false; size];
    let mut orbits = Vec::new();
    for start in 0..size {
        if visited[start] {
            continue;
        }
        // BFS over generators; the representative is the lexicographic
        // minimum, which is the first index encountered in increasing order.
        let mut stack = vec![start];
        visited[start] = true;
        let mut members = vec![start];
        while let Some(p) = stack.pop() {
            let pt = point_of(p, n, r);
            for g in gens {
                let q = index_of(&g.apply_mod(&pt, n), n);
                if !visited[q] {
                    visited[q] = true;
                    members.push(q);
                    stack.push(q);
                }
            }
        }
        let rep = point_of(*members.iter().min().unwrap(), n, r);
        let stab_order = group.iter().filter(|w| w.apply_mod(&rep, n) == rep).count();
        let stab_refl: Vec<usize> = reflections
            .iter()
            .enumerate()
            .filter(|(_, w)| w.apply_mod(&rep, n) == rep)
            .map(|(i, _)| i)
            .collect();
        let refl_sub_order = subgroup_order(&reflections, &stab_refl, r);
        debug_assert_eq!(members.len() * stab_order, group.len());
        orbits.push(OrbitDatum {
            representative: rep,
            size: members.len(),
            stabilizer_order: stab_order,
            stabilizer_reflections: stab_refl,
            reflection_subgroup_order: refl_sub_order,
        });
    }
    orbits.sort_by_key(|o| o.representative.clone());
    let total = orbits.len();
    let free = orbits.iter().filter(|o| o.stabilizer_order == 1).count();
    Ok(OrbitTable { modulus: n, rank: r, weyl_order: group.len(), orbits, total, free })
}

fn subgroup_order(reflections: &[WeylElement], chosen: &[usize], rank: usize) -> usize {
    let gens: Vec<&WeylElement> = chosen.iter().map(|&i| &reflections[i]).collect();
    let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    let id = WeylElement::identity(rank);
    seen.insert(id.matrix.clone());
    let mut frontier = vec![id];
    while let Some(w) = frontier.pop() {
        for g in &gens {
            let x = w.compose(g);
            if seen.insert(x.matrix.clone()) {
                frontier.push(x);
            }
        }
    }
    seen.len()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideCount {
    /// |W|^{-1} sum_w n^{d(w)}, the orbit count by Burnside.
    pub burnside_total: BigInt,
    /// prod (n + m_j) / |W|
    pub product_total: BigInt,
    /// prod (n - m_j) / |W|
    pub product_free: BigInt,
}

fn check_modulus(rs: &RootSystem, n: i64) -> Result<(), ArrangementError> {
    if n < 1 || num_integer::gcd(n.unsigned_abs() as usize, rs.weyl_order) != 1 {
        return Err(ArrangementError::BadModulus(n, rs.weyl_order));
    }
    Ok(())
}

/// Orbit counts by the character identity chi(w) = n^{d(w)} and the two
/// closed-form products over exponents. Requires gcd(n, |W|) = 1.
pub fn burnside_count(rs: &RootSystem, n: i64) -> Result<BurnsideCount, ArrangementError> {
    check_modulus(rs, n)?;
    let group = rs.weyl_group();
    let nn = BigInt::from(n);
    let mut sum = BigInt::zero();
    for w in &group {
        sum += nn.pow(w.fixed_dim() as u32);
    }
    let order = BigInt::from(group.len());
    assert!((&sum % &order).is_zero(), "Burnside sum must be divisible by |W|");
    let burnside_total = sum / &order;
    let exps = rs.exponents();
    let mut pt = BigInt::one();
    let mut pf = BigInt::one();
    for m in &exps {
        pt *= BigInt::from(n + *m as i64);
        pf *= BigInt::from(n - *m as i64);
    }
    assert!((&pt % &order).is_zero() && (&pf % &order).is_zero(), "product formulas must be integral");
    Ok(BurnsideCount { burnside_total, product_total: pt / &order, product_free: pf / &order })
}

/// Whittaker dimensions of the theta and Steinberg representations:
/// (prod (n - m_j)/|W|, prod (n + m_j)/|W|) = (free orbits, all orbits).
pub fn whittaker_dims(rs: &RootSystem, n: i64) -> Result<(BigInt, BigInt), ArrangementError> {
    let b = burnside_count(rs, n)?;
    Ok((b.product_free, b.product_total))
}

/// Same closed forms from a bare exponent list (for systems whose root
/// datum is not constructed, e.g. large exceptional types used as test
/// vectors). |W| is taken as prod (1 + m_j).
pub fn whittaker_dims_from_exponents(exponents: &[usize], n: i64) -> (BigInt, BigInt) {
    let mut order = BigInt::one();
    let mut pt = BigInt::one();
    let mut pf = BigInt::one();
    for &m in exponents {
        order *= BigInt::from(m as i64 + 1);
        pt *= BigInt::from(n + m as i64);
        pf *= BigInt::from(n - m as i64);
    }
    assert!((&pt % &order).is_zero() && (&pf % &order).is_zero());
    (pf / &order, pt / &order)
}

/// Stability: existence of a free W-orbit in Y/nY; equivalent to n > m_r.
pub fn is_stable(rs: &RootSystem, n: i64) -> Result<bool, ArrangementError> {
    let (free, _) = whittaker_dims(rs, n)?;
    Ok(free > BigInt::zero())
}

/// One conjugacy class of standard parabolic subgroups of W.
#[derive(Debug, Clone)]
pub struct ParabolicClass {
    /// 0-based indices of simple reflections of a representative subset.
    pub representative_subset: Vec<usize>,
    pub order: usize,
    /// number of subsets of simple roots in the class
    pub class_size: usize,
}

/// Conjugacy classes of standard parabolic subgroups, by brute-force
/// conjugation of generated subgroups.
pub fn parabolic_classes(rs: &RootSystem) -> Vec<ParabolicClass> {
    let r = rs.rank;
    let group = rs.weyl_group();
    let subsets: Vec<Vec<usize>> = (0..(1usize << r))
        .map(|mask| (0..r).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    let elems_of = |subset: &[usize]| -> BTreeSet<Vec<Vec<i64>>> {
        let gens: Vec<WeylElement> = subset.iter().map(|&i| rs.simple_reflections[i].clone()).collect();
        let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
        let id = WeylElement::identity(r);
        seen.insert(id.matrix.clone());
        let mut frontier = vec![id];
        while let Some(w) = frontier.pop() {
            for g in &gens {
                let x = w.compose(g);
                if seen.insert(x.matrix.clone()) {
                    frontier.push(x);
                }
            }
        }
        seen
    };
    let all_subgroups: Vec<BTreeSet<Vec<Vec<i64>>>> = subsets.iter().map(|s| elems_of(s)).collect();
    let mut classes: Vec<(usize, Vec<usize>)> = Vec::new(); // (subset index, members)
    let mut assigned = vec![false; subsets.len()];
    for i in 0..subsets.len() {
        if assigned[i] {
            continue;
        }
        let mut members = vec![i];
        assigned[i] = true;
        for j in i + 1..subsets.len() {
            if assigned[j] || all_subgroups[j].len() != all_subgroups[i].len() {
                continue;
            }
            // conjugate subgroup j by every w, compare to subgroup i
            let conj_match = group.iter().any(|w| {
                let winv = group.iter().find(|u| w.compose(u).is_identity()).unwrap();
                all_subgroups[j]
                    .iter()
                    .all(|m| all_subgroups[i].contains(&w.compose(&WeylElement { matrix: m.clone() }).compose(winv).matrix))
            });
            if conj_match {
                assigned[j] = true;
                members.push(j);
            }
        }
        classes.push((i, members));
    }
    classes
        .into_iter()
        .map(|(i, members)| ParabolicClass {
            representative_subset: subsets[i].clone(),
            order: all_subgroups[i].len(),
            class_size: members.len(),
        })
        .collect()
}

/// Multiplicities m_i(n) in the decomposition of the permutation character
/// n^{d(w)} into induced-trivial characters of parabolic classes.
pub fn sommers_multiplicities(rs: &RootSystem, n: i64) -> Result<Vec<(ParabolicClass, BigInt)>, ArrangementError> {
    check_modulus(rs, n)?;
    let group = rs.weyl_group();
    let classes = parabolic_classes(rs);
    // characters as functions on group elements (indexed by position)
    let nn = BigInt::from(n);
    let sigma: Vec<BigInt> = group.iter().map(|w| nn.pow(w.fixed_dim() as u32)).collect();
    // chi_{Ind_P^W 1}(w) = #{u in W : u^{-1} w u in P} / |P|
    let mut ind_chars: Vec<Vec<BigInt>> = Vec::new();
    for cls in &classes {
        let p_elems = {
            let gens: Vec<WeylElement> =
                cls.representative_subset.iter().map(|&i| rs.simple_reflections[i].clone()).collect();
            let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
            let id = WeylElement::identity(rs.rank);
            seen.insert(id.matrix.clone());
            let mut frontier = vec![id];
            while let Some(w) = frontier.pop() {
                for g in &gens {
                    let x = w.compose(g);
                    if seen.insert(x.matrix.clone()) {
                        frontier.push(x);
                    }
                }
            }
            seen
        };
        let inverses: BTreeMap<Vec<Vec<i64>>, WeylElement> = group
            .iter()
            .map(|u| {
                let ui = group.iter().find(|v| u.compose(v).is_identity()).unwrap().clone();
                (u.matrix.clone(), ui)
            })
            .collect();
        let chi: Vec<BigInt> = group
            .iter()
            .map(|w| {
                let count = group
                    .iter()
                    .filter(|u| {
                        let ui = &inverses[&u.matrix];
                        p_elems.contains(&ui.compose(w).compose(u).matrix)
                    })
                    .count();
                BigInt::from(count / p_elems.len())
            })
            .collect();
        ind_chars.push(chi);
    }
    // Solve sigma = sum_i m_i * chi_i exactly (overdetermined, consistent).
    let k = classes.len();
    let mut m: Vec<Vec<BigRational>> = group
        .iter()
        .enumerate()
        .map(|(gi, _)| {
            let mut row: Vec<BigRational> =
                (0..k).map(|ci| BigRational::from_integer(ind_chars[ci][gi].clone())).collect();
            row.push(BigRational::from_integer(sigma[gi].clone()));
            row
        })
        .collect();
    let rank = rref_rows_solve(&mut m);
    // read off solution; require unique (rank == k) and consistency
    if rank != k {
        return Err(ArrangementError::NoNonnegativeSolution);
    }
    let mut sol = vec![BigRational::zero(); k];
    for row in m.iter().take(rank) {
        let lead = (0..k).find(|&j| !row[j].is_zero());
        if let Some(j) = lead {
            sol[j] = row[k].clone();
        } else if !row[k].is_zero() {
            return Err(ArrangementError::NoNonnegativeSolution);
        }
    }
    let mut out = Vec::new();
    for (cls, v) in classes.into_iter().zip(sol) {
        if !v.denom().is_one() || v.is_negative() {
            return Err(ArrangementError::NoNonnegativeSolution);
        }
        out.push((cls, v.to_integer()));
    }
    Ok(out)
}

fn rref_rows_solve(m: &mut Vec<Vec<BigRational>>) -> usize {
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for col in 0..ncols.saturating_sub(1) {
        let p = (rank..nrows).find(|&i| !m[i][col].is_zero());
        let Some(p) = p else { continue };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for j in 0..ncols {
            m[rank][j] = &m[rank][j] * &inv;
        }
        for i in 0..nrows {
            if i != rank && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..ncols {
                    let t = &m[rank][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, CartanType};

    #[test]
    fn lattice_a1_a2_b2() {
        let a1 = build_root_system(CartanType::A, 1).unwrap();
        let lat = build_lattice(&a1).unwrap();
        assert_eq!(lat.elements.len(), 2);
        assert_eq!(lat.mobius[1], BigInt::from(-1));

        let a2 = build_root_system(CartanType::A, 2).unwrap();
        let lat = build_lattice(&a2).unwrap();
        assert_eq!(lat.elements.len(), 5); // ambient, 3 lines, origin
        let origin = lat.elements.iter().position(|s| s.dim == 0).unwrap();
        assert_eq!(lat.mobius[origin], BigInt::from(2));

        let b2 = build_root_system(CartanType::B, 2).unwrap();
        let lat = build_lattice(&b2).unwrap();
        assert_eq!(lat.elements.len(), 6); // ambient, 4 lines, origin
        let origin = lat.elements.iter().position(|s| s.dim == 0).unwrap();
        assert_eq!(lat.mobius[origin], BigInt::from(3));
    }

    #[test]
    fn char_polys() {
        let cases = [
            (CartanType::A, 1, vec![-1i64, 1]),
            (CartanType::A, 2, vec![2, -3, 1]),
            (CartanType::G2, 2, vec![5, -6, 1]),
            (CartanType::B, 2, vec![3, -4, 1]),
        ];
        for (t, r, coeffs) in cases {
            let rs = build_root_system(t, r).unwrap();
            let lat = build_lattice(&rs).unwrap();
            assert_eq!(char_poly(&lat), IntPoly::from_i64(&coeffs), "{t:?}{r}");
        }
    }

    #[test]
    fn char_poly_equals_exponent_product() {
        for (t, r) in [
            (CartanType::A, 1),
            (CartanType::A, 2),
            (CartanType::A, 3),
            (CartanType::B, 2),
            (CartanType::B, 3),
            (CartanType::G2, 2),
            (CartanType::D, 4),
        ] {
            let rs = build_root_system(t, r).unwrap();
            let lat = build_lattice(&rs).unwrap();
            let expect = IntPoly::from_roots(
                &rs.exponents().iter().map(|&m| BigInt::from(m as i64)).collect::<Vec<_>>(),
            );
            assert_eq!(char_poly(&lat), expect, "{t:?}{r}");
            assert!(orlik_solomon_identity_holds(&rs, &lat), "{t:?}{r}");
        }
    }

    #[test]
    fn ep_polys() {
        let a2 = build_root_system(CartanType::A, 2).unwrap();
        assert_eq!(ep_poly(&a2), IntPoly::from_i64(&[1, 3, 2]));
        let a1 = build_root_system(CartanType::A, 1).unwrap();
        assert_eq!(ep_poly(&a1), IntPoly::from_i64(&[1, 1]));
        let b2 = build_root_system(CartanType::B, 2).unwrap();
        assert_eq!(ep_poly(&b2), IntPoly::from_i64(&[1, 4, 3]));
    }

    #[test]
    fn orbit_tables_small() {
        let a1 = build_root_system(CartanType::A, 1).unwrap();
        let t = orbit_table(&a1, 3, 10_000_000).unwrap();
        assert_eq!(t.total, 2);
        assert_eq!(t.free, 1);
        let t1 = orbit_table(&a1, 1, 10_000_000).unwrap();
        assert_eq!((t1.total, t1.free), (1, 0));
    }

    #[test]
    fn burnside_matches_products_and_enumeration() {
        let g2 = build_root_system(CartanType::G2, 2).unwrap();
        let b = burnside_count(&g2, 7).unwrap();
        assert_eq!(b.burnside_total, BigInt::from(8));
        assert_eq!(b.product_total, BigInt::from(8));
        assert_eq!(b.product_free, BigInt::from(1));
        let t = orbit_table(&g2, 7, 10_000_000).unwrap();
        assert_eq!(t.total, 8);
        assert_eq!(t.free, 1);

        let a2 = build_root_system(CartanType::A, 2).unwrap();
        let b = burnside_count(&a2, 5).unwrap();
        assert_eq!(b.product_total, BigInt::from(7));
        assert_eq!(b.product_free, BigInt::from(2));
        let t = orbit_table(&a2, 5, 10_000_000).unwrap();
        assert_eq!((t.total, t.free), (7, 2));
    }

    #[test]
    fn bad_modulus_rejected() {
        let a2 = build_root_system(CartanType::A, 2).unwrap();
        assert!(matches!(burnside_count(&a2, 2), Err(ArrangementError::BadModulus(..))));
    }

    #[test]
    fn whittaker_e8_vector() {
        // E8 exponents; at n = 31 the theta dimension is exactly 1 and
        // every admissible smaller n hits an exponent (dimension 0).
        let e8 = [1usize, 7, 11, 13, 17, 19, 23, 29];
        let (theta, st) = whittaker_dims_from_exponents(&e8, 31);
        assert_eq!(theta, BigInt::from(1));
        assert!(st > BigInt::zero());
        for n in [1i64, 11, 13, 17, 19, 23, 29] {
            let (theta, _) = whittaker_dims_from_exponents(&e8, n);
            assert_eq!(theta, BigInt::zero(), "n={n}");
        }
    }

    #[test]
    fn stability_examples() {
        let a1 = build_root_system(CartanType::A, 1).unwrap();
        assert!(is_stable(&a1, 3).unwrap());
        let g2 = build_root_system(CartanType::G2, 2).unwrap();
        assert!(is_stable(&g2, 7).unwrap());
        assert!(!is_stable(&g2, 5).unwrap()); // 5 = m_2 not > 5
    }

    #[test]
    fn sommers_small() {
        let a1 = build_root_system(CartanType::A, 1).unwrap();
        let ms = sommers_multiplicities(&a1, 3).unwrap();
        // classes: {1} and W; both multiplicity 1 at n = 3
        let mut by_order: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (cls, m) in ms {
            by_order.insert(cls.order, m);
        }
        assert_eq!(by_order[&1], BigInt::from(1));
        assert_eq!(by_order[&2], BigInt::from(1));

        let ms1 = sommers_multiplicities(&a1, 1).unwrap();
        let by_order: BTreeMap<usize, BigInt> =
            ms1.into_iter().map(|(c, m)| (c.order, m)).collect();
        assert_eq!(by_order[&1], BigInt::from(0));
        assert_eq!(by_order[&2], BigInt::from(1));

        // A2 at n = 5: trivial-parabolic multiplicity = free orbit count = 2
        let a2 = build_root_system(CartanType::A, 2).unwrap();
        let ms = sommers_multiplicities(&a2, 5).unwrap();
        let trivial = ms.iter().find(|(c, _)| c.order == 1).unwrap();
        assert_eq!(trivial.1, BigInt::from(2));
    }

    #[test]
    fn sommers_reproduces_character() {
        for (t, r, n) in [(CartanType::A, 2, 5i64), (CartanType::B, 2, 3), (CartanType::G2, 2, 7)] {
            let rs = build_root_system(t, r).unwrap();
            let ms = sommers_multiplicities(&rs, n).unwrap();
            let group = rs.weyl_group();
            for w in &group {
                let want = BigInt::from(n).pow(w.fixed_dim() as u32);
                let mut got = BigRational::zero();
                for (cls, mult) in &ms {
                    // recompute chi_Ind on the fly
                    let gens: Vec<WeylElement> =
                        cls.representative_subset.iter().map(|&i| rs.simple_reflections[i].clone()).collect();
                    let mut p: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
                    let id = WeylElement::identity(rs.rank);
                    p.insert(id.matrix.clone());
                    let mut fr = vec![id];
                    while let Some(x) = fr.pop() {
                        for g in &gens {
                            let y = x.compose(g);
                            if p.insert(y.matrix.clone()) {
                                fr.push(y);
                            }
                        }
                    }
                    let fixed = group
                        .iter()
                        .filter(|u| {
                            let ui = group.iter().find(|v| u.compose(v).is_identity()).unwrap();
                            p.contains(&ui.compose(w).compose(u).matrix)
                        })
                        .count()
                        / p.len();
                    got += BigRational::from_integer(BigInt::from(fixed) * mult);
                }
                assert_eq!(got, BigRational::from_integer(want));
            }
        }
    }
}
