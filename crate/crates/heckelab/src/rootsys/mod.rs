//! Root systems, Weyl groups, exponents, and the extended affine Weyl
//! group of GL_r with its length function.
//!
//! The Weyl group acts on the coroot lattice Y (Z-spanned by the simple
//! coroots); all matrices are written in the simple-coroot basis.

pub mod intpoly;

use crate::perm::Perm;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

pub use intpoly::{cyclotomic, IntPoly};

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum RootSysError {
    #[error("unsupported root system {0}{1}")]
    UnsupportedType(char, usize),
    #[error("Weyl group order exceeds bound {0}")]
    GroupTooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    G2,
    F4,
}

impl CartanType {
    pub fn letter(&self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::G2 => 'G',
            CartanType::F4 => 'F',
        }
    }

    pub fn parse(s: &str) -> Option<CartanType> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Some(CartanType::A),
            "B" => Some(CartanType::B),
            "C" => Some(CartanType::C),
            "D" => Some(CartanType::D),
            "G" | "G2" => Some(CartanType::G2),
            "F" | "F4" => Some(CartanType::F4),
            _ => None,
        }
    }
}

/// An element of the Weyl group as an integer matrix on the coroot lattice.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(r: usize) -> Self {
        WeylElement { matrix: (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect() }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let r = self.rank();
        let mut m = vec![vec![0i64; r]; r];
        for i in 0..r {
            for k in 0..r {
                if self.matrix[i][k] == 0 {
                    continue;
                }
                for j in 0..r {
                    m[i][j] += self.matrix[i][k] * other.matrix[k][j];
                }
            }
        }
        WeylElement { matrix: m }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let r = self.rank();
        (0..r).map(|i| (0..r).map(|j| self.matrix[i][j] * v[j]).sum()).collect()
    }

    pub fn apply_mod(&self, v: &[i64], n: i64) -> Vec<i64> {
        self.apply(v).into_iter().map(|x| x.rem_euclid(n)).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank())
    }

    /// Dimension of the fixed subspace: r - rank(M - I) over the rationals.
    pub fn fixed_dim(&self) -> usize {
        let r = self.rank();
        let mut m: Vec<Vec<BigRational>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| BigRational::from_integer(BigInt::from(self.matrix[i][j] - i64::from(i == j))))
                    .collect()
            })
            .collect();
        r - rational_rank(&mut m)
    }

    /// determinant sign, i.e. the sign character.
    pub fn det_sign(&self) -> i64 {
        let r = self.rank();
        let mut m: Vec<Vec<BigRational>> =
            (0..r).map(|i| (0..r).map(|j| BigRational::from_integer(BigInt::from(self.matrix[i][j]))).collect()).collect();
        let mut det = BigRational::one();
        for col in 0..r {
            let p = (col..r).find(|&i| !m[i][col].is_zero());
            let Some(p) = p else { return 0 };
            if p != col {
                m.swap(col, p);
                det = -det;
            }
            det *= m[col][col].clone();
            let inv = m[col][col].recip();
            for i in col + 1..r {
                if m[i][col].is_zero() {
                    continue;
                }
                let f = &m[i][col] * &inv;
                for j in col..r {
                    let t = &m[col][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        if det.is_positive() {
            1
        } else {
            -1
        }
    }
}

fn rational_rank(m: &mut Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for col in 0..cols {
        let p = (rank..rows).find(|&i| !m[i][col].is_zero());
        let Some(p) = p else { continue };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for j in col..cols {
            m[rank][j] = &m[rank][j] * &inv;
        }
        for i in 0..rows {
            if i != rank && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..cols {
                    let t = &m[rank][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub rank: usize,
    /// cartan[i][j] = <alpha_i, alpha_j^vee>
    pub cartan: Vec<Vec<i64>>,
    /// simple reflections acting on the coroot lattice
    pub simple_reflections: Vec<WeylElement>,
    /// primitive integer covectors of the reflection hyperplanes
    /// (one per positive root), deduplicated up to sign
    pub positive_roots: Vec<Vec<i64>>,
    pub weyl_order: usize,
}

/// Supported (type, rank) table.
fn cartan_matrix(t: CartanType, rank: usize) -> Result<Vec<Vec<i64>>, RootSysError> {
    let chain = |r: usize| -> Vec<Vec<i64>> {
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            2
                        } else if i.abs_diff(j) == 1 {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let err = RootSysError::UnsupportedType(t.letter(), rank);
    match t {
        CartanType::A => {
            if (1..=4).contains(&rank) {
                Ok(chain(rank))
            } else {
                Err(err)
            }
        }
        CartanType::B => {
            if (2..=3).contains(&rank) {
                let mut c = chain(rank);
                // alpha_{r-1} long, alpha_r short: <alpha_{r-1}, alpha_r^vee> = -2
                c[rank - 2][rank - 1] = -2;
                Ok(c)
            } else {
                Err(err)
            }
        }
        CartanType::C => {
            if (2..=3).contains(&rank) {
                let mut c = chain(rank);
                c[rank - 1][rank - 2] = -2;
                Ok(c)
            } else {
                Err(err)
            }
        }
        CartanType::D => {
            if rank == 4 {
                // node 2 (index 1) is the branch node
                let mut c = vec![vec![0i64; 4]; 4];
                for i in 0..4 {
                    c[i][i] = 2;
                }
                for &(i, j) in &[(0usize, 1usize), (1, 2), (1, 3)] {
                    c[i][j] = -1;
                    c[j][i] = -1;
                }
                Ok(c)
            } else {
                Err(err)
            }
        }
        CartanType::G2 => {
            if rank == 2 {
                Ok(vec![vec![2, -1], vec![-3, 2]])
            } else {
                Err(err)
            }
        }
        CartanType::F4 => {
            if rank == 4 {
                let mut c = chain(4);
                c[1][2] = -2;
                Ok(c)
            } else {
                Err(err)
            }
        }
    }
}

pub fn build_root_system(t: CartanType, rank: usize) -> Result<RootSystem, RootSysError> {
    let cartan = cartan_matrix(t, rank)?;
    let simple_reflections: Vec<WeylElement> = (0..rank)
        .map(|i| {
            let mut m = WeylElement::identity(rank).matrix;
            for j in 0..rank {
                m[i][j] -= cartan[i][j];
            }
            WeylElement { matrix: m }
        })
        .collect();
    let group = enumerate_group(&simple_reflections, 2000)?;
    let mut roots = BTreeSet::new();
    for w in &group {
        if w.fixed_dim() == rank - 1 && !w.is_identity() && w.compose(w).is_identity() {
            roots.insert(reflection_covector(w));
        }
    }
    Ok(RootSystem {
        cartan_type: t,
        rank,
        cartan,
        simple_reflections,
        positive_roots: roots.into_iter().collect(),
        weyl_order: group.len(),
    })
}

/// Primitive covector of the reflecting hyperplane, sign-normalized.
fn reflection_covector(w: &WeylElement) -> Vec<i64> {
    let r = w.rank();
    // rows of (M - I) are multiples of the root covector
    for i in 0..r {
        let mut row: Vec<i64> = (0..r).map(|j| w.matrix[i][j] - i64::from(i == j)).collect();
        if row.iter().any(|&x| x != 0) {
            let mut g = 0i64;
            for &x in &row {
                g = num_integer::gcd(g, x.abs());
            }
            for x in row.iter_mut() {
                *x /= g;
            }
            if row.iter().find(|&&x| x != 0).map_or(false, |&x| x < 0) {
                for x in row.iter_mut() {
                    *x = -*x;
                }
            }
            return row;
        }
    }
    unreachable!("reflection equals identity");
}

fn enumerate_group(gens: &[WeylElement], bound: usize) -> Result<Vec<WeylElement>, RootSysError> {
    let r = gens.first().map_or(0, |g| g.rank());
    let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    let id = WeylElement::identity(r);
    seen.insert(id.matrix.clone());
    let mut frontier = vec![id];
    let mut all = Vec::new();
    while let Some(w) = frontier.pop() {
        all.push(w.clone());
        if all.len() > bound {
            return Err(RootSysError::GroupTooLarge(bound));
        }
        for g in gens {
            let n = w.compose(g);
            if seen.insert(n.matrix.clone()) {
                frontier.push(n);
            }
        }
    }
    all.sort();
    Ok(all)
}

impl RootSystem {
    /// Full Weyl group, enumerated by closure of the simple reflections.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        enumerate_group(&self.simple_reflections, 2000).expect("order verified at construction")
    }

    /// All reflections (elements fixing a hyperplane).
    pub fn reflections(&self) -> Vec<WeylElement> {
        self.weyl_group()
            .into_iter()
            .filter(|w| !w.is_identity() && w.fixed_dim() == self.rank - 1 && w.compose(w).is_identity())
            .collect()
    }

    /// Exponents m_1 <= ... <= m_r from the eigenvalue arguments of a
    /// Coxeter element, recognized exactly through cyclotomic factors of
    /// its characteristic polynomial.
    pub fn exponents(&self) -> Vec<usize> {
        let mut cox = WeylElement::identity(self.rank);
        for s in &self.simple_reflections {
            cox = cox.compose(s);
        }
        // order of the Coxeter element = Coxeter number h
        let mut h = 1;
        let mut p = cox.clone();
        while !p.is_identity() {
            p = p.compose(&cox);
            h += 1;
            assert!(h < 1000, "runaway Coxeter order");
        }
        let charpoly = char_poly_int(&cox);
        let mut rem = charpoly;
        let mut exps: Vec<usize> = Vec::new();
        for d in 1..=h {
            if h % d != 0 {
                continue;
            }
            let phi = cyclotomic(d);
            loop {
                match rem.exact_div(&phi) {
                    Some(q) => {
                        for a in 1..=d {
                            if num_integer::gcd(a, d) == 1 {
                                exps.push(a * (h / d));
                            }
                        }
                        rem = q;
                    }
                    None => break,
                }
            }
        }
        assert_eq!(rem.degree(), 0, "characteristic polynomial fully cyclotomic");
        assert_eq!(exps.len(), self.rank);
        assert!(!exps.contains(&0), "Coxeter element has no fixed vectors");
        exps.sort_unstable();
        exps
    }

    pub fn coxeter_number(&self) -> usize {
        let e = self.exponents();
        e[e.len() - 1] + 1
    }
}

/// Characteristic polynomial det(XI - M) of a small integer matrix,
/// computed exactly by cofactor expansion over a polynomial ring.
fn char_poly_int(w: &WeylElement) -> IntPoly {
    let r = w.rank();
    // entries are degree <= 1 polynomials; expand recursively
    let entries: Vec<Vec<IntPoly>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let c = -w.matrix[i][j];
                    if i == j {
                        IntPoly::from_coeffs(vec![BigInt::from(c), BigInt::one()])
                    } else {
                        IntPoly::from_coeffs(vec![BigInt::from(c)])
                    }
                })
                .collect()
        })
        .collect();
    poly_det(&entries)
}

fn poly_det(m: &[Vec<IntPoly>]) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::from_i64(&[1]);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = IntPoly::zero();
    for (j, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<IntPoly>> =
            (1..n).map(|i| (0..n).filter(|&k| k != j).map(|k| m[i][k].clone()).collect()).collect();
        let term = top.mul(&poly_det(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

// ---------------------------------------------------------------------------
// Extended affine Weyl group of GL_r
// ---------------------------------------------------------------------------

/// Element t_y . w of Z^r x| S_r (type A / GL_r only).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtAffineElement {
    pub translation: Vec<i64>,
    pub finite: Perm,
}

impl ExtAffineElement {
    pub fn identity(r: usize) -> Self {
        ExtAffineElement { translation: vec![0; r], finite: Perm::identity(r) }
    }

    pub fn translation(y: Vec<i64>) -> Self {
        let r = y.len();
        ExtAffineElement { translation: y, finite: Perm::identity(r) }
    }

    pub fn finite(w: Perm) -> Self {
        let r = w.r();
        ExtAffineElement { translation: vec![0; r], finite: w }
    }

    pub fn r(&self) -> usize {
        self.translation.len()
    }

    /// (y1, w1) . (y2, w2) = (y1 + w1 y2, w1 w2).
    pub fn compose(&self, other: &ExtAffineElement) -> ExtAffineElement {
        let moved = self.finite.act_left(&other.translation);
        let y: Vec<i64> = self.translation.iter().zip(&moved).map(|(a, b)| a + b).collect();
        ExtAffineElement { translation: y, finite: self.finite.compose(&other.finite) }
    }

    pub fn inverse(&self) -> ExtAffineElement {
        let wi = self.finite.inverse();
        let y: Vec<i64> = wi.act_left(&self.translation).iter().map(|&a| -a).collect();
        ExtAffineElement { translation: y, finite: wi }
    }

    /// The length-0 rotation pi = t_{e_1} . c with c the r-cycle i -> i+1.
    pub fn pi(r: usize) -> ExtAffineElement {
        let mut y = vec![0i64; r];
        y[0] = 1;
        ExtAffineElement { translation: y, finite: Perm((0..r).map(|i| (i + 1) % r).collect()) }
    }
}

/// Iwahori-Matsumoto closed form for the word length of t_y . w in the
/// Coxeter generators T_0..T_{r-1} (pi is free).
pub fn ext_length(e: &ExtAffineElement) -> u64 {
    let r = e.r();
    let winv = e.finite.inverse();
    let mut l: i64 = 0;
    for i in 0..r {
        for j in i + 1..r {
            let pairing = e.translation[i] - e.translation[j];
            if winv.apply(i) < winv.apply(j) {
                l += pairing.abs();
            } else {
                l += (pairing - 1).abs();
            }
        }
    }
    l as u64
}

/// Breadth-first word length over generators {T_0..T_{r-1}} (cost 1) and
/// pi^{+-1} (cost 0), exploring inside a translation box. Oracle for
/// [`ext_length`] on small elements.
pub fn ext_length_bfs(target: &ExtAffineElement, box_bound: i64) -> Option<u64> {
    use std::collections::{HashMap, VecDeque};
    let r = target.r();
    let mut gens_cost1 = Vec::new();
    for k in 1..r {
        gens_cost1.push(ExtAffineElement::finite(Perm::simple(k, r)));
    }
    if r >= 2 {
        // s_0 = t_{theta^vee} s_theta with theta^vee = e_1 - e_r
        let mut y = vec![0i64; r];
        y[0] = 1;
        y[r - 1] = -1;
        let mut v: Vec<usize> = (0..r).collect();
        v.swap(0, r - 1);
        gens_cost1.push(ExtAffineElement { translation: y, finite: Perm(v) });
    }
    let pi = ExtAffineElement::pi(r);
    let gens_cost0 = [pi.clone(), pi.inverse()];

    let inside = |e: &ExtAffineElement| e.translation.iter().all(|&t| t.abs() <= box_bound);
    let mut dist: HashMap<ExtAffineElement, u64> = HashMap::new();
    let mut dq: VecDeque<ExtAffineElement> = VecDeque::new();
    let id = ExtAffineElement::identity(r);
    dist.insert(id.clone(), 0);
    dq.push_back(id);
    while let Some(e) = dq.pop_front() {
        let d = dist[&e];
        if &e == target {
            return Some(d);
        }
        for g in &gens_cost0 {
            let n = e.compose(g);
            if inside(&n) && !dist.contains_key(&n) {
                dist.insert(n.clone(), d);
                dq.push_front(n);
            }
        }
        for g in &gens_cost1 {
            let n = e.compose(g);
            if inside(&n) && !dist.contains_key(&n) {
                dist.insert(n.clone(), d + 1);
                dq.push_back(n);
            }
        }
    }
    dist.get(target).copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_data() {
        let a2 = build_root_system(CartanType::A, 2).unwrap();
        assert_eq!(a2.positive_roots.len(), 3);
        assert_eq!(a2.weyl_order, 6);
        let g2 = build_root_system(CartanType::G2, 2).unwrap();
        assert_eq!(g2.positive_roots.len(), 6);
        assert_eq!(g2.weyl_order, 12);
        let b2 = build_root_system(CartanType::B, 2).unwrap();
        assert_eq!(b2.positive_roots.len(), 4);
        assert_eq!(b2.weyl_order, 8);
        assert!(build_root_system(CartanType::A, 9).is_err());
    }

    #[test]
    fn group_sizes() {
        assert_eq!(build_root_system(CartanType::A, 1).unwrap().weyl_group().len(), 2);
        assert_eq!(build_root_system(CartanType::A, 2).unwrap().weyl_group().len(), 6);
        // D4: cross-check prod(1 + m_j) with exponents 1,3,3,5
        let d4 = build_root_system(CartanType::D, 4).unwrap();
        assert_eq!(d4.weyl_group().len(), 192);
        assert_eq!(d4.exponents(), vec![1, 3, 3, 5]);
        assert_eq!(2 * 4 * 4 * 6, 192);
    }

    #[test]
    fn exponents_from_coxeter_eigenvalues() {
        assert_eq!(build_root_system(CartanType::A, 2).unwrap().exponents(), vec![1, 2]);
        assert_eq!(build_root_system(CartanType::A, 3).unwrap().exponents(), vec![1, 2, 3]);
        assert_eq!(build_root_system(CartanType::B, 2).unwrap().exponents(), vec![1, 3]);
        assert_eq!(build_root_system(CartanType::B, 3).unwrap().exponents(), vec![1, 3, 5]);
        assert_eq!(build_root_system(CartanType::C, 3).unwrap().exponents(), vec![1, 3, 5]);
        let g2 = build_root_system(CartanType::G2, 2).unwrap();
        assert_eq!(g2.exponents(), vec![1, 5]);
        assert_eq!((1 + 1) * (1 + 5), g2.weyl_order);
        assert_eq!(build_root_system(CartanType::F4, 4).unwrap().exponents(), vec![1, 5, 7, 11]);
    }

    #[test]
    fn weyl_order_formula() {
        for (t, r) in [
            (CartanType::A, 1),
            (CartanType::A, 2),
            (CartanType::A, 3),
            (CartanType::A, 4),
            (CartanType::B, 2),
            (CartanType::B, 3),
            (CartanType::C, 3),
            (CartanType::D, 4),
            (CartanType::G2, 2),
            (CartanType::F4, 4),
        ] {
            let rs = build_root_system(t, r).unwrap();
            let prod: usize = rs.exponents().iter().map(|m| m + 1).product();
            assert_eq!(prod, rs.weyl_order, "{t:?}{r}");
        }
    }

    #[test]
    fn fixed_dims() {
        let a2 = build_root_system(CartanType::A, 2).unwrap();
        assert_eq!(WeylElement::identity(2).fixed_dim(), 2);
        assert_eq!(a2.simple_reflections[0].fixed_dim(), 1);
        let cox = a2.simple_reflections[0].compose(&a2.simple_reflections[1]);
        assert_eq!(cox.fixed_dim(), 0);
    }

    #[test]
    fn roots_permuted_by_group() {
        for (t, r) in [(CartanType::A, 3), (CartanType::B, 2), (CartanType::G2, 2)] {
            let rs = build_root_system(t, r).unwrap();
            let roots: BTreeSet<Vec<i64>> = rs.positive_roots.iter().cloned().collect();
            for w in rs.weyl_group() {
                // covectors transform by the inverse transpose; on the
                // reflection set it is enough that conjugation permutes
                // the associated hyperplanes
                for refl in rs.reflections() {
                    let conj = w.compose(&refl).compose(&w.clone().inverse_via_group(&rs));
                    let cv = reflection_covector(&conj);
                    assert!(roots.contains(&cv));
                }
                break; // one nontrivial sample per system keeps this cheap
            }
        }
    }

    impl WeylElement {
        fn inverse_via_group(self, rs: &RootSystem) -> WeylElement {
            for w in rs.weyl_group() {
                if self.compose(&w).is_identity() {
                    return w;
                }
            }
            panic!("no inverse found");
        }
    }

    #[test]
    fn ext_lengths_closed_form() {
        // (0, id) and basic generators in GL_2
        assert_eq!(ext_length(&ExtAffineElement::identity(2)), 0);
        assert_eq!(ext_length(&ExtAffineElement::finite(Perm::simple(1, 2))), 1);
        assert_eq!(ext_length(&ExtAffineElement::translation(vec![1, 0])), 1);
        assert_eq!(ext_length(&ExtAffineElement::translation(vec![1, 1])), 0);
        assert_eq!(ext_length(&ExtAffineElement::pi(2)), 0);
        assert_eq!(ext_length(&ExtAffineElement::pi(3)), 0);
    }

    #[test]
    fn ext_length_matches_bfs_gl2_gl3() {
        for r in [2usize, 3] {
            let pi = ExtAffineElement::pi(r);
            // enumerate elements with closed-form length <= 6 inside a box
            let mut elems = vec![ExtAffineElement::identity(r)];
            let mut seen: BTreeSet<ExtAffineElement> = elems.iter().cloned().collect();
            let mut gens: Vec<ExtAffineElement> = (1..r).map(|k| ExtAffineElement::finite(Perm::simple(k, r))).collect();
            gens.push(pi.clone());
            gens.push(pi.inverse());
            if r >= 2 {
                let mut y = vec![0i64; r];
                y[0] = 1;
                y[r - 1] = -1;
                let mut v: Vec<usize> = (0..r).collect();
                v.swap(0, r - 1);
                gens.push(ExtAffineElement { translation: y, finite: Perm(v) });
            }
            let mut idx = 0;
            while idx < elems.len() {
                let e = elems[idx].clone();
                idx += 1;
                for g in &gens {
                    let n = e.compose(g);
                    if ext_length(&n) <= 4
                        && n.translation.iter().all(|&t| t.abs() <= 3)
                        && seen.insert(n.clone())
                    {
                        elems.push(n);
                    }
                }
            }
            for e in &elems {
                let closed = ext_length(e);
                let bfs = ext_length_bfs(e, 8).expect("reachable");
                assert_eq!(closed, bfs, "r={r} elem={e:?}");
                // symmetry under inversion
                assert_eq!(closed, ext_length(&e.inverse()));
            }
            // subadditivity spot checks
            for a in elems.iter().take(12) {
                for b in elems.iter().take(12) {
                    assert!(ext_length(&a.compose(b)) <= ext_length(a) + ext_length(b));
                }
            }
        }
    }
}
