//! Dense exact linear algebra over the rational-function field.

use crate::coeff::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub nvars: usize,
    a: Vec<RatFunc>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize, nvars: usize) -> Self {
        Mat { rows, cols, nvars, a: vec![RatFunc::zero(nvars); rows * cols] }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zero(n, n, nvars);
        for i in 0..n {
            m[(i, i)] = RatFunc::one(nvars);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, nvars: usize, f: impl Fn(usize, usize) -> RatFunc) -> Self {
        let mut m = Self::zero(rows, cols, nvars);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert!(self.rows == o.rows && self.cols == o.cols);
        let mut m = self.clone();
        for (x, y) in m.a.iter_mut().zip(&o.a) {
            *x = x.add_ref(y);
        }
        m
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert!(self.rows == o.rows && self.cols == o.cols);
        let mut m = self.clone();
        for (x, y) in m.a.iter_mut().zip(&o.a) {
            *x = x.sub_ref(y);
        }
        m
    }

    pub fn scale(&self, c: &RatFunc) -> Mat {
        let mut m = self.clone();
        for x in m.a.iter_mut() {
            *x = x.mul_ref(c);
        }
        m
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "matrix dimension mismatch");
        let mut m = Mat::zero(self.rows, o.cols, self.nvars);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lik = &self[(i, k)];
                if lik.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let r = &o[(k, j)];
                    if r.is_zero() {
                        continue;
                    }
                    m[(i, j)] = m[(i, j)].add_ref(&lik.mul_ref(r));
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, self.nvars, |i, j| self[(j, i)].clone())
    }

    /// Kronecker (tensor) product.
    pub fn kron(&self, o: &Mat) -> Mat {
        let mut m = Mat::zero(self.rows * o.rows, self.cols * o.cols, self.nvars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self[(i, j)].is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        if o[(k, l)].is_zero() {
                            continue;
                        }
                        m[(i * o.rows + k, j * o.cols + l)] = self[(i, j)].mul_ref(&o[(k, l)]);
                    }
                }
            }
        }
        m
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            // Pick the pivot with the fewest terms for cheaper arithmetic.
            let mut best: Option<(usize, usize)> = None;
            for r in row..self.rows {
                if !self[(r, col)].is_zero() {
                    let w = self[(r, col)].num().num_terms() + self[(r, col)].den().num_terms();
                    if best.map_or(true, |(_, bw)| w < bw) {
                        best = Some((r, w));
                    }
                }
            }
            let Some((p, _)) = best else { continue };
            self.swap_rows(row, p);
            let inv = self[(row, col)].inv().expect("pivot is nonzero");
            for j in col..self.cols {
                self[(row, j)] = self[(row, j)].mul_ref(&inv);
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let f = self[(r, col)].clone();
                    for j in col..self.cols {
                        let t = self[(row, j)].mul_ref(&f);
                        self[(r, j)] = self[(r, j)].sub_ref(&t);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace, one column vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<RatFunc>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![RatFunc::zero(self.nvars); self.cols];
            v[free] = RatFunc::one(self.nvars);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m[(r, free)].neg_ref();
            }
            basis.push(v);
        }
        basis
    }

    /// Exact inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n, self.nvars);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = RatFunc::one(self.nvars);
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Mat::from_fn(n, n, self.nvars, |i, j| aug[(i, n + j)].clone()))
    }

    /// Exact determinant by fraction-tracking Gaussian elimination.
    pub fn det(&self) -> RatFunc {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = RatFunc::one(self.nvars);
        for col in 0..n {
            let p = (col..n).find(|&r| !m[(r, col)].is_zero());
            let Some(p) = p else { return RatFunc::zero(self.nvars) };
            if p != col {
                m.swap_rows(col, p);
                det = det.neg_ref();
            }
            let piv = m[(col, col)].clone();
            det = det.mul_ref(&piv);
            let inv = piv.inv().unwrap();
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].mul_ref(&inv);
                for j in col..n {
                    let t = m[(col, j)].mul_ref(&f);
                    m[(r, j)] = m[(r, j)].sub_ref(&t);
                }
            }
        }
        det
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.a.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn col(&self, j: usize) -> Vec<RatFunc> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn apply(&self, v: &[RatFunc]) -> Vec<RatFunc> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = RatFunc::zero(self.nvars);
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc.add_ref(&self[(i, j)].mul_ref(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn from_cols(cols: &[Vec<RatFunc>], nvars: usize) -> Mat {
        let rows = cols.first().map_or(0, |c| c.len());
        Mat::from_fn(rows, cols.len(), nvars, |i, j| cols[j][i].clone())
    }

    /// True when `self = c * other` for a single scalar `c`; returns the scalar.
    pub fn proportionality(&self, other: &Mat) -> Option<RatFunc> {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let mut ratio: Option<RatFunc> = None;
        for (x, y) in self.a.iter().zip(&other.a) {
            match (x.is_zero(), y.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return None,
                (false, false) => {
                    let r = x.try_div(y).unwrap();
                    match &ratio {
                        None => ratio = Some(r),
                        Some(r0) => {
                            if r0 != &r {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        ratio.or_else(|| Some(RatFunc::zero(self.nvars)))
    }
}

/// Basis of the space of matrices A (dim_tgt x dim_src) intertwining the
/// given generator pairs: A . src_g = tgt_g . A for every pair. The
/// returned matrices form an exact basis of the Hom space.
pub fn hom_basis(gens: &[(&Mat, &Mat)], dim_src: usize, dim_tgt: usize, nvars: usize) -> Vec<Mat> {
    let n = dim_src;
    let m = dim_tgt;
    let mut rows: Vec<Vec<RatFunc>> = Vec::new();
    for (gs, gt) in gens {
        assert_eq!((gs.rows, gs.cols), (n, n));
        assert_eq!((gt.rows, gt.cols), (m, m));
        for i in 0..m {
            for j in 0..n {
                let mut row = vec![RatFunc::zero(nvars); m * n];
                // (A gs)_{ij} = sum_k A_{ik} gs_{kj}
                for k in 0..n {
                    if !gs[(k, j)].is_zero() {
                        row[i * n + k] = row[i * n + k].add_ref(&gs[(k, j)]);
                    }
                }
                // (gt A)_{ij} = sum_k gt_{ik} A_{kj}
                for k in 0..m {
                    if !gt[(i, k)].is_zero() {
                        row[k * n + j] = row[k * n + j].sub_ref(&gt[(i, k)]);
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let mat = Mat::from_fn(rows.len(), m * n, nvars, |i, j| rows[i][j].clone());
    mat.nullspace()
        .into_iter()
        .map(|sol| Mat::from_fn(m, n, nvars, |i, k| sol[i * n + k].clone()))
        .collect()
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = RatFunc;
    fn index(&self, (i, j): (usize, usize)) -> &RatFunc {
        &self.a[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RatFunc {
        &mut self.a[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2(entries: [[i64; 2]; 2]) -> Mat {
        Mat::from_fn(2, 2, 1, |i, j| RatFunc::int(entries[i][j], 1))
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m2([[1, 2], [3, 5]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(2, 1));
    }

    #[test]
    fn singular_has_no_inverse() {
        let a = m2([[1, 2], [2, 4]]);
        assert!(a.inverse().is_none());
        assert!(a.det().is_zero());
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn nullspace_dimension() {
        let a = m2([[1, 2], [2, 4]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(a.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn det_symbolic() {
        // det [[q, 1], [1, q^-1]] = 0
        let q = RatFunc::q(1);
        let a = Mat::from_fn(2, 2, 1, |i, j| match (i, j) {
            (0, 0) => q.clone(),
            (1, 1) => q.pow(-1),
            _ => RatFunc::one(1),
        });
        assert!(a.det().is_zero());
    }

    #[test]
    fn kron_dims() {
        let a = m2([[1, 0], [0, 1]]);
        let b = m2([[2, 1], [0, 3]]);
        let k = a.kron(&b);
        assert_eq!((k.rows, k.cols), (4, 4));
        assert_eq!(k[(2, 2)], RatFunc::int(2, 1));
    }

    #[test]
    fn proportional_matrices() {
        let a = m2([[2, 4], [6, 0]]);
        let b = m2([[1, 2], [3, 0]]);
        assert_eq!(a.proportionality(&b).unwrap(), RatFunc::int(2, 1));
        let c = m2([[1, 2], [3, 1]]);
        assert!(a.proportionality(&c).is_none());
    }
}
