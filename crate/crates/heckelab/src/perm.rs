//! Permutations of {0..r-1} with the Coxeter structure of S_r.
//!
//! A [`Perm`] stores images: `p.0[i] = p(i)`. Products compose left-to-right
//! as functions: `(a * b)(i) = a(b(i))`.

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(r: usize) -> Self {
        Perm((0..r).collect())
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    /// Adjacent transposition s_k = (k, k+1), 1-based index k in 1..r.
    pub fn simple(k: usize, r: usize) -> Self {
        assert!(k >= 1 && k < r);
        let mut v: Vec<usize> = (0..r).collect();
        v.swap(k - 1, k);
        Perm(v)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// Function composition: (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.r()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Perm(v)
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut l = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// A reduced word in simple reflections (1-based indices), obtained by
    /// bubble-sorting descents. The product s_{w[0]} s_{w[1]} ... equals self.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        let mut word = Vec::new();
        // Repeatedly remove a descent on the right: if v has v[k-1] > v[k],
        // then self = (self * s_k) * s_k with the first factor shorter.
        loop {
            let mut found = None;
            for k in 1..v.len() {
                if v[k - 1] > v[k] {
                    found = Some(k);
                    break;
                }
            }
            match found {
                None => break,
                Some(k) => {
                    v.swap(k - 1, k);
                    word.push(k);
                }
            }
        }
        word.reverse();
        word
    }

    /// Permute entries of an index vector by the right action:
    /// `(y . w)[i] = y[w(i)]`.
    pub fn act_right<T: Clone>(&self, y: &[T]) -> Vec<T> {
        (0..y.len()).map(|i| y[self.0[i]].clone()).collect()
    }

    /// Left action on positions: `(w . y)[w(i)] = y[i]`.
    pub fn act_left<T: Clone>(&self, y: &[T]) -> Vec<T> {
        let mut out = y.to_vec();
        for (i, &wi) in self.0.iter().enumerate() {
            out[wi] = y[i].clone();
        }
        out
    }
}

/// All permutations of S_r in a deterministic order (lex on one-line form).
pub fn all_perms(r: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..r).collect();
    loop {
        out.push(Perm(cur.clone()));
        // next lexicographic permutation
        let mut i = r.wrapping_sub(1);
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = r - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Minimal-length representatives of the right cosets `W_J \ W`, where `W_J`
/// is generated by the simple reflections with 1-based indices in `j_set`.
pub fn min_coset_reps(r: usize, j_set: &[usize]) -> Vec<Perm> {
    let subgroup = parabolic_elements(r, j_set);
    let mut reps: Vec<Perm> = Vec::new();
    let mut seen: std::collections::BTreeSet<Vec<usize>> = Default::default();
    for w in all_perms(r) {
        // canonical key: the coset W_J w as the sorted set of one-line forms
        if seen.contains(&w.0) {
            continue;
        }
        let coset: Vec<Perm> = subgroup.iter().map(|u| u.compose(&w)).collect();
        let min = coset.iter().min_by_key(|p| (p.length(), p.0.clone())).unwrap().clone();
        for p in &coset {
            seen.insert(p.0.clone());
        }
        reps.push(min);
    }
    reps.sort_by_key(|p| (p.length(), p.0.clone()));
    reps
}

/// All elements of the standard parabolic subgroup generated by `j_set`.
pub fn parabolic_elements(r: usize, j_set: &[usize]) -> Vec<Perm> {
    let gens: Vec<Perm> = j_set.iter().map(|&k| Perm::simple(k, r)).collect();
    let mut elems: std::collections::BTreeSet<Vec<usize>> = Default::default();
    let mut frontier = vec![Perm::identity(r)];
    elems.insert(frontier[0].0.clone());
    while let Some(w) = frontier.pop() {
        for g in &gens {
            let n = w.compose(g);
            if elems.insert(n.0.clone()) {
                frontier.push(n);
            }
        }
    }
    elems.into_iter().map(Perm).collect()
}

/// Simple-reflection indices (1-based) stabilizing a vector: k such that
/// y[k-1] = y[k]. For weakly sorted y these generate the full stabilizer.
pub fn block_stabilizer_gens<T: PartialEq>(y: &[T]) -> Vec<usize> {
    (1..y.len()).filter(|&k| y[k - 1] == y[k]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths_and_words() {
        for w in all_perms(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let mut prod = Perm::identity(4);
            for &k in &word {
                prod = prod.compose(&Perm::simple(k, 4));
            }
            assert_eq!(prod, w);
        }
    }

    #[test]
    fn coset_reps_count() {
        // W_J = S_2 x S_1 in S_3: 3 cosets
        let reps = min_coset_reps(3, &[1]);
        assert_eq!(reps.len(), 3);
        assert!(reps.iter().any(|p| p.is_identity()));
        // full parabolic: single coset
        assert_eq!(min_coset_reps(3, &[1, 2]).len(), 1);
        // trivial parabolic: all of S_3
        assert_eq!(min_coset_reps(3, &[]).len(), 6);
    }

    #[test]
    fn right_action_on_vectors() {
        let s1 = Perm::simple(1, 3);
        assert_eq!(s1.act_right(&[10, 20, 30]), vec![20, 10, 30]);
        let w = Perm(vec![2, 0, 1]);
        let y = [5, 7, 9];
        let wy = w.act_right(&y);
        for i in 0..3 {
            assert_eq!(wy[i], y[w.apply(i)]);
        }
    }
}
