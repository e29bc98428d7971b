//! Exact sparse Gaussian elimination.
//!
//! Vectors are term lists `(key, coeff)` sorted by descending key with no zeros, the same
//! layout `Poly` uses, so polynomials and DP-polynomials can be fed in directly.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::ops::Bound;

use crate::field::Coeff;

pub type SparseVec<K> = Vec<(K, Coeff)>;

/// Row-echelon basis of a subspace. Each row is monic with a distinct pivot, its largest key.
#[derive(Clone, Debug)]
pub struct Echelon<K> {
    rows: Vec<SparseVec<K>>,
    pivots: HashMap<K, usize>,
}

impl<K: Ord + Copy + Hash> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), pivots: HashMap::new() }
    }
}

impl<K: Ord + Copy + Hash> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    pub fn pivot_keys(&self) -> impl Iterator<Item = &K> {
        self.pivots.keys()
    }

    pub fn has_pivot(&self, k: &K) -> bool {
        self.pivots.contains_key(k)
    }

    /// Remainder of `v` after eliminating every pivot; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[(K, Coeff)]) -> SparseVec<K> {
        self.reduce_tracked(v).0
    }

    /// Remainder plus the multipliers `λ_j` with `v - Σ λ_j row_j = remainder`.
    pub fn reduce_tracked(&self, v: &[(K, Coeff)]) -> (SparseVec<K>, Vec<(usize, Coeff)>) {
        let mut acc: BTreeMap<K, Coeff> = v.iter().cloned().collect();
        let mut used = Vec::new();
        let mut upper: Option<K> = None;
        loop {
            let next = match upper {
                None => acc.iter().next_back(),
                Some(u) => acc.range((Bound::Unbounded, Bound::Excluded(u))).next_back(),
            };
            let Some((&k, c)) = next else { break };
            upper = Some(k);
            if let Some(&j) = self.pivots.get(&k) {
                let lambda = c.clone();
                for (rk, rc) in &self.rows[j] {
                    let delta = rc.mul(&lambda);
                    match acc.get_mut(rk) {
                        Some(e) => {
                            *e = e.sub(&delta);
                            if e.is_zero() {
                                acc.remove(rk);
                            }
                        }
                        None => {
                            acc.insert(*rk, delta.neg());
                        }
                    }
                }
                used.push((j, lambda));
            }
        }
        (acc.into_iter().rev().collect(), used)
    }

    pub fn contains(&self, v: &[(K, Coeff)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns the index of the new row when `v` was independent.
    pub fn insert(&mut self, v: &[(K, Coeff)]) -> Option<usize> {
        let r = self.reduce(v);
        self.push_reduced(r)
    }

    /// Adds an already reduced vector.
    pub fn push_reduced(&mut self, r: SparseVec<K>) -> Option<usize> {
        let (k, c) = r.first()?.clone();
        let inv = c.inv();
        let row: SparseVec<K> = r.into_iter().map(|(k, c)| (k, c.mul(&inv))).collect();
        let j = self.rows.len();
        self.rows.push(row);
        self.pivots.insert(k, j);
        Some(j)
    }

    /// Back-substitutes so that no row contains another row's pivot.
    pub fn make_reduced(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by(|&a, &b| self.rows[a][0].0.cmp(&self.rows[b][0].0));
        for &j in &order {
            let row = std::mem::take(&mut self.rows[j]);
            let (pk, pc) = row[0].clone();
            let rest = self.reduce(&row[1..]);
            let mut new_row = vec![(pk, pc)];
            new_row.extend(rest);
            self.rows[j] = new_row;
        }
    }
}

/// Solution set `particular + span(kernel)` of a linear system, as dense vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSolution {
    pub particular: Vec<Coeff>,
    pub kernel: Vec<Vec<Coeff>>,
}

/// Solves `Σ_j a_{ij} c_j = b_i`. Each equation lists `(unknown index, coefficient)` pairs and
/// its right-hand side. Unknowns with larger indices are preferred as pivots; free unknowns are
/// set to zero in the particular solution and the kernel is returned in reduced echelon form.
pub fn solve_affine(
    nunknowns: usize,
    equations: impl IntoIterator<Item = (Vec<(usize, Coeff)>, Coeff)>,
    zero: &Coeff,
) -> Option<AffineSolution> {
    // key 0 is the right-hand side, key j+1 the unknown j
    let mut ech: Echelon<usize> = Echelon::new();
    for (lhs, rhs) in equations {
        let mut v: Vec<(usize, Coeff)> = lhs.into_iter().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (j + 1, c)).collect();
        if !rhs.is_zero() {
            v.push((0, rhs));
        }
        v.sort_by_key(|e| std::cmp::Reverse(e.0));
        let mut merged: Vec<(usize, Coeff)> = Vec::with_capacity(v.len());
        for (k, c) in v {
            match merged.last_mut() {
                Some((lk, lc)) if *lk == k => *lc = lc.add(&c),
                _ => merged.push((k, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        ech.insert(&merged);
    }
    if ech.has_pivot(&0) {
        return None;
    }
    ech.make_reduced();
    let mut particular = vec![zero.clone(); nunknowns];
    let mut pivot_of: HashMap<usize, usize> = HashMap::new();
    for (r, row) in ech.rows().iter().enumerate() {
        let j = row[0].0 - 1;
        pivot_of.insert(j, r);
        if let Some((0, c)) = row.last() {
            particular[j] = c.clone();
        }
    }
    let mut kernel = Vec::new();
    for free in (0..nunknowns).rev().filter(|j| !pivot_of.contains_key(j)) {
        let mut v = vec![zero.clone(); nunknowns];
        v[free] = zero.field().one();
        for (&j, &r) in &pivot_of {
            if let Some((_, c)) = ech.rows()[r].iter().find(|(k, _)| *k == free + 1) {
                v[j] = c.neg();
            }
        }
        kernel.push(v);
    }
    Some(AffineSolution { particular, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn c(v: i64) -> Coeff {
        Field::Rational.from_i64(v)
    }

    #[test]
    fn echelon_membership() {
        let mut e: Echelon<u32> = Echelon::new();
        assert!(e.insert(&[(3, c(1)), (1, c(2))]).is_some());
        assert!(e.insert(&[(2, c(1)), (1, c(1))]).is_some());
        assert!(e.contains(&[(3, c(2)), (2, c(3)), (1, c(7))]));
        assert!(!e.contains(&[(1, c(1))]));
        assert!(e.insert(&[(3, c(1)), (2, c(1)), (1, c(3))]).is_none());
        assert_eq!(e.dim(), 2);
    }

    #[test]
    fn tracked_reduction_reconstructs() {
        let mut e: Echelon<u32> = Echelon::new();
        e.insert(&[(5, c(2)), (0, c(1))]);
        e.insert(&[(4, c(1)), (0, c(3))]);
        let v = [(5, c(4)), (4, c(1)), (0, c(5))];
        let (rem, used) = e.reduce_tracked(&v);
        assert!(rem.is_empty());
        assert_eq!(used.len(), 2);
    }

    #[test]
    fn affine_solution_space() {
        // c0 + c1 = 3, c1 + c2 = 1 over Q: particular has free c0 = 0.
        let sol = solve_affine(
            3,
            vec![(vec![(0, c(1)), (1, c(1))], c(3)), (vec![(1, c(1)), (2, c(1))], c(1))],
            &c(0),
        )
        .unwrap();
        let check = |v: &[Coeff]| {
            assert_eq!(v[0].add(&v[1]), c(3));
            assert_eq!(v[1].add(&v[2]), c(1));
        };
        check(&sol.particular);
        assert_eq!(sol.kernel.len(), 1);
        let k = &sol.kernel[0];
        assert!(k[0].add(&k[1]).is_zero() && k[1].add(&k[2]).is_zero());
        assert!(solve_affine(1, vec![(vec![(0, c(1))], c(1)), (vec![(0, c(1))], c(2))], &c(0)).is_none());
    }
}
