//! Exact linear algebra over GF(p) and ℚ.
//!
//! Both span types keep a semi-echelon basis: each stored row has a pivot
//! coordinate equal to 1 that is zero in every row inserted after it. Reducing
//! a vector row by row in insertion order clears all pivots, which makes the
//! reduced vector a canonical representative of its coset.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::fieldtower::fp;

/// Row space over GF(p) that remembers how each basis row was built from the
/// inserted vectors.
#[derive(Clone, Debug)]
pub struct FpSpan {
    p: u64,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<u64>>,
    inserted: usize,
}

impl FpSpan {
    pub fn new(p: u64) -> Self {
        FpSpan {
            p,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            inserted: 0,
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<u64>>>(p: u64, vs: I) -> Self {
        let mut s = FpSpan::new(p);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v`, returning the residue and the combination of basis rows
    /// that was subtracted.
    fn reduce_tracked(&self, v: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let p = self.p;
        let mut r = v.to_vec();
        let mut coeffs = vec![0u64; self.rows.len()];
        for (i, (row, &piv)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = r.get(piv).copied().unwrap_or(0);
            if c == 0 {
                continue;
            }
            coeffs[i] = c;
            if r.len() < row.len() {
                r.resize(row.len(), 0);
            }
            for (x, &y) in r.iter_mut().zip(row) {
                *x = fp::sub_mod(*x, fp::mul_mod(c, y, p), p);
            }
        }
        (r, coeffs)
    }

    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        self.reduce_tracked(v).0
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    fn combo_of(&self, coeffs: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0u64; self.inserted];
        for (c, combo) in coeffs.iter().zip(&self.combos) {
            if *c == 0 {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(combo) {
                *o = fp::add_mod(*o, fp::mul_mod(*c, x, p), p);
            }
        }
        out
    }

    /// Coefficients `c` (one per inserted vector) with `sum c_i v_i = v`.
    pub fn express(&self, v: &[u64]) -> Option<Vec<u64>> {
        let (r, coeffs) = self.reduce_tracked(v);
        if r.iter().any(|&c| c != 0) {
            return None;
        }
        Some(self.combo_of(&coeffs))
    }

    /// Inserts a vector. If it is dependent on earlier insertions, returns the
    /// kernel relation (coefficients over all inserted vectors, including this
    /// one) that witnesses the dependency.
    pub fn insert(&mut self, v: Vec<u64>) -> Option<Vec<u64>> {
        let p = self.p;
        let idx = self.inserted;
        self.inserted += 1;
        for combo in &mut self.combos {
            combo.push(0);
        }
        let (mut r, coeffs) = self.reduce_tracked(&v);
        let mut combo = self.combo_of(&coeffs);
        // r = v - sum(coeffs * rows) = v - combo·inserted
        combo.iter_mut().for_each(|c| *c = fp::sub_mod(0, *c, p));
        combo[idx] = 1;
        match r.iter().position(|&c| c != 0) {
            None => Some(combo),
            Some(piv) => {
                let inv = fp::inv_mod(r[piv], p);
                r.iter_mut().for_each(|c| *c = fp::mul_mod(*c, inv, p));
                combo.iter_mut().for_each(|c| *c = fp::mul_mod(*c, inv, p));
                self.rows.push(r);
                self.pivots.push(piv);
                self.combos.push(combo);
                None
            }
        }
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }
}

/// Kernel of the linear map whose images of the standard basis vectors are
/// `columns`: all `x` with `sum x_j columns[j] = 0`.
pub fn kernel_fp(p: u64, columns: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let n = columns.len();
    let mut span = FpSpan::new(p);
    let mut out = Vec::new();
    for c in columns {
        if let Some(mut rel) = span.insert(c) {
            rel.resize(n, 0);
            out.push(rel);
        }
    }
    out
}

/// Reduced row echelon basis of the span of `vs`: a canonical form for the
/// subspace, so two spans are equal iff their outputs are.
pub fn rref_fp(p: u64, vs: impl IntoIterator<Item = Vec<u64>>) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut v in vs {
        for (row, &piv) in rows.iter().zip(&pivots) {
            let c = v[piv];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = fp::sub_mod(*x, fp::mul_mod(c, y, p), p);
                }
            }
        }
        let Some(piv) = v.iter().position(|&c| c != 0) else {
            continue;
        };
        let inv = fp::inv_mod(v[piv], p);
        v.iter_mut().for_each(|c| *c = fp::mul_mod(*c, inv, p));
        for row in rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&v) {
                    *x = fp::sub_mod(*x, fp::mul_mod(c, y, p), p);
                }
            }
        }
        rows.push(v);
        pivots.push(piv);
    }
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| pivots[i]);
    order.into_iter().map(|i| rows[i].clone()).collect()
}

/// Row space over ℚ with the same conventions as [`FpSpan`].
#[derive(Clone, Debug, Default)]
pub struct QSpan {
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<BigRational>>,
    inserted: usize,
}

impl QSpan {
    pub fn new() -> Self {
        Self::default()
    }

    fn reduce_tracked(&self, v: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut r = v.to_vec();
        let mut coeffs = vec![BigRational::zero(); self.rows.len()];
        for (i, (row, &piv)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = match r.get(piv) {
                Some(c) if !c.is_zero() => c.clone(),
                _ => continue,
            };
            if r.len() < row.len() {
                r.resize(row.len(), BigRational::zero());
            }
            for (x, y) in r.iter_mut().zip(row) {
                *x -= &c * y;
            }
            coeffs[i] = c;
        }
        (r, coeffs)
    }

    fn combo_of(&self, coeffs: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.inserted];
        for (c, combo) in coeffs.iter().zip(&self.combos) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(combo) {
                *o += c * x;
            }
        }
        out
    }

    pub fn insert(&mut self, v: Vec<BigRational>) -> Option<Vec<BigRational>> {
        let idx = self.inserted;
        self.inserted += 1;
        for combo in &mut self.combos {
            combo.push(BigRational::zero());
        }
        let (mut r, coeffs) = self.reduce_tracked(&v);
        let mut combo: Vec<BigRational> = self.combo_of(&coeffs).into_iter().map(|c| -c).collect();
        combo[idx] = BigRational::one();
        match r.iter().position(|c| !c.is_zero()) {
            None => Some(combo),
            Some(piv) => {
                let inv = r[piv].recip();
                r.iter_mut().for_each(|c| *c *= &inv);
                combo.iter_mut().for_each(|c| *c *= &inv);
                self.rows.push(r);
                self.pivots.push(piv);
                self.combos.push(combo);
                None
            }
        }
    }
}

/// Determinant over ℚ by fraction-exact Gaussian elimination.
pub fn det_q(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for c in col..n {
                let d = &f * &m[col][c];
                m[r][c] -= d;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_relations_hold() {
        let p = 3;
        let cols = vec![vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 1], vec![1, 0, 1]];
        let ker = kernel_fp(p, cols.clone());
        assert_eq!(ker.len(), 1);
        for rel in ker {
            let mut acc = vec![0u64; 3];
            for (c, col) in rel.iter().zip(&cols) {
                for (a, &x) in acc.iter_mut().zip(col) {
                    *a = fp::add_mod(*a, fp::mul_mod(*c, x, p), p);
                }
            }
            assert!(acc.iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn express_recovers_combination() {
        let p = 5;
        let span = FpSpan::from_vectors(p, vec![vec![1, 1, 0], vec![0, 1, 1]]);
        let c = span.express(&[2, 3, 1]).unwrap();
        assert_eq!(c, vec![2, 1]);
        assert!(span.express(&[1, 0, 0]).is_none());
    }

    #[test]
    fn rref_is_canonical() {
        let a = rref_fp(3, vec![vec![1, 2, 0], vec![0, 1, 1]]);
        let b = rref_fp(3, vec![vec![1, 0, 1], vec![2, 0, 2], vec![1, 2, 0]]);
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn det_small() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let m = vec![vec![q(2), q(1)], vec![q(7), q(4)]];
        assert_eq!(det_q(m), q(1));
    }
}
