//! Exact row reduction over any [`Field`], dense and sparse.

use std::collections::BTreeMap;

use crate::scalar::{Field, Scalar};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F = Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Outcome of [`Matrix::solve`].
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<F = Scalar> {
    /// A particular solution (free variables set to zero).
    Solved(Vec<F>),
    /// Some row reduces to `0 = c` with `c != 0`; the index is that row of the
    /// reduced augmented system.
    Inconsistent(usize),
}

impl<F> Solution<F> {
    pub fn ok(self) -> Option<Vec<F>> {
        match self {
            Solution::Solved(x) => Some(x),
            Solution::Inconsistent(_) => None,
        }
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| if a.is_zero() { acc } else { acc.add(&a.mul(b)) })
            })
            .collect()
    }

    pub fn mul(&self, o: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, o.rows);
        let mut r = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        r[(i, j)] = r[(i, j)].add(&a.mul(b));
                    }
                }
            }
        }
        r
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        self.rref_upto(self.cols)
    }

    /// Row reduction that only pivots in the first `limit` columns; the
    /// remaining columns are carried along (an augmented right-hand side).
    pub fn rref_upto(&self, limit: usize) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit.min(m.cols) {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows)
                .filter(|&i| !m[(i, c)].is_zero())
                .min_by_key(|&i| m[(i, c)].weight())
            else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = F::one().div(&m[(r, c)]);
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].mul(&inv);
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        m[(i, j)] = m[(i, j)].sub(&f.mul(&m[(r, j)]));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical kernel basis: one vector per free column, in increasing
    /// column order, with a 1 in that column.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(self.cols, &pivots, |i, j| r[(i, j)].clone())
    }

    pub fn solve(&self, b: &[F]) -> Solution<F> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if let Some(k) = pivots.iter().position(|&c| c == self.cols) {
            return Solution::Inconsistent(k);
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = r[(i, self.cols)].clone();
        }
        Solution::Solved(x)
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

fn kernel_from_rref<F: Field>(
    cols: usize,
    pivots: &[usize],
    entry: impl Fn(usize, usize) -> F,
) -> Vec<Vec<F>> {
    let mut is_pivot = vec![None; cols];
    for (i, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(i);
    }
    (0..cols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = vec![F::zero(); cols];
            v[free] = F::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = entry(i, free).neg();
            }
            v
        })
        .collect()
}

/// Sparse row.
pub type SparseRow<F = Scalar> = BTreeMap<usize, F>;

/// Adds `c * src` into `dst`, dropping cancelled entries.
pub fn axpy<F: Field>(dst: &mut SparseRow<F>, c: &F, src: &SparseRow<F>) {
    if c.is_zero() {
        return;
    }
    for (k, v) in src {
        let t = c.mul(v);
        match dst.get_mut(k) {
            Some(x) => {
                *x = x.add(&t);
                if x.is_zero() {
                    dst.remove(k);
                }
            }
            None => {
                dst.insert(*k, t);
            }
        }
    }
}

/// Incremental sparse elimination. Rows are reduced against the pivots seen
/// so far as they arrive, so redundant constraints cost little.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F = Scalar> {
    cols: usize,
    pivots: BTreeMap<usize, SparseRow<F>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(cols: usize) -> Self {
        SparseEchelon { cols, pivots: BTreeMap::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots.
    pub fn reduce(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        let mut from = 0;
        loop {
            let next = row
                .range(from..)
                .map(|(&k, _)| k)
                .find(|k| self.pivots.contains_key(k));
            let Some(k) = next else { return row };
            let c = row[&k].neg();
            axpy(&mut row, &c, &self.pivots[&k]);
            from = k + 1;
        }
    }

    /// Inserts a row; returns whether the rank grew.
    pub fn push(&mut self, row: SparseRow<F>) -> bool {
        let mut row = self.reduce(row);
        let Some((&lead, _)) = row.iter().next() else { return false };
        let inv = F::one().div(&row[&lead]);
        for v in row.values_mut() {
            *v = v.mul(&inv);
        }
        for p in self.pivots.values_mut() {
            if let Some(c) = p.get(&lead).cloned() {
                axpy(p, &c.neg(), &row);
            }
        }
        self.pivots.insert(lead, row);
        true
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Whether `row` lies in the row space.
    pub fn contains(&self, row: SparseRow<F>) -> bool {
        self.reduce(row).is_empty()
    }

    /// Canonical kernel basis, same convention as [`Matrix::nullspace`].
    pub fn nullspace(&self) -> Vec<SparseRow<F>> {
        (0..self.cols)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|free| {
                let mut v = SparseRow::new();
                v.insert(free, F::one());
                for (&c, row) in &self.pivots {
                    if let Some(x) = row.get(&free) {
                        v.insert(c, x.neg());
                    }
                }
                v
            })
            .collect()
    }

    /// Expresses `row` as a combination of the canonical pivot rows, if
    /// possible. Keys of the result are pivot columns.
    pub fn coordinates(&self, row: &SparseRow<F>) -> Option<SparseRow<F>> {
        let mut coords = SparseRow::new();
        let mut rest = row.clone();
        for (&c, p) in &self.pivots {
            if let Some(x) = rest.get(&c).cloned() {
                axpy(&mut rest, &x.neg(), p);
                coords.insert(c, x);
            }
        }
        rest.is_empty().then_some(coords)
    }
}

/// Rank of a family of sparse vectors.
pub fn sparse_rank<'a, F: Field + 'a>(cols: usize, rows: impl IntoIterator<Item = &'a SparseRow<F>>) -> usize {
    let mut e = SparseEchelon::new(cols);
    for r in rows {
        e.push(r.clone());
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
    }

    #[test]
    fn rref_small() {
        let (r, p) = m(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
        let id = Matrix::<Scalar>::identity(3);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
        let z = Matrix::<Scalar>::zeros(2, 4);
        assert_eq!(z.rref(), (z.clone(), vec![]));
    }

    #[test]
    fn kernel() {
        let a = m(&[&[1, 1, 0]]);
        let k = a.nullspace();
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], vec![Scalar::int(-1), Scalar::one(), Scalar::zero()]);
        assert_eq!(k[1], vec![Scalar::zero(), Scalar::zero(), Scalar::one()]);
        assert!(Matrix::<Scalar>::identity(4).nullspace().is_empty());
        assert_eq!(Matrix::<Scalar>::zeros(2, 3).nullspace().len(), 3);
    }

    #[test]
    fn solving() {
        let a = m(&[&[2]]);
        assert_eq!(a.solve(&[Scalar::int(3)]), Solution::Solved(vec![Scalar::new(3, 2)]));
        let z = Matrix::<Scalar>::zeros(1, 1);
        assert!(matches!(z.solve(&[Scalar::one()]), Solution::Inconsistent(_)));
        let id = Matrix::<Scalar>::identity(2);
        let b = vec![Scalar::int(5), Scalar::new(-1, 7)];
        assert_eq!(id.solve(&b), Solution::Solved(b.clone()));
    }

    #[test]
    fn sparse_matches_dense() {
        let a = m(&[&[1, 2, 0, 3], &[2, 4, 1, 0], &[3, 6, 1, 3]]);
        let mut e = SparseEchelon::new(4);
        for i in 0..a.rows() {
            let row: SparseRow = a.row(i).iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            e.push(row);
        }
        assert_eq!(e.rank(), a.rank());
        let dense = a.nullspace();
        let sparse: Vec<Vec<Scalar>> = e
            .nullspace()
            .into_iter()
            .map(|v| (0..4).map(|j| v.get(&j).cloned().unwrap_or_default()).collect())
            .collect();
        assert_eq!(dense, sparse);
    }
}
