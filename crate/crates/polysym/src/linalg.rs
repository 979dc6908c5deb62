//! Dense matrices of exact rationals.
//!
//! Gaussian elimination with exact arithmetic is the substrate for every
//! other module: rank, inverses, basis selection among column families and
//! homogeneous-system solving. Pivots are chosen by smallest bit size to
//! keep coefficient growth in check.

use num::{One, Signed, Zero};

use crate::rat::{bit_size, format_rat, Rat};
use crate::{Error, Result};

/// Row-major dense matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl std::fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format_rat(&self[(i, j)])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Rat>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        assert!(cols.iter().all(|col| col.len() == r), "ragged columns");
        let mut m = Self::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(crate::rat::is_integer)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Row echelon form in place; returns the pivot columns.
    ///
    /// Pivot rows are chosen by smallest bit size among the nonzero
    /// candidates of the current column, which is cheap and keeps entries
    /// small on the inputs we care about.
    fn echelonize(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let mut best: Option<(usize, u64)> = None;
            for i in r..self.rows {
                if !self[(i, c)].is_zero() {
                    let sz = bit_size(&self[(i, c)]);
                    if best.map_or(true, |(_, b)| sz < b) {
                        best = Some((i, sz));
                    }
                }
            }
            let Some((p, _)) = best else { continue };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, p * self.cols + j);
                }
            }
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let x = &self[(r, j)] * &inv;
                self[(r, j)] = x;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let delta = &self[(r, j)] * &f;
                        self[(i, j)] -= delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.clone().echelonize().len()
    }

    /// Exact inverse; `Singular` if the matrix has no inverse.
    pub fn invert(&self) -> Result<RatMatrix> {
        if self.rows != self.cols {
            return Err(Error::Singular);
        }
        let n = self.rows;
        let mut work = Self::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                work[(i, j)] = self[(i, j)].clone();
            }
            work[(i, n + i)] = Rat::one();
        }
        let pivots = work.echelonize();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(Error::Singular);
        }
        let mut inv = Self::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = work[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let mut work = self.clone();
        let mut det = Rat::one();
        let n = work.rows;
        for c in 0..n {
            let mut best: Option<(usize, u64)> = None;
            for i in c..n {
                if !work[(i, c)].is_zero() {
                    let sz = bit_size(&work[(i, c)]);
                    if best.map_or(true, |(_, b)| sz < b) {
                        best = Some((i, sz));
                    }
                }
            }
            let Some((p, _)) = best else {
                return Rat::zero();
            };
            if p != c {
                for j in 0..n {
                    work.data.swap(c * n + j, p * n + j);
                }
                det = -det;
            }
            det *= work[(c, c)].clone();
            let inv = work[(c, c)].recip();
            for i in c + 1..n {
                if !work[(i, c)].is_zero() {
                    let f = &work[(i, c)] * &inv;
                    for j in c..n {
                        let delta = &work[(c, j)] * &f;
                        work[(i, j)] -= delta;
                    }
                }
            }
        }
        det
    }

    /// Greedy left-to-right selection of column indices forming a basis of
    /// the column space; `RankDeficient` if the columns do not span a space
    /// of dimension `rows`.
    pub fn select_basis(&self) -> Result<Vec<usize>> {
        let mut chosen: Vec<usize> = Vec::new();
        // Incremental elimination on the transposed picture: keep an
        // echelon basis of the span of the chosen columns.
        let mut echelon: Vec<Vec<Rat>> = Vec::new();
        for j in 0..self.cols {
            let mut v = self.column(j);
            for row in &echelon {
                let lead = row.iter().position(|x| !x.is_zero()).unwrap();
                if !v[lead].is_zero() {
                    let f = &v[lead] / &row[lead];
                    for (x, r) in v.iter_mut().zip(row) {
                        *x -= &f * r;
                    }
                }
            }
            if v.iter().any(|x| !x.is_zero()) {
                chosen.push(j);
                echelon.push(v);
                if chosen.len() == self.rows {
                    break;
                }
            }
        }
        if chosen.len() == self.rows {
            Ok(chosen)
        } else {
            Err(Error::RankDeficient)
        }
    }

    /// Basis of the right nullspace `{x : A x = 0}`, in the canonical
    /// reduced-echelon parametrization (one vector per free column, unit
    /// entry at its free column). Empty when the kernel is trivial.
    pub fn solve_homogeneous(&self) -> Vec<Vec<Rat>> {
        let mut work = self.clone();
        let pivots = work.echelonize();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (r, &c) in pivots.iter().enumerate() {
                if c < free {
                    v[c] = -work[(r, free)].clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `A x = b` exactly; `None` if inconsistent. When the system is
    /// underdetermined an arbitrary but deterministic solution is returned.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len());
        let mut work = Self::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                work[(i, j)] = self[(i, j)].clone();
            }
            work[(i, self.cols)] = b[i].clone();
        }
        let pivots = work.echelonize();
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = work[(r, self.cols)].clone();
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::identity(3).rank(), 3);
        assert_eq!(m(&[&[1, 1], &[1, 1]]).rank(), 1);
        assert_eq!(m(&[&[2, 0], &[0, 2], &[1, 1]]).rank(), 2);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(
            RatMatrix::identity(3).invert().unwrap(),
            RatMatrix::identity(3)
        );
        let half = m(&[&[2, 0], &[0, 2]]).invert().unwrap();
        assert_eq!(half[(0, 0)], rat(1, 2));
        assert_eq!(half[(1, 1)], rat(1, 2));
        assert_eq!(half[(0, 1)], int(0));
        assert!(matches!(
            m(&[&[1, 1], &[1, 1]]).invert(),
            Err(Error::Singular)
        ));
    }

    #[test]
    fn select_basis_examples() {
        // columns e1, e2, e1+e2 in dim 2
        let v = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(v.select_basis().unwrap(), vec![0, 1]);
        // columns e1, 2e1, e2: skips the dependent column
        let v = m(&[&[1, 2, 0], &[0, 0, 1]]);
        assert_eq!(v.select_basis().unwrap(), vec![0, 2]);
        let v = m(&[&[1, 1], &[0, 0]]);
        assert!(matches!(v.select_basis(), Err(Error::RankDeficient)));
    }

    #[test]
    fn solve_homogeneous_examples() {
        assert!(RatMatrix::identity(2).solve_homogeneous().is_empty());
        let basis = m(&[&[1, 1]]).solve_homogeneous();
        assert_eq!(basis.len(), 1);
        // (1, -1) up to scale
        let v = &basis[0];
        assert_eq!(&v[0] + &v[1], int(0));
        assert!(!v[0].is_zero());
        assert_eq!(RatMatrix::zero(2, 3).solve_homogeneous().len(), 3);
    }

    #[test]
    fn nullspace_vectors_satisfy_system() {
        let a = m(&[&[1, 2, 3, 1], &[0, 1, 1, -1], &[1, 3, 4, 0]]);
        let basis = a.solve_homogeneous();
        assert_eq!(basis.len(), a.cols() - a.rank());
        for v in &basis {
            assert!(a.matvec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rank_equals_rank_of_transpose() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1], &[5, 0, 5]]);
        assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn inverse_multiplies_to_identity() {
        let a = m(&[&[2, 1, 0], &[1, -1, 3], &[0, 2, 5]]);
        let inv = a.invert().unwrap();
        assert_eq!(a.mul(&inv), RatMatrix::identity(3));
        assert_eq!(inv.mul(&a), RatMatrix::identity(3));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&[int(3), int(1)]).unwrap();
        assert_eq!(x, vec![int(2), int(1)]);
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(b.solve(&[int(1), int(3)]).is_none());
    }

    #[test]
    fn det_matches_singularity() {
        assert_eq!(m(&[&[1, 1], &[1, 1]]).det(), int(0));
        assert_eq!(m(&[&[2, 0], &[0, 3]]).det(), int(6));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), int(-1));
    }
}
