use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RatMatrix = Matrix<Rational>;

/// Inertia of a real symmetric matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from equal-length rows; `cols` is used when `rows` is
    /// empty.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix {
            rows: nrows,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix columns");
            for (i, x) in c.iter().enumerate() {
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
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

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix<T>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = T::one() / m[(r, c)].clone();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        m[(i, j)] = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Some solution of `self · x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[T]) -> Result<Option<Vec<T>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![T::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Matrix<T>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = T::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(T::zero());
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = det * piv.clone();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() / piv.clone();
                for j in c..n {
                    m[(i, j)] = m[(i, j)].clone() - f.clone() * m[(c, j)].clone();
                }
            }
        }
        Ok(det)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl RatMatrix {
    /// Exact rank via fraction-free (Bareiss) elimination on the integer
    /// matrix obtained by clearing each row's denominators.
    pub fn rank(&self) -> usize {
        let rows = (0..self.rows).map(|i| integer_row(self.row(i))).collect();
        integer_rank(rows, self.cols)
    }

    /// Signature by congruence diagonalization over ℚ.
    pub fn signature(&self) -> Result<Signature> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut m = self.clone();
        let mut n = m.rows;
        let mut sig = Signature {
            positive: 0,
            negative: 0,
            zero: 0,
        };
        // Active block is the leading n×n submatrix; finished pivots are
        // moved past it.
        while n > 0 {
            let pivot = (0..n).find(|&i| !m[(i, i)].is_zero());
            let p = match pivot {
                Some(p) => p,
                None => {
                    let off = (0..n)
                        .flat_map(|i| (0..i).map(move |j| (i, j)))
                        .find(|&(i, j)| !m[(i, j)].is_zero());
                    match off {
                        None => {
                            sig.zero += n;
                            break;
                        }
                        Some((i, j)) => {
                            // x_j += x_i: new diagonal entry 2 m_ij ≠ 0.
                            m.congruence_add(j, i, n);
                            j
                        }
                    }
                }
            };
            let d = m[(p, p)].clone();
            if d.is_positive() {
                sig.positive += 1;
            } else {
                sig.negative += 1;
            }
            for i in 0..n {
                if i == p || m[(i, p)].is_zero() {
                    continue;
                }
                let f = &m[(i, p)] / &d;
                // Row and column i -= f · (row/column p).
                for j in 0..n {
                    let v = &m[(i, j)] - &(&f * &m[(p, j)]);
                    m[(i, j)] = v;
                }
                for j in 0..n {
                    let v = &m[(j, i)] - &(&f * &m[(j, p)]);
                    m[(j, i)] = v;
                }
            }
            m.swap_sym(p, n - 1, n);
            n -= 1;
        }
        Ok(sig)
    }

    /// Congruence by the elementary matrix adding basis vector `src` to `dst`.
    fn congruence_add(&mut self, dst: usize, src: usize, n: usize) {
        for j in 0..n {
            let v = &self[(dst, j)] + &self[(src, j)];
            self[(dst, j)] = v;
        }
        for j in 0..n {
            let v = &self[(j, dst)] + &self[(j, src)];
            self[(j, dst)] = v;
        }
    }

    fn swap_sym(&mut self, a: usize, b: usize, n: usize) {
        if a == b {
            return;
        }
        self.swap_rows(a, b);
        for i in 0..n {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

/// Rank of an integer matrix given by rows.
///
/// Elimination modulo a large prime picks `r` rows independent over ℚ (a
/// nonzero minor mod p is nonzero over ℤ). The rank is exactly `r` if every
/// row is orthogonal to the rational kernel of those rows, which is checked
/// in integer arithmetic. Otherwise the prime was unlucky and the rank is
/// recomputed by Bareiss elimination.
pub fn integer_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    a.retain(|r| r.iter().any(|x| !x.is_zero()));
    for row in &mut a {
        let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if !g.is_one() {
            row.iter_mut().for_each(|x| *x /= &g);
        }
    }
    let basis = independent_rows_mod_p(&a, cols);
    let selected: Vec<Vec<BigInt>> = basis.iter().map(|&i| a[i].clone()).collect();
    let Some(kernel) = integer_kernel(selected, cols) else {
        return bareiss_rank(a, cols);
    };
    let certified = a
        .iter()
        .enumerate()
        .filter(|(i, _)| !basis.contains(i))
        .all(|(_, row)| {
            kernel.iter().all(|k| {
                row.iter()
                    .zip(k)
                    .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                    .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
                    .is_zero()
            })
        });
    if certified {
        basis.len()
    } else {
        bareiss_rank(a, cols)
    }
}

/// Integer kernel basis of independent rows by fraction-free Gauss-Jordan
/// elimination: the pivot block ends as `d·I`, so each free column `f` gives
/// the kernel vector with `d` at `f` and minus column `f` at the pivots.
/// `None` if the rows turn out dependent.
fn integer_kernel(mut a: Vec<Vec<BigInt>>, cols: usize) -> Option<Vec<Vec<BigInt>>> {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::with_capacity(rows);
    for k in 0..rows {
        let start = pivots.last().map_or(0, |&c| c + 1);
        let (c, p) =
            (start..cols).find_map(|c| (k..rows).find(|&i| !a[i][c].is_zero()).map(|i| (c, i)))?;
        a.swap(k, p);
        let pivot_row = a[k].clone();
        let pivot = pivot_row[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let lead = row[c].clone();
            for j in 0..cols {
                if j == c {
                    continue;
                }
                let num = &pivot * &row[j] - &lead * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                if !rem.is_zero() {
                    return None;
                }
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        pivots.push(c);
    }
    let d = if rows == 0 {
        BigInt::one()
    } else {
        a[rows - 1][pivots[rows - 1]].clone()
    };
    let free = (0..cols).filter(|c| !pivots.contains(c));
    Some(
        free.map(|f| {
            let mut v = vec![BigInt::zero(); cols];
            v[f] = d.clone();
            for (k, &pc) in pivots.iter().enumerate() {
                // Row k reads a[k][pc]·x_pc + a[k][f]·x_f = 0 with a[k][pc] = d.
                v[pc] = -&a[k][f];
                debug_assert_eq!(a[k][pc], d);
            }
            let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            v.iter_mut().for_each(|x| *x /= &g);
            v
        })
        .collect(),
    )
}

/// Indices of rows forming a basis of the row space over `𝔽_p`.
fn independent_rows_mod_p(a: &[Vec<BigInt>], cols: usize) -> Vec<usize> {
    const P: u64 = (1 << 31) - 1;
    let p_big = BigInt::from(P);
    let reduce = |x: &BigInt| -> u64 {
        match x.to_i64() {
            Some(v) => v.rem_euclid(P as i64) as u64,
            None => x.mod_floor(&p_big).to_u64().expect("reduced mod p"),
        }
    };
    let mul = |x: u64, y: u64| x * y % P;
    let inv = |x: u64| {
        let (mut base, mut e, mut acc) = (x, P - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    };
    // Echelon rows kept reduced: (pivot column, row with pivot entry 1).
    let mut echelon: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in a.iter().enumerate() {
        if echelon.len() == cols {
            break;
        }
        let mut v: Vec<u64> = row.iter().map(reduce).collect();
        for (pc, er) in &echelon {
            let f = v[*pc];
            if f != 0 {
                for (x, y) in v.iter_mut().zip(er) {
                    *x = (*x + P - mul(f, *y)) % P;
                }
            }
        }
        if let Some(pc) = v.iter().position(|&x| x != 0) {
            let s = inv(v[pc]);
            v.iter_mut().for_each(|x| *x = mul(*x, s));
            echelon.push((pc, v));
            chosen.push(idx);
        }
    }
    chosen
}

/// Rank by fraction-free (Bareiss) elimination.
fn bareiss_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[c];
        for row in tail.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let num = pivot * &row[j] - &lead * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot.clone();
        r += 1;
    }
    r
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, rat};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RatMatrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::identity(3).rank(), 3);
        assert_eq!(RatMatrix::zeros(4, 7).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(RatMatrix::identity(3).kernel_basis().is_empty());
        assert_eq!(RatMatrix::zeros(2, 2).kernel_basis().len(), 2);
        let a = m(&[&[1, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![int(-1), int(1)]);
        assert_eq!(a.mul_vec(&k[0]).unwrap(), vec![int(0)]);
    }

    #[test]
    fn rank_with_skipped_columns() {
        let a = m(&[&[0, 1, 2, 3], &[0, 2, 4, 7], &[0, 0, 0, 5], &[0, 3, 6, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.rank(), a.rref().1.len());
    }

    #[test]
    fn inverse_and_det() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), RatMatrix::identity(2));
        assert_eq!(a.det().unwrap(), int(1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::SingularMatrix));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), int(-1));
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(
            a.solve(&[int(2), int(0)]).unwrap(),
            Some(vec![int(1), int(1)])
        );
        let b = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(b.solve(&[int(1), int(3)]).unwrap(), None);
    }

    #[test]
    fn signature_examples() {
        let diag = |d: &[i64]| {
            let mut x = RatMatrix::zeros(d.len(), d.len());
            for (i, v) in d.iter().enumerate() {
                x[(i, i)] = int(*v);
            }
            x
        };
        let s = |p, n, z| Signature {
            positive: p,
            negative: n,
            zero: z,
        };
        assert_eq!(diag(&[1, -1]).signature().unwrap(), s(1, 1, 0));
        assert_eq!(diag(&[-1, -1]).signature().unwrap(), s(0, 2, 0));
        assert_eq!(diag(&[0, 0, 0]).signature().unwrap(), s(0, 0, 3));
        // hyperbolic plane: zero diagonal
        assert_eq!(m(&[&[0, 1], &[1, 0]]).signature().unwrap(), s(1, 1, 0));
        assert_eq!(m(&[&[0, 1], &[2, 0]]).signature(), Err(Error::NotSymmetric));
        let mut h = RatMatrix::zeros(3, 3);
        h[(0, 1)] = rat(1, 2);
        h[(1, 0)] = rat(1, 2);
        h[(2, 2)] = int(-3);
        assert_eq!(h.signature().unwrap(), s(1, 2, 0));
    }

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn unlucky_prime_falls_back_to_elimination() {
        // The first row vanishes mod 2³¹ − 1 but not over ℚ.
        let p = (1_i64 << 31) - 1;
        let a = big(&[&[p, 0], &[0, 1]]);
        assert_eq!(independent_rows_mod_p(&a, 2), vec![1]);
        assert_eq!(integer_rank(a.clone(), 2), 2);
        assert_eq!(bareiss_rank(a, 2), 2);
    }

    #[test]
    fn integer_rank_agrees_with_bareiss() {
        let a = big(&[
            &[2, 4, 6, 0],
            &[1, 2, 3, 0],
            &[0, 0, 0, 0],
            &[1, -1, 0, 5],
            &[3, 0, 3, 10],
        ]);
        // Last row = second + 2·fourth.
        assert_eq!(integer_rank(a.clone(), 4), 2);
        assert_eq!(bareiss_rank(a, 4), 2);
        assert_eq!(integer_rank(Vec::new(), 3), 0);
    }

    #[test]
    fn fraction_free_kernel_is_a_kernel() {
        let a = big(&[&[2, 1, 0, 3], &[0, 3, 1, -1]]);
        let k = integer_kernel(a.clone(), 4).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &a {
                let dot: BigInt = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
        assert!(integer_kernel(big(&[&[1, 2], &[2, 4]]), 2).is_none());
    }
}
