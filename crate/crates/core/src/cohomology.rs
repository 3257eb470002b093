//! Second cohomology of a Jordan algebra with coefficients in itself.
//!
//! A bilinear map `h` is stored like structure constants:
//! `h(e_i, e_j) = Σ_k h[(i·n + j)·n + k] e_k`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{is_jordan, Algebra};
use crate::error::{Error, Result};
use crate::exactla::{integer_rank, unit_vec, RatMatrix, RatVec, Rational};

/// Column of the unknown `h(e_i, e_j)_k`.
pub fn cochain_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    (i * n + j) * n + k
}

/// Evaluates the bilinear map `h` on coordinate vectors.
pub fn apply_cochain(h: &[Rational], x: &[Rational], y: &[Rational]) -> RatVec {
    let n = x.len();
    let mut out = vec![Rational::zero(); n];
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let s = xi * yj;
            for (k, o) in out.iter_mut().enumerate() {
                let c = &h[cochain_index(n, i, j, k)];
                if !c.is_zero() {
                    *o += &s * c;
                }
            }
        }
    }
    out
}

/// Number of equations in the assembled cocycle system: one per ordered
/// basis 4-tuple and output coordinate, plus one symmetry equation per
/// unordered pair `i < j` and coordinate.
pub fn cocycle_row_count(n: usize) -> usize {
    n.pow(5) + n * n * (n - 1) / 2
}

/// Linear system whose kernel is `Z²(J, J)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleSystem {
    dim: usize,
    matrix: RatMatrix,
}

impl CocycleSystem {
    /// Rows for the polarized cocycle identity at every ordered basis tuple
    /// `(x, y, w, z)`, then the symmetry rows `h_ij^k − h_ji^k`.
    pub fn assemble(a: &Algebra) -> Self {
        let n = a.dim();
        let nn = n * n * n;
        let mut rows = polarized_rows(n, a.constants());
        rows.extend(symmetry_rows(n));
        CocycleSystem {
            dim: n,
            matrix: RatMatrix::from_rows(nn, rows),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    /// Whether the cochain `h` satisfies every equation.
    pub fn is_cocycle(&self, h: &[Rational]) -> bool {
        self.matrix
            .mul_vec(h)
            .map(|r| r.iter().all(Zero::is_zero))
            .unwrap_or(false)
    }
}

/// Exact scalars the cocycle rows can be assembled over.
trait Scalar: Clone + Zero {
    fn times(&self, other: &Self) -> Self;
    fn add_to(&mut self, other: &Self);
    fn negated(&self) -> Self;
}

impl Scalar for Rational {
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn add_to(&mut self, other: &Self) {
        *self += other;
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Scalar for i128 {
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn add_to(&mut self, other: &Self) {
        *self += other;
    }
    fn negated(&self) -> Self {
        -self
    }
}

fn product<T: Scalar>(c: &[T], x: &[T], y: &[T]) -> Vec<T> {
    let n = x.len();
    let mut out = vec![T::zero(); n];
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let s = xi.times(yj);
            let off = (i * n + j) * n;
            for (o, ck) in out.iter_mut().zip(&c[off..off + n]) {
                if !ck.is_zero() {
                    o.add_to(&s.times(ck));
                }
            }
        }
    }
    out
}

fn unit<T: Scalar + num_traits::One>(n: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[i] = T::one();
    v
}

/// Adds `±h(u, v)` followed by the linear map whose images of `e_k` are
/// `post[k]`.
fn add_term<T: Scalar>(block: &mut [Vec<T>], plus: bool, u: &[T], v: &[T], post: &[Vec<T>]) {
    let n = u.len();
    for (i, ui) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, vj) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let s = if plus {
                ui.times(vj)
            } else {
                ui.times(vj).negated()
            };
            for (k, img) in post.iter().enumerate() {
                let col = cochain_index(n, i, j, k);
                for (row, c) in block.iter_mut().zip(img) {
                    if !c.is_zero() {
                        row[col].add_to(&s.times(c));
                    }
                }
            }
        }
    }
}

type Images<T> = Vec<Vec<Vec<Vec<T>>>>;

/// `(u, v, post)`: the term `post(h(u, v))`.
type Term<'a, T> = (&'a [T], &'a [T], &'a [Vec<T>]);

/// The `n⁵` rows of the polarized identity for constants `c`.
fn polarized_rows<T: Scalar + num_traits::One>(n: usize, c: &[T]) -> Vec<Vec<T>> {
    let nn = n * n * n;
    let e: Vec<Vec<T>> = (0..n).map(|i| unit(n, i)).collect();
    let p: Vec<Vec<Vec<T>>> = (0..n)
        .map(|i| (0..n).map(|j| product(c, &e[i], &e[j])).collect())
        .collect();
    let identity = e.clone();
    // Images of e_k under the linear maps that follow h in each term.
    let right: Vec<Vec<Vec<T>>> = (0..n)
        .map(|q| p.iter().map(|pk| pk[q].clone()).collect())
        .collect();
    let right2: Images<T> = (0..n)
        .map(|w| {
            (0..n)
                .map(|z| right[w].iter().map(|kw| product(c, kw, &e[z])).collect())
                .collect()
        })
        .collect();
    let right_p: Images<T> = (0..n)
        .map(|w| {
            (0..n)
                .map(|z| e.iter().map(|ek| product(c, ek, &p[w][z])).collect())
                .collect()
        })
        .collect();
    let left_p: Images<T> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| e.iter().map(|ek| product(c, &p[x][y], ek)).collect())
                .collect()
        })
        .collect();
    let pw: Images<T> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| (0..n).map(|w| product(c, &p[x][y], &e[w])).collect())
                .collect()
        })
        .collect();

    let mut rows = Vec::with_capacity(cocycle_row_count(n));
    for x in 0..n {
        for y in 0..n {
            for w in 0..n {
                for z in 0..n {
                    let mut block = vec![vec![T::zero(); nn]; n];
                    let (xy, xz, yz) = (&p[x][y], &p[x][z], &p[y][z]);
                    let lhs: [Term<T>; 9] = [
                        (&e[x], &e[y], &right2[w][z]),
                        (&e[x], &e[z], &right2[w][y]),
                        (&e[y], &e[z], &right2[w][x]),
                        (&pw[x][y][w], &e[z], &identity),
                        (&pw[x][z][w], &e[y], &identity),
                        (&pw[y][z][w], &e[x], &identity),
                        (xy, &e[w], &right[z]),
                        (xz, &e[w], &right[y]),
                        (yz, &e[w], &right[x]),
                    ];
                    let rhs: [Term<T>; 9] = [
                        (&e[w], &e[z], &left_p[x][y]),
                        (&e[w], &e[y], &left_p[x][z]),
                        (&e[w], &e[x], &left_p[y][z]),
                        (&e[x], &e[y], &right_p[w][z]),
                        (&e[x], &e[z], &right_p[w][y]),
                        (&e[y], &e[z], &right_p[w][x]),
                        (xy, &p[w][z], &identity),
                        (xz, &p[w][y], &identity),
                        (yz, &p[w][x], &identity),
                    ];
                    for (u, v, post) in &lhs {
                        add_term(&mut block, true, u, v, post);
                    }
                    for (u, v, post) in &rhs {
                        add_term(&mut block, false, u, v, post);
                    }
                    rows.extend(block);
                }
            }
        }
    }
    rows
}

fn symmetry_rows<T: Scalar + num_traits::One>(n: usize) -> Vec<Vec<T>> {
    let nn = n * n * n;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = vec![T::zero(); nn];
                row[cochain_index(n, i, j, k)] = T::one();
                row[cochain_index(n, j, i, k)] = T::one().negated();
                rows.push(row);
            }
        }
    }
    rows
}

/// Constants times the common denominator, when they are small enough that
/// the quadratic row entries cannot overflow `i128`.
fn small_integer_constants(a: &Algebra) -> Option<Vec<i128>> {
    let d = a
        .constants()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let bound = BigInt::from(1_i64 << 31);
    a.constants()
        .iter()
        .map(|x| {
            let v = x.numer() * (&d / x.denom());
            if v.abs() < bound {
                v.to_i128()
            } else {
                None
            }
        })
        .collect()
}

/// Rank of the cocycle system. Every polarized row is homogeneous of degree
/// two in the constants, so clearing their denominators leaves the rank
/// unchanged and lets the rows be built in machine integers.
fn cocycle_rank(a: &Algebra) -> usize {
    let n = a.dim();
    match small_integer_constants(a) {
        Some(c) => {
            let mut rows = polarized_rows(n, &c);
            rows.extend(symmetry_rows(n));
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect();
            integer_rank(rows, n * n * n)
        }
        None => CocycleSystem::assemble(a).matrix().rank(),
    }
}

/// The map `μ ↦ ((a, b) ↦ μ(ab) − aμ(b) − μ(a)b)` from linear maps to
/// cochains. Column `p·n + q` is the map `e_q ↦ e_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryMap {
    dim: usize,
    matrix: RatMatrix,
}

impl CoboundaryMap {
    pub fn assemble(a: &Algebra) -> Self {
        let n = a.dim();
        let mut cols = Vec::with_capacity(n * n);
        for p in 0..n {
            for q in 0..n {
                let ep = unit_vec(n, p);
                let mut h = vec![Rational::zero(); n * n * n];
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            let mut v = if k == p {
                                a.constant(i, j, q).clone()
                            } else {
                                Rational::zero()
                            };
                            if j == q {
                                v -= a.mul(&unit_vec(n, i), &ep)[k].clone();
                            }
                            if i == q {
                                v -= a.mul(&ep, &unit_vec(n, j))[k].clone();
                            }
                            h[cochain_index(n, i, j, k)] = v;
                        }
                    }
                }
                cols.push(h);
            }
        }
        CoboundaryMap {
            dim: n,
            matrix: RatMatrix::from_cols(n * n * n, &cols),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    /// The cochain `δμ` for the generator `e_q ↦ e_p`.
    pub fn generator(&self, p: usize, q: usize) -> RatVec {
        self.matrix.col(p * self.dim + q)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CohomologyDims {
    pub z2: usize,
    pub b2: usize,
    pub h2: usize,
}

fn require_jordan(a: &Algebra) -> Result<()> {
    if is_jordan(a).holds() {
        Ok(())
    } else {
        Err(Error::NotJordan)
    }
}

pub fn z2_dim(a: &Algebra) -> Result<usize> {
    require_jordan(a)?;
    let n = a.dim();
    Ok(n * n * n - cocycle_rank(a))
}

/// Basis of the cocycle space.
pub fn z2_basis(a: &Algebra) -> Result<Vec<RatVec>> {
    require_jordan(a)?;
    Ok(CocycleSystem::assemble(a).matrix().kernel_basis())
}

pub fn b2_dim(a: &Algebra) -> Result<usize> {
    require_jordan(a)?;
    Ok(CoboundaryMap::assemble(a).matrix().rank())
}

pub fn h2_dim(a: &Algebra) -> Result<usize> {
    Ok(cohomology_dims(a)?.h2)
}

pub fn cohomology_dims(a: &Algebra) -> Result<CohomologyDims> {
    let z2 = z2_dim(a)?;
    let b2 = CoboundaryMap::assemble(a).matrix().rank();
    let h2 = z2
        .checked_sub(b2)
        .ok_or_else(|| Error::Internal(format!("coboundaries ({b2}) exceed cocycles ({z2})")))?;
    Ok(CohomologyDims { z2, b2, h2 })
}

/// `H2Zero` proves rigidity; nonvanishing `H²` proves nothing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RigidityVerdict {
    H2Zero,
    Inconclusive { h2: usize },
}

impl fmt::Display for RigidityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RigidityVerdict::H2Zero => write!(f, "rigid (H^2 = 0)"),
            RigidityVerdict::Inconclusive { h2 } => write!(f, "inconclusive (dim H^2 = {h2})"),
        }
    }
}

pub fn rigidity_certificate(a: &Algebra) -> Result<RigidityVerdict> {
    Ok(match h2_dim(a)? {
        0 => RigidityVerdict::H2Zero,
        h2 => RigidityVerdict::Inconclusive { h2 },
    })
}
