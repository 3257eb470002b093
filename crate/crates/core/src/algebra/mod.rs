//! Commutative algebras given by structure constants `e_i · e_j = Σ_k c_ij^k e_k`
//! and the invariants used to tell them apart.

mod identities;
mod invariants;
pub mod jalg;
mod peirce;
mod subspace;

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{RatMatrix, RatVec, Rational};

pub use identities::{is_associative, is_jordan, AssociativityVerdict, JordanVerdict};
pub(crate) use invariants::radical_unchecked;
pub use invariants::{
    annihilator, derivation_dim, derivation_matrix, find_unit, orbit_dimension, power_filtration,
    radical, restrict, trace_form, PowerFiltration, TraceForm,
};
pub use peirce::{
    peirce_decompose, refined_peirce, verify_idempotent, PeirceDecomposition, PeirceRule,
    RefinedPeirce,
};
pub use subspace::Subspace;

/// An `n`-dimensional commutative algebra over ℚ. The tensor is stored
/// densely with `c[(i·n + j)·n + k] = c_ij^k` and is symmetric in `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    dim: usize,
    c: Vec<Rational>,
    label: Option<String>,
}

impl Algebra {
    pub fn new(dim: usize, c: Vec<Rational>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if c.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                got: c.len(),
            });
        }
        for i in 0..dim {
            for j in 0..i {
                for k in 0..dim {
                    if c[(i * dim + j) * dim + k] != c[(j * dim + i) * dim + k] {
                        return Err(Error::NotCommutative { i, j, k });
                    }
                }
            }
        }
        Ok(Algebra {
            dim,
            c,
            label: None,
        })
    }

    /// The algebra with all products zero.
    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(dim, vec![Rational::zero(); dim * dim * dim])
    }

    /// Builds an algebra from nonzero products `(i, j, k, c_ij^k)` with 0-based
    /// indices; the symmetric entry `c_ji^k` is filled in. Repeated entries
    /// accumulate.
    pub fn from_products(dim: usize, products: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut c = vec![Rational::zero(); dim * dim * dim];
        for (i, j, k, v) in products {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: i.max(j).max(k) + 1,
                });
            }
            c[(i * dim + j) * dim + k] += v;
            if i != j {
                c[(j * dim + i) * dim + k] += v;
            }
        }
        Self::new(dim, c)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[Rational] {
        &self.c
    }

    /// Structure-constant equality, ignoring labels.
    pub fn same_constants(&self, other: &Algebra) -> bool {
        self.dim == other.dim && self.c == other.c
    }

    /// `e_i · e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> RatVec {
        let off = (i * self.dim + j) * self.dim;
        self.c[off..off + self.dim].to_vec()
    }

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<RatVec> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: v.len(),
                });
            }
        }
        Ok(self.mul(x, y))
    }

    /// Bilinear product; lengths must already match.
    pub(crate) fn mul(&self, x: &[Rational], y: &[Rational]) -> RatVec {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                let off = (i * n + j) * n;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.c[off + k];
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x · y`.
    pub fn mult_operator(&self, x: &[Rational]) -> RatMatrix {
        let n = self.dim;
        let cols: Vec<RatVec> = (0..n)
            .map(|j| self.mul(x, &crate::exactla::unit_vec(n, j)))
            .collect();
        RatMatrix::from_cols(n, &cols)
    }
}

/// Structure constants with respect to the basis formed by the columns of
/// `g`: `x ·' y = g⁻¹(g x · g y)`. This is the action of `g⁻¹`, so the result
/// lies in the same orbit.
pub fn change_of_basis(a: &Algebra, g: &RatMatrix) -> Result<Algebra> {
    let n = a.dim;
    if g.rows() != n || g.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: g.rows().max(g.cols()),
        });
    }
    let ginv = g.inverse()?;
    let cols: Vec<RatVec> = (0..n).map(|j| g.col(j)).collect();
    let mut c = vec![Rational::zero(); n * n * n];
    for i in 0..n {
        for j in i..n {
            let prod = a.mul(&cols[i], &cols[j]);
            let d = ginv.mul_vec(&prod)?;
            for (k, v) in d.into_iter().enumerate() {
                c[(i * n + j) * n + k] = v.clone();
                c[(j * n + i) * n + k] = v;
            }
        }
    }
    Algebra::new(n, c)
}

/// Block-diagonal structure constants: the basis of `a` followed by that of `b`.
pub fn direct_sum(a: &Algebra, b: &Algebra) -> Algebra {
    let n = a.dim + b.dim;
    let mut c = vec![Rational::zero(); n * n * n];
    let mut place = |src: &Algebra, off: usize| {
        let m = src.dim;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    c[((i + off) * n + j + off) * n + k + off] = src.constant(i, j, k).clone();
                }
            }
        }
    };
    place(a, 0);
    place(b, a.dim);
    Algebra::new(n, c).expect("direct sum of commutative algebras is commutative")
}

/// Adjoins a formal unit as basis vector 0; the original basis follows at
/// indices `1..=n`.
pub fn unitalize(a: &Algebra) -> Algebra {
    let n = a.dim + 1;
    let mut c = vec![Rational::zero(); n * n * n];
    for i in 0..n {
        c[i * n + i] = Rational::one();
        c[(i * n) * n + i] = Rational::one();
    }
    for i in 0..a.dim {
        for j in 0..a.dim {
            for k in 0..a.dim {
                c[((i + 1) * n + j + 1) * n + k + 1] = a.constant(i, j, k).clone();
            }
        }
    }
    Algebra::new(n, c).expect("unitalization is commutative")
}

impl fmt::Display for Algebra {
    /// Nonzero products `e_i e_j = …` with 1-based indices, `i ≤ j`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.dim).map(|i| format!("e{i}")).collect();
        write!(f, "{}", multiplication_table(self, &names))
    }
}

/// Human-readable multiplication table using the given basis names.
pub fn multiplication_table(a: &Algebra, names: &[String]) -> String {
    let mut out = String::new();
    for i in 0..a.dim {
        for j in i..a.dim {
            let v = a.basis_product(i, j);
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            out.push_str(&format!(
                "{}*{} = {}\n",
                names[i],
                names[j],
                format_vector(&v, names)
            ));
        }
    }
    if out.is_empty() {
        out.push_str("(all products zero)\n");
    }
    out
}

pub fn format_vector(v: &[Rational], names: &[String]) -> String {
    use num_traits::Signed;
    let mut s = String::new();
    for (k, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let neg = x.is_negative();
        let abs = x.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            s.push_str(&format!("{abs} "));
        }
        s.push_str(&names[k]);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
