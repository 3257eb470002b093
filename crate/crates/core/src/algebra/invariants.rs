use num_traits::{One, Zero};

use super::{is_jordan, Algebra, Subspace};
use crate::error::{Error, Result};
use crate::exactla::{RatMatrix, RatVec, Rational};

/// The power chain `J^r` and the lower central series `J^⟨r⟩`, both computed
/// until they stabilize (at most `dim + 1` steps).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerFiltration {
    /// `powers[r - 1] = J^r`.
    pub powers: Vec<Subspace>,
    /// `lcs[r - 1] = J^⟨r⟩`.
    pub lcs: Vec<Subspace>,
    /// `(n_1, …, n_{s-1})` with `n_i = dim J^⟨i⟩ / J^⟨i+1⟩`, present iff `J^⟨s⟩ = 0`.
    pub niltype: Option<Vec<usize>>,
}

impl PowerFiltration {
    pub fn power_dims(&self) -> Vec<usize> {
        self.powers.iter().map(Subspace::dim).collect()
    }

    pub fn lcs_dims(&self) -> Vec<usize> {
        self.lcs.iter().map(Subspace::dim).collect()
    }

    /// `dim J^r` for `r ≥ 1`; the chain is constant past its stored length.
    pub fn power_dim(&self, r: usize) -> usize {
        assert!(r >= 1);
        let idx = (r - 1).min(self.powers.len() - 1);
        self.powers[idx].dim()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.niltype.is_some()
    }
}

/// `span{ u · v : u ∈ U, v ∈ V }`.
pub(crate) fn product_space(a: &Algebra, u: &Subspace, v: &Subspace) -> Subspace {
    let prods: Vec<RatVec> = u
        .basis()
        .iter()
        .flat_map(|x| v.basis().iter().map(move |y| a.mul(x, y)))
        .collect();
    Subspace::span(a.dim(), &prods)
}

pub fn power_filtration(a: &Algebra) -> PowerFiltration {
    let n = a.dim();
    let steps = n + 2;
    let full = Subspace::full(n);

    let mut powers = vec![full.clone()];
    for r in 2..=steps {
        let mut acc = Subspace::zero(n);
        for i in 1..r {
            acc = acc.sum(&product_space(a, &powers[i - 1], &powers[r - i - 1]));
        }
        powers.push(acc);
    }
    let mut lcs = vec![full.clone()];
    for _ in 2..=steps {
        let next = product_space(a, lcs.last().unwrap(), &full);
        lcs.push(next);
    }
    assert!(
        powers[steps - 1] == powers[steps - 2] && lcs[steps - 1] == lcs[steps - 2],
        "power chains did not stabilize within dim + 1 steps"
    );
    powers.truncate(n + 1);
    lcs.truncate(n + 1);

    let niltype = lcs
        .iter()
        .position(Subspace::is_zero)
        .map(|s| (0..s).map(|i| lcs[i].dim() - lcs[i + 1].dim()).collect());
    PowerFiltration {
        powers,
        lcs,
        niltype,
    }
}

/// `{ x : x · e_i = 0 for all i }`.
pub fn annihilator(a: &Algebra) -> Subspace {
    let n = a.dim();
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for p in 0..n {
            rows.push((0..n).map(|k| a.constant(k, i, p).clone()).collect());
        }
    }
    Subspace::span(n, &RatMatrix::from_rows(n, rows).kernel_basis())
}

/// The symmetric form `(x, y) ↦ tr L_{x·y}` in the standard basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceForm {
    pub gram: RatMatrix,
}

pub fn trace_form(a: &Algebra) -> TraceForm {
    let n = a.dim();
    let tr: Vec<Rational> = (0..n)
        .map(|k| (0..n).fold(Rational::zero(), |s, m| s + a.constant(k, m, m)))
        .collect();
    let mut gram = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram[(i, j)] = (0..n).fold(Rational::zero(), |s, k| s + a.constant(i, j, k) * &tr[k]);
        }
    }
    TraceForm { gram }
}

/// Restriction of the product to a subalgebra, in the coordinates of the
/// subspace's echelon basis.
pub fn restrict(a: &Algebra, sub: &Subspace) -> Result<Algebra> {
    let m = sub.dim();
    if m == 0 {
        return Err(Error::ZeroDimension);
    }
    let b = sub.basis();
    let mut products = Vec::new();
    for i in 0..m {
        for j in i..m {
            let coords = sub
                .coordinates(&a.mul(&b[i], &b[j]))
                .ok_or(Error::NotSubalgebra)?;
            for (k, v) in coords.into_iter().enumerate() {
                if !v.is_zero() {
                    products.push((i, j, k, v));
                }
            }
        }
    }
    Algebra::from_products(m, &products)
}

/// Radical as the kernel of the trace form. The result is checked to be an
/// ideal and nilpotent; failure of either is reported as an internal error.
pub fn radical(a: &Algebra) -> Result<Subspace> {
    if !is_jordan(a).holds() {
        return Err(Error::NotJordan);
    }
    radical_unchecked(a)
}

/// [`radical`] for input already known to be Jordan.
pub(crate) fn radical_unchecked(a: &Algebra) -> Result<Subspace> {
    let n = a.dim();
    let rad = Subspace::span(n, &trace_form(a).gram.kernel_basis());
    if rad.is_zero() {
        return Ok(rad);
    }
    let full = Subspace::full(n);
    if !product_space(a, &rad, &full).is_subspace_of(&rad) {
        return Err(Error::Internal("trace-form kernel is not an ideal".into()));
    }
    if !power_filtration(&restrict(a, &rad)?).is_nilpotent() {
        return Err(Error::Internal("trace-form kernel is not nilpotent".into()));
    }
    Ok(rad)
}

/// Coefficient matrix of `D(e_i e_j) = D(e_i) e_j + e_i D(e_j)` in the `n²`
/// unknowns `D[q][i]` (column `q·n + i`), where `D(e_i) = Σ_q D[q][i] e_q`.
pub fn derivation_matrix(a: &Algebra) -> RatMatrix {
    let n = a.dim();
    let var = |q: usize, i: usize| q * n + i;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            for p in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for k in 0..n {
                    row[var(p, k)] += a.constant(i, j, k);
                    row[var(k, i)] -= a.constant(k, j, p);
                    row[var(k, j)] -= a.constant(i, k, p);
                }
                rows.push(row);
            }
        }
    }
    RatMatrix::from_rows(n * n, rows)
}

pub fn derivation_dim(a: &Algebra) -> usize {
    let n = a.dim();
    n * n - derivation_matrix(a).rank()
}

/// `dim GL_n − dim Der`.
pub fn orbit_dimension(a: &Algebra) -> usize {
    let n = a.dim();
    n * n - derivation_dim(a)
}

/// Solves `u · e_i = e_i` for all `i`.
pub fn find_unit(a: &Algebra) -> Option<RatVec> {
    let n = a.dim();
    let mut rows = Vec::with_capacity(n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for i in 0..n {
        for p in 0..n {
            rows.push((0..n).map(|k| a.constant(k, i, p).clone()).collect());
            rhs.push(if i == p {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
    }
    // A unit is unique when it exists, so any solution is the solution.
    RatMatrix::from_rows(n, rows)
        .solve(&rhs)
        .expect("shapes agree")
}
