use std::fmt;

use num_traits::Zero;

use super::Algebra;
use crate::exactla::{sub_vec, unit_vec, RatVec, Rational};

/// Outcome of checking the Jordan identity on structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JordanVerdict {
    Holds,
    /// First violated equation of the structure-constant system, indices
    /// 0-based, with its nonzero residual.
    Violated {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        p: usize,
        residual: Rational,
    },
}

impl JordanVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, JordanVerdict::Holds)
    }
}

impl fmt::Display for JordanVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JordanVerdict::Holds => write!(f, "Jordan identity holds"),
            JordanVerdict::Violated {
                i,
                j,
                k,
                l,
                p,
                residual,
            } => write!(
                f,
                "Jordan identity violated at (i,j,k,l,p) = ({},{},{},{},{}), residual {}",
                i + 1,
                j + 1,
                k + 1,
                l + 1,
                p + 1,
                residual
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AssociativityVerdict {
    Holds,
    /// `(e_i e_j) e_k − e_i (e_j e_k)`, 0-based.
    Violated {
        i: usize,
        j: usize,
        k: usize,
        associator: RatVec,
    },
}

impl AssociativityVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, AssociativityVerdict::Holds)
    }
}

fn assoc(a: &Algebra, x: &[Rational], y: &[Rational], z: &[Rational]) -> RatVec {
    sub_vec(&a.mul(&a.mul(x, y), z), &a.mul(x, &a.mul(y, z)))
}

/// Evaluates, for every index tuple `(i, j, k, l)` and output coordinate `p`,
///
/// ```text
/// (e_i, e_j, e_k e_l) + (e_l, e_j, e_k e_i) + (e_k, e_j, e_i e_l)
/// ```
///
/// which is the cubic structure-constant system cutting out `Jor_n`.
#[allow(clippy::needless_range_loop)]
pub fn is_jordan(a: &Algebra) -> JordanVerdict {
    let n = a.dim();
    let e: Vec<RatVec> = (0..n).map(|i| unit_vec(n, i)).collect();
    // assoc[i][j][m] = (e_i, e_j, e_m); the associator is linear in its last slot.
    let assoc_basis: Vec<Vec<Vec<RatVec>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|m| assoc(a, &e[i], &e[j], &e[m])).collect())
                .collect()
        })
        .collect();
    let mut r = vec![Rational::zero(); n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    r.iter_mut().for_each(|x| x.set_zero());
                    for (x, kl) in [(i, (k, l)), (l, (k, i)), (k, (i, l))] {
                        for m in 0..n {
                            let z = a.constant(kl.0, kl.1, m);
                            if z.is_zero() {
                                continue;
                            }
                            for (rp, v) in r.iter_mut().zip(&assoc_basis[x][j][m]) {
                                if !v.is_zero() {
                                    *rp += z * v;
                                }
                            }
                        }
                    }
                    if let Some(p) = r.iter().position(|x| !x.is_zero()) {
                        return JordanVerdict::Violated {
                            i,
                            j,
                            k,
                            l,
                            p,
                            residual: r[p].clone(),
                        };
                    }
                }
            }
        }
    }
    JordanVerdict::Holds
}

pub fn is_associative(a: &Algebra) -> AssociativityVerdict {
    let n = a.dim();
    let e: Vec<RatVec> = (0..n).map(|i| unit_vec(n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let r = assoc(a, &e[i], &e[j], &e[k]);
                if r.iter().any(|x| !x.is_zero()) {
                    return AssociativityVerdict::Violated {
                        i,
                        j,
                        k,
                        associator: r,
                    };
                }
            }
        }
    }
    AssociativityVerdict::Holds
}
