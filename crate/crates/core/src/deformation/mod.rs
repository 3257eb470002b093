//! Degenerations: algebras conjugated by a polynomial basis change `g(t)` and
//! their limits at `t = 0`, the necessary conditions any degeneration must
//! satisfy, and the resulting orbit-closure graph.

mod audit;
mod graph;
mod poly_matrix;
mod search;
mod witnesses;

use std::fmt;

use num_traits::Zero;

use crate::algebra::{is_jordan, Algebra};
use crate::catalog;
use crate::error::{Error, Result};
use crate::exactla::{Rational, RationalFunction, UniPoly};

pub use audit::{necessary_conditions_audit, profile, AuditCheck, AuditReport, Profile};
pub use graph::{
    build_closure_graph, build_jor2_graph, rigid_coverage_check, Arrow, ArrowStatus, ClosureGraph,
    CoverageReport, RigidityCheck, BY_REFERENCE_EDGES, RIGID_SET,
};
pub use poly_matrix::PolyMatrix;
pub use search::{derive_witness_search, SearchSpace};
pub use witnesses::{derived_witness, explicit_witnesses, jor2_witnesses, scaling_witness};

/// Structure constants depending rationally on `t`, laid out like
/// [`Algebra::constants`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFamily {
    dim: usize,
    c: Vec<RationalFunction>,
}

impl AlgebraFamily {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &RationalFunction {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// The member at `t = t0`, or `None` if some constant has a pole there.
    pub fn specialize(&self, t0: &Rational) -> Option<Algebra> {
        let c = self
            .c
            .iter()
            .map(|f| f.eval(t0))
            .collect::<Option<Vec<_>>>()?;
        Algebra::new(self.dim, c).ok()
    }
}

/// Constants of `a` in the basis given by the columns of `g(t)`, as exact
/// rational functions of `t`.
pub fn conjugate_family(a: &Algebra, g: &PolyMatrix) -> Result<AlgebraFamily> {
    let n = a.dim();
    if g.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: g.dim(),
        });
    }
    let det = g.det();
    if det.is_zero() {
        return Err(Error::IdenticallySingular);
    }
    let adj = g.adjugate();
    let cols: Vec<Vec<UniPoly>> = (0..n).map(|j| g.col(j)).collect();
    let mut c = vec![RationalFunction::zero(); n * n * n];
    for i in 0..n {
        for j in i..n {
            let mut prod = vec![UniPoly::zero(); n];
            for (p, gp) in cols[i].iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                for (q, gq) in cols[j].iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    let s = gp * gq;
                    for (m, out) in prod.iter_mut().enumerate() {
                        let cc = a.constant(p, q, m);
                        if !cc.is_zero() {
                            *out = &*out + &s.scale(cc);
                        }
                    }
                }
            }
            for k in 0..n {
                let num = (0..n).fold(UniPoly::zero(), |acc, m| &acc + &(adj.get(k, m) * &prod[m]));
                let f = RationalFunction::new(num, det.clone()).expect("nonzero determinant");
                c[(i * n + j) * n + k] = f.clone();
                c[(j * n + i) * n + k] = f;
            }
        }
    }
    Ok(AlgebraFamily { dim: n, c })
}

/// Entrywise value at `t = 0`. The Jordan identity is a closed condition, so
/// a non-Jordan limit of a Jordan family signals a bug rather than bad input.
pub fn limit_algebra(f: &AlgebraFamily) -> Result<Algebra> {
    let c =
        f.c.iter()
            .map(RationalFunction::limit_at_zero)
            .collect::<Result<Vec<_>>>()?;
    let lim = Algebra::new(f.dim, c)?;
    if !is_jordan(&lim).holds() {
        return Err(Error::NotJordanAtLimit);
    }
    Ok(lim)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    Explicit,
    Derived,
    Scaling,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Explicit => "explicit",
            Provenance::Derived => "derived",
            Provenance::Scaling => "scaling",
        })
    }
}

/// A basis-change curve claimed to carry `source` to `target` as `t → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub source: String,
    pub target: String,
    pub g: PolyMatrix,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrowVerdict {
    Verified,
    Failed(String),
}

impl ArrowVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, ArrowVerdict::Verified)
    }
}

impl fmt::Display for ArrowVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrowVerdict::Verified => write!(f, "verified"),
            ArrowVerdict::Failed(r) => write!(f, "failed: {r}"),
        }
    }
}

/// Checks that the limit of the conjugated source has exactly the target's
/// catalog constants.
pub fn verify_arrow(w: &Witness) -> Result<ArrowVerdict> {
    let source = &catalog::get(&w.source)?.algebra;
    let target = &catalog::get(&w.target)?.algebra;
    verify_limit(source, target, &w.g)
}

/// [`verify_arrow`] for algebras outside the catalog.
pub fn verify_limit(source: &Algebra, target: &Algebra, g: &PolyMatrix) -> Result<ArrowVerdict> {
    let family = match conjugate_family(source, g) {
        Ok(f) => f,
        Err(e @ (Error::IdenticallySingular | Error::DimensionMismatch { .. })) => {
            return Ok(ArrowVerdict::Failed(e.to_string()))
        }
        Err(e) => return Err(e),
    };
    let lim = match limit_algebra(&family) {
        Ok(l) => l,
        Err(Error::PoleAtZero) => return Ok(ArrowVerdict::Failed(Error::PoleAtZero.to_string())),
        Err(e) => return Err(e),
    };
    if lim.same_constants(target) {
        Ok(ArrowVerdict::Verified)
    } else {
        Ok(ArrowVerdict::Failed(format!(
            "limit differs from target:\n{lim}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::change_of_basis;
    use crate::exactla::{int, rat};

    fn p(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    #[test]
    fn scaling_multiplies_constants_by_t() {
        let a = &catalog::get("J20").unwrap().algebra;
        let f = conjugate_family(a, &PolyMatrix::scalar(3, UniPoly::t())).unwrap();
        for (fc, c) in f.c.iter().zip(a.constants()) {
            assert_eq!(fc, &RationalFunction::from(UniPoly::monomial(c.clone(), 1)));
        }
        assert!(limit_algebra(&f)
            .unwrap()
            .same_constants(&catalog::get("J22").unwrap().algebra));
    }

    #[test]
    fn identity_gives_constant_family() {
        let a = &catalog::get("J7").unwrap().algebra;
        let f = conjugate_family(a, &PolyMatrix::identity(3)).unwrap();
        assert!(limit_algebra(&f).unwrap().same_constants(a));
    }

    #[test]
    fn specialization_matches_change_of_basis() {
        let a = &catalog::get("J15").unwrap().algebra;
        let g = PolyMatrix::new(vec![
            vec![p("0"), p("0"), p("t")],
            vec![p("0"), p("t"), p("1")],
            vec![p("t^2"), p("-t"), p("1")],
        ])
        .unwrap();
        let f = conjugate_family(a, &g).unwrap();
        for t0 in [int(1), int(-2), rat(1, 3)] {
            let direct = change_of_basis(a, &g.eval(&t0)).unwrap();
            assert!(f.specialize(&t0).unwrap().same_constants(&direct));
        }
    }

    #[test]
    fn singular_curves_rejected() {
        let a = &catalog::get("J1").unwrap().algebra;
        let g = PolyMatrix::new(vec![
            vec![p("t"), p("t"), p("0")],
            vec![p("1"), p("1"), p("0")],
            vec![p("0"), p("0"), p("1")],
        ])
        .unwrap();
        assert_eq!(conjugate_family(a, &g), Err(Error::IdenticallySingular));
    }

    #[test]
    fn pole_is_a_failed_verdict() {
        // Shrinking the square n1² = n2 of J21 leaves n1² = t⁻¹·(t n2).
        let g = PolyMatrix::new(vec![
            vec![p("1"), p("0"), p("0")],
            vec![p("0"), p("t"), p("0")],
            vec![p("0"), p("0"), p("1")],
        ])
        .unwrap();
        let w = Witness {
            source: "J21".into(),
            target: "J24".into(),
            g,
            provenance: Provenance::Derived,
        };
        assert!(matches!(verify_arrow(&w).unwrap(), ArrowVerdict::Failed(r) if r.contains("pole")));
    }
}
