use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{RatMatrix, Rational, UniPoly};

/// Square matrix over `ℚ[t]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<UniPoly>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<UniPoly>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: bad.len(),
            });
        }
        Ok(PolyMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_cols(cols: Vec<Vec<UniPoly>>) -> Result<Self> {
        let n = cols.len();
        let rows = (0..n)
            .map(|i| {
                cols.iter()
                    .map(|c| c.get(i).cloned().unwrap_or_else(UniPoly::zero))
                    .collect()
            })
            .collect();
        if let Some(bad) = cols.iter().find(|c| c.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: bad.len(),
            });
        }
        Self::new(rows)
    }

    pub fn scalar(n: usize, p: UniPoly) -> Self {
        let mut entries = vec![UniPoly::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = p.clone();
        }
        PolyMatrix { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, UniPoly::one())
    }

    pub fn from_rat(m: &RatMatrix) -> Self {
        PolyMatrix {
            n: m.rows(),
            entries: (0..m.rows())
                .flat_map(|i| m.row(i).iter().map(|x| UniPoly::constant(x.clone())))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &UniPoly {
        &self.entries[i * self.n + j]
    }

    pub fn col(&self, j: usize) -> Vec<UniPoly> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<UniPoly>> {
        self.entries
            .chunks(self.n)
            .map(<[UniPoly]>::to_vec)
            .collect()
    }

    /// Scales column `j` by `t^k[j]`.
    pub fn scale_columns(&self, k: &[usize]) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            for (j, &kj) in k.iter().enumerate() {
                out.entries[i * self.n + j] =
                    self.get(i, j) * &UniPoly::monomial(Rational::one(), kj);
            }
        }
        out
    }

    pub fn eval(&self, t0: &Rational) -> RatMatrix {
        RatMatrix::from_rows(
            self.n,
            self.rows()
                .iter()
                .map(|r| r.iter().map(|p| p.eval(t0)).collect())
                .collect(),
        )
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> PolyMatrix {
        let n = self.n - 1;
        let mut entries = Vec::with_capacity(n * n);
        for i in (0..self.n).filter(|&i| i != skip_row) {
            for j in (0..self.n).filter(|&j| j != skip_col) {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { n, entries }
    }

    /// Cofactor expansion along the first row; the matrices here are tiny.
    pub fn det(&self) -> UniPoly {
        match self.n {
            1 => self.entries[0].clone(),
            2 => &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0)),
            _ => (0..self.n).fold(UniPoly::zero(), |acc, j| {
                let a = self.get(0, j);
                if a.is_zero() {
                    return acc;
                }
                let term = a * &self.minor(0, j).det();
                if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                }
            }),
        }
    }

    /// `adj(g)` with `adj(g)·g = det(g)·I`.
    pub fn adjugate(&self) -> PolyMatrix {
        let n = self.n;
        if n == 1 {
            return PolyMatrix::identity(1);
        }
        let mut entries = vec![UniPoly::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(j, i).det();
                entries[i * n + j] = if (i + j) % 2 == 0 { c } else { -c };
            }
        }
        PolyMatrix { n, entries }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let toks: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", toks.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, rat};

    fn p(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    fn sample() -> PolyMatrix {
        PolyMatrix::new(vec![
            vec![p("t"), p("1"), p("0")],
            vec![p("0"), p("t^2"), p("2")],
            vec![p("1"), p("0"), p("1/2*t")],
        ])
        .unwrap()
    }

    #[test]
    fn determinant_and_adjugate() {
        let g = sample();
        // t·(t³/2 − 0) − 1·(0 − 2) = t⁴/2 + 2
        assert_eq!(g.det(), p("1/2*t^4+2"));
        let adj = g.adjugate();
        for i in 0..3 {
            for j in 0..3 {
                let s = (0..3).fold(UniPoly::zero(), |acc, k| {
                    &acc + &(adj.get(i, k) * g.get(k, j))
                });
                let expect = if i == j { g.det() } else { UniPoly::zero() };
                assert_eq!(s, expect);
            }
        }
    }

    #[test]
    fn evaluation_agrees_with_rational_det() {
        let g = sample();
        for t0 in [int(0), int(3), rat(-1, 2)] {
            assert_eq!(g.eval(&t0).det().unwrap(), g.det().eval(&t0));
        }
    }

    #[test]
    fn column_scaling() {
        let g = PolyMatrix::identity(2).scale_columns(&[0, 2]);
        assert_eq!(g.get(1, 1), &p("t^2"));
        assert_eq!(g.get(0, 0), &p("1"));
        let c = PolyMatrix::from_cols(vec![vec![p("1"), p("t")], vec![p("0"), p("1")]]).unwrap();
        assert_eq!(c.get(1, 0), &p("t"));
        assert!(PolyMatrix::new(vec![vec![p("1")], vec![]]).is_err());
    }
}
