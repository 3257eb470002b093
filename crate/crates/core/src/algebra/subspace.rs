use num_traits::Zero;

use crate::exactla::{is_zero_vec, RatMatrix, RatVec, Rational};

/// Subspace of ℚⁿ stored as the nonzero rows of a reduced row echelon form,
/// so two equal subspaces have identical bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<RatVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[RatVec]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let m = RatMatrix::from_rows(ambient, vectors.to_vec());
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let vs: Vec<RatVec> = (0..ambient)
            .map(|i| crate::exactla::unit_vec(ambient, i))
            .collect();
        Self::span(ambient, &vs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[RatVec] {
        &self.basis
    }

    /// Remainder of `v` after reduction against the echelon basis.
    fn reduce(&self, v: &[Rational]) -> RatVec {
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x -= &f * r;
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &vs)
    }

    /// Coordinates of `v` with respect to `self.basis()`, if `v` lies in the
    /// subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<RatVec> {
        if !self.contains(v) {
            return None;
        }
        // Echelon rows have a 1 at their pivot and zeros at other pivots.
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Standard basis vectors completing `self` to a basis of the ambient
    /// space.
    pub fn complement_basis(&self) -> Vec<RatVec> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .map(|c| crate::exactla::unit_vec(self.ambient, c))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, rat};

    #[test]
    fn span_is_canonical() {
        let a = Subspace::span(
            3,
            &[vec![int(2), int(2), int(0)], vec![int(0), int(0), int(1)]],
        );
        let b = Subspace::span(
            3,
            &[vec![int(1), int(1), int(5)], vec![int(0), int(0), int(-3)]],
        );
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&[int(3), int(3), int(7)]));
        assert!(!a.contains(&[int(1), int(0), int(0)]));
        assert_eq!(
            a.coordinates(&[int(3), int(3), int(7)]),
            Some(vec![int(3), int(7)])
        );
        assert_eq!(a.complement_basis(), vec![vec![int(0), int(1), int(0)]]);
    }

    #[test]
    fn zero_and_sum() {
        let z = Subspace::zero(2);
        assert!(z.is_zero());
        let x = Subspace::span(2, &[vec![int(1), rat(1, 2)]]);
        assert_eq!(z.sum(&x), x);
        assert!(z.is_subspace_of(&x));
        assert_eq!(Subspace::span(2, &[vec![int(0), int(0)]]).dim(), 0);
    }
}
