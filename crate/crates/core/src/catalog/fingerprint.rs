use std::fmt;

use num_traits::Zero;

use super::{format_niltype, niltype_of};
use crate::algebra::{
    annihilator, change_of_basis, derivation_dim, find_unit, is_associative, is_jordan,
    power_filtration, radical_unchecked, trace_form, Algebra, Subspace,
};
use crate::error::{Error, Result};
use crate::exactla::{unit_vec, RatMatrix, Signature};

/// Isomorphism invariants used to separate catalog entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    pub dim_rad: usize,
    pub dim_ann: usize,
    pub dim_der: usize,
    pub niltype_of_radical: Option<Vec<usize>>,
    pub associative: bool,
    pub unital: bool,
    /// `dim J^r` for `r = 1..=dim+1`.
    pub power_dims: Vec<usize>,
    /// `dim J^⟨r⟩` for `r = 1..=dim+1`.
    pub lcs_dims: Vec<usize>,
    pub trace_form_signature: Signature,
    /// `(rank, |pos − neg|)` of `(x + J², y + J²) ↦ x·y` when `dim J² = 1`
    /// and `J·J² = 0`.
    pub square_form_invariant: Option<(usize, usize)>,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sq = match self.square_form_invariant {
            Some((r, d)) => format!("({r},{d})"),
            None => "-".to_string(),
        };
        write!(
            f,
            "dim={} rad={} ann={} der={} niltype={} assoc={} unital={} powers={:?} lcs={:?} trace_sig={} square_form={}",
            self.dim,
            self.dim_rad,
            self.dim_ann,
            self.dim_der,
            format_niltype(self.niltype_of_radical.as_deref()),
            self.associative,
            self.unital,
            self.power_dims,
            self.lcs_dims,
            self.trace_form_signature,
            sq
        )
    }
}

fn square_form_invariant(a: &Algebra, square: &Subspace) -> Result<Option<(usize, usize)>> {
    if square.dim() != 1 {
        return Ok(None);
    }
    let s = &square.basis()[0];
    let n = a.dim();
    if (0..n).any(|i| !a.mul(&unit_vec(n, i), s).iter().all(Zero::is_zero)) {
        return Ok(None);
    }
    // The echelon generator has a 1 at its pivot, so the coordinate of a
    // product along `s` is its entry there.
    let pivot = s
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero generator");
    let comp = square.complement_basis();
    let m = comp.len();
    let mut gram = RatMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            gram[(i, j)] = a.mul(&comp[i], &comp[j])[pivot].clone();
        }
    }
    let sig = gram.signature()?;
    Ok(Some((
        sig.positive + sig.negative,
        sig.positive.abs_diff(sig.negative),
    )))
}

pub fn fingerprint(a: &Algebra) -> Result<Fingerprint> {
    if !is_jordan(a).holds() {
        return Err(Error::NotJordan);
    }
    let pf = power_filtration(a);
    let square = pf
        .powers
        .get(1)
        .cloned()
        .unwrap_or_else(|| Subspace::zero(a.dim()));
    let rad = radical_unchecked(a)?;
    Ok(Fingerprint {
        dim: a.dim(),
        dim_rad: rad.dim(),
        dim_ann: annihilator(a).dim(),
        dim_der: derivation_dim(a),
        niltype_of_radical: niltype_of(a, &rad)?,
        associative: is_associative(a).holds(),
        unital: find_unit(a).is_some(),
        power_dims: pf.power_dims(),
        lcs_dims: pf.lcs_dims(),
        trace_form_signature: trace_form(a).gram.signature()?,
        square_form_invariant: square_form_invariant(a, &square)?,
    })
}

/// Fingerprints of named algebras and every pair that shares one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctnessReport {
    pub fingerprints: Vec<(String, Fingerprint)>,
    pub collisions: Vec<(String, String)>,
}

impl DistinctnessReport {
    pub fn all_distinct(&self) -> bool {
        self.collisions.is_empty()
    }
}

pub fn pairwise_distinct_audit(algebras: &[(String, Algebra)]) -> Result<DistinctnessReport> {
    let fingerprints = algebras
        .iter()
        .map(|(id, a)| Ok((id.clone(), fingerprint(a)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut collisions = Vec::new();
    for (i, (x, fx)) in fingerprints.iter().enumerate() {
        for (y, fy) in &fingerprints[i + 1..] {
            if fx == fy {
                collisions.push((x.clone(), y.clone()));
            }
        }
    }
    Ok(DistinctnessReport {
        fingerprints,
        collisions,
    })
}

/// A claimed isomorphism: `change_of_basis(source, matrix)` should have the
/// target's constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub source: Algebra,
    pub target: Algebra,
    pub matrix: RatMatrix,
}

impl IsoWitness {
    pub fn source_id(&self) -> &str {
        self.source.label().unwrap_or("?")
    }

    pub fn target_id(&self) -> &str {
        self.target.label().unwrap_or("?")
    }
}

pub fn verify_iso(w: &IsoWitness) -> Result<bool> {
    Ok(change_of_basis(&w.source, &w.matrix)?.same_constants(&w.target))
}
