//! Nilpotent algebras with `J³ = 0` and `dim J² = 1`.
//!
//! In a basis `N1, N2, N3` with `N3` spanning `J²` the only products are
//! `N1² = αN3`, `N2² = βN3`, `N1N2 = γN3`. Up to isomorphism the algebra is
//! `J24`, `J25` or `J26`, decided by `β` and `Δ = γ² − αβ`.

use num_traits::{One, Signed, Zero};

use super::{get, IsoWitness};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{int, rat, rational_sqrt, RatMatrix, Rational};

pub fn nilpotent_21_family(alpha: &Rational, beta: &Rational, gamma: &Rational) -> Algebra {
    Algebra::from_products(
        3,
        &[
            (0, 0, 2, alpha.clone()),
            (1, 1, 2, beta.clone()),
            (0, 1, 2, gamma.clone()),
        ],
    )
    .expect("three-dimensional family")
    .with_label(format!("N({alpha},{beta},{gamma})"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub id: &'static str,
    /// Absent when the isomorphism needs an irrational square root.
    pub witness: Option<IsoWitness>,
}

/// Columns are the images of `N1, N2, N3` in the target basis.
fn images(cols: [[Rational; 3]; 3]) -> RatMatrix {
    let cols: Vec<Vec<Rational>> = cols.into_iter().map(Vec::from).collect();
    RatMatrix::from_cols(3, &cols)
}

pub fn classify_nilpotent_21(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
) -> Result<Classification> {
    let z = Rational::zero;
    let o = Rational::one;
    if alpha.is_zero() && beta.is_zero() && gamma.is_zero() {
        return Err(Error::AllZero);
    }
    let delta = gamma * gamma - alpha * beta;
    let (id, map): (&'static str, Option<RatMatrix>) = if beta.is_zero() {
        if !gamma.is_zero() {
            let g_inv = gamma.recip();
            let map = images([
                [o(), alpha * &g_inv * rat(1, 2), z()],
                [z(), o(), z()],
                [z(), z(), g_inv],
            ]);
            ("J26", Some(map))
        } else {
            let map = images([[o(), z(), z()], [z(), z(), o()], [z(), alpha.recip(), z()]]);
            ("J25", Some(map))
        }
    } else if delta.is_positive() {
        let map = rational_sqrt(&delta).map(|r| {
            let h = gamma / (&r * int(2));
            let half = rat(1, 2);
            let b = beta / (&r * int(2));
            images([
                [&half + &h, &h - &half, z()],
                [b.clone(), b, z()],
                [z(), z(), beta / (&delta * int(2))],
            ])
        });
        ("J26", map)
    } else if delta.is_negative() {
        let map = rational_sqrt(&-&delta).map(|s| {
            images([
                [o(), gamma / &s, z()],
                [z(), beta / &s, z()],
                [z(), z(), -(beta / &delta)],
            ])
        });
        ("J24", map)
    } else if gamma.is_zero() {
        let map = images([[z(), z(), o()], [o(), z(), z()], [z(), beta.recip(), z()]]);
        ("J25", Some(map))
    } else {
        // Δ = 0 with β, γ ≠ 0 forces α = γ²/β ≠ 0.
        let a_inv = alpha.recip();
        let map = images([
            [o(), z(), o()],
            [&a_inv * gamma, z(), z()],
            [z(), a_inv, z()],
        ]);
        ("J25", Some(map))
    };
    let source = nilpotent_21_family(alpha, beta, gamma);
    let target = get(id)?.algebra.clone();
    let witness = match map {
        // The map sends the family's basis into the target, so the target
        // expressed in that basis is the source; the witness is its inverse.
        Some(m) => Some(IsoWitness {
            source,
            target,
            matrix: m.inverse()?,
        }),
        None => None,
    };
    Ok(Classification { id, witness })
}
