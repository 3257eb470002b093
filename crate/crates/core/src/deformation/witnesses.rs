//! Registered basis-change curves.
//!
//! Each curve is written as its new basis vectors, each a combination of the
//! source's named basis vectors with polynomial coefficients.

use num_traits::Zero;

use super::{PolyMatrix, Provenance, Witness};
use crate::catalog;
use crate::error::{Error, Result};
use crate::exactla::UniPoly;

type Column<'a> = &'a [(&'a str, &'a str)];

fn build(
    source: &str,
    target: &str,
    provenance: Provenance,
    cols: &[Column<'_>],
) -> Result<Witness> {
    let basis = &catalog::get(source)?.basis;
    let n = basis.len();
    let mut out = Vec::with_capacity(cols.len());
    for col in cols {
        let mut v = vec![UniPoly::zero(); n];
        for (name, coeff) in col.iter() {
            let idx = basis
                .iter()
                .position(|b| b == name)
                .ok_or_else(|| Error::Internal(format!("{source} has no basis vector {name}")))?;
            let p: UniPoly = coeff.parse().map_err(Error::Internal)?;
            v[idx] = &v[idx] + &p;
        }
        out.push(v);
    }
    Ok(Witness {
        source: source.to_string(),
        target: target.to_string(),
        g: PolyMatrix::from_cols(out)?,
        provenance,
    })
}

fn registered(source: &str, target: &str, provenance: Provenance, cols: &[Column<'_>]) -> Witness {
    build(source, target, provenance, cols).expect("registered witness is well formed")
}

/// The explicit curves for `J21→J24`, `J15→J23`, `J3→J8`, `J4→J11` and `J5→J19`.
pub fn explicit_witnesses() -> Vec<Witness> {
    use Provenance::Explicit as P;
    vec![
        registered(
            "J21",
            "J24",
            P,
            &[
                &[("n1", "t")],
                &[("e1", "t^2"), ("n2", "-1")],
                &[("n2", "t^2")],
            ],
        ),
        registered(
            "J15",
            "J23",
            P,
            &[
                &[("n2", "t^2")],
                &[("n1", "t"), ("n2", "-t")],
                &[("e1", "t"), ("n1", "1"), ("n2", "1")],
            ],
        ),
        registered(
            "J3",
            "J8",
            P,
            &[
                &[("e1", "1/2"), ("e2", "1/2")],
                &[("e1", "1/2"), ("e2", "-1/2")],
                &[("e3", "t")],
            ],
        ),
        registered(
            "J4",
            "J11",
            P,
            &[&[("e1", "1")], &[("e2", "1")], &[("e3", "t")]],
        ),
        registered(
            "J5",
            "J19",
            P,
            &[
                &[("e1", "1/2"), ("e2", "-1/2")],
                &[("e3", "t")],
                &[("e1", "1/2*t^2"), ("e2", "1/2*t^2")],
            ],
        ),
    ]
}

/// `g = t·I`, carrying any algebra to the null algebra of its dimension.
pub fn scaling_witness(source: &str) -> Result<Witness> {
    let e = catalog::get(source)?;
    let target = match e.dim() {
        1 => "Rn",
        2 => "Rn+Rn",
        _ => "J22",
    };
    Ok(Witness {
        source: source.to_string(),
        target: target.to_string(),
        g: PolyMatrix::scalar(e.dim(), UniPoly::t()),
        provenance: Provenance::Scaling,
    })
}

/// Hand-derived curves for the arrows whose proofs are cited rather than given.
pub fn derived_witness(source: &str, target: &str) -> Option<Witness> {
    use Provenance::Derived as D;
    let cols: &[Column<'_>] = match (source, target) {
        ("J1", "J6") => &[&[("e1", "1")], &[("e2", "1")], &[("e3", "t")]],
        ("J6", "J21") => &[
            &[("e2", "t"), ("n1", "t")],
            &[("e2", "t^2")],
            &[("e1", "1")],
        ],
        ("J2", "J9") => &[&[("e1", "1")], &[("e2", "t")], &[("e3", "1")]],
        ("J2", "J10") => &[&[("e1", "1")], &[("e2", "1")], &[("e3", "t")]],
        ("J10", "J15") => &[&[("e1", "1")], &[("e2", "t")], &[("n1", "1")]],
        ("J9", "J18") => &[
            &[("e1", "1"), ("e2", "1")],
            &[("e2", "t"), ("n1", "t")],
            &[("e2", "t^2")],
        ],
        ("J18", "J13") => &[&[("e1", "1")], &[("n1", "t")], &[("n2", "1")]],
        ("J23", "J26") => &[&[("n3", "t")], &[("n2", "1")], &[("n1", "t")]],
        ("J26", "J25") => &[
            &[("n1", "1"), ("n2", "1/2")],
            &[("n3", "1")],
            &[("n2", "t")],
        ],
        ("J8", "J14") => &[&[("e1", "1")], &[("n1", "1")], &[("e2", "t")]],
        ("J20", "J16") => &[&[("e1", "1")], &[("n1", "t")], &[("n2", "1")]],
        ("J7", "J17") => &[&[("e2", "1")], &[("e1", "t")], &[("n1", "t")]],
        _ => return None,
    };
    Some(registered(source, target, D, cols))
}

/// Curves realizing the arrows between two-dimensional algebras.
pub fn jor2_witnesses() -> Vec<Witness> {
    use Provenance::{Derived as D, Scaling as S};
    vec![
        registered("Re+Re", "Re+Rn", D, &[&[("e1", "1")], &[("e2", "t")]]),
        registered(
            "Re+Re",
            "B1",
            D,
            &[&[("e1", "1"), ("e2", "1")], &[("e2", "t")]],
        ),
        registered("B4", "B1", D, &[&[("e1", "1")], &[("e2", "t")]]),
        registered(
            "Re+Rn",
            "B3",
            D,
            &[&[("e1", "t"), ("n1", "t")], &[("e1", "t^2")]],
        ),
        registered(
            "B1",
            "B3",
            D,
            &[
                &[("e1", "t"), ("n1", "t")],
                &[("e1", "t^2"), ("n1", "2*t^2")],
            ],
        ),
        registered("B2", "Rn+Rn", S, &[&[("e1", "t")], &[("n1", "t")]]),
        registered("B3", "Rn+Rn", S, &[&[("n1", "t")], &[("n2", "t")]]),
    ]
}
