use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::invariants::product_space;
use super::{Algebra, Subspace};
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vec, rat, RatMatrix, RatVec, Rational};

/// One containment of the Peirce multiplication table and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeirceRule {
    pub rule: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeirceDecomposition {
    pub idempotent: RatVec,
    /// Eigenspace of `x ↦ x·e` for eigenvalue 1.
    pub one: Subspace,
    pub half: Subspace,
    pub zero: Subspace,
    pub rules: Vec<PeirceRule>,
}

impl PeirceDecomposition {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.one.dim(), self.half.dim(), self.zero.dim())
    }

    pub fn rules_hold(&self) -> bool {
        self.rules.iter().all(|r| r.holds)
    }
}

pub fn verify_idempotent(a: &Algebra, e: &[Rational]) -> bool {
    e.len() == a.dim() && !is_zero_vec(e) && a.mul(e, e) == e
}

fn eigenspace(m: &RatMatrix, lambda: &Rational) -> Subspace {
    let n = m.rows();
    let mut shifted = m.clone();
    for i in 0..n {
        shifted[(i, i)] = &shifted[(i, i)] - lambda;
    }
    Subspace::span(n, &shifted.kernel_basis())
}

fn rule(a: &Algebra, name: &str, x: &Subspace, y: &Subspace, inside: &Subspace) -> PeirceRule {
    PeirceRule {
        rule: name.to_string(),
        holds: product_space(a, x, y).is_subspace_of(inside),
    }
}

/// Splits the algebra into the 1, ½ and 0 eigenspaces of multiplication by
/// the idempotent `e` and checks the Peirce multiplication rules on them.
pub fn peirce_decompose(a: &Algebra, e: &[Rational]) -> Result<PeirceDecomposition> {
    if !verify_idempotent(a, e) {
        return Err(Error::NotIdempotent);
    }
    let n = a.dim();
    let le = a.mult_operator(e);
    let one = eigenspace(&le, &Rational::one());
    let half = eigenspace(&le, &rat(1, 2));
    let zero = eigenspace(&le, &Rational::zero());
    let spanned = one.dim() + half.dim() + zero.dim();
    if spanned != n {
        return Err(Error::EigenspaceGap { spanned, dim: n });
    }
    let nothing = Subspace::zero(n);
    let rules = vec![
        rule(a, "P1*P1 in P1", &one, &one, &one),
        rule(a, "P1*P0 = 0", &one, &zero, &nothing),
        rule(a, "P0*P0 in P0", &zero, &zero, &zero),
        rule(a, "P0*P1/2 in P1/2", &zero, &half, &half),
        rule(a, "P1*P1/2 in P1/2", &one, &half, &half),
        rule(a, "P1/2*P1/2 in P0+P1", &half, &half, &zero.sum(&one)),
    ];
    Ok(PeirceDecomposition {
        idempotent: e.to_vec(),
        one,
        half,
        zero,
        rules,
    })
}

/// Peirce decomposition relative to pairwise orthogonal idempotents
/// `e_1, …, e_m`, completed by the formal idempotent `e_0 = 1 − Σ e_i` of the
/// unitalization. Components are keyed by `(i, j)` with `0 ≤ i ≤ j ≤ m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedPeirce {
    pub components: BTreeMap<(usize, usize), Subspace>,
    pub rules: Vec<PeirceRule>,
}

impl RefinedPeirce {
    pub fn rules_hold(&self) -> bool {
        self.rules.iter().all(|r| r.holds)
    }

    fn get(&self, i: usize, j: usize) -> &Subspace {
        &self.components[&(i.min(j), i.max(j))]
    }
}

pub fn refined_peirce(a: &Algebra, idempotents: &[RatVec]) -> Result<RefinedPeirce> {
    let n = a.dim();
    let m = idempotents.len();
    for (i, e) in idempotents.iter().enumerate() {
        if !verify_idempotent(a, e) {
            return Err(Error::NotIdempotent);
        }
        for f in &idempotents[..i] {
            if !is_zero_vec(&a.mul(e, f)) {
                return Err(Error::NotIdempotent);
            }
        }
    }
    let ops: Vec<RatMatrix> = idempotents.iter().map(|e| a.mult_operator(e)).collect();

    // x ∈ P_ij  iff  x·e_k = ((δ_ki + δ_kj) / 2) x  for every k = 1..m.
    let mut components = BTreeMap::new();
    for i in 0..=m {
        for j in i..=m {
            let mut rows: Vec<RatVec> = Vec::new();
            for (k, op) in ops.iter().enumerate() {
                let k1 = k + 1;
                let hits = usize::from(k1 == i) + usize::from(k1 == j);
                let lambda = rat(hits as i64, 2);
                for r in 0..n {
                    let mut row = op.row(r).to_vec();
                    row[r] = &row[r] - &lambda;
                    rows.push(row);
                }
            }
            let sys = RatMatrix::from_rows(n, rows);
            components.insert((i, j), Subspace::span(n, &sys.kernel_basis()));
        }
    }
    let spanned = components
        .values()
        .fold(Subspace::zero(n), |acc, s| acc.sum(s))
        .dim();
    let total: usize = components.values().map(Subspace::dim).sum();
    if spanned != n || total != n {
        return Err(Error::EigenspaceGap { spanned, dim: n });
    }

    let mut out = RefinedPeirce {
        components,
        rules: Vec::new(),
    };
    let nothing = Subspace::zero(n);
    let idx = 0..=m;
    let mut rules = Vec::new();
    for i in idx.clone() {
        let pii = out.get(i, i).clone();
        rules.push(rule(a, &format!("P{i}{i}^2 in P{i}{i}"), &pii, &pii, &pii));
        for j in idx.clone().filter(|&j| j != i) {
            let pij = out.get(i, j).clone();
            let pjj = out.get(j, j).clone();
            rules.push(rule(
                a,
                &format!("P{i}{j}*P{i}{i} in P{i}{j}"),
                &pij,
                &pii,
                &pij,
            ));
            rules.push(rule(
                a,
                &format!("P{i}{j}^2 in P{i}{i}+P{j}{j}"),
                &pij,
                &pij,
                &pii.sum(&pjj),
            ));
            if i < j {
                rules.push(rule(
                    a,
                    &format!("P{i}{i}*P{j}{j} = 0"),
                    &pii,
                    &pjj,
                    &nothing,
                ));
            }
            for k in idx.clone().filter(|&k| k != i && k != j) {
                let pjk = out.get(j, k).clone();
                let pik = out.get(i, k).clone();
                rules.push(rule(
                    a,
                    &format!("P{i}{j}*P{j}{k} in P{i}{k}"),
                    &pij,
                    &pjk,
                    &pik,
                ));
                if j < k {
                    rules.push(rule(
                        a,
                        &format!("P{i}{i}*P{j}{k} = 0"),
                        &pii,
                        &pjk,
                        &nothing,
                    ));
                }
                for l in idx.clone().filter(|&l| l != i && l != j && l != k) {
                    if i < j && k < l {
                        let pkl = out.get(k, l).clone();
                        rules.push(rule(
                            a,
                            &format!("P{i}{j}*P{k}{l} = 0"),
                            &pij,
                            &pkl,
                            &nothing,
                        ));
                    }
                }
            }
        }
    }
    out.rules = rules;
    Ok(out)
}
