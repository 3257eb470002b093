//! Bounded search for curves of the form `g(t) = M·diag(t^k₁, …, t^kₙ)`.
//!
//! With `M` fixed, let `d` be the constants of the source in the columns of
//! `M`. The curve then has constants `t^(k_a + k_b − k_c)·d_ab^c`, so the
//! limit is read off from the exponents without symbolic work.

use num_traits::Zero;

use super::{audit::necessary_conditions_audit, verify_arrow, PolyMatrix, Provenance, Witness};
use crate::algebra::{change_of_basis, Algebra};
use crate::catalog;
use crate::error::Result;
use crate::exactla::{int, rat, RatMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpace {
    /// Largest exponent of `t` in a column scaling.
    pub degree_bound: usize,
    /// Values allowed for the nonzero entries of `M`.
    pub coefficients: Vec<Rational>,
    /// Extra nonzero entries of `M` beyond a permutation pattern.
    pub max_extra: usize,
}

impl Default for SearchSpace {
    fn default() -> Self {
        SearchSpace {
            degree_bound: 2,
            coefficients: vec![int(1), int(-1), int(2), rat(1, 2)],
            max_extra: 2,
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Supports (positions `row·n + col`) that contain a permutation pattern,
/// by size and then lexicographically.
fn supports(n: usize, max_extra: usize) -> Vec<Vec<usize>> {
    let perms = permutations(n);
    let mut out = Vec::new();
    for size in n..=(n + max_extra).min(n * n) {
        for s in combinations(n * n, size) {
            if perms
                .iter()
                .any(|p| p.iter().enumerate().all(|(c, &r)| s.contains(&(r * n + c))))
            {
                out.push(s);
            }
        }
    }
    out
}

/// Calls `f` on every tuple in `{0..base}^len`, lexicographically, until it returns `true`.
fn for_each_tuple(len: usize, base: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut idx = vec![0; len];
    loop {
        if f(&idx) {
            return true;
        }
        let mut i = len;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < base {
                break;
            }
            idx[i] = 0;
        }
    }
}

/// Whether the curve `M·diag(t^k)` with `d` the constants in the columns of
/// `M` has exactly the target's constants as its limit.
fn limit_matches(d: &Algebra, target: &Algebra, k: &[usize]) -> bool {
    let n = d.dim();
    for a in 0..n {
        for b in a..n {
            for c in 0..n {
                let v = d.constant(a, b, c);
                let e = (k[a] + k[b]) as i64 - k[c] as i64;
                let lim = match e.cmp(&0) {
                    std::cmp::Ordering::Equal => v.clone(),
                    std::cmp::Ordering::Greater => Rational::zero(),
                    std::cmp::Ordering::Less if v.is_zero() => Rational::zero(),
                    std::cmp::Ordering::Less => return false,
                };
                if &lim != target.constant(a, b, c) {
                    return false;
                }
            }
        }
    }
    true
}

/// First verifying witness in the deterministic enumeration order, if any.
/// Pairs that fail the necessary-conditions audit are not searched.
pub fn derive_witness_search(
    source: &str,
    target: &str,
    space: &SearchSpace,
) -> Result<Option<Witness>> {
    let src = &catalog::get(source)?.algebra;
    let tgt = &catalog::get(target)?.algebra;
    let n = src.dim();
    if tgt.dim() != n || !necessary_conditions_audit(source, target)?.passed() {
        return Ok(None);
    }
    let coeffs = &space.coefficients;
    let mut found = None;
    for support in supports(n, space.max_extra) {
        let hit = for_each_tuple(support.len(), coeffs.len(), |choice| {
            let mut m = RatMatrix::zeros(n, n);
            for (&pos, &ci) in support.iter().zip(choice) {
                m[(pos / n, pos % n)] = coeffs[ci].clone();
            }
            let Ok(d) = change_of_basis(src, &m) else {
                return false;
            };
            for_each_tuple(n, space.degree_bound + 1, |k| {
                if !limit_matches(&d, tgt, k) {
                    return false;
                }
                let w = Witness {
                    source: source.to_string(),
                    target: target.to_string(),
                    g: PolyMatrix::from_rat(&m).scale_columns(k),
                    provenance: Provenance::Derived,
                };
                let ok = verify_arrow(&w).map(|v| v.holds()).unwrap_or(false);
                if ok {
                    found = Some(w);
                }
                ok
            })
        });
        if hit {
            break;
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::UniPoly;
    use num_traits::One;

    fn found(s: &str, t: &str) -> Witness {
        derive_witness_search(s, t, &SearchSpace::default())
            .unwrap()
            .unwrap_or_else(|| panic!("no witness for {s} -> {t}"))
    }

    #[test]
    fn support_enumeration() {
        let s = supports(3, 2);
        assert_eq!(s[0], vec![0, 4, 8]);
        assert_eq!(s.iter().filter(|x| x.len() == 3).count(), 6);
        assert!(s.windows(2).all(|w| w[0].len() <= w[1].len()));
        assert_eq!(permutations(3).len(), 6);
    }

    #[test]
    fn finds_block_scaling_for_j2_to_j9() {
        let w = found("J2", "J9");
        let p = |s: &str| s.parse::<UniPoly>().unwrap();
        assert_eq!(
            w.g,
            PolyMatrix::new(vec![
                vec![p("1"), p("0"), p("0")],
                vec![p("0"), p("t"), p("0")],
                vec![p("0"), p("0"), p("1")],
            ])
            .unwrap()
        );
    }

    #[test]
    fn finds_j1_to_j6_and_j9_to_j18() {
        assert!(verify_arrow(&found("J1", "J6")).unwrap().holds());
        assert!(verify_arrow(&found("J9", "J18")).unwrap().holds());
    }

    #[test]
    fn audit_failure_short_circuits() {
        assert_eq!(
            derive_witness_search("J8", "J7", &SearchSpace::default()),
            Ok(None)
        );
        assert_eq!(
            derive_witness_search("J1", "B1", &SearchSpace::default()),
            Ok(None)
        );
    }

    #[test]
    fn deterministic() {
        assert_eq!(found("J10", "J15"), found("J10", "J15"));
    }

    #[test]
    fn identity_scaling_is_a_one_matrix() {
        assert!(PolyMatrix::from_rat(&RatMatrix::identity(2))
            .scale_columns(&[0, 0])
            .get(0, 0)
            .is_one());
    }
}
