//! Necessary conditions for one algebra to degenerate to another.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::algebra::{
    annihilator, derivation_dim, is_associative, orbit_dimension, power_filtration, radical,
    Algebra,
};
use crate::catalog;
use crate::cohomology::z2_dim;
use crate::error::{Error, Result};

/// The quantities compared by the audit, computed once per catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub dim: usize,
    pub dim_der: usize,
    pub orbit_dim: usize,
    pub dim_rad: usize,
    pub dim_ann: usize,
    /// `dim J²` and `dim J³`.
    pub power_dims: [usize; 2],
    pub associative: bool,
    pub z2: usize,
}

impl Profile {
    pub fn compute(a: &Algebra) -> Result<Self> {
        let pf = power_filtration(a);
        Ok(Profile {
            dim: a.dim(),
            dim_der: derivation_dim(a),
            orbit_dim: orbit_dimension(a),
            dim_rad: radical(a)?.dim(),
            dim_ann: annihilator(a).dim(),
            power_dims: [pf.power_dim(2), pf.power_dim(3)],
            associative: is_associative(a).holds(),
            z2: z2_dim(a)?,
        })
    }
}

fn profiles() -> &'static BTreeMap<&'static str, Result<Profile>> {
    static CACHE: OnceLock<BTreeMap<&'static str, Result<Profile>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        catalog::entries()
            .iter()
            .map(|e| (e.id, Profile::compute(&e.algebra)))
            .collect()
    })
}

pub fn profile(id: &str) -> Result<&'static Profile> {
    match profiles().get(id) {
        Some(Ok(p)) => Ok(p),
        Some(Err(e)) => Err(e.clone()),
        None => Err(Error::UnknownId(id.to_string())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditCheck {
    /// Roman numeral of the condition.
    pub item: &'static str,
    pub quantity: &'static str,
    pub source_value: String,
    pub target_value: String,
    pub relation: &'static str,
    /// `None` for the item that is not a check.
    pub passed: Option<bool>,
}

impl fmt::Display for AuditCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.passed {
            Some(true) => "pass",
            Some(false) => "FAIL",
            None => "n/a",
        };
        if self.passed.is_none() {
            return write!(f, "({}) {}: {}", self.item, self.quantity, verdict);
        }
        write!(
            f,
            "({}) {}: {} {} {}: {}",
            self.item, self.quantity, self.source_value, self.relation, self.target_value, verdict
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub source: String,
    pub target: String,
    pub checks: Vec<AuditCheck>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed != Some(false))
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditCheck> {
        self.checks.iter().filter(|c| c.passed == Some(false))
    }

    pub fn check(&self, item: &str) -> Option<&AuditCheck> {
        self.checks.iter().find(|c| c.item == item)
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "audit {} -> {}", self.source, self.target)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(
            f,
            "verdict: {}",
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

fn check(
    item: &'static str,
    quantity: &'static str,
    relation: &'static str,
    s: impl ToString,
    t: impl ToString,
    passed: bool,
) -> AuditCheck {
    AuditCheck {
        item,
        quantity,
        source_value: s.to_string(),
        target_value: t.to_string(),
        relation,
        passed: Some(passed),
    }
}

/// Compares the profiles of two catalog entries; a degeneration `source → target`
/// can only exist if every check passes.
pub fn necessary_conditions_audit(source: &str, target: &str) -> Result<AuditReport> {
    let s = profile(source)?;
    let t = profile(target)?;
    let pairs = |p: &Profile| format!("{:?}", p.power_dims);
    let checks = vec![
        check(
            "i",
            "dim Der",
            "<",
            s.dim_der,
            t.dim_der,
            s.dim_der < t.dim_der,
        ),
        check(
            "ii",
            "dim Rad",
            "<=",
            s.dim_rad,
            t.dim_rad,
            s.dim_rad <= t.dim_rad,
        ),
        check(
            "iii",
            "dim Ann",
            "<=",
            s.dim_ann,
            t.dim_ann,
            s.dim_ann <= t.dim_ann,
        ),
        check(
            "iv",
            "dim J^2, dim J^3",
            ">=",
            pairs(s),
            pairs(t),
            s.dim == t.dim && s.power_dims.iter().zip(&t.power_dims).all(|(a, b)| a >= b),
        ),
        AuditCheck {
            item: "v",
            quantity: "direct sums (used to build arrows, not checked)",
            source_value: String::new(),
            target_value: String::new(),
            relation: "",
            passed: None,
        },
        check(
            "vi",
            "associative",
            "=>",
            s.associative,
            t.associative,
            !s.associative || t.associative,
        ),
        check("vii", "dim Z2", "<=", s.z2, t.z2, s.z2 <= t.z2),
    ];
    Ok(AuditReport {
        source: source.to_string(),
        target: target.to_string(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_der_fails_first_item() {
        let r = necessary_conditions_audit("J8", "J7").unwrap();
        assert!(!r.passed());
        let failed: Vec<_> = r.failures().map(|c| c.item).collect();
        assert!(failed.contains(&"i"));
    }

    #[test]
    fn cocycle_count_blocks_spin_factor() {
        let r = necessary_conditions_audit("J3", "J7").unwrap();
        let c = r.check("vii").unwrap();
        assert_eq!(
            (c.source_value.as_str(), c.target_value.as_str()),
            ("8", "7")
        );
        assert_eq!(c.passed, Some(false));
    }

    #[test]
    fn admissible_pair_passes_everything() {
        let r = necessary_conditions_audit("J2", "J9").unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 7);
        assert_eq!(profile("J2").unwrap().dim_der, 0);
        assert_eq!(profile("J9").unwrap().dim_der, 1);
    }

    #[test]
    fn report_lines_are_stable() {
        let text = necessary_conditions_audit("J3", "J7").unwrap().to_string();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "audit J3 -> J7");
        assert_eq!(lines[1], "(i) dim Der: 1 < 2: pass");
        assert_eq!(lines[7], "(vii) dim Z2: 8 <= 7: FAIL");
        assert_eq!(lines[8], "verdict: FAIL");
    }

    #[test]
    fn unknown_id() {
        assert_eq!(
            necessary_conditions_audit("J1", "X"),
            Err(Error::UnknownId("X".into()))
        );
    }
}
