//! Real Jordan algebras of dimension at most three as executable data, with
//! the invariants recorded for each and tools for telling them apart.

mod classify;
mod fingerprint;

use std::fmt;
use std::sync::OnceLock;

use num_traits::One;

use crate::algebra::{
    annihilator, derivation_dim, find_unit, is_associative, jalg, power_filtration, radical,
    restrict, Algebra, Subspace,
};
use crate::error::{Error, Result};
use crate::exactla::{parse_rational, Rational};

pub use classify::{classify_nilpotent_21, nilpotent_21_family, Classification};
pub use fingerprint::{
    fingerprint, pairwise_distinct_audit, verify_iso, DistinctnessReport, Fingerprint, IsoWitness,
};

/// Invariants recorded for a catalog entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantRecord {
    pub dim_der: usize,
    pub dim_ann: usize,
    pub dim_rad: usize,
    /// Nilpotency type of the radical; absent when the radical is zero.
    pub niltype: Option<Vec<usize>>,
    pub associative: bool,
    pub unital: bool,
}

impl fmt::Display for InvariantRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "der={} ann={} rad={} niltype={} assoc={} unital={}",
            self.dim_der,
            self.dim_ann,
            self.dim_rad,
            format_niltype(self.niltype.as_deref()),
            self.associative,
            self.unital
        )
    }
}

pub fn format_niltype(t: Option<&[usize]>) -> String {
    match t {
        None => "-".to_string(),
        Some(t) => {
            let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
            format!("({})", parts.join(","))
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub basis: Vec<String>,
    pub algebra: Algebra,
    pub expected: InvariantRecord,
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Multiplication table in the entry's own basis names.
    pub fn table(&self) -> String {
        crate::algebra::multiplication_table(&self.algebra, &self.basis)
    }
}

/// The nilpotency type of `Rad(a)`, or `None` for a zero radical.
pub fn radical_niltype(a: &Algebra) -> Result<Option<Vec<usize>>> {
    niltype_of(a, &radical(a)?)
}

pub(crate) fn niltype_of(a: &Algebra, rad: &Subspace) -> Result<Option<Vec<usize>>> {
    if rad.is_zero() {
        return Ok(None);
    }
    Ok(power_filtration(&restrict(a, rad)?).niltype)
}

/// Computes the invariants that the catalog records.
pub fn compute_record(a: &Algebra) -> Result<InvariantRecord> {
    let rad = radical(a)?;
    Ok(InvariantRecord {
        dim_der: derivation_dim(a),
        dim_ann: annihilator(a).dim(),
        dim_rad: rad.dim(),
        niltype: niltype_of(a, &rad)?,
        associative: is_associative(a).holds(),
        unital: find_unit(a).is_some(),
    })
}

/// Builds constants from rules such as `"e1*n1 = 1/2 n1; n1*n1 = n2"`.
fn table(names: &[&str], rules: &str) -> Algebra {
    let idx = |s: &str| {
        names
            .iter()
            .position(|n| *n == s.trim())
            .unwrap_or_else(|| panic!("unknown basis name `{s}`"))
    };
    let mut products = Vec::new();
    for rule in rules.split(';').map(str::trim).filter(|r| !r.is_empty()) {
        let (lhs, rhs) = rule.split_once('=').expect("rule has `=`");
        let (x, y) = lhs.split_once('*').expect("lhs is a product");
        let (i, j) = (idx(x), idx(y));
        for term in rhs
            .replace('-', "+-")
            .split('+')
            .map(str::trim)
            .filter(|t| !t.is_empty())
        {
            let (coeff, name) = match term.rsplit_once(' ') {
                Some((c, n)) => (parse_rational(c).expect("coefficient"), n),
                None => match term.strip_prefix('-') {
                    Some(n) => (-Rational::one(), n),
                    None => (Rational::one(), term),
                },
            };
            products.push((i.min(j), i.max(j), idx(name), coeff));
        }
    }
    Algebra::from_products(names.len(), &products).expect("catalog table is well formed")
}

fn rec(
    der: usize,
    ann: usize,
    rad: usize,
    nil: &[usize],
    assoc: bool,
    unital: bool,
) -> InvariantRecord {
    InvariantRecord {
        dim_der: der,
        dim_ann: ann,
        dim_rad: rad,
        niltype: (!nil.is_empty()).then(|| nil.to_vec()),
        associative: assoc,
        unital,
    }
}

const A: bool = true;
const U: bool = true;
const NO: bool = false;

fn entry(
    id: &'static str,
    description: &'static str,
    names: &[&str],
    rules: &str,
    expected: InvariantRecord,
) -> CatalogEntry {
    CatalogEntry {
        id,
        description,
        basis: names.iter().map(ToString::to_string).collect(),
        algebra: table(names, rules).with_label(id),
        expected,
    }
}

fn build() -> Vec<CatalogEntry> {
    let e3 = ["e1", "e2", "e3"];
    let een = ["e1", "e2", "n1"];
    let enn = ["e1", "n1", "n2"];
    let ene = ["e1", "n1", "e2"];
    let nnn = ["n1", "n2", "n3"];
    vec![
        entry(
            "Re",
            "simple, dimension one",
            &["e"],
            "e*e = e",
            rec(0, 0, 0, &[], A, U),
        ),
        entry(
            "Rn",
            "null, dimension one",
            &["n"],
            "",
            rec(1, 1, 1, &[1], A, NO),
        ),
        entry(
            "B1",
            "indecomposable",
            &["e1", "n1"],
            "e1*e1 = e1; e1*n1 = n1",
            rec(1, 0, 1, &[1], A, U),
        ),
        entry(
            "B2",
            "indecomposable",
            &["e1", "n1"],
            "e1*e1 = e1; e1*n1 = 1/2 n1",
            rec(2, 0, 1, &[1], NO, NO),
        ),
        entry(
            "B3",
            "indecomposable, nilpotent",
            &["n1", "n2"],
            "n1*n1 = n2",
            rec(2, 1, 2, &[1, 1], A, NO),
        ),
        entry(
            "B4",
            "simple (complex numbers)",
            &["e1", "e2"],
            "e1*e1 = e1; e1*e2 = e2; e2*e2 = -e1",
            rec(0, 0, 0, &[], A, U),
        ),
        entry(
            "J1",
            "Re1 + Re2 + Re3",
            &e3,
            "e1*e1 = e1; e2*e2 = e2; e3*e3 = e3",
            rec(0, 0, 0, &[], A, U),
        ),
        entry(
            "J2",
            "B4 + Re3",
            &e3,
            "e1*e1 = e1; e1*e2 = e2; e2*e2 = -e1; e3*e3 = e3",
            rec(0, 0, 0, &[], A, U),
        ),
        entry(
            "J3",
            "spin factor, form (+,-)",
            &e3,
            "e1*e1 = e1; e1*e2 = e2; e1*e3 = e3; e2*e2 = e1; e3*e3 = -e1",
            rec(1, 0, 0, &[], NO, U),
        ),
        entry(
            "J4",
            "spin factor, form (-,-)",
            &e3,
            "e1*e1 = e1; e1*e2 = e2; e1*e3 = e3; e2*e2 = -e1; e3*e3 = -e1",
            rec(1, 0, 0, &[], NO, U),
        ),
        entry(
            "J5",
            "spin factor, form (+,+)",
            &e3,
            "e1*e1 = e1; e1*e2 = e2; e1*e3 = e3; e2*e2 = e1; e3*e3 = e1",
            rec(1, 0, 0, &[], NO, U),
        ),
        entry(
            "J6",
            "Re1 + Re2 + Rn1",
            &een,
            "e1*e1 = e1; e2*e2 = e2",
            rec(1, 1, 1, &[1], A, NO),
        ),
        entry(
            "J7",
            "B2 + Re2",
            &ene,
            "e1*e1 = e1; e1*n1 = 1/2 n1; e2*e2 = e2",
            rec(2, 0, 1, &[1], NO, NO),
        ),
        entry(
            "J8",
            "n1 in the (1,2) Peirce space",
            &een,
            "e1*e1 = e1; e2*e2 = e2; e1*n1 = 1/2 n1; e2*n1 = 1/2 n1",
            rec(2, 0, 1, &[1], NO, U),
        ),
        entry(
            "J9",
            "B1 + Re2",
            &ene,
            "e1*e1 = e1; e1*n1 = n1; e2*e2 = e2",
            rec(1, 0, 1, &[1], A, U),
        ),
        entry(
            "J10",
            "B4 + Rn1",
            &een,
            "e1*e1 = e1; e1*e2 = e2; e2*e2 = -e1",
            rec(1, 1, 1, &[1], A, NO),
        ),
        entry(
            "J11",
            "B4 acting on Rn1 by the unit",
            &een,
            "e1*e1 = e1; e1*e2 = e2; e2*e2 = -e1; e1*n1 = n1",
            rec(2, 0, 1, &[1], NO, U),
        ),
        entry(
            "J12",
            "n1, n2 in the 1/2 Peirce space",
            &enn,
            "e1*e1 = e1; e1*n1 = 1/2 n1; e1*n2 = 1/2 n2",
            rec(6, 0, 2, &[2], NO, NO),
        ),
        entry(
            "J13",
            "n1, n2 in the 1 Peirce space",
            &enn,
            "e1*e1 = e1; e1*n1 = n1; e1*n2 = n2",
            rec(4, 0, 2, &[2], A, U),
        ),
        entry(
            "J14",
            "B2 + Rn2",
            &enn,
            "e1*e1 = e1; e1*n1 = 1/2 n1",
            rec(3, 1, 2, &[2], NO, NO),
        ),
        entry(
            "J15",
            "B1 + Rn2",
            &enn,
            "e1*e1 = e1; e1*n1 = n1",
            rec(2, 1, 2, &[2], A, NO),
        ),
        entry(
            "J16",
            "n1 in the 1/2, n2 in the 1 Peirce space",
            &enn,
            "e1*e1 = e1; e1*n1 = 1/2 n1; e1*n2 = n2",
            rec(3, 0, 2, &[2], NO, NO),
        ),
        entry(
            "J17",
            "Re1 + Rn1 + Rn2",
            &enn,
            "e1*e1 = e1",
            rec(4, 2, 2, &[2], A, NO),
        ),
        entry(
            "J18",
            "unital, n1^2 = n2",
            &enn,
            "e1*e1 = e1; n1*n1 = n2; e1*n1 = n1; e1*n2 = n2",
            rec(2, 0, 2, &[1, 1], A, U),
        ),
        entry(
            "J19",
            "n1 in the 1/2, n2 in the 0 Peirce space",
            &enn,
            "e1*e1 = e1; n1*n1 = n2; e1*n1 = 1/2 n1",
            rec(2, 1, 2, &[1, 1], NO, NO),
        ),
        entry(
            "J20",
            "n1 in the 1/2, n2 in the 1 Peirce space",
            &enn,
            "e1*e1 = e1; n1*n1 = n2; e1*n2 = n2; e1*n1 = 1/2 n1",
            rec(2, 0, 2, &[1, 1], NO, NO),
        ),
        entry(
            "J21",
            "B3 + Re1",
            &["n1", "n2", "e1"],
            "n1*n1 = n2; e1*e1 = e1",
            rec(2, 1, 2, &[1, 1], A, NO),
        ),
        entry(
            "J22",
            "Rn1 + Rn2 + Rn3",
            &nnn,
            "",
            rec(9, 3, 3, &[3], A, NO),
        ),
        entry(
            "J23",
            "nilpotent, type (1,1,1)",
            &nnn,
            "n2*n3 = n1; n3*n3 = n2",
            rec(3, 1, 3, &[1, 1, 1], A, NO),
        ),
        entry(
            "J24",
            "nilpotent, definite square form",
            &nnn,
            "n1*n1 = n3; n2*n2 = n3",
            rec(4, 1, 3, &[2, 1], A, NO),
        ),
        entry(
            "J25",
            "B3 + Rn3",
            &nnn,
            "n1*n1 = n2",
            rec(5, 2, 3, &[2, 1], A, NO),
        ),
        entry(
            "J26",
            "nilpotent, hyperbolic square form",
            &nnn,
            "n1*n2 = n3",
            rec(4, 1, 3, &[2, 1], A, NO),
        ),
        entry(
            "Re+Re",
            "Re1 + Re2",
            &["e1", "e2"],
            "e1*e1 = e1; e2*e2 = e2",
            rec(0, 0, 0, &[], A, U),
        ),
        entry(
            "Re+Rn",
            "Re1 + Rn1",
            &["e1", "n1"],
            "e1*e1 = e1",
            rec(1, 1, 1, &[1], A, NO),
        ),
        entry(
            "Rn+Rn",
            "Rn1 + Rn2",
            &["n1", "n2"],
            "",
            rec(4, 2, 2, &[2], A, NO),
        ),
    ]
}

/// Every entry: dimension one, `B1`–`B4`, `J1`–`J26`, then the decomposable
/// two-dimensional algebras.
pub fn entries() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn get(id: &str) -> Result<&'static CatalogEntry> {
    entries()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// `J1` through `J26`.
pub fn jordan3_ids() -> Vec<&'static str> {
    entries()
        .iter()
        .filter(|e| e.id.starts_with('J'))
        .map(|e| e.id)
        .collect()
}

/// The seven orbits of two-dimensional Jordan algebras.
pub const JOR2_IDS: [&str; 7] = ["Re+Re", "Re+Rn", "Rn+Rn", "B1", "B2", "B3", "B4"];

/// The 32 entries of the classification (dimensions one to three).
pub fn classification_ids() -> Vec<&'static str> {
    entries()
        .iter()
        .filter(|e| !e.id.contains('+'))
        .map(|e| e.id)
        .collect()
}

/// Result of comparing one entry's computed invariants with its record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryCheck {
    pub id: &'static str,
    pub expected: InvariantRecord,
    pub computed: InvariantRecord,
    pub jordan: bool,
}

impl EntryCheck {
    pub fn passed(&self) -> bool {
        self.jordan && self.expected == self.computed
    }
}

pub fn check_entry(e: &'static CatalogEntry) -> Result<EntryCheck> {
    let jordan = crate::algebra::is_jordan(&e.algebra).holds();
    if !jordan {
        return Err(Error::NotJordan);
    }
    Ok(EntryCheck {
        id: e.id,
        expected: e.expected.clone(),
        computed: compute_record(&e.algebra)?,
        jordan,
    })
}

/// One `.jalg` text per entry, keyed by file name, in catalog order.
pub fn export_files() -> Vec<(String, String)> {
    entries()
        .iter()
        .map(|e| {
            let mut text = format!("# basis: {}\n", e.basis.join(" "));
            text.push_str(&jalg::write_algebra(&e.algebra));
            (format!("{}.jalg", e.id), text)
        })
        .collect()
}

/// Plain-text manifest: one line per entry with its recorded invariants.
pub fn manifest() -> String {
    let mut out = String::from("# id dim der ann rad niltype associative unital\n");
    for e in entries() {
        let r = &e.expected;
        out.push_str(&format!(
            "{} {} {} {} {} {} {} {}\n",
            e.id,
            e.dim(),
            r.dim_der,
            r.dim_ann,
            r.dim_rad,
            format_niltype(r.niltype.as_deref()),
            r.associative,
            r.unital
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_sum, unitalize};
    use crate::exactla::{int, rat};

    #[test]
    fn counts_and_lookup() {
        assert_eq!(entries().len(), 35);
        assert_eq!(classification_ids().len(), 32);
        assert_eq!(jordan3_ids().len(), 26);
        assert_eq!(get("J99").unwrap_err(), Error::UnknownId("J99".into()));
    }

    #[test]
    fn reference_tables() {
        let j20 = &get("J20").unwrap().algebra;
        assert_eq!(j20.constant(0, 0, 0), &int(1));
        assert_eq!(j20.constant(1, 1, 2), &int(1));
        assert_eq!(j20.constant(0, 2, 2), &int(1));
        assert_eq!(j20.constant(0, 1, 1), &rat(1, 2));
        let b4 = &get("B4").unwrap().algebra;
        assert_eq!(b4.constant(1, 1, 0), &int(-1));
        assert_eq!(b4.constant(0, 1, 1), &int(1));
        assert!(get("J22")
            .unwrap()
            .algebra
            .constants()
            .iter()
            .all(|c| c == &int(0)));
    }

    #[test]
    fn direct_sum_entries_match_summands() {
        let g = |id: &str| get(id).unwrap().algebra.clone();
        let cases = [
            ("J1", direct_sum(&g("Re+Re"), &g("Re"))),
            ("J2", direct_sum(&g("B4"), &g("Re"))),
            ("J6", direct_sum(&g("Re+Re"), &g("Rn"))),
            ("J7", direct_sum(&g("B2"), &g("Re"))),
            ("J9", direct_sum(&g("B1"), &g("Re"))),
            ("J10", direct_sum(&g("B4"), &g("Rn"))),
            ("J14", direct_sum(&g("B2"), &g("Rn"))),
            ("J15", direct_sum(&g("B1"), &g("Rn"))),
            ("J17", direct_sum(&g("Re"), &g("Rn+Rn"))),
            ("J21", direct_sum(&g("B3"), &g("Re"))),
            ("J22", direct_sum(&g("Rn"), &g("Rn+Rn"))),
            ("J25", direct_sum(&g("B3"), &g("Rn"))),
        ];
        for (id, sum) in cases {
            assert!(g(id).same_constants(&sum), "{id}");
        }
    }

    #[test]
    fn unitalized_null_line_is_b1() {
        let u = unitalize(&get("Rn").unwrap().algebra);
        assert!(u.same_constants(&get("B1").unwrap().algebra));
    }

    #[test]
    fn every_record_reproduces() {
        for e in entries() {
            let c = check_entry(e).unwrap();
            assert_eq!(c.computed, c.expected, "{}", e.id);
        }
    }

    #[test]
    fn spot_records() {
        let r = compute_record(&get("J12").unwrap().algebra).unwrap();
        assert_eq!(r, get("J12").unwrap().expected);
        let r = compute_record(&get("J23").unwrap().algebra).unwrap();
        assert_eq!(r.niltype, Some(vec![1, 1, 1]));
    }

    #[test]
    fn export_round_trips() {
        let files = export_files();
        assert_eq!(files.len(), entries().len());
        for ((name, text), e) in files.iter().zip(entries()) {
            assert_eq!(name, &format!("{}.jalg", e.id));
            assert!(jalg::parse_algebra(text)
                .unwrap()
                .same_constants(&e.algebra));
        }
        assert!(manifest().contains("\nJ22 3 9 3 3 (3) true false\n"));
    }
}
