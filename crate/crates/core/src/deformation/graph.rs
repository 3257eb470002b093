//! The orbit-closure graph assembled from verified and cited arrows.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::{self, Write as _};

use super::audit::{necessary_conditions_audit, profile};
use super::witnesses::{derived_witness, explicit_witnesses, jor2_witnesses, scaling_witness};
use super::{verify_arrow, Witness};
use crate::catalog;
use crate::error::{Error, Result};

/// The three-dimensional algebras whose orbits are open.
pub const RIGID_SET: [&str; 8] = ["J1", "J2", "J3", "J4", "J5", "J7", "J12", "J20"];

/// Arrows whose proofs live in the literature rather than in explicit curves.
pub const BY_REFERENCE_EDGES: [(&str, &str); 12] = [
    ("J1", "J6"),
    ("J6", "J21"),
    ("J2", "J9"),
    ("J2", "J10"),
    ("J10", "J15"),
    ("J9", "J18"),
    ("J18", "J13"),
    ("J23", "J26"),
    ("J26", "J25"),
    ("J8", "J14"),
    ("J20", "J16"),
    ("J7", "J17"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowStatus {
    VerifiedWitness,
    ClaimedByReference,
    AuditOnly,
}

impl ArrowStatus {
    fn dot_style(self) -> &'static str {
        match self {
            ArrowStatus::VerifiedWitness => "solid",
            ArrowStatus::ClaimedByReference => "dashed",
            ArrowStatus::AuditOnly => "dotted",
        }
    }
}

impl fmt::Display for ArrowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArrowStatus::VerifiedWitness => "verified",
            ArrowStatus::ClaimedByReference => "by-reference",
            ArrowStatus::AuditOnly => "audit-only",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: String,
    pub target: String,
    pub status: ArrowStatus,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureGraph {
    pub nodes: Vec<String>,
    pub edges: Vec<Arrow>,
    /// Nodes expected to have no incoming arrows.
    pub rigid_set: Vec<String>,
}

impl ClosureGraph {
    pub fn successors<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.edges
            .iter()
            .filter(move |e| e.source == id)
            .map(|e| e.target.as_str())
    }

    pub fn has_edge(&self, source: &str, target: &str) -> bool {
        self.edges
            .iter()
            .any(|e| e.source == source && e.target == target)
    }

    pub fn edge(&self, source: &str, target: &str) -> Option<&Arrow> {
        self.edges
            .iter()
            .find(|e| e.source == source && e.target == target)
    }

    /// Nodes with no incoming arrow, in node order.
    pub fn maximal_nodes(&self) -> Vec<&str> {
        self.nodes
            .iter()
            .filter(|n| !self.edges.iter().any(|e| &e.target == *n))
            .map(String::as_str)
            .collect()
    }

    /// Shortest directed path from any of `sources` to `target`; ties go to the
    /// earlier source and then to the earlier edge.
    pub fn path_from(&self, sources: &[&str], target: &str) -> Option<Vec<String>> {
        let mut parent: BTreeMap<&str, Option<&str>> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for &s in sources {
            if self.nodes.iter().any(|n| n == s) && !parent.contains_key(s) {
                parent.insert(s, None);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            if u == target {
                let mut path = vec![u.to_string()];
                let mut cur = u;
                while let Some(Some(p)) = parent.get(cur) {
                    path.push(p.to_string());
                    cur = p;
                }
                path.reverse();
                return Some(path);
            }
            for v in self.successors(u) {
                if !parent.contains_key(v) {
                    parent.insert(v, Some(u));
                    queue.push_back(v);
                }
            }
        }
        None
    }

    pub fn reachable(&self, source: &str, target: &str) -> bool {
        self.path_from(&[source], target).is_some()
    }

    /// Graphviz text: nodes labeled with id, `dim Der` and orbit dimension;
    /// solid, dashed and dotted edges for verified, cited and audit-only arrows.
    pub fn to_dot(&self) -> Result<String> {
        let mut s = String::from("digraph closure {\n  rankdir=TB;\n");
        for n in &self.nodes {
            let p = profile(n)?;
            let extra = if self.rigid_set.contains(n) {
                ", peripheries=2"
            } else {
                ""
            };
            let _ = writeln!(
                s,
                "  \"{n}\" [label=\"{n}\\nder={} orbit={}\"{extra}];",
                p.dim_der, p.orbit_dim
            );
        }
        for e in &self.edges {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [style={}];",
                e.source,
                e.target,
                e.status.dot_style()
            );
        }
        s.push_str("}\n");
        Ok(s)
    }
}

fn audited(arrow: Arrow) -> Result<Arrow> {
    let report = necessary_conditions_audit(&arrow.source, &arrow.target)?;
    if !report.passed() {
        let detail = report
            .failures()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; ");
        return Err(Error::AuditFailure {
            source_id: arrow.source,
            target: arrow.target,
            detail,
        });
    }
    Ok(arrow)
}

fn verified(w: Witness) -> Result<Arrow> {
    match verify_arrow(&w)? {
        super::ArrowVerdict::Verified => Ok(Arrow {
            source: w.source.clone(),
            target: w.target.clone(),
            status: ArrowStatus::VerifiedWitness,
            witness: Some(w),
        }),
        super::ArrowVerdict::Failed(r) => Err(Error::Internal(format!(
            "registered witness {} -> {} does not verify: {r}",
            w.source, w.target
        ))),
    }
}

/// Nodes are the 26 three-dimensional catalog algebras. Edges are the explicit
/// curves, `t·I` into the null algebra, and the cited arrows (verified when a
/// derived curve checks out). Every edge must pass the audit.
pub fn build_closure_graph() -> Result<ClosureGraph> {
    let nodes: Vec<String> = catalog::jordan3_ids()
        .into_iter()
        .map(String::from)
        .collect();
    let mut edges = Vec::new();
    for w in explicit_witnesses() {
        edges.push(audited(verified(w)?)?);
    }
    for (s, t) in BY_REFERENCE_EDGES {
        let arrow =
            match derived_witness(s, t).filter(|w| matches!(verify_arrow(w), Ok(v) if v.holds())) {
                Some(w) => verified(w)?,
                None => Arrow {
                    source: s.to_string(),
                    target: t.to_string(),
                    status: ArrowStatus::ClaimedByReference,
                    witness: None,
                },
            };
        edges.push(audited(arrow)?);
    }
    for n in nodes.iter().filter(|n| *n != "J22") {
        edges.push(audited(verified(scaling_witness(n)?)?)?);
    }
    Ok(ClosureGraph {
        nodes,
        edges,
        rigid_set: RIGID_SET.iter().map(|s| s.to_string()).collect(),
    })
}

/// The same construction for the seven two-dimensional algebras.
pub fn build_jor2_graph() -> Result<ClosureGraph> {
    let nodes: Vec<String> = catalog::JOR2_IDS.iter().map(|s| s.to_string()).collect();
    let edges = jor2_witnesses()
        .into_iter()
        .map(|w| audited(verified(w)?))
        .collect::<Result<Vec<_>>>()?;
    let mut g = ClosureGraph {
        nodes,
        edges,
        rigid_set: Vec::new(),
    };
    g.rigid_set = g.maximal_nodes().into_iter().map(String::from).collect();
    Ok(g)
}

/// Audit of every other node of the same dimension into a rigid node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityCheck {
    pub node: String,
    pub candidates: usize,
    /// Sources that pass the audit into `node`; empty when consistent.
    pub survivors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    /// For each node, a path starting at a rigid node.
    pub paths: BTreeMap<String, Vec<String>>,
    pub rigidity: Vec<RigidityCheck>,
}

impl CoverageReport {
    pub fn rigidity_consistent(&self) -> bool {
        self.rigidity.iter().all(|r| r.survivors.is_empty())
    }
}

impl fmt::Display for CoverageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (node, path) in &self.paths {
            writeln!(f, "{node}: {}", path.join(" -> "))?;
        }
        for r in &self.rigidity {
            let state = if r.survivors.is_empty() {
                "rigid".to_string()
            } else {
                format!("admits {}", r.survivors.join(","))
            };
            writeln!(
                f,
                "{}: {} candidates audited, {state}",
                r.node, r.candidates
            )?;
        }
        Ok(())
    }
}

pub fn rigid_coverage_check(g: &ClosureGraph) -> Result<CoverageReport> {
    let roots: Vec<&str> = g.rigid_set.iter().map(String::as_str).collect();
    let mut paths = BTreeMap::new();
    for n in &g.nodes {
        let path = g
            .path_from(&roots, n)
            .ok_or_else(|| Error::CoverageGap(n.clone()))?;
        paths.insert(n.clone(), path);
    }
    let mut rigidity = Vec::new();
    for r in &roots {
        let mut survivors = Vec::new();
        let mut candidates = 0;
        for s in g.nodes.iter().filter(|s| s.as_str() != *r) {
            candidates += 1;
            if necessary_conditions_audit(s, r)?.passed() {
                survivors.push(s.clone());
            }
        }
        rigidity.push(RigidityCheck {
            node: r.to_string(),
            candidates,
            survivors,
        });
    }
    Ok(CoverageReport { paths, rigidity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn graph() -> &'static ClosureGraph {
        static G: OnceLock<ClosureGraph> = OnceLock::new();
        G.get_or_init(|| build_closure_graph().unwrap())
    }

    #[test]
    fn shape() {
        let g = graph();
        assert_eq!(g.nodes.len(), 26);
        assert_eq!(g.edges.len(), 5 + 12 + 25);
        assert!(g
            .edges
            .iter()
            .all(|e| e.status == ArrowStatus::VerifiedWitness));
        assert_eq!(g.maximal_nodes(), RIGID_SET.to_vec());
    }

    #[test]
    fn null_algebra_is_below_everything() {
        let g = graph();
        assert!(g.nodes.iter().all(|n| g.reachable(n, "J22")));
    }

    #[test]
    fn der_strictly_increases_along_edges() {
        for e in &graph().edges {
            assert!(profile(&e.source).unwrap().dim_der < profile(&e.target).unwrap().dim_der);
        }
    }

    #[test]
    fn coverage_paths() {
        let r = rigid_coverage_check(graph()).unwrap();
        assert_eq!(r.paths["J24"], vec!["J1", "J6", "J21", "J24"]);
        assert_eq!(r.paths["J14"], vec!["J3", "J8", "J14"]);
        assert_eq!(r.paths["J7"], vec!["J7"]);
        assert!(r.rigidity_consistent(), "{r}");
        let j7 = r.rigidity.iter().find(|c| c.node == "J7").unwrap();
        assert_eq!(j7.candidates, 25);
    }

    #[test]
    fn gap_is_reported() {
        let mut g = graph().clone();
        g.edges.retain(|e| e.target != "J24");
        assert_eq!(
            rigid_coverage_check(&g),
            Err(Error::CoverageGap("J24".into()))
        );
    }

    #[test]
    fn dot_export() {
        let dot = graph().to_dot().unwrap();
        assert!(dot.starts_with("digraph closure {"));
        assert!(dot.contains("\"J1\" [label=\"J1\\nder=0 orbit=9\", peripheries=2];"));
        assert!(dot.contains("\"J22\" [label=\"J22\\nder=9 orbit=0\"];"));
        assert!(dot.contains("\"J21\" -> \"J24\" [style=solid];"));
    }

    #[test]
    fn claimed_edges_render_dashed() {
        let mut g = graph().clone();
        let e = g
            .edges
            .iter_mut()
            .find(|e| e.source == "J7" && e.target == "J17")
            .unwrap();
        e.status = ArrowStatus::ClaimedByReference;
        assert!(g
            .to_dot()
            .unwrap()
            .contains("\"J7\" -> \"J17\" [style=dashed];"));
    }

    #[test]
    fn two_dimensional_picture() {
        let g = build_jor2_graph().unwrap();
        assert_eq!(g.nodes.len(), 7);
        assert_eq!(g.maximal_nodes(), vec!["Re+Re", "B2", "B4"]);
        assert!(g.nodes.iter().all(|n| g.reachable(n, "Rn+Rn")));
        assert!(rigid_coverage_check(&g).unwrap().rigidity_consistent());
    }
}
