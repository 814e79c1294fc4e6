//! Double affine Coxeter diagrams.
//!
//! A diagram has `n` finite nodes `T(1)…T(n)` followed by its affine nodes:
//! the three copies `Θ₀₁, Θ₀₂, Θ₀₃` of the triple node for the `⃛X_n`
//! families, or `Θ₀, Φ₀` for the `̈X_n` families.  Edge multiplicities are
//! read off the affine root data: two nodes carrying roots `β, γ` are joined
//! by `<β^∨, γ><γ^∨, β>` edges, and the three copies of the triple node are
//! pairwise joined by four edges.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::to_q_vec;
use crate::rootsys::{AffineType, FiniteKind, FiniteType, RootSystem};

/// Family letter of a double affine Coxeter diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    DddotA,
    DddotAStar,
    DddotB,
    DddotC,
    DddotCStar,
    DddotD,
    DddotE,
    DddotF,
    DddotG,
    DdotB,
    DdotC,
    DdotB2,
    DdotF4,
    DdotG2,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::DddotA,
        Family::DddotAStar,
        Family::DddotB,
        Family::DddotC,
        Family::DddotCStar,
        Family::DddotD,
        Family::DddotE,
        Family::DddotF,
        Family::DddotG,
        Family::DdotB,
        Family::DdotC,
        Family::DdotB2,
        Family::DdotF4,
        Family::DdotG2,
    ];

    /// Canonical textual name (`dddotC`, `ddotG2`, …).
    pub fn name(self) -> &'static str {
        match self {
            Family::DddotA => "dddotA",
            Family::DddotAStar => "dddotAstar",
            Family::DddotB => "dddotB",
            Family::DddotC => "dddotC",
            Family::DddotCStar => "dddotCstar",
            Family::DddotD => "dddotD",
            Family::DddotE => "dddotE",
            Family::DddotF => "dddotF",
            Family::DddotG => "dddotG",
            Family::DdotB => "ddotB",
            Family::DdotC => "ddotC",
            Family::DdotB2 => "ddotB2",
            Family::DdotF4 => "ddotF4",
            Family::DdotG2 => "ddotG2",
        }
    }

    /// True for the triple-node families `⃛X_n` (including the starred ones).
    pub fn is_triple(self) -> bool {
        !matches!(self, Family::DdotB | Family::DdotC | Family::DdotB2 | Family::DdotF4 | Family::DdotG2)
    }

    /// True for `⃛A_1^*` and `⃛C_n^*`.
    pub fn is_starred(self) -> bool {
        matches!(self, Family::DddotAStar | Family::DddotCStar)
    }

    /// Admissible ranks `(min, max)`.
    pub fn rank_range(self) -> (usize, usize) {
        match self {
            Family::DddotA => (1, usize::MAX),
            Family::DddotAStar => (1, 1),
            Family::DddotB => (3, usize::MAX),
            Family::DddotC => (1, usize::MAX),
            Family::DddotCStar => (1, usize::MAX),
            Family::DddotD => (4, usize::MAX),
            Family::DddotE => (6, 8),
            Family::DddotF => (4, 4),
            Family::DddotG => (2, 2),
            Family::DdotB | Family::DdotC => (3, usize::MAX),
            Family::DdotB2 => (2, 2),
            Family::DdotF4 => (4, 4),
            Family::DdotG2 => (2, 2),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lowered = s.trim().to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name().to_ascii_lowercase() == lowered)
            .ok_or_else(|| Error::UnknownType(s.to_string()))
    }
}

/// A family together with a rank, validated and canonicalised:
/// `⃛C_1` becomes `⃛A_1` (with [`DoubleAffineLabel::is_c1_alias`] set) and
/// `⃛C_1^*` becomes `⃛A_1^*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DoubleAffineLabel {
    family: Family,
    rank: usize,
    c1_alias: bool,
}

impl DoubleAffineLabel {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let (lo, hi) = family.rank_range();
        if rank < lo || rank > hi {
            return Err(Error::InvalidRank { family: family.name().into(), rank });
        }
        Ok(match (family, rank) {
            (Family::DddotC, 1) => DoubleAffineLabel { family: Family::DddotA, rank: 1, c1_alias: true },
            (Family::DddotCStar, 1) => DoubleAffineLabel { family: Family::DddotAStar, rank: 1, c1_alias: true },
            _ => DoubleAffineLabel { family, rank, c1_alias: false },
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// True when the label was given as `⃛C_1` (or `⃛C_1^*`).
    pub fn is_c1_alias(&self) -> bool {
        self.c1_alias
    }

    /// Affine type of the corresponding double affine Weyl group.
    pub fn correspondence(&self) -> AffineType {
        let n = self.rank;
        let untwisted = |k: FiniteKind| AffineType::Untwisted(FiniteType::new(k, n).expect("validated rank"));
        match self.family {
            Family::DddotA => untwisted(FiniteKind::A),
            Family::DddotB => untwisted(FiniteKind::B),
            Family::DddotC => untwisted(FiniteKind::C),
            Family::DddotD => untwisted(FiniteKind::D),
            Family::DddotE => untwisted(FiniteKind::E),
            Family::DddotF => untwisted(FiniteKind::F),
            Family::DddotG => untwisted(FiniteKind::G),
            Family::DddotAStar => AffineType::AEvenTwisted(1),
            Family::DddotCStar => AffineType::AEvenTwisted(n),
            Family::DdotB | Family::DdotB2 => AffineType::DTwisted(n),
            Family::DdotC => AffineType::AOddTwisted(n),
            Family::DdotF4 => AffineType::ETwisted,
            Family::DdotG2 => AffineType::DTriality,
        }
    }

    /// Inverse of [`DoubleAffineLabel::correspondence`].
    pub fn from_affine_type(t: AffineType) -> Result<Self> {
        match t {
            AffineType::Untwisted(ft) => {
                let family = match ft.kind() {
                    FiniteKind::A => Family::DddotA,
                    FiniteKind::B if ft.rank() >= 3 => Family::DddotB,
                    // B2 = C2.
                    FiniteKind::B => Family::DddotC,
                    FiniteKind::C => Family::DddotC,
                    FiniteKind::D => Family::DddotD,
                    FiniteKind::E => Family::DddotE,
                    FiniteKind::F => Family::DddotF,
                    FiniteKind::G => Family::DddotG,
                };
                DoubleAffineLabel::new(family, ft.rank())
            }
            AffineType::AEvenTwisted(1) => DoubleAffineLabel::new(Family::DddotAStar, 1),
            AffineType::AEvenTwisted(n) => DoubleAffineLabel::new(Family::DddotCStar, n),
            AffineType::DTwisted(2) => DoubleAffineLabel::new(Family::DdotB2, 2),
            AffineType::DTwisted(n) => DoubleAffineLabel::new(Family::DdotB, n),
            AffineType::AOddTwisted(n) => DoubleAffineLabel::new(Family::DdotC, n),
            AffineType::ETwisted => DoubleAffineLabel::new(Family::DdotF4, 4),
            AffineType::DTriality => DoubleAffineLabel::new(Family::DdotG2, 2),
        }
    }

    /// Affine type whose Dynkin diagram supplies the edges of the Coxeter
    /// diagram: the untwisted `C_n^(1)` (resp. `A_1^(1)`) for the starred families.
    pub fn diagram_source(&self) -> AffineType {
        match self.family {
            Family::DddotAStar => AffineType::Untwisted(FiniteType::new(FiniteKind::A, 1).expect("A1")),
            Family::DddotCStar => AffineType::Untwisted(FiniteType::new(FiniteKind::C, self.rank).expect("rank ≥ 2")),
            _ => self.correspondence(),
        }
    }

    /// Level `r` of the rank-two braid group acting on the presentation:
    /// 1 for the triple-node families, 2 for the doubly-laced `̈X_n`, 3 for `̈G_2`.
    pub fn level(&self) -> u32 {
        match self.family {
            Family::DdotG2 => 3,
            f if f.is_triple() => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for DoubleAffineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::DdotB2 | Family::DdotF4 | Family::DdotG2 | Family::DddotAStar => write!(f, "{}", self.family),
            _ => write!(f, "{}{}", self.family, self.rank),
        }
    }
}

impl FromStr for DoubleAffineLabel {
    type Err = Error;

    /// Parses `dddotC2`, `ddotG2`, `dddotAstar`, `dddotCstar3`, ….
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut rank_error = None;
        for family in Family::ALL {
            let name = family.name();
            if s.len() >= name.len() && s[..name.len()].eq_ignore_ascii_case(name) {
                let rest = &s[name.len()..];
                let (lo, hi) = family.rank_range();
                if rest.is_empty() && lo == hi {
                    return DoubleAffineLabel::new(family, lo);
                }
                if let Ok(rank) = rest.parse::<usize>() {
                    match DoubleAffineLabel::new(family, rank) {
                        Ok(label) => return Ok(label),
                        Err(e) => rank_error = rank_error.or(Some(e)),
                    }
                }
            }
        }
        Err(rank_error.unwrap_or_else(|| Error::UnknownType(s.to_string())))
    }
}

/// Whether a node belongs to the finite diagram or is an affine (marked) node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NodeKind {
    Finite,
    Affine,
}

/// Generator label of a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum NodeLabel {
    T(usize),
    Theta01,
    Theta02,
    Theta03,
    Theta0,
    Phi0,
}

impl fmt::Display for NodeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeLabel::T(i) => write!(f, "T{i}"),
            NodeLabel::Theta01 => f.write_str("Theta01"),
            NodeLabel::Theta02 => f.write_str("Theta02"),
            NodeLabel::Theta03 => f.write_str("Theta03"),
            NodeLabel::Theta0 => f.write_str("Theta0"),
            NodeLabel::Phi0 => f.write_str("Phi0"),
        }
    }
}

impl FromStr for NodeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "Theta01" => NodeLabel::Theta01,
            "Theta02" => NodeLabel::Theta02,
            "Theta03" => NodeLabel::Theta03,
            "Theta0" => NodeLabel::Theta0,
            "Phi0" => NodeLabel::Phi0,
            _ => {
                let idx = s
                    .strip_prefix('T')
                    .and_then(|rest| rest.parse::<usize>().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| Error::Parse(format!("bad node label `{s}`")))?;
                NodeLabel::T(idx)
            }
        })
    }
}

/// A node of a double affine Coxeter diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct NodeId {
    pub index: usize,
    pub kind: NodeKind,
    pub label: NodeLabel,
}

/// A double affine Coxeter diagram: nodes and a symmetric multiplicity table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    name: String,
    nodes: Vec<NodeId>,
    mult: Vec<Vec<u8>>,
    specialized: Option<usize>,
}

/// Stable JSON description `{family, rank, nodes, edges}`.
#[derive(Debug, Clone, Serialize)]
pub struct DiagramJson {
    pub family: String,
    pub rank: usize,
    pub nodes: Vec<NodeJson>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NodeJson {
    pub index: usize,
    pub label: String,
    pub affine: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeJson {
    pub source: usize,
    pub target: usize,
    pub multiplicity: u8,
}

fn product_of_pairings(rs: &RootSystem, beta: &[i64], gamma: &[i64]) -> u8 {
    let fs = rs.finite();
    let p = fs.coroot_pairing(beta, gamma) * fs.coroot_pairing(gamma, beta);
    u8::try_from(p).expect("product of Cartan entries is small and non-negative")
}

/// Builds the diagram of a label.
pub fn build_diagram(label: DoubleAffineLabel) -> Result<CoxeterDiagram> {
    let rs = RootSystem::build(label.diagram_source())?;
    let n = rs.rank();
    let cartan = rs.cartan();
    let mut nodes: Vec<NodeId> =
        (0..n).map(|i| NodeId { index: i, kind: NodeKind::Finite, label: NodeLabel::T(i + 1) }).collect();
    let affine_labels: &[NodeLabel] = if label.family().is_triple() {
        &[NodeLabel::Theta01, NodeLabel::Theta02, NodeLabel::Theta03]
    } else {
        &[NodeLabel::Theta0, NodeLabel::Phi0]
    };
    for (k, l) in affine_labels.iter().enumerate() {
        nodes.push(NodeId { index: n + k, kind: NodeKind::Affine, label: *l });
    }
    let total = nodes.len();
    let mut mult = vec![vec![0u8; total]; total];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                mult[i][j] = u8::try_from(cartan[i + 1][j + 1] * cartan[j + 1][i + 1]).expect("small");
            }
        }
    }
    let theta_links: Vec<u8> =
        (1..=n).map(|j| u8::try_from(cartan[0][j] * cartan[j][0]).expect("small")).collect();
    if label.family().is_triple() {
        for k in 0..3 {
            let a = n + k;
            for (j, &m) in theta_links.iter().enumerate() {
                mult[a][j] = m;
                mult[j][a] = m;
            }
            for l in 0..3 {
                if l != k {
                    mult[a][n + l] = 4;
                }
            }
        }
    } else {
        let theta_node = n;
        let phi_node = n + 1;
        for (j, &m) in theta_links.iter().enumerate() {
            mult[theta_node][j] = m;
            mult[j][theta_node] = m;
        }
        let fs = rs.finite();
        let phi = rs.phi();
        for j in 0..n {
            let m = product_of_pairings(&rs, phi, &fs.simple(j));
            mult[phi_node][j] = m;
            mult[j][phi_node] = m;
        }
        let m = product_of_pairings(&rs, rs.theta(), phi);
        mult[theta_node][phi_node] = m;
        mult[phi_node][theta_node] = m;
    }
    let specialized = label.family().is_starred().then_some(n + 1);
    Ok(CoxeterDiagram { name: label.to_string(), nodes, mult, specialized })
}

impl CoxeterDiagram {
    /// Name of the label the diagram was built from.
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Number of finite nodes.
    pub fn finite_rank(&self) -> usize {
        self.nodes.iter().filter(|n| n.kind == NodeKind::Finite).count()
    }

    /// Indices of the affine nodes.
    pub fn affine_nodes(&self) -> Vec<usize> {
        self.nodes.iter().filter(|n| n.kind == NodeKind::Affine).map(|n| n.index).collect()
    }

    /// The node whose parameter is specialised (`Θ₀₂` for the starred families).
    pub fn specialized_node(&self) -> Option<usize> {
        self.specialized
    }

    /// Index of the node carrying a label.
    pub fn index_of(&self, label: NodeLabel) -> Option<usize> {
        self.nodes.iter().find(|n| n.label == label).map(|n| n.index)
    }

    /// Edge multiplicity (0 = no edge); `None` on the diagonal.
    pub fn mult(&self, i: usize, j: usize) -> Option<u8> {
        (i != j).then(|| self.mult[i][j])
    }

    /// One entry per unordered pair of distinct nodes.
    pub fn braid_relation_list(&self) -> Vec<(NodeId, NodeId, u8)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                out.push((self.nodes[i], self.nodes[j], self.mult[i][j]));
            }
        }
        out
    }

    /// Connected components after erasing every edge of multiplicity ≥ 2,
    /// each sorted, listed by smallest member.
    pub fn one_connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.mult[i][j] == 1 {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
        for i in 0..n {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().push(i);
        }
        groups.into_values().collect()
    }

    /// Number of independent generic Hecke parameters: one per 1-connected
    /// component, except that the specialised node of a starred family
    /// carries the fixed parameter 1 and does not count.
    pub fn hecke_parameter_count(&self) -> usize {
        self.one_connected_components()
            .into_iter()
            .filter(|c| !(c.len() == 1 && Some(c[0]) == self.specialized))
            .count()
    }

    /// Coxeter multiplicity matrix of the sub-diagram on the given nodes.
    pub fn restrict(&self, keep: &[usize]) -> Vec<Vec<u8>> {
        keep.iter().map(|&i| keep.iter().map(|&j| if i == j { 0 } else { self.mult[i][j] }).collect()).collect()
    }

    /// The finite diagram obtained by erasing all affine nodes.
    pub fn finite_part(&self) -> Vec<Vec<u8>> {
        let keep: Vec<usize> = (0..self.finite_rank()).collect();
        self.restrict(&keep)
    }

    /// The affine diagram obtained by keeping only the affine node `affine`.
    pub fn keep_one_affine(&self, affine: usize) -> Vec<Vec<u8>> {
        let mut keep: Vec<usize> = (0..self.finite_rank()).collect();
        keep.push(affine);
        self.restrict(&keep)
    }

    /// Deterministic DOT text; affine nodes are drawn filled.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph \"{}\" {{\n", self.name);
        for node in &self.nodes {
            let kind = match node.kind {
                NodeKind::Finite => "finite",
                NodeKind::Affine => "affine",
            };
            let style = if node.kind == NodeKind::Affine { ", style=filled" } else { "" };
            let special = if self.specialized == Some(node.index) { ", specialized=true" } else { "" };
            out.push_str(&format!(
                "  n{} [label=\"{}\", kind={kind}{style}{special}];\n",
                node.index, node.label
            ));
        }
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                let m = self.mult[i][j];
                if m > 0 {
                    out.push_str(&format!("  n{i} -- n{j} [mult={m}, label=\"{m}\"];\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// Parses the output of [`CoxeterDiagram::to_dot`].
    pub fn from_dot(text: &str) -> Result<CoxeterDiagram> {
        let parse_err = |msg: &str| Error::Parse(msg.to_string());
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| parse_err("empty input"))?;
        let name = header
            .strip_prefix("graph \"")
            .and_then(|rest| rest.strip_suffix("\" {"))
            .ok_or_else(|| parse_err("bad header"))?
            .to_string();
        let mut nodes = Vec::new();
        let mut edges = Vec::new();
        let mut specialized = None;
        let attr = |body: &str, key: &str| -> Option<String> {
            body.split(", ").find_map(|kv| kv.strip_prefix(&format!("{key}=")).map(|v| v.trim_matches('"').to_string()))
        };
        for line in lines {
            if line == "}" {
                break;
            }
            let (head, rest) = line.split_once(" [").ok_or_else(|| parse_err(line))?;
            let body = rest.strip_suffix("];").ok_or_else(|| parse_err(line))?;
            let node_index = |s: &str| -> Result<usize> {
                s.trim().strip_prefix('n').and_then(|i| i.parse().ok()).ok_or_else(|| parse_err(s))
            };
            if let Some((a, b)) = head.split_once(" -- ") {
                let m: u8 = attr(body, "mult").and_then(|m| m.parse().ok()).ok_or_else(|| parse_err(line))?;
                edges.push((node_index(a)?, node_index(b)?, m));
            } else {
                let index = node_index(head)?;
                let label: NodeLabel = attr(body, "label").ok_or_else(|| parse_err(line))?.parse()?;
                let kind = match attr(body, "kind").as_deref() {
                    Some("finite") => NodeKind::Finite,
                    Some("affine") => NodeKind::Affine,
                    _ => return Err(parse_err(line)),
                };
                if attr(body, "specialized").as_deref() == Some("true") {
                    specialized = Some(index);
                }
                nodes.push(NodeId { index, kind, label });
            }
        }
        if nodes.iter().enumerate().any(|(k, n)| n.index != k) {
            return Err(parse_err("nodes out of order"));
        }
        let mut mult = vec![vec![0u8; nodes.len()]; nodes.len()];
        for (a, b, m) in edges {
            if a >= nodes.len() || b >= nodes.len() || a == b || m > 4 {
                return Err(parse_err("bad edge"));
            }
            mult[a][b] = m;
            mult[b][a] = m;
        }
        Ok(CoxeterDiagram { name, nodes, mult, specialized })
    }

    /// JSON description with stable key order.
    pub fn to_json(&self, label: &DoubleAffineLabel) -> DiagramJson {
        let nodes = self
            .nodes
            .iter()
            .map(|n| NodeJson { index: n.index, label: n.label.to_string(), affine: n.kind == NodeKind::Affine })
            .collect();
        let mut edges = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.mult[i][j] > 0 {
                    edges.push(EdgeJson { source: i, target: j, multiplicity: self.mult[i][j] });
                }
            }
        }
        DiagramJson { family: label.family().name().to_string(), rank: label.rank(), nodes, edges }
    }
}

/// Coxeter matrix (edge multiplicities) of a finite root system in simple-root order.
pub fn finite_coxeter_matrix(rs: &RootSystem) -> Vec<Vec<u8>> {
    let c = rs.finite().cartan();
    let n = c.len();
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 0 } else { u8::try_from(c[i][j] * c[j][i]).expect("small") }).collect())
        .collect()
}

/// Coxeter matrix of an affine Dynkin diagram with the affine node placed last.
pub fn affine_coxeter_matrix(rs: &RootSystem) -> Vec<Vec<u8>> {
    let c = rs.cartan();
    let n = c.len();
    let order: Vec<usize> = (1..n).chain(std::iter::once(0)).collect();
    order
        .iter()
        .map(|&i| order.iter().map(|&j| if i == j { 0 } else { u8::try_from(c[i][j] * c[j][i]).expect("small") }).collect())
        .collect()
}

/// True when the multiplicity graph (edges of multiplicity ≥ 1) is connected.
pub fn is_connected(mult: &[Vec<u8>]) -> bool {
    let n = mult.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && mult[i][j] > 0 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Root vector attached to the `Φ₀` node (`-φ`) in rational coordinates.
pub fn phi_node_root(rs: &RootSystem) -> Vec<crate::rational::Q> {
    crate::rational::neg(&to_q_vec(rs.phi()))
}
