//! Hecke-parameter bookkeeping.
//!
//! Generators connected by a path of simple edges are conjugate, so they share
//! a Hecke parameter: the independent parameters of a double affine Coxeter
//! diagram are indexed by its 1-connected components.  Affine root systems
//! (reduced, or nonreduced through their reduced system of non-multipliable
//! roots) specialise the generic parameters by identifying some of them.
//! Parameters are formal symbols only; no algebra arithmetic happens here.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::diagrams::{build_diagram, DoubleAffineLabel, Family, NodeLabel};
use crate::error::{Error, Result};
use crate::rootsys::{AffineType, FiniteKind, FiniteType};

/// Formal name of the parameter attached to a generator.
pub fn symbol_for(node: NodeLabel) -> String {
    match node {
        NodeLabel::T(i) => format!("t{i}"),
        NodeLabel::Theta01 => "theta01".into(),
        NodeLabel::Theta02 => "theta02".into(),
        NodeLabel::Theta03 => "theta03".into(),
        NodeLabel::Theta0 => "theta0".into(),
        NodeLabel::Phi0 => "phi0".into(),
    }
}

/// The symbol of a parameter pinned to the constant 1.
pub const UNIT_SYMBOL: &str = "1";

/// One 1-connected component and the parameter it carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentParam {
    pub nodes: Vec<NodeLabel>,
    pub symbol: String,
}

/// Assignment of a formal parameter to every 1-connected component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamAssignment {
    pub label: DoubleAffineLabel,
    pub components: Vec<ComponentParam>,
    /// Formal square roots adjoined to the field of parameters.
    pub field: Vec<String>,
}

impl ParamAssignment {
    /// Symbol of the component containing a node.
    pub fn symbol_of(&self, node: NodeLabel) -> Option<&str> {
        self.components.iter().find(|c| c.nodes.contains(&node)).map(|c| c.symbol.as_str())
    }

    /// Number of independent (non-pinned) parameters.
    pub fn independent_count(&self) -> usize {
        self.components.iter().filter(|c| c.symbol != UNIT_SYMBOL).count()
    }
}

/// The generic parameter assignment of a label.  Each component is named
/// after its first node; the specialised node of a starred family is pinned
/// to 1.
pub fn param_assignment(label: DoubleAffineLabel) -> Result<ParamAssignment> {
    let diagram = build_diagram(label)?;
    let nodes = diagram.nodes();
    let components: Vec<ComponentParam> = diagram
        .one_connected_components()
        .into_iter()
        .map(|comp| {
            let pinned = comp.len() == 1 && Some(comp[0]) == diagram.specialized_node();
            let symbol = if pinned { UNIT_SYMBOL.to_string() } else { symbol_for(nodes[comp[0]].label) };
            ComponentParam { nodes: comp.iter().map(|&i| nodes[i].label).collect(), symbol }
        })
        .collect();
    let field = components
        .iter()
        .filter(|c| c.symbol != UNIT_SYMBOL)
        .map(|c| format!("{}^(1/2)", c.symbol))
        .collect();
    Ok(ParamAssignment { label, components, field })
}

/// Maximal number of independent Hecke parameters of a label.
pub fn generic_param_count(label: DoubleAffineLabel) -> Result<usize> {
    Ok(build_diagram(label)?.hecke_parameter_count())
}

/// The quadratic relation imposed on one generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadraticRelation {
    pub node: NodeLabel,
    pub symbol: String,
}

impl QuadraticRelation {
    pub fn new(node: NodeLabel, symbol: impl Into<String>) -> Self {
        QuadraticRelation { node, symbol: symbol.into() }
    }

    /// Whether the relation degenerates to an involution (`symbol = 1`).
    pub fn is_involution(&self) -> bool {
        self.symbol == UNIT_SYMBOL
    }

    /// The right-hand side, shared by all generators with the same parameter.
    pub fn rhs(&self) -> String {
        if self.is_involution() {
            "1".into()
        } else {
            format!("{0}^(1/2) - {0}^(-1/2)", self.symbol)
        }
    }
}

impl fmt::Display for QuadraticRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_involution() {
            write!(f, "{}^2 = 1", self.node)
        } else {
            write!(f, "{0} - {0}^(-1) = {1}", self.node, self.rhs())
        }
    }
}

/// The quadratic relation of a single generator.
pub fn quadratic_relation(node: NodeLabel, symbol: &str) -> QuadraticRelation {
    QuadraticRelation::new(node, symbol)
}

/// One quadratic relation per generator of a label, with generic parameters.
pub fn quadratic_relations(label: DoubleAffineLabel) -> Result<Vec<QuadraticRelation>> {
    let assignment = param_assignment(label)?;
    let mut out = Vec::new();
    for comp in &assignment.components {
        for node in &comp.nodes {
            out.push(QuadraticRelation::new(*node, comp.symbol.clone()));
        }
    }
    out.sort_by_key(|r| r.node);
    Ok(out)
}

/// The irreducible nonreduced affine root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NonreducedKind {
    /// `(BC_n, C_n)`, `n ≥ 1`.
    BcC,
    /// `(C_n^∨, BC_n)`, `n ≥ 1`.
    CdualBc,
    /// `(B_n, B_n^∨)`, `n ≥ 3`.
    BBdual,
    /// `(C_n^∨, C_n)`, `n ≥ 1`.
    CdualC,
    /// `(C_2, C_2^∨)`.
    C2C2dual,
}

/// A nonreduced affine root system of a given rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Nonreduced {
    kind: NonreducedKind,
    rank: usize,
}

impl Nonreduced {
    pub fn new(kind: NonreducedKind, rank: usize) -> Result<Self> {
        let ok = match kind {
            NonreducedKind::BcC | NonreducedKind::CdualBc | NonreducedKind::CdualC => rank >= 1,
            NonreducedKind::BBdual => rank >= 3,
            NonreducedKind::C2C2dual => rank == 2,
        };
        if ok {
            Ok(Nonreduced { kind, rank })
        } else {
            Err(Error::InvalidRank { family: Nonreduced { kind, rank }.family_name(), rank })
        }
    }

    pub fn kind(&self) -> NonreducedKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn family_name(&self) -> String {
        match self.kind {
            NonreducedKind::BcC => "(BCn, Cn)",
            NonreducedKind::CdualBc => "(Cn^, BCn)",
            NonreducedKind::BBdual => "(Bn, Bn^)",
            NonreducedKind::CdualC => "(Cn^, Cn)",
            NonreducedKind::C2C2dual => "(C2, C2^)",
        }
        .to_string()
    }
}

impl fmt::Display for Nonreduced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank;
        match self.kind {
            NonreducedKind::BcC => write!(f, "(BC{n}, C{n})"),
            NonreducedKind::CdualBc => write!(f, "(C{n}^, BC{n})"),
            NonreducedKind::BBdual => write!(f, "(B{n}, B{n}^)"),
            NonreducedKind::CdualC => write!(f, "(C{n}^, C{n})"),
            NonreducedKind::C2C2dual => write!(f, "(C2, C2^)"),
        }
    }
}

/// A reduced or nonreduced irreducible affine root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AffineSystem {
    Reduced(#[serde(serialize_with = "crate::heckeparams::display_ser")] AffineType),
    Nonreduced(#[serde(serialize_with = "crate::heckeparams::display_ser")] Nonreduced),
}

fn display_ser<T: fmt::Display, S: serde::Serializer>(value: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

impl fmt::Display for AffineSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineSystem::Reduced(t) => write!(f, "{t}"),
            AffineSystem::Nonreduced(s) => write!(f, "{s}"),
        }
    }
}

/// Evaluates an index such as `4`, `n`, `2n`, `2n-1` or `(n+1)`.
fn eval_index(expr: &str, n: Option<usize>) -> Result<usize> {
    let bad = || Error::Parse(format!("cannot read rank '{expr}'"));
    let e: String = expr.chars().filter(|c| !matches!(c, '(' | ')')).collect();
    if e.is_empty() {
        return Err(bad());
    }
    let Some(pos) = e.find('n') else {
        return e.parse().map_err(|_| bad());
    };
    let n = n.ok_or_else(|| Error::Parse(format!("'{expr}' needs a value for n")))? as i64;
    let coeff: i64 = if pos == 0 { 1 } else { e[..pos].parse().map_err(|_| bad())? };
    let rest = &e[pos + 1..];
    let offset: i64 = if rest.is_empty() { 0 } else { rest.trim_start_matches('+').parse().map_err(|_| bad())? };
    usize::try_from(coeff * n + offset).map_err(|_| bad())
}

/// Parses a root-system label.  Reduced systems use `X_k^(r)` notation,
/// where the index may involve `n` (`A2n^(2)`, `D(n+1)^(2)`); nonreduced
/// systems are written as pairs, with `^` (or `∨`) marking the dual:
/// `(BCn,Cn)`, `(Cn^,BCn)`, `(Bn,Bn^)`, `(Cn^,Cn)`, `(C2,C2^)`.
pub fn parse_system(text: &str, n: Option<usize>) -> Result<AffineSystem> {
    let cleaned: String = text
        .chars()
        .filter(|c| !c.is_whitespace() && !matches!(c, '_' | '{' | '}'))
        .map(|c| if c == '∨' { '^' } else { c })
        .collect();
    if let Some(inner) = cleaned.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        return parse_nonreduced(inner, n).map(AffineSystem::Nonreduced);
    }
    let Some(caret) = cleaned.find('^') else {
        return cleaned.parse().map(AffineSystem::Reduced);
    };
    let (head, tail) = cleaned.split_at(caret);
    let mut chars = head.chars();
    let letter = chars.next().ok_or_else(|| Error::UnknownType(text.to_string()))?;
    let index = eval_index(chars.as_str(), n)?;
    format!("{letter}{index}{tail}").parse().map(AffineSystem::Reduced)
}

fn parse_nonreduced(inner: &str, n: Option<usize>) -> Result<Nonreduced> {
    let unknown = || Error::UnknownType(format!("({inner})"));
    let (left, right) = inner.split_once(',').ok_or_else(unknown)?;
    let split = |part: &str| -> Result<(String, usize, bool)> {
        let dual = part.ends_with('^');
        let part = part.trim_end_matches('^');
        let letters: String = part.chars().take_while(|c| c.is_ascii_alphabetic() && *c != 'n').collect();
        let index = eval_index(&part[letters.len()..], n)?;
        Ok((letters.to_ascii_uppercase(), index, dual))
    };
    let (l, ln, ld) = split(left)?;
    let (r, rn, rd) = split(right)?;
    if ln != rn {
        return Err(Error::Parse(format!("mismatched ranks in ({inner})")));
    }
    let kind = match (l.as_str(), ld, r.as_str(), rd) {
        ("BC", false, "C", false) => NonreducedKind::BcC,
        ("C", true, "BC", false) => NonreducedKind::CdualBc,
        ("B", false, "B", true) => NonreducedKind::BBdual,
        ("C", true, "C", false) => NonreducedKind::CdualC,
        ("C", false, "C", true) if ln == 2 => NonreducedKind::C2C2dual,
        _ => return Err(unknown()),
    };
    Nonreduced::new(kind, ln)
}

impl FromStr for AffineSystem {
    type Err = Error;

    /// Parses a label without free rank variable.
    fn from_str(s: &str) -> Result<Self> {
        parse_system(s, None)
    }
}

fn untwisted_c(n: usize) -> AffineType {
    let kind = if n == 1 { FiniteKind::A } else { FiniteKind::C };
    AffineType::Untwisted(FiniteType::new(kind, n).expect("rank ≥ 1"))
}

/// The reduced system of non-multipliable roots of a nonreduced system.
pub fn nonreduced_to_reduced(system: Nonreduced) -> AffineType {
    let n = system.rank;
    match system.kind {
        NonreducedKind::BcC | NonreducedKind::CdualC => untwisted_c(n),
        NonreducedKind::CdualBc => AffineType::AEvenTwisted(n),
        NonreducedKind::BBdual => AffineType::AOddTwisted(n),
        NonreducedKind::C2C2dual => AffineType::DTwisted(2),
    }
}

/// A set of parameters declared equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Identification(pub Vec<NodeLabel>);

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.0.iter().map(|n| symbol_for(*n)).collect();
        f.write_str(&names.join(" = "))
    }
}

/// The specialisation of the generic parameters attached to an affine root
/// system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecializationRule {
    pub system: AffineSystem,
    #[serde(serialize_with = "crate::heckeparams::display_ser")]
    pub target: DoubleAffineLabel,
    pub identifications: Vec<Identification>,
    pub generic_count: usize,
    pub final_count: usize,
}

/// The identifications imposed by an affine root system, and the number of
/// parameters left afterwards.
pub fn specialize(system: AffineSystem) -> Result<SpecializationRule> {
    use NodeLabel::*;
    let label = |f: Family, n: usize| DoubleAffineLabel::new(f, n);
    let (target, identifications) = match system {
        AffineSystem::Reduced(t) => match t {
            AffineType::Untwisted(ft) if ft.kind() == FiniteKind::A && ft.rank() == 1 => {
                (label(Family::DddotA, 1)?, vec![vec![Theta01, Theta02, Theta03, T(1)]])
            }
            AffineType::Untwisted(ft) if matches!(ft.kind(), FiniteKind::C) || (ft.kind() == FiniteKind::B && ft.rank() == 2) => {
                (label(Family::DddotC, ft.rank())?, vec![vec![Theta01, Theta02, Theta03]])
            }
            AffineType::AEvenTwisted(n) => (DoubleAffineLabel::from_affine_type(t)?, vec![vec![Theta03, T(n)]]),
            // In our labelling of the `̈B₂` diagram the short finite node is T2.
            AffineType::DTwisted(2) => (label(Family::DdotB2, 2)?, vec![vec![Theta0, T(2)]]),
            AffineType::DTwisted(n) => (label(Family::DdotB, n)?, vec![vec![Theta0, T(n)]]),
            AffineType::AOddTwisted(n) => (label(Family::DdotC, n)?, vec![vec![Phi0, T(n)]]),
            other => (DoubleAffineLabel::from_affine_type(other)?, vec![]),
        },
        AffineSystem::Nonreduced(nr) => {
            let n = nr.rank;
            match nr.kind {
                NonreducedKind::BcC => (label(Family::DddotC, n)?, vec![vec![Theta01, Theta02]]),
                NonreducedKind::CdualC => (label(Family::DddotC, n)?, vec![]),
                NonreducedKind::CdualBc => (DoubleAffineLabel::from_affine_type(AffineType::AEvenTwisted(n))?, vec![]),
                NonreducedKind::BBdual => (label(Family::DdotC, n)?, vec![]),
                NonreducedKind::C2C2dual => (label(Family::DdotB2, 2)?, vec![]),
            }
        }
    };
    let identifications: Vec<Identification> = identifications.into_iter().map(Identification).collect();
    let assignment = param_assignment(target)?;
    let final_count = count_after(&assignment, &identifications)?;
    Ok(SpecializationRule { system, target, identifications, generic_count: assignment.independent_count(), final_count })
}

/// Number of independent parameters once the identifications are imposed.
fn count_after(assignment: &ParamAssignment, identifications: &[Identification]) -> Result<usize> {
    let mut class: BTreeMap<String, String> = assignment
        .components
        .iter()
        .filter(|c| c.symbol != UNIT_SYMBOL)
        .map(|c| (c.symbol.clone(), c.symbol.clone()))
        .collect();
    fn root(class: &BTreeMap<String, String>, s: &str) -> String {
        let mut cur = s.to_string();
        while class[&cur] != cur {
            cur = class[&cur].clone();
        }
        cur
    }
    for ident in identifications {
        let symbols: Vec<String> = ident
            .0
            .iter()
            .map(|node| {
                assignment
                    .symbol_of(*node)
                    .map(str::to_string)
                    .ok_or_else(|| Error::UnknownSymbol(symbol_for(*node)))
            })
            .collect::<Result<_>>()?;
        if symbols.iter().any(|s| s == UNIT_SYMBOL) {
            return Err(Error::Undefined(format!("identification {ident} involves a pinned parameter")));
        }
        let first = root(&class, &symbols[0]);
        for s in &symbols[1..] {
            let r = root(&class, s);
            if r != first {
                class.insert(r, first.clone());
            }
        }
    }
    let keys: Vec<String> = class.keys().cloned().collect();
    let mut roots: Vec<String> = keys.iter().map(|k| root(&class, k)).collect();
    roots.sort();
    roots.dedup();
    Ok(roots.len())
}

/// All rows of the specialisation table at a given rank (rows that do not
/// exist at that rank are skipped).
pub fn specialization_table(n: usize) -> Vec<SpecializationRule> {
    let mut systems = Vec::new();
    if n == 1 {
        systems.push(AffineSystem::Reduced(untwisted_c(1)));
    } else {
        systems.push(AffineSystem::Reduced(untwisted_c(n)));
    }
    for kind in [NonreducedKind::BcC, NonreducedKind::CdualC] {
        systems.extend(Nonreduced::new(kind, n).ok().map(AffineSystem::Nonreduced));
    }
    systems.push(AffineSystem::Reduced(AffineType::AEvenTwisted(n)));
    systems.extend(Nonreduced::new(NonreducedKind::CdualBc, n).ok().map(AffineSystem::Nonreduced));
    if n == 2 {
        systems.push(AffineSystem::Reduced(AffineType::DTwisted(2)));
        systems.extend(Nonreduced::new(NonreducedKind::C2C2dual, 2).ok().map(AffineSystem::Nonreduced));
    }
    if n >= 3 {
        systems.push(AffineSystem::Reduced(AffineType::DTwisted(n)));
        systems.push(AffineSystem::Reduced(AffineType::AOddTwisted(n)));
        systems.extend(Nonreduced::new(NonreducedKind::BBdual, n).ok().map(AffineSystem::Nonreduced));
    }
    systems.into_iter().filter_map(|s| specialize(s).ok()).collect()
}
