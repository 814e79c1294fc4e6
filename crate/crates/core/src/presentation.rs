//! Coxeter-type presentations of double affine Weyl groups.
//!
//! A [`Presentation`] lists the defining relations of the quotient of the
//! Coxeter braid group of a double affine diagram, at the Coxeter level
//! (squares of generators included).  The [`GeneratorDictionary`] sends each
//! generator to the double affine Weyl group (`φ`), and the verification
//! suite checks every relation there, together with a surjectivity
//! certificate: each generator of the double affine Weyl group is written as
//! a word in the presentation generators (`ψ`) and mapped back.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::Serialize;

use crate::daweyl::{comparison_map, DaweylElement, DoubleAffineWeyl};
use crate::diagrams::{build_diagram, CoxeterDiagram, DoubleAffineLabel, Family, NodeLabel};
use crate::error::{Error, Result};
use crate::rational::{self, frac, to_q_vec, Q};
use crate::report::Report;
use crate::rootsys::{is_positive_q, AffineType, FiniteKind, RootSystem};
use crate::weyl::{self, WeylElement};

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub node: NodeLabel,
    pub inverse: bool,
}

impl Letter {
    pub fn new(node: NodeLabel) -> Self {
        Letter { node, inverse: false }
    }

    pub fn inv(self) -> Self {
        Letter { node: self.node, inverse: !self.inverse }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.node, if self.inverse { "'" } else { "" })
    }
}

/// A word in the generators of a presentation, kept freely reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn gen(node: NodeLabel) -> Self {
        Word(vec![Letter::new(node)])
    }

    /// Builds a word and freely reduces it.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// `T_{i_1} … T_{i_k}` from 0-based finite indices.
    pub fn from_finite(indices: &[usize]) -> Self {
        Word::from_letters(indices.iter().map(|&i| Letter::new(NodeLabel::T(i + 1))))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Concatenation of several words.
    pub fn product<'a>(words: impl IntoIterator<Item = &'a Word>) -> Word {
        Word::from_letters(words.into_iter().flat_map(|w| w.0.iter().copied()))
    }

    /// Integer power.
    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        Word::from_letters((0..e.unsigned_abs()).flat_map(|_| base.0.iter().copied()))
    }

    /// The word read backwards (letters not inverted), as produced by an anti-morphism.
    pub fn reversed(&self) -> Word {
        Word::from_letters(self.0.iter().rev().copied())
    }

    /// Replaces every letter by a word (inverse letters by inverted words).
    pub fn substitute(&self, image: impl Fn(NodeLabel) -> Word) -> Word {
        Word::from_letters(self.0.iter().flat_map(|l| {
            let w = image(l.node);
            if l.inverse {
                w.inverse().0
            } else {
                w.0
            }
        }))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses whitespace-separated generator names with optional trailing `'`.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (body, inverse) = match token.strip_suffix('\'') {
                Some(b) => (b, true),
                None => (token, false),
            };
            letters.push(Letter { node: body.parse()?, inverse });
        }
        Ok(Word::from_letters(letters))
    }
}

/// A defining relation `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub lhs: Word,
    pub rhs: Word,
}

/// The two groups attached to the starred label: `C = Θ₀₂²` (plain) or
/// `Θ₀₂² = 1` (the central-extension version).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StarVariant {
    Plain,
    Central,
}

/// Distinguished finite words used in the relations, computed from reduced
/// words of the corresponding reflections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Macros {
    /// `Θ`: lexicographically least reduced word of `s_θ`.
    pub theta: Word,
    /// `Φ`: lexicographically least reduced word of `s_φ`.
    pub phi: Word,
    /// `Θ'` (word of `s_{θ'}`); `None` when `θ = φ`.
    pub theta_prime: Option<Word>,
    /// `Φ'` (word of `s_{φ'}`); `None` when `θ = φ`.
    pub phi_prime: Option<Word>,
    /// `Ψ`: word of `s_θ s_φ = (s_φ s_θ)^{-1}`.
    pub psi: Word,
    /// The central element `C`.
    pub central: Word,
    /// `i_θ`, `i_φ` (1-based).
    pub i_theta: usize,
    pub i_phi: usize,
    /// `ℓ₀`.
    pub ell0: i64,
}

/// A Coxeter-type presentation at the Coxeter (Weyl) level.
#[derive(Debug, Clone)]
pub struct Presentation {
    label: DoubleAffineLabel,
    variant: Option<StarVariant>,
    diagram: CoxeterDiagram,
    source: RootSystem,
    macros: Macros,
    relations: Vec<Relation>,
}

fn reflection_word(rs: &RootSystem, root: &[i64]) -> Result<Word> {
    let fs = rs.finite();
    let s = WeylElement::reflection(fs, root)?;
    Ok(Word::from_finite(&weyl::lex_least_reduced_word(fs, &s)))
}

/// Alternating words `abab…` and `baba…` with `m + 2` factors (`m = 3` gives 6).
pub fn braid_words(a: NodeLabel, b: NodeLabel, multiplicity: u8) -> Option<(Word, Word)> {
    let len = match multiplicity {
        0 => 2,
        1 => 3,
        2 => 4,
        3 => 6,
        _ => return None,
    };
    let alt = |x: NodeLabel, y: NodeLabel| {
        Word::from_letters((0..len).map(|k| Letter::new(if k % 2 == 0 { x } else { y })))
    };
    Some((alt(a, b), alt(b, a)))
}

impl Presentation {
    /// Builds the presentation; starred labels use the central-extension version.
    pub fn build(label: DoubleAffineLabel) -> Result<Self> {
        Presentation::build_variant(label, StarVariant::Central)
    }

    /// Builds the presentation, choosing the version for starred labels.
    pub fn build_variant(label: DoubleAffineLabel, variant: StarVariant) -> Result<Self> {
        let diagram = build_diagram(label)?;
        let source = RootSystem::build(label.diagram_source())?;
        let fs = source.finite();
        let theta = reflection_word(&source, source.theta())?;
        let phi = reflection_word(&source, source.phi())?;
        let distinct = source.theta() != source.phi();
        let (theta_prime, phi_prime) = if distinct {
            (Some(reflection_word(&source, &source.theta_prime())?), Some(reflection_word(&source, &source.phi_prime())?))
        } else {
            (None, None)
        };
        let s_theta = WeylElement::reflection(fs, source.theta())?;
        let s_phi = WeylElement::reflection(fs, source.phi())?;
        let psi = Word::from_finite(&weyl::lex_least_reduced_word(fs, &s_theta.mul(&s_phi)));
        let g = Word::gen;
        let triple = label.family().is_triple();
        let central = if triple {
            Word::product([&g(NodeLabel::Theta01), &g(NodeLabel::Theta02), &g(NodeLabel::Theta03), &theta])
        } else {
            Word::product([
                &g(NodeLabel::Phi0),
                &phi,
                &g(NodeLabel::Theta0),
                &psi,
                &g(NodeLabel::Phi0),
                &theta,
                &g(NodeLabel::Theta0),
            ])
        };
        let macros = Macros {
            theta,
            phi,
            theta_prime,
            phi_prime,
            psi,
            central,
            i_theta: source.i_theta(),
            i_phi: source.i_phi(),
            ell0: source.ell0(),
        };
        let variant = label.family().is_starred().then_some(variant);
        let mut p = Presentation { label, variant, diagram, source, macros, relations: Vec::new() };
        p.relations = p.assemble_relations();
        Ok(p)
    }

    fn assemble_relations(&self) -> Vec<Relation> {
        let mut rels = Vec::new();
        let nodes = self.diagram.nodes().to_vec();
        let triple = self.label.family().is_triple();
        for (a, b, m) in self.diagram.braid_relation_list() {
            if !triple && a.label == NodeLabel::Theta0 && b.label == NodeLabel::Phi0 {
                continue;
            }
            if let Some((lhs, rhs)) = braid_words(a.label, b.label, m) {
                rels.push(Relation { name: format!("braid({}, {}; {m})", a.label, b.label), lhs, rhs });
            }
        }
        for node in &nodes {
            if self.variant == Some(StarVariant::Plain) && node.label == NodeLabel::Theta02 {
                continue;
            }
            rels.push(Relation {
                name: format!("square({})", node.label),
                lhs: Word::gen(node.label).pow(2),
                rhs: Word::empty(),
            });
        }
        let c = &self.macros.central;
        for node in &nodes {
            let g = Word::gen(node.label);
            rels.push(Relation { name: format!("central(C, {})", node.label), lhs: c.concat(&g), rhs: g.concat(c) });
        }
        if triple && self.macros.ell0 == 2 {
            let t = Word::gen(NodeLabel::T(self.macros.i_theta));
            let affine = [NodeLabel::Theta01, NodeLabel::Theta02, NodeLabel::Theta03];
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let conj = Word::product([&t.inverse(), &Word::gen(affine[j]), &t]);
                rels.push(Relation {
                    name: format!("elliptic({}, {})", affine[i], affine[j]),
                    lhs: Word::gen(affine[i]).concat(&conj),
                    rhs: conj.concat(&Word::gen(affine[i])),
                });
            }
        }
        match self.variant {
            Some(StarVariant::Plain) => rels.push(Relation {
                name: "specialisation(C = Theta02^2)".into(),
                lhs: c.clone(),
                rhs: Word::gen(NodeLabel::Theta02).pow(2),
            }),
            Some(StarVariant::Central) => rels.push(Relation {
                name: "specialisation(Theta02^2 = 1)".into(),
                lhs: Word::gen(NodeLabel::Theta02).pow(2),
                rhs: Word::empty(),
            }),
            None => {}
        }
        rels
    }

    pub fn label(&self) -> DoubleAffineLabel {
        self.label
    }

    pub fn variant(&self) -> Option<StarVariant> {
        self.variant
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    /// Root system whose finite part supplies the words `Θ`, `Φ`, ….
    pub fn source_root_system(&self) -> &RootSystem {
        &self.source
    }

    pub fn macros(&self) -> &Macros {
        &self.macros
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// All generator labels in node order.
    pub fn generators(&self) -> Vec<NodeLabel> {
        self.diagram.nodes().iter().map(|n| n.label).collect()
    }

    /// Affine generator labels.
    pub fn affine_generators(&self) -> Vec<NodeLabel> {
        self.diagram.affine_nodes().into_iter().map(|i| self.diagram.nodes()[i].label).collect()
    }

    /// Parses a word, accepting the generator names plus the macros
    /// `C`, `Theta`, `Phi`, `ThetaP`, `PhiP`, `Psi` (each optionally primed).
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut out = Word::empty();
        for token in text.split_whitespace() {
            let (body, inverse) = match token.strip_suffix('\'') {
                Some(b) => (b, true),
                None => (token, false),
            };
            let undefined = || Error::Undefined(format!("`{body}` for {}", self.label));
            let piece = match body {
                "1" => Word::empty(),
                "C" => self.macros.central.clone(),
                "Theta" => self.macros.theta.clone(),
                "Phi" => self.macros.phi.clone(),
                "ThetaP" => self.macros.theta_prime.clone().ok_or_else(undefined)?,
                "PhiP" => self.macros.phi_prime.clone().ok_or_else(undefined)?,
                "Psi" => self.macros.psi.clone(),
                _ => {
                    let node: NodeLabel = body.parse()?;
                    if !self.generators().contains(&node) {
                        return Err(Error::UnknownSymbol(body.to_string()));
                    }
                    Word::gen(node)
                }
            };
            out = out.concat(&if inverse { piece.inverse() } else { piece });
        }
        Ok(out)
    }
}

/// The images of the presentation generators in the double affine Weyl group.
#[derive(Debug, Clone)]
pub struct GeneratorDictionary {
    dw: DoubleAffineWeyl,
    images: BTreeMap<NodeLabel, DaweylElement>,
    inverses: BTreeMap<NodeLabel, DaweylElement>,
    central_image: DaweylElement,
}

/// The `φ` dictionary of a presentation.
pub fn phi_dictionary(p: &Presentation) -> Result<GeneratorDictionary> {
    let label = p.label();
    let n = label.rank();
    let mut images = BTreeMap::new();
    let dw;
    let central_image;
    if label.family().is_starred() {
        // Images in W̃(A_{2n}^(2)) obtained by pushing the untwisted images
        // through the comparison morphism.
        let source = DoubleAffineWeyl::of_type(label.diagram_source())?;
        dw = DoubleAffineWeyl::of_type(label.correspondence())?;
        let src_theta = source.root_system().theta().to_vec();
        let theta_c = source.tau(&source.root_system().finite_coroot(&src_theta))?;
        let s_theta = source.weyl(&WeylElement::reflection(source.root_system().finite(), &src_theta)?);
        let s0 = source.s(0)?;
        let mut theta02 = comparison_map(&source.mul(&s0, &source.tau_simple_coroot(0)?));
        let mut c = dw.tau_delta(frac(1, 2));
        if p.variant() == Some(StarVariant::Plain) {
            theta02 = dw.mul(&theta02, &dw.tau_delta(frac(1, 2)));
            c = dw.tau_delta(Q::one());
        }
        images.insert(NodeLabel::Theta01, comparison_map(&s0));
        images.insert(NodeLabel::Theta02, theta02);
        images.insert(NodeLabel::Theta03, comparison_map(&source.mul(&theta_c, &s_theta)));
        central_image = c;
    } else {
        dw = DoubleAffineWeyl::of_type(label.correspondence())?;
        let rs = dw.root_system().clone();
        let fs = rs.finite();
        if label.family().is_triple() {
            let theta_c = dw.tau(&rs.finite_coroot(rs.theta()))?;
            let s_theta = dw.weyl(&WeylElement::reflection(fs, rs.theta())?);
            let s0 = dw.s(0)?;
            images.insert(NodeLabel::Theta01, s0.clone());
            images.insert(NodeLabel::Theta02, dw.mul(&s0, &dw.tau_simple_coroot(0)?));
            images.insert(NodeLabel::Theta03, dw.mul(&theta_c, &s_theta));
        } else {
            let phi_c = dw.tau(&rs.finite_coroot(rs.phi()))?;
            let s_phi = dw.weyl(&WeylElement::reflection(fs, rs.phi())?);
            images.insert(NodeLabel::Theta0, dw.s(0)?);
            images.insert(NodeLabel::Phi0, dw.mul(&phi_c, &s_phi));
        }
        central_image = dw.tau_delta(Q::one());
    }
    for i in 1..=n {
        images.insert(NodeLabel::T(i), dw.s(i)?);
    }
    let inverses = images.iter().map(|(k, v)| (*k, dw.inv(v))).collect();
    Ok(GeneratorDictionary { dw, images, inverses, central_image })
}

impl GeneratorDictionary {
    pub fn group(&self) -> &DoubleAffineWeyl {
        &self.dw
    }

    pub fn image(&self, node: NodeLabel) -> Option<&DaweylElement> {
        self.images.get(&node)
    }

    pub fn images(&self) -> &BTreeMap<NodeLabel, DaweylElement> {
        &self.images
    }

    /// The expected image of `C` (`τ_δ`, or `τ_{δ/2}` in the central-extension version).
    pub fn central_image(&self) -> &DaweylElement {
        &self.central_image
    }

    /// Evaluates a word.
    pub fn eval(&self, word: &Word) -> Result<DaweylElement> {
        let mut acc = self.dw.identity();
        for l in word.letters() {
            let table = if l.inverse { &self.inverses } else { &self.images };
            let g = table.get(&l.node).ok_or_else(|| Error::UnknownSymbol(l.node.to_string()))?;
            acc = self.dw.mul(&acc, g);
        }
        Ok(acc)
    }
}

/// Orbit of a vector under the finite Weyl group with, for each point `v`,
/// a shortest word `w` (0-based indices, applied right to left) with `w(v₀) = v`.
fn orbit_with_words(rs: &RootSystem, start: &[Q]) -> Vec<(Vec<Q>, Vec<usize>)> {
    let fs = rs.finite();
    let n = rs.rank();
    let mut seen: HashMap<Vec<Q>, Vec<usize>> = HashMap::new();
    let mut order = vec![start.to_vec()];
    seen.insert(start.to_vec(), Vec::new());
    let mut queue = VecDeque::from([start.to_vec()]);
    while let Some(v) = queue.pop_front() {
        let word = seen[&v].clone();
        for i in 0..n {
            let image = WeylElement::simple(fs, i).apply_q(&v);
            if !seen.contains_key(&image) {
                let mut w = vec![i];
                w.extend_from_slice(&word);
                seen.insert(image.clone(), w);
                order.push(image.clone());
                queue.push_back(image);
            }
        }
    }
    order.into_iter().map(|v| {
        let w = seen.remove(&v).expect("present");
        (v, w)
    }).collect()
}

/// Writes `target` as an integral combination of the simple elements of an
/// orbit (positive elements that are not sums of two positive elements).
fn orbit_decomposition(orbit: &[(Vec<Q>, Vec<usize>)], target: &[Q]) -> Result<Vec<(usize, i64)>> {
    let positives: Vec<usize> = (0..orbit.len()).filter(|&k| is_positive_q(&orbit[k].0)).collect();
    let sums: HashSet<Vec<Q>> = positives
        .iter()
        .flat_map(|&a| positives.iter().map(move |&b| rational::add(&orbit[a].0, &orbit[b].0)))
        .collect();
    let mut basis: Vec<usize> = positives.into_iter().filter(|&k| !sums.contains(&orbit[k].0)).collect();
    basis.sort_by(|a, b| orbit[*a].0.cmp(&orbit[*b].0));
    let n = target.len();
    let matrix: Vec<Vec<Q>> = (0..n).map(|row| basis.iter().map(|&k| orbit[k].0[row].clone()).collect()).collect();
    if basis.len() != n {
        return Err(Error::Undefined("orbit simple elements do not form a basis".into()));
    }
    let coeffs = rational::solve(&matrix, target).ok_or_else(|| Error::Undefined("singular orbit basis".into()))?;
    let ints = rational::to_int_vec(&coeffs).ok_or_else(|| Error::Undefined("non-integral orbit coordinates".into()))?;
    Ok(basis.into_iter().zip(ints).filter(|(_, c)| *c != 0).collect())
}

/// Conjugates `base` by the positive braid lift of a Weyl word: `T_w base T_w^{-1}`.
fn conjugate_by_finite(word: &[usize], base: &Word) -> Word {
    let tw = Word::from_finite(word);
    Word::product([&tw, base, &tw.inverse()])
}

/// The `ψ` dictionary: each generator of the double affine Weyl group
/// (`s0…sn`, `L1…Ln`, `t1…tn`, `d`, and `h` = `τ_{δ/2}` in the
/// central-extension version) as a word in the presentation generators.
pub fn psi_dictionary(p: &Presentation, dict: &GeneratorDictionary) -> Result<Vec<(String, Word, DaweylElement)>> {
    let dw = dict.group();
    let rs = dw.root_system();
    let n = rs.rank();
    let m = p.macros();
    let triple = p.label().family().is_triple();
    let s0_word = Word::gen(if triple { NodeLabel::Theta01 } else { NodeLabel::Theta0 });
    let mut out = Vec::new();
    out.push(("s0".to_string(), s0_word.clone(), dw.s(0)?));
    for i in 1..=n {
        out.push((format!("s{i}"), Word::gen(NodeLabel::T(i)), dw.s(i)?));
    }
    // λ_{-θ/a₀} = s_θ s₀ ↦ Θ·s0, hence λ_{θ/a₀} ↦ (Θ·s0)^{-1}.
    let lambda_base = m.theta.concat(&s0_word).inverse();
    let start = rational::scale(&frac(1, rs.a0()), &to_q_vec(rs.theta()));
    let lambda_orbit = orbit_with_words(rs, &start);
    for (i, target) in rs.m_basis().iter().enumerate() {
        let mut word = Word::empty();
        for (k, c) in orbit_decomposition(&lambda_orbit, target)? {
            word = word.concat(&conjugate_by_finite(&lambda_orbit[k].1, &lambda_base).pow(c));
        }
        out.push((format!("L{}", i + 1), word, dw.lambda_basis(i + 1)?));
    }
    // τ_{θ^∨} ↦ Θ₀₃Θ (triple), τ_{φ^∨} ↦ Φ₀Φ (two affine nodes).
    let (tau_root, tau_base) = if triple {
        (rs.theta().to_vec(), Word::gen(NodeLabel::Theta03).concat(&m.theta))
    } else {
        (rs.phi().to_vec(), Word::gen(NodeLabel::Phi0).concat(&m.phi))
    };
    let tau_orbit = orbit_with_words(rs, &rs.finite_coroot(&tau_root));
    for i in 1..=n {
        let target = rs.simple_coroot(i).finite;
        let mut word = Word::empty();
        for (k, c) in orbit_decomposition(&tau_orbit, &target)? {
            word = word.concat(&conjugate_by_finite(&tau_orbit[k].1, &tau_base).pow(c));
        }
        out.push((format!("t{i}"), word, dw.tau_simple_coroot(i)?));
    }
    match p.variant() {
        Some(StarVariant::Central) => {
            out.push(("d".into(), m.central.pow(2), dw.tau_delta(Q::one())));
            out.push(("h".into(), m.central.clone(), dw.tau_delta(frac(1, 2))));
        }
        _ => out.push(("d".into(), m.central.clone(), dw.tau_delta(Q::one()))),
    }
    Ok(out)
}

/// Weyl-level distinguished elements `Θ, Φ, Θ', Φ', Ψ, Ψ-reversed, w∘`.
#[derive(Debug, Clone)]
pub struct DistinguishedElements {
    pub theta: WeylElement,
    pub phi: WeylElement,
    pub theta_prime: Option<WeylElement>,
    pub phi_prime: Option<WeylElement>,
    pub psi: WeylElement,
    pub psi_reversed: WeylElement,
    pub longest: WeylElement,
}

/// Computes the distinguished elements of a label.
pub fn distinguished_elements(label: DoubleAffineLabel) -> Result<DistinguishedElements> {
    let rs = RootSystem::build(label.diagram_source())?;
    let fs = rs.finite();
    let theta = WeylElement::reflection(fs, rs.theta())?;
    let phi = WeylElement::reflection(fs, rs.phi())?;
    let (theta_prime, phi_prime) = if rs.theta() != rs.phi() {
        (Some(WeylElement::reflection(fs, &rs.theta_prime())?), Some(WeylElement::reflection(fs, &rs.phi_prime())?))
    } else {
        (None, None)
    };
    let psi = theta.mul(&phi);
    let psi_reversed = phi.mul(&theta);
    Ok(DistinguishedElements { theta, phi, theta_prime, phi_prime, psi, psi_reversed, longest: weyl::longest_element(fs) })
}

/// Weyl-level identities between the distinguished elements.
pub fn distinguished_identities(label: DoubleAffineLabel) -> Result<Report> {
    let d = distinguished_elements(label)?;
    let rs = RootSystem::build(label.diagram_source())?;
    let mut report = Report::new("distinguished", label.to_string());
    let id = WeylElement::identity(rs.rank());
    report.check("Ψ is trivial iff θ = φ", d.psi.is_identity() == (rs.theta() == rs.phi()), || d.psi.to_string());
    if let (Some(tp), Some(pp)) = (&d.theta_prime, &d.phi_prime) {
        report.check("Θ'Θ = ΦΦ'", tp.mul(&d.theta) == d.phi.mul(pp), || "s_θ' s_θ ≠ s_φ s_φ'".into());
        report.check("Φ'Φ = ΘΘ'", pp.mul(&d.phi) == d.theta.mul(tp), || "s_φ' s_φ ≠ s_θ s_θ'".into());
        report.check("Θ' = ΦΘΦ", *tp == d.phi.mul(&d.theta).mul(&d.phi), || tp.to_string());
        report.check("Φ' = ΘΦΘ", *pp == d.theta.mul(&d.phi).mul(&d.theta), || pp.to_string());
        report.check("Ψ = Φ'Θ^{-1} = Φ^{-1}Θ'", d.psi == pp.mul(&d.theta) && d.psi == d.phi.mul(tp), || d.psi.to_string());
        report.check("Ψ-reversed = Θ'Φ^{-1} = Θ^{-1}Φ'", d.psi_reversed == tp.mul(&d.phi) && d.psi_reversed == d.theta.mul(pp), || {
            d.psi_reversed.to_string()
        });
        if label.family() != Family::DdotG2 {
            report.check("Θ = Φ'Θ'Φ'", d.theta == pp.mul(tp).mul(pp), || "s_θ ≠ s_φ' s_θ' s_φ'".into());
            let braid2 = |x: &WeylElement, y: &WeylElement| x.mul(y).mul(x).mul(y) == y.mul(x).mul(y).mul(x);
            report.check("Θ', Φ' satisfy the 2-braid relation", braid2(tp, pp), || "no 2-braid".into());
        }
    }
    report.check("w∘ is an involution", d.longest.mul(&d.longest) == id, || d.longest.to_string());
    Ok(report)
}

fn eq_check(report: &mut Report, dw: &DoubleAffineWeyl, id: String, lhs: &DaweylElement, rhs: &DaweylElement) {
    report.check(id, lhs == rhs, || format!("lhs = {} ; rhs = {}", dw.format(lhs), dw.format(rhs)));
}

/// Verifies the presentation of a label in the double affine Weyl group:
/// every relation, the images of `C` and `Θ₀₂`, the `ψ` round trip, and the
/// auxiliary identities (expression of `Θ₀₂` through the others when
/// `ℓ₀ = 1`, the alternative forms of `C`, the labelled `̈B₂` braid pattern).
/// For starred labels both versions are verified.
pub fn verify_presentation(label: DoubleAffineLabel) -> Result<Report> {
    let mut report = Report::new("presentation", label.to_string());
    if label.family().is_starred() {
        for (variant, prefix) in [(StarVariant::Central, "central/"), (StarVariant::Plain, "plain/")] {
            let p = Presentation::build_variant(label, variant)?;
            report.absorb(prefix, verify_built(&p)?);
        }
    } else {
        report.absorb("", verify_built(&Presentation::build(label)?)?);
    }
    report.absorb("", distinguished_identities(label)?);
    Ok(report)
}

/// Verification of one built presentation.
pub fn verify_built(p: &Presentation) -> Result<Report> {
    let dict = phi_dictionary(p)?;
    let dw = dict.group();
    let mut report = Report::new("presentation", p.label().to_string());
    for rel in p.relations() {
        let lhs = dict.eval(&rel.lhs)?;
        let rhs = dict.eval(&rel.rhs)?;
        eq_check(&mut report, dw, rel.name.clone(), &lhs, &rhs);
    }
    let m = p.macros();
    eq_check(&mut report, dw, "φ(C) is τ_δ".into(), &dict.eval(&m.central)?, dict.central_image());
    for node in p.generators() {
        let g = dict.image(node).expect("generator image");
        if let NodeLabel::T(i) = node {
            eq_check(&mut report, dw, format!("φ({node}) = s{i}"), g, &dw.s(i)?);
        }
    }
    if p.label().family().is_triple() {
        let t02 = dict.image(NodeLabel::Theta02).expect("Θ₀₂");
        if p.variant() != Some(StarVariant::Plain) {
            eq_check(&mut report, dw, "φ(Θ02)² = 1".into(), &dw.mul(t02, t02), &dw.identity());
        }
        if m.ell0 == 1 {
            let text = "Theta01' T' Theta01 T Theta' Theta03' T Theta03 Theta Theta01 T'";
            let t = Word::gen(NodeLabel::T(m.i_theta));
            let word = text
                .split_whitespace()
                .map(|tok| match tok {
                    "T" => t.clone(),
                    "T'" => t.inverse(),
                    other => p.parse_word(other).expect("valid macro token"),
                })
                .fold(Word::empty(), |acc, w| acc.concat(&w));
            eq_check(&mut report, dw, "Θ02 expressed through Θ01, Θ03, T_iθ".into(), &dict.eval(&word)?, t02);
        }
    } else {
        let g = |l: NodeLabel| Word::gen(l);
        let (t0, p0) = (g(NodeLabel::Theta0), g(NodeLabel::Phi0));
        if let (Some(tp), Some(pp)) = (&m.theta_prime, &m.phi_prime) {
            if p.label().family() != Family::DdotG2 {
                let alt = Word::product([&p0, tp, pp, &t0]).pow(2);
                eq_check(&mut report, dw, "C = (Φ0 Θ' Φ' Θ0)²".into(), &dict.eval(&alt)?, dict.central_image());
                let pairs: [(&Word, &Word, u8, &str); 5] = [
                    (&p0, pp, 0, "Φ0, Φ'"),
                    (&p0, tp, 2, "Φ0, Θ'"),
                    (&t0, tp, 0, "Θ0, Θ'"),
                    (&t0, pp, 2, "Θ0, Φ'"),
                    (tp, pp, 2, "Θ', Φ'"),
                ];
                for (a, b, mult, name) in pairs {
                    let len = if mult == 0 { 2 } else { 4 };
                    let alt = |x: &Word, y: &Word| {
                        (0..len).fold(Word::empty(), |acc, k| acc.concat(if k % 2 == 0 { x } else { y }))
                    };
                    eq_check(
                        &mut report,
                        dw,
                        format!("labelled B2 pattern: {name} ({mult}-braid)"),
                        &dict.eval(&alt(a, b))?,
                        &dict.eval(&alt(b, a))?,
                    );
                }
            } else {
                let ti = g(NodeLabel::T(m.i_theta));
                let tf = g(NodeLabel::T(m.i_phi));
                let alt = Word::product([&p0, &tf, &ti, &tf, &ti, &t0]).pow(2);
                eq_check(&mut report, dw, "C = (Φ0 T_iφ T_iθ T_iφ T_iθ Θ0)²".into(), &dict.eval(&alt)?, dict.central_image());
            }
        }
    }
    for (name, word, expected) in psi_dictionary(p, &dict)? {
        let value = dict.eval(&word)?;
        eq_check(&mut report, dw, format!("ψ round trip {name}"), &value, &expected);
    }
    Ok(report)
}

/// Representative labels `(family, rank)` at ranks `{min, min+1}` (fixed ranks once).
pub fn representative_labels(include_large: bool) -> Vec<DoubleAffineLabel> {
    let mut out = Vec::new();
    for family in Family::ALL {
        let (lo, hi) = family.rank_range();
        for rank in lo..=hi.min(lo + 1) {
            if family == Family::DddotC && rank == 1 {
                continue;
            }
            if family == Family::DddotCStar && rank == 1 {
                continue;
            }
            if family == Family::DddotE && rank > 6 && !include_large {
                continue;
            }
            if let Ok(label) = DoubleAffineLabel::new(family, rank) {
                if !out.contains(&label) {
                    out.push(label);
                }
            }
        }
    }
    if include_large {
        out.push(DoubleAffineLabel::new(Family::DddotE, 8).expect("E8"));
    }
    out
}

/// True when the finite type of a label is simply laced.
pub fn is_simply_laced(label: DoubleAffineLabel) -> bool {
    let t = label.diagram_source();
    match t {
        AffineType::Untwisted(ft) => matches!(ft.kind(), FiniteKind::A | FiniteKind::D | FiniteKind::E),
        _ => false,
    }
}
