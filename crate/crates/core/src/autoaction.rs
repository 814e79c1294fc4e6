//! The action of the rank-two braid groups by automorphisms of the
//! presentations.
//!
//! An [`EndoMap`] assigns a word to every generator of a source presentation
//! and is either a homomorphism or an anti-homomorphism of free groups.  The
//! basic maps `𝔞`, `𝔟` (with explicit inverses) and the anti-involution `𝔢`
//! are built per label; composite maps can be formed at the word level with
//! [`compose`], but verification goes through [`evaluate_chain`]: a chain of
//! maps is pushed into the double affine Weyl group one map at a time, so the
//! cost stays linear in the length of the chain and no word ever blows up.
//!
//! Two endomorphisms are considered equal when they agree generator-wise in
//! the double affine Weyl group and have the same parity (homomorphism or
//! anti-homomorphism).

use std::collections::BTreeMap;
use std::fmt;

use crate::congruence::{self, braid_lift, BraidWord, CongruenceGroup, Mat2, TwoGen};
use crate::daweyl::{DaweylElement, DoubleAffineWeyl};
use crate::diagrams::{DoubleAffineLabel, Family, NodeLabel};
use crate::error::{Error, Result};
use crate::presentation::{phi_dictionary, GeneratorDictionary, Presentation, StarVariant, Word};
use crate::report::Report;
use crate::weyl;

/// A free-group (anti-)endomorphism between two presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoMap {
    name: String,
    source: DoubleAffineLabel,
    target: DoubleAffineLabel,
    images: BTreeMap<NodeLabel, Word>,
    anti: bool,
}

impl EndoMap {
    /// The identity of a presentation.
    pub fn identity(p: &Presentation) -> Self {
        let images = p.generators().into_iter().map(|g| (g, Word::gen(g))).collect();
        EndoMap { name: "id".into(), source: p.label(), target: p.label(), images, anti: false }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> DoubleAffineLabel {
        self.source
    }

    pub fn target(&self) -> DoubleAffineLabel {
        self.target
    }

    /// True for anti-homomorphisms.
    pub fn is_anti(&self) -> bool {
        self.anti
    }

    pub fn images(&self) -> &BTreeMap<NodeLabel, Word> {
        &self.images
    }

    /// Image of a generator (generators without an entry are fixed).
    pub fn image(&self, node: NodeLabel) -> Word {
        self.images.get(&node).cloned().unwrap_or_else(|| Word::gen(node))
    }

    /// Image of a word.
    pub fn apply(&self, word: &Word) -> Word {
        let word = if self.anti { word.reversed() } else { word.clone() };
        word.substitute(|node| self.image(node))
    }
}

impl fmt::Display for EndoMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} → {}{})", self.name, self.source, self.target, if self.anti { ", anti" } else { "" })?;
        for (node, word) in &self.images {
            if *word != Word::gen(*node) {
                write!(f, "; {node} ↦ {word}")?;
            }
        }
        Ok(())
    }
}

/// Word-level composition `outer ∘ inner`.
pub fn compose(outer: &EndoMap, inner: &EndoMap) -> Result<EndoMap> {
    if inner.target != outer.source {
        return Err(Error::LevelMismatch(format!(
            "cannot compose {} after {}: {} ≠ {}",
            outer.name, inner.name, outer.source, inner.target
        )));
    }
    let images = inner.images.iter().map(|(g, w)| (*g, outer.apply(w))).collect();
    Ok(EndoMap {
        name: format!("{}{}", outer.name, inner.name),
        source: inner.source,
        target: outer.target,
        images,
        anti: outer.anti ^ inner.anti,
    })
}

fn g(node: NodeLabel) -> Word {
    Word::gen(node)
}

fn conj(by: &Word, x: &Word) -> Word {
    Word::product([by, x, &by.inverse()])
}

/// Which of the four basic homomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicMap {
    A,
    B,
    AInv,
    BInv,
}

impl BasicMap {
    fn name(self) -> &'static str {
        match self {
            BasicMap::A => "a",
            BasicMap::B => "b",
            BasicMap::AInv => "a'",
            BasicMap::BInv => "b'",
        }
    }
}

/// One of `𝔞`, `𝔟`, `𝔞⁻¹`, `𝔟⁻¹` on a presentation.  The starred families
/// use the formulas of the unstarred triple families.
pub fn basic_map(p: &Presentation, which: BasicMap) -> EndoMap {
    use NodeLabel::*;
    let mut map = EndoMap::identity(p);
    map.name = which.name().into();
    let m = p.macros();
    let images = &mut map.images;
    if p.label().family().is_triple() {
        let (t1, t2, t3) = (g(Theta01), g(Theta02), g(Theta03));
        match which {
            BasicMap::A => {
                images.insert(Theta01, t2.clone());
                images.insert(Theta02, conj(&t2.inverse(), &t1));
            }
            BasicMap::B => {
                images.insert(Theta02, t3.clone());
                images.insert(Theta03, conj(&t3.inverse(), &t2));
            }
            BasicMap::AInv => {
                images.insert(Theta02, t1.clone());
                images.insert(Theta01, conj(&t1, &t2));
            }
            BasicMap::BInv => {
                images.insert(Theta03, t2.clone());
                images.insert(Theta02, conj(&t2, &t3));
            }
        }
    } else {
        let (t0, p0) = (g(Theta0), g(Phi0));
        let phi0_phi = p0.concat(&m.phi);
        let theta_theta0 = m.theta.concat(&t0);
        match which {
            BasicMap::A => {
                images.insert(Theta0, conj(&phi0_phi, &t0));
            }
            BasicMap::B => {
                images.insert(Phi0, conj(&theta_theta0, &p0));
            }
            BasicMap::AInv => {
                images.insert(Theta0, conj(&phi0_phi.inverse(), &t0));
            }
            BasicMap::BInv => {
                images.insert(Phi0, conj(&theta_theta0.inverse(), &p0));
            }
        }
    }
    map
}

/// The label whose presentation receives `𝔢`: `̈B_n ↔ ̈C_n`, all others are
/// self-dual.
pub fn e_partner(label: DoubleAffineLabel) -> DoubleAffineLabel {
    let swapped = match label.family() {
        Family::DdotB => Some(Family::DdotC),
        Family::DdotC => Some(Family::DdotB),
        _ => None,
    };
    swapped.and_then(|f| DoubleAffineLabel::new(f, label.rank()).ok()).unwrap_or(label)
}

/// The anti-involution `𝔢` from `source` to `target`.  For the triple
/// families it exchanges `Θ₀₁` and `Θ₀₃`; for the doubly-laced families it is
/// the unique diagram isomorphism exchanging the two affine nodes.
pub fn e_map(source: &Presentation, target: &Presentation) -> Result<EndoMap> {
    use NodeLabel::*;
    let mut map = EndoMap::identity(source);
    map.name = "e".into();
    map.target = target.label();
    map.anti = true;
    if source.label().family().is_triple() {
        if source.label() != target.label() {
            return Err(Error::Undefined(format!("e between {} and {}", source.label(), target.label())));
        }
        map.images.insert(Theta01, g(Theta03));
        map.images.insert(Theta03, g(Theta01));
        return Ok(map);
    }
    let sigma = affine_swapping_isomorphism(source, target)?;
    for (from, to) in sigma {
        map.images.insert(from, g(to));
    }
    Ok(map)
}

/// Backtracking search for the multiplicity-preserving bijections between
/// two diagrams that send `Θ₀ ↦ Φ₀`, `Φ₀ ↦ Θ₀` and finite nodes to finite
/// nodes; exactly one is expected.
fn affine_swapping_isomorphism(source: &Presentation, target: &Presentation) -> Result<BTreeMap<NodeLabel, NodeLabel>> {
    use NodeLabel::*;
    let (sd, td) = (source.diagram(), target.diagram());
    if sd.len() != td.len() {
        return Err(Error::DimensionMismatch { expected: sd.len(), found: td.len() });
    }
    let idx = |d: &crate::diagrams::CoxeterDiagram, l: NodeLabel| d.index_of(l).ok_or(Error::UnknownSymbol(l.to_string()));
    let n = sd.len();
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    assignment[idx(sd, Theta0)?] = Some(idx(td, Phi0)?);
    assignment[idx(sd, Phi0)?] = Some(idx(td, Theta0)?);
    for a in assignment.iter().flatten() {
        used[*a] = true;
    }
    let finite: Vec<usize> = (0..n).filter(|&i| assignment[i].is_none()).collect();

    fn consistent(sd: &crate::diagrams::CoxeterDiagram, td: &crate::diagrams::CoxeterDiagram, a: &[Option<usize>], i: usize) -> bool {
        let Some(ti) = a[i] else { return true };
        a.iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .all(|(j, tj)| tj.map_or(true, |tj| sd.mult(i, j) == td.mult(ti, tj)))
    }

    fn search(
        sd: &crate::diagrams::CoxeterDiagram,
        td: &crate::diagrams::CoxeterDiagram,
        finite: &[usize],
        pos: usize,
        a: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        found: &mut Vec<Vec<usize>>,
    ) {
        if found.len() > 1 {
            return;
        }
        if pos == finite.len() {
            found.push(a.iter().map(|x| x.expect("complete")).collect());
            return;
        }
        let i = finite[pos];
        for t in 0..a.len() {
            if used[t] || td.nodes()[t].kind != sd.nodes()[i].kind {
                continue;
            }
            a[i] = Some(t);
            used[t] = true;
            if consistent(sd, td, a, i) {
                search(sd, td, finite, pos + 1, a, used, found);
            }
            a[i] = None;
            used[t] = false;
        }
    }

    let fixed: Vec<usize> = (0..n).filter(|&i| assignment[i].is_some()).collect();
    if !fixed.iter().all(|&i| consistent(sd, td, &assignment, i)) {
        return Err(Error::Undefined(format!("no affine-swapping isomorphism {} → {}", source.label(), target.label())));
    }
    let mut found = Vec::new();
    search(sd, td, &finite, 0, &mut assignment, &mut used, &mut found);
    match found.len() {
        1 => Ok((0..n).map(|i| (sd.nodes()[i].label, td.nodes()[found[0][i]].label)).collect()),
        0 => Err(Error::Undefined(format!("no affine-swapping isomorphism {} → {}", source.label(), target.label()))),
        _ => Err(Error::Undefined(format!("affine-swapping isomorphism {} → {} is not unique", source.label(), target.label()))),
    }
}

/// An evaluated chain: the images of the source generators in the double
/// affine Weyl group of the outermost target, plus the parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub source: DoubleAffineLabel,
    pub values: BTreeMap<NodeLabel, DaweylElement>,
    pub anti: bool,
}

impl Evaluation {
    /// The images of a word under the evaluated map.
    pub fn eval_word(&self, dw: &DoubleAffineWeyl, word: &Word) -> Result<DaweylElement> {
        let mut acc = dw.identity();
        for letter in word.letters() {
            let value = self
                .values
                .get(&letter.node)
                .ok_or_else(|| Error::UnknownSymbol(letter.node.to_string()))?;
            let value = if letter.inverse { dw.inv(value) } else { value.clone() };
            acc = if self.anti { dw.mul(&value, &acc) } else { dw.mul(&acc, &value) };
        }
        Ok(acc)
    }
}

/// The identity evaluation `φ` of a presentation.
pub fn phi_evaluation(p: &Presentation, dict: &GeneratorDictionary) -> Evaluation {
    Evaluation { source: p.label(), values: dict.images().clone(), anti: false }
}

/// Evaluates `φ ∘ m₁ ∘ … ∘ m_k` (maps listed outermost first) generator-wise,
/// where `φ` is the dictionary of the outermost target.
pub fn evaluate_chain(chain: &[&EndoMap], dict: &GeneratorDictionary) -> Result<Evaluation> {
    let dw = dict.group();
    let mut current = Evaluation { source: DoubleAffineLabel::new(Family::DddotA, 1)?, values: dict.images().clone(), anti: false };
    let mut expected_source: Option<DoubleAffineLabel> = None;
    for map in chain {
        if let Some(src) = expected_source {
            if map.target != src {
                return Err(Error::LevelMismatch(format!("chain break: {} lands in {} but {} was expected", map.name, map.target, src)));
            }
        }
        let mut values = BTreeMap::new();
        for (node, word) in &map.images {
            values.insert(*node, current.eval_word(dw, word)?);
        }
        current = Evaluation { source: map.source, values, anti: current.anti ^ map.anti };
        expected_source = Some(map.source);
    }
    if chain.is_empty() {
        return Err(Error::Undefined("empty chain".into()));
    }
    Ok(current)
}

/// Everything needed to act on the presentation of one label.
#[derive(Debug, Clone)]
pub struct Setting {
    pub presentation: Presentation,
    pub dict: GeneratorDictionary,
    pub a: EndoMap,
    pub b: EndoMap,
    pub a_inv: EndoMap,
    pub b_inv: EndoMap,
}

impl Setting {
    fn new(presentation: Presentation) -> Result<Self> {
        let dict = phi_dictionary(&presentation)?;
        Ok(Setting {
            a: basic_map(&presentation, BasicMap::A),
            b: basic_map(&presentation, BasicMap::B),
            a_inv: basic_map(&presentation, BasicMap::AInv),
            b_inv: basic_map(&presentation, BasicMap::BInv),
            presentation,
            dict,
        })
    }

    pub fn basic(&self, which: BasicMap) -> &EndoMap {
        match which {
            BasicMap::A => &self.a,
            BasicMap::B => &self.b,
            BasicMap::AInv => &self.a_inv,
            BasicMap::BInv => &self.b_inv,
        }
    }

    /// The maps of a braid word, outermost first.
    pub fn braid_chain(&self, word: &BraidWord) -> Vec<&EndoMap> {
        word.letters()
            .iter()
            .map(|l| match (l.gen, l.inverse) {
                (TwoGen::First, false) => &self.a,
                (TwoGen::First, true) => &self.a_inv,
                (TwoGen::Second, false) => &self.b,
                (TwoGen::Second, true) => &self.b_inv,
            })
            .collect()
    }

    /// Whether an evaluation agrees with `φ` generator-wise.
    pub fn is_identity(&self, ev: &Evaluation) -> bool {
        !ev.anti && ev.source == self.presentation.label() && &ev.values == self.dict.images()
    }

    /// The longest element of the finite Weyl group, inside the double
    /// affine Weyl group.
    pub fn longest(&self) -> DaweylElement {
        let dw = self.dict.group();
        dw.weyl(&weyl::longest_element(dw.root_system().finite()))
    }
}

/// A label together with its `𝔢`-partner.
#[derive(Debug, Clone)]
pub struct AutoContext {
    label: DoubleAffineLabel,
    primary: Setting,
    partner: Option<Setting>,
    e_forward: EndoMap,
    e_backward: EndoMap,
}

impl AutoContext {
    /// Builds the context; starred labels use the central-`C` presentation.
    pub fn new(label: DoubleAffineLabel) -> Result<Self> {
        Self::with_variant(label, StarVariant::Central)
    }

    /// Builds the context with a chosen variant (only relevant for starred labels).
    pub fn with_variant(label: DoubleAffineLabel, variant: StarVariant) -> Result<Self> {
        let primary = Setting::new(Presentation::build_variant(label, variant)?)?;
        let partner_label = e_partner(label);
        let partner = if partner_label != label {
            Some(Setting::new(Presentation::build_variant(partner_label, variant)?)?)
        } else {
            None
        };
        let other = partner.as_ref().unwrap_or(&primary);
        let e_forward = e_map(&primary.presentation, &other.presentation)?;
        let e_backward = e_map(&other.presentation, &primary.presentation)?;
        Ok(AutoContext { label, primary, partner, e_forward, e_backward })
    }

    pub fn label(&self) -> DoubleAffineLabel {
        self.label
    }

    pub fn level(&self) -> u32 {
        self.label.level()
    }

    pub fn primary(&self) -> &Setting {
        &self.primary
    }

    /// The setting of the `𝔢`-partner (the primary one when self-dual).
    pub fn partner(&self) -> &Setting {
        self.partner.as_ref().unwrap_or(&self.primary)
    }

    /// `𝔢` from the label to its partner.
    pub fn e(&self) -> &EndoMap {
        &self.e_forward
    }

    /// `𝔢` from the partner back to the label.
    pub fn e_back(&self) -> &EndoMap {
        &self.e_backward
    }

    /// Evaluates a chain whose outermost target is the label itself.
    pub fn evaluate(&self, chain: &[&EndoMap]) -> Result<Evaluation> {
        let dict = match chain.first() {
            Some(m) if m.target() != self.label => &self.partner().dict,
            _ => &self.primary.dict,
        };
        evaluate_chain(chain, dict)
    }

    /// The chain `𝔢 ∘ γ ∘ 𝔢 ∘ γ` of a braid word, routed through the
    /// partner presentation when `𝔢` changes the label.
    pub fn involution_chain(&self, word: &BraidWord) -> Vec<&EndoMap> {
        let mut chain = vec![self.e_back()];
        chain.extend(self.partner().braid_chain(word));
        chain.push(self.e());
        chain.extend(self.primary.braid_chain(word));
        chain
    }
}

/// Checks that a chain respects every defining relation of the innermost
/// source presentation.
pub fn preserves_relations(ctx: &AutoContext, chain: &[&EndoMap], source: &Presentation) -> Result<Report> {
    let ev = ctx.evaluate(chain)?;
    let dict = if chain.first().map(|m| m.target()) == Some(ctx.label()) { &ctx.primary.dict } else { &ctx.partner().dict };
    let dw = dict.group();
    let name: String = chain.iter().map(|m| m.name()).collect::<Vec<_>>().join("·");
    let mut report = Report::new("automorphism", format!("{} {}", source.label(), name));
    for rel in source.relations() {
        let lhs = ev.eval_word(dw, &rel.lhs)?;
        let rhs = ev.eval_word(dw, &rel.rhs)?;
        report.check(rel.name.clone(), lhs == rhs, || format!("lhs = {} ; rhs = {}", dw.format(&lhs), dw.format(&rhs)));
    }
    Ok(report)
}

/// Whether a single map sends every relation to a relation.
pub fn is_automorphism(ctx: &AutoContext, map: &EndoMap) -> Result<Report> {
    let source = if map.source() == ctx.label() { &ctx.primary.presentation } else { &ctx.partner().presentation };
    preserves_relations(ctx, &[map], source)
}

/// The word-level endomorphism of a braid word on a label.
pub fn evaluate_braid(word: &BraidWord, label: DoubleAffineLabel) -> Result<EndoMap> {
    if word.level() != label.level() {
        return Err(Error::LevelMismatch(format!("braid word of level {} on {} (level {})", word.level(), label, label.level())));
    }
    let setting = Setting::new(Presentation::build(label)?)?;
    let mut out = EndoMap::identity(&setting.presentation);
    for map in setting.braid_chain(word).into_iter().rev() {
        out = compose(map, &out)?;
    }
    out.name = word.to_string();
    Ok(out)
}

fn braid(text: &str, level: u32) -> BraidWord {
    BraidWord::parse(text, level).expect("valid braid word")
}

fn level_braid_identity(level: u32) -> (BraidWord, BraidWord) {
    match level {
        1 => (braid("a b a", 1), braid("b a b", 1)),
        2 => (braid("a b a b", 2), braid("b a b a", 2)),
        _ => (braid("a b a b a b", 3), braid("b a b a b a", 3)),
    }
}

fn eval_braid(ctx: &AutoContext, word: &BraidWord) -> Result<Evaluation> {
    ctx.evaluate(&ctx.primary.braid_chain(word))
}

/// The automorphism suite of one label: each basic map preserves the
/// relations (for the starred families: the maps generating the acting
/// subgroup), `𝔞⁻¹ = 𝔢𝔟𝔢`, `𝔟⁻¹ = 𝔢𝔞𝔢`, the level-`r` braid identity,
/// round trips with the explicit inverses, and the central element action.
pub fn automorphism_suite(label: DoubleAffineLabel) -> Result<Report> {
    let mut report = Report::new("auto", label.to_string());
    if label.family().is_starred() {
        for (variant, prefix) in [(StarVariant::Central, "central/"), (StarVariant::Plain, "plain/")] {
            let ctx = AutoContext::with_variant(label, variant)?;
            report.absorb(prefix, suite_for(&ctx)?);
        }
        report.absorb("", cstar_restriction_check(label.rank())?);
    } else {
        report.absorb("", suite_for(&AutoContext::new(label)?)?);
    }
    Ok(report)
}

fn suite_for(ctx: &AutoContext) -> Result<Report> {
    let mut report = Report::new("auto", ctx.label().to_string());
    let primary = ctx.primary();
    let starred = ctx.label().family().is_starred();
    if !starred {
        for which in [BasicMap::A, BasicMap::B, BasicMap::AInv, BasicMap::BInv] {
            let r = is_automorphism(ctx, primary.basic(which))?;
            report.check(format!("{} preserves relations", which.name()), r.all_pass(), || failure_list(&r));
        }
    }
    let r = is_automorphism(ctx, ctx.e())?;
    report.check("e preserves relations", r.all_pass(), || failure_list(&r));
    let e_twice = ctx.evaluate(&[ctx.e_back(), ctx.e()])?;
    report.check("e² = id", primary.is_identity(&e_twice), || "e² differs from id".into());

    for (which, inv) in [(BasicMap::A, BasicMap::AInv), (BasicMap::B, BasicMap::BInv)] {
        let ev = ctx.evaluate(&[primary.basic(which), primary.basic(inv)])?;
        report.check(format!("{0}·{0}' = id", which.name()), primary.is_identity(&ev), || "not the identity".into());
        let ev = ctx.evaluate(&[primary.basic(inv), primary.basic(which)])?;
        report.check(format!("{0}'·{0} = id", which.name()), primary.is_identity(&ev), || "not the identity".into());
    }

    let partner = ctx.partner();
    for (lhs, rhs, name) in [
        (&primary.a_inv, &partner.b, "a' = e b e"),
        (&primary.b_inv, &partner.a, "b' = e a e"),
    ] {
        let left = ctx.evaluate(&[lhs])?;
        let right = ctx.evaluate(&[ctx.e_back(), rhs, ctx.e()])?;
        report.check(name, left == right, || "generator images differ".into());
    }

    let (u, v) = level_braid_identity(ctx.level());
    let (left, right) = (eval_braid(ctx, &u)?, eval_braid(ctx, &v)?);
    report.check(format!("{u} = {v}"), left == right, || "generator images differ".into());

    report.absorb("", central_element_action_in(ctx)?);
    Ok(report)
}

fn failure_list(r: &Report) -> String {
    r.failures().iter().map(|c| c.id.clone()).collect::<Vec<_>>().join(", ")
}

/// The action of the central braid word `𝔠`: conjugation by `w∘` on the
/// affine generators at level 1 (on all generators exactly when `w∘ = −id`),
/// conjugation by `w∘` on all generators at level 2, and the identity at
/// level 3.
pub fn central_element_action(label: DoubleAffineLabel) -> Result<Report> {
    central_element_action_in(&AutoContext::new(label)?)
}

fn central_element_action_in(ctx: &AutoContext) -> Result<Report> {
    let mut report = Report::new("central action", ctx.label().to_string());
    let primary = ctx.primary();
    let dw = primary.dict.group();
    let w0 = primary.longest();
    let central = congruence::central_braid_word(ctx.level())?;
    let ev = eval_braid(ctx, &central)?;
    let conj_w0 = |x: &DaweylElement| dw.conjugate(&w0, x);
    let expected = |node: NodeLabel| -> DaweylElement {
        let phi = primary.dict.image(node).expect("generator").clone();
        if ctx.level() == 3 { phi } else { conj_w0(&phi) }
    };
    let affine = primary.presentation.affine_generators();
    let on_affine = affine.iter().all(|n| ev.values[n] == expected(*n));
    let on_all = primary.presentation.generators().iter().all(|n| ev.values[n] == expected(*n));
    let what = if ctx.level() == 3 { "the identity" } else { "w0-conjugation" };
    report.check(format!("{central} acts as {what} on the affine generators"), on_affine && !ev.anti, || {
        affine
            .iter()
            .filter(|n| ev.values[*n] != expected(**n))
            .map(|n| format!("{n} ↦ {}", dw.format(&ev.values[n])))
            .collect::<Vec<_>>()
            .join("; ")
    });
    let minus_identity = weyl::longest_element(dw.root_system().finite()).is_minus_identity();
    if ctx.level() == 1 {
        report.check(
            format!("{central} acts on all generators iff w0 = −id"),
            on_all == minus_identity,
            || format!("all generators: {on_all}, w0 = −id: {minus_identity}"),
        );
        report.note("w0 = −id", true, format!("{minus_identity} for finite type of {}", ctx.label()));
    } else {
        report.check(format!("{central} acts as {what} on all generators"), on_all, || "finite generators differ".into());
    }
    Ok(report)
}

/// For the starred families the acting group is generated by `𝔟𝔞𝔟⁻¹` and
/// `𝔟²`; both preserve the relations of either version of the presentation.
/// `𝔞` alone is recorded per version: it fails in the plain version.
pub fn cstar_restriction_check(n: usize) -> Result<Report> {
    let label = DoubleAffineLabel::new(Family::DddotCStar, n)?;
    let mut report = Report::new("starred restriction", label.to_string());
    for (variant, prefix) in [(StarVariant::Central, "central/"), (StarVariant::Plain, "plain/")] {
        let ctx = AutoContext::with_variant(label, variant)?;
        let s = ctx.primary();
        let source = &s.presentation;
        for (chain, name) in [
            (vec![&s.b, &s.a, &s.b_inv], "b a b'"),
            (vec![&s.b_inv, &s.a_inv, &s.b], "b a' b'"),
            (vec![&s.b, &s.b], "b b"),
            (vec![&s.b_inv, &s.b_inv], "b' b'"),
        ] {
            let r = preserves_relations(&ctx, &chain, source)?;
            report.check(format!("{prefix}{name} preserves relations"), r.all_pass(), || failure_list(&r));
        }
        let r = preserves_relations(&ctx, &[&s.a], source)?;
        match variant {
            StarVariant::Plain => report.check(format!("{prefix}a alone breaks a relation"), !r.all_pass(), || {
                "a unexpectedly preserves all relations".into()
            }),
            StarVariant::Central => report.note(
                format!("{prefix}a alone"),
                true,
                if r.all_pass() { "preserves all relations".to_string() } else { format!("breaks {}", failure_list(&r)) },
            ),
        }
    }
    Ok(report)
}

/// Outcome of the basic involution check for one matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionVerdict {
    /// The braid lift used.
    pub lift: BraidWord,
    /// Whether the matrix lies in the relevant `Υ` group.
    pub in_upsilon: bool,
    /// Whether `𝔢γ̃𝔢γ̃` acts as the identity.
    pub involution: bool,
}

/// Decomposes a matrix of the acting congruence group, lifts it to the braid
/// group and decides whether `𝔢 γ̃ 𝔢 γ̃ = id` on the presentation.
pub fn basic_involution_check(ctx: &AutoContext, matrix: &Mat2) -> Result<InvolutionVerdict> {
    let (level, group, upsilon) = if ctx.label().family().is_starred() {
        (1, CongruenceGroup::Gamma1Prime2, CongruenceGroup::Upsilon1Prime2)
    } else {
        let r = ctx.level();
        (r, CongruenceGroup::Gamma1(r), CongruenceGroup::Upsilon1(r))
    };
    if !congruence::member(matrix, group)? {
        return Err(Error::NotInGroup { element: matrix.to_string(), group: group.to_string() });
    }
    let word = congruence::decompose(matrix, level)?;
    let lift = braid_lift(&word);
    let ev = ctx.evaluate(&ctx.involution_chain(&lift))?;
    Ok(InvolutionVerdict {
        in_upsilon: congruence::member(matrix, upsilon)?,
        involution: ctx.primary().is_identity(&ev),
        lift,
    })
}
