//! Exact 2×2 integer matrix groups: `Γ(N)`, `Γ₁(r)`, `Γ₁(2)′`, `Υ₁(r)`
//! and the extensions `Ξ₁(r)` by the element `e(r)`, together with coset
//! enumeration, word decomposition over `u₁₂`, `u₂₁^r` and the lift of such
//! words to the rank two braid groups.
//!
//! The element `e(r)` has irrational entries for `r = 2, 3`; it is never
//! materialised.  Only its conjugation action
//! `e(r)·[[a,b],[c,d]]·e(r) = [[d, c/r],[r·b, a]]` is used, which keeps
//! everything over the integers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::Report;

/// A 2×2 matrix `[[a, b], [c, d]]` with arbitrary-precision integer entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Mat2 { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn minus_identity() -> Self {
        Mat2::new(-1, 0, 0, -1)
    }

    /// `u₁₂ = [[1, -1], [0, 1]]`.
    pub fn u12() -> Self {
        Mat2::new(1, -1, 0, 1)
    }

    /// `u₂₁ = [[1, 0], [1, 1]]`.
    pub fn u21() -> Self {
        Mat2::new(1, 0, 1, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity()
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse(&self) -> Result<Mat2> {
        self.require_det_one()?;
        Ok(Mat2 { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() })
    }

    /// Integer power of a determinant-one matrix (square-and-multiply).
    pub fn pow(&self, e: i64) -> Result<Mat2> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Mat2::identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Largest absolute value of an entry.
    pub fn max_abs_entry(&self) -> BigInt {
        [&self.a, &self.b, &self.c, &self.d].into_iter().map(|x| x.abs()).max().expect("four entries")
    }

    fn require_det_one(&self) -> Result<()> {
        if self.det().is_one() {
            Ok(())
        } else {
            Err(Error::DeterminantNotOne(self.to_string()))
        }
    }

    /// `e(r)·A·e(r) = [[d, c/r], [r·b, a]]`; defined when `r | c`.
    pub fn e_conjugate(&self, r: u32) -> Result<Mat2> {
        let rb = BigInt::from(r);
        if !self.c.is_multiple_of(&rb) {
            return Err(Error::NotInGroup { element: self.to_string(), group: format!("the domain of e({r})-conjugation") });
        }
        Ok(Mat2 { a: self.d.clone(), b: &self.c / &rb, c: &rb * &self.b, d: self.a.clone() })
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    /// Parses `"a,b;c,d"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a matrix of the form `a,b;c,d`, found `{s}`"));
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            return Err(bad());
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 2 {
                return Err(bad());
            }
            for c in cols {
                entries.push(c.trim().parse::<BigInt>().map_err(|_| bad())?);
            }
        }
        let mut it = entries.into_iter();
        let mut next = || it.next().expect("four entries");
        Ok(Mat2 { a: next(), b: next(), c: next(), d: next() })
    }
}

impl Serialize for Mat2 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = [[self.a.to_string(), self.b.to_string()], [self.c.to_string(), self.d.to_string()]];
        rows.serialize(serializer)
    }
}

/// The matrix groups handled by [`member`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CongruenceGroup {
    /// Principal congruence subgroup of level `N`.
    Gamma(u32),
    /// `Γ₁(r)`: `[[1, *], [0, 1]]` modulo `r` (all of `SL(2, Z)` for `r = 1`).
    Gamma1(u32),
    /// `Γ₁(2)′`: `a + d ≡ b + c ≡ 0` modulo 2.
    Gamma1Prime2,
    /// `Υ₁(r)`: elements `[[a, b], [-r·b, d]]` of `Γ₁(r)`.
    Upsilon1(u32),
    /// `Υ₁(2)′ = Υ₁(1) ∩ Γ₁(2)′`.
    Upsilon1Prime2,
}

impl fmt::Display for CongruenceGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CongruenceGroup::Gamma(n) => write!(f, "Gamma({n})"),
            CongruenceGroup::Gamma1(r) => write!(f, "Gamma1({r})"),
            CongruenceGroup::Gamma1Prime2 => f.write_str("Gamma1(2)'"),
            CongruenceGroup::Upsilon1(r) => write!(f, "Upsilon1({r})"),
            CongruenceGroup::Upsilon1Prime2 => f.write_str("Upsilon1(2)'"),
        }
    }
}

fn congruent(x: &BigInt, y: i64, modulus: u32) -> bool {
    (x - BigInt::from(y)).is_multiple_of(&BigInt::from(modulus))
}

/// Membership test by residue arithmetic; fails when `det(A) ≠ 1`.
pub fn member(m: &Mat2, group: CongruenceGroup) -> Result<bool> {
    m.require_det_one()?;
    Ok(match group {
        CongruenceGroup::Gamma(n) => {
            congruent(&m.a, 1, n) && congruent(&m.b, 0, n) && congruent(&m.c, 0, n) && congruent(&m.d, 1, n)
        }
        CongruenceGroup::Gamma1(r) => congruent(&m.a, 1, r) && congruent(&m.c, 0, r) && congruent(&m.d, 1, r),
        CongruenceGroup::Gamma1Prime2 => congruent(&(&m.a + &m.d), 0, 2) && congruent(&(&m.b + &m.c), 0, 2),
        CongruenceGroup::Upsilon1(r) => {
            member(m, CongruenceGroup::Gamma1(r))? && m.c == -(BigInt::from(r) * &m.b)
        }
        CongruenceGroup::Upsilon1Prime2 => {
            member(m, CongruenceGroup::Upsilon1(1))? && member(m, CongruenceGroup::Gamma1Prime2)?
        }
    })
}

/// Checks `e(r)·A·e(r) = A⁻¹`, the defining property of `Υ₁(r)` inside `Γ₁(r)`.
pub fn is_e_inverted(m: &Mat2, r: u32) -> Result<bool> {
    Ok(m.e_conjugate(r)? == m.inverse()?)
}

/// An element `e(r)^flip · m` of `Ξ₁(r)`, with `m ∈ Γ₁(r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XiElement {
    pub m: Mat2,
    pub flip: bool,
    level: u32,
}

impl XiElement {
    pub fn new(m: Mat2, flip: bool, level: u32) -> Result<Self> {
        if !member(&m, CongruenceGroup::Gamma1(level))? {
            return Err(Error::NotInGroup { element: m.to_string(), group: CongruenceGroup::Gamma1(level).to_string() });
        }
        Ok(XiElement { m, flip, level })
    }

    pub fn identity(level: u32) -> Self {
        XiElement { m: Mat2::identity(), flip: false, level }
    }

    /// The element `e(r)` itself.
    pub fn e(level: u32) -> Self {
        XiElement { m: Mat2::identity(), flip: true, level }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    fn conj_if(m: &Mat2, flip: bool, level: u32) -> Mat2 {
        if flip {
            m.e_conjugate(level).expect("Γ₁(r) is stable under e(r)-conjugation")
        } else {
            m.clone()
        }
    }

    /// `(e^f₁ m₁)(e^f₂ m₂) = e^{f₁+f₂} (e^f₂ m₁ e^f₂) m₂`.
    pub fn mul(&self, o: &XiElement) -> Result<XiElement> {
        if self.level != o.level {
            return Err(Error::LevelMismatch(format!("Xi1({}) times Xi1({})", self.level, o.level)));
        }
        let m = Self::conj_if(&self.m, o.flip, self.level).mul(&o.m);
        Ok(XiElement { m, flip: self.flip ^ o.flip, level: self.level })
    }

    /// `(e^f m)⁻¹ = e^f (e^f m⁻¹ e^f)`.
    pub fn inverse(&self) -> XiElement {
        let inv = self.m.inverse().expect("determinant one");
        XiElement { m: Self::conj_if(&inv, self.flip, self.level), flip: self.flip, level: self.level }
    }

    pub fn is_identity(&self) -> bool {
        !self.flip && self.m.is_identity()
    }
}

/// The two generators of the words handled here: `First` is `u₁₂` / `𝔞`,
/// `Second` is `u₂₁^r` / `𝔟` at level `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TwoGen {
    First,
    Second,
}

/// A letter of a two-generator word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TwoLetter {
    pub gen: TwoGen,
    pub inverse: bool,
}

impl TwoLetter {
    pub fn new(gen: TwoGen, inverse: bool) -> Self {
        TwoLetter { gen, inverse }
    }

    fn inv(self) -> Self {
        TwoLetter { gen: self.gen, inverse: !self.inverse }
    }
}

/// A freely reduced word in two generators, tagged with its level.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct TwoWord {
    level: u32,
    letters: Vec<TwoLetter>,
}

impl TwoWord {
    fn new(level: u32, letters: impl IntoIterator<Item = TwoLetter>) -> Self {
        let mut out: Vec<TwoLetter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        TwoWord { level, letters: out }
    }

    fn power(level: u32, gen: TwoGen, e: i64) -> Self {
        TwoWord::new(level, (0..e.unsigned_abs()).map(|_| TwoLetter::new(gen, e < 0)))
    }

    fn concat(&self, o: &TwoWord) -> TwoWord {
        TwoWord::new(self.level, self.letters.iter().chain(o.letters.iter()).copied())
    }

    fn inverse(&self) -> TwoWord {
        TwoWord { level: self.level, letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    fn render(&self, first: &str, second: &str) -> String {
        if self.letters.is_empty() {
            return String::new();
        }
        self.letters
            .iter()
            .map(|l| format!("{}{}", if l.gen == TwoGen::First { first } else { second }, if l.inverse { "'" } else { "" }))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn parse(text: &str, level: u32, first: &str, second: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (body, inverse) = match token.strip_suffix('\'') {
                Some(b) => (b, true),
                None => (token, false),
            };
            let gen = if body == first {
                TwoGen::First
            } else if body == second {
                TwoGen::Second
            } else {
                return Err(Error::Parse(format!("unknown letter `{token}` (expected {first}, {second} with optional '))")));
            };
            letters.push(TwoLetter::new(gen, inverse));
        }
        Ok(TwoWord::new(level, letters))
    }
}

fn check_level(level: u32) -> Result<()> {
    if (1..=3).contains(&level) {
        Ok(())
    } else {
        Err(Error::LevelMismatch(format!("level {level} is not one of 1, 2, 3")))
    }
}

/// A word in `u₁₂^{±1}` (written `A`) and `u₂₁^{±r}` (written `B`) at level `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UWord(TwoWord);

impl UWord {
    pub fn empty(level: u32) -> Self {
        UWord(TwoWord::new(level, []))
    }

    pub fn from_letters(level: u32, letters: impl IntoIterator<Item = TwoLetter>) -> Self {
        UWord(TwoWord::new(level, letters))
    }

    pub fn level(&self) -> u32 {
        self.0.level
    }

    pub fn letters(&self) -> &[TwoLetter] {
        &self.0.letters
    }

    pub fn len(&self) -> usize {
        self.0.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.letters.is_empty()
    }

    pub fn concat(&self, o: &UWord) -> UWord {
        UWord(self.0.concat(&o.0))
    }

    pub fn inverse(&self) -> UWord {
        UWord(self.0.inverse())
    }

    /// Parses `"A B A' B'"` at the given level.
    pub fn parse(text: &str, level: u32) -> Result<Self> {
        check_level(level)?;
        Ok(UWord(TwoWord::parse(text, level, "A", "B")?))
    }

    /// The matrix `π(word)`.
    pub fn evaluate(&self) -> Mat2 {
        let a = Mat2::u12();
        let a_inv = a.inverse().expect("unimodular");
        let b = Mat2::u21().pow(i64::from(self.level())).expect("unimodular");
        let b_inv = b.inverse().expect("unimodular");
        self.letters().iter().fold(Mat2::identity(), |acc, l| {
            acc.mul(match (l.gen, l.inverse) {
                (TwoGen::First, false) => &a,
                (TwoGen::First, true) => &a_inv,
                (TwoGen::Second, false) => &b,
                (TwoGen::Second, true) => &b_inv,
            })
        })
    }

    /// The word written with the matrix names, e.g. `u12 u21^2` at level 2.
    pub fn matrix_notation(&self) -> String {
        let second = if self.level() == 1 { "u21".to_string() } else { format!("u21^{}", self.level()) };
        let text = self.0.render("u12", &second).replace('\'', "^-1");
        if text.is_empty() {
            "I2".into()
        } else {
            text
        }
    }
}

impl fmt::Display for UWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render("A", "B"))
    }
}

/// A word in `𝔞^{±1}` (written `a`) and `𝔟^{±1}` (written `b`) in the braid
/// group `Γ̃(r)`, where `𝔟` stands for the generator `𝔲₂^r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord(TwoWord);

impl BraidWord {
    pub fn empty(level: u32) -> Self {
        BraidWord(TwoWord::new(level, []))
    }

    pub fn from_letters(level: u32, letters: impl IntoIterator<Item = TwoLetter>) -> Self {
        BraidWord(TwoWord::new(level, letters))
    }

    pub fn level(&self) -> u32 {
        self.0.level
    }

    pub fn letters(&self) -> &[TwoLetter] {
        &self.0.letters
    }

    pub fn len(&self) -> usize {
        self.0.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.letters.is_empty()
    }

    pub fn concat(&self, o: &BraidWord) -> BraidWord {
        BraidWord(self.0.concat(&o.0))
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord(self.0.inverse())
    }

    pub fn pow(&self, e: i64) -> BraidWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(BraidWord::empty(self.level()), |acc, _| acc.concat(&base))
    }

    /// Parses `"a b a' b'"` at the given level.
    pub fn parse(text: &str, level: u32) -> Result<Self> {
        check_level(level)?;
        Ok(BraidWord(TwoWord::parse(text, level, "a", "b")?))
    }

    /// The projection `π` to `Γ₁(r)`: `𝔞 ↦ u₁₂`, `𝔟 ↦ u₂₁^r`.
    pub fn project(&self) -> Mat2 {
        UWord(self.0.clone()).evaluate()
    }

    /// Sum of exponents of each generator.
    pub fn exponent_sums(&self) -> (i64, i64) {
        self.letters().iter().fold((0, 0), |(x, y), l| {
            let s = if l.inverse { -1 } else { 1 };
            match l.gen {
                TwoGen::First => (x + s, y),
                TwoGen::Second => (x, y + s),
            }
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render("a", "b"))
    }
}

/// The lift of a `u`-word: `u₁₂ ↦ 𝔞`, `u₂₁^r ↦ 𝔟`, letter by letter.
pub fn braid_lift(word: &UWord) -> BraidWord {
    BraidWord(word.0.clone())
}

/// The generator of the centre of `Γ̃(r)` written in `𝔞`, `𝔟`:
/// `(𝔞𝔟)³` for `r = 1`, `(𝔞𝔟)²` for `r = 2` and `(𝔞𝔟)³` for `r = 3`.
pub fn central_braid_word(level: u32) -> Result<BraidWord> {
    check_level(level)?;
    let ab = BraidWord::parse("a b", level)?;
    Ok(ab.pow(if level == 2 { 2 } else { 3 }))
}

/// Word for `-I₂` at levels 1 and 2 (`-I₂ ∉ Γ₁(3)`).
fn minus_identity_word(level: u32) -> Result<TwoWord> {
    match level {
        1 | 2 => Ok(central_braid_word(level)?.0),
        _ => Err(Error::NotInGroup { element: Mat2::minus_identity().to_string(), group: "Gamma1(3)".into() }),
    }
}

/// Runs the six matrix identities relating `u₁₂`, `u₂₁` and `e(r)`.
pub fn identities_suite() -> Report {
    let mut rep = Report::new("congruence-identities", "SL(2,Z)");
    let u12 = Mat2::u12();
    let u21 = Mat2::u21();
    let pow = |m: &Mat2, e: i64| m.pow(e).expect("unimodular");
    let minus = Mat2::minus_identity();
    let s = Mat2::new(0, -1, 1, 0);
    let lhs = pow(&u12.mul(&u21), 3);
    rep.check("(u12 u21)^3 = -I2", lhs == minus, || lhs.to_string());
    let lhs = pow(&u12.mul(&pow(&u21, 2)), 2);
    rep.check("(u12 u21^2)^2 = -I2", lhs == minus, || lhs.to_string());
    let lhs = pow(&u12.mul(&pow(&u21, 3)), 3);
    rep.check("(u12 u21^3)^3 = I2", lhs.is_identity(), || lhs.to_string());
    let x = u12.mul(&u21).mul(&u12);
    let y = u21.mul(&u12).mul(&u21);
    rep.check("u12 u21 u12 = u21 u12 u21 = [[0,-1],[1,0]]", x == y && x == s, || format!("{x} vs {y}"));
    for r in 1..=3u32 {
        let conj = u12.e_conjugate(r).expect("c = 0");
        let expected = pow(&u21, -i64::from(r));
        rep.check(format!("e({r}) u12 e({r}) = u21^-{r}"), conj == expected, || conj.to_string());
        let e = XiElement::e(r);
        let sq = e.mul(&e).expect("same level");
        rep.check(format!("e({r})^2 = I2"), sq.is_identity(), || format!("{:?}", sq));
    }
    // Conjugating Γ₁(2) by u₂₁ lands in Γ₁(2)′, and conjugating Γ₁(2)′ back
    // lands in Γ₁(2); checked on deterministic families of members (words in
    // u₁₂, u₂₁² for the first, Γ₁(2)′ members among level-one words for the second).
    let u21_inv = pow(&u21, -1);
    let forward_bad = sample_words(2, 50)
        .into_iter()
        .map(|w| u21.mul(&w.evaluate()).mul(&u21_inv))
        .find(|m| !member(m, CongruenceGroup::Gamma1Prime2).unwrap_or(false));
    rep.check("u21 Gamma1(2) u21^-1 in Gamma1(2)' (50 members)", forward_bad.is_none(), || {
        format!("{forward_bad:?}")
    });
    let primes: Vec<Mat2> = sample_words(1, 400)
        .into_iter()
        .map(|w| w.evaluate())
        .filter(|m| member(m, CongruenceGroup::Gamma1Prime2).unwrap_or(false))
        .take(50)
        .collect();
    let backward_bad = primes
        .iter()
        .map(|m| u21_inv.mul(m).mul(&u21))
        .find(|m| !member(m, CongruenceGroup::Gamma1(2)).unwrap_or(false));
    rep.check(
        format!("u21^-1 Gamma1(2)' u21 in Gamma1(2) ({} members)", primes.len()),
        backward_bad.is_none() && primes.len() == 50,
        || format!("{backward_bad:?}"),
    );
    rep.check("-I2 in Gamma1(2)", member(&minus, CongruenceGroup::Gamma1(2)).unwrap_or(false), String::new);
    rep
}

/// Deterministic list of distinct nonempty reduced words (shortlex order).
fn sample_words(level: u32, count: usize) -> Vec<UWord> {
    let alphabet = [
        TwoLetter::new(TwoGen::First, false),
        TwoLetter::new(TwoGen::Second, false),
        TwoLetter::new(TwoGen::First, true),
        TwoLetter::new(TwoGen::Second, true),
    ];
    let mut out = Vec::new();
    let mut layer = vec![Vec::<TwoLetter>::new()];
    while out.len() < count {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &alphabet {
                if w.last() == Some(&l.inv()) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        for w in &next {
            if out.len() < count {
                out.push(UWord::from_letters(level, w.iter().copied()));
            }
        }
        layer = next;
    }
    out
}

/// Left cosets `g·Γ₁(r)` of `Γ₁(r)` in `SL(2, Z)`.
#[derive(Debug, Clone, Serialize)]
pub struct CosetTable {
    pub level: u32,
    pub index: usize,
    /// Representatives in discovery order, each a word in `u₁₂^{±1}`, `u₂₁^{±1}`
    /// (level-one letters) and its matrix.
    pub representatives: Vec<CosetRepresentative>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CosetRepresentative {
    pub word: String,
    pub matrix: Mat2,
    #[serde(skip)]
    pub letters: Vec<TwoLetter>,
}

impl CosetTable {
    /// Position of the coset containing `g`.
    pub fn locate(&self, g: &Mat2) -> Option<usize> {
        let sub = CongruenceGroup::Gamma1(self.level);
        self.representatives.iter().position(|rep| {
            let h = rep.matrix.inverse().expect("unimodular").mul(g);
            member(&h, sub).unwrap_or(false)
        })
    }
}

/// Breadth-first enumeration of the left cosets of `Γ₁(r)`, `r ∈ {1, 2, 3}`,
/// under left multiplication by `u₂₁, u₁₂, u₂₁⁻¹, u₁₂⁻¹` (in that order).
/// Each new representative is a generator times an earlier one, so the
/// representative words are closed under removing their first letter.
pub fn coset_index(r: u32) -> Result<CosetTable> {
    check_level(r)?;
    let gens = [
        (TwoLetter::new(TwoGen::Second, false), Mat2::u21()),
        (TwoLetter::new(TwoGen::First, false), Mat2::u12()),
        (TwoLetter::new(TwoGen::Second, true), Mat2::u21().inverse()?),
        (TwoLetter::new(TwoGen::First, true), Mat2::u12().inverse()?),
    ];
    let mut table = CosetTable {
        level: r,
        index: 1,
        representatives: vec![CosetRepresentative { word: "I2".into(), matrix: Mat2::identity(), letters: Vec::new() }],
    };
    let mut head = 0;
    while head < table.representatives.len() {
        let parent = table.representatives[head].clone();
        head += 1;
        for (letter, g) in &gens {
            let m = g.mul(&parent.matrix);
            if table.locate(&m).is_none() {
                let mut letters = vec![*letter];
                letters.extend_from_slice(&parent.letters);
                let word = UWord::from_letters(1, letters.iter().copied()).matrix_notation();
                table.representatives.push(CosetRepresentative { word, matrix: m, letters });
            }
        }
    }
    table.index = table.representatives.len();
    Ok(table)
}

/// How a decomposition was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DecompositionMethod {
    /// Symmetric descent on `|b|` for `Υ₁(r)` members: the word has the
    /// shape `L₁…L_k · base · R_k…R₁` produced by the four products
    /// `u₁₂γu₂₁^r`, `u₂₁^rγu₁₂` and their inverses (applied with multiplicity).
    Descent,
    /// Euclidean reduction of the first column by left multiplication.
    Euclid,
}

/// A word for a matrix together with bookkeeping about the reduction.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub word: UWord,
    pub steps: usize,
    pub method: DecompositionMethod,
}

const MAX_STEPS: usize = 10_000;

/// Writes `A ∈ Γ₁(r)` as a word in `u₁₂^{±1}`, `u₂₁^{±r}`; a sign `-I₂` is
/// absorbed by the central word.  The evaluated word equals `A` exactly.
pub fn decompose(m: &Mat2, r: u32) -> Result<UWord> {
    Ok(decompose_detailed(m, r)?.word)
}

/// As [`decompose`], also reporting the number of reduction steps.
pub fn decompose_detailed(m: &Mat2, r: u32) -> Result<Decomposition> {
    check_level(r)?;
    if !member(m, CongruenceGroup::Gamma1(r))? {
        return Err(Error::NotInGroup { element: m.to_string(), group: CongruenceGroup::Gamma1(r).to_string() });
    }
    if member(m, CongruenceGroup::Upsilon1(r))? {
        descent(m, r)
    } else {
        euclid(m, r)
    }
}

/// Nearest integer to `num / den` (`den ≠ 0`), ties rounded away from zero.
fn round_div(num: &BigInt, den: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, rem) = num.div_mod_floor(den);
    if (&rem * &two).abs() >= den.abs() {
        q + 1
    } else {
        q
    }
}

fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::Undefined(format!("exponent {x} too large")))
}

fn descent(m: &Mat2, r: u32) -> Result<Decomposition> {
    let level = i64::from(r);
    let u12 = Mat2::u12();
    let u21r = Mat2::u21().pow(level)?;
    let mut gamma = m.clone();
    // Left and right factors peeled off so far: A = left · gamma · right.
    let mut left = TwoWord::new(r, []);
    let mut right = TwoWord::new(r, []);
    let mut steps = 0;
    loop {
        if gamma.b.is_zero() {
            let base = if gamma.is_identity() { TwoWord::new(r, []) } else { minus_identity_word(r)? };
            let word = left.concat(&base).concat(&right);
            return Ok(Decomposition { word: UWord(word), steps, method: DecompositionMethod::Descent });
        }
        if r == 1 && gamma.b.abs().is_one() {
            let base = unit_b_word(&gamma)?;
            let word = left.concat(&base).concat(&right);
            return Ok(Decomposition { word: UWord(word), steps, method: DecompositionMethod::Descent });
        }
        if steps >= MAX_STEPS {
            return Err(Error::Undefined(format!("descent did not terminate for {m}")));
        }
        // Two families of moves with a signed multiplicity k:
        //   D_k: γ ↦ u₁₂^k γ u₂₁^{rk}  (b ↦ b - k·d)
        //   A_k: γ ↦ u₂₁^{rk} γ u₁₂^k  (b ↦ b - k·a)
        let mut best: Option<(BigInt, BigInt, Mat2, TwoGen, i64)> = None;
        for (kind, pivot) in [(TwoGen::First, gamma.d.clone()), (TwoGen::Second, gamma.a.clone())] {
            if pivot.is_zero() {
                continue;
            }
            let k = round_div(&gamma.b, &pivot);
            if k.is_zero() {
                continue;
            }
            let k = to_i64(&k)?;
            let next = match kind {
                TwoGen::First => u12.pow(k)?.mul(&gamma).mul(&u21r.pow(k)?),
                TwoGen::Second => u21r.pow(k)?.mul(&gamma).mul(&u12.pow(k)?),
            };
            if next.b.abs() >= gamma.b.abs() {
                continue;
            }
            let key = (next.b.abs(), next.a.abs() + next.d.abs());
            if best.as_ref().map_or(true, |(b, s, ..)| (&key.0, &key.1) < (b, s)) {
                best = Some((key.0, key.1, next, kind, k));
            }
        }
        let (_, _, next, kind, k) =
            best.ok_or_else(|| Error::Undefined(format!("no reducing move for {gamma} at level {r}")))?;
        // γ = L⁻¹ γ' R⁻¹ with (L, R) = (u₁₂^k, u₂₁^{rk}) or (u₂₁^{rk}, u₁₂^k).
        let (l, rr) = match kind {
            TwoGen::First => (TwoGen::First, TwoGen::Second),
            TwoGen::Second => (TwoGen::Second, TwoGen::First),
        };
        left = left.concat(&TwoWord::power(r, l, -k));
        right = TwoWord::power(r, rr, -k).concat(&right);
        gamma = next;
        steps += 1;
    }
}

/// Base case `r = 1`, `|b| = 1`: `ad = 0`, handled by `𝔲₁𝔲₂𝔲₁^N`,
/// `𝔲₁^N𝔲₂𝔲₁` and their inverses.
fn unit_b_word(g: &Mat2) -> Result<TwoWord> {
    let a = TwoGen::First;
    let b = TwoGen::Second;
    let p = |gen, e: i64| TwoWord::power(1, gen, e);
    let word = if g.b == BigInt::from(-1) {
        if g.a.is_zero() {
            // [[0,-1],[1,d]] = A B A^{1-d}
            p(a, 1).concat(&p(b, 1)).concat(&p(a, 1 - to_i64(&g.d)?))
        } else {
            // [[a,-1],[1,0]] = A^{1-a} B A
            p(a, 1 - to_i64(&g.a)?).concat(&p(b, 1)).concat(&p(a, 1))
        }
    } else if g.a.is_zero() {
        // [[0,1],[-1,d]] = (A^{1-d} B A)^{-1}
        p(a, 1 - to_i64(&g.d)?).concat(&p(b, 1)).concat(&p(a, 1)).inverse()
    } else {
        // [[a,1],[-1,0]] = (A B A^{1-a})^{-1}
        p(a, 1).concat(&p(b, 1)).concat(&p(a, 1 - to_i64(&g.a)?)).inverse()
    };
    Ok(word)
}

fn euclid(m: &Mat2, r: u32) -> Result<Decomposition> {
    let level = i64::from(r);
    let u12 = Mat2::u12();
    let u21r = Mat2::u21().pow(level)?;
    let mut g = m.clone();
    // Accumulates the inverse of the left factors: A = prefix · g.
    let mut prefix = TwoWord::new(r, []);
    let mut steps = 0;
    while !g.c.is_zero() {
        if steps >= MAX_STEPS {
            return Err(Error::Undefined(format!("Euclidean reduction did not terminate for {m}")));
        }
        steps += 1;
        // c ← c + r k a via u₂₁^{rk}, whenever that shrinks |c|.
        if !g.a.is_zero() {
            let ra = BigInt::from(level) * &g.a;
            let k = -round_div(&g.c, &ra);
            if !k.is_zero() && (&g.c + &k * &ra).abs() < g.c.abs() {
                let k = to_i64(&k)?;
                g = u21r.pow(k)?.mul(&g);
                prefix = prefix.concat(&TwoWord::power(r, TwoGen::Second, -k));
                continue;
            }
        }
        // Otherwise a ← a - k c via u₁₂^k, keeping a ≠ 0; this shrinks |a|.
        let mut k = round_div(&g.a, &g.c);
        if (&g.a - &k * &g.c).is_zero() {
            k -= 1;
        }
        if k.is_zero() {
            return Err(Error::Undefined(format!("Euclidean reduction stalled at {g}")));
        }
        let k = to_i64(&k)?;
        g = u12.pow(k)?.mul(&g);
        prefix = prefix.concat(&TwoWord::power(r, TwoGen::First, -k));
    }
    // g = [[±1, b], [0, ±1]].
    let tail = if g.a.is_one() {
        TwoWord::power(r, TwoGen::First, -to_i64(&g.b)?)
    } else {
        minus_identity_word(r)?.concat(&TwoWord::power(r, TwoGen::First, to_i64(&g.b)?))
    };
    Ok(Decomposition { word: UWord(prefix.concat(&tail)), steps, method: DecompositionMethod::Euclid })
}

/// Writes `A ∈ Γ₁(2)′` as a level-one word by conjugating into `Γ₁(2)`:
/// `A = u₂₁ · W · u₂₁⁻¹` with `W` a word in `u₁₂`, `u₂₁²`.
pub fn decompose_gamma1_prime2(m: &Mat2) -> Result<UWord> {
    if !member(m, CongruenceGroup::Gamma1Prime2)? {
        return Err(Error::NotInGroup { element: m.to_string(), group: CongruenceGroup::Gamma1Prime2.to_string() });
    }
    let u21 = Mat2::u21();
    let inner = decompose(&u21.inverse()?.mul(m).mul(&u21), 2)?;
    let expanded = inner.letters().iter().flat_map(|l| {
        let reps = if l.gen == TwoGen::Second { 2 } else { 1 };
        std::iter::repeat(*l).take(reps)
    });
    let b = TwoLetter::new(TwoGen::Second, false);
    let letters = std::iter::once(b).chain(expanded).chain(std::iter::once(b.inv()));
    Ok(UWord::from_letters(1, letters))
}

/// All members of `Υ₁(r)` with every entry bounded by `bound` in absolute value.
pub fn upsilon_members(r: u32, bound: i64) -> Result<Vec<Mat2>> {
    check_level(r)?;
    let level = i64::from(r);
    let mut out = Vec::new();
    for b in -bound..=bound {
        if (level * b).abs() > bound {
            continue;
        }
        let target = 1 - level * b * b;
        for a in -bound..=bound {
            let candidates: Vec<i64> = if a == 0 {
                if target == 0 {
                    (-bound..=bound).collect()
                } else {
                    Vec::new()
                }
            } else if target % a == 0 && (target / a).abs() <= bound {
                vec![target / a]
            } else {
                Vec::new()
            };
            for d in candidates {
                let m = Mat2::new(a, b, -level * b, d);
                if member(&m, CongruenceGroup::Upsilon1(r))? {
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}

/// All members of `Υ₁(2)′` with entries bounded by `bound`.
pub fn upsilon_prime2_members(bound: i64) -> Result<Vec<Mat2>> {
    let mut out = Vec::new();
    for m in upsilon_members(1, bound)? {
        if member(&m, CongruenceGroup::Gamma1Prime2)? {
            out.push(m);
        }
    }
    Ok(out)
}
