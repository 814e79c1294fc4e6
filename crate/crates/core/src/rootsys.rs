//! Exact finite and affine root-system data.
//!
//! Finite systems are described by their simple roots: the Cartan matrix
//! `a_ij = <α_i^∨, α_j>`, a Gram matrix of the invariant form and the
//! enumerated positive roots (integer coordinates in the simple-root basis).
//! Affine systems add the affine node (index 0), marks, comarks, the
//! normalised form `(α_i, α_j) = d_i^{-1} a_ij`, the distinguished roots
//! `θ`, `φ` and the lattice `M`.
//!
//! Finite nodes follow the conventional Bourbaki/Kac numbering; the twisted
//! types `E6^(2)` and `D4^(3)` keep the numbering of their affine diagrams.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, frac, fmt_q, q, to_q_vec, Q};

/// The seven Cartan-Killing letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FiniteKind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FiniteKind {
    fn letter(self) -> char {
        match self {
            FiniteKind::A => 'A',
            FiniteKind::B => 'B',
            FiniteKind::C => 'C',
            FiniteKind::D => 'D',
            FiniteKind::E => 'E',
            FiniteKind::F => 'F',
            FiniteKind::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => FiniteKind::A,
            'B' => FiniteKind::B,
            'C' => FiniteKind::C,
            'D' => FiniteKind::D,
            'E' => FiniteKind::E,
            'F' => FiniteKind::F,
            'G' => FiniteKind::G,
            _ => return None,
        })
    }
}

/// An irreducible finite Dynkin type `X_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FiniteType {
    kind: FiniteKind,
    rank: usize,
}

impl FiniteType {
    /// Validates the rank: `A_n (n≥1)`, `B_n (n≥2)`, `C_n (n≥2)`, `D_n (n≥4)`,
    /// `E_6,7,8`, `F_4`, `G_2`.
    pub fn new(kind: FiniteKind, rank: usize) -> Result<Self> {
        let ok = match kind {
            FiniteKind::A => rank >= 1,
            FiniteKind::B | FiniteKind::C => rank >= 2,
            FiniteKind::D => rank >= 4,
            FiniteKind::E => (6..=8).contains(&rank),
            FiniteKind::F => rank == 4,
            FiniteKind::G => rank == 2,
        };
        if ok {
            Ok(FiniteType { kind, rank })
        } else {
            Err(Error::InvalidRank { family: kind.letter().to_string(), rank })
        }
    }

    pub fn kind(&self) -> FiniteKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.rank)
    }
}

impl FromStr for FiniteType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = chars
            .next()
            .and_then(FiniteKind::from_letter)
            .ok_or_else(|| Error::UnknownType(s.to_string()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| Error::UnknownType(s.to_string()))?;
        FiniteType::new(kind, rank)
    }
}

/// An irreducible reduced affine Dynkin type from the untwisted and twisted tables.
///
/// The type `A3^(2)` is identified with `D3^(2)`; constructing it through
/// [`AffineType::a_odd_twisted`] returns the `D` representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AffineType {
    /// `X_n^(1)`.
    Untwisted(FiniteType),
    /// `A_{2n}^(2)`, `n ≥ 1`.
    AEvenTwisted(usize),
    /// `A_{2n-1}^(2)`, `n ≥ 3`.
    AOddTwisted(usize),
    /// `D_{n+1}^(2)`, `n ≥ 2`.
    DTwisted(usize),
    /// `E6^(2)`.
    ETwisted,
    /// `D4^(3)`.
    DTriality,
}

impl AffineType {
    /// `X_n^(1)`.
    pub fn untwisted(kind: FiniteKind, rank: usize) -> Result<Self> {
        Ok(AffineType::Untwisted(FiniteType::new(kind, rank)?))
    }

    /// `A_{2n}^(2)`.
    pub fn a_even_twisted(n: usize) -> Result<Self> {
        if n >= 1 {
            Ok(AffineType::AEvenTwisted(n))
        } else {
            Err(Error::InvalidRank { family: "A_{2n}^(2)".into(), rank: n })
        }
    }

    /// `A_{2n-1}^(2)`; `n = 2` is returned as the isomorphic `D3^(2)`.
    pub fn a_odd_twisted(n: usize) -> Result<Self> {
        match n {
            2 => Ok(AffineType::DTwisted(2)),
            n if n >= 3 => Ok(AffineType::AOddTwisted(n)),
            _ => Err(Error::InvalidRank { family: "A_{2n-1}^(2)".into(), rank: n }),
        }
    }

    /// `D_{n+1}^(2)`.
    pub fn d_twisted(n: usize) -> Result<Self> {
        if n >= 2 {
            Ok(AffineType::DTwisted(n))
        } else {
            Err(Error::InvalidRank { family: "D_{n+1}^(2)".into(), rank: n })
        }
    }

    /// Rank of the finite part (number of non-affine nodes).
    pub fn rank(&self) -> usize {
        match self {
            AffineType::Untwisted(t) => t.rank,
            AffineType::AEvenTwisted(n) | AffineType::AOddTwisted(n) | AffineType::DTwisted(n) => *n,
            AffineType::ETwisted => 4,
            AffineType::DTriality => 2,
        }
    }

    /// Index of the table the type belongs to (1, 2 or 3).
    pub fn table(&self) -> u32 {
        match self {
            AffineType::Untwisted(_) => 1,
            AffineType::DTriality => 3,
            _ => 2,
        }
    }

    pub fn is_untwisted(&self) -> bool {
        matches!(self, AffineType::Untwisted(_))
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineType::Untwisted(t) => write!(f, "{t}^(1)"),
            AffineType::AEvenTwisted(n) => write!(f, "A{}^(2)", 2 * n),
            AffineType::AOddTwisted(n) => write!(f, "A{}^(2)", 2 * n - 1),
            AffineType::DTwisted(n) => write!(f, "D{}^(2)", n + 1),
            AffineType::ETwisted => write!(f, "E6^(2)"),
            AffineType::DTriality => write!(f, "D4^(3)"),
        }
    }
}

impl FromStr for AffineType {
    type Err = Error;

    /// Accepts `X_n^(k)`-style labels such as `C2^(1)`, `A4^(2)`, `D4(3)` or `G2^1`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownType(s.to_string());
        let cleaned: String = s.chars().filter(|c| !matches!(c, '_' | ' ' | '{' | '}')).collect();
        let (head, tail) = match cleaned.find(['^', '(']) {
            Some(pos) => cleaned.split_at(pos),
            None => return Err(unknown()),
        };
        let twist: u32 = tail
            .trim_matches(|c| matches!(c, '^' | '(' | ')'))
            .parse()
            .map_err(|_| unknown())?;
        let mut chars = head.chars();
        let kind = chars.next().and_then(FiniteKind::from_letter).ok_or_else(unknown)?;
        let idx: usize = chars.as_str().parse().map_err(|_| unknown())?;
        match (twist, kind) {
            (1, k) => AffineType::untwisted(k, idx),
            (2, FiniteKind::A) if idx % 2 == 0 => AffineType::a_even_twisted(idx / 2),
            (2, FiniteKind::A) => AffineType::a_odd_twisted(idx.div_ceil(2)),
            (2, FiniteKind::D) if idx >= 3 => AffineType::d_twisted(idx - 1),
            (2, FiniteKind::E) if idx == 6 => Ok(AffineType::ETwisted),
            (3, FiniteKind::D) if idx == 4 => Ok(AffineType::DTriality),
            _ => Err(unknown()),
        }
    }
}

/// A finite root system given by its simple roots.
#[derive(Debug, Clone)]
pub struct FiniteSystem {
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<Q>>,
    positive_roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl FiniteSystem {
    /// Builds the system from the Gram matrix of the simple roots.
    pub fn from_gram(gram: Vec<Vec<Q>>) -> Self {
        let n = gram.len();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = q(2) * &gram[i][j] / &gram[i][i];
                        rational::to_i64(&v).expect("Gram matrix must yield an integral Cartan matrix")
                    })
                    .collect()
            })
            .collect();
        let positive_roots = enumerate_positive_roots(&cartan);
        let index = positive_roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        FiniteSystem { cartan, gram, positive_roots, index }
    }

    /// Builds the system from squared lengths of the simple roots and the
    /// edges of the Dynkin graph (nodes indexed from 0).  Adjacent simple
    /// roots of lengths `L ≥ S` pair to `-L/2`.
    pub fn from_lengths(lengths: &[Q], edges: &[(usize, usize)]) -> Self {
        FiniteSystem::from_gram(gram_from_lengths(lengths, edges))
    }

    /// The standard system of the given type, long roots of squared length 2.
    pub fn standard(t: FiniteType) -> Self {
        let (lengths, edges) = standard_shape(t);
        FiniteSystem::from_lengths(&lengths, &edges)
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `a_ij = <α_i^∨, α_j>` (0-based indices).
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `(α_i, α_j)` (0-based indices).
    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Position of a positive root in [`FiniteSystem::positive_roots`].
    pub fn positive_root_index(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// True when `v` (or `-v`) is a root.
    pub fn is_root(&self, v: &[i64]) -> bool {
        let negated: Vec<i64> = v.iter().map(|x| -x).collect();
        self.index.contains_key(v) || self.index.contains_key(&negated)
    }

    /// Bilinear form on rational coordinate vectors.
    pub fn pair(&self, x: &[Q], y: &[Q]) -> Q {
        let mut total = Q::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    total += xi * &self.gram[i][j] * yj;
                }
            }
        }
        total
    }

    /// Bilinear form on integer coordinate vectors.
    pub fn pair_int(&self, x: &[i64], y: &[i64]) -> Q {
        self.pair(&to_q_vec(x), &to_q_vec(y))
    }

    /// Squared length of an integer vector.
    pub fn norm_int(&self, x: &[i64]) -> Q {
        self.pair_int(x, x)
    }

    /// `<x, β^∨> = 2 (x, β) / (β, β)` for a root `β`.
    pub fn coroot_pairing(&self, x: &[i64], beta: &[i64]) -> i64 {
        let v = q(2) * self.pair_int(x, beta) / self.norm_int(beta);
        rational::to_i64(&v).expect("pairing with a coroot is integral")
    }

    /// `β^∨ = 2β/(β,β)` in rational coordinates.
    pub fn coroot(&self, beta: &[Q]) -> Result<Vec<Q>> {
        let norm = self.pair(beta, beta);
        if norm.is_zero() {
            return Err(Error::IsotropicRoot);
        }
        Ok(rational::scale(&(q(2) / norm), beta))
    }

    /// Height-maximal root.
    pub fn highest_root(&self) -> Vec<i64> {
        self.positive_roots.last().cloned().expect("non-empty root system")
    }

    /// Highest root among the short roots (equal to the highest root when simply laced).
    pub fn highest_short_root(&self) -> Vec<i64> {
        let min_norm = self
            .positive_roots
            .iter()
            .map(|r| self.norm_int(r))
            .min()
            .expect("non-empty root system");
        self.positive_roots
            .iter()
            .rev()
            .find(|r| self.norm_int(r) == min_norm)
            .cloned()
            .expect("a short root exists")
    }

    /// True when all roots have the same length.
    pub fn is_simply_laced(&self) -> bool {
        let first = self.norm_int(&self.positive_roots[0]);
        self.positive_roots.iter().all(|r| self.norm_int(r) == first)
    }

    /// The `i`-th simple root (0-based) as an integer vector.
    pub fn simple(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }
}

fn gram_from_lengths(lengths: &[Q], edges: &[(usize, usize)]) -> Vec<Vec<Q>> {
    let n = lengths.len();
    let mut gram = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        gram[i][i] = lengths[i].clone();
    }
    for &(i, j) in edges {
        let longer = if lengths[i] > lengths[j] { &lengths[i] } else { &lengths[j] };
        let value = -(longer / q(2));
        gram[i][j] = value.clone();
        gram[j][i] = value;
    }
    gram
}

fn chain(nodes: usize) -> Vec<(usize, usize)> {
    (1..nodes).map(|i| (i - 1, i)).collect()
}

/// Squared lengths (long roots = 2) and edges of a finite Dynkin diagram.
fn standard_shape(t: FiniteType) -> (Vec<Q>, Vec<(usize, usize)>) {
    let n = t.rank;
    match t.kind {
        FiniteKind::A => (vec![q(2); n], chain(n)),
        FiniteKind::B => {
            let mut l = vec![q(2); n];
            l[n - 1] = q(1);
            (l, chain(n))
        }
        FiniteKind::C => {
            let mut l = vec![q(1); n];
            l[n - 1] = q(2);
            (l, chain(n))
        }
        FiniteKind::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (vec![q(2); n], e)
        }
        FiniteKind::E => {
            let mut e = chain(n - 1);
            e.push((2, n - 1));
            (vec![q(2); n], e)
        }
        FiniteKind::F => (vec![q(2), q(2), q(1), q(1)], chain(4)),
        FiniteKind::G => (vec![q(2), frac(2, 3)], chain(2)),
    }
}

/// Closure algorithm: a positive root `β` and a simple root `α_i` give the
/// root `β + α_i` exactly when the `α_i`-string through `β` extends upward.
fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut cursor = 0;
    while cursor < roots.len() {
        let beta = roots[cursor].clone();
        cursor += 1;
        for i in 0..n {
            // p = largest k with β - kα_i a root
            let mut p = 0;
            loop {
                let mut down = beta.clone();
                down[i] -= p + 1;
                if known.contains(&down) {
                    p += 1;
                } else {
                    break;
                }
            }
            let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
            let up_length = p - pairing;
            if up_length > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if known.insert(up.clone()) {
                    roots.push(up);
                }
            }
        }
    }
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    roots
}

/// A vector of `H*_aff = H* ⊕ Cδ ⊕ CΛ₀` in the basis `(α_1, …, α_n, δ, Λ₀)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineVector {
    pub finite: Vec<Q>,
    pub delta: Q,
    pub lambda0: Q,
}

impl AffineVector {
    pub fn new(finite: Vec<Q>, delta: Q, lambda0: Q) -> Self {
        AffineVector { finite, delta, lambda0 }
    }

    /// The vector with the given finite part and no `δ`, `Λ₀` components.
    pub fn finite(finite: Vec<Q>) -> Self {
        AffineVector { finite, delta: Q::zero(), lambda0: Q::zero() }
    }

    pub fn zero(n: usize) -> Self {
        AffineVector::finite(rational::zeros(n))
    }

    /// `δ`.
    pub fn delta(n: usize) -> Self {
        AffineVector { finite: rational::zeros(n), delta: Q::one(), lambda0: Q::zero() }
    }

    /// `Λ₀`.
    pub fn lambda0(n: usize) -> Self {
        AffineVector { finite: rational::zeros(n), delta: Q::zero(), lambda0: Q::one() }
    }

    pub fn dim(&self) -> usize {
        self.finite.len()
    }

    pub fn add(&self, other: &AffineVector) -> AffineVector {
        AffineVector {
            finite: rational::add(&self.finite, &other.finite),
            delta: &self.delta + &other.delta,
            lambda0: &self.lambda0 + &other.lambda0,
        }
    }

    pub fn sub(&self, other: &AffineVector) -> AffineVector {
        AffineVector {
            finite: rational::sub(&self.finite, &other.finite),
            delta: &self.delta - &other.delta,
            lambda0: &self.lambda0 - &other.lambda0,
        }
    }

    pub fn scale(&self, c: &Q) -> AffineVector {
        AffineVector {
            finite: rational::scale(c, &self.finite),
            delta: c * &self.delta,
            lambda0: c * &self.lambda0,
        }
    }

    /// Coordinates `(finite…, δ, Λ₀)` as one flat vector.
    pub fn to_coords(&self) -> Vec<Q> {
        let mut v = self.finite.clone();
        v.push(self.delta.clone());
        v.push(self.lambda0.clone());
        v
    }

    /// Inverse of [`AffineVector::to_coords`].
    pub fn from_coords(coords: &[Q]) -> AffineVector {
        let n = coords.len() - 2;
        AffineVector {
            finite: coords[..n].to_vec(),
            delta: coords[n].clone(),
            lambda0: coords[n + 1].clone(),
        }
    }
}

impl fmt::Display for AffineVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}δ + {}Λ₀", rational::fmt_vec(&self.finite), fmt_q(&self.delta), fmt_q(&self.lambda0))
    }
}

/// Complete exact data of an affine root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    affine_type: AffineType,
    cartan: Vec<Vec<i64>>,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    d: Vec<Q>,
    e: Vec<Q>,
    twist: u32,
    finite: FiniteSystem,
    theta: Vec<i64>,
    phi: Vec<i64>,
    i_theta: usize,
    i_phi: usize,
}

impl RootSystem {
    /// Builds all data for the given affine type.
    pub fn build(affine_type: AffineType) -> Result<Self> {
        let cartan = affine_cartan(affine_type);
        let marks = rational::positive_kernel_vector(&cartan)
            .ok_or_else(|| Error::Undefined(format!("marks of {affine_type}")))?;
        let transposed: Vec<Vec<i64>> =
            (0..cartan.len()).map(|j| cartan.iter().map(|row| row[j]).collect()).collect();
        let comarks = rational::positive_kernel_vector(&transposed)
            .ok_or_else(|| Error::Undefined(format!("comarks of {affine_type}")))?;
        let d: Vec<Q> = marks.iter().zip(&comarks).map(|(&a, &c)| frac(a, c)).collect();
        let n = cartan.len() - 1;
        let gram: Vec<Vec<Q>> = (1..=n)
            .map(|i| (1..=n).map(|j| q(cartan[i][j]) / &d[i]).collect())
            .collect();
        let finite = FiniteSystem::from_gram(gram);
        let a0_inv = frac(1, marks[0]);
        let e: Vec<Q> = d.iter().map(|di| if *di > a0_inv { di.clone() } else { a0_inv.clone() }).collect();
        let twist_q = d.iter().map(|di| Q::one() / di).max().expect("non-empty");
        let twist = rational::to_i64(&twist_q).expect("twist is integral") as u32;
        let theta: Vec<i64> = marks[1..].to_vec();
        let phi = finite.highest_root();
        let i_theta = (1..=n).find(|&j| cartan[0][j] != 0).expect("affine node is connected");
        let i_phi = (1..=n)
            .find(|&j| !finite.pair_int(&phi, &finite.simple(j - 1)).is_zero())
            .expect("highest root is not orthogonal to all simple roots");
        Ok(RootSystem { affine_type, cartan, marks, comarks, d, e, twist, finite, theta, phi, i_theta, i_phi })
    }

    pub fn affine_type(&self) -> AffineType {
        self.affine_type
    }

    /// Rank `n` of the finite part.
    pub fn rank(&self) -> usize {
        self.finite.rank()
    }

    /// Affine Cartan matrix, `(n+1)×(n+1)`, node 0 first.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Marks `a_0, …, a_n`.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Comarks `a_0^∨, …, a_n^∨`.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    /// `a_0`.
    pub fn a0(&self) -> i64 {
        self.marks[0]
    }

    /// `d_i = a_i / a_i^∨`, `i = 0…n`.
    pub fn d(&self) -> &[Q] {
        &self.d
    }

    /// `e_i = max(a_0^{-1}, d_i)`, `i = 0…n`.
    pub fn e(&self) -> &[Q] {
        &self.e
    }

    /// Twist number `r = max d_i^{-1}`.
    pub fn twist(&self) -> u32 {
        self.twist
    }

    /// The finite root system spanned by `α_1, …, α_n` with the normalised form.
    pub fn finite(&self) -> &FiniteSystem {
        &self.finite
    }

    /// `θ = a_1α_1 + … + a_nα_n`.
    pub fn theta(&self) -> &[i64] {
        &self.theta
    }

    /// Highest root `φ`.
    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    /// Node (1-based) of the finite diagram joined to the affine node; the
    /// smallest one when there are two.
    pub fn i_theta(&self) -> usize {
        self.i_theta
    }

    /// Node (1-based) whose simple root is not orthogonal to `φ` (smallest if several).
    pub fn i_phi(&self) -> usize {
        self.i_phi
    }

    /// `ℓ₀ = a_{0 i_θ} a_{i_θ 0}`.
    pub fn ell0(&self) -> i64 {
        self.cartan[0][self.i_theta] * self.cartan[self.i_theta][0]
    }

    /// `θ' = φ - θ` (zero when `θ = φ`).
    pub fn theta_prime(&self) -> Vec<i64> {
        self.phi.iter().zip(&self.theta).map(|(p, t)| p - t).collect()
    }

    /// `φ' = -s_θ(φ)`.
    pub fn phi_prime(&self) -> Vec<i64> {
        let c = self.finite.coroot_pairing(&self.phi, &self.theta);
        self.phi.iter().zip(&self.theta).map(|(p, t)| c * t - p).collect()
    }

    /// Normalised form on `H*_aff`: finite Gram block, `(δ, Λ₀) = 1`, all other pairings 0.
    pub fn pair(&self, x: &AffineVector, y: &AffineVector) -> Result<Q> {
        let n = self.rank();
        for v in [x, y] {
            if v.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.dim() });
            }
        }
        Ok(self.finite.pair(&x.finite, &y.finite) + &x.delta * &y.lambda0 + &x.lambda0 * &y.delta)
    }

    /// Form on finite parts only.
    pub fn pair_finite(&self, x: &[Q], y: &[Q]) -> Q {
        self.finite.pair(x, y)
    }

    /// `x^∨ = 2x/(x,x)`.
    pub fn coroot(&self, x: &AffineVector) -> Result<AffineVector> {
        let norm = self.pair(x, x)?;
        if norm.is_zero() {
            return Err(Error::IsotropicRoot);
        }
        Ok(x.scale(&(q(2) / norm)))
    }

    /// Reflection `s_α(x) = x - (x, α^∨) α`.
    pub fn reflect(&self, alpha: &AffineVector, x: &AffineVector) -> Result<AffineVector> {
        let coroot = self.coroot(alpha)?;
        let c = self.pair(x, &coroot)?;
        Ok(x.sub(&alpha.scale(&c)))
    }

    /// Simple root `α_i`, `i = 0…n`; `α_0 = (δ - θ)/a_0`.
    pub fn alpha(&self, i: usize) -> AffineVector {
        let n = self.rank();
        if i == 0 {
            let theta = AffineVector::finite(to_q_vec(&self.theta));
            AffineVector::delta(n).sub(&theta).scale(&frac(1, self.a0()))
        } else {
            let mut v = rational::zeros(n);
            v[i - 1] = Q::one();
            AffineVector::finite(v)
        }
    }

    /// `δ`.
    pub fn delta(&self) -> AffineVector {
        AffineVector::delta(self.rank())
    }

    /// `ν(α_i^∨)`, `i = 0…n`; for `i ≥ 1` this is `d_i α_i`.
    pub fn simple_coroot(&self, i: usize) -> AffineVector {
        self.coroot(&self.alpha(i)).expect("simple roots are real")
    }

    /// `ν(β^∨)` for a finite integer root vector.
    pub fn finite_coroot(&self, beta: &[i64]) -> Vec<Q> {
        self.finite.coroot(&to_q_vec(beta)).expect("finite roots are real")
    }

    /// The basis `A_i = e_i α_i`, `i = 1…n`, of the lattice `M`.
    pub fn m_basis(&self) -> Vec<Vec<Q>> {
        (1..=self.rank())
            .map(|i| {
                let mut v = rational::zeros(self.rank());
                v[i - 1] = self.e[i].clone();
                v
            })
            .collect()
    }

    /// Coordinates of `μ` in the basis `{A_i}`, when `μ ∈ M`.
    pub fn m_coordinates(&self, mu: &[Q]) -> Option<Vec<i64>> {
        let coords: Vec<Q> = mu.iter().enumerate().map(|(i, x)| x / &self.e[i + 1]).collect();
        rational::to_int_vec(&coords)
    }

    /// Coordinates of `β` in the basis `{ν(α_i^∨)}`, when `β ∈ ν(Q̊^∨)`.
    pub fn coroot_coordinates(&self, beta: &[Q]) -> Option<Vec<i64>> {
        let coords: Vec<Q> = beta.iter().enumerate().map(|(i, x)| x / &self.d[i + 1]).collect();
        rational::to_int_vec(&coords)
    }

    /// Maximum of `(α, α)` over the real roots; equals `2r`.
    pub fn max_root_norm(&self) -> Q {
        let finite_max = self
            .finite
            .positive_roots()
            .iter()
            .map(|r| self.finite.norm_int(r))
            .max()
            .expect("non-empty");
        let a0 = self.alpha(0);
        let n0 = self.pair(&a0, &a0).expect("same dimension");
        if n0 > finite_max {
            n0
        } else {
            finite_max
        }
    }

    /// JSON-friendly summary of the Cartan data and root lists.
    pub fn summary(&self) -> RootSystemSummary {
        RootSystemSummary {
            affine_type: self.affine_type.to_string(),
            cartan: self.cartan.clone(),
            marks: self.marks.clone(),
            comarks: self.comarks.clone(),
            d: self.d.iter().map(fmt_q).collect(),
            twist: self.twist,
            theta: self.theta.clone(),
            phi: self.phi.clone(),
            i_theta: self.i_theta,
            i_phi: self.i_phi,
            positive_roots: self.finite.positive_roots().to_vec(),
        }
    }
}

/// Serializable snapshot of a [`RootSystem`].
#[derive(Debug, Clone, Serialize)]
pub struct RootSystemSummary {
    pub affine_type: String,
    pub cartan: Vec<Vec<i64>>,
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
    pub d: Vec<String>,
    pub twist: u32,
    pub theta: Vec<i64>,
    pub phi: Vec<i64>,
    pub i_theta: usize,
    pub i_phi: usize,
    pub positive_roots: Vec<Vec<i64>>,
}

fn cartan_from_gram(gram: &[Vec<Q>]) -> Vec<Vec<i64>> {
    let n = gram.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| rational::to_i64(&(q(2) * &gram[i][j] / &gram[i][i])).expect("integral Cartan entry"))
                .collect()
        })
        .collect()
}

/// Affine Cartan matrix with node 0 first.
fn affine_cartan(t: AffineType) -> Vec<Vec<i64>> {
    match t {
        AffineType::Untwisted(ft) => {
            let fs = FiniteSystem::standard(ft);
            let n = ft.rank;
            let theta = fs.highest_root();
            let theta_q = to_q_vec(&theta);
            let mut gram = vec![vec![Q::zero(); n + 1]; n + 1];
            // α_0 = δ - θ: same pairings as -θ on the finite part.
            gram[0][0] = fs.pair(&theta_q, &theta_q);
            for j in 0..n {
                let simple = to_q_vec(&fs.simple(j));
                let v = -fs.pair(&theta_q, &simple);
                gram[0][j + 1] = v.clone();
                gram[j + 1][0] = v;
                for k in 0..n {
                    gram[j + 1][k + 1] = fs.gram()[j][k].clone();
                }
            }
            cartan_from_gram(&gram)
        }
        AffineType::AEvenTwisted(n) => {
            let mut l = vec![q(2); n + 1];
            l[0] = q(1);
            l[n] = q(4);
            cartan_from_gram(&gram_from_lengths(&l, &chain(n + 1)))
        }
        AffineType::AOddTwisted(n) => {
            let mut l = vec![q(1); n + 1];
            l[n] = q(2);
            let mut e = vec![(0, 2)];
            e.extend((2..=n).map(|i| (i - 1, i)));
            cartan_from_gram(&gram_from_lengths(&l, &e))
        }
        AffineType::DTwisted(n) => {
            let mut l = vec![q(2); n + 1];
            l[0] = q(1);
            l[n] = q(1);
            cartan_from_gram(&gram_from_lengths(&l, &chain(n + 1)))
        }
        AffineType::ETwisted => {
            let l = vec![q(1), q(1), q(1), q(2), q(2)];
            cartan_from_gram(&gram_from_lengths(&l, &chain(5)))
        }
        AffineType::DTriality => {
            let l = vec![q(1), q(1), q(3)];
            cartan_from_gram(&gram_from_lengths(&l, &chain(3)))
        }
    }
}

/// Sign of a nonzero integer root vector: `true` for positive.
pub fn is_positive(v: &[i64]) -> bool {
    v.iter().any(|&x| x > 0) && v.iter().all(|&x| x >= 0)
}

/// Sign test for rational vectors: all entries ≥ 0 and one > 0.
pub fn is_positive_q(v: &[Q]) -> bool {
    v.iter().any(Signed::is_positive) && v.iter().all(|x| !x.is_negative())
}
