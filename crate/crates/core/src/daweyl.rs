//! The double affine Weyl group `W̃ = W ⋉ Q^∨` in the normal form
//! `w · λ_μ · τ_β · τ_δ^k`, its defining action on `H*_aff`, and the
//! Bernstein-type relation suite.
//!
//! Both `μ ∈ M` and `β ∈ Q̊^∨` are stored in simple-root coordinates, the
//! coroot lattice being identified with a lattice in `H*` through the
//! normalised form.  The exponent `k` is rational so that the central
//! extension by `τ_{δ/2}` (needed for `A_{2n}^(2)`) is covered by the same type.
//!
//! The translations `λ_μ` act linearly on `H*_aff`; their matrices are built
//! by composing affine reflections: `λ_{θ/a_0} = s_0 s_θ`, conjugated by the
//! finite Weyl group to every element of the orbit `W̊(θ/a_0)`, whose simple
//! elements form a basis of `M`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, fmt_q, frac, q, to_q_vec, Q};
use crate::report::Report;
use crate::rootsys::{is_positive_q, AffineType, AffineVector, RootSystem};
use crate::weyl::{self, WeylElement};

/// A point of `H*_aff`.
pub type AffinePoint = AffineVector;

/// An element `w λ_μ τ_β τ_δ^k` in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DaweylElement {
    pub w: WeylElement,
    pub mu: Vec<Q>,
    pub beta: Vec<Q>,
    pub k: Q,
}

impl DaweylElement {
    pub fn rank(&self) -> usize {
        self.mu.len()
    }
}

/// A square matrix acting on coordinates `(α_1…α_n, δ, Λ₀)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMatrix {
    dim: usize,
    entries: Vec<Q>,
}

impl AffineMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Q::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Q::one();
        }
        AffineMatrix { dim, entries }
    }

    fn from_columns(columns: Vec<Vec<Q>>) -> Self {
        let dim = columns.len();
        let mut entries = vec![Q::zero(); dim * dim];
        for (j, col) in columns.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                entries[i * dim + j] = v;
            }
        }
        AffineMatrix { dim, entries }
    }

    pub fn entry(&self, i: usize, j: usize) -> &Q {
        &self.entries[i * self.dim + j]
    }

    pub fn mul(&self, other: &AffineMatrix) -> AffineMatrix {
        let n = self.dim;
        let mut entries = vec![Q::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        AffineMatrix { dim: n, entries }
    }

    fn add(&self, other: &AffineMatrix) -> AffineMatrix {
        AffineMatrix { dim: self.dim, entries: rational::add(&self.entries, &other.entries) }
    }

    fn sub(&self, other: &AffineMatrix) -> AffineMatrix {
        AffineMatrix { dim: self.dim, entries: rational::sub(&self.entries, &other.entries) }
    }

    fn scale(&self, c: &Q) -> AffineMatrix {
        AffineMatrix { dim: self.dim, entries: rational::scale(c, &self.entries) }
    }

    fn is_zero(&self) -> bool {
        rational::is_zero_vec(&self.entries)
    }

    /// Matrix-vector product on coordinates.
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        let n = self.dim;
        (0..n)
            .map(|i| {
                let mut acc = Q::zero();
                for (j, vj) in v.iter().enumerate() {
                    let a = &self.entries[i * n + j];
                    if !a.is_zero() && !vj.is_zero() {
                        acc += a * vj;
                    }
                }
                acc
            })
            .collect()
    }

    /// Image of an affine vector.
    pub fn apply_vector(&self, v: &AffineVector) -> AffineVector {
        AffineVector::from_coords(&self.apply(&v.to_coords()))
    }
}

/// The double affine Weyl group attached to an affine root system.
#[derive(Debug, Clone)]
pub struct DoubleAffineWeyl {
    rs: RootSystem,
    s_theta: WeylElement,
    /// `log λ_{A_i}` for the basis `A_i` of `M`; all pairwise products of
    /// these nilpotent matrices commute and cube to zero.
    lambda_logs: Vec<AffineMatrix>,
    /// `λ_{A_i}` as composed from reflections.
    lambda_basis: Vec<AffineMatrix>,
    /// Simple elements of the orbit `W̊(θ/a_0)`.
    orbit_basis: Vec<Vec<Q>>,
}

impl DoubleAffineWeyl {
    /// Builds the group and the reflection-composed matrices of `λ_{A_i}`.
    pub fn new(rs: RootSystem) -> Result<Self> {
        let n = rs.rank();
        let fs = rs.finite();
        let s_theta = WeylElement::reflection(fs, rs.theta())?;
        let dim = n + 2;
        let reflection_matrix = |alpha: &AffineVector| -> Result<AffineMatrix> {
            let cols = (0..dim)
                .map(|k| {
                    let mut e = rational::zeros(dim);
                    e[k] = Q::one();
                    rs.reflect(alpha, &AffineVector::from_coords(&e)).map(|v| v.to_coords())
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AffineMatrix::from_columns(cols))
        };
        let s0 = reflection_matrix(&rs.alpha(0))?;
        let st = reflection_matrix(&AffineVector::finite(to_q_vec(rs.theta())))?;
        let base = s0.mul(&st); // λ_{θ/a_0}

        // Orbit of θ/a_0 with a Weyl element reaching each point.
        let start: Vec<Q> = rational::scale(&frac(1, rs.a0()), &to_q_vec(rs.theta()));
        let mut orbit: HashMap<Vec<Q>, WeylElement> = HashMap::new();
        let mut order = vec![start.clone()];
        orbit.insert(start.clone(), WeylElement::identity(n));
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let w = orbit[&v].clone();
            for i in 0..n {
                let si = WeylElement::simple(fs, i);
                let image = si.apply_q(&v);
                if !orbit.contains_key(&image) {
                    orbit.insert(image.clone(), si.mul(&w));
                    order.push(image.clone());
                    queue.push_back(image);
                }
            }
        }
        let positives: Vec<&Vec<Q>> = order.iter().filter(|v| is_positive_q(v)).collect();
        let sums: std::collections::HashSet<Vec<Q>> = positives
            .iter()
            .flat_map(|a| positives.iter().map(move |b| rational::add(a, b)))
            .collect();
        let mut orbit_basis: Vec<Vec<Q>> =
            positives.iter().filter(|v| !sums.contains(**v)).map(|v| (*v).clone()).collect();
        orbit_basis.sort();
        if orbit_basis.len() != n {
            return Err(Error::Undefined(format!(
                "orbit of θ/a0 has {} simple elements, expected {n}",
                orbit_basis.len()
            )));
        }
        let weyl_matrix = |w: &WeylElement| -> AffineMatrix {
            let cols = (0..dim)
                .map(|k| {
                    let mut e = rational::zeros(dim);
                    e[k] = Q::one();
                    if k < n {
                        let img = w.apply_q(&e[..n]);
                        e[..n].clone_from_slice(&img);
                    }
                    e
                })
                .collect();
            AffineMatrix::from_columns(cols)
        };
        let orbit_lambdas: Vec<(AffineMatrix, AffineMatrix)> = orbit_basis
            .iter()
            .map(|sigma| {
                let w = &orbit[sigma];
                let wm = weyl_matrix(w);
                let wi = weyl_matrix(&w.inverse());
                // λ_σ = w λ_{θ/a_0} w^{-1}; its inverse is w s_θ s_0 w^{-1}.
                (wm.mul(&base).mul(&wi), wm.mul(&st).mul(&s0).mul(&wi))
            })
            .collect();
        // Express each A_i over the orbit basis (integer coefficients).
        let basis_matrix: Vec<Vec<Q>> =
            (0..n).map(|row| orbit_basis.iter().map(|b| b[row].clone()).collect()).collect();
        let mut lambda_basis = Vec::with_capacity(n);
        for a in rs.m_basis() {
            let coeffs = rational::solve(&basis_matrix, &a)
                .ok_or_else(|| Error::Undefined("orbit elements are linearly dependent".into()))?;
            let ints = rational::to_int_vec(&coeffs)
                .ok_or_else(|| Error::Undefined("A_i is not an integral combination of the orbit basis".into()))?;
            let mut m = AffineMatrix::identity(dim);
            for (c, (lam, lam_inv)) in ints.iter().zip(&orbit_lambdas) {
                let factor = if *c >= 0 { lam } else { lam_inv };
                for _ in 0..c.unsigned_abs() {
                    m = m.mul(factor);
                }
            }
            lambda_basis.push(m);
        }
        let id = AffineMatrix::identity(dim);
        let mut lambda_logs = Vec::with_capacity(n);
        for lam in &lambda_basis {
            let nil = lam.sub(&id);
            let nil2 = nil.mul(&nil);
            if !nil2.mul(&nil).is_zero() {
                return Err(Error::Undefined("translation matrix is not unipotent of order 3".into()));
            }
            lambda_logs.push(nil.sub(&nil2.scale(&frac(1, 2))));
        }
        Ok(DoubleAffineWeyl { rs, s_theta, lambda_logs, lambda_basis, orbit_basis })
    }

    /// Convenience constructor from an affine type.
    pub fn of_type(t: AffineType) -> Result<Self> {
        DoubleAffineWeyl::new(RootSystem::build(t)?)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Simple elements of the orbit `W̊(θ/a_0)` (a basis of `M`).
    pub fn orbit_basis(&self) -> &[Vec<Q>] {
        &self.orbit_basis
    }

    /// Reflection-composed matrices of `λ_{A_i}`.
    pub fn lambda_basis_matrices(&self) -> &[AffineMatrix] {
        &self.lambda_basis
    }

    pub fn identity(&self) -> DaweylElement {
        let n = self.rank();
        DaweylElement { w: WeylElement::identity(n), mu: rational::zeros(n), beta: rational::zeros(n), k: Q::zero() }
    }

    fn check_dim(&self, g: &DaweylElement) -> Result<()> {
        if g.rank() != self.rank() || g.beta.len() != self.rank() || g.w.rank() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: g.rank() });
        }
        Ok(())
    }

    /// Normal form of the product, rejecting elements of another rank.
    pub fn checked_mul(&self, a: &DaweylElement, b: &DaweylElement) -> Result<DaweylElement> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(self.mul(a, b))
    }

    /// `(w,μ,β,k)(w',μ',β',k') = (ww', w'^{-1}μ + μ', w'^{-1}β + β', k + k' + (w'^{-1}β, μ'))`.
    pub fn mul(&self, a: &DaweylElement, b: &DaweylElement) -> DaweylElement {
        let winv = b.w.inverse();
        let moved_mu = winv.apply_q(&a.mu);
        let moved_beta = winv.apply_q(&a.beta);
        let cocycle = self.rs.pair_finite(&moved_beta, &b.mu);
        DaweylElement {
            w: a.w.mul(&b.w),
            mu: rational::add(&moved_mu, &b.mu),
            beta: rational::add(&moved_beta, &b.beta),
            k: &a.k + &b.k + cocycle,
        }
    }

    /// `(w,μ,β,k)^{-1} = (w^{-1}, -wμ, -wβ, -k + (β, μ))`.
    pub fn inv(&self, g: &DaweylElement) -> DaweylElement {
        DaweylElement {
            w: g.w.inverse(),
            mu: rational::neg(&g.w.apply_q(&g.mu)),
            beta: rational::neg(&g.w.apply_q(&g.beta)),
            k: -&g.k + self.rs.pair_finite(&g.beta, &g.mu),
        }
    }

    /// Product of a sequence of elements.
    pub fn product<'a>(&self, items: impl IntoIterator<Item = &'a DaweylElement>) -> DaweylElement {
        items.into_iter().fold(self.identity(), |acc, g| self.mul(&acc, g))
    }

    /// Integer power (negative exponents use the inverse).
    pub fn pow(&self, g: &DaweylElement, e: i64) -> DaweylElement {
        let base = if e < 0 { self.inv(g) } else { g.clone() };
        (0..e.unsigned_abs()).fold(self.identity(), |acc, _| self.mul(&acc, &base))
    }

    /// `[a, b] = a b a^{-1} b^{-1}`.
    pub fn commutator(&self, a: &DaweylElement, b: &DaweylElement) -> DaweylElement {
        self.product([a, b, &self.inv(a), &self.inv(b)])
    }

    /// `a b a^{-1}`.
    pub fn conjugate(&self, a: &DaweylElement, b: &DaweylElement) -> DaweylElement {
        self.product([a, b, &self.inv(a)])
    }

    /// The finite Weyl element `w` embedded as `(w, 0, 0, 0)`.
    pub fn weyl(&self, w: &WeylElement) -> DaweylElement {
        DaweylElement { w: w.clone(), ..self.identity() }
    }

    /// Simple reflection `s_i`, `i = 0…n`; `s_0 = s_θ λ_{-θ/a_0}`.
    pub fn s(&self, i: usize) -> Result<DaweylElement> {
        let n = self.rank();
        if i > n {
            return Err(Error::UnknownSymbol(format!("s{i}")));
        }
        if i == 0 {
            let mu = rational::scale(&frac(-1, self.rs.a0()), &to_q_vec(self.rs.theta()));
            Ok(DaweylElement { w: self.s_theta.clone(), mu, ..self.identity() })
        } else {
            Ok(self.weyl(&WeylElement::simple(self.rs.finite(), i - 1)))
        }
    }

    /// `λ_μ` for `μ ∈ M`.
    pub fn lambda(&self, mu: &[Q]) -> Result<DaweylElement> {
        if mu.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: mu.len() });
        }
        if self.rs.m_coordinates(mu).is_none() {
            return Err(Error::NotInGroup { element: rational::fmt_vec(mu), group: "M".into() });
        }
        Ok(DaweylElement { mu: mu.to_vec(), ..self.identity() })
    }

    /// `τ_β` for `β ∈ ν(Q̊^∨)`.
    pub fn tau(&self, beta: &[Q]) -> Result<DaweylElement> {
        if beta.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: beta.len() });
        }
        if self.rs.coroot_coordinates(beta).is_none() {
            return Err(Error::NotInGroup { element: rational::fmt_vec(beta), group: "Q^∨".into() });
        }
        Ok(DaweylElement { beta: beta.to_vec(), ..self.identity() })
    }

    /// `τ_{β + cδ}` for an affine coroot-lattice vector (no `Λ₀` component).
    pub fn tau_affine(&self, v: &AffineVector) -> Result<DaweylElement> {
        if !v.lambda0.is_zero() {
            return Err(Error::NotInGroup { element: v.to_string(), group: "Q^∨ ⊕ Qδ".into() });
        }
        let mut g = self.tau(&v.finite)?;
        g.k = v.delta.clone();
        Ok(g)
    }

    /// `τ_δ^k` (rational `k` allows the `τ_{δ/2}` extension).
    pub fn tau_delta(&self, k: Q) -> DaweylElement {
        DaweylElement { k, ..self.identity() }
    }

    /// `τ_{α_i^∨}`, `i = 0…n` (`α_0^∨ = δ - θ` after identification).
    pub fn tau_simple_coroot(&self, i: usize) -> Result<DaweylElement> {
        if i > self.rank() {
            return Err(Error::UnknownSymbol(format!("t{i}")));
        }
        self.tau_affine(&self.rs.simple_coroot(i))
    }

    /// `λ_{A_i}`, `i = 1…n`.
    pub fn lambda_basis(&self, i: usize) -> Result<DaweylElement> {
        if i == 0 || i > self.rank() {
            return Err(Error::UnknownSymbol(format!("L{i}")));
        }
        self.lambda(&self.rs.m_basis()[i - 1])
    }

    /// Parses a generator symbol: `s0…sn`, `L1…Ln` (`λ_{A_i}`), `t0…tn`
    /// (`τ_{α_i^∨}`), `d` (`τ_δ`), with an optional trailing `'` for the inverse.
    pub fn generator(&self, symbol: &str) -> Result<DaweylElement> {
        let (body, inverse) = match symbol.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (symbol, false),
        };
        let unknown = || Error::UnknownSymbol(symbol.to_string());
        let g = if body == "d" {
            self.tau_delta(Q::one())
        } else {
            let (head, idx) = body.split_at(1);
            let i: usize = idx.parse().map_err(|_| unknown())?;
            match head {
                "s" => self.s(i)?,
                "L" => self.lambda_basis(i)?,
                "t" => self.tau_simple_coroot(i)?,
                _ => return Err(unknown()),
            }
        };
        Ok(if inverse { self.inv(&g) } else { g })
    }

    /// All generators `s_0…s_n`, `λ_{A_i}`, `τ_{α_i^∨}` (`i ≥ 1`), `τ_δ`, with names.
    pub fn generators(&self) -> Vec<(String, DaweylElement)> {
        let n = self.rank();
        let mut out = Vec::new();
        for i in 0..=n {
            out.push((format!("s{i}"), self.s(i).expect("valid index")));
        }
        for i in 1..=n {
            out.push((format!("L{i}"), self.lambda_basis(i).expect("valid index")));
        }
        for i in 1..=n {
            out.push((format!("t{i}"), self.tau_simple_coroot(i).expect("valid index")));
        }
        out.push(("d".into(), self.tau_delta(Q::one())));
        out
    }

    /// Matrix of `λ_μ` on `H*_aff`, assembled from the reflection-composed
    /// basis translations (`λ_μ = exp(Σ m_i log λ_{A_i})`, exact since the
    /// logarithms commute and are nilpotent of order 3).
    pub fn lambda_matrix(&self, mu: &[Q]) -> Result<AffineMatrix> {
        let coords = self
            .rs
            .m_coordinates(mu)
            .ok_or_else(|| Error::NotInGroup { element: rational::fmt_vec(mu), group: "M".into() })?;
        let dim = self.rank() + 2;
        let mut x = AffineMatrix { dim, entries: rational::zeros(dim * dim) };
        for (m, log) in coords.iter().zip(&self.lambda_logs) {
            if *m != 0 {
                x = x.add(&log.scale(&q(*m)));
            }
        }
        let x2 = x.mul(&x);
        Ok(AffineMatrix::identity(dim).add(&x).add(&x2.scale(&frac(1, 2))))
    }

    /// `λ_μ` by the closed translation formula
    /// `x ↦ x + (x,δ)μ - ((x,μ) + ½|μ|²(x,δ))δ` (used only as a cross-check).
    pub fn translation_formula(&self, mu: &[Q], x: &AffineVector) -> AffineVector {
        let mu_v = AffineVector::finite(mu.to_vec());
        let xd = self.rs.pair(x, &self.rs.delta()).expect("same rank");
        let xm = self.rs.pair(x, &mu_v).expect("same rank");
        let norm = self.rs.pair_finite(mu, mu);
        let coeff = xm + norm * frac(1, 2) * &xd;
        x.add(&mu_v.scale(&xd)).sub(&self.rs.delta().scale(&coeff))
    }

    /// Defining action `g(p) = w(λ_μ(p + β + kδ))`.
    pub fn act(&self, g: &DaweylElement, p: &AffinePoint) -> AffinePoint {
        let mut shifted = p.clone();
        shifted.finite = rational::add(&shifted.finite, &g.beta);
        shifted.delta += &g.k;
        let lam = self.lambda_matrix(&g.mu).expect("normal forms carry μ ∈ M");
        let mut out = lam.apply_vector(&shifted);
        out.finite = g.w.apply_q(&out.finite);
        out
    }

    /// Printer `w=[word] mu=[coords] beta=[coords] k=[value]`.
    pub fn format(&self, g: &DaweylElement) -> String {
        let word: Vec<String> =
            weyl::reduced_word(self.rs.finite(), &g.w).iter().map(|i| (i + 1).to_string()).collect();
        format!(
            "w=[{}] mu={} beta={} k=[{}]",
            word.join(" "),
            rational::fmt_vec(&g.mu),
            rational::fmt_vec(&g.beta),
            fmt_q(&g.k)
        )
    }
}

impl fmt::Display for DaweylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(w={}, mu={}, beta={}, k={})", self.w, rational::fmt_vec(&self.mu), rational::fmt_vec(&self.beta), fmt_q(&self.k))
    }
}

fn eq_check(report: &mut Report, dw: &DoubleAffineWeyl, id: String, lhs: &DaweylElement, rhs: &DaweylElement) {
    report.check(id, lhs == rhs, || format!("lhs {} ≠ rhs {}", dw.format(lhs), dw.format(rhs)));
}

/// Checks the Bernstein-type relations in the double affine Weyl group:
/// finite conjugation relations over all positive coroots, their negatives
/// and pairwise sums of simple coroots; centrality of `τ_δ`; the `(0,j)`
/// relations in both the general and the reduced forms; and the single
/// reduction relation that replaces them.
pub fn verify_bernstein_relations(dw: &DoubleAffineWeyl) -> Report {
    let rs = dw.root_system();
    let n = rs.rank();
    let fs = rs.finite();
    let mut report = Report::new("bernstein", rs.affine_type().to_string());
    let s: Vec<DaweylElement> = (0..=n).map(|i| dw.s(i).expect("valid")).collect();
    let tau = |v: &AffineVector| dw.tau_affine(v).expect("coroot lattice vector");

    // Test vectors β ∈ Q̊^∨.
    let mut betas: Vec<Vec<Q>> = Vec::new();
    for root in fs.positive_roots() {
        let c = rs.finite_coroot(root);
        betas.push(rational::neg(&c));
        betas.push(c);
    }
    for i in 1..=n {
        for j in i..=n {
            betas.push(rational::add(&rs.simple_coroot(i).finite, &rs.simple_coroot(j).finite));
        }
    }
    for (bi, beta) in betas.iter().enumerate() {
        let tb = dw.tau(beta).expect("coroot lattice");
        for i in 1..=n {
            let alpha = to_q_vec(&fs.simple(i - 1));
            let c = rs.pair_finite(beta, &alpha);
            if c.is_zero() {
                eq_check(&mut report, dw, format!("s{i} commutes with τ_β, (β,α_{i}) = 0, β#{bi}"), &dw.mul(&s[i], &tb), &dw.mul(&tb, &s[i]));
            } else if c == q(-1) {
                let reflected = WeylElement::simple(fs, i - 1).apply_q(beta);
                let rhs = dw.tau(&reflected).expect("coroot lattice");
                eq_check(&mut report, dw, format!("s{i} τ_β s{i} = τ_(s{i} β), (β,α_{i}) = -1, β#{bi}"), &dw.product([&s[i], &tb, &s[i]]), &rhs);
            }
        }
    }

    // Centrality of τ_δ.
    let td = dw.tau_delta(Q::one());
    for (name, g) in dw.generators() {
        eq_check(&mut report, dw, format!("τ_δ commutes with {name}"), &dw.mul(&td, &g), &dw.mul(&g, &td));
    }

    // General (0,j) relations.
    let alpha0 = rs.alpha(0);
    let alpha0_coroot = rs.simple_coroot(0);
    for j in 1..=n {
        let aj = rs.simple_coroot(j);
        let c = -rs.pair(&aj, &alpha0).expect("same rank");
        let c_int = rational::to_i64(&c).expect("integral pairing");
        let r = c_int.div_euclid(2);
        let mu = aj.add(&alpha0_coroot.scale(&q(r)));
        let tm = tau(&mu);
        if c_int % 2 == 0 {
            eq_check(&mut report, dw, format!("s0 commutes with τ_μ, even pairing, j={j}"), &dw.mul(&s[0], &tm), &dw.mul(&tm, &s[0]));
        } else {
            let image = rs.reflect(&alpha0, &mu).expect("real root");
            eq_check(&mut report, dw, format!("s0 τ_μ s0 = τ_(s0 μ), odd pairing, j={j}"), &dw.product([&s[0], &tm, &s[0]]), &tau(&image));
        }
    }

    // Reduced forms of the (0,j) relations (α_0^∨ = δ - θ^∨ when a_0 = 1).
    let theta_q = to_q_vec(rs.theta());
    if rs.a0() == 1 {
        let theta_coroot = AffineVector::finite(rs.finite_coroot(rs.theta()));
        for j in 1..=n {
            let aj = rs.simple_coroot(j);
            let c = rs.pair_finite(&aj.finite, &theta_q);
            if c.is_zero() {
                let t = tau(&aj);
                eq_check(&mut report, dw, format!("s0 commutes with τ_(α_j^∨), (α_j^∨,θ) = 0, j={j}"), &dw.mul(&s[0], &t), &dw.mul(&t, &s[0]));
            } else if c == q(1) {
                let t = tau(&aj);
                let rhs = tau(&aj.add(&alpha0_coroot));
                eq_check(&mut report, dw, format!("s0 τ_(α_j^∨) s0 = τ_(α_j^∨ + α_0^∨), (α_j^∨,θ) = 1, j={j}"), &dw.product([&s[0], &t, &s[0]]), &rhs);
            } else if c == q(2) {
                let t = tau(&aj.sub(&theta_coroot));
                eq_check(&mut report, dw, format!("s0 commutes with τ_(α_j^∨ - θ^∨), (α_j^∨,θ) = 2, j={j}"), &dw.mul(&s[0], &t), &dw.mul(&t, &s[0]));
            } else {
                report.check(format!("(α_j^∨,θ) ∈ {{0, 1, 2}}, j={j}"), false, || format!("unexpected pairing {}", fmt_q(&c)));
            }
        }
        let it = rs.i_theta();
        let ai = rs.simple_coroot(it);
        if rs.affine_type().is_untwisted() {
            match rs.ell0() {
                1 => {
                    let t = tau(&ai);
                    let rhs = tau(&ai.add(&alpha0_coroot));
                    eq_check(&mut report, dw, "reduction at i_θ, ℓ₀ = 1".into(), &dw.product([&s[0], &t, &s[0]]), &rhs);
                }
                2 => {
                    let t = tau(&ai.sub(&theta_coroot));
                    eq_check(&mut report, dw, "reduction at i_θ, ℓ₀ = 2".into(), &dw.mul(&s[0], &t), &dw.mul(&t, &s[0]));
                }
                _ => {}
            }
        } else {
            let phi_coroot = AffineVector::finite(rs.finite_coroot(rs.phi()));
            let t = tau(&phi_coroot);
            let rhs = tau(&phi_coroot.add(&alpha0_coroot));
            eq_check(&mut report, dw, "reduction at φ^∨ (twisted)".into(), &dw.product([&s[0], &t, &s[0]]), &rhs);
        }
    }
    report
}

/// True when `τ_δ` commutes with every generator and `τ_δ^k ≠ 1` for `1 ≤ k ≤ 10`.
pub fn center_contains_tau_delta(dw: &DoubleAffineWeyl) -> bool {
    let td = dw.tau_delta(Q::one());
    let commutes = dw.generators().iter().all(|(_, g)| dw.mul(&td, g) == dw.mul(g, &td));
    let id = dw.identity();
    commutes && (1..=10).all(|k| dw.pow(&td, k) != id)
}

/// The morphism `W̃(C_n^(1)) → W̃^c(A_{2n}^(2))` on normal forms: it fixes
/// the finite part and halves `μ`, `β` and `k` (in simple-root coordinates).
pub fn comparison_map(source: &DaweylElement) -> DaweylElement {
    let half = frac(1, 2);
    DaweylElement {
        w: source.w.clone(),
        mu: rational::scale(&half, &source.mu),
        beta: rational::scale(&half, &source.beta),
        k: &source.k * &half,
    }
}

/// Verifies the comparison between `C_n^(1)` (`A_1^(1)` for `n = 1`) and
/// `A_{2n}^(2)`: generator correspondence, homomorphism property on a fixed
/// sample of products, and triviality of the kernel generators.
pub fn a2n2_comparison(n: usize) -> Result<Report> {
    let source_type = if n == 1 {
        AffineType::untwisted(crate::rootsys::FiniteKind::A, 1)?
    } else {
        AffineType::untwisted(crate::rootsys::FiniteKind::C, n)?
    };
    let src = DoubleAffineWeyl::of_type(source_type)?;
    let tgt = DoubleAffineWeyl::of_type(AffineType::a_even_twisted(n)?)?;
    let mut report = Report::new("a2n2-comparison", format!("{source_type} -> {}", tgt.root_system().affine_type()));
    for i in 0..=n {
        let image = comparison_map(&src.s(i)?);
        eq_check(&mut report, &tgt, format!("s{i} ↦ s{i}"), &image, &tgt.s(i)?);
    }
    // X_{θ^∨} ↦ X_{ε_1} = τ_{θ^∨} in the target; X_δ ↦ τ_{δ/2}.
    let src_theta_c = src.tau(&src.root_system().finite_coroot(src.root_system().theta()))?;
    let tgt_theta_c = tgt.tau(&tgt.root_system().finite_coroot(tgt.root_system().theta()))?;
    eq_check(&mut report, &tgt, "X_{√2ε₁} ↦ X_{ε₁}".into(), &comparison_map(&src_theta_c), &tgt_theta_c);
    eq_check(
        &mut report,
        &tgt,
        "X_δ ↦ X_{δ/2}".into(),
        &comparison_map(&src.tau_delta(Q::one())),
        &tgt.tau_delta(frac(1, 2)),
    );
    // Homomorphism on a deterministic sample of products of generators.
    let gens: Vec<DaweylElement> = src.generators().into_iter().map(|(_, g)| g).collect();
    let mut hom_ok = true;
    for a in &gens {
        for b in &gens {
            let lhs = comparison_map(&src.mul(a, b));
            let rhs = tgt.mul(&comparison_map(a), &comparison_map(b));
            hom_ok &= lhs == rhs;
        }
    }
    report.check("homomorphism on generator pairs", hom_ok, || "product not preserved".into());
    // Kernel generator of the c-version: (s_0 τ_{α_0^∨})^2.
    let k2 = src.pow(&src.mul(&src.s(0)?, &src.tau_simple_coroot(0)?), 2);
    eq_check(&mut report, &tgt, "kernel (s0 τ_{α0∨})² ↦ 1 (central extension)".into(), &comparison_map(&k2), &tgt.identity());
    // Kernel generator of the plain version, evaluated with X_δ ↦ X_δ:
    // τ_δ (s_0 τ_{-ε_1})^2 = 1 in W̃(A_{2n}^(2)).
    let s0 = tgt.s(0)?;
    let k1 = tgt.mul(&tgt.tau_delta(Q::one()), &tgt.pow(&tgt.mul(&s0, &tgt.inv(&tgt_theta_c)), 2));
    eq_check(&mut report, &tgt, "kernel τ_δ(s0 τ_{-ε₁})² = 1".into(), &k1, &tgt.identity());
    let shifted = tgt.pow(&tgt.mul(&s0, &tgt.mul(&tgt.tau_delta(Q::one()), &tgt.inv(&tgt_theta_c))), 2);
    eq_check(&mut report, &tgt, "(s0 τ_{δ-ε₁})² = τ_δ".into(), &shifted, &tgt.tau_delta(Q::one()));
    Ok(report)
}
