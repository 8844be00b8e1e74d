//! Index, eigenspace decomposition and the trace invariants built on it.
//!
//! Keys of the decomposition are triples `(a, i, j) ∈ Z₂ × Z_n × Z_n`;
//! `H_{a,i,j}` is the set of `u` with `S²(u) = (−1)^a ω^i u` and
//! `ug = ω^j u`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::cyclofield::{CycField, CycNumber};
use crate::error::{Error, Result};
use crate::hopf::{HopfElement, HopfPresentation};
use crate::integrals::{IntegralPair, TraceEvaluator, TraceVariant};
use crate::linalg::{Mat, Subspace};

/// `(a, i, j)` with `a ∈ {0, 1}` and `i, j ∈ 0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Key {
    pub a: u8,
    pub i: usize,
    pub j: usize,
}

impl Key {
    pub fn new(a: u8, i: usize, j: usize) -> Self {
        Key { a, i, j }
    }

    /// `self + other` in `Z₂ × Z_n × Z_n`.
    pub fn add(self, other: Key, n: usize) -> Key {
        Key::new((self.a + other.a) % 2, (self.i + other.i) % n, (self.j + other.j) % n)
    }

    pub fn neg(self, n: usize) -> Key {
        Key::new(self.a % 2, (n - self.i % n) % n, (n - self.j % n) % n)
    }

    /// `x − self`.
    pub fn complement(self, x: Key, n: usize) -> Key {
        x.add(self.neg(n), n)
    }

    pub fn all(n: usize) -> impl Iterator<Item = Key> {
        (0..2u8).flat_map(move |a| (0..n).flat_map(move |i| (0..n).map(move |j| Key::new(a, i, j))))
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.i, self.j)
    }
}

// ---- index ----

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexData {
    pub n: usize,
    pub s4_order: usize,
    pub g_order: usize,
}

/// Search bound for operator orders: `4·dim·N`.
pub fn index_bound(h: &HopfPresentation) -> usize {
    4 * h.dim() * h.cyclotomic_order() as usize
}

/// Least `n` with `S^{4n} = id` and `gⁿ = 1`.
pub fn compute_index(h: &HopfPresentation, pair: &IntegralPair) -> Result<IndexData> {
    let bound = index_bound(h);
    let s4 = h.s_power(4)?;
    let s4_order = s4.operator_order(bound)?;
    let g_order = h.right_mult_matrix(&pair.g_dist).operator_order(bound)?;
    let n = s4_order.lcm(&g_order);
    Ok(IndexData { n, s4_order, g_order })
}

// ---- ω and x(ω, H) ----

/// `ω = ζ_N^{k·N/n}`, which must be a primitive `n`-th root of unity.
pub fn omega_from_power(field: &CycField, n: usize, k: i64) -> Result<CycNumber> {
    let big_n = field.order() as usize;
    if n == 0 || !big_n.is_multiple_of(n) {
        return Err(Error::BadOmega { n, detail: format!("Q(zeta_{big_n}) has no primitive {n}-th root of unity") });
    }
    if k.rem_euclid(n as i64).gcd(&(n as i64)) != 1 {
        return Err(Error::BadOmega { n, detail: format!("power {k} is not coprime to {n}") });
    }
    Ok(field.root_of_unity(k * (big_n / n) as i64))
}

/// The unique `t ∈ Z_n` with `α(g) = ωᵗ`.
pub fn x_exponent(h: &HopfPresentation, pair: &IntegralPair, n: usize, omega: &CycNumber) -> Result<usize> {
    let alpha_g = pair.alpha_dist.eval(&pair.g_dist);
    let mut power = h.field().one();
    for t in 0..n {
        if power == alpha_g {
            return Ok(t);
        }
        power = &power * omega;
    }
    Err(Error::NotARootPower)
}

// ---- eigenspace decomposition ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenTable {
    pub n: usize,
    pub omega_power: i64,
    pub omega: CycNumber,
    pub x_exp: usize,
    pub spaces: BTreeMap<Key, Subspace>,
    pub dims: BTreeMap<Key, usize>,
}

impl EigenTable {
    /// `𝐱 = (0, −x, x)`.
    pub fn x_vec(&self) -> Key {
        Key::new(0, (self.n - self.x_exp) % self.n, self.x_exp)
    }

    pub fn dim(&self, k: Key) -> usize {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    /// `ℓ` with `2ℓ = x`; `n` is odd.
    pub fn ell(&self) -> usize {
        self.x_exp * (self.n + 1) / 2 % self.n
    }

    /// Eigenvalue of `S²` on `H_{a,i,j}`: `(−1)^a ωⁱ`.
    pub fn s2_eigenvalue(&self, k: Key) -> Result<CycNumber> {
        let v = self.omega.pow(k.i as i64)?;
        Ok(if k.a == 1 { -v } else { v })
    }
}

fn require_odd_index(n: usize) -> Result<()> {
    if n == 1 {
        return Err(Error::IndexOne);
    }
    if n.is_multiple_of(2) {
        return Err(Error::IndexEven { n });
    }
    Ok(())
}

/// The decomposition `H = ⊕ H_{a,i,j}` for `ω = ζ_N^{k·N/n}`.
pub fn eigen_decomposition(h: &HopfPresentation, pair: &IntegralPair, omega_power: i64) -> Result<EigenTable> {
    let index = compute_index(h, pair)?;
    let n = index.n;
    require_odd_index(n)?;
    let omega = omega_from_power(h.field(), n, omega_power)?;
    let x_exp = x_exponent(h, pair, n, &omega)?;
    let s2 = h.s_power(2)?;
    let rg = h.right_mult_matrix(&pair.g_dist);
    if s2.matmul(&rg) != rg.matmul(&s2) {
        return Err(Error::NonCommuting);
    }
    let mut s2_spaces = Vec::with_capacity(2 * n);
    for a in 0..2u8 {
        for i in 0..n {
            let v = omega.pow(i as i64)?;
            let v = if a == 1 { -v } else { v };
            s2_spaces.push(s2.eigenspace(&v)?);
        }
    }
    let mut g_spaces = Vec::with_capacity(n);
    for j in 0..n {
        g_spaces.push(rg.eigenspace(&omega.pow(j as i64)?)?);
    }
    let mut spaces = BTreeMap::new();
    let mut dims = BTreeMap::new();
    for key in Key::all(n) {
        let s2_space = &s2_spaces[key.a as usize * n + key.i];
        let space = if s2_space.dim() == 0 { s2_space.clone() } else { s2_space.intersection(&g_spaces[key.j]) };
        dims.insert(key, space.dim());
        spaces.insert(key, space);
    }
    let found: usize = dims.values().sum();
    if found != h.dim() {
        return Err(Error::NonSplitting {
            found,
            expected: h.dim(),
            suggested: (h.cyclotomic_order() as usize).lcm(&(2 * n)) as u32,
        });
    }
    Ok(EigenTable { n, omega_power, omega, x_exp, spaces, dims })
}

/// Outcome of a dimension identity, with the first violating keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimCheck {
    pub passed: bool,
    pub witness: Option<String>,
}

impl DimCheck {
    fn pass() -> Self {
        DimCheck { passed: true, witness: None }
    }

    fn fail(w: String) -> Self {
        DimCheck { passed: false, witness: Some(w) }
    }
}

/// `dim H_𝐚 = dim H_{𝐱−𝐚}` for every key.
pub fn check_dim_symmetry(t: &EigenTable) -> DimCheck {
    let x = t.x_vec();
    for k in Key::all(t.n) {
        let partner = k.complement(x, t.n);
        if t.dim(k) != t.dim(partner) {
            return DimCheck::fail(format!("dim{k} = {} but dim{partner} = {}", t.dim(k), t.dim(partner)));
        }
    }
    DimCheck::pass()
}

// ---- eigenbasis and the normal form ----

/// The eigenvectors of all `H_𝐚` as the columns of one invertible matrix.
#[derive(Clone, Debug)]
pub struct Eigenbasis {
    pub p: Mat,
    pub p_inv: Mat,
    pub ranges: BTreeMap<Key, std::ops::Range<usize>>,
}

impl Eigenbasis {
    pub fn new(h: &HopfPresentation, t: &EigenTable) -> Result<Self> {
        let mut cols = Vec::with_capacity(h.dim());
        let mut ranges = BTreeMap::new();
        for (k, space) in &t.spaces {
            if space.dim() == 0 {
                continue;
            }
            let start = cols.len();
            cols.extend(space.vectors());
            ranges.insert(*k, start..cols.len());
        }
        if cols.len() != h.dim() {
            return Err(Error::NonSplitting { found: cols.len(), expected: h.dim(), suggested: h.cyclotomic_order() });
        }
        let p = Mat::from_columns(h.field(), h.dim(), &cols);
        let p_inv = p.inverse()?;
        Ok(Eigenbasis { p, p_inv, ranges })
    }

    fn indices(&self, k: Key) -> Vec<usize> {
        self.ranges.get(&k).cloned().map(|r| r.collect()).unwrap_or_default()
    }

    /// `E_𝐚`, the projection onto `H_𝐚` along the other summands.
    pub fn projection(&self, k: Key) -> Mat {
        let idx = self.indices(k);
        let n = self.p.rows();
        if idx.is_empty() {
            return Mat::zeros(self.p.field(), n, n);
        }
        self.p.select_cols(&idx).matmul(&self.p_inv.select_rows(&idx))
    }

    /// A tensor-square element in eigenbasis coordinates: `P⁻¹ T P⁻ᵀ`.
    pub fn to_eigen(&self, t: &Mat) -> Mat {
        self.p_inv.matmul(t).matmul(&self.p_inv.transpose())
    }

    /// The `(𝐚, 𝐛)` component `(E_𝐚 ⊗ E_𝐛)T` given `T` in eigen coordinates.
    pub fn block_from_eigen(&self, t_eigen: &Mat, a: Key, b: Key) -> Option<Mat> {
        let (ia, ib) = (self.indices(a), self.indices(b));
        if ia.is_empty() || ib.is_empty() {
            return None;
        }
        let sub = t_eigen.block(&ia, &ib);
        if sub.is_zero() {
            return None;
        }
        Some(self.p.select_cols(&ia).matmul(&sub).matmul(&self.p.select_cols(&ib).transpose()))
    }
}

#[derive(Clone, Debug)]
pub struct NormalForm {
    pub x_vec: Key,
    /// Nonzero components `u_𝐚 ⊗ v_{𝐱−𝐚}` of `Δ(Λ)`, in original coordinates.
    pub components: BTreeMap<Key, Mat>,
    /// `Δ(Λ)` in eigenbasis coordinates.
    pub eigen_coords: Mat,
}

impl NormalForm {
    pub fn reconstruct(&self, field: &CycField, dim: usize) -> Mat {
        self.components.values().fold(Mat::zeros(field, dim, dim), |acc, m| acc.add(m))
    }

    /// `Σ_𝐚 (id⊗ε)(u_𝐚 ⊗ v_{𝐱−𝐚})`.
    pub fn counit_collapse(&self, h: &HopfPresentation) -> HopfElement {
        let total = self.reconstruct(h.field(), h.dim());
        HopfElement(total.mul_vec(h.counit_coords()))
    }
}

/// Splits `Δ(Λ)` into the blocks `(E_𝐚 ⊗ E_𝐛)Δ(Λ)` and checks every nonzero
/// block has `𝐛 = 𝐱 − 𝐚`.
pub fn normal_form(
    h: &HopfPresentation,
    pair: &IntegralPair,
    t: &EigenTable,
    basis: &Eigenbasis,
) -> Result<NormalForm> {
    let c = h.comult(&pair.big_lambda);
    let ce = basis.to_eigen(&c);
    let x = t.x_vec();
    let mut components = BTreeMap::new();
    for &a in basis.ranges.keys() {
        for &b in basis.ranges.keys() {
            let Some(block) = basis.block_from_eigen(&ce, a, b) else { continue };
            if b != a.complement(x, t.n) {
                return Err(Error::OffPatternBlock { a: a.to_string(), b: b.to_string() });
            }
            components.insert(a, block);
        }
    }
    Ok(NormalForm { x_vec: x, components, eigen_coords: ce })
}

/// `Tr(E_𝐚)` three ways, next to `dim H_𝐚`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionTrace {
    pub dim: usize,
    pub direct: CycNumber,
    pub trace_formula: CycNumber,
    /// `λ(S(v_{𝐱−𝐚}) u_𝐚)` read off the normal form.
    pub normal_form: CycNumber,
}

impl ProjectionTrace {
    pub fn consistent(&self) -> bool {
        let d = self.direct.field().from_int(self.dim as i64);
        self.direct == d && self.trace_formula == d && self.normal_form == d
    }
}

pub fn projection_traces(
    h: &HopfPresentation,
    pair: &IntegralPair,
    t: &EigenTable,
    basis: &Eigenbasis,
    nf: &NormalForm,
) -> Result<BTreeMap<Key, ProjectionTrace>> {
    let eval = TraceEvaluator::new(h, pair)?;
    let s = h.antipode_matrix()?;
    let n = h.dim();
    // λ(S(e_k) e_j)
    let weights = {
        let b = crate::integrals::pairing_matrix(h, &pair.lambda);
        s.transpose().matmul(&b)
    };
    let mut out = BTreeMap::new();
    for k in Key::all(t.n) {
        let e = basis.projection(k);
        let direct = e.trace()?;
        let trace_formula = if e.is_zero() { h.field().zero() } else { eval.trace(&e, TraceVariant::One)? };
        let normal_form = match nf.components.get(&k) {
            Some(block) => {
                let mut acc = h.field().zero();
                for j in 0..n {
                    for kk in 0..n {
                        let c = block.get(j, kk);
                        if !c.is_zero() {
                            acc = acc + &(c * weights.get(kk, j));
                        }
                    }
                }
                acc
            }
            None => h.field().zero(),
        };
        out.insert(k, ProjectionTrace { dim: t.dim(k), direct, trace_formula, normal_form });
    }
    Ok(out)
}

// ---- the bilinear form ----

/// Properties of a Gram matrix that matter for an alternating form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramVerdict {
    pub dim: usize,
    pub antisymmetric: bool,
    pub zero_diagonal: bool,
    pub nondegenerate: bool,
}

impl GramVerdict {
    pub fn alternating(&self) -> bool {
        self.antisymmetric && self.zero_diagonal
    }

    pub fn even_dim(&self) -> bool {
        self.dim.is_multiple_of(2)
    }
}

pub fn check_alternating_gram(m: &Mat) -> GramVerdict {
    let dim = m.rows();
    let antisymmetric = m.add(&m.transpose()).is_zero();
    let zero_diagonal = (0..dim).all(|i| m.get(i, i).is_zero());
    GramVerdict { dim, antisymmetric, zero_diagonal, nondegenerate: m.rank() == dim }
}

#[derive(Clone, Debug)]
pub struct AlternatingReport {
    pub ell: usize,
    pub v_key: Key,
    pub global_rank: usize,
    pub global_nondegenerate: bool,
    pub v_gram: GramVerdict,
    /// Keys whose `Δ^op(Λ)` block differs from `(−1)^a ω^{−i−j}` times the
    /// `Δ(Λ)` block.
    pub delta_op_failures: Vec<Key>,
    pub delta_op_total_ok: bool,
}

impl AlternatingReport {
    pub fn delta_op_ok(&self) -> bool {
        self.delta_op_failures.is_empty() && self.delta_op_total_ok
    }
}

/// The form `(f, h) = (f⊗h)Δ(Λ)` on `H*`, its restriction to the
/// functionals supported on `H_{1,−ℓ,ℓ}`, and the `Δ^op(Λ)` expansion.
pub fn alternating_form_check(
    h: &HopfPresentation,
    pair: &IntegralPair,
    t: &EigenTable,
    basis: &Eigenbasis,
    nf: &NormalForm,
) -> Result<AlternatingReport> {
    require_odd_index(t.n)?;
    let n = t.n;
    let ell = t.ell();
    let v_key = Key::new(1, (n - ell) % n, ell);
    let c = h.comult(&pair.big_lambda);
    let global_rank = c.rank();
    let idx = basis.indices(v_key);
    let v_gram = check_alternating_gram(&nf.eigen_coords.block(&idx, &idx));

    let op_eigen = basis.to_eigen(&c.transpose());
    let x = t.x_vec();
    let mut expected = Mat::zeros(h.field(), h.dim(), h.dim());
    let mut failures = Vec::new();
    let omega_inv = t.omega.inv()?;
    for (&a, range) in &basis.ranges {
        let b = a.complement(x, n);
        let mut scale = omega_inv.pow((a.i + a.j) as i64)?;
        if a.a == 1 {
            scale = -scale;
        }
        let ia: Vec<usize> = range.clone().collect();
        let ib = basis.indices(b);
        let actual = op_eigen.block(&ia, &ib);
        let predicted = nf.eigen_coords.block(&ia, &ib).scale(&scale);
        if actual != predicted {
            failures.push(a);
        }
        for (r, &row) in ia.iter().enumerate() {
            for (s, &col) in ib.iter().enumerate() {
                expected.set(row, col, predicted.get(r, s).clone());
            }
        }
    }
    let delta_op_total_ok = expected == op_eigen;
    Ok(AlternatingReport {
        ell,
        v_key,
        global_rank,
        global_nondegenerate: global_rank == h.dim(),
        v_gram,
        delta_op_failures: failures,
        delta_op_total_ok,
    })
}

// ---- H₊, H₋ and Tr(S^{2p}) ----

/// `(dim H₊, dim H₋)` for the `±1` eigenspaces of `S^{2n}`.
pub fn h_plus_minus(h: &HopfPresentation, n: usize) -> Result<(usize, usize)> {
    let s2n = h.s_power(2 * n as i64)?;
    let one = h.field().one();
    let plus = s2n.eigenspace(&one)?.dim();
    let minus = s2n.eigenspace(&-one)?.dim();
    if plus + minus != h.dim() {
        return Err(Error::SpectrumNotPlusMinusOne);
    }
    Ok((plus, minus))
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `(p, q)` with `p ≤ q` odd primes and `pq = dim`, if any.
pub fn odd_prime_pair(dim: usize) -> Option<(u64, u64)> {
    let dim = dim as u64;
    (3..)
        .step_by(2)
        .take_while(|p| p * p <= dim)
        .find(|&p| dim.is_multiple_of(p) && is_prime(p) && is_prime(dim / p))
        .map(|p| (p, dim / p))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceS2pReport {
    pub p: u64,
    pub q: u64,
    pub trace_direct: CycNumber,
    pub trace_formula: CycNumber,
    pub trace_from_dims: i64,
    pub dim_h_plus: usize,
    pub dim_h_minus: usize,
    /// `Tr(S^{2p}) / p²` when that is an integer.
    pub d: Option<i64>,
}

impl TraceS2pReport {
    pub fn traces_agree(&self) -> bool {
        let f = self.trace_direct.field();
        self.trace_direct == self.trace_formula && self.trace_direct == f.from_int(self.trace_from_dims)
    }

    pub fn d_odd(&self) -> bool {
        self.d.is_some_and(|d| d.rem_euclid(2) == 1)
    }

    /// `d ≡ pq (mod 4)`.
    pub fn congruence_ok(&self) -> bool {
        self.d.is_some_and(|d| d.rem_euclid(4) == ((self.p * self.q) % 4) as i64)
    }

    /// `dim H₋ = p(q − pd)/2`.
    pub fn h_minus_formula_ok(&self) -> bool {
        let (p, q) = (self.p as i64, self.q as i64);
        self.d.is_some_and(|d| 2 * self.dim_h_minus as i64 == p * (q - p * d))
    }
}

/// `Tr(S^{2p})`, `d` and the mod-4 data for a non-semisimple algebra of
/// dimension `pq` and index `p`.
pub fn trace_s2p_report(h: &HopfPresentation, pair: &IntegralPair, p: u64, q: u64) -> Result<TraceS2pReport> {
    let fail = |why: String| Err(Error::PreconditionFailed(why));
    if !(is_prime(p) && is_prime(q) && p % 2 == 1 && q % 2 == 1 && p <= q) {
        return fail(format!("{p} and {q} are not odd primes with p <= q"));
    }
    if (p * q) as usize != h.dim() {
        return fail(format!("dimension {} is not {p}*{q}", h.dim()));
    }
    if crate::integrals::is_semisimple(h, pair) {
        return fail("semisimple".into());
    }
    let index = compute_index(h, pair)?;
    if index.n as u64 != p {
        return fail(format!("index {} is not {p}", index.n));
    }
    let s2p = h.s_power(2 * p as i64)?;
    let trace_direct = s2p.trace()?;
    let trace_formula = TraceEvaluator::new(h, pair)?.trace(&s2p, TraceVariant::One)?;
    let (plus, minus) = h_plus_minus(h, p as usize)?;
    let d = trace_direct.as_integer().and_then(|t| {
        let p2 = BigInt::from(p * p);
        if (&t % &p2).is_zero() {
            (t / p2).to_i64()
        } else {
            None
        }
    });
    Ok(TraceS2pReport {
        p,
        q,
        trace_direct,
        trace_formula,
        trace_from_dims: plus as i64 - minus as i64,
        dim_h_plus: plus,
        dim_h_minus: minus,
        d,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimDifferenceReport {
    pub difference: DimCheck,
    /// `None` when `α` is trivial and the identity is not claimed.
    pub j_independence: Option<DimCheck>,
}

/// `dim H_{0,i,j} − dim H_{1,i,j} = d` for all `i, j`, and, when `α` is
/// nontrivial, `dim H_{a,i,j}` independent of `j`.
pub fn dim_difference_check(
    h: &HopfPresentation,
    pair: &IntegralPair,
    t: &EigenTable,
    d: i64,
) -> Result<DimDifferenceReport> {
    if pair.g_dist == h.one() {
        return Err(Error::PreconditionFailed("distinguished group-like g is trivial".into()));
    }
    let n = t.n;
    let mut difference = DimCheck::pass();
    'outer: for i in 0..n {
        for j in 0..n {
            let diff = t.dim(Key::new(0, i, j)) as i64 - t.dim(Key::new(1, i, j)) as i64;
            if diff != d {
                difference = DimCheck::fail(format!("(i,j) = ({i},{j}): difference {diff} != {d}"));
                break 'outer;
            }
        }
    }
    let j_independence = if pair.alpha_dist.0 == h.counit_coords() {
        None
    } else {
        let mut check = DimCheck::pass();
        'outer2: for a in 0..2u8 {
            for i in 0..n {
                let base = t.dim(Key::new(a, i, 0));
                for j in 1..n {
                    if t.dim(Key::new(a, i, j)) != base {
                        check = DimCheck::fail(format!(
                            "dim({a},{i},{j}) = {} but dim({a},{i},0) = {base}",
                            t.dim(Key::new(a, i, j))
                        ));
                        break 'outer2;
                    }
                }
            }
        }
        Some(check)
    };
    Ok(DimDifferenceReport { difference, j_independence })
}

// ---- coradical ----

/// `C = Jac(H*)^⊥`, the coradical.
pub fn coradical(h: &HopfPresentation) -> Subspace {
    h.dual_jacobson_radical().annihilator()
}

/// True if `Δ(c) ∈ C ⊗ C` for every basis vector `c` of `C`.
pub fn is_subcoalgebra(h: &HopfPresentation, c: &Subspace) -> bool {
    c.vectors().into_iter().all(|v| {
        let delta = h.comult(&HopfElement(v));
        let n = h.dim();
        (0..n).all(|k| c.contains(&delta.col(k))) && (0..n).all(|j| c.contains(delta.row(j)))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoradicalReport {
    pub dim_c: usize,
    pub subcoalgebra: bool,
    pub trace_on_c: CycNumber,
    pub trace_on_quotient: CycNumber,
    pub trace_total: CycNumber,
    pub grouplike_count: usize,
}

impl CoradicalReport {
    pub fn split_ok(&self) -> bool {
        &self.trace_on_c + &self.trace_on_quotient == self.trace_total
    }

    pub fn pointed(&self) -> bool {
        self.dim_c == self.grouplike_count
    }

    /// `Tr(S^{2p}|_C) ≥ p`, false when the trace is not rational.
    pub fn trace_on_c_at_least(&self, p: u64) -> bool {
        self.trace_on_c.as_rational().is_some_and(|r| r >= crate::cyclofield::Rational::from_integer(BigInt::from(p)))
    }

    pub fn dim_c_at_least(&self, p: u64) -> bool {
        self.dim_c as u64 >= p
    }
}

/// Traces of `S^{2p}` on `C` and on `H/C`, read off the block-triangular
/// form in a basis of `C` extended by standard vectors.
pub fn coradical_traces(h: &HopfPresentation, c: &Subspace, p: u64) -> Result<CoradicalReport> {
    let s2p = h.s_power(2 * p as i64)?;
    if !c.is_invariant_under(&s2p) {
        return Err(Error::NotInvariant);
    }
    let n = h.dim();
    let mut cols = c.vectors();
    for k in c.complement_indices() {
        let mut e = vec![h.field().zero(); n];
        e[k] = h.field().one();
        cols.push(e);
    }
    let q = Mat::from_columns(h.field(), n, &cols);
    let conj = q.inverse()?.matmul(&s2p).matmul(&q);
    let m = c.dim();
    let zero = h.field().zero();
    let trace_on_c = (0..m).fold(zero.clone(), |acc, i| acc + conj.get(i, i));
    let trace_on_quotient = (m..n).fold(zero, |acc, i| acc + conj.get(i, i));
    let grouplike_count = h.find_grouplikes()?.len();
    Ok(CoradicalReport {
        dim_c: m,
        subcoalgebra: is_subcoalgebra(h, c),
        trace_on_c,
        trace_on_quotient,
        trace_total: s2p.trace()?,
        grouplike_count,
    })
}

/// The value of a rational-integer scalar, if it fits in `i64`.
pub fn integer_value(x: &CycNumber) -> Option<i64> {
    x.as_integer().and_then(|v| v.to_i64())
}
