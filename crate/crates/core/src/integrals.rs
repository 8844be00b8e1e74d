//! Integrals, distinguished group-likes, the trace formula and the `S⁴`
//! formula.

use crate::cyclofield::CycNumber;
use crate::error::{Error, Result};
use crate::hopf::{Functional, HopfElement, HopfPresentation};
use crate::linalg::{Mat, Subspace};

/// Scales so the first nonzero coordinate is 1.
fn canonical_scaling(v: Vec<CycNumber>) -> Vec<CycNumber> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            v.iter().map(|x| x * &inv).collect()
        }
        None => v,
    }
}

fn one_dim(space: Subspace, side: &'static str) -> Result<Vec<CycNumber>> {
    if space.dim() != 1 {
        return Err(Error::IntegralSpaceNotOneDim { side, dim: space.dim() });
    }
    Ok(canonical_scaling(space.vectors().remove(0)))
}

/// The left integral `Λ` (`aΛ = ε(a)Λ`), first nonzero coordinate 1.
/// Uses only the algebra structure and the counit.
pub fn left_integral(h: &HopfPresentation) -> Result<HopfElement> {
    let n = h.dim();
    let field = h.field();
    // row (i, k): Σ_j m[i][j][k] Λ_j − ε_i Λ_k = 0
    let mut sys = Mat::zeros(field, n * n, n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mul_basis(i, j) {
                let v = sys.get(i * n + k, j) + c;
                sys.set(i * n + k, j, v);
            }
        }
        let eps = &h.counit_coords()[i];
        if !eps.is_zero() {
            for k in 0..n {
                let v = sys.get(i * n + k, k) - eps;
                sys.set(i * n + k, k, v);
            }
        }
    }
    Ok(HopfElement(one_dim(sys.null_space(), "left")?))
}

/// The right integral `λ` of `H*` (`λβ = β(1)λ`), first nonzero coordinate 1.
/// Uses only the coalgebra structure and the unit.
pub fn right_integral_dual(h: &HopfPresentation) -> Result<Functional> {
    let n = h.dim();
    let field = h.field();
    // (λ·e_q*)(e_r) = Σ_p d[r][p][q] λ_p must equal 1_q λ_r
    let mut sys = Mat::zeros(field, n * n, n);
    for r in 0..n {
        for (p, q, c) in h.comult_basis(r) {
            let v = sys.get(q * n + r, *p) + c;
            sys.set(q * n + r, *p, v);
        }
    }
    for (q, u) in h.unit_coords().iter().enumerate() {
        if u.is_zero() {
            continue;
        }
        for r in 0..n {
            let v = sys.get(q * n + r, r) - u;
            sys.set(q * n + r, r, v);
        }
    }
    Ok(Functional(one_dim(sys.null_space(), "right dual")?))
}

/// `B[p][q] = λ(e_p e_q)`.
pub fn pairing_matrix(h: &HopfPresentation, lambda: &Functional) -> Mat {
    let n = h.dim();
    Mat::from_fn(h.field(), n, n, |p, q| {
        h.mul_basis(p, q).iter().fold(h.field().zero(), |acc, (r, c)| acc + &(c * &lambda.0[*r]))
    })
}

/// Left integral of `H`, right integral of `H*`, and the distinguished
/// group-likes they determine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralPair {
    pub big_lambda: HopfElement,
    pub lambda: Functional,
    pub normalized: bool,
    pub g_dist: HopfElement,
    pub alpha_dist: Functional,
}

impl IntegralPair {
    /// Both integrals in canonical scaling, not yet normalized.
    pub fn compute(h: &HopfPresentation) -> Result<Self> {
        let big_lambda = left_integral(h)?;
        let lambda = right_integral_dual(h)?;
        let g_dist = distinguished_g_from(h, &lambda)?;
        let alpha_dist = distinguished_alpha_from(h, &big_lambda)?;
        let normalized = lambda.eval(&big_lambda).is_one();
        Ok(IntegralPair { big_lambda, lambda, normalized, g_dist, alpha_dist })
    }

    /// Computed and normalized so that `λ(Λ) = 1`.
    pub fn normalized(h: &HopfPresentation) -> Result<Self> {
        Self::compute(h)?.normalize()
    }

    /// Rescales `λ` so that `λ(Λ) = 1`; `Λ` keeps its scaling.
    pub fn normalize(self) -> Result<Self> {
        let pairing = self.lambda.eval(&self.big_lambda);
        if pairing.is_zero() {
            return Err(Error::DegeneratePairing);
        }
        let lambda = self.lambda.scale(&pairing.inv()?);
        Ok(IntegralPair { lambda, normalized: true, ..self })
    }

    /// Replaces `Λ` by `cΛ` and `λ` by `λ/c`.
    pub fn rescale(&self, c: &CycNumber) -> Result<Self> {
        Ok(IntegralPair { big_lambda: self.big_lambda.scale(c), lambda: self.lambda.scale(&c.inv()?), ..self.clone() })
    }

    pub fn pairing(&self) -> CycNumber {
        self.lambda.eval(&self.big_lambda)
    }
}

fn distinguished_g_from(h: &HopfPresentation, lambda: &Functional) -> Result<HopfElement> {
    let (lead, lead_val) = lambda
        .0
        .iter()
        .enumerate()
        .find(|(_, x)| !x.is_zero())
        .ok_or_else(|| Error::NotProportional("λ is zero".into()))?;
    let lead_inv = lead_val.inv()?;
    let mut coords = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        let prod = h.convolve(&h.dual_basis_functional(i), lambda);
        let c = &prod.0[lead] * &lead_inv;
        if prod != lambda.scale(&c) {
            return Err(Error::NotProportional(format!("e{i}*·λ is not a multiple of λ")));
        }
        coords.push(c);
    }
    let g = HopfElement(coords);
    if !h.is_grouplike(&g) {
        return Err(Error::NotProportional("distinguished g is not group-like".into()));
    }
    Ok(g)
}

fn distinguished_alpha_from(h: &HopfPresentation, big_lambda: &HopfElement) -> Result<Functional> {
    let (lead, lead_val) = big_lambda
        .0
        .iter()
        .enumerate()
        .find(|(_, x)| !x.is_zero())
        .ok_or_else(|| Error::NotProportional("Λ is zero".into()))?;
    let lead_inv = lead_val.inv()?;
    let mut coords = Vec::with_capacity(h.dim());
    for j in 0..h.dim() {
        let prod = h.mul(big_lambda, &h.basis_element(j));
        let c = &prod.0[lead] * &lead_inv;
        if prod != big_lambda.scale(&c) {
            return Err(Error::NotProportional(format!("Λ·e{j} is not a multiple of Λ")));
        }
        coords.push(c);
    }
    let alpha = Functional(coords);
    if !h.is_algebra_map(&alpha) {
        return Err(Error::NotProportional("distinguished α is not an algebra map".into()));
    }
    Ok(alpha)
}

/// The group-like `g` with `βλ = β(g)λ` for all `β ∈ H*`.
pub fn distinguished_g(h: &HopfPresentation, pair: &IntegralPair) -> Result<HopfElement> {
    distinguished_g_from(h, &pair.lambda)
}

/// The character `α` with `Λa = α(a)Λ` for all `a ∈ H`.
pub fn distinguished_alpha(h: &HopfPresentation, pair: &IntegralPair) -> Result<Functional> {
    distinguished_alpha_from(h, &pair.big_lambda)
}

pub fn is_unimodular(h: &HopfPresentation, pair: &IntegralPair) -> bool {
    pair.alpha_dist.0 == h.counit_coords()
}

pub fn is_semisimple(h: &HopfPresentation, pair: &IntegralPair) -> bool {
    !h.counit_of(&pair.big_lambda).is_zero()
}

pub fn is_cosemisimple(h: &HopfPresentation, pair: &IntegralPair) -> bool {
    !pair.lambda.eval(&h.one()).is_zero()
}

/// Which of the three contractions of `Δ(Λ)` to use in [`radford_trace`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TraceVariant {
    /// `Σ λ(S(Λ₂) f(Λ₁))`
    One,
    /// `Σ λ((S∘f)(Λ₂) Λ₁)`
    Two,
    /// `Σ λ((f∘S)(Λ₂) Λ₁)`
    Three,
}

impl TraceVariant {
    pub const ALL: [TraceVariant; 3] = [TraceVariant::One, TraceVariant::Two, TraceVariant::Three];

    pub fn from_number(k: u8) -> Option<Self> {
        match k {
            1 => Some(TraceVariant::One),
            2 => Some(TraceVariant::Two),
            3 => Some(TraceVariant::Three),
            _ => None,
        }
    }
}

/// Precomputed pieces for repeated trace evaluations on one algebra.
pub struct TraceEvaluator<'a> {
    h: &'a HopfPresentation,
    s: Mat,
    pairing: Mat,
    /// nonzero `(j, k, c)` with `Δ(Λ) ∋ c·e_j ⊗ e_k`
    terms: Vec<(usize, usize, CycNumber)>,
}

impl<'a> TraceEvaluator<'a> {
    pub fn new(h: &'a HopfPresentation, pair: &IntegralPair) -> Result<Self> {
        if !pair.normalized || !pair.pairing().is_one() {
            return Err(Error::NotNormalized);
        }
        let s = match h.antipode() {
            Some(s) => s.clone(),
            None => h.compute_antipode()?,
        };
        let c = h.comult(&pair.big_lambda);
        let n = h.dim();
        let mut terms = Vec::new();
        for j in 0..n {
            for k in 0..n {
                if !c.get(j, k).is_zero() {
                    terms.push((j, k, c.get(j, k).clone()));
                }
            }
        }
        Ok(TraceEvaluator { h, s, pairing: pairing_matrix(h, &pair.lambda), terms })
    }

    pub fn trace(&self, f: &Mat, variant: TraceVariant) -> Result<CycNumber> {
        let n = self.h.dim();
        if f.rows() != n || f.cols() != n {
            return Err(Error::NotSquare { rows: f.rows(), cols: f.cols() });
        }
        let field = self.h.field();
        let mut total = field.zero();
        match variant {
            TraceVariant::One => {
                // S(e_k)ᵀ B f(e_j)
                let bf = self.pairing.matmul(f);
                for (j, k, c) in &self.terms {
                    let v = (0..n)
                        .filter(|&p| !self.s.get(p, *k).is_zero())
                        .fold(field.zero(), |acc, p| acc + &(self.s.get(p, *k) * bf.get(p, *j)));
                    total = total + &(c * &v);
                }
            }
            TraceVariant::Two | TraceVariant::Three => {
                let g = if variant == TraceVariant::Two { self.s.matmul(f) } else { f.matmul(&self.s) };
                for (j, k, c) in &self.terms {
                    let col = g.col(*k);
                    let v = (0..n)
                        .filter(|&p| !col[p].is_zero())
                        .fold(field.zero(), |acc, p| acc + &(&col[p] * self.pairing.get(p, *j)));
                    total = total + &(c * &v);
                }
            }
        }
        Ok(total)
    }
}

/// `Tr(f)` through the chosen contraction of `Δ(Λ)`; requires `λ(Λ) = 1`.
pub fn radford_trace(h: &HopfPresentation, pair: &IntegralPair, f: &Mat, variant: TraceVariant) -> Result<CycNumber> {
    TraceEvaluator::new(h, pair)?.trace(f, variant)
}

/// The right-hand side `a ↦ g(α⇀a↼α⁻¹)g⁻¹` as a matrix, with
/// `α⁻¹ = α∘S` and `g⁻¹ = S(g)`.
pub fn s4_formula_matrix(h: &HopfPresentation, pair: &IntegralPair) -> Result<Mat> {
    let s = h.antipode_matrix()?;
    let alpha = &pair.alpha_dist;
    let alpha_inv = Functional(s.vec_mul(&alpha.0));
    let g = &pair.g_dist;
    let g_inv = h.apply(s, g);
    let n = h.dim();
    let cols: Vec<Vec<CycNumber>> = (0..n)
        .map(|i| {
            let a = h.basis_element(i);
            let inner = h.harpoon_right(&h.harpoon_left(alpha, &a), &alpha_inv);
            h.mul(&h.mul(g, &inner), &g_inv).0
        })
        .collect();
    Ok(Mat::from_columns(h.field(), n, &cols))
}

/// True iff `S⁴(a) = g(α⇀a↼α⁻¹)g⁻¹` on every basis element.
pub fn verify_s4_formula(h: &HopfPresentation, pair: &IntegralPair) -> Result<bool> {
    Ok(h.s_power(4)? == s4_formula_matrix(h, pair)?)
}
