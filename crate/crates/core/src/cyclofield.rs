//! Exact arithmetic in `Q(ζ_N)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` modulo the
//! cyclotomic polynomial `Φ_N`, as a vector of integer numerators over a
//! single positive common denominator. The representation is canonical:
//! the denominator is positive and coprime to the content of the numerators,
//! so two elements are equal iff their stored data are equal.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Largest cyclotomic order accepted anywhere in the crate.
pub const MAX_ORDER: u32 = 1000;

struct FieldData {
    order: u32,
    /// Coefficients of `Φ_N`, lowest degree first; monic, length `φ(N) + 1`.
    modulus: Vec<BigInt>,
}

/// Handle on `Q(ζ_N)` for one fixed `N`. Cheap to clone.
#[derive(Clone)]
pub struct CycField(Arc<FieldData>);

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.0.order == other.0.order
    }
}

impl Eq for CycField {}

impl Hash for CycField {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.order.hash(state);
    }
}

impl fmt::Debug for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.0.order)
    }
}

fn field_cache() -> &'static Mutex<HashMap<u32, CycField>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, CycField>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl CycField {
    pub fn new(order: u32) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::BoundExceeded { order, bound: MAX_ORDER });
        }
        let mut cache = field_cache().lock().expect("field cache poisoned");
        if let Some(f) = cache.get(&order) {
            return Ok(f.clone());
        }
        let modulus = cyclotomic_poly_int(order);
        let f = CycField(Arc::new(FieldData { order, modulus }));
        cache.insert(order, f.clone());
        Ok(f)
    }

    /// The rationals, `Q(ζ_1)`.
    pub fn rationals() -> Self {
        CycField::new(1).expect("order 1 is always valid")
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// Degree `φ(N)` of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }

    pub fn zero(&self) -> CycNumber {
        CycNumber { field: self.clone(), num: vec![BigInt::zero(); self.degree()], den: BigInt::one() }
    }

    pub fn one(&self) -> CycNumber {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> CycNumber {
        self.from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(&self, v: BigInt) -> CycNumber {
        let mut num = vec![BigInt::zero(); self.degree()];
        num[0] = v;
        CycNumber { field: self.clone(), num, den: BigInt::one() }
    }

    pub fn from_rational(&self, r: &Rational) -> CycNumber {
        let mut num = vec![BigInt::zero(); self.degree()];
        num[0] = r.numer().clone();
        CycNumber { field: self.clone(), num, den: r.denom().clone() }.normalized()
    }

    /// Builds an element from its power-basis coefficients.
    pub fn from_rationals(&self, coeffs: &[Rational]) -> Result<CycNumber> {
        if coeffs.len() != self.degree() {
            return Err(Error::Malformed(format!(
                "expected {} coefficients for order {}, got {}",
                self.degree(),
                self.order(),
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(CycNumber { field: self.clone(), num, den }.normalized())
    }

    /// Builds `(Σ num_t ζ^t) / den`. The denominator must be nonzero.
    pub fn from_parts(&self, num: Vec<BigInt>, den: BigInt) -> Result<CycNumber> {
        if num.len() != self.degree() {
            return Err(Error::Malformed(format!(
                "expected {} numerators for order {}, got {}",
                self.degree(),
                self.order(),
                num.len()
            )));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(CycNumber { field: self.clone(), num, den }.normalized())
    }

    /// `ζ_N^k`, exponent taken mod `N`.
    pub fn root_of_unity(&self, k: i64) -> CycNumber {
        let n = self.order() as i64;
        let e = k.rem_euclid(n) as usize;
        let mut poly = vec![BigInt::zero(); (e + 1).max(self.degree())];
        poly[e] = BigInt::one();
        let num = reduce_poly(&self.0.modulus, poly);
        CycNumber { field: self.clone(), num, den: BigInt::one() }
    }

    /// Random element with integer numerators in `[-bound, bound]` and a
    /// denominator in `1..=max_den`.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64, max_den: i64) -> CycNumber {
        let num = (0..self.degree()).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
        let den = BigInt::from(rng.gen_range(1..=max_den.max(1)));
        CycNumber { field: self.clone(), num, den }.normalized()
    }
}

/// `ζ_N^k` in canonical form.
pub fn root_of_unity(order: u32, k: i64) -> Result<CycNumber> {
    Ok(CycField::new(order)?.root_of_unity(k))
}

/// Coefficients of `Φ_N`, lowest degree first.
pub fn cyclotomic_poly(order: u32) -> Result<Vec<Rational>> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::BoundExceeded { order, bound: MAX_ORDER });
    }
    Ok(cyclotomic_poly_int(order).into_iter().map(Rational::from_integer).collect())
}

/// `Φ_N` by dividing `x^N - 1` by `Φ_d` for every proper divisor `d`.
fn cyclotomic_poly_int(order: u32) -> Vec<BigInt> {
    fn go(n: u32, memo: &mut HashMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        let mut poly = vec![BigInt::zero(); n as usize + 1];
        poly[0] = BigInt::from(-1);
        poly[n as usize] = BigInt::one();
        for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
            let divisor = go(d, memo);
            poly = exact_div_monic(&poly, &divisor);
        }
        memo.insert(n, poly.clone());
        poly
    }
    go(order, &mut HashMap::new())
}

fn exact_div_monic(dividend: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    let dd = divisor.len() - 1;
    let mut rem = dividend.to_vec();
    let mut quot = vec![BigInt::zero(); dividend.len() - dd];
    for e in (dd..dividend.len()).rev() {
        let c = std::mem::take(&mut rem[e]);
        if c.is_zero() {
            continue;
        }
        for (t, m) in divisor.iter().enumerate().take(dd) {
            if !m.is_zero() {
                rem[e - dd + t] -= &c * m;
            }
        }
        quot[e - dd] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Reduces an integer polynomial modulo a monic modulus, returning exactly
/// `deg(modulus)` coefficients.
fn reduce_poly(modulus: &[BigInt], mut poly: Vec<BigInt>) -> Vec<BigInt> {
    let phi = modulus.len() - 1;
    if poly.len() > phi {
        for e in (phi..poly.len()).rev() {
            let c = std::mem::take(&mut poly[e]);
            if c.is_zero() {
                continue;
            }
            // x^e = -x^{e-φ} Σ_{t<φ} m_t x^t
            for (t, m) in modulus.iter().enumerate().take(phi) {
                if m.is_zero() {
                    continue;
                }
                if m.is_one() {
                    poly[e - phi + t] -= &c;
                } else {
                    poly[e - phi + t] -= &c * m;
                }
            }
        }
    }
    poly.resize(phi, BigInt::zero());
    poly
}

/// Element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct CycNumber {
    field: CycField,
    num: Vec<BigInt>,
    den: BigInt,
}

/// Arithmetic operation selector for [`cyc_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

/// Checked field arithmetic; operands of different orders are rejected.
pub fn cyc_arith(lhs: &CycNumber, rhs: &CycNumber, kind: ArithKind) -> Result<CycNumber> {
    if lhs.order() != rhs.order() {
        return Err(Error::OrderMismatch { left: lhs.order(), right: rhs.order() });
    }
    Ok(match kind {
        ArithKind::Add => lhs.add_ref(rhs),
        ArithKind::Sub => lhs.sub_ref(rhs),
        ArithKind::Mul => lhs.mul_ref(rhs),
    })
}

impl CycNumber {
    fn normalized(mut self) -> Self {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return self;
        }
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for a in &mut self.num {
                *a = -std::mem::take(a);
            }
        }
        if self.den.is_one() {
            return self;
        }
        let mut g = self.den.clone();
        for a in &self.num {
            if g.is_one() {
                break;
            }
            if !a.is_zero() {
                g = g.gcd(a);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for a in &mut self.num {
                if !a.is_zero() {
                    *a /= &g;
                }
            }
        }
        self
    }

    pub fn field(&self) -> &CycField {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Power-basis coefficients as rationals.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num.iter().map(|a| Rational::new(a.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// The value as an integer, if it lies in `Z`.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.den.is_one() && self.num[1..].iter().all(Zero::is_zero) {
            Some(self.num[0].clone())
        } else {
            None
        }
    }

    fn same_field(&self, other: &CycNumber) {
        assert_eq!(self.order(), other.order(), "cyclotomic order mismatch: {} vs {}", self.order(), other.order());
    }

    fn add_ref(&self, other: &CycNumber) -> CycNumber {
        self.same_field(other);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect();
            return CycNumber { field: self.field.clone(), num, den: self.den.clone() }.normalized();
        }
        let num = self.num.iter().zip(&other.num).map(|(a, b)| a * &other.den + b * &self.den).collect();
        CycNumber { field: self.field.clone(), num, den: &self.den * &other.den }.normalized()
    }

    fn sub_ref(&self, other: &CycNumber) -> CycNumber {
        self.add_ref(&other.neg_ref())
    }

    fn neg_ref(&self) -> CycNumber {
        CycNumber { field: self.field.clone(), num: self.num.iter().map(|a| -a).collect(), den: self.den.clone() }
    }

    fn mul_ref(&self, other: &CycNumber) -> CycNumber {
        self.same_field(other);
        if self.is_zero() || other.is_zero() {
            return self.field.zero();
        }
        let phi = self.field.degree();
        if phi == 1 {
            let num = vec![&self.num[0] * &other.num[0]];
            return CycNumber { field: self.field.clone(), num, den: &self.den * &other.den }.normalized();
        }
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let num = reduce_poly(&self.field.0.modulus, prod);
        CycNumber { field: self.field.clone(), num, den: &self.den * &other.den }.normalized()
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, r: &Rational) -> CycNumber {
        CycNumber {
            field: self.field.clone(),
            num: self.num.iter().map(|a| a * r.numer()).collect(),
            den: &self.den * r.denom(),
        }
        .normalized()
    }

    pub fn try_add(&self, other: &CycNumber) -> Result<CycNumber> {
        cyc_arith(self, other, ArithKind::Add)
    }

    pub fn try_sub(&self, other: &CycNumber) -> Result<CycNumber> {
        cyc_arith(self, other, ArithKind::Sub)
    }

    pub fn try_mul(&self, other: &CycNumber) -> Result<CycNumber> {
        cyc_arith(self, other, ArithKind::Mul)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// coefficient polynomial and `Φ_N` over `Q`.
    pub fn inv(&self) -> Result<CycNumber> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(self.field.from_rational(&r.recip()));
        }
        let modulus: Vec<Rational> = self.field.0.modulus.iter().cloned().map(Rational::from_integer).collect();
        let a: Vec<Rational> = self.num.iter().cloned().map(Rational::from_integer).collect();
        let (g, s) = poly_ext_gcd(&modulus, &a);
        // Φ_N is irreducible and a ≢ 0, so the gcd is a nonzero constant.
        debug_assert_eq!(poly_degree(&g), Some(0));
        let c = g[0].clone();
        let mut s: Vec<Rational> = s.into_iter().map(|x| x / &c).collect();
        s.resize(self.field.degree(), Rational::zero());
        // a(x) had denominator `den`; the inverse of num/den is den·(num)^{-1}.
        let den = Rational::from_integer(self.den.clone());
        let s: Vec<Rational> = s.into_iter().map(|x| x * &den).collect();
        let out = self.field.from_rationals(&s)?;
        debug_assert!(self.mul_ref(&out).is_one());
        Ok(out)
    }

    pub fn try_div(&self, other: &CycNumber) -> Result<CycNumber> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(self.mul_ref(&other.inv()?))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<CycNumber> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        Ok(acc)
    }

    /// Re-expresses the value in `Q(ζ_M)` for a multiple `M` of the current
    /// order, using `ζ_N = ζ_M^{M/N}`.
    pub fn lift(&self, target: &CycField) -> Result<CycNumber> {
        let (n, m) = (self.order(), target.order());
        if m % n != 0 {
            return Err(Error::OrderMismatch { left: n, right: m });
        }
        let step = (m / n) as usize;
        let len = ((self.num.len().saturating_sub(1)) * step + 1).max(target.degree());
        let mut poly = vec![BigInt::zero(); len];
        for (t, a) in self.num.iter().enumerate() {
            poly[t * step] = a.clone();
        }
        let num = reduce_poly(&target.0.modulus, poly);
        Ok(CycNumber { field: target.clone(), num, den: self.den.clone() }.normalized())
    }
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycNumber {}

impl Hash for CycNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order().hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Display for CycNumber {
    /// Renders as a polynomial in `z = ζ_N`, e.g. `-1-z` or `(1+2z^2)/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (t, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            if a.is_negative() {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            let mono = match t {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{t}"),
            };
            if t == 0 || !mag.is_one() {
                s.push_str(&mag.to_string());
            }
            s.push_str(&mono);
        }
        if self.den.is_one() {
            write!(f, "{s}")
        } else if self.num.iter().filter(|a| !a.is_zero()).count() == 1 {
            write!(f, "{s}/{}", self.den)
        } else {
            write!(f, "({s})/{}", self.den)
        }
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [N={}]", self.order())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&CycNumber> for &CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: &CycNumber) -> CycNumber {
                self.$inner(rhs)
            }
        }
        impl $tr<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: CycNumber) -> CycNumber {
                self.$inner(&rhs)
            }
        }
        impl $tr<&CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: &CycNumber) -> CycNumber {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        self.neg_ref()
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        self.neg_ref()
    }
}

// ---- polynomials over Q, only what inversion and root finding need ----

pub(crate) fn poly_degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn poly_trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = poly_degree(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut rem = poly_trim(a.to_vec());
    let mut quot = vec![Rational::zero(); rem.len().saturating_sub(db).max(1)];
    while let Some(dr) = poly_degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] / &lead;
        for (t, bt) in b.iter().enumerate().take(db + 1) {
            if !bt.is_zero() {
                rem[dr - db + t] -= &c * bt;
            }
        }
        quot[dr - db] = c;
        rem = poly_trim(rem);
    }
    (poly_trim(quot), rem)
}

fn poly_sub_mul(a: &[Rational], q: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    let need = if q.is_empty() || b.is_empty() { 0 } else { q.len() + b.len() - 1 };
    if out.len() < need {
        out.resize(need, Rational::zero());
    }
    for (i, qi) in q.iter().enumerate() {
        if qi.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] -= qi * bj;
            }
        }
    }
    poly_trim(out)
}

/// Returns `(g, s)` with `g = gcd(m, a)` and `s·a ≡ g (mod m)`.
fn poly_ext_gcd(m: &[Rational], a: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let (mut r0, mut r1) = (poly_trim(m.to_vec()), poly_trim(a.to_vec()));
    let (mut s0, mut s1) = (Vec::new(), vec![Rational::one()]);
    while poly_degree(&r1).is_some() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s2 = poly_sub_mul(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

/// Monic gcd of two rational polynomials.
pub(crate) fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut r0, mut r1) = (poly_trim(a.to_vec()), poly_trim(b.to_vec()));
    while poly_degree(&r1).is_some() {
        let (_, r) = poly_divmod(&r0, &r1);
        r0 = std::mem::replace(&mut r1, r);
    }
    match poly_degree(&r0) {
        Some(d) => {
            let lead = r0[d].clone();
            r0.into_iter().map(|c| c / &lead).collect()
        }
        None => Vec::new(),
    }
}

/// Roots of a polynomial over `Q(ζ_N)` among `{0} ∪ {r·ζ^t : r ∈ Q, 0 ≤ t < N}`.
///
/// For each `t`, the substitution `x = ζ^t·y` turns rational roots `y = r`
/// into common rational roots of the power-basis coordinate polynomials,
/// which are found from their gcd by the rational root test. Returns the
/// distinct roots with multiplicities; their multiplicities sum to the
/// degree iff the polynomial splits over the candidate set.
pub fn roots_in_candidate_set(poly: &[CycNumber]) -> Vec<(CycNumber, usize)> {
    let Some(deg) = poly.iter().rposition(|c| !c.is_zero()) else {
        return Vec::new();
    };
    let field = poly[0].field().clone();
    let mut out: Vec<(CycNumber, usize)> = Vec::new();
    let zero_mult = poly.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if zero_mult > 0 {
        out.push((field.zero(), zero_mult));
    }
    let reduced: Vec<CycNumber> = poly[zero_mult..=deg].to_vec();
    if reduced.len() == 1 {
        return out;
    }
    let mut candidates: Vec<CycNumber> = Vec::new();
    for t in 0..field.order() as i64 {
        let mut coord_polys = vec![vec![Rational::zero(); reduced.len()]; field.degree()];
        for (c, coef) in reduced.iter().enumerate() {
            let q = coef * &field.root_of_unity(t * c as i64);
            for (s, v) in q.coeffs().into_iter().enumerate() {
                coord_polys[s][c] = v;
            }
        }
        let mut g: Vec<Rational> = Vec::new();
        for p in coord_polys {
            if poly_degree(&p).is_none() {
                continue;
            }
            g = if g.is_empty() { poly_gcd(&p, &p) } else { poly_gcd(&g, &p) };
        }
        if poly_degree(&g).unwrap_or(0) == 0 {
            continue;
        }
        let zt = field.root_of_unity(t);
        for r in rational_roots(&g) {
            let v = field.from_rational(&r) * &zt;
            if !candidates.contains(&v) {
                candidates.push(v);
            }
        }
    }
    for c in candidates {
        let mut p = reduced.clone();
        let mut mult = 0;
        loop {
            let (q, rem) = synthetic_division(&p, &c);
            if !rem.is_zero() {
                break;
            }
            mult += 1;
            p = q;
            if p.len() == 1 {
                break;
            }
        }
        if mult > 0 {
            out.push((c, mult));
        }
    }
    out
}

/// Divides by `(x - c)`: returns the quotient and the remainder `p(c)`.
fn synthetic_division(p: &[CycNumber], c: &CycNumber) -> (Vec<CycNumber>, CycNumber) {
    let n = p.len() - 1;
    let mut q = vec![c.field().zero(); n];
    let mut acc = p[n].clone();
    for e in (0..n).rev() {
        q[e] = acc.clone();
        acc = &p[e] + &(&acc * c);
    }
    (q, acc)
}

/// Rational roots of a nonzero rational polynomial with nonzero constant
/// term, by the rational root test.
fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    let p = poly_trim(p.to_vec());
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let ints = &ints[low..];
    if ints.len() < 2 {
        return roots;
    }
    let a0 = ints[0].abs();
    let an = ints[ints.len() - 1].abs();
    let eval =
        |r: &Rational| ints.iter().rev().fold(Rational::zero(), |acc, c| acc * r + Rational::from_integer(c.clone()));
    for num in divisors(&a0) {
        for den in divisors(&an) {
            if !num.gcd(&den).is_one() {
                continue;
            }
            for sign in [1i32, -1] {
                let r = Rational::new(&num * BigInt::from(sign), den.clone());
                if eval(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

/// Positive divisors by trial division. Cofactors left after trial division
/// up to 10^6 are treated as prime.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &d * &d <= n && d <= limit {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pw);
                pw *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}
