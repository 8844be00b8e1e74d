//! Hopf algebras presented by structure constants.
//!
//! Conventions, used everywhere in the crate:
//!
//! * `mult` entry `(i, j, k, c)`: `e_i · e_j ∋ c·e_k`.
//! * `comult` entry `(i, j, k, c)`: `Δ(e_i) ∋ c·e_j ⊗ e_k`.
//! * A tensor-square element `Σ c_{jk} e_j ⊗ e_k` is a `dim × dim` [`Mat`]
//!   with `c_{jk}` at row `j`, column `k`; its row-major data is the
//!   Kronecker coordinate vector (index `j·dim + k`).
//! * The antipode matrix has the coordinates of `S(e_i)` in column `i`.

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclofield::{roots_in_candidate_set, CycField, CycNumber};
use crate::error::{Error, Result};
use crate::integrals;
use crate::linalg::{Mat, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: CycNumber,
}

impl StructEntry {
    pub fn new(i: usize, j: usize, k: usize, value: CycNumber) -> Self {
        StructEntry { i, j, k, value }
    }
}

/// Coordinate vector of an element of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HopfElement(pub Vec<CycNumber>);

/// Coordinate covector of an element of `H*` in the dual basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Functional(pub Vec<CycNumber>);

impl HopfElement {
    pub fn coords(&self) -> &[CycNumber] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(CycNumber::is_zero)
    }

    pub fn scale(&self, c: &CycNumber) -> HopfElement {
        HopfElement(self.0.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &HopfElement) -> HopfElement {
        HopfElement(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &HopfElement) -> HopfElement {
        HopfElement(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Functional {
    pub fn coords(&self) -> &[CycNumber] {
        &self.0
    }

    pub fn eval(&self, a: &HopfElement) -> CycNumber {
        dot(&self.0, &a.0)
    }

    pub fn scale(&self, c: &CycNumber) -> Functional {
        Functional(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(CycNumber::is_zero)
    }
}

pub(crate) fn dot(a: &[CycNumber], b: &[CycNumber]) -> CycNumber {
    let field = a.first().or(b.first()).map(|x| x.field().clone());
    let Some(field) = field else {
        return CycField::rationals().zero();
    };
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).fold(field.zero(), |acc, (x, y)| acc + x * y)
}

/// Outcome of one named axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl NamedCheck {
    fn new(name: &str, failure: Option<String>) -> Self {
        NamedCheck { name: name.to_string(), passed: failure.is_none(), detail: failure.unwrap_or_default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<NamedCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&NamedCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn get(&self, name: &str) -> Option<&NamedCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

type Sparse2 = BTreeMap<(usize, usize), CycNumber>;
type Sparse3 = BTreeMap<(usize, usize, usize), CycNumber>;

fn accumulate<K: Ord>(map: &mut BTreeMap<K, CycNumber>, key: K, v: CycNumber) {
    if v.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(v);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &v;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// A finite-dimensional Hopf algebra (or candidate bialgebra) given by
/// structure constants over `Q(ζ_N)`.
#[derive(Clone)]
pub struct HopfPresentation {
    name: String,
    field: CycField,
    basis: Vec<String>,
    mult: Vec<StructEntry>,
    comult: Vec<StructEntry>,
    unit: Vec<CycNumber>,
    counit: Vec<CycNumber>,
    antipode: Option<Mat>,
    /// `e_i · e_j = Σ c e_k`, indexed by `i·dim + j`.
    mult_table: Vec<Vec<(usize, CycNumber)>>,
    /// `Δ(e_i) = Σ c e_j ⊗ e_k`, indexed by `i`.
    comult_table: Vec<Vec<(usize, usize, CycNumber)>>,
}

impl fmt::Debug for HopfPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfPresentation")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("order", &self.field.order())
            .field("mult_entries", &self.mult.len())
            .field("comult_entries", &self.comult.len())
            .field("has_antipode", &self.antipode.is_some())
            .finish()
    }
}

impl PartialEq for HopfPresentation {
    /// Equality of structure constants and basis labels; the name is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.basis == other.basis
            && self.mult == other.mult
            && self.comult == other.comult
            && self.unit == other.unit
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

fn canonical_entries(dim: usize, field: &CycField, what: &str, entries: Vec<StructEntry>) -> Result<Vec<StructEntry>> {
    let mut acc: Sparse3 = BTreeMap::new();
    for e in entries {
        if e.i >= dim || e.j >= dim || e.k >= dim {
            return Err(Error::MalformedTensor(format!(
                "{what} entry ({}, {}, {}) out of range for dim {dim}",
                e.i, e.j, e.k
            )));
        }
        if e.value.order() != field.order() {
            return Err(Error::OrderMismatch { left: field.order(), right: e.value.order() });
        }
        accumulate(&mut acc, (e.i, e.j, e.k), e.value);
    }
    Ok(acc.into_iter().map(|((i, j, k), value)| StructEntry { i, j, k, value }).collect())
}

impl HopfPresentation {
    /// Validates shapes and builds lookup tables. Duplicate tensor entries are
    /// summed and zero entries dropped. No axioms are checked here; see
    /// [`HopfPresentation::check_axioms`].
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        field: &CycField,
        basis: Vec<String>,
        mult: Vec<StructEntry>,
        comult: Vec<StructEntry>,
        unit: Vec<CycNumber>,
        counit: Vec<CycNumber>,
        antipode: Option<Mat>,
    ) -> Result<Self> {
        let dim = basis.len();
        if dim == 0 {
            return Err(Error::MalformedTensor("dimension must be at least 1".into()));
        }
        if unit.len() != dim || counit.len() != dim {
            return Err(Error::MalformedTensor(format!(
                "unit/counit length {}/{} does not match dim {dim}",
                unit.len(),
                counit.len()
            )));
        }
        for x in unit.iter().chain(&counit) {
            if x.order() != field.order() {
                return Err(Error::OrderMismatch { left: field.order(), right: x.order() });
            }
        }
        if let Some(s) = &antipode {
            if s.rows() != dim || s.cols() != dim {
                return Err(Error::MalformedTensor(format!(
                    "antipode is {}x{}, expected {dim}x{dim}",
                    s.rows(),
                    s.cols()
                )));
            }
            if s.field() != field {
                return Err(Error::OrderMismatch { left: field.order(), right: s.field().order() });
            }
        }
        let mult = canonical_entries(dim, field, "mult", mult)?;
        let comult = canonical_entries(dim, field, "comult", comult)?;
        let mut mult_table = vec![Vec::new(); dim * dim];
        for e in &mult {
            mult_table[e.i * dim + e.j].push((e.k, e.value.clone()));
        }
        let mut comult_table = vec![Vec::new(); dim];
        for e in &comult {
            comult_table[e.i].push((e.j, e.k, e.value.clone()));
        }
        Ok(HopfPresentation {
            name: name.into(),
            field: field.clone(),
            basis,
            mult,
            comult,
            unit,
            counit,
            antipode,
            mult_table,
            comult_table,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> &CycField {
        &self.field
    }

    pub fn cyclotomic_order(&self) -> u32 {
        self.field.order()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn mult_entries(&self) -> &[StructEntry] {
        &self.mult
    }

    pub fn comult_entries(&self) -> &[StructEntry] {
        &self.comult
    }

    pub fn unit_coords(&self) -> &[CycNumber] {
        &self.unit
    }

    pub fn counit_coords(&self) -> &[CycNumber] {
        &self.counit
    }

    pub fn antipode(&self) -> Option<&Mat> {
        self.antipode.as_ref()
    }

    pub fn antipode_matrix(&self) -> Result<&Mat> {
        self.antipode.as_ref().ok_or(Error::MissingAntipode)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_antipode(self, s: Mat) -> Result<Self> {
        HopfPresentation::new(
            self.name,
            &self.field,
            self.basis,
            self.mult,
            self.comult,
            self.unit,
            self.counit,
            Some(s),
        )
    }

    pub fn without_antipode(mut self) -> Self {
        self.antipode = None;
        self
    }

    /// Returns the presentation with an antipode attached, computing it when
    /// none is stored.
    pub fn ensure_antipode(self) -> Result<Self> {
        if self.antipode.is_some() {
            return Ok(self);
        }
        let s = self.compute_antipode()?;
        self.with_antipode(s)
    }

    /// Re-expresses every structure constant in `Q(ζ_M)` for a multiple `M`
    /// of the current order.
    pub fn lift(&self, target: &CycField) -> Result<Self> {
        let lift_entries = |v: &[StructEntry]| -> Result<Vec<StructEntry>> {
            v.iter().map(|e| Ok(StructEntry::new(e.i, e.j, e.k, e.value.lift(target)?))).collect()
        };
        let lift_vec = |v: &[CycNumber]| -> Result<Vec<CycNumber>> { v.iter().map(|x| x.lift(target)).collect() };
        let antipode = match &self.antipode {
            Some(s) => {
                let data = s.as_slice().iter().map(|x| x.lift(target)).collect::<Result<_>>()?;
                Some(Mat::from_vec(target, s.rows(), s.cols(), data))
            }
            None => None,
        };
        HopfPresentation::new(
            self.name.clone(),
            target,
            self.basis.clone(),
            lift_entries(&self.mult)?,
            lift_entries(&self.comult)?,
            lift_vec(&self.unit)?,
            lift_vec(&self.counit)?,
            antipode,
        )
    }

    // ---- elements ----

    pub fn basis_element(&self, i: usize) -> HopfElement {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        HopfElement(v)
    }

    pub fn one(&self) -> HopfElement {
        HopfElement(self.unit.clone())
    }

    pub fn zero_element(&self) -> HopfElement {
        HopfElement(vec![self.field.zero(); self.dim()])
    }

    pub fn counit_functional(&self) -> Functional {
        Functional(self.counit.clone())
    }

    pub fn dual_basis_functional(&self, i: usize) -> Functional {
        Functional(self.basis_element(i).0)
    }

    pub(crate) fn mul_basis(&self, i: usize, j: usize) -> &[(usize, CycNumber)] {
        &self.mult_table[i * self.dim() + j]
    }

    pub(crate) fn comult_basis(&self, i: usize) -> &[(usize, usize, CycNumber)] {
        &self.comult_table[i]
    }

    pub(crate) fn mul_coords(&self, a: &[CycNumber], b: &[CycNumber]) -> Vec<CycNumber> {
        let n = self.dim();
        let mut out = vec![self.field.zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let entries = self.mul_basis(i, j);
                if entries.is_empty() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in entries {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &HopfElement, b: &HopfElement) -> HopfElement {
        HopfElement(self.mul_coords(&a.0, &b.0))
    }

    pub fn counit_of(&self, a: &HopfElement) -> CycNumber {
        dot(&self.counit, &a.0)
    }

    /// `Δ(a)` as a `dim × dim` tensor-square matrix.
    pub fn comult(&self, a: &HopfElement) -> Mat {
        let n = self.dim();
        let mut out = Mat::zeros(&self.field, n, n);
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in self.comult_basis(i) {
                let v = out.get(*j, *k) + &(x * c);
                out.set(*j, *k, v);
            }
        }
        out
    }

    /// `Δ^op(a)`: the legs of `Δ(a)` swapped.
    pub fn delta_op(&self, a: &HopfElement) -> Mat {
        self.comult(a).transpose()
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mult_matrix(&self, a: &HopfElement) -> Mat {
        let cols: Vec<Vec<CycNumber>> =
            (0..self.dim()).map(|k| self.mul_coords(&a.0, &self.basis_element(k).0)).collect();
        Mat::from_columns(&self.field, self.dim(), &cols)
    }

    /// Matrix of `x ↦ x·a`, written `r(a)`.
    pub fn right_mult_matrix(&self, a: &HopfElement) -> Mat {
        let cols: Vec<Vec<CycNumber>> =
            (0..self.dim()).map(|k| self.mul_coords(&self.basis_element(k).0, &a.0)).collect();
        Mat::from_columns(&self.field, self.dim(), &cols)
    }

    pub fn apply(&self, op: &Mat, a: &HopfElement) -> HopfElement {
        HopfElement(op.mul_vec(&a.0))
    }

    /// Product in `H ⊗ H` of two tensor-square matrices.
    pub fn tensor_mul(&self, a: &Mat, b: &Mat) -> Mat {
        let n = self.dim();
        let mut acc: Sparse2 = BTreeMap::new();
        let nz = |m: &Mat| -> Vec<(usize, usize, CycNumber)> {
            let mut v = Vec::new();
            for r in 0..n {
                for c in 0..n {
                    let x = m.get(r, c);
                    if !x.is_zero() {
                        v.push((r, c, x.clone()));
                    }
                }
            }
            v
        };
        let (na, nb) = (nz(a), nz(b));
        for (j, k, x) in &na {
            for (l, m, y) in &nb {
                let left = self.mul_basis(*j, *l);
                let right = self.mul_basis(*k, *m);
                if left.is_empty() || right.is_empty() {
                    continue;
                }
                let xy = x * y;
                for (p, c1) in left {
                    for (q, c2) in right {
                        accumulate(&mut acc, (*p, *q), &xy * &(c1 * c2));
                    }
                }
            }
        }
        let mut out = Mat::zeros(&self.field, n, n);
        for ((p, q), v) in acc {
            out.set(p, q, v);
        }
        out
    }

    /// Convolution product in `H*`: `(β·γ)(h) = Σ β(h₁) γ(h₂)`.
    pub fn convolve(&self, beta: &Functional, gamma: &Functional) -> Functional {
        let out = (0..self.dim())
            .map(|r| {
                self.comult_basis(r).iter().fold(self.field.zero(), |acc, (j, k, c)| {
                    let (b, g) = (&beta.0[*j], &gamma.0[*k]);
                    if b.is_zero() || g.is_zero() {
                        acc
                    } else {
                        acc + &(c * &(b * g))
                    }
                })
            })
            .collect();
        Functional(out)
    }

    /// `β ⇀ a = Σ a₁ β(a₂)`.
    pub fn harpoon_left(&self, beta: &Functional, a: &HopfElement) -> HopfElement {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in self.comult_basis(i) {
                let b = &beta.0[*k];
                if !b.is_zero() {
                    out[*j] = &out[*j] + &(x * &(c * b));
                }
            }
        }
        HopfElement(out)
    }

    /// `a ↼ β = Σ β(a₁) a₂`.
    pub fn harpoon_right(&self, a: &HopfElement, beta: &Functional) -> HopfElement {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in self.comult_basis(i) {
                let b = &beta.0[*j];
                if !b.is_zero() {
                    out[*k] = &out[*k] + &(x * &(c * b));
                }
            }
        }
        HopfElement(out)
    }

    /// Matrix of `S^t`; negative `t` needs an invertible antipode.
    pub fn s_power(&self, t: i64) -> Result<Mat> {
        let s = self.antipode_matrix()?;
        if t < 0 && s.rank() < self.dim() {
            return Err(Error::NotInvertible);
        }
        s.pow(t)
    }

    pub fn apply_s_power(&self, t: i64, a: &HopfElement) -> Result<HopfElement> {
        Ok(self.apply(&self.s_power(t)?, a))
    }

    pub fn is_grouplike(&self, a: &HopfElement) -> bool {
        if a.is_zero() {
            return false;
        }
        let delta = self.comult(a);
        let n = self.dim();
        (0..n).all(|j| (0..n).all(|k| delta.get(j, k) == &(&a.0[j] * &a.0[k])))
    }

    /// True if `β(xy) = β(x)β(y)` on all basis pairs and `β(1) = 1`.
    pub fn is_algebra_map(&self, beta: &Functional) -> bool {
        let n = self.dim();
        if !beta.eval(&self.one()).is_one() {
            return false;
        }
        (0..n).all(|i| {
            (0..n).all(|j| {
                let prod = self.mul_basis(i, j).iter().fold(self.field.zero(), |acc, (k, c)| acc + &(c * &beta.0[*k]));
                prod == &beta.0[i] * &beta.0[j]
            })
        })
    }

    // ---- duality ----

    /// The dual Hopf algebra on the dual basis: multiplication is the
    /// transpose of `Δ`, comultiplication the transpose of multiplication,
    /// unit and counit swap, and the antipode is transposed.
    pub fn dual(&self) -> HopfPresentation {
        let mult = self.comult.iter().map(|e| StructEntry::new(e.j, e.k, e.i, e.value.clone())).collect();
        let comult = self.mult.iter().map(|e| StructEntry::new(e.k, e.i, e.j, e.value.clone())).collect();
        let basis = self
            .basis
            .iter()
            .map(|b| match b.strip_suffix('*') {
                Some(stripped) => stripped.to_string(),
                None => format!("{b}*"),
            })
            .collect();
        let name = match self.name.strip_prefix("dual(").and_then(|s| s.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => format!("dual({})", self.name),
        };
        HopfPresentation::new(
            name,
            &self.field,
            basis,
            mult,
            comult,
            self.counit.clone(),
            self.unit.clone(),
            self.antipode.as_ref().map(Mat::transpose),
        )
        .expect("dual of a well-formed presentation is well-formed")
    }

    // ---- axioms ----

    fn sparse_comult(&self, i: usize) -> Sparse2 {
        let mut m = BTreeMap::new();
        for (j, k, c) in self.comult_basis(i) {
            accumulate(&mut m, (*j, *k), c.clone());
        }
        m
    }

    fn first_failure(range: usize, mut ok: impl FnMut(usize) -> bool, what: &str) -> Option<String> {
        (0..range).find(|&i| !ok(i)).map(|i| format!("{what} fails at basis index {i}"))
    }

    /// Checks every Hopf axiom as an exact identity on basis elements.
    /// When no antipode is stored, one is computed and checked.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.dim();
        let mut checks = Vec::new();

        let assoc = (|| {
            let zero = self.field.zero();
            for i in 0..n {
                for j in 0..n {
                    let ij = self.mul_basis(i, j);
                    for k in 0..n {
                        let mut lhs = vec![zero.clone(); n];
                        for (m, x) in ij {
                            for (t, y) in self.mul_basis(*m, k) {
                                lhs[*t] = &lhs[*t] + &(x * y);
                            }
                        }
                        let mut rhs = vec![zero.clone(); n];
                        for (m, x) in self.mul_basis(j, k) {
                            for (t, y) in self.mul_basis(i, *m) {
                                rhs[*t] = &rhs[*t] + &(x * y);
                            }
                        }
                        if lhs != rhs {
                            return Some(format!("(e{i} e{j}) e{k} != e{i} (e{j} e{k})"));
                        }
                    }
                }
            }
            None
        })();
        checks.push(NamedCheck::new("associativity", assoc));

        let unit = Self::first_failure(
            n,
            |i| {
                let e = self.basis_element(i).0;
                self.mul_coords(&self.unit, &e) == e && self.mul_coords(&e, &self.unit) == e
            },
            "1·x = x = x·1",
        );
        checks.push(NamedCheck::new("unit", unit));

        let coassoc = Self::first_failure(
            n,
            |i| {
                let mut lhs: Sparse3 = BTreeMap::new();
                let mut rhs: Sparse3 = BTreeMap::new();
                for (j, k, c) in self.comult_basis(i) {
                    for (a, b, d) in self.comult_basis(*j) {
                        accumulate(&mut lhs, (*a, *b, *k), c * d);
                    }
                    for (a, b, d) in self.comult_basis(*k) {
                        accumulate(&mut rhs, (*j, *a, *b), c * d);
                    }
                }
                lhs == rhs
            },
            "(Δ⊗id)Δ = (id⊗Δ)Δ",
        );
        checks.push(NamedCheck::new("coassociativity", coassoc));

        let counit = Self::first_failure(
            n,
            |i| {
                let mut left = vec![self.field.zero(); n];
                let mut right = vec![self.field.zero(); n];
                for (j, k, c) in self.comult_basis(i) {
                    left[*k] = &left[*k] + &(c * &self.counit[*j]);
                    right[*j] = &right[*j] + &(c * &self.counit[*k]);
                }
                let e = self.basis_element(i).0;
                left == e && right == e
            },
            "(ε⊗id)Δ = id = (id⊗ε)Δ",
        );
        checks.push(NamedCheck::new("counit", counit));

        let delta_mult = (|| {
            let one = self.one();
            let delta_one = self.comult(&one);
            let n = self.dim();
            let one_one = Mat::from_fn(&self.field, n, n, |j, k| &self.unit[j] * &self.unit[k]);
            if delta_one != one_one {
                return Some("Δ(1) != 1⊗1".to_string());
            }
            let sparse: Vec<Sparse2> = (0..n).map(|i| self.sparse_comult(i)).collect();
            for i in 0..n {
                for j in 0..n {
                    let mut lhs: Sparse2 = BTreeMap::new();
                    for (k, c) in self.mul_basis(i, j) {
                        for ((a, b), d) in &sparse[*k] {
                            accumulate(&mut lhs, (*a, *b), c * d);
                        }
                    }
                    let mut rhs: Sparse2 = BTreeMap::new();
                    for ((a, b), x) in &sparse[i] {
                        for ((c, d), y) in &sparse[j] {
                            let l = self.mul_basis(*a, *c);
                            let r = self.mul_basis(*b, *d);
                            if l.is_empty() || r.is_empty() {
                                continue;
                            }
                            let xy = x * y;
                            for (p, u) in l {
                                for (q, v) in r {
                                    accumulate(&mut rhs, (*p, *q), &xy * &(u * v));
                                }
                            }
                        }
                    }
                    if lhs != rhs {
                        return Some(format!("Δ(e{i} e{j}) != Δ(e{i})Δ(e{j})"));
                    }
                }
            }
            None
        })();
        checks.push(NamedCheck::new("comult-multiplicative", delta_mult));

        let eps_mult = (|| {
            if !dot(&self.counit, &self.unit).is_one() {
                return Some("ε(1) != 1".to_string());
            }
            for i in 0..n {
                for j in 0..n {
                    let prod = self
                        .mul_basis(i, j)
                        .iter()
                        .fold(self.field.zero(), |acc, (k, c)| acc + &(c * &self.counit[*k]));
                    if prod != &self.counit[i] * &self.counit[j] {
                        return Some(format!("ε(e{i} e{j}) != ε(e{i})ε(e{j})"));
                    }
                }
            }
            None
        })();
        checks.push(NamedCheck::new("counit-multiplicative", eps_mult));

        let antipode = match &self.antipode {
            Some(s) => self.antipode_failure(s),
            None => match self.compute_antipode() {
                Ok(_) => None,
                Err(e) => Some(e.to_string()),
            },
        };
        checks.push(NamedCheck::new("antipode", antipode));

        AxiomReport { checks }
    }

    /// `None` if `Σ S(x₁)x₂ = ε(x)1 = Σ x₁S(x₂)` on every basis element.
    pub fn antipode_failure(&self, s: &Mat) -> Option<String> {
        let n = self.dim();
        if s.rows() != n || s.cols() != n {
            return Some("antipode has the wrong shape".into());
        }
        let s_cols: Vec<Vec<CycNumber>> = (0..n).map(|j| s.col(j)).collect();
        for i in 0..n {
            let mut left = vec![self.field.zero(); n];
            let mut right = vec![self.field.zero(); n];
            for (j, k, c) in self.comult_basis(i) {
                let l = self.mul_coords(&s_cols[*j], &self.basis_element(*k).0);
                let r = self.mul_coords(&self.basis_element(*j).0, &s_cols[*k]);
                for t in 0..n {
                    if !l[t].is_zero() {
                        left[t] = &left[t] + &(c * &l[t]);
                    }
                    if !r[t].is_zero() {
                        right[t] = &right[t] + &(c * &r[t]);
                    }
                }
            }
            let target: Vec<CycNumber> = self.unit.iter().map(|u| u * &self.counit[i]).collect();
            if left != target {
                return Some(format!("Σ S(x₁)x₂ != ε(x)1 at basis index {i}"));
            }
            if right != target {
                return Some(format!("Σ x₁S(x₂) != ε(x)1 at basis index {i}"));
            }
        }
        None
    }

    /// The antipode, computed without using any stored one.
    ///
    /// With `Λ` a left integral of `H` and `λ` a right integral of `H*`
    /// (both found from the bialgebra structure alone), the identity
    /// `Σ Λ₁ ⊗ aΛ₂ = Σ S(a)Λ₁ ⊗ Λ₂` gives `λ(Λ)·a = Σ λ(S(a)Λ₁)Λ₂`, so `S`
    /// is the inverse of `b ↦ Σ λ(bΛ₁)Λ₂ / λ(Λ)`. The candidate is then
    /// verified against both antipode identities.
    pub fn compute_antipode(&self) -> Result<Mat> {
        let no = |why: String| Error::NoAntipode(why);
        let lam = integrals::left_integral(self).map_err(|e| no(e.to_string()))?;
        let lam_dual = integrals::right_integral_dual(self).map_err(|e| no(e.to_string()))?;
        let pairing = lam_dual.eval(&lam);
        if pairing.is_zero() {
            return Err(no("integral pairing vanishes".into()));
        }
        let n = self.dim();
        let c = self.comult(&lam);
        let b = integrals::pairing_matrix(self, &lam_dual);
        let inv_pairing = pairing.inv()?;
        // column p: Σ_{j,k} C_{jk} λ(e_p e_j) e_k
        let phi = Mat::from_fn(&self.field, n, n, |k, p| {
            (0..n)
                .filter(|&j| !c.get(j, k).is_zero())
                .fold(self.field.zero(), |acc, j| acc + &(c.get(j, k) * b.get(p, j)))
                * &inv_pairing
        });
        let s = phi.inverse().map_err(|_| no("Frobenius map is singular".into()))?;
        match self.antipode_failure(&s) {
            None => Ok(s),
            Some(why) => Err(no(why)),
        }
    }

    /// The antipode by solving `Σ S(x₁)x₂ = ε(x)1` directly in the `dim²`
    /// unknown matrix entries. Dense and `O(dim⁶)`; meant for small inputs
    /// and as an independent check on [`HopfPresentation::compute_antipode`].
    pub fn antipode_by_linear_system(&self) -> Result<Mat> {
        let n = self.dim();
        let unknowns = n * n;
        let mut sys = Mat::zeros(&self.field, n * n, unknowns + 1);
        // unknown (l, j) ↦ l·n + j is S_{lj}, the e_l-coordinate of S(e_j)
        for i in 0..n {
            for (j, k, d) in self.comult_basis(i) {
                for l in 0..n {
                    for (r, m) in self.mul_basis(l, *k) {
                        let (row, col) = (i * n + r, l * n + j);
                        let v = sys.get(row, col) + &(d * m);
                        sys.set(row, col, v);
                    }
                }
            }
            for r in 0..n {
                sys.set(i * n + r, unknowns, &self.counit[i] * &self.unit[r]);
            }
        }
        let (red, rank, pivots) = sys.rref();
        if pivots.contains(&unknowns) {
            return Err(Error::NoAntipode("antipode equations are inconsistent".into()));
        }
        let mut s = Mat::zeros(&self.field, n, n);
        for (r, &p) in pivots.iter().enumerate().take(rank) {
            s.set(p / n, p % n, red.get(r, unknowns).clone());
        }
        match self.antipode_failure(&s) {
            None => Ok(s),
            Some(why) => Err(Error::NoAntipode(why)),
        }
    }

    // ---- group-likes ----

    /// Radical of the trace form `T(β, γ) = Tr(L_β L_γ)` of the regular
    /// representation of `H*`, in dual-basis coordinates. In characteristic
    /// zero this is the Jacobson radical of `H*`.
    pub fn dual_jacobson_radical(&self) -> Subspace {
        let n = self.dim();
        // (L_p)_{r,s} = coefficient of e_r* in e_p* e_s* = d[r][p][s]
        let mut form = Mat::zeros(&self.field, n, n);
        for r in 0..n {
            for (p, s, x) in self.comult_basis(r) {
                for (q, r2, y) in self.comult_basis(*s) {
                    if *r2 == r {
                        let v = form.get(*p, *q) + &(x * y);
                        form.set(*p, *q, v);
                    }
                }
            }
        }
        form.null_space()
    }

    /// Largest subcoalgebra of `C ∩ {a : Δ(a) = Δ^op(a)}`, where `C` is the
    /// coradical. This is the annihilator of the ideal of `H*` generated by
    /// its radical and its commutators, so it is spanned by the group-likes
    /// whenever they split over the field.
    fn grouplike_hull(&self) -> Subspace {
        let n = self.dim();
        let field = &self.field;
        let c = self.dual_jacobson_radical().annihilator();
        let c_vecs = c.vectors();
        if c_vecs.is_empty() {
            return c;
        }
        let cols: Vec<Vec<CycNumber>> = c_vecs
            .iter()
            .map(|v| {
                let d = self.comult(&HopfElement(v.clone()));
                d.sub(&d.transpose()).into_vec()
            })
            .collect();
        let kernel = Mat::from_columns(field, n * n, &cols).null_space();
        let mut w = self.combine(n, &c_vecs, &kernel);
        loop {
            let w_vecs = w.vectors();
            let m = w_vecs.len();
            if m == 0 {
                return w;
            }
            let ann = w.annihilator();
            if ann.dim() == 0 {
                return w;
            }
            let mut rows = Mat::zeros(field, 0, m);
            for p in 0..n {
                let e = self.dual_basis_functional(p);
                let mut left = Vec::with_capacity(m);
                let mut right = Vec::with_capacity(m);
                for v in &w_vecs {
                    let a = HopfElement(v.clone());
                    left.push(self.harpoon_left(&e, &a).0);
                    right.push(self.harpoon_right(&a, &e).0);
                }
                rows = rows
                    .vstack(&ann.basis().matmul(&Mat::from_columns(field, n, &left)))
                    .vstack(&ann.basis().matmul(&Mat::from_columns(field, n, &right)));
            }
            let kernel = rows.null_space();
            if kernel.dim() == m {
                return w;
            }
            w = self.combine(n, &w_vecs, &kernel);
        }
    }

    /// Subspace spanned by `Σ_s k_s · vecs[s]` for `k` in `coeffs`.
    fn combine(&self, n: usize, vecs: &[Vec<CycNumber>], coeffs: &Subspace) -> Subspace {
        let k = coeffs.vectors();
        let mut data = Vec::with_capacity(k.len() * n);
        for c in &k {
            let mut a = vec![self.field.zero(); n];
            for (s, x) in c.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (t, y) in vecs[s].iter().enumerate() {
                    if !y.is_zero() {
                        a[t] = &a[t] + &(x * y);
                    }
                }
            }
            data.extend(a);
        }
        Subspace::from_spanning(n, &Mat::from_vec(&self.field, k.len(), n, data))
    }

    /// All group-like elements with coordinates in `Q(ζ_N)`.
    ///
    /// Group-likes are the characters of `H*`, so they lie in the subcoalgebra
    /// `W` of [`Self::grouplike_hull`], and on it the operators
    /// `T_k(a) = (e_k*⊗id)Δ(a)` commute; a group-like `a` is a common
    /// eigenvector with eigenvalue `a_k`. The joint eigenspaces are refined
    /// operator by operator with eigenvalues drawn from
    /// `{0} ∪ {r·ζ^t : r ∈ Q}`.
    pub fn find_grouplikes(&self) -> Result<Vec<HopfElement>> {
        let n = self.dim();
        let field = &self.field;
        let w = self.grouplike_hull();
        let m = w.dim();
        if m == 0 {
            return Ok(Vec::new());
        }
        let w_vecs = w.vectors();

        // T_k restricted to W, in W's basis (columns = images)
        let mut ops = Vec::new();
        for k in 0..n {
            let mut cols = Vec::with_capacity(m);
            for v in &w_vecs {
                let img = self.harpoon_right(&HopfElement(v.clone()), &self.dual_basis_functional(k));
                cols.push(w.coordinates(&img.0).ok_or(Error::NotInvariant)?);
            }
            let op = Mat::from_columns(field, m, &cols);
            if !op.is_zero() {
                ops.push(op);
            }
        }

        let mut pieces = vec![Subspace::full(field, m)];
        for op in &ops {
            let mut next = Vec::new();
            for piece in pieces {
                if piece.dim() == 1 {
                    next.push(piece);
                    continue;
                }
                let basis = piece.vectors();
                let cols: Vec<Vec<CycNumber>> = basis
                    .iter()
                    .map(|v| piece.coordinates(&op.mul_vec(v)).ok_or(Error::NotInvariant))
                    .collect::<Result<_>>()?;
                let restricted = Mat::from_columns(field, piece.dim(), &cols);
                let roots = roots_in_candidate_set(&restricted.charpoly()?);
                let found: usize = roots.iter().map(|(_, k)| k).sum();
                if found < piece.dim() {
                    return Err(Error::EigenvalueNotInField {
                        order: field.order(),
                        detail: format!(
                            "operator on a {}-dimensional joint eigenspace has only {found} eigenvalues of the form r·ζ^t",
                            piece.dim()
                        ),
                    });
                }
                for (c, _) in roots {
                    let eig = op.eigenspace(&c)?.intersection(&piece);
                    if eig.dim() > 0 {
                        next.push(eig);
                    }
                }
            }
            pieces = next;
        }

        let mut out = Vec::new();
        for piece in pieces {
            for v in piece.vectors() {
                let mut a = vec![field.zero(); n];
                for (s, x) in v.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (t, y) in w_vecs[s].iter().enumerate() {
                        if !y.is_zero() {
                            a[t] = &a[t] + &(x * y);
                        }
                    }
                }
                let a = HopfElement(a);
                let eps = self.counit_of(&a);
                if eps.is_zero() {
                    continue;
                }
                let a = a.scale(&eps.inv()?);
                if self.is_grouplike(&a) && !out.contains(&a) {
                    out.push(a);
                }
            }
        }
        out.sort_by(|a, b| {
            let key = |x: &HopfElement| {
                let first = x.0.iter().position(|c| !c.is_zero()).unwrap_or(usize::MAX);
                let text: Vec<String> = x.0.iter().map(|c| c.to_string()).collect();
                (first, text)
            };
            key(a).cmp(&key(b))
        });
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{self, ZooSpec};
    use proptest::prelude::*;

    fn z3() -> HopfPresentation {
        ZooSpec::Cyclic { orders: vec![3], order: None }.build().unwrap()
    }

    fn t3() -> HopfPresentation {
        zoo::build_taft(3, 1, None).unwrap()
    }

    fn t5() -> HopfPresentation {
        zoo::build_taft(5, 1, None).unwrap()
    }

    #[test]
    fn malformed_tensors_rejected() {
        let f = CycField::rationals();
        let one = f.one();
        let bad = HopfPresentation::new(
            "bad",
            &f,
            vec!["1".into()],
            vec![StructEntry::new(0, 1, 0, one.clone())],
            vec![],
            vec![one.clone()],
            vec![one.clone()],
            None,
        );
        assert!(matches!(bad, Err(Error::MalformedTensor(_))));
        let short = HopfPresentation::new("bad", &f, vec!["1".into()], vec![], vec![], vec![], vec![one], None);
        assert!(matches!(short, Err(Error::MalformedTensor(_))));
    }

    #[test]
    fn duplicate_entries_merge() {
        let f = CycField::rationals();
        let one = f.one();
        let h = HopfPresentation::new(
            "k",
            &f,
            vec!["1".into()],
            vec![StructEntry::new(0, 0, 0, f.from_int(3)), StructEntry::new(0, 0, 0, f.from_int(-2))],
            vec![StructEntry::new(0, 0, 0, one.clone()), StructEntry::new(0, 0, 0, f.zero())],
            vec![one.clone()],
            vec![one.clone()],
            None,
        )
        .unwrap();
        assert_eq!(h.mult_entries(), [StructEntry::new(0, 0, 0, one.clone())]);
        assert_eq!(h.comult_entries().len(), 1);
        assert!(h.check_axioms().all_passed());
    }

    #[test]
    fn identity_antipode_fails_on_z3() {
        let h = z3();
        let f = h.field().clone();
        let bad = h.with_antipode(Mat::identity(&f, 3)).unwrap();
        let report = bad.check_axioms();
        assert!(!report.get("antipode").unwrap().passed);
        assert_eq!(report.failed().len(), 1);
    }

    #[test]
    fn z3_antipode_is_inversion() {
        let h = z3().without_antipode();
        let s = h.compute_antipode().unwrap();
        // g^i ↦ g^{-i}
        for i in 0..3 {
            assert_eq!(s.col(i), h.basis_element((3 - i) % 3).0);
        }
        assert_eq!(h.antipode_by_linear_system().unwrap(), s);
        assert!(h.check_axioms().all_passed());
    }

    #[test]
    fn monoid_bialgebra_has_no_antipode() {
        let h = zoo::idempotent_monoid_bialgebra().unwrap();
        let report = h.check_axioms();
        for name in
            ["associativity", "unit", "coassociativity", "counit", "comult-multiplicative", "counit-multiplicative"]
        {
            assert!(report.get(name).unwrap().passed, "{name}");
        }
        assert!(!report.get("antipode").unwrap().passed);
        assert!(matches!(h.compute_antipode(), Err(Error::NoAntipode(_))));
        assert!(matches!(h.antipode_by_linear_system(), Err(Error::NoAntipode(_))));
    }

    #[test]
    fn dual_of_z3_is_function_algebra() {
        let d = z3().dual();
        assert!(d.check_axioms().all_passed());
        // δ_a δ_b = [a = b] δ_a
        for a in 0..3 {
            for b in 0..3 {
                let expected: Vec<(usize, CycNumber)> = if a == b { vec![(a, d.field().one())] } else { vec![] };
                assert_eq!(d.mul_basis(a, b), expected.as_slice());
            }
        }
        assert_eq!(d.unit_coords(), z3().counit_coords());
        assert_eq!(d.name(), "dual(k[Z3])");
        assert_eq!(d.basis_labels()[1], "g*");
    }

    #[test]
    fn double_dual_is_identity() {
        for spec in zoo::corpus() {
            let h = spec.build().unwrap();
            assert_eq!(h.dual().dual(), h);
        }
    }

    #[test]
    fn dual_taft_passes_axioms() {
        let d = t3().dual();
        assert!(d.check_axioms().all_passed());
        assert_eq!(d.compute_antipode().unwrap(), *d.antipode().unwrap());
    }

    #[test]
    fn harpoons_by_counit_are_identity() {
        let h = t3();
        let eps = h.counit_functional();
        for i in 0..h.dim() {
            let a = h.basis_element(i);
            assert_eq!(h.harpoon_left(&eps, &a), a);
            assert_eq!(h.harpoon_right(&a, &eps), a);
        }
    }

    #[test]
    fn character_acts_by_scalar_on_grouplike() {
        let h = z3();
        let f = h.field().clone();
        // χ(g^i) = ζ^i
        let chi = Functional((0..3).map(|i| f.root_of_unity(i)).collect());
        let g = h.basis_element(1);
        assert_eq!(h.harpoon_left(&chi, &g), g.scale(&f.root_of_unity(1)));
    }

    #[test]
    fn delta_op_examples() {
        let h = t3();
        let g = h.basis_element(3);
        assert_eq!(h.delta_op(&g), h.comult(&g));
        let x = h.basis_element(1);
        let op = h.delta_op(&x);
        // x⊗1 + g⊗x
        let mut expected = Mat::zeros(h.field(), 9, 9);
        expected.set(1, 0, h.field().one());
        expected.set(3, 1, h.field().one());
        assert_eq!(op, expected);
        assert_eq!(op.transpose(), h.comult(&x));
    }

    #[test]
    fn s_powers() {
        let h = t3();
        let f = h.field().clone();
        assert!(h.s_power(0).unwrap().is_identity());
        assert!(z3().s_power(2).unwrap().is_identity());
        let x = h.basis_element(1);
        // S²(x) = ω⁻¹x
        assert_eq!(h.apply_s_power(2, &x).unwrap(), x.scale(&f.root_of_unity(-1)));
        assert_eq!(h.apply_s_power(-2, &x).unwrap(), x.scale(&f.root_of_unity(1)));
        let sing = h.clone().with_antipode(Mat::zeros(&f, 9, 9)).unwrap();
        assert!(matches!(sing.s_power(-1), Err(Error::NotInvertible)));
    }

    #[test]
    fn grouplike_predicate() {
        let h = t3();
        assert!(h.is_grouplike(&h.one()));
        assert!(h.is_grouplike(&h.basis_element(3)));
        assert!(!h.is_grouplike(&h.basis_element(1)));
        assert!(!h.is_grouplike(&h.zero_element()));
    }

    #[test]
    fn grouplikes_of_z3_and_taft() {
        let h = z3();
        let g = h.find_grouplikes().unwrap();
        assert_eq!(g, (0..3).map(|i| h.basis_element(i)).collect::<Vec<_>>());
        let t = t3();
        let g = t.find_grouplikes().unwrap();
        assert_eq!(g, [0, 3, 6].iter().map(|&i| t.basis_element(i)).collect::<Vec<_>>());
    }

    /// Brute force over coordinates in {0, 1, ζ, ζ²}: the only group-likes of
    /// T₃ with such coordinates are 1, g, g².
    #[test]
    fn taft_grouplikes_brute_force_oracle() {
        let t = t3();
        let f = t.field().clone();
        let values = [f.zero(), f.one(), f.root_of_unity(1), f.root_of_unity(2)];
        let mut found = Vec::new();
        let mut digits = [0usize; 9];
        loop {
            let a = HopfElement(digits.iter().map(|&d| values[d].clone()).collect());
            if t.counit_of(&a).is_one() && t.is_grouplike(&a) {
                found.push(a);
            }
            let mut pos = 0;
            while pos < 9 {
                digits[pos] += 1;
                if digits[pos] < 4 {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == 9 {
                break;
            }
        }
        let mut fast = t.find_grouplikes().unwrap();
        fast.sort_by_key(|a| a.0.iter().position(|c| !c.is_zero()));
        found.sort_by_key(|a| a.0.iter().position(|c| !c.is_zero()));
        assert_eq!(found, fast);
    }

    #[test]
    fn grouplikes_of_dual_z3_are_characters() {
        let h = z3();
        let d = h.dual();
        let f = h.field().clone();
        let mut chars: Vec<HopfElement> =
            (0..3).map(|k| HopfElement((0..3).map(|i| f.root_of_unity(k * i)).collect())).collect();
        let mut found = d.find_grouplikes().unwrap();
        let key = |a: &HopfElement| a.0.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        chars.sort_by_key(key);
        found.sort_by_key(key);
        assert_eq!(found, chars);
    }

    #[test]
    fn dual_z5_over_q_needs_extension() {
        let h = ZooSpec::Cyclic { orders: vec![5], order: Some(1) }.build().unwrap();
        let err = h.dual().find_grouplikes().unwrap_err();
        assert!(err.needs_field_extension(), "{err}");
    }

    #[test]
    fn grouplikes_form_a_group() {
        for h in [t3(), t5(), z3().dual(), t3().dual()] {
            let g = h.find_grouplikes().unwrap();
            assert!(g.contains(&h.one()));
            let s = h.antipode_matrix().unwrap();
            for a in &g {
                assert!(g.contains(&h.apply(s, a)));
                for b in &g {
                    assert!(g.contains(&h.mul(a, b)), "{}", h.name());
                }
            }
        }
    }

    #[test]
    fn antipode_anti_properties() {
        for h in [z3(), t3(), t3().dual()] {
            let s = h.antipode_matrix().unwrap();
            let n = h.dim();
            assert_eq!(h.apply(s, &h.one()), h.one());
            assert_eq!(s.vec_mul(h.counit_coords()), h.counit_coords());
            for i in 0..n {
                let a = h.basis_element(i);
                let sa = h.apply(s, &a);
                // Δ(S(a)) = (S⊗S)Δ^op(a)
                let lhs = h.comult(&sa);
                let rhs = s.matmul(&h.delta_op(&a)).matmul(&s.transpose());
                assert_eq!(lhs, rhs);
                for j in 0..n {
                    let b = h.basis_element(j);
                    let l = h.apply(s, &h.mul(&a, &b));
                    let r = h.mul(&h.apply(s, &b), &sa);
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn dual_jacobson_radical_dims() {
        // k[Z3]* is semisimple; T3* has radical of dim 6
        assert_eq!(z3().dual_jacobson_radical().dim(), 0);
        assert_eq!(t3().dual_jacobson_radical().dim(), 6);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn taft_mult_and_comult_agree_with_generators(a in 0usize..3, b in 0usize..3, c in 0usize..3, d in 0usize..3) {
            let h = t3();
            let lhs = h.comult(&h.mul(&h.basis_element(a * 3 + b), &h.basis_element(c * 3 + d)));
            let rhs = h.tensor_mul(&h.comult(&h.basis_element(a * 3 + b)), &h.comult(&h.basis_element(c * 3 + d)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn convolution_is_associative(seed in any::<u64>()) {
            use rand::SeedableRng;
            let h = t3();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = h.field().clone();
            let mut rand_fn = || Functional((0..9).map(|_| f.random(&mut rng, 3, 2)).collect());
            let (x, y, z) = (rand_fn(), rand_fn(), rand_fn());
            prop_assert_eq!(h.convolve(&h.convolve(&x, &y), &z), h.convolve(&x, &h.convolve(&y, &z)));
        }
    }
}
