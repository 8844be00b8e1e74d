//! Closed-form constructors for the example corpus.

use num_integer::Integer;

use crate::cyclofield::{CycField, CycNumber};
use crate::error::{Error, Result};
use crate::hopf::{HopfPresentation, StructEntry};
use crate::linalg::Mat;

/// A named family member, buildable on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZooSpec {
    /// Product of cyclic groups `Z_{n1} × Z_{n2} × …`.
    Cyclic {
        orders: Vec<u32>,
        order: Option<u32>,
    },
    /// Group given by its Cayley table, identity anywhere.
    Cayley {
        name: String,
        table: Vec<Vec<usize>>,
        order: Option<u32>,
    },
    Taft {
        n: u32,
        root_power: i64,
        order: Option<u32>,
    },
    Sweedler,
    /// Both factors are lifted to `order` (default: the lcm of their orders).
    Tensor {
        left: Box<ZooSpec>,
        right: Box<ZooSpec>,
        order: Option<u32>,
    },
    Dual(Box<ZooSpec>),
    Trivial,
}

impl ZooSpec {
    pub fn build(&self) -> Result<HopfPresentation> {
        match self {
            ZooSpec::Cyclic { orders, order } => {
                let (labels, table) = cyclic_group_table(orders)?;
                let name = cyclic_name(orders);
                build_group_algebra_with(&name, labels, &table, *order)
            }
            ZooSpec::Cayley { name, table, order } => {
                let labels = (0..table.len()).map(|i| format!("e{i}")).collect();
                build_group_algebra_with(name, labels, table, *order)
            }
            ZooSpec::Taft { n, root_power, order } => build_taft(*n, *root_power, *order),
            ZooSpec::Sweedler => sweedler(),
            ZooSpec::Tensor { left, right, order } => tensor_lifted(&left.build()?, &right.build()?, *order),
            ZooSpec::Dual(inner) => build_dual_spec(inner),
            ZooSpec::Trivial => trivial(),
        }
    }
}

fn cyclic_name(orders: &[u32]) -> String {
    let parts: Vec<String> = orders.iter().map(|n| format!("Z{n}")).collect();
    format!("k[{}]", parts.join("x"))
}

/// Cayley table of `Z_{n1} × … × Z_{nr}` with mixed-radix indexing
/// (last factor fastest) and labels `g^a` (one factor) or `(a,b,…)`.
pub fn cyclic_group_table(orders: &[u32]) -> Result<(Vec<String>, Vec<Vec<usize>>)> {
    if orders.is_empty() || orders.contains(&0) {
        return Err(Error::BadParameters("cyclic orders must be positive".into()));
    }
    let size: usize = orders.iter().map(|&n| n as usize).product();
    if size > 4096 {
        return Err(Error::BadParameters(format!("group of order {size} is too large")));
    }
    let digits = |mut idx: usize| -> Vec<usize> {
        let mut d = vec![0; orders.len()];
        for (slot, &n) in d.iter_mut().zip(orders).rev() {
            *slot = idx % n as usize;
            idx /= n as usize;
        }
        d
    };
    let index = |d: &[usize]| d.iter().zip(orders).fold(0, |acc, (x, &n)| acc * n as usize + x);
    let table = (0..size)
        .map(|a| {
            let da = digits(a);
            (0..size)
                .map(|b| {
                    let db = digits(b);
                    let sum: Vec<usize> =
                        da.iter().zip(&db).zip(orders).map(|((x, y), &n)| (x + y) % n as usize).collect();
                    index(&sum)
                })
                .collect()
        })
        .collect();
    let labels = (0..size)
        .map(|a| {
            let d = digits(a);
            if orders.len() == 1 {
                power_label("g", d[0])
            } else {
                let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();
    Ok((labels, table))
}

fn power_label(sym: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    }
}

/// Group algebra `k[G]` over `Q(ζ_N)` with `N` the exponent of `G`.
pub fn build_group_algebra(name: &str, table: &[Vec<usize>]) -> Result<HopfPresentation> {
    let labels = (0..table.len()).map(|i| format!("e{i}")).collect();
    build_group_algebra_with(name, labels, table, None)
}

fn element_order(table: &[Vec<usize>], id: usize, a: usize) -> usize {
    let (mut x, mut k) = (a, 1);
    while x != id {
        x = table[x][a];
        k += 1;
    }
    k
}

/// Group algebra with explicit labels; `order` defaults to the exponent.
pub fn build_group_algebra_with(
    name: &str,
    labels: Vec<String>,
    table: &[Vec<usize>],
    order: Option<u32>,
) -> Result<HopfPresentation> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    if labels.len() != n {
        return Err(Error::BadParameters("label count does not match table".into()));
    }
    if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(Error::NotAGroup("table is not square or has out-of-range entries".into()));
    }
    let id = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    let mut inverse = vec![0; n];
    for a in 0..n {
        inverse[a] = (0..n)
            .find(|&b| table[a][b] == id && table[b][a] == id)
            .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("({a}{b}){c} != {a}({b}{c})")));
                }
            }
        }
    }
    let exponent = (0..n).fold(1usize, |acc, a| acc.lcm(&element_order(table, id, a)));
    let field = CycField::new(order.unwrap_or(exponent as u32))?;
    let one = field.one();
    let mut mult = Vec::with_capacity(n * n);
    for (a, row) in table.iter().enumerate() {
        for (b, &ab) in row.iter().enumerate() {
            mult.push(StructEntry::new(a, b, ab, one.clone()));
        }
    }
    let comult = (0..n).map(|a| StructEntry::new(a, a, a, one.clone())).collect();
    let mut unit = vec![field.zero(); n];
    unit[id] = one.clone();
    let counit = vec![one; n];
    let mut s = Mat::zeros(&field, n, n);
    for (a, &inv) in inverse.iter().enumerate() {
        s.set(inv, a, field.one());
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| if i == id && l.is_empty() { "1".to_string() } else { l })
        .collect();
    HopfPresentation::new(name, &field, labels, mult, comult, unit, counit, Some(s))
}

/// Taft algebra `T_n` with `ω = ζ_N^{root_power·N/n}`.
///
/// Relations `gⁿ = 1`, `xⁿ = 0`, `xg = ω·gx`; `Δ(g) = g⊗g`,
/// `Δ(x) = 1⊗x + x⊗g`; `S(g) = g⁻¹`, `S(x) = −xg⁻¹`. Basis `gⁱxʲ` sits at
/// index `i·n + j`. `order` defaults to `n`.
pub fn build_taft(n: u32, root_power: i64, order: Option<u32>) -> Result<HopfPresentation> {
    if n < 2 {
        return Err(Error::BadParameters(format!("Taft n must be at least 2, got {n}")));
    }
    if (root_power.rem_euclid(n as i64)).gcd(&(n as i64)) != 1 {
        return Err(Error::BadParameters(format!("root power {root_power} is not coprime to {n}")));
    }
    let big_n = order.unwrap_or(n);
    if !big_n.is_multiple_of(n) {
        return Err(Error::BadParameters(format!("cyclotomic order {big_n} is not a multiple of {n}")));
    }
    let field = CycField::new(big_n)?;
    let omega = field.root_of_unity(root_power * (big_n / n) as i64);
    let nn = n as usize;
    let dim = nn * nn;
    let idx = |a: usize, b: usize| (a % nn) * nn + b;

    let mut mult = Vec::new();
    for a in 0..nn {
        for b in 0..nn {
            for c in 0..nn {
                for d in 0..nn {
                    if b + d < nn {
                        let coeff = omega.pow((b * c) as i64)?;
                        mult.push(StructEntry::new(idx(a, b), idx(c, d), idx(a + c, b + d), coeff));
                    }
                }
            }
        }
    }
    let labels: Vec<String> = (0..dim)
        .map(|i| {
            let s = format!("{}{}", power_label("g", i / nn), power_label("x", i % nn));
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        })
        .collect();
    let mut unit = vec![field.zero(); dim];
    unit[0] = field.one();
    let counit: Vec<CycNumber> = (0..dim).map(|i| if i % nn == 0 { field.one() } else { field.zero() }).collect();
    let algebra = HopfPresentation::new(
        format!("taft(n={n},r={})", root_power.rem_euclid(n as i64)),
        &field,
        labels.clone(),
        mult.clone(),
        Vec::new(),
        unit.clone(),
        counit.clone(),
        None,
    )?;

    // Δ and S on gᵃxᵇ, built multiplicatively from the generators
    let e = |a: usize, b: usize| algebra.basis_element(idx(a, b));
    let pure = |i: usize, j: usize| {
        let mut m = Mat::zeros(&field, dim, dim);
        m.set(i, j, field.one());
        m
    };
    let delta_g = pure(idx(1, 0), idx(1, 0));
    let delta_x = pure(idx(0, 0), idx(0, 1)).add(&pure(idx(0, 1), idx(1, 0)));
    let s_g = e(nn - 1, 0);
    let s_x = algebra.mul(&e(0, 1), &e(nn - 1, 0)).scale(&field.from_int(-1));

    let mut comult = Vec::new();
    let mut s_cols = Vec::with_capacity(dim);
    let mut delta_ga = pure(0, 0);
    let mut s_ga = algebra.one();
    for a in 0..nn {
        let mut delta = delta_ga.clone();
        let mut s = s_ga.clone();
        for b in 0..nn {
            for j in 0..dim {
                for k in 0..dim {
                    let c = delta.get(j, k);
                    if !c.is_zero() {
                        comult.push(StructEntry::new(idx(a, b), j, k, c.clone()));
                    }
                }
            }
            s_cols.push((idx(a, b), s.0.clone()));
            delta = algebra.tensor_mul(&delta, &delta_x);
            s = algebra.mul(&s_x, &s);
        }
        delta_ga = algebra.tensor_mul(&delta_ga, &delta_g);
        s_ga = algebra.mul(&s_ga, &s_g);
    }
    s_cols.sort_by_key(|(i, _)| *i);
    let cols: Vec<Vec<CycNumber>> = s_cols.into_iter().map(|(_, c)| c).collect();
    let antipode = Mat::from_columns(&field, dim, &cols);
    HopfPresentation::new(algebra.name(), &field, labels, mult, comult, unit, counit, Some(antipode))
}

/// The four-dimensional Sweedler algebra, `T_2` over `Q`.
pub fn sweedler() -> Result<HopfPresentation> {
    Ok(build_taft(2, 1, Some(2))?.with_name("sweedler"))
}

/// The one-dimensional Hopf algebra `k`.
pub fn trivial() -> Result<HopfPresentation> {
    let field = CycField::rationals();
    let one = field.one();
    HopfPresentation::new(
        "k",
        &field,
        vec!["1".into()],
        vec![StructEntry::new(0, 0, 0, one.clone())],
        vec![StructEntry::new(0, 0, 0, one.clone())],
        vec![one.clone()],
        vec![one.clone()],
        Some(Mat::identity(&field, 1)),
    )
}

pub fn lift(h: &HopfPresentation, target: &CycField) -> Result<HopfPresentation> {
    h.lift(target)
}

/// `h1 ⊗ h2` with basis `e_i ⊗ f_j` at index `i·dim₂ + j`. Both factors
/// must already share a cyclotomic order.
pub fn build_tensor(h1: &HopfPresentation, h2: &HopfPresentation) -> Result<HopfPresentation> {
    if h1.cyclotomic_order() != h2.cyclotomic_order() {
        return Err(Error::OrderMismatch { left: h1.cyclotomic_order(), right: h2.cyclotomic_order() });
    }
    let field = h1.field();
    let d2 = h2.dim();
    let pair = |a: usize, b: usize| a * d2 + b;
    let combine = |x: &[StructEntry], y: &[StructEntry]| -> Vec<StructEntry> {
        let mut out = Vec::with_capacity(x.len() * y.len());
        for e in x {
            for f in y {
                out.push(StructEntry::new(pair(e.i, f.i), pair(e.j, f.j), pair(e.k, f.k), &e.value * &f.value));
            }
        }
        out
    };
    let kron = |a: &[CycNumber], b: &[CycNumber]| -> Vec<CycNumber> {
        a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
    };
    let labels =
        h1.basis_labels().iter().flat_map(|a| h2.basis_labels().iter().map(move |b| format!("{a}⊗{b}"))).collect();
    let s1 = match h1.antipode() {
        Some(s) => s.clone(),
        None => h1.compute_antipode()?,
    };
    let s2 = match h2.antipode() {
        Some(s) => s.clone(),
        None => h2.compute_antipode()?,
    };
    HopfPresentation::new(
        format!("{}⊗{}", h1.name(), h2.name()),
        field,
        labels,
        combine(h1.mult_entries(), h2.mult_entries()),
        combine(h1.comult_entries(), h2.comult_entries()),
        kron(h1.unit_coords(), h2.unit_coords()),
        kron(h1.counit_coords(), h2.counit_coords()),
        Some(s1.kronecker(&s2)),
    )
}

/// `a ⊗ b` after lifting both factors to `Q(ζ_order)`; the order defaults
/// to the lcm of the factors' orders.
pub fn tensor_lifted(a: &HopfPresentation, b: &HopfPresentation, order: Option<u32>) -> Result<HopfPresentation> {
    let target = order.unwrap_or_else(|| a.cyclotomic_order().lcm(&b.cyclotomic_order()));
    let field = CycField::new(target)?;
    build_tensor(&lift(a, &field)?, &lift(b, &field)?)
}

pub fn build_dual_spec(spec: &ZooSpec) -> Result<HopfPresentation> {
    Ok(spec.build()?.dual())
}

/// The monoid algebra of `{1, z}` with `z² = z`, both group-like. A
/// bialgebra with no antipode.
pub fn idempotent_monoid_bialgebra() -> Result<HopfPresentation> {
    let field = CycField::rationals();
    let one = field.one();
    let mult = vec![
        StructEntry::new(0, 0, 0, one.clone()),
        StructEntry::new(0, 1, 1, one.clone()),
        StructEntry::new(1, 0, 1, one.clone()),
        StructEntry::new(1, 1, 1, one.clone()),
    ];
    let comult = vec![StructEntry::new(0, 0, 0, one.clone()), StructEntry::new(1, 1, 1, one.clone())];
    HopfPresentation::new(
        "monoid{1,z}",
        &field,
        vec!["1".into(), "z".into()],
        mult,
        comult,
        vec![one.clone(), field.zero()],
        vec![one.clone(), one],
        None,
    )
}

/// The standard corpus used by the acceptance suite.
pub fn corpus() -> Vec<ZooSpec> {
    let cyc = |orders: &[u32]| ZooSpec::Cyclic { orders: orders.to_vec(), order: None };
    let taft = |n| ZooSpec::Taft { n, root_power: 1, order: None };
    vec![
        cyc(&[3]),
        cyc(&[5]),
        cyc(&[15]),
        cyc(&[3, 3]),
        taft(3),
        taft(5),
        ZooSpec::Dual(Box::new(taft(3))),
        ZooSpec::Tensor { left: Box::new(taft(3)), right: Box::new(cyc(&[5])), order: Some(15) },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrals::{self, IntegralPair};

    #[test]
    fn corpus_members_pass_axioms() {
        for spec in corpus() {
            let h = spec.build().unwrap();
            let report = h.check_axioms();
            assert!(report.all_passed(), "{}: {:?}", h.name(), report.failed());
            assert!(integrals::left_integral(&h).is_ok(), "{}", h.name());
        }
    }

    #[test]
    fn group_algebra_shapes() {
        let z3 = ZooSpec::Cyclic { orders: vec![3], order: None }.build().unwrap();
        assert_eq!(z3.dim(), 3);
        assert_eq!(z3.cyclotomic_order(), 3);
        assert_eq!(z3.basis_labels(), ["1", "g", "g^2"]);
        let z35 = ZooSpec::Cyclic { orders: vec![3, 5], order: None }.build().unwrap();
        assert_eq!(z35.dim(), 15);
        assert_eq!(z35.cyclotomic_order(), 15);
        assert!(z35.s_power(2).unwrap().is_identity());
        let z33 = ZooSpec::Cyclic { orders: vec![3, 3], order: None }.build().unwrap();
        assert_eq!(z33.dim(), 9);
        assert_eq!(z33.cyclotomic_order(), 3);
    }

    #[test]
    fn cayley_table_rejections() {
        // no identity
        assert!(matches!(build_group_algebra("bad", &[vec![1, 0], vec![1, 0]]), Err(Error::NotAGroup(_))));
        // identity but not associative: a loop of order 5 that is not a group
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(build_group_algebra("loop", &loop5), Err(Error::NotAGroup(_))));
        // S3 is fine and non-commutative
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let pq = [p[q[0]], p[q[1]], p[q[2]]];
                        perms.iter().position(|r| *r == pq).unwrap()
                    })
                    .collect()
            })
            .collect();
        let s3 = build_group_algebra("k[S3]", &table).unwrap();
        assert_eq!(s3.cyclotomic_order(), 6);
        assert!(s3.check_axioms().all_passed());
    }

    #[test]
    fn taft_parameters() {
        assert!(matches!(build_taft(1, 1, None), Err(Error::BadParameters(_))));
        assert!(matches!(build_taft(3, 3, None), Err(Error::BadParameters(_))));
        assert!(matches!(build_taft(3, 1, Some(4)), Err(Error::BadParameters(_))));
        let t = build_taft(3, 2, Some(6)).unwrap();
        assert_eq!(t.dim(), 9);
        assert!(t.check_axioms().all_passed());
    }

    #[test]
    fn taft_antipode_matches_closed_form() {
        let t = build_taft(3, 1, None).unwrap();
        let f = t.field().clone();
        let s = t.antipode_matrix().unwrap();
        // S(g) = g²
        assert_eq!(s.col(3), t.basis_element(6).0);
        // S(x) = −x g² = −ω² g² x
        let expected = t.basis_element(7).scale(&-f.root_of_unity(2));
        assert_eq!(s.col(1), expected.0);
        assert_eq!(&t.compute_antipode().unwrap(), s);
        assert_eq!(&t.antipode_by_linear_system().unwrap(), s);
    }

    #[test]
    fn sweedler_is_taft_two() {
        let h = sweedler().unwrap();
        assert_eq!(h.dim(), 4);
        assert_eq!(h.cyclotomic_order(), 2);
        assert!(h.check_axioms().all_passed());
        let pair = IntegralPair::compute(&h).unwrap();
        assert!(!integrals::is_semisimple(&h, &pair));
    }

    #[test]
    fn tensor_needs_matching_orders() {
        let t3 = build_taft(3, 1, None).unwrap();
        let z5 = ZooSpec::Cyclic { orders: vec![5], order: None }.build().unwrap();
        assert!(matches!(build_tensor(&t3, &z5), Err(Error::OrderMismatch { left: 3, right: 5 })));
        let f15 = CycField::new(15).unwrap();
        let t = build_tensor(&lift(&t3, &f15).unwrap(), &lift(&z5, &f15).unwrap()).unwrap();
        assert_eq!(t.dim(), 45);
        let pair = IntegralPair::compute(&t).unwrap();
        assert!(h_counit_zero(&t, &pair));
    }

    fn h_counit_zero(h: &HopfPresentation, pair: &IntegralPair) -> bool {
        h.counit_of(&pair.big_lambda).is_zero()
    }

    #[test]
    fn tensor_with_trivial_is_identity() {
        let t3 = build_taft(3, 1, None).unwrap();
        let k = trivial().unwrap().lift(t3.field()).unwrap();
        let t = build_tensor(&t3, &k).unwrap();
        assert_eq!(t.mult_entries(), t3.mult_entries());
        assert_eq!(t.comult_entries(), t3.comult_entries());
        assert_eq!(t.antipode(), t3.antipode());
    }

    #[test]
    fn z3_tensor_z5_matches_z15_invariants() {
        let f15 = CycField::new(15).unwrap();
        let z3 = ZooSpec::Cyclic { orders: vec![3], order: Some(15) }.build().unwrap();
        let z5 = ZooSpec::Cyclic { orders: vec![5], order: Some(15) }.build().unwrap();
        let prod = build_tensor(&z3, &z5).unwrap();
        let z15 = ZooSpec::Cyclic { orders: vec![15], order: None }.build().unwrap();
        assert_eq!(prod.field(), &f15);
        assert_eq!(prod.find_grouplikes().unwrap().len(), 15);
        assert_eq!(z15.find_grouplikes().unwrap().len(), 15);
        for h in [&prod, &z15] {
            let pair = IntegralPair::compute(h).unwrap();
            assert!(integrals::is_semisimple(h, &pair));
            assert!(integrals::is_cosemisimple(h, &pair));
            assert!(integrals::is_unimodular(h, &pair));
        }
    }

    #[test]
    fn double_dual_spec() {
        let spec = ZooSpec::Taft { n: 3, root_power: 1, order: None };
        let h = spec.build().unwrap();
        let dd = ZooSpec::Dual(Box::new(ZooSpec::Dual(Box::new(spec)))).build().unwrap();
        assert_eq!(dd, h);
        assert_eq!(dd.name(), h.name());
    }
}
