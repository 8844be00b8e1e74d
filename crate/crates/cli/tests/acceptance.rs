//! Acceptance criteria 1-11. Runs without the libtest harness so that every
//! criterion prints exactly one line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use hopf_forge::integrals::{self, IntegralPair, TraceEvaluator, TraceVariant};
use hopf_forge::lab::{self, Eigenbasis, Key};
use hopf_forge::zoo::{self, ZooSpec};
use hopf_forge::{CycNumber, HopfPresentation, Mat};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus() -> Vec<HopfPresentation> {
    zoo::corpus().iter().map(|s| s.build().unwrap()).collect()
}

fn taft(n: u32) -> HopfPresentation {
    zoo::build_taft(n, 1, None).unwrap()
}

fn int(h: &HopfPresentation, v: i64) -> CycNumber {
    h.field().from_int(v)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut total = 0;
    for h in corpus() {
        let pair = IntegralPair::normalized(&h).unwrap();
        let eval = TraceEvaluator::new(&h, &pair).unwrap();
        let (f, n) = (h.field(), h.dim());
        for t in 0..20 {
            let m = Mat::from_fn(f, n, n, |_, _| f.random(&mut rng, 4, 3));
            let direct = m.trace().unwrap();
            for v in TraceVariant::ALL {
                let via = eval.trace(&m, v).unwrap();
                ensure(via == direct, || format!("{}: sample {t}, {v:?}: {via} != {direct}", h.name()))?;
                total += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{total} exact comparisons on 8 algebras in {secs:.1}s"))
}

/// `g(α⇀a↼α⁻¹)g⁻¹` from explicit Sweedler sums `Σ α⁻¹(a₁) a₂ α(a₃)`.
fn s4_oracle(h: &HopfPresentation, pair: &IntegralPair, i: usize) -> Vec<CycNumber> {
    let n = h.dim();
    let s = h.antipode_by_linear_system().unwrap();
    let alpha = &pair.alpha_dist.0;
    let alpha_inv: Vec<CycNumber> =
        (0..n).map(|a| (0..n).fold(int(h, 0), |acc, m| acc + &(s.get(m, a) * &alpha[m]))).collect();
    let mut inner = vec![int(h, 0); n];
    for e in h.comult_entries().iter().filter(|e| e.i == i) {
        for f in h.comult_entries().iter().filter(|f| f.i == e.j) {
            // e: Δ(e_i) ∋ c e_j ⊗ e_k ; f: Δ(e_j) ∋ d e_a ⊗ e_b
            let c = &(&e.value * &f.value) * &(&alpha_inv[f.j] * &alpha[e.k]);
            inner[f.k] = &inner[f.k] + &c;
        }
    }
    let g = &pair.g_dist;
    let g_inv = h.apply(&s, g);
    h.mul(&h.mul(g, &hopf_forge::HopfElement(inner)), &g_inv).0
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for h in corpus() {
        let pair = IntegralPair::normalized(&h).unwrap();
        let s4 = h.s_power(4).unwrap();
        for i in 0..h.dim() {
            ensure(s4.col(i) == s4_oracle(&h, &pair, i), || format!("{}: basis element {i}", h.name()))?;
            count += 1;
        }
        ensure(integrals::verify_s4_formula(&h, &pair).unwrap(), || format!("{}: library check", h.name()))?;
    }
    Ok(format!("{count} basis elements across 8 algebras"))
}

struct PqData {
    index: usize,
    trace: CycNumber,
    d: i64,
    dim_minus: usize,
}

fn pq_data(h: &HopfPresentation, p: i64) -> PqData {
    let pair = IntegralPair::normalized(h).unwrap();
    let index = lab::compute_index(h, &pair).unwrap().n;
    let s2p = h.s_power(2 * p).unwrap();
    let trace = s2p.trace().unwrap();
    let t = lab::integer_value(&trace).unwrap();
    let id = Mat::identity(h.field(), h.dim());
    let dim_minus = h.dim() - s2p.add(&id).rank();
    PqData { index, trace, d: t / (p * p), dim_minus }
}

fn pq_criterion(n: u32, expected_trace: i64) -> Outcome {
    let h = taft(n);
    let p = n as i64;
    let q = p;
    let data = pq_data(&h, p);
    ensure(data.index == n as usize, || format!("index {}", data.index))?;
    ensure(data.trace == int(&h, expected_trace), || format!("Tr(S^{}) = {}", 2 * p, data.trace))?;
    ensure(p * p * data.d == expected_trace, || format!("{} is not p^2 d", data.trace))?;
    ensure(data.d == 1 && data.d % 2 != 0, || format!("d = {}", data.d))?;
    ensure((data.d - p * q).rem_euclid(4) == 0, || format!("d = {} vs pq = {} mod 4", data.d, p * q))?;
    ensure(2 * data.dim_minus as i64 == p * (q - p * data.d), || format!("dim H- = {}", data.dim_minus))?;
    let rep = lab::trace_s2p_report(&h, &IntegralPair::normalized(&h).unwrap(), p as u64, q as u64).unwrap();
    ensure(rep.d == Some(data.d) && rep.congruence_ok() && rep.h_minus_formula_ok(), || {
        "library report disagrees".into()
    })?;
    Ok(format!(
        "index {n}, Tr(S^{}) = {} = {p}^2*{}, d = pq = {} mod 4, dim H- = {}",
        2 * p,
        data.trace,
        data.d,
        (p * q) % 4,
        data.dim_minus
    ))
}

fn criterion_3() -> Outcome {
    pq_criterion(3, 9)
}

fn criterion_4() -> Outcome {
    pq_criterion(5, 25)
}

fn omega(h: &HopfPresentation, n: usize) -> CycNumber {
    lab::omega_from_power(h.field(), n, 1).unwrap()
}

fn criterion_5() -> Outcome {
    let mut notes = Vec::new();
    for n in [3u32, 5] {
        let h = taft(n);
        let pair = IntegralPair::normalized(&h).unwrap();
        let t = lab::eigen_decomposition(&h, &pair, 1).unwrap();
        let n = n as usize;
        ensure(t.total_dim() == h.dim(), || format!("T{n}: dims sum to {}", t.total_dim()))?;
        // direct joint eigenspace dimensions
        let w = omega(&h, n);
        let s2 = h.s_power(2).unwrap();
        let rg = h.right_mult_matrix(&pair.g_dist);
        let id = Mat::identity(h.field(), h.dim());
        for k in Key::all(n) {
            let sign = if k.a == 0 { int(&h, 1) } else { int(&h, -1) };
            let lam = &sign * &w.pow(k.i as i64).unwrap();
            let mu = w.pow(k.j as i64).unwrap();
            let stacked = s2.sub(&id.scale(&lam)).vstack(&rg.sub(&id.scale(&mu)));
            let direct = h.dim() - stacked.rank();
            ensure(t.dim(k) == direct, || format!("T{n}: dim{k} = {} but direct {direct}", t.dim(k)))?;
            let partner = k.complement(t.x_vec(), n);
            ensure(t.dim(k) == t.dim(partner), || format!("T{n}: dim{k} != dim{partner}"))?;
        }
        let d = pq_data(&h, n as i64).d;
        for i in 0..n {
            for j in 0..n {
                let diff = t.dim(Key::new(0, i, j)) as i64 - t.dim(Key::new(1, i, j)) as i64;
                ensure(diff == d, || format!("T{n}: difference at ({i},{j}) is {diff}"))?;
                for a in 0..2 {
                    ensure(t.dim(Key::new(a, i, j)) == t.dim(Key::new(a, i, 0)), || {
                        format!("T{n}: dims depend on j at ({a},{i},{j})")
                    })?;
                }
            }
        }
        let rep = lab::dim_difference_check(&h, &pair, &t, d).unwrap();
        ensure(rep.difference.passed && rep.j_independence.is_some_and(|c| c.passed), || {
            format!("T{n}: library lemma check failed")
        })?;
        notes.push(format!("T{n}: {} spaces, x = {}", t.dims.values().filter(|d| **d > 0).count(), t.x_vec()));
    }
    Ok(notes.join("; "))
}

fn criterion_6() -> Outcome {
    let mut notes = Vec::new();
    for n in [3u32, 5] {
        let h = taft(n);
        let pair = IntegralPair::normalized(&h).unwrap();
        let t = lab::eigen_decomposition(&h, &pair, 1).unwrap();
        let basis = Eigenbasis::new(&h, &t).unwrap();
        let c = h.comult(&pair.big_lambda);
        let ce = basis.to_eigen(&c);
        let x = t.x_vec();
        let mut sum = Mat::zeros(h.field(), h.dim(), h.dim());
        let mut blocks = 0;
        for &a in basis.ranges.keys() {
            for &b in basis.ranges.keys() {
                if let Some(block) = basis.block_from_eigen(&ce, a, b) {
                    ensure(b == a.complement(x, n as usize), || format!("T{n}: block {a} x {b} off pattern"))?;
                    sum = sum.add(&block);
                    blocks += 1;
                }
            }
        }
        ensure(sum == c, || format!("T{n}: blocks do not rebuild Delta(Lambda)"))?;
        let nf = lab::normal_form(&h, &pair, &t, &basis).unwrap();
        ensure(nf.reconstruct(h.field(), h.dim()) == c, || format!("T{n}: normal form reconstruction"))?;
        let eval = TraceEvaluator::new(&h, &pair).unwrap();
        for k in Key::all(n as usize) {
            let e = basis.projection(k);
            let dim = int(&h, t.dim(k) as i64);
            ensure(e.trace().unwrap() == dim, || format!("T{n}: Tr E{k} direct"))?;
            ensure(eval.trace(&e, TraceVariant::One).unwrap() == dim, || format!("T{n}: Tr E{k} via formula"))?;
        }
        let traces = lab::projection_traces(&h, &pair, &t, &basis, &nf).unwrap();
        ensure(traces.values().all(|p| p.consistent()), || format!("T{n}: library projection traces"))?;
        notes.push(format!("T{n}: {blocks} blocks"));
    }
    Ok(notes.join("; "))
}

fn criterion_7() -> Outcome {
    let mut ranked = Vec::new();
    for h in corpus() {
        let pair = IntegralPair::normalized(&h).unwrap();
        if lab::compute_index(&h, &pair).unwrap().n == 1 {
            continue;
        }
        let rank = h.comult(&pair.big_lambda).rank();
        ensure(rank == h.dim(), || format!("{}: rank {rank}", h.name()))?;
        ranked.push(h.name().to_string());
    }
    for n in [3u32, 5] {
        let h = taft(n);
        let pair = IntegralPair::normalized(&h).unwrap();
        let t = lab::eigen_decomposition(&h, &pair, 1).unwrap();
        let basis = Eigenbasis::new(&h, &t).unwrap();
        let nf = lab::normal_form(&h, &pair, &t, &basis).unwrap();
        let w_inv = omega(&h, n as usize).inv().unwrap();
        let mut expected = Mat::zeros(h.field(), h.dim(), h.dim());
        for (k, block) in &nf.components {
            let sign = if k.a == 0 { int(&h, 1) } else { int(&h, -1) };
            let scalar = &sign * &w_inv.pow((k.i + k.j) as i64).unwrap();
            expected = expected.add(&block.scale(&scalar));
        }
        ensure(expected == h.delta_op(&pair.big_lambda), || format!("T{n}: Delta^op expansion"))?;
        let rep = lab::alternating_form_check(&h, &pair, &t, &basis, &nf).unwrap();
        ensure(rep.delta_op_ok(), || format!("T{n}: library Delta^op check"))?;
        let ell = t.ell();
        let n = n as usize;
        let v = Key::new(1, (n - ell % n) % n, ell);
        ensure(rep.v_key == v, || format!("T{n}: V key {} != {v}", rep.v_key))?;
        ensure(t.dim(v).is_multiple_of(2), || format!("T{n}: dim V = {}", t.dim(v)))?;
    }
    Ok(format!("full rank on {}; expansion exact on T3, T5; dim V = 0", ranked.join(", ")))
}

fn criterion_8() -> Outcome {
    let mut seen = Vec::new();
    for h in corpus() {
        let pair = IntegralPair::normalized(&h).unwrap();
        let n = lab::compute_index(&h, &pair).unwrap().n;
        if n.is_multiple_of(2) {
            continue;
        }
        let s2n = h.s_power(2 * n as i64).unwrap();
        let id = Mat::identity(h.field(), h.dim());
        let minus = h.dim() - s2n.add(&id).rank();
        let (_, lib_minus) = lab::h_plus_minus(&h, n).unwrap();
        ensure(minus == lib_minus, || format!("{}: {minus} vs {lib_minus}", h.name()))?;
        ensure(minus % 2 == 0, || format!("{}: dim H- = {minus}", h.name()))?;
        seen.push(format!("{}:{minus}", h.name()));
    }
    Ok(format!("dim H- {}", seen.join(" ")))
}

fn criterion_9() -> Outcome {
    let h = taft(3);
    let c = lab::coradical(&h);
    ensure(c.dim() == 3, || format!("dim C = {}", c.dim()))?;
    ensure(lab::is_subcoalgebra(&h, &c), || "not a subcoalgebra".into())?;
    let s6 = h.s_power(6).unwrap();
    ensure(c.is_invariant_under(&s6), || "not S^6-invariant".into())?;
    let rep = lab::coradical_traces(&h, &c, 3).unwrap();
    ensure(rep.trace_on_c == int(&h, 3), || format!("Tr(S^6|C) = {}", rep.trace_on_c))?;
    ensure(rep.trace_on_c_at_least(3), || "Tr(S^6|C) < p".into())?;
    ensure(&rep.trace_on_c + &rep.trace_on_quotient == s6.trace().unwrap(), || "traces do not add up".into())?;
    let grouplikes = h.find_grouplikes().unwrap();
    ensure(grouplikes.len() == c.dim() && rep.pointed(), || format!("|G(H)| = {}", grouplikes.len()))?;
    ensure(grouplikes.iter().all(|g| c.contains(&g.0)), || "group-likes outside C".into())?;
    Ok(format!("dim C = 3, Tr(S^6|C) = {}, Tr(S^6|H/C) = {}, pointed", rep.trace_on_c, rep.trace_on_quotient))
}

fn criterion_10() -> Outcome {
    let mut cells = Vec::new();
    for (spec, h) in zoo::corpus().iter().zip(corpus()) {
        let pair = IntegralPair::normalized(&h).unwrap();
        let eps_big = !h.counit_of(&pair.big_lambda).is_zero();
        let lambda_one = !pair.lambda.eval(&h.one()).is_zero();
        let tr_s2 = !h.s_power(2).unwrap().trace().unwrap().is_zero();
        ensure(eps_big == lambda_one && lambda_one == tr_s2, || {
            format!("{}: {eps_big} {lambda_one} {tr_s2}", h.name())
        })?;
        let group = matches!(spec, ZooSpec::Cyclic { .. } | ZooSpec::Cayley { .. });
        ensure(eps_big == group, || format!("{}: semisimple = {eps_big}", h.name()))?;
        cells.push(format!("{}:{}", h.name(), eps_big));
    }
    Ok(cells.join(" "))
}

fn criterion_11() -> Outcome {
    let dir = tempfile::TempDir::new().unwrap();
    let path = dir.path().join("t5.json");
    let bin = env!("CARGO_BIN_EXE_hopf-forge");
    let zoo = Command::new(bin).args(["zoo", "taft", "--n", "5", "--out"]).arg(&path).status().unwrap();
    ensure(zoo.success(), || "zoo failed".into())?;
    let run = || Command::new(bin).arg("report").arg(&path).arg("--json").output().unwrap();
    let (a, b) = (run(), run());
    ensure(a.status.success() && b.status.success(), || "report failed".into())?;
    ensure(a.stdout == b.stdout, || "outputs differ".into())?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("trace formula vs direct trace", criterion_1),
        ("S^4 formula", criterion_2),
        ("T3 index, trace, d, congruence", criterion_3),
        ("T5 index, trace, d, congruence", criterion_4),
        ("eigenspace partition and dimension identities", criterion_5),
        ("normal form of Delta(Lambda)", criterion_6),
        ("bilinear form and Delta^op expansion", criterion_7),
        ("dim H- even", criterion_8),
        ("coradical of T3", criterion_9),
        ("semisimplicity consistency", criterion_10),
        ("report determinism", criterion_11),
    ];
    let mut failures = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {title}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {title}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
