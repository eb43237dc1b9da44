//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use jumpquad::correction::{
    corrected_integrate_analytic, correction_tail_integral, jump_taylor_eval, tail_truncation_bound,
};
use jumpquad::harness::experiments::{experiment1, experiment2, experiment3, experiment4, Table, TableSeries};
use jumpquad::harness::oracle::adaptive_gauss;
use jumpquad::harness::{fitted_order, Execution};
use jumpquad::model::{jumps_from_analytic, Branch, Builtin, Interval, JumpData, PiecewiseFunction};
use jumpquad::poly::Polynomial;
use jumpquad::rules::{gauss_legendre_rule, integrate_classical, Method};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * ((rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64)
}

fn series(tables: &[Table], method: Method, corrected: bool) -> &TableSeries {
    tables
        .iter()
        .flat_map(|t| &t.series)
        .find(|s| s.method == method && s.corrected == corrected)
        .expect("series present")
}

fn fitted(s: &TableSeries) -> f64 {
    fitted_order(&s.report.levels, s.report.exact).unwrap_or(f64::NAN)
}

fn gauss_generation() -> Outcome {
    let s = |x: f64| x.sqrt();
    let r65 = s(6.0 / 5.0);
    let r107 = s(10.0 / 7.0);
    let closed: [(Vec<f64>, Vec<f64>); 4] = [
        (vec![-1.0 / s(3.0), 1.0 / s(3.0)], vec![1.0, 1.0]),
        (vec![-s(0.6), 0.0, s(0.6)], vec![5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0]),
        (
            {
                let (a, b) = (s(3.0 / 7.0 - 2.0 / 7.0 * r65), s(3.0 / 7.0 + 2.0 / 7.0 * r65));
                vec![-b, -a, a, b]
            },
            {
                let (wa, wb) = ((18.0 + s(30.0)) / 36.0, (18.0 - s(30.0)) / 36.0);
                vec![wb, wa, wa, wb]
            },
        ),
        (
            {
                let (a, b) = (s(5.0 - 2.0 * r107) / 3.0, s(5.0 + 2.0 * r107) / 3.0);
                vec![-b, -a, 0.0, a, b]
            },
            {
                let (wa, wb) = ((322.0 + 13.0 * s(70.0)) / 900.0, (322.0 - 13.0 * s(70.0)) / 900.0);
                vec![wb, wa, 128.0 / 225.0, wa, wb]
            },
        ),
    ];
    let mut worst: f64 = 0.0;
    let mut worst_sum: f64 = 0.0;
    for (i, (nodes, weights)) in closed.iter().enumerate() {
        let rule = gauss_legendre_rule(i + 2).unwrap();
        for (got, want) in rule.nodes().iter().zip(nodes).chain(rule.weights().iter().zip(weights)) {
            worst = worst.max((got - want).abs());
        }
        worst_sum = worst_sum.max((rule.weights().iter().sum::<f64>() - 2.0).abs());
    }
    check(
        worst <= 1e-14 && worst_sum <= 1e-14,
        format!("max node/weight deviation {worst:.2e}, max |sum w - 2| {worst_sum:.2e} (tol 1e-14)"),
    )
}

fn experiment3_reproduction() -> Outcome {
    let reports = experiment3(Execution::default(), &[2, 3, 4, 5], 1000, 7).unwrap();
    let max_corr = reports.iter().map(|r| r.max_corrected).fold(0.0, f64::max);
    let classical2 = reports[0].max_classical;
    let per: Vec<String> = reports
        .iter()
        .map(|r| format!("n={}: {:.2e}/{:.2e}", r.n_points, r.max_classical, r.max_corrected))
        .collect();
    check(
        max_corr <= 1e-10 && classical2 >= 0.1,
        format!(
            "classical/corrected maxima {} (need corrected <= 1e-10, classical n=2 >= 0.1)",
            per.join(", ")
        ),
    )
}

fn experiment1_reproduction() -> Outcome {
    let tables = experiment1(Execution::default()).unwrap();
    let trap = fitted(series(&tables, Method::Trapezoid, true));
    let s13 = series(&tables, Method::Simpson13, true);
    let s38 = series(&tables, Method::Simpson38, true);
    let (o13, o38) = (fitted(s13), fitted(s38));
    let fin13 = s13.report.levels.last().unwrap().error;
    let fin38 = s38.report.levels.last().unwrap().error;
    let classical: Vec<f64> = [Method::Trapezoid, Method::Simpson13, Method::Simpson38]
        .iter()
        .map(|&m| fitted(series(&tables, m, false)))
        .collect();
    let worst_classical = classical.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    check(
        trap >= 1.8 && o13 >= 3.5 && o38 >= 3.5 && fin13 <= 1e-13 && fin38 <= 1e-13 && worst_classical <= 1.3,
        format!(
            "corrected orders trap {trap:.3}, s1/3 {o13:.3}, s3/8 {o38:.3}; finest errors {fin13:.2e}, {fin38:.2e}; \
             classical orders {:.3}/{:.3}/{:.3}",
            classical[0], classical[1], classical[2]
        ),
    )
}

fn experiment2_reproduction() -> Outcome {
    let tables = experiment2(Execution::default()).unwrap();
    let corrected = series(&tables, Method::Simpson13, true);
    let classical = series(&tables, Method::Simpson13, false);
    let o = fitted(corrected);
    let fin = corrected.report.levels.last().unwrap().error;
    let oc = fitted(classical);
    check(
        o >= 3.5 && fin <= 1e-12 && oc <= 2.5,
        format!("detected+estimated corrected order {o:.3}, final error {fin:.2e}; classical order {oc:.3}"),
    )
}

fn experiment4_reproduction() -> Outcome {
    let tables = experiment4(Execution::default()).unwrap();
    let orders: Vec<f64> = (2..=4)
        .map(|m| fitted(series(&tables, Method::GaussLegendre(m), true)))
        .collect();
    let five = series(&tables, Method::GaussLegendre(5), true);
    let plateau = five
        .report
        .levels
        .iter()
        .filter(|l| l.n >= 32)
        .map(|l| l.error)
        .fold(0.0, f64::max);
    let pass = orders[0] >= 3.8 && orders[1] >= 5.5 && orders[2] >= 7.0 && plateau <= 1e-13;
    check(
        pass,
        format!(
            "corrected orders gl:2 {:.3}, gl:3 {:.3}, gl:4 {:.3}; gl:5 max error for n >= 32 {plateau:.2e}",
            orders[0], orders[1], orders[2]
        ),
    )
}

fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let iv = Interval::new(-1.0, 1.0).unwrap();
    let mut failures = Vec::new();

    // exactness on piecewise polynomials: 100 coefficient sets x 100 breakpoints per rule
    let rules = [
        Method::Trapezoid,
        Method::Simpson13,
        Method::Simpson38,
        Method::GaussLegendre(2),
        Method::GaussLegendre(3),
        Method::GaussLegendre(4),
        Method::GaussLegendre(5),
    ];
    let mut worst_rel: f64 = 0.0;
    for method in rules {
        let deg = method.exactness_degree();
        for _ in 0..100 {
            let left: Vec<f64> = (0..=deg).map(|_| uniform(&mut rng, -10.0, 10.0)).collect();
            let right: Vec<f64> = (0..=deg).map(|_| uniform(&mut rng, -10.0, 10.0)).collect();
            let scale = left.iter().chain(&right).map(|c| c.abs()).sum::<f64>().max(1.0);
            let (pl, pr) = (Polynomial::new(left), Polynomial::new(right));
            let n = method.admissible_n(1 + (rng.next_u64() % 16) as usize);
            for _ in 0..100 {
                let x_star = uniform(&mut rng, -0.999, 0.999);
                let f = PiecewiseFunction::from_polynomials(pl.clone(), pr.clone(), x_star);
                let exact = pl.integrate(-1.0, x_star) + pr.integrate(x_star, 1.0);
                let j = jumps_from_analytic(&f, deg).unwrap();
                let got = corrected_integrate_analytic(&f, &j, iv, method, n).unwrap();
                worst_rel = worst_rel.max((got - exact).abs() / scale);
            }
        }
    }
    if worst_rel > 1e-12 {
        failures.push(format!("exactness {worst_rel:.2e}"));
    }

    // zero jumps reproduce the classical rule bit for bit
    let mut zero_ok = true;
    for method in rules {
        for _ in 0..50 {
            let x_star = uniform(&mut rng, -0.99, 0.99);
            let freq = uniform(&mut rng, 0.5, 6.0);
            let g = move |x: f64| (freq * x).cos() + x;
            let f = PiecewiseFunction::from_fns(g, g, x_star);
            let n = method.admissible_n(1 + (rng.next_u64() % 30) as usize);
            let plain = integrate_classical(|x| f.eval(x), iv, method, n).unwrap();
            let corr = corrected_integrate_analytic(&f, &JumpData::zeros(x_star, 4), iv, method, n).unwrap();
            zero_ok &= plain.to_bits() == corr.to_bits();
        }
    }
    if !zero_ok {
        failures.push("zero-jump reduction not bit-exact".into());
    }

    // closed-form tail against a 2^20-cell trapezoid
    let mut worst_tail: f64 = 0.0;
    for _ in 0..8 {
        let len = 1 + (rng.next_u64() % 5) as usize;
        let jumps: Vec<f64> = (0..len).map(|_| uniform(&mut rng, -10.0, 10.0)).collect();
        let x_star = uniform(&mut rng, -1.0, 0.5);
        let b = x_star + uniform(&mut rng, 0.1, 1.5);
        let j = JumpData::new(x_star, jumps).unwrap();
        let cells = 1usize << 20;
        let h = (b - x_star) / cells as f64;
        let inner: f64 = (1..cells).map(|i| jump_taylor_eval(&j, x_star + i as f64 * h)).sum();
        let brute = h * (0.5 * (jump_taylor_eval(&j, x_star) + jump_taylor_eval(&j, b)) + inner);
        worst_tail = worst_tail.max((brute - correction_tail_integral(&j, b).unwrap()).abs());
    }
    if worst_tail > 1e-9 {
        failures.push(format!("tail deviation {worst_tail:.2e}"));
    }

    // truncation bound on the built-in functions
    let mut bound_ok = true;
    for name in ["exp1", "exp2", "exp4", "step", "poly2", "poly5"] {
        let b = Builtin::from_name(name).unwrap();
        let f = b.function();
        let (xs, end) = (b.breakpoint(), b.interval().b());
        let true_tail = adaptive_gauss(|x| f.right().eval(x) - f.left().eval(x), xs, end).unwrap();
        for l in 0..=6 {
            let j = jumps_from_analytic(&f, l).unwrap();
            let measured = (true_tail - correction_tail_integral(&j, end).unwrap()).abs();
            let sup = |side: &dyn Branch| {
                (0..=1000)
                    .map(|i| {
                        side.derivative(l + 1, xs + (end - xs) * i as f64 / 1000.0)
                            .unwrap()
                            .abs()
                    })
                    .fold(0.0, f64::max)
            };
            let bound = tail_truncation_bound(sup(f.left()), sup(f.right()), l, xs, end);
            bound_ok &= measured <= bound + 1e-13;
        }
    }
    if !bound_ok {
        failures.push("truncation bound violated".into());
    }

    // Gauss monomial exactness up to degree 2n - 1
    let mut worst_mono: f64 = 0.0;
    for n in 1..=20 {
        let rule = gauss_legendre_rule(n).unwrap();
        for m in 0..2 * n {
            let got: f64 = rule
                .nodes()
                .iter()
                .zip(rule.weights())
                .map(|(x, w)| w * x.powi(m as i32))
                .sum();
            let want = if m % 2 == 1 { 0.0 } else { 2.0 / (m + 1) as f64 };
            worst_mono = worst_mono.max((got - want).abs());
        }
    }
    if worst_mono > 5e-14 {
        failures.push(format!("monomial deviation {worst_mono:.2e}"));
    }

    check(
        failures.is_empty(),
        format!(
            "exactness rel {worst_rel:.2e} (1e-12), zero-jump bit-exact {zero_ok}, tail {worst_tail:.2e} (1e-9), \
             bound holds {bound_ok}, monomials {worst_mono:.2e} (5e-14){}",
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failed: {}", failures.join(", "))
            }
        ),
    )
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let run = |tag: &str| -> Vec<Vec<u8>> {
        let prefix = dir.path().join(tag);
        let status = Command::new(env!("CARGO_BIN_EXE_jumpquad"))
            .args(["experiment", "3", "--seed", "7", "--out", prefix.to_str().unwrap()])
            .output()
            .unwrap()
            .status;
        assert!(status.success());
        ["tab_exp1_n2", "tab_exp1_n3", "tab_exp1_n4", "tab_exp1_n5", "tab_exp1"]
            .iter()
            .map(|stem| fs::read(dir.path().join(format!("{tag}_{stem}.csv"))).unwrap())
            .collect()
    };
    let (a, b) = (run("first"), run("second"));
    let bytes: usize = a.iter().map(Vec::len).sum();
    check(
        a == b,
        format!("5 CSV files, {bytes} bytes, identical across runs: {}", a == b),
    )
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria: [Criterion; 7] = [
        ("AC1 Gauss-Legendre generation", secs(1), gauss_generation),
        (
            "AC2 Experiment 3 random breakpoints",
            secs(10),
            experiment3_reproduction,
        ),
        ("AC3 Experiment 1 jump function", secs(30), experiment1_reproduction),
        ("AC4 Experiment 2 detected corner", secs(30), experiment2_reproduction),
        (
            "AC5 Experiment 4 composite Gauss-Legendre",
            secs(60),
            experiment4_reproduction,
        ),
        ("AC6 property suite", None, property_suite),
        ("AC7 determinism of experiment 3", None, determinism),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let pass = outcome.pass && in_time;
        if !pass {
            failed += 1;
        }
        let limit = limit.map_or_else(|| "no limit".to_owned(), |l| format!("limit {} s", l.as_secs()));
        println!(
            "[{}] {name}: {}; runtime {:.3} s ({limit})",
            if pass { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64(),
        );
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
