use jumpquad::correction::{corrected_integrate_analytic, correction_tail_integral, jump_taylor_eval};
use jumpquad::detect::estimate_jumps;
use jumpquad::harness::{random_breakpoint_study_with, Execution};
use jumpquad::model::{eval_piecewise, jumps_from_analytic, GridSamples, Interval, JumpData, PiecewiseFunction};
use jumpquad::poly::Polynomial;
use jumpquad::rules::{integrate_classical, Method};
use proptest::prelude::*;
use proptest::test_runner::Config;

const RULES: [Method; 7] = [
    Method::Trapezoid,
    Method::Simpson13,
    Method::Simpson38,
    Method::GaussLegendre(2),
    Method::GaussLegendre(3),
    Method::GaussLegendre(4),
    Method::GaussLegendre(5),
];

fn coeffs(degree: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-10.0..10.0f64, degree + 1)
}

/// Cheap deterministic breakpoints in `(-1, 1)` derived from a proptest-drawn seed.
fn breakpoints(seed: u64, count: usize) -> impl Iterator<Item = f64> {
    let mut state = seed | 1;
    (0..count).map(move |_| {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        let u = (state >> 11) as f64 / (1u64 << 53) as f64;
        -0.999 + 1.998 * u
    })
}

fn scale(p: &[f64], q: &[f64]) -> f64 {
    p.iter().chain(q).map(|c| c.abs()).sum::<f64>().max(1.0)
}

fn exactness_case(method: Method, left: Vec<f64>, right: Vec<f64>, seed: u64, n_raw: usize) {
    let iv = Interval::new(-1.0, 1.0).unwrap();
    let n = method.admissible_n(n_raw);
    let (pl, pr) = (Polynomial::new(left.clone()), Polynomial::new(right.clone()));
    let tol = 1e-12 * scale(&left, &right);
    for x_star in breakpoints(seed, 100) {
        let f = PiecewiseFunction::from_polynomials(pl.clone(), pr.clone(), x_star);
        let exact = pl.integrate(-1.0, x_star) + pr.integrate(x_star, 1.0);
        let j = jumps_from_analytic(&f, method.exactness_degree()).unwrap();
        let got = corrected_integrate_analytic(&f, &j, iv, method, n).unwrap();
        assert!(
            (got - exact).abs() <= tol,
            "{method} n={n} x*={x_star}: {got} vs {exact}"
        );
    }
}

macro_rules! exactness_test {
    ($name:ident, $idx:expr) => {
        proptest! {
            #![proptest_config(Config::with_cases(100))]
            #[test]
            fn $name(
                (left, right) in (coeffs(RULES[$idx].exactness_degree()), coeffs(RULES[$idx].exactness_degree())),
                seed in any::<u64>(),
                n in 1usize..24,
            ) {
                exactness_case(RULES[$idx], left, right, seed, n);
            }
        }
    };
}

exactness_test!(corrected_trapezoid_exact_on_piecewise_linear, 0);
exactness_test!(corrected_simpson13_exact_on_piecewise_cubic, 1);
exactness_test!(corrected_simpson38_exact_on_piecewise_cubic, 2);
exactness_test!(corrected_gauss2_exact, 3);
exactness_test!(corrected_gauss3_exact, 4);
exactness_test!(corrected_gauss4_exact, 5);
exactness_test!(corrected_gauss5_exact, 6);

proptest! {
    #![proptest_config(Config::with_cases(64))]

    #[test]
    fn zero_jumps_change_nothing(
        rule in 0usize..RULES.len(),
        x_star in -0.99..0.99f64,
        freq in 0.5..6.0f64,
        l in 0usize..6,
        n in 1usize..40,
    ) {
        let method = RULES[rule];
        let n = method.admissible_n(n);
        let iv = Interval::new(-1.0, 1.0).unwrap();
        let g = move |x: f64| (freq * x).sin() + x * x;
        let f = PiecewiseFunction::from_fns(g, g, x_star);
        let plain = integrate_classical(|x| f.eval(x), iv, method, n).unwrap();
        let corrected = corrected_integrate_analytic(&f, &JumpData::zeros(x_star, l), iv, method, n).unwrap();
        prop_assert_eq!(plain.to_bits(), corrected.to_bits());
    }

    #[test]
    fn piecewise_eval_switches_at_breakpoint(x_star in -5.0..5.0f64, k in 1u32..4) {
        let f = PiecewiseFunction::from_polynomials(Polynomial::constant(-1.0), Polynomial::constant(1.0), x_star);
        let off = f64::EPSILON * x_star.abs().max(1.0) * k as f64;
        prop_assert_eq!(eval_piecewise(&f, x_star - off), -1.0);
        prop_assert_eq!(eval_piecewise(&f, x_star), 1.0);
        prop_assert_eq!(eval_piecewise(&f, x_star + off), 1.0);
    }

    #[test]
    fn identical_branches_have_zero_jumps(c in coeffs(5), x_star in -1.0..1.0f64, l in 0usize..7) {
        let p = Polynomial::new(c);
        let f = PiecewiseFunction::from_polynomials(p.clone(), p, x_star);
        let j = jumps_from_analytic(&f, l).unwrap();
        prop_assert!(j.jumps().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn one_sided_interpolation_reproduces_polynomial_jumps(
        stencil in 2usize..7,
        left in coeffs(6),
        right in coeffs(6),
        theta in 0.0..1.0f64,
    ) {
        let deg = stencil - 1;
        let pl = Polynomial::new(left[..=deg].to_vec());
        let pr = Polynomial::new(right[..=deg].to_vec());
        let iv = Interval::new(-1.0, 1.0).unwrap();
        let n = 40;
        let h = 2.0 / n as f64;
        // breakpoint inside cell 19, at or right of node 19
        let x_star = -1.0 + (19.0 + theta) * h;
        let f = PiecewiseFunction::from_polynomials(pl.clone(), pr.clone(), x_star);
        let s = GridSamples::sample(iv, n, |x| f.eval(x)).unwrap();
        let l = deg;
        let est = estimate_jumps(&s, x_star, l, stencil).unwrap();
        let exact = jumps_from_analytic(&f, l).unwrap();
        for k in 0..=l {
            let tol = 1e-10 * scale(&left, &right) * (1.0 + exact.jumps()[k].abs());
            prop_assert!(
                (est.jumps()[k] - exact.jumps()[k]).abs() <= tol,
                "k={} est={} exact={}", k, est.jumps()[k], exact.jumps()[k]
            );
        }
    }

    #[test]
    fn monte_carlo_independent_of_schedule(seed in any::<u64>(), points in 2usize..6) {
        let a = random_breakpoint_study_with(Execution::Sequential, points, 16, seed).unwrap();
        let b = random_breakpoint_study_with(Execution::Parallel, points, 16, seed).unwrap();
        prop_assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(Config::with_cases(24))]

    #[test]
    fn tail_matches_brute_force(
        jumps in prop::collection::vec(-10.0..10.0f64, 1..6),
        a in -2.0..0.0f64,
        width in 0.1..2.0f64,
        frac in 0.0..0.95f64,
    ) {
        let b = a + width;
        let x_star = a + frac * width;
        let j = JumpData::new(x_star, jumps).unwrap();
        let closed = correction_tail_integral(&j, b).unwrap();
        let cells = 1usize << 20;
        let h = (b - x_star) / cells as f64;
        let inner: f64 = (1..cells).map(|i| jump_taylor_eval(&j, x_star + i as f64 * h)).sum();
        let brute = h * (0.5 * (jump_taylor_eval(&j, x_star) + jump_taylor_eval(&j, b)) + inner);
        prop_assert!((closed - brute).abs() <= 1e-9, "{} vs {}", closed, brute);
    }
}
