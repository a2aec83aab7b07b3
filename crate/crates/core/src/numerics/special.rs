//! Log-gamma, digamma and polygamma on the positive real axis.

use std::f64::consts::PI;

use crate::error::{Error, Result};

use super::quad::{quad_semi_infinite, Decay, QuadratureSpec};
use super::rational::Rational;
use super::sum::NeumaierSum;
use super::{factorial, BERNOULLI_EVEN, EULER_GAMMA, LN_SQRT_2PI};

const STIRLING_SHIFT: f64 = 7.0;

/// ln Γ(x) for x > 0: upward recurrence to x ≥ 7, then the Stirling series.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("log_gamma needs x > 0, got {x}")));
    }
    let mut z = x;
    let mut shift = NeumaierSum::new();
    while z < STIRLING_SHIFT {
        shift.add(z.ln());
        z += 1.0;
    }
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut pow = inv;
    for (r, b) in BERNOULLI_EVEN.iter().enumerate().take(8) {
        let two_r = 2.0 * (r + 1) as f64;
        series += b / (two_r * (two_r - 1.0)) * pow;
        pow *= inv2;
    }
    let mut acc = NeumaierSum::new();
    acc.add((z - 0.5) * z.ln());
    acc.add(-z);
    acc.add(LN_SQRT_2PI);
    acc.add(series);
    acc.add(-shift.value());
    Ok(acc.value())
}

/// ln Γ(x) from Binet's second formula,
/// (x − ½) ln x − x + ln√(2π) + 2∫₀^∞ atan(t/x)/(e^{2πt} − 1) dt.
/// An independent route used to cross-check [`log_gamma`].
pub fn log_gamma_binet(x: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("log_gamma_binet needs x > 0, got {x}")));
    }
    let kernel = |t: f64| {
        if t == 0.0 {
            1.0 / (2.0 * PI * x)
        } else {
            (t / x).atan() / (2.0 * PI * t).exp_m1()
        }
    };
    let decay = Decay::exponential(2.0 * PI)
        .with_poly(1.0)
        .with_scale(1.0 / x.min(1.0));
    let r = quad_semi_infinite(kernel, 0.0, &decay, &spec.with_abs_tol(spec.abs_tol / 2.0))?;
    Ok((x - 0.5) * x.ln() - x + LN_SQRT_2PI + 2.0 * r.value)
}

/// ψ(x) for real x off the poles.
pub fn digamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(format!("digamma of {x}")));
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::Pole(format!("digamma at nonpositive integer {x}")));
    }
    if x < 0.0 {
        // ψ(x) = ψ(1 − x) − π cot πx
        return Ok(digamma(1.0 - x)? - PI / (PI * x).tan());
    }
    let mut z = x;
    let mut shift = NeumaierSum::new();
    while z < 10.0 {
        shift.add(1.0 / z);
        z += 1.0;
    }
    let inv2 = 1.0 / (z * z);
    let mut series = 0.0;
    let mut pow = inv2;
    for (r, b) in BERNOULLI_EVEN.iter().enumerate().take(8) {
        series += b / (2.0 * (r + 1) as f64) * pow;
        pow *= inv2;
    }
    let mut acc = NeumaierSum::new();
    acc.add(z.ln());
    acc.add(-0.5 / z);
    acc.add(-series);
    acc.add(-shift.value());
    Ok(acc.value())
}

/// ψ(p/q) in closed form: Gauss's digamma theorem on the fractional part,
/// then the recurrence ψ(x + 1) = ψ(x) + 1/x.
pub fn digamma_rational(r: Rational) -> Result<f64> {
    let (p, q) = (r.num(), r.den());
    if p <= 0 && q == 1 {
        return Err(Error::Pole(format!("digamma at nonpositive integer {r}")));
    }
    if p <= 0 {
        // reflection, with cot π(p/q) exact up to rounding
        let one_minus = Rational::new(q - p, q)?;
        return Ok(digamma_rational(one_minus)? - PI / (PI * r.to_f64()).tan());
    }
    let whole = p / q;
    let frac = p % q;
    let mut acc = NeumaierSum::new();
    if frac == 0 {
        // ψ(n) = −γ + H_{n−1}
        acc.add(-EULER_GAMMA);
        for i in 1..whole {
            acc.add(1.0 / i as f64);
        }
        return Ok(acc.value());
    }
    let x = frac as f64 / q as f64;
    acc.add(-EULER_GAMMA);
    acc.add(-(2.0 * q as f64).ln());
    acc.add(-0.5 * PI / (PI * x).tan());
    let upper = (q + 1) / 2 - 1;
    for n in 1..=upper {
        let angle = 2.0 * PI * ((n * frac) % q) as f64 / q as f64;
        acc.add(2.0 * angle.cos() * (PI * n as f64 / q as f64).sin().ln());
    }
    for i in 0..whole {
        acc.add(q as f64 / (frac + i * q) as f64);
    }
    Ok(acc.value())
}

/// ψ^{(n)}(x) for n ≥ 1, x > 0.
pub fn polygamma(n: u32, x: f64) -> Result<f64> {
    if n == 0 {
        return digamma(x);
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("polygamma needs x > 0, got {x}")));
    }
    let nf = factorial(n);
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    let threshold = 15.0 + n as f64;
    let mut z = x;
    // ψ^{(n)}(x) = ψ^{(n)}(x + 1) + (−1)^{n+1} n!/x^{n+1}
    let mut shift = NeumaierSum::new();
    while z < threshold {
        shift.add(z.powi(-(n as i32) - 1));
        z += 1.0;
    }
    // (−1)^{n+1}[(n−1)!/z^n + n!/(2z^{n+1}) + Σ B_{2k}(2k+n−1)!/((2k)! z^{2k+n})]
    let mut acc = NeumaierSum::new();
    acc.add(factorial(n - 1) / z.powi(n as i32));
    acc.add(nf / (2.0 * z.powi(n as i32 + 1)));
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let two_k = 2 * (k as u32 + 1);
        let term = b * factorial(two_k + n - 1) / (factorial(two_k) * z.powi((two_k + n) as i32));
        acc.add(term);
    }
    acc.add(nf * shift.value());
    Ok(sign * acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const ZETA3: f64 = 1.202_056_903_159_594_3;

    #[test]
    fn log_gamma_spot_values() {
        assert!(log_gamma(1.0).unwrap().abs() < 1e-15);
        assert!(log_gamma(2.0).unwrap().abs() < 1e-15);
        assert!((log_gamma(0.5).unwrap() - 0.5 * PI.ln()).abs() < 1e-14);
        assert!((log_gamma(5.0).unwrap() - 24f64.ln()).abs() < 1e-14);
        // ln Γ(1e−3) = −ln(1e−3) + ln Γ(1.001); oracle: ln Γ(1+ε) ≈ −γε + ζ(2)ε²/2
        let eps: f64 = 1e-3;
        let lg1 = -EULER_GAMMA * eps + PI * PI / 12.0 * eps * eps - ZETA3 / 3.0 * eps.powi(3);
        assert!((log_gamma(eps).unwrap() - (-(eps.ln()) + lg1)).abs() < 1e-12);
    }

    #[test]
    fn log_gamma_large_argument_relative() {
        // ln Γ(n) = ln (n−1)! summed exactly in log form
        let n = 1000u32;
        let exact: f64 = (1..n).map(|k| (k as f64).ln()).collect::<NeumaierSum>().value();
        let got = log_gamma(n as f64).unwrap();
        assert!((got - exact).abs() <= 1e-13 * exact);
    }

    #[test]
    fn log_gamma_domain() {
        assert!(matches!(log_gamma(0.0), Err(Error::Domain(_))));
        assert!(log_gamma(-1.5).is_err());
    }

    #[test]
    fn binet_cross_check() {
        let spec = QuadratureSpec::default();
        for x in [0.5, 1.0, 2.5, 10.0] {
            let a = log_gamma(x).unwrap();
            let b = log_gamma_binet(x, &spec).unwrap();
            assert!((a - b).abs() < 1e-9, "x={x}: {a} vs {b}");
        }
    }

    #[test]
    fn digamma_spot_values() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-15);
        let half = -EULER_GAMMA - 2.0 * 2f64.ln();
        assert!((digamma(0.5).unwrap() - half).abs() < 1e-14);
        // series oracle ψ(x) = −γ + Σ (1/(n+1) − 1/(n+x)), with an integral tail
        let x = 0.5;
        let n_terms = 1_000_000u64;
        let mut s = NeumaierSum::new();
        for n in 0..n_terms {
            s.add(1.0 / (n as f64 + 1.0) - 1.0 / (n as f64 + x));
        }
        let tail = ((n_terms as f64 + x) / (n_terms as f64 + 1.0)).ln();
        assert!((-EULER_GAMMA + s.value() + tail - half).abs() < 1e-11);
    }

    #[test]
    fn digamma_poles() {
        assert!(matches!(digamma(0.0), Err(Error::Pole(_))));
        assert!(matches!(digamma(-3.0), Err(Error::Pole(_))));
        assert!(matches!(digamma_rational(Rational::integer(-2)), Err(Error::Pole(_))));
    }

    #[test]
    fn digamma_rational_matches_real() {
        for (p, q) in [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (2, 5), (7, 3), (5, 1), (1, 7), (13, 10), (-1, 3)] {
            let r = Rational::new(p, q).unwrap();
            let a = digamma_rational(r).unwrap();
            let b = digamma(r.to_f64()).unwrap();
            assert!((a - b).abs() < 1e-13, "{p}/{q}: {a} vs {b}");
        }
    }

    #[test]
    fn polygamma_spot_values() {
        assert!((polygamma(1, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-13);
        assert!((polygamma(1, 0.5).unwrap() - PI * PI / 2.0).abs() < 1e-13);
        let odd_series: f64 = 4.0
            * (0..2_000_000u64)
                .map(|n| 1.0 / ((2 * n + 1) as f64).powi(2))
                .collect::<NeumaierSum>()
                .value();
        assert!((polygamma(1, 0.5).unwrap() - odd_series).abs() < 1e-6);
        assert!((polygamma(2, 1.0).unwrap() + 2.0 * ZETA3).abs() < 1e-13);
        assert!(polygamma(1, 0.0).is_err());
    }

    #[test]
    fn polygamma_recurrence_at_small_argument() {
        for n in 1..=4u32 {
            let x = 0.037;
            let lhs = polygamma(n, x).unwrap() - polygamma(n, x + 1.0).unwrap();
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            let rhs = sign * factorial(n) / x.powi(n as i32 + 1);
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs(), "n={n}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn reflection(z in 0.001f64..0.999) {
            prop_assume!((z - 0.5).abs() > 1e-6);
            let r = digamma(z).unwrap() - digamma(1.0 - z).unwrap() + PI / (PI * z).tan();
            prop_assert!(r.abs() < 1e-11, "z={} r={}", z, r);
        }

        #[test]
        fn multiplication(z in 0.01f64..5.0, m in 2u32..=4) {
            let mut s = NeumaierSum::new();
            for k in 0..m {
                s.add(digamma(z + k as f64 / m as f64).unwrap());
            }
            let lhs = digamma(m as f64 * z).unwrap() - (m as f64).ln();
            let r = lhs - s.value() / m as f64;
            prop_assert!(r.abs() < 1e-11, "z={} m={} r={}", z, m, r);
        }

        #[test]
        fn duplication(x in 0.01f64..20.0) {
            let lhs = log_gamma(x).unwrap() - log_gamma(2.0 * x).unwrap();
            let rhs = 0.5 * PI.ln() + (1.0 - 2.0 * x) * 2f64.ln() - log_gamma(x + 0.5).unwrap();
            prop_assert!((lhs - rhs).abs() < 1e-11, "x={}", x);
        }
    }
}
