//! Identity checks with their own public entry points, and numeric helpers
//! shared by the registry.

use std::f64::consts::PI;

use crate::numerics::special::{digamma, log_gamma};
use crate::numerics::sum::NeumaierSum;
use crate::numerics::{quad_finite, quad_semi_infinite, ComplexValue, Decay, QuadratureSpec, EULER_GAMMA, LN_2PI};
use crate::stieltjes::gamma_k_integral;
use crate::{Error, Result};

use super::IdentityReport;

/// γ_k(a) through the integral route, the reference every check leans on.
pub(crate) fn gk(k: u32, a: f64, spec: &QuadratureSpec) -> Result<f64> {
    Ok(gamma_k_integral(k, a, spec)?.value)
}

/// Σ_{j≥0} (−1)^j f(j) from the partial sums S_n … S_{n+levels}, averaged
/// pairwise `levels` times (Euler's transform applied to the tail).
pub(crate) fn alternating_sum<F>(f: F, n: usize, levels: usize) -> Result<f64>
where
    F: Fn(usize) -> Result<f64>,
{
    let mut acc = NeumaierSum::new();
    let mut partials = Vec::with_capacity(levels + 1);
    for j in 0..=n + levels {
        let t = f(j)?;
        acc.add(if j % 2 == 0 { t } else { -t });
        if j >= n {
            partials.push(acc.value());
        }
    }
    for _ in 0..levels {
        partials = partials.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    Ok(partials[0])
}

/// First or second derivative at `x` by central differences with steps
/// h, h/2, h/4 and two Richardson levels.
pub(crate) fn richardson_derivative<F>(f: F, x: f64, h: f64, order: u32) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let fx = if order == 2 { f(x)? } else { 0.0 };
    let d = |h: f64| -> Result<f64> {
        let (p, m) = (f(x + h)?, f(x - h)?);
        Ok(match order {
            1 => (p - m) / (2.0 * h),
            2 => (p - 2.0 * fx + m) / (h * h),
            _ => return Err(Error::domain(format!("finite differences for order {order}"))),
        })
    };
    let (d0, d1, d2) = (d(h)?, d(h / 2.0)?, d(h / 4.0)?);
    let r1 = (4.0 * d1 - d0) / 3.0;
    let r2 = (4.0 * d2 - d1) / 3.0;
    Ok((16.0 * r2 - r1) / 15.0)
}

fn check_loglog_args(a: f64, p: f64, j: u32) -> Result<()> {
    if !(a > 0.0 && p > 0.0) || !a.is_finite() || !p.is_finite() {
        return Err(Error::domain(format!("need a, p > 0, got a={a} p={p}")));
    }
    if j > 1 {
        return Err(Error::domain(format!("log-log integral implemented for j ∈ {{0, 1}}, got {j}")));
    }
    Ok(())
}

/// ∫₀¹ t^{a−1} ln^j(ln t)/(1 + t^p) dt by quadrature, j ∈ {0, 1}, with the
/// branch ln(ln t) = ln|ln t| + iπ on (0, 1). After t = e^{−u} the real part
/// is ∫₀^∞ e^{−au} ln u/(1 + e^{−pu}) du and the imaginary part π times the
/// j = 0 integral.
pub fn loglog_integral(a: f64, p: f64, j: u32, spec: &QuadratureSpec) -> Result<ComplexValue> {
    check_loglog_args(a, p, j)?;
    let base = |u: f64| (-a * u).exp() / (1.0 + (-p * u).exp());
    let half = spec.with_abs_tol(0.5 * spec.abs_tol);
    let plain = quad_semi_infinite(base, 0.0, &Decay::exponential(a), &half)?.value;
    if j == 0 {
        return Ok(ComplexValue::new(plain, 0.0));
    }
    let f = |u: f64| if u == 0.0 { 0.0 } else { base(u) * u.ln() };
    let head = quad_finite(f, 0.0, 1.0, &half)?.value;
    let decay = Decay::exponential(a).with_log(1.0, 0.0).with_scale((-a).exp());
    let tail = quad_semi_infinite(f, 1.0, &decay, &half)?.value;
    Ok(ComplexValue::new(head + tail, PI * plain))
}

/// The closed forms the log-log integral is compared with: for j = 0,
/// −(1/2p)[ψ(x) − ψ(y)], and for j = 1,
/// (1/2p)[γ − iπ + ln 2p][ψ(x) − ψ(y)] − (1/2p)[γ_1(x) − γ_1(y)],
/// where x = a/2p and y = (a + p)/2p.
pub fn loglog_closed_form(a: f64, p: f64, j: u32, spec: &QuadratureSpec) -> Result<ComplexValue> {
    check_loglog_args(a, p, j)?;
    let (x, y) = (a / (2.0 * p), (a + p) / (2.0 * p));
    let dpsi = digamma(x)? - digamma(y)?;
    if j == 0 {
        return Ok(ComplexValue::new(-dpsi / (2.0 * p), 0.0));
    }
    let dg1 = gk(1, x, spec)? - gk(1, y, spec)?;
    let c = ComplexValue::new(EULER_GAMMA + (2.0 * p).ln(), -PI);
    Ok(c * (dpsi / (2.0 * p)) - dg1 / (2.0 * p))
}

/// π cot(πp/q)[ln(2πq) + γ] − 2π Σ_{j<q} ln Γ(j/q) sin(2πjp/q), as printed
/// for γ_1(p/q) − γ_1(1 − p/q).
pub fn adamchik_printed_rhs(p: i64, q: i64) -> Result<f64> {
    check_pq(p, q)?;
    let r = p as f64 / q as f64;
    let mut acc = NeumaierSum::new();
    acc.add(PI / (PI * r).tan() * ((2.0 * PI * q as f64).ln() + EULER_GAMMA));
    for j in 1..q {
        let angle = 2.0 * PI * ((j * p) % q) as f64 / q as f64;
        acc.add(-2.0 * PI * log_gamma(j as f64 / q as f64)? * angle.sin());
    }
    Ok(acc.value())
}

fn check_pq(p: i64, q: i64) -> Result<()> {
    if !(1 <= p && p < q) {
        return Err(Error::precondition(format!("need 1 ≤ p < q, got p={p} q={q}")));
    }
    if 2 * p == q {
        return Err(Error::precondition("p/q = 1/2 makes both sides vanish identically"));
    }
    Ok(())
}

/// γ_1(p/q) − γ_1(1 − p/q) against the reflection closed form. The printed
/// right-hand side has the opposite sign, so the comparison uses its negative
/// and records the printed value as a diagnostic.
pub fn adamchik_difference(p: i64, q: i64, spec: &QuadratureSpec) -> Result<IdentityReport> {
    check_pq(p, q)?;
    let r = p as f64 / q as f64;
    let lhs = gk(1, r, spec)? - gk(1, 1.0 - r, spec)?;
    let printed = adamchik_printed_rhs(p, q)?;
    Ok(IdentityReport::new(format!("reflection-difference[p/q={p}/{q}]"), lhs, -printed, 1e-7)
        .with_diagnostic("printed_rhs", printed))
}

/// γ_1(1/3) − γ_1(2/3) in closed form.
pub(crate) fn thirds_difference() -> Result<f64> {
    let ratio = log_gamma(1.0 / 3.0)? - log_gamma(2.0 / 3.0)?;
    Ok(-PI / 3f64.sqrt() * (LN_2PI + EULER_GAMMA - 3.0 * ratio + 3f64.ln()))
}

/// γ_1(1/4) − γ_1(3/4) in closed form.
pub(crate) fn quarters_difference() -> Result<f64> {
    let ratio = log_gamma(0.25)? - log_gamma(0.75)?;
    Ok(-PI * ((8.0 * PI).ln() + EULER_GAMMA - 2.0 * ratio))
}

/// γ_1(1/3) and γ_1(2/3) solved from their closed-form difference and their
/// sum 2γ_1 − 3(½ ln 3 + γ) ln 3.
pub fn corollary1_values(spec: &QuadratureSpec) -> Result<(f64, f64)> {
    let l3 = 3f64.ln();
    let sum = 2.0 * gk(1, 1.0, spec)? - 3.0 * (0.5 * l3 + EULER_GAMMA) * l3;
    let diff = thirds_difference()?;
    Ok((0.5 * (sum + diff), 0.5 * (sum - diff)))
}

/// γ_1(1/3) reconstructed from the two closed forms against the integral
/// route; γ_1(2/3) is checked the same way and recorded as a diagnostic.
pub fn corollary1_check(spec: &QuadratureSpec) -> Result<IdentityReport> {
    let (third, two_thirds) = corollary1_values(spec)?;
    let direct = gk(1, 1.0 / 3.0, spec)?;
    let direct2 = gk(1, 2.0 / 3.0, spec)?;
    Ok(IdentityReport::new("thirds-from-closed-forms[r=1/3]", direct, third, 1e-8)
        .with_diagnostic("gamma1_2/3_reconstructed", two_thirds)
        .with_diagnostic("gamma1_2/3_direct", direct2)
        .with_diagnostic("gamma1_2/3_abs_diff", (two_thirds - direct2).abs()))
}

/// 2 Σ_{n≥0} (−1)^{n+1} ln(n + a)/(n + a), Euler-accelerated.
pub(crate) fn alternating_log_sum(a: f64) -> Result<f64> {
    let s = alternating_sum(|n| Ok((n as f64 + a).ln() / (n as f64 + a)), 200, 30)?;
    Ok(-2.0 * s)
}

/// γ_1((a+1)/2) − γ_1(a/2) against ln 2 [ψ((a+1)/2) − ψ(a/2)] +
/// 2 Σ (−1)^{n+1} ln(n+a)/(n+a). The printed left side, γ_1(a/2) −
/// γ_1((a+1)/2), is the negative and is kept as a diagnostic.
pub fn alternating_sum_check(a: f64, spec: &QuadratureSpec) -> Result<IdentityReport> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain(format!("need a > 0, got {a}")));
    }
    let (x, y) = (0.5 * a, 0.5 * (a + 1.0));
    let lhs = gk(1, y, spec)? - gk(1, x, spec)?;
    let rhs = 2f64.ln() * (digamma(y)? - digamma(x)?) + alternating_log_sum(a)?;
    Ok(IdentityReport::new(format!("alternating-sum[a={a}]"), lhs, rhs, 1e-7).with_diagnostic("printed_lhs", -lhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn alternating_sum_of_known_series() {
        // Σ (−1)^j/(j+1) = ln 2
        let s = alternating_sum(|j| Ok(1.0 / (j as f64 + 1.0)), 50, 20).unwrap();
        assert!((s - 2f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn richardson_on_exp() {
        let d1 = richardson_derivative(|x| Ok(x.exp()), 0.5, 0.1, 1).unwrap();
        let d2 = richardson_derivative(|x| Ok(x.exp()), 0.5, 0.1, 2).unwrap();
        assert!((d1 - 0.5f64.exp()).abs() < 1e-11);
        assert!((d2 - 0.5f64.exp()).abs() < 1e-9);
    }

    #[test]
    fn loglog_trivial_cases() {
        let s = spec();
        let v = loglog_integral(1.0, 1.0, 0, &s).unwrap();
        assert!((v.re - 2f64.ln()).abs() < 1e-12 && v.im == 0.0);
        let v = loglog_integral(1.0, 1.0, 1, &s).unwrap();
        assert!((v.im - PI * 2f64.ln()).abs() < 1e-12);
        assert!(loglog_integral(0.0, 1.0, 0, &s).is_err());
        assert!(loglog_integral(1.0, 1.0, 2, &s).is_err());
    }

    #[test]
    fn loglog_matches_closed_form() {
        let s = spec();
        for (a, p) in [(1.0, 1.0), (0.5, 1.0), (1.0, 2.0)] {
            let q = loglog_integral(a, p, 1, &s).unwrap();
            let c = loglog_closed_form(a, p, 1, &s).unwrap();
            assert!((q - c).norm() < 1e-7, "(a,p)=({a},{p}): {q} vs {c}");
        }
    }

    #[test]
    fn adamchik_sign_and_exclusion() {
        let s = spec();
        let r = adamchik_difference(1, 4, &s).unwrap();
        assert!(r.pass, "{r:?}");
        assert!((r.lhs - quarters_difference().unwrap()).abs() < 1e-8);
        assert!((r.diagnostic("printed_rhs").unwrap() + quarters_difference().unwrap()).abs() < 1e-8);
        assert!(matches!(adamchik_difference(1, 2, &s), Err(Error::Precondition(_))));
        assert!(matches!(adamchik_difference(3, 3, &s), Err(Error::Precondition(_))));
    }

    #[test]
    fn corollary_reconstruction() {
        let r = corollary1_check(&spec()).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(r.diagnostic("gamma1_2/3_abs_diff").unwrap() < 1e-8);
    }

    #[test]
    fn alternating_sum_identity() {
        let s = spec();
        for a in [0.5, 1.0, 2.0] {
            let r = alternating_sum_check(a, &s).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }
}
