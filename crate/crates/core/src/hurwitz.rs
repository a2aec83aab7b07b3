//! Hurwitz zeta ζ(s, a) and its s-derivatives on the real axis.
//!
//! For s > 1 the defining series is summed directly with an Euler–Maclaurin
//! tail; derivatives in s come from carrying a truncated Taylor expansion in
//! s through every term, so ζ, ζ', ζ'', … are produced together and none of
//! them involves numerical differentiation. Everywhere else (and as a second
//! route for s > 1) the Hermite integral is used.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::special::{digamma, log_gamma, polygamma};
use crate::numerics::sum::NeumaierSum;
use crate::numerics::{factorial, quad_semi_infinite, Decay, QuadratureSpec, BERNOULLI_EVEN, LN_SQRT_2PI};

/// Euler–Maclaurin correction terms used past the explicit part of the sum.
const EM_TERMS: usize = 6;

/// Highest s-derivative the series jet supports.
pub const MAX_JET_ORDER: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HurwitzMethod {
    DirectSeries,
    Hermite,
    LaplaceIntegral,
}

impl HurwitzMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            HurwitzMethod::DirectSeries => "direct-series",
            HurwitzMethod::Hermite => "hermite",
            HurwitzMethod::LaplaceIntegral => "laplace-integral",
        }
    }
}

/// One evaluation of ζ^{(deriv_order)}(s, a) with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HurwitzEval {
    pub s: f64,
    pub a: f64,
    pub deriv_order: usize,
    pub value: f64,
    pub err_est: f64,
    pub method: HurwitzMethod,
}

fn check_a(a: f64) -> Result<()> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain(format!("Hurwitz zeta needs a > 0, got {a}")));
    }
    Ok(())
}

/// Truncated power series in ε = s − s0.
#[derive(Debug, Clone)]
struct Jet(Vec<f64>);

impl Jet {
    fn exp_linear(scale: f64, slope: f64, len: usize) -> Jet {
        // scale · e^{slope·ε}
        let mut c = Vec::with_capacity(len);
        let mut v = scale;
        for i in 0..len {
            c.push(v);
            v *= slope / (i + 1) as f64;
        }
        Jet(c)
    }

    fn mul(&self, other: &Jet) -> Jet {
        let n = self.0.len();
        let mut c = vec![0.0; n];
        for i in 0..n {
            for j in 0..n - i {
                c[i + j] += self.0[i] * other.0[j];
            }
        }
        Jet(c)
    }

    fn linear(c0: f64, len: usize) -> Jet {
        let mut c = vec![0.0; len];
        c[0] = c0;
        if len > 1 {
            c[1] = 1.0;
        }
        Jet(c)
    }

    /// 1/(c0 + ε)
    fn reciprocal_linear(c0: f64, len: usize) -> Jet {
        let mut c = Vec::with_capacity(len);
        let mut v = 1.0 / c0;
        for _ in 0..len {
            c.push(v);
            v *= -1.0 / c0;
        }
        Jet(c)
    }

    fn add_assign(&mut self, other: &Jet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    /// Derivatives d^j/dε^j at ε = 0.
    fn derivatives(&self) -> Vec<f64> {
        self.0
            .iter()
            .enumerate()
            .map(|(j, c)| c * factorial(j as u32))
            .collect()
    }
}

/// [ζ(s,a), ζ'(s,a), …, ζ^{(order)}(s,a)] for s > 1 from the differentiated
/// direct series. Returns the values and an error estimate (size of the
/// first omitted Euler–Maclaurin term, per derivative order).
pub fn hurwitz_zeta_jet(order: usize, s: f64, a: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    check_a(a)?;
    if s == 1.0 {
        return Err(Error::Pole("Hurwitz zeta at s = 1".into()));
    }
    if !(s > 1.0) {
        return Err(Error::domain(format!("direct series needs s > 1, got {s}")));
    }
    if order > MAX_JET_ORDER {
        return Err(Error::domain(format!("derivative order {order} > {MAX_JET_ORDER}")));
    }
    let len = order + 1;
    let n_terms = (10.0 / (s - 1.0)).ceil().max(50.0);
    if n_terms > 1e8 {
        return Err(Error::precondition(format!("s = {s} too close to the pole for the direct series")));
    }
    let n_terms = n_terms as u64;

    let mut sums: Vec<NeumaierSum> = (0..len).map(|_| NeumaierSum::new()).collect();
    for n in (0..n_terms).rev() {
        let x = n as f64 + a;
        let l = x.ln();
        let mut v = x.powf(-s);
        for acc in sums.iter_mut() {
            acc.add(v);
            v *= -l;
        }
    }

    // tail: X^{1−s}/(s−1) + X^{−s}/2 + Σ_r B_{2r}/(2r)! (s)_{2r−1} X^{−s−2r+1}
    let x = n_terms as f64 + a;
    let l = x.ln();
    let mut tail = Jet::exp_linear(x.powf(1.0 - s), -l, len).mul(&Jet::reciprocal_linear(s - 1.0, len));
    tail.add_assign(&Jet::exp_linear(0.5 * x.powf(-s), -l, len));
    let mut rising = Jet::linear(s, len);
    let mut omitted = Jet(vec![0.0; len]);
    for r in 1..=EM_TERMS + 1 {
        let power = Jet::exp_linear(x.powf(-s - (2 * r) as f64 + 1.0), -l, len);
        let term = rising.mul(&power);
        let coeff = BERNOULLI_EVEN[r - 1] / factorial(2 * r as u32);
        let scaled = Jet(term.0.iter().map(|c| c * coeff).collect());
        if r <= EM_TERMS {
            tail.add_assign(&scaled);
            // (s)_{2r+1} = (s)_{2r−1} (s + 2r − 1)(s + 2r)
            rising = rising
                .mul(&Jet::linear(s + (2 * r - 1) as f64, len))
                .mul(&Jet::linear(s + (2 * r) as f64, len));
        } else {
            omitted = scaled;
        }
    }
    let tail = tail.derivatives();
    let omitted = omitted.derivatives();
    let values = sums
        .iter()
        .zip(&tail)
        .map(|(acc, t)| acc.value() + t)
        .collect::<Vec<_>>();
    let errs = values
        .iter()
        .zip(&omitted)
        .map(|(v, o)| o.abs() + 4.0 * f64::EPSILON * v.abs())
        .collect();
    Ok((values, errs))
}

/// ζ(s, a) through the Hermite integral, valid for every s ≠ 1.
pub fn hurwitz_zeta_hermite(s: f64, a: f64, spec: &QuadratureSpec) -> Result<HurwitzEval> {
    check_a(a)?;
    if s == 1.0 {
        return Err(Error::Pole("Hurwitz zeta at s = 1".into()));
    }
    let kernel = |y: f64| {
        if y == 0.0 {
            return s / (2.0 * PI) * a.powf(-s - 1.0);
        }
        (s * (y / a).atan()).sin() * (y * y + a * a).powf(-0.5 * s) / (2.0 * PI * y).exp_m1()
    };
    let growth = (-s).max(0.0);
    let decay = Decay::exponential(2.0 * PI)
        .with_poly(growth)
        .with_scale(2.0 * a.max(1.0).powf(growth) * (1.0 + s.abs()));
    let lead = 0.5 * a.powf(-s) + a.powf(1.0 - s) / (s - 1.0);
    let tol = spec.with_abs_tol(0.5 * spec.abs_tol);
    let r = quad_semi_infinite(kernel, 0.0, &decay, &tol)?;
    Ok(HurwitzEval {
        s,
        a,
        deriv_order: 0,
        value: lead + 2.0 * r.value,
        err_est: 2.0 * r.err_est,
        method: HurwitzMethod::Hermite,
    })
}

/// ζ(s, a): direct series for s > 1, Hermite integral otherwise.
pub fn hurwitz_eval(s: f64, a: f64, spec: &QuadratureSpec) -> Result<HurwitzEval> {
    check_a(a)?;
    if s == 1.0 {
        return Err(Error::Pole("Hurwitz zeta at s = 1".into()));
    }
    if s > 1.0 && (10.0 / (s - 1.0)) < 1e7 {
        let (v, e) = hurwitz_zeta_jet(0, s, a)?;
        return Ok(HurwitzEval {
            s,
            a,
            deriv_order: 0,
            value: v[0],
            err_est: e[0],
            method: HurwitzMethod::DirectSeries,
        });
    }
    hurwitz_zeta_hermite(s, a, spec)
}

pub fn hurwitz_zeta(s: f64, a: f64, spec: &QuadratureSpec) -> Result<f64> {
    hurwitz_eval(s, a, spec).map(|e| e.value)
}

/// ζ^{(j)}(s, a) for s > 1 from the differentiated series.
pub fn hurwitz_zeta_sderiv(j: usize, s: f64, a: f64) -> Result<HurwitzEval> {
    let (v, e) = hurwitz_zeta_jet(j, s, a)?;
    Ok(HurwitzEval {
        s,
        a,
        deriv_order: j,
        value: v[j],
        err_est: e[j],
        method: HurwitzMethod::DirectSeries,
    })
}

/// ζ^{(j)}(s, a), j ∈ {0, 1, 2}, s > 1, from the Laplace integral
/// Γ(s)ζ(s,a) = ∫₀^∞ t^{s−1} e^{−at}/(1 − e^{−t}) dt.
///
/// Differentiating under the integral sign brings down ln t but also
/// differentiates 1/Γ(s), so the moments M_j carry digamma terms:
/// M_1 = ζ' + ψζ and M_2 = ζ'' + 2ψζ' + (ψ' + ψ²)ζ.
pub fn hurwitz_zeta_sderiv_laplace(j: usize, s: f64, a: f64, spec: &QuadratureSpec) -> Result<HurwitzEval> {
    check_a(a)?;
    if !(s > 1.0) {
        return Err(Error::domain(format!("Laplace representation needs s > 1, got {s}")));
    }
    if j > 2 {
        return Err(Error::domain(format!("Laplace cross-check supports j ≤ 2, got {j}")));
    }
    let lg = log_gamma(s)?;
    let moment = |p: i32| -> Result<(f64, f64)> {
        let f = move |t: f64| {
            if t == 0.0 {
                return 0.0;
            }
            let base = ((s - 1.0) * t.ln() - a * t - lg).exp() / -(-t).exp_m1();
            base * t.ln().powi(p)
        };
        let decay = Decay::exponential(a)
            .with_poly(s - 1.0)
            .with_log(p as f64, 0.0)
            .with_scale(1.6 * (-lg).exp());
        // split at t = 1 so the endpoint singularity and the tail are separate panels
        let head = crate::numerics::quad_finite(f, 0.0, 1.0, &spec.with_abs_tol(0.5 * spec.abs_tol))?;
        let tail = quad_semi_infinite(f, 1.0, &shift_decay(decay, 1.0, s - 1.0), &spec.with_abs_tol(0.5 * spec.abs_tol))?;
        Ok((head.value + tail.value, head.err_est + tail.err_est))
    };
    let (m0, e0) = moment(0)?;
    let psi = digamma(s)?;
    let (value, err) = match j {
        0 => (m0, e0),
        1 => {
            let (m1, e1) = moment(1)?;
            (m1 - psi * m0, e1 + psi.abs() * e0)
        }
        _ => {
            let (m1, e1) = moment(1)?;
            let (m2, e2) = moment(2)?;
            let d1 = m1 - psi * m0;
            let tri = polygamma(1, s)?;
            (
                m2 - 2.0 * psi * d1 - (tri + psi * psi) * m0,
                e2 + 2.0 * psi.abs() * e1 + (tri + psi * psi) * e0,
            )
        }
    };
    Ok(HurwitzEval {
        s,
        a,
        deriv_order: j,
        value,
        err_est: err,
        method: HurwitzMethod::LaplaceIntegral,
    })
}

/// Re-anchor an envelope written in t so that it is measured from `lo`.
fn shift_decay(d: Decay, lo: f64, poly: f64) -> Decay {
    // t^{poly} ≤ (1+y)^{poly} lo^{…} for t = lo + y ≥ 1
    let scale = d.scale * (-d.rate * lo).exp() * lo.max(1.0).powf(poly.max(0.0));
    Decay { scale, log_shift: lo.ln_1p(), ..d }
}

/// ζ'(0, a) = ln Γ(a) − ln √(2π).
pub fn zeta_prime_zero(a: f64) -> Result<f64> {
    check_a(a)?;
    Ok(log_gamma(a)? - LN_SQRT_2PI)
}

/// ζ''(0, a) from the s-derivative of the Hermite integral:
/// ½ln²a + 2a ln a − a ln²a − 2a − 2∫₀^∞ atan(y/a) ln(a² + y²)/(e^{2πy} − 1) dy.
pub fn zeta_doubleprime_zero(a: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_a(a)?;
    let kernel = |y: f64| {
        if y == 0.0 {
            return (a * a).ln() / (2.0 * PI * a);
        }
        (y / a).atan() * (a * a + y * y).ln() / (2.0 * PI * y).exp_m1()
    };
    let decay = Decay::exponential(2.0 * PI)
        .with_log(1.0, 0.0)
        .with_scale(2.0 * PI * (2.0 + (a * a).ln().abs() + 2.0 * a.max(1.0).ln()));
    let r = quad_semi_infinite(kernel, 0.0, &decay, &spec.with_abs_tol(0.25 * spec.abs_tol))?;
    let l = a.ln();
    let mut acc = NeumaierSum::new();
    acc.add(0.5 * l * l);
    acc.add(2.0 * a * l);
    acc.add(-a * l * l);
    acc.add(-2.0 * a);
    acc.add(-2.0 * r.value);
    Ok(acc.value())
}

/// |ζ(1−s, p/q) − 2Γ(s)(2πq)^{−s} Σ_{r=1}^{q} cos(πs/2 − 2πrp/q) ζ(s, r/q)|.
pub fn functional_equation_residual(s: f64, p: i64, q: i64, spec: &QuadratureSpec) -> Result<f64> {
    if !(1 <= p && p <= q) {
        return Err(Error::precondition(format!("need 1 ≤ p ≤ q, got p={p} q={q}")));
    }
    if !(s > 1.0 && s < 4.0) {
        return Err(Error::precondition(format!("residual check needs s ∈ (1, 4), got {s}")));
    }
    let lhs = hurwitz_zeta_hermite(1.0 - s, p as f64 / q as f64, spec)?.value;
    let mut acc = NeumaierSum::new();
    for r in 1..=q {
        let angle = 0.5 * PI * s - 2.0 * PI * ((r * p) % q) as f64 / q as f64;
        acc.add(angle.cos() * hurwitz_zeta(s, r as f64 / q as f64, spec)?);
    }
    let factor = 2.0 * (log_gamma(s)? - s * (2.0 * PI * q as f64).ln()).exp();
    Ok((lhs - factor * acc.value()).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::special::polygamma;
    use proptest::prelude::*;

    const ZETA3: f64 = 1.202_056_903_159_594_3;
    // mpmath, 30 digits
    const ZETA_PRIME_2: f64 = -0.937_548_254_315_843_753_702_574_094_568;
    const ZETA_DPRIME_2: f64 = 1.989_280_234_298_901_023_420_858_687_42;

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    #[test]
    fn spot_values() {
        assert!((hurwitz_zeta(0.0, 0.3, &spec()).unwrap() - 0.2).abs() < 1e-10);
        assert!((hurwitz_zeta(2.0, 1.0, &spec()).unwrap() - PI * PI / 6.0).abs() < 1e-13);
        assert!((hurwitz_zeta(3.0, 2.0, &spec()).unwrap() - (ZETA3 - 1.0)).abs() < 1e-13);
    }

    #[test]
    fn shift_law_series_oracle() {
        // ζ(3,2) against a plain partial sum with an integral tail
        let n = 200_000u64;
        let partial: f64 = (0..n).rev().map(|k| (k as f64 + 2.0).powi(-3)).sum();
        let x = n as f64 + 2.0;
        let oracle = partial + 0.5 / (x * x) + 0.5 / x.powi(3);
        assert!((hurwitz_zeta(3.0, 2.0, &spec()).unwrap() - oracle).abs() < 1e-13);
    }

    #[test]
    fn pole_and_domain() {
        assert!(matches!(hurwitz_zeta(1.0, 0.5, &spec()), Err(Error::Pole(_))));
        assert!(hurwitz_zeta(2.0, 0.0, &spec()).is_err());
        assert!(hurwitz_zeta_sderiv(1, 0.5, 1.0).is_err());
    }

    #[test]
    fn first_derivative_at_two() {
        let d = hurwitz_zeta_sderiv(1, 2.0, 1.0).unwrap();
        assert!((d.value - ZETA_PRIME_2).abs() < 1e-13, "{}", d.value);
        assert_eq!(d.method, HurwitzMethod::DirectSeries);
        // oracle: 1e6-term partial sum of −ln n/n² plus its Euler–Maclaurin tail
        let n = 1_000_000u64;
        let mut acc = NeumaierSum::new();
        for k in (1..n).rev() {
            let x = k as f64;
            acc.add(-x.ln() / (x * x));
        }
        let x = n as f64;
        // ∫_N^∞ −ln t/t² dt = −(ln N + 1)/N, plus half the boundary term
        let tail = -(x.ln() + 1.0) / x - 0.5 * x.ln() / (x * x);
        assert!((acc.value() + tail - d.value).abs() < 1e-11);
    }

    #[test]
    fn derivative_shift_law() {
        // ζ'(s, a+1) − ζ'(s, a) = a^{−s} ln a
        let (s, a) = (3.0, 2.0);
        let lhs = hurwitz_zeta_sderiv(1, s, a + 1.0).unwrap().value - hurwitz_zeta_sderiv(1, s, a).unwrap().value;
        let rhs = a.powf(-s) * a.ln();
        assert!((lhs - rhs).abs() < 1e-14);
    }

    #[test]
    fn second_derivative_against_richardson() {
        let z = |s: f64| hurwitz_zeta(s, 1.0, &spec()).unwrap();
        let fd = |h: f64| (z(2.0 + h) - 2.0 * z(2.0) + z(2.0 - h)) / (h * h);
        let h = 1e-3;
        let rich = (4.0 * fd(h / 2.0) - fd(h)) / 3.0;
        let d2 = hurwitz_zeta_sderiv(2, 2.0, 1.0).unwrap().value;
        assert!((d2 - rich).abs() < 1e-6, "{d2} vs {rich}");
        assert!((d2 - ZETA_DPRIME_2).abs() < 1e-12);
    }

    #[test]
    fn laplace_cross_check() {
        for (j, s, a) in [(0, 2.0, 1.0), (1, 2.0, 1.0), (2, 2.0, 1.0), (1, 3.0, 0.5), (2, 2.5, 2.0), (1, 1.5, 0.25)] {
            let series = hurwitz_zeta_sderiv(j, s, a).unwrap().value;
            let lap = hurwitz_zeta_sderiv_laplace(j, s, a, &spec()).unwrap();
            assert_eq!(lap.method, HurwitzMethod::LaplaceIntegral);
            assert!((series - lap.value).abs() < 1e-10, "j={j} s={s} a={a}: {series} vs {}", lap.value);
        }
    }

    #[test]
    fn hermite_matches_series() {
        for s in [1.5, 2.0, 3.0] {
            for a in [0.25, 1.0, 2.0] {
                let h = hurwitz_zeta_hermite(s, a, &spec()).unwrap().value;
                let d = hurwitz_zeta_sderiv(0, s, a).unwrap().value;
                assert!((h - d).abs() < 1e-9, "s={s} a={a}: {h} vs {d}");
            }
        }
    }

    #[test]
    fn values_at_zero() {
        assert!((zeta_prime_zero(1.0).unwrap() + LN_SQRT_2PI).abs() < 1e-15);
        assert!((zeta_prime_zero(0.5).unwrap() + 0.5 * 2f64.ln()).abs() < 1e-14);
        assert!((zeta_prime_zero(2.0).unwrap() + LN_SQRT_2PI).abs() < 1e-14);
    }

    #[test]
    fn doubleprime_zero_against_richardson() {
        for a in [1.0, 0.5, 0.2, 2.0] {
            let z = |s: f64| hurwitz_zeta_hermite(s, a, &spec()).unwrap().value;
            let fd = |h: f64| (z(h) - 2.0 * z(0.0) + z(-h)) / (h * h);
            let h = 1e-3;
            let rich = (4.0 * fd(h / 2.0) - fd(h)) / 3.0;
            let v = zeta_doubleprime_zero(a, &spec()).unwrap();
            assert!((v - rich).abs() < 1e-6, "a={a}: {v} vs {rich}");
        }
    }

    #[test]
    fn prime_zero_matches_hermite_difference() {
        let a = 0.3;
        let z = |s: f64| hurwitz_zeta_hermite(s, a, &spec()).unwrap().value;
        let fd = |h: f64| (z(h) - z(-h)) / (2.0 * h);
        let rich = (4.0 * fd(5e-4) - fd(1e-3)) / 3.0;
        assert!((zeta_prime_zero(a).unwrap() - rich).abs() < 1e-8);
    }

    #[test]
    fn functional_equation_grid() {
        for (s, p, q) in [(2.0, 1, 2), (3.0, 1, 3), (2.0, 1, 1), (2.5, 2, 3)] {
            let r = functional_equation_residual(s, p, q, &spec()).unwrap();
            assert!(r < 1e-8, "s={s} p={p} q={q}: {r}");
        }
        assert!(functional_equation_residual(2.0, 0, 3, &spec()).is_err());
    }

    #[test]
    fn high_order_jet_against_polygamma() {
        // ζ(n+1, x) = (−1)^{n+1} ψ^{(n)}(x)/n!
        for n in 1..=3u32 {
            for x in [0.3, 1.0, 4.5] {
                let z = hurwitz_zeta(n as f64 + 1.0, x, &spec()).unwrap();
                let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                let p = sign * polygamma(n, x).unwrap() / factorial(n);
                assert!((z - p).abs() < 1e-10 * p.abs().max(1.0), "n={n} x={x}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn shift_law(s in 1.5f64..5.0, a in 0.1f64..3.0) {
            let lhs = hurwitz_zeta(s, a + 1.0, &spec()).unwrap() - hurwitz_zeta(s, a, &spec()).unwrap() + a.powf(-s);
            prop_assert!(lhs.abs() < 1e-11, "s={} a={} r={}", s, a, lhs);
        }

        #[test]
        fn jet_orders_are_consistent(s in 1.5f64..6.0, a in 0.2f64..3.0) {
            // each derivative from a low-order jet equals the same entry of a higher one
            let (lo, _) = hurwitz_zeta_jet(2, s, a).unwrap();
            let (hi, _) = hurwitz_zeta_jet(6, s, a).unwrap();
            for j in 0..=2 {
                prop_assert!((lo[j] - hi[j]).abs() <= 1e-14 * hi[j].abs().max(1.0));
            }
        }
    }
}
