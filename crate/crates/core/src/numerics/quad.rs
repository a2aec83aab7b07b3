//! Tanh-sinh (double-exponential) quadrature with global adaptive bisection.
//!
//! Each subinterval is integrated with the tanh-sinh rule at increasing
//! levels (step halving) until two consecutive levels agree; intervals that
//! do not settle are bisected, down to `max_refinements` levels of
//! bisection. The rule clusters nodes at the endpoints, so integrable
//! endpoint singularities (logarithmic, algebraic) need no special care.
//!
//! Semi-infinite integrals are truncated at a point chosen from the
//! integrand's declared decay envelope (see [`TailPolicy`]); the envelope's
//! tail mass is added to the error estimate.

use crate::error::{Error, Result};

use super::sum::NeumaierSum;

/// Tolerances and budgets shared by every integral in the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Maximum bisection depth of the adaptive driver.
    pub max_refinements: u32,
    pub tail: TailPolicy,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-13,
            rel_tol: 0.0,
            max_refinements: 20,
            tail: TailPolicy::default(),
        }
    }
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_refinements: u32) -> Result<Self> {
        let spec = QuadratureSpec {
            abs_tol,
            rel_tol,
            max_refinements,
            tail: TailPolicy::default(),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol >= 0.0) || self.max_refinements < 1 {
            return Err(Error::precondition(format!(
                "invalid quadrature spec: abs_tol={} rel_tol={} max_refinements={}",
                self.abs_tol, self.rel_tol, self.max_refinements
            )));
        }
        Ok(())
    }

    /// Same spec with a different absolute tolerance.
    pub fn with_abs_tol(&self, abs_tol: f64) -> Self {
        QuadratureSpec { abs_tol, ..*self }
    }
}

/// Upper envelope `scale · (1+y)^poly · (log_shift + ln(1+y))^log_power · e^{−rate·y}`
/// for an integrand on `[lo, ∞)`, with `y` measured from `lo`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decay {
    pub rate: f64,
    pub scale: f64,
    pub poly_power: f64,
    pub log_power: f64,
    pub log_shift: f64,
}

impl Decay {
    pub fn exponential(rate: f64) -> Self {
        Decay {
            rate,
            scale: 1.0,
            poly_power: 0.0,
            log_power: 0.0,
            log_shift: 1.0,
        }
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn with_poly(mut self, power: f64) -> Self {
        self.poly_power = power;
        self
    }

    pub fn with_log(mut self, power: f64, shift: f64) -> Self {
        self.log_power = power;
        self.log_shift = shift;
        self
    }

    pub fn envelope(&self, y: f64) -> f64 {
        let mut v = self.scale * (-self.rate * y).exp();
        if self.poly_power != 0.0 {
            v *= (1.0 + y).powf(self.poly_power);
        }
        if self.log_power != 0.0 {
            v *= (self.log_shift + y.ln_1p()).powf(self.log_power);
        }
        v
    }

    /// Mass of the envelope beyond `y`, bounded by a geometric comparison.
    fn tail_mass(&self, y: f64) -> f64 {
        // The polynomial/log factors grow slower than e^{rate·y/2} past the
        // cutoff, so envelope(y)·2/rate bounds the remainder.
        2.0 * self.envelope(y) / self.rate
    }
}

/// Rule mapping an integrand's decay envelope to a truncation point: the
/// first `y` whose envelope tail mass is below `fraction · abs_tol`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailPolicy {
    pub fraction: f64,
    pub max_cutoff: f64,
}

impl Default for TailPolicy {
    fn default() -> Self {
        TailPolicy {
            fraction: 0.1,
            max_cutoff: 1e6,
        }
    }
}

impl TailPolicy {
    /// Truncation offset (from `lo`) for the given envelope.
    pub fn cutoff(&self, decay: &Decay, abs_tol: f64) -> Result<f64> {
        if !(decay.rate > 0.0) {
            return Err(Error::precondition("decay rate must be positive"));
        }
        let target = self.fraction * abs_tol;
        let mut y = 1.0 / decay.rate;
        while decay.tail_mass(y) > target {
            y *= 1.25;
            if y > self.max_cutoff {
                return Err(Error::no_convergence(
                    "tail cutoff",
                    format!("no cutoff below {} for target {target:e}", self.max_cutoff),
                ));
            }
        }
        // bisect down to a tight cutoff
        let (mut a, mut b) = (y / 1.25, y);
        for _ in 0..40 {
            let m = 0.5 * (a + b);
            if decay.tail_mass(m) > target {
                a = m;
            } else {
                b = m;
            }
        }
        Ok(b)
    }
}

/// Integral value with an error estimate and evaluation count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub err_est: f64,
    pub evals: usize,
}

const T_MAX: f64 = 4.5;
const MAX_LEVEL: u32 = 8;
const MIN_LEVEL: u32 = 3;
const MAX_EVALS: usize = 20_000_000;

struct Panel {
    value: f64,
    err: f64,
    abs_sum: f64,
    converged: bool,
    /// Converged with the level difference below the rounding floor; further
    /// bisection cannot reduce the error.
    at_floor: bool,
}

/// Tanh-sinh on one interval. Abscissas are generated from their distance to
/// the nearest endpoint so that points near `lo`/`hi` keep full precision.
fn tanh_sinh_panel<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    tol: f64,
    evals: &mut usize,
) -> Result<Panel> {
    let half = 0.5 * (hi - lo);
    let mid = lo + half;
    let pi2 = std::f64::consts::FRAC_PI_2;

    let mut eval = |x: f64| -> Result<f64> {
        *evals += 1;
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::domain(format!("integrand not finite at x = {x:e}")))
        }
    };

    // contribution of nodes ±t
    let node_pair = |t: f64, eval: &mut dyn FnMut(f64) -> Result<f64>| -> Result<(f64, f64)> {
        let u = pi2 * t.sinh();
        let ch = u.cosh();
        let w = pi2 * t.cosh() / (ch * ch);
        // distance from the endpoint, in units of `half`
        let c = 2.0 / ((2.0 * u).exp() + 1.0);
        let d = half * c;
        let mut s = 0.0;
        let mut a = 0.0;
        let xl = lo + d;
        if xl > lo && xl < hi {
            let v = eval(xl)?;
            s += w * v;
            a += (w * v).abs();
        }
        let xr = hi - d;
        if xr < hi && xr > lo {
            let v = eval(xr)?;
            s += w * v;
            a += (w * v).abs();
        }
        Ok((s, a))
    };

    let mut sum = NeumaierSum::new();
    let mut abs_sum = 0.0;
    let c0 = eval(mid)?;
    sum.add(pi2 * c0);
    abs_sum += (pi2 * c0).abs();
    let mut k = 1;
    loop {
        let t = k as f64;
        if t > T_MAX {
            break;
        }
        let (s, a) = node_pair(t, &mut eval)?;
        sum.add(s);
        abs_sum += a;
        k += 1;
    }
    let mut h = 1.0;
    let mut prev = sum.value() * h * half;
    let mut err = f64::INFINITY;
    for level in 1..=MAX_LEVEL {
        h *= 0.5;
        let mut k = 1u64;
        loop {
            let t = k as f64 * h;
            if t > T_MAX {
                break;
            }
            let (s, a) = node_pair(t, &mut eval)?;
            sum.add(s);
            abs_sum += a;
            k += 2;
        }
        let cur = sum.value() * h * half;
        err = (cur - prev).abs();
        prev = cur;
        let floor = 64.0 * f64::EPSILON * abs_sum * h * half.abs();
        if level >= MIN_LEVEL && err <= tol.max(floor) {
            return Ok(Panel {
                value: cur,
                err: err.max(floor),
                abs_sum: abs_sum * h * half.abs(),
                converged: true,
                at_floor: err <= floor,
            });
        }
    }
    Ok(Panel {
        value: prev,
        err,
        abs_sum: abs_sum * h * half.abs(),
        converged: false,
        at_floor: false,
    })
}

/// ∫_lo^hi f(x) dx to within `max(abs_tol, rel_tol·|I|)`.
pub fn quad_finite<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult> {
    spec.validate()?;
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::domain("quad_finite needs finite limits"));
    }
    if lo == hi {
        return Ok(QuadResult {
            value: 0.0,
            err_est: 0.0,
            evals: 0,
        });
    }
    if lo > hi {
        let r = quad_finite(f, hi, lo, spec)?;
        return Ok(QuadResult {
            value: -r.value,
            ..r
        });
    }
    let mut evals = 0usize;
    let first = tanh_sinh_panel(&f, lo, hi, spec.abs_tol, &mut evals)?;
    let target = |v: f64| spec.abs_tol.max(spec.rel_tol * v.abs());
    if first.converged && first.err <= target(first.value) {
        return Ok(QuadResult {
            value: first.value,
            err_est: first.err,
            evals,
        });
    }
    // Global adaptive refinement: split the worst panel until the summed
    // error meets the target.
    let mut panels: Vec<(f64, f64, u32, Panel)> = vec![(lo, hi, 0, first)];
    loop {
        let total: f64 = panels.iter().map(|p| p.3.value).sum();
        let err: f64 = panels.iter().map(|p| p.3.err).sum();
        if err <= target(total) {
            let value = panels.iter().map(|p| p.3.value).collect::<NeumaierSum>().value();
            return Ok(QuadResult {
                value,
                err_est: err,
                evals,
            });
        }
        let candidate = panels
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.3.at_floor)
            .max_by(|a, b| a.1 .3.err.total_cmp(&b.1 .3.err));
        let Some((idx, worst)) = candidate else {
            // every panel is limited by rounding, not by the rule
            let value = panels.iter().map(|p| p.3.value).collect::<NeumaierSum>().value();
            return Ok(QuadResult {
                value,
                err_est: err,
                evals,
            });
        };
        let (idx, _) = Some((idx, worst))
            .filter(|(_, p)| p.2 < spec.max_refinements)
            .ok_or_else(|| {
                Error::no_convergence(
                    "quad_finite",
                    format!("refinement budget exhausted on [{lo}, {hi}], err {err:e}"),
                )
            })?;
        if evals > MAX_EVALS {
            return Err(Error::no_convergence(
                "quad_finite",
                format!("evaluation budget exhausted on [{lo}, {hi}], err {err:e}"),
            ));
        }
        let (a, b, depth, p) = panels.swap_remove(idx);
        let m = 0.5 * (a + b);
        let sub_tol = (spec.abs_tol * (b - a) / (hi - lo)).max(p.abs_sum * 1e-17);
        let left = tanh_sinh_panel(&f, a, m, sub_tol, &mut evals)?;
        let right = tanh_sinh_panel(&f, m, b, sub_tol, &mut evals)?;
        panels.push((a, m, depth + 1, left));
        panels.push((m, b, depth + 1, right));
    }
}

/// ∫_lo^∞ f(x) dx for an integrand bounded by `decay` (offset from `lo`).
///
/// Truncates at the policy cutoff, checks the envelope numerically at the
/// cutoff, and folds the envelope tail mass into the error estimate.
pub fn quad_semi_infinite<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    decay: &Decay,
    spec: &QuadratureSpec,
) -> Result<QuadResult> {
    spec.validate()?;
    let y = spec.tail.cutoff(decay, spec.abs_tol)?;
    for probe in [y, 1.5 * y, 2.0 * y] {
        let observed = f(lo + probe).abs();
        let bound = decay.envelope(probe);
        if !observed.is_finite() || observed > 10.0 * bound + f64::MIN_POSITIVE {
            return Err(Error::TailBoundFailure {
                what: "quad_semi_infinite",
                at: lo + probe,
                observed,
                bound,
            });
        }
    }
    let tail = decay.tail_mass(y);
    let inner = spec.with_abs_tol((spec.abs_tol - tail).max(0.5 * spec.abs_tol));
    let r = quad_finite(&f, lo, lo + y, &inner)?;
    Ok(QuadResult {
        value: r.value,
        err_est: r.err_est + tail,
        evals: r.evals,
    })
}
