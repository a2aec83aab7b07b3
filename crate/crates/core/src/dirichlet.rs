//! Real Dirichlet characters mod k and their L-functions
//! L(s) = Σ χ(n) n^{−s} = k^{−s} Σ_m χ(m) ζ(s, m/k), with the first two
//! s-derivatives at s = 1 and the link to Σ_m χ(m) γ_1(m/k).

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hurwitz::{hurwitz_zeta, zeta_doubleprime_zero};
use crate::identities::IdentityReport;
use crate::numerics::special::{digamma_rational, log_gamma};
use crate::numerics::sum::NeumaierSum;
use crate::numerics::{quad_finite, quad_semi_infinite, Decay, QuadratureSpec, Rational, EULER_GAMMA, LN_2PI};
use crate::stieltjes::{gamma_k_integral, gamma_k_limit_oracle};

pub const MIN_MODULUS: u32 = 3;
pub const MAX_MODULUS: u32 = 200;

/// A real character mod k stored as its table of values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CharacterTable {
    pub modulus: u32,
    /// χ(1), χ(2), …, χ(k).
    pub values: Vec<i8>,
    /// χ(k − 1).
    pub parity: i8,
    pub principal: bool,
}

impl CharacterTable {
    /// Builds a table from χ(1..=k), checking that it is a real character.
    pub fn from_values(values: Vec<i8>) -> Result<Self> {
        let k = values.len() as u32;
        if !(MIN_MODULUS..=MAX_MODULUS).contains(&k) {
            return Err(Error::domain(format!("modulus must lie in 3..=200, got {k}")));
        }
        let table = CharacterTable {
            modulus: k,
            parity: values[k as usize - 2],
            principal: (1..=k).all(|m| values[m as usize - 1] == if m.gcd(&k) == 1 { 1 } else { 0 }),
            values,
        };
        table.validate()?;
        Ok(table)
    }

    /// χ(n) for any integer n ≥ 0.
    pub fn chi(&self, n: u64) -> i8 {
        let r = (n % self.modulus as u64) as usize;
        if r == 0 {
            self.values[self.modulus as usize - 1]
        } else {
            self.values[r - 1]
        }
    }

    /// (m, χ(m)) for 1 ≤ m ≤ k with χ(m) ≠ 0.
    pub fn support(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        (1..=self.modulus).filter_map(move |m| {
            let c = self.values[m as usize - 1];
            (c != 0).then_some((m, c as f64))
        })
    }

    /// Σ_{m=1}^{k} m χ(m).
    pub fn moment(&self) -> i64 {
        self.support().map(|(m, c)| m as i64 * c as i64).sum()
    }

    /// "±k" following the sign convention L_{±k}.
    pub fn label(&self) -> String {
        let sign = if self.parity > 0 { '+' } else { '-' };
        format!("{sign}{}", self.modulus)
    }

    /// Whether χ is not induced from a character of smaller modulus.
    pub fn is_primitive(&self) -> bool {
        if self.principal {
            return self.modulus == 1;
        }
        let k = self.modulus;
        (1..k).filter(|d| k % d == 0).all(|d| {
            // induced from modulus d iff χ is constant on units ≡ 1 mod d
            (1..=k).any(|n| n.gcd(&k) == 1 && n % d == 1 % d && self.values[n as usize - 1] != 1)
        })
    }

    fn validate(&self) -> Result<()> {
        let k = self.modulus;
        for m in 1..=k {
            let c = self.values[m as usize - 1];
            let unit = m.gcd(&k) == 1;
            if (c == 0) == unit || !(-1..=1).contains(&c) {
                return Err(Error::domain(format!("χ({m}) = {c} is invalid mod {k}")));
            }
        }
        for m in 1..k {
            for n in 1..k {
                if self.chi(m as u64 * n as u64) != self.chi(m as u64) * self.chi(n as u64) {
                    return Err(Error::domain(format!("table mod {k} is not multiplicative at ({m}, {n})")));
                }
            }
        }
        if !self.principal && self.values.iter().map(|&c| c as i64).sum::<i64>() != 0 {
            return Err(Error::domain("nonprincipal character values do not sum to zero"));
        }
        Ok(())
    }

    fn require_nonprincipal(&self) -> Result<()> {
        if self.principal {
            return Err(Error::precondition(format!("character mod {} is principal", self.modulus)));
        }
        Ok(())
    }
}

impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "χ mod {} [", self.modulus)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v:+}")?;
        }
        f.write_str("]")
    }
}

/// All real characters mod k (principal first), by brute force over sign
/// assignments on a generating set of the unit group.
pub fn enumerate_real_characters(k: u32) -> Result<Vec<CharacterTable>> {
    if !(MIN_MODULUS..=MAX_MODULUS).contains(&k) {
        return Err(Error::domain(format!("modulus must lie in 3..=200, got {k}")));
    }
    let units: Vec<u32> = (1..k).filter(|m| m.gcd(&k) == 1).collect();
    let span = |gens: &[u32]| {
        let mut seen = vec![false; k as usize];
        seen[1] = true;
        let mut stack = vec![1u32];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = (x * g) % k;
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    stack.push(y);
                }
            }
        }
        seen
    };
    let mut gens = Vec::new();
    let mut covered = span(&gens);
    for &u in &units {
        if !covered[u as usize] {
            gens.push(u);
            covered = span(&gens);
        }
    }

    let mut found = Vec::new();
    for mask in 0u32..(1 << gens.len()) {
        let signs: Vec<i8> = (0..gens.len()).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        let mut val: HashMap<u32, i8> = HashMap::from([(1, 1)]);
        let mut stack = vec![1u32];
        let mut consistent = true;
        'walk: while let Some(x) = stack.pop() {
            for (g, &sg) in gens.iter().zip(&signs) {
                let y = (x * g) % k;
                let v = val[&x] * sg;
                match val.get(&y) {
                    Some(&w) if w != v => {
                        consistent = false;
                        break 'walk;
                    }
                    Some(_) => {}
                    None => {
                        val.insert(y, v);
                        stack.push(y);
                    }
                }
            }
        }
        if !consistent {
            continue;
        }
        let values: Vec<i8> = (1..=k).map(|m| val.get(&(m % k)).copied().unwrap_or(0)).collect();
        if let Ok(t) = CharacterTable::from_values(values) {
            if !found.contains(&t) {
                found.push(t);
            }
        }
    }
    found.sort_by(|a, b| b.principal.cmp(&a.principal).then_with(|| b.values.cmp(&a.values)));
    Ok(found)
}

/// The unique nonprincipal real character mod k, when there is exactly one.
pub fn real_character(k: u32) -> Result<CharacterTable> {
    let mut all: Vec<_> = enumerate_real_characters(k)?.into_iter().filter(|c| !c.principal).collect();
    if all.len() != 1 {
        return Err(Error::precondition(format!(
            "{} nonprincipal real characters mod {k}, expected one",
            all.len()
        )));
    }
    Ok(all.remove(0))
}

fn gamma_fn(s: f64) -> Result<f64> {
    Ok(log_gamma(s)?.exp())
}

/// Σ_{n≥1} χ(n) n^{−s} for 0 < s < 1: the first J periods directly, then for
/// each residue the Euler–Maclaurin tail, whose divergent parts cancel in the
/// χ-weighted sum.
fn l_direct(chi: &CharacterTable, s: f64) -> f64 {
    let k = chi.modulus as f64;
    let periods = 64u64;
    let mut acc = NeumaierSum::new();
    for j in (0..periods).rev() {
        for (m, c) in chi.support() {
            acc.add(c * (j as f64 * k + m as f64).powf(-s));
        }
    }
    for (m, c) in chi.support() {
        let x = periods as f64 * k + m as f64;
        // Σ_{j≥J} (jk + m)^{−s} ≈ x^{1−s}/(k(s−1)) + x^{−s}/2 + Bernoulli terms
        acc.add(c * x.powf(1.0 - s) / (k * (s - 1.0)));
        acc.add(c * 0.5 * x.powf(-s));
        let mut d = -s * x.powf(-s - 1.0) * k;
        let mut fall = -s - 1.0;
        for r in 1..=6usize {
            let b = crate::numerics::BERNOULLI_EVEN[r - 1] / crate::numerics::factorial(2 * r as u32);
            acc.add(-c * b * d);
            d *= fall * (fall - 1.0) * k * k / (x * x);
            fall -= 2.0;
        }
    }
    acc.value()
}

/// L(s) for any real s, routed by region: Hurwitz combination for s > 1 and
/// s ≤ 0, the ψ form at s = 1, and the accelerated direct sum on (0, 1).
pub fn l_function(chi: &CharacterTable, s: f64, spec: &QuadratureSpec) -> Result<f64> {
    chi.require_nonprincipal()?;
    let k = chi.modulus as f64;
    if s == 1.0 {
        let mut acc = NeumaierSum::new();
        for (m, c) in chi.support() {
            acc.add(c * digamma_rational(Rational::new(m as i64, chi.modulus as i64)?)?);
        }
        return Ok(-acc.value() / k);
    }
    if s > 0.0 && s < 1.0 {
        return Ok(l_direct(chi, s));
    }
    let mut acc = NeumaierSum::new();
    for (m, c) in chi.support() {
        acc.add(c * hurwitz_zeta(s, m as f64 / k, spec)?);
    }
    Ok(k.powf(-s) * acc.value())
}

/// L(s), s > 0.
pub fn l_series(chi: &CharacterTable, s: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(s > 0.0) {
        return Err(Error::domain(format!("L-series route needs s > 0, got {s}")));
    }
    l_function(chi, s, spec)
}

/// Σ_m χ(m) e^{−mu} / (1 − e^{−ku}), written so that the cancellation
/// Σ χ(m) = 0 is exact near u = 0.
fn character_kernel(chi: &CharacterTable, u: f64) -> f64 {
    let k = chi.modulus as f64;
    let mut num = NeumaierSum::new();
    for (m, c) in chi.support() {
        num.add(c * (-(m as f64) * u).exp_m1());
    }
    num.value() / -(-k * u).exp_m1()
}

/// ∫₀^∞ w(u) K(u) du with K the character kernel, split at u = 1.
fn kernel_integral<W: Fn(f64) -> f64>(
    chi: &CharacterTable,
    w: W,
    w_poly: f64,
    w_log: f64,
    spec: &QuadratureSpec,
) -> Result<f64> {
    let k = chi.modulus as f64;
    let f = |u: f64| if u == 0.0 { 0.0 } else { w(u) * character_kernel(chi, u) };
    let tol = spec.with_abs_tol(spec.abs_tol / 2.0);
    let head = quad_finite(&f, 0.0, 1.0, &tol)?;
    let decay = Decay::exponential(1.0)
        .with_scale(2.0 * k * (1.0 + EULER_GAMMA + std::f64::consts::PI))
        .with_poly(w_poly)
        .with_log(w_log, 1.0);
    let tail = quad_semi_infinite(&f, 1.0, &decay, &tol)?;
    Ok(head.value + tail.value)
}

/// L(s) = (1/Γ(s)) ∫₀^∞ u^{s−1} Σ_m χ(m) e^{−mu} / (1 − e^{−ku}) du, s > 0.
pub fn l_integral(chi: &CharacterTable, s: f64, spec: &QuadratureSpec) -> Result<f64> {
    chi.require_nonprincipal()?;
    if !(s > 0.0) {
        return Err(Error::domain(format!("integral route needs s > 0, got {s}")));
    }
    let v = kernel_integral(chi, |u| u.powf(s - 1.0), (s - 1.0).max(0.0), 0.0, spec)?;
    Ok(v / gamma_fn(s)?)
}

/// L(0) = −(1/k) Σ m χ(m), exactly.
pub fn l_value_zero(chi: &CharacterTable) -> Result<Rational> {
    chi.require_nonprincipal()?;
    Rational::new(-chi.moment(), chi.modulus as i64)
}

/// Σ_m χ(m) ln Γ(m/k).
pub fn log_gamma_character_sum(chi: &CharacterTable) -> Result<f64> {
    let k = chi.modulus as f64;
    let mut acc = NeumaierSum::new();
    for (m, c) in chi.support() {
        acc.add(c * log_gamma(m as f64 / k)?);
    }
    Ok(acc.value())
}

/// Σ_m χ(m) ψ(m/k), using Gauss's closed form at each rational point.
pub fn digamma_character_sum(chi: &CharacterTable) -> Result<f64> {
    let mut acc = NeumaierSum::new();
    for (m, c) in chi.support() {
        acc.add(c * digamma_rational(Rational::new(m as i64, chi.modulus as i64)?)?);
    }
    Ok(acc.value())
}

/// L'(0) = −ln k · L(0) + Σ_m χ(m) ln Γ(m/k).
pub fn l_prime_zero(chi: &CharacterTable) -> Result<f64> {
    let l0 = l_value_zero(chi)?.to_f64();
    Ok(-(chi.modulus as f64).ln() * l0 + log_gamma_character_sum(chi)?)
}

/// L'(1) in closed form through the functional equation: for odd χ from
/// L'(0) and L(0); for even χ from L'(0) and Σ χ(m) ζ''(0, m/k). Only valid
/// for primitive χ, since the functional equation is.
pub fn l_prime_one(chi: &CharacterTable, spec: &QuadratureSpec) -> Result<f64> {
    chi.require_nonprincipal()?;
    let k = chi.modulus as f64;
    let c = LN_2PI + EULER_GAMMA;
    let lg = log_gamma_character_sum(chi)?;
    match chi.parity {
        -1 => Ok(-PI / k.powf(1.5) * c * chi.moment() as f64 - PI / k.sqrt() * lg),
        1 => {
            let mut zpp = NeumaierSum::new();
            for (m, ch) in chi.support() {
                zpp.add(ch * zeta_doubleprime_zero(m as f64 / k, spec)?);
            }
            Ok((2.0 * c * lg - zpp.value()) / k.sqrt())
        }
        p => Err(Error::precondition(format!("parity must be ±1, got {p}"))),
    }
}

/// L'(1) (order 1) or L''(1) (order 2) from the integral representation with
/// kernels ln u + γ and ln²u + 2γ ln u + γ² − ζ(2). Valid for every
/// nonprincipal χ, primitive or not.
pub fn l_derivative_at_one_integral(chi: &CharacterTable, order: u32, spec: &QuadratureSpec) -> Result<f64> {
    chi.require_nonprincipal()?;
    let g = EULER_GAMMA;
    match order {
        1 => kernel_integral(chi, |u| u.ln() + g, 0.0, 1.0, spec),
        2 => {
            let z2 = PI * PI / 6.0;
            kernel_integral(chi, |u| { let l = u.ln(); l * l + 2.0 * g * l + g * g - z2 }, 0.0, 2.0, spec)
        }
        _ => Err(Error::domain(format!("derivative order must be 1 or 2, got {order}"))),
    }
}

/// L^{(order)}(1) = (−1)^order Σ χ(n) ln^order n / n, summed by residue
/// class: each class is a Stieltjes limit (divergent parts cancel because
/// Σ χ(m) = 0), accelerated by Richardson extrapolation. A slow oracle.
pub fn l_derivative_at_one_series(chi: &CharacterTable, order: u32, n: u64) -> Result<f64> {
    chi.require_nonprincipal()?;
    if !(1..=2).contains(&order) {
        return Err(Error::domain(format!("derivative order must be 1 or 2, got {order}")));
    }
    let k = chi.modulus as f64;
    let lk = k.ln();
    let mut acc = NeumaierSum::new();
    for (m, c) in chi.support() {
        let a = m as f64 / k;
        // Σ_j ln^r(k(j+a)) / (k(j+a)) expanded in ln k
        let g0 = gamma_k_limit_oracle(0, a, n);
        let g1 = gamma_k_limit_oracle(1, a, n);
        let v = if order == 1 {
            lk * g0 + g1
        } else {
            lk * lk * g0 + 2.0 * lk * g1 + gamma_k_limit_oracle(2, a, n)
        };
        acc.add(c * v);
    }
    let sign = if order == 1 { -1.0 } else { 1.0 };
    Ok(sign * acc.value() / k)
}

/// Σ_m χ(m) γ_1(m/k) from the integral route.
pub fn gamma1_character_sum(chi: &CharacterTable, spec: &QuadratureSpec) -> Result<f64> {
    let k = chi.modulus as f64;
    let mut acc = NeumaierSum::new();
    for (m, c) in chi.support() {
        acc.add(c * gamma_k_integral(1, m as f64 / k, spec)?.value);
    }
    Ok(acc.value())
}

/// Σ_m χ(m) γ_1(m/k) against −k L'(1) + ln k Σ_m χ(m) ψ(m/k), with L'(1) from
/// its closed form (odd or even parity). The integral value of L'(1) is kept
/// as a diagnostic.
pub fn stieltjes_combination(chi: &CharacterTable, spec: &QuadratureSpec) -> Result<IdentityReport> {
    chi.require_nonprincipal()?;
    let k = chi.modulus as f64;
    let lhs = gamma1_character_sum(chi, spec)?;
    let psi = digamma_character_sum(chi)?;
    let closed = l_prime_one(chi, spec)?;
    let integral = l_derivative_at_one_integral(chi, 1, spec)?;
    let rhs = -k * closed + k.ln() * psi;
    Ok(IdentityReport::new(format!("character-gamma1-sum-closed[k={}]", chi.label()), lhs, rhs, 1e-7)
        .with_diagnostic("l_prime_one_closed", closed)
        .with_diagnostic("l_prime_one_integral", integral)
        .with_diagnostic("rhs_via_integral", -k * integral + k.ln() * psi))
}

/// The same identity with L'(1) from its integral representation, which needs
/// no primitivity.
pub fn stieltjes_combination_integral(chi: &CharacterTable, spec: &QuadratureSpec) -> Result<IdentityReport> {
    chi.require_nonprincipal()?;
    let k = chi.modulus as f64;
    let lhs = gamma1_character_sum(chi, spec)?;
    let rhs = -k * l_derivative_at_one_integral(chi, 1, spec)? + k.ln() * digamma_character_sum(chi)?;
    Ok(IdentityReport::new(format!("character-gamma1-sum-integral[k={}]", chi.label()), lhs, rhs, 1e-7))
}

/// |L(1−s) − 2(2π)^{−s} k^{s−1/2} T(πs/2) Γ(s) L(s)| with T = sin for odd and
/// cos for even χ.
pub fn functional_equation_residual(chi: &CharacterTable, s: f64, spec: &QuadratureSpec) -> Result<f64> {
    chi.require_nonprincipal()?;
    if !(s > 0.0 && s < 3.0 && s != 1.0) {
        return Err(Error::domain(format!("need s ∈ (0,1) ∪ (1,3), got {s}")));
    }
    let k = chi.modulus as f64;
    let trig = match chi.parity {
        -1 => (0.5 * PI * s).sin(),
        1 => (0.5 * PI * s).cos(),
        p => return Err(Error::precondition(format!("parity must be ±1, got {p}"))),
    };
    let rhs = 2.0 * (2.0 * PI).powf(-s) * k.powf(s - 0.5) * trig * gamma_fn(s)? * l_function(chi, s, spec)?;
    let lhs = l_function(chi, 1.0 - s, spec)?;
    Ok((lhs - rhs).abs())
}
