//! Exact and floating combinatorial numbers: Stirling numbers of the first
//! kind, harmonic numbers, Pochhammer symbols, integer-order incomplete gamma.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

use super::rational::Rational;
use super::sum::NeumaierSum;

/// Largest row of the exact Stirling table.
pub const STIRLING_MAX: usize = 64;

fn stirling_table() -> &'static Vec<Vec<BigInt>> {
    static TABLE: OnceLock<Vec<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(STIRLING_MAX + 1);
        rows.push(vec![BigInt::one()]);
        for n in 0..STIRLING_MAX {
            // s(n+1, m) = s(n, m−1) − n·s(n, m)
            let prev = &rows[n];
            let mut row = vec![BigInt::zero(); n + 2];
            for m in 0..=n + 1 {
                let mut v = BigInt::zero();
                if m >= 1 {
                    v += &prev[m - 1];
                }
                if m <= n {
                    v -= &prev[m] * BigInt::from(n);
                }
                row[m] = v;
            }
            rows.push(row);
        }
        rows
    })
}

/// Signed Stirling number of the first kind s(n, m), exact, for n ≤ 64.
pub fn stirling_first(n: usize, m: usize) -> Result<BigInt> {
    if n > STIRLING_MAX || m > n {
        return Err(Error::domain(format!(
            "stirling_first({n}, {m}) needs 0 ≤ m ≤ n ≤ {STIRLING_MAX}"
        )));
    }
    Ok(stirling_table()[n][m].clone())
}

/// s(n, m) rounded to f64.
pub fn stirling_first_f64(n: usize, m: usize) -> Result<f64> {
    if n > STIRLING_MAX || m > n {
        return Err(Error::domain(format!(
            "stirling_first({n}, {m}) needs 0 ≤ m ≤ n ≤ {STIRLING_MAX}"
        )));
    }
    Ok(stirling_table()[n][m].to_f64().unwrap_or(f64::NAN))
}

/// Scaled Stirling numbers `s(n+1, j+1)/n!` for `j = 0..=jmax`.
///
/// Uses `s(n+1, j+1)/n! = (−1)^{n−j} e_j(1, 1/2, …, 1/n)` with `e_j` the
/// elementary symmetric polynomials, so rows far beyond the exact table stay
/// in range.
pub fn stirling_scaled_row(n: usize, jmax: usize) -> Vec<f64> {
    let mut e = vec![0.0; jmax + 1];
    e[0] = 1.0;
    for i in 1..=n {
        let x = 1.0 / i as f64;
        for j in (1..=jmax.min(i)).rev() {
            e[j] += x * e[j - 1];
        }
    }
    e.iter()
        .enumerate()
        .map(|(j, &v)| {
            if j > n {
                0.0
            } else if (n - j) % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect()
}

/// H_n = Σ_{k=1}^n 1/k.
pub fn harmonic(n: u64) -> f64 {
    (1..=n).rev().map(|k| 1.0 / k as f64).collect::<NeumaierSum>().value()
}

/// H_n^{(2)} = Σ_{k=1}^n 1/k².
pub fn harmonic2(n: u64) -> f64 {
    (1..=n)
        .rev()
        .map(|k| 1.0 / (k as f64 * k as f64))
        .collect::<NeumaierSum>()
        .value()
}

/// H_n as an exact fraction, `None` once the denominator overflows i64.
pub fn harmonic_exact(n: u64) -> Option<Rational> {
    let mut acc = Rational::integer(0);
    for k in 1..=n {
        acc = acc.checked_add(Rational::new(1, k as i64).ok()?)?;
    }
    Some(acc)
}

/// H_n^{(2)} as an exact fraction, `None` on overflow.
pub fn harmonic2_exact(n: u64) -> Option<Rational> {
    let mut acc = Rational::integer(0);
    for k in 1..=n {
        let k = k as i64;
        acc = acc.checked_add(Rational::new(1, k.checked_mul(k)?).ok()?)?;
    }
    Some(acc)
}

/// Rising factorial (z)_a = z(z+1)⋯(z+a−1).
pub fn pochhammer(z: f64, a: u32) -> f64 {
    (0..a).map(|i| z + i as f64).product()
}

/// P_1(x) = {x} − 1/2.
pub fn periodic_bernoulli_1(x: f64) -> f64 {
    x - x.floor() - 0.5
}

/// Upper incomplete gamma Γ(n+1, x) = n! e^{−x} Σ_{m=0}^{n} x^m/m!.
pub fn incomplete_gamma_int(n: u32, x: f64) -> f64 {
    // Horner form of Σ x^m n!/m!
    let mut acc = 1.0;
    for m in (1..=n).rev() {
        acc = 1.0 + acc * x / m as f64;
    }
    super::factorial(n) * (-x).exp() * acc
}

/// Γ(n+1, ln y) − Γ(n+1, ln(y+1)) = ∫_y^{y+1} ln^n t / t² dt for y ≥ 1,
/// evaluated in difference form so that large `y` does not cancel.
pub fn incomplete_gamma_log_step(n: u32, y: f64) -> f64 {
    let y1 = y + 1.0;
    let l0 = y.ln();
    let l1 = y1.ln();
    let dl = (1.0 / y).ln_1p();
    // Γ(n+1, ln y) = (n!/y) Σ_i ln^i y / i!; take the difference term-wise:
    // l0^i/y − l1^i/y1 = l0^i/(y·y1) − (l1^i − l0^i)/y1
    let mut acc = NeumaierSum::new();
    let mut inv_fact = 1.0;
    for i in 0..=n {
        if i > 0 {
            inv_fact /= i as f64;
        }
        let p0 = l0.powi(i as i32);
        let dpow = power_difference(l0, l1, dl, i);
        acc.add(inv_fact * (p0 / (y * y1) - dpow / y1));
    }
    super::factorial(n) * acc.value()
}

/// l1^i − l0^i with `dl = l1 − l0` supplied accurately.
pub fn power_difference(l0: f64, l1: f64, dl: f64, i: u32) -> f64 {
    if i == 0 {
        return 0.0;
    }
    let mut s = 0.0;
    for p in 0..i {
        s += l1.powi(p as i32) * l0.powi((i - 1 - p) as i32);
    }
    dl * s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_stirling_values() {
        assert_eq!(stirling_first(2, 2).unwrap(), BigInt::from(1));
        assert_eq!(stirling_first(2, 1).unwrap(), BigInt::from(-1));
        assert_eq!(stirling_first(4, 2).unwrap(), BigInt::from(11));
        assert_eq!(stirling_first(0, 0).unwrap(), BigInt::from(1));
        assert_eq!(stirling_first(5, 0).unwrap(), BigInt::from(0));
    }

    #[test]
    fn stirling_diagonal_is_one() {
        for n in 0..=STIRLING_MAX {
            assert_eq!(stirling_first(n, n).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn stirling_out_of_range() {
        assert!(stirling_first(65, 3).is_err());
        assert!(stirling_first(3, 4).is_err());
    }

    #[test]
    fn stirling_second_column_is_harmonic() {
        // s(n+1, 2) = (−1)^{n+1} n! H_n
        for n in 1..=15u64 {
            let s = stirling_first_f64(n as usize + 1, 2).unwrap();
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            let want = sign * super::super::factorial(n as u32) * harmonic(n);
            assert!((s - want).abs() <= 1e-12 * want.abs(), "n={n}");
        }
    }

    #[test]
    fn unsigned_row_sums_are_factorials() {
        for n in 0..=20usize {
            let total: BigInt = (0..=n)
                .map(|m| {
                    let v = stirling_first(n, m).unwrap();
                    if v < BigInt::zero() {
                        -v
                    } else {
                        v
                    }
                })
                .sum();
            let fact: BigInt = (1..=n).map(BigInt::from).product();
            assert_eq!(total, fact, "n={n}");
        }
    }

    #[test]
    fn generating_function_of_columns() {
        // Σ_{n≥m−1} s(n+1, m) m! x^n/(n+1)! → ln^m(1+x)/x
        let x: f64 = 0.3;
        for m in 1..=4usize {
            let target = x.ln_1p().powi(m as i32) / x;
            let mut prev_err = f64::INFINITY;
            for cutoff in [10usize, 20, 40, 60] {
                let mut s = 0.0;
                for n in (m - 1)..=cutoff {
                    let c = stirling_first_f64(n + 1, m).unwrap()
                        / super::super::factorial(n as u32 + 1);
                    s += c * super::super::factorial(m as u32) * x.powi(n as i32);
                }
                let err = (s - target).abs();
                assert!(err <= prev_err + 1e-16);
                prev_err = err;
            }
            assert!(prev_err < 1e-14, "m={m} err={prev_err}");
        }
    }

    #[test]
    fn scaled_row_matches_exact_table() {
        for n in [1usize, 5, 17, 40, 63] {
            let row = stirling_scaled_row(n, n + 2);
            let nf = super::super::factorial(n as u32);
            for j in 0..=n {
                let exact = stirling_first_f64(n + 1, j + 1).unwrap() / nf;
                assert!(
                    (row[j] - exact).abs() <= 1e-13 * exact.abs().max(1e-300),
                    "n={n} j={j}"
                );
            }
            assert_eq!(row[n + 1], 0.0);
        }
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic_exact(3).unwrap(), Rational::new(11, 6).unwrap());
        assert_eq!(harmonic_exact(0).unwrap(), Rational::integer(0));
        assert_eq!(harmonic(0), 0.0);
        assert_eq!(harmonic2_exact(4).unwrap(), Rational::new(205, 144).unwrap());
        assert!((harmonic2(4) - 205.0 / 144.0).abs() < 1e-15);
        assert!(harmonic_exact(200).is_none());
    }

    #[test]
    fn harmonic2_against_trigamma() {
        use crate::numerics::special::polygamma;
        let z2 = std::f64::consts::PI.powi(2) / 6.0;
        for n in [1u64, 4, 10, 100] {
            let want = z2 - polygamma(1, n as f64 + 1.0).unwrap();
            assert!((harmonic2(n) - want).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(1.0, 3), 6.0);
        assert_eq!(pochhammer(0.5, 2), 0.75);
        assert_eq!(pochhammer(3.0, 0), 1.0);
    }

    #[test]
    fn periodic_bernoulli_values() {
        assert_eq!(periodic_bernoulli_1(0.25), -0.25);
        assert_eq!(periodic_bernoulli_1(3.75), 0.25);
        for k in [-3.0, 0.0, 1.0, 7.0] {
            assert_eq!(periodic_bernoulli_1(k), -0.5);
        }
    }

    #[test]
    fn incomplete_gamma_values() {
        assert!((incomplete_gamma_int(0, 0.0) - 1.0).abs() < 1e-15);
        assert!((incomplete_gamma_int(1, 1.0) - 2.0 / std::f64::consts::E).abs() < 1e-15);
        assert!((incomplete_gamma_int(3, 0.0) - 6.0).abs() < 1e-14);
    }

    #[test]
    fn log_step_matches_plain_difference() {
        for n in 0..5u32 {
            for y in [1.0, 2.0, 7.5, 30.0] {
                let plain = incomplete_gamma_int(n, f64::ln(y)) - incomplete_gamma_int(n, f64::ln(y + 1.0));
                let step = incomplete_gamma_log_step(n, y);
                assert!((plain - step).abs() < 1e-13, "n={n} y={y}");
            }
        }
    }

    proptest! {
        #[test]
        fn periodic_bernoulli_in_range(x in -1e6f64..1e6) {
            let p = periodic_bernoulli_1(x);
            prop_assert!((-0.5..0.5).contains(&p));
        }

        #[test]
        fn stirling_recurrence_holds(n in 1usize..64, m in 1usize..64) {
            prop_assume!(m <= n);
            let lhs = stirling_first(n + 1, m).unwrap();
            let rhs = stirling_first(n, m - 1).unwrap() - BigInt::from(n) * stirling_first(n, m).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
