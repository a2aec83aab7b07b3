//! Foundation layer: summation, quadrature, classical special functions and
//! exact combinatorial numbers.

pub mod combinat;
pub mod logpoly;
pub mod quad;
pub mod rational;
pub mod special;
pub mod sum;

pub use num_complex::Complex64 as ComplexValue;
pub use quad::{quad_finite, quad_semi_infinite, Decay, QuadResult, QuadratureSpec, TailPolicy};
pub use rational::Rational;

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ln(2π).
pub const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// ln √(2π).
pub const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Bernoulli numbers B_2, B_4, ..., B_20.
pub(crate) const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// n! as f64 (exact up to 22!).
pub fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

/// Binomial coefficient C(n, k) as f64.
pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}
