//! Functions of the form Σ_i c_i ln^i t / t^p, closed under differentiation.
//! Euler–Maclaurin tails of sums over ln^k(n+a)/(n+a) need their odd
//! derivatives at a point.

#[derive(Debug, Clone, PartialEq)]
pub struct LogPoly {
    /// Power of t in the denominator.
    pub p: f64,
    /// Coefficient of ln^i t.
    pub c: Vec<f64>,
}

impl LogPoly {
    /// ln^k t / t^p
    pub fn monomial(k: usize, p: f64) -> Self {
        let mut c = vec![0.0; k + 1];
        c[k] = 1.0;
        LogPoly { p, c }
    }

    pub fn scaled(mut self, k: f64) -> Self {
        self.c.iter_mut().for_each(|c| *c *= k);
        self
    }

    /// Sum of two log-polynomials with the same power of t.
    pub fn plus(&self, other: &LogPoly) -> Self {
        assert_eq!(self.p, other.p, "powers of t must agree");
        let n = self.c.len().max(other.c.len());
        let c = (0..n)
            .map(|i| self.c.get(i).copied().unwrap_or(0.0) + other.c.get(i).copied().unwrap_or(0.0))
            .collect();
        LogPoly { p: self.p, c }
    }

    pub fn derivative(&self) -> Self {
        // d/dt ln^i t · t^{−p} = (i ln^{i−1} t − p ln^i t) t^{−p−1}
        let mut c = vec![0.0; self.c.len()];
        for (i, &ci) in self.c.iter().enumerate() {
            c[i] -= self.p * ci;
            if i > 0 {
                c[i - 1] += i as f64 * ci;
            }
        }
        LogPoly { p: self.p + 1.0, c }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let l = t.ln();
        let mut acc = 0.0;
        for &ci in self.c.iter().rev() {
            acc = acc * l + ci;
        }
        acc * t.powf(-self.p)
    }
}

/// Euler–Maclaurin remainder −Σ_{r=1}^{R} B_{2r}/(2r)! f^{(2r−1)}(y): the
/// asymptotic value of ∫_y^∞ P_1(t − y) f'(t) dt for a slowly varying `f`.
pub fn em_remainder(f: &LogPoly, y: f64, terms: usize) -> f64 {
    em_remainder_integrand(&f.derivative(), y, terms).0
}

/// −Σ_{r=1}^{R} B_{2r}/(2r)! g^{(2r−2)}(y), the asymptotic value of
/// ∫_y^∞ P_1(t − y) g(t) dt. Also returns the size of the last term kept.
pub fn em_remainder_integrand(g: &LogPoly, y: f64, terms: usize) -> (f64, f64) {
    let mut d = g.clone();
    let mut acc = 0.0;
    let mut last = 0.0;
    for r in 1..=terms.min(super::BERNOULLI_EVEN.len()) {
        let coeff = super::BERNOULLI_EVEN[r - 1] / super::factorial(2 * r as u32);
        last = coeff * d.eval(y);
        acc -= last;
        d = d.derivative().derivative();
    }
    (acc, last.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_against_finite_difference() {
        let f = LogPoly::monomial(3, 1.0);
        let d = f.derivative();
        for t in [2.0, 5.0, 40.0] {
            let h = 1e-5 * t;
            let fd = (f.eval(t + h) - f.eval(t - h)) / (2.0 * h);
            assert!((fd - d.eval(t)).abs() < 1e-8, "t={t}");
        }
    }

    #[test]
    fn em_remainder_reproduces_harmonic_tail() {
        // Σ_{n≥N} 1/n² = 1/N + 1/(2N²) + EM remainder of f = 1/t² ... using f'
        // directly: Σ_{n≥N} f(n) = ∫_N^∞ f + f(N)/2 + rem
        let f = LogPoly::monomial(0, 2.0);
        let n = 10.0;
        let rem = em_remainder(&f, n, 6);
        let approx = 1.0 / n + 0.5 / (n * n) + rem;
        let direct: f64 = (10..2_000_000).map(|k| 1.0 / (k as f64).powi(2)).sum::<f64>() + 1.0 / 2e6;
        assert!((approx - direct).abs() < 1e-12, "{approx} vs {direct}");
    }
}
