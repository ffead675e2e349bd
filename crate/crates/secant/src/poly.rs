//! Dense univariate polynomials with rational coefficients.
//!
//! Hosts the central factorial polynomials and the symbolic side of the
//! Newton-type expansion checks (shifting, differentiating and evaluating
//! polynomials exactly).

use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{binomial, fmt_rat, int, rat_int, Rat};

/// A polynomial stored densely by power; the zero polynomial has no
/// coefficients, otherwise the leading coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![Rat::one()],
        }
    }

    /// `x^p`.
    pub fn monomial(p: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); p + 1];
        coeffs[p] = Rat::one();
        Polynomial { coeffs }
    }

    /// Build from coefficients indexed by power; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficients by power, highest last.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// Taylor shift: the polynomial `u(x + c)`.
    pub fn shift(&self, c: &Rat) -> Self {
        let mut coeffs = vec![Rat::zero(); self.coeffs.len()];
        for (p, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // (x + c)^p expanded binomially
            let mut cpow = Rat::one();
            for j in (0..=p).rev() {
                coeffs[j] += a * rat_int(binomial(p, j)) * &cpow;
                cpow *= c;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(j, a)| a * rat_int(int(j as i64 + 1)))
                .collect(),
        )
    }

    /// `m`-th formal derivative.
    pub fn nth_derivative(&self, m: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..m {
            p = p.derivative();
        }
        p
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{}", fmt_rat(a))?,
                1 => write!(f, "{}*x", fmt_rat(a))?,
                _ => write!(f, "{}*x^{k}", fmt_rat(a))?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn arithmetic_and_trim() {
        let p = Polynomial::from_coeffs(vec![rat(1, 1), rat(2, 1), rat(0, 1)]);
        assert_eq!(p.degree(), Some(1));
        let q = Polynomial::from_coeffs(vec![rat(-1, 1), rat(-2, 1)]);
        assert!(p.add(&q).is_zero());
        assert_eq!(p.mul(&q).degree(), Some(2));
        assert_eq!(Polynomial::zero().mul(&p), Polynomial::zero());
    }

    #[test]
    fn shift_expands_binomially() {
        // (x + 1/2)^2 = x^2 + x + 1/4
        let sq = Polynomial::monomial(2).shift(&rat(1, 2));
        assert_eq!(sq.coeffs(), &[rat(1, 4), rat(1, 1), rat(1, 1)]);
        // shifting back is the identity
        assert_eq!(sq.shift(&rat(-1, 2)), Polynomial::monomial(2));
    }

    #[test]
    fn eval_and_derivative() {
        let p = Polynomial::from_coeffs(vec![rat(1, 1), rat(0, 1), rat(3, 1)]); // 1 + 3x^2
        assert_eq!(p.eval(&rat(1, 2)), rat(7, 4));
        assert_eq!(p.derivative().coeffs(), &[rat(0, 1), rat(6, 1)]);
        assert_eq!(p.nth_derivative(2).coeffs(), &[rat(6, 1)]);
        assert!(p.nth_derivative(3).is_zero());
    }
}
