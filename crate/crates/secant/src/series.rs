//! Truncated formal power series over the rationals.
//!
//! A series of order `N` carries exact coefficients for `x^0 ..= x^N` and is
//! the brute-force oracle substrate for every number family in the crate:
//! Euler numbers are read off `1/cosh`, generalized ones off its powers, and
//! the identity suite compares whole expansions coefficientwise.
//!
//! Binary operations require equal orders; callers align orders explicitly
//! with [`PowerSeries::truncate`]. All series here are dense in one parity
//! class, so a dense representation is used throughout.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::exact::{binomial_general, fmt_rat, int, rat, rat_int, Rat};

/// A formal power series truncated at a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rat>, // coeffs[k] is the coefficient of x^k; len = order + 1
}

impl PowerSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// The identity series x. Requires `order >= 1`.
    pub fn x(order: usize) -> Self {
        assert!(order >= 1, "series x needs order >= 1");
        let mut s = Self::zero(order);
        s.coeffs[1] = Rat::one();
        s
    }

    /// Build from explicit coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the x^0 coefficient");
        PowerSeries { coeffs }
    }

    /// Build coefficientwise from a function of the exponent.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rat) -> Self {
        PowerSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Truncation order N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`. Panics if `k` exceeds the order.
    pub fn coeff(&self, k: usize) -> &Rat {
        assert!(k < self.coeffs.len(), "coefficient {k} beyond order {}", self.order());
        &self.coeffs[k]
    }

    /// All coefficients, `x^0 ..= x^N`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Copy truncated to a lower (or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot truncate order {} up to {order}", self.order());
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn require_same_order(&self, other: &Self, op: &str) {
        assert!(
            self.order() == other.order(),
            "{op}: order mismatch ({} vs {})",
            self.order(),
            other.order()
        );
    }

    /// Coefficientwise sum. Panics on order mismatch.
    pub fn add(&self, other: &Self) -> Self {
        self.require_same_order(other, "add");
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Coefficientwise difference. Panics on order mismatch.
    pub fn sub(&self, other: &Self) -> Self {
        self.require_same_order(other, "sub");
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Product truncated at the common order. Panics on order mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        self.require_same_order(other, "mul");
        let n = self.order();
        let mut coeffs = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs }
    }

    /// Multiplicative inverse up to the order. Panics if the constant term
    /// is zero.
    pub fn reciprocal(&self) -> Self {
        assert!(
            !self.coeffs[0].is_zero(),
            "reciprocal of a series with zero constant term"
        );
        let n = self.order();
        let c0_inv = Rat::one() / &self.coeffs[0];
        let mut out = vec![Rat::zero(); n + 1];
        out[0] = c0_inv.clone();
        for k in 1..=n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -acc * &c0_inv;
        }
        PowerSeries { coeffs: out }
    }

    /// Composition `self(other)`, Horner style. Panics unless the inner
    /// series has zero constant term and the orders match.
    pub fn compose(&self, inner: &Self) -> Self {
        self.require_same_order(inner, "compose");
        assert!(
            inner.coeffs[0].is_zero(),
            "compose with nonzero inner constant term"
        );
        let n = self.order();
        let mut acc = Self::zero(n);
        for k in (0..=n).rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        acc
    }

    /// Integer power. Negative exponents go through [`Self::reciprocal`]
    /// and therefore need a nonzero constant term.
    pub fn pow(&self, r: i64) -> Self {
        if r == 0 {
            return Self::one(self.order());
        }
        let base = if r < 0 { self.reciprocal() } else { self.clone() };
        let mut e = r.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        loop {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e == 0 {
                return acc;
            }
            sq = sq.mul(&sq);
        }
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        PowerSeries {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(j, a)| a * rat_int(int(j as i64 + 1)))
                .collect(),
        }
    }

    /// Formal antiderivative with zero constant term; the order rises by one.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        for (j, a) in self.coeffs.iter().enumerate() {
            coeffs.push(a / rat_int(int(j as i64 + 1)));
        }
        PowerSeries { coeffs }
    }

    /// The binomial series `(1 + x)^alpha`.
    pub fn binomial(alpha: &Rat, order: usize) -> Self {
        Self::from_fn(order, |k| binomial_general(alpha, k))
    }

    /// exp x.
    pub fn exp(order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = Rat::one();
        coeffs.push(c.clone());
        for k in 1..=order {
            c /= rat_int(int(k as i64));
            coeffs.push(c.clone());
        }
        PowerSeries { coeffs }
    }

    /// cosh x.
    pub fn cosh(order: usize) -> Self {
        let exp = Self::exp(order);
        Self::from_fn(order, |k| {
            if k % 2 == 0 {
                exp.coeffs[k].clone()
            } else {
                Rat::zero()
            }
        })
    }

    /// sinh x.
    pub fn sinh(order: usize) -> Self {
        let exp = Self::exp(order);
        Self::from_fn(order, |k| {
            if k % 2 == 1 {
                exp.coeffs[k].clone()
            } else {
                Rat::zero()
            }
        })
    }

    /// sech x = 1/cosh x.
    pub fn sech(order: usize) -> Self {
        Self::cosh(order).reciprocal()
    }

    /// tanh x = sinh x / cosh x.
    pub fn tanh(order: usize) -> Self {
        Self::sinh(order).mul(&Self::cosh(order).reciprocal())
    }

    /// asinh x, generated by formally integrating `(1 + x^2)^(-1/2)`.
    pub fn asinh(order: usize) -> Self {
        if order == 0 {
            return Self::zero(0);
        }
        // (1 + u)^(-1/2) with u = x^2, integrated termwise.
        let mut s = Self::zero(order);
        let mut k = 0usize;
        while 2 * k + 1 <= order {
            s.coeffs[2 * k + 1] =
                binomial_general(&rat(-1, 2), k) / rat_int(int(2 * k as i64 + 1));
            k += 1;
        }
        s
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if a.is_negative() { "-" } else { "+" })?;
            } else if a.is_negative() {
                write!(f, "-")?;
            }
            let mag = a.abs();
            match k {
                0 => write!(f, "{}", fmt_rat(&mag))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", fmt_rat(&mag))?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::add(self, rhs)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::sub(self, rhs)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries::neg(self)
    }
}

/// The elementary series the oracle knows how to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElemFn {
    Exp,
    Cosh,
    Sinh,
    Sech,
    Asinh,
    Tanh,
}

impl ElemFn {
    /// MacLaurin expansion to the given order.
    pub fn series(self, order: usize) -> PowerSeries {
        match self {
            ElemFn::Exp => PowerSeries::exp(order),
            ElemFn::Cosh => PowerSeries::cosh(order),
            ElemFn::Sinh => PowerSeries::sinh(order),
            ElemFn::Sech => PowerSeries::sech(order),
            ElemFn::Asinh => PowerSeries::asinh(order),
            ElemFn::Tanh => PowerSeries::tanh(order),
        }
    }
}

impl FromStr for ElemFn {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exp" => Ok(ElemFn::Exp),
            "cosh" => Ok(ElemFn::Cosh),
            "sinh" => Ok(ElemFn::Sinh),
            "sech" => Ok(ElemFn::Sech),
            "asinh" => Ok(ElemFn::Asinh),
            "tanh" => Ok(ElemFn::Tanh),
            _ => Err(format!("unknown elementary series `{s}`")),
        }
    }
}

/// Default oracle order for a request touching index `n_max`: a guard band
/// beyond the largest extracted coefficient.
pub fn oracle_order(n_max: usize) -> usize {
    2 * n_max + 4
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn geom(order: usize) -> PowerSeries {
        // 1/(1-x)
        let mut one_minus_x = PowerSeries::one(order);
        one_minus_x = one_minus_x.sub(&PowerSeries::x(order));
        one_minus_x.reciprocal()
    }

    #[test]
    fn mul_and_identities() {
        let one_plus = PowerSeries::from_coeffs(vec![rat(1, 1), rat(1, 1), rat(0, 1)]);
        let one_minus = PowerSeries::from_coeffs(vec![rat(1, 1), rat(-1, 1), rat(0, 1)]);
        let prod = one_plus.mul(&one_minus);
        assert_eq!(prod.coeffs(), &[rat(1, 1), rat(0, 1), rat(-1, 1)]);

        let f = PowerSeries::sinh(6);
        assert_eq!(f.add(&PowerSeries::zero(6)), f);
        let scaled = PowerSeries::from_coeffs(vec![rat(0, 1), rat(1, 1), rat(1, 1)])
            .scale(&rat(2, 1));
        assert_eq!(scaled.coeffs(), &[rat(0, 1), rat(2, 1), rat(2, 1)]);
    }

    #[test]
    fn reciprocal_geometric_and_sech() {
        assert_eq!(
            geom(3).coeffs(),
            &[rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1)]
        );
        assert_eq!(PowerSeries::one(4).reciprocal(), PowerSeries::one(4));
        // 1/cosh = 1 - x^2/2 + 5x^4/24, by long division
        let sech = PowerSeries::sech(4);
        assert_eq!(
            sech.coeffs(),
            &[rat(1, 1), rat(0, 1), rat(-1, 2), rat(0, 1), rat(5, 24)]
        );
    }

    #[test]
    fn compose_examples() {
        // (1/(1-x)) o x^2 = 1 + x^2 + x^4
        let f = geom(4);
        let mut x2 = PowerSeries::zero(4);
        x2 = x2.add(&PowerSeries::x(4).mul(&PowerSeries::x(4)));
        let g = f.compose(&x2);
        assert_eq!(
            g.coeffs(),
            &[rat(1, 1), rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 1)]
        );
        // f o x = f
        let f = PowerSeries::sech(8);
        assert_eq!(f.compose(&PowerSeries::x(8)), f);
    }

    #[test]
    fn compose_exp_sinh_matches_direct_power_sum() {
        // exp(sinh x) two ways: Horner composition vs sum of sinh^m/m!.
        let n = 9;
        let composed = PowerSeries::exp(n).compose(&PowerSeries::sinh(n));
        let sinh = PowerSeries::sinh(n);
        let mut direct = PowerSeries::zero(n);
        let mut pow = PowerSeries::one(n);
        let mut mfact = Rat::one();
        for m in 0..=n {
            if m > 0 {
                pow = pow.mul(&sinh);
                mfact *= rat(m as i64, 1);
            }
            direct = direct.add(&pow.scale(&(Rat::one() / &mfact)));
        }
        assert_eq!(composed, direct);
        // hand multiplication to order 3: 1 + x + x^2/2 + x^3/3
        assert_eq!(composed.coeff(2), &rat(1, 2));
        assert_eq!(composed.coeff(3), &rat(1, 3));
    }

    #[test]
    fn pow_examples() {
        let one_plus_x = PowerSeries::from_coeffs(vec![rat(1, 1), rat(1, 1), rat(0, 1)]);
        assert_eq!(
            one_plus_x.pow(2).coeffs(),
            &[rat(1, 1), rat(2, 1), rat(1, 1)]
        );
        assert_eq!(PowerSeries::sinh(5).pow(0), PowerSeries::one(5));
        // sech^2 = 1 - x^2 + 2x^4/3
        let s2 = PowerSeries::sech(4).pow(2);
        assert_eq!(
            s2.coeffs(),
            &[rat(1, 1), rat(0, 1), rat(-1, 1), rat(0, 1), rat(2, 3)]
        );
        // negative power via reciprocal: cosh^(-1) = sech
        assert_eq!(PowerSeries::cosh(8).pow(-1), PowerSeries::sech(8));
    }

    #[test]
    fn elementary_series() {
        assert_eq!(
            PowerSeries::exp(3).coeffs(),
            &[rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 6)]
        );
        let sinh = PowerSeries::sinh(5);
        assert_eq!(sinh.coeff(1), &rat(1, 1));
        assert_eq!(sinh.coeff(3), &rat(1, 6));
        assert_eq!(sinh.coeff(5), &rat(1, 120));
        // asinh = x - x^3/6 + 3x^5/40, by integrating the binomial series
        let asinh = PowerSeries::asinh(5);
        assert_eq!(asinh.coeff(1), &rat(1, 1));
        assert_eq!(asinh.coeff(3), &rat(-1, 6));
        assert_eq!(asinh.coeff(5), &rat(3, 40));
    }

    #[test]
    fn coefficient_access() {
        let sech = PowerSeries::sech(6);
        assert_eq!(sech.coeff(0), &rat(1, 1));
        assert_eq!(sech.coeff(3), &rat(0, 1));
        assert_eq!(sech.coeff(4), &rat(5, 24));
    }

    #[test]
    #[should_panic(expected = "beyond order")]
    fn coefficient_out_of_range_panics() {
        let _ = PowerSeries::one(2).coeff(3);
    }

    #[test]
    #[should_panic(expected = "order mismatch")]
    fn order_mismatch_panics() {
        let _ = PowerSeries::one(2).add(&PowerSeries::one(3));
    }

    #[test]
    #[should_panic(expected = "zero constant term")]
    fn reciprocal_of_zero_constant_panics() {
        let _ = PowerSeries::x(3).reciprocal();
    }

    #[test]
    #[should_panic(expected = "nonzero inner constant term")]
    fn compose_rejects_unit_inner() {
        let _ = PowerSeries::exp(3).compose(&PowerSeries::one(3));
    }

    #[test]
    fn asinh_inverts_sinh() {
        let n = 11;
        let comp = PowerSeries::asinh(n).compose(&PowerSeries::sinh(n));
        assert_eq!(comp, PowerSeries::x(n));
        let comp = PowerSeries::sinh(n).compose(&PowerSeries::asinh(n));
        assert_eq!(comp, PowerSeries::x(n));
    }

    #[test]
    fn sech_times_cosh_is_one() {
        let n = 12;
        assert_eq!(
            PowerSeries::sech(n).mul(&PowerSeries::cosh(n)),
            PowerSeries::one(n)
        );
    }

    #[test]
    fn asinh_derivative_matches_inverse_sqrt() {
        // d/dx asinh == 1 / (1+x^2)^(1/2), with the square root built from
        // binomial_general(1/2, k).
        let n = 10;
        let sqrt = PowerSeries::from_fn(n, |k| {
            if k % 2 == 0 {
                binomial_general(&rat(1, 2), k / 2)
            } else {
                Rat::zero()
            }
        });
        let lhs = PowerSeries::asinh(n + 1).derivative();
        assert_eq!(lhs, sqrt.reciprocal());
    }

    #[test]
    fn parity() {
        let n = 13;
        for (even, s) in [
            (true, PowerSeries::cosh(n)),
            (true, PowerSeries::sech(n)),
            (false, PowerSeries::sinh(n)),
            (false, PowerSeries::asinh(n)),
            (false, PowerSeries::tanh(n)),
        ] {
            for k in 0..=n {
                if (k % 2 == 0) != even {
                    assert!(s.coeff(k).is_zero(), "{s} has nonzero coeff at {k}");
                }
            }
        }
    }

    #[test]
    fn elem_dispatch() {
        assert_eq!("sech".parse::<ElemFn>().unwrap(), ElemFn::Sech);
        assert!("sec".parse::<ElemFn>().is_err());
        assert_eq!(ElemFn::Exp.series(3), PowerSeries::exp(3));
    }

    #[test]
    fn display_is_readable() {
        let s = PowerSeries::sech(4);
        assert_eq!(format!("{s}"), "1 - 1/2*x^2 + 5/24*x^4 + O(x^5)");
    }
}
