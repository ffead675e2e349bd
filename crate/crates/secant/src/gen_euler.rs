//! Generalized Euler numbers: the coefficients of `sech^r x`.
//!
//! `sech^r x = sum_n E(r)_{2n} x^{2n} / (2n)!` for integer order `r >= 1`;
//! `r = 1` recovers the ordinary Euler numbers. Four routes are provided:
//! the two Shovelton-style central-difference sums (which also exhibit the
//! value as a degree-n polynomial in `r`), the odd-order reduction through
//! the `G` coefficients, and the series oracle. The first three are finite
//! exact sums; all routes must agree bit-exactly.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::central::{delta_nothing, delta_triangle};
use crate::euler;
use crate::exact::{binomial_general, expect_integer, factorial, rat, rat_int, Int, Rat};
use crate::gcoeff::GTable;
use crate::series::{oracle_order, PowerSeries};

/// Which algorithm produced a generalized Euler number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenEulerMethod {
    ShoveltonDelta,
    ShoveltonSqrt,
    OddOrderG,
    SeriesOracle,
}

impl GenEulerMethod {
    pub const ALL: [GenEulerMethod; 4] = [
        GenEulerMethod::ShoveltonDelta,
        GenEulerMethod::ShoveltonSqrt,
        GenEulerMethod::OddOrderG,
        GenEulerMethod::SeriesOracle,
    ];

    /// The short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            GenEulerMethod::ShoveltonDelta => "shov3",
            GenEulerMethod::ShoveltonSqrt => "shov4",
            GenEulerMethod::OddOrderG => "reln",
            GenEulerMethod::SeriesOracle => "oracle",
        }
    }
}

impl fmt::Display for GenEulerMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenEulerMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GenEulerMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown gen-euler method `{s}`"))
    }
}

/// A computed generalized Euler number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenEulerValue {
    /// The sech power r >= 1.
    pub order: usize,
    /// The (even) index 2n.
    pub index: usize,
    /// Signed value, sech-expansion convention.
    pub value: Int,
    pub method: GenEulerMethod,
}

fn check_args(r: usize, index: usize) {
    assert!(r >= 1, "generalized Euler numbers need order r >= 1");
    assert!(
        index % 2 == 0,
        "generalized Euler numbers have even index, got {index}"
    );
}

/// Weights of the direct expansion: `C(-r, k) / 2^k`.
fn shov3_weights(r: usize, top: usize) -> Vec<Rat> {
    let neg_r = rat(-(r as i64), 1);
    (0..=top)
        .map(|k| binomial_general(&neg_r, k) / rat_int(Int::one() << k))
        .collect()
}

/// Weights of the square-root form: `C(-r/2, k) / 4^k`.
fn shov4_weights(r: usize, top: usize) -> Vec<Rat> {
    let half = rat(-(r as i64), 2);
    (0..=top)
        .map(|k| binomial_general(&half, k) / rat_int(Int::one() << (2 * k)))
        .collect()
}

fn delta_weighted_sum(n: usize, weights: &[Rat], delta_of: &dyn Fn(usize, usize) -> Rat) -> Rat {
    let mut sum = Rat::zero();
    for (k, w) in weights.iter().enumerate().take(n + 1) {
        sum += w * delta_of(2 * k, 2 * n);
    }
    sum
}

fn shov3_value(n: usize, weights: &[Rat], delta_of: &dyn Fn(usize, usize) -> Rat) -> Int {
    // sum_k C(-r, k) delta^{2k} 0^{2n} / 2^k
    expect_integer(&delta_weighted_sum(n, weights, delta_of), "shov3")
}

fn shov4_value(n: usize, weights: &[Rat], delta_of: &dyn Fn(usize, usize) -> Rat) -> Int {
    // 4^n sum_k C(-r/2, k) delta^{2k} 0^{2n} / 4^k; the half-integer
    // binomials cancel to an integer, which is asserted rather than assumed
    let sum = delta_weighted_sum(n, weights, delta_of) * rat_int(Int::one() << (2 * n));
    expect_integer(&sum, "shov4")
}

fn reln_value(r: usize, n: usize, g: &GTable, euler_signed: &[Int]) -> Int {
    // r = 2s+1: E(r)_{2n} = (1/(2s)!) sum_p (-1)^p G(s,p) E_{2n+2p}
    assert!(r % 2 == 1, "the odd-order route needs odd r, got {r}");
    let s = (r - 1) / 2;
    let mut sum = Rat::zero();
    for p in 0..=s {
        let term = rat_int(g.get(s, p) * &euler_signed[n + p]);
        if p % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum /= rat_int(factorial(2 * s));
    expect_integer(&sum, "reln")
}

/// Generalized Euler number via the direct central-difference expansion.
pub fn gen_euler_shov3(r: usize, index: usize) -> GenEulerValue {
    check_args(r, index);
    let n = index / 2;
    GenEulerValue {
        order: r,
        index,
        value: shov3_value(n, &shov3_weights(r, n), &|m, n| delta_nothing(m, n)),
        method: GenEulerMethod::ShoveltonDelta,
    }
}

/// Generalized Euler number via the square-root central-difference form.
pub fn gen_euler_shov4(r: usize, index: usize) -> GenEulerValue {
    check_args(r, index);
    let n = index / 2;
    GenEulerValue {
        order: r,
        index,
        value: shov4_value(n, &shov4_weights(r, n), &|m, n| delta_nothing(m, n)),
        method: GenEulerMethod::ShoveltonSqrt,
    }
}

/// Odd-order generalized Euler number from ordinary ones through the `G`
/// table. Panics for even `r`; the route only exists at odd order.
pub fn gen_euler_reln(r: usize, index: usize) -> GenEulerValue {
    check_args(r, index);
    assert!(r % 2 == 1, "the odd-order route needs odd r, got {r}");
    let s = (r - 1) / 2;
    let g = GTable::build(s);
    let euler_signed = euler::signed_upto(index + 2 * s);
    GenEulerValue {
        order: r,
        index,
        value: reln_value(r, index / 2, &g, &euler_signed),
        method: GenEulerMethod::OddOrderG,
    }
}

/// Generalized Euler number read off the `sech^r` series.
pub fn gen_euler_oracle(r: usize, index: usize) -> GenEulerValue {
    check_args(r, index);
    let pw = PowerSeries::sech(oracle_order(index)).pow(r as i64);
    GenEulerValue {
        order: r,
        index,
        value: expect_integer(&(pw.coeff(index) * rat_int(factorial(index))), "gen oracle"),
        method: GenEulerMethod::SeriesOracle,
    }
}

/// Compute one generalized Euler number by the requested method.
pub fn gen_euler(method: GenEulerMethod, r: usize, index: usize) -> GenEulerValue {
    match method {
        GenEulerMethod::ShoveltonDelta => gen_euler_shov3(r, index),
        GenEulerMethod::ShoveltonSqrt => gen_euler_shov4(r, index),
        GenEulerMethod::OddOrderG => gen_euler_reln(r, index),
        GenEulerMethod::SeriesOracle => gen_euler_oracle(r, index),
    }
}

/// All generalized Euler numbers of one order with index `<= max_index`,
/// sharing the method's table across the sweep.
pub fn gen_euler_upto(method: GenEulerMethod, r: usize, max_index: usize) -> Vec<GenEulerValue> {
    assert!(r >= 1, "generalized Euler numbers need order r >= 1");
    let top = max_index / 2;
    let values: Vec<Int> = match method {
        GenEulerMethod::ShoveltonDelta | GenEulerMethod::ShoveltonSqrt => {
            let delta = delta_triangle(2 * top);
            let delta_of = |m: usize, n: usize| delta.get(n, m).clone();
            let weights = match method {
                GenEulerMethod::ShoveltonDelta => shov3_weights(r, top),
                _ => shov4_weights(r, top),
            };
            (0..=top)
                .map(|n| match method {
                    GenEulerMethod::ShoveltonDelta => shov3_value(n, &weights, &delta_of),
                    _ => shov4_value(n, &weights, &delta_of),
                })
                .collect()
        }
        GenEulerMethod::OddOrderG => {
            assert!(r % 2 == 1, "the odd-order route needs odd r, got {r}");
            let s = (r - 1) / 2;
            let g = GTable::build(s);
            let euler_signed = euler::signed_upto(2 * top + 2 * s);
            (0..=top).map(|n| reln_value(r, n, &g, &euler_signed)).collect()
        }
        GenEulerMethod::SeriesOracle => {
            let pw = PowerSeries::sech(oracle_order(max_index)).pow(r as i64);
            (0..=top)
                .map(|n| {
                    expect_integer(&(pw.coeff(2 * n) * rat_int(factorial(2 * n))), "gen oracle")
                })
                .collect()
        }
    };
    values
        .into_iter()
        .enumerate()
        .map(|(n, value)| GenEulerValue {
            order: r,
            index: 2 * n,
            value,
            method,
        })
        .collect()
}
