//! Euler (secant) numbers by five independent routes.
//!
//! The canonical output is the signed value `E_{2n}` from the `sech`
//! expansion (`sech x = sum E_{2n} x^{2n} / (2n)!`); the unsigned secant
//! number is carried alongside since the difference-calculus algorithms
//! produce it naturally. The five routes:
//!
//! - `kb`: column zero of the [`SternTable`] recursion
//! - `shov`: the central-difference sum `sum_k (-1/2)^k delta^{2k} 0^{2n}`
//! - `shov2`: the square-root form
//!   `4^n sum_k C(-1/2,k) delta^{2k} 0^{2n} / 4^k`
//! - `herschel`: the forward-difference operator
//!   `(1 + Delta)/(1 + Delta + Delta^2/2)` applied through
//!   `Delta^k 0^{2n} = k! S(2n,k)`
//! - `oracle`: `(2n)! [x^{2n}] (1/cosh x)` from the series engine
//!
//! Bit-exact agreement of all five is the module's contract and is enforced
//! in the acceptance suite.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::central::{delta_nothing, delta_triangle, stirling2, stirling2_triangle};
use crate::exact::{binomial_general, expect_integer, factorial, int, rat, rat_int, Int, Rat};
use crate::gcoeff::SternTable;
use crate::series::{oracle_order, PowerSeries};

/// Which algorithm produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EulerMethod {
    KnuthBuckholtz,
    ShoveltonDelta,
    ShoveltonSqrt,
    Herschel,
    SeriesOracle,
}

impl EulerMethod {
    pub const ALL: [EulerMethod; 5] = [
        EulerMethod::KnuthBuckholtz,
        EulerMethod::ShoveltonDelta,
        EulerMethod::ShoveltonSqrt,
        EulerMethod::Herschel,
        EulerMethod::SeriesOracle,
    ];

    /// The short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            EulerMethod::KnuthBuckholtz => "kb",
            EulerMethod::ShoveltonDelta => "shov",
            EulerMethod::ShoveltonSqrt => "shov2",
            EulerMethod::Herschel => "herschel",
            EulerMethod::SeriesOracle => "oracle",
        }
    }
}

impl fmt::Display for EulerMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EulerMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EulerMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown euler method `{s}`"))
    }
}

/// A computed Euler number with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerValue {
    /// The (even) index 2n.
    pub index: usize,
    /// Signed value, sech-expansion convention.
    pub signed: Int,
    /// Unsigned secant number.
    pub unsigned: Int,
    pub method: EulerMethod,
}

impl EulerValue {
    fn from_signed(index: usize, signed: Int, method: EulerMethod) -> Self {
        assert!(index % 2 == 0, "Euler numbers have even index, got {index}");
        let unsigned = if (index / 2) % 2 == 0 {
            signed.clone()
        } else {
            -signed.clone()
        };
        assert!(
            unsigned.is_positive(),
            "E_{index} ({method}) has the wrong sign: {signed}"
        );
        EulerValue {
            index,
            signed,
            unsigned,
            method,
        }
    }

    fn from_unsigned(index: usize, unsigned: Int, method: EulerMethod) -> Self {
        let signed = if (index / 2) % 2 == 0 {
            unsigned.clone()
        } else {
            -unsigned.clone()
        };
        Self::from_signed(index, signed, method)
    }
}

/// Unsigned secant numbers `E_0, E_2, ..., E_{2n}` for `2n <= max_index`,
/// streaming the recursion one row at a time.
fn kb_unsigned_upto(max_index: usize) -> Vec<Int> {
    let mut out = Vec::with_capacity(max_index / 2 + 1);
    let mut row = vec![Int::one()];
    out.push(Int::one());
    for n in 1..=max_index {
        let mut next = vec![Int::zero(); n + 1];
        // only entries with k = n (mod 2) are nonzero
        let mut k = n % 2;
        while k <= n {
            let mut v = Int::zero();
            if k + 1 < row.len() {
                v += int(k as i64 + 1) * &row[k + 1];
            }
            if k > 0 {
                v += int(k as i64) * &row[k - 1];
            }
            next[k] = v;
            k += 2;
        }
        row = next;
        if n % 2 == 0 {
            out.push(row[0].clone());
        }
    }
    out
}

/// Weights of the plain central-difference sum: `(-1/2)^k`.
fn shov_weights(top: usize) -> Vec<Rat> {
    let mut w = vec![Rat::one()];
    for k in 1..=top {
        w.push(&w[k - 1] * rat(-1, 2));
    }
    w
}

/// Weights of the square-root form: `C(-1/2, k) / 4^k`.
fn shov2_weights(top: usize) -> Vec<Rat> {
    (0..=top)
        .map(|k| binomial_general(&rat(-1, 2), k) / rat_int(Int::one() << (2 * k)))
        .collect()
}

fn delta_weighted_sum(n: usize, weights: &[Rat], delta_of: &dyn Fn(usize, usize) -> Rat) -> Rat {
    let mut sum = Rat::zero();
    for (k, w) in weights.iter().enumerate().take(n + 1) {
        sum += w * delta_of(2 * k, 2 * n);
    }
    sum
}

fn shov_signed(n: usize, weights: &[Rat], delta_of: &dyn Fn(usize, usize) -> Rat) -> Int {
    // sum_k (-1/2)^k delta^{2k} 0^{2n}
    expect_integer(&delta_weighted_sum(n, weights, delta_of), "shov")
}

fn shov2_signed(n: usize, weights: &[Rat], delta_of: &dyn Fn(usize, usize) -> Rat) -> Int {
    // 4^n sum_k C(-1/2, k) delta^{2k} 0^{2n} / 4^k
    let sum = delta_weighted_sum(n, weights, delta_of) * rat_int(Int::one() << (2 * n));
    expect_integer(&sum, "shov2")
}

/// The forward-difference operator of the Herschel route,
/// `(1 + D)(1 + D + D^2/2)^(-1)`, truncated at the given order.
fn herschel_operator(order: usize) -> PowerSeries {
    let denom = PowerSeries::from_fn(order, |k| match k {
        0 | 1 => Rat::one(),
        2 => rat(1, 2),
        _ => Rat::zero(),
    });
    let mut numer = PowerSeries::one(order);
    if order >= 1 {
        numer = numer.add(&PowerSeries::x(order));
    }
    numer.mul(&denom.reciprocal())
}

fn herschel_signed(n: usize, op: &PowerSeries, stirling: &dyn Fn(usize, usize) -> Int) -> Int {
    // sum_{k<=2n} g_k k! S(2n, k); higher powers annihilate 0^{2n}
    let mut sum = Rat::zero();
    let mut kfact = Int::one();
    for k in 0..=2 * n {
        if k > 0 {
            kfact *= int(k as i64);
        }
        let g = op.coeff(k);
        if !g.is_zero() {
            sum += g * rat_int(&kfact * stirling(2 * n, k));
        }
    }
    expect_integer(&sum, "herschel")
}

/// Euler number via the Knuth-Buckholtz / Stern recursion.
pub fn euler_kb(index: usize) -> EulerValue {
    assert!(index % 2 == 0, "Euler numbers have even index, got {index}");
    let unsigned = kb_unsigned_upto(index).pop().unwrap();
    EulerValue::from_unsigned(index, unsigned, EulerMethod::KnuthBuckholtz)
}

/// Euler number via the central-difference sum.
pub fn euler_shov(index: usize) -> EulerValue {
    assert!(index % 2 == 0, "Euler numbers have even index, got {index}");
    let signed = shov_signed(index / 2, &shov_weights(index / 2), &|m, n| {
        delta_nothing(m, n)
    });
    EulerValue::from_signed(index, signed, EulerMethod::ShoveltonDelta)
}

/// Euler number via the square-root central-difference form.
pub fn euler_shov2(index: usize) -> EulerValue {
    assert!(index % 2 == 0, "Euler numbers have even index, got {index}");
    let signed = shov2_signed(index / 2, &shov2_weights(index / 2), &|m, n| {
        delta_nothing(m, n)
    });
    EulerValue::from_signed(index, signed, EulerMethod::ShoveltonSqrt)
}

/// Euler number via forward differences of nothing.
pub fn euler_herschel(index: usize) -> EulerValue {
    assert!(index % 2 == 0, "Euler numbers have even index, got {index}");
    let op = herschel_operator(index.max(1));
    let signed = herschel_signed(index / 2, &op, &stirling2);
    EulerValue::from_signed(index, signed, EulerMethod::Herschel)
}

/// Euler number read off the `1/cosh` series.
pub fn euler_oracle(index: usize) -> EulerValue {
    assert!(index % 2 == 0, "Euler numbers have even index, got {index}");
    let sech = PowerSeries::sech(oracle_order(index));
    let signed = expect_integer(&(sech.coeff(index) * rat_int(factorial(index))), "oracle");
    EulerValue::from_signed(index, signed, EulerMethod::SeriesOracle)
}

/// Compute one Euler number by the requested method.
pub fn euler(method: EulerMethod, index: usize) -> EulerValue {
    match method {
        EulerMethod::KnuthBuckholtz => euler_kb(index),
        EulerMethod::ShoveltonDelta => euler_shov(index),
        EulerMethod::ShoveltonSqrt => euler_shov2(index),
        EulerMethod::Herschel => euler_herschel(index),
        EulerMethod::SeriesOracle => euler_oracle(index),
    }
}

/// All Euler numbers with index `0, 2, ..., <= max_index` by one method,
/// sharing whatever table the method sweeps.
pub fn euler_upto(method: EulerMethod, max_index: usize) -> Vec<EulerValue> {
    let top = max_index / 2;
    match method {
        EulerMethod::KnuthBuckholtz => kb_unsigned_upto(max_index)
            .into_iter()
            .enumerate()
            .map(|(n, u)| EulerValue::from_unsigned(2 * n, u, method))
            .collect(),
        EulerMethod::ShoveltonDelta | EulerMethod::ShoveltonSqrt => {
            let delta = delta_triangle(2 * top);
            let delta_of = |m: usize, n: usize| delta.get(n, m).clone();
            let weights = match method {
                EulerMethod::ShoveltonDelta => shov_weights(top),
                _ => shov2_weights(top),
            };
            (0..=top)
                .map(|n| {
                    let signed = match method {
                        EulerMethod::ShoveltonDelta => shov_signed(n, &weights, &delta_of),
                        _ => shov2_signed(n, &weights, &delta_of),
                    };
                    EulerValue::from_signed(2 * n, signed, method)
                })
                .collect()
        }
        EulerMethod::Herschel => {
            let op = herschel_operator((2 * top).max(1));
            let s2 = stirling2_triangle(2 * top);
            let stirling = |n: usize, k: usize| s2.get(n, k).clone();
            (0..=top)
                .map(|n| {
                    EulerValue::from_signed(2 * n, herschel_signed(n, &op, &stirling), method)
                })
                .collect()
        }
        EulerMethod::SeriesOracle => {
            let sech = PowerSeries::sech(oracle_order(max_index));
            (0..=top)
                .map(|n| {
                    let signed = expect_integer(
                        &(sech.coeff(2 * n) * rat_int(factorial(2 * n))),
                        "oracle",
                    );
                    EulerValue::from_signed(2 * n, signed, method)
                })
                .collect()
        }
    }
}

/// The signed Euler numbers as a sequence triangle-free callers can index by
/// `n` (entry `n` is `E_{2n}`), using the recursion route.
pub fn signed_upto(max_index: usize) -> Vec<Int> {
    euler_upto(EulerMethod::KnuthBuckholtz, max_index)
        .into_iter()
        .map(|v| v.signed)
        .collect()
}

/// Stern table view of the recursion, for callers that want the whole
/// triangle rather than column zero.
pub fn stern_table(n_max: usize) -> SternTable {
    SternTable::build(n_max)
}

/// Peak bit length over the unsigned values of a computed run.
pub fn peak_bits(values: &[EulerValue]) -> u64 {
    crate::exact::peak_bits(values.iter().map(|v| &v.unsigned))
}
