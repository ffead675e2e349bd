//! Arbitrary-precision integer/rational arithmetic and the shared
//! triangular-table container.
//!
//! [`Int`] and [`Rat`] are aliases for `num` big integers and big rationals:
//! rationals are kept in lowest terms with a positive denominator, and all
//! arithmetic is exact. Fixed-width integers never appear in an arithmetic
//! path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Arbitrary-precision rational, always normalized (lowest terms, positive
/// denominator).
pub type Rat = BigRational;

/// Shorthand for a small integer constant.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Exact rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "rational with zero denominator");
    Rat::new(int(n), int(d))
}

/// Promote an integer to a rational.
pub fn rat_int(n: Int) -> Rat {
    Rat::from_integer(n)
}

/// Render a rational as `p/q`, omitting `/q` when the denominator is one.
pub fn fmt_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Extract the integer value of a rational, panicking if it is not integral.
pub fn expect_integer(x: &Rat, context: &str) -> Int {
    assert!(
        x.denom().is_one(),
        "{context}: expected an integer, got {}",
        fmt_rat(x)
    );
    x.numer().clone()
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> Int {
    let mut acc = Int::one();
    for j in 2..=n {
        acc *= Int::from(j);
    }
    acc
}

/// Double factorial `n!!`, with the conventions `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> Int {
    assert!(n >= -1, "double factorial of {n}");
    let mut acc = Int::one();
    let mut j = n;
    while j > 1 {
        acc *= Int::from(j);
        j -= 2;
    }
    acc
}

/// Integer binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for j in 0..k {
        acc = acc * Int::from(n - j) / Int::from(j + 1);
    }
    acc
}

/// Generalized binomial coefficient `C(alpha, k)` for rational `alpha`:
/// the product `alpha (alpha-1) ... (alpha-k+1) / k!`, computed exactly.
pub fn binomial_general(alpha: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for j in 0..k {
        acc *= alpha - rat_int(int(j as i64));
        acc /= rat_int(int(j as i64 + 1));
    }
    acc
}

/// An immutable lower-triangular table: row `n` holds entries for
/// `k = 0..=n`. Used for every coefficient family in the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle<T> {
    name: String,
    params: Vec<(String, String)>,
    rows: Vec<Vec<T>>,
}

impl<T> Triangle<T> {
    /// Build a triangle from fully materialized rows.
    ///
    /// Panics unless row `n` has exactly `n + 1` entries.
    pub fn from_rows(
        name: impl Into<String>,
        params: Vec<(String, String)>,
        rows: Vec<Vec<T>>,
    ) -> Self {
        for (n, row) in rows.iter().enumerate() {
            assert!(
                row.len() == n + 1,
                "triangle row {n} has {} entries, want {}",
                row.len(),
                n + 1
            );
        }
        Triangle {
            name: name.into(),
            params,
            rows,
        }
    }

    /// Label the table was built under.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Parameters the table was built from.
    pub fn params(&self) -> &[(String, String)] {
        &self.params
    }

    /// Number of materialized rows.
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    /// Row `n` as a slice. Panics if out of range.
    pub fn row(&self, n: usize) -> &[T] {
        &self.rows[n]
    }

    /// Entry `(n, k)`. Panics if out of range.
    pub fn get(&self, n: usize, k: usize) -> &T {
        assert!(k <= n && n < self.rows.len(), "triangle index ({n}, {k})");
        &self.rows[n][k]
    }

    /// Iterate entries in `(n, k)` lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(k, v)| (n, k, v)))
    }
}

/// Peak bit length over a sequence of integers; 0 for an empty sequence.
pub fn peak_bits<'a>(values: impl IntoIterator<Item = &'a Int>) -> u64 {
    values
        .into_iter()
        .map(|v| v.abs().bits())
        .max()
        .unwrap_or(0)
}
