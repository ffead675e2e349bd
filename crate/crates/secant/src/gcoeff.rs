//! The integer coefficient tables behind the sech-power expansion.
//!
//! [`GTable`] holds the coefficients expressing `sech^(2r+1)` through even
//! derivatives of `sech`, built from the two-term recursion
//! `G(r, p) = (2r-1)^2 G(r-1, p) + G(r-1, p-1)`.
//!
//! [`SternTable`] holds the triangle `E(n, k)` generated by
//! `E(n+1, k) = k E(n, k-1) + (k+1) E(n, k+1)` with `E(0, k) = delta_{0k}`:
//! the expansion coefficients of the derivatives of `sec` in powers of
//! `tan`. Stern's derivative-polynomial coefficients `a` are the same
//! triangle read through a parity embedding, so they are exposed as views
//! rather than stored twice. Column zero of the even rows is the unsigned
//! secant (Euler) number sequence.

use num_traits::{One, Zero};

use crate::central::t_triangle;
use crate::exact::{fmt_rat, int, rat_int, Int, Triangle};
use crate::verify::VerificationReport;

/// Coefficients `G(r, p)` of the sech-power expansion, `0 <= p <= r`.
#[derive(Clone, Debug)]
pub struct GTable(Triangle<Int>);

impl GTable {
    /// Build the full triangle up to row `r_max`.
    pub fn build(r_max: usize) -> Self {
        let mut rows: Vec<Vec<Int>> = Vec::with_capacity(r_max + 1);
        rows.push(vec![Int::one()]);
        for r in 1..=r_max {
            let prev = &rows[r - 1];
            let odd_sq = int(2 * r as i64 - 1) * int(2 * r as i64 - 1);
            let row = (0..=r)
                .map(|p| {
                    let mut v = Int::zero();
                    if p < r {
                        v += &odd_sq * &prev[p];
                    }
                    if p > 0 {
                        v += &prev[p - 1];
                    }
                    v
                })
                .collect();
            rows.push(row);
        }
        GTable(Triangle::from_rows(
            "gcoeff",
            vec![("rows".into(), r_max.to_string())],
            rows,
        ))
    }

    /// `G(r, p)`. Panics if out of range.
    pub fn get(&self, r: usize, p: usize) -> &Int {
        self.0.get(r, p)
    }

    /// Number of rows materialized.
    pub fn rows(&self) -> usize {
        self.0.rows()
    }

    /// The underlying triangle.
    pub fn triangle(&self) -> &Triangle<Int> {
        &self.0
    }
}

/// The secant derivative triangle `E(n, k)`, rows `0..=n_max`.
#[derive(Clone, Debug)]
pub struct SternTable(Triangle<Int>);

impl SternTable {
    /// Build the full triangle up to row `n_max`.
    pub fn build(n_max: usize) -> Self {
        let mut rows: Vec<Vec<Int>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![Int::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let at = |k: usize| -> Int {
                if k < prev.len() {
                    prev[k].clone()
                } else {
                    Int::zero()
                }
            };
            let row = (0..=n)
                .map(|k| {
                    let mut v = Int::zero();
                    if k > 0 {
                        v += int(k as i64) * at(k - 1);
                    }
                    v += int(k as i64 + 1) * at(k + 1);
                    v
                })
                .collect();
            rows.push(row);
        }
        SternTable(Triangle::from_rows(
            "stern",
            vec![("rows".into(), n_max.to_string())],
            rows,
        ))
    }

    /// `E(n, k)`. Panics if out of range.
    pub fn e(&self, n: usize, k: usize) -> &Int {
        self.0.get(n, k)
    }

    /// Derivative-polynomial coefficient `a^(2 rho)_k  = E(2 rho, 2k)`.
    pub fn a_even(&self, rho: usize, k: usize) -> &Int {
        self.e(2 * rho, 2 * k)
    }

    /// Derivative-polynomial coefficient `a^(2 rho + 1)_k = E(2 rho + 1, 2k + 1)`.
    pub fn a_odd(&self, rho: usize, k: usize) -> &Int {
        self.e(2 * rho + 1, 2 * k + 1)
    }

    /// Number of rows materialized.
    pub fn rows(&self) -> usize {
        self.0.rows()
    }

    /// The underlying triangle.
    pub fn triangle(&self) -> &Triangle<Int> {
        &self.0
    }
}

/// Cross-check the recursion-built `G` against the first-kind central
/// factorial numbers: `G(r, p) == (-1)^(r-p) 4^(r-p) t(2r+1, 2p+1)` for all
/// `0 <= p <= r <= r_max`.
pub fn g_from_t_crosscheck(r_max: usize) -> VerificationReport {
    let id = "gees";
    let range = format!("0 <= p <= r <= {r_max}");
    let g = GTable::build(r_max);
    let t = t_triangle(2 * r_max + 1);
    for r in 0..=r_max {
        for p in 0..=r {
            let mut rhs = t.get(2 * r + 1, 2 * p + 1) * rat_int(Int::one() << (2 * (r - p)));
            if (r - p) % 2 == 1 {
                rhs = -rhs;
            }
            let lhs = rat_int(g.get(r, p).clone());
            if lhs != rhs {
                return VerificationReport::fail(
                    id,
                    range,
                    format!("r={r}, p={p}"),
                    fmt_rat(&lhs),
                    fmt_rat(&rhs),
                );
            }
        }
    }
    VerificationReport::pass(id, range)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binomial, factorial, rat, Rat};
    use crate::poly::Polynomial;

    #[test]
    fn g_table_examples() {
        let g = GTable::build(4);
        assert_eq!(*g.get(0, 0), int(1));
        for r in 0..=4 {
            assert_eq!(*g.get(r, r), int(1));
        }
        assert_eq!(*g.get(1, 0), int(1));
        assert_eq!(*g.get(2, 0), int(9));
        assert_eq!(*g.get(2, 1), int(10));
    }

    #[test]
    fn g_entries_positive() {
        let g = GTable::build(12);
        for r in 0..g.rows() {
            for p in 0..=r {
                assert!(*g.get(r, p) > Int::zero());
            }
        }
    }

    #[test]
    fn stern_table_examples() {
        let s = SternTable::build(6);
        assert_eq!(*s.e(0, 0), int(1));
        assert_eq!(*s.e(2, 0), int(1));
        assert_eq!(*s.e(2, 2), int(2));
        assert_eq!(*s.e(4, 0), int(5));
        assert_eq!(*s.e(6, 0), int(61));
    }

    #[test]
    fn stern_parity_zeros() {
        let s = SternTable::build(15);
        for n in 0..s.rows() {
            for k in 0..=n {
                if (n + k) % 2 == 1 {
                    assert!(s.e(n, k).is_zero(), "E({n},{k})");
                }
            }
        }
    }

    #[test]
    fn secant_column_repeats_between_even_and_odd_rows() {
        // a^(2v)_0 == a^(2v-1)_0 for v >= 1
        let s = SternTable::build(21);
        for v in 1..=10 {
            assert_eq!(s.a_even(v, 0), s.e(2 * v - 1, 1));
        }
    }

    #[test]
    fn stern_coupled_recursions() {
        // a^(2n+1)_k = (2k+1) a^(2n)_k + (2k+2) a^(2n)_{k+1}
        // a^(2n+2)_k = 2k a^(2n+1)_{k-1} + (2k+1) a^(2n+1)_k
        let s = SternTable::build(24);
        let a_even = |rho: usize, k: usize| -> Int {
            if 2 * k <= 2 * rho {
                s.a_even(rho, k).clone()
            } else {
                Int::zero()
            }
        };
        let a_odd = |rho: usize, k: usize| -> Int {
            if 2 * k + 1 <= 2 * rho + 1 {
                s.a_odd(rho, k).clone()
            } else {
                Int::zero()
            }
        };
        for n in 0..=10usize {
            for k in 0..=n {
                assert_eq!(
                    a_odd(n, k),
                    int(2 * k as i64 + 1) * a_even(n, k) + int(2 * k as i64 + 2) * a_even(n, k + 1)
                );
                let lhs = a_even(n + 1, k);
                let mut rhs = int(2 * k as i64 + 1) * a_odd(n, k);
                if k > 0 {
                    rhs += int(2 * k as i64) * a_odd(n, k - 1);
                }
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn g_row_encodes_odd_square_product() {
        // sum_p (-1)^(r-p) G(r,p) x^(2p) == prod_{j=1}^{r} (x^2 - (2j-1)^2)
        let r_max = 10;
        let g = GTable::build(r_max);
        for r in 0..=r_max {
            let mut lhs = vec![Rat::zero(); 2 * r + 1];
            for p in 0..=r {
                let mut c = rat_int(g.get(r, p).clone());
                if (r - p) % 2 == 1 {
                    c = -c;
                }
                lhs[2 * p] = c;
            }
            let lhs = Polynomial::from_coeffs(lhs);
            let mut rhs = Polynomial::one();
            for j in 1..=r {
                let odd = 2 * j as i64 - 1;
                rhs = rhs.mul(&Polynomial::from_coeffs(vec![
                    rat(-odd * odd, 1),
                    Rat::zero(),
                    Rat::one(),
                ]));
            }
            assert_eq!(lhs, rhs, "row {r}");
        }
    }

    #[test]
    fn crosscheck_small_and_bulk() {
        assert!(g_from_t_crosscheck(0).passed());
        assert!(g_from_t_crosscheck(2).passed());
        assert!(g_from_t_crosscheck(12).passed());
    }

    #[test]
    fn stern_cross_identities_small() {
        // sum_{rho=s}^{r} G(r,rho) a^(2rho)_s == (2r)! C(r,s), and the odd
        // variant with (2r+1)!; spot values from the hand-checked cases.
        let g = GTable::build(3);
        let s = SternTable::build(7);
        assert_eq!(
            rat_int(g.get(1, 1).clone()) * rat_int(s.a_even(1, 1).clone()),
            rat_int(factorial(2))
        );
        let sum = g.get(1, 0) * s.a_even(0, 0) + g.get(1, 1) * s.a_even(1, 0);
        assert_eq!(sum, factorial(2) * binomial(1, 0));
    }
}
