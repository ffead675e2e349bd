//! Central factorial polynomials and the factorial-number triangles.
//!
//! The central factorial `x^[n]` is `x * prod_{j=1}^{n-1} (x + n/2 - j)`,
//! with `x^[0] = 1`. Its coefficients are the central factorial numbers of
//! the first kind `t(n, k)`; the second kind is `T(n, k) = delta^k 0^n / k!`
//! where `delta^m 0^n` is the central difference of nothing, evaluated by
//! the finite sum
//!
//! ```text
//! delta^m 0^n = sum_{j=0}^{m} (-1)^j C(m, j) (m/2 - j)^n .
//! ```
//!
//! Stirling numbers of the second kind enter through the forward differences
//! of nothing, `Delta^k 0^n = k! S(n, k)`.
//!
//! The two kinds are mutually inverse as lower-triangular matrices; that and
//! the other structural facts are exercised in the tests and in the identity
//! suite rather than assumed.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{binomial, factorial, int, rat, rat_int, Int, Rat, Triangle};
use crate::poly::Polynomial;

/// The central factorial polynomial `x^[n]`.
///
/// `n = 0` gives the constant 1; for `n >= 1` the result is monic of
/// degree `n` with zero constant term.
pub fn central_factorial_poly(n: usize) -> Polynomial {
    if n == 0 {
        return Polynomial::one();
    }
    let half_n = rat(n as i64, 2);
    let mut p = Polynomial::monomial(1);
    for j in 1..n {
        let c = &half_n - rat(j as i64, 1);
        // multiply by (x + c)
        p = p.mul(&Polynomial::from_coeffs(vec![c, Rat::one()]));
    }
    p
}

/// Central factorial number of the first kind `t(n, k)`: the coefficient of
/// `x^k` in `x^[n]`. Panics if `k > n`.
pub fn first_kind(n: usize, k: usize) -> Rat {
    assert!(k <= n, "t({n}, {k}) out of range");
    central_factorial_poly(n).coeff(k)
}

/// Central difference of nothing `delta^m 0^n`, by the defining finite sum.
pub fn delta_nothing(m: usize, n: usize) -> Rat {
    let mut sum = Int::zero();
    for j in 0..=m {
        let base = int(m as i64 - 2 * j as i64);
        let term = binomial(m, j) * base.pow(n as u32);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    // each (m/2 - j)^n contributes a denominator 2^n
    Rat::new(sum, Int::one() << n)
}

/// Central factorial number of the second kind `T(n, k) = delta^k 0^n / k!`.
/// Panics if `k > n`.
pub fn second_kind(n: usize, k: usize) -> Rat {
    assert!(k <= n, "T({n}, {k}) out of range");
    delta_nothing(k, n) / rat_int(factorial(k))
}

/// Stirling number of the second kind, via the forward differences of
/// nothing `Delta^k 0^n = k! S(n, k)`. Panics if `k > n`.
pub fn stirling2(n: usize, k: usize) -> Int {
    assert!(k <= n, "S({n}, {k}) out of range");
    let delta = forward_delta_nothing(k, n);
    let (q, r) = delta.div_rem(&factorial(k));
    assert!(r.is_zero(), "Delta^{k} 0^{n} not divisible by {k}!");
    q
}

/// Forward difference of nothing `Delta^k 0^n`.
fn forward_delta_nothing(k: usize, n: usize) -> Int {
    let mut sum = Int::zero();
    for j in 0..=k {
        let term = binomial(k, j) * int((k - j) as i64).pow(n as u32);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// `xi^m 0^n = m! t(n, m)`, the central differentials behind the inverse
/// sinh expansion. Panics if `m > n`.
pub fn xi_nothing(m: usize, n: usize) -> Rat {
    assert!(m <= n, "xi^{m} 0^{n} out of range");
    rat_int(factorial(m)) * first_kind(n, m)
}

/// Triangle of `t(n, k)` for `n <= n_max`, by polynomial expansion.
///
/// The roots of `x^[n]` are symmetric, so the product telescopes two rows
/// at a time: `x^[n+2] = x^[n] (x^2 - (n/2)^2)`. The expansion-from-scratch
/// point operation [`first_kind`] stays the reference; the tests hold the
/// two against each other.
pub fn t_triangle(n_max: usize) -> Triangle<Rat> {
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let row: Vec<Rat> = if n < 2 {
            central_factorial_poly(n)
                .coeffs()
                .iter()
                .cloned()
                .chain(std::iter::repeat(Rat::zero()))
                .take(n + 1)
                .collect()
        } else {
            let prev = &rows[n - 2];
            let sq = rat((n as i64 - 2) * (n as i64 - 2), 4);
            (0..=n)
                .map(|k| {
                    let mut c = Rat::zero();
                    if k >= 2 {
                        c += &prev[k - 2];
                    }
                    if k < prev.len() {
                        c -= &sq * &prev[k];
                    }
                    c
                })
                .collect()
        };
        rows.push(row);
    }
    Triangle::from_rows("cfn-first", vec![("rows".into(), n_max.to_string())], rows)
}

/// Triangle of `delta^k 0^n` for `k <= n <= n_max`.
///
/// Column `k` keeps the powers `(k - 2j)^n` alive across rows so the whole
/// table costs one multiplication per retained power per row.
pub fn delta_triangle(n_max: usize) -> Triangle<Rat> {
    struct Col {
        bases: Vec<Int>,
        pows: Vec<Int>,
        signed_binoms: Vec<Int>,
    }
    let mut cols: Vec<Col> = Vec::with_capacity(n_max + 1);
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let bases: Vec<Int> = (0..=n).map(|j| int(n as i64 - 2 * j as i64)).collect();
        let pows = bases.iter().map(|b| b.pow(n as u32)).collect();
        let signed_binoms = (0..=n)
            .map(|j| {
                let b = binomial(n, j);
                if j % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .collect();
        cols.push(Col {
            bases,
            pows,
            signed_binoms,
        });
        let denom = Int::one() << n;
        let row = cols
            .iter()
            .map(|col| {
                // delta^k 0^n vanishes off parity; skip the summation there
                if (col.bases.len() - 1) % 2 != n % 2 {
                    return Rat::zero();
                }
                let mut sum = Int::zero();
                for (c, p) in col.signed_binoms.iter().zip(&col.pows) {
                    sum += c * p;
                }
                Rat::new(sum, denom.clone())
            })
            .collect();
        rows.push(row);
        for col in &mut cols {
            for (p, b) in col.pows.iter_mut().zip(&col.bases) {
                *p *= b;
            }
        }
    }
    Triangle::from_rows(
        "delta-nothing",
        vec![("rows".into(), n_max.to_string())],
        rows,
    )
}

/// Triangle of `T(n, k)` for `n <= n_max`.
pub fn t2_triangle(n_max: usize) -> Triangle<Rat> {
    triangle_from_delta(&delta_triangle(n_max), n_max)
}

fn triangle_from_delta(delta: &Triangle<Rat>, n_max: usize) -> Triangle<Rat> {
    let mut kfact = vec![Rat::one(); n_max + 1];
    for k in 1..=n_max {
        kfact[k] = &kfact[k - 1] * rat(k as i64, 1);
    }
    let rows = (0..=n_max)
        .map(|n| (0..=n).map(|k| delta.get(n, k) / &kfact[k]).collect())
        .collect();
    Triangle::from_rows("cfn-second", vec![("rows".into(), n_max.to_string())], rows)
}

/// Triangle of `S(n, k)` for `n <= n_max`, by forward differences of nothing.
pub fn stirling2_triangle(n_max: usize) -> Triangle<Int> {
    struct Col {
        bases: Vec<Int>,
        pows: Vec<Int>,
        signed_binoms: Vec<Int>,
    }
    let mut cols: Vec<Col> = Vec::with_capacity(n_max + 1);
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(n_max + 1);
    let mut kfact = vec![Int::one(); n_max + 1];
    for k in 1..=n_max {
        kfact[k] = &kfact[k - 1] * int(k as i64);
    }
    for n in 0..=n_max {
        let bases: Vec<Int> = (0..=n).map(|j| int((n - j) as i64)).collect();
        let pows = bases.iter().map(|b| b.pow(n as u32)).collect();
        let signed_binoms = (0..=n)
            .map(|j| {
                let b = binomial(n, j);
                if j % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .collect();
        cols.push(Col {
            bases,
            pows,
            signed_binoms,
        });
        let row = cols
            .iter()
            .enumerate()
            .map(|(k, col)| {
                let mut sum = Int::zero();
                for (c, p) in col.signed_binoms.iter().zip(&col.pows) {
                    sum += c * p;
                }
                let (q, r) = sum.div_rem(&kfact[k]);
                assert!(r.is_zero(), "Delta^{k} 0^{n} not divisible by {k}!");
                q
            })
            .collect();
        rows.push(row);
        for col in &mut cols {
            for (p, b) in col.pows.iter_mut().zip(&col.bases) {
                *p *= b;
            }
        }
    }
    Triangle::from_rows("stirling2", vec![("rows".into(), n_max.to_string())], rows)
}

/// The four factorial-number triangles, materialized together up to `n_max`.
#[derive(Clone, Debug)]
pub struct FactorialTables {
    t: Triangle<Rat>,
    t2: Triangle<Rat>,
    delta: Triangle<Rat>,
    stirling2: Triangle<Int>,
}

impl FactorialTables {
    pub fn build(n_max: usize) -> Self {
        let delta = delta_triangle(n_max);
        let t2 = triangle_from_delta(&delta, n_max);
        FactorialTables {
            t: t_triangle(n_max),
            t2,
            delta,
            stirling2: stirling2_triangle(n_max),
        }
    }

    /// Largest materialized row index.
    pub fn n_max(&self) -> usize {
        self.t.rows() - 1
    }

    /// `t(n, k)`.
    pub fn t(&self, n: usize, k: usize) -> &Rat {
        self.t.get(n, k)
    }

    /// `T(n, k)`.
    pub fn t2(&self, n: usize, k: usize) -> &Rat {
        self.t2.get(n, k)
    }

    /// `delta^k 0^n`.
    pub fn delta(&self, n: usize, k: usize) -> &Rat {
        self.delta.get(n, k)
    }

    /// `S(n, k)`.
    pub fn stirling2(&self, n: usize, k: usize) -> &Int {
        self.stirling2.get(n, k)
    }

    pub fn t_table(&self) -> &Triangle<Rat> {
        &self.t
    }

    pub fn t2_table(&self) -> &Triangle<Rat> {
        &self.t2
    }

    pub fn delta_table(&self) -> &Triangle<Rat> {
        &self.delta
    }

    pub fn stirling2_table(&self) -> &Triangle<Int> {
        &self.stirling2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fmt_rat;

    #[test]
    fn central_factorial_poly_examples() {
        assert_eq!(central_factorial_poly(0), Polynomial::one());
        // x^[3] = x(x+1/2)(x-1/2) = x^3 - x/4
        let p3 = central_factorial_poly(3);
        assert_eq!(p3.coeffs(), &[rat(0, 1), rat(-1, 4), rat(0, 1), rat(1, 1)]);
        // x^[4] = x(x+1)x(x-1) = x^4 - x^2
        let p4 = central_factorial_poly(4);
        assert_eq!(
            p4.coeffs(),
            &[rat(0, 1), rat(0, 1), rat(-1, 1), rat(0, 1), rat(1, 1)]
        );
    }

    #[test]
    fn first_kind_examples() {
        for n in 0..10 {
            assert_eq!(first_kind(n, n), rat(1, 1));
        }
        assert_eq!(first_kind(3, 1), rat(-1, 4));
        // from x^[5] = x^5 - 5x^3/2 + 9x/16
        assert_eq!(first_kind(5, 1), rat(9, 16));
        assert_eq!(first_kind(5, 3), rat(-5, 2));
    }

    #[test]
    fn delta_nothing_examples() {
        assert_eq!(delta_nothing(0, 0), rat(1, 1));
        assert_eq!(delta_nothing(1, 1), rat(1, 1));
        assert_eq!(delta_nothing(2, 4), rat(2, 1));
        assert_eq!(delta_nothing(1, 3), rat(1, 4));
        // annihilation and parity zeros
        assert_eq!(delta_nothing(3, 1), rat(0, 1));
        assert_eq!(delta_nothing(1, 2), rat(0, 1));
        assert_eq!(delta_nothing(4, 0), rat(0, 1));
    }

    #[test]
    fn second_kind_examples() {
        for n in 0..10 {
            assert_eq!(second_kind(n, n), rat(1, 1));
        }
        assert_eq!(second_kind(4, 2), rat(1, 1));
        assert_eq!(second_kind(3, 1), rat(1, 4));
    }

    /// Count set partitions of `n` elements into exactly `k` blocks by
    /// enumerating all block assignments.
    fn partitions_brute_force(n: usize, k: usize) -> Int {
        if k == 0 {
            return if n == 0 { Int::one() } else { Int::zero() };
        }
        let mut surjective = 0u64;
        let total = (k as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut used = vec![false; k];
            for _ in 0..n {
                used[(c % k as u64) as usize] = true;
                c /= k as u64;
            }
            if used.iter().all(|&u| u) {
                surjective += 1;
            }
        }
        let (q, r) = Int::from(surjective).div_rem(&factorial(k));
        assert!(r.is_zero());
        q
    }

    #[test]
    fn stirling2_matches_partition_enumeration() {
        assert_eq!(stirling2(3, 2), int(3));
        assert_eq!(stirling2(4, 2), int(7));
        for n in 0..=7 {
            for k in 0..=n {
                assert_eq!(
                    stirling2(n, k),
                    partitions_brute_force(n, k),
                    "S({n},{k})"
                );
            }
        }
    }

    #[test]
    fn xi_nothing_examples() {
        assert_eq!(xi_nothing(1, 1), rat(1, 1));
        assert_eq!(xi_nothing(1, 3), rat(-1, 4));
        assert_eq!(xi_nothing(3, 3), rat(6, 1));
    }

    #[test]
    fn xi_nothing_matches_asinh_powers() {
        // xi^m 0^n == n! * [x^n] (2 asinh(x/2))^m
        use crate::series::PowerSeries;
        let order = 12;
        let half_x = PowerSeries::x(order).scale(&rat(1, 2));
        let xi = PowerSeries::asinh(order)
            .compose(&half_x)
            .scale(&rat(2, 1));
        for m in 0..=order {
            let pw = xi.pow(m as i64);
            for n in m..=order {
                assert_eq!(
                    xi_nothing(m, n),
                    pw.coeff(n) * rat_int(factorial(n)),
                    "xi^{m} 0^{n}"
                );
            }
        }
    }

    #[test]
    fn bulk_tables_match_point_operations() {
        let n_max = 14;
        let tables = FactorialTables::build(n_max);
        for n in 0..=n_max {
            for k in 0..=n {
                assert_eq!(*tables.t(n, k), first_kind(n, k));
                assert_eq!(*tables.t2(n, k), second_kind(n, k));
                assert_eq!(*tables.delta(n, k), delta_nothing(k, n));
                assert_eq!(*tables.stirling2(n, k), stirling2(n, k));
            }
        }
    }

    #[test]
    fn parity_vanishing_and_integrality() {
        let n_max = 16;
        let tables = FactorialTables::build(n_max);
        for n in 0..=n_max {
            for k in 0..=n {
                let t = tables.t(n, k);
                let t2 = tables.t2(n, k);
                if (n - k) % 2 == 1 {
                    assert!(t.is_zero(), "t({n},{k})");
                    assert!(t2.is_zero(), "T({n},{k})");
                    continue;
                }
                if n % 2 == 0 {
                    assert!(t.denom().is_one(), "t({n},{k}) = {}", fmt_rat(t));
                }
                // 2^(n-k) t(n,k) and 2^(n-k) T(n,k) are integers
                let scale = rat_int(Int::one() << (n - k));
                assert!((t * &scale).denom().is_one());
                assert!((t2 * &scale).denom().is_one());
            }
        }
    }

    #[test]
    fn second_kind_recurrence_consistency() {
        // T(n,k) = T(n-2,k-2) + (k^2/4) T(n-2,k), against the delta-sum
        // construction.
        let n_max = 20;
        let tables = FactorialTables::build(n_max);
        let t2_of = |n: usize, k: usize| -> Rat {
            if k <= n {
                tables.t2(n, k).clone()
            } else {
                Rat::zero()
            }
        };
        for n in 2..=n_max {
            for k in 2..=n {
                let rec = t2_of(n - 2, k - 2) + rat((k * k) as i64, 4) * t2_of(n - 2, k);
                assert_eq!(*tables.t2(n, k), rec, "T({n},{k})");
            }
        }
    }

    #[test]
    fn orthogonality_small() {
        let n_max = 10;
        let tables = FactorialTables::build(n_max);
        for n in 0..=n_max {
            for m in 0..=n {
                let mut dot_tt2 = Rat::zero();
                let mut dot_t2t = Rat::zero();
                for k in m..=n {
                    dot_tt2 += tables.t2(n, k) * tables.t(k, m);
                    dot_t2t += tables.t(n, k) * tables.t2(k, m);
                }
                let expect = if n == m { Rat::one() } else { Rat::zero() };
                assert_eq!(dot_tt2, expect);
                assert_eq!(dot_t2t, expect);
            }
        }
    }

    #[test]
    fn sinh_powers_give_second_kind() {
        // [x^n] (2 sinh(x/2))^m == m! T(n,m) / n!
        use crate::series::PowerSeries;
        let order = 12;
        let half_x = PowerSeries::x(order).scale(&rat(1, 2));
        let d = PowerSeries::sinh(order)
            .compose(&half_x)
            .scale(&rat(2, 1));
        for m in 0..=order {
            let pw = d.pow(m as i64);
            for n in m..=order {
                assert_eq!(
                    pw.coeff(n) * rat_int(factorial(n)),
                    rat_int(factorial(m)) * second_kind(n, m)
                );
            }
        }
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn first_kind_rejects_bad_index() {
        let _ = first_kind(3, 4);
    }
}
