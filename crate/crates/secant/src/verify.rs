//! Mechanical, exact verification of the identity catalogue.
//!
//! Every check sweeps a finite parameter range over exact rationals and
//! returns a [`VerificationReport`]: either a pass over the whole range or
//! the first counterexample with both sides' exact values. Nothing here is
//! tolerance-based; equality means bit-exact equality of normalized
//! rationals.
//!
//! The operator language used below: `f(D) 0^[n]` denotes the series
//! `f` applied, power of the derivative by power, to the central factorial
//! of nothing, which concretely is `sum_k f_k k! t(n, k)`.

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::central::{t_triangle, FactorialTables};
use crate::euler;
use crate::exact::{
    binomial, binomial_general, double_factorial, factorial, fmt_rat, rat, rat_int, Int, Rat,
    Triangle,
};
use crate::gcoeff::{g_from_t_crosscheck, GTable, SternTable};
use crate::poly::Polynomial;
use crate::series::PowerSeries;

/// The first failing parameter tuple of a check, with both sides printed
/// exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// The parameter tuple, e.g. `s=3` or `r=2, p=1`.
    pub at: String,
    /// Exact left-hand side.
    pub lhs: String,
    /// Exact right-hand side.
    pub rhs: String,
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    identity: String,
    param_range: String,
    counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn pass(identity: impl Into<String>, param_range: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.into(),
            param_range: param_range.into(),
            counterexample: None,
        }
    }

    pub fn fail(
        identity: impl Into<String>,
        param_range: impl Into<String>,
        at: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Self {
        VerificationReport {
            identity: identity.into(),
            param_range: param_range.into(),
            counterexample: Some(Counterexample {
                at: at.into(),
                lhs: lhs.into(),
                rhs: rhs.into(),
            }),
        }
    }

    pub fn identity(&self) -> &str {
        &self.identity
    }

    pub fn param_range(&self) -> &str {
        &self.param_range
    }

    /// True iff no counterexample was found.
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        self.counterexample.as_ref()
    }
}

/// Walks a parameter sweep, recording the first mismatch.
struct Checker {
    id: &'static str,
    range: String,
    failure: Option<Counterexample>,
}

impl Checker {
    fn new(id: &'static str, range: String) -> Self {
        Checker {
            id,
            range,
            failure: None,
        }
    }

    fn eq_rat(&mut self, at: impl Fn() -> String, lhs: &Rat, rhs: &Rat) -> bool {
        if self.failure.is_none() && lhs != rhs {
            self.failure = Some(Counterexample {
                at: at(),
                lhs: fmt_rat(lhs),
                rhs: fmt_rat(rhs),
            });
        }
        self.failure.is_none()
    }

    fn eq_int(&mut self, at: impl Fn() -> String, lhs: &Int, rhs: &Int) -> bool {
        if self.failure.is_none() && lhs != rhs {
            self.failure = Some(Counterexample {
                at: at(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        self.failure.is_none()
    }

    fn eq_poly(&mut self, at: impl Fn() -> String, lhs: &Polynomial, rhs: &Polynomial) -> bool {
        if self.failure.is_none() && lhs != rhs {
            self.failure = Some(Counterexample {
                at: at(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        self.failure.is_none()
    }

    fn eq_series(&mut self, at: impl Fn() -> String, lhs: &PowerSeries, rhs: &PowerSeries) -> bool {
        if self.failure.is_none() {
            for k in 0..=lhs.order().min(rhs.order()) {
                if lhs.coeff(k) != rhs.coeff(k) {
                    self.failure = Some(Counterexample {
                        at: format!("{}, x^{k}", at()),
                        lhs: fmt_rat(lhs.coeff(k)),
                        rhs: fmt_rat(rhs.coeff(k)),
                    });
                    break;
                }
            }
        }
        self.failure.is_none()
    }

    fn report(self) -> VerificationReport {
        VerificationReport {
            identity: self.id.into(),
            param_range: self.range,
            counterexample: self.failure,
        }
    }
}

/// `f(D) 0^[n] = sum_k f_k k! t(n, k)`.
fn op_on_factorial(f: &PowerSeries, n: usize, t: &Triangle<Rat>) -> Rat {
    let mut sum = Rat::zero();
    let mut kfact = Int::one();
    for k in 0..=n.min(f.order()) {
        if k > 0 {
            kfact *= Int::from(k);
        }
        let c = f.coeff(k);
        if !c.is_zero() {
            sum += c * rat_int(kfact.clone()) * t.get(n, k);
        }
    }
    sum
}

/// Sum rule for Euler numbers:
/// `sum_{n=1}^{s} E_{2n} t(2s, 2n) / 4^n  ==  t(2s+1, 1)
///  ==  (2s)!/4^s C(-1/2, s)  ==  (-1)^s ((2s-1)!!/2^s)^2` for `1 <= s <= s_max`.
pub fn verify_sr(s_max: usize) -> VerificationReport {
    assert!(s_max >= 1);
    let mut ck = Checker::new("SR", format!("1 <= s <= {s_max}"));
    let t = t_triangle(2 * s_max + 1);
    let e = euler::signed_upto(2 * s_max);
    for s in 1..=s_max {
        let mut lhs = Rat::zero();
        for n in 1..=s {
            lhs += rat_int(e[n].clone()) * t.get(2 * s, 2 * n) / rat_int(Int::one() << (2 * n));
        }
        let mid = t.get(2 * s + 1, 1).clone();
        let dfac = rat_int(double_factorial(2 * s as i64 - 1)) / rat_int(Int::one() << s);
        let mut closed = &dfac * &dfac;
        if s % 2 == 1 {
            closed = -closed;
        }
        let closed2 = rat_int(factorial(2 * s)) / rat_int(Int::one() << (2 * s))
            * binomial_general(&rat(-1, 2), s);
        if !ck.eq_rat(|| format!("s={s}"), &lhs, &mid) {
            break;
        }
        if !ck.eq_rat(|| format!("s={s} (closed form)"), &mid, &closed) {
            break;
        }
        if !ck.eq_rat(|| format!("s={s} (binomial form)"), &closed, &closed2) {
            break;
        }
    }
    ck.report()
}

/// Even sum rule: `sum_{k=1}^{v+1} 4 t(2v+2, 2k) / 4^k == (2v)!/4^v C(-3/2, v)`.
pub fn verify_sr1(nu_max: usize) -> VerificationReport {
    let mut ck = Checker::new("SR1", format!("0 <= v <= {nu_max}"));
    let t = t_triangle(2 * nu_max + 2);
    for v in 0..=nu_max {
        let mut lhs = Rat::zero();
        for k in 1..=v + 1 {
            lhs += rat(4, 1) * t.get(2 * v + 2, 2 * k) / rat_int(Int::one() << (2 * k));
        }
        let rhs = rat_int(factorial(2 * v)) / rat_int(Int::one() << (2 * v))
            * binomial_general(&rat(-3, 2), v);
        if !ck.eq_rat(|| format!("v={v}"), &lhs, &rhs) {
            break;
        }
    }
    ck.report()
}

/// Odd sum rule: `(4/3) sum_{k=0}^{v+1} t(2v+3, 2k+1) == (2v)!/4^v C(-5/2, v)`.
pub fn verify_sr2(nu_max: usize) -> VerificationReport {
    let mut ck = Checker::new("SR2", format!("0 <= v <= {nu_max}"));
    let t = t_triangle(2 * nu_max + 3);
    for v in 0..=nu_max {
        let mut lhs = Rat::zero();
        for k in 0..=v + 1 {
            lhs += t.get(2 * v + 3, 2 * k + 1);
        }
        lhs *= rat(4, 3);
        let rhs = rat_int(factorial(2 * v)) / rat_int(Int::one() << (2 * v))
            * binomial_general(&rat(-5, 2), v);
        if !ck.eq_rat(|| format!("v={v}"), &lhs, &rhs) {
            break;
        }
    }
    ck.report()
}

/// The triangles of the two kinds are mutually inverse:
/// `sum_k T(n,k) t(k,m) == delta_{nm}` and `sum_k t(n,k) T(k,m) == delta_{nm}`.
pub fn verify_orthogonality(n_max: usize) -> VerificationReport {
    let mut ck = Checker::new("orthogonality", format!("0 <= m <= n <= {n_max}"));
    let tables = FactorialTables::build(n_max);
    'outer: for n in 0..=n_max {
        for m in 0..=n {
            let expect = if n == m { Rat::one() } else { Rat::zero() };
            let mut dot1 = Rat::zero();
            let mut dot2 = Rat::zero();
            for k in m..=n {
                dot1 += tables.t2(n, k) * tables.t(k, m);
                dot2 += tables.t(n, k) * tables.t2(k, m);
            }
            if !ck.eq_rat(|| format!("T.t at n={n}, m={m}"), &dot1, &expect) {
                break 'outer;
            }
            if !ck.eq_rat(|| format!("t.T at n={n}, m={m}"), &dot2, &expect) {
                break 'outer;
            }
        }
    }
    ck.report()
}

/// Cross identities between the `G` table and the derivative triangle:
/// `sum_{p=s}^{r} G(r,p) a^(2p)_s == (2r)! C(r,s)` and
/// `sum_{p=s}^{r} G(r,p) a^(2p+1)_s == (2r+1)! C(r,s)`.
pub fn verify_stern_crossids(r_max: usize) -> VerificationReport {
    let mut ck = Checker::new("stern-cross", format!("0 <= s <= r <= {r_max}"));
    let g = GTable::build(r_max);
    let stern = SternTable::build(2 * r_max + 1);
    'outer: for r in 0..=r_max {
        for s in 0..=r {
            let mut even = Int::zero();
            let mut odd = Int::zero();
            for p in s..=r {
                even += g.get(r, p) * stern.a_even(p, s);
                odd += g.get(r, p) * stern.a_odd(p, s);
            }
            let c = binomial(r, s);
            let rhs_even = factorial(2 * r) * &c;
            let rhs_odd = factorial(2 * r + 1) * &c;
            if !ck.eq_int(|| format!("even, r={r}, s={s}"), &even, &rhs_even) {
                break 'outer;
            }
            if !ck.eq_int(|| format!("odd, r={r}, s={s}"), &odd, &rhs_odd) {
                break 'outer;
            }
        }
    }
    ck.report()
}

fn compose_half_x(f: &PowerSeries) -> PowerSeries {
    let half_x = PowerSeries::x(f.order()).scale(&rat(1, 2));
    f.compose(&half_x)
}

/// A reproducible polynomial with small rational coefficients, as a series.
fn seeded_polynomial_series(order: usize, degree: usize, seed: u64) -> PowerSeries {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PowerSeries::from_fn(order, |k| {
        if k <= degree {
            rat(rng.gen_range(-12..=12), rng.gen_range(1..=8))
        } else {
            Rat::zero()
        }
    })
}

/// The derivation theorem `f(D) 0^[n] == (d f(D)/d delta) 0^[n-1]`, with
/// `d/d delta` realized as multiplication of `f'` by `sech(D/2)`, checked
/// over a fixed family of test series plus a seeded random polynomial; the
/// `D1`, `D3` and `D4` chains ride along.
pub fn verify_jeffery_d(n_max: usize) -> VerificationReport {
    assert!(n_max >= 1);
    let mut ck = Checker::new("jeffery-D", format!("1 <= n <= {n_max}, 5 test series"));
    let order = n_max + 3;
    let t = t_triangle(order);
    let sech_half = compose_half_x(&PowerSeries::sech(order));
    let tests: Vec<(&str, PowerSeries)> = vec![
        ("exp", PowerSeries::exp(order)),
        ("cosh", PowerSeries::cosh(order)),
        ("sinh", PowerSeries::sinh(order)),
        ("sech", PowerSeries::sech(order)),
        ("seeded-poly", seeded_polynomial_series(order, n_max, 0x5eca17)),
    ];
    'outer: for (name, f) in &tests {
        let g = f.derivative().mul(&sech_half.truncate(order - 1));
        for n in 1..=n_max {
            let lhs = op_on_factorial(f, n, &t);
            let rhs = op_on_factorial(&g, n - 1, &t);
            if !ck.eq_rat(|| format!("f={name}, n={n}"), &lhs, &rhs) {
                break 'outer;
            }
        }
    }
    // D1: sech(D/2) 0^[2v] == D 0^[2v+1]
    let cosh_half = compose_half_x(&PowerSeries::cosh(order));
    let tanh_half = compose_half_x(&PowerSeries::tanh(order));
    let sech3_half = sech_half.pow(3);
    let sech5_half = sech_half.pow(5);
    let sinh_full = PowerSeries::sinh(order);
    for v in 0..=n_max / 2 {
        let d1_lhs = op_on_factorial(&sech_half, 2 * v, &t);
        let d1_rhs = t.get(2 * v + 1, 1).clone();
        if !ck.eq_rat(|| format!("D1, v={v}"), &d1_lhs, &d1_rhs) {
            break;
        }
        let d3_lhs = op_on_factorial(&sech3_half, 2 * v, &t);
        let d3_mid = rat(2, 1) * op_on_factorial(&tanh_half, 2 * v + 1, &t);
        let d3_rhs = rat(4, 1) * op_on_factorial(&cosh_half, 2 * v + 2, &t);
        if !ck.eq_rat(|| format!("D3 first, v={v}"), &d3_lhs, &d3_mid) {
            break;
        }
        if !ck.eq_rat(|| format!("D3 second, v={v}"), &d3_mid, &d3_rhs) {
            break;
        }
        let d4_lhs = op_on_factorial(&sech5_half, 2 * v, &t);
        let d4_rhs = rat(4, 3) * op_on_factorial(&sinh_full, 2 * v + 3, &t);
        if !ck.eq_rat(|| format!("D4, v={v}"), &d4_lhs, &d4_rhs) {
            break;
        }
    }
    ck.report()
}

/// `sech^(2r+1) x == (s^(r+1) / (r (2r-1)!!)) (d/d sinh x)^(r+1) e^(s r x)`
/// for both signs `s`, compared coefficientwise to the given order. The
/// derivative in `sinh x` is taken by substituting through `asinh`,
/// differentiating, and substituting back.
pub fn verify_ident3(r_max: usize, order: usize) -> VerificationReport {
    assert!(r_max >= 1);
    let mut ck = Checker::new(
        "ident3",
        format!("1 <= r <= {r_max}, both signs, order {order}"),
    );
    'outer: for r in 1..=r_max {
        let big = order + r + 1;
        let asinh = PowerSeries::asinh(big);
        let lhs = PowerSeries::sech(big).pow(2 * r as i64 + 1).truncate(order);
        for sign in [1i64, -1] {
            // e^(sign * r * x) expressed in u = sinh x
            let exp_rx = PowerSeries::from_fn(big, |k| {
                let mut c = rat_int(Int::from(sign * r as i64).pow(k as u32));
                c /= rat_int(factorial(k));
                c
            });
            let mut in_u = exp_rx.compose(&asinh);
            for _ in 0..=r {
                in_u = in_u.derivative();
            }
            // back to x; orders now big - (r+1) >= order
            let back = in_u.compose(&PowerSeries::sinh(in_u.order()));
            let mut scale = Rat::one()
                / (rat(r as i64, 1) * rat_int(double_factorial(2 * r as i64 - 1)));
            if sign < 0 && (r + 1) % 2 == 1 {
                scale = -scale;
            }
            let rhs = back.scale(&scale).truncate(order);
            if !ck.eq_series(|| format!("r={r}, sign={sign:+}"), &lhs, &rhs) {
                break 'outer;
            }
        }
    }
    ck.report()
}

/// `e^{rx} == sum_s 2^s x^[s](r/2) sinh^s x / s!` for integer `r`, both
/// signs, coefficientwise to the given order.
pub fn verify_lonexp(r_bound: i64, order: usize) -> VerificationReport {
    assert!(r_bound >= 0);
    let mut ck = Checker::new(
        "lonexp",
        format!("-{r_bound} <= r <= {r_bound}, order {order}"),
    );
    let sinh = PowerSeries::sinh(order);
    let cf_at_half: Vec<Rat> = (0..=order)
        .map(|s| {
            // 2^s / s! * x^[s], evaluated lazily per r below
            rat_int(Int::one() << s) / rat_int(factorial(s))
        })
        .collect();
    'outer: for r in -r_bound..=r_bound {
        let lhs = PowerSeries::from_fn(order, |k| {
            rat_int(Int::from(r).pow(k as u32)) / rat_int(factorial(k))
        });
        let mut rhs = PowerSeries::zero(order);
        let mut sinh_pow = PowerSeries::one(order);
        for s in 0..=order {
            if s > 0 {
                sinh_pow = sinh_pow.mul(&sinh);
            }
            let coeff =
                &cf_at_half[s] * crate::central::central_factorial_poly(s).eval(&rat(r, 2));
            if !coeff.is_zero() {
                rhs = rhs.add(&sinh_pow.scale(&coeff));
            }
        }
        if !ck.eq_series(|| format!("r={r}"), &lhs, &rhs) {
            break 'outer;
        }
    }
    ck.report()
}

/// The double generating functions, compared coefficient-by-coefficient in
/// both variables:
/// `[x^m y^n] exp(2x asinh(y/2)) == t(n,m)/n!` and
/// `[x^m y^n] exp(2x sinh(y/2)) == T(n,m)/n!`,
/// plus the umbral reciprocity `sum_k T(n,k) t_k(x) == x^n`.
pub fn verify_genfuncs(x_degree: usize, y_order: usize) -> VerificationReport {
    assert!(x_degree >= 1 && y_order >= 1);
    let mut ck = Checker::new(
        "genfuncs",
        format!("x powers <= {x_degree}, y order <= {y_order}"),
    );
    let n_max = x_degree.max(y_order);
    let tables = FactorialTables::build(n_max);
    let xi = compose_half_x(&PowerSeries::asinh(y_order)).scale(&rat(2, 1));
    let dl = compose_half_x(&PowerSeries::sinh(y_order)).scale(&rat(2, 1));
    let mut xi_pow = PowerSeries::one(y_order);
    let mut dl_pow = PowerSeries::one(y_order);
    let mut mfact = Int::one();
    'outer: for m in 0..=x_degree.min(y_order) {
        if m > 0 {
            xi_pow = xi_pow.mul(&xi);
            dl_pow = dl_pow.mul(&dl);
            mfact *= Int::from(m);
        }
        for n in m..=y_order {
            let nfact = rat_int(factorial(n));
            let lhs_t = tables.t(n, m) / &nfact;
            let rhs_t = xi_pow.coeff(n) / rat_int(mfact.clone());
            if !ck.eq_rat(|| format!("first kind, n={n}, m={m}"), &lhs_t, &rhs_t) {
                break 'outer;
            }
            let lhs_t2 = tables.t2(n, m) / &nfact;
            let rhs_t2 = dl_pow.coeff(n) / rat_int(mfact.clone());
            if !ck.eq_rat(|| format!("second kind, n={n}, m={m}"), &lhs_t2, &rhs_t2) {
                break 'outer;
            }
        }
    }
    // reciprocity at the polynomial level: substituting the first-kind
    // family into the second kind reproduces the monomials
    let t_polys: Vec<Polynomial> = (0..=x_degree)
        .map(crate::central::central_factorial_poly)
        .collect();
    for n in 0..=x_degree {
        let mut acc = Polynomial::zero();
        for (k, tp) in t_polys.iter().enumerate().take(n + 1) {
            acc = acc.add(&tp.scale(tables.t2(n, k)));
        }
        if !ck.eq_poly(|| format!("reciprocity, n={n}"), &acc, &Polynomial::monomial(n)) {
            break;
        }
    }
    ck.report()
}

/// Central difference of a polynomial, evaluated symbolically:
/// `delta^n u(x) = sum_j (-1)^j C(n,j) u(x + n/2 - j)`.
fn central_difference_poly(u: &Polynomial, n: usize) -> Polynomial {
    let mut acc = Polynomial::zero();
    for j in 0..=n {
        let shifted = u.shift(&(rat(n as i64, 2) - rat(j as i64, 1)));
        let term = shifted.scale(&rat_int(binomial(n, j)));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Newton-type expansions connecting multiple central differences and
/// multiple derivatives, as polynomial identities on monomials:
/// `delta^n u == sum_m (delta^n 0^m / m!) u^(m)` and
/// `u^(m) == sum_n (xi^m 0^n / n!) delta^n u`.
pub fn verify_newton_expansions(n_max: usize) -> VerificationReport {
    assert!(n_max >= 1);
    let mut ck = Checker::new("newton", format!("monomials x^p, p <= {n_max}"));
    let tables = FactorialTables::build(n_max);
    'outer: for p in 0..=n_max {
        let u = Polynomial::monomial(p);
        let deltas: Vec<Polynomial> = (0..=p).map(|n| central_difference_poly(&u, n)).collect();
        for n in 1..=n_max {
            let lhs = if n <= p {
                deltas[n].clone()
            } else {
                central_difference_poly(&u, n)
            };
            let mut rhs = Polynomial::zero();
            for m in n..=p {
                let w = tables.delta(m, n) / rat_int(factorial(m));
                rhs = rhs.add(&u.nth_derivative(m).scale(&w));
            }
            if !ck.eq_poly(|| format!("differences, p={p}, n={n}"), &lhs, &rhs) {
                break 'outer;
            }
        }
        for m in 1..=p {
            let lhs = u.nth_derivative(m);
            let mut rhs = Polynomial::zero();
            for (n, dn) in deltas.iter().enumerate().take(p + 1).skip(m) {
                // xi^m 0^n = m! t(n, m)
                let w = rat_int(factorial(m)) * tables.t(n, m) / rat_int(factorial(n));
                rhs = rhs.add(&dn.scale(&w));
            }
            if !ck.eq_poly(|| format!("derivatives, p={p}, m={m}"), &lhs, &rhs) {
                break 'outer;
            }
        }
    }
    ck.report()
}

/// The nested inverse-sinh expansion: the series engine's
/// `2 asinh(asinh(x/2))` agrees with the double sum built from the asinh
/// coefficients and the first-kind numbers,
/// `[x^{2k+1}] = sum_j t(2j+1, 1) t(2k+1, 2j+1) / (2k+1)!`.
pub fn verify_nested_asinh(n_max: usize) -> VerificationReport {
    assert!(n_max >= 1);
    let mut ck = Checker::new("nested-asinh", format!("coefficients up to x^{n_max}"));
    let t = t_triangle(n_max);
    let inner = compose_half_x(&PowerSeries::asinh(n_max));
    let lhs = PowerSeries::asinh(n_max).compose(&inner).scale(&rat(2, 1));
    for k in 0..=n_max {
        let expected = if k % 2 == 1 {
            let mut sum = Rat::zero();
            for j in 0..k / 2 + 1 {
                if 2 * j + 1 <= k {
                    sum += t.get(2 * j + 1, 1) * t.get(k, 2 * j + 1);
                }
            }
            sum / rat_int(factorial(k))
        } else {
            Rat::zero()
        };
        if !ck.eq_rat(|| format!("x^{k}"), lhs.coeff(k), &expected) {
            break;
        }
    }
    ck.report()
}

/// Operator bookkeeping sanity: `4 cosh^2(D/2) == 4 + (2 sinh(D/2))^2`
/// coefficientwise.
pub fn verify_mean(order: usize) -> VerificationReport {
    let mut ck = Checker::new("mean", format!("order {order}"));
    let cosh_half = compose_half_x(&PowerSeries::cosh(order));
    let sinh_half2 = compose_half_x(&PowerSeries::sinh(order)).scale(&rat(2, 1));
    let lhs = cosh_half.mul(&cosh_half).scale(&rat(4, 1));
    let rhs = PowerSeries::one(order)
        .scale(&rat(4, 1))
        .add(&sinh_half2.mul(&sinh_half2));
    ck.eq_series(|| "series".into(), &lhs, &rhs);
    ck.report()
}

/// One registered identity check.
pub struct SuiteSpec {
    /// Identity id accepted by `run`.
    pub id: &'static str,
    /// What the default parameter means.
    pub about: &'static str,
    /// Default sweep bound, used when the caller passes none.
    pub default_max: usize,
}

/// Every identity id known to the suite, with its default range.
pub const SUITES: &[SuiteSpec] = &[
    SuiteSpec { id: "SR", about: "sum rule, s <= max", default_max: 50 },
    SuiteSpec { id: "SR1", about: "even sum rule, v <= max", default_max: 50 },
    SuiteSpec { id: "SR2", about: "odd sum rule, v <= max", default_max: 50 },
    SuiteSpec { id: "orthogonality", about: "inverse triangles, n <= max", default_max: 60 },
    SuiteSpec { id: "gees", about: "G against first-kind numbers, r <= max", default_max: 40 },
    SuiteSpec { id: "stern-cross", about: "G/derivative-triangle links, r <= max", default_max: 30 },
    SuiteSpec { id: "jeffery-D", about: "derivation theorem and chains, n <= max", default_max: 20 },
    SuiteSpec { id: "ident3", about: "sech powers as sinh-derivatives, r <= max", default_max: 4 },
    SuiteSpec { id: "lonexp", about: "exp in sinh powers, |r| <= max", default_max: 3 },
    SuiteSpec { id: "genfuncs", about: "double generating functions, degree <= max", default_max: 12 },
    SuiteSpec { id: "newton", about: "Newton-type expansions, p <= max", default_max: 10 },
    SuiteSpec { id: "nested-asinh", about: "nested asinh expansion, order <= max", default_max: 15 },
    SuiteSpec { id: "mean", about: "operator bookkeeping, order = max", default_max: 24 },
];

/// Run one identity check by id (case-insensitive), defaulting the sweep
/// bound. Returns `None` for an unknown id.
pub fn run(id: &str, max: Option<usize>) -> Option<VerificationReport> {
    let spec = SUITES.iter().find(|s| s.id.eq_ignore_ascii_case(id))?;
    let max = max.unwrap_or(spec.default_max);
    Some(match spec.id {
        "SR" => verify_sr(max.max(1)),
        "SR1" => verify_sr1(max),
        "SR2" => verify_sr2(max),
        "orthogonality" => verify_orthogonality(max),
        "gees" => g_from_t_crosscheck(max),
        "stern-cross" => verify_stern_crossids(max),
        "jeffery-D" => verify_jeffery_d(max.max(1)),
        "ident3" => verify_ident3(max.max(1), 20),
        "lonexp" => verify_lonexp(max as i64, 20),
        "genfuncs" => verify_genfuncs(max.max(1), max.max(1)),
        "newton" => verify_newton_expansions(max.max(1)),
        "nested-asinh" => verify_nested_asinh(max.max(1)),
        "mean" => verify_mean(max.max(1)),
        _ => unreachable!(),
    })
}
