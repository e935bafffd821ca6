//! Truncated formal power series in one and two variables over the integers,
//! plus the generating functions behind the signed counts.
//!
//! Truncation orders are explicit: a [`TruncatedSeries`] of order `N` holds
//! the coefficients of `x^0..=x^N` and every operation discards higher terms.
//! Binary operations on series of different orders truncate to the smaller.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};

/// Exact integer polynomial; trailing zero coefficients are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `sum of c x^e` over the given `(exponent, coefficient)` terms.
    pub fn from_terms(terms: &[(usize, i64)]) -> Self {
        let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for &(e, c) in terms {
            coeffs[e] += c;
        }
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Quotient and remainder by a divisor whose leading coefficient is ±1.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        let d = divisor
            .degree()
            .ok_or_else(|| Error::InvalidParameter("division by the zero polynomial".into()))?;
        let lead = &divisor.coeffs[d];
        if !lead.abs().is_one() {
            return invalid("divisor must have leading coefficient +1 or -1");
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((IntPolynomial::default(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for e in (d..rem.len()).rev() {
            let q = &rem[e] * lead;
            if q.is_zero() {
                continue;
            }
            for (t, c) in divisor.coeffs.iter().enumerate() {
                rem[e - d + t] -= &q * c;
            }
            quot[e - d] = q;
        }
        Ok((IntPolynomial::new(quot), IntPolynomial::new(rem)))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// The `n`-th cyclotomic polynomial, from `x^n - 1 = prod over d | n`.
pub fn cyclotomic(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return invalid("cyclotomic index must be at least 1");
    }
    let mut p = IntPolynomial::from_terms(&[(0, -1), (n, 1)]);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = p.div_rem(&cyclotomic(d)?)?;
        debug_assert!(r.is_zero());
        p = q;
    }
    Ok(p)
}

/// Power series in `x` known modulo `x^(order + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, order)
    }

    /// `x^e` truncated at `order` (zero when `e > order`).
    pub fn monomial(e: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = BigInt::one();
        }
        s
    }

    /// Pads or truncates `coeffs` to exactly `order + 1` terms.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_poly(p: &IntPolynomial, order: usize) -> Self {
        Self::from_coeffs(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^e`; zero beyond the truncation order.
    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    /// Multiplication by `x^t`.
    pub fn shift(&self, t: usize) -> Self {
        let mut out = Self::zero(self.order());
        for (e, c) in self.coeffs.iter().enumerate() {
            if e + t > self.order() {
                break;
            }
            out.coeffs[e + t] = c.clone();
        }
        out
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|e| f(&self.coeffs[e], &rhs.coeffs[e]))
                .collect(),
        }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncatedSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Expands `numer / denom` to order `order`. The constant term of `denom`
/// must be +1 or -1 so the quotient stays integral.
pub fn expand_rational(
    numer: &IntPolynomial,
    denom: &IntPolynomial,
    order: usize,
) -> Result<TruncatedSeries> {
    let q0 = denom.coeff(0);
    if !q0.abs().is_one() {
        return Err(Error::NonUnitConstant(q0.to_string()));
    }
    let mut c: Vec<BigInt> = Vec::with_capacity(order + 1);
    for t in 0..=order {
        let mut acc = numer.coeff(t);
        for (u, q) in denom.coeffs().iter().enumerate().skip(1).take(t) {
            acc -= q * &c[t - u];
        }
        // q0 is ±1, so dividing is multiplying
        c.push(acc * &q0);
    }
    Ok(TruncatedSeries { coeffs: c })
}

/// `(1 - x) / (1 - x + x^k)`, whose coefficient at `x^(n+k-1)` is `-b_{k,n}`.
pub fn gf_thm2(k: u32, order: usize) -> Result<TruncatedSeries> {
    if k == 0 {
        return invalid("k must be at least 1");
    }
    let num = IntPolynomial::from_terms(&[(0, 1), (1, -1)]);
    let den = IntPolynomial::from_terms(&[(0, 1), (1, -1), (k as usize, 1)]);
    expand_rational(&num, &den, order)
}

/// `(1 - x^r) / (1 - x^r + x^(k+s))`.
pub fn gf_thm3(k: u32, r: u32, s: u32, order: usize) -> Result<TruncatedSeries> {
    if k == 0 || r == 0 || s >= r {
        return invalid(format!(
            "need k >= 1 and r > s >= 0 (got k = {k}, r = {r}, s = {s})"
        ));
    }
    let (k, r, s) = (k as usize, r as usize, s as usize);
    let num = IntPolynomial::from_terms(&[(0, 1), (r, -1)]);
    let den = IntPolynomial::from_terms(&[(0, 1), (r, -1), (k + s, 1)]);
    expand_rational(&num, &den, order)
}

/// Reads off `b_n = -[x^(n+k-1)]` for `n = 1, 2, ...` while in range.
pub fn signed_counts_from_gf(series: &TruncatedSeries, k: u32) -> Vec<BigInt> {
    let first = k as usize;
    (first..=series.order()).map(|e| -series.coeff(e)).collect()
}

/// `(1 - x^(2r)) / (1 + x^(3r))`.
pub fn gf_cor_period(r: u32, order: usize) -> Result<TruncatedSeries> {
    if r == 0 {
        return invalid("r must be at least 1");
    }
    let r = r as usize;
    let num = IntPolynomial::from_terms(&[(0, 1), (2 * r, -1)]);
    let den = IntPolynomial::from_terms(&[(0, 1), (3 * r, 1)]);
    expand_rational(&num, &den, order)
}

/// The same series as [`gf_cor_period`], built as the difference of two
/// alternating sums `sum (-1)^i x^(3ri) - sum (-1)^j x^(2r+3rj)`.
pub fn gf_cor_period_alternating(r: u32, order: usize) -> Result<TruncatedSeries> {
    if r == 0 {
        return invalid("r must be at least 1");
    }
    let r = r as usize;
    let mut s = TruncatedSeries::zero(order);
    let mut i = 0;
    while 3 * r * i <= order {
        s.coeffs[3 * r * i] += if i % 2 == 0 { 1 } else { -1 };
        i += 1;
    }
    let mut j = 0;
    while 2 * r + 3 * r * j <= order {
        s.coeffs[2 * r + 3 * r * j] -= if j % 2 == 0 { 1 } else { -1 };
        j += 1;
    }
    Ok(s)
}

/// `prod_{n=1}^{order} (1 - x^n)` truncated at `order`.
pub fn pentagonal_product(order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order);
    for n in 1..=order {
        // multiply in place by (1 - x^n), high exponents first
        for e in (n..=order).rev() {
            let t = acc.coeffs[e - n].clone();
            acc.coeffs[e] -= t;
        }
    }
    acc
}

/// `1 + sum_{j>=1} (-1)^j (x^(j(3j+1)/2) + x^(j(3j-1)/2))` truncated at `order`.
pub fn pentagonal_rhs(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    let mut j = 1usize;
    while j * (3 * j - 1) / 2 <= order {
        let sign = if j % 2 == 1 { -1 } else { 1 };
        for e in [j * (3 * j - 1) / 2, j * (3 * j + 1) / 2] {
            if e <= order {
                s.coeffs[e] += sign;
            }
        }
        j += 1;
    }
    s
}

/// Outcome of [`cyclotomic_shift_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftReport {
    pub r: u32,
    pub s: u32,
    pub k: u32,
    /// `S * (1 - x^r + x^(2r)) == 1` up to the order, where `S_t = b_{t+s+1}`.
    pub inverse_ok: bool,
    /// Detected `(preperiod, period)` of `b_1..=b_window`.
    pub period: Option<(usize, usize)>,
    pub period_divides_6r: bool,
}

impl ShiftReport {
    pub fn passed(&self) -> bool {
        self.inverse_ok && self.period_divides_6r
    }
}

/// Checks the `k = 2r - s` sequence: shifted so that its first possibly
/// nonzero term `b_{s+1}` sits at `x^0`, its generating series is the inverse
/// of `1 - x^r + x^(2r)`; and `b_1..=b_window` is periodic with a period
/// dividing `6r`.
pub fn cyclotomic_shift_check(r: u32, s: u32, window: usize) -> Result<ShiftReport> {
    if r == 0 || s >= r {
        return invalid(format!("need r > s >= 0 (got r = {r}, s = {s})"));
    }
    let k = 2 * r - s;
    let shifted: Vec<BigInt> = (0..=window)
        .map(|t| crate::closed_forms::cor_period_b(k, (t + s as usize + 1) as u32, r, s))
        .collect::<Result<_>>()?;
    let shifted = TruncatedSeries::from_coeffs(shifted, window);
    let r_us = r as usize;
    let den = TruncatedSeries::from_poly(
        &IntPolynomial::from_terms(&[(0, 1), (r_us, -1), (2 * r_us, 1)]),
        window,
    );
    let inverse_ok = &shifted * &den == TruncatedSeries::one(window);

    let values: Vec<BigInt> = (1..=window)
        .map(|n| crate::closed_forms::cor_period_b(k, n as u32, r, s))
        .collect::<Result<_>>()?;
    let period = crate::seq::IntegerSequence::new(1, values)
        .detect_period()
        .as_pair();
    let period_divides_6r = matches!(period, Some((_, p)) if (6 * r_us).is_multiple_of(p));
    Ok(ShiftReport {
        r,
        s,
        k,
        inverse_ok,
        period,
        period_divides_6r,
    })
}

/// Power series in `x` and `y`, truncated at `x^x_order` and `y^y_order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BivariateSeries {
    /// `coeffs[a][b]` is the coefficient of `x^a y^b`.
    coeffs: Vec<Vec<BigInt>>,
}

impl BivariateSeries {
    pub fn zero(x_order: usize, y_order: usize) -> Self {
        BivariateSeries {
            coeffs: vec![vec![BigInt::zero(); y_order + 1]; x_order + 1],
        }
    }

    pub fn one(x_order: usize, y_order: usize) -> Self {
        let mut s = Self::zero(x_order, y_order);
        s.coeffs[0][0] = BigInt::one();
        s
    }

    /// Sum of `c x^a y^b` over the given `(a, b, c)` terms, truncated.
    pub fn from_terms(terms: &[(usize, usize, i64)], x_order: usize, y_order: usize) -> Self {
        let mut s = Self::zero(x_order, y_order);
        for &(a, b, c) in terms {
            if a <= x_order && b <= y_order {
                s.coeffs[a][b] += c;
            }
        }
        s
    }

    pub fn x_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn y_order(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn coeff(&self, a: usize, b: usize) -> BigInt {
        self.coeffs
            .get(a)
            .and_then(|row| row.get(b))
            .cloned()
            .unwrap_or_default()
    }

    /// Coefficient table, indexed `[x exponent][y exponent]`.
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    /// Multiplication by `x^t`.
    pub fn shift_x(&self, t: usize) -> Self {
        let mut out = Self::zero(self.x_order(), self.y_order());
        for a in 0..=self.x_order() {
            if a + t > self.x_order() {
                break;
            }
            out.coeffs[a + t] = self.coeffs[a].clone();
        }
        out
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let (xn, yn) = (
            self.x_order().min(rhs.x_order()),
            self.y_order().min(rhs.y_order()),
        );
        BivariateSeries {
            coeffs: (0..=xn)
                .map(|a| {
                    (0..=yn)
                        .map(|b| f(&self.coeffs[a][b], &rhs.coeffs[a][b]))
                        .collect()
                })
                .collect(),
        }
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;
    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;
    fn sub(self, rhs: &BivariateSeries) -> BivariateSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;
    fn mul(self, rhs: &BivariateSeries) -> BivariateSeries {
        let (xn, yn) = (
            self.x_order().min(rhs.x_order()),
            self.y_order().min(rhs.y_order()),
        );
        let mut out = BivariateSeries::zero(xn, yn);
        for a1 in 0..=xn {
            for b1 in 0..=yn {
                let c1 = &self.coeffs[a1][b1];
                if c1.is_zero() {
                    continue;
                }
                for a2 in 0..=xn - a1 {
                    for b2 in 0..=yn - b1 {
                        let c2 = &rhs.coeffs[a2][b2];
                        if !c2.is_zero() {
                            out.coeffs[a1 + a2][b1 + b2] += c1 * c2;
                        }
                    }
                }
            }
        }
        out
    }
}

/// `sum_{i>=0} T^i` with `T = (-xy + x^k y - x^k) / (1 - x)`.
///
/// `T` has no constant term, so terms with `i > x_order` vanish. The
/// coefficient of `x^(n+k-1) y^m` is the negated odd-minus-even count of
/// compositions of `n + k - 1` with exactly `m` parts below `k`.
pub fn gf_thm4bar(k: u32, x_order: usize, y_order: usize) -> Result<BivariateSeries> {
    if k == 0 {
        return invalid("k must be at least 1");
    }
    let k = k as usize;
    let numer = BivariateSeries::from_terms(&[(1, 1, -1), (k, 1, 1), (k, 0, -1)], x_order, y_order);
    // dividing by (1 - x) is a prefix sum along x
    let mut t = numer;
    for a in 1..=x_order {
        for b in 0..=y_order {
            let prev = t.coeffs[a - 1][b].clone();
            t.coeffs[a][b] += prev;
        }
    }
    let mut total = BivariateSeries::one(x_order, y_order);
    let mut power = BivariateSeries::one(x_order, y_order);
    for _ in 1..=x_order {
        power = &power * &t;
        total = &total + &power;
    }
    Ok(total)
}

/// `-[x^(n+k-1) y^m]` of [`gf_thm4bar`]; `None` when out of the table.
pub fn thm4bar_from_gf(series: &BivariateSeries, k: u32, n: u32, m: u32) -> Option<BigInt> {
    let a = (n + k - 1) as usize;
    let b = m as usize;
    (a <= series.x_order() && b <= series.y_order()).then(|| -series.coeff(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn geometric_identity() {
        for order in [0, 1, 5, 20] {
            let geo = TruncatedSeries::from_coeffs(vec![BigInt::one(); order + 1], order);
            let one_minus_x =
                TruncatedSeries::from_poly(&IntPolynomial::from_i64s(&[1, -1]), order);
            assert_eq!(&one_minus_x * &geo, TruncatedSeries::one(order));
        }
    }

    #[test]
    fn shift_and_truncation() {
        let s = TruncatedSeries::one(6).shift(3);
        assert_eq!(s.coeffs(), ints(&[0, 0, 0, 1, 0, 0, 0]).as_slice());
        let x_n = TruncatedSeries::monomial(6, 6);
        let x = TruncatedSeries::monomial(1, 6);
        assert_eq!(&x_n * &x, TruncatedSeries::zero(6));
        assert_eq!(TruncatedSeries::one(3).shift(4), TruncatedSeries::zero(3));
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let a = TruncatedSeries::one(5);
        let b = TruncatedSeries::one(2);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a * &b).order(), 2);
    }

    #[test]
    fn rational_examples() {
        let s = expand_rational(
            &IntPolynomial::from_i64s(&[1, -1]),
            &IntPolynomial::from_i64s(&[1, -1, 1]),
            7,
        )
        .unwrap();
        assert_eq!(s.coeffs(), ints(&[1, 0, -1, -1, 0, 1, 1, 0]).as_slice());
        let s = expand_rational(
            &IntPolynomial::from_i64s(&[1]),
            &IntPolynomial::from_i64s(&[1, -1]),
            4,
        )
        .unwrap();
        assert_eq!(s.coeffs(), ints(&[1, 1, 1, 1, 1]).as_slice());
        let s = expand_rational(
            &IntPolynomial::from_i64s(&[1]),
            &IntPolynomial::from_i64s(&[-1, 1]),
            3,
        )
        .unwrap();
        assert_eq!(s.coeffs(), ints(&[-1, -1, -1, -1]).as_slice());
        let err = expand_rational(
            &IntPolynomial::from_i64s(&[1]),
            &IntPolynomial::from_i64s(&[2, 1]),
            3,
        );
        assert_eq!(err, Err(Error::NonUnitConstant("2".into())));
        assert!(expand_rational(
            &IntPolynomial::from_i64s(&[1]),
            &IntPolynomial::default(),
            3
        )
        .is_err());
    }

    #[test]
    fn k_equals_r_minus_s_collapses() {
        for r in 1..=5u32 {
            for s in 0..r {
                let got = gf_thm3(r - s, r, s, 40).unwrap();
                let want = TruncatedSeries::from_poly(
                    &IntPolynomial::from_terms(&[(0, 1), (r as usize, -1)]),
                    40,
                );
                assert_eq!(got, want, "r={r} s={s}");
            }
        }
    }

    #[test]
    fn thm3_gf_reduces_to_thm2() {
        assert_eq!(gf_thm3(2, 1, 0, 30).unwrap(), gf_thm2(2, 30).unwrap());
    }

    #[test]
    fn cor_period_series() {
        let s = gf_cor_period(1, 8).unwrap();
        assert_eq!(s.coeffs(), ints(&[1, 0, -1, -1, 0, 1, 1, 0, -1]).as_slice());
        for r in 1..=4 {
            let s = gf_cor_period(r, 50).unwrap();
            assert_eq!(s, gf_cor_period_alternating(r, 50).unwrap());
            let den = TruncatedSeries::from_poly(
                &IntPolynomial::from_terms(&[(0, 1), (3 * r as usize, 1)]),
                50,
            );
            let num = TruncatedSeries::from_poly(
                &IntPolynomial::from_terms(&[(0, 1), (2 * r as usize, -1)]),
                50,
            );
            assert_eq!(&s * &den, num);
        }
        assert_eq!(gf_cor_period(2, 10).unwrap().coeff(4), BigInt::from(-1));
    }

    #[test]
    fn pentagonal_examples() {
        assert_eq!(
            pentagonal_product(7).coeffs(),
            ints(&[1, -1, -1, 0, 0, 1, 0, 1]).as_slice()
        );
        assert_eq!(pentagonal_product(20).coeff(12), BigInt::from(-1));
        assert_eq!(pentagonal_product(20).coeff(4), BigInt::zero());
        assert_eq!(pentagonal_product(100), pentagonal_rhs(100));
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1).unwrap(), IntPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(
            cyclotomic(6).unwrap(),
            IntPolynomial::from_i64s(&[1, -1, 1])
        );
        for r in [1usize, 2, 3, 4, 6, 8, 9] {
            let want = IntPolynomial::from_terms(&[(0, 1), (r, -1), (2 * r, 1)]);
            assert_eq!(cyclotomic(6 * r).unwrap(), want, "r = {r}");
        }
        // 30 = 6 * 5 has the prime 5, so the degree is phi(30) = 8, not 10
        assert_eq!(cyclotomic(30).unwrap().degree(), Some(8));
    }

    #[test]
    fn shift_check_examples() {
        for (r, window, period) in [(1, 30, 6), (2, 60, 12), (3, 90, 18)] {
            let rep = cyclotomic_shift_check(r, 0, window).unwrap();
            assert!(rep.passed(), "{rep:?}");
            assert_eq!(rep.period, Some((0, period)));
        }
    }

    #[test]
    fn bivariate_thm4bar_examples() {
        let g = gf_thm4bar(2, 12, 3).unwrap();
        assert_eq!(g.coeff(0, 0), BigInt::one());
        assert_eq!(thm4bar_from_gf(&g, 2, 2, 1), Some(BigInt::from(-2)));
        assert_eq!(thm4bar_from_gf(&g, 2, 20, 1), None);
    }

    #[test]
    fn bivariate_ops() {
        let x = BivariateSeries::from_terms(&[(1, 0, 1)], 4, 2);
        let y = BivariateSeries::from_terms(&[(0, 1, 1)], 4, 2);
        let xy = &x * &y;
        assert_eq!(xy.coeff(1, 1), BigInt::one());
        assert_eq!((&xy - &xy), BivariateSeries::zero(4, 2));
        assert_eq!(x.shift_x(3).coeff(4, 0), BigInt::one());
        let yyy = &(&y * &y) * &y;
        assert_eq!(yyy, BivariateSeries::zero(4, 2));
    }
}
