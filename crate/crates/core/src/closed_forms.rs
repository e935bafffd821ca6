//! Exact evaluation of the closed formulas and the recurrence for signed
//! composition counts.
//!
//! Naming follows the quantity computed: `b` values are odd-minus-even
//! counts, `a` values are the matching unsigned totals. In every case the
//! composition size is `n + k - 1` (or `n` for the first-kind class).
//! All diophantine sums are evaluated by direct iteration over the bounded
//! index ranges.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{invalid, Result};

/// Binomial coefficient under the combinatorial convention: `C(a, 0) = 1` for
/// every `a` (negative included), and `C(a, b) = 0` when `b < 0`, `b > a >= 0`
/// or `a < 0 < b`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if b == 0 {
        return BigUint::one();
    }
    if b < 0 || a < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::one();
    for t in 0..b {
        acc *= a - t;
        acc /= t + 1;
    }
    acc
}

fn signed(sign_odd: bool, v: BigUint) -> BigInt {
    let v = BigInt::from(v);
    if sign_odd {
        -v
    } else {
        v
    }
}

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, t| acc * t)
}

fn require_positive(name: &str, v: u32) -> Result<()> {
    if v == 0 {
        invalid(format!("{name} must be at least 1"))
    } else {
        Ok(())
    }
}

fn require_rs(r: u32, s: u32) -> Result<()> {
    require_positive("r", r)?;
    if s >= r {
        return invalid(format!("r > s >= 0 is required (got r = {r}, s = {s})"));
    }
    Ok(())
}

/// Odd minus even compositions of `n + k - 1` with all parts at least `k`.
pub fn thm2_b(k: u32, n: u32) -> Result<BigInt> {
    require_positive("k", k)?;
    require_positive("n", n)?;
    let (k, n) = (i64::from(k), i64::from(n));
    let mut acc = BigInt::zero();
    let mut j = 0;
    while j * k < n {
        acc += signed(j % 2 == 1, binomial(n - 1 - j * (k - 1), j));
        j += 1;
    }
    Ok(acc)
}

/// `b_{k,1..=len}` from `b = 1` on `1..=k` and `b_n = b_{n-1} - b_{n-k}` beyond.
pub fn thm2_recurrence(k: u32, len: usize) -> Result<Vec<BigInt>> {
    require_positive("k", k)?;
    let k = k as usize;
    let mut out: Vec<BigInt> = Vec::with_capacity(len);
    for n in 1..=len {
        let v = if n <= k {
            BigInt::one()
        } else {
            &out[n - 2] - &out[n - k - 1]
        };
        out.push(v);
    }
    Ok(out)
}

/// Number of compositions of `n + k - 1` with all parts at least `k`.
pub fn munagi_a(k: u32, n: u32) -> Result<BigUint> {
    require_positive("k", k)?;
    require_positive("n", n)?;
    let (k, n) = (i64::from(k), i64::from(n));
    let mut acc = BigUint::zero();
    let mut j = 0;
    while j * k < n {
        acc += binomial(n - 1 - j * (k - 1), j);
        j += 1;
    }
    Ok(acc)
}

/// Odd minus even compositions of `n + k - 1` whose parts are at least `k`
/// and congruent to `k + s` modulo `r`: the sum of `(-1)^j C(i + j, i)` over
/// `r i + j (k + s) = n - 1 - s`.
///
/// The sum is well defined whether `k` is below, equal to or above `r - s`.
pub fn thm3_b(k: u32, n: u32, r: u32, s: u32) -> Result<BigInt> {
    require_positive("k", k)?;
    require_positive("n", n)?;
    require_rs(r, s)?;
    let target = i64::from(n) - 1 - i64::from(s);
    let step = i64::from(k) + i64::from(s);
    let r = i64::from(r);
    let mut acc = BigInt::zero();
    let mut j = 0;
    while target >= 0 && j * step <= target {
        let rest = target - j * step;
        if rest % r == 0 {
            let i = rest / r;
            acc += signed(j % 2 == 1, binomial(i + j, i));
        }
        j += 1;
    }
    Ok(acc)
}

/// The value of [`thm3_b`] when `k = r - s`: 1 at `n = s + 1`, 0 elsewhere.
pub fn cor_rs_indicator(k: u32, n: u32, r: u32, s: u32) -> Result<BigInt> {
    require_positive("n", n)?;
    require_rs(r, s)?;
    if k != r - s {
        return invalid(format!(
            "k = r - s is required (got k = {k}, r - s = {})",
            r - s
        ));
    }
    Ok(if n == s + 1 {
        BigInt::one()
    } else {
        BigInt::zero()
    })
}

/// The value of [`thm3_b`] when `k = 2r - s`: `(-1)^j` if
/// `n = 3rj + s + 1` or `n = 3rj + r + s + 1`, else 0.
pub fn cor_period_b(k: u32, n: u32, r: u32, s: u32) -> Result<BigInt> {
    require_positive("n", n)?;
    require_rs(r, s)?;
    if u64::from(k) != 2 * u64::from(r) - u64::from(s) {
        return invalid(format!(
            "k = 2r - s is required (got k = {k}, r = {r}, s = {s})"
        ));
    }
    let (n, r, s) = (u64::from(n), u64::from(r), u64::from(s));
    if n < s + 1 {
        return Ok(BigInt::zero());
    }
    let t = n - s - 1;
    let j = t / (3 * r);
    let v = match t % (3 * r) {
        0 => 1,
        x if x == r => 1,
        _ => 0,
    };
    Ok(BigInt::from(if j % 2 == 1 { -v } else { v }))
}

/// A partition fitting in a `height x width` box, i.e. at most `height`
/// parts, each at most `width`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxedPartition {
    parts: Vec<u32>,
    width: u32,
    height: u32,
}

impl BoxedPartition {
    pub fn new(parts: Vec<u32>, width: u32, height: u32) -> Result<Self> {
        if parts.len() > height as usize {
            return invalid(format!(
                "{} parts do not fit in height {height}",
                parts.len()
            ));
        }
        if parts.iter().any(|&p| p == 0 || p > width) {
            return invalid(format!("parts must lie in 1..={width}"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid("parts must be weakly decreasing");
        }
        Ok(BoxedPartition {
            parts,
            width,
            height,
        })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// `[m_0, m_1, ..., m_width]` where `m_i` counts parts equal to `i` and
    /// `m_0` is the number of empty rows.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.width as usize + 1];
        m[0] = self.height - self.parts.len() as u32;
        for &p in &self.parts {
            m[p as usize] += 1;
        }
        m
    }
}

/// All partitions of `size` inside a `height x width` box.
pub fn boxed_partitions(width: u32, height: u32, size: u32) -> Vec<BoxedPartition> {
    let mut out = Vec::new();
    crate::comb::for_each_partition(
        size,
        |p| p <= width,
        false,
        |p| {
            if p.len() <= height as usize {
                out.push(BoxedPartition {
                    parts: p.to_vec(),
                    width,
                    height,
                })
            }
        },
    );
    out
}

/// Monomial symmetric function `m_lambda` evaluated at `height` ones: the
/// multinomial coefficient `height! / (m_0! m_1! ... m_width!)`.
pub fn monomial_specialization(lambda: &BoxedPartition) -> BigUint {
    let denom = lambda
        .multiplicities()
        .iter()
        .fold(BigUint::one(), |acc, &c| acc * factorial(u64::from(c)));
    factorial(u64::from(lambda.height)) / denom
}

fn thm4_lambda(k: u32, n: u32, m: u32, alternating: bool) -> Result<BigInt> {
    if k < 2 {
        return invalid("the box form needs k >= 2");
    }
    require_positive("n", n)?;
    let (ki, ni, mi) = (i64::from(k), i64::from(n), i64::from(m));
    let mut acc = BigInt::zero();
    let budget = ni - (ki + 1) * mi;
    if budget < 0 {
        return Ok(acc);
    }
    for size in 0..=budget {
        let lambdas = boxed_partitions(k - 2, m, size as u32);
        if lambdas.is_empty() {
            continue;
        }
        let weight: BigUint = lambdas.iter().map(monomial_specialization).sum();
        let mut j = 0;
        while j * ki <= budget - size {
            let i = budget - size - j * ki;
            let term = binomial(i, mi) * binomial(i + j - 1, j) * &weight;
            acc += signed(alternating && j % 2 == 1, term);
            j += 1;
        }
    }
    Ok(acc)
}

fn thm4_sum(k: u32, n: u32, m: u32, alternating: bool) -> Result<BigInt> {
    require_positive("k", k)?;
    require_positive("n", n)?;
    let (ki, ni, mi) = (i64::from(k), i64::from(n), i64::from(m));
    let mut acc = BigInt::zero();
    let budget = ni - (ki + 1) * mi;
    if budget < 0 {
        return Ok(acc);
    }
    let mut j = 0;
    while j * ki <= budget {
        for l in 0..=mi {
            let left = budget - j * ki - l * (ki - 1);
            if left < 0 {
                break;
            }
            for h in 0..=left {
                let i = left - h;
                let term = binomial(i, mi)
                    * binomial(i + j - 1, j)
                    * binomial(mi, l)
                    * binomial(mi + h - 1, h);
                let odd_sign = if alternating {
                    (l + j) % 2 == 1
                } else {
                    l % 2 == 1
                };
                acc += signed(odd_sign, term);
            }
        }
        j += 1;
    }
    Ok(acc)
}

/// Odd minus even guarded compositions of `n + k - 1` with exactly `m` small
/// parts, from the sum over partitions in a `m x (k-2)` box. Needs `k >= 2`.
pub fn thm4_b_lambda(k: u32, n: u32, m: u32) -> Result<BigInt> {
    thm4_lambda(k, n, m, true)
}

/// Same quantity as [`thm4_b_lambda`] from the fourfold binomial sum.
pub fn thm4_b_sum(k: u32, n: u32, m: u32) -> Result<BigInt> {
    thm4_sum(k, n, m, true)
}

/// Unsigned count: first-kind compositions of `n`, equivalently guarded
/// compositions of `n + k - 1`, with `m` marked parts.
pub fn thm4_a_lambda(k: u32, n: u32, m: u32) -> Result<BigInt> {
    thm4_lambda(k, n, m, false)
}

pub fn thm4_a_sum(k: u32, n: u32, m: u32) -> Result<BigInt> {
    thm4_sum(k, n, m, false)
}

/// Odd minus even compositions of `n + k - 1` with exactly `m` parts less
/// than `k` (no positional condition).
pub fn thm4bar_b(k: u32, n: u32, m: u32) -> Result<BigInt> {
    require_positive("k", k)?;
    require_positive("n", n)?;
    let (ki, ni, mi) = (i64::from(k), i64::from(n), i64::from(m));
    let mut acc = BigInt::zero();
    // i + j + (k-1)(l + i - m - 1) = n with l <= m <= i; the (k-1) term is
    // at least -(k-1), so i + j <= n + k - 1.
    for i in mi..=ni + ki - 1 {
        for l in 0..=mi {
            let j = ni - i - (ki - 1) * (l + i - mi - 1);
            if j < 0 {
                continue;
            }
            let term = binomial(i + j - 1, j) * binomial(i, mi) * binomial(mi, l);
            acc += signed((i + l + 1) % 2 == 1, term);
        }
    }
    Ok(acc)
}
