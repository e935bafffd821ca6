//! Part-wise maps that carry the restricted classes onto unrestricted
//! compositions of the same length.
//!
//! Each map checks its precondition on every part and reports the first
//! offending index instead of coercing.

use num_bigint::BigUint;

use crate::closed_forms::binomial;
use crate::comb::Composition;
use crate::error::{invalid, Error, Result};

fn violation(index: usize, part: u32, reason: String) -> Error {
    Error::PartViolation {
        index,
        part,
        reason,
    }
}

/// Subtracts `k - 1` from every part. Parts must be at least `k`.
pub fn thm2_map(c: &Composition, k: u32) -> Result<Composition> {
    if k == 0 {
        return invalid("k must be at least 1");
    }
    let parts = c
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            if p < k {
                Err(violation(i, p, format!("is less than k = {k}")))
            } else {
                Ok(p - (k - 1))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Composition::new(parts)
}

/// Adds `k - 1` to every part.
pub fn thm2_unmap(c: &Composition, k: u32) -> Result<Composition> {
    if k == 0 {
        return invalid("k must be at least 1");
    }
    Composition::new(c.parts().iter().map(|&p| p + (k - 1)).collect())
}

fn check_rs(k: u32, r: u32, s: u32) -> Result<()> {
    if k == 0 || r == 0 || s >= r {
        return invalid(format!(
            "need k >= 1 and r > s >= 0 (got k = {k}, r = {r}, s = {s})"
        ));
    }
    Ok(())
}

/// Sends each part `p` to `(p - (k + s - r)) / r`. Parts must be at least
/// `k` and congruent to `k + s` modulo `r`, i.e. lie in `k+s, k+s+r, ...`.
pub fn thm3_map(c: &Composition, k: u32, r: u32, s: u32) -> Result<Composition> {
    check_rs(k, r, s)?;
    let base = i64::from(k) + i64::from(s) - i64::from(r);
    let parts = c
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let shifted = i64::from(p) - base;
            if p < k || shifted <= 0 || shifted % i64::from(r) != 0 {
                Err(violation(
                    i,
                    p,
                    format!("is not of the form {} + {r}t with t >= 0", k + s),
                ))
            } else {
                Ok((shifted / i64::from(r)) as u32)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Composition::new(parts)
}

/// Inverse of [`thm3_map`]: `q -> r q + k + s - r`.
pub fn thm3_unmap(c: &Composition, k: u32, r: u32, s: u32) -> Result<Composition> {
    check_rs(k, r, s)?;
    Composition::new(c.parts().iter().map(|&q| r * q + k + s - r).collect())
}

/// Compositions of `n` with exactly `length` parts: `C(n - 1, length - 1)`.
pub fn stars_and_bars_count(n: u32, length: u32) -> BigUint {
    if n == 0 || length == 0 {
        return BigUint::from(u32::from(n == 0 && length == 0));
    }
    binomial(i64::from(n) - 1, i64::from(length) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::CompositionClass;

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn thm2_examples() {
        assert_eq!(thm2_map(&comp(&[3, 5]), 3).unwrap(), comp(&[1, 3]));
        let class = CompositionClass::MinPart { k: 2 }.enumerate(5).unwrap();
        let mapped: Vec<Composition> = class.iter().map(|c| thm2_map(c, 2).unwrap()).collect();
        assert_eq!(mapped, vec![comp(&[1, 2]), comp(&[2, 1]), comp(&[4])]);
        let c = comp(&[1, 4, 2]);
        assert_eq!(thm2_map(&c, 1).unwrap(), c);
    }

    #[test]
    fn thm2_rejects_small_part() {
        assert_eq!(
            thm2_map(&comp(&[3, 1, 4]), 2),
            Err(Error::PartViolation {
                index: 1,
                part: 1,
                reason: "is less than k = 2".into()
            })
        );
    }

    #[test]
    fn thm3_examples() {
        assert_eq!(thm3_map(&comp(&[4, 6]), 4, 2, 0).unwrap(), comp(&[1, 2]));
        let c = comp(&[2, 5, 3]);
        assert_eq!(thm3_map(&c, 2, 1, 0).unwrap(), thm2_map(&c, 2).unwrap());
        let class = CompositionClass::MinPartCongruent { k: 4, r: 2, s: 0 }
            .enumerate(10)
            .unwrap();
        let mapped: Vec<Composition> = class
            .iter()
            .map(|c| thm3_map(c, 4, 2, 0).unwrap())
            .collect();
        assert_eq!(mapped, vec![comp(&[1, 2]), comp(&[2, 1]), comp(&[4])]);
        assert_eq!(thm3_unmap(&comp(&[1, 2]), 4, 2, 0).unwrap(), comp(&[4, 6]));
    }

    #[test]
    fn thm3_rejects_congruence_violation() {
        let err = thm3_map(&comp(&[4, 5]), 4, 2, 0).unwrap_err();
        assert!(matches!(
            err,
            Error::PartViolation {
                index: 1,
                part: 5,
                ..
            }
        ));
        // 2 is congruent to k + s = 4 mod 2 but below k
        assert!(thm3_map(&comp(&[2]), 4, 2, 0).is_err());
        assert!(thm3_map(&comp(&[4]), 4, 2, 2).is_err());
    }

    #[test]
    fn stars_and_bars_examples() {
        assert_eq!(stars_and_bars_count(4, 2), 3u32.into());
        assert_eq!(stars_and_bars_count(9, 1), 1u32.into());
        assert_eq!(stars_and_bars_count(6, 3), 10u32.into());
        assert_eq!(stars_and_bars_count(3, 5), 0u32.into());
    }
}
