//! Compositions, partitions, part-restriction classes and exhaustive
//! enumeration with length-parity counting.
//!
//! Everything else in the crate is checked against the enumerators here, so
//! they are written to be obviously correct rather than fast: a depth-first
//! walk that places one part at a time and prunes prefixes that can no longer
//! complete to a member of the class.
//!
//! # The guarded class
//!
//! [`CompositionClass::ExactSmallGuarded`] has exactly `m` parts below `k`,
//! and each such small part
//!
//! * is not the first part, and its predecessor is at least `k`;
//! * has a successor, and that successor is either the final part of the
//!   composition or is strictly greater than `k`.
//!
//! The phrase "followed by either the last part or a part greater than k"
//! admits a second reading in which the small part may itself be last. That
//! reading breaks the equality with [`CompositionClass::FirstKind`] already at
//! `k = 2, m = 1`, size 4, so it is not used.

use std::fmt;

use num_bigint::{BigInt, BigUint};

use crate::error::{invalid, Error, Result};

/// An ordered list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::PartViolation {
                index,
                part: 0,
                reason: "is not positive".into(),
            });
        }
        Ok(Composition { parts })
    }

    /// The composition with no parts.
    pub fn empty() -> Self {
        Composition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.parts.len() % 2 == 1
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::PartViolation {
                index,
                part: 0,
                reason: "is not positive".into(),
            });
        }
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::PartViolation {
                index: index + 1,
                part: parts[index + 1],
                reason: "exceeds the preceding part".into(),
            });
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(value, multiplicity)` pairs in decreasing order of value.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// A family of compositions defined by restrictions on the parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompositionClass {
    All,
    /// Every part is at least `k`.
    MinPart {
        k: u32,
    },
    /// Every part is at least `k` and congruent to `k + s` modulo `r`.
    MinPartCongruent {
        k: u32,
        r: u32,
        s: u32,
    },
    DistinctParts,
    OddParts,
    /// Exactly `m` parts are less than `k`, anywhere.
    ExactSmall {
        k: u32,
        m: u32,
    },
    /// Exactly `m` parts are less than `k`, each guarded (see module docs).
    ExactSmallGuarded {
        k: u32,
        m: u32,
    },
    /// Exactly `m` parts are not congruent to 1 modulo `k`, each greater than `k`.
    FirstKind {
        k: u32,
        m: u32,
    },
}

impl CompositionClass {
    pub fn validate(&self) -> Result<()> {
        use CompositionClass::*;
        match *self {
            All | DistinctParts | OddParts => Ok(()),
            MinPart { k }
            | ExactSmall { k, .. }
            | ExactSmallGuarded { k, .. }
            | FirstKind { k, .. } => {
                if k == 0 {
                    invalid("k must be at least 1")
                } else {
                    Ok(())
                }
            }
            MinPartCongruent { k, r, s } => {
                if k == 0 {
                    invalid("k must be at least 1")
                } else if r == 0 {
                    invalid("r must be at least 1")
                } else if s >= r {
                    invalid(format!("s must satisfy 0 <= s < r (got s = {s}, r = {r})"))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Membership test on a whole part list, independent of the enumerator.
    pub fn contains(&self, parts: &[u32]) -> bool {
        use CompositionClass::*;
        if parts.contains(&0) {
            return false;
        }
        match *self {
            All => true,
            MinPart { k } => parts.iter().all(|&p| p >= k),
            MinPartCongruent { k, r, s } => parts.iter().all(|&p| {
                p >= k
                    && u64::from(p) % u64::from(r) == (u64::from(k) + u64::from(s)) % u64::from(r)
            }),
            DistinctParts => {
                let mut seen = parts.to_vec();
                seen.sort_unstable();
                seen.windows(2).all(|w| w[0] != w[1])
            }
            OddParts => parts.iter().all(|p| p % 2 == 1),
            ExactSmall { k, m } => parts.iter().filter(|&&p| p < k).count() == m as usize,
            ExactSmallGuarded { k, m } => {
                let small: Vec<usize> = (0..parts.len()).filter(|&i| parts[i] < k).collect();
                small.len() == m as usize
                    && small.iter().all(|&i| {
                        i > 0
                            && parts[i - 1] >= k
                            && i + 1 < parts.len()
                            && (i + 2 == parts.len() || parts[i + 1] > k)
                    })
            }
            FirstKind { k, m } => {
                let failing: Vec<u32> = parts
                    .iter()
                    .copied()
                    .filter(|&p| (p - 1) % k != 0)
                    .collect();
                failing.len() == m as usize && failing.iter().all(|&p| p > k)
            }
        }
    }

    /// Calls `visit` on every composition of `n` in the class, in
    /// lexicographic order of part lists.
    pub fn for_each<F: FnMut(&[u32])>(&self, n: u32, mut visit: F) -> Result<()> {
        self.validate()?;
        let mut walk = Walk {
            class: *self,
            buf: Vec::new(),
            used: vec![false; n as usize + 1],
            small: 0,
        };
        walk.descend(n, &mut visit);
        Ok(())
    }

    pub fn enumerate(&self, n: u32) -> Result<Vec<Composition>> {
        let mut out = Vec::new();
        self.for_each(n, |p| out.push(Composition { parts: p.to_vec() }))?;
        Ok(out)
    }

    pub fn count(&self, n: u32) -> Result<BigUint> {
        let mut c = 0u64;
        self.for_each(n, |_| c += 1)?;
        Ok(BigUint::from(c))
    }

    pub fn signed_count(&self, n: u32) -> Result<SignedCount> {
        let (mut odd, mut even) = (0u64, 0u64);
        self.for_each(n, |p| {
            if p.len() % 2 == 1 {
                odd += 1
            } else {
                even += 1
            }
        })?;
        Ok(SignedCount::new(odd.into(), even.into()))
    }
}

struct Walk {
    class: CompositionClass,
    buf: Vec<u32>,
    used: Vec<bool>,
    small: u32,
}

impl Walk {
    fn descend<F: FnMut(&[u32])>(&mut self, rem: u32, visit: &mut F) {
        use CompositionClass::*;
        if rem == 0 {
            let complete = match self.class {
                ExactSmall { m, .. } | ExactSmallGuarded { m, .. } | FirstKind { m, .. } => {
                    self.small == m
                }
                _ => true,
            };
            if complete {
                visit(&self.buf);
            }
            return;
        }
        for p in 1..=rem {
            let after = rem - p;
            let mut counts_small = false;
            let ok = match self.class {
                All => true,
                MinPart { k } => p >= k && (after == 0 || after >= k),
                MinPartCongruent { k, r, s } => {
                    p >= k + s && (p - k - s) % r == 0 && (after == 0 || after >= k + s)
                }
                DistinctParts => !self.used[p as usize],
                OddParts => p % 2 == 1,
                ExactSmall { k, m } => {
                    counts_small = p < k;
                    !counts_small || self.small < m
                }
                ExactSmallGuarded { k, m } => {
                    let prev = self.buf.last().copied();
                    let after_small = matches!(prev, Some(q) if q < k);
                    counts_small = p < k;
                    let guard_ok = !counts_small
                        || (self.small < m && matches!(prev, Some(q) if q >= k) && after > 0);
                    let successor_ok = !after_small || after == 0 || p > k;
                    guard_ok && successor_ok
                }
                FirstKind { k, m } => {
                    counts_small = (p - 1) % k != 0;
                    !counts_small || (p > k && self.small < m)
                }
            };
            if !ok {
                continue;
            }
            self.buf.push(p);
            if counts_small {
                self.small += 1;
            }
            if self.class == DistinctParts {
                self.used[p as usize] = true;
            }
            self.descend(after, visit);
            if self.class == DistinctParts {
                self.used[p as usize] = false;
            }
            if counts_small {
                self.small -= 1;
            }
            self.buf.pop();
        }
    }
}

/// Odd-length and even-length counts of a finite family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedCount {
    pub odd: BigUint,
    pub even: BigUint,
    /// `odd - even`.
    pub diff: BigInt,
}

impl SignedCount {
    pub fn new(odd: BigUint, even: BigUint) -> Self {
        let diff = BigInt::from(odd.clone()) - BigInt::from(even.clone());
        SignedCount { odd, even, diff }
    }

    pub fn total(&self) -> BigUint {
        &self.odd + &self.even
    }

    pub fn even_minus_odd(&self) -> BigInt {
        -self.diff.clone()
    }
}

impl fmt::Display for SignedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "odd={} even={} diff={}", self.odd, self.even, self.diff)
    }
}

pub fn enumerate_compositions(n: u32, class: CompositionClass) -> Result<Vec<Composition>> {
    class.enumerate(n)
}

/// Odd minus even over the compositions of `n` in `class`.
pub fn signed_count(n: u32, class: CompositionClass) -> Result<SignedCount> {
    class.signed_count(n)
}

/// Even minus odd over compositions of `n` with distinct parts (OEIS A339435,
/// offset 0).
pub fn signed_count_distinct(n: u32) -> BigInt {
    CompositionClass::DistinctParts
        .signed_count(n)
        .expect("DistinctParts has no parameters")
        .even_minus_odd()
}

/// Visits partitions of `n` in lexicographically decreasing order, using only
/// parts accepted by `allowed`; with `distinct` set no part repeats.
pub fn for_each_partition<A, F>(n: u32, allowed: A, distinct: bool, mut visit: F)
where
    A: Fn(u32) -> bool,
    F: FnMut(&[u32]),
{
    fn go<A: Fn(u32) -> bool, F: FnMut(&[u32])>(
        rem: u32,
        max: u32,
        allowed: &A,
        distinct: bool,
        buf: &mut Vec<u32>,
        visit: &mut F,
    ) {
        if rem == 0 {
            visit(buf);
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            if !allowed(p) {
                continue;
            }
            buf.push(p);
            let next_max = if distinct { p - 1 } else { p };
            go(rem - p, next_max, allowed, distinct, buf, visit);
            buf.pop();
        }
    }
    let mut buf = Vec::new();
    go(n, n, &allowed, distinct, &mut buf, &mut visit);
}
