//! Partition classes and the classical partition identities, each checked as
//! an enumeration against a closed form or against a second enumeration.
//!
//! Differences here are even minus odd (the partition convention), unlike
//! the composition side which reports odd minus even.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::comb::{for_each_partition, Partition};
use crate::error::{invalid, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionClass {
    All,
    DistinctParts,
    OddParts,
    /// Distinct parts, each congruent modulo `modulus` to one of `residues`.
    DistinctInResidues {
        modulus: u32,
        residues: BTreeSet<u32>,
    },
    /// No part occurs `bound` or more times.
    MaxMultiplicity {
        bound: u32,
    },
    NoPartDivisibleBy {
        k: u32,
    },
    /// Exactly `m` distinct part values occur `k` or more times.
    FranklinRepeated {
        k: u32,
        m: u32,
    },
    /// Exactly `m` distinct part values are divisible by `k`.
    FranklinDivisible {
        k: u32,
        m: u32,
    },
    /// Whenever some value `j` occurs at least `k` times, every positive
    /// integer below `j` also occurs at least `k` times.
    InitialKReps {
        k: u32,
    },
    /// Initial 2-repetitions with exactly `m` distinct part values.
    InitialTwoRepsWithMarks {
        m: u32,
    },
}

impl PartitionClass {
    pub fn validate(&self) -> Result<()> {
        use PartitionClass::*;
        match self {
            DistinctInResidues { modulus, residues } => {
                if *modulus == 0 {
                    invalid("modulus must be at least 1")
                } else if residues.iter().any(|r| r >= modulus) {
                    invalid("residues must be below the modulus")
                } else {
                    Ok(())
                }
            }
            MaxMultiplicity { bound: v }
            | NoPartDivisibleBy { k: v }
            | FranklinRepeated { k: v, .. }
            | FranklinDivisible { k: v, .. }
            | InitialKReps { k: v } => {
                if *v == 0 {
                    invalid("parameter must be at least 1")
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    fn part_allowed(&self, p: u32) -> bool {
        use PartitionClass::*;
        match self {
            OddParts => p % 2 == 1,
            DistinctInResidues { modulus, residues } => residues.contains(&(p % modulus)),
            NoPartDivisibleBy { k } => !p.is_multiple_of(*k),
            _ => true,
        }
    }

    fn distinct(&self) -> bool {
        matches!(
            self,
            PartitionClass::DistinctParts | PartitionClass::DistinctInResidues { .. }
        )
    }

    /// Membership on a weakly decreasing part list.
    pub fn contains(&self, parts: &[u32]) -> bool {
        use PartitionClass::*;
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        if !parts.iter().all(|&p| self.part_allowed(p)) {
            return false;
        }
        let mult = multiplicities(parts);
        match self {
            All | OddParts | NoPartDivisibleBy { .. } => true,
            DistinctParts | DistinctInResidues { .. } => mult.iter().all(|&(_, c)| c == 1),
            MaxMultiplicity { bound } => mult.iter().all(|&(_, c)| c < *bound as usize),
            FranklinRepeated { k, m } => {
                mult.iter().filter(|&&(_, c)| c >= *k as usize).count() == *m as usize
            }
            FranklinDivisible { k, m } => {
                mult.iter().filter(|&&(v, _)| v % k == 0).count() == *m as usize
            }
            InitialKReps { k } => has_initial_reps(&mult, *k),
            InitialTwoRepsWithMarks { m } => {
                mult.len() == *m as usize && has_initial_reps(&mult, 2)
            }
        }
    }

    pub fn for_each<F: FnMut(&[u32])>(&self, n: u32, mut visit: F) -> Result<()> {
        self.validate()?;
        for_each_partition(
            n,
            |p| self.part_allowed(p),
            self.distinct(),
            |p| {
                if self.contains(p) {
                    visit(p)
                }
            },
        );
        Ok(())
    }

    pub fn count(&self, n: u32) -> Result<BigUint> {
        let mut c = 0u64;
        self.for_each(n, |_| c += 1)?;
        Ok(c.into())
    }

    /// Even-length minus odd-length members.
    pub fn even_minus_odd(&self, n: u32) -> Result<BigInt> {
        let mut d = 0i64;
        self.for_each(n, |p| d += if p.len() % 2 == 0 { 1 } else { -1 })?;
        Ok(d.into())
    }
}

/// `(value, multiplicity)` pairs of a weakly decreasing list.
fn multiplicities(parts: &[u32]) -> Vec<(u32, usize)> {
    let mut out: Vec<(u32, usize)> = Vec::new();
    for &p in parts {
        match out.last_mut() {
            Some((v, c)) if *v == p => *c += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

fn has_initial_reps(mult: &[(u32, usize)], k: u32) -> bool {
    let k = k as usize;
    let Some(top) = mult.iter().filter(|&&(_, c)| c >= k).map(|&(v, _)| v).max() else {
        return true;
    };
    (1..top).all(|v| mult.iter().any(|&(w, c)| w == v && c >= k))
}

/// Partitions of `n` in `class`, in lexicographically decreasing order.
pub fn enumerate_partitions(n: u32, class: &PartitionClass) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    class.for_each(n, |p| {
        out.push(Partition::new(p.to_vec()).expect("walker yields partitions"))
    })?;
    Ok(out)
}

fn sign(j: u64) -> BigInt {
    if j.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `(-1)^j` if `n = j(a j - 1)/d` or `n = j(a j + 1)/d` for some `j >= 0`,
/// else 0. Covers Legendre (`a = 3, d = 2`) and both Nyirenda families.
fn quadratic_indicator(n: u64, a: u64, d: u64) -> BigInt {
    let mut j = 0u64;
    loop {
        let lo = j * (a * j).saturating_sub(1) / d;
        if lo > n {
            return BigInt::zero();
        }
        if lo == n || j * (a * j + 1) / d == n {
            return sign(j);
        }
        j += 1;
    }
}

/// Even minus odd partitions of `n` into distinct parts.
pub fn legendre_diff(n: u32) -> BigInt {
    PartitionClass::DistinctParts
        .even_minus_odd(n)
        .expect("no parameters")
}

/// `(-1)^j` if `n = j(3j ± 1)/2`, else 0.
pub fn legendre_closed(n: u32) -> BigInt {
    quadratic_indicator(n.into(), 3, 2)
}

/// `(distinct-part count, odd-part count, equal)`.
pub fn euler_distinct_odd(n: u32) -> (BigUint, BigUint, bool) {
    let d = PartitionClass::DistinctParts
        .count(n)
        .expect("no parameters");
    let o = PartitionClass::OddParts.count(n).expect("no parameters");
    let eq = d == o;
    (d, o, eq)
}

/// Even minus odd partitions of `n` into odd parts (OEIS A081360).
pub fn odd_parts_signed(n: u32) -> BigInt {
    PartitionClass::OddParts
        .even_minus_odd(n)
        .expect("no parameters")
}

/// `(no part k or more times, no part divisible by k, equal)`.
pub fn glaisher_check(n: u32, k: u32) -> Result<(BigUint, BigUint, bool)> {
    let a = PartitionClass::MaxMultiplicity { bound: k }.count(n)?;
    let b = PartitionClass::NoPartDivisibleBy { k }.count(n)?;
    let eq = a == b;
    Ok((a, b, eq))
}

/// `(m values repeated k or more times, m values divisible by k, equal)`.
pub fn franklin_check(n: u32, k: u32, m: u32) -> Result<(BigUint, BigUint, bool)> {
    let a = PartitionClass::FranklinRepeated { k, m }.count(n)?;
    let b = PartitionClass::FranklinDivisible { k, m }.count(n)?;
    let eq = a == b;
    Ok((a, b, eq))
}

/// Enumerated difference, closed form, and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffCheck {
    pub diff: BigInt,
    pub closed_form: BigInt,
    pub equal: bool,
}

impl DiffCheck {
    fn new(diff: BigInt, closed_form: BigInt) -> Self {
        let equal = diff == closed_form;
        DiffCheck {
            diff,
            closed_form,
            equal,
        }
    }
}

/// Distinct parts congruent to `0` or `2r ± 1` modulo `4r`; closed form
/// `(-1)^j` at `n = j(2rj ± 1)`.
pub fn nyirenda_d(n: u32, r: u32) -> Result<DiffCheck> {
    if r == 0 {
        return invalid("r must be at least 1");
    }
    let class = PartitionClass::DistinctInResidues {
        modulus: 4 * r,
        residues: [0, 2 * r - 1, 2 * r + 1].into_iter().collect(),
    };
    let diff = class.even_minus_odd(n)?;
    Ok(DiffCheck::new(
        diff,
        quadratic_indicator(n.into(), 2 * u64::from(r), 1),
    ))
}

/// Distinct parts congruent to `0` or `±r` modulo `2r + 1`; closed form
/// `(-1)^j` at `n = j((2r+1)j ± 1)/2`.
pub fn nyirenda_c(n: u32, r: u32) -> Result<DiffCheck> {
    if r == 0 {
        return invalid("r must be at least 1");
    }
    let class = PartitionClass::DistinctInResidues {
        modulus: 2 * r + 1,
        residues: [0, r, r + 1].into_iter().collect(),
    };
    let diff = class.even_minus_odd(n)?;
    Ok(DiffCheck::new(
        diff,
        quadratic_indicator(n.into(), 2 * u64::from(r) + 1, 2),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AndrewsCounts {
    pub initial_k_reps: BigUint,
    pub indivisible_by_2k: BigUint,
    pub multiplicity_below_2k: BigUint,
    pub all_equal: bool,
}

pub fn andrews_counts(n: u32, k: u32) -> Result<AndrewsCounts> {
    let a = PartitionClass::InitialKReps { k }.count(n)?;
    let b = PartitionClass::NoPartDivisibleBy { k: 2 * k }.count(n)?;
    let c = PartitionClass::MaxMultiplicity { bound: 2 * k }.count(n)?;
    let all_equal = a == b && b == c;
    Ok(AndrewsCounts {
        initial_k_reps: a,
        indivisible_by_2k: b,
        multiplicity_below_2k: c,
        all_equal,
    })
}

/// `D_e(m, n) - D_o(m, n)`: partitions of `n` with initial 2-repetitions and
/// `m` distinct values, signed by the parity of the number of values with
/// multiplicity one. Closed form `(-1)^m` iff `n = m(m+1)/2`.
pub fn andrews_d_diff(n: u32, m: u32) -> DiffCheck {
    let mut d = 0i64;
    PartitionClass::InitialTwoRepsWithMarks { m }
        .for_each(n, |p| {
            let singles = multiplicities(p).iter().filter(|&&(_, c)| c == 1).count();
            d += if singles % 2 == 0 { 1 } else { -1 };
        })
        .expect("no parameter constraints");
    let (n64, m64) = (u64::from(n), u64::from(m));
    let closed = if n64 == m64 * (m64 + 1) / 2 {
        sign(m64)
    } else {
        BigInt::zero()
    };
    DiffCheck::new(d.into(), closed)
}
