//! Named integer sequences produced by the library, for period detection and
//! b-file exchange.

use std::fmt;

use num_bigint::BigInt;

use crate::closed_forms as cf;
use crate::comb::signed_count_distinct;
use crate::error::{invalid, Error, Result};
use crate::partitions as pt;
use crate::seq::IntegerSequence;

/// Parameters a named sequence may read; missing ones are reported.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SeqParams {
    pub k: Option<u32>,
    pub r: Option<u32>,
    pub s: Option<u32>,
    pub m: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedSeq {
    /// `b_{k,n}`, n >= 1.
    Thm2 { k: u32 },
    /// `a_{k,n}`, n >= 1.
    Munagi { k: u32 },
    /// `b^{r,s}_{k,n}`, n >= 1.
    Thm3 { k: u32, r: u32, s: u32 },
    /// `b^{r,s}_{2r-s,n}` from the periodic closed form, n >= 1.
    CorPeriod { r: u32, s: u32 },
    /// `b^{(m)}_{k,n}`, n >= 1.
    Thm4 { k: u32, m: u32 },
    /// `a^{(m)}_{k,n}`, n >= 1.
    Thm4A { k: u32, m: u32 },
    /// `bbar^{(m)}_{k,n}`, n >= 1.
    Thm4Bar { k: u32, m: u32 },
    /// Even minus odd compositions with distinct parts, n >= 0 (A339435).
    DistinctSigned,
    /// Even minus odd partitions into odd parts, n >= 0 (A081360).
    OddPartsSigned,
    /// Even minus odd partitions into distinct parts, n >= 0.
    Legendre,
    /// `b^{(2)}_{2,n}`, candidate for OEIS A281862.
    A281862,
    /// `(-1)^n bbar^{(2)}_{1,n}`, candidate for OEIS A122918.
    A122918,
}

fn need(name: &str, v: Option<u32>) -> Result<u32> {
    v.ok_or_else(|| Error::InvalidParameter(format!("--{name} is required for this sequence")))
}

impl NamedSeq {
    pub const NAMES: [&'static str; 12] = [
        "thm2",
        "munagi",
        "thm3",
        "cor-period",
        "thm4",
        "thm4a",
        "thm4bar",
        "distinct-signed",
        "odd-parts-signed",
        "legendre",
        "a281862",
        "a122918",
    ];

    pub fn from_name(name: &str, p: &SeqParams) -> Result<Self> {
        Ok(match name {
            "thm2" => NamedSeq::Thm2 { k: need("k", p.k)? },
            "munagi" => NamedSeq::Munagi { k: need("k", p.k)? },
            "thm3" => NamedSeq::Thm3 {
                k: need("k", p.k)?,
                r: need("r", p.r)?,
                s: need("s", p.s)?,
            },
            "cor-period" => NamedSeq::CorPeriod {
                r: need("r", p.r)?,
                s: need("s", p.s)?,
            },
            "thm4" => NamedSeq::Thm4 {
                k: need("k", p.k)?,
                m: need("m", p.m)?,
            },
            "thm4a" => NamedSeq::Thm4A {
                k: need("k", p.k)?,
                m: need("m", p.m)?,
            },
            "thm4bar" => NamedSeq::Thm4Bar {
                k: need("k", p.k)?,
                m: need("m", p.m)?,
            },
            "distinct-signed" => NamedSeq::DistinctSigned,
            "odd-parts-signed" => NamedSeq::OddPartsSigned,
            "legendre" => NamedSeq::Legendre,
            "a281862" => NamedSeq::A281862,
            "a122918" => NamedSeq::A122918,
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }

    /// Natural first index: 0 for the partition-style sequences, 1 otherwise.
    pub fn start(&self) -> u32 {
        match self {
            NamedSeq::DistinctSigned | NamedSeq::OddPartsSigned | NamedSeq::Legendre => 0,
            _ => 1,
        }
    }

    pub fn term(&self, n: u32) -> Result<BigInt> {
        match *self {
            NamedSeq::Thm2 { k } => cf::thm2_b(k, n),
            NamedSeq::Munagi { k } => cf::munagi_a(k, n).map(BigInt::from),
            NamedSeq::Thm3 { k, r, s } => cf::thm3_b(k, n, r, s),
            NamedSeq::CorPeriod { r, s } => {
                if s >= r {
                    return invalid(format!("r > s >= 0 is required (got r = {r}, s = {s})"));
                }
                cf::cor_period_b(2 * r - s, n, r, s)
            }
            NamedSeq::Thm4 { k, m } => cf::thm4_b_sum(k, n, m),
            NamedSeq::Thm4A { k, m } => cf::thm4_a_sum(k, n, m),
            NamedSeq::Thm4Bar { k, m } => cf::thm4bar_b(k, n, m),
            NamedSeq::DistinctSigned => Ok(signed_count_distinct(n)),
            NamedSeq::OddPartsSigned => Ok(pt::odd_parts_signed(n)),
            NamedSeq::Legendre => Ok(pt::legendre_diff(n)),
            NamedSeq::A281862 => cf::thm4_b_sum(2, n, 2),
            NamedSeq::A122918 => {
                let v = cf::thm4bar_b(1, n, 2)?;
                Ok(if n % 2 == 1 { -v } else { v })
            }
        }
    }

    /// Terms from the natural start through `max_n`.
    pub fn generate(&self, max_n: u32) -> Result<IntegerSequence> {
        let values = (self.start()..=max_n)
            .map(|n| self.term(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntegerSequence::new(i64::from(self.start()), values))
    }
}

impl fmt::Display for NamedSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedSeq::Thm2 { k } => write!(f, "thm2 k={k}"),
            NamedSeq::Munagi { k } => write!(f, "munagi k={k}"),
            NamedSeq::Thm3 { k, r, s } => write!(f, "thm3 k={k} r={r} s={s}"),
            NamedSeq::CorPeriod { r, s } => write!(f, "cor-period r={r} s={s} k={}", 2 * r - s),
            NamedSeq::Thm4 { k, m } => write!(f, "thm4 k={k} m={m}"),
            NamedSeq::Thm4A { k, m } => write!(f, "thm4a k={k} m={m}"),
            NamedSeq::Thm4Bar { k, m } => write!(f, "thm4bar k={k} m={m}"),
            NamedSeq::DistinctSigned => f.write_str("distinct-signed"),
            NamedSeq::OddPartsSigned => f.write_str("odd-parts-signed"),
            NamedSeq::Legendre => f.write_str("legendre"),
            NamedSeq::A281862 => f.write_str("a281862 (thm4 k=2 m=2)"),
            NamedSeq::A122918 => f.write_str("a122918 ((-1)^n thm4bar k=1 m=2)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_and_generate() {
        let p = SeqParams {
            k: Some(2),
            ..Default::default()
        };
        let s = NamedSeq::from_name("thm2", &p)
            .unwrap()
            .generate(6)
            .unwrap();
        assert_eq!(s, IntegerSequence::from_i64s(1, &[1, 1, 0, -1, -1, 0]));
        assert!(NamedSeq::from_name("thm3", &p).is_err());
        assert!(NamedSeq::from_name("nope", &p).is_err());
        let d = NamedSeq::from_name("distinct-signed", &p)
            .unwrap()
            .generate(6)
            .unwrap();
        assert_eq!(d, IntegerSequence::from_i64s(0, &[1, -1, -1, 1, 1, 3, -3]));
        for name in NamedSeq::NAMES {
            let all = SeqParams {
                k: Some(2),
                r: Some(2),
                s: Some(1),
                m: Some(1),
            };
            assert!(
                NamedSeq::from_name(name, &all).unwrap().generate(5).is_ok(),
                "{name}"
            );
        }
    }
}
