//! Offset-indexed integer sequences: period detection, OEIS b-file reading
//! and writing, and comparison against reference data.
//!
//! The b-file format is one `index value` pair per line, a single space
//! between them, LF line endings, no trailing whitespace. Lines starting with
//! `#` are comments and blank lines are skipped when parsing.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Result of [`IntegerSequence::detect_period`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Periodicity {
    Periodic {
        preperiod: usize,
        period: usize,
    },
    /// No admissible `(preperiod, period)` fits the window.
    Aperiodic,
}

impl Periodicity {
    pub fn as_pair(self) -> Option<(usize, usize)> {
        match self {
            Periodicity::Periodic { preperiod, period } => Some((preperiod, period)),
            Periodicity::Aperiodic => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerSequence {
    /// Index of `values[0]`.
    pub offset: i64,
    pub values: Vec<BigInt>,
    /// Optional `(preperiod, period)` claim, see [`IntegerSequence::verify_period`].
    pub period: Option<(usize, usize)>,
}

impl IntegerSequence {
    pub fn new(offset: i64, values: Vec<BigInt>) -> Self {
        IntegerSequence {
            offset,
            values,
            period: None,
        }
    }

    pub fn from_i64s(offset: i64, values: &[i64]) -> Self {
        Self::new(offset, values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Last index, or `offset - 1` when empty.
    pub fn last_index(&self) -> i64 {
        self.offset + self.values.len() as i64 - 1
    }

    pub fn get(&self, index: i64) -> Option<&BigInt> {
        let i = usize::try_from(index - self.offset).ok()?;
        self.values.get(i)
    }

    /// Attaches a period claim after checking it against the values.
    pub fn with_period(mut self, preperiod: usize, period: usize) -> Result<Self> {
        if !self.fits(preperiod, period) {
            return Err(Error::InvalidParameter(format!(
                "values are not periodic with preperiod {preperiod} and period {period}"
            )));
        }
        self.period = Some((preperiod, period));
        Ok(self)
    }

    /// True when the attached period claim (if any) holds on every value.
    pub fn verify_period(&self) -> bool {
        self.period.is_none_or(|(pre, p)| self.fits(pre, p))
    }

    /// `values[i] == values[i + period]` for every `i >= preperiod` in the
    /// window, with at least two full periods after the preperiod.
    pub fn fits(&self, preperiod: usize, period: usize) -> bool {
        period >= 1
            && preperiod + 2 * period <= self.values.len()
            && (preperiod..self.values.len() - period)
                .all(|i| self.values[i] == self.values[i + period])
    }

    /// Smallest period, then smallest preperiod for it, among pairs with
    /// `period <= len / 2`, `preperiod <= len / 2` and at least two full
    /// periods observed after the preperiod.
    pub fn detect_period(&self) -> Periodicity {
        let len = self.values.len();
        for period in 1..=len / 2 {
            for preperiod in 0..=(len / 2).min(len - 2 * period) {
                if self.fits(preperiod, period) {
                    return Periodicity::Periodic { preperiod, period };
                }
            }
        }
        Periodicity::Aperiodic
    }
}

/// Parsed b-file: consecutive `(index, value)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BFileRecord {
    pub entries: Vec<(i64, BigInt)>,
}

impl BFileRecord {
    pub fn first_index(&self) -> Option<i64> {
        self.entries.first().map(|e| e.0)
    }

    pub fn last_index(&self) -> Option<i64> {
        self.entries.last().map(|e| e.0)
    }

    pub fn to_sequence(&self) -> IntegerSequence {
        IntegerSequence::new(
            self.first_index().unwrap_or(0),
            self.entries.iter().map(|e| e.1.clone()).collect(),
        )
    }
}

pub fn parse_bfile(text: &str) -> Result<BFileRecord> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::BFileParse {
                line: line_no,
                message: format!("expected `index value`, got `{line}`"),
            });
        };
        let index: i64 = idx.parse().map_err(|_| Error::BFileParse {
            line: line_no,
            message: format!("bad index `{idx}`"),
        })?;
        let value: BigInt = val.parse().map_err(|_| Error::BFileParse {
            line: line_no,
            message: format!("bad value `{val}`"),
        })?;
        if let Some(&(prev, _)) = entries.last() {
            if index != prev + 1 {
                return Err(Error::NonConsecutive {
                    line: line_no,
                    expected: prev + 1,
                    found: index,
                });
            }
        }
        entries.push((index, value));
    }
    Ok(BFileRecord { entries })
}

/// One `index value` line per term, indices consecutive from `offset`.
pub fn emit_bfile(values: &[BigInt], offset: i64) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        let _ = writeln!(out, "{} {}", offset + i as i64, v);
    }
    out
}

/// A b-file body preceded by `#` comment lines.
pub fn emit_bfile_with_header(header: &[&str], values: &[BigInt], offset: i64) -> String {
    let mut out = String::new();
    for h in header {
        let _ = writeln!(out, "# {h}");
    }
    out + &emit_bfile(values, offset)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: i64,
    /// Value from the b-file.
    pub expected: BigInt,
    /// Value from the sequence under test.
    pub actual: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchReport {
    pub first: i64,
    pub last: i64,
    pub mismatch: Option<Mismatch>,
}

impl MatchReport {
    pub fn is_match(&self) -> bool {
        self.mismatch.is_none()
    }

    pub fn compared(&self) -> usize {
        (self.last - self.first + 1) as usize
    }
}

/// Compares `seq` with `bfile` over their common index range.
pub fn compare(seq: &IntegerSequence, bfile: &BFileRecord) -> Result<MatchReport> {
    let (Some(file_lo), Some(file_hi)) = (bfile.first_index(), bfile.last_index()) else {
        return Err(Error::EmptyOverlap {
            seq_lo: seq.offset,
            seq_hi: seq.last_index(),
            file_lo: 0,
            file_hi: -1,
        });
    };
    let first = seq.offset.max(file_lo);
    let last = seq.last_index().min(file_hi);
    if first > last {
        return Err(Error::EmptyOverlap {
            seq_lo: seq.offset,
            seq_hi: seq.last_index(),
            file_lo,
            file_hi,
        });
    }
    let mismatch = (first..=last).find_map(|index| {
        let expected = &bfile.entries[(index - file_lo) as usize].1;
        let actual = seq.get(index).expect("index inside the overlap");
        (expected != actual).then(|| Mismatch {
            index,
            expected: expected.clone(),
            actual: actual.clone(),
        })
    });
    Ok(MatchReport {
        first,
        last,
        mismatch,
    })
}
