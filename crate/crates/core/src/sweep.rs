//! Deterministic execution of independent check cases, in parallel when the
//! `parallel` feature is enabled.
//!
//! Cases are evaluated in full and results are kept in input order, so the
//! outcome (instance count, first failing case) does not depend on the
//! schedule.

use std::fmt;

/// How a sweep evaluates its cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    /// Uses the rayon pool; same as `Sequential` without the `parallel` feature.
    #[default]
    Parallel,
}

impl Exec {
    /// True when this build can actually run cases concurrently.
    pub fn is_concurrent(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// A failed check: what was compared and the two sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub what: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: expected {}, got {}",
            self.what, self.expected, self.actual
        )
    }
}

pub type Outcome = Result<(), Failure>;

/// Fails with `what` unless `expected == actual`.
pub fn expect_eq<T: PartialEq + fmt::Display>(what: &str, expected: &T, actual: &T) -> Outcome {
    if expected == actual {
        Ok(())
    } else {
        Err(Failure {
            what: what.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        })
    }
}

/// Turns a library error into a failure of the named check.
pub fn lib<T>(what: &str, r: crate::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure {
        what: what.to_string(),
        expected: "a value".into(),
        actual: format!("error: {e}"),
    })
}

/// One labelled, self-contained check.
pub struct Case {
    pub label: String,
    check: Box<dyn Fn() -> Outcome + Send + Sync>,
}

impl Case {
    pub fn new(
        label: impl Into<String>,
        check: impl Fn() -> Outcome + Send + Sync + 'static,
    ) -> Self {
        Case {
            label: label.into(),
            check: Box::new(check),
        }
    }

    pub fn run(&self) -> Outcome {
        (self.check)()
    }
}

/// Runs every case and returns the first failure in input order.
pub fn run_cases(cases: &[Case], exec: Exec) -> Option<(usize, Failure)> {
    let outcomes: Vec<Outcome> = map_in_order(cases, exec, Case::run);
    outcomes
        .into_iter()
        .enumerate()
        .find_map(|(i, o)| o.err().map(|f| (i, f)))
}

/// `items.iter().map(f).collect()`, concurrently under `Exec::Parallel`.
pub fn map_in_order<T, R, F>(items: &[T], exec: Exec, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Exec::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cases() -> Vec<Case> {
        (0..200u32)
            .map(|i| {
                Case::new(format!("i={i}"), move || {
                    if i % 37 == 36 {
                        expect_eq("parity", &0, &(i % 2))
                    } else {
                        Ok(())
                    }
                })
            })
            .collect()
    }

    #[test]
    fn first_failure_is_schedule_independent() {
        let cs = cases();
        let seq = run_cases(&cs, Exec::Sequential);
        let par = run_cases(&cs, Exec::Parallel);
        assert_eq!(seq, par);
        let (i, f) = seq.unwrap();
        assert_eq!(i, 73);
        assert_eq!(cs[i].label, "i=73");
        assert_eq!(f.to_string(), "parity: expected 0, got 1");
    }

    #[test]
    fn map_preserves_order() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map_in_order(&xs, Exec::Parallel, |x| x * x);
        let b = map_in_order(&xs, Exec::Sequential, |x| x * x);
        assert_eq!(a, b);
    }
}
