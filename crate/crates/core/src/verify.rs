//! Theorem verification sweeps: each theorem is a list of parameter
//! instances, and each instance compares closed forms, generating-function
//! coefficients and exhaustive enumeration.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::closed_forms as cf;
use crate::comb::CompositionClass;
use crate::error::Error;
use crate::partitions as pt;
use crate::series;
use crate::sweep::{expect_eq, lib, run_cases, Case, Exec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    Thm1,
    Thm2,
    Thm3,
    CorRs,
    CorPeriod,
    Thm4,
    Thm4Bar,
    Comp1,
    Comp2,
    Comp3,
    Legendre,
    Pentagonal,
    Euler,
    Glaisher,
    Franklin,
    NyirendaD,
    NyirendaC,
    Andrews,
    AndrewsD,
}

impl Theorem {
    pub const ALL: [Theorem; 19] = [
        Theorem::Thm1,
        Theorem::Thm2,
        Theorem::Thm3,
        Theorem::CorRs,
        Theorem::CorPeriod,
        Theorem::Thm4,
        Theorem::Thm4Bar,
        Theorem::Comp1,
        Theorem::Comp2,
        Theorem::Comp3,
        Theorem::Legendre,
        Theorem::Pentagonal,
        Theorem::Euler,
        Theorem::Glaisher,
        Theorem::Franklin,
        Theorem::NyirendaD,
        Theorem::NyirendaC,
        Theorem::Andrews,
        Theorem::AndrewsD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Thm1 => "thm1",
            Theorem::Thm2 => "thm2",
            Theorem::Thm3 => "thm3",
            Theorem::CorRs => "cor-rs",
            Theorem::CorPeriod => "cor-period",
            Theorem::Thm4 => "thm4",
            Theorem::Thm4Bar => "thm4bar",
            Theorem::Comp1 => "comp1",
            Theorem::Comp2 => "comp2",
            Theorem::Comp3 => "comp3",
            Theorem::Legendre => "legendre",
            Theorem::Pentagonal => "pentagonal",
            Theorem::Euler => "euler",
            Theorem::Glaisher => "glaisher",
            Theorem::Franklin => "franklin",
            Theorem::NyirendaD => "nyirenda-d",
            Theorem::NyirendaC => "nyirenda-c",
            Theorem::Andrews => "andrews",
            Theorem::AndrewsD => "andrews-d",
        }
    }

    /// Default `(max_n, max_k, max_r, max_m)`; unused entries are zero.
    fn defaults(self) -> (u32, u32, u32, u32) {
        match self {
            Theorem::Thm1 => (60, 0, 0, 0),
            Theorem::Thm2 => (20, 6, 0, 0),
            Theorem::Thm3 => (18, 6, 5, 0),
            Theorem::CorRs => (18, 0, 5, 0),
            Theorem::CorPeriod => (18, 0, 5, 0),
            Theorem::Thm4 => (16, 4, 0, 3),
            Theorem::Thm4Bar => (16, 4, 0, 3),
            Theorem::Comp1 => (22, 0, 0, 0),
            Theorem::Comp2 => (20, 5, 0, 0),
            Theorem::Comp3 => (16, 4, 0, 3),
            Theorem::Legendre => (50, 0, 0, 0),
            Theorem::Pentagonal => (100, 0, 0, 0),
            Theorem::Euler => (30, 0, 0, 0),
            Theorem::Glaisher => (30, 4, 0, 0),
            Theorem::Franklin => (25, 3, 0, 3),
            Theorem::NyirendaD => (40, 0, 3, 0),
            Theorem::NyirendaC => (40, 0, 3, 0),
            Theorem::Andrews => (30, 3, 0, 0),
            Theorem::AndrewsD => (30, 0, 0, 7),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Range overrides; `None` takes the theorem's default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: Option<u32>,
    pub max_k: Option<u32>,
    pub max_r: Option<u32>,
    pub max_m: Option<u32>,
}

struct Ranges {
    n: u32,
    k: u32,
    r: u32,
    m: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub params: String,
    pub what: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub ranges: String,
    pub instances: usize,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn render_plain(&self) -> String {
        let mut s = format!(
            "theorem: {}\nranges: {}\ninstances: {}\nstatus: {}\n",
            self.theorem,
            self.ranges,
            self.instances,
            self.status()
        );
        if let Some(c) = &self.counterexample {
            s += &format!(
                "counterexample: {} ({}) expected={} actual={}\n",
                c.params, c.what, c.expected, c.actual
            );
        }
        s
    }

    pub fn render_csv(&self) -> String {
        let ce = self
            .counterexample
            .as_ref()
            .map(|c| {
                format!(
                    "{} ({}) expected={} actual={}",
                    c.params, c.what, c.expected, c.actual
                )
            })
            .unwrap_or_default();
        format!(
            "theorem,ranges,instances,status,counterexample\n{},\"{}\",{},{},\"{}\"\n",
            self.theorem,
            self.ranges,
            self.instances,
            self.status(),
            ce
        )
    }
}

/// Runs the sweep for `theorem` over the configured ranges.
pub fn verify(theorem: Theorem, cfg: &SweepConfig, exec: Exec) -> VerificationReport {
    let (dn, dk, dr, dm) = theorem.defaults();
    let r = Ranges {
        n: cfg.max_n.unwrap_or(dn),
        k: cfg.max_k.unwrap_or(dk),
        r: cfg.max_r.unwrap_or(dr),
        m: cfg.max_m.unwrap_or(dm),
    };
    let (ranges, cases) = build(theorem, &r);
    let instances = cases.len();
    let counterexample = run_cases(&cases, exec).map(|(i, f)| Counterexample {
        params: cases[i].label.clone(),
        what: f.what,
        expected: f.expected,
        actual: f.actual,
    });
    VerificationReport {
        theorem,
        ranges,
        instances,
        counterexample,
    }
}

fn sign(j: u32) -> BigInt {
    if j.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `(-1)^j` if `n` is `3j + 1` or `3j + 2`, else 0.
fn period_six(n: u32) -> BigInt {
    match n % 3 {
        0 => BigInt::zero(),
        _ => sign(n / 3),
    }
}

fn build(theorem: Theorem, r: &Ranges) -> (String, Vec<Case>) {
    let mut cases = Vec::new();
    let ranges;
    match theorem {
        Theorem::Thm1 => {
            ranges = format!("k=2 n=1..={}", r.n);
            let gf = Arc::new(series::gf_thm2(2, r.n as usize + 1).expect("k = 2"));
            let rec = Arc::new(cf::thm2_recurrence(2, r.n as usize).expect("k = 2"));
            for n in 1..=r.n {
                let (gf, rec) = (gf.clone(), rec.clone());
                cases.push(Case::new(format!("n={n}"), move || {
                    let b = lib("formula", cf::thm2_b(2, n))?;
                    expect_eq("period-6 closed form", &period_six(n), &b)?;
                    expect_eq("recurrence", &rec[n as usize - 1], &b)?;
                    expect_eq("generating function", &-gf.coeff(n as usize + 1), &b)
                }));
            }
        }
        Theorem::Thm2 => {
            ranges = format!("k=1..={} n=1..={}", r.k, r.n);
            for k in 1..=r.k {
                let order = (r.n + k - 1) as usize;
                let gf = Arc::new(series::gf_thm2(k, order).expect("k >= 1"));
                let rec = Arc::new(cf::thm2_recurrence(k, r.n as usize).expect("k >= 1"));
                for n in 1..=r.n {
                    let (gf, rec) = (gf.clone(), rec.clone());
                    cases.push(Case::new(format!("k={k} n={n}"), move || {
                        let b = lib("formula", cf::thm2_b(k, n))?;
                        let sc = lib(
                            "enumeration",
                            CompositionClass::MinPart { k }.signed_count(n + k - 1),
                        )?;
                        expect_eq("signed enumeration", &sc.diff, &b)?;
                        expect_eq("recurrence", &rec[n as usize - 1], &b)?;
                        expect_eq("generating function", &-gf.coeff((n + k - 1) as usize), &b)?;
                        expect_eq(
                            "unsigned count",
                            &sc.total(),
                            &lib("munagi", cf::munagi_a(k, n))?,
                        )
                    }));
                }
            }
        }
        Theorem::Thm3 => {
            ranges = format!("k=1..={} r=1..={} s=0..r n=1..={}", r.k, r.r, r.n);
            for k in 1..=r.k {
                for rr in 1..=r.r {
                    for s in 0..rr {
                        let gf = Arc::new(
                            series::gf_thm3(k, rr, s, (r.n + k - 1) as usize).expect("valid"),
                        );
                        for n in 1..=r.n {
                            let gf = gf.clone();
                            cases.push(Case::new(format!("k={k} r={rr} s={s} n={n}"), move || {
                                let b = lib("formula", cf::thm3_b(k, n, rr, s))?;
                                let class = CompositionClass::MinPartCongruent { k, r: rr, s };
                                let sc = lib("enumeration", class.signed_count(n + k - 1))?;
                                expect_eq("signed enumeration", &sc.diff, &b)?;
                                expect_eq(
                                    "generating function",
                                    &-gf.coeff((n + k - 1) as usize),
                                    &b,
                                )?;
                                if k == rr - s {
                                    expect_eq(
                                        "indicator corollary",
                                        &lib("cor", cf::cor_rs_indicator(k, n, rr, s))?,
                                        &b,
                                    )?;
                                }
                                if k == 2 * rr - s {
                                    expect_eq(
                                        "periodic corollary",
                                        &lib("cor", cf::cor_period_b(k, n, rr, s))?,
                                        &b,
                                    )?;
                                }
                                Ok(())
                            }));
                        }
                    }
                }
            }
        }
        Theorem::CorRs => {
            ranges = format!("r=1..={} s=0..r k=r-s n=1..={}", r.r, r.n);
            for rr in 1..=r.r {
                for s in 0..rr {
                    let k = rr - s;
                    for n in 1..=r.n {
                        cases.push(Case::new(format!("k={k} r={rr} s={s} n={n}"), move || {
                            let b = lib("formula", cf::thm3_b(k, n, rr, s))?;
                            expect_eq(
                                "indicator",
                                &lib("cor", cf::cor_rs_indicator(k, n, rr, s))?,
                                &b,
                            )?;
                            let class = CompositionClass::MinPartCongruent { k, r: rr, s };
                            expect_eq(
                                "signed enumeration",
                                &lib("enum", class.signed_count(n + k - 1))?.diff,
                                &b,
                            )
                        }));
                    }
                }
            }
        }
        Theorem::CorPeriod => {
            let window_of = |rr: u32| 36 * rr as usize;
            ranges = format!(
                "r=1..={} s=0..r k=2r-s n=1..={} window=36r inverse-order=60",
                r.r, r.n
            );
            for rr in 1..=r.r {
                for s in 0..rr {
                    let k = 2 * rr - s;
                    let gf = Arc::new(
                        series::gf_cor_period(rr, (r.n + k - 1) as usize).expect("r >= 1"),
                    );
                    for n in 1..=r.n {
                        let gf = gf.clone();
                        cases.push(Case::new(format!("k={k} r={rr} s={s} n={n}"), move || {
                            let d = lib("corollary", cf::cor_period_b(k, n, rr, s))?;
                            expect_eq(
                                "theorem formula",
                                &lib("thm3", cf::thm3_b(k, n, rr, s))?,
                                &d,
                            )?;
                            expect_eq("generating function", &-gf.coeff((n + k - 1) as usize), &d)?;
                            let class = CompositionClass::MinPartCongruent { k, r: rr, s };
                            expect_eq(
                                "signed enumeration",
                                &lib("enum", class.signed_count(n + k - 1))?.diff,
                                &d,
                            )
                        }));
                    }
                    let window = window_of(rr);
                    cases.push(Case::new(format!("k={k} r={rr} s={s} shift"), move || {
                        let period = lib("period", series::cyclotomic_shift_check(rr, s, window))?;
                        expect_eq("period divides 6r", &true, &period.period_divides_6r)?;
                        let inverse = lib("inverse", series::cyclotomic_shift_check(rr, s, 60))?;
                        expect_eq(
                            "shifted series inverts 1 - x^r + x^2r",
                            &true,
                            &inverse.inverse_ok,
                        )
                    }));
                }
            }
        }
        Theorem::Thm4 => {
            ranges = format!("k=2..={} m=0..={} n=1..={}", r.k, r.m, r.n);
            for k in 2..=r.k {
                for m in 0..=r.m {
                    for n in 1..=r.n {
                        cases.push(Case::new(format!("k={k} m={m} n={n}"), move || {
                            let lam = lib("box form", cf::thm4_b_lambda(k, n, m))?;
                            expect_eq(
                                "fourfold sum",
                                &lam,
                                &lib("sum form", cf::thm4_b_sum(k, n, m))?,
                            )?;
                            let guarded = CompositionClass::ExactSmallGuarded { k, m };
                            let sc = lib("enumeration", guarded.signed_count(n + k - 1))?;
                            expect_eq("signed enumeration", &sc.diff, &lam)?;
                            let a = lib("unsigned box form", cf::thm4_a_lambda(k, n, m))?;
                            expect_eq(
                                "unsigned sum form",
                                &a,
                                &lib("unsigned sum", cf::thm4_a_sum(k, n, m))?,
                            )?;
                            let first =
                                lib("enumeration", CompositionClass::FirstKind { k, m }.count(n))?;
                            expect_eq("first-kind count", &BigInt::from(first), &a)?;
                            expect_eq("guarded count", &BigInt::from(sc.total()), &a)
                        }));
                    }
                }
            }
        }
        Theorem::Thm4Bar => {
            ranges = format!("k=1..={} m=0..={} n=1..={}", r.k, r.m, r.n);
            for k in 1..=r.k {
                let gf = Arc::new(
                    series::gf_thm4bar(k, (r.n + k - 1) as usize, r.m as usize).expect("k >= 1"),
                );
                for m in 0..=r.m {
                    for n in 1..=r.n {
                        let gf = gf.clone();
                        cases.push(Case::new(format!("k={k} m={m} n={n}"), move || {
                            let b = lib("formula", cf::thm4bar_b(k, n, m))?;
                            let class = CompositionClass::ExactSmall { k, m };
                            expect_eq(
                                "signed enumeration",
                                &lib("enum", class.signed_count(n + k - 1))?.diff,
                                &b,
                            )?;
                            let g =
                                series::thm4bar_from_gf(&gf, k, n, m).expect("inside the table");
                            expect_eq("bivariate generating function", &g, &b)
                        }));
                    }
                }
            }
        }
        Theorem::Comp1 => {
            ranges = format!("n=1..={}", r.n);
            for n in 1..=r.n {
                cases.push(Case::new(format!("n={n}"), move || {
                    let odd = lib("odd parts", CompositionClass::OddParts.count(n))?;
                    let big = lib("parts > 1", CompositionClass::MinPart { k: 2 }.count(n + 1))?;
                    expect_eq("odd parts vs parts > 1 at n+1", &odd, &big)
                }));
            }
        }
        Theorem::Comp2 => {
            ranges = format!("k=1..={} n=1..={}", r.k, r.n);
            for k in 1..=r.k {
                for n in 1..=r.n {
                    cases.push(Case::new(format!("k={k} n={n}"), move || {
                        let one_mod_k = CompositionClass::MinPartCongruent { k: 1, r: k, s: 0 };
                        let a = lib("parts 1 mod k", one_mod_k.count(n))?;
                        let b = lib(
                            "parts >= k",
                            CompositionClass::MinPart { k }.count(n + k - 1),
                        )?;
                        expect_eq("parts = 1 mod k vs parts >= k at n+k-1", &a, &b)?;
                        expect_eq("closed count", &lib("munagi", cf::munagi_a(k, n))?, &b)
                    }));
                }
            }
        }
        Theorem::Comp3 => {
            ranges = format!("k=1..={} m=0..={} n=1..={}", r.k, r.m, r.n);
            for k in 1..=r.k {
                for m in 0..=r.m {
                    for n in 1..=r.n {
                        cases.push(Case::new(format!("k={k} m={m} n={n}"), move || {
                            let a =
                                lib("first kind", CompositionClass::FirstKind { k, m }.count(n))?;
                            let b = lib(
                                "guarded",
                                CompositionClass::ExactSmallGuarded { k, m }.count(n + k - 1),
                            )?;
                            expect_eq("first kind vs guarded at n+k-1", &a, &b)
                        }));
                    }
                }
            }
        }
        Theorem::Legendre => {
            ranges = format!("n=0..={}", r.n);
            let pent = Arc::new(series::pentagonal_product(r.n as usize));
            for n in 0..=r.n {
                let pent = pent.clone();
                cases.push(Case::new(format!("n={n}"), move || {
                    let d = pt::legendre_diff(n);
                    expect_eq("closed form", &pt::legendre_closed(n), &d)?;
                    expect_eq("pentagonal coefficient", &pent.coeff(n as usize), &d)
                }));
            }
        }
        Theorem::Pentagonal => {
            ranges = format!("order={}", r.n);
            let lhs = Arc::new(series::pentagonal_product(r.n as usize));
            let rhs = Arc::new(series::pentagonal_rhs(r.n as usize));
            for n in 0..=r.n as usize {
                let (lhs, rhs) = (lhs.clone(), rhs.clone());
                cases.push(Case::new(format!("n={n}"), move || {
                    expect_eq("product vs pentagonal sum", &rhs.coeff(n), &lhs.coeff(n))
                }));
            }
        }
        Theorem::Euler => {
            ranges = format!("n=0..={}", r.n);
            for n in 0..=r.n {
                cases.push(Case::new(format!("n={n}"), move || {
                    let (d, o, _) = pt::euler_distinct_odd(n);
                    expect_eq("distinct vs odd parts", &d, &o)
                }));
            }
        }
        Theorem::Glaisher => {
            ranges = format!("k=1..={} n=0..={}", r.k, r.n);
            for k in 1..=r.k {
                for n in 0..=r.n {
                    cases.push(Case::new(format!("k={k} n={n}"), move || {
                        let (a, b, _) = lib("glaisher", pt::glaisher_check(n, k))?;
                        expect_eq("multiplicity < k vs no part divisible by k", &a, &b)
                    }));
                }
            }
        }
        Theorem::Franklin => {
            ranges = format!("k=1..={} m=0..={} n=0..={}", r.k, r.m, r.n);
            for k in 1..=r.k {
                for m in 0..=r.m {
                    for n in 0..=r.n {
                        cases.push(Case::new(format!("k={k} m={m} n={n}"), move || {
                            let (a, b, _) = lib("franklin", pt::franklin_check(n, k, m))?;
                            expect_eq("m values repeated >= k vs m values divisible by k", &a, &b)
                        }));
                    }
                }
            }
        }
        Theorem::NyirendaD | Theorem::NyirendaC => {
            let is_d = theorem == Theorem::NyirendaD;
            ranges = format!("r=1..={} n=0..={}", r.r, r.n);
            for rr in 1..=r.r {
                for n in 0..=r.n {
                    cases.push(Case::new(format!("r={rr} n={n}"), move || {
                        let c = if is_d {
                            pt::nyirenda_d(n, rr)
                        } else {
                            pt::nyirenda_c(n, rr)
                        };
                        let c = lib("nyirenda", c)?;
                        expect_eq("closed form", &c.closed_form, &c.diff)?;
                        if !is_d && rr == 1 {
                            expect_eq("legendre", &pt::legendre_diff(n), &c.diff)?;
                        }
                        Ok(())
                    }));
                }
            }
        }
        Theorem::Andrews => {
            ranges = format!("k=1..={} n=0..={}", r.k, r.n);
            for k in 1..=r.k {
                for n in 0..=r.n {
                    cases.push(Case::new(format!("k={k} n={n}"), move || {
                        let a = lib("andrews", pt::andrews_counts(n, k))?;
                        expect_eq(
                            "initial k-reps vs indivisible by 2k",
                            &a.initial_k_reps,
                            &a.indivisible_by_2k,
                        )?;
                        expect_eq(
                            "indivisible by 2k vs multiplicity < 2k",
                            &a.indivisible_by_2k,
                            &a.multiplicity_below_2k,
                        )
                    }));
                }
            }
        }
        Theorem::AndrewsD => {
            ranges = format!("m=0..={} n=0..={}", r.m, r.n);
            for m in 0..=r.m {
                for n in 0..=r.n {
                    cases.push(Case::new(format!("m={m} n={n}"), move || {
                        let c = pt::andrews_d_diff(n, m);
                        expect_eq("closed form", &c.closed_form, &c.diff)
                    }));
                }
            }
        }
    }
    (ranges, cases)
}
