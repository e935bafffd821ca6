//! Independent brute-force routes checked against the library.
//!
//! Compositions of `n` are generated from the `2^(n-1)` subsets of cut
//! points and filtered with `CompositionClass::contains`; partitions come
//! from the same generator restricted to non-increasing lists. Neither path
//! shares code with the pruned depth-first enumerators.

use std::collections::BTreeSet;

use evenodd::bijection::{stars_and_bars_count, thm2_map, thm2_unmap, thm3_map, thm3_unmap};
use evenodd::closed_forms::{binomial, thm2_b, thm3_b, thm4_b_sum, thm4bar_b};
use evenodd::comb::for_each_partition;
use evenodd::seq::{emit_bfile, parse_bfile, IntegerSequence};
use evenodd::series::{expand_rational, IntPolynomial, TruncatedSeries};
use evenodd::{CompositionClass, PartitionClass};
use num_bigint::BigInt;
use proptest::prelude::*;

fn all_compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    (0u64..1 << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for bit in 0..n - 1 {
                if mask >> bit & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts
        })
        .collect()
}

fn brute(n: u32, class: CompositionClass) -> Vec<Vec<u32>> {
    let mut v: Vec<Vec<u32>> = all_compositions(n)
        .into_iter()
        .filter(|c| class.contains(c))
        .collect();
    v.sort();
    v
}

fn brute_signed(n: u32, class: CompositionClass) -> i64 {
    brute(n, class)
        .iter()
        .map(|c| if c.len() % 2 == 1 { 1 } else { -1 })
        .sum()
}

fn classes() -> Vec<CompositionClass> {
    use CompositionClass::*;
    let mut v = vec![All, DistinctParts, OddParts];
    for k in 1..=4 {
        v.push(MinPart { k });
        for m in 0..=2 {
            v.push(ExactSmall { k, m });
            v.push(ExactSmallGuarded { k, m });
            v.push(FirstKind { k, m });
        }
        for r in 1..=3 {
            for s in 0..r {
                v.push(MinPartCongruent { k, r, s });
            }
        }
    }
    v
}

#[test]
fn enumerators_match_brute_force() {
    for class in classes() {
        for n in 0..=13 {
            let got: Vec<Vec<u32>> = class
                .enumerate(n)
                .unwrap()
                .into_iter()
                .map(|c| c.into_parts())
                .collect();
            let want = brute(n, class);
            assert_eq!(got, want, "{class:?} n={n}");
            let set: BTreeSet<_> = got.iter().collect();
            assert_eq!(set.len(), got.len());
        }
    }
}

#[test]
fn all_compositions_count_is_power_of_two() {
    for n in 1..=16 {
        assert_eq!(
            CompositionClass::All.count(n).unwrap(),
            (1u64 << (n - 1)).into()
        );
    }
}

#[test]
fn class_reductions_at_zero_marks() {
    use CompositionClass::*;
    for k in 1..=4 {
        for n in 0..=14 {
            let base = MinPart { k }.enumerate(n).unwrap();
            assert_eq!(ExactSmall { k, m: 0 }.enumerate(n).unwrap(), base);
            assert_eq!(ExactSmallGuarded { k, m: 0 }.enumerate(n).unwrap(), base);
            assert_eq!(
                MinPartCongruent { k, r: 1, s: 0 }.enumerate(n).unwrap(),
                base
            );
        }
    }
}

#[test]
fn guarded_alternative_reading_breaks_first_kind_equality() {
    // A small part allowed to be the final part: one extra member at size 4.
    let loose = |c: &[u32]| {
        let k = 2;
        let small: Vec<usize> = (0..c.len()).filter(|&i| c[i] < k).collect();
        small.len() == 1
            && small.iter().all(|&i| {
                i > 0 && c[i - 1] >= k && (i + 1 >= c.len() || i + 2 == c.len() || c[i + 1] > k)
            })
    };
    // first kind at n = 4 pairs with the guarded class at size n + k - 1 = 5
    let loose_count = all_compositions(5).iter().filter(|c| loose(c)).count();
    let first = CompositionClass::FirstKind { k: 2, m: 1 }.count(4).unwrap();
    assert_eq!(first, 1u32.into());
    assert_eq!(
        CompositionClass::ExactSmallGuarded { k: 2, m: 1 }
            .count(5)
            .unwrap(),
        first
    );
    assert_eq!(loose_count, 3);
}

#[test]
fn closed_forms_match_brute_force() {
    for k in 1..=4 {
        for n in 1..=12 {
            let size = n + k - 1;
            assert_eq!(
                thm2_b(k, n).unwrap(),
                BigInt::from(brute_signed(size, CompositionClass::MinPart { k }))
            );
            for m in 0..=2 {
                assert_eq!(
                    thm4bar_b(k, n, m).unwrap(),
                    BigInt::from(brute_signed(size, CompositionClass::ExactSmall { k, m })),
                );
                if k >= 2 {
                    assert_eq!(
                        thm4_b_sum(k, n, m).unwrap(),
                        BigInt::from(brute_signed(
                            size,
                            CompositionClass::ExactSmallGuarded { k, m }
                        )),
                    );
                }
            }
            for r in 1..=3 {
                for s in 0..r {
                    assert_eq!(
                        thm3_b(k, n, r, s).unwrap(),
                        BigInt::from(brute_signed(
                            size,
                            CompositionClass::MinPartCongruent { k, r, s }
                        )),
                        "k={k} n={n} r={r} s={s}"
                    );
                }
            }
        }
    }
}

#[test]
fn stars_and_bars_match_length_filter() {
    for n in 1..=12 {
        for len in 1..=n {
            let c = all_compositions(n)
                .iter()
                .filter(|c| c.len() == len as usize)
                .count();
            assert_eq!(stars_and_bars_count(n, len), (c as u64).into());
        }
    }
}

#[test]
fn partition_enumerators_match_sorted_compositions() {
    let classes = [
        PartitionClass::All,
        PartitionClass::DistinctParts,
        PartitionClass::OddParts,
        PartitionClass::MaxMultiplicity { bound: 3 },
        PartitionClass::NoPartDivisibleBy { k: 3 },
        PartitionClass::FranklinRepeated { k: 2, m: 1 },
        PartitionClass::FranklinDivisible { k: 2, m: 1 },
        PartitionClass::InitialKReps { k: 2 },
        PartitionClass::InitialTwoRepsWithMarks { m: 2 },
        PartitionClass::DistinctInResidues {
            modulus: 4,
            residues: [0, 1, 3].into_iter().collect(),
        },
    ];
    for class in &classes {
        for n in 0..=14 {
            let mut want: Vec<Vec<u32>> = all_compositions(n)
                .into_iter()
                .filter(|c| c.windows(2).all(|w| w[0] >= w[1]) && class.contains(c))
                .collect();
            want.sort();
            want.reverse();
            let got: Vec<Vec<u32>> = evenodd::enumerate_partitions(n, class)
                .unwrap()
                .into_iter()
                .map(|p| p.parts().to_vec())
                .collect();
            assert_eq!(got, want, "{class:?} n={n}");
        }
    }
}

#[test]
fn odd_part_partitions_have_parity_of_n() {
    for n in 0..=40 {
        let mut ok = true;
        for_each_partition(
            n,
            |p| p % 2 == 1,
            false,
            |p| ok &= p.len() % 2 == (n % 2) as usize,
        );
        assert!(ok);
        let count = PartitionClass::OddParts.count(n).unwrap();
        let signed = evenodd::partitions::odd_parts_signed(n);
        let want = if n % 2 == 0 {
            BigInt::from(count)
        } else {
            -BigInt::from(count)
        };
        assert_eq!(signed, want);
    }
}

#[test]
fn period_detection_on_thm2_k3_is_aperiodic() {
    let values = (1..=60).map(|n| thm2_b(3, n).unwrap()).collect();
    let s = IntegerSequence::new(1, values);
    assert_eq!(s.detect_period(), evenodd::seq::Periodicity::Aperiodic);
}

proptest! {
    #[test]
    fn rational_expansion_inverts(
        numer in proptest::collection::vec(-5i64..=5, 0..6),
        tail in proptest::collection::vec(-5i64..=5, 0..6),
        unit in prop_oneof![Just(1i64), Just(-1i64)],
        order in 0usize..30,
    ) {
        let p = IntPolynomial::from_i64s(&numer);
        let mut d = vec![unit];
        d.extend(tail);
        let q = IntPolynomial::from_i64s(&d);
        let s = expand_rational(&p, &q, order).unwrap();
        let back = &s * &TruncatedSeries::from_poly(&q, order);
        prop_assert_eq!(back, TruncatedSeries::from_poly(&p, order));
    }

    #[test]
    fn bfile_round_trip(values in proptest::collection::vec(any::<i64>(), 0..40), offset in -50i64..50) {
        let vals: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
        let text = emit_bfile(&vals, offset);
        let rec = parse_bfile(&text).unwrap();
        prop_assert_eq!(rec.entries.iter().map(|e| e.1.clone()).collect::<Vec<_>>(), vals.clone());
        if let Some(first) = rec.first_index() {
            prop_assert_eq!(first, offset);
        }
        let again = emit_bfile(&rec.entries.iter().map(|e| e.1.clone()).collect::<Vec<_>>(), offset);
        prop_assert_eq!(again, text);
    }

    #[test]
    fn binomial_pascal(a in 1i64..60, b in 1i64..60) {
        prop_assert_eq!(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b));
    }
}

#[test]
fn thm2_map_is_a_length_preserving_bijection() {
    for k in 1..=6 {
        for n in 1..=18 {
            let class = CompositionClass::MinPart { k }
                .enumerate(n + k - 1)
                .unwrap();
            let mut images = BTreeSet::new();
            for c in &class {
                let img = thm2_map(c, k).unwrap();
                assert_eq!(img.len(), c.len());
                let j = (c.len() - 1) as u64;
                assert_eq!(img.size(), u64::from(n) - j * u64::from(k - 1));
                assert_eq!(&thm2_unmap(&img, k).unwrap(), c);
                images.insert(img);
            }
            assert_eq!(images.len(), class.len());
            // image by length is every composition of n - j(k-1) with j + 1 parts
            for j in 0..=(n - 1) / k {
                let size = n - j * (k - 1);
                let want: BTreeSet<_> = CompositionClass::All
                    .enumerate(size)
                    .unwrap()
                    .into_iter()
                    .filter(|c| c.len() == (j + 1) as usize)
                    .collect();
                let got: BTreeSet<_> = images
                    .iter()
                    .filter(|c| c.len() == (j + 1) as usize)
                    .cloned()
                    .collect();
                assert_eq!(got, want, "k={k} n={n} j={j}");
            }
        }
    }
}

#[test]
fn thm3_map_is_a_length_preserving_bijection() {
    for k in 1..=5 {
        for r in 1..=4 {
            for s in 0..r {
                for n in 1..=16 {
                    let class = CompositionClass::MinPartCongruent { k, r, s }
                        .enumerate(n + k - 1)
                        .unwrap();
                    let mut images = BTreeSet::new();
                    for c in &class {
                        let img = thm3_map(c, k, r, s).unwrap();
                        assert_eq!(img.len(), c.len());
                        // r(i + j + 1) + (k + s - r)(j + 1) = n + k - 1
                        let j = img.len() as i64 - 1;
                        let i = img.size() as i64 - j - 1;
                        assert_eq!(
                            i64::from(r) * i + j * i64::from(k + s),
                            i64::from(n) - 1 - i64::from(s)
                        );
                        assert_eq!(&thm3_unmap(&img, k, r, s).unwrap(), c);
                        images.insert(img);
                    }
                    assert_eq!(images.len(), class.len());
                    // every composition of i + j + 1 with j + 1 parts is hit
                    let target = i64::from(n) - 1 - i64::from(s);
                    let mut j = 0i64;
                    while target >= 0 && j * i64::from(k + s) <= target {
                        let rest = target - j * i64::from(k + s);
                        if rest % i64::from(r) == 0 {
                            let size = (rest / i64::from(r) + j + 1) as u32;
                            let want = CompositionClass::All
                                .enumerate(size)
                                .unwrap()
                                .into_iter()
                                .filter(|c| c.len() == (j + 1) as usize)
                                .count();
                            let got = images
                                .iter()
                                .filter(|c| {
                                    c.len() == (j + 1) as usize && c.size() == u64::from(size)
                                })
                                .count();
                            assert_eq!(got, want);
                        }
                        j += 1;
                    }
                }
            }
        }
    }
}
