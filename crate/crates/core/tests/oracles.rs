//! Decompositions, the 2/n table and the triple generator checked against
//! brute-force enumeration.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use rand::Rng;
use rhind::arith::{decompose, greedy_remainders, table_2_over_n, DecompositionPolicy, Strategy};
use rhind::campaign::case_rng;
use rhind::geometry::rational_right_triangles;
use rhind::{Error, Rational};

const MAX_DEN: u64 = 40;
const MAX_TERMS: usize = 3;

fn divisors(n: u64) -> u32 {
    (1..=n).filter(|d| n % d == 0).count() as u32
}

fn reduce(n: u64, d: u64) -> (u64, u64) {
    let g = n.gcd(&d);
    (n / g, d / g)
}

/// Every set of at most three distinct denominators in `2..=40`, grouped by the value it sums to.
fn all_sums() -> HashMap<(u64, u64), Vec<Vec<u64>>> {
    let mut sums: HashMap<(u64, u64), Vec<Vec<u64>>> = HashMap::new();
    fn walk(start: u64, num: u64, den: u64, current: &mut Vec<u64>, sums: &mut HashMap<(u64, u64), Vec<Vec<u64>>>) {
        if !current.is_empty() {
            sums.entry(reduce(num, den)).or_default().push(current.clone());
        }
        if current.len() == MAX_TERMS {
            return;
        }
        for d in start..=MAX_DEN {
            current.push(d);
            walk(d + 1, num * d + den, den * d, current, sums);
            current.pop();
        }
    }
    walk(2, 0, 1, &mut Vec::new(), &mut sums);
    sums
}

/// Fewest terms first, then the policy's tie-break.
fn best(candidates: &[Vec<u64>], limit: usize, rich: bool) -> Option<Vec<u64>> {
    candidates
        .iter()
        .filter(|c| c.len() <= limit)
        .min_by_key(|c| {
            let largest = *c.last().unwrap();
            let richness = if rich { divisors(largest) } else { 0 };
            (c.len(), std::cmp::Reverse(richness), largest, (*c).clone())
        })
        .cloned()
}

fn oracle(
    sums: &HashMap<(u64, u64), Vec<Vec<u64>>>,
    p: u64,
    q: u64,
    rich: bool,
    two_thirds: bool,
) -> Option<(bool, Vec<u64>)> {
    let none = Vec::new();
    let plain = best(sums.get(&(p, q)).unwrap_or(&none), MAX_TERMS, rich);
    if two_thirds && 3 * p >= 2 * q {
        if 3 * p == 2 * q {
            return Some((true, vec![]));
        }
        let rest = reduce(3 * p - 2 * q, 3 * q);
        let limit = plain.as_ref().map_or(MAX_TERMS - 1, |p| p.len() - 1).min(MAX_TERMS - 1);
        if let Some(r) = best(sums.get(&rest).unwrap_or(&none), limit, rich) {
            return Some((true, r));
        }
    }
    plain.map(|p| (false, p))
}

#[test]
fn shortest_search_matches_brute_force() {
    let sums = all_sums();
    let mut checked = 0;
    for q in 2..=24u64 {
        for p in 1..q {
            if p.gcd(&q) != 1 {
                continue;
            }
            for rich in [true, false] {
                for two_thirds in [true, false] {
                    let policy = DecompositionPolicy {
                        strategy: Strategy::ShortestSearch,
                        max_terms: MAX_TERMS as u32,
                        max_denominator: MAX_DEN,
                        prefer_divisor_rich: rich,
                        allow_two_thirds: two_thirds,
                    };
                    let got = decompose(&Rational::frac(p as i64, q as i64), &policy);
                    let want = oracle(&sums, p, q, rich, two_thirds);
                    match (got, want) {
                        (Ok(u), Some((marker, ds))) => {
                            let got_ds: Vec<BigUint> = u.denominators().to_vec();
                            let want_ds: Vec<BigUint> = ds.into_iter().map(BigUint::from).collect();
                            assert_eq!(
                                (u.has_two_thirds(), got_ds),
                                (marker, want_ds),
                                "{p}/{q} rich={rich} two_thirds={two_thirds}"
                            );
                        }
                        (Err(Error::BoundsExceeded { .. }), None) => {}
                        (got, want) => panic!("{p}/{q}: got {got:?}, oracle {want:?}"),
                    }
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 500);
}

#[test]
fn oracle_pins_known_values() {
    let sums = all_sums();
    assert_eq!(oracle(&sums, 2, 5, true, true), Some((false, vec![3, 15])));
    assert_eq!(oracle(&sums, 7, 10, true, true), Some((true, vec![30])));
    assert_eq!(oracle(&sums, 7, 10, true, false), Some((false, vec![2, 5])));
    assert_eq!(oracle(&sums, 2, 3, true, false), Some((false, vec![2, 6])));
}

#[test]
fn exact_on_1000_random_rationals_for_every_strategy() {
    let mut bounded = 0;
    for i in 0..1000u64 {
        let mut rng = case_rng(7, i);
        let r = Rational::frac(rng.gen_range(1..=1000), rng.gen_range(1..=1000));
        for strategy in [Strategy::Greedy, Strategy::Splitting, Strategy::ShortestSearch] {
            let policy = DecompositionPolicy::default().with_strategy(strategy);
            match decompose(&r, &policy) {
                Ok(u) => {
                    assert_eq!(u.value(), r, "{r} under {strategy}");
                    let ds = u.denominators();
                    assert!(ds.windows(2).all(|w| w[0] < w[1]));
                    assert!(ds.iter().all(|d| *d >= BigUint::from(2u32)));
                }
                // only the bounded search may run out of room
                Err(Error::BoundsExceeded { .. }) if strategy == Strategy::ShortestSearch => bounded += 1,
                Err(e) => panic!("{r} under {strategy}: {e}"),
            }
        }
    }
    assert!(bounded < 1000);
}

#[test]
fn greedy_numerators_strictly_decrease() {
    for i in 0..300u64 {
        let mut rng = case_rng(11, i);
        let q = rng.gen_range(2..=1000);
        let r = Rational::frac(rng.gen_range(1..q), q);
        let rem = greedy_remainders(&r);
        assert!(rem.last().unwrap().is_zero());
        for w in rem.windows(2) {
            assert!(w[1].numer() < w[0].numer(), "{r}: {} then {}", w[0], w[1]);
        }
    }
}

#[test]
fn table_rows_are_minimal() {
    let shortest = table_2_over_n(&DecompositionPolicy::default()).unwrap();
    let greedy = table_2_over_n(&DecompositionPolicy::greedy()).unwrap();
    for (s, g) in shortest.iter().zip(&greedy) {
        assert!(s.term_count <= g.term_count, "2/{}", s.n);
        assert!(s.value_matches());
        // nothing shorter: every row has two terms and 2/n is never a unit fraction for odd n
        assert_eq!(s.term_count, 2);
        assert!(!Rational::frac(2, s.n as i64).is_unit_fraction());
    }
}

fn scan_triples(limit: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for a in 1..limit {
        for b in a + 1..limit {
            for c in b + 1..limit {
                if a + b + c <= limit && a * a + b * b == c * c && a.gcd(&b) == 1 {
                    out.push((a, b, c));
                }
            }
        }
    }
    out.sort_by_key(|&(a, b, c)| (a + b + c, a));
    out
}

#[test]
fn triples_match_exhaustive_scan() {
    for limit in (12..=150).step_by(7) {
        assert_eq!(rational_right_triangles(limit).unwrap(), scan_triples(limit), "limit {limit}");
    }
    assert_eq!(rational_right_triangles(30).unwrap(), vec![(3, 4, 5), (5, 12, 13)]);
    assert!(rational_right_triangles(11).is_err());
}
