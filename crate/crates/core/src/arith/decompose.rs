//! Unit-fraction decomposition strategies.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::unit_fraction::UnitFractionSum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Fibonacci–Sylvester: repeatedly take the largest unit fraction that fits.
    Greedy,
    /// Split the numerator into doublings, expand each greedily, and merge,
    /// resolving repeats with `1/k = 1/(k+1) + 1/(k(k+1))`.
    Splitting,
    /// Fewest terms within the policy bounds, found by exhaustive search.
    #[default]
    ShortestSearch,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Greedy => "greedy",
            Strategy::Splitting => "splitting",
            Strategy::ShortestSearch => "shortest_search",
        })
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "greedy" => Ok(Strategy::Greedy),
            "splitting" => Ok(Strategy::Splitting),
            "shortest_search" | "shortest" => Ok(Strategy::ShortestSearch),
            _ => Err(Error::parse(s, "expected greedy, splitting or shortest_search")),
        }
    }
}

/// Strategy and search bounds for [`decompose`].
///
/// `max_terms` and `max_denominator` bound the shortest-term search only; the
/// greedy and splitting expansions always terminate and are never truncated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DecompositionPolicy {
    pub strategy: Strategy,
    pub max_terms: u32,
    pub max_denominator: u64,
    /// Among equally short results, favour a largest denominator with many divisors.
    pub prefer_divisor_rich: bool,
    /// Permit a leading 2/3 term.
    pub allow_two_thirds: bool,
}

impl Default for DecompositionPolicy {
    fn default() -> Self {
        DecompositionPolicy {
            strategy: Strategy::ShortestSearch,
            max_terms: 4,
            max_denominator: 10_000,
            prefer_divisor_rich: true,
            allow_two_thirds: true,
        }
    }
}

impl DecompositionPolicy {
    pub fn greedy() -> Self {
        Self::default().with_strategy(Strategy::Greedy)
    }

    pub fn splitting() -> Self {
        Self::default().with_strategy(Strategy::Splitting)
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_two_thirds(mut self, allow: bool) -> Self {
        self.allow_two_thirds = allow;
        self
    }

    pub fn with_bounds(mut self, max_terms: u32, max_denominator: u64) -> Self {
        self.max_terms = max_terms;
        self.max_denominator = max_denominator;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_terms < 1 {
            return Err(Error::Invalid("max_terms must be at least 1".into()));
        }
        if self.max_denominator < 2 {
            return Err(Error::Invalid("max_denominator must be at least 2".into()));
        }
        Ok(())
    }
}

/// Writes `r > 0` as an Egyptian sum whose value is exactly `r`.
pub fn decompose(r: &Rational, policy: &DecompositionPolicy) -> Result<UnitFractionSum> {
    policy.validate()?;
    if !r.is_positive() {
        return Err(Error::NonPositive {
            what: "value to decompose",
            value: r.to_string(),
        });
    }
    let integer_part = r.floor().to_biguint().expect("positive floor");
    let frac = r.fract_part();
    if frac.is_zero() {
        return Ok(UnitFractionSum::from_integer(integer_part));
    }
    let two_thirds = Rational::frac(2, 3);
    let (marker, denominators) = match policy.strategy {
        Strategy::Greedy | Strategy::Splitting => {
            let (marker, rest) = if policy.allow_two_thirds && frac >= two_thirds {
                (true, &frac - &two_thirds)
            } else {
                (false, frac.clone())
            };
            let ds = if rest.is_zero() {
                Vec::new()
            } else if policy.strategy == Strategy::Greedy {
                greedy_denominators(&rest)
            } else {
                splitting_denominators(&rest)
            };
            (marker, ds)
        }
        Strategy::ShortestSearch => shortest(&frac, policy)?,
    };
    UnitFractionSum::new(integer_part, marker, denominators)
}

/// Successive remainders of the greedy expansion of `0 < f < 1`, starting
/// with `f` itself and ending with zero. Each numerator is strictly smaller
/// than the one before it.
pub fn greedy_remainders(f: &Rational) -> Vec<Rational> {
    let mut out = vec![f.clone()];
    let mut rest = f.clone();
    while rest.is_positive() {
        let d = rest.recip().expect("positive").ceil();
        rest = &rest - &Rational::new(1, d).expect("d >= 1");
        out.push(rest.clone());
    }
    out
}

fn greedy_denominators(f: &Rational) -> Vec<BigUint> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    while rest.is_positive() {
        let d = rest.recip().expect("positive").ceil();
        rest = &rest - &Rational::new(1, d.clone()).expect("d >= 1");
        out.push(d.to_biguint().expect("positive denominator"));
    }
    out
}

fn splitting_denominators(f: &Rational) -> Vec<BigUint> {
    let numer = f.numer().to_biguint().expect("positive");
    let denom = f.denom().clone();
    let mut counts: BTreeMap<BigUint, u64> = BTreeMap::new();
    for bit in 0..numer.bits() {
        if numer.bit(bit) {
            let piece = Rational::new(BigInt::one() << bit, denom.clone()).expect("denom > 0");
            for d in greedy_denominators(&piece) {
                *counts.entry(d).or_default() += 1;
            }
        }
    }
    // 1/k + 1/k -> 1/k + 1/(k+1) + 1/(k(k+1)), smallest repeat first
    while let Some(k) = counts.iter().find(|(_, &c)| c > 1).map(|(k, _)| k.clone()) {
        *counts.get_mut(&k).expect("present") -= 1;
        *counts.entry(&k + 1u32).or_default() += 1;
        *counts.entry(&k * (&k + 1u32)).or_default() += 1;
    }
    counts.into_keys().collect()
}

/// Search result: `(leading 2/3 used, denominators)`.
type Found = (bool, Vec<BigUint>);

fn shortest(frac: &Rational, policy: &DecompositionPolicy) -> Result<Found> {
    let search = Searcher::new(policy.max_denominator, policy.prefer_divisor_rich);
    let plain = search.shortest(frac, policy.max_terms)?;

    let two_thirds = Rational::frac(2, 3);
    let with_marker = if policy.allow_two_thirds && frac >= &two_thirds {
        let rest = frac - &two_thirds;
        if rest.is_zero() {
            Some(Vec::new())
        } else {
            // the 2/3 form wins ties, so it may use one term less than the plain form
            let limit = match &plain {
                Some(ds) => (ds.len() as u32 - 1).min(policy.max_terms - 1),
                None => policy.max_terms - 1,
            };
            if limit == 0 {
                None
            } else {
                search.shortest(&rest, limit)?
            }
        }
    } else {
        None
    };

    let to_big = |ds: Vec<u64>| ds.into_iter().map(BigUint::from).collect::<Vec<_>>();
    match (plain, with_marker) {
        (Some(p), Some(m)) if m.len() < p.len() => Ok((true, to_big(m))),
        (Some(p), _) => Ok((false, to_big(p))),
        (None, Some(m)) => Ok((true, to_big(m))),
        (None, None) => Err(search.exhausted(frac, policy.max_terms)),
    }
}

/// Exhaustive bounded search for the shortest distinct unit-fraction sum.
struct Searcher {
    max_denominator: u64,
    prefer_divisor_rich: bool,
    primes: Vec<u64>,
}

/// Ordering key for equally long candidates: smaller is better.
type Key = (Reverse<u32>, u64, Vec<u64>);

impl Searcher {
    fn new(max_denominator: u64, prefer_divisor_rich: bool) -> Self {
        Searcher {
            max_denominator,
            prefer_divisor_rich,
            primes: primes_up_to(max_denominator),
        }
    }

    fn key(&self, ds: &[u64]) -> Key {
        let largest = *ds.last().expect("non-empty candidate");
        let richness = if self.prefer_divisor_rich {
            divisor_count(largest)
        } else {
            0
        };
        (Reverse(richness), largest, ds.to_vec())
    }

    fn exhausted(&self, value: &Rational, max_terms: u32) -> Error {
        let bound = match value.denom().to_biguint() {
            Some(q) if !self.prime_powers_fit(&q) => ("max_denominator", self.max_denominator),
            _ => ("max_terms", u64::from(max_terms)),
        };
        Error::BoundsExceeded {
            value: value.to_string(),
            bound: bound.0,
            limit: bound.1,
        }
    }

    /// Every prime power dividing `q` must itself be a denominator candidate,
    /// since `q` divides the lcm of the chosen denominators.
    fn prime_powers_fit(&self, q: &BigUint) -> bool {
        let mut rest = q.clone();
        for &p in &self.primes {
            if rest.is_one() {
                return true;
            }
            let mut power = 1u64;
            while (&rest % p).is_zero() {
                rest /= p;
                power = match power.checked_mul(p) {
                    Some(v) if v <= self.max_denominator => v,
                    _ => return false,
                };
            }
        }
        rest.is_one()
    }

    /// Whether `k` denominators up to the bound can have an lcm divisible by
    /// `q`: every prime power of `q` must fit, `q` cannot exceed `max^k`, and
    /// no denominator holds two prime powers above `sqrt(max)`.
    fn coverable(&self, mut q: u128, k: u32) -> bool {
        let max = u128::from(self.max_denominator);
        if max.checked_pow(k).is_some_and(|cap| q > cap) {
            return false;
        }
        let mut large = 0u32;
        let mut note = |power: u128| {
            if power * power > max {
                large += 1;
            }
        };
        for &p in &self.primes {
            if q == 1 {
                break;
            }
            let p128 = u128::from(p);
            if p128 * p128 > q {
                // what is left is a single prime
                if q > max {
                    return false;
                }
                note(q);
                q = 1;
                break;
            }
            let mut power = 1u128;
            while q % p128 == 0 {
                q /= p128;
                power *= p128;
                if power > max {
                    return false;
                }
            }
            if power > 1 {
                note(power);
            }
        }
        q == 1 && large <= k
    }

    /// Shortest decomposition of `0 < value < 1` with at most `max_terms`
    /// terms, or `None` if the bounds admit none.
    fn shortest(&self, value: &Rational, max_terms: u32) -> Result<Option<Vec<u64>>> {
        let q = value.denom().to_biguint().expect("positive");
        if !self.prime_powers_fit(&q) {
            return Ok(None);
        }
        let (Some(a), Some(b)) = (value.numer().to_u128(), q.to_u128()) else {
            return Err(too_wide(value));
        };
        for k in 1..=max_terms {
            let mut best: Option<(Key, Vec<u64>)> = None;
            let mut current = Vec::with_capacity(k as usize);
            self.search(a, b, k, 0, &mut current, &mut best)
                .ok_or_else(|| too_wide(value))?;
            if let Some((_, ds)) = best {
                return Ok(Some(ds));
            }
        }
        Ok(None)
    }

    fn offer(&self, candidate: &[u64], best: &mut Option<(Key, Vec<u64>)>) {
        let key = self.key(candidate);
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            *best = Some((key, candidate.to_vec()));
        }
    }

    /// Enumerates all ways to write `a/b` as `terms` unit fractions with
    /// denominators strictly above `prev`. Returns `None` on 128-bit overflow.
    fn search(
        &self,
        a: u128,
        b: u128,
        terms: u32,
        prev: u64,
        current: &mut Vec<u64>,
        best: &mut Option<(Key, Vec<u64>)>,
    ) -> Option<()> {
        let max = u128::from(self.max_denominator);
        match terms {
            1 => {
                if a == 1 && b > u128::from(prev) && b <= max {
                    current.push(b as u64);
                    self.offer(current, best);
                    current.pop();
                }
                Some(())
            }
            2 => self.search_pair(a, b, prev, current, best),
            _ => {
                let t = u128::from(terms);
                // 1/x is the largest term: r/t <= 1/x < r
                let lo = (b / a + 1).max(u128::from(prev) + 1);
                let hi = (t.checked_mul(b)? / a).min(max.saturating_sub(u128::from(terms - 1)));
                let mut x = lo;
                while x <= hi {
                    // remainder (a x - b) / (b x)
                    let num = a.checked_mul(x)? - b;
                    let den = b.checked_mul(x)?;
                    let g = num.gcd(&den);
                    let (na, nb) = (num / g, den / g);
                    // the remaining terms are each at least 1/max
                    let fits_floor = na.checked_mul(max)? >= u128::from(terms - 1) * nb;
                    if fits_floor && self.coverable(nb, terms - 1) {
                        current.push(x as u64);
                        self.search(na, nb, terms - 1, x as u64, current, best)?;
                        current.pop();
                    }
                    x += 1;
                }
                Some(())
            }
        }
    }

    /// All `1/x + 1/y = a/b` with `prev < x < y <= max`.
    fn search_pair(
        &self,
        a: u128,
        b: u128,
        prev: u64,
        current: &mut Vec<u64>,
        best: &mut Option<(Key, Vec<u64>)>,
    ) -> Option<()> {
        let max = u128::from(self.max_denominator);
        let am = a.checked_mul(max)?;
        if am <= b {
            return Some(());
        }
        // y <= max  <=>  x >= b max / (a max - b)
        let lo = (b / a + 1)
            .max(u128::from(prev) + 1)
            .max(b.checked_mul(max)?.div_ceil(am - b));
        // x < y  <=>  x < 2b/a
        let hi = ((b.checked_mul(2)? - 1) / a).min(max - 1);
        if lo > hi {
            return Some(());
        }
        let mut emit = |x: u128, y: u128, current: &mut Vec<u64>| {
            if y > x && y <= max {
                current.push(x as u64);
                current.push(y as u64);
                self.offer(current, best);
                current.pop();
                current.pop();
            }
        };
        if hi - lo < 4096 {
            for x in lo..=hi {
                let num = a * x - b;
                let den = b.checked_mul(x)?;
                if den % num == 0 {
                    emit(x, den / num, current);
                }
            }
            return Some(());
        }
        // (a x - b)(a y - b) = b^2: walk the divisors u = a x - b of b^2
        let Some(factors) = self.factor_small(b) else {
            return Some(());
        };
        let b2 = b.checked_mul(b)?;
        for u in divisors_of_square(&factors) {
            if u >= b || (u + b) % a != 0 {
                continue;
            }
            let x = (u + b) / a;
            if x < lo || x > hi {
                continue;
            }
            let y = (b2 / u + b) / a;
            if (b2 / u + b) % a == 0 {
                emit(x, y, current);
            }
        }
        Some(())
    }

    /// Factorization over primes up to the bound; `None` if a larger prime remains.
    fn factor_small(&self, mut q: u128) -> Option<Vec<(u128, u32)>> {
        let mut out = Vec::new();
        for &p in &self.primes {
            let p = u128::from(p);
            if q == 1 {
                break;
            }
            if p * p > q {
                out.push((q, 1));
                q = 1;
                break;
            }
            let mut e = 0;
            while q % p == 0 {
                q /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
        }
        if q != 1 {
            return None;
        }
        Some(out)
    }
}

fn too_wide(value: &Rational) -> Error {
    Error::Invalid(format!(
        "search for {value} exceeds 128-bit intermediate range; lower max_denominator"
    ))
}

fn divisors_of_square(factors: &[(u128, u32)]) -> Vec<u128> {
    let mut out = vec![1u128];
    for &(p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (2 * e as usize + 1));
        for &d in &out {
            let mut v = d;
            for _ in 0..=2 * e {
                next.push(v);
                v = v.saturating_mul(p);
            }
        }
        out = next;
    }
    out
}

pub(crate) fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

pub(crate) fn divisor_count(mut n: u64) -> u32 {
    let mut count = 1;
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        count *= e + 1;
        p += 1;
    }
    if n > 1 {
        count *= 2;
    }
    count
}
