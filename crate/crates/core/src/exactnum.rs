//! Exact scalars: big integers, rationals in lowest terms, square roots and
//! square parts.
//!
//! `Integer` and `Rational` are the `num` crate's `BigInt` and `BigRational`.
//! `BigRational` keeps itself reduced with a positive denominator, so every
//! value handed out by this crate is canonical.

use crypto_bigint::modular::runtime_mod::{DynResidue, DynResidueParams};
use crypto_bigint::{Encoding, U256};
use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = num_rational::BigRational;

/// Parses a plain decimal integer: optional `-`, then ASCII digits only.
pub fn parse_integer(s: &str) -> Result<Integer> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse { kind: "integer", input: s.to_owned() });
    }
    s.parse().map_err(|_| Error::Parse { kind: "integer", input: s.to_owned() })
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse { kind: "rational", input: s.to_owned() };
    match s.split_once('/') {
        None => parse_integer(s).map(Rational::from_integer).map_err(|_| err()),
        Some((n, d)) => {
            let n = parse_integer(n).map_err(|_| err())?;
            let d = parse_integer(d).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
    }
}

pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

const fn square_residues<const N: usize>() -> [bool; N] {
    let mut table = [false; N];
    let mut i = 0;
    while i < N {
        table[(i * i) % N] = true;
        i += 1;
    }
    table
}

static SQ64: [bool; 64] = square_residues::<64>();
static SQ63: [bool; 63] = square_residues::<63>();
static SQ65: [bool; 65] = square_residues::<65>();
static SQ11: [bool; 11] = square_residues::<11>();

#[inline]
fn residues_allow_square(r64: usize, r63: usize, r65: usize, r11: usize) -> bool {
    SQ64[r64] && SQ63[r63] && SQ65[r65] && SQ11[r11]
}

/// Floor square root. Newton iteration from an overestimate, which decreases
/// monotonically onto the answer; a final correction pins `r² ≤ n < (r+1)²`.
pub fn isqrt(n: &Integer) -> Result<Integer> {
    if n.is_negative() {
        return Err(Error::Negative { op: "isqrt" });
    }
    if let Some(small) = n.to_u128() {
        return Ok(Integer::from(isqrt_u128(small)));
    }
    let mut x = Integer::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            break;
        }
        x = y;
    }
    while &x * &x > *n {
        x -= 1u32;
    }
    loop {
        let next = &x + 1u32;
        if &next * &next > *n {
            break;
        }
        x = next;
    }
    Ok(x)
}

pub fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    // f64 gets within a few ulps; fix up exactly.
    let mut r = (n as f64).sqrt() as u128;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

/// Square root of `n` when `n` is a perfect square.
pub fn perfect_square(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    if let Some(small) = n.to_u128() {
        return perfect_square_u128(small).map(Integer::from);
    }
    let low = |m: u32| (n % m).to_usize().unwrap_or(0);
    if !residues_allow_square(low(64), low(63), low(65), low(11)) {
        return None;
    }
    let r = isqrt(n).ok()?;
    (&r * &r == *n).then_some(r)
}

#[inline]
pub fn perfect_square_u128(n: u128) -> Option<u128> {
    if !residues_allow_square(
        (n & 63) as usize,
        (n % 63) as usize,
        (n % 65) as usize,
        (n % 11) as usize,
    ) {
        return None;
    }
    let r = isqrt_u128(n);
    (r * r == n).then_some(r)
}

#[inline]
pub fn perfect_square_u64(n: u64) -> Option<u64> {
    if !residues_allow_square(
        (n & 63) as usize,
        (n % 63) as usize,
        (n % 65) as usize,
        (n % 11) as usize,
    ) {
        return None;
    }
    let mut r = (n as f64).sqrt() as u64;
    // f64 rounding can be off by one near 2^64
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    (r * r == n).then_some(r)
}

/// Non-negative rational square root, when one exists.
pub fn rational_square_root(r: &Rational) -> Option<Rational> {
    let num = perfect_square(r.numer())?;
    let den = perfect_square(r.denom())?;
    Some(Rational::new(num, den))
}

const SMALL_PRIME_LIMIT: u32 = 1 << 16;

fn small_primes() -> &'static [u32] {
    static PRIMES: std::sync::OnceLock<Vec<u32>> = std::sync::OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = SMALL_PRIME_LIMIT as usize;
        let mut composite = vec![false; limit];
        let mut primes = Vec::new();
        for i in 2..limit {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j < limit {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

// Deterministic for n < 3.3e24 with these bases; beyond that a strong
// probable-prime test.
const MR_BASES: [u32; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

pub fn is_probable_prime(n: &Integer) -> bool {
    if *n < int(2) {
        return false;
    }
    for &p in small_primes().iter().take(64) {
        if *n == Integer::from(p) {
            return true;
        }
        if (n % p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &a in &MR_BASES {
        let mut x = Integer::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Brent's variant of Pollard rho on a word-sized composite. Gives up after
/// roughly `budget` iterations.
fn rho_u64(n: u64, c: u64, budget: u64) -> Option<u64> {
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let f = |x: u64| ((mulmod(x, x) as u128 + c as u128) % n as u128) as u64;
    let (mut x, mut y, mut ys) = (2u64, 2u64, 2u64);
    let mut q = 1u64;
    let mut g = 1u64;
    let mut r = 1u64;
    const BATCH: u64 = 128;
    while g == 1 {
        if r > budget {
            return None;
        }
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mulmod(q, x.abs_diff(y));
            }
            g = gcd_u64(q, n);
            k += BATCH;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = gcd_u64(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn rho_big(n: &Integer, c: u32, budget: u64) -> Option<Integer> {
    let f = |x: &Integer| (x * x + c) % n;
    let (mut x, mut y, mut ys) = (int(2), int(2), int(2));
    let mut q = Integer::one();
    let mut g = Integer::one();
    let mut r: u64 = 1;
    const BATCH: u64 = 128;
    while g.is_one() {
        if r > budget {
            return None;
        }
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..BATCH.min(r - k) {
                y = f(&y);
                q = (q * (&x - &y).abs()) % n;
            }
            g = q.gcd(n);
            k += BATCH;
        }
        r *= 2;
    }
    if g == *n {
        loop {
            ys = f(&ys);
            g = (&x - &ys).abs().gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}

fn to_u256(n: &Integer) -> U256 {
    let (_, bytes) = n.to_bytes_be();
    let mut buf = [0u8; 32];
    buf[32 - bytes.len()..].copy_from_slice(&bytes);
    U256::from_be_bytes(buf)
}

fn from_u256(x: &U256) -> Integer {
    BigInt::from_bytes_be(Sign::Plus, &x.to_be_bytes())
}

/// [`rho_big`] in 256-bit Montgomery arithmetic, for odd `n < 2²⁵⁶`.
fn rho_mont(n: &Integer, c: u32, budget: u64) -> Option<Integer> {
    let params = DynResidueParams::new(&to_u256(n));
    let cc = DynResidue::new(&U256::from_u32(c), params);
    let f = |x: &DynResidue<{ U256::LIMBS }>| x.square() + cc;
    let gcd_n = |x: DynResidue<{ U256::LIMBS }>| from_u256(&x.retrieve()).gcd(n);
    let two = DynResidue::new(&U256::from_u8(2), params);
    let (mut x, mut y, mut ys) = (two, two, two);
    let mut q = DynResidue::one(params);
    let mut g = Integer::one();
    let mut r: u64 = 1;
    const BATCH: u64 = 128;
    while g.is_one() {
        if r > budget {
            return None;
        }
        x = y;
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(&y);
                q *= x - y;
            }
            g = gcd_n(q);
            k += BATCH;
        }
        r *= 2;
    }
    if g == *n {
        loop {
            ys = f(&ys);
            g = gcd_n(x - ys);
            if !g.is_one() {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}

/// Finds a nontrivial divisor of a composite `n`, or `None` once the
/// iteration budget is spent.
fn split_composite(n: &Integer, budget: Option<u64>) -> Option<Integer> {
    if let Some(r) = perfect_square(n) {
        return Some(r);
    }
    if n.is_even() {
        return Some(int(2));
    }
    let montgomery = n.bits() <= 256;
    // Each restart doubles the per-attempt allowance.
    let mut allowance = 1u64 << 12;
    let mut spent = 0u64;
    for c in 1u32.. {
        let cap = match budget {
            Some(b) if spent >= b => return None,
            Some(b) => allowance.min(b - spent),
            None => allowance,
        };
        let found = match n.to_u64() {
            Some(small) => rho_u64(small, c as u64, cap).map(Integer::from),
            None if montgomery => rho_mont(n, c, cap),
            None => rho_big(n, c, cap),
        };
        if found.is_some() {
            return found;
        }
        spent += cap;
        allowance = allowance.saturating_mul(2);
    }
    unreachable!()
}

/// Result of a factorisation that may have stopped early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// Prime factors found, ascending, with multiplicity.
    pub primes: Vec<(Integer, u32)>,
    /// Product of the composite cofactors left unsplit; coprime to every
    /// prime in `primes`. `1` when complete.
    pub unresolved: Integer,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.unresolved.is_one()
    }

    /// The square dividing `n` contributed by the primes found.
    pub fn square_part(&self) -> Integer {
        self.primes
            .iter()
            .fold(Integer::one(), |acc, (p, e)| acc * p.pow(e - e % 2))
    }
}

/// Factors `|n|` by trial division below 2¹⁶ and then Pollard rho, spending
/// at most `budget` rho iterations per composite cofactor (`None` = no limit).
///
/// # Panics
///
/// Panics if `n` is zero.
pub fn factorize_bounded(n: &Integer, budget: Option<u64>) -> Factorization {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut rest = n.abs();
    let mut primes: Vec<(Integer, u32)> = Vec::new();
    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let pb = Integer::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            primes.push((pb, e));
        }
    }
    let mut stack = vec![rest];
    let mut large: Vec<Integer> = Vec::new();
    let mut stuck: Vec<Integer> = Vec::new();
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            large.push(m);
            continue;
        }
        match split_composite(&m, budget) {
            Some(d) => {
                let cofactor = &m / &d;
                stack.push(d);
                stack.push(cofactor);
            }
            None => stuck.push(m),
        }
    }
    large.sort();
    for p in large {
        match primes.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => primes.push((p, 1)),
        }
    }
    let mut unresolved = Integer::one();
    for mut m in stuck {
        for (p, e) in primes.iter_mut() {
            while (&m % &*p).is_zero() {
                m /= &*p;
                *e += 1;
            }
        }
        unresolved *= m;
    }
    Factorization { primes, unresolved }
}

/// Complete prime factorisation of `|n|`, ascending. Intended for desk-scale
/// inputs: a cofactor with two large prime factors can take a long time.
///
/// # Panics
///
/// Panics if `n` is zero.
pub fn factorize(n: &Integer) -> Vec<(Integer, u32)> {
    factorize_bounded(n, None).primes
}

/// Largest perfect square dividing `n`.
///
/// # Panics
///
/// Panics if `n` is zero.
pub fn largest_square_divisor(n: &Integer) -> Integer {
    factorize_bounded(n, None).square_part()
}

pub fn is_squarefree(n: &Integer) -> bool {
    factorize(n).iter().all(|(_, e)| *e == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn montgomery_rho_splits_wide_composites() {
        // (2^89 - 1) is prime; the product is ~150 bits
        let m89 = (int(1) << 89) - 1;
        let n = int(1_000_000_007) * int(998_244_353) * &m89;
        let d = rho_mont(&n, 1, 1 << 20).expect("split");
        assert!(!d.is_one() && d != n && (&n % &d).is_zero());
        let f = factorize(&n);
        assert_eq!(f, vec![(int(998_244_353), 1), (int(1_000_000_007), 1), (m89, 1)]);
        // both rho variants agree on what divides
        let e = rho_big(&n, 1, 1 << 20).expect("split");
        assert!((&n % &e).is_zero());
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&int(0)).unwrap(), int(0));
        assert_eq!(isqrt(&int(35)).unwrap(), int(5));
        assert_eq!(isqrt(&int(5313025)).unwrap(), int(2305));
        assert_eq!(int(2305) * int(2305), int(5313025));
        assert!(matches!(isqrt(&int(-1)), Err(Error::Negative { .. })));
    }

    #[test]
    fn isqrt_big_values() {
        let r: Integer = "123456789012345678901234567890123".parse().unwrap();
        let sq = &r * &r;
        assert_eq!(isqrt(&sq).unwrap(), r);
        assert_eq!(isqrt(&(&sq - 1u32)).unwrap(), &r - 1u32);
        assert_eq!(isqrt(&(&sq + &r + &r)).unwrap(), r);
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(perfect_square(&int(361)), Some(int(19)));
        assert_eq!(perfect_square(&int(362)), None);
        assert_eq!(perfect_square(&int(-4)), None);
        assert_eq!(perfect_square(&int(0)), Some(int(0)));
    }

    #[test]
    fn residue_filter_never_rejects_a_square() {
        for r in 0u128..5000 {
            assert_eq!(perfect_square_u128(r * r), Some(r));
            assert_eq!(perfect_square_u64((r * r) as u64), Some(r as u64));
        }
        let top = u32::MAX as u64;
        assert_eq!(perfect_square_u64(top * top), Some(top));
        assert_eq!(perfect_square_u64(top * top - 1), None);
        let big = (Integer::one() << 200u32) + 12345u32;
        assert_eq!(perfect_square(&(&big * &big)), Some(big));
    }

    #[test]
    fn rational_roots() {
        assert_eq!(rational_square_root(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_square_root(&rat_int(2)), None);
        assert_eq!(rational_square_root(&rat_int(0)), Some(rat_int(0)));
        assert_eq!(rational_square_root(&rat(-9, 4)), None);
    }

    #[test]
    fn square_divisor_examples() {
        assert_eq!(largest_square_divisor(&int(4)), int(4));
        assert_eq!(largest_square_divisor(&int(12)), int(4));
        assert_eq!(largest_square_divisor(&int(7)), int(1));
        assert_eq!(largest_square_divisor(&int(1)), int(1));
    }

    #[test]
    fn factors_with_large_primes() {
        // 19352423 and 102871 are beyond the trial-division table.
        let n = int(19352423) * int(19352423) * int(102871) * int(31);
        let f = factorize(&n);
        assert_eq!(
            f,
            vec![(int(31), 1), (int(102871), 1), (int(19352423), 2)]
        );
        assert_eq!(largest_square_divisor(&n), int(19352423) * int(19352423));
        // two primes above 2^64 together
        let p: Integer = "18446744073709551629".parse().unwrap();
        let q: Integer = "1000000007".parse().unwrap();
        assert_eq!(factorize(&(&p * &q)), vec![(q, 1), (p, 1)]);
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_integer("-42").unwrap(), int(-42));
        assert!(parse_integer("+42").is_err());
        assert!(parse_integer("1_000").is_err());
        assert!(parse_integer("").is_err());
        assert_eq!(parse_rational("6/-4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert!(parse_rational("1/0").is_err());
        assert_eq!(rat(-3, 2).to_string(), "-3/2");
        assert_eq!(rat(4, 2).to_string(), "2");
    }

    #[test]
    fn primality() {
        let primes = [2, 3, 65537, 1_000_000_007];
        for p in primes {
            assert!(is_probable_prime(&int(p)), "{p}");
        }
        for c in [1, 4, 561, 1_000_000_007 * 3] {
            assert!(!is_probable_prime(&int(c)), "{c}");
        }
    }
}
