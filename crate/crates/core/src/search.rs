//! Exhaustive search for square-reduced triads with `a + b + c < max_sum`.
//!
//! The sum must itself be a square, so the outer loop runs over `u` with
//! `s = u² < max_sum` and only splits of `s` are examined. Shards are single
//! values of `u`; results are merged and sorted, so the output does not
//! depend on the number of worker threads.

use num_integer::Integer as _;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{isqrt, largest_square_divisor, perfect_square, perfect_square_u64, Integer};
use crate::verify::{Certificate, Triad};

/// Up to this bound every sum of cubes fits in a `u64`
/// (`3 · (10⁶)³ < 2⁶⁴`).
pub const FAST_PATH_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub triad: Triad,
    pub certificate: Certificate,
}

/// Arithmetic used in the inner loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kernel {
    /// `u64` when `max_sum ≤ FAST_PATH_LIMIT`, big integers otherwise.
    Auto,
    /// Always big integers.
    BigInt,
}

/// All square-reduced triads `a ≤ b ≤ c` with `a + b + c < max_sum` whose
/// sum, sum of squares and sum of cubes are squares, sorted by
/// `(sum, a, b)`.
pub fn search(max_sum: u64, jobs: usize) -> Result<Vec<SearchHit>> {
    search_with_kernel(max_sum, jobs, Kernel::Auto)
}

pub fn search_with_kernel(max_sum: u64, jobs: usize, kernel: Kernel) -> Result<Vec<SearchHit>> {
    if max_sum < 3 {
        return Err(Error::InvalidArgument(format!("max_sum must be at least 3, got {max_sum}")));
    }
    if jobs == 0 {
        return Err(Error::InvalidArgument("jobs must be at least 1".into()));
    }
    let u_max = isqrt(&Integer::from(max_sum - 1))?.to_u64().expect("fits");
    // smallest admissible sum is 3, so u starts at 2
    let shards: Vec<u64> = (2..=u_max).collect();
    let fast = kernel == Kernel::Auto && max_sum <= FAST_PATH_LIMIT;
    let run = |u: &u64| -> Vec<SearchHit> {
        if fast {
            shard_u64(*u)
        } else {
            shard_big(*u)
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let mut hits: Vec<SearchHit> =
        pool.install(|| shards.par_iter().flat_map_iter(run).collect());
    hits.sort_by(|x, y| {
        (x.triad.sum(), x.triad.a(), x.triad.b()).cmp(&(y.triad.sum(), y.triad.a(), y.triad.b()))
    });
    Ok(hits)
}

fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    a.gcd(&b).gcd(&c)
}

fn square_reduced(g: u64) -> bool {
    g == 1 || largest_square_divisor(&Integer::from(g)) == Integer::from(1)
}

fn shard_u64(u: u64) -> Vec<SearchHit> {
    let s = u * u;
    let mut out = Vec::new();
    for a in 1..=s / 3 {
        let a2 = a * a;
        let a3 = a2 * a;
        for b in a..=(s - a) / 2 {
            let c = s - a - b;
            let Some(v) = perfect_square_u64(a2 + b * b + c * c) else {
                continue;
            };
            let Some(w) = perfect_square_u64(a3 + b * b * b + c * c * c) else {
                continue;
            };
            if !square_reduced(gcd3(a, b, c)) {
                continue;
            }
            out.push(SearchHit {
                triad: Triad::from_u64(a, b, c).expect("positive"),
                certificate: Certificate { u: u.into(), v: v.into(), w: w.into() },
            });
        }
    }
    out
}

fn shard_big(u: u64) -> Vec<SearchHit> {
    let s = u * u;
    let mut out = Vec::new();
    for a in 1..=s / 3 {
        let ab = Integer::from(a);
        let a2 = &ab * &ab;
        let a3 = &a2 * &ab;
        for b in a..=(s - a) / 2 {
            let c = s - a - b;
            let (bb, cb) = (Integer::from(b), Integer::from(c));
            let Some(v) = perfect_square(&(&a2 + &bb * &bb + &cb * &cb)) else {
                continue;
            };
            let Some(w) = perfect_square(&(&a3 + &bb * &bb * &bb + &cb * &cb * &cb)) else {
                continue;
            };
            if !square_reduced(gcd3(a, b, c)) {
                continue;
            }
            out.push(SearchHit {
                triad: Triad::new(ab.clone(), bb, cb).expect("positive"),
                certificate: Certificate { u: u.into(), v, w },
            });
        }
    }
    out
}
