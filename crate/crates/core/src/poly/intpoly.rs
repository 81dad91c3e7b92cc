//! Kernels on integer coefficient vectors (ascending, no trailing zeros).

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::exactnum::Integer;

fn trim(v: &mut Vec<Integer>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Content (signed so the primitive part has positive leading coefficient)
/// and primitive part.
pub(super) fn primitive(mut v: Vec<Integer>) -> (Integer, Vec<Integer>) {
    trim(&mut v);
    let Some(lead) = v.last() else {
        return (Integer::zero(), v);
    };
    let mut content = v.iter().fold(Integer::zero(), |g, c| g.gcd(c));
    if lead.is_negative() {
        content = -content;
    }
    if !content.is_one() {
        for c in v.iter_mut() {
            *c /= &content;
        }
    }
    (content, v)
}

pub(super) fn mul(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Integer::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Pseudo-remainder of `f` by `g` (`g` nonzero): `lc(g)^k · f mod g` for
/// some k, computed without fractions.
fn prem(f: &[Integer], g: &[Integer]) -> Vec<Integer> {
    let dg = g.len() - 1;
    let lc = &g[dg];
    let mut r = f.to_vec();
    trim(&mut r);
    let mut steps = 0u32;
    while r.len() > dg {
        steps += 1;
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        if !lc.is_one() {
            for c in r.iter_mut() {
                *c *= lc;
            }
        }
        for (i, gi) in g.iter().enumerate() {
            r[dr - dg + i] -= &lr * gi;
        }
        debug_assert!(r[dr].is_zero());
        trim(&mut r);
        // Pull out content now and then to curb growth inside long divisions.
        if steps.is_multiple_of(8) && r.len() > dg {
            r = primitive(r).1;
        }
    }
    r
}

/// Primitive gcd over ℤ of two nonzero primitive polynomials.
pub(super) fn gcd(a: Vec<Integer>, b: Vec<Integer>) -> Vec<Integer> {
    let (mut f, mut g) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    while !g.is_empty() {
        if g.len() == 1 {
            return vec![Integer::one()];
        }
        let r = prem(&f, &g);
        f = g;
        g = primitive(r).1;
    }
    primitive(f).1
}
