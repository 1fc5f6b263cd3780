//! Integer polynomial remainder sequences, only what inversion in
//! `Q[x]/(Φ_n)` needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer polynomial, lowest degree first.
pub(crate) type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn scale(p: &IntPoly, c: &BigInt) -> IntPoly {
    p.iter().map(|x| x * c).collect()
}

/// `a -= c·x^shift·b`.
fn sub_scaled_shifted(a: &mut IntPoly, b: &IntPoly, c: &BigInt, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (k, bk) in b.iter().enumerate() {
        if !bk.is_zero() {
            a[k + shift] -= c * bk;
        }
    }
}

/// Pseudo-division: returns `(m, q, r)` with `m·a = q·b + r`, `deg r < deg b`
/// and `m` a power of the leading coefficient of `b`.
fn pseudo_div_rem(a: &IntPoly, b: &IntPoly) -> (BigInt, IntPoly, IntPoly) {
    let mut rem = a.clone();
    let db = b.len() - 1;
    let lead = &b[db];
    let mut mult = BigInt::one();
    let mut quot: IntPoly = vec![BigInt::zero(); rem.len().saturating_sub(db).max(1)];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let top = rem.last().unwrap().clone();
        // Scale everything by lead so the top term cancels exactly.
        if !lead.is_one() {
            rem = scale(&rem, lead);
            quot = scale(&quot, lead);
            mult *= lead;
        }
        sub_scaled_shifted(&mut rem, b, &top, shift);
        quot[shift] += &top;
        rem.pop();
        trim(&mut rem);
    }
    (mult, quot, rem)
}

fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(&mut out);
    out
}

/// Divides `r` and `s` by the gcd of all their coefficients.
fn remove_content(r: &mut IntPoly, s: &mut IntPoly) {
    let g = r.iter().chain(s.iter()).fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in r.iter_mut().chain(s.iter_mut()) {
            *c = &*c / &g;
        }
    }
}

/// `(s, c)` with `s·a ≡ c (mod modulus)` for a nonzero integer `c`, so that
/// `a^{-1} = s/c`. `None` when `a ≡ 0`.
pub(crate) fn inverse_mod(a: &[BigInt], modulus: &[i64]) -> Option<(IntPoly, BigInt)> {
    let mut a = a.to_vec();
    trim(&mut a);
    if a.is_empty() {
        return None;
    }
    let m: IntPoly = modulus.iter().map(|&c| BigInt::from(c)).collect();
    // Invariant: s_k·a ≡ r_k (mod m); both sides may be rescaled together.
    let (mut r0, mut r1) = (m, a);
    let (mut s0, mut s1): (IntPoly, IntPoly) = (Vec::new(), vec![BigInt::one()]);
    while !r1.is_empty() {
        let (mult, q, mut r2) = pseudo_div_rem(&r0, &r1);
        let mut s2 = scale(&s0, &mult);
        let qs = mul(&q, &s1);
        sub_scaled_shifted(&mut s2, &qs, &BigInt::one(), 0);
        trim(&mut s2);
        remove_content(&mut r2, &mut s2);
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // The modulus is irreducible, so the last nonzero remainder is a constant.
    if r0.len() != 1 {
        return None;
    }
    let mut c = r0.swap_remove(0);
    if c.is_negative() {
        c = -c;
        s0 = s0.into_iter().map(|x| -x).collect();
    }
    Some((s0, c))
}
