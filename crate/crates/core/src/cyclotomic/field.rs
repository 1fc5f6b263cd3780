//! Cyclotomic polynomials and the per-conductor field context.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;

/// Arithmetic context for `Q(ζ_n)`: `φ(n)` and the monic
/// integer polynomial `Φ_n` (lowest degree first, length `φ(n) + 1`).
#[derive(Debug)]
pub(crate) struct FieldContext {
    pub degree: usize,
    pub modulus: Vec<i64>,
}

static CACHE: OnceLock<RwLock<HashMap<u32, Arc<FieldContext>>>> = OnceLock::new();

/// Returns the (cached) context for conductor `n`.
pub(crate) fn context(n: u32) -> Arc<FieldContext> {
    assert!(n > 0, "conductor must be positive");
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(ctx) = cache.read().expect("field cache poisoned").get(&n) {
        return Arc::clone(ctx);
    }
    let modulus = cyclotomic_polynomial(n);
    let ctx = Arc::new(FieldContext {
        degree: modulus.len() - 1,
        modulus,
    });
    // Concurrent inserts compute the same polynomial; whichever lands first wins.
    let mut guard = cache.write().expect("field cache poisoned");
    Arc::clone(guard.entry(n).or_insert(ctx))
}

/// Euler's totient.
pub fn totient(n: u32) -> usize {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// `Φ_n` as `(x^n - 1) / Π_{d | n, d < n} Φ_d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        let divisor = if d == 1 {
            vec![-1, 1]
        } else {
            context(d).modulus.clone()
        };
        poly = exact_div_monic(&poly, &divisor);
    }
    poly
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}
