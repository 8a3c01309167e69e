//! Cyclotomic polynomials and cached reduction tables, one per conductor.
//!
//! Elements of `Q(ζ_n)` are stored in the power basis `1, ζ, …, ζ^{φ(n)-1}`.
//! Reducing an arbitrary exponent `i < n` into that basis uses the row
//! `x^i mod Φ_n`, precomputed once per conductor.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

/// Largest conductor the arithmetic will set up tables for.
pub const MAX_CONDUCTOR: u32 = 4096;

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    let g = gcd_u64(a as u64, b as u64);
    let l = (a as u64 / g) * b as u64;
    u32::try_from(l).expect("conductor lcm overflows u32")
}

pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2u32;
    while (p as u64) * (p as u64) <= m as u64 {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Coefficients of `Φ_n`, lowest degree first.
///
/// Computed by exact division of `x^n - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial of index 0");
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.as_ref().clone();
    }
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        poly = exact_div_monic(&poly, &cyclotomic_polynomial(d));
    }
    cache.write().unwrap().insert(n, Arc::new(poly.clone()));
    poly
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qn = num.len() - 1 - dn;
    let mut quot = vec![0i64; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] = rem[k + j]
                    .checked_sub(c.checked_mul(dj).expect("overflow in Φ_n"))
                    .expect("overflow in Φ_n");
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// Power-basis reduction data for a single conductor.
#[derive(Debug)]
pub struct Reducer {
    pub conductor: u32,
    pub phi: usize,
    /// `rows[i - phi]` holds `x^i mod Φ_n` for `phi <= i < n`.
    rows: Vec<Vec<i64>>,
}

impl Reducer {
    fn new(n: u32) -> Self {
        let phi_poly = cyclotomic_polynomial(n);
        let phi = phi_poly.len() - 1;
        let mut rows = Vec::with_capacity(n as usize - phi);
        // x^phi = -(Φ_n - x^phi)
        let mut cur: Vec<i64> = phi_poly[..phi].iter().map(|c| -c).collect();
        for _ in phi..n as usize {
            rows.push(cur.clone());
            // multiply by x and fold the overflow term back in
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..phi - 1]);
            if top != 0 {
                for j in 0..phi {
                    next[j] = next[j]
                        .checked_sub(top.checked_mul(phi_poly[j]).expect("reduction overflow"))
                        .expect("reduction overflow");
                }
            }
            cur = next;
        }
        Reducer {
            conductor: n,
            phi,
            rows,
        }
    }

    /// Reduce a dense exponent vector (length `n`, indices taken mod `n`) into the power basis.
    pub fn reduce(&self, dense: Vec<BigInt>) -> Vec<BigInt> {
        debug_assert_eq!(dense.len(), self.conductor as usize);
        let mut iter = dense.into_iter();
        let mut out: Vec<BigInt> = iter.by_ref().take(self.phi).collect();
        for (row, c) in self.rows.iter().zip(iter) {
            if c.is_zero() {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(row) {
                if r != 0 {
                    *o += &c * r;
                }
            }
        }
        out
    }

    /// The row for `x^i` (any `i`, reduced mod `n`) as a sparse list of `(basis index, coefficient)`.
    pub fn monomial(&self, i: u64) -> Vec<(usize, i64)> {
        let i = (i % self.conductor as u64) as usize;
        if i < self.phi {
            vec![(i, 1)]
        } else {
            self.rows[i - self.phi]
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(j, &c)| (j, c))
                .collect()
        }
    }
}

/// Shared reduction table for conductor `n`.
pub fn reducer(n: u32) -> Arc<Reducer> {
    assert!(
        (1..=MAX_CONDUCTOR).contains(&n),
        "conductor {n} outside supported range 1..={MAX_CONDUCTOR}"
    );
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Reducer>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(r) = cache.read().unwrap().get(&n) {
        return Arc::clone(r);
    }
    let built = Arc::new(Reducer::new(n));
    let mut w = cache.write().unwrap();
    Arc::clone(w.entry(n).or_insert(built))
}
