use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{divisors, euler_phi, gcd_u64, lcm_u32, reducer};
use super::Rational;

/// An exact element of the cyclotomic field `Q(ζ_n)`.
///
/// The value is stored in the power basis `1, ζ_n, …, ζ_n^{φ(n)-1}` with a
/// single positive common denominator. The representation is canonical for a
/// fixed conductor. Values whose non-constant coefficients all vanish collapse
/// to conductor 1, so every rational number has exactly one representation.
/// Comparisons between different conductors lift both sides to the lcm.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            num: vec![BigInt::zero()],
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Cyclotomic {
            conductor: 1,
            num: vec![v],
            den: BigInt::one(),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            num: vec![r.numer().clone()],
            den: r.denom().clone(),
        }
    }

    /// `E(n)^k`, stored at the reduced conductor `n / gcd(n, k)`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root of unity of order 0");
        let k = k.rem_euclid(n as i64) as u64;
        let g = gcd_u64(n as u64, k);
        let m = (n as u64 / g) as u32;
        let e = k / g;
        if m == 1 {
            return Self::one();
        }
        let mut dense = vec![BigInt::zero(); m as usize];
        dense[e as usize] = BigInt::one();
        Self::from_dense(m, dense, BigInt::one())
    }

    /// `E(n)^k + E(n)^{-k}`, the usual torus character value.
    pub fn root_cos(n: u32, k: i64) -> Self {
        &Self::root_of_unity(n, k) + &Self::root_of_unity(n, -k)
    }

    /// Exact square root of an integer, built from quadratic Gauss sums.
    ///
    /// Negative radicands give the root with positive imaginary part.
    pub fn sqrt_int(m: i64) -> Self {
        if m == 0 {
            return Self::zero();
        }
        let mut rest = m.unsigned_abs();
        let mut outside = BigInt::one();
        let mut result = Self::one();
        let mut p = 2u64;
        while p * p <= rest {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            if e > 0 {
                outside *= BigInt::from(p).pow(e / 2);
                if e % 2 == 1 {
                    result = &result * &Self::sqrt_prime(p);
                }
            }
            p += 1;
        }
        if rest > 1 {
            result = &result * &Self::sqrt_prime(rest);
        }
        if m < 0 {
            result = &result * &Self::root_of_unity(4, 1);
        }
        result.scale_int(&outside)
    }

    fn sqrt_prime(p: u64) -> Self {
        if p == 2 {
            return Self::root_cos(8, 1);
        }
        let n = u32::try_from(p).expect("radicand prime too large");
        let mut dense = vec![BigInt::zero(); n as usize];
        for k in 1..p {
            dense[k as usize] = BigInt::from(legendre(k, p));
        }
        let gauss = Self::from_dense(n, dense, BigInt::one());
        if p % 4 == 1 {
            gauss
        } else {
            // the Gauss sum equals i·√p here
            -(&gauss * &Self::root_of_unity(4, 1))
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.num[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    /// The value as a rational integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.den.is_one()).then(|| self.num[0].clone())
    }

    /// Nonzero coefficients as `(exponent, coefficient)`, exponents increasing.
    pub fn coefficients(&self) -> Vec<(u32, Rational)> {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, Rational::new(c.clone(), self.den.clone())))
            .collect()
    }

    /// The same value expressed at conductor `m`, which must be a multiple of the current one.
    pub fn lift(&self, m: u32) -> Self {
        assert!(
            m % self.conductor == 0,
            "cannot lift conductor {} to {m}",
            self.conductor
        );
        if m == self.conductor {
            return self.clone();
        }
        if self.conductor == 1 {
            return self.clone();
        }
        let dense = self.dense_at(m);
        Self::from_dense(m, dense, self.den.clone())
    }

    fn dense_at(&self, m: u32) -> Vec<BigInt> {
        let step = (m / self.conductor) as usize;
        let mut dense = vec![BigInt::zero(); m as usize];
        for (k, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                dense[k * step] = c.clone();
            }
        }
        dense
    }

    fn from_dense(n: u32, dense: Vec<BigInt>, den: BigInt) -> Self {
        let num = if n == 1 {
            dense
        } else {
            reducer(n).reduce(dense)
        };
        let mut out = Cyclotomic {
            conductor: n,
            num,
            den,
        };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.num.iter().all(|c| c.is_zero()) {
            g = self.den.clone();
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
        if self.conductor != 1 && self.num[1..].iter().all(|c| c.is_zero()) {
            self.num.truncate(1);
            self.conductor = 1;
        }
    }

    fn scale_int(&self, k: &BigInt) -> Self {
        let mut out = Cyclotomic {
            conductor: self.conductor,
            num: self.num.iter().map(|c| c * k).collect(),
            den: self.den.clone(),
        };
        out.normalize();
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Cyclotomic {
            conductor: self.conductor,
            num: self.num.iter().map(|c| c * r.numer()).collect(),
            den: &self.den * r.denom(),
        };
        out.normalize();
        out
    }

    /// Image under the Galois automorphism `ζ_n ↦ ζ_n^k`; `k` must be prime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        let k = k.rem_euclid(n as i64) as u64;
        assert_eq!(gcd_u64(k, n as u64), 1, "Galois exponent {k} not prime to {n}");
        let mut dense = vec![BigInt::zero(); n as usize];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                dense[((i as u64 * k) % n as u64) as usize] = c.clone();
            }
        }
        Self::from_dense(n, dense, self.den.clone())
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        self.is_rational() || *self == self.conj()
    }

    /// `a · conj(a)`, a totally nonnegative real element.
    pub fn abs_sq(&self) -> Self {
        self * &self.conj()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Double-precision image under `ζ_n ↦ exp(2πi/n)`.
    pub fn embed(&self) -> Complex64 {
        let n = self.conductor as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = Rational::new(c.clone(), self.den.clone())
                .to_f64()
                .unwrap_or(f64::NAN);
            let theta = std::f64::consts::TAU * k as f64 / n;
            acc += Complex64::new(theta.cos(), theta.sin()) * coeff;
        }
        acc
    }

    /// Absolute value in double precision.
    pub fn abs_f64(&self) -> f64 {
        if let Some(r) = self.to_rational() {
            return r.abs().to_f64().unwrap_or(f64::INFINITY);
        }
        self.embed().norm()
    }

    /// The same value at the smallest conductor that contains it.
    pub fn minimized(&self) -> Self {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        for d in divisors(n) {
            if d == n {
                break;
            }
            if d % 4 == 2 {
                // Q(ζ_d) = Q(ζ_{d/2}), already tried
                continue;
            }
            let fixed = (1..n as u64)
                .filter(|k| k % d as u64 == 1 % d as u64 && gcd_u64(*k, n as u64) == 1)
                .all(|k| self.galois(k as i64) == *self);
            if fixed {
                if let Some(v) = self.express_at(d) {
                    return v;
                }
            }
        }
        self.clone()
    }

    /// Solve for coordinates in the power basis of `Q(ζ_d)` embedded in `Q(ζ_n)`.
    fn express_at(&self, d: u32) -> Option<Self> {
        let n = self.conductor;
        let red = reducer(n);
        let phi_n = red.phi;
        let phi_d = euler_phi(d) as usize;
        let step = (n / d) as u64;
        // augmented matrix: phi_n equations, phi_d unknowns
        let mut m: Vec<Vec<Rational>> = vec![vec![Rational::zero(); phi_d + 1]; phi_n];
        for i in 0..phi_d {
            for (j, c) in red.monomial(i as u64 * step) {
                m[j][i] = Rational::from_integer(BigInt::from(c));
            }
        }
        for (j, row) in m.iter_mut().enumerate() {
            row[phi_d] = Rational::new(self.num[j].clone(), self.den.clone());
        }
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for col in 0..phi_d {
            let Some(r) = (pivot_row..phi_n).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, r);
            let inv = m[pivot_row][col].recip();
            for x in m[pivot_row].iter_mut() {
                *x *= &inv;
            }
            for r2 in 0..phi_n {
                if r2 != pivot_row && !m[r2][col].is_zero() {
                    let f = m[r2][col].clone();
                    for c in 0..=phi_d {
                        let v = &m[pivot_row][c] * &f;
                        m[r2][c] -= v;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        if m[pivot_row..].iter().any(|row| !row[phi_d].is_zero()) {
            return None;
        }
        let mut coords = vec![Rational::zero(); phi_d];
        for (r, &col) in pivots.iter().enumerate() {
            coords[col] = m[r][phi_d].clone();
        }
        let mut acc = Self::zero();
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                acc += &Self::root_of_unity(d, i as i64).scale(c);
            }
        }
        Some(acc)
    }

    /// Sum that accumulates per conductor before lifting, so that Galois-closed
    /// partial sums collapse to rationals without touching a large common field.
    pub fn sum_grouped<I: IntoIterator<Item = Cyclotomic>>(iter: I) -> Self {
        let mut buckets: Vec<Cyclotomic> = Vec::new();
        for x in iter {
            if x.is_zero() {
                continue;
            }
            match buckets.iter_mut().find(|b| b.conductor == x.conductor) {
                Some(b) => *b += &x,
                None => buckets.push(x),
            }
        }
        // rational buckets first so that the common conductor stays small
        buckets.sort_by_key(|b| b.conductor);
        let mut acc = Self::zero();
        for b in &buckets {
            acc += b;
        }
        acc
    }

    fn add_ref(&self, other: &Self, negate: bool) -> Self {
        let l = lcm_u32(self.conductor, other.conductor);
        let native = self.conductor == l && other.conductor == l;
        let width = if native { self.num.len() } else { l as usize };
        let den_l = self.den.lcm(&other.den);
        let fa = &den_l / &self.den;
        let fb = &den_l / &other.den;
        let mut acc = self.spread(width, l);
        for (a, b) in acc.iter_mut().zip(other.spread(width, l)) {
            let b = b * &fb;
            *a *= &fa;
            if negate {
                *a -= b;
            } else {
                *a += b;
            }
        }
        if native {
            let mut out = Cyclotomic {
                conductor: l,
                num: acc,
                den: den_l,
            };
            out.normalize();
            out
        } else {
            Self::from_dense(l, acc, den_l)
        }
    }

    /// Coefficients placed at exponent positions of conductor `l` in a vector of length `width`.
    fn spread(&self, width: usize, l: u32) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); width];
        let step = (l / self.conductor) as usize;
        for (k, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                out[k * step] = c.clone();
            }
        }
        out
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.conductor == 1 {
            return other.scale_raw(&self.num[0], &self.den);
        }
        if other.conductor == 1 {
            return self.scale_raw(&other.num[0], &other.den);
        }
        let l = lcm_u32(self.conductor, other.conductor);
        let a = if self.conductor == l {
            self.num.clone()
        } else {
            self.lift(l).num
        };
        let b = if other.conductor == l {
            other.num.clone()
        } else {
            other.lift(l).num
        };
        let mut dense = vec![BigInt::zero(); l as usize];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let idx = (i + j) % l as usize;
                dense[idx] += x * y;
            }
        }
        Self::from_dense(l, dense, &self.den * &other.den)
    }

    fn scale_raw(&self, num: &BigInt, den: &BigInt) -> Self {
        let mut out = Cyclotomic {
            conductor: self.conductor,
            num: self.num.iter().map(|c| c * num).collect(),
            den: &self.den * den,
        };
        out.normalize();
        out
    }
}

fn legendre(a: u64, p: u64) -> i64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    match result {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.den == other.den && self.num == other.num;
        }
        if self.conductor == 1 || other.conductor == 1 {
            return false;
        }
        let l = lcm_u32(self.conductor, other.conductor);
        let a = self.lift(l);
        let b = other.lift(l);
        a.conductor == b.conductor && a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclotomic {}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl From<BigInt> for Cyclotomic {
    fn from(v: BigInt) -> Self {
        Self::from_bigint(v)
    }
}

impl From<&Rational> for Cyclotomic {
    fn from(v: &Rational) -> Self {
        Self::from_rational(v)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render(self))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({})", super::text::render(self))
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_ref(rhs, false)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_ref(rhs, true)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.mul_ref(rhs)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        self.add_ref(&rhs, false)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        self.add_ref(&rhs, true)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        self.mul_ref(&rhs)
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_ref(rhs, false);
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_ref(rhs, true);
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.mul_ref(rhs);
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for c in &mut self.num {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -self.clone()
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        Cyclotomic::sum_grouped(iter)
    }
}
