//! Exact integers and rationals plus the number-theoretic primitives the rest
//! of the crate is built on.
//!
//! `BigRat` is `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator after each operation.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{precondition, Error, Result};

pub use num_bigint::BigInt;
pub use num_rational::BigRational as BigRat;

/// Integer `n` as a rational.
pub fn int(n: impl Into<BigInt>) -> BigRat {
    BigRat::from_integer(n.into())
}

/// The rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(num.into(), den.into())
}

/// `⌊x⌋`.
pub fn floor(x: &BigRat) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// Fractional part `x − ⌊x⌋`, always in `[0, 1)`.
pub fn frac(x: &BigRat) -> BigRat {
    x - int(floor(x))
}

/// `(−1)^e` for any integer exponent.
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `(−1)^e` for a big exponent.
pub fn sign_pow_big(e: &BigInt) -> i64 {
    if e.is_even() {
        1
    } else {
        -1
    }
}

/// `base^exp` as an exact rational; negative exponents allowed for nonzero base.
pub fn pow_rat(base: &BigRat, exp: i64) -> BigRat {
    let mag = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        mag.recip()
    } else {
        mag
    }
}

/// `2^e` for any integer `e`.
pub fn pow2(e: i64) -> BigRat {
    pow_rat(&int(2), e)
}

/// Generalized binomial `x(x−1)…(x−n+1)/n!`, with `binom(x, 0) = 1`.
pub fn binom_general(x: &BigRat, n: u32) -> BigRat {
    let mut acc = BigRat::one();
    for i in 0..n {
        acc *= x - int(i);
        acc /= int(i + 1);
    }
    acc
}

/// Binomial coefficient for integers: zero unless `0 ≤ k ≤ n`.
pub fn binom_int(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = binom(n, i) here, so the division is exact.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The `i`-th Catalan number `binom(2i, i)/(i+1)`.
pub fn catalan(i: u32) -> BigInt {
    let i = i64::from(i);
    binom_int(2 * i, i) / (i + 1)
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi(a: i64, n: i64) -> Result<i8> {
    precondition(n >= 1 && n % 2 == 1, || {
        format!("Jacobi symbol needs an odd positive modulus, got {n}")
    })?;
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut sign = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn require_prime(p: u32) -> Result<()> {
    if is_prime(u64::from(p)) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

pub(crate) fn require_odd_prime(p: u32) -> Result<()> {
    require_prime(p)?;
    precondition(p != 2, || "expected an odd prime, got 2".to_string())
}

/// A p-adic valuation; zero has infinite valuation.
///
/// Ordered so that `Infinite` exceeds every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Finite(e) => write!(f, "{e}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// Largest `e` with `p^e | x`.
pub fn padic_val(x: &BigInt, p: u32) -> Result<Valuation> {
    require_prime(p)?;
    if x.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut e = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return Ok(Valuation::Finite(e));
        }
        x = q;
        e += 1;
    }
}

/// Residue of a p-integral rational modulo the prime `p`, in `[0, p)`.
pub fn mod_p_reduce(q: &BigRat, p: u32) -> Result<u32> {
    require_prime(p)?;
    let modulus = BigInt::from(p);
    let den = q.denom().mod_floor(&modulus);
    if den.is_zero() {
        return Err(Error::NotPIntegral {
            value: q.to_string(),
            p,
        });
    }
    let num = q
        .numer()
        .mod_floor(&modulus)
        .to_i64()
        .expect("residue fits");
    let den = den.to_i64().expect("residue fits");
    let inv = den.extended_gcd(&i64::from(p)).x.rem_euclid(i64::from(p));
    Ok(((num * inv) % i64::from(p)) as u32)
}

/// The three second-order sequences with seeds `0, 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecondOrder {
    /// `F_{k+2} = F_{k+1} + F_k`
    Fibonacci,
    /// `P_{k+2} = 2 P_{k+1} + P_k`
    Pell,
    /// `S_{k+2} = 4 S_{k+1} − S_k`
    S,
}

pub fn second_order(kind: SecondOrder, k: u32) -> BigInt {
    let (a, b): (i64, i64) = match kind {
        SecondOrder::Fibonacci => (1, 1),
        SecondOrder::Pell => (2, 1),
        SecondOrder::S => (4, -1),
    };
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &cur * a + &prev * b;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Möbius function by trial factorization.
pub fn mobius(n: u64) -> i8 {
    assert!(n >= 1, "mobius is defined on positive integers");
    let mut n = n;
    let mut mu = 1i8;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            mu = -mu;
        }
        d += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Converts an integral rational to `BigInt`.
pub fn to_integer(x: &BigRat) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.numer().clone())
    } else {
        Err(Error::NotInteger(x.to_string()))
    }
}
