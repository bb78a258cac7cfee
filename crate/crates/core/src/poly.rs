//! Dense integer polynomials and the characteristic polynomials of the
//! `U`-recurrence.
//!
//! `C_n` and `D_n` are built from their explicit coefficient formulas; the
//! product-of-cosines descriptions are certified only through exact identities
//! with the Chebyshev polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{binom_int, divisors, int, mobius, rat, sign_pow, to_integer, BigInt};
use crate::coeffs::{coeff_row, CoeffKind};
use crate::error::{precondition, Error, Result};
use crate::report::CheckReport;

/// Integer polynomial, coefficients in ascending degree with no trailing
/// zeros. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly::default()
    }

    pub fn one() -> IntPoly {
        IntPoly::from_i64(&[1])
    }

    /// The monomial `x`.
    pub fn x() -> IntPoly {
        IntPoly::from_i64(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(c·x²)`.
    pub fn subst_scaled_square(&self, c: i64) -> IntPoly {
        let mut out = vec![BigInt::zero(); 2 * self.coeffs.len()];
        let mut pow = BigInt::one();
        for (j, a) in self.coeffs.iter().enumerate() {
            out[2 * j] = a * &pow;
            pow *= c;
        }
        IntPoly::new(out)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Quotient `q` with `self = divisor · q`; fails unless the division is
    /// exact over the integers.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let not_divisible = || Error::NotDivisible {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let lead = divisor
            .leading()
            .ok_or_else(|| Error::Precondition("division by the zero polynomial".to_string()))?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return if self.is_zero() {
                Ok(IntPoly::zero())
            } else {
                Err(not_divisible())
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(not_divisible());
        }
        Ok(IntPoly::new(quot))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Chebyshev `T_n` from the explicit sum
/// `T_n(x) = (n/2) Σ_{i ≤ n/2} (−1)^i (n−1−i)!/(i!(n−2i)!) (2x)^{n−2i}`.
pub fn cheb_t(n: u32) -> IntPoly {
    if n == 0 {
        return IntPoly::one();
    }
    let ni = i64::from(n);
    let mut coeffs = vec![BigInt::zero(); n as usize + 1];
    for i in 0..=ni / 2 {
        // (n−1−i)!/(i!(n−2i)!) = C(n−i, i)/(n−i)
        let c = rat(ni, 2 * (ni - i)) * int(binom_int(ni - i, i) << (ni - 2 * i) as usize);
        let c = to_integer(&c).expect("Chebyshev coefficients are integral");
        coeffs[(ni - 2 * i) as usize] = c * sign_pow(i);
    }
    IntPoly::new(coeffs)
}

/// Chebyshev `U_n` (degree `n`) from `U_n(x) = Σ_{i ≤ n/2} (−1)^i C(n−i, i) (2x)^{n−2i}`.
pub fn cheb_u(n: u32) -> IntPoly {
    let ni = i64::from(n);
    let mut coeffs = vec![BigInt::zero(); n as usize + 1];
    for i in 0..=ni / 2 {
        coeffs[(ni - 2 * i) as usize] =
            (binom_int(ni - i, i) << (ni - 2 * i) as usize) * sign_pow(i);
    }
    IntPoly::new(coeffs)
}

/// `C_n(x) = Σ_{i=0}^{⌊(n−1)/2⌋} (−1)^i C(n−1−i, i) x^{⌊(n−1)/2⌋−i}`.
pub fn c_poly(n: u32) -> Result<IntPoly> {
    precondition(n >= 1, || "C_n needs n >= 1".to_string())?;
    let ni = i64::from(n);
    let top = (ni - 1) / 2;
    let mut coeffs = vec![BigInt::zero(); top as usize + 1];
    for i in 0..=top {
        coeffs[(top - i) as usize] = binom_int(ni - 1 - i, i) * sign_pow(i);
    }
    Ok(IntPoly::new(coeffs))
}

/// `D_n(x) = Σ_{i=0}^{⌊n/2⌋} (−1)^i n/(n−i) C(n−i, i) x^{⌊n/2⌋−i}`.
pub fn d_poly(n: u32) -> Result<IntPoly> {
    precondition(n >= 1, || "D_n needs n >= 1".to_string())?;
    let ni = i64::from(n);
    let top = ni / 2;
    let mut coeffs = vec![BigInt::zero(); top as usize + 1];
    for i in 0..=top {
        let c = to_integer(&(rat(ni, ni - i) * int(binom_int(ni - i, i))))?;
        coeffs[(top - i) as usize] = c * sign_pow(i);
    }
    Ok(IntPoly::new(coeffs))
}

/// Characteristic polynomial of the `U`-recurrence of order `⌊m/2⌋`:
/// `(x − 4)·C_m(x)` for even `m`, `D_m(x)` for odd `m`.
pub fn f_char(m: u32) -> Result<IntPoly> {
    precondition(m >= 1, || "f_m needs m >= 1".to_string())?;
    if m.is_multiple_of(2) {
        Ok(&IntPoly::from_i64(&[-4, 1]) * &c_poly(m)?)
    } else {
        d_poly(m)
    }
}

/// `A_n = Π_{d | n} C_d^{μ(n/d)}`, as one exact division of the `μ = +1`
/// product by the `μ = −1` product.
pub fn a_poly(n: u32) -> Result<IntPoly> {
    precondition(n >= 1, || "A_n needs n >= 1".to_string())?;
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for d in divisors(u64::from(n)) {
        match mobius(u64::from(n) / d) {
            1 => num = &num * &c_poly(d as u32)?,
            -1 => den = &den * &c_poly(d as u32)?,
            _ => {}
        }
    }
    num.exact_div(&den)
}

fn record_poly_eq(
    report: &mut CheckReport,
    inputs: impl Fn() -> String,
    lhs: &IntPoly,
    rhs: &IntPoly,
) {
    let n = lhs.coeffs().len().max(rhs.coeffs().len());
    let first_diff = (0..n).find(|&i| lhs.coeff(i) != rhs.coeff(i));
    let (a, b) = match first_diff {
        Some(i) => (int(lhs.coeff(i)), int(rhs.coeff(i))),
        None => (int(0), int(0)),
    };
    report.record(first_diff.is_none(), inputs, a, b, || {
        Some(format!(
            "first difference at x^{}: {lhs} vs {rhs}",
            first_diff.unwrap_or(0)
        ))
    });
}

/// For even `n`: `2·T_n(x) = D_n(4x²)` and `U_{n−1}(x) = 2x·C_n(4x²)`;
/// for odd `n`: `T_n(x) = x·D_n(4x²)` and `U_{n−1}(x) = C_n(4x²)`.
pub fn cheb_relation_check(n: u32) -> Result<CheckReport> {
    precondition(n >= 1, || "needs n >= 1".to_string())?;
    let t = cheb_t(n);
    let u = cheb_u(n - 1);
    let d4 = d_poly(n)?.subst_scaled_square(4);
    let c4 = c_poly(n)?.subst_scaled_square(4);
    let mut report = CheckReport::new(format!("n={n}"));
    if n.is_multiple_of(2) {
        record_poly_eq(
            &mut report,
            || format!("n={n}: 2T_n = D_n(4x^2)"),
            &t.scale(&2.into()),
            &d4,
        );
        let two_x = IntPoly::from_i64(&[0, 2]);
        record_poly_eq(
            &mut report,
            || format!("n={n}: U_(n-1) = 2x C_n(4x^2)"),
            &u,
            &(&two_x * &c4),
        );
    } else {
        record_poly_eq(
            &mut report,
            || format!("n={n}: T_n = x D_n(4x^2)"),
            &t,
            &(&IntPoly::x() * &d4),
        );
        record_poly_eq(
            &mut report,
            || format!("n={n}: U_(n-1) = C_n(4x^2)"),
            &u,
            &c4,
        );
    }
    Ok(report)
}

/// `C_n = Π_{d | n} A_d`.
pub fn factorization_check(n: u32) -> Result<CheckReport> {
    let product = divisors(u64::from(n))
        .into_iter()
        .try_fold(IntPoly::one(), |acc, d| {
            Ok::<_, Error>(&acc * &a_poly(d as u32)?)
        })?;
    let mut report = CheckReport::new(format!("n={n}"));
    record_poly_eq(
        &mut report,
        || format!("n={n}: C_n = prod A_d"),
        &c_poly(n)?,
        &product,
    );
    Ok(report)
}

/// `f_m`, read from the top coefficient down, is `1, −a_m(1), +a_m(2), …`.
pub fn f_char_coeff_check(m: u32) -> Result<CheckReport> {
    let f = f_char(m)?;
    let a = coeff_row(m, CoeffKind::A)?;
    let order = (m / 2) as usize;
    let mut expected = vec![BigInt::zero(); order + 1];
    for i in 0..=order {
        expected[order - i] = a.get(i).expect("row covers the order") * sign_pow(i as i64);
    }
    let mut report = CheckReport::new(format!("m={m}"));
    record_poly_eq(
        &mut report,
        || format!("m={m}: f_m vs a_m"),
        &f,
        &IntPoly::new(expected),
    );
    Ok(report)
}

/// The polynomial layer over `m ≤ m_max` (characteristic polynomials),
/// `n ≤ factor_max` (factorization) and `n ≤ cheb_max` (Chebyshev relations).
pub fn poly_sweep(m_lo: u32, m_max: u32, factor_max: u32, cheb_max: u32) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!(
        "f_m for m in [{m_lo},{m_max}], C_n factorization for n <= {factor_max}, Chebyshev n <= {cheb_max}"
    ));
    for m in m_lo..=m_max {
        report.absorb(f_char_coeff_check(m)?);
    }
    for n in 1..=factor_max {
        report.absorb(factorization_check(n)?);
    }
    for n in 1..=cheb_max {
        report.absorb(cheb_relation_check(n)?);
    }
    Ok(report)
}
