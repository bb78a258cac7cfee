//! Residue-class binomial sums and the checks built on them.
//!
//! All sums are evaluated by direct summation over the binomial row. The
//! recurrences below only ever appear on the left-hand side of a check, never
//! as a way of computing a sum.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{
    binom_int, int, mod_p_reduce, padic_val, pow2, rat, require_odd_prime, require_prime, sign_pow,
    BigInt, BigRat, Valuation,
};
use crate::coeffs::{c_coeff, d_coeff};
use crate::error::{precondition, Result};
use crate::report::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `Σ_{k ≡ r (m)} C(n, k)`
    Plain,
    /// `Σ_{k ≡ r (m)} (−1)^{(k−r)/m} C(n, k)`
    Alternate,
    /// Plain for even `m`, alternate for odd `m`.
    Bracket,
    /// Alternate for even `m`, plain for odd `m`.
    Star,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Plain => "plain",
            Variant::Alternate => "alt",
            Variant::Bracket => "bracket",
            Variant::Star => "star",
        })
    }
}

/// A residue-class sum identified by `(n, r, m)` and its variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SumQuery {
    pub n: u32,
    pub r: i64,
    pub m: u32,
    pub variant: Variant,
}

impl SumQuery {
    pub fn new(n: u32, r: i64, m: u32, variant: Variant) -> Result<SumQuery> {
        precondition(m >= 1, || "residue sums need m >= 1".to_string())?;
        Ok(SumQuery { n, r, m, variant })
    }

    pub fn value(&self) -> BigInt {
        match self.variant {
            Variant::Plain => msum(self.n, self.r, self.m),
            Variant::Alternate => altsum(self.n, self.r, self.m),
            Variant::Bracket => bracket(self.n, self.r, self.m, false),
            Variant::Star => bracket(self.n, self.r, self.m, true),
        }
    }
}

/// `C(n, 0), …, C(n, n)`.
pub fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    for k in 0..=n {
        row.push(c.clone());
        c = c * (n - k) / (k + 1);
    }
    row
}

/// `Σ C(n, k)` over `0 ≤ k ≤ n`, `k ≡ r (mod m)`.
pub fn msum(n: u32, r: i64, m: u32) -> BigInt {
    assert!(m >= 1, "msum needs m >= 1");
    let start = r.rem_euclid(i64::from(m)) as usize;
    binomial_row(n)
        .into_iter()
        .skip(start)
        .step_by(m as usize)
        .sum()
}

/// `Σ (−1)^{(k−r)/m} C(n, k)` over `0 ≤ k ≤ n`, `k ≡ r (mod m)`.
pub fn altsum(n: u32, r: i64, m: u32) -> BigInt {
    assert!(m >= 1, "altsum needs m >= 1");
    let m_i = i64::from(m);
    let start = r.rem_euclid(m_i);
    // k = start + t·m, so (k − r)/m = t + (start − r)/m.
    let shift = (start - r) / m_i;
    binomial_row(n)
        .into_iter()
        .skip(start as usize)
        .step_by(m as usize)
        .enumerate()
        .map(|(t, c)| c * sign_pow(t as i64 + shift))
        .sum()
}

/// Parity dispatch: the non-star bracket is `msum` for even `m` and `altsum`
/// for odd `m`; the star bracket swaps the two.
pub fn bracket(n: u32, r: i64, m: u32, star: bool) -> BigInt {
    if m.is_multiple_of(2) != star {
        msum(n, r, m)
    } else {
        altsum(n, r, m)
    }
}

/// Every residue class of one row at once: `plain[r]` and `alt[r]` for
/// `0 ≤ r < m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueRow {
    pub n: u32,
    pub m: u32,
    plain: Vec<BigInt>,
    alt: Vec<BigInt>,
}

impl ResidueRow {
    pub fn new(n: u32, m: u32) -> ResidueRow {
        assert!(m >= 1, "ResidueRow needs m >= 1");
        let mut plain = vec![BigInt::zero(); m as usize];
        let mut alt = vec![BigInt::zero(); m as usize];
        for (k, c) in binomial_row(n).into_iter().enumerate() {
            let r = k % m as usize;
            if (k / m as usize).is_multiple_of(2) {
                alt[r] += &c;
            } else {
                alt[r] -= &c;
            }
            plain[r] += c;
        }
        ResidueRow { n, m, plain, alt }
    }

    pub fn msum(&self, r: i64) -> BigInt {
        self.plain[r.rem_euclid(i64::from(self.m)) as usize].clone()
    }

    pub fn altsum(&self, r: i64) -> BigInt {
        let m = i64::from(self.m);
        let base = &self.alt[r.rem_euclid(m) as usize];
        base * sign_pow(r.div_euclid(m))
    }

    pub fn bracket(&self, r: i64, star: bool) -> BigInt {
        if self.m.is_multiple_of(2) != star {
            self.msum(r)
        } else {
            self.altsum(r)
        }
    }
}

fn delta(a: i64, b: i64) -> bool {
    a == b
}

/// `Σ_{i=0}^{⌊(m−1)/2⌋} (−1)^i C(m−1−i, i) [n−2i, k−i]_m
///  = 2^{n−m+1} + δ_{m−2,n} (−1)^k / 2` for `n ≥ 2⌊(m−1)/2⌋`.
pub fn thm11_check(m: u32, k: i64, n: u32) -> Result<CheckReport> {
    let h = m.saturating_sub(1) / 2;
    precondition(m >= 1 && n >= 2 * h, || {
        format!("needs m >= 1 and n >= 2*floor((m-1)/2), got m={m}, n={n}")
    })?;
    let (mi, ni) = (i64::from(m), i64::from(n));
    let lhs: BigRat = (0..=h)
        .map(|i| {
            let ii = i64::from(i);
            int(binom_int(mi - 1 - ii, ii) * msum(n - 2 * i, k - ii, m) * sign_pow(ii))
        })
        .sum();
    let mut rhs = pow2(ni - mi + 1);
    if delta(mi - 2, ni) {
        rhs += rat(sign_pow(k), 2);
    }
    let mut report = CheckReport::new(format!("m={m}, k={k}, n={n}"));
    report.record_eq(|| format!("m={m}, k={k}, n={n}"), lhs, rhs);
    Ok(report)
}

pub fn thm11_sweep(m_max: u32, n_max: u32) -> CheckReport {
    let mut report = CheckReport::new(format!(
        "m in [1,{m_max}], n in [2*floor((m-1)/2),{n_max}], k in [-2,n+2]"
    ));
    for m in 1..=m_max {
        for n in 2 * ((m - 1) / 2)..=n_max {
            for k in -2..=i64::from(n) + 2 {
                report.absorb(thm11_check(m, k, n).expect("in range"));
            }
        }
    }
    report
}

/// The derived sequences `u_n`, `v_n` together with the check of both recurrences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cor11 {
    pub u: Vec<BigInt>,
    pub v: Vec<BigInt>,
    pub report: CheckReport,
}

/// `u_n = [n, ⌊(k+n)/2⌋]_m`, `v_n = m·u_n − 2^n − δ_{n,0} δ_{(−1)^m,1} (−1)^{⌊k/2⌋}`
/// for `0 ≤ n ≤ n_max`, with the recurrences for `u` and `v` checked at every
/// `2⌊(m−1)/2⌋ ≤ n ≤ n_max`.
pub fn cor11_sequences(m: u32, k: i64, n_max: u32) -> Result<Cor11> {
    precondition(m >= 1, || "needs m >= 1".to_string())?;
    let mi = i64::from(m);
    let u: Vec<BigInt> = (0..=n_max)
        .map(|n| msum(n, (k + i64::from(n)).div_euclid(2), m))
        .collect();
    let v: Vec<BigInt> = u
        .iter()
        .enumerate()
        .map(|(n, un)| {
            let mut vn = un * m - pow2(n as i64).to_integer();
            if n == 0 && m.is_multiple_of(2) {
                vn -= sign_pow(k.div_euclid(2));
            }
            vn
        })
        .collect();

    let h = (m - 1) / 2;
    let mut report = CheckReport::new(format!("m={m}, k={k}, n in [{},{n_max}]", 2 * h));
    for n in 2 * h..=n_max {
        let ni = i64::from(n);
        let mut lhs_u = BigRat::zero();
        let mut lhs_v = BigRat::zero();
        for i in 0..=h {
            let ii = i64::from(i);
            let coeff = binom_int(mi - 1 - ii, ii) * sign_pow(ii);
            let idx = (n - 2 * i) as usize;
            lhs_u += int(&coeff * &u[idx]);
            lhs_v += int(coeff * &v[idx]);
        }
        let mut rhs_u = pow2(ni - mi + 1);
        if delta(mi - 2, ni) {
            rhs_u -= rat(sign_pow((k + mi).div_euclid(2)), 2);
        }
        report.record_eq(
            || format!("m={m}, k={k}, n={n} (u recurrence)"),
            lhs_u,
            rhs_u,
        );
        report.record_eq(
            || format!("m={m}, k={k}, n={n} (v recurrence)"),
            lhs_v,
            BigRat::zero(),
        );
    }
    Ok(Cor11 { u, v, report })
}

pub fn cor11_sweep(m_max: u32, n_max: u32) -> CheckReport {
    let mut report = CheckReport::new(format!("m in [1,{m_max}], k in [0,2m), n <= {n_max}"));
    for m in 1..=m_max {
        for k in 0..2 * i64::from(m) {
            report.absorb(cor11_sequences(m, k, n_max).expect("m >= 1").report);
        }
    }
    report
}

/// Which of the two `c_m`/`d_m` recurrences to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thm12Variant {
    /// `Σ (−1)^i c_m(i) [n−2i, k−i]_m = 2(−1)^k δ_{m,n}`, `n ≥ 2⌊(m+1)/2⌋`.
    Plain,
    /// `Σ (−1)^i d_m(i) {n−2i, k−i}_m = (−1)^k δ_{m−1,n}`, `n ≥ 2⌊m/2⌋`.
    Alternate,
}

impl Thm12Variant {
    pub fn min_n(self, m: u32) -> u32 {
        match self {
            Thm12Variant::Plain => 2 * m.div_ceil(2),
            Thm12Variant::Alternate => 2 * (m / 2),
        }
    }
}

pub fn thm12_check(m: u32, k: i64, n: u32, which: Thm12Variant) -> Result<CheckReport> {
    precondition(m >= 1 && n >= which.min_n(m), || {
        format!("needs m >= 1 and n >= {}, got m={m}, n={n}", which.min_n(m))
    })?;
    let (mi, ni) = (i64::from(m), i64::from(n));
    let mut lhs = BigRat::zero();
    let rhs = match which {
        Thm12Variant::Plain => {
            for i in 0..=m.div_ceil(2) {
                let ii = i64::from(i);
                lhs += int(c_coeff(m, i)? * msum(n - 2 * i, k - ii, m) * sign_pow(ii));
            }
            if delta(mi, ni) {
                int(2 * sign_pow(k))
            } else {
                BigRat::zero()
            }
        }
        Thm12Variant::Alternate => {
            for i in 0..=m / 2 {
                let ii = i64::from(i);
                lhs += int(d_coeff(m, i)? * altsum(n - 2 * i, k - ii, m) * sign_pow(ii));
            }
            if delta(mi - 1, ni) {
                int(sign_pow(k))
            } else {
                BigRat::zero()
            }
        }
    };
    let mut report = CheckReport::new(format!("m={m}, k={k}, n={n}, {which:?}"));
    report.record_eq(|| format!("m={m}, k={k}, n={n}, {which:?}"), lhs, rhs);
    Ok(report)
}

pub fn thm12_sweep(m_max: u32, n_max: u32) -> CheckReport {
    let mut report = CheckReport::new(format!(
        "m in [1,{m_max}], admissible n <= {n_max}, k in [-2,n+2], both variants"
    ));
    for which in [Thm12Variant::Plain, Thm12Variant::Alternate] {
        for m in 1..=m_max {
            for n in which.min_n(m)..=n_max {
                for k in -2..=i64::from(n) + 2 {
                    report.absorb(thm12_check(m, k, n, which).expect("in range"));
                }
            }
        }
    }
    report
}

/// The monotone profile of `[n, j]_m` for `⌊(n+1)/2⌋ ≤ j ≤ ⌊(n+m)/2⌋`, `m > 2`.
///
/// For `n ≥ m − 1` the whole chain strictly decreases. Otherwise it strictly
/// decreases down to `j = n + 1` and is zero from there on. In both regimes
/// `[n, ⌊n/2⌋]_m > 2^n/m > [n, ⌊(m+n)/2⌋]_m`.
pub fn monotonicity_profile(m: u32, n: u32) -> Result<CheckReport> {
    precondition(m > 2 && n >= 1, || {
        format!("needs m > 2 and n >= 1, got m={m}, n={n}")
    })?;
    let row = ResidueRow::new(n, m);
    let (mi, ni) = (i64::from(m), i64::from(n));
    let lo = (ni + 1) / 2;
    let hi = (ni + mi) / 2;
    // Last index of the strictly decreasing part.
    let strict_end = if ni >= mi - 1 { hi } else { ni + 1 };
    let mut report = CheckReport::new(format!("m={m}, n={n}"));
    for j in lo..hi {
        let a = int(row.msum(j));
        let b = int(row.msum(j + 1));
        if j < strict_end {
            report.record(
                a > b,
                || format!("m={m}, n={n}, j={j}: strict decrease"),
                a,
                b,
                || Some("expected lhs > rhs".into()),
            );
        } else {
            let ok = a.is_zero() && b.is_zero();
            report.record(
                ok,
                || format!("m={m}, n={n}, j={j}: trailing zeros"),
                a,
                b,
                || Some("expected both zero".into()),
            );
        }
    }
    let mean = pow2(ni) / int(m);
    let top = int(row.msum(ni / 2));
    let bottom = int(row.msum((mi + ni) / 2));
    report.record(
        top > mean,
        || format!("m={m}, n={n}: upper sandwich"),
        top,
        mean.clone(),
        || Some("expected lhs > rhs".into()),
    );
    report.record(
        mean > bottom,
        || format!("m={m}, n={n}: lower sandwich"),
        mean,
        bottom,
        || Some("expected lhs > rhs".into()),
    );
    Ok(report)
}

pub fn monotonicity_sweep(m_max: u32, n_max: u32) -> CheckReport {
    let mut report = CheckReport::new(format!("m in [3,{m_max}], n in [1,{n_max}]"));
    for m in 3..=m_max {
        for n in 1..=n_max {
            report.absorb(monotonicity_profile(m, n).expect("in range"));
        }
    }
    report
}

/// Glaisher: `[n+p−1, r]_{p−1} ≡ [n, r]_{p−1} (mod p)`; Hermite for odd `n`:
/// `[n, 0]_{p−1} ≡ 1 (mod p)`. Needs `n ≥ 1`: at `n = 0`, `r = 0` the two
/// sides are 2 and 1.
pub fn hermite_glaisher_check(p: u32, n: u32, r: i64) -> Result<CheckReport> {
    require_odd_prime(p)?;
    precondition(n >= 1, || "Glaisher's congruence needs n >= 1".to_string())?;
    let m = p - 1;
    let mut report = CheckReport::new(format!("p={p}, n={n}, r={r}"));
    let shifted = int(msum(n + p - 1, r, m));
    let base = int(msum(n, r, m));
    let (a, b) = (mod_p_reduce(&shifted, p)?, mod_p_reduce(&base, p)?);
    report.record(
        a == b,
        || format!("p={p}, n={n}, r={r} (Glaisher)"),
        shifted,
        base,
        || Some(format!("{a} vs {b} mod {p}")),
    );
    if n % 2 == 1 {
        let h = int(msum(n, 0, m));
        let a = mod_p_reduce(&h, p)?;
        report.record(
            a == 1,
            || format!("p={p}, n={n} (Hermite)"),
            h,
            int(1),
            || Some(format!("{a} vs 1 mod {p}")),
        );
    }
    Ok(report)
}

pub fn hermite_glaisher_sweep(primes: &[u32], n_max: u32) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("p in {primes:?}, n in [1,{n_max}], r in [0,p-1)"));
    for &p in primes {
        for n in 1..=n_max {
            for r in 0..i64::from(p - 1) {
                report.absorb(hermite_glaisher_check(p, n, r)?);
            }
        }
    }
    Ok(report)
}

/// Fleck's divisibility instance: the signed sum, its valuation, and the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fleck {
    pub sum: BigInt,
    pub valuation: Valuation,
    pub bound: u32,
    pub report: CheckReport,
}

/// `Σ_{k ≡ r (p)} (−1)^k C(n, k)` is divisible by `p^{⌊(n−1)/(p−1)⌋}`.
pub fn fleck(p: u32, n: u32, r: i64) -> Result<Fleck> {
    require_prime(p)?;
    precondition(n >= 1, || "Fleck's congruence needs n >= 1".to_string())?;
    let start = r.rem_euclid(i64::from(p)) as usize;
    let sum: BigInt = binomial_row(n)
        .into_iter()
        .enumerate()
        .skip(start)
        .step_by(p as usize)
        .map(|(k, c)| c * sign_pow(k as i64))
        .sum();
    let valuation = padic_val(&sum, p)?;
    let bound = (n - 1) / (p - 1);
    let mut report = CheckReport::new(format!("p={p}, n={n}, r={r}"));
    report.record(
        valuation >= Valuation::Finite(bound),
        || format!("p={p}, n={n}, r={r}"),
        int(sum.clone()),
        int(BigInt::from(p).pow(bound)),
        || Some(format!("valuation {valuation} < bound {bound}")),
    );
    Ok(Fleck {
        sum,
        valuation,
        bound,
        report,
    })
}

pub fn fleck_sweep(primes: &[u32], n_max: u32) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("p in {primes:?}, n in [1,{n_max}], r in [0,p)"));
    for &p in primes {
        for n in 1..=n_max {
            for r in 0..i64::from(p) {
                report.absorb(fleck(p, n, r)?.report);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: enumerate every k and test the congruence directly.
    fn brute(n: u32, r: i64, m: u32, alternate: bool) -> BigInt {
        let (m, r) = (i64::from(m), r);
        (0..=i64::from(n))
            .filter(|k| (k - r).rem_euclid(m) == 0)
            .map(|k| {
                let c = binom_int(i64::from(n), k);
                if alternate {
                    c * sign_pow((k - r) / m)
                } else {
                    c
                }
            })
            .sum()
    }

    #[test]
    fn msum_examples() {
        assert_eq!(msum(0, 0, 3), 1.into());
        assert_eq!(msum(4, 0, 2), 8.into());
        assert_eq!(msum(5, 0, 1), 32.into());
    }

    #[test]
    fn altsum_examples() {
        assert_eq!(altsum(5, 0, 3), (-9).into());
        for n in 1..10 {
            assert_eq!(altsum(n, 0, 1), 0.into());
        }
        assert_eq!(altsum(6, 0, 4), (-14).into());
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(4, 0, 2, false), 8.into());
        assert_eq!(bracket(5, 0, 3, false), (-9).into());
        assert_eq!(bracket(5, 0, 3, true), 11.into());
        assert_eq!(
            SumQuery::new(5, 0, 3, Variant::Star).unwrap().value(),
            11.into()
        );
        assert!(SumQuery::new(5, 0, 0, Variant::Plain).is_err());
    }

    #[test]
    fn sums_match_brute_force() {
        for m in 1..=12 {
            for n in 0..=30 {
                let row = ResidueRow::new(n, m);
                for r in -30..=30 {
                    assert_eq!(msum(n, r, m), brute(n, r, m, false), "n={n} r={r} m={m}");
                    assert_eq!(altsum(n, r, m), brute(n, r, m, true), "n={n} r={r} m={m}");
                    assert_eq!(row.msum(r), msum(n, r, m));
                    assert_eq!(row.altsum(r), altsum(n, r, m));
                }
            }
        }
    }

    #[test]
    fn pascal_recursions() {
        for m in 1..=12 {
            for n in 0..40 {
                for r in 0..i64::from(m) {
                    assert_eq!(msum(n + 1, r, m), msum(n, r, m) + msum(n, r - 1, m));
                    assert_eq!(altsum(n + 1, r, m), altsum(n, r, m) + altsum(n, r - 1, m));
                }
            }
        }
    }

    #[test]
    fn row_partition_symmetry_and_periodicity() {
        for m in 1..=12u32 {
            let mi = i64::from(m);
            for n in 0..=40u32 {
                let total: BigInt = (0..mi).map(|r| msum(n, r, m)).sum();
                assert_eq!(total, BigInt::one() << n);
                for r in -mi..=2 * mi {
                    let ni = i64::from(n);
                    assert_eq!(msum(n, r + mi, m), msum(n, r, m));
                    assert_eq!(altsum(n, r + mi, m), -altsum(n, r, m));
                    assert_eq!(msum(n, ni - r, m), msum(n, r, m));
                    assert_eq!(altsum(n, ni - r, m), altsum(n, r, m));
                    assert!(msum(n, r, m) >= BigInt::zero());
                    assert_eq!(
                        bracket(n, r, m, false) + bracket(n, r, m, true),
                        2 * msum(n, r, 2 * m)
                    );
                }
            }
        }
    }

    #[test]
    fn thm11_examples() {
        // msum(2,0,4) = 1, msum(0,−1,4) = 0; RHS 1/2 + 1/2.
        let r = thm11_check(4, 0, 2).unwrap();
        assert!(r.pass());
        assert_eq!(r.instances, 1);
        assert!(thm11_check(5, 2, 4).unwrap().pass());
        for k in -3..3 {
            assert!(thm11_check(1, k, 0).unwrap().pass());
        }
        assert!(thm11_check(5, 0, 3).is_err());
    }

    #[test]
    fn cor11_examples() {
        let c = cor11_sequences(3, 0, 6).unwrap();
        assert_eq!(c.u[..4], [1, 1, 2, 3].map(BigInt::from));
        assert_eq!(c.v[..4], [2, 1, 2, 1].map(BigInt::from));
        assert!(c.report.pass());
        let c = cor11_sequences(1, 0, 10).unwrap();
        assert!(c.v.iter().all(|v| v.is_zero()));
        let c = cor11_sequences(2, 0, 5).unwrap();
        assert_eq!(c.v[0], BigInt::zero());
        assert!(c.report.pass());
    }

    #[test]
    fn thm12_examples() {
        assert!(thm12_check(2, 0, 2, Thm12Variant::Plain).unwrap().pass());
        assert!(thm12_check(2, 0, 4, Thm12Variant::Plain).unwrap().pass());
        assert!(thm12_check(3, 0, 2, Thm12Variant::Alternate)
            .unwrap()
            .pass());
        assert!(thm12_check(3, 0, 3, Thm12Variant::Plain).is_err());
        assert_eq!(msum(2, 0, 2) - 4 * msum(0, -1, 2), 2.into());
        assert_eq!(altsum(2, 0, 3) - 3 * altsum(0, -1, 3), 1.into());
    }

    #[test]
    fn monotonicity_examples() {
        assert_eq!(msum(4, 2, 3), 6.into());
        assert_eq!(msum(4, 3, 3), 5.into());
        assert!(monotonicity_profile(3, 4).unwrap().pass());
        assert_eq!(msum(2, 3, 5), 0.into());
        assert!(monotonicity_profile(5, 2).unwrap().pass());
        let r = monotonicity_profile(4, 8).unwrap();
        assert!(r.pass());
        // Two chain steps (j = 4..6) plus the two sandwich inequalities.
        assert_eq!(r.instances, 4);
        assert!(monotonicity_profile(2, 5).is_err());
    }

    #[test]
    fn hermite_glaisher_examples() {
        assert_eq!(msum(5, 0, 2), 16.into());
        assert_eq!(msum(3, 0, 2), 4.into());
        assert!(hermite_glaisher_check(3, 3, 0).unwrap().pass());
        assert!(hermite_glaisher_check(3, 5, 0).unwrap().pass());
        assert_eq!(msum(5, 2, 4), 10.into());
        assert!(hermite_glaisher_check(5, 1, 2).unwrap().pass());
        assert!(hermite_glaisher_check(2, 1, 0).is_err());
        assert!(hermite_glaisher_check(3, 0, 0).is_err());
        assert_eq!(msum(2, 0, 2), 2.into());
    }

    #[test]
    fn fleck_examples() {
        let f = fleck(3, 5, 0).unwrap();
        assert_eq!(f.sum, (-9).into());
        assert_eq!(f.valuation, Valuation::Finite(2));
        assert_eq!(f.bound, 2);
        assert!(f.report.pass());

        let f = fleck(2, 6, 0).unwrap();
        assert_eq!(f.sum, 32.into());
        assert_eq!(f.valuation, Valuation::Finite(5));
        assert!(f.report.pass());

        let f = fleck(5, 4, 1).unwrap();
        assert_eq!(f.bound, 0);
        assert!(f.report.pass());
    }

    #[test]
    fn fleck_zero_sum_passes_vacuously() {
        // No k in [0, 1] is ≡ 2 (mod 3), so the sum is empty.
        let f = fleck(3, 1, 2).unwrap();
        assert_eq!(f.sum, BigInt::zero());
        assert_eq!(f.valuation, Valuation::Infinite);
        assert!(f.report.pass());
    }
}
