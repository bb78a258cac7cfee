//! Standalone binomial identities used by the recurrence proofs.

use num_traits::Zero;

use crate::arith::{binom_general, binom_int, int, pow2, BigRat};
use crate::report::CheckReport;

fn sign(e: u32) -> BigRat {
    if e.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// `Σ_{j=0}^{l} (−1)^{l−j} C(x+y+j, l−j) C(y+2j, j)` against `Σ_{j=0}^{l} C(l−x, j)`.
pub fn lemma_2_1_check(l: u32, x: &BigRat, y: &BigRat) -> CheckReport {
    let mut lhs = BigRat::zero();
    let mut rhs = BigRat::zero();
    for j in 0..=l {
        lhs += sign(l - j)
            * binom_general(&(x + y + int(j)), l - j)
            * binom_general(&(y + int(2 * j)), j);
        rhs += binom_general(&(int(l) - x), j);
    }
    let mut report = CheckReport::new(format!("l={l}, x={x}, y={y}"));
    report.record_eq(|| format!("l={l}, x={x}, y={y}"), lhs, rhs);
    report
}

/// Both sides of the curious identity, as `(lhs, rhs)`.
///
/// `(x+m+1) Σ_{i=0}^{m} (−1)^i C(x+y+i, m−i) C(y+2i, i)`
/// vs `Σ_{i=0}^{m} C(x+i, m−i) (−4)^i + (x−m) C(x, m)`.
pub fn curious_identity_sides(m: u32, x: &BigRat, y: &BigRat) -> (BigRat, BigRat) {
    let mut sum = BigRat::zero();
    let mut rhs = BigRat::zero();
    let mut minus_four = int(1);
    for i in 0..=m {
        sum +=
            sign(i) * binom_general(&(x + y + int(i)), m - i) * binom_general(&(y + int(2 * i)), i);
        rhs += binom_general(&(x + int(i)), m - i) * &minus_four;
        minus_four *= int(-4);
    }
    let lhs = (x + int(m + 1)) * sum;
    rhs += (x - int(m)) * binom_general(x, m);
    (lhs, rhs)
}

pub fn curious_identity_check(m: u32, x: &BigRat, y: &BigRat) -> CheckReport {
    let (lhs, rhs) = curious_identity_sides(m, x, y);
    let mut report = CheckReport::new(format!("m={m}, x={x}, y={y}"));
    report.record_eq(|| format!("m={m}, x={x}, y={y}"), lhs, rhs);
    report
}

/// `Σ_{i=0}^{⌊(m−1)/2⌋} (−1)^i C(m−1−i, i) 2^{m−1−2i} = m` for `m ≥ 1`.
pub fn gould_check(m: u32) -> CheckReport {
    assert!(m >= 1, "gould_check needs m >= 1");
    let m_i = i64::from(m);
    let lhs: BigRat = (0..=(m_i - 1) / 2)
        .map(|i| sign(i as u32) * int(binom_int(m_i - 1 - i, i)) * pow2(m_i - 1 - 2 * i))
        .sum();
    let mut report = CheckReport::new(format!("m={m}"));
    report.record_eq(|| format!("m={m}"), lhs, int(m));
    report
}

/// [`lemma_2_1_check`] over `l ≤ l_max` and the integer grid `[lo, hi]²`.
pub fn lemma_2_1_sweep(l_max: u32, lo: i64, hi: i64) -> CheckReport {
    let mut report = CheckReport::new(format!("l in [0,{l_max}], x,y in [{lo},{hi}]"));
    for l in 0..=l_max {
        for x in lo..=hi {
            for y in lo..=hi {
                report.absorb(lemma_2_1_check(l, &int(x), &int(y)));
            }
        }
    }
    report
}

/// The curious identity over `m ≤ m_max` and the integer grid `[lo, hi]²`,
/// also confirming the left side does not depend on `y`.
pub fn curious_identity_sweep(m_max: u32, lo: i64, hi: i64) -> CheckReport {
    let mut report = CheckReport::new(format!("m in [0,{m_max}], x,y in [{lo},{hi}]"));
    for m in 0..=m_max {
        for x in lo..=hi {
            let (base, _) = curious_identity_sides(m, &int(x), &int(lo));
            for y in lo..=hi {
                let (lhs, rhs) = curious_identity_sides(m, &int(x), &int(y));
                report.record_eq(|| format!("m={m}, x={x}, y={y}"), lhs.clone(), rhs);
                report.record_eq(
                    || format!("m={m}, x={x}, y={y} (lhs independent of y)"),
                    lhs,
                    base.clone(),
                );
            }
        }
    }
    report
}

pub fn gould_sweep(m_max: u32) -> CheckReport {
    let mut report = CheckReport::new(format!("m in [1,{m_max}]"));
    for m in 1..=m_max {
        report.absorb(gould_check(m));
    }
    report
}
