//! Recurrence coefficients `c_m(i)`, `d_m(i)` and their parity dispatch
//! `a_m(i)`, `b_m(j)`.
//!
//! Rows index from 1; the `i = 0` coefficient is always 1 and is left implicit.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{binom_int, catalan, int, mod_p_reduce, require_odd_prime, BigInt};
use crate::error::{precondition, Error, Result};
use crate::report::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoeffKind {
    A,
    B,
    C,
    D,
}

impl fmt::Display for CoeffKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoeffKind::A => "a",
            CoeffKind::B => "b",
            CoeffKind::C => "c",
            CoeffKind::D => "d",
        })
    }
}

/// Coefficients `kind_m(1), kind_m(2), …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffRow {
    pub m: u32,
    pub kind: CoeffKind,
    pub values: Vec<BigInt>,
}

impl CoeffRow {
    /// The 1-based coefficient `kind_m(i)`; `i = 0` gives the implicit 1.
    pub fn get(&self, i: usize) -> Option<BigInt> {
        if i == 0 {
            Some(BigInt::from(1))
        } else {
            self.values.get(i - 1).cloned()
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `c_m(i) = (m²+m−2i)/((m−i)(m+1−i)) · C(m+1−i, i)` for `0 ≤ i ≤ ⌊(m+1)/2⌋`,
/// with the special value `c_1(1) = 4`.
pub fn c_coeff(m: u32, i: u32) -> Result<BigInt> {
    precondition(m >= 1 && i <= m.div_ceil(2), || {
        format!("c_m(i) needs m >= 1 and 0 <= i <= floor((m+1)/2), got m={m}, i={i}")
    })?;
    if i == 0 {
        return Ok(1.into());
    }
    if m == 1 {
        return Ok(4.into());
    }
    let (m, i) = (i64::from(m), i64::from(i));
    let num = BigInt::from(m * m + m - 2 * i) * binom_int(m + 1 - i, i);
    let den = BigInt::from((m - i) * (m + 1 - i));
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "c_{m}({i}) is not integral: {num}/{den}"
        )));
    }
    Ok(q)
}

/// `d_m(i) = m/(m−i) · C(m−i, i)` for `0 ≤ i ≤ ⌊m/2⌋`.
pub fn d_coeff(m: u32, i: u32) -> Result<BigInt> {
    precondition(m >= 1 && i <= m / 2, || {
        format!("d_m(i) needs m >= 1 and 0 <= i <= floor(m/2), got m={m}, i={i}")
    })?;
    let (m, i) = (i64::from(m), i64::from(i));
    let num = m * binom_int(m - i, i);
    let (q, r) = num.div_rem(&BigInt::from(m - i));
    if !r.is_zero() {
        return Err(Error::Internal(format!("d_{m}({i}) is not integral")));
    }
    Ok(q)
}

/// `a_m(i)`: `c_m(i)` for even `m`, `d_m(i)` for odd `m`; `0 ≤ i ≤ ⌊m/2⌋`.
pub fn a_coeff(m: u32, i: u32) -> Result<BigInt> {
    precondition(i <= m / 2, || {
        format!("a_m(i) needs i <= floor(m/2), got m={m}, i={i}")
    })?;
    if m.is_multiple_of(2) {
        c_coeff(m, i)
    } else {
        d_coeff(m, i)
    }
}

/// `b_m(j)`: `d_m(j)` for even `m`, `c_m(j)` for odd `m`; `0 ≤ j ≤ ⌊(m+1)/2⌋`.
pub fn b_coeff(m: u32, j: u32) -> Result<BigInt> {
    precondition(j <= m.div_ceil(2), || {
        format!("b_m(j) needs j <= floor((m+1)/2), got m={m}, j={j}")
    })?;
    if m.is_multiple_of(2) {
        d_coeff(m, j)
    } else {
        c_coeff(m, j)
    }
}

/// The full 1-indexed row of one coefficient family.
pub fn coeff_row(m: u32, kind: CoeffKind) -> Result<CoeffRow> {
    precondition(m >= 1, || "coefficient rows need m >= 1".to_string())?;
    type Entry = fn(u32, u32) -> Result<BigInt>;
    let (len, f): (u32, Entry) = match kind {
        CoeffKind::A => (m / 2, a_coeff),
        CoeffKind::B => (m.div_ceil(2), b_coeff),
        CoeffKind::C => (m.div_ceil(2), c_coeff),
        CoeffKind::D => (m / 2, d_coeff),
    };
    let values = (1..=len).map(|i| f(m, i)).collect::<Result<_>>()?;
    Ok(CoeffRow { m, kind, values })
}

pub fn ab_coeffs(m: u32) -> Result<(CoeffRow, CoeffRow)> {
    Ok((coeff_row(m, CoeffKind::A)?, coeff_row(m, CoeffKind::B)?))
}

/// Which coefficient table: 1 lists `a_m`, 2 lists `b_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    A,
    B,
}

impl Table {
    pub fn from_number(which: u32) -> Result<Table> {
        match which {
            1 => Ok(Table::A),
            2 => Ok(Table::B),
            _ => Err(Error::Precondition(format!(
                "table must be 1 or 2, got {which}"
            ))),
        }
    }

    pub fn kind(self) -> CoeffKind {
        match self {
            Table::A => CoeffKind::A,
            Table::B => CoeffKind::B,
        }
    }
}

pub fn table(which: Table, m_lo: u32, m_hi: u32) -> Result<Vec<CoeffRow>> {
    precondition(2 <= m_lo && m_lo <= m_hi, || {
        format!("table range needs 2 <= from <= to, got {m_lo}..{m_hi}")
    })?;
    (m_lo..=m_hi).map(|m| coeff_row(m, which.kind())).collect()
}

/// Reference `a_m` rows for `m = 2..=12`.
pub const REFERENCE_A: [&[u32]; 11] = [
    &[4],
    &[3],
    &[6, 8],
    &[5, 5],
    &[8, 19, 12],
    &[7, 14, 7],
    &[10, 34, 44, 16],
    &[9, 27, 30, 9],
    &[12, 53, 104, 85, 20],
    &[11, 44, 77, 55, 11],
    &[14, 76, 200, 259, 146, 24],
];

/// Reference `b_m` rows for `m = 2..=12`.
pub const REFERENCE_B: [&[u32]; 11] = [
    &[2],
    &[5, 4],
    &[4, 2],
    &[7, 13, 4],
    &[6, 9, 2],
    &[9, 26, 25, 4],
    &[8, 20, 16, 2],
    &[11, 43, 70, 41, 4],
    &[10, 35, 50, 25, 2],
    &[13, 64, 147, 155, 61, 4],
    &[12, 54, 112, 105, 36, 2],
];

/// Compares both generated tables with the reference rows over the full
/// 11 × 6 grid, blank cells included (a blank compares as 0).
pub fn tables_check() -> CheckReport {
    let mut report = CheckReport::new("tables 1 and 2, m in [2,12]");
    for (which, reference) in [(Table::A, &REFERENCE_A), (Table::B, &REFERENCE_B)] {
        let rows = table(which, 2, 12).expect("valid range");
        for (row, expected) in rows.iter().zip(reference.iter()) {
            for i in 0..6 {
                let got = row.values.get(i).cloned().unwrap_or_default();
                let want = BigInt::from(expected.get(i).copied().unwrap_or(0));
                report.record_eq(
                    || format!("{}_{}({})", which.kind(), row.m, i + 1),
                    int(got),
                    int(want),
                );
            }
        }
    }
    report
}

/// `(−1)^{i−1} c_{p−1}(i) ≡ (−1)^i d_{p−1}(i) ≡ C_i (mod p)` for `1 ≤ i ≤ (p−1)/2`.
pub fn catalan_congruence_check(p: u32) -> Result<CheckReport> {
    require_odd_prime(p)?;
    let mut report = CheckReport::new(format!("p={p}, i in [1,{}]", (p - 1) / 2));
    for i in 1..=(p - 1) / 2 {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let c_side = int(-sign * c_coeff(p - 1, i)?);
        let d_side = int(sign * d_coeff(p - 1, i)?);
        let cat = int(catalan(i));
        let rc = mod_p_reduce(&c_side, p)?;
        let rd = mod_p_reduce(&d_side, p)?;
        let rcat = mod_p_reduce(&cat, p)?;
        report.record(
            rc == rcat,
            || format!("p={p}, i={i} (c side)"),
            c_side.clone(),
            cat.clone(),
            || Some(format!("{rc} vs {rcat} mod {p}")),
        );
        report.record(
            rd == rcat,
            || format!("p={p}, i={i} (d side)"),
            d_side,
            cat,
            || Some(format!("{rd} vs {rcat} mod {p}")),
        );
    }
    Ok(report)
}
