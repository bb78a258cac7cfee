//! Workloads shared by the criterion benches.

use binsum_core::sums::{msum, ResidueRow};
use binsum_core::uv::{u_value, uv_recurrence_check};
use binsum_core::{BigInt, Family, UVParams};

/// Every residue of row `n` modulo `m`, one direct summation per residue.
pub fn all_residues_direct(n: u32, m: u32) -> Vec<BigInt> {
    (0..i64::from(m)).map(|r| msum(n, r, m)).collect()
}

/// Every residue of row `n` modulo `m` from one cached row.
pub fn all_residues_cached(n: u32, m: u32) -> Vec<BigInt> {
    let row = ResidueRow::new(n, m);
    (0..i64::from(m)).map(|r| row.msum(r)).collect()
}

/// `U_l` for `l ≤ l_max`, each from its defining bracket sum.
pub fn u_direct(p: &UVParams, l_max: u32) -> usize {
    (0..=l_max).filter(|&l| u_value(p, l).is_ok()).count()
}

/// The same range through the recurrence check, which also evaluates the sums.
pub fn u_recurrence(p: &UVParams, l_max: u32) -> bool {
    uv_recurrence_check(p, l_max, Family::U).is_ok_and(|r| r.pass())
}
