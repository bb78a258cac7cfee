//! The sequences `U_l^{(q)}(m, n)` and `V_l^{(q)}(m, n)`.
//!
//! Values come from finite sums of residue-class brackets over the row `2l`:
//!
//! ```text
//! U_l = Σ_{r=0}^{n} (n−r)/(1+δ_{r,0}) · ((−1)^{qr} [2l, l+qr]_m − δ_{l,0}/m)
//! V_l = Σ_{r=0}^{n} (n−r)/(1+δ_{r,0}) · (−1)^{qr} [2l, l+qr]*_m
//! ```
//!
//! `V` is also cross-checked against `2·U_l(2m, n) − U_l(m, n)`.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{binom_int, int, rat, sign_pow, to_integer, BigInt, BigRat};
use crate::coeffs::{coeff_row, CoeffKind};
use crate::error::{precondition, Error, Result};
use crate::report::CheckReport;
use crate::sums::ResidueRow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    U,
    V,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::U => "U",
            Family::V => "V",
        })
    }
}

/// `(m, n, q)` with `m, n ≥ 1`. Coprimality is checked per family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UVParams {
    pub m: u32,
    pub n: u32,
    pub q: i64,
}

impl UVParams {
    pub fn new(m: u32, n: u32, q: i64) -> Result<UVParams> {
        precondition(m >= 1 && n >= 1, || {
            format!("U/V sequences need m, n >= 1, got m={m}, n={n}")
        })?;
        Ok(UVParams { m, n, q })
    }

    /// Whether the family is defined for these parameters:
    /// `gcd(q, m) = 1` for `U`, `gcd(q, 2m) = 1` for `V`.
    pub fn admits(&self, family: Family) -> bool {
        let modulus = match family {
            Family::U => i64::from(self.m),
            Family::V => 2 * i64::from(self.m),
        };
        self.q.gcd(&modulus) == 1
    }

    fn require(&self, family: Family) -> Result<()> {
        precondition(self.admits(family), || match family {
            Family::U => format!("U needs gcd(q, m) = 1, got q={}, m={}", self.q, self.m),
            Family::V => format!("V needs gcd(q, 2m) = 1, got q={}, m={}", self.q, self.m),
        })
    }

    fn with_m(&self, m: u32) -> UVParams {
        UVParams { m, ..*self }
    }
}

impl fmt::Display for UVParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}, n={}, q={}", self.m, self.n, self.q)
    }
}

/// `values[l]` for `0 ≤ l ≤ l_max`. Entry 0 is generally a proper fraction;
/// every later entry is an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UVSeq {
    pub params: UVParams,
    pub family: Family,
    pub values: Vec<BigRat>,
}

impl UVSeq {
    /// `values[l]` as an integer; errors on a fractional entry.
    pub fn integer(&self, l: usize) -> Result<BigInt> {
        let v = self.values.get(l).ok_or_else(|| {
            Error::Precondition(format!(
                "index {l} beyond computed length {}",
                self.values.len()
            ))
        })?;
        to_integer(v)
    }
}

/// The shared finite sum; `star` selects the bracket, and the `δ_{l,0}/m`
/// correction only applies to `U`.
fn bracket_sum(p: &UVParams, l: u32, star: bool) -> BigRat {
    let row = ResidueRow::new(2 * l, p.m);
    let li = i64::from(l);
    let mut acc = BigRat::zero();
    for r in 0..=i64::from(p.n) {
        let qr = p.q * r;
        let mut term = int(row.bracket(li + qr, star) * sign_pow(qr));
        if !star && l == 0 {
            term -= rat(1, i64::from(p.m));
        }
        let weight = if r == 0 {
            rat(i64::from(p.n), 2)
        } else {
            int(i64::from(p.n) - r)
        };
        acc += weight * term;
    }
    acc
}

pub fn u_value(params: &UVParams, l: u32) -> Result<BigRat> {
    params.require(Family::U)?;
    Ok(bracket_sum(params, l, false))
}

/// `V_l` via the star-bracket sum, confirmed against `2·U_l(2m) − U_l(m)`.
pub fn v_value(params: &UVParams, l: u32) -> Result<BigRat> {
    params.require(Family::V)?;
    let direct = bracket_sum(params, l, true);
    let via_u = int(2) * bracket_sum(&params.with_m(2 * params.m), l, false)
        - bracket_sum(params, l, false);
    if direct != via_u {
        return Err(Error::Internal(format!(
            "V_{l}({params}) routes disagree: {direct} vs {via_u}"
        )));
    }
    Ok(direct)
}

pub fn u_seq(params: &UVParams, l_max: u32) -> Result<UVSeq> {
    let values = (0..=l_max)
        .map(|l| u_value(params, l))
        .collect::<Result<_>>()?;
    Ok(UVSeq {
        params: *params,
        family: Family::U,
        values,
    })
}

pub fn v_seq(params: &UVParams, l_max: u32) -> Result<UVSeq> {
    let values = (0..=l_max)
        .map(|l| v_value(params, l))
        .collect::<Result<_>>()?;
    Ok(UVSeq {
        params: *params,
        family: Family::V,
        values,
    })
}

pub fn seq(params: &UVParams, l_max: u32, family: Family) -> Result<UVSeq> {
    match family {
        Family::U => u_seq(params, l_max),
        Family::V => v_seq(params, l_max),
    }
}

/// Checks `X_l = Σ_{i ≥ 1} (−1)^{i−1} coef(i) X_{l−i}` at every admissible `l`,
/// where `coef` is `a_m` for `U` (order `⌊m/2⌋`) and `b_m` for `V`
/// (order `⌊(m+1)/2⌋`). Also requires `X_l` to be an integer for `l ≥ 1`.
pub fn uv_recurrence_check(params: &UVParams, l_max: u32, family: Family) -> Result<CheckReport> {
    let (order, kind) = match family {
        Family::U => (params.m / 2, CoeffKind::A),
        Family::V => (params.m.div_ceil(2), CoeffKind::B),
    };
    precondition(l_max >= order, || {
        format!("recurrence check needs l_max >= {order}, got {l_max}")
    })?;
    let coeffs = coeff_row(params.m, kind)?;
    let values = seq(params, l_max, family)?;
    let mut report = CheckReport::new(format!("{family}: {params}, l in [{order},{l_max}]"));
    for l in order..=l_max {
        let predicted: BigRat = (1..=order)
            .map(|i| {
                let c = coeffs.get(i as usize).expect("row covers the order");
                int(c * sign_pow(i64::from(i) - 1)) * &values.values[(l - i) as usize]
            })
            .sum();
        report.record_eq(
            || format!("{family}_{l}({params})"),
            values.values[l as usize].clone(),
            predicted,
        );
    }
    for (l, v) in values.values.iter().enumerate().skip(1) {
        report.record(
            v.is_integer(),
            || format!("{family}_{l}({params}) integrality"),
            v.clone(),
            v.round(),
            || Some("expected an integer".into()),
        );
    }
    Ok(report)
}

/// Closed forms for small indices:
/// `U_0(m, n) = n(m−n)/(2m)` and `V_0(m, n) = n/2` for `1 ≤ n ≤ m`, and for
/// `m > 1`, `U_l(m, 1) = V_l(m, 1) = C(2l−1, l)` for `1 ≤ l ≤ ⌊(m+1)/2⌋`.
///
/// The `V` half runs only when `gcd(q, 2m) = 1`.
pub fn closed_form_check(m: u32, q: i64, l_hi: u32) -> Result<CheckReport> {
    let base = UVParams::new(m, 1, q)?;
    base.require(Family::U)?;
    let with_v = base.admits(Family::V);
    let (mi, l_top) = (i64::from(m), l_hi.min(m.div_ceil(2)));
    let mut report = CheckReport::new(format!("m={m}, q={q}, l in [1,{l_top}]"));
    for n in 1..=m {
        let p = UVParams { n, ..base };
        let ni = i64::from(n);
        report.record_eq(
            || format!("U_0({p})"),
            u_value(&p, 0)?,
            rat(ni * (mi - ni), 2 * mi),
        );
        if with_v {
            report.record_eq(|| format!("V_0({p})"), v_value(&p, 0)?, rat(ni, 2));
        }
    }
    if m > 1 {
        for l in 1..=l_top {
            let li = i64::from(l);
            let expected = int(binom_int(2 * li - 1, li));
            report.record_eq(
                || format!("U_{l}({base})"),
                u_value(&base, l)?,
                expected.clone(),
            );
            if with_v {
                report.record_eq(|| format!("V_{l}({base})"), v_value(&base, l)?, expected);
            }
        }
    }
    Ok(report)
}

/// Admissible `q ∈ [1, 2m]` for `U`.
fn u_admissible_q(m: u32) -> impl Iterator<Item = i64> {
    (1..=2 * i64::from(m)).filter(move |q| q.gcd(&i64::from(m)) == 1)
}

/// Both recurrences, route agreement and integrality for every `m ≤ m_max`,
/// `1 ≤ n ≤ m`, admissible `q ∈ [1, 2m]`, `l ≤ 2m + l_extra`.
pub fn recurrence_sweep(m_max: u32, l_extra: u32) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!(
        "m in [1,{m_max}], n in [1,m], q in [1,2m] admissible, l <= 2m+{l_extra}"
    ));
    for m in 1..=m_max {
        let l_max = 2 * m + l_extra;
        for q in u_admissible_q(m) {
            for n in 1..=m {
                let p = UVParams::new(m, n, q)?;
                report.absorb(uv_recurrence_check(&p, l_max, Family::U)?);
                if p.admits(Family::V) {
                    // v_seq raises Internal if its two routes disagree.
                    report.absorb(uv_recurrence_check(&p, l_max, Family::V)?);
                }
            }
        }
    }
    Ok(report)
}

/// [`closed_form_check`] for every `m ≤ m_max` and admissible `q ∈ [1, 2m]`.
pub fn closed_form_sweep(m_max: u32) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("m in [1,{m_max}], q in [1,2m] admissible"));
    for m in 1..=m_max {
        for q in u_admissible_q(m) {
            report.absorb(closed_form_check(m, q, m + 1)?);
        }
    }
    Ok(report)
}

pub fn uv_sweep(m_max: u32, l_extra: u32) -> Result<CheckReport> {
    let mut report = closed_form_sweep(m_max)?;
    report.absorb(recurrence_sweep(m_max, l_extra)?);
    report.swept = format!(
        "closed forms and recurrences, m in [1,{m_max}], n in [1,m], q in [1,2m] admissible, l <= 2m+{l_extra}"
    );
    Ok(report)
}
