//! The sum `S(q)` of `#E_lambda(F_q)` over all Legendre parameters.
//!
//! Two routes are computed and compared: the direct sum of per-curve counts,
//! and the assembly `S = q - 2 + S~ - S_0 - S_1` from the affine solution
//! counts of `y^2 = x(x-1)(x-lambda)` over all `lambda` and its two
//! degenerate fibres. Both are checked against the closed form
//! `(q-2)(q+1) + 1 + (-1)^((q-1)/2)`.

use serde::Serialize;

use crate::classify::legendre_counts;
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatsRecord {
    pub q: u64,
    #[serde(rename = "S")]
    pub s: i64,
    #[serde(rename = "S_bar")]
    pub s_bar: i64,
    #[serde(rename = "S_tilde")]
    pub s_tilde: i64,
    #[serde(rename = "S_0")]
    pub s0: i64,
    #[serde(rename = "S_1")]
    pub s1: i64,
    pub formula_ok: bool,
    pub assembly_ok: bool,
}

impl StatsRecord {
    pub fn delta(&self) -> i64 {
        self.s - self.s_bar
    }
}

/// `(-1)^((q-1)/2)`.
pub fn minus_one_power(q: u64) -> i64 {
    if q % 4 == 1 {
        1
    } else {
        -1
    }
}

/// Closed form `(q-2)(q+1) + 1 + (-1)^((q-1)/2)`.
pub fn predicted_sum(q: u64) -> i64 {
    let q = q as i64;
    (q - 2) * (q + 1) + 1 + minus_one_power(q as u64)
}

fn require_odd(field: &Field) -> Result<()> {
    if field.is_odd() {
        Ok(())
    } else {
        Err(Error::EvenCharacteristic)
    }
}

/// `sq[v] = #{y : y^2 = v}`, filled by squaring every element.
fn square_counts(field: &Field) -> Vec<u32> {
    let mut sq = vec![0u32; field.order() as usize];
    for y in 0..field.order() {
        sq[field.mul_raw(y, y) as usize] += 1;
    }
    sq
}

/// Affine solution counts of the three equations, by enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuxiliaryCounts {
    /// `#{(x, y, lambda) : y^2 = x(x-1)(x-lambda)}`.
    pub s_tilde: i64,
    /// `2q + q(q-2)`: the `x in {0,1}` rows plus one `lambda` per `(x, y)` elsewhere.
    pub s_tilde_shortcut: i64,
    /// `#{(x, y) : y^2 = x^2 (x-1)}`.
    pub s0: i64,
    /// `#{(x, y) : y^2 = x (x-1)^2}`.
    pub s1: i64,
}

pub fn auxiliary_counts(field: &Field) -> Result<AuxiliaryCounts> {
    require_odd(field)?;
    let q = field.order();
    field.check_cap(q)?;
    let f = field;
    let sq = square_counts(f);
    let one = 1u64;
    let s_tilde = crate::par::sum_range(0, q, |x| {
        let xx1 = f.mul_raw(x, f.sub_raw(x, one));
        (0..q)
            .map(|l| sq[f.mul_raw(xx1, f.sub_raw(x, l)) as usize] as i64)
            .sum()
    });
    let s0 = (0..q)
        .map(|x| sq[f.mul_raw(f.mul_raw(x, x), f.sub_raw(x, one)) as usize] as i64)
        .sum();
    let s1 = (0..q)
        .map(|x| {
            let xm1 = f.sub_raw(x, one);
            sq[f.mul_raw(x, f.mul_raw(xm1, xm1)) as usize] as i64
        })
        .sum();
    let qi = q as i64;
    Ok(AuxiliaryCounts {
        s_tilde,
        s_tilde_shortcut: 2 * qi + qi * (qi - 2),
        s0,
        s1,
    })
}

/// `S(q)` by summing character-sum point counts over every `lambda`, together
/// with the auxiliary counts and both consistency verdicts.
pub fn legendre_sum(field: &Field) -> Result<StatsRecord> {
    require_odd(field)?;
    let q = field.order();
    let s: i64 = legendre_counts(field)?.iter().map(|&(_, n)| n as i64).sum();
    let aux = auxiliary_counts(field)?;
    let qi = q as i64;
    Ok(StatsRecord {
        q,
        s,
        s_bar: (qi - 2) * (qi + 1),
        s_tilde: aux.s_tilde,
        s0: aux.s0,
        s1: aux.s1,
        formula_ok: s == predicted_sum(q),
        assembly_ok: s == qi - 2 + aux.s_tilde - aux.s0 - aux.s1,
    })
}
