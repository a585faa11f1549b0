//! Which point counts over `F_q` are realized by Legendre curves.
//!
//! A curve over `F_q` is isogenous to some `E_lambda` iff its point count is
//! divisible by 4 and differs from `(r+1)^2`, where for square `q` the root
//! `r = +-sqrt(q)` is normalized to `r = 1 mod 4`. Point counts determine
//! isogeny classes, so everything here is phrased in terms of counts `N`.
//!
//! [`census`] checks the statement against an oracle that enumerates every
//! Weierstrass curve over the field, not just the Legendre family.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::par;

/// Largest field for which [`census`] runs the all-curves oracle by default.
pub const DEFAULT_ORACLE_CAP: u64 = 199;

pub const REASON_NOT_DIV4: &str = "not divisible by 4";
pub const REASON_EXCEPTION: &str = "maximal/minimal exception (r+1)²";
pub const REASON_NOT_ATTAINED: &str = "not attained by any curve";

/// One isogeny class over `F_q`, keyed by its point count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub q: u64,
    #[serde(rename = "N")]
    pub n: u64,
    /// Whether some elliptic curve over `F_q` has `N` points; `None` when the
    /// all-curves oracle was not run.
    pub attained: Option<bool>,
    pub predicted: bool,
    /// Legendre parameters with `#E_lambda = N`, as coefficient vectors, ascending.
    pub legendre_witnesses: Vec<Vec<u64>>,
    /// Packed values of the witnesses (same order).
    #[serde(skip)]
    pub witness_values: Vec<u64>,
    pub legendre_isogenous: bool,
    pub excluded_reason: Option<&'static str>,
}

/// `r` with `r^2 = q` and `r = 1 mod 4`.
pub fn normalized_r(q: u64) -> Result<i64> {
    let s = isqrt(q);
    if s * s != q {
        return Err(Error::NotSquare(q));
    }
    let s = s as i64;
    Ok(if s.rem_euclid(4) == 1 { s } else { -s })
}

pub(crate) fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// `|N - q - 1| <= 2 sqrt(q)`, in exact integer arithmetic.
pub fn in_hasse_interval(q: u64, n: u64) -> bool {
    let t = n as i128 - q as i128 - 1;
    t * t <= 4 * q as i128
}

/// Integer endpoints of the Hasse interval.
pub fn hasse_range(q: u64) -> (u64, u64) {
    let centre = q + 1;
    let mut w = 2 * isqrt(q);
    while in_hasse_interval(q, centre + w + 1) {
        w += 1;
    }
    (centre - w, centre + w)
}

/// The excluded count `(r+1)^2` when `q` is a square.
pub fn exceptional_count(q: u64) -> Option<u64> {
    normalized_r(q).ok().map(|r| ((r + 1) * (r + 1)) as u64)
}

/// Prediction: `4 | N` and `N != (r+1)^2`.
pub fn predict_legendre_isogenous(q: u64, n: u64) -> Result<bool> {
    if !in_hasse_interval(q, n) {
        return Err(Error::OutsideHasse { q, n });
    }
    Ok(n.is_multiple_of(4) && exceptional_count(q) != Some(n))
}

fn exclusion(q: u64, n: u64) -> Option<&'static str> {
    if !n.is_multiple_of(4) {
        Some(REASON_NOT_DIV4)
    } else if exceptional_count(q) == Some(n) {
        Some(REASON_EXCEPTION)
    } else {
        None
    }
}

/// `(lambda, #E_lambda)` for every `lambda` outside `{0, 1}`, ascending in `lambda`.
pub fn legendre_counts(field: &Field) -> Result<Vec<(Fe<'_>, u64)>> {
    field.check_cap(field.order())?;
    let counts = par::map_range(2, field.order(), |v| {
        let l = field.elem(v);
        let e = Curve::legendre(l).expect("lambda outside {0,1}");
        e.count_points().expect("cap already checked")
    });
    Ok((2..field.order())
        .map(|v| field.elem(v))
        .zip(counts)
        .collect())
}

/// Smallest `lambda` with `#E_lambda = N`.
pub fn find_witness(field: &Field, n: u64) -> Result<Option<Fe<'_>>> {
    field.check_cap(field.order())?;
    for v in 2..field.order() {
        let l = field.elem(v);
        if Curve::legendre(l)?.count_points()? == n {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

/// Number of Weierstrass models `y^2 = x^3 + a2 x^2 + a4 x + a6` attaining
/// each point count, over all nonsingular models (`a2 = 0` when `p > 3`).
pub fn all_curve_counts(field: &Field) -> Result<BTreeMap<u64, u64>> {
    if !field.is_odd() {
        return Err(Error::EvenCharacteristic);
    }
    let q = field.order();
    field.check_cap(q.saturating_mul(q))?;
    let f = field;
    let cubes: Vec<u64> = (0..q).map(|x| f.mul_raw(f.mul_raw(x, x), x)).collect();
    let squares: Vec<u64> = (0..q).map(|x| f.mul_raw(x, x)).collect();
    let a2_range = if f.characteristic() == 3 { q } else { 1 };
    let c = |k: i64| f.from_int(k).value();
    let (c4, c18, c27) = (c(4), c(18), c(27));

    // one task per (a2, a4); each returns the counts of its q models
    let per_task = par::map_range(0, a2_range * q, |task| {
        let a2 = task / q;
        let a4 = task % q;
        let g: Vec<u64> = (0..q)
            .map(|x| {
                let t = f.add_raw(cubes[x as usize], f.mul_raw(a2, squares[x as usize]));
                f.add_raw(t, f.mul_raw(a4, x))
            })
            .collect();
        let mut local: BTreeMap<u64, u64> = BTreeMap::new();
        for a6 in 0..q {
            // cubic discriminant a2^2 a4^2 - 4 a4^3 - 4 a2^3 a6 + 18 a2 a4 a6 - 27 a6^2
            let a2sq = f.mul_raw(a2, a2);
            let a4sq = f.mul_raw(a4, a4);
            let mut disc = f.mul_raw(a2sq, a4sq);
            disc = f.sub_raw(disc, f.mul_raw(c4, f.mul_raw(a4sq, a4)));
            disc = f.sub_raw(disc, f.mul_raw(c4, f.mul_raw(f.mul_raw(a2sq, a2), a6)));
            disc = f.add_raw(disc, f.mul_raw(c18, f.mul_raw(f.mul_raw(a2, a4), a6)));
            disc = f.sub_raw(disc, f.mul_raw(c27, f.mul_raw(a6, a6)));
            if disc == 0 {
                continue;
            }
            let s: i64 = g
                .iter()
                .map(|&gx| f.chi_raw(f.add_raw(gx, a6)) as i64)
                .sum();
            *local.entry((q as i64 + 1 + s) as u64).or_default() += 1;
        }
        local
    });
    let mut out = BTreeMap::new();
    for local in per_task {
        for (n, k) in local {
            *out.entry(n).or_default() += k;
        }
    }
    Ok(out)
}

/// Result of a census over one field.
#[derive(Debug, Clone, Serialize)]
pub struct Census {
    pub q: u64,
    pub records: Vec<ClassRecord>,
    /// Counts divisible by 4 attained by some curve and predicted Legendre.
    pub predicted: Vec<u64>,
    /// Counts attained by Legendre curves.
    pub legendre: Vec<u64>,
    pub exception: Option<u64>,
    pub exception_attained: Option<bool>,
    pub exception_legendre: Option<bool>,
    /// Number of attained counts divisible by 4, against the rough
    /// `sqrt(q)(1 - 1/p)` estimate.
    pub attained_div4: usize,
    pub density_estimate: f64,
    pub sets_agree: bool,
}

fn build_records(
    field: &Field,
    ns: impl Iterator<Item = u64>,
    legendre: &BTreeMap<u64, Vec<u64>>,
    attained: Option<&BTreeMap<u64, u64>>,
) -> Vec<ClassRecord> {
    let q = field.order();
    ns.map(|n| {
        let values = legendre.get(&n).cloned().unwrap_or_default();
        let attained_n = attained.map(|a| a.contains_key(&n));
        let mut reason = exclusion(q, n);
        if reason.is_none() && attained_n == Some(false) {
            reason = Some(REASON_NOT_ATTAINED);
        }
        ClassRecord {
            q,
            n,
            attained: attained_n,
            predicted: n % 4 == 0 && exceptional_count(q) != Some(n),
            legendre_witnesses: values.iter().map(|&v| field.elem(v).coeffs()).collect(),
            legendre_isogenous: !values.is_empty(),
            witness_values: values,
            excluded_reason: reason,
        }
    })
    .collect()
}

fn legendre_map(field: &Field) -> Result<BTreeMap<u64, Vec<u64>>> {
    let mut m: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for (l, n) in legendre_counts(field)? {
        m.entry(n).or_default().push(l.value());
    }
    Ok(m)
}

/// Records for every count `N` divisible by 4 in the Hasse interval, with the
/// all-curves oracle, and the verdict of the set comparison.
pub fn census(field: &Field) -> Result<Census> {
    census_with_cap(field, DEFAULT_ORACLE_CAP)
}

pub fn census_with_cap(field: &Field, oracle_cap: u64) -> Result<Census> {
    let q = field.order();
    if q > oracle_cap {
        return Err(Error::CapExceeded { q, cap: oracle_cap });
    }
    let all = all_curve_counts(field)?;
    let legendre = legendre_map(field)?;
    let (lo, hi) = hasse_range(q);
    let first = lo.div_ceil(4) * 4;
    let records = build_records(field, (first..=hi).step_by(4), &legendre, Some(&all));

    let predicted: BTreeSet<u64> = all
        .keys()
        .copied()
        .filter(|&n| n % 4 == 0 && exceptional_count(q) != Some(n))
        .collect();
    let leg_set: BTreeSet<u64> = legendre.keys().copied().collect();
    let exception = exceptional_count(q);
    let exception_attained = exception.map(|e| all.contains_key(&e));
    let exception_legendre = exception.map(|e| leg_set.contains(&e));
    let sets_agree = predicted == leg_set
        && exception_attained.unwrap_or(true)
        && !exception_legendre.unwrap_or(false);
    let p = field.characteristic() as f64;
    Ok(Census {
        q,
        attained_div4: all.keys().filter(|&&n| n % 4 == 0).count(),
        density_estimate: (q as f64).sqrt() * (1.0 - 1.0 / p),
        records,
        predicted: predicted.into_iter().collect(),
        legendre: leg_set.into_iter().collect(),
        exception,
        exception_attained,
        exception_legendre,
        sets_agree,
    })
}

/// Records for every integer `N` in the Hasse interval. The all-curves
/// oracle runs only when `q <= oracle_cap`; otherwise `attained` is `None`.
pub fn classify(field: &Field, oracle_cap: u64) -> Result<Vec<ClassRecord>> {
    let q = field.order();
    let legendre = legendre_map(field)?;
    let all = if q <= oracle_cap {
        Some(all_curve_counts(field)?)
    } else {
        None
    };
    let (lo, hi) = hasse_range(q);
    Ok(build_records(field, lo..=hi, &legendre, all.as_ref()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalized_r_examples() {
        assert_eq!(normalized_r(9).unwrap(), -3);
        assert_eq!(normalized_r(25).unwrap(), 5);
        assert_eq!(normalized_r(49).unwrap(), -7);
        assert_eq!(normalized_r(27).unwrap_err(), Error::NotSquare(27));
    }

    #[test]
    fn prediction_examples() {
        assert!(!predict_legendre_isogenous(9, 4).unwrap());
        assert!(predict_legendre_isogenous(9, 16).unwrap());
        assert!(!predict_legendre_isogenous(5, 6).unwrap());
        assert!(matches!(
            predict_legendre_isogenous(5, 11),
            Err(Error::OutsideHasse { .. })
        ));
    }

    #[test]
    fn hasse_range_is_tight() {
        for q in [3u64, 5, 9, 25, 27, 121, 169, 1000] {
            let (lo, hi) = hasse_range(q);
            assert!(in_hasse_interval(q, lo) && in_hasse_interval(q, hi));
            assert!(!in_hasse_interval(q, lo - 1) && !in_hasse_interval(q, hi + 1));
        }
    }

    #[test]
    fn witness_examples() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(find_witness(&f5, 8).unwrap().unwrap().value(), 2);
        assert_eq!(find_witness(&f5, 4).unwrap().unwrap().value(), 3);
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(find_witness(&f9, 4).unwrap(), None);
    }

    #[test]
    fn census_examples() {
        let f9 = Field::new(3, 2).unwrap();
        let c = census(&f9).unwrap();
        let attained: Vec<u64> = c
            .records
            .iter()
            .filter(|r| r.attained == Some(true))
            .map(|r| r.n)
            .collect();
        assert_eq!(attained, vec![4, 8, 12, 16]);
        assert_eq!(c.legendre, vec![8, 12, 16]);
        assert!(c.sets_agree);
        let r4 = c.records.iter().find(|r| r.n == 4).unwrap();
        assert_eq!(r4.excluded_reason, Some(REASON_EXCEPTION));

        let f7 = Field::prime(7).unwrap();
        let c = census(&f7).unwrap();
        assert_eq!(c.predicted, vec![4, 8, 12]);
        assert_eq!(c.legendre, vec![4, 8, 12]);

        let f3 = Field::prime(3).unwrap();
        let c = census(&f3).unwrap();
        assert_eq!(c.legendre, vec![4]);
        assert_eq!(c.records[0].witness_values, vec![2]);
    }

    #[test]
    fn all_curve_counts_total() {
        // every (a4, a6) with nonzero discriminant is counted once; over F_p, p > 3,
        // there are p^2 - p such models
        let f = Field::prime(11).unwrap();
        let total: u64 = all_curve_counts(&f).unwrap().values().sum();
        assert_eq!(total, 11 * 11 - 11);
        let f27 = Field::new(3, 3).unwrap();
        let total: u64 = all_curve_counts(&f27).unwrap().values().sum();
        // nonsingular monic cubics with nonzero discriminant: q^3 - q^2
        assert_eq!(total, 27 * 27 * 27 - 27 * 27);
    }

    #[test]
    fn exception_curve_has_square_structure() {
        // the (r+1)^2 class is reached by a twisted curve with full 2-torsion and
        // group (|r+1|, |r+1|), consistent with Frobenius acting as -r
        for (p, n) in [(3u64, 2u32), (5, 2), (7, 2)] {
            let f = Field::new(p, n).unwrap();
            let q = f.order();
            let r = normalized_r(q).unwrap();
            let target = ((r + 1) * (r + 1)) as u64;
            let d = (r + 1).unsigned_abs();
            let nr = f.least_nonresidue().unwrap();
            let found = (2..q).map(|v| f.elem(v)).find_map(|l| {
                let e = Curve::legendre(l).unwrap().twist(nr).unwrap();
                (e.count_points().unwrap() == target).then_some(e)
            });
            let e = found.expect("exception attained by a twist");
            assert_eq!(e.group_structure().unwrap(), (d, d));
        }
    }

    #[test]
    fn classify_lists_every_count() {
        let f9 = Field::new(3, 2).unwrap();
        let recs = classify(&f9, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(recs.first().unwrap().n, 4);
        assert_eq!(recs.last().unwrap().n, 16);
        let r6 = recs.iter().find(|r| r.n == 6).unwrap();
        assert_eq!(r6.excluded_reason, Some(REASON_NOT_DIV4));
        for r in &recs {
            assert_eq!(r.legendre_isogenous, !r.legendre_witnesses.is_empty());
        }
    }
}
