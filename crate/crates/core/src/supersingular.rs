//! Supersingular Legendre parameters: the roots of the Deuring polynomial
//! `H_p`, their group structure over `F_{p^2}`, the eighth-power property of
//! `-lambda`, and the count `s_p` of roots in `F_p` against `3 h(-p)`.

use serde::Serialize;

use crate::curve::{full_four_torsion_rational, Curve};
use crate::error::{Error, Result};
use crate::field::{is_prime, Field};
use crate::poly::{deuring, Poly};

/// `p' = (-1)^((p-1)/2) p`, always `1 mod 4`.
pub fn signed_prime(p: u64) -> i64 {
    if p % 4 == 1 {
        p as i64
    } else {
        -(p as i64)
    }
}

fn check_odd_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    Ok(())
}

/// Per-prime table of supersingular Legendre data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SsTable {
    pub p: u64,
    pub p_prime: i64,
    pub s_p: usize,
    /// `h(-p)`, present for `p = 3 mod 4`, `p > 3`.
    pub h: Option<u64>,
    /// Roots of `H_p` in `F_p`, ascending.
    pub roots_fp: Vec<u64>,
    /// Roots of `H_p` in `F_{p^2}` as `[c0, c1]`, ascending in packed order.
    pub roots_fp2: Vec<[u64; 2]>,
    /// Coefficients of `H_p`, constant term first.
    pub hp: Vec<u64>,
}

impl SsTable {
    /// Roots in `F_{p^2}` as elements of `field` (which must be `F_{p^2}`).
    pub fn roots_in<'f>(&self, field: &'f Field) -> Result<Vec<crate::Fe<'f>>> {
        self.roots_fp2
            .iter()
            .map(|c| field.from_coeffs(c))
            .collect()
    }

    /// Roots are pairwise distinct and there are `(p-1)/2` of them.
    pub fn roots_complete(&self) -> bool {
        let mut v = self.roots_fp2.clone();
        v.dedup();
        v.len() == self.roots_fp2.len() && v.len() as u64 == (self.p - 1) / 2
    }
}

/// Roots of `H_p` in `F_{p^2}` by exhaustive evaluation, plus `s_p` and `h(-p)`.
pub fn supersingular_lambdas(p: u64) -> Result<SsTable> {
    check_odd_prime(p)?;
    let fp = Field::prime(p)?;
    let fp2 = Field::new(p, 2)?;
    let h = deuring(&fp)?;
    let roots = h.roots_in(&fp2)?;
    let roots_fp2: Vec<[u64; 2]> = roots
        .iter()
        .map(|r| {
            let c = r.coeffs();
            [c[0], c[1]]
        })
        .collect();
    let roots_fp: Vec<u64> = roots
        .iter()
        .filter(|r| r.in_prime_field())
        .map(|r| r.value())
        .collect();
    Ok(SsTable {
        p,
        p_prime: signed_prime(p),
        s_p: roots_fp.len(),
        h: class_number_if_defined(p),
        roots_fp,
        roots_fp2,
        hp: h.coeffs_raw().to_vec(),
    })
}

/// Roots of `H_p` in `F_p` only; cheap enough for every prime below a few thousand.
pub fn prime_field_roots(p: u64) -> Result<Vec<u64>> {
    check_odd_prime(p)?;
    let fp = Field::prime(p)?;
    Ok(deuring(&fp)?
        .roots_in(&fp)?
        .iter()
        .map(|r| r.value())
        .collect())
}

fn class_number_if_defined(p: u64) -> Option<u64> {
    (p % 4 == 3 && p > 3).then(|| class_number(p).expect("domain checked"))
}

/// Outcome of the group-structure check over `F_{p^2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureCheck {
    pub p: u64,
    /// `|p' - 1|`.
    pub expected: u64,
    pub structures: Vec<(u64, u64)>,
    pub ok: bool,
}

/// For each root `lambda` of `H_p` in `F_{p^2}`, the invariant factors of
/// `E_lambda(F_{p^2})` must both equal `|p' - 1|`.
pub fn verify_ss_structure(p: u64) -> Result<StructureCheck> {
    let table = supersingular_lambdas(p)?;
    let fp2 = Field::new(p, 2)?;
    let expected = (signed_prime(p) - 1).unsigned_abs();
    let structures = table
        .roots_in(&fp2)?
        .into_iter()
        .map(|l| Curve::legendre(l)?.group_structure())
        .collect::<Result<Vec<_>>>()?;
    let ok = structures.iter().all(|&s| s == (expected, expected));
    Ok(StructureCheck {
        p,
        expected,
        structures,
        ok,
    })
}

/// Outcome of the two eighth-power checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EighthPowerCheck {
    pub p: u64,
    /// Every root `lambda` has `-lambda` an eighth power in `F_{p^2}`.
    pub elementwise: bool,
    /// `H_p(-x)` divides `x^((p^2-1)/8) - 1` over `F_p`.
    pub divisibility: bool,
}

impl EighthPowerCheck {
    pub fn ok(&self) -> bool {
        self.elementwise && self.divisibility
    }
}

/// `x^((p^2-1)/8) mod H_p(-x)` by binary exponentiation; divisibility holds
/// iff the remainder is `1`.
pub fn eighth_power_divisibility(p: u64) -> Result<bool> {
    check_odd_prime(p)?;
    let fp = Field::prime(p)?;
    let hneg = deuring(&fp)?.substitute_neg();
    let e = (p * p - 1) / 8;
    let r = Poly::x(&fp).pow_mod(e, &hneg)?;
    let one = Poly::constant(fp.one()).rem(&hneg)?;
    Ok(r == one)
}

pub fn verify_eighth_power(p: u64) -> Result<EighthPowerCheck> {
    let table = supersingular_lambdas(p)?;
    let fp2 = Field::new(p, 2)?;
    let elementwise = table
        .roots_in(&fp2)?
        .into_iter()
        .map(|l| (-l).is_nth_power(8))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    Ok(EighthPowerCheck {
        p,
        elementwise,
        divisibility: eighth_power_divisibility(p)?,
    })
}

/// Reduced forms `(a, b, c)` of discriminant `-p`: `b^2 - 4ac = -p`,
/// `|b| <= a <= c`, and `b >= 0` whenever `|b| = a` or `a = c`.
pub fn reduced_forms(p: u64) -> Result<Vec<(i64, i64, i64)>> {
    if p % 4 != 3 || p <= 3 || !is_prime(p) {
        return Err(Error::ClassNumberDomain(p));
    }
    let p = p as i64;
    let mut forms = Vec::new();
    let mut b = 1i64;
    while 3 * b * b <= p {
        let ac = (b * b + p) / 4;
        let mut a = b;
        while a * a <= ac {
            if ac % a == 0 {
                let c = ac / a;
                if gcd3(a, b, c) == 1 {
                    forms.push((a, b, c));
                    if a != b && a != c {
                        forms.push((a, -b, c));
                    }
                }
            }
            a += 1;
        }
        b += 2;
    }
    forms.sort();
    Ok(forms)
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    let g = crate::field::gcd(a.unsigned_abs(), b.unsigned_abs());
    crate::field::gcd(g, c.unsigned_abs()) as i64
}

/// Class number `h(-p)` as the number of reduced forms of discriminant `-p`.
pub fn class_number(p: u64) -> Result<u64> {
    Ok(reduced_forms(p)?.len() as u64)
}

/// Outcome of comparing `s_p` with its predicted value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpCheck {
    pub p: u64,
    pub s_p: usize,
    pub h: Option<u64>,
    pub expected: usize,
    pub ok: bool,
}

/// `s_p = 0` for `p = 1 mod 4`, `s_3 = 1`, and `s_p = 3 h(-p)` otherwise.
pub fn verify_sp_formula(p: u64) -> Result<SpCheck> {
    let s_p = prime_field_roots(p)?.len();
    let h = class_number_if_defined(p);
    let expected = match (p % 4, p) {
        (1, _) => 0,
        (_, 3) => 1,
        _ => 3 * h.expect("p = 3 mod 4") as usize,
    };
    Ok(SpCheck {
        p,
        s_p,
        h,
        expected,
        ok: s_p == expected,
    })
}

/// Secondary properties of the roots over `F_{p^2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootProperties {
    pub p: u64,
    /// `#E_lambda(F_{p^2}) = (p' - 1)^2` for every root.
    pub counts_ok: bool,
    /// Full rational 4-torsion over `F_{p^2}` for every root.
    pub four_torsion_ok: bool,
    /// Every root is a fourth power in `F_{p^2}`.
    pub fourth_powers_ok: bool,
    /// Roots in `F_p` give curves with `p + 1` points over `F_p`.
    pub prime_field_counts_ok: bool,
}

pub fn root_properties(p: u64) -> Result<RootProperties> {
    let table = supersingular_lambdas(p)?;
    let fp = Field::prime(p)?;
    let fp2 = Field::new(p, 2)?;
    let target = ((signed_prime(p) - 1) * (signed_prime(p) - 1)) as u64;
    let mut out = RootProperties {
        p,
        counts_ok: true,
        four_torsion_ok: true,
        fourth_powers_ok: true,
        prime_field_counts_ok: true,
    };
    for l in table.roots_in(&fp2)? {
        let e = Curve::legendre(l)?;
        out.counts_ok &= e.count_points()? == target;
        out.four_torsion_ok &= full_four_torsion_rational(&e)?;
        out.fourth_powers_ok &= l.is_nth_power(4)?;
    }
    for &v in &table.roots_fp {
        out.prime_field_counts_ok &= Curve::legendre(fp.elem(v))?.count_points()? == p + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_for_small_primes() {
        let t3 = supersingular_lambdas(3).unwrap();
        assert_eq!(t3.roots_fp, vec![2]);
        assert_eq!(t3.s_p, 1);
        assert_eq!(t3.h, None);
        let t5 = supersingular_lambdas(5).unwrap();
        assert_eq!(t5.s_p, 0);
        assert_eq!(t5.roots_fp2.len(), 2);
        assert!(t5.roots_fp2.iter().all(|c| c[1] != 0));
        let t7 = supersingular_lambdas(7).unwrap();
        assert_eq!(t7.roots_fp, vec![2, 4, 6]);
        assert_eq!(t7.s_p, 3);
        assert_eq!(t7.h, Some(1));
        assert!(t7.roots_complete());
        assert_eq!(supersingular_lambdas(9).unwrap_err(), Error::NotPrime(9));
    }

    #[test]
    fn structure_examples() {
        let c3 = verify_ss_structure(3).unwrap();
        assert_eq!(c3.structures, vec![(4, 4)]);
        let c5 = verify_ss_structure(5).unwrap();
        assert_eq!(c5.structures, vec![(4, 4), (4, 4)]);
        let c7 = verify_ss_structure(7).unwrap();
        assert_eq!(c7.structures, vec![(8, 8); 3]);
        assert!(c3.ok && c5.ok && c7.ok);
    }

    #[test]
    fn eighth_power_examples() {
        for p in [3, 7, 11] {
            let c = verify_eighth_power(p).unwrap();
            assert!(c.elementwise && c.divisibility, "{c:?}");
        }
    }

    #[test]
    fn class_number_examples() {
        assert_eq!(reduced_forms(7).unwrap(), vec![(1, 1, 2)]);
        assert_eq!(
            reduced_forms(23).unwrap(),
            vec![(1, 1, 6), (2, -1, 3), (2, 1, 3)]
        );
        assert_eq!(class_number(163).unwrap(), 1);
        assert_eq!(class_number(13).unwrap_err(), Error::ClassNumberDomain(13));
        assert_eq!(class_number(3).unwrap_err(), Error::ClassNumberDomain(3));
    }

    /// Class numbers from the analytic formula `h = -(1/p) sum_{a<p} a (a|p)`,
    /// valid for prime `p = 3 mod 4`, `p > 3`.
    #[test]
    fn class_number_matches_character_sum() {
        for p in (7..400u64).filter(|&p| p % 4 == 3 && is_prime(p)) {
            let f = Field::prime(p).unwrap();
            let s: i64 = (1..p as i64).map(|a| a * f.from_int(a).chi() as i64).sum();
            assert_eq!(s % p as i64, 0);
            assert_eq!(class_number(p).unwrap() as i64, -s / p as i64, "p = {p}");
        }
    }

    #[test]
    fn sp_formula_examples() {
        assert_eq!(verify_sp_formula(13).unwrap().s_p, 0);
        assert_eq!(verify_sp_formula(3).unwrap().s_p, 1);
        let c = verify_sp_formula(23).unwrap();
        assert_eq!((c.s_p, c.h, c.ok), (9, Some(3), true));
    }

    #[test]
    fn root_properties_small() {
        for p in [3, 5, 7, 11, 13] {
            let r = root_properties(p).unwrap();
            assert!(
                r.counts_ok && r.four_torsion_ok && r.fourth_powers_ok && r.prime_field_counts_ok
            );
        }
    }

    #[test]
    fn table_json_key_order() {
        let s = serde_json::to_string(&supersingular_lambdas(3).unwrap()).unwrap();
        assert_eq!(
            s,
            r#"{"p":3,"p_prime":-3,"s_p":1,"h":null,"roots_fp":[2],"roots_fp2":[[2,0]],"hp":[2,2]}"#
        );
    }
}
