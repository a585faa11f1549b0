//! Ordinary curves `y^2 + xy = x^3 + beta x^2 + lambda` over `F_{2^n}`.
//!
//! The family `E_lambda: y^2 + xy = x^3 + lambda` (`beta = 0`) has
//! `j = 1/lambda`. Changing `beta` by `alpha` gives an isomorphic curve when
//! `Tr(alpha) = 0` and the quadratic twist otherwise.
//!
//! Points with `x != 0` come in pairs exactly when `Tr(c / x^2) = 0`,
//! `c = x^3 + beta x^2 + lambda` (substitute `y = xz` to get `z^2 + z = c/x^2`).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::par;

#[derive(Clone, Copy, Debug)]
pub struct Char2Curve<'f> {
    field: &'f Field,
    beta: Fe<'f>,
    lambda: Fe<'f>,
}

fn require_char2(field: &Field) -> Result<()> {
    if field.is_odd() {
        Err(Error::OddCharacteristic)
    } else {
        Ok(())
    }
}

impl<'f> Char2Curve<'f> {
    pub fn new(beta: Fe<'f>, lambda: Fe<'f>) -> Result<Self> {
        let field = lambda.field();
        require_char2(field)?;
        if !beta.field().same_as(field) {
            return Err(Error::MixedFields);
        }
        if lambda.is_zero() {
            return Err(Error::Singular);
        }
        Ok(Char2Curve {
            field,
            beta,
            lambda,
        })
    }

    /// `E_lambda: y^2 + xy = x^3 + lambda`.
    pub fn family(lambda: Fe<'f>) -> Result<Self> {
        Char2Curve::new(lambda.field().zero(), lambda)
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn beta(&self) -> Fe<'f> {
        self.beta
    }

    pub fn lambda(&self) -> Fe<'f> {
        self.lambda
    }

    pub fn j_invariant(&self) -> Fe<'f> {
        self.lambda.inv().expect("lambda is nonzero")
    }

    pub fn contains(&self, x: Fe<'f>, y: Fe<'f>) -> bool {
        y * y + x * y == x * x * x + self.beta * x * x + self.lambda
    }

    /// `beta -> beta + alpha`.
    pub fn twist(&self, alpha: Fe<'f>) -> Result<Self> {
        Char2Curve::new(self.beta.try_add(alpha)?, self.lambda)
    }

    /// Point count from the trace criterion, plus `(0, sqrt(lambda))` and infinity.
    pub fn count(&self) -> Result<u64> {
        count_model(self.field, self.beta, self.field.zero(), self.lambda)
    }

    /// `2 + 2 #{x != 0 : Tr(x) = Tr(sqrt(lambda)/x)}`, valid for `beta = 0`.
    pub fn count_by_trace_set(&self) -> Result<u64> {
        if !self.beta.is_zero() {
            return Err(Error::Invalid("trace-set count needs beta = 0".into()));
        }
        Ok(2 + 2 * trace_set_size(self.lambda)?)
    }

    /// All affine points, sorted. Solves `z^2 + z = w` with the half-trace
    /// for odd `n` and by scanning `z` for even `n`.
    pub fn points(&self) -> Result<Vec<(Fe<'f>, Fe<'f>)>> {
        let f = self.field;
        let mut out = vec![(f.zero(), self.lambda.sqrt().expect("char 2 roots"))];
        for x in f.nonzero_elements()? {
            let c = x * x * x + self.beta * x * x + self.lambda;
            let w = c / (x * x);
            if w.trace2()? != 0 {
                continue;
            }
            let z = solve_artin_schreier(w)?;
            out.push((x, x * z));
            out.push((x, x * (z + f.one())));
        }
        out.sort();
        Ok(out)
    }
}

/// A root of `z^2 + z = w`, assuming `Tr(w) = 0`.
pub fn solve_artin_schreier(w: Fe<'_>) -> Result<Fe<'_>> {
    let f = w.field();
    require_char2(f)?;
    if f.degree() % 2 == 1 {
        // half-trace: sum of w^(4^i), i = 0..(n-1)/2
        let mut acc = f.zero();
        let mut t = w;
        for _ in 0..=(f.degree() - 1) / 2 {
            acc += t;
            t = t.square().square();
        }
        return Ok(acc);
    }
    f.elements()?
        .find(|&z| z * z + z == w)
        .ok_or_else(|| Error::Invalid("trace of w is nonzero".into()))
}

/// Count of `y^2 + xy = x^3 + a2 x^2 + a4 x + a6`, projective.
pub fn count_model(field: &Field, a2: Fe<'_>, a4: Fe<'_>, a6: Fe<'_>) -> Result<u64> {
    require_char2(field)?;
    field.check_cap(field.order())?;
    let f = field;
    let (a2, a4, a6) = (a2.value(), a4.value(), a6.value());
    let pairs = par::sum_range(1, f.order(), |x| {
        let x2 = f.mul_raw(x, x);
        let mut c = f.mul_raw(x2, x);
        c = f.add_raw(c, f.mul_raw(a2, x2));
        c = f.add_raw(c, f.mul_raw(a4, x));
        c = f.add_raw(c, a6);
        let w = f.mul_raw(c, f.inv_raw(x2).expect("x is nonzero"));
        (f.trace2_raw(w) == 0) as i64
    });
    // x = 0 gives y^2 = a6, one root; plus infinity
    Ok(2 + 2 * pairs as u64)
}

/// `#{x != 0 : Tr(x) = Tr(sqrt(lambda)/x)}`.
pub fn trace_set_size(lambda: Fe<'_>) -> Result<u64> {
    let f = lambda.field();
    require_char2(f)?;
    let s = lambda.sqrt().expect("char 2 roots");
    Ok(f.nonzero_elements()?
        .filter(|&x| x.trace2().unwrap() == (s / x).trace2().unwrap())
        .count() as u64)
}

/// Fixed points of the involution `x -> sqrt(lambda)/x` on `F^*`.
pub fn involution_fixed_points(lambda: Fe<'_>) -> Result<u64> {
    let f = lambda.field();
    require_char2(f)?;
    let s = lambda.sqrt().expect("char 2 roots");
    Ok(f.nonzero_elements()?.filter(|&x| x * x == s).count() as u64)
}

/// Both models of the Frobenius image of `E_lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FrobeniusCheck {
    /// `#E_lambda`.
    pub count_lambda: u64,
    /// `#E_{lambda^2}`, `y^2 + xy = x^3 + lambda^2`.
    pub count_lambda_sq: u64,
    /// `#{eta^2 + xi eta = xi^3 + lambda xi}`.
    pub count_shifted: u64,
}

impl FrobeniusCheck {
    pub fn ok(&self) -> bool {
        self.count_lambda == self.count_lambda_sq && self.count_lambda_sq == self.count_shifted
    }
}

pub fn frobenius_image_check(lambda: Fe<'_>) -> Result<FrobeniusCheck> {
    let f = lambda.field();
    require_char2(f)?;
    if lambda.is_zero() {
        return Err(Error::Singular);
    }
    Ok(FrobeniusCheck {
        count_lambda: Char2Curve::family(lambda)?.count()?,
        count_lambda_sq: Char2Curve::family(lambda.square())?.count()?,
        count_shifted: count_model(f, f.zero(), lambda, f.zero())?,
    })
}

/// Summary of the characteristic-2 sweep over one field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Char2Report {
    pub n: u32,
    /// `4 | #E_lambda` for every `lambda`.
    pub family_div4: bool,
    /// For every `(beta, lambda)`: `4 | #E` iff `Tr(beta) = 0`.
    pub div4_iff_trace_zero: bool,
    /// `#E(beta) + #E(beta + alpha) = 2^(n+1) + 2` whenever `Tr(alpha) = 1`.
    pub twist_sum: bool,
    /// `Tr(alpha) = 0` leaves the count unchanged.
    pub trace_zero_same_count: bool,
    /// The trace-set count agrees with the direct count and is odd.
    pub trace_set_odd: bool,
    /// The involution `x -> sqrt(lambda)/x` has exactly one fixed point.
    pub single_fixed_point: bool,
    /// `j = 1/lambda` separates the family.
    pub j_injective: bool,
    pub hasse: bool,
    pub frobenius: bool,
}

impl Char2Report {
    pub fn ok(&self) -> bool {
        self.family_div4
            && self.div4_iff_trace_zero
            && self.twist_sum
            && self.trace_zero_same_count
            && self.trace_set_odd
            && self.single_fixed_point
            && self.j_injective
            && self.hasse
            && self.frobenius
    }
}

/// Counts of every `(beta, lambda)` curve: `counts[lambda - 1][beta]`.
pub fn all_counts(field: &Field) -> Result<Vec<Vec<u64>>> {
    require_char2(field)?;
    let q = field.order();
    field.check_cap(q.saturating_mul(q))?;
    let f = field;
    // c / x^2 = x + beta + lambda / x^2
    let inv_sq: Vec<u64> = (0..q)
        .map(|x| f.inv_raw(f.mul_raw(x, x)).unwrap_or(0))
        .collect();
    Ok(par::map_range(1, q, |lambda| {
        let shifted: Vec<u64> = (1..q)
            .map(|x| x ^ f.mul_raw(lambda, inv_sq[x as usize]))
            .collect();
        (0..q)
            .map(|beta| {
                let pairs = shifted
                    .iter()
                    .filter(|&&s| f.trace2_raw(s ^ beta) == 0)
                    .count() as u64;
                2 + 2 * pairs
            })
            .collect()
    }))
}

/// Runs every characteristic-2 check over `F_{2^n}`.
pub fn verify_char2_prop(n: u32) -> Result<Char2Report> {
    let field = Field::new(2, n)?;
    let f = &field;
    let q = f.order();
    let counts = all_counts(f)?;
    let traces: Vec<u8> = (0..q).map(|b| f.trace2_raw(b)).collect();
    let odd_alphas: Vec<u64> = (0..q).filter(|&a| traces[a as usize] == 1).collect();
    let even_alphas: Vec<u64> = (0..q).filter(|&a| traces[a as usize] == 0).collect();

    let family_div4 = counts.iter().all(|row| row[0] % 4 == 0);
    let div4_iff_trace_zero = counts.iter().all(|row| {
        row.iter()
            .enumerate()
            .all(|(b, &c)| (c % 4 == 0) == (traces[b] == 0))
    });
    let twist_sum = counts.iter().all(|row| {
        (0..q as usize).all(|b| {
            odd_alphas
                .iter()
                .all(|&a| row[b] + row[b ^ a as usize] == 2 * q + 2)
        })
    });
    let trace_zero_same_count = counts.iter().all(|row| {
        (0..q as usize).all(|b| even_alphas.iter().all(|&a| row[b] == row[b ^ a as usize]))
    });
    let hasse = counts.iter().flatten().all(|&c| {
        let t = c as i128 - q as i128 - 1;
        t * t <= 4 * q as i128
    });

    let per_lambda = par::map_range(1, q, |l| -> Result<(bool, bool, bool)> {
        let lambda = f.elem(l);
        let direct = counts[(l - 1) as usize][0];
        let size = trace_set_size(lambda)?;
        let set_ok = 2 + 2 * size == direct && size % 2 == 1;
        let fixed_ok = involution_fixed_points(lambda)? == 1;
        let sq = lambda.square().value();
        let frob = FrobeniusCheck {
            count_lambda: direct,
            count_lambda_sq: counts[(sq - 1) as usize][0],
            count_shifted: count_model(f, f.zero(), lambda, f.zero())?,
        };
        Ok((set_ok, fixed_ok, frob.ok()))
    });
    let mut trace_set_odd = true;
    let mut single_fixed_point = true;
    let mut frobenius = true;
    for r in per_lambda {
        let (a, b, c) = r?;
        trace_set_odd &= a;
        single_fixed_point &= b;
        frobenius &= c;
    }
    let mut js: Vec<u64> = f
        .nonzero_elements()?
        .map(|l| Char2Curve::family(l).map(|e| e.j_invariant().value()))
        .collect::<Result<_>>()?;
    js.sort_unstable();
    js.dedup();
    let j_injective = js.len() as u64 == q - 1;

    Ok(Char2Report {
        n,
        family_div4,
        div4_iff_trace_zero,
        twist_sum,
        trace_zero_same_count,
        trace_set_odd,
        single_fixed_point,
        j_injective,
        hasse,
        frobenius,
    })
}

/// Record for JSON export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Char2CountRecord {
    pub n: u32,
    pub lambda: Vec<u64>,
    pub beta: Vec<u64>,
    pub count: u64,
}

impl From<(&Char2Curve<'_>, u64)> for Char2CountRecord {
    fn from((e, count): (&Char2Curve<'_>, u64)) -> Self {
        Char2CountRecord {
            n: e.field.degree(),
            lambda: e.lambda.coeffs(),
            beta: e.beta.coeffs(),
            count,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_examples() {
        let f2 = Field::prime(2).unwrap();
        let e = Char2Curve::family(f2.one()).unwrap();
        assert_eq!(e.count().unwrap(), 4);
        let pts: Vec<(u64, u64)> = e
            .points()
            .unwrap()
            .iter()
            .map(|(x, y)| (x.value(), y.value()))
            .collect();
        assert_eq!(pts, vec![(0, 1), (1, 0), (1, 1)]);
        let t = e.twist(f2.one()).unwrap();
        assert_eq!(t.count().unwrap(), 2);
        assert_eq!(e.twist(f2.zero()).unwrap().count().unwrap(), 4);
    }

    #[test]
    fn f4_family_divisible_by_four() {
        let f4 = Field::new(2, 2).unwrap();
        let e = Char2Curve::family(f4.one()).unwrap();
        assert_eq!(e.count().unwrap() % 4, 0);
        // beta with trace 1 gives the twist
        let beta = f4
            .elements()
            .unwrap()
            .find(|b| b.trace2().unwrap() == 1)
            .unwrap();
        let t = Char2Curve::new(beta, f4.one()).unwrap();
        assert_eq!(t.count().unwrap(), 2 * 4 + 2 - e.count().unwrap());
    }

    #[test]
    fn counts_match_point_enumeration() {
        for n in 1..=6 {
            let f = Field::new(2, n).unwrap();
            for l in f.nonzero_elements().unwrap() {
                for b in f.elements().unwrap() {
                    let e = Char2Curve::new(b, l).unwrap();
                    let pts = e.points().unwrap();
                    assert!(pts.iter().all(|&(x, y)| e.contains(x, y)));
                    // brute force over all (x, y)
                    let brute = f
                        .elements()
                        .unwrap()
                        .flat_map(|x| f.elements().unwrap().map(move |y| (x, y)))
                        .filter(|&(x, y)| e.contains(x, y))
                        .count() as u64;
                    assert_eq!(brute + 1, e.count().unwrap());
                    assert_eq!(pts.len() as u64 + 1, e.count().unwrap());
                }
            }
        }
    }

    #[test]
    fn sweep_table_matches_direct_count() {
        for n in 1..=5 {
            let f = Field::new(2, n).unwrap();
            let table = all_counts(&f).unwrap();
            for l in f.nonzero_elements().unwrap() {
                for b in f.elements().unwrap() {
                    let direct = Char2Curve::new(b, l).unwrap().count().unwrap();
                    assert_eq!(table[(l.value() - 1) as usize][b.value() as usize], direct);
                }
            }
        }
    }

    #[test]
    fn trace_set_and_fixed_point() {
        let f = Field::new(2, 7).unwrap();
        for l in f.nonzero_elements().unwrap() {
            let e = Char2Curve::family(l).unwrap();
            assert_eq!(e.count_by_trace_set().unwrap(), e.count().unwrap());
            assert_eq!(involution_fixed_points(l).unwrap(), 1);
            let fixed = l.sqrt().unwrap().sqrt().unwrap();
            assert_eq!(fixed * fixed, l.sqrt().unwrap());
        }
    }

    #[test]
    fn frobenius_examples() {
        let f2 = Field::prime(2).unwrap();
        let c = frobenius_image_check(f2.one()).unwrap();
        assert_eq!((c.count_lambda_sq, c.count_shifted), (4, 4));
        let f8 = Field::new(2, 3).unwrap();
        for l in f8.nonzero_elements().unwrap() {
            assert!(frobenius_image_check(l).unwrap().ok());
            // (x, y) -> (x, y + lambda) carries E_{lambda^2} onto the shifted model
            let e = Char2Curve::family(l.square()).unwrap();
            for (x, y) in e.points().unwrap() {
                let eta = y + l;
                assert_eq!(eta * eta + x * eta, x * x * x + l * x);
            }
        }
    }

    #[test]
    fn small_sweeps_pass() {
        for n in 1..=6 {
            let r = verify_char2_prop(n).unwrap();
            assert!(r.ok(), "{r:?}");
        }
    }

    #[test]
    fn artin_schreier_even_degree() {
        let f = Field::new(2, 4).unwrap();
        for w in f.elements().unwrap().filter(|w| w.trace2().unwrap() == 0) {
            let z = solve_artin_schreier(w).unwrap();
            assert_eq!(z * z + z, w);
        }
    }

    #[test]
    fn errors() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(
            Char2Curve::family(f5.one()).unwrap_err(),
            Error::OddCharacteristic
        );
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(Char2Curve::family(f4.zero()).unwrap_err(), Error::Singular);
    }
}
