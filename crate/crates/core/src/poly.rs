//! Dense univariate polynomials over a finite field.

use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

/// Polynomial with coefficients stored as packed field values, constant
/// term first. The leading coefficient is nonzero; zero is the empty vector.
#[derive(Clone)]
pub struct Poly<'f> {
    field: &'f Field,
    c: Vec<u64>,
}

impl<'f> Poly<'f> {
    pub fn zero(field: &'f Field) -> Self {
        Poly {
            field,
            c: Vec::new(),
        }
    }

    pub fn constant(c: Fe<'f>) -> Self {
        Poly::from_raw(c.field(), vec![c.value()])
    }

    pub fn x(field: &'f Field) -> Self {
        Poly::from_raw(field, vec![0, 1])
    }

    /// `c x^k`.
    pub fn monomial(c: Fe<'f>, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c.value();
        Poly::from_raw(c.field(), v)
    }

    /// From packed coefficient values, constant term first.
    pub fn from_raw(field: &'f Field, mut c: Vec<u64>) -> Self {
        assert!(
            c.iter().all(|&v| v < field.order()),
            "coefficient out of range"
        );
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { field, c }
    }

    pub fn from_coeffs(field: &'f Field, coeffs: &[Fe<'f>]) -> Result<Self> {
        if coeffs.iter().any(|c| !c.field().same_as(field)) {
            return Err(Error::MixedFields);
        }
        Ok(Poly::from_raw(
            field,
            coeffs.iter().map(|c| c.value()).collect(),
        ))
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Fe<'f> {
        self.field.elem(self.c.get(i).copied().unwrap_or(0))
    }

    /// Packed coefficients, constant term first.
    pub fn coeffs_raw(&self) -> &[u64] {
        &self.c
    }

    pub fn leading(&self) -> Option<Fe<'f>> {
        self.c.last().map(|&v| self.field.elem(v))
    }

    pub fn monic(&self) -> Self {
        match self.c.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = self
                    .field
                    .inv_raw(lc)
                    .expect("leading coefficient is nonzero");
                self.scale_raw(inv)
            }
        }
    }

    fn scale_raw(&self, k: u64) -> Self {
        let f = self.field;
        Poly::from_raw(f, self.c.iter().map(|&a| f.mul_raw(a, k)).collect())
    }

    pub fn scale(&self, k: Fe<'f>) -> Self {
        self.assert_field(k.field());
        self.scale_raw(k.value())
    }

    #[track_caller]
    fn assert_field(&self, other: &Field) {
        assert!(self.field.same_as(other), "mixed-field polynomial operands");
    }

    fn check_field(&self, other: &Poly<'_>) -> Result<()> {
        if self.field.same_as(other.field) {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, rhs: &Poly<'f>) -> Self {
        self.assert_field(rhs.field);
        let f = self.field;
        let len = self.c.len().max(rhs.c.len());
        let c = (0..len)
            .map(|i| {
                f.add_raw(
                    self.c.get(i).copied().unwrap_or(0),
                    rhs.c.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Poly::from_raw(f, c)
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        Poly::from_raw(f, self.c.iter().map(|&a| f.neg_raw(a)).collect())
    }

    pub fn sub(&self, rhs: &Poly<'f>) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Poly<'f>) -> Self {
        self.assert_field(rhs.field);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let f = self.field;
        let mut c = vec![0u64; self.c.len() + rhs.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.c.iter().enumerate() {
                c[i + j] = f.add_raw(c[i + j], f.mul_raw(a, b));
            }
        }
        Poly::from_raw(f, c)
    }

    /// Schoolbook division: `self = quotient * divisor + remainder`.
    pub fn div_rem(&self, divisor: &Poly<'f>) -> Result<(Self, Self)> {
        self.check_field(divisor)?;
        let f = self.field;
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv_lc = f
            .inv_raw(divisor.c[dd])
            .expect("leading coefficient is nonzero");
        let mut quot = vec![0u64; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let top = r[i];
            if top == 0 {
                continue;
            }
            let k = f.mul_raw(top, inv_lc);
            quot[i - dd] = k;
            for (j, &dc) in divisor.c.iter().enumerate() {
                let idx = i - dd + j;
                r[idx] = f.sub_raw(r[idx], f.mul_raw(k, dc));
            }
        }
        r.truncate(dd);
        Ok((Poly::from_raw(f, quot), Poly::from_raw(f, r)))
    }

    pub fn rem(&self, divisor: &Poly<'f>) -> Result<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Monic greatest common divisor; `gcd(f, 0) = monic(f)`.
    pub fn gcd(&self, other: &Poly<'f>) -> Self {
        self.try_gcd(other)
            .expect("mixed-field polynomial operands")
    }

    pub fn try_gcd(&self, other: &Poly<'f>) -> Result<Self> {
        self.check_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Whether `self` divides `g`.
    pub fn divides(&self, g: &Poly<'f>) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(g.rem(self)?.is_zero())
    }

    /// `self^e mod modulus` by binary exponentiation.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly<'f>) -> Result<Self> {
        self.check_field(modulus)?;
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::constant(self.field.one()).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            base = base.mul(&base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn eval(&self, x: Fe<'f>) -> Fe<'f> {
        self.assert_field(x.field());
        self.field.elem(self.eval_raw(self.field, x.value()))
    }

    fn eval_raw(&self, target: &Field, x: u64) -> u64 {
        self.c
            .iter()
            .rev()
            .fold(0u64, |acc, &c| target.add_raw(target.mul_raw(acc, x), c))
    }

    /// Evaluate at a point of an extension field, embedding the coefficients.
    ///
    /// Supported embeddings: prime field into any field of the same
    /// characteristic, and a field into itself.
    pub fn eval_embedded<'g>(&self, x: Fe<'g>) -> Result<Fe<'g>> {
        let target = x.field();
        self.check_embeds(target)?;
        Ok(target.elem(self.eval_raw(target, x.value())))
    }

    fn check_embeds(&self, target: &Field) -> Result<()> {
        let src = self.field;
        if src.same_as(target)
            || (src.degree() == 1 && src.characteristic() == target.characteristic())
        {
            Ok(())
        } else {
            Err(Error::IncompatibleFields)
        }
    }

    /// All distinct roots in `target`, by exhaustive evaluation, ascending.
    pub fn roots_in<'g>(&self, target: &'g Field) -> Result<Vec<Fe<'g>>> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        self.check_embeds(target)?;
        target.check_cap(target.order())?;
        let roots = crate::par::filter_range(0, target.order(), |x| self.eval_raw(target, x) == 0);
        Ok(roots.into_iter().map(|v| target.elem(v)).collect())
    }

    /// `f(-x)`: negates the odd-degree coefficients.
    pub fn substitute_neg(&self) -> Self {
        let f = self.field;
        Poly::from_raw(
            f,
            self.c
                .iter()
                .enumerate()
                .map(|(i, &a)| if i % 2 == 1 { f.neg_raw(a) } else { a })
                .collect(),
        )
    }
}

/// Deuring polynomial `H_p(x) = (-1)^m sum_{k=0}^m C(m,k)^2 x^k`, `m = (p-1)/2`,
/// over the prime field `field`. Binomials come from Pascal's triangle mod `p`.
pub fn deuring(field: &Field) -> Result<Poly<'_>> {
    let p = field.characteristic();
    if field.degree() != 1 {
        return Err(Error::Invalid(
            "the Deuring polynomial lives over the prime field".into(),
        ));
    }
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let m = ((p - 1) / 2) as usize;
    let mut row = vec![1u64];
    for _ in 0..m {
        let mut next = vec![1u64; row.len() + 1];
        for k in 1..row.len() {
            next[k] = (row[k - 1] + row[k]) % p;
        }
        row = next;
    }
    let sign_negative = m % 2 == 1;
    let c = row
        .iter()
        .map(|&b| {
            let sq = b * b % p;
            if sign_negative {
                field.neg_raw(sq)
            } else {
                sq
            }
        })
        .collect();
    Ok(Poly::from_raw(field, c))
}

impl PartialEq for Poly<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_as(other.field) && self.c == other.c
    }
}

impl Eq for Poly<'_> {}

impl fmt::Display for Poly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for i in (0..self.c.len()).rev() {
            if self.c[i] == 0 {
                continue;
            }
            let c = self.coeff(i);
            let cs = if self.field.degree() == 1 {
                c.to_string()
            } else {
                format!("({c})")
            };
            terms.push(match i {
                0 => cs,
                1 if c.is_one() => "x".into(),
                1 => format!("{cs}x"),
                _ if c.is_one() => format!("x^{i}"),
                _ => format!("{cs}x^{i}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Poly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Poly<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.c.len()))?;
        for i in 0..self.c.len() {
            seq.serialize_element(&self.coeff(i))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<'f>(f: &'f Field, c: &[i64]) -> Poly<'f> {
        Poly::from_raw(f, c.iter().map(|&v| f.from_int(v).value()).collect())
    }

    #[test]
    fn deuring_small_primes() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(deuring(&f3).unwrap().coeffs_raw(), &[2, 2]);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(deuring(&f5).unwrap().coeffs_raw(), &[1, 4, 1]);
        let f7 = Field::prime(7).unwrap();
        assert_eq!(deuring(&f7).unwrap().coeffs_raw(), &[6, 5, 5, 6]);
        let f2 = Field::prime(2).unwrap();
        assert_eq!(deuring(&f2).unwrap_err(), Error::EvenCharacteristic);
    }

    #[test]
    fn deuring_matches_factorial_binomials() {
        // independent route: exact binomials in u128, reduced afterwards
        for &pr in &[11u64, 13, 29, 31] {
            let f = Field::prime(pr).unwrap();
            let h = deuring(&f).unwrap();
            let m = (pr - 1) / 2;
            let mut binom: u128 = 1;
            for k in 0..=m {
                if k > 0 {
                    binom = binom * (m - k + 1) as u128 / k as u128;
                }
                let sq = (binom % pr as u128).pow(2) % pr as u128;
                let expect = if m % 2 == 1 {
                    (pr as u128 - sq) % pr as u128
                } else {
                    sq
                };
                assert_eq!(h.coeffs_raw()[k as usize] as u128, expect);
            }
        }
    }

    #[test]
    fn gcd_examples() {
        let f5 = Field::prime(5).unwrap();
        let g = p(&f5, &[-1, 0, 1]).gcd(&p(&f5, &[-1, 1]));
        assert_eq!(g.coeffs_raw(), &[4, 1]);
        let a = p(&f5, &[2, 0, 3]);
        assert_eq!(a.gcd(&Poly::zero(&f5)), a.monic());
        let f7 = Field::prime(7).unwrap();
        let h7 = deuring(&f7).unwrap();
        let xq = Poly::x(&f7).pow_mod(7, &h7).unwrap().sub(&Poly::x(&f7));
        assert_eq!(h7.gcd(&xq).degree(), Some(3));
        let f11 = Field::prime(11).unwrap();
        assert_eq!(a.try_gcd(&Poly::x(&f11)).unwrap_err(), Error::MixedFields);
    }

    #[test]
    fn divides_examples() {
        let f5 = Field::prime(5).unwrap();
        assert!(p(&f5, &[1, 1]).divides(&p(&f5, &[-1, 0, 1])).unwrap());
        assert!(!p(&f5, &[0, 0, 1]).divides(&p(&f5, &[0, 1])).unwrap());
        assert_eq!(
            Poly::zero(&f5).divides(&p(&f5, &[1])).unwrap_err(),
            Error::ZeroDivisor
        );
        let f7 = Field::prime(7).unwrap();
        let hneg = deuring(&f7).unwrap().substitute_neg();
        assert!(hneg.divides(&p(&f7, &[-1, 0, 0, 0, 0, 0, 1])).unwrap());
    }

    #[test]
    fn roots_examples() {
        let f7 = Field::prime(7).unwrap();
        let r: Vec<u64> = deuring(&f7)
            .unwrap()
            .roots_in(&f7)
            .unwrap()
            .iter()
            .map(|e| e.value())
            .collect();
        assert_eq!(r, vec![2, 4, 6]);
        let f5 = Field::prime(5).unwrap();
        let h5 = deuring(&f5).unwrap();
        assert!(h5.roots_in(&f5).unwrap().is_empty());
        let f25 = Field::new(5, 2).unwrap();
        let roots = h5.roots_in(&f25).unwrap();
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert!(h5.eval_embedded(r).unwrap().is_zero());
        }
        let f49 = Field::new(7, 2).unwrap();
        assert_eq!(
            Poly::x(&f25).roots_in(&f49).unwrap_err(),
            Error::IncompatibleFields
        );
    }

    #[test]
    fn substitute_neg_examples() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(p(&f7, &[1, 1]).substitute_neg().coeffs_raw(), &[1, 6]);
        assert_eq!(p(&f7, &[0, 0, 1]).substitute_neg().coeffs_raw(), &[0, 0, 1]);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(deuring(&f3).unwrap().substitute_neg().coeffs_raw(), &[2, 1]);
    }

    #[test]
    fn div_rem_reconstructs() {
        let f25 = Field::new(5, 2).unwrap();
        let t = f25.generator_t();
        let a = Poly::from_coeffs(&f25, &[t, f25.one(), t * t, t + f25.one()]).unwrap();
        let b = Poly::from_coeffs(&f25, &[f25.from_int(3), t]).unwrap();
        let (qt, r) = a.div_rem(&b).unwrap();
        assert_eq!(qt.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }
}
