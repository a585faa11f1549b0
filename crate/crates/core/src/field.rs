//! Arithmetic in `F_p`, `F_{p^n}` (odd `p`) and `F_{2^n}`.
//!
//! An element is stored as its coefficient vector over the prime field,
//! packed into a single integer `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`
//! (constant term least significant). The packed value is canonical, so
//! equality and lexicographic order are plain integer comparisons.
//!
//! Extension fields up to `2^20` elements carry discrete-log tables and a
//! quadratic-character table; larger fields use schoolbook arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Default bound on the number of elements an exhaustive sweep may visit.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 20;

const TABLE_CAP: u64 = 1 << 20;
const MAX_CHARACTERISTIC: u64 = 1 << 32;
const MAX_DIGITS: usize = 64;

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// If `q = p^n` with `p` prime and `n >= 1`, returns `(p, n)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut n = 0;
    let mut m = q;
    while m > 1 {
        m /= p;
        n += 1;
    }
    Some((p, n))
}

/// Odd prime powers in `[lo, hi]`, ascending.
pub fn odd_prime_powers(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(3)..=hi)
        .filter(|&q| q % 2 == 1 && prime_power(q).is_some())
        .collect()
}

struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A finite field `F_q`, `q = p^n`, with a fixed monic irreducible modulus.
pub struct Field {
    p: u64,
    n: u32,
    q: u64,
    /// Monic modulus, constant term first, length `n + 1`; empty for prime fields.
    modulus: Vec<u64>,
    enum_cap: u64,
    logs: Option<LogTables>,
    chi: Option<Vec<i8>>,
    nonresidue: u64,
    trace_mask: u64,
}

/// Builds `F_{p^n}` with the lexicographically first irreducible modulus.
///
/// `seed` is accepted for interface stability; modulus selection is
/// deterministic and ignores it.
pub fn make_field(p: u64, n: u32, seed: u64) -> Result<Field> {
    let _ = seed;
    Field::new(p, n)
}

fn checked_order(p: u64, n: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p >= MAX_CHARACTERISTIC {
        return Err(Error::CharacteristicTooLarge(p));
    }
    let mut q: u128 = 1;
    for _ in 0..n {
        q *= p as u128;
        if q > 1u128 << 63 {
            return Err(Error::FieldTooLarge { p, n });
        }
    }
    Ok(q as u64)
}

impl Field {
    pub fn new(p: u64, n: u32) -> Result<Field> {
        let q = checked_order(p, n)?;
        if n == 1 {
            return Ok(Field::assemble(p, 1, q, Vec::new()));
        }
        let base = Field::new(p, 1)?;
        let mut digits = vec![0u64; n as usize + 1];
        digits[n as usize] = 1;
        for packed in 0..q {
            let mut v = packed;
            for d in digits.iter_mut().take(n as usize) {
                *d = v % p;
                v /= p;
            }
            if is_irreducible(&base, &digits) {
                return Ok(Field::assemble(p, n, q, digits));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1)
    }

    /// Builds `F_p[t]/(modulus)`; `modulus` is monic, constant term first.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Field> {
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::BadModulus);
        }
        let n = (modulus.len() - 1) as u32;
        let q = checked_order(p, n)?;
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus);
        }
        if n == 1 {
            return Ok(Field::assemble(p, 1, q, Vec::new()));
        }
        let base = Field::new(p, 1)?;
        if !is_irreducible(&base, modulus) {
            return Err(Error::BadModulus);
        }
        Ok(Field::assemble(p, n, q, modulus.to_vec()))
    }

    fn assemble(p: u64, n: u32, q: u64, modulus: Vec<u64>) -> Field {
        let mut field = Field {
            p,
            n,
            q,
            modulus,
            enum_cap: DEFAULT_ENUM_CAP,
            logs: None,
            chi: None,
            nonresidue: 0,
            trace_mask: 0,
        };
        if n > 1 && q <= TABLE_CAP {
            field.logs = Some(field.build_logs());
        }
        if p == 2 {
            let mut mask = 0u64;
            for i in 0..n {
                let t = field.trace_by_squaring(1u64 << i);
                mask |= t << i;
            }
            field.trace_mask = mask;
        } else {
            if q <= TABLE_CAP {
                let mut chi = vec![-1i8; q as usize];
                chi[0] = 0;
                for y in 1..q {
                    chi[field.mul_raw(y, y) as usize] = 1;
                }
                field.chi = Some(chi);
            }
            field.nonresidue = (1..q)
                .find(|&v| field.chi_raw(v) == -1)
                .expect("odd fields contain non-residues");
        }
        field
    }

    fn build_logs(&self) -> LogTables {
        let order = self.q - 1;
        let factors = prime_factors(order);
        let g = (2..self.q)
            .find(|&g| factors.iter().all(|&r| self.pow_raw(g, order / r) != 1))
            .expect("multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1u64;
        for i in 0..order {
            exp.push(x as u32);
            log[x as usize] = i as u32;
            x = self.mul_slow(x, g);
        }
        LogTables { exp, log }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Number of elements `q`.
    pub fn order(&self) -> u64 {
        self.q
    }

    /// Monic modulus, constant term first; empty for prime fields.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn is_odd(&self) -> bool {
        self.p != 2
    }

    pub fn enum_cap(&self) -> u64 {
        self.enum_cap
    }

    pub fn set_enum_cap(&mut self, cap: u64) {
        self.enum_cap = cap;
    }

    /// Fails with [`Error::CapExceeded`] when `count` exceeds the enumeration cap.
    pub fn check_cap(&self, count: u64) -> Result<()> {
        if count > self.enum_cap {
            Err(Error::CapExceeded {
                q: count,
                cap: self.enum_cap,
            })
        } else {
            Ok(())
        }
    }

    /// True when both describe the same field (same `p`, `n` and modulus).
    pub fn same_as(&self, other: &Field) -> bool {
        std::ptr::eq(self, other)
            || (self.p == other.p && self.n == other.n && self.modulus == other.modulus)
    }

    pub fn zero(&self) -> Fe<'_> {
        Fe { field: self, v: 0 }
    }

    pub fn one(&self) -> Fe<'_> {
        Fe { field: self, v: 1 }
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, k: i64) -> Fe<'_> {
        Fe {
            field: self,
            v: k.rem_euclid(self.p as i64) as u64,
        }
    }

    /// Element with the given packed value.
    pub fn element(&self, v: u64) -> Result<Fe<'_>> {
        if v >= self.q {
            return Err(Error::CoefficientOutOfRange { value: v });
        }
        Ok(Fe { field: self, v })
    }

    pub(crate) fn elem(&self, v: u64) -> Fe<'_> {
        debug_assert!(v < self.q);
        Fe { field: self, v }
    }

    /// Element from its coefficient vector (constant term first).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Fe<'_>> {
        if coeffs.len() > self.n as usize {
            return Err(Error::Invalid(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.n
            )));
        }
        let mut v = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= self.p {
                return Err(Error::CoefficientOutOfRange { value: c });
            }
            v = v * self.p + c;
        }
        Ok(Fe { field: self, v })
    }

    /// The class of `t` in `F_p[t]/(modulus)`; equals the integer `p` mod `p` for prime fields.
    pub fn generator_t(&self) -> Fe<'_> {
        if self.n == 1 {
            self.zero()
        } else {
            self.elem(self.p)
        }
    }

    /// All elements in lexicographic (packed) order.
    pub fn elements(&self) -> Result<Elements<'_>> {
        self.check_cap(self.q)?;
        Ok(Elements {
            field: self,
            next: 0,
            end: self.q,
        })
    }

    /// All nonzero elements in lexicographic order.
    pub fn nonzero_elements(&self) -> Result<Elements<'_>> {
        self.check_cap(self.q)?;
        Ok(Elements {
            field: self,
            next: 1,
            end: self.q,
        })
    }

    /// The least non-residue in packed order (odd characteristic only).
    pub fn least_nonresidue(&self) -> Option<Fe<'_>> {
        self.is_odd().then(|| self.elem(self.nonresidue))
    }

    // ---- packed-value arithmetic -------------------------------------------------

    fn unpack(&self, mut v: u64) -> [u64; MAX_DIGITS] {
        let mut d = [0u64; MAX_DIGITS];
        for slot in d.iter_mut().take(self.n as usize) {
            *slot = v % self.p;
            v /= self.p;
        }
        d
    }

    fn pack(&self, d: &[u64]) -> u64 {
        d[..self.n as usize]
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p + c)
    }

    #[inline]
    pub(crate) fn add_raw(&self, a: u64, b: u64) -> u64 {
        if self.n == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else if self.p == 2 {
            a ^ b
        } else {
            let (mut a, mut b) = (a, b);
            let mut out = 0u64;
            let mut pw = 1u64;
            for _ in 0..self.n {
                let s = a % self.p + b % self.p;
                let s = if s >= self.p { s - self.p } else { s };
                out += s * pw;
                a /= self.p;
                b /= self.p;
                pw = pw.wrapping_mul(self.p);
            }
            out
        }
    }

    #[inline]
    pub(crate) fn neg_raw(&self, a: u64) -> u64 {
        if self.n == 1 {
            if a == 0 {
                0
            } else {
                self.p - a
            }
        } else if self.p == 2 {
            a
        } else {
            let mut a = a;
            let mut out = 0u64;
            let mut pw = 1u64;
            for _ in 0..self.n {
                let c = a % self.p;
                if c != 0 {
                    out += (self.p - c) * pw;
                }
                a /= self.p;
                pw = pw.wrapping_mul(self.p);
            }
            out
        }
    }

    #[inline]
    pub(crate) fn sub_raw(&self, a: u64, b: u64) -> u64 {
        if self.n == 1 {
            if a >= b {
                a - b
            } else {
                a + self.p - b
            }
        } else {
            self.add_raw(a, self.neg_raw(b))
        }
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u64, b: u64) -> u64 {
        if self.n == 1 {
            return a * b % self.p;
        }
        match &self.logs {
            Some(t) => {
                if a == 0 || b == 0 {
                    return 0;
                }
                let order = self.q - 1;
                let e = t.log[a as usize] as u64 + t.log[b as usize] as u64;
                let e = if e >= order { e - order } else { e };
                t.exp[e as usize] as u64
            }
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        if self.n == 1 {
            return a * b % self.p;
        }
        let n = self.n as usize;
        if self.p == 2 {
            let mut prod: u128 = 0;
            for i in 0..n {
                if (b >> i) & 1 == 1 {
                    prod ^= (a as u128) << i;
                }
            }
            let poly: u128 = self
                .modulus
                .iter()
                .enumerate()
                .fold(0u128, |acc, (i, &c)| acc | ((c as u128) << i));
            for i in (n..2 * n - 1).rev() {
                if (prod >> i) & 1 == 1 {
                    prod ^= poly << (i - n);
                }
            }
            return prod as u64;
        }
        let p = self.p;
        let da = self.unpack(a);
        let db = self.unpack(b);
        let mut prod = [0u64; 2 * MAX_DIGITS];
        for i in 0..n {
            if da[i] == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] = (prod[i + j] + da[i] * db[j] % p) % p;
            }
        }
        for i in (n..2 * n - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..n {
                let sub = c * self.modulus[j] % p;
                prod[i - n + j] = (prod[i - n + j] + p - sub) % p;
            }
        }
        self.pack(&prod)
    }

    pub(crate) fn pow_raw(&self, a: u64, e: u64) -> u64 {
        if let Some(t) = &self.logs {
            if a == 0 {
                return if e == 0 { 1 } else { 0 };
            }
            let order = (self.q - 1) as u128;
            let k = (t.log[a as usize] as u128 * (e as u128 % order)) % order;
            return t.exp[k as usize] as u64;
        }
        let mut base = a;
        let mut e = e;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn inv_raw(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if self.n == 1 {
            let (mut r0, mut r1) = (self.p as i64, a as i64);
            let (mut t0, mut t1) = (0i64, 1i64);
            while r1 != 0 {
                let k = r0 / r1;
                (r0, r1) = (r1, r0 - k * r1);
                (t0, t1) = (t1, t0 - k * t1);
            }
            return Some(t0.rem_euclid(self.p as i64) as u64);
        }
        if let Some(t) = &self.logs {
            let order = self.q - 1;
            let l = t.log[a as usize] as u64;
            return Some(t.exp[((order - l) % order) as usize] as u64);
        }
        Some(self.pow_raw(a, self.q - 2))
    }

    #[inline]
    pub(crate) fn chi_raw(&self, a: u64) -> i8 {
        match &self.chi {
            Some(t) => t[a as usize],
            None => self.euler_raw(a),
        }
    }

    fn euler_raw(&self, a: u64) -> i8 {
        if a == 0 {
            return 0;
        }
        if self.pow_raw(a, (self.q - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }

    fn trace_by_squaring(&self, a: u64) -> u64 {
        let mut acc = 0u64;
        let mut x = a;
        for _ in 0..self.n {
            acc = self.add_raw(acc, x);
            x = self.mul_raw(x, x);
        }
        acc
    }

    #[inline]
    pub(crate) fn trace2_raw(&self, a: u64) -> u8 {
        ((a & self.trace_mask).count_ones() & 1) as u8
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{} mod {:?}", self.p, self.n, self.modulus)
        }
    }
}

fn is_irreducible(base: &Field, coeffs: &[u64]) -> bool {
    let f = Poly::from_raw(base, coeffs.to_vec());
    let n = coeffs.len() - 1;
    let x = Poly::x(base);
    let x_red = x.rem(&f).expect("modulus is nonzero");
    let mut h = x_red.clone();
    for d in 1..=n {
        h = h.pow_mod(base.p, &f).expect("modulus is nonzero");
        if d < n {
            let g = h.sub(&x_red).gcd(&f);
            if g.degree() != Some(0) {
                return false;
            }
        } else {
            return h == x_red;
        }
    }
    false
}

/// Iterator over field elements in packed order.
#[derive(Clone)]
pub struct Elements<'f> {
    field: &'f Field,
    next: u64,
    end: u64,
}

impl<'f> Iterator for Elements<'f> {
    type Item = Fe<'f>;

    fn next(&mut self) -> Option<Fe<'f>> {
        if self.next >= self.end {
            return None;
        }
        let v = self.next;
        self.next += 1;
        Some(Fe {
            field: self.field,
            v,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Elements<'_> {}

/// A field element. Cheap to copy; arithmetic between elements of
/// different fields panics (use the `try_*` methods for a `Result`).
#[derive(Clone, Copy)]
pub struct Fe<'f> {
    field: &'f Field,
    v: u64,
}

impl<'f> Fe<'f> {
    pub fn field(&self) -> &'f Field {
        self.field
    }

    /// Packed coefficient value `c_0 + c_1 p + ...`.
    pub fn value(&self) -> u64 {
        self.v
    }

    /// Coefficient vector of length `n`, constant term first.
    pub fn coeffs(&self) -> Vec<u64> {
        self.field.unpack(self.v)[..self.field.n as usize].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.v == 0
    }

    pub fn is_one(&self) -> bool {
        self.v == 1
    }

    /// True when the element lies in the prime subfield.
    pub fn in_prime_field(&self) -> bool {
        self.v < self.field.p
    }

    pub fn square(self) -> Fe<'f> {
        self * self
    }

    pub fn pow(self, e: u64) -> Fe<'f> {
        Fe {
            field: self.field,
            v: self.field.pow_raw(self.v, e),
        }
    }

    pub fn inv(self) -> Result<Fe<'f>> {
        self.field
            .inv_raw(self.v)
            .map(|v| Fe {
                field: self.field,
                v,
            })
            .ok_or(Error::ZeroInverse)
    }

    fn check(&self, other: &Fe<'_>) -> Result<()> {
        if self.field.same_as(other.field) {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn try_add(self, rhs: Fe<'f>) -> Result<Fe<'f>> {
        self.check(&rhs)?;
        Ok(self + rhs)
    }

    pub fn try_sub(self, rhs: Fe<'f>) -> Result<Fe<'f>> {
        self.check(&rhs)?;
        Ok(self - rhs)
    }

    pub fn try_mul(self, rhs: Fe<'f>) -> Result<Fe<'f>> {
        self.check(&rhs)?;
        Ok(self * rhs)
    }

    pub fn try_div(self, rhs: Fe<'f>) -> Result<Fe<'f>> {
        self.check(&rhs)?;
        Ok(self * rhs.inv()?)
    }

    /// Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
    pub fn quadratic_character(self) -> Result<i8> {
        if !self.field.is_odd() {
            return Err(Error::EvenCharacteristic);
        }
        Ok(self.field.chi_raw(self.v))
    }

    /// Quadratic character without the characteristic check.
    #[inline]
    pub fn chi(self) -> i8 {
        debug_assert!(self.field.is_odd());
        self.field.chi_raw(self.v)
    }

    /// Euler's criterion `a^((q-1)/2)`, bypassing the lookup table.
    pub fn euler_character(self) -> Result<i8> {
        if !self.field.is_odd() {
            return Err(Error::EvenCharacteristic);
        }
        Ok(self.field.euler_raw(self.v))
    }

    pub fn is_square(self) -> bool {
        !self.field.is_odd() || self.field.chi_raw(self.v) >= 0
    }

    /// Whether `self = b^m` for some `b`, via `self^((q-1)/gcd(m, q-1)) = 1`.
    pub fn is_nth_power(self, m: u64) -> Result<bool> {
        if !self.field.is_odd() {
            return Err(Error::EvenCharacteristic);
        }
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let order = self.field.q - 1;
        let g = gcd(m, order);
        Ok(self.field.pow_raw(self.v, order / g) == 1)
    }

    /// Square root, choosing the lexicographically smaller of `r` and `-r`.
    ///
    /// Returns `None` for non-residues. In characteristic 2 every element has
    /// exactly one root, `a^(2^(n-1))`.
    pub fn sqrt(self) -> Option<Fe<'f>> {
        let f = self.field;
        if self.v == 0 {
            return Some(self);
        }
        if f.p == 2 {
            return Some(self.pow(f.q / 2));
        }
        if f.chi_raw(self.v) != 1 {
            return None;
        }
        let r = if f.q % 4 == 3 {
            f.pow_raw(self.v, (f.q + 1) / 4)
        } else {
            tonelli_shanks(f, self.v)
        };
        debug_assert_eq!(f.mul_raw(r, r), self.v);
        let other = f.neg_raw(r);
        Some(Fe {
            field: f,
            v: r.min(other),
        })
    }

    /// Absolute trace to `F_2` (characteristic 2 only).
    pub fn trace2(self) -> Result<u8> {
        if self.field.is_odd() {
            return Err(Error::OddCharacteristic);
        }
        Ok(self.field.trace2_raw(self.v))
    }

    /// `a + a^2 + ... + a^(2^(n-1))` evaluated by repeated squaring.
    pub fn trace2_by_squaring(self) -> Result<u8> {
        if self.field.is_odd() {
            return Err(Error::OddCharacteristic);
        }
        Ok(self.field.trace_by_squaring(self.v) as u8)
    }
}

fn tonelli_shanks(f: &Field, a: u64) -> u64 {
    let mut s = 0;
    let mut odd = f.q - 1;
    while odd.is_multiple_of(2) {
        odd /= 2;
        s += 1;
    }
    let mut m = s;
    let mut c = f.pow_raw(f.nonresidue, odd);
    let mut t = f.pow_raw(a, odd);
    let mut r = f.pow_raw(a, odd.div_ceil(2));
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = f.mul_raw(t2, t2);
            i += 1;
        }
        let mut b = c;
        for _ in 0..(m - i - 1) {
            b = f.mul_raw(b, b);
        }
        m = i;
        c = f.mul_raw(b, b);
        t = f.mul_raw(t, c);
        r = f.mul_raw(r, b);
    }
    r
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl PartialEq for Fe<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.field.same_as(other.field)
    }
}

impl Eq for Fe<'_> {}

impl PartialOrd for Fe<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fe<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.v.cmp(&other.v)
    }
}

impl Hash for Fe<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.v.hash(state);
    }
}

impl fmt::Display for Fe<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.n == 1 {
            return write!(f, "{}", self.v);
        }
        let c = self.coeffs();
        let mut terms = Vec::new();
        for (i, &ci) in c.iter().enumerate().rev() {
            if ci == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            terms.push(match (ci, i) {
                (_, 0) => ci.to_string(),
                (1, _) => mono,
                _ => format!("{ci}{mono}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl fmt::Debug for Fe<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Fe<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let c = self.coeffs();
        let mut seq = serializer.serialize_seq(Some(c.len()))?;
        for x in c {
            seq.serialize_element(&x)?;
        }
        seq.end()
    }
}

#[inline]
#[track_caller]
fn same_field(a: &Field, b: &Field) {
    assert!(a.same_as(b), "mixed-field operands: {a:?} vs {b:?}");
}

impl<'f> Add for Fe<'f> {
    type Output = Fe<'f>;
    #[inline]
    fn add(self, rhs: Fe<'f>) -> Fe<'f> {
        same_field(self.field, rhs.field);
        Fe {
            field: self.field,
            v: self.field.add_raw(self.v, rhs.v),
        }
    }
}

impl<'f> Sub for Fe<'f> {
    type Output = Fe<'f>;
    #[inline]
    fn sub(self, rhs: Fe<'f>) -> Fe<'f> {
        same_field(self.field, rhs.field);
        Fe {
            field: self.field,
            v: self.field.sub_raw(self.v, rhs.v),
        }
    }
}

impl<'f> Mul for Fe<'f> {
    type Output = Fe<'f>;
    #[inline]
    fn mul(self, rhs: Fe<'f>) -> Fe<'f> {
        same_field(self.field, rhs.field);
        Fe {
            field: self.field,
            v: self.field.mul_raw(self.v, rhs.v),
        }
    }
}

impl<'f> Div for Fe<'f> {
    type Output = Fe<'f>;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fe<'f>) -> Fe<'f> {
        same_field(self.field, rhs.field);
        self * rhs.inv().expect("division by zero field element")
    }
}

impl<'f> Neg for Fe<'f> {
    type Output = Fe<'f>;
    #[inline]
    fn neg(self) -> Fe<'f> {
        Fe {
            field: self.field,
            v: self.field.neg_raw(self.v),
        }
    }
}

impl<'f> AddAssign for Fe<'f> {
    fn add_assign(&mut self, rhs: Fe<'f>) {
        *self = *self + rhs;
    }
}

impl<'f> SubAssign for Fe<'f> {
    fn sub_assign(&mut self, rhs: Fe<'f>) {
        *self = *self - rhs;
    }
}

impl<'f> MulAssign for Fe<'f> {
    fn mul_assign(&mut self, rhs: Fe<'f>) {
        *self = *self * rhs;
    }
}
