//! Elliptic curves with full rational 2-torsion, `delta y^2 = (x-alpha)(x-beta)(x-gamma)`.
//!
//! The Legendre curve `E_lambda` is the case `(alpha, beta, gamma) = (0, 1, lambda)`,
//! `delta = 1`, and `twist(E, d)` multiplies `delta` by `d`. The group law
//! runs on the isomorphic model `Y^2 = (X - delta alpha)(X - delta beta)(X - delta gamma)`
//! reached through `(x, y) -> (delta x, delta^2 y)`.

use std::collections::HashSet;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::field::{prime_factors, Fe, Field};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Point<'f> {
    Infinity,
    Affine { x: Fe<'f>, y: Fe<'f> },
}

impl<'f> Point<'f> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Curve<'f> {
    field: &'f Field,
    roots: [Fe<'f>; 3],
    delta: Fe<'f>,
}

impl<'f> Curve<'f> {
    /// `delta y^2 = (x-alpha)(x-beta)(x-gamma)` with distinct roots and `delta != 0`.
    pub fn new(alpha: Fe<'f>, beta: Fe<'f>, gamma: Fe<'f>, delta: Fe<'f>) -> Result<Self> {
        let field = alpha.field();
        if !field.is_odd() {
            return Err(Error::EvenCharacteristic);
        }
        if [beta, gamma, delta]
            .iter()
            .any(|e| !e.field().same_as(field))
        {
            return Err(Error::MixedFields);
        }
        if alpha == beta || beta == gamma || alpha == gamma {
            return Err(Error::Singular);
        }
        if delta.is_zero() {
            return Err(Error::ZeroTwist);
        }
        Ok(Curve {
            field,
            roots: [alpha, beta, gamma],
            delta,
        })
    }

    /// The Legendre curve `y^2 = x(x-1)(x-lambda)`.
    pub fn legendre(lambda: Fe<'f>) -> Result<Self> {
        let f = lambda.field();
        if lambda.is_zero() || lambda.is_one() {
            return Err(Error::DegenerateLambda);
        }
        Curve::new(f.zero(), f.one(), lambda, f.one())
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn roots(&self) -> [Fe<'f>; 3] {
        self.roots
    }

    pub fn delta(&self) -> Fe<'f> {
        self.delta
    }

    /// `Some(lambda)` when the curve is literally `E_lambda`.
    pub fn lambda(&self) -> Option<Fe<'f>> {
        let [a, b, g] = self.roots;
        (a.is_zero() && b.is_one() && self.delta.is_one()).then_some(g)
    }

    fn require_legendre(&self) -> Result<Fe<'f>> {
        self.lambda()
            .ok_or_else(|| Error::Invalid("operation requires a Legendre curve".into()))
    }

    /// `E^(d)`: same roots, twist coefficient multiplied by `d`.
    pub fn twist(&self, d: Fe<'f>) -> Result<Self> {
        if !d.field().same_as(self.field) {
            return Err(Error::MixedFields);
        }
        if d.is_zero() {
            return Err(Error::ZeroTwist);
        }
        Ok(Curve {
            delta: self.delta * d,
            ..*self
        })
    }

    /// The cubic `(x-alpha)(x-beta)(x-gamma)`.
    #[inline]
    pub fn cubic(&self, x: Fe<'f>) -> Fe<'f> {
        let [a, b, g] = self.roots;
        (x - a) * (x - b) * (x - g)
    }

    pub fn contains(&self, p: &Point<'f>) -> bool {
        match *p {
            Point::Infinity => true,
            Point::Affine { x, y } => {
                x.field().same_as(self.field)
                    && y.field().same_as(self.field)
                    && self.delta * y * y == self.cubic(x)
            }
        }
    }

    /// Roots of the untwisted model, `delta * root`.
    fn model_roots(&self) -> [Fe<'f>; 3] {
        self.roots.map(|r| self.delta * r)
    }

    fn model_coeffs(&self) -> (Fe<'f>, Fe<'f>) {
        let [e1, e2, e3] = self.model_roots();
        (-(e1 + e2 + e3), e1 * e2 + e1 * e3 + e2 * e3)
    }

    pub fn neg(&self, p: &Point<'f>) -> Point<'f> {
        match *p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine { x, y: -y },
        }
    }

    /// Chord-tangent addition; both points must lie on the curve.
    pub fn add(&self, p: &Point<'f>, q: &Point<'f>) -> Result<Point<'f>> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Error::NotOnCurve);
        }
        Ok(self.add_unchecked(p, q))
    }

    pub(crate) fn add_unchecked(&self, p: &Point<'f>, q: &Point<'f>) -> Point<'f> {
        let (x1, y1, x2, y2) = match (*p, *q) {
            (Point::Infinity, _) => return *q,
            (_, Point::Infinity) => return *p,
            (Point::Affine { x: a, y: b }, Point::Affine { x: c, y: d }) => (a, b, c, d),
        };
        let d = self.delta;
        let d2 = d * d;
        let (bx1, by1, bx2, by2) = (d * x1, d2 * y1, d * x2, d2 * y2);
        let (a2, a4) = self.model_coeffs();
        let slope = if bx1 == bx2 {
            if by1 != by2 || by1.is_zero() {
                return Point::Infinity;
            }
            let three = self.field.from_int(3);
            let two = self.field.from_int(2);
            (three * bx1 * bx1 + two * a2 * bx1 + a4) / (two * by1)
        } else {
            (by2 - by1) / (bx2 - bx1)
        };
        let bx3 = slope * slope - a2 - bx1 - bx2;
        let by3 = -(by1 + slope * (bx3 - bx1));
        let dinv = d.inv().expect("delta is nonzero");
        Point::Affine {
            x: bx3 * dinv,
            y: by3 * dinv * dinv,
        }
    }

    pub fn double(&self, p: &Point<'f>) -> Point<'f> {
        self.add_unchecked(p, p)
    }

    /// `[k] P` by double-and-add.
    pub fn mul(&self, p: &Point<'f>, mut k: u64) -> Point<'f> {
        let mut acc = Point::Infinity;
        let mut base = *p;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.double(&base);
            k >>= 1;
        }
        acc
    }

    /// `#E(F_q) = q + 1 + sum_x chi(delta f(x))`.
    pub fn count_points(&self) -> Result<u64> {
        let f = self.field;
        f.check_cap(f.order())?;
        let s = crate::par::sum_range(0, f.order(), |v| {
            let x = f.elem(v);
            (self.delta * self.cubic(x)).chi() as i64
        });
        Ok((f.order() as i64 + 1 + s) as u64)
    }

    /// All rational points, infinity first, then affine points by `(x, y)`.
    pub fn points(&self) -> Result<Vec<Point<'f>>> {
        let f = self.field;
        let dinv = self.delta.inv().expect("delta is nonzero");
        let mut out = vec![Point::Infinity];
        for x in f.elements()? {
            let v = self.cubic(x) * dinv;
            if let Some(r) = v.sqrt() {
                out.push(Point::Affine { x, y: r });
                if !r.is_zero() {
                    out.push(Point::Affine { x, y: -r });
                }
            }
        }
        Ok(out)
    }

    /// Order of a point given the group order `n`.
    pub fn point_order(&self, p: &Point<'f>, n: u64) -> u64 {
        let mut ord = n;
        for r in prime_factors(n) {
            while ord.is_multiple_of(r) && self.mul(p, ord / r).is_infinity() {
                ord /= r;
            }
        }
        ord
    }

    /// Invariant factors `(d1, d2)`, `d1 | d2`, of `E(F_q)`; `d2` is the exponent.
    pub fn group_structure(&self) -> Result<(u64, u64)> {
        let pts = self.points()?;
        let n = pts.len() as u64;
        let exponent = pts
            .iter()
            .fold(1u64, |acc, p| lcm(acc, self.point_order(p, n)));
        let d1 = n / exponent;
        debug_assert_eq!(exponent % d1, 0);
        Ok((d1, exponent))
    }

    /// `j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)` with `l` the cross-ratio of the roots.
    pub fn j_invariant(&self) -> Fe<'f> {
        let [a, b, g] = self.roots;
        let l = (g - a) / (b - a);
        let f = self.field;
        let num = f.from_int(256) * (l * l - l + f.one()).pow(3);
        let den = l * l * (l - f.one()) * (l - f.one());
        num / den
    }

    /// Isomorphism over `F_q`.
    ///
    /// Maps between models `y^2 = cubic` have the form `x = u^2 x' + r`,
    /// `y = u^3 y'`, so the curves are isomorphic iff some ordering of the
    /// roots satisfies `e_i - r = u^2 e'_i` with `u^2` a nonzero square.
    /// Matching the first two roots fixes `u^2`; the third confirms it.
    pub fn is_isomorphic(&self, other: &Curve<'f>) -> Result<bool> {
        if !self.field.same_as(other.field) {
            return Err(Error::MixedFields);
        }
        let e = self.model_roots();
        let e2 = other.model_roots();
        const PERMS: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for s in PERMS {
            let (a, b, c) = (e2[s[0]], e2[s[1]], e2[s[2]]);
            let u2 = (e[1] - e[0]) / (b - a);
            if u2.chi() == 1 && e[2] - e[0] == u2 * (c - a) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Whether some `E_mu` is isomorphic to this curve over `F_q`: one of the
    /// root differences `+-(e_i - e_j)` must be a square.
    pub fn is_legendre_isomorphic(&self) -> bool {
        let [e1, e2, e3] = self.model_roots();
        [e2 - e1, e3 - e1, e3 - e2]
            .iter()
            .any(|&d| d.chi() == 1 || (-d).chi() == 1)
    }

    /// The 2-descent map `(x-alpha, x-beta, x-gamma)` into square classes.
    /// At a 2-torsion point the vanishing entry is the product of the others.
    pub fn descent_image(&self, p: &Point<'f>) -> Result<[i8; 3]> {
        if !self.delta.is_one() {
            return Err(Error::TwistedDescent);
        }
        let (x, _) = match *p {
            Point::Infinity => return Err(Error::DescentAtInfinity),
            Point::Affine { x, y } => (x, y),
        };
        if !self.contains(p) {
            return Err(Error::NotOnCurve);
        }
        let mut img = self.roots.map(|r| (x - r).chi());
        if let Some(k) = img.iter().position(|&c| c == 0) {
            img[k] = img[(k + 1) % 3] * img[(k + 2) % 3];
        }
        Ok(img)
    }

    /// `2E(F_q)`, computed by doubling every rational point.
    pub fn doubles(&self) -> Result<HashSet<Point<'f>>> {
        Ok(self.points()?.iter().map(|p| self.double(p)).collect())
    }

    /// Number of rational points killed by 4.
    pub fn four_torsion_count(&self) -> Result<u64> {
        Ok(self
            .points()?
            .iter()
            .filter(|p| self.double(&self.double(p)).is_infinity())
            .count() as u64)
    }
}

impl PartialEq for Curve<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.roots == other.roots && self.delta == other.delta
    }
}

impl Eq for Curve<'_> {}

fn lcm(a: u64, b: u64) -> u64 {
    a / crate::field::gcd(a, b) * b
}

/// `[lambda] = {l, 1-l, 1/l, 1-1/l, 1/(1-l), l/(l-1)}`, sorted and deduplicated.
pub fn orbit<'f>(lambda: Fe<'f>) -> Result<Vec<Fe<'f>>> {
    if lambda.is_zero() || lambda.is_one() {
        return Err(Error::DegenerateLambda);
    }
    let one = lambda.field().one();
    let l = lambda;
    let inv = l.inv()?;
    let mut v = vec![l, one - l, inv, one - inv, (one - l).inv()?, l / (l - one)];
    v.sort();
    v.dedup();
    Ok(v)
}

/// Condition `-1, lambda, 1-lambda` all nonzero squares (full rational 4-torsion).
pub fn full_four_torsion_rational(curve: &Curve<'_>) -> Result<bool> {
    let l = curve.require_legendre()?;
    let one = curve.field().one();
    Ok((-one).chi() == 1 && l.chi() == 1 && (one - l).chi() == 1)
}

/// Parameter of the Legendre curve `E_lambda / <(0,0)>`:
/// `((sqrt(l) + 1) / (sqrt(l) - 1))^2` with the canonical square root,
/// or `None` when `lambda` is not a square.
pub fn two_isogeny<'f>(curve: &Curve<'f>) -> Result<Option<Fe<'f>>> {
    let l = curve.require_legendre()?;
    let one = curve.field().one();
    Ok(l.sqrt().map(|s| ((s + one) / (s - one)).square()))
}

impl Serialize for Curve<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let lambda = self.lambda();
        let len = if lambda.is_some() { 8 } else { 7 };
        let mut st = serializer.serialize_struct("Curve", len)?;
        st.serialize_field("p", &self.field.characteristic())?;
        st.serialize_field("n", &self.field.degree())?;
        st.serialize_field("modulus", self.field.modulus())?;
        st.serialize_field("alpha", &self.roots[0])?;
        st.serialize_field("beta", &self.roots[1])?;
        st.serialize_field("gamma", &self.roots[2])?;
        st.serialize_field("delta", &self.delta)?;
        if let Some(l) = lambda {
            st.serialize_field("lambda", &l)?;
        }
        st.end()
    }
}
