use legendre_core::char2::{involution_fixed_points, trace_set_size, Char2Curve};
use legendre_core::curve::{orbit, Curve, Point};
use legendre_core::field::{odd_prime_powers, prime_power};
use legendre_core::{Field, Poly};
use proptest::prelude::*;

fn field_for(q: u64) -> Field {
    let (p, n) = prime_power(q).unwrap();
    Field::new(p, n).unwrap()
}

fn small_q() -> impl Strategy<Value = u64> {
    prop::sample::select(odd_prime_powers(3, 121))
}

fn any_q() -> impl Strategy<Value = u64> {
    let mut qs = odd_prime_powers(3, 121);
    qs.extend([2, 4, 8, 16, 32, 64]);
    prop::sample::select(qs)
}

proptest! {
    #[test]
    fn ring_laws(q in any_q(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = field_for(q);
        let (a, b, c) = (f.element(a % q).unwrap(), f.element(b % q).unwrap(), f.element(c % q).unwrap());
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a - b + b, a);
        if !b.is_zero() {
            prop_assert_eq!(a / b * b, a);
        }
        prop_assert_eq!(a.pow(q), a);
    }

    #[test]
    fn character_is_multiplicative(q in small_q(), a in any::<u64>(), b in any::<u64>()) {
        let f = field_for(q);
        let (a, b) = (f.element(a % q).unwrap(), f.element(b % q).unwrap());
        prop_assert_eq!((a * b).chi(), a.chi() * b.chi());
        prop_assert_eq!(a.chi(), a.euler_character().unwrap());
    }

    #[test]
    fn sqrt_and_powers_match_enumeration(q in small_q(), a in 1u64..121, m in 1u64..13) {
        let f = field_for(q);
        let a = f.element(a % (q - 1) + 1).unwrap();
        let roots: Vec<_> = f.elements().unwrap().filter(|r| *r * *r == a).collect();
        match a.sqrt() {
            Some(r) => {
                prop_assert_eq!(r * r, a);
                prop_assert_eq!(r, roots[0].min(-roots[0]));
            }
            None => prop_assert!(roots.is_empty()),
        }
        let nth = f.nonzero_elements().unwrap().any(|x| x.pow(m) == a);
        prop_assert_eq!(a.is_nth_power(m).unwrap(), nth);
    }

    #[test]
    fn trace_is_additive(n in 1u32..7, a in any::<u64>(), b in any::<u64>()) {
        let f = Field::new(2, n).unwrap();
        let q = f.order();
        let (a, b) = (f.element(a % q).unwrap(), f.element(b % q).unwrap());
        prop_assert_eq!((a + b).trace2().unwrap(), a.trace2().unwrap() ^ b.trace2().unwrap());
        prop_assert_eq!(a.trace2().unwrap(), a.trace2_by_squaring().unwrap());
        prop_assert_eq!(a.square().trace2().unwrap(), a.trace2().unwrap());
    }

    #[test]
    fn divisibility_matches_gcd(
        p in prop::sample::select(vec![3u64, 5, 7, 11]),
        a in prop::collection::vec(0u64..11, 1..5),
        b in prop::collection::vec(0u64..11, 1..5),
    ) {
        let f = Field::prime(p).unwrap();
        let pa = Poly::from_raw(&f, a.iter().map(|c| c % p).collect());
        let pb = Poly::from_raw(&f, b.iter().map(|c| c % p).collect());
        prop_assume!(!pa.is_zero());
        let prod = pa.mul(&pb);
        prop_assert!(pa.divides(&prod).unwrap());
        let g = pa.gcd(&pb);
        prop_assert_eq!(pa.divides(&pb).unwrap(), g == pa.monic() || pb.is_zero());
    }

    #[test]
    fn group_law_is_associative(q in small_q(), l in 2u64..121, picks in prop::array::uniform3(any::<prop::sample::Index>())) {
        let f = field_for(q);
        let lambda = f.element(l % (q - 2) + 2).unwrap();
        let e = Curve::legendre(lambda).unwrap();
        let pts = e.points().unwrap();
        let [a, b, c] = picks.map(|i| pts[i.index(pts.len())]);
        let left = e.add(&e.add(&a, &b).unwrap(), &c).unwrap();
        let right = e.add(&a, &e.add(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(e.add(&a, &e.neg(&a)).unwrap(), Point::Infinity);
    }

    #[test]
    fn hasse_bound_and_twists(q in small_q(), l in 2u64..121) {
        let f = field_for(q);
        let lambda = f.element(l % (q - 2) + 2).unwrap();
        let e = Curve::legendre(lambda).unwrap();
        let n = e.count_points().unwrap() as i64;
        let t = n - q as i64 - 1;
        prop_assert!(t * t <= 4 * q as i64);
        prop_assert_eq!(n % 4, 0);
        let d = f.least_nonresidue().unwrap();
        prop_assert_eq!(n + e.twist(d).unwrap().count_points().unwrap() as i64, 2 * q as i64 + 2);
        let j = e.j_invariant();
        for mu in orbit(lambda).unwrap() {
            prop_assert_eq!(Curve::legendre(mu).unwrap().j_invariant(), j);
        }
    }
}

/// The trace set size is odd for every `lambda` up to `n = 12`.
#[test]
fn trace_set_is_odd_up_to_4096() {
    for n in 1..=12 {
        let f = Field::new(2, n).unwrap();
        for l in f.nonzero_elements().unwrap() {
            let size = trace_set_size(l).unwrap();
            assert_eq!(size % 2, 1, "n = {n}, lambda = {l}");
            if n <= 8 {
                assert_eq!(involution_fixed_points(l).unwrap(), 1);
                let e = Char2Curve::family(l).unwrap();
                assert_eq!(e.count().unwrap(), 2 + 2 * size);
            }
        }
    }
}

#[test]
fn orbit_sizes() {
    for q in odd_prime_powers(5, 121) {
        let f = field_for(q);
        for l in f
            .elements()
            .unwrap()
            .filter(|l| !l.is_zero() && !l.is_one())
        {
            let size = orbit(l).unwrap().len();
            assert!([1, 2, 3, 6].contains(&size));
            let one = f.one();
            let special = [-one, f.from_int(2), f.from_int(2).inv().unwrap()].contains(&l)
                || (l * l - l + one).is_zero();
            if !special {
                assert_eq!(size, 6, "q = {q}, lambda = {l}");
            }
        }
    }
}
