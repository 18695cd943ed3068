//! Exact scalars: elements of the cyclotomic field Q(zeta_N).
//!
//! A [`Scalar`] is a polynomial in `z = exp(2*pi*i/N)` with rational
//! coefficients, kept reduced modulo the N-th cyclotomic polynomial, so the
//! coefficient vector always has length phi(N) (the power basis
//! `1, z, ..., z^{phi(N)-1}`). `N = 1` gives plain rationals. Every operation
//! is exact; nothing in this crate touches floating point.
//!
//! All scalars participating in one computation must share the same `order`;
//! mixing orders is a programming error and panics.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

/// Exact rational numbers with arbitrary-precision integer parts.
pub type Rational = BigRational;

/// Euler's totient, by trial-division factorization. Cyclotomic orders are
/// tiny (single digits in the shipped scenarios), so this is never hot.
pub fn euler_phi(n: u32) -> u32 {
    assert!(n >= 1, "euler_phi(0) is undefined");
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Coefficients (constant term first) of the N-th cyclotomic polynomial,
/// computed by the recursion `prod_{d | N} Phi_d(x) = x^N - 1` and cached.
/// The coefficients are integers; we store them as `BigInt`.
fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    static CACHE: Mutex<BTreeMap<u32, Vec<BigInt>>> = Mutex::new(BTreeMap::new());
    if let Some(p) = CACHE.lock().unwrap().get(&n) {
        return p.clone();
    }
    let poly = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^n - 1
        let mut num = vec![BigInt::zero(); (n + 1) as usize];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        // divide by Phi_d for every proper divisor d of n
        for d in 1..n {
            if n % d == 0 {
                num = int_poly_div_exact(&num, &cyclotomic_poly(d));
            }
        }
        num
    };
    CACHE.lock().unwrap().insert(n, poly.clone());
    poly
}

/// Exact division of integer polynomials with monic divisor; panics when the
/// division is not exact (never happens for cyclotomic factors).
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        quot[k] = c.clone();
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// An element of Q(zeta_N) in the power basis modulo Phi_N.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    order: u32,
    /// Exactly `phi(order)` coefficients, constant term first.
    coeffs: Vec<Rational>,
}

impl Scalar {
    /// The zero element of Q(zeta_order).
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be at least 1");
        Scalar { order, coeffs: vec![Rational::zero(); euler_phi(order) as usize] }
    }

    /// The unit element.
    pub fn one(order: u32) -> Self {
        Scalar::from_rational(order, Rational::one())
    }

    /// Embeds a rational number.
    pub fn from_rational(order: u32, r: Rational) -> Self {
        let mut s = Scalar::zero(order);
        s.coeffs[0] = r;
        s
    }

    /// Embeds an integer.
    pub fn from_integer(order: u32, k: i64) -> Self {
        Scalar::from_rational(order, Rational::from(BigInt::from(k)))
    }

    /// Convenience constructor for the fraction `p/q`.
    pub fn ratio(order: u32, p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar::from_rational(order, Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// `zeta^k` for the primitive root `zeta = exp(2*pi*i/order)`; `k` may be
    /// negative.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Scalar::reduce(order, poly)
    }

    /// Builds a scalar from an arbitrary-degree polynomial in zeta by
    /// reduction modulo Phi_order.
    fn reduce(order: u32, mut poly: Vec<Rational>) -> Self {
        let phi = euler_phi(order) as usize;
        if poly.len() > phi {
            let modulus = cyclotomic_poly(order);
            let dd = modulus.len() - 1; // == phi
            for k in (dd..poly.len()).rev() {
                let c = std::mem::replace(&mut poly[k], Rational::zero());
                if !c.is_zero() {
                    for (j, mj) in modulus.iter().take(dd).enumerate() {
                        let t = &c * Rational::from(mj.clone());
                        poly[k - dd + j] -= t;
                    }
                }
            }
        }
        poly.resize(phi, Rational::zero());
        Scalar { order, coeffs: poly }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Returns the rational value when the scalar lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn assert_same_order(&self, other: &Scalar) {
        assert_eq!(
            self.order, other.order,
            "scalars of different cyclotomic orders cannot be combined"
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Scalar { order: self.order, coeffs }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Scalar { order: self.order, coeffs }
    }

    pub fn neg(&self) -> Scalar {
        Scalar { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.assert_same_order(other);
        let mut poly = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                poly[i + j] += a * b;
            }
        }
        Scalar::reduce(self.order, poly)
    }

    pub fn mul_rational(&self, r: &Rational) -> Scalar {
        Scalar { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplicative inverse, `None` for zero. Uses the extended Euclidean
    /// algorithm in Q[x] against Phi_order, which is irreducible, so every
    /// nonzero residue is invertible.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        let modulus: Vec<Rational> = cyclotomic_poly(self.order)
            .into_iter()
            .map(Rational::from)
            .collect();
        // Invariants: r0 = s0 * self (mod Phi), r1 = s1 * self (mod Phi).
        let mut r0 = modulus;
        let mut r1 = trim(self.coeffs.clone());
        let mut s0 = vec![];
        let mut s1 = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is now a nonzero constant gcd(self, Phi); normalize s0 by it.
        assert_eq!(r0.len(), 1, "cyclotomic polynomial must be coprime to nonzero residues");
        let c = r0[0].clone();
        let inv: Vec<Rational> = s0.into_iter().map(|a| a / &c).collect();
        Some(Scalar::reduce(self.order, inv))
    }

    /// Integer power, with negative exponents through the inverse. Panics on
    /// `0^k` for `k < 0`.
    pub fn pow(&self, k: i64) -> Scalar {
        if k < 0 {
            return self
                .inverse()
                .expect("cannot raise zero to a negative power")
                .pow(-k);
        }
        let mut acc = Scalar::one(self.order);
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// The coefficient vector in the power basis (length phi(order)).
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!den.is_empty());
    let mut rem = num.to_vec();
    if rem.len() < den.len() {
        return (vec![], trim(rem));
    }
    let lead = den.last().unwrap().clone();
    let dd = den.len() - 1;
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / &lead;
        quot[k] = c.clone();
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                let t = &c * dj;
                rem[k + j] -= t;
            }
        }
    }
    (trim(quot), trim(rem))
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Canonical form like `1 - 3/2*z + z^3`; `z` denotes the primitive
    /// order-th root of unity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let coeff_part = fmt_rational(&mag);
            match e {
                0 => f.write_str(&coeff_part)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", coeff_part)?;
                    }
                    if e == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{}", e)?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar[{}]({})", self.order, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int_coeffs(p: &[BigInt]) -> Vec<i64> {
        p.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn cyclotomic_polynomials_match_reference_values() {
        assert_eq!(int_coeffs(&cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(int_coeffs(&cyclotomic_poly(2)), vec![1, 1]);
        assert_eq!(int_coeffs(&cyclotomic_poly(3)), vec![1, 1, 1]);
        assert_eq!(int_coeffs(&cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(int_coeffs(&cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(int_coeffs(&cyclotomic_poly(8)), vec![1, 0, 0, 0, 1]);
        assert_eq!(int_coeffs(&cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_values() {
        for (n, expected) in [(1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (8, 4), (12, 4)] {
            assert_eq!(euler_phi(n), expected);
            assert_eq!(cyclotomic_poly(n).len() as u32 - 1, expected);
        }
    }

    #[test]
    fn zeta_has_exact_order() {
        for n in [1u32, 2, 3, 4, 5, 6, 8, 12] {
            let z = Scalar::zeta_pow(n, 1);
            assert!(z.pow(n as i64).is_one(), "zeta_{n}^{n} must be 1");
            for k in 1..n {
                assert!(!z.pow(k as i64).is_one(), "zeta_{n}^{k} must not be 1");
            }
        }
    }

    #[test]
    fn sum_of_all_roots_vanishes() {
        for n in [2u32, 3, 4, 6, 8] {
            let mut acc = Scalar::zero(n);
            for k in 0..n {
                acc = acc.add(&Scalar::zeta_pow(n, k as i64));
            }
            assert!(acc.is_zero(), "sum of all order-{n} roots of unity");
        }
    }

    #[test]
    fn known_inverse_in_order_four() {
        // (1 + i)^{-1} = (1 - i)/2
        let a = Scalar::one(4).add(&Scalar::zeta_pow(4, 1));
        let expected = Scalar::one(4)
            .sub(&Scalar::zeta_pow(4, 1))
            .mul_rational(&Rational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(a.inverse().unwrap(), expected);
    }

    #[test]
    fn negative_zeta_powers_wrap() {
        for n in [2u32, 4, 8] {
            assert_eq!(Scalar::zeta_pow(n, -1), Scalar::zeta_pow(n, n as i64 - 1));
        }
    }

    #[test]
    fn inverse_of_zero_is_none() {
        assert!(Scalar::zero(4).inverse().is_none());
    }

    fn arb_scalar(order: u32) -> impl Strategy<Value = Scalar> {
        let phi = euler_phi(order) as usize;
        proptest::collection::vec((-6i64..=6, 1i64..=4), phi).prop_map(move |cs| {
            let mut s = Scalar::zero(order);
            for (e, (p, q)) in cs.into_iter().enumerate() {
                let term = Scalar::ratio(order, p, q).mul(&Scalar::zeta_pow(order, e as i64));
                s = s.add(&term);
            }
            s
        })
    }

    fn orders() -> impl Strategy<Value = u32> {
        prop_oneof![Just(1u32), Just(2u32), Just(4u32), Just(8u32)]
    }

    proptest! {
        #[test]
        fn field_laws((order, seedtriple) in orders().prop_flat_map(|n| {
            (Just(n), (arb_scalar(n), arb_scalar(n), arb_scalar(n)))
        })) {
            let (a, b, c) = seedtriple;
            let _ = order;
            // distributivity and associativity
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b), b.add(&a));
            // inverses
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inverse().unwrap()).is_one());
            }
            prop_assert!(a.sub(&a).is_zero());
        }

        #[test]
        fn power_laws((order, a) in orders().prop_flat_map(|n| (Just(n), arb_scalar(n)))) {
            let _ = order;
            prop_assert_eq!(a.pow(3), a.mul(&a).mul(&a));
            if !a.is_zero() {
                prop_assert_eq!(a.pow(-2), a.inverse().unwrap().pow(2));
                prop_assert!(a.pow(2).mul(&a.pow(-2)).is_one());
            }
        }
    }
}
