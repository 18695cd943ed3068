//! Laurent polynomials in the formal even variable `u` with cyclotomic
//! coefficients. These are the values of periodic cyclic cochains.

use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// An element of Q(zeta_N)[u, u^{-1}], stored sparsely by exponent.
#[derive(Clone, PartialEq, Eq)]
pub struct ULaurent {
    order: u32,
    terms: BTreeMap<i32, Scalar>,
}

impl ULaurent {
    pub fn zero(order: u32) -> Self {
        ULaurent { order, terms: BTreeMap::new() }
    }

    pub fn from_scalar(s: Scalar) -> Self {
        ULaurent::single(0, s)
    }

    /// `s * u^k`.
    pub fn single(k: i32, s: Scalar) -> Self {
        let order = s.order();
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(k, s);
        }
        ULaurent { order, terms }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `u^k`.
    pub fn coeff(&self, k: i32) -> Scalar {
        self.terms.get(&k).cloned().unwrap_or_else(|| Scalar::zero(self.order))
    }

    /// Exponents with nonzero coefficients, ascending.
    pub fn support(&self) -> impl Iterator<Item = i32> + '_ {
        self.terms.keys().copied()
    }

    pub fn add(&self, other: &ULaurent) -> ULaurent {
        assert_eq!(self.order, other.order, "mixed scalar orders");
        let mut out = self.clone();
        for (k, s) in &other.terms {
            let cur = out.terms.remove(k).unwrap_or_else(|| Scalar::zero(self.order));
            let sum = cur.add(s);
            if !sum.is_zero() {
                out.terms.insert(*k, sum);
            }
        }
        out
    }

    pub fn sub(&self, other: &ULaurent) -> ULaurent {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ULaurent {
        ULaurent {
            order: self.order,
            terms: self.terms.iter().map(|(k, s)| (*k, s.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &ULaurent) -> ULaurent {
        assert_eq!(self.order, other.order, "mixed scalar orders");
        let mut out = ULaurent::zero(self.order);
        for (ka, sa) in &self.terms {
            for (kb, sb) in &other.terms {
                out = out.add(&ULaurent::single(ka + kb, sa.mul(sb)));
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> ULaurent {
        if s.is_zero() {
            return ULaurent::zero(self.order);
        }
        ULaurent {
            order: self.order,
            terms: self.terms.iter().map(|(k, c)| (*k, c.mul(s))).collect(),
        }
    }

    /// Multiplication by `u^k`.
    pub fn shift(&self, k: i32) -> ULaurent {
        ULaurent {
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }
}

impl fmt::Display for ULaurent {
    /// Canonical form like `(1 + z)*u^-1 + 2 - 3*u^2`, exponents ascending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, s) in &self.terms {
            let mut body = s.to_string();
            let needs_parens = body.contains(' ');
            if first {
                first = false;
            } else if !needs_parens && body.starts_with('-') {
                f.write_str(" - ")?;
                body.remove(0);
            } else {
                f.write_str(" + ")?;
            }
            match (*k, needs_parens) {
                (0, _) => f.write_str(&body)?,
                (k, true) => {
                    if k == 1 {
                        write!(f, "({})*u", body)?
                    } else {
                        write!(f, "({})*u^{}", body, k)?
                    }
                }
                (k, false) => {
                    let head = if body == "1" {
                        String::new()
                    } else if body == "-1" {
                        "-".to_string()
                    } else {
                        format!("{}*", body)
                    };
                    if k == 1 {
                        write!(f, "{}u", head)?
                    } else {
                        write!(f, "{}u^{}", head, k)?
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ULaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ULaurent({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_normalization() {
        let one = ULaurent::from_scalar(Scalar::one(4));
        let u = ULaurent::single(1, Scalar::one(4));
        let uinv = ULaurent::single(-1, Scalar::one(4));
        assert_eq!(u.mul(&uinv), one);
        assert!(u.sub(&u).is_zero());
        assert_eq!(u.shift(-1), one);
        assert_eq!(u.add(&uinv).coeff(1), Scalar::one(4));
        assert_eq!(u.add(&uinv).coeff(0), Scalar::zero(4));
    }

    #[test]
    fn display_is_canonical() {
        let z = Scalar::zeta_pow(4, 1);
        let v = ULaurent::single(-1, Scalar::one(4).add(&z))
            .add(&ULaurent::from_scalar(Scalar::from_integer(4, 2)))
            .add(&ULaurent::single(2, Scalar::from_integer(4, -3)));
        assert_eq!(v.to_string(), "(1 + z)*u^-1 + 2 - 3*u^2");
        assert_eq!(ULaurent::zero(4).to_string(), "0");
    }
}
