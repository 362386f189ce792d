//! Dense univariate polynomials in `q` over the exact rationals.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar used throughout the crate.
pub type BigRat = BigRational;

/// The integer `n` as a rational.
pub fn rat(n: i64) -> BigRat {
    BigRational::from_integer(BigInt::from(n))
}

/// The fraction `n/d` as a rational.
pub fn rat_frac(n: i64, d: i64) -> BigRat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Polynomial in `q`, coefficients stored lowest degree first with no
/// trailing zeros; the zero polynomial stores an empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigRat>,
}

impl QPoly {
    /// Builds from lowest-first coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Builds from lowest-first integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(rat(1))
    }

    pub fn constant(c: BigRat) -> Self {
        QPoly::new(vec![c])
    }

    /// The variable `q`.
    pub fn q() -> Self {
        QPoly::from_ints(&[0, 1])
    }

    /// The monomial `c * q^n`.
    pub fn monomial(c: BigRat, n: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); n + 1];
        coeffs[n] = c;
        QPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    /// All coefficients, lowest first, no trailing zeros.
    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Evaluation at a rational point by Horner's rule.
    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = QPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = quotient * div + remainder` and `deg rem < deg div`.
    pub fn divmod(&self, div: &QPoly) -> Result<(QPoly, QPoly)> {
        if div.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = div.degree().unwrap();
        let lead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigRat::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = &rem[i] / &lead;
            for (j, dc) in div.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[i - d + j] -= t;
            }
            quot[i - d] = c;
        }
        Ok((QPoly::new(quot), QPoly::new(rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, div: &QPoly) -> Result<QPoly> {
        let (quot, rem) = self.divmod(div)?;
        if !rem.is_zero() {
            return Err(Error::Invariant(format!(
                "inexact polynomial division: {} by {}",
                self, div
            )));
        }
        Ok(quot)
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Rescales to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Integer coefficients, lowest first; errors if any is non-integral.
    pub fn int_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral(format!("{}", self)))
                }
            })
            .collect()
    }
}

impl fmt::Display for QPoly {
    /// Descending powers, `q^k` notation, `*` separators: `q^2 - 2*q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let power = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{}", i),
            };
            if i == 0 {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", power)?;
            } else {
                write!(f, "{}*{}", mag, power)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({})", self)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        QPoly::new(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        QPoly::new(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::new(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_binop!(QPoly, Add, add);
forward_owned_binop!(QPoly, Sub, sub);
forward_owned_binop!(QPoly, Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> QPoly {
        QPoly::q()
    }

    #[test]
    fn divmod_splits_difference_of_squares() {
        let a = QPoly::from_ints(&[-1, 0, 1]);
        let b = QPoly::from_ints(&[-1, 1]);
        let (quot, rem) = a.divmod(&b).unwrap();
        assert_eq!(quot, QPoly::from_ints(&[1, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn divmod_keeps_remainder() {
        let a = QPoly::from_ints(&[1, 0, 1]);
        let b = QPoly::from_ints(&[1, 1]);
        let (quot, rem) = a.divmod(&b).unwrap();
        assert_eq!(&(&quot * &b) + &rem, a);
        assert_eq!(rem, QPoly::from_ints(&[2]));
    }

    #[test]
    fn division_by_zero_rejected() {
        assert!(matches!(
            q().divmod(&QPoly::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let a = QPoly::from_ints(&[-1, 0, 1]).scale(&rat(3));
        let b = QPoly::from_ints(&[-1, 1]).scale(&rat(5));
        assert_eq!(a.gcd(&b), QPoly::from_ints(&[-1, 1]));
    }

    #[test]
    fn eval_by_horner() {
        let p = QPoly::from_ints(&[1, -2, 3]);
        assert_eq!(p.eval(&rat(2)), rat(9));
    }

    #[test]
    fn int_coeffs_rejects_fractions() {
        let p = QPoly::constant(rat_frac(1, 2));
        assert!(matches!(p.int_coeffs(), Err(Error::NonIntegral(_))));
        assert_eq!(
            QPoly::from_ints(&[2, 1]).int_coeffs().unwrap(),
            vec![BigInt::from(2), BigInt::from(1)]
        );
    }

    #[test]
    fn display_descending_powers() {
        let p = QPoly::from_ints(&[1, -2, 1]);
        assert_eq!(p.to_string(), "q^2 - 2*q + 1");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_ints(&[0, 0, -3]).to_string(), "-3*q^2");
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec((-20i64..=20, 1i64..=6), 0..6).prop_map(|cs| {
            QPoly::new(cs.into_iter().map(|(n, d)| rat_frac(n, d)).collect())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &QPoly::zero(), a.clone());
            prop_assert_eq!(&a * &QPoly::one(), a.clone());
            prop_assert_eq!(&a - &a, QPoly::zero());
        }

        #[test]
        fn divmod_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (quot, rem) = a.divmod(&b).unwrap();
            prop_assert_eq!(&(&quot * &b) + &rem, a);
            if !rem.is_zero() {
                prop_assert!(rem.degree().unwrap() < b.degree().unwrap());
            }
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() || !b.is_zero());
            let g = a.gcd(&b);
            prop_assert!(a.divmod(&g).unwrap().1.is_zero());
            prop_assert!(b.divmod(&g).unwrap().1.is_zero());
        }
    }
}
