//! Rational functions in `q`: reduced fractions of `QPoly` with monic
//! denominator, forming the coefficient field of the computation.

use super::qpoly::{BigRat, QPoly};
use crate::error::{Error, Result};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Reduced fraction `num/den`, `den` monic and coprime to `num`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFun {
    num: QPoly,
    den: QPoly,
}

impl RatFun {
    /// Builds and normalizes `num/den`; errors on a zero denominator.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFun {
                num: QPoly::zero(),
                den: QPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lead = den.leading().expect("nonzero").recip();
        Ok(RatFun {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFun {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn constant(c: BigRat) -> Self {
        RatFun::from_poly(QPoly::constant(c))
    }

    pub fn zero() -> Self {
        RatFun::from_poly(QPoly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(QPoly::one())
    }

    pub fn q() -> Self {
        RatFun::from_poly(QPoly::q())
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying polynomial; errors if the denominator is not 1.
    pub fn to_poly(&self) -> Result<QPoly> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial(format!("{}", self)))
        }
    }

    pub fn recip(&self) -> Result<RatFun> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    /// Evaluation at a point where the denominator does not vanish.
    pub fn eval(&self, x: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn div(&self, rhs: &RatFun) -> Result<RatFun> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({})", self)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
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
forward_owned_binop!(RatFun, Add, add);
forward_owned_binop!(RatFun, Sub, sub);
forward_owned_binop!(RatFun, Mul, mul);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qpoly::{rat, rat_frac};
    use proptest::prelude::*;

    #[test]
    fn new_reduces_and_makes_denominator_monic() {
        let f = RatFun::new(
            QPoly::from_ints(&[0, 2]),
            QPoly::from_ints(&[2]),
        )
        .unwrap();
        assert_eq!(f.num(), &QPoly::q());
        assert!(f.den().is_one());

        let g = RatFun::new(QPoly::from_ints(&[-1, 0, 1]), QPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(g.num(), &QPoly::from_ints(&[1, 1]));
        assert!(g.den().is_one());

        let h = RatFun::new(QPoly::one(), QPoly::from_ints(&[0, 3])).unwrap();
        assert_eq!(h.num(), &QPoly::constant(rat_frac(1, 3)));
        assert_eq!(h.den(), &QPoly::q());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            RatFun::new(QPoly::one(), QPoly::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn to_poly_requires_unit_denominator() {
        let f = RatFun::new(QPoly::one(), QPoly::from_ints(&[1, 1])).unwrap();
        assert!(matches!(f.to_poly(), Err(Error::NotPolynomial(_))));
        assert_eq!(RatFun::q().to_poly().unwrap(), QPoly::q());
    }

    #[test]
    fn eval_respects_poles() {
        let f = RatFun::new(QPoly::one(), QPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(f.eval(&rat(3)).unwrap(), rat_frac(1, 2));
        assert!(matches!(f.eval(&rat(1)), Err(Error::DivisionByZero)));
    }

    fn arb_ratfun() -> impl Strategy<Value = RatFun> {
        let poly = prop::collection::vec(-9i64..=9, 0..4).prop_map(|cs| QPoly::from_ints(&cs));
        (poly.clone(), poly)
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RatFun::new(n, d).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(a in arb_ratfun(), b in arb_ratfun(), c in arb_ratfun()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, RatFun::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), RatFun::one());
            }
        }

        #[test]
        fn normalization_invariants(a in arb_ratfun()) {
            prop_assert!(a.den().is_monic() || a.den().is_one());
            if !a.is_zero() {
                prop_assert!(a.num().gcd(a.den()).is_one());
            }
        }
    }
}
