//! Arithmetic in the cyclotomic field of 12th roots of unity, large enough
//! to hold every character value arising here (element orders divide 12).

use crate::exactalg::{rat, BigRat};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of the 12th cyclotomic field in the power basis `1, z, z^2, z^3`
/// where `z` is a primitive 12th root of unity with `z^4 = z^2 - 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cyclo12 {
    c: [BigRat; 4],
}

impl Cyclo12 {
    pub fn zero() -> Self {
        Cyclo12 {
            c: [rat(0), rat(0), rat(0), rat(0)],
        }
    }

    pub fn one() -> Self {
        Cyclo12::from_rat(rat(1))
    }

    pub fn from_rat(r: BigRat) -> Self {
        Cyclo12 {
            c: [r, rat(0), rat(0), rat(0)],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Cyclo12::from_rat(rat(n))
    }

    /// `z^k` for any integer exponent.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(12) as usize;
        let (sign, k) = if k >= 6 { (-1i64, k - 6) } else { (1, k) };
        let mut c = [rat(0), rat(0), rat(0), rat(0)];
        match k {
            0..=3 => c[k] = rat(sign),
            // z^4 = z^2 - 1, z^5 = z^3 - z.
            4 => {
                c[2] = rat(sign);
                c[0] = rat(-sign);
            }
            _ => {
                c[3] = rat(sign);
                c[1] = rat(-sign);
            }
        }
        Cyclo12 { c }
    }

    /// Primitive `m`-th root of unity to the power `j`; `m` must divide 12.
    pub fn root_of_unity(m: u32, j: i64) -> Self {
        assert!(m > 0 && 12 % m == 0, "order {} does not divide 12", m);
        Cyclo12::zeta_pow((12 / m as i64) * j)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Rational part if the element lies in the base field.
    pub fn as_rational(&self) -> Option<BigRat> {
        if self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero() {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Complex conjugation, the Galois map `z -> z^{-1}`.
    pub fn conj(&self) -> Self {
        // z -> z - z^3, z^2 -> 1 - z^2, z^3 -> -z^3.
        Cyclo12 {
            c: [
                &self.c[0] + &self.c[2],
                self.c[1].clone(),
                -self.c[2].clone(),
                -(&self.c[1] + &self.c[3]),
            ],
        }
    }

    pub fn scale(&self, r: &BigRat) -> Self {
        Cyclo12 {
            c: [
                &self.c[0] * r,
                &self.c[1] * r,
                &self.c[2] * r,
                &self.c[3] * r,
            ],
        }
    }

    /// Coordinates in the power basis, exposed for deterministic ordering.
    pub fn coeffs(&self) -> &[BigRat; 4] {
        &self.c
    }
}

impl Add for &Cyclo12 {
    type Output = Cyclo12;
    fn add(self, rhs: &Cyclo12) -> Cyclo12 {
        Cyclo12 {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl Sub for &Cyclo12 {
    type Output = Cyclo12;
    fn sub(self, rhs: &Cyclo12) -> Cyclo12 {
        self + &(-rhs)
    }
}

impl Neg for &Cyclo12 {
    type Output = Cyclo12;
    fn neg(self) -> Cyclo12 {
        Cyclo12 {
            c: [
                -self.c[0].clone(),
                -self.c[1].clone(),
                -self.c[2].clone(),
                -self.c[3].clone(),
            ],
        }
    }
}

impl Mul for &Cyclo12 {
    type Output = Cyclo12;
    fn mul(self, rhs: &Cyclo12) -> Cyclo12 {
        let mut prod = [
            rat(0),
            rat(0),
            rat(0),
            rat(0),
            rat(0),
            rat(0),
            rat(0),
        ];
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                prod[i + j] += &self.c[i] * &rhs.c[j];
            }
        }
        // Reduce z^6 = -1, z^5 = z^3 - z, z^4 = z^2 - 1.
        let p6 = prod[6].clone();
        prod[0] -= p6;
        let p5 = prod[5].clone();
        prod[3] += &p5;
        prod[1] -= &p5;
        let p4 = prod[4].clone();
        prod[2] += &p4;
        prod[0] -= &p4;
        Cyclo12 {
            c: [
                prod[0].clone(),
                prod[1].clone(),
                prod[2].clone(),
                prod[3].clone(),
            ],
        }
    }
}

impl fmt::Display for Cyclo12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*z + {}*z^2 + {}*z^3",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}
