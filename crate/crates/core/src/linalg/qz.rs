use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A rational number modulo 1, kept as a reduced fraction `num/den` with
/// `0 <= num < den`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Qz {
    num: i64,
    den: i64,
}

impl Qz {
    pub const ZERO: Qz = Qz { num: 0, den: 1 };
    pub const HALF: Qz = Qz { num: 1, den: 2 };

    /// `num/den mod 1`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Qz {
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Qz {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let r = num.rem_euclid(den);
        let g = r.gcd(&den);
        let (n, d) = (r / g, den / g);
        Qz {
            num: i64::try_from(n).expect("Q/Z denominator overflow"),
            den: i64::try_from(d).expect("Q/Z denominator overflow"),
        }
    }

    /// `num/den mod 1` from big integers; fails when the reduced denominator
    /// does not fit 64 bits.
    pub fn from_big(num: &BigInt, den: &BigInt) -> Result<Qz> {
        assert!(!den.is_zero(), "zero denominator");
        let (num, den) = if den < &BigInt::zero() { (-num, -den) } else { (num.clone(), den.clone()) };
        let r = num.mod_floor(&den);
        let g = r.gcd(&den);
        let (n, d) = (r / &g, den / &g);
        match (n.to_i64(), d.to_i64()) {
            (Some(n), Some(d)) => Ok(Qz { num: n, den: d }),
            _ => Err(Error::Overflow),
        }
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> i64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// Multiplication by an integer.
    pub fn times(self, k: i64) -> Qz {
        Self::from_i128(self.num as i128 * k as i128, self.den as i128)
    }

    pub fn times_big(self, k: &BigInt) -> Qz {
        let k = k.mod_floor(&BigInt::from(self.den)).to_i64().unwrap();
        self.times(k)
    }

    /// True when `2x = 0`, i.e. x ∈ {0, 1/2}.
    pub fn is_half_integral(self) -> bool {
        self.den <= 2
    }
}

impl Default for Qz {
    fn default() -> Self {
        Qz::ZERO
    }
}

impl Add for Qz {
    type Output = Qz;
    fn add(self, o: Qz) -> Qz {
        if self.den == o.den {
            return Self::from_i128(self.num as i128 + o.num as i128, self.den as i128);
        }
        let (a, b, c, d) = (self.num as i128, self.den as i128, o.num as i128, o.den as i128);
        Self::from_i128(a * d + c * b, b * d)
    }
}

impl Neg for Qz {
    type Output = Qz;
    fn neg(self) -> Qz {
        if self.num == 0 {
            self
        } else {
            Qz { num: self.den - self.num, den: self.den }
        }
    }
}

impl Sub for Qz {
    type Output = Qz;
    fn sub(self, o: Qz) -> Qz {
        self + (-o)
    }
}

impl AddAssign for Qz {
    fn add_assign(&mut self, o: Qz) {
        *self = *self + o;
    }
}

impl SubAssign for Qz {
    fn sub_assign(&mut self, o: Qz) {
        *self = *self - o;
    }
}

impl fmt::Display for Qz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Qz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Qz {
    type Err = Error;
    fn from_str(s: &str) -> Result<Qz> {
        let bad = || Error::Invalid(format!("bad Q/Z value `{s}`"));
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim().parse::<i64>().map_err(|_| bad())?, d.trim().parse::<i64>().map_err(|_| bad())?),
            None => (s.parse::<i64>().map_err(|_| bad())?, 1),
        };
        if d == 0 {
            return Err(bad());
        }
        Ok(Qz::new(n, d))
    }
}
