use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact integer coefficient.
///
/// Arithmetic stays in `i64` and promotes to a big integer on overflow;
/// values that fit back into `i64` are demoted again.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Small(i64),
    Big(BigInt),
}

impl Coeff {
    pub const ZERO: Coeff = Coeff::Small(0);
    pub const ONE: Coeff = Coeff::Small(1);

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0))
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Coeff::Small(v) => BigInt::from(*v),
            Coeff::Big(v) => v.clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Coeff::Small(v) => Some(*v),
            Coeff::Big(_) => None,
        }
    }

    fn normalize(v: BigInt) -> Coeff {
        match v.to_i64() {
            Some(s) => Coeff::Small(s),
            None => Coeff::Big(v),
        }
    }
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::ZERO
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::Small(v)
    }
}

impl From<u64> for Coeff {
    fn from(v: u64) -> Self {
        Coeff::normalize(BigInt::from(v))
    }
}

impl From<BigInt> for Coeff {
    fn from(v: BigInt) -> Self {
        Coeff::normalize(v)
    }
}

impl Add<&Coeff> for &Coeff {
    type Output = Coeff;

    fn add(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                return Coeff::Small(s);
            }
        }
        Coeff::normalize(self.to_bigint() + rhs.to_bigint())
    }
}

impl Add for Coeff {
    type Output = Coeff;

    fn add(self, rhs: Coeff) -> Coeff {
        &self + &rhs
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        if let (Coeff::Small(a), Coeff::Small(b)) = (&*self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                *self = Coeff::Small(s);
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl Mul<&Coeff> for &Coeff {
    type Output = Coeff;

    fn mul(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_mul(*b) {
                return Coeff::Small(s);
            }
        }
        Coeff::normalize(self.to_bigint() * rhs.to_bigint())
    }
}

impl Mul for Coeff {
    type Output = Coeff;

    fn mul(self, rhs: Coeff) -> Coeff {
        &self * &rhs
    }
}

impl Neg for Coeff {
    type Output = Coeff;

    fn neg(self) -> Coeff {
        match self {
            Coeff::Small(v) => match v.checked_neg() {
                Some(n) => Coeff::Small(n),
                None => Coeff::Big(-BigInt::from(v)),
            },
            Coeff::Big(v) => Coeff::normalize(-v),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(v) => write!(f, "{v}"),
            Coeff::Big(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Coeff {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<BigInt>().map(Coeff::normalize)
    }
}

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Coeff::Small(v) => serializer.serialize_i64(*v),
            Coeff::Big(v) => {
                let n = serde_json::Number::from_str(&v.to_string())
                    .map_err(serde::ser::Error::custom)?;
                n.serialize(serializer)
            }
        }
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(deserializer)?;
        if let Some(v) = n.as_i64() {
            return Ok(Coeff::Small(v));
        }
        n.to_string()
            .parse::<Coeff>()
            .map_err(|_| serde::de::Error::custom(format!("coefficient {n} is not an integer")))
    }
}

impl Zero for Coeff {
    fn zero() -> Self {
        Coeff::ZERO
    }

    fn is_zero(&self) -> bool {
        Coeff::is_zero(self)
    }
}
