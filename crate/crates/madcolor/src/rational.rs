//! Exact rational arithmetic for densities, charges and potentials.
//!
//! Values stay small (numerators bounded by a few times the edge count), so a
//! reduced `i64 / i64` pair with `i128` intermediates is exact everywhere.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A rational number in lowest terms with a positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    /// Build `p/q`, normalizing sign and reducing. Panics on `q == 0`.
    pub fn new(p: i64, q: i64) -> Rat {
        assert!(q != 0, "zero denominator");
        let sign = if q < 0 { -1 } else { 1 };
        let g = gcd(p, q).max(1);
        Rat {
            num: sign * p / g,
            den: sign * q / g,
        }
    }

    pub const ZERO: Rat = Rat { num: 0, den: 1 };

    pub fn from_int(n: i64) -> Rat {
        Rat { num: n, den: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                let $a = self;
                let $b = rhs;
                $body
            }
        }
    };
}

rat_binop!(Add, add, |a, b| Rat::new(
    a.num * b.den + b.num * a.den,
    a.den * b.den
));
rat_binop!(Sub, sub, |a, b| Rat::new(
    a.num * b.den - b.num * a.den,
    a.den * b.den
));
rat_binop!(Mul, mul, |a, b| Rat::new(a.num * b.num, a.den * b.den));
rat_binop!(Div, div, |a, b| {
    assert!(b.num != 0, "division by zero");
    Rat::new(a.num * b.den, a.den * b.num)
});

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rat {
    type Err = String;
    fn from_str(s: &str) -> Result<Rat, String> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
            let q: i64 = q
                .trim()
                .parse()
                .map_err(|e| format!("bad denominator: {e}"))?;
            if q == 0 {
                return Err("zero denominator".into());
            }
            Ok(Rat::new(p, q))
        } else {
            let p: i64 = s.parse().map_err(|e| format!("bad rational: {e}"))?;
            Ok(Rat::from_int(p))
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}
