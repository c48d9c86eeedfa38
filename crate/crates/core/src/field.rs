//! Exact scalars: rationals or a prime field, chosen at runtime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::P {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// Characteristic (0 for the rationals).
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    /// Parses a scalar literal such as `3`, `-2/5`.
    pub fn parse_scalar(self, s: &str) -> Option<Scalar> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (BigInt::from_str(a.trim()).ok()?, BigInt::from_str(b.trim()).ok()?),
            None => (BigInt::from_str(s).ok()?, BigInt::one()),
        };
        if den.is_zero() {
            return None;
        }
        match self {
            Field::Rational => Some(Scalar::Q(BigRational::new(num, den))),
            Field::Prime(p) => {
                let bp = BigInt::from(p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &bp) + &bp) % &bp;
                    r.to_string().parse().unwrap()
                };
                let n = self.from_i64(0).with_value(reduce(&num));
                let d = self.from_i64(0).with_value(reduce(&den));
                let d_inv = d.inv()?;
                Some(&n * &d_inv)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| format!("invalid prime `{rest}`"))?;
            if !is_prime(p) {
                return Err(format!("{p} is not prime"));
            }
            if p > (1 << 31) {
                return Err(format!("prime {p} too large (limit 2^31)"));
            }
            return Ok(Field::Prime(p));
        }
        Err(format!("unknown field `{s}` (expected `q` or `fp:<prime>`)"))
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`]. Values from different fields never mix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    P { v: u64, p: u64 },
}

impl Scalar {
    fn with_value(&self, v: u64) -> Scalar {
        match self {
            Scalar::P { p, .. } => Scalar::P { v: v % p, p: *p },
            Scalar::Q(_) => unreachable!(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::P { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::P { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::P { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::P { v, p } => Scalar::P {
                v: pow_mod(*v, p - 2, *p),
                p: *p,
            },
        })
    }

    /// Numerator and denominator when the value is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::P { .. } => None,
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::P { v, p } => {
                // print the symmetric representative so -1 reads as -1
                if *v > p / 2 {
                    write!(f, "-{}", p - v)
                } else {
                    write!(f, "{v}")
                }
            }
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::P { v: a, p }, Scalar::P { v: b, .. }) => Scalar::P {
                v: (a + b) % p,
                p: *p,
            },
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::P { v: a, p }, Scalar::P { v: b, .. }) => Scalar::P {
                v: (a + p - b) % p,
                p: *p,
            },
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::P { v: a, p }, Scalar::P { v: b, .. }) => Scalar::P {
                v: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::P { v, p } => Scalar::P {
                v: (p - v) % p,
                p: *p,
            },
        }
    }
}

/// Rational roots of a polynomial with rational coefficients (lowest degree first).
pub fn rational_roots(coeffs: &[Scalar]) -> Vec<Scalar> {
    let mut qs: Vec<BigRational> = coeffs
        .iter()
        .map(|c| c.as_rational().cloned().expect("rational coefficients"))
        .collect();
    while qs.last().is_some_and(|c| c.is_zero()) {
        qs.pop();
    }
    let mut roots = Vec::new();
    // factor out x^k
    let mut shift = 0;
    while qs.len() > 1 && qs[0].is_zero() {
        qs.remove(0);
        shift += 1;
    }
    if shift > 0 {
        roots.push(Scalar::Q(BigRational::zero()));
    }
    if qs.len() < 2 {
        return roots;
    }
    let lcm = qs
        .iter()
        .fold(BigInt::one(), |acc, c| num_integer_lcm(&acc, c.denom()));
    let ints: Vec<BigInt> = qs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let a0 = ints[0].abs();
    let an = ints[ints.len() - 1].abs();
    let small = |x: &BigInt| x.bits() <= 20;
    if !small(&a0) || !small(&an) {
        return roots;
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n: i64 = n.to_string().parse().unwrap();
        (1..=n).filter(|d| n % d == 0).map(BigInt::from).collect()
    };
    let eval = |x: &BigRational| -> BigRational {
        ints.iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    };
    let mut seen: Vec<BigRational> = Vec::new();
    for p in divisors(&a0) {
        for q in divisors(&an) {
            for sign in [1, -1] {
                let x = BigRational::new(p.clone() * sign, q.clone());
                if !seen.contains(&x) && eval(&x).is_zero() {
                    seen.push(x.clone());
                    roots.push(Scalar::Q(x));
                }
            }
        }
    }
    roots
}

fn num_integer_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    let g = gcd(a.clone(), b.clone());
    (a * b).abs() / g
}

fn gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a.abs()
}
