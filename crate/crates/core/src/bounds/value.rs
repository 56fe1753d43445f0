use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact real number of the form `a + b·√dsc` with rational `a`, `b` and a
/// nonnegative integer radicand.
///
/// Values are kept normalized: a zero surd coefficient forces `dsc = 0`, and a
/// perfect-square radicand is folded into the rational part. Arithmetic between
/// two irrational values requires a shared radicand; mixing radicands panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundValue {
    a: BigRational,
    b: BigRational,
    dsc: BigInt,
}

impl BoundValue {
    pub fn new(a: BigRational, b: BigRational, dsc: BigInt) -> Self {
        assert!(!dsc.is_negative(), "radicand must be nonnegative");
        let mut value = BoundValue { a, b, dsc };
        value.normalize();
        value
    }

    pub fn from_rational(a: BigRational) -> Self {
        BoundValue {
            a,
            b: BigRational::zero(),
            dsc: BigInt::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// `num / den` as an exact rational. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// The nonnegative square root of a nonnegative rational `p/q`, stored as
    /// `(1/q)·√(p·q)`.
    pub fn sqrt_of(x: &BigRational) -> Self {
        assert!(!x.is_negative(), "square root of a negative number");
        let (p, q) = (x.numer(), x.denom());
        BoundValue::new(
            BigRational::zero(),
            BigRational::new(BigInt::one(), q.clone()),
            p * q,
        )
    }

    fn normalize(&mut self) {
        if self.b.is_zero() || self.dsc.is_zero() {
            self.b = BigRational::zero();
            self.dsc = BigInt::zero();
            return;
        }
        let root = self.dsc.sqrt();
        if &root * &root == self.dsc {
            self.a = &self.a + &self.b * BigRational::from_integer(root);
            self.b = BigRational::zero();
            self.dsc = BigInt::zero();
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_coefficient(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.dsc
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    fn shared_radicand(&self, other: &Self) -> BigInt {
        if self.is_rational() {
            other.dsc.clone()
        } else if other.is_rational() || self.dsc == other.dsc {
            self.dsc.clone()
        } else {
            panic!(
                "cannot combine surds with radicands {} and {}",
                self.dsc, other.dsc
            )
        }
    }

    fn conjugate(&self) -> Self {
        BoundValue {
            a: self.a.clone(),
            b: -&self.b,
            dsc: self.dsc.clone(),
        }
    }

    /// Exact sign, computed with integer arithmetic only.
    pub fn signum(&self) -> Ordering {
        let zero = BigRational::zero();
        let sa = self.a.cmp(&zero);
        let sb = self.b.cmp(&zero);
        match (sa, sb) {
            (_, Ordering::Equal) => sa,
            (Ordering::Equal, _) => sb,
            (x, y) if x == y => x,
            // Opposite signs: compare a² with b²·dsc.
            _ => {
                let a2 = &self.a * &self.a;
                let b2d = &self.b * &self.b * BigRational::from_integer(self.dsc.clone());
                let mag = a2.cmp(&b2d);
                if sa == Ordering::Greater {
                    mag
                } else {
                    mag.reverse()
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    /// Exact floor.
    ///
    /// Writing the value as `(A + B·√D)/C` with integers and `C > 0`, the floor
    /// equals `⌊⌊A + B·√D⌋ / C⌋`, and `⌊±√N⌋` follows from the integer square
    /// root of `N = B²·D`.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.a.floor().to_integer();
        }
        let c = self.a.denom().lcm(self.b.denom());
        let a_int = (&self.a * BigRational::from_integer(c.clone())).to_integer();
        let b_int = (&self.b * BigRational::from_integer(c.clone())).to_integer();
        let n = &b_int * &b_int * &self.dsc;
        let s = n.sqrt();
        let exact = &s * &s == n;
        let whole = if b_int.is_positive() {
            a_int + s
        } else if exact {
            a_int - s
        } else {
            a_int - s - 1
        };
        whole.div_floor(&c)
    }

    /// Exact ceiling.
    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Floating-point approximation for display only.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.is_rational() {
            return a;
        }
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.dsc.to_f64().unwrap_or(f64::NAN);
        a + b * d.sqrt()
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        let mag = self.b.abs();
        let surd = if mag.is_one() {
            format!("sqrt({})", self.dsc)
        } else {
            format!("{}*sqrt({})", mag, self.dsc)
        };
        if self.a.is_zero() {
            if sign == '-' {
                write!(f, "-{surd}")
            } else {
                write!(f, "{surd}")
            }
        } else {
            write!(f, "{} {} {}", self.a, sign, surd)
        }
    }
}

impl From<BigRational> for BoundValue {
    fn from(a: BigRational) -> Self {
        BoundValue::from_rational(a)
    }
}

impl From<i64> for BoundValue {
    fn from(n: i64) -> Self {
        BoundValue::from_integer(n)
    }
}

impl PartialOrd for BoundValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order on values sharing a radicand (or rational). Panics on mixed
/// radicands, like the arithmetic operators.
impl Ord for BoundValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl Neg for &BoundValue {
    type Output = BoundValue;
    fn neg(self) -> BoundValue {
        BoundValue {
            a: -&self.a,
            b: -&self.b,
            dsc: self.dsc.clone(),
        }
    }
}

impl Neg for BoundValue {
    type Output = BoundValue;
    fn neg(self) -> BoundValue {
        -&self
    }
}

impl Add for &BoundValue {
    type Output = BoundValue;
    fn add(self, rhs: &BoundValue) -> BoundValue {
        let dsc = self.shared_radicand(rhs);
        BoundValue::new(&self.a + &rhs.a, &self.b + &rhs.b, dsc)
    }
}

impl Sub for &BoundValue {
    type Output = BoundValue;
    fn sub(self, rhs: &BoundValue) -> BoundValue {
        let dsc = self.shared_radicand(rhs);
        BoundValue::new(&self.a - &rhs.a, &self.b - &rhs.b, dsc)
    }
}

impl Mul for &BoundValue {
    type Output = BoundValue;
    fn mul(self, rhs: &BoundValue) -> BoundValue {
        let dsc = self.shared_radicand(rhs);
        let d = BigRational::from_integer(dsc.clone());
        let a = &self.a * &rhs.a + &self.b * &rhs.b * d;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        BoundValue::new(a, b, dsc)
    }
}

impl Div for &BoundValue {
    type Output = BoundValue;
    fn div(self, rhs: &BoundValue) -> BoundValue {
        let conj = rhs.conjugate();
        // rhs·conj(rhs) is rational: a² − b²·dsc.
        let norm = (rhs * &conj).a;
        assert!(!norm.is_zero(), "division by zero");
        let num = self * &conj;
        BoundValue::new(&num.a / &norm, &num.b / &norm, num.dsc)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BoundValue {
            type Output = BoundValue;
            fn $m(self, rhs: BoundValue) -> BoundValue { (&self).$m(&rhs) }
        }
        impl $tr<&BoundValue> for BoundValue {
            type Output = BoundValue;
            fn $m(self, rhs: &BoundValue) -> BoundValue { (&self).$m(rhs) }
        }
        impl $tr<BoundValue> for &BoundValue {
            type Output = BoundValue;
            fn $m(self, rhs: BoundValue) -> BoundValue { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);
