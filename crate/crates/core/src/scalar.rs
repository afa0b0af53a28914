//! Exact arithmetic in the real quadratic field ℚ(√3) and its
//! complexification ℚ(√3)(i).
//!
//! Every coordinate in the crate is a [`QSqrt3`]. Values are always held in
//! canonical form (reduced fractions with positive denominators), so equality
//! is component-wise and the zero test is exact: `a + b√3 = 0` with rational
//! `a`, `b` forces `a = b = 0`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer parts `(a, b)` of `a + b√3` for each entry, over one common
/// denominator.
pub(crate) fn integral_form(xs: &[QSqrt3]) -> (Vec<(BigInt, BigInt)>, BigInt) {
    use num_integer::Integer;
    let mut d = BigInt::one();
    for x in xs {
        for r in [&x.a, &x.b] {
            if !r.denom().is_one() {
                d = d.lcm(r.denom());
            }
        }
    }
    let scale = |r: &Rational| r.numer() * (&d / r.denom());
    let parts = xs.iter().map(|x| (scale(&x.a), scale(&x.b))).collect();
    (parts, d)
}

/// `(a + b√3)/d` with one normalization per component.
pub(crate) fn from_integral(a: BigInt, b: BigInt, d: &BigInt) -> QSqrt3 {
    QSqrt3::new(Rational::new(a, d.clone()), Rational::new(b, d.clone()))
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `a + b√3` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QSqrt3 {
    a: Rational,
    b: Rational,
}

impl QSqrt3 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QSqrt3 { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        QSqrt3::new(Rational::from_integer(n.into()), Rational::zero())
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        QSqrt3::new(rat(n, d), Rational::zero())
    }

    /// `(a_num/a_den) + (b_num/b_den)√3`.
    pub fn from_parts(a_num: i64, a_den: i64, b_num: i64, b_den: i64) -> Self {
        QSqrt3::new(rat(a_num, a_den), rat(b_num, b_den))
    }

    pub fn sqrt3() -> Self {
        QSqrt3::new(Rational::zero(), Rational::one())
    }

    pub fn rational(&self) -> &Rational {
        &self.a
    }

    pub fn irrational(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b√3`.
    pub fn galois_conj(&self) -> Self {
        QSqrt3::new(self.a.clone(), -&self.b)
    }

    /// Field norm `a² − 3b²`, zero only for zero.
    pub fn field_norm(&self) -> Rational {
        &self.a * &self.a - rat(3, 1) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let d = self.field_norm();
        Ok(QSqrt3::new(&self.a / &d, -&self.b / &d))
    }

    pub fn checked_div(&self, rhs: &QSqrt3) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QSqrt3::new(&self.a * r, &self.b * r)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Sign of the real embedding, computed exactly.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // opposite signs: whichever of a², 3b² is larger wins
        let a2 = &self.a * &self.a;
        let b2 = rat(3, 1) * &self.b * &self.b;
        if a2 > b2 {
            sa
        } else {
            sb
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    /// Floating approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        if b == 0.0 {
            a
        } else {
            a + b * 3f64.sqrt()
        }
    }

    /// Exact ordering of real embeddings.
    pub fn cmp_real(&self, other: &QSqrt3) -> Ordering {
        (self - other).signum()
    }
}

impl Zero for QSqrt3 {
    fn zero() -> Self {
        QSqrt3::default()
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QSqrt3 {
    fn one() -> Self {
        QSqrt3::from_int(1)
    }
}

impl From<i64> for QSqrt3 {
    fn from(n: i64) -> Self {
        QSqrt3::from_int(n)
    }
}

impl From<Rational> for QSqrt3 {
    fn from(r: Rational) -> Self {
        QSqrt3::new(r, Rational::zero())
    }
}

impl Neg for QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3::new(-self.a, -self.b)
    }
}

impl Neg for &QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3::new(-&self.a, -&self.b)
    }
}

fn mul_ref(x: &QSqrt3, y: &QSqrt3) -> QSqrt3 {
    if x.b.is_zero() && y.b.is_zero() {
        return QSqrt3::new(&x.a * &y.a, Rational::zero());
    }
    let a = &x.a * &y.a + rat(3, 1) * &x.b * &y.b;
    let b = &x.a * &y.b + &x.b * &y.a;
    QSqrt3::new(a, b)
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $body:expr) => {
        impl $Trait<&QSqrt3> for &QSqrt3 {
            type Output = QSqrt3;
            fn $method(self, rhs: &QSqrt3) -> QSqrt3 {
                $body(self, rhs)
            }
        }
        impl $Trait<QSqrt3> for QSqrt3 {
            type Output = QSqrt3;
            fn $method(self, rhs: QSqrt3) -> QSqrt3 {
                $body(&self, &rhs)
            }
        }
        impl $Trait<&QSqrt3> for QSqrt3 {
            type Output = QSqrt3;
            fn $method(self, rhs: &QSqrt3) -> QSqrt3 {
                $body(&self, rhs)
            }
        }
        impl $Trait<QSqrt3> for &QSqrt3 {
            type Output = QSqrt3;
            fn $method(self, rhs: QSqrt3) -> QSqrt3 {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x: &QSqrt3, y: &QSqrt3| QSqrt3::new(
    &x.a + &y.a,
    &x.b + &y.b
));
forward_binop!(Sub, sub, |x: &QSqrt3, y: &QSqrt3| QSqrt3::new(
    &x.a - &y.a,
    &x.b - &y.b
));
forward_binop!(Mul, mul, mul_ref);
// Panics on zero divisors; use `checked_div` where zero is possible.
forward_binop!(Div, div, |x: &QSqrt3, y: &QSqrt3| x
    .checked_div(y)
    .expect("division by zero in QSqrt3"));

impl AddAssign<&QSqrt3> for QSqrt3 {
    fn add_assign(&mut self, rhs: &QSqrt3) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl AddAssign for QSqrt3 {
    fn add_assign(&mut self, rhs: QSqrt3) {
        *self += &rhs;
    }
}

impl SubAssign<&QSqrt3> for QSqrt3 {
    fn sub_assign(&mut self, rhs: &QSqrt3) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&QSqrt3> for QSqrt3 {
    fn mul_assign(&mut self, rhs: &QSqrt3) {
        *self = mul_ref(self, rhs);
    }
}

impl std::iter::Sum for QSqrt3 {
    fn sum<I: Iterator<Item = QSqrt3>>(iter: I) -> Self {
        iter.fold(QSqrt3::zero(), |acc, x| acc + x)
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders as `p/q + r/s*sqrt3`, dropping zero parts: `3`, `-1/2*sqrt3`,
/// `1/2 - 3/2*sqrt3`.
impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.a)),
            (true, false) => write!(f, "{}*sqrt3", fmt_rational(&self.b)),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "{} {} {}*sqrt3",
                    fmt_rational(&self.a),
                    sign,
                    fmt_rational(&self.b.abs())
                )
            }
        }
    }
}

impl fmt::Debug for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str, input: &str) -> Result<Rational> {
    let err = |reason: &str| Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err("bad numerator"))?;
    let d: BigInt = d.parse().map_err(|_| err("bad denominator"))?;
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

impl FromStr for QSqrt3 {
    type Err = Error;

    /// Accepts sums of signed terms, each either a rational `p` / `p/q` or
    /// an irrational term `p/q*sqrt3` / `sqrt3`.
    fn from_str(input: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let words: Vec<&str> = input.split_whitespace().collect();
        for w in words.windows(2) {
            let ends_operand = w[0].ends_with(|c: char| c.is_ascii_alphanumeric());
            let starts_operand = w[1].starts_with(|c: char| c.is_ascii_alphanumeric());
            if ends_operand && starts_operand {
                return Err(err("missing operator between terms"));
            }
        }
        let s: String = words.concat();
        if s.is_empty() {
            return Err(err("empty"));
        }
        let bytes = s.as_bytes();
        let mut out = QSqrt3::zero();
        let mut i = 0;
        while i < bytes.len() {
            let mut negative = false;
            let mut saw_sign = false;
            while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                negative ^= bytes[i] == b'-';
                saw_sign = true;
                i += 1;
            }
            if i > 0 && !saw_sign {
                return Err(err("missing operator between terms"));
            }
            let start = i;
            while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                i += 1;
            }
            let body = &s[start..i];
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let term = if body == "sqrt3" {
                QSqrt3::sqrt3()
            } else if let Some(coeff) = body.strip_suffix("*sqrt3") {
                QSqrt3::new(Rational::zero(), parse_rational(coeff, input)?)
            } else {
                QSqrt3::from(parse_rational(body, input)?)
            };
            if negative {
                out -= &term;
            } else {
                out += &term;
            }
        }
        Ok(out)
    }
}

impl Serialize for QSqrt3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QSqrt3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `re + i·im` over ℚ(√3).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CQSqrt3 {
    pub re: QSqrt3,
    pub im: QSqrt3,
}

impl CQSqrt3 {
    pub fn new(re: QSqrt3, im: QSqrt3) -> Self {
        CQSqrt3 { re, im }
    }

    pub fn real(re: QSqrt3) -> Self {
        CQSqrt3::new(re, QSqrt3::zero())
    }

    pub fn i() -> Self {
        CQSqrt3::new(QSqrt3::zero(), QSqrt3::one())
    }

    pub fn conj(&self) -> Self {
        CQSqrt3::new(self.re.clone(), -&self.im)
    }

    pub fn scale(&self, k: &QSqrt3) -> Self {
        CQSqrt3::new(&self.re * k, &self.im * k)
    }

    /// `|z|² = re² + im²`.
    pub fn abs_sq(&self) -> QSqrt3 {
        self.re.square() + self.im.square()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `(3 + i√3)/6`, the coefficient of the Okubo matrix product.
    pub fn okubo_mu() -> Self {
        CQSqrt3::new(QSqrt3::from_ratio(1, 2), QSqrt3::from_parts(0, 1, 1, 6))
    }
}

impl Zero for CQSqrt3 {
    fn zero() -> Self {
        CQSqrt3::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Add<&CQSqrt3> for &CQSqrt3 {
    type Output = CQSqrt3;
    fn add(self, rhs: &CQSqrt3) -> CQSqrt3 {
        CQSqrt3::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Add for CQSqrt3 {
    type Output = CQSqrt3;
    fn add(self, rhs: CQSqrt3) -> CQSqrt3 {
        &self + &rhs
    }
}

impl Sub<&CQSqrt3> for &CQSqrt3 {
    type Output = CQSqrt3;
    fn sub(self, rhs: &CQSqrt3) -> CQSqrt3 {
        CQSqrt3::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Neg for &CQSqrt3 {
    type Output = CQSqrt3;
    fn neg(self) -> CQSqrt3 {
        CQSqrt3::new(-&self.re, -&self.im)
    }
}

impl Mul<&CQSqrt3> for &CQSqrt3 {
    type Output = CQSqrt3;
    fn mul(self, rhs: &CQSqrt3) -> CQSqrt3 {
        CQSqrt3::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Mul for CQSqrt3 {
    type Output = CQSqrt3;
    fn mul(self, rhs: CQSqrt3) -> CQSqrt3 {
        &self * &rhs
    }
}

impl fmt::Display for CQSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "({}) + i({})", self.re, self.im)
        }
    }
}

impl fmt::Debug for CQSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> QSqrt3 {
        s.parse().unwrap()
    }

    #[test]
    fn arith_examples() {
        let one_plus = q("1 + sqrt3");
        assert_eq!(&one_plus * &one_plus, q("4 + 2*sqrt3"));
        assert_eq!(&one_plus + &(-&one_plus), QSqrt3::zero());
        assert_eq!(QSqrt3::sqrt3() * QSqrt3::sqrt3(), QSqrt3::from_int(3));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(QSqrt3::from_int(2).inv().unwrap(), q("1/2"));
        // (1+√3)(−1+√3) = 2
        assert_eq!(q("1 + sqrt3").inv().unwrap(), q("-1/2 + 1/2*sqrt3"));
        assert_eq!(QSqrt3::sqrt3().inv().unwrap(), q("1/3*sqrt3"));
        assert_eq!(QSqrt3::zero().inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn complex_examples() {
        let i = CQSqrt3::i();
        assert_eq!(&i * &i, CQSqrt3::real(QSqrt3::from_int(-1)));
        let mu = CQSqrt3::okubo_mu();
        assert_eq!(mu.conj(), CQSqrt3::new(q("1/2"), q("-1/6*sqrt3")));
        let six = CQSqrt3::real(QSqrt3::from_int(6));
        assert_eq!(&mu * &six, CQSqrt3::new(q("3"), QSqrt3::sqrt3()));
        assert_eq!(mu.abs_sq(), q("1/3"));
    }

    #[test]
    fn float_rendering() {
        assert_eq!(QSqrt3::zero().to_f64(), 0.0);
        assert_eq!(QSqrt3::sqrt3().to_f64(), 1.7320508075688772);
        assert_eq!(q("1/2").to_f64(), 0.5);
    }

    #[test]
    fn text_format() {
        assert_eq!(q("1/2 + -3/2*sqrt3").to_string(), "1/2 - 3/2*sqrt3");
        assert_eq!(q("-sqrt3").to_string(), "-1*sqrt3");
        assert_eq!(q("4/8").to_string(), "1/2");
        assert_eq!(q("0").to_string(), "0");
        assert_eq!(q("2*sqrt3 + 1 - 1"), q("2*sqrt3"));
        assert!("1/0".parse::<QSqrt3>().is_err());
        assert!("".parse::<QSqrt3>().is_err());
        assert!("1 2".parse::<QSqrt3>().is_err());
        assert!("x".parse::<QSqrt3>().is_err());
    }

    #[test]
    fn sign_is_exact() {
        // 1732/1000 < √3 < 1733/1000
        assert!(q("-1732/1000 + sqrt3").is_positive());
        assert!(q("-1733/1000 + sqrt3").is_negative());
        assert!(q("7 - 4*sqrt3").is_positive()); // 49 > 48
        assert!(q("-7 + 4*sqrt3").is_negative());
        assert_eq!(QSqrt3::zero().signum(), Ordering::Equal);
    }

    fn arb() -> impl Strategy<Value = QSqrt3> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
            .prop_map(|(a, b, c, d)| QSqrt3::from_parts(a, b, c, d))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), QSqrt3::one());
            }
        }

        #[test]
        fn text_round_trip(x in arb()) {
            prop_assert_eq!(x.to_string().parse::<QSqrt3>().unwrap(), x.clone());
            let again: QSqrt3 = x.to_string().parse().unwrap();
            prop_assert_eq!(again.to_string(), x.to_string());
        }

        #[test]
        fn sign_matches_float(x in arb()) {
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.is_positive(), f > 0.0);
            }
        }
    }
}
