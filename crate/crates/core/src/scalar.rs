//! Exact scalars of the Gaussian rationals ℚ(i).
//!
//! Both components are [`BigRational`]s, which `num-rational` keeps reduced
//! with a positive denominator, so structural equality is value equality.
//!
//! Text form (shared with the matrix documents):
//!
//! ```text
//! scalar := real | imag | real sign uimag
//! real   := rat
//! imag   := ['-'] urat 'i' | ['-'] 'i'
//! uimag  := urat 'i'
//! rat    := ['-'] urat
//! urat   := digits ['/' digits]      (denominator nonzero)
//! ```
//!
//! Output is canonical: reduced, denominator omitted when 1, zero parts
//! omitted, zero printed as `0`, imaginary coefficient always explicit
//! (`1+1i`, `-2/3i`).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_real(BigRational::new(num.into(), den.into()))
    }

    /// `re + im·i` from integer parts.
    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The involution λ ↦ λ̄.
    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `re² + im²`, zero exactly when the scalar is zero.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn checked_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.checked_inv()?)
    }

    pub fn scale_real(&self, k: &BigRational) -> Self {
        GaussianRational {
            re: &self.re * k,
            im: &self.im * k,
        }
    }
}

/// The four field operations as one entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn scalar_arith(op: ScalarOp, lhs: &GaussianRational, rhs: &GaussianRational) -> Result<GaussianRational> {
    match op {
        ScalarOp::Add => Ok(lhs + rhs),
        ScalarOp::Sub => Ok(lhs - rhs),
        ScalarOp::Mul => Ok(lhs * rhs),
        ScalarOp::Div => lhs.checked_div(rhs),
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::from_ints(v, 0)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(v: BigRational) -> Self {
        Self::from_real(v)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        // Skip the four big products in the common sparse cases.
        if self.is_zero() || rhs.is_zero() {
            return GaussianRational::zero();
        }
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::from_real(&self.re * &rhs.re);
        }
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: GaussianRational) -> GaussianRational {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        &self * &rhs
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        -&self
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write_rational(f, &self.re),
            (true, false) => {
                write_rational(f, &self.im)?;
                f.write_str("i")
            }
            (false, false) => {
                write_rational(f, &self.re)?;
                f.write_str(if self.im.is_negative() { "-" } else { "+" })?;
                write_rational(f, &self.im.abs())?;
                f.write_str("i")
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, what: &str) -> Error {
        let message = match self.peek() {
            Some(c) => format!("{what}, found {:?}", c as char),
            None => format!("{what}, found end of input"),
        };
        Error::Parse {
            offset: self.pos,
            message,
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digit"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("validated digits"))
    }

    fn urat(&mut self) -> Result<BigRational> {
        let numer = self.digits()?;
        if !self.eat(b'/') {
            return Ok(BigRational::from_integer(numer));
        }
        let at = self.pos;
        let denom = self.digits()?;
        if denom.is_zero() {
            return Err(Error::Parse {
                offset: at,
                message: "zero denominator".into(),
            });
        }
        Ok(BigRational::new(numer, denom))
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.bytes.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

pub fn scalar_parse(token: &str) -> Result<GaussianRational> {
    let mut cur = Cursor {
        bytes: token.as_bytes(),
        pos: 0,
    };
    let negative = cur.eat(b'-');
    let apply = |q: BigRational| if negative { -q } else { q };

    if cur.eat(b'i') {
        cur.finish()?;
        return Ok(GaussianRational::new(BigRational::zero(), apply(BigRational::one())));
    }
    let lead = apply(cur.urat()?);
    if cur.eat(b'i') {
        cur.finish()?;
        return Ok(GaussianRational::new(BigRational::zero(), lead));
    }
    if cur.peek().is_none() {
        return Ok(GaussianRational::from_real(lead));
    }
    let im_negative = if cur.eat(b'+') {
        false
    } else if cur.eat(b'-') {
        true
    } else {
        return Err(cur.error("expected '+', '-' or 'i'"));
    };
    let im = cur.urat()?;
    if !cur.eat(b'i') {
        return Err(cur.error("expected 'i'"));
    }
    cur.finish()?;
    Ok(GaussianRational::new(lead, if im_negative { -im } else { im }))
}

pub fn scalar_format(z: &GaussianRational) -> String {
    z.to_string()
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        scalar_parse(s)
    }
}
