use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Working precision in bits when nothing else is requested.
pub const DEFAULT_PRECISION: u32 = 256;

/// Smallest precision the crate accepts.
pub const MIN_PRECISION: u32 = 64;

/// A real number held as `mantissa / 2^precision` (binary fixed point).
///
/// All quantities in this crate live in a bounded range (bases in `(1, 2]`,
/// values in `[0, 2]`), so absolute precision `2^-p` is the meaningful notion.
/// Operands of different precision are promoted to the larger one.
#[derive(Clone)]
pub struct HighPrecReal {
    mantissa: BigInt,
    precision: u32,
}

fn round_shift_right(x: BigInt, bits: u32) -> BigInt {
    if bits == 0 {
        return x;
    }
    let half = BigInt::one() << (bits - 1);
    (x + half) >> bits
}

fn round_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_mod_floor(den);
    if (r << 1u32) >= den.abs() {
        q + 1
    } else {
        q
    }
}

impl HighPrecReal {
    pub fn zero(precision: u32) -> Self {
        Self::from_int(0, precision)
    }

    pub fn one(precision: u32) -> Self {
        Self::from_int(1, precision)
    }

    pub fn from_int(value: i64, precision: u32) -> Self {
        Self {
            mantissa: BigInt::from(value) << precision,
            precision,
        }
    }

    /// `2^exponent`, exact when representable.
    pub fn pow2(exponent: i64, precision: u32) -> Self {
        let shift = exponent + precision as i64;
        let mantissa = if shift >= 0 {
            BigInt::one() << shift as u64
        } else {
            BigInt::zero()
        };
        Self {
            mantissa,
            precision,
        }
    }

    pub fn from_rational(value: &BigRational, precision: u32) -> Self {
        let num = value.numer().clone() << precision;
        Self {
            mantissa: round_div(num, value.denom()),
            precision,
        }
    }

    pub fn from_ratio(num: i64, den: i64, precision: u32) -> Self {
        Self::from_rational(&BigRational::new(num.into(), den.into()), precision)
    }

    /// Exact conversion of a finite double (then rounded to `precision`).
    pub fn from_f64(value: f64, precision: u32) -> Result<Self> {
        let r = BigRational::from_float(value)
            .ok_or_else(|| Error::InvalidNumber(value.to_string()))?;
        Ok(Self::from_rational(&r, precision))
    }

    /// Parse a decimal literal such as `1.7`, `-0.25` or `1e-3`.
    pub fn parse(text: &str, precision: u32) -> Result<Self> {
        Ok(Self::from_rational(&parse_decimal(text)?, precision))
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn with_precision(&self, precision: u32) -> Self {
        let mantissa = match precision.cmp(&self.precision) {
            Ordering::Equal => self.mantissa.clone(),
            Ordering::Greater => self.mantissa.clone() << (precision - self.precision),
            Ordering::Less => round_shift_right(self.mantissa.clone(), self.precision - precision),
        };
        Self {
            mantissa,
            precision,
        }
    }

    fn aligned(a: &Self, b: &Self) -> (BigInt, BigInt, u32) {
        let bits = a.precision.max(b.precision);
        (
            a.with_precision(bits).mantissa,
            b.with_precision(bits).mantissa,
            bits,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self {
            mantissa: self.mantissa.abs(),
            precision: self.precision,
        }
    }

    pub fn recip(&self) -> Self {
        Self::one(self.precision) / self
    }

    pub fn powi(&self, exponent: u32) -> Self {
        let mut result = Self::one(self.precision);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiply by `2^k` exactly.
    pub fn ldexp(&self, k: i32) -> Self {
        let mantissa = if k >= 0 {
            self.mantissa.clone() << k as u32
        } else {
            self.mantissa.clone() >> (-k) as u32
        };
        Self {
            mantissa,
            precision: self.precision,
        }
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::Domain("square root of a negative number".into()));
        }
        Ok(Self {
            mantissa: (self.mantissa.clone() << self.precision).sqrt(),
            precision: self.precision,
        })
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Tolerance below which two values are reported as a near-tie: `2^(-p/2)`.
    pub fn near_tie_tolerance(&self) -> Self {
        Self::pow2(-((self.precision / 2) as i64), self.precision)
    }

    /// `|self - other| < 2^(-p/2)` at the larger of the two precisions.
    pub fn is_near(&self, other: &Self) -> bool {
        let diff = (self - other).abs();
        diff < diff.near_tie_tolerance()
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), BigInt::one() << self.precision)
    }

    pub fn to_f64(&self) -> f64 {
        let (top, exponent) = self.top_bits();
        top * 2f64.powi(exponent.clamp(-1100, 1100) as i32)
    }

    /// `(m, e)` with the value equal to `m * 2^e` up to rounding and `|m| < 2^60`.
    fn top_bits(&self) -> (f64, i64) {
        let keep = 60u64;
        let bits = self.mantissa.bits();
        let drop = bits.saturating_sub(keep);
        let m = round_shift_right(self.mantissa.clone(), drop as u32);
        (
            m.to_f64().unwrap_or(0.0),
            drop as i64 - self.precision as i64,
        )
    }

    /// `floor(log10 |self|)`, possibly off by one; the caller corrects it.
    fn decimal_exponent(&self) -> i64 {
        let (top, exponent) = self.top_bits();
        (top.abs().log10() + exponent as f64 * std::f64::consts::LOG10_2).floor() as i64
    }

    /// Decimal rendering with `digits` significant digits.
    ///
    /// Plain notation for magnitudes in `[1e-5, 1e15)`, otherwise `d.ddde-N`.
    pub fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let sign = if self.is_negative() { "-" } else { "" };
        let value = self.to_rational().abs();
        let mut exp10 = self.decimal_exponent();
        let scaled_int = |e: i64| -> BigInt {
            let shift = digits as i64 - 1 - e;
            let ten = BigInt::from(10);
            let scaled = if shift >= 0 {
                value.clone() * BigRational::from_integer(num_traits::pow(ten, shift as usize))
            } else {
                value.clone() / BigRational::from_integer(num_traits::pow(ten, (-shift) as usize))
            };
            round_div(scaled.numer().clone(), scaled.denom())
        };
        let lower = num_traits::pow(BigInt::from(10), digits - 1);
        let upper = &lower * 10;
        let mut n = scaled_int(exp10);
        for _ in 0..4 {
            if n >= upper {
                exp10 += 1;
            } else if n < lower {
                exp10 -= 1;
            } else {
                break;
            }
            n = scaled_int(exp10);
        }
        let text = n.to_string();
        let (int_part, frac_part): (String, String) = if (-5..15).contains(&exp10) {
            if exp10 >= 0 {
                let k = (exp10 + 1) as usize;
                if k >= text.len() {
                    (
                        format!("{}{}", text, "0".repeat(k - text.len())),
                        String::new(),
                    )
                } else {
                    (text[..k].to_string(), text[k..].to_string())
                }
            } else {
                (
                    "0".to_string(),
                    format!("{}{}", "0".repeat((-exp10 - 1) as usize), text),
                )
            }
        } else {
            let mantissa = format!("{}.{}", &text[..1], &text[1..]);
            let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
            return format!("{sign}{mantissa}e{exp10}");
        };
        let frac = frac_part.trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    }
}

/// Exact value of a decimal literal (`[-+]digits[.digits][e[-+]digits]`).
pub fn parse_decimal(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidNumber(text.to_string());
    let trimmed = text.trim();
    let (mantissa, exponent) = match trimmed.find(['e', 'E']) {
        Some(pos) => (
            &trimmed[..pos],
            trimmed[pos + 1..].parse::<i64>().map_err(|_| bad())?,
        ),
        None => (trimmed, 0),
    };
    let (negative, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = digits.parse().map_err(|_| bad())?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i64;
    if scale.unsigned_abs() > 10_000 {
        return Err(bad());
    }
    let ten = BigInt::from(10);
    Ok(if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    })
}

impl PartialEq for HighPrecReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HighPrecReal {}

impl PartialOrd for HighPrecReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HighPrecReal {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = Self::aligned(self, other);
        a.cmp(&b)
    }
}

impl Add for &HighPrecReal {
    type Output = HighPrecReal;
    fn add(self, rhs: Self) -> HighPrecReal {
        let (a, b, precision) = HighPrecReal::aligned(self, rhs);
        HighPrecReal {
            mantissa: a + b,
            precision,
        }
    }
}

impl Sub for &HighPrecReal {
    type Output = HighPrecReal;
    fn sub(self, rhs: Self) -> HighPrecReal {
        let (a, b, precision) = HighPrecReal::aligned(self, rhs);
        HighPrecReal {
            mantissa: a - b,
            precision,
        }
    }
}

impl Mul for &HighPrecReal {
    type Output = HighPrecReal;
    fn mul(self, rhs: Self) -> HighPrecReal {
        let (a, b, precision) = HighPrecReal::aligned(self, rhs);
        HighPrecReal {
            mantissa: round_shift_right(a * b, precision),
            precision,
        }
    }
}

impl Div for &HighPrecReal {
    type Output = HighPrecReal;
    fn div(self, rhs: Self) -> HighPrecReal {
        let (a, b, precision) = HighPrecReal::aligned(self, rhs);
        assert!(!b.is_zero(), "division by zero");
        let b = if b.sign() == Sign::Minus { -b } else { b };
        let a = if rhs.is_negative() { -a } else { a };
        HighPrecReal {
            mantissa: round_div(a << precision, &b),
            precision,
        }
    }
}

impl Neg for &HighPrecReal {
    type Output = HighPrecReal;
    fn neg(self) -> HighPrecReal {
        HighPrecReal {
            mantissa: -self.mantissa.clone(),
            precision: self.precision,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: HighPrecReal) -> HighPrecReal {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&HighPrecReal> for HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: &HighPrecReal) -> HighPrecReal {
                (&self).$method(rhs)
            }
        }
        impl $tr<HighPrecReal> for &HighPrecReal {
            type Output = HighPrecReal;
            fn $method(self, rhs: HighPrecReal) -> HighPrecReal {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for HighPrecReal {
    type Output = HighPrecReal;
    fn neg(self) -> HighPrecReal {
        -&self
    }
}

impl fmt::Display for HighPrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(15);
        f.write_str(&self.to_decimal(digits))
    }
}

impl fmt::Debug for HighPrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HighPrecReal({} @ {} bits)",
            self.to_decimal(20),
            self.precision
        )
    }
}
