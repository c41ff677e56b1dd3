//! Helpers around [`BigRational`]: literal parsing, exact float conversion
//! and the `num/den` text form used in reports.

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Parses `7`, `-3/4`, `0.125` or `2.5e-3` into an exact rational.
///
/// Decimal literals are converted exactly: `0.1` is `1/10`, not the nearest
/// double.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::parse(0, "empty number"));
    }
    if let Some((n, d)) = s.split_once('/') {
        let num = parse_int(n.trim(), 0)?;
        let den = parse_int(d.trim(), n.len() + 1)?;
        if den.is_zero() {
            return Err(Error::parse(n.len() + 1, "zero denominator"));
        }
        return Ok(BigRational::new(num, den));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let exp: i64 = s[i + 1..]
                .parse()
                .map_err(|_| Error::parse(i + 1, "bad exponent"))?;
            (&s[..i], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::parse(0, "no digits"));
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(Error::parse(0, format!("not a number: `{s}`")));
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(all_digits.parse::<BigInt>().unwrap_or_default());
    let scale = exponent - frac_part.len() as i64;
    let ten = BigRational::from_integer(BigInt::from(10u32));
    let power = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= power;
    } else {
        value /= power;
    }
    Ok(if negative { -value } else { value })
}

fn parse_int(s: &str, offset: usize) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|_| Error::parse(offset, format!("not an integer: `{s}`")))
}

/// Exact value of a finite double.
pub fn from_f64(value: f64) -> Option<BigRational> {
    if !value.is_finite() {
        return None;
    }
    if value == 0.0 {
        return Some(BigRational::zero());
    }
    let bits = value.to_bits();
    let negative = bits >> 63 == 1;
    let biased = ((bits >> 52) & 0x7ff) as i64;
    let fraction = bits & ((1u64 << 52) - 1);
    let (mantissa, exponent) = if biased == 0 {
        (fraction, -1074)
    } else {
        (fraction | (1u64 << 52), biased - 1075)
    };
    let mut r = BigRational::from_integer(BigInt::from(mantissa));
    let two = BigRational::from_integer(BigInt::from(2u32));
    let power = num_traits::pow(two, exponent.unsigned_abs() as usize);
    if exponent >= 0 {
        r *= power;
    } else {
        r /= power;
    }
    Some(if negative { -r } else { r })
}

pub fn to_f64(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// `num/den` with the denominator always written, e.g. `2/1`.
pub fn fraction_text(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub fn is_integer(value: &BigRational) -> bool {
    value.denom().is_one()
}

pub fn is_positive(value: &BigRational) -> bool {
    value.is_positive()
}
