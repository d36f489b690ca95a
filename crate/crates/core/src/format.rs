//! Text encodings used by the CLI: complex numbers as `re+imi` strings and
//! fixed-width scientific floats for CSV.

use num_complex::Complex64;

use crate::error::{PhaseError, Result};

/// `re+imi` / `re-imi` with shortest round-trip decimal digits.
pub fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", z.re, sign, z.im.abs())
}

/// Parses `a`, `a+bi`, `a-bi`, `bi`, `i`, `-i`, and forms with exponents
/// such as `1e-3-2.5E2i`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let err = || PhaseError::ParseComplex(s.to_string());
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(err());
    }
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return t.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| err());
    };
    // Split at the last sign that is not a leading sign or part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let parse_imag = |part: &str| -> Result<f64> {
        match part {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            other => other.parse::<f64>().map_err(|_| err()),
        }
    };
    match split {
        Some(k) => {
            let re = body[..k].parse::<f64>().map_err(|_| err())?;
            let im = parse_imag(&body[k..])?;
            Ok(Complex64::new(re, im))
        }
        None => Ok(Complex64::new(0.0, parse_imag(body)?)),
    }
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_f64_sci(x: f64) -> String {
    format!("{x:.16e}")
}
