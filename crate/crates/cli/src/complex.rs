//! `re+imi` text form for complex numbers, e.g. `0.6+0.0i`, `-0.5-1e-3i`.
//! Plain reals (`0.6`) and pure imaginaries (`0.8i`, `-i`) also parse.

use symtele_core::C64;

pub fn format_complex(z: C64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{:?}{}{:?}i", z.re, sign, z.im.abs())
}

pub fn parse_complex(s: &str) -> Result<C64, String> {
    let t = s.trim();
    let bad = || format!("invalid complex number {s:?}; expected e.g. 0.6+0.8i");
    let num = |x: &str| x.parse::<f64>().map_err(|_| bad());
    let Some(body) = t.strip_suffix('i') else {
        return num(t).map(|re| C64::new(re, 0.0)).and_then(|z| if z.re.is_finite() { Ok(z) } else { Err(bad()) });
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let unit = |x: &str| match x {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => num(x),
    };
    let z = match split {
        Some(k) => C64::new(num(&body[..k])?, unit(&body[k..])?),
        None => C64::new(0.0, unit(body)?),
    };
    if z.re.is_finite() && z.im.is_finite() { Ok(z) } else { Err(bad()) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formats() {
        assert_eq!(format_complex(C64::new(0.6, 0.0)), "0.6+0.0i");
        assert_eq!(format_complex(C64::new(-0.5, -0.25)), "-0.5-0.25i");
    }

    #[test]
    fn parses_common_forms() {
        assert_eq!(parse_complex("0.6").unwrap(), C64::new(0.6, 0.0));
        assert_eq!(parse_complex("0.6+0.8i").unwrap(), C64::new(0.6, 0.8));
        assert_eq!(parse_complex("0.6-0.8i").unwrap(), C64::new(0.6, -0.8));
        assert_eq!(parse_complex("0.8i").unwrap(), C64::new(0.0, 0.8));
        assert_eq!(parse_complex("-i").unwrap(), C64::new(0.0, -1.0));
        assert_eq!(parse_complex("1e-3+2E-1i").unwrap(), C64::new(1e-3, 0.2));
        assert_eq!(parse_complex("-1e-3-2e+1i").unwrap(), C64::new(-1e-3, -20.0));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "abc", "1+2j", "1++2i", "nan", "inf+0i"] {
            assert!(parse_complex(s).is_err(), "{s}");
        }
    }

    proptest! {
        #[test]
        fn round_trip(re in -1e6f64..1e6, im in -1e6f64..1e6) {
            let z = C64::new(re, im);
            prop_assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
        }
    }
}
