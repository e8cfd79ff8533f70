//! Parsing of complex scalars written `a+bi`, `bi`, `i` or `a`.

use num_complex::Complex64;

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse `{s}` as a complex number (expected forms like 0.5+0.8i, 2i, i, 1.5)");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().ok().filter(|re| re.is_finite()).map(|re| Complex64::new(re, 0.0)).ok_or_else(bad);
    };
    // split at the last sign that is neither leading nor part of an exponent
    let bytes = body.as_bytes();
    let split =
        (1..bytes.len()).rev().find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        v => v.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    if !(re.is_finite() && im.is_finite()) {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

/// A comma-separated triple of complex scalars.
pub fn parse_triple(s: &str) -> Result<[Complex64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated values, got `{s}`"));
    }
    let mut out = [Complex64::new(0.0, 0.0); 3];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = parse_complex(p)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepted_forms() {
        let c = |re, im| Complex64::new(re, im);
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("2i").unwrap(), c(0.0, 2.0));
        assert_eq!(parse_complex("0.5+0.8i").unwrap(), c(0.5, 0.8));
        assert_eq!(parse_complex("0.5-i").unwrap(), c(0.5, -1.0));
        assert_eq!(parse_complex("-1.5").unwrap(), c(-1.5, 0.0));
        assert_eq!(parse_complex("1e-3+2.5e-1i").unwrap(), c(1e-3, 0.25));
        assert_eq!(parse_complex(" 0.3 + 0.9i ").unwrap(), c(0.3, 0.9));
    }

    #[test]
    fn rejected_forms() {
        for s in ["", "abc", "1+", "1+2j", "ii", "nan", "1+infi"] {
            assert!(parse_complex(s).is_err(), "{s}");
        }
        assert!(parse_triple("1,2").is_err());
        assert_eq!(parse_triple("2,1,0").unwrap()[0], Complex64::new(2.0, 0.0));
    }
}
