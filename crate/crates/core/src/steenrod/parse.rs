use super::{MilnorElt, SteenrodElt};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("expected Sq(...) at position {0}")]
    ExpectedSq(usize),
    #[error("bad integer in profile: {0}")]
    BadInt(String),
    #[error("profile longer than supported cap")]
    TooLong,
    #[error("summands have mixed degrees")]
    MixedDegrees,
    #[error("trailing input after element")]
    Trailing,
}

/// Parses the textual element syntax: `Sq(r1,r2,...)`, sums joined with `+`,
/// e.g. `Sq(1,1)+Sq(4)`. The unit is `Sq()`.
pub fn parse_elt(input: &str) -> Result<SteenrodElt, ParseError> {
    let s = input.trim();
    if s == "0" {
        return Ok(SteenrodElt::zero(0));
    }
    let mut elt = SteenrodElt::default();
    let mut first = true;
    for (idx, part) in s.split('+').enumerate() {
        let part = part.trim();
        let rest = part
            .strip_prefix("Sq(")
            .ok_or(ParseError::ExpectedSq(idx))?;
        let inner = rest.strip_suffix(')').ok_or(ParseError::Trailing)?;
        let mut profile = Vec::new();
        if !inner.trim().is_empty() {
            for n in inner.split(',') {
                let v: u16 = n
                    .trim()
                    .parse()
                    .map_err(|_| ParseError::BadInt(n.trim().to_string()))?;
                profile.push(v);
            }
        }
        while profile.last() == Some(&0) {
            profile.pop();
        }
        if profile.len() > super::MAX_PROFILE_LEN {
            return Err(ParseError::TooLong);
        }
        let b = MilnorElt::from_profile(&profile);
        let term = SteenrodElt::from_basis(b);
        if first {
            elt = term;
            first = false;
        } else {
            if term.degree != elt.degree {
                return Err(ParseError::MixedDegrees);
            }
            elt.add_assign(&term);
        }
    }
    Ok(elt)
}

/// Formats an element in the same syntax `parse_elt` accepts. The zero
/// element prints as `0`.
pub fn format_elt(e: &SteenrodElt) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    e.support
        .iter()
        .map(|b| {
            let len = b.len();
            let entries: Vec<String> = (0..len).map(|i| b.0[i].to_string()).collect();
            format!("Sq({})", entries.join(","))
        })
        .collect::<Vec<_>>()
        .join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["Sq()", "Sq(1)", "Sq(1,1)+Sq(4)", "Sq(0,0,1)"] {
            let e = parse_elt(s).unwrap();
            assert_eq!(format_elt(&e), s);
        }
    }

    #[test]
    fn cancellation() {
        let e = parse_elt("Sq(3)+Sq(3)").unwrap();
        assert!(e.is_zero());
        assert_eq!(format_elt(&e), "0");
    }

    #[test]
    fn mixed_degree_rejected() {
        assert_eq!(parse_elt("Sq(1)+Sq(2)"), Err(ParseError::MixedDegrees));
    }
}
