//! Shared text format for sums of monomial terms.
//!
//! A term is `coeff*f1*f2*...` where each factor is a letter followed by a
//! 1-based index and an optional `^exponent` (`s2`, `d1^3`). Real
//! coefficients are written bare, non-real ones in parentheses. Unit
//! coefficients are omitted; negative real coefficients become ` - ` joins.

use num::traits::{One, Signed, Zero};

use super::scalar::GaussianRational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct ParsedTerm {
    pub coeff: GaussianRational,
    pub factors: Vec<(char, usize, u32)>,
}

pub(crate) fn render_factor(out: &mut String, letter: char, index: usize, exp: u32) {
    if !out.is_empty() {
        out.push('*');
    }
    out.push(letter);
    out.push_str(&index.to_string());
    if exp > 1 {
        out.push('^');
        out.push_str(&exp.to_string());
    }
}

fn render_term(coeff: &GaussianRational, mono: &str) -> String {
    if mono.is_empty() {
        return if coeff.is_real() {
            coeff.to_string()
        } else {
            format!("({coeff})")
        };
    }
    if coeff.is_one() {
        mono.to_string()
    } else if (-coeff).is_one() {
        format!("-{mono}")
    } else if coeff.is_real() {
        format!("{coeff}*{mono}")
    } else {
        format!("({coeff})*{mono}")
    }
}

/// Joins terms given in display order. The zero sum renders as `0`.
pub(crate) fn render_sum<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a GaussianRational, String)>,
{
    let mut out = String::new();
    for (coeff, mono) in terms {
        if out.is_empty() {
            out = render_term(coeff, &mono);
        } else if coeff.is_real() && coeff.re.is_negative() {
            out.push_str(" - ");
            out.push_str(&render_term(&-coeff, &mono));
        } else {
            out.push_str(" + ");
            out.push_str(&render_term(coeff, &mono));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut pieces = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    let mut negative = false;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced `)` in `{s}`")));
                }
            }
            b'+' | b'-' if depth == 0 => {
                if i == start {
                    // leading sign of the current term
                    if b == b'-' {
                        negative = !negative;
                    }
                    start = i + 1;
                    continue;
                }
                pieces.push((negative, &s[start..i]));
                negative = b == b'-';
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced `(` in `{s}`")));
    }
    if start >= s.len() {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    pieces.push((negative, &s[start..]));
    Ok(pieces)
}

fn parse_factor(tok: &str, letters: &[char]) -> Result<Option<(char, usize, u32)>> {
    let mut chars = tok.chars();
    let Some(letter) = chars.next() else {
        return Err(Error::Parse("empty factor".into()));
    };
    if !letters.contains(&letter) {
        return Ok(None);
    }
    let rest = chars.as_str();
    let (idx, exp) = match rest.split_once('^') {
        Some((i, e)) => (i, e),
        None => (rest, "1"),
    };
    let bad = || Error::Parse(format!("invalid factor `{tok}`"));
    let idx: usize = idx.parse().map_err(|_| bad())?;
    let exp: u32 = exp.parse().map_err(|_| bad())?;
    if idx == 0 {
        return Err(bad());
    }
    Ok(Some((letter, idx, exp)))
}

/// Parses a rendered sum. `letters` lists the admissible factor letters.
pub(crate) fn parse_sum(input: &str, letters: &[char]) -> Result<Vec<ParsedTerm>> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut terms = Vec::new();
    for (negative, body) in split_terms(&s)? {
        let mut coeff = GaussianRational::one();
        let mut factors = Vec::new();
        let mut rest = body;
        if let Some(inner) = rest.strip_prefix('(') {
            let close = inner
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced `(` in `{body}`")))?;
            coeff = inner[..close].parse()?;
            rest = &inner[close + 1..];
            rest = rest.strip_prefix('*').unwrap_or(rest);
            if rest.is_empty() {
                terms.push(ParsedTerm {
                    coeff: if negative { -coeff } else { coeff },
                    factors,
                });
                continue;
            }
        }
        for tok in rest.split('*') {
            match parse_factor(tok, letters)? {
                Some(f) => factors.push(f),
                None => {
                    let c: GaussianRational = tok.parse()?;
                    coeff = &coeff * &c;
                }
            }
        }
        if negative {
            coeff = -coeff;
        }
        if !coeff.is_zero() || factors.is_empty() {
            terms.push(ParsedTerm { coeff, factors });
        }
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_signs_outside_parentheses() {
        let t = parse_sum("s1^2 - 2*s2 + (1-i)*s3", &['s']).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[1].coeff, GaussianRational::from_integer(-2));
        assert_eq!(t[2].coeff, "1-i".parse().unwrap());
        assert_eq!(t[0].factors, vec![('s', 1, 2)]);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_sum("s1 +", &['s']).is_err());
        assert!(parse_sum("s0", &['s']).is_err());
        assert!(parse_sum("x1", &['s']).is_err());
        assert!(parse_sum("(1+i", &['s']).is_err());
    }
}
