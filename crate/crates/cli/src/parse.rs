//! Ideal expressions.
//!
//! Shorthand mode (every variable a single character): `ab2,bc3,cd4,da5`,
//! a variable followed by an optional positive exponent, juxtaposition for
//! products. Explicit mode (any variable names): `x1^2*x2, x3`. A string uses
//! explicit mode when it contains `*` or `^`, or when some variable name is
//! longer than one character. Whitespace is ignored; `1` is the unit monomial
//! and `0` alone is the zero ideal. A whole expression may be raised to a
//! power as `(ab2,bc3)^3`.

use multseq::{Exponent, ExponentVector, MonomialIdeal, RingSpec};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty ideal expression")]
    EmptyInput,

    #[error("empty term in {0:?}")]
    EmptyTerm(String),

    #[error("unknown variable {0:?}")]
    UnknownVariable(String),

    #[error("malformed exponent in {term:?}: {reason}")]
    MalformedExponent { term: String, reason: String },

    #[error("unexpected character {ch:?} in {term:?}")]
    UnexpectedChar { ch: char, term: String },

    #[error("{0:?} mixes shorthand and explicit notation")]
    MixedModes(String),

    #[error(
        "non-monomial input {0:?}: only monomial ideals are supported \
         (sums, differences and coefficients cannot be handled)"
    )]
    NonMonomial(String),

    #[error(transparent)]
    Library(#[from] multseq::Error),
}

pub fn parse_ideal(src: &str, ring: &RingSpec) -> Result<MonomialIdeal, ParseError> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(ParseError::EmptyInput);
    }
    if s == "0" {
        return Ok(MonomialIdeal::zero(ring));
    }
    if let Some((inner, k)) = power_suffix(&s)? {
        return Ok(parse_ideal(inner, ring)?.power(k)?);
    }
    let explicit = s.contains(['*', '^']) || ring.var_names().iter().any(|n| n.chars().count() > 1);
    let mut points = Vec::new();
    for term in s.split(',') {
        if term.is_empty() {
            return Err(ParseError::EmptyTerm(s.clone()));
        }
        if term.contains(['+', '-', '/', '=', '(', ')']) {
            return Err(ParseError::NonMonomial(term.to_string()));
        }
        let v = if explicit {
            parse_explicit(term, ring)?
        } else {
            parse_shorthand(term, ring)?
        };
        points.push(v);
    }
    Ok(MonomialIdeal::minimalize(points, ring)?)
}

/// Splits `(expr)^k` into `expr` and `k`. Returns `None` for other shapes,
/// which the term parser then reports.
fn power_suffix(s: &str) -> Result<Option<(&str, u32)>, ParseError> {
    let Some(body) = s.strip_prefix('(') else {
        return Ok(None);
    };
    let Some((inner, digits)) = body.rsplit_once(")^") else {
        return Ok(None);
    };
    if inner.contains(['(', ')'])
        || digits.is_empty()
        || !digits.chars().all(|c| c.is_ascii_digit())
    {
        return Ok(None);
    }
    let k = parse_digits(digits, s)?;
    if k == 0 {
        return Err(ParseError::MalformedExponent {
            term: s.to_string(),
            reason: "ideal power must be at least 1".into(),
        });
    }
    Ok(Some((inner, k)))
}

fn add_power(exps: &mut [Exponent], k: usize, e: Exponent, term: &str) -> Result<(), ParseError> {
    exps[k] = exps[k]
        .checked_add(e)
        .ok_or_else(|| ParseError::MalformedExponent {
            term: term.to_string(),
            reason: "exponent too large".into(),
        })?;
    Ok(())
}

fn parse_digits(digits: &str, term: &str) -> Result<Exponent, ParseError> {
    digits
        .parse::<Exponent>()
        .map_err(|_| ParseError::MalformedExponent {
            term: term.to_string(),
            reason: "exponent too large".into(),
        })
}

fn parse_shorthand(term: &str, ring: &RingSpec) -> Result<ExponentVector, ParseError> {
    let mut exps = vec![0; ring.dim()];
    if term == "1" {
        return Ok(ExponentVector::new(exps));
    }
    let chars: Vec<char> = term.chars().collect();
    let mut pos = 0;
    while pos < chars.len() {
        let c = chars[pos];
        if c.is_ascii_digit() {
            return Err(ParseError::MalformedExponent {
                term: term.to_string(),
                reason: "exponent without a variable".into(),
            });
        }
        if !(c.is_alphabetic() || c == '_') {
            return Err(ParseError::UnexpectedChar {
                ch: c,
                term: term.to_string(),
            });
        }
        let k = ring
            .index_of(c.encode_utf8(&mut [0; 4]))
            .ok_or_else(|| ParseError::UnknownVariable(c.to_string()))?;
        pos += 1;
        let start = pos;
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            pos += 1;
        }
        let e = if start == pos {
            1
        } else {
            let digits: String = chars[start..pos].iter().collect();
            let e = parse_digits(&digits, term)?;
            if e == 0 {
                return Err(ParseError::MalformedExponent {
                    term: term.to_string(),
                    reason: "exponent 0; use explicit mode for trivial factors".into(),
                });
            }
            e
        };
        add_power(&mut exps, k, e, term)?;
    }
    Ok(ExponentVector::new(exps))
}

fn parse_explicit(term: &str, ring: &RingSpec) -> Result<ExponentVector, ParseError> {
    let mut exps = vec![0; ring.dim()];
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(ParseError::EmptyTerm(term.to_string()));
        }
        let (name, exponent) = match factor.split_once('^') {
            Some((n, e)) => (n, Some(e)),
            None => (factor, None),
        };
        if name == "1" && exponent.is_none() {
            continue;
        }
        if let Some(bad) = name.chars().find(|c| !(c.is_alphanumeric() || *c == '_')) {
            return Err(ParseError::UnexpectedChar {
                ch: bad,
                term: term.to_string(),
            });
        }
        let k = match ring.index_of(name) {
            Some(k) => k,
            None if looks_like_shorthand(name, ring) => {
                return Err(ParseError::MixedModes(term.to_string()))
            }
            None => return Err(ParseError::UnknownVariable(name.to_string())),
        };
        let e = match exponent {
            None => 1,
            Some(digits) if !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) => {
                parse_digits(digits, term)?
            }
            Some(digits) if digits.starts_with(|c: char| c.is_ascii_digit()) => {
                return Err(ParseError::MixedModes(term.to_string()))
            }
            Some(_) => {
                return Err(ParseError::MalformedExponent {
                    term: term.to_string(),
                    reason: "expected decimal digits after '^'".into(),
                })
            }
        };
        add_power(&mut exps, k, e, term)?;
    }
    Ok(ExponentVector::new(exps))
}

/// Whether `name` reads as shorthand juxtaposition of ring variables.
fn looks_like_shorthand(name: &str, ring: &RingSpec) -> bool {
    let single = ring.var_names().iter().all(|n| n.chars().count() == 1);
    single && parse_shorthand(name, ring).is_ok()
}

/// Canonical text of an ideal: shorthand when every variable name is a single
/// character, explicit otherwise. Parsing the output yields the same ideal.
pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        return "0".into();
    }
    let names = ideal.ring().var_names();
    let shorthand = names.iter().all(|n| n.chars().count() == 1);
    let terms: Vec<String> = ideal
        .gens()
        .iter()
        .map(|g| {
            if g.is_zero() {
                return "1".into();
            }
            let factors = names
                .iter()
                .zip(g.as_slice())
                .filter(|(_, &e)| e > 0)
                .map(|(n, &e)| match (shorthand, e) {
                    (_, 1) => n.clone(),
                    (true, e) => format!("{n}{e}"),
                    (false, e) => format!("{n}^{e}"),
                });
            if shorthand {
                factors.collect::<String>()
            } else {
                factors.collect::<Vec<_>>().join("*")
            }
        })
        .collect();
    terms.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> RingSpec {
        RingSpec::new(names.iter().copied()).unwrap()
    }

    fn gens(i: &MonomialIdeal) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = i.gens().iter().map(|g| g.as_slice().to_vec()).collect();
        v.sort();
        v
    }

    #[test]
    fn shorthand_examples() {
        let r = ring(&["a", "b", "c", "d"]);
        let i = parse_ideal("ab2,bc3,cd4,da5", &r).unwrap();
        assert_eq!(
            gens(&i),
            vec![
                vec![0, 0, 1, 4],
                vec![0, 1, 3, 0],
                vec![1, 2, 0, 0],
                vec![5, 0, 0, 1]
            ]
        );
        let r2 = ring(&["x", "y"]);
        assert_eq!(
            gens(&parse_ideal("x2,xy", &r2).unwrap()),
            vec![vec![1, 1], vec![2, 0]]
        );
        assert_eq!(
            gens(&parse_ideal(" x 2 , x y ", &r2).unwrap()),
            vec![vec![1, 1], vec![2, 0]]
        );
    }

    #[test]
    fn explicit_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(
            gens(&parse_ideal("x^2*y, y^3", &r).unwrap()),
            vec![vec![0, 3], vec![2, 1]]
        );
        let long = ring(&["x1", "x2", "x3"]);
        assert_eq!(
            gens(&parse_ideal("x1^2*x2,x3", &long).unwrap()),
            vec![vec![0, 0, 1], vec![2, 1, 0]]
        );
        assert_eq!(gens(&parse_ideal("x^0*y", &r).unwrap()), vec![vec![0, 1]]);
    }

    #[test]
    fn special_ideals() {
        let r = ring(&["x", "y"]);
        assert!(parse_ideal("0", &r).unwrap().is_zero());
        assert!(parse_ideal("1", &r).unwrap().is_unit());
        assert!(parse_ideal("x,1", &r).unwrap().is_unit());
    }

    #[test]
    fn errors() {
        let r = ring(&["x", "y"]);
        assert_eq!(parse_ideal("", &r), Err(ParseError::EmptyInput));
        assert!(matches!(
            parse_ideal("x,,y", &r),
            Err(ParseError::EmptyTerm(_))
        ));
        assert_eq!(
            parse_ideal("xz", &r),
            Err(ParseError::UnknownVariable("z".into()))
        );
        let zero = parse_ideal("x0", &r).unwrap_err();
        assert!(zero
            .to_string()
            .contains("use explicit mode for trivial factors"));
        assert!(matches!(
            parse_ideal("x^2y", &r),
            Err(ParseError::MixedModes(_))
        ));
        assert!(matches!(
            parse_ideal("x2*y", &r),
            Err(ParseError::MixedModes(_))
        ));
        assert!(matches!(
            parse_ideal("x^", &r),
            Err(ParseError::MalformedExponent { .. })
        ));
        assert!(matches!(
            parse_ideal("x99999999999", &r),
            Err(ParseError::MalformedExponent { .. })
        ));
        assert!(matches!(
            parse_ideal("2x", &r),
            Err(ParseError::MalformedExponent { .. })
        ));
        assert!(matches!(
            parse_ideal("x!", &r),
            Err(ParseError::UnexpectedChar { .. })
        ));
    }

    #[test]
    fn non_monomial_input_is_rejected() {
        let r = ring(&["a", "b", "c", "d", "e"]);
        let err = parse_ideal("a2-bd,b4,e3", &r).unwrap_err();
        assert_eq!(err, ParseError::NonMonomial("a2-bd".into()));
        assert!(err.to_string().contains("only monomial ideals"));
        assert!(matches!(
            parse_ideal("c2+bd", &r),
            Err(ParseError::NonMonomial(_))
        ));
    }

    #[test]
    fn whole_expression_power() {
        let r = ring(&["x", "y"]);
        let sq = parse_ideal("(x, y)^2", &r).unwrap();
        assert_eq!(gens(&sq), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        let e = parse_ideal("(x^2*y)^3", &r).unwrap();
        assert_eq!(gens(&e), vec![vec![6, 3]]);
        assert!(matches!(
            parse_ideal("(x,y)^0", &r),
            Err(ParseError::MalformedExponent { .. })
        ));
        assert!(matches!(
            parse_ideal("(x-y)^2", &r),
            Err(ParseError::NonMonomial(_))
        ));
        assert!(matches!(
            parse_ideal("((x))^2", &r),
            Err(ParseError::NonMonomial(_))
        ));
    }

    #[test]
    fn render_round_trips() {
        let r = ring(&["a", "b", "c", "d"]);
        let i = parse_ideal("ab2,bc3,cd4,da5", &r)
            .unwrap()
            .power(2)
            .unwrap();
        assert_eq!(parse_ideal(&render_ideal(&i), &r).unwrap(), i);
        let long = ring(&["x1", "x2"]);
        let j = parse_ideal("x1^3, x1*x2^2", &long).unwrap();
        assert_eq!(render_ideal(&j), "x1^3,x1*x2^2");
        assert_eq!(parse_ideal(&render_ideal(&j), &long).unwrap(), j);
        let x = ring(&["x", "y"]);
        assert_eq!(
            render_ideal(&parse_ideal("y2,x2,xy", &x).unwrap()),
            "x2,xy,y2"
        );
    }
}
