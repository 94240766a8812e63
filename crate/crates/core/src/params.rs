//! Named real parameters with admissible ranges.
//!
//! Parametric algebras and dual families declare their parameters with a
//! range such as `(0,1]`, `[-1,1] \ {0}`, `(-inf,inf) \ {0}` or the finite
//! set `{-1,1}`.  Values are always rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, GScalar};

/// A parameter assignment: name → rational value.
pub type Assignment = BTreeMap<String, BigRational>;

/// Converts an assignment to the scalar point used by polynomial evaluation.
pub fn to_point(a: &Assignment) -> BTreeMap<String, GScalar> {
    a.iter().map(|(k, v)| (k.clone(), GScalar::real(v.clone()))).collect()
}

/// One end of an interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Bound {
    /// `-inf` or `inf`.
    Unbounded,
    /// Excludes the endpoint.
    Open(BigRational),
    /// Includes the endpoint.
    Closed(BigRational),
}

/// The admissible values of a parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ParamRange {
    /// An interval minus finitely many excluded points.
    Interval {
        /// Lower end.
        lo: Bound,
        /// Upper end.
        hi: Bound,
        /// Excluded interior points, sorted.
        excluded: Vec<BigRational>,
    },
    /// A finite set of values, sorted.
    Set(Vec<BigRational>),
}

impl ParamRange {
    /// All of ℝ.
    pub fn all() -> Self {
        ParamRange::Interval { lo: Bound::Unbounded, hi: Bound::Unbounded, excluded: Vec::new() }
    }

    /// ℝ without zero.
    pub fn nonzero() -> Self {
        ParamRange::Interval { lo: Bound::Unbounded, hi: Bound::Unbounded, excluded: vec![BigRational::from_integer(0.into())] }
    }

    /// True iff `q` is admissible.
    pub fn contains(&self, q: &BigRational) -> bool {
        match self {
            ParamRange::Set(vals) => vals.contains(q),
            ParamRange::Interval { lo, hi, excluded } => {
                let lo_ok = match lo {
                    Bound::Unbounded => true,
                    Bound::Open(a) => q > a,
                    Bound::Closed(a) => q >= a,
                };
                let hi_ok = match hi {
                    Bound::Unbounded => true,
                    Bound::Open(b) => q < b,
                    Bound::Closed(b) => q <= b,
                };
                lo_ok && hi_ok && !excluded.contains(q)
            }
        }
    }

    /// Checks `value` for parameter `name`.
    pub fn check(&self, name: &str, value: &BigRational) -> Result<()> {
        if self.contains(value) {
            Ok(())
        } else {
            Err(Error::ParameterOutOfRange { name: name.to_string(), value: format_rational(value), range: self.to_string() })
        }
    }
}

fn fmt_set(vals: &[BigRational]) -> String {
    let parts: Vec<String> = vals.iter().map(format_rational).collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamRange::Set(vals) => write!(f, "{}", fmt_set(vals)),
            ParamRange::Interval { lo, hi, excluded } => {
                let lo_s = match lo {
                    Bound::Unbounded => "(-inf".to_string(),
                    Bound::Open(a) => format!("({}", format_rational(a)),
                    Bound::Closed(a) => format!("[{}", format_rational(a)),
                };
                let hi_s = match hi {
                    Bound::Unbounded => "inf)".to_string(),
                    Bound::Open(b) => format!("{})", format_rational(b)),
                    Bound::Closed(b) => format!("{}]", format_rational(b)),
                };
                write!(f, "{lo_s},{hi_s}")?;
                if !excluded.is_empty() {
                    write!(f, " \\ {}", fmt_set(excluded))?;
                }
                Ok(())
            }
        }
    }
}

fn parse_set(t: &str, whole: &str) -> Result<Vec<BigRational>> {
    let inner = t
        .trim()
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::InvalidStructure(format!("malformed set in range `{whole}`")))?;
    let mut vals = Vec::new();
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        vals.push(parse_rational(part)?);
    }
    vals.sort();
    vals.dedup();
    Ok(vals)
}

impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidStructure(format!("malformed parameter range `{s}`"));
        if t.starts_with('{') {
            return Ok(ParamRange::Set(parse_set(t, s)?));
        }
        let (interval, excluded) = match t.split_once('\\') {
            Some((a, b)) => (a.trim(), parse_set(b, s)?),
            None => (t, Vec::new()),
        };
        let open_lo = match interval.chars().next() {
            Some('(') => true,
            Some('[') => false,
            _ => return Err(bad()),
        };
        let open_hi = match interval.chars().last() {
            Some(')') => true,
            Some(']') => false,
            _ => return Err(bad()),
        };
        let body = &interval[1..interval.len() - 1];
        let (a, b) = body.split_once(',').ok_or_else(bad)?;
        let parse_end = |x: &str, open: bool, inf: &str| -> Result<Bound> {
            let x = x.trim();
            if x == inf || (inf == "inf" && x == "+inf") {
                if !open {
                    return Err(bad());
                }
                Ok(Bound::Unbounded)
            } else {
                let q = parse_rational(x).map_err(|_| bad())?;
                Ok(if open { Bound::Open(q) } else { Bound::Closed(q) })
            }
        };
        Ok(ParamRange::Interval { lo: parse_end(a, open_lo, "-inf")?, hi: parse_end(b, open_hi, "inf")?, excluded })
    }
}

/// A declared parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamDecl {
    /// Identifier used in coefficients.
    pub name: String,
    /// Admissible values.
    pub range: ParamRange,
}

impl ParamDecl {
    /// Builds a declaration.
    pub fn new(name: &str, range: ParamRange) -> Self {
        ParamDecl { name: name.to_string(), range }
    }
}

/// Checks that an assignment covers every declared parameter with an
/// admissible value.
pub fn check_assignment(decls: &[ParamDecl], a: &Assignment) -> Result<()> {
    for d in decls {
        let v = a.get(&d.name).ok_or_else(|| Error::MissingParameter(d.name.clone()))?;
        d.range.check(&d.name, v)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn ranges_round_trip() {
        for t in ["(0,1]", "[-1,1] \\ {0}", "(-inf,inf) \\ {0}", "{-1,1}", "[0,inf)", "(-inf,0)"] {
            let r: ParamRange = t.parse().unwrap();
            assert_eq!(r.to_string(), t);
        }
    }

    #[test]
    fn membership() {
        let r: ParamRange = "[-1,1) \\ {0}".parse().unwrap();
        assert!(r.contains(&rat(-1, 1)));
        assert!(!r.contains(&rat(1, 1)));
        assert!(!r.contains(&rat(0, 1)));
        assert!(r.contains(&rat(1, 2)));
        let e: ParamRange = "{-1,1}".parse().unwrap();
        assert!(e.contains(&rat(-1, 1)) && !e.contains(&rat(0, 1)));
    }

    #[test]
    fn malformed_ranges_rejected() {
        for t in ["0,1", "[-inf,0)", "(1", "{1,2"] {
            assert!(t.parse::<ParamRange>().is_err(), "{t}");
        }
    }
}
