//! Exact text forms for vectors, schemes and certificates.

use pmas_core::pmas::{Coverage, Scheme};
use pmas_core::solutions::{FamilyVerdict, KohlbergCertificate, Level, Unbalance};
use pmas_core::{Coalition, Rational};

use crate::error::CliError;

pub fn vector(x: &[Rational]) -> String {
    format!("[{}]", list(x))
}

pub fn list(x: &[Rational]) -> String {
    x.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn strings(x: &[Rational]) -> Vec<String> {
    x.iter().map(ToString::to_string).collect()
}

/// `1,3,4` for the players with indices 0, 2 and 3.
pub fn members(s: Coalition) -> String {
    s.members()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// One `S=<members> -> <payoffs>` line per coalition, by size then lexicographically.
pub fn scheme(s: &Scheme) -> String {
    let mut out = String::new();
    if s.coverage() == Coverage::EssentialOnly {
        out.push_str("# essential-only\n");
    }
    for (c, x) in s.ordered() {
        out.push_str(&format!("S={} -> {}\n", members(c), list(x)));
    }
    out
}

pub fn parse_scheme(source: &str, text: &str, players: usize) -> Result<Scheme, CliError> {
    let coverage = if text.lines().any(|l| l.trim() == "# essential-only") {
        Coverage::EssentialOnly
    } else {
        Coverage::AllCoalitions
    };
    let mut out = Scheme::new(players, coverage);
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = line.len() - line.trim_start().len() + 1;
        let err = |col: usize, msg: String| CliError::parse(source, lineno, col, msg);
        let Some(body) = trimmed.strip_prefix("S=") else {
            return Err(err(indent, "expected a line starting with S=".into()));
        };
        let Some((lhs, rhs)) = body.split_once("->") else {
            return Err(err(
                indent,
                "expected `->` between coalition and payoffs".into(),
            ));
        };
        let s = crate::input::parse_coalition(lhs.trim(), players, None)
            .map_err(|m| err(indent + 2, m))?;
        let rhs_col = indent + 2 + lhs.len() + 2;
        let mut payoff = Vec::new();
        for part in rhs.split(',') {
            let v: Rational = part.parse().map_err(|e| err(rhs_col, format!("{e}")))?;
            payoff.push(v);
        }
        if out.get(s).is_some() {
            return Err(err(indent, format!("coalition {s} listed twice")));
        }
        out.insert(s, payoff)
            .map_err(|e| err(rhs_col, e.to_string()))?;
    }
    Ok(out)
}

pub fn family(f: &[Coalition]) -> String {
    let parts: Vec<String> = f.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn level(l: &Level) -> String {
    let (verdict, weights) = match &l.verdict {
        FamilyVerdict::Balanced(w) => {
            let ws: Vec<Rational> = l
                .family
                .iter()
                .map(|s| {
                    w.iter()
                        .find(|(c, _)| c == s)
                        .map(|(_, v)| v.clone())
                        .unwrap()
                })
                .collect();
            ("balanced", vector(&ws))
        }
        FamilyVerdict::NotBalanced(_) => ("not-balanced", "[]".to_string()),
    };
    format!(
        "t={} family={} verdict={} weights={}",
        l.threshold,
        family(&l.family),
        verdict,
        weights
    )
}

pub fn unbalance(u: &Unbalance) -> String {
    match u {
        Unbalance::Uncovered(i) => format!("player {} is in no coalition", i + 1),
        Unbalance::NoWeights => "no weights balance the family".into(),
        Unbalance::ZeroWeight(s) => format!("coalition {s} has zero weight in every balancing"),
    }
}

pub fn certificate(c: &KohlbergCertificate) -> String {
    c.levels.iter().map(|l| level(l) + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scheme_round_trip() {
        let mut s = Scheme::new(2, Coverage::AllCoalitions);
        s.insert(Coalition::singleton(0), vec![Rational::zero()])
            .unwrap();
        s.insert(Coalition::singleton(1), vec![Rational::zero()])
            .unwrap();
        s.insert(
            Coalition::full(2),
            vec![Rational::new(3, 2), Rational::new(-1, 3)],
        )
        .unwrap();
        let text = scheme(&s);
        assert_eq!(text, "S=1 -> 0\nS=2 -> 0\nS=1,2 -> 3/2,-1/3\n");
        assert_eq!(parse_scheme("t", &text, 2).unwrap(), s);
    }

    #[test]
    fn scheme_errors() {
        let e = parse_scheme("t", "S=1 -> 0\nS=1,3 -> 0,0\n", 2).unwrap_err();
        assert!(
            matches!(
                e,
                CliError::Parse {
                    line: 2,
                    column: 3,
                    ..
                }
            ),
            "{e}"
        );
        let e = parse_scheme("t", "S=1,2 -> 0,x\n", 2).unwrap_err();
        assert!(
            matches!(
                e,
                CliError::Parse {
                    line: 1,
                    column: 9,
                    ..
                }
            ),
            "{e}"
        );
        assert!(parse_scheme("t", "T=1 -> 0\n", 2).is_err());
    }

    #[test]
    fn rationals_round_trip() {
        for v in [
            Rational::new(-7, 3),
            Rational::from_integer(12),
            Rational::zero(),
        ] {
            assert_eq!(v.to_string().parse::<Rational>().unwrap(), v);
        }
    }
}
