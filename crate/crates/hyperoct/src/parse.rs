//! Parsing of signed-permutation literals and cover presentation files, and
//! the full cover check.
//!
//! Literal syntax: `cycles:(1 2)(4 5); signs:01010` — disjoint cycles,
//! 1-based, fixed points omissible, `cycles:()` for the identity; `signs` is
//! a bit string of length `n`.
//!
//! Cover files are line-oriented with `#` comments:
//!
//! ```text
//! n <int>
//! gen <name> = cycles:(...); signs:<bits>
//! rel <word>
//! torus <word> | <word>
//! ```
//!
//! where a word is a whitespace-separated list of generator names, with a
//! `'` suffix for the inverse.

use std::fmt;

use crate::cover::{branch_divisor_pairing, GlobalReport, TorusMonodromy};
use crate::error::Error;
use crate::perm::Permutation;
use crate::signed::SignedPerm;

/// A syntax or consistency error with its source position (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, col {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// Parse a signed-permutation literal against degree `n`. The `line` and
/// `offset` locate the literal inside a larger file; use `(1, 0)` for a
/// standalone literal.
pub fn parse_signed_perm(
    n: usize,
    text: &str,
    line: usize,
    offset: usize,
) -> Result<SignedPerm, ParseError> {
    let at = |pos: usize| offset + pos + 1;
    let err = |pos: usize, msg: String| ParseError::new(line, at(pos), msg);
    let rest = text.trim_start();
    let pad = text.len() - rest.len();
    let rest = rest
        .strip_prefix("cycles:")
        .ok_or_else(|| err(pad, "expected `cycles:`".into()))?;
    let mut pos = pad + "cycles:".len();
    let mut chars = rest.char_indices().peekable();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    loop {
        match chars.peek().copied() {
            Some((i, '(')) => {
                chars.next();
                let mut cycle: Vec<usize> = Vec::new();
                let mut num = String::new();
                let close = loop {
                    match chars.next() {
                        Some((j, ')')) => break j,
                        Some((_, c)) if c.is_ascii_digit() => num.push(c),
                        Some((j, c)) if c.is_whitespace() => {
                            if !num.is_empty() {
                                cycle.push(num.parse().map_err(|_| {
                                    err(pos + j, format!("bad number `{num}`"))
                                })?);
                                num.clear();
                            }
                        }
                        Some((j, c)) => {
                            return Err(err(pos + j, format!("unexpected `{c}` in cycle")))
                        }
                        None => return Err(err(pos + i, "unclosed cycle".into())),
                    }
                };
                if !num.is_empty() {
                    cycle.push(
                        num.parse()
                            .map_err(|_| err(pos + close, format!("bad number `{num}`")))?,
                    );
                }
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
            }
            Some((i, ';')) => {
                chars.next();
                pos += i + 1;
                break;
            }
            Some((_, c)) if c.is_whitespace() => {
                chars.next();
            }
            Some((i, c)) => return Err(err(pos + i, format!("unexpected `{c}`"))),
            None => return Err(err(pos + rest.len(), "expected `; signs:`".into())),
        }
    }
    let tail: String = chars.map(|(_, c)| c).collect();
    let tail_trimmed = tail.trim_start();
    let signs_pos = pos + (tail.len() - tail_trimmed.len());
    let bits = tail_trimmed
        .strip_prefix("signs:")
        .ok_or_else(|| err(signs_pos, "expected `signs:`".into()))?
        .trim();
    if bits.len() != n {
        return Err(err(
            signs_pos,
            format!("signs string has length {}, expected {n}", bits.len()),
        ));
    }
    let mut signs = 0u64;
    for (i, c) in bits.chars().enumerate() {
        match c {
            '0' => {}
            '1' => signs |= 1u64 << i,
            _ => return Err(err(signs_pos, format!("bad sign digit `{c}`"))),
        }
    }
    let perm = Permutation::from_cycles(n, &cycles)
        .map_err(|e| err(pad, e.to_string()))?;
    SignedPerm::new(signs, perm).map_err(|e| err(pad, e.to_string()))
}

/// A word over named generators; `true` marks an inverted letter.
pub type CoverWord = Vec<(usize, bool)>;

#[derive(Debug, Clone)]
pub struct Relator {
    pub text: String,
    pub word: CoverWord,
    pub line: usize,
}

#[derive(Debug, Clone)]
pub struct TorusWords {
    pub meridian_text: String,
    pub longitude_text: String,
    pub meridian: CoverWord,
    pub longitude: CoverWord,
    pub line: usize,
}

/// A parsed cover presentation: degree, generator images, relators, and
/// boundary tori given as meridian/longitude words.
#[derive(Debug, Clone)]
pub struct CoverPresentation {
    pub n: usize,
    pub generators: Vec<(String, SignedPerm)>,
    pub relators: Vec<Relator>,
    pub tori: Vec<TorusWords>,
}

impl CoverPresentation {
    pub fn eval_word(&self, word: &CoverWord) -> SignedPerm {
        let mut acc = SignedPerm::identity(self.n).expect("degree validated at parse");
        for &(gen, inverted) in word {
            let image = &self.generators[gen].1;
            let factor = if inverted { image.inverse() } else { image.clone() };
            acc = acc.mul(&factor).expect("equal degrees");
        }
        acc
    }
}

pub fn parse_cover(text: &str) -> Result<CoverPresentation, ParseError> {
    let mut n: Option<usize> = None;
    let mut generators: Vec<(String, SignedPerm)> = Vec::new();
    let mut relators = Vec::new();
    let mut tori = Vec::new();

    let lookup = |generators: &[(String, SignedPerm)],
                  name: &str,
                  lineno: usize,
                  col: usize|
     -> Result<(usize, bool), ParseError> {
        let (body, inverted) = match name.strip_suffix('\'') {
            Some(body) => (body, true),
            None => (name, false),
        };
        generators
            .iter()
            .position(|(g, _)| g == body)
            .map(|i| (i, inverted))
            .ok_or_else(|| ParseError::new(lineno, col, format!("unknown generator `{body}`")))
    };

    let parse_word = |generators: &[(String, SignedPerm)],
                      text: &str,
                      lineno: usize,
                      offset: usize|
     -> Result<CoverWord, ParseError> {
        let mut word = Vec::new();
        let mut idx = 0;
        while idx < text.len() {
            let rest = &text[idx..];
            idx += rest.len() - rest.trim_start().len();
            if idx >= text.len() {
                break;
            }
            let end = text[idx..]
                .find(char::is_whitespace)
                .map(|p| idx + p)
                .unwrap_or(text.len());
            word.push(lookup(generators, &text[idx..end], lineno, offset + idx + 1)?);
            idx = end;
        }
        Ok(word)
    };

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let (keyword, rest) = match trimmed.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (trimmed, ""),
        };
        let body_offset = line.len() - line.trim_start().len() + keyword.len();
        match keyword {
            "n" => {
                let value: usize = rest.parse().map_err(|_| {
                    ParseError::new(lineno, body_offset + 2, format!("bad degree `{rest}`"))
                })?;
                if value == 0 || value > crate::perm::MAX_DEGREE {
                    return Err(ParseError::new(
                        lineno,
                        body_offset + 2,
                        format!("degree {value} outside 1..={}", crate::perm::MAX_DEGREE),
                    ));
                }
                n = Some(value);
            }
            "gen" => {
                let n = n.ok_or_else(|| {
                    ParseError::new(lineno, 1, "`n` must be declared before `gen`")
                })?;
                let (name, literal) = rest.split_once('=').ok_or_else(|| {
                    ParseError::new(lineno, body_offset + 2, "expected `gen <name> = <literal>`")
                })?;
                let name = name.trim().to_string();
                if name.is_empty() || name.ends_with('\'') {
                    return Err(ParseError::new(
                        lineno,
                        body_offset + 2,
                        "bad generator name",
                    ));
                }
                if generators.iter().any(|(g, _)| *g == name) {
                    return Err(ParseError::new(
                        lineno,
                        body_offset + 2,
                        format!("generator `{name}` already defined"),
                    ));
                }
                let literal_offset = line.len() - literal.len();
                let image = parse_signed_perm(n, literal, lineno, literal_offset)?;
                generators.push((name, image));
            }
            "rel" => {
                if n.is_none() {
                    return Err(ParseError::new(lineno, 1, "`n` must be declared before `rel`"));
                }
                let word = parse_word(&generators, rest, lineno, body_offset + 1)?;
                relators.push(Relator {
                    text: rest.to_string(),
                    word,
                    line: lineno,
                });
            }
            "torus" => {
                if n.is_none() {
                    return Err(ParseError::new(
                        lineno,
                        1,
                        "`n` must be declared before `torus`",
                    ));
                }
                let (mer, long) = rest.split_once('|').ok_or_else(|| {
                    ParseError::new(
                        lineno,
                        body_offset + 2,
                        "expected `torus <word> | <word>`",
                    )
                })?;
                let meridian = parse_word(&generators, mer.trim(), lineno, body_offset + 1)?;
                let long_offset = line.len() - long.len();
                let longitude = parse_word(&generators, long.trim(), lineno, long_offset)?;
                tori.push(TorusWords {
                    meridian_text: mer.trim().to_string(),
                    longitude_text: long.trim().to_string(),
                    meridian,
                    longitude,
                    line: lineno,
                });
            }
            other => {
                return Err(ParseError::new(
                    lineno,
                    1,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }
    let n = n.ok_or_else(|| ParseError::new(1, 1, "missing `n` declaration"))?;
    Ok(CoverPresentation {
        n,
        generators,
        relators,
        tori,
    })
}

/// Outcome class of a full cover check, in decreasing severity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckOutcome {
    /// Relator, commutation, or meridian-hypothesis violation.
    Violation,
    /// Per-torus identity or global-sum failure.
    IdentityFailure,
    Pass,
}

/// One named check with its verdict.
#[derive(Debug, Clone)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The result of `check_cover`: one line per check, the verified tori, and
/// the global sums when all tori were admissible.
#[derive(Debug)]
pub struct CoverReport {
    pub lines: Vec<CheckLine>,
    pub global: Option<GlobalReport>,
    pub outcome: CheckOutcome,
}

pub fn check_cover(cp: &CoverPresentation) -> CoverReport {
    let mut lines = Vec::new();
    let mut violation = false;
    let mut identity_failure = false;

    for rel in &cp.relators {
        let image = cp.eval_word(&rel.word);
        let ok = image.is_identity();
        if !ok {
            violation = true;
        }
        lines.push(CheckLine {
            name: format!("relator `{}` maps to the unit", rel.text),
            passed: ok,
            detail: if ok {
                String::new()
            } else {
                format!("image is {image}")
            },
        });
    }

    let mut tori = Vec::new();
    for torus in &cp.tori {
        let m = cp.eval_word(&torus.meridian);
        let l = cp.eval_word(&torus.longitude);
        let label = format!("torus `{} | {}`", torus.meridian_text, torus.longitude_text);
        match m.is_commuting(&l) {
            Ok(true) => {}
            _ => {
                violation = true;
                lines.push(CheckLine {
                    name: format!("{label}: meridian and longitude commute"),
                    passed: false,
                    detail: format!("m = {m}, l = {l}"),
                });
                continue;
            }
        }
        lines.push(CheckLine {
            name: format!("{label}: meridian and longitude commute"),
            passed: true,
            detail: String::new(),
        });
        match TorusMonodromy::normalized(&m, &l) {
            Ok(tm) => {
                lines.push(CheckLine {
                    name: format!("{label}: meridian conjugates into S_n"),
                    passed: true,
                    detail: String::new(),
                });
                tori.push((label, tm));
            }
            Err(Error::HypothesisViolation) => {
                violation = true;
                lines.push(CheckLine {
                    name: format!("{label}: meridian conjugates into S_n"),
                    passed: false,
                    detail: "the two-fold cover is branched over a component \
                             (odd sign sum on a meridian cycle)"
                        .to_string(),
                });
            }
            Err(e) => {
                violation = true;
                lines.push(CheckLine {
                    name: format!("{label}: meridian conjugates into S_n"),
                    passed: false,
                    detail: e.to_string(),
                });
            }
        }
    }

    let global = if violation {
        None
    } else {
        let monodromies: Vec<TorusMonodromy> =
            tori.iter().map(|(_, tm)| tm.clone()).collect();
        let report = branch_divisor_pairing(&monodromies);
        for ((label, _), torus_report) in tori.iter().zip(&report.per_torus) {
            let ok = torus_report.passed();
            if !ok {
                identity_failure = true;
            }
            lines.push(CheckLine {
                name: format!("{label}: per-torus identity"),
                passed: ok,
                detail: format!(
                    "integral {} vs component sum {}",
                    torus_report.lhs as u8, torus_report.rhs as u8
                ),
            });
        }
        let global_ok = !report.total_pairing && !report.total_integral;
        if !global_ok {
            identity_failure = true;
        }
        lines.push(CheckLine {
            name: "global branch-divisor pairing vanishes".to_string(),
            passed: global_ok,
            detail: format!(
                "pairing sum {}, integral sum {}",
                report.total_pairing as u8, report.total_integral as u8
            ),
        });
        Some(report)
    };

    let outcome = if violation {
        CheckOutcome::Violation
    } else if identity_failure {
        CheckOutcome::IdentityFailure
    } else {
        CheckOutcome::Pass
    };
    CoverReport {
        lines,
        global,
        outcome,
    }
}
