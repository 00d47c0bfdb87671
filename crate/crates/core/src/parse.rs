//! Text syntax for groups and representations.
//!
//! ```text
//! rep     = group { weight-sep weight }
//! group   = term { ("*" | "×" | "·") term { weight } }
//! term    = dynkin | "SU" n | "Sp" n | "Spin" n | "SO" n | "U" n | "T" n
//! dynkin  = ("A" | "B" | "C" | "D" | "E" | "F" | "G") ["_"] n
//! n       = digits | "(" digits ")"
//! weight  = "[" int { "," int } "]"
//! weight-sep = "x" | "⊗" | whitespace
//! ```
//!
//! Weights are matched to factors in order of appearance, so they may follow
//! each term (`Sp1 [1] * Spin11 [0,0,0,0,1]`) or all come at the end
//! (`Sp1*Spin11 [1]x[0,0,0,0,1]`). A torus coordinate takes a one-entry
//! weight holding its (possibly negative) character. Low-rank names expand:
//! SO2 = T1, SO3 = A1, SO4 = A1 × A1, SO6 = A3, U(n) = A(n-1) × T1.

use std::fmt;

use thiserror::Error;

use crate::lie::{Family, GroupSpec, HighestWeight, SimpleType, TypeLabel, WeightMap};
use crate::repcalc::{IrrepSpec, RepError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{}", render(.message, .input, *.start, *.end))]
    Syntax {
        message: String,
        input: String,
        start: usize,
        end: usize,
    },
    #[error(transparent)]
    Domain(#[from] RepError),
}

fn render(message: &str, input: &str, start: usize, end: usize) -> String {
    let pad = input[..start].chars().count();
    let width = input[start..end].chars().count().max(1);
    format!(
        "{message}\n  {input}\n  {}{}",
        " ".repeat(pad),
        "^".repeat(width)
    )
}

#[derive(Debug, Clone, Copy)]
enum Slot {
    Simple(SimpleType, WeightMap),
    Torus,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Name(String),
    Times,
    WeightSep,
    Weight(Vec<i64>),
}

struct Lexer<'a> {
    input: &'a str,
    toks: Vec<(Tok, usize, usize)>,
}

impl<'a> Lexer<'a> {
    fn err(&self, message: impl Into<String>, start: usize, end: usize) -> ParseError {
        ParseError::Syntax {
            message: message.into(),
            input: self.input.to_string(),
            start,
            end,
        }
    }

    fn run(input: &'a str) -> Result<Vec<(Tok, usize, usize)>, ParseError> {
        let mut lx = Lexer {
            input,
            toks: Vec::new(),
        };
        let mut it = input.char_indices().peekable();
        while let Some(&(i, c)) = it.peek() {
            match c {
                c if c.is_whitespace() => {
                    it.next();
                }
                '*' | '×' | '·' => {
                    it.next();
                    lx.toks.push((Tok::Times, i, i + c.len_utf8()));
                }
                'x' | '⊗' => {
                    it.next();
                    lx.toks.push((Tok::WeightSep, i, i + c.len_utf8()));
                }
                '[' => {
                    it.next();
                    let mut end = None;
                    for (j, d) in it.by_ref() {
                        if d == ']' {
                            end = Some(j);
                            break;
                        }
                    }
                    let Some(j) = end else {
                        return Err(lx.err("unclosed `[`", i, input.len()));
                    };
                    let body = &input[i + 1..j];
                    let mut coords = Vec::new();
                    if !body.trim().is_empty() {
                        for part in body.split(',') {
                            let v = part.trim().parse::<i64>().map_err(|_| {
                                lx.err(format!("`{}` is not an integer", part.trim()), i, j + 1)
                            })?;
                            coords.push(v);
                        }
                    }
                    lx.toks.push((Tok::Weight(coords), i, j + 1));
                }
                c if c.is_ascii_uppercase() => {
                    let mut end = i;
                    let mut depth = 0;
                    while let Some(&(j, d)) = it.peek() {
                        let ok = d.is_ascii_alphanumeric()
                            || d == '_'
                            || (d == '(' && depth == 0)
                            || (d == ')' && depth == 1);
                        if !ok {
                            break;
                        }
                        match d {
                            '(' => depth += 1,
                            ')' => depth -= 1,
                            _ => {}
                        }
                        end = j + d.len_utf8();
                        it.next();
                        if d == ')' {
                            break;
                        }
                    }
                    lx.toks.push((Tok::Name(input[i..end].to_string()), i, end));
                }
                _ => {
                    return Err(lx.err(format!("unexpected character `{c}`"), i, i + c.len_utf8()));
                }
            }
        }
        Ok(lx.toks)
    }
}

/// Expansion of one group name into factor slots plus a display name.
fn expand(name: &str) -> Result<(Vec<Slot>, String), String> {
    let head: String = name
        .chars()
        .take_while(|c| c.is_ascii_alphabetic())
        .collect();
    let tail = name[head.len()..].trim_start_matches('_');
    let digits = tail.trim_start_matches('(').trim_end_matches(')');
    let n: u32 = digits
        .parse()
        .map_err(|_| format!("`{name}` needs a numeric size"))?;
    let simple = |f: Family, r: u32| -> Result<Slot, String> {
        let (t, m) = TypeLabel { family: f, rank: r }
            .resolve()
            .map_err(|e| e.to_string())?;
        Ok(Slot::Simple(t, m))
    };
    let slots = match head.as_str() {
        "SU" if n >= 2 => vec![simple(Family::A, n - 1)?],
        "Sp" if n >= 1 => vec![simple(Family::C, n)?],
        "U" if n == 1 => vec![Slot::Torus],
        "U" if n >= 2 => vec![simple(Family::A, n - 1)?, Slot::Torus],
        "T" if n >= 1 => vec![Slot::Torus; n as usize],
        "SO" | "Spin" => match n {
            2 => vec![Slot::Torus],
            3 => vec![simple(Family::A, 1)?],
            4 => vec![simple(Family::A, 1)?, simple(Family::A, 1)?],
            n if n >= 5 && n % 2 == 1 => vec![simple(Family::B, n / 2)?],
            n if n >= 6 => vec![simple(Family::D, n / 2)?],
            _ => {
                return Err(format!(
                    "{head}({n}) is not a connected compact Lie group here"
                ))
            }
        },
        "SU" | "Sp" | "U" | "T" => return Err(format!("{head}({n}) is out of range")),
        h if h.len() == 1 => {
            let label: TypeLabel = name.parse()?;
            let (t, m) = label.resolve().map_err(|e| e.to_string())?;
            return Ok((vec![Slot::Simple(t, m)], t.to_string()));
        }
        _ => return Err(format!("unknown group name `{name}`")),
    };
    let display = match head.as_str() {
        "T" => format!("T{n}"),
        _ => format!("{head}({n})"),
    };
    Ok((slots, display))
}

struct Parsed {
    slots: Vec<Slot>,
    names: Vec<String>,
    weights: Vec<(Vec<i64>, usize, usize)>,
}

fn parse_terms(input: &str) -> Result<Parsed, ParseError> {
    let toks = Lexer::run(input)?;
    let err = |message: String, start: usize, end: usize| ParseError::Syntax {
        message,
        input: input.to_string(),
        start,
        end,
    };
    let mut out = Parsed {
        slots: Vec::new(),
        names: Vec::new(),
        weights: Vec::new(),
    };
    let mut expect_term = true;
    for (tok, s, e) in toks {
        match tok {
            Tok::Name(name) if expect_term => {
                let (slots, display) = expand(&name).map_err(|m| err(m, s, e))?;
                out.slots.extend(slots);
                out.names.push(display);
                expect_term = false;
            }
            Tok::Name(name) => {
                return Err(err(format!("expected `*` before `{name}`"), s, e));
            }
            Tok::Times if !expect_term => expect_term = true,
            Tok::Weight(w) if !expect_term => out.weights.push((w, s, e)),
            Tok::WeightSep if !expect_term && !out.weights.is_empty() => {}
            _ => return Err(err("unexpected token".to_string(), s, e)),
        }
    }
    if expect_term {
        let at = input.len();
        return Err(err("expected a group name".to_string(), at, at));
    }
    Ok(out)
}

fn group_of(p: &Parsed) -> GroupSpec {
    let mut simple = Vec::new();
    let mut torus = 0;
    for slot in &p.slots {
        match slot {
            Slot::Simple(t, _) => simple.push(*t),
            Slot::Torus => torus += 1,
        }
    }
    GroupSpec::new(simple, torus).named(p.names.join("×"))
}

/// A group with no weights attached.
pub fn parse_group(input: &str) -> Result<GroupSpec, ParseError> {
    let p = parse_terms(input)?;
    if let Some((_, s, e)) = p.weights.first() {
        return Err(ParseError::Syntax {
            message: "a group was expected, not a representation".into(),
            input: input.to_string(),
            start: *s,
            end: *e,
        });
    }
    Ok(group_of(&p))
}

/// A group together with one weight per factor.
pub fn parse_rep(input: &str) -> Result<IrrepSpec, ParseError> {
    let p = parse_terms(input)?;
    let err = |message: String, start: usize, end: usize| ParseError::Syntax {
        message,
        input: input.to_string(),
        start,
        end,
    };
    if p.weights.len() != p.slots.len() {
        let (s, e) = p
            .weights
            .get(p.slots.len())
            .map(|w| (w.1, w.2))
            .unwrap_or((input.len(), input.len()));
        return Err(err(
            format!(
                "{} factor(s) need {} weight(s), found {}",
                p.names.join("×"),
                p.slots.len(),
                p.weights.len()
            ),
            s,
            e,
        ));
    }
    let mut weights = Vec::new();
    let mut charges = Vec::new();
    for (slot, (w, s, e)) in p.slots.iter().zip(&p.weights) {
        match slot {
            Slot::Torus => {
                if w.len() != 1 {
                    return Err(err("a torus character is a single integer".into(), *s, *e));
                }
                charges.push(w[0]);
            }
            Slot::Simple(t, map) => {
                let coords: Vec<u32> = w
                    .iter()
                    .map(|&c| u32::try_from(c))
                    .collect::<Result<_, _>>()
                    .map_err(|_| err("highest weights are non-negative".into(), *s, *e))?;
                if coords.len() != t.n() {
                    return Err(ParseError::Domain(RepError::Lie(
                        crate::lie::LieError::WeightLength {
                            ty: *t,
                            weight: coords.clone(),
                            len: coords.len(),
                            expected: t.n(),
                        },
                    )));
                }
                weights.push(HighestWeight(map.apply(&coords)));
            }
        }
    }
    Ok(IrrepSpec::new(group_of(&p), weights, charges)?)
}

impl fmt::Display for IrrepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        parts.extend(self.torus_charges.iter().map(|c| format!("[{c}]")));
        let factors: Vec<String> = self
            .group
            .simple_factors
            .iter()
            .map(|t| t.to_string())
            .chain((0..self.group.torus_rank).map(|_| "T1".to_string()))
            .collect();
        write!(f, "{} {}", factors.join("*"), parts.join("x"))
    }
}
