//! The line-oriented graph text format shared by directed and undirected
//! graphs, plus DOT export.
//!
//! Comment lines start with `#`, the first significant line is `n <count>`,
//! and every following line is `e <a> <b>`. Edge order in the file defines
//! edge ids, so parse(write(g)) reproduces g exactly.

use std::fmt::Write as _;

use crate::error::Error;

pub(crate) fn write_text(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n {n}");
    for (a, b) in edges {
        let _ = writeln!(out, "e {a} {b}");
    }
    out
}

pub(crate) fn parse_text(text: &str) -> Result<(usize, Vec<(usize, usize)>), Error> {
    let mut n: Option<usize> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let tag = tokens.next().expect("non-empty line has a first token");
        match (tag, n) {
            ("n", None) => {
                let count = parse_usize(tokens.next(), line, "vertex count")?;
                if count == 0 {
                    return Err(Error::Parse {
                        line,
                        message: "vertex count must be at least 1".into(),
                    });
                }
                expect_end(tokens.next(), line)?;
                n = Some(count);
            }
            ("n", Some(_)) => {
                return Err(Error::Parse {
                    line,
                    message: "duplicate 'n' line".into(),
                });
            }
            ("e", Some(count)) => {
                let a = parse_usize(tokens.next(), line, "edge tail")?;
                let b = parse_usize(tokens.next(), line, "edge head")?;
                expect_end(tokens.next(), line)?;
                if a >= count || b >= count {
                    return Err(Error::Parse {
                        line,
                        message: format!("edge ({a}, {b}) out of range for {count} vertices"),
                    });
                }
                pairs.push((a, b));
            }
            ("e", None) => {
                return Err(Error::Parse {
                    line,
                    message: "edge line before the 'n' line".into(),
                });
            }
            (other, _) => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown line tag '{other}'"),
                });
            }
        }
    }
    match n {
        Some(count) => Ok((count, pairs)),
        None => Err(Error::Parse {
            line: text.lines().count() + 1,
            message: "missing 'n' line".into(),
        }),
    }
}

fn parse_usize(token: Option<&str>, line: usize, what: &str) -> Result<usize, Error> {
    let token = token.ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("{what} '{token}' is not a nonnegative integer"),
    })
}

fn expect_end(token: Option<&str>, line: usize) -> Result<(), Error> {
    match token {
        None => Ok(()),
        Some(extra) => Err(Error::Parse {
            line,
            message: format!("unexpected trailing token '{extra}'"),
        }),
    }
}

pub(crate) fn write_dot(
    kind: &str,
    arrow: &str,
    n: usize,
    edges: impl Iterator<Item = (usize, usize)>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{kind} {{");
    for v in 0..n {
        let _ = writeln!(out, "  {v};");
    }
    for (a, b) in edges {
        let _ = writeln!(out, "  {a} {arrow} {b};");
    }
    out.push_str("}\n");
    out
}
