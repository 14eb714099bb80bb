//! Text form of Seifert data:
//!
//! ```text
//! SFS(g=<int>, s=<int>[, b=<int>]; <beta>/<alpha>, ...)
//! (<b>; <beta>/<alpha>, ...)          base sphere, closed
//! ```
//!
//! Whitespace is ignored everywhere. The output of [`format_sfs`] parses back
//! to the same value.

use std::str::FromStr;

use sfs_core::seifert::FiberInvariant;
use sfs_core::{BigInt, Sfs};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at position {pos}: {reason}")]
pub struct ParseError {
    pub pos: usize,
    pub reason: String,
}

struct Cursor {
    /// Non-whitespace characters with their byte offsets in the input.
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Self {
            chars,
            at: 0,
            end: text.len(),
        }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn fail<T>(&self, reason: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            reason: reason.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.fail(format!("expected '{c}', found '{found}'")),
                None => self.fail(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn keyword(&mut self, word: &str) -> Result<(), ParseError> {
        let start = self.at;
        for c in word.chars() {
            if !self.eat(c) {
                self.at = start;
                return self.fail(format!("expected '{word}'"));
            }
        }
        Ok(())
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.at;
        let mut s = String::new();
        if let Some(c @ ('-' | '+')) = self.peek() {
            s.push(c);
            self.at += 1;
        }
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.at += 1;
        }
        BigInt::from_str(&s).or_else(|_| {
            self.at = start;
            self.fail("expected an integer")
        })
    }

    fn count(&mut self, what: &str) -> Result<u32, ParseError> {
        let pos = self.pos();
        let v = self.integer()?;
        u32::try_from(&v).map_err(|_| ParseError {
            pos,
            reason: if v < BigInt::from(0) {
                format!("{what} must be non-negative (non-orientable bases are not supported)")
            } else {
                format!("{what} is too large")
            },
        })
    }
}

/// Parses either the `SFS(...)` form or the compact closed form.
pub fn parse_sfs(text: &str) -> Result<Sfs, ParseError> {
    let mut cur = Cursor::new(text);
    let (genus, boundary, obstruction) = if cur.peek() == Some('S') {
        cur.keyword("SFS")?;
        cur.expect('(')?;
        cur.keyword("g=")?;
        let g = cur.count("g")?;
        cur.expect(',')?;
        cur.keyword("s=")?;
        let s = cur.count("s")?;
        let mut b = None;
        let b_pos = cur.pos();
        if cur.eat(',') {
            cur.keyword("b=")?;
            b = Some((b_pos, cur.integer()?));
        }
        (g, s, b)
    } else if cur.peek() == Some('(') {
        cur.expect('(')?;
        let b_pos = cur.pos();
        let b = cur.integer()?;
        (0, 0, Some((b_pos, b)))
    } else {
        return cur.fail("expected 'SFS(' or '('");
    };

    let mut fibers: Vec<(usize, BigInt, BigInt)> = Vec::new();
    if cur.eat(';') && cur.peek() != Some(')') {
        loop {
            let pos = cur.pos();
            let beta = cur.integer()?;
            cur.expect('/')?;
            let alpha = cur.integer()?;
            FiberInvariant::new(alpha.clone(), beta.clone()).map_err(|e| ParseError {
                pos,
                reason: e.to_string(),
            })?;
            fibers.push((pos, alpha, beta));
            if !cur.eat(',') {
                break;
            }
        }
    }
    cur.expect(')')?;
    if cur.peek().is_some() {
        return cur.fail("unexpected trailing input");
    }

    match (&obstruction, boundary) {
        (None, 0) => {
            return Err(ParseError {
                pos: cur.end,
                reason: "b is required when s = 0".into(),
            })
        }
        (Some((pos, _)), s) if s > 0 => {
            return Err(ParseError {
                pos: *pos,
                reason: format!("b must be omitted when s = {s}"),
            })
        }
        _ => {}
    }
    Sfs::new(
        genus,
        boundary,
        obstruction.map(|(_, b)| b),
        fibers.into_iter().map(|(_, a, b)| (a, b)),
    )
    .map_err(|e| ParseError {
        pos: 0,
        reason: e.to_string(),
    })
}

/// Canonical `SFS(...)` text.
pub fn format_sfs(m: &Sfs) -> String {
    m.to_string()
}
