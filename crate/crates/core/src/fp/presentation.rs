use std::fmt;

use super::word::{free_reduce, Word};
use super::{FpError, Result};

/// A generating set for a peripheral subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeripheralMark {
    pub words: Vec<Word>,
    /// The marked subgroup has the form `H × ℤ`; taking a direct product with
    /// another `ℤ` extends it by the new generator.
    pub product_with_z: bool,
}

impl PeripheralMark {
    pub fn new(words: Vec<Word>) -> Self {
        Self {
            words,
            product_with_z: true,
        }
    }
}

/// A finite presentation `⟨X | R⟩` with marked peripheral subgroups.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    marks: Vec<PeripheralMark>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        Self::with_marks(generators, relators, Vec::new())
    }

    pub fn with_marks(generators: Vec<String>, relators: Vec<Word>, marks: Vec<PeripheralMark>) -> Result<Self> {
        let n = generators.len();
        for (i, name) in generators.iter().enumerate() {
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(FpError::BadName(name.clone()));
            }
            if name.chars().all(|c| c.is_ascii_digit()) || generators[..i].contains(name) {
                return Err(FpError::BadName(name.clone()));
            }
        }
        let in_range = |w: &Word| w.max_generator().is_none_or(|g| g < n);
        if !relators.iter().all(in_range) || !marks.iter().flat_map(|m| &m.words).all(in_range) {
            return Err(FpError::UnknownGenerator);
        }
        Ok(Self {
            generators,
            relators,
            marks,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn peripheral_marks(&self) -> &[PeripheralMark] {
        &self.marks
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Free presentation on the given generator names.
    pub fn free(names: &[&str]) -> Self {
        Self::new(names.iter().map(|s| s.to_string()).collect(), Vec::new()).expect("valid names")
    }

    /// Parses the text format produced by [`fmt::Display`]:
    ///
    /// ```text
    /// < x1, x2, y1, t | x1 x1 x1 t, x1 x2 y1 >
    /// peripheral 1: {y1, t}
    /// ```
    ///
    /// Words are whitespace-separated generator names, each optionally
    /// followed by `^<int>`; `1` is the empty word.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let open = text.find('<').ok_or_else(|| parse_err(0, "expected '<'"))?;
        if !text[..open].trim().is_empty() {
            return Err(parse_err(0, "unexpected text before '<'"));
        }
        let close = text.find('>').ok_or_else(|| parse_err(text.len(), "expected '>'"))?;
        let body = &text[open + 1..close];
        let bar = body.find('|');
        let (gens_text, rels_text) = match bar {
            Some(b) => (&body[..b], &body[b + 1..]),
            None => (body, ""),
        };
        let generators: Vec<String> = gens_text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect();
        let rel_offset = open + 1 + bar.map_or(body.len(), |b| b + 1);
        let mut relators = Vec::new();
        let mut offset = rel_offset;
        for piece in rels_text.split(',') {
            if !piece.trim().is_empty() {
                relators.push(parse_word(piece, &generators, offset)?);
            }
            offset += piece.len() + 1;
        }
        let mut marks = Vec::new();
        let mut pos = close + 1;
        for line in text[close + 1..].lines() {
            let trimmed = line.trim();
            if !trimmed.is_empty() {
                marks.push(parse_mark(trimmed, &generators, pos)?);
            }
            pos += line.len() + 1;
        }
        Self::with_marks(generators, relators, marks)
    }

    /// Renames generator `index`; fails if the new name is invalid or taken.
    pub fn rename_generator(mut self, index: usize, name: &str) -> Result<Self> {
        if index >= self.generators.len() {
            return Err(FpError::UnknownGenerator);
        }
        self.generators[index] = name.to_string();
        Self::with_marks(self.generators, self.relators, self.marks)
    }

    /// Drops relators that freely reduce to the empty word.
    pub(crate) fn without_trivial_relators(mut self) -> Self {
        self.relators.retain(|r| !free_reduce(r).is_empty());
        self
    }
}

fn parse_err(pos: usize, reason: &str) -> FpError {
    FpError::Parse {
        pos,
        reason: reason.to_string(),
    }
}

fn parse_mark(line: &str, gens: &[String], pos: usize) -> Result<PeripheralMark> {
    let rest = line
        .strip_prefix("peripheral")
        .ok_or_else(|| parse_err(pos, "expected 'peripheral <j>: {...}'"))?;
    let colon = rest.find(':').ok_or_else(|| parse_err(pos, "expected ':'"))?;
    let inner = rest[colon + 1..].trim();
    let inner = inner
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| parse_err(pos, "expected '{...}'"))?;
    let words = inner
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| parse_word(p, gens, pos))
        .collect::<Result<Vec<_>>>()?;
    Ok(PeripheralMark::new(words))
}

/// Parses one word over `gens`; `offset` is used for error positions.
pub fn parse_word(text: &str, gens: &[String], offset: usize) -> Result<Word> {
    let mut word = Word::empty();
    let mut pos = offset;
    for token in text.split_whitespace() {
        let at = pos + text[pos - offset..].find(token).unwrap_or(0);
        pos = at + token.len();
        if token == "1" {
            continue;
        }
        let (name, exp) = match token.split_once('^') {
            Some((n, e)) => {
                let e: i64 = e
                    .parse()
                    .map_err(|_| parse_err(at, &format!("bad exponent in '{token}'")))?;
                (n, e)
            }
            None => (token, 1),
        };
        let g = gens
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| parse_err(at, &format!("unknown generator '{name}'")))?;
        word.extend(&Word::gen_pow(g, exp));
    }
    Ok(word)
}

/// `< g1, g2 | w1, w2 >` followed by one `peripheral j: {…}` line per mark.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {}", self.generators.join(", "))?;
        f.write_str(" |")?;
        for (i, r) in self.relators.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { ", " })?;
            write!(f, "{}", r.display_with(&self.generators))?;
        }
        f.write_str(" >")?;
        for (j, mark) in self.marks.iter().enumerate() {
            write!(f, "\nperipheral {}: {{", j + 1)?;
            for (i, w) in mark.words.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", w.display_with(&self.generators))?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}
