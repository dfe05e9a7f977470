//! Oriented boundary letters and words.

use serde_json::Value;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Up,
    Down,
}

impl Letter {
    pub fn flip(self) -> Letter {
        match self {
            Letter::Up => Letter::Down,
            Letter::Down => Letter::Up,
        }
    }

    pub fn char(self) -> char {
        match self {
            Letter::Up => 'u',
            Letter::Down => 'd',
        }
    }
}

/// A word of letters, stored left to right. Strand positions used by
/// slices are 1-based counting from the right: position p is the letter
/// at index `len - p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn up(n: usize) -> Word {
        Word(vec![Letter::Up; n])
    }

    pub fn down(n: usize) -> Word {
        Word(vec![Letter::Down; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, idx: usize) -> Letter {
        self.0[idx]
    }

    pub fn count_up(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::Up).count()
    }

    pub fn count_down(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::Down).count()
    }

    /// Net upward flow; equal words can be joined by strands only when
    /// this matches.
    pub fn flow(&self) -> i64 {
        self.count_up() as i64 - self.count_down() as i64
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn flipped(&self) -> Word {
        Word(self.0.iter().map(|l| l.flip()).collect())
    }

    pub fn reversed_flipped(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.flip()).collect())
    }

    /// "uudd"; "-" for the empty word.
    pub fn parse(s: &str) -> Result<Word, String> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Word::empty());
        }
        let mut v = Vec::new();
        for ch in s.chars() {
            match ch {
                'u' | 'U' => v.push(Letter::Up),
                'd' | 'D' => v.push(Letter::Down),
                ' ' => {}
                _ => return Err(format!("bad letter {:?} in word {:?}", ch, s)),
            }
        }
        Ok(Word(v))
    }

    pub fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        for l in &self.0 {
            write!(f, "{}", l.char())?;
        }
        Ok(())
    }
}
