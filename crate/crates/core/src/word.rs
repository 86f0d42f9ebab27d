use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite word over the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidWord("letters must be positive".into()));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Every word over `{1..k}` of length exactly `len`, in lexicographic order.
    pub fn all(k: usize, len: usize) -> Vec<Word> {
        let mut out = vec![Word(vec![])];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (1..=k).map(move |a| {
                        let mut v = w.0.clone();
                        v.push(a);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl From<Word> for Vec<usize> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl fmt::Display for Word {
    /// Digits are concatenated when every letter is below 10, otherwise comma separated.
    /// A lone letter of two or more digits keeps a trailing comma so it reads back as one letter.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a < 10) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else if self.0.len() == 1 {
            write!(f, "{},", self.0[0])
        } else {
            let s: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `5433124235`, `5,4,3` or `5 4 3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters: Vec<usize> = if s.contains(',') || s.contains(char::is_whitespace) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad letter {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Word::new(letters)
    }
}

#[macro_export]
macro_rules! word {
    ($s:expr) => {
        $s.parse::<$crate::Word>().expect("valid word literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse() {
        assert_eq!(word!("132").letters(), &[1, 3, 2]);
        assert_eq!(word!("1, 12 ,3").letters(), &[1, 12, 3]);
        assert!("102".parse::<Word>().is_err());
        assert!("1a".parse::<Word>().is_err());
        assert_eq!(word!("1,12").to_string(), "1,12");
        assert_eq!(word!("5433").to_string(), "5433");
    }

    #[test]
    fn enumerate() {
        assert_eq!(Word::all(3, 2).len(), 9);
        assert_eq!(Word::all(2, 0), vec![Word::default()]);
    }
}
