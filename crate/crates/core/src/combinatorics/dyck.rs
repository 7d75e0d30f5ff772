use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{out_of_range, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DyckLetter {
    Minus,
    Zero,
    Plus,
}

/// A word over `{-, 0, +}` that is a concatenation of Dyck words and runs of
/// `0`s. Equivalently: reading left to right with `+` as an up-step and `-`
/// as a down-step, the height never goes negative, `0`s occur only at
/// height zero, and the word ends at height zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct DispersedDyckWord {
    letters: Vec<DyckLetter>,
}

impl DispersedDyckWord {
    pub fn new(letters: Vec<DyckLetter>) -> Result<Self> {
        if !Self::is_valid(&letters) {
            return Err(Error::Parse {
                what: "dispersed Dyck word",
                input: letters.iter().map(|l| l.symbol()).collect(),
            });
        }
        Ok(DispersedDyckWord { letters })
    }

    pub fn is_valid(letters: &[DyckLetter]) -> bool {
        let mut height = 0usize;
        for l in letters {
            match l {
                DyckLetter::Plus => height += 1,
                DyckLetter::Minus => {
                    if height == 0 {
                        return false;
                    }
                    height -= 1;
                }
                DyckLetter::Zero => {
                    if height != 0 {
                        return false;
                    }
                }
            }
        }
        height == 0
    }

    pub fn letters(&self) -> &[DyckLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `|w|`, the number of `+`s.
    pub fn plus_count(&self) -> usize {
        self.letters.iter().filter(|&&l| l == DyckLetter::Plus).count()
    }
}

impl DyckLetter {
    fn symbol(self) -> char {
        match self {
            DyckLetter::Minus => '-',
            DyckLetter::Zero => '0',
            DyckLetter::Plus => '+',
        }
    }
}

impl FromStr for DispersedDyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '+' => Ok(DyckLetter::Plus),
                '-' => Ok(DyckLetter::Minus),
                '0' => Ok(DyckLetter::Zero),
                _ => Err(Error::Parse {
                    what: "dispersed Dyck word",
                    input: s.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        DispersedDyckWord::new(letters)
    }
}

impl fmt::Display for DispersedDyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

pub const MAX_DD_LEN: usize = 16;

/// Lazy enumeration of `DD(m)` in lexicographic order with `- < 0 < +`.
#[derive(Debug, Clone)]
pub struct DispersedDyckWords {
    m: usize,
    letters: Vec<DyckLetter>,
    /// `heights[i]` is the height before position `i`.
    heights: Vec<usize>,
    started: bool,
    done: bool,
}

impl DispersedDyckWords {
    pub fn new(m: usize) -> Self {
        let mut it = DispersedDyckWords {
            m,
            letters: Vec::with_capacity(m),
            heights: vec![0; m + 1],
            started: false,
            done: false,
        };
        it.complete_from(0);
        it
    }

    fn allowed(&self, i: usize, letter: DyckLetter) -> bool {
        let h = self.heights[i];
        let remaining_after = self.m - i - 1;
        match letter {
            DyckLetter::Minus => h > 0,
            DyckLetter::Zero => h == 0,
            DyckLetter::Plus => h < remaining_after,
        }
    }

    fn set(&mut self, i: usize, letter: DyckLetter) {
        self.letters.truncate(i);
        self.letters.push(letter);
        let h = self.heights[i];
        self.heights[i + 1] = match letter {
            DyckLetter::Minus => h - 1,
            DyckLetter::Zero => h,
            DyckLetter::Plus => h + 1,
        };
    }

    /// Smallest completion of the prefix of length `i`: close with `-`s,
    /// then pad with `0`s.
    fn complete_from(&mut self, i: usize) {
        for j in i..self.m {
            let letter = if self.heights[j] > 0 {
                DyckLetter::Minus
            } else {
                DyckLetter::Zero
            };
            self.set(j, letter);
        }
    }

    fn advance(&mut self) -> bool {
        for i in (0..self.m).rev() {
            let candidates: &[DyckLetter] = match self.letters[i] {
                DyckLetter::Minus => &[DyckLetter::Zero, DyckLetter::Plus],
                DyckLetter::Zero => &[DyckLetter::Plus],
                DyckLetter::Plus => &[],
            };
            if let Some(&l) = candidates.iter().find(|&&l| self.allowed(i, l)) {
                self.set(i, l);
                self.complete_from(i + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for DispersedDyckWords {
    type Item = DispersedDyckWord;

    fn next(&mut self) -> Option<DispersedDyckWord> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(DispersedDyckWord {
            letters: self.letters.clone(),
        })
    }
}

/// All of `DD(m)`; `|DD(m)| = C(m, ⌊m/2⌋)`.
pub fn enumerate_dd(m: usize) -> Result<Vec<DispersedDyckWord>> {
    if m > MAX_DD_LEN {
        return Err(out_of_range("m", format!("must be <= {MAX_DD_LEN}")));
    }
    Ok(DispersedDyckWords::new(m).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn central_binomial(m: u64) -> u64 {
        let k = m / 2;
        (0..k).fold(1u64, |acc, i| acc * (m - i) / (i + 1))
    }

    #[test]
    fn small_cases() {
        let dd0 = enumerate_dd(0).unwrap();
        assert_eq!(dd0, vec![DispersedDyckWord::default()]);
        let dd3: Vec<String> = enumerate_dd(3).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(dd3, vec!["000", "0+-", "+-0"]);
    }

    #[test]
    fn membership() {
        assert!("+-0++--00".parse::<DispersedDyckWord>().is_ok());
        assert!("000".parse::<DispersedDyckWord>().is_ok());
        assert!("+-+-".parse::<DispersedDyckWord>().is_ok());
        assert!("+0-".parse::<DispersedDyckWord>().is_err());
        assert!("-+".parse::<DispersedDyckWord>().is_err());
        assert!("+".parse::<DispersedDyckWord>().is_err());
    }

    #[test]
    fn counts_are_central_binomials() {
        for m in 0..=14 {
            assert_eq!(
                enumerate_dd(m).unwrap().len() as u64,
                central_binomial(m as u64),
                "m={m}"
            );
        }
        assert!(enumerate_dd(17).is_err());
    }

    #[test]
    fn enumeration_is_exhaustive_and_sorted() {
        let letters = [DyckLetter::Minus, DyckLetter::Zero, DyckLetter::Plus];
        for m in 0..=7u32 {
            let mut brute = Vec::new();
            for code in 0..3usize.pow(m) {
                let mut c = code;
                let w: Vec<DyckLetter> = (0..m)
                    .map(|_| {
                        let l = letters[c % 3];
                        c /= 3;
                        l
                    })
                    .rev()
                    .collect();
                if DispersedDyckWord::is_valid(&w) {
                    brute.push(DispersedDyckWord { letters: w });
                }
            }
            brute.sort();
            assert_eq!(enumerate_dd(m as usize).unwrap(), brute, "m={m}");
        }
    }
}
