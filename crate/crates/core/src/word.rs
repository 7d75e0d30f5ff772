//! Words over a finite alphabet, sign words and exact-rational helpers.
//!
//! Colors are 1-based: a word over `[q]` uses symbols `1..=q`. For the
//! two-row encoding of 4-colorings the colors `1, 2, 3, 4` are identified
//! with the sign columns `(-,-), (-,+), (+,-), (+,+)`; the top row is `y`,
//! the bottom row `z`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite word over the alphabet `[q] = {1, …, q}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    q: u8,
    symbols: Vec<u8>,
}

impl Word {
    pub fn new(q: u8, symbols: Vec<u8>) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q as u32));
        }
        for (position, &s) in symbols.iter().enumerate() {
            if s == 0 || s > q {
                return Err(Error::InvalidSymbol {
                    symbol: s as u32,
                    position: position + 1,
                    q,
                });
            }
        }
        Ok(Word { q, symbols })
    }

    pub fn empty(q: u8) -> Result<Self> {
        Word::new(q, Vec::new())
    }

    /// Parses a comma-separated list of 1-based colors, e.g. `"1,2,1"`.
    /// The empty string is the empty word.
    pub fn parse(q: u8, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Word::empty(q);
        }
        let mut symbols = Vec::new();
        for (position, part) in text.split(',').enumerate() {
            let value: u32 = part.trim().parse().map_err(|_| Error::Parse {
                what: "word",
                input: text.to_string(),
            })?;
            if value == 0 || value > q as u32 {
                return Err(Error::InvalidSymbol {
                    symbol: value,
                    position: position + 1,
                    q,
                });
            }
            symbols.push(value as u8);
        }
        Ok(Word { q, symbols })
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// No two adjacent symbols are equal. Words of length 0 and 1 are proper.
    pub fn is_proper(&self) -> bool {
        is_proper(&self.symbols)
    }

    /// The word with its `i`-th symbol (1-based) deleted.
    pub fn remove(&self, i: usize) -> Result<Word> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        let mut symbols = self.symbols.clone();
        symbols.remove(i - 1);
        Ok(Word { q: self.q, symbols })
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Word {
            q: self.q.max(other.q),
            symbols,
        }
    }

    pub fn reversed(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word { q: self.q, symbols }
    }

    /// Applies a color permutation given as a table: color `c` becomes
    /// `perm[c - 1]`.
    pub fn relabeled(&self, perm: &[u8]) -> Result<Word> {
        if perm.len() != self.q as usize {
            return Err(Error::LengthMismatch {
                left: perm.len(),
                right: self.q as usize,
            });
        }
        Word::new(
            self.q,
            self.symbols.iter().map(|&s| perm[s as usize - 1]).collect(),
        )
    }

    /// All words of length `n` over `[q]`, in lexicographic order.
    pub fn all(q: u8, n: usize) -> AllWords {
        AllWords::new(q, n)
    }

    /// Splits a word over `[4]` into its sign rows `(y, z)`.
    pub fn to_sign_rows(&self) -> Result<(SignWord, SignWord)> {
        if self.q != 4 {
            return Err(Error::OutOfRange {
                name: "q",
                reason: format!("sign rows need q = 4, got {}", self.q),
            });
        }
        let y = self
            .symbols
            .iter()
            .map(|&c| if c <= 2 { Sign::Minus } else { Sign::Plus })
            .collect();
        let z = self
            .symbols
            .iter()
            .map(|&c| if c % 2 == 1 { Sign::Minus } else { Sign::Plus })
            .collect();
        Ok((SignWord::new(y), SignWord::new(z)))
    }

    /// Inverse of [`Word::to_sign_rows`].
    pub fn from_sign_rows(y: &SignWord, z: &SignWord) -> Result<Word> {
        if y.len() != z.len() {
            return Err(Error::LengthMismatch {
                left: y.len(),
                right: z.len(),
            });
        }
        let symbols = y
            .signs()
            .iter()
            .zip(z.signs())
            .map(|(&a, &b)| {
                let hi = if a == Sign::Plus { 2 } else { 0 };
                let lo = if b == Sign::Plus { 1 } else { 0 };
                1 + hi + lo
            })
            .collect();
        Ok(Word { q: 4, symbols })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub fn is_proper(symbols: &[u8]) -> bool {
    symbols.windows(2).all(|w| w[0] != w[1])
}

/// Odometer over `[q]^n`.
#[derive(Debug, Clone)]
pub struct AllWords {
    q: u8,
    current: Option<Vec<u8>>,
}

impl AllWords {
    fn new(q: u8, n: usize) -> Self {
        AllWords {
            q,
            current: Some(vec![1; n]),
        }
    }
}

impl Iterator for AllWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let out = self.current.clone()?;
        let mut next = out.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.q {
                next[i] += 1;
                self.current = Some(next);
                break;
            }
            next[i] = 1;
        }
        Some(Word {
            q: self.q,
            symbols: out,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    /// `(-1)^k`.
    pub fn parity(k: usize) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

/// A word over `{-, +}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignWord {
    signs: Vec<Sign>,
}

impl SignWord {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignWord { signs }
    }

    /// Builds a word whose runs have the given lengths, starting with
    /// `first` and alternating. Zero lengths are allowed; they make the
    /// neighbouring runs coalesce.
    pub fn from_runs(first: Sign, lengths: &[usize]) -> Self {
        let mut signs = Vec::with_capacity(lengths.iter().sum());
        let mut s = first;
        for &k in lengths {
            signs.extend(std::iter::repeat_n(s, k));
            s = s.flip();
        }
        SignWord { signs }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// Lengths of the maximal constant blocks, left to right.
    pub fn runs(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        let mut prev = None;
        for &s in &self.signs {
            if Some(s) == prev {
                *out.last_mut().expect("run started") += 1;
            } else {
                out.push(1);
                prev = Some(s);
            }
        }
        out
    }

    /// All `2^n` sign words of length `n`, `-` before `+` lexicographically.
    pub fn all(n: usize) -> impl Iterator<Item = SignWord> {
        (0u64..(1u64 << n)).map(move |bits| {
            SignWord::new(
                (0..n)
                    .map(|i| {
                        if bits >> (n - 1 - i) & 1 == 1 {
                            Sign::Plus
                        } else {
                            Sign::Minus
                        }
                    })
                    .collect(),
            )
        })
    }
}

pub fn runs(y: &SignWord) -> Vec<usize> {
    y.runs()
}

impl FromStr for SignWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => Err(Error::Parse {
                    what: "sign word",
                    input: s.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignWord::new)
    }
}

impl fmt::Display for SignWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Always `numerator/denominator`, even for integers.
pub fn fmt_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `a/b` or a bare integer `a`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let err = || Error::Parse {
        what: "rational",
        input: text.to_string(),
    };
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(n, d))
}
