//! Constraint DSL for restricted words.
//!
//! Grammar (whitespace ignored everywhere):
//!
//! ```text
//! spec   := clause (";" clause)*
//! clause := "alphabet=" INT
//!         | "forbid="   WORD ("," WORD)*
//!         | "evenrun="  INT  ("," INT)*
//! ```
//!
//! `WORD` is a nonempty digit string over the alphabet. The `alphabet`
//! clause is mandatory and must come first. Repeated `forbid`/`evenrun`
//! clauses merge their entries.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A family of words over `{0, ..., alphabet_size - 1}`: every forbidden
/// factor must be absent as a contiguous substring, and every maximal run
/// of an even-run letter must have even length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordConstraint {
    alphabet_size: u8,
    forbidden_factors: BTreeSet<Vec<u8>>,
    even_run_letters: BTreeSet<u8>,
}

impl WordConstraint {
    /// Validates the alphabet bound (1..=10, letters are single digits)
    /// and that every referenced letter is inside the alphabet.
    pub fn new(
        alphabet_size: u8,
        forbidden_factors: impl IntoIterator<Item = Vec<u8>>,
        even_run_letters: impl IntoIterator<Item = u8>,
    ) -> Result<Self> {
        if !(1..=10).contains(&alphabet_size) {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("alphabet size must be in 1..=10, got {alphabet_size}"),
            });
        }
        let mut factors = BTreeSet::new();
        for factor in forbidden_factors {
            if factor.is_empty() {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "forbidden factor must be nonempty".into(),
                });
            }
            for &letter in &factor {
                if letter >= alphabet_size {
                    return Err(Error::LetterOutOfRange {
                        letter: letter as u32,
                        sigma: alphabet_size,
                    });
                }
            }
            factors.insert(factor);
        }
        let mut letters = BTreeSet::new();
        for letter in even_run_letters {
            if letter >= alphabet_size {
                return Err(Error::LetterOutOfRange {
                    letter: letter as u32,
                    sigma: alphabet_size,
                });
            }
            letters.insert(letter);
        }
        Ok(WordConstraint {
            alphabet_size,
            forbidden_factors: factors,
            even_run_letters: letters,
        })
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet_size
    }

    pub fn forbidden_factors(&self) -> impl Iterator<Item = &[u8]> {
        self.forbidden_factors.iter().map(Vec::as_slice)
    }

    pub fn even_run_letters(&self) -> impl Iterator<Item = u8> + '_ {
        self.even_run_letters.iter().copied()
    }

    pub fn has_factors(&self) -> bool {
        !self.forbidden_factors.is_empty()
    }

    pub fn has_even_runs(&self) -> bool {
        !self.even_run_letters.is_empty()
    }

    /// True when `word` satisfies the constraint, decided directly from
    /// the definition: substring search over the forbidden set and a
    /// run-length scan. This is the brute-force side of the oracle pair;
    /// it never consults the counting automaton.
    pub fn accepts(&self, word: &[u8]) -> bool {
        for factor in &self.forbidden_factors {
            if factor.len() <= word.len()
                && word.windows(factor.len()).any(|w| w == factor.as_slice())
            {
                return false;
            }
        }
        let mut i = 0;
        while i < word.len() {
            let letter = word[i];
            let mut run = 1;
            while i + run < word.len() && word[i + run] == letter {
                run += 1;
            }
            if self.even_run_letters.contains(&letter) && run % 2 == 1 {
                return false;
            }
            i += run;
        }
        true
    }
}

/// Canonical form: mandatory alphabet clause first, then sorted factor and
/// letter lists. Parsing the rendered text reproduces the constraint.
impl fmt::Display for WordConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alphabet={}", self.alphabet_size)?;
        if !self.forbidden_factors.is_empty() {
            write!(f, "; forbid=")?;
            for (i, factor) in self.forbidden_factors.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                for &letter in factor {
                    write!(f, "{letter}")?;
                }
            }
        }
        if !self.even_run_letters.is_empty() {
            write!(f, "; evenrun=")?;
            for (i, letter) in self.even_run_letters.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{letter}")?;
            }
        }
        Ok(())
    }
}

struct Scanner {
    // (byte offset in the original input, character), whitespace removed
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Scanner {
    fn new(text: &str) -> Self {
        Scanner {
            chars: text
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            pos: 0,
            len: text.len(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(o, _)| o)
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        }
    }

    fn expect(&mut self, wanted: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == wanted => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{wanted}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{wanted}`, found end of input"))),
        }
    }

    fn ident(&mut self) -> String {
        let mut out = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
            out.push(self.bump().unwrap());
        }
        out
    }

    fn integer(&mut self) -> Result<u32> {
        let start = self.offset();
        let mut digits = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.bump().unwrap());
        }
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        digits.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: format!("integer `{digits}` out of range"),
        })
    }

    fn digit_word(&mut self) -> Result<Vec<u8>> {
        let mut word = Vec::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            word.push(self.bump().unwrap() as u8 - b'0');
        }
        if word.is_empty() {
            return Err(self.error("expected a nonempty digit word"));
        }
        Ok(word)
    }
}

/// Parses the constraint DSL into a validated [`WordConstraint`].
pub fn parse_constraint(text: &str) -> Result<WordConstraint> {
    let mut scanner = Scanner::new(text);

    // Mandatory leading alphabet clause.
    if scanner.ident() != "alphabet" {
        return Err(Error::MissingAlphabet);
    }
    scanner.expect('=')?;
    let sigma_pos = scanner.offset();
    let sigma = scanner.integer()?;
    if !(1..=10).contains(&sigma) {
        return Err(Error::Parse {
            pos: sigma_pos,
            msg: format!("alphabet size must be in 1..=10, got {sigma}"),
        });
    }
    let sigma = sigma as u8;

    let mut factors: Vec<Vec<u8>> = Vec::new();
    let mut letters: Vec<u8> = Vec::new();

    while scanner.peek().is_some() {
        scanner.expect(';')?;
        let clause_pos = scanner.offset();
        let key = scanner.ident();
        match key.as_str() {
            "forbid" => {
                scanner.expect('=')?;
                loop {
                    let word = scanner.digit_word()?;
                    for &letter in &word {
                        if letter >= sigma {
                            return Err(Error::LetterOutOfRange {
                                letter: letter as u32,
                                sigma,
                            });
                        }
                    }
                    factors.push(word);
                    if scanner.peek() == Some(',') {
                        scanner.bump();
                    } else {
                        break;
                    }
                }
            }
            "evenrun" => {
                scanner.expect('=')?;
                loop {
                    let letter = scanner.integer()?;
                    if letter >= sigma as u32 {
                        return Err(Error::LetterOutOfRange { letter, sigma });
                    }
                    letters.push(letter as u8);
                    if scanner.peek() == Some(',') {
                        scanner.bump();
                    } else {
                        break;
                    }
                }
            }
            "alphabet" => {
                return Err(Error::Parse {
                    pos: clause_pos,
                    msg: "duplicate alphabet clause".into(),
                });
            }
            other => {
                return Err(Error::Parse {
                    pos: clause_pos,
                    msg: if other.is_empty() {
                        "expected a clause name".into()
                    } else {
                        format!("unknown clause `{other}`")
                    },
                });
            }
        }
    }

    WordConstraint::new(sigma, factors, letters)
}
