//! Generator alphabets and free-monoid words over them.
//!
//! A [`Word`] is a strand count `n` together with a finite sequence of
//! [`Generator`] letters. Three alphabets coexist: the standard one
//! (`σ_i^{±1}, v_i, τ_i`), the fusing one (`μ_i^{±1}, γ_i, v_i`) and the
//! generalized fusing strings (`μ_{kl}^{±1}, γ_{kl}`). Mixed words are legal;
//! translation between alphabets lives in [`crate::morphisms`].
//!
//! Token grammar (whitespace separated, decimal indices, no leading zeros):
//!
//! | token      | letter      |
//! |------------|-------------|
//! | `s<i>`     | σ_i         |
//! | `S<i>`     | σ_i⁻¹       |
//! | `v<i>`     | v_i         |
//! | `t<i>`     | τ_i         |
//! | `u<i>`     | μ_i         |
//! | `U<i>`     | μ_i⁻¹       |
//! | `g<i>`     | γ_i         |
//! | `u[<k>,<l>]` | μ_{kl}    |
//! | `U[<k>,<l>]` | μ_{kl}⁻¹  |
//! | `g[<k>,<l>]` | γ_{kl}    |
//!
//! Empty input parses to the identity word `1_n`.

use std::fmt;

use thiserror::Error;

/// One letter of a braid word.
///
/// Single-index kinds carry a strand position `i` with `1 <= i <= n-1`;
/// generalized kinds carry an ordered pair `(k, l)` of distinct strand
/// labels with `1 <= k, l <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// Classical crossing σ_i.
    Sigma(usize),
    /// Inverse classical crossing σ_i⁻¹.
    SigmaInv(usize),
    /// Virtual crossing v_i (its own inverse).
    V(usize),
    /// Singular crossing τ_i (not invertible).
    Tau(usize),
    /// Elementary fusing string μ_i = σ_i v_i.
    Mu(usize),
    /// Inverse elementary fusing string μ_i⁻¹ = v_i σ_i⁻¹.
    MuInv(usize),
    /// Singular elementary fusing string γ_i = τ_i v_i (not invertible).
    Gamma(usize),
    /// Generalized fusing string μ_{kl}.
    GMu(usize, usize),
    /// Inverse generalized fusing string μ_{kl}⁻¹.
    GMuInv(usize, usize),
    /// Generalized singular fusing string γ_{kl} (not invertible).
    GGamma(usize, usize),
}

impl Generator {
    /// The inverse letter, if this letter is invertible.
    ///
    /// τ_i, γ_i and γ_{kl} have no inverse; requests for one must be treated
    /// as hard errors by callers that need invertibility.
    pub fn inverse(self) -> Option<Generator> {
        match self {
            Generator::Sigma(i) => Some(Generator::SigmaInv(i)),
            Generator::SigmaInv(i) => Some(Generator::Sigma(i)),
            Generator::V(i) => Some(Generator::V(i)),
            Generator::Mu(i) => Some(Generator::MuInv(i)),
            Generator::MuInv(i) => Some(Generator::Mu(i)),
            Generator::GMu(k, l) => Some(Generator::GMuInv(k, l)),
            Generator::GMuInv(k, l) => Some(Generator::GMu(k, l)),
            Generator::Tau(_) | Generator::Gamma(_) | Generator::GGamma(_, _) => None,
        }
    }

    /// True when `self` immediately followed by `other` is an invertible pair
    /// (σ_iσ_i⁻¹, σ_i⁻¹σ_i, v_iv_i, μ_iμ_i⁻¹, μ_i⁻¹μ_i, μ_{kl}μ_{kl}⁻¹, μ_{kl}⁻¹μ_{kl}).
    pub fn cancels(self, other: Generator) -> bool {
        self.inverse() == Some(other)
    }

    /// Letters of the standard presentation alphabet {σ^{±1}, v, τ}.
    pub fn is_standard(self) -> bool {
        matches!(
            self,
            Generator::Sigma(_) | Generator::SigmaInv(_) | Generator::V(_) | Generator::Tau(_)
        )
    }

    /// Letters of the fusing alphabet {μ^{±1}, γ, v}.
    pub fn is_fusing(self) -> bool {
        matches!(
            self,
            Generator::Mu(_) | Generator::MuInv(_) | Generator::Gamma(_) | Generator::V(_)
        )
    }

    /// Generalized fusing-string letters μ_{kl}^{±1}, γ_{kl}.
    pub fn is_generalized(self) -> bool {
        matches!(
            self,
            Generator::GMu(_, _) | Generator::GMuInv(_, _) | Generator::GGamma(_, _)
        )
    }

    /// Single strand index of a non-generalized letter.
    pub fn index(self) -> Option<usize> {
        match self {
            Generator::Sigma(i)
            | Generator::SigmaInv(i)
            | Generator::V(i)
            | Generator::Tau(i)
            | Generator::Mu(i)
            | Generator::MuInv(i)
            | Generator::Gamma(i) => Some(i),
            _ => None,
        }
    }

    /// Ordered index pair of a generalized letter.
    pub fn index_pair(self) -> Option<(usize, usize)> {
        match self {
            Generator::GMu(k, l) | Generator::GMuInv(k, l) | Generator::GGamma(k, l) => {
                Some((k, l))
            }
            _ => None,
        }
    }

    /// Checks the letter's indices against the ambient strand count.
    pub fn validate(self, n: usize) -> Result<(), WordError> {
        let ok = match self {
            Generator::GMu(k, l) | Generator::GMuInv(k, l) | Generator::GGamma(k, l) => {
                k >= 1 && l >= 1 && k <= n && l <= n && k != l
            }
            _ => {
                let i = self.index().expect("single-index letter");
                i >= 1 && i < n
            }
        };
        if ok {
            Ok(())
        } else {
            Err(WordError::IndexOutOfRange {
                letter: self.to_string(),
                n,
            })
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sigma(i) => write!(f, "s{i}"),
            Generator::SigmaInv(i) => write!(f, "S{i}"),
            Generator::V(i) => write!(f, "v{i}"),
            Generator::Tau(i) => write!(f, "t{i}"),
            Generator::Mu(i) => write!(f, "u{i}"),
            Generator::MuInv(i) => write!(f, "U{i}"),
            Generator::Gamma(i) => write!(f, "g{i}"),
            Generator::GMu(k, l) => write!(f, "u[{k},{l}]"),
            Generator::GMuInv(k, l) => write!(f, "U[{k},{l}]"),
            Generator::GGamma(k, l) => write!(f, "g[{k},{l}]"),
        }
    }
}

/// Errors from word construction, parsing and combination.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    /// A token did not match the word grammar. Positions are 1-based.
    #[error("syntax error at token {pos} (`{token}`): {reason}")]
    Syntax {
        pos: usize,
        token: String,
        reason: String,
    },
    /// A parsed token carries an index outside `1..=n-1` (or `1..=n` for pairs).
    #[error("index out of range at token {pos} (`{token}`) for {n} strands")]
    TokenIndexOutOfRange { pos: usize, token: String, n: usize },
    /// A letter's indices do not fit the ambient strand count.
    #[error("letter {letter} out of range for {n} strands")]
    IndexOutOfRange { letter: String, n: usize },
    /// Word combination with differing strand counts.
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    /// Embedding must not shrink the strand count.
    #[error("cannot embed a word on {from} strands into {to} strands")]
    EmbedShrink { from: usize, to: usize },
    /// Inversion requested for a word containing a non-invertible letter.
    #[error("letter {letter} is not invertible")]
    NotInvertible { letter: String },
    /// Strand counts start at 2.
    #[error("strand count must be at least 2, got {0}")]
    StrandCountTooSmall(usize),
}

/// An element of the free monoid over the generator alphabets: a strand
/// count plus a letter sequence. The empty word is the identity `1_n`.
///
/// Words are immutable after construction; every combinator returns a new
/// value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    n: usize,
    letters: Vec<Generator>,
}

impl Word {
    /// Builds a word, validating every letter against `n`.
    pub fn new(n: usize, letters: Vec<Generator>) -> Result<Word, WordError> {
        if n < 2 {
            return Err(WordError::StrandCountTooSmall(n));
        }
        for g in &letters {
            g.validate(n)?;
        }
        Ok(Word { n, letters })
    }

    /// The identity word `1_n`.
    pub fn identity(n: usize) -> Word {
        Word {
            n,
            letters: Vec::new(),
        }
    }

    /// Parses whitespace-separated tokens of the word grammar.
    pub fn parse(text: &str, n: usize) -> Result<Word, WordError> {
        if n < 2 {
            return Err(WordError::StrandCountTooSmall(n));
        }
        let mut letters = Vec::new();
        for (pos0, token) in text.split_whitespace().enumerate() {
            let pos = pos0 + 1;
            let g = parse_token(token, pos)?;
            if g.validate(n).is_err() {
                return Err(WordError::TokenIndexOutOfRange {
                    pos,
                    token: token.to_string(),
                    n,
                });
            }
            letters.push(g);
        }
        Ok(Word { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True for the identity word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` stacked on top of `other` (letters of `self` first).
    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.n != other.n {
            return Err(WordError::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { n: self.n, letters })
    }

    /// The same letters on `n_new >= n` strands (vertical strands added on
    /// the right).
    pub fn embed(&self, n_new: usize) -> Result<Word, WordError> {
        if n_new < self.n {
            return Err(WordError::EmbedShrink {
                from: self.n,
                to: n_new,
            });
        }
        Ok(Word {
            n: n_new,
            letters: self.letters.clone(),
        })
    }

    /// Deletes adjacent invertible pairs until none remain.
    ///
    /// The deletion rules only ever shrink the word and distinct redexes are
    /// disjoint or identical, so the result is the unique normal form; a
    /// single stack pass reaches it.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Generator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if let Some(&top) = stack.last() {
                if top.cancels(g) {
                    stack.pop();
                    continue;
                }
            }
            stack.push(g);
        }
        Word {
            n: self.n,
            letters: stack,
        }
    }

    /// Letter sequence reversed. For words of self-inverse letters (v-words)
    /// this is the inverse word.
    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { n: self.n, letters }
    }

    /// The inverse word: reversed sequence with every letter inverted.
    ///
    /// Errors on τ_i, γ_i and γ_{kl}, which have no inverse letters.
    pub fn inverse(&self) -> Result<Word, WordError> {
        let mut letters = Vec::with_capacity(self.letters.len());
        for &g in self.letters.iter().rev() {
            match g.inverse() {
                Some(inv) => letters.push(inv),
                None => {
                    return Err(WordError::NotInvertible {
                        letter: g.to_string(),
                    })
                }
            }
        }
        Ok(Word { n: self.n, letters })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}

fn parse_index(digits: &str, token: &str, pos: usize) -> Result<usize, WordError> {
    let syntax = |reason: &str| WordError::Syntax {
        pos,
        token: token.to_string(),
        reason: reason.to_string(),
    };
    if digits.is_empty() {
        return Err(syntax("missing index"));
    }
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax("index must be decimal digits"));
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return Err(syntax("leading zero in index"));
    }
    digits
        .parse::<usize>()
        .map_err(|_| syntax("index does not fit in a machine word"))
}

fn parse_token(token: &str, pos: usize) -> Result<Generator, WordError> {
    let syntax = |reason: &str| WordError::Syntax {
        pos,
        token: token.to_string(),
        reason: reason.to_string(),
    };
    let mut chars = token.chars();
    let head = chars.next().ok_or_else(|| syntax("empty token"))?;
    let rest = chars.as_str();
    if rest.starts_with('[') {
        if !matches!(head, 'u' | 'U' | 'g') {
            return Err(syntax("only u, U and g take an index pair"));
        }
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| syntax("expected `[k,l]`"))?;
        let (ks, ls) = inner.split_once(',').ok_or_else(|| syntax("expected `[k,l]`"))?;
        let k = parse_index(ks, token, pos)?;
        let l = parse_index(ls, token, pos)?;
        return Ok(match head {
            'u' => Generator::GMu(k, l),
            'U' => Generator::GMuInv(k, l),
            _ => Generator::GGamma(k, l),
        });
    }
    let i = parse_index(rest, token, pos)?;
    Ok(match head {
        's' => Generator::Sigma(i),
        'S' => Generator::SigmaInv(i),
        'v' => Generator::V(i),
        't' => Generator::Tau(i),
        'u' => Generator::Mu(i),
        'U' => Generator::MuInv(i),
        'g' => Generator::Gamma(i),
        _ => return Err(syntax("unknown generator letter")),
    })
}
