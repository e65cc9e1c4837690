//! The Schreier system Λ_n of right coset representatives of the pure
//! submonoid, the s_{λ,a} generators, the rewriting process into
//! generalized fusing strings, and the semidirect decomposition
//! word = pure part · representative.
//!
//! Λ_n is built from the v-words m_{kl} = v_{k-1} v_{k-2} … v_l (l < k,
//! otherwise empty) as all products m_{2,j_2} m_{3,j_3} … m_{n,j_n} with
//! 1 ≤ j_k ≤ k. The system is prefix-closed and π restricts to a bijection
//! Λ_n → S_n.

use thiserror::Error;

use crate::morphisms::{normalize_to, permutation_of, Permutation, TargetAlphabet};
use crate::words::{Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchreierError {
    #[error("index {value} at slot k={slot} violates 1 <= j_k <= k")]
    IndexBound { slot: usize, value: usize },
    #[error("index has {got} entries, expected {expected} for {n} strands")]
    IndexLength { n: usize, expected: usize, got: usize },
    #[error("letter {letter} is not in the standard alphabet")]
    NonStandardLetter { letter: String },
    #[error("word is not pure: permutation is {perm}")]
    NotPure { perm: String },
}

/// A tuple (j_2, …, j_n) with 1 ≤ j_k ≤ k, indexing Λ_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchreierIndex {
    // entries[k - 2] = j_k
    entries: Vec<usize>,
}

impl SchreierIndex {
    pub fn new(entries: Vec<usize>) -> Result<SchreierIndex, SchreierError> {
        for (slot, &j) in entries.iter().enumerate() {
            let k = slot + 2;
            if j < 1 || j > k {
                return Err(SchreierError::IndexBound { slot: k, value: j });
            }
        }
        Ok(SchreierIndex { entries })
    }

    /// The index of the identity representative: j_k = k for every k.
    pub fn identity(n: usize) -> SchreierIndex {
        SchreierIndex {
            entries: (2..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len() + 1
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// All n!/1 indices for strand count `n` in lexicographic order.
    pub fn enumerate(n: usize) -> Vec<SchreierIndex> {
        let mut out = Vec::new();
        let mut entries = vec![1; n - 1];
        loop {
            out.push(SchreierIndex {
                entries: entries.clone(),
            });
            let mut slot = entries.len();
            loop {
                if slot == 0 {
                    return out;
                }
                slot -= 1;
                let k = slot + 2;
                entries[slot] += 1;
                if entries[slot] <= k {
                    break;
                }
                entries[slot] = 1;
            }
        }
    }
}

// m_{kl} as letters: v_{k-1} v_{k-2} … v_l for l < k, empty otherwise.
fn m_word(k: usize, l: usize, out: &mut Vec<Generator>) {
    if l < k {
        out.extend((l..k).rev().map(Generator::V));
    }
}

/// The representative word m_{2,j_2} m_{3,j_3} … m_{n,j_n} ∈ Λ_n.
pub fn lambda_word(idx: &SchreierIndex, n: usize) -> Result<Word, SchreierError> {
    if idx.n() != n {
        return Err(SchreierError::IndexLength {
            n,
            expected: n - 1,
            got: idx.entries.len(),
        });
    }
    let mut letters = Vec::new();
    for (slot, &j) in idx.entries.iter().enumerate() {
        m_word(slot + 2, j, &mut letters);
    }
    Ok(Word::new(n, letters).expect("lambda word in range"))
}

/// Inverts the bijection Λ_n → S_n: the unique index whose representative
/// has the given permutation.
///
/// Peels one m-factor at a time: the factor m_{k,j_k} is the only one
/// moving point k, and it sends j_k to k, so j_k = α⁻¹(k); stripping it
/// leaves a permutation fixing k.
pub fn representative_index(perm: &Permutation) -> SchreierIndex {
    let n = perm.degree();
    let mut images: Vec<usize> = perm.images().to_vec();
    let mut entries = vec![1; n - 1];
    for k in (2..=n).rev() {
        let j = images[..k]
            .iter()
            .position(|&img| img == k)
            .expect("bijection hits k")
            + 1;
        entries[k - 2] = j;
        // Strip π(m_{k,j})⁻¹ on the right: remove position j, shift left.
        images.remove(j - 1);
        images.insert(k - 1, k);
    }
    SchreierIndex { entries }
}

/// The unique λ ∈ Λ_n with π(λ) = π(w), as a v-only word.
pub fn representative_of(w: &Word) -> Word {
    let idx = representative_index(&permutation_of(w));
    lambda_word(&idx, w.n()).expect("index built for this n")
}

// Conjugating a generalized fusing string by a representative with
// permutation α permutes its indices: (k, l) goes to (α(k), α(l)).
fn conjugated(alpha: &Permutation, g: Generator) -> Generator {
    let (k, l) = g.index_pair().expect("generalized letter");
    let (k, l) = (alpha.apply(k), alpha.apply(l));
    match g {
        Generator::GMu(_, _) => Generator::GMu(k, l),
        Generator::GMuInv(_, _) => Generator::GMuInv(k, l),
        Generator::GGamma(_, _) => Generator::GGamma(k, l),
        _ => unreachable!(),
    }
}

/// The Schreier generator s_{λ,a} = λ a (λa-bar)⁻¹ as a word of length at
/// most one in the generalized alphabet:
/// s_{λ,v_i} = 1_n, s_{λ,σ_i} = μ_{α(i),α(i+1)}, s_{λ,τ_i} = γ_{α(i),α(i+1)},
/// s_{λ,σ_i⁻¹} = μ_{α(i+1),α(i)}⁻¹, with α the permutation of λ.
pub fn schreier_generator(lambda: &SchreierIndex, a: Generator) -> Result<Word, SchreierError> {
    let n = lambda.n();
    let alpha = permutation_of(&lambda_word(lambda, n)?);
    let letters = match a {
        Generator::V(_) => vec![],
        Generator::Sigma(i) => vec![conjugated(&alpha, Generator::GMu(i, i + 1))],
        Generator::Tau(i) => vec![conjugated(&alpha, Generator::GGamma(i, i + 1))],
        Generator::SigmaInv(i) => vec![conjugated(&alpha, Generator::GMuInv(i + 1, i))],
        other => {
            return Err(SchreierError::NonStandardLetter {
                letter: other.to_string(),
            })
        }
    };
    Word::new(n, letters).map_err(|_| SchreierError::NonStandardLetter {
        letter: a.to_string(),
    })
}

// The rewriting process on an arbitrary standard word. Emits one
// generalized letter per σ/τ letter; the coset prefix is tracked
// incrementally as a permutation, never re-scanned. For σ_i⁻¹ the prefix
// includes the letter itself and the factor carries exponent -1.
fn rewrite_letters(w: &Word) -> Result<Vec<Generator>, SchreierError> {
    let n = w.n();
    let mut prefix = Permutation::identity(n);
    let mut out = Vec::new();
    for &a in w.letters() {
        match a {
            Generator::V(i) => {
                prefix = prefix.compose(&Permutation::transposition(n, i));
            }
            Generator::Sigma(i) => {
                out.push(conjugated(&prefix, Generator::GMu(i, i + 1)));
                prefix = prefix.compose(&Permutation::transposition(n, i));
            }
            Generator::Tau(i) => {
                out.push(conjugated(&prefix, Generator::GGamma(i, i + 1)));
                prefix = prefix.compose(&Permutation::transposition(n, i));
            }
            Generator::SigmaInv(i) => {
                // Exponent -1 factor: the coset prefix includes the letter
                // itself, and the inverted base generator is s_{λ,σ_i}⁻¹.
                prefix = prefix.compose(&Permutation::transposition(n, i));
                out.push(conjugated(&prefix, Generator::GMuInv(i, i + 1)));
            }
            other => {
                return Err(SchreierError::NonStandardLetter {
                    letter: other.to_string(),
                })
            }
        }
    }
    Ok(out)
}

/// Rewrites a pure standard-alphabet word into the generalized alphabet.
///
/// Errors when the input leaves the standard alphabet or is not pure.
pub fn rewrite_pure(w: &Word) -> Result<Word, SchreierError> {
    let perm = permutation_of(w);
    if !perm.is_identity() {
        return Err(SchreierError::NotPure {
            perm: perm.to_string(),
        });
    }
    let letters = rewrite_letters(w)?;
    Ok(Word::new(w.n(), letters).expect("rewrite in range"))
}

/// The semidirect decomposition of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Pure part, a word in the generalized alphabet.
    pub pure: Word,
    /// Coset representative in Λ_n, a v-only word with the same permutation
    /// as the input.
    pub representative: Word,
}

/// Splits `w` as pure part times representative: the representative is the
/// Λ_n word with π(rep) = π(w), and the pure part is the rewriting of
/// w · rep⁻¹ (a v-word's inverse is its reversal). Non-standard alphabets
/// are normalized first.
pub fn decompose(w: &Word) -> Decomposition {
    let std = normalize_to(w, TargetAlphabet::Standard);
    let representative = representative_of(&std);
    let purified = std
        .concat(&representative.reversed())
        .expect("same strand count");
    let pure = rewrite_pure(&purified).expect("purified word is pure");
    Decomposition {
        pure,
        representative,
    }
}
