//! Homomorphisms between the presentations: the permutation map π to S_n,
//! the mutually inverse translations F (standard → fusing) and
//! G (fusing → standard), the detour-move reduction to subscript-1
//! generators, and the expansion of generalized fusing strings.
//!
//! Composition convention, fixed once for the whole crate: the first letter
//! of a word is the top of the braid and acts last. For a word
//! `a_1 a_2 … a_t` both π and the representation evaluate as
//! `φ(a_1) ∘ φ(a_2) ∘ … ∘ φ(a_t)` (rightmost factor applied first), which
//! matches stacking the first factor of a product on top of the second and
//! reading braids bottom to top.

use std::fmt;

use thiserror::Error;

use crate::words::{Generator, Word};

/// A bijection of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // images[i] is the image of the 1-based point i+1.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds from 1-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation, MorphismError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x < 1 || x > n || seen[x - 1] {
                return Err(MorphismError::NotABijection { images });
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition (i, i+1) on n points.
    pub fn transposition(n: usize, i: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: (1..=self.degree()).map(|x| self.apply(other.apply(x))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img == i + 1)
    }

    /// 1-based image list.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Nontrivial cycles, each starting at its smallest point, sorted by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Errors from the translation homomorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    /// F only accepts the standard alphabet, G only the fusing one.
    #[error("{map} does not accept letter {letter}")]
    ForeignLetter { map: &'static str, letter: String },
    /// Image list is not a bijection.
    #[error("images {images:?} are not a bijection")]
    NotABijection { images: Vec<usize> },
}

/// The homomorphism π: VSB_n → S_n.
///
/// The standard crossings σ_i^{±1}, v_i, τ_i map to the transposition
/// (i, i+1). All fusing strings, elementary (μ_i = σ_i v_i, γ_i = τ_i v_i)
/// and generalized, are pure braids and map to the identity.
pub fn permutation_of(w: &Word) -> Permutation {
    let mut p = Permutation::identity(w.n());
    for &g in w.letters() {
        if let Generator::Sigma(i) | Generator::SigmaInv(i) | Generator::V(i) | Generator::Tau(i) =
            g
        {
            // Right-composition by (i, i+1): swap the images of i and i+1.
            p.images.swap(i - 1, i);
        }
    }
    p
}

/// The homomorphism F: letterwise σ_i ↦ μ_i v_i, σ_i⁻¹ ↦ v_i μ_i⁻¹,
/// τ_i ↦ γ_i v_i, v_i ↦ v_i. Input must use the standard alphabet.
pub fn to_fusing(w: &Word) -> Result<Word, MorphismError> {
    let mut letters = Vec::with_capacity(2 * w.len());
    for &g in w.letters() {
        match g {
            Generator::Sigma(i) => letters.extend([Generator::Mu(i), Generator::V(i)]),
            Generator::SigmaInv(i) => letters.extend([Generator::V(i), Generator::MuInv(i)]),
            Generator::Tau(i) => letters.extend([Generator::Gamma(i), Generator::V(i)]),
            Generator::V(i) => letters.push(Generator::V(i)),
            other => {
                return Err(MorphismError::ForeignLetter {
                    map: "F (to_fusing)",
                    letter: other.to_string(),
                })
            }
        }
    }
    Ok(Word::new(w.n(), letters).expect("letterwise image stays in range"))
}

/// The homomorphism G: letterwise μ_i ↦ σ_i v_i, μ_i⁻¹ ↦ v_i σ_i⁻¹,
/// γ_i ↦ τ_i v_i, v_i ↦ v_i. Generalized letters are expanded first;
/// standard letters σ/τ are rejected.
pub fn to_standard(w: &Word) -> Result<Word, MorphismError> {
    let expanded = expand_generalized(w);
    let mut letters = Vec::with_capacity(2 * expanded.len());
    for &g in expanded.letters() {
        match g {
            Generator::Mu(i) => letters.extend([Generator::Sigma(i), Generator::V(i)]),
            Generator::MuInv(i) => letters.extend([Generator::V(i), Generator::SigmaInv(i)]),
            Generator::Gamma(i) => letters.extend([Generator::Tau(i), Generator::V(i)]),
            Generator::V(i) => letters.push(Generator::V(i)),
            other => {
                return Err(MorphismError::ForeignLetter {
                    map: "G (to_standard)",
                    letter: other.to_string(),
                })
            }
        }
    }
    Ok(Word::new(w.n(), letters).expect("letterwise image stays in range"))
}

// Detour word for a subscript-(i+1) letter, i >= 1:
//   (v_i … v_2 v_1)(v_{i+1} … v_3 v_2) x_1 (v_2 v_3 … v_{i+1})(v_1 v_2 … v_i)
fn detour(core: Generator, i: usize, out: &mut Vec<Generator>) {
    out.extend((1..=i).rev().map(Generator::V));
    out.extend((2..=i + 1).rev().map(Generator::V));
    out.push(core);
    out.extend((2..=i + 1).map(Generator::V));
    out.extend((1..=i).map(Generator::V));
}

/// Replaces every σ_{i+1}^{±1}, τ_{i+1}, μ_{i+1}^{±1}, γ_{i+1} (i ≥ 1) by its
/// detour word in subscript-1 generators and v's. Generalized letters are
/// expanded first; v's pass through.
pub fn reduce_to_subscript_one(w: &Word) -> Word {
    let expanded = expand_generalized(w);
    let mut letters = Vec::with_capacity(expanded.len());
    for &g in expanded.letters() {
        match g.index() {
            Some(i) if i >= 2 && !matches!(g, Generator::V(_)) => {
                let core = match g {
                    Generator::Sigma(_) => Generator::Sigma(1),
                    Generator::SigmaInv(_) => Generator::SigmaInv(1),
                    Generator::Tau(_) => Generator::Tau(1),
                    Generator::Mu(_) => Generator::Mu(1),
                    Generator::MuInv(_) => Generator::MuInv(1),
                    Generator::Gamma(_) => Generator::Gamma(1),
                    _ => unreachable!(),
                };
                detour(core, i - 1, &mut letters);
            }
            _ => letters.push(g),
        }
    }
    Word::new(w.n(), letters).expect("detour words stay in range")
}

// Expansion of one generalized letter into the fusing alphabet:
//   μ_{ij} = (v_{j-1} … v_{i+1}) μ_i (v_{i+1} … v_{j-1})          for i < j
//   μ_{ji} = (v_{j-1} … v_{i+1}) v_i μ_i v_i (v_{i+1} … v_{j-1})  for i < j
// and likewise for γ. Inverses expand to the reversed word with μ_i⁻¹ in
// place of μ_i.
fn expand_one(g: Generator, out: &mut Vec<Generator>) {
    let (k, l) = g.index_pair().expect("generalized letter");
    let (i, j) = (k.min(l), k.max(l));
    let flipped = k > l;
    out.extend((i + 1..j).rev().map(Generator::V));
    if flipped {
        out.push(Generator::V(i));
    }
    out.push(match g {
        Generator::GMu(_, _) => Generator::Mu(i),
        Generator::GMuInv(_, _) => Generator::MuInv(i),
        Generator::GGamma(_, _) => Generator::Gamma(i),
        _ => unreachable!(),
    });
    if flipped {
        out.push(Generator::V(i));
    }
    out.extend((i + 1..j).map(Generator::V));
}

/// Replaces every generalized fusing string by its defining word in the
/// fusing alphabet; other letters pass through.
pub fn expand_generalized(w: &Word) -> Word {
    let mut letters = Vec::with_capacity(w.len());
    for &g in w.letters() {
        if g.is_generalized() {
            expand_one(g, &mut letters);
        } else {
            letters.push(g);
        }
    }
    Word::new(w.n(), letters).expect("expansion stays in range")
}

/// Target alphabets for [`normalize_to`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetAlphabet {
    /// {σ^{±1}, v, τ}
    Standard,
    /// {μ^{±1}, γ, v}
    Fusing,
    /// {σ_1^{±1}, τ_1, μ_1^{±1}, γ_1, v_1..v_{n-1}}
    SubscriptOne,
    /// Generalized letters expanded, everything else untouched.
    Expanded,
}

/// Total normalization of an arbitrary mixed-alphabet word, chaining
/// expansion and the letterwise translations as needed.
pub fn normalize_to(w: &Word, target: TargetAlphabet) -> Word {
    match target {
        TargetAlphabet::Expanded => expand_generalized(w),
        TargetAlphabet::SubscriptOne => reduce_to_subscript_one(w),
        TargetAlphabet::Standard => {
            let expanded = expand_generalized(w);
            let mut letters = Vec::with_capacity(2 * expanded.len());
            for &g in expanded.letters() {
                match g {
                    Generator::Mu(i) => letters.extend([Generator::Sigma(i), Generator::V(i)]),
                    Generator::MuInv(i) => {
                        letters.extend([Generator::V(i), Generator::SigmaInv(i)])
                    }
                    Generator::Gamma(i) => letters.extend([Generator::Tau(i), Generator::V(i)]),
                    other => letters.push(other),
                }
            }
            Word::new(w.n(), letters).expect("letterwise image stays in range")
        }
        TargetAlphabet::Fusing => {
            let expanded = expand_generalized(w);
            let mut letters = Vec::with_capacity(2 * expanded.len());
            for &g in expanded.letters() {
                match g {
                    Generator::Sigma(i) => letters.extend([Generator::Mu(i), Generator::V(i)]),
                    Generator::SigmaInv(i) => {
                        letters.extend([Generator::V(i), Generator::MuInv(i)])
                    }
                    Generator::Tau(i) => letters.extend([Generator::Gamma(i), Generator::V(i)]),
                    other => letters.push(other),
                }
            }
            Word::new(w.n(), letters).expect("letterwise image stays in range")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> Word {
        Word::parse(text, n).unwrap()
    }

    #[test]
    fn pi_of_single_letters_is_the_transposition() {
        assert_eq!(permutation_of(&w("s1", 2)), Permutation::transposition(2, 1));
        assert_eq!(permutation_of(&w("S1", 2)), Permutation::transposition(2, 1));
        assert_eq!(permutation_of(&w("t2", 3)), Permutation::transposition(3, 2));
        assert_eq!(permutation_of(&w("v1 v1", 3)), Permutation::identity(3));
    }

    #[test]
    fn pi_kills_generalized_letters() {
        assert!(permutation_of(&w("u[1,3] g[3,1] U[2,3]", 3)).is_identity());
        // ... and agrees with the expansion being pure.
        assert!(permutation_of(&expand_generalized(&w("u[1,3]", 3))).is_identity());
    }

    #[test]
    fn pi_composes_first_letter_last() {
        // π(s1 v2) = (1 2)∘(2 3) = (1 2 3).
        let p = permutation_of(&w("s1 v2", 3));
        assert_eq!(p.images(), &[2, 3, 1]);
        assert_eq!(p.to_string(), "(1 2 3)");
    }

    #[test]
    fn translation_f_on_letters() {
        assert_eq!(to_fusing(&w("s1", 2)).unwrap(), w("u1 v1", 2));
        assert_eq!(to_fusing(&w("S1", 2)).unwrap(), w("v1 U1", 2));
        assert_eq!(to_fusing(&w("t1", 2)).unwrap(), w("g1 v1", 2));
        assert_eq!(to_fusing(&w("v2", 3)).unwrap(), w("v2", 3));
        assert!(to_fusing(&w("u1", 2)).is_err());
        assert!(to_fusing(&w("u[1,2]", 2)).is_err());
    }

    #[test]
    fn translation_g_on_letters() {
        assert_eq!(to_standard(&w("u1", 2)).unwrap(), w("s1 v1", 2));
        assert_eq!(to_standard(&w("U1", 2)).unwrap(), w("v1 S1", 2));
        assert_eq!(to_standard(&w("g2", 3)).unwrap(), w("t2 v2", 3));
        assert!(to_standard(&w("s1", 2)).is_err());
        assert!(to_standard(&w("t1", 2)).is_err());
    }

    #[test]
    fn f_and_g_cancel_on_generators_after_free_reduction() {
        for n in 2..=4 {
            for i in 1..n {
                for x in [
                    Generator::Sigma(i),
                    Generator::SigmaInv(i),
                    Generator::V(i),
                    Generator::Tau(i),
                ] {
                    let word = Word::new(n, vec![x]).unwrap();
                    assert_eq!(to_standard(&to_fusing(&word).unwrap()).unwrap().free_reduce(), word);
                }
                for y in [
                    Generator::Mu(i),
                    Generator::MuInv(i),
                    Generator::Gamma(i),
                    Generator::V(i),
                ] {
                    let word = Word::new(n, vec![y]).unwrap();
                    assert_eq!(to_fusing(&to_standard(&word).unwrap()).unwrap().free_reduce(), word);
                }
            }
        }
    }

    #[test]
    fn sigma_pair_translates_to_cancelling_word() {
        let image = to_fusing(&w("s1 S1", 2)).unwrap();
        assert_eq!(image, w("u1 v1 v1 U1", 2));
        assert_eq!(image.free_reduce(), Word::identity(2));
    }

    #[test]
    fn detour_replaces_higher_subscripts() {
        assert_eq!(reduce_to_subscript_one(&w("s2", 3)), w("v1 v2 s1 v2 v1", 3));
        assert_eq!(
            reduce_to_subscript_one(&w("t3", 4)),
            w("v2 v1 v3 v2 t1 v2 v3 v1 v2", 4)
        );
        assert_eq!(reduce_to_subscript_one(&w("s1", 2)), w("s1", 2));
        assert_eq!(reduce_to_subscript_one(&w("v2 v1", 3)), w("v2 v1", 3));
        assert_eq!(reduce_to_subscript_one(&w("u2", 3)), w("v1 v2 u1 v2 v1", 3));
    }

    #[test]
    fn expansion_of_generalized_letters() {
        assert_eq!(expand_generalized(&w("u[1,2]", 2)), w("u1", 2));
        assert_eq!(expand_generalized(&w("u[2,1]", 2)), w("v1 u1 v1", 2));
        assert_eq!(expand_generalized(&w("g[1,3]", 3)), w("v2 g1 v2", 3));
        assert_eq!(expand_generalized(&w("g[3,1]", 3)), w("v2 v1 g1 v1 v2", 3));
        assert_eq!(expand_generalized(&w("u[1,4]", 4)), w("v3 v2 u1 v2 v3", 4));
        assert_eq!(
            expand_generalized(&w("U[3,1]", 3)),
            w("v2 v1 U1 v1 v2", 3)
        );
        // Inverse expansion is the inverse word of the plain expansion.
        let plain = expand_generalized(&w("u[3,1]", 3));
        let inv = expand_generalized(&w("U[3,1]", 3));
        assert_eq!(plain.inverse().unwrap(), inv);
    }

    #[test]
    fn normalize_to_is_total_on_mixed_words() {
        let mixed = w("s1 u2 g[1,3] v1", 3);
        let std = normalize_to(&mixed, TargetAlphabet::Standard);
        assert!(std.letters().iter().all(|g| g.is_standard()));
        let fus = normalize_to(&mixed, TargetAlphabet::Fusing);
        assert!(fus.letters().iter().all(|g| g.is_fusing()));
        let sub1 = normalize_to(&mixed, TargetAlphabet::SubscriptOne);
        assert!(sub1
            .letters()
            .iter()
            .all(|g| matches!(g, Generator::V(_)) || g.index() == Some(1)));
    }

    #[test]
    fn permutation_helpers() {
        let p = Permutation::from_images(vec![2, 3, 1, 4]).unwrap();
        assert_eq!(p.inverse().compose(&p), Permutation::identity(4));
        assert_eq!(p.cycles(), vec![vec![1, 2, 3]]);
        assert!(Permutation::from_images(vec![1, 1]).is_err());
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }
}
