//! Shared support for the integration suites: seeded random words and a
//! dense-matrix oracle for the representation.
//!
//! The oracle builds explicit dim x dim matrices over ℤ[ξ]/Φ_p straight
//! from the operator definitions (T swaps tensor factors, R and S are
//! diagonal, σ/τ/generalized letters are the defining matrix products) and
//! multiplies them out. It shares no code with the monomial evaluator it
//! cross-checks.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use vsb_core::cyclotomic::{CycInt, CycRing};
use vsb_core::schreier::representative_of;
use vsb_core::words::{Generator, Word};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Uniform random word over the standard alphabet.
pub fn random_standard_word(rng: &mut StdRng, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n);
            match rng.gen_range(0..4) {
                0 => Generator::Sigma(i),
                1 => Generator::SigmaInv(i),
                2 => Generator::V(i),
                _ => Generator::Tau(i),
            }
        })
        .collect();
    Word::new(n, letters).expect("random letters in range")
}

/// Random standard-alphabet word with identity permutation, built by
/// appending the reversed coset representative (a v-word) to a random word.
pub fn random_pure_word(rng: &mut StdRng, n: usize, max_base_len: usize) -> Word {
    let base = random_standard_word(rng, n, max_base_len);
    let tail = representative_of(&base).reversed();
    base.concat(&tail).expect("same strand count")
}

/// Uniform random word over all three alphabets mixed.
pub fn random_mixed_word(rng: &mut StdRng, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n);
            let k = rng.gen_range(1..=n);
            let l = loop {
                let l = rng.gen_range(1..=n);
                if l != k {
                    break l;
                }
            };
            match rng.gen_range(0..10) {
                0 => Generator::Sigma(i),
                1 => Generator::SigmaInv(i),
                2 => Generator::V(i),
                3 => Generator::Tau(i),
                4 => Generator::Mu(i),
                5 => Generator::MuInv(i),
                6 => Generator::Gamma(i),
                7 => Generator::GMu(k, l),
                8 => Generator::GMuInv(k, l),
                _ => Generator::GGamma(k, l),
            }
        })
        .collect();
    Word::new(n, letters).expect("random letters in range")
}

/// Dense row-major matrix over ℤ[ξ]/Φ_p acting on V^{⊗n}, dim = p^n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix {
    pub dim: usize,
    pub entries: Vec<CycInt>,
}

impl DenseMatrix {
    pub fn identity(ring: &CycRing, dim: usize) -> DenseMatrix {
        let mut entries = vec![ring.zero(); dim * dim];
        for d in 0..dim {
            entries[d * dim + d] = ring.one();
        }
        DenseMatrix { dim, entries }
    }

    pub fn at(&self, row: usize, col: usize) -> &CycInt {
        &self.entries[row * self.dim + col]
    }

    /// Standard matrix product: `self * other` applies `other` first.
    pub fn matmul(&self, other: &DenseMatrix, ring: &CycRing) -> DenseMatrix {
        assert_eq!(self.dim, other.dim);
        let dim = self.dim;
        let mut entries = vec![ring.zero(); dim * dim];
        for r in 0..dim {
            for k in 0..dim {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..dim {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    entries[r * dim + c] = ring.add(&entries[r * dim + c], &ring.mul(a, b));
                }
            }
        }
        DenseMatrix { dim, entries }
    }
}

// Lexicographic rank of a state tuple, last entry fastest.
pub fn state_rank(entries: &[u64], p: u64) -> usize {
    entries
        .iter()
        .fold(0usize, |acc, &k| acc * p as usize + k as usize)
}

pub fn rank_state(rank: usize, p: u64, n: usize) -> Vec<u64> {
    let mut out = vec![0u64; n];
    let mut r = rank;
    for slot in (0..n).rev() {
        out[slot] = (r % p as usize) as u64;
        r /= p as usize;
    }
    out
}

fn product_mod(k: u64, l: u64, p: u64) -> i64 {
    ((k as u128 * l as u128) % p as u128) as i64
}

// T in slot i: swaps tensor factors i, i+1.
fn t_matrix(ring: &CycRing, n: usize, i: usize) -> DenseMatrix {
    let p = ring.p();
    let dim = (p as usize).pow(n as u32);
    let mut entries = vec![ring.zero(); dim * dim];
    for col in 0..dim {
        let mut state = rank_state(col, p, n);
        state.swap(i - 1, i);
        entries[state_rank(&state, p) * dim + col] = ring.one();
    }
    DenseMatrix { dim, entries }
}

// Diagonal matrix with scalar(k_i, k_{i+1}) on the diagonal.
fn diagonal_matrix(
    ring: &CycRing,
    n: usize,
    i: usize,
    scalar: impl Fn(&CycRing, u64, u64) -> CycInt,
) -> DenseMatrix {
    let p = ring.p();
    let dim = (p as usize).pow(n as u32);
    let mut entries = vec![ring.zero(); dim * dim];
    for col in 0..dim {
        let state = rank_state(col, p, n);
        entries[col * dim + col] = scalar(ring, state[i - 1], state[i]);
    }
    DenseMatrix { dim, entries }
}

fn r_matrix(ring: &CycRing, n: usize, i: usize) -> DenseMatrix {
    diagonal_matrix(ring, n, i, |ring, k, l| {
        ring.from_power(product_mod(k, l, ring.p()))
    })
}

fn r_inv_matrix(ring: &CycRing, n: usize, i: usize) -> DenseMatrix {
    diagonal_matrix(ring, n, i, |ring, k, l| {
        ring.from_power(-product_mod(k, l, ring.p()))
    })
}

fn s_matrix(ring: &CycRing, n: usize, i: usize) -> DenseMatrix {
    diagonal_matrix(ring, n, i, |ring, k, l| {
        ring.plus_inverse_power(product_mod(k, l, ring.p()))
    })
}

/// Matrix of one generator, from the defining operator products:
/// σ_i = R_i T_i, σ_i⁻¹ = T_i R_i⁻¹, τ_i = S_i T_i, and the generalized
/// strings conjugated through v-strings per their definition.
pub fn generator_matrix(ring: &CycRing, n: usize, g: Generator) -> DenseMatrix {
    match g {
        Generator::V(i) => t_matrix(ring, n, i),
        Generator::Mu(i) => r_matrix(ring, n, i),
        Generator::MuInv(i) => r_inv_matrix(ring, n, i),
        Generator::Gamma(i) => s_matrix(ring, n, i),
        Generator::Sigma(i) => r_matrix(ring, n, i).matmul(&t_matrix(ring, n, i), ring),
        Generator::SigmaInv(i) => t_matrix(ring, n, i).matmul(&r_inv_matrix(ring, n, i), ring),
        Generator::Tau(i) => s_matrix(ring, n, i).matmul(&t_matrix(ring, n, i), ring),
        Generator::GMu(k, l) | Generator::GMuInv(k, l) | Generator::GGamma(k, l) => {
            let (i, j) = (k.min(l), k.max(l));
            let mid = match g {
                Generator::GMu(_, _) => r_matrix(ring, n, i),
                Generator::GMuInv(_, _) => r_inv_matrix(ring, n, i),
                _ => s_matrix(ring, n, i),
            };
            let mid = if k > l {
                let t = t_matrix(ring, n, i);
                t.matmul(&mid, ring).matmul(&t, ring)
            } else {
                mid
            };
            let mut m = DenseMatrix::identity(ring, mid.dim);
            for v in (i + 1..j).rev() {
                m = m.matmul(&t_matrix(ring, n, v), ring);
            }
            m = m.matmul(&mid, ring);
            for v in i + 1..j {
                m = m.matmul(&t_matrix(ring, n, v), ring);
            }
            m
        }
    }
}

/// Matrix of a word: the product of the letter matrices in word order,
/// so the last letter acts first on column vectors.
pub fn word_matrix(ring: &CycRing, w: &Word) -> DenseMatrix {
    let dim = (ring.p() as usize).pow(w.n() as u32);
    let mut m = DenseMatrix::identity(ring, dim);
    for &g in w.letters() {
        m = m.matmul(&generator_matrix(ring, w.n(), g), ring);
    }
    m
}
