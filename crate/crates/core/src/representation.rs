//! The exact monomial representation on V^{⊗n}, V the p-dimensional space
//! with basis {b_k | k ∈ ℤ_p}, built from the operators
//!
//! ```text
//! T(b_k ⊗ b_l) = b_l ⊗ b_k
//! R(b_k ⊗ b_l) = ξ^{kl} b_k ⊗ b_l
//! S(b_k ⊗ b_l) = (ξ^{kl} + ξ^{-kl}) b_k ⊗ b_l
//! ```
//!
//! with v ↦ T, μ ↦ R, γ ↦ S in the tensor slot of the letter's index.
//! Every generator is monomial, so a word maps a basis state to a scalar
//! times a permuted basis state and evaluation is O(word length) per state.
//!
//! Word equality of fingerprints (the full map state ↦ image) is a
//! necessary condition for equality in the monoid and is used to verify
//! every relation catalog and to certify inequality of words.

use std::thread;

use thiserror::Error;

use crate::cyclotomic::{is_prime, CycInt, CycRing};
use crate::morphisms::{normalize_to, permutation_of, TargetAlphabet};
use crate::presentations::{PresentationCatalog, Relation};
use crate::words::{Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("word on {word_n} strands applied to a state of length {state_len}")]
    DimensionMismatch { word_n: usize, state_len: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("state space {p}^{n} does not fit in memory")]
    StateSpaceTooLarge { p: u64, n: usize },
}

/// A basis vector b_{k_1} ⊗ … ⊗ b_{k_n}, entries reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisState {
    p: u64,
    entries: Vec<u64>,
}

impl BasisState {
    pub fn new(p: u64, entries: Vec<u64>) -> Result<BasisState, RepError> {
        if !is_prime(p) {
            return Err(RepError::NotPrime(p));
        }
        Ok(BasisState {
            p,
            entries: entries.into_iter().map(|k| k % p).collect(),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// All p^n basis states in lexicographic order (last entry fastest).
    pub fn enumerate(p: u64, n: usize) -> Result<Vec<BasisState>, RepError> {
        if !is_prime(p) {
            return Err(RepError::NotPrime(p));
        }
        let total = usize::try_from(p)
            .ok()
            .and_then(|p| p.checked_pow(n as u32))
            .filter(|&t| t <= 1 << 28)
            .ok_or(RepError::StateSpaceTooLarge { p, n })?;
        let mut out = Vec::with_capacity(total);
        let mut entries = vec![0u64; n];
        loop {
            out.push(BasisState {
                p,
                entries: entries.clone(),
            });
            let mut pos = n;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                entries[pos] += 1;
                if entries[pos] < p {
                    break;
                }
                entries[pos] = 0;
            }
        }
    }
}

/// The image of a basis state under a word: a scalar times a basis state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialImage {
    pub scalar: CycInt,
    pub state: BasisState,
}

// Evaluate a fusing-alphabet letter sequence on a state. The first letter
// of a word acts last, so letters are consumed in reverse.
fn eval_fusing(letters: &[Generator], ring: &CycRing, b: &BasisState) -> MonomialImage {
    let p = ring.p();
    let mut entries = b.entries.clone();
    let mut scalar = ring.one();
    for &g in letters.iter().rev() {
        match g {
            Generator::V(i) => entries.swap(i - 1, i),
            Generator::Mu(i) => {
                let e = mod_product(entries[i - 1], entries[i], p);
                scalar = ring.mul_by_power(&scalar, e);
            }
            Generator::MuInv(i) => {
                let e = mod_product(entries[i - 1], entries[i], p);
                scalar = ring.mul_by_power(&scalar, -e);
            }
            Generator::Gamma(i) => {
                let e = mod_product(entries[i - 1], entries[i], p);
                scalar = ring.mul(&scalar, &ring.plus_inverse_power(e));
            }
            other => unreachable!("non-fusing letter {other} after normalization"),
        }
    }
    MonomialImage {
        scalar,
        state: BasisState { p, entries },
    }
}

fn mod_product(k: u64, l: u64, p: u64) -> i64 {
    ((k as u128 * l as u128) % p as u128) as i64
}

/// The image of `b` under `w`. Standard and generalized letters are
/// translated to the fusing alphabet first.
pub fn apply_word(w: &Word, b: &BasisState) -> Result<MonomialImage, RepError> {
    if w.n() != b.len() {
        return Err(RepError::DimensionMismatch {
            word_n: w.n(),
            state_len: b.len(),
        });
    }
    let ring = CycRing::new(b.p()).map_err(|_| RepError::NotPrime(b.p()))?;
    let fusing = normalize_to(w, TargetAlphabet::Fusing);
    Ok(eval_fusing(fusing.letters(), &ring, b))
}

/// A state on which two words disagree, with both images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub state: BasisState,
    pub lhs_image: MonomialImage,
    pub rhs_image: MonomialImage,
}

/// First basis state (in enumeration order) where the fingerprints differ,
/// or `None` when the words are representation-equal.
pub fn rep_compare(w1: &Word, w2: &Word, p: u64) -> Result<Option<Mismatch>, RepError> {
    if w1.n() != w2.n() {
        return Err(RepError::StrandMismatch {
            left: w1.n(),
            right: w2.n(),
        });
    }
    let ring = CycRing::new(p).map_err(|_| RepError::NotPrime(p))?;
    let a = normalize_to(w1, TargetAlphabet::Fusing);
    let b = normalize_to(w2, TargetAlphabet::Fusing);
    for state in BasisState::enumerate(p, w1.n())? {
        let ia = eval_fusing(a.letters(), &ring, &state);
        let ib = eval_fusing(b.letters(), &ring, &state);
        if ia != ib {
            return Ok(Some(Mismatch {
                state,
                lhs_image: ia,
                rhs_image: ib,
            }));
        }
    }
    Ok(None)
}

/// Exact fingerprint equality over all p^n basis states.
pub fn rep_equal(w1: &Word, w2: &Word, p: u64) -> Result<bool, RepError> {
    Ok(rep_compare(w1, w2, p)?.is_none())
}

/// One failed relation instance inside a verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationFailure {
    pub family: &'static str,
    pub params: String,
    pub mismatch: Mismatch,
}

/// Per-family outcome of verifying a catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyResult {
    pub family: &'static str,
    pub instances: usize,
    pub failures: Vec<RelationFailure>,
}

/// Outcome of verifying every relation instance of a catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub catalog: String,
    pub n: usize,
    pub p: u64,
    pub families: Vec<FamilyResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(|f| f.failures.is_empty())
    }

    pub fn instances(&self) -> usize {
        self.families.iter().map(|f| f.instances).sum()
    }
}

/// Checks one relation, normalized to the standard alphabet on both sides.
pub fn verify_relation(rel: &Relation, p: u64) -> Result<Option<RelationFailure>, RepError> {
    let lhs = normalize_to(&rel.lhs, TargetAlphabet::Standard);
    let rhs = normalize_to(&rel.rhs, TargetAlphabet::Standard);
    Ok(rep_compare(&lhs, &rhs, p)?.map(|mismatch| RelationFailure {
        family: rel.family,
        params: rel.params.clone(),
        mismatch,
    }))
}

/// Verifies every instantiated relation of `catalog` at strand count `n`
/// under the representation at prime `p`.
pub fn verify_relations(
    catalog: &PresentationCatalog,
    n: usize,
    p: u64,
) -> Result<VerificationReport, RepError> {
    verify_relations_parallel(catalog, n, p, 1)
}

/// Same as [`verify_relations`] but splitting the relation list across
/// `threads` workers. Results are merged in enumeration order, so the
/// report is identical for every thread count.
pub fn verify_relations_parallel(
    catalog: &PresentationCatalog,
    n: usize,
    p: u64,
    threads: usize,
) -> Result<VerificationReport, RepError> {
    if !is_prime(p) {
        return Err(RepError::NotPrime(p));
    }
    let relations = catalog.instantiate(n);
    let threads = threads.max(1).min(relations.len().max(1));
    let outcomes: Vec<Option<RelationFailure>> = if threads <= 1 || relations.is_empty() {
        relations
            .iter()
            .map(|r| verify_relation(r, p))
            .collect::<Result<_, _>>()?
    } else {
        let chunk = relations.len().div_ceil(threads);
        let mut collected: Vec<Result<Vec<Option<RelationFailure>>, RepError>> = Vec::new();
        thread::scope(|scope| {
            let handles: Vec<_> = relations
                .chunks(chunk)
                .map(|part| {
                    scope.spawn(move || {
                        part.iter()
                            .map(|r| verify_relation(r, p))
                            .collect::<Result<Vec<_>, _>>()
                    })
                })
                .collect();
            for h in handles {
                collected.push(h.join().expect("verification worker panicked"));
            }
        });
        let mut flat = Vec::with_capacity(relations.len());
        for part in collected {
            flat.extend(part?);
        }
        flat
    };

    let mut families: Vec<FamilyResult> = Vec::new();
    for (rel, outcome) in relations.iter().zip(outcomes) {
        if families.last().map(|f| f.family) != Some(rel.family) {
            families.push(FamilyResult {
                family: rel.family,
                instances: 0,
                failures: Vec::new(),
            });
        }
        let entry = families.last_mut().expect("family entry exists");
        entry.instances += 1;
        if let Some(failure) = outcome {
            entry.failures.push(failure);
        }
    }
    Ok(VerificationReport {
        catalog: catalog.name.to_string(),
        n,
        p,
        families,
    })
}

/// One of the seven operator conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionResult {
    pub index: u8,
    pub description: &'static str,
    pub passed: bool,
}

/// Outcome of checking the seven operator conditions at prime `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorConditionReport {
    pub p: u64,
    pub conditions: Vec<ConditionResult>,
}

impl OperatorConditionReport {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|c| c.passed)
    }
}

/// Checks the seven conditions that make T, R, S generate a representation:
/// invertibility and the braid/mixed-braid identities on two or three
/// tensor factors, exactly, over every basis state.
///
/// Conditions 5 and 7 are additionally checked against their closed-form
/// images: both sides of 5 act as the scalar ξ^{kl}ξ^{km}ξ^{lm} with the
/// state fixed, and both sides of 7 send (k, l) to
/// ξ^{kl}(ξ^{kl} + ξ^{-kl}) at the swapped state.
pub fn verify_operator_conditions(p: u64) -> Result<OperatorConditionReport, RepError> {
    let ring = CycRing::new(p).map_err(|_| RepError::NotPrime(p))?;
    let word = |n: usize, letters: Vec<Generator>| Word::new(n, letters).expect("operator word");
    use Generator::{Gamma, Mu, MuInv, V};

    let pairs_equal = |lhs: &Word, rhs: &Word| -> Result<bool, RepError> {
        rep_equal(lhs, rhs, p)
    };

    let mut conditions = Vec::new();

    // 1: T² = id, T and R invertible.
    let c1 = pairs_equal(&word(2, vec![V(1), V(1)]), &Word::identity(2))?
        && pairs_equal(&word(2, vec![Mu(1), MuInv(1)]), &Word::identity(2))?
        && pairs_equal(&word(2, vec![MuInv(1), Mu(1)]), &Word::identity(2))?;
    conditions.push(ConditionResult {
        index: 1,
        description: "T and R invertible, T^2 = id",
        passed: c1,
    });

    // 2: T12 T23 T12 = T23 T12 T23.
    let c2 = pairs_equal(
        &word(3, vec![V(1), V(2), V(1)]),
        &word(3, vec![V(2), V(1), V(2)]),
    )?;
    conditions.push(ConditionResult {
        index: 2,
        description: "T12 T23 T12 = T23 T12 T23",
        passed: c2,
    });

    // 3: T12 R23 T12 = T23 R12 T23.
    let c3 = pairs_equal(
        &word(3, vec![V(1), Mu(2), V(1)]),
        &word(3, vec![V(2), Mu(1), V(2)]),
    )?;
    conditions.push(ConditionResult {
        index: 3,
        description: "T12 R23 T12 = T23 R12 T23",
        passed: c3,
    });

    // 4: T12 S23 T12 = T23 S12 T23.
    let c4 = pairs_equal(
        &word(3, vec![V(1), Gamma(2), V(1)]),
        &word(3, vec![V(2), Gamma(1), V(2)]),
    )?;
    conditions.push(ConditionResult {
        index: 4,
        description: "T12 S23 T12 = T23 S12 T23",
        passed: c4,
    });

    // 5: R23 R13 R12 = R12 R13 R23 with R13 = T23 R12 T23 — the algebraic
    // Yang-Baxter equation.
    let lhs5 = word(3, vec![Mu(2), V(2), Mu(1), V(2), Mu(1)]);
    let rhs5 = word(3, vec![Mu(1), V(2), Mu(1), V(2), Mu(2)]);
    let mut c5 = pairs_equal(&lhs5, &rhs5)?;
    for state in BasisState::enumerate(p, 3)? {
        let (k, l, m) = (state.entries[0], state.entries[1], state.entries[2]);
        let e = mod_product(k, l, p) + mod_product(k, m, p) + mod_product(l, m, p);
        let expected = MonomialImage {
            scalar: ring.from_power(e),
            state: state.clone(),
        };
        c5 &= apply_word(&lhs5, &state)? == expected && apply_word(&rhs5, &state)? == expected;
    }
    conditions.push(ConditionResult {
        index: 5,
        description: "R12 R13 R23 = R23 R13 R12 (Yang-Baxter), scalar xi^{kl} xi^{km} xi^{lm}",
        passed: c5,
    });

    // 6: same with one S factor.
    let lhs6 = word(3, vec![Mu(2), V(2), Mu(1), V(2), Gamma(1)]);
    let rhs6 = word(3, vec![Gamma(1), V(2), Mu(1), V(2), Mu(2)]);
    let mut c6 = pairs_equal(&lhs6, &rhs6)?;
    for state in BasisState::enumerate(p, 3)? {
        let (k, l, m) = (state.entries[0], state.entries[1], state.entries[2]);
        let e = mod_product(k, m, p) + mod_product(l, m, p);
        let scalar = ring.mul_by_power(&ring.plus_inverse_power(mod_product(k, l, p)), e);
        let expected = MonomialImage {
            scalar,
            state: state.clone(),
        };
        c6 &= apply_word(&lhs6, &state)? == expected;
    }
    conditions.push(ConditionResult {
        index: 6,
        description: "mixed Yang-Baxter with S, scalar (xi^{kl}+xi^{-kl}) xi^{km} xi^{lm}",
        passed: c6,
    });

    // 7: R T S = S T R, image xi^{kl}(xi^{kl}+xi^{-kl}) at the swapped state.
    let lhs7 = word(2, vec![Mu(1), V(1), Gamma(1)]);
    let rhs7 = word(2, vec![Gamma(1), V(1), Mu(1)]);
    let mut c7 = pairs_equal(&lhs7, &rhs7)?;
    for state in BasisState::enumerate(p, 2)? {
        let (k, l) = (state.entries[0], state.entries[1]);
        let e = mod_product(k, l, p);
        let scalar = ring.mul_by_power(&ring.plus_inverse_power(e), e);
        let expected = MonomialImage {
            scalar,
            state: BasisState::new(p, vec![l, k])?,
        };
        c7 &= apply_word(&lhs7, &state)? == expected && apply_word(&rhs7, &state)? == expected;
    }
    conditions.push(ConditionResult {
        index: 7,
        description: "R T S = S T R, image xi^{kl}(xi^{kl}+xi^{-kl}) at swapped state",
        passed: c7,
    });

    Ok(OperatorConditionReport { p, conditions })
}

/// Sanity hook used by tests: the state component of any image is the
/// permutation of the word applied to the input positions.
pub fn permuted_state(w: &Word, b: &BasisState) -> BasisState {
    let perm = permutation_of(w);
    let mut entries = vec![0u64; b.len()];
    for (pos, &value) in b.entries.iter().enumerate() {
        entries[perm.apply(pos + 1) - 1] = value;
    }
    BasisState {
        p: b.p,
        entries,
    }
}
