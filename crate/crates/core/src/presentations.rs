//! The presentation catalogs: every named relation family of the standard,
//! reduced-standard, fusing, reduced-fusing and pure presentations,
//! instantiable for any strand count.
//!
//! Relations are stored directed lhs → rhs exactly as printed; the
//! equivalence engine treats them bidirectionally. Double equalities
//! (`x x⁻¹ = x⁻¹ x = 1_n`) are emitted as two relations against the
//! identity word. Families whose index constraints cannot be met at a
//! given n simply produce zero instances.
//!
//! The commuting families are enumerated over the kind sets exactly as
//! printed; commutation of the inverse letters (σ⁻¹, μ⁻¹) follows from the
//! identity relations but is not printed, so it is added as a separate
//! derived family (`comm-inv`, `mn-comm-inv`).

use std::fmt;
use std::str::FromStr;

use crate::morphisms::permutation_of;
use crate::words::{Generator, Word};

/// An equality of two words, tagged with the family that produced it and
/// the index assignment used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub family: &'static str,
    pub params: String,
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    fn new(family: &'static str, params: String, lhs: Word, rhs: Word) -> Relation {
        debug_assert_eq!(lhs.n(), rhs.n());
        debug_assert_eq!(
            permutation_of(&lhs),
            permutation_of(&rhs),
            "relation {family} [{params}] does not preserve the permutation"
        );
        Relation {
            family,
            params,
            lhs,
            rhs,
        }
    }
}

/// The five catalogs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogName {
    Standard,
    ReducedStandard,
    Fusing,
    ReducedFusing,
    Pure,
}

impl CatalogName {
    pub const ALL: [CatalogName; 5] = [
        CatalogName::Standard,
        CatalogName::ReducedStandard,
        CatalogName::Fusing,
        CatalogName::ReducedFusing,
        CatalogName::Pure,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::Standard => "standard",
            CatalogName::ReducedStandard => "reduced-standard",
            CatalogName::Fusing => "fusing",
            CatalogName::ReducedFusing => "reduced-fusing",
            CatalogName::Pure => "pure",
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "standard" => Ok(CatalogName::Standard),
            "reduced-standard" => Ok(CatalogName::ReducedStandard),
            "fusing" => Ok(CatalogName::Fusing),
            "reduced-fusing" => Ok(CatalogName::ReducedFusing),
            "pure" => Ok(CatalogName::Pure),
            other => Err(format!(
                "unknown catalog `{other}` (expected standard, reduced-standard, fusing, reduced-fusing or pure)"
            )),
        }
    }
}

/// A named presentation: an alphabet plus relation families parameterized
/// by the strand count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PresentationCatalog {
    pub name: CatalogName,
}

/// Convenience constructor.
pub fn catalog(name: CatalogName) -> PresentationCatalog {
    PresentationCatalog { name }
}

/// Free-function form of [`PresentationCatalog::instantiate`].
pub fn instantiate_relations(catalog: &PresentationCatalog, n: usize) -> Vec<Relation> {
    catalog.instantiate(n)
}

impl PresentationCatalog {
    /// Membership of a letter in the catalog's generator set.
    pub fn allows(&self, g: Generator) -> bool {
        match self.name {
            CatalogName::Standard => g.is_standard(),
            CatalogName::ReducedStandard => matches!(
                g,
                Generator::V(_) | Generator::Sigma(1) | Generator::SigmaInv(1) | Generator::Tau(1)
            ),
            CatalogName::Fusing => g.is_fusing(),
            CatalogName::ReducedFusing => matches!(
                g,
                Generator::V(_) | Generator::Mu(1) | Generator::MuInv(1) | Generator::Gamma(1)
            ),
            CatalogName::Pure => g.is_generalized(),
        }
    }

    pub fn allows_word(&self, w: &Word) -> bool {
        w.letters().iter().all(|&g| self.allows(g))
    }

    /// Every relation instance for strand count `n`, in a deterministic
    /// enumeration order.
    pub fn instantiate(&self, n: usize) -> Vec<Relation> {
        assert!(n >= 2, "strand count must be at least 2");
        match self.name {
            CatalogName::Standard => standard_relations(n),
            CatalogName::ReducedStandard => reduced_standard_relations(n),
            CatalogName::Fusing => fusing_relations(n),
            CatalogName::ReducedFusing => reduced_fusing_relations(n),
            CatalogName::Pure => pure_relations(n),
        }
    }
}

// Letter shorthands for the builders.
use Generator::{GGamma, GMu, GMuInv, Gamma, Mu, MuInv, Sigma, SigmaInv, Tau, V};

// A single-index letter constructor paired with its grammar character.
type Kind = (fn(usize) -> Generator, char);

fn rel(
    out: &mut Vec<Relation>,
    family: &'static str,
    params: String,
    n: usize,
    lhs: Vec<Generator>,
    rhs: Vec<Generator>,
) {
    let lhs = Word::new(n, lhs).expect("catalog word in range");
    let rhs = Word::new(n, rhs).expect("catalog word in range");
    out.push(Relation::new(family, params, lhs, rhs));
}

// Ordered pairs (i, j) with |i - j| = 1 over 1..=m.
fn adjacent_pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=m).flat_map(move |i| {
        (1..=m)
            .filter(move |&j| i.abs_diff(j) == 1)
            .map(move |j| (i, j))
    })
}

// Ordered pairs (i, j) with |i - j| > 1 over 1..=m.
fn distant_pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=m).flat_map(move |i| {
        (1..=m)
            .filter(move |&j| i.abs_diff(j) > 1)
            .map(move |j| (i, j))
    })
}

fn standard_relations(n: usize) -> Vec<Relation> {
    let m = n - 1;
    let mut out = Vec::new();
    for i in 1..=m {
        rel(&mut out, "R2", format!("i={i}"), n, vec![Sigma(i), SigmaInv(i)], vec![]);
        rel(&mut out, "R2", format!("i={i}"), n, vec![SigmaInv(i), Sigma(i)], vec![]);
    }
    for i in 1..=m {
        rel(&mut out, "V2", format!("i={i}"), n, vec![V(i), V(i)], vec![]);
    }
    for (i, j) in adjacent_pairs(m) {
        rel(
            &mut out,
            "R3",
            format!("i={i} j={j}"),
            n,
            vec![Sigma(i), Sigma(j), Sigma(i)],
            vec![Sigma(j), Sigma(i), Sigma(j)],
        );
    }
    for (i, j) in adjacent_pairs(m) {
        rel(
            &mut out,
            "V3",
            format!("i={i} j={j}"),
            n,
            vec![V(i), V(j), V(i)],
            vec![V(j), V(i), V(j)],
        );
    }
    for (i, j) in adjacent_pairs(m) {
        rel(
            &mut out,
            "VR3",
            format!("i={i} j={j}"),
            n,
            vec![V(i), Sigma(j), V(i)],
            vec![V(j), Sigma(i), V(j)],
        );
    }
    for (i, j) in adjacent_pairs(m) {
        rel(
            &mut out,
            "VS3",
            format!("i={i} j={j}"),
            n,
            vec![V(i), Tau(j), V(i)],
            vec![V(j), Tau(i), V(j)],
        );
    }
    for (i, j) in adjacent_pairs(m) {
        rel(
            &mut out,
            "RS3",
            format!("i={i} j={j}"),
            n,
            vec![Sigma(i), Sigma(j), Tau(i)],
            vec![Tau(j), Sigma(i), Sigma(j)],
        );
    }
    for i in 1..=m {
        rel(
            &mut out,
            "RS1",
            format!("i={i}"),
            n,
            vec![Sigma(i), Tau(i)],
            vec![Tau(i), Sigma(i)],
        );
    }
    let base: [Kind; 3] = [(Sigma, 's'), (Tau, 't'), (V, 'v')];
    for (i, j) in distant_pairs(m) {
        for &(g, gc) in &base {
            for &(h, hc) in &base {
                rel(
                    &mut out,
                    "comm",
                    format!("i={i} j={j} g={gc} h={hc}"),
                    n,
                    vec![g(i), h(j)],
                    vec![h(j), g(i)],
                );
            }
        }
    }
    let full: [Kind; 4] = [(Sigma, 's'), (SigmaInv, 'S'), (Tau, 't'), (V, 'v')];
    for (i, j) in distant_pairs(m) {
        for &(g, gc) in &full {
            for &(h, hc) in &full {
                if gc != 'S' && hc != 'S' {
                    continue;
                }
                rel(
                    &mut out,
                    "comm-inv",
                    format!("i={i} j={j} g={gc} h={hc}"),
                    n,
                    vec![g(i), h(j)],
                    vec![h(j), g(i)],
                );
            }
        }
    }
    out
}

fn reduced_standard_relations(n: usize) -> Vec<Relation> {
    let m = n - 1;
    let mut out = Vec::new();
    for i in 1..=m {
        rel(&mut out, "red-1", format!("i={i}"), n, vec![V(i), V(i)], vec![]);
    }
    rel(&mut out, "red-2", "".into(), n, vec![Sigma(1), SigmaInv(1)], vec![]);
    rel(&mut out, "red-2", "".into(), n, vec![SigmaInv(1), Sigma(1)], vec![]);
    rel(
        &mut out,
        "red-3",
        "".into(),
        n,
        vec![Sigma(1), Tau(1)],
        vec![Tau(1), Sigma(1)],
    );
    for (i, j) in adjacent_pairs(m) {
        rel(
            &mut out,
            "red-4",
            format!("i={i} j={j}"),
            n,
            vec![V(i), V(j), V(i)],
            vec![V(j), V(i), V(j)],
        );
    }
    if n >= 3 {
        // d2(x) is the detoured subscript-2 letter v1 v2 x1 v2 v1.
        let d2 = |x: Generator| vec![V(1), V(2), x, V(2), V(1)];
        let mut lhs = vec![Sigma(1)];
        lhs.extend(d2(Sigma(1)));
        lhs.push(Sigma(1));
        let mut rhs = d2(Sigma(1));
        rhs.push(Sigma(1));
        rhs.extend(d2(Sigma(1)));
        rel(&mut out, "red-5", "".into(), n, lhs, rhs);

        let mut lhs = vec![Tau(1)];
        lhs.extend(d2(Sigma(1)));
        lhs.push(Sigma(1));
        let mut rhs = d2(Sigma(1));
        rhs.push(Sigma(1));
        rhs.extend(d2(Tau(1)));
        rel(&mut out, "red-6", "".into(), n, lhs, rhs);
    }
    for i in 3..=m {
        rel(
            &mut out,
            "red-7",
            format!("i={i}"),
            n,
            vec![Tau(1), V(i)],
            vec![V(i), Tau(1)],
        );
        rel(
            &mut out,
            "red-7",
            format!("i={i}"),
            n,
            vec![Sigma(1), V(i)],
            vec![V(i), Sigma(1)],
        );
    }
    for (i, j) in distant_pairs(m) {
        rel(
            &mut out,
            "red-8",
            format!("i={i} j={j}"),
            n,
            vec![V(i), V(j)],
            vec![V(j), V(i)],
        );
    }
    if n >= 4 {
        // d3(x) is the detoured subscript-3 letter v2 v1 v3 v2 x1 v2 v3 v1 v2.
        let d3 = |x: Generator| vec![V(2), V(1), V(3), V(2), x, V(2), V(3), V(1), V(2)];
        for (family, outer, core) in [
            ("red-9", Tau(1), Tau(1)),
            ("red-10", Tau(1), Sigma(1)),
            ("red-11", Sigma(1), Sigma(1)),
        ] {
            let mut lhs = vec![outer];
            lhs.extend(d3(core));
            let mut rhs = d3(core);
            rhs.push(outer);
            rel(&mut out, family, "".into(), n, lhs, rhs);
        }
    }
    out
}

fn fusing_relations(n: usize) -> Vec<Relation> {
    let m = n - 1;
    let mut out = Vec::new();
    for i in 1..=m {
        rel(&mut out, "mn-id-v", format!("i={i}"), n, vec![V(i), V(i)], vec![]);
    }
    for i in 1..=m {
        rel(&mut out, "mn-id-mu", format!("i={i}"), n, vec![Mu(i), MuInv(i)], vec![]);
        rel(&mut out, "mn-id-mu", format!("i={i}"), n, vec![MuInv(i), Mu(i)], vec![]);
    }
    for (i, j) in adjacent_pairs(m) {
        rel(
            &mut out,
            "mn-v3",
            format!("i={i} j={j}"),
            n,
            vec![V(i), V(j), V(i)],
            vec![V(j), V(i), V(j)],
        );
    }
    for (i, j) in adjacent_pairs(m) {
        rel(
            &mut out,
            "mn-vr3",
            format!("i={i} j={j}"),
            n,
            vec![V(i), Mu(j), V(i)],
            vec![V(j), Mu(i), V(j)],
        );
    }
    for (i, j) in adjacent_pairs(m) {
        rel(
            &mut out,
            "mn-vs3",
            format!("i={i} j={j}"),
            n,
            vec![V(i), Gamma(j), V(i)],
            vec![V(j), Gamma(i), V(j)],
        );
    }
    for (i, j) in adjacent_pairs(m) {
        rel(
            &mut out,
            "mn-r3",
            format!("i={i} j={j}"),
            n,
            vec![Mu(j), V(j), Mu(i), V(j), Mu(i)],
            vec![Mu(i), V(j), Mu(i), V(j), Mu(j)],
        );
    }
    for (i, j) in adjacent_pairs(m) {
        rel(
            &mut out,
            "mn-rs3",
            format!("i={i} j={j}"),
            n,
            vec![Mu(j), V(j), Mu(i), V(j), Gamma(i)],
            vec![Gamma(i), V(j), Mu(i), V(j), Mu(j)],
        );
    }
    for i in 1..=m {
        rel(
            &mut out,
            "mn-twist",
            format!("i={i}"),
            n,
            vec![Mu(i), V(i), Gamma(i)],
            vec![Gamma(i), V(i), Mu(i)],
        );
    }
    let base: [Kind; 3] = [(Mu, 'u'), (Gamma, 'g'), (V, 'v')];
    for (i, j) in distant_pairs(m) {
        for &(a, ac) in &base {
            for &(b, bc) in &base {
                rel(
                    &mut out,
                    "mn-comm",
                    format!("i={i} j={j} a={ac} b={bc}"),
                    n,
                    vec![a(i), b(j)],
                    vec![b(j), a(i)],
                );
            }
        }
    }
    let full: [Kind; 4] = [(Mu, 'u'), (MuInv, 'U'), (Gamma, 'g'), (V, 'v')];
    for (i, j) in distant_pairs(m) {
        for &(a, ac) in &full {
            for &(b, bc) in &full {
                if ac != 'U' && bc != 'U' {
                    continue;
                }
                rel(
                    &mut out,
                    "mn-comm-inv",
                    format!("i={i} j={j} a={ac} b={bc}"),
                    n,
                    vec![a(i), b(j)],
                    vec![b(j), a(i)],
                );
            }
        }
    }
    out
}

fn reduced_fusing_relations(n: usize) -> Vec<Relation> {
    let m = n - 1;
    let mut out = Vec::new();
    for i in 1..=m {
        rel(&mut out, "rmn-1-v", format!("i={i}"), n, vec![V(i), V(i)], vec![]);
    }
    rel(&mut out, "rmn-1-mu", "".into(), n, vec![Mu(1), MuInv(1)], vec![]);
    rel(&mut out, "rmn-1-mu", "".into(), n, vec![MuInv(1), Mu(1)], vec![]);
    for (i, j) in adjacent_pairs(m) {
        rel(
            &mut out,
            "rmn-2",
            format!("i={i} j={j}"),
            n,
            vec![V(i), V(j), V(i)],
            vec![V(j), V(i), V(j)],
        );
    }
    if n >= 3 {
        // μ_2 = v1 v2 μ_1 v2 v1 and v2 μ_1 v2 in place of the conjugated μ_1.
        let mu2 = [V(1), V(2), Mu(1), V(2), V(1)];
        let conj = [V(2), Mu(1), V(2)];
        for (family, last) in [("rmn-3", Mu(1)), ("rmn-4", Gamma(1))] {
            let mut lhs: Vec<Generator> = mu2.to_vec();
            lhs.extend(conj);
            lhs.push(last);
            let mut rhs = vec![last];
            rhs.extend(conj);
            rhs.extend(mu2);
            rel(&mut out, family, "".into(), n, lhs, rhs);
        }
    }
    rel(
        &mut out,
        "rmn-5",
        "".into(),
        n,
        vec![Mu(1), V(1), Gamma(1)],
        vec![Gamma(1), V(1), Mu(1)],
    );
    for (i, j) in distant_pairs(m) {
        rel(
            &mut out,
            "rmn-6",
            format!("i={i} j={j}"),
            n,
            vec![V(i), V(j)],
            vec![V(j), V(i)],
        );
    }
    for i in 3..=m {
        rel(
            &mut out,
            "rmn-7",
            format!("i={i}"),
            n,
            vec![Mu(1), V(i)],
            vec![V(i), Mu(1)],
        );
        rel(
            &mut out,
            "rmn-7",
            format!("i={i}"),
            n,
            vec![Gamma(1), V(i)],
            vec![V(i), Gamma(1)],
        );
    }
    if n >= 4 {
        let d3 = |x: Generator| vec![V(2), V(1), V(3), V(2), x, V(2), V(3), V(1), V(2)];
        for (family, outer, core) in [
            ("rmn-8", Gamma(1), Gamma(1)),
            ("rmn-9", Gamma(1), Mu(1)),
            ("rmn-10", Mu(1), Mu(1)),
        ] {
            let mut lhs = vec![outer];
            lhs.extend(d3(core));
            let mut rhs = d3(core);
            rhs.push(outer);
            rel(&mut out, family, "".into(), n, lhs, rhs);
        }
    }
    out
}

// Ordered tuples of pairwise-distinct indices from 1..=n.
fn distinct_tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn go(n: usize, len: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for x in 1..=n {
            if !current.contains(&x) {
                current.push(x);
                go(n, len, current, out);
                current.pop();
            }
        }
    }
    go(n, len, &mut current, &mut out);
    out
}

fn pure_relations(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for t in distinct_tuples(n, 2) {
        let (k, l) = (t[0], t[1]);
        rel(
            &mut out,
            "pure-inv",
            format!("k={k} l={l}"),
            n,
            vec![GMu(k, l), GMuInv(k, l)],
            vec![],
        );
        rel(
            &mut out,
            "pure-inv",
            format!("k={k} l={l}"),
            n,
            vec![GMuInv(k, l), GMu(k, l)],
            vec![],
        );
    }
    for t in distinct_tuples(n, 3) {
        let (i, j, k) = (t[0], t[1], t[2]);
        rel(
            &mut out,
            "pure-YB",
            format!("i={i} j={j} k={k}"),
            n,
            vec![GMu(i, j), GMu(i, k), GMu(j, k)],
            vec![GMu(j, k), GMu(i, k), GMu(i, j)],
        );
    }
    for t in distinct_tuples(n, 3) {
        let (i, j, k) = (t[0], t[1], t[2]);
        rel(
            &mut out,
            "pure-YB-mixt",
            format!("i={i} j={j} k={k}"),
            n,
            vec![GMu(i, j), GMu(i, k), GGamma(j, k)],
            vec![GGamma(j, k), GMu(i, k), GMu(i, j)],
        );
    }
    for t in distinct_tuples(n, 3) {
        let (i, j, k) = (t[0], t[1], t[2]);
        rel(
            &mut out,
            "pure-YB-mixt2",
            format!("i={i} j={j} k={k}"),
            n,
            vec![GGamma(i, j), GMu(i, k), GMu(j, k)],
            vec![GMu(j, k), GMu(i, k), GGamma(i, j)],
        );
    }
    for t in distinct_tuples(n, 2) {
        let (k, l) = (t[0], t[1]);
        rel(
            &mut out,
            "pure-twist",
            format!("k={k} l={l}"),
            n,
            vec![GMu(k, l), GGamma(l, k)],
            vec![GGamma(k, l), GMu(l, k)],
        );
    }
    for t in distinct_tuples(n, 4) {
        let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
        rel(
            &mut out,
            "pure-comm-mu",
            format!("i={i} j={j} k={k} l={l}"),
            n,
            vec![GMu(i, j), GMu(k, l)],
            vec![GMu(k, l), GMu(i, j)],
        );
    }
    for t in distinct_tuples(n, 4) {
        let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
        rel(
            &mut out,
            "pure-comm-gamma",
            format!("i={i} j={j} k={k} l={l}"),
            n,
            vec![GGamma(i, j), GGamma(k, l)],
            vec![GGamma(k, l), GGamma(i, j)],
        );
    }
    for t in distinct_tuples(n, 4) {
        let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
        rel(
            &mut out,
            "pure-comm-mixt",
            format!("i={i} j={j} k={k} l={l}"),
            n,
            vec![GMu(i, j), GGamma(k, l)],
            vec![GGamma(k, l), GMu(i, j)],
        );
    }
    out
}
