//! Bounded bidirectional search for word equality in a chosen presentation.
//!
//! States are free-reduced words; every edge records the catalog relation
//! applied plus the identity-relation applications performed by the
//! reduction, so an `Equivalent` verdict always carries a trace that
//! replays exactly from the first word to the second. `Unknown` only
//! reports an exhausted budget — negative certificates come from the
//! representation fingerprints, never from here.

use std::collections::HashMap;

use thiserror::Error;

use crate::presentations::{PresentationCatalog, Relation};
use crate::words::{Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("letter {letter} is not in the {catalog} alphabet")]
    AlphabetMismatch { letter: String, catalog: String },
    #[error("relation {family} [{params}] does not match at position {pos}")]
    NoMatch {
        family: String,
        params: String,
        pos: usize,
    },
}

/// Which side of a relation is matched and replaced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Replace an occurrence of the lhs by the rhs.
    Forward,
    /// Replace an occurrence of the rhs by the lhs.
    Backward,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// One relation application: which relation, at which letter offset, in
/// which direction. Applying the step at the position reproduces the
/// successor word exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub relation: Relation,
    pub position: usize,
    pub direction: Direction,
}

/// Replaces the occurrence of one side of `rel` at `pos` by the other side.
pub fn apply_relation_at(
    w: &Word,
    rel: &Relation,
    pos: usize,
    dir: Direction,
) -> Result<Word, EquivalenceError> {
    if w.n() != rel.lhs.n() {
        return Err(EquivalenceError::StrandMismatch {
            left: w.n(),
            right: rel.lhs.n(),
        });
    }
    let (src, dst) = match dir {
        Direction::Forward => (&rel.lhs, &rel.rhs),
        Direction::Backward => (&rel.rhs, &rel.lhs),
    };
    let no_match = || EquivalenceError::NoMatch {
        family: rel.family.to_string(),
        params: rel.params.clone(),
        pos,
    };
    if pos + src.len() > w.len() {
        return Err(no_match());
    }
    if &w.letters()[pos..pos + src.len()] != src.letters() {
        return Err(no_match());
    }
    let mut letters = Vec::with_capacity(w.len() - src.len() + dst.len());
    letters.extend_from_slice(&w.letters()[..pos]);
    letters.extend_from_slice(dst.letters());
    letters.extend_from_slice(&w.letters()[pos + src.len()..]);
    Ok(Word::new(w.n(), letters).expect("replacement stays in range"))
}

/// Folds [`apply_relation_at`] over a trace.
pub fn replay(w: &Word, steps: &[RewriteStep]) -> Result<Word, EquivalenceError> {
    let mut current = w.clone();
    for step in steps {
        current = apply_relation_at(&current, &step.relation, step.position, step.direction)?;
    }
    Ok(current)
}

/// A trace valid from w2 to w1: the reversed steps with flipped directions.
pub fn reversed_trace(steps: &[RewriteStep]) -> Vec<RewriteStep> {
    steps
        .iter()
        .rev()
        .map(|s| RewriteStep {
            relation: s.relation.clone(),
            position: s.position,
            direction: s.direction.flipped(),
        })
        .collect()
}

/// Search limits. `max_depth` bounds the total number of catalog-relation
/// edges on the connecting path (reduction steps inside an edge are free);
/// `max_length` defaults to `max(|w1|, |w2|) + 8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_depth: usize,
    pub max_states: usize,
    pub max_length: Option<usize>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_depth: 8,
            max_states: 200_000,
            max_length: None,
        }
    }
}

/// Budget-exhaustion statistics attached to an `Unknown` verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub states: usize,
    pub depth_reached: usize,
    pub frontier_exhausted: bool,
}

/// Outcome of the search. `Equivalent` verdicts are always correct;
/// `Unknown` is inconclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equivalent(Vec<RewriteStep>),
    Unknown(SearchStats),
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::Equivalent(_))
    }
}

// Lookup of identity relations by their two-letter redex, used to record
// free reductions as explicit relation applications.
struct Cancellers {
    by_pair: HashMap<(Generator, Generator), Relation>,
}

impl Cancellers {
    fn new(relations: &[Relation]) -> Cancellers {
        let mut by_pair = HashMap::new();
        for rel in relations {
            if rel.rhs.is_empty() && rel.lhs.len() == 2 {
                let (a, b) = (rel.lhs.letters()[0], rel.lhs.letters()[1]);
                if a.cancels(b) {
                    by_pair.entry((a, b)).or_insert_with(|| rel.clone());
                }
            }
        }
        Cancellers { by_pair }
    }

    // Deletes leftmost cancelling pairs covered by the catalog until none
    // remain, recording one forward step per deletion.
    fn reduce(&self, w: &Word, steps: &mut Vec<RewriteStep>) -> Word {
        let mut current = w.clone();
        'outer: loop {
            let letters = current.letters();
            for pos in 0..letters.len().saturating_sub(1) {
                let pair = (letters[pos], letters[pos + 1]);
                if let Some(rel) = self.by_pair.get(&pair) {
                    let step = RewriteStep {
                        relation: rel.clone(),
                        position: pos,
                        direction: Direction::Forward,
                    };
                    current = apply_relation_at(&current, rel, pos, Direction::Forward)
                        .expect("redex matched");
                    steps.push(step);
                    continue 'outer;
                }
            }
            return current;
        }
    }
}

struct Node {
    word: Word,
    parent: Option<(usize, Vec<RewriteStep>)>,
}

enum Expansion {
    Frontier(Vec<usize>),
    // New node on the expanding side, matching node on the other side.
    Meet(usize, usize),
}

struct Search {
    relations: Vec<Relation>,
    cancellers: Cancellers,
    nodes: Vec<Node>,
    visited: [HashMap<Word, usize>; 2],
    max_length: usize,
}

impl Search {
    fn path_from_root(&self, mut id: usize) -> Vec<RewriteStep> {
        let mut segments = Vec::new();
        while let Some((parent, steps)) = &self.nodes[id].parent {
            segments.push(steps.clone());
            id = *parent;
        }
        segments.reverse();
        segments.into_iter().flatten().collect()
    }

    // Expands one BFS layer on `side`; stops early when a state already
    // known to the other side is generated.
    fn expand(
        &mut self,
        side: usize,
        frontier: &[usize],
        max_states: usize,
    ) -> Expansion {
        let mut next = Vec::new();
        for &node_id in frontier {
            let word = self.nodes[node_id].word.clone();
            for rel_idx in 0..self.relations.len() {
                for dir in [Direction::Forward, Direction::Backward] {
                    // Inserting an invertible pair (backward identity
                    // relation) reduces straight back to the same state.
                    if dir == Direction::Backward && self.relations[rel_idx].rhs.is_empty() {
                        continue;
                    }
                    let src_len = match dir {
                        Direction::Forward => self.relations[rel_idx].lhs.len(),
                        Direction::Backward => self.relations[rel_idx].rhs.len(),
                    };
                    if src_len > word.len() {
                        continue;
                    }
                    for pos in 0..=word.len() - src_len {
                        let rel = &self.relations[rel_idx];
                        let Ok(candidate) = apply_relation_at(&word, rel, pos, dir) else {
                            continue;
                        };
                        let mut steps = vec![RewriteStep {
                            relation: rel.clone(),
                            position: pos,
                            direction: dir,
                        }];
                        let reduced = self.cancellers.reduce(&candidate, &mut steps);
                        if reduced.len() > self.max_length {
                            continue;
                        }
                        if self.visited[side].contains_key(&reduced) {
                            continue;
                        }
                        let id = self.nodes.len();
                        self.nodes.push(Node {
                            word: reduced.clone(),
                            parent: Some((node_id, steps)),
                        });
                        self.visited[side].insert(reduced.clone(), id);
                        if let Some(&other_id) = self.visited[1 - side].get(&reduced) {
                            return Expansion::Meet(id, other_id);
                        }
                        next.push(id);
                        if self.nodes.len() >= max_states {
                            return Expansion::Frontier(Vec::new());
                        }
                    }
                }
            }
        }
        Expansion::Frontier(next)
    }
}

/// Bidirectional breadth-first search from both endpoints over
/// free-reduced states. Frontiers alternate so that every connecting path
/// with at most `max_depth` relation edges is found.
pub fn search_equivalent(
    w1: &Word,
    w2: &Word,
    catalog: &PresentationCatalog,
    budget: SearchBudget,
) -> Result<Verdict, EquivalenceError> {
    if w1.n() != w2.n() {
        return Err(EquivalenceError::StrandMismatch {
            left: w1.n(),
            right: w2.n(),
        });
    }
    for word in [w1, w2] {
        for &g in word.letters() {
            if !catalog.allows(g) {
                return Err(EquivalenceError::AlphabetMismatch {
                    letter: g.to_string(),
                    catalog: catalog.name.to_string(),
                });
            }
        }
    }
    if w1 == w2 {
        return Ok(Verdict::Equivalent(Vec::new()));
    }

    let relations = catalog.instantiate(w1.n());
    let cancellers = Cancellers::new(&relations);
    let max_length = budget
        .max_length
        .unwrap_or_else(|| w1.len().max(w2.len()) + 8);

    let mut w1_reduction = Vec::new();
    let r1 = cancellers.reduce(w1, &mut w1_reduction);
    let mut w2_reduction = Vec::new();
    let r2 = cancellers.reduce(w2, &mut w2_reduction);

    if r1 == r2 {
        let mut trace = w1_reduction;
        trace.extend(reversed_trace(&w2_reduction));
        return Ok(Verdict::Equivalent(trace));
    }

    let mut search = Search {
        relations,
        cancellers,
        nodes: vec![
            Node {
                word: r1.clone(),
                parent: None,
            },
            Node {
                word: r2.clone(),
                parent: None,
            },
        ],
        visited: [
            HashMap::from([(r1.clone(), 0usize)]),
            HashMap::from([(r2.clone(), 1usize)]),
        ],
        max_length,
    };

    let mut frontiers: [Vec<usize>; 2] = [vec![0], vec![1]];
    let mut depths = [0usize, 0usize];

    loop {
        if depths[0] + depths[1] >= budget.max_depth
            || search.nodes.len() >= budget.max_states
            || (frontiers[0].is_empty() && frontiers[1].is_empty())
        {
            return Ok(Verdict::Unknown(SearchStats {
                states: search.nodes.len(),
                depth_reached: depths[0] + depths[1],
                frontier_exhausted: frontiers[0].is_empty() && frontiers[1].is_empty(),
            }));
        }
        let side = if frontiers[0].is_empty() {
            1
        } else if frontiers[1].is_empty() || depths[0] <= depths[1] {
            0
        } else {
            1
        };
        let frontier = std::mem::take(&mut frontiers[side]);
        match search.expand(side, &frontier, budget.max_states) {
            Expansion::Frontier(mut next) => {
                // Tie-break the next layer by (length, lexicographic letter
                // order) so traces are deterministic.
                next.sort_by(|&a, &b| {
                    let (wa, wb) = (&search.nodes[a].word, &search.nodes[b].word);
                    wa.len().cmp(&wb.len()).then_with(|| wa.letters().cmp(wb.letters()))
                });
                frontiers[side] = next;
                depths[side] += 1;
            }
            Expansion::Meet(meet_new, meet_other) => {
                let (id1, id2) = if side == 0 {
                    (meet_new, meet_other)
                } else {
                    (meet_other, meet_new)
                };
                let mut trace = w1_reduction;
                trace.extend(search.path_from_root(id1));
                trace.extend(reversed_trace(&search.path_from_root(id2)));
                trace.extend(reversed_trace(&w2_reduction));
                return Ok(Verdict::Equivalent(trace));
            }
        }
    }
}
