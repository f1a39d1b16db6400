//! Bounded bidirectional search for a move sequence relating two pairs.
//!
//! Destabilizations are deliberately not first-class moves: recognizing a
//! stabilized pattern up to group equality is a conjugacy-type problem.
//! Searching forward from both endpoints sidesteps it, since an inverse
//! move from one side is a forward move from the other. Traces therefore
//! record a direction per step, and verification replays forward steps from
//! the start and backward steps from the claimed endpoint until the two
//! chains meet.
//!
//! The search is bounded and incomplete: conjugating words are enumerated
//! only as products of single generators up to a length cap, and strand
//! counts and node counts are capped. `NotFoundWithinBudget` never asserts
//! that the pairs are inequivalent.

use crate::braid::{BraidWord, Letter};
use crate::diagram::LinkDiagram;
use crate::invariants::jones;
use crate::laurent::LaurentPoly;
use crate::moves::{apply_move, MoveDescriptor, MoveError};
use crate::normal::{is_palindromic, normal_form, NormalForm};
use crate::pair::{EquivariantPair, Side};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

/// Intermediate pairs with a free-reduced closure of at most this many
/// crossings get their Jones polynomial spot-checked during verification
/// and debug sweeps; larger ones are skipped to keep replay cheap.
const SPOT_CHECK_MAX_CROSSINGS: usize = 16;

/// Group-level identity of a pair: strand count and the normal forms of the
/// two components. Equal keys iff the components are componentwise
/// `words_equal`. The derived order breaks ties when several meeting keys
/// appear in one search layer.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PairKey {
    strands: usize,
    alpha: NormalForm,
    beta: NormalForm,
}

pub fn canonical_key(p: &EquivariantPair) -> PairKey {
    PairKey {
        strands: p.strands(),
        alpha: normal_form(p.alpha()),
        beta: normal_form(p.beta()),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Forward,
    Backward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Forward => write!(f, "F"),
            Direction::Backward => write!(f, "B"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceStep {
    pub direction: Direction,
    pub descriptor: MoveDescriptor,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.direction, self.descriptor)
    }
}

/// A certificate relating `start` to some endpoint: forward steps apply in
/// order starting from `start`, backward steps apply in order starting from
/// the endpoint, and the two chains must land on the same [`PairKey`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoveTrace {
    start: EquivariantPair,
    steps: Vec<TraceStep>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error("trace line {line} is malformed: {text:?}")]
    Malformed { line: usize, text: String },
    #[error("step {index} failed to replay: {source}")]
    Replay { index: usize, source: MoveError },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("no trace found within budget ({nodes} pairs explored)")]
    NotFoundWithinBudget { nodes: usize },
}

/// Caps on the bidirectional search; see [`SearchBudget::default_for`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchBudget {
    pub max_strands: usize,
    pub max_conj_len: usize,
    pub max_nodes: usize,
}

impl SearchBudget {
    /// Default budget: strand headroom of two over the wider endpoint,
    /// conjugating words up to three letters, and 10^5 stored pairs.
    pub fn default_for(p: &EquivariantPair, q: &EquivariantPair) -> SearchBudget {
        SearchBudget {
            max_strands: p.strands().max(q.strands()) + 2,
            max_conj_len: 3,
            max_nodes: 100_000,
        }
    }
}

impl MoveTrace {
    pub fn start(&self) -> &EquivariantPair {
        &self.start
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// One step per line, `F|B <move descriptor>`; empty trace is empty text.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&step.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses trace text, replaying as it goes so that each descriptor is
    /// scoped to the strand count of the pair it applies to. Forward steps
    /// replay from `start`, backward steps from `end`.
    pub fn parse(
        text: &str,
        start: &EquivariantPair,
        end: &EquivariantPair,
    ) -> Result<MoveTrace, TraceError> {
        let mut cur_f = start.clone();
        let mut cur_b = end.clone();
        let mut steps = Vec::new();
        for (line_no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let malformed = || TraceError::Malformed {
                line: line_no + 1,
                text: raw.to_string(),
            };
            let (dir_tok, rest) = line.split_once(' ').ok_or_else(malformed)?;
            let direction = match dir_tok {
                "F" => Direction::Forward,
                "B" => Direction::Backward,
                _ => return Err(malformed()),
            };
            let cur = match direction {
                Direction::Forward => &mut cur_f,
                Direction::Backward => &mut cur_b,
            };
            let descriptor = MoveDescriptor::parse(rest, cur.strands()).map_err(|_| malformed())?;
            *cur = apply_move(cur, &descriptor).map_err(|source| TraceError::Replay {
                index: steps.len(),
                source,
            })?;
            steps.push(TraceStep {
                direction,
                descriptor,
            });
        }
        Ok(MoveTrace {
            start: start.clone(),
            steps,
        })
    }
}

impl fmt::Display for MoveTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Jones of the free-reduced closure, when small enough to spot-check.
fn spot_jones(p: &EquivariantPair) -> Option<LaurentPoly> {
    let w = p.closure_word().free_reduce();
    if w.len() > SPOT_CHECK_MAX_CROSSINGS {
        return None;
    }
    jones(&LinkDiagram::closure_of_word(&w)).ok()
}

/// Replays `trace`; `Ok(true)` iff the two chains meet at `canonical_key(q)`
/// level and every intermediate passes palindromicity and (for small
/// closures) Jones spot checks. A step that cannot be applied yields
/// [`TraceError::Replay`] with the step index.
pub fn verify_trace(trace: &MoveTrace, q: &EquivariantPair) -> Result<bool, TraceError> {
    let mut cur_f = trace.start.clone();
    let mut cur_b = q.clone();
    let expected_f = spot_jones(&cur_f);
    let expected_b = spot_jones(&cur_b);
    for (index, step) in trace.steps.iter().enumerate() {
        let (cur, expected) = match step.direction {
            Direction::Forward => (&mut cur_f, &expected_f),
            Direction::Backward => (&mut cur_b, &expected_b),
        };
        let next = apply_move(cur, &step.descriptor)
            .map_err(|source| TraceError::Replay { index, source })?;
        if !is_palindromic(next.alpha()) || !is_palindromic(next.beta()) {
            return Ok(false);
        }
        if let (Some(expected), Some(got)) = (expected.as_ref(), spot_jones(&next)) {
            if &got != expected {
                return Ok(false);
            }
        }
        *cur = next;
    }
    Ok(canonical_key(&cur_f) == canonical_key(&cur_b))
}

/// All conjugating words over single generators, in depth-first composition
/// order: generators ascending, `+` before `-`, shorter prefixes first.
/// Words are kept freely reduced as they are built, so every conjugating
/// group element within reach appears at its shortest spelling first.
fn conj_words(strands: usize, max_len: usize) -> Vec<BraidWord> {
    fn rec(strands: usize, max_len: usize, cur: &mut Vec<Letter>, out: &mut Vec<BraidWord>) {
        if cur.len() == max_len {
            return;
        }
        for index in 1..strands {
            for positive in [true, false] {
                let letter = Letter::new(index, positive);
                if cur.last() == Some(&letter.inverse()) {
                    continue;
                }
                cur.push(letter);
                out.push(BraidWord::new(strands, cur.clone()).expect("letters in range"));
                rec(strands, max_len, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(strands, max_len, &mut Vec::new(), &mut out);
    out
}

/// Neighbors of `p` in deterministic order: move tags in declaration order
/// (conjugation, stab S, stab E, double stab, swap); within a tag,
/// generators ascending, `first` before `second`, `+` before `-`.
/// Inapplicable stabilizations are skipped.
fn neighbors(p: &EquivariantPair, budget: &SearchBudget) -> Vec<(MoveDescriptor, EquivariantPair)> {
    let mut out = Vec::new();
    for e in conj_words(p.strands(), budget.max_conj_len) {
        let d = MoveDescriptor::EqConjugate { e };
        if let Ok(next) = apply_move(p, &d) {
            out.push((d, next));
        }
    }
    if p.strands() < budget.max_strands {
        for stab_e in [false, true] {
            for side in [Side::First, Side::Second] {
                for sign in [1, -1] {
                    let d = if stab_e {
                        MoveDescriptor::StabE { side, sign }
                    } else {
                        MoveDescriptor::StabS { side, sign }
                    };
                    if let Ok(next) = apply_move(p, &d) {
                        out.push((d, next));
                    }
                }
            }
        }
    }
    if p.strands() + 2 <= budget.max_strands {
        for epsilon in [1, -1] {
            for eta in [1, -1] {
                let d = MoveDescriptor::DoubleStab { epsilon, eta };
                if let Ok(next) = apply_move(p, &d) {
                    out.push((d, next));
                }
            }
        }
    }
    out.push((MoveDescriptor::Swap, swap_pair(p)));
    out
}

fn swap_pair(p: &EquivariantPair) -> EquivariantPair {
    apply_move(p, &MoveDescriptor::Swap).expect("swap always applies")
}

struct Node {
    pair: EquivariantPair,
    parent: Option<(usize, MoveDescriptor)>,
}

struct SideState {
    nodes: Vec<Node>,
    visited: HashMap<PairKey, usize>,
    frontier: Vec<usize>,
    /// Baseline for the debug Jones sweep; `None` when the start closure is
    /// too large to spot-check.
    expected_jones: Option<LaurentPoly>,
}

impl SideState {
    fn seed(start: &EquivariantPair, key: PairKey) -> SideState {
        let mut visited = HashMap::new();
        visited.insert(key, 0);
        SideState {
            nodes: vec![Node {
                pair: start.clone(),
                parent: None,
            }],
            visited,
            frontier: vec![0],
            expected_jones: spot_jones(start),
        }
    }

    /// Descriptors along the path from the seed to `id`, in application order.
    fn path(&self, id: usize) -> Vec<MoveDescriptor> {
        let mut rev = Vec::new();
        let mut cur = id;
        while let Some((parent, descriptor)) = &self.nodes[cur].parent {
            rev.push(descriptor.clone());
            cur = *parent;
        }
        rev.reverse();
        rev
    }
}

/// Expands one breadth-first layer of `this`, deduplicating by key. Nodes
/// past the shared budget are dropped unless they meet `other`, so a meeting
/// discovered in the final layer is still reported. Returns the meeting keys
/// found in this layer.
fn expand_layer(
    this: &mut SideState,
    other: &SideState,
    budget: &SearchBudget,
    used: usize,
) -> Vec<PairKey> {
    let frontier = std::mem::take(&mut this.frontier);
    let mut meetings = Vec::new();
    for id in frontier {
        let pair = this.nodes[id].pair.clone();
        for (descriptor, next) in neighbors(&pair, budget) {
            let key = canonical_key(&next);
            if this.visited.contains_key(&key) {
                continue;
            }
            let meets = other.visited.contains_key(&key);
            if !meets && used + this.nodes.len() >= budget.max_nodes {
                continue;
            }
            #[cfg(debug_assertions)]
            if let (Some(expected), Some(got)) = (this.expected_jones.as_ref(), spot_jones(&next)) {
                debug_assert_eq!(&got, expected, "move output changed the closure link");
            }
            let new_id = this.nodes.len();
            this.nodes.push(Node {
                pair: next,
                parent: Some((id, descriptor)),
            });
            this.visited.insert(key.clone(), new_id);
            this.frontier.push(new_id);
            if meets {
                meetings.push(key);
            }
        }
    }
    meetings
}

/// Bidirectional breadth-first search for a trace relating `p` and `q`.
/// Layers alternate forward/backward; when a layer produces meeting keys,
/// the lexicographically least one is assembled into a trace. Every
/// returned trace passes [`verify_trace`] against `q`.
pub fn find_trace(
    p: &EquivariantPair,
    q: &EquivariantPair,
    budget: &SearchBudget,
) -> Result<MoveTrace, SearchError> {
    let key_p = canonical_key(p);
    let key_q = canonical_key(q);
    let mut forward = SideState::seed(p, key_p.clone());
    let mut backward = SideState::seed(q, key_q.clone());
    let mut meetings = if key_p == key_q {
        vec![key_p]
    } else {
        Vec::new()
    };
    let mut next_dir = Direction::Forward;
    loop {
        if let Some(key) = meetings.iter().min().cloned() {
            let trace = assemble(&forward, &backward, &key);
            debug_assert_eq!(verify_trace(&trace, q), Ok(true));
            return Ok(trace);
        }
        let nodes = forward.nodes.len() + backward.nodes.len();
        if nodes >= budget.max_nodes
            || (forward.frontier.is_empty() && backward.frontier.is_empty())
        {
            return Err(SearchError::NotFoundWithinBudget { nodes });
        }
        let dir = match next_dir {
            Direction::Forward if forward.frontier.is_empty() => Direction::Backward,
            Direction::Backward if backward.frontier.is_empty() => Direction::Forward,
            d => d,
        };
        meetings = match dir {
            Direction::Forward => {
                expand_layer(&mut forward, &backward, budget, backward.nodes.len())
            }
            Direction::Backward => {
                expand_layer(&mut backward, &forward, budget, forward.nodes.len())
            }
        };
        next_dir = match dir {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        };
    }
}

fn assemble(forward: &SideState, backward: &SideState, key: &PairKey) -> MoveTrace {
    let f_id = forward.visited[key];
    let b_id = backward.visited[key];
    let mut steps: Vec<TraceStep> = forward
        .path(f_id)
        .into_iter()
        .map(|descriptor| TraceStep {
            direction: Direction::Forward,
            descriptor,
        })
        .collect();
    steps.extend(backward.path(b_id).into_iter().map(|descriptor| TraceStep {
        direction: Direction::Backward,
        descriptor,
    }));
    MoveTrace {
        start: forward.nodes[0].pair.clone(),
        steps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::{eq_conjugate, stab_s};

    fn w(strands: usize, ints: &[i32]) -> BraidWord {
        BraidWord::from_ints(strands, ints).unwrap()
    }

    fn pair(strands: usize, a: &[i32], b: &[i32]) -> EquivariantPair {
        EquivariantPair::new(w(strands, a), w(strands, b)).unwrap()
    }

    #[test]
    fn keys_identify_group_elements() {
        let a = pair(3, &[1, 2, 1], &[]);
        let b = pair(3, &[2, 1, 2], &[]);
        assert_eq!(canonical_key(&a), canonical_key(&b));
        let c = pair(3, &[], &[1, 1, 1]);
        let d = pair(3, &[1, 1, 1], &[]);
        assert_ne!(canonical_key(&c), canonical_key(&d));
        let unreduced = pair(3, &[2, -2, 1, 2, 1, -1, -2, -1, 1, 2, 1], &[]);
        assert_eq!(canonical_key(&unreduced), canonical_key(&a));
    }

    #[test]
    fn equal_pairs_give_empty_trace() {
        let p = pair(2, &[], &[1, 1, 1]);
        let q = pair(2, &[1, -1], &[1, 1, 1]);
        let budget = SearchBudget::default_for(&p, &q);
        let trace = find_trace(&p, &q, &budget).unwrap();
        assert!(trace.is_empty());
        assert_eq!(verify_trace(&trace, &q), Ok(true));
    }

    #[test]
    fn depth_one_conjugation() {
        let p = pair(2, &[], &[1, 1, 1]);
        let q = eq_conjugate(&p, &w(2, &[1])).unwrap();
        let budget = SearchBudget::default_for(&p, &q);
        let trace = find_trace(&p, &q, &budget).unwrap();
        assert_eq!(
            trace.steps(),
            &[TraceStep {
                direction: Direction::Forward,
                descriptor: MoveDescriptor::EqConjugate { e: w(2, &[1]) },
            }]
        );
        assert_eq!(verify_trace(&trace, &q), Ok(true));
    }

    #[test]
    fn depth_one_stabilization() {
        let p = EquivariantPair::trivial(1);
        let q = pair(2, &[1], &[]);
        let budget = SearchBudget::default_for(&p, &q);
        let trace = find_trace(&p, &q, &budget).unwrap();
        assert_eq!(
            trace.steps(),
            &[TraceStep {
                direction: Direction::Forward,
                descriptor: MoveDescriptor::StabS {
                    side: Side::First,
                    sign: 1,
                },
            }]
        );
        assert_eq!(verify_trace(&trace, &q), Ok(true));
    }

    #[test]
    fn depth_two_mixed() {
        let p = pair(2, &[], &[1, 1, 1]);
        let mid = stab_s(&p, Side::First, 1).unwrap();
        let q = eq_conjugate(&mid, &w(3, &[2])).unwrap();
        let budget = SearchBudget::default_for(&p, &q);
        let trace = find_trace(&p, &q, &budget).unwrap();
        assert_eq!(
            trace.steps(),
            &[
                TraceStep {
                    direction: Direction::Forward,
                    descriptor: MoveDescriptor::StabS {
                        side: Side::First,
                        sign: 1,
                    },
                },
                TraceStep {
                    direction: Direction::Backward,
                    descriptor: MoveDescriptor::EqConjugate { e: w(3, &[-2]) },
                },
            ]
        );
        assert_eq!(verify_trace(&trace, &q), Ok(true));
    }

    #[test]
    fn search_is_deterministic() {
        let p = pair(2, &[], &[1, 1, 1]);
        let mid = stab_s(&p, Side::First, 1).unwrap();
        let q = eq_conjugate(&mid, &w(3, &[2])).unwrap();
        let budget = SearchBudget::default_for(&p, &q);
        let a = find_trace(&p, &q, &budget).unwrap();
        let b = find_trace(&p, &q, &budget).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let p = EquivariantPair::trivial(1);
        // Closure is the Hopf link; no trace exists, and the node cap stops
        // the search quickly either way.
        let q = pair(2, &[1], &[1]);
        let budget = SearchBudget {
            max_strands: 3,
            max_conj_len: 2,
            max_nodes: 10,
        };
        match find_trace(&p, &q, &budget) {
            Err(SearchError::NotFoundWithinBudget { nodes }) => assert!(nodes >= 10),
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn verify_rejects_wrong_traces() {
        let p = pair(2, &[], &[1, 1, 1]);
        let q = stab_s(&p, Side::First, 1).unwrap();
        // Empty trace between distinct pairs.
        let empty = MoveTrace {
            start: p.clone(),
            steps: Vec::new(),
        };
        assert_eq!(verify_trace(&empty, &q), Ok(false));
        // Wrong stabilization sign: replays fine, lands elsewhere.
        let wrong_sign = MoveTrace {
            start: p.clone(),
            steps: vec![TraceStep {
                direction: Direction::Forward,
                descriptor: MoveDescriptor::StabS {
                    side: Side::First,
                    sign: -1,
                },
            }],
        };
        assert_eq!(verify_trace(&wrong_sign, &q), Ok(false));
        // Inapplicable move: replay error carries the step index.
        let inapplicable = MoveTrace {
            start: p.clone(),
            steps: vec![TraceStep {
                direction: Direction::Forward,
                descriptor: MoveDescriptor::StabS {
                    side: Side::Second,
                    sign: 1,
                },
            }],
        };
        assert_eq!(
            verify_trace(&inapplicable, &q),
            Err(TraceError::Replay {
                index: 0,
                source: MoveError::PreconditionFailed { index: 1 },
            })
        );
    }

    #[test]
    fn trace_text_round_trip() {
        let p = pair(2, &[], &[1, 1, 1]);
        let mid = stab_s(&p, Side::First, 1).unwrap();
        let q = eq_conjugate(&mid, &w(3, &[2])).unwrap();
        let budget = SearchBudget::default_for(&p, &q);
        let trace = find_trace(&p, &q, &budget).unwrap();
        let text = trace.to_text();
        assert_eq!(text, "F stabS first +\nB conj -2\n");
        let parsed = MoveTrace::parse(&text, &p, &q).unwrap();
        assert_eq!(parsed, trace);
        assert_eq!(verify_trace(&parsed, &q), Ok(true));
    }

    #[test]
    fn trace_parse_scopes_conj_words_to_current_strands() {
        let p = pair(2, &[], &[1, 1, 1]);
        // σ2 only exists after the stabilization adds a strand.
        let text = "F stabS first +\nF conj 2\n";
        let q = eq_conjugate(&stab_s(&p, Side::First, 1).unwrap(), &w(3, &[2])).unwrap();
        let trace = MoveTrace::parse(text, &p, &q).unwrap();
        assert_eq!(trace.len(), 2);
        assert_eq!(verify_trace(&trace, &q), Ok(true));
        assert!(MoveTrace::parse("F conj 2\n", &p, &q).is_err());
    }

    #[test]
    fn trace_parse_rejects_malformed_lines() {
        let p = EquivariantPair::trivial(2);
        let q = EquivariantPair::trivial(2);
        assert_eq!(
            MoveTrace::parse("X swap\n", &p, &q),
            Err(TraceError::Malformed {
                line: 1,
                text: "X swap".to_string(),
            })
        );
        assert!(matches!(
            MoveTrace::parse("F stabX first +\n", &p, &q),
            Err(TraceError::Malformed { line: 1, .. })
        ));
        // Replay failures surface with the step index.
        let r = MoveTrace::parse("F stabS second +\n", &pair(2, &[], &[1, 1, 1]), &q);
        assert_eq!(
            r,
            Err(TraceError::Replay {
                index: 0,
                source: MoveError::PreconditionFailed { index: 1 },
            })
        );
    }
}
