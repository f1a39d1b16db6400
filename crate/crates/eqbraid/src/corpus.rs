//! The bundled example corpus and its batch verifier.
//!
//! Corpus rows are semicolon-separated `name;strands;alpha;beta;expectedKnot`
//! lines, words in the signed-integer format, blank word = identity. Each
//! row names a reference knot; the verifier checks that both words are
//! palindromic, the closure is a knot, and its Jones and Alexander
//! polynomials agree with a bundled reference presentation of that knot.
//! Jones is compared up to the mirror `t ↦ t⁻¹`, since the corpus fixes one
//! chirality per knot type and mirrors are obtained by inverting every
//! crossing. Reference invariants are computed by the same engine from
//! independent braid presentations (torus/twist words), so the check is
//! oracle equivalence between two presentations, not a table lookup.

use crate::braid::BraidWord;
use crate::invariants::{alexander_of_word, jones_of_word};
use crate::normal::is_palindromic;
use std::fmt;
use std::io;
use std::path::Path;
use thiserror::Error;

/// Reference presentations: `(name, strands, braid word)` whose closure is
/// the named knot. Identities are pinned by the classical (Jones span,
/// determinant) pairs in the tests for this module.
const REFERENCE_FIXTURES: &[(&str, usize, &[i32])] = &[
    ("trefoil", 2, &[1, 1, 1]),
    ("4_1", 3, &[1, -2, 1, -2]),
    ("5_1", 2, &[1, 1, 1, 1, 1]),
    ("5_2", 3, &[1, 1, 1, 2, -1, 2]),
    ("6_1", 4, &[1, 1, 2, -1, -3, 2, -3]),
    ("6_2", 3, &[1, 1, 1, -2, 1, -2]),
    ("6_3", 3, &[1, 1, -2, 1, -2, -2]),
];

/// The braid word of a bundled reference knot, if `name` is known.
pub fn reference_word(name: &str) -> Option<BraidWord> {
    REFERENCE_FIXTURES
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|(_, strands, ints)| BraidWord::from_ints(*strands, ints).expect("fixture in range"))
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// One corpus row. The words are validated for generator range at parse
/// time; palindromicity is a verification check, not a parse invariant, so
/// a corrupted row reports FAIL rather than refusing to load.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CorpusEntry {
    name: String,
    strands: usize,
    alpha: BraidWord,
    beta: BraidWord,
    expected_knot: String,
}

impl CorpusEntry {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn alpha(&self) -> &BraidWord {
        &self.alpha
    }

    pub fn beta(&self) -> &BraidWord {
        &self.beta
    }

    pub fn expected_knot(&self) -> &str {
        &self.expected_knot
    }

    /// The closure word α·β whose braid closure is the row's link.
    pub fn closure_word(&self) -> BraidWord {
        self.alpha.concat(&self.beta).expect("same strand count")
    }
}

/// Parses corpus text. Blank lines are skipped; every other line must have
/// exactly five semicolon-separated fields and a known reference knot.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut entries = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line = line_no + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let err = |message: String| CorpusError::Parse { line, message };
        let fields: Vec<&str> = raw.split(';').collect();
        let [name, strands, alpha, beta, expected_knot] = fields[..] else {
            return Err(err(format!(
                "expected 5 semicolon-separated fields, got {}",
                fields.len()
            )));
        };
        if name.is_empty() {
            return Err(err("empty name".to_string()));
        }
        let strands: usize = strands
            .trim()
            .parse()
            .map_err(|_| err(format!("bad strand count {strands:?}")))?;
        if strands == 0 {
            return Err(err("strand count must be positive".to_string()));
        }
        let alpha = BraidWord::parse(alpha, strands).map_err(|e| err(e.to_string()))?;
        let beta = BraidWord::parse(beta, strands).map_err(|e| err(e.to_string()))?;
        if reference_word(expected_knot).is_none() {
            return Err(err(format!("unknown reference knot {expected_knot:?}")));
        }
        entries.push(CorpusEntry {
            name: name.to_string(),
            strands,
            alpha,
            beta,
            expected_knot: expected_knot.to_string(),
        });
    }
    Ok(entries)
}

pub fn load_corpus(path: &Path) -> Result<Vec<CorpusEntry>, CorpusError> {
    parse_corpus(&std::fs::read_to_string(path)?)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckKind {
    Palindromic,
    Components,
    Jones,
    Alexander,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckKind::Palindromic => "palindromic",
            CheckKind::Components => "components",
            CheckKind::Jones => "jones",
            CheckKind::Alexander => "alexander",
        };
        f.write_str(s)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckResult {
    pub name: String,
    pub check: CheckKind,
    pub pass: bool,
    pub detail: String,
}

/// Per-row, per-check results in input order; four checks per entry.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CorpusReport {
    results: Vec<CheckResult>,
}

impl CorpusReport {
    pub fn results(&self) -> &[CheckResult] {
        &self.results
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    /// `name<TAB>check<TAB>PASS|FAIL<TAB>detail`, one line per check.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let status = if r.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                r.name, r.check, status, r.detail
            ));
        }
        out
    }
}

/// Runs the four checks on every entry: both words palindromic, closure has
/// one component, Jones equals the reference or its mirror, Alexander
/// equals the reference. Failures are report content, never errors.
pub fn corpus_verify(entries: &[CorpusEntry]) -> CorpusReport {
    let mut results = Vec::new();
    for entry in entries {
        let mut push = |check: CheckKind, pass: bool, detail: String| {
            results.push(CheckResult {
                name: entry.name.clone(),
                check,
                pass,
                detail,
            });
        };
        let pal_alpha = is_palindromic(&entry.alpha);
        let pal_beta = is_palindromic(&entry.beta);
        let detail = match (pal_alpha, pal_beta) {
            (true, true) => "both components palindromic".to_string(),
            (false, true) => "alpha not palindromic".to_string(),
            (true, false) => "beta not palindromic".to_string(),
            (false, false) => "neither component palindromic".to_string(),
        };
        push(CheckKind::Palindromic, pal_alpha && pal_beta, detail);

        let closure = entry.closure_word();
        let components = closure.permutation().cycle_count();
        push(
            CheckKind::Components,
            components == 1,
            format!("{components} component(s)"),
        );

        let reference = reference_word(&entry.expected_knot).expect("validated at parse");
        match (jones_of_word(&closure), jones_of_word(&reference)) {
            (Ok(got), Ok(want)) => {
                let mirror = got.invert_variable();
                let (pass, detail) = if got == want {
                    (true, format!("matches {}: {}", entry.expected_knot, got))
                } else if mirror == want {
                    (
                        true,
                        format!("matches mirror of {}: {}", entry.expected_knot, got),
                    )
                } else {
                    (false, format!("got {got}, reference {want}"))
                };
                push(CheckKind::Jones, pass, detail);
            }
            (got, want) => {
                let detail = format!("jones failed: {:?} / {:?}", got.err(), want.err());
                push(CheckKind::Jones, false, detail);
            }
        }

        match (alexander_of_word(&closure), alexander_of_word(&reference)) {
            (Ok(got), Ok(want)) => {
                let pass = got == want;
                let detail = if pass {
                    format!("matches {}: {}", entry.expected_knot, got)
                } else {
                    format!("got {got}, reference {want}")
                };
                push(CheckKind::Alexander, pass, detail);
            }
            (got, want) => {
                let detail = format!("alexander failed: {:?} / {:?}", got.err(), want.err());
                push(CheckKind::Alexander, false, detail);
            }
        }
    }
    CorpusReport { results }
}
