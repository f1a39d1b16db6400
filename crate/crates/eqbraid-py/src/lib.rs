//! Python bindings. Words and pairs are thin wrappers over the library
//! types; polynomials and diagrams cross the boundary in their canonical
//! text forms, which are bit-exact.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use std::path::Path;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "BraidWord", module = "eqbraid_py")]
#[derive(Clone)]
struct Word {
    inner: eqbraid::BraidWord,
}

#[pymethods]
impl Word {
    #[new]
    fn new(strands: usize, letters: Vec<i32>) -> PyResult<Word> {
        eqbraid::BraidWord::from_ints(strands, &letters)
            .map(|inner| Word { inner })
            .map_err(value_error)
    }

    /// Whitespace-separated signed generator indices; blank is the identity.
    #[staticmethod]
    fn parse(strands: usize, text: &str) -> PyResult<Word> {
        eqbraid::BraidWord::parse(text, strands)
            .map(|inner| Word { inner })
            .map_err(value_error)
    }

    #[getter]
    fn strands(&self) -> usize {
        self.inner.strands()
    }

    #[getter]
    fn letters(&self) -> Vec<i32> {
        self.inner.letters().iter().map(|l| l.as_int()).collect()
    }

    fn text(&self) -> String {
        self.inner.text()
    }

    fn reverse(&self) -> Word {
        Word {
            inner: self.inner.reverse(),
        }
    }

    fn inverse(&self) -> Word {
        Word {
            inner: self.inner.inverse(),
        }
    }

    fn free_reduce(&self) -> Word {
        Word {
            inner: self.inner.free_reduce(),
        }
    }

    fn concat(&self, other: &Word) -> PyResult<Word> {
        self.inner
            .concat(&other.inner)
            .map(|inner| Word { inner })
            .map_err(value_error)
    }

    fn is_palindromic(&self) -> bool {
        eqbraid::is_palindromic(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// Letterwise equality; group equality is `words_equal`.
    fn __eq__(&self, other: &Word) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.text()
    }

    fn __repr__(&self) -> String {
        format!(
            "BraidWord({}, [{}])",
            self.inner.strands(),
            self.letters()
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

#[pyclass(name = "EquivariantPair", module = "eqbraid_py")]
#[derive(Clone)]
struct Pair {
    inner: eqbraid::EquivariantPair,
}

#[pymethods]
impl Pair {
    #[new]
    fn new(alpha: &Word, beta: &Word) -> PyResult<Pair> {
        eqbraid::EquivariantPair::new(alpha.inner.clone(), beta.inner.clone())
            .map(|inner| Pair { inner })
            .map_err(value_error)
    }

    #[staticmethod]
    fn trivial(strands: usize) -> Pair {
        Pair {
            inner: eqbraid::EquivariantPair::trivial(strands),
        }
    }

    #[getter]
    fn strands(&self) -> usize {
        self.inner.strands()
    }

    #[getter]
    fn alpha(&self) -> Word {
        Word {
            inner: self.inner.alpha().clone(),
        }
    }

    #[getter]
    fn beta(&self) -> Word {
        Word {
            inner: self.inner.beta().clone(),
        }
    }

    fn closure_word(&self) -> Word {
        Word {
            inner: self.inner.closure_word(),
        }
    }

    fn component_count(&self) -> usize {
        self.inner.component_count()
    }

    /// PD code of the equivariant closure, one crossing per line.
    fn pd(&self) -> String {
        self.inner.closure_diagram().to_string()
    }

    fn jones(&self) -> PyResult<String> {
        eqbraid::jones_of_word(&self.inner.closure_word())
            .map(|p| p.to_string())
            .map_err(value_error)
    }

    fn alexander(&self) -> PyResult<String> {
        eqbraid::alexander(&self.inner)
            .map(|p| p.to_string())
            .map_err(value_error)
    }

    fn __eq__(&self, other: &Pair) -> bool {
        self.inner.alpha() == other.inner.alpha() && self.inner.beta() == other.inner.beta()
    }

    fn __repr__(&self) -> String {
        format!(
            "EquivariantPair({};{};{})",
            self.inner.strands(),
            self.inner.alpha().text(),
            self.inner.beta().text()
        )
    }
}

#[pyfunction]
fn words_equal(u: &Word, v: &Word) -> PyResult<bool> {
    eqbraid::words_equal(&u.inner, &v.inner).map_err(value_error)
}

#[pyfunction]
fn is_palindromic(w: &Word) -> bool {
    eqbraid::is_palindromic(&w.inner)
}

/// Returns (x, seed_block) with the input equal to x block reverse(x).
#[pyfunction]
fn deloup_factorize(w: &Word, max_x_len: usize) -> PyResult<(Word, Word)> {
    let f = eqbraid::deloup_factorize(&w.inner, max_x_len).map_err(value_error)?;
    Ok((
        Word {
            inner: f.x().clone(),
        },
        Word {
            inner: f.seed_block().clone(),
        },
    ))
}

/// Applies a move given in descriptor syntax, e.g. "stabS first +".
#[pyfunction]
fn apply_move(pair: &Pair, descriptor: &str) -> PyResult<Pair> {
    let parsed =
        eqbraid::MoveDescriptor::parse(descriptor, pair.inner.strands()).map_err(value_error)?;
    eqbraid::apply_move(&pair.inner, &parsed)
        .map(|inner| Pair { inner })
        .map_err(value_error)
}

/// Returns the trace text connecting the pairs, or None if the budget runs
/// out first.
#[pyfunction]
#[pyo3(signature = (start, end, max_nodes=None, max_strands=None, max_conj_len=None))]
fn find_trace(
    start: &Pair,
    end: &Pair,
    max_nodes: Option<usize>,
    max_strands: Option<usize>,
    max_conj_len: Option<usize>,
) -> Option<String> {
    let mut budget = eqbraid::SearchBudget::default_for(&start.inner, &end.inner);
    if let Some(n) = max_nodes {
        budget.max_nodes = n;
    }
    if let Some(n) = max_strands {
        budget.max_strands = n;
    }
    if let Some(n) = max_conj_len {
        budget.max_conj_len = n;
    }
    eqbraid::find_trace(&start.inner, &end.inner, &budget)
        .ok()
        .map(|t| t.to_text())
}

/// Replays trace text between the pairs; True iff the ends meet.
#[pyfunction]
fn verify_trace(trace: &str, start: &Pair, end: &Pair) -> PyResult<bool> {
    let parsed = eqbraid::MoveTrace::parse(trace, &start.inner, &end.inner).map_err(value_error)?;
    eqbraid::verify_trace(&parsed, &end.inner).map_err(value_error)
}

/// Runs every corpus check; returns (all_pass, tsv_report).
#[pyfunction]
fn corpus_verify(path: &str) -> PyResult<(bool, String)> {
    let entries = eqbraid::load_corpus(Path::new(path)).map_err(value_error)?;
    let report = eqbraid::corpus_verify(&entries);
    Ok((report.all_pass(), report.to_tsv()))
}

#[pymodule]
fn eqbraid_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Word>()?;
    m.add_class::<Pair>()?;
    m.add_function(wrap_pyfunction!(words_equal, m)?)?;
    m.add_function(wrap_pyfunction!(is_palindromic, m)?)?;
    m.add_function(wrap_pyfunction!(deloup_factorize, m)?)?;
    m.add_function(wrap_pyfunction!(apply_move, m)?)?;
    m.add_function(wrap_pyfunction!(find_trace, m)?)?;
    m.add_function(wrap_pyfunction!(verify_trace, m)?)?;
    m.add_function(wrap_pyfunction!(corpus_verify, m)?)?;
    Ok(())
}
