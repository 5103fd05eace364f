//! Python bindings. Words are passed as `0`/`1` strings, caterpillar
//! sequences as lists of integers and leaf functions as lists whose `-inf`
//! entries are `None`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use leafseq::graph::{caterpillar_graph, chain, complete, cycle, fk_tree, star, wheel};
use leafseq::verify::{run_suite, Suite};
use leafseq::{
    delta_leaf_word, leaf_function_with, BinaryWord, CaterpillarSequence, Graph, LeafFunction,
    LeafValue, OracleConfig,
};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn word(s: &str) -> PyResult<BinaryWord> {
    s.parse().map_err(value_error)
}

fn values_out(lf: &LeafFunction) -> Vec<Option<usize>> {
    lf.values().iter().map(|v| v.finite()).collect()
}

fn values_in(values: Vec<Option<usize>>) -> PyResult<LeafFunction> {
    let values = values
        .into_iter()
        .map(|v| v.map_or(LeafValue::NegInfinity, LeafValue::Finite))
        .collect();
    LeafFunction::new(values).map_err(value_error)
}

/// A caterpillar sequence `(s_1, ..., s_k)`.
#[pyclass(name = "Caterpillar", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyCaterpillar(CaterpillarSequence);

#[pymethods]
impl PyCaterpillar {
    #[new]
    fn new(seq: Vec<usize>) -> PyResult<Self> {
        CaterpillarSequence::new(seq).map(PyCaterpillar).map_err(value_error)
    }

    #[staticmethod]
    fn from_word(w: &str) -> PyResult<Self> {
        Ok(PyCaterpillar(word(w)?.reading_caterpillar()))
    }

    fn to_list(&self) -> Vec<usize> {
        self.0.as_slice().to_vec()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn leaves(&self) -> usize {
        self.0.leaves()
    }

    fn word(&self) -> String {
        self.0.word().to_string()
    }

    fn reversal(&self) -> Self {
        PyCaterpillar(self.0.reversal())
    }

    fn graft(&self, other: &PyCaterpillar) -> Self {
        PyCaterpillar(self.0.graft(&other.0))
    }

    fn is_subsequence_of(&self, other: &PyCaterpillar) -> bool {
        self.0.is_subsequence_of(&other.0)
    }

    fn left(&self, i: usize) -> PyResult<Self> {
        self.0.left(i).map(PyCaterpillar).map_err(value_error)
    }

    fn right(&self, i: usize) -> PyResult<Self> {
        self.0.right(i).map(PyCaterpillar).map_err(value_error)
    }

    fn decompose(&self, i: usize) -> PyResult<(Self, Self)> {
        let (l, r) = self.0.decompose(i).map_err(value_error)?;
        Ok((PyCaterpillar(l), PyCaterpillar(r)))
    }

    fn leaf_function(&self) -> Vec<Option<usize>> {
        values_out(&self.0.leaf_function())
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        caterpillar_graph(&self.0).edges().collect()
    }

    fn __repr__(&self) -> String {
        format!("Caterpillar([{}])", self.0)
    }
}

#[pyfunction]
fn rc(w: &str) -> PyResult<Vec<usize>> {
    Ok(word(w)?.reading_caterpillar().as_slice().to_vec())
}

#[pyfunction]
fn word_of(seq: Vec<usize>) -> PyResult<String> {
    Ok(CaterpillarSequence::new(seq).map_err(value_error)?.word().to_string())
}

#[pyfunction]
fn pnf(w: &str) -> PyResult<String> {
    Ok(word(w)?.pnf().to_string())
}

#[pyfunction]
fn f1_profile(w: &str) -> PyResult<Vec<usize>> {
    Ok(word(w)?.f1_profile().values().to_vec())
}

#[pyfunction]
#[pyo3(signature = (w, k = 0))]
fn is_prefix_normal(w: &str, k: usize) -> PyResult<bool> {
    Ok(word(w)?.is_k_prefix_normal(k))
}

/// `(prefix, factor)` showing that `w` is not prefix normal, or `None`.
#[pyfunction]
fn prefix_normal_witness(w: &str) -> PyResult<Option<(String, String)>> {
    Ok(word(w)?
        .prefix_normal_violation()
        .map(|v| (v.prefix.to_string(), v.factor.to_string())))
}

#[pyfunction]
fn leaf_equivalent(a: &str, b: &str) -> PyResult<bool> {
    Ok(leafseq::leaf_equivalent(&word(a)?, &word(b)?))
}

/// Exhaustive leaf function of the graph on `n` vertices with `edges`.
#[pyfunction]
#[pyo3(signature = (n, edges, prune = false))]
fn leaf_function(n: usize, edges: Vec<(usize, usize)>, prune: bool) -> PyResult<Vec<Option<usize>>> {
    let g = Graph::new(n, edges).map_err(value_error)?;
    let config = OracleConfig {
        max_vertices: 64,
        prune,
        ..OracleConfig::default()
    };
    Ok(values_out(&leaf_function_with(&g, &config).map_err(value_error)?))
}

/// Leaf word of a leaf function, letters as strings (`"w"` for omega).
#[pyfunction]
fn leaf_word(values: Vec<Option<usize>>) -> PyResult<String> {
    let w = delta_leaf_word(&values_in(values)?).map_err(value_error)?;
    Ok(match w.to_binary() {
        Some(b) => b.to_string(),
        None => w.to_string(),
    })
}

/// The caterpillar realizing `values`; raises `ValueError` with the reason
/// otherwise.
#[pyfunction]
fn realize(values: Vec<Option<usize>>) -> PyResult<Vec<usize>> {
    leafseq::realize_caterpillar(&values_in(values)?)
        .map(|s| s.as_slice().to_vec())
        .map_err(value_error)
}

/// `(n, edges)` of a named family member.
#[pyfunction]
fn generate(family: &str, param: usize) -> PyResult<(usize, Vec<(usize, usize)>)> {
    let g = match family {
        "wheel" => wheel(param),
        "star" => Ok(star(param)),
        "chain" => chain(param),
        "cycle" => cycle(param),
        "complete" => Ok(complete(param)),
        "fk" => fk_tree(param),
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    }
    .map_err(value_error)?;
    Ok((g.vertex_count(), g.edges().collect()))
}

/// Verification reports as JSON text.
#[pyfunction]
#[pyo3(signature = (suite = "all", max_n = None))]
fn verify(py: Python<'_>, suite: &str, max_n: Option<usize>) -> PyResult<String> {
    let suite: Suite = suite.parse().map_err(value_error)?;
    let reports = py.detach(|| run_suite(suite, max_n)).map_err(value_error)?;
    serde_json::to_string(&reports).map_err(value_error)
}

#[pymodule]
#[pyo3(name = "leafseq")]
fn leafseq_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCaterpillar>()?;
    m.add_function(wrap_pyfunction!(rc, m)?)?;
    m.add_function(wrap_pyfunction!(word_of, m)?)?;
    m.add_function(wrap_pyfunction!(pnf, m)?)?;
    m.add_function(wrap_pyfunction!(f1_profile, m)?)?;
    m.add_function(wrap_pyfunction!(is_prefix_normal, m)?)?;
    m.add_function(wrap_pyfunction!(prefix_normal_witness, m)?)?;
    m.add_function(wrap_pyfunction!(leaf_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(leaf_function, m)?)?;
    m.add_function(wrap_pyfunction!(leaf_word, m)?)?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
