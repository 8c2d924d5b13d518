//! Python module `middle_order`.

use middle_order::enumeration as en;
use middle_order::export::to_dot;
use middle_order::orders::{self, Order};
use middle_order::{heyting, involutions, parking, verify, Error, InversionSequence};
use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A permutation in one-line notation.
#[pyclass(
    name = "Permutation",
    module = "middle_order",
    frozen,
    eq,
    hash,
    ord,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Permutation(middle_order::Permutation);

#[pymethods]
impl Permutation {
    /// Accepts a list of values or a string such as "415623" or "2,1,3".
    #[new]
    fn new(word: &Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = if let Ok(s) = word.extract::<String>() {
            s.parse().map_err(err)?
        } else {
            middle_order::Permutation::new(word.extract::<Vec<usize>>()?).map_err(err)?
        };
        Ok(Self(inner))
    }

    #[staticmethod]
    fn from_inversion_sequence(coords: Vec<usize>) -> PyResult<Self> {
        Ok(Self(
            InversionSequence::new(coords)
                .map_err(err)?
                .to_permutation(),
        ))
    }

    #[staticmethod]
    fn identity(n: usize) -> PyResult<Self> {
        Ok(Self(middle_order::Permutation::identity(n).map_err(err)?))
    }

    #[staticmethod]
    fn all(n: usize) -> Vec<Self> {
        middle_order::Permutation::all(n).map(Self).collect()
    }

    #[getter]
    fn word(&self) -> Vec<usize> {
        self.0.word().to_vec()
    }

    fn inversion_sequence(&self) -> Vec<usize> {
        self.0.inversion_sequence().coords().to_vec()
    }

    fn inversion_count(&self) -> usize {
        self.0.inversion_count()
    }

    fn is_involution(&self) -> bool {
        self.0.is_involution()
    }

    fn euler_characteristic(&self) -> usize {
        en::euler_characteristic(&self.0)
    }

    fn leq(&self, other: &Self) -> PyResult<bool> {
        orders::middle_leq(&self.0, &other.0).map_err(err)
    }

    fn meet(&self, other: &Self) -> PyResult<Self> {
        Ok(Self(orders::meet(&self.0, &other.0).map_err(err)?))
    }

    fn join(&self, other: &Self) -> PyResult<Self> {
        Ok(Self(orders::join(&self.0, &other.0).map_err(err)?))
    }

    /// Upper covers in the middle order.
    fn covers(&self) -> Vec<Self> {
        orders::upper_covers(Order::Middle, &self.0)
            .into_iter()
            .map(Self)
            .collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}')", self.0)
    }
}

fn order(name: &str) -> PyResult<Order> {
    name.parse().map_err(err)
}

#[pyfunction]
fn leq(order_name: &str, v: &Permutation, w: &Permutation) -> PyResult<bool> {
    orders::leq(order(order_name)?, &v.0, &w.0).map_err(err)
}

#[pyfunction]
fn mobius_middle(v: &Permutation, w: &Permutation) -> PyResult<i64> {
    orders::mobius_middle(&v.0, &w.0).map_err(err)
}

#[pyfunction]
fn mobius_involution_ideal(w: &Permutation) -> PyResult<i64> {
    involutions::mobius_involution_ideal(&w.0).map_err(err)
}

#[pyfunction]
fn involution_seq_check(coords: Vec<usize>) -> PyResult<bool> {
    Ok(involutions::involution_seq_check(
        &InversionSequence::new(coords).map_err(err)?,
    ))
}

#[pyfunction]
fn involution_count(n: usize) -> BigUint {
    involutions::involution_count(n)
}

#[pyfunction]
fn relative_pseudocomplement(v: &Permutation, w: &Permutation) -> PyResult<Permutation> {
    Ok(Permutation(
        heyting::relative_pseudocomplement(&v.0, &w.0).map_err(err)?,
    ))
}

#[pyfunction]
fn pseudocomplement(v: &Permutation) -> Permutation {
    Permutation(heyting::pseudocomplement(&v.0))
}

#[pyfunction]
fn is_regular(v: &Permutation) -> bool {
    heyting::is_regular(&v.0)
}

#[pyfunction]
fn intervals_by_rank(n: usize) -> PyResult<Vec<BigUint>> {
    en::intervals_by_rank(n).map_err(err)
}

#[pyfunction]
fn boolean_by_rank(n: usize) -> PyResult<Vec<BigUint>> {
    en::boolean_by_rank(n).map_err(err)
}

#[pyfunction]
fn interval_count_total(n: usize) -> PyResult<BigUint> {
    en::interval_count_total(n).map_err(err)
}

#[pyfunction]
fn boolean_interval_total(n: usize) -> PyResult<BigUint> {
    en::boolean_interval_total(n).map_err(err)
}

#[pyfunction]
fn covering_relation_count(n: usize) -> PyResult<BigUint> {
    en::covering_relation_count(n).map_err(err)
}

#[pyfunction]
fn stirling_first_unsigned(n: usize, j: usize) -> BigUint {
    en::stirling_first_unsigned(n, j)
}

#[pyfunction]
fn is_parking_function(prefs: Vec<usize>) -> PyResult<bool> {
    parking::is_parking_function(&prefs).map_err(err)
}

/// The pentagon sublattice of parking functions, `Top` rendered as "T".
#[pyfunction]
fn pentagon_witness(n: usize) -> PyResult<Vec<String>> {
    Ok(parking::pentagon_witness(n)
        .map_err(err)?
        .iter()
        .map(ToString::to_string)
        .collect())
}

/// DOT text of the Hasse diagram of the middle, weak or Bruhat order.
#[pyfunction]
fn hasse_dot(order_name: &str, n: usize) -> PyResult<String> {
    let o = order(order_name)?;
    Ok(to_dot(&orders::order_poset(o, n).map_err(err)?, o.name()))
}

/// Runs a verification suite; returns `(passed, report)`.
#[pyfunction]
fn run_suite(suite: &str, n_max: usize) -> PyResult<(bool, String)> {
    let report = verify::run(suite.parse().map_err(err)?, n_max).map_err(err)?;
    Ok((report.passed(), report.to_string()))
}

#[pymodule]
#[pyo3(name = "middle_order")]
fn init(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Permutation>()?;
    m.add_function(wrap_pyfunction!(leq, m)?)?;
    m.add_function(wrap_pyfunction!(mobius_middle, m)?)?;
    m.add_function(wrap_pyfunction!(mobius_involution_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(involution_seq_check, m)?)?;
    m.add_function(wrap_pyfunction!(involution_count, m)?)?;
    m.add_function(wrap_pyfunction!(relative_pseudocomplement, m)?)?;
    m.add_function(wrap_pyfunction!(pseudocomplement, m)?)?;
    m.add_function(wrap_pyfunction!(is_regular, m)?)?;
    m.add_function(wrap_pyfunction!(intervals_by_rank, m)?)?;
    m.add_function(wrap_pyfunction!(boolean_by_rank, m)?)?;
    m.add_function(wrap_pyfunction!(interval_count_total, m)?)?;
    m.add_function(wrap_pyfunction!(boolean_interval_total, m)?)?;
    m.add_function(wrap_pyfunction!(covering_relation_count, m)?)?;
    m.add_function(wrap_pyfunction!(stirling_first_unsigned, m)?)?;
    m.add_function(wrap_pyfunction!(is_parking_function, m)?)?;
    m.add_function(wrap_pyfunction!(pentagon_witness, m)?)?;
    m.add_function(wrap_pyfunction!(hasse_dot, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
