//! Python bindings. Group elements of a Coxeter system are passed as
//! generator words (lists of indices); affine permutations have their own
//! class.

use std::collections::BTreeMap;

use coxhecke::affine::{self, BoundSpec, Cocharacter, SuperbasicDatum};
use coxhecke::coxeter::{CoxeterMatrix, GroupElement};
use coxhecke::group::CoxeterGroup;
use coxhecke::hecke::HeckeAlgebra;
use coxhecke::verify::{run_all, Scope};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: coxhecke::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

trait OrValueError<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrValueError<T> for coxhecke::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(value_error)
    }
}

type Word = Vec<usize>;
type Coefficient = BTreeMap<i64, BigInt>;

/// A Coxeter system with exact geometric realization.
#[pyclass(name = "CoxeterSystem", frozen)]
struct PyCoxeterSystem {
    inner: coxhecke::coxeter::CoxeterSystem,
}

impl PyCoxeterSystem {
    fn element(&self, word: &[usize]) -> PyResult<GroupElement> {
        self.inner.element_from_word(word).py()
    }

    fn hecke(&self, weights: Option<Vec<i64>>) -> PyResult<HeckeAlgebra<&coxhecke::coxeter::CoxeterSystem>> {
        match weights {
            Some(w) => HeckeAlgebra::with_weights(&self.inner, w).py(),
            None => Ok(HeckeAlgebra::new(&self.inner)),
        }
    }

    fn sorted_words(&self, elements: impl IntoIterator<Item = GroupElement>) -> Vec<Word> {
        let mut words: Vec<Word> = elements.into_iter().map(|w| self.inner.word(&w)).collect();
        words.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        words
    }
}

#[pymethods]
impl PyCoxeterSystem {
    /// `CoxeterSystem(preset)` or `CoxeterSystem(matrix=rows)` with 0 for
    /// infinity.
    #[new]
    #[pyo3(signature = (preset=None, *, matrix=None))]
    fn new(preset: Option<&str>, matrix: Option<Vec<Vec<u32>>>) -> PyResult<Self> {
        let inner = match (preset, matrix) {
            (Some(p), None) => coxhecke::coxeter::CoxeterSystem::preset(p).py()?,
            (None, Some(rows)) => {
                coxhecke::coxeter::CoxeterSystem::new(CoxeterMatrix::from_rows(&rows).py()?)
            }
            _ => return Err(PyValueError::new_err("give exactly one of preset, matrix")),
        };
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self { inner: coxhecke::coxeter::CoxeterSystem::from_json(text).py()? })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    /// Rows of the Coxeter matrix, 0 for infinity.
    #[getter]
    fn matrix(&self) -> Vec<Vec<u32>> {
        let cm = self.inner.coxeter_matrix();
        (0..cm.rank())
            .map(|i| (0..cm.rank()).map(|j| cm.get(i, j).unwrap_or(0)).collect())
            .collect()
    }

    fn length(&self, word: Word) -> PyResult<usize> {
        Ok(self.inner.length(&self.element(&word)?))
    }

    fn reduce(&self, word: Word) -> PyResult<Word> {
        self.inner.reduce_word(&word).py()
    }

    fn multiply(&self, x: Word, y: Word) -> PyResult<Word> {
        let xy = self.inner.multiply(&self.element(&x)?, &self.element(&y)?).py()?;
        Ok(self.inner.word(&xy))
    }

    fn inverse(&self, word: Word) -> PyResult<Word> {
        Ok(self.inner.word(&self.inner.invert(&self.element(&word)?)))
    }

    fn left_descents(&self, word: Word) -> PyResult<Vec<usize>> {
        Ok(self.inner.left_descents(&self.element(&word)?))
    }

    fn right_descents(&self, word: Word) -> PyResult<Vec<usize>> {
        Ok(self.inner.right_descents(&self.element(&word)?))
    }

    /// Inversion set as rendered root coordinates (`c = 2cos(pi/M)`).
    fn inversions(&self, word: Word) -> PyResult<Vec<Vec<String>>> {
        let phi = self.inner.inversion_set(&self.element(&word)?);
        let field = self.inner.field();
        Ok(phi
            .roots
            .iter()
            .map(|r| r.coords.iter().map(|c| field.render(c)).collect())
            .collect())
    }

    /// `T_x T_y` as `[(word, length, {exponent: coefficient})]`.
    #[pyo3(signature = (x, y, weights=None))]
    fn hecke_mult(&self, x: Word, y: Word, weights: Option<Vec<i64>>) -> PyResult<Vec<(Word, usize, Coefficient)>> {
        let hecke = self.hecke(weights)?;
        let prod = hecke.t_mult(&self.element(&x)?, &self.element(&y)?);
        Ok(hecke
            .rows(&prod)
            .into_iter()
            .map(|r| (r.word, r.length, r.coeff.terms().map(|(e, c)| (e, c.clone())).collect()))
            .collect())
    }

    #[pyo3(signature = (x, y, weights=None))]
    fn support(&self, x: Word, y: Word, weights: Option<Vec<i64>>) -> PyResult<Vec<Word>> {
        let hecke = self.hecke(weights)?;
        Ok(self.sorted_words(hecke.support(&self.element(&x)?, &self.element(&y)?)))
    }

    fn support_upper(&self, x: Word, y: Word) -> PyResult<Vec<Word>> {
        let hecke = self.hecke(None)?;
        Ok(self.sorted_words(hecke.support_upper(&self.element(&x)?, &self.element(&y)?)))
    }

    /// Every element of length at most `radius`, as canonical words.
    fn ball(&self, radius: usize) -> Vec<Word> {
        self.sorted_words(coxhecke::group::ball(&self.inner, radius))
    }

    /// The verification report as TSV text.
    #[pyo3(signature = (radius=6, samples=10000, seed=0))]
    fn verify(&self, radius: usize, samples: usize, seed: u64) -> String {
        let scope = Scope { radius, samples, seed, ..Scope::default() };
        run_all(&self.inner, &scope).to_tsv()
    }

    fn __repr__(&self) -> String {
        format!("CoxeterSystem(matrix={:?})", self.matrix())
    }
}

/// An affine permutation in window notation.
#[pyclass(name = "AffinePermutation", frozen, eq, hash, ord, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyAffinePermutation {
    inner: affine::AffinePermutation,
}

impl From<affine::AffinePermutation> for PyAffinePermutation {
    fn from(inner: affine::AffinePermutation) -> Self {
        Self { inner }
    }
}

fn group(n: usize) -> PyResult<affine::AffineTypeA> {
    affine::AffineTypeA::new(n).py()
}

#[pymethods]
impl PyAffinePermutation {
    #[new]
    fn new(window: Vec<i64>) -> PyResult<Self> {
        Ok(affine::AffinePermutation::new(window).py()?.into())
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        affine::AffinePermutation::identity(n).into()
    }

    /// Product `s_{w_1} ... s_{w_k}` in the affine symmetric group of rank `n`.
    #[staticmethod]
    fn from_word(n: usize, word: Word) -> PyResult<Self> {
        if let Some(&s) = word.iter().find(|&&s| s >= n) {
            return Err(value_error(coxhecke::Error::GeneratorOutOfRange { index: s, rank: n }));
        }
        Ok(group(n)?.from_word(&word).into())
    }

    #[staticmethod]
    fn translation(cocharacter: Vec<i64>) -> Self {
        affine::AffinePermutation::translation(&Cocharacter(cocharacter)).into()
    }

    /// `v_f e^lambda` from a one-line permutation of `1..n` and `lambda`.
    #[staticmethod]
    fn from_parts(finite: Vec<usize>, cocharacter: Vec<i64>) -> PyResult<Self> {
        Ok(affine::AffinePermutation::from_parts(&finite, &Cocharacter(cocharacter)).py()?.into())
    }

    fn to_parts(&self) -> (Vec<usize>, Vec<i64>) {
        let (f, l) = self.inner.to_parts();
        (f, l.0)
    }

    #[getter]
    fn window(&self) -> Vec<i64> {
        self.inner.window().to_vec()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn length(&self) -> usize {
        self.inner.length()
    }

    fn component(&self) -> i64 {
        self.inner.component()
    }

    fn reduced_word(&self) -> PyResult<Word> {
        if !self.inner.is_affine_weyl() {
            return Err(value_error(coxhecke::Error::NonzeroComponent(self.inner.component())));
        }
        Ok(group(self.inner.n())?.reduced_word(&self.inner))
    }

    fn __call__(&self, i: i64) -> i64 {
        self.inner.value(i)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        if other.inner.n() != self.inner.n() {
            return Err(value_error(coxhecke::Error::RankMismatch {
                expected: self.inner.n(),
                got: other.inner.n(),
            }));
        }
        Ok(self.inner.compose(&other.inner).into())
    }

    fn inverse(&self) -> Self {
        self.inner.inverse().into()
    }

    fn __str__(&self) -> String {
        format!("w:{}", self.inner)
    }

    fn __repr__(&self) -> String {
        format!("AffinePermutation({:?})", self.inner.window())
    }
}

fn datum(n: usize, m: i64) -> PyResult<SuperbasicDatum> {
    SuperbasicDatum::new(n, m).py()
}

fn wrap(v: Vec<affine::AffinePermutation>) -> Vec<PyAffinePermutation> {
    v.into_iter().map(Into::into).collect()
}

/// `beta(v)` for the superbasic datum `(n, m)`, `n = v.n`.
#[pyfunction]
fn twist(v: &PyAffinePermutation, m: i64) -> PyResult<PyAffinePermutation> {
    Ok(datum(v.inner.n(), m)?.twist(&v.inner).py()?.into())
}

/// `beta(v) v^-1`.
#[pyfunction]
fn twist_defect(v: &PyAffinePermutation, m: i64) -> PyResult<PyAffinePermutation> {
    Ok(datum(v.inner.n(), m)?.twist_defect(&v.inner).py()?.into())
}

#[pyfunction]
fn s_k(cocharacter: Vec<i64>, k: usize) -> PyResult<i64> {
    affine::s_k_sum(&Cocharacter(cocharacter), k).py()
}

/// `d` with `m d = k (mod n)`, `0 <= d < n`.
#[pyfunction]
fn d_of(n: usize, m: i64, k: i64) -> PyResult<usize> {
    Ok(datum(n, m)?.d_of(k))
}

fn bound_dict(b: &BoundSpec) -> BTreeMap<&'static str, String> {
    BTreeMap::from([
        ("a", b.a.to_string()),
        ("b", b.b.to_string()),
        ("c", b.c.to_string()),
        ("text", b.to_string()),
    ])
}

/// The printed bound `f` for rank `n`, with `a`, `b` as rational strings.
#[pyfunction]
fn bound(n: usize) -> PyResult<BTreeMap<&'static str, String>> {
    Ok(bound_dict(&affine::bound_f(n).py()?))
}

/// The bound actually used to size searches.
#[pyfunction]
fn effective_bound(n: usize) -> PyResult<BTreeMap<&'static str, String>> {
    Ok(bound_dict(&affine::effective_bound(n).py()?))
}

#[pyfunction]
fn enumerate_ball(n: usize, radius: usize) -> PyResult<Vec<PyAffinePermutation>> {
    Ok(wrap(affine::enumerate_ball(n, radius).py()?))
}

/// `{ v : l(beta(v) v^-1) < r }`.
#[pyfunction]
fn small_twist(n: usize, m: i64, r: i64) -> PyResult<Vec<PyAffinePermutation>> {
    Ok(wrap(affine::small_twist_set(&datum(n, m)?, r).py()?))
}

/// `{ v : w_a in D(v^-1, beta(v)) }`.
#[pyfunction]
fn candidates(w_a: &PyAffinePermutation, m: i64) -> PyResult<Vec<PyAffinePermutation>> {
    Ok(wrap(affine::candidate_cells(&datum(w_a.inner.n(), m)?, &w_a.inner).py()?))
}

#[pymodule]
#[pyo3(name = "coxhecke")]
fn coxhecke_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCoxeterSystem>()?;
    m.add_class::<PyAffinePermutation>()?;
    m.add_function(wrap_pyfunction!(twist, m)?)?;
    m.add_function(wrap_pyfunction!(twist_defect, m)?)?;
    m.add_function(wrap_pyfunction!(s_k, m)?)?;
    m.add_function(wrap_pyfunction!(d_of, m)?)?;
    m.add_function(wrap_pyfunction!(bound, m)?)?;
    m.add_function(wrap_pyfunction!(effective_bound, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_ball, m)?)?;
    m.add_function(wrap_pyfunction!(small_twist, m)?)?;
    m.add_function(wrap_pyfunction!(candidates, m)?)?;
    Ok(())
}
