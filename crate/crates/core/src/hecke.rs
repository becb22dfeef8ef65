//! Iwahori–Hecke algebra of a Coxeter group in the standard basis `T_w`.
//!
//! Generators satisfy `(T_s - v_s)(T_s + v_s^-1) = 0` with `v_s = v^L(s)`,
//! so `T_s^2 = (v_s - v_s^-1) T_s + 1`. Products `T_x T_y` are expanded by
//! folding that rule over a reduced word of `y`.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::group::CoxeterGroup;
use crate::laurent::LaurentPoly;

/// Per-generator weights `L(s)`, constant on conjugacy classes of
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    weights: Vec<i64>,
}

impl WeightFunction {
    /// Equal parameters, `L = 1`.
    pub fn equal<G: CoxeterGroup>(group: &G) -> Self {
        WeightFunction { weights: vec![1; group.rank()] }
    }

    /// Rejects weights that differ on generators joined by an odd `m_st`.
    pub fn new<G: CoxeterGroup>(group: &G, weights: Vec<i64>) -> Result<Self> {
        let n = group.rank();
        if weights.len() != n {
            return Err(Error::WeightArity { got: weights.len(), expected: n });
        }
        for s in 0..n {
            for t in s + 1..n {
                if let Some(m) = group.coxeter_entry(s, t) {
                    if m % 2 == 1 && weights[s] != weights[t] {
                        return Err(Error::InconsistentWeights { s, t, m });
                    }
                }
            }
        }
        Ok(WeightFunction { weights })
    }

    pub fn weight(&self, s: usize) -> i64 {
        self.weights[s]
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }
}

/// A finitely supported `Z[v, v^-1]`-combination of basis elements `T_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement<E: std::hash::Hash + Eq> {
    terms: HashMap<E, LaurentPoly>,
}

impl<E: std::hash::Hash + Eq + Clone> HeckeElement<E> {
    pub fn zero() -> Self {
        HeckeElement { terms: HashMap::new() }
    }

    pub fn basis(w: E) -> Self {
        let mut terms = HashMap::new();
        terms.insert(w, LaurentPoly::one());
        HeckeElement { terms }
    }

    pub fn coeff(&self, w: &E) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&E, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> HashSet<E> {
        self.terms.keys().cloned().collect()
    }

    pub fn add_term(&mut self, w: E, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_default();
        *entry += p;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&mut self, other: &HeckeElement<E>) {
        for (w, p) in &other.terms {
            self.add_term(w.clone(), p);
        }
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        let mut out = HeckeElement::zero();
        for (w, q) in &self.terms {
            out.add_term(w.clone(), &(q * p));
        }
        out
    }
}

/// One row of an expansion, ordered by `(length, word)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionRow<E> {
    pub element: E,
    pub word: Vec<usize>,
    pub length: usize,
    pub coeff: LaurentPoly,
}

/// The Hecke algebra of `group` with a fixed weight function.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra<G> {
    group: G,
    weights: WeightFunction,
}

impl<G: CoxeterGroup> HeckeAlgebra<G> {
    pub fn new(group: G) -> Self {
        let weights = WeightFunction::equal(&group);
        HeckeAlgebra { group, weights }
    }

    pub fn with_weights(group: G, weights: Vec<i64>) -> Result<Self> {
        let weights = WeightFunction::new(&group, weights)?;
        Ok(HeckeAlgebra { group, weights })
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn weights(&self) -> &WeightFunction {
        &self.weights
    }

    /// `h * T_s`.
    pub fn t_mult_generator(&self, h: &HeckeElement<G::Element>, s: usize) -> HeckeElement<G::Element> {
        let q = LaurentPoly::quantum_difference(self.weights.weight(s));
        let mut out = HeckeElement::zero();
        for (x, p) in h.terms() {
            let xs = self.group.mul_gen(x, s);
            if self.group.is_right_descent(x, s) {
                out.add_term(x.clone(), &(p * &q));
            }
            out.add_term(xs, p);
        }
        out
    }

    /// `h * T_{s_1} * ... * T_{s_k}` for an arbitrary word.
    pub fn t_mult_word(&self, h: &HeckeElement<G::Element>, word: &[usize]) -> HeckeElement<G::Element> {
        word.iter()
            .fold(h.clone(), |acc, &s| self.t_mult_generator(&acc, s))
    }

    /// `T_x T_y`, folding over the canonical reduced word of `y`.
    pub fn t_mult(&self, x: &G::Element, y: &G::Element) -> HeckeElement<G::Element> {
        self.t_mult_word(&HeckeElement::basis(x.clone()), &self.group.reduced_word(y))
    }

    /// Product of two general elements.
    pub fn multiply(
        &self,
        a: &HeckeElement<G::Element>,
        b: &HeckeElement<G::Element>,
    ) -> HeckeElement<G::Element> {
        let mut out = HeckeElement::zero();
        for (y, q) in b.terms() {
            let word = self.group.reduced_word(y);
            let prod = self.t_mult_word(a, &word);
            out.add(&prod.scale(q));
        }
        out
    }

    /// `D(x, y) = { w : r_w^{x,y} != 0 }`.
    pub fn support(&self, x: &G::Element, y: &G::Element) -> HashSet<G::Element> {
        self.t_mult(x, y).support()
    }

    /// The recursive over-approximation `D'(x, y)` of the support, always
    /// stripping the smallest-index left descent `s` of `y`.
    ///
    /// The choice of `s` depends on `y` alone, so the recursion is run
    /// breadth-first on the set of current left arguments.
    pub fn support_upper(&self, x: &G::Element, y: &G::Element) -> HashSet<G::Element> {
        let mut current: HashSet<G::Element> = HashSet::from([x.clone()]);
        let mut rest = y.clone();
        while let Some(s) = (0..self.group.rank()).find(|&s| self.group.is_left_descent(&rest, s)) {
            let mut next = HashSet::with_capacity(current.len() * 2);
            for u in current {
                let us = self.group.mul_gen(&u, s);
                if self.group.is_right_descent(&u, s) {
                    next.insert(u);
                }
                next.insert(us);
            }
            current = next;
            rest = self.group.gen_mul(s, &rest);
        }
        current
    }

    /// Every `w` in `D(x, y)` has `l(xy) <= l(w) <= l(x) + l(y)`.
    pub fn check_support_bounds(&self, x: &G::Element, y: &G::Element) -> bool {
        let g = &self.group;
        let lo = g.length(&g.multiply(x, y));
        let hi = g.length(x) + g.length(y);
        self.support(x, y).iter().all(|w| {
            let l = g.length(w);
            lo <= l && l <= hi
        })
    }

    /// Terms sorted by `(length, word)`.
    pub fn rows(&self, h: &HeckeElement<G::Element>) -> Vec<ExpansionRow<G::Element>> {
        let mut rows: Vec<_> = h
            .terms()
            .map(|(w, p)| {
                let word = self.group.reduced_word(w);
                ExpansionRow { element: w.clone(), length: word.len(), word, coeff: p.clone() }
            })
            .collect();
        rows.sort_by(|a, b| (a.length, &a.word).cmp(&(b.length, &b.word)));
        rows
    }
}

impl<G: CoxeterGroup> CoxeterGroup for &G {
    type Element = G::Element;

    fn rank(&self) -> usize {
        (**self).rank()
    }
    fn coxeter_entry(&self, s: usize, t: usize) -> Option<u32> {
        (**self).coxeter_entry(s, t)
    }
    fn identity(&self) -> G::Element {
        (**self).identity()
    }
    fn mul_gen(&self, x: &G::Element, s: usize) -> G::Element {
        (**self).mul_gen(x, s)
    }
    fn gen_mul(&self, s: usize, x: &G::Element) -> G::Element {
        (**self).gen_mul(s, x)
    }
    fn is_right_descent(&self, x: &G::Element, s: usize) -> bool {
        (**self).is_right_descent(x, s)
    }
    fn is_left_descent(&self, x: &G::Element, s: usize) -> bool {
        (**self).is_left_descent(x, s)
    }
    fn is_identity(&self, x: &G::Element) -> bool {
        (**self).is_identity(x)
    }
    fn reduced_word(&self, x: &G::Element) -> Vec<usize> {
        (**self).reduced_word(x)
    }
    fn length(&self, x: &G::Element) -> usize {
        (**self).length(x)
    }
    fn multiply(&self, x: &G::Element, y: &G::Element) -> G::Element {
        (**self).multiply(x, y)
    }
    fn inverse(&self, x: &G::Element) -> G::Element {
        (**self).inverse(x)
    }
}
