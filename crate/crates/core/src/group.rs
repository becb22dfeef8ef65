//! The Coxeter-group interface shared by the matrix realization and the
//! affine permutation model.

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

/// A Coxeter system `(W, S)` with `S = {0, .., rank-1}` and a concrete,
/// canonical element representation.
///
/// Implementors supply multiplication by generators and the two descent
/// tests; words, lengths and products follow from those.
pub trait CoxeterGroup {
    type Element: Clone + Eq + Hash + Debug;

    fn rank(&self) -> usize;

    /// The order of `st`; `None` for infinity.
    fn coxeter_entry(&self, s: usize, t: usize) -> Option<u32>;

    fn identity(&self) -> Self::Element;

    /// `x * s`.
    fn mul_gen(&self, x: &Self::Element, s: usize) -> Self::Element;

    /// `s * x`.
    fn gen_mul(&self, s: usize, x: &Self::Element) -> Self::Element;

    /// `l(xs) < l(x)`.
    fn is_right_descent(&self, x: &Self::Element, s: usize) -> bool;

    /// `l(sx) < l(x)`.
    fn is_left_descent(&self, x: &Self::Element, s: usize) -> bool;

    fn is_identity(&self, x: &Self::Element) -> bool {
        *x == self.identity()
    }

    /// Greedy left-descent normal form: repeatedly strip the smallest `s`
    /// with `l(sx) < l(x)`.
    fn reduced_word(&self, x: &Self::Element) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = x.clone();
        while let Some(s) = (0..self.rank()).find(|&s| self.is_left_descent(&cur, s)) {
            word.push(s);
            cur = self.gen_mul(s, &cur);
        }
        word
    }

    fn length(&self, x: &Self::Element) -> usize {
        self.reduced_word(x).len()
    }

    fn left_descents(&self, x: &Self::Element) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.is_left_descent(x, s)).collect()
    }

    fn right_descents(&self, x: &Self::Element) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.is_right_descent(x, s)).collect()
    }

    /// Product of the generators in `word`, left to right. Indices must be
    /// in range.
    fn from_word(&self, word: &[usize]) -> Self::Element {
        word.iter()
            .fold(self.identity(), |acc, &s| self.mul_gen(&acc, s))
    }

    fn multiply(&self, x: &Self::Element, y: &Self::Element) -> Self::Element {
        self.reduced_word(y)
            .into_iter()
            .fold(x.clone(), |acc, s| self.mul_gen(&acc, s))
    }

    fn inverse(&self, x: &Self::Element) -> Self::Element {
        let mut word = self.reduced_word(x);
        word.reverse();
        self.from_word(&word)
    }
}

/// All elements of length at most `radius`, grouped by length.
///
/// Breadth-first over the Cayley graph: each element of length `k + 1` is
/// `x * s` for some `x` of length `k` with `s` not a right descent of `x`.
pub fn length_shells<G: CoxeterGroup>(group: &G, radius: usize) -> Vec<Vec<G::Element>> {
    let mut shells = vec![vec![group.identity()]];
    for _ in 0..radius {
        let last = shells.last().unwrap();
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for x in last {
            for s in 0..group.rank() {
                if group.is_right_descent(x, s) {
                    continue;
                }
                let y = group.mul_gen(x, s);
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        shells.push(next);
    }
    shells
}

/// Flattened [`length_shells`], in nondecreasing length order.
pub fn ball<G: CoxeterGroup>(group: &G, radius: usize) -> Vec<G::Element> {
    length_shells(group, radius).into_iter().flatten().collect()
}
