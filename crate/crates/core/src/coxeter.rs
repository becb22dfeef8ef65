//! Geometric realization of a Coxeter system over an exact real field.
//!
//! Elements are represented by the matrices of their action on
//! `E = span{e_s}` (together with the inverse matrices, so left and right
//! descents are both a column sign test). Two elements are equal iff their
//! matrices are equal, since the realization is faithful.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::CoxeterGroup;
use crate::scalar::{lcm_all, Field, Scalar};

/// Symmetric matrix of orders `m_st`; `None` stands for infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    entries: Vec<Vec<Option<u32>>>,
}

/// On-disk system definition: `{ "rank": n, "matrix": [[...]] }`, with
/// infinity encoded as 0.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SystemFile {
    pub rank: usize,
    pub matrix: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    pub fn new(entries: Vec<Vec<Option<u32>>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        for (row, r) in entries.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare { row, len: r.len(), expected: n });
            }
        }
        for i in 0..n {
            if entries[i][i] != Some(1) {
                return Err(Error::BadDiagonal { index: i });
            }
            for j in 0..n {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::Asymmetric { row: i, col: j });
                }
                if i != j {
                    if let Some(v) = entries[i][j] {
                        if v < 2 {
                            return Err(Error::BadOffDiagonal { row: i, col: j, value: v });
                        }
                    }
                }
            }
        }
        Ok(CoxeterMatrix { entries })
    }

    /// From integer rows with 0 meaning infinity.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| (v != 0).then_some(v)).collect())
                .collect(),
        )
    }

    pub fn from_file(file: &SystemFile) -> Result<Self> {
        if file.matrix.len() != file.rank {
            return Err(Error::RankMismatch { expected: file.rank, got: file.matrix.len() });
        }
        Self::from_rows(&file.matrix)
    }

    pub fn to_file(&self) -> SystemFile {
        SystemFile {
            rank: self.rank(),
            matrix: self
                .entries
                .iter()
                .map(|r| r.iter().map(|v| v.unwrap_or(0)).collect())
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, s: usize, t: usize) -> Option<u32> {
        self.entries[s][t]
    }

    fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize, Option<u32>)>) -> Self {
        let mut entries = vec![vec![Some(2); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = Some(1);
        }
        for (i, j, m) in edges {
            entries[i][j] = m;
            entries[j][i] = m;
        }
        CoxeterMatrix { entries }
    }

    /// Named presets: `A<k>`, `B<k>`, `affine-A<k>`, `I2(<m>)`, `free(<k>)`.
    ///
    /// `affine-A<k>` has generators `s_0, .., s_k` with `s_i`, `s_{i+1}`
    /// adjacent modulo `k + 1`.
    pub fn preset(name: &str) -> Result<Self> {
        let bad = || Error::UnknownPreset(name.to_string());
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        if let Some(k) = name.strip_prefix("affine-A") {
            let k = num(k)?;
            if k == 0 {
                return Err(bad());
            }
            let n = k + 1;
            if n == 2 {
                return Ok(Self::from_edges(2, [(0, 1, None)]));
            }
            return Ok(Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n, Some(3)))));
        }
        if let Some(rest) = name.strip_prefix("I2(") {
            let m = rest.strip_suffix(')').ok_or_else(bad)?;
            let m: u32 = if m == "inf" || m == "0" {
                0
            } else {
                m.parse().map_err(|_| bad())?
            };
            if m == 1 {
                return Err(bad());
            }
            return Ok(Self::from_edges(2, [(0, 1, (m != 0).then_some(m))]));
        }
        if let Some(rest) = name.strip_prefix("free(") {
            let k = num(rest.strip_suffix(')').ok_or_else(bad)?)?;
            if k == 0 {
                return Err(bad());
            }
            let edges: Vec<_> = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j, None)))
                .collect();
            return Ok(Self::from_edges(k, edges));
        }
        if let Some(k) = name.strip_prefix('A') {
            let k = num(k)?;
            if k == 0 {
                return Err(bad());
            }
            return Ok(Self::from_edges(k, (1..k).map(|i| (i - 1, i, Some(3)))));
        }
        if let Some(k) = name.strip_prefix('B') {
            let k = num(k)?;
            if k < 2 {
                return Err(bad());
            }
            let edges = (1..k).map(|i| (i - 1, i, Some(if i == k - 1 { 4 } else { 3 })));
            return Ok(Self::from_edges(k, edges));
        }
        Err(bad())
    }
}

/// A vector of `E` in the basis `{e_s}`; roots are the vectors `x.e_s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coords: Vec<Scalar>,
}

impl Root {
    pub fn neg(&self) -> Root {
        Root { coords: self.coords.iter().map(Scalar::neg).collect() }
    }
}

/// `Phi_x`: positive roots sent to negative roots by `x`.
#[derive(Clone, Debug)]
pub struct InversionSet {
    pub owner: GroupElement,
    pub roots: BTreeSet<Root>,
}

impl InversionSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

static NEXT_SYSTEM_ID: AtomicU64 = AtomicU64::new(0);

/// An element of `W` as the matrix of its action on `E`.
#[derive(Clone)]
pub struct GroupElement {
    system: u64,
    rank: usize,
    /// Row-major; column `s` is `x.e_s`.
    matrix: Arc<[Scalar]>,
    inverse: Arc<[Scalar]>,
    word: Arc<OnceLock<Vec<usize>>>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.system == other.system && self.matrix == other.matrix
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.word.get() {
            Some(w) => write!(f, "GroupElement{w:?}"),
            None => write!(f, "GroupElement(<matrix>)"),
        }
    }
}

impl GroupElement {
    fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.matrix[i * self.rank + j]
    }

    /// `x.e_s`.
    pub fn column(&self, s: usize) -> Root {
        Root { coords: (0..self.rank).map(|i| self.entry(i, s).clone()).collect() }
    }

    pub fn matrix_entries(&self) -> &[Scalar] {
        &self.matrix
    }
}

/// A Coxeter system with its exact geometric realization.
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    id: u64,
    matrix: CoxeterMatrix,
    field: Field,
    /// `(e_s, e_t)`, row-major.
    form: Vec<Scalar>,
    /// `-2(e_s, e_t)`, row-major; the reflection coefficients.
    twice_neg_form: Vec<Scalar>,
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        let n = matrix.rank();
        let finite: Vec<usize> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j)
            .filter_map(|(i, j)| matrix.get(i, j).map(|m| m as usize))
            .collect();
        let field = if finite.iter().all(|&m| m == 2 || m == 3) {
            Field::rational()
        } else {
            Field::two_cos_pi_over(lcm_all(finite.iter().copied()))
        };
        let mut form = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = match matrix.get(i, j) {
                    None => Scalar::from_int(-1),
                    Some(m) => field
                        .cos_pi_over(m as usize)
                        .expect("field order is a multiple of every finite m_st")
                        .neg(),
                };
                form.push(v);
            }
        }
        let minus_two = BigRational::from_integer(BigInt::from(-2));
        let twice_neg_form = form.iter().map(|v| v.scale(&minus_two)).collect();
        CoxeterSystem {
            id: NEXT_SYSTEM_ID.fetch_add(1, AtomicOrdering::Relaxed),
            matrix,
            field,
            form,
            twice_neg_form,
        }
    }

    pub fn preset(name: &str) -> Result<Self> {
        Ok(Self::new(CoxeterMatrix::preset(name)?))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SystemFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Self::new(CoxeterMatrix::from_file(&file)?))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn coxeter_matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `(e_s, e_t)`.
    pub fn form(&self, s: usize, t: usize) -> &Scalar {
        &self.form[s * self.rank() + t]
    }

    fn check_gen(&self, s: usize) -> Result<()> {
        if s < self.rank() {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange { index: s, rank: self.rank() })
        }
    }

    fn check_owned(&self, x: &GroupElement) -> Result<()> {
        if x.system == self.id {
            Ok(())
        } else {
            Err(Error::MixedSystems)
        }
    }

    pub fn simple_root(&self, s: usize) -> Root {
        let mut coords = vec![Scalar::zero(); self.rank()];
        coords[s] = Scalar::from_int(1);
        Root { coords }
    }

    pub fn bilinear(&self, a: &Root, b: &Root) -> Scalar {
        let n = self.rank();
        let mut acc = Scalar::zero();
        for i in 0..n {
            if a.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b.coords[j].is_zero() {
                    continue;
                }
                let ab = self.field.mul(&a.coords[i], &b.coords[j]);
                acc = acc.add(&self.field.mul(&ab, self.form(i, j)));
            }
        }
        acc
    }

    /// `s.e = e - 2(e, e_s) e_s`.
    pub fn act(&self, s: usize, e: &Root) -> Root {
        let n = self.rank();
        let mut pairing = Scalar::zero();
        for t in 0..n {
            pairing = pairing.add(&self.field.mul(&e.coords[t], &self.twice_neg_form[t * n + s]));
        }
        let mut coords = e.coords.clone();
        coords[s] = coords[s].add(&pairing);
        Root { coords }
    }

    /// `x.e`.
    pub fn apply(&self, x: &GroupElement, e: &Root) -> Root {
        let n = self.rank();
        let coords = (0..n)
            .map(|i| {
                (0..n).fold(Scalar::zero(), |acc, j| {
                    acc.add(&self.field.mul(x.entry(i, j), &e.coords[j]))
                })
            })
            .collect();
        Root { coords }
    }

    /// Sign of a root, read off its first nonzero coordinate.
    pub fn root_sign(&self, e: &Root) -> Ordering {
        e.coords
            .iter()
            .find(|c| !c.is_zero())
            .map_or(Ordering::Equal, |c| self.field.sign(c))
    }

    pub fn is_positive(&self, e: &Root) -> bool {
        self.root_sign(e) == Ordering::Greater
    }

    pub fn is_negative(&self, e: &Root) -> bool {
        self.root_sign(e) == Ordering::Less
    }

    /// Whether all coordinates are `>= 0` or all are `<= 0`, each decided
    /// exactly.
    pub fn is_sign_uniform(&self, e: &Root) -> bool {
        let signs: Vec<Ordering> = e.coords.iter().map(|c| self.field.sign(c)).collect();
        !(signs.contains(&Ordering::Greater) && signs.contains(&Ordering::Less))
    }

    /// `s.beta >= beta`, i.e. `s.beta - beta = n e_s` with `n >= 0`.
    pub fn reflection_raises(&self, s: usize, beta: &Root) -> bool {
        let n = self.rank();
        let coeff = (0..n).fold(Scalar::zero(), |acc, t| {
            acc.add(&self.field.mul(&beta.coords[t], &self.twice_neg_form[t * n + s]))
        });
        self.field.is_nonnegative(&coeff)
    }

    fn make(&self, matrix: Vec<Scalar>, inverse: Vec<Scalar>) -> GroupElement {
        GroupElement {
            system: self.id,
            rank: self.rank(),
            matrix: matrix.into(),
            inverse: inverse.into(),
            word: Arc::new(OnceLock::new()),
        }
    }

    pub fn identity(&self) -> GroupElement {
        let n = self.rank();
        let id: Vec<Scalar> = (0..n * n)
            .map(|k| if k / n == k % n { Scalar::from_int(1) } else { Scalar::zero() })
            .collect();
        let e = self.make(id.clone(), id);
        let _ = e.word.set(Vec::new());
        e
    }

    pub fn generator(&self, s: usize) -> Result<GroupElement> {
        self.check_gen(s)?;
        Ok(self.mul_gen_raw(&self.identity(), s))
    }

    /// `M * sigma(s)`: column `t` gains `-2(e_t, e_s)` times column `s`,
    /// column `s` is negated.
    fn right_reflect(&self, m: &[Scalar], s: usize) -> Vec<Scalar> {
        let n = self.rank();
        let mut out = m.to_vec();
        for t in 0..n {
            let coeff = &self.twice_neg_form[t * n + s];
            if t == s || coeff.is_zero() {
                continue;
            }
            for i in 0..n {
                let add = self.field.mul(&m[i * n + s], coeff);
                out[i * n + t] = out[i * n + t].add(&add);
            }
        }
        for i in 0..n {
            out[i * n + s] = m[i * n + s].neg();
        }
        out
    }

    /// `sigma(s) * M`: only row `s` changes.
    fn left_reflect(&self, m: &[Scalar], s: usize) -> Vec<Scalar> {
        let n = self.rank();
        let mut out = m.to_vec();
        for j in 0..n {
            let mut v = m[s * n + j].clone();
            for t in 0..n {
                let coeff = &self.twice_neg_form[t * n + s];
                if coeff.is_zero() || m[t * n + j].is_zero() {
                    continue;
                }
                v = v.add(&self.field.mul(&m[t * n + j], coeff));
            }
            out[s * n + j] = v;
        }
        out
    }

    fn mul_gen_raw(&self, x: &GroupElement, s: usize) -> GroupElement {
        self.make(self.right_reflect(&x.matrix, s), self.left_reflect(&x.inverse, s))
    }

    fn gen_mul_raw(&self, s: usize, x: &GroupElement) -> GroupElement {
        self.make(self.left_reflect(&x.matrix, s), self.right_reflect(&x.inverse, s))
    }

    fn column_sign(&self, m: &[Scalar], s: usize) -> Ordering {
        let n = self.rank();
        (0..n)
            .map(|i| &m[i * n + s])
            .find(|c| !c.is_zero())
            .map_or(Ordering::Equal, |c| self.field.sign(c))
    }

    pub fn element_from_word(&self, word: &[usize]) -> Result<GroupElement> {
        for &s in word {
            self.check_gen(s)?;
        }
        Ok(word.iter().fold(self.identity(), |acc, &s| self.mul_gen_raw(&acc, s)))
    }

    pub fn multiply(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.check_owned(x)?;
        self.check_owned(y)?;
        Ok(self.product(x, y))
    }

    fn matmul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.rank();
        let mut out = vec![Scalar::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = &a[i * n + k];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let bkj = &b[k * n + j];
                    if bkj.is_zero() {
                        continue;
                    }
                    out[i * n + j] = out[i * n + j].add(&self.field.mul(aik, bkj));
                }
            }
        }
        out
    }

    fn product(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.make(self.matmul(&x.matrix, &y.matrix), self.matmul(&y.inverse, &x.inverse))
    }

    pub fn invert(&self, x: &GroupElement) -> GroupElement {
        let inv = GroupElement {
            system: x.system,
            rank: x.rank,
            matrix: x.inverse.clone(),
            inverse: x.matrix.clone(),
            word: Arc::new(OnceLock::new()),
        };
        if let Some(w) = x.word.get() {
            let _ = inv.word.set(w.iter().rev().copied().collect());
        }
        inv
    }

    /// `l(xs) < l(x)`, decided by the sign of `x.e_s`.
    pub fn right_descent(&self, x: &GroupElement, s: usize) -> bool {
        self.column_sign(&x.matrix, s) == Ordering::Less
    }

    pub fn left_descent(&self, x: &GroupElement, s: usize) -> bool {
        self.column_sign(&x.inverse, s) == Ordering::Less
    }

    /// Canonical reduced word (greedy left-descent normal form), memoized.
    pub fn word(&self, x: &GroupElement) -> Vec<usize> {
        x.word
            .get_or_init(|| {
                let n = self.rank();
                let mut word = Vec::new();
                let mut inv = x.inverse.to_vec();
                while let Some(s) =
                    (0..n).find(|&s| self.column_sign(&inv, s) == Ordering::Less)
                {
                    word.push(s);
                    inv = self.right_reflect(&inv, s);
                }
                word
            })
            .clone()
    }

    pub fn length(&self, x: &GroupElement) -> usize {
        match x.word.get() {
            Some(w) => w.len(),
            None => self.word(x).len(),
        }
    }

    pub fn reduce_word(&self, word: &[usize]) -> Result<Vec<usize>> {
        Ok(self.word(&self.element_from_word(word)?))
    }

    /// `{ s_k ... s_{i+1} . e_{s_i} }` for the canonical reduced word
    /// `s_1 ... s_k` of `x`.
    pub fn inversion_set(&self, x: &GroupElement) -> InversionSet {
        let word = self.word(x);
        let mut roots = BTreeSet::new();
        for i in 0..word.len() {
            let mut r = self.simple_root(word[i]);
            for &s in &word[i + 1..] {
                r = self.act(s, &r);
            }
            roots.insert(r);
        }
        InversionSet { owner: x.clone(), roots }
    }

    /// The two parts `(Phi_y \ y^-1.Phi^-_x, y^-1.Phi_x \ Phi^-_y)` whose
    /// disjoint union is `Phi_xy`.
    pub fn inversion_product_parts(
        &self,
        x: &GroupElement,
        y: &GroupElement,
    ) -> Result<(BTreeSet<Root>, BTreeSet<Root>)> {
        self.check_owned(x)?;
        self.check_owned(y)?;
        let phi_x = self.inversion_set(x).roots;
        let phi_y = self.inversion_set(y).roots;
        let y_inv = self.invert(y);
        let moved_x: BTreeSet<Root> = phi_x.iter().map(|a| self.apply(&y_inv, a)).collect();
        let moved_neg_x: BTreeSet<Root> = moved_x.iter().map(Root::neg).collect();
        let neg_y: BTreeSet<Root> = phi_y.iter().map(Root::neg).collect();
        let first = phi_y.difference(&moved_neg_x).cloned().collect();
        let second = moved_x.difference(&neg_y).cloned().collect();
        Ok((first, second))
    }

    /// Positive roots of depth at most `depth`, simple roots having depth 1.
    pub fn positive_roots(&self, depth: usize) -> Vec<Root> {
        let mut seen: BTreeSet<Root> = BTreeSet::new();
        let mut frontier: Vec<Root> = (0..self.rank()).map(|s| self.simple_root(s)).collect();
        let mut out = Vec::new();
        for _ in 0..depth {
            let mut next = Vec::new();
            for r in frontier {
                if seen.insert(r.clone()) {
                    next.push(r.clone());
                    out.push(r);
                }
            }
            frontier = Vec::new();
            for r in &next {
                for s in 0..self.rank() {
                    let moved = self.act(s, r);
                    if moved != *r && self.is_positive(&moved) && !seen.contains(&moved) {
                        // s.r > r exactly when the reflection coefficient is positive
                        if self.reflection_raises(s, r) {
                            frontier.push(moved);
                        }
                    }
                }
            }
            if frontier.is_empty() {
                break;
            }
        }
        out
    }

    pub fn render_root(&self, r: &Root) -> String {
        let parts: Vec<String> = r.coords.iter().map(|c| self.field.render(c)).collect();
        format!("({})", parts.join(", "))
    }
}

impl CoxeterGroup for CoxeterSystem {
    type Element = GroupElement;

    fn rank(&self) -> usize {
        self.matrix.rank()
    }

    fn coxeter_entry(&self, s: usize, t: usize) -> Option<u32> {
        self.matrix.get(s, t)
    }

    fn identity(&self) -> GroupElement {
        CoxeterSystem::identity(self)
    }

    fn mul_gen(&self, x: &GroupElement, s: usize) -> GroupElement {
        self.mul_gen_raw(x, s)
    }

    fn gen_mul(&self, s: usize, x: &GroupElement) -> GroupElement {
        self.gen_mul_raw(s, x)
    }

    fn is_right_descent(&self, x: &GroupElement, s: usize) -> bool {
        self.right_descent(x, s)
    }

    fn is_left_descent(&self, x: &GroupElement, s: usize) -> bool {
        self.left_descent(x, s)
    }

    fn is_identity(&self, x: &GroupElement) -> bool {
        (0..self.rank()).all(|s| !self.left_descent(x, s))
    }

    fn reduced_word(&self, x: &GroupElement) -> Vec<usize> {
        self.word(x)
    }

    fn length(&self, x: &GroupElement) -> usize {
        CoxeterSystem::length(self, x)
    }

    fn multiply(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.product(x, y)
    }

    fn inverse(&self, x: &GroupElement) -> GroupElement {
        self.invert(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> Scalar {
        Scalar::from_rational(BigRational::new(1.into(), 2.into()))
    }

    fn root(sys: &CoxeterSystem, coords: &[i64]) -> Root {
        assert_eq!(coords.len(), sys.rank());
        Root { coords: coords.iter().map(|&c| Scalar::from_int(c)).collect() }
    }

    #[test]
    fn form_values() {
        let a2 = CoxeterSystem::new(CoxeterMatrix::from_rows(&[vec![1, 3], vec![3, 1]]).unwrap());
        assert_eq!(*a2.form(0, 1), half().neg());
        assert_eq!(*a2.form(0, 0), Scalar::from_int(1));
        let inf = CoxeterSystem::new(CoxeterMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap());
        assert_eq!(*inf.form(0, 1), Scalar::from_int(-1));
        let b2 = CoxeterSystem::preset("B2").unwrap();
        let v = b2.field().to_f64(b2.form(0, 1));
        assert!((v + std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn matrix_validation() {
        assert_eq!(
            CoxeterMatrix::from_rows(&[vec![1, 2], vec![3, 1]]),
            Err(Error::Asymmetric { row: 0, col: 1 })
        );
        assert_eq!(
            CoxeterMatrix::from_rows(&[vec![2, 3], vec![3, 1]]),
            Err(Error::BadDiagonal { index: 0 })
        );
        assert!(matches!(
            CoxeterMatrix::new(vec![vec![Some(1), Some(1)], vec![Some(1), Some(1)]]),
            Err(Error::BadOffDiagonal { row: 0, col: 1, value: 1 })
        ));
        assert!(matches!(
            CoxeterMatrix::from_rows(&[vec![1, 3], vec![3]]),
            Err(Error::NotSquare { row: 1, .. })
        ));
        assert_eq!(CoxeterMatrix::from_rows(&[]), Err(Error::EmptyMatrix));
    }

    #[test]
    fn presets_parse() {
        for name in ["A1", "A3", "B3", "affine-A1", "affine-A3", "I2(5)", "I2(inf)", "free(3)"] {
            CoxeterMatrix::preset(name).unwrap();
        }
        for name in ["A0", "B1", "C3", "affine-A0", "I2(1)", "free(0)", "I2(5"] {
            assert!(CoxeterMatrix::preset(name).is_err(), "{name}");
        }
        let aff = CoxeterMatrix::preset("affine-A2").unwrap();
        assert_eq!(aff.get(0, 2), Some(3));
        assert_eq!(CoxeterMatrix::preset("affine-A1").unwrap().get(0, 1), None);
    }

    #[test]
    fn json_round_trip() {
        let sys = CoxeterSystem::from_json(r#"{"rank": 2, "matrix": [[1, 0], [0, 1]]}"#).unwrap();
        assert_eq!(sys.coxeter_matrix().get(0, 1), None);
        assert!(CoxeterSystem::from_json(r#"{"rank": 3, "matrix": [[1, 0], [0, 1]]}"#).is_err());
        let file = CoxeterMatrix::preset("B3").unwrap().to_file();
        assert_eq!(CoxeterMatrix::from_file(&file).unwrap(), CoxeterMatrix::preset("B3").unwrap());
    }

    #[test]
    fn act_examples() {
        let a2 = CoxeterSystem::preset("A2").unwrap();
        let e0 = a2.simple_root(0);
        let e1 = a2.simple_root(1);
        assert_eq!(a2.act(0, &e0), e0.neg());
        assert_eq!(a2.act(0, &e1), root(&a2, &[1, 1]));
        assert_eq!(a2.act(0, &a2.act(0, &e1)), e1);
    }

    #[test]
    fn multiply_examples() {
        let a2 = CoxeterSystem::preset("A2").unwrap();
        let s0 = a2.generator(0).unwrap();
        let x = a2.element_from_word(&[0, 1]).unwrap();
        let y = a2.element_from_word(&[1, 0]).unwrap();
        assert_eq!(a2.multiply(&x, &a2.identity()).unwrap(), x);
        assert_eq!(a2.multiply(&s0, &s0).unwrap(), a2.identity());
        assert_eq!(a2.multiply(&x, &y).unwrap(), a2.identity());
        let other = CoxeterSystem::preset("A2").unwrap();
        assert_eq!(a2.multiply(&x, &other.identity()), Err(Error::MixedSystems));
    }

    #[test]
    fn descents_and_lengths() {
        let a2 = CoxeterSystem::preset("A2").unwrap();
        let id = a2.identity();
        assert!((0..2).all(|s| !a2.right_descent(&id, s)));
        let x = a2.element_from_word(&[0, 1]).unwrap();
        assert!(a2.right_descent(&x, 1));
        assert!(!a2.right_descent(&x, 0));
        assert_eq!(a2.length(&id), 0);
        assert_eq!(a2.length(&a2.element_from_word(&[0, 1, 0]).unwrap()), 3);
        let aff = CoxeterSystem::preset("affine-A1").unwrap();
        assert_eq!(aff.length(&aff.element_from_word(&[0, 1, 0, 1, 0, 1]).unwrap()), 6);
    }

    #[test]
    fn reduce_word_examples() {
        let a2 = CoxeterSystem::preset("A2").unwrap();
        assert_eq!(a2.reduce_word(&[0, 0]).unwrap(), Vec::<usize>::new());
        let w = a2.reduce_word(&[1, 0, 1]).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(a2.element_from_word(&w).unwrap(), a2.element_from_word(&[0, 1, 0]).unwrap());
        assert_eq!(w, vec![0, 1, 0]);
        assert!(a2.reduce_word(&[0, 1, 1, 0]).unwrap().is_empty());
        assert_eq!(a2.reduce_word(&[1, 0, 1, 1, 0]).unwrap(), vec![1]);
        assert_eq!(
            a2.reduce_word(&[0, 2]),
            Err(Error::GeneratorOutOfRange { index: 2, rank: 2 })
        );
    }

    #[test]
    fn inversion_set_examples() {
        let a2 = CoxeterSystem::preset("A2").unwrap();
        for s in 0..2 {
            let phi = a2.inversion_set(&a2.generator(s).unwrap());
            assert_eq!(phi.roots, BTreeSet::from([a2.simple_root(s)]));
        }
        assert!(a2.inversion_set(&a2.identity()).is_empty());
        let x = a2.element_from_word(&[0, 1]).unwrap();
        let want = BTreeSet::from([root(&a2, &[0, 1]), root(&a2, &[1, 1])]);
        assert_eq!(a2.inversion_set(&x).roots, want);
        // brute force: filter the positive roots by the sign of x.alpha
        let brute: BTreeSet<Root> = a2
            .positive_roots(8)
            .into_iter()
            .filter(|a| a2.is_negative(&a2.apply(&x, a)))
            .collect();
        assert_eq!(brute, want);
    }

    #[test]
    fn inversion_product_parts_examples() {
        let a2 = CoxeterSystem::preset("A2").unwrap();
        let x = a2.element_from_word(&[0, 1]).unwrap();
        let id = a2.identity();
        let phi_x = a2.inversion_set(&x).roots;
        assert_eq!(a2.inversion_product_parts(&x, &id).unwrap(), (BTreeSet::new(), phi_x.clone()));
        assert_eq!(a2.inversion_product_parts(&id, &x).unwrap(), (phi_x, BTreeSet::new()));
        let s0 = a2.generator(0).unwrap();
        let s1 = a2.generator(1).unwrap();
        let (a, b) = a2.inversion_product_parts(&s0, &s1).unwrap();
        let union: BTreeSet<Root> = a.union(&b).cloned().collect();
        assert!(a.is_disjoint(&b));
        assert_eq!(union, a2.inversion_set(&x).roots);
    }

    #[test]
    fn positive_roots_counts() {
        assert_eq!(CoxeterSystem::preset("A3").unwrap().positive_roots(8).len(), 6);
        assert_eq!(CoxeterSystem::preset("B3").unwrap().positive_roots(8).len(), 9);
        assert_eq!(CoxeterSystem::preset("I2(5)").unwrap().positive_roots(8).len(), 5);
        // affine A1: one new root per depth on each side beyond the first
        assert_eq!(CoxeterSystem::preset("affine-A1").unwrap().positive_roots(4).len(), 8);
    }

    #[test]
    fn roots_have_unit_norm_in_h3() {
        let h3 = CoxeterSystem::new(
            CoxeterMatrix::from_rows(&[vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]]).unwrap(),
        );
        let roots = h3.positive_roots(20);
        assert_eq!(roots.len(), 15);
        for r in &roots {
            assert_eq!(h3.bilinear(r, r), Scalar::from_int(1));
            assert!(h3.is_sign_uniform(r));
        }
        let longest = crate::group::ball(&h3, 20).pop().unwrap();
        assert_eq!(h3.length(&longest), 15);
        assert_eq!(h3.inversion_set(&longest).len(), 15);
    }
}
