//! The extended affine Weyl group of `GL_n` as affine permutations, the
//! superbasic twist and the length estimates built on it.
//!
//! An affine permutation is a bijection `v: Z -> Z` with
//! `v(i + n) = v(i) + n`, stored as its window `(v(1), .., v(n))`.
//! Products are composition, `(uv)(i) = u(v(i))`. The translation `e^lambda`
//! is `i -> i + n*lambda_i`, and the simple reflections are `s_i`
//! (`1 <= i < n`) swapping `i` and `i + 1`, and `s_0` swapping `0` and `1`,
//! all extended periodically. With these conventions
//! `s_0 = e^(1,0,..,0,-1) s_theta`.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{length_shells, CoxeterGroup};
use crate::hecke::HeckeAlgebra;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::RankTooSmall(0));
        }
        let residues: HashSet<i64> = window.iter().map(|v| v.rem_euclid(n as i64)).collect();
        if residues.len() != n {
            return Err(Error::BadWindow { n, window });
        }
        Ok(AffinePermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        AffinePermutation { window: (1..=n as i64).collect() }
    }

    /// `s_i`, with `i` taken modulo `n`.
    pub fn simple_reflection(n: usize, i: usize) -> Self {
        AffineTypeA::new_unchecked(n).mul_gen(&Self::identity(n), i % n)
    }

    /// `e^lambda : i -> i + n*lambda_i`.
    pub fn translation(lambda: &Cocharacter) -> Self {
        let n = lambda.rank() as i64;
        AffinePermutation {
            window: (1..=n).map(|i| i + n * lambda.get(i)).collect(),
        }
    }

    /// `v_f e^lambda`, i.e. `v(i) = v_f(i) + n*lambda_i`.
    ///
    /// `finite` is a permutation of `1..=n` in one-line notation.
    pub fn from_parts(finite: &[usize], lambda: &Cocharacter) -> Result<Self> {
        let n = finite.len();
        if lambda.rank() != n {
            return Err(Error::RankMismatch { expected: n, got: lambda.rank() });
        }
        let mut seen = vec![false; n + 1];
        for &v in finite {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotPermutation { n, detail: format!("{finite:?}") });
            }
            seen[v] = true;
        }
        let n = n as i64;
        Ok(AffinePermutation {
            window: finite
                .iter()
                .enumerate()
                .map(|(i, &f)| f as i64 + n * lambda.get(i as i64 + 1))
                .collect(),
        })
    }

    /// Inverse of [`from_parts`](Self::from_parts).
    pub fn to_parts(&self) -> (Vec<usize>, Cocharacter) {
        let n = self.n() as i64;
        let finite: Vec<usize> = self
            .window
            .iter()
            .map(|&v| ((v - 1).rem_euclid(n) + 1) as usize)
            .collect();
        let lambda = self
            .window
            .iter()
            .zip(&finite)
            .map(|(&v, &f)| (v - f as i64) / n)
            .collect();
        (finite, Cocharacter(lambda))
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `v(i)` for any integer `i`.
    pub fn value(&self, i: i64) -> i64 {
        let n = self.n() as i64;
        let (q, r) = (i - 1).div_mod_floor(&n);
        self.window[r as usize] + q * n
    }

    /// `(sum_i v(i) - i) / n`: the valuation of the determinant. Zero
    /// exactly on the affine Weyl group `W_a`.
    pub fn component(&self) -> i64 {
        let n = self.n() as i64;
        let total: i64 = self
            .window
            .iter()
            .enumerate()
            .map(|(i, v)| v - (i as i64 + 1))
            .sum();
        total / n
    }

    pub fn is_affine_weyl(&self) -> bool {
        self.component() == 0
    }

    /// `self * other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &AffinePermutation) -> AffinePermutation {
        debug_assert_eq!(self.n(), other.n());
        AffinePermutation {
            window: other.window.iter().map(|&j| self.value(j)).collect(),
        }
    }

    pub fn inverse(&self) -> AffinePermutation {
        let n = self.n() as i64;
        let mut window = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            let (q, r) = (v - 1).div_mod_floor(&n);
            window[r as usize] = i as i64 + 1 - q * n;
        }
        AffinePermutation { window }
    }

    /// Number of inversions `#{(i, j) : 1 <= i <= n, i < j, v(i) > v(j)}`,
    /// computed as `sum_{i<j<=n} |floor((v(j) - v(i)) / n)|`.
    pub fn length(&self) -> usize {
        let n = self.n() as i64;
        let mut total = 0;
        for i in 0..self.window.len() {
            for j in i + 1..self.window.len() {
                total += Integer::div_floor(&(self.window[j] - self.window[i]), &n).unsigned_abs() as usize;
            }
        }
        total
    }
}

/// `#{(i, j) : 1 <= i <= n, i < j, v(i) > v(j)}` by scanning every pair
/// that can still be inverted. Independent of [`AffinePermutation::length`].
pub fn count_inversions_directly(v: &AffinePermutation) -> usize {
    let n = v.n() as i64;
    let spread = v.window().iter().max().unwrap() - v.window().iter().min().unwrap();
    // v(j) - v(i) > spread once j - i exceeds n * (spread / n + 1)
    let reach = n * (spread / n + 2);
    let mut count = 0;
    for i in 1..=n {
        for j in i + 1..=i + reach {
            if v.value(i) > v.value(j) {
                count += 1;
            }
        }
    }
    count
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `lambda = (lambda_1, .., lambda_n)`, indexed periodically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cocharacter(pub Vec<i64>);

impl Cocharacter {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `lambda_i` for any integer `i`, via the representative in `1..=n`.
    pub fn get(&self, i: i64) -> i64 {
        self.0[(i - 1).rem_euclid(self.rank() as i64) as usize]
    }

    /// `(lambda_{1+k}, .., lambda_{n+k})`.
    pub fn rotate(&self, k: i64) -> Cocharacter {
        Cocharacter((1..=self.rank() as i64).map(|i| self.get(i + k)).collect())
    }

    /// `sum_{i != j} |lambda_i - lambda_j|`.
    pub fn pairwise_spread(&self) -> i64 {
        let mut total = 0;
        for a in &self.0 {
            for b in &self.0 {
                total += (a - b).abs();
            }
        }
        total
    }
}

impl fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The affine Weyl group `W_a` of type `A_{n-1}` acting on affine
/// permutations, with generators `s_0, .., s_{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffineTypeA {
    n: usize,
}

impl AffineTypeA {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        Ok(AffineTypeA { n })
    }

    fn new_unchecked(n: usize) -> Self {
        AffineTypeA { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Image of `j` under `s_i`.
    fn reflect_value(&self, i: usize, j: i64) -> i64 {
        let n = self.n as i64;
        let r = j.rem_euclid(n);
        if r == i as i64 {
            j + 1
        } else if r == (i as i64 + 1) % n {
            j - 1
        } else {
            j
        }
    }
}

impl CoxeterGroup for AffineTypeA {
    type Element = AffinePermutation;

    fn rank(&self) -> usize {
        self.n
    }

    fn coxeter_entry(&self, s: usize, t: usize) -> Option<u32> {
        if s == t {
            return Some(1);
        }
        if self.n == 2 {
            return None;
        }
        let d = (s + self.n - t) % self.n;
        Some(if d == 1 || d == self.n - 1 { 3 } else { 2 })
    }

    fn identity(&self) -> AffinePermutation {
        AffinePermutation::identity(self.n)
    }

    fn mul_gen(&self, x: &AffinePermutation, s: usize) -> AffinePermutation {
        let mut window = x.window.clone();
        let n = self.n;
        if s == 0 {
            window[0] = x.window[n - 1] - n as i64;
            window[n - 1] = x.window[0] + n as i64;
        } else {
            window.swap(s - 1, s);
        }
        AffinePermutation { window }
    }

    fn gen_mul(&self, s: usize, x: &AffinePermutation) -> AffinePermutation {
        AffinePermutation {
            window: x.window.iter().map(|&j| self.reflect_value(s, j)).collect(),
        }
    }

    fn is_right_descent(&self, x: &AffinePermutation, s: usize) -> bool {
        x.value(s as i64) > x.value(s as i64 + 1)
    }

    fn is_left_descent(&self, x: &AffinePermutation, s: usize) -> bool {
        let inv = x.inverse();
        inv.value(s as i64) > inv.value(s as i64 + 1)
    }

    fn is_identity(&self, x: &AffinePermutation) -> bool {
        x.window.iter().enumerate().all(|(i, &v)| v == i as i64 + 1)
    }

    fn length(&self, x: &AffinePermutation) -> usize {
        x.length()
    }

    fn multiply(&self, x: &AffinePermutation, y: &AffinePermutation) -> AffinePermutation {
        x.compose(y)
    }

    fn inverse(&self, x: &AffinePermutation) -> AffinePermutation {
        x.inverse()
    }
}

/// A superbasic datum: slope `m/n` with `gcd(m, n) = 1`, and the
/// representative `b : i -> i + m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuperbasicDatum {
    n: usize,
    m: i64,
}

impl SuperbasicDatum {
    pub fn new(n: usize, m: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        if m.gcd(&(n as i64)) != 1 {
            return Err(Error::NotCoprime { n, m });
        }
        Ok(SuperbasicDatum { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Representatives of every slope class `m mod n` coprime to `n`.
    pub fn all(n: usize) -> Vec<SuperbasicDatum> {
        (1..n as i64)
            .filter_map(|m| SuperbasicDatum::new(n, m).ok())
            .collect()
    }

    fn check_rank(&self, got: usize) -> Result<()> {
        if got == self.n {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.n, got })
        }
    }

    /// `b = b_1^m : i -> i + m` (component `m`).
    pub fn element(&self) -> AffinePermutation {
        AffinePermutation {
            window: (1..=self.n as i64).map(|i| i + self.m).collect(),
        }
    }

    /// Conjugation by `b`: `beta(v)(i) = v(i - m) + m`.
    pub fn twist(&self, v: &AffinePermutation) -> Result<AffinePermutation> {
        self.check_rank(v.n())?;
        Ok(self.twist_unchecked(v))
    }

    fn twist_unchecked(&self, v: &AffinePermutation) -> AffinePermutation {
        AffinePermutation {
            window: (1..=self.n as i64).map(|i| v.value(i - self.m) + self.m).collect(),
        }
    }

    /// `beta(v) v^-1`.
    pub fn twist_defect(&self, v: &AffinePermutation) -> Result<AffinePermutation> {
        Ok(self.twist(v)?.compose(&v.inverse()))
    }

    /// The unique `0 <= d < n` with `m*d = k (mod n)`.
    pub fn d_of(&self, k: i64) -> usize {
        let n = self.n as i64;
        let inv = self.m.rem_euclid(n).extended_gcd(&n).x;
        (inv * k).rem_euclid(n) as usize
    }
}

/// `S_k = sum_{1<=i<=n} |lambda_{i+k} - lambda_i|` for `1 <= k <= n - 1`.
pub fn s_k_sum(lambda: &Cocharacter, k: usize) -> Result<i64> {
    let n = lambda.rank();
    if k == 0 || k >= n {
        return Err(Error::ShiftOutOfRange { k, max: n.saturating_sub(1) });
    }
    Ok((1..=n as i64)
        .map(|i| (lambda.get(i + k as i64) - lambda.get(i)).abs())
        .sum())
}

/// A linear lower bound `f(z) = a z + b` together with the cap `c` on the
/// length of the finite part that it was derived from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundSpec {
    pub a: Rational64,
    pub b: Rational64,
    pub c: i64,
}

impl BoundSpec {
    /// From the translation-only slope `a = 2/(n-1)` and a finite-part cap
    /// `c`: `f(z) = a z - (2 + a) c`.
    fn with_cap(n: usize, c: i64) -> Self {
        let a = Rational64::new(2, n as i64 - 1);
        let b = -(Rational64::from_integer(2) + a) * Rational64::from_integer(c);
        BoundSpec { a, b, c }
    }

    pub fn eval(&self, z: i64) -> Rational64 {
        self.a * Rational64::from_integer(z) + self.b
    }

    /// Largest `z >= 0` with `f(z) < r`, if any.
    pub fn max_length_below(&self, r: i64) -> Option<usize> {
        let q = (Rational64::from_integer(r) - self.b) / self.a;
        let z = q.ceil().to_integer() - 1;
        (z >= 0).then_some(z as usize)
    }

    /// Largest `z >= 0` with `f(z) <= r`, if any.
    pub fn max_length_at_most(&self, r: i64) -> Option<usize> {
        let q = (Rational64::from_integer(r) - self.b) / self.a;
        let z = q.floor().to_integer();
        (z >= 0).then_some(z as usize)
    }
}

fn render_rational(q: Rational64) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for BoundSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slope = if self.a == Rational64::from_integer(1) {
            "z".to_string()
        } else if self.a.is_integer() {
            format!("{}z", self.a.to_integer())
        } else {
            format!("({})z", render_rational(self.a))
        };
        write!(f, "f(z) = {slope}")?;
        if !self.b.is_zero() {
            let sign = if self.b.is_negative() { '-' } else { '+' };
            write!(f, " {sign} {}", render_rational(self.b.abs()))?;
        }
        Ok(())
    }
}

/// The printed bound `f(z) = 2/(n-1) z - 2n(2n-3)/(n-1)`, cap `c = 2n - 3`.
pub fn bound_f(n: usize) -> Result<BoundSpec> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    Ok(BoundSpec::with_cap(n, 2 * n as i64 - 3))
}

/// Length of the longest element of the finite Weyl group, `n(n-1)/2`.
pub fn longest_finite_length(n: usize) -> i64 {
    (n * (n - 1) / 2) as i64
}

/// The bound used for enumeration radii: cap `max(2n - 3, n(n-1)/2)`.
/// Agrees with [`bound_f`] for `n <= 3`.
pub fn effective_bound(n: usize) -> Result<BoundSpec> {
    let printed = bound_f(n)?;
    Ok(BoundSpec::with_cap(n, printed.c.max(longest_finite_length(n))))
}

/// Every `v` in `W_a` with `l(v) <= radius`, sorted by `(length, window)`.
pub fn enumerate_ball(n: usize, radius: usize) -> Result<Vec<AffinePermutation>> {
    let group = AffineTypeA::new(n)?;
    Ok(length_shells(&group, radius)
        .into_iter()
        .flat_map(|mut shell| {
            shell.sort();
            shell
        })
        .collect())
}

/// `{ v in W_a : l(beta(v) v^-1) < r }`.
pub fn small_twist_set(datum: &SuperbasicDatum, r: i64) -> Result<Vec<AffinePermutation>> {
    let bound = effective_bound(datum.n())?;
    let Some(radius) = bound.max_length_below(r) else {
        return Ok(Vec::new());
    };
    Ok(enumerate_ball(datum.n(), radius)?
        .into_iter()
        .filter(|v| (datum.twist_defect(v).unwrap().length() as i64) < r)
        .collect())
}

/// `{ v in W_a : w_a in D(v^-1, beta(v)) }`, sorted by `(length, window)`.
///
/// Only `v` with `f(l(v)) <= l(w_a)` can qualify, which bounds the search.
pub fn candidate_cells(datum: &SuperbasicDatum, w_a: &AffinePermutation) -> Result<Vec<AffinePermutation>> {
    datum.check_rank(w_a.n())?;
    if !w_a.is_affine_weyl() {
        return Err(Error::NonzeroComponent(w_a.component()));
    }
    let bound = effective_bound(datum.n())?;
    let Some(radius) = bound.max_length_at_most(w_a.length() as i64) else {
        return Ok(Vec::new());
    };
    let group = AffineTypeA::new(datum.n())?;
    let hecke = HeckeAlgebra::new(group);
    Ok(enumerate_ball(datum.n(), radius)?
        .into_iter()
        .filter(|v| {
            let x = v.inverse();
            let y = datum.twist_unchecked(v);
            !hecke.t_mult(&x, &y).coeff(w_a).is_zero()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(w: &[i64]) -> AffinePermutation {
        AffinePermutation::new(w.to_vec()).unwrap()
    }

    #[test]
    fn from_parts_examples() {
        let id3 = [1, 2, 3];
        assert_eq!(
            AffinePermutation::from_parts(&id3, &Cocharacter(vec![0, 0, 0])).unwrap(),
            AffinePermutation::identity(3)
        );
        assert_eq!(
            AffinePermutation::from_parts(&[1, 2], &Cocharacter(vec![1, -1])).unwrap(),
            perm(&[3, 0])
        );
        assert_eq!(
            AffinePermutation::from_parts(&id3, &Cocharacter(vec![1, 0, -1])).unwrap(),
            perm(&[4, 2, 0])
        );
        assert!(AffinePermutation::from_parts(&[1, 1], &Cocharacter(vec![0, 0])).is_err());
        let v = perm(&[5, -3, 4]);
        let (f, l) = v.to_parts();
        assert_eq!(AffinePermutation::from_parts(&f, &l).unwrap(), v);
    }

    #[test]
    fn s0_is_translation_times_reflection() {
        for n in 2..6usize {
            let mut theta = vec![0; n];
            theta[0] = 1;
            theta[n - 1] = -1;
            let mut s_theta: Vec<usize> = (1..=n).collect();
            s_theta.swap(0, n - 1);
            let eps = AffinePermutation::translation(&Cocharacter(theta));
            let fin = AffinePermutation::from_parts(&s_theta, &Cocharacter(vec![0; n])).unwrap();
            assert_eq!(eps.compose(&fin), AffinePermutation::simple_reflection(n, 0));
        }
    }

    #[test]
    fn window_validation() {
        assert!(AffinePermutation::new(vec![1, 3]).is_err());
        assert!(AffinePermutation::new(vec![3, 0]).is_ok());
        assert_eq!(perm(&[3, 0]).component(), 0);
        assert_eq!(perm(&[2, 3]).component(), 1);
    }

    #[test]
    fn length_examples() {
        assert_eq!(AffinePermutation::identity(3).length(), 0);
        assert_eq!(perm(&[4, 2, 0]).length(), 4);
        assert_eq!(perm(&[3, 0]).length(), 2);
        for w in [[4, 2, 0], [5, -3, 4], [0, 2, 4], [7, -1, 0]] {
            let v = perm(&w);
            assert_eq!(v.length(), count_inversions_directly(&v), "{v}");
        }
    }

    #[test]
    fn twist_examples() {
        let d = SuperbasicDatum::new(3, 1).unwrap();
        let s = |i| AffinePermutation::simple_reflection(3, i);
        assert_eq!(d.twist(&s(0)).unwrap(), s(1));
        assert_eq!(d.twist(&AffinePermutation::identity(3)).unwrap(), AffinePermutation::identity(3));
        let d2 = SuperbasicDatum::new(2, 1).unwrap();
        let t = AffinePermutation::translation(&Cocharacter(vec![1, -1]));
        assert_eq!(
            d2.twist(&t).unwrap(),
            AffinePermutation::translation(&Cocharacter(vec![-1, 1]))
        );
        assert!(SuperbasicDatum::new(4, 2).is_err());
        assert!(d.twist(&AffinePermutation::identity(2)).is_err());
    }

    #[test]
    fn twist_rotates_translations_backwards() {
        let d = SuperbasicDatum::new(3, 1).unwrap();
        let lambda = Cocharacter(vec![2, 0, -5]);
        let t = AffinePermutation::translation(&lambda);
        assert_eq!(
            d.twist(&t).unwrap(),
            AffinePermutation::translation(&lambda.rotate(-1))
        );
    }

    #[test]
    fn s_k_examples() {
        let zero = Cocharacter(vec![0, 0, 0]);
        assert_eq!(s_k_sum(&zero, 1).unwrap(), 0);
        let l = Cocharacter(vec![2, 0, 1]);
        assert_eq!(s_k_sum(&l, 1).unwrap(), 4);
        assert_eq!(s_k_sum(&l, 2).unwrap(), 4);
        assert_eq!(AffinePermutation::translation(&l).length() * 2, 8);
        assert!(s_k_sum(&l, 3).is_err());
        assert!(s_k_sum(&l, 0).is_err());
    }

    #[test]
    fn d_of_matches_search() {
        for n in 2..9usize {
            for d in SuperbasicDatum::all(n) {
                for k in -10..10i64 {
                    let brute = (0..n as i64)
                        .find(|x| (d.m() * x - k).rem_euclid(n as i64) == 0)
                        .unwrap();
                    assert_eq!(d.d_of(k) as i64, brute);
                }
            }
        }
        let d = SuperbasicDatum::new(3, 2).unwrap();
        assert_eq!(d.d_of(0), 0);
        assert_eq!(d.d_of(1), 2);
        assert_eq!(d.d_of(2), 1);
    }

    #[test]
    fn bound_examples() {
        assert_eq!(bound_f(2).unwrap().to_string(), "f(z) = 2z - 4");
        assert_eq!(bound_f(3).unwrap().to_string(), "f(z) = z - 9");
        assert_eq!(bound_f(4).unwrap().to_string(), "f(z) = (2/3)z - 40/3");
        assert_eq!(effective_bound(4).unwrap().to_string(), "f(z) = (2/3)z - 16");
        assert_eq!(effective_bound(3).unwrap(), bound_f(3).unwrap());
        assert!(bound_f(1).is_err());
        let f = bound_f(2).unwrap();
        assert_eq!(f.eval(1), Rational64::from_integer(-2));
        assert_eq!(f.max_length_below(1), Some(2));
        assert_eq!(f.max_length_at_most(2), Some(3));
        // n=2, m=1: beta(s_1) s_1^-1 = s_0 s_1 has length 2 >= f(1)
        let d = SuperbasicDatum::new(2, 1).unwrap();
        let s1 = AffinePermutation::simple_reflection(2, 1);
        assert_eq!(d.twist_defect(&s1).unwrap().length(), 2);
    }

    #[test]
    fn ball_examples() {
        assert_eq!(enumerate_ball(2, 0).unwrap(), vec![AffinePermutation::identity(2)]);
        assert_eq!(enumerate_ball(2, 3).unwrap().len(), 7);
        assert_eq!(enumerate_ball(3, 2).unwrap().len(), 10);
        let ball = enumerate_ball(3, 6).unwrap();
        assert!(ball.windows(2).all(|w| w[0].length() <= w[1].length()));
        assert!(ball.iter().all(AffinePermutation::is_affine_weyl));
    }

    #[test]
    fn small_twist_examples() {
        let d = SuperbasicDatum::new(2, 1).unwrap();
        assert_eq!(small_twist_set(&d, 1).unwrap(), vec![AffinePermutation::identity(2)]);
        let s = |i| AffinePermutation::simple_reflection(2, i);
        let mut want = vec![AffinePermutation::identity(2), s(0), s(1)];
        want.sort_by_key(|v| (v.length(), v.clone()));
        assert_eq!(small_twist_set(&d, 3).unwrap(), want);
    }

    #[test]
    fn candidate_examples() {
        let d = SuperbasicDatum::new(2, 1).unwrap();
        let e = AffinePermutation::identity(2);
        assert_eq!(candidate_cells(&d, &e).unwrap(), vec![e.clone()]);
        let b = d.element();
        assert_eq!(candidate_cells(&d, &b), Err(Error::NonzeroComponent(1)));
        let w = AffineTypeA::new(2).unwrap().from_word(&[0, 1]);
        let cells = candidate_cells(&d, &w).unwrap();
        assert!(!cells.is_empty());
        assert!(cells.iter().all(|v| v.length() <= 3));
    }
}
