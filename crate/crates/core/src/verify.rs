//! Invariant suites over enumerated balls and random samples.
//!
//! Every check returns a [`Tally`] of cases run and failures seen; the
//! `run_*` functions wrap them into timed [`SuiteReport`]s.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::{One, Zero};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::affine::{
    bound_f, count_inversions_directly, effective_bound, enumerate_ball, longest_finite_length,
    s_k_sum, small_twist_set, AffinePermutation, AffineTypeA, BoundSpec, Cocharacter,
    SuperbasicDatum,
};
use crate::coxeter::{CoxeterSystem, GroupElement, Root};
use crate::group::{ball, CoxeterGroup};
use crate::hecke::{HeckeAlgebra, HeckeElement};

/// Cases run and failures seen by one check, with the first failure kept
/// for diagnostics.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl Tally {
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub tally: Tally,
    pub millis: u128,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.tally.passed())
    }

    pub fn total_cases(&self) -> u64 {
        self.suites.iter().map(|s| s.tally.cases).sum()
    }

    /// `# seed` header, one `<suite>\t<cases>\t<failures>\t<millis>` line
    /// per suite, then notes and failure details as comment lines.
    pub fn to_tsv(&self) -> String {
        let mut out = format!("# seed: {}\n", self.seed);
        for s in &self.suites {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                s.name, s.tally.cases, s.tally.failures, s.millis
            ));
        }
        for note in &self.notes {
            out.push_str(&format!("# {note}\n"));
        }
        for s in &self.suites {
            if let Some(f) = &s.tally.first_failure {
                out.push_str(&format!("# FAIL {}: {}\n", s.name, f));
            }
        }
        out.push_str(&format!(
            "# result: {} ({} cases)\n",
            if self.passed() { "PASS" } else { "FAIL" },
            self.total_cases()
        ));
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scope {
    /// Ball radius for element enumeration.
    pub radius: usize,
    /// Budget for random samples and for pair/triple sweeps.
    pub samples: usize,
    pub seed: u64,
    /// Depth cap for truncated positive-root enumeration.
    pub root_depth: usize,
}

impl Default for Scope {
    fn default() -> Self {
        Scope { radius: 6, samples: 10_000, seed: 0, root_depth: 8 }
    }
}

fn timed(name: &str, f: impl FnOnce() -> Tally) -> SuiteReport {
    let start = Instant::now();
    let tally = f();
    SuiteReport { name: name.to_string(), tally, millis: start.elapsed().as_millis() }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All ordered pairs when there are at most `budget` of them, otherwise
/// `budget` pairs drawn uniformly.
pub fn pairs<E: Clone>(elements: &[E], budget: usize, rng: &mut ChaCha8Rng) -> Vec<(E, E)> {
    let n = elements.len();
    if n * n <= budget {
        elements
            .iter()
            .flat_map(|x| elements.iter().map(move |y| (x.clone(), y.clone())))
            .collect()
    } else {
        (0..budget)
            .map(|_| {
                (elements.choose(rng).unwrap().clone(), elements.choose(rng).unwrap().clone())
            })
            .collect()
    }
}

fn triples<E: Clone>(elements: &[E], budget: usize, rng: &mut ChaCha8Rng) -> Vec<(E, E, E)> {
    let n = elements.len();
    if n * n * n <= budget {
        let mut out = Vec::with_capacity(n * n * n);
        for x in elements {
            for y in elements {
                for z in elements {
                    out.push((x.clone(), y.clone(), z.clone()));
                }
            }
        }
        out
    } else {
        (0..budget)
            .map(|_| {
                (
                    elements.choose(rng).unwrap().clone(),
                    elements.choose(rng).unwrap().clone(),
                    elements.choose(rng).unwrap().clone(),
                )
            })
            .collect()
    }
}

fn in_inversion_set(sys: &CoxeterSystem, x: &GroupElement, r: &Root) -> bool {
    sys.is_positive(r) && sys.is_negative(&sys.apply(x, r))
}

/// Roots are sign-uniform: truncated positive roots and every `x.e_s`.
pub fn check_sign_uniform(sys: &CoxeterSystem, elements: &[GroupElement], roots: &[Root]) -> Tally {
    let mut t = Tally::default();
    for r in roots {
        t.record(sys.is_sign_uniform(r), || format!("root {}", sys.render_root(r)));
    }
    for x in elements {
        for s in 0..sys.rank() {
            let r = x.column(s);
            t.record(sys.is_sign_uniform(&r), || {
                format!("x = {:?}, x.e_{s} = {}", sys.word(x), sys.render_root(&r))
            });
        }
    }
    t
}

/// `|Phi_x| = l(x)`, members satisfy the defining condition, and
/// `l(xs) > l(x) <=> e_s not in Phi_x`.
pub fn check_inversion_sets(sys: &CoxeterSystem, elements: &[GroupElement]) -> Tally {
    let mut t = Tally::default();
    for x in elements {
        let phi = sys.inversion_set(x);
        let ok_len = phi.len() == sys.length(x);
        let ok_members = phi.roots.iter().all(|r| in_inversion_set(sys, x, r));
        t.record(ok_len && ok_members, || format!("x = {:?}", sys.word(x)));
        for s in 0..sys.rank() {
            let up = sys.length(&sys.mul_gen(x, s)) > sys.length(x);
            let contains = phi.roots.contains(&sys.simple_root(s));
            t.record(up != contains, || format!("descent test x = {:?}, s = {s}", sys.word(x)));
        }
    }
    t
}

/// `s` permutes the truncated positive roots other than `e_s`.
pub fn check_simple_permutes(sys: &CoxeterSystem, roots: &[Root]) -> Tally {
    let mut t = Tally::default();
    for s in 0..sys.rank() {
        let es = sys.simple_root(s);
        let mut images = BTreeSet::new();
        for r in roots.iter().filter(|r| **r != es) {
            let img = sys.act(s, r);
            let ok = sys.is_positive(&img) && img != es && images.insert(img.clone());
            t.record(ok, || format!("s = {s}, root {}", sys.render_root(r)));
        }
    }
    t
}

/// `(a, a) = 1` on roots and `(x.a, x.b) = (a, b)`.
pub fn check_form_invariance(
    sys: &CoxeterSystem,
    elements: &[GroupElement],
    roots: &[Root],
    budget: usize,
    rng: &mut ChaCha8Rng,
) -> Tally {
    let mut t = Tally::default();
    let one = crate::scalar::Scalar::from_int(1);
    for r in roots {
        t.record(sys.bilinear(r, r) == one, || format!("norm of {}", sys.render_root(r)));
    }
    if elements.is_empty() || roots.is_empty() {
        return t;
    }
    for _ in 0..budget.min(elements.len() * roots.len() * roots.len()) {
        let x = elements.choose(rng).unwrap();
        let a = roots.choose(rng).unwrap();
        let b = roots.choose(rng).unwrap();
        let ok = sys.bilinear(&sys.apply(x, a), &sys.apply(x, b)) == sys.bilinear(a, b);
        t.record(ok, || format!("x = {:?}", sys.word(x)));
    }
    t
}

/// `Phi_{x^-1} = x.Phi^-_x`.
pub fn check_inverse_inversions(sys: &CoxeterSystem, elements: &[GroupElement]) -> Tally {
    let mut t = Tally::default();
    for x in elements {
        let lhs = sys.inversion_set(&sys.invert(x)).roots;
        let rhs: BTreeSet<Root> =
            sys.inversion_set(x).roots.iter().map(|r| sys.apply(x, &r.neg())).collect();
        t.record(lhs == rhs, || format!("x = {:?}", sys.word(x)));
    }
    t
}

/// The two parts of `Phi_xy` are disjoint and cover it exactly.
pub fn check_product_inversions(sys: &CoxeterSystem, pairs: &[(GroupElement, GroupElement)]) -> Tally {
    let mut t = Tally::default();
    for (x, y) in pairs {
        let (a, b) = sys.inversion_product_parts(x, y).unwrap();
        let xy = sys.multiply(x, y).unwrap();
        let union: BTreeSet<Root> = a.union(&b).cloned().collect();
        let ok = a.is_disjoint(&b) && union == sys.inversion_set(&xy).roots;
        t.record(ok, || format!("x = {:?}, y = {:?}", sys.word(x), sys.word(y)));
    }
    t
}

/// For `l(xs) > l(x)`, `beta > 0`, `beta != e_s`, `s.beta >= beta`:
/// `s.beta in Phi_x` implies `beta in Phi_x`.
pub fn check_raising_pairs(sys: &CoxeterSystem, elements: &[GroupElement], roots: &[Root]) -> Tally {
    let mut t = Tally::default();
    for x in elements {
        for s in 0..sys.rank() {
            if sys.right_descent(x, s) {
                continue;
            }
            let es = sys.simple_root(s);
            for beta in roots {
                if *beta == es || !sys.reflection_raises(s, beta) {
                    continue;
                }
                let sb = sys.act(s, beta);
                let ok = !in_inversion_set(sys, x, &sb) || in_inversion_set(sys, x, beta);
                t.record(ok, || {
                    format!("x = {:?}, s = {s}, beta = {}", sys.word(x), sys.render_root(beta))
                });
            }
        }
    }
    t
}

/// For `l(xs) > l(x)` and `l(sy) > l(y)`: `l(xsy) > l(xy)`, and
/// `l(xsy) = l(x) + l(y) + 1` when `l(xy) = l(x) + l(y)`.
pub fn check_length_property<G: CoxeterGroup>(group: &G, pairs: &[(G::Element, G::Element)]) -> Tally {
    let mut t = Tally::default();
    for (x, y) in pairs {
        let lx = group.length(x);
        let ly = group.length(y);
        let xy = group.multiply(x, y);
        let lxy = group.length(&xy);
        for s in 0..group.rank() {
            if group.is_right_descent(x, s) || group.is_left_descent(y, s) {
                continue;
            }
            let xs = group.mul_gen(x, s);
            let lxsy = group.length(&group.multiply(&xs, y));
            let mut ok = lxsy > lxy;
            if lxy == lx + ly {
                ok &= lxsy == lx + ly + 1;
            }
            t.record(ok, || {
                format!(
                    "x = {:?}, s = {s}, y = {:?}: l(xsy) = {lxsy}, l(xy) = {lxy}",
                    group.reduced_word(x),
                    group.reduced_word(y)
                )
            });
        }
    }
    t
}

/// Canonical words are reduced, idempotent and parity-preserving.
pub fn check_reduce_word(sys: &CoxeterSystem, max_len: usize, budget: usize, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    for _ in 0..budget {
        let len = rng.random_range(0..=max_len);
        let word: Vec<usize> = (0..len).map(|_| rng.random_range(0..sys.rank())).collect();
        let reduced = sys.reduce_word(&word).unwrap();
        let again = sys.reduce_word(&reduced).unwrap();
        let ok = again == reduced
            && reduced.len() <= word.len()
            && reduced.len() % 2 == word.len() % 2
            && sys.element_from_word(&reduced).unwrap() == sys.element_from_word(&word).unwrap()
            && sys.length(&sys.element_from_word(&reduced).unwrap()) == reduced.len();
        t.record(ok, || format!("word {word:?} -> {reduced:?}"));
    }
    t
}

/// A reduced word built from the right by always stripping the
/// largest-index right descent; generally differs from the canonical word.
pub fn right_greedy_word<G: CoxeterGroup>(group: &G, x: &G::Element) -> Vec<usize> {
    let mut word = Vec::new();
    let mut cur = x.clone();
    while let Some(s) = (0..group.rank()).rev().find(|&s| group.is_right_descent(&cur, s)) {
        word.push(s);
        cur = group.mul_gen(&cur, s);
    }
    word.reverse();
    word
}

/// `T_x` computed along two different reduced words agrees.
pub fn check_matsumoto<G: CoxeterGroup>(hecke: &HeckeAlgebra<G>, elements: &[G::Element]) -> Tally {
    let g = hecke.group();
    let mut t = Tally::default();
    for x in elements {
        let one = HeckeElement::basis(g.identity());
        let a = hecke.t_mult_word(&one, &g.reduced_word(x));
        let b = hecke.t_mult_word(&one, &right_greedy_word(g, x));
        t.record(a == b && a == HeckeElement::basis(x.clone()), || {
            format!("x = {:?}", g.reduced_word(x))
        });
    }
    t
}

pub fn check_associativity<G: CoxeterGroup>(
    hecke: &HeckeAlgebra<G>,
    triples: &[(G::Element, G::Element, G::Element)],
) -> Tally {
    let g = hecke.group();
    let mut t = Tally::default();
    for (x, y, z) in triples {
        let tz = HeckeElement::basis(z.clone());
        let left = hecke.multiply(&hecke.t_mult(x, y), &tz);
        let right = hecke.multiply(&HeckeElement::basis(x.clone()), &hecke.t_mult(y, z));
        t.record(left == right, || {
            format!(
                "x = {:?}, y = {:?}, z = {:?}",
                g.reduced_word(x),
                g.reduced_word(y),
                g.reduced_word(z)
            )
        });
    }
    t
}

/// Per-pair support checks, one tally each:
/// bounds `l(xy) <= l(w) <= l(x) + l(y)`; `D ⊆ D'` with `xy in D'` and
/// `min l(D') >= l(xy)`; `r_w(1) = delta_{w,xy}`; and `T_x T_y = T_xy`
/// when lengths add.
#[derive(Clone, Debug, Default)]
pub struct SupportTallies {
    pub bounds: Tally,
    pub upper: Tally,
    pub specialization: Tally,
    pub additive: Tally,
}

pub fn check_supports<G: CoxeterGroup>(
    hecke: &HeckeAlgebra<G>,
    pairs: &[(G::Element, G::Element)],
) -> SupportTallies {
    let g = hecke.group();
    let mut out = SupportTallies::default();
    for (x, y) in pairs {
        let describe = || format!("x = {:?}, y = {:?}", g.reduced_word(x), g.reduced_word(y));
        let prod = hecke.t_mult(x, y);
        let xy = g.multiply(x, y);
        let (lx, ly, lxy) = (g.length(x), g.length(y), g.length(&xy));

        let bounded = prod.terms().all(|(w, _)| {
            let l = g.length(w);
            lxy <= l && l <= lx + ly
        });
        out.bounds.record(bounded, describe);

        let upper = hecke.support_upper(x, y);
        let contained = prod.terms().all(|(w, _)| upper.contains(w));
        let min_ok = upper.iter().map(|w| g.length(w)).min() == Some(lxy);
        out.upper.record(contained && upper.contains(&xy) && min_ok, describe);

        let special = prod.terms().all(|(w, p)| {
            let want = if *w == xy { BigInt::one() } else { BigInt::zero() };
            p.eval_at_one() == want
        }) && !prod.coeff(&xy).is_zero();
        out.specialization.record(special, describe);

        if lxy == lx + ly {
            out.additive.record(prod == HeckeElement::basis(xy.clone()), describe);
        }
    }
    out
}

/// `n` uniform in `{2, .., 5}`, entries uniform in `[-5, 5]`.
pub fn random_cocharacters(count: usize, rng: &mut ChaCha8Rng) -> Vec<Cocharacter> {
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=5);
            Cocharacter((0..n).map(|_| rng.random_range(-5..=5)).collect())
        })
        .collect()
}

/// `2 l(e^lambda) = sum_{i != j} |lambda_i - lambda_j| = sum_k S_k`, with
/// the length also counted directly.
pub fn check_translation_lengths(corpus: &[Cocharacter]) -> Tally {
    let mut t = Tally::default();
    for lambda in corpus {
        let v = AffinePermutation::translation(lambda);
        let len = v.length() as i64;
        let direct = count_inversions_directly(&v) as i64;
        let sum_sk: i64 = (1..lambda.rank()).map(|k| s_k_sum(lambda, k).unwrap()).sum();
        let spread = lambda.pairwise_spread();
        let ok = 2 * len == spread && len == direct && sum_sk == spread;
        t.record(ok, || format!("lambda = ({lambda}): l = {len}, direct = {direct}, spread = {spread}"));
    }
    t
}

/// `S_k <= d(m, k) S_m` for all `k` and all coprime `m`, together with the
/// twist of a translation and the chain
/// `sum S_k <= n(n-1)/2 S_m <= (n-1) l(beta(v) v^-1)`.
pub fn check_shift_sums(corpus: &[Cocharacter]) -> Tally {
    let mut t = Tally::default();
    for lambda in corpus {
        let n = lambda.rank();
        let v = AffinePermutation::translation(lambda);
        for d in SuperbasicDatum::all(n) {
            let m = d.m() as usize;
            let sm = s_k_sum(lambda, m).unwrap();
            for k in 1..n {
                let sk = s_k_sum(lambda, k).unwrap();
                t.record(sk <= d.d_of(k as i64) as i64 * sm, || {
                    format!("lambda = ({lambda}), m = {m}, k = {k}")
                });
            }
            let defect = d.twist_defect(&v).unwrap();
            let mu = Cocharacter(
                (1..=n as i64).map(|i| lambda.get(i - d.m()) - lambda.get(i)).collect(),
            );
            let twice_defect = 2 * defect.length() as i64;
            let sum_sk: i64 = (1..n).map(|k| s_k_sum(lambda, k).unwrap()).sum();
            let n_i = n as i64;
            let ok = defect == AffinePermutation::translation(&mu)
                && n_i * sm <= twice_defect
                && sum_sk <= n_i * (n_i - 1) / 2 * sm
                && n_i * (n_i - 1) / 2 * sm * 2 <= (n_i - 1) * twice_defect;
            t.record(ok, || format!("chain at lambda = ({lambda}), m = {m}"));
        }
    }
    t
}

/// `beta` preserves length, is multiplicative and sends `s_i` to `s_{i+m}`.
pub fn check_twist_automorphism(n: usize, radius: usize, budget: usize, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    let elements = enumerate_ball(n, radius).unwrap();
    for d in SuperbasicDatum::all(n) {
        for i in 0..n {
            let s = AffinePermutation::simple_reflection(n, i);
            let target = (i as i64 + d.m()).rem_euclid(n as i64) as usize;
            t.record(d.twist(&s).unwrap() == AffinePermutation::simple_reflection(n, target), || {
                format!("n = {n}, m = {}, s_{i}", d.m())
            });
        }
        for v in &elements {
            t.record(d.twist(v).unwrap().length() == v.length(), || format!("length of beta({v})"));
        }
        for (u, v) in pairs(&elements, budget, rng) {
            let ok = d.twist(&u.compose(&v)).unwrap() == d.twist(&u).unwrap().compose(&d.twist(&v).unwrap());
            t.record(ok, || format!("beta({u} * {v})"));
        }
    }
    t
}

/// Outcome of checking `l(beta(v) v^-1) >= f(l(v))` on a ball.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundSweep {
    pub n: usize,
    pub radius: usize,
    pub bound: BoundSpec,
    pub tally: Tally,
    /// `min (l(beta(v) v^-1) - f(l(v)))` over the sweep.
    pub min_slack: Option<Rational64>,
}

/// Every `v` in `W_a` with `l(v) <= radius`, every coprime `m`.
pub fn sweep_twist_bound(n: usize, radius: usize, bound: &BoundSpec) -> BoundSweep {
    let elements = enumerate_ball(n, radius).unwrap();
    let mut tally = Tally::default();
    let mut min_slack: Option<Rational64> = None;
    for d in SuperbasicDatum::all(n) {
        for v in &elements {
            let defect = d.twist_defect(v).unwrap().length() as i64;
            let slack = Rational64::from_integer(defect) - bound.eval(v.length() as i64);
            min_slack = Some(min_slack.map_or(slack, |m| m.min(slack)));
            tally.record(slack >= Rational64::zero(), || {
                format!("n = {n}, m = {}, v = {v}: l(beta(v)v^-1) = {defect}", d.m())
            });
        }
    }
    BoundSweep { n, radius, bound: *bound, tally, min_slack }
}

/// `small_twist_set(d, r)` for `r = 1..=max_r` against a filter over a ball
/// `extra` lengths beyond the analytic radius.
pub fn check_small_twist(datum: &SuperbasicDatum, max_r: i64, extra: usize) -> Tally {
    let mut t = Tally::default();
    let bound = effective_bound(datum.n()).unwrap();
    let outer = bound.max_length_below(max_r).unwrap_or(0) + extra;
    let elements = enumerate_ball(datum.n(), outer).unwrap();
    let defects: Vec<i64> = elements
        .iter()
        .map(|v| datum.twist_defect(v).unwrap().length() as i64)
        .collect();
    for r in 1..=max_r {
        let got = small_twist_set(datum, r).unwrap();
        let want: Vec<AffinePermutation> = elements
            .iter()
            .zip(&defects)
            .filter(|(_, &l)| l < r)
            .map(|(v, _)| v.clone())
            .collect();
        t.record(got == want, || {
            format!("n = {}, m = {}, r = {r}: {} vs {}", datum.n(), datum.m(), got.len(), want.len())
        });
    }
    t
}

/// Affine-permutation length agrees with the matrix realization of
/// `affine-A_{n-1}`, mapping elements both ways through reduced words.
pub fn check_model_agreement(n: usize, radius: usize) -> Tally {
    let mut t = Tally::default();
    let affine = AffineTypeA::new(n).unwrap();
    let sys = CoxeterSystem::preset(&format!("affine-A{}", n - 1)).unwrap();
    let perms = enumerate_ball(n, radius).unwrap();
    for v in &perms {
        let word = affine.reduced_word(v);
        let x = sys.element_from_word(&word).unwrap();
        let ok = sys.length(&x) == v.length() && word.len() == v.length();
        t.record(ok, || format!("v = {v}, word {word:?}, matrix length {}", sys.length(&x)));
    }
    let matrix_ball = ball(&sys, radius);
    t.record(matrix_ball.len() == perms.len(), || {
        format!("ball sizes {} vs {}", matrix_ball.len(), perms.len())
    });
    for x in &matrix_ball {
        let word = sys.word(x);
        let v = affine.from_word(&word);
        t.record(v.length() == word.len(), || format!("word {word:?} -> {v}"));
    }
    t
}

pub fn coxeter_suites(sys: &CoxeterSystem, scope: &Scope, rng: &mut ChaCha8Rng) -> Vec<SuiteReport> {
    let elements = ball(sys, scope.radius);
    let roots = if scope.radius == 0 { Vec::new() } else { sys.positive_roots(scope.root_depth) };
    let pair_list = pairs(&elements, scope.samples, rng);
    let mut out = vec![
        timed("roots-sign-uniform", || check_sign_uniform(sys, &elements, &roots)),
        timed("inversion-set-length", || check_inversion_sets(sys, &elements)),
        timed("simple-reflection-permutes-roots", || check_simple_permutes(sys, &roots)),
    ];
    let budget = scope.samples;
    out.push(timed("form-invariance", || check_form_invariance(sys, &elements, &roots, budget, rng)));
    out.push(timed("inverse-inversion-set", || check_inverse_inversions(sys, &elements)));
    out.push(timed("product-inversion-partition", || check_product_inversions(sys, &pair_list)));
    out.push(timed("raising-pair-lemma", || check_raising_pairs(sys, &elements, &roots)));
    out.push(timed("length-xsy-gt-xy", || check_length_property(sys, &pair_list)));
    let max_len = 2 * scope.radius;
    out.push(timed("reduce-word", || {
        check_reduce_word(sys, max_len, budget.min(1000) * usize::from(scope.radius > 0), rng)
    }));
    out
}

pub fn hecke_suites<G: CoxeterGroup>(
    hecke: &HeckeAlgebra<G>,
    scope: &Scope,
    rng: &mut ChaCha8Rng,
) -> Vec<SuiteReport> {
    let elements = ball(hecke.group(), scope.radius);
    let pair_list = pairs(&elements, scope.samples, rng);
    let triple_list = triples(&elements, (scope.samples / 10).max(1), rng);
    let mut out = vec![
        timed("hecke-matsumoto", || check_matsumoto(hecke, &elements)),
        timed("hecke-associativity", || check_associativity(hecke, &triple_list)),
    ];
    let start = Instant::now();
    let sup = check_supports(hecke, &pair_list);
    let millis = start.elapsed().as_millis();
    for (name, tally) in [
        ("hecke-support-bounds", sup.bounds),
        ("hecke-support-in-upper", sup.upper),
        ("hecke-specialize-v1", sup.specialization),
        ("hecke-length-additive", sup.additive),
    ] {
        out.push(SuiteReport { name: name.to_string(), tally, millis });
    }
    out
}

/// Affine type A suites; also returns note lines, including the verdict for
/// the printed bound at `n = 4`.
pub fn affine_suites(scope: &Scope, rng: &mut ChaCha8Rng) -> (Vec<SuiteReport>, Vec<String>) {
    let corpus_size = if scope.radius == 0 { 0 } else { scope.samples };
    let corpus = random_cocharacters(corpus_size, rng);
    let mut out = vec![
        timed("translation-length", || check_translation_lengths(&corpus)),
        timed("shift-sum-lemma", || check_shift_sums(&corpus)),
    ];
    for n in [2, 3] {
        let budget = scope.samples.min(2000);
        out.push(timed(&format!("twist-automorphism-n{n}"), || {
            check_twist_automorphism(n, scope.radius.min(6), budget, rng)
        }));
    }
    for n in [2, 3] {
        let bound = bound_f(n).unwrap();
        out.push(timed(&format!("twist-bound-n{n}"), || {
            sweep_twist_bound(n, scope.radius, &bound).tally
        }));
    }
    let max_r = scope.radius.min(8) as i64;
    for n in [2, 3] {
        out.push(timed(&format!("small-twist-n{n}"), || {
            let mut t = Tally::default();
            for d in SuperbasicDatum::all(n) {
                t.merge(check_small_twist(&d, max_r, 4));
            }
            t
        }));
    }
    for n in [2, 3] {
        out.push(timed(&format!("model-agreement-n{n}"), || check_model_agreement(n, scope.radius)));
    }

    let r4 = scope.radius.min(10);
    let start = Instant::now();
    let printed = sweep_twist_bound(4, r4, &bound_f(4).unwrap());
    let corrected = sweep_twist_bound(4, r4, &effective_bound(4).unwrap());
    out.push(SuiteReport {
        name: "twist-bound-n4-corrected-cap".to_string(),
        tally: corrected.tally.clone(),
        millis: start.elapsed().as_millis(),
    });
    let notes = vec![
        n4_verdict("paper-f", &printed),
        n4_verdict(&format!("corrected-cap-f (c' = {})", longest_finite_length(4)), &corrected),
    ];
    (out, notes)
}

fn n4_verdict(label: &str, sweep: &BoundSweep) -> String {
    format!(
        "{label} {} at n=4: {} (radius {}, {} cases, {} violations, min slack {})",
        if sweep.tally.passed() { "holds" } else { "fails" },
        sweep.bound,
        sweep.radius,
        sweep.tally.cases,
        sweep.tally.failures,
        sweep.min_slack.map_or("n/a".to_string(), |s| s.to_string()),
    )
}

/// Every suite for `sys` plus the affine type A suites.
pub fn run_all(sys: &CoxeterSystem, scope: &Scope) -> Report {
    let mut rng = rng(scope.seed);
    let mut suites = coxeter_suites(sys, scope, &mut rng);
    let hecke = HeckeAlgebra::new(sys);
    suites.extend(hecke_suites(&hecke, scope, &mut rng));
    let (affine, notes) = affine_suites(scope, &mut rng);
    suites.extend(affine);
    Report { seed: scope.seed, suites, notes }
}
