//! Exact arithmetic in the real number field `Q(c)`, `c = 2cos(pi/M)`.
//!
//! A [`Scalar`] is a rational polynomial in `c` reduced modulo the minimal
//! polynomial of `c`. Signs are decided exactly: zero is a syntactic test on
//! the reduced form, and a nonzero value is bracketed by interval evaluation
//! over a rational isolating interval for `c` that is bisected until the
//! bracket excludes zero.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense rational polynomial, lowest degree first, no trailing zeros.
type Poly = Vec<BigRational>;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_add(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut out: Poly = (0..a.len().max(b.len()))
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_scale(a: &[BigRational], k: &BigRational) -> Poly {
    if k.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * k).collect()
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem: Poly = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let k = rem.last().unwrap() / lead;
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] -= &k * y;
        }
        quot[shift] = k;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn poly_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, coeff| acc * x + coeff)
}

fn poly_derivative(p: &[BigRational]) -> Poly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * rat(i as i64))
        .collect()
}

fn sign_of(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// `P_k` with `P_k(z + 1/z) = z^k + z^-k`, i.e. `P_k(2cos t) = 2cos(kt)`.
fn doubled_chebyshev(k: usize) -> Poly {
    let mut prev: Poly = vec![rat(2)];
    if k == 0 {
        return prev;
    }
    let mut cur: Poly = vec![rat(0), rat(1)];
    for _ in 1..k {
        let next = poly_add(&poly_mul(&[rat(0), rat(1)], &cur), &poly_scale(&prev, &rat(-1)));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn cyclotomic(n: usize, cache: &mut HashMap<usize, Poly>) -> Poly {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let mut p: Poly = vec![BigRational::zero(); n + 1];
    p[0] = rat(-1);
    p[n] = rat(1);
    for d in 1..n {
        if n % d == 0 {
            let q = cyclotomic(d, cache);
            let (quot, rem) = poly_divrem(&p, &q);
            debug_assert!(rem.is_empty());
            p = quot;
        }
    }
    cache.insert(n, p.clone());
    p
}

/// Minimal polynomial over `Q` of `2cos(pi/m)` for `m >= 2`.
///
/// Obtained from the cyclotomic polynomial `Phi_{2m}(z)`, which is
/// palindromic of degree `2d`, by rewriting `z^-d Phi_{2m}(z)` in the
/// variable `x = z + 1/z`.
pub fn min_poly_two_cos_pi_over(m: usize) -> Vec<BigRational> {
    assert!(m >= 2, "2cos(pi/m) needs m >= 2");
    let phi = cyclotomic(2 * m, &mut HashMap::new());
    let d = (phi.len() - 1) / 2;
    let mut out: Poly = vec![phi[d].clone()];
    for k in 1..=d {
        out = poly_add(&out, &poly_scale(&doubled_chebyshev(k), &phi[d + k]));
    }
    out
}

/// Number of sign variations of a Sturm chain at `x`.
fn sturm_variations(chain: &[Poly], x: &BigRational) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| sign_of(&poly_eval(p, x)))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sturm_chain(p: &[BigRational]) -> Vec<Poly> {
    let mut chain = vec![p.to_vec(), poly_derivative(p)];
    loop {
        let n = chain.len();
        let (_, rem) = poly_divrem(&chain[n - 2], &chain[n - 1]);
        if rem.is_empty() {
            break;
        }
        chain.push(poly_scale(&rem, &rat(-1)));
    }
    chain
}

/// Element of `Q(c)`: coefficients of a polynomial in `c`, reduced modulo
/// the field's minimal polynomial, lowest degree first, no trailing zeros.
///
/// Arithmetic that needs the modulus (products, signs) goes through
/// [`Field`]; sums and rational multiples do not.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(Vec<BigRational>);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Vec::new())
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut v = vec![q];
        trim(&mut v);
        Scalar(v)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// The value as a rational, when it has no `c` component.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.0.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.0
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        Scalar(poly_add(&self.0, &other.0))
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar(self.0.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, k: &BigRational) -> Scalar {
        Scalar(poly_scale(&self.0, k))
    }
}

/// The number field `Q(2cos(pi/M))` together with an isolating interval
/// for its generator.
#[derive(Clone, Debug)]
pub struct Field {
    /// `M`; 1 for the rational field.
    order: usize,
    /// Monic minimal polynomial of the generator.
    modulus: Poly,
    lo: BigRational,
    hi: BigRational,
    sign_at_lo: i8,
}

impl Field {
    /// The field `Q`, used when every form value is rational.
    pub fn rational() -> Self {
        Field {
            order: 1,
            modulus: vec![rat(0), rat(1)],
            lo: rat(0),
            hi: rat(0),
            sign_at_lo: 0,
        }
    }

    /// `Q(2cos(pi/m))`. Degenerates to `Q` for `m <= 3`.
    pub fn two_cos_pi_over(m: usize) -> Self {
        if m <= 3 {
            return Self::rational();
        }
        let modulus = min_poly_two_cos_pi_over(m);
        let chain = sturm_chain(&modulus);
        let count = |a: &BigRational, b: &BigRational| {
            sturm_variations(&chain, a) - sturm_variations(&chain, b)
        };
        // 2cos(pi/m) is the largest root and lies in (1, 2) for m >= 4.
        let (mut lo, mut hi) = (rat(1), rat(2));
        while count(&lo, &hi) > 1 {
            let mid = (&lo + &hi) / rat(2);
            if count(&mid, &hi) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let sign_at_lo = sign_of(&poly_eval(&modulus, &lo));
        let mut field = Field {
            order: m,
            modulus,
            lo,
            hi,
            sign_at_lo,
        };
        let width = BigRational::new(BigInt::one(), BigInt::one() << 32);
        while &field.hi - &field.lo > width {
            field.bisect();
        }
        debug_assert!({
            let approx = 2.0 * (std::f64::consts::PI / m as f64).cos();
            let resid: f64 = field
                .modulus
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * approx + c.to_f64().unwrap());
            resid.abs() < 1e-9
        });
        field
    }

    fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / rat(2);
        let s = sign_of(&poly_eval(&self.modulus, &mid));
        // The modulus is irreducible of degree >= 2, so it has no rational root.
        debug_assert!(s != 0);
        if s == self.sign_at_lo {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// `M` such that the generator is `2cos(pi/M)`; 1 for `Q`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn minimal_polynomial(&self) -> &[BigRational] {
        &self.modulus
    }

    /// The generator `c` itself.
    pub fn generator(&self) -> Scalar {
        self.reduce(vec![rat(0), rat(1)])
    }

    pub fn reduce(&self, mut p: Vec<BigRational>) -> Scalar {
        trim(&mut p);
        if p.len() > self.degree() {
            p = poly_divrem(&p, &self.modulus).1;
        }
        Scalar(p)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() || b.is_zero() {
            return Scalar::zero();
        }
        if a.0.len() == 1 {
            return b.scale(&a.0[0]);
        }
        if b.0.len() == 1 {
            return a.scale(&b.0[0]);
        }
        self.reduce(poly_mul(&a.0, &b.0))
    }

    /// `cos(pi/m)` for a divisor `m` of the field order (with `Q` covering
    /// `m` in `{2, 3}`), via `2cos(pi/m) = P_{M/m}(c)`.
    pub fn cos_pi_over(&self, m: usize) -> Option<Scalar> {
        if self.is_rational() {
            return match m {
                1 => Some(Scalar::from_int(-1)),
                2 => Some(Scalar::zero()),
                3 => Some(Scalar::from_rational(BigRational::new(1.into(), 2.into()))),
                _ => None,
            };
        }
        if m == 0 || self.order % m != 0 {
            return None;
        }
        let p = doubled_chebyshev(self.order / m);
        Some(self.reduce(p).scale(&BigRational::new(1.into(), 2.into())))
    }

    /// Exact sign of `a`.
    pub fn sign(&self, a: &Scalar) -> Ordering {
        match a.0.len() {
            0 => return Ordering::Equal,
            1 => return a.0[0].cmp(&BigRational::zero()),
            _ => {}
        }
        let mut iv = self.clone();
        loop {
            let (lo, hi) = interval_horner(&a.0, &iv.lo, &iv.hi);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            iv.bisect();
        }
    }

    pub fn is_nonnegative(&self, a: &Scalar) -> bool {
        self.sign(a) != Ordering::Less
    }

    pub fn to_f64(&self, a: &Scalar) -> f64 {
        let c = if self.is_rational() {
            0.0
        } else {
            2.0 * (std::f64::consts::PI / self.order as f64).cos()
        };
        a.0.iter()
            .rev()
            .fold(0.0, |acc, q| acc * c + q.to_f64().unwrap_or(f64::NAN))
    }

    /// Human-readable rendering; `c` denotes `2cos(pi/M)`.
    pub fn render(&self, a: &Scalar) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, q) in a.0.iter().enumerate().rev() {
            if q.is_zero() {
                continue;
            }
            let negative = q.is_negative();
            let mag = q.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let var = match i {
                0 => String::new(),
                1 => "c".to_string(),
                _ => format!("c^{i}"),
            };
            if var.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&format!("({mag}){var}"));
            }
        }
        out
    }
}

/// Interval enclosure of `p(x)` for `x` in `[lo, hi]`.
fn interval_horner(p: &[BigRational], lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut acc_lo = BigRational::zero();
    let mut acc_hi = BigRational::zero();
    for coeff in p.iter().rev() {
        let products = [&acc_lo * lo, &acc_lo * hi, &acc_hi * lo, &acc_hi * hi];
        let min = products.iter().min().unwrap().clone();
        let max = products.iter().max().unwrap().clone();
        acc_lo = min + coeff;
        acc_hi = max + coeff;
    }
    (acc_lo, acc_hi)
}

/// Least common multiple of a set of positive integers (1 when empty).
pub fn lcm_all(values: impl IntoIterator<Item = usize>) -> usize {
    values.into_iter().fold(1, |acc, v| acc.lcm(&v))
}
