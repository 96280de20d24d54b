//! Integer polynomial arithmetic with certified real-root machinery.
//!
//! Everything downstream (algebraic numbers, number fields, critical bases)
//! reduces to a handful of exact primitives implemented here: content and
//! primitive parts, gcd and square-free decomposition, Sturm chains with
//! certified root counting, bisection-based root isolation, and small-degree
//! irreducibility certificates (no linear factor, no quadratic factor).
//!
//! Coefficients are stored in ascending order (`coeffs[i]` multiplies `x^i`).
//! The textual form used on the command line is descending ("leading first"),
//! e.g. `1,0,-2,-1,-1` for x⁴ − 2x² − x − 1; see [`IntPoly::parse`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A univariate polynomial with arbitrary-precision integer coefficients.
///
/// Invariant: no trailing zero coefficients; the zero polynomial is the empty
/// vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.to_descending_string())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_descending_string())
    }
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// Builds a polynomial from ascending coefficients, trimming high zeros.
    pub fn from_ascending(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Builds a polynomial from descending ("leading first") coefficients.
    pub fn from_descending<I: Into<BigInt> + Clone>(coeffs: &[I]) -> Self {
        let asc: Vec<BigInt> = coeffs.iter().rev().cloned().map(Into::into).collect();
        Self::from_ascending(asc)
    }

    /// Parses the comma-separated leading-first text form, e.g. `1,-2,-1`.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut desc = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            let c: BigInt = tok
                .parse()
                .map_err(|_| format!("invalid integer coefficient `{tok}`"))?;
            desc.push(c);
        }
        if desc.is_empty() {
            return Err("empty polynomial".to_string());
        }
        Ok(Self::from_descending(&desc))
    }

    /// Renders the comma-separated leading-first text form.
    pub fn to_descending_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .rev()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::from_ascending(coeffs)
    }

    /// Positive gcd of all coefficients (1 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if g.is_zero() {
            BigInt::one()
        } else {
            g
        }
    }

    /// Primitive part scaled so the leading coefficient is positive.
    pub fn primitive_positive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::from_ascending(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Primitive part keeping the original sign (used for Sturm chains, where
    /// only positive rescaling preserves the sign pattern).
    pub fn primitive_preserve_sign(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        Self::from_ascending(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn neg(&self) -> Self {
        Self::from_ascending(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            out.push(a + b);
        }
        Self::from_ascending(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_ascending(out)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Self {
        Self::from_ascending(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiplies by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_ascending(coeffs)
    }

    pub fn to_rational_coeffs(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    }

    /// Exact division; `None` when `divisor` does not divide `self` over Q
    /// or the quotient is not integral.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = rat_div_rem(&self.to_rational_coeffs(), &divisor.to_rational_coeffs());
        if !rat_is_zero(&r) {
            return None;
        }
        let mut out = Vec::with_capacity(q.len());
        for c in q {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(Self::from_ascending(out))
    }

    /// Primitive positive gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_positive();
        }
        if other.is_zero() {
            return self.primitive_positive();
        }
        let mut a = self.to_rational_coeffs();
        let mut b = other.to_rational_coeffs();
        while !rat_is_zero(&b) {
            let (_, r) = rat_div_rem(&a, &b);
            a = b;
            b = r;
        }
        clear_denominators(&a).primitive_positive()
    }

    /// Square-free part: `self / gcd(self, self')`, primitive with positive
    /// leading coefficient. Shares the same set of real roots.
    pub fn square_free(&self) -> Self {
        if self.is_zero() || self.degree() == 0 {
            return self.primitive_positive();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.primitive_positive();
        }
        self.div_exact(&g)
            .expect("gcd divides the polynomial")
            .primitive_positive()
    }

    /// Cauchy bound: every real root lies in (-B, B).
    pub fn cauchy_bound(&self) -> BigRational {
        assert!(!self.is_zero(), "cauchy bound of zero polynomial");
        let lead = self.leading().abs();
        let mut max = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > max {
                max = a;
            }
        }
        BigRational::one() + BigRational::new(max, lead)
    }

    /// All rational roots, each exactly once (the polynomial need not be
    /// square-free). Denominators of candidates divide the leading
    /// coefficient, numerators the lowest nonzero coefficient.
    pub fn rational_roots(&self) -> Result<Vec<BigRational>, String> {
        if self.is_zero() || self.degree() == 0 {
            return Ok(Vec::new());
        }
        let mut roots = Vec::new();
        // strip x^k
        let mut low = 0;
        while self.coeffs[low].is_zero() {
            low += 1;
        }
        if low > 0 {
            roots.push(BigRational::zero());
        }
        let trailing = self.coeffs[low].abs();
        let lead = self.leading().abs();
        let nums = small_divisors(&trailing)?;
        let dens = small_divisors(&lead)?;
        for n in &nums {
            for d in &dens {
                for sign in [1i32, -1] {
                    let cand = BigRational::new(n * BigInt::from(sign), d.clone());
                    if self.eval_rational(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        Ok(roots)
    }

    /// Linear polynomial `den*x - num` vanishing at `r = num/den`, primitive
    /// with positive leading coefficient.
    pub fn linear_from_root(r: &BigRational) -> Self {
        Self::from_ascending(vec![-r.numer().clone(), r.denom().clone()]).primitive_positive()
    }

    /// Searches for a degree-2 integer factor. Exhaustive within the
    /// Landau–Mignotte bound, so `None` proves no quadratic factor exists.
    /// Only meaningful for degree >= 4; a quadratic factor of a cubic forces
    /// a linear cofactor, which the rational-root pass settles first.
    pub fn quadratic_factor(&self) -> Result<Option<IntPoly>, String> {
        assert!(self.degree() >= 4, "quadratic factor search needs degree >= 4");
        let p0 = self.constant_term();
        if p0.is_zero() {
            return Err("quadratic factor search requires nonzero constant term".to_string());
        }
        let lead = self.leading().abs();
        // ||g||_1 <= 2^deg(g) * ||p||_2 for a factor g with lc(g) | lc(p)
        let norm2 = {
            let mut s = BigInt::zero();
            for c in &self.coeffs {
                s += c * c;
            }
            s.sqrt() + 1
        };
        let b_bound: BigInt = BigInt::from(4) * &norm2;
        let a_divs = small_divisors(&lead)?;
        let c_divs = small_divisors(&p0.abs())?;
        let mut b = -b_bound.clone();
        let mut b_values = Vec::new();
        while b <= b_bound {
            b_values.push(b.clone());
            b += 1;
        }
        for a in &a_divs {
            for c in &c_divs {
                for c_sign in [1i32, -1] {
                    let c_val = c * BigInt::from(c_sign);
                    for b in &b_values {
                        let g = IntPoly::from_ascending(vec![c_val.clone(), b.clone(), a.clone()]);
                        if g.degree() == 2 && self.div_exact(&g).is_some() {
                            return Ok(Some(g.primitive_positive()));
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Positive divisors of |n|, in ascending order. Errors out for operands too
/// large to factor by trial division; nothing in this crate's domain comes
/// close to the cap.
fn small_divisors(n: &BigInt) -> Result<Vec<BigInt>, String> {
    let n = n.abs();
    if n.is_zero() {
        return Err("divisors of zero requested".to_string());
    }
    if n > BigInt::from(1_000_000_000_000u64) {
        return Err(format!("coefficient {n} too large for divisor enumeration"));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

// ---------------------------------------------------------------------------
// Rational-coefficient helpers (ascending order, trailing zeros trimmed)
// ---------------------------------------------------------------------------

pub(crate) fn rat_trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn rat_is_zero(p: &[BigRational]) -> bool {
    p.iter().all(Zero::is_zero)
}

pub(crate) fn rat_div_rem(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut b = b.to_vec();
    rat_trim(&mut b);
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.to_vec();
    rat_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = BigRational::one() / b[db].clone();
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let f = r[dr].clone() * &lead_inv;
        q[dr - db] = f.clone();
        for (i, bc) in b.iter().enumerate() {
            let t = r[dr - db + i].clone() - &f * bc;
            r[dr - db + i] = t;
        }
        rat_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    (q, r)
}

/// Scales rational coefficients by a common positive denominator into an
/// integer polynomial.
pub(crate) fn clear_denominators(p: &[BigRational]) -> IntPoly {
    let mut lcm = BigInt::one();
    for c in p {
        lcm = lcm.lcm(c.denom());
    }
    let coeffs = p
        .iter()
        .map(|c| {
            let scaled = c * BigRational::from_integer(lcm.clone());
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect();
    IntPoly::from_ascending(coeffs)
}

// ---------------------------------------------------------------------------
// Rational interval arithmetic
// ---------------------------------------------------------------------------

/// A closed rational interval, used to evaluate polynomials over isolating
/// intervals with certified enclosures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl QInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        QInterval { lo, hi }
    }

    pub fn point(r: BigRational) -> Self {
        QInterval { lo: r.clone(), hi: r }
    }

    pub fn add(&self, other: &Self) -> Self {
        QInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if p < &lo {
                lo = p.clone();
            }
            if p > &hi {
                hi = p.clone();
            }
        }
        QInterval { lo, hi }
    }

    pub fn add_scalar(&self, s: &BigRational) -> Self {
        QInterval {
            lo: &self.lo + s,
            hi: &self.hi + s,
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// `Some(sign)` when the interval certifies one, `None` when it straddles 0.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// Horner evaluation of a rational-coefficient polynomial over an interval.
pub fn eval_poly_interval(coeffs: &[BigRational], x: &QInterval) -> QInterval {
    let mut acc = QInterval::point(BigRational::zero());
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add_scalar(c);
    }
    acc
}

// ---------------------------------------------------------------------------
// Sturm chains and root isolation
// ---------------------------------------------------------------------------

/// Sturm chain of a square-free polynomial. Members are rescaled to primitive
/// integer polynomials by positive factors, which preserves sign patterns.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        assert!(!p.is_zero(), "Sturm chain of zero polynomial");
        let mut chain = vec![p.primitive_preserve_sign()];
        if p.degree() >= 1 {
            chain.push(p.derivative().primitive_preserve_sign());
            loop {
                let n = chain.len();
                let a = &chain[n - 2];
                let b = &chain[n - 1];
                if b.is_zero() || b.degree() == 0 {
                    break;
                }
                let (_, r) = rat_div_rem(&a.to_rational_coeffs(), &b.to_rational_coeffs());
                if rat_is_zero(&r) {
                    break;
                }
                // positive rescaling preserves the sign pattern; negate once
                let next = clear_denominators(&r).primitive_preserve_sign().neg();
                chain.push(next);
            }
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval_rational(x);
            if v.is_zero() {
                continue;
            }
            let pos = v.is_positive();
            if let Some(prev) = last {
                if prev != pos {
                    count += 1;
                }
            }
            last = Some(pos);
        }
        count
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    /// Requires that neither endpoint is a root.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        assert!(a < b, "empty interval in root count");
        debug_assert!(!self.chain[0].eval_rational(a).is_zero());
        debug_assert!(!self.chain[0].eval_rational(b).is_zero());
        self.variations_at(a) - self.variations_at(b)
    }
}

/// An isolating interval produced by [`isolate_roots_in`]: either an exact
/// rational root (degenerate) or an open interval with a sign change that
/// contains exactly one root of the attached polynomial.
#[derive(Clone, Debug)]
pub enum RootInterval {
    Exact(BigRational),
    Open(BigRational, BigRational),
}

impl RootInterval {
    pub fn lo(&self) -> &BigRational {
        match self {
            RootInterval::Exact(r) => r,
            RootInterval::Open(a, _) => a,
        }
    }
    pub fn hi(&self) -> &BigRational {
        match self {
            RootInterval::Exact(r) => r,
            RootInterval::Open(_, b) => b,
        }
    }
}

/// One isolated root: the interval plus the (possibly deflated) square-free
/// polynomial it was isolated against. For `Open` intervals the polynomial is
/// nonzero at both endpoints and changes sign across them, which is the
/// invariant every downstream bisection relies on.
#[derive(Clone, Debug)]
pub struct IsolatedRoot {
    pub poly: IntPoly,
    pub interval: RootInterval,
}

/// Isolates all real roots of a square-free polynomial inside the closed
/// window `[lo, hi]`, returned in ascending order. Rational roots discovered
/// at window endpoints or bisection midpoints are deflated out, so each
/// returned open interval carries a polynomial with non-root endpoints.
pub fn isolate_roots_in(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Vec<IsolatedRoot> {
    assert!(!p.is_zero(), "root isolation of zero polynomial");
    assert!(lo <= hi, "window endpoints out of order");
    if p.degree() == 0 {
        return Vec::new();
    }
    let mut p = p.clone();
    let mut out = Vec::new();
    if p.eval_rational(lo).is_zero() {
        out.push(IsolatedRoot {
            poly: IntPoly::linear_from_root(lo),
            interval: RootInterval::Exact(lo.clone()),
        });
        p = p
            .div_exact(&IntPoly::linear_from_root(lo))
            .expect("endpoint root divides");
    }
    if lo < hi && !p.is_zero() && p.degree() >= 1 && p.eval_rational(hi).is_zero() {
        out.push(IsolatedRoot {
            poly: IntPoly::linear_from_root(hi),
            interval: RootInterval::Exact(hi.clone()),
        });
        p = p
            .div_exact(&IntPoly::linear_from_root(hi))
            .expect("endpoint root divides");
    }
    if lo < hi && p.degree() >= 1 {
        isolate_open(&p.primitive_positive(), lo, hi, &mut out);
    }
    out.sort_by(|a, b| a.interval.lo().cmp(b.interval.lo()));
    out
}

/// Recursive bisection on `(lo, hi)`; `p` is square-free with non-root
/// endpoints.
fn isolate_open(p: &IntPoly, lo: &BigRational, hi: &BigRational, out: &mut Vec<IsolatedRoot>) {
    let chain = SturmChain::new(p);
    let n = chain.count_roots(lo, hi);
    match n {
        0 => {}
        1 => out.push(IsolatedRoot {
            poly: p.clone(),
            interval: RootInterval::Open(lo.clone(), hi.clone()),
        }),
        _ => {
            let mid = (lo + hi) / BigRational::from_integer(2.into());
            if p.eval_rational(&mid).is_zero() {
                out.push(IsolatedRoot {
                    poly: IntPoly::linear_from_root(&mid),
                    interval: RootInterval::Exact(mid.clone()),
                });
                let reduced = p
                    .div_exact(&IntPoly::linear_from_root(&mid))
                    .expect("midpoint root divides")
                    .primitive_positive();
                if reduced.degree() >= 1 {
                    isolate_open(&reduced, lo, &mid, out);
                    isolate_open(&reduced, &mid, hi, out);
                }
            } else {
                isolate_open(p, lo, &mid, out);
                isolate_open(p, &mid, hi, out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p = IntPoly::parse("1,0,-2,-1,-1").unwrap();
        assert_eq!(p.degree(), 4);
        assert_eq!(p.to_descending_string(), "1,0,-2,-1,-1");
        assert_eq!(p.eval_rational(&rat(2, 1)), rat(16 - 8 - 2 - 1, 1));
    }

    #[test]
    fn square_free_strips_multiplicity() {
        // (x-1)^2 (x+2)
        let p = IntPoly::from_descending(&[1, 0, -3, 2]);
        let sf = p.square_free();
        assert_eq!(sf, IntPoly::from_descending(&[1, 1, -2]));
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = IntPoly::from_descending(&[1, -3, 2]); // (x-1)(x-2)
        let b = IntPoly::from_descending(&[1, -4, 3]); // (x-1)(x-3)
        assert_eq!(a.gcd(&b), IntPoly::from_descending(&[1, -1]));
    }

    #[test]
    fn sturm_counts_roots_of_quadratic() {
        // x^2 - 2x - 1: roots 1±√2
        let p = IntPoly::from_descending(&[1, -2, -1]);
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots(&rat(-10, 1), &rat(10, 1)), 2);
        assert_eq!(chain.count_roots(&rat(2, 1), &rat(3, 1)), 1);
        assert_eq!(chain.count_roots(&rat(3, 1), &rat(10, 1)), 0);
    }

    #[test]
    fn isolation_separates_close_roots() {
        // (x-1)(x-2)(2x-3): roots 1, 3/2, 2
        let p = IntPoly::from_descending(&[2, -9, 13, -6]);
        let roots = isolate_roots_in(&p, &rat(0, 1), &rat(5, 1));
        assert_eq!(roots.len(), 3);
        for w in roots.windows(2) {
            assert!(w[1].interval.lo() >= w[0].interval.hi());
        }
        // every open interval has non-root endpoints for its polynomial
        for r in &roots {
            if let RootInterval::Open(a, b) = &r.interval {
                assert!(!r.poly.eval_rational(a).is_zero());
                assert!(!r.poly.eval_rational(b).is_zero());
            }
        }
    }

    #[test]
    fn isolation_handles_endpoint_roots() {
        let p = IntPoly::from_descending(&[1, -3, 2]); // roots 1, 2
        let roots = isolate_roots_in(&p, &rat(1, 1), &rat(2, 1));
        assert_eq!(roots.len(), 2);
        assert!(matches!(&roots[0].interval, RootInterval::Exact(r) if *r == rat(1, 1)));
        assert!(matches!(&roots[1].interval, RootInterval::Exact(r) if *r == rat(2, 1)));
    }

    #[test]
    fn isolation_deflates_interior_rational_roots() {
        // (x-1)(x^2-2x-1): roots 1, 1±√2; the window endpoint 1 is a root and
        // 1+√2 must come back with a polynomial not vanishing at 1
        let p = IntPoly::from_descending(&[1, -3, 1, 1]);
        let roots = isolate_roots_in(&p, &rat(1, 1), &rat(3, 1));
        assert_eq!(roots.len(), 2);
        assert!(matches!(&roots[0].interval, RootInterval::Exact(r) if *r == rat(1, 1)));
        if let RootInterval::Open(a, b) = &roots[1].interval {
            assert!(!roots[1].poly.eval_rational(a).is_zero());
            assert!(!roots[1].poly.eval_rational(b).is_zero());
        } else {
            panic!("expected open interval for 1+√2");
        }
    }

    #[test]
    fn rational_roots_found() {
        // (2x-3)(x+1)(x^2+1)
        let p = IntPoly::from_descending(&[2, -1, -1, -1, -3]);
        let got = p.rational_roots().unwrap();
        assert!(got.contains(&rat(3, 2)));
        assert!(got.contains(&rat(-1, 1)));
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn quadratic_factor_found_and_excluded() {
        // (x^2 - x - 1)(x^2 + x + 1)
        let p = IntPoly::from_descending(&[1, -1, -1])
            .mul(&IntPoly::from_descending(&[1, 1, 1]));
        let g = p.quadratic_factor().unwrap().expect("factor exists");
        assert!(p.div_exact(&g).is_some());

        // x^4 - 2x^2 - x - 1 has no quadratic factor
        let q = IntPoly::from_descending(&[1, 0, -2, -1, -1]);
        assert!(q.quadratic_factor().unwrap().is_none());
    }

    #[test]
    fn interval_evaluation_brackets_value() {
        let p = IntPoly::from_descending(&[1, -2, -1]); // x^2-2x-1
        let iv = QInterval::new(rat(24, 10), rat(25, 10));
        let img = eval_poly_interval(&p.to_rational_coeffs(), &iv);
        let val = p.eval_rational(&rat(241, 100));
        assert!(img.lo <= val && val <= img.hi);
    }

    #[test]
    fn cauchy_bound_contains_roots() {
        let p = IntPoly::from_descending(&[1, 0, -2, -1, -1]);
        let b = p.cauchy_bound();
        let chain = SturmChain::new(&p.square_free());
        let total = chain.count_roots(&-b.clone(), &b);
        let wide = chain.count_roots(&rat(-1000, 1), &rat(1000, 1));
        assert_eq!(total, wide);
    }
}
