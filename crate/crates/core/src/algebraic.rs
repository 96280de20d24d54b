//! Exact real algebraic numbers and arithmetic in the number fields they
//! generate.
//!
//! An [`AlgebraicReal`] is a square-free primitive integer polynomial together
//! with a rational isolating interval containing exactly one of its real
//! roots. Comparisons, refinement and sign determination are all certified:
//! either a Sturm count, a sign change, or a gcd argument backs every answer.
//! No floating point is used anywhere.
//!
//! A [`NumberField`] Q(α) requires a generator whose minimal polynomial has
//! been verified irreducible; [`FieldElement`]s are rational coefficient
//! vectors modulo that polynomial, so the zero test is exact and division
//! always succeeds for nonzero elements.

use crate::poly::{
    clear_denominators, eval_poly_interval, isolate_roots_in, rat_div_rem, rat_is_zero, rat_trim,
    IntPoly, IsolatedRoot, QInterval, RootInterval, SturmChain,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraicError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("no root of the polynomial in the window")]
    NoRootInWindow,
    #[error("window contains {0} roots, expected exactly one")]
    MultipleRootsInWindow(usize),
    #[error("division by zero field element")]
    DivisionByZero,
    #[error("operands belong to different number fields")]
    FieldMismatch,
    #[error("cannot verify irreducibility at degree {0} (supported up to 5)")]
    IrreducibilityUnverified(usize),
    #[error("{0}")]
    Unsupported(String),
}

/// A real algebraic number: a square-free primitive integer polynomial with
/// positive leading coefficient plus a rational isolating interval.
///
/// Rational numbers are stored in degenerate form (`lo == hi`, degree-1
/// polynomial). Non-degenerate intervals have non-root endpoints with a sign
/// change across them, so the Sturm count over the interval is always 1.
#[derive(Clone)]
pub struct AlgebraicReal {
    poly: IntPoly,
    lo: BigRational,
    hi: BigRational,
    irreducible_verified: bool,
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgebraicReal({} @ {}:{})",
            self.poly.to_descending_string(),
            self.lo,
            self.hi
        )
    }
}

impl AlgebraicReal {
    /// The defining polynomial (square-free, primitive, positive leading).
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    /// Current isolating interval.
    pub fn interval(&self) -> (BigRational, BigRational) {
        (self.lo.clone(), self.hi.clone())
    }

    pub fn irreducible_verified(&self) -> bool {
        self.irreducible_verified
    }

    pub fn from_rational(r: &BigRational) -> Self {
        AlgebraicReal {
            poly: IntPoly::linear_from_root(r),
            lo: r.clone(),
            hi: r.clone(),
            irreducible_verified: true,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(n.into()))
    }

    /// Exact rational value when the number is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.lo == self.hi {
            Some(self.lo.clone())
        } else {
            None
        }
    }

    fn from_isolated(ir: &IsolatedRoot) -> Self {
        match &ir.interval {
            RootInterval::Exact(r) => Self::from_rational(r),
            RootInterval::Open(a, b) => {
                if ir.poly.degree() == 1 {
                    // solve exactly: c1 x + c0 = 0
                    let c = ir.poly.coeffs();
                    let r = BigRational::new(-c[0].clone(), c[1].clone());
                    return Self::from_rational(&r);
                }
                AlgebraicReal {
                    poly: ir.poly.clone(),
                    lo: a.clone(),
                    hi: b.clone(),
                    irreducible_verified: false,
                }
            }
        }
    }

    /// Sturm count of the defining polynomial over the isolating interval;
    /// 1 by construction, exposed for invariant checks.
    pub fn sturm_root_count(&self) -> usize {
        if self.lo == self.hi {
            return usize::from(self.poly.eval_rational(&self.lo).is_zero());
        }
        SturmChain::new(&self.poly).count_roots(&self.lo, &self.hi)
    }

    /// One bisection step; returns a refined copy.
    fn bisect(lo: &mut BigRational, hi: &mut BigRational, poly: &IntPoly) {
        if lo == hi {
            return;
        }
        let mid = (&*lo + &*hi) / BigRational::from_integer(2.into());
        let v = poly.eval_rational(&mid);
        if v.is_zero() {
            *lo = mid.clone();
            *hi = mid;
            return;
        }
        let at_lo = poly.eval_rational(lo);
        if (at_lo.is_positive() && v.is_negative()) || (at_lo.is_negative() && v.is_positive()) {
            *hi = mid;
        } else {
            *lo = mid;
        }
    }

    /// Refines until the interval is narrower than `10^-digits`; returns the
    /// refined interval without mutating `self`.
    pub fn refine(&self, digits: u32) -> (BigRational, BigRational) {
        let target = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(digits));
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        while &hi - &lo >= target {
            Self::bisect(&mut lo, &mut hi, &self.poly);
        }
        (lo, hi)
    }

    /// A rational approximation within `10^-digits` of the number.
    pub fn approx(&self, digits: u32) -> BigRational {
        let (lo, hi) = self.refine(digits + 1);
        (lo + hi) / BigRational::from_integer(2.into())
    }

    /// Decimal rendering truncated to `digits` fractional digits.
    pub fn decimal_string(&self, digits: u32) -> String {
        let approx = self.approx(digits + 2);
        decimal_of_rational(&approx, digits)
    }

    /// Compares against an exact rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        if let Some(v) = self.as_rational() {
            return v.cmp(r);
        }
        // interval is open with non-root endpoints: root in (lo, hi)
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        if self.poly.eval_rational(r).is_zero() {
            return Ordering::Equal;
        }
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        loop {
            if r <= &lo {
                return Ordering::Greater;
            }
            if r >= &hi {
                return Ordering::Less;
            }
            Self::bisect(&mut lo, &mut hi, &self.poly);
            if lo == hi {
                return lo.cmp(r);
            }
        }
    }

    /// True when the number is a root of `p` (exact, via gcd with the
    /// defining polynomial).
    pub fn is_root_of(&self, p: &IntPoly) -> bool {
        if p.is_zero() {
            return true;
        }
        if let Some(r) = self.as_rational() {
            return p.eval_rational(&r).is_zero();
        }
        let g = self.poly.gcd(p);
        if g.degree() == 0 {
            return false;
        }
        // roots of g are common roots; exactly our root lies in the interval
        !isolate_roots_in(&g, &self.lo, &self.hi).is_empty()
    }

    /// Exact total-order comparison of two algebraic reals.
    pub fn cmp_alg(&self, other: &AlgebraicReal) -> Ordering {
        if let Some(r) = other.as_rational() {
            return self.cmp_rational(&r);
        }
        if let Some(r) = self.as_rational() {
            return other.cmp_rational(&r).reverse();
        }
        // equality is decidable through the gcd; separation through refinement
        let g = self.poly.gcd(&other.poly);
        let both_on_gcd = g.degree() >= 1 && self.is_root_of(&g) && other.is_root_of(&g) && {
            // both are roots of g; equal iff they are the same root of g
            let lo = if self.lo < other.lo { self.lo.clone() } else { other.lo.clone() };
            let hi = if self.hi > other.hi { self.hi.clone() } else { other.hi.clone() };
            let g_roots = isolate_roots_in(&g, &lo, &hi);
            let mine = locate_root(&g_roots, self);
            let theirs = locate_root(&g_roots, other);
            match (mine, theirs) {
                (Some(i), Some(j)) => i == j,
                _ => false,
            }
        };
        if both_on_gcd {
            return Ordering::Equal;
        }
        // distinct numbers: refine until the intervals separate
        let mut a = (self.lo.clone(), self.hi.clone());
        let mut b = (other.lo.clone(), other.hi.clone());
        loop {
            if a.1 < b.0 || (a.1 == b.0 && (a.0 != a.1 || b.0 != b.1)) {
                return Ordering::Less;
            }
            if b.1 < a.0 || (b.1 == a.0 && (b.0 != b.1 || a.0 != a.1)) {
                return Ordering::Greater;
            }
            Self::bisect(&mut a.0, &mut a.1, &self.poly);
            Self::bisect(&mut b.0, &mut b.1, &other.poly);
        }
    }

    /// Reduces the defining polynomial to the minimal polynomial and marks
    /// the result verified. Supported up to degree 5 after removal of
    /// rational linear factors.
    pub fn minimized(&self) -> Result<AlgebraicReal, AlgebraicError> {
        if self.irreducible_verified {
            return Ok(self.clone());
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(&r));
        }
        let mut poly = self.poly.clone();
        // strip rational roots; ours is irrational unless pinned rational
        loop {
            let roots = poly
                .rational_roots()
                .map_err(AlgebraicError::Unsupported)?;
            let mut changed = false;
            for r in roots {
                if self.cmp_rational(&r) == Ordering::Equal {
                    return Ok(Self::from_rational(&r));
                }
                poly = poly
                    .div_exact(&IntPoly::linear_from_root(&r))
                    .expect("rational root divides");
                changed = true;
            }
            if !changed {
                break;
            }
        }
        let mut current = AlgebraicReal {
            poly: poly.primitive_positive(),
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            irreducible_verified: false,
        };
        debug_assert_eq!(current.sturm_root_count(), 1);
        loop {
            let deg = current.poly.degree();
            match deg {
                1 => {
                    let c = current.poly.coeffs();
                    let r = BigRational::new(-c[0].clone(), c[1].clone());
                    return Ok(Self::from_rational(&r));
                }
                2 | 3 => {
                    // no rational root: irreducible
                    current.irreducible_verified = true;
                    return Ok(current);
                }
                4 | 5 => {
                    match current
                        .poly
                        .quadratic_factor()
                        .map_err(AlgebraicError::Unsupported)?
                    {
                        None => {
                            // no linear factor, no quadratic factor: any
                            // factorization of degree 4 or 5 would need one
                            current.irreducible_verified = true;
                            return Ok(current);
                        }
                        Some(g) => {
                            let h = current
                                .poly
                                .div_exact(&g)
                                .expect("found factor divides")
                                .primitive_positive();
                            let g_count =
                                isolate_roots_in(&g, &current.lo, &current.hi).len();
                            let chosen = if g_count == 1 { g } else { h };
                            current.poly = chosen;
                            debug_assert_eq!(current.sturm_root_count(), 1);
                            // re-run the rational-root pass on the factor
                            let roots = current
                                .poly
                                .rational_roots()
                                .map_err(AlgebraicError::Unsupported)?;
                            for r in roots {
                                if current.cmp_rational(&r) == Ordering::Equal {
                                    return Ok(Self::from_rational(&r));
                                }
                                current.poly = current
                                    .poly
                                    .div_exact(&IntPoly::linear_from_root(&r))
                                    .expect("rational root divides")
                                    .primitive_positive();
                            }
                        }
                    }
                }
                d => return Err(AlgebraicError::IrreducibilityUnverified(d)),
            }
        }
    }
}

/// Index of the isolated root in `roots` equal to the number.
fn locate_root(roots: &[IsolatedRoot], a: &AlgebraicReal) -> Option<usize> {
    let mut lo = a.lo.clone();
    let mut hi = a.hi.clone();
    for _ in 0..4096 {
        let mut candidates = Vec::new();
        for (i, r) in roots.iter().enumerate() {
            let (rlo, rhi) = (r.interval.lo(), r.interval.hi());
            // overlap test between [lo,hi] and the candidate interval
            if &hi >= rlo && rhi >= &lo {
                candidates.push(i);
            }
        }
        match candidates.len() {
            0 => return None,
            1 => {
                // containment certifies; mere overlap needs more refinement
                let r = &roots[candidates[0]].interval;
                if r.lo() <= &lo && &hi <= r.hi() {
                    return Some(candidates[0]);
                }
            }
            _ => {}
        }
        if lo == hi {
            // rational point: containment decides directly
            for (i, r) in roots.iter().enumerate() {
                match &r.interval {
                    RootInterval::Exact(x) => {
                        if *x == lo {
                            return Some(i);
                        }
                    }
                    RootInterval::Open(a2, b2) => {
                        if a2 < &lo && &lo < b2 {
                            return Some(i);
                        }
                    }
                }
            }
            return None;
        }
        AlgebraicReal::bisect(&mut lo, &mut hi, &a.poly);
    }
    unreachable!("root location failed to converge");
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_alg(other) == Ordering::Equal
    }
}
impl Eq for AlgebraicReal {}
impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_alg(other)
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}@{}:{} (≈{})",
            self.poly.to_descending_string(),
            self.lo,
            self.hi,
            self.decimal_string(6)
        )
    }
}

/// Truncated decimal rendering of a rational.
pub fn decimal_of_rational(r: &BigRational, digits: u32) -> String {
    let neg = r.is_negative();
    let a = if neg { -r.clone() } else { r.clone() };
    let int = a.to_integer();
    let mut frac = &a - BigRational::from_integer(int.clone());
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&int.to_string());
    if digits > 0 {
        out.push('.');
        let ten = BigRational::from_integer(10.into());
        for _ in 0..digits {
            frac = &frac * &ten;
            let d = frac.to_integer();
            out.push_str(&d.to_string());
            frac -= BigRational::from_integer(d);
        }
    }
    out
}

/// Certified construction of an algebraic real: the square-free part of
/// `poly` must have exactly one root in the closed window.
pub fn make_algebraic(
    poly: &IntPoly,
    window: (&BigRational, &BigRational),
) -> Result<AlgebraicReal, AlgebraicError> {
    if poly.is_zero() {
        return Err(AlgebraicError::ZeroPolynomial);
    }
    if poly.degree() == 0 {
        return Err(AlgebraicError::NoRootInWindow);
    }
    let sf = poly.square_free();
    let (lo, hi) = window;
    if lo > hi {
        return Err(AlgebraicError::NoRootInWindow);
    }
    let roots = isolate_roots_in(&sf, lo, hi);
    match roots.len() {
        0 => Err(AlgebraicError::NoRootInWindow),
        1 => Ok(AlgebraicReal::from_isolated(&roots[0])),
        n => Err(AlgebraicError::MultipleRootsInWindow(n)),
    }
}

/// All real roots of an integer polynomial in the closed window, ascending.
/// Multiplicities are collapsed through the square-free part.
pub fn isolate_roots(
    poly: &IntPoly,
    window: (&BigRational, &BigRational),
) -> Vec<AlgebraicReal> {
    if poly.is_zero() || poly.degree() == 0 {
        return Vec::new();
    }
    let sf = poly.square_free();
    isolate_roots_in(&sf, window.0, window.1)
        .iter()
        .map(AlgebraicReal::from_isolated)
        .collect()
}

/// Rational-coefficient convenience wrapper around [`isolate_roots`].
pub fn isolate_roots_rational(
    coeffs_ascending: &[BigRational],
    window: (&BigRational, &BigRational),
) -> Vec<AlgebraicReal> {
    let cleared = clear_denominators(coeffs_ascending);
    isolate_roots(&cleared, window)
}

/// All real roots over the full Cauchy bound range.
pub fn isolate_all_roots(poly: &IntPoly) -> Vec<AlgebraicReal> {
    if poly.is_zero() || poly.degree() == 0 {
        return Vec::new();
    }
    let b = poly.cauchy_bound();
    isolate_roots(poly, (&-b.clone(), &b))
}

// ---------------------------------------------------------------------------
// Number fields
// ---------------------------------------------------------------------------

/// The field Q(α) for a generator α with verified-irreducible minimal
/// polynomial. Degree 1 is the rational field itself.
#[derive(Debug)]
pub struct NumberField {
    generator: AlgebraicReal,
    degree: usize,
    /// Monic minimal polynomial over Q, ascending coefficients.
    min_poly_monic: Vec<BigRational>,
    /// Pre-refined generator interval so element sign tests start tight.
    refined: (BigRational, BigRational),
}

impl NumberField {
    /// Builds the field, minimizing and verifying the generator's polynomial
    /// first when necessary.
    pub fn new(generator: AlgebraicReal) -> Result<Arc<NumberField>, AlgebraicError> {
        let generator = generator.minimized()?;
        let degree = generator.poly().degree();
        let lead = BigRational::from_integer(generator.poly().leading());
        let min_poly_monic: Vec<BigRational> = generator
            .poly()
            .to_rational_coeffs()
            .iter()
            .map(|c| c / &lead)
            .collect();
        let refined = generator.refine(12);
        Ok(Arc::new(NumberField {
            generator,
            degree,
            min_poly_monic,
            refined,
        }))
    }

    pub fn generator(&self) -> &AlgebraicReal {
        &self.generator
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn same_field(a: &Arc<NumberField>, b: &Arc<NumberField>) -> bool {
        if Arc::ptr_eq(a, b) {
            return true;
        }
        a.generator.poly() == b.generator.poly() && a.generator == b.generator
    }

    /// Reduces a rational-coefficient polynomial in α modulo the minimal
    /// polynomial.
    fn reduce(&self, mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
        while coeffs.len() > self.degree {
            let top = coeffs.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = coeffs.len() - self.degree;
            // x^{degree+k} = -(min_poly tail) * x^k
            for (i, c) in self.min_poly_monic[..self.degree].iter().enumerate() {
                let t = coeffs[k + i].clone() - &top * c;
                coeffs[k + i] = t;
            }
        }
        coeffs.resize(self.degree, BigRational::zero());
        coeffs
    }

    pub fn element(self: &Arc<Self>, coeffs: Vec<BigRational>) -> FieldElement {
        FieldElement {
            field: Arc::clone(self),
            coeffs: self.reduce(coeffs),
        }
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        self.element(Vec::new())
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_rational(&BigRational::one())
    }

    pub fn from_rational(self: &Arc<Self>, r: &BigRational) -> FieldElement {
        self.element(vec![r.clone()])
    }

    pub fn from_integer(self: &Arc<Self>, n: i64) -> FieldElement {
        self.from_rational(&BigRational::from_integer(n.into()))
    }

    /// The generator α itself as a field element (its rational value for a
    /// degree-1 field).
    pub fn generator_element(self: &Arc<Self>) -> FieldElement {
        if self.degree == 1 {
            let r = self
                .generator
                .as_rational()
                .expect("degree-1 generator is rational");
            self.from_rational(&r)
        } else {
            let mut c = vec![BigRational::zero(); self.degree];
            c[1] = BigRational::one();
            self.element(c)
        }
    }
}

/// An element of a [`NumberField`]: a rational coefficient vector of length
/// equal to the field degree (coefficient of αⁱ at index i).
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement[{}]", self.coeffs_string())
    }
}

impl FieldElement {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeffs_string(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| if i == 0 { c.is_one() } else { c.is_zero() })
    }

    /// The exact rational value, when the element is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    fn check_same_field(&self, other: &Self) -> Result<(), AlgebraicError> {
        if NumberField::same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(AlgebraicError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("field mismatch in add")
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraicError> {
        self.check_same_field(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FieldElement {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("field mismatch in sub")
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraicError> {
        self.check_same_field(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(FieldElement {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        FieldElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("field mismatch in mul")
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraicError> {
        self.check_same_field(other)?;
        let n = self.field.degree;
        let mut prod = vec![BigRational::zero(); 2 * n.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = prod[i + j].clone() + a * b;
                prod[i + j] = t;
            }
        }
        Ok(self.field.element(prod))
    }

    pub fn mul_rational(&self, r: &BigRational) -> Self {
        FieldElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse through the extended Euclidean algorithm
    /// modulo the (irreducible) minimal polynomial.
    pub fn inv(&self) -> Result<Self, AlgebraicError> {
        if self.is_zero() {
            return Err(AlgebraicError::DivisionByZero);
        }
        if self.field.degree == 1 {
            let v = self.coeffs[0].clone();
            return Ok(self.field.from_rational(&(BigRational::one() / v)));
        }
        let mut a = self.coeffs.clone();
        rat_trim(&mut a);
        let m = self.field.min_poly_monic.clone();
        let (g, s) = extended_gcd_first(&a, &m);
        // g is a nonzero constant by irreducibility
        debug_assert_eq!(g.len(), 1);
        let scale = BigRational::one() / g[0].clone();
        let coeffs = s.iter().map(|c| c * &scale).collect();
        Ok(self.field.element(coeffs))
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraicError> {
        self.check_same_field(other)?;
        let inv = other.inv()?;
        Ok(self.mul(&inv))
    }

    /// Integer power, negative exponents through inversion.
    pub fn pow(&self, exp: i64) -> Result<Self, AlgebraicError> {
        if exp == 0 {
            return Ok(self.field.one());
        }
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.field.one();
        let mut b = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    /// Certified sign: 0 iff the coefficient vector is zero, otherwise ±1 by
    /// interval evaluation over an increasingly refined generator interval.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if let Some(r) = self.as_rational() {
            return if r.is_positive() { 1 } else { -1 };
        }
        let gen = &self.field.generator;
        let mut lo = self.field.refined.0.clone();
        let mut hi = self.field.refined.1.clone();
        loop {
            let iv = QInterval::new(lo.clone(), hi.clone());
            let img = eval_poly_interval(&self.coeffs, &iv);
            match img.sign() {
                Some(s) if s != 0 => return s,
                Some(_) => {
                    // exact zero image can only come from a degenerate
                    // interval, impossible for a nonzero element
                    unreachable!("nonzero element evaluated to exact zero");
                }
                None => AlgebraicReal::bisect(&mut lo, &mut hi, gen.poly()),
            }
        }
    }

    /// Exact comparison inside one field.
    pub fn cmp_elem(&self, other: &Self) -> Ordering {
        match self.sub(other).sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    /// Rational enclosure of width below `10^-digits`.
    pub fn approx(&self, digits: u32) -> BigRational {
        if let Some(r) = self.as_rational() {
            return r;
        }
        let target = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(digits));
        let gen = &self.field.generator;
        let mut lo = self.field.refined.0.clone();
        let mut hi = self.field.refined.1.clone();
        loop {
            let iv = QInterval::new(lo.clone(), hi.clone());
            let img = eval_poly_interval(&self.coeffs, &iv);
            if img.width() < target {
                return (img.lo + img.hi) / BigRational::from_integer(2.into());
            }
            AlgebraicReal::bisect(&mut lo, &mut hi, gen.poly());
        }
    }

    pub fn decimal_string(&self, digits: u32) -> String {
        decimal_of_rational(&self.approx(digits + 2), digits)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        NumberField::same_field(&self.field, &other.field) && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElement {}

impl std::ops::Add<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::add(self, rhs)
    }
}
impl std::ops::Sub<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::sub(self, rhs)
    }
}
impl std::ops::Mul<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::mul(self, rhs)
    }
}
impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

/// Extended gcd over Q[x] returning `(g, s)` with `g = s*a + t*b`; only the
/// first Bézout coefficient is needed for inversion.
fn extended_gcd_first(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut old_r = a.to_vec();
    let mut r = b.to_vec();
    rat_trim(&mut old_r);
    rat_trim(&mut r);
    let mut old_s: Vec<BigRational> = vec![BigRational::one()];
    let mut s: Vec<BigRational> = vec![];
    while !rat_is_zero(&r) {
        let (q, rem) = rat_div_rem(&old_r, &r);
        let qs = rat_mul(&q, &s);
        let new_s = rat_sub(&old_s, &qs);
        old_r = std::mem::replace(&mut r, rem);
        old_s = std::mem::replace(&mut s, new_s);
    }
    (old_r, old_s)
}

fn rat_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if rat_is_zero(a) || rat_is_zero(b) {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let t = out[i + j].clone() + x * y;
            out[i + j] = t;
        }
    }
    rat_trim(&mut out);
    out
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
        out.push(x - y);
    }
    rat_trim(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn one_plus_sqrt2() -> AlgebraicReal {
        make_algebraic(
            &IntPoly::from_descending(&[1, -2, -1]),
            (&rat(2, 1), &rat(3, 1)),
        )
        .unwrap()
    }

    #[test]
    fn make_algebraic_rational_root_collapses() {
        let a = make_algebraic(&IntPoly::from_descending(&[1, -2]), (&rat(1, 1), &rat(3, 1)))
            .unwrap();
        assert_eq!(a.as_rational(), Some(rat(2, 1)));
    }

    #[test]
    fn make_algebraic_silver_ratio() {
        let a = one_plus_sqrt2();
        let (lo, hi) = a.refine(5);
        let target = rat(241421, 100000);
        assert!(lo <= target && target <= hi || (&hi - &lo) < rat(1, 100000));
        assert!((a.approx(8) - rat(241421356, 100000000)).abs() < rat(1, 1000000));
    }

    #[test]
    fn make_algebraic_quartic_window() {
        let a = make_algebraic(
            &IntPoly::from_descending(&[1, 0, -2, -1, -1]),
            (&rat(3, 2), &rat(2, 1)),
        )
        .unwrap();
        assert!((a.approx(8) - rat(171064, 100000)).abs() < rat(1, 100000));
    }

    #[test]
    fn make_algebraic_rejects_bad_windows() {
        let p = IntPoly::from_descending(&[1, -2, -1]); // roots 1±√2
        assert_eq!(
            make_algebraic(&p, (&rat(3, 1), &rat(4, 1))).unwrap_err(),
            AlgebraicError::NoRootInWindow
        );
        assert_eq!(
            make_algebraic(&p, (&rat(-10, 1), &rat(10, 1))).unwrap_err(),
            AlgebraicError::MultipleRootsInWindow(2)
        );
        assert_eq!(
            make_algebraic(&IntPoly::zero(), (&rat(0, 1), &rat(1, 1))).unwrap_err(),
            AlgebraicError::ZeroPolynomial
        );
    }

    #[test]
    fn refine_degenerate_is_immediate() {
        let two = AlgebraicReal::from_integer(2);
        let (lo, hi) = two.refine(30);
        assert_eq!(lo, hi);
        assert_eq!(lo, rat(2, 1));
    }

    #[test]
    fn refine_quartic_table_value() {
        let a = make_algebraic(
            &IntPoly::from_descending(&[1, -3, -8, -4, -1]),
            (&rat(4, 1), &rat(5, 1)),
        )
        .unwrap();
        let (lo, hi) = a.refine(5);
        assert!((&hi - &lo) < rat(1, 100000));
        let target = rat(483469, 100000);
        assert!((&lo - &target).abs() < rat(2, 100000));
    }

    #[test]
    fn isolate_roots_examples() {
        let r = isolate_roots(
            &IntPoly::from_descending(&[1, -2, -1]),
            (&rat(0, 1), &rat(10, 1)),
        );
        assert_eq!(r.len(), 1);
        assert_eq!(r[0], one_plus_sqrt2());

        let r = isolate_roots(
            &IntPoly::from_descending(&[1, -2, 1, -1]),
            (&rat(1, 1), &rat(2, 1)),
        );
        assert_eq!(r.len(), 1);
        assert!((r[0].approx(6) - rat(175488, 100000)).abs() < rat(1, 100000));

        let r = isolate_roots(
            &IntPoly::from_descending(&[1, 0, -1, -1, -2, -1, -1]),
            (&rat(1, 1), &rat(2, 1)),
        );
        assert_eq!(r.len(), 1);
        assert!((r[0].approx(6) - rat(164541, 100000)).abs() < rat(1, 100000));
    }

    #[test]
    fn comparisons_are_exact() {
        let a = one_plus_sqrt2();
        assert_eq!(a.cmp_rational(&rat(2, 1)), Ordering::Greater);
        assert_eq!(a.cmp_rational(&rat(5, 2)), Ordering::Less);
        // same number from a reducible polynomial: (x^2-2x-1)(x-5)
        let p = IntPoly::from_descending(&[1, -2, -1]).mul(&IntPoly::from_descending(&[1, -5]));
        let b = make_algebraic(&p, (&rat(2, 1), &rat(3, 1))).unwrap();
        assert_eq!(a, b);
        let five = make_algebraic(&p, (&rat(4, 1), &rat(6, 1))).unwrap();
        assert_eq!(five, AlgebraicReal::from_integer(5));
        assert_eq!(five.minimized().unwrap().as_rational(), Some(rat(5, 1)));
        assert!(a < five);
    }

    #[test]
    fn minimized_strips_cofactors() {
        let p = IntPoly::from_descending(&[1, -2, -1])
            .mul(&IntPoly::from_descending(&[1, -1]))
            .mul(&IntPoly::from_descending(&[1, 1, 1]));
        let a = make_algebraic(&p, (&rat(2, 1), &rat(3, 1))).unwrap();
        let m = a.minimized().unwrap();
        assert!(m.irreducible_verified());
        assert_eq!(m.poly(), &IntPoly::from_descending(&[1, -2, -1]));
        assert_eq!(m, one_plus_sqrt2());
    }

    #[test]
    fn is_root_of_uses_gcd() {
        let a = one_plus_sqrt2();
        assert!(a.is_root_of(&IntPoly::from_descending(&[1, -2, -1])));
        // (x^2-2x-1)(x+7)
        let p = IntPoly::from_descending(&[1, -2, -1]).mul(&IntPoly::from_descending(&[1, 7]));
        assert!(a.is_root_of(&p));
        assert!(!a.is_root_of(&IntPoly::from_descending(&[1, -2])));
    }

    fn field_q2() -> Arc<NumberField> {
        NumberField::new(one_plus_sqrt2()).unwrap()
    }

    #[test]
    fn field_mul_reduces_modulo_min_poly() {
        let f = field_q2();
        let q = f.generator_element();
        let q2 = q.mul(&q);
        // q² = 2q + 1
        assert_eq!(q2.coeffs(), &[rat(1, 1), rat(2, 1)]);
    }

    #[test]
    fn sign_of_examples() {
        let f = field_q2();
        assert_eq!(f.zero().sign(), 0);
        let q = f.generator_element();
        // q² - 2q - 1 = 0
        let e = q.mul(&q).sub(&q.mul_rational(&rat(2, 1))).sub(&f.one());
        assert_eq!(e.sign(), 0);
        // q - 2 > 0
        let e = q.sub(&f.from_integer(2));
        assert_eq!(e.sign(), 1);
    }

    #[test]
    fn inverse_of_generator() {
        let f = field_q2();
        let q = f.generator_element();
        let inv = q.inv().unwrap();
        // 1/q = q - 2 in Q(1+√2)
        assert_eq!(inv.coeffs(), &[rat(-2, 1), rat(1, 1)]);
        assert!(q.mul(&inv).is_one());
    }

    #[test]
    fn add_identity_and_pow() {
        let f = field_q2();
        let q = f.generator_element();
        assert_eq!(q.add(&f.zero()), q);
        let p3 = q.pow(3).unwrap();
        assert_eq!(p3, q.mul(&q).mul(&q));
        let pm2 = q.pow(-2).unwrap();
        assert!(pm2.mul(&q.mul(&q)).is_one());
    }

    #[test]
    fn degree_one_field_is_rational_arithmetic() {
        let f = NumberField::new(AlgebraicReal::from_integer(3)).unwrap();
        assert_eq!(f.degree(), 1);
        let q = f.generator_element();
        assert_eq!(q.as_rational(), Some(rat(3, 1)));
        assert_eq!(q.mul(&q).as_rational(), Some(rat(9, 1)));
        assert_eq!(q.inv().unwrap().as_rational(), Some(rat(1, 3)));
        assert_eq!(q.sign(), 1);
    }

    #[test]
    fn field_mismatch_detected() {
        let f = field_q2();
        let g = NumberField::new(AlgebraicReal::from_integer(3)).unwrap();
        let a = f.one();
        let b = g.one();
        assert_eq!(a.try_add(&b).unwrap_err(), AlgebraicError::FieldMismatch);
    }

    #[test]
    fn decimal_rendering() {
        let a = one_plus_sqrt2();
        assert_eq!(a.decimal_string(5), "2.41421");
        assert_eq!(AlgebraicReal::from_integer(2).decimal_string(3), "2.000");
    }

    #[test]
    fn sturm_count_stays_one_under_refinement() {
        let polys: Vec<IntPoly> = vec![
            IntPoly::from_descending(&[1, -2, -1]),
            IntPoly::from_descending(&[1, 0, -2, -1, -1]),
            IntPoly::from_descending(&[1, -1, -4, -2, -1]),
        ];
        for p in &polys {
            let roots = crate::algebraic::isolate_all_roots(p);
            for a in roots {
                assert_eq!(a.sturm_root_count(), 1);
                let (lo, hi) = a.refine(6);
                if lo < hi {
                    let chain = crate::poly::SturmChain::new(a.poly());
                    assert_eq!(chain.count_roots(&lo, &hi), 1);
                    // the defining polynomial changes sign across the root
                    let s_lo = a.poly().eval_rational(&lo).is_positive();
                    let s_hi = a.poly().eval_rational(&hi).is_positive();
                    assert_ne!(s_lo, s_hi);
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_rat() -> impl Strategy<Value = BigRational> {
            (-6i64..=6, 1i64..=4).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
        }

        fn element() -> impl Strategy<Value = Vec<BigRational>> {
            proptest::collection::vec(small_rat(), 2)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn field_axioms_in_q_silver(a in element(), b in element(), c in element()) {
                let f = field_q2();
                let a = f.element(a);
                let b = f.element(b);
                let c = f.element(c);
                // associativity and commutativity of both operations
                prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                prop_assert_eq!(a.add(&b), b.add(&a));
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                // distributivity
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                // inverses
                if !a.is_zero() {
                    let inv = a.inv().unwrap();
                    prop_assert!(a.mul(&inv).is_one());
                }
                // subtraction against addition
                prop_assert_eq!(a.sub(&b).add(&b), a);
            }

            #[test]
            fn sign_alternates_across_root(num in 0i64..=100) {
                // rational sample points on either side of 1+√2 in [2, 3]
                let a = one_plus_sqrt2();
                let r = rat(200 + num, 100);
                let v = a.poly().eval_rational(&r);
                match a.cmp_rational(&r) {
                    Ordering::Greater => prop_assert!(v.is_negative()),
                    Ordering::Less => prop_assert!(v.is_positive()),
                    Ordering::Equal => prop_assert!(v.is_zero()),
                }
            }
        }
    }
}
