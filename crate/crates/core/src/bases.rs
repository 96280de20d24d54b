//! Critical bases and the parametric equation families whose roots make up
//! B₂(M) ∩ (p₁, p₂].
//!
//! For the alphabet {0,…,M} with m = ⌈M/2⌉:
//!
//! * `p1` is the generalized golden ratio: m+1 for even M, the positive root
//!   of x² − mx − m for odd M.
//! * `p2` bounds the window where unique expansions have an explicit catalog:
//!   the larger root of x² − (m+1)x − m (even), the root of
//!   x³ − (m+1)x² + x − m above p1 (odd).
//! * `q2` is the smallest base at which some point has exactly two
//!   expansions: the larger root of x² − (m+1)x − 1 (even), the root of
//!   x⁴ − (m−1)x³ − 2mx² − mx − 1 inside (p1, p2] (odd).
//!
//! A base q in the window admits a two-expansion point iff a difference
//! function from one of four parametric families vanishes at q. The families
//! are strictly increasing in q beyond p1, so each admits at most one root
//! there, and the roots move monotonically in the parameters (k, j up; u, v
//! down). [`enumerate_b2_window`] sweeps all parameters, certifies that
//! nothing outside the sweep bound can land in the window, deduplicates
//! exactly equal roots, and cross-checks the result against the closed-form
//! description.

use crate::algebraic::{
    isolate_roots, make_algebraic, AlgebraicError, AlgebraicReal, FieldElement, NumberField,
};
use crate::expansions::{evaluate, Alphabet, BaseContext, DigitSeq};
use crate::poly::IntPoly;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

/// Default sweep bound for k and j in [`enumerate_b2_window`].
pub const DEFAULT_SWEEP_K: u32 = 8;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("family has no root beyond p1")]
    NoRoot,
    #[error(transparent)]
    Algebraic(#[from] AlgebraicError),
}

/// The generalized golden ratio p₁(M).
pub fn p1(m_big: u32) -> AlgebraicReal {
    assert!(m_big >= 1);
    let m = Alphabet::new(m_big).m();
    if m_big.is_multiple_of(2) {
        AlgebraicReal::from_integer((m + 1) as i64)
    } else {
        // positive root of x^2 - m x - m, inside (m, m+1)
        let p = IntPoly::from_descending(&[1, -(m as i64), -(m as i64)]);
        make_algebraic(&p, (&rat_u(m), &rat_u(m + 1))).expect("p1 isolates")
    }
}

/// The upper window endpoint p₂(M).
pub fn p2(m_big: u32) -> AlgebraicReal {
    assert!(m_big >= 1);
    let m = Alphabet::new(m_big).m() as i64;
    if m_big.is_multiple_of(2) {
        // larger root of x^2 - (m+1) x - m, inside (m+1, m+2)
        let p = IntPoly::from_descending(&[1, -(m + 1), -m]);
        make_algebraic(&p, (&rat_i(m + 1), &rat_i(m + 2))).expect("p2 isolates")
    } else {
        // the unique root of x^3 - (m+1) x^2 + x - m above p1
        let p = IntPoly::from_descending(&[1, -(m + 1), 1, -m]);
        let lo = p1(m_big);
        let bound = p.cauchy_bound();
        let candidates: Vec<AlgebraicReal> = isolate_roots(&p, (&BigRational::one(), &bound))
            .into_iter()
            .filter(|r| r.cmp_alg(&lo) == Ordering::Greater)
            .collect();
        assert_eq!(candidates.len(), 1, "p2 root is unique above p1");
        candidates.into_iter().next().unwrap()
    }
}

/// The smallest base q₂(M) of B₂(M).
pub fn q2(m_big: u32) -> AlgebraicReal {
    assert!(m_big >= 1);
    let m = Alphabet::new(m_big).m() as i64;
    if m_big.is_multiple_of(2) {
        // larger root of x^2 - (m+1) x - 1, inside (m+1, m+2)
        let p = IntPoly::from_descending(&[1, -(m + 1), -1]);
        make_algebraic(&p, (&rat_i(m + 1), &rat_i(m + 2))).expect("q2 isolates")
    } else {
        // the root of x^4 - (m-1) x^3 - 2m x^2 - m x - 1 in (p1, p2]
        let p = IntPoly::from_descending(&[1, -(m - 1), -2 * m, -m, -1]);
        let lo = p1(m_big);
        let hi = p2(m_big);
        let bound = p.cauchy_bound();
        let candidates: Vec<AlgebraicReal> = isolate_roots(&p, (&BigRational::one(), &bound))
            .into_iter()
            .filter(|r| {
                r.cmp_alg(&lo) == Ordering::Greater && r.cmp_alg(&hi) != Ordering::Greater
            })
            .collect();
        assert_eq!(candidates.len(), 1, "q2 root is unique in (p1, p2]");
        candidates.into_iter().next().unwrap()
    }
}

fn rat_u(n: u32) -> BigRational {
    BigRational::from_integer(n.into())
}
fn rat_i(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

// ---------------------------------------------------------------------------
// Parametric families
// ---------------------------------------------------------------------------

/// Which of the four difference-function families an id refers to. `Even`
/// applies to M = 2m; the three odd variants cover the tail combinations
/// (m(m−1))/(m(m−1)), ((m−1)m)/((m−1)m) and the mixed case, whose mirror
/// image is folded in by swapping (k, j, u, v) → (j, k, v, u).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyVariant {
    Even,
    Odd1,
    Odd2,
    Odd3,
}

impl fmt::Display for FamilyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyVariant::Even => "even",
            FamilyVariant::Odd1 => "odd1",
            FamilyVariant::Odd2 => "odd2",
            FamilyVariant::Odd3 => "odd3",
        };
        f.write_str(s)
    }
}

/// Parameter tuple (variant; k, j, u, v) selecting one difference function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyId {
    pub variant: FamilyVariant,
    pub k: u32,
    pub j: u32,
    pub u: u32,
    pub v: u32,
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({},{},{},{})",
            self.variant, self.k, self.j, self.u, self.v
        )
    }
}

impl FamilyId {
    pub fn new(variant: FamilyVariant, k: u32, j: u32, u: u32, v: u32) -> Self {
        FamilyId { variant, k, j, u, v }
    }

    fn validate(&self, alphabet: Alphabet) -> Result<(), FamilyError> {
        let m = alphabet.m();
        let (even_needed, digit_max) = match self.variant {
            FamilyVariant::Even => (true, m),
            _ => (false, m.saturating_sub(1)),
        };
        if alphabet.is_even() != even_needed {
            return Err(FamilyError::InvalidFamily(format!(
                "{} family needs M {}",
                self.variant,
                if even_needed { "even" } else { "odd" }
            )));
        }
        if self.u > digit_max || self.v > digit_max {
            return Err(FamilyError::InvalidFamily(format!(
                "u, v must be at most {digit_max} for {}",
                self.variant
            )));
        }
        Ok(())
    }

    /// The quadratic "payload" multiplying q^{-k-1} (odd variants): returns
    /// ascending coefficients of c0 + c1 q + c2 q².
    fn odd_payloads(&self, m: i64) -> ([i64; 3], [i64; 3]) {
        let u = self.u as i64;
        let v = self.v as i64;
        // tail (m(m-1))^∞ payload: m-1-u + m q + u q²
        let a = [m - 1 - u, m, u];
        let b = [m - 1 - v, m, v];
        // tail ((m-1)m)^∞ payload: m-u + (m-1) q + u q²
        let c = [m - u, m - 1, u];
        let d = [m - v, m - 1, v];
        match self.variant {
            FamilyVariant::Odd1 => (a, b),
            FamilyVariant::Odd2 => (c, d),
            FamilyVariant::Odd3 => (a, d),
            FamilyVariant::Even => unreachable!(),
        }
    }
}

/// Exact value of the family difference function at a field element q.
pub fn family_value(
    id: &FamilyId,
    alphabet: Alphabet,
    q: &FieldElement,
) -> Result<FieldElement, FamilyError> {
    id.validate(alphabet)?;
    let field = q.field();
    let m = alphabet.m() as i64;
    let u = id.u as i64;
    let v = id.v as i64;
    let value = match id.variant {
        FamilyVariant::Even => {
            // q² - (2m+1) q + q^{-k}(m-u+uq) + q^{-j}(m-v+vq)
            let head = q.mul(q).sub(&q.mul_rational(&rat_i(2 * m + 1)));
            let ku = field
                .from_integer(m - u)
                .add(&q.mul_rational(&rat_i(u)))
                .mul(&q.pow(-(id.k as i64))?);
            let jv = field
                .from_integer(m - v)
                .add(&q.mul_rational(&rat_i(v)))
                .mul(&q.pow(-(id.j as i64))?);
            head.add(&ku).add(&jv)
        }
        _ => {
            // (q+1)(q-2m) + q^{-k-1} payload_k(q) + q^{-j-1} payload_j(q)
            let head = q.add(&field.one()).mul(&q.sub(&field.from_integer(2 * m)));
            let (pk, pj) = id.odd_payloads(m);
            let eval = |c: [i64; 3]| -> Result<FieldElement, FamilyError> {
                Ok(field
                    .from_integer(c[0])
                    .add(&q.mul_rational(&rat_i(c[1])))
                    .add(&q.mul(q).mul_rational(&rat_i(c[2]))))
            };
            let tk = eval(pk)?.mul(&q.pow(-(id.k as i64) - 1)?);
            let tj = eval(pj)?.mul(&q.pow(-(id.j as i64) - 1)?);
            head.add(&tk).add(&tj)
        }
    };
    Ok(value)
}

/// The family difference function at an exact rational point.
pub fn family_value_at_rational(
    id: &FamilyId,
    alphabet: Alphabet,
    q: &BigRational,
) -> Result<BigRational, FamilyError> {
    assert!(!q.is_zero(), "family value needs q != 0");
    id.validate(alphabet)?;
    let m = alphabet.m() as i64;
    let u = id.u as i64;
    let v = id.v as i64;
    let powm = |e: i64| -> BigRational {
        let p = q.pow(e.unsigned_abs() as u32 as i32);
        if e < 0 {
            BigRational::one() / p
        } else {
            p
        }
    };
    Ok(match id.variant {
        FamilyVariant::Even => {
            q * q - rat_i(2 * m + 1) * q
                + powm(-(id.k as i64)) * (rat_i(m - u) + rat_i(u) * q)
                + powm(-(id.j as i64)) * (rat_i(m - v) + rat_i(v) * q)
        }
        _ => {
            let (pk, pj) = id.odd_payloads(m);
            let eval =
                |c: [i64; 3]| rat_i(c[0]) + rat_i(c[1]) * q + rat_i(c[2]) * q * q;
            (q + BigRational::one()) * (q - rat_i(2 * m))
                + powm(-(id.k as i64) - 1) * eval(pk)
                + powm(-(id.j as i64) - 1) * eval(pj)
        }
    })
}

/// Denominator-cleared integer polynomial with the same roots as the family
/// function on q > 0: degree k+j+2 (even) or k+j+3 (odd variants).
pub fn family_cleared_poly(id: &FamilyId, alphabet: Alphabet) -> Result<IntPoly, FamilyError> {
    id.validate(alphabet)?;
    let m = alphabet.m() as i64;
    let u = id.u as i64;
    let v = id.v as i64;
    let k = id.k as usize;
    let j = id.j as usize;
    Ok(match id.variant {
        FamilyVariant::Even => {
            // x^{k+j} (x² - (2m+1)x) + x^j (m-u+ux) + x^k (m-v+vx)
            let head = IntPoly::from_descending(&[1, -(2 * m + 1), 0]).shift_up(k + j);
            let ku = IntPoly::from_descending(&[u, m - u]).shift_up(j);
            let jv = IntPoly::from_descending(&[v, m - v]).shift_up(k);
            head.add(&ku).add(&jv)
        }
        _ => {
            // (x+1)(x-2m) x^{k+j+1} + x^j payload_k + x^k payload_j
            let head = IntPoly::from_descending(&[1, 1 - 2 * m, -2 * m]).shift_up(k + j + 1);
            let (pk, pj) = id.odd_payloads(m);
            let tk = IntPoly::from_descending(&[pk[2], pk[1], pk[0]]).shift_up(j);
            let tj = IntPoly::from_descending(&[pj[2], pj[1], pj[0]]).shift_up(k);
            head.add(&tk).add(&tj)
        }
    })
}

/// Evaluates an integer polynomial at a field element by Horner's rule.
fn eval_intpoly_at(p: &IntPoly, x: &FieldElement) -> FieldElement {
    let field = x.field();
    let mut acc = field.zero();
    for c in p.coeffs().iter().rev() {
        acc = acc
            .mul(x)
            .add(&field.from_rational(&BigRational::from_integer(c.clone())));
    }
    acc
}

/// Closed-form root-existence criterion, evaluated exactly in Q(p1).
fn closed_form_has_root(id: &FamilyId, alphabet: Alphabet) -> Result<bool, FamilyError> {
    let m = alphabet.m() as i64;
    let u = id.u as i64;
    let v = id.v as i64;
    let k = id.k as i64;
    let j = id.j as i64;
    if id.variant == FamilyVariant::Even {
        // (u+1)/(m+1)^{k+1} + (v+1)/(m+1)^{j+1} < 1
        let base = rat_i(m + 1);
        let lhs = rat_i(u + 1) / pow_rat(&base, k + 1) + rat_i(v + 1) / pow_rat(&base, j + 1);
        return Ok(lhs < BigRational::one());
    }
    let p1_field = NumberField::new(p1(alphabet.max_digit()))?;
    let p = p1_field.generator_element();
    let test = |e: FieldElement| e.sign() < 0;
    Ok(match id.variant {
        FamilyVariant::Odd1 => {
            // (u+1)/(m p^k) + (v+1)/(m p^j) < 1
            // <=> (u+1) p^j + (v+1) p^k - m p^{k+j} < 0
            let lhs = p
                .pow(j)?
                .mul_rational(&rat_i(u + 1))
                .add(&p.pow(k)?.mul_rational(&rat_i(v + 1)))
                .sub(&p.pow(k + j)?.mul_rational(&rat_i(m)));
            test(lhs)
        }
        FamilyVariant::Odd2 => {
            // (u p + u + p)/p^{k+2} + (v p + v + p)/p^{j+2} < 1
            let up = p
                .mul_rational(&rat_i(u + 1))
                .add(&p1_field.from_integer(u));
            let vp = p
                .mul_rational(&rat_i(v + 1))
                .add(&p1_field.from_integer(v));
            let lhs = up
                .mul(&p.pow(j + 2)?)
                .add(&vp.mul(&p.pow(k + 2)?))
                .sub(&p.pow(k + j + 4)?);
            test(lhs)
        }
        FamilyVariant::Odd3 => {
            // (u+1)/(m p^k) + (v p + p + v)/p^{j+2} < 1
            let vp = p
                .mul_rational(&rat_i(v + 1))
                .add(&p1_field.from_integer(v));
            let lhs = p
                .pow(j + 2)?
                .mul_rational(&rat_i(u + 1))
                .add(&vp.mul(&p.pow(k)?).mul_rational(&rat_i(m)))
                .sub(&p.pow(k + j + 2)?.mul_rational(&rat_i(m)));
            test(lhs)
        }
        FamilyVariant::Even => unreachable!(),
    })
}

fn pow_rat(r: &BigRational, e: i64) -> BigRational {
    assert!(e >= 0);
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

/// True iff the family function has its (unique) root beyond p1: the sign of
/// the function at p1 is negative. Cross-checked against the closed-form
/// parameter criterion; any disagreement is a bug and panics.
pub fn family_has_root(id: &FamilyId, alphabet: Alphabet) -> Result<bool, FamilyError> {
    id.validate(alphabet)?;
    let poly = family_cleared_poly(id, alphabet)?;
    let p1_field = NumberField::new(p1(alphabet.max_digit()))?;
    let sign_route = eval_intpoly_at(&poly, &p1_field.generator_element()).sign() < 0;
    let closed_route = closed_form_has_root(id, alphabet)?;
    assert_eq!(
        sign_route, closed_route,
        "family {id}: sign test and closed-form criterion disagree"
    );
    Ok(sign_route)
}

/// The unique root of the family function beyond p1, as an algebraic real
/// carrying the square-free cleared polynomial.
pub fn family_root(id: &FamilyId, alphabet: Alphabet) -> Result<AlgebraicReal, FamilyError> {
    if !family_has_root(id, alphabet)? {
        return Err(FamilyError::NoRoot);
    }
    let poly = family_cleared_poly(id, alphabet)?;
    let p1_val = p1(alphabet.max_digit());
    let bound = poly.cauchy_bound();
    let candidates: Vec<AlgebraicReal> = isolate_roots(&poly, (&BigRational::one(), &bound))
        .into_iter()
        .filter(|r| r.cmp_alg(&p1_val) == Ordering::Greater)
        .collect();
    assert_eq!(
        candidates.len(),
        1,
        "family {id}: expected exactly one root beyond p1"
    );
    Ok(candidates.into_iter().next().unwrap())
}

// ---------------------------------------------------------------------------
// The B2 window enumeration
// ---------------------------------------------------------------------------

/// A certified member of B₂(M) ∩ (p₁, p₂]: the base together with two digit
/// sequences whose values coincide there (one starting 1…, one starting 0…).
#[derive(Clone, Debug)]
pub struct B2Witness {
    pub base: AlgebraicReal,
    pub family: FamilyId,
    pub left_seq: DigitSeq,
    pub right_seq: DigitSeq,
}

/// The two expansion sequences behind a family id: `1 0^k u T^∞` on the left
/// and the reflection-built `0 M^j (M−v) T'^∞` on the right.
pub fn witness_sequences(id: &FamilyId, alphabet: Alphabet) -> (DigitSeq, DigitSeq) {
    let m = alphabet.m();
    let m_big = alphabet.max_digit();
    let (left_tail, right_tail): (Vec<u32>, Vec<u32>) = match id.variant {
        FamilyVariant::Even => (vec![m], vec![m]),
        FamilyVariant::Odd1 => (vec![m, m - 1], vec![m - 1, m]),
        FamilyVariant::Odd2 => (vec![m - 1, m], vec![m, m - 1]),
        FamilyVariant::Odd3 => (vec![m, m - 1], vec![m, m - 1]),
    };
    let mut left = vec![1u32];
    left.extend(std::iter::repeat_n(0, id.k as usize));
    left.push(id.u);
    let mut right = vec![0u32];
    right.extend(std::iter::repeat_n(m_big, id.j as usize));
    right.push(m_big - id.v);
    (
        DigitSeq::new(left, left_tail),
        DigitSeq::new(right, right_tail),
    )
}

fn variants_for(alphabet: Alphabet) -> Vec<FamilyVariant> {
    if alphabet.is_even() {
        vec![FamilyVariant::Even]
    } else {
        vec![FamilyVariant::Odd1, FamilyVariant::Odd2, FamilyVariant::Odd3]
    }
}

/// Enumerates B₂(M) ∩ (p₁, p₂] with the default sweep bound.
pub fn enumerate_b2_window(m_big: u32) -> Vec<B2Witness> {
    enumerate_b2_window_with(m_big, DEFAULT_SWEEP_K)
}

/// Full parameter sweep over k, j ≤ `sweep_k` plus a monotonicity
/// certificate that no id beyond the bound can reach the window. The result
/// is checked against the closed-form description of the window set; a
/// mismatch panics, it is never patched over.
pub fn enumerate_b2_window_with(m_big: u32, sweep_k: u32) -> Vec<B2Witness> {
    let alphabet = Alphabet::new(m_big);
    let m = alphabet.m();
    let p1_val = p1(m_big);
    let p2_val = p2(m_big);
    let p1_field = NumberField::new(p1_val.clone()).expect("p1 field");
    let p2_field = NumberField::new(p2_val.clone()).expect("p2 field");
    let p1_elem = p1_field.generator_element();
    let p2_elem = p2_field.generator_element();
    let u_max = if alphabet.is_even() { m } else { m - 1 };

    let in_window = |id: &FamilyId| -> bool {
        let poly = family_cleared_poly(id, alphabet).expect("valid id");
        // root beyond p1 iff negative at p1; root <= p2 iff nonnegative at p2
        eval_intpoly_at(&poly, &p1_elem).sign() < 0
            && eval_intpoly_at(&poly, &p2_elem).sign() >= 0
    };

    // sweep
    let mut hits: Vec<(AlgebraicReal, FamilyId)> = Vec::new();
    for variant in variants_for(alphabet) {
        for k in 0..=sweep_k {
            for j in 0..=sweep_k {
                for u in 0..=u_max {
                    for v in 0..=u_max {
                        let id = FamilyId::new(variant, k, j, u, v);
                        if in_window(&id) {
                            assert!(
                                family_has_root(&id, alphabet).expect("valid id"),
                                "window candidate {id} lost its root certificate"
                            );
                            let root = family_root(&id, alphabet).expect("certified root");
                            hits.push((root, id));
                        }
                    }
                }
            }
        }
        certify_sweep_bound(variant, alphabet, sweep_k, &p2_elem, u_max);
    }

    // the first odd family contributes nothing of its own: for m >= 2 it has
    // no window roots at all, and for m = 1 its only window roots coincide
    // exactly with roots of the other families (checked after grouping)
    if !alphabet.is_even() && m >= 2 {
        assert!(
            hits.iter().all(|(_, id)| id.variant != FamilyVariant::Odd1),
            "unexpected window root from the odd1 family"
        );
    }

    // deduplicate exactly equal roots
    hits.sort_by(|a, b| a.0.cmp_alg(&b.0).then_with(|| a.1.cmp(&b.1)));
    let mut groups: Vec<(AlgebraicReal, Vec<FamilyId>)> = Vec::new();
    for (root, id) in hits {
        match groups.last_mut() {
            Some((r, ids)) if r.cmp_alg(&root) == Ordering::Equal => ids.push(id),
            _ => groups.push((root, vec![id])),
        }
    }
    for (root, ids) in &groups {
        assert!(
            ids.iter().any(|id| id.variant != FamilyVariant::Odd1),
            "window base {root} is reachable only through the odd1 family"
        );
    }

    // closed-form reference set
    let reference: Vec<FamilyId> = if alphabet.is_even() {
        (0..m)
            .map(|u| FamilyId::new(FamilyVariant::Even, 1, 0, u, m - 1))
            .collect()
    } else {
        let mut ids = Vec::new();
        for k in 2..=3 {
            for u in 0..m {
                ids.push(FamilyId::new(FamilyVariant::Odd2, k, 0, u, m - 1));
            }
            for u in 0..m.saturating_sub(1) {
                ids.push(FamilyId::new(FamilyVariant::Odd3, k, 0, u, m - 1));
            }
        }
        ids
    };
    let mut reference_roots: Vec<(AlgebraicReal, FamilyId)> = reference
        .iter()
        .map(|id| {
            (
                family_root(id, alphabet).expect("reference id has a root"),
                *id,
            )
        })
        .collect();
    reference_roots.sort_by(|a, b| a.0.cmp_alg(&b.0).then_with(|| a.1.cmp(&b.1)));
    reference_roots.dedup_by(|a, b| a.0.cmp_alg(&b.0) == Ordering::Equal);

    assert_eq!(
        groups.len(),
        reference_roots.len(),
        "sweep found {} distinct bases, closed form lists {}",
        groups.len(),
        reference_roots.len()
    );
    for ((root, _), (ref_root, _)) in groups.iter().zip(&reference_roots) {
        assert!(
            root.cmp_alg(ref_root) == Ordering::Equal,
            "sweep and closed-form window sets differ"
        );
    }

    // build witnesses, preferring the closed-form representative id
    let mut out = Vec::new();
    for (root, ids) in groups {
        let family = *ids
            .iter()
            .find(|id| reference.contains(id))
            .unwrap_or(&ids[0]);
        let (left_seq, right_seq) = witness_sequences(&family, alphabet);
        // the two-expansion identity, exactly in Q(base)
        let ctx = BaseContext::new(alphabet, root.clone()).expect("witness base context");
        let lv = evaluate(&left_seq, &ctx).expect("left value");
        let rv = evaluate(&right_seq, &ctx).expect("right value");
        assert!(
            lv.sub(&rv).is_zero(),
            "two-expansion identity failed for {family}"
        );
        out.push(B2Witness {
            base: root,
            family,
            left_seq,
            right_seq,
        });
    }
    out
}

/// Certifies that every id with k = sweep_k+1 (or j = sweep_k+1) roots beyond
/// p2, which by parameter monotonicity rules out all larger k and j. For each
/// (u, v) the smallest j admitting a root is located and the root compared
/// against p2 by an exact sign test.
fn certify_sweep_bound(
    variant: FamilyVariant,
    alphabet: Alphabet,
    sweep_k: u32,
    p2_elem: &FieldElement,
    u_max: u32,
) {
    let boundary = sweep_k + 1;
    for u in 0..=u_max {
        for v in 0..=u_max {
            for side in [true, false] {
                let mut certified = false;
                for other in 0..=3u32 {
                    let id = if side {
                        FamilyId::new(variant, boundary, other, u, v)
                    } else {
                        FamilyId::new(variant, other, boundary, u, v)
                    };
                    if family_has_root(&id, alphabet).expect("valid id") {
                        let poly = family_cleared_poly(&id, alphabet).expect("valid id");
                        assert!(
                            eval_intpoly_at(&poly, p2_elem).sign() < 0,
                            "sweep bound {sweep_k} too small: {id} roots inside the window"
                        );
                        certified = true;
                        break;
                    }
                }
                assert!(
                    certified,
                    "no root found near the sweep boundary for {variant}({u},{v}); \
                     cannot certify completeness"
                );
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Known constants for M = 1
// ---------------------------------------------------------------------------

/// The three classical M = 1 constants.
#[derive(Clone, Debug)]
pub struct KnownBasesM1 {
    /// Smallest base with a two-expansion point: root of x⁴ − 2x² − x − 1.
    pub q2: AlgebraicReal,
    /// Smallest base with a k-expansion point for k ≥ 3: root of
    /// x³ − 2x² + x − 1.
    pub qk: AlgebraicReal,
    /// Second smallest base admitting an ℵ₀-expansion point: root of
    /// x⁶ − x⁴ − x³ − 2x² − x − 1.
    pub q_aleph0_second: AlgebraicReal,
}

pub fn known_bases_m1() -> KnownBasesM1 {
    let one = BigRational::one();
    let two = rat_i(2);
    KnownBasesM1 {
        q2: make_algebraic(
            &IntPoly::from_descending(&[1, 0, -2, -1, -1]),
            (&BigRational::new(3.into(), 2.into()), &two),
        )
        .expect("q2(1) isolates"),
        qk: make_algebraic(&IntPoly::from_descending(&[1, -2, 1, -1]), (&one, &two))
            .expect("qk(1) isolates"),
        q_aleph0_second: make_algebraic(
            &IntPoly::from_descending(&[1, 0, -1, -1, -2, -1, -1]),
            (&one, &two),
        )
        .expect("q_aleph0(1) isolates"),
    }
}

/// Sample bases strictly inside (p₁, p₂) whose quasi-greedy expansion of 1
/// is periodic, so the uniqueness test is decidable there. Available for
/// M ∈ {2, 3, 4}; each is the base q with α(q) = (d 0 0 0)^∞-style word
/// solving ((word)^∞)_q = 1.
pub fn interior_preset(m_big: u32) -> Option<AlgebraicReal> {
    let (poly, lo, hi): (IntPoly, BigRational, BigRational) = match m_big {
        2 => (
            IntPoly::from_descending(&[1, -2, 0, 0, -1]),
            rat_i(2),
            BigRational::new(12.into(), 5.into()),
        ),
        3 => (
            IntPoly::from_descending(&[1, -2, -2, 0, -1]),
            BigRational::new(27.into(), 10.into()),
            BigRational::new(57.into(), 20.into()),
        ),
        4 => (
            IntPoly::from_descending(&[1, -3, 0, 0, -1]),
            rat_i(3),
            BigRational::new(17.into(), 5.into()),
        ),
        _ => return None,
    };
    let q = make_algebraic(&poly, (&lo, &hi)).expect("interior preset isolates");
    debug_assert!(q.cmp_alg(&p1(m_big)) == Ordering::Greater);
    debug_assert!(q.cmp_alg(&p2(m_big)) == Ordering::Less);
    Some(q)
}
