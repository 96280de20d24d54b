//! Digit sequences over {0,…,M}, their exact values in base q, the
//! quasi-greedy expansion of 1, and the lexicographic characterization of
//! unique expansions.
//!
//! Sequences are eventually periodic and kept in canonical form: the period
//! is primitive and the preperiod is minimal. A sequence ending in 0^∞ is
//! stored with period `0`. The text grammar puts the period in parentheses:
//! `1(0)` is 1 0^∞, `(20)` is (20)^∞, `100(21)` is 100(21)^∞; digits are
//! concatenated for alphabets up to 9 and comma-separated beyond that, e.g.
//! `10,3,(11,0)`.

use crate::algebraic::{AlgebraicError, AlgebraicReal, FieldElement, NumberField};
use crate::bases;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};
use thiserror::Error;

/// Default number of orbit steps tried before the quasi-greedy expansion is
/// reported undecided.
pub const DEFAULT_ALPHA_HORIZON: usize = 64;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExpansionError {
    #[error("digit {digit} exceeds alphabet maximum {max}")]
    DigitOutOfRange { digit: u32, max: u32 },
    #[error("quasi-greedy orbit did not repeat within {horizon} steps; prefix {prefix:?}")]
    HorizonExceeded { horizon: usize, prefix: Vec<u32> },
    #[error("quasi-greedy expansion of 1 undecided at this horizon")]
    AlphaUndecided,
    #[error("base lies outside the window (p1, p2]")]
    BaseOutOfWindow,
    #[error("base must satisfy 1 < q <= M+1")]
    InvalidBase,
    #[error("cannot parse digit sequence: {0}")]
    Parse(String),
    #[error(transparent)]
    Algebraic(#[from] AlgebraicError),
}

/// The digit alphabet {0,…,M} with its midpoint parameter m = ⌈M/2⌉.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alphabet {
    max: u32,
}

impl Alphabet {
    pub fn new(max: u32) -> Self {
        assert!(max >= 1, "alphabet needs M >= 1");
        Alphabet { max }
    }

    /// Largest digit M.
    pub fn max_digit(&self) -> u32 {
        self.max
    }

    /// m where M = 2m (even) or M = 2m-1 (odd).
    pub fn m(&self) -> u32 {
        self.max.div_ceil(2)
    }

    pub fn is_even(&self) -> bool {
        self.max.is_multiple_of(2)
    }

    pub fn reflect_digit(&self, d: u32) -> u32 {
        self.max - d
    }
}

/// An eventually periodic digit sequence in canonical form.
///
/// `preperiod` is the initial word and `period` the infinitely repeated one;
/// `period` is never empty, is primitive, and the last preperiod digit
/// differs from the last period digit (otherwise it would be absorbed).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DigitSeq {
    preperiod: Vec<u32>,
    period: Vec<u32>,
}

impl DigitSeq {
    pub fn new(preperiod: Vec<u32>, period: Vec<u32>) -> Self {
        let mut seq = DigitSeq {
            preperiod,
            period: if period.is_empty() { vec![0] } else { period },
        };
        seq.canonicalize();
        seq
    }

    /// 0^∞.
    pub fn zeros() -> Self {
        DigitSeq {
            preperiod: vec![],
            period: vec![0],
        }
    }

    /// The constant sequence d^∞.
    pub fn constant(d: u32) -> Self {
        DigitSeq {
            preperiod: vec![],
            period: vec![d],
        }
    }

    /// A finite word followed by 0^∞.
    pub fn finite(word: Vec<u32>) -> Self {
        Self::new(word, vec![0])
    }

    pub fn preperiod(&self) -> &[u32] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u32] {
        &self.period
    }

    /// True when the sequence ends in 0^∞ (a "finite" expansion).
    pub fn ends_in_zeros(&self) -> bool {
        self.period == [0]
    }

    fn canonicalize(&mut self) {
        // primitive period
        let plen = self.period.len();
        for d in 1..plen {
            if plen.is_multiple_of(d) && (d..plen).all(|i| self.period[i] == self.period[i % d]) {
                self.period.truncate(d);
                break;
            }
        }
        // minimal preperiod: absorb matching tail digits into the period
        while let (Some(&p_last), Some(&q_last)) = (self.preperiod.last(), self.period.last()) {
            if p_last != q_last {
                break;
            }
            self.preperiod.pop();
            self.period.rotate_right(1);
        }
    }

    /// Digit at 0-based position `i`.
    pub fn digit(&self, i: usize) -> u32 {
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    pub fn max_digit_used(&self) -> u32 {
        self.preperiod
            .iter()
            .chain(self.period.iter())
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// The tail starting at position `n` (dropping the first `n` digits),
    /// canonical again.
    pub fn shift(&self, n: usize) -> Self {
        if n <= self.preperiod.len() {
            Self::new(self.preperiod[n..].to_vec(), self.period.clone())
        } else {
            let k = (n - self.preperiod.len()) % self.period.len();
            let mut per = self.period.clone();
            per.rotate_left(k);
            Self::new(vec![], per)
        }
    }

    /// Digitwise reflection d ↦ M−d.
    pub fn reflect(&self, alphabet: Alphabet) -> Result<Self, ExpansionError> {
        let m = self.max_digit_used();
        if m > alphabet.max_digit() {
            return Err(ExpansionError::DigitOutOfRange {
                digit: m,
                max: alphabet.max_digit(),
            });
        }
        Ok(Self::new(
            self.preperiod
                .iter()
                .map(|&d| alphabet.reflect_digit(d))
                .collect(),
            self.period
                .iter()
                .map(|&d| alphabet.reflect_digit(d))
                .collect(),
        ))
    }

    /// Number of positions after which shifted tails repeat.
    pub fn distinct_positions(&self) -> usize {
        self.preperiod.len() + self.period.len()
    }

    /// Parses the textual grammar (see module docs).
    pub fn parse(text: &str) -> Result<Self, ExpansionError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(ExpansionError::Parse("empty sequence".into()));
        }
        let bad = |m: &str| ExpansionError::Parse(m.to_string());
        let (pre_text, per_text) = match text.find('(') {
            None => (text, ""),
            Some(i) => {
                if !text.ends_with(')') {
                    return Err(bad("missing closing parenthesis"));
                }
                (&text[..i], &text[i + 1..text.len() - 1])
            }
        };
        let parse_word = |w: &str| -> Result<Vec<u32>, ExpansionError> {
            let w = w.trim().trim_matches(',');
            if w.is_empty() {
                return Ok(vec![]);
            }
            if w.contains(',') {
                w.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| bad(&format!("invalid digit `{t}`")))
                    })
                    .collect()
            } else {
                w.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .ok_or_else(|| bad(&format!("invalid digit `{c}`")))
                    })
                    .collect()
            }
        };
        let pre = parse_word(pre_text)?;
        let per = parse_word(per_text)?;
        if pre.is_empty() && per.is_empty() {
            return Err(bad("sequence has no digits"));
        }
        Ok(Self::new(pre, per))
    }
}

/// Renders a finite digit word in the sequence text convention: concatenated
/// digits up to 9, comma-separated beyond.
pub fn format_word(word: &[u32]) -> String {
    if word.iter().any(|&d| d > 9) {
        word.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    } else {
        word.iter().map(|d| d.to_string()).collect()
    }
}

impl fmt::Display for DigitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_digit_used() > 9;
        let word = |w: &[u32]| -> String {
            if wide {
                w.iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            } else {
                w.iter().map(|d| d.to_string()).collect()
            }
        };
        let sep = if wide && !self.preperiod.is_empty() { "," } else { "" };
        write!(f, "{}{sep}({})", word(&self.preperiod), word(&self.period))
    }
}

impl fmt::Debug for DigitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DigitSeq({self})")
    }
}

///Lexicographic order of the underlying infinite sequences. Two eventually
/// periodic sequences agreeing through both preperiods plus one common period
/// window agree forever, so the comparison is exact.
pub fn lex_compare(a: &DigitSeq, b: &DigitSeq) -> Ordering {
    let bound =
        a.preperiod.len() + b.preperiod.len() + a.period.len().lcm(&b.period.len());
    for i in 0..bound {
        match a.digit(i).cmp(&b.digit(i)) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

impl PartialOrd for DigitSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order = infinite lexicographic order (canonical forms make it
/// consistent with equality).
impl Ord for DigitSeq {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_compare(self, other)
    }
}

// ---------------------------------------------------------------------------
// Base contexts
// ---------------------------------------------------------------------------

/// A base q with its alphabet and the number field Q(q); the ambient
/// interval for expansions is I_q = [0, M/(q-1)].
pub struct BaseContext {
    alphabet: Alphabet,
    q: AlgebraicReal,
    field: Arc<NumberField>,
    q_elem: FieldElement,
    upper: FieldElement,
    alpha_cache: OnceLock<Result<DigitSeq, ExpansionError>>,
}

impl fmt::Debug for BaseContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BaseContext(M={}, q={})",
            self.alphabet.max_digit(),
            self.q
        )
    }
}

impl BaseContext {
    /// Verifies 1 < q ≤ M+1 with exact sign tests, minimizes the defining
    /// polynomial and builds Q(q).
    pub fn new(alphabet: Alphabet, q: AlgebraicReal) -> Result<Self, ExpansionError> {
        let q = q.minimized()?;
        let one = BigRational::one();
        let upper_bound = BigRational::from_integer((alphabet.max_digit() + 1).into());
        if q.cmp_rational(&one) != Ordering::Greater
            || q.cmp_rational(&upper_bound) == Ordering::Greater
        {
            return Err(ExpansionError::InvalidBase);
        }
        let field = NumberField::new(q.clone())?;
        let q_elem = field.generator_element();
        let m_over = field.from_integer(alphabet.max_digit() as i64);
        let upper = m_over.div(&q_elem.sub(&field.one()))?;
        Ok(BaseContext {
            alphabet,
            q,
            field,
            q_elem,
            upper,
            alpha_cache: OnceLock::new(),
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn base(&self) -> &AlgebraicReal {
        &self.q
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    /// q as an element of Q(q).
    pub fn q_element(&self) -> &FieldElement {
        &self.q_elem
    }

    /// Right endpoint M/(q−1) of I_q.
    pub fn interval_upper(&self) -> &FieldElement {
        &self.upper
    }

    /// True iff 0 ≤ x ≤ M/(q−1), exactly.
    pub fn contains(&self, x: &FieldElement) -> bool {
        x.sign() >= 0 && self.upper.sub(x).sign() >= 0
    }

    /// The quasi-greedy expansion of 1 at the default horizon, cached.
    pub fn alpha(&self) -> Result<DigitSeq, ExpansionError> {
        self.alpha_cache
            .get_or_init(|| quasi_greedy_alpha(self, DEFAULT_ALPHA_HORIZON))
            .clone()
    }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Exact value Σ dᵢ q^(−i) of a digit sequence in Q(q): preperiod part plus
/// the geometric tail period/(q^L − 1) scaled into place.
pub fn evaluate(seq: &DigitSeq, ctx: &BaseContext) -> Result<FieldElement, ExpansionError> {
    let maxd = seq.max_digit_used();
    if maxd > ctx.alphabet.max_digit() {
        return Err(ExpansionError::DigitOutOfRange {
            digit: maxd,
            max: ctx.alphabet.max_digit(),
        });
    }
    let field = &ctx.field;
    let q = &ctx.q_elem;
    let q_inv = q.inv()?;

    // preperiod: Horner from the right over q^{-1}
    let mut pre_val = field.zero();
    for &d in seq.preperiod.iter().rev() {
        pre_val = pre_val.add(&field.from_integer(d as i64)).mul(&q_inv);
    }

    // period word value: (Σ per_i q^{L-i}) / (q^L - 1), then shift by q^{-P}
    let l = seq.period.len();
    let mut num = field.zero();
    for &d in &seq.period {
        num = num.mul(q).add(&field.from_integer(d as i64));
    }
    let q_l = q.pow(l as i64)?;
    let denom = q_l.sub(&field.one());
    let tail = num.div(&denom)?;
    let shift = q_inv.pow(seq.preperiod.len() as i64)?;
    Ok(pre_val.add(&tail.mul(&shift)))
}

// ---------------------------------------------------------------------------
// Quasi-greedy expansion of 1
// ---------------------------------------------------------------------------

/// Computes the quasi-greedy expansion α(q) of 1: greedy digits by exact
/// sign tests on the orbit r ↦ q·r − d. When the greedy expansion of 1 is
/// finite d₁…dₙ the quasi-greedy form is (d₁…d₍ₙ₋₁₎(dₙ−1))^∞; otherwise the
/// orbit is followed until an exact repeat yields the eventual period.
pub fn quasi_greedy_alpha(
    ctx: &BaseContext,
    horizon: usize,
) -> Result<DigitSeq, ExpansionError> {
    let field = &ctx.field;
    let q = &ctx.q_elem;
    let max = ctx.alphabet.max_digit();
    let mut digits: Vec<u32> = Vec::new();
    let mut seen: Vec<(FieldElement, usize)> = Vec::new();
    let mut r = field.one();
    for step in 0..horizon.max(1) {
        if let Some((_, first)) = seen.iter().find(|(s, _)| *s == r) {
            let pre = digits[..*first].to_vec();
            let per = digits[*first..].to_vec();
            return Ok(DigitSeq::new(pre, per));
        }
        seen.push((r.clone(), step));
        let qr = q.mul(&r);
        let mut d = max;
        loop {
            let rem = qr.sub(&field.from_integer(d as i64));
            if rem.sign() >= 0 {
                r = rem;
                break;
            }
            assert!(d > 0, "greedy digit went negative; base below 1?");
            d -= 1;
        }
        digits.push(d);
        if r.is_zero() {
            // finite greedy expansion: quasi-greedy is (d1 .. d_{n-1} (d_n - 1))^∞
            let n = digits.len();
            debug_assert!(digits[n - 1] >= 1);
            let mut word = digits.clone();
            word[n - 1] -= 1;
            return Ok(DigitSeq::new(vec![], word));
        }
    }
    Err(ExpansionError::HorizonExceeded {
        horizon,
        prefix: digits,
    })
}

// ---------------------------------------------------------------------------
// Admissibility and uniqueness
// ---------------------------------------------------------------------------

/// True iff every shifted tail is lexicographically ≤ the sequence itself and
/// the sequence is infinite (does not end in 0^∞). These are exactly the
/// sequences arising as α(q) for some base.
pub fn is_admissible_alpha(seq: &DigitSeq) -> bool {
    if seq.ends_in_zeros() {
        return false;
    }
    (1..=seq.distinct_positions())
        .all(|i| lex_compare(&seq.shift(i), seq) != Ordering::Greater)
}

/// The two-sided lexicographic test for membership in the unique-expansion
/// set U'_q: whenever dₙ < M the tail after n must stay below α(q), and
/// whenever dₙ > 0 it must stay above the reflection of α(q).
pub fn is_unique_expansion(seq: &DigitSeq, ctx: &BaseContext) -> Result<bool, ExpansionError> {
    let maxd = seq.max_digit_used();
    let alphabet = ctx.alphabet;
    if maxd > alphabet.max_digit() {
        return Err(ExpansionError::DigitOutOfRange {
            digit: maxd,
            max: alphabet.max_digit(),
        });
    }
    let alpha = ctx.alpha().map_err(|e| match e {
        ExpansionError::HorizonExceeded { .. } => ExpansionError::AlphaUndecided,
        other => other,
    })?;
    let alpha_reflected = alpha.reflect(alphabet)?;
    for n in 1..=seq.distinct_positions() {
        let d = seq.digit(n - 1);
        let tail = seq.shift(n);
        if d < alphabet.max_digit() && lex_compare(&tail, &alpha) != Ordering::Less {
            return Ok(false);
        }
        if d > 0 && lex_compare(&tail, &alpha_reflected) != Ordering::Greater {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Catalogs of unique expansions on (p1, p2]
// ---------------------------------------------------------------------------

/// Explicit catalog of U'_q for bases in the window (p1, p2], enumerated up
/// to the given preperiod length and deduplicated through canonical forms.
///
/// Even M = 2m: 0^∞ and M^∞ together with 0^k u m^∞ (0 ≤ u ≤ m) and their
/// reflections. Odd M = 2m−1: the families 0^k u (m(m−1))^∞ and
/// 0^k u ((m−1)m)^∞ (0 ≤ u ≤ m−1) and their reflections.
///
/// Output is sorted by preperiod length, then lexicographically.
pub fn unique_set_catalog(
    ctx: &BaseContext,
    max_preperiod: usize,
) -> Result<Vec<DigitSeq>, ExpansionError> {
    let alphabet = ctx.alphabet;
    let m_big = alphabet.max_digit();
    let p1 = bases::p1(m_big);
    let p2 = bases::p2(m_big);
    if ctx.q.cmp_alg(&p1) != Ordering::Greater || ctx.q.cmp_alg(&p2) == Ordering::Greater {
        return Err(ExpansionError::BaseOutOfWindow);
    }
    let m = alphabet.m();
    let mut set = std::collections::BTreeSet::new();
    set.insert(DigitSeq::zeros());
    set.insert(DigitSeq::constant(m_big));
    let tails: Vec<Vec<u32>> = if alphabet.is_even() {
        vec![vec![m]]
    } else {
        vec![vec![m, m - 1], vec![m - 1, m]]
    };
    let u_max = if alphabet.is_even() { m } else { m - 1 };
    for tail in &tails {
        for k in 0..=max_preperiod {
            for u in 0..=u_max {
                let mut pre = vec![0u32; k];
                pre.push(u);
                let seq = DigitSeq::new(pre, tail.clone());
                set.insert(seq.reflect(alphabet)?);
                set.insert(seq);
            }
        }
    }
    let mut out: Vec<DigitSeq> = set.into_iter().collect();
    out.sort_by(|a, b| {
        a.preperiod
            .len()
            .cmp(&b.preperiod.len())
            .then_with(|| lex_compare(a, b))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::make_algebraic;
    use crate::poly::IntPoly;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ctx_m2_silver() -> BaseContext {
        let q = make_algebraic(
            &IntPoly::from_descending(&[1, -2, -1]),
            (&rat(2, 1), &rat(3, 1)),
        )
        .unwrap();
        BaseContext::new(Alphabet::new(2), q).unwrap()
    }

    #[test]
    fn canonical_forms() {
        // period made primitive
        let s = DigitSeq::new(vec![], vec![2, 0, 2, 0]);
        assert_eq!(s.period(), &[2, 0]);
        // preperiod absorbed into the period
        let s = DigitSeq::new(vec![1, 2], vec![0, 2]);
        assert_eq!(s.preperiod(), &[1]);
        assert_eq!(s.period(), &[2, 0]);
        // the trailing family digit is absorbed: 0^3 1 1^∞ = 0^3 1^∞
        let a = DigitSeq::new(vec![0, 0, 0], vec![1]);
        let b = DigitSeq::new(vec![0, 0, 0, 1], vec![1]);
        assert_eq!(a, b);
        // but 0^2 1 1^∞ is a different sequence
        let c = DigitSeq::new(vec![0, 0, 1], vec![1]);
        assert_ne!(a, c);
    }

    #[test]
    fn parse_and_display() {
        let s = DigitSeq::parse("100(21)").unwrap();
        assert_eq!(s.preperiod(), &[1, 0, 0]);
        assert_eq!(s.period(), &[2, 1]);
        assert_eq!(s.to_string(), "100(21)");
        let s = DigitSeq::parse("1(0)").unwrap();
        assert_eq!(s, DigitSeq::finite(vec![1]));
        let s = DigitSeq::parse("(20)").unwrap();
        assert_eq!(s, DigitSeq::new(vec![], vec![2, 0]));
        let s = DigitSeq::parse("10,3,(11,0)").unwrap();
        assert_eq!(s.preperiod(), &[10, 3]);
        assert_eq!(s.period(), &[11, 0]);
        assert_eq!(s.to_string(), "10,3,(11,0)");
        assert!(DigitSeq::parse("1(2").is_err());
        assert!(DigitSeq::parse("").is_err());
    }

    #[test]
    fn reflect_examples() {
        let a2 = Alphabet::new(2);
        assert_eq!(
            DigitSeq::zeros().reflect(a2).unwrap(),
            DigitSeq::constant(2)
        );
        let s = DigitSeq::new(vec![], vec![2, 0]);
        assert_eq!(s.reflect(a2).unwrap(), DigitSeq::new(vec![], vec![0, 2]));
        // reflection of 0^k u m^∞ for M = 2m
        let a4 = Alphabet::new(4);
        let s = DigitSeq::new(vec![0, 0, 1], vec![2]);
        assert_eq!(
            s.reflect(a4).unwrap(),
            DigitSeq::new(vec![4, 4, 3], vec![2])
        );
    }

    #[test]
    fn lex_compare_examples() {
        let a = DigitSeq::new(vec![], vec![1, 0]);
        assert_eq!(lex_compare(&a, &a), Ordering::Equal);
        // m^∞ < ((m+1)(m-1))^∞ for M = 2m
        let m_inf = DigitSeq::constant(1);
        let p2_alpha = DigitSeq::new(vec![], vec![2, 0]);
        assert_eq!(lex_compare(&m_inf, &p2_alpha), Ordering::Less);
        // ((m-1)m)^∞ < (m(m-1))^∞ for M = 2m-1
        let a = DigitSeq::new(vec![], vec![1, 2]);
        let b = DigitSeq::new(vec![], vec![2, 1]);
        assert_eq!(lex_compare(&a, &b), Ordering::Less);
    }

    #[test]
    fn shift_walks_tails() {
        let s = DigitSeq::parse("100(21)").unwrap();
        assert_eq!(s.shift(1), DigitSeq::parse("00(21)").unwrap());
        assert_eq!(s.shift(3), DigitSeq::parse("(21)").unwrap());
        assert_eq!(s.shift(4), DigitSeq::parse("(12)").unwrap());
        assert_eq!(s.shift(6), DigitSeq::parse("(12)").unwrap());
    }

    #[test]
    fn evaluate_examples() {
        let ctx = ctx_m2_silver();
        let zero = evaluate(&DigitSeq::zeros(), &ctx).unwrap();
        assert!(zero.is_zero());
        // ((20))_q = 1 at q = 1+√2
        let v = evaluate(&DigitSeq::parse("(20)").unwrap(), &ctx).unwrap();
        assert!(v.is_one());
        // (1(2))_q = 1 as well: 1/q + 2/(q(q-1)) = 1
        let v = evaluate(&DigitSeq::parse("1(2)").unwrap(), &ctx).unwrap();
        assert!(v.is_one());
    }

    #[test]
    fn evaluate_rejects_large_digits() {
        let ctx = ctx_m2_silver();
        let err = evaluate(&DigitSeq::parse("3(0)").unwrap(), &ctx).unwrap_err();
        assert_eq!(err, ExpansionError::DigitOutOfRange { digit: 3, max: 2 });
    }

    #[test]
    fn alpha_silver_ratio() {
        let ctx = ctx_m2_silver();
        assert_eq!(ctx.alpha().unwrap(), DigitSeq::parse("(20)").unwrap());
    }

    #[test]
    fn alpha_even_p1_is_m_inf() {
        // M = 2m, q = p1 = m+1 rational: alpha = m^∞
        for m in 1u32..=4 {
            let ctx = BaseContext::new(
                Alphabet::new(2 * m),
                AlgebraicReal::from_integer((m + 1) as i64),
            )
            .unwrap();
            assert_eq!(ctx.alpha().unwrap(), DigitSeq::constant(m));
        }
    }

    #[test]
    fn alpha_odd_p2_is_mmm1m1() {
        // M = 2m-1, q = p2: alpha = (m m (m-1) (m-1))^∞
        for m in 1u32..=3 {
            let big_m = 2 * m - 1;
            let p2 = bases::p2(big_m);
            let ctx = BaseContext::new(Alphabet::new(big_m), p2).unwrap();
            let expect = DigitSeq::new(vec![], vec![m, m, m - 1, m - 1]);
            assert_eq!(ctx.alpha().unwrap(), expect);
        }
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible_alpha(&DigitSeq::parse("(20)").unwrap()));
        assert!(!is_admissible_alpha(&DigitSeq::parse("(02)").unwrap()));
        // (m m (m-1)(m-1))^∞ with m = 2
        assert!(is_admissible_alpha(&DigitSeq::parse("(2211)").unwrap()));
        // sequences ending in zeros are not infinite
        assert!(!is_admissible_alpha(&DigitSeq::parse("1(0)").unwrap()));
    }

    #[test]
    fn unique_expansion_examples() {
        let ctx = ctx_m2_silver();
        assert!(is_unique_expansion(&DigitSeq::zeros(), &ctx).unwrap());
        // 0^k u m^∞ for u <= m
        assert!(is_unique_expansion(&DigitSeq::parse("001(1)").unwrap(), &ctx).unwrap());
        // ((m+1)(m-1))^∞ = (20)^∞ is not unique at q = p2
        assert!(!is_unique_expansion(&DigitSeq::parse("(20)").unwrap(), &ctx).unwrap());
        // (10)^∞ fails the lower condition
        assert!(!is_unique_expansion(&DigitSeq::parse("(10)").unwrap(), &ctx).unwrap());
        // M^∞ is unique
        assert!(is_unique_expansion(&DigitSeq::constant(2), &ctx).unwrap());
    }

    #[test]
    fn catalog_m2_small() {
        let ctx = ctx_m2_silver();
        let cat = unique_set_catalog(&ctx, 0).unwrap();
        // {0^∞, 2^∞, 1^∞, 01^∞, 21^∞} after canonicalization
        let expect: Vec<DigitSeq> = ["(0)", "(1)", "(2)", "0(1)", "2(1)"]
            .iter()
            .map(|s| DigitSeq::parse(s).unwrap())
            .collect();
        let got: std::collections::BTreeSet<_> = cat.iter().cloned().collect();
        let want: std::collections::BTreeSet<_> = expect.iter().cloned().collect();
        assert_eq!(got, want);
        // every member passes the uniqueness test
        for seq in &cat {
            assert!(is_unique_expansion(seq, &ctx).unwrap(), "{seq}");
        }
    }

    #[test]
    fn catalog_rejects_bases_outside_window() {
        // q = 3 = M+1 > p2 for M = 2
        let ctx = BaseContext::new(Alphabet::new(2), AlgebraicReal::from_integer(3)).unwrap();
        assert_eq!(
            unique_set_catalog(&ctx, 2).unwrap_err(),
            ExpansionError::BaseOutOfWindow
        );
    }

    #[test]
    fn catalog_odd_m3_shape() {
        // M = 3 (m = 2) at q = p2: families 0^k u (21)^∞ and 0^k u (12)^∞
        let p2 = bases::p2(3);
        let ctx = BaseContext::new(Alphabet::new(3), p2).unwrap();
        let cat = unique_set_catalog(&ctx, 1).unwrap();
        assert!(cat.contains(&DigitSeq::parse("1(21)").unwrap()));
        assert!(cat.contains(&DigitSeq::parse("0(12)").unwrap()));
        // u ranges only up to m-1 = 1: "02(21)" must not appear
        assert!(!cat.contains(&DigitSeq::parse("02(21)").unwrap()));
        for seq in &cat {
            assert!(is_unique_expansion(seq, &ctx).unwrap(), "{seq}");
        }
    }

    #[test]
    fn reflect_round_trip_value() {
        // evaluate(reflect(seq)) = M/(q-1) - evaluate(seq)
        let ctx = ctx_m2_silver();
        for text in ["(0)", "(20)", "1(2)", "100(21)", "0012(102)"] {
            let seq = DigitSeq::parse(text).unwrap();
            let lhs = evaluate(&seq.reflect(ctx.alphabet()).unwrap(), &ctx).unwrap();
            let rhs = ctx.interval_upper().sub(&evaluate(&seq, &ctx).unwrap());
            assert_eq!(lhs, rhs, "{text}");
        }
    }

    #[test]
    fn alpha_monotone_in_q_on_presets() {
        // strictly increasing q -> strictly increasing alpha
        let qs = [
            BaseContext::new(Alphabet::new(2), AlgebraicReal::from_integer(2)).unwrap(),
            BaseContext::new(Alphabet::new(2), crate::bases::interior_preset(2).unwrap())
                .unwrap(),
            ctx_m2_silver(),
            BaseContext::new(Alphabet::new(2), AlgebraicReal::from_integer(3)).unwrap(),
        ];
        let alphas: Vec<DigitSeq> = qs.iter().map(|c| c.alpha().unwrap()).collect();
        for w in alphas.windows(2) {
            assert_eq!(lex_compare(&w[0], &w[1]), Ordering::Less);
        }
    }

    #[test]
    fn alpha_is_admissible_whenever_decided() {
        for (m_big, num, den) in [(2u32, 5i64, 2i64), (3, 7, 2), (1, 2, 1), (4, 9, 2)] {
            let ctx = BaseContext::new(
                Alphabet::new(m_big),
                AlgebraicReal::from_rational(&rat(num, den)),
            )
            .unwrap();
            match quasi_greedy_alpha(&ctx, 48) {
                Ok(alpha) => assert!(is_admissible_alpha(&alpha), "M={m_big} q={num}/{den}"),
                Err(ExpansionError::HorizonExceeded { .. }) => {}
                Err(e) => panic!("unexpected error {e}"),
            }
        }
    }

    #[test]
    fn alpha_horizon_reports_prefix() {
        // q = 9/4 with M = 2 does not repeat quickly
        let ctx = BaseContext::new(
            Alphabet::new(2),
            AlgebraicReal::from_rational(&rat(9, 4)),
        )
        .unwrap();
        match quasi_greedy_alpha(&ctx, 8) {
            Err(ExpansionError::HorizonExceeded { horizon, prefix }) => {
                assert_eq!(horizon, 8);
                assert_eq!(prefix.len(), 8);
                assert_eq!(prefix[0], 2);
            }
            other => panic!("expected horizon error, got {other:?}"),
        }
    }

    proptest! {
        #[test]
        fn canonicalization_is_idempotent(
            pre in proptest::collection::vec(0u32..5, 0..6),
            per in proptest::collection::vec(0u32..5, 1..5),
        ) {
            let s = DigitSeq::new(pre, per);
            let t = DigitSeq::new(s.preperiod().to_vec(), s.period().to_vec());
            prop_assert_eq!(&s, &t);
            // display/parse round trip
            let u = DigitSeq::parse(&s.to_string()).unwrap();
            prop_assert_eq!(&s, &u);
        }

        #[test]
        fn shift_matches_digits(
            pre in proptest::collection::vec(0u32..4, 0..5),
            per in proptest::collection::vec(0u32..4, 1..4),
            n in 0usize..12,
        ) {
            let s = DigitSeq::new(pre, per);
            let t = s.shift(n);
            for i in 0..10 {
                prop_assert_eq!(t.digit(i), s.digit(n + i));
            }
        }

        #[test]
        fn reflection_round_trip(
            pre in proptest::collection::vec(0u32..3, 0..5),
            per in proptest::collection::vec(0u32..3, 1..4),
        ) {
            let a = Alphabet::new(2);
            let s = DigitSeq::new(pre, per);
            prop_assert_eq!(s.reflect(a).unwrap().reflect(a).unwrap(), s);
        }
    }
}
