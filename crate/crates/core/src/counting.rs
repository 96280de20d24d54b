//! Certified counting of q-expansions by exact digit branching.
//!
//! A point x ∈ I_q = [0, M/(q−1)] steps to q·x − d for every digit d with
//! q·x − d ∈ I_q. Points with several allowed digits lie in the switch
//! region; points whose whole orbit stays single-digit have unique
//! expansions. [`count_expansions`] explores the resulting tree with exact
//! field arithmetic, memoizes fully certified subtrees on exact orbit states,
//! resolves non-branching rays by cycle detection, and degrades honestly to
//! `AtLeast`/`Undecided` when depth or branch caps truncate the search. The
//! whole run is recorded in a machine-readable [`Certificate`].

use crate::algebraic::{AlgebraicError, FieldElement, make_algebraic};
use crate::expansions::{
    evaluate, format_word, Alphabet, BaseContext, DigitSeq, ExpansionError,
};
use crate::poly::IntPoly;
use num_rational::BigRational;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Default per-ray depth cap.
pub const DEFAULT_DEPTH_CAP: usize = 128;
/// Default cap on branch events across the whole tree.
pub const DEFAULT_BRANCH_CAP: usize = 64;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("point lies outside the expansion interval [0, M/(q-1)]")]
    OutOfInterval,
    #[error(transparent)]
    Algebraic(#[from] AlgebraicError),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
}

// ---------------------------------------------------------------------------
// Switch region and allowed digits
// ---------------------------------------------------------------------------

/// The overlaps f_{k−1}(I_q) ∩ f_k(I_q) = [k/q, (k−1)/q + M/(q(q−1))] for
/// k = 1..M. A point has more than one allowed digit exactly when it lies in
/// one of them.
pub struct SwitchRegion {
    overlaps: Vec<(FieldElement, FieldElement)>,
}

impl SwitchRegion {
    pub fn new(ctx: &BaseContext) -> Result<Self, CountError> {
        let q_inv = ctx.q_element().inv()?;
        let m_big = ctx.alphabet().max_digit();
        // M/(q(q-1)) = upper / q
        let width = ctx.interval_upper().mul(&q_inv);
        let mut overlaps = Vec::new();
        for k in 1..=m_big {
            let lo = q_inv.mul_rational(&BigRational::from_integer(k.into()));
            let hi = q_inv
                .mul_rational(&BigRational::from_integer((k - 1).into()))
                .add(&width);
            overlaps.push((lo, hi));
        }
        Ok(SwitchRegion { overlaps })
    }

    pub fn overlaps(&self) -> &[(FieldElement, FieldElement)] {
        &self.overlaps
    }

    /// Exact membership in the union of overlaps (closed intervals).
    pub fn contains(&self, x: &FieldElement) -> bool {
        self.overlaps
            .iter()
            .any(|(lo, hi)| x.sub(lo).sign() >= 0 && hi.sub(x).sign() >= 0)
    }
}

/// The digits d with q·x − d ∈ I_q, ascending. For bases beyond the
/// generalized golden ratio the result has at most two members.
pub fn allowed_digits(x: &FieldElement, ctx: &BaseContext) -> Result<Vec<u32>, CountError> {
    if !ctx.contains(x) {
        return Err(CountError::OutOfInterval);
    }
    let qx = ctx.q_element().mul(x);
    let upper = ctx.interval_upper();
    let mut out = Vec::new();
    for d in 0..=ctx.alphabet().max_digit() {
        let shifted = qx.sub(&x.field().from_integer(d as i64));
        if shifted.sign() >= 0 && upper.sub(&shifted).sign() >= 0 {
            out.push(d);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Uniqueness certification for a single point
// ---------------------------------------------------------------------------

/// Outcome of [`certify_unique`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniqueOutcome {
    /// Every orbit state admitted a single digit and the orbit closed into a
    /// cycle; the eventually periodic expansion is returned.
    Unique(DigitSeq),
    /// Some orbit state admitted two or more digits.
    NotUnique,
    /// No branch and no cycle within the depth cap.
    Unknown,
}

/// Walks the orbit of x as long as exactly one digit is allowed, detecting
/// exact state repetition.
pub fn certify_unique(
    x: &FieldElement,
    ctx: &BaseContext,
    depth_cap: usize,
) -> Result<UniqueOutcome, CountError> {
    let mut state = x.clone();
    let mut digits: Vec<u32> = Vec::new();
    let mut seen: BTreeMap<Vec<BigRational>, usize> = BTreeMap::new();
    for step in 0..depth_cap.max(1) {
        if let Some(&first) = seen.get(state.coeffs()) {
            let pre = digits[..first].to_vec();
            let per = digits[first..].to_vec();
            return Ok(UniqueOutcome::Unique(DigitSeq::new(pre, per)));
        }
        seen.insert(state.coeffs().to_vec(), step);
        let allowed = allowed_digits(&state, ctx)?;
        match allowed.len() {
            0 => unreachable!("interval covering guarantees an allowed digit"),
            1 => {
                let d = allowed[0];
                digits.push(d);
                state = ctx
                    .q_element()
                    .mul(&state)
                    .sub(&state.field().from_integer(d as i64));
            }
            _ => return Ok(UniqueOutcome::NotUnique),
        }
    }
    Ok(UniqueOutcome::Unknown)
}

// ---------------------------------------------------------------------------
// Tree search
// ---------------------------------------------------------------------------

/// How much the search could certify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountKind {
    /// The whole tree was resolved: the point has exactly `count` expansions.
    Exactly,
    /// `count` distinct expansion prefixes were exhibited before a cap cut
    /// the search.
    AtLeast,
    /// A single ray could not be certified within the depth cap.
    Undecided,
}

#[derive(Clone, Debug, Serialize)]
pub struct BaseDescriptor {
    pub poly: String,
    pub interval: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResultSummary {
    pub kind: CountKind,
    pub count: usize,
    pub depth: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchRecord {
    pub prefix: String,
    pub digit_options: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LeafRecord {
    pub prefix: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail: Option<String>,
    pub certificate: String,
}

/// Machine-readable account of a counting run.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub input: String,
    pub base: BaseDescriptor,
    pub result: ResultSummary,
    pub branches: Vec<BranchRecord>,
    pub leaves: Vec<LeafRecord>,
}

/// Result of [`count_expansions`].
#[derive(Clone, Debug)]
pub struct CountResult {
    pub kind: CountKind,
    pub count: usize,
    pub depth_used: usize,
    pub certificate: Certificate,
}

struct TreeSearch<'a> {
    ctx: &'a BaseContext,
    depth_cap: usize,
    branch_cap: usize,
    branches_used: usize,
    truncated: bool,
    branch_records: Vec<BranchRecord>,
    leaves: Vec<LeafRecord>,
    memo: BTreeMap<Vec<BigRational>, usize>,
    max_depth: usize,
}

impl TreeSearch<'_> {
    /// Explores the subtree at `state`; returns the number of distinct rays
    /// exhibited and whether all of them were certified.
    fn explore(&mut self, state: FieldElement, prefix: Vec<u32>) -> Result<(usize, bool), CountError> {
        let mut state = state;
        let run_prefix = prefix.clone();
        let mut run_digits: Vec<u32> = Vec::new();
        let mut run_seen: BTreeMap<Vec<BigRational>, usize> = BTreeMap::new();
        loop {
            let depth = run_prefix.len() + run_digits.len();
            self.max_depth = self.max_depth.max(depth);
            if let Some(&count) = self.memo.get(state.coeffs()) {
                let mut p = run_prefix.clone();
                p.extend(&run_digits);
                self.leaves.push(LeafRecord {
                    prefix: format_word(&p),
                    tail: None,
                    certificate: format!("memoized-count:{count}"),
                });
                return Ok((count, true));
            }
            if let Some(&first) = run_seen.get(state.coeffs()) {
                let tail = DigitSeq::new(
                    run_digits[..first].to_vec(),
                    run_digits[first..].to_vec(),
                );
                self.leaves.push(LeafRecord {
                    prefix: format_word(&run_prefix),
                    tail: Some(tail.to_string()),
                    certificate: "unique-cycle".to_string(),
                });
                return Ok((1, true));
            }
            if depth >= self.depth_cap {
                let mut p = run_prefix.clone();
                p.extend(&run_digits);
                self.leaves.push(LeafRecord {
                    prefix: format_word(&p),
                    tail: None,
                    certificate: "depth-capped".to_string(),
                });
                self.truncated = true;
                return Ok((1, false));
            }
            let allowed = allowed_digits(&state, self.ctx)?;
            match allowed.len() {
                0 => unreachable!("interval covering guarantees an allowed digit"),
                1 => {
                    run_seen.insert(state.coeffs().to_vec(), run_digits.len());
                    let d = allowed[0];
                    run_digits.push(d);
                    state = self
                        .ctx
                        .q_element()
                        .mul(&state)
                        .sub(&state.field().from_integer(d as i64));
                }
                _ => {
                    let mut p = run_prefix.clone();
                    p.extend(&run_digits);
                    if self.branches_used >= self.branch_cap {
                        self.leaves.push(LeafRecord {
                            prefix: format_word(&p),
                            tail: None,
                            certificate: "branch-capped".to_string(),
                        });
                        self.truncated = true;
                        return Ok((1, false));
                    }
                    self.branches_used += 1;
                    self.branch_records.push(BranchRecord {
                        prefix: format_word(&p),
                        digit_options: allowed.clone(),
                    });
                    let mut total = 0;
                    let mut all_certified = true;
                    for d in allowed {
                        let child = self
                            .ctx
                            .q_element()
                            .mul(&state)
                            .sub(&state.field().from_integer(d as i64));
                        let mut child_prefix = p.clone();
                        child_prefix.push(d);
                        let (c, certified) = self.explore(child, child_prefix)?;
                        total += c;
                        all_certified &= certified;
                    }
                    if all_certified {
                        self.memo.insert(state.coeffs().to_vec(), total);
                    }
                    return Ok((total, all_certified));
                }
            }
        }
    }
}

/// Counts the q-expansions of x with exact arithmetic. `Exactly(k)` is
/// returned only when every ray of the expansion tree ends in a certified
/// single-digit cycle; otherwise the result degrades to `AtLeast` (several
/// prefixes exhibited, search truncated) or `Undecided` (a lone uncertified
/// ray).
pub fn count_expansions(
    x: &FieldElement,
    ctx: &BaseContext,
    depth_cap: usize,
    branch_cap: usize,
) -> Result<CountResult, CountError> {
    if !ctx.contains(x) {
        return Err(CountError::OutOfInterval);
    }
    let mut search = TreeSearch {
        ctx,
        depth_cap,
        branch_cap,
        branches_used: 0,
        truncated: false,
        branch_records: Vec::new(),
        leaves: Vec::new(),
        memo: BTreeMap::new(),
        max_depth: 0,
    };
    let (count, certified) = search.explore(x.clone(), Vec::new())?;
    let kind = if certified {
        CountKind::Exactly
    } else if !search.branch_records.is_empty() {
        CountKind::AtLeast
    } else {
        CountKind::Undecided
    };
    let (lo, hi) = ctx.base().interval();
    let certificate = Certificate {
        input: x.coeffs_string(),
        base: BaseDescriptor {
            poly: ctx.base().poly().to_descending_string(),
            interval: format!("{lo}:{hi}"),
        },
        result: ResultSummary {
            kind,
            count,
            depth: search.max_depth,
        },
        branches: search.branch_records,
        leaves: search.leaves,
    };
    Ok(CountResult {
        kind,
        count,
        depth_used: search.max_depth,
        certificate,
    })
}

/// All digit words of the given length that start a valid expansion of x:
/// the truncation of the counting tree at that depth.
pub fn prefix_set(
    x: &FieldElement,
    ctx: &BaseContext,
    depth: usize,
) -> Result<BTreeSet<Vec<u32>>, CountError> {
    fn go(
        state: &FieldElement,
        ctx: &BaseContext,
        depth: usize,
        acc: &mut Vec<u32>,
        out: &mut BTreeSet<Vec<u32>>,
    ) -> Result<(), CountError> {
        if depth == 0 {
            out.insert(acc.clone());
            return Ok(());
        }
        for d in allowed_digits(state, ctx)? {
            let child = ctx
                .q_element()
                .mul(state)
                .sub(&state.field().from_integer(d as i64));
            acc.push(d);
            go(&child, ctx, depth - 1, acc, out)?;
            acc.pop();
        }
        Ok(())
    }
    if !ctx.contains(x) {
        return Err(CountError::OutOfInterval);
    }
    let mut out = BTreeSet::new();
    go(x, ctx, depth, &mut Vec::new(), &mut out)?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// The M = 2, q = 1+√2 constructions
// ---------------------------------------------------------------------------

/// The base context at M = 2, q = 1+√2 (the smallest two-expansion base for
/// this alphabet).
pub fn silver_context() -> BaseContext {
    let q = make_algebraic(
        &IntPoly::from_descending(&[1, -2, -1]),
        (
            &BigRational::from_integer(2.into()),
            &BigRational::from_integer(3.into()),
        ),
    )
    .expect("silver base isolates");
    BaseContext::new(Alphabet::new(2), q).expect("silver context")
}

/// x_k = (1(00)^{k−1}1^∞)_q at M = 2, q = 1+√2: the point with exactly k
/// expansions.
pub fn construct_xk(k: usize) -> (FieldElement, BaseContext) {
    assert!(k >= 1, "construct_xk needs k >= 1");
    let ctx = silver_context();
    let mut pre = vec![1u32];
    pre.extend(std::iter::repeat_n(0, 2 * (k - 1)));
    let seq = DigitSeq::new(pre, vec![1]);
    let x = evaluate(&seq, &ctx).expect("digits fit the alphabet");
    (x, ctx)
}

/// Expansions of 1 at M = 2, q = 1+√2: (20)^∞ together with (20)^j 21 0^∞
/// and (20)^j 1 2^∞ for j = 0..j_max. Every returned sequence is checked to
/// evaluate to exactly 1.
pub fn expansions_of_one_m2(j_max: usize) -> Vec<DigitSeq> {
    let ctx = silver_context();
    let mut out = vec![DigitSeq::new(vec![], vec![2, 0])];
    for j in 0..=j_max {
        let mut block: Vec<u32> = Vec::new();
        for _ in 0..j {
            block.extend([2, 0]);
        }
        let mut a = block.clone();
        a.extend([2, 1]);
        out.push(DigitSeq::new(a, vec![0]));
        let mut b = block;
        b.push(1);
        out.push(DigitSeq::new(b, vec![2]));
    }
    for seq in &out {
        let v = evaluate(seq, &ctx).expect("valid digits");
        assert!(v.is_one(), "{seq} does not evaluate to 1");
    }
    out
}
