//! Exact arithmetic for expansions of real numbers in non-integer bases.
//!
//! Fix an alphabet {0,…,M} and a base 1 < q ≤ M+1. A sequence (dᵢ) of digits
//! is a *q-expansion* of x when x = Σ dᵢ q⁻ⁱ. This crate computes with such
//! expansions exactly — no floating point anywhere — and certifies the
//! answers it gives:
//!
//! * [`algebraic`] — real algebraic numbers as integer polynomials with
//!   isolating intervals, Sturm-certified root isolation, and number-field
//!   arithmetic Q(q) with exact sign determination.
//! * [`expansions`] — eventually periodic digit sequences, their exact values
//!   in Q(q), the quasi-greedy expansion α(q) of 1, the two-sided
//!   lexicographic test for *unique* expansions, and the explicit catalog of
//!   unique expansions for bases between the generalized golden ratio p₁ and
//!   the second critical base p₂.
//! * [`bases`] — p₁, p₂ and the smallest two-expansion base q₂ for every
//!   alphabet, the parametric families whose roots populate
//!   B₂(M) ∩ (p₁, p₂], and a fully certified sweep enumerating that set with
//!   two-expansion witnesses.
//! * [`counting`] — the digit-branching engine: switch region, allowed
//!   digits, uniqueness certification, and expansion counting with
//!   machine-readable certificates. Counts are reported as `Exactly(k)` only
//!   when every ray of the tree is certified; otherwise they degrade to
//!   `AtLeast`/`Undecided`.
//! * [`cli`] — the `multibase` binary: every operation as a subcommand with
//!   JSON output, plus named verification suites.
//!
//! # Example
//!
//! ```
//! use multibase::bases::q2;
//! use multibase::counting::{construct_xk, count_expansions, CountKind};
//!
//! // the smallest base admitting a point with exactly two expansions,
//! // alphabet {0, 1, 2}: q2(2) = 1 + √2
//! let q = q2(2);
//! assert_eq!(q.poly().to_descending_string(), "1,-2,-1");
//!
//! // the point with exactly three expansions there, certified
//! let (x, ctx) = construct_xk(3);
//! let result = count_expansions(&x, &ctx, 128, 64).unwrap();
//! assert_eq!(result.kind, CountKind::Exactly);
//! assert_eq!(result.count, 3);
//! ```
//!
//! The `examples/` directory walks through each capability; the
//! `acceptance` integration test runs the full verification battery.

pub mod algebraic;
pub mod bases;
pub mod cli;
pub mod counting;
pub mod expansions;
pub mod poly;

pub use algebraic::{AlgebraicReal, FieldElement, NumberField};
pub use bases::{B2Witness, FamilyId, FamilyVariant};
pub use counting::{CountKind, CountResult};
pub use expansions::{Alphabet, BaseContext, DigitSeq};
