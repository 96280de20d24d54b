//! The quasi-greedy expansion of 1, computed digit by digit with exact
//! orbit arithmetic, and its admissibility property.
//!
//! Run with: cargo run --example quasi_greedy_alpha

use multibase::algebraic::AlgebraicReal;
use multibase::bases::{interior_preset, p1, p2, q2};
use multibase::expansions::{is_admissible_alpha, quasi_greedy_alpha, Alphabet, BaseContext};
use num_rational::BigRational;

fn main() {
    let cases: Vec<(u32, &str, AlgebraicReal)> = vec![
        (2, "p1(2) = 2", p1(2)),
        (2, "interior preset", interior_preset(2).unwrap()),
        (2, "q2(2) = 1+sqrt(2)", q2(2)),
        (2, "M+1 = 3", AlgebraicReal::from_integer(3)),
        (3, "p2(3)", p2(3)),
        (4, "q2(4)", q2(4)),
        (1, "p2(1)", p2(1)),
    ];
    for (m_big, label, base) in cases {
        let ctx = BaseContext::new(Alphabet::new(m_big), base).expect("valid base");
        let alpha = ctx.alpha().expect("eventually periodic here");
        println!(
            "M={m_big}, q = {:<18} = {:<11} alpha = {:<10} admissible: {}",
            label,
            ctx.base().decimal_string(8),
            alpha.to_string(),
            is_admissible_alpha(&alpha),
        );
    }

    // a base whose orbit never repeats: the prefix is reported instead
    let ctx = BaseContext::new(
        Alphabet::new(2),
        AlgebraicReal::from_rational(&BigRational::new(9.into(), 4.into())),
    )
    .unwrap();
    match quasi_greedy_alpha(&ctx, 24) {
        Err(e) => println!("\nq = 9/4: {e}"),
        Ok(seq) => println!("\nq = 9/4: {seq}"),
    }
}
