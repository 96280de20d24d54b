//! Exact real algebraic numbers: construction from a polynomial and a
//! window, certified refinement, and field arithmetic in Q(q).
//!
//! Run with: cargo run --example algebraic_numbers

use multibase::algebraic::{isolate_roots, make_algebraic, NumberField};
use multibase::poly::IntPoly;
use num_rational::BigRational;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn main() {
    // q = 1+√2 as the root of x² - 2x - 1 in [2, 3]
    let silver = make_algebraic(&IntPoly::from_descending(&[1, -2, -1]), (&rat(2), &rat(3)))
        .expect("unique root in the window");
    let (lo, hi) = silver.refine(12);
    println!("q  = {}", silver.decimal_string(12));
    println!("   isolated to width {} (exact rationals)", hi - lo);

    // every real root of a polynomial, in order
    let roots = isolate_roots(
        &IntPoly::from_descending(&[1, 0, -2, -1, -1]),
        (&rat(-3), &rat(3)),
    );
    println!("\nreal roots of x^4 - 2x^2 - x - 1:");
    for r in &roots {
        println!("   {}", r.decimal_string(10));
    }

    // arithmetic in Q(q): q² = 2q + 1, and 1/q = q - 2
    let field = NumberField::new(silver).expect("irreducible minimal polynomial");
    let q = field.generator_element();
    let q_squared = q.mul(&q);
    println!("\nin Q(q) with q = 1+√2:");
    println!("   q^2 has coefficients [{}]  (q^2 = 2q + 1)", q_squared.coeffs_string());
    let inverse = q.inv().expect("q is nonzero");
    println!("   1/q has coefficients [{}]  (1/q = q - 2)", inverse.coeffs_string());
    assert!(q.mul(&inverse).is_one());

    // signs are decided exactly, never numerically guessed
    let e = q.sub(&field.from_integer(2));
    println!("   sign(q - 2) = {}", e.sign());
    let zero = q_squared.sub(&q.mul_rational(&rat(2))).sub(&field.one());
    println!("   sign(q^2 - 2q - 1) = {}", zero.sign());
}
