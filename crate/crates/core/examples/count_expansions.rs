//! Certified counting of q-expansions: the points with exactly k expansions
//! at M = 2, q = 1+√2, and the certificate for one of the runs.
//!
//! Run with: cargo run --example count_expansions

use multibase::counting::{construct_xk, count_expansions};

fn main() {
    println!("x_k = (1(00)^(k-1) 1^inf)_q at M = 2, q = 1+sqrt(2):");
    for k in 1..=6 {
        let (x, ctx) = construct_xk(k);
        let result = count_expansions(&x, &ctx, 128, 64).expect("inside I_q");
        println!(
            "  k = {k}: x = {}  ->  {:?}({})  depth used {}",
            x.decimal_string(8),
            result.kind,
            result.count,
            result.depth_used,
        );
        assert_eq!(result.count, k);
    }

    // the machine-readable certificate for k = 3
    let (x, ctx) = construct_xk(3);
    let result = count_expansions(&x, &ctx, 128, 64).unwrap();
    println!("\ncertificate for k = 3:");
    println!("{}", serde_json::to_string_pretty(&result.certificate).unwrap());
}
