//! Every base in (p1, p2] at which some point has exactly two expansions,
//! found by a full parameter sweep with exact deduplication, together with
//! the two witnessing digit sequences.
//!
//! Run with: cargo run --example enumerate_b2 [M]

use multibase::bases::{enumerate_b2_window, q2};

fn main() {
    let m_big: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    println!("B2({m_big}) ∩ (p1, p2]:");
    let witnesses = enumerate_b2_window(m_big);
    for w in &witnesses {
        println!(
            "  q = {:<14} {:<16} ({})_q = ({})_q",
            w.base.decimal_string(10),
            format!("[{}]", w.family),
            w.left_seq,
            w.right_seq,
        );
    }
    let smallest = &witnesses.first().expect("window set is never empty").base;
    assert_eq!(smallest, &q2(m_big));
    println!("\nsmallest = q2({m_big}) = {} exactly", smallest.decimal_string(10));
}
