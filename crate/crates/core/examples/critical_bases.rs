//! The three critical bases for each alphabet: the generalized golden ratio
//! p1, the window endpoint p2, and the smallest two-expansion base q2.
//!
//! Run with: cargo run --example critical_bases

use multibase::bases::{p1, p2, q2};

fn main() {
    println!("{:>3} {:>14} {:>14} {:>14}  defining polynomial of q2", "M", "p1", "p2", "q2");
    for m_big in 1..=7u32 {
        let (a, b, c) = (p1(m_big), p2(m_big), q2(m_big));
        println!(
            "{:>3} {:>14} {:>14} {:>14}  {}",
            m_big,
            a.decimal_string(8),
            b.decimal_string(8),
            c.decimal_string(8),
            c.poly().to_descending_string(),
        );
    }

    // all comparisons are exact: p1 < q2 <= p2 in every row
    for m_big in 1..=7u32 {
        assert!(p1(m_big) < q2(m_big));
        assert!(q2(m_big) <= p2(m_big));
    }
    println!("\nexact ordering p1 < q2 <= p2 verified for M = 1..7");
}
