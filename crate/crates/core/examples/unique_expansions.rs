//! The lexicographic uniqueness test and the explicit catalog of unique
//! expansions for bases between p1 and p2.
//!
//! Run with: cargo run --example unique_expansions

use multibase::bases::q2;
use multibase::expansions::{
    is_unique_expansion, unique_set_catalog, Alphabet, BaseContext, DigitSeq,
};

fn main() {
    // M = 2 at q = 1+√2 (which equals p2 for this alphabet)
    let ctx = BaseContext::new(Alphabet::new(2), q2(2)).expect("valid base");
    println!("alpha(q) = {}", ctx.alpha().unwrap());

    for text in ["(0)", "001(1)", "(2)", "(20)", "(10)", "21(1)"] {
        let seq = DigitSeq::parse(text).unwrap();
        println!(
            "{:>8}  unique: {}",
            seq.to_string(),
            is_unique_expansion(&seq, &ctx).unwrap()
        );
    }

    // the whole unique-expansion set up to preperiod length 2
    let catalog = unique_set_catalog(&ctx, 2).unwrap();
    println!("\ncatalog with preperiod <= 2 ({} sequences):", catalog.len());
    for seq in &catalog {
        println!("   {seq}");
    }

    // odd alphabet: two periodic tails alternate
    let ctx3 = BaseContext::new(Alphabet::new(3), multibase::bases::p2(3)).unwrap();
    let catalog3 = unique_set_catalog(&ctx3, 1).unwrap();
    println!("\nM = 3 at p2, preperiod <= 1 ({} sequences):", catalog3.len());
    for seq in &catalog3 {
        println!("   {seq}");
    }
}
