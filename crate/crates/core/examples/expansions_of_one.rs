//! At M = 2, q = 1+√2 the point x = 1 has countably many expansions: the
//! periodic (20)^∞ plus two infinite families. The counter exhibits more and
//! more of them with growing depth but never certifies an exact count.
//!
//! Run with: cargo run --example expansions_of_one

use multibase::counting::{
    allowed_digits, count_expansions, expansions_of_one_m2, silver_context, SwitchRegion,
};
use multibase::expansions::evaluate;

fn main() {
    let ctx = silver_context();
    let one = ctx.field().one();

    println!("expansions of 1 (families up to j = 3):");
    for seq in expansions_of_one_m2(3) {
        let v = evaluate(&seq, &ctx).unwrap();
        assert!(v.is_one());
        println!("  ({})_q = 1", seq);
    }

    // 1 sits in the switch region, so its first digit already branches
    let region = SwitchRegion::new(&ctx).unwrap();
    println!("\n1 in switch region: {}", region.contains(&one));
    println!("allowed first digits: {:?}", allowed_digits(&one, &ctx).unwrap());

    for depth in [20, 40, 60] {
        let r = count_expansions(&one, &ctx, depth, 256).unwrap();
        println!(
            "depth {depth:>3}: {:?}(>= {}), {} branch events",
            r.kind,
            r.count,
            r.certificate.branches.len(),
        );
    }
}
