//! Which ample bundles have an unstable locus of codimension at least two.
//!
//! A3 is the interesting case: `(8,1,1)` is ample but its unstable locus
//! contains a divisor.
//!
//! Run with `cargo run --example movability`.

use principal_git::git::{all_ample_movable, criterion_pairs, is_movable};
use principal_git::{FlagVariety, Weight};

fn main() -> principal_git::Result<()> {
    for t in ["A2", "C2", "A3", "B3", "G2", "D4"] {
        let fv = FlagVariety::parse(t)?;
        let pairs: Vec<String> = criterion_pairs(&fv)
            .iter()
            .map(|(a, b)| format!("s{}s{}", a + 1, b + 1))
            .collect();
        println!(
            "{t}: every ample bundle movable = {}, pairs to watch {pairs:?}",
            all_ample_movable(&fv)
        );
    }

    let a3 = FlagVariety::parse("A3")?;
    for lambda in [Weight(vec![1, 1, 1]), Weight(vec![8, 1, 1])] {
        let m = is_movable(&a3, &lambda)?;
        println!(
            "A3 {lambda}: movable {}, codim {:?}, witness {:?}",
            m.movable, m.codim, m.witness
        );
    }
    Ok(())
}
