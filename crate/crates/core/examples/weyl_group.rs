//! Enumerates a Weyl group: length distribution, the longest element and a
//! few Bruhat covers.
//!
//! Run with `cargo run --example weyl_group`.

use principal_git::{RootSystem, WeylGroup, DEFAULT_WEYL_GUARD};

fn main() -> principal_git::Result<()> {
    let rs = RootSystem::new("B3".parse()?)?;
    let w = WeylGroup::enumerate(&rs, DEFAULT_WEYL_GUARD)?;
    println!("|W(B3)| = {}", w.order());
    println!("elements per length: {:?}", w.length_counts());

    let w0 = w.longest();
    println!("w0 = {} (length {})", w.word_string(w0), w.length(w0));

    let x = w.parse_word("s1.s2.s3")?;
    let covered: Vec<String> = w
        .covers(&rs, x)
        .into_iter()
        .map(|u| w.word_string(u))
        .collect();
    println!("s1.s2.s3 covers {covered:?}");
    println!("inversions: {:?}", w.inversion_set(&rs, x));
    Ok(())
}
