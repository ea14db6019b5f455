//! Splits the Weyl group by the sign of `(w lambda)(h0)` and lists the
//! unstable strata of an ample bundle.
//!
//! Run with `cargo run --example kirwan_strata -- C2 3,1`.

use principal_git::git::{semistable_nonempty, strata};
use principal_git::{FlagVariety, Weight};

fn main() -> principal_git::Result<()> {
    let mut args = std::env::args().skip(1);
    let ty = args.next().unwrap_or_else(|| "C2".into());
    let lambda: Weight = args.next().unwrap_or_else(|| "3,1".into()).parse()?;

    let fv = FlagVariety::parse(&ty)?;
    let r = strata(&fv, &lambda)?;
    println!("{ty}, lambda = {lambda}, dim X = {}", r.dim_x);
    for s in &r.strata {
        println!("  {:<12} len {} dim {}", s.word, s.length, s.dim);
    }
    println!(
        "unstable locus: dim {}, codim {:?}",
        r.dim_unstable, r.codim_unstable
    );
    println!(
        "semistable locus nonempty: {}",
        semistable_nonempty(&fv, &lambda)?
    );
    Ok(())
}
