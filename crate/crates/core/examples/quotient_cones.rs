//! Nef and effective cones of the GIT quotient attached to each chamber.
//!
//! Types where some ample bundle is not movable are refused.
//!
//! Run with `cargo run --example quotient_cones`.

use principal_git::chambers::{
    enumerate_git_classes, quotient_cone_report, DEFAULT_CHAMBER_RANK_GUARD,
};
use principal_git::FlagVariety;

fn main() -> principal_git::Result<()> {
    let b3 = FlagVariety::parse("B3")?;
    let e = enumerate_git_classes(&b3, DEFAULT_CHAMBER_RANK_GUARD)?;
    for chamber in e.chambers().take(3) {
        let r = quotient_cone_report(&b3, chamber)?;
        let nef: Vec<&Vec<i64>> = r.nef.iter().map(|c| &c.coeffs).collect();
        println!("B3 {}: nef facets {nef:?}", r.signature);
    }

    let a3 = FlagVariety::parse("A3")?;
    let e = enumerate_git_classes(&a3, DEFAULT_CHAMBER_RANK_GUARD)?;
    let first = e.chambers().next().expect("A3 has chambers");
    match quotient_cone_report(&a3, first) {
        Ok(_) => println!("A3 accepted"),
        Err(err) => println!("A3 refused: {err}"),
    }
    Ok(())
}
