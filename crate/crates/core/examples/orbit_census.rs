//! Counts of one- and two-dimensional principal SL2 orbits on the flag
//! variety, checked against the enumerated Weyl group.
//!
//! Run with `cargo run --example orbit_census`.

use principal_git::git::{orbit_census, OrbitCensus};
use principal_git::FlagVariety;

fn main() -> principal_git::Result<()> {
    for t in ["A2", "C2", "G2", "B3", "A2xA2"] {
        let fv = FlagVariety::parse(t)?;
        let c = orbit_census(&fv)?;
        println!(
            "{t}: dim X {}, curves {}, surfaces {}",
            c.dim_x, c.curves, c.surfaces
        );
    }
    // Large types go through the order formula without enumerating W.
    let e8 = OrbitCensus::for_type(&"E8".parse()?)?;
    println!("E8: surfaces {}", e8.surfaces);
    Ok(())
}
