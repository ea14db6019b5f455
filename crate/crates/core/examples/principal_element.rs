//! Restriction of weights to the principal SL2: the values on fundamental
//! weights and the per-factor minimum.
//!
//! Run with `cargo run --example principal_element`.

use principal_git::{PrincipalElement, RootSystem, Weight};

fn main() -> principal_git::Result<()> {
    for t in ["A3", "C2", "F4", "A3xG2"] {
        let rs = RootSystem::new(t.parse()?)?;
        let pe = PrincipalElement::new(&rs)?;
        let minima: Vec<String> = pe
            .minima()
            .iter()
            .map(|m| format!("{} -> {}", m.component, m.min_value))
            .collect();
        println!(
            "{t}: iota = {:?}, minima [{}]",
            pe.iota(),
            minima.join(", ")
        );
    }

    let rs = RootSystem::new("C2".parse()?)?;
    let pe = PrincipalElement::new(&rs)?;
    // rho(h0) is the sum of the heights of the positive coroots.
    println!("C2: rho(h0) = {}", pe.restrict(&rs.rho())?);
    println!("C2: (3,1)(h0) = {}", pe.restrict(&Weight(vec![3, 1]))?);
    Ok(())
}
