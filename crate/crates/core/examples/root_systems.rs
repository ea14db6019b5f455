//! Cartan matrices, positive roots and Weyl dimensions for a few types.
//!
//! Run with `cargo run --example root_systems`.

use principal_git::{CartanType, RootSystem, Weight};

fn main() -> principal_git::Result<()> {
    for t in ["A3", "C2", "G2", "B3xA1"] {
        let ct: CartanType = t.parse()?;
        let rs = RootSystem::new(ct)?;
        println!(
            "{t}: rank {}, {} positive roots, |W| = {}",
            rs.rank(),
            rs.num_positive_roots(),
            rs.cartan_type().weyl_order()
        );
        for row in rs.cartan() {
            println!("  {row:?}");
        }
        println!("  rho = {}", rs.rho());
    }

    // The smallest nontrivial G2 module.
    let g2 = RootSystem::new("G2".parse()?)?;
    println!(
        "dim V(1,0) for G2 = {}",
        g2.weyl_dimension(&Weight(vec![1, 0]))?
    );
    Ok(())
}
