//! Principal graded characters, SL2 decompositions and invariant dimensions
//! along a ray.
//!
//! Run with `cargo run --example invariants`.

use principal_git::multiplicity::{
    principal_character, ray_multiplicities, saturation_search, sl2_decompose,
};
use principal_git::{PrincipalElement, RootSystem, Weight};

fn main() -> principal_git::Result<()> {
    let rs = RootSystem::new("A2".parse()?)?;
    let pe = PrincipalElement::new(&rs)?;
    let lambda = Weight(vec![2, 2]);
    let p = principal_character(&rs, &pe, &lambda)?;
    println!("A2 {lambda}: dim {}, character {}", p.dimension(), p.poly());
    let d = sl2_decompose(&p)?;
    let parts: Vec<String> = d.iter().map(|(k, m)| format!("V{k}^{m}")).collect();
    println!("  as SL2 module: {}", parts.join(" + "));

    let rs = RootSystem::new("C2".parse()?)?;
    let pe = PrincipalElement::new(&rs)?;
    let ray = Weight(vec![1, 0]);
    for (k, m) in ray_multiplicities(&rs, &pe, &ray, 8)? {
        println!("C2 {}: invariants {m}", ray.scaled(k as i64));
    }
    println!(
        "first nonzero: {:?}",
        saturation_search(&rs, &pe, &ray, 8)?.k()
    );
    Ok(())
}
