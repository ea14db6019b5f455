//! Enumerates the GIT classes of ample bundles: chambers, walls and a
//! representative of each.
//!
//! Run with `cargo run --example git_chambers -- B3`.

use principal_git::chambers::{enumerate_git_classes, DEFAULT_CHAMBER_RANK_GUARD};
use principal_git::git::git_signature;
use principal_git::FlagVariety;

fn main() -> principal_git::Result<()> {
    let ty = std::env::args().nth(1).unwrap_or_else(|| "C2".into());
    let fv = FlagVariety::parse(&ty)?;
    let e = enumerate_git_classes(&fv, DEFAULT_CHAMBER_RANK_GUARD)?;
    println!(
        "{ty}: {} hyperplanes, {} chambers, {} walls",
        fv.hyperplanes().len(),
        e.num_chambers,
        e.num_wall_faces
    );
    for c in &e.classes {
        let rep: Vec<String> = c
            .representative
            .primitive_integer()
            .iter()
            .map(|x| x.to_string())
            .collect();
        println!(
            "  {:?} {} rep ({})",
            c.kind,
            c.signature_string(),
            rep.join(",")
        );
    }

    // Integer points in one class share its signature.
    let rho = fv.root_system().rho();
    let class = git_signature(&fv, &rho)?;
    println!(
        "rho = {rho} lies in {} ({:?})",
        class.signature_string(),
        class.kind
    );
    Ok(())
}
