//! Torus semistability with explicit destabilizing one-parameter subgroups,
//! and the equivalence with rank = n.
//!
//! cargo run --example semistability

use stablerank::tensor::{
    is_torus_semistable, symm_torus_destabilizer, torus_destabilizer, torus_rank, AlphaWeights,
    SymmetricSupport, TensorSupport,
};

fn main() -> stablerank::Result<()> {
    for (name, v) in [
        ("W-tensor", TensorSupport::w_tensor()),
        ("diagonal d=3 n=2", TensorSupport::diagonal(3, 2)?),
        ("single entry e11", TensorSupport::new(2, 2, [vec![1, 1]])?),
    ] {
        let rank = torus_rank(&v, &AlphaWeights::ones(v.order()))?.value;
        println!("{name}: semistable {}, rank {rank} (n = {})", is_torus_semistable(&v), v.dim());
        if let Some(lambda) = torus_destabilizer(&v) {
            println!("  traceless destabilizer: {lambda:?}");
        }
    }

    let form = SymmetricSupport::new(3, 2, [vec![2, 1]])?;
    println!("x1^2 x2 destabilizer: {:?}", symm_torus_destabilizer(&form));
    let fermat = SymmetricSupport::fermat(3, 3)?;
    println!("x1^3 + x2^3 + x3^3 destabilizer: {:?}", symm_torus_destabilizer(&fermat));
    Ok(())
}
