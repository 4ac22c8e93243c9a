//! Torus stable rank of the W-tensor e112 + e121 + e211 and of the W-form
//! x1^2 x2, with integer one-parameter-subgroup witnesses.
//!
//! cargo run --example w_tensor

use stablerank::tensor::{
    combine_one_ps, symm_torus_rank, torus_rank, torus_valuation, AlphaWeights, SymmetricSupport,
    TensorSupport, WeightAssignment,
};

fn main() -> stablerank::Result<()> {
    let w = TensorSupport::w_tensor();
    let alpha = AlphaWeights::ones(w.order());
    let rank = torus_rank(&w, &alpha)?;
    println!("W-tensor support: {:?}", w.tuples());
    println!("torus rank: {}", rank.value);

    if let Some(flat) = &rank.witness {
        let lambda = WeightAssignment::from_flat(flat, w.order(), w.dim())?;
        println!("witness weights per factor: {:?}", lambda.per_factor());
        println!(
            "valuation {} / weighted det {} = {}",
            torus_valuation(&w, &lambda)?,
            lambda.weighted_det_valuation(&alpha),
            rank.value
        );
        println!("combined symmetric weight: {:?}", combine_one_ps(&lambda));
    }

    let form = SymmetricSupport::new(3, 2, [vec![2, 1]])?;
    let srank = symm_torus_rank(&form)?;
    println!("W-form x1^2 x2: symmetric torus rank {}, witness {:?}", srank.value, srank.witness);
    Ok(())
}
