//! The torus rank of an ideal depends on the chosen coordinates: (x + y)^2
//! has rank 1 in the standard basis and 1/2 after u = x + y, v = x - y.
//!
//! cargo run --example coordinate_change

use stablerank::ideal::{apply_linear_change, t_stable_rank, LinearChange, PolyIdeal, SparsePolynomial};
use stablerank::rat;

fn main() -> stablerank::Result<()> {
    let x = SparsePolynomial::variable(2, 0);
    let y = SparsePolynomial::variable(2, 1);
    let f = (&x + &y).pow(2);
    let ideal = PolyIdeal::principal(f.clone())?;
    println!("f = {f}");
    println!("rank in standard coordinates: {}", t_stable_rank(&ideal)?.value);

    let change = LinearChange::new(vec![vec![rat(1, 2), rat(1, 2)], vec![rat(1, 2), rat(-1, 2)]])?;
    let g = apply_linear_change(&f, &change)?;
    println!("after the change (det {}): f = {g}", change.determinant());
    println!("rank after the change: {}", t_stable_rank(&ideal.apply_change(&change)?)?.value);

    let back = apply_linear_change(&g, &change.inverse())?;
    println!("inverse change restores f: {}", back == f);

    let cusp = PolyIdeal::principal(&x + &y.pow(2))?;
    println!("rank of (x + y^2): {}", t_stable_rank(&cusp)?.value);
    Ok(())
}
