//! Log canonical thresholds of monomial ideals, the Newton-polyhedron
//! threshold and membership test, and the rank they coincide with.
//!
//! cargo run --example monomial_lct

use stablerank::ideal::{lct_monomial, newton_membership, newton_threshold, t_stable_rank, MonomialIdeal};
use stablerank::rat;

fn main() -> stablerank::Result<()> {
    let cyclic = MonomialIdeal::new(3, [vec![2, 1, 0], vec![0, 2, 1], vec![1, 0, 2]])?;
    println!("(x^2 y, y^2 z, z^2 x)");
    println!("  lct            = {}", lct_monomial(&cyclic)?);
    println!("  rank           = {}", t_stable_rank(&cyclic)?.value);
    println!("  newton bound   = {}", newton_threshold(&cyclic)?);
    for (p, q) in [(1, 2), (1, 1), (3, 2)] {
        let t = rat(p, q);
        println!("  (1,1,1) in {t} * Newton: {}", newton_membership(&cyclic, &t)?);
    }

    for u in [vec![2, 5, 7], vec![3, 3], vec![1, 4, 4, 9]] {
        let ideal = MonomialIdeal::diagonal(&u)?;
        println!("diagonal {u:?}: lct = {}", lct_monomial(&ideal)?);
    }
    Ok(())
}
