//! The Fermat forms x1^d + ... + xn^d under the two rank notions: the
//! symmetric torus rank (which carries the degree factor and equals n, the
//! semistable value) and the rank of the principal ideal (f), which is n/d.
//!
//! cargo run --example fermat_forms

use stablerank::ideal::{t_stable_rank, PolyIdeal, SparsePolynomial};
use stablerank::tensor::{is_symm_torus_semistable, symm_torus_rank, SymmetricSupport};
use stablerank::rat;

fn main() -> stablerank::Result<()> {
    println!("{:>2} {:>2}  {:>10}  {:>12}  semistable", "n", "d", "symm rank", "rank of (f)");
    for n in 2..=4usize {
        for d in 2..=5usize {
            let support = SymmetricSupport::fermat(n, d)?;
            let symm = symm_torus_rank(&support)?.value.to_string();
            let f = SparsePolynomial::from_terms(n, support.exponents().iter().map(|e| (e.clone(), rat(1, 1))))?;
            let ideal = t_stable_rank(&PolyIdeal::principal(f)?)?.value.to_string();
            println!(
                "{n:>2} {d:>2}  {symm:>10}  {ideal:>12}  {}",
                is_symm_torus_semistable(&support)
            );
        }
    }
    Ok(())
}
