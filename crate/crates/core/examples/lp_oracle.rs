//! The exact simplex solver next to the vertex-enumeration oracle, and the
//! fractional program it powers.
//!
//! cargo run --example lp_oracle

use stablerank::{lp_minimize, minimize_slope, oracle_minimum_over_vertices, rat, LinearProgram};

fn main() -> stablerank::Result<()> {
    // min x + y  s.t.  2x >= 1, x + y >= 1, 2y >= 1
    let prob = LinearProgram::new(vec![rat(1, 1), rat(1, 1)])
        .ge(vec![rat(2, 1), rat(0, 1)], rat(1, 1))
        .ge(vec![rat(1, 1), rat(1, 1)], rat(1, 1))
        .ge(vec![rat(0, 1), rat(2, 1)], rat(1, 1));
    let outcome = lp_minimize(&prob)?;
    println!("simplex: {:?} value {:?}", outcome.status(), outcome.value().map(|v| v.to_string()));
    println!("vertex:  {:?}", outcome.vertex().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
    let oracle = oracle_minimum_over_vertices(&prob)?;
    println!("oracle:  {:?}", oracle.map(|v| v.to_string()));

    // inf (λ1 + λ2) / min(3 λ1, 4 λ2)
    let slope = minimize_slope(&[rat(1, 1), rat(1, 1)], &[vec![3, 0], vec![0, 4]])?;
    println!("fractional minimum {} attained at integer λ = {:?}", slope.value, slope.witness);
    Ok(())
}
