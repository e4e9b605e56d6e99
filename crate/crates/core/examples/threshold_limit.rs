use scatter1d::{PotentialSpec, Solver};

fn main() -> scatter1d::Result<()> {
    let solver = Solver::default();
    for q in [0.9, 1.0, 1.1, 2.0] {
        let z = solver.reflection_at_zero(&PotentialSpec::scarf_ii(0.2, q)?)?;
        println!(
            "scarf2 q = {q}: R(0) = {:.7}  converged = {}",
            z.reflection, z.converged
        );
        for (e, r) in &z.sequence {
            println!("    E = {e:.0e}  R = {r:.10}");
        }
    }
    Ok(())
}
