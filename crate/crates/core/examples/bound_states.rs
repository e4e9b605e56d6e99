use scatter1d::scarf;
use scatter1d::{PotentialSpec, Solver};

fn main() -> scatter1d::Result<()> {
    let solver = Solver::default();
    for q in [1.5, 2.0, 2.5] {
        let found = solver.bound_states(&PotentialSpec::scarf_ii(0.2, q)?, None)?;
        println!(
            "scarf2 q = {q}: {found:.8?}  exact {:?}",
            scarf::bound_energies(q).energies
        );
    }
    let well = PotentialSpec::sin_squared_well_barrier(30.0, 3.0, 1.0, 1.0)?;
    println!("sin2-wb u1 = 30: {:.8?}", solver.bound_states(&well, None)?);
    Ok(())
}
