use scatter1d::{PotentialSpec, Solver};

fn main() -> scatter1d::Result<()> {
    let solver = Solver::default();

    let prof = solver.zero_energy_profile(&PotentialSpec::scarf_ii(0.2, 2.0)?)?;
    println!(
        "scarf2 q = 2: mismatch {:.1e}, nodes {}, HBS {}",
        prof.mismatch, prof.nodes, prof.is_hbs
    );

    let scarf = solver.find_hbs(|q| PotentialSpec::scarf_ii(0.2, q), (0.5, 2.5), 1e-10)?;
    let square = solver.find_hbs(
        |q| PotentialSpec::square_well_barrier(q * q, q * q, 1.0, 0.0),
        (0.5, 8.0),
        1e-10,
    )?;
    let delta = solver.find_hbs(|u2| PotentialSpec::delta_pair(1.0, u2, 0.5), (0.1, 10.0), 1e-12)?;
    for (name, roots) in [("scarf2 q", scarf), ("square-wb q", square), ("dddp u2", delta)] {
        for r in roots {
            println!("{name} = {:.10}  nodes {}", r.theta, r.nodes);
        }
    }
    Ok(())
}
