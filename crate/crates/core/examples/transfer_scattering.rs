use scatter1d::scarf::{self, ScarfParams};
use scatter1d::{PotentialSpec, SlabRule, Solver};

fn main() -> scatter1d::Result<()> {
    let sp = ScarfParams::new(0.2, 0.5)?;
    let p = sp.to_potential();
    let exact = scarf::reflection(&sp, 1.0)?;
    for n in [250, 500, 1000, 2000] {
        let magnus = Solver {
            n_slabs: n,
            ..Solver::default()
        };
        let midpoint = Solver {
            rule: SlabRule::Midpoint,
            ..magnus
        };
        println!(
            "n = {n:>4}  |dR| magnus {:.2e}  midpoint {:.2e}",
            (magnus.scattering(&p, 1.0)?.reflection - exact).abs(),
            (midpoint.scattering(&p, 1.0)?.reflection - exact).abs(),
        );
    }

    let s = Solver::default().scattering(&PotentialSpec::square_well_barrier(4.0, 4.0, 1.0, 0.0)?, 0.5)?;
    println!(
        "square well-barrier at E = 0.5: r = {:.6}, t = {:.6}, R + T = {}",
        s.r,
        s.t,
        s.reflection + s.transmission
    );

    let m = Solver::default().total_transfer(&p, 1.0)?;
    println!("det M = {:.15}", m.det().re);
    Ok(())
}
