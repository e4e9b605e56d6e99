use scatter1d::dddp::{self, DddpParams};

fn main() -> scatter1d::Result<()> {
    let on = DddpParams::at_hbs(1.0, 0.5)?;
    let off = DddpParams::new(1.0, 3.0, 0.5)?;
    println!("u2 on the HBS manifold: {}", on.u2);

    println!("{:>8} {:>12} {:>12}", "E", "R on", "R off");
    for e in [1.0, 1e-2, 1e-4, 1e-6, 1e-8] {
        println!(
            "{e:>8.0e} {:>12.8} {:>12.8}",
            dddp::reflection(&on, e)?,
            dddp::reflection(&off, e)?
        );
    }
    println!("R(0) on the manifold: {}", dddp::r0_at_hbs(on.u1, on.a)?);

    for x in [-1.0, 0.25, 0.5, 2.0] {
        println!("psi({x}) = {}", dddp::hbs_wavefunction(&on, x)?);
    }
    Ok(())
}
