use scatter1d::scarf::{self, ScarfParams};

fn main() -> scatter1d::Result<()> {
    for q in [1.0, 1.01, 1.5, 2.0] {
        let p = ScarfParams::new(0.2, q)?;
        let (r, t) = scarf::probabilities(&p, 0.01)?;
        println!(
            "q = {q:<5} R(0.01) = {r:.6}  T(0.01) = {t:.6}  R(0) = {:.6}",
            scarf::reflection_limit(&p)
        );
    }
    println!("tanh^2(0.2 pi) = {:.9}", scarf::r0(0.2));

    for q in [2.0, 2.5] {
        let spec = scarf::bound_energies(q);
        println!(
            "q = {q}: bound energies {:?}, half bound state n = {:?}",
            spec.energies, spec.hbs_index
        );
    }
    Ok(())
}
