use scatter1d::scarf::{ScarfEigenfunction, ScarfParams};

fn main() -> scatter1d::Result<()> {
    let p = ScarfParams::new(0.2, 2.0)?;
    for n in 0..=2 {
        let f = ScarfEigenfunction::new(&p, n)?;
        println!(
            "n = {n}: E = {:+.2}  nodes = {}  half bound = {}",
            f.energy(),
            f.nodes(),
            f.is_half_bound()
        );
        let row: Vec<String> = (-4..=4).map(|i| format!("{:+.3}", f.value(2.5 * i as f64))).collect();
        println!("    psi(-10..10 step 2.5) = {}", row.join(" "));
    }
    Ok(())
}
