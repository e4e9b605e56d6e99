use std::path::Path;

use scatter1d::export::{self, Format};
use scatter1d::sweep::{sweep, Engine, Family, SweepSpec};

fn main() -> scatter1d::Result<()> {
    let spec = SweepSpec::new(Family::ScarfII, "q", (-0.5, 3.0), 15)
        .param("s", 0.2)
        .engine(Engine::Analytic);
    let table = sweep(&spec)?;
    print!("{}", export::csv_string(&table));

    let numeric = sweep(&spec.clone().engine(Engine::Numeric))?;
    let worst = table
        .records
        .iter()
        .zip(&numeric.records)
        .map(|(a, b)| (a.reflection - b.reflection).abs())
        .fold(0.0, f64::max);
    println!("max |R analytic - R numeric| = {worst:.1e}");

    let path = std::env::temp_dir().join("scarf2_q_sweep.json");
    export::export(&table, &path, Format::Json)?;
    assert_eq!(export::read_json(Path::new(&path))?, table);
    println!("wrote {}", path.display());
    Ok(())
}
