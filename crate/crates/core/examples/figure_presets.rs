use scatter1d::presets::{self, PRESET_NAMES};

fn main() -> scatter1d::Result<()> {
    let dir = std::env::temp_dir().join("scatter1d-figures");
    for name in PRESET_NAMES {
        for path in presets::write_preset(name, &dir)? {
            println!("{}", path.display());
        }
    }

    for name in ["fig4a", "fig4b", "fig5a", "fig5b"] {
        let out = presets::run_preset(name)?;
        let table = out[0].1.as_sweep().unwrap();
        println!(
            "{name}: R(0.01) < 0.1 for q in {:?}, low reflection near q = {:?}",
            presets::low_reflection_band(table, presets::BAND_THRESHOLD),
            presets::low_reflection_location(table)
        );
    }
    Ok(())
}
