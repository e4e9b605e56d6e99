use scatter1d::PotentialSpec;

fn main() -> scatter1d::Result<()> {
    let families = [
        PotentialSpec::delta_pair(1.0, 2.0, 0.5)?,
        PotentialSpec::scarf_ii(0.2, 2.0)?,
        PotentialSpec::square_well_barrier(4.0, 4.0, 1.0, 0.0)?,
        PotentialSpec::sin_squared_well_barrier(4.0, 0.4, 1.0, 1.0)?,
        PotentialSpec::sampled(vec![-1.0, 0.0, 1.0], vec![0.0, -2.0, 0.0])?,
    ];
    for p in &families {
        let (lo, hi) = p.support_interval(1e-12);
        println!(
            "{:<10} support [{lo:.3}, {hi:.3}]  min V {:?}",
            p.family(),
            p.min_value()
        );
    }

    // delta functions have no pointwise value
    assert!(families[0].evaluate(0.0).is_err());
    for x in [-1.0, -0.5, 0.0, 0.5, 1.0] {
        println!("sin2-wb V({x:+.1}) = {:+.4}", families[3].evaluate(x)?);
    }

    // specs serialise with a `family` tag
    println!("{}", serde_json::to_string(&families[1]).unwrap());
    Ok(())
}
