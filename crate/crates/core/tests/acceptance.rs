//! Acceptance checks; one PASS/FAIL line per criterion.

use std::fs;
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use scatter1d::dddp::{self, DddpParams};
use scatter1d::presets::{self, BAND_THRESHOLD};
use scatter1d::scarf::{self, ScarfEigenfunction, ScarfParams};
use scatter1d::scatter::{self, DEFAULT_N_SLABS};
use scatter1d::spectral;
use scatter1d::sweep::SweepTable;
use scatter1d::PotentialSpec;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

const TANH_SQ_PI_02: f64 = 0.31013;

fn scarf_threshold_anomaly() -> Check {
    let mut detail = Vec::new();
    for q in [0.0, 1.0, 2.0] {
        let p = PotentialSpec::scarf_ii(0.2, q).map_err(err)?;
        let z = scatter::reflection_at_zero(&p, DEFAULT_N_SLABS).map_err(err)?;
        ensure(z.converged, format!("q={q}: limit not converged"))?;
        ensure(
            (z.reflection - TANH_SQ_PI_02).abs() < 1e-3,
            format!("q={q}: R(0)={}", z.reflection),
        )?;
        detail.push(format!("q={q}: {:.7}", z.reflection));
    }
    let r0 = scarf::r0(0.2);
    ensure((r0 - TANH_SQ_PI_02).abs() < 1e-5, format!("closed form {r0}"))?;
    Ok(format!("{}; closed form {r0:.9}", detail.join(", ")))
}

fn scarf_ordinary_threshold() -> Check {
    let sp = ScarfParams::new(0.2, 1.5).map_err(err)?;
    let exact = scarf::reflection(&sp, 1e-8).map_err(err)?;
    let numeric = scatter::scattering(&sp.to_potential(), 1e-8, DEFAULT_N_SLABS)
        .map_err(err)?
        .reflection;
    ensure(exact > 0.999, format!("closed form R={exact}"))?;
    ensure((exact - numeric).abs() < 1e-3, format!("numeric {numeric} vs {exact}"))?;
    Ok(format!("closed form {exact:.9}, numeric {numeric:.9}"))
}

fn dddp_manifold() -> Check {
    let a = 1.0;
    let mut worst: f64 = 0.0;
    let mut off_min: f64 = 1.0;
    for u1a in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let p = DddpParams::at_hbs(u1a / a, a).map_err(err)?;
        let z = scatter::reflection_at_zero(&p.to_potential(), DEFAULT_N_SLABS).map_err(err)?;
        let expected = dddp::r0_at_hbs(p.u1, a).map_err(err)?;
        worst = worst.max((z.reflection - expected).abs());
        let off = PotentialSpec::delta_pair(p.u1, 1.2 * p.u2, a).map_err(err)?;
        off_min = off_min.min(
            scatter::reflection_at_zero(&off, DEFAULT_N_SLABS)
                .map_err(err)?
                .reflection,
        );
    }
    ensure(worst < 1e-4, format!("max deviation {worst:e}"))?;
    ensure(off_min > 0.99, format!("off-manifold R(0) = {off_min}"))?;
    Ok(format!("max |ΔR(0)| {worst:.2e}, off-manifold min R(0) {off_min:.6}"))
}

fn unitarity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ca7);
    let mut worst_closed: f64 = 0.0;
    for _ in 0..1000 {
        let sp = ScarfParams::new(rng.gen_range(0.0..2.0), rng.gen_range(-3.0..4.0)).map_err(err)?;
        let e = 10f64.powf(rng.gen_range(-6.0..1.5));
        let (r, t) = scarf::probabilities(&sp, e).map_err(err)?;
        worst_closed = worst_closed.max((r + t - 1.0).abs());
    }
    let samples: Vec<(PotentialSpec, f64)> = (0..1000)
        .map(|i| {
            let e = 10f64.powf(rng.gen_range(-4.0..1.0));
            let p = match i % 4 {
                0 => PotentialSpec::delta_pair(
                    rng.gen_range(0.0..4.0),
                    rng.gen_range(0.0..4.0),
                    rng.gen_range(0.05..3.0),
                ),
                1 => PotentialSpec::scarf_ii(rng.gen_range(0.0..1.5), rng.gen_range(-2.0..3.0)),
                2 => PotentialSpec::square_well_barrier(
                    rng.gen_range(0.0..10.0),
                    rng.gen_range(0.0..10.0),
                    rng.gen_range(0.1..2.0),
                    rng.gen_range(0.0..2.0),
                ),
                _ => PotentialSpec::sin_squared_well_barrier(
                    rng.gen_range(0.0..10.0),
                    rng.gen_range(0.0..10.0),
                    rng.gen_range(0.1..2.0),
                    rng.gen_range(0.0..2.0),
                ),
            };
            (p.expect("sampled parameters are valid"), e)
        })
        .collect();
    let worst_numeric = samples
        .par_iter()
        .map(|(p, e)| {
            let s = scatter::scattering(p, *e, DEFAULT_N_SLABS).map_err(err)?;
            Ok((s.reflection + s.transmission - 1.0).abs())
        })
        .collect::<Result<Vec<f64>, String>>()?
        .into_iter()
        .fold(0.0, f64::max);
    ensure(
        worst_closed <= 4.0 * f64::EPSILON,
        format!("closed form |R+T-1| = {worst_closed:e}"),
    )?;
    ensure(worst_numeric < 1e-6, format!("numeric |R+T-1| = {worst_numeric:e}"))?;
    Ok(format!(
        "closed form max |R+T-1| {worst_closed:.1e}, numeric {worst_numeric:.1e}"
    ))
}

fn spectrum() -> Check {
    let p = PotentialSpec::scarf_ii(0.2, 2.5).map_err(err)?;
    let e = spectral::bound_states(&p, None, DEFAULT_N_SLABS).map_err(err)?;
    let expected = [-6.25, -2.25, -0.25];
    ensure(e.len() == 3, format!("q=2.5 levels {e:?}"))?;
    let dev = e.iter().zip(expected).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    ensure(dev < 1e-4, format!("q=2.5 levels {e:?}"))?;
    let p2 = PotentialSpec::scarf_ii(0.2, 2.0).map_err(err)?;
    let e2 = spectral::bound_states(&p2, None, DEFAULT_N_SLABS).map_err(err)?;
    let prof = spectral::zero_energy_profile(&p2, DEFAULT_N_SLABS).map_err(err)?;
    ensure(e2.len() == 2, format!("q=2 levels {e2:?}"))?;
    ensure(
        prof.is_hbs && prof.nodes == 2,
        format!("q=2 profile hbs={} nodes={}", prof.is_hbs, prof.nodes),
    )?;
    Ok(format!(
        "q=2.5 max deviation {dev:.1e}; q=2: {} levels, HBS with {} nodes",
        e2.len(),
        prof.nodes
    ))
}

fn oracle_equivalence() -> Check {
    let mut dddp_worst: f64 = 0.0;
    for (u1, u2, a) in [(1.0, 2.0, 0.5), (1.0, 3.0, 0.5), (2.5, 0.7, 1.3)] {
        let params = DddpParams::new(u1, u2, a).map_err(err)?;
        for i in 0..50 {
            let e = 1e-3 + (10.0 - 1e-3) * i as f64 / 49.0;
            let exact = dddp::reflection(&params, e).map_err(err)?;
            let numeric = scatter::scattering(&params.to_potential(), e, DEFAULT_N_SLABS).map_err(err)?;
            dddp_worst = dddp_worst.max((exact - numeric.reflection).abs());
        }
    }
    let mut scarf_worst: f64 = 0.0;
    for q in [0.0, 0.5, 1.0, 1.5, 2.0, 2.5] {
        let sp = ScarfParams::new(0.2, q).map_err(err)?;
        for i in 0..50 {
            let e = 0.01 + (5.0 - 0.01) * i as f64 / 49.0;
            let exact = scarf::reflection(&sp, e).map_err(err)?;
            let numeric = scatter::scattering(&sp.to_potential(), e, 4000).map_err(err)?;
            scarf_worst = scarf_worst.max((exact - numeric.reflection).abs());
        }
    }
    let mut square_worst: f64 = 0.0;
    for (u0, w) in [(2.0, 1.3), (10.0, 0.7), (0.5, 3.0)] {
        let p = PotentialSpec::square_well_barrier(u0, 0.0, w, 0.4).map_err(err)?;
        for i in 0..50 {
            let e = 0.01 + (5.0 - 0.01) * i as f64 / 49.0;
            let sn = (w * (e + u0).sqrt()).sin();
            let exact = 1.0 / (1.0 + u0 * u0 * sn * sn / (4.0 * e * (e + u0)));
            let numeric = scatter::scattering(&p, e, DEFAULT_N_SLABS).map_err(err)?;
            square_worst = square_worst.max((exact - numeric.transmission).abs());
        }
    }
    ensure(dddp_worst < 1e-8, format!("dddp {dddp_worst:e}"))?;
    ensure(scarf_worst < 1e-3, format!("scarf {scarf_worst:e}"))?;
    ensure(square_worst < 1e-8, format!("square well {square_worst:e}"))?;
    Ok(format!(
        "max |ΔR| dddp {dddp_worst:.1e}, scarf {scarf_worst:.1e}; max |ΔT| square well {square_worst:.1e}"
    ))
}

fn preset_table(name: &str) -> Result<SweepTable, String> {
    let out = presets::run_preset(name).map_err(err)?;
    out[0]
        .1
        .as_sweep()
        .cloned()
        .ok_or_else(|| format!("{name} has no sweep"))
}

/// Width of the low-reflection band restricted to q < 0.5, and whether any
/// record outside the band reflects less than the threshold.
fn band_below_half(t: &SweepTable) -> Result<(f64, bool), String> {
    let (lo, hi) = presets::low_reflection_band(t, BAND_THRESHOLD).ok_or("no low-reflection band")?;
    ensure(lo < 0.5, format!("band starts at q={lo}"))?;
    let inside: Vec<f64> = t
        .records
        .iter()
        .filter(|r| r.param >= lo && r.param <= hi && r.param < 0.5)
        .map(|r| r.param)
        .collect();
    let width = inside.last().copied().unwrap_or(lo) - inside.first().copied().unwrap_or(lo);
    let stray = t
        .records
        .iter()
        .any(|r| (r.param < lo || r.param > hi) && r.reflection < BAND_THRESHOLD);
    Ok((width, stray))
}

fn figure_shapes() -> Check {
    let (w2, stray2) = band_below_half(&preset_table("fig4a")?)?;
    let (w0, stray0) = band_below_half(&preset_table("fig4b")?)?;
    ensure(!stray0 && !stray2, "R(0.01) < 0.1 outside the low-q band")?;
    ensure(w0 > w2, format!("a=0 band width {w0} not wider than a=2 width {w2}"))?;
    let t5a = preset_table("fig5a")?;
    let t5b = preset_table("fig5b")?;
    let loc_a = presets::low_reflection_location(&t5a).ok_or("fig5a: no low-reflection location")?;
    let loc_b = presets::low_reflection_location(&t5b).ok_or("fig5b: no low-reflection location")?;
    ensure(
        loc_b > loc_a,
        format!("eta=0.1 location {loc_b} not above eta=1.5 location {loc_a}"),
    )?;
    Ok(format!(
        "fig4 band widths a=0 {w0:.3}, a=2 {w2:.3}; fig5 low-reflection q: eta=1.5 {loc_a:.3}, eta=0.1 {loc_b:.3}"
    ))
}

fn hbs_finder() -> Check {
    let roots =
        spectral::find_hbs(|q| PotentialSpec::scarf_ii(0.2, q), (0.5, 2.5), 1e-10, DEFAULT_N_SLABS).map_err(err)?;
    let qs: Vec<f64> = roots.iter().map(|r| r.theta).collect();
    ensure(qs.len() == 2, format!("scarf roots {qs:?}"))?;
    ensure(
        (qs[0] - 1.0).abs() < 1e-6 && (qs[1] - 2.0).abs() < 1e-6,
        format!("scarf roots {qs:?}"),
    )?;
    let roots = spectral::find_hbs(
        |u2| PotentialSpec::delta_pair(1.0, u2, 0.5),
        (0.1, 10.0),
        1e-12,
        DEFAULT_N_SLABS,
    )
    .map_err(err)?;
    ensure(roots.len() == 1, format!("dddp roots {roots:?}"))?;
    let u2 = roots[0].theta;
    ensure((u2 - 2.0).abs() < 1e-8, format!("dddp root {u2}"))?;
    Ok(format!("scarf q = {:.9}, {:.9}; dddp u2 = {u2:.12}", qs[0], qs[1]))
}

/// Eighth-order central second derivative.
fn second_derivative(f: &dyn Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    const C: [f64; 5] = [-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0];
    let mut sum = C[0] * f(x);
    for (j, c) in C.iter().enumerate().skip(1) {
        let d = j as f64 * h;
        sum += c * (f(x + d) + f(x - d));
    }
    sum / (h * h)
}

fn eigenfunction_residual() -> Check {
    let sp = ScarfParams::new(0.2, 2.0).map_err(err)?;
    let p = sp.to_potential();
    let mut worst: f64 = 0.0;
    for n in 0..3 {
        let f = ScarfEigenfunction::new(&sp, n).map_err(err)?;
        let e = f.energy();
        let psi = |x: f64| f.value(x);
        let mut res: f64 = 0.0;
        let mut scale: f64 = 0.0;
        for i in 0..=2000 {
            let x = -10.0 + 0.01 * i as f64;
            let d2 = second_derivative(&psi, x, 0.01);
            let v = p.evaluate(x).map_err(err)?;
            let kinetic = (e - v) * psi(x);
            res = res.max((d2 + kinetic).abs());
            scale = scale.max(d2.abs()).max(kinetic.abs());
        }
        ensure(res < 1e-8 * scale, format!("n={n}: residual {res:e}, scale {scale:e}"))?;
        worst = worst.max(res / scale);
    }
    Ok(format!("max relative residual {worst:.1e}"))
}

fn determinism() -> Check {
    let bin = env!("CARGO_BIN_EXE_scatter1d");
    let dir = tempfile::tempdir().map_err(err)?;
    let mut outputs = Vec::new();
    for run in ["first", "second"] {
        let out_dir = dir.path().join(run);
        let out = Command::new(bin)
            .args(["figure", "fig2a", "--out-dir"])
            .arg(&out_dir)
            .output()
            .map_err(err)?;
        ensure(out.status.success(), format!("{run} run exited with {}", out.status))?;
        outputs.push(fs::read(out_dir.join("fig2a.csv")).map_err(err)?);
    }
    ensure(outputs[0] == outputs[1], "fig2a.csv differs between runs")?;
    Ok(format!("{} identical bytes", outputs[0].len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Scarf II zero-energy anomaly", scarf_threshold_anomaly),
        ("Scarf II ordinary threshold", scarf_ordinary_threshold),
        ("delta-pair half-bound-state manifold", dddp_manifold),
        ("unitarity", unitarity),
        ("bound spectrum", spectrum),
        ("numeric vs closed form", oracle_equivalence),
        ("figure shapes", figure_shapes),
        ("half-bound-state finder", hbs_finder),
        ("eigenfunction residual", eigenfunction_residual),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
