use std::collections::BTreeMap;
use std::path::Path;

use scatter1d::config::parse_config;
use scatter1d::sweep::Family;

fn main() -> scatter1d::Result<()> {
    let text = "# square well-barrier touching at the origin\nfamily = square-wb\nq = 3.9266\na = 0\n";
    let cfg = parse_config(text, Path::new("inline.cfg"))?;
    let family: Family = cfg["family"].parse()?;
    let params: BTreeMap<String, f64> = cfg
        .iter()
        .filter(|(k, _)| k.as_str() != "family")
        .map(|(k, v)| (k.clone(), v.parse().expect("numeric value")))
        .collect();
    let p = family.potential(&params)?;
    println!("{p:?}");
    Ok(())
}
