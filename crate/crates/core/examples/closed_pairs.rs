//! Whether the normalizer of a group fuses its orbits on a partition type.
//!
//! cargo run --example closed_pairs

use parthom::catalog::GroupSpec;
use parthom::closedness::{is_closed, pxl_probe, PROBE_CAP};
use parthom::partorbits::PartitionShape;

fn main() -> parthom::Result<()> {
    for (name, support) in [
        ("PGL(2,8)", &[4][..]),
        ("PSL(2,7)", &[4]),
        ("M22", &[4]),
        ("M22", &[3, 2]),
        ("PSL(2,16)", &[2, 2, 2]),
    ] {
        let spec: GroupSpec = name.parse()?;
        let shape = PartitionShape::from_support(spec.degree(), support)?;
        let r = is_closed(&spec, &shape)?;
        println!(
            "{name} on {shape}: closed {} ({} orbits, {} under {}, |N/G| = {})",
            r.closed, r.group_orbits, r.normalizer_orbits, r.normalizer, r.quotient_order
        );
        let census: Vec<String> = r.census.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!("    stabilizers: {}", census.join(" "));
    }

    for q in [25, 81] {
        let p = pxl_probe(q, PROBE_CAP)?;
        let closed = p.fusion.map(|f| f.closed);
        println!(
            "PXL(2,{q}) on 4-subsets: {} objects, closed {closed:?}",
            p.objects
        );
    }
    Ok(())
}
