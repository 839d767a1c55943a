//! Orbits of a group on set partitions: enumeration next to the counting lemma.
//!
//! cargo run --example partition_orbits [GROUP]

use parthom::catalog::build;
use parthom::partorbits::{
    burnside_orbit_count, enumerate_orbits, fixed_count, is_k_homogeneous, PartitionShape, DEFAULT_CAP,
};
use parthom::permcore::CycleType;

fn main() -> parthom::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "M11".into());
    let g = build(&name.parse()?)?;
    let n = g.degree();
    println!("{name}: degree {n}, order {}", g.order());
    for k in 1..=5 {
        println!("  {k}-homogeneous: {}", is_k_homogeneous(&g, k)?);
    }

    for shape in PartitionShape::all_of_rank(n, n - 4) {
        let listed = enumerate_orbits(&g, &shape, DEFAULT_CAP)?;
        let counted = burnside_orbit_count(&g, &shape)?;
        println!(
            "{shape}: {} objects, {} orbits (counting lemma {counted})",
            shape.total_count(),
            listed.count
        );
        for o in listed.orbits.iter().flatten() {
            println!(
                "    {:<28} size {:>6}  stabilizer {}",
                o.rep, o.size, o.stabilizer_order
            );
        }
    }

    let t = CycleType::from_parts(vec![2, 2, 1, 1, 1, 1]);
    println!(
        "partitions of type (2,2,1^4) fixed by an element of type {t}: {}",
        fixed_count(&t, &[2, 2])
    );
    Ok(())
}
