//! Generating pairs, generator counts for rank-r maps, and semigroup normalizers.
//!
//! cargo run --release --example generation

use parthom::catalog::{build, GroupSpec};
use parthom::semigroupkit::{
    normalizer_of_semigroup_scan, required_generator_count, two_generation_witness, with_group,
    TransformationMap, TwoGeneration, DEFAULT_SEMIGROUP_CAP, DEFAULT_TWO_GEN_BUDGET,
};

fn main() -> parthom::Result<()> {
    for name in ["M11", "M12", "PGammaL(2,9)", "AGL(4,2)", "C7"] {
        let spec: GroupSpec = name.parse()?;
        match two_generation_witness(&spec, 1, DEFAULT_TWO_GEN_BUDGET)? {
            TwoGeneration::Found { a, b, attempts } => {
                println!("{name}: generated by a = {a} and b = {b} after {attempts} tries")
            }
            other => println!("{name}: {other:?}"),
        }
    }

    for (name, rank) in [("S10", 7), ("C11", 10), ("PSL(2,11)", 9)] {
        let r = required_generator_count(&name.parse()?, rank)?;
        println!("{name}, rank {rank}: {} maps needed {:?}", r.total, r.per_shape);
    }

    let a5 = build(&"A5".parse()?)?;
    let t = TransformationMap::from_images(&[1, 1, 3, 4, 5])?;
    let s = with_group(&t, &a5, DEFAULT_SEMIGROUP_CAP)?;
    let n = normalizer_of_semigroup_scan(&s)?;
    println!(
        "<{t}, A5> has {} elements; its normalizer in S5 has order {}",
        s.len(),
        n.order()
    );
    Ok(())
}
