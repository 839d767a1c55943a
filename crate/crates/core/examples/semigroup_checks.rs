//! Transformation semigroups generated by a group and one singular map.
//!
//! cargo run --release --example semigroup_checks

use parthom::catalog::build;
use parthom::partorbits::PartitionShape;
use parthom::semigroupkit::{
    canonical_map, greens_check, idempotent_power, kernel_witness, sandwich_check, verify, with_symmetric,
    Outcome, TransformationMap, DEFAULT_SEMIGROUP_CAP,
};

fn main() -> parthom::Result<()> {
    let t = TransformationMap::from_images(&[1, 1, 2, 3, 5, 4])?;
    let kernel: Vec<Vec<u8>> = t
        .kernel()
        .iter()
        .map(|c| c.iter().map(|x| x + 1).collect())
        .collect();
    println!(
        "t = {t}: rank {}, kernel type {}, kernel {kernel:?}",
        t.rank(),
        t.kernel_type()
    );
    println!("idempotent power of t: {}", idempotent_power(&t));

    let s6 = build(&"S6".parse()?)?;
    let a6 = build(&"A6".parse()?)?;
    let shape = PartitionShape::parse("2,2,1,1", 6)?;
    let e = canonical_map(&shape)?;
    for g in [&s6, &a6] {
        match sandwich_check(g, &e, DEFAULT_SEMIGROUP_CAP)? {
            Outcome::Checked(s) => println!("{}: sandwich sets equal: {} ({s:?})", g.name(), s.equal),
            Outcome::HypothesisFailed(why) => println!("{}: not applicable, {why}", g.name()),
        }
    }

    let m = with_symmetric(&e, DEFAULT_SEMIGROUP_CAP)?;
    println!(
        "<{e}, S6> has {} elements, {} idempotents",
        m.len(),
        m.idempotents().len()
    );
    let greens = greens_check(&m, 1)?;
    println!("principal ideals: {greens:?}");

    let w = kernel_witness(
        &a6,
        &e,
        &[vec![1, 6], vec![2, 5], vec![3], vec![4]],
        &[2, 3, 4, 6],
    )?;
    if let Outcome::Checked(w) = w {
        println!(
            "kernel witness g = {}, h = {}, g^-1 e h = {}",
            w.g, w.h, w.product
        );
    }

    let pgl = build(&"PGL(2,5)".parse()?)?;
    for support in [&[2][..], &[2, 2], &[3]] {
        let e = canonical_map(&PartitionShape::from_support(6, support)?)?;
        let r = verify(&pgl, &e, 1, DEFAULT_SEMIGROUP_CAP)?;
        println!(
            "PGL(2,5) with {}: one orbit {}, checks {:?}, passed {}",
            r.kernel_type,
            r.hypotheses.one_orbit,
            r.checks,
            r.passed()
        );
    }
    Ok(())
}
