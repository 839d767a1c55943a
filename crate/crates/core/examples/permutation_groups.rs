//! Permutations, stabilizer chains, membership and cycle-type histograms.
//!
//! cargo run --example permutation_groups

use parthom::permcore::{on_points, orbit, PermGroup, Permutation};

fn main() -> parthom::Result<()> {
    let a = Permutation::parse_cycles(6, "(1,2,3,4,5,6)")?;
    let b = Permutation::parse_cycles(6, "(1,2)")?;
    println!("a = {a}, b = {b}");
    // right action: points move under a first, then b
    println!("a*b = {}, order {}", a.mul(&b), a.mul(&b).order());

    let s6 = PermGroup::new("S6", 6, vec![a.clone(), b]);
    let chain = s6.chain();
    println!("|S6| = {} with base {:?}", s6.order(), chain.base());
    println!("transversal lengths {:?}", chain.transversal_lengths());

    let c = Permutation::parse_cycles(6, "(1,3,5)(2,4,6)")?;
    let h = PermGroup::new("H", 6, vec![a.pow(2), c.clone()]);
    println!("|H| = {}, H <= S6: {}", h.order(), h.is_subgroup_of(&s6));
    println!(
        "(1,2) in H: {}",
        h.contains(&Permutation::parse_cycles(6, "(1,2)")?)?
    );

    let orb = orbit(0usize, h.generators(), on_points, 100)?;
    let pts: Vec<usize> = orb.elements().iter().map(|p| p + 1).collect();
    println!("orbit of 1 under H: {pts:?}");

    println!("cycle types of PGL(2,5) acting on 6 points:");
    let pgl = parthom::catalog::build(&"PGL(2,5)".parse()?)?;
    for (t, count) in pgl.cycle_type_histogram() {
        println!("  {t:<12} {count}");
    }
    Ok(())
}
