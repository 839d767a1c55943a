//! The group catalog: families, sporadic groups, normalizers and finite fields.
//!
//! cargo run --example catalog_groups

use parthom::catalog::{build, normalizer_in_sym, roster, FiniteField, GroupSpec};

fn main() -> parthom::Result<()> {
    println!("{:<16} {:>6} {:>28}", "group", "degree", "order");
    for spec in roster() {
        let g = build(&spec)?;
        println!("{:<16} {:>6} {:>28}", spec.to_string(), g.degree(), g.order());
    }

    for name in ["PSL(2,8)", "M22", "AGL(1,8)"] {
        let spec: GroupSpec = name.parse()?;
        let n = normalizer_in_sym(&spec)?;
        let g = build(&spec)?;
        println!("N({spec}) = {} of index {}", n.name(), n.order() / g.order());
    }

    let f = FiniteField::of_order(9)?;
    let w = f.primitive_element();
    let powers: Vec<u32> = (0..8)
        .scan(1, |x, _| {
            let y = *x;
            *x = f.mul(*x, w);
            Some(y)
        })
        .collect();
    println!("GF(9) with modulus {:?}: powers of {w} = {powers:?}", f.modulus());
    Ok(())
}
