//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and exits nonzero if
//! any criterion fails. Pass a criterion number (or several) to run a subset.
//!
//! All tolerances are exact: every compared quantity is an integer or a boolean.

use std::collections::HashMap;
use std::io::Write;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use parthom::catalog::{brute_normalizer, build, normalizer_in_sym, roster, GroupSpec};
use parthom::closedness::{is_closed, pxl_probe, PROBE_CAP};
use parthom::partorbits::{
    burnside_orbit_count, enumerate_orbits, fixed_count, half_affine_check, integer_partitions,
    is_k_homogeneous, PartitionShape, DEFAULT_CAP,
};
use parthom::permcore::{CycleType, PermGroup, Permutation};
use parthom::semigroupkit::{
    canonical_map, required_generator_count, required_generator_count_in, two_generation_witness, verify,
    TwoGeneration, DEFAULT_SEMIGROUP_CAP, DEFAULT_TWO_GEN_BUDGET,
};
use parthom::tables::{TableId, TableOptions, TableReport, TableRunner};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn spec(name: &str) -> GroupSpec {
    name.parse().unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn cell(report: &TableReport, row: &str, column: &str) -> Option<u64> {
    report
        .cells
        .iter()
        .find(|c| c.row == row && c.column == column)
        .map(|c| c.actual)
}

/// Runs a table and requires every cell to match, no column to be skipped, and the given
/// `(column, row, value)` entries to be present.
fn table(runner: &TableRunner, id: TableId, pinned: &[(&str, &str, u64)]) -> Outcome {
    let report = runner.run(id).map_err(|e| e.to_string())?;
    let bad: Vec<String> = report
        .mismatches()
        .map(|c| format!("{}/{}: expected {} got {}", c.column, c.row, c.expected, c.actual))
        .collect();
    if !bad.is_empty() {
        return Err(bad.join("; "));
    }
    if !report.skipped.is_empty() {
        return Err(format!("skipped {:?}", report.skipped));
    }
    for &(column, row, want) in pinned {
        let got = cell(&report, row, column);
        if got != Some(want) {
            return Err(format!("{column}/{row}: {got:?}, want {want}"));
        }
    }
    Ok(format!("{} cells exact", report.cells.len()))
}

fn c1_four_hom(runner: &TableRunner) -> Outcome {
    let cols = [
        "PSL(2,8)",
        "PGammaL(2,8)",
        "M11",
        "M12",
        "M23",
        "M24",
        "PGammaL(2,32)",
    ];
    let totals = [26, 12, 21, 13, 38, 15, 12160];
    let pinned: Vec<(&str, &str, u64)> = cols.iter().zip(totals).map(|(c, t)| (*c, "total", t)).collect();
    table(runner, TableId::FourHom, &pinned)
}

fn c2_five_hom(runner: &TableRunner) -> Outcome {
    let mut pinned = vec![("M12", "total", 30), ("M24", "total", 77)];
    let shapes = [
        "(6,1^18)",
        "(5,2,1^17)",
        "(4,3,1^17)",
        "(4,2,2,1^16)",
        "(3,3,2,1^16)",
        "(3,2,2,2,1^15)",
        "(2,2,2,2,2,1^14)",
    ];
    pinned.extend(
        shapes
            .iter()
            .zip([2, 3, 3, 8, 8, 22, 31])
            .map(|(s, v)| ("M24", *s, v)),
    );
    table(runner, TableId::FiveHom, &pinned)
}

fn c3_agl2(runner: &TableRunner) -> Outcome {
    table(
        runner,
        TableId::Agl2,
        &[
            ("AGL(3,2)", "total", 7),
            ("AGL(4,2)", "total", 11),
            ("AGL(5,2)", "total", 12),
        ],
    )
}

fn c4_three_hom(runner: &TableRunner) -> Outcome {
    table(
        runner,
        TableId::ThreeHom,
        &[("PGammaL(2,32)", "total", 144), ("M24", "total", 4)],
    )
}

fn c5_psl216(runner: &TableRunner) -> Outcome {
    table(
        runner,
        TableId::Psl216,
        &[
            ("total", "orbits", 94),
            ("total", "G", 72),
            ("total", "G:2", 18),
            ("total", "G:4", 4),
        ],
    )
}

fn c6_closedness() -> Outcome {
    let four = |n: usize| PartitionShape::from_support(n, &[4]).unwrap();
    let mut checked = 0;
    let mut expect = |g: GroupSpec, shape: PartitionShape, closed: bool| -> Result<(), String> {
        let r = is_closed(&g, &shape).map_err(|e| format!("{g}: {e}"))?;
        checked += 1;
        if r.closed != closed {
            return Err(format!("{g} on {shape}: closed = {}", r.closed));
        }
        Ok(())
    };
    for name in [
        "AGL(1,8)",
        "PGL(2,8)",
        "PGL(2,9)",
        "M10",
        "PSL(2,11)",
        "M22",
        "PXL(2,25)",
        "PXL(2,49)",
    ] {
        let g = spec(name);
        expect(g, four(g.degree()), true)?;
    }
    expect(spec("PSL(2,7)"), four(8), false)?;
    for name in ["AGL(1,8)", "M22"] {
        let g = spec(name);
        for support in [&[3, 2][..], &[2, 2, 2]] {
            expect(
                g,
                PartitionShape::from_support(g.degree(), support).unwrap(),
                false,
            )?;
        }
    }
    for q in [81, 121] {
        let r = pxl_probe(q, PROBE_CAP).map_err(|e| e.to_string())?;
        let closed = r.fusion.as_ref().map(|f| f.closed);
        if !r.complete || closed != Some(false) {
            return Err(format!("PXL(2,{q}): complete {} closed {closed:?}", r.complete));
        }
        checked += 1;
    }
    Ok(format!("{checked} verdicts"))
}

fn c7_half_affine() -> Outcome {
    for (p, total) in [(11u64, 21u64), (23, 112)] {
        let r = half_affine_check(p as u32).map_err(|e| e.to_string())?;
        let want = [(p - 2) / 3, (p - 2) * (p - 3) / 4];
        if r.counts != want || r.total != total {
            return Err(format!("p = {p}: {:?} total {}", r.counts, r.total));
        }
    }
    Ok("p = 11, 23".into())
}

/// Partial partitions of `{0..n}` with block sizes `sizes`, as sorted lists of sorted blocks.
fn partials(n: usize, sizes: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 0..pool.len() {
            for mut rest in subsets(&pool[i + 1..], k - 1) {
                rest.insert(0, pool[i]);
                out.push(rest);
            }
        }
        out
    }
    fn rec(
        free: Vec<usize>,
        sizes: &[usize],
        min: usize,
        acc: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        let Some((&s, rest)) = sizes.split_first() else {
            let mut p = acc.clone();
            p.sort();
            out.push(p);
            return;
        };
        for block in subsets(&free, s) {
            // equal sizes are taken in increasing order of least point
            if block[0] < min {
                continue;
            }
            let left: Vec<usize> = free.iter().copied().filter(|x| !block.contains(x)).collect();
            let next_min = if rest.first() == Some(&s) { block[0] } else { 0 };
            acc.push(block);
            rec(left, rest, next_min, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec((0..n).collect(), sizes, 0, &mut Vec::new(), &mut out);
    out
}

fn brute_fixed(g: &Permutation, sizes: &[usize]) -> u64 {
    partials(g.degree(), sizes)
        .into_iter()
        .filter(|p| {
            let mut img: Vec<Vec<usize>> = p
                .iter()
                .map(|b| {
                    let mut v: Vec<usize> = b.iter().map(|&x| g.apply0(x)).collect();
                    v.sort();
                    v
                })
                .collect();
            img.sort();
            img == *p
        })
        .count() as u64
}

/// Orbit count on all set partitions of a shape, by union-find over canonical labellings.
fn naive_orbit_count(g: &PermGroup, parts: &[usize]) -> u64 {
    let n = g.degree();
    let mut all: Vec<Vec<u8>> = Vec::new();
    fn rec(
        label: &mut Vec<u8>,
        free: &mut Vec<bool>,
        left: &mut Vec<usize>,
        next: u8,
        out: &mut Vec<Vec<u8>>,
    ) {
        let Some(first) = free.iter().position(|&f| f) else {
            out.push(label.clone());
            return;
        };
        let mut tried = Vec::new();
        for i in 0..left.len() {
            let s = left[i];
            if tried.contains(&s) {
                continue;
            }
            tried.push(s);
            left.remove(i);
            free[first] = false;
            label[first] = next;
            let pool: Vec<usize> = (first + 1..free.len()).filter(|&x| free[x]).collect();
            choose(&pool, s - 1, label, free, left, next, out);
            free[first] = true;
            left.insert(i, s);
        }
    }
    fn choose(
        pool: &[usize],
        k: usize,
        label: &mut Vec<u8>,
        free: &mut Vec<bool>,
        left: &mut Vec<usize>,
        next: u8,
        out: &mut Vec<Vec<u8>>,
    ) {
        if k == 0 {
            rec(label, free, left, next + 1, out);
            return;
        }
        for i in 0..pool.len() {
            free[pool[i]] = false;
            label[pool[i]] = next;
            choose(&pool[i + 1..], k - 1, label, free, left, next, out);
            free[pool[i]] = true;
        }
    }
    rec(
        &mut vec![0; n],
        &mut vec![true; n],
        &mut parts.to_vec(),
        0,
        &mut all,
    );
    let index: HashMap<Vec<u8>, usize> = all.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..all.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, lab) in all.iter().enumerate() {
        for gen in g.generators() {
            let mut moved = vec![0u8; n];
            for x in 0..n {
                moved[gen.apply0(x)] = lab[x];
            }
            let mut rename = [u8::MAX; 256];
            let mut k = 0;
            for v in moved.iter_mut() {
                if rename[*v as usize] == u8::MAX {
                    rename[*v as usize] = k;
                    k += 1;
                }
                *v = rename[*v as usize];
            }
            let j = index[&moved];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
    }
    (0..all.len()).filter(|&i| find(&mut parent, i) == i).count() as u64
}

fn c8_oracles() -> Outcome {
    let mut fixed_cases = 0;
    for n in 2..=10 {
        let supports: Vec<Vec<usize>> = (2..=n)
            .flat_map(|m| integer_partitions(m, m))
            .filter(|p| p.len() <= 3 && p.iter().all(|&x| x >= 2))
            .collect();
        for t in CycleType::all(n) {
            let rep = t.representative();
            for s in &supports {
                let got = fixed_count(&t, s);
                let want = brute_fixed(&rep, s);
                if got != BigUint::from(want) {
                    return Err(format!("fixed_count({t}, {s:?}) = {got}, brute {want}"));
                }
                fixed_cases += 1;
            }
        }
    }
    let limit = BigUint::from(1_000_000u32);
    let (mut enumerated, mut naive) = (0, 0);
    for s in roster().into_iter().filter(|s| s.degree() <= 17) {
        let g = build(&s).map_err(|e| e.to_string())?;
        let n = g.degree();
        for parts in integer_partitions(n, n) {
            let shape = PartitionShape::new(parts.clone()).unwrap();
            if shape.total_count() > limit {
                continue;
            }
            let b = burnside_orbit_count(&g, &shape).map_err(|e| e.to_string())?;
            let e = match enumerate_orbits(&g, &shape, DEFAULT_CAP) {
                Ok(r) => {
                    enumerated += 1;
                    r.count.to_u64().unwrap()
                }
                Err(parthom::Error::Unsupported(_)) => {
                    naive += 1;
                    naive_orbit_count(&g, &parts)
                }
                Err(err) => return Err(format!("{s} {shape}: {err}")),
            };
            if b != BigUint::from(e) {
                return Err(format!("{s} {shape}: counting lemma {b}, enumeration {e}"));
            }
        }
    }
    Ok(format!(
        "{fixed_cases} fixed counts; {enumerated} enumerated and {naive} naive orbit counts"
    ))
}

fn c9_semigroups() -> Outcome {
    let mut groups: Vec<GroupSpec> = Vec::new();
    for n in 3..=7 {
        groups.push(GroupSpec::sym(n));
        groups.push(GroupSpec::alt(n));
    }
    groups.push(spec("PGL(2,5)"));
    let (mut ran, mut skipped) = (0, 0);
    for s in groups {
        let g = build(&s).map_err(|e| e.to_string())?;
        let n = g.degree();
        for rank in n.div_ceil(2)..n {
            for shape in PartitionShape::all_of_rank(n, rank) {
                let t = canonical_map(&shape).unwrap();
                let r = verify(&g, &t, 7, DEFAULT_SEMIGROUP_CAP).map_err(|e| format!("{s} {shape}: {e}"))?;
                if !r.hypotheses.one_orbit {
                    skipped += 1;
                    continue;
                }
                let c = &r.checks;
                let all = [c.sandwich, c.characterization, c.greens, c.idempotent_match];
                if all.iter().any(|x| *x != Some(true)) {
                    return Err(format!("{s} {shape}: {c:?}"));
                }
                ran += 1;
            }
        }
    }
    Ok(format!("{ran} pairs checked, {skipped} without one orbit"))
}

fn c10_two_generation() -> Outcome {
    let mut found = Vec::new();
    for s in roster().into_iter().filter(|s| s.degree() <= 24) {
        let g = build(&s).map_err(|e| e.to_string())?;
        if !is_k_homogeneous(&g, 2).map_err(|e| e.to_string())? {
            continue;
        }
        match two_generation_witness(&s, 1, DEFAULT_TWO_GEN_BUDGET).map_err(|e| e.to_string())? {
            TwoGeneration::Found { a, b, .. } => {
                if PermGroup::new("H", g.degree(), vec![a, b]).order() != g.order() {
                    return Err(format!("{s}: pair does not generate"));
                }
                found.push(s.to_string());
            }
            other => return Err(format!("{s}: {other:?}")),
        }
    }
    for name in ["M11", "M12", "M22", "M23", "M24", "PGammaL(2,8)", "PGammaL(2,9)"] {
        if !found.iter().any(|f| f == name) {
            return Err(format!("{name} not covered"));
        }
    }
    Ok(format!("{} groups", found.len()))
}

fn partitions_of(k: usize) -> u64 {
    fn count(k: usize, max: usize) -> u64 {
        if k == 0 {
            return 1;
        }
        (1..=max.min(k)).map(|p| count(k - p, p)).sum()
    }
    count(k, k)
}

fn c11_generator_counts(runner: &TableRunner) -> Outcome {
    for n in 2..=12u32 {
        for k in 1..=5usize.min(n as usize / 2) {
            let r =
                required_generator_count(&GroupSpec::sym(n), n as usize - k).map_err(|e| e.to_string())?;
            if r.total != BigUint::from(partitions_of(k)) {
                return Err(format!("S{n} rank n-{k}: {}", r.total));
            }
        }
    }
    for p in [3u32, 5, 7, 11, 13, 17, 19, 23] {
        let r =
            required_generator_count(&spec(&format!("C{p}")), p as usize - 1).map_err(|e| e.to_string())?;
        if r.total != BigUint::from((p - 1) / 2) {
            return Err(format!("C{p}: {}", r.total));
        }
    }
    let m24 = runner.group("M24").map_err(|e| e.to_string())?;
    let r = required_generator_count_in(&m24, 19).map_err(|e| e.to_string())?;
    if r.total != BigUint::from(77u32) {
        return Err(format!("M24 rank 19: {}", r.total));
    }
    Ok("Sn, cyclic, M24".into())
}

fn c12_normalizers() -> Outcome {
    let mut checked = 0;
    for s in roster().into_iter().filter(|s| s.degree() <= 9) {
        let g = build(&s).map_err(|e| e.to_string())?;
        let brute = brute_normalizer(&g).map_err(|e| e.to_string())?;
        let catalog = normalizer_in_sym(&s).map_err(|e| e.to_string())?;
        if !brute.same_group(&catalog) {
            return Err(format!(
                "{s}: brute order {} catalog order {}",
                brute.order(),
                catalog.order()
            ));
        }
        checked += 1;
    }
    Ok(format!("{checked} groups"))
}

fn main() {
    let wanted: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let runner = TableRunner::new(TableOptions {
        slow: true,
        threads,
        ..TableOptions::default()
    });
    let criteria: Vec<Criterion> = vec![
        ("orbits on (n-4)-partitions", Box::new(|| c1_four_hom(&runner))),
        ("orbits on (n-5)-partitions", Box::new(|| c2_five_hom(&runner))),
        ("affine groups over GF(2)", Box::new(|| c3_agl2(&runner))),
        ("orbits on (n-3)-partitions", Box::new(|| c4_three_hom(&runner))),
        ("PSL(2,16) orbits and census", Box::new(|| c5_psl216(&runner))),
        ("closedness verdicts", Box::new(c6_closedness)),
        ("half affine counts", Box::new(c7_half_affine)),
        ("counting oracles", Box::new(c8_oracles)),
        ("semigroup checks, n <= 7", Box::new(c9_semigroups)),
        ("two-generation", Box::new(c10_two_generation)),
        (
            "required generator counts",
            Box::new(|| c11_generator_counts(&runner)),
        ),
        ("normalizer oracle", Box::new(c12_normalizers)),
    ];
    let mut out = std::io::stdout();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let k = i + 1;
        if !wanted.is_empty() && !wanted.contains(&k) {
            continue;
        }
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        let line = match &result {
            Ok(detail) => format!("PASS {k:>2} {name} [exact] {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                format!("FAIL {k:>2} {name} [exact] {why} ({secs:.1}s)")
            }
        };
        writeln!(out, "{line}").unwrap();
        out.flush().unwrap();
    }
    if failed > 0 {
        writeln!(out, "{failed} criteria failed").unwrap();
        std::process::exit(1);
    }
}
