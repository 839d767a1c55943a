//! Reference tables of orbit counts, recomputed and compared cell by cell with the embedded
//! expected values.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::catalog::{build_with, normalizer_in_sym_with, GeneratorData, GroupSpec};
use crate::closedness::fuse;
use crate::error::{Error, Result};
use crate::partorbits::{
    burnside_orbit_count, enumerate_orbits, half_affine_check, PartitionShape, DEFAULT_CAP,
};
use crate::permcore::PermGroup;
use crate::report::{render_table, OutputFormat};
use crate::semigroupkit::required_generator_count_in;

/// The reproducible tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableId {
    /// Orbits of 4-homogeneous groups on `(n−4)`-partitions.
    FourHom,
    /// Orbits of 5-homogeneous groups on `(n−5)`-partitions.
    FiveHom,
    /// Orbits of `AGL(d,2)` on `(n−3)`-partitions.
    Agl2,
    /// Orbits of 3-homogeneous groups on `(n−3)`-partitions.
    ThreeHom,
    /// Orbits of `PSL(2,16)` on `(n−3)`-partitions, sorted by their stabilizer in the normalizer.
    Psl216,
    /// Orbits of the half affine group of prime degree `p ≡ 11 (mod 12)`.
    HalfAffine,
    /// Least numbers of rank-`r` maps generating all maps of rank at most `r` with a group.
    Gens,
}

impl TableId {
    pub const ALL: [TableId; 7] = [
        TableId::FourHom,
        TableId::FiveHom,
        TableId::Agl2,
        TableId::ThreeHom,
        TableId::Psl216,
        TableId::HalfAffine,
        TableId::Gens,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableId::FourHom => "4hom",
            TableId::FiveHom => "5hom",
            TableId::Agl2 => "agl2",
            TableId::ThreeHom => "3hom",
            TableId::Psl216 => "psl216",
            TableId::HalfAffine => "example28",
            TableId::Gens => "gens",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            TableId::FourHom => "orbits of 4-homogeneous groups on (n-4)-partitions",
            TableId::FiveHom => "orbits of 5-homogeneous groups on (n-5)-partitions",
            TableId::Agl2 => "orbits of AGL(d,2) on (n-3)-partitions",
            TableId::ThreeHom => "orbits of 3-homogeneous groups on (n-3)-partitions",
            TableId::Psl216 => "orbits of PSL(2,16) on 14-partitions by stabilizer in PGammaL(2,16)",
            TableId::HalfAffine => "orbits of the half affine group of degree p on (p-2)-partitions",
            TableId::Gens => "rank-r maps needed to generate all maps of rank at most r",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        TableId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .or((s == "halfaffine").then_some(TableId::HalfAffine))
            .ok_or_else(|| Error::InvalidInput(format!("unknown table `{s}`")))
    }
}

/// One recomputed cell next to its expected value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub row: String,
    pub column: String,
    pub expected: u64,
    pub actual: u64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub table: String,
    pub description: String,
    pub cells: Vec<Cell>,
    /// Columns left out because they need `--slow`.
    pub skipped: Vec<String>,
    pub pass: bool,
}

impl TableReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.pass)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        if format == OutputFormat::Json {
            return serde_json::to_string_pretty(self).expect("report serializes") + "\n";
        }
        let rows: Vec<Vec<String>> = self
            .cells
            .iter()
            .map(|c| {
                vec![
                    c.column.clone(),
                    c.row.clone(),
                    c.expected.to_string(),
                    c.actual.to_string(),
                    if c.pass { "PASS" } else { "FAIL" }.to_string(),
                ]
            })
            .collect();
        let mut out = String::new();
        if format == OutputFormat::Text {
            out.push_str(&format!("{}: {}\n", self.table, self.description));
        }
        out.push_str(&render_table(
            &["column", "row", "expected", "actual", "status"],
            &rows,
            format,
        ));
        if format == OutputFormat::Text {
            for s in &self.skipped {
                out.push_str(&format!("skipped {s} (needs --slow)\n"));
            }
            for c in self.mismatches() {
                out.push_str(&format!(
                    "- {} {}: expected {}\n+ {} {}: actual {}\n",
                    c.column, c.row, c.expected, c.column, c.row, c.actual
                ));
            }
            out.push_str(if self.pass { "PASS\n" } else { "FAIL\n" });
        }
        out
    }
}

/// Settings shared by table runs.
#[derive(Clone, Debug)]
pub struct TableOptions {
    pub slow: bool,
    pub threads: usize,
    pub cap: u128,
    /// Primes for the half affine table; empty means the defaults.
    pub primes: Vec<u32>,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            slow: false,
            threads: 1,
            cap: DEFAULT_CAP,
            primes: Vec::new(),
        }
    }
}

/// Explicit enumeration is used when at most this many objects exist and the group is larger
/// than the domain; otherwise the counting lemma over the cycle-type histogram.
pub const ENUMERATION_LIMIT: u128 = 5_000_000;

/// Groups whose cycle-type sweep takes tens of seconds; cells needing it run only with `--slow`.
pub const SLOW_GROUPS: [&str; 1] = ["M24"];

const FOUR_HOM: [(&str, [u64; 5]); 7] = [
    ("PSL(2,8)", [1, 4, 4, 12, 5]),
    ("PGammaL(2,8)", [1, 2, 2, 4, 3]),
    ("M11", [2, 3, 2, 8, 6]),
    ("M12", [1, 2, 2, 3, 5]),
    ("M23", [2, 4, 3, 11, 18]),
    ("M24", [1, 2, 2, 3, 7]),
    ("PGammaL(2,32)", [3, 112, 82, 2772, 9191]),
];
const FOUR_HOM_SHAPES: [&[usize]; 5] = [&[5], &[4, 2], &[3, 3], &[3, 2, 2], &[2, 2, 2, 2]];

const FIVE_HOM: [(&str, [u64; 7]); 2] = [("M12", [2, 2, 2, 5, 5, 8, 6]), ("M24", [2, 3, 3, 8, 8, 22, 31])];
const FIVE_HOM_SHAPES: [&[usize]; 7] = [
    &[6],
    &[5, 2],
    &[4, 3],
    &[4, 2, 2],
    &[3, 3, 2],
    &[3, 2, 2, 2],
    &[2, 2, 2, 2, 2],
];

const THREE_SHAPES: [&[usize]; 3] = [&[4], &[3, 2], &[2, 2, 2]];

const AGL2: [(&str, [u64; 3]); 3] = [
    ("AGL(3,2)", [2, 2, 3]),
    ("AGL(4,2)", [2, 3, 6]),
    ("AGL(5,2)", [2, 3, 7]),
];

const THREE_HOM: [(&str, [u64; 3]); 18] = [
    ("AGL(1,8)", [2, 10, 11]),
    ("AGammaL(1,8)", [2, 4, 5]),
    ("PSL(2,7)", [3, 4, 7]),
    ("PGL(2,7)", [2, 3, 5]),
    ("PSL(2,8)", [1, 4, 7]),
    ("PGammaL(2,8)", [1, 2, 3]),
    ("PGL(2,9)", [2, 5, 12]),
    ("M10", [2, 5, 9]),
    ("PGammaL(2,9)", [2, 4, 8]),
    ("M11", [1, 2, 4]),
    ("M11@12", [2, 4, 6]),
    ("M12", [1, 1, 3]),
    ("2^4:A7", [2, 4, 10]),
    ("M22", [2, 5, 11]),
    ("M22:2", [2, 4, 10]),
    ("M23", [1, 2, 3]),
    ("M24", [1, 1, 2]),
    ("PGammaL(2,32)", [1, 16, 127]),
];

/// Orbit counts and stabilizer census of `PSL(2,16)`: orbits, then stabilizers `G`, `G:2`, `G:4`.
const PSL216: [[u64; 3]; 4] = [[3, 19, 72], [0, 12, 60], [2, 6, 10], [1, 1, 2]];
const PSL216_ROWS: [&str; 4] = ["orbits", "G", "G:2", "G:4"];

const HALF_AFFINE_PRIMES: [u32; 2] = [11, 23];

/// `(label, group, rank offset k with r = n − k, expected)`.
const GENS: [(&str, &str, usize, u64); 11] = [
    ("n-1", "C5", 1, 2),
    ("n-1", "C7", 1, 3),
    ("n-1", "C11", 1, 5),
    ("n-1", "C13", 1, 6),
    ("n-1", "D7", 1, 3),
    ("n-1", "D11", 1, 5),
    ("n-3", "PGammaL(2,32)", 3, 144),
    ("n-4", "PGammaL(2,32)", 4, 12160),
    ("n-5", "M24", 5, 77),
    ("n-5", "S12", 5, 7),
    ("n-4", "S12", 4, 5),
];

/// Recomputes tables, building each group once.
pub struct TableRunner {
    opts: TableOptions,
    data: GeneratorData,
    groups: RefCell<HashMap<GroupSpec, Rc<PermGroup>>>,
}

impl TableRunner {
    pub fn new(opts: TableOptions) -> Self {
        Self::with_data(opts, GeneratorData::bundled().clone())
    }

    pub fn with_data(opts: TableOptions, data: GeneratorData) -> Self {
        TableRunner {
            opts,
            data,
            groups: RefCell::new(HashMap::new()),
        }
    }

    pub fn options(&self) -> &TableOptions {
        &self.opts
    }

    /// The catalog group named `name`, built on first use.
    pub fn group(&self, name: &str) -> Result<Rc<PermGroup>> {
        let spec: GroupSpec = name.parse()?;
        if let Some(g) = self.groups.borrow().get(&spec) {
            return Ok(g.clone());
        }
        let g = Rc::new(build_with(&spec, &self.data)?);
        self.groups.borrow_mut().insert(spec, g.clone());
        Ok(g)
    }

    fn is_slow(&self, name: &str) -> bool {
        !self.opts.slow && SLOW_GROUPS.contains(&name)
    }

    /// Whether [`orbit_count`](Self::orbit_count) enumerates rather than sweeping the group.
    pub fn enumerates(&self, g: &PermGroup, shape: &PartitionShape) -> bool {
        let total = shape.total_count().to_u128().unwrap_or(u128::MAX);
        total <= ENUMERATION_LIMIT.min(self.opts.cap) && g.order_u128() > total
    }

    /// Orbits of `g` on partitions of `shape`, by enumeration or the counting lemma.
    pub fn orbit_count(&self, g: &PermGroup, shape: &PartitionShape) -> Result<u64> {
        let count = if self.enumerates(g, shape) {
            enumerate_orbits(g, shape, self.opts.cap)?.count
        } else {
            g.cycle_type_histogram_threaded(self.opts.threads);
            burnside_orbit_count(g, shape)?
        };
        count
            .to_u64()
            .ok_or_else(|| Error::Unsupported(format!("orbit count {count} exceeds u64")))
    }

    fn columns<const K: usize>(
        &self,
        id: TableId,
        columns: &[(&str, [u64; K])],
        shapes: &[&[usize]; K],
        with_total: bool,
    ) -> Result<TableReport> {
        let mut cells = Vec::new();
        let mut skipped = Vec::new();
        for (name, expected) in columns {
            let g = self.group(name)?;
            let shapes: Vec<PartitionShape> = shapes
                .iter()
                .map(|s| PartitionShape::from_support(g.degree(), s))
                .collect::<Result<_>>()?;
            if self.is_slow(name) && !shapes.iter().all(|s| self.enumerates(&g, s)) {
                skipped.push(name.to_string());
                continue;
            }
            let mut total = 0;
            for (shape, &want) in shapes.iter().zip(expected) {
                let got = self.orbit_count(&g, shape)?;
                total += got;
                cells.push(cell(shape.to_string(), name, want, got));
            }
            if with_total {
                cells.push(cell("total".into(), name, expected.iter().sum(), total));
            }
        }
        Ok(finish(id, cells, skipped))
    }

    pub fn run(&self, id: TableId) -> Result<TableReport> {
        match id {
            TableId::FourHom => self.columns(id, &FOUR_HOM, &FOUR_HOM_SHAPES, true),
            TableId::FiveHom => self.columns(id, &FIVE_HOM, &FIVE_HOM_SHAPES, true),
            TableId::Agl2 => self.columns(id, &AGL2, &THREE_SHAPES, true),
            TableId::ThreeHom => self.columns(id, &THREE_HOM, &THREE_SHAPES, true),
            TableId::Psl216 => self.psl216(),
            TableId::HalfAffine => self.half_affine(),
            TableId::Gens => self.gens(),
        }
    }

    fn psl216(&self) -> Result<TableReport> {
        let spec: GroupSpec = "PSL(2,16)".parse()?;
        let g = self.group("PSL(2,16)")?;
        let n = normalizer_in_sym_with(&spec, &self.data)?;
        let mut actual = [[0u64; 3]; 4];
        for (j, support) in THREE_SHAPES.iter().enumerate() {
            let shape = PartitionShape::from_support(17, support)?;
            let r = fuse(&g, &n, &shape, self.opts.cap)?;
            actual[0][j] = r.group_orbits as u64;
            for (i, label) in PSL216_ROWS.iter().enumerate().skip(1) {
                actual[i][j] = r.census_count(label) as u64;
            }
        }
        let mut cells = Vec::new();
        for (i, row) in PSL216_ROWS.iter().enumerate() {
            for (j, support) in THREE_SHAPES.iter().enumerate() {
                let shape = PartitionShape::from_support(17, support)?;
                cells.push(cell(
                    row.to_string(),
                    &shape.to_string(),
                    PSL216[i][j],
                    actual[i][j],
                ));
            }
            cells.push(cell(
                row.to_string(),
                "total",
                PSL216[i].iter().sum(),
                actual[i].iter().sum(),
            ));
        }
        Ok(finish(TableId::Psl216, cells, Vec::new()))
    }

    fn half_affine(&self) -> Result<TableReport> {
        let primes = if self.opts.primes.is_empty() {
            HALF_AFFINE_PRIMES.to_vec()
        } else {
            self.opts.primes.clone()
        };
        let mut cells = Vec::new();
        for p in primes {
            let r = half_affine_check(p)?;
            let column = format!("p={p}");
            let n = p as usize;
            for (j, support) in [&[3][..], &[2, 2]].iter().enumerate() {
                let shape = PartitionShape::from_support(n, support)?;
                cells.push(cell(shape.to_string(), &column, r.expected[j], r.counts[j]));
            }
            cells.push(cell("total".into(), &column, r.expected_total, r.total));
        }
        Ok(finish(TableId::HalfAffine, cells, Vec::new()))
    }

    fn gens(&self) -> Result<TableReport> {
        let mut cells = Vec::new();
        let mut skipped = Vec::new();
        for (label, name, k, want) in GENS {
            if self.is_slow(name) {
                skipped.push(format!("{name} {label}"));
                continue;
            }
            let g = self.group(name)?;
            g.cycle_type_histogram_threaded(self.opts.threads);
            let r = required_generator_count_in(&g, g.degree() - k)?;
            let got = r.total.to_u64().unwrap_or(u64::MAX);
            cells.push(cell(format!("rank {label}"), name, want, got));
        }
        Ok(finish(TableId::Gens, cells, skipped))
    }
}

fn cell(row: String, column: &str, expected: u64, actual: u64) -> Cell {
    Cell {
        row,
        column: column.to_string(),
        expected,
        actual,
        pass: expected == actual,
    }
}

fn finish(id: TableId, cells: Vec<Cell>, skipped: Vec<String>) -> TableReport {
    TableReport {
        table: id.name().to_string(),
        description: id.description().to_string(),
        pass: cells.iter().all(|c| c.pass),
        cells,
        skipped,
    }
}

/// The expected values of a table, independent of any computation; used by tests.
pub fn expected_total(id: TableId, column: &str) -> Option<u64> {
    let sum = |v: &[u64]| v.iter().sum();
    match id {
        TableId::FourHom => FOUR_HOM.iter().find(|c| c.0 == column).map(|c| sum(&c.1)),
        TableId::FiveHom => FIVE_HOM.iter().find(|c| c.0 == column).map(|c| sum(&c.1)),
        TableId::Agl2 => AGL2.iter().find(|c| c.0 == column).map(|c| sum(&c.1)),
        TableId::ThreeHom => THREE_HOM.iter().find(|c| c.0 == column).map(|c| sum(&c.1)),
        _ => None,
    }
}
