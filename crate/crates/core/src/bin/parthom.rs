use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use parthom::catalog::{build_with, normalizer_in_sym_with, GeneratorData, GroupSpec};
use parthom::closedness::{fuse, ProbeReport, PROBE_CAP};
use parthom::partorbits::{
    burnside_report, enumerate_orbits, is_k_homogeneous, OrbitReport, PartitionShape, DEFAULT_CAP,
};
use parthom::permcore::PermGroup;
use parthom::report::{render_table, OutputFormat};
use parthom::semigroupkit::{
    canonical_map, two_generation_in, verify, TwoGeneration, DEFAULT_SEMIGROUP_CAP, DEFAULT_TWO_GEN_BUDGET,
    MAX_TWO_GEN_DEGREE,
};
use parthom::tables::{TableId, TableOptions, TableRunner};
use parthom::Error;

const EXIT_MISMATCH: u8 = 1;
const EXIT_HYPOTHESIS: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_INPUT: u8 = 4;

/// Orbits of permutation groups on set partitions, closedness under normalizers, and
/// transformation-semigroup checks.
#[derive(Parser)]
#[command(name = "parthom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format: text, csv or json.
    #[arg(long, global = true, default_value = "text")]
    format: OutputFormat,
    /// Worker threads for cycle-type sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Object cap for explicit enumeration and closures.
    #[arg(long, global = true)]
    cap: Option<u128>,
    /// Seed for sampled checks and random searches.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Include cells that need the long M24 sweep.
    #[arg(long, global = true)]
    slow: bool,
    /// Generator data file replacing the bundled one.
    #[arg(long, global = true)]
    data: Option<PathBuf>,
    /// Report wall-clock time on stderr.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute a reference table: 4hom, 5hom, agl2, 3hom, psl216, example28, gens.
    Table {
        id: TableId,
        /// Prime for the half affine table (repeatable).
        #[arg(long = "p")]
        primes: Vec<u32>,
    },
    /// Orbits of a group on partitions of one shape.
    Orbits {
        group: GroupSpec,
        /// Shape such as `3,2,1...` or `(2,2,1^5)`.
        shape: String,
        /// List the orbits by explicit enumeration.
        #[arg(long)]
        list: bool,
    },
    /// Whether every orbit on a shape is invariant under the normalizer in S_n.
    Closed { group: GroupSpec, shape: String },
    /// Closedness of PXL(2,q) on (4,1,...) partitions, within the object cap.
    Probe { q: u32 },
    /// Semigroup checks for a group and a map of the given kernel type.
    Verify {
        group: GroupSpec,
        kernel_type: String,
        /// Degree, when it differs from the group's.
        n: Option<usize>,
    },
    /// Whether a group is k-homogeneous.
    Homog { group: GroupSpec, k: usize },
    /// A verified generating pair of a 2-homogeneous group.
    Twogen {
        group: GroupSpec,
        #[arg(long, default_value_t = DEFAULT_TWO_GEN_BUDGET)]
        budget: usize,
    },
}

struct Run {
    cli: Cli,
    data: GeneratorData,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let data = match &cli.data {
        Some(p) => match GeneratorData::from_path(p) {
            Ok(d) => d,
            Err(e) => return fail(&e),
        },
        None => GeneratorData::bundled().clone(),
    };
    let start = Instant::now();
    let run = Run { cli, data };
    let code = match run.dispatch() {
        Ok(code) => code,
        Err(e) => fail(&e),
    };
    if run.cli.timing {
        eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    code
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Integrity(_) => EXIT_MISMATCH,
        Error::NotNormal(_) => EXIT_HYPOTHESIS,
        _ => EXIT_INPUT,
    })
}

fn status(ok: bool, code: u8) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(code)
    }
}

impl Run {
    fn format(&self) -> OutputFormat {
        self.cli.format
    }

    fn group(&self, spec: &GroupSpec) -> Result<PermGroup, Error> {
        build_with(spec, &self.data)
    }

    fn json<T: Serialize>(&self, value: &T) {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("report serializes")
        );
    }

    /// Prints `pairs` as a two-column key/value table, or `value` as JSON.
    fn emit<T: Serialize>(&self, value: &T, pairs: Vec<(&str, String)>) {
        if self.format() == OutputFormat::Json {
            self.json(value);
            return;
        }
        let rows: Vec<Vec<String>> = pairs.into_iter().map(|(k, v)| vec![k.to_string(), v]).collect();
        print!("{}", render_table(&["field", "value"], &rows, self.format()));
    }

    fn dispatch(&self) -> Result<ExitCode, Error> {
        match &self.cli.command {
            Command::Table { id, primes } => self.table(*id, primes),
            Command::Orbits { group, shape, list } => self.orbits(group, shape, *list),
            Command::Closed { group, shape } => self.closed(group, shape),
            Command::Probe { q } => self.probe(*q),
            Command::Verify {
                group,
                kernel_type,
                n,
            } => self.verify(group, kernel_type, *n),
            Command::Homog { group, k } => self.homog(group, *k),
            Command::Twogen { group, budget } => self.twogen(group, *budget),
        }
    }

    fn table(&self, id: TableId, primes: &[u32]) -> Result<ExitCode, Error> {
        let opts = TableOptions {
            slow: self.cli.slow,
            threads: self.cli.threads,
            cap: self.cli.cap.unwrap_or(DEFAULT_CAP),
            primes: primes.to_vec(),
        };
        let report = TableRunner::with_data(opts, self.data.clone()).run(id)?;
        print!("{}", report.render(self.format()));
        Ok(status(report.pass, EXIT_MISMATCH))
    }

    fn orbits(&self, spec: &GroupSpec, shape: &str, list: bool) -> Result<ExitCode, Error> {
        let g = self.group(spec)?;
        let shape = PartitionShape::parse(shape, g.degree())?;
        let report = if list {
            enumerate_orbits(&g, &shape, self.cli.cap.unwrap_or(DEFAULT_CAP))?
        } else {
            g.cycle_type_histogram_threaded(self.cli.threads);
            burnside_report(&g, &shape)?
        };
        match (self.format(), &report.orbits) {
            (OutputFormat::Json, _) | (_, None) => {
                print!(
                    "{}",
                    OrbitReport::render(std::slice::from_ref(&report), self.format())
                )
            }
            (format, Some(orbits)) => {
                let rows: Vec<Vec<String>> = orbits
                    .iter()
                    .map(|o| vec![o.rep.clone(), o.size.to_string(), o.stabilizer_order.to_string()])
                    .collect();
                print!(
                    "{}",
                    render_table(&["representative", "size", "stabilizer"], &rows, format)
                );
            }
        }
        Ok(ExitCode::SUCCESS)
    }

    fn closed(&self, spec: &GroupSpec, shape: &str) -> Result<ExitCode, Error> {
        let g = self.group(spec)?;
        let n = normalizer_in_sym_with(spec, &self.data)?;
        let shape = PartitionShape::parse(shape, g.degree())?;
        let r = fuse(&g, &n, &shape, self.cli.cap.unwrap_or(DEFAULT_CAP))?;
        let census: Vec<String> = r.census.iter().map(|(k, v)| format!("{k}={v}")).collect();
        self.emit(
            &r,
            vec![
                ("group", r.group.clone()),
                ("normalizer", r.normalizer.clone()),
                ("shape", r.shape.clone()),
                ("quotient order", r.quotient_order.to_string()),
                ("group orbits", r.group_orbits.to_string()),
                ("normalizer orbits", r.normalizer_orbits.to_string()),
                ("stabilizers", census.join(" ")),
                ("closed", r.closed.to_string()),
            ],
        );
        Ok(ExitCode::SUCCESS)
    }

    fn probe(&self, q: u32) -> Result<ExitCode, Error> {
        let cap = self.cli.cap.unwrap_or(PROBE_CAP);
        let spec = GroupSpec::new(parthom::catalog::Family::PXL2, q)?;
        let shape = PartitionShape::from_support(spec.degree(), &[4])?;
        let objects = shape.total_count();
        let mut report = ProbeReport {
            q,
            complete: false,
            objects: objects.to_string(),
            cap: cap.to_string(),
            fusion: None,
        };
        if objects <= cap.into() {
            let g = self.group(&spec)?;
            let n = normalizer_in_sym_with(&spec, &self.data)?;
            report.fusion = Some(fuse(&g, &n, &shape, cap)?);
            report.complete = true;
        }
        let verdict = match &report.fusion {
            Some(f) => f.closed.to_string(),
            None => "undecided (cap)".to_string(),
        };
        self.emit(
            &report,
            vec![
                ("q", q.to_string()),
                ("objects", report.objects.clone()),
                ("cap", report.cap.clone()),
                ("closed", verdict),
            ],
        );
        Ok(ExitCode::SUCCESS)
    }

    fn verify(&self, spec: &GroupSpec, kernel_type: &str, n: Option<usize>) -> Result<ExitCode, Error> {
        let g = self.group(spec)?;
        if let Some(n) = n.filter(|&n| n != g.degree()) {
            return Err(Error::DegreeMismatch(g.degree(), n));
        }
        let shape = PartitionShape::parse(kernel_type, g.degree())?;
        let t = canonical_map(&shape)?;
        let cap = self
            .cli
            .cap
            .map_or(DEFAULT_SEMIGROUP_CAP, |c| c.min(usize::MAX as u128) as usize);
        let r = verify(&g, &t, self.cli.seed, cap)?;
        let show = |x: Option<bool>| match x {
            Some(true) => "PASS".to_string(),
            Some(false) => "FAIL".to_string(),
            None => "not run".to_string(),
        };
        self.emit(
            &r,
            vec![
                ("group", r.group.clone()),
                ("map", t.to_string()),
                ("kernel type", r.kernel_type.clone()),
                ("one orbit", r.hypotheses.one_orbit.to_string()),
                ("homogeneous", r.hypotheses.homogeneous.to_string()),
                ("sandwich", show(r.checks.sandwich)),
                ("characterization", show(r.checks.characterization)),
                ("greens", show(r.checks.greens)),
                ("idempotent match", show(r.checks.idempotent_match)),
                ("semigroup size", r.sizes.semigroup.to_string()),
                ("idempotents", r.sizes.idempotents.to_string()),
            ],
        );
        if !r.passed() {
            return Ok(ExitCode::from(EXIT_MISMATCH));
        }
        Ok(status(r.applicable(), EXIT_HYPOTHESIS))
    }

    fn homog(&self, spec: &GroupSpec, k: usize) -> Result<ExitCode, Error> {
        let g = self.group(spec)?;
        let h = is_k_homogeneous(&g, k)?;
        #[derive(Serialize)]
        struct Homog<'a> {
            group: &'a str,
            k: usize,
            homogeneous: bool,
        }
        self.emit(
            &Homog {
                group: g.name(),
                k,
                homogeneous: h,
            },
            vec![
                ("group", g.name().to_string()),
                ("k", k.to_string()),
                ("homogeneous", h.to_string()),
            ],
        );
        Ok(ExitCode::SUCCESS)
    }

    fn twogen(&self, spec: &GroupSpec, budget: usize) -> Result<ExitCode, Error> {
        if spec.degree() > MAX_TWO_GEN_DEGREE {
            return Err(Error::Unsupported(format!(
                "degree {} exceeds {MAX_TWO_GEN_DEGREE}",
                spec.degree()
            )));
        }
        let g = build_with(spec, &self.data)?;
        #[derive(Serialize)]
        struct TwoGen {
            group: String,
            order: String,
            found: bool,
            a: Option<String>,
            b: Option<String>,
            attempts: usize,
            reason: Option<String>,
        }
        let mut out = TwoGen {
            group: g.name().to_string(),
            order: g.order().to_string(),
            found: false,
            a: None,
            b: None,
            attempts: 0,
            reason: None,
        };
        let code = match two_generation_in(&g, self.cli.seed, budget)? {
            TwoGeneration::Found { a, b, attempts } => {
                out.found = true;
                out.a = Some(a.to_string());
                out.b = Some(b.to_string());
                out.attempts = attempts;
                ExitCode::SUCCESS
            }
            TwoGeneration::NotTwoHomogeneous => {
                out.reason = Some("not 2-homogeneous".into());
                ExitCode::from(EXIT_HYPOTHESIS)
            }
            TwoGeneration::BudgetExhausted { attempts } => {
                out.attempts = attempts;
                out.reason = Some("attempt budget exhausted".into());
                ExitCode::from(EXIT_CAP)
            }
        };
        let opt = |x: &Option<String>| x.clone().unwrap_or_else(|| "-".into());
        self.emit(
            &out,
            vec![
                ("group", out.group.clone()),
                ("order", out.order.clone()),
                ("a", opt(&out.a)),
                ("b", opt(&out.b)),
                ("attempts", out.attempts.to_string()),
                (
                    "result",
                    out.reason
                        .clone()
                        .unwrap_or_else(|| "generating pair verified".into()),
                ),
            ],
        );
        Ok(code)
    }
}
