//! Command-line front end: range solving, output formatting and comparison
//! against a reference table.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use clap::{Parser, ValueEnum};
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::solver::{solve_range_with_progress, Progress, Solution};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

pub const CSV_HEADER: &str = "r,x_abs,y,n";

const REFERENCE_CSV: &str = include_str!("../data/reference_table.csv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "ap-squares",
    about = "Primitive solutions of (x-r)^2 + x^2 + (x+r)^2 = y^n"
)]
pub struct Args {
    #[arg(long = "r-min", default_value_t = 1)]
    pub r_min: u64,
    #[arg(long = "r-max", default_value_t = 5000)]
    pub r_max: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Also emit composite exponents recovered from perfect-power y.
    #[arg(long = "include-composite")]
    pub include_composite: bool,
    /// Worker threads; defaults to the number of available cores.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Reference CSV (header r,x_abs,y,n) to compare the output against.
    #[arg(long)]
    pub compare: Option<PathBuf>,
    /// Re-check every row against 3x^2 + 2r^2 = y^n before printing.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub r_min: u64,
    pub r_max: u64,
    pub format: OutputFormat,
    pub include_composite: bool,
    pub jobs: usize,
    pub compare_path: Option<PathBuf>,
    pub verify: bool,
}

impl RunConfig {
    pub fn new(r_min: u64, r_max: u64) -> Self {
        RunConfig {
            r_min,
            r_max,
            format: OutputFormat::Csv,
            include_composite: false,
            jobs: 1,
            compare_path: None,
            verify: false,
        }
    }

    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.r_min == 0 {
            return Err("--r-min must be at least 1".into());
        }
        if self.r_min > self.r_max {
            return Err(format!(
                "--r-min ({}) must not exceed --r-max ({})",
                self.r_min, self.r_max
            ));
        }
        if self.jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        Ok(())
    }
}

impl From<Args> for RunConfig {
    fn from(a: Args) -> Self {
        RunConfig {
            r_min: a.r_min,
            r_max: a.r_max,
            format: a.format,
            include_composite: a.include_composite,
            jobs: a
                .jobs
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())),
            compare_path: a.compare,
            verify: a.verify,
        }
    }
}

/// Parses a reference CSV; every row must verify as a primitive solution.
pub fn parse_reference<R: Read>(reader: R, origin: &Path) -> Result<Vec<Solution>> {
    let err = |line: u64, reason: String| Error::Reference {
        path: origin.to_path_buf(),
        line,
        reason,
    };
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
    let header = rdr.headers().map_err(|e| err(1, e.to_string()))?;
    if header.iter().collect::<Vec<_>>() != ["r", "x_abs", "y", "n"] {
        return Err(err(1, format!("expected header `{CSV_HEADER}`")));
    }
    let mut rows = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            err(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let field = |i: usize| record.get(i).unwrap_or("").trim();
        let r: u64 = field(0)
            .parse()
            .map_err(|_| err(line, format!("bad r `{}`", field(0))))?;
        let x_abs: BigUint = field(1)
            .parse()
            .map_err(|_| err(line, format!("bad x_abs `{}`", field(1))))?;
        let y: BigUint = field(2)
            .parse()
            .map_err(|_| err(line, format!("bad y `{}`", field(2))))?;
        let n: u32 = field(3)
            .parse()
            .map_err(|_| err(line, format!("bad n `{}`", field(3))))?;
        let sol = Solution { r, x_abs, y, n };
        if !sol.verify() {
            return Err(err(
                line,
                format!("row {r},{},{},{n} is not a primitive solution", sol.x_abs, sol.y),
            ));
        }
        rows.push(sol);
    }
    Ok(rows)
}

pub fn load_reference(path: &Path) -> Result<Vec<Solution>> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_reference(file, path)
}

/// The published table for `1 ≤ r ≤ 5000`, shipped with the crate.
pub fn reference_table() -> Vec<Solution> {
    parse_reference(REFERENCE_CSV.as_bytes(), Path::new("data/reference_table.csv"))
        .expect("bundled reference table is valid")
}

pub fn write_solutions(rows: &[Solution], format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
    let mut buf = String::new();
    match format {
        OutputFormat::Csv => {
            buf.push_str(CSV_HEADER);
            buf.push('\n');
            for s in rows {
                let _ = writeln!(buf, "{},{},{},{}", s.r, s.x_abs, s.y, s.n);
            }
        }
        OutputFormat::Json => {
            buf.push('[');
            for (i, s) in rows.iter().enumerate() {
                if i > 0 {
                    buf.push(',');
                }
                let _ = write!(
                    buf,
                    "\n  {{\"r\": {}, \"x_abs\": {}, \"y\": {}, \"n\": {}}}",
                    s.r, s.x_abs, s.y, s.n
                );
            }
            buf.push_str(if rows.is_empty() { "]\n" } else { "\n]\n" });
        }
        OutputFormat::Table => {
            let cells: Vec<[String; 4]> = rows
                .iter()
                .map(|s| [s.r.to_string(), s.x_abs.to_string(), s.y.to_string(), s.n.to_string()])
                .collect();
            let header = ["r", "|x|", "y", "n"];
            let mut width = header.map(str::len);
            for row in &cells {
                for (w, c) in width.iter_mut().zip(row) {
                    *w = (*w).max(c.len());
                }
            }
            let mut line = |fields: [&str; 4]| {
                let _ = writeln!(
                    buf,
                    "{:>w0$}  {:>w1$}  {:>w2$}  {:>w3$}",
                    fields[0],
                    fields[1],
                    fields[2],
                    fields[3],
                    w0 = width[0],
                    w1 = width[1],
                    w2 = width[2],
                    w3 = width[3]
                );
            };
            line(header);
            for row in &cells {
                line([&row[0], &row[1], &row[2], &row[3]]);
            }
        }
    }
    out.write_all(buf.as_bytes())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Comparison {
    pub matched: usize,
    pub missing: Vec<Solution>,
    pub extra: Vec<Solution>,
}

impl Comparison {
    pub fn is_exact(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

/// Set comparison of computed rows against reference rows.
pub fn compare(found: &[Solution], reference: &[Solution]) -> Comparison {
    use std::collections::BTreeSet;
    let found: BTreeSet<&Solution> = found.iter().collect();
    let reference: BTreeSet<&Solution> = reference.iter().collect();
    Comparison {
        matched: found.intersection(&reference).count(),
        missing: reference.difference(&found).map(|s| (*s).clone()).collect(),
        extra: found.difference(&reference).map(|s| (*s).clone()).collect(),
    }
}

/// Executes one run and returns the process exit code.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut (dyn Write + Send)) -> i32 {
    if let Err(msg) = config.validate() {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_ERROR;
    }
    // load first so a bad path fails before any solving
    let reference = match &config.compare_path {
        Some(path) => match load_reference(path) {
            Ok(rows) => Some(rows),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_ERROR;
            }
        },
        None => None,
    };

    let pool = match rayon::ThreadPoolBuilder::new().num_threads(config.jobs).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start {} workers: {e}", config.jobs);
            return EXIT_ERROR;
        }
    };
    let total = config.r_max - config.r_min + 1;
    let step = (total / 20).max(1);
    let err = Mutex::new(err);
    let rows = pool.install(|| {
        solve_range_with_progress(config.r_min, config.r_max, config.include_composite, |p: Progress| {
            if p.done % step == 0 || p.done == p.total {
                let mut e = err.lock().unwrap();
                let _ = writeln!(
                    e,
                    "progress: {}/{} values of r done (last r = {}), {} solutions",
                    p.done, p.total, p.r, p.found
                );
            }
        })
    });
    let err = err.into_inner().unwrap();

    if config.verify {
        if let Some(bad) = rows.iter().find(|s| !s.verify()) {
            let _ = writeln!(err, "error: verification failed for {bad}");
            return EXIT_ERROR;
        }
        let _ = writeln!(err, "verified {} rows", rows.len());
    }

    if let Err(e) = write_solutions(&rows, config.format, out) {
        let _ = writeln!(err, "error: writing output: {e}");
        return EXIT_ERROR;
    }

    let Some(reference) = reference else {
        return EXIT_OK;
    };
    let in_range: Vec<Solution> = reference
        .into_iter()
        .filter(|s| (config.r_min..=config.r_max).contains(&s.r))
        .collect();
    let cmp = compare(&rows, &in_range);
    for s in &cmp.missing {
        let _ = writeln!(err, "missing: {},{},{},{}", s.r, s.x_abs, s.y, s.n);
    }
    for s in &cmp.extra {
        let _ = writeln!(err, "extra: {},{},{},{}", s.r, s.x_abs, s.y, s.n);
    }
    if cmp.is_exact() {
        let _ = writeln!(err, "{} rows matched", cmp.matched);
        EXIT_OK
    } else {
        let _ = writeln!(
            err,
            "{} rows matched, {} missing, {} extra",
            cmp.matched,
            cmp.missing.len(),
            cmp.extra.len()
        );
        EXIT_MISMATCH
    }
}

/// Parses `args` (including the program name) and runs.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Args::try_parse_from(args) {
        Ok(args) => run(&RunConfig::from(args), out, err),
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = write!(err, "{}", e.render());
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            }
        }
    }
}
