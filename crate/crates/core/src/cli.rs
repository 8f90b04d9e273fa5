//! Command-line driver: verification suites, pants diameters, grid tables,
//! scheme configs and mesh dumps.

use crate::error::GeomError;
use crate::hplane::{self, estimate_diameter, glued_pants_mesh, pants_mesh, DEFAULT_RESOLUTION};
use crate::hyptrig::{collar_width, hexagon_opposite, pentagon_opposite, regular_hexagon_side, square_side_for_cuff};
use crate::pants::{diameter_bound, CuffTriple};
use crate::quadlemma::{self, Arc, ChordConfig, Verdict};
use crate::surfaces::{
    self, build_square_grid, cuff_lower_bound_bounded_gluing, cuff_lower_bound_no_gluing, gluing_bound,
    outer_geodesic_lower_bound, systole_estimate, GluingBound, SchemeConfig, SchemeKind,
};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Parser)]
#[command(name = "pantsbound", version, about = "Pants diameter bounds and grid-surface cuff bounds, with numeric checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Trig,
    Pants,
    Trunc,
    Lemma42,
    Grid,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite; exits nonzero if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: f64,
        /// Number of random cases (pants triples or chord configs).
        #[arg(long)]
        count: Option<usize>,
        /// Write the structured report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Mesh diameter of one pants against its analytic bound.
    PantsDiam {
        /// Cuff lengths `l1,l2,l3`; 0 marks a cusp.
        #[arg(long, value_parser = parse_cuffs)]
        cuffs: CuffTriple,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: f64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Table of cuff lower bounds for the grid surface under a gluing scheme.
    Grid {
        /// Square side; taken from the config when `--scheme @file` is used.
        #[arg(long)]
        b: Option<f64>,
        /// Range `a..b` of block sizes, inclusive.
        #[arg(long, value_parser = parse_range)]
        m: (u32, u32),
        /// Scheme name, or `@path` to a config document.
        #[arg(long, default_value = "qch")]
        scheme: String,
        /// Boundary separation; estimated on a mesh when omitted.
        #[arg(long)]
        d: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: f64,
    },
    /// Validate a scheme config and print its canonical form.
    Scheme { path: PathBuf },
    /// Write the pants mesh as a vertex/edge list.
    MeshDump {
        #[arg(long, value_parser = parse_cuffs)]
        cuffs: CuffTriple,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: f64,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_cuffs(s: &str) -> Result<CuffTriple, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    if v.len() != 3 {
        return Err(format!("expected three cuffs, got {}", v.len()));
    }
    CuffTriple::new(v[0], v[1], v[2]).map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let (a, b): (u32, u32) = (a.parse().map_err(|e| format!("{e}"))?, b.parse().map_err(|e| format!("{e}"))?);
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

/// One check: the analytic side, the computed side, and the signed margin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub analytic_value: f64,
    pub numeric_value: f64,
    pub margin: f64,
    pub pass: bool,
}

impl CheckRecord {
    /// `numeric <= analytic`.
    pub fn upper_bound(name: impl Into<String>, analytic: f64, numeric: f64) -> Self {
        let margin = analytic - numeric;
        CheckRecord { name: name.into(), analytic_value: analytic, numeric_value: numeric, margin, pass: margin >= 0.0 }
    }

    /// `numeric >= analytic`.
    pub fn lower_bound(name: impl Into<String>, analytic: f64, numeric: f64) -> Self {
        let margin = numeric - analytic;
        CheckRecord { name: name.into(), analytic_value: analytic, numeric_value: numeric, margin, pass: margin >= 0.0 }
    }

    /// `|numeric - analytic| <= tol`; the margin is the unused tolerance.
    pub fn close(name: impl Into<String>, analytic: f64, numeric: f64, tol: f64) -> Self {
        let margin = tol - (numeric - analytic).abs();
        CheckRecord { name: name.into(), analytic_value: analytic, numeric_value: numeric, margin, pass: margin >= 0.0 }
    }

    /// A yes/no check recorded as 1 (expected) against 1 or 0.
    pub fn holds(name: impl Into<String>, ok: bool) -> Self {
        CheckRecord {
            name: name.into(),
            analytic_value: 1.0,
            numeric_value: if ok { 1.0 } else { 0.0 },
            margin: if ok { 0.0 } else { -1.0 },
            pass: ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub checks: Vec<CheckRecord>,
    pub wall_time_s: f64,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn print_summary(&self, mut out: impl Write) -> std::io::Result<()> {
        for c in &self.checks {
            writeln!(
                out,
                "{} {}  analytic={:.9} numeric={:.9} margin={:.3e}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.analytic_value,
                c.numeric_value,
                c.margin
            )?;
        }
        let failed = self.checks.iter().filter(|c| !c.pass).count();
        writeln!(out, "{}: {} checks, {} failed, {:.2}s", self.command, self.checks.len(), failed, self.wall_time_s)
    }

    pub fn write_json(&self, path: &Path) -> std::io::Result<()> {
        let text = serde_json::to_string_pretty(self).map_err(std::io::Error::other)?;
        std::fs::write(path, text + "\n")
    }
}

/// Random cuff triple with the given number of cusps and geodesic cuffs
/// uniform in `[0.5, 4]`.
pub fn random_cuffs(rng: &mut impl Rng, cusps: usize) -> CuffTriple {
    let mut c = [0.0; 3];
    for x in c.iter_mut().skip(cusps) {
        *x = rng.gen_range(0.5..=4.0);
    }
    CuffTriple::new(c[0], c[1], c[2]).expect("cuffs in range")
}

pub fn suite_trig(seed: u64) -> Vec<CheckRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let l: f64 = rng.gen_range(0.01..20.0);
        let v = collar_width(l).expect("positive").sinh() * (l / 2.0).sinh();
        worst = worst.max((v - 1.0).abs());
    }
    let s = regular_hexagon_side();
    let asinh1 = 1.0_f64.asinh();
    let b_star = square_side_for_cuff(2.0 * asinh1).expect("positive cuff");
    let c_star = pentagon_opposite(b_star, b_star).expect("valid").side().unwrap_or(f64::NAN);
    let mut round_trip = 0.0f64;
    for _ in 0..1000 {
        let b: f64 = rng.gen_range(0.9..5.0);
        let c = pentagon_opposite(b, b).expect("sinh b > 1").side().unwrap_or(f64::NAN);
        round_trip = round_trip.max((square_side_for_cuff(4.0 * c).unwrap_or(f64::NAN) - b).abs());
    }
    vec![
        CheckRecord::close("collar identity, 1000 random lengths (max |err|)", 0.0, worst, 1e-12),
        CheckRecord::close("regular hexagon side cosh s", 2.0, s.cosh(), 1e-12),
        CheckRecord::close("regular hexagon fixed point", s, hexagon_opposite(s, s, s).unwrap_or(f64::NAN), 1e-9),
        CheckRecord::close("square with inner cuff 2 asinh 1", 2.0 * asinh1, 4.0 * c_star, 1e-9),
        CheckRecord::close("square side round trip (max |err|)", 0.0, round_trip, 1e-12),
        CheckRecord::close(
            "hexagon with unit sinh sides",
            3.0_f64.acosh(),
            hexagon_opposite(asinh1, asinh1, 0.0).unwrap_or(f64::NAN),
            1e-12,
        ),
    ]
}

/// Mesh diameter of one pants against its analytic bound.
pub fn pants_check(cuffs: &CuffTriple, h: f64) -> crate::error::Result<CheckRecord> {
    let est = estimate_diameter(&pants_mesh(cuffs, h)?);
    let [a, b, c] = cuffs.cuffs();
    Ok(CheckRecord::upper_bound(
        format!("diameter of pants ({a:.4}, {b:.4}, {c:.4})"),
        diameter_bound(cuffs)?,
        est.certified_upper,
    ))
}

pub fn suite_pants(seed: u64, h: f64, count: usize) -> crate::error::Result<Vec<CheckRecord>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..count {
        out.push(pants_check(&random_cuffs(&mut rng, 0), h)?);
    }
    out.push(inequality_chain(&mut rng, h, 1000)?);
    Ok(out)
}

/// Distances inside a pants never grow when a second pants is glued along
/// a cuff: for sampled vertex pairs, glued distance <= lone distance.
pub fn inequality_chain(rng: &mut impl Rng, h: f64, pairs: usize) -> crate::error::Result<CheckRecord> {
    let p = random_cuffs(rng, 0);
    let shared = p.cuffs()[0];
    let q = CuffTriple::new(shared, rng.gen_range(0.5..=4.0), rng.gen_range(0.5..=4.0))?;
    let lone = pants_mesh(&p, h)?;
    let glued = glued_pants_mesh(&p, 0, &q, 0, h)?;
    let n = lone.vertex_count();
    let to_glued = |v: u32| {
        let (copy, point) = lone.position(v);
        let local = lone.copy_vertices(copy).iter().position(|&g| g == v).expect("vertex of its copy");
        let gv = glued.copy_vertices(copy)[local];
        debug_assert!(glued.position(gv).1.dist_fast(&point) < 1e-12);
        gv
    };
    let mut worst = f64::NEG_INFINITY;
    let sources: Vec<u32> = (0..pairs.div_ceil(20)).map(|_| rng.gen_range(0..n as u32)).collect();
    for &s in &sources {
        let di = lone.graph().distances_from(s);
        let de = glued.graph().distances_from(to_glued(s));
        for _ in 0..20 {
            let t = rng.gen_range(0..n as u32);
            worst = worst.max(de[to_glued(t) as usize] - di[t as usize]);
        }
    }
    Ok(CheckRecord::upper_bound(
        format!("extrinsic - intrinsic distance, {} pairs (max)", sources.len() * 20),
        0.0,
        worst,
    ))
}

pub fn suite_trunc(seed: u64, h: f64, count: usize) -> crate::error::Result<Vec<CheckRecord>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for cusps in [1, 2] {
        for _ in 0..count {
            out.push(pants_check(&random_cuffs(&mut rng, cusps), h)?);
        }
    }
    Ok(out)
}

pub fn suite_lemma42(seed: u64, count: usize) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let mut exhaustive = 0usize;
    let mut failures = 0usize;
    for k in 0..=4 {
        for c in quadlemma::enumerate_configs(k) {
            match quadlemma::verify_lemma(&c) {
                Verdict::HypothesisFails(_) => {}
                Verdict::Verified(_) => exhaustive += 1,
                Verdict::Counterexample => failures += 1,
            }
        }
    }
    out.push(CheckRecord::close(
        format!("counterexamples among {exhaustive} exhaustive configs up to 4 chords"),
        0.0,
        failures as f64,
        0.0,
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let verified = (0..count)
        .filter(|_| matches!(quadlemma::verify_lemma(&quadlemma::random_admissible_config(&mut rng, 8)), Verdict::Verified(_)))
        .count();
    out.push(CheckRecord::close(format!("random configs verified of {count}"), count as f64, verified as f64, 0.0));
    let single: ChordConfig = "b:0.5-d:0.5 curves=0".parse().expect("valid literal");
    out.push(CheckRecord::holds(
        "single b-d chord blocks a-c",
        !single.path_exists(Arc::A, Arc::C).connected && matches!(quadlemma::verify_lemma(&single), Verdict::HypothesisFails(0)),
    ));
    out
}

/// Rows of the bounded-gluing growth table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthSummary {
    pub d_coarse: f64,
    pub d_fine: f64,
    pub systole: f64,
    pub strictly_increasing: bool,
    pub first_m_above: Option<u32>,
}

/// The one-gluing bound for `m` in `6..=1000` with `d` from the mesh at two
/// resolutions; reports monotonicity and the first `m` with bound above `target`.
pub fn growth_summary(b: f64, h: f64, target: f64) -> crate::error::Result<GrowthSummary> {
    let coarse = hplane::boundary_separation(b, h)?;
    let fine = hplane::boundary_separation(b, h / 2.0)?;
    let sys = systole_estimate(b)?;
    let values: Vec<f64> = (6..=1000)
        .map(|m| cuff_lower_bound_bounded_gluing(m, b, 1, fine.lower, sys))
        .collect::<crate::error::Result<_>>()?;
    Ok(GrowthSummary {
        d_coarse: coarse.lower,
        d_fine: fine.lower,
        systole: sys,
        strictly_increasing: values.windows(2).all(|w| w[1] > w[0]),
        first_m_above: values.iter().position(|&v| v > target).map(|i| i as u32 + 6),
    })
}

pub fn suite_grid(h: f64) -> crate::error::Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let mut width_err = 0.0f64;
    let mut outer_margin = f64::INFINITY;
    for b in [0.9, 1.0, 1.25, 1.5, 2.0] {
        for m in [2, 3, 5, 8, 13] {
            let q = build_square_grid(b, m)?;
            width_err = width_err.max((q.width - 2.0 * m as f64 * b).abs());
            outer_margin = outer_margin.min(outer_geodesic_lower_bound(m, b)? - q.width);
        }
    }
    out.push(CheckRecord::close("width 2mb on 5x5 grid (max |err|)", 0.0, width_err, 0.0));
    out.push(CheckRecord::lower_bound("outer geodesic bound minus width (min)", 0.0, outer_margin));
    let g = growth_summary(1.0, h, 100.0)?;
    let rel = (g.d_coarse - g.d_fine).abs() / g.d_fine;
    out.push(CheckRecord::close("boundary separation two-resolution agreement (rel)", 0.0, rel, 0.02));
    out.push(CheckRecord::holds("bounded-gluing bound increasing for m in 6..1000", g.strictly_increasing));
    out.push(CheckRecord::lower_bound(
        "first m with bounded-gluing bound above 100",
        6.0,
        g.first_m_above.map_or(-1.0, f64::from),
    ));
    let asinh1 = 1.0_f64.asinh();
    let b_star = square_side_for_cuff(2.0 * asinh1)?;
    out.push(CheckRecord::close("systole of the inner-cuff square", 2.0 * asinh1, systole_estimate(b_star)?, 1e-12));
    let sys = systole_estimate(1.0)?;
    let cross = surfaces::systole_cross_check(1.0, (2.0 * h).max(0.15))?;
    out.push(CheckRecord::lower_bound("shortest loop around a hole vs hole cuff", sys - 1e-9, cross));
    Ok(out)
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

pub fn cmd_verify(suite: Suite, seed: u64, h: f64, count: Option<usize>) -> crate::error::Result<RunReport> {
    let start = Instant::now();
    let mut checks = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Trig {
        checks.extend(suite_trig(seed));
    }
    if all || suite == Suite::Pants {
        checks.extend(suite_pants(seed, h, count.unwrap_or(20))?);
    }
    if all || suite == Suite::Trunc {
        checks.extend(suite_trunc(seed, h, count.unwrap_or(10))?);
    }
    if all || suite == Suite::Lemma42 {
        checks.extend(suite_lemma42(seed, count.unwrap_or(10_000)));
    }
    if all || suite == Suite::Grid {
        checks.extend(suite_grid(h)?);
    }
    let suite_name = format!("{suite:?}").to_lowercase();
    Ok(RunReport {
        command: format!("verify {suite_name}"),
        parameters: params(&[
            ("seed", seed.to_string()),
            ("resolution", h.to_string()),
            ("count", count.map_or("default".into(), |c| c.to_string())),
        ]),
        checks,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

/// Bound and mesh estimates for one pants.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PantsDiameter {
    pub analytic_bound: f64,
    pub mesh_lower: Option<f64>,
    pub mesh_upper: f64,
    pub mesh_certified_upper: f64,
}

pub fn cmd_pants_diam(cuffs: &CuffTriple, h: f64) -> crate::error::Result<(PantsDiameter, RunReport)> {
    let start = Instant::now();
    let est = estimate_diameter(&pants_mesh(cuffs, h)?);
    let bound = diameter_bound(cuffs)?;
    let out = PantsDiameter {
        analytic_bound: bound,
        mesh_lower: est.lower,
        mesh_upper: est.upper,
        mesh_certified_upper: est.certified_upper,
    };
    let [a, b, c] = cuffs.cuffs();
    let report = RunReport {
        command: "pants-diam".into(),
        parameters: params(&[("cuffs", format!("{a},{b},{c}")), ("resolution", h.to_string())]),
        checks: vec![CheckRecord::upper_bound(
            if cuffs.cusp_count() == 0 { "thick diameter bound" } else { "truncated diameter bound" },
            bound,
            est.certified_upper,
        )],
        wall_time_s: start.elapsed().as_secs_f64(),
    };
    Ok((out, report))
}

/// Writes the grid table: `#` metadata lines, then comma-separated rows.
pub fn cmd_grid(
    b: Option<f64>,
    ms: (u32, u32),
    scheme: &str,
    d: Option<f64>,
    h: f64,
    mut out: impl Write,
) -> Result<(), Box<dyn std::error::Error>> {
    let (b, kind) = match scheme.strip_prefix('@') {
        Some(path) => {
            let cfg = SchemeConfig::parse(&std::fs::read_to_string(path)?)?;
            let setup = cfg.validate()?;
            if let Some(given) = b {
                if given != cfg.b {
                    return Err(Box::new(GeomError::Config(format!("--b {given} disagrees with config b {}", cfg.b))));
                }
            }
            (cfg.b, setup.scheme.kind())
        }
        None => (
            b.ok_or_else(|| GeomError::Config("--b is required with a named scheme".into()))?,
            scheme.parse::<SchemeKind>()?,
        ),
    };
    surfaces::GridSurface::new(b, surfaces::Window::centered(0))?;
    let sys = systole_estimate(b)?;
    let bound = gluing_bound(&surfaces::GluingScheme::new(kind));
    writeln!(out, "# scheme={} b={b} systole={sys}", kind.name())?;
    match kind {
        SchemeKind::Reflection => writeln!(out, "# verdict: unbounded gluings; a bounded pants decomposition exists")?,
        SchemeKind::Mixed => writeln!(
            out,
            "# verdict: unbounded gluings; the upper half forces unbounded cuffs in every pants decomposition"
        )?,
        _ => {}
    }
    match bound {
        GluingBound::Bounded(0) => {
            writeln!(out, "m,width,outer_bound,curve_lower_bound,cuff_lower_bound")?;
            for m in ms.0..=ms.1 {
                let q = build_square_grid(b, m)?;
                let outer = outer_geodesic_lower_bound(m, b).map_or("not-asserted".into(), |v| v.to_string());
                let nb = cuff_lower_bound_no_gluing(m, b, sys)?;
                writeln!(out, "{m},{},{outer},{},{}", q.width, nb.curve, nb.cuff)?;
            }
        }
        GluingBound::Bounded(j) => {
            let d = match d {
                Some(d) => d,
                None => hplane::boundary_separation(b, h)?.lower,
            };
            writeln!(out, "# J={j} d={d}")?;
            writeln!(out, "m,width,outer_bound,cuff_lower_bound")?;
            for m in ms.0..=ms.1 {
                let q = build_square_grid(b, m)?;
                let outer = outer_geodesic_lower_bound(m, b).map_or("not-asserted".into(), |v| v.to_string());
                let lower = cuff_lower_bound_bounded_gluing(m, b, j as u32, d, sys)
                    .map_or("not-asserted".into(), |v| v.to_string());
                writeln!(out, "{m},{},{outer},{lower}", q.width)?;
            }
        }
        GluingBound::Unbounded => {
            writeln!(out, "m,width,outer_bound")?;
            for m in ms.0..=ms.1 {
                let q = build_square_grid(b, m)?;
                let outer = outer_geodesic_lower_bound(m, b).map_or("not-asserted".into(), |v| v.to_string());
                writeln!(out, "{m},{},{outer}", q.width)?;
            }
        }
    }
    Ok(())
}

/// Runs the CLI; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result: Result<i32, Box<dyn std::error::Error>> = (|| match cli.command {
        Command::Verify { suite, seed, resolution, count, report } => {
            let r = cmd_verify(suite, seed, resolution, count)?;
            r.print_summary(std::io::stdout().lock())?;
            if let Some(path) = report {
                r.write_json(&path)?;
            }
            Ok(if r.passed() { 0 } else { 1 })
        }
        Command::PantsDiam { cuffs, resolution, report } => {
            let (d, r) = cmd_pants_diam(&cuffs, resolution)?;
            println!("{}", serde_json::to_string(&d)?);
            if let Some(path) = report {
                r.write_json(&path)?;
            }
            Ok(if r.passed() { 0 } else { 1 })
        }
        Command::Grid { b, m, scheme, d, resolution } => {
            cmd_grid(b, m, &scheme, d, resolution, std::io::stdout().lock())?;
            Ok(0)
        }
        Command::Scheme { path } => {
            let cfg = SchemeConfig::parse(&std::fs::read_to_string(&path)?)?;
            println!("{}", cfg.canonical()?);
            Ok(0)
        }
        Command::MeshDump { cuffs, resolution, out } => {
            let mesh = pants_mesh(&cuffs, resolution)?;
            match out {
                Some(path) => mesh.dump(std::io::BufWriter::new(std::fs::File::create(path)?))?,
                None => mesh.dump(std::io::BufWriter::new(std::io::stdout().lock()))?,
            }
            Ok(0)
        }
    })();
    match result {
        Ok(code) => code,
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|e| e.kind() == std::io::ErrorKind::BrokenPipe) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
