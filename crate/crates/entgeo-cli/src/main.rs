//! `entgeo` — exact entropy geometry of algebraic `Z^d` shift systems.
//!
//! Exit codes: 0 success (or Disjoint), 1 usage/parse error,
//! 2 Inconclusive, 3 internal verification failure.

mod report;
mod suites;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use entgeo::disjoint::{
    disjoint_corank_one, disjoint_rank_one, generate_disjoint_family, recheck_certificate,
    DisjointVerdict,
};
use entgeo::entropy::{
    estimate_halfspace_entropy, haar_directional_entropy, haar_halfspace_entropy,
    lex_halfspace_entropy_estimate, WindowSchedule,
};
use entgeo::polytope::{newton_polytope, nonexpansive_set, polygon_svg, NewtonPolytope};
use entgeo::shiftsys::{parse_system_file, render_system_file, Presentation};
use report::{Format, Report, Section};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "entgeo",
    version,
    about = "Newton polytopes, non-expansive directions, Haar entropies and \
             disjointness certificates for algebraic Z^d shift systems"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Budget for irreducibility searches
    #[arg(long, global = true, default_value_t = 1_000_000)]
    effort: u64,
    /// Seed for randomized suites
    #[arg(long, global = true, default_value_t = 17)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Newton polytope of the annihilating polynomial of each system
    Newton {
        files: Vec<PathBuf>,
        /// Write an SVG drawing of the polygon (single planar system only)
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Non-expansive direction set of each principal system
    Nonexp { files: Vec<PathBuf> },
    /// Directional entropy of alpha^n under Haar measure
    Entropy {
        file: PathBuf,
        /// Direction n as `a,b`
        #[arg(long, value_parser = parse_ivec)]
        dir: Vec<i64>,
    },
    /// Half-space entropy of a direction, exact and optionally estimated
    Halfspace {
        file: PathBuf,
        /// Direction v as `a,b`
        #[arg(long, value_parser = parse_ivec)]
        v: Vec<i64>,
        /// Run the window estimator and cross-check the exact value
        #[arg(long)]
        estimate: bool,
        /// Window schedule `L,D;L,D;...`
        #[arg(long, value_parser = parse_schedule)]
        window: Option<WindowSchedule>,
    },
    /// Lexicographic half-space entropy estimate (dimension 3)
    Lex {
        file: PathBuf,
        /// Window schedule `L,H;L,H;...`
        #[arg(long, value_parser = parse_schedule)]
        window: Option<WindowSchedule>,
    },
    /// Disjointness certificate for two or more systems
    Disjoint {
        files: Vec<PathBuf>,
        #[arg(long, default_value = "auto")]
        theorem: TheoremChoice,
    },
    /// Cross-validation suites
    Verify {
        files: Vec<PathBuf>,
        #[arg(long)]
        suite: SuiteName,
        /// Window schedule override
        #[arg(long, value_parser = parse_schedule)]
        window: Option<WindowSchedule>,
    },
    /// Emit a mutually disjoint family of planar systems with certificate
    Generate {
        #[arg(long, default_value_t = 2)]
        prime: u64,
        #[arg(long)]
        count: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum TheoremChoice {
    Auto,
    Rank1,
    Corank1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum SuiteName {
    Formula,
    Ar,
    Invariance,
    Oracle,
}

fn parse_ivec(text: &str) -> Result<Vec<i64>, String> {
    let coords: Result<Vec<i64>, _> = text
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect();
    coords.map_err(|e| format!("bad integer vector {text:?}: {e}"))
}

fn parse_schedule(text: &str) -> Result<WindowSchedule, String> {
    let mut windows = Vec::new();
    let mut last = (0u32, 0u32);
    for part in text.split(';') {
        let (l, d) = part
            .split_once(',')
            .ok_or_else(|| format!("bad window {part:?}, expected `L,D`"))?;
        let l: u32 = l.trim().parse().map_err(|e| format!("bad window: {e}"))?;
        let d: u32 = d.trim().parse().map_err(|e| format!("bad window: {e}"))?;
        if (l, d) <= last {
            return Err("window schedule must be strictly increasing".into());
        }
        last = (l, d);
        windows.push((l, d));
    }
    if windows.is_empty() {
        return Err("empty window schedule".into());
    }
    Ok(WindowSchedule::new(windows))
}

fn load_system(path: &Path) -> Result<(String, Presentation)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let pres = parse_system_file(&text)
        .map_err(|e| anyhow!("{}: {e}", path.display()))?;
    Ok((path.display().to_string(), pres))
}

fn load_systems(paths: &[PathBuf]) -> Result<Vec<(String, Presentation)>> {
    if paths.is_empty() {
        bail!("no system files given");
    }
    paths.iter().map(|p| load_system(p)).collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help/version are successful exits; everything else is usage
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Newton { files, svg } => cmd_newton(cli, files, svg.as_deref()),
        Command::Nonexp { files } => cmd_nonexp(cli, files),
        Command::Entropy { file, dir } => cmd_entropy(cli, file, dir),
        Command::Halfspace {
            file,
            v,
            estimate,
            window,
        } => cmd_halfspace(cli, file, v, *estimate, window.as_ref()),
        Command::Lex { file, window } => cmd_lex(cli, file, window.as_ref()),
        Command::Disjoint { files, theorem } => cmd_disjoint(cli, files, *theorem),
        Command::Verify {
            files,
            suite,
            window,
        } => cmd_verify(cli, files, *suite, window.as_ref()),
        Command::Generate { prime, count } => cmd_generate(cli, *prime, *count),
    }
}

fn cmd_newton(cli: &Cli, files: &[PathBuf], svg: Option<&Path>) -> Result<u8> {
    let systems = load_systems(files)?;
    if svg.is_some() && systems.len() != 1 {
        bail!("--svg expects exactly one input file");
    }
    let mut report = Report::new();
    for (name, pres) in &systems {
        let poly = suites::annihilator(pres)?;
        let mut section = Section::new("newton");
        section.push("system", name);
        section.push("annihilator", &poly);
        match newton_polytope(&poly)? {
            NewtonPolytope::Dim2(np) => {
                let vertices: Vec<String> = np
                    .vertices()
                    .iter()
                    .map(|p| format!("({}, {})", p[0], p[1]))
                    .collect();
                section.push("vertices", vertices.join(" "));
                if np.affine_dim() < 2 {
                    section.push(
                        "degenerate",
                        format!("affine dimension {}", np.affine_dim()),
                    );
                }
                for e in np.edges() {
                    section.push(
                        "edge",
                        format!(
                            "({}, {}) -> ({}, {}) normal=({}, {}) lattice_length={}",
                            e.from[0],
                            e.from[1],
                            e.to[0],
                            e.to[1],
                            e.normal[0],
                            e.normal[1],
                            e.lattice_length
                        ),
                    );
                }
                if let Some(path) = svg {
                    std::fs::write(path, polygon_svg(&np, name))
                        .with_context(|| format!("writing {}", path.display()))?;
                    section.push("svg", path.display().to_string());
                }
            }
            NewtonPolytope::Dim3(np) => {
                let vertices: Vec<String> = np
                    .vertices()
                    .iter()
                    .map(|p| format!("({}, {}, {})", p[0], p[1], p[2]))
                    .collect();
                section.push("vertices", vertices.join(" "));
                if np.affine_dim() < 3 {
                    section.push(
                        "degenerate",
                        format!("affine dimension {}", np.affine_dim()),
                    );
                }
                for f in np.faces() {
                    section.push(
                        "face",
                        format!(
                            "normal=({}, {}, {}) cycle={:?}",
                            f.normal[0], f.normal[1], f.normal[2], f.cycle
                        ),
                    );
                }
                for e in np.edges() {
                    section.push(
                        "edge",
                        format!(
                            "vertices={:?} faces={:?} lattice_length={}",
                            e.endpoints, e.faces, e.lattice_length
                        ),
                    );
                }
            }
        }
        report.section(section);
    }
    print!("{}", report.render(cli.format));
    Ok(EXIT_OK)
}

fn cmd_nonexp(cli: &Cli, files: &[PathBuf]) -> Result<u8> {
    let systems = load_systems(files)?;
    let mut report = Report::new();
    for (name, pres) in &systems {
        let geometry = nonexpansive_set(pres)?;
        let mut section = Section::new("nonexpansive");
        section.push("system", name);
        section.push("geometry", &geometry);
        report.section(section);
    }
    print!("{}", report.render(cli.format));
    Ok(EXIT_OK)
}

fn cmd_entropy(cli: &Cli, file: &Path, dir: &[i64]) -> Result<u8> {
    let (name, pres) = load_system(file)?;
    let value = haar_directional_entropy(&pres, dir)?;
    let mut report = Report::new();
    let mut section = Section::new("entropy");
    section.push("system", name);
    section.push("direction", format_vec(dir));
    section.push("value", value);
    report.section(section);
    print!("{}", report.render(cli.format));
    Ok(EXIT_OK)
}

fn cmd_halfspace(
    cli: &Cli,
    file: &Path,
    v: &[i64],
    estimate: bool,
    window: Option<&WindowSchedule>,
) -> Result<u8> {
    let (name, pres) = load_system(file)?;
    let default = WindowSchedule::default_plane();
    let schedule = window.unwrap_or(&default);
    let exact = match haar_halfspace_entropy(&pres, v) {
        Ok(value) => Some(value),
        Err(entgeo::entropy::EntropyError::NotPrincipal) if estimate => None,
        Err(e) => return Err(e.into()),
    };
    let mut report = Report::new();
    let mut section = Section::new("halfspace");
    section.push("system", name);
    section.push("direction", format_vec(v));
    if let Some(value) = &exact {
        section.push("exact", value);
    }
    let mut code = EXIT_OK;
    if estimate {
        let series = estimate_halfspace_entropy(&pres, v, schedule)?;
        for (w, val) in series.windows.iter().zip(series.values.iter()) {
            section.push("window", format!("({}, {}) estimate={}", w.0, w.1, val));
        }
        section.push("stabilized", series.stabilized);
        match (series.final_value(), &exact) {
            (Some(est), Some(exact)) if est == *exact => {
                section.push("agreement", "estimate matches exact value");
            }
            (Some(est), Some(exact)) => {
                section.push(
                    "agreement",
                    format!("MISMATCH: estimate {est} vs exact {exact}"),
                );
                code = EXIT_VERIFICATION;
            }
            (None, Some(_)) => {
                section.push("agreement", "estimate did not stabilize");
                code = EXIT_VERIFICATION;
            }
            (_, None) => {}
        }
    }
    report.section(section);
    print!("{}", report.render(cli.format));
    Ok(code)
}

fn cmd_lex(cli: &Cli, file: &Path, window: Option<&WindowSchedule>) -> Result<u8> {
    let (name, pres) = load_system(file)?;
    let default = WindowSchedule::default_lex();
    let schedule = window.unwrap_or(&default);
    let series = lex_halfspace_entropy_estimate(&pres, schedule)?;
    let mut report = Report::new();
    let mut section = Section::new("lex-halfspace");
    section.push("system", name);
    for (w, val) in series.windows.iter().zip(series.values.iter()) {
        section.push("window", format!("({}, {}) estimate={}", w.0, w.1, val));
    }
    section.push("stabilized", series.stabilized);
    if let Some(value) = series.final_value() {
        section.push("value", value);
    }
    report.section(section);
    print!("{}", report.render(cli.format));
    Ok(EXIT_OK)
}

fn cmd_disjoint(cli: &Cli, files: &[PathBuf], theorem: TheoremChoice) -> Result<u8> {
    let systems = load_systems(files)?;
    if systems.len() < 2 {
        bail!("disjointness needs at least two systems");
    }
    let presentations: Vec<Presentation> =
        systems.iter().map(|(_, p)| p.clone()).collect();
    let dims: Vec<usize> = presentations.iter().map(|p| p.dim()).collect();
    let choice = match theorem {
        TheoremChoice::Rank1 => TheoremChoice::Rank1,
        TheoremChoice::Corank1 => TheoremChoice::Corank1,
        TheoremChoice::Auto => {
            if dims.iter().all(|d| *d == 2) {
                TheoremChoice::Rank1
            } else {
                TheoremChoice::Corank1
            }
        }
    };
    let verdict = match choice {
        TheoremChoice::Rank1 => disjoint_rank_one(&presentations, cli.effort)?,
        TheoremChoice::Corank1 => {
            if presentations.len() != 2 {
                bail!("the co-rank-one criterion is pairwise; give exactly two systems");
            }
            disjoint_corank_one(&presentations[0], &presentations[1], cli.effort)?
        }
        TheoremChoice::Auto => unreachable!(),
    };
    let mut report = Report::new();
    match verdict {
        DisjointVerdict::Disjoint(cert) => {
            // independent re-check before claiming success
            if let Err(reason) = recheck_certificate(&cert, &presentations) {
                let mut section = Section::new("disjointness");
                section.push("verdict", "internal error");
                section.push("recheck", reason);
                report.section(section);
                print!("{}", report.render(cli.format));
                return Ok(EXIT_VERIFICATION);
            }
            let mut section = Section::new("disjointness");
            section.push("verdict", "disjoint");
            for (i, (name, _)) in systems.iter().enumerate() {
                section.push("system", format!("{} = {name}", i + 1));
            }
            for line in cert.to_string().lines() {
                let (key, value) = line.split_once(" = ").unwrap_or(("note", line));
                section.push(key, value);
            }
            section.push("recheck", "witnesses re-validated independently");
            report.section(section);
            print!("{}", report.render(cli.format));
            Ok(EXIT_OK)
        }
        DisjointVerdict::Inconclusive(reason) => {
            let mut section = Section::new("disjointness");
            section.push("verdict", "inconclusive");
            section.push("reason", reason);
            report.section(section);
            print!("{}", report.render(cli.format));
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

fn cmd_verify(
    cli: &Cli,
    files: &[PathBuf],
    suite: SuiteName,
    window: Option<&WindowSchedule>,
) -> Result<u8> {
    let systems = load_systems(files)?;
    let default = WindowSchedule::default_plane();
    let schedule = window.unwrap_or(&default);
    let outcome = match suite {
        SuiteName::Formula => suites::formula(&systems, cli.seed)?,
        SuiteName::Ar => suites::ar(&systems, schedule)?,
        SuiteName::Invariance => suites::invariance(&systems, schedule)?,
        SuiteName::Oracle => suites::oracle(&systems, cli.seed, 60)?,
    };
    print!("{}", outcome.report.render(cli.format));
    if outcome.passed {
        println!("suite: PASS");
        Ok(EXIT_OK)
    } else {
        println!("suite: FAIL");
        Ok(EXIT_VERIFICATION)
    }
}

fn cmd_generate(cli: &Cli, prime: u64, count: usize) -> Result<u8> {
    let (systems, cert) = generate_disjoint_family(prime, count, cli.effort)?;
    let mut report = Report::new();
    for (i, pres) in systems.iter().enumerate() {
        let mut section = Section::new("system");
        section.push("index", i + 1);
        let rendered = render_system_file(pres).expect("principal system");
        for line in rendered.lines() {
            let (key, value) = line.split_once(" = ").unwrap_or(("note", line));
            section.push(key, value);
        }
        report.section(section);
    }
    let mut section = Section::new("certificate");
    for line in cert.to_string().lines() {
        let (key, value) = line.split_once(" = ").unwrap_or(("note", line));
        section.push(key, value);
    }
    report.section(section);
    print!("{}", report.render(cli.format));
    Ok(EXIT_OK)
}

fn format_vec(v: &[i64]) -> String {
    let coords: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", coords.join(", "))
}
