//! Batch front end. Every subcommand builds a [`Report`] and prints it;
//! exit code 0 means every check passed, 1 means a check failed (the witness
//! is in the report), 2 means the input or the flags were unusable.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bieberbach::{
    classify_isometry_2d, freeness_check, fundamental_domain_check, Coverage, LatticeAction,
};
use crate::error::{Error, Result};
use crate::istructure::{build_itable, ITable, DEFAULT_DEGREE};
use crate::presentation::{
    check_cyclic, check_star1, check_star2, check_star3, parse_presentation, Presentation,
};
use crate::report::{Format, Report};
use crate::structuremaps::PhiMap;
use crate::types::{Alphabet, ExpVec, Gen, Perm, Word};
use crate::ybr::{
    check_axioms, check_involutive, check_nondegenerate, check_yb, classify_orbits3,
    describe_pair_failure, enumerate_solutions, parse_rtable, PairMap,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Plain,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "itype", version, about = "Semigroups of I-type: Yang-Baxter maps, word problem, lattice actions")]
struct Cli {
    /// Output style: `key: value` lines or `key=value` lines.
    #[arg(long, value_enum, global = true, default_value = "plain")]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Shape conditions of a presentation and the axioms of its map r.
    Check { file: PathBuf },
    /// Dump the I-structure table.
    Build {
        file: PathBuf,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Exponent vector and normal form of a word.
    Normalize {
        file: PathBuf,
        word: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Decide whether two words are equal in the semigroup.
    Equal {
        file: PathBuf,
        left: String,
        right: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// The permutation map, kernel exponents, image group and cosets.
    Phi {
        file: PathBuf,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Affine lattice action: generators, freeness, tiling.
    Bieberbach {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        radius: i64,
        #[arg(long, default_value_t = 6)]
        length: usize,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Orbits of the braid action on words of length three.
    Orbits { file: PathBuf },
    /// All solutions on n letters, up to relabeling.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

/// Text and exit code of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A parsed input file: either a presentation or a bare r-table.
struct Input {
    alphabet: Alphabet,
    presentation: Option<Presentation>,
    r: PairMap,
}

fn has_rtable_directive(text: &str) -> bool {
    text.lines()
        .any(|l| crate::presentation::strip_comment(l).trim() == "rtable")
}

fn load(path: &PathBuf) -> Result<Input> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    if has_rtable_directive(&text) {
        let (alphabet, r) = parse_rtable(&text)?;
        Ok(Input {
            alphabet,
            presentation: None,
            r,
        })
    } else {
        let p = parse_presentation(&text)?;
        let r = PairMap::from_presentation(&p)?;
        Ok(Input {
            alphabet: p.alphabet().clone(),
            presentation: Some(p),
            r,
        })
    }
}

/// Refuses maps that fail the axioms before anything is built on them.
/// Only a failure is reported, so that dumps stay verbatim.
fn require_axioms(input: &Input, report: &mut Report) -> bool {
    let v = check_axioms(&input.r, &input.alphabet);
    if !v.passed() {
        report.verdict("axioms", &v, |w| w.clone());
    }
    v.passed()
}

fn satisfies_shape_conditions(input: &Input) -> bool {
    input.presentation.as_ref().is_some_and(|p| {
        check_star1(p).passed() && check_star2(p).passed() && check_star3(p).passed()
    })
}

fn table(input: &Input, degree: usize) -> Result<ITable> {
    build_itable(&input.r, degree, &Perm::identity(input.r.n()))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn check(input: &Input, report: &mut Report) -> bool {
    let a = &input.alphabet;
    report.push("n", a.n());
    match &input.presentation {
        Some(p) => {
            report.push("input", "presentation");
            report.verdict("star1", &check_star1(p), |w| w.describe(p));
            report.verdict("star2", &check_star2(p), |w| w.describe(a));
            report.verdict("star3", &check_star3(p), |w| w.describe(a));
        }
        None => report.push("input", "rtable"),
    }
    report.verdict("cyclic", &check_cyclic(&input.r), |w| w.describe(a));
    let inv = check_involutive(&input.r);
    let yb = check_yb(&input.r);
    let nd = check_nondegenerate(&input.r);
    report.verdict("involutive", &inv, |&w| describe_pair_failure(&input.r, w, a));
    report.verdict("yang_baxter", &yb, |w| w.describe(a));
    report.verdict("nondegenerate", &nd, |w| w.describe(a));
    let ok = inv.passed() && yb.passed() && nd.passed();
    report.push("i_type", if ok { "yes" } else { "no" });
    ok
}

fn phi(input: &Input, degree: Option<usize>, report: &mut Report) -> Result<bool> {
    if !require_axioms(input, report) {
        return Ok(false);
    }
    let n = input.r.n();
    let d = degree.unwrap_or(DEFAULT_DEGREE.max(factorial(n) + 1));
    let pm = PhiMap::new(table(input, d)?);
    for g in Gen::all(n) {
        let p = pm.phi_of(&ExpVec::unit(n, g))?;
        report.push(format!("phi {}", input.alphabet.name(g)), p);
    }
    let cocycle = pm.check_cocycle_all(d.min(5))?;
    report.verdict("cocycle", &cocycle, |(b, c)| format!("at b = {b}, c = {c}"));
    let kernel = pm.kernel_exponents()?;
    let t: Vec<String> = kernel.t.iter().map(|t| t.to_string()).collect();
    report.push("kernel", format!("t=({})", t.join(",")));
    report.push("G", format!("order={}", kernel.group.len()));
    let props = pm.check_kernel_properties(&kernel, d.min(6))?;
    report.verdict("kernel_properties", &props, |w| w.clone());
    let cosets = pm.coset_decomposition(&kernel, d.min(6))?;
    let reps: Vec<String> = cosets.representatives.iter().map(|a| a.to_string()).collect();
    report.push("cosets", format!("{} {{{}}}", reps.len(), reps.join(" ")));
    report.verdict("factorization", &cosets.factorization, |w| w.clone());
    report.verdict("commute", &cosets.commute, |w| w.clone());
    if cosets.commute_skipped > 0 {
        report.push("commute_skipped", cosets.commute_skipped);
    }
    Ok(cocycle.passed() && props.passed() && cosets.passed())
}

fn bieberbach(
    input: &Input,
    radius: i64,
    length: usize,
    degree: Option<usize>,
    report: &mut Report,
) -> Result<bool> {
    if !require_axioms(input, report) {
        return Ok(false);
    }
    let a = &input.alphabet;
    let pm = PhiMap::new(table(input, degree.unwrap_or(DEFAULT_DEGREE))?);
    let action = LatticeAction::from_phi(&pm)?;
    report.push("perm_part", action.part);
    for (i, g) in action.generators.iter().enumerate() {
        report.push(format!("gen {}", a.name(Gen::from_zero(i))), g);
    }
    let free = freeness_check(&action, length)?;
    report.verdict("freeness", &free.verdict, |f| {
        format!(
            "{} has fixed point ({})",
            crate::bieberbach::format_group_word(&f.word, a),
            f.fixed_point
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    });
    report.push("isometries", free.distinct_isometries);
    let dom = fundamental_domain_check(&action, radius, length)?;
    report.verdict("injective", &dom.injective, |(g, h)| {
        format!(
            "{} and {} send the origin to the same point",
            crate::bieberbach::format_group_word(&g.word, a),
            crate::bieberbach::format_group_word(&h.word, a)
        )
    });
    match &dom.coverage {
        Coverage::Complete => report.push("coverage", format!("complete {}/{}", dom.covered, dom.box_points)),
        Coverage::Inconclusive { missed } => report.push(
            "coverage",
            format!(
                "inconclusive {}/{} (first missed {:?}; raise --length)",
                dom.covered, dom.box_points, missed[0]
            ),
        ),
    }
    if a.n() == 2 {
        for (i, g) in action.generators.iter().enumerate() {
            report.push(
                format!("class {}", a.name(Gen::from_zero(i))),
                classify_isometry_2d(g)?,
            );
        }
        for (i, g) in action.generators.iter().enumerate() {
            let name = a.name(Gen::from_zero(i));
            report.push(
                format!("class {name} {name}"),
                classify_isometry_2d(&g.compose(g)?)?,
            );
        }
    }
    let shortest: Vec<_> = free
        .relations
        .iter()
        .take_while(|w| w.len() == free.relations.first().map_or(0, Vec::len))
        .cloned()
        .collect();
    for line in action.export(a, &shortest).lines() {
        if let Some(rest) = line.strip_prefix("rel ") {
            report.push("rel", rest);
        }
    }
    Ok(free.verdict.passed() && dom.injective.passed())
}

fn dispatch(cli: Cli, report: &mut Report) -> Result<bool> {
    match cli.command {
        Command::Check { file } => Ok(check(&load(&file)?, report)),
        Command::Build { file, degree } => {
            let input = load(&file)?;
            if !require_axioms(&input, report) {
                return Ok(false);
            }
            let t = table(&input, degree.unwrap_or(DEFAULT_DEGREE))?;
            t.verify()?;
            // the dump is printed verbatim, one table line per report line
            for line in t.dump(&input.alphabet).lines() {
                report.push("", line);
            }
            Ok(true)
        }
        Command::Normalize { file, word, degree } => {
            let input = load(&file)?;
            let w = input.alphabet.parse_word(&word)?;
            if !require_axioms(&input, report) {
                return Ok(false);
            }
            let t = table(&input, degree.unwrap_or(DEFAULT_DEGREE.max(w.degree())))?;
            let nf = t.normal_form(&w)?;
            report.push("exponents", &nf.exps);
            report.push("normal_form", input.alphabet.format_word(&nf.word));
            Ok(true)
        }
        Command::Equal {
            file,
            left,
            right,
            degree,
        } => {
            let input = load(&file)?;
            let (w1, w2) = (input.alphabet.parse_word(&left)?, input.alphabet.parse_word(&right)?);
            if !require_axioms(&input, report) {
                return Ok(false);
            }
            let need = w1.degree().max(w2.degree());
            let t = table(&input, degree.unwrap_or(DEFAULT_DEGREE.max(need)))?;
            report.push("equal", t.words_equal(&w1, &w2)?);
            Ok(true)
        }
        Command::Phi { file, degree } => phi(&load(&file)?, degree, report),
        Command::Bieberbach {
            file,
            radius,
            length,
            degree,
        } => bieberbach(&load(&file)?, radius, length, degree, report),
        Command::Orbits { file } => {
            let input = load(&file)?;
            let orbits = classify_orbits3(&input.r);
            report.push("orbits", orbits.orbits.len());
            for o in &orbits.orbits {
                report.push("orbit", orbits.describe_orbit(o, &input.alphabet));
            }
            report.push("identity", orbits.identity_line());
            if !satisfies_shape_conditions(&input) {
                report.push("star_counts", "skipped (shape conditions do not hold)");
                return Ok(true);
            }
            let counts = orbits.check_star_counts();
            report.verdict("star_counts", &counts, |w| w.describe(&input.alphabet));
            Ok(counts.passed())
        }
        Command::Enumerate { n } => {
            let census = enumerate_solutions(n)?;
            let alphabet = Alphabet::standard(n);
            report.push("n", n);
            report.push("solutions", census.solutions.len());
            report.push("classes", census.classes.len());
            for r in &census.classes {
                let moved: Vec<String> = r
                    .moved_pairs()
                    .iter()
                    .map(|(ab, cd)| {
                        let w = |p: &(Gen, Gen)| alphabet.format_word(&Word::new(vec![p.0, p.1]));
                        format!("{} = {}", w(ab), w(cd))
                    })
                    .collect();
                let text = if moved.is_empty() {
                    "identity".to_string()
                } else {
                    moved.join(", ")
                };
                report.push("class", format!("{} [{}]", r.fingerprint(), text));
            }
            Ok(true)
        }
    }
}

fn render(report: &Report, format: Format) -> String {
    // keyless lines are raw text
    report
        .render(format)
        .lines()
        .map(|l| {
            l.strip_prefix(": ")
                .or_else(|| l.strip_prefix('='))
                .unwrap_or(l)
        })
        .fold(String::new(), |mut acc, l| {
            acc.push_str(l);
            acc.push('\n');
            acc
        })
}

/// Runs one invocation without touching the process streams.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let format = match cli.format {
        FormatArg::Plain => Format::Plain,
        FormatArg::Machine => Format::Machine,
    };
    let mut report = Report::new();
    match dispatch(cli, &mut report) {
        Ok(ok) => Outcome {
            code: if ok { 0 } else { 1 },
            stdout: render(&report, format),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: render(&report, format),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Runs one invocation, printing to stdout and stderr; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let out = execute(args);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
