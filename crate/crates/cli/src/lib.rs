//! The `stabilitylab` command line. Every command prints one JSON report;
//! `enumerate` and `verify` first stream atlas records, one per line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 semantic negative
//! (not tight, not classifiable, counterexample found).

pub mod args;
pub mod report;

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use clap::error::ErrorKind;
use clap::Parser;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use stabilitylab_core::enumeration::{
    scan_filtered, verify_theorem_with, write_record, Filter, Predicate, TheoremId, Verdict, VerifyParams,
};
use stabilitylab_core::generators::{bipartite_with_pm, clique, cycle, even_subdivision_k4};
use stabilitylab_core::structure::tight_decomposition;
use stabilitylab_core::{
    alpha, classify_defect, critical_reduce, is_stable, parse_graph6, write_graph6, Edge, Error, Graph,
};

use args::{Cli, Command, ConstructArgs, Family};
use report::{AlphaOutput, ClassifyOutput, CliReport, ConstructOutput, EnumerateOutput, ReduceOutput};

#[derive(Debug)]
pub enum Failure {
    /// Exit 1.
    Usage(String),
    /// Exit 2.
    Negative(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Negative(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("io: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(format!("json: {e}"))
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
    pretty: bool,
}

impl Io<'_> {
    fn emit(&mut self, report: &CliReport) -> Result<(), Failure> {
        let value = serde_json::to_value(report)?;
        report::validate(&value).map_err(|e| Failure::Usage(format!("output failed its schema: {e}")))?;
        let text = if self.pretty { serde_json::to_string_pretty(&value)? } else { value.to_string() };
        writeln!(self.stdout, "{text}")?;
        Ok(())
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{text}") } else { write!(stderr, "{text}") };
            return code;
        }
    };
    let mut io = Io { stdin, stdout, stderr, pretty: cli.pretty };
    let outcome = dispatch(cli.command, &mut io);
    let _ = io.stdout.flush();
    match outcome {
        Ok(()) => 0,
        Err(f) => {
            let msg = match &f {
                Failure::Usage(m) | Failure::Negative(m) => m,
            };
            let _ = writeln!(io.stderr, "error: {msg}");
            f.code()
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> Result<(), Failure> {
    match command {
        Command::Alpha { input } => {
            let (g, g6) = read_graph(input.g6.as_deref(), input.file.as_deref(), io)?;
            let a = alpha(&g);
            let out = AlphaOutput { n: g.n(), alpha: a.alpha, witness: a.witness.to_vec() };
            io.emit(&CliReport::new("alpha", &g6, out)?)
        }
        Command::Check { input, k, l, tight } => {
            let (g, g6) = read_graph(input.g6.as_deref(), input.file.as_deref(), io)?;
            let r = is_stable(&g, k, l)?;
            let is_tight = r.tight;
            io.emit(&CliReport::new("check", &g6, r)?)?;
            if tight && !is_tight {
                return Err(Failure::Negative(format!("graph is not tight ({k},{l})-stable")));
            }
            Ok(())
        }
        Command::Reduce { input } => {
            let (g, g6) = read_graph(input.g6.as_deref(), input.file.as_deref(), io)?;
            let red = critical_reduce(&g);
            let out = ReduceOutput {
                n: g.n(),
                alpha: alpha(&red.kernel).alpha,
                kernel: write_graph6(&red.kernel)?,
                removed: red.removed,
            };
            io.emit(&CliReport::new("reduce", &g6, out)?)
        }
        Command::Classify { input, k } => {
            let (g, g6) = read_graph(input.g6.as_deref(), input.file.as_deref(), io)?;
            let negative = |e: Error| match e {
                Error::Precondition(m) => Failure::Negative(m),
                other => other.into(),
            };
            let out = match k {
                Some(k) => ClassifyOutput {
                    k: Some(k),
                    decomposition: Some(tight_decomposition(&g, k).map_err(negative)?),
                    defect_class: None,
                },
                None => ClassifyOutput {
                    k: None,
                    decomposition: None,
                    defect_class: Some(classify_defect(&g).map_err(negative)?),
                },
            };
            io.emit(&CliReport::new("classify", &g6, out)?)
        }
        Command::Construct(a) => construct(a, io),
        Command::Enumerate { n, filters, prune, out, parallel } => {
            let predicates = filters
                .iter()
                .map(|f| f.parse::<Predicate>())
                .collect::<Result<Vec<_>, _>>()?;
            let mut filter = Filter::new(predicates);
            if prune {
                filter = filter.with_prune()?;
            }
            let names: Vec<String> = filter.predicates().iter().map(|p| p.to_string()).collect();
            let digest_of = json!({ "n": n, "filters": names, "prune": prune }).to_string();
            let mut records = 0u64;
            let scanned = with_record_sink(out.as_deref(), io, |write| {
                scan_filtered(n, &filter, parallel.jobs, |rec| {
                    records += 1;
                    write(&rec);
                })
            })?;
            let summary = EnumerateOutput {
                n,
                filters: names,
                prune,
                graphs_scanned: scanned,
                records,
                atlas: out.map(|p| p.display().to_string()),
            };
            io.emit(&CliReport::new("enumerate", &digest_of, summary)?)
        }
        Command::Verify { theorem, n_min, n_max, k, prune, extended, max_graphs, out, no_records, parallel } => {
            let theorem: TheoremId = theorem.parse()?;
            let mut p = VerifyParams::new(n_min, n_max);
            p.k = k;
            p.prune = prune;
            p.extended = extended;
            p.max_graphs = max_graphs;
            p.jobs = parallel.jobs;
            let report = if no_records {
                verify_theorem_with(theorem, &p, |_| {})?
            } else {
                with_record_sink(out.as_deref(), io, |write| verify_theorem_with(theorem, &p, |rec| write(&rec)))?
            };
            let digest_of = json!({ "theorem": theorem.to_string(), "parameterRange": report.parameter_range })
                .to_string();
            let refuted = report.verdict == Verdict::Refuted;
            let counterexamples = report.counterexamples.clone();
            io.emit(&CliReport::new("verify", &digest_of, report)?)?;
            if refuted {
                for g6 in &counterexamples {
                    writeln!(io.stderr, "counterexample: {g6}")?;
                }
                return Err(Failure::Negative(format!("{} counterexample(s) to {theorem}", counterexamples.len())));
            }
            Ok(())
        }
    }
}

/// Hands `body` a record writer bound to `out` or to standard output and
/// surfaces the first write error after the scan.
fn with_record_sink<T>(
    out: Option<&Path>,
    io: &mut Io,
    body: impl FnOnce(&mut dyn FnMut(&stabilitylab_core::enumeration::AtlasRecord)) -> Result<T, Error>,
) -> Result<T, Failure> {
    let mut file = match out {
        Some(path) => Some(BufWriter::new(
            File::create(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        )),
        None => None,
    };
    let mut failed: Option<Error> = None;
    let result = {
        let target: &mut dyn Write = match file.as_mut() {
            Some(f) => f,
            None => &mut *io.stdout,
        };
        let mut write = |rec: &stabilitylab_core::enumeration::AtlasRecord| {
            if failed.is_none() {
                if let Err(e) = write_record(&mut &mut *target, rec) {
                    failed = Some(e);
                }
            }
        };
        body(&mut write)?
    };
    if let Some(e) = failed {
        return Err(e.into());
    }
    if let Some(mut f) = file {
        f.flush()?;
    }
    Ok(result)
}

fn read_text(path: &Path, io: &mut Io) -> Result<String, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        io.stdin.read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

/// Graph6 text from a file: plain graph6 (first non-empty line), or a JSON
/// report or atlas record carrying a `g6` field.
fn graph6_from_text(text: &str) -> Result<String, Failure> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let first = trimmed.lines().next().unwrap_or_default();
        // a pretty report spans lines, a record stream holds one per line
        let value: Value = serde_json::from_str(trimmed).or_else(|_| serde_json::from_str(first))?;
        let g6 = value
            .pointer("/result/g6")
            .or_else(|| value.get("g6"))
            .and_then(Value::as_str)
            .ok_or_else(|| Failure::Usage("JSON input has no g6 field".into()))?;
        return Ok(g6.to_string());
    }
    trimmed
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .map(String::from)
        .ok_or_else(|| Failure::Usage("empty graph input".into()))
}

fn read_graph(g6: Option<&str>, file: Option<&Path>, io: &mut Io) -> Result<(Graph, String), Failure> {
    let text = match (g6, file) {
        (Some(s), _) => s.trim().to_string(),
        (None, Some(path)) => graph6_from_text(&read_text(path, io)?)?,
        (None, None) => return Err(Failure::Usage("give --g6 or --file".into())),
    };
    let g = parse_graph6(&text)?;
    let canonical = write_graph6(&g)?;
    Ok((g, canonical))
}

fn need<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--family {family} needs {flag}")))
}

fn family_name(f: Family) -> String {
    clap::ValueEnum::to_possible_value(&f).map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn construct(a: ConstructArgs, io: &mut Io) -> Result<(), Failure> {
    let name = family_name(a.family);
    let base = match (&a.base.g6, &a.base.file) {
        (None, None) => None,
        (g6, file) => Some(read_graph(g6.as_deref(), file.as_deref(), io)?),
    };
    let base_graph = || {
        base.as_ref().map(|(g, _)| g.clone()).ok_or_else(|| Failure::Usage(format!("--family {name} needs --g6 or --file")))
    };
    let g = match a.family {
        Family::Cycle => cycle(need(a.n, "--n", &name)?)?,
        Family::Clique => clique(need(a.n, "--n", &name)?)?,
        Family::Cone => base_graph()?.cone()?,
        Family::Isolift => base_graph()?.add_isolated(a.t)?,
        Family::Union => {
            if a.parts.is_empty() {
                return Err(Failure::Usage("--family union needs --parts".into()));
            }
            let mut parts = a.parts.iter().map(|p| parse_graph6(p.trim()));
            let mut g = parts.next().expect("non-empty")?;
            for part in parts {
                g = g.disjoint_union(&part?)?;
            }
            g
        }
        Family::BipartitePm => {
            let m = need(a.m, "--m", &name)?;
            if !(0.0..=1.0).contains(&a.p) {
                return Err(Failure::Usage(format!("--p {} outside [0, 1]", a.p)));
            }
            if m == 0 || 2 * m > stabilitylab_core::MAX_VERTICES {
                return Err(Error::VertexCount(2 * m).into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            let mut extra = Vec::new();
            for i in 0..m {
                for j in 0..m {
                    if i != j && rng.gen_bool(a.p) {
                        extra.push(Edge::new(i, m + j)?);
                    }
                }
            }
            bipartite_with_pm(m, &extra)?
        }
        Family::EvensubK4 => {
            let counts: [usize; 6] = a
                .counts
                .as_slice()
                .try_into()
                .map_err(|_| Failure::Usage(format!("--counts needs 6 values, got {}", a.counts.len())))?;
            even_subdivision_k4(counts)?
        }
    };
    let digest_of = json!({
        "family": name,
        "n": a.n,
        "m": a.m,
        "p": a.p,
        "seed": a.seed,
        "counts": a.counts,
        "t": a.t,
        "parts": a.parts,
        "base": base.as_ref().map(|(_, g6)| g6),
    })
    .to_string();
    let out = ConstructOutput { family: name, n: g.n(), edges: g.edge_count(), g6: write_graph6(&g)? };
    io.emit(&CliReport::new("construct", &digest_of, out)?)
}
