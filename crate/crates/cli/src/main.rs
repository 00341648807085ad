use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skeinwrt::chebyshev_annulus::{chebyshev, shadow_check, AnnulusElement, ChebKind};
use skeinwrt::recoupling::{six_j, SixJ};
use skeinwrt::scalars::ScalarRing;
use skeinwrt::spine_rep::{
    flip, reduce_trace, standard_spine, verify_irreducible, verify_shadow, BurnsideBudget,
    Component, OperatorMatrix, PartialSpine, ReductionMove, SpineRep, WeightSystem,
    DEFAULT_MAX_DIM,
};
use skeinwrt::tl_net::{eval_network_with_budget, ColoredNetwork, DEFAULT_BUDGET};

/// Exact computations with the Kauffman skein algebra and its quantum
/// representations at roots of unity.
#[derive(Parser)]
#[command(name = "skeinwrt", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Report the wall-clock time of the command.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Level {
    #[arg(long = "N", value_name = "N", value_parser = clap::value_parser!(u32).range(3..))]
    n: u32,
}

#[derive(Args)]
struct SpineSource {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..), conflicts_with = "spine")]
    genus: Option<u32>,
    /// Spine file with `vertex`, `edge`, `circle` and `order` lines.
    #[arg(long)]
    spine: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Irreducible,
    Shadow,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    T,
    S,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    /// The curve bounding the meridian disk of the component.
    Boundary,
    /// The core of a circle or a curve parallel to a loop edge.
    Curve,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension and ordered basis of the representation space.
    Dim {
        #[command(flatten)]
        src: SpineSource,
        #[command(flatten)]
        level: Level,
    },
    /// The admissible weight systems, one per line.
    Weights {
        #[command(flatten)]
        src: SpineSource,
        #[command(flatten)]
        level: Level,
    },
    /// Matrix of a curve operator.
    Op {
        #[command(flatten)]
        src: SpineSource,
        #[command(flatten)]
        level: Level,
        #[arg(long, conflicts_with = "circle", required_unless_present = "circle")]
        edge: Option<String>,
        #[arg(long)]
        circle: Option<String>,
        /// Defaults to `curve` for circles and `boundary` for edges.
        #[arg(long, value_enum)]
        kind: Option<OpKind>,
        /// Polynomial threaded along the curve: `z`, `1`, `S<k>` or `T<k>`.
        #[arg(long, default_value = "z", value_parser = parse_thread)]
        thread: AnnulusElement,
    },
    /// Flip an edge and print the change-of-basis matrix.
    Flip {
        #[command(flatten)]
        src: SpineSource,
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        edge: String,
    },
    /// The quantum 6j-symbol {a b e; c d f}.
    Sixj {
        a: u32,
        b: u32,
        e: u32,
        c: u32,
        d: u32,
        f: u32,
        #[arg(long = "N", value_name = "N", required_unless_present = "generic")]
        n: Option<u32>,
        /// Work over Q(A) instead of the cyclotomic field.
        #[arg(long)]
        generic: bool,
    },
    /// Evaluate a colored trivalent network read from a file.
    EvalNet {
        file: PathBuf,
        #[arg(long = "N", value_name = "N")]
        n: Option<u32>,
        /// Largest total color accepted.
        #[arg(long, env = "SKEINWRT_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u32,
    },
    /// A Chebyshev polynomial in the core of the annulus.
    Cheb {
        #[arg(long, value_enum, ignore_case = true)]
        kind: Kind,
        #[arg(long)]
        n: u32,
    },
    /// Check that T_N threaded on curves acts as -2.
    Shadow {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        genus: u32,
        #[command(flatten)]
        level: Level,
    },
    /// Run the irreducibility and shadow checks.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        genus: u32,
        #[command(flatten)]
        level: Level,
        #[arg(long, value_enum, default_value = "all")]
        which: Which,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
        /// Longest operator word in the span search (default 2 d^2).
        #[arg(long)]
        max_word_len: Option<usize>,
    },
    /// Reduce a basis vector to the zero coloring, step by step.
    ReduceTrace {
        #[command(flatten)]
        src: SpineSource,
        #[command(flatten)]
        level: Level,
        /// `e0=2,e1=2,e2=0` or positional `2,2,0`.
        #[arg(long)]
        weights: String,
    },
}

fn parse_thread(s: &str) -> Result<AnnulusElement, String> {
    let bad = || format!("unknown thread {s:?} (use z, 1, S<k> or T<k>)");
    match s {
        "z" | "x" => Ok(AnnulusElement::z()),
        "1" => Ok(AnnulusElement::one()),
        _ => {
            let (kind, k) = s.split_at(1);
            let k: u32 = k.parse().map_err(|_| bad())?;
            match kind {
                "S" => Ok(chebyshev(ChebKind::S, k)),
                "T" => Ok(chebyshev(ChebKind::T, k)),
                _ => Err(bad()),
            }
        }
    }
}

/// How a command ended.
enum Outcome {
    Pass,
    Fail,
}

type CmdResult = Result<(Value, String, Outcome), String>;

fn load_spine(src: &SpineSource) -> Result<PartialSpine, String> {
    match (&src.spine, src.genus) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            PartialSpine::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        (None, Some(g)) => standard_spine(g).map_err(|e| e.to_string()),
        (None, None) => Err("one of --genus or --spine is required".into()),
    }
}

fn matrix_json(m: &OperatorMatrix) -> Value {
    let rows: Vec<Value> = (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| json!(m.get(i, j).to_string())).collect())
        .collect();
    Value::Array(rows)
}

fn basis_json(rep: &SpineRep) -> Value {
    rep.basis().iter().map(|w| json!(w.to_named(rep.spine()))).collect()
}

fn matrix_text(rep: &SpineRep, m: &OperatorMatrix) -> String {
    let mut s = String::from("basis:\n");
    for (i, w) in rep.basis().iter().enumerate() {
        s += &format!("  {i}: {}\n", w.to_named(rep.spine()));
    }
    s += "columns are images of basis vectors:\n";
    s += &m.to_string();
    s
}

fn cmd_dim(src: &SpineSource, n: u32, list_only: bool) -> CmdResult {
    let rep = SpineRep::new(load_spine(src)?, n);
    let named: Vec<String> = rep.basis().iter().map(|w| w.to_named(rep.spine())).collect();
    let mut text = String::new();
    if !list_only {
        text += &format!("dim {}\n", rep.dim());
    }
    for w in &named {
        text += &format!("{w}\n");
    }
    let value = json!({ "N": n, "dim": rep.dim(), "basis": named });
    Ok((value, text, Outcome::Pass))
}

fn component(spine: &PartialSpine, name: &str) -> Result<Component, String> {
    spine
        .component_by_name(name)
        .ok_or_else(|| format!("no component named {name}"))
}

fn cmd_op(
    src: &SpineSource,
    n: u32,
    name: &str,
    kind: OpKind,
    thread: &AnnulusElement,
) -> CmdResult {
    let rep = SpineRep::new(load_spine(src)?, n);
    let c = component(rep.spine(), name)?;
    let m = match kind {
        OpKind::Boundary => rep.boundary_curve_operator(c),
        OpKind::Curve => rep.spine_curve_operator(c, thread).map_err(|e| e.to_string())?,
    };
    let value = json!({
        "N": n,
        "component": name,
        "kind": match kind { OpKind::Boundary => "boundary", OpKind::Curve => "curve" },
        "thread": thread.to_string(),
        "basis": basis_json(&rep),
        "entries": matrix_json(&m),
    });
    Ok((value, matrix_text(&rep, &m), Outcome::Pass))
}

fn cmd_flip(src: &SpineSource, n: u32, edge: &str) -> CmdResult {
    let rep = SpineRep::new(load_spine(src)?, n);
    let Component::Edge(e) = component(rep.spine(), edge)? else {
        return Err(format!("{edge} is a circle, not an edge"));
    };
    let f = flip(&rep, e).map_err(|e| e.to_string())?;
    let target_text = f.target.spine().to_text();
    let mut text = format!("flipped spine:\n{target_text}");
    text += "target basis:\n";
    for (i, w) in f.target.basis().iter().enumerate() {
        text += &format!("  {i}: {}\n", w.to_named(f.target.spine()));
    }
    text += &matrix_text(&rep, &f.matrix);
    let value = json!({
        "N": n,
        "edge": edge,
        "spine": target_text,
        "basis": basis_json(&rep),
        "target_basis": basis_json(&f.target),
        "entries": matrix_json(&f.matrix),
    });
    Ok((value, text, Outcome::Pass))
}

fn cmd_sixj(s: SixJ, n: Option<u32>, generic: bool) -> CmdResult {
    let ring = match (generic, n) {
        (true, _) => ScalarRing::Generic,
        (false, Some(n)) => ScalarRing::Cyclotomic(n),
        (false, None) => return Err("--N is required unless --generic is given".into()),
    };
    let v = six_j(s, ring).map_err(|e| e.to_string())?;
    let value = json!({ "symbol": s.to_string(), "ring": ring.to_string(), "value": v.to_string() });
    Ok((value, format!("{v}\n"), Outcome::Pass))
}

fn cmd_eval_net(file: &PathBuf, n: Option<u32>, budget: u32) -> CmdResult {
    let text = fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let net = ColoredNetwork::parse(&text).map_err(|e| format!("{}: {e}", file.display()))?;
    let ring = n.map_or(ScalarRing::Generic, ScalarRing::Cyclotomic);
    let v = eval_network_with_budget(&net, ring, budget).map_err(|e| e.to_string())?;
    let value = json!({ "ring": ring.to_string(), "value": v.to_string() });
    Ok((value, format!("{v}\n"), Outcome::Pass))
}

fn cmd_cheb(kind: Kind, n: u32) -> CmdResult {
    let (k, name) = match kind {
        Kind::T => (ChebKind::T, "T"),
        Kind::S => (ChebKind::S, "S"),
    };
    let p = chebyshev(k, n);
    let value = json!({ "kind": name, "n": n, "polynomial": p.to_string() });
    Ok((value, format!("{p}\n"), Outcome::Pass))
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn shadow_part(genus: u32, n: u32) -> Result<(Value, String, bool), String> {
    let report = verify_shadow(genus, n).map_err(|e| e.to_string())?;
    let rep = SpineRep::new(standard_spine(genus).map_err(|e| e.to_string())?, n);
    let mut text = String::new();
    let mut ok = report.pass();
    let mut colors = Vec::new();
    if genus == 1 {
        // the torus basis is indexed by one circle color
        for w in rep.basis() {
            let c = w.circles[0];
            let r = shadow_check(c, n);
            ok &= r.is_ok();
            let shown = r.as_ref().map_or_else(|e| e.to_string(), |v| v.to_string());
            text += &format!("S_{c}: T_{n} acts by {shown}\n");
            colors.push(json!({ "color": c, "value": shown, "pass": r.is_ok() }));
        }
    }
    let mut curves = Vec::new();
    for e in &report.entries {
        let diag: Vec<String> = e.diagonal.iter().map(|x| x.to_string()).collect();
        text += &format!("{}: {}\n", e.curve, pass_word(e.pass));
        for (w, d) in rep.basis().iter().zip(&diag) {
            text += &format!("  {}: {d}\n", w.to_named(rep.spine()));
        }
        curves.push(json!({ "curve": e.curve, "diagonal": diag, "pass": e.pass }));
    }
    text += &format!("shadow: {}\n", pass_word(ok));
    let value = json!({ "pass": ok, "colors": colors, "curves": curves });
    Ok((value, text, ok))
}

fn irreducible_part(genus: u32, n: u32, budget: BurnsideBudget) -> Result<(Value, String, bool), String> {
    let r = verify_irreducible(genus, n, budget).map_err(|e| e.to_string())?;
    let ok = r.irreducible();
    let verdict = if ok { "PASS" } else { "INCONCLUSIVE" };
    let mut text = format!(
        "irreducible: {verdict} span {}/{} (dim {}, {} generators, {} products)\n",
        r.span,
        r.dim * r.dim,
        r.dim,
        r.generators,
        r.words
    );
    if !ok {
        text += "  the span falls short of the full matrix algebra; this generator set does not prove reducibility\n";
    }
    let value = json!({
        "pass": ok,
        "dim": r.dim,
        "span": r.span,
        "target": r.dim * r.dim,
        "generators": r.generators,
        "products": r.words,
    });
    Ok((value, text, ok))
}

fn cmd_shadow(genus: u32, n: u32) -> CmdResult {
    let (value, text, ok) = shadow_part(genus, n)?;
    let value = json!({ "genus": genus, "N": n, "shadow": value });
    Ok((value, text, if ok { Outcome::Pass } else { Outcome::Fail }))
}

fn cmd_verify(genus: u32, n: u32, which: Which, budget: BurnsideBudget) -> CmdResult {
    let mut value = json!({ "genus": genus, "N": n });
    let mut text = String::new();
    let mut ok = true;
    if matches!(which, Which::Irreducible | Which::All) {
        let (v, t, pass) = irreducible_part(genus, n, budget)?;
        value["irreducible"] = v;
        text += &t;
        ok &= pass;
    }
    if matches!(which, Which::Shadow | Which::All) {
        let (v, t, pass) = shadow_part(genus, n)?;
        value["shadow"] = v;
        text += &t;
        ok &= pass;
    }
    value["pass"] = json!(ok);
    text += &format!("{}\n", pass_word(ok));
    Ok((value, text, if ok { Outcome::Pass } else { Outcome::Fail }))
}

fn move_json(m: &ReductionMove) -> Value {
    let mut v = json!({
        "case": m.case.number(),
        "description": m.description,
        "coefficient": m.coefficient.as_ref().map(|c| c.to_string()),
        "weights": m.weights.to_named(&m.spine),
        "complexity_before": [m.before.edges, m.before.max, m.before.n_max],
        "complexity_after": [m.after.edges, m.after.max, m.after.n_max],
    });
    if let Some(next) = &m.then {
        v["then"] = move_json(next);
    }
    v
}

fn move_text(m: &ReductionMove, indent: &str) -> String {
    let mut s = format!(
        "{indent}case {}: {} -> {}\n{indent}  {}\n",
        m.case.number(),
        m.before,
        m.after,
        m.description
    );
    if let Some(c) = &m.coefficient {
        s += &format!("{indent}  coefficient {c}\n");
    }
    if m.then.is_none() {
        s += &format!("{indent}  now {}\n", m.weights.to_named(&m.spine));
    }
    if let Some(next) = &m.then {
        s += &format!("{indent}  now {}\n", m.weights.to_named(&m.spine));
        s += &move_text(next, &format!("{indent}  "));
    }
    s
}

fn cmd_reduce_trace(src: &SpineSource, n: u32, weights: &str) -> CmdResult {
    let spine = load_spine(src)?;
    let w = WeightSystem::parse(weights, &spine)
        .ok_or_else(|| format!("cannot read weights {weights:?} for this spine"))?;
    let moves = reduce_trace(&spine, &w, n).map_err(|e| e.to_string())?;
    let mut text = format!("start {}\n", w.to_named(&spine));
    for (i, m) in moves.iter().enumerate() {
        text += &format!("{}.\n{}", i + 1, move_text(m, "  "));
    }
    text += "Done\n";
    let value = json!({
        "N": n,
        "start": w.to_named(&spine),
        "moves": moves.iter().map(move_json).collect::<Vec<_>>(),
        "done": true,
    });
    Ok((value, text, Outcome::Pass))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Dim { .. } => "dim",
        Command::Weights { .. } => "weights",
        Command::Op { .. } => "op",
        Command::Flip { .. } => "flip",
        Command::Sixj { .. } => "sixj",
        Command::EvalNet { .. } => "eval-net",
        Command::Cheb { .. } => "cheb",
        Command::Shadow { .. } => "shadow",
        Command::Verify { .. } => "verify",
        Command::ReduceTrace { .. } => "reduce-trace",
    }
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Dim { src, level } => cmd_dim(src, level.n, false),
        Command::Weights { src, level } => cmd_dim(src, level.n, true),
        Command::Op {
            src,
            level,
            edge,
            circle,
            kind,
            thread,
        } => {
            let (name, default) = match (edge, circle) {
                (Some(e), _) => (e, OpKind::Boundary),
                (None, Some(c)) => (c, OpKind::Curve),
                (None, None) => unreachable!("clap requires one of them"),
            };
            cmd_op(src, level.n, name, kind.unwrap_or(default), thread)
        }
        Command::Flip { src, level, edge } => cmd_flip(src, level.n, edge),
        Command::Sixj {
            a,
            b,
            e,
            c,
            d,
            f,
            n,
            generic,
        } => cmd_sixj(SixJ::new(*a, *b, *e, *c, *d, *f), *n, *generic),
        Command::EvalNet { file, n, budget } => cmd_eval_net(file, *n, *budget),
        Command::Cheb { kind, n } => cmd_cheb(*kind, *n),
        Command::Shadow { genus, level } => cmd_shadow(*genus, level.n),
        Command::Verify {
            genus,
            level,
            which,
            max_dim,
            max_word_len,
        } => {
            let budget = BurnsideBudget {
                max_dim: *max_dim,
                max_word_len: *max_word_len,
            };
            cmd_verify(*genus, level.n, *which, budget)
        }
        Command::ReduceTrace { src, level, weights } => cmd_reduce_trace(src, level.n, weights),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    match result {
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok((mut value, text, outcome)) => {
            if cli.json {
                value["schema"] = json!(1);
                value["command"] = json!(command_name(&cli.command));
                if cli.timing {
                    value["elapsed_ms"] = json!(elapsed_ms);
                }
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                print!("{text}");
                if cli.timing {
                    println!("elapsed {elapsed_ms:.1} ms");
                }
            }
            match outcome {
                Outcome::Pass => ExitCode::SUCCESS,
                Outcome::Fail => ExitCode::from(1),
            }
        }
    }
}
