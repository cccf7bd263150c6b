use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use regstar::io::{self, GraphDoc, GroupoidDoc, PalgDoc, SandwichDoc, SemigroupDoc, TripleDoc};
use regstar::*;
use serde_json::Value;

#[derive(Parser)]
#[command(name = "regstar", version, about = "Finite regular *-semigroups and chained projection groupoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// JSON input file; stdin when absent
    #[arg(short, long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a semigroup (or the Kinyon algebra) and print it as JSON
    Build {
        #[command(subcommand)]
        what: Build,
    },
    /// Run an axiom suite and print one line per law
    Verify {
        #[arg(value_enum)]
        suite: Option<Suite>,
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random chains for the evaluation suite
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Print the degree-4 partition data separating G2 from its linked-pair-free form
        #[arg(long)]
        counterexample_g2prime: bool,
    },
    /// Semigroup JSON in, triple JSON out
    Extract {
        #[command(flatten)]
        input: Input,
    },
    /// Triple JSON in, semigroup JSON out
    Reconstruct {
        #[command(flatten)]
        input: Input,
        /// Tabulate without a coherence certificate and check the result afterwards
        #[arg(long)]
        force: bool,
    },
    /// Extract then reconstruct (or the reverse for a triple) and compare
    Roundtrip {
        #[command(flatten)]
        input: Input,
    },
    /// The maximum idempotent-separating congruence
    Mu {
        #[command(flatten)]
        input: Input,
    },
    /// The subsemigroup generated by the projections, with factorizations
    Closure {
        #[command(flatten)]
        input: Input,
    },
    /// Graphviz DOT for a semigroup or projection algebra
    ExportDot {
        #[arg(value_enum)]
        kind: DotKind,
        #[command(flatten)]
        input: Input,
    },
    /// Inverse semigroup of an inductive groupoid (groupoid or triple JSON)
    Esn {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Subcommand)]
enum Build {
    Partition {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: Option<usize>,
    },
    Brauer {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// From a graph document, or --complete/--discrete N
    Adjacency {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "discrete")]
        complete: Option<usize>,
        #[arg(long)]
        discrete: Option<usize>,
    },
    /// From a sandwich matrix document, or a random one over Z_k
    Rees {
        #[command(flatten)]
        input: Input,
        #[arg(long, requires = "group")]
        random: Option<usize>,
        #[arg(long)]
        group: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// F_P of a projection algebra
    Fp {
        #[arg(long)]
        palg: Option<PathBuf>,
    },
    /// The five-point Kinyon projection algebra
    Kinyon {
        /// zθ_e = q instead of p
        #[arg(long)]
        variant: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Star,
    Palg,
    Groupoid,
    Eps,
    Coherence,
}

#[derive(Clone, Copy, ValueEnum)]
enum DotKind {
    Eggbox,
    Friendship,
    Hasse,
}

/// Exit status carried through anyhow: 1 for a failed verification, 2 for bad input.
#[derive(Debug)]
struct Failed(u8);

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "verification failed")
    }
}

impl std::error::Error for Failed {}

fn read_text(path: Option<&PathBuf>) -> anyhow::Result<String> {
    let mut text = String::new();
    match path {
        Some(p) => text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
        }
    }
    Ok(text)
}

fn read_doc<T: for<'de> serde::Deserialize<'de>>(input: &Input) -> anyhow::Result<T> {
    Ok(io::from_json(&read_text(input.input.as_ref())?)?)
}

fn read_value(input: &Input) -> anyhow::Result<Value> {
    Ok(io::from_json(&read_text(input.input.as_ref())?)?)
}

fn semigroup(input: &Input) -> anyhow::Result<StarSemigroup> {
    Ok(StarSemigroup::try_from(read_doc::<SemigroupDoc>(input)?)?)
}

fn from_value<T: for<'de> serde::Deserialize<'de>>(v: Value) -> anyhow::Result<T> {
    Ok(io::from_json(&v.to_string())?)
}

fn emit_semigroup(s: &StarSemigroup) {
    println!("{}", io::to_json(&SemigroupDoc::from(s)));
    let sp = s.special_elements();
    eprintln!("semigroup: {} elements, {} projections, {} idempotents", s.size(), sp.projections.len(), sp.idempotents.len());
}

fn finish(rep: &Report, summary: String) -> anyhow::Result<()> {
    print!("{}", rep);
    let verdict = if rep.passed() { "PASS" } else { "FAIL" };
    println!("{}: {}", summary, verdict);
    if rep.passed() {
        Ok(())
    } else {
        Err(Failed(1).into())
    }
}

fn build(what: Build) -> anyhow::Result<()> {
    match what {
        Build::Partition { n, bound } => emit_semigroup(&partition_monoid(n, Family::Full, bound)?.0),
        Build::Brauer { n, bound } => emit_semigroup(&partition_monoid(n, Family::Brauer, bound)?.0),
        Build::Adjacency { input, complete, discrete } => {
            let g = match (complete, discrete) {
                (Some(n), _) => SimpleGraph::complete(n),
                (_, Some(n)) => SimpleGraph::discrete(n),
                _ => SimpleGraph::try_from(read_doc::<GraphDoc>(&input)?)?,
            };
            emit_semigroup(&adjacency_semigroup(&g));
        }
        Build::Rees { input, random, group, seed } => {
            let m = match (random, group) {
                (Some(points), Some(k)) => {
                    use rand::SeedableRng;
                    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                    SandwichMatrix::random(points, Group::cyclic(k), 0.3, &mut rng)
                }
                _ => SandwichMatrix::try_from(read_doc::<SandwichDoc>(&input)?)?,
            };
            emit_semigroup(&rees_semigroup(&m));
        }
        Build::Fp { palg } => {
            let p = ProjectionAlgebra::try_from(read_doc::<PalgDoc>(&Input { input: palg })?)?;
            if let Some(c) = p.verify_axioms().first_failure() {
                eprintln!("{}", c);
                return Err(Failed(1).into());
            }
            emit_semigroup(&fp_semigroup(&p).semigroup);
        }
        Build::Kinyon { variant } => println!("{}", io::to_json(&PalgDoc::from(&ProjectionAlgebra::kinyon(variant)))),
    }
    Ok(())
}

fn verify(suite: Suite, input: &Input, seed: u64, samples: usize) -> anyhow::Result<()> {
    match suite {
        Suite::Star => {
            let s = semigroup(input)?;
            let sp = s.special_elements();
            let summary = format!("star: size {}, projections {}, idempotents {}", s.size(), sp.projections.len(), sp.idempotents.len());
            finish(&s.verify_star_laws(), summary)
        }
        Suite::Palg => {
            let p = ProjectionAlgebra::try_from(read_doc::<PalgDoc>(input)?)?;
            let rel = p.relations();
            let summary = format!("palg: size {}, friendship edges {}", p.size(), rel.friendship_edges().len());
            finish(&p.verify_axioms(), summary)
        }
        Suite::Groupoid => {
            let v = read_value(input)?;
            let g = if v.get("eps").is_some() {
                ChainedProjectionGroupoid::try_from(from_value::<TripleDoc>(v)?)?.groupoid().clone()
            } else {
                OrderedGroupoid::try_from(from_value::<GroupoidDoc>(v)?)?
            };
            let mut rep = g.palg().verify_axioms();
            rep.extend(g.verify());
            finish(&rep, format!("groupoid: {} objects, {} morphisms", g.object_count(), g.morphism_count()))
        }
        Suite::Eps => {
            let t = ChainedProjectionGroupoid::try_from(read_doc::<TripleDoc>(input)?)?;
            finish(&t.verify_evaluation(seed, samples), format!("eps: seed {}, samples {}", seed, samples))
        }
        Suite::Coherence => {
            let t = ChainedProjectionGroupoid::try_from(read_doc::<TripleDoc>(input)?)?;
            let mut rep = t.palg().verify_axioms();
            rep.extend(t.groupoid().verify());
            rep.extend(t.verify_evaluation(seed, samples));
            rep.extend(t.verify_coherence());
            finish(&rep, format!("coherence: {} morphisms, seed {}", t.groupoid().morphism_count(), seed))
        }
    }
}

fn counterexample() -> anyhow::Result<()> {
    let cx = G2PrimeCounterexample::new();
    for (name, p) in [("b", &cx.b), ("e", &cx.e), ("e1", &cx.e1), ("e2", &cx.e2), ("f", &cx.f), ("f1", &cx.f1), ("f2", &cx.f2)] {
        println!("{} = {}", name, p);
    }
    println!("LP1..LP4 = {:?}", cx.lp);
    println!("ee1bf1f = {}", cx.lhs);
    println!("ee2bf2f = {}", cx.rhs);
    println!("(e,f) b-linked: {}", cx.linked);
    let holds = cx.lp.iter().all(|&x| x) && cx.lhs != cx.rhs;
    println!("g2prime counterexample: {}", if holds { "PASS" } else { "FAIL" });
    if holds {
        Ok(())
    } else {
        Err(Failed(1).into())
    }
}

fn reconstruct(input: &Input, force: bool) -> anyhow::Result<()> {
    let t = ChainedProjectionGroupoid::try_from(read_doc::<TripleDoc>(input)?)?;
    let s = if force {
        let s = t.reconstruct_forced()?;
        let rep = s.verify_star_laws();
        if !rep.passed() {
            eprint!("{}", rep);
        }
        s
    } else {
        match t.certify() {
            Ok(cert) => t.reconstruct(&cert)?,
            Err(rep) => {
                eprint!("{}", rep);
                eprintln!("reconstruct: refused, triple is not a chained projection groupoid (use --force)");
                return Err(Failed(1).into());
            }
        }
    };
    emit_semigroup(&s);
    Ok(())
}

fn roundtrip(input: &Input) -> anyhow::Result<()> {
    let v = read_value(input)?;
    let rt = if v.get("eps").is_some() {
        ChainedProjectionGroupoid::try_from(from_value::<TripleDoc>(v)?)?.roundtrip()?
    } else {
        roundtrip_semigroup(&StarSemigroup::try_from(from_value::<SemigroupDoc>(v)?)?)?
    };
    match &rt.difference {
        None => {
            println!("roundtrip: EQUAL ({} elements)", rt.size);
            Ok(())
        }
        Some(d) => {
            println!("roundtrip: DIFFERENT ({} elements) {}", rt.size, d);
            Err(Failed(1).into())
        }
    }
}

fn mu(input: &Input) -> anyhow::Result<()> {
    let s = semigroup(input)?;
    let c = s.mu_congruence()?;
    println!("{}", serde_json::json!({ "classes": c.class_of }));
    println!("mu: {} classes on {} elements, {}", c.class_count, s.size(), if c.is_identity() { "fundamental" } else { "not fundamental" });
    Ok(())
}

fn closure(input: &Input) -> anyhow::Result<()> {
    let s = semigroup(input)?;
    let c = s.projection_closure()?;
    let members: Vec<Value> = c.members.iter().map(|(x, path)| serde_json::json!({ "element": x, "factors": path })).collect();
    println!("{}", Value::Array(members));
    println!("closure: {} of {} elements", c.len(), s.size());
    Ok(())
}

fn export_dot(kind: DotKind, input: &Input) -> anyhow::Result<()> {
    let v = read_value(input)?;
    let palg = |v: Value| -> anyhow::Result<ProjectionAlgebra> {
        if v.get("theta").is_some() {
            Ok(ProjectionAlgebra::try_from(from_value::<PalgDoc>(v)?)?)
        } else {
            Ok(StarSemigroup::try_from(from_value::<SemigroupDoc>(v)?)?.projection_algebra().0)
        }
    };
    let text = match kind {
        DotKind::Eggbox => dot::eggbox(&StarSemigroup::try_from(from_value::<SemigroupDoc>(v)?)?),
        DotKind::Friendship => dot::friendship(&palg(v)?),
        DotKind::Hasse => dot::hasse(&palg(v)?),
    };
    print!("{}", text);
    Ok(())
}

fn run_esn(input: &Input) -> anyhow::Result<()> {
    let v = read_value(input)?;
    let g = if v.get("eps").is_some() {
        let t = ChainedProjectionGroupoid::try_from(from_value::<TripleDoc>(v)?)?;
        let tv = t.triviality();
        eprintln!("triviality: {:?} agree={}", tv.values(), tv.agree());
        t.groupoid().clone()
    } else {
        OrderedGroupoid::try_from(from_value::<GroupoidDoc>(v)?)?
    };
    emit_semigroup(&esn(&g)?);
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Build { what } => build(what),
        Command::Verify { counterexample_g2prime: true, .. } => counterexample(),
        Command::Verify { suite: Some(suite), input, seed, samples, .. } => verify(suite, &input, seed, samples),
        Command::Verify { suite: None, .. } => anyhow::bail!("verify needs a suite or --counterexample-g2prime"),
        Command::Extract { input } => {
            let t = ChainedProjectionGroupoid::extract(&semigroup(&input)?);
            println!("{}", io::to_json(&TripleDoc::from(&t)));
            eprintln!("extract: {} objects, {} morphisms", t.groupoid().object_count(), t.groupoid().morphism_count());
            Ok(())
        }
        Command::Reconstruct { input, force } => reconstruct(&input, force),
        Command::Roundtrip { input } => roundtrip(&input),
        Command::Mu { input } => mu(&input),
        Command::Closure { input } => closure(&input),
        Command::ExportDot { kind, input } => export_dot(kind, &input),
        Command::Esn { input } => run_esn(&input),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(Failed(code)) = e.downcast_ref::<Failed>() {
                return ExitCode::from(*code);
            }
            eprintln!("error: {:#}", e);
            match e.downcast_ref::<Error>() {
                Some(Error::Invariant(_)) | Some(Error::Refused(_)) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
