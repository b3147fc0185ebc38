use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use graph_hopf_core::bialgebra::{
    antipode_forest, antipode_recursive, contraction_coproduct, isoclass, restriction_coproduct,
    IndexedElement, Tensor2,
};
use graph_hopf_core::characters::{lambda_chr, Character, LambdaEngine};
use graph_hopf_core::chromatic::{chromatic, ChromaticEngine, CHROMATIC_ENGINES};
use graph_hopf_core::lattice::{AdmissibleLattice, LatticeSummary};
use graph_hopf_core::linear::{format_rational, parse_rational};
use graph_hopf_core::verify::{self, Suite};
use graph_hopf_core::wsym::{expand, hilbert_w, hilbert_words, pchr_nc, phi0_nc, PackedWord};
use graph_hopf_core::{Graph, LinComb, Monomial, Partition, Polynomial};

/// Exact computations with the chromatic bialgebras of graphs.
///
/// Graphs are written `n: a-b, c-d, ...` with vertices `1..n`, e.g.
/// `"3: 1-2, 2-3, 1-3"`; `"0:"` is the empty graph. Output is JSON.
#[derive(Parser, Debug)]
#[command(name = "graph-hopf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic polynomial as a coefficient array (index = degree).
    Chromatic {
        #[arg(long)]
        graph: String,
        /// Also evaluate at this rational, e.g. `-3` or `1/2`.
        #[arg(long)]
        eval: Option<String>,
        /// `all` runs every engine and fails unless they agree.
        #[arg(long, value_enum, default_value_t = EngineArg::Delcon)]
        engine: EngineArg,
        /// Render the polynomial as text instead of an array.
        #[arg(long)]
        pretty: bool,
    },
    /// Value of a distinguished character on a graph.
    Character {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        which: WhichArg,
    },
    /// Restriction (Δ) or contraction-extraction (δ) coproduct.
    Coproduct {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = KindArg::Restriction)]
        kind: KindArg,
        /// Keep vertex labels instead of collecting isomorphic terms.
        #[arg(long)]
        indexed: bool,
    },
    /// Antipode of a connected graph in the quotient by K1 - 1.
    Antipode {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Forest)]
        method: MethodArg,
    },
    /// Lattice of admissible partitions with its Hasse diagram.
    Lattice {
        #[arg(long)]
        graph: String,
        /// Also print μ(bottom, top).
        #[arg(long)]
        mobius: bool,
    },
    /// Noncommutative chromatic symmetric function of an indexed graph.
    Ncchromatic {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = BasisArg::W)]
        basis: BasisArg,
        /// `phi0` sums packed colourings of contractions; words basis only.
        #[arg(long, value_enum, default_value_t = MorphismArg::Pchr)]
        morphism: MorphismArg,
        /// Also print the image under the Hilbert-polynomial map.
        #[arg(long)]
        project: bool,
    },
    /// Run identity suites over all graphs up to a size bound.
    Verify {
        /// One suite; all of them when omitted.
        #[arg(long)]
        suite: Option<String>,
        /// Largest vertex count; capped by GRAPH_HOPF_MAX_N when set.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Partition,
    Delcon,
    Character,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WhichArg {
    Chr,
    Zero,
    ChrInverse,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Restriction,
    Contraction,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Forest,
    Recursive,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    #[value(name = "W")]
    W,
    Words,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MorphismArg {
    Pchr,
    Phi0,
}

enum Failure {
    /// Unusable input: exit 2.
    Input(String),
    /// A violated identity: exit 1.
    Identity(String),
}

type Outcome = Result<(), Failure>;

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn parse_graph(s: &str) -> Result<Graph, Failure> {
    s.parse().map_err(input)
}

fn print<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

#[derive(Serialize)]
#[serde(untagged)]
enum PolyOut {
    Coefficients(Polynomial),
    Text(String),
}

impl PolyOut {
    fn new(p: Polynomial, pretty: bool) -> Self {
        if pretty {
            PolyOut::Text(p.pretty())
        } else {
            PolyOut::Coefficients(p)
        }
    }
}

#[derive(Serialize)]
struct ChromaticOut {
    poly: PolyOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
}

fn run_chromatic(graph: &str, eval: Option<&str>, engine: EngineArg, pretty: bool) -> Outcome {
    let g = parse_graph(graph)?;
    let at = eval.map(parse_rational).transpose().map_err(input)?;
    let poly = match engine {
        EngineArg::Partition => chromatic(&g, ChromaticEngine::Partition),
        EngineArg::Delcon => chromatic(&g, ChromaticEngine::DeletionContraction),
        EngineArg::Character => chromatic(&g, ChromaticEngine::Character),
        EngineArg::All => {
            let polys: Vec<Polynomial> = CHROMATIC_ENGINES.iter().map(|&e| chromatic(&g, e)).collect();
            if polys.iter().any(|p| *p != polys[0]) {
                return Err(Failure::Identity(format!("engines disagree on {g}: {polys:?}")));
            }
            polys[0].clone()
        }
    };
    let value = at.map(|q| format_rational(&poly.eval(&q)));
    print(&ChromaticOut { poly: PolyOut::new(poly, pretty), value });
    Ok(())
}

#[derive(Serialize)]
struct ValueOut {
    value: String,
}

fn run_character(graph: &str, which: WhichArg) -> Outcome {
    let g = parse_graph(graph)?;
    let value = match which {
        WhichArg::Chr => lambda_chr(&g, LambdaEngine::DeletionContraction),
        WhichArg::Zero => Character::lambda_zero().eval_graph(&g),
        WhichArg::ChrInverse => Character::lambda_chr().invert().map_err(input)?.eval_graph(&g),
    };
    print(&ValueOut { value: format_rational(&value) });
    Ok(())
}

#[derive(Serialize)]
struct PairTerm {
    coef: String,
    left: String,
    right: String,
}

#[derive(Serialize)]
struct Terms<T> {
    terms: Vec<T>,
}

fn pair_terms<B: Ord + Clone + ToString>(t: &Tensor2<B>) -> Terms<PairTerm> {
    let terms = t
        .iter()
        .map(|((a, b), c)| PairTerm { coef: format_rational(c), left: a.to_string(), right: b.to_string() })
        .collect();
    Terms { terms }
}

fn run_coproduct(graph: &str, kind: KindArg, indexed: bool) -> Outcome {
    let g = parse_graph(graph)?;
    if indexed {
        let x = IndexedElement::basis(g);
        let t = match kind {
            KindArg::Restriction => restriction_coproduct(&x),
            KindArg::Contraction => contraction_coproduct(&x),
        };
        print(&pair_terms(&t));
    } else {
        let x = isoclass(&g);
        let t = match kind {
            KindArg::Restriction => restriction_coproduct(&x),
            KindArg::Contraction => contraction_coproduct(&x),
        };
        print(&pair_terms(&t));
    }
    Ok(())
}

#[derive(Serialize)]
struct MonomialTerm {
    coef: String,
    monomial: String,
}

fn run_antipode(graph: &str, method: MethodArg) -> Outcome {
    let g = parse_graph(graph)?;
    let s = match method {
        MethodArg::Forest => antipode_forest(&g),
        MethodArg::Recursive => antipode_recursive(&g),
    }
    .map_err(input)?;
    let terms = s
        .iter()
        .map(|(m, c): (&Monomial, _)| MonomialTerm { coef: format_rational(c), monomial: m.to_string() })
        .collect();
    print(&Terms { terms });
    Ok(())
}

#[derive(Serialize)]
struct LatticeOut {
    #[serde(flatten)]
    summary: LatticeSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    mobius: Option<String>,
}

fn run_lattice(graph: &str, mobius: bool) -> Outcome {
    let g = parse_graph(graph)?;
    let l = AdmissibleLattice::build(&g);
    let mobius = mobius.then(|| format_rational(&l.mobius_bottom_top()));
    print(&LatticeOut { summary: LatticeSummary::from(&l), mobius });
    Ok(())
}

#[derive(Serialize)]
struct BlockTerm {
    coef: String,
    blocks: Partition,
}

#[derive(Serialize)]
struct WordTerm {
    coef: String,
    word: PackedWord,
}

#[derive(Serialize)]
struct NcOut<T> {
    terms: Vec<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    projection: Option<Polynomial>,
}

fn word_terms(x: &LinComb<PackedWord>) -> Vec<WordTerm> {
    x.iter().map(|(w, c)| WordTerm { coef: format_rational(c), word: w.clone() }).collect()
}

fn run_ncchromatic(graph: &str, basis: BasisArg, morphism: MorphismArg, project: bool) -> Outcome {
    let g = parse_graph(graph)?;
    match (morphism, basis) {
        (MorphismArg::Pchr, BasisArg::W) => {
            let x = pchr_nc(&g);
            let terms =
                x.iter().map(|(p, c)| BlockTerm { coef: format_rational(c), blocks: p.clone() }).collect();
            print(&NcOut { terms, projection: project.then(|| hilbert_w(&x)) });
        }
        (MorphismArg::Pchr, BasisArg::Words) => {
            let x = expand(&pchr_nc(&g));
            print(&NcOut { terms: word_terms(&x), projection: project.then(|| hilbert_words(&x)) });
        }
        (MorphismArg::Phi0, BasisArg::Words) => {
            let x = phi0_nc(&g);
            print(&NcOut { terms: word_terms(&x), projection: project.then(|| hilbert_words(&x)) });
        }
        (MorphismArg::Phi0, BasisArg::W) => {
            return Err(Failure::Input("phi0 is only available with --basis words".into()));
        }
    }
    Ok(())
}

fn effective_max_n(requested: usize) -> Result<usize, Failure> {
    match std::env::var("GRAPH_HOPF_MAX_N") {
        Ok(cap) => {
            let cap: usize =
                cap.trim().parse().map_err(|_| Failure::Input(format!("bad GRAPH_HOPF_MAX_N {cap:?}")))?;
            Ok(requested.min(cap))
        }
        Err(_) => Ok(requested),
    }
}

fn run_verify(suite: Option<&str>, max_n: usize) -> Outcome {
    let suites = match suite {
        Some(name) => vec![name.parse::<Suite>().map_err(Failure::Input)?],
        None => Suite::ALL.to_vec(),
    };
    let max_n = effective_max_n(max_n)?;
    for suite in suites {
        match verify::run(suite, max_n) {
            Ok(report) => print(&report),
            Err(violation) => {
                print(&violation);
                return Err(Failure::Identity(violation.to_string()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Chromatic { graph, eval, engine, pretty } => {
            run_chromatic(graph, eval.as_deref(), *engine, *pretty)
        }
        Command::Character { graph, which } => run_character(graph, *which),
        Command::Coproduct { graph, kind, indexed } => run_coproduct(graph, *kind, *indexed),
        Command::Antipode { graph, method } => run_antipode(graph, *method),
        Command::Lattice { graph, mobius } => run_lattice(graph, *mobius),
        Command::Ncchromatic { graph, basis, morphism, project } => {
            run_ncchromatic(graph, *basis, *morphism, *project)
        }
        Command::Verify { suite, max_n } => run_verify(suite.as_deref(), *max_n),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Identity(msg)) => {
            eprintln!("identity violated: {msg}");
            ExitCode::from(1)
        }
    }
}
