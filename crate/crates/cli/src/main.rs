mod args;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use paradox_lab::analysis::{self, IdentityOptions, Outcome};
use paradox_lab::centrality::{DEFAULT_BETA, DEFAULT_ELL, DEFAULT_KATZ_FRACTION};
use paradox_lab::generators::configuration_deviation;
use paradox_lab::io::{
    emit_edge_list, emit_matrix_market, emit_report, parse_edge_list_as, parse_matrix_market, ParsedGraph, ReportFormat,
};
use paradox_lab::{generate, CentralityParams, Error, Graph, KatzAlpha, Measure, Model, RandomGraphSpec, Result};

use args::{
    Cli, Command, GeneratorArgs, GraphFormat, InputArgs, MeasureArgs, MeasureName, ModelName, OutputArgs, OutputFormat,
};

const THREADS_VAR: &str = "PARADOX_LAB_THREADS";
const DEFAULT_RANDOM_N: usize = 50;
const DEFAULT_P: f64 = 0.1;
const DEFAULT_M_ATTACH: usize = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match configure_threads().and_then(|()| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("paradox-lab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| Error::Usage(format!("{THREADS_VAR} must be a non-negative integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::Usage(format!("cannot configure worker threads: {e}")))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen {
            generator,
            graph_format,
            output,
        } => {
            let spec = generator_spec(&generator)?.ok_or_else(|| Error::Usage("gen needs --model".into()))?;
            let g = generate_reporting(&spec)?;
            let text = match graph_format {
                GraphFormat::EdgeList => emit_edge_list(&g),
                GraphFormat::MatrixMarket => emit_matrix_market(&g),
            };
            write_output(&output, &text)
        }
        Command::Centrality(a) => analyze(&a.input, &a.measure, &a.output, analysis::centrality_document),
        Command::Paradox(a) => analyze(&a.input, &a.measure, &a.output, analysis::paradox_document),
        Command::Compare(a) => analyze(&a.input, &a.measure, &a.output, analysis::compare_document),
        Command::Bias {
            generator,
            measure,
            graphs,
            bins,
            output,
        } => {
            let spec = generator_spec(&generator)?.ok_or_else(|| Error::Usage("bias needs --model".into()))?;
            if !spec.model.is_random() {
                eprintln!(
                    "note: {} graphs are deterministic; every sample is identical",
                    spec.model.name()
                );
            }
            let params = measure_params(&measure)?;
            let outcome = analysis::bias_document(&spec, &params, graphs, generator.seed, bins)?;
            emit(outcome, &output)
        }
        Command::Identities {
            input,
            beta,
            ells,
            trials,
            tol,
            max_iters,
            output,
        } => {
            let graph = load_input(&input)?;
            let opts = IdentityOptions {
                ells,
                beta,
                fiedler_trials: trials,
                seed: input.generator.seed,
                tol,
                max_iters,
            };
            emit(analysis::identities_document(&graph, &opts)?, &output)
        }
    }
}

fn analyze(
    input: &InputArgs,
    measure: &MeasureArgs,
    output: &OutputArgs,
    build: fn(&ParsedGraph, &CentralityParams) -> Result<Outcome>,
) -> Result<()> {
    let params = measure_params(measure)?;
    let graph = load_input(input)?;
    let mut outcome = build(&graph, &params)?;
    if input.generator.model.is_some() {
        outcome.document.seed = Some(input.generator.seed);
    }
    emit(outcome, output)
}

fn emit(outcome: Outcome, output: &OutputArgs) -> Result<()> {
    for notice in &outcome.notices {
        eprintln!("{notice}");
    }
    let format = match output.format {
        OutputFormat::Json => ReportFormat::Json,
        OutputFormat::Csv => ReportFormat::Csv,
    };
    write_output(output, &emit_report(&outcome.document, format)?)
}

fn write_output(output: &OutputArgs, text: &str) -> Result<()> {
    match &output.output {
        Some(path) => fs::write(path, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|()| out.flush())
                .map_err(|e| Error::Input(format!("cannot write to standard output: {e}")))
        }
    }
}

fn load_input(input: &InputArgs) -> Result<ParsedGraph> {
    let spec = generator_spec(&input.generator)?;
    match (&input.input, spec) {
        (Some(_), Some(_)) => Err(Error::Usage("give either --input or --model, not both".into())),
        (None, None) => Err(Error::Usage(
            "an input graph is required: --input FILE or --model".into(),
        )),
        (None, Some(spec)) => {
            if input.directed {
                return Err(Error::Usage("--directed applies to file input only".into()));
            }
            let graph = generate_reporting(&spec)?;
            let node_ids = (0..graph.node_count() as u64).collect();
            Ok(ParsedGraph { graph, node_ids })
        }
        (Some(path), None) => {
            let text =
                fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
            let format = input.graph_format.unwrap_or_else(|| {
                if path.extension().is_some_and(|ext| ext.eq_ignore_ascii_case("mtx")) {
                    GraphFormat::MatrixMarket
                } else {
                    GraphFormat::EdgeList
                }
            });
            let parsed = match format {
                GraphFormat::EdgeList => parse_edge_list_as(&text, input.directed),
                GraphFormat::MatrixMarket => parse_matrix_market(&text),
            };
            parsed.map_err(|e| match e {
                Error::Parse { line, column, message } => {
                    Error::Input(format!("{}:{line}:{column}: {message}", path.display()))
                }
                other => other,
            })
        }
    }
}

/// Generate, noting on stderr how far an erased configuration fell short of its target degrees.
fn generate_reporting(spec: &RandomGraphSpec) -> Result<Graph> {
    let g = generate(spec)?;
    if let Model::Configuration { degree_sequence } = &spec.model {
        if g.node_count() == degree_sequence.len() {
            let shortfall = configuration_deviation(degree_sequence, &g);
            let nodes = shortfall.iter().filter(|&&s| s != 0).count();
            if nodes > 0 {
                let stubs: i64 = shortfall.iter().sum();
                eprintln!("note: erasing loops and multi-edges removed {stubs} stubs at {nodes} nodes");
            }
        } else {
            eprintln!(
                "note: kept the largest component ({} of {} nodes)",
                g.node_count(),
                degree_sequence.len()
            );
        }
    }
    Ok(g)
}

fn generator_spec(args: &GeneratorArgs) -> Result<Option<RandomGraphSpec>> {
    let Some(name) = args.model else {
        let stray = args.n.is_some()
            || args.p.is_some()
            || args.k.is_some()
            || args.degrees.is_some()
            || args.m_attach.is_some()
            || args.no_lcc;
        if stray {
            return Err(Error::Usage("generator flags need --model".into()));
        }
        return Ok(None);
    };
    let used = |flag: &str, present: bool, allowed: bool| {
        if present && !allowed {
            Err(Error::Usage(format!(
                "--{flag} does not apply to --model {}",
                model_label(name)
            )))
        } else {
            Ok(())
        }
    };
    used("p", args.p.is_some(), name == ModelName::ErdosRenyi)?;
    used("k", args.k.is_some(), name == ModelName::KRegular)?;
    used("degrees", args.degrees.is_some(), name == ModelName::Configuration)?;
    used(
        "m-attach",
        args.m_attach.is_some(),
        name == ModelName::PreferentialAttachment,
    )?;

    let required = |flag: &str, v: Option<usize>| {
        v.ok_or_else(|| Error::Usage(format!("--model {} needs --{flag}", model_label(name))))
    };
    // random models fall back to a desk-sized ensemble
    let random_n = args.n.unwrap_or(DEFAULT_RANDOM_N);
    let (model, n) = match name {
        ModelName::Path => (Model::Path, required("n", args.n)?),
        ModelName::Cycle => (Model::Cycle, required("n", args.n)?),
        ModelName::Star => (Model::Star, required("n", args.n)?),
        ModelName::Complete => (Model::Complete, required("n", args.n)?),
        ModelName::KRegular => (
            Model::KRegular {
                k: required("k", args.k)?,
            },
            random_n,
        ),
        ModelName::ErdosRenyi => (
            Model::ErdosRenyi {
                p: args.p.unwrap_or(DEFAULT_P),
            },
            random_n,
        ),
        ModelName::Configuration => {
            let degree_sequence = args
                .degrees
                .clone()
                .ok_or_else(|| Error::Usage("--model configuration needs --degrees".into()))?;
            let n = args.n.unwrap_or(degree_sequence.len());
            (Model::Configuration { degree_sequence }, n)
        }
        ModelName::PreferentialAttachment => (
            Model::PreferentialAttachment {
                m_attach: args.m_attach.unwrap_or(DEFAULT_M_ATTACH),
            },
            random_n,
        ),
    };
    let mut spec = RandomGraphSpec::new(model, n).with_seed(args.seed);
    if args.no_lcc {
        spec = spec.with_lcc(false);
    }
    Ok(Some(spec))
}

fn model_label(name: ModelName) -> String {
    use clap::ValueEnum;
    name.to_possible_value()
        .map_or_else(String::new, |v| v.get_name().to_string())
}

fn measure_params(args: &MeasureArgs) -> Result<CentralityParams> {
    let misplaced = |flag: &str, present: bool, owner: MeasureName| {
        if present && args.measure != owner {
            Err(Error::Usage(format!("--{flag} only applies to the matching --measure")))
        } else {
            Ok(())
        }
    };
    misplaced("ell", args.ell.is_some(), MeasureName::WalkCount)?;
    misplaced("alpha", args.alpha.is_some(), MeasureName::Katz)?;
    misplaced("beta", args.beta.is_some(), MeasureName::Pagerank)?;
    let measure = match args.measure {
        MeasureName::Degree => Measure::Degree,
        MeasureName::WalkCount => Measure::WalkCount {
            ell: args.ell.unwrap_or(DEFAULT_ELL),
        },
        MeasureName::Eigenvector => Measure::Eigenvector,
        MeasureName::Katz => Measure::Katz {
            alpha: args
                .alpha
                .map_or(KatzAlpha::SpectralFraction(DEFAULT_KATZ_FRACTION), KatzAlpha::Fixed),
        },
        MeasureName::Pagerank => Measure::PageRank {
            beta: args.beta.unwrap_or(DEFAULT_BETA),
        },
        MeasureName::Closeness => Measure::Closeness,
        MeasureName::Harmonic => Measure::Harmonic,
    };
    Ok(CentralityParams::new(measure)
        .with_tol(args.tol)
        .with_max_iters(args.max_iters))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("paradox-lab").chain(args.iter().copied())).unwrap()
    }

    fn analysis_args(cli: Cli) -> args::AnalysisArgs {
        match cli.command {
            Command::Paradox(a) => a,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn katz_defaults_to_spectral_fraction() {
        let a = analysis_args(parse(&["paradox", "--model", "path", "--n", "4", "--measure", "katz"]));
        let params = measure_params(&a.measure).unwrap();
        assert_eq!(
            params.measure,
            Measure::Katz {
                alpha: KatzAlpha::SpectralFraction(DEFAULT_KATZ_FRACTION)
            }
        );
        let a = analysis_args(parse(&["paradox", "--measure", "katz", "--alpha", "0.2"]));
        assert_eq!(
            measure_params(&a.measure).unwrap().measure,
            Measure::Katz {
                alpha: KatzAlpha::Fixed(0.2)
            }
        );
    }

    #[test]
    fn generator_flags_map_to_models() {
        let a = analysis_args(parse(&[
            "paradox",
            "--model",
            "configuration",
            "--degrees",
            "2,2,1,1",
            "--seed",
            "5",
        ]));
        let spec = generator_spec(&a.input.generator).unwrap().unwrap();
        assert_eq!(spec.n, 4);
        assert_eq!(spec.seed, 5);
        assert!(!spec.lcc_extract);

        let a = analysis_args(parse(&[
            "paradox",
            "--model",
            "erdos_renyi",
            "--n",
            "9",
            "--p",
            "0.5",
            "--no-lcc",
        ]));
        assert!(!generator_spec(&a.input.generator).unwrap().unwrap().lcc_extract);

        let a = analysis_args(parse(&["paradox", "--model", "cycle", "--n", "9", "--k", "2"]));
        assert!(matches!(generator_spec(&a.input.generator), Err(Error::Usage(_))));
        let a = analysis_args(parse(&["paradox", "--n", "9"]));
        assert!(matches!(generator_spec(&a.input.generator), Err(Error::Usage(_))));
    }

    #[test]
    fn measure_flag_consistency() {
        for args in [
            &["paradox", "--ell", "2"][..],
            &["paradox", "--measure", "katz", "--beta", "0.2"],
            &["paradox", "--measure", "pagerank", "--alpha", "0.2"],
        ] {
            let a = analysis_args(parse(args));
            assert!(matches!(measure_params(&a.measure), Err(Error::Usage(_))));
        }
    }
}
