//! `dqc1` — command-line front end for the one-clean-qubit toolkit.
//!
//! Each invocation runs one subcommand, writes a single JSON report to
//! standard output and human-readable diagnostics to standard error, and
//! exits 0 when the checked property holds, 1 when the verdict fails, and
//! 2 on usage, parse, or capacity errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use dqc1::{
    acceptance_probability, build_dw, build_dw_decomposed, dqc1_acceptance, dqc1m_distribution,
    dw_predicted_acceptance, random_htcnot_circuit, strongsim_constdepth_marginal_distribution,
    strongsim_iqp_distribution, Dqc1Spec, IqpSpec, OutcomeDistribution, DEFAULT_CONE_CAP,
    DEFAULT_ENSEMBLE_CAP,
};
use dqc1_cli::format::parse_circuit_file;
use dqc1_cli::report::{
    sha256_digest, to_json, verdict, CompareReport, DemoDwReport, DwTrial, SbGapCheck,
};
use dqc1_cli::DEMO_MAX_GATES;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

type RunResult = Result<bool, Box<dyn std::error::Error>>;

#[derive(Parser)]
#[command(name = "dqc1", version, about = "Exact one-clean-qubit simulation toolkit")]
struct Cli {
    /// Seed for the deterministic random-circuit generator.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest deviation the verdict tolerates.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tolerance: f64,
    /// Largest light cone the bounded-depth strong simulator may explore.
    #[arg(long, global = true, default_value_t = DEFAULT_CONE_CAP)]
    cone_cap: usize,
    /// Largest number of maximally mixed qubits to average exhaustively.
    #[arg(long, global = true, default_value_t = DEFAULT_ENSEMBLE_CAP)]
    ensemble_cap: usize,
    /// Lower relay control groups onto {H, X, CNOT, T, T†} when building
    /// gadgets.
    #[arg(long, global = true)]
    decompose_toffoli: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep seeded random {H, T, CNOT} sources through the acceptance-relay
    /// gadget and check the predicted gadget acceptance against exact
    /// ensemble simulation.
    DemoDw {
        /// Source-circuit width in qubits.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Number of random source circuits to sweep.
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Run a strong simulator against the exact ensemble oracle on a circuit
    /// file and report the pointwise deviation.
    Compare {
        /// Circuit file to load.
        file: PathBuf,
        /// Which strong simulator to exercise.
        #[arg(long, value_enum)]
        method: Method,
        /// Compare the joint distribution of these qubits only
        /// (comma-separated indices).
        #[arg(long, value_delimiter = ',')]
        marginal: Option<Vec<usize>>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Light-cone simulator for bounded-depth circuits.
    Constdepth,
    /// Closed-form simulator for hypergraph-shaped circuits.
    Iqp,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let command = std::env::args().collect::<Vec<_>>().join(" ");
    let outcome = match &cli.command {
        Command::DemoDw { n, trials } => cmd_demo_dw(&cli, command, *n, *trials, started),
        Command::Compare {
            file,
            method,
            marginal,
        } => cmd_compare(&cli, command, file, *method, marginal.clone(), started),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn cmd_demo_dw(cli: &Cli, command: String, n: usize, trials: usize, started: Instant) -> RunResult {
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let scale = 0.5f64.powi(n as i32);
    let mut trial_results = Vec::with_capacity(trials);
    let mut max_deviation = 0.0f64;
    let mut circuits_below_half = 0;
    let mut gap_holds = true;
    for _ in 0..trials {
        let source = random_htcnot_circuit(n, DEMO_MAX_GATES, &mut rng);
        // The exact value is a probability; long gate chains can drift a few
        // ulps past 1, which the prediction law would reject.
        let source_acceptance = acceptance_probability(&source)?.clamp(0.0, 1.0);
        let gadget = if cli.decompose_toffoli {
            build_dw_decomposed(&source, source.outputs[0])?
        } else {
            build_dw(&source, source.outputs[0])?
        };
        let spec = Dqc1Spec::from_circuit(gadget.circuit);
        let simulated = dqc1_acceptance(&spec, cli.ensemble_cap)?;
        let predicted = dw_predicted_acceptance(source_acceptance, n)?;
        let deviation = (simulated - predicted).abs();
        max_deviation = max_deviation.max(deviation);
        if source_acceptance <= 0.5 {
            circuits_below_half += 1;
            gap_holds &= simulated >= 2.0 * scale * source_acceptance - cli.tolerance
                && simulated <= 4.0 * scale * source_acceptance + cli.tolerance;
        }
        trial_results.push(DwTrial {
            source_acceptance,
            predicted,
            simulated,
            deviation,
        });
    }
    let pass = max_deviation <= cli.tolerance;
    let report = DemoDwReport {
        command,
        n,
        trials,
        seed: cli.seed,
        tolerance: cli.tolerance,
        ensemble_cap: cli.ensemble_cap,
        decompose_toffoli: cli.decompose_toffoli,
        trial_results,
        max_deviation,
        sb_gap: SbGapCheck {
            circuits_below_half,
            holds: gap_holds,
        },
        verdict: verdict(pass),
        elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
    };
    println!("{}", to_json(&report));
    eprintln!(
        "demo-dw: {trials} sources at n={n}, max deviation {max_deviation:e} \
         (tolerance {:e}): {}",
        cli.tolerance, report.verdict
    );
    Ok(pass)
}

fn cmd_compare(
    cli: &Cli,
    command: String,
    file: &Path,
    method: Method,
    marginal: Option<Vec<usize>>,
    started: Instant,
) -> RunResult {
    if let Some(qubits) = &marginal {
        let mut sorted = qubits.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != qubits.len() {
            return Err("--marginal qubits must be distinct".into());
        }
    }
    let bytes = std::fs::read(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let input_digest = sha256_digest(&bytes);
    let text =
        String::from_utf8(bytes).map_err(|_| format!("{}: not valid UTF-8", file.display()))?;
    let circuit = parse_circuit_file(&text)?;

    let (oracle, strongsim): (OutcomeDistribution, OutcomeDistribution) = match method {
        Method::Constdepth => {
            // The oracle spec measures every qubit, so any qubit subset can
            // be marginalized out of its joint distribution.
            let qubits = marginal
                .clone()
                .unwrap_or_else(|| circuit.outputs.clone());
            let clean = circuit.clean_qubit.unwrap_or(0);
            let all = (0..circuit.num_qubits).collect();
            let spec = Dqc1Spec::new(circuit, clean, all);
            let strong =
                strongsim_constdepth_marginal_distribution(&spec, &qubits, cli.cone_cap)?;
            let oracle = dqc1m_distribution(&spec, cli.ensemble_cap)?.marginal(&qubits);
            (oracle, strong)
        }
        Method::Iqp => {
            let iqp = IqpSpec::from_circuit(&circuit)?;
            let strong = strongsim_iqp_distribution(&iqp)?;
            let clean = circuit.clean_qubit.unwrap_or(0);
            let outputs = circuit.outputs.clone();
            let spec = Dqc1Spec::new(circuit, clean, outputs);
            let oracle = dqc1m_distribution(&spec, cli.ensemble_cap)?;
            match &marginal {
                Some(qubits) => {
                    let positions = qubits
                        .iter()
                        .map(|q| {
                            strong.output_qubits.iter().position(|o| o == q).ok_or_else(
                                || format!("marginal qubit {q} is not an output of the instance"),
                            )
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    (oracle.marginal(&positions), strong.marginal(&positions))
                }
                None => (oracle, strong),
            }
        }
    };

    let max_deviation = strongsim.max_abs_difference(&oracle)?;
    let pass = max_deviation <= cli.tolerance;
    let report = CompareReport {
        command,
        file: file.display().to_string(),
        input_digest,
        method: match method {
            Method::Constdepth => "constdepth",
            Method::Iqp => "iqp",
        }
        .to_string(),
        marginal,
        tolerance: cli.tolerance,
        cone_cap: cli.cone_cap,
        ensemble_cap: cli.ensemble_cap,
        output_qubits: strongsim.output_qubits.clone(),
        oracle: oracle.probs,
        strongsim: strongsim.probs,
        max_deviation,
        verdict: verdict(pass),
        elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
    };
    println!("{}", to_json(&report));
    eprintln!(
        "compare: {} outcomes over qubits {:?}, max deviation {max_deviation:e} \
         (tolerance {:e}): {}",
        report.oracle.len(),
        report.output_qubits,
        cli.tolerance,
        report.verdict
    );
    Ok(pass)
}
