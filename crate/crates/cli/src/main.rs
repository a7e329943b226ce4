use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use edgeideal::harness::{self, CampaignOptions, VerificationReport};
use edgeideal::{io, Family, FieldSpec};

/// Edge ideal invariants and verification campaigns.
///
/// Exit status: 0 when every check passed, 1 when a check failed, 2 on
/// usage or input errors.
#[derive(Parser, Debug)]
#[command(name = "edgeideal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute every invariant of one graph given as an edge list.
    Analyze {
        file: PathBuf,
        /// `q` or `p:<prime>`
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        /// Replay the emitted certificates through the independent checker.
        #[arg(long)]
        recheck: bool,
    },
    /// Run a verification campaign.
    Verify {
        #[command(subcommand)]
        campaign: Campaign,
    },
    /// Print edge lists for a graph family, e.g. `gen cycle 8` or
    /// `gen random_graph 7 0.5 42 --count 3`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        /// Number of graphs to emit; random families default to 1, finite
        /// families to all of them.
        #[arg(long)]
        count: Option<usize>,
        /// Write one file per graph into this directory instead of stdout.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, default_value = "q")]
    field: FieldSpec,
    #[arg(long)]
    recheck: bool,
    /// Write the machine-readable report to this path.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Campaign {
    /// SCM, shellable and VD agree on bipartite graphs.
    Thm1 {
        #[arg(long)]
        max_part: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Regularity equals a(G) on SCM bipartite graphs.
    Thm2 {
        #[arg(long)]
        max_part: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Structural checks on small and seeded random graphs.
    Structure {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        sample: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Every tree is SCM with regularity a(G).
    Trees {
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Cover-ideal splitting at degree-one vertices, exhaustively.
    Splitting {
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        common: Common,
    },
}

enum Outcome {
    Passed,
    Violation,
}

fn run_campaign(campaign: Campaign) -> anyhow::Result<Outcome> {
    let options = |c: &Common| CampaignOptions { field: c.field, recheck: c.recheck };
    let (report, path): (VerificationReport, Option<PathBuf>) = match campaign {
        Campaign::Thm1 { max_part, common } => (harness::verify_thm1(max_part, &options(&common))?, common.report),
        Campaign::Thm2 { max_part, common } => (harness::verify_thm2(max_part, &options(&common))?, common.report),
        Campaign::Structure { max_n, sample, seed, common } => (
            harness::verify_structure(max_n, sample, seed, &options(&common))?,
            common.report,
        ),
        Campaign::Trees { max_n, common } => (harness::verify_trees(max_n, &options(&common))?, common.report),
        Campaign::Splitting { max_n, common } => {
            (harness::verify_splitting(max_n, &options(&common))?, common.report)
        }
    };
    print!("{}", report.summary());
    for (id, check) in &report.divergences {
        println!("divergence {id} {check}");
    }
    if let Some(path) = path {
        fs::write(&path, report.to_text()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if report.all_agree() { Outcome::Passed } else { Outcome::Violation })
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Analyze { file, field, recheck } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let g = io::parse_edge_list(&text).with_context(|| format!("{}", file.display()))?;
            let analysis = harness::analyze(&g, field, recheck);
            print!("{analysis}");
            Ok(match analysis.recheck {
                Some(false) => Outcome::Violation,
                _ => Outcome::Passed,
            })
        }
        Command::Verify { campaign } => run_campaign(campaign),
        Command::Gen { family, count, out_dir } => {
            let family: Family = family.join(" ").parse()?;
            let take = count.unwrap_or(if family.size().is_some() { usize::MAX } else { 1 });
            let several = take > 1 && family.size() != Some(1);
            if let Some(dir) = &out_dir {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            for (i, g) in family.graphs()?.take(take).enumerate() {
                let text = io::write_edge_list(&g);
                match &out_dir {
                    Some(dir) => {
                        let path = dir.join(format!("graph_{i:06}.txt"));
                        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
                    }
                    None => {
                        if several {
                            println!("# graph {i}");
                        }
                        print!("{text}");
                    }
                }
            }
            Ok(Outcome::Passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Passed) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
