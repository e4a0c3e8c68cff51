use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hvdc_cli::commands::{cartesian_factorizations, COMMANDS};
use hvdc_cli::workspace::{bundled, bundled_document, parse_document, BUNDLED};
use hvdc_cli::{run, CliError, Options, Report, Workspace};
use hvdc_core::monoidal::DEFAULT_ARITY;

#[derive(Parser)]
#[command(name = "hvdc", version, about = "Universal constructions on finite profunctors")]
struct Cli {
    #[command(subcommand)]
    action: Action,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Action {
    /// Run a check or construction and print a report.
    Run {
        command: String,
        args: Vec<String>,
        /// A bundled workspace name or a document path.
        #[arg(long)]
        workspace: Option<String>,
        /// `default`, `empty` or a context of the workspace.
        #[arg(long)]
        ctx: Option<String>,
        #[arg(long)]
        path_len: Option<usize>,
        /// Arity bound of monoidal structures.
        #[arg(long, default_value_t = DEFAULT_ARITY)]
        arity: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// A witness document from an earlier report, to be reproduced.
        #[arg(long)]
        verify_witness: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Load and validate a document, optionally writing its canonical form.
    Load {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ARITY)]
        arity: usize,
    },
    /// Print or write a bundled workspace document.
    Export {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ARITY)]
        arity: usize,
    },
    /// List the commands accepted by `run`.
    Commands,
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(CliError::EXIT_CODE as u8)
        }
    }
}

fn write_out(path: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// `--workspace` if given; otherwise a bundled workspace named by, or
/// containing an entry named by, the first argument; otherwise the corpus.
fn resolve_workspace(explicit: Option<&str>, first: Option<&str>, arity: usize) -> Result<Workspace, CliError> {
    if let Some(w) = explicit {
        return match bundled(w, arity) {
            Some(ws) => ws,
            None => Workspace::load(std::path::Path::new(w), arity),
        };
    }
    if let Some(a) = first {
        if let Some(ws) = bundled(a, arity) {
            return ws;
        }
        for name in BUNDLED {
            let ws = bundled(name, arity).expect("bundled")?;
            if ws.has_entry(a) {
                return Ok(ws);
            }
        }
    }
    bundled("corpus", arity).expect("bundled")
}

fn dispatch(cli: Cli) -> Result<u8, CliError> {
    match cli.action {
        Action::Commands => {
            for c in COMMANDS {
                println!("{c}");
            }
            Ok(0)
        }
        Action::Export { name, out, arity } => {
            let doc = bundled_document(&name, arity).ok_or_else(|| CliError::Usage(format!("unknown bundled workspace `{name}`")))?;
            write_out(&out, &doc.to_json())?;
            Ok(0)
        }
        Action::Load { file, out, arity } => {
            let ws = Workspace::load(&file, arity)?;
            match out {
                Some(_) => write_out(&out, &ws.save())?,
                None => {
                    for ((kind, name), source) in &ws.provenance {
                        println!("{kind} {name} ({source})");
                    }
                    println!("{} entries loaded", ws.len());
                }
            }
            Ok(0)
        }
        Action::Run {
            command,
            args,
            workspace,
            ctx,
            path_len,
            arity,
            format,
            verify_witness,
            seed,
        } => {
            if !COMMANDS.contains(&command.as_str()) {
                return Err(CliError::UnknownCommand(command));
            }
            let ws = resolve_workspace(workspace.as_deref(), args.first().map(String::as_str), arity)?;
            let opts = Options { ctx, path_len, seed };
            let mut report = run(&ws, &command, &args, &opts)?;
            let code = match verify_witness {
                None => u8::from(!report.all_hold()),
                Some(path) => u8::from(!verify(&ws, &command, &args, &path, &mut report, arity)?),
            };
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => print!("{}", report.to_json()),
            }
            Ok(code)
        }
    }
}

/// Whether the re-run reproduced the witness stored at `path`. For cartesian
/// checks the factorizations of the stored cell are also recounted.
fn verify(ws: &Workspace, command: &str, args: &[String], path: &PathBuf, report: &mut Report, arity: usize) -> Result<bool, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let stored = parse_document(&text, &path.display().to_string())?;
    let reproduced = report.checks.iter().any(|c| !c.holds() && c.witness.as_ref() == Some(&stored));
    let mut detail = if reproduced {
        "the re-run fails with the same witness".to_string()
    } else {
        "the re-run does not produce this witness".to_string()
    };
    let mut ok = reproduced;
    if command == "check-cartesian" {
        let wws = Workspace::from_document(&stored, &path.display().to_string(), arity)?;
        let chi = wws.cell("witness")?;
        let vs = &wws
            .contexts
            .get("witness")
            .ok_or_else(|| CliError::Usage("witness document has no verticals".into()))?
            .functors;
        let (h, k) = match vs.as_slice() {
            [h, k] => (h.clone(), k.clone()),
            [] => return Err(CliError::Usage("witness document has no verticals".into())),
            // identities are implicit in contexts
            [f] => (f.clone(), f.clone()),
            _ => return Err(CliError::Usage("witness context must list two verticals".into())),
        };
        let psi = ws.cell(&args[0])?;
        let n = cartesian_factorizations(psi, chi, &h, &k)?;
        ok &= n != 1;
        detail.push_str(&format!("; the stored cell has {n} factorizations"));
    }
    report.check_bool("witness re-fails", ok, detail);
    Ok(ok)
}
