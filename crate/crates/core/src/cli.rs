//! Command line front end. Every verb reads table files, calls one library
//! operation and prints its result deterministically.

use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::census::{classify, proper_d_census, survey, Classification};
use crate::constructions::{d_from_ip, exchange_tracks, parastrophe, principal_isotope, Parastrophe, TrackSplit};
use crate::error::{Error, Result};
use crate::isotopy::{find_isomorphism, find_isotopy};
use crate::table::{Loop, Table};
use crate::tracks::{d_isotopy_witness, spin_basis, track_set};
use crate::Label;

#[derive(Parser, Debug)]
#[command(name = "dloop", version, about = "Finite loops, tracks and D-loop checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a table: loop, group, IP-loop, D-loop, proper D-loop
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the right tracks, one per line as "a: <cycles>"
    Tracks { file: PathBuf },
    /// Print the spin-basis at a base element and whether it is a group
    Spins {
        file: PathBuf,
        #[arg(long)]
        base: Option<Label>,
    },
    /// Build a new table from an existing one
    #[command(subcommand)]
    Construct(Construct),
    /// Print one of the five parastrophes
    Parastrophe {
        file: PathBuf,
        #[arg(long)]
        kind: Parastrophe,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Find an isomorphism between two tables
    Isomorphic { file1: PathBuf, file2: PathBuf },
    /// Find an isotopy between two tables
    Isotopy { file1: PathBuf, file2: PathBuf },
    /// Search for p and sigma with φ_p φ_i⁻¹ φ_p = φ_σ(i)
    Witness { file: PathBuf },
    /// Enumerate every normalized loop of a small order
    Census {
        #[arg(long)]
        order: usize,
        /// Also split the proper D-loops into isotopy classes
        #[arg(long)]
        proper_d: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// D-loop x∘y = (x·a')·(a·y) from an IP-loop
    IpToD {
        file: PathBuf,
        #[arg(long)]
        a: Label,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exchange the tracks of a decomposable pair
    Exchange {
        file: PathBuf,
        #[arg(long, value_name = "I,J", value_parser = parse_pair)]
        pair: (Label, Label),
        /// The block X containing the identity, when the pair has several splits
        #[arg(long, value_delimiter = ',')]
        x: Option<Vec<Label>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Principal isotope x∘y = R_b⁻¹(x)·L_a⁻¹(y)
    Principal {
        file: PathBuf,
        #[arg(long)]
        a: Label,
        #[arg(long)]
        b: Label,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl clap::ValueEnum for Parastrophe {
    fn value_variants<'a>() -> &'a [Self] {
        &Parastrophe::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.name()))
    }
}

/// Fixed-order rendering of a classification.
pub fn render_classification(c: &Classification, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(c).expect("plain struct serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let identity = c.identity.map_or_else(|| "none".to_string(), |e| e.to_string());
            format!(
                "order: {}\nis_quasigroup: {}\nidentity: {}\nis_loop: {}\nis_group: {}\nis_ip: {}\nis_d: {}\nis_proper_d: {}\n",
                c.order, c.is_quasigroup, identity, c.is_loop, c.is_group, c.is_ip, c.is_d, c.is_proper_d
            )
        }
    }
}

fn read_table(path: &Path) -> Result<Table> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Table::parse(&text)
}

fn read_loop(path: &Path) -> Result<Loop> {
    Loop::new(read_table(path)?)
}

/// Writes the table to `out` if given, otherwise returns it as output.
fn emit_table(t: &Table, out: Option<&Path>) -> Result<String> {
    match out {
        Some(path) => {
            fs::write(path, t.to_text()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(t.to_text()),
    }
}

fn execute(cmd: Command) -> Result<String> {
    match cmd {
        Command::Check { file, format } => Ok(render_classification(&classify(&read_table(&file)?), format)),
        Command::Tracks { file } => {
            let ts = track_set(&read_table(&file)?);
            Ok(ts.iter().map(|(a, p)| format!("{a}: {p}\n")).collect())
        }
        Command::Spins { file, base } => {
            let t = read_table(&file)?;
            let base = base.unwrap_or_else(|| t.find_identity().unwrap_or(1));
            if base == 0 || base > t.order() {
                return Err(Error::LabelOutOfRange { label: base, n: t.order() });
            }
            let basis = spin_basis(&t, base);
            let mut s: String =
                basis.spins().iter().enumerate().map(|(j, p)| format!("{base},{}: {p}\n", j + 1)).collect();
            s.push_str(if basis.is_closed() { "group: yes\n" } else { "group: no\n" });
            Ok(s)
        }
        Command::Construct(Construct::IpToD { file, a, out }) => {
            emit_table(d_from_ip(&read_loop(&file)?, a)?.table(), out.as_deref())
        }
        Command::Construct(Construct::Exchange { file, pair, x, out }) => {
            let l = read_loop(&file)?;
            let (i, j) = pair;
            let split = x.map(|x| TrackSplit::from_x(&l, i, j, &x)).transpose()?;
            emit_table(exchange_tracks(&l, i, j, split.as_ref())?.table(), out.as_deref())
        }
        Command::Construct(Construct::Principal { file, a, b, out }) => {
            let t = read_table(&file)?;
            for v in [a, b] {
                if v == 0 || v > t.order() {
                    return Err(Error::LabelOutOfRange { label: v, n: t.order() });
                }
            }
            emit_table(principal_isotope(&t, a, b).table(), out.as_deref())
        }
        Command::Parastrophe { file, kind, out } => emit_table(&parastrophe(&read_table(&file)?, kind), out.as_deref()),
        Command::Isomorphic { file1, file2 } => {
            Ok(match find_isomorphism(&read_table(&file1)?, &read_table(&file2)?)? {
                Some(h) => format!("{h}\n"),
                None => "none\n".into(),
            })
        }
        Command::Isotopy { file1, file2 } => Ok(match find_isotopy(&read_table(&file1)?, &read_table(&file2)?)? {
            Some(iso) => format!("alpha={} beta={} gamma={}\n", iso.alpha, iso.beta, iso.gamma),
            None => "none\n".into(),
        }),
        Command::Witness { file } => Ok(match d_isotopy_witness(&read_table(&file)?) {
            Some(w) => format!("p={} sigma={}\n", w.p, w.sigma),
            None => "none\n".into(),
        }),
        Command::Census { order, proper_d, out } => {
            if proper_d {
                let report = proper_d_census(order)?;
                if let Some(dir) = &out {
                    report.write_to(dir)?;
                }
                Ok(report.to_text())
            } else {
                let counts = survey(order, |_| {})?;
                if let Some(dir) = &out {
                    fs::create_dir_all(dir)?;
                    fs::write(dir.join("report.txt"), counts.to_text())?;
                }
                Ok(counts.to_text())
            }
        }
    }
}

fn parse_pair(s: &str) -> std::result::Result<(Label, Label), String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [i, j] = parts[..] else {
        return Err(format!("expected I,J, got {s:?}"));
    };
    let label = |v: &str| v.trim().parse::<Label>().map_err(|e| format!("{v:?}: {e}"));
    Ok((label(i)?, label(j)?))
}

/// Runs one invocation. `argv[0]` is the program name, as in
/// `std::env::args`. Returns the exit code and the text for standard output
/// (code 0) or standard error (otherwise).
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return (code, e.render().to_string());
        }
    };
    match execute(cli.command) {
        Ok(out) => (0, out),
        Err(e) => (1, format!("{}: {e}\n", e.name())),
    }
}
