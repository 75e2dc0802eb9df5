//! Command-line front end. `run` parses arguments and returns the output
//! document, so everything except process exit lives here.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::chain::{adjacent, maximal_chain_through};
use crate::complex::{build_apartment, link, project_window, ApartmentSpec};
use crate::error::Error;
use crate::export;
use crate::lattice::{ray_limit, Config, LatticeClass};
use crate::parse::{parse_gammas, parse_lattice, parse_ray_base, parse_weyl};
use crate::spherical::Residue;
use crate::weyl::{act, weyl_order};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Svg,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "ltb", about = "Apartments of affine buildings over local fields of dimension at most two")]
pub struct Cli {
    /// Group rank.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u8).range(2..=3))]
    pub m: u8,
    /// Field dimension; 0 selects the residue field.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=2))]
    pub dim: u8,
    /// Window radius.
    #[arg(long = "N", global = true, default_value_t = 2)]
    pub n: i64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Residue field size.
    #[arg(long, global = true, default_value_t = 2)]
    pub q: u64,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The apartment window for --m, --dim, --N.
    Apartment,
    /// Vertex type, stratum and preferred chain type of a class.
    Classify { lattice: String },
    /// The canonical maximal chain through a class.
    Chain { lattice: String },
    /// Whether two vertex classes span an edge.
    Adjacent { a: String, b: String },
    /// Applies a Weyl word to a class.
    Act { word: String, lattice: String },
    /// Link of an inner vertex in the --N window.
    Link { lattice: String },
    /// Projection of a class, or of the whole dim-2 window.
    Project { lattice: Option<String> },
    /// Limit of the ray `base + t·direction`.
    Limit { base: String, direction: String },
    /// Image of a dim-1 class under the compactification.
    Compactify { lattice: String },
    /// The spherical building over F_q for --m.
    Residue,
    /// Order of a Weyl word.
    WeylOrder { word: String },
}

fn unsupported_format(cmd: &str, f: Format) -> String {
    format!("{cmd} does not support --format {f:?}").to_lowercase()
}

/// The lattice argument, read with --dim when that is 1 or 2 and the text
/// does not settle it.
fn lattice_arg(text: &str, cli: &Cli) -> Result<LatticeClass, Error> {
    parse_lattice(text, None).or_else(|e| match cli.dim {
        1 | 2 => parse_lattice(text, Some(cli.dim)).map_err(|_| e),
        _ => Err(e),
    })
}

fn config(cli: &Cli) -> Result<Config, Error> {
    let c = Config::new(cli.m as usize, cli.dim);
    c.check_supported()?;
    Ok(c)
}

fn class_line(l: &LatticeClass) -> Result<String, Error> {
    let sig = l.vertex_type()?;
    let stratum = sig.stratum.ok_or_else(|| Error::NotVertex(l.to_string()))?;
    let chain = maximal_chain_through(l)?.0;
    Ok(format!(
        "type={} stratum={} chain={}",
        sig.code,
        stratum.name(l.config().dim),
        chain.tag()
    ))
}

fn dispatch(cli: &Cli) -> Result<String, String> {
    let e = |err: Error| err.to_string();
    let f = cli.format;
    let single = |text: String| -> Result<String, String> {
        match f {
            Format::Text => Ok(text + "\n"),
            Format::Json => Ok(format!("{}\n", serde_json::to_string(&text).expect("string"))),
            _ => Err(unsupported_format("this command", f)),
        }
    };
    match &cli.command {
        Command::Apartment => {
            let w = build_apartment(ApartmentSpec::new(config(cli).map_err(e)?, cli.n)).map_err(e)?;
            match f {
                Format::Json => export::window_json(&w).map_err(e),
                Format::Dot => Ok(export::window_dot(&w)),
                Format::Svg => export::window_svg(&w).map_err(e),
                Format::Text => Ok(export::window_text(&w)),
            }
        }
        Command::Classify { lattice } => {
            let l = lattice_arg(lattice, cli).map_err(e)?;
            single(class_line(&l).map_err(e)?)
        }
        Command::Chain { lattice } => {
            let l = lattice_arg(lattice, cli).map_err(e)?;
            let (t, seg) = maximal_chain_through(&l).map_err(e)?;
            single(format!("{} {}", t.tag(), seg))
        }
        Command::Adjacent { a, b } => {
            let a = lattice_arg(a, cli).map_err(e)?;
            let b = lattice_arg(b, cli).map_err(e)?;
            single(adjacent(&a, &b).map_err(e)?.to_string())
        }
        Command::Act { word, lattice } => {
            let l = lattice_arg(lattice, cli).map_err(e)?;
            let w = parse_weyl(word, l.config()).map_err(e)?;
            single(act(&w, &l).map_err(e)?.to_string())
        }
        Command::Link { lattice } => {
            let l = lattice_arg(lattice, cli).map_err(e)?;
            let w = build_apartment(ApartmentSpec::new(l.config(), cli.n)).map_err(e)?;
            let v = w.vertex_id(&l).ok_or_else(|| format!("{l} is not a vertex of the N={} window", cli.n))?;
            let lk = link(&w, v).map_err(e)?;
            match f {
                Format::Json => Ok(export::plain_window_json(&lk)),
                Format::Dot => Ok(export::window_dot(&lk)),
                Format::Svg => Err(unsupported_format("link", f)),
                Format::Text => Ok(export::window_text(&lk)),
            }
        }
        Command::Project { lattice: Some(text) } => {
            let l = lattice_arg(text, cli).map_err(e)?;
            single(l.project_pi().map_err(e)?.to_string())
        }
        Command::Project { lattice: None } => {
            let c = Config::new(cli.m as usize, 2);
            let w = build_apartment(ApartmentSpec::new(c, cli.n)).map_err(e)?;
            let p = project_window(&w).map_err(e)?;
            match f {
                Format::Json => Ok(export::projection_json(&w, &p)),
                Format::Dot => Ok(export::window_dot(&p.image)),
                Format::Svg => export::window_svg(&p.image).map_err(e),
                Format::Text => Ok(export::projection_text(&w, &p)),
            }
        }
        Command::Limit { base, direction } => {
            let dim = if cli.dim == 2 || direction.contains('(') || base.contains('(') { 2 } else { 1 };
            let base = parse_ray_base(base, dim).map_err(e)?;
            let d = parse_gammas(direction, dim).map_err(e)?;
            let c = Config::new(base.len(), dim);
            single(ray_limit(&base, &d, c).map_err(e)?.to_string())
        }
        Command::Compactify { lattice } => {
            let l = lattice_arg(lattice, cli).map_err(e)?;
            let c = l.compactify().map_err(e)?;
            single(match c.family_index {
                Some(i) => format!("{} family={i}", c.class),
                None => c.class.to_string(),
            })
        }
        Command::Residue => {
            let r = Residue::new(cli.m as usize, cli.q).map_err(e)?;
            match f {
                Format::Json => Ok(export::residue_json(&r)),
                Format::Dot => Ok(export::residue_dot(&r)),
                Format::Svg => Err(unsupported_format("residue", f)),
                Format::Text => Ok(export::residue_text(&r)),
            }
        }
        Command::WeylOrder { word } => {
            let w = parse_weyl(word, config(cli).map_err(e)?).map_err(e)?;
            single(weyl_order(&w).to_string())
        }
    }
}

/// Runs one command line (program name first). With `--out` the document
/// is written to the file and the returned string is empty.
pub fn run<I, T>(args: I) -> Result<String, String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) if err.kind() == clap::error::ErrorKind::DisplayHelp => return Ok(err.render().to_string()),
        Err(err) => return Err(err.render().to_string()),
    };
    let doc = dispatch(&cli)?;
    match &cli.out {
        Some(path) => {
            std::fs::write(path, doc).map_err(|err| format!("{}: {err}", path.display()))?;
            Ok(String::new())
        }
        None => Ok(doc),
    }
}
