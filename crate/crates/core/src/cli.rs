//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::error::{Error, Result};
use crate::h1::{action_matrix, apply_action, delta_of_section, H1Class};
use crate::lattice::build_lattice;
use crate::mapping_class::PhiMap;
use crate::mod2::Mod2Vector;
use crate::mw::{h1_mod2_class, mw_act_h1_mod2, realizable_mod2};
use crate::report::{render, Format, Report};
use crate::tables::{tables, TableSelector};
use crate::tritangent::{enumerate_tritangents, three_j_group};
use crate::types::{SexticType, SurfaceTopology};
use crate::verify::{verify_report, Context, Fault};

#[derive(Debug, Parser)]
#[command(name = "dp1", version, about = "Real lines on degree-1 del Pezzo and rational elliptic surfaces")]
pub struct Cli {
    /// json, csv or md
    #[arg(long, global = true, default_value = "md")]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Corrupt the input data (verification testing only)
    #[arg(long, global = true, hide = true)]
    pub fault: Option<Fault>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute a table: tritangents, lattices, mw, line-classes or all
    Tables { which: TableSelector },
    /// List the positive tritangents of a sextic type such as `4|0` or `|||`
    Classify { sextic: SexticType },
    /// Run every acceptance check
    Verify,
    /// Act by a Mordell-Weil vector on a homology class
    Act {
        /// Surface such as `K#2T2` or `K+K`
        surface: SurfaceTopology,
        /// Lattice coordinates, comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        v: Vec<i64>,
        /// Class coordinates, comma separated; defaults to the base line
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        class: Option<Vec<i64>>,
        /// Use the mod-2 action on (mu, v, nu)
        #[arg(long)]
        mod2: bool,
    },
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn list(v: &[i64]) -> String {
    format!("{v:?}")
}

pub fn cmd_classify(sextic: SexticType, seed: u64) -> Report {
    let lattice = build_lattice(sextic);
    let mut r = Report::new(
        format!("Positive tritangents of <{sextic}> in basis {}", crate::tritangent::basis_names(&lattice).join(",")),
        &["root", "S_in", "S_tan", "type", "code"],
        seed,
    );
    for t in enumerate_tritangents(sextic) {
        let code = match (&t.code, sextic) {
            (Some(c), _) => c.to_string(),
            (None, SexticType::ThreeJ) => three_j_group(&t.root).map(|g| g.to_string()).unwrap_or_default(),
            (None, _) => "J".to_string(),
        };
        r.push(vec![json!(list(&t.root)), json!(t.s_in), json!(t.s_tan), json!(t.ttype.to_string()), json!(code)]);
    }
    r
}

pub fn cmd_act(surface: SurfaceTopology, v: &[i64], class: Option<&[i64]>, mod2: bool, seed: u64) -> Result<Report> {
    let phi = PhiMap::new(surface);
    let g = phi.apply(v)?;
    let mut r = Report::new(format!("Action of {} on {surface}", list(v)), &["item", "value"], seed);
    r.push(vec![json!("phi(v)"), json!(g.to_string())]);
    if mod2 {
        let lattice = &phi.lattice;
        let c = class.map(<[i64]>::to_vec).unwrap_or_else(|| {
            let mut c = vec![0; lattice.rank + 2];
            c[lattice.rank + 1] = 1;
            c
        });
        if c.len() != lattice.rank + 2 {
            return Err(Error::Dimension { expected: lattice.rank + 2, got: c.len() });
        }
        let bits: Vec<u8> = c[1..=lattice.rank].iter().map(|x| x.rem_euclid(2) as u8).collect();
        let x = h1_mod2_class(lattice, c[0].rem_euclid(2) as u8, Mod2Vector::from_slice(&bits), c[lattice.rank + 1].rem_euclid(2) as u8);
        let y = mw_act_h1_mod2(lattice, v, x)?;
        r.push(vec![json!("class"), json!(x.to_string())]);
        r.push(vec![json!("image"), json!(y.to_string())]);
        if y.nu == 1 {
            r.push(vec![json!("realizable"), json!(realizable_mod2(lattice, y)?)]);
        }
        return Ok(r);
    }
    let d = delta_of_section(&g)?;
    let m = action_matrix(&d)?;
    let x = match class {
        Some(c) => H1Class::from_coords(c)?,
        None => H1Class::base_line(d.handles()),
    };
    let y = apply_action(&m, &x)?;
    r.push(vec![json!("matrix"), json!(m.iter().map(|row| list(row)).collect::<Vec<_>>().join(" "))]);
    r.push(vec![json!("class"), json!(x.to_string())]);
    r.push(vec![json!("image"), json!(y.to_string())]);
    Ok(r)
}

/// Executes a parsed command; returns the rendered output and exit code.
pub fn execute(cli: &Cli) -> Result<(String, i32)> {
    let (reports, code) = match &cli.command {
        Command::Tables { which } => (tables(*which, cli.seed), EXIT_OK),
        Command::Classify { sextic } => (vec![cmd_classify(*sextic, cli.seed)], EXIT_OK),
        Command::Verify => {
            let (r, ok) = verify_report(&Context::new(cli.seed, cli.fault));
            (vec![r], if ok { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Act { surface, v, class, mod2 } => {
            (vec![cmd_act(*surface, v, class.as_deref(), *mod2, cli.seed)?], EXIT_OK)
        }
    };
    Ok((render(&reports, cli.format), code))
}

/// Entry point used by the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let (text, code) = match execute(&cli) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    match written {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
        _ => {}
    }
    code
}
