use std::path::Path;

use gradia_core::lattice::load_lattice;
use gradia_core::syntax::{load_pts, parse_program, ParseOptions};
use gradia_core::{Context, Grade, Lattice, PtsSignature, Term};

use crate::commands::Output;
use crate::{Opts, System};

pub fn system_of(path: &Path, opts: &Opts) -> Result<System, Output> {
    if let Some(s) = opts.system {
        return Ok(s);
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("sdc") => Ok(System::Sdc),
        Some("seal") => Ok(System::Seal),
        Some("ddc") => Ok(System::Ddc),
        _ => Err(Output::usage(&format!("{}: cannot tell the calculus from the extension; pass --system", path.display()))),
    }
}

pub fn lattice(opts: &Opts, system: System) -> Result<Lattice, Output> {
    let spec = match &opts.lattice {
        Some(s) => s.as_str(),
        None if system == System::Ddc => "li",
        None => "lmh",
    };
    match spec {
        "two-point" => Ok(Lattice::two_point()),
        "li" => Ok(Lattice::irrelevance()),
        "lmh" => Ok(Lattice::low_medium_high()),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| Output::fail(4, format!("{path}: {e}")))?;
            load_lattice(&text).map_err(|e| Output::fail(4, format!("{path}: {e}")))
        }
    }
}

pub fn pts(opts: &Opts) -> Result<PtsSignature, Output> {
    match opts.pts.as_deref() {
        None | Some("coc") => Ok(PtsSignature::coc()),
        Some("type-in-type") => Ok(PtsSignature::type_in_type()),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Output::fail(4, format!("{path}: {e}")))?;
            load_pts(&text).map_err(|e| Output::fail(4, format!("{path}: {e}")))
        }
    }
}

pub fn level(opts: &Opts, lat: &Lattice) -> Result<Grade, Output> {
    match &opts.level {
        None => Ok(lat.bot()),
        Some(name) => lat.grade(name).ok_or_else(|| Output::fail(4, format!("level `{name}` is not in the lattice"))),
    }
}

pub fn parse_options(system: System, pts: &PtsSignature) -> ParseOptions {
    match system {
        System::Sdc | System::Seal => ParseOptions::sdc(),
        System::Ddc => ParseOptions::ddc().with_sorts(pts.sort_names()),
    }
}

pub fn program(path: &Path, lat: &Lattice, opts: &ParseOptions) -> Result<(Context, Term), Output> {
    let src = std::fs::read_to_string(path).map_err(|e| Output::fail(2, format!("{}: {e}", path.display())))?;
    parse_program(&src, lat, opts).map_err(|e| Output::fail(2, format!("{}:{e}", path.display())))
}

/// Everything a single-file command needs.
pub struct Setup {
    pub system: System,
    pub lat: Lattice,
    pub pts: PtsSignature,
    pub level: Grade,
    pub ctx: Context,
    pub term: Term,
}

pub fn setup(path: &Path, opts: &Opts) -> Result<Setup, Output> {
    let system = system_of(path, opts)?;
    let lat = lattice(opts, system)?;
    let pts = pts(opts)?;
    let level = level(opts, &lat)?;
    let (ctx, term) = program(path, &lat, &parse_options(system, &pts))?;
    Ok(Setup { system, lat, pts, level, ctx, term })
}
