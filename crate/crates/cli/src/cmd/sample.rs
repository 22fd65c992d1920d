//! `sample`: discretize a profile onto the midpoint grid and export the
//! samples as `t,q_re,q_im` rows — the same layout the library's importer
//! reads back.

use std::path::PathBuf;

use clap::Args;

use zsnft::SampledPotential;

use super::{check_n, ProfileArgs};
use crate::output::emit;

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,

    /// Sample count
    #[arg(long, default_value_t = 1024)]
    pub n: usize,

    /// Output file; stdout when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &SampleArgs) -> Result<bool, String> {
    let spec = args.profile.build()?;
    check_n(args.n)?;
    let pot =
        SampledPotential::sample(&spec, spec.half_width, args.n).map_err(|e| e.to_string())?;
    let mut buf = Vec::new();
    pot.write_csv(&mut buf).map_err(|e| e.to_string())?;
    let content = String::from_utf8(buf).expect("csv output is ascii");
    emit(args.out.as_deref(), &content).map_err(|e| format!("writing output: {e}"))?;
    Ok(false)
}
