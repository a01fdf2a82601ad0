//! Verify one identity and print the JSON report.
//!
//! `cargo run --example verify_identity -- GR-4.325.8 mu=3+2i`

use loglog_lab::identities::{parse_binding, IdentityId, Params};
use loglog_lab::report::Report;
use loglog_lab::verifier::{verify_with, RunConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let id: IdentityId = args.next().as_deref().unwrap_or("GR-4.325.11").parse()?;
    let mut params = Params::new();
    for binding in args {
        let (name, value) = parse_binding(&binding)?;
        params.insert(&name, value);
    }
    if params.is_empty() && !id.spec().param_schema.is_empty() {
        params = loglog_lab::identities::default_grid(id).remove(0);
    }
    let run = RunConfig::default();
    let result = verify_with(id, &params, &run)?;
    println!("{}", Report::new(run, vec![result]).to_json());
    Ok(())
}
