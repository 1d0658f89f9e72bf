//! Runs a verification battery through the command-line front end and
//! reads the JSON document back.

use clap::Parser;
use lisbon::cli::{run, Cli};
use lisbon::ReportDocument;

fn main() -> lisbon::Result<()> {
    let cli = Cli::parse_from(["lisbon", "--json", "verify", "kernels", "--k", "3", "--max-w", "4"]);
    let outcome = run(&cli)?;
    let doc: ReportDocument = serde_json::from_str(&outcome.stdout).expect("valid document");
    println!("schema {} from version {}", doc.schema, doc.tool_version);
    for r in &doc.reports {
        println!(
            "{} {} {}",
            if r.pass { "PASS" } else { "FAIL" },
            r.check,
            serde_json::to_string(&r.params).unwrap()
        );
    }
    Ok(())
}
