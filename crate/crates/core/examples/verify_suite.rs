//! Runs a shipped suite of exact checks and prints a report.
//!
//! cargo run --release --example verify_suite -- [suite-name] [json|csv|text]

use group_spectra::census::{emit_report, read_suite, run_suite, shipped_suite_dir, ReportFormat, SuiteConfig};
use group_spectra::Result;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "desk".into());
    let format: ReportFormat = args.next().as_deref().unwrap_or("text").parse()?;
    let suite = read_suite(&shipped_suite_dir().join(format!("{name}.suite")))?;
    let config = SuiteConfig { parallel: true, ..SuiteConfig::default() };
    let results = run_suite(&suite, &config)?;
    emit_report(&results, format, std::io::stdout().lock())?;
    if results.iter().any(|r| r.failed()) {
        std::process::exit(1);
    }
    Ok(())
}
