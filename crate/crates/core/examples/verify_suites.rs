//! Running the seeded invariant suites and rendering their reports.

use window_duality::cli::{render_report, ReportFormat};
use window_duality::verify::{run_suite, TrialConfig, SUITES};

fn main() -> window_duality::Result<()> {
    for &(name, _, _, dim) in SUITES {
        let report = run_suite(&TrialConfig::new(name, dim, 20, 42))?;
        print!("{}", render_report(&report, ReportFormat::Text));
    }
    Ok(())
}
