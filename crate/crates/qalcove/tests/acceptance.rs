use std::process::ExitCode;

use qalcove::golden::data_dir;
use qalcove::suite::{run_all, DEFAULT_SEED};

fn main() -> ExitCode {
    let rows = run_all(DEFAULT_SEED, &data_dir());
    for c in &rows {
        println!("{} [{:.2}s]", c.line(), c.elapsed.as_secs_f64());
    }
    let failed = rows.iter().filter(|c| !c.passed).count();
    println!(
        "acceptance: {} of {} criteria passed",
        rows.len() - failed,
        rows.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
