use std::process::ExitCode;

use operad_cli::checks::run_all;

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, r) in run_all().into_iter().enumerate() {
        match r {
            Ok(o) => {
                println!("criterion {}: {}", o.criterion, if o.pass { "PASS" } else { "FAIL" });
                for n in &o.notes {
                    println!("    {n}");
                }
                failed += usize::from(!o.pass);
            }
            Err(e) => {
                println!("criterion {}: FAIL", i + 1);
                println!("    error: {e}");
                failed += 1;
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
