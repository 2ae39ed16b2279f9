//! Runs every property suite at a small size and prints the reports.

use vtl::checks::{passing_conventions, run, CheckConfig, Suite};

fn main() {
    let cfg = CheckConfig {
        samples: 50,
        ..CheckConfig::new(4, 1)
    };
    for suite in Suite::ALL {
        print!("{}", run(suite, &cfg));
    }
    println!(
        "cusp conventions satisfying the arrow relations: {:?}",
        passing_conventions(4, 1)
    );
}
