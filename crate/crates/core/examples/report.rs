//! Machine-readable reports, as the command-line tool prints them.
//!
//! ```bash
//! cargo run --example report -- "x^4 - x^2 + x + 1"
//! ```

use np_preserve::cli::{parse_polynomial, run_command, Command, PolySource, RunConfig};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "x^5 - 2x^3 + 2x".into());
    let p = parse_polynomial(&PolySource::Expression(text)).expect("valid literal");
    let config = RunConfig::default();
    for command in [Command::CheckP1, Command::CheckCirculant, Command::CheckP2, Command::P3Screen] {
        let report = run_command(&command, &p, &config).expect("no usage error");
        println!("{} (exit {})", report.to_json(), report.exit_code);
    }
}
