//! Membership in the preservers of 2x2 nonnegative matrices with the full
//! trail of sub-conditions and an exact witness matrix on rejection.
//!
//! ```bash
//! cargo run --example membership -- "x^5 - 2x^3 + 2x"
//! ```

use np_preserve::cli::parse_expression;
use np_preserve::cone::RatioBudget;
use np_preserve::preserver::check_p2;

fn main() {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        vec!["x^5 - 2x^3 + 2x".into(), "-x".into(), "x^4 - x^2 + x + 1".into(), "x".into()]
    } else {
        inputs
    };
    for text in &inputs {
        let p = match parse_expression(text) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        let v = check_p2(&p, RatioBudget::default());
        println!("{p}: {}", v.status.as_str());
        for entry in &v.certificate_trail {
            println!("    {:<11} {}", entry.condition.as_str(), entry.status_label());
        }
        if let (Some(a), Some((i, j, value))) = (&v.witness_matrix, v.image_negative_entry(&p)) {
            println!("    witness A = {a}");
            println!("    p(A)[{}][{}] = {value}", i + 1, j + 1);
        }
    }
}
