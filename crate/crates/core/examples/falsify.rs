//! Randomized search for a nonnegative matrix that `p` maps outside the
//! nonnegative cone, independent of the analytic decision.
//!
//! ```bash
//! cargo run --release --example falsify -- 10000 42
//! ```

use np_preserve::matrix::{falsify_search, horner_matrix_eval};
use np_preserve::Polynomial;

fn main() {
    let mut args = std::env::args().skip(1);
    let trials: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(10_000);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let cases = [
        Polynomial::from_ints(&[0, 2, 0, -2, 0, 1]),
        Polynomial::from_ints(&[0, -1]),
        Polynomial::from_ints(&[0, 0, 1]),
        Polynomial::from_ints(&[1, 1, -1, 0, 1]),
    ];
    for p in &cases {
        match falsify_search(p, trials, seed) {
            Some(f) => {
                let image = horner_matrix_eval(p, &f.matrix);
                println!(
                    "{p}: violated at trial {} ({}{}): A = {}, p(A) = {image}",
                    f.trial,
                    f.family.as_str(),
                    if f.scrambled { ", scrambled" } else { "" },
                    f.matrix
                );
            }
            None => println!("{p}: no violation in {trials} trials"),
        }
    }
}
