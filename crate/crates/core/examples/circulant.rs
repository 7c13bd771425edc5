//! Preservers of 2x2 nonnegative circulants against the full 2x2 class.
//!
//! ```bash
//! cargo run --example circulant
//! ```

use np_preserve::cone::RatioBudget;
use np_preserve::preserver::{check_circulant2, check_p2};
use np_preserve::Polynomial;

fn main() {
    let cases = [
        Polynomial::from_ints(&[0, 2, 0, -2, 0, 1]),
        Polynomial::from_ints(&[0, -1]),
        Polynomial::from_ints(&[0, 0, 1]),
        Polynomial::from_ints(&[2, 0, -2, 0, 1]),
    ];
    println!("{:<24} {:<11} {:<11}", "p", "circulant", "all 2x2");
    for p in &cases {
        let circ = check_circulant2(p);
        let full = check_p2(p, RatioBudget::default());
        println!("{:<24} {:<11} {:<11}", p.to_string(), circ.status.as_str(), full.status.as_str());
        if let Some(a) = &circ.witness_matrix {
            println!("    circulant witness {a}, image {}", circ.image(p).unwrap());
        }
    }
}
