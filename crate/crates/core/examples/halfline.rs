//! Decide nonnegativity on `[0, inf)` and print the rejection witness.
//!
//! ```bash
//! cargo run --example halfline
//! ```

use np_preserve::cli::parse_expression;
use np_preserve::halfline::check_nonneg_halfline;

fn main() {
    let inputs = [
        "x^4 - x^2 + x + 1",
        "5x^4 - 6x^2 + 2",
        "-x",
        "x^3 - 3x + 2",
        "x^3 - 3x^2 + 3x - 1",
    ];
    for text in inputs {
        let p = parse_expression(text).expect("valid literal");
        let v = check_nonneg_halfline(&p);
        match (&v.witness, v.failure) {
            (Some(x0), Some(why)) => {
                println!("{p:<28} rejected ({}) at x0 = {x0}, p(x0) = {}", why.as_str(), p.eval(x0))
            }
            _ => println!("{p:<28} nonnegative on [0, inf)"),
        }
    }
}
