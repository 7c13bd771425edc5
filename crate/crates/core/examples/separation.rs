//! `x^4 - x^2 + x + 1` preserves every 2x2 nonnegative matrix yet fails a
//! necessary condition for 3x3, so the 3x3 preservers are a strict subset.
//!
//! ```bash
//! cargo run --example separation
//! ```

use np_preserve::cone::RatioBudget;
use np_preserve::preserver::{check_p2, p3_necessary_screen, ScreenOutcome};
use np_preserve::Polynomial;

fn main() {
    let p = Polynomial::from_ints(&[1, 1, -1, 0, 1]);
    let v = check_p2(&p, RatioBudget::default());
    println!("p = {p}");
    println!("2x2 preserver: {}", v.status.as_str());
    if let Some(cert) = v.ratio_certificate() {
        println!("ratio condition certified by: {}", cert.name());
    }
    match p3_necessary_screen(&p) {
        ScreenOutcome::Fail { index, coefficient } => {
            println!("3x3 screen: fail, a_{index} = {coefficient} < 0")
        }
        ScreenOutcome::Pass => println!("3x3 screen: pass (inconclusive)"),
    }
}
