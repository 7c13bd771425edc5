//! The ratio condition `rho p(-mu) + mu p(rho) >= 0` on `0 < mu <= rho`:
//! fast paths, grid refutation and a replayable Bernstein certificate.
//!
//! ```bash
//! cargo run --example ratio_condition
//! ```

use np_preserve::cone::{check_ratio, RatioBudget, RatioCertificate};
use np_preserve::Polynomial;

fn main() {
    let cases = [
        ("independence", Polynomial::from_ints(&[0, 2, 0, -2, 0, 1])),
        ("negated identity", Polynomial::from_ints(&[0, -1])),
        ("separation", Polynomial::from_ints(&[1, 1, -1, 0, 1])),
        ("needs subdivision", Polynomial::from_ints(&[1, 1, -1, 1, 1])),
    ];
    for (label, p) in &cases {
        let v = check_ratio(p, RatioBudget::default());
        print!("{label:<18} {p:<24} {:<7}", v.status.as_str());
        if let Some(w) = &v.witness {
            print!(" rho = {}, mu = {}, value = {}", w.rho, w.mu, w.value);
        }
        match &v.certificate {
            Some(RatioCertificate::Bernstein(cert)) => {
                let replay = cert.replay(p).map(|_| "ok").unwrap_or("FAILED");
                print!(" bernstein: {} boxes, replay {replay}", cert.boxes.len());
            }
            Some(other) => print!(" via {}", other.name()),
            None => {}
        }
        println!();
    }
}
