//! Sum-of-squares style certificates `p = f1^2 + f2^2 + x (g1^2 + g2^2)`.
//!
//! ```bash
//! cargo run --example certificate -- 128
//! ```

use np_preserve::halfline::polya_szego_certificate;
use np_preserve::rational::to_f64;
use np_preserve::Polynomial;

fn approx(p: &Polynomial) -> String {
    let c: Vec<String> = p.coeffs().iter().map(|c| format!("{:.6}", to_f64(c))).collect();
    format!("[{}]", c.join(", "))
}

fn main() {
    let bits: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(128);
    let examples = [
        Polynomial::from_ints(&[2, 0, -6, 0, 5]),
        Polynomial::from_ints(&[1, 0, -1, 0, 1]),
        Polynomial::from_ints(&[1, -2, 0, 4]),
    ];
    for p in &examples {
        let cert = polya_szego_certificate(p, bits).expect("nonnegative on the half-line");
        println!("p = {p}");
        for (name, q) in [("f1", &cert.f1), ("f2", &cert.f2), ("g1", &cert.g1), ("g2", &cert.g2)] {
            println!("  {name} ~ {}", approx(q));
        }
        println!("  residual  = {:e}", to_f64(&cert.residual));
        println!("  tolerance = {:e}", to_f64(&cert.tolerance));
        assert_eq!(cert.residual_against(p), cert.residual);
    }
}
