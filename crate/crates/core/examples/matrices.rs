//! Positive matrices with a prescribed spectrum, their images in closed
//! form, similarity scrambling and the two witness templates.
//!
//! ```bash
//! cargo run --example matrices
//! ```

use np_preserve::matrix::{
    closed_form_image, horner_matrix_eval, posmatrix_generate, scramble_similarity, witness_from_ratio,
    witness_from_spectral, PosMatrixParams,
};
use np_preserve::rational::{int, rat};
use np_preserve::Polynomial;

fn main() {
    let p = Polynomial::from_ints(&[0, 2, 0, -2, 0, 1]);
    let params = PosMatrixParams::new(int(1), rat(-1, 2), int(1)).unwrap();
    let b = posmatrix_generate(&params);
    println!("B = {b}  (trace {}, det {})", b.trace(), b.determinant());
    println!("p(B) by Horner      = {}", horner_matrix_eval(&p, &b));
    println!("p(B) in closed form = {}", closed_form_image(&p, &params));

    let a = witness_from_ratio(&int(1), &rat(1, 2)).unwrap();
    let scrambled = scramble_similarity(&a, &int(1), &int(2), true).unwrap();
    println!("ratio witness A = {a}, p(A) = {}", horner_matrix_eval(&p, &a));
    println!("scrambled S     = {scrambled}, p(S) = {}", horner_matrix_eval(&p, &scrambled));

    let c = witness_from_spectral(&int(1), &int(-1)).unwrap();
    let neg = Polynomial::from_ints(&[0, -1]);
    println!("circulant C = {c}, (-x)(C) = {}", horner_matrix_eval(&neg, &c));
}
