// The Birman-Craggs-Johnson homomorphism as a Boolean polynomial of degree
// at most three, and its compatibility with tau modulo two.

use torelli::chain::ChainNotation;
use torelli::sigma::{sigma_notation, w_membership};
use torelli::surface::SurfaceModel;
use torelli::tau::tau_notation;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let model = SurfaceModel::build(3, 2)?;
    for text in ["1234", "123456", "β567"] {
        let n: ChainNotation = text.parse()?;
        let s = sigma_notation(&n, &model)?;
        let terms: Vec<String> = s.labeled_monomials().iter().map(|m| m.join("")).collect();
        println!("sigma{n} = {}", terms.join(" + "));
        let t = tau_notation(&n, &model)?;
        assert!(w_membership(&t, &s));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
