// Checking group relations at the level of tau and sigma. The literal form
// of J1 leaves a residual once k reaches four; the corrected form does not.

use torelli::chain::{relation_k_range, RelationName};
use torelli::checks::verify_relation;
use torelli::surface::SurfaceModel;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let model = SurfaceModel::build(4, 2)?;
    for name in [RelationName::J1, RelationName::J1Full, RelationName::J2, RelationName::J3] {
        for k in relation_k_range(name, &model) {
            let r = verify_relation(name, k, &model)?;
            println!(
                "{name} k={k}: {}  tau residual terms {}, sigma residual terms {}",
                if r.holds() { "holds" } else { "fails" },
                r.tau_difference.len(),
                r.sigma_difference.len()
            );
        }
    }
    let lantern = verify_relation(RelationName::Lantern, 0, &SurfaceModel::build(3, 2)?)?;
    println!("lantern: {}", if lantern.holds() { "holds" } else { "fails" });
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
