// Integral symplectic algebra: pairings, transvections and the
// Gram-Schmidt splitting of a sublattice into hyperbolic pairs and radical.

use torelli::symplectic::{HomologyClass, IntersectionForm, Sublattice};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let form = IntersectionForm::standard(3);
    let x1 = HomologyClass::x(6, 1);
    let y1 = HomologyClass::y(6, 1);
    let y2 = HomologyClass::y(6, 2);
    println!("<x1, y1> = {}", form.pairing(&x1, &y1)?);

    let c = &y2 - &y1;
    let t = form.transvection_power_matrix(&c, 2)?;
    println!("T^2 along {c} is symplectic: {}", form.sp_membership(&t)?);
    println!("x1 under it: {}", t.apply(&x1)?);
    assert!(form.stabilizer_membership(&t, &c)?);

    let lattice = Sublattice::new(vec![x1.clone(), y1.checked_add(&y2)?, y2.clone()])?;
    let split = form.symplectic_gram_schmidt(&lattice)?;
    println!("hyperbolic pairs: {}, radical rank: {}", split.pairs.len(), split.radical_basis.len());
    assert_eq!(split.pairs.len(), 1);
    assert_eq!(split.radical_basis.len(), 1);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
