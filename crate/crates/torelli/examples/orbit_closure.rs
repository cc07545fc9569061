// Growing a subspace of the wedge-cube under the Humphries twists until it
// fills the target, and finding the smallest seed size that does so.

use torelli::checks::dmin_check;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d = dmin_check(3)?;
    for (size, closure) in &d.by_seed_size {
        println!(
            "seed size {size}: closure dim {} of {} after {} rounds",
            closure.final_dim, d.target_dim, closure.rounds
        );
    }
    println!("d_min = {}", d.d_min);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
