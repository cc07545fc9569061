// Ranks of the tau and sigma images of all chain-map generators.

use torelli::checks::rank_check;
use torelli::surface::SurfaceModel;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (g, n) in [(3, 2), (3, 1)] {
        let r = rank_check(&SurfaceModel::build(g, n)?)?;
        println!(
            "genus {g}, {n} boundary: {} generators, tau rank {}/{}, sigma rank {}/{}",
            r.generators, r.tau_rank, r.tau_expected, r.sigma_rank, r.sigma_expected
        );
        assert!(r.holds());
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
