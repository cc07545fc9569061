// Homology classes of the chain curves on the two surface models.

use torelli::surface::SurfaceModel;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (g, n) in [(3, 2), (3, 1)] {
        let model = SurfaceModel::build(g, n)?;
        model.check_constraints()?;
        println!("genus {g}, {n} boundary component(s), rank {}", model.rank());
        for (name, class) in model.curve_table() {
            println!("  {name:>7}: {class}");
        }
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
