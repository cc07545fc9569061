// Chain notation, expansion to bounding curves, and the conjugation rules
// that rewrite a twist-conjugated chain map as a word in chain maps.

use torelli::chain::{conjugate_by_twist, enumerate_generators, ChainNotation};
use torelli::surface::{SurfaceModel, Twist};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let model = SurfaceModel::build(3, 2)?;
    for text in ["1346", "β567", "23'67"] {
        let n: ChainNotation = text.parse()?;
        let v = n.expand(&model)?;
        println!("{n}: {} curves, boundary {}, genus {}", v.curves.len(), v.boundary_class, v.genus);
    }

    let n: ChainNotation = "1356".parse()?;
    for (t, s) in [(Twist::C(3), -1), (Twist::C(5), 1), (Twist::B, 1), (Twist::C(7), 1)] {
        match conjugate_by_twist(t, s, &n, &model) {
            Ok((rule, word)) => println!("{t}^{s} * {n} = {word}   ({rule:?})"),
            Err(e) => println!("{t}^{s} * {n}: {e}"),
        }
    }
    println!("{} chain-map generators at genus 3", enumerate_generators(&model)?.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
