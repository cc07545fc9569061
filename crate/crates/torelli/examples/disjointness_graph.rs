// Connectivity of the graph whose vertices are m-subsets of handles and
// whose edges join disjoint subsets.

use torelli::checks::graph_check;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (g, m) in [(4, 2), (4, 3), (7, 3)] {
        let c = graph_check(g, m)?;
        println!(
            "g={g} m={m}: {} vertices, {} edges, connected: {}",
            c.vertices, c.edges, c.connected
        );
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
