// The Johnson homomorphism on chain maps and on words, with the check that
// it intertwines conjugation with the symplectic action.

use torelli::chain::{conjugate_by_twist, ChainNotation, GroupWord, Token};
use torelli::surface::{SurfaceModel, Twist};
use torelli::tau::{sp_action_wedge3, tau_notation, tau_word};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let model = SurfaceModel::build(3, 2)?;
    let n: ChainNotation = "1234".parse()?;
    let t = tau_notation(&n, &model)?;
    println!("tau{n}:");
    for (a, b, c, k) in t.labeled_triples() {
        println!("  {k:+} {a}^{b}^{c}");
    }

    let twist = Twist::C(5);
    let (_, word) = conjugate_by_twist(twist, 1, &n, &model)?;
    let direct = GroupWord::new(vec![Token::chain(n.clone(), 1).conjugated(twist, 1)])?;
    let moved = sp_action_wedge3(model.form(), &model.twist_matrix(twist, 1)?, &t)?;
    assert_eq!(tau_word(&word, &model)?, moved);
    assert_eq!(tau_word(&direct, &model)?, moved);
    println!("{twist} * {n} rewrites to {word}; tau agrees with the Sp action");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
