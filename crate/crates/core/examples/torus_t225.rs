//! The torus knot T(2,25) and its t-move candidate set over k = 2..30,
//! next to the explicit untwisting sequences.

use untwist::families::{torus_homfly, untwist_witness, FamilyInstance};
use untwist::homfly::conway_of;
use untwist::obstruct::{candidate_sets, MoveFamily};

fn main() -> untwist::Result<()> {
    let inst = FamilyInstance::torus2(25)?;
    let p = torus_homfly(25)?;
    let (t, _) = candidate_sets(&inst.name(), &p, &conway_of(&p)?, 30)?;
    println!("{}: t candidates {:?}", inst.name(), t.candidates());

    for k in 1..=30 {
        if let Some(seq) = untwist_witness(&inst, MoveFamily::T, k)? {
            println!(
                "k = {k:>2}: {} inverse moves, 25 -> {}",
                seq.moves.len(),
                seq.final_exponent()
            );
        }
    }
    Ok(())
}
