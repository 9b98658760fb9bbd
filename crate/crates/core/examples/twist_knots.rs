//! Twist knots: closed-form HOMFLY, the braid presentation cross-check,
//! and the divisor-set verification grid.

use untwist::families::{twist_knot_braid, twist_knot_homfly, verify_divisor_sets};
use untwist::homfly::{conway_of, SkeinEngine};

fn main() -> untwist::Result<()> {
    let engine = SkeinEngine::default();
    for n in 0..=5u64 {
        let p = twist_knot_homfly(n);
        let braid = twist_knot_braid(n as usize);
        let agrees = engine.homfly_braid(&braid)? == p;
        println!("K_{n}: P = {p}");
        println!(
            "     conway {}, braid [{braid}] agrees: {agrees}",
            conway_of(&p)?
        );
    }

    let report = verify_divisor_sets(8, 20)?;
    println!(
        "divisor grid n <= 8, k <= 20: {} cells, passed = {}",
        report.cells.len(),
        report.passed
    );
    Ok(())
}
