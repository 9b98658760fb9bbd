//! HOMFLY and Conway polynomials of a braid closure.
//!
//! cargo run --example homfly_of_braid -- "1 -2 1 -2"

use untwist::braid::BraidWord;
use untwist::homfly::{conway_of, SkeinEngine};
use untwist::obstruct::fwm_bounds;

fn main() -> untwist::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1 1 1".to_string());
    let word: BraidWord = text.parse()?;
    let diagram = word.to_diagram();
    println!("braid       {word} ({} strands)", word.strands());
    println!("components  {}", diagram.component_count());

    let p = SkeinEngine::default().homfly(&diagram)?;
    println!("P(a, z)     {p}");
    println!("conway      {}", conway_of(&p)?);
    if diagram.component_count() == 1 {
        let b = fwm_bounds(&p)?;
        println!(
            "bounds      c >= {}, b >= {}",
            b.crossing_lb, b.braid_index_lb
        );
    }
    Ok(())
}
