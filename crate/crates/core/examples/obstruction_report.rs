//! Candidate sets of `k` for both move families, as JSON.
//!
//! cargo run --example obstruction_report -- "1 1 1 2 -1 2" 12

use untwist::braid::BraidWord;
use untwist::homfly::{conway_of, SkeinEngine};
use untwist::obstruct::{candidate_sets, exceptional_k_set, fibred_obstruction};

fn main() -> untwist::Result<()> {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "1 1 1".to_string());
    let k_max = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);

    let word: BraidWord = text.parse()?;
    let p = SkeinEngine::default().homfly_braid(&word)?;
    let nabla = conway_of(&p)?;
    let (mut t, tbar) = candidate_sets(&text, &p, &nabla, k_max)?;
    t.add_modp_columns(&p, 2)?;

    println!("fibred criterion: {}", fibred_obstruction(&nabla));
    println!("t candidates:     {:?}", t.candidates());
    println!("tbar candidates:  {:?}", tbar.candidates());
    println!("exceptional k:    {:?}", exceptional_k_set(&p, k_max)?);
    println!("{}", serde_json::to_string_pretty(&t).unwrap());
    Ok(())
}
