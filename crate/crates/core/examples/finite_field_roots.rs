//! Primes p = 1 mod 2k, roots of unity of order 2k in F_p, and the
//! matching image of z_k.

use untwist::cyclo::find_finite_field_root;

fn main() -> untwist::Result<()> {
    for k in 3..=10 {
        for skip in 0..2 {
            let r = find_finite_field_root(k, skip)?;
            println!(
                "k = {k:>2}  p = {:>3}  ζ = {:>3}  N = {:>3}",
                r.p,
                r.zeta.value(),
                r.n_value.value()
            );
        }
    }
    Ok(())
}
