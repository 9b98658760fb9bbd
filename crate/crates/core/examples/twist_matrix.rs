//! Powers of the two-strand twist matrix `M = [[0, 1], [a^2, a z]]`.

use untwist::cyclo::{zeta_twist_value, Cyclotomic};
use untwist::homfly::{symbolic_twist_matrix, twist_matrix_power, two_strand_homfly};
use untwist::poly::Ring;

fn main() -> untwist::Result<()> {
    let m = symbolic_twist_matrix();
    println!("trace M = {}", m.trace());
    println!("det M   = {}", m.det());

    for k in 3..=8u64 {
        let (_, z) = zeta_twist_value(k)?;
        let scalar = twist_matrix_power(&z, 2 * k as i64).is_scalar_power(2 * k as i64);
        println!("k = {k}: M^{} = a^{} I at z_k: {scalar}", 2 * k, 2 * k);
    }

    // repeated eigenvalue at z = 2ζ4
    let z = Cyclotomic::root(4).mul(&Cyclotomic::from_int(4, 2));
    let m4 = twist_matrix_power(&z, 4);
    println!("z = 2ζ4: M^4 = a^4 I is {}", m4.is_scalar_power(4));
    println!(
        "z = 2ζ4: M^4 = a^4 I mod 4 is {}",
        m4.map(|c| c.reduce_coeffs(4)).is_scalar_power(4)
    );

    for m in [-3, -1, 1, 3, 5, 7] {
        println!("P(T(2,{m})) = {}", two_strand_homfly(m));
    }
    Ok(())
}
