//! Double cosets P \ GL_n / B over F_2 and F_3 against n! / prod s_j!.

use weil_deligne::bruhat::bruhat_oracle;
use weil_deligne::segments::{multinomial, partitions};

fn main() -> weil_deligne::Result<()> {
    for p in [2, 3] {
        for n in 1..=4 {
            for s in partitions(n) {
                let count = bruhat_oracle(n, &s, p)?;
                println!(
                    "F_{p}, n = {n}, s = {s:?}: {count} orbits, multinomial {}",
                    multinomial(n, &s)
                );
            }
        }
    }
    println!("n = 5: {}", bruhat_oracle(5, &[5], 2).unwrap_err());
    Ok(())
}
