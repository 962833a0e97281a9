//! Explicit (phi, N) pairs: multiplicative Jordan decomposition,
//! Frobenius semisimplification and the symbolic normal form.

use weil_deligne::purity::Classify;
use weil_deligne::rational::fmt_q;
use weil_deligne::{MatrixWD, RatMatrix, ResidueCard};

fn main() -> weil_deligne::Result<()> {
    let q = ResidueCard::new(4)?;

    // phi has a unipotent Jordan block on the weight 0 eigenvalue 1
    let phi = RatMatrix::from_ints(&[&[4, 0, 0], &[0, 1, 1], &[0, 0, 1]]);
    let nilp = RatMatrix::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]);
    let m = MatrixWD::new(q, phi, nilp)?;

    for (alpha, mult) in m.eigenvalues() {
        println!(
            "eigenvalue {} of multiplicity {mult}, weight {}",
            fmt_q(alpha),
            m.eigenvalue_weight(alpha)?
        );
    }
    println!("semisimple: {}", m.is_semisimple());

    let parts = m.mult_jordan();
    println!("s =\n{}", parts.semisimple);
    println!("u =\n{}", parts.unipotent);

    let ss = m.frobenius_semisimplify()?;
    println!("phi_ss =\n{}", ss.phi());
    println!("symbolic form: {}", m.to_symbolic()?);
    println!("classify = {}", m.classify());

    // conjugating does not change the symbolic form
    let g = RatMatrix::from_ints(&[&[1, 1, 0], &[0, 1, 2], &[0, 0, 1]]);
    println!("after conjugation: {}", m.conjugate(&g)?.to_symbolic()?);

    // N must lower eigenvalues by q
    let bad = MatrixWD::new(
        q,
        RatMatrix::from_ints(&[&[4, 0], &[0, 1]]),
        RatMatrix::from_ints(&[&[0, 1], &[0, 0]]),
    );
    println!("N raising weight: {}", bad.unwrap_err());
    Ok(())
}
