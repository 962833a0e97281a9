//! Forgetting N and recovering the unique N that makes V pure.

use weil_deligne::purity::{
    reconstruct_monodromy, reconstruct_monodromy_matrix, strip_monodromy, Classify, Reconstruction,
};
use weil_deligne::{AtomRep, MatrixWD, ResidueCard, SymbolicWD};

fn main() -> weil_deligne::Result<()> {
    let q = ResidueCard::new(4)?;
    let v = SymbolicWD::sp(AtomRep::line("A", 2), 3, q)?.direct_sum(&SymbolicWD::sp(
        AtomRep::line("B", 0),
        1,
        q,
    )?)?;
    println!("V = {v}: {}", v.classify());

    let bare = strip_monodromy(&v);
    println!("with N = 0: {bare}: {}", bare.classify());
    match reconstruct_monodromy(&bare) {
        Reconstruction::Pure(w) => println!("recovered: {w} (same as V: {})", w == v),
        Reconstruction::NoPureN => println!("no pure N"),
    }

    // weights 0 and 4 on one eigenvalue chain cannot be made pure
    let gap = SymbolicWD::sp(AtomRep::line("A", 0), 1, q)?.direct_sum(&SymbolicWD::sp(
        AtomRep::line("A", 4),
        1,
        q,
    )?)?;
    println!(
        "{gap}: {:?}",
        reconstruct_monodromy(&gap)
            .into_option()
            .map(|w| w.to_string())
    );

    // the same on explicit matrices: N is built from Jordan strings
    let m = MatrixWD::from_symbolic(&bare, 2)?;
    if let Reconstruction::Pure(rec) = reconstruct_monodromy_matrix(&m)? {
        println!("N =\n{}", rec.nilp());
        println!("classify = {}", rec.classify());
    }
    Ok(())
}
