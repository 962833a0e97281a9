//! Building symbolic Weil-Deligne representations and combining them.

use weil_deligne::purity::Classify;
use weil_deligne::rational::{fmt_q, q_int};
use weil_deligne::{AtomRep, IndecompWD, ResidueCard, SymbolicWD};

fn main() -> weil_deligne::Result<()> {
    let q = ResidueCard::new(4)?;

    // Sp_3 on a character of weight 2: constituents of weight 2, 0, -2
    let sp3 = SymbolicWD::sp(AtomRep::line("A", 2), 3, q)?;
    let sp1 = SymbolicWD::sp(AtomRep::line("B", 0), 1, q)?;
    let v = sp3.direct_sum(&sp1)?;
    println!("V = {v}");
    println!("dim V = {}", v.dim());
    let weights: Vec<String> = v
        .weight_profile()
        .iter()
        .map(|(w, m)| format!("{}^{m}", fmt_q(w)))
        .collect();
    println!("weights {}", weights.join(" "));
    println!("classify(V) = {}", v.classify());

    let twisted = v.unramified_twist(&q_int(3), "'");
    println!("V(3) = {twisted}, classify = {}", twisted.classify());

    let dual = v.dual();
    println!("V^ = {dual}, classify = {}", dual.classify());

    // restriction to the unramified extension of degree 2 squares q
    let res = v.restrict(2)?;
    println!("Res V = {res} over q = {}", res.q());

    // the Grothendieck group: [V] - [Sp_1(B)] is effective again
    let diff = v.virtual_difference(&sp1)?;
    println!(
        "[V] - [Sp_1(B)] effective: {:?}",
        diff.to_effective().map(|e| e.to_string())
    );

    let sp2 = IndecompWD::new(AtomRep::line("C", 1), 2)?;
    println!("{sp2} has center {}", sp2.center());

    println!("{}", serde_json::to_string_pretty(&v.to_json()).unwrap());
    Ok(())
}
