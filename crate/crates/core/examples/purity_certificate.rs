//! Purity verdicts, weight filtrations and primitive decompositions.

use weil_deligne::purity::{
    certificate_matrix, certificate_symbolic, primitive_decomposition, symbolic_weight_filtration,
    Classify,
};
use weil_deligne::rational::fmt_q;
use weil_deligne::segments::{rec_segments, SegmentRep};
use weil_deligne::{AtomRep, MatrixWD, ResidueCard, SymbolicWD};

fn main() -> weil_deligne::Result<()> {
    let q = ResidueCard::new(4)?;

    let st3 = rec_segments(&SegmentRep::steinberg(3, q)?);
    let verdict = st3.classify();
    println!("{st3}: {verdict}");

    let fil = symbolic_weight_filtration(&st3);
    for (i, d) in &fil.jumps {
        println!("dim W_{} = {d}", fmt_q(i));
    }

    let k = verdict.center().cloned().expect("pure");
    let prim = primitive_decomposition(&st3, &k)?;
    for p in &prim.parts {
        println!(
            "i = {}: dim V_i = {}, dim V(i) = {}",
            p.i, p.dim_graded, p.dim_primitive
        );
    }

    // Sp_1 of weight 0 next to Sp_2 centered at 1 is mixed
    let mixed = SymbolicWD::sp(AtomRep::line("A", 0), 1, q)?.direct_sum(&SymbolicWD::sp(
        AtomRep::line("B", 2),
        2,
        q,
    )?)?;
    println!("{mixed}: {}", mixed.classify());
    println!(
        "{}",
        serde_json::to_string_pretty(&certificate_symbolic(&mixed)?).unwrap()
    );

    // the matrix certificate carries explicit bases
    let m = MatrixWD::from_symbolic(&st3, 2)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&certificate_matrix(&m)?).unwrap()
    );
    Ok(())
}
