//! Subrepresentations of a pure V: the exterior power test, purity of W and
//! splitting agree; a filtration whose graded pieces pass the test splits.

use weil_deligne::purity::{
    filtration_split, summand_test, summand_test_symbolic, FiltrationSplit, SubPiece,
    SummandVerdict,
};
use weil_deligne::{AtomRep, IndecompWD, MatrixWD, RatMatrix, ResidueCard, SymbolicWD};

fn main() -> weil_deligne::Result<()> {
    let q = ResidueCard::new(4)?;
    let sp2 = IndecompWD::new(AtomRep::line("A", 1), 2)?;
    let sp1 = IndecompWD::new(AtomRep::line("B", 0), 1)?;
    let v = SymbolicWD::from_terms(q, [(sp2.clone(), 1), (sp1.clone(), 1)]);

    // the kernel of N on Sp_2 is a subrepresentation of weight -1, not a summand
    let kernel = SubPiece {
        key: sp2.clone(),
        count: 1,
        keep: 1,
    };
    let r = summand_test_symbolic(&v, &[kernel])?;
    println!(
        "W = {}: exterior {}, pure {}, splits {}",
        r.sub, r.exterior_pure, r.sub_pure, r.splits
    );

    let whole = SubPiece {
        key: sp1,
        count: 1,
        keep: 1,
    };
    let r = summand_test_symbolic(&v, &[whole])?;
    println!(
        "W = {}: splits {}, complement {:?}",
        r.sub,
        r.splits,
        r.complement.map(|c| c.to_string())
    );

    // the same with matrices: N maps e0 to e1 inside Sp_2, e2 spans Sp_1
    let m = MatrixWD::from_symbolic(&v, 2)?;
    println!("phi =\n{}\nN =\n{}", m.phi(), m.nilp());
    for (name, cols) in [("span(e1)", vec![1usize]), ("span(e2)", vec![2])] {
        let sub = RatMatrix::identity(3).select_columns(&cols);
        let rep = summand_test(&m, &sub)?;
        let verdict = match &rep.verdict {
            SummandVerdict::SummandWithComplement(c) => format!("complement\n{c}"),
            SummandVerdict::NotPure => "not pure".to_string(),
        };
        println!("{name}: agree {}, {verdict}", rep.conditions_agree());
    }

    let fil = [
        RatMatrix::identity(3),
        RatMatrix::identity(3).select_columns(&[2]),
    ];
    match filtration_split(&m, &fil)? {
        FiltrationSplit::Split(pieces) => {
            for p in pieces {
                println!("gr^{}: {} with basis\n{}", p.j, p.verdict, p.basis);
            }
        }
        FiltrationSplit::CriterionFails(j) => println!("gr^{j} fails"),
    }
    Ok(())
}
