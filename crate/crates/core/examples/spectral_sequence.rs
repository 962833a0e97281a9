//! The E1 page of the weight spectral sequence for segment data.

use weil_deligne::rational::q_int;
use weil_deligne::segments::{Segment, SegmentRep};
use weil_deligne::specseq::{
    abutment, assemble_e1, check_degeneration, compare_with_rec, StrataInput,
};
use weil_deligne::ResidueCard;

fn main() -> weil_deligne::Result<()> {
    let q = ResidueCard::new(4)?;
    let r = SegmentRep::from_lengths(&[2, 1], q, q_int(0))?;
    let page = assemble_e1(&StrataInput::from_segments(&r)?)?;
    println!("{}", page.render());
    println!("degenerate at E1: {}", check_degeneration(&page));
    let ab = abutment(&page)?;
    println!("abutment {ab}, matches rec: {}", compare_with_rec(&ab, &r));

    // unequal twists: the page does not degenerate
    let segments = vec![
        Segment {
            c: q_int(0),
            s: 1,
            label: "V1".into(),
        },
        Segment {
            c: q_int(2),
            s: 1,
            label: "V2".into(),
        },
    ];
    let r = SegmentRep::new(2, q, q_int(0), segments)?;
    let page = assemble_e1(&StrataInput::from_segments(&r)?)?;
    println!("{}", page.render());
    println!("degenerate at E1: {}", check_degeneration(&page));
    println!("{}", abutment(&page).unwrap_err());
    Ok(())
}
