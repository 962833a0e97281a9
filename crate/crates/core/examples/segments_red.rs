//! Segment data for Iwahori-spherical representations of GL_n.

use weil_deligne::purity::Classify;
use weil_deligne::segments::{
    is_tempered, iwahori_dim, rec_segments, red_h, strata_class, SegmentRep,
};
use weil_deligne::ResidueCard;

fn main() -> weil_deligne::Result<()> {
    let q = ResidueCard::new(4)?;
    let r = SegmentRep::parse(
        r#"{"n": 4, "q": 4, "w0": "0", "segments": [{"s": 2}, {"s": 1}, {"s": 1}]}"#,
    )?;
    println!("lengths {:?}, tempered {}", r.lengths(), is_tempered(&r));

    let wd = rec_segments(&r);
    println!("rec = {wd}: {}", wd.classify());
    println!("Iwahori dimension {}", iwahori_dim(&r));

    for h in 0..=r.n() {
        println!("Red^({h}) = {}", red_h(&r, h)?);
    }
    for s in 1..=r.n() {
        let c = strata_class(&r, s)?;
        println!("#S = {s}: {} = {} * ({})", c.alternating, c.scalar, c.class);
    }

    let st = SegmentRep::steinberg(3, q)?;
    println!(
        "Steinberg: rec = {}, Iwahori dimension {}",
        rec_segments(&st),
        iwahori_dim(&st)
    );
    Ok(())
}
