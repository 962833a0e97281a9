//! The `E_1` page of the weight spectral sequence, assembled from strata classes.
//!
//! The stratum class for `#S = σ` sits in cohomological degree `n - σ` and is
//! counted `C(n, σ)` times. It contributes to
//! `E_1^{i,j} = ⊕_{s >= max(0,-i)} ⊕_{#S = i+2s+1} H^j_S(-s)` at
//! `i = σ - 1 - 2s`, `j = n - σ + 2s` for `s = 0..σ-1`, and `N` maps the
//! twist-`s` copy at `(i, j)` identically onto the twist-`(s-1)` copy at
//! `(i+2, j-2)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{binomial, fmt_q, is_integer, q_int, to_i64, Q};
use crate::segments::{rec_segments, strata_class, SegmentRep, StrataClass};
use crate::wd::{AtomRep, IndecompWD, ResidueCard, SymbolicWD};

/// One atom of one stratum class, placed in its cohomological degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumAtom {
    pub sigma: u32,
    pub atom: AtomRep,
    pub coeff: BigInt,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrataInput {
    pub n: u32,
    pub q: ResidueCard,
    pub classes: Vec<StrataClass>,
    pub atoms: Vec<StratumAtom>,
}

impl StrataInput {
    /// Degrees: an atom of weight `w0 + n - σ + c` sits in degree
    /// `n - σ + (c - c_min)`, so weight minus degree is constant. For
    /// tempered data this is the middle degree `n - σ`.
    pub fn from_segments(r: &SegmentRep) -> Result<Self> {
        let c_min = r
            .segments()
            .iter()
            .map(|seg| seg.c.clone())
            .min()
            .expect("at least one segment");
        let mut shift = BTreeMap::new();
        for seg in r.segments() {
            let d = &seg.c - &c_min;
            if !is_integer(&d) {
                return Err(Error::InvalidSegments(format!(
                    "segment {:?}: character weight {} differs from {} by a non-integer",
                    seg.label,
                    fmt_q(&seg.c),
                    fmt_q(&c_min)
                )));
            }
            shift.insert(seg.label.clone(), to_i64(&d).expect("small shift"));
        }
        let n = r.n();
        let mut classes = Vec::new();
        let mut atoms = Vec::new();
        for sigma in 1..=n {
            let class = strata_class(r, sigma)?;
            for (atom, coeff) in class.class.terms() {
                atoms.push(StratumAtom {
                    sigma,
                    atom: atom.clone(),
                    coeff: coeff.clone(),
                    degree: (n - sigma) as i64 + shift[&atom.label],
                });
            }
            classes.push(class);
        }
        Ok(StrataInput {
            n,
            q: r.q(),
            classes,
            atoms,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PageEntry {
    pub sigma: u32,
    pub s: u32,
    pub label: String,
    pub weight: Q,
    /// `C(n, σ)` times the class coefficient.
    pub mult: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E1Page {
    pub n: u32,
    pub q: ResidueCard,
    /// Every position the index law allows for some `σ <= n`; empty lists are zero cells.
    pub cells: BTreeMap<(i64, i64), Vec<PageEntry>>,
}

impl E1Page {
    pub fn empty(n: u32, q: ResidueCard) -> Self {
        E1Page {
            n,
            q,
            cells: BTreeMap::new(),
        }
    }

    pub fn nonzero_cells(&self) -> impl Iterator<Item = (&(i64, i64), &Vec<PageEntry>)> {
        self.cells.iter().filter(|(_, e)| !e.is_empty())
    }

    /// Checks that each twist-`s >= 1` entry has its `N`-image at `(i+2, j-2)`
    /// with twist `s - 1`, the same atom and multiplicity, and weight lower by 2.
    pub fn monodromy_consistent(&self) -> bool {
        self.nonzero_cells().all(|(&(i, j), entries)| {
            entries.iter().filter(|e| e.s > 0).all(|e| {
                self.cells.get(&(i + 2, j - 2)).is_some_and(|target| {
                    target.iter().any(|t| {
                        t.sigma == e.sigma
                            && t.s + 1 == e.s
                            && t.label == e.label
                            && t.mult == e.mult
                            && &t.weight + q_int(2) == e.weight
                    })
                })
            })
        })
    }

    pub fn to_json(&self) -> PageJson {
        PageJson {
            n: self.n,
            q: self.q.get(),
            degenerate: check_degeneration(self),
            cells: self
                .cells
                .iter()
                .map(|(&(i, j), entries)| CellJson {
                    i,
                    j,
                    entries: entries
                        .iter()
                        .map(|e| EntryJson {
                            sigma: e.sigma,
                            s: e.s,
                            label: e.label.clone(),
                            weight: fmt_q(&e.weight),
                            mult: e.mult.to_string(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    /// Rows `j` from the top, columns `i`; each entry as `label:σ/s/w`,
    /// `0` for a zero cell, `.` where the index law allows nothing.
    pub fn render(&self) -> String {
        if self.cells.is_empty() {
            return "(empty page)\n".to_string();
        }
        let (i_lo, i_hi) = (
            self.cells.keys().map(|k| k.0).min().unwrap(),
            self.cells.keys().map(|k| k.0).max().unwrap(),
        );
        let (j_lo, j_hi) = (
            self.cells.keys().map(|k| k.1).min().unwrap(),
            self.cells.keys().map(|k| k.1).max().unwrap(),
        );
        let text = |i: i64, j: i64| -> String {
            match self.cells.get(&(i, j)) {
                None => ".".into(),
                Some(e) if e.is_empty() => "0".into(),
                Some(e) => e
                    .iter()
                    .map(|x| format!("{}:{}/{}/{}", x.label, x.sigma, x.s, fmt_q(&x.weight)))
                    .collect::<Vec<_>>()
                    .join(","),
            }
        };
        let mut width = (i_lo..=i_hi).map(|i| format!("i={i}").len()).max().unwrap();
        for &(i, j) in self.cells.keys() {
            width = width.max(text(i, j).len());
        }
        let label_width = format!("j={j_hi}").len().max(format!("j={j_lo}").len());
        let mut out = String::new();
        for j in (j_lo..=j_hi).rev() {
            let _ = write!(out, "{:<label_width$}", format!("j={j}"));
            for i in i_lo..=i_hi {
                let _ = write!(out, " | {:<width$}", text(i, j));
            }
            out.push_str(" |\n");
        }
        let _ = write!(out, "{:<label_width$}", "");
        for i in i_lo..=i_hi {
            let _ = write!(out, " | {:<width$}", format!("i={i}"));
        }
        out.push_str(" |\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PageJson {
    pub n: u32,
    pub q: u64,
    pub degenerate: bool,
    pub cells: Vec<CellJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellJson {
    pub i: i64,
    pub j: i64,
    pub entries: Vec<EntryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryJson {
    pub sigma: u32,
    pub s: u32,
    pub label: String,
    pub weight: String,
    pub mult: String,
}

pub fn assemble_e1(strata: &StrataInput) -> Result<E1Page> {
    let n = strata.n as i64;
    let mut cells: BTreeMap<(i64, i64), Vec<PageEntry>> = BTreeMap::new();
    for sigma in 1..=n {
        for s in 0..sigma {
            cells
                .entry((sigma - 1 - 2 * s, n - sigma + 2 * s))
                .or_default();
        }
    }
    for a in &strata.atoms {
        let sigma = a.sigma as i64;
        let mult = binomial(n, sigma) * &a.coeff;
        for s in 0..sigma {
            let i = sigma - 1 - 2 * s;
            let j = a.degree + 2 * s;
            if s < 0.max(-i) || sigma != i + 2 * s + 1 {
                return Err(Error::InternalMismatch(format!(
                    "index law fails at ({i}, {j}) for #S = {sigma}"
                )));
            }
            cells.entry((i, j)).or_default().push(PageEntry {
                sigma: a.sigma,
                s: s as u32,
                label: a.atom.label.clone(),
                weight: &a.atom.weight + q_int(2 * s),
                mult: mult.clone(),
            });
        }
    }
    for entries in cells.values_mut() {
        entries.sort();
    }
    Ok(E1Page {
        n: strata.n,
        q: strata.q,
        cells,
    })
}

/// Every differential `d_r` moves `(i, j)` by `(r, 1 - r)`, so it vanishes
/// when all nonzero cells lie on one antidiagonal `i + j = n - 1`.
pub fn check_degeneration(page: &E1Page) -> bool {
    page.nonzero_cells()
        .all(|(&(i, j), _)| i + j == page.n as i64 - 1)
}

/// The degree `n - 1` abutment with `N` strung through the `σ` cells of each atom.
pub fn abutment(page: &E1Page) -> Result<SymbolicWD> {
    if !check_degeneration(page) {
        return Err(Error::NotDegenerate);
    }
    let mut strings: BTreeMap<(u32, String), Vec<&PageEntry>> = BTreeMap::new();
    for (_, entries) in page.nonzero_cells() {
        for e in entries {
            strings
                .entry((e.sigma, e.label.clone()))
                .or_default()
                .push(e);
        }
    }
    let mut terms = Vec::new();
    for ((sigma, label), mut entries) in strings {
        entries.sort_by_key(|e| e.s);
        let complete = entries.len() == sigma as usize
            && entries
                .iter()
                .enumerate()
                .all(|(k, e)| e.s == k as u32 && e.mult == entries[0].mult)
            && entries
                .windows(2)
                .all(|w| &w[0].weight + q_int(2) == w[1].weight);
        if !complete {
            return Err(Error::InternalMismatch(format!(
                "N-string of {label} (#S = {sigma}) is broken"
            )));
        }
        let mult = &entries[0].mult;
        if !mult.is_positive() {
            return Err(Error::InternalMismatch(format!(
                "{label} has multiplicity {mult}"
            )));
        }
        let top = entries.last().unwrap();
        let atom = AtomRep {
            label,
            dim: 1,
            weight: top.weight.clone(),
        };
        let mult = mult
            .to_u64()
            .ok_or_else(|| Error::InternalMismatch("multiplicity overflow".into()))?;
        terms.push((IndecompWD { atom, s: sigma }, mult));
    }
    Ok(SymbolicWD::from_terms(page.q, terms))
}

/// `(label, s, center)` of each indecomposable, ignoring multiplicity.
pub fn type_set(a: &SymbolicWD) -> BTreeSet<(String, u32, Q)> {
    a.terms()
        .map(|(k, _)| (k.atom.label.clone(), k.s, k.center()))
        .collect()
}

pub fn compare_with_rec(ab: &SymbolicWD, r: &SegmentRep) -> bool {
    type_set(ab) == type_set(&rec_segments(r))
}

/// Page, abutment and comparison for one segment datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecseqReport {
    pub page: E1Page,
    pub degenerate: bool,
    pub abutment: Option<SymbolicWD>,
    pub matches_rec: Option<bool>,
}

pub fn run(r: &SegmentRep) -> Result<SpecseqReport> {
    let page = assemble_e1(&StrataInput::from_segments(r)?)?;
    let degenerate = check_degeneration(&page);
    let (abutment, matches_rec) = if degenerate {
        let ab = abutment(&page)?;
        let m = compare_with_rec(&ab, r);
        (Some(ab), Some(m))
    } else {
        (None, None)
    };
    Ok(SpecseqReport {
        page,
        degenerate,
        abutment,
        matches_rec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::purity::{Classify, Verdict};
    use crate::segments::{partitions, SegmentJson};
    use num_traits::Zero;

    fn q4() -> ResidueCard {
        ResidueCard::new(4).unwrap()
    }

    fn page(lengths: &[u32]) -> E1Page {
        let r = SegmentRep::from_lengths(lengths, q4(), Q::zero()).unwrap();
        assemble_e1(&StrataInput::from_segments(&r).unwrap()).unwrap()
    }

    fn labels_at(p: &E1Page, i: i64, j: i64) -> Vec<String> {
        p.cells[&(i, j)].iter().map(|e| e.label.clone()).collect()
    }

    #[test]
    fn small_pages() {
        let p1 = page(&[1]);
        assert_eq!(p1.cells.keys().copied().collect::<Vec<_>>(), vec![(0, 0)]);
        assert_eq!(labels_at(&p1, 0, 0), vec!["V1"]);

        let p2 = page(&[2]);
        assert_eq!(
            p2.cells.keys().copied().collect::<Vec<_>>(),
            vec![(-1, 2), (0, 1), (1, 0)]
        );
        assert!(p2.cells[&(0, 1)].is_empty());
        assert_eq!(labels_at(&p2, -1, 2), vec!["V1"]);
        assert_eq!(p2.cells[&(-1, 2)][0].s, 1);
        assert!(check_degeneration(&p2) && p2.monodromy_consistent());

        let p21 = page(&[2, 1]);
        let nonzero: Vec<_> = p21.nonzero_cells().map(|(k, _)| *k).collect();
        assert_eq!(nonzero, vec![(-1, 3), (0, 2), (1, 1)]);
        assert_eq!(labels_at(&p21, -1, 3), vec!["V1"]);
        assert_eq!(labels_at(&p21, 0, 2), vec!["V2"]);
        assert_eq!(labels_at(&p21, 1, 1), vec!["V1"]);
    }

    #[test]
    fn abutments() {
        let ab1 = abutment(&page(&[1])).unwrap();
        assert_eq!(ab1.to_string(), "Sp1(V1, w=0)");
        let ab2 = abutment(&page(&[2])).unwrap();
        assert_eq!(ab2.to_string(), "Sp2(V1, w=2)");
        assert_eq!(ab2.classify(), Verdict::Pure(q_int(1)));
        let ab21 = abutment(&page(&[2, 1])).unwrap();
        assert_eq!(ab21.classify(), Verdict::Pure(q_int(2)));
        let types = type_set(&ab21);
        assert!(
            types.contains(&("V1".into(), 2, q_int(2)))
                && types.contains(&("V2".into(), 1, q_int(2)))
        );
    }

    #[test]
    fn degeneration_checks() {
        assert!(check_degeneration(&E1Page::empty(3, q4())));
        let mut off = E1Page::empty(2, q4());
        off.cells.insert(
            (0, 2),
            vec![PageEntry {
                sigma: 1,
                s: 0,
                label: "X".into(),
                weight: Q::zero(),
                mult: BigInt::from(1),
            }],
        );
        assert!(!check_degeneration(&off));
        assert_eq!(abutment(&off), Err(Error::NotDegenerate));

        let raw: SegmentJson =
            serde_json::from_str(r#"{"n":2,"segments":[{"s":1,"c":"0"},{"s":1,"c":"1"}]}"#)
                .unwrap();
        let r = SegmentRep::from_json(&raw).unwrap();
        let report = run(&r).unwrap();
        assert!(!report.degenerate && report.abutment.is_none());
    }

    #[test]
    fn tempered_sweep() {
        for n in 1..=6 {
            for lengths in partitions(n) {
                let r = SegmentRep::from_lengths(&lengths, q4(), q_int(3)).unwrap();
                let report = run(&r).unwrap();
                assert!(
                    report.degenerate && report.page.monodromy_consistent(),
                    "{lengths:?}"
                );
                let ab = report.abutment.unwrap();
                assert!(ab.classify().is_pure_of(&q_int(3 + n as i64 - 1)));
                assert_eq!(report.matches_rec, Some(true));
            }
        }
    }

    #[test]
    fn comparison_detects_changes() {
        let r = SegmentRep::from_lengths(&[2, 1], q4(), Q::zero()).unwrap();
        let ab = abutment(&page(&[2, 1])).unwrap();
        assert!(compare_with_rec(&ab, &r));
        let altered = SymbolicWD::from_terms(
            q4(),
            ab.terms().map(|(k, m)| {
                let mut k = k.clone();
                if k.s == 2 {
                    k.s = 1;
                }
                (k, m)
            }),
        );
        assert!(!compare_with_rec(&altered, &r));
    }

    #[test]
    fn render_shape() {
        let text = page(&[2]).render();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("j=2") && lines[0].contains("V1:2/1/2"));
        assert!(lines[3].contains("i=-1"));
    }
}
