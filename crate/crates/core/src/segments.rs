//! Iwahori-spherical representations of `GL_n` as segment data.
//!
//! A segment `(c, s)` stands for `Sp_s(χ)` with `χ` unramified and
//! `|χ(ϖ)| = q^(-c/2)`; a list of segments with lengths summing to `n` stands
//! for the full normalized induction of their tensor product.
//!
//! Weight convention: the strata atom `V_i` of segment `i` has weight
//! `w0 + n - s_i + c_i`, and `rec` sends segment `i` to `Sp_{s_i}` whose bottom
//! constituent is `V_i`. Tempered data therefore map to representations pure
//! of weight `w0 + n - 1 + c`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, fmt_q, parse_q, q_int, Q};
use crate::wd::{AtomRep, IndecompWD, ResidueCard, SymbolicWD};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub c: Q,
    pub s: u32,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentRep {
    n: u32,
    q: ResidueCard,
    w0: Q,
    segments: Vec<Segment>,
}

impl SegmentRep {
    pub fn new(n: u32, q: ResidueCard, w0: Q, segments: Vec<Segment>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSegments("n must be positive".into()));
        }
        if segments.iter().any(|seg| seg.s == 0) {
            return Err(Error::ZeroLength);
        }
        let total: u64 = segments.iter().map(|seg| seg.s as u64).sum();
        if total != n as u64 {
            return Err(Error::InvalidSegments(format!(
                "segments: lengths sum to {total}, expected n = {n}"
            )));
        }
        let mut seen = BTreeSet::new();
        for seg in &segments {
            if !seen.insert(seg.label.as_str()) {
                return Err(Error::InvalidSegments(format!(
                    "segments: duplicate label {:?}",
                    seg.label
                )));
            }
        }
        Ok(SegmentRep { n, q, w0, segments })
    }

    /// Segments with the given lengths, all with `c = 0`, labelled `V1, V2, ...`.
    pub fn from_lengths(lengths: &[u32], q: ResidueCard, w0: Q) -> Result<Self> {
        let n = lengths.iter().sum();
        let segments = lengths
            .iter()
            .enumerate()
            .map(|(i, &s)| Segment {
                c: Q::zero(),
                s,
                label: format!("V{}", i + 1),
            })
            .collect();
        SegmentRep::new(n, q, w0, segments)
    }

    pub fn steinberg(n: u32, q: ResidueCard) -> Result<Self> {
        SegmentRep::from_lengths(&[n], q, Q::zero())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> ResidueCard {
        self.q
    }

    pub fn w0(&self) -> &Q {
        &self.w0
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn lengths(&self) -> Vec<u32> {
        self.segments.iter().map(|seg| seg.s).collect()
    }

    /// The strata atom `V_i` of segment `i`.
    pub fn strata_atom(&self, i: usize) -> AtomRep {
        let seg = &self.segments[i];
        AtomRep {
            label: seg.label.clone(),
            dim: 1,
            weight: &self.w0 + q_int(self.n as i64 - seg.s as i64) + &seg.c,
        }
    }

    pub fn to_json(&self) -> SegmentJson {
        SegmentJson {
            n: self.n,
            q: Some(self.q.get()),
            w0: Some(fmt_q(&self.w0)),
            segments: self
                .segments
                .iter()
                .map(|seg| SegmentEntryJson {
                    c: Some(fmt_q(&seg.c)),
                    s: seg.s,
                    label: Some(seg.label.clone()),
                })
                .collect(),
        }
    }

    pub fn from_json(raw: &SegmentJson) -> Result<Self> {
        let q = ResidueCard::new(raw.q.unwrap_or(4))?;
        let w0 = raw.w0.as_deref().map_or(Ok(Q::zero()), parse_q)?;
        let segments = raw
            .segments
            .iter()
            .enumerate()
            .map(|(i, e)| {
                Ok(Segment {
                    c: e.c.as_deref().map_or(Ok(Q::zero()), parse_q)?,
                    s: e.s,
                    label: e.label.clone().unwrap_or_else(|| format!("V{}", i + 1)),
                })
            })
            .collect::<Result<_>>()?;
        SegmentRep::new(raw.n, q, w0, segments)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: SegmentJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        SegmentRep::from_json(&raw)
    }
}

/// `{"n": 3, "q": 4, "w0": "0", "segments": [{"c": "0", "s": 2, "label": "V1"}, ...]}`.
/// `q` defaults to 4, `w0` and `c` to 0, labels to `V1, V2, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentJson {
    pub n: u32,
    #[serde(default)]
    pub q: Option<u64>,
    #[serde(default)]
    pub w0: Option<String>,
    pub segments: Vec<SegmentEntryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentEntryJson {
    #[serde(default)]
    pub c: Option<String>,
    pub s: u32,
    #[serde(default)]
    pub label: Option<String>,
}

/// `⊕_i Sp_{s_i}(X_i)` with `X_i` of weight `w0 + n + s_i - 2 + c_i`.
pub fn rec_segments(r: &SegmentRep) -> SymbolicWD {
    let terms = r.segments.iter().enumerate().map(|(i, seg)| {
        let mut atom = r.strata_atom(i);
        atom.weight += q_int(2 * (seg.s as i64 - 1));
        (IndecompWD { atom, s: seg.s }, 1)
    });
    SymbolicWD::from_terms(r.q, terms)
}

pub fn is_tempered(r: &SegmentRep) -> bool {
    r.segments.windows(2).all(|w| w[0].c == w[1].c)
}

/// `n! / ∏ s_j!`.
pub fn iwahori_dim(r: &SegmentRep) -> BigInt {
    multinomial(r.n, &r.lengths())
}

pub fn multinomial(n: u32, parts: &[u32]) -> BigInt {
    parts
        .iter()
        .fold(factorial(n as u64), |acc, &s| acc / factorial(s as u64))
}

/// Integer combination of strata atoms, keyed by segment label.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VirtualAtomSum {
    terms: BTreeMap<String, (AtomRep, BigInt)>,
}

impl VirtualAtomSum {
    pub fn zero() -> Self {
        VirtualAtomSum::default()
    }

    pub fn add_term(&mut self, atom: &AtomRep, coeff: BigInt) {
        let entry = self
            .terms
            .entry(atom.label.clone())
            .or_insert_with(|| (atom.clone(), BigInt::zero()));
        entry.1 += coeff;
        if entry.1.is_zero() {
            self.terms.remove(&atom.label);
        }
    }

    pub fn add_scaled(&mut self, other: &VirtualAtomSum, factor: &BigInt) {
        for (atom, c) in other.terms.values() {
            self.add_term(atom, c * factor);
        }
    }

    pub fn coefficient(&self, label: &str) -> BigInt {
        self.terms
            .get(label)
            .map_or_else(BigInt::zero, |(_, c)| c.clone())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AtomRep, &BigInt)> {
        self.terms.values().map(|(a, c)| (a, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> Vec<AtomTermJson> {
        self.terms()
            .map(|(a, c)| AtomTermJson {
                label: a.label.clone(),
                weight: fmt_q(&a.weight),
                coeff: c.to_string(),
            })
            .collect()
    }
}

impl fmt::Display for VirtualAtomSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (atom, c)) in self.terms().enumerate() {
            let sep = if k == 0 { "" } else { " + " };
            if c.is_one() {
                write!(f, "{sep}[{}]", atom.label)?;
            } else {
                write!(f, "{sep}{c}[{}]", atom.label)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtomTermJson {
    pub label: String,
    pub weight: String,
    pub coeff: String,
}

/// `Σ_{s_i >= n-h} h! / ((s_i + h - n)! ∏_{j≠i} s_j!) [V_i]`.
pub fn red_h(r: &SegmentRep, h: u32) -> Result<VirtualAtomSum> {
    if h > r.n {
        return Err(Error::OutOfRange {
            value: h as i64,
            lo: 0,
            hi: r.n as i64,
        });
    }
    let mut out = VirtualAtomSum::zero();
    for (i, seg) in r.segments.iter().enumerate() {
        if seg.s + h < r.n {
            continue;
        }
        let mut parts: Vec<u32> = r.lengths();
        parts[i] = seg.s + h - r.n;
        out.add_term(&r.strata_atom(i), multinomial(h, &parts));
    }
    Ok(out)
}

/// The strata alternating sum together with its closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrataClass {
    pub s_size: u32,
    /// `Σ_h (-1)^(n-S-h) C(n-S, h) Red^(h)`.
    pub alternating: VirtualAtomSum,
    /// `Σ_{s_i = S} [V_i]`.
    pub class: VirtualAtomSum,
    /// `(n-S)! S! / ∏ s_j!`, so that `alternating = scalar · class`.
    pub scalar: Q,
}

pub fn strata_class(r: &SegmentRep, s_size: u32) -> Result<StrataClass> {
    if s_size == 0 || s_size > r.n {
        return Err(Error::OutOfRange {
            value: s_size as i64,
            lo: 1,
            hi: r.n as i64,
        });
    }
    let top = r.n - s_size;
    let mut alternating = VirtualAtomSum::zero();
    for h in 0..=top {
        let sign = if (top - h) % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        alternating.add_scaled(&red_h(r, h)?, &(sign * binomial(top as i64, h as i64)));
    }
    let mut class = VirtualAtomSum::zero();
    for (i, seg) in r.segments.iter().enumerate() {
        if seg.s == s_size {
            class.add_term(&r.strata_atom(i), BigInt::one());
        }
    }
    let denom = r
        .lengths()
        .iter()
        .fold(BigInt::one(), |acc, &s| acc * factorial(s as u64));
    let scalar = Q::new(factorial(top as u64) * factorial(s_size as u64), denom);
    for (i, seg) in r.segments.iter().enumerate() {
        let got = Q::from_integer(alternating.coefficient(&seg.label));
        let expected = if seg.s == s_size {
            scalar.clone()
        } else {
            Q::zero()
        };
        if got != expected {
            return Err(Error::InternalMismatch(format!(
                "strata class for #S = {s_size}: coefficient of [{}] (segment {}) is {}, closed form gives {}",
                seg.label,
                i + 1,
                fmt_q(&got),
                fmt_q(&expected)
            )));
        }
    }
    Ok(StrataClass {
        s_size,
        alternating,
        class,
        scalar,
    })
}

/// `Σ_{h=n-s_i}^{n-S} (-1)^(n-S-h) C(s_i - S, h + s_i - n)`, which is independent
/// of `n >= s_i`; evaluated at `n = s_i`.
pub fn telescope_check(s_i: u32, s_size: u32) -> Result<i64> {
    if s_size == 0 || s_size > s_i {
        return Err(Error::OutOfRange {
            value: s_size as i64,
            lo: 1,
            hi: s_i as i64,
        });
    }
    let n = s_i as i64;
    let top = n - s_size as i64;
    let mut total = BigInt::zero();
    for h in (n - s_i as i64)..=top {
        let term = binomial(s_i as i64 - s_size as i64, h + s_i as i64 - n);
        if (top - h) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(i64::try_from(total).expect("small alternating sum"))
}

/// Partitions of `n` as non-increasing part lists, in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
