//! Symbolic Frobenius-semisimple Weil-Deligne representations.
//!
//! A Frobenius-semisimple representation is a direct sum of indecomposables
//! `Sp_s(X)` with `X` irreducible, so it is stored as a multiset of
//! [`IndecompWD`] keys. Atoms are opaque: only their label, dimension and
//! weight are tracked.
//!
//! Weights follow the geometric-Frobenius convention: `|Art^-1|(phi) = q^-1`,
//! so tensoring with `|Art^-1|` lowers a weight by 2. The atom of `Sp_s(X)` is
//! its top constituent; the constituents of `Sp_s(X)` have weights
//! `w, w - 2, ..., w - 2(s - 1)` and the block is pure of weight `w - (s - 1)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, is_prime, q_int, serde_q, Q};

/// Cardinality `q` of the residue field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueCard(u64);

impl ResidueCard {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidResidueCard(q));
        }
        Ok(ResidueCard(q))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// `p0` with `q = p0^2`, required by the matrix backend.
    pub fn sqrt(self) -> Result<u64> {
        crate::rational::exact_sqrt(self.0).ok_or(Error::NotPerfectSquare(self.0))
    }

    /// Residue cardinality after an unramified extension of degree `f`.
    pub fn pow(self, f: u32) -> Result<Self> {
        self.0
            .checked_pow(f)
            .map(ResidueCard)
            .ok_or(Error::Overflow { q: self.0, exp: f })
    }

    pub fn as_q(self) -> Q {
        q_int(self.0 as i64)
    }
}

impl fmt::Display for ResidueCard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Irreducible Frobenius-semisimple building block, strictly pure of `weight`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AtomRep {
    pub label: String,
    pub dim: u32,
    pub weight: Q,
}

impl AtomRep {
    pub fn new(label: impl Into<String>, dim: u32, weight: Q) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch(
                "atom dimension must be >= 1".into(),
            ));
        }
        Ok(AtomRep {
            label: label.into(),
            dim,
            weight,
        })
    }

    /// One-dimensional atom of integer weight; handy in tests and examples.
    pub fn line(label: impl Into<String>, weight: i64) -> Self {
        AtomRep {
            label: label.into(),
            dim: 1,
            weight: q_int(weight),
        }
    }
}

impl Ord for AtomRep {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.label, &self.weight, self.dim).cmp(&(&other.label, &other.weight, other.dim))
    }
}

impl PartialOrd for AtomRep {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The indecomposable `Sp_s(atom)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndecompWD {
    pub atom: AtomRep,
    pub s: u32,
}

impl IndecompWD {
    pub fn new(atom: AtomRep, s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::ZeroLength);
        }
        Ok(IndecompWD { atom, s })
    }

    pub fn dim(&self) -> u64 {
        self.s as u64 * self.atom.dim as u64
    }

    /// Weight `k` such that the block is pure of weight `k`.
    pub fn center(&self) -> Q {
        &self.atom.weight - q_int(self.s as i64 - 1)
    }

    /// Weights of the constituents `X |Art^-1|^i`, `i = 0..s`, top first.
    pub fn constituent_weights(&self) -> impl Iterator<Item = Q> + '_ {
        (0..self.s).map(move |i| &self.atom.weight - q_int(2 * i as i64))
    }
}

impl fmt::Display for IndecompWD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Sp{}({}, w={}",
            self.s,
            self.atom.label,
            fmt_q(&self.atom.weight)
        )?;
        if self.atom.dim != 1 {
            write!(f, ", dim={}", self.atom.dim)?;
        }
        write!(f, ")")
    }
}

/// Multiset of weights with multiplicities, keyed in increasing weight order.
pub type WeightProfile = BTreeMap<Q, u64>;

/// Frobenius-semisimple Weil-Deligne representation in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicWD {
    q: ResidueCard,
    terms: BTreeMap<IndecompWD, u64>,
}

impl SymbolicWD {
    pub fn empty(q: ResidueCard) -> Self {
        SymbolicWD {
            q,
            terms: BTreeMap::new(),
        }
    }

    /// The single indecomposable `Sp_s(atom)`.
    pub fn sp(atom: AtomRep, s: u32, q: ResidueCard) -> Result<Self> {
        let key = IndecompWD::new(atom, s)?;
        Ok(SymbolicWD {
            q,
            terms: BTreeMap::from([(key, 1)]),
        })
    }

    /// Builds a canonical form from terms in any order; zero multiplicities are dropped.
    pub fn from_terms(q: ResidueCard, terms: impl IntoIterator<Item = (IndecompWD, u64)>) -> Self {
        let mut out = SymbolicWD::empty(q);
        for (key, mult) in terms {
            out.add_term(key, mult);
        }
        out
    }

    fn add_term(&mut self, key: IndecompWD, mult: u64) {
        if mult > 0 {
            *self.terms.entry(key).or_insert(0) += mult;
        }
    }

    pub fn q(&self) -> ResidueCard {
        self.q
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndecompWD, u64)> {
        self.terms.iter().map(|(k, &m)| (k, m))
    }

    pub fn multiplicity(&self, key: &IndecompWD) -> u64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn dim(&self) -> u64 {
        self.terms.iter().map(|(k, m)| m * k.dim()).sum()
    }

    pub fn direct_sum(&self, other: &SymbolicWD) -> Result<SymbolicWD> {
        if self.q != other.q {
            return Err(Error::QMismatch(self.q.get(), other.q.get()));
        }
        let mut out = self.clone();
        for (k, m) in other.terms() {
            out.add_term(k.clone(), m);
        }
        Ok(out)
    }

    /// Twists every atom by an unramified character of weight `delta_weight`
    /// (`delta_weight = -2m` for `|Art^-1|^m`, `+2m` for the Tate twist `(-m)`).
    pub fn unramified_twist(&self, delta_weight: &Q, label_suffix: &str) -> SymbolicWD {
        let terms = self.terms().map(|(k, m)| {
            let atom = AtomRep {
                label: format!("{}{}", k.atom.label, label_suffix),
                dim: k.atom.dim,
                weight: &k.atom.weight + delta_weight,
            };
            (IndecompWD { atom, s: k.s }, m)
        });
        SymbolicWD::from_terms(self.q, terms)
    }

    /// Restriction to the Weil group of an unramified extension of residue degree `f_prime`.
    ///
    /// Weights are unchanged: if `alpha` is a Weil `q^k`-number then `alpha^f` is a
    /// Weil `(q^f)^k`-number.
    pub fn restrict(&self, f_prime: u32) -> Result<SymbolicWD> {
        if f_prime == 0 {
            return Err(Error::OutOfRange {
                value: 0,
                lo: 1,
                hi: i64::MAX,
            });
        }
        Ok(SymbolicWD {
            q: self.q.pow(f_prime)?,
            terms: self.terms.clone(),
        })
    }

    /// Contragredient. `Sp_s(X)` goes to `Sp_s(X^v |Art^-1|^(1-s))`, so the weight
    /// profile is negated; labels get `"∨"` appended.
    pub fn dual(&self) -> SymbolicWD {
        let terms = self.terms().map(|(k, m)| {
            let atom = AtomRep {
                label: format!("{}∨", k.atom.label),
                dim: k.atom.dim,
                weight: -&k.atom.weight + q_int(2 * (k.s as i64 - 1)),
            };
            (IndecompWD { atom, s: k.s }, m)
        });
        SymbolicWD::from_terms(self.q, terms)
    }

    /// Weights of the underlying `W_K`-semisimplification.
    pub fn weight_profile(&self) -> WeightProfile {
        let mut out = WeightProfile::new();
        for (k, m) in self.terms() {
            for w in k.constituent_weights() {
                *out.entry(w).or_insert(0) += m * k.atom.dim as u64;
            }
        }
        out
    }

    /// Whether every assigned Frobenius eigenvalue is an `ell`-adic unit.
    ///
    /// Twists by `|Art^-1|` multiply by `q^-1`, an `ell`-adic unit once `ell` does
    /// not divide `q`, so only the atoms' own eigenvalues matter.
    pub fn is_bounded(&self, eigenvalues: &BTreeMap<String, Q>, ell: u64) -> Result<bool> {
        if !is_prime(ell) || self.q.get() % ell == 0 {
            return Err(Error::BadEll {
                ell,
                q: self.q.get(),
            });
        }
        let ell = BigInt::from(ell);
        let mut bounded = true;
        for (k, _) in self.terms() {
            let alpha = eigenvalues
                .get(&k.atom.label)
                .ok_or_else(|| Error::MissingEigenvalue(k.atom.label.clone()))?;
            if alpha.is_zero() {
                return Err(Error::ZeroEigenvalue(k.atom.label.clone()));
            }
            let unit = !alpha.numer().is_multiple_of(&ell) && !alpha.denom().is_multiple_of(&ell);
            bounded &= unit;
        }
        Ok(bounded)
    }

    /// `[self] - [other]` in the Grothendieck group.
    pub fn virtual_difference(&self, other: &SymbolicWD) -> Result<VirtualWD> {
        VirtualWD::from(self).sub(&VirtualWD::from(other))
    }

    /// Common purity center of all terms, if there is one. `None` for the empty
    /// representation as well.
    pub fn common_center(&self) -> Option<Q> {
        let mut centers = self.terms.keys().map(IndecompWD::center);
        let first = centers.next()?;
        centers.all(|c| c == first).then_some(first)
    }

    pub fn to_json(&self) -> WdJson {
        WdJson {
            q: self.q.get(),
            terms: self
                .terms()
                .map(|(k, m)| TermJson::new(k, m as i64))
                .collect(),
        }
    }

    pub fn from_json(raw: &WdJson) -> Result<SymbolicWD> {
        let q = ResidueCard::new(raw.q)?;
        let mut out = SymbolicWD::empty(q);
        for t in &raw.terms {
            if t.mult < 0 {
                return Err(Error::Parse(format!(
                    "negative multiplicity {} in a representation",
                    t.mult
                )));
            }
            out.add_term(t.key()?, t.mult as u64);
        }
        Ok(out)
    }
}

impl fmt::Display for SymbolicWD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(k, m)| {
                if m == 1 {
                    k.to_string()
                } else {
                    format!("{k}x{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Element of the Grothendieck group: integer combination of indecomposables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualWD {
    q: ResidueCard,
    terms: BTreeMap<IndecompWD, i64>,
}

impl From<&SymbolicWD> for VirtualWD {
    fn from(a: &SymbolicWD) -> Self {
        VirtualWD {
            q: a.q,
            terms: a.terms().map(|(k, m)| (k.clone(), m as i64)).collect(),
        }
    }
}

impl VirtualWD {
    pub fn zero(q: ResidueCard) -> Self {
        VirtualWD {
            q,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(q: ResidueCard, terms: impl IntoIterator<Item = (IndecompWD, i64)>) -> Self {
        let mut out = VirtualWD::zero(q);
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, key: IndecompWD, coeff: i64) {
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn q(&self) -> ResidueCard {
        self.q
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndecompWD, i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn coefficient(&self, key: &IndecompWD) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &VirtualWD) -> Result<VirtualWD> {
        if self.q != other.q {
            return Err(Error::QMismatch(self.q.get(), other.q.get()));
        }
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> VirtualWD {
        VirtualWD {
            q: self.q,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &VirtualWD) -> Result<VirtualWD> {
        self.add(&other.neg())
    }

    /// Signed virtual dimension.
    pub fn dim(&self) -> i64 {
        self.terms().map(|(k, c)| c * k.dim() as i64).sum()
    }

    /// The effective representation, if every coefficient is non-negative.
    pub fn to_effective(&self) -> Option<SymbolicWD> {
        if self.terms.values().any(|c| c.is_negative()) {
            return None;
        }
        Some(SymbolicWD::from_terms(
            self.q,
            self.terms().map(|(k, c)| (k.clone(), c as u64)),
        ))
    }

    pub fn to_json(&self) -> WdJson {
        WdJson {
            q: self.q.get(),
            terms: self.terms().map(|(k, c)| TermJson::new(k, c)).collect(),
        }
    }

    pub fn from_json(raw: &WdJson) -> Result<VirtualWD> {
        let q = ResidueCard::new(raw.q)?;
        let mut out = VirtualWD::zero(q);
        for t in &raw.terms {
            out.add_term(t.key()?, t.mult);
        }
        Ok(out)
    }
}

/// Wire form shared by [`SymbolicWD`] and [`VirtualWD`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WdJson {
    pub q: u64,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub label: String,
    pub dim: u32,
    #[serde(with = "serde_q")]
    pub weight: Q,
    pub s: u32,
    pub mult: i64,
}

impl TermJson {
    fn new(k: &IndecompWD, mult: i64) -> Self {
        TermJson {
            label: k.atom.label.clone(),
            dim: k.atom.dim,
            weight: k.atom.weight.clone(),
            s: k.s,
            mult,
        }
    }

    fn key(&self) -> Result<IndecompWD> {
        IndecompWD::new(
            AtomRep::new(self.label.clone(), self.dim, self.weight.clone())?,
            self.s,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;

    fn q4() -> ResidueCard {
        ResidueCard::new(4).unwrap()
    }

    fn sp(label: &str, w: i64, s: u32) -> SymbolicWD {
        SymbolicWD::sp(AtomRep::line(label, w), s, q4()).unwrap()
    }

    fn profile(pairs: &[(i64, u64)]) -> WeightProfile {
        pairs.iter().map(|&(w, m)| (q_int(w), m)).collect()
    }

    #[test]
    fn sp_profiles_and_centers() {
        let a = sp("X", 0, 1);
        assert_eq!(a.weight_profile(), profile(&[(0, 1)]));
        assert_eq!(a.common_center(), Some(q_int(0)));

        let b = sp("X", 0, 2);
        assert_eq!(b.weight_profile(), profile(&[(0, 1), (-2, 1)]));
        assert_eq!(b.common_center(), Some(q_int(-1)));

        let c = sp("X", 2, 3);
        assert_eq!(c.weight_profile(), profile(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(c.common_center(), Some(q_int(0)));

        let d = sp("X", 0, 3);
        assert_eq!(d.weight_profile(), profile(&[(0, 1), (-2, 1), (-4, 1)]));
        assert_eq!(
            SymbolicWD::empty(q4()).weight_profile(),
            WeightProfile::new()
        );
    }

    #[test]
    fn sp_rejects_zero_length() {
        assert_eq!(
            SymbolicWD::sp(AtomRep::line("X", 0), 0, q4()),
            Err(Error::ZeroLength)
        );
        assert!(ResidueCard::new(1).is_err());
    }

    #[test]
    fn direct_sum_merges() {
        let x = sp("X", 0, 2);
        assert_eq!(x.direct_sum(&SymbolicWD::empty(q4())).unwrap(), x);
        let doubled = x.direct_sum(&x).unwrap();
        assert_eq!(doubled.num_terms(), 1);
        assert_eq!(doubled.terms().next().unwrap().1, 2);
        let mixed = sp("X", 0, 1).direct_sum(&sp("X", 1, 2)).unwrap();
        assert_eq!(mixed.num_terms(), 2);
        assert_eq!(mixed.dim(), 3);
        let other_q =
            SymbolicWD::sp(AtomRep::line("X", 0), 1, ResidueCard::new(9).unwrap()).unwrap();
        assert_eq!(x.direct_sum(&other_q), Err(Error::QMismatch(4, 9)));
    }

    #[test]
    fn twists_shift_weights() {
        let x = sp("X", 0, 2);
        assert_eq!(x.unramified_twist(&q_int(0), ""), x);
        let up = x.unramified_twist(&q_int(2), "(-1)");
        assert_eq!(up.common_center(), Some(q_int(1)));
        let down = x.unramified_twist(&q_int(-2), "|Art|");
        assert_eq!(down.weight_profile(), profile(&[(-2, 1), (-4, 1)]));
        let half = x.unramified_twist(&q_frac(1, 2), "h");
        assert_eq!(half.common_center(), Some(q_frac(-1, 2)));
    }

    #[test]
    fn restriction_changes_q_only() {
        let x = sp("X", 0, 2);
        assert_eq!(x.restrict(1).unwrap(), x);
        let r = x.restrict(2).unwrap();
        assert_eq!(r.q().get(), 16);
        assert_eq!(r.common_center(), Some(q_int(-1)));
        assert!(x.restrict(0).is_err());
        assert!(x.restrict(64).is_err());
    }

    #[test]
    fn dual_negates_profile() {
        let d = sp("X", 3, 1).dual();
        assert_eq!(d.terms().next().unwrap().0.atom.weight, q_int(-3));
        let x = sp("X", 1, 3).direct_sum(&sp("Y", 0, 2)).unwrap();
        let neg: WeightProfile = x
            .weight_profile()
            .into_iter()
            .map(|(w, m)| (-w, m))
            .collect();
        assert_eq!(x.dual().weight_profile(), neg);
        assert_eq!(x.dual().dual().weight_profile(), x.weight_profile());
    }

    #[test]
    fn boundedness() {
        let x = sp("X", 0, 2);
        let assign = |v: Q| BTreeMap::from([("X".to_string(), v)]);
        assert_eq!(x.is_bounded(&assign(q_int(2)), 3), Ok(true));
        assert_eq!(x.is_bounded(&assign(q_int(3)), 3), Ok(false));
        assert_eq!(x.is_bounded(&assign(q_frac(1, 5)), 5), Ok(false));
        assert!(matches!(
            x.is_bounded(&BTreeMap::new(), 3),
            Err(Error::MissingEigenvalue(_))
        ));
        assert!(matches!(
            x.is_bounded(&assign(q_int(2)), 2),
            Err(Error::BadEll { .. })
        ));
        assert!(matches!(
            x.is_bounded(&assign(q_int(2)), 9),
            Err(Error::BadEll { .. })
        ));
        assert!(matches!(
            x.is_bounded(&assign(q_int(0)), 3),
            Err(Error::ZeroEigenvalue(_))
        ));
    }

    #[test]
    fn virtual_arithmetic() {
        let x = sp("X", 0, 2);
        assert!(x.virtual_difference(&x).unwrap().is_zero());
        let two = SymbolicWD::from_terms(
            q4(),
            [(IndecompWD::new(AtomRep::line("X", 0), 1).unwrap(), 2)],
        );
        let one = sp("X", 0, 1);
        let diff = two.virtual_difference(&one).unwrap();
        assert_eq!(diff.to_effective().unwrap(), one);
        let neg = one.virtual_difference(&two).unwrap();
        assert_eq!(neg.dim(), -1);
        assert!(neg.to_effective().is_none());
    }

    #[test]
    fn json_is_canonical() {
        let a = sp("B", 1, 2).direct_sum(&sp("A", 0, 1)).unwrap();
        let b = sp("A", 0, 1).direct_sum(&sp("B", 1, 2)).unwrap();
        let ja = serde_json::to_string(&a.to_json()).unwrap();
        assert_eq!(ja, serde_json::to_string(&b.to_json()).unwrap());
        assert_eq!(
            ja,
            r#"{"q":4,"terms":[{"label":"A","dim":1,"weight":"0","s":1,"mult":1},{"label":"B","dim":1,"weight":"1","s":2,"mult":1}]}"#
        );
        let back: WdJson = serde_json::from_str(&ja).unwrap();
        assert_eq!(SymbolicWD::from_json(&back).unwrap(), a);
        let bad = r#"{"q":4,"terms":[{"label":"A","dim":1,"weight":0.5,"s":1,"mult":1}]}"#;
        assert!(serde_json::from_str::<WdJson>(bad).is_err());
    }
}
