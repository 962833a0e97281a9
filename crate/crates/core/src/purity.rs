//! Weight filtrations and purity.
//!
//! A representation is mixed when it has an increasing filtration whose
//! graded pieces are strictly pure, and pure of weight `k` when moreover
//! `N^i : gr_{k+i} -> gr_{k-i}` is an isomorphism for every `i > 0`.
//! For a symbolic representation this says every `Sp_s(X)` is centered at
//! `k`, i.e. `weight(X) - (s - 1) = k`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::matrix_wd::MatrixWD;
use crate::rational::{fmt_q, is_integer, q_int, to_i64, Q};
use crate::wd::{AtomRep, IndecompWD, SymbolicWD, VirtualWD, WeightProfile};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The zero representation; pure of every weight.
    VacuouslyPure,
    StrictlyPure(Q),
    Pure(Q),
    /// Mixed but not pure.
    Mixed,
    /// Some Frobenius eigenvalue has no weight.
    NotMixed,
}

impl Verdict {
    pub fn is_pure(&self) -> bool {
        matches!(
            self,
            Verdict::VacuouslyPure | Verdict::StrictlyPure(_) | Verdict::Pure(_)
        )
    }

    /// Whether the representation is pure of weight `k`.
    pub fn is_pure_of(&self, k: &Q) -> bool {
        match self {
            Verdict::VacuouslyPure => true,
            Verdict::StrictlyPure(c) | Verdict::Pure(c) => c == k,
            _ => false,
        }
    }

    pub fn center(&self) -> Option<&Q> {
        match self {
            Verdict::StrictlyPure(c) | Verdict::Pure(c) => Some(c),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::VacuouslyPure => "VacuouslyPure",
            Verdict::StrictlyPure(_) => "StrictlyPure",
            Verdict::Pure(_) => "Pure",
            Verdict::Mixed => "Mixed",
            Verdict::NotMixed => "NotMixed",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.center() {
            Some(c) => write!(f, "{}({})", self.name(), fmt_q(c)),
            None => write!(f, "{}", self.name()),
        }
    }
}

/// Purity verdicts for both backends.
pub trait Classify {
    fn classify(&self) -> Verdict;
}

impl Classify for SymbolicWD {
    fn classify(&self) -> Verdict {
        if self.is_empty() {
            return Verdict::VacuouslyPure;
        }
        let profile = self.weight_profile();
        if self.terms().all(|(k, _)| k.s == 1) && profile.len() == 1 {
            return Verdict::StrictlyPure(profile.keys().next().unwrap().clone());
        }
        match self.common_center() {
            Some(k) => Verdict::Pure(k),
            None => Verdict::Mixed,
        }
    }
}

impl Classify for MatrixWD {
    fn classify(&self) -> Verdict {
        if self.dim() == 0 {
            return Verdict::VacuouslyPure;
        }
        let Ok(weights) = self.eigen_weights() else {
            return Verdict::NotMixed;
        };
        let Ok(fil) = weight_filtration(self) else {
            return Verdict::NotMixed;
        };
        let lo = weights.keys().next().unwrap().clone();
        let hi = weights.keys().next_back().unwrap().clone();
        if lo == hi && self.nilp().is_zero() {
            return Verdict::StrictlyPure(lo);
        }
        let center = (&lo + &hi) / q_int(2);
        if !is_integer(&center) {
            return Verdict::Mixed;
        }
        let k = to_i64(&center).expect("small weight");
        let top = to_i64(&hi).expect("small weight") - k;
        let n = self.dim();
        for i in 1..=top {
            let source = fil.fil_basis(&q_int(k + i), n);
            let source_below = fil.fil_basis(&q_int(k + i - 1), n);
            let target = fil.fil_basis(&q_int(k - i), n);
            let target_below = fil.fil_basis(&q_int(k - i - 1), n);
            let gr_source = source.cols() - source_below.cols();
            let gr_target = target.cols() - target_below.cols();
            if gr_source != gr_target {
                return Verdict::Mixed;
            }
            // rank of the induced map Fil_{k+i} -> Fil_{k-i} / Fil_{k-i-1}
            let image = self.nilp().pow(i as usize).mul(&source);
            let induced = target_below.hstack(&image).rank() - target_below.cols();
            if induced != gr_source {
                return Verdict::Mixed;
            }
        }
        Verdict::Pure(center)
    }
}

/// Increasing weight filtration; one jump per weight that occurs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFiltration {
    /// `(i, dim Fil_i)` at each weight `i`, ascending.
    pub jumps: Vec<(Q, usize)>,
    /// Basis of `Fil_i` at each jump (matrix backend only).
    pub bases: Option<Vec<RatMatrix>>,
}

impl WeightFiltration {
    /// `dim Fil_i` for an arbitrary index.
    pub fn dim_at(&self, i: &Q) -> usize {
        self.jumps
            .iter()
            .take_while(|(w, _)| w <= i)
            .last()
            .map_or(0, |(_, d)| *d)
    }

    /// Basis of `Fil_i` for an arbitrary index; `n` is the ambient dimension.
    pub fn fil_basis(&self, i: &Q, n: usize) -> RatMatrix {
        let bases = self.bases.as_ref().expect("filtration has no bases");
        self.jumps
            .iter()
            .zip(bases)
            .take_while(|((w, _), _)| w <= i)
            .last()
            .map_or_else(|| RatMatrix::zeros(n, 0), |(_, b)| b.clone())
    }
}

/// `Fil_i` is the span of the generalized eigenspaces of weight `<= i`. The
/// inclusion `N(Fil_i) ⊆ Fil_{i-2}` is checked.
pub fn weight_filtration(m: &MatrixWD) -> Result<WeightFiltration> {
    let n = m.dim();
    let mut by_weight: BTreeMap<i64, Vec<Q>> = BTreeMap::new();
    for (alpha, _) in m.eigenvalues() {
        by_weight
            .entry(m.eigenvalue_weight(alpha)?)
            .or_default()
            .push(alpha.clone());
    }
    let mut jumps = Vec::new();
    let mut bases = Vec::new();
    let mut current = RatMatrix::zeros(n, 0);
    for (w, alphas) in &by_weight {
        for alpha in alphas {
            current = current.hstack(&m.generalized_eigenspace(alpha));
        }
        jumps.push((q_int(*w), current.cols()));
        bases.push(current.clone());
    }
    let fil = WeightFiltration {
        jumps,
        bases: Some(bases),
    };
    for (w, _) in &fil.jumps {
        let source = fil.fil_basis(w, n);
        let target = fil.fil_basis(&(w - q_int(2)), n);
        if !target.spans(&m.nilp().mul(&source)) {
            return Err(Error::MonodromyViolation { index: fmt_q(w) });
        }
    }
    Ok(fil)
}

/// Weight filtration of a symbolic representation (dimensions only).
pub fn symbolic_weight_filtration(a: &SymbolicWD) -> WeightFiltration {
    let mut total = 0usize;
    let jumps = a
        .weight_profile()
        .into_iter()
        .map(|(w, m)| {
            total += m as usize;
            (w, total)
        })
        .collect();
    WeightFiltration { jumps, bases: None }
}

/// One `i >= 0` of the primitive decomposition `V = ⊕_i ⊕_{j<=i} N^j V(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitivePart {
    pub i: u32,
    /// `dim V_i`, the weight `k + i` part.
    pub dim_graded: u64,
    /// `dim V(i) = dim ker(N^(i+1) : V_i -> V_(-i-2))`.
    pub dim_primitive: u64,
    pub basis: Option<RatMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveDecomposition {
    pub center: Q,
    pub parts: Vec<PrimitivePart>,
}

impl PrimitiveDecomposition {
    pub fn primitive_dim(&self, i: u32) -> u64 {
        self.parts
            .iter()
            .find(|p| p.i == i)
            .map_or(0, |p| p.dim_primitive)
    }
}

fn require_center(verdict: &Verdict, k: &Q) -> Result<()> {
    if verdict.is_pure_of(k) {
        Ok(())
    } else {
        Err(Error::NotPure)
    }
}

/// Label of the constituent `X |Art^-1|^j` of `Sp_s(X)`.
fn constituent_label(label: &str, j: u32) -> String {
    if j == 0 {
        label.to_string()
    } else {
        format!("{label}|Art^-1|^{j}")
    }
}

/// `W_K`-constituents of weight `weight`, as strictly pure atoms tagged by twist depth.
fn graded_constituents(a: &SymbolicWD, weight: &Q, extra_twist: u32) -> VirtualWD {
    let mut terms = Vec::new();
    for (key, mult) in a.terms() {
        for j in 0..key.s {
            let w = &key.atom.weight - q_int(2 * j as i64);
            if &w == weight {
                let atom = AtomRep {
                    label: constituent_label(&key.atom.label, j + extra_twist),
                    dim: key.atom.dim,
                    weight: w - q_int(2 * extra_twist as i64),
                };
                terms.push((IndecompWD { atom, s: 1 }, mult as i64));
            }
        }
    }
    VirtualWD::from_terms(a.q(), terms)
}

/// Symbolic primitive decomposition relative to the center `k`. Also checks
/// `[V(i)] = [V_i] - [V_(i+2) ⊗ |Art^-1|]` in the Grothendieck group.
pub fn primitive_decomposition(a: &SymbolicWD, k: &Q) -> Result<PrimitiveDecomposition> {
    require_center(&a.classify(), k)?;
    let profile = a.weight_profile();
    let top = a.terms().map(|(key, _)| key.s - 1).max().unwrap_or(0);
    let mut parts = Vec::new();
    for i in 0..=top {
        let weight = k + q_int(i as i64);
        let dim_graded = profile.get(&weight).copied().unwrap_or(0);
        let above = profile
            .get(&(k + q_int(i as i64 + 2)))
            .copied()
            .unwrap_or(0);
        let dim_primitive: u64 = a
            .terms()
            .filter(|(key, _)| key.s == i + 1)
            .map(|(key, m)| m * key.atom.dim as u64)
            .sum();
        if dim_primitive + above != dim_graded {
            return Err(Error::InternalMismatch(format!(
                "dim V({i}) = {dim_primitive} but dim V_{i} - dim V_{} = {dim_graded} - {above}",
                i + 2
            )));
        }
        let primitive = VirtualWD::from_terms(
            a.q(),
            a.terms().filter(|(key, _)| key.s == i + 1).map(|(key, m)| {
                let atom = AtomRep {
                    label: key.atom.label.clone(),
                    ..key.atom.clone()
                };
                (IndecompWD { atom, s: 1 }, m as i64)
            }),
        );
        let graded = graded_constituents(a, &weight, 0);
        let shifted = graded_constituents(a, &(k + q_int(i as i64 + 2)), 1);
        if graded.sub(&shifted)? != primitive {
            return Err(Error::InternalMismatch(format!(
                "virtual identity fails for V({i})"
            )));
        }
        parts.push(PrimitivePart {
            i,
            dim_graded,
            dim_primitive,
            basis: None,
        });
    }
    Ok(PrimitiveDecomposition {
        center: k.clone(),
        parts,
    })
}

/// Basis of the weight `w` part (sum of generalized eigenspaces of that weight).
fn weight_space(m: &MatrixWD, w: i64) -> Result<RatMatrix> {
    let mut basis = RatMatrix::zeros(m.dim(), 0);
    for (alpha, _) in m.eigenvalues() {
        if m.eigenvalue_weight(alpha)? == w {
            basis = basis.hstack(&m.generalized_eigenspace(alpha));
        }
    }
    Ok(basis)
}

/// Matrix primitive decomposition with explicit bases of each `V(i)`.
pub fn primitive_decomposition_matrix(m: &MatrixWD, k: &Q) -> Result<PrimitiveDecomposition> {
    require_center(&m.classify(), k)?;
    let n = m.dim();
    let k = to_i64(k).ok_or(Error::NotPure)?;
    let top = m
        .eigen_weights()?
        .keys()
        .next_back()
        .map_or(0, |w| (to_i64(w).unwrap() - k).max(0));
    let mut parts = Vec::new();
    let mut spanning = RatMatrix::zeros(n, 0);
    for i in 0..=top {
        let graded = weight_space(m, k + i)?;
        let above = weight_space(m, k + i + 2)?;
        let basis = if graded.cols() == 0 {
            graded.clone()
        } else {
            let power = m.nilp().pow(i as usize + 1);
            graded.mul(&power.mul(&graded).kernel())
        };
        if basis.cols() + above.cols() != graded.cols() {
            return Err(Error::InternalMismatch(format!(
                "dimension identity fails for V({i})"
            )));
        }
        for j in 0..=i {
            spanning = spanning.hstack(&m.nilp().pow(j as usize).mul(&basis));
        }
        parts.push(PrimitivePart {
            i: i as u32,
            dim_graded: graded.cols() as u64,
            dim_primitive: basis.cols() as u64,
            basis: Some(basis),
        });
    }
    if spanning.cols() != n || spanning.rank() != n {
        return Err(Error::InternalMismatch(
            "N^j V(i) do not form a direct sum decomposition of V".into(),
        ));
    }
    Ok(PrimitiveDecomposition {
        center: q_int(k),
        parts,
    })
}

/// Outcome of reconstructing `N` from the semisimple Frobenius action alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reconstruction<T> {
    Pure(T),
    NoPureN,
}

impl<T> Reconstruction<T> {
    pub fn into_option(self) -> Option<T> {
        match self {
            Reconstruction::Pure(t) => Some(t),
            Reconstruction::NoPureN => None,
        }
    }
}

/// Forgets `N`: every `Sp_s(X)` becomes the constituents `X |Art^-1|^j`. The
/// constituents keep the label of `X`, so atoms sharing `(label, dim)` are
/// read as unramified twists of one another.
pub fn strip_monodromy(a: &SymbolicWD) -> SymbolicWD {
    let terms = a.terms().flat_map(|(key, m)| {
        key.constituent_weights()
            .map(|w| {
                let atom = AtomRep {
                    label: key.atom.label.clone(),
                    dim: key.atom.dim,
                    weight: w,
                };
                (IndecompWD { atom, s: 1 }, m)
            })
            .collect::<Vec<_>>()
    });
    SymbolicWD::from_terms(a.q(), terms)
}

/// Peels centered strings off a weight histogram, top weight first. Returns
/// `(top weight, count)` per string start, or `None` if the histogram is not
/// a sum of strings centered at `k`.
fn peel_strings(hist: &BTreeMap<Q, u64>, k: &Q) -> Option<Vec<(Q, u64)>> {
    let mut rest: BTreeMap<Q, i64> = hist.iter().map(|(w, &c)| (w.clone(), c as i64)).collect();
    let mut out = Vec::new();
    let weights: Vec<Q> = rest.keys().rev().cloned().collect();
    for t in weights {
        let count = rest[&t];
        if count == 0 {
            continue;
        }
        let offset = &t - k;
        if count < 0 || offset < Q::zero() || !is_integer(&offset) {
            return None;
        }
        let len = to_i64(&offset)? + 1;
        for j in 0..len {
            let entry = rest.entry(&t - q_int(2 * j)).or_insert(0);
            *entry -= count;
            if *entry < 0 {
                return None;
            }
        }
        out.push((t, count as u64));
    }
    Some(out)
}

fn global_center<'a>(weights: impl Iterator<Item = &'a Q>) -> Option<Q> {
    let mut lo: Option<&Q> = None;
    let mut hi: Option<&Q> = None;
    for w in weights {
        lo = Some(lo.map_or(w, |l| l.min(w)));
        hi = Some(hi.map_or(w, |h| h.max(w)));
    }
    Some((lo? + hi?) / q_int(2))
}

/// The unique pure `N` on a symbolic `W_K`-representation, if one exists.
/// Any `N` already present is stripped first.
pub fn reconstruct_monodromy(a: &SymbolicWD) -> Reconstruction<SymbolicWD> {
    let stripped = strip_monodromy(a);
    let mut families: BTreeMap<(String, u32), BTreeMap<Q, u64>> = BTreeMap::new();
    for (key, m) in stripped.terms() {
        *families
            .entry((key.atom.label.clone(), key.atom.dim))
            .or_default()
            .entry(key.atom.weight.clone())
            .or_insert(0) += m;
    }
    let Some(k) = global_center(stripped.terms().map(|(key, _)| &key.atom.weight)) else {
        return Reconstruction::Pure(stripped);
    };
    let mut terms = Vec::new();
    for ((label, dim), hist) in &families {
        let Some(strings) = peel_strings(hist, &k) else {
            return Reconstruction::NoPureN;
        };
        for (top, count) in strings {
            let s = to_i64(&(&top - &k)).unwrap() as u32 + 1;
            let atom = AtomRep {
                label: label.clone(),
                dim: *dim,
                weight: top,
            };
            terms.push((IndecompWD { atom, s }, count));
        }
    }
    Reconstruction::Pure(SymbolicWD::from_terms(a.q(), terms))
}

/// Builds the graded nilpotent on the eigenvalue chains of `m` (with `phi`
/// semisimple) realizing the given strings. `strings[c]` lists, for chain
/// `c`, `(start grade, length, count)`. Eigenvectors are consumed in basis order.
pub fn nilpotent_from_strings(
    m: &MatrixWD,
    chains: &[Vec<Q>],
    strings: &[Vec<(usize, usize, u64)>],
) -> Result<RatMatrix> {
    let n = m.dim();
    let mut basis_cols: Vec<Vec<Q>> = Vec::with_capacity(n);
    let mut std_nilp_edges: Vec<(usize, usize)> = Vec::new();
    for (chain, chain_strings) in chains.iter().zip(strings) {
        let spaces: Vec<Vec<Vec<Q>>> = chain
            .iter()
            .map(|a| m.generalized_eigenspace(a).columns())
            .collect();
        let mut next = vec![0usize; chain.len()];
        for &(start, len, count) in chain_strings {
            for _ in 0..count {
                for g in start..start + len {
                    let col = spaces
                        .get(g)
                        .and_then(|s| s.get(next[g]))
                        .ok_or_else(|| Error::InternalMismatch("string exceeds eigenspace".into()))?
                        .clone();
                    next[g] += 1;
                    if g > start {
                        std_nilp_edges.push((basis_cols.len() - 1, basis_cols.len()));
                    }
                    basis_cols.push(col);
                }
            }
        }
    }
    if basis_cols.len() != n {
        return Err(Error::InternalMismatch(
            "strings do not cover the space".into(),
        ));
    }
    let basis = RatMatrix::from_columns(n, &basis_cols);
    let mut std_nilp = RatMatrix::zeros(n, n);
    for (from, to) in std_nilp_edges {
        std_nilp[(to, from)] = Q::one();
    }
    let inv = basis.inverse().ok_or(Error::NotFrobeniusSemisimple)?;
    Ok(basis.mul(&std_nilp).mul(&inv))
}

/// Matrix version: keeps the semisimple part of `phi`, discards `N`, and
/// returns the unique pure completion in the standard model.
pub fn reconstruct_monodromy_matrix(m: &MatrixWD) -> Result<Reconstruction<MatrixWD>> {
    let ss = m.frobenius_semisimplify()?;
    let n = ss.dim();
    let bare = MatrixWD::new(ss.q(), ss.phi().clone(), RatMatrix::zeros(n, n))?;
    if n == 0 {
        return Ok(Reconstruction::Pure(bare));
    }
    let chains = bare.eigenvalue_chains()?;
    let mut all_weights = Vec::new();
    for chain in &chains {
        for alpha in chain {
            if bare.generalized_eigenspace(alpha).cols() > 0 {
                all_weights.push(q_int(bare.eigenvalue_weight(alpha)?));
            }
        }
    }
    let k = global_center(all_weights.iter()).expect("nonempty");
    let mut strings = Vec::new();
    for chain in &chains {
        let mut hist = BTreeMap::new();
        for alpha in chain {
            let d = bare.generalized_eigenspace(alpha).cols() as u64;
            if d > 0 {
                hist.insert(q_int(bare.eigenvalue_weight(alpha)?), d);
            }
        }
        let Some(peeled) = peel_strings(&hist, &k) else {
            return Ok(Reconstruction::NoPureN);
        };
        let top_weight = bare.eigenvalue_weight(&chain[0])?;
        let chain_strings = peeled
            .into_iter()
            .map(|(t, count)| {
                let t = to_i64(&t).unwrap();
                let start = ((top_weight - t) / 2) as usize;
                let len = (t - to_i64(&k).unwrap() + 1) as usize;
                (start, len, count)
            })
            .collect();
        strings.push(chain_strings);
    }
    let nilp = nilpotent_from_strings(&bare, &chains, &strings)?;
    Ok(Reconstruction::Pure(MatrixWD::new(
        bare.q(),
        bare.phi().clone(),
        nilp,
    )?))
}

/// The three equivalent conditions on a subrepresentation `W` of a pure `V`,
/// each decided on its own route, plus the complement when it exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandReport {
    pub center: Q,
    pub sub_dim: u64,
    /// Weight of the top exterior power of `W`.
    pub exterior_weight: Q,
    /// `∧^dim W W` is pure of weight `k dim W`.
    pub exterior_pure: bool,
    /// `W` is pure of weight `k`.
    pub sub_pure: bool,
    /// `V ≅ W ⊕ V/W`, which for finite length modules means `W` is a summand.
    pub splits: bool,
    /// `k_j = center(Sp_j) - k` for the indecomposables of `W`; all are `<= 0`.
    pub deviations: Vec<(IndecompWD, Q)>,
    pub verdict: SummandVerdict,
}

impl SummandReport {
    pub fn conditions_agree(&self) -> bool {
        self.exterior_pure == self.sub_pure && self.sub_pure == self.splits
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SummandVerdict {
    SummandWithComplement(RatMatrix),
    NotPure,
}

fn pure_center(v: &MatrixWD) -> Result<Q> {
    match v.classify() {
        Verdict::StrictlyPure(k) | Verdict::Pure(k) => Ok(k),
        _ => Err(Error::NotPure),
    }
}

fn weight_sum(profile: &WeightProfile) -> Q {
    profile.iter().map(|(w, m)| w * q_int(*m as i64)).sum()
}

/// Intersection of two column spaces.
fn intersect(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    if a.cols() == 0 || b.cols() == 0 {
        return RatMatrix::zeros(a.rows(), 0);
    }
    let kernel = a.hstack(&b.scale(&-Q::one())).kernel();
    let coeffs = RatMatrix::from_columns(
        a.cols(),
        &kernel
            .columns()
            .iter()
            .map(|c| c[..a.cols()].to_vec())
            .collect::<Vec<_>>(),
    );
    a.mul(&coeffs).column_space()
}

/// Extends `sub` (inside the span of `ambient`) by columns of `ambient`.
fn complement_within(sub: &RatMatrix, ambient: &RatMatrix) -> RatMatrix {
    let mut chosen = RatMatrix::zeros(ambient.rows(), 0);
    let mut current = sub.clone();
    let mut rank = current.rank();
    for col in ambient.columns() {
        let c = RatMatrix::from_columns(ambient.rows(), &[col]);
        let extended = current.hstack(&c);
        let r = extended.rank();
        if r > rank {
            rank = r;
            current = extended;
            chosen = chosen.hstack(&c);
        }
    }
    chosen
}

/// Decides whether the `phi`- and `N`-stable subspace spanned by the columns of
/// `sub` is a direct summand of the Frobenius-semisimple pure `v`.
pub fn summand_test(v: &MatrixWD, sub: &RatMatrix) -> Result<SummandReport> {
    if !v.is_semisimple() {
        return Err(Error::NotFrobeniusSemisimple);
    }
    let k = pure_center(v).or_else(|e| if v.dim() == 0 { Ok(Q::zero()) } else { Err(e) })?;
    let n = v.dim();
    if sub.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "subspace vectors have length {}, expected {n}",
            sub.rows()
        )));
    }
    let sub = sub.column_space();
    if !sub.spans(&v.phi().mul(&sub)) || !sub.spans(&v.nilp().mul(&sub)) {
        return Err(Error::NotSubrepresentation);
    }
    let w = v.restrict_to(&sub)?;
    let dim_w = w.dim() as u64;

    let exterior_weight = weight_sum(&w.eigen_weights()?);
    let exterior_pure = exterior_weight == &k * q_int(dim_w as i64);

    let sub_pure = w.classify().is_pure_of(&k);

    let (quotient, _) = v.quotient_by(&sub)?;
    let splits = w.to_symbolic()?.direct_sum(&quotient.to_symbolic()?)? == v.to_symbolic()?;

    let deviations = w
        .to_symbolic()?
        .terms()
        .map(|(key, _)| (key.clone(), key.center() - &k))
        .collect();

    let verdict = if sub_pure {
        let complement = complement_from_primitives(v, &sub, &k)?;
        SummandVerdict::SummandWithComplement(complement)
    } else {
        SummandVerdict::NotPure
    };
    Ok(SummandReport {
        center: k,
        sub_dim: dim_w,
        exterior_weight,
        exterior_pure,
        sub_pure,
        splits,
        deviations,
        verdict,
    })
}

/// `V(i) = W(i) ⊕ U(i)` as `W_K`-modules, `U = ⊕ N^j U(i)`.
fn complement_from_primitives(v: &MatrixWD, sub: &RatMatrix, k: &Q) -> Result<RatMatrix> {
    let n = v.dim();
    if n == 0 {
        return Ok(RatMatrix::zeros(0, 0));
    }
    let prim = primitive_decomposition_matrix(v, k)?;
    let mut complement = RatMatrix::zeros(n, 0);
    for part in &prim.parts {
        let vi = part.basis.as_ref().expect("matrix decomposition has bases");
        if vi.cols() == 0 {
            continue;
        }
        let mut ui = RatMatrix::zeros(n, 0);
        for (alpha, _) in v.eigenvalues() {
            let eigen = v.generalized_eigenspace(alpha);
            let vi_alpha = intersect(vi, &eigen);
            if vi_alpha.cols() == 0 {
                continue;
            }
            let wi_alpha = intersect(&vi_alpha, sub);
            ui = ui.hstack(&complement_within(&wi_alpha, &vi_alpha));
        }
        for j in 0..=part.i {
            complement = complement.hstack(&v.nilp().pow(j as usize).mul(&ui));
        }
    }
    let total = sub.hstack(&complement);
    let stable =
        complement.spans(&v.phi().mul(&complement)) && complement.spans(&v.nilp().mul(&complement));
    if total.cols() != n || total.rank() != n || !stable {
        return Err(Error::InternalMismatch(
            "constructed complement is not a WD complement".into(),
        ));
    }
    Ok(complement)
}

/// A symbolic subobject: `count` copies of the bottom `keep` constituents of
/// `Sp_s(X)`, which span the subrepresentation `Sp_keep(X |Art^-1|^(s-keep))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubPiece {
    pub key: IndecompWD,
    pub count: u64,
    pub keep: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicSummandReport {
    pub center: Q,
    pub sub: SymbolicWD,
    pub exterior_weight: Q,
    pub exterior_pure: bool,
    pub sub_pure: bool,
    pub splits: bool,
    pub deviations: Vec<(IndecompWD, Q)>,
    /// Complement when `W` is a summand.
    pub complement: Option<SymbolicWD>,
}

impl SymbolicSummandReport {
    pub fn conditions_agree(&self) -> bool {
        self.exterior_pure == self.sub_pure && self.sub_pure == self.splits
    }
}

pub fn summand_test_symbolic(v: &SymbolicWD, pieces: &[SubPiece]) -> Result<SymbolicSummandReport> {
    let k = match v.classify() {
        Verdict::StrictlyPure(k) | Verdict::Pure(k) => k,
        Verdict::VacuouslyPure => Q::zero(),
        _ => return Err(Error::NotPure),
    };
    let mut used: BTreeMap<&IndecompWD, u64> = BTreeMap::new();
    let mut sub_terms = Vec::new();
    let mut quotient_terms = Vec::new();
    for piece in pieces {
        if piece.keep > piece.key.s {
            return Err(Error::NotSubrepresentation);
        }
        if piece.keep == 0 || piece.count == 0 {
            continue;
        }
        let total = used.entry(&piece.key).or_insert(0);
        *total += piece.count;
        if *total > v.multiplicity(&piece.key) {
            return Err(Error::NotSubrepresentation);
        }
        let shift = piece.key.s - piece.keep;
        let atom = AtomRep {
            weight: &piece.key.atom.weight - q_int(2 * shift as i64),
            ..piece.key.atom.clone()
        };
        sub_terms.push((
            IndecompWD {
                atom,
                s: piece.keep,
            },
            piece.count,
        ));
        if shift > 0 {
            quotient_terms.push((
                IndecompWD {
                    atom: piece.key.atom.clone(),
                    s: shift,
                },
                piece.count,
            ));
        }
    }
    for (key, m) in v.terms() {
        let taken = used.get(key).copied().unwrap_or(0);
        if m > taken {
            quotient_terms.push((key.clone(), m - taken));
        }
    }
    let sub = SymbolicWD::from_terms(v.q(), sub_terms);
    let quotient = SymbolicWD::from_terms(v.q(), quotient_terms);
    let dim_w = sub.dim() as i64;
    let exterior_weight = weight_sum(&sub.weight_profile());
    let exterior_pure = exterior_weight == &k * q_int(dim_w);
    let sub_pure = sub.classify().is_pure_of(&k);
    let splits = sub.direct_sum(&quotient)? == *v;
    let deviations = sub
        .terms()
        .map(|(key, _)| (key.clone(), key.center() - &k))
        .collect();
    let complement = sub_pure.then_some(quotient);
    Ok(SymbolicSummandReport {
        center: k,
        sub,
        exterior_weight,
        exterior_pure,
        sub_pure,
        splits,
        deviations,
        complement,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub j: usize,
    /// Basis of a subrepresentation mapping isomorphically onto `gr^j`.
    pub basis: RatMatrix,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiltrationSplit {
    Split(Vec<GradedPiece>),
    /// The first index, scanning from the deepest step, whose graded piece
    /// fails the top-exterior-power test.
    CriterionFails(usize),
}

/// Splits a pure `v` along a decreasing filtration `fil[0] = V ⊇ fil[1] ⊇ ...`
/// (with `(0)` implicitly after the last step) when every graded piece has top
/// exterior power of weight `k dim gr^j`.
pub fn filtration_split(v: &MatrixWD, fil: &[RatMatrix]) -> Result<FiltrationSplit> {
    if !v.is_semisimple() {
        return Err(Error::NotFrobeniusSemisimple);
    }
    let n = v.dim();
    let k = pure_center(v).or_else(|e| if n == 0 { Ok(Q::zero()) } else { Err(e) })?;
    let mut steps: Vec<RatMatrix> = Vec::with_capacity(fil.len() + 1);
    for (j, f) in fil.iter().enumerate() {
        if f.rows() != n {
            return Err(Error::DimensionMismatch(format!(
                "step {j} has vectors of length {}",
                f.rows()
            )));
        }
        let f = f.column_space();
        if !f.spans(&v.phi().mul(&f)) || !f.spans(&v.nilp().mul(&f)) {
            return Err(Error::NotSubrepresentation);
        }
        if j == 0 && f.cols() != n {
            return Err(Error::NotDecreasing(0));
        }
        if let Some(prev) = steps.last() {
            if !prev.spans(&f) {
                return Err(Error::NotDecreasing(j));
            }
        }
        steps.push(f);
    }
    if steps.is_empty() {
        steps.push(RatMatrix::identity(n));
    }
    steps.push(RatMatrix::zeros(n, 0));

    let sums: Vec<Q> = steps
        .iter()
        .map(|f| {
            Ok(if f.cols() == 0 {
                Q::zero()
            } else {
                weight_sum(&v.restrict_to(f)?.eigen_weights()?)
            })
        })
        .collect::<Result<_>>()?;
    let last = steps.len() - 2;
    for j in (0..=last).rev() {
        let gr_dim = (steps[j].cols() - steps[j + 1].cols()) as i64;
        if &sums[j] - &sums[j + 1] != &k * q_int(gr_dim) {
            return Ok(FiltrationSplit::CriterionFails(j));
        }
    }

    let mut pieces = Vec::new();
    for j in (0..=last).rev() {
        let ambient = &steps[j];
        let deeper = &steps[j + 1];
        let basis = if ambient.cols() == 0 {
            ambient.clone()
        } else {
            let restricted = v.restrict_to(ambient)?;
            let coords = ambient.solve(deeper).ok_or(Error::NotDecreasing(j + 1))?;
            let report = summand_test(&restricted, &coords)?;
            match report.verdict {
                SummandVerdict::SummandWithComplement(c) => ambient.mul(&c),
                SummandVerdict::NotPure => {
                    return Err(Error::InternalMismatch(format!(
                        "step {} is not a summand of step {j}",
                        j + 1
                    )))
                }
            }
        };
        let verdict = if basis.cols() == 0 {
            Verdict::VacuouslyPure
        } else {
            v.restrict_to(&basis)?.classify()
        };
        if !verdict.is_pure_of(&k) {
            return Err(Error::InternalMismatch(format!(
                "graded piece {j} is not pure of weight {}",
                fmt_q(&k)
            )));
        }
        pieces.push(GradedPiece { j, basis, verdict });
    }
    pieces.reverse();
    let total = pieces
        .iter()
        .fold(RatMatrix::zeros(n, 0), |acc, p| acc.hstack(&p.basis));
    if total.cols() != n || total.rank() != n {
        return Err(Error::InternalMismatch(
            "graded pieces do not span V".into(),
        ));
    }
    Ok(FiltrationSplit::Split(pieces))
}

/// Serializable purity certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: String,
    pub center: Option<String>,
    pub filtration: Vec<Jump>,
    pub primitive: Vec<PrimitiveJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases: Option<CertificateBases>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Jump {
    pub index: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitiveJson {
    pub i: u32,
    pub dim_graded: u64,
    pub dim_primitive: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateBases {
    pub filtration: Vec<Vec<Vec<String>>>,
    pub primitive: Vec<Vec<Vec<String>>>,
}

fn grid(m: &RatMatrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(fmt_q).collect())
        .collect()
}

fn jumps(f: &WeightFiltration) -> Vec<Jump> {
    f.jumps
        .iter()
        .map(|(i, d)| Jump {
            index: fmt_q(i),
            dim: *d,
        })
        .collect()
}

fn primitive_json(p: &PrimitiveDecomposition) -> Vec<PrimitiveJson> {
    p.parts
        .iter()
        .map(|x| PrimitiveJson {
            i: x.i,
            dim_graded: x.dim_graded,
            dim_primitive: x.dim_primitive,
        })
        .collect()
}

pub fn certificate_symbolic(a: &SymbolicWD) -> Result<Certificate> {
    let verdict = a.classify();
    let primitive = match verdict.center() {
        Some(k) => primitive_json(&primitive_decomposition(a, k)?),
        None => Vec::new(),
    };
    Ok(Certificate {
        verdict: verdict.name().to_string(),
        center: verdict.center().map(fmt_q),
        filtration: jumps(&symbolic_weight_filtration(a)),
        primitive,
        bases: None,
    })
}

pub fn certificate_matrix(m: &MatrixWD) -> Result<Certificate> {
    let fil = weight_filtration(m)?;
    let verdict = m.classify();
    let prim = match verdict.center() {
        Some(k) => Some(primitive_decomposition_matrix(m, k)?),
        None => None,
    };
    let bases = CertificateBases {
        filtration: fil
            .bases
            .as_ref()
            .map_or_else(Vec::new, |b| b.iter().map(grid).collect()),
        primitive: prim.as_ref().map_or_else(Vec::new, |p| {
            p.parts
                .iter()
                .filter_map(|x| x.basis.as_ref().map(grid))
                .collect()
        }),
    };
    Ok(Certificate {
        verdict: verdict.name().to_string(),
        center: verdict.center().map(fmt_q),
        filtration: jumps(&fil),
        primitive: prim.as_ref().map(primitive_json).unwrap_or_default(),
        bases: Some(bases),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;
    use crate::wd::ResidueCard;

    fn q4() -> ResidueCard {
        ResidueCard::new(4).unwrap()
    }

    fn sp(label: &str, w: i64, s: u32) -> SymbolicWD {
        SymbolicWD::sp(AtomRep::line(label, w), s, q4()).unwrap()
    }

    fn sum(parts: &[SymbolicWD]) -> SymbolicWD {
        parts
            .iter()
            .fold(SymbolicWD::empty(q4()), |acc, p| acc.direct_sum(p).unwrap())
    }

    fn col(v: &[i64]) -> RatMatrix {
        RatMatrix::from_columns(v.len(), &[v.iter().map(|&x| q_int(x)).collect()])
    }

    /// `Sp2(w=0) ⊕ Sp1(w=-1)`, which needs p0 = 2 weights: eigenvalues 1, 1/4 and 1/2.
    fn three_dim() -> MatrixWD {
        let v = sum(&[sp("ev:1", 0, 2), sp("ev:1/2", -1, 1)]);
        MatrixWD::from_symbolic(&v, 2).unwrap()
    }

    #[test]
    fn symbolic_verdicts() {
        assert_eq!(sp("X", 0, 2).classify(), Verdict::Pure(q_int(-1)));
        assert_eq!(
            sum(&[sp("X", 0, 1), sp("Y", -1, 1)]).classify(),
            Verdict::Mixed
        );
        let doubled = sum(&[sp("X", 0, 1), sp("X", 0, 1)]);
        assert_eq!(doubled.classify(), Verdict::StrictlyPure(q_int(0)));
        assert_eq!(SymbolicWD::empty(q4()).classify(), Verdict::VacuouslyPure);
        for s in 1..=10u32 {
            for k in -4..=4 {
                let v = sp("X", k, s);
                assert!(v.classify().is_pure_of(&q_int(k - (s as i64 - 1))));
            }
        }
    }

    #[test]
    fn matrix_verdicts_match_symbolic() {
        let st = MatrixWD::from_symbolic(&sp("ev:1", 0, 2), 2).unwrap();
        assert_eq!(st.classify(), Verdict::Pure(q_int(-1)));
        let split = MatrixWD::new(
            q4(),
            RatMatrix::diag(&[q_int(1), q_frac(1, 4)]),
            RatMatrix::zeros(2, 2),
        )
        .unwrap();
        assert_eq!(split.classify(), Verdict::Mixed);
        let three =
            MatrixWD::new(q4(), RatMatrix::diag(&[q_int(3)]), RatMatrix::zeros(1, 1)).unwrap();
        assert_eq!(three.classify(), Verdict::NotMixed);
        assert_eq!(three_dim().classify(), Verdict::Pure(q_int(-1)));
    }

    #[test]
    fn filtrations() {
        let st = MatrixWD::from_symbolic(&sp("ev:1", 0, 2), 2).unwrap();
        let fil = weight_filtration(&st).unwrap();
        assert_eq!(fil.jumps, vec![(q_int(-2), 1), (q_int(0), 2)]);

        let m = MatrixWD::new(
            q4(),
            RatMatrix::diag(&[q_int(1), q_int(2)]),
            RatMatrix::zeros(2, 2),
        )
        .unwrap();
        assert_eq!(
            weight_filtration(&m).unwrap().jumps,
            vec![(q_int(0), 1), (q_int(1), 2)]
        );

        let raising = MatrixWD::from_raw_parts(
            q4(),
            RatMatrix::diag(&[q_int(1), q_frac(1, 4)]),
            RatMatrix::unit(2, 0, 1),
        )
        .unwrap();
        assert_eq!(
            weight_filtration(&raising),
            Err(Error::MonodromyViolation { index: "-2".into() })
        );

        let sym = symbolic_weight_filtration(&sp("X", 0, 3));
        assert_eq!(
            sym.jumps,
            vec![(q_int(-4), 1), (q_int(-2), 2), (q_int(0), 3)]
        );
        assert_eq!(sym.dim_at(&q_int(-3)), 1);
    }

    #[test]
    fn primitive_parts() {
        let p = primitive_decomposition(&sp("X", 0, 3), &q_int(-2)).unwrap();
        let dims: Vec<u64> = p.parts.iter().map(|x| x.dim_primitive).collect();
        assert_eq!(dims, vec![0, 0, 1]);

        let v = sum(&[sp("X", 0, 3), sp("X", -2, 1)]);
        let p = primitive_decomposition(&v, &q_int(-2)).unwrap();
        assert_eq!(
            (p.primitive_dim(0), p.primitive_dim(1), p.primitive_dim(2)),
            (1, 0, 1)
        );

        let empty = primitive_decomposition(&SymbolicWD::empty(q4()), &q_int(0)).unwrap();
        assert!(empty.parts.iter().all(|x| x.dim_primitive == 0));

        assert_eq!(
            primitive_decomposition(&sp("X", 0, 2), &q_int(0)),
            Err(Error::NotPure)
        );

        let m = MatrixWD::from_symbolic(&sum(&[sp("ev:1", 0, 3), sp("ev:1/4", -2, 1)]), 2).unwrap();
        let pm = primitive_decomposition_matrix(&m, &q_int(-2)).unwrap();
        assert_eq!(
            (
                pm.primitive_dim(0),
                pm.primitive_dim(1),
                pm.primitive_dim(2)
            ),
            (1, 0, 1)
        );
    }

    #[test]
    fn reconstruction_symbolic() {
        let stripped = sum(&[sp("X", 0, 1), sp("X", -2, 1)]);
        assert_eq!(
            reconstruct_monodromy(&stripped),
            Reconstruction::Pure(sp("X", 0, 2))
        );
        let flat = sum(&[sp("X", 0, 1), sp("X", 0, 1)]);
        let back = reconstruct_monodromy(&flat).into_option().unwrap();
        assert_eq!(back.classify(), Verdict::StrictlyPure(q_int(0)));
        let target = sum(&[sp("X", 0, 3), sp("X", -2, 1)]);
        assert_eq!(
            reconstruct_monodromy(&strip_monodromy(&target)),
            Reconstruction::Pure(target)
        );
        let impossible = sum(&[sp("X", 0, 1), sp("Y", -1, 1)]);
        assert_eq!(reconstruct_monodromy(&impossible), Reconstruction::NoPureN);
        let gap = sum(&[sp("X", 0, 1), sp("X", -4, 1)]);
        assert_eq!(reconstruct_monodromy(&gap), Reconstruction::NoPureN);
    }

    #[test]
    fn reconstruction_matrix() {
        let bare = MatrixWD::new(
            q4(),
            RatMatrix::diag(&[q_int(1), q_frac(1, 4)]),
            RatMatrix::zeros(2, 2),
        )
        .unwrap();
        let rebuilt = reconstruct_monodromy_matrix(&bare)
            .unwrap()
            .into_option()
            .unwrap();
        assert_eq!(rebuilt.nilp().rank(), 1);
        assert_eq!(rebuilt.classify(), Verdict::Pure(q_int(-1)));

        let mixed = MatrixWD::new(
            q4(),
            RatMatrix::diag(&[q_int(1), q_int(2)]),
            RatMatrix::zeros(2, 2),
        )
        .unwrap();
        assert_eq!(
            reconstruct_monodromy_matrix(&mixed).unwrap(),
            Reconstruction::NoPureN
        );
    }

    #[test]
    fn summands_in_the_three_dim_model() {
        let v = three_dim();
        // basis order: string (1, 1/4) then the weight -1 line
        let whole = summand_test(&v, &RatMatrix::identity(3)).unwrap();
        assert!(whole.exterior_pure && whole.sub_pure && whole.splits);
        match whole.verdict {
            SummandVerdict::SummandWithComplement(c) => assert_eq!(c.cols(), 0),
            SummandVerdict::NotPure => panic!("V is a summand of itself"),
        }

        let line = summand_test(&v, &col(&[0, 0, 1])).unwrap();
        assert_eq!(line.exterior_weight, q_int(-1));
        assert!(line.conditions_agree() && line.splits);
        match &line.verdict {
            SummandVerdict::SummandWithComplement(c) => {
                let u = v.restrict_to(c).unwrap().to_symbolic().unwrap();
                assert_eq!(u.to_string(), "Sp2(ev:1, w=0)");
            }
            SummandVerdict::NotPure => panic!("weight -1 line is a summand"),
        }

        let bottom = summand_test(&v, &col(&[0, 1, 0])).unwrap();
        assert_eq!(bottom.exterior_weight, q_int(-2));
        assert!(bottom.conditions_agree() && !bottom.splits);
        assert_eq!(bottom.verdict, SummandVerdict::NotPure);
        assert_eq!(bottom.deviations[0].1, q_int(-1));

        assert_eq!(
            summand_test(&v, &col(&[1, 0, 0])),
            Err(Error::NotSubrepresentation)
        );
    }

    #[test]
    fn symbolic_summands() {
        let v = sum(&[sp("X", 0, 2), sp("Y", -1, 1)]);
        let y = IndecompWD::new(AtomRep::line("Y", -1), 1).unwrap();
        let x = IndecompWD::new(AtomRep::line("X", 0), 2).unwrap();
        let r = summand_test_symbolic(
            &v,
            &[SubPiece {
                key: y,
                count: 1,
                keep: 1,
            }],
        )
        .unwrap();
        assert!(r.conditions_agree() && r.splits);
        assert_eq!(r.complement, Some(sp("X", 0, 2)));
        let r = summand_test_symbolic(
            &v,
            &[SubPiece {
                key: x.clone(),
                count: 1,
                keep: 1,
            }],
        )
        .unwrap();
        assert!(r.conditions_agree() && !r.splits);
        assert_eq!(r.complement, None);
        let too_many = summand_test_symbolic(
            &v,
            &[SubPiece {
                key: x,
                count: 2,
                keep: 1,
            }],
        );
        assert_eq!(too_many, Err(Error::NotSubrepresentation));
    }

    #[test]
    fn filtration_splitting() {
        let v = three_dim();
        let trivial = filtration_split(&v, &[RatMatrix::identity(3)]).unwrap();
        match trivial {
            FiltrationSplit::Split(p) => assert_eq!(p.len(), 1),
            other => panic!("{other:?}"),
        }
        let fil = [RatMatrix::identity(3), col(&[0, 0, 1])];
        match filtration_split(&v, &fil).unwrap() {
            FiltrationSplit::Split(p) => {
                assert_eq!(p.len(), 2);
                assert!(p.iter().all(|x| x.verdict.is_pure_of(&q_int(-1))));
                assert_eq!(p[0].basis.cols(), 2);
            }
            other => panic!("{other:?}"),
        }

        let st = MatrixWD::from_symbolic(&sp("ev:1", 0, 2), 2).unwrap();
        let bad = [RatMatrix::identity(2), col(&[0, 1])];
        assert_eq!(
            filtration_split(&st, &bad).unwrap(),
            FiltrationSplit::CriterionFails(1)
        );

        let not_dec = [RatMatrix::identity(3), col(&[0, 0, 1]), col(&[0, 1, 0])];
        assert_eq!(filtration_split(&v, &not_dec), Err(Error::NotDecreasing(2)));
        let unstable = [RatMatrix::identity(3), col(&[1, 0, 0])];
        assert_eq!(
            filtration_split(&v, &unstable),
            Err(Error::NotSubrepresentation)
        );
    }

    #[test]
    fn certificates() {
        let st = MatrixWD::from_symbolic(&sp("ev:1", 0, 2), 2).unwrap();
        let c = certificate_matrix(&st).unwrap();
        assert_eq!(c.verdict, "Pure");
        assert_eq!(c.center.as_deref(), Some("-1"));
        assert_eq!(c.filtration.len(), 2);
        let s = certificate_symbolic(&sp("X", 0, 2)).unwrap();
        assert_eq!(
            s.primitive
                .iter()
                .map(|p| p.dim_primitive)
                .collect::<Vec<_>>(),
            vec![0, 1]
        );
    }
}
