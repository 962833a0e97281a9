//! Verification sweeps.
//!
//! Each suite checks one family of identities over a bounded sweep, against an
//! oracle that does not go through the code path under test (direct formula
//! evaluation, finite-field enumeration, or exhaustive search over nilpotent
//! orbits). `wdcalc verify` and the acceptance tests both run these.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bruhat::bruhat_oracle;
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::matrix_wd::{eigenvalue_label, MatrixWD};
use crate::purity::{
    filtration_split, reconstruct_monodromy, reconstruct_monodromy_matrix, strip_monodromy,
    summand_test, summand_test_symbolic, Classify, FiltrationSplit, Reconstruction, SubPiece,
};
use crate::rational::{binomial, pow_q, q_int, Q};
use crate::segments::{iwahori_dim, partitions, strata_class, telescope_check, SegmentRep};
use crate::specseq::{abutment, assemble_e1, check_degeneration, compare_with_rec, StrataInput};
use crate::wd::{AtomRep, IndecompWD, ResidueCard, SymbolicWD};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `n` for the segment sweeps.
    pub max_n: u32,
    /// Largest matrix dimension for the random sweeps.
    pub max_dim: usize,
    /// Random instances per randomized suite.
    pub samples: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_n: 8,
            max_dim: 6,
            samples: 200,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub id: u8,
    pub name: &'static str,
    pub cases: u64,
    pub failures: Vec<String>,
    pub millis: u64,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type SuiteFn = fn(&Bounds) -> (u64, Vec<String>);

pub const SUITES: [(u8, &str, SuiteFn); 8] = [
    (1, "iwahori-dimension", iwahori_suite),
    (2, "telescoping", telescope_suite),
    (3, "strata-identity", strata_suite),
    (4, "semisimplification", semisimplification_suite),
    (5, "monodromy-uniqueness", uniqueness_suite),
    (6, "summands", summand_suite),
    (7, "degeneration", degeneration_suite),
    (8, "round-trips", round_trip_suite),
];

pub fn run_suite(id: u8, bounds: &Bounds) -> Option<SuiteOutcome> {
    let (id, name, f) = SUITES.iter().find(|(i, _, _)| *i == id)?;
    let start = Instant::now();
    let (cases, failures) = f(bounds);
    Some(SuiteOutcome {
        id: *id,
        name,
        cases,
        failures,
        millis: start.elapsed().as_millis() as u64,
    })
}

pub fn run_all(bounds: &Bounds) -> Vec<SuiteOutcome> {
    SUITES
        .iter()
        .filter_map(|(id, _, _)| run_suite(*id, bounds))
        .collect()
}

fn q4() -> ResidueCard {
    ResidueCard::new(4).expect("4 >= 2")
}

/// `n! / ∏ s_j!` as a product of binomials `C(s_1 + ... + s_k, s_k)`.
pub fn multinomial_by_binomials(parts: &[u32]) -> BigInt {
    let mut total = 0i64;
    let mut acc = BigInt::one();
    for &s in parts {
        total += s as i64;
        acc *= binomial(total, s as i64);
    }
    acc
}

fn iwahori_suite(b: &Bounds) -> (u64, Vec<String>) {
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 1..=b.max_n.min(4) {
        for lengths in partitions(n) {
            cases += 1;
            let r = SegmentRep::from_lengths(&lengths, q4(), Q::zero()).expect("partition");
            let dim = iwahori_dim(&r);
            let formula = multinomial_by_binomials(&lengths);
            let f2 = bruhat_oracle(n, &lengths, 2).map(BigInt::from);
            let f3 = bruhat_oracle(n, &lengths, 3).map(BigInt::from);
            if dim != formula || f2.as_ref() != Ok(&dim) || f3.as_ref() != Ok(&dim) {
                failures.push(format!(
                    "{lengths:?}: iwahori_dim {dim}, formula {formula}, F2 {f2:?}, F3 {f3:?}"
                ));
            }
        }
    }
    (cases, failures)
}

fn telescope_suite(_: &Bounds) -> (u64, Vec<String>) {
    let mut cases = 0;
    let mut failures = Vec::new();
    for s_i in 1..=12u32 {
        for s_size in 1..=s_i {
            cases += 1;
            let expected = i64::from(s_i == s_size);
            match telescope_check(s_i, s_size) {
                Ok(v) if v == expected => {}
                other => failures.push(format!(
                    "s_i = {s_i}, #S = {s_size}: got {other:?}, want {expected}"
                )),
            }
        }
    }
    (cases, failures)
}

fn strata_suite(b: &Bounds) -> (u64, Vec<String>) {
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 1..=b.max_n {
        for lengths in partitions(n) {
            let r = SegmentRep::from_lengths(&lengths, q4(), Q::zero()).expect("partition");
            for s_size in 1..=n {
                cases += 1;
                match strata_class(&r, s_size) {
                    Ok(c) => {
                        let survivors: Vec<_> =
                            c.class.terms().map(|(a, _)| a.label.clone()).collect();
                        let expected: Vec<_> = r
                            .segments()
                            .iter()
                            .filter(|seg| seg.s == s_size)
                            .map(|seg| seg.label.clone())
                            .collect();
                        let mut expected = expected;
                        expected.sort();
                        if survivors != expected {
                            failures.push(format!(
                                "{lengths:?}, #S = {s_size}: survivors {survivors:?}"
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("{lengths:?}, #S = {s_size}: {e}")),
                }
            }
        }
    }
    (cases, failures)
}

/// Random generators for Weil–Deligne representations with `q = 4`.
pub mod random {
    use super::*;

    /// A random integer-weight representation whose atoms are labelled by their
    /// top eigenvalue `±2^w`, so it is in the normal form of the matrix backend.
    pub fn symbolic(rng: &mut impl Rng, max_dim: usize, pure: bool) -> SymbolicWD {
        let dim = rng.gen_range(1..=max_dim);
        let center: i64 = rng.gen_range(-3..=3);
        let mut terms = Vec::new();
        let mut used = 0;
        while used < dim {
            let s = rng.gen_range(1..=(dim - used).min(4)) as u32;
            let top = if pure {
                center + s as i64 - 1
            } else {
                rng.gen_range(-3..=4)
            };
            let sign = if rng.gen_bool(0.25) { -1 } else { 1 };
            let alpha = pow_q(&q_int(2), top) * q_int(sign);
            let atom = AtomRep {
                label: eigenvalue_label(&alpha),
                dim: 1,
                weight: q_int(top),
            };
            terms.push((IndecompWD { atom, s }, 1));
            used += s as usize;
        }
        SymbolicWD::from_terms(q4(), terms)
    }

    /// A random invertible integer matrix: a product of elementary matrices.
    pub fn invertible(rng: &mut impl Rng, n: usize) -> RatMatrix {
        let mut g = RatMatrix::identity(n);
        if n < 2 {
            return g;
        }
        for _ in 0..2 * n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let c = q_int(rng.gen_range(-2..=2));
            let mut e = RatMatrix::identity(n);
            e[(i, j)] = c;
            g = g.mul(&e);
        }
        g
    }

    /// Conjugated standard model; when two equal strings exist, `phi` is
    /// multiplied by a unipotent coupling them, so it is no longer semisimple.
    pub fn matrix(
        rng: &mut impl Rng,
        max_dim: usize,
        pure: bool,
        allow_unipotent: bool,
    ) -> MatrixWD {
        let mut a = symbolic(rng, max_dim, pure);
        if allow_unipotent && rng.gen_bool(0.5) {
            let key = a.terms().next().map(|(k, _)| k.clone()).expect("nonempty");
            if 2 * key.s as usize <= max_dim && a.dim() as usize + key.s as usize <= max_dim {
                a = a
                    .direct_sum(&SymbolicWD::sp(key.atom.clone(), key.s, q4()).expect("valid"))
                    .expect("same q");
            }
        }
        let base = MatrixWD::from_symbolic(&a, 2).expect("integer weights");
        let n = base.dim();
        let mut phi = base.phi().clone();
        if allow_unipotent {
            if let Some(offset) = repeated_string_offset(&a) {
                let (start, s) = offset;
                let mut u = RatMatrix::identity(n);
                for i in 0..s {
                    u[(start + i, start + s + i)] = Q::one();
                }
                phi = phi.mul(&u);
            }
        }
        let m = MatrixWD::new(q4(), phi, base.nilp().clone())
            .expect("unipotent commutes with the model");
        m.conjugate(&invertible(rng, n)).expect("invertible")
    }

    /// Start and length of the first term with multiplicity at least 2, in
    /// the basis order of the standard model.
    fn repeated_string_offset(a: &SymbolicWD) -> Option<(usize, usize)> {
        let mut offset = 0;
        for (key, m) in a.terms() {
            if m >= 2 {
                return Some((offset, key.s as usize));
            }
            offset += m as usize * key.s as usize * key.atom.dim as usize;
        }
        None
    }

    pub fn partition(rng: &mut impl Rng, n: u32) -> Vec<u32> {
        let all = partitions(n);
        all.choose(rng).expect("n >= 1").clone()
    }
}

fn semisimplification_suite(b: &Bounds) -> (u64, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed ^ 4);
    let mut failures = Vec::new();
    let mut non_semisimple = 0;
    for k in 0..b.samples {
        let m = random::matrix(&mut rng, b.max_dim, k % 2 == 0, true);
        if !m.is_semisimple() {
            non_semisimple += 1;
        }
        match m.frobenius_semisimplify() {
            Ok(ss) => {
                if ss.classify() != m.classify() {
                    failures.push(format!("sample {k}: {} vs {}", m.classify(), ss.classify()));
                }
            }
            Err(e) => failures.push(format!("sample {k}: {e}")),
        }
    }
    if non_semisimple == 0 && b.samples >= 20 {
        failures.push("generator produced no non-semisimple Frobenius".into());
    }
    (b.samples as u64, failures)
}

/// Multisets of intervals `[a, b]` of grades whose coverage is `dims`.
/// Intervals are emitted with nondecreasing start and, for equal starts,
/// nonincreasing length, so each multiset appears once.
pub fn interval_multisets(dims: &[u64]) -> Vec<Vec<(usize, usize)>> {
    fn go(
        rest: &mut Vec<u64>,
        last: Option<(usize, usize)>,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let Some(start) = rest.iter().position(|&d| d > 0) else {
            out.push(acc.clone());
            return;
        };
        let mut end = start;
        while end < rest.len() && rest[end] > 0 {
            end += 1;
        }
        for len in (1..=end - start).rev() {
            if let Some((ls, ll)) = last {
                if ls == start && len > ll {
                    continue;
                }
            }
            for g in start..start + len {
                rest[g] -= 1;
            }
            acc.push((start, len));
            go(rest, Some((start, len)), acc, out);
            acc.pop();
            for g in start..start + len {
                rest[g] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut dims.to_vec(), None, &mut Vec::new(), &mut out);
    out
}

/// Number of graded nilpotent orbits making the diagonal `phi` pure. Works in
/// the eigenbasis, one chain `±2^w, ±2^(w-2), ...` at a time.
pub fn pure_orbit_count(diag: &[Q]) -> Result<(usize, usize, Vec<SymbolicWD>)> {
    let n = diag.len();
    let phi = RatMatrix::diag(diag);
    let bare = MatrixWD::new(q4(), phi.clone(), RatMatrix::zeros(n, n))?;
    // chain key: (sign, parity of weight); grades by descending weight
    let mut chains: BTreeMap<(bool, i64), BTreeMap<i64, Vec<usize>>> = BTreeMap::new();
    for (idx, alpha) in diag.iter().enumerate() {
        let w = bare.eigenvalue_weight(alpha)?;
        chains
            .entry((alpha > &Q::zero(), w.rem_euclid(2)))
            .or_default()
            .entry(-w)
            .or_default()
            .push(idx);
    }
    let mut per_chain: Vec<(Vec<Vec<usize>>, Vec<Vec<(usize, usize)>>)> = Vec::new();
    for grades in chains.values() {
        let lo = *grades.keys().next().unwrap();
        let hi = *grades.keys().next_back().unwrap();
        let slots: Vec<Vec<usize>> = (lo..=hi)
            .step_by(2)
            .map(|g| grades.get(&g).cloned().unwrap_or_default())
            .collect();
        let dims: Vec<u64> = slots.iter().map(|s| s.len() as u64).collect();
        per_chain.push((slots.clone(), interval_multisets(&dims)));
    }
    let mut total = 0;
    let mut pure = Vec::new();
    let mut choice = vec![0usize; per_chain.len()];
    loop {
        total += 1;
        let mut nilp = RatMatrix::zeros(n, n);
        for (c, (slots, options)) in per_chain.iter().enumerate() {
            let mut next = vec![0usize; slots.len()];
            for &(start, len) in &options[choice[c]] {
                let mut prev: Option<usize> = None;
                for g in start..start + len {
                    let idx = slots[g][next[g]];
                    next[g] += 1;
                    if let Some(p) = prev {
                        nilp[(idx, p)] = Q::one();
                    }
                    prev = Some(idx);
                }
            }
        }
        let m = MatrixWD::new(q4(), phi.clone(), nilp)?;
        if m.classify().is_pure() {
            pure.push(m.to_symbolic()?);
        }
        // odometer over chains
        let mut c = 0;
        loop {
            if c == choice.len() {
                return Ok((total, pure.len(), pure));
            }
            choice[c] += 1;
            if choice[c] < per_chain[c].1.len() {
                break;
            }
            choice[c] = 0;
            c += 1;
        }
    }
}

fn uniqueness_suite(b: &Bounds) -> (u64, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed ^ 5);
    let mut failures = Vec::new();
    let mut cases = 0u64;
    for n in 1..=12u32 {
        for lengths in partitions(n) {
            cases += 1;
            let center: i64 = rng.gen_range(-2..=2);
            let labels = ["A", "B"];
            let terms = lengths.iter().map(|&s| {
                let atom = AtomRep::line(*labels.choose(&mut rng).unwrap(), center + s as i64 - 1);
                (IndecompWD { atom, s }, 1)
            });
            let a = SymbolicWD::from_terms(q4(), terms);
            if reconstruct_monodromy(&strip_monodromy(&a)) != Reconstruction::Pure(a.clone()) {
                failures.push(format!("partition {lengths:?}: {a} not recovered"));
            }
        }
    }
    let mut outcomes = [0u64; 2];
    for k in 0..b.samples {
        cases += 1;
        let dim = rng.gen_range(1..=b.max_dim);
        let diag: Vec<Q> = if k % 2 == 0 {
            // weights from a pure representation, shuffled
            let a = random::symbolic(&mut rng, dim, true);
            let mut d: Vec<Q> = MatrixWD::from_symbolic(&a, 2)
                .expect("integer")
                .phi()
                .to_rows()
                .iter()
                .enumerate()
                .map(|(i, r)| r[i].clone())
                .collect();
            d.shuffle(&mut rng);
            d
        } else {
            (0..dim)
                .map(|_| pow_q(&q_int(2), rng.gen_range(-2..=2)))
                .collect()
        };
        let (orbits, count, pure) = match pure_orbit_count(&diag) {
            Ok(x) => x,
            Err(e) => {
                failures.push(format!("sample {k}: oracle failed: {e}"));
                continue;
            }
        };
        let len = diag.len();
        let m = MatrixWD::new(q4(), RatMatrix::diag(&diag), RatMatrix::zeros(len, len))
            .expect("diagonal");
        let got = reconstruct_monodromy_matrix(&m);
        outcomes[usize::from(count > 0)] += 1;
        let ok = match (&got, count) {
            (Ok(Reconstruction::Pure(r)), 1) => r.to_symbolic().ok().as_ref() == pure.first(),
            (Ok(Reconstruction::NoPureN), 0) => true,
            _ => false,
        };
        if !ok {
            failures.push(format!(
                "sample {k}: {orbits} orbits, {count} pure, reconstruction {got:?}"
            ));
        }
    }
    if b.samples >= 20 && (outcomes[0] == 0 || outcomes[1] == 0) {
        failures.push(format!(
            "oracle is one-sided: {} without a pure N, {} with",
            outcomes[0], outcomes[1]
        ));
    }
    (cases, failures)
}

/// The subrepresentation generated by one vector: `span{N^j v}` for an eigenvector `v`.
fn generated(m: &MatrixWD, vectors: &[Vec<Q>]) -> RatMatrix {
    let n = m.dim();
    let mut cols = Vec::new();
    for v in vectors {
        let mut cur = RatMatrix::from_columns(n, std::slice::from_ref(v));
        for _ in 0..n {
            cols.push(cur.column(0));
            cur = m.nilp().mul(&cur);
        }
    }
    RatMatrix::from_columns(n, &cols).column_space()
}

fn random_eigenvector(rng: &mut impl Rng, m: &MatrixWD) -> Vec<Q> {
    let (alpha, _) = m.eigenvalues().choose(rng).expect("nonempty").clone();
    let space = m.generalized_eigenspace(&alpha);
    let mut v = vec![Q::zero(); m.dim()];
    for c in space.columns() {
        let t = q_int(rng.gen_range(-2..=2));
        for (x, y) in v.iter_mut().zip(c) {
            *x += &t * y;
        }
    }
    if v.iter().all(Zero::is_zero) {
        v = space.column(0);
    }
    v
}

fn summand_suite(b: &Bounds) -> (u64, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed ^ 6);
    let mut failures = Vec::new();
    let mut cases = 0u64;
    let mut kinds = [0u64; 2];
    let mut splits = 0u64;
    for k in 0..b.samples {
        let v = random::matrix(&mut rng, b.max_dim, true, false);
        let count = rng.gen_range(1..=2);
        let vecs: Vec<Vec<Q>> = (0..count)
            .map(|_| random_eigenvector(&mut rng, &v))
            .collect();
        let w = generated(&v, &vecs);
        cases += 1;
        match summand_test(&v, &w) {
            Ok(r) => {
                kinds[usize::from(r.splits)] += 1;
                if !r.conditions_agree() {
                    failures.push(format!(
                        "pair {k}: conditions disagree {:?}",
                        (r.exterior_pure, r.sub_pure, r.splits)
                    ));
                }
            }
            Err(e) => failures.push(format!("pair {k}: {e}")),
        }

        // a decreasing filtration by generated subrepresentations
        cases += 1;
        let depth = rng.gen_range(1..=3);
        let gens: Vec<Vec<Q>> = (0..depth)
            .map(|_| random_eigenvector(&mut rng, &v))
            .collect();
        let mut fil = vec![RatMatrix::identity(v.dim())];
        for j in 0..depth {
            fil.push(generated(&v, &gens[j..]));
        }
        match filtration_split(&v, &fil) {
            Ok(FiltrationSplit::Split(pieces)) => {
                splits += 1;
                for p in &pieces {
                    let upper = &fil[p.j];
                    let lower = fil
                        .get(p.j + 1)
                        .cloned()
                        .unwrap_or_else(|| RatMatrix::zeros(v.dim(), 0));
                    let maps_onto = upper.spans(&p.basis)
                        && lower.hstack(&p.basis).rank() == upper.column_space().cols()
                        && p.basis.cols() + lower.column_space().cols()
                            == upper.column_space().cols();
                    if !maps_onto {
                        failures.push(format!("filtration {k}: piece {} does not lift gr", p.j));
                    }
                }
            }
            Ok(FiltrationSplit::CriterionFails(_)) => {}
            Err(e) => failures.push(format!("filtration {k}: {e}")),
        }
    }
    // symbolic pairs: truncations of random pure representations
    for k in 0..b.samples {
        cases += 1;
        let v = random::symbolic(&mut rng, b.max_dim, true);
        let mut pieces = Vec::new();
        for (key, m) in v.terms() {
            if rng.gen_bool(0.6) {
                pieces.push(SubPiece {
                    key: key.clone(),
                    count: rng.gen_range(1..=m),
                    keep: rng.gen_range(0..=key.s),
                });
            }
        }
        match summand_test_symbolic(&v, &pieces) {
            Ok(r) if r.conditions_agree() => {}
            Ok(r) => failures.push(format!(
                "symbolic pair {k}: {:?}",
                (r.exterior_pure, r.sub_pure, r.splits)
            )),
            Err(e) => failures.push(format!("symbolic pair {k}: {e}")),
        }
    }
    if b.samples >= 20 && (splits == 0 || splits == b.samples as u64) {
        failures.push(format!(
            "filtration generator is one-sided: {splits} of {} split",
            b.samples
        ));
    }
    if b.samples >= 20 && (kinds[0] == 0 || kinds[1] == 0) {
        failures.push(format!(
            "generator is one-sided: {} non-summands, {} summands",
            kinds[0], kinds[1]
        ));
    }
    (cases, failures)
}

fn degeneration_suite(b: &Bounds) -> (u64, Vec<String>) {
    let mut failures = Vec::new();
    let mut cases = 0;
    for w0 in [q_int(0), q_int(-3), Q::new(1.into(), 2.into())] {
        for n in 1..=b.max_n {
            for lengths in partitions(n) {
                cases += 1;
                let r = SegmentRep::from_lengths(&lengths, q4(), w0.clone()).expect("partition");
                let outcome = StrataInput::from_segments(&r)
                    .and_then(|s| assemble_e1(&s))
                    .and_then(|page| {
                        let on_line = page
                            .nonzero_cells()
                            .all(|(&(i, j), _)| i + j == n as i64 - 1);
                        let degenerate = check_degeneration(&page);
                        let ab = abutment(&page)?;
                        Ok((on_line, degenerate, page.monodromy_consistent(), ab))
                    });
                match outcome {
                    Ok((on_line, degenerate, strings, ab)) => {
                        let target = &w0 + q_int(n as i64 - 1);
                        let pure = ab.classify().is_pure_of(&target);
                        let matches = compare_with_rec(&ab, &r);
                        if !(on_line && degenerate && strings && pure && matches) {
                            failures.push(format!(
                                "{lengths:?}, w0 = {w0}: line {on_line}, degenerate {degenerate}, strings {strings}, pure {pure}, rec {matches}"
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("{lengths:?}: {e}")),
                }
            }
        }
    }
    (cases, failures)
}

fn round_trip_suite(b: &Bounds) -> (u64, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed ^ 8);
    let mut failures = Vec::new();
    for k in 0..b.samples {
        let a = random::symbolic(&mut rng, b.max_dim, k % 3 == 0);
        let back = MatrixWD::from_symbolic(&a, 2).and_then(|m| m.to_symbolic());
        match back {
            Ok(back) => {
                let lhs = serde_json::to_string(&a.to_json()).expect("serializable");
                let rhs = serde_json::to_string(&back.to_json()).expect("serializable");
                if lhs != rhs {
                    failures.push(format!("sample {k}: {lhs} -> {rhs}"));
                }
            }
            Err(e) => failures.push(format!("sample {k}: {e}")),
        }
        let verdict = a.classify();
        let f = rng.gen_range(1..=3);
        match a.restrict(f) {
            Ok(r) if r.classify() == verdict => {}
            other => failures.push(format!(
                "sample {k}: restriction to degree {f} gives {other:?}"
            )),
        }
        let delta = q_int(rng.gen_range(-3..=3));
        let twisted = a.unramified_twist(&delta, "'").classify();
        let expected = match &verdict {
            crate::purity::Verdict::Pure(c) => crate::purity::Verdict::Pure(c + &delta),
            crate::purity::Verdict::StrictlyPure(c) => {
                crate::purity::Verdict::StrictlyPure(c + &delta)
            }
            other => other.clone(),
        };
        if twisted != expected {
            failures.push(format!(
                "sample {k}: twist by {delta} gives {twisted}, expected {expected}"
            ));
        }
    }
    (b.samples as u64, failures)
}

/// Error used when a sweep reports failures.
pub fn failure_error(outcomes: &[SuiteOutcome]) -> Option<Error> {
    let failed: Vec<_> = outcomes
        .iter()
        .filter(|o| !o.passed())
        .map(|o| o.name)
        .collect();
    (!failed.is_empty())
        .then(|| Error::InternalMismatch(format!("failing suites: {}", failed.join(", "))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_enumeration() {
        // [1,1]: two singletons or one string
        assert_eq!(interval_multisets(&[1, 1]).len(), 2);
        assert_eq!(interval_multisets(&[2, 1]).len(), 2);
        assert_eq!(interval_multisets(&[1, 2, 1]).len(), 5);
        assert_eq!(interval_multisets(&[1, 0, 1]).len(), 1);
    }

    #[test]
    fn oracle_on_steinberg_weights() {
        let (orbits, pure, _) = pure_orbit_count(&[q_int(1), Q::new(1.into(), 4.into())]).unwrap();
        assert_eq!((orbits, pure), (2, 1));
        let (_, pure, _) = pure_orbit_count(&[q_int(1), q_int(2)]).unwrap();
        assert_eq!(pure, 0);
    }

    #[test]
    fn reduced_sweeps_pass() {
        let b = Bounds {
            max_n: 3,
            max_dim: 4,
            samples: 12,
            seed: 1,
        };
        for o in run_all(&b) {
            assert!(o.passed(), "{}: {:?}", o.name, o.failures);
        }
    }
}
