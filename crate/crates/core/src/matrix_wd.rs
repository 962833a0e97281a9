//! Explicit Weil-Deligne representations with trivial inertia.
//!
//! A [`MatrixWD`] is a pair `(phi, N)` of rational matrices, `phi` the action
//! of a fixed geometric Frobenius lift, subject to `phi N phi^-1 = q^-1 N`.
//! The residue cardinality is a perfect square `q = p0^2`, so an eigenvalue
//! `alpha` has weight `w` exactly when `|alpha| = p0^w`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Poly, RatMatrix};
use crate::rational::{exact_log, fmt_q, parse_q, pow_q, q_int, serde_q_grid, to_i64, Q};
use crate::wd::{AtomRep, IndecompWD, ResidueCard, SymbolicWD, WeightProfile};

/// Prefix of atom labels produced from eigenvalues.
pub const EIGENVALUE_LABEL_PREFIX: &str = "ev:";

pub fn eigenvalue_label(alpha: &Q) -> String {
    format!("{EIGENVALUE_LABEL_PREFIX}{}", fmt_q(alpha))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixWD {
    q: ResidueCard,
    p0: u64,
    phi: RatMatrix,
    nilp: RatMatrix,
    /// Distinct eigenvalues of `phi` with algebraic multiplicity, ascending.
    eigenvalues: Vec<(Q, usize)>,
}

/// Multiplicative Jordan decomposition `phi = s u = u s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanParts {
    pub semisimple: RatMatrix,
    pub unipotent: RatMatrix,
}

impl MatrixWD {
    /// Validates `(phi, N)`: invertibility, nilpotency, the relation
    /// `phi N phi^-1 = q^-1 N` and rationality of the eigenvalues of `phi`.
    pub fn new(q: ResidueCard, phi: RatMatrix, nilp: RatMatrix) -> Result<Self> {
        let m = MatrixWD::from_raw_parts(q, phi, nilp)?;
        let phi_inv = m.phi.inverse().ok_or(Error::NotInvertible)?;
        if !m.nilp.is_nilpotent() {
            return Err(Error::NotNilpotent);
        }
        let residual = m
            .phi
            .mul(&m.nilp)
            .mul(&phi_inv)
            .sub(&m.nilp.scale(&q.as_q().recip()));
        if !residual.is_zero() {
            return Err(Error::CompatibilityViolated {
                residual: residual.to_string(),
            });
        }
        Ok(m)
    }

    /// Checks shapes and eigenvalue rationality only. Meant for inspecting
    /// hand-built pairs that may violate the compatibility relation.
    pub fn from_raw_parts(q: ResidueCard, phi: RatMatrix, nilp: RatMatrix) -> Result<Self> {
        let p0 = q.sqrt()?;
        if !phi.is_square() || nilp.rows() != phi.rows() || nilp.cols() != phi.cols() {
            return Err(Error::DimensionMismatch(format!(
                "phi is {}x{}, N is {}x{}",
                phi.rows(),
                phi.cols(),
                nilp.rows(),
                nilp.cols()
            )));
        }
        let (eigenvalues, rest) = phi.charpoly().rational_roots();
        if rest.degree() > 0 {
            return Err(Error::IrrationalEigenvalue {
                factor: rest.to_string(),
            });
        }
        Ok(MatrixWD {
            q,
            p0,
            phi,
            nilp,
            eigenvalues,
        })
    }

    pub fn q(&self) -> ResidueCard {
        self.q
    }

    pub fn p0(&self) -> u64 {
        self.p0
    }

    pub fn phi(&self) -> &RatMatrix {
        &self.phi
    }

    pub fn nilp(&self) -> &RatMatrix {
        &self.nilp
    }

    pub fn dim(&self) -> usize {
        self.phi.rows()
    }

    pub fn eigenvalues(&self) -> &[(Q, usize)] {
        &self.eigenvalues
    }

    /// The same representation in another basis: `(g phi g^-1, g N g^-1)`.
    pub fn conjugate(&self, g: &RatMatrix) -> Result<MatrixWD> {
        let g_inv = g.inverse().ok_or(Error::NotInvertible)?;
        Ok(MatrixWD {
            q: self.q,
            p0: self.p0,
            phi: g.mul(&self.phi).mul(&g_inv),
            nilp: g.mul(&self.nilp).mul(&g_inv),
            eigenvalues: self.eigenvalues.clone(),
        })
    }

    /// Weight of an eigenvalue: `w` with `|alpha| = p0^w`.
    pub fn eigenvalue_weight(&self, alpha: &Q) -> Result<i64> {
        exact_log(alpha, &BigInt::from(self.p0)).ok_or_else(|| Error::NotWeilLike {
            eigenvalue: fmt_q(alpha),
            base: self.p0.to_string(),
        })
    }

    /// Multiset of eigenvalue weights, counted with algebraic multiplicity.
    pub fn eigen_weights(&self) -> Result<WeightProfile> {
        let mut out = WeightProfile::new();
        for (alpha, mult) in &self.eigenvalues {
            *out.entry(q_int(self.eigenvalue_weight(alpha)?))
                .or_insert(0) += *mult as u64;
        }
        Ok(out)
    }

    /// Generalized eigenspace of `alpha` as a column basis.
    pub fn generalized_eigenspace(&self, alpha: &Q) -> RatMatrix {
        let mult = self
            .eigenvalues
            .iter()
            .find(|(a, _)| a == alpha)
            .map_or(0, |(_, m)| *m);
        if mult == 0 {
            return RatMatrix::zeros(self.dim(), 0);
        }
        self.phi.shift(alpha).pow(mult).kernel()
    }

    /// `phi = s u` via the idempotents of the partial fraction decomposition of
    /// the characteristic polynomial.
    pub fn mult_jordan(&self) -> JordanParts {
        let n = self.dim();
        let chi = self
            .eigenvalues
            .iter()
            .fold(Poly::one(), |acc, (a, m)| acc.mul(&Poly::linear(a).pow(*m)));
        let mut semisimple = RatMatrix::zeros(n, n);
        for (alpha, mult) in &self.eigenvalues {
            let local = Poly::linear(alpha).pow(*mult);
            let (cofactor, rem) = chi.div_rem(&local);
            debug_assert!(rem.is_zero());
            let (_, _, v) = local.ext_gcd(&cofactor);
            let idempotent = v.mul(&cofactor).div_rem(&chi).1;
            semisimple = semisimple.add(&idempotent.eval_matrix(&self.phi).scale(alpha));
        }
        let unipotent = semisimple
            .inverse()
            .expect("semisimple part of an invertible matrix is invertible")
            .mul(&self.phi);
        JordanParts {
            semisimple,
            unipotent,
        }
    }

    pub fn is_semisimple(&self) -> bool {
        self.mult_jordan().semisimple == self.phi
    }

    /// Replaces `phi` by its semisimple part, keeping `N`.
    pub fn frobenius_semisimplify(&self) -> Result<MatrixWD> {
        let s = self.mult_jordan().semisimple;
        let s_inv = s.inverse().ok_or(Error::NotInvertible)?;
        let residual = s
            .mul(&self.nilp)
            .mul(&s_inv)
            .sub(&self.nilp.scale(&self.q.as_q().recip()));
        if !residual.is_zero() {
            return Err(Error::InternalMismatch(format!(
                "semisimple part breaks phi N phi^-1 = q^-1 N: residual {residual}"
            )));
        }
        Ok(MatrixWD {
            q: self.q,
            p0: self.p0,
            phi: s,
            nilp: self.nilp.clone(),
            eigenvalues: self.eigenvalues.clone(),
        })
    }

    /// Decomposition into `Sp_s` blocks after Frobenius semisimplification.
    pub fn to_symbolic(&self) -> Result<SymbolicWD> {
        self.frobenius_semisimplify()?.to_symbolic_strict()
    }

    /// Decomposition into `Sp_s` blocks; refuses a non-semisimple `phi`.
    ///
    /// `N` maps `E(alpha)` into `E(alpha / q)`, so each class of eigenvalues
    /// modulo `q^Z` carries a graded nilpotent, i.e. a representation of a
    /// linear quiver. The number of strings from grade `a` to grade `b` is
    /// `r(a,b) - r(a-1,b) - r(a,b+1) + r(a-1,b+1)`, where `r(a,b)` is the rank
    /// of `N^(b-a)` on `E_a`.
    pub fn to_symbolic_strict(&self) -> Result<SymbolicWD> {
        if !self.is_semisimple() {
            return Err(Error::NotFrobeniusSemisimple);
        }
        let mut terms = Vec::new();
        for chain in self.eigenvalue_chains()? {
            let spaces: Vec<RatMatrix> = chain
                .iter()
                .map(|a| self.generalized_eigenspace(a))
                .collect();
            let len = chain.len() as i64;
            let rank = |a: i64, b: i64| -> i64 {
                if a < 0 || b >= len || a > b {
                    return 0;
                }
                let basis = &spaces[a as usize];
                if basis.cols() == 0 {
                    return 0;
                }
                self.nilp.pow((b - a) as usize).mul(basis).rank() as i64
            };
            for a in 0..len {
                for b in a..len {
                    let count = rank(a, b) - rank(a - 1, b) - rank(a, b + 1) + rank(a - 1, b + 1);
                    if count < 0 {
                        return Err(Error::InternalMismatch("negative string count".into()));
                    }
                    if count > 0 {
                        let top = &chain[a as usize];
                        let atom = AtomRep::new(
                            eigenvalue_label(top),
                            1,
                            q_int(self.eigenvalue_weight(top)?),
                        )?;
                        terms.push((IndecompWD::new(atom, (b - a + 1) as u32)?, count as u64));
                    }
                }
            }
        }
        let out = SymbolicWD::from_terms(self.q, terms);
        if out.dim() != self.dim() as u64 {
            return Err(Error::InternalMismatch(format!(
                "string decomposition has dimension {} but the space has {}",
                out.dim(),
                self.dim()
            )));
        }
        Ok(out)
    }

    /// Eigenvalues grouped into classes modulo `q^Z`, each listed from the
    /// largest absolute value down in steps of `q^-1` (gaps included).
    pub fn eigenvalue_chains(&self) -> Result<Vec<Vec<Q>>> {
        for (alpha, _) in &self.eigenvalues {
            self.eigenvalue_weight(alpha)?;
        }
        let q = self.q.as_q();
        let qi = BigInt::from(self.q.get());
        let mut remaining: Vec<Q> = self.eigenvalues.iter().map(|(a, _)| a.clone()).collect();
        remaining.sort_by(|a, b| b.abs().cmp(&a.abs()).then(a.cmp(b)));
        let mut chains = Vec::new();
        while let Some(top) = remaining.first().cloned() {
            let members: Vec<Q> = remaining
                .iter()
                .filter(|b| {
                    let ratio = &top / *b;
                    ratio.is_positive() && exact_log(&ratio, &qi).is_some_and(|k| k >= 0)
                })
                .cloned()
                .collect();
            let depth = members
                .iter()
                .map(|b| exact_log(&(&top / b), &qi).unwrap())
                .max()
                .unwrap_or(0);
            chains.push((0..=depth).map(|k| &top / pow_q(&q, k)).collect());
            remaining.retain(|b| !members.contains(b));
        }
        Ok(chains)
    }

    /// Standard model: each `Sp_s(X)` with `X` of integer weight `w` contributes
    /// `dim X` strings `phi = diag(e p0^w, e p0^(w-2), ...)` with `N` the
    /// down-shift. The sign `e` is negative only for labels `"ev:-..."`.
    pub fn from_symbolic(a: &SymbolicWD, p0: u64) -> Result<MatrixWD> {
        let q = a.q();
        if q.sqrt()? != p0 {
            return Err(Error::QMismatch(q.get(), p0.saturating_mul(p0)));
        }
        let base = q_int(p0 as i64);
        let mut phi_blocks = Vec::new();
        let mut nilp_blocks = Vec::new();
        for (key, mult) in a.terms() {
            let w = to_i64(&key.atom.weight)
                .ok_or_else(|| Error::NonIntegerWeight(fmt_q(&key.atom.weight)))?;
            let sign = label_sign(&key.atom.label);
            let s = key.s as usize;
            let diag: Vec<Q> = (0..s)
                .map(|i| pow_q(&base, w - 2 * i as i64) * &sign)
                .collect();
            let mut shift = RatMatrix::zeros(s, s);
            for i in 0..s.saturating_sub(1) {
                shift[(i + 1, i)] = Q::one();
            }
            for _ in 0..mult * key.atom.dim as u64 {
                phi_blocks.push(RatMatrix::diag(&diag));
                nilp_blocks.push(shift.clone());
            }
        }
        MatrixWD::new(
            q,
            RatMatrix::block_diag(&phi_blocks),
            RatMatrix::block_diag(&nilp_blocks),
        )
    }

    /// Representation on a `phi`- and `N`-stable subspace, in the given basis.
    pub fn restrict_to(&self, basis: &RatMatrix) -> Result<MatrixWD> {
        let phi = basis
            .solve(&self.phi.mul(basis))
            .ok_or(Error::NotSubrepresentation)?;
        let nilp = basis
            .solve(&self.nilp.mul(basis))
            .ok_or(Error::NotSubrepresentation)?;
        MatrixWD::new(self.q, phi, nilp)
    }

    /// Representation on `V / sub`, together with the basis of the chosen
    /// complement whose images form the quotient basis.
    pub fn quotient_by(&self, sub: &RatMatrix) -> Result<(MatrixWD, RatMatrix)> {
        if !sub.spans(&self.phi.mul(sub)) || !sub.spans(&self.nilp.mul(sub)) {
            return Err(Error::NotSubrepresentation);
        }
        let n = self.dim();
        let k = sub.cols();
        let full = sub.hstack(&RatMatrix::identity(n)).column_space();
        let complement = full.select_columns(&(k..n).collect::<Vec<_>>());
        let change = full.inverse().ok_or(Error::NotSubrepresentation)?;
        let block = |m: &RatMatrix| {
            let c = change.mul(m).mul(&full);
            let mut out = RatMatrix::zeros(n - k, n - k);
            for i in 0..n - k {
                for j in 0..n - k {
                    out[(i, j)] = c[(k + i, k + j)].clone();
                }
            }
            out
        };
        Ok((
            MatrixWD::new(self.q, block(&self.phi), block(&self.nilp))?,
            complement,
        ))
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            q: self.q.get(),
            phi: self.phi.to_rows(),
            nilp: self.nilp.to_rows(),
        }
    }

    pub fn from_json(raw: &MatrixJson) -> Result<MatrixWD> {
        let (phi, nilp) = raw.matrices()?;
        MatrixWD::new(ResidueCard::new(raw.q)?, phi, nilp)
    }
}

fn label_sign(label: &str) -> Q {
    match label.strip_prefix(EIGENVALUE_LABEL_PREFIX).map(parse_q) {
        Some(Ok(x)) if x.is_negative() => -Q::one(),
        _ => Q::one(),
    }
}

/// Jordan type of a nilpotent matrix, block sizes in decreasing order. The
/// number of blocks of size at least `j` is `rank(N^(j-1)) - rank(N^j)`.
pub fn nilpotent_partition(nilp: &RatMatrix) -> Result<Vec<u32>> {
    if !nilp.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let n = nilp.rows();
    let mut ranks = vec![n];
    let mut power = RatMatrix::identity(n);
    while *ranks.last().unwrap() > 0 {
        power = power.mul(nilp);
        ranks.push(power.rank());
    }
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for (j, &count) in at_least.iter().enumerate() {
        let longer = at_least.get(j + 1).copied().unwrap_or(0);
        parts.extend(std::iter::repeat_n(j as u32 + 1, count - longer));
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(parts)
}

/// Jordan type of a symbolic representation: each `Sp_s(X)` gives `dim X` blocks of size `s`.
pub fn symbolic_partition(a: &SymbolicWD) -> Vec<u32> {
    let mut parts: Vec<u32> = a
        .terms()
        .flat_map(|(k, m)| std::iter::repeat_n(k.s, (m * k.atom.dim as u64) as usize))
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Wire form: `{"q": int, "phi": [[frac]], "nilp": [[frac]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub q: u64,
    #[serde(with = "serde_q_grid")]
    pub phi: Vec<Vec<Q>>,
    #[serde(with = "serde_q_grid")]
    pub nilp: Vec<Vec<Q>>,
}

impl MatrixJson {
    pub fn matrices(&self) -> Result<(RatMatrix, RatMatrix)> {
        let phi = RatMatrix::from_rows(self.phi.clone())
            .ok_or_else(|| Error::Parse("ragged phi".into()))?;
        let nilp = RatMatrix::from_rows(self.nilp.clone())
            .ok_or_else(|| Error::Parse("ragged nilp".into()))?;
        Ok((phi, nilp))
    }
}

/// Eigenvalue-to-weight map used in reports.
pub fn weights_by_eigenvalue(m: &MatrixWD) -> Result<BTreeMap<String, i64>> {
    m.eigenvalues()
        .iter()
        .map(|(a, _)| Ok((fmt_q(a), m.eigenvalue_weight(a)?)))
        .collect()
}
