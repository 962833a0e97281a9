//! Dense exact linear algebra over the rationals and univariate polynomials.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{fmt_q, q_int, Q};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn diag(entries: &[Q]) -> Self {
        let mut m = RatMatrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Builds from rows; `None` if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Q>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| q_int(x)).collect())
            .collect();
        RatMatrix::from_rows(rows).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors, all of length `n`.
    pub fn from_columns(n: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = RatMatrix::zeros(n, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), n, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    /// Elementary matrix with a one at `(row, col)`.
    pub fn unit(n: usize, row: usize, col: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        m[(row, col)] = Q::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        self.data
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[Q]>::to_vec)
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Q>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Q) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// `self - c * I`.
    pub fn shift(&self, c: &Q) -> RatMatrix {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            out[(i, i)] -= c;
        }
        out
    }

    pub fn pow(&self, e: usize) -> RatMatrix {
        assert!(self.is_square());
        let mut acc = RatMatrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = RatMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[RatMatrix]) -> RatMatrix {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = RatMatrix::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> RatMatrix {
        RatMatrix::from_columns(
            self.rows,
            &idx.iter().map(|&j| self.column(j)).collect::<Vec<_>>(),
        )
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            for j in col..m.cols {
                m[(row, j)] *= &inv;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for j in col..m.cols {
                        let delta = &f * &m[(row, j)];
                        m[(r, j)] -= delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, as the columns of the returned matrix.
    pub fn kernel(&self) -> RatMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Q::zero(); self.cols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            basis.push(v);
        }
        RatMatrix::from_columns(self.cols, &basis)
    }

    /// Basis of the column space: the pivot columns of `self`.
    pub fn column_space(&self) -> RatMatrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&RatMatrix::identity(n)).rref();
        if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
            return None;
        }
        let mut inv = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Solves `self * x = b` for a full-column-rank `self`; `None` if `b` is not in the column space.
    pub fn solve(&self, b: &RatMatrix) -> Option<RatMatrix> {
        assert_eq!(self.rows, b.rows);
        let k = self.cols;
        let (r, pivots) = self.hstack(b).rref();
        if pivots.iter().any(|&p| p >= k) || pivots.len() < k {
            return None;
        }
        let mut x = RatMatrix::zeros(k, b.cols);
        for i in 0..k {
            for j in 0..b.cols {
                x[(i, j)] = r[(i, k + j)].clone();
            }
        }
        Some(x)
    }

    /// Whether every column of `sub` lies in the column space of `self`.
    pub fn spans(&self, sub: &RatMatrix) -> bool {
        self.hstack(sub).rank() == self.rank()
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    /// Characteristic polynomial `det(x I - self)` by Faddeev-LeVerrier.
    pub fn charpoly(&self) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Q::zero(); n + 1];
        coeffs[n] = Q::one();
        let mut m = RatMatrix::zeros(n, n);
        for k in 1..=n {
            m = self.mul(&m).shift(&-coeffs[n - k + 1].clone());
            let am = self.mul(&m);
            coeffs[n - k] = -am.trace() / q_int(k as i64);
        }
        Poly::new(coeffs)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows).is_zero()
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Q;

    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(fmt_q).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Dense univariate polynomial, coefficients from the constant term up.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn one() -> Self {
        Poly::new(vec![Q::one()])
    }

    /// `x - root`.
    pub fn linear(root: &Q) -> Self {
        Poly::new(vec![-root.clone(), Q::one()])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lead(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_matrix(&self, m: &RatMatrix) -> RatMatrix {
        let n = m.rows();
        self.coeffs
            .iter()
            .rev()
            .fold(RatMatrix::zeros(n, n), |acc, c| {
                acc.mul(m).shift(&-c.clone())
            })
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(vec![]);
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Poly, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Q::zero);
        Poly::new((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn scale(&self, c: &Q) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dl = d.lead();
        let dd = d.degree();
        if rem.len() < d.coeffs.len() {
            return (Poly::new(vec![]), self.clone());
        }
        let mut quot = vec![Q::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &dl;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Returns `(g, u, v)` with `u*self + v*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Poly::one(), Poly::new(vec![]));
        let (mut v0, mut v1) = (Poly::new(vec![]), Poly::one());
        while !r1.is_zero() {
            let (quo, rem) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, rem);
            let u2 = u0.sub(&quo.mul(&u1));
            u0 = std::mem::replace(&mut u1, u2);
            let v2 = v0.sub(&quo.mul(&v1));
            v0 = std::mem::replace(&mut v1, v2);
        }
        let inv = r0.lead().recip();
        (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
    }

    /// Splits off all rational roots. Returns the roots with multiplicity
    /// (sorted ascending) and the remaining factor, which has no rational root.
    pub fn rational_roots(&self) -> (Vec<(Q, usize)>, Poly) {
        let mut rest = self.clone();
        let mut roots = Vec::new();
        let mut zero_mult = 0;
        while !rest.is_zero() && rest.coeffs[0].is_zero() {
            rest = Poly::new(rest.coeffs[1..].to_vec());
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((Q::zero(), zero_mult));
        }
        if rest.degree() >= 1 {
            let ints = rest.integer_coefficients();
            let lead = ints.last().unwrap().abs();
            let constant = ints[0].abs();
            let nums = divisors(&constant);
            let dens = divisors(&lead);
            let mut candidates: Vec<Q> = Vec::new();
            for p in &nums {
                for d in &dens {
                    let c = Q::new(p.clone(), d.clone());
                    candidates.push(c.clone());
                    candidates.push(-c);
                }
            }
            candidates.sort();
            candidates.dedup();
            for c in candidates {
                let lin = Poly::linear(&c);
                let mut mult = 0;
                while rest.degree() >= 1 {
                    let (quo, rem) = rest.div_rem(&lin);
                    if !rem.is_zero() {
                        break;
                    }
                    rest = quo;
                    mult += 1;
                }
                if mult > 0 {
                    roots.push((c, mult));
                }
            }
        }
        roots.sort();
        (roots, rest)
    }

    /// Primitive integer multiple of `self`.
    fn integer_coefficients(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Q::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        ints.into_iter().map(|c| c / &content).collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coef = if i > 0 && c.is_one() {
                String::new()
            } else if i > 0 && *c == -Q::one() {
                "-".to_string()
            } else {
                fmt_q(c)
            };
            parts.push(match i {
                0 => fmt_q(c),
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            });
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// Positive divisors of `n > 0` by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0;
        while m.is_multiple_of(&p) {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1;
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;

    #[test]
    fn rank_kernel_inverse() {
        let a = RatMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        assert!(a.inverse().is_none());

        let b = RatMatrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = b.inverse().unwrap();
        assert_eq!(b.mul(&inv), RatMatrix::identity(2));
        assert_eq!(RatMatrix::zeros(3, 3).kernel().cols(), 3);
    }

    #[test]
    fn solve_and_span() {
        let basis = RatMatrix::from_ints(&[&[1, 0], &[0, 1], &[1, 1]]);
        let target = RatMatrix::from_ints(&[&[2], &[3], &[5]]);
        let x = basis.solve(&target).unwrap();
        assert_eq!(basis.mul(&x), target);
        let off = RatMatrix::from_ints(&[&[1], &[1], &[0]]);
        assert!(basis.solve(&off).is_none());
        assert!(basis.spans(&target));
        assert!(!basis.spans(&off));
    }

    #[test]
    fn charpoly_and_roots() {
        let a = RatMatrix::from_ints(&[&[0, 1], &[-2, 3]]);
        let chi = a.charpoly();
        assert_eq!(chi, Poly::new(vec![q_int(2), q_int(-3), q_int(1)]));
        assert!(chi.eval_matrix(&a).is_zero());
        let (roots, rest) = chi.rational_roots();
        assert_eq!(roots, vec![(q_int(1), 1), (q_int(2), 1)]);
        assert_eq!(rest.degree(), 0);

        let d = RatMatrix::diag(&[q_int(1), q_frac(1, 4), q_frac(1, 4)]);
        let (roots, _) = d.charpoly().rational_roots();
        assert_eq!(roots, vec![(q_frac(1, 4), 2), (q_int(1), 1)]);

        let rot = RatMatrix::from_ints(&[&[0, -1], &[1, 0]]);
        let (roots, rest) = rot.charpoly().rational_roots();
        assert!(roots.is_empty());
        assert_eq!(rest.to_string(), "x^2 + 1");
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = Poly::linear(&q_int(1)).pow(2);
        let b = Poly::linear(&q_int(2));
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(g, Poly::one());
        assert_eq!(u.mul(&a).add(&v.mul(&b)), Poly::one());
    }

    #[test]
    fn divisors_small() {
        let ds: Vec<BigInt> = [1, 2, 3, 4, 6, 12].into_iter().map(BigInt::from).collect();
        assert_eq!(divisors(&BigInt::from(12)), ds);
    }
}
