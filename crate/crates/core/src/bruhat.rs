//! Counting `P(F_p) \ GL_n(F_p) / B(F_p)` by enumeration.
//!
//! Double cosets correspond to `B`-orbits on the partial flags of type `s`, so
//! we list every flag `U_1 ⊂ U_2 ⊂ ...` with `dim U_k = s_1 + ... + s_k` and
//! merge flags related by a generator of `B`. Independent of any formula.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub const MAX_N: u32 = 4;
pub const MAX_FIELD: u32 = 3;

type Vector = Vec<u32>;
/// A subspace, as the nonzero rows of its reduced row echelon form.
type Subspace = Vec<Vector>;
type Flag = Vec<Subspace>;

fn reduce(mut rows: Vec<Vector>, p: u32) -> Subspace {
    let n = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inverse_mod(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..n {
                    rows[r][c] = (rows[r][c] + p * p - factor * rows[rank][c] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

fn inverse_mod(a: u32, p: u32) -> u32 {
    (1..p)
        .find(|&b| a * b % p == 1)
        .expect("nonzero element of a prime field")
}

fn vectors(n: usize, p: u32) -> Vec<Vector> {
    let total = (p as usize).pow(n as u32);
    (0..total)
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let d = (k % p as usize) as u32;
                    k /= p as usize;
                    d
                })
                .collect()
        })
        .collect()
}

/// All subspaces of `F_p^n` of dimension `d` containing `inside`.
fn extensions(inside: &Subspace, d: usize, p: u32, all: &[Vector]) -> Vec<Subspace> {
    let mut frontier = vec![inside.clone()];
    for _ in inside.len()..d {
        let mut next: Vec<Subspace> = Vec::new();
        for base in &frontier {
            for v in all {
                let mut rows = base.clone();
                rows.push(v.clone());
                let span = reduce(rows, p);
                if span.len() == base.len() + 1 && !next.contains(&span) {
                    next.push(span);
                }
            }
        }
        frontier = next;
    }
    frontier
}

fn flags(s: &[u32], n: usize, p: u32) -> Vec<Flag> {
    let all = vectors(n, p);
    let mut dims = Vec::new();
    let mut acc = 0usize;
    for &part in &s[..s.len() - 1] {
        acc += part as usize;
        dims.push(acc);
    }
    let mut out: Vec<Flag> = vec![Vec::new()];
    for d in dims {
        let mut next = Vec::new();
        for flag in &out {
            let inside = flag.last().cloned().unwrap_or_default();
            for ext in extensions(&inside, d, p, &all) {
                let mut f = flag.clone();
                f.push(ext);
                next.push(f);
            }
        }
        out = next;
    }
    out
}

/// Generators of the upper triangular Borel over `F_p`: elementary matrices
/// `I + E_ij` for `i < j` and one diagonal matrix per coordinate carrying a
/// generator of `F_p^*`.
fn borel_generators(n: usize, p: u32) -> Vec<Vec<Vector>> {
    let identity = |n: usize| -> Vec<Vector> {
        (0..n)
            .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
            .collect()
    };
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut g = identity(n);
            g[i][j] = 1;
            gens.push(g);
        }
    }
    if p > 2 {
        let root = (2..p)
            .find(|&g| (1..p - 1).all(|e| pow_mod(g, e, p) != 1))
            .expect("prime field has a primitive root");
        for i in 0..n {
            let mut g = identity(n);
            g[i][i] = root;
            gens.push(g);
        }
    }
    gens
}

fn pow_mod(b: u32, e: u32, p: u32) -> u32 {
    (0..e).fold(1, |acc, _| acc * b % p)
}

fn act(g: &[Vector], v: &Vector, p: u32) -> Vector {
    g.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<u32>() % p)
        .collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Number of double cosets `P \ GL_n(F_p) / B` for the standard parabolic `P`
/// with block sizes `s`.
pub fn bruhat_oracle(n: u32, s: &[u32], p: u32) -> Result<u64> {
    if n == 0 || s.contains(&0) || s.iter().sum::<u32>() != n {
        return Err(Error::InvalidSegments(format!(
            "{s:?} is not a composition of {n}"
        )));
    }
    if n > MAX_N || !(2..=MAX_FIELD).contains(&p) {
        return Err(Error::InstanceTooLarge(format!(
            "n = {n}, field size {p}; supported n <= {MAX_N} and field size 2 or 3"
        )));
    }
    let n = n as usize;
    let all = flags(s, n, p);
    let index: HashMap<&Flag, usize> = all.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut parent: Vec<usize> = (0..all.len()).collect();
    for g in borel_generators(n, p) {
        for (i, flag) in all.iter().enumerate() {
            let image: Flag = flag
                .iter()
                .map(|sub| reduce(sub.iter().map(|v| act(&g, v, p)).collect(), p))
                .collect();
            let j = index[&image];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let roots = (0..all.len())
        .filter(|&i| find(&mut parent, i) == i)
        .count();
    Ok(roots as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn examples() {
        assert_eq!(bruhat_oracle(2, &[1, 1], 2).unwrap(), 2);
        assert_eq!(bruhat_oracle(3, &[2, 1], 2).unwrap(), 3);
        assert_eq!(bruhat_oracle(3, &[3], 2).unwrap(), 1);
        assert!(matches!(
            bruhat_oracle(5, &[5], 2),
            Err(Error::InstanceTooLarge(_))
        ));
        assert!(matches!(
            bruhat_oracle(2, &[2], 5),
            Err(Error::InstanceTooLarge(_))
        ));
        assert!(bruhat_oracle(3, &[2], 2).is_err());
    }

    #[test]
    fn flag_counts() {
        // |GL_3(F_2)| / |B| = 168 / 8
        assert_eq!(flags(&[1, 1, 1], 3, 2).len(), 21);
        // points of P^3(F_3)
        assert_eq!(flags(&[1, 3], 4, 3).len(), 40);
    }

    fn matrices(n: usize) -> Vec<Vec<Vector>> {
        vectors(n * n, 2)
            .into_iter()
            .map(|e| e.chunks(n).map(<[u32]>::to_vec).collect())
            .collect()
    }

    fn mul(a: &[Vector], b: &[Vector]) -> Vec<Vector> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum::<u32>() % 2)
                    .collect()
            })
            .collect()
    }

    /// Double cosets of GL_n(F_2) computed by multiplying out `P g B`.
    fn brute_double_cosets(s: &[u32]) -> usize {
        let n = s.iter().sum::<u32>() as usize;
        let invertible: Vec<_> = matrices(n)
            .into_iter()
            .filter(|m| reduce(m.clone(), 2).len() == n)
            .collect();
        let block = |i: usize| -> usize {
            let mut acc = 0;
            s.iter()
                .position(|&x| {
                    acc += x as usize;
                    i < acc
                })
                .unwrap()
        };
        let borel: Vec<_> = invertible
            .iter()
            .filter(|m| (0..n).all(|i| (0..i).all(|j| m[i][j] == 0)))
            .cloned()
            .collect();
        let parabolic: Vec<_> = invertible
            .iter()
            .filter(|m| (0..n).all(|i| (0..n).all(|j| block(i) <= block(j) || m[i][j] == 0)))
            .cloned()
            .collect();
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for g in &invertible {
            if seen.contains(g) {
                continue;
            }
            count += 1;
            for p in &parabolic {
                let pg = mul(p, g);
                for b in &borel {
                    seen.insert(mul(&pg, b));
                }
            }
        }
        count
    }

    #[test]
    fn agrees_with_direct_double_cosets() {
        for s in [
            vec![1, 1],
            vec![2],
            vec![1, 1, 1],
            vec![2, 1],
            vec![1, 2],
            vec![3],
        ] {
            let n = s.iter().sum();
            assert_eq!(
                bruhat_oracle(n, &s, 2).unwrap() as usize,
                brute_double_cosets(&s),
                "{s:?}"
            );
        }
    }
}
