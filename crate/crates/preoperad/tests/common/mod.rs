//! Test-only oracle: the textbook coboundary on `Hom(A^(x)n, A)`,
//!
//! `(b f)(a_0,...,a_n) = a_0 f(a_1,...,a_n)
//!     + sum_{i=1}^{n} (-1)^i f(a_0,...,a_{i-1} a_i,...,a_n)
//!     + (-1)^{n+1} f(a_0,...,a_{n-1}) a_n`,
//!
//! implemented directly from structure constants with its own digit
//! bookkeeping and its own rank elimination, so the cohomology dimensions it
//! produces share no code with the operator-driven complex they are checked
//! against.

use preoperad::{AlgebraDef, Rat};

/// Base-`d` digits of `x`, most significant first.
fn digits(d: usize, len: usize, mut x: usize) -> Vec<usize> {
    let mut v = vec![0usize; len];
    for slot in (0..len).rev() {
        v[slot] = x % d;
        x /= d;
    }
    v
}

fn undigits(d: usize, v: &[usize]) -> usize {
    v.iter().fold(0, |acc, &x| acc * d + x)
}

/// Apply the standard coboundary to a dense degree-`n` coefficient table
/// (flat layout: output index first, then inputs), producing the degree
/// `n + 1` table.
pub fn standard_coboundary(alg: &AlgebraDef, f: &[Rat], n: usize) -> Vec<Rat> {
    let d = alg.dim();
    assert_eq!(f.len(), d.pow(n as u32 + 1));
    let mut out = vec![Rat::zero(); d.pow(n as u32 + 2)];

    let f_at = |k: usize, tuple: &[usize]| -> &Rat {
        let mut idx = vec![k];
        idx.extend_from_slice(tuple);
        &f[undigits(d, &idx)]
    };

    for t in 0..d.pow(n as u32 + 1) {
        let a = digits(d, n + 1, t); // (a_0, ..., a_n)
        let mut value = vec![Rat::zero(); d];

        // a_0 * f(a_1..a_n)
        for k in 0..d {
            let c = f_at(k, &a[1..]);
            if c.is_zero() {
                continue;
            }
            for k2 in 0..d {
                let s = alg.c(a[0], k, k2);
                if !s.is_zero() {
                    value[k2] += c * s;
                }
            }
        }

        // sum over inner multiplications
        for i in 1..=n {
            let negative = i % 2 == 1;
            let mut args = Vec::with_capacity(n);
            args.extend_from_slice(&a[..i - 1]);
            args.push(0);
            args.extend_from_slice(&a[i + 1..]);
            for l in 0..d {
                let s = alg.c(a[i - 1], a[i], l);
                if s.is_zero() {
                    continue;
                }
                args[i - 1] = l;
                for k in 0..d {
                    let c = f_at(k, &args);
                    if c.is_zero() {
                        continue;
                    }
                    let term = c * s;
                    if negative {
                        value[k] -= term;
                    } else {
                        value[k] += term;
                    }
                }
            }
        }

        // (-1)^(n+1) f(a_0..a_{n-1}) * a_n
        let negative = (n + 1) % 2 == 1;
        for k in 0..d {
            let c = f_at(k, &a[..n]);
            if c.is_zero() {
                continue;
            }
            for k2 in 0..d {
                let s = alg.c(k, a[n], k2);
                if s.is_zero() {
                    continue;
                }
                let term = c * s;
                if negative {
                    value[k2] -= term;
                } else {
                    value[k2] += term;
                }
            }
        }

        for (k, v) in value.into_iter().enumerate() {
            let mut idx = vec![k];
            idx.extend_from_slice(&a);
            out[undigits(d, &idx)] = v;
        }
    }
    out
}

/// Plain forward elimination, no pivot normalization; independent of the
/// library's echelon code.
pub fn rank_of(mut rows: Vec<Vec<Rat>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        for r in row + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &rows[row][col];
            for c in col..cols {
                if !rows[row][c].is_zero() {
                    let sub = &factor * &rows[row][c];
                    rows[r][c] -= sub;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == rows.len() {
            break;
        }
    }
    rank
}

/// The matrix of the standard coboundary in degree `n`, one row per basis
/// cochain image (the transpose of the usual column convention; rank is
/// unaffected).
pub fn standard_coboundary_rows(alg: &AlgebraDef, n: usize) -> Vec<Vec<Rat>> {
    let d = alg.dim();
    let cols = d.pow(n as u32 + 1);
    (0..cols)
        .map(|t| {
            let mut f = vec![Rat::zero(); cols];
            f[t] = Rat::one();
            standard_coboundary(alg, &f, n)
        })
        .collect()
}

/// Cohomology dimensions `H^0 .. H^top` from the standard coboundary alone.
pub fn oracle_dims(alg: &AlgebraDef, top: usize) -> Vec<usize> {
    let d = alg.dim();
    let ranks: Vec<usize> = (0..=top)
        .map(|n| rank_of(standard_coboundary_rows(alg, n)))
        .collect();
    (0..=top)
        .map(|n| {
            let dim_cn = d.pow(n as u32 + 1);
            let incoming = if n == 0 { 0 } else { ranks[n - 1] };
            dim_cn - ranks[n] - incoming
        })
        .collect()
}
