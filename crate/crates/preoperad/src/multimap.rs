//! Multilinear maps `A^(tensor n) -> A` as dense exact coefficient tables.
//!
//! A [`MultiMap`] of degree `n` over a `d`-dimensional module stores
//! `d^(n+1)` rationals: `T[k; i1,...,in]` is the coefficient of `e_k` in
//! `f(e_{i1},...,e_{in})`. The degree is kept as a signed integer because
//! derived operations (total composition of two degree-0 maps, for example)
//! land in negative virtual degrees, where the only element is zero; such a
//! value carries an empty table.
//!
//! Composition slots are 0-based: a map of degree `m` has slots
//! `0..=m-1`, and inserting a degree-`n` map into slot `i` yields degree
//! `m + n - 1`. The graded partial composition carries the sign
//! `(-1)^(i * (n-1))` on top of the plain insertion.

use crate::error::{Error, Result};
use crate::linalg::{parity_sign, Rat};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiMap {
    deg: i64,
    dim: usize,
    coeffs: Vec<Rat>,
}

impl MultiMap {
    /// Number of coefficients of a degree-`deg` table, `d^(deg+1)`.
    pub fn table_len(dim: usize, deg: usize) -> usize {
        dim.checked_pow(deg as u32 + 1)
            .expect("coefficient table size overflows usize")
    }

    /// The zero map of the given (possibly negative) degree.
    pub fn zero(deg: i64, dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        let coeffs = if deg >= 0 {
            vec![Rat::zero(); Self::table_len(dim, deg as usize)]
        } else {
            Vec::new()
        };
        MultiMap { deg, dim, coeffs }
    }

    pub fn from_coeffs(deg: usize, dim: usize, coeffs: Vec<Rat>) -> Result<Self> {
        let expected = Self::table_len(dim, deg);
        if coeffs.len() != expected {
            return Err(Error::Validation(format!(
                "coefficient table has {} entries, expected {expected}",
                coeffs.len()
            )));
        }
        Ok(MultiMap {
            deg: deg as i64,
            dim,
            coeffs,
        })
    }

    /// Canonical basis cochain: 1 at the given flat index, 0 elsewhere.
    pub fn basis(deg: usize, dim: usize, flat: usize) -> Self {
        let mut map = Self::zero(deg as i64, dim);
        map.coeffs[flat] = Rat::one();
        map
    }

    /// The unit: the degree-1 identity map `T[k; i] = [k == i]`.
    pub fn identity_map(dim: usize) -> Self {
        let mut map = Self::zero(1, dim);
        for i in 0..dim {
            map.coeffs[i * dim + i] = Rat::one();
        }
        map
    }

    /// Seeded random map with integer coefficients in `[-bound, bound]`,
    /// drawn in flat index order.
    pub fn random(deg: usize, dim: usize, rng: &mut SplitMix64, bound: u32) -> Self {
        assert!(bound >= 1, "bound must be at least 1");
        let mut map = Self::zero(deg as i64, dim);
        for c in map.coeffs.iter_mut() {
            let v = rng.int_in(bound);
            if v != 0 {
                *c = Rat::from_int(v);
            }
        }
        map
    }

    pub fn deg(&self) -> i64 {
        self.deg
    }

    /// Reduced degree `deg - 1`.
    pub fn reduced(&self) -> i64 {
        self.deg - 1
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Flat index of `(k; inputs)`: the output index `k` is the most
    /// significant base-`d` digit, inputs follow left to right.
    pub fn flatten(dim: usize, k: usize, inputs: &[usize]) -> usize {
        let mut idx = k;
        for &i in inputs {
            debug_assert!(i < dim);
            idx = idx * dim + i;
        }
        idx
    }

    /// Inverse of [`MultiMap::flatten`] for a degree-`deg` table.
    pub fn unflatten(dim: usize, deg: usize, flat: usize) -> (usize, Vec<usize>) {
        let mut rest = flat;
        let mut inputs = vec![0usize; deg];
        for t in (0..deg).rev() {
            inputs[t] = rest % dim;
            rest /= dim;
        }
        (rest, inputs)
    }

    pub fn coeff(&self, k: usize, inputs: &[usize]) -> &Rat {
        &self.coeffs[Self::flatten(self.dim, k, inputs)]
    }

    /// Value on a tuple of basis elements, as output coordinates.
    pub fn eval_basis(&self, inputs: &[usize]) -> Result<Vec<Rat>> {
        if self.deg != inputs.len() as i64 {
            return Err(Error::ArityMismatch {
                expected: self.deg,
                found: inputs.len() as i64,
            });
        }
        Ok((0..self.dim)
            .map(|k| self.coeff(k, inputs).clone())
            .collect())
    }

    /// Multilinear extension: value on coordinate vectors.
    pub fn eval(&self, args: &[&[Rat]]) -> Result<Vec<Rat>> {
        if self.deg != args.len() as i64 {
            return Err(Error::ArityMismatch {
                expected: self.deg,
                found: args.len() as i64,
            });
        }
        for a in args {
            if a.len() != self.dim {
                return Err(Error::DimMismatch {
                    expected: self.dim,
                    found: a.len(),
                });
            }
        }
        let n = args.len();
        let mut out = vec![Rat::zero(); self.dim];
        for (flat, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (k, inputs) = Self::unflatten(self.dim, n, flat);
            let mut term = c.clone();
            for (t, &i) in inputs.iter().enumerate() {
                if args[t][i].is_zero() {
                    term = Rat::zero();
                    break;
                }
                term *= &args[t][i];
            }
            if !term.is_zero() {
                out[k] += term;
            }
        }
        Ok(out)
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.deg != other.deg {
            return Err(Error::ArityMismatch {
                expected: self.deg,
                found: other.deg,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (o, v) in out.coeffs.iter_mut().zip(&other.coeffs) {
            if !v.is_zero() {
                *o += v;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (o, v) in out.coeffs.iter_mut().zip(&other.coeffs) {
            if !v.is_zero() {
                *o -= v;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = self.clone();
        if c.is_zero() {
            for o in out.coeffs.iter_mut() {
                *o = Rat::zero();
            }
        } else {
            for o in out.coeffs.iter_mut() {
                if !o.is_zero() {
                    *o *= c;
                }
            }
        }
        out
    }

    /// Multiply by `+1` or `-1`.
    pub fn signed(mut self, sign: i64) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        if sign == -1 {
            for c in self.coeffs.iter_mut() {
                if !c.is_zero() {
                    *c = -c.clone();
                }
            }
        }
        self
    }

    pub fn neg(&self) -> Self {
        self.clone().signed(-1)
    }

    /// Exact componentwise equality; errors on shape mismatch.
    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        self.check_same_shape(other)?;
        Ok(self.coeffs == other.coeffs)
    }

    /// Plain (unsigned) insertion of `g` into slot `slot` of `self`:
    /// the composite `f o (1^i (x) g (x) 1^(m-1-i))`.
    pub fn insert(&self, g: &Self, slot: usize) -> Result<Self> {
        if self.dim != g.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                found: g.dim,
            });
        }
        if self.deg < 1 || slot as i64 > self.deg - 1 {
            return Err(Error::SlotOutOfRange {
                slot,
                degree: self.deg,
            });
        }
        let d = self.dim;
        let m = self.deg as usize;
        let res_deg = self.deg + g.deg - 1;
        let mut out = Self::zero(res_deg, d);
        if g.deg < 0 {
            return Ok(out); // composing with the zero of negative degree
        }
        let n = g.deg as usize;
        let pow_post = d.pow((m - 1 - slot) as u32);
        let dn = d.pow(n as u32);

        // Group the nonzeros of g by output index s, keyed by input part.
        let mut g_by_s: Vec<Vec<(usize, &Rat)>> = vec![Vec::new(); d];
        for (gi, gv) in g.coeffs.iter().enumerate() {
            if !gv.is_zero() {
                g_by_s[gi / dn].push((gi % dn, gv));
            }
        }

        for (fi, fv) in self.coeffs.iter().enumerate() {
            if fv.is_zero() {
                continue;
            }
            let post = fi % pow_post;
            let hi = fi / pow_post;
            let s = hi % d;
            let pre = hi / d; // output digit of f plus the first `slot` inputs
            for &(mid, gv) in &g_by_s[s] {
                let out_idx = (pre * dn + mid) * pow_post + post;
                out.coeffs[out_idx] += fv * gv;
            }
        }
        Ok(out)
    }

    /// Graded partial composition: `(-1)^(slot * |g|)` times [`MultiMap::insert`].
    pub fn partial_compose(&self, g: &Self, slot: usize) -> Result<Self> {
        let unsigned = self.insert(g, slot)?;
        let result = unsigned.signed(parity_sign(slot as i64 * g.reduced()));
        // degree additivity: deg(f o_i g) = deg f + deg g - 1
        assert_eq!(result.deg, self.deg + g.deg - 1);
        Ok(result)
    }

    /// Coefficients rendered as exact decimal fraction strings, flat order.
    pub fn dump_coeffs(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::rat_int;

    fn rnd(deg: usize, dim: usize, seed: u64) -> MultiMap {
        MultiMap::random(deg, dim, &mut SplitMix64::new(seed), 3)
    }

    #[test]
    fn flatten_roundtrip_small() {
        for d in 1..=3usize {
            for n in 0..=3usize {
                for flat in 0..MultiMap::table_len(d, n) {
                    let (k, inputs) = MultiMap::unflatten(d, n, flat);
                    assert_eq!(MultiMap::flatten(d, k, &inputs), flat);
                }
            }
        }
    }

    #[test]
    fn table_len_counts_basis() {
        assert_eq!(MultiMap::table_len(2, 2), 8);
        assert_eq!(MultiMap::table_len(2, 0), 2);
        assert_eq!(MultiMap::table_len(3, 1), 9);
    }

    #[test]
    fn identity_map_evaluates_to_argument() {
        let id = MultiMap::identity_map(3);
        for i in 0..3 {
            let v = id.eval_basis(&[i]).unwrap();
            for (k, c) in v.iter().enumerate() {
                assert_eq!(*c, rat_int((k == i) as i64));
            }
        }
    }

    #[test]
    fn unit_axioms_on_random_maps() {
        let id = MultiMap::identity_map(2);
        for seed in 0..5 {
            for deg in 0..=3usize {
                let f = rnd(deg, 2, seed);
                assert_eq!(id.partial_compose(&f, 0).unwrap(), f);
                for i in 0..deg {
                    assert_eq!(f.partial_compose(&id, i).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn insert_arity_bookkeeping() {
        let mu = fixtures::dual_numbers().mu_of();
        assert_eq!(mu.insert(&mu, 0).unwrap().deg(), 3);
        let a = rnd(0, 2, 9);
        assert_eq!(mu.insert(&a, 1).unwrap().deg(), 1);
    }

    #[test]
    fn insert_arity_zero_right_operand() {
        // insert(mu, a, 1) is x |-> mu(x, a)
        let alg = fixtures::dual_numbers();
        let mu = alg.mu_of();
        let a = rnd(0, 2, 42);
        let right = mu.insert(&a, 1).unwrap();
        let a_vec = a.eval_basis(&[]).unwrap();
        for x in 0..2 {
            let expected = alg.multiply(
                &[rat_int((x == 0) as i64), rat_int((x == 1) as i64)],
                &a_vec,
            );
            assert_eq!(right.eval_basis(&[x]).unwrap(), expected);
        }
    }

    #[test]
    fn partial_compose_signs() {
        let mu = fixtures::dual_numbers().mu_of();
        // |a| = -1, slot 0: exponent 0, sign +1
        let a = rnd(0, 2, 3);
        assert_eq!(
            mu.partial_compose(&a, 0).unwrap(),
            mu.insert(&a, 0).unwrap()
        );
        // deg g = 2 so |g| = 1, slot 1: sign (-1)^(1*1) = -1
        let g = rnd(2, 2, 4);
        assert_eq!(
            mu.partial_compose(&g, 1).unwrap(),
            mu.insert(&g, 1).unwrap().neg()
        );
    }

    #[test]
    fn slot_out_of_range() {
        let mu = fixtures::dual_numbers().mu_of();
        let f = rnd(1, 2, 1);
        assert!(matches!(
            mu.insert(&f, 2),
            Err(Error::SlotOutOfRange { .. })
        ));
        let a = rnd(0, 2, 1);
        assert!(matches!(
            a.insert(&f, 0),
            Err(Error::SlotOutOfRange { .. })
        ));
    }

    #[test]
    fn dim_mismatch_rejected() {
        let mu2 = fixtures::dual_numbers().mu_of();
        let mu3 = fixtures::upper_triangular().mu_of();
        assert!(matches!(
            mu2.insert(&mu3, 0),
            Err(Error::DimMismatch { .. })
        ));
        assert!(matches!(
            mu2.add(&mu3),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn eval_is_multilinear() {
        let f = rnd(2, 2, 11);
        let u = vec![rat_int(1), rat_int(-2)];
        let v = vec![rat_int(3), rat_int(1)];
        let w = vec![rat_int(2), rat_int(5)];
        let combo: Vec<Rat> = u
            .iter()
            .zip(&v)
            .map(|(a, b)| a * rat_int(2) + b * rat_int(3))
            .collect();
        let lhs = f.eval(&[&combo, &w]).unwrap();
        let left = f.eval(&[&u, &w]).unwrap();
        let right = f.eval(&[&v, &w]).unwrap();
        let rhs: Vec<Rat> = left
            .iter()
            .zip(&right)
            .map(|(a, b)| a * rat_int(2) + b * rat_int(3))
            .collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_on_basis_reproduces_table() {
        let f = rnd(2, 2, 13);
        for i in 0..2 {
            for j in 0..2 {
                let v = f.eval_basis(&[i, j]).unwrap();
                for (k, c) in v.iter().enumerate() {
                    assert_eq!(c, f.coeff(k, &[i, j]));
                }
            }
        }
    }

    #[test]
    fn module_operations() {
        let f = rnd(2, 2, 17);
        let zero = MultiMap::zero(2, 2);
        assert_eq!(f.add(&zero).unwrap(), f);
        assert_eq!(f.scale(&rat_int(1)), f);
        assert!(f.sub(&f).unwrap().is_zero());
        assert!(f.try_eq(&f).unwrap());
        assert!(matches!(
            f.try_eq(&rnd(1, 2, 17)),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn random_is_deterministic_and_bounded() {
        let a = rnd(2, 3, 99);
        let b = rnd(2, 3, 99);
        assert_eq!(a, b);
        let c = MultiMap::random(2, 2, &mut SplitMix64::new(5), 1);
        for v in c.coeffs() {
            assert!(*v == rat_int(-1) || v.is_zero() || *v == rat_int(1));
        }
    }

    #[test]
    fn negative_degree_zero_composes_to_zero() {
        let mu = fixtures::dual_numbers().mu_of();
        let z = MultiMap::zero(-1, 2);
        let out = mu.insert(&z, 0).unwrap();
        assert_eq!(out.deg(), 0);
        assert!(out.is_zero());
    }
}
