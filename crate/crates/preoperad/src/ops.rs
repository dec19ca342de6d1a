//! Derived operations on graded multilinear maps: cup multiplication, total
//! composition, tri- and tetrabraces, the graded commutator, the
//! pre-coboundary operator and its derivation deviations.
//!
//! Sign exponents follow the graded conventions throughout: full degrees are
//! written `f`, reduced degrees `|f| = f - 1`, and every exponent is reduced
//! mod 2 over signed integers (so `(-1)^(-1) = -1`). Empty summation ranges
//! produce the zero map of the degree the bookkeeping assigns to the result.

use crate::algebra::AlgebraDef;
use crate::error::{Error, Result};
use crate::linalg::parity_sign;
use crate::multimap::MultiMap;

/// Total composition `f . g = sum_i f o_i g`, of degree `deg f + |g|`.
pub fn total_compose(f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
    if f.dim() != g.dim() {
        return Err(Error::DimMismatch {
            expected: f.dim(),
            found: g.dim(),
        });
    }
    let res_deg = f.deg() + g.reduced();
    let mut acc = MultiMap::zero(res_deg, f.dim());
    for i in 0..f.deg().max(0) as usize {
        acc = acc.add(&f.partial_compose(g, i)?)?;
    }
    assert_eq!(acc.deg(), f.deg() + g.reduced());
    Ok(acc)
}

/// Tribraces `{h, f, g}`: the double sum of `(h o_i f) o_j g` over
/// `0 <= i <= |h| - 1` and `i + deg f <= j <= |f| + |h|`, landing in degree
/// `deg h + |f| + |g|`.
pub fn braces3(h: &MultiMap, f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
    for m in [f, g] {
        if h.dim() != m.dim() {
            return Err(Error::DimMismatch {
                expected: h.dim(),
                found: m.dim(),
            });
        }
    }
    let res_deg = h.deg() + f.reduced() + g.reduced();
    let mut acc = MultiMap::zero(res_deg, h.dim());
    if f.deg() < 0 || g.deg() < 0 {
        return Ok(acc);
    }
    // i <= |h| - 1 = deg h - 2
    let mut i = 0i64;
    while i <= h.deg() - 2 {
        let hf = h.partial_compose(f, i as usize)?;
        let lo = i + f.deg();
        let hi = f.reduced() + h.reduced();
        for j in lo..=hi {
            acc = acc.add(&hf.partial_compose(g, j as usize)?)?;
        }
        i += 1;
    }
    assert_eq!(acc.deg(), h.deg() + f.reduced() + g.reduced());
    Ok(acc)
}

/// Tetrabraces `{h, f, g, b}`: the triple sum of `((h o_i f) o_j g) o_k b`
/// over `i <= |h| - 2`, `i + deg f <= j <= |h| + |f| - 1` and
/// `j + deg g <= k <= |h| + |f| + |g|`.
pub fn braces4(h: &MultiMap, f: &MultiMap, g: &MultiMap, b: &MultiMap) -> Result<MultiMap> {
    for m in [f, g, b] {
        if h.dim() != m.dim() {
            return Err(Error::DimMismatch {
                expected: h.dim(),
                found: m.dim(),
            });
        }
    }
    let res_deg = h.deg() + f.reduced() + g.reduced() + b.reduced();
    let mut acc = MultiMap::zero(res_deg, h.dim());
    if f.deg() < 0 || g.deg() < 0 || b.deg() < 0 {
        return Ok(acc);
    }
    let mut i = 0i64;
    while i <= h.deg() - 3 {
        let hf = h.partial_compose(f, i as usize)?;
        for j in (i + f.deg())..=(h.reduced() + f.reduced() - 1) {
            let hfg = hf.partial_compose(g, j as usize)?;
            for k in (j + g.deg())..=(h.reduced() + f.reduced() + g.reduced()) {
                acc = acc.add(&hfg.partial_compose(b, k as usize)?)?;
            }
        }
        i += 1;
    }
    assert_eq!(
        acc.deg(),
        h.deg() + f.reduced() + g.reduced() + b.reduced()
    );
    Ok(acc)
}

/// Graded commutator `[f, g] = f . g - (-1)^(|f||g|) g . f` in the
/// composition algebra; degree `deg f + |g|`.
pub fn commutator(f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
    let fg = total_compose(f, g)?;
    let gf = total_compose(g, f)?;
    fg.sub(&gf.signed(parity_sign(f.reduced() * g.reduced())))
}

/// The associator of the total composition,
/// `(h, f, g) = (h . f) . g - h . (f . g)`.
pub fn getzler_associator(h: &MultiMap, f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
    let left = total_compose(&total_compose(h, f)?, g)?;
    let right = total_compose(h, &total_compose(f, g)?)?;
    left.sub(&right)
}

/// A fixed degree-2 multiplication together with the unit, over a based
/// module. All mu-dependent derived operations hang off this context.
#[derive(Debug, Clone)]
pub struct OperadContext {
    alg: AlgebraDef,
    mu: MultiMap,
    unit: MultiMap,
}

impl OperadContext {
    /// Context with `mu` read off the algebra's structure constants.
    pub fn new(alg: AlgebraDef) -> Self {
        let mu = alg.mu_of();
        let unit = MultiMap::identity_map(alg.dim());
        OperadContext { alg, mu, unit }
    }

    /// Context with a caller-supplied `mu` (not necessarily associative).
    pub fn with_mu(alg: AlgebraDef, mu: MultiMap) -> Result<Self> {
        if mu.deg() != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                found: mu.deg(),
            });
        }
        if mu.dim() != alg.dim() {
            return Err(Error::DimMismatch {
                expected: alg.dim(),
                found: mu.dim(),
            });
        }
        let unit = MultiMap::identity_map(alg.dim());
        Ok(OperadContext { alg, mu, unit })
    }

    pub fn alg(&self) -> &AlgebraDef {
        &self.alg
    }

    pub fn mu(&self) -> &MultiMap {
        &self.mu
    }

    pub fn unit(&self) -> &MultiMap {
        &self.unit
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    fn check_dim(&self, m: &MultiMap) -> Result<()> {
        if m.dim() != self.dim() {
            return Err(Error::DimMismatch {
                expected: self.dim(),
                found: m.dim(),
            });
        }
        Ok(())
    }

    /// Cup multiplication `f u g = (-1)^(deg f) (mu o_0 f) o_(deg f) g`,
    /// of degree `deg f + deg g`.
    pub fn cup(&self, f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
        self.check_dim(f)?;
        self.check_dim(g)?;
        let res_deg = f.deg() + g.deg();
        if f.deg() < 0 || g.deg() < 0 {
            return Ok(MultiMap::zero(res_deg, self.dim()));
        }
        let left = self.mu.partial_compose(f, 0)?;
        let cup = left
            .partial_compose(g, f.deg() as usize)?
            .signed(parity_sign(f.deg()));
        assert_eq!(cup.deg(), res_deg);
        Ok(cup)
    }

    /// The formal associator `mu . mu`; zero exactly when the multiplication
    /// is associative.
    pub fn mu_squared(&self) -> MultiMap {
        total_compose(&self.mu, &self.mu).expect("mu composes with itself")
    }

    /// Pre-coboundary operator `delta f = -[f, mu]`, of degree `deg f + 1`.
    pub fn delta(&self, f: &MultiMap) -> Result<MultiMap> {
        self.delta_wrt(&self.mu, f)
    }

    /// Coboundary with respect to an arbitrary element: `delta_c f = -[f, c]`.
    pub fn delta_wrt(&self, c: &MultiMap, f: &MultiMap) -> Result<MultiMap> {
        self.check_dim(f)?;
        self.check_dim(c)?;
        let out = commutator(f, c)?.neg();
        assert_eq!(out.deg(), f.deg() + c.reduced());
        Ok(out)
    }

    /// Both routes of the coboundary-square identity:
    /// `(delta(delta f), [f, mu . mu])`. The two components must agree.
    pub fn delta_squared_check(&self, f: &MultiMap) -> Result<(MultiMap, MultiMap)> {
        let twice = self.delta(&self.delta(f)?)?;
        // -delta_{mu^2} f = [f, mu^2]
        let via_associator = commutator(f, &self.mu_squared())?;
        Ok((twice, via_associator))
    }

    /// Deviation of `delta` from being a right derivation of the total
    /// composition: `delta(f . g) - f . delta g - (-1)^|g| delta f . g`.
    pub fn dev_total(&self, f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
        self.check_dim(f)?;
        self.check_dim(g)?;
        let a = self.delta(&total_compose(f, g)?)?;
        let b = total_compose(f, &self.delta(g)?)?;
        let c = total_compose(&self.delta(f)?, g)?.signed(parity_sign(g.reduced()));
        a.sub(&b)?.sub(&c)
    }

    /// Deviation of `delta` from being a right derivation of the tribraces:
    /// `delta{h,f,g} - {h,f,delta g} - (-1)^|g| {h,delta f,g}
    ///  - (-1)^(|g|+|f|) {delta h,f,g}`.
    pub fn dev_braces(&self, h: &MultiMap, f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
        for m in [h, f, g] {
            self.check_dim(m)?;
        }
        let a = self.delta(&braces3(h, f, g)?)?;
        let b = braces3(h, f, &self.delta(g)?)?;
        let c = braces3(h, &self.delta(f)?, g)?.signed(parity_sign(g.reduced()));
        let d = braces3(&self.delta(h)?, f, g)?
            .signed(parity_sign(g.reduced() + f.reduced()));
        a.sub(&b)?.sub(&c)?.sub(&d)
    }

    /// Deviation of `delta` from being a derivation of the cup product:
    /// `delta(f u g) - f u delta g - (-1)^(deg g) delta f u g`.
    pub fn dev_cup(&self, f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
        self.check_dim(f)?;
        self.check_dim(g)?;
        let a = self.delta(&self.cup(f, g)?)?;
        let b = self.cup(f, &self.delta(g)?)?;
        let c = self.cup(&self.delta(f)?, g)?.signed(parity_sign(g.deg()));
        a.sub(&b)?.sub(&c)
    }
}
