//! The seeded identity catalog.
//!
//! Every check seeds its own SplitMix64 stream with the configured seed and
//! draws, per sample, first the degrees and then the coefficient tables of
//! its inputs, in argument order. A failure report therefore replays from
//! `(seed, sample_index)` alone. All comparisons are exact equalities of
//! full coefficient tables; there are no tolerances anywhere.

use crate::error::Result;
use crate::linalg::parity_sign;
use crate::multimap::MultiMap;
use crate::ops::{braces3, braces4, commutator, getzler_associator, total_compose, OperadContext};
use crate::rng::SplitMix64;

use super::report::{Counterexample, MapDump, Verdict};

#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub samples: u64,
    pub seed: u64,
    pub max_arity: u32,
    pub bound: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            samples: 200,
            seed: 0,
            max_arity: 3,
            bound: 3,
        }
    }
}

/// Draw a tuple of random maps: degrees first, then tables, in order.
fn draw_tuple(rng: &mut SplitMix64, dim: usize, cfg: &RunConfig, count: usize) -> Vec<MultiMap> {
    let degs: Vec<usize> = (0..count)
        .map(|_| rng.next_below(u64::from(cfg.max_arity) + 1) as usize)
        .collect();
    degs.into_iter()
        .map(|deg| MultiMap::random(deg, dim, rng, cfg.bound))
        .collect()
}

enum Outcome {
    Pass { checks: u64 },
    Mismatch { checks: u64, detail: String },
}

/// Run one identity over seeded samples of `arg_count` random maps.
fn sample_check(
    ctx: &OperadContext,
    cfg: &RunConfig,
    name: &str,
    labels: &[&str],
    body: impl Fn(&OperadContext, &[MultiMap]) -> Result<Outcome>,
) -> Result<Verdict> {
    let mut rng = SplitMix64::new(cfg.seed);
    let mut checks = 0u64;
    for s in 0..cfg.samples {
        let maps = draw_tuple(&mut rng, ctx.dim(), cfg, labels.len());
        match body(ctx, &maps)? {
            Outcome::Pass { checks: c } => checks += c,
            Outcome::Mismatch { checks: c, detail } => {
                checks += c;
                let inputs = labels
                    .iter()
                    .zip(&maps)
                    .map(|(l, m)| MapDump::new(l, m))
                    .collect();
                return Ok(Verdict::failed(
                    name,
                    s + 1,
                    checks,
                    Counterexample {
                        seed: cfg.seed,
                        sample_index: s,
                        detail,
                        inputs,
                    },
                ));
            }
        }
    }
    Ok(Verdict::passed(name, cfg.samples, checks))
}

fn outcome(holds: bool, checks: u64, detail: &str) -> Outcome {
    if holds {
        Outcome::Pass { checks }
    } else {
        Outcome::Mismatch {
            checks,
            detail: detail.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationCase {
    First,
    Middle,
    Last,
}

impl RelationCase {
    pub fn name(&self) -> &'static str {
        match self {
            RelationCase::First => "composition-relations-case-a",
            RelationCase::Middle => "composition-relations-case-b",
            RelationCase::Last => "composition-relations-case-c",
        }
    }
}

/// Check one case of the composition relations on seeded random triples,
/// sweeping every slot pair the case covers. Also returns the per-sample
/// pass stream so the two outer cases can be compared on identical samples.
pub fn comp_case(
    ctx: &OperadContext,
    cfg: &RunConfig,
    case: RelationCase,
) -> Result<(Verdict, Vec<bool>)> {
    let mut rng = SplitMix64::new(cfg.seed);
    let mut checks = 0u64;
    let mut per_sample = Vec::with_capacity(cfg.samples as usize);
    let mut verdict: Option<Verdict> = None;

    for s in 0..cfg.samples {
        let maps = draw_tuple(&mut rng, ctx.dim(), cfg, 3);
        let (h, f, g) = (&maps[0], &maps[1], &maps[2]);
        let sign = parity_sign(f.reduced() * g.reduced());
        let mut sample_ok = true;

        for i in 0..h.deg().max(0) as usize {
            let hf = h.partial_compose(f, i)?;
            let i = i as i64;
            let (lo, hi) = match case {
                RelationCase::First => (0, i - 1),
                RelationCase::Middle => (i, i + f.reduced()),
                RelationCase::Last => (i + f.deg(), h.reduced() + f.reduced()),
            };
            for j in lo.max(0)..=hi {
                let lhs = hf.partial_compose(g, j as usize)?;
                let rhs = match case {
                    RelationCase::First => h
                        .partial_compose(g, j as usize)?
                        .partial_compose(f, (i + g.reduced()) as usize)?
                        .signed(sign),
                    RelationCase::Middle => {
                        h.partial_compose(&f.partial_compose(g, (j - i) as usize)?, i as usize)?
                    }
                    RelationCase::Last => h
                        .partial_compose(g, (j - f.reduced()) as usize)?
                        .partial_compose(f, i as usize)?
                        .signed(sign),
                };
                checks += 1;
                if lhs != rhs {
                    sample_ok = false;
                    if verdict.is_none() {
                        let inputs = ["h", "f", "g"]
                            .iter()
                            .zip(&maps)
                            .map(|(l, m)| MapDump::new(l, m))
                            .collect();
                        verdict = Some(Verdict::failed(
                            case.name(),
                            s + 1,
                            checks,
                            Counterexample {
                                seed: cfg.seed,
                                sample_index: s,
                                detail: format!("relation fails at slots (i, j) = ({i}, {j})"),
                                inputs,
                            },
                        ));
                    }
                }
            }
        }
        per_sample.push(sample_ok);
    }
    let verdict =
        verdict.unwrap_or_else(|| Verdict::passed(case.name(), cfg.samples, checks));
    Ok((verdict, per_sample))
}

/// The first and last composition-relation cases are equivalent: their
/// verdict streams must agree sample by sample on identical inputs.
pub fn case_equivalence(seed: u64, first: &[bool], last: &[bool]) -> Verdict {
    let agree = first == last;
    let samples = first.len() as u64;
    if agree {
        Verdict::passed("case-a-c-equivalence", samples, samples)
    } else {
        let idx = first
            .iter()
            .zip(last)
            .position(|(a, c)| a != c)
            .unwrap_or(0);
        Verdict::failed(
            "case-a-c-equivalence",
            samples,
            samples,
            Counterexample {
                seed,
                sample_index: idx as u64,
                detail: "case (a) and case (c) verdicts diverge on the same sample".into(),
                inputs: Vec::new(),
            },
        )
    }
}

/// Unit axioms: the unit composes trivially on either side, at every slot.
pub fn unit_axioms(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    sample_check(ctx, cfg, "unit-axioms", &["f"], |ctx, maps| {
        let f = &maps[0];
        let mut checks = 1;
        if ctx.unit().partial_compose(f, 0)? != *f {
            return Ok(outcome(false, checks, "unit o_0 f != f"));
        }
        for i in 0..f.deg().max(0) as usize {
            checks += 1;
            if f.partial_compose(ctx.unit(), i)? != *f {
                return Ok(outcome(false, checks, &format!("f o_{i} unit != f")));
            }
        }
        Ok(Outcome::Pass { checks })
    })
}

fn getzler(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    sample_check(ctx, cfg, "getzler-identity", &["h", "f", "g"], |_, m| {
        let (h, f, g) = (&m[0], &m[1], &m[2]);
        let lhs = getzler_associator(h, f, g)?;
        let rhs = braces3(h, f, g)?
            .add(&braces3(h, g, f)?.signed(parity_sign(f.reduced() * g.reduced())))?;
        Ok(outcome(
            lhs == rhs,
            1,
            "(h.f).g - h.(f.g) != {h,f,g} + (-1)^(|f||g|) {h,g,f}",
        ))
    })
}

fn gerstenhaber_symmetry(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    sample_check(ctx, cfg, "gerstenhaber-symmetry", &["h", "f", "g"], |_, m| {
        let (h, f, g) = (&m[0], &m[1], &m[2]);
        let lhs = getzler_associator(h, f, g)?;
        let rhs =
            getzler_associator(h, g, f)?.signed(parity_sign(f.reduced() * g.reduced()));
        Ok(outcome(
            lhs == rhs,
            1,
            "(h,f,g) != (-1)^(|f||g|) (h,g,f)",
        ))
    })
}

fn commutator_antisymmetry(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    sample_check(ctx, cfg, "commutator-antisymmetry", &["f", "g"], |_, m| {
        let (f, g) = (&m[0], &m[1]);
        let sum = commutator(f, g)?
            .add(&commutator(g, f)?.signed(parity_sign(f.reduced() * g.reduced())))?;
        Ok(outcome(
            sum.is_zero(),
            1,
            "[f,g] != -(-1)^(|f||g|) [g,f]",
        ))
    })
}

fn graded_jacobi(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    sample_check(ctx, cfg, "graded-jacobi", &["f", "g", "h"], |_, m| {
        let (f, g, h) = (&m[0], &m[1], &m[2]);
        let t1 = commutator(&commutator(f, g)?, h)?
            .signed(parity_sign(f.reduced() * h.reduced()));
        let t2 = commutator(&commutator(g, h)?, f)?
            .signed(parity_sign(g.reduced() * f.reduced()));
        let t3 = commutator(&commutator(h, f)?, g)?
            .signed(parity_sign(h.reduced() * g.reduced()));
        let sum = t1.add(&t2)?.add(&t3)?;
        Ok(outcome(sum.is_zero(), 1, "graded Jacobi sum is nonzero"))
    })
}

fn cup_via_tribraces(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    sample_check(ctx, cfg, "cup-via-tribraces", &["f", "g"], |ctx, m| {
        let (f, g) = (&m[0], &m[1]);
        let lhs = ctx.cup(f, g)?;
        let rhs = braces3(ctx.mu(), f, g)?.signed(parity_sign(f.deg()));
        Ok(outcome(lhs == rhs, 1, "f u g != (-1)^f {mu,f,g}"))
    })
}

// The cup associator equals the tetrabrace of the formal associator up to
// the sign (-1)^(deg g). The orientation is forced: at f = g = h = unit the
// associator expands to -mu^2 while every term of the tetrabrace sum is
// +mu^2, and exhaustive degree sweeps confirm (-1)^g across all triples.
fn cup_associator(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    let mu_sq = ctx.mu_squared();
    sample_check(
        ctx,
        cfg,
        "cup-associator-tetrabraces",
        &["f", "g", "h"],
        move |ctx, m| {
            let (f, g, h) = (&m[0], &m[1], &m[2]);
            let lhs = ctx
                .cup(&ctx.cup(f, g)?, h)?
                .sub(&ctx.cup(f, &ctx.cup(g, h)?)?)?;
            let rhs = braces4(&mu_sq, f, g, h)?.signed(parity_sign(g.deg()));
            Ok(outcome(
                lhs == rhs,
                1,
                "(f u g) u h - f u (g u h) != (-1)^g {mu^2,f,g,h}",
            ))
        },
    )
}

fn delta_alternate_form(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    sample_check(ctx, cfg, "delta-alternate-form", &["f"], |ctx, m| {
        let f = &m[0];
        let lhs = ctx.delta(f)?.neg();
        let rhs = ctx
            .cup(f, ctx.unit())?
            .add(&total_compose(f, ctx.mu())?)?
            .add(&ctx.cup(ctx.unit(), f)?.signed(parity_sign(f.reduced())))?;
        Ok(outcome(
            lhs == rhs,
            1,
            "-delta f != f u unit + f.mu + (-1)^|f| unit u f",
        ))
    })
}

fn delta_squared(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    sample_check(ctx, cfg, "delta-squared-associator", &["f"], |ctx, m| {
        let (twice, via) = ctx.delta_squared_check(&m[0])?;
        Ok(outcome(
            twice == via,
            1,
            "delta(delta f) != [f, mu.mu]",
        ))
    })
}

fn delta_commutator_derivation(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    sample_check(
        ctx,
        cfg,
        "delta-commutator-derivation",
        &["f", "g"],
        |ctx, m| {
            let (f, g) = (&m[0], &m[1]);
            let lhs = ctx.delta(&commutator(f, g)?)?;
            let rhs = commutator(&ctx.delta(f)?, g)?
                .signed(parity_sign(g.reduced()))
                .add(&commutator(f, &ctx.delta(g)?)?)?;
            Ok(outcome(
                lhs == rhs,
                1,
                "delta[f,g] != (-1)^|g| [delta f, g] + [f, delta g]",
            ))
        },
    )
}

fn cup_deviation_obstruction(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    let mu_sq = ctx.mu_squared();
    sample_check(
        ctx,
        cfg,
        "cup-deviation-obstruction",
        &["f", "g"],
        move |ctx, m| {
            let (f, g) = (&m[0], &m[1]);
            let lhs = ctx.dev_cup(f, g)?;
            let rhs = braces3(&mu_sq, f, g)?.signed(parity_sign(g.reduced()));
            Ok(outcome(
                lhs == rhs,
                1,
                "cup deviation of delta != (-1)^|g| {mu^2,f,g}",
            ))
        },
    )
}

fn total_deviation_cup_commutator(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    sample_check(
        ctx,
        cfg,
        "total-deviation-cup-commutator",
        &["f", "g"],
        |ctx, m| {
            let (f, g) = (&m[0], &m[1]);
            let lhs = ctx.dev_total(f, g)?.signed(parity_sign(g.reduced()));
            let rhs = ctx.cup(f, g)?.sub(
                &ctx.cup(g, f)?.signed(parity_sign(f.deg() * g.deg())),
            )?;
            Ok(outcome(
                lhs == rhs,
                1,
                "(-1)^|g| dev_total != f u g - (-1)^(fg) g u f",
            ))
        },
    )
}

fn braces_deviation_left_translation(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    sample_check(
        ctx,
        cfg,
        "braces-deviation-left-translation",
        &["h", "f", "g"],
        |ctx, m| {
            let (h, f, g) = (&m[0], &m[1], &m[2]);
            let lhs = ctx.dev_braces(h, f, g)?.signed(parity_sign(g.reduced()));
            let rhs = ctx
                .cup(&total_compose(h, f)?, g)?
                .add(
                    &ctx.cup(f, &total_compose(h, g)?)?
                        .signed(parity_sign(h.reduced() * f.deg())),
                )?
                .sub(&total_compose(h, &ctx.cup(f, g)?)?)?;
            Ok(outcome(
                lhs == rhs,
                1,
                "(-1)^|g| dev_braces != (h.f) u g + (-1)^(|h|f) f u (h.g) - h.(f u g)",
            ))
        },
    )
}

fn braces_deviation_commutator_form(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    sample_check(
        ctx,
        cfg,
        "braces-deviation-commutator-form",
        &["h", "f", "g"],
        |ctx, m| {
            let (h, f, g) = (&m[0], &m[1], &m[2]);
            let lhs = ctx.dev_braces(h, f, g)?.signed(parity_sign(g.reduced()));
            let rhs = ctx
                .cup(&commutator(h, f)?, g)?
                .add(
                    &ctx.cup(f, &commutator(h, g)?)?
                        .signed(parity_sign(h.reduced() * f.deg())),
                )?
                .sub(&commutator(h, &ctx.cup(f, g)?)?)?;
            Ok(outcome(
                lhs == rhs,
                1,
                "(-1)^|g| dev_braces != [h,f] u g + (-1)^(|h|f) f u [h,g] - [h, f u g]",
            ))
        },
    )
}

fn right_translation_derivation(ctx: &OperadContext, cfg: &RunConfig) -> Result<Verdict> {
    sample_check(
        ctx,
        cfg,
        "right-translation-derivation",
        &["f", "g", "h"],
        |ctx, m| {
            let (f, g, h) = (&m[0], &m[1], &m[2]);
            let lhs = total_compose(&ctx.cup(f, g)?, h)?;
            let rhs = ctx.cup(f, &total_compose(g, h)?)?.add(
                &ctx.cup(&total_compose(f, h)?, g)?
                    .signed(parity_sign(h.reduced() * g.deg())),
            )?;
            Ok(outcome(
                lhs == rhs,
                1,
                "(f u g).h != f u (g.h) + (-1)^(|h|g) (f.h) u g",
            ))
        },
    )
}

/// The axiom checks: all three composition-relation cases, the equivalence
/// of the two outer cases, and the unit axioms.
pub fn run_axiom_suite(ctx: &OperadContext, cfg: &RunConfig) -> Result<Vec<Verdict>> {
    let (va, stream_a) = comp_case(ctx, cfg, RelationCase::First)?;
    let (vb, _) = comp_case(ctx, cfg, RelationCase::Middle)?;
    let (vc, stream_c) = comp_case(ctx, cfg, RelationCase::Last)?;
    let equiv = case_equivalence(cfg.seed, &stream_a, &stream_c);
    let units = unit_axioms(ctx, cfg)?;
    Ok(vec![va, vb, vc, equiv, units])
}

/// The full identity catalog: axioms plus every derived identity.
pub fn run_identity_suite(ctx: &OperadContext, cfg: &RunConfig) -> Result<Vec<Verdict>> {
    let mut verdicts = run_axiom_suite(ctx, cfg)?;
    verdicts.push(getzler(ctx, cfg)?);
    verdicts.push(gerstenhaber_symmetry(ctx, cfg)?);
    verdicts.push(commutator_antisymmetry(ctx, cfg)?);
    verdicts.push(graded_jacobi(ctx, cfg)?);
    verdicts.push(cup_via_tribraces(ctx, cfg)?);
    verdicts.push(cup_associator(ctx, cfg)?);
    verdicts.push(delta_alternate_form(ctx, cfg)?);
    verdicts.push(delta_squared(ctx, cfg)?);
    verdicts.push(delta_commutator_derivation(ctx, cfg)?);
    verdicts.push(cup_deviation_obstruction(ctx, cfg)?);
    verdicts.push(total_deviation_cup_commutator(ctx, cfg)?);
    verdicts.push(braces_deviation_left_translation(ctx, cfg)?);
    verdicts.push(braces_deviation_commutator_form(ctx, cfg)?);
    verdicts.push(right_translation_derivation(ctx, cfg)?);
    Ok(verdicts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn small_cfg() -> RunConfig {
        RunConfig {
            samples: 25,
            seed: 0,
            max_arity: 3,
            bound: 3,
        }
    }

    #[test]
    fn catalog_passes_on_dimension_one() {
        // everything is scalar over the 1-dimensional algebra, so any sign
        // error in the graded bookkeeping shows up here immediately
        let ctx = OperadContext::new(fixtures::rationals());
        for v in run_identity_suite(&ctx, &small_cfg()).unwrap() {
            assert!(v.pass, "{} failed", v.name);
        }
    }

    #[test]
    fn catalog_passes_on_dual_numbers() {
        let ctx = OperadContext::new(fixtures::dual_numbers());
        for v in run_identity_suite(&ctx, &small_cfg()).unwrap() {
            assert!(v.pass, "{} failed", v.name);
        }
    }

    #[test]
    fn catalog_passes_with_nonassociative_multiplication() {
        // pre-operad identities hold for any mu; the obstruction identities
        // get a nonzero mu^2 here
        let ctx = OperadContext::new(fixtures::nonassociative());
        assert!(!ctx.mu_squared().is_zero());
        for v in run_identity_suite(&ctx, &small_cfg()).unwrap() {
            assert!(v.pass, "{} failed", v.name);
        }
    }

    #[test]
    fn max_arity_zero_is_vacuous_but_green() {
        let ctx = OperadContext::new(fixtures::dual_numbers());
        let cfg = RunConfig {
            max_arity: 0,
            samples: 10,
            ..small_cfg()
        };
        for v in run_identity_suite(&ctx, &cfg).unwrap() {
            assert!(v.pass, "{} failed", v.name);
        }
    }

    #[test]
    fn false_identities_fail_with_counterexamples() {
        // the cup product is not commutative on the nose, so asserting plain
        // commutativity must fail and carry a replayable counterexample
        let ctx = OperadContext::new(fixtures::dual_numbers());
        let cfg = small_cfg();
        let verdict = sample_check(&ctx, &cfg, "bogus-cup-commutativity", &["f", "g"], |ctx, m| {
            let lhs = ctx.cup(&m[0], &m[1])?;
            let rhs = ctx.cup(&m[1], &m[0])?;
            Ok(outcome(
                lhs.deg() == rhs.deg() && lhs == rhs,
                1,
                "f u g != g u f",
            ))
        })
        .unwrap();
        assert!(!verdict.pass);
        let ce = verdict.counterexample.expect("failure carries inputs");
        assert_eq!(ce.seed, cfg.seed);
        assert_eq!(ce.inputs.len(), 2);

        // replay: the recorded sample index reproduces the same inputs
        let mut rng = SplitMix64::new(ce.seed);
        let mut replayed = Vec::new();
        for _ in 0..=ce.sample_index {
            replayed = draw_tuple(&mut rng, ctx.dim(), &cfg, 2);
        }
        assert_eq!(replayed[0].dump_coeffs(), ce.inputs[0].coeffs);
        assert_eq!(replayed[1].dump_coeffs(), ce.inputs[1].coeffs);
    }

    #[test]
    fn verdict_streams_are_deterministic() {
        let ctx = OperadContext::new(fixtures::dual_numbers());
        let cfg = small_cfg();
        let (v1, s1) = comp_case(&ctx, &cfg, RelationCase::First).unwrap();
        let (v2, s2) = comp_case(&ctx, &cfg, RelationCase::First).unwrap();
        assert_eq!(v1.checks, v2.checks);
        assert_eq!(s1, s2);
    }
}
