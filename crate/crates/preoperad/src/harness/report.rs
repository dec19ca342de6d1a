//! Machine- and human-readable run reports.
//!
//! The JSON layout is stable: a top-level object with `meta`, `verdicts` and
//! `tables`. Identical invocations on identical inputs produce byte-identical
//! JSON except for `meta.timing_ms`.

use serde::Serialize;

use crate::multimap::MultiMap;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub meta: Meta,
    pub verdicts: Vec<Verdict>,
    pub tables: Tables,
}

#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub fixture: String,
    pub algebra: String,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_arity: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_mode: Option<String>,
    /// Random multiplication used for the run, when one was drawn.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub random_mu: Option<MapDump>,
    /// Wall-clock milliseconds; excluded from determinism guarantees.
    pub timing_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub samples: u64,
    /// Individual exact equalities evaluated (one sample can contribute many).
    pub checks: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    pub fn passed(name: &str, samples: u64, checks: u64) -> Self {
        Verdict {
            name: name.into(),
            pass: true,
            samples,
            checks,
            counterexample: None,
        }
    }

    pub fn failed(name: &str, samples: u64, checks: u64, ce: Counterexample) -> Self {
        Verdict {
            name: name.into(),
            pass: false,
            samples,
            checks,
            counterexample: Some(ce),
        }
    }
}

/// Everything needed to replay a failed check: the seed, the sample index in
/// the identity's own stream, and the full inputs.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub seed: u64,
    pub sample_index: u64,
    pub detail: String,
    pub inputs: Vec<MapDump>,
}

/// A multilinear map in wire form: degree, dimension and the exact
/// coefficient table in flat (output index slowest) order.
#[derive(Debug, Clone, Serialize)]
pub struct MapDump {
    pub label: String,
    pub degree: i64,
    pub dim: usize,
    pub coeffs: Vec<String>,
}

impl MapDump {
    pub fn new(label: &str, map: &MultiMap) -> Self {
        MapDump {
            label: label.into(),
            degree: map.deg(),
            dim: map.dim(),
            coeffs: map.dump_coeffs(),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Tables {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<CohomologyTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gerstenhaber: Option<GerstenhaberTable>,
    /// First nonzero coefficient of the formal associator, when the input
    /// was refused as not formally associative.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub associator_witness: Option<AssociatorWitness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CohomologyTable {
    pub max_degree: usize,
    /// `dims[n]` is `dim H^n` for `0 <= n <= max_degree`.
    pub dims: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<DegreeBasis>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeBasis {
    pub degree: usize,
    pub representatives: Vec<MapDump>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GerstenhaberTable {
    /// Names of the basis classes per degree, `H^n[j]`.
    pub classes: Vec<String>,
    pub cup: Vec<ProductEntry>,
    pub bracket: Vec<ProductEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub degree: i64,
    /// Coordinates over the basis of the result degree ("0" for the zero
    /// class in a degree with no classes, or below degree 0).
    pub coords: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AssociatorWitness {
    pub i: usize,
    pub j: usize,
    pub l: usize,
    pub k: usize,
    pub value: String,
}

impl Report {
    pub fn new(meta: Meta) -> Self {
        Report {
            meta,
            verdicts: Vec::new(),
            tables: Tables::default(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    /// CLI exit code: 0 all pass, 1 any mathematical violation or refusal.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let m = &self.meta;
        out.push_str(&format!(
            "{} {} — {}\nalgebra: {} (dim {}) from {}\n",
            m.tool, m.version, m.command, m.algebra, m.dim, m.fixture
        ));
        if let Some(seed) = m.seed {
            out.push_str(&format!(
                "seed {seed}, samples {}, max arity {}, coefficient bound {}\n",
                m.samples.unwrap_or(0),
                m.max_arity.unwrap_or(0),
                m.bound.unwrap_or(0)
            ));
        }
        if let Some(n) = m.max_degree {
            out.push_str(&format!("max degree {n}\n"));
        }
        if let Some(mode) = &m.mu_mode {
            out.push_str(&format!("multiplication: {mode}\n"));
        }
        out.push('\n');
        for v in &self.verdicts {
            out.push_str(&format!(
                "{:<36} {} ({} samples, {} checks)\n",
                v.name,
                if v.pass { "pass" } else { "FAIL" },
                v.samples,
                v.checks
            ));
            if let Some(ce) = &v.counterexample {
                out.push_str(&format!(
                    "    counterexample at seed {} sample {}: {}\n",
                    ce.seed, ce.sample_index, ce.detail
                ));
                for input in &ce.inputs {
                    out.push_str(&format!(
                        "    {} (degree {}): [{}]\n",
                        input.label,
                        input.degree,
                        input.coeffs.join(", ")
                    ));
                }
            }
        }
        if let Some(w) = &self.tables.associator_witness {
            out.push_str(&format!(
                "\nassociator witness: basis triple ({},{},{}) maps onto basis {} with coefficient {}\n",
                w.i, w.j, w.l, w.k, w.value
            ));
        }
        if let Some(table) = &self.tables.cohomology {
            out.push('\n');
            for (n, dim) in table.dims.iter().enumerate() {
                out.push_str(&format!("dim H^{n} = {dim}\n"));
            }
            if let Some(bases) = &table.basis {
                for db in bases {
                    for (idx, rep) in db.representatives.iter().enumerate() {
                        out.push_str(&format!(
                            "H^{}[{}] representative: [{}]\n",
                            db.degree,
                            idx,
                            rep.coeffs.join(", ")
                        ));
                    }
                }
            }
        }
        if let Some(table) = &self.tables.gerstenhaber {
            out.push_str(&format!(
                "\nbasis classes: {}\n",
                table.classes.join(", ")
            ));
            out.push_str("cup products:\n");
            for e in &table.cup {
                out.push_str(&format!(
                    "  {} u {} = ({}) in degree {}\n",
                    e.left,
                    e.right,
                    e.coords.join(", "),
                    e.degree
                ));
            }
            out.push_str("brackets:\n");
            for e in &table.bracket {
                out.push_str(&format!(
                    "  [{}, {}] = ({}) in degree {}\n",
                    e.left,
                    e.right,
                    e.coords.join(", "),
                    e.degree
                ));
            }
        }
        out.push_str(&format!(
            "\n{} in {} ms\n",
            if self.all_pass() {
                "all checks passed"
            } else {
                "CHECKS FAILED"
            },
            m.timing_ms
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::multimap::MultiMap;
    use crate::rng::SplitMix64;

    fn meta() -> Meta {
        Meta {
            tool: "preoperad".into(),
            version: "0.0.0".into(),
            command: "identities".into(),
            fixture: "inline".into(),
            algebra: "dual-numbers".into(),
            dim: 2,
            seed: Some(5),
            samples: Some(10),
            max_arity: Some(3),
            bound: Some(3),
            max_degree: None,
            mu_mode: None,
            random_mu: None,
            timing_ms: 0,
        }
    }

    #[test]
    fn failure_reports_render_in_both_formats() {
        let _ = fixtures::dual_numbers();
        let f = MultiMap::random(2, 2, &mut SplitMix64::new(5), 3);
        let mut report = Report::new(meta());
        report.verdicts.push(Verdict::failed(
            "some-identity",
            4,
            4,
            Counterexample {
                seed: 5,
                sample_index: 3,
                detail: "lhs != rhs".into(),
                inputs: vec![MapDump::new("f", &f)],
            },
        ));
        assert_eq!(report.exit_code(), 1);

        let text = report.render_text();
        assert!(text.contains("some-identity"));
        assert!(text.contains("FAIL"));
        assert!(text.contains("counterexample at seed 5 sample 3"));
        assert!(text.contains("f (degree 2)"));

        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["verdicts"][0]["counterexample"]["sample_index"], 3);
        assert_eq!(
            json["verdicts"][0]["counterexample"]["inputs"][0]["coeffs"]
                .as_array()
                .unwrap()
                .len(),
            8
        );
    }
}
