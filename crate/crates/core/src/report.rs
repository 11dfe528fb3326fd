//! Full analysis report for one input set: everything the library computes,
//! in one serializable structure with a stable field order, plus a plain-text
//! rendering. Identical input and options produce byte-identical JSON.

use serde::{Deserialize, Serialize};

use crate::decomposition::{decompose_at, Decomposition, StabilizationCertificate};
use crate::error::Result;
use crate::hilbert::{parameterization, smooth_reg_bound, HilbertData, SingularityReport};
use crate::ideal::{self, GeneratorSet};
use crate::sumset::RawSet;
use crate::theorems::{verify_suite, RigidityReport, TheoremReport};

#[derive(Clone, Debug, Default)]
pub struct AnalysisOptions {
    /// Growth table length; defaults to `rho + 4`.
    pub s_max: Option<u64>,
    /// Generator degree cap; defaults to `rho + 1`.
    pub degree_cap: Option<u64>,
    /// Fold at which to report the decomposition; defaults to the
    /// stabilization threshold.
    pub decompose_at: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub raw: Vec<u64>,
    pub normal_form: Vec<u64>,
    pub shift: u64,
    pub scale: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub degree: u64,
    pub a_degree: u64,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub rendered: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSummary {
    pub degree_cap: u64,
    pub count: u64,
    pub generators: Vec<GeneratorRecord>,
}

impl IdealSummary {
    fn from_set(set: &GeneratorSet) -> Self {
        IdealSummary {
            degree_cap: set.degree_cap,
            count: set.generators.len() as u64,
            generators: set
                .generators
                .iter()
                .map(|g| GeneratorRecord {
                    degree: g.degree,
                    a_degree: g.a_degree,
                    alpha: g.binomial.alpha.clone(),
                    beta: g.binomial.beta.clone(),
                    rendered: g.binomial.render(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: InputEcho,
    pub growth_table: Vec<u64>,
    pub hilbert: HilbertData,
    pub singularities: SingularityReport,
    pub parameterization: Vec<(u64, u64)>,
    pub smooth_reg_bound: Option<u64>,
    pub decomposition: Decomposition,
    pub stabilization: StabilizationCertificate,
    pub ideal: IdealSummary,
    pub cm: bool,
    pub bermejo_bound: Option<u64>,
    pub rigidity: RigidityReport,
    pub theorems: Vec<TheoremReport>,
}

/// Run the whole pipeline on a raw input set.
pub fn analyze(raw_elements: &[u64], opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let raw = RawSet::new(raw_elements.to_vec())?;
    let a = raw.normalize()?;
    let suite = verify_suite(&a)?;

    let s_max = opts.s_max.unwrap_or(suite.hilbert.rho + 4);
    let growth = a.growth_table(s_max)?;

    let generators = match opts.degree_cap {
        Some(cap) if cap != suite.generators.degree_cap => ideal::minimal_generators(&a, cap)?,
        _ => suite.generators.clone(),
    };

    let fold = opts
        .decompose_at
        .unwrap_or(suite.stabilization.sigma_empirical)
        .max(1);
    let decomposition = decompose_at(&a, fold)?;

    Ok(AnalysisReport {
        input: InputEcho {
            raw: raw.elements().to_vec(),
            normal_form: a.elements().to_vec(),
            shift: a.shift(),
            scale: a.scale(),
        },
        growth_table: growth.values,
        hilbert: suite.hilbert,
        singularities: suite.singularities,
        parameterization: parameterization(&a),
        smooth_reg_bound: smooth_reg_bound(&a)?,
        decomposition,
        stabilization: suite.stabilization,
        ideal: IdealSummary::from_set(&generators),
        cm: suite.cm,
        bermejo_bound: suite.bermejo_bound,
        rigidity: suite.rigidity,
        theorems: suite.reports,
    })
}

fn render_point_pair(p: &(u64, u64)) -> String {
    match p {
        (0, b) => format!("v^{b}"),
        (a, 0) => format!("u^{a}"),
        (a, b) => format!("u^{a} v^{b}"),
    }
}

impl AnalysisReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let set = |v: &[u64]| {
            let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", s.join(","))
        };
        out.push_str(&format!("input           {}\n", set(&self.input.raw)));
        out.push_str(&format!(
            "normal form     {}  (shift {}, scale {})\n",
            set(&self.input.normal_form),
            self.input.shift,
            self.input.scale
        ));
        let growth: Vec<String> = self.growth_table.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!(
            "growth          |sA| for s = 0..{}: {}\n",
            self.growth_table.len() - 1,
            growth.join(", ")
        ));
        let c = self.hilbert.hp_const;
        let hp = if c < 0 {
            format!("{}s - {}", self.hilbert.hp_slope, -c)
        } else {
            format!("{}s + {}", self.hilbert.hp_slope, c)
        };
        out.push_str(&format!(
            "hilbert         HP(s) = {hp}, regularity index r = {}, rho bound = {}\n",
            self.hilbert.r, self.hilbert.rho
        ));
        out.push_str(&format!(
            "singularities   delta1 = {} ({}), delta2 = {} ({}), arithmetic genus = {}\n",
            self.singularities.delta1,
            if self.singularities.smooth1 {
                "smooth"
            } else {
                "singular"
            },
            self.singularities.delta2,
            if self.singularities.smooth2 {
                "smooth"
            } else {
                "singular"
            },
            self.singularities.pa
        ));
        let param: Vec<String> = self
            .parameterization
            .iter()
            .map(render_point_pair)
            .collect();
        out.push_str(&format!("parameterization ({})\n", param.join(", ")));
        if let Some(b) = self.smooth_reg_bound {
            out.push_str(&format!("smooth reg bound {b}\n"));
        }
        out.push_str(&format!(
            "decomposition   s = {}: {}  ({})\n",
            self.decomposition.s,
            self.decomposition.render(),
            if self.decomposition.valid {
                "valid".to_string()
            } else {
                format!("invalid: {:?}", self.decomposition.reason)
            }
        ));
        out.push_str(&format!(
            "stabilization   sigma = {} (formula {}, window {}..{})\n",
            self.stabilization.sigma_empirical,
            self.stabilization.sigma_formula,
            self.stabilization.window.0,
            self.stabilization.window.1
        ));
        out.push_str(&format!(
            "ideal           {} minimal generators up to degree {}:\n",
            self.ideal.count, self.ideal.degree_cap
        ));
        for g in &self.ideal.generators {
            out.push_str(&format!(
                "                  {}   [degree {}, A-degree {}]\n",
                g.rendered, g.degree, g.a_degree
            ));
        }
        out.push_str(&format!("cohen-macaulay  {}", self.cm));
        if let Some(b) = self.bermejo_bound {
            out.push_str(&format!(
                "; CM regularity bound {b}, r + 1 = {}",
                self.hilbert.r + 1
            ));
        }
        out.push('\n');
        if self.rigidity.is_initial_segment {
            out.push_str("rigidity        arithmetic progression / rational normal curve\n");
        } else {
            out.push_str("rigidity        not an arithmetic progression\n");
        }
        out.push_str("theorems\n");
        for t in &self.theorems {
            match &t.witness {
                None => out.push_str(&format!("                  {}: holds\n", t.id)),
                Some(w) => out.push_str(&format!("                  {}: FAILS ({w})\n", t.id)),
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analysis_report_round_trips() {
        let report = analyze(&[0, 2, 4, 5, 7], &AnalysisOptions::default()).unwrap();
        let json = serde_json::to_string_pretty(&report).unwrap();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);
    }

    #[test]
    fn analysis_is_deterministic() {
        let opts = AnalysisOptions::default();
        let a = serde_json::to_string(&analyze(&[0, 2, 4, 5, 7], &opts).unwrap()).unwrap();
        let b = serde_json::to_string(&analyze(&[0, 2, 4, 5, 7], &opts).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn analysis_notes_normalization() {
        let report = analyze(&[3, 5, 9], &AnalysisOptions::default()).unwrap();
        assert_eq!(report.input.normal_form, vec![0, 1, 3]);
        assert_eq!(report.input.shift, 3);
        assert_eq!(report.input.scale, 2);
        let text = report.render_text();
        assert!(text.contains("shift 3, scale 2"), "{text}");
    }

    #[test]
    fn options_override_defaults() {
        let report = analyze(
            &[0, 2, 4, 5, 7],
            &AnalysisOptions {
                s_max: Some(3),
                degree_cap: Some(3),
                decompose_at: Some(5),
            },
        )
        .unwrap();
        assert_eq!(report.growth_table, vec![1, 5, 12, 19]);
        assert_eq!(report.ideal.degree_cap, 3);
        assert_eq!(report.ideal.count, 6);
        assert_eq!(report.decomposition.s, 5);
        assert_eq!(report.decomposition.render(), "{0,2} ⊔ [4,33] ⊔ {35}");
    }
}
