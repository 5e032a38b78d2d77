use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use seqideal::{Field, Form, UniPoly};

/// A polynomial as JSON: `coeffs[i]` multiplies `x^i` (`x^i z^(degree-i)`
/// for forms), written as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub degree: usize,
    pub coeffs: Vec<String>,
    pub text: String,
}

impl PolyJson {
    pub fn from_form<F: Field>(f: &Form<F>) -> Self {
        let k = f.field();
        let coeffs = if f.is_zero() {
            vec!["0".to_string()]
        } else {
            f.coeffs().iter().map(|c| k.format(c)).collect()
        };
        PolyJson { degree: f.degree(), coeffs, text: f.to_string() }
    }

    pub fn from_unipoly<F: Field>(p: &UniPoly<F>) -> Self {
        let k = p.field();
        let coeffs = if p.is_zero() {
            vec!["0".to_string()]
        } else {
            p.coeffs().iter().map(|c| k.format(c)).collect()
        };
        PolyJson { degree: p.degree().unwrap_or(0), coeffs, text: p.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub k: usize,
    pub lambda: usize,
    /// Discrepancy of the step that produced this row.
    pub delta: Option<String>,
    /// `|g| - |f|` before that step.
    pub d: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ThetaReport {
    Unique,
    Parametric { psi_degree: usize, count: Option<String> },
    Enumerated { forms: Vec<PolyJson> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BmCheck {
    pub l: usize,
    pub gamma: PolyJson,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub lambda: Option<usize>,
    pub solution_dim: Option<usize>,
    pub agrees: bool,
    /// Why the oracle did not run, if it did not.
    pub skipped: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub field: String,
    pub n: usize,
    pub lambda: usize,
    pub f: PolyJson,
    pub g: PolyJson,
    pub min_poly: PolyJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<Vec<ProfileRow>>,
    pub plcp: bool,
    pub theta: ThetaReport,
    pub degenerate: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bm: Option<BmCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

impl AnalysisReport {
    /// False if a requested cross-check disagreed.
    pub fn checks_pass(&self) -> bool {
        self.bm.as_ref().is_none_or(|c| c.agrees) && self.oracle.as_ref().is_none_or(|c| c.agrees)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "field: {}", self.field);
        let _ = writeln!(s, "n: {}", self.n);
        let _ = writeln!(s, "lambda: {}", self.lambda);
        let _ = writeln!(s, "f: {}", self.f.text);
        let _ = writeln!(s, "g: {}", self.g.text);
        let _ = writeln!(s, "min_poly: {}", self.min_poly.text);
        let _ = writeln!(s, "plcp: {}", self.plcp);
        let theta = match &self.theta {
            ThetaReport::Unique => "unique".to_string(),
            ThetaReport::Parametric { psi_degree, .. } => format!("parametric({psi_degree})"),
            ThetaReport::Enumerated { forms } => {
                let v: Vec<&str> = forms.iter().map(|f| f.text.as_str()).collect();
                format!("{{{}}}", v.join(", "))
            }
        };
        let _ = writeln!(s, "theta: {theta}");
        let _ = writeln!(s, "degenerate: {}", self.degenerate);
        if let Some(rows) = &self.profile {
            let _ = writeln!(s, "profile:");
            let _ = writeln!(s, "  {:>6} {:>6} {:>8} {:>6}", "k", "lambda", "delta", "d");
            for r in rows {
                let _ = writeln!(
                    s,
                    "  {:>6} {:>6} {:>8} {:>6}",
                    r.k,
                    r.lambda,
                    r.delta.as_deref().unwrap_or("-"),
                    r.d.map_or("-".to_string(), |d| d.to_string())
                );
            }
        }
        if let Some(bm) = &self.bm {
            let verdict = if bm.agrees { "agree" } else { "MISMATCH" };
            let _ = writeln!(s, "bm: L = {}, gamma = {} ({verdict})", bm.l, bm.gamma.text);
        }
        if let Some(o) = &self.oracle {
            match (&o.skipped, o.lambda) {
                (Some(why), _) => {
                    let _ = writeln!(s, "oracle: skipped ({why})");
                }
                (None, Some(l)) => {
                    let verdict = if o.agrees { "agree" } else { "MISMATCH" };
                    let _ = writeln!(s, "oracle: lambda = {l} ({verdict})");
                }
                _ => {}
            }
        }
        s
    }
}
