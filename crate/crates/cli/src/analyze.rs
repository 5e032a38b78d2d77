use seqideal::oracles::{
    berlekamp_massey, brute_force_min_poly, connection_matches, is_characteristic,
    DEFAULT_LENGTH_BOUND,
};
use seqideal::vop::synthesize_with;
use seqideal::{Field, FieldSpec, Gf2, InverseForm, Rationals, Theta};

use crate::input::parse_sequence;
use crate::report::{AnalysisReport, BmCheck, OracleCheck, PolyJson, ProfileRow, ThetaReport};

/// Largest `Theta` family written out element by element.
const THETA_ENUMERATION_LIMIT: u128 = 16;

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    pub profile: bool,
    pub check_bm: bool,
    pub check_oracle: bool,
    /// Verify every construction invariant after each step.
    pub debug_asserts: bool,
}

pub fn analyze_text(spec: FieldSpec, text: &str, opts: AnalyzeOptions) -> anyhow::Result<AnalysisReport> {
    Ok(match spec {
        FieldSpec::Gf2 => analyze_seq(Gf2, parse_sequence(&Gf2, text)?, opts),
        FieldSpec::Gfp(k) => analyze_seq(k, parse_sequence(&k, text)?, opts),
        FieldSpec::Rationals => analyze_seq(Rationals, parse_sequence(&Rationals, text)?, opts),
    })
}

pub fn analyze_seq<F: Field>(field: F, seq: Vec<F::Elem>, opts: AnalyzeOptions) -> AnalysisReport {
    let inv = InverseForm::from_sequence(field.clone(), seq.clone()).expect("non-empty input");
    let out = synthesize_with(&inv, opts.debug_asserts);
    let min_poly = out.minimal_polynomial();

    let theta = match out.theta() {
        Theta::Unique(_) => ThetaReport::Unique,
        t @ Theta::Parametric { psi_degree, .. } => match t.count() {
            Some(c) if c <= THETA_ENUMERATION_LIMIT => ThetaReport::Enumerated {
                forms: t.enumerate().expect("small finite family").iter().map(PolyJson::from_form).collect(),
            },
            c => ThetaReport::Parametric { psi_degree, count: c.map(|c| c.to_string()) },
        },
    };

    let profile = opts.profile.then(|| {
        out.profile
            .iter()
            .map(|e| ProfileRow {
                k: e.k,
                lambda: e.lambda,
                delta: e.delta.as_ref().map(|d| field.format(d)),
                d: e.d_before,
            })
            .collect()
    });

    let bm = opts.check_bm.then(|| {
        let r = berlekamp_massey(&field, &seq);
        let mut agrees = r.l == out.lambda();
        if out.vop.g.degree() > out.vop.f.degree() {
            agrees &= connection_matches(&r.gamma, r.l, &min_poly);
        }
        BmCheck { l: r.l, gamma: PolyJson::from_unipoly(&r.gamma), agrees }
    });

    let oracle = opts.check_oracle.then(|| {
        if seq.len() > DEFAULT_LENGTH_BOUND {
            return OracleCheck {
                lambda: None,
                solution_dim: None,
                agrees: true,
                skipped: Some(format!("length {} exceeds {DEFAULT_LENGTH_BOUND}", seq.len())),
            };
        }
        match brute_force_min_poly(&field, &seq) {
            Ok(bf) => {
                let contains = if field.order().is_some() {
                    bf.witnesses.contains(&min_poly)
                } else {
                    is_characteristic(&field, &seq, &min_poly)
                };
                OracleCheck {
                    lambda: Some(bf.lambda),
                    solution_dim: Some(bf.solution_dim),
                    agrees: bf.lambda == out.lambda() && contains,
                    skipped: None,
                }
            }
            Err(e) => OracleCheck {
                lambda: None,
                solution_dim: None,
                agrees: true,
                skipped: Some(e.to_string()),
            },
        }
    });

    AnalysisReport {
        field: field.spec().to_string(),
        n: seq.len(),
        lambda: out.lambda(),
        f: PolyJson::from_form(&out.vop.f),
        g: PolyJson::from_form(&out.vop.g),
        min_poly: PolyJson::from_unipoly(&min_poly),
        profile,
        plcp: out.is_plcp(),
        theta,
        degenerate: out.degenerate,
        bm,
        oracle,
    }
}
