use std::fmt::Write as _;

use serde::Serialize;

use super::{solve_candidate, CandidateSolution};
use crate::error::{Error, Result};
use crate::field::{FieldElem, Rational};
use crate::homogeneous::ReductiveSpace;
use crate::par::Exec;
use crate::rep::{adjoint_module, deformation_targets, enumerate_candidates, Candidate, Family, GroupSpec, Weight};

/// The equation solved for each candidate, as recorded in reports.
pub const MAIN_EQUATION: &str = "-sum_i e^i ^ A(e_i . alpha) + c *A(alpha) = 0, c = 5 tau0/6, e_i . alpha = [e_i, alpha]";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    /// Adjoint module at Casimir −1: Hom space and kernel computed.
    #[serde(rename = "solved")]
    Solved,
    /// Not an adjoint summand, or not at Casimir −1: no construction available.
    #[serde(rename = "UNRESOLVED")]
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleType {
    #[serde(rename = "type")]
    pub label: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateReport {
    pub weight: Vec<Weight>,
    pub label: String,
    pub casimir: Rational,
    /// Lie algebra label of the adjoint summand (`sp(2)`, `su(3)`, …).
    pub module: Option<String>,
    pub status: Status,
    pub hom_dim: Option<usize>,
    pub kernel_dim: Option<usize>,
    pub dim_u: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationReport {
    pub space: String,
    pub tau0: FieldElem,
    pub groups: String,
    pub search_box: Vec<String>,
    pub candidates: Vec<CandidateReport>,
    /// `Σ kernel_dim × dim_ℝ U` over the solved candidates.
    pub total_dimension: usize,
    pub deformation_type: Vec<ModuleType>,
    /// Only the Casimir −1 family occurs, so every infinitesimal Einstein
    /// deformation is a G2 deformation.
    pub einstein_equals_g2: bool,
}

fn lie_label(family: Family, rank: usize) -> String {
    match family {
        Family::Sp => format!("sp({rank})"),
        Family::SU => format!("su({rank})"),
    }
}

fn decimal(x: &FieldElem) -> String {
    let (re, im) = x.to_f64_pair();
    if im == 0.0 {
        format!("{re:.9}")
    } else {
        format!("{re:.9} + {im:.9}i")
    }
}

fn rational_decimal(r: &Rational) -> String {
    decimal(&FieldElem::from_rational(r.clone()))
}

/// Enumerates candidates, solves every adjoint one, and totals the real
/// deformation dimension.
pub fn solve_deformations(space: &ReductiveSpace, exec: Exec) -> Result<DeformationReport> {
    let data = space.nearly_parallel_data()?;
    if space.factors.is_empty() {
        return Err(Error::InvariantViolation(
            "space declares no group factors, so the Casimir enumeration cannot run".into(),
        ));
    }
    let spec = GroupSpec { factors: space.factors.clone() };
    let search = enumerate_candidates(&spec, &deformation_targets())?;
    let minus_one = Rational::from_integer((-1).into());
    let solutions: Vec<Result<Option<CandidateSolution>>> = exec.map(&search.candidates, |c: &Candidate| {
        match c.adjoint_of {
            Some(f) if c.casimir == minus_one => {
                let u = adjoint_module(space, f)?;
                if !u.real_type {
                    return Err(Error::InvariantViolation(format!("adjoint module of {} is not of real type", spec.factors[f])));
                }
                if u.casimir != FieldElem::from_int(-1) {
                    return Err(Error::InvariantViolation(format!(
                        "Killing-form Casimir of {} is {} instead of -1",
                        spec.factors[f], u.casimir
                    )));
                }
                solve_candidate(&u, space, &data, exec).map(Some)
            }
            _ => Ok(None),
        }
    });
    let mut candidates = Vec::new();
    let mut total = 0;
    let mut types = Vec::new();
    for (c, sol) in search.candidates.iter().zip(solutions) {
        let sol = sol?;
        let module = c.adjoint_of.map(|f| lie_label(spec.factors[f].family, spec.factors[f].rank));
        let dim_u = c.adjoint_of.map(|f| spec.factors[f].dim());
        let report = match sol {
            Some(s) => {
                let du = dim_u.expect("adjoint candidate");
                total += s.kernel_dim() * du;
                if s.kernel_dim() > 0 {
                    types.push(ModuleType { label: module.clone().expect("adjoint"), multiplicity: s.kernel_dim() });
                }
                CandidateReport {
                    weight: c.weights.clone(),
                    label: c.label(),
                    casimir: c.casimir.clone(),
                    module,
                    status: Status::Solved,
                    hom_dim: Some(s.hom_dim()),
                    kernel_dim: Some(s.kernel_dim()),
                    dim_u,
                }
            }
            None => CandidateReport {
                weight: c.weights.clone(),
                label: c.label(),
                casimir: c.casimir.clone(),
                module,
                status: Status::Unresolved,
                hom_dim: None,
                kernel_dim: None,
                dim_u,
            },
        };
        candidates.push(report);
    }
    let einstein_equals_g2 = search.candidates.iter().all(|c| c.casimir == minus_one);
    Ok(DeformationReport {
        space: space.name.clone(),
        tau0: data.tau0,
        groups: spec.to_string(),
        search_box: search.bounds,
        candidates,
        total_dimension: total,
        deformation_type: types,
        einstein_equals_g2,
    })
}

impl DeformationReport {
    pub fn all_resolved(&self) -> bool {
        self.candidates.iter().all(|c| c.status == Status::Solved)
    }

    /// Canonical JSON: keys sorted, exact scalars as strings. With
    /// `decimal`, approximate values are added under `*_approx` keys.
    pub fn to_json(&self, decimal_values: bool) -> Result<String> {
        let candidates: Vec<serde_json::Value> = self
            .candidates
            .iter()
            .map(|c| {
                let mut v = serde_json::json!({
                    "weight": c.weight,
                    "label": c.label,
                    "casimir": c.casimir.to_string(),
                    "module": c.module,
                    "status": c.status,
                    "hom_dim": c.hom_dim,
                    "kernel_dim": c.kernel_dim,
                    "dim_U": c.dim_u,
                });
                if decimal_values {
                    v["casimir_approx"] = rational_decimal(&c.casimir).into();
                }
                v
            })
            .collect();
        let mut v = serde_json::json!({
            "space": self.space,
            "tau0": self.tau0.to_string(),
            "groups": self.groups,
            "search_box": self.search_box,
            "candidates": candidates,
            "total_dimension": self.total_dimension,
            "deformation_type": self.deformation_type,
            "einstein_equals_g2": self.einstein_equals_g2,
            "main_equation": MAIN_EQUATION,
        });
        if decimal_values {
            v["tau0_approx"] = decimal(&self.tau0).into();
        }
        Ok(serde_json::to_string_pretty(&v)? + "\n")
    }

    pub fn to_text(&self, decimal_values: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "space: {}", self.space);
        let _ = writeln!(s, "group: {}", self.groups);
        let _ = write!(s, "tau0: {}", self.tau0);
        if decimal_values {
            let _ = write!(s, "  (approx. {})", decimal(&self.tau0));
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "main equation: {MAIN_EQUATION}");
        let _ = writeln!(s, "search box:");
        for b in &self.search_box {
            let _ = writeln!(s, "  {b}");
        }
        let _ = writeln!(
            s,
            "{:<24} {:>8} {:>8} {:>10} {:>4} {:>6} {:>7}",
            "candidate", "casimir", "module", "status", "hom", "kernel", "dim_U"
        );
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        for c in &self.candidates {
            let status = match c.status {
                Status::Solved => "solved",
                Status::Unresolved => "UNRESOLVED",
            };
            let _ = writeln!(
                s,
                "{:<24} {:>8} {:>8} {:>10} {:>4} {:>6} {:>7}",
                c.label,
                c.casimir.to_string(),
                c.module.clone().unwrap_or_else(|| "-".into()),
                status,
                opt(c.hom_dim),
                opt(c.kernel_dim),
                opt(c.dim_u)
            );
        }
        let _ = writeln!(s, "total real dimension: {}", self.total_dimension);
        if !self.deformation_type.is_empty() {
            let parts: Vec<String> =
                self.deformation_type.iter().map(|t| format!("{} (multiplicity {})", t.label, t.multiplicity)).collect();
            let _ = writeln!(s, "isomorphic to: {}", parts.join(", "));
        }
        let _ = writeln!(s, "Einstein deformations = G2 deformations: {}", self.einstein_equals_g2);
        s
    }
}
