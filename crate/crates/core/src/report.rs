//! Classification reports.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::factorization::UniqueFactorization;
use crate::hopf::build_hopf;
use crate::qt::{bruteforce_oracle, build_r, check_triangular, classify, verify_qt, QtError};
use crate::tensor::TensorError;
use crate::twist::is_normal_qt;
use crate::ybe::{set_solution, YbeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error(transparent)]
    Qt(#[from] QtError),
    #[error(transparent)]
    Ybe(#[from] YbeError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("classified pair ({0}, {1}) fails {2}")]
    Unsound(usize, usize, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureRecord {
    pub xi_index: usize,
    pub eta_index: usize,
    pub triangular: bool,
    pub normal: bool,
    pub r_support_size: usize,
    pub ybe_verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub group: String,
    pub order: usize,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    pub structures: Vec<StructureRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agreement: Option<bool>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ReportOptions {
    pub run_oracle: bool,
    pub triangular_only: bool,
}

/// Classifies, then verifies every structure before reporting it.
pub fn classify_report(uf: &UniqueFactorization, options: ReportOptions) -> Result<ClassifyReport, ReportError> {
    let h = build_hopf(uf);
    let pairs = classify(uf);
    let mut structures = Vec::with_capacity(pairs.len());
    let mut supports = BTreeSet::new();
    for p in &pairs {
        let r = build_r(uf, &p.xi, &p.eta)?;
        if let Some(f) = verify_qt(&h, &r).failure {
            return Err(ReportError::Unsound(p.xi_index, p.eta_index, f.axiom.to_string()));
        }
        let triangular = check_triangular(&h, &r, &p.xi, &p.eta)?;
        let ybe_verified = set_solution(uf, &p.xi, &p.eta).is_ok();
        supports.insert(r.support());
        if options.triangular_only && !triangular {
            continue;
        }
        structures.push(StructureRecord {
            xi_index: p.xi_index,
            eta_index: p.eta_index,
            triangular,
            normal: is_normal_qt(uf, &p.xi),
            r_support_size: r.len(),
            ybe_verified,
        });
    }
    let oracle_agreement = if options.run_oracle {
        let found = bruteforce_oracle(uf, &h)?;
        let oracle: BTreeSet<_> = found.passing.iter().map(|c| c.to_tensor(uf).support()).collect();
        Some(oracle == supports && found.passing.len() == supports.len())
    } else {
        None
    };
    Ok(ClassifyReport {
        group: uf.group().name().to_string(),
        order: uf.order(),
        plus: uf.plus().elements().to_vec(),
        minus: uf.minus().elements().to_vec(),
        structures,
        oracle_agreement,
    })
}

impl ClassifyReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("xi_index,eta_index,triangular,normal,r_support_size,ybe_verified\n");
        for s in &self.structures {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                s.xi_index, s.eta_index, s.triangular, s.normal, s.r_support_size, s.ybe_verified
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} (order {})\nG+ = {:?}\nG- = {:?}\n{} structure(s)\n",
            self.group,
            self.order,
            self.plus,
            self.minus,
            self.structures.len()
        );
        for s in &self.structures {
            out.push_str(&format!(
                "  xi #{} eta #{}: triangular={} normal={} |supp R|={} ybe={}\n",
                s.xi_index, s.eta_index, s.triangular, s.normal, s.r_support_size, s.ybe_verified
            ));
        }
        if let Some(a) = self.oracle_agreement {
            out.push_str(&format!("oracle agreement: {a}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_group;
    use crate::factorization::make_factorization;
    use crate::group::Subgroup;

    #[test]
    fn v4_report_with_oracle() {
        let g = catalog_group("V4").unwrap();
        let uf = make_factorization(&g, &Subgroup::new(&g, &[0, 2]).unwrap(), &Subgroup::new(&g, &[0, 1]).unwrap())
            .unwrap();
        let report = classify_report(&uf, ReportOptions { run_oracle: true, triangular_only: false }).unwrap();
        assert_eq!(report.structures.len(), 4);
        assert_eq!(report.oracle_agreement, Some(true));
        assert_eq!(report.structures.iter().filter(|s| s.triangular).count(), 2);
        let json = serde_json::to_string(&report).unwrap();
        let back: ClassifyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        let tri = classify_report(&uf, ReportOptions { run_oracle: false, triangular_only: true }).unwrap();
        assert_eq!(tri.structures.len(), 2);
        assert_eq!(report.to_csv().lines().count(), 5);
    }
}
