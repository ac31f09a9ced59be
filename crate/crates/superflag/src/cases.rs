//! Case driver: one parabolic at a time or all classes at once, with
//! reports in text or JSON.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::build::{build_full, build_symbol, cross_check_symbol};
use crate::error::{Error, Result};
use crate::geometry::{growth_vector, null_span};
use crate::prolong::{prolong, ReductionSpec, Status};
use crate::roots::{identification_classes, Algebra, DiagramId, ParabolicId};
use crate::superalg::SuperDim;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReductionMode {
    #[default]
    Auto,
    None,
}

impl FromStr for ReductionMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(ReductionMode::Auto),
            "none" => Ok(ReductionMode::None),
            _ => Err(Error::Unknown { kind: "reduction mode", value: s.into() }),
        }
    }
}

impl fmt::Display for ReductionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionMode::Auto => "auto",
            ReductionMode::None => "none",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Unknown { kind: "format", value: s.into() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRequest {
    pub parabolic: ParabolicId,
    pub reduce: ReductionMode,
    pub threshold: Option<usize>,
}

impl CaseRequest {
    pub fn new(parabolic: ParabolicId) -> Self {
        CaseRequest { parabolic, reduce: ReductionMode::Auto, threshold: None }
    }
}

/// Cases whose degree-0 derivations exceed the degree-0 part of the
/// algebra, so the prolongation needs a reduction.
pub fn dark_cases(a: Algebra) -> Vec<ParabolicId> {
    let raw: &[(&str, &str)] = match a {
        Algebra::G3 => &[("I", "1"), ("III", "1"), ("IV", "1")],
        Algebra::F4 => &[
            ("I", "1"),
            ("I", "4"),
            ("II", "4"),
            ("III", "1"),
            ("IV", "1"),
            ("V", "1"),
            ("III", "3"),
            ("IV", "4"),
            ("V", "4"),
            ("VI", "4"),
        ],
    };
    raw.iter().map(|(d, c)| ParabolicId::parse(a, d, c).expect("valid table entry")).collect()
}

/// Whether `p` is identified with one of the listed dark cases.
pub fn is_dark(p: &ParabolicId) -> bool {
    let dark = dark_cases(p.algebra());
    identification_classes(p.algebra())
        .into_iter()
        .find(|c| c.contains(p))
        .is_some_and(|c| c.iter().any(|q| dark.contains(q)))
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub case: String,
    pub reduce: ReductionMode,
    pub reduced: bool,
    pub threshold: usize,
    pub status: Status,
    pub levels: Vec<String>,
    pub total: String,
    pub growth: String,
    pub depth: usize,
    pub null_span: String,
    pub null_span_full: bool,
    /// symbol agrees with the negative part of the full algebra
    pub symbol_oracle: bool,
    /// only for finite runs
    pub jacobi: Option<bool>,
    /// graded dims and bracket ranks agree with the full algebra
    pub oracle: Option<bool>,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub level_dims: Vec<SuperDim>,
    #[serde(skip)]
    pub superdim: SuperDim,
}

impl CaseReport {
    /// Finite with every check passing.
    pub fn passed(&self) -> bool {
        self.status == Status::Finite && self.symbol_oracle && self.jacobi == Some(true) && self.oracle == Some(true)
    }

    pub fn text(&self) -> String {
        let opt = |b: Option<bool>| match b {
            Some(true) => "ok",
            Some(false) => "FAIL",
            None => "-",
        };
        format!(
            "{}\treduce={}{}\t{}\t{}\tlevels ({})\tgrowth {}\tnull {}{}\tsymbol {}\tjacobi {}\toracle {}",
            self.case,
            self.reduce,
            if self.reduced { "*" } else { "" },
            self.status,
            self.total,
            self.levels.join(", "),
            self.growth,
            self.null_span,
            if self.null_span_full { " full" } else { "" },
            if self.symbol_oracle { "ok" } else { "FAIL" },
            opt(self.jacobi),
            opt(self.oracle),
        )
    }
}

fn short(d: SuperDim) -> String {
    format!("{}|{}", d.even, d.odd)
}

pub fn run_case(r: &CaseRequest) -> Result<CaseReport> {
    let start = Instant::now();
    let p = &r.parabolic;
    let s = build_symbol(p)?;
    let f = build_full(p.diagram)?;
    let depth = s.depth() as usize;
    let reduced = r.reduce == ReductionMode::Auto && is_dark(p);
    let red = if reduced { Some(ReductionSpec::from_full(&f, &s)?) } else { None };
    // without a reduction a dark case never stops; one level past the
    // depth is enough to see der_0 and a nonzero first level
    let dark_unreduced = !reduced && is_dark(p);
    let threshold = r.threshold.unwrap_or(if dark_unreduced { depth + 1 } else { depth + 2 });
    let (pr, status) = prolong(&s, red.as_ref(), threshold)?;
    let level_dims = pr.level_dims();
    let ns = null_span(&s);
    let symbol_oracle = cross_check_symbol(&f, &s, p)?.passed();
    let (jacobi, oracle, superdim) = if status == Status::Finite {
        let g = pr.assemble();
        let full = f.graded(p);
        let same = g.graded_dims() == full.graded_dims() && g.bracket_ranks() == full.bracket_ranks();
        (Some(g.check_jacobi().is_ok()), Some(same), g.superdim())
    } else {
        (None, None, s.superdim() + level_dims.iter().copied().sum())
    };
    let g = growth_vector(&s);
    Ok(CaseReport {
        case: p.to_string(),
        reduce: r.reduce,
        reduced,
        threshold,
        status,
        levels: level_dims.iter().map(|&d| short(d)).collect(),
        total: superdim.to_string(),
        growth: g.to_string(),
        depth: g.depth(),
        null_span: ns.span.to_string(),
        null_span_full: ns.full,
        symbol_oracle,
        jacobi,
        oracle,
        elapsed: start.elapsed(),
        level_dims,
        superdim,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub reports: Vec<CaseReport>,
    pub failures: Vec<String>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn render(&self, format: Format) -> Result<String> {
        render(&self.reports, format, Some(&self.failures))
    }
}

/// Reports in order, one line each or as a JSON array.
pub fn render(reports: &[CaseReport], format: Format, failures: Option<&[String]>) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let mut v = serde_json::json!({ "cases": reports });
            if let Some(f) = failures {
                v["failures"] = serde_json::json!(f);
            }
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Text => {
            let mut s: String = reports.iter().map(|r| r.text() + "\n").collect();
            if let Some(f) = failures {
                s += &format!("{} cases, {} failures\n", reports.len(), f.len());
                for x in f {
                    s += &format!("FAILED {x}\n");
                }
            }
            s
        }
    })
}

/// Runs the given requests on `jobs` threads; output keeps input order.
pub fn run_many(reqs: &[CaseRequest], jobs: Option<usize>) -> Result<Vec<CaseReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::Construction(e.to_string()))?;
    pool.install(|| reqs.par_iter().map(run_case).collect())
}

/// Every identification class of the given algebras with auto reduction.
pub fn verify_all(algebras: &[Algebra], jobs: Option<usize>) -> Result<Summary> {
    let reqs: Vec<CaseRequest> = algebras
        .iter()
        .flat_map(|&a| identification_classes(a).into_iter().map(|c| CaseRequest::new(c[0].clone())))
        .collect();
    let reports = run_many(&reqs, jobs)?;
    let failures = reports.iter().filter(|r| !r.passed()).map(|r| r.case.clone()).collect();
    Ok(Summary { reports, failures })
}

/// JSON export of the full algebra of a diagram.
pub fn export_full(d: DiagramId) -> Result<String> {
    Ok(serde_json::to_string_pretty(&build_full(d)?.to_json())? + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn req(a: Algebra, d: &str, c: &str, r: ReductionMode) -> CaseRequest {
        CaseRequest { parabolic: ParabolicId::parse(a, d, c).unwrap(), reduce: r, threshold: None }
    }

    #[test]
    fn dark_membership() {
        for a in Algebra::ALL {
            let n = identification_classes(a).into_iter().filter(|c| is_dark(&c[0])).count();
            assert_eq!(n, if a == Algebra::G3 { 2 } else { 3 });
        }
    }

    #[test]
    fn single_cases() {
        let r = run_case(&req(Algebra::G3, "IV", "2", ReductionMode::Auto)).unwrap();
        assert!(r.passed());
        assert_eq!((r.total.as_str(), r.growth.as_str()), ("(17|14)", "(2|4, 1|2, 2|0)"));
        let r = run_case(&req(Algebra::F4, "I", "4", ReductionMode::None)).unwrap();
        assert_eq!(r.status, Status::ThresholdExceeded);
        assert_eq!(r.level_dims[0], SuperDim::new(52, 48));
        let r = run_case(&req(Algebra::F4, "I", "4", ReductionMode::Auto)).unwrap();
        assert!(r.passed() && r.reduced);
        assert_eq!(r.superdim, SuperDim::new(24, 16));
    }

    #[test]
    fn modes_parse() {
        assert_eq!("none".parse::<ReductionMode>().unwrap(), ReductionMode::None);
        assert!("some".parse::<ReductionMode>().is_err());
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
    }
}
