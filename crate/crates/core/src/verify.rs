//! Exact axiom checking for every inverse kind.
//!
//! [`check_axioms`] evaluates each defining equation of an inverse kind on a
//! candidate and records the exact residual: the difference of the two sides
//! for equations, the witness for ideal memberships, the smallest vanishing
//! power for nilpotency conditions.

use std::fmt::Write;

use crate::classical::core_ep_decompose;
use crate::error::{dim_err, Result};
use crate::hgroup::BcPair;
use crate::matrix::{ideal_membership, subspace_relate, Matrix, MembershipWitness, Relation, SubspaceDescriptor, SubspaceRelation};
use crate::pinv::mp_inverse;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InverseKind {
    MP,
    WeakMP,
    Group,
    Drazin,
    HGroup,
    WeakHGroup,
    Bc(BcPair),
    TwoPrescribed {
        image: SubspaceDescriptor,
        kernel: SubspaceDescriptor,
    },
}

impl InverseKind {
    /// Short name, as used on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            InverseKind::MP => "mp",
            InverseKind::WeakMP => "weak-mp",
            InverseKind::Group => "group",
            InverseKind::Drazin => "drazin",
            InverseKind::HGroup => "hgroup",
            InverseKind::WeakHGroup => "weak-hgroup",
            InverseKind::Bc(_) => "bc",
            InverseKind::TwoPrescribed { .. } => "two",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Residual {
    /// `lhs − rhs` of an equation.
    Difference(Matrix),
    Membership(MembershipWitness),
    /// `vanishing_power` is the least `k` with `element^k = 0`.
    Nilpotent {
        element: Matrix,
        vanishing_power: Option<usize>,
    },
    /// Dimensions of the two subspaces compared for equality.
    Subspace { left_dim: usize, right_dim: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub residual: Residual,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub kind: InverseKind,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl AxiomReport {
    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn equation(name: &str, lhs: &Matrix, rhs: &Matrix) -> Check {
    let diff = lhs - rhs;
    Check {
        name: name.to_string(),
        holds: diff.is_zero(),
        residual: Residual::Difference(diff),
    }
}

/// `m* = m`, residual `m* − m`.
fn hermitian(name: &str, m: &Matrix) -> Check {
    equation(name, &m.adjoint(), m)
}

fn membership(name: &str, relation: Relation, x: &Matrix, generator: &Matrix) -> Result<Check> {
    let w = ideal_membership(relation, x, generator)?;
    Ok(Check {
        name: name.to_string(),
        holds: w.holds,
        residual: Residual::Membership(w),
    })
}

fn nilpotent(name: &str, m: &Matrix) -> Check {
    let power = m.vanishing_power();
    Check {
        name: name.to_string(),
        holds: power.is_some(),
        residual: Residual::Nilpotent {
            element: m.clone(),
            vanishing_power: power,
        },
    }
}

fn same_subspace(name: &str, p: &SubspaceDescriptor, q: &SubspaceDescriptor) -> Result<Check> {
    Ok(Check {
        name: name.to_string(),
        holds: subspace_relate(p, q, SubspaceRelation::Equals)?,
        residual: Residual::Subspace {
            left_dim: p.dim(),
            right_dim: q.dim(),
        },
    })
}

fn check_shapes(kind: &InverseKind, a: &Matrix, x: &Matrix) -> Result<()> {
    if x.shape() != (a.cols(), a.rows()) {
        return Err(dim_err(format!(
            "candidate is {}x{} but a is {}x{}",
            x.rows(),
            x.cols(),
            a.rows(),
            a.cols()
        )));
    }
    if !matches!(kind, InverseKind::MP) && !a.is_square() {
        return Err(dim_err(format!("{} inverse needs a square matrix", kind.name())));
    }
    let n = a.rows();
    match kind {
        InverseKind::Bc(pair) if pair.b.shape() != (n, n) || pair.c.shape() != (n, n) => {
            Err(dim_err("b and c must match the shape of a"))
        }
        InverseKind::TwoPrescribed { image, kernel } if image.ambient_dim() != n || kernel.ambient_dim() != n => {
            Err(dim_err("prescribed subspaces must live in the space of a"))
        }
        _ => Ok(()),
    }
}

/// Evaluates every defining condition of `kind` for the candidate `x` of `a`.
///
/// For [`InverseKind::WeakHGroup`] the report carries two groups of checks:
/// the system satisfied by the weak Moore-Penrose inverse `w` of `a`
/// (including `w·a³·w ∈ R†` and `a − a·w·a` nilpotent) together with
/// `x = (w·a³·w)†`, and the element-wise system for `x` itself with the
/// weighted condition `(a²·x·a²)·w = a³·w` and memberships in
/// `(a·w)R ∩ R(w·a)`.
pub fn check_axioms(kind: &InverseKind, a: &Matrix, x: &Matrix) -> Result<AxiomReport> {
    check_shapes(kind, a, x)?;
    let ax = a * x;
    let xa = x * a;
    let xax = &xa * x;

    let checks = match kind {
        InverseKind::MP => vec![
            equation("xax=x", &xax, x),
            equation("axa=a", &(&ax * a), a),
            hermitian("(ax)*=ax", &ax),
            hermitian("(xa)*=xa", &xa),
        ],
        InverseKind::WeakMP => vec![
            equation("xax=x", &xax, x),
            hermitian("(ax)*=ax", &ax),
            hermitian("(xa)*=xa", &xa),
            nilpotent("a-axa nilpotent", &(a - &(&ax * a))),
        ],
        InverseKind::Group => vec![
            equation("xax=x", &xax, x),
            equation("axa=a", &(&ax * a), a),
            equation("ax=xa", &ax, &xa),
        ],
        InverseKind::Drazin => {
            let k = a.drazin_index()? as u32;
            vec![
                equation("xa=ax", &xa, &ax),
                equation("a^(k+1)x=a^k", &(&a.pow(k + 1)? * x), &a.pow(k)?),
                equation("xax=x", &xax, x),
            ]
        }
        InverseKind::HGroup => {
            let a2 = a.pow(2)?;
            let a_adj = a.adjoint();
            vec![
                equation("xax=x", &xax, x),
                equation("a2xa2=a3", &(&(&a2 * x) * &a2), &a.pow(3)?),
                hermitian("(a2xa*)*=a2xa*", &(&(&a2 * x) * &a_adj)),
                hermitian("(a*xa2)*=a*xa2", &(&(&a_adj * x) * &a2)),
                membership("x in aR", Relation::XInAR, x, a)?,
                membership("x in Ra", Relation::XInRA, x, a)?,
            ]
        }
        InverseKind::WeakHGroup => weak_hgroup_checks(a, x, &xax)?,
        InverseKind::Bc(BcPair { b, c }) => vec![
            equation("xab=b", &(&xa * b), b),
            equation("cax=c", &(c * &ax), c),
            membership("x in bRx", Relation::XInBRX, x, b)?,
            membership("x in xRc", Relation::XInXRC, x, c)?,
        ],
        InverseKind::TwoPrescribed { image, kernel } => vec![
            equation("xax=x", &xax, x),
            same_subspace("im(x)=T", &SubspaceDescriptor::image(x.clone()), image)?,
            same_subspace("ker(x)=S", &SubspaceDescriptor::kernel(x.clone()), kernel)?,
        ],
    };
    let overall = checks.iter().all(|c| c.holds);
    Ok(AxiomReport {
        kind: kind.clone(),
        checks,
        overall,
    })
}

fn weak_hgroup_checks(a: &Matrix, x: &Matrix, xax: &Matrix) -> Result<Vec<Check>> {
    // The unverified (core part)†, so that a failing weak-MP condition shows
    // up as a failed check rather than an error.
    let w = mp_inverse(&core_ep_decompose(a)?.core)?;
    let aw = a * &w;
    let wa = &w * a;
    let a2 = a.pow(2)?;
    let a3 = a.pow(3)?;
    let a_adj = a.adjoint();
    let m = &(&w * &a3) * &w;
    let m_dag = mp_inverse(&m)?;

    Ok(vec![
        equation("w=waw", &(&wa * &w), &w),
        hermitian("(aw)*=aw", &aw),
        hermitian("(wa)*=wa", &wa),
        nilpotent("a-awa nilpotent", &(a - &(&aw * a))),
        equation("wa3w in R+", &(&(&m * &m_dag) * &m), &m),
        equation("x=(wa3w)+", x, &m_dag),
        equation("xax=x", xax, x),
        equation("(a2xa2)w=a3w", &(&(&(&a2 * x) * &a2) * &w), &(&a3 * &w)),
        hermitian("(a2xa*)*=a2xa*", &(&(&a2 * x) * &a_adj)),
        hermitian("(a*xa2)*=a*xa2", &(&(&a_adj * x) * &a2)),
        membership("x in (aw)R", Relation::XInAR, x, &aw)?,
        membership("x in R(wa)", Relation::XInRA, x, &wa)?,
    ])
}

/// Human-readable summary listing only the failed checks.
pub fn residual_summary(report: &AxiomReport) -> String {
    let total = report.checks.len();
    if report.overall {
        return format!("all {total} checks hold");
    }
    let failed: Vec<&Check> = report.failed().collect();
    let mut out = format!("{} of {total} checks failed", failed.len());
    for check in failed {
        let _ = write!(out, "\n  {}: ", check.name);
        let _ = match &check.residual {
            Residual::Difference(d) => write!(out, "residual {d}"),
            Residual::Membership(_) => write!(out, "no witness exists"),
            Residual::Nilpotent { element, .. } => write!(out, "not nilpotent: {element}"),
            Residual::Subspace { left_dim, right_dim } => {
                write!(out, "subspaces differ (dimensions {left_dim} and {right_dim})")
            }
        };
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{a, n, x, z};
    use crate::scalar::GaussianRational;

    #[test]
    fn hgroup_report_on_fixture() {
        let report = check_axioms(&InverseKind::HGroup, &x(), &z()).unwrap();
        assert!(report.overall);
        assert_eq!(report.checks.len(), 6);
        assert_eq!(residual_summary(&report), "all 6 checks hold");
        for c in &report.checks {
            match &c.residual {
                Residual::Difference(d) => assert!(d.is_zero()),
                Residual::Membership(w) => assert_eq!(w.reconstruct(&z(), &x()), Some(z())),
                other => panic!("unexpected residual {other:?}"),
            }
        }
    }

    #[test]
    fn bad_candidate_is_named() {
        let third = x().scale(&GaussianRational::ratio(1, 3));
        let report = check_axioms(&InverseKind::HGroup, &x(), &third).unwrap();
        assert!(!report.overall);
        let c = report.check("xax=x").unwrap();
        assert!(!c.holds);
        let two_thirds = x().scale(&GaussianRational::ratio(2, 3));
        assert_eq!(c.residual, Residual::Difference(two_thirds.clone()));

        let summary = residual_summary(&report);
        assert!(summary.contains(&format!("xax=x: residual {two_thirds}")), "{summary}");
        assert!(!summary.contains("x in aR"), "passing checks are not listed");
    }

    #[test]
    fn mp_report() {
        assert!(check_axioms(&InverseKind::MP, &n(), &n().adjoint()).unwrap().overall);
        let r = Matrix::parse_rows(&[&["1", "2", "i"]]).unwrap();
        let rd = mp_inverse(&r).unwrap();
        assert!(check_axioms(&InverseKind::MP, &r, &rd).unwrap().overall);
        assert!(check_axioms(&InverseKind::Group, &r, &rd).is_err());
    }

    #[test]
    fn weak_hgroup_report_on_fixture() {
        let report = check_axioms(&InverseKind::WeakHGroup, &a(), &z()).unwrap();
        assert!(report.overall, "{}", residual_summary(&report));
        let nil = report.check("a-awa nilpotent").unwrap();
        assert!(matches!(nil.residual, Residual::Nilpotent { vanishing_power: Some(2), .. }));
    }

    #[test]
    fn nilpotency_failure_reported() {
        // zero candidate for an invertible matrix: a − 0 = a is not nilpotent
        let id = Matrix::identity(2);
        let report = check_axioms(&InverseKind::WeakMP, &id, &Matrix::zeros(2, 2)).unwrap();
        assert!(!report.overall);
        assert!(residual_summary(&report).contains("a-axa nilpotent: not nilpotent"));
    }

    #[test]
    fn shape_mismatch() {
        assert!(check_axioms(&InverseKind::HGroup, &x(), &n()).is_err());
    }

    #[test]
    fn deterministic() {
        let third = x().scale(&GaussianRational::ratio(1, 3));
        let r1 = check_axioms(&InverseKind::HGroup, &a(), &third).unwrap();
        let r2 = check_axioms(&InverseKind::HGroup, &a(), &third).unwrap();
        assert_eq!(r1, r2);
        assert_eq!(residual_summary(&r1), residual_summary(&r2));
    }
}
