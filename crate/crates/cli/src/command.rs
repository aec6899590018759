//! Request validation and dispatch to the library.

use std::fs;
use std::path::{Path, PathBuf};

use ginv_core::classical::{core_ep_decompose, drazin_inverse, group_inverse, weak_mp_inverse};
use ginv_core::hgroup::{
    bc_inverse, hgroup_inverse, solve_image_system, solve_projected_system, two_inverse_prescribed, BcPair,
};
use ginv_core::matrix::SubspaceDescriptor;
use ginv_core::pinv::mp_inverse;
use ginv_core::verify::{check_axioms, AxiomReport, InverseKind};
use ginv_core::weak_hgroup::{solve_weak_system, weak_hgroup_inverse};
use ginv_core::{Error, Matrix};

use crate::document::{parse_document, MatrixPayload};
use crate::report::{CheckEntry, Parts, ReportDocument};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Compute,
    Verify,
    Decompose,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Compute => "compute",
            Command::Verify => "verify",
            Command::Decompose => "decompose",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum KindName {
    Mp,
    WeakMp,
    Group,
    Drazin,
    Hgroup,
    WeakHgroup,
    Bc,
    Two,
}

impl KindName {
    pub fn name(self) -> &'static str {
        match self {
            KindName::Mp => "mp",
            KindName::WeakMp => "weak-mp",
            KindName::Group => "group",
            KindName::Drazin => "drazin",
            KindName::Hgroup => "hgroup",
            KindName::WeakHgroup => "weak-hgroup",
            KindName::Bc => "bc",
            KindName::Two => "two",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Inputs {
    pub a: PathBuf,
    pub b: Option<PathBuf>,
    pub c: Option<PathBuf>,
    pub t: Option<PathBuf>,
    pub s: Option<PathBuf>,
    pub candidate: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandRequest {
    pub command: Command,
    pub kind: Option<KindName>,
    pub inputs: Inputs,
    pub out: Option<PathBuf>,
}

impl CommandRequest {
    /// Every input the command and kind need is present, and nothing else.
    pub fn validate(&self) -> Result<(), CliError> {
        let usage = |msg: &str| Err(CliError::Usage(msg.to_string()));
        let inputs = &self.inputs;
        let kind = match (self.command, self.kind) {
            (Command::Decompose, None) => {
                let extra = [&inputs.b, &inputs.c, &inputs.t, &inputs.s, &inputs.candidate];
                return if extra.iter().any(|p| p.is_some()) {
                    usage("decompose takes only --a")
                } else {
                    Ok(())
                };
            }
            (Command::Decompose, Some(_)) => return usage("decompose takes no --kind"),
            (_, None) => return usage("--kind is required"),
            (_, Some(kind)) => kind,
        };

        match (self.command, &inputs.candidate) {
            (Command::Verify, None) => return usage("verify needs --candidate"),
            (Command::Compute, Some(_)) => return usage("--candidate is only valid for verify"),
            _ => {}
        }
        let has_bc = inputs.b.is_some() || inputs.c.is_some();
        let has_ts = inputs.t.is_some() || inputs.s.is_some();
        match kind {
            KindName::Bc if inputs.b.is_none() || inputs.c.is_none() => usage("kind bc needs --b and --c"),
            KindName::Bc if has_ts => usage("kind bc takes no --t/--s"),
            KindName::Two if inputs.t.is_none() || inputs.s.is_none() => usage("kind two needs --t and --s"),
            KindName::Two if has_bc => usage("kind two takes no --b/--c"),
            KindName::Bc | KindName::Two => Ok(()),
            _ if has_bc || has_ts => usage(&format!("kind {} takes no --b/--c/--t/--s", kind.name())),
            _ => Ok(()),
        }
    }
}

fn load(path: &Path) -> Result<Matrix, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_document(&text).map_err(|e| e.in_file(path))
}

fn load_opt(path: &Option<PathBuf>) -> Result<Matrix, CliError> {
    load(path.as_deref().expect("validated request"))
}

/// The operand-carrying kind, loading `b, c` or `T, S` as needed.
fn inverse_kind(kind: KindName, inputs: &Inputs) -> Result<InverseKind, CliError> {
    Ok(match kind {
        KindName::Mp => InverseKind::MP,
        KindName::WeakMp => InverseKind::WeakMP,
        KindName::Group => InverseKind::Group,
        KindName::Drazin => InverseKind::Drazin,
        KindName::Hgroup => InverseKind::HGroup,
        KindName::WeakHgroup => InverseKind::WeakHGroup,
        KindName::Bc => InverseKind::Bc(BcPair {
            b: load_opt(&inputs.b)?,
            c: load_opt(&inputs.c)?,
        }),
        KindName::Two => InverseKind::TwoPrescribed {
            image: SubspaceDescriptor::image(load_opt(&inputs.t)?),
            kernel: SubspaceDescriptor::kernel(load_opt(&inputs.s)?),
        },
    })
}

struct Computed {
    value: Matrix,
    unique: Option<bool>,
    index: Option<usize>,
}

fn compute(kind: &InverseKind, a: &Matrix) -> Result<Computed, Error> {
    let plain = |value| Computed { value, unique: None, index: None };
    Ok(match kind {
        InverseKind::MP => plain(mp_inverse(a)?),
        InverseKind::WeakMP => plain(weak_mp_inverse(a)?),
        InverseKind::Group => plain(group_inverse(a)?),
        InverseKind::Drazin => Computed {
            value: drazin_inverse(a)?,
            unique: None,
            index: Some(a.drazin_index()?),
        },
        InverseKind::HGroup => {
            let value = hgroup_inverse(a)?;
            let unique = [solve_projected_system(a)?, solve_image_system(a)?]
                .iter()
                .all(|res| res.unique && res.solution == value);
            Computed { value, unique: Some(unique), index: None }
        }
        InverseKind::WeakHGroup => {
            let value = weak_hgroup_inverse(a)?;
            let res = solve_weak_system(a)?;
            Computed {
                unique: Some(res.unique && res.solution == value),
                value,
                index: None,
            }
        }
        InverseKind::Bc(pair) => plain(bc_inverse(a, pair)?),
        InverseKind::TwoPrescribed { image, kernel } => plain(two_inverse_prescribed(a, image, kernel)?),
    })
}

fn check_entries(report: &AxiomReport) -> Vec<CheckEntry> {
    report
        .checks
        .iter()
        .map(|c| CheckEntry {
            name: c.name.clone(),
            holds: c.holds,
        })
        .collect()
}

fn failed_reason(report: &AxiomReport) -> Option<String> {
    if report.overall {
        return None;
    }
    let failed: Vec<&str> = report.failed().map(|c| c.name.as_str()).collect();
    Some(format!(
        "{} of {} checks failed: {}",
        failed.len(),
        report.checks.len(),
        failed.join(", ")
    ))
}

/// Library errors: dimension problems are input errors, everything else
/// is a domain failure reported in the document.
fn domain(command: Command, kind: Option<KindName>, err: Error) -> Result<ReportDocument, CliError> {
    match err {
        Error::Dimension(msg) => Err(CliError::Dimension(msg)),
        Error::Parse { offset, message } => Err(CliError::Parse {
            location: format!("offset {offset}"),
            message,
        }),
        other => Ok(ReportDocument::failure(command.name(), kind.map(KindName::name), other.to_string())),
    }
}

/// Runs a validated request. Domain failures come back as a report with
/// `ok = false`; input and usage problems as [`CliError`].
pub fn execute_command(req: &CommandRequest) -> Result<ReportDocument, CliError> {
    req.validate()?;
    let a = load(&req.inputs.a)?;

    let Some(kind_name) = req.kind else {
        return match core_ep_decompose(&a) {
            Ok(d) => {
                let checks: Vec<CheckEntry> = d
                    .invariant_checks(&a)
                    .into_iter()
                    .map(|(name, holds)| CheckEntry { name: name.to_string(), holds })
                    .collect();
                let failed: Vec<&str> = checks.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
                Ok(ReportDocument {
                    command: req.command.name().into(),
                    kind: None,
                    ok: failed.is_empty(),
                    result: Some(MatrixPayload::from_matrix(&d.core)),
                    unique: None,
                    index: Some(d.index),
                    reason: (!failed.is_empty()).then(|| format!("invariants fail: {}", failed.join(", "))),
                    checks,
                    parts: Some(Parts {
                        core: MatrixPayload::from_matrix(&d.core),
                        nil: MatrixPayload::from_matrix(&d.nil),
                        projector: MatrixPayload::from_matrix(&d.projector),
                    }),
                })
            }
            Err(e) => domain(req.command, None, e),
        };
    };

    let kind = inverse_kind(kind_name, &req.inputs)?;
    let (value, unique, index) = match req.command {
        Command::Verify => (load_opt(&req.inputs.candidate)?, None, None),
        _ => match compute(&kind, &a) {
            Ok(c) => (c.value, c.unique, c.index),
            Err(e) => return domain(req.command, Some(kind_name), e),
        },
    };
    let report = match check_axioms(&kind, &a, &value) {
        Ok(r) => r,
        Err(e) => return domain(req.command, Some(kind_name), e),
    };

    Ok(ReportDocument {
        command: req.command.name().into(),
        kind: Some(kind_name.name().into()),
        ok: report.overall && unique != Some(false),
        result: match req.command {
            Command::Verify => None,
            _ => Some(MatrixPayload::from_matrix(&value)),
        },
        unique,
        index,
        checks: check_entries(&report),
        reason: failed_reason(&report).or_else(|| (unique == Some(false)).then(|| "solution is not unique".into())),
        parts: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn request(command: Command, kind: Option<KindName>) -> CommandRequest {
        CommandRequest {
            command,
            kind,
            inputs: Inputs {
                a: "a.json".into(),
                ..Inputs::default()
            },
            out: None,
        }
    }

    #[test]
    fn validation() {
        assert!(request(Command::Compute, Some(KindName::Mp)).validate().is_ok());
        assert!(request(Command::Decompose, None).validate().is_ok());
        assert!(request(Command::Compute, None).validate().is_err());
        assert!(request(Command::Verify, Some(KindName::Mp)).validate().is_err());
        assert!(request(Command::Compute, Some(KindName::Bc)).validate().is_err());
        assert!(request(Command::Compute, Some(KindName::Two)).validate().is_err());

        let mut req = request(Command::Compute, Some(KindName::Bc));
        req.inputs.b = Some("b.json".into());
        assert!(req.validate().is_err());
        req.inputs.c = Some("c.json".into());
        assert!(req.validate().is_ok());
        req.kind = Some(KindName::Group);
        assert!(matches!(req.validate(), Err(CliError::Usage(_))));
    }
}
