use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use qtsym_core::bases::{
    b_lambda, hl_p, hl_p_func, hl_q_func, inhom_f, inhom_f_func, interp_func, interp_macdonald, macdonald_func,
    macdonald_poly, special_values, BasisElement, BasisError, BasisValue, FRoute, Family, SpecialValue, TVariant,
};
use qtsym_core::identities::run_suite;
use qtsym_core::operators::{apply_ainfty, apply_ak, apply_an, apply_dn, apply_hn, eigen_ck, vertex_a1, OperatorError};
use qtsym_core::partitions::partitions_up_to;
use qtsym_core::polyengine::{Group, MPoly};
use qtsym_core::symfunc::{lift_to_lambda, PiMap, PiVariant, SymFuncError, SymFuncP};
use qtsym_core::{Partition, RatQT};
use serde::Serialize;
use serde_json::json;

use crate::{Command, Element, Operator, Output};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Expand { element, out } => {
            let (family, lambda) = family_and_lambda(&element)?;
            let value = compute(family, &lambda, element.n, element.route, element.t_variant)?;
            emit(
                &out,
                &BasisElement {
                    family,
                    index: lambda,
                    n: element.n,
                    value,
                },
            )?;
        }
        Command::Lift { element, out } => emit(&out, &lift(&element)?)?,
        Command::ApplyOp { op, element, k, out } => apply_op(op, &element, k, &out)?,
        Command::Special { lambda, n, input, out } => {
            if lambda.len() > n {
                return Err(BasisError::TooLong { lambda, n }.into());
            }
            let mut report = json!({
                "lambda": lambda,
                "N": n,
                "c_norm": special_values(&lambda, n, &SpecialValue::CNorm),
                "at_zeros": special_values(&lambda, n, &SpecialValue::AtZeros),
            });
            if let Some(path) = input {
                let a: RatQT = serde_json::from_str(&read(&path)?)?;
                let v = special_values(&lambda, n, &SpecialValue::Principal(a.clone()));
                report["principal"] = json!({ "a": a, "value": v });
            }
            emit(&out, &report)?;
        }
        Command::Verify {
            suite,
            max_n,
            max_deg,
            out,
        } => {
            let reports = run_suite(suite, max_n, max_deg);
            emit(&out, &reports)?;
            let failed = reports.iter().filter(|r| !r.passed()).count();
            eprintln!("{} of {} checks passed", reports.len() - failed, reports.len());
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Eigen { mu, out } => emit(&out, &eigen_ck(&mu)?)?,
        Command::Table {
            family,
            max_deg,
            n,
            route,
            t_variant,
            out,
        } => {
            let mut entries = Vec::new();
            for lambda in partitions_up_to(max_deg, n.unwrap_or(max_deg.max(1))) {
                let value = compute(family, &lambda, n, route, t_variant)?;
                entries.push(BasisElement {
                    family,
                    index: lambda,
                    n,
                    value,
                });
            }
            emit(
                &out,
                &json!({ "family": family, "N": n, "max_deg": max_deg, "entries": entries }),
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn family_and_lambda(e: &Element) -> Result<(Family, Partition), CliError> {
    match (e.family, &e.lambda) {
        (Some(f), Some(l)) => Ok((f, l.clone())),
        _ => Err(usage("--family and --lambda are required")),
    }
}

/// The element of `family` at `lambda`: a polynomial in `n` variables, or a
/// symmetric function when `n` is absent.
fn compute(
    family: Family,
    lambda: &Partition,
    n: Option<usize>,
    route: FRoute,
    t_variant: TVariant,
) -> Result<BasisValue, CliError> {
    let inverted = |p: MPoly| match t_variant {
        TVariant::T => p,
        TVariant::TInverse => p.map_coeffs(RatQT::subst_t_inv),
    };
    Ok(match (family, n) {
        (Family::HlP, Some(n)) => BasisValue::Poly(inverted(hl_p(lambda, n))),
        (Family::HlQ, Some(n)) => BasisValue::Poly(inverted(hl_p(lambda, n).scale(&b_lambda(lambda)))),
        (Family::Macdonald, Some(n)) => BasisValue::Poly(macdonald_poly(lambda, n)),
        (Family::Interp, Some(n)) => BasisValue::Poly(interp_macdonald(lambda, n)?),
        (Family::InhomF, Some(n)) => BasisValue::Poly(inverted(inhom_f(lambda, n, route)?)),
        (Family::InhomF, None) => BasisValue::Func(inhom_f_func(lambda, t_variant)?),
        (family, None) => {
            let f = match family {
                Family::HlP => hl_p_func(lambda),
                Family::HlQ => hl_q_func(lambda),
                Family::Macdonald => macdonald_func(lambda),
                _ => interp_func(lambda)?,
            };
            BasisValue::Func(match (family, t_variant) {
                (Family::HlP | Family::HlQ, TVariant::TInverse) => f.subst_t_inverse(),
                _ => f,
            })
        }
    })
}

fn pi_variant(family: Option<Family>) -> PiVariant {
    match family {
        Some(Family::Interp) => PiVariant::Interp,
        Some(Family::InhomF) => PiVariant::Hl,
        _ => PiVariant::Plain,
    }
}

fn lift(e: &Element) -> Result<SymFuncP, CliError> {
    let poly = match &e.input {
        Some(path) => serde_json::from_str::<MPoly>(&read(path)?)?,
        None => {
            let (family, lambda) = family_and_lambda(e)?;
            let n = e.n.unwrap_or(lambda.size() + 1);
            match compute(family, &lambda, Some(n), e.route, TVariant::T)? {
                BasisValue::Poly(p) => p,
                BasisValue::Func(_) => unreachable!("finite alphabet requested"),
            }
        }
    };
    let n = poly.spec().arity(Group::X);
    Ok(lift_to_lambda(&poly, &PiMap::new(pi_variant(e.family), n))?)
}

/// The operand of `apply-op`, as a polynomial or a symmetric function.
fn operand(e: &Element, finite: bool) -> Result<BasisValue, CliError> {
    if let Some(path) = &e.input {
        let raw: serde_json::Value = serde_json::from_str(&read(path)?)?;
        return Ok(if raw.get("vars").is_some() {
            BasisValue::Poly(serde_json::from_value(raw)?)
        } else {
            BasisValue::Func(serde_json::from_value(raw)?)
        });
    }
    let (family, lambda) = family_and_lambda(e)?;
    let n = if finite {
        Some(e.n.ok_or_else(|| usage("this operator acts on polynomials and needs --N"))?)
    } else {
        None
    };
    compute(family, &lambda, n, e.route, e.t_variant)
}

fn apply_op(op: Operator, e: &Element, k: Option<usize>, out: &Output) -> Result<(), CliError> {
    let finite = matches!(op, Operator::Hn | Operator::Dn | Operator::An);
    let value = operand(e, finite)?;
    let need_k = || k.ok_or_else(|| usage("this operator needs --k"));
    match (op, value) {
        (Operator::Hn | Operator::Dn | Operator::An, BasisValue::Poly(f)) => {
            let n = f.spec().arity(Group::X);
            match op {
                Operator::Hn => emit(out, &apply_hn(need_k()?, &f, n)?),
                Operator::Dn => emit(out, &apply_dn(&f, n)?),
                _ => emit(out, &apply_an(&f, n)?),
            }
        }
        (Operator::Ak, BasisValue::Func(f)) => emit(out, &apply_ak(need_k()?, &f)?),
        (Operator::Ainfty, BasisValue::Func(f)) => emit(out, &apply_ainfty(&f)?),
        (Operator::Vertex, BasisValue::Func(f)) => emit(out, &vertex_a1(&f)?),
        (_, BasisValue::Poly(_)) => Err(usage("this operator acts on symmetric functions, not polynomials")),
        (_, BasisValue::Func(_)) => Err(usage("this operator acts on polynomials, not symmetric functions")),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn emit<T: Serialize>(out: &Output, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}
