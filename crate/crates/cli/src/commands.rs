use exact_core::{format_scalar, Scalar};
use hall_littlewood::{hl_pq, hl_r, skew_eval, sym_gen_coeffs, Alphabet, GeneratingKind, HlFamily, SkewKind};
use identity_suites::{run_suite, Suite, SuiteSpec};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use partition_space::Partition;
use serde_json::json;

use bethe_gaudin::{
    bethe_solve, gaudin_agreement, gaudin_det, gaudin_sum, lascoux_reduction_check, periodic_eigen_check, ChainParams,
    SolverConfig,
};

use crate::args::{BetheArgs, EvalArgs, EvalKind, GaudinArgs, OutputMode, SkewChoice, VerifyArgs};
use crate::{CliError, Verdict};

pub const SEED_ENV: &str = "INTEGRABLE_LAB_SEED";

/// Flag value, then the environment, then 0.
pub fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var(SEED_ENV) {
        Ok(text) => text.trim().parse().map_err(|_| CliError::Usage(format!("{SEED_ENV}={text} is not a seed"))),
        Err(_) => Ok(0),
    }
}

pub fn verify(args: &VerifyArgs, mode: OutputMode) -> Result<Verdict, CliError> {
    let spec = SuiteSpec {
        suite: args.suite,
        seed: resolve_seed(args.seed)?,
        draws: args.draws,
        sites: args.sites,
        particles: args.particles,
        cap: args.cap,
        degree: args.degree,
        t: args.t.clone(),
        x: args.x.clone(),
        tolerance: args.tolerance,
    };
    let report = run_suite(&spec)?;
    match mode {
        OutputMode::Human => {
            if args.suite == Suite::PaperMatrices {
                println!("{PRINTED_MATRICES}");
            }
            println!("{report}");
        }
        OutputMode::Json => println!("{}", report.to_json()),
    }
    Ok(Verdict::from_passed(report.passed()))
}

const PRINTED_MATRICES: &str = "\
basis (occupations): (2,0) (1,1) (0,2), rows = target

Lambda_2(z) =
  [ 1+z^2 x        (1-t) z        0            ]
  [ (1-t^2) z x    1+z^2 x        (1-t^2) z    ]
  [ 0              (1-t) z x      1+z^2 x      ]

q_2(z) =
  [ 1              -z             z^2          ]
  [ -(1+t) z x     1+z^2 x        -(1+t) z     ]
  [ z^2 x^2        -z x           1            ]
";

pub fn eval(args: &EvalArgs, mode: OutputMode) -> Result<Verdict, CliError> {
    let vars = Alphabet::direct(args.vars.0.clone());
    let t = &args.t;
    let value = match args.kind {
        EvalKind::P | EvalKind::Q => {
            let family = if args.kind == EvalKind::P { HlFamily::P } else { HlFamily::Q };
            hl_pq(family, &partition(&args.lambda, "--lambda")?, &vars, t)?
        }
        EvalKind::R => hl_r(&exponents(args.mu.as_deref().ok_or_else(|| missing("--mu"))?)?, &vars, t)?,
        EvalKind::Skew => {
            let lambda = partition(&args.lambda, "--lambda")?;
            let mu = match &args.mu {
                Some(text) => text.parse::<Partition>()?,
                None => Partition::empty(),
            };
            let kind = match args.skew_kind {
                SkewChoice::P => SkewKind::P,
                SkewChoice::QOmega => SkewKind::QOmega,
            };
            skew_eval(kind, &lambda, &mu, &vars, t)?
        }
        EvalKind::Qr | EvalKind::Er => {
            let r = args.r.ok_or_else(|| missing("--r"))?;
            let kind = if args.kind == EvalKind::Qr { GeneratingKind::Complete } else { GeneratingKind::Elementary };
            sym_gen_coeffs(kind, &vars, t, r).swap_remove(r)
        }
    };
    match mode {
        OutputMode::Human => println!("{}", format_scalar(&value)),
        OutputMode::Json => {
            let doc = json!({
                "kind": format!("{:?}", args.kind),
                "vars": args.vars.0.iter().map(format_scalar).collect::<Vec<_>>(),
                "t": format_scalar(t),
                "value": format_scalar(&value),
            });
            println!("{doc}");
        }
    }
    Ok(Verdict::Pass)
}

fn missing(flag: &str) -> CliError {
    CliError::Usage(format!("{flag} is required for this kind"))
}

fn partition(text: &Option<String>, flag: &str) -> Result<Partition, CliError> {
    Ok(text.as_deref().ok_or_else(|| missing(flag))?.parse()?)
}

/// Integer tuple in parentheses or brackets, negatives allowed.
pub fn exponents(text: &str) -> Result<Vec<i64>, CliError> {
    let bad = || CliError::Usage(format!("`{text}` is not an integer tuple such as (1,0)"));
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .or_else(|| trimmed.strip_prefix('[').and_then(|s| s.strip_suffix(']')))
        .ok_or_else(bad)?
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect()
}

fn complex_text(c: &Complex64) -> String {
    format!("{:.12}{:+.12}i", c.re, c.im)
}

pub fn bethe(args: &BetheArgs, mode: OutputMode) -> Result<Verdict, CliError> {
    let params = ChainParams {
        sites: args.sites,
        particles: args.magnons,
        t: args.t.clone(),
        s: args.s.clone(),
        x: args.x.clone(),
    };
    let config = SolverConfig {
        seeds: args.seeds,
        rng_seed: resolve_seed(args.seed)?,
        max_iterations: args.max_iterations,
        tolerance: args.tolerance,
    };
    let report = bethe_solve(&params, &config)?;
    let z = Complex64::new(args.z.to_f64().unwrap_or(f64::NAN), 0.0);
    let mut rows = Vec::new();
    let mut all_passed = !report.solutions.is_empty();
    for system in &report.solutions {
        let eigen = periodic_eigen_check(system, z)?;
        let residual = system.max_residual();
        let passed = residual < args.tolerance && eigen.passed;
        all_passed &= passed;
        rows.push((system, residual, eigen, passed));
    }
    let verdict = Verdict::from_passed(all_passed);
    match mode {
        OutputMode::Human => {
            println!(
                "chain N={} M={} t={} x={} s={}",
                args.sites,
                args.magnons,
                format_scalar(&args.t),
                format_scalar(&args.x),
                format_scalar(&args.s)
            );
            for (i, (system, residual, eigen, passed)) in rows.iter().enumerate() {
                let roots: Vec<String> = system.roots.iter().map(complex_text).collect();
                println!(
                    "{} solution {}: u = [{}] residual {:.3e} eigen deviation {:.3e}",
                    if *passed { "PASS" } else { "FAIL" },
                    i + 1,
                    roots.join(", "),
                    residual,
                    eigen.deviation
                );
            }
            println!(
                "{}: {} solutions, {} starting points did not converge",
                verdict.label(),
                report.solutions.len(),
                report.failed_seeds
            );
        }
        OutputMode::Json => {
            let solutions: Vec<_> = rows
                .iter()
                .map(|(system, residual, eigen, passed)| {
                    json!({
                        "roots": system.roots.iter().map(|c| [c.re, c.im]).collect::<Vec<_>>(),
                        "max_residual": residual,
                        "eigen_deviation": eigen.deviation,
                        "passed": passed,
                    })
                })
                .collect();
            let doc = json!({
                "sites": args.sites,
                "magnons": args.magnons,
                "t": format_scalar(&args.t),
                "x": format_scalar(&args.x),
                "s": format_scalar(&args.s),
                "z": format_scalar(&args.z),
                "seed": config.rng_seed,
                "solutions": solutions,
                "failed_seeds": report.failed_seeds,
                "passed": verdict == Verdict::Pass,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json values serialize"));
        }
    }
    Ok(verdict)
}

pub fn gaudin(args: &GaudinArgs, mode: OutputMode) -> Result<Verdict, CliError> {
    let (u, v) = (&args.u.0, &args.v.0);
    let sum = gaudin_sum(u, v, &args.t, &args.s, args.truncation)?;
    let det = gaudin_det(u, v, &args.t)?;
    let agreement = gaudin_agreement(&sum, &det);
    let lascoux = lascoux_reduction_check(u, v, &args.t)?;
    let verdict = Verdict::from_passed(agreement.passed && lascoux.passed);
    let approx = |x: &Scalar| x.to_f64().unwrap_or(f64::NAN);
    match mode {
        OutputMode::Human => {
            println!("sum  {:.15e} ({} terms, tail bound {:.3e})", approx(&sum.value), sum.terms, sum.tail_bound);
            println!("det  {:.15e} = {}", approx(&det), format_scalar(&det));
            println!("{} sum vs det: deviation {:.3e}; {}", label(agreement.passed), agreement.deviation, agreement.detail);
            println!("{} lascoux reduction: {}", label(lascoux.passed), lascoux.detail);
            println!("{}", verdict.label());
        }
        OutputMode::Json => {
            let doc = json!({
                "u": u.iter().map(format_scalar).collect::<Vec<_>>(),
                "v": v.iter().map(format_scalar).collect::<Vec<_>>(),
                "t": format_scalar(&args.t),
                "s": format_scalar(&args.s),
                "truncation": args.truncation,
                "sum": approx(&sum.value),
                "terms": sum.terms,
                "tail_bound": sum.tail_bound,
                "det": format_scalar(&det),
                "deviation": agreement.deviation,
                "agrees": agreement.passed,
                "lascoux": lascoux.passed,
                "passed": verdict == Verdict::Pass,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json values serialize"));
        }
    }
    Ok(verdict)
}

fn label(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_tuples() {
        assert_eq!(exponents("(1,0)").unwrap(), vec![1, 0]);
        assert_eq!(exponents("[2, -1]").unwrap(), vec![2, -1]);
        assert_eq!(exponents("()").unwrap(), Vec::<i64>::new());
        assert!(exponents("1,0").is_err());
        assert!(exponents("(a)").is_err());
    }
}
