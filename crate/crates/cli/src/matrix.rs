use std::collections::BTreeMap;

use baxter_q::build_qmatrix;
use exact_core::{format_scalar, GradedOperator, Scalar};
use lattice_models::{build_lax, periodic_transfer, LaxKind, SiteOperator};
use num_traits::{One, Zero};
use partition_space::Basis;
use serde_json::{json, Value};
use vertex_operators::{build_gamma, Family, Sign};

use crate::args::{FamilyChoice, LaxChoice, MatrixArgs, MatrixKind, OutputMode};
use crate::{CliError, Verdict};

/// Largest chain accepted for transfer and Q-matrices.
pub const MAX_SITES: usize = 5;
pub const MAX_PARTICLES: usize = 5;
pub const MAX_WEIGHT_CAP: usize = 12;
pub const MAX_SITE_CAP: usize = 20;

pub const ORIENTATION: &str = "rows = target, columns = source";

fn entries(op: &GradedOperator) -> Vec<Value> {
    op.blocks()
        .flat_map(|(degree, block)| {
            let mut cells: Vec<_> = block.entries().map(|(r, c, v)| (r, c, v.clone())).collect();
            cells.sort_by_key(|(r, c, _)| (*r, *c));
            cells
                .into_iter()
                .map(move |(row, col, value)| json!({"degree": degree, "row": row, "col": col, "value": format_scalar(&value)}))
        })
        .collect()
}

/// `sum_d c_d z^d` as text.
fn polynomial(terms: &BTreeMap<usize, Scalar>) -> String {
    let mut out = String::new();
    for (&d, c) in terms {
        let negative = *c < Scalar::zero();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        out.push_str(match (out.is_empty(), negative) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        });
        let power = match d {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{d}"),
        };
        if magnitude.is_one() && d > 0 {
            out.push_str(&power);
        } else if d == 0 {
            out.push_str(&format_scalar(&magnitude));
        } else {
            out.push_str(&format!("{} {power}", format_scalar(&magnitude)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn human(title: &str, labels: &[String], op: &GradedOperator) -> String {
    let mut cells: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
    for (degree, block) in op.blocks() {
        for (row, col, value) in block.entries() {
            if !value.is_zero() {
                cells.entry((row, col)).or_default().insert(degree, value.clone());
            }
        }
    }
    let mut out = format!("{title}\n");
    for (row, label) in labels.iter().enumerate() {
        let row_cells: Vec<String> = cells
            .range((row, 0)..(row + 1, 0))
            .map(|((_, col), terms)| format!("{} = {}", labels[*col], polynomial(terms)))
            .collect();
        out.push_str(&format!("  row {label}: {}\n", if row_cells.is_empty() { "0".to_string() } else { row_cells.join("; ") }));
    }
    out
}

struct Dump {
    title: String,
    params: Value,
    labels: Vec<String>,
    blocks: Vec<(Option<[usize; 2]>, GradedOperator)>,
}

fn build(args: &MatrixArgs) -> Result<Dump, CliError> {
    let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(CliError::Usage(format!("{what} exceeds the size cap"))) };
    let t = format_scalar(&args.t);
    Ok(match args.which {
        MatrixKind::Lambda | MatrixKind::Q => {
            check(args.sites >= 1 && args.sites <= MAX_SITES, &format!("N = {} (1..={MAX_SITES})", args.sites))?;
            check(args.particles <= MAX_PARTICLES, &format!("n = {} (max {MAX_PARTICLES})", args.particles))?;
            let (name, basis, op) = if args.which == MatrixKind::Lambda {
                let m = periodic_transfer(args.sites, args.particles, &args.x, &args.t)?;
                ("lambda", m.basis, m.op)
            } else {
                let m = build_qmatrix(args.sites, args.particles, &args.x, &args.t)?;
                ("q", m.basis, m.op)
            };
            Dump {
                title: format!("{name} N={} n={} t={t} x={}", args.sites, args.particles, format_scalar(&args.x)),
                params: json!({"N": args.sites, "n": args.particles, "t": t, "x": format_scalar(&args.x)}),
                labels: basis.states().iter().map(ToString::to_string).collect(),
                blocks: vec![(None, op)],
            }
        }
        MatrixKind::Gamma => {
            check(args.weight_cap <= MAX_WEIGHT_CAP, &format!("D = {} (max {MAX_WEIGHT_CAP})", args.weight_cap))?;
            let family = match args.family {
                FamilyChoice::L => Family::L,
                FamilyChoice::R => Family::R,
            };
            let basis = Basis::weight_capped(args.weight_cap);
            let g = build_gamma(family, args.sign, &basis, &args.t)?;
            let sign = if args.sign == Sign::Minus { "-" } else { "+" };
            Dump {
                title: format!("gamma family={family:?} sign={sign} D={} t={t}", args.weight_cap),
                params: json!({"family": format!("{family:?}"), "sign": sign, "D": args.weight_cap, "t": t}),
                labels: g.basis.states().iter().map(ToString::to_string).collect(),
                blocks: vec![(None, g.op)],
            }
        }
        MatrixKind::Lax => {
            check(args.cap <= MAX_SITE_CAP, &format!("cap = {} (max {MAX_SITE_CAP})", args.cap))?;
            let (kind, label) = match args.lax_kind {
                LaxChoice::Qboson => (LaxKind::QBoson, "qboson"),
                LaxChoice::Spin => (LaxKind::SpinS(args.s.clone()), "spin"),
            };
            let site = SiteOperator::new(args.cap, args.t.clone());
            let lax = build_lax(&kind, &site);
            let blocks = (0..2)
                .flat_map(|a| (0..2).map(move |b| (a, b)))
                .map(|(a, b)| (Some([a, b]), lax[a][b].clone()))
                .collect();
            Dump {
                title: format!("lax kind={label} cap={} t={t} s={}", args.cap, format_scalar(&args.s)),
                params: json!({"kind": label, "cap": args.cap, "t": t, "s": format_scalar(&args.s)}),
                labels: (0..site.dim()).map(|k| k.to_string()).collect(),
                blocks,
            }
        }
    })
}

/// The documented dump document.
pub fn dump_json(args: &MatrixArgs) -> Result<Value, CliError> {
    let dump = build(args)?;
    let which = format!("{:?}", args.which).to_lowercase();
    let mut doc = json!({
        "operator": which,
        "params": dump.params,
        "orientation": ORIENTATION,
        "basis": dump.labels,
    });
    match dump.blocks.as_slice() {
        [(None, op)] => {
            doc["max_degree"] = json!(op.max_degree());
            doc["entries"] = json!(entries(op));
        }
        blocks => {
            doc["blocks"] = blocks
                .iter()
                .map(|(pos, op)| json!({"position": pos, "max_degree": op.max_degree(), "entries": entries(op)}))
                .collect();
        }
    }
    Ok(doc)
}

pub fn matrix(args: &MatrixArgs, mode: OutputMode) -> Result<Verdict, CliError> {
    match mode {
        OutputMode::Json => {
            let doc = dump_json(args)?;
            println!("{}", serde_json::to_string_pretty(&doc).expect("json values serialize"));
        }
        OutputMode::Human => {
            let dump = build(args)?;
            println!("{}, {ORIENTATION}", dump.title);
            for (pos, op) in &dump.blocks {
                let title = match pos {
                    Some([a, b]) => format!("block ({a},{b})"),
                    None => "entries".to_string(),
                };
                print!("{}", human(&title, &dump.labels, op));
            }
        }
    }
    Ok(Verdict::Pass)
}
