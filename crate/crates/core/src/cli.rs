//! Command-line front end.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::braid::{
    admissible_masks, closure_components, is_admissible, jaeger_homfly, milnor_from_braid,
    parse_braid, pinf_general, pinf_positive, CircuitPartition, DEFAULT_BUDGET,
};
use crate::dynkin::{count_table_json, dynkin_nh, independence_polynomial, SimpleGraph};
use crate::error::{Error, Result};
use crate::genus_transform::{
    check_low_vanishing, combine_local, identity_checks, nh_from_series_global,
    nh_from_series_local, series_from_nh, series_from_nh_local, GlobalCurveData, LocalGermData,
    NhKind, NhVector,
};
use crate::json::big_array;
use crate::laurent::{binomial, one_minus_q_pow, LaurentPoly1, LaurentPoly2, TruncatedSeries};
use crate::models::{catalog, conjecture_check, find_model};
use crate::staircase::{
    ade_closed_formula, ade_closed_nh, ade_nh, counted_series, model_series, AdeType, Model,
};

/// Environment variable capping the number of braid letters enumerated.
pub const BUDGET_ENV: &str = "SEVERI_MAX_LETTERS";

#[derive(Parser, Debug)]
#[command(
    name = "severi",
    version,
    about = "Severi multiplicities of plane curve singularities and HOMFLY state sums"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Output {
    /// Emit a single JSON document.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hilbert series of a model curve (A, D or E), closed form and by count.
    Series {
        #[arg(long)]
        model: Model,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[command(flatten)]
        out: Output,
    },
    /// n_h from Euler characteristics of Hilbert schemes.
    Transform {
        /// Local germ data instead of a global curve.
        #[arg(long, conflicts_with_all = ["genus", "geometric_genus"])]
        local: bool,
        #[arg(long, requires = "local")]
        delta: Option<usize>,
        #[arg(long, requires = "local")]
        branches: Option<usize>,
        #[arg(long)]
        genus: Option<usize>,
        #[arg(long)]
        geometric_genus: Option<usize>,
        /// Comma-separated chi(C^[0]), chi(C^[1]), ...
        #[arg(long)]
        coeffs: String,
        /// Also report the low-degree criterion and identities for this Euler number.
        #[arg(long, allow_hyphen_values = true)]
        euler: Option<i64>,
        #[command(flatten)]
        out: Output,
    },
    /// n_h of a simple singularity.
    Ade {
        #[arg(long = "type")]
        ty: AdeType,
        #[command(flatten)]
        out: Output,
    },
    /// Independent vertex sets of a Dynkin diagram.
    Dynkin {
        #[arg(long = "type")]
        ty: AdeType,
        #[command(flatten)]
        out: Output,
    },
    /// HOMFLY polynomial of a braid closure by the circuit-partition sum.
    Homfly {
        #[arg(long)]
        strands: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Print only the lowest a-degree part.
        #[arg(long)]
        pinf: bool,
        /// List admissible circuit partitions.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Lowest a-degree part of a positive braid closure with its counts.
    Pinf {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        word: String,
        #[command(flatten)]
        out: Output,
    },
    /// Compare P_inf of the link with sum n_h z^(2h-b).
    Conjecture {
        /// ADE label or torus exponents such as T(4,5).
        #[arg(long, required_unless_present = "all")]
        model: Option<String>,
        /// Every catalog entry with a braid word.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Global n_h of a curve from the local vectors of its singularities.
    Combine {
        #[arg(long, default_value_t = 0)]
        geometric_genus: usize,
        /// A local vector n_0,...,n_delta; repeatable.
        #[arg(long = "local")]
        locals: Vec<String>,
        /// Also print chi(C^[n]) through this order.
        #[arg(long)]
        order: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// The singularity catalog.
    Catalog {
        #[command(flatten)]
        out: Output,
    },
    /// Check every reference value.
    Selftest {
        #[command(flatten)]
        out: Output,
    },
}

fn budget() -> usize {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

fn parse_coeffs(s: &str) -> Result<Vec<BigInt>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Invalid(format!("`{t}` is not an integer")))
        })
        .collect()
}

fn ints_line(v: &[BigInt]) -> String {
    big_array(v).to_string()
}

/// A command's result: JSON document and human-readable text.
struct Rendered {
    json: Value,
    text: String,
    ok: bool,
}

impl Rendered {
    fn new(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            ok: true,
        }
    }
}

fn run_series(model: Model, order: usize) -> Rendered {
    let closed = model_series(model, order);
    let counted = counted_series(model, order);
    let agree = closed == counted;
    let text = format!(
        "{model} through q^{order}\nclosed form: {}\ncounted:     {}\nagree: {agree}",
        ints_line(closed.coeffs()),
        ints_line(counted.coeffs())
    );
    let json = json!({
        "model": model.to_string(),
        "order": order,
        "closed_form": closed,
        "counted": counted,
        "agree": agree,
    });
    Rendered {
        json,
        text,
        ok: agree,
    }
}

#[allow(clippy::too_many_arguments)]
fn run_transform(
    local: bool,
    delta: Option<usize>,
    branches: Option<usize>,
    genus: Option<usize>,
    geometric_genus: Option<usize>,
    coeffs: &str,
    euler: Option<i64>,
) -> Result<Rendered> {
    let series = TruncatedSeries::from_coeffs(parse_coeffs(coeffs)?)?;
    if local {
        let delta = delta.ok_or_else(|| Error::Invalid("--local needs --delta".into()))?;
        let branches = branches.ok_or_else(|| Error::Invalid("--local needs --branches".into()))?;
        let data = LocalGermData::new(delta, branches, series)?;
        let n = nh_from_series_local(&data)?;
        let text = ints_line(&n.values);
        return Ok(Rendered::new(n.to_json(), text));
    }
    let genus = genus
        .ok_or_else(|| Error::Invalid("global transform needs --genus (or --local)".into()))?;
    let data = GlobalCurveData::new(genus, geometric_genus.unwrap_or(0), series)?;
    let n = nh_from_series_global(&data)?;
    let low = check_low_vanishing(&data.hilb, genus);
    let mut text = format!("h = {}..{}: {}", n.low, n.high(), ints_line(&n.values));
    text.push_str(&format!(
        "\nlow-degree criterion: {} (c = {})",
        low.ok,
        low.constant
            .as_ref()
            .map_or("-".to_string(), |c| c.to_string())
    ));
    let vanish_below = n
        .range(n.low, data.geometric_genus as i64 - 1)
        .iter()
        .all(|c| c == &BigInt::from(0));
    text.push_str(&format!(
        "\nvanishing below geometric genus: {vanish_below}"
    ));
    let mut json = json!({
        "nh": n.to_json(),
        "low_degree_criterion": low.ok,
        "c": low.constant.as_ref().map(crate::json::big_number),
        "vanishing_below_geometric_genus": vanish_below,
    });
    let mut ok = true;
    if let Some(chi) = euler {
        let r = identity_checks(&data, chi)?;
        text.push_str(&format!("\nn_g = 1 and n_(g-1) = chi + 2g - 2: {}", r.ok));
        json["identities"] = json!(r.ok);
        ok = r.ok;
    }
    Ok(Rendered { json, text, ok })
}

fn run_ade(t: AdeType) -> Rendered {
    let via_series = ade_nh(t);
    let via_formula = ade_closed_nh(t);
    let via_dynkin = dynkin_nh(t);
    let ok = via_series == via_formula && via_series == via_dynkin;
    let (delta, b) = t.delta_branches();
    let text = format!(
        "{t}: delta = {delta}, b = {b}, mu = {}\ntruncation: {}\nformula:    {}\ndynkin:     {}",
        t.milnor(),
        ints_line(&via_series.values),
        ints_line(&via_formula.values),
        ints_line(&via_dynkin.values),
    );
    Rendered {
        json: via_series.to_json(),
        text,
        ok,
    }
}

fn run_homfly(strands: usize, word: &str, pinf_only: bool, list: bool) -> Result<Rendered> {
    let w = parse_braid(word, strands)?;
    let budget = budget();
    let h = jaeger_homfly(&w, budget)?;
    let pinf = if w.is_positive() {
        Some(pinf_positive(&w, budget)?)
    } else {
        None
    };
    let low = h.unnormalized.lowest_a_part()?.1;
    let mut json = crate::braid::homfly_json(&w, &h, pinf.as_ref());
    let text = if pinf_only {
        low.to_string()
    } else {
        let mut t = format!(
            "strands: {}  writhe: {}  components: {}\nP:          {}\nnormalized: {}\nP_inf:      {}",
            w.strands(),
            w.writhe(),
            closure_components(&w),
            h.unnormalized,
            h.normalized.as_ref().map_or("-".to_string(), LaurentPoly2::to_string),
            low
        );
        if let Some(p) = &pinf {
            t.push_str(&format!("\ncounts:     {:?}", p.counts));
        }
        t
    };
    let mut text = text;
    if list {
        let masks = admissible_masks(&w, budget)?;
        let shown: Vec<String> = masks
            .iter()
            .map(|&m| CircuitPartition::from_mask(&w, m).to_string())
            .collect();
        for s in &shown {
            text.push('\n');
            text.push_str(s);
        }
        json["admissible"] = json!(shown);
    }
    Ok(Rendered::new(json, text))
}

fn run_pinf(strands: usize, word: &str) -> Result<Rendered> {
    let w = parse_braid(word, strands)?;
    let p = pinf_positive(&w, budget())?;
    let m = milnor_from_braid(&w)?;
    let text = format!(
        "P_inf: {}\ncounts: {:?}\nmu = w - n + 1 = {}",
        p.poly, p.counts, m.mu
    );
    let json = json!({
        "strands": w.strands(),
        "writhe": w.writhe(),
        "pinf": p.poly,
        "counts": p.counts.iter().enumerate().map(|(r, c)| json!([r, c])).collect::<Vec<_>>(),
        "mu": m.mu,
    });
    Ok(Rendered::new(json, text))
}

fn run_conjecture(model: Option<&str>, all: bool) -> Result<Rendered> {
    let models = if all {
        catalog()
            .into_iter()
            .filter(|m| m.link_braid.is_some())
            .collect()
    } else {
        vec![find_model(model.unwrap_or_default())?]
    };
    let mut lines = Vec::new();
    let mut reports = Vec::new();
    let mut ok = true;
    for m in &models {
        let r = conjecture_check(m, budget())?;
        let verdict = match r.holds() {
            Some(true) => "equal".to_string(),
            Some(false) => {
                ok = false;
                "DIFFER".to_string()
            }
            None => "n_h unavailable".to_string(),
        };
        lines.push(format!(
            "{:>12}  P_inf = {}  |  sum n_h z^(2h-b) = {}  [{verdict}]",
            r.name,
            r.pinf,
            r.predicted
                .as_ref()
                .map_or("-".to_string(), LaurentPoly1::to_string)
        ));
        reports.push(r.to_json());
    }
    let json = if all {
        json!(reports)
    } else {
        reports.pop().expect("one model")
    };
    Ok(Rendered {
        json,
        text: lines.join("\n"),
        ok,
    })
}

fn run_combine(
    geometric_genus: usize,
    locals: &[String],
    order: Option<usize>,
) -> Result<Rendered> {
    let vectors = locals
        .iter()
        .map(|s| Ok(NhVector::local(parse_coeffs(s)?)))
        .collect::<Result<Vec<_>>>()?;
    let n = combine_local(geometric_genus, &vectors);
    let mut text = format!("h = {}..{}: {}", n.low, n.high(), ints_line(&n.values));
    let mut json = json!({ "nh": n.to_json() });
    if let Some(order) = order {
        let s = series_from_nh(&n, order)?;
        text.push_str(&format!("\nchi(C^[n]): {}", ints_line(s.coeffs())));
        json["series"] = serde_json::to_value(&s).expect("serializable");
    }
    Ok(Rendered::new(json, text))
}

fn run_catalog() -> Rendered {
    let models = catalog();
    let lines: Vec<String> = models
        .iter()
        .map(|m| {
            format!(
                "{:>12}  delta={:<3} mu={:<3} b={}  braid: {}",
                m.name,
                m.delta,
                m.mu,
                m.branches,
                m.link_braid.as_ref().map_or("-".to_string(), |w| format!(
                    "[{} strands] {}",
                    w.strands(),
                    w
                ))
            )
        })
        .collect();
    let json = json!(models.iter().map(|m| m.to_json()).collect::<Vec<_>>());
    Rendered::new(json, lines.join("\n"))
}

fn z(terms: &[(i64, i64)]) -> LaurentPoly1 {
    LaurentPoly1::from_terms(terms.iter().copied())
}

fn local_is(n: &NhVector, expected: &[i64]) -> bool {
    n.values
        == expected
            .iter()
            .map(|&v| BigInt::from(v))
            .collect::<Vec<_>>()
}

/// Every reference value with its pass/fail status.
pub fn selftest_anchors() -> Vec<(&'static str, bool)> {
    let budget = budget();
    let mut out: Vec<(&'static str, bool)> = Vec::new();
    let mut check =
        |name: &'static str, f: &dyn Fn() -> Result<bool>| out.push((name, f().unwrap_or(false)));

    check("smooth genus-2 curve: n = (0, 0, 1)", &|| {
        let d = GlobalCurveData::new(2, 2, one_minus_q_pow(2, 2))?;
        let n = nh_from_series_global(&d)?;
        Ok(n.range(0, 2) == vec![0.into(), 0.into(), 1.into()])
    });
    let global_from_local = |local: Vec<i64>, b: usize| -> Result<NhVector> {
        let loc = series_from_nh_local(&NhVector::local(local), b, 6)?;
        let hilb = loc.mul(&one_minus_q_pow(b as i64 - 2, 6));
        nh_from_series_global(&GlobalCurveData::new(1, 0, hilb)?)
    };
    check("rational nodal curve: (n_0, n_1) = (1, 1)", &|| {
        let n = global_from_local(vec![1, 1], 2)?;
        Ok(n.range(-5, 1) == [vec![BigInt::from(0); 5], vec![1.into(), 1.into()]].concat())
    });
    check("rational cuspidal curve: (n_0, n_1) = (2, 1)", &|| {
        let n = global_from_local(vec![2, 1], 1)?;
        Ok(n.range(-5, 1) == [vec![BigInt::from(0); 5], vec![2.into(), 1.into()]].concat())
    });
    check("node germ: (n_0, n_1) = (1, 1)", &|| {
        let d = LocalGermData::new(1, 2, TruncatedSeries::new(vec![1, 1], 1))?;
        Ok(local_is(&nh_from_series_local(&d)?, &[1, 1]))
    });
    check("cusp germ: (n_0, n_1) = (2, 1)", &|| {
        let d = LocalGermData::new(1, 1, TruncatedSeries::new(vec![1, 1], 1))?;
        Ok(local_is(&nh_from_series_local(&d)?, &[2, 1]))
    });
    check("nodal curves: n_h = C(g - g~, g - h)", &|| {
        let node = NhVector::local(vec![1, 1]);
        Ok((0..=10usize).all(|k| {
            (0..=3usize).all(|gt| {
                let n = combine_local(gt, &vec![node.clone(); k]);
                let g = (gt + k) as i64;
                (0..=g).all(|h| n.get(h) == binomial(g - gt as i64, g - h))
            })
        }))
    });
    check(
        "rational curve with one singularity: n_h(C) = n_h(c)",
        &|| {
            let e6 = ade_nh(AdeType::E6);
            Ok(combine_local(0, std::slice::from_ref(&e6)).values == e6.values)
        },
    );
    check("cuspidal cubic: n_0 = chi + 2g - 2 = 2", &|| {
        let s = series_from_nh(&NhVector::new(NhKind::Global, 0, vec![2, 1]), 6)?;
        let r = identity_checks(&GlobalCurveData::new(1, 0, s.clone())?, 2)?;
        Ok(r.ok && check_low_vanishing(&s, 1).constant == Some(BigInt::from(2)))
    });
    check("nodal cubic: n_0 = 1", &|| {
        let s = series_from_nh(&NhVector::new(NhKind::Global, 0, vec![1, 1]), 6)?;
        Ok(identity_checks(&GlobalCurveData::new(1, 0, s)?, 1)?.ok)
    });
    check("E6: (5, 10, 6, 1)", &|| {
        Ok(local_is(&ade_nh(AdeType::E6), &[5, 10, 6, 1]))
    });
    check("E7: (2, 11, 15, 7, 1)", &|| {
        Ok(local_is(&ade_nh(AdeType::E7), &[2, 11, 15, 7, 1]))
    });
    check("E8: (7, 21, 21, 8, 1)", &|| {
        Ok(local_is(&ade_nh(AdeType::E8), &[7, 21, 21, 8, 1]))
    });
    check("A and D binomial formulas, index <= 12", &|| {
        Ok(AdeType::all_up_to(12)
            .into_iter()
            .all(|t| ade_nh(t) == ade_closed_nh(t)))
    });
    check(
        "A1 = (1, 1), A2 = (2, 1), A3: n_1 = 3, E8: n_4 = 1",
        &|| {
            Ok(local_is(&ade_nh(AdeType::A(1)), &[1, 1])
                && local_is(&ade_nh(AdeType::A(2)), &[2, 1])
                && ade_closed_formula(AdeType::A(3), 1)? == BigInt::from(3)
                && ade_closed_formula(AdeType::E8, 4)? == BigInt::from(1))
        },
    );
    check(
        "E6 local vector rebuilds the E_inf series through q^3",
        &|| {
            let s = series_from_nh_local(&NhVector::local(vec![5, 10, 6, 1]), 1, 3)?;
            Ok(s == model_series(Model::EInf, 3))
        },
    );
    check("Dynkin independent sets: E6, E8", &|| {
        Ok(local_is(&dynkin_nh(AdeType::E6), &[5, 10, 6, 1])
            && local_is(&dynkin_nh(AdeType::E8), &[7, 21, 21, 8, 1])
            && independence_polynomial(&SimpleGraph::dynkin(AdeType::E6))?.len() == 4)
    });
    check("braid words: (1 2)^4 on 3 strands, 1 1 1 on 2", &|| {
        let t34 = parse_braid("(1 2)^4", 3)?;
        let tre = parse_braid("1 1 1", 2)?;
        Ok(t34.len() == 8
            && tre.len() == 3
            && closure_components(&t34) == 1
            && closure_components(&tre) == 1)
    });
    check(
        "trefoil: five admissible sequences, 1 1 ~1 among them",
        &|| {
            let w = parse_braid("1 1 1", 2)?;
            let p = CircuitPartition::new(&w, vec![true, true, false])?;
            let q = CircuitPartition::new(&w, vec![true, false, true])?;
            Ok(admissible_masks(&w, budget)?.len() == 5 && is_admissible(&p) && !is_admissible(&q))
        },
    );
    check(
        "trefoil: P = a^2 (2 - a^2 + z^2), P_inf = 2z^-1 + z",
        &|| {
            let w = parse_braid("1 1 1", 2)?;
            let h = jaeger_homfly(&w, budget)?;
            let expected = LaurentPoly2::from_terms([((2, 0), 2), ((4, 0), -1), ((2, 2), 1)]);
            let p = pinf_positive(&w, budget)?;
            Ok(h.normalized == Some(expected)
                && p.poly == z(&[(-1, 2), (1, 1)])
                && p.counts == vec![1, 2])
        },
    );
    check("T(3,4): #A_{3,r} = (1, 6, 10, 5)", &|| {
        let w = parse_braid("(1 2)^4", 3)?;
        let p = pinf_positive(&w, budget)?;
        let (_, low) = pinf_general(&w, budget)?;
        let expected = z(&[(-1, 5), (1, 10), (3, 6), (5, 1)]);
        Ok(p.counts == vec![1, 6, 10, 5] && p.poly == expected && low == expected)
    });
    check(
        "mu = w - n + 1: cusp (2, delta 1), E6 (6, delta 3)",
        &|| {
            let c = milnor_from_braid(&parse_braid("1 1 1", 2)?)?;
            let e = milnor_from_braid(&parse_braid("(1 2)^4", 3)?)?;
            Ok(c.mu == 2 && c.delta(1) == Some(1) && e.mu == 6 && e.delta(1) == Some(3))
        },
    );
    check("catalog: A2 = 1 1 1, E6 = (1 2)^4", &|| {
        let a2 = find_model("A2")?;
        let e6 = find_model("E6")?;
        Ok(a2.link_braid == Some(parse_braid("1 1 1", 2)?)
            && e6.link_braid == Some(parse_braid("(1 2)^4", 3)?)
            && e6.delta == 3)
    });
    check("conjecture: A2, E6, E8", &|| {
        let mut ok = true;
        for label in ["A2", "E6", "E8"] {
            ok &= conjecture_check(&find_model(label)?, budget)?.holds() == Some(true);
        }
        Ok(ok)
    });
    out
}

fn run_selftest() -> Rendered {
    let anchors = selftest_anchors();
    let ok = anchors.iter().all(|(_, pass)| *pass);
    let text = anchors
        .iter()
        .map(|(name, pass)| format!("[{}] {name}", if *pass { "pass" } else { "FAIL" }))
        .collect::<Vec<_>>()
        .join("\n");
    let json = json!({
        "passed": anchors.iter().filter(|(_, p)| *p).count(),
        "total": anchors.len(),
        "anchors": anchors.iter().map(|(n, p)| json!({"name": n, "pass": p})).collect::<Vec<_>>(),
    });
    Rendered { json, text, ok }
}

fn dispatch(cmd: &Command) -> Result<(Rendered, bool)> {
    Ok(match cmd {
        Command::Series { model, order, out } => (run_series(*model, *order), out.json),
        Command::Transform {
            local,
            delta,
            branches,
            genus,
            geometric_genus,
            coeffs,
            euler,
            out,
        } => (
            run_transform(
                *local,
                *delta,
                *branches,
                *genus,
                *geometric_genus,
                coeffs,
                *euler,
            )?,
            out.json,
        ),
        Command::Ade { ty, out } => (run_ade(*ty), out.json),
        Command::Dynkin { ty, out } => {
            let json = count_table_json(*ty);
            let text = format!(
                "{ty}: independent k-sets {}\nn_h: {}",
                json["counts"], json["nh"]["values"]
            );
            (Rendered::new(json, text), out.json)
        }
        Command::Homfly {
            strands,
            word,
            pinf,
            list,
            out,
        } => (run_homfly(*strands, word, *pinf, *list)?, out.json),
        Command::Pinf { strands, word, out } => (run_pinf(*strands, word)?, out.json),
        Command::Conjecture { model, all, out } => {
            (run_conjecture(model.as_deref(), *all)?, out.json)
        }
        Command::Combine {
            geometric_genus,
            locals,
            order,
            out,
        } => (run_combine(*geometric_genus, locals, *order)?, out.json),
        Command::Catalog { out } => (run_catalog(), out.json),
        Command::Selftest { out } => (run_selftest(), out.json),
    })
}

/// Runs the CLI on `argv` (including the program name). Returns the exit code.
pub fn run<I, T, O, E>(argv: I, stdout: &mut O, stderr: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok((r, as_json)) => {
            let _ = if as_json {
                writeln!(stdout, "{}", r.json)
            } else {
                writeln!(stdout, "{}", r.text)
            };
            if r.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
