use std::io::{Read, Write};

use betadf::cfk::{itinerary_of, n_of_w, s_of, Itinerary};
use betadf::dfset::{df_of_beta, df_polytope, df_sandwich, lock_interval, plot_csv, plot_rows, DfOfBeta, DfResult, PlotRule};
use betadf::exact_arith::{format_rational, parse_rational, to_decimal, AlgebraicNumber};
use betadf::markov_oracle::{build_partition, loops_json, minimal_loops, oracle_hull};
use betadf::symbolic::{
    alphabet_size, digit_freq_digits, finite_kneading, greedy_digits, is_maximal, prefix_freq_trajectory, w_beta, DigitSeq,
    FreqVector, Word,
};
use betadf::{Error, Result};
use serde_json::{json, Value};

use crate::input::{parse_alpha, parse_beta, parse_itinerary, parse_list};
use crate::{Command, Config, Format};

/// How a successful run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Exact,
    Approximate,
    Failed,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Exact => 0,
            Status::Approximate => 2,
            Status::Failed => 1,
        }
    }

    fn from_exact(exact: bool) -> Self {
        if exact {
            Status::Exact
        } else {
            Status::Approximate
        }
    }
}

struct Report {
    json: Value,
    text: String,
    csv: Option<String>,
    status: Status,
    default: Format,
}

impl Report {
    fn new(json: Value, text: String, status: Status, default: Format) -> Self {
        Report { json, text, csv: None, status, default }
    }

    fn print(&self, format: Option<Format>) -> Result<Status> {
        let out = match format.unwrap_or(self.default) {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&self.json).expect("reports serialize")),
            Format::Text => format!("{}\n", self.text),
            Format::Csv => self.csv.clone().ok_or_else(|| Error::Parse("this command has no CSV output".into()))?,
        };
        emit(&out);
        Ok(self.status)
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

pub fn run(command: &Command, cfg: &Config) -> Result<Status> {
    let report = match command {
        Command::Expand { beta, x, digits } => expand(&beta.resolve()?, x, *digits)?,
        Command::Kneading { beta, digits } => kneading(&beta.resolve()?, *digits, cfg)?,
        Command::Wbeta { beta, digits } => wbeta(&beta.resolve()?, *digits, cfg)?,
        Command::Itinerary { beta, word, alpha } => {
            if let Some(a) = alpha {
                itinerary_from_alpha(&parse_alpha(a)?)
            } else if let Some(w) = word {
                let k = match cfg.k {
                    Some(k) => k,
                    None => infer_k(w)?,
                };
                itinerary_from_seq(DigitSeq::parse(w, k, budget(cfg))?, cfg)?
            } else {
                itinerary_from_seq(w_beta(&beta.resolve()?, budget(cfg))?, cfg)?
            }
        }
        Command::Infimax { itinerary, alpha, digits } => infimax(itinerary.as_deref(), alpha.as_deref(), *digits, cfg)?,
        Command::Dfset { beta, itinerary, batch } => {
            if let Some(path) = batch {
                return batch_dfset(path, cfg);
            }
            match itinerary {
                Some(text) => dfset_itinerary(&parse_itinerary(text)?, cfg.k.unwrap_or(3) as usize, cfg)?,
                None => dfset_beta(&beta.resolve()?, cfg)?,
            }
        }
        Command::LockInterval { prefix } => {
            let l = lock_interval(&parse_list::<u64>(prefix)?, cfg.k.unwrap_or(3))?;
            let text = format!(
                "[{}, {}]\nlo: {}\nhi: {}",
                l.lo.beta.to_decimal(cfg.precision),
                l.hi.beta.to_decimal(cfg.precision),
                l.lo.beta.poly(),
                l.hi.beta.poly()
            );
            Report::new(l.to_json(cfg.precision), text, Status::Exact, Format::Json)
        }
        Command::PlotData { rule, triangles } => plot_data(rule, *triangles, cfg)?,
        Command::MarkovCheck { beta, kneading } => markov_check(&beta.resolve()?, kneading.as_deref(), cfg)?,
        Command::FreqTrajectory { beta, word, strides } => {
            let seq = match word {
                Some(w) => DigitSeq::parse(w, cfg.k.map_or_else(|| infer_k(w), Ok)?, budget(cfg))?,
                None => w_beta(&beta.resolve()?, budget(cfg))?,
            };
            freq_trajectory(&seq, &parse_list::<usize>(strides)?, cfg)?
        }
    };
    report.print(cfg.format)
}

fn budget(cfg: &Config) -> usize {
    usize::try_from(cfg.digit_budget).unwrap_or(usize::MAX)
}

fn depth(cfg: &Config) -> usize {
    usize::try_from(cfg.depth).unwrap_or(usize::MAX)
}

/// Sequences of maximal form start with `k - 1`.
fn infer_k(text: &str) -> Result<u8> {
    let c = text.trim().chars().next().ok_or(Error::EmptyWord)?;
    let d = c.to_digit(36).ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))?;
    Ok(d as u8 + 1)
}

fn shown(seq: &DigitSeq, digits: usize) -> String {
    match seq {
        DigitSeq::Periodic(p) => p.to_text(),
        DigitSeq::Stream(_) => {
            let p = seq.prefix(digits);
            format!("{}…", betadf::symbolic::word::digits_to_string(&p))
        }
    }
}

fn expand(beta: &AlgebraicNumber, x: &str, digits: usize) -> Result<Report> {
    let w = greedy_digits(beta, &parse_rational(x)?, digits)?;
    let text = w.to_string();
    Ok(Report::new(json!({ "x": x, "digits": text, "k": w.k() }), text, Status::Exact, Format::Text))
}

fn kneading(beta: &AlgebraicNumber, digits: usize, cfg: &Config) -> Result<Report> {
    match finite_kneading(beta, budget(cfg))? {
        Some(d) => {
            let text = format!("{}(0)", Word::new(d, alphabet_size(beta)?)?);
            Ok(Report::new(json!({ "kneading": text, "finite": true }), text, Status::Exact, Format::Text))
        }
        None => {
            let w = greedy_digits(beta, &num_traits::One::one(), digits)?;
            let text = format!("{w}…");
            Ok(Report::new(json!({ "kneading": text, "finite": false }), text, Status::Approximate, Format::Text))
        }
    }
}

fn wbeta(beta: &AlgebraicNumber, digits: usize, cfg: &Config) -> Result<Report> {
    let w = w_beta(beta, budget(cfg))?;
    let text = shown(&w, digits);
    let json = json!({ "w": text, "exact": w.is_exact(), "certified": w.certified_len() });
    Ok(Report::new(json, text, Status::from_exact(w.is_exact()), Format::Text))
}

fn itinerary_from_alpha(alpha: &FreqVector) -> Report {
    let n = itinerary_of(alpha);
    let text = n.to_text();
    Report::new(json!({ "alpha": alpha, "itinerary": text }), text, Status::Exact, Format::Text)
}

fn itinerary_from_seq(w: DigitSeq, cfg: &Config) -> Result<Report> {
    let e = n_of_w(&w, depth(cfg))?;
    let text = e.itinerary.to_text();
    let trace: Vec<String> = e.trace.iter().map(|s| shown(s, 60)).collect();
    let json = json!({
        "w": shown(&w, 60),
        "itinerary": text,
        "exact": e.itinerary.is_exact(),
        "trace": trace,
    });
    Ok(Report::new(json, text, Status::from_exact(e.itinerary.is_exact()), Format::Text))
}

fn infimax(itinerary: Option<&str>, alpha: Option<&str>, digits: usize, cfg: &Config) -> Result<Report> {
    let (n, k) = match (itinerary, alpha) {
        (_, Some(a)) => {
            let a = parse_alpha(a)?;
            let k = a.k() as u8;
            (itinerary_of(&a), k)
        }
        (Some(t), None) => (parse_itinerary(t)?, cfg.k.unwrap_or(3)),
        (None, None) => return Err(Error::Parse("give --itinerary or --alpha".into())),
    };
    let s = s_of(&n, k, budget(cfg))?;
    let text = shown(&s, digits);
    let mut json = json!({ "itinerary": n.to_text(), "sequence": text, "exact": s.is_exact() });
    if let Some(p) = s.as_periodic() {
        json["maximal"] = json!(is_maximal(p));
        if p.preperiod().is_empty() {
            json["block_freq"] = json!(digit_freq_digits(p.period(), k)?);
        }
    }
    Ok(Report::new(json, text, Status::from_exact(s.is_exact()), Format::Text))
}

fn polytope_text(p: &betadf::dfset::Polytope) -> String {
    p.vertices().iter().map(|v| format!("{} {}", v.coords, v.tag)).collect::<Vec<_>>().join("\n")
}

fn dfset_itinerary(n: &Itinerary, k: usize, cfg: &Config) -> Result<Report> {
    match n {
        Itinerary::Rational { .. } | Itinerary::Finite { .. } => {
            let p = df_polytope(n, k)?;
            let json = json!({ "itinerary": n.to_text(), "exact": true, "polytope": p.to_json() });
            Ok(Report::new(json, polytope_text(&p), Status::Exact, Format::Json))
        }
        _ => {
            let r = match n.certified_depth() {
                Some(d) => d.min(depth(cfg)).saturating_sub(1),
                None => depth(cfg),
            };
            let s = df_sandwich(n, r, k)?;
            let text = format!("depth {} gap {:e}\ninner:\n{}\nouter:\n{}", s.depth, s.gap, polytope_text(&s.inner), polytope_text(&s.outer));
            let json = json!({ "itinerary": n.to_text(), "exact": false, "sandwich": s });
            Ok(Report::new(json, text, Status::Approximate, Format::Json))
        }
    }
}

fn beta_json(beta: &AlgebraicNumber, r: &DfOfBeta, places: usize) -> Value {
    let mut json = json!({
        "beta": beta.to_decimal(places),
        "w": shown(&r.w, 60),
        "itinerary": r.itinerary.to_text(),
        "exact": r.is_exact(),
    });
    match &r.result {
        DfResult::Exact(p) => json["polytope"] = p.to_json(),
        DfResult::Approximate(s) => json["sandwich"] = json!(s),
    }
    json
}

fn dfset_beta(beta: &AlgebraicNumber, cfg: &Config) -> Result<Report> {
    let r = df_of_beta(beta, budget(cfg), depth(cfg))?;
    let text = match &r.result {
        DfResult::Exact(p) => format!("{}\n{}", r.itinerary, polytope_text(p)),
        DfResult::Approximate(s) => format!("{}\ngap {:e}\ninner:\n{}", r.itinerary, s.gap, polytope_text(&s.inner)),
    };
    Ok(Report::new(beta_json(beta, &r, cfg.precision), text, Status::from_exact(r.is_exact()), Format::Json))
}

/// One base per line, computed concurrently, reported in input order.
fn batch_dfset(path: &str, cfg: &Config) -> Result<Status> {
    let mut content = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut content).map_err(|e| Error::Parse(e.to_string()))?;
    } else {
        content = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    }
    let lines: Vec<&str> = content.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    let results: Vec<(Value, Status)> = std::thread::scope(|scope| {
        let handles: Vec<_> = lines
            .iter()
            .map(|line| {
                scope.spawn(move || {
                    let out = parse_beta(line).and_then(|b| df_of_beta(&b, budget(cfg), depth(cfg)).map(|r| (b, r)));
                    match out {
                        Ok((b, r)) => {
                            let mut j = beta_json(&b, &r, cfg.precision);
                            j["input"] = json!(line);
                            (j, Status::from_exact(r.is_exact()))
                        }
                        Err(e) => (json!({ "input": line, "error": e.to_string() }), Status::Failed),
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let status = results.iter().map(|r| r.1).max().unwrap_or(Status::Exact);
    let values: Vec<Value> = results.into_iter().map(|r| r.0).collect();
    match cfg.format {
        Some(Format::Text) => {
            for v in &values {
                match v.get("error") {
                    Some(e) => emit(&format!("{}\terror: {}\n", v["input"].as_str().unwrap_or(""), e.as_str().unwrap_or(""))),
                    None => emit(&format!("{}\t{}\n", v["input"].as_str().unwrap_or(""), v["itinerary"].as_str().unwrap_or(""))),
                }
            }
        }
        Some(Format::Csv) => return Err(Error::Parse("batch output is JSON or text".into())),
        _ => emit(&format!("{}\n", serde_json::to_string_pretty(&values).expect("reports serialize"))),
    }
    Ok(status)
}

fn plot_data(rule: &str, triangles: bool, cfg: &Config) -> Result<Report> {
    let rule: PlotRule = rule.parse()?;
    let k = cfg.k.unwrap_or(3) as usize;
    let entries = rule.entries(depth(cfg));
    let rows = plot_rows(&entries, k, triangles)?;
    let csv = plot_csv(&rows, k, cfg.precision);
    let json = json!({
        "entries": entries,
        "rows": rows.iter().map(|r| json!({ "depth": r.depth, "tag": r.tag, "coords": r.coords })).collect::<Vec<_>>(),
    });
    let mut report = Report::new(json, csv.clone(), Status::Exact, Format::Csv);
    report.csv = Some(csv);
    Ok(report)
}

fn markov_check(beta: &AlgebraicNumber, claimed: Option<&str>, cfg: &Config) -> Result<Report> {
    let k = alphabet_size(beta)?;
    let word = match claimed {
        Some(t) => Word::parse(t, k)?,
        None => {
            let d = finite_kneading(beta, budget(cfg))?
                .ok_or_else(|| Error::NotMarkov(format!("orbit of 1 not finite within {} digits", cfg.digit_budget)))?;
            Word::new(d, k)?
        }
    };
    let (partition, graph) = build_partition(beta, &word)?;
    let loops = minimal_loops(&graph);
    let oracle = oracle_hull(&loops, &graph.labels, k)?;
    let pipeline = df_of_beta(beta, budget(cfg), depth(cfg))?;
    let poly = match &pipeline.result {
        DfResult::Exact(p) => p.clone(),
        DfResult::Approximate(_) => return Err(Error::NotMarkov("pipeline did not resolve an exact polytope".into())),
    };
    let matched = oracle.same_vertices(&poly);
    let list = |p: &betadf::dfset::Polytope| {
        let mut v: Vec<String> = p.points().iter().map(ToString::to_string).collect();
        v.sort();
        v
    };
    let (a, b) = (list(&oracle), list(&poly));
    let mut text = if matched {
        format!("MATCH: {} vertices", a.len())
    } else {
        format!("MISMATCH: oracle {} vertices, pipeline {} vertices", a.len(), b.len())
    };
    text.push_str(&format!("\noracle:   {}\npipeline: {}", a.join(" "), b.join(" ")));
    if !matched {
        let only_a: Vec<&String> = a.iter().filter(|v| !b.contains(v)).collect();
        let only_b: Vec<&String> = b.iter().filter(|v| !a.contains(v)).collect();
        text.push_str(&format!("\n- {}\n+ {}", only_a.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(" "), only_b.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(" ")));
    }
    let json = json!({
        "match": matched,
        "kneading": word.to_string(),
        "intervals": (0..partition.len()).map(|i| {
            let (lo, hi) = partition.interval_approx(i);
            json!({ "label": partition.labels[i], "approx": [lo, hi] })
        }).collect::<Vec<_>>(),
        "loops": loops_json(&loops, &graph.labels, k),
        "oracle": a,
        "pipeline": b,
        "itinerary": pipeline.itinerary.to_text(),
    });
    let status = if matched { Status::Exact } else { Status::Failed };
    Ok(Report::new(json, text, status, Format::Text))
}

fn freq_trajectory(seq: &DigitSeq, strides: &[usize], cfg: &Config) -> Result<Report> {
    let freqs = prefix_freq_trajectory(seq, strides)?;
    let rows: Vec<Value> = strides
        .iter()
        .zip(&freqs)
        .map(|(n, f)| {
            json!({
                "length": n,
                "freq": f,
                "approx": f.comps().iter().map(|c| to_decimal(c, cfg.precision)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let text = strides
        .iter()
        .zip(&freqs)
        .map(|(n, f)| format!("{n}\t{}", f.comps().iter().map(format_rational).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report::new(json!({ "trajectory": rows }), text, Status::Exact, Format::Json))
}
