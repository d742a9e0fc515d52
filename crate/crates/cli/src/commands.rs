use std::path::PathBuf;

use fbword::fully_bordered::{descent_chain, ChainLink};
use fbword::harness::golden::{self, GoldenError, GoldenStatus};
use fbword::harness::{self, LemmaBounds, RandomSample, VerificationReport};
use fbword::{
    borders, census, fb_pair_of, generate_f, is_fully_bordered, is_lyndon, is_primitive,
    local_root, period, root_decomposition, two_palindrome_splits, DescentCase, Exec, Order, Pair,
    Word,
};
use serde_json::{json, Value};

use crate::output::{join, Outcome, Table};

/// A command failure mapped onto the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unparsable input: exit 2.
    Usage(String),
    /// A check failed: exit 1.
    Failed(String),
}

impl From<fbword::Error> for CliError {
    fn from(e: fbword::Error) -> CliError {
        CliError::Usage(e.to_string())
    }
}

pub fn parse_word(s: &str) -> Result<Word, CliError> {
    s.parse()
        .map_err(|e: fbword::Error| CliError::Usage(format!("cannot parse {s:?}: {e}")))
}

fn pair_json(p: &Pair) -> Value {
    json!([p.u, p.v])
}

pub fn analyze(word: &str) -> Result<Outcome, CliError> {
    let w = parse_word(word)?;
    if w.is_empty() {
        return Err(CliError::Usage("the word must be nonempty".into()));
    }
    let bs = borders(&w)?;
    let p = period(&w)?;
    let d = root_decomposition(&w)?;
    let primitive = is_primitive(&w)?;
    let lyn0 = is_lyndon(&w, Order::ZeroFirst)?;
    let lyn1 = is_lyndon(&w, Order::OneFirst)?;
    let roots = (0..w.len())
        .map(|m| local_root(&w, m))
        .collect::<Result<Vec<_>, _>>()?;
    let points = census(&w)?.unbordered_points;
    let fb = is_fully_bordered(&w)?;
    let pair = fb_pair_of(&w)?.map(Pair::from);
    let splits = two_palindrome_splits(&w);

    let result = json!({
        "word": w,
        "length": w.len(),
        "borders": bs,
        "period": p,
        "root_decomposition": {"s": d.s, "t": d.t, "k": d.k},
        "primitive": primitive,
        "lyndon": {"zero_first": lyn0, "one_first": lyn1},
        "local_roots": roots.iter().map(|r| json!({
            "point": r.point, "root": r.root, "period": r.period(), "trivial": r.trivial,
        })).collect::<Vec<_>>(),
        "unbordered_points": points,
        "fully_bordered": fb,
        "fb_pair": pair.as_ref().map(pair_json),
        "palindrome_splits": splits,
    });

    let mut table = Table::new(vec!["field", "value"]);
    let mut row = |k: String, v: String| table.push(vec![k, v]);
    row("word".into(), w.to_string());
    row("length".into(), w.len().to_string());
    row("borders".into(), join(&bs));
    row("period".into(), p.to_string());
    row("s".into(), d.s.to_string());
    row("t".into(), d.t.to_string());
    row("k".into(), d.k.to_string());
    row("primitive".into(), primitive.to_string());
    row("lyndon_zero_first".into(), lyn0.to_string());
    row("lyndon_one_first".into(), lyn1.to_string());
    for r in &roots {
        row(format!("local_root.{}", r.point), r.root.to_string());
        row(
            format!("local_root.{}.period", r.point),
            r.period().to_string(),
        );
        row(
            format!("local_root.{}.trivial", r.point),
            r.trivial.to_string(),
        );
    }
    row("unbordered_points".into(), join(&points));
    row("fully_bordered".into(), fb.to_string());
    row(
        "fb_pair_u".into(),
        pair.as_ref().map(|p| p.u.to_string()).unwrap_or_default(),
    );
    row(
        "fb_pair_v".into(),
        pair.as_ref().map(|p| p.v.to_string()).unwrap_or_default(),
    );
    row("palindrome_splits".into(), join(&splits));

    let mut text = String::new();
    text += &format!("word              {w}\n");
    text += &format!("length            {}\n", w.len());
    text += &format!("borders           [{}]\n", join(&bs));
    text += &format!("period            {p}\n");
    text += &format!("root (s, t, k)    ({}, {}, {})\n", d.s, d.t, d.k);
    text += &format!("primitive         {primitive}\n");
    text += &format!("lyndon 0<1 / 1<0  {lyn0} / {lyn1}\n");
    text += "local roots\n";
    for r in &roots {
        let tag = if r.trivial { " (trivial)" } else { "" };
        text += &format!("  {:>3}  {}{tag}\n", r.point, r.root);
    }
    text += &format!("unbordered at     [{}]\n", join(&points));
    text += &format!("fully bordered    {fb}\n");
    if let Some(p) = &pair {
        text += &format!("pair              {p}\n");
    }
    text += &format!("palindrome splits [{}]\n", join(&splits));

    Ok(Outcome {
        command: "analyze",
        params: json!({"word": w}),
        result,
        table,
        text,
        exit_code: 0,
    })
}

pub fn census_cmd(max_len: usize, bless: bool, out: Option<PathBuf>) -> Result<Outcome, CliError> {
    if bless && out.is_none() {
        return Err(CliError::Usage("--bless needs --out PATH".into()));
    }
    let rows = harness::census_table(max_len)?;
    let rendered = golden::render(&rows);
    let mut exit_code = 0;
    let mut golden_status = Value::Null;

    let violations: Vec<String> = rows.iter().flat_map(|r| r.violations()).collect();
    for v in &violations {
        eprintln!("invariant violated: {v}");
        exit_code = 1;
    }
    if let Some(path) = &out {
        if bless || path.exists() {
            match golden::check_or_bless(path, &rendered, bless) {
                Ok(GoldenStatus::Blessed) => {
                    eprintln!("wrote golden file {}", path.display());
                    golden_status = json!("blessed");
                }
                Ok(GoldenStatus::Matched) => {
                    eprintln!("golden file {} matches", path.display());
                    golden_status = json!("matched");
                }
                Err(e @ GoldenError::Drift { .. }) => {
                    eprintln!("{e}");
                    golden_status = json!("drift");
                    exit_code = 1;
                }
                Err(e) => return Err(CliError::Failed(e.to_string())),
            }
        }
    }

    let mut table = Table::new(vec!["n", "fb_words", "fb_classes", "f_pairs", "histogram"]);
    let mut json_rows = Vec::new();
    for r in &rows {
        let hist = join(
            r.unbordered_histogram
                .iter()
                .map(|(k, v)| format!("{k}:{v}")),
        );
        table.push(vec![
            r.n.to_string(),
            r.fb_words.to_string(),
            r.fb_classes.to_string(),
            r.f_pairs.to_string(),
            hist,
        ]);
        json_rows.push(json!(r));
    }
    let text = format!("# n fb_words fb_classes f_pairs histogram\n{rendered}");
    Ok(Outcome {
        command: "census",
        params: json!({
            "max_len": max_len,
            "bless": bless,
            "out": out.map(|p| p.display().to_string()),
        }),
        result: json!({"rows": json_rows, "golden": golden_status}),
        table,
        text,
        exit_code,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Main,
    Palindromes,
    Descent,
    Lemmas,
    All,
}

pub fn verify(suite: Suite, max_len: Option<usize>) -> Result<Outcome, CliError> {
    let pair_bound = max_len.unwrap_or(18);
    let lemma_bounds = max_len.map(LemmaBounds::uniform).unwrap_or_default();
    let mut reports: Vec<VerificationReport> = Vec::new();
    if matches!(suite, Suite::Main | Suite::All) {
        reports.push(harness::verify_theorem_main(pair_bound)?);
    }
    if matches!(suite, Suite::Palindromes | Suite::All) {
        reports.push(harness::verify_palindrome_theorem(pair_bound)?);
    }
    if matches!(suite, Suite::Descent | Suite::All) {
        if pair_bound < 3 {
            return Err(CliError::Usage(
                "the descent suite needs --max-len >= 3".into(),
            ));
        }
        reports.push(harness::verify_descent(pair_bound)?);
        reports.push(harness::verify_traces(pair_bound)?);
    }
    if matches!(suite, Suite::Lemmas | Suite::All) {
        reports.push(harness::verify_oracle_equivalence(
            lemma_bounds.words.min(12),
            RandomSample::default(),
            Exec::default(),
        )?);
        reports.extend(harness::verify_lemma_suites(lemma_bounds)?);
    }

    let passed = reports.iter().all(VerificationReport::passed);
    let mut table = Table::new(vec![
        "suite",
        "bound",
        "items_checked",
        "failure_count",
        "passed",
        "tallies",
        "failures",
    ]);
    let mut text = String::new();
    for r in &reports {
        table.push(vec![
            r.suite.clone(),
            r.bound.to_string(),
            r.items_checked.to_string(),
            r.failure_count.to_string(),
            r.passed().to_string(),
            join(r.tallies.iter().map(|(k, v)| format!("{k}={v}"))),
            r.failures
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" | "),
        ]);
        text += &format!("{r}\n");
    }
    text += if passed {
        "all suites passed\n"
    } else {
        "some suites FAILED\n"
    };
    let suite_name = format!("{suite:?}").to_lowercase();
    Ok(Outcome {
        command: "verify",
        params: json!({"suite": suite_name, "max_len": max_len}),
        result: json!(reports),
        table,
        text,
        exit_code: if passed { 0 } else { 1 },
    })
}

pub fn generate(max_len: usize, with_trace: bool) -> Result<Outcome, CliError> {
    let family = generate_f(max_len)?;
    let mut header = vec!["u", "v", "length"];
    if with_trace {
        header.push("trace");
    }
    let mut table = Table::new(header);
    let mut items = Vec::new();
    let mut text = String::new();
    for (p, trace) in family.iter() {
        let steps: Vec<String> = trace.steps.iter().skip(1).map(|s| s.to_string()).collect();
        let mut row = vec![p.u.to_string(), p.v.to_string(), p.total_len().to_string()];
        let mut item = json!({"pair": pair_json(p), "length": p.total_len()});
        text += &p.to_string();
        if with_trace {
            row.push(
                format!("{} {}", trace.start, join(&steps))
                    .trim_end()
                    .to_string(),
            );
            item["trace"] = json!({"start": pair_json(&trace.start), "steps": steps});
            text += &format!("  <=  {trace}");
        }
        text.push('\n');
        table.push(row);
        items.push(item);
    }
    Ok(Outcome {
        command: "generate-f",
        params: json!({"max_len": max_len, "with_trace": with_trace}),
        result: json!(items),
        table,
        text,
        exit_code: 0,
    })
}

pub fn descend_cmd(u: &str, v: &str) -> Result<Outcome, CliError> {
    let (u, v) = (parse_word(u)?, parse_word(v)?);
    if u.is_empty() || v.is_empty() {
        return Err(CliError::Usage("both words must be nonempty".into()));
    }
    let start = Pair::new(u.clone(), v.clone());
    if !fbword::is_fb_pair(&u, &v)? {
        let uv = start.uv();
        let points = census(&uv)?.unbordered_points;
        return Err(CliError::Failed(format!(
            "{start} is not a fully bordered pair: uv = {uv} has unbordered conjugates at [{}], \
             need exactly [0, {}]",
            join(&points),
            u.len()
        )));
    }
    let links = descent_chain(&u, &v)?;

    let mut table = Table::new(vec![
        "step", "kind", "from_u", "from_v", "to_u", "to_v", "case", "v_outer", "u_inner",
    ]);
    let mut items = Vec::new();
    let mut text = String::new();
    for (i, link) in links.iter().enumerate() {
        match link {
            ChainLink::Swap { from, to } => {
                table.push(vec![
                    i.to_string(),
                    "swap".into(),
                    from.u.to_string(),
                    from.v.to_string(),
                    to.u.to_string(),
                    to.v.to_string(),
                    String::new(),
                    String::new(),
                    String::new(),
                ]);
                items.push(json!({"kind": "swap", "from": pair_json(from), "to": pair_json(to)}));
                text += &format!("{i:>3}  {from} -> {to}  swap\n");
            }
            ChainLink::Descend { from, result } => {
                let to = &result.next;
                let (case, outer, inner, witness) = match &result.case {
                    DescentCase::ShrinkU => ("shrink-u", String::new(), String::new(), Value::Null),
                    DescentCase::ShrinkV { v_outer, u_inner } => (
                        "shrink-v",
                        v_outer.to_string(),
                        u_inner.to_string(),
                        json!({"v_outer": v_outer, "u_inner": u_inner}),
                    ),
                };
                table.push(vec![
                    i.to_string(),
                    "descend".into(),
                    from.u.to_string(),
                    from.v.to_string(),
                    to.u.to_string(),
                    to.v.to_string(),
                    case.into(),
                    outer.clone(),
                    inner.clone(),
                ]);
                items.push(json!({
                    "kind": "descend", "case": case,
                    "from": pair_json(from), "to": pair_json(to), "witness": witness,
                }));
                text += &format!("{i:>3}  {from} -> {to}  {case}");
                if !outer.is_empty() {
                    text += &format!("  v = {outer}.{inner}.{outer}");
                }
                text.push('\n');
            }
        }
    }
    let base = links
        .last()
        .map(|l| l.to().clone())
        .unwrap_or_else(|| start.clone());
    text += &format!("base pair reached: {base}\n");
    Ok(Outcome {
        command: "descend",
        params: json!({"u": u, "v": v}),
        result: json!({"links": items, "base": pair_json(&base)}),
        table,
        text,
        exit_code: 0,
    })
}
