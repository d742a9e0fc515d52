//! Exit criteria, one line per criterion. Runs as a plain binary so the
//! PASS/FAIL lines always show up in `cargo test` output.
//!
//! Set `FBWORD_BLESS=1` to rewrite the golden census file.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fbword::harness::golden::{self, GoldenStatus};
use fbword::harness::{
    census_table, verify_descent, verify_oracle_equivalence, verify_pair_lemmas,
    verify_palindrome_theorem, verify_theorem_main_with, verify_traces, verify_word_lemmas,
    RandomSample, VerificationReport,
};
use fbword::Exec;

const PAIR_BOUND: usize = 18;
const WORD_BOUND: usize = 14;
const ORACLE_BOUND: usize = 12;
const MAIN_TIME_LIMIT: Duration = Duration::from_secs(120);

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    passed: bool,
    detail: String,
}

impl Verdict {
    fn from_reports(reports: &[VerificationReport], extra: &str) -> Verdict {
        let mut detail: Vec<String> = reports
            .iter()
            .map(|r| {
                format!(
                    "{}: {} items, {} failures",
                    r.suite, r.items_checked, r.failure_count
                )
            })
            .collect();
        if !extra.is_empty() {
            detail.push(extra.to_string());
        }
        for r in reports.iter().filter(|r| !r.passed()) {
            detail.push(r.to_string());
        }
        Verdict {
            passed: reports.iter().all(|r| r.passed()),
            detail: detail.join("; "),
        }
    }
}

fn pick(reports: Vec<VerificationReport>, names: &[&str]) -> Vec<VerificationReport> {
    let picked: Vec<VerificationReport> = reports
        .into_iter()
        .filter(|r| names.contains(&r.suite.as_str()))
        .collect();
    assert_eq!(picked.len(), names.len(), "missing suites among {names:?}");
    picked
}

fn main_theorem() -> Verdict {
    let started = Instant::now();
    let r = verify_theorem_main_with(PAIR_BOUND, Exec::default()).expect("bound");
    let elapsed = started.elapsed();
    let mut v = Verdict::from_reports(
        std::slice::from_ref(&r),
        &format!("{:.2?} (limit {:?})", elapsed, MAIN_TIME_LIMIT),
    );
    v.passed &= elapsed < MAIN_TIME_LIMIT && r.items_checked == (1 << (PAIR_BOUND + 1)) - 4;
    v
}

fn palindromes() -> Verdict {
    Verdict::from_reports(&[verify_palindrome_theorem(PAIR_BOUND).expect("bound")], "")
}

fn descent() -> Verdict {
    let d = verify_descent(PAIR_BOUND).expect("bound");
    let t = verify_traces(PAIR_BOUND).expect("bound");
    let cases = format!(
        "shrink-u {}, shrink-v {}",
        d.tallies.get("case_shrink_u").copied().unwrap_or(0),
        d.tallies.get("case_shrink_v").copied().unwrap_or(0)
    );
    Verdict::from_reports(&[d, t], &cases)
}

fn word_lemmas() -> Verdict {
    let reports = pick(
        verify_word_lemmas(WORD_BOUND, Exec::default()).expect("bound"),
        &[
            "lyndon-unbordered",
            "lyndon-prefix-root",
            "lyndon-extension",
            "unique-cyclic-occurrence",
            "two-unbordered-conjugates",
        ],
    );
    Verdict::from_reports(&reports, "")
}

fn pair_lemmas() -> Verdict {
    let reports = pick(
        verify_pair_lemmas(PAIR_BOUND, Exec::default()).expect("bound"),
        &[
            "pair-lyndon",
            "pair-root-lyndon",
            "pair-root-stable",
            "f-unbordered",
            "f-t-border",
            "f-border-pairs",
            "f-root-pair",
        ],
    );
    Verdict::from_reports(&reports, "")
}

fn oracle_equivalence() -> Verdict {
    let sample = RandomSample {
        count: 10_000,
        max_len: 64,
        seed: 0x5eed_f00d,
    };
    let r = verify_oracle_equivalence(ORACLE_BOUND, sample, Exec::default()).expect("bound");
    let ok = r.items_checked == (1 << (ORACLE_BOUND + 1)) - 2 + 10_000;
    let mut v = Verdict::from_reports(&[r], "");
    v.passed &= ok;
    v
}

fn census_regression() -> Verdict {
    let rows = census_table(PAIR_BOUND).expect("bound");
    let mut problems: Vec<String> = rows.iter().flat_map(|r| r.violations()).collect();
    let anchor = |n: usize| rows.iter().find(|r| r.n == n).map(|r| r.fb_words);
    if anchor(2) != Some(2) {
        problems.push(format!("fb_words(2) = {:?}, expected 2", anchor(2)));
    }
    if anchor(3) != Some(6) {
        problems.push(format!("fb_words(3) = {:?}, expected 6", anchor(3)));
    }
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/census_18.txt");
    let bless = std::env::var_os("FBWORD_BLESS").is_some_and(|v| v == "1");
    let status = match golden::check_or_bless(&path, &golden::render(&rows), bless) {
        Ok(GoldenStatus::Blessed) => "golden blessed".to_string(),
        Ok(GoldenStatus::Matched) => "golden matched".to_string(),
        Err(e) => {
            problems.push(e.to_string());
            "golden mismatch".to_string()
        }
    };
    Verdict {
        passed: problems.is_empty(),
        detail: format!("{} rows, {status}; {}", rows.len(), problems.join("; ")),
    }
}

fn determinism() -> Verdict {
    let run_in = |threads: usize, exec: Exec| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("pool");
        let r = pool
            .install(|| verify_theorem_main_with(PAIR_BOUND, exec))
            .expect("bound");
        serde_json::to_string(&r).expect("serialize")
    };
    let max = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .max(2);
    let single = run_in(1, Exec::Parallel);
    let many = run_in(max, Exec::Parallel);
    let sequential = run_in(1, Exec::Sequential);
    Verdict {
        passed: single == many && single == sequential,
        detail: format!(
            "1 thread vs {max} threads vs sequential, {} bytes each",
            single.len()
        ),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("main-theorem equivalence, |w| <= 18", main_theorem),
        ("palindrome theorem, |uv| <= 18", palindromes),
        ("descent soundness and trace replay, |uv| <= 18", descent),
        ("lemma suites over all words, n <= 14", word_lemmas),
        ("F-properties and pair lemmas, |uv| <= 18", pair_lemmas),
        (
            "border-chain vs naive oracles, n <= 12 + 10000 random",
            oracle_equivalence,
        ),
        (
            "census regression against golden, n <= 18",
            census_regression,
        ),
        ("determinism across thread counts", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        if !v.passed {
            failed += 1;
        }
        println!(
            "[{}] criterion {} {name}: {}",
            if v.passed { "PASS" } else { "FAIL" },
            i + 1,
            v.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
