use std::collections::BTreeSet;

use super::{check_bound, shards, Tally, VerificationReport};
use crate::border::{border_lengths, is_border, period, root_decomposition};
use crate::conjugate::{
    cyclic_occurrences, is_lyndon_slice, is_primitive, local_root, lyndon_conjugate, rotate,
};
use crate::error::Result;
use crate::fully_bordered::{
    derive_trace, descend, fb_pair_of, generate_f, is_fb_pair, CensusScratch, DescentCase, Pair,
};
use crate::palindrome::{is_palindrome, two_palindrome_splits};
use crate::par::{map_slice, Exec};
use crate::word::{Order, Word};

use super::oracle::naive_is_unbordered;

/// Every fully bordered pair `(u, v)` with `|uv| <= max_n`, found by census
/// over all words, sorted by `|uv|` then `uv`.
pub fn fb_pairs(max_n: usize, exec: Exec) -> Result<Vec<Pair>> {
    check_bound(max_n, 2)?;
    let per_shard = map_slice(exec, &shards(2..=max_n), |shard| {
        let mut scratch = CensusScratch::default();
        shard
            .words()
            .filter_map(|w| {
                scratch
                    .fb_split(w.letters())
                    .map(|split| Pair::new(w.prefix(split), w.suffix(w.len() - split)))
            })
            .collect::<Vec<_>>()
    });
    Ok(per_shard.into_iter().flatten().collect())
}

fn over_pairs<F>(pairs: &[Pair], exec: Exec, check: F) -> Tally
where
    F: Fn(&Pair, &mut Tally) + Sync + Send,
{
    let chunks: Vec<&[Pair]> = pairs.chunks(64).collect();
    Tally::merge_all(map_slice(exec, &chunks, |chunk| {
        let mut t = Tally::default();
        for p in *chunk {
            t.item();
            check(p, &mut t);
        }
        t
    }))
}

fn over_words<F>(min_n: usize, max_n: usize, exec: Exec, check: F) -> Tally
where
    F: Fn(&Word, &mut CensusScratch, &mut Tally) + Sync + Send,
{
    Tally::merge_all(map_slice(exec, &shards(min_n..=max_n), |shard| {
        let mut t = Tally::default();
        let mut scratch = CensusScratch::default();
        for w in shard.words() {
            t.item();
            check(&w, &mut scratch, &mut t);
        }
        t
    }))
}

pub fn verify_theorem_main(max_n: usize) -> Result<VerificationReport> {
    verify_theorem_main_with(max_n, Exec::default())
}

/// Census-decided fully bordered words against the generated family F: the
/// pair of every fully bordered word of length `2..=max_n` must be generated,
/// and every generated pair must be fully bordered.
pub fn verify_theorem_main_with(max_n: usize, exec: Exec) -> Result<VerificationReport> {
    check_bound(max_n, 2)?;
    let family = generate_f(max_n)?;
    let words = over_words(2, max_n, exec, |w, scratch, t| {
        if scratch.is_fully_bordered(w.letters()) {
            t.bump("fb_words");
            let p: Pair = fb_pair_of(w)
                .expect("nonempty")
                .expect("fully bordered")
                .into();
            t.expect(
                family.contains(&p),
                w,
                format!("pair {p} not generated"),
                "pair in F",
            );
        }
    });
    let generated: Vec<Pair> = family.pairs().cloned().collect();
    let mut reverse = over_pairs(&generated, exec, |p, t| {
        let ok = is_fb_pair(&p.u, &p.v).expect("nonempty");
        t.expect(
            ok,
            p,
            "generated pair is not fully bordered",
            "fully bordered",
        );
    });
    // only words count as checked items
    reverse.clear_items();
    reverse.set("family_pairs", generated.len() as u64);
    Ok(words.merge(reverse).report("main", max_n))
}

/// Both components of every fully bordered pair are palindromes and `|u|` is
/// a two-palindrome split of `uv`.
pub fn verify_palindrome_theorem(max_n: usize) -> Result<VerificationReport> {
    let pairs = fb_pairs(max_n, Exec::default())?;
    let t = over_pairs(&pairs, Exec::default(), |p, t| {
        t.expect(
            is_palindrome(&p.u),
            p,
            format!("u = {} not a palindrome", p.u),
            "palindrome",
        );
        t.expect(
            is_palindrome(&p.v),
            p,
            format!("v = {} not a palindrome", p.v),
            "palindrome",
        );
        let splits = two_palindrome_splits(&p.uv());
        t.expect(
            splits.contains(&p.u.len()),
            p,
            format!("splits {splits:?}"),
            format!("contains {}", p.u.len()),
        );
    });
    Ok(t.report("palindromes", max_n))
}

/// Every fully bordered pair with `2 < |uv| <= max_n`, oriented so that
/// `|v| <= |u|`, descends to a shorter pair the census certifies.
pub fn verify_descent(max_n: usize) -> Result<VerificationReport> {
    let pairs: Vec<Pair> = fb_pairs(max_n, Exec::default())?
        .into_iter()
        .filter(|p| p.total_len() > 2)
        .collect();
    let t = over_pairs(&pairs, Exec::default(), |p, t| {
        let p = if p.v.len() > p.u.len() {
            p.swapped()
        } else {
            p.clone()
        };
        match descend(&p.u, &p.v) {
            Ok(r) => {
                t.bump(match r.case {
                    DescentCase::ShrinkU => "case_shrink_u",
                    DescentCase::ShrinkV { .. } => "case_shrink_v",
                });
                let next = &r.next;
                t.expect(
                    next.total_len() < p.total_len(),
                    &p,
                    format!("next {next}"),
                    "shorter pair",
                );
                let ok = is_fb_pair(&next.u, &next.v).expect("nonempty");
                t.expect(
                    ok,
                    &p,
                    format!("next {next} not fully bordered"),
                    "fully bordered",
                );
            }
            Err(e) => t.fail(&p, e, "successful descent"),
        }
    });
    Ok(t.report("descent", max_n))
}

/// Derivation traces rebuilt from descent replay to the pair they describe.
pub fn verify_traces(max_n: usize) -> Result<VerificationReport> {
    let pairs = fb_pairs(max_n, Exec::default())?;
    let t = over_pairs(&pairs, Exec::default(), |p, t| {
        match derive_trace(&p.u, &p.v) {
            Ok(trace) => match trace.replay() {
                Ok(end) => t.expect(end == *p, p, format!("replay ends at {end}"), p),
                Err(e) => t.fail(p, e, "replay"),
            },
            Err(e) => t.fail(p, e, "a derivation trace"),
        }
    });
    Ok(t.report("traces", max_n))
}

/// Bounds for the lemma suites: one over all words, one over fully bordered
/// pairs and generated F members.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaBounds {
    pub words: usize,
    pub pairs: usize,
}

impl Default for LemmaBounds {
    fn default() -> LemmaBounds {
        LemmaBounds {
            words: 14,
            pairs: 18,
        }
    }
}

impl LemmaBounds {
    pub fn uniform(n: usize) -> LemmaBounds {
        LemmaBounds { words: n, pairs: n }
    }
}

pub fn verify_lemma_suites(bounds: LemmaBounds) -> Result<Vec<VerificationReport>> {
    let mut out = verify_word_lemmas(bounds.words, Exec::default())?;
    out.extend(verify_pair_lemmas(bounds.pairs, Exec::default())?);
    Ok(out)
}

fn lyndon_under(s: &Word) -> Vec<Order> {
    Order::BOTH
        .into_iter()
        .filter(|&o| is_lyndon_slice(s.letters(), o))
        .collect()
}

/// Suites quantified over every word of length `1..=max_n`.
pub fn verify_word_lemmas(max_n: usize, exec: Exec) -> Result<Vec<VerificationReport>> {
    check_bound(max_n, 1)?;
    let mut out = Vec::new();

    let t = over_words(1, max_n, exec, |w, _, t| {
        for o in lyndon_under(w) {
            let ok = naive_is_unbordered(w).expect("nonempty");
            t.expect(ok, format!("{w} {o}"), "Lyndon but bordered", "unbordered");
        }
    });
    out.push(t.report("lyndon-unbordered", max_n));

    let t = over_words(1, max_n, exec, |w, _, t| {
        for o in lyndon_under(w) {
            for i in 1..=w.len() {
                let root = w.prefix(period(&w.prefix(i)).expect("nonempty"));
                t.expect(
                    is_lyndon_slice(root.letters(), o),
                    format!("{w} {o} prefix {i}"),
                    format!("periodic root {root} not Lyndon"),
                    "Lyndon",
                );
            }
        }
    });
    out.push(t.report("lyndon-prefix-root", max_n));

    // w Lyndon, x = z^k z' with z the periodic root of x and z'.small a
    // prefix of z: x.large is Lyndon whenever it is a prefix of w
    let t = over_words(1, max_n, exec, |w, _, t| {
        let s = w.letters();
        for o in lyndon_under(w) {
            for i in 1..s.len() {
                if s[i] != o.larger() {
                    continue;
                }
                let p = period(&w.prefix(i)).expect("nonempty");
                let tail = i % p;
                if s[tail] != o.smaller() {
                    continue;
                }
                t.bump("applicable_prefixes");
                t.expect(
                    is_lyndon_slice(&s[..=i], o),
                    format!("{w} {o} prefix {}", i + 1),
                    "extension not Lyndon",
                    "Lyndon",
                );
            }
        }
    });
    out.push(t.report("lyndon-extension", max_n));

    let t = over_words(2, max_n, exec, |w, _, t| {
        for o in lyndon_under(w) {
            for i in 1..w.len() {
                let (u, v) = (w.prefix(i), w.suffix(w.len() - i));
                if !is_lyndon_slice(v.concat(&u).letters(), o.opposite()) {
                    continue;
                }
                t.bump("lyndon_pairs");
                let occ = cyclic_occurrences(&u, w).expect("valid");
                t.expect(
                    occ == [0],
                    format!("({u},{v})"),
                    format!("occurrences {occ:?}"),
                    "[0]",
                );
            }
        }
    });
    out.push(t.report("unique-cyclic-occurrence", max_n));

    let t = over_words(2, max_n, exec, |w, scratch, t| {
        if !w.contains_both_letters() || !is_primitive(w).expect("nonempty") {
            return;
        }
        t.bump("primitive_two_letter_words");
        let count = scratch.count_unbordered(w.letters());
        t.expect(
            count >= 2,
            w,
            format!("{count} unbordered conjugates"),
            ">= 2",
        );
        for o in Order::BOTH {
            let l = lyndon_conjugate(w, o).expect("primitive");
            let ok = naive_is_unbordered(&l).expect("nonempty");
            t.expect(
                ok,
                format!("{w} {o}"),
                format!("Lyndon conjugate {l} bordered"),
                "unbordered",
            );
        }
    });
    out.push(t.report("two-unbordered-conjugates", max_n));

    let t = over_words(2, max_n, exec, |w, scratch, t| {
        let fb = scratch.is_fully_bordered(w.letters());
        if fb {
            t.bump("fb_words");
        }
        for m in 1..w.len() {
            let c = rotate(w, m);
            let other = scratch.is_fully_bordered(c.letters());
            t.expect(fb == other, format!("{w} at {m}"), other, fb);
        }
    });
    out.push(t.report("fb-conjugation-invariance", max_n));

    let t = over_words(2, max_n, exec, |w, scratch, t| {
        let points = scratch.unbordered_points(w.letters(), 2);
        if points.len() != 2 {
            return;
        }
        let found: BTreeSet<Word> = points.iter().map(|&m| rotate(w, m)).collect();
        let lyndon: BTreeSet<Word> = Order::BOTH
            .iter()
            .map(|&o| lyndon_conjugate(w, o).expect("primitive"))
            .collect();
        t.expect(
            found == lyndon,
            w,
            format!("{found:?}"),
            format!("{lyndon:?}"),
        );
    });
    out.push(t.report("fb-lyndon-conjugates", max_n));

    let t = over_words(1, max_n, exec, |w, _, t| {
        let d = root_decomposition(w).expect("nonempty");
        let root = d.root();
        t.expect(d.reassemble() == *w, w, format!("{d:?}"), "(st)^k s = w");
        t.expect(
            !d.s.is_empty() && d.s.is_prefix_of(&root),
            w,
            format!("{d:?}"),
            "s nonempty prefix of st",
        );
        t.expect(
            root.len() == period(w).expect("nonempty"),
            w,
            format!("{d:?}"),
            "|st| = period",
        );
        t.expect(
            is_primitive(&root).expect("nonempty"),
            w,
            format!("{d:?}"),
            "st primitive",
        );
        let unb = naive_is_unbordered(w).expect("nonempty");
        t.expect(
            (d.k == 0) == unb,
            w,
            format!("k = {}", d.k),
            format!("k = 0 iff unbordered ({unb})"),
        );
    });
    out.push(t.report("root-decomposition", max_n));

    let t = over_words(1, max_n, exec, |w, _, t| {
        let n = w.len();
        let primitive = is_primitive(w).expect("nonempty");
        for m in 0..n {
            let r = local_root(w, m).expect("in range");
            let len = r.period();
            t.expect(
                naive_is_unbordered(&r.root).expect("nonempty"),
                format!("{w} at {m}"),
                &r.root,
                "unbordered root",
            );
            t.expect(
                r.trivial == (len == n),
                format!("{w} at {m}"),
                r.trivial,
                len == n,
            );
            if primitive {
                t.expect(
                    2 * len < n || len == n,
                    format!("{w} at {m}"),
                    len,
                    "< n/2 or = n",
                );
            }
        }
    });
    out.push(t.report("local-root", max_n));

    Ok(out)
}

/// Suites quantified over fully bordered pairs and over generated F members
/// with `|uv| <= max_n`.
pub fn verify_pair_lemmas(max_n: usize, exec: Exec) -> Result<Vec<VerificationReport>> {
    let pairs = fb_pairs(max_n, exec)?;
    let mut out = Vec::new();

    let t = over_pairs(&pairs, exec, |p, t| {
        let ok = is_fb_pair(&p.v, &p.u).expect("nonempty");
        t.expect(ok, p, "(v,u) not fully bordered", "fully bordered");
    });
    out.push(t.report("pair-swap", max_n));

    let t = over_pairs(&pairs, exec, |p, t| {
        let (ur, vr) = (p.u.reversed(), p.v.reversed());
        for x in [p.uv(), p.vu(), ur.concat(&vr), vr.concat(&ur)] {
            let orders = lyndon_under(&x);
            t.expect(
                orders.len() == 1,
                p,
                format!("{x} Lyndon under {orders:?}"),
                "exactly one order",
            );
        }
    });
    out.push(t.report("pair-lyndon", max_n));

    let t = over_pairs(&pairs, exec, |p, t| {
        let d = root_decomposition(&p.u).expect("nonempty");
        let Some(&o) = lyndon_under(&p.uv()).first() else {
            t.fail(p, "uv not Lyndon", "Lyndon");
            return;
        };
        let root = d.root();
        let back = d.rotated_root().reversed();
        t.expect(
            is_lyndon_slice(root.letters(), o),
            p,
            format!("s_u t_u = {root}"),
            format!("Lyndon under {o}"),
        );
        t.expect(
            is_lyndon_slice(back.letters(), o),
            p,
            format!("(t_u s_u)^R = {back}"),
            format!("Lyndon under {o}"),
        );
    });
    out.push(t.report("pair-root-lyndon", max_n));

    let t = over_pairs(&pairs, exec, |p, t| {
        let d = root_decomposition(&p.u).expect("nonempty");
        if d.k <= 1 {
            return;
        }
        t.bump("k_u_above_one");
        let shorter = p.u.suffix(p.u.len() - d.root().len());
        let e = root_decomposition(&shorter).expect("nonempty");
        t.expect(
            e.s == d.s && e.t == d.t,
            p,
            format!("u' = {shorter} gives {e:?}"),
            format!("{d:?}"),
        );
    });
    out.push(t.report("pair-root-stable", max_n));

    let family = generate_f(max_n)?;
    let members: Vec<Pair> = family.pairs().cloned().collect();

    let t = over_pairs(&members, exec, |p, t| {
        for x in [p.uv(), p.vu()] {
            t.expect(
                naive_is_unbordered(&x).expect("nonempty"),
                p,
                format!("{x} bordered"),
                "unbordered",
            );
        }
    });
    out.push(t.report("f-unbordered", max_n));

    let t = over_pairs(&members, exec, |p, t| {
        let t_u = root_decomposition(&p.u).expect("nonempty").t;
        let ok = t_u.is_prefix_of(&p.v) && t_u.is_suffix_of(&p.v);
        t.expect(ok, p, format!("t_u = {t_u}"), "prefix and suffix of v");
    });
    out.push(t.report("f-t-border", max_n));

    let t = over_pairs(&members, exec, |p, t| {
        let t_v = root_decomposition(&p.v).expect("nonempty").t;
        for len in border_lengths(p.u.letters()) {
            if len <= t_v.len() {
                continue;
            }
            let y = p.u.prefix(len);
            debug_assert!(is_border(&y, &p.u));
            t.bump("borders_checked");
            let ok = is_fb_pair(&y, &p.v).expect("nonempty");
            t.expect(
                ok,
                p,
                format!("({y},{}) not fully bordered", p.v),
                "fully bordered",
            );
        }
    });
    out.push(t.report("f-border-pairs", max_n));

    let t = over_pairs(&members, exec, |p, t| {
        let d = root_decomposition(&p.u).expect("nonempty");
        if d.t.is_empty() {
            t.expect(
                d.s.len() == 1,
                p,
                format!("s_u = {}", d.s),
                "a single letter",
            );
        } else {
            let ok = is_fb_pair(&d.s, &d.t).expect("nonempty");
            t.expect(
                ok,
                p,
                format!("({},{}) not fully bordered", d.s, d.t),
                "fully bordered",
            );
        }
    });
    out.push(t.report("f-root-pair", max_n));

    Ok(out)
}
