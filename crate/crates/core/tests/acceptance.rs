//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! All comparisons are exact (zero tolerance). A criterion listed in
//! `KNOWN_FAILURES` is still run and still reported as FAIL; the process
//! only exits nonzero when the set of failing criteria differs from that
//! list.

mod common;

use std::time::Instant;

use picture_hanging::compiler::{
    and_template_count, compile, estimate_length, or_template_count, CompileOptions, CompileReport,
    Verification,
};
use picture_hanging::constructions::{build_disjoint, build_e, build_s, e_length};
use picture_hanging::error::Error;
use picture_hanging::formula::{parse_formula, subsets_to_circuit, MonotoneCircuit};
use picture_hanging::freegroup::{fall_table, NailSubset, Word, WordExpr};
use picture_hanging::puzzles::load_fixtures;
use picture_hanging::sortnet::{
    batcher_network, build_k_of_n, network_to_circuit, threshold_circuit,
};
use picture_hanging::spectator::{
    greedy_min_fell, max_survive_exact, min_fell_exact, set_cover_to_hanging,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

/// The stated auxiliary count of the OR gadget is 822; expanding the gadget
/// gives 566 (822 = 1078 - 256 subtracts only one operand's copies).
const KNOWN_FAILURES: &[u32] = &[4];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn c1_golden() -> Outcome {
    let fixtures = load_fixtures();
    let mut bad = Vec::new();
    let mut subsets = 0u64;
    for f in &fixtures {
        let table = fall_table(&f.word, f.n).unwrap();
        let oracle = naive_table(&f.word, f.n);
        for m in 0..1u64 << f.n {
            let s = NailSubset::from_mask(f.n, m).unwrap();
            subsets += 1;
            if table.get(&s) != f.spec.evaluate(&s) || oracle[m as usize] != f.spec.evaluate(&s) {
                bad.push(format!("#{} at {s}", f.id));
                break;
            }
        }
    }
    outcome(
        bad.is_empty() && fixtures.len() == 11,
        format!(
            "{}/{} puzzle solutions verify on {subsets} subsets{}",
            fixtures.len() - bad.len(),
            fixtures.len(),
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failing {bad:?}")
            }
        ),
    )
}

fn c2_lengths() -> Outcome {
    let mut errors = Vec::new();
    for n in 2..=10u32 {
        let expected = (1u64 << n) + (1u64 << (n - 1)) - 2;
        if build_s(n).unwrap().len() as u64 != expected {
            errors.push(format!("|S_{n}|"));
        }
    }
    for n in 1..=64u32 {
        let e = build_e(&(1..=n).collect::<Vec<_>>()).unwrap();
        let a = 31 - n.leading_zeros();
        let b = (n - (1 << a)) as u64;
        let closed = (1u64 << (2 * a)) + b * ((1u64 << (a + 2)) - (1u64 << a));
        let bound = 2 * (n as u64) * (n as u64);
        if e.len() as u64 != closed || e_length(n as u64) != closed || closed > bound {
            errors.push(format!("|E(1:{n})| = {}", e.len()));
        }
        if e.nail_counts(n).iter().any(|&c| c as u64 > 2 * n as u64) {
            errors.push(format!("E(1:{n}) occurrences"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let n = rng.gen_range(1..=12u32);
        let k = rng.gen_range(1..=n) as usize;
        let mut nails: Vec<u32> = (1..=n).collect();
        nails.shuffle(&mut rng);
        // k nonempty classes: one seed nail each, the rest scattered
        let mut classes: Vec<Vec<u32>> = nails[..k].iter().map(|&x| vec![x]).collect();
        for &x in &nails[k..] {
            classes[rng.gen_range(0..k)].push(x);
        }
        let word = build_disjoint(n, &classes).unwrap();
        let bound = 2 * k * n as usize;
        worst = worst.max(word.len() as f64 / bound as f64);
        if word.len() > bound {
            errors.push(format!("|W| = {} > 2kn = {bound}", word.len()));
        }
    }
    outcome(
        errors.is_empty(),
        format!(
            "S_n for n=2..10, E(1:n) for n=1..64, 50 partitions (max |W|/2kn = {worst:.3}){}",
            if errors.is_empty() {
                String::new()
            } else {
                format!("; {errors:?}")
            }
        ),
    )
}

fn c3_strings() -> Outcome {
    let e4 = build_e(&[1, 2, 3, 4]).unwrap().to_string();
    let s3 = build_s(3).unwrap().to_string();
    let s2 = WordExpr::leaf(build_s(2).unwrap());
    let x3 = WordExpr::leaf(w("x3"));
    let comm = WordExpr::commutator(&s2, &x3).flatten();
    let ok_e = e4 == "x1 x2 X1 X2 x3 x4 X3 X4 x2 x1 X2 X1 x4 x3 X4 X3";
    let ok_s = s3 == "x1 x2 X1 X2 x3 x2 x1 X2 X1 X3";
    let ok_c =
        comm.to_string() == s3 && w("x1 x2 X1 X2").commutator(&w("x3")) == build_s(3).unwrap();
    outcome(
        ok_e && ok_s && ok_c,
        format!(
            "E(1:4) {}, S_3 {}, [S_2, x3] = S_3 {}",
            yes(ok_e),
            yes(ok_s),
            yes(ok_c)
        ),
    )
}

fn yes(b: bool) -> &'static str {
    if b {
        "exact"
    } else {
        "DIFFERS"
    }
}

fn c4_accounting() -> Outcome {
    let or = or_template_count();
    let and = and_template_count();
    let units = or.p_units == 256 && or.q_units == 256;
    let aux = or.auxiliary == 822;
    let total = or.total() == 1078;
    let and_ok = and.total() == 14;
    outcome(
        units && aux && total && and_ok,
        format!(
            "OR: {} p + {} q units {}, {} auxiliary letters (stated 822) {}, total {} {}; AND total {} {}",
            or.p_units,
            or.q_units,
            ok(units),
            or.auxiliary,
            ok(aux),
            or.total(),
            ok(total),
            and.total(),
            ok(and_ok)
        ),
    )
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "MISMATCH"
    }
}

type Oracle = fn(&NailSubset) -> bool;

struct Compiled {
    label: String,
    report: CompileReport,
}

fn check_compiled(
    label: &str,
    c: &MonotoneCircuit,
    oracle: &dyn Fn(&NailSubset) -> bool,
) -> Result<Compiled, String> {
    let report = compile(c, &CompileOptions::default()).map_err(|e| format!("{label}: {e}"))?;
    let n = c.n();
    let table = fall_table(&report.word, n).unwrap();
    for m in 0..1u64 << n {
        let s = NailSubset::from_mask(n, m).unwrap();
        if table.get(&s) != oracle(&s) || c.eval(&s) != oracle(&s) {
            return Err(format!("{label}: differs at {s}"));
        }
    }
    if !report.verification.is_verified() {
        return Err(format!(
            "{label}: compiler reports {:?}",
            report.verification
        ));
    }
    Ok(Compiled {
        label: label.into(),
        report,
    })
}

fn c5_compiler(corpus: &mut Vec<Compiled>) -> Outcome {
    let mut attempts: Vec<Result<Compiled, String>> = Vec::new();

    // the six monotone functions of two variables; constant false has no hanging
    let two: [(&str, Oracle); 5] = [
        ("true", |_| true),
        ("r1", |s| s.contains(1)),
        ("r2", |s| s.contains(2)),
        ("r1 & r2", |s| s.contains(1) && s.contains(2)),
        ("r1 | r2", |s| s.contains(1) || s.contains(2)),
    ];
    for (text, f) in two {
        let c = parse_formula(text).unwrap().widen(2);
        attempts.push(check_compiled(text, &c, &f));
    }
    let refused = matches!(
        compile(
            &MonotoneCircuit::constant(2, false),
            &CompileOptions::default()
        ),
        Err(Error::Unrealizable(_))
    );

    let maj = parse_formula("r1 & r2 | r1 & r3 | r2 & r3").unwrap();
    attempts.push(check_compiled("majority of 3", &maj, &|s| s.len() >= 2));

    for n in [3u32, 4] {
        let singletons: Vec<Vec<u32>> = (1..=n).map(|i| vec![i]).collect();
        let c = subsets_to_circuit(&singletons, n).unwrap();
        attempts.push(check_compiled(&format!("any of r1..r{n}"), &c, &|s| {
            !s.is_empty()
        }));
    }

    let puzzles: [(u32, u32, Vec<Vec<u32>>); 3] = [
        (3, 3, vec![vec![1], vec![2, 3]]),
        (7, 4, vec![vec![1, 2], vec![3, 4]]),
        (8, 4, vec![vec![1], vec![2], vec![3, 4]]),
    ];
    for (id, n, sets) in &puzzles {
        let c = subsets_to_circuit(sets, *n).unwrap();
        attempts.push(check_compiled(&format!("puzzle {id} spec"), &c, &|s| {
            dnf_eval(sets, s)
        }));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut dnf_done = 0;
    let mut over_budget = 0;
    while dnf_done < 25 {
        let terms = random_dnf(&mut rng, 4, 4, 3);
        let c = subsets_to_circuit(&terms, 4).unwrap();
        if estimate_length(&c) > CompileOptions::default().budget {
            over_budget += 1;
            continue;
        }
        dnf_done += 1;
        attempts.push(check_compiled(
            &format!("DNF {}", dnf_text(&terms)),
            &c,
            &|s| dnf_eval(&terms, s),
        ));
    }

    let cases = attempts.len();
    let mut errors = Vec::new();
    for a in attempts {
        match a {
            Ok(c) => corpus.push(c),
            Err(e) => errors.push(e),
        }
    }
    if !refused {
        errors.push("constant false was not refused".into());
    }
    outcome(
        errors.is_empty(),
        format!(
            "{} of {cases} circuits compile to exactly their table on every subset \
             ({over_budget} random DNFs drawn over budget and redrawn), constant false refused: {}{}",
            cases - errors.iter().filter(|e| !e.starts_with("constant")).count(),
            refused,
            if errors.is_empty() { String::new() } else { format!("; {errors:?}") }
        ),
    )
}

fn c6_threshold(corpus: &mut Vec<Compiled>) -> Outcome {
    let mut errors = Vec::new();
    let mut notes = Vec::new();
    for (k, n) in [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (4, 4), (2, 4)] {
        let estimate = estimate_length(&threshold_circuit(k, n));
        match build_k_of_n(k, n, &CompileOptions::default()) {
            Ok(r) => {
                let table = fall_table(&r.word, n).unwrap();
                let exact = (0..1u64 << n).all(|m| {
                    let s = NailSubset::from_mask(n, m).unwrap();
                    table.get(&s) == (m.count_ones() >= k)
                });
                if !exact || !r.verification.is_verified() {
                    errors.push(format!("({k},{n})"));
                }
                if (k, n) == (2, 4) {
                    notes.push(format!(
                        "(2,4) compiled: {} letters, estimate {estimate}",
                        r.reduced_length
                    ));
                }
                corpus.push(Compiled {
                    label: format!("{k}-of-{n}"),
                    report: r,
                });
            }
            Err(Error::BudgetExceeded { estimate, budget }) if (k, n) == (2, 4) => {
                notes.push(format!(
                    "(2,4) skipped: estimate {estimate} over budget {budget}"
                ));
            }
            Err(e) => errors.push(format!("({k},{n}): {e}")),
        }
    }
    outcome(
        errors.is_empty(),
        format!(
            "fall table = [|s| >= k] for all listed (k,n); {}{}",
            notes.join(", "),
            if errors.is_empty() {
                String::new()
            } else {
                format!("; failing {errors:?}")
            }
        ),
    )
}

fn c7_networks() -> Outcome {
    let mut errors = Vec::new();
    for n in 1..=16u32 {
        let net = batcher_network(n);
        let sorted = (0..1u32 << n).all(|bits| {
            let mut v: Vec<u8> = (0..n).map(|i| (bits >> i & 1) as u8).collect();
            net.apply(&mut v);
            v.windows(2).all(|p| p[0] <= p[1])
        });
        if !sorted {
            errors.push(format!("sort n={n}"));
        }
    }
    for width in 1..=8u32 {
        let net = batcher_network(width);
        let circuits: Vec<_> = (1..=width).map(|o| network_to_circuit(&net, o)).collect();
        for m in 0..1u64 << width {
            let s = NailSubset::from_mask(width, m).unwrap();
            let mut v: Vec<bool> = (1..=width).map(|i| s.contains(i)).collect();
            net.apply(&mut v);
            if circuits.iter().zip(&v).any(|(c, &x)| c.eval(&s) != x) {
                errors.push(format!("circuit width={width}"));
                break;
            }
        }
    }
    outcome(
        errors.is_empty(),
        format!(
            "Batcher sorts every 0/1 input for n <= 16; wire circuits match for width <= 8{}",
            if errors.is_empty() {
                String::new()
            } else {
                format!("; {errors:?}")
            }
        ),
    )
}

fn c8_spectator() -> Outcome {
    // (min fell, max survive) as stated by each puzzle
    let stated: [(u32, u32); 11] = [
        (1, 0),
        (2, 1),
        (1, 1),
        (1, 0),
        (2, 1),
        (3, 2),
        (2, 2),
        (1, 1),
        (1, 2),
        (1, 1),
        (2, 2),
    ];
    let mut errors = Vec::new();
    for (f, &(fell, survive)) in load_fixtures().iter().zip(&stated) {
        let a = min_fell_exact(&f.word, f.n).unwrap();
        let b = max_survive_exact(&f.word, f.n).unwrap();
        let g = greedy_min_fell(&f.word, f.n).unwrap();
        if a.len() != fell || b.len() != survive {
            errors.push(format!("#{}: {} / {}", f.id, a, b));
        }
        if g.len() < a.len() || !f.word.falls(&g) {
            errors.push(format!("#{} greedy {g}", f.id));
        }
        // every superset of the felling set falls, every subset of the surviving one hangs
        for m in 0..1u64 << f.n {
            let s = NailSubset::from_mask(f.n, m).unwrap();
            if (a.is_subset_of(&s) && !f.word.falls(&s)) || (s.is_subset_of(&b) && f.word.falls(&s))
            {
                errors.push(format!("#{} frontier at {s}", f.id));
                break;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut instances = 0;
    while instances < 20 {
        let m = rng.gen_range(1..=3u32);
        let n = rng.gen_range(2..=4usize);
        let sets: Vec<Vec<u32>> = (0..n)
            .map(|_| (1..=m).filter(|_| rng.gen_bool(0.5)).collect())
            .collect();
        let Some(optimum) = brute_force_cover(m, &sets) else {
            continue;
        };
        instances += 1;
        let h = set_cover_to_hanging(m, &sets).unwrap();
        let solved = min_fell_exact(&h.word, h.n).unwrap();
        if solved.len() != optimum {
            errors.push(format!(
                "cover m={m} {sets:?}: {} vs {optimum}",
                solved.len()
            ));
        }
    }
    outcome(
        errors.is_empty(),
        format!(
            "11 puzzles match their stated min-fell/max-survive sizes; 20 set-cover instances match brute force{}",
            if errors.is_empty() { String::new() } else { format!("; {errors:?}") }
        ),
    )
}

fn c9_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut violations = [0u32; 4];
    for _ in 0..1000 {
        let v = random_letters(&mut rng, 4, 40);
        let word = Word::from_signed(&v).unwrap();
        let a = word.reduce().to_signed();
        if a != naive_reduce(&v) || a != random_order_reduce(&v, &mut rng) {
            violations[0] += 1;
        }
    }
    for _ in 0..1000 {
        let word = Word::from_signed(&random_letters(&mut rng, 5, 40)).unwrap();
        if !word.concat(&word.inverse()).is_empty()
            || !word.inverse().concat(&word).is_empty()
            || word.inverse().inverse() != word
        {
            violations[1] += 1;
        }
    }
    for _ in 0..1000 {
        let n = 5;
        let u = Word::from_signed(&random_letters(&mut rng, n, 30)).unwrap();
        let v = Word::from_signed(&random_letters(&mut rng, n, 30)).unwrap();
        let s = NailSubset::from_mask(n, rng.gen_range(0..1u64 << n)).unwrap();
        let lhs = u.concat(&v).remove_nails(&s);
        let rhs = u.remove_nails(&s).concat(&v.remove_nails(&s));
        if lhs.letters() != rhs.letters() {
            violations[2] += 1;
        }
    }
    for _ in 0..200 {
        let n = rng.gen_range(1..=8u32);
        let word = Word::from_signed(&random_letters(&mut rng, n, 24)).unwrap();
        let table = fall_table(&word, n).unwrap();
        let monotone = (0..1u64 << n).all(|m| {
            (0..n).all(|i| !table.values()[m as usize] || table.values()[(m | 1 << i) as usize])
        });
        if !monotone {
            violations[3] += 1;
        }
    }
    outcome(
        violations == [0; 4],
        format!(
            "violations: confluence {}/1000, inverse {}/1000, homomorphism {}/1000, monotonicity {}/200",
            violations[0], violations[1], violations[2], violations[3]
        ),
    )
}

fn c10_bounds(corpus: &[Compiled]) -> Outcome {
    let bad: Vec<_> = corpus
        .iter()
        .filter(|c| c.report.as_constructed_length > c.report.estimate)
        .map(|c| c.label.clone())
        .collect();
    let over_bound: Vec<_> = corpus
        .iter()
        .filter(
            |c| matches!(c.report.bound, Some(b) if (c.report.as_constructed_length as u128) > b),
        )
        .map(|c| c.label.clone())
        .collect();
    let unverified = corpus
        .iter()
        .filter(|c| !matches!(c.report.verification, Verification::Verified { .. }))
        .count();
    outcome(
        bad.is_empty() && over_bound.is_empty() && unverified == 0,
        format!(
            "estimate >= as-constructed length and 1078^depth >= length on {} compiles; \
             counting lower bound and AKS depth are documented only, Batcher networks used{}",
            corpus.len(),
            if bad.is_empty() && over_bound.is_empty() {
                String::new()
            } else {
                format!("; estimate {bad:?}, bound {over_bound:?}")
            }
        ),
    )
}

fn main() {
    let start = Instant::now();
    let mut corpus = Vec::new();
    let mut results: Vec<(u32, &str, Outcome, f64)> = Vec::new();
    let mut run = |id: u32, title: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let o = f();
        let secs = t.elapsed().as_secs_f64();
        println!(
            "criterion {id:>2}  {}  {title}: {} [{secs:.2}s]",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        results.push((id, title, o, secs));
    };
    run(1, "puzzle solution golden suite", &mut c1_golden);
    run(2, "length formulas", &mut c2_lengths);
    run(3, "exact word reproduction", &mut c3_strings);
    run(4, "gadget accounting", &mut c4_accounting);
    run(5, "compiler oracle equivalence", &mut || {
        c5_compiler(&mut corpus)
    });
    run(6, "k-out-of-n", &mut || c6_threshold(&mut corpus));
    run(7, "sorting-network soundness", &mut c7_networks);
    run(8, "spectator", &mut c8_spectator);
    run(9, "property suites", &mut c9_properties);
    run(10, "bounds substituted by properties", &mut || {
        c10_bounds(&corpus)
    });

    let failing: Vec<u32> = results.iter().filter(|r| !r.2.pass).map(|r| r.0).collect();
    println!(
        "{} passed, {} failed ({:?}) in {:.1}s; known failures {:?}",
        results.len() - failing.len(),
        failing.len(),
        failing,
        start.elapsed().as_secs_f64(),
        KNOWN_FAILURES
    );
    if failing != KNOWN_FAILURES {
        eprintln!("acceptance: failing criteria differ from the known list");
        std::process::exit(1);
    }
}
