//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{members, Naive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quotset::algebra::{check_box_kw, quotient_counts, quotient_set, representation_counts, RepForm};
use quotset::census::{conjecture_scan, theorem_census, CensusConfig, ViolationKind};
use quotset::classify::{classify, construct_threshold_example, qplus_diagnostics, Kind};
use quotset::cli::run;
use quotset::group::{build_group, catalog, EXTENDED_CATALOG_ORDER};
use quotset::subgroup::{all_subgroups, check_coset_lemmas, double_coset, Subgroup};
use quotset::{ElemSet, ElementId, GroupTable};

const SEED: u64 = 0x5eed_0001;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn groups(max: usize) -> Vec<GroupTable> {
    catalog(max).iter().map(|s| build_group(s).unwrap()).collect()
}

fn random_set(rng: &mut ChaCha8Rng, n: usize) -> ElemSet {
    loop {
        let mask: u64 = rng.gen::<u64>() & (u64::MAX >> (64 - n));
        // Thin out large groups so small sets show up too.
        let keep = if n > 12 && rng.gen_bool(0.5) { mask & rng.gen::<u64>() & rng.gen::<u64>() } else { mask };
        if keep != 0 {
            return ElemSet::from_mask(n, keep);
        }
    }
}

fn exhaustive_census() -> Outcome {
    let cfg = CensusConfig::default();
    let mut per_kind = [0usize; 5];
    let mut affected = Vec::new();
    let started = Instant::now();
    let mut run = |max_lo: usize, max_hi: usize| {
        for g in groups(max_hi).iter().filter(|g| g.order() > max_lo) {
            let r = theorem_census(g, &cfg).unwrap();
            for v in &r.violations {
                per_kind[v.kind as usize] += 1;
            }
            if !r.verified() {
                affected.push(format!("{} ({})", r.group_spec, r.violations.len()));
            }
        }
    };
    run(0, 16);
    let core = started.elapsed();
    run(16, EXTENDED_CATALOG_ORDER);
    let total = started.elapsed();
    let kinds = [
        ViolationKind::Necessity,
        ViolationKind::Moreover,
        ViolationKind::Sufficiency,
        ViolationKind::TrivialBound,
        ViolationKind::KernelMismatch,
    ];
    let counts: Vec<String> = kinds.iter().map(|k| format!("{k:?} {}", per_kind[*k as usize])).collect();
    Outcome {
        pass: affected.is_empty(),
        detail: format!(
            "order <= 16 in {:.1}s, <= 24 in {:.1}s; violating classes: {}; groups: {}",
            core.as_secs_f64(),
            total.as_secs_f64(),
            counts.join(", "),
            if affected.is_empty() { "none".into() } else { affected.join(", ") }
        ),
    }
}

fn threshold_sharpness() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for (spec, h, size) in [("cyclic 7", &[0][..], 3), ("cyclic 10", &[0, 5][..], 6)] {
        let g = build_group(spec).unwrap();
        let h = Subgroup::from_set(&g, ElemSet::from_indices(g.order(), h.iter().copied()).unwrap()).unwrap();
        let a = construct_threshold_example(&g, &h, ElementId::new(1)).unwrap();
        let c = classify(&g, &a, &all_subgroups(&g).unwrap()).unwrap();
        pass &= a.len() == size && c.ratio.three_q == c.ratio.five_a && c.kind == Kind::NotSmall;
        notes.push(format!("{spec}: A = {a}, 3|Q| = {} vs 5|A| = {}, {:?}", c.ratio.three_q, c.ratio.five_a, c.kind));
    }
    Outcome { pass, detail: notes.join("; ") }
}

fn conjecture_regression() -> Outcome {
    let cfg = CensusConfig::default();
    let all = groups(16);
    let mut notes = Vec::new();
    let mut pass = true;
    for n in 1..=3 {
        let mut counter = 0;
        let mut sharp = 0;
        let mut hit = Vec::new();
        for g in &all {
            let r = conjecture_scan(g, n, &cfg).unwrap();
            counter += r.counterexamples.len();
            sharp += r.sharpness_violations.len();
            if !r.counterexamples.is_empty() {
                hit.push(r.group_spec.clone());
            }
        }
        if n <= 2 {
            pass &= counter == 0 && sharp == 0;
        }
        notes.push(format!(
            "n={n}: {counter} classes without witness{}, {sharp} sharpness findings",
            if hit.is_empty() { String::new() } else { format!(" in {}", hit.join(", ")) }
        ));
    }
    Outcome { pass, detail: notes.join("; ") }
}

fn lemma_suite() -> Outcome {
    let all = groups(EXTENDED_CATALOG_ORDER);
    let mut pairs = 0;
    let mut failures = Vec::new();
    for g in &all {
        for h in all_subgroups(g).unwrap().iter() {
            pairs += 1;
            let r = check_coset_lemmas(g, h).unwrap();
            if !r.passed() {
                failures.push(format!("{} H={}", g.spec(), h.elements()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut box_kw_failures = 0;
    for _ in 0..10_000 {
        let g = &all[rng.gen_range(0..all.len())];
        let a = random_set(&mut rng, g.order());
        let b = random_set(&mut rng, g.order());
        if !check_box_kw(g, &a, &b).unwrap().passed() {
            box_kw_failures += 1;
        }
    }
    Outcome {
        pass: failures.is_empty() && box_kw_failures == 0,
        detail: format!(
            "{pairs} (group, subgroup) pairs, {} lemma failures; 10000 box/KW triples, {box_kw_failures} failures",
            failures.len()
        ),
    }
}

fn qplus_machinery() -> Outcome {
    let mut subsets = 0u64;
    let mut gap_checked = 0u64;
    let mut failures = Vec::new();
    for g in groups(12) {
        let n = g.order();
        for m in 1u64..1 << n {
            let a = ElemSet::from_mask(n, m);
            let d = qplus_diagnostics(&g, &a).unwrap();
            subsets += 1;
            if d.r_gap.status("r_gap_bound") == Some(quotset::check::Status::Pass) {
                gap_checked += 1;
            }
            if !d.stability.passed() || !d.r_gap.passed() {
                failures.push(format!("{} {a}", g.spec()));
            }
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!(
            "{subsets} subsets, r-gap asserted on {gap_checked}, {} failures{}",
            failures.len(),
            failures.first().map(|f| format!(" (first: {f})")).unwrap_or_default()
        ),
    }
}

fn determinism() -> Outcome {
    let cli = |args: &[&str]| run(std::iter::once("quotset").chain(args.iter().copied())).report;
    let mut pass = true;
    let mut sizes = Vec::new();
    for verb in [&["census"][..], &["conjecture-scan", "--n", "2"][..]] {
        let base = [verb, &["--max-order", "16", "--format", "json"][..]].concat();
        let runs: Vec<String> = [["--jobs", "1"], ["--jobs", "4"], ["--jobs", "1"]]
            .iter()
            .map(|j| cli(&[&base[..], &j[..]].concat()))
            .collect();
        pass &= runs.iter().all(|r| r == &runs[0]) && runs[0].starts_with('{');
        sizes.push(format!("{} {} bytes", verb.join(" "), runs[0].len()));
    }
    Outcome {
        pass,
        detail: format!("jobs 1, 4 and 1 again: {}", sizes.join(", ")),
    }
}

fn oracle_cross_check() -> Outcome {
    let all = groups(EXTENDED_CATALOG_ORDER);
    let naive: Vec<Naive> = all.iter().map(Naive::from_table).collect();
    let subgroups: Vec<Vec<Subgroup>> = all.iter().map(|g| all_subgroups(g).unwrap().as_slice().to_vec()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut mismatches = 0;
    for _ in 0..10_000 {
        let i = rng.gen_range(0..all.len());
        let (g, o) = (&all[i], &naive[i]);
        let n = g.order();
        let a = random_set(&mut rng, n);
        let b = random_set(&mut rng, n);
        let ia: Vec<usize> = a.iter().map(|x| x.index()).collect();
        let ib: Vec<usize> = b.iter().map(|x| x.index()).collect();
        let h = &subgroups[i][rng.gen_range(0..subgroups[i].len())];
        let hx: Vec<usize> = h.elements().iter().map(|x| x.index()).collect();
        let x = rng.gen_range(0..n);
        let agree = quotient_set(g, &a).unwrap() == ElemSet::from_indices(n, members(&o.quotient(&ia))).unwrap()
            && quotient_counts(g, &a).unwrap().counts == o.quotient_counts(&ia)
            && representation_counts(g, &a, &b, RepForm::Product).unwrap().counts == o.product_counts(&ia, &ib)
            && double_coset(g, h, ElementId::new(x)) == ElemSet::from_indices(n, members(&o.double_coset(&hx, x))).unwrap();
        mismatches += usize::from(!agree);
    }
    Outcome {
        pass: mismatches == 0,
        detail: format!("10000 instances over {} groups, {mismatches} mismatches", all.len()),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("exhaustive census, orders <= 16 and <= 24", exhaustive_census),
        ("threshold sharpness", threshold_sharpness),
        ("structure scan regression, n = 1, 2, 3", conjecture_regression),
        ("coset lemmas and box/KW", lemma_suite),
        ("Q+ / F diagnostics, orders <= 12", qplus_machinery),
        ("deterministic JSON", determinism),
        ("naive oracle agreement", oracle_cross_check),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let o = check();
        failed += usize::from(!o.pass);
        println!(
            "criterion {}: {} {name} [{:.1}s] {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            started.elapsed().as_secs_f64(),
            o.detail
        );
    }
    println!("acceptance: {} of 7 criteria pass", 7 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
