//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cyclomahonian::bijection::{
    exhaustive_check, property_failures, stable_desc_sort, swap_sort_steps, word_to_pair_traced,
    Partition,
};
use cyclomahonian::cyclotomic::{specialize_p, CycRing};
use cyclomahonian::identities::{
    build_sides, compare, plan, run_matrix, Context, MatrixConfig, SuiteId, VerificationReport,
};
use cyclomahonian::permstat::{coinv, inv, Permutation, Word};
use cyclomahonian::polyring::q_pochhammer_int;

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn matrix(suites: &[SuiteId], cfg: &MatrixConfig) -> Vec<VerificationReport> {
    run_matrix(suites, cfg).expect("matrix runs")
}

fn failures(reports: &[VerificationReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} {}", r.suite, r.params_text()))
        .collect()
}

fn all_pass(reports: &[VerificationReport], what: &str) -> Outcome {
    let failed = failures(reports);
    if failed.is_empty() {
        outcome(true, format!("{} {what} checks", reports.len()))
    } else {
        outcome(
            false,
            format!(
                "{} of {} {what} checks failed: {}",
                failed.len(),
                reports.len(),
                failed.join("; ")
            ),
        )
    }
}

fn cfg(n_max: usize, m_set: &[u32]) -> MatrixConfig {
    MatrixConfig {
        n_max,
        m_set: m_set.to_vec(),
        ..MatrixConfig::default()
    }
}

fn main_theorem() -> Outcome {
    let start = Instant::now();
    let reports = matrix(&[SuiteId::Main], &cfg(8, &[1, 2, 3, 4, 5, 6]));
    let mut o = all_pass(&reports, "main-theorem");
    o.detail += &format!(" in {:.2?}", start.elapsed());
    o
}

fn carlitz() -> Outcome {
    all_pass(&matrix(&[SuiteId::Carlitz], &cfg(8, &[1])), "Carlitz")
}

fn coefficient_formula() -> Outcome {
    let c = MatrixConfig {
        ell_max: 4,
        ..cfg(6, &[1])
    };
    all_pass(&matrix(&[SuiteId::Util], &c), "coefficient-extraction")
}

fn closed_forms() -> Outcome {
    let suites = [
        SuiteId::Wachs,
        SuiteId::GesselSimion,
        SuiteId::AdinGr,
        SuiteId::DfEven,
        SuiteId::DfOdd,
        SuiteId::CaseImag,
        SuiteId::MissingOdd,
        SuiteId::CaseI0,
        SuiteId::CaseI1,
        SuiteId::CaseI2,
        SuiteId::Q1Triple,
        SuiteId::M4Eulerian,
    ];
    let reports = matrix(&suites, &cfg(8, &[1, 2, 3, 4, 5, 6]));
    let mut o = all_pass(&reports, "closed-form");
    let third_line = |r: &&VerificationReport| r.params.get("line") == Some(&3);
    let printed_only = reports
        .iter()
        .filter(|r| !r.passed())
        .all(|r| third_line(&r) && r.params["printed"] == 1);
    let reference_ok = reports
        .iter()
        .filter(third_line)
        .filter(|r| r.params["printed"] == 0)
        .all(VerificationReport::passed);
    if !o.pass && printed_only && reference_ok {
        o.detail +=
            " (only the printed third q = 1 line fails; its corrected form passes everywhere)";
    }
    o
}

fn m4_mahonian() -> Outcome {
    let reports = matrix(&[SuiteId::M4Mahonian], &cfg(8, &[4]));
    let line = |r: &VerificationReport| r.params["line"];
    let verbatim_ok = reports
        .iter()
        .filter(|r| line(r) != 2)
        .all(VerificationReport::passed);
    let theorem_side: Vec<_> = reports
        .iter()
        .filter(|r| line(r) == 2 && r.params["printed"] == 0)
        .collect();
    let printed: Vec<_> = reports
        .iter()
        .filter(|r| line(r) == 2 && r.params["printed"] == 1)
        .collect();
    let theorem_ok = !theorem_side.is_empty() && theorem_side.iter().all(|r| r.passed());
    let which = match (theorem_ok, printed.iter().all(|r| r.passed())) {
        (true, false) => {
            "4n+2 line: the product-formula side matches, the printed [4n+3]_q! form does not"
        }
        (true, true) => "4n+2 line: both forms match",
        (false, true) => "4n+2 line: only the printed form matches",
        (false, false) => "4n+2 line: neither form matches",
    };
    outcome(
        verbatim_ok && theorem_ok,
        format!(
            "lines 4n, 4n+1, 4n+3 verbatim: {}; {which}",
            if verbatim_ok { "pass" } else { "FAIL" }
        ),
    )
}

fn q_lucas() -> Outcome {
    let c = cfg(8, &[2, 3, 4]);
    let reports = matrix(&[SuiteId::QLucas], &c);
    // every tuple whose residues sum to at least m must carry a vanishing row
    let vanishing: BTreeSet<_> = reports
        .iter()
        .filter(|r| r.params["clause"] == 1)
        .map(|r| {
            let mut p = r.params.clone();
            p.remove("clause");
            p
        })
        .collect();
    let mut missing = 0;
    for r in reports.iter().filter(|r| r.params["clause"] == 0) {
        let m = r.params["m"];
        let residues: i64 = ["n0", "n1", "n2"]
            .iter()
            .filter_map(|k| r.params.get(*k))
            .map(|x| x % m)
            .sum();
        let mut p = r.params.clone();
        p.remove("clause");
        if residues >= m && !vanishing.contains(&p) {
            missing += 1;
        }
    }
    let mut o = all_pass(&reports, "q-Lucas");
    o.detail += &format!(", {} vanishing cases", vanishing.len());
    if missing > 0 {
        o.pass = false;
        o.detail += &format!(", {missing} vanishing cases not covered");
    }
    o
}

fn lemma() -> Outcome {
    let reports = matrix(&[SuiteId::LemmaAgr], &MatrixConfig::default());
    // independent of the suite: evaluate (p;p)_{m-1} directly
    let direct = (1..=12u32).all(|m| {
        let r = CycRing::new(m);
        specialize_p(&q_pochhammer_int(m as usize - 1), &r) == r.int(i64::from(m))
    });
    let mut o = all_pass(&reports, "lemma");
    o.pass &= direct;
    o
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize, max_letter: u32) -> Word {
    let n = rng.gen_range(0..=max_len);
    Word((0..n).map(|_| rng.gen_range(0..=max_letter)).collect())
}

fn bijection() -> Outcome {
    let sweep = exhaustive_check(4, 5, 2).expect("sweep runs");
    let sweep_ok = sweep.passed() && sweep.words == 1296;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let random_bad = (0..10_000)
        .filter(|_| !property_failures(&random_word(&mut rng, 8, 20)).is_empty())
        .count();
    let example = Word(vec![4, 5, 4, 1, 2, 2, 2, 5]);
    let tr = word_to_pair_traced(&example).expect("example maps");
    let example_ok = tr.sigma == Permutation::new(vec![2, 8, 1, 3, 5, 6, 7, 4]).unwrap()
        && tr.lambda == Partition::new(vec![8, 4, 4]).unwrap();
    let swap_bad = (0..1_000)
        .filter(|_| {
            let w = random_word(&mut rng, 8, 20);
            let steps = swap_sort_steps(&w);
            let target = coinv(&w);
            let last = steps.last().cloned().unwrap();
            steps.iter().any(|(wp, sp)| coinv(wp) + inv(sp) != target)
                || last != stable_desc_sort(&w)
        })
        .count();
    outcome(
        sweep_ok && random_bad == 0 && example_ok && swap_bad == 0,
        format!(
            "{} words exhaustive ({}), 10000 random words with {random_bad} failures, worked example {}, swap invariance failures {swap_bad}/1000",
            sweep.words,
            if sweep.passed() { "all pass" } else { "FAIL" },
            if example_ok { "reproduced" } else { "WRONG" },
        ),
    )
}

fn mutation() -> Outcome {
    let config = MatrixConfig::default();
    let ctx = Context::new(false);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut problems = Vec::new();
    for &suite in SuiteId::ALL {
        let checks = plan(&[suite], &config).expect("plan");
        // mutate a check whose unperturbed sides agree
        let passing: Vec<_> = checks
            .into_iter()
            .filter(|c| {
                let sides = build_sides(c, &ctx).unwrap();
                compare(c, &sides).unwrap().passed()
            })
            .collect();
        let check = &passing[rng.gen_range(0..passing.len())];
        let sides = build_sides(check, &ctx).unwrap();
        let (lhs, at) = sides.lhs.perturb(rng.gen());
        let mutated = cyclomahonian::identities::Sides {
            lhs,
            rhs: sides.rhs,
        };
        let report = compare(check, &mutated).unwrap();
        let located = report
            .first_mismatch
            .as_ref()
            .map(|mm| (mm.t_degree, mm.q_degree));
        if report.passed() || located != Some(at) {
            problems.push(format!(
                "{suite} {}: expected mismatch at {at:?}, got {located:?}",
                check.params_text()
            ));
        }
    }
    outcome(
        problems.is_empty(),
        if problems.is_empty() {
            format!(
                "{} suites, every perturbation caught at the right coefficient",
                SuiteId::ALL.len()
            )
        } else {
            problems.join("; ")
        },
    )
}

fn determinism() -> Outcome {
    let json = |jobs| {
        let reports = matrix(
            SuiteId::ALL,
            &MatrixConfig {
                jobs,
                ..MatrixConfig::default()
            },
        );
        reports
            .iter()
            .map(|r| r.to_json() + "\n")
            .collect::<String>()
    };
    let (a, b) = (json(1), json(4));
    outcome(
        a == b,
        format!(
            "{} bytes, 1 vs 4 workers {}",
            a.len(),
            if a == b { "identical" } else { "DIFFER" }
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("main theorem, n <= 8, m <= 6, L = 12", main_theorem),
        ("Carlitz identity, n <= 8, L = 12", carlitz),
        (
            "coefficient formula with symbolic p, n <= 6, l <= 4",
            coefficient_formula,
        ),
        (
            "closed-form specializations and corollaries, n <= 8",
            closed_forms,
        ),
        ("m = 4 Mahonian quadruple", m4_mahonian),
        (
            "q-Lucas, parts of length <= 3, total <= 8, m in {2,3,4}",
            q_lucas,
        ),
        ("cyclotomic lemma, m <= 12 and m <= 8", lemma),
        ("word/permutation/partition bijection", bijection),
        ("mutation sensitivity", mutation),
        ("determinism across worker counts", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {}: {name} -- {}", i + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
