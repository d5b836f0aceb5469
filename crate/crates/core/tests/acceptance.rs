//! One line per acceptance criterion: status, tolerance, elapsed time against its limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use theta_hecke::check::all_hold;
use theta_hecke::hecke::HeckeAlgebra;
use theta_hecke::polyrep::{act, tsm_closed_form};
use theta_hecke::rings::{det, LaurentPoly, Profile};
use theta_hecke::springer::{
    build_fixed_flags, change_of_basis, lusztig_tuples_solved, table_checks, twist_identity_checks, KernelSampler,
};
use theta_hecke::theta::{brute_force_orbits, enumerate_orbits, injection_count, Convention, DictionaryReport, ThetaModule};
use theta_hecke::verify::{length_oracle, rng_for, run_suite, Status, Suite, VerifyConfig};
use theta_hecke::Result;

const GOLDEN_DICTIONARY: &str = include_str!("golden/dictionary.txt");

struct Criterion {
    number: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Result<(bool, String)>,
}

fn suite_passes(suite: Suite, m: (usize, usize)) -> Result<(bool, String)> {
    let report = run_suite(&VerifyConfig::new(suite, m))?;
    let failed: Vec<&str> = report.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect();
    let detail = if failed.is_empty() {
        format!("{} checks", report.checks.len())
    } else {
        format!("failed: {}", failed.join(", "))
    };
    Ok((report.passed, detail))
}

fn tsm_on_one() -> Result<(bool, String)> {
    for m in 2..=8 {
        let alg = HeckeAlgebra::new(m);
        let got = act(&alg.t(m), &LaurentPoly::one(Profile::X(m as u8)))?;
        if got != tsm_closed_form(m) {
            return Ok((false, format!("m={m}: got {got}")));
        }
    }
    Ok((true, "m=2..8".into()))
}

fn main_theorem() -> Result<(bool, String)> {
    suite_passes(Suite::MainTheorem, (1, 6))
}

fn freeness() -> Result<(bool, String)> {
    for m in 1..=6 {
        let (num, _) = ThetaModule::new(m)?.freeness_determinant()?;
        if num.is_zero() {
            return Ok((false, format!("m={m}: determinant vanishes")));
        }
    }
    Ok((true, "m=1..6".into()))
}

fn center() -> Result<(bool, String)> {
    for m in 2..=6 {
        let checks = ThetaModule::new(m)?.central_character_checks()?;
        if !all_hold(&checks) {
            return Ok((false, format!("m={m}")));
        }
    }
    Ok((true, "m=2..6, e_1..e_m".into()))
}

fn hecke_soundness() -> Result<(bool, String)> {
    suite_passes(Suite::Hecke, (2, 4))
}

fn change_of_basis_and_tables() -> Result<(bool, String)> {
    for m in 2..=8 {
        let rows = change_of_basis(m, false);
        if det(Profile::S, &rows).is_zero() {
            return Ok((false, format!("m={m}: singular system")));
        }
        let flags = build_fixed_flags(m);
        lusztig_tuples_solved(&flags, false)?;
        let (tuples, _) = lusztig_tuples_solved(&flags, true)?;
        let checks: Vec<_> = twist_identity_checks(m, &tuples).into_iter().chain(table_checks(&flags)).collect();
        if let Some(c) = checks.iter().find(|c| !c.holds) {
            return Ok((false, format!("m={m}: {}", c.label)));
        }
    }
    Ok((true, "m=2..8".into()))
}

fn kernel_stability() -> Result<(bool, String)> {
    for m in 2..=5 {
        let sampler = KernelSampler::new(m, 1)?;
        let mut rng = rng_for(0, &format!("acceptance/kernel/m{m}"));
        let report = sampler.stability(&HeckeAlgebra::new(m), 100, &mut rng)?;
        if let Some(v) = report.violations.first() {
            return Ok((false, format!("m={m}: {v}")));
        }
    }
    Ok((true, "m=2..5, 100 samples each".into()))
}

fn orbit_counts() -> Result<(bool, String)> {
    let mut cases = 0;
    for m in 1..=4 {
        for n in 0..=m {
            for big_n in 0..=3 {
                for r in 0..=3 {
                    if big_n + r == 0 {
                        continue;
                    }
                    let count = enumerate_orbits(n, m, big_n, r)?.len() as u128;
                    let brute = brute_force_orbits(n, m, big_n, r)?;
                    if count != brute {
                        return Ok((false, format!("n={n} m={m} N={big_n} r={r}: {count} vs {brute}")));
                    }
                    cases += 1;
                }
            }
            let factorial = |k: usize| (1..=k as u128).product::<u128>();
            if injection_count(n, m) != factorial(m) / factorial(m - n) {
                return Ok((false, format!("|S_{n},{m}|")));
            }
        }
    }
    Ok((true, format!("{cases} cases")))
}

fn length_function() -> Result<(bool, String)> {
    for m in 1..=3 {
        if let Some((w, formula, found)) = length_oracle(m, 2).first() {
            return Ok((false, format!("{w}: {formula} vs {found:?}")));
        }
    }
    Ok((true, "m=1..3, |λ_i| ≤ 2".into()))
}

fn dictionary() -> Result<(bool, String)> {
    let mut rendered = String::new();
    for m in 2..=5 {
        let theta = ThetaModule::new(m)?;
        let report = DictionaryReport::build(&theta)?;
        if report.reproducing.len() != 1 {
            return Ok((false, format!("m={m}: reproducing {:?}", report.reproducing)));
        }
        if report.render() != DictionaryReport::build(&theta)?.render() {
            return Ok((false, format!("m={m}: report not deterministic")));
        }
        rendered.push_str(&report.render());
    }
    if rendered != GOLDEN_DICTIONARY {
        return Ok((false, "report differs from the golden file".into()));
    }
    let conv = DictionaryReport::build(&ThetaModule::new(2)?)?.reproducing[0];
    Ok((true, format!("{} for m=2..5", if conv == Convention::A { "convention-A" } else { "convention-B" })))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { number: 1, name: "T_sm on 1", limit: Duration::from_secs(5), run: tsm_on_one },
        Criterion { number: 2, name: "main theorem", limit: Duration::from_secs(60), run: main_theorem },
        Criterion { number: 3, name: "freeness", limit: Duration::from_secs(10), run: freeness },
        Criterion { number: 4, name: "center", limit: Duration::from_secs(30), run: center },
        Criterion { number: 5, name: "Hecke algebra soundness", limit: Duration::from_secs(60), run: hecke_soundness },
        Criterion { number: 6, name: "change of basis and tables", limit: Duration::from_secs(10), run: change_of_basis_and_tables },
        Criterion { number: 7, name: "kernel stability", limit: Duration::from_secs(60), run: kernel_stability },
        Criterion { number: 8, name: "orbit combinatorics", limit: Duration::from_secs(5), run: orbit_counts },
        Criterion { number: 9, name: "length oracle", limit: Duration::from_secs(30), run: length_function },
        Criterion { number: 10, name: "dictionary report", limit: Duration::from_secs(60), run: dictionary },
    ];
    let mut all = true;
    for c in &criteria {
        let start = Instant::now();
        let (ok, detail) = (c.run)().unwrap_or_else(|e| (false, format!("error: {e}")));
        let elapsed = start.elapsed();
        let in_time = elapsed <= c.limit;
        let pass = ok && in_time;
        all &= pass;
        println!(
            "criterion {:>2} {:<28} {}  tolerance exact  {:.2}s / {}s  {}{}",
            c.number,
            c.name,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            detail,
            if in_time { "" } else { " (over time limit)" }
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
