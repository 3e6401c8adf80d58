//! Acceptance suite. Each criterion prints one PASS/FAIL line with its
//! elapsed time; the test fails if any criterion fails or exceeds its limit.
//!
//! Run with `cargo test -p polycone --test acceptance -- --nocapture`.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use polycone::classify::{self, ClassifyOptions};
use polycone::cyclic;
use polycone::geometry::{self, IntVector};
use polycone::gorenstein::{self, DegreeCap, GradedCone};
use polycone::polymatroid::{self, LatticePoint, Presentation};

type Outcome = Result<String, String>;

fn polycone(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_polycone"))
        .args(args)
        .arg("--json")
        .output()
        .expect("polycone binary runs");
    let code = out.status.code().unwrap_or(-1);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, v)
}

fn normals(v: &Value) -> Vec<Vec<i64>> {
    v.as_array()
        .expect("array of vectors")
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect())
        .collect()
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn pres(s: &str) -> Presentation {
    s.parse().unwrap()
}

fn facet_oracle(n: usize, expected: &[&[i64]]) -> Outcome {
    let (code, v) = polycone(&["facets", "--cyclic", &n.to_string()]);
    check(code == 0, format!("exit status {code}"))?;
    let got = normals(&v["result"]["facets"]);
    let mut want: Vec<Vec<i64>> = expected.iter().map(|r| r.to_vec()).collect();
    want.sort();
    check(got == want, format!("facets {got:?}, expected {want:?}"))?;
    let primitive = got
        .iter()
        .all(|r| r.iter().fold(0i64, |g, &x| num_integer::gcd(g, x)) == 1);
    check(primitive, "non-primitive normal")?;
    Ok(format!("{} facets", got.len()))
}

fn criterion_1() -> Outcome {
    facet_oracle(
        3,
        &[&[-1, 2, 2], &[2, -1, 2], &[2, 2, -1], &[0, 0, 1], &[1, 0, 0], &[0, 1, 0]],
    )
}

fn criterion_2() -> Outcome {
    facet_oracle(
        4,
        &[
            &[-1, 1, 1, 1],
            &[1, -1, 1, 1],
            &[1, 1, -1, 1],
            &[1, 1, 1, -1],
            &[-1, -1, 3, 3],
            &[3, -1, -1, 3],
            &[3, 3, -1, -1],
            &[-1, 3, 3, -1],
            &[0, 0, 0, 1],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
        ],
    )
}

fn criterion_3() -> Outcome {
    for n in 3..=6 {
        let (code, v) = polycone(&["verify", "--cyclic", &n.to_string()]);
        let r = &v["result"];
        check(code == 0, format!("n={n}: exit status {code}"))?;
        for key in ["facets_match", "dim_ok", "base_count_ok", "extreme_rays_ok", "success"] {
            check(r[key] == Value::Bool(true), format!("n={n}: {key} is false"))?;
        }
        check(r["dim"] == n, format!("n={n}: dim {}", r["dim"]))?;
        check(r["base_count"] == (1u64 << n) - 1, format!("n={n}: base count"))?;
    }
    Ok("n = 3..6 verified".into())
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for n in 3..=8usize {
        for i in 1..n {
            let rows = cyclic::facet_point_matrix(n, i).map_err(|e| e.to_string())?;
            check(geometry::rank(&rows) == n - 1, format!("rank at n={n}, i={i}"))?;
            let k = geometry::kernel_line(&rows).map_err(|e| e.to_string())?;
            // -(n-i-1) on 1..=i, (i+1) on i+1..=n
            let (ni, ii) = (n as i64, i as i64);
            let formula: Vec<i64> = (1..=n)
                .map(|j| if j <= i { -(ni - ii - 1) } else { ii + 1 })
                .collect();
            let f = geometry::primitive(&IntVector::from_i64s(&formula)).unwrap();
            let neg = IntVector::new(f.entries().iter().map(|x| -x).collect());
            check(k == f || k == neg, format!("kernel {k} vs {f} at n={n}, i={i}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} matrices"))
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for n in 3..=7usize {
        for pt in common::orthant_points(n, n as i64) {
            if pt.iter().sum::<i64>() != n as i64 || pt.iter().any(|&x| x > 2) || !pt.contains(&2) {
                continue;
            }
            let p = LatticePoint::new(pt).unwrap();
            check(
                cyclic::on_singleton_facet(&p).map_err(|e| e.to_string())?,
                format!("{p} is off its hyperplane"),
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} points"))
}

fn criterion_6() -> Outcome {
    for n in 3..=5 {
        let p = polymatroid::cyclic_presentation(n).unwrap();
        let s = gorenstein::is_gorenstein(&p, DegreeCap::Default).map_err(|e| e.to_string())?;
        check(s.gorenstein, format!("n={n} not Gorenstein, h = {:?}", s.h))?;
        check(
            s.canonical_generators == vec![LatticePoint::ones(n)],
            format!("n={n}: generators {:?}", s.canonical_generators),
        )?;
    }
    Ok("n = 3..5 Gorenstein with generator (1,…,1)".into())
}

fn criterion_7() -> Outcome {
    let table = [
        ("n=4; {1,2,3},{2,3,4}", vec![1, 4, 1]),
        ("n=4; {1,2,3,4},{2,3,4}", vec![1, 5, 1]),
        ("n=4; {1,2,3,4},{1,2,3,4}", vec![1, 6, 1]),
        ("n=4; {1,2},{2,3},{3,4}", vec![1, 4, 1]),
    ];
    for (s, want) in table {
        let (code, v) = polycone(&["hilbert", s]);
        check(code == 0, format!("{s}: exit {code}"))?;
        let h: Vec<u64> = v["result"]["h"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap())
            .collect();
        check(h == want, format!("{s}: h = {h:?}, expected {want:?}"))?;
        check(v["result"]["dim"] == 4, format!("{s}: dim {}", v["result"]["dim"]))?;
    }
    Ok("4 series".into())
}

fn criterion_8() -> Outcome {
    let p = pres("n=3; {1,2,3},{1,2,3}");
    let s = gorenstein::is_gorenstein(&p, DegreeCap::Default).map_err(|e| e.to_string())?;
    check(s.h == vec![1, 3], format!("h = {:?}", s.h))?;
    check(!s.gorenstein, "reported Gorenstein")?;
    check(
        s.canonical_generators.len() >= 2,
        format!("{} canonical generators", s.canonical_generators.len()),
    )?;
    // brute force: H(d) = C(2d+2, 2)
    for (d, &h) in s.hilbert_function.iter().enumerate() {
        let want = ((2 * d + 1) * (2 * d + 2) / 2) as u64;
        check(h == want, format!("H({d}) = {h}, expected {want}"))?;
    }
    Ok(format!("{} canonical generators", s.canonical_generators.len()))
}

fn criterion_9() -> Outcome {
    let mut report = Vec::new();
    for n in [3usize, 4] {
        let c = classify::classify(&ClassifyOptions::new(n)).map_err(|e| e.to_string())?;
        let want: BTreeSet<String> = classify::reference_families(n)
            .into_iter()
            .map(|(name, _)| name.to_string())
            .collect();
        let found: BTreeSet<String> = c.families_found.iter().cloned().collect();
        check(found == want, format!("n={n}: missing {:?}", c.families_missing))?;
        let reps: BTreeSet<&str> = c.gorenstein_classes.iter().map(|g| g.representative.as_str()).collect();
        check(
            reps.len() == c.gorenstein_classes.len(),
            format!("n={n}: duplicate classes"),
        )?;
        if n == 4 {
            check(
                c.notes.iter().any(|s| s.contains("A11") && s.contains("A12")),
                "A11/A12 duplicate not noted",
            )?;
        }
        report.push(format!("n={n}: {} Gorenstein classes", c.gorenstein_classes.len()));
    }
    Ok(report.join(", "))
}

fn criterion_10() -> Outcome {
    let mut corpus: Vec<Presentation> = (3..=6)
        .map(|n| polymatroid::cyclic_presentation(n).unwrap())
        .collect();
    corpus.extend(common::random_presentations(200, 0x5eed));
    for p in &corpus {
        let base = polymatroid::enumerate_bases(p);
        check(
            polymatroid::check_base_exchange(&base.points),
            format!("{p}: exchange axiom fails"),
        )?;
        let gens = common::generators(&base);
        let cone = geometry::facet_enumeration(&gens).map_err(|e| format!("{p}: {e}"))?;
        common::facets_are_facets(&gens, &cone).map_err(|e| format!("{p}: {e}"))?;
        common::duality_round_trip(&gens, &cone, 3 * p.m() as i64).map_err(|e| format!("{p}: {e}"))?;
    }

    let mut normality_checked = 0;
    let families = classify::reference_families(3)
        .into_iter()
        .chain(classify::reference_families(4))
        .map(|(_, p)| p);
    for p in families {
        let base = polymatroid::enumerate_bases(&p);
        let g = GradedCone::new(&base).map_err(|e| e.to_string())?;
        let mult = gorenstein::multiplicative_counts(&base, 4);
        let cone: Vec<u64> = (0..=4).map(|d| g.hilbert_function(d)).collect();
        check(mult == cone, format!("{p}: {mult:?} vs {cone:?}"))?;
        normality_checked += 1;
    }
    Ok(format!(
        "{} presentations round-tripped, {normality_checked} normality checks",
        corpus.len()
    ))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome, Duration); 10] = [
        ("1 facets --cyclic 3", criterion_1, Duration::from_secs(1)),
        ("2 facets --cyclic 4", criterion_2, Duration::from_secs(1)),
        ("3 cyclic facets verified n=3..6", criterion_3, Duration::from_secs(60)),
        ("4 hyperplane matrices n=3..8", criterion_4, Duration::from_secs(5)),
        ("5 two-entry points n=3..7", criterion_5, Duration::from_secs(5)),
        ("6 cyclic Gorenstein n=3..5", criterion_6, Duration::from_secs(60)),
        ("7 Hilbert series table", criterion_7, Duration::from_secs(10)),
        ("8 Veronese negative control", criterion_8, Duration::from_secs(5)),
        ("9 classification inclusion", criterion_9, Duration::from_secs(600)),
        ("10 property suites", criterion_10, Duration::from_secs(300)),
    ];
    let mut failures = Vec::new();
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > limit => Err(format!("{msg}; took {elapsed:?}, limit {limit:?}")),
            other => other,
        };
        match &outcome {
            Ok(msg) => println!("PASS  {name:<34} {elapsed:>10.2?}  {msg}"),
            Err(msg) => {
                println!("FAIL  {name:<34} {elapsed:>10.2?}  {msg}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
