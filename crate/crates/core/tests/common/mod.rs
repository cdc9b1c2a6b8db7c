//! Test-only oracles, generators and SVG parsing. The oracles work on plain
//! vectors and never call the code they are used to check.
#![allow(dead_code)]

use eafkit::{
    empirical_attainment_surfaces, BandKind, HvTraceSet, LevelSpec, RunArchive, RunTensor,
    SurfaceStack, TransformSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regex::Regex;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random integer-lattice runs: `runs[s][n] = [a, b]` with `a, b ∈ [0, max]`.
pub fn lattice_runs(
    rng: &mut ChaCha8Rng,
    runs: usize,
    evals: usize,
    max: i64,
) -> Vec<Vec<[f64; 2]>> {
    (0..runs)
        .map(|_| {
            (0..evals)
                .map(|_| [rng.gen_range(0..=max) as f64, rng.gen_range(0..=max) as f64])
                .collect()
        })
        .collect()
}

/// Random real-valued runs with a trade-off shape plus noise.
pub fn real_runs(rng: &mut ChaCha8Rng, runs: usize, evals: usize) -> Vec<Vec<[f64; 2]>> {
    (0..runs)
        .map(|_| {
            (0..evals)
                .map(|_| {
                    let t: f64 = rng.gen();
                    let noise: f64 = rng.gen::<f64>() * 2.0;
                    [t * 10.0 + rng.gen::<f64>(), (1.0 - t) * 10.0 + noise]
                })
                .collect()
        })
        .collect()
}

/// Number of runs with at least one observation weakly dominating `y`.
///
/// Uses raw observations rather than fronts: a run's front attains `y`
/// exactly when one of its observations does.
pub fn brute_count(runs: &[Vec<[f64; 2]>], y: [f64; 2]) -> usize {
    runs.iter()
        .filter(|run| run.iter().any(|p| p[0] <= y[0] && p[1] <= y[1]))
        .count()
}

/// O(N²) nondominated subset of one run, duplicates removed, sorted.
pub fn brute_front(run: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut out: Vec<[f64; 2]> = Vec::new();
    for p in run {
        let dominated = run
            .iter()
            .any(|q| q[0] <= p[0] && q[1] <= p[1] && (q[0] < p[0] || q[1] < p[1]));
        if !dominated && !out.contains(p) {
            out.push(*p);
        }
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}

/// Attainment step value computed straight from the definition on raw points.
pub fn brute_step(run: &[[f64; 2]], x: f64) -> f64 {
    run.iter()
        .filter(|p| p[0] <= x)
        .map(|p| p[1])
        .fold(f64::INFINITY, f64::min)
}

/// Unit-cell count of the region dominated by `front` inside the box
/// `[0, r]` on an integer lattice.
pub fn lattice_area(front: &[[f64; 2]], r: [i64; 2]) -> f64 {
    let mut cells = 0;
    for i in 0..r[0] {
        for j in 0..r[1] {
            let (x, y) = (i as f64, j as f64);
            if front.iter().any(|p| p[0] <= x && p[1] <= y) {
                cells += 1;
            }
        }
    }
    cells as f64
}

/// Monte-Carlo estimate of the dominated area in `[lo, r]` with its standard error.
pub fn monte_carlo_area(
    front: &[[f64; 2]],
    lo: [f64; 2],
    r: [f64; 2],
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> (f64, f64) {
    let box_area = (r[0] - lo[0]) * (r[1] - lo[1]);
    let mut hits = 0usize;
    for _ in 0..samples {
        let x = lo[0] + rng.gen::<f64>() * (r[0] - lo[0]);
        let y = lo[1] + rng.gen::<f64>() * (r[1] - lo[1]);
        if front.iter().any(|p| p[0] <= x && p[1] <= y) {
            hits += 1;
        }
    }
    let p = hits as f64 / samples as f64;
    let se = (p * (1.0 - p) / samples as f64).sqrt() * box_area;
    (p * box_area, se)
}

#[derive(Debug, Clone)]
pub struct SvgPath {
    pub class: String,
    pub points: Vec<[f64; 2]>,
    pub closed: bool,
}

/// Every `<path class=... d=...>` element, in document order.
pub fn svg_paths(svg: &str) -> Vec<SvgPath> {
    let path_re = Regex::new(r#"<path class="([\w-]+)" d="([^"]*)""#).unwrap();
    let cmd_re = Regex::new(r"([ML]) (-?[0-9.e+-]+) (-?[0-9.e+-]+)").unwrap();
    path_re
        .captures_iter(svg)
        .map(|c| {
            let d = &c[2];
            SvgPath {
                class: c[1].to_string(),
                points: cmd_re
                    .captures_iter(d)
                    .map(|m| [m[2].parse().unwrap(), m[3].parse().unwrap()])
                    .collect(),
                closed: d.trim_end().ends_with('Z'),
            }
        })
        .collect()
}

pub fn paths_of<'a>(paths: &'a [SvgPath], class: &str) -> Vec<&'a SvgPath> {
    paths.iter().filter(|p| p.class == class).collect()
}

pub fn legend_entries(svg: &str) -> usize {
    svg.matches(r#"<g class="legend-entry">"#).count()
}

/// All numeric coordinates that appear in x/y-like attributes or path data.
pub fn all_coordinates(svg: &str) -> Vec<(char, f64)> {
    let attr = Regex::new(r#"\b(x|y|x1|y1|x2|y2|cx|cy)="(-?[0-9.e+-]+)""#).unwrap();
    let mut out: Vec<(char, f64)> = attr
        .captures_iter(svg)
        .map(|c| (c[1].chars().next().unwrap(), c[2].parse().unwrap()))
        .collect();
    for p in svg_paths(svg) {
        for pt in p.points {
            out.push(('x', pt[0]));
            out.push(('y', pt[1]));
        }
    }
    out
}

pub fn viewport(svg: &str) -> (f64, f64) {
    let re = Regex::new(r#"viewBox="0 0 ([0-9.]+) ([0-9.]+)""#).unwrap();
    let c = re.captures(svg).expect("viewBox");
    (c[1].parse().unwrap(), c[2].parse().unwrap())
}

pub fn close(a: f64, b: f64, rel: f64, scale: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(scale)
}

/// Checks computed surfaces against the attainment definition on lattice data.
///
/// `surfaces[k][g]` is the level-`levels[k]` row at `grid[g]`. A finite row
/// value `y` must be attained by at least `L` runs at `(x, y)` and by fewer
/// than `L` runs one lattice step below; an infinite value means fewer than
/// `L` runs attain anything at `x`. Returns a description of the first
/// mismatch, if any.
pub fn lattice_oracle_mismatch(
    runs: &[Vec<[f64; 2]>],
    levels: &[usize],
    grid: &[f64],
    surfaces: &[Vec<[f64; 2]>],
) -> Option<String> {
    let mut expected_grid: Vec<f64> = runs
        .iter()
        .flat_map(|r| brute_front(r))
        .map(|p| p[0])
        .collect();
    expected_grid.push(f64::NEG_INFINITY);
    expected_grid.push(f64::INFINITY);
    expected_grid.sort_by(|a, b| a.partial_cmp(b).unwrap());
    expected_grid.dedup();
    if grid != expected_grid.as_slice() {
        return Some(format!("grid {grid:?} != {expected_grid:?}"));
    }
    for (k, &level) in levels.iter().enumerate() {
        for (g, &x) in grid.iter().enumerate() {
            let y = surfaces[k][g][1];
            let ok = if y.is_finite() {
                brute_count(runs, [x, y]) >= level && brute_count(runs, [x, y - 1.0]) < level
            } else {
                y == f64::INFINITY && brute_count(runs, [x, f64::INFINITY]) < level
            };
            if !ok {
                return Some(format!("level {level}, x={x}: surface value {y}"));
            }
        }
    }
    None
}

/// Staircase and nesting checks on plain data (minimize-all orientation).
pub fn staircase_and_nesting_violation(surfaces: &[Vec<[f64; 2]>]) -> Option<String> {
    for (k, s) in surfaces.iter().enumerate() {
        if s.windows(2).any(|w| w[1][0] < w[0][0] || w[1][1] > w[0][1]) {
            return Some(format!("surface {k} is not a staircase"));
        }
    }
    for k in 1..surfaces.len() {
        if surfaces[k - 1].len() != surfaces[k].len() {
            return Some(format!("surfaces {} and {k} differ in length", k - 1));
        }
        if surfaces[k - 1]
            .iter()
            .zip(&surfaces[k])
            .any(|(a, b)| a[1] > b[1])
        {
            return Some(format!("surface {} is not below surface {k}", k - 1));
        }
    }
    None
}

/// Median of per-run step values (odd run count) at every grid point.
pub fn brute_median_surface(runs: &[Vec<[f64; 2]>], grid: &[f64]) -> Vec<f64> {
    grid.iter()
        .map(|&x| {
            let mut col: Vec<f64> = runs.iter().map(|r| brute_step(r, x)).collect();
            col.sort_by(|a, b| a.partial_cmp(b).unwrap());
            col[col.len() / 2]
        })
        .collect()
}

/// A finite value drawn from a wide range of magnitudes and both signs.
pub fn awkward_value(rng: &mut ChaCha8Rng) -> f64 {
    let base: f64 = rng.gen_range(-1.0..1.0);
    match rng.gen_range(0..6) {
        0 => 0.0,
        1 => base * 1e-300,
        2 => base * 1e300,
        3 => (base * 100.0).round(),
        4 => base / 3.0,
        _ => base * 10f64.powi(rng.gen_range(-12..12)),
    }
}

pub fn random_archive(rng: &mut ChaCha8Rng) -> RunArchive {
    let (s, n) = (rng.gen_range(1..5), rng.gen_range(1..7));
    let values = (0..s * n * 2).map(|_| awkward_value(rng)).collect();
    let mut archive = RunArchive::new(RunTensor::new(s, n, 2, values).unwrap());
    if rng.gen_bool(0.5) {
        archive = archive
            .with_metadata("optimizer", "random, \"quoted\"\nline")
            .with_metadata("seed", rng.gen::<u32>().to_string());
    }
    archive
}

pub fn random_stack(rng: &mut ChaCha8Rng) -> SurfaceStack {
    let s = rng.gen_range(1..6);
    let runs: Vec<Vec<[f64; 2]>> = (0..s)
        .map(|_| {
            (0..rng.gen_range(1..6))
                .map(|_| [awkward_value(rng), awkward_value(rng)])
                .collect()
        })
        .collect();
    let n = runs.iter().map(Vec::len).max().unwrap();
    let runs: Vec<Vec<[f64; 2]>> = runs
        .into_iter()
        .map(|r| r.iter().cycle().take(n).copied().collect())
        .collect();
    let levels: Vec<usize> = (1..=s).filter(|_| rng.gen_bool(0.6)).collect();
    let levels = if levels.is_empty() { vec![s] } else { levels };
    let mut transform = TransformSpec::identity();
    for m in 0..2 {
        if rng.gen_bool(0.3) {
            transform = transform.with_maximize(m);
        }
    }
    empirical_attainment_surfaces(
        &RunTensor::from_pairs(&runs).unwrap(),
        &LevelSpec::new(levels).unwrap(),
        &transform,
    )
    .unwrap()
}

pub fn random_traces(rng: &mut ChaCha8Rng) -> HvTraceSet {
    let (s, n) = (rng.gen_range(1..6), rng.gen_range(1..8));
    let traces = (0..s)
        .map(|_| {
            let mut total = 0.0;
            (0..n)
                .map(|_| {
                    if rng.gen_bool(0.6) {
                        total += rng.gen::<f64>() * 10f64.powi(rng.gen_range(-5..3));
                    }
                    total
                })
                .collect()
        })
        .collect();
    let band = if rng.gen_bool(0.5) {
        BandKind::StandardError
    } else {
        BandKind::StandardDeviation
    };
    HvTraceSet::from_traces(traces, band).unwrap()
}

/// Runs the `eafkit` binary and returns its exit code and standard error.
pub fn eafkit(args: &[&str], threads: Option<usize>) -> (i32, String) {
    let mut cmd = std::process::Command::new(env!("CARGO_BIN_EXE_eafkit"));
    cmd.args(args);
    match threads {
        Some(n) => cmd.env("EAFKIT_THREADS", n.to_string()),
        None => cmd.env_remove("EAFKIT_THREADS"),
    };
    let out = cmd.output().expect("eafkit binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

/// Runs a command that must succeed.
pub fn eafkit_ok(args: &[&str]) {
    let (code, stderr) = eafkit(args, None);
    assert_eq!(code, 0, "eafkit {args:?} failed: {stderr}");
}

pub fn path_str(p: &std::path::Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

/// Runs every subcommand twice on fixed inputs (once single-threaded, once
/// with four threads) in fresh directories under `root` and compares every
/// output file byte for byte. Returns the commands whose outputs differed.
pub fn nondeterministic_commands(root: &std::path::Path) -> Vec<String> {
    let mut outputs: Vec<Vec<(String, Vec<u8>)>> = Vec::new();
    for (attempt, threads) in [(0, 1), (1, 4)] {
        let d = root.join(format!("attempt{attempt}"));
        std::fs::create_dir_all(&d).unwrap();
        let p = |name: &str| d.join(name).to_str().unwrap().to_string();
        let commands: Vec<(String, Vec<String>, Vec<String>)> = vec![
            (
                "synth".into(),
                vec![
                    "synth",
                    "--seed",
                    "3",
                    "--n-runs",
                    "9",
                    "--n-samples",
                    "12",
                    "--dim",
                    "2",
                    "--out",
                    &p("runs.json"),
                ]
                .into_iter()
                .map(String::from)
                .collect(),
                vec![p("runs.json")],
            ),
            (
                "synth csv".into(),
                vec![
                    "synth",
                    "--seed",
                    "4",
                    "--n-runs",
                    "9",
                    "--n-samples",
                    "12",
                    "--out",
                    &p("runs.csv"),
                ]
                .into_iter()
                .map(String::from)
                .collect(),
                vec![p("runs.csv")],
            ),
            (
                "eaf compute".into(),
                vec![
                    "eaf",
                    "compute",
                    "--runs",
                    &p("runs.json"),
                    "--levels",
                    "3,5,7",
                    "--out",
                    &p("surfs.json"),
                ]
                .into_iter()
                .map(String::from)
                .collect(),
                vec![p("surfs.json")],
            ),
            (
                "eaf compute csv".into(),
                vec![
                    "eaf",
                    "compute",
                    "--runs",
                    &p("runs.csv"),
                    "--levels",
                    "1,9",
                    "--maximize",
                    "1",
                    "--out",
                    &p("surfs.csv"),
                ]
                .into_iter()
                .map(String::from)
                .collect(),
                vec![p("surfs.csv")],
            ),
            (
                "eaf plot".into(),
                vec![
                    "eaf",
                    "plot",
                    "--surfs",
                    &p("surfs.json"),
                    "--colors",
                    "red,green,blue",
                    "--labels",
                    "25%,50%,75%",
                    "--out",
                    &p("multi.svg"),
                ]
                .into_iter()
                .map(String::from)
                .collect(),
                vec![p("multi.svg")],
            ),
            (
                "eaf plot --band".into(),
                vec![
                    "eaf",
                    "plot",
                    "--surfs",
                    &p("surfs.json"),
                    "--band",
                    "--colors",
                    "red",
                    "--labels",
                    "random search",
                    "--log-y",
                    "--out",
                    &p("band.svg"),
                ]
                .into_iter()
                .map(String::from)
                .collect(),
                vec![p("band.svg")],
            ),
            (
                "hv".into(),
                vec![
                    "hv",
                    "--runs",
                    &format!("{},{}", p("runs.json"), p("runs.csv")),
                    "--ref",
                    "75,1029",
                    "--out",
                    &format!("{},{}", p("hv_a.json"), p("hv_b.csv")),
                    "--plot",
                    &p("hv.svg"),
                    "--colors",
                    "red,blue",
                    "--labels",
                    "a,b",
                ]
                .into_iter()
                .map(String::from)
                .collect(),
                vec![p("hv_a.json"), p("hv_b.csv"), p("hv.svg")],
            ),
        ];
        let mut files = Vec::new();
        for (name, args, outs) in commands {
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            let (code, stderr) = eafkit(&args, Some(threads));
            assert_eq!(code, 0, "{name} failed: {stderr}");
            for o in outs {
                files.push((name.clone(), std::fs::read(&o).unwrap()));
            }
        }
        outputs.push(files);
    }
    let mut bad: Vec<String> = outputs[0]
        .iter()
        .zip(&outputs[1])
        .filter(|(a, b)| a.1 != b.1)
        .map(|(a, _)| a.0.clone())
        .collect();
    bad.dedup();
    bad
}
