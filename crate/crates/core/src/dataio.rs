//! JSON and CSV interchange formats.
//!
//! Run archives:
//!
//! ```text
//! {"schema_version": 1, "shape": [S, N, M], "costs": [[[f1, f2], ...], ...], "metadata": {...}}
//!
//! # schema_version=1
//! # metadata={"optimizer":"random"}
//! run,step,f1,f2
//! 0,1,0.5,3.25
//! ```
//!
//! Surface stacks carry `levels`, `grid` and `surfaces` (K × |grid| × 2); CSV
//! uses the header `level,y1,y2` with the grid and the remaining fields in
//! `#` preamble lines. HV traces use `step,run_0,...,center,stderr`.
//!
//! Infinities are written as the strings `"inf"` / `"-inf"` in JSON and as
//! `inf` / `-inf` in CSV. Floats are printed with the shortest representation
//! that parses back to the same bits.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::attainment::{LevelSpec, SurfaceStack, TransformSpec};
use crate::error::{Error, Result};
use crate::hypervolume::{BandKind, HvTraceSet};
use crate::pareto::ObjectiveSet;
use crate::tensor::RunTensor;

pub const SCHEMA_VERSION: i64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DataFormat {
    Json,
    Csv,
}

impl DataFormat {
    /// Guesses the format from a `.json` / `.csv` extension.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "json" => Some(DataFormat::Json),
            "csv" => Some(DataFormat::Csv),
            _ => None,
        }
    }
}

impl FromStr for DataFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(DataFormat::Json),
            "csv" => Ok(DataFormat::Csv),
            other => Err(Error::validation(format!(
                "unknown format '{other}' (expected json or csv)"
            ))),
        }
    }
}

/// Objective tensor plus free-form metadata (optimizer name, seeds, ...).
#[derive(Debug, Clone, PartialEq)]
pub struct RunArchive {
    pub schema_version: i64,
    pub costs: RunTensor,
    pub metadata: BTreeMap<String, String>,
}

impl RunArchive {
    pub fn new(costs: RunTensor) -> Self {
        RunArchive {
            schema_version: SCHEMA_VERSION,
            costs,
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_metadata(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.metadata.insert(key.into(), value.into());
        self
    }
}

/// A float that serializes infinities as strings.
#[derive(Debug, Clone, Copy, PartialEq)]
struct JsonNum(f64);

impl Serialize for JsonNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0 == f64::INFINITY {
            serializer.serialize_str("inf")
        } else if self.0 == f64::NEG_INFINITY {
            serializer.serialize_str("-inf")
        } else if self.0.is_nan() {
            serializer.serialize_str("nan")
        } else {
            serializer.serialize_f64(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for JsonNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct NumVisitor;

        impl Visitor<'_> for NumVisitor {
            type Value = JsonNum;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number or one of \"inf\", \"-inf\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<JsonNum, E> {
                Ok(JsonNum(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonNum, E> {
                Ok(JsonNum(v as f64))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonNum, E> {
                Ok(JsonNum(v as f64))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonNum, E> {
                match v {
                    "inf" | "+inf" | "Infinity" => Ok(JsonNum(f64::INFINITY)),
                    "-inf" | "-Infinity" => Ok(JsonNum(f64::NEG_INFINITY)),
                    "nan" | "NaN" => Ok(JsonNum(f64::NAN)),
                    other => Err(E::invalid_value(de::Unexpected::Str(other), &self)),
                }
            }
        }

        deserializer.deserialize_any(NumVisitor)
    }
}

fn wrap(v: &[f64]) -> Vec<JsonNum> {
    v.iter().copied().map(JsonNum).collect()
}

fn unwrap(v: Vec<JsonNum>) -> Vec<f64> {
    v.into_iter().map(|n| n.0).collect()
}

/// Shortest round-trip text for a float (`inf`, `-inf` for the sentinels).
pub(crate) fn fmt_f64(v: f64) -> String {
    format!("{v:?}")
}

fn parse_f64(field: &str, what: &str) -> Result<f64> {
    field
        .trim()
        .parse::<f64>()
        .map_err(|_| Error::format(format!("cannot parse {what} '{field}' as a number")))
}

fn parse_usize(field: &str, what: &str) -> Result<usize> {
    field
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::format(format!("cannot parse {what} '{field}' as an integer")))
}

fn check_version(found: i64) -> Result<()> {
    if found != SCHEMA_VERSION {
        return Err(Error::Version {
            found,
            supported: SCHEMA_VERSION,
        });
    }
    Ok(())
}

fn read_file(path: &Path) -> Result<String> {
    let mut text = String::new();
    fs::File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|e| Error::io(path, e))?;
    Ok(text)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::File::create(path)
        .and_then(|mut f| f.write_all(bytes))
        .map_err(|e| Error::io(path, e))
}

/// Parses JSON text, pulling out `schema_version` before the strict decode
/// so that version mismatches are reported as such.
fn parse_versioned_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::format(format!("invalid JSON: {e}")))?;
    let version = value
        .get("schema_version")
        .and_then(serde_json::Value::as_i64)
        .ok_or_else(|| Error::format("missing integer field 'schema_version'"))?;
    check_version(version)?;
    serde_json::from_value(value).map_err(|e| Error::format(format!("invalid JSON layout: {e}")))
}

/// Splits `#` preamble lines (as `key=value`) from the CSV body.
fn split_preamble(text: &str) -> Result<(BTreeMap<String, String>, &str)> {
    let mut fields = BTreeMap::new();
    let mut rest = text;
    while let Some(line) = rest.strip_prefix('#') {
        let (line, tail) = match line.find('\n') {
            Some(i) => (&line[..i], &line[i + 1..]),
            None => (line, ""),
        };
        let line = line.trim();
        if !line.is_empty() {
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::format(format!(
                    "preamble line '#{line}' is not of the form key=value"
                ))
            })?;
            fields.insert(k.trim().to_string(), v.trim().to_string());
        }
        rest = tail;
    }
    if let Some(v) = fields.get("schema_version") {
        let found = v
            .parse::<i64>()
            .map_err(|_| Error::format(format!("bad schema_version '{v}'")))?;
        check_version(found)?;
    }
    Ok((fields, rest))
}

fn csv_reader(body: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(body.as_bytes())
}

fn csv_error(e: csv::Error) -> Error {
    Error::format(format!("invalid CSV: {e}"))
}

fn join_usize(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn split_usize(s: &str, what: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|f| parse_usize(f, what)).collect()
}

fn require<'a>(fields: &'a BTreeMap<String, String>, key: &str) -> Result<&'a str> {
    fields
        .get(key)
        .map(String::as_str)
        .ok_or_else(|| Error::format(format!("missing '# {key}=' preamble line")))
}

// ---------------------------------------------------------------- runs

#[derive(Serialize, Deserialize)]
struct RunsJson {
    schema_version: i64,
    shape: [usize; 3],
    costs: Vec<Vec<Vec<JsonNum>>>,
    #[serde(default)]
    metadata: BTreeMap<String, String>,
}

pub fn encode_runs(archive: &RunArchive, format: DataFormat) -> Result<String> {
    let costs = &archive.costs;
    let (s, n, m) = costs.shape();
    match format {
        DataFormat::Json => {
            let doc = RunsJson {
                schema_version: archive.schema_version,
                shape: [s, n, m],
                costs: (0..s).map(|i| costs.run(i).map(wrap).collect()).collect(),
                metadata: archive.metadata.clone(),
            };
            Ok(serde_json::to_string(&doc).expect("plain data serializes") + "\n")
        }
        DataFormat::Csv => {
            let mut out = format!("# schema_version={}\n", archive.schema_version);
            if !archive.metadata.is_empty() {
                let meta = serde_json::to_string(&archive.metadata).expect("string map");
                out.push_str(&format!("# metadata={meta}\n"));
            }
            out.push_str("run,step");
            for j in 1..=m {
                out.push_str(&format!(",f{j}"));
            }
            out.push('\n');
            for i in 0..s {
                for (step, row) in costs.run(i).enumerate() {
                    out.push_str(&format!("{i},{}", step + 1));
                    for v in row {
                        out.push(',');
                        out.push_str(&fmt_f64(*v));
                    }
                    out.push('\n');
                }
            }
            Ok(out)
        }
    }
}

pub fn decode_runs(text: &str, format: DataFormat) -> Result<RunArchive> {
    match format {
        DataFormat::Json => {
            let doc: RunsJson = parse_versioned_json(text)?;
            let [s, n, m] = doc.shape;
            if doc.costs.len() != s {
                return Err(Error::format(format!(
                    "shape declares {s} runs but costs has {}",
                    doc.costs.len()
                )));
            }
            let mut values = Vec::with_capacity(s * n * m);
            for (si, run) in doc.costs.into_iter().enumerate() {
                if run.len() != n {
                    return Err(Error::format(format!(
                        "run {si} has {} rows, shape declares {n}",
                        run.len()
                    )));
                }
                for (ni, row) in run.into_iter().enumerate() {
                    if row.len() != m {
                        return Err(Error::format(format!(
                            "run {si}, row {ni} has {} objectives, shape declares {m}",
                            row.len()
                        )));
                    }
                    values.extend(row.into_iter().map(|v| v.0));
                }
            }
            Ok(RunArchive {
                schema_version: doc.schema_version,
                costs: RunTensor::new(s, n, m, values)?,
                metadata: doc.metadata,
            })
        }
        DataFormat::Csv => {
            let (pre, body) = split_preamble(text)?;
            let metadata = match pre.get("metadata") {
                Some(m) => serde_json::from_str(m)
                    .map_err(|e| Error::format(format!("bad metadata preamble: {e}")))?,
                None => BTreeMap::new(),
            };
            let mut rdr = csv_reader(body);
            let headers = rdr.headers().map_err(csv_error)?.clone();
            let cols: Vec<&str> = headers.iter().collect();
            let m = cols.len().saturating_sub(2);
            let expected: Vec<String> = ["run".to_string(), "step".to_string()]
                .into_iter()
                .chain((1..=m).map(|j| format!("f{j}")))
                .collect();
            if m == 0 || cols != expected {
                return Err(Error::format(format!(
                    "expected header 'run,step,f1,...', found '{}'",
                    cols.join(",")
                )));
            }

            let mut runs: Vec<Vec<f64>> = Vec::new();
            let mut steps: Vec<usize> = Vec::new();
            for (line, rec) in rdr.records().enumerate() {
                let rec = rec.map_err(csv_error)?;
                let run = parse_usize(&rec[0], "run")?;
                let step = parse_usize(&rec[1], "step")?;
                if run == runs.len() {
                    runs.push(Vec::new());
                    steps.push(0);
                } else if run + 1 != runs.len() {
                    return Err(Error::format(format!(
                        "data row {}: run {run} out of order (rows must be grouped by run, starting at 0)",
                        line + 1
                    )));
                }
                if step != steps[run] + 1 {
                    return Err(Error::format(format!(
                        "run {run}: expected step {}, found {step}",
                        steps[run] + 1
                    )));
                }
                steps[run] = step;
                for j in 0..m {
                    runs[run].push(parse_f64(&rec[j + 2], "objective value")?);
                }
            }
            let n = *steps
                .first()
                .ok_or_else(|| Error::format("CSV contains no data rows"))?;
            if let Some((bad, &count)) = steps.iter().enumerate().find(|(_, &c)| c != n) {
                return Err(Error::format(format!(
                    "run {bad} has {count} steps, run 0 has {n}"
                )));
            }
            let schema_version = pre.get("schema_version").map_or(Ok(SCHEMA_VERSION), |v| {
                v.parse().map_err(|_| Error::format("bad schema_version"))
            })?;
            let s = runs.len();
            Ok(RunArchive {
                schema_version,
                costs: RunTensor::new(s, n, m, runs.concat())?,
                metadata,
            })
        }
    }
}

pub fn write_runs(archive: &RunArchive, path: &Path, format: DataFormat) -> Result<()> {
    write_file(path, encode_runs(archive, format)?.as_bytes())
}

pub fn read_runs(path: &Path, format: DataFormat) -> Result<RunArchive> {
    decode_runs(&read_file(path)?, format)
}

// ---------------------------------------------------------------- surfaces

#[derive(Serialize, Deserialize)]
struct SurfacesJson {
    schema_version: i64,
    n_runs: usize,
    levels: Vec<usize>,
    #[serde(default)]
    maximize: Vec<usize>,
    #[serde(default)]
    log: Vec<usize>,
    grid: Vec<JsonNum>,
    surfaces: Vec<Vec<[JsonNum; 2]>>,
}

pub fn encode_surfaces(stack: &SurfaceStack, format: DataFormat) -> Result<String> {
    let t = stack.transform();
    match format {
        DataFormat::Json => {
            let doc = SurfacesJson {
                schema_version: SCHEMA_VERSION,
                n_runs: stack.n_runs(),
                levels: stack.levels().levels().to_vec(),
                maximize: t.maximize_indices(),
                log: t.log_indices(),
                grid: wrap(stack.grid()),
                surfaces: stack
                    .surfaces()
                    .iter()
                    .map(|s| s.iter().map(|p| [JsonNum(p[0]), JsonNum(p[1])]).collect())
                    .collect(),
            };
            Ok(serde_json::to_string(&doc).expect("plain data serializes") + "\n")
        }
        DataFormat::Csv => {
            let grid: Vec<String> = stack.grid().iter().map(|&x| fmt_f64(x)).collect();
            let mut out = format!(
                "# schema_version={SCHEMA_VERSION}\n# n_runs={}\n# levels={}\n# maximize={}\n# log={}\n# grid={}\nlevel,y1,y2\n",
                stack.n_runs(),
                join_usize(stack.levels().levels()),
                join_usize(&t.maximize_indices()),
                join_usize(&t.log_indices()),
                grid.join(","),
            );
            for (level, surf) in stack.levels().levels().iter().zip(stack.surfaces()) {
                for p in surf {
                    out.push_str(&format!("{level},{},{}\n", fmt_f64(p[0]), fmt_f64(p[1])));
                }
            }
            Ok(out)
        }
    }
}

pub fn decode_surfaces(text: &str, format: DataFormat) -> Result<SurfaceStack> {
    match format {
        DataFormat::Json => {
            let doc: SurfacesJson = parse_versioned_json(text)?;
            let surfaces = doc
                .surfaces
                .into_iter()
                .map(|s| s.into_iter().map(|p| [p[0].0, p[1].0]).collect())
                .collect();
            SurfaceStack::from_parts(
                unwrap(doc.grid),
                surfaces,
                LevelSpec::new(doc.levels)?,
                TransformSpec::new(doc.maximize, doc.log),
                doc.n_runs,
            )
        }
        DataFormat::Csv => {
            let (pre, body) = split_preamble(text)?;
            let n_runs = parse_usize(require(&pre, "n_runs")?, "n_runs")?;
            let levels = LevelSpec::new(split_usize(require(&pre, "levels")?, "level")?)?;
            let transform = TransformSpec::new(
                split_usize(
                    pre.get("maximize").map_or("", String::as_str),
                    "maximize index",
                )?,
                split_usize(pre.get("log").map_or("", String::as_str), "log index")?,
            );
            let grid = require(&pre, "grid")?
                .split(',')
                .map(|f| parse_f64(f, "grid value"))
                .collect::<Result<Vec<f64>>>()?;

            let mut rdr = csv_reader(body);
            let headers = rdr.headers().map_err(csv_error)?.clone();
            if headers.iter().collect::<Vec<_>>() != ["level", "y1", "y2"] {
                return Err(Error::format(format!(
                    "expected header 'level,y1,y2', found '{}'",
                    headers.iter().collect::<Vec<_>>().join(",")
                )));
            }
            let mut surfaces: Vec<Vec<[f64; 2]>> = vec![Vec::new(); levels.len()];
            let mut k = 0;
            for rec in rdr.records() {
                let rec = rec.map_err(csv_error)?;
                let level = parse_usize(&rec[0], "level")?;
                while k < levels.len() && levels.levels()[k] != level {
                    k += 1;
                }
                if k == levels.len() {
                    return Err(Error::format(format!(
                        "row for level {level} is unexpected (levels {:?}, rows grouped by level)",
                        levels.levels()
                    )));
                }
                surfaces[k].push([parse_f64(&rec[1], "y1")?, parse_f64(&rec[2], "y2")?]);
            }
            SurfaceStack::from_parts(grid, surfaces, levels, transform, n_runs)
        }
    }
}

pub fn write_surfaces(stack: &SurfaceStack, path: &Path, format: DataFormat) -> Result<()> {
    write_file(path, encode_surfaces(stack, format)?.as_bytes())
}

pub fn read_surfaces(path: &Path, format: DataFormat) -> Result<SurfaceStack> {
    decode_surfaces(&read_file(path)?, format)
}

// ---------------------------------------------------------------- HV traces

#[derive(Serialize, Deserialize)]
struct TracesJson {
    schema_version: i64,
    band: String,
    traces: Vec<Vec<JsonNum>>,
    center: Vec<JsonNum>,
    band_halfwidth: Vec<JsonNum>,
}

pub fn encode_hv_traces(traces: &HvTraceSet, format: DataFormat) -> Result<String> {
    match format {
        DataFormat::Json => {
            let doc = TracesJson {
                schema_version: SCHEMA_VERSION,
                band: traces.band().name().to_string(),
                traces: traces.traces().iter().map(|t| wrap(t)).collect(),
                center: wrap(traces.center()),
                band_halfwidth: wrap(traces.band_halfwidth()),
            };
            Ok(serde_json::to_string(&doc).expect("plain data serializes") + "\n")
        }
        DataFormat::Csv => {
            let mut out = format!("# schema_version={SCHEMA_VERSION}\nstep");
            for s in 0..traces.n_runs() {
                out.push_str(&format!(",run_{s}"));
            }
            out.push_str(&format!(",center,{}\n", traces.band().name()));
            for i in 0..traces.n_evals() {
                out.push_str(&(i + 1).to_string());
                for t in traces.traces() {
                    out.push(',');
                    out.push_str(&fmt_f64(t[i]));
                }
                out.push_str(&format!(
                    ",{},{}\n",
                    fmt_f64(traces.center()[i]),
                    fmt_f64(traces.band_halfwidth()[i])
                ));
            }
            Ok(out)
        }
    }
}

pub fn decode_hv_traces(text: &str, format: DataFormat) -> Result<HvTraceSet> {
    match format {
        DataFormat::Json => {
            let doc: TracesJson = parse_versioned_json(text)?;
            let band = BandKind::from_name(&doc.band)
                .ok_or_else(|| Error::format(format!("unknown band kind '{}'", doc.band)))?;
            HvTraceSet::from_parts(
                doc.traces.into_iter().map(unwrap).collect(),
                unwrap(doc.center),
                unwrap(doc.band_halfwidth),
                band,
            )
        }
        DataFormat::Csv => {
            let (_, body) = split_preamble(text)?;
            let mut rdr = csv_reader(body);
            let headers: Vec<String> = rdr
                .headers()
                .map_err(csv_error)?
                .iter()
                .map(str::to_string)
                .collect();
            let runs = headers.len().saturating_sub(3);
            let band = headers.last().and_then(|h| BandKind::from_name(h));
            let layout_ok = headers.len() >= 4
                && headers[0] == "step"
                && headers[headers.len() - 2] == "center"
                && band.is_some()
                && (0..runs).all(|s| headers[s + 1] == format!("run_{s}"));
            let band = match (layout_ok, band) {
                (true, Some(b)) => b,
                _ => {
                    return Err(Error::format(format!(
                        "expected header 'step,run_0,...,center,stderr', found '{}'",
                        headers.join(",")
                    )))
                }
            };
            let mut traces = vec![Vec::new(); runs];
            let mut center = Vec::new();
            let mut half = Vec::new();
            for (i, rec) in rdr.records().enumerate() {
                let rec = rec.map_err(csv_error)?;
                let step = parse_usize(&rec[0], "step")?;
                if step != i + 1 {
                    return Err(Error::format(format!(
                        "expected step {}, found {step}",
                        i + 1
                    )));
                }
                for (s, t) in traces.iter_mut().enumerate() {
                    t.push(parse_f64(&rec[s + 1], "trace value")?);
                }
                center.push(parse_f64(&rec[runs + 1], "center")?);
                half.push(parse_f64(&rec[runs + 2], "band half-width")?);
            }
            HvTraceSet::from_parts(traces, center, half, band)
        }
    }
}

pub fn write_hv_traces(traces: &HvTraceSet, path: &Path, format: DataFormat) -> Result<()> {
    write_file(path, encode_hv_traces(traces, format)?.as_bytes())
}

pub fn read_hv_traces(path: &Path, format: DataFormat) -> Result<HvTraceSet> {
    decode_hv_traces(&read_file(path)?, format)
}

// ---------------------------------------------------------------- point sets

/// Encodes a point set (e.g. a known true front): a JSON array of rows, or
/// CSV with header `f1,f2,...`.
pub fn encode_points(points: &ObjectiveSet, format: DataFormat) -> Result<String> {
    match format {
        DataFormat::Json => {
            let rows: Vec<Vec<JsonNum>> = points.iter().map(|p| wrap(p.values())).collect();
            Ok(serde_json::to_string(&rows).expect("plain data serializes") + "\n")
        }
        DataFormat::Csv => {
            let header: Vec<String> = (1..=points.dim().max(1)).map(|j| format!("f{j}")).collect();
            let mut out = header.join(",") + "\n";
            for p in points {
                let row: Vec<String> = p.values().iter().map(|&v| fmt_f64(v)).collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

pub fn decode_points(text: &str, format: DataFormat) -> Result<ObjectiveSet> {
    let rows: Vec<Vec<f64>> = match format {
        DataFormat::Json => {
            let rows: Vec<Vec<JsonNum>> = serde_json::from_str(text)
                .map_err(|e| Error::format(format!("expected a JSON array of points: {e}")))?;
            rows.into_iter().map(unwrap).collect()
        }
        DataFormat::Csv => {
            let (_, body) = split_preamble(text)?;
            let mut rdr = csv_reader(body);
            let m = rdr.headers().map_err(csv_error)?.len();
            let mut rows = Vec::new();
            for rec in rdr.records() {
                let rec = rec.map_err(csv_error)?;
                rows.push(
                    (0..m)
                        .map(|j| parse_f64(&rec[j], "objective value"))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
            rows
        }
    };
    ObjectiveSet::from_rows(&rows)
}

pub fn read_points(path: &Path, format: DataFormat) -> Result<ObjectiveSet> {
    decode_points(&read_file(path)?, format)
}

pub fn write_points(points: &ObjectiveSet, path: &Path, format: DataFormat) -> Result<()> {
    write_file(path, encode_points(points, format)?.as_bytes())
}
