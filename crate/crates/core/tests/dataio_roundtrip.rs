mod common;

use common::{random_archive, random_stack, random_traces};
use eafkit::dataio::{
    decode_hv_traces, decode_points, decode_runs, decode_surfaces, encode_hv_traces, encode_points,
    encode_runs, encode_surfaces, read_hv_traces, read_runs, read_surfaces, write_hv_traces,
    write_runs, write_surfaces,
};
use eafkit::{DataFormat, ObjectiveSet};
use rand::Rng;

const FORMATS: [DataFormat; 2] = [DataFormat::Json, DataFormat::Csv];

#[test]
fn runs_round_trip() {
    let mut rng = common::rng(1);
    for _ in 0..100 {
        let archive = random_archive(&mut rng);
        for format in FORMATS {
            let text = encode_runs(&archive, format).unwrap();
            assert_eq!(decode_runs(&text, format).unwrap(), archive, "{text}");
        }
    }
}

#[test]
fn surfaces_round_trip() {
    let mut rng = common::rng(2);
    for _ in 0..100 {
        let stack = random_stack(&mut rng);
        for format in FORMATS {
            let text = encode_surfaces(&stack, format).unwrap();
            assert_eq!(decode_surfaces(&text, format).unwrap(), stack, "{text}");
        }
    }
}

#[test]
fn traces_round_trip() {
    let mut rng = common::rng(3);
    for _ in 0..100 {
        let traces = random_traces(&mut rng);
        for format in FORMATS {
            let text = encode_hv_traces(&traces, format).unwrap();
            assert_eq!(decode_hv_traces(&text, format).unwrap(), traces, "{text}");
        }
    }
}

#[test]
fn points_round_trip() {
    let set = ObjectiveSet::from_pairs(&[[0.1, 7.25], [-3.0, 1e-300]]).unwrap();
    for format in FORMATS {
        let text = encode_points(&set, format).unwrap();
        assert_eq!(decode_points(&text, format).unwrap(), set);
    }
}

#[test]
fn files_round_trip_and_encoding_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = common::rng(4);
    let (archive, stack, traces) = (
        random_archive(&mut rng),
        random_stack(&mut rng),
        random_traces(&mut rng),
    );
    for format in FORMATS {
        let ext = if format == DataFormat::Json {
            "json"
        } else {
            "csv"
        };
        let p = dir.path().join(format!("runs.{ext}"));
        write_runs(&archive, &p, format).unwrap();
        assert_eq!(read_runs(&p, format).unwrap(), archive);
        let first = std::fs::read(&p).unwrap();
        write_runs(&read_runs(&p, format).unwrap(), &p, format).unwrap();
        assert_eq!(std::fs::read(&p).unwrap(), first);

        let p = dir.path().join(format!("surfaces.{ext}"));
        write_surfaces(&stack, &p, format).unwrap();
        assert_eq!(read_surfaces(&p, format).unwrap(), stack);

        let p = dir.path().join(format!("hv.{ext}"));
        write_hv_traces(&traces, &p, format).unwrap();
        assert_eq!(read_hv_traces(&p, format).unwrap(), traces);
    }
}

#[test]
fn missing_file_is_an_io_error() {
    let err = read_runs(
        std::path::Path::new("/nonexistent/runs.json"),
        DataFormat::Json,
    )
    .unwrap_err();
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn unknown_schema_version_is_rejected() {
    let text =
        r#"{"schema_version": 99, "shape": [1,1,2], "costs": [[[1.0, 2.0]]], "metadata": {}}"#;
    let err = decode_runs(text, DataFormat::Json).unwrap_err();
    assert_eq!(err.exit_code(), 3);
    assert!(err.to_string().contains("99"));
    let csv = "# schema_version=2\nrun,step,f1,f2\n0,1,1.0,2.0\n";
    assert_eq!(
        decode_runs(csv, DataFormat::Csv).unwrap_err().exit_code(),
        3
    );
}

#[test]
fn nan_and_ragged_inputs_are_rejected() {
    let nan = "# schema_version=1\nrun,step,f1,f2\n0,1,NaN,2.0\n";
    assert_eq!(
        decode_runs(nan, DataFormat::Csv).unwrap_err().exit_code(),
        3
    );
    let ragged = "# schema_version=1\nrun,step,f1,f2\n0,1,1,3\n0,2,3,1\n1,1,2,2\n";
    let err = decode_runs(ragged, DataFormat::Csv).unwrap_err();
    assert_eq!(err.exit_code(), 3);
    assert!(err.to_string().contains("run 1"), "{err}");
}

/// Truncated or corrupted files must fail cleanly with a data/format or
/// validation error, never panic.
#[test]
fn corrupted_inputs_fail_cleanly() {
    let mut rng = common::rng(5);
    for _ in 0..200 {
        let format = FORMATS[rng.gen_range(0..2)];
        let text = match rng.gen_range(0..3) {
            0 => encode_runs(&random_archive(&mut rng), format).unwrap(),
            1 => encode_surfaces(&random_stack(&mut rng), format).unwrap(),
            _ => encode_hv_traces(&random_traces(&mut rng), format).unwrap(),
        };
        let mut bytes = text.into_bytes();
        match rng.gen_range(0..3) {
            0 => bytes.truncate(rng.gen_range(0..bytes.len())),
            1 => {
                let i = rng.gen_range(0..bytes.len());
                bytes[i] = b"x,9-[\"\n#"[rng.gen_range(0..8)];
            }
            _ => {
                let i = rng.gen_range(0..bytes.len());
                bytes.remove(i);
            }
        }
        let corrupted = String::from_utf8_lossy(&bytes);
        let results = [
            decode_runs(&corrupted, format).err(),
            decode_surfaces(&corrupted, format).err(),
            decode_hv_traces(&corrupted, format).err(),
        ];
        for err in results.into_iter().flatten() {
            assert!(matches!(err.exit_code(), 1 | 3), "{err}");
        }
    }
}
