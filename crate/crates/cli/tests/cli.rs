use std::path::{Path, PathBuf};

use gkz_cli::{run, run_on_text, Command, CommandRequest, OutputFormat, EXIT_FAIL, EXIT_INPUT_ERROR};
use gkz_core::json::{config_to_json, parse_config};

fn configs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

const SHIPPED: [&str; 9] = [
    "quadratic",
    "cubic",
    "quartic",
    "square",
    "one_x_x2_y",
    "pentagon",
    "unit_triangle",
    "mother",
    "nested_triangles",
];

const LIBRARY: [&str; 6] = ["quadratic", "cubic", "quartic", "square", "one_x_x2_y", "pentagon"];

fn request(command: Command, config: &str, format: OutputFormat) -> CommandRequest {
    CommandRequest {
        input_path: Some(configs_dir().join(format!("{config}.json"))),
        format,
        ..CommandRequest::new(command)
    }
}

/// Compares against `configs/golden/<name>`; `UPDATE_GOLDEN=1` rewrites it.
fn check_golden(name: &str, actual: &str) {
    let path = configs_dir().join("golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden file {}: {e}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

#[test]
fn shipped_configurations_round_trip() {
    for name in SHIPPED {
        let text = std::fs::read_to_string(configs_dir().join(format!("{name}.json"))).unwrap();
        let c = parse_config(&text).unwrap();
        assert_eq!(parse_config(&config_to_json(&c)).unwrap(), c, "{name}");
    }
}

#[test]
fn golden_outputs() {
    let small = &SHIPPED[..8];
    for name in small {
        for (command, tag) in [
            (Command::Hull, "hull"),
            (Command::Triangulate, "triangulate"),
            (Command::Game, "game"),
            (Command::Chow, "chow"),
            (Command::Secondary, "secondary"),
        ] {
            let out = run(&request(command, name, OutputFormat::Text));
            assert_eq!(out.exit_code, 0, "{name} {tag}: {}", out.stderr);
            check_golden(&format!("{name}.{tag}.txt"), &out.stdout);
        }
        for (command, tag) in [(Command::Triangulate, "triangulate"), (Command::Game, "game")] {
            let out = run(&request(command, name, OutputFormat::Json));
            check_golden(&format!("{name}.{tag}.json"), &out.stdout);
        }
    }
    for name in LIBRARY {
        for (format, ext) in [(OutputFormat::Text, "txt"), (OutputFormat::Json, "json")] {
            let out = run(&request(Command::Verify, name, format));
            assert_eq!(out.exit_code, 0, "{name}");
            check_golden(&format!("{name}.verify.{ext}"), &out.stdout);
        }
    }
    let disc = run(&CommandRequest {
        degree: Some(3),
        ..CommandRequest::new(Command::Discriminant)
    });
    check_golden("discriminant3.json", &disc.stdout);
    let sylvester = run(&CommandRequest {
        degree: Some(2),
        matrix: true,
        format: OutputFormat::Text,
        ..CommandRequest::new(Command::Resultant)
    });
    check_golden("sylvester2.txt", &sylvester.stdout);
}

#[test]
fn output_is_deterministic() {
    for name in ["pentagon", "mother"] {
        for command in [Command::Triangulate, Command::Secondary, Command::Chow] {
            let req = request(command, name, OutputFormat::Json);
            assert_eq!(run(&req), run(&req));
        }
    }
}

#[test]
fn game_on_cubic() {
    let out = run(&request(Command::Game, "cubic", OutputFormat::Text));
    let mut lines: Vec<&str> = out.stdout.lines().collect();
    lines.sort();
    let mut expected = ["1·ab²c²d", "4·a²c³d", "4·ab³d²", "27·a³d³"];
    expected.sort();
    assert_eq!(lines, expected);
}

#[test]
fn discriminant_json() {
    let out = run(&CommandRequest {
        degree: Some(3),
        ..CommandRequest::new(Command::Discriminant)
    });
    let p = gkz_core::json::parse_poly(&out.stdout).unwrap();
    let expected: gkz_core::SparsePoly =
        "b^2*c^2 - 4*a*c^3 - 4*b^3*d + 18*a*b*c*d - 27*a^2*d^2".parse().unwrap();
    assert_eq!(p, expected);
}

#[test]
fn specialized_resultant() {
    let dir = std::env::temp_dir().join(format!("gkz-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let map = dir.join("log.json");
    std::fs::write(&map, r#"{"a1":"a","b1":"b","c1":"c","a2":"2*a","b2":"b","c2":"0"}"#).unwrap();
    let out = run(&CommandRequest {
        degree: Some(2),
        specialize: Some(map),
        format: OutputFormat::Text,
        ..CommandRequest::new(Command::Resultant)
    });
    let got: gkz_core::SparsePoly = out.stdout.trim().parse().unwrap();
    let expected: gkz_core::SparsePoly = "a*b^2*c - 4*a^2*c^2".parse().unwrap();
    assert!(got == expected || got == -expected, "{got}");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn ea_by_degree_and_by_configuration() {
    let by_degree = run(&CommandRequest {
        degree: Some(3),
        ..CommandRequest::new(Command::Ea)
    });
    let by_config = run(&request(Command::Ea, "cubic", OutputFormat::Json));
    assert_eq!(by_degree.exit_code, 0);
    assert_eq!(by_degree.stdout, by_config.stdout);
}

#[test]
fn exit_codes() {
    let unsupported = run(&request(Command::Verify, "unit_triangle", OutputFormat::Json));
    assert_eq!(unsupported.exit_code, EXIT_INPUT_ERROR);
    assert!(unsupported.stderr.contains("no principal A-determinant"));

    let garbage = run_on_text(&CommandRequest::new(Command::Hull), "{\"dim\": 2,");
    assert_eq!(garbage.exit_code, EXIT_INPUT_ERROR);
    assert!(garbage.stdout.is_empty());

    let eleven = r#"{"dim": 1, "points": [[0],[1],[2],[3],[4],[5],[6],[7],[8],[9],[10]]}"#;
    let too_big = run_on_text(&CommandRequest::new(Command::Triangulate), eleven);
    assert_eq!(too_big.exit_code, EXIT_INPUT_ERROR);
    assert!(too_big.stderr.contains("cap"), "{}", too_big.stderr);

    let missing = run(&request(Command::Hull, "no_such_file", OutputFormat::Json));
    assert_eq!(missing.exit_code, EXIT_INPUT_ERROR);

    let no_degree = run(&CommandRequest::new(Command::Discriminant));
    assert_eq!(no_degree.exit_code, EXIT_INPUT_ERROR);

    let misplaced = run(&CommandRequest {
        include_noncoherent: true,
        ..request(Command::Game, "cubic", OutputFormat::Text)
    });
    assert_eq!(misplaced.exit_code, EXIT_INPUT_ERROR);
    assert_ne!(EXIT_FAIL, EXIT_INPUT_ERROR);
}

#[test]
fn binary_reads_stdin_and_reports_exit_status() {
    use std::io::Write;
    use std::process::{Command as Process, Stdio};
    let bin = env!("CARGO_BIN_EXE_gkz");
    let mut child = Process::new(bin)
        .args(["game", "--format", "text"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"dim": 1, "points": [[0],[1],[2]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1·ab²c\n4·a²c²\n");

    let status = Process::new(bin)
        .args(["verify", configs_dir().join("mother.json").to_str().unwrap()])
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(EXIT_INPUT_ERROR));
    let status = Process::new(bin).args(["bogus"]).stderr(Stdio::null()).status().unwrap();
    assert_eq!(status.code(), Some(2));
}
