use std::process::Command as Process;

use vankampen::oracle::enumerate_legs;
use vankampen::samples::{intertwined_legs, pushout_bottom, uniform_span};
use vankampen::*;
use vankampen_cli::scenario::{cube_scenario, parse_scenario, Cube, ScenarioError, Span};
use vankampen_cli::{run, Command, Format, Options};

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn load(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_vankampen"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn intertwined_fixture_parses_with_one_span() {
    let scn = parse_scenario(&load("twisted")).unwrap();
    assert_eq!(scn.spans.len(), 1);
    assert!(matches!(scn.spans["span"], Span::Set(_)));
}

#[test]
fn undeclared_set_is_named_with_its_line() {
    let text = "{\n  \"sets\": { \"L\": [\"x\"] },\n  \"maps\": {\n    \"a\": { \"dom\": \"L\", \"cod\": \"Q\", \"map\": { \"x\": \"q\" } }\n  }\n}";
    let err = parse_scenario(text).unwrap_err();
    assert_eq!(
        err,
        ScenarioError::Invalid {
            line: Some(4),
            name: "a".into(),
            message: "unknown set `Q`".into()
        }
    );
    assert!(err.to_string().contains("line 4"));
}

#[test]
fn non_commuting_square_reports_a_witness() {
    let text = r#"{
  "sets": { "L": ["x", "y"], "A": ["p", "q"], "S": ["s", "t"] },
  "maps": {
    "a": { "dom": "L", "cod": "A", "map": { "x": "p", "y": "q" } },
    "f": { "dom": "A", "cod": "S", "map": { "p": "s", "q": "t" } },
    "g": { "dom": "A", "cod": "S", "map": { "p": "s", "q": "s" } }
  },
  "squares": { "sq": { "left": "a", "top": "a", "right": "f", "bottom": "g" } }
}"#;
    let err = parse_scenario(text).unwrap_err().to_string();
    assert!(err.contains("`sq`"), "{err}");
    assert!(err.contains("does not commute at `y`"), "{err}");
}

#[test]
fn duplicate_names_across_sections_are_rejected() {
    let text = r#"{ "sets": { "a": ["x"] }, "maps": { "a": { "dom": "a", "cod": "a", "map": { "x": "x" } } } }"#;
    let err = parse_scenario(text).unwrap_err();
    assert!(
        matches!(err, ScenarioError::Invalid { ref message, .. } if message == "duplicate name")
    );
}

#[test]
fn invalid_descent_data_is_rejected() {
    let text = r#"{
  "sets": { "I": ["i", "j"], "L": ["x", "y"], "B": ["b"] },
  "maps": {
    "gamma": { "dom": "I", "cod": "L", "map": { "i": "x", "j": "y" } },
    "p": { "dom": "L", "cod": "B", "map": { "x": "b", "y": "b" } }
  },
  "descent": {
    "xi": { "carrier": "gamma", "base": "p", "family": [
      { "from": "x", "to": "x", "map": { "i": "i" } },
      { "from": "y", "to": "y", "map": { "j": "j" } },
      { "from": "x", "to": "y", "map": { "i": "j" } }
    ] }
  }
}"#;
    let err = parse_scenario(text).unwrap_err().to_string();
    assert!(
        err.contains("`xi`") && err.contains("invalid descent data"),
        "{err}"
    );
}

#[test]
fn check_vk_on_intertwined_pushout_prints_the_cycle() {
    let (code, out, _) = cli(&["check-vk", "--scenario", &fixture("twisted")]);
    assert_eq!(code, 1);
    assert!(out.contains("domain cycle (x, z, w, y)"), "{out}");
    assert!(out.contains("result: {"), "{out}");
}

#[test]
fn amalgamate_uniform_span() {
    let (code, out, _) = cli(&["amalgamate", "--scenario", &fixture("uniform"), "--oracle"]);
    assert_eq!(code, 0);
    assert!(out.contains("|K| = 2"), "{out}");
    let (code, dot, _) = cli(&[
        "amalgamate",
        "--scenario",
        &fixture("uniform"),
        "--format",
        "dot",
    ]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("digraph") && dot.contains("style=dashed"));
}

#[test]
fn cycles_on_a_monic_leg() {
    let (code, out, _) = cli(&["cycles", "--scenario", &fixture("mono_leg"), "--oracle"]);
    assert_eq!(code, 0);
    assert!(out.contains("separated kernels"), "{out}");
}

#[test]
fn errors_exit_with_two() {
    let (code, _, err) = cli(&["check-vk", "--scenario", "/nonexistent.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot read"));
    let (code, _, err) = cli(&["check-reachable", "--scenario", &fixture("staircase")]);
    assert_eq!(code, 2);
    assert!(err.contains("no span"));
    let (code, _, _) = cli(&[
        "check-vk",
        "--scenario",
        &fixture("twisted"),
        "--budget-apex",
        "0",
        "--oracle",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn every_fixture_agrees_with_the_oracle() {
    let commands = [
        Command::CheckVk,
        Command::CheckReachable,
        Command::Amalgamate,
        Command::Cycles,
        Command::Counterexample,
        Command::Oracle,
    ];
    let opts = Options {
        oracle: true,
        ..Options::default()
    };
    for name in [
        "twisted",
        "uniform",
        "staircase",
        "mono_leg",
        "parallel_edges",
    ] {
        let scn = parse_scenario(&load(name)).unwrap();
        for cmd in commands {
            let needs_span = matches!(cmd, Command::CheckReachable | Command::Amalgamate);
            match run(cmd, &scn, &opts) {
                Ok(rep) => {
                    let json: serde_json::Value =
                        serde_json::from_str(&rep.render(Format::Json).unwrap()).unwrap();
                    assert_eq!(json["verdict"], rep.verdict);
                }
                Err(e) => assert!(
                    needs_span && scn.target.span.is_none(),
                    "{name} {}: {e}",
                    cmd.name()
                ),
            }
        }
    }
}

#[test]
fn exit_codes_are_deterministic() {
    for cmd in ["check-vk", "cycles", "counterexample", "oracle"] {
        let first = cli(&[cmd, "--scenario", &fixture("twisted"), "--format", "json"]);
        let second = cli(&[cmd, "--scenario", &fixture("twisted"), "--format", "json"]);
        assert_eq!(first, second);
    }
}

#[test]
fn counterexample_scenario_is_unreachable() {
    let scn = parse_scenario(&load("twisted")).unwrap();
    let rep = run(Command::Counterexample, &scn, &Options::default()).unwrap();
    assert!(rep.verdict);
    let text = serde_json::to_string(&rep.data["scenario"]).unwrap();
    let produced = parse_scenario(&text).unwrap();
    let check = run(
        Command::CheckReachable,
        &produced,
        &Options {
            oracle: true,
            ..Options::default()
        },
    )
    .unwrap();
    assert!(!check.verdict);

    let graph = parse_scenario(&load("parallel_edges")).unwrap();
    let rep = run(Command::Counterexample, &graph, &Options::default()).unwrap();
    let produced = parse_scenario(&serde_json::to_string(&rep.data["scenario"]).unwrap()).unwrap();
    assert!(
        !run(Command::CheckReachable, &produced, &Options::default())
            .unwrap()
            .verdict
    );
}

#[test]
fn set_cubes_round_trip() {
    let (a, r) = intertwined_legs();
    let mut cubes = vec![amalgamate(&uniform_span(), &pushout_bottom(&a, &r))
        .unwrap()
        .unwrap()];
    let omega = FinSet::new(["u", "v"]).unwrap();
    for (a, r) in enumerate_legs(3, 3, 3) {
        let span = product_span(&a, &r, &omega).unwrap();
        cubes.push(amalgamate(&span, &pushout_bottom(&a, &r)).unwrap().unwrap());
    }
    for cube in cubes {
        let cube = Cube::Set(cube);
        let text = cube_scenario(&cube).to_json();
        assert_eq!(parse_scenario(&text).unwrap().cubes["cube"], cube);
    }
}

#[test]
fn graph_cube_round_trips() {
    let v = FinSet::new(["v"]).unwrap();
    let g = FinGraph::from_edges(v, &[("e", "v", "v")]).unwrap();
    let id = GraphHom::identity(&g);
    let bottom = graph_pushout(&id, &id).unwrap().square(&id, &id).unwrap();
    let span =
        pull_back_graph_instance(&bottom, &GraphHom::identity(bottom.right().cod())).unwrap();
    let cube = Cube::Graph(amalgamate_graph(&span, &bottom).unwrap().unwrap());
    let text = cube_scenario(&cube).to_json();
    let scn = parse_scenario(&text).unwrap();
    assert_eq!(scn.cubes["cube"], cube);
    let rep = run(
        Command::Amalgamate,
        &scn,
        &Options {
            oracle: true,
            ..Options::default()
        },
    )
    .unwrap();
    assert!(rep.verdict);
}
