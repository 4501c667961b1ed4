use serde_json::Value;
use specht_cli::run;
use specht_core::{Decomposition, SchurSum};

fn specht(args: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("specht").chain(args.split_whitespace());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap().trim_end().to_string(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &str) -> String {
    let (code, out, err) = specht(args);
    assert_eq!(code, 0, "{args}: {err}");
    out
}

#[test]
fn documented_examples() {
    assert_eq!(
        ok("decompose a31b --a 14 --b 9"),
        "Sp(14,3,1^8) = Y(18,5,2) + Y(14,11) + Y(14,9,2)"
    );
    assert_eq!(ok("core --lambda 2,2 --l 2"), "()");
    assert_eq!(ok("special --r 3 --b 1 --p 2"), "true");
    assert_eq!(ok("special --r 2 --b 1 --p 2"), "false");
    assert_eq!(
        ok("decompose staircase --m 2 --a 6 --b 3"),
        "Sp(6,1^3) = Y(8,1) + Y(6,3)"
    );
    assert_eq!(ok("decompose hook --a 3 --b 2"), "Sp(3,1^2) = Y(3,2)");
    assert_eq!(
        ok("decompose dual-a31b --a 14 --b 9"),
        "Sp(10,2^2,1^11) = Y(18,5,2) + Y(14,11) + Y(14,9,2)"
    );
    assert_eq!(ok("decompose two-power-hook --k 1"), "Sp(4,1) = Y(4,1)");
    assert_eq!(ok("decompose example63 --k 1"), "Sp(4,1) = Y(4,1)");
    assert_eq!(
        ok("blockcomp --m 2 --a 4 --b 1"),
        "M(4,1) [core (2,1)] = Y(4,1)"
    );
    assert_eq!(
        ok("schur prod --rows 4 --cols 3"),
        "1*s(5,1^2) + 1*s(4,1^3)"
    );
    assert_eq!(
        ok("schur corefilter --rows 4 --cols 3 --core 2,1 --l 2"),
        "1*s(4,1^3)"
    );
    assert_eq!(
        ok("schur adaptfilter --rows 4 --cols 3 --m 2"),
        "1*s(5,1^2) + 1*s(4,1^3)"
    );
    assert_eq!(ok("char gl2 --lambda 3,2 --a 2 --b 3"), "1");
    assert_eq!(ok("char staircase --m 2 --a 4 --b 3 --lambda 1,1"), "1");
    assert_eq!(ok("char ab2 --a 14 --b 9 --lambda 6,5"), "1");
    assert!(ok("char gl3-oracle --lambda 2,1 --p 2").starts_with("dim 8"));
    assert!(ok("char sl2 --r 2").starts_with("dim 2"));
}

#[test]
fn verification_verdicts() {
    assert_eq!(
        ok("verify cor5-7 --m 2 --a 4 --b 3"),
        "m=2 a=4 b=3: match (specht) 1*s(4,1^3)"
    );
    assert_eq!(
        ok("verify core-identity --m 2 --a 4 --b 4"),
        "m=2 a=4 b=4: match (zero) 0"
    );
    assert_eq!(ok("verify prop7-2-2 --a 14 --b 9"), "a=14 b=9: consistent");
    assert_eq!(
        ok("verify a31b-consistency --a 6 --b 3"),
        "a=6 b=3: consistent"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(specht("").0, 1);
    assert_eq!(specht("decompose").0, 1);
    assert_eq!(specht("decompose a31b --a 14").0, 1);
    assert_eq!(specht("core --lambda 1,2").0, 1);
    assert_eq!(specht("core --lambda x").0, 1);
    assert_eq!(specht("schur prod --rows 2^0").0, 1);
    assert_eq!(specht("decompose a31b --a 8 --b 3").0, 2);
    assert_eq!(specht("decompose staircase --m 2 --a 5 --b 3").0, 2);
    assert_eq!(specht("decompose staircase --m 2 --a 6 --b 3 --p 4").0, 2);
    assert_eq!(specht("decompose staircase --m 2 --a 6 --b 3 --l 3").0, 2);
    assert_eq!(specht("blockcomp --m 2 --a 5 --b 3").0, 2);
    assert_eq!(specht("schur corefilter --rows 4 --cols 3 --core 2").0, 2);
    assert_eq!(specht("char gl3-oracle --lambda 2 --p 3").0, 2);
    assert_eq!(specht("special --r -1 --b 0").0, 2);
    assert_eq!(specht("verify core-identity --m 1 --a 4 --b 3").0, 2);
    let (code, _, err) = specht("decompose a31b --a 8 --b 3");
    assert_eq!(code, 2);
    assert!(err.contains("divisible by 4"), "{err}");
    let (code, out, _) = specht("--help");
    assert_eq!(code, 0);
    assert!(out.contains("decompose"));
}

const COMMANDS: &[&str] = &[
    "decompose staircase --m 3 --a 9 --b 6 --p 0",
    "decompose hook --a 7 --b 4",
    "decompose a31b --a 14 --b 9",
    "decompose dual-a31b --a 10 --b 5",
    "decompose example63 --k 5",
    "blockcomp --m 3 --a 9 --b 7 --l 3 --p 0",
    "blockcomp --m 2 --a 6 --b 3 --injective",
    "schur prod --rows 3,2 --cols 2,1",
    "schur corefilter --rows 5 --cols 4,1 --core 3,2,1",
    "schur adaptfilter --rows 5 --cols 4,1 --m 3",
    "core --lambda 14,3,1^8 --l 3",
    "char sl2 --r 13 --l 3 --p 2",
    "char gl2 --lambda 7,2 --a 5 --b 4",
    "char gl3-oracle --lambda 5,3,1",
    "char staircase --m 3 --a 9 --b 6 --lambda 3,2",
    "char ab2 --a 10 --b 5 --lambda 4,3",
    "special --r 13 --b 5 --p 3",
    "special --r 13 --b 5 --p 3 --l 2",
    "verify core-identity --m 3 --a 7 --b 6",
    "verify a31b-consistency --a 10 --b 5",
];

#[test]
fn json_round_trips_byte_identically() {
    for cmd in COMMANDS {
        let text = ok(&format!("{cmd} --json"));
        let value: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap(), text, "{cmd}");
    }
}

#[test]
fn text_and_json_carry_the_same_data() {
    for cmd in COMMANDS.iter().filter(|c| c.starts_with("decompose")) {
        let d = Decomposition::from_json(&ok(&format!("{cmd} --json"))).unwrap();
        assert_eq!(d.to_json(), ok(&format!("{cmd} --json")));
        assert_eq!(d.to_string(), ok(cmd), "{cmd}");
    }
    for cmd in COMMANDS.iter().filter(|c| c.starts_with("schur")) {
        let g = SchurSum::from_json(&ok(&format!("{cmd} --json"))).unwrap();
        assert_eq!(g.to_string(), ok(cmd), "{cmd}");
    }
    for cmd in COMMANDS
        .iter()
        .filter(|c| c.starts_with("special") || c.starts_with("char g") && !c.contains("gl3"))
    {
        let v: Value = serde_json::from_str(&ok(&format!("{cmd} --json"))).unwrap();
        let field = if cmd.starts_with("special") {
            "special"
        } else {
            "mult"
        };
        assert_eq!(v[field].to_string(), ok(cmd), "{cmd}");
    }
    let v: Value = serde_json::from_str(&ok("core --lambda 14,3,1^8 --l 3 --json")).unwrap();
    let core: specht_core::Partition = serde_json::from_value(v["core"].clone()).unwrap();
    assert_eq!(core.to_string(), ok("core --lambda 14,3,1^8 --l 3"));
    for cmd in [
        "char gl3-oracle --lambda 5,3,1",
        "char sl2 --r 13 --l 3 --p 2",
    ] {
        let v: Value = serde_json::from_str(&ok(&format!("{cmd} --json"))).unwrap();
        let text = ok(cmd);
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), format!("dim {}", v["dim"]));
        let weights = v["weights"].as_array().unwrap();
        assert_eq!(lines.count(), weights.len(), "{cmd}");
    }
}
