use std::process::{Command, Output};

fn btdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_btdist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn dist_text_and_json() {
    let out = btdist(&["dist", "3 2 1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2\n");
    let out = btdist(&["dist", "3 2 1", "--json"]);
    assert_eq!(stdout(&out), "{\"n\":3,\"perm\":[3,2,1],\"distance\":2}\n");
    let out = btdist(&["dist", "3,1,2"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn sort_of_identity_is_empty() {
    let out = btdist(&["sort", "1 2 3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "word:\nlength: 0\ncertified bound: none\n");
    let out = btdist(&["sort", "1 2 3", "--json"]);
    assert_eq!(
        stdout(&out),
        "{\"n\":3,\"perm\":[1,2,3],\"length\":0,\"word\":[],\"certified_bound\":null}\n"
    );
}

#[test]
fn sort_json_word_sorts_the_input() {
    let perm = "7 3 9 1 5 10 2 8 4 6 13 11 15 12 14";
    let out = btdist(&["sort", perm, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let mut seq: Vec<u64> = perm.split(' ').map(|t| t.parse().unwrap()).collect();
    let word = v["word"].as_array().unwrap();
    assert_eq!(v["length"].as_u64().unwrap() as usize, word.len());
    for m in word {
        let t: Vec<usize> = m.as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect();
        seq[t[0]..t[2]].rotate_left(t[1] - t[0]);
    }
    assert_eq!(seq, (1..=15).collect::<Vec<u64>>());
    assert_eq!(v["certified_bound"], 9);
    assert!(word.len() <= 9);
}

#[test]
fn toric_example_lists_eight_members() {
    let out = btdist(&["toric", "4 1 6 2 5 7 3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 8);
    for member in ["4 1 6 2 5 7 3", "4 7 1 5 2 6 3", "5 1 4 6 2 7 3", "2 6 3 7 4 1 5"] {
        assert!(lines.contains(&member), "{member}");
    }
    // Every printed permutation parses back.
    for line in lines {
        assert_eq!(btdist(&["bonds", line]).status.code(), Some(0));
    }
}

#[test]
fn witness_json_field_order() {
    let out = btdist(&["witness", "2 4 1 3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let keys = ["\"n\"", "\"perm\"", "\"rho\"", "\"r\"", "\"sigma\"", "\"tau\"", "\"placement\"", "\"bonds\""];
    let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v["bonds"].as_u64().unwrap() >= 3);
}

#[test]
fn witness_rejects_reverse_and_bonded_input() {
    let out = btdist(&["witness", "4 3 2 1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("reverse"));
    let out = btdist(&["witness", "1 3 2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("precondition"));
}

#[test]
fn invalid_input_exits_with_one() {
    let out = btdist(&["dist", "1 2 2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("value 2"));
    let out = btdist(&["dist", "1 2 4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("value 4"));
    assert_eq!(btdist(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(btdist(&["dist"]).status.code(), Some(1));
    assert_eq!(btdist(&["dist", "1 2", "--bogus"]).status.code(), Some(1));
    assert_eq!(btdist(&["pair", "1 2", "1 2 3"]).status.code(), Some(1));
    assert_eq!(btdist(&["diameter", "11"]).status.code(), Some(1));
    assert_eq!(btdist(&["dist", "13 12 11 10 9 8 7 6 5 4 3 2 1"]).status.code(), Some(1));
    assert_eq!(btdist(&["verify", "--suite", "metric", "--max-n", "9"]).status.code(), Some(1));
}

#[test]
fn pair_bonds_diameter_distribution() {
    assert_eq!(stdout(&btdist(&["pair", "1 2 3", "3 2 1"])), "2\n");
    assert_eq!(stdout(&btdist(&["bonds", "1 2 4 3"])), "2\n");
    assert_eq!(stdout(&btdist(&["diameter", "6"])), "4\n");
    assert_eq!(stdout(&btdist(&["distribution", "3"])), "0\t1\n1\t4\n2\t1\n");
    assert_eq!(
        stdout(&btdist(&["distribution", "4", "--json"])),
        "{\"n\":4,\"histogram\":[1,10,12,1]}\n"
    );
}

#[test]
fn table_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("six.btdt");
    let p = path.to_str().unwrap();
    let out = btdist(&["table", "6", "--cache", p]);
    assert_eq!(out.status.code(), Some(0));
    let bytes = std::fs::read(&path).unwrap();
    assert_eq!(&bytes[..6], b"BTDT\x01\x06");
    assert_eq!(bytes.len(), 14 + 720);
    assert_eq!(stdout(&btdist(&["diameter", "6", "--cache", p])), "4\n");

    std::fs::write(&path, b"nonsense").unwrap();
    let out = btdist(&["diameter", "6", "--cache", p]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("table cache"));
}

#[test]
fn verify_suites_pass() {
    for (suite, max_n) in [
        ("shifting", "6"),
        ("toric", "6"),
        ("criteria", "5"),
        ("witness", "6"),
        ("metric", "4"),
        ("sort", "40"),
    ] {
        let out = btdist(&["verify", "--suite", suite, "--max-n", max_n]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", stderr(&out));
        assert!(stdout(&out).starts_with(suite));
    }
}
