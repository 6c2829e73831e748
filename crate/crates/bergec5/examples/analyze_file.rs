//! Full pipeline on a `.h3` file: parse (with label remapping), structure,
//! decomposition and the verifier suite, emitted as a JSON report.
//!
//! Takes a path argument, or writes and analyzes a small demo file.

use bergec5::io::{parse_h3, write_h3};
use bergec5::report::{analyze, input_digest};

fn main() {
    let arg = std::env::args().nth(1);
    let (text, name) = match &arg {
        Some(path) => (
            std::fs::read_to_string(path).expect("readable input"),
            path.clone(),
        ),
        None => {
            // labels are arbitrary tokens; they get remapped densely
            let demo = "# demo: crown with two thin attachments\n5 4\na b c\na b d\na c x\nb d x\n";
            (demo.to_string(), "<demo>".to_string())
        }
    };
    let parsed = parse_h3(&text).expect("valid .h3");
    println!("# canonical form");
    print!("{}", write_h3(&parsed.hypergraph));
    if let Some(labels) = &parsed.labels {
        println!("# label map: {labels:?}");
    }

    let report = analyze(
        &parsed.hypergraph,
        Some(name),
        Some(input_digest(text.as_bytes())),
        parsed.labels,
    );
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    std::process::exit(if report.passed() { 0 } else { 1 });
}
