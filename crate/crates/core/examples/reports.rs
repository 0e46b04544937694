//! Batch comparison in the three output formats.
//!
//! cargo run --example reports

use kantian::report::{compare, emit_report, parse_game_lines, Format};

const GAMES: &str = r#"{"symmetric":[1,5,3,1],"label":"battle of the sexes"}
{"symmetric":[3,0,5,1],"label":"prisoner's dilemma"}
{"symmetric":[4,0,3,3],"label":"stag hunt"}
{"symmetric":[0,3,1,-2],"label":"chicken"}
{"bimatrix":{"a":[[2,1],[0,2]],"b":[[2,0],[1,2]]},"label":"bimatrix input"}
"#;

fn main() {
    let specs: Vec<_> = parse_game_lines(GAMES)
        .into_iter()
        .collect::<Result<_, _>>()
        .unwrap();
    let reports: Vec<_> = compare(&specs, 1e-9)
        .into_iter()
        .collect::<Result<_, _>>()
        .unwrap();
    for format in [Format::Human, Format::Csv, Format::JsonLines] {
        println!("--- {format:?}");
        print!("{}", emit_report(&reports, format));
    }
}
