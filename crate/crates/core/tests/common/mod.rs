//! Rendering fixtures shared by the golden and acceptance tests.

use std::path::PathBuf;

use tamari::blossoming::interval_to_blossoming;
use tamari::meandering::phi_interval;
use tamari::render::{render_blossoming, render_meandering, render_smooth};
use tamari::TamariInterval;

pub const FIXTURES: [&str; 6] = [
    "UUDD|UUDD",
    "UDUD|UUDD",
    "UDUD|UDUD",
    "UDUDUD|UUUDDD",
    "UUDUDD|UUDUDD",
    "UUDUDUDDUD|UUUUUDDDDD",
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn renderings(text: &str) -> Vec<(String, String)> {
    let i: TamariInterval = text.parse().unwrap();
    let stem = text.replace('|', "-");
    vec![
        (format!("meandering-{stem}.svg"), render_meandering(&phi_interval(&i)).svg),
        (format!("smooth-{stem}.svg"), render_smooth(&i).svg),
        (
            format!("blossoming-{stem}.svg"),
            render_blossoming(&interval_to_blossoming(&i)).unwrap().svg,
        ),
    ]
}
