//! Read the JSON scheme files in `corpus/`, build what they describe, and
//! write any of them back in the explicit structure-constant form.
//!
//! cargo run --example scheme_files [FILE]

use std::path::{Path, PathBuf};

use hopfcoh::cli::SchemeFile;
use hopfcoh::hopf::validate;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    if let Some(path) = std::env::args().nth(1) {
        let loaded = SchemeFile::read(Path::new(&path))?.load()?;
        println!(
            "{}",
            SchemeFile::explicit(&loaded.hopf, loaded.module.as_ref()).to_json()
        );
        return Ok(());
    }

    let mut paths: Vec<PathBuf> = std::fs::read_dir(&corpus)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    for path in paths {
        let name = path.file_stem().unwrap().to_string_lossy().into_owned();
        let loaded = SchemeFile::read(&path)?.load()?;
        let h = &loaded.hopf;
        println!(
            "{name:<24} {:<14} {:<5} rank {:<2} module rank {:<2} algebra: {:<4} {}",
            h.name(),
            h.ring().to_string(),
            h.rank(),
            loaded
                .module
                .as_ref()
                .map_or("-".into(), |m| m.rank().to_string()),
            if loaded.algebra.is_some() {
                "yes"
            } else {
                "no"
            },
            if validate(h).is_empty() {
                "valid"
            } else {
                "INVALID"
            }
        );
    }

    let c3 = SchemeFile::read(&corpus.join("c3_z.json"))?.load()?;
    println!(
        "\nc3_z.json in explicit form:\n{}",
        SchemeFile::explicit(&c3.hopf, None).to_json()
    );
    Ok(())
}
