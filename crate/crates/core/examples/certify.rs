//! Certify the table of known homomesies up to a degree.
//!
//! cargo run --release --example certify -- 7

use std::collections::BTreeMap;

use homomesy::dynamics::Engine;
use homomesy::table::ExpectedResultsTable;
use homomesy::{decompose, Statistic};

fn main() -> homomesy::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let table = ExpectedResultsTable::builtin();
    let engine = Engine::new(0);
    let mut failures = BTreeMap::new();
    for n in 2..=n_max {
        let mut orbits = BTreeMap::new();
        for row in table.rows() {
            for &map in &row.maps {
                let orbits = match orbits.get(&map) {
                    Some(o) => o,
                    None => orbits.entry(map).or_insert(decompose(map, n)?),
                };
                for (id, index) in row.stat.instances(n) {
                    let v = engine.verdict(map, n, orbits, &Statistic::new(&id)?)?;
                    let expected = row.expected(n, index)?;
                    if !v.is_homomesic() || expected.is_some_and(|e| v.constant() != Some(e)) {
                        failures.entry(row.label()).or_insert(n);
                    }
                }
            }
        }
    }
    for (label, n) in &failures {
        println!("FAIL {label} first at n={n}");
    }
    println!("{}/{} rows certified for n=2..{n_max}", table.len() - failures.len(), table.len());
    Ok(())
}
