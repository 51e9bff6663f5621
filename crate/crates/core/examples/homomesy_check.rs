//! Check one map against one statistic, printing orbits and averages.
//!
//! cargo run --example homomesy_check -- Mp00064 St000004 6

use homomesy::dynamics::orbit_average;
use homomesy::{check_homomesy, decompose, MapId, Outcome, Statistic};

fn main() -> homomesy::Result<()> {
    let mut args = std::env::args().skip(1);
    let map: MapId = args.next().unwrap_or_else(|| "Mp00064".into()).parse()?;
    let stat = Statistic::parse(&args.next().unwrap_or_else(|| "St000004".into()))?;
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);

    let orbits = decompose(map, n)?;
    println!("{map} on S_{n}: {} orbits", orbits.len());
    for orbit in orbits.iter().take(5) {
        println!("  {:<40} average {}", orbit.to_string(), orbit_average(orbit, &stat)?);
    }

    let verdict = check_homomesy(map, &stat, n)?;
    match &verdict.outcome {
        Outcome::Homomesic(c) => println!("{} is {c}-mesic", stat.label()),
        Outcome::Violated { witnesses } => {
            println!("{} is not homomesic; global average {}", stat.label(), verdict.global_average);
            for w in witnesses {
                println!("  orbit of {} (size {}) averages {}", w.representative, w.size, w.average);
            }
        }
    }
    Ok(())
}
