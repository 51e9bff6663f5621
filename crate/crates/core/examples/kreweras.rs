//! Kreweras complement orbit structure against the divisor formula.
//!
//! cargo run --release --example kreweras -- 8

use homomesy::dynamics::{kreweras_even_orbit_count, orbit_size_distribution};
use homomesy::MapId;

fn main() -> homomesy::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for n in 2..=max {
        let dist = orbit_size_distribution(MapId::Kreweras, n)?;
        println!("n={n}: {dist}");
        for k in (1..=n).filter(|k| n % k == 0) {
            let found = dist.counts.get(&(2 * k as u64)).copied().unwrap_or(0);
            let formula = kreweras_even_orbit_count(n, k)?;
            let mark = if found == formula { "" } else { "  <- differs" };
            println!("    size {:>2}: {found:>6} orbits, formula {formula}{mark}", 2 * k);
        }
    }
    Ok(())
}
