//! Evaluate every catalog statistic on one permutation.
//!
//! cargo run --example statistics -- 634215

use homomesy::stats::{catalog, StatId};
use homomesy::{Permutation, Statistic};

fn main() -> homomesy::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "634215".into());
    let sigma: Permutation = text.parse()?;
    for entry in catalog() {
        let stat = Statistic::new(&StatId::FindStat(entry.code))?;
        println!("{:<10} {:>6}  {}", stat.label(), stat.evaluate(&sigma)?.to_string(), entry.name);
    }

    // Statistics outside the catalog can be built from closures or combined.
    let fixed_points = Statistic::custom("fixed_points", |s| {
        (1..=s.degree()).filter(|&i| s.at(i) == i).count() as i64
    });
    let maj_minus_inv = Statistic::linear_combination(&[(1, Statistic::parse("maj")?), (-1, Statistic::parse("18")?)]);
    println!("{:<10} {:>6}", fixed_points.label(), fixed_points.evaluate(&sigma)?.to_string());
    println!("{:<10} {:>6}", maj_minus_inv.label(), maj_minus_inv.evaluate(&sigma)?.to_string());
    Ok(())
}
