//! Scan the catalog against the reverse and complement maps and write a
//! CSV report of every pair that stays homomesic.
//!
//! cargo run --release --example scan_report -- scan.csv

use homomesy::dynamics::{scan_matrix, Engine};
use homomesy::report::{write_atomically, write_verdicts, Format, VerdictRecord};
use homomesy::stats::all_findstat;
use homomesy::{MapId, Statistic};

fn main() -> homomesy::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "scan.csv".into());
    let stats: Vec<Statistic> = all_findstat().iter().map(Statistic::new).collect::<Result<_, _>>()?;
    let entries = scan_matrix(&Engine::new(0), &[MapId::Reverse, MapId::Complement], &stats, 2..=7)?;

    let records: Vec<VerdictRecord> = entries
        .iter()
        .filter(|e| e.homomesic_throughout())
        .flat_map(|e| e.verdicts.iter().map(|v| VerdictRecord::new(v, None, true)))
        .collect();
    write_atomically(path.as_ref(), |w| write_verdicts(&records, Format::Csv, w))?;
    let pairs = entries.iter().filter(|e| e.homomesic_throughout()).count();
    println!("{pairs} homomesic pairs, {} verdicts written to {path}", records.len());
    Ok(())
}
