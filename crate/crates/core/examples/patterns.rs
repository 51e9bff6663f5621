//! Classical, vincular and anchored pattern occurrences.
//!
//! cargo run --example patterns -- 3142576

use homomesy::patterns::count;
use homomesy::{parse_pattern, Permutation};

fn main() -> homomesy::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "3142576".into());
    let sigma: Permutation = text.parse()?;
    println!("occurrences in {sigma}");
    for pattern in ["21", "123", "1-23", "12-3", "13-2", "2-31", "14-2-3", "|1-23"] {
        let spec = parse_pattern(pattern)?;
        let kind = if spec.is_anchored() {
            "anchored"
        } else if spec.is_classical() {
            "classical"
        } else {
            "vincular"
        };
        println!("  {pattern:>7}  {kind:<9}  {}", count(&sigma, pattern)?);
    }
    Ok(())
}
