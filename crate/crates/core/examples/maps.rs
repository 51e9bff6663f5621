//! Apply every map to a permutation and back.
//!
//! cargo run --example maps -- 43152

use homomesy::{MapId, Permutation};

fn main() -> homomesy::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "43152".into());
    let sigma: Permutation = text.parse()?;
    println!("{:<32} {sigma}", "input");
    for map in MapId::ALL {
        let image = map.apply(&sigma);
        assert_eq!(map.apply_inverse(&image), sigma);
        let label = match map.code() {
            Some(_) => format!("{map} {}", map.name()),
            None => map.name().to_string(),
        };
        println!("{label:<32} {image}");
    }
    println!("{:<32} {}", "K^7 by closed form", homomesy::maps::kreweras_power(&sigma, 7));
    Ok(())
}
