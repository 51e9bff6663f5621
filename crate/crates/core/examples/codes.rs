//! Lehmer codes, major codes and lexicographic rank.
//!
//! cargo run --example codes -- 31542

use homomesy::{lehmer_decode, lehmer_encode, major_decode, major_encode, rank, unrank, Permutation};

fn main() -> homomesy::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "31542".into());
    let sigma: Permutation = text.parse()?;
    let lehmer = lehmer_encode(&sigma);
    let major = major_encode(&sigma);
    let r = rank(&sigma)?;

    println!("permutation  {sigma}");
    println!("lehmer code  {lehmer}  (sum {} = inversions)", lehmer.sum());
    println!("major code   {major}  (sum {} = major index)", major.sum());
    println!("rank         {r} of {}", homomesy::codes::factorial(sigma.degree()));

    assert_eq!(lehmer_decode(&lehmer), sigma);
    assert_eq!(major_decode(&major)?, sigma);
    assert_eq!(unrank(sigma.degree(), r)?, sigma);
    Ok(())
}
