//! Prints P, J and H for every partition of a degree, and checks the
//! arm/leg norm formula for the modified polynomials.
//!
//!     cargo run --example macdonald_table -- 3

use std::time::Instant;

use qtfock::macdonald::{degree_table, norm_formula};

fn main() {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("degree must be a non-negative integer"))
        .unwrap_or(3);
    let start = Instant::now();
    let table = degree_table(n);
    for r in &table.records {
        println!("mu = {}", r.mu);
        println!("  P = {}", r.p);
        println!("  J = {}", r.j);
        println!("  H = {}", r.h);
        let ok = r.norm_herm == norm_formula(&r.mu);
        println!("  <H,H> = {}  (arm/leg formula {})", r.norm_herm, if ok { "agrees" } else { "DISAGREES" });
    }
    eprintln!("degree {n} in {:.2?}", start.elapsed());
}
