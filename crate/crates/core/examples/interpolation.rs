//! Interpolation polynomials H*_μ and their vanishing at the points ⊖x_λ.
//!
//!     cargo run --example interpolation -- 2,1

use qtfock::localization::ideal_point;
use qtfock::macdonald::{check_interpolation, interpolation_hstar};
use qtfock::{partitions_up_to, Partition};

fn main() {
    let mu: Partition = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "2".into())
        .parse()
        .expect("a partition such as 2,1");
    let hs = interpolation_hstar(&mu);
    println!("H*{mu} = {hs}");
    for la in partitions_up_to(mu.size() + 1) {
        let v = hs.evaluate(&ideal_point(&la).negated());
        let mark = if la.contains(&mu) { "" } else { "  (must vanish)" };
        println!("  at {la}: {v}{mark}");
    }
    print!("{}", check_interpolation(3).to_text());
}
