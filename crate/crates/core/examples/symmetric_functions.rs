//! Power sums, monomial and Schur expansions, and the three pairings.

use qtfock::symfunc::{basis_convert, basis_element, herm, inner_qt, Basis};
use qtfock::{partitions_of, SymFunc};

fn main() {
    let n = 3;
    for la in partitions_of(n) {
        let s = basis_element(&la, Basis::Schur);
        println!("s{la} = {s}");
        for (mu, c) in basis_convert(&s, Basis::Monomial) {
            println!("    m{mu}: {c}");
        }
    }
    let p21 = SymFunc::p(&qtfock::partition(&[2, 1]));
    println!("(p21, p21)_qt = {}", inner_qt(&p21, &p21));
    println!("<p21, p21>    = {}", herm(&p21, &p21));
    println!("omega(p21)    = {}", p21.omega());
}
