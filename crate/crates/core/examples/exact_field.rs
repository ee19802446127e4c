//! Arithmetic in Q(q^½, t^½, m): parsing, reduction, conjugation and Adams
//! operations.

use qtfock::FieldElem;

fn main() {
    let x: FieldElem = "(m-q)*(m-t)/(q^(1/2)*t^(1/2)*(1-q)*(1-t))".parse().unwrap();
    println!("x          = {x}");
    println!("conj(x)    = {}", x.conj());
    println!("adams_2(x) = {}", x.adams(2));
    println!("x(q<->t)   = {}", x.swap_qt());
    println!("x(m=1)     = {}", x.subst_m(&FieldElem::one()).unwrap());

    let y: FieldElem = "(1-q^2)/(1-q)".parse().unwrap();
    println!("(1-q^2)/(1-q) reduces to {y}");
    println!("1/0 is {:?}", FieldElem::one().checked_div(&FieldElem::zero()));
}
