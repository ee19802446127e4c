//! Heisenberg modes, the vertex operators V and W(m), and the operator
//! identities relating them.

use qtfock::fock::{
    alpha, check_comm_phi, check_cor1, check_heisenberg, check_thm1, check_thm2, op_v, op_w, TruncOp,
};
use qtfock::{FieldElem, SymFunc};

fn main() {
    let one = SymFunc::one();
    let p1 = alpha(-1, &one).unwrap();
    println!("alpha_-1 1 = {p1}");
    println!("alpha_1 alpha_-1 1 = {}", alpha(1, &p1).unwrap());
    println!("V 1 (deg <= 2) = {}", op_v(&one, 2));
    println!("W(m) 1 (deg <= 1) = {}", op_w(&one, &FieldElem::m(), 1));

    let w = TruncOp::w_operator(&FieldElem::m(), 2);
    for d in 0..=2 {
        println!("Tr W(m) on degree {d} = {}", w.trace_deg(d).unwrap());
    }

    for r in [
        check_heisenberg(3, 3),
        check_comm_phi(3, 2),
        check_thm2(3),
        check_cor1(2),
        check_thm1(2, 3),
    ] {
        print!("{}", r.to_text());
    }
}
