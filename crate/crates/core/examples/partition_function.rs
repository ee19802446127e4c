//! The instanton partition function as a trace of W(m), against the closed
//! product formula, for one and two nodes, and the perturbative factor.

use qtfock::field::fe;
use qtfock::zfun::{check_pert, check_quiver, compare_zfun, z_inst_trace, z_pert, QuiverSpec};

fn main() {
    print!("{}", compare_zfun(3, false).unwrap().to_text());

    let spec = QuiverSpec::new(vec![fe("m"), fe("m*q")]).unwrap();
    for (deg, c) in z_inst_trace(&spec, 2).unwrap() {
        println!("q0^{} q1^{}: {c}", deg[0], deg[1]);
    }
    print!("{}", check_quiver(&spec, 3).unwrap().to_text());

    for (d, c) in z_pert(4).iter().enumerate() {
        println!("Z_pert degree {d}: {c}");
    }
    print!("{}", check_pert(6).to_text());
}
