//! Torus characters at fixed points of the Hilbert scheme: tangent spaces,
//! Ext characters and the W(m) matrix elements they produce.

use qtfock::localization::{check_single_box, ext_char, geometric_w_element, tangent_char};
use qtfock::partitions_up_to;

fn main() {
    for la in partitions_up_to(2) {
        println!("T{la} = {}", tangent_char(&la));
        for mu in partitions_up_to(2) {
            let e = ext_char(&la, &mu);
            println!("  E({la},{mu}) = {e}");
            println!("    <H,W(m)H> = {}", geometric_w_element(&la, &mu));
        }
    }
    print!("{}", check_single_box(5).to_text());
}
