//! Cherednik's constant-term identity over a grid of small cases, plus the
//! infinite-N form and the finite-N stabilization.

use std::time::Instant;

use qtfock::mmc::{cherednik_check, finmac_check, stabilization_check};
use qtfock::partitions_up_to;

fn main() {
    let start = Instant::now();
    for n in [2usize, 3] {
        for k in [1u32, 2] {
            for mu in partitions_up_to(2) {
                for nu in partitions_up_to(2) {
                    if mu.len() > n || nu.len() > n {
                        continue;
                    }
                    let r = cherednik_check(&mu, &nu, n, k, 10);
                    println!("N={n} k={k} mu={mu} nu={nu}: {}", r.status);
                }
            }
        }
    }
    println!("grid done in {:.2?}", start.elapsed());

    for mu in partitions_up_to(3) {
        for nu in partitions_up_to(3) {
            let r = finmac_check(&mu, &nu);
            println!("finmac mu={mu} nu={nu}: {}", r.status);
        }
    }

    for mu in partitions_up_to(2) {
        for nu in partitions_up_to(2) {
            for (n, k) in [(3usize, 1u32), (4, 1), (3, 2)] {
                // Agreement holds below q^{k(N-1)}.
                let window = k * (n as u32 - 1);
                let r = stabilization_check(&mu, &nu, n, k, window);
                println!("N={n} k={k} stabilization below q^{window} mu={mu} nu={nu}: {}", r.status);
            }
        }
    }
    println!("total {:.2?}", start.elapsed());
}
