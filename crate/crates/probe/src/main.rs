use std::time::Instant;
use mbe_core::graph::cycle;
use mbe_search::*;

fn main() {
    let c5 = cycle(5).unwrap();
    for budget in [1_000_000u64, 10_000_000, 100_000_000] {
        let t0 = Instant::now();
        let out = search_extensible(&c5, 5, 5, &SearchConfig::default().with_node_budget(budget)).unwrap();
        println!("(C5,5) budget {budget}: {:?} nodes={} in {:?} rej={}",
            out.status, out.stats.nodes, t0.elapsed(), out.stats.rejected_candidates);
        if out.found() { break; }
    }
}
