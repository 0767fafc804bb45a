//! Bundled graph6 corpus: every connected graph on up to seven vertices, one
//! representative per isomorphism class.

const FILES: [&str; 7] = [
    include_str!("../corpus/connected_n1.g6"),
    include_str!("../corpus/connected_n2.g6"),
    include_str!("../corpus/connected_n3.g6"),
    include_str!("../corpus/connected_n4.g6"),
    include_str!("../corpus/connected_n5.g6"),
    include_str!("../corpus/connected_n6.g6"),
    include_str!("../corpus/connected_n7.g6"),
];

pub const MAX_ORDER: usize = FILES.len();

/// graph6 lines of the connected graphs of order exactly `n` (empty outside `1..=7`).
pub fn connected(n: usize) -> Vec<&'static str> {
    match n {
        1..=MAX_ORDER => FILES[n - 1].lines().filter(|l| !l.is_empty()).collect(),
        _ => Vec::new(),
    }
}

/// graph6 lines of the connected graphs of order at most `max_n`, by increasing order.
pub fn connected_up_to(max_n: usize) -> Vec<&'static str> {
    (1..=max_n.min(MAX_ORDER)).flat_map(connected).collect()
}
