mod common;

use common::*;

#[test]
fn oracle_self_checks() {
    // C_6: 2cos(2πk/6)
    let c6: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    let ev = eigenvalues_desc(&adjacency(6, &c6));
    for (got, want) in ev.iter().zip([2.0, 1.0, 1.0, -1.0, -1.0, -2.0]) {
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
    }
    assert_eq!(labeled_connected(4), 38);
    assert_eq!(labeled_connected(5), 728);
    assert_eq!(brute_connected_classes(4).len(), 6);
    assert_eq!(automorphisms(&adjacency_bool(3, &[(0, 1), (1, 2), (0, 2)])), 6);
}
