//! Keeps the crate examples compiling and running.

#[allow(dead_code)]
#[path = "../examples/spectral_radius.rs"]
mod spectral_radius;
#[allow(dead_code)]
#[path = "../examples/deletion_bound.rs"]
mod deletion_bound;
#[allow(dead_code)]
#[path = "../examples/proof_certificate.rs"]
mod proof_certificate;
#[allow(dead_code)]
#[path = "../examples/graph6_canonical.rs"]
mod graph6_canonical;
#[allow(dead_code)]
#[path = "../examples/companion_bounds.rs"]
mod companion_bounds;
#[allow(dead_code)]
#[path = "../examples/exhaustive_sweep.rs"]
mod exhaustive_sweep;
#[allow(dead_code)]
#[path = "../examples/random_scan_csv.rs"]
mod random_scan_csv;

#[test]
fn spectral_radius_example_runs() {
    spectral_radius::run().unwrap();
}

#[test]
fn deletion_bound_example_runs() {
    deletion_bound::run().unwrap();
}

#[test]
fn proof_certificate_example_runs() {
    let g = spectral_deletion::graph::Graph::from_graph6("C~").unwrap();
    proof_certificate::run(&g, 0).unwrap();
}

#[test]
fn graph6_example_runs() {
    graph6_canonical::run().unwrap();
}

#[test]
fn companion_example_runs() {
    companion_bounds::run().unwrap();
}

#[test]
fn sweep_example_runs() {
    exhaustive_sweep::run(5).unwrap();
}

#[test]
fn random_scan_example_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    random_scan_csv::run(path.to_str()).unwrap();
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 799);
}
