//! Evaluates `λ(G) <= sqrt(λ(G-v)² + 2d(v) - 1)` at every vertex of a few
//! graphs and compares observed tightness with the structural prediction.
//!
//! ```text
//! cargo run --example deletion_bound
//! ```

use std::error::Error;

use spectral_deletion::bounds::{equality_characterization, theorem1_report, Tolerances};
use spectral_deletion::graph::{Family, Graph, VertexId};

pub fn run() -> Result<(), Box<dyn Error>> {
    let tol = Tolerances::default();
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for spec in ["K4", "S5", "C5", "P4"] {
        graphs.push((spec.to_string(), spec.parse::<Family>()?.build()?));
    }
    // triangle with a pendant vertex
    graphs.push(("paw".into(), Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])?));

    println!("{:<6} {:>2} {:>2} {:>10} {:>10} {:>10} {:>11}  tight", "graph", "v", "d", "lambda", "mu", "bound", "sq. gap");
    for (name, g) in &graphs {
        for v in 0..g.n() {
            let r = theorem1_report(g, VertexId(v), &tol)?;
            let predicted = equality_characterization(g, VertexId(v))?;
            assert_eq!(r.equality, predicted);
            println!(
                "{name:<6} {v:>2} {:>2} {:>10.6} {:>10.6} {:>10.6} {:>11.3e}  {}",
                r.degree, r.lambda, r.mu, r.bound, r.squared_gap, r.equality
            );
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
