//! Prints the numerical certificate of every inequality used to establish
//! the deletion bound, for one vertex of a graph given as graph6.
//!
//! ```text
//! cargo run --example proof_certificate -- 'C~' 0
//! ```

use std::error::Error;

use spectral_deletion::bounds::{proof_certificate, Tolerances};
use spectral_deletion::graph::{Graph, VertexId};

pub fn run(g: &Graph, vertex: usize) -> Result<(), Box<dyn Error>> {
    let tol = Tolerances::default();
    let graph6 = g.to_graph6()?;
    let cert = proof_certificate(g, VertexId(vertex), &tol)?;
    println!("graph {graph6} (n = {}, m = {}), vertex {vertex}, degree {}", g.n(), g.edge_count(), cert.degree);
    println!("lambda(G) = {:.12}, lambda(G - v) = {:.12}", cert.lambda, cert.mu);
    if cert.degenerate {
        println!("lambda - mu below the degeneracy threshold; matrix steps skipped");
    } else {
        println!("b^T (lambda I - B)^-1 b = {:.12} (residual {:.2e})", cert.schur_value.unwrap(), cert.schur_residual.unwrap());
        println!("min eigenvalue of M     = {:.3e}", cert.m_min_eig.unwrap());
        println!("b^T M b                 = {:.12}", cert.btmb.unwrap());
        println!("scalar form             = {:.12}", cert.eq1_lhs.unwrap());
    }
    println!("b^T B b = {} (direct count), {} (quadratic form)", cert.nbhd_edge_sum, cert.nbhd_quadratic_form);
    println!(
        "closed neighbourhood: {} vertices, {} edges, lambda {:.6}, average degree {:.6}",
        cert.f_order, cert.f_edge_count, cert.lambda_f, cert.avg_deg_f
    );
    if let Some(e) = cert.eq2_value {
        println!("2(d(d-1) - m)/(d^2 - 1) = {e:.6}");
    }
    let failures = cert.failures(&tol);
    if failures.is_empty() {
        println!("all certificate checks pass");
    } else {
        for f in &failures {
            println!("FAILED: {f}");
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let mut args = std::env::args().skip(1);
    let g = match args.next() {
        Some(text) => Graph::from_graph6(&text)?,
        // vertex 0 sees a triangle edge 1-2 and the start of the path 3-4-5
        None => Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (3, 4), (4, 5)])?,
    };
    let vertex = args.next().map(|s| s.parse()).transpose()?.unwrap_or(0);
    run(&g, vertex)
}
