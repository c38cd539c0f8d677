//! Spectral radius of a few named graphs, by Jacobi and by power iteration.
//!
//! ```text
//! cargo run --example spectral_radius
//! ```

use std::error::Error;

use spectral_deletion::graph::Family;
use spectral_deletion::linalg::{jacobi_eigen, spectral_radius, spectral_radius_power, DEFAULT_TOL};

pub fn run() -> Result<(), Box<dyn Error>> {
    for spec in ["K5", "S6", "P4", "C5", "ER:12,0.4,7"] {
        let family: Family = spec.parse()?;
        let a = family.build()?.adjacency_matrix();
        let jacobi = spectral_radius(&a, DEFAULT_TOL)?;
        let power = spectral_radius_power(&a, DEFAULT_TOL)?;
        println!("{spec:<12} jacobi {jacobi:.12}  power {power:.12}");
    }

    let spectrum = jacobi_eigen(&"C6".parse::<Family>()?.build()?.adjacency_matrix(), DEFAULT_TOL)?;
    println!("spectrum of C6: {:?}", spectrum.eigenvalues.iter().map(|t| (t * 1e9).round() / 1e9).collect::<Vec<_>>());
    println!("achieved accuracy {:e}", spectrum.tol_used);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
