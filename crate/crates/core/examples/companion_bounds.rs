//! The three companion bounds: Hong's `sqrt(2m - n + 1)`, Nikiforov's
//! bound through the smallest Perron-vector entry, and the minimum-degree
//! corollary `λ(G) <= λ(G - v) + 1`.
//!
//! ```text
//! cargo run --example companion_bounds
//! ```

use std::error::Error;

use spectral_deletion::bounds::{hong_bound, min_degree_corollary, nikiforov_bound, BoundError, Tolerances};
use spectral_deletion::graph::Family;

pub fn run() -> Result<(), Box<dyn Error>> {
    let tol = Tolerances::default();
    for spec in ["K2", "K5", "S5", "P6", "C7", "ER:10,0.5,3"] {
        let g = spec.parse::<Family>()?.build()?;
        println!("{spec}");
        if g.min_degree() >= 1 {
            let h = hong_bound(&g, &tol)?;
            println!("  hong       lambda {:.6} <= {:.6}  tight {}", h.lambda, h.bound, h.tight);
        }
        if g.is_connected() {
            match nikiforov_bound(&g, &tol) {
                Ok(nk) => println!(
                    "  nikiforov  lambda {:.6} <= {:.6}  (vertex {}, x_min {:.4}, mu {:.6})",
                    nk.lambda, nk.bound, nk.vertex.0, nk.x_min, nk.mu
                ),
                Err(BoundError::NikiforovInapplicable { x_sq }) => println!("  nikiforov  not applicable (x_min^2 = {x_sq:.3})"),
                Err(e) => return Err(e.into()),
            }
        }
        let c = min_degree_corollary(&g, &tol)?;
        println!(
            "  corollary  lambda {:.6} <= mu + 1 = {:.6}; premise d = {} <= 2m/n = {:.3} <= lambda: {}",
            c.lambda,
            c.mu + 1.0,
            c.degree,
            c.average_degree,
            c.premise_holds
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
