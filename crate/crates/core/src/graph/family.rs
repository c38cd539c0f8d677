use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError, Result, XorShift64Star};

/// Named graph families.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `K_n`.
    Complete(usize),
    /// `K_{1,n-1}` with center 0.
    Star(usize),
    Path(usize),
    Cycle(usize),
    /// `G(n, p)`; see [`erdos_renyi`] for the sampling order.
    ErdosRenyi { n: usize, p: f64, seed: u64 },
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Complete(n) => complete(n),
            Family::Star(n) => star(n),
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::ErdosRenyi { n, p, seed } => erdos_renyi(n, p, seed),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "K{n}"),
            Family::Star(n) => write!(f, "S{n}"),
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::ErdosRenyi { n, p, seed } => write!(f, "ER:{n},{p},{seed}"),
        }
    }
}

/// Parses `K<n>`, `S<n>`, `P<n>`, `C<n>` and `ER:<n>,<p>,<seed>`.
impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || GraphError::InvalidFamily(format!("cannot parse family {s:?}"));
        if let Some(rest) = s.strip_prefix("ER:") {
            let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
            let [n, p, seed] = parts.as_slice() else {
                return Err(bad());
            };
            return Ok(Family::ErdosRenyi {
                n: n.parse().map_err(|_| bad())?,
                p: p.parse().map_err(|_| bad())?,
                seed: seed.parse().map_err(|_| bad())?,
            });
        }
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        match letter {
            'K' => Ok(Family::Complete(n)),
            'S' => Ok(Family::Star(n)),
            'P' => Ok(Family::Path(n)),
            'C' => Ok(Family::Cycle(n)),
            _ => Err(bad()),
        }
    }
}

fn require(n: usize, min: usize, name: &str) -> Result<()> {
    if n < min {
        Err(GraphError::InvalidFamily(format!("{name} needs n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n, 1, "complete graph")?;
    let mut g = Graph::empty(n)?;
    for j in 0..n {
        for i in 0..j {
            g.add_edge(i, j)?;
        }
    }
    Ok(g)
}

/// `K_{1,n-1}`, center 0.
pub fn star(n: usize) -> Result<Graph> {
    require(n, 2, "star")?;
    let mut g = Graph::empty(n)?;
    for leaf in 1..n {
        g.add_edge(0, leaf)?;
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    require(n, 1, "path")?;
    let mut g = Graph::empty(n)?;
    for i in 1..n {
        g.add_edge(i - 1, i)?;
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n, 3, "cycle")?;
    let mut g = path(n)?;
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// `G(n, p)` from [`XorShift64Star`] seeded with `seed`.
///
/// Vertex pairs are visited in graph6 bit order, `(0,1), (0,2), (1,2),
/// (0,3), ...`, drawing one uniform `u` per pair; the edge is present iff
/// `u < p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    require(n, 1, "G(n, p)")?;
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidFamily(format!("edge probability must lie in [0, 1], got {p}")));
    }
    let mut rng = XorShift64Star::new(seed);
    let mut g = Graph::empty(n)?;
    for j in 1..n {
        for i in 0..j {
            if rng.next_f64() < p {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}
