//! Test oracles that share no code path with the library numerics.
//!
//! Eigenvalues come from Householder tridiagonalization plus Sturm-sequence
//! bisection; isomorphism classes from exhaustive labeling.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// Householder reduction of symmetric `a` to tridiagonal form; returns the
/// diagonal and the subdiagonal (length `n - 1`).
pub fn tridiagonalize(a: &[Vec<f64>]) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    for k in 0..n.saturating_sub(2) {
        let alpha_sq: f64 = ((k + 1)..n).map(|i| m[i][k] * m[i][k]).sum();
        if alpha_sq == 0.0 {
            continue;
        }
        let alpha = if m[k + 1][k] > 0.0 { -alpha_sq.sqrt() } else { alpha_sq.sqrt() };
        let mut v = vec![0.0; n];
        v[k + 1] = m[k + 1][k] - alpha;
        for i in (k + 2)..n {
            v[i] = m[i][k];
        }
        let vnorm_sq: f64 = v.iter().map(|x| x * x).sum();
        if vnorm_sq == 0.0 {
            continue;
        }
        // m <- H m H with H = I - 2vvᵀ/(vᵀv)
        let p: Vec<f64> = (0..n).map(|i| (0..n).map(|j| m[i][j] * v[j]).sum::<f64>() * 2.0 / vnorm_sq).collect();
        let kk: f64 = v.iter().zip(&p).map(|(a, b)| a * b).sum::<f64>() / vnorm_sq;
        let q: Vec<f64> = (0..n).map(|i| p[i] - kk * v[i]).collect();
        for i in 0..n {
            for j in 0..n {
                m[i][j] -= v[i] * q[j] + q[i] * v[j];
            }
        }
    }
    let diag = (0..n).map(|i| m[i][i]).collect();
    let off = (1..n).map(|i| m[i][i - 1]).collect();
    (diag, off)
}

/// Sturm count: eigenvalues of the tridiagonal matrix strictly below `x`.
fn sturm_below(diag: &[f64], off: &[f64], x: f64, pivmin: f64) -> usize {
    let mut count = 0;
    let mut q = diag[0] - x;
    if q.abs() < pivmin {
        q = -pivmin;
    }
    if q < 0.0 {
        count += 1;
    }
    for i in 1..diag.len() {
        q = diag[i] - x - off[i - 1] * off[i - 1] / q;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues of symmetric `a`, descending, by Sturm bisection on its
/// tridiagonal form.
pub fn eigenvalues_desc(a: &[Vec<f64>]) -> Vec<f64> {
    let n = a.len();
    let (diag, off) = tridiagonalize(a);
    let bound = (0..n)
        .map(|i| diag[i].abs() + if i > 0 { off[i - 1].abs() } else { 0.0 } + if i + 1 < n { off[i].abs() } else { 0.0 })
        .fold(0.0, f64::max)
        + 1.0;
    let pivmin = f64::MIN_POSITIVE.sqrt() * bound;
    (0..n)
        .map(|k| {
            // k-th largest = (n - 1 - k)-th smallest
            let target = n - 1 - k;
            let (mut lo, mut hi) = (-bound, bound);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if sturm_below(&diag, &off, mid, pivmin) > target {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

pub fn kth_largest(a: &[Vec<f64>], k: usize) -> f64 {
    eigenvalues_desc(a)[k]
}

/// Dense 0–1 adjacency from an edge list.
pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<f64>> {
    let mut a = vec![vec![0.0; n]; n];
    for &(i, j) in edges {
        a[i][j] = 1.0;
        a[j][i] = 1.0;
    }
    a
}

pub fn spectral_radius(n: usize, edges: &[(usize, usize)]) -> f64 {
    let a = adjacency(n, edges);
    kth_largest(&a, 0).max(-kth_largest(&a, n - 1))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Upper-triangle bits of `adj` relabeled by `perm` (vertex `perm[k]` at position `k`),
/// in graph6 order, as a string of '0'/'1'.
fn bit_string(adj: &[Vec<bool>], perm: &[usize]) -> String {
    let n = adj.len();
    let mut s = String::new();
    for j in 1..n {
        for i in 0..j {
            s.push(if adj[perm[i]][perm[j]] { '1' } else { '0' });
        }
    }
    s
}

/// Minimum bit string over all `n!` labelings, no pruning.
pub fn brute_canonical(adj: &[Vec<bool>]) -> String {
    permutations(adj.len()).iter().map(|p| bit_string(adj, p)).min().unwrap()
}

fn connected(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for w in 0..n {
            if adj[u][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Canonical bit strings of all connected graphs on `n` vertices, from all
/// `2^(n(n-1)/2)` labeled graphs.
pub fn brute_connected_classes(n: usize) -> BTreeSet<String> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut adj = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
        if connected(&adj) {
            classes.insert(perms.iter().map(|p| bit_string(&adj, p)).min().unwrap());
        }
    }
    classes
}

/// Size of the automorphism group, by checking every permutation.
pub fn automorphisms(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    permutations(n)
        .iter()
        .filter(|p| (0..n).all(|i| (0..n).all(|j| adj[i][j] == adj[p[i]][p[j]])))
        .count()
}

/// Labeled connected graphs on `n` vertices via the standard recurrence.
pub fn labeled_connected(n: usize) -> u128 {
    let binom = |a: u128, b: u128| -> u128 { (0..b).fold(1u128, |acc, i| acc * (a - i) / (i + 1)) };
    let total = |k: u128| -> u128 { 1u128 << (k * k.saturating_sub(1) / 2) };
    let mut c = vec![0u128; n + 1];
    for m in 1..=n as u128 {
        let mut value = total(m);
        for k in 1..m {
            value -= binom(m - 1, k - 1) * c[k as usize] * total(m - k);
        }
        c[m as usize] = value;
    }
    c[n]
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub fn adjacency_bool(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; n]; n];
    for &(i, j) in edges {
        a[i][j] = true;
        a[j][i] = true;
    }
    a
}

