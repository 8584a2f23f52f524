//! Independent oracles shared by the integration tests. Plain machine
//! integers only; nothing here calls into the library's arithmetic.

#![allow(dead_code)]

use num_rational::Ratio;

pub type Q = Ratio<i128>;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Every leftward path from `p/q` along Farey edges to the first integer,
/// skipping any step that turns back along a triangle. Brute force: the
/// neighbours of `p/q` are found by scanning all smaller denominators.
pub fn basic_paths_dfs(p: i64, q: i64) -> Vec<Vec<(i64, i64)>> {
    assert!(q >= 2 && gcd(p, q) == 1);
    let mut out = Vec::new();
    let mut path = vec![(p, q)];
    dfs(&mut path, &mut out);
    out.sort();
    out
}

fn adjacent(a: (i64, i64), b: (i64, i64)) -> bool {
    (a.0 * b.1 - a.1 * b.0).abs() == 1
}

fn dfs(path: &mut Vec<(i64, i64)>, out: &mut Vec<Vec<(i64, i64)>>) {
    let (p, q) = *path.last().unwrap();
    if q == 1 {
        out.push(path.clone());
        return;
    }
    for s in 1..q {
        for r in (p * s / q - 2)..=(p * s / q + 2) {
            let next = (r, s);
            if gcd(r, s) != 1 || !adjacent((p, q), next) {
                continue;
            }
            if path.len() >= 2 && adjacent(path[path.len() - 2], next) {
                continue;
            }
            path.push(next);
            dfs(path, out);
            path.pop();
        }
    }
}

pub fn u_of(q: i64) -> Q {
    Q::new((q - 1) as i128, q as i128)
}

/// Value at `u ∈ [0, 1]` of the horizontally extended path through `vs`.
pub fn value_at(vs: &[(i64, i64)], u: Q) -> Q {
    let pt = |v: (i64, i64)| (u_of(v.1), Q::new(v.0 as i128, v.1 as i128));
    let (mut ua, mut va) = pt(vs[0]);
    if u >= ua {
        return va;
    }
    for &w in &vs[1..] {
        let (ub, vb) = pt(w);
        if u >= ub {
            return vb + (va - vb) * (u - ub) / (ua - ub);
        }
        ua = ub;
        va = vb;
    }
    pt(*vs.last().unwrap()).1
}

/// Sign of `Σ n_i/d_i` with positive denominators, without reducing.
pub fn sign_of_sum(xs: &[Q]) -> i32 {
    let mut num: i128 = 0;
    let mut den: i128 = 1;
    for x in xs {
        num = num * x.denom() + x.numer() * den;
        den *= x.denom();
        let g = num_integer::gcd(num, den);
        if g > 1 {
            num /= g;
            den /= g;
        }
    }
    num.signum() as i32
}

/// A sampled root report for one system: sign-change cells and exact zeros.
pub struct Sampled {
    pub samples: usize,
    pub sign_change_cells: Vec<(Q, Q)>,
    pub zero_samples: Vec<Q>,
}

/// Samples `Σ λ̃_i` at `j/samples`, `0 ≤ j ≤ samples`.
pub fn sample_sum(values: &[&[Q]], samples: usize) -> Sampled {
    let mut signs = Vec::with_capacity(samples + 1);
    let mut buf = Vec::with_capacity(values.len());
    for j in 0..=samples {
        buf.clear();
        buf.extend(values.iter().map(|v| v[j]));
        signs.push(sign_of_sum(&buf));
    }
    let at = |j: usize| Q::new(j as i128, samples as i128);
    let mut cells = Vec::new();
    let mut zeros = Vec::new();
    for j in 0..=samples {
        if signs[j] == 0 {
            zeros.push(at(j));
        }
        if j < samples && signs[j] * signs[j + 1] < 0 {
            cells.push((at(j), at(j + 1)));
        }
    }
    Sampled { samples, sign_change_cells: cells, zero_samples: zeros }
}

/// Per-sample values of one path, for reuse across systems.
pub fn tabulate(vs: &[(i64, i64)], samples: usize) -> Vec<Q> {
    (0..=samples).map(|j| value_at(vs, Q::new(j as i128, samples as i128))).collect()
}
