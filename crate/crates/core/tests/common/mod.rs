//! Independent oracles. Nothing here calls the library's cycle, pairing or
//! classification code; graphs are only read through weights and edges.

#![allow(dead_code)]

use singgraph::DualGraph;

pub fn matrix(g: &DualGraph) -> Vec<Vec<i64>> {
    let n = g.len();
    let mut m = vec![vec![0; n]; n];
    for (i, w) in g.weights().into_iter().enumerate() {
        m[i][i] = w;
    }
    for &(a, b) in g.edges() {
        m[a][b] += 1;
        m[b][a] += 1;
    }
    m
}

pub fn pair(m: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    let mut s = 0;
    for i in 0..x.len() {
        for j in 0..y.len() {
            s += x[i] * m[i][j] * y[j];
        }
    }
    s
}

/// `K . x` with `K . E_i = -E_i^2 - 2`.
pub fn canonical(m: &[Vec<i64>], x: &[i64]) -> i64 {
    (0..x.len()).map(|i| (-m[i][i] - 2) * x[i]).sum()
}

/// `1 + (x^2 + K.x) / 2`, asserting the numerator is even.
pub fn genus(m: &[Vec<i64>], x: &[i64]) -> i64 {
    let num = pair(m, x, x) + canonical(m, x);
    assert_eq!(num % 2, 0, "adjunction parity");
    1 + num / 2
}

pub fn anti_nef(m: &[Vec<i64>], x: &[i64]) -> bool {
    (0..x.len()).all(|i| (0..x.len()).map(|j| m[i][j] * x[j]).sum::<i64>() <= 0)
}

/// Smallest cycle with all multiplicities `>= 1` and `Z . E_i <= 0` for all
/// `i`, as the least fixed point of
/// `f(y)_i = max(1, ceil(sum_{j != i} (E_i . E_j) y_j / -E_i^2))`.
///
/// `f` is monotone and every anti-nef positive cycle `x` has `f(x) <= x`, so
/// simultaneous iteration from `(1, ..., 1)` stays below the answer and stops
/// at an anti-nef positive cycle, which is then the answer.
pub fn fixed_point_fundamental_cycle(g: &DualGraph) -> Vec<i64> {
    let m = matrix(g);
    let n = g.len();
    let mut y = vec![1i64; n];
    loop {
        let next: Vec<i64> = (0..n)
            .map(|i| {
                let rest: i64 = (0..n).filter(|&j| j != i).map(|j| m[i][j] * y[j]).sum();
                let a = -m[i][i];
                ((rest + a - 1) / a).max(1)
            })
            .collect();
        assert!(next.iter().zip(&y).all(|(a, b)| a >= b), "iteration is monotone");
        if next == y {
            assert!(anti_nef(&m, &y));
            return y;
        }
        y = next;
    }
}

/// Leading principal minors by cofactor expansion (exact, small sizes only).
pub fn negative_definite_by_cofactors(m: &[Vec<i64>]) -> bool {
    (1..=m.len()).all(|k| {
        let sub: Vec<Vec<i128>> = (0..k)
            .map(|i| (0..k).map(|j| m[i][j] as i128).collect())
            .collect();
        let d = det(&sub);
        if k % 2 == 1 {
            d < 0
        } else {
            d > 0
        }
    })
}

fn det(a: &[Vec<i128>]) -> i128 {
    let n = a.len();
    if n == 1 {
        return a[0][0];
    }
    (0..n)
        .filter(|&j| a[0][j] != 0)
        .map(|j| {
            let minor: Vec<Vec<i128>> = a[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * a[0][j] * det(&minor)
        })
        .sum()
}
