//! Exact integer linear algebra on small dense matrices: Hermite and Smith
//! normal forms, integer kernels, lattice membership.

pub type Mat = Vec<Vec<i64>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn transpose(m: &[Vec<i64>], ncols: usize) -> Mat {
    (0..ncols).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Mat {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|r| {
            (0..cols)
                .map(|j| (0..inner).map(|k| r[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn axpy_row(a: &mut Mat, dst: usize, src: usize, q: i64) {
    if q == 0 {
        return;
    }
    let (d, s) = if dst < src {
        let (lo, hi) = a.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        *x -= q * y;
    }
}

/// Row Hermite normal form `h = u * rows` with `u` unimodular.
///
/// Pivots are positive, entries above a pivot are reduced into `[0, pivot)`,
/// zero rows sit at the bottom of `h`.
pub fn hnf_with_transform(rows: &[Vec<i64>], ncols: usize) -> (Mat, Mat) {
    let m = rows.len();
    let mut a: Mat = rows.to_vec();
    for r in &a {
        assert_eq!(r.len(), ncols, "ragged matrix");
    }
    let mut u = identity(m);
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        loop {
            let piv = (r..m)
                .filter(|&i| a[i][c] != 0)
                .min_by_key(|&i| a[i][c].abs());
            let Some(p) = piv else { break };
            a.swap(r, p);
            u.swap(r, p);
            let mut clean = true;
            for i in r + 1..m {
                if a[i][c] != 0 {
                    let q = a[i][c] / a[r][c];
                    axpy_row(&mut a, i, r, q);
                    axpy_row(&mut u, i, r, q);
                    if a[i][c] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if a[r][c] == 0 {
            continue;
        }
        if a[r][c] < 0 {
            for x in a[r].iter_mut().chain(u[r].iter_mut()) {
                *x = -*x;
            }
        }
        for i in 0..r {
            let q = a[i][c].div_euclid(a[r][c]);
            axpy_row(&mut a, i, r, q);
            axpy_row(&mut u, i, r, q);
        }
        r += 1;
    }
    (a, u)
}

/// Nonzero rows of the row Hermite normal form: a canonical basis of the
/// lattice spanned by `rows`.
pub fn hnf(rows: &[Vec<i64>], ncols: usize) -> Mat {
    let (h, _) = hnf_with_transform(rows, ncols);
    h.into_iter().filter(|r| r.iter().any(|&x| x != 0)).collect()
}

pub fn rank(rows: &[Vec<i64>], ncols: usize) -> usize {
    hnf(rows, ncols).len()
}

/// Basis of `{x ∈ ℤ^ncols : m x = 0}`.
pub fn kernel(m: &[Vec<i64>], ncols: usize) -> Mat {
    let t = transpose(m, ncols);
    let (h, u) = hnf_with_transform(&t, m.len());
    h.iter()
        .zip(u)
        .filter(|(row, _)| row.iter().all(|&x| x == 0))
        .map(|(_, urow)| urow)
        .collect()
}

/// Reduce `x` against an HNF basis; returns the coefficients and the remainder.
fn reduce(h: &[Vec<i64>], x: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let mut rem = x.to_vec();
    let mut coeffs = vec![0; h.len()];
    for (k, row) in h.iter().enumerate() {
        let Some(c) = row.iter().position(|&v| v != 0) else {
            continue;
        };
        if rem[c] % row[c] != 0 {
            return (coeffs, rem);
        }
        let q = rem[c] / row[c];
        coeffs[k] = q;
        for (r, v) in rem.iter_mut().zip(row) {
            *r -= q * v;
        }
    }
    (coeffs, rem)
}

/// Membership of `x` in the lattice with HNF basis `h`.
pub fn in_hnf_lattice(h: &[Vec<i64>], x: &[i64]) -> bool {
    reduce(h, x).1.iter().all(|&v| v == 0)
}

/// Integer coefficients `c` with `Σ c_i gens_i = x`, if any.
pub fn solve(gens: &[Vec<i64>], x: &[i64]) -> Option<Vec<i64>> {
    let (h, u) = hnf_with_transform(gens, x.len());
    let (ch, rem) = reduce(&h, x);
    if rem.iter().any(|&v| v != 0) {
        return None;
    }
    let mut c = vec![0; gens.len()];
    for (k, q) in ch.iter().enumerate() {
        for (ci, uk) in c.iter_mut().zip(&u[k]) {
            *ci += q * uk;
        }
    }
    Some(c)
}

pub fn same_lattice(a: &[Vec<i64>], b: &[Vec<i64>], ncols: usize) -> bool {
    hnf(a, ncols) == hnf(b, ncols)
}

/// Nonzero invariant factors `d_1 | d_2 | …` of the Smith normal form.
pub fn smith_invariants(m: &[Vec<i64>], ncols: usize) -> Vec<i64> {
    let mut a: Mat = m.to_vec();
    let nrows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                let q = a[i][t] / a[t][t];
                axpy_row(&mut a, i, t, q);
                if a[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..ncols {
                let q = a[t][j] / a[t][t];
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                let p = a[t][t];
                let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| a[i][j] % p != 0));
                match bad {
                    Some(i) => {
                        axpy_row(&mut a, t, i, -1);
                    }
                    None => break,
                }
            }
            // move the smallest entry of row/column t to the corner
            let mut bi = t;
            let mut bj = t;
            for i in t..nrows {
                if a[i][t] != 0 && a[i][t].abs() < a[bi][bj].abs() {
                    (bi, bj) = (i, t);
                }
            }
            for j in t..ncols {
                if a[t][j] != 0 && a[t][j].abs() < a[bi][bj].abs() {
                    (bi, bj) = (t, j);
                }
            }
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Finitely generated abelian group `ℤ^free ⊕ ⊕ ℤ/d_i`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

impl AbelianGroup {
    /// Cokernel `ℤ^ngens / span(relations)`.
    pub fn presented(ngens: usize, relations: &[Vec<i64>]) -> Self {
        let inv = smith_invariants(relations, ngens);
        AbelianGroup {
            free_rank: ngens - inv.len(),
            torsion: inv.into_iter().filter(|&d| d > 1).collect(),
        }
    }

    pub fn order(&self) -> Option<i64> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let k = self.torsion[i..].iter().take_while(|&&x| x == d).count();
            parts.push(if k == 1 {
                format!("Z/{d}")
            } else {
                format!("(Z/{d})^{k}")
            });
            i += k;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

/// Determinant by fraction-free elimination.
pub fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    i64::try_from(sign * a[n - 1][n - 1]).expect("determinant overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_of_small_lattice() {
        let h = hnf(&[vec![4, 6], vec![6, 9]], 2);
        assert_eq!(h, vec![vec![2, 3]]);
        let h = hnf(&[vec![2, 0], vec![1, 3]], 2);
        assert_eq!(h, vec![vec![1, 3], vec![0, 6]]);
    }

    #[test]
    fn kernel_of_row() {
        let k = kernel(&[vec![1, 2, 3]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(v[0] + 2 * v[1] + 3 * v[2], 0);
        }
        assert!(same_lattice(&k, &[vec![2, -1, 0], vec![3, 0, -1]], 3));
    }

    #[test]
    fn smith_examples() {
        assert_eq!(smith_invariants(&[vec![2, 4], vec![6, 8]], 2), vec![2, 4]);
        assert_eq!(smith_invariants(&[vec![2, 0], vec![0, 3]], 2), vec![1, 6]);
        assert_eq!(smith_invariants(&[vec![0, 0]], 2), Vec::<i64>::new());
        let g = AbelianGroup::presented(3, &[vec![2, -1, 1]]);
        assert_eq!(g.to_string(), "Z^2");
        let g = AbelianGroup::presented(2, &[vec![2, 0], vec![0, 2]]);
        assert_eq!(g.to_string(), "(Z/2)^2");
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 2]]), 3);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(&[]), 1);
    }

    #[test]
    fn solve_recovers_coefficients() {
        let gens = vec![vec![2, 0, 1], vec![0, 3, 1], vec![1, 1, 1]];
        let x = vec![5, 4, 4];
        let c = solve(&gens, &x).unwrap();
        let back: Vec<i64> = (0..3).map(|j| (0..3).map(|i| c[i] * gens[i][j]).sum()).collect();
        assert_eq!(back, x);
        assert!(solve(&[vec![2, 0]], &[1, 0]).is_none());
    }
}
