//! Dense GF(2) linear algebra on bitset rows: Gaussian elimination, rank,
//! and full solution-space descriptions (particular vector + kernel basis).

use crate::bitset::VertexSet;

/// A rows x cols matrix over GF(2), stored as one bitset per row.
#[derive(Clone, Debug)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<VertexSet>,
}

impl Gf2Matrix {
    pub fn new(cols: usize) -> Self {
        Gf2Matrix { cols, rows: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::new(n);
        for i in 0..n {
            m.push_row(VertexSet::singleton(n, i));
        }
        m
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            cols,
            rows: vec![VertexSet::empty(cols); rows],
        }
    }

    pub fn push_row(&mut self, row: VertexSet) {
        assert_eq!(row.universe(), self.cols, "row width mismatch");
        self.rows.push(row);
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-by-vector products: `Mx` as a bit vector over the row indices.
    pub fn apply(&self, x: &VertexSet) -> VertexSet {
        assert_eq!(x.universe(), self.cols);
        let mut out = VertexSet::empty(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            if row.intersection_parity(x) {
                out.insert(i);
            }
        }
        out
    }

    /// GF(2) row rank, computed on a scratch copy.
    pub fn rank(&self) -> usize {
        let zero_rhs = VertexSet::empty(self.rows.len());
        eliminate(self, &zero_rhs).pivots.len()
    }
}

/// Affine description of the solution set of `Mx = b`: the solutions are
/// exactly `particular + span(kernel_basis)`, `2^k` of them in total.
#[derive(Clone, Debug)]
pub struct Gf2Solution {
    pub particular: VertexSet,
    pub kernel_basis: Vec<VertexSet>,
}

impl Gf2Solution {
    /// Number of free dimensions (`log2` of the solution count).
    pub fn nullity(&self) -> usize {
        self.kernel_basis.len()
    }

    /// The solution selected by a kernel-coefficient mask, in basis order.
    pub fn solution_at(&self, mask: u64) -> VertexSet {
        let mut x = self.particular.clone();
        for (i, k) in self.kernel_basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                x = x.symmetric_difference(k);
            }
        }
        x
    }
}

struct Echelon {
    rows: Vec<(VertexSet, bool)>,
    pivots: Vec<usize>, // pivot column of row i
}

fn eliminate(m: &Gf2Matrix, rhs: &VertexSet) -> Echelon {
    assert_eq!(rhs.universe(), m.rows.len(), "rhs length mismatch");
    let mut rows: Vec<(VertexSet, bool)> = m
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), rhs.contains(i)))
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..m.cols {
        let Some(pivot) = (next..rows.len()).find(|&i| rows[i].0.contains(col)) else {
            continue;
        };
        rows.swap(next, pivot);
        // reduced form: clear the column everywhere else
        for i in 0..rows.len() {
            if i != next && rows[i].0.contains(col) {
                let (head, tail) = if i < next {
                    let (a, b) = rows.split_at_mut(next);
                    (&mut a[i], &b[0])
                } else {
                    let (a, b) = rows.split_at_mut(i);
                    (&mut b[0], &a[next])
                };
                head.0 = head.0.symmetric_difference(&tail.0);
                head.1 ^= tail.1;
            }
        }
        pivots.push(col);
        next += 1;
    }
    Echelon { rows, pivots }
}

/// Solve `Mx = b`. Returns `None` when inconsistent; otherwise the
/// deterministic particular solution (free variables zero) and a kernel
/// basis, both verified by substitution before returning.
pub fn solve(m: &Gf2Matrix, b: &VertexSet) -> Option<Gf2Solution> {
    let ech = eliminate(m, b);
    let r = ech.pivots.len();
    if ech.rows[r..].iter().any(|&(_, rhs)| rhs) {
        return None;
    }

    let mut particular = VertexSet::empty(m.cols);
    for (i, &col) in ech.pivots.iter().enumerate() {
        if ech.rows[i].1 {
            particular.insert(col);
        }
    }

    let pivot_set = VertexSet::from_indices(m.cols, ech.pivots.iter().copied());
    let mut kernel_basis = Vec::new();
    for free in pivot_set.complement().iter() {
        let mut v = VertexSet::singleton(m.cols, free);
        for (i, &col) in ech.pivots.iter().enumerate() {
            if ech.rows[i].0.contains(free) {
                v.insert(col);
            }
        }
        kernel_basis.push(v);
    }

    // substitution check (inputs are small; a wrong solution is a bug)
    assert_eq!(m.apply(&particular), *b, "particular fails substitution");
    for k in &kernel_basis {
        assert!(m.apply(k).is_empty(), "kernel vector fails substitution");
    }
    Some(Gf2Solution {
        particular,
        kernel_basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn from_bits(rows: &[&[u8]]) -> Gf2Matrix {
        let cols = rows[0].len();
        let mut m = Gf2Matrix::new(cols);
        for r in rows {
            m.push_row(VertexSet::from_indices(
                cols,
                r.iter().enumerate().filter(|(_, &b)| b == 1).map(|(i, _)| i),
            ));
        }
        m
    }

    #[test]
    fn identity_system() {
        let m = Gf2Matrix::identity(3);
        let b = VertexSet::from_indices(3, [0, 2]);
        let sol = solve(&m, &b).unwrap();
        assert_eq!(sol.particular, VertexSet::from_indices(3, [0, 2]));
        assert!(sol.kernel_basis.is_empty());
    }

    #[test]
    fn zero_matrix_nonzero_rhs_is_infeasible() {
        let m = Gf2Matrix::zero(2, 2);
        assert!(solve(&m, &VertexSet::singleton(2, 0)).is_none());
    }

    #[test]
    fn repeated_row_kernel() {
        // [[1,1],[1,1]] x = 0 has kernel {(1,1)}: all 4 vectors enumerated,
        // exactly (0,0) and (1,1) satisfy it
        let m = from_bits(&[&[1, 1], &[1, 1]]);
        let sol = solve(&m, &VertexSet::empty(2)).unwrap();
        assert_eq!(sol.kernel_basis, vec![VertexSet::from_indices(2, [0, 1])]);
        assert!(sol.particular.is_empty());
        let solutions: Vec<_> = (0..4u64)
            .map(|mask| VertexSet::from_mask(2, mask))
            .filter(|x| m.apply(x).is_empty())
            .collect();
        assert_eq!(solutions.len(), 2);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Gf2Matrix::identity(4).rank(), 4);
        assert_eq!(Gf2Matrix::zero(3, 5).rank(), 0);
        // third row is the sum of the first two
        let m = from_bits(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn feasibility_matches_exhaustive_enumeration() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(1..=8);
            let cols = rng.gen_range(1..=8);
            let mut m = Gf2Matrix::new(cols);
            for _ in 0..rows {
                m.push_row(VertexSet::from_mask(
                    cols,
                    rng.gen::<u64>() & crate::bitset::low_mask(cols),
                ));
            }
            let b = VertexSet::from_mask(rows, rng.gen::<u64>() & crate::bitset::low_mask(rows));
            let brute = (0u64..1 << cols).any(|x| m.apply(&VertexSet::from_mask(cols, x)) == b);
            let sol = solve(&m, &b);
            assert_eq!(sol.is_some(), brute);
            if let Some(sol) = sol {
                // rank-nullity over GF(2)
                assert_eq!(m.rank() + sol.nullity(), cols);
                let count = (0u64..1 << cols)
                    .filter(|&x| m.apply(&VertexSet::from_mask(cols, x)) == b)
                    .count();
                assert_eq!(count, 1 << sol.nullity());
            }
        }
    }
}
