//! Reduced simplicial homology over a field, from ranks of boundary matrices.

mod field;
pub mod rank;

pub use field::{FieldSpec, Prime};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Signed incidence matrix `∂_k : C_k → C_{k-1}` of the augmented chain complex.
///
/// Rows are the `(k-1)`-faces and columns the `k`-faces, both in canonical order.
/// The entry at `(τ, σ)` is `(-1)^p` when `τ` is `σ` with its `p`-th smallest
/// vertex removed (0-based), and zero otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    rows: Vec<VertexSet>,
    cols: Vec<VertexSet>,
    entries: Vec<i8>,
}

impl BoundaryMatrix {
    /// Builds `∂` between the given face lists; `rows` must be canonically sorted.
    pub fn between(rows: Vec<VertexSet>, cols: Vec<VertexSet>) -> Self {
        let width = cols.len();
        let mut entries = vec![0i8; rows.len() * width];
        for (j, sigma) in cols.iter().enumerate() {
            for (pos, v) in sigma.iter().enumerate() {
                let tau = sigma.without(v);
                if let Ok(i) = rows.binary_search(&tau) {
                    entries[i * width + j] = if pos % 2 == 0 { 1 } else { -1 };
                }
            }
        }
        BoundaryMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_faces(&self) -> &[VertexSet] {
        &self.rows
    }

    pub fn col_faces(&self) -> &[VertexSet] {
        &self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.cols.len() + col]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.cols.len().max(1))
            .take(self.rows.len())
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect()
    }

    /// Exact integer product `self · rhs`; `None` if the shapes do not chain.
    pub fn product(&self, rhs: &BoundaryMatrix) -> Option<Vec<Vec<i64>>> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut out = vec![vec![0i64; rhs.ncols()]; self.nrows()];
        for (i, row) in out.iter_mut().enumerate() {
            for k in 0..self.ncols() {
                let a = self.entry(i, k) as i64;
                if a == 0 {
                    continue;
                }
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell += a * rhs.entry(k, j) as i64;
                }
            }
        }
        Some(out)
    }
}

/// `∂_k` of `c`. For `k = 0` this is the augmentation onto the row indexed by `∅`.
pub fn boundary_matrix(c: &SimplicialComplex, k: usize) -> Result<BoundaryMatrix> {
    if c.is_void() {
        return Err(Error::VoidComplex("boundary_matrix"));
    }
    let k = k as isize;
    Ok(BoundaryMatrix::between(
        c.faces_of_dim(k - 1),
        c.faces_of_dim(k),
    ))
}

/// Rank of `m` over `field`.
pub fn rank(m: &BoundaryMatrix, field: FieldSpec) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    match field {
        FieldSpec::Rational => rank::rank_rational(&m.to_rows(), m.ncols()),
        FieldSpec::Gf(p) if p.get() == 2 => {
            let words = m.nrows().div_ceil(64);
            let columns = (0..m.ncols())
                .map(|j| {
                    let mut col = vec![0u64; words];
                    for i in 0..m.nrows() {
                        if m.entry(i, j) != 0 {
                            col[i / 64] |= 1 << (i % 64);
                        }
                    }
                    col
                })
                .collect();
            rank::rank_gf2(columns, m.nrows())
        }
        FieldSpec::Gf(p) => {
            let p = p.get() as u64;
            let rows = (0..m.nrows())
                .map(|i| {
                    (0..m.ncols())
                        .map(|j| (m.entry(i, j) as i64).rem_euclid(p as i64) as u64)
                        .collect()
                })
                .collect();
            rank::rank_mod_p(rows, m.ncols(), p)
        }
    }
}

/// GF(2) rank of `∂` between two face lists, built straight into bitsets.
fn boundary_rank_gf2(rows: &[VertexSet], cols: &[VertexSet]) -> usize {
    if rows.is_empty() || cols.is_empty() {
        return 0;
    }
    let words = rows.len().div_ceil(64);
    let columns = cols
        .iter()
        .map(|sigma| {
            let mut col = vec![0u64; words];
            for v in sigma.iter() {
                if let Ok(i) = rows.binary_search(&sigma.without(v)) {
                    col[i / 64] |= 1 << (i % 64);
                }
            }
            col
        })
        .collect();
    rank::rank_gf2(columns, rows.len())
}

fn boundary_rank(rows: &[VertexSet], cols: &[VertexSet], field: FieldSpec) -> usize {
    if field.is_gf2() {
        boundary_rank_gf2(rows, cols)
    } else {
        rank(
            &BoundaryMatrix::between(rows.to_vec(), cols.to_vec()),
            field,
        )
    }
}

/// Reduced Betti numbers `dim H̃_i(c; field)` for `i = -1, 0, ..., dim c`.
///
/// Entry `i + 1` holds `H̃_i`.
pub fn reduced_betti_numbers(c: &SimplicialComplex, field: FieldSpec) -> Result<Vec<usize>> {
    if c.is_void() {
        return Err(Error::VoidComplex("reduced_betti"));
    }
    let chains = c.faces_by_dimension();
    // ranks[k] = rank ∂_k : C_k → C_{k-1}, with C_k = chains[k + 1]
    let top = chains.len() - 1;
    let mut ranks = vec![0usize; top + 2];
    for k in 0..top {
        ranks[k + 1] = boundary_rank(&chains[k], &chains[k + 1], field);
    }
    Ok((0..=top)
        .map(|idx| chains[idx].len() - ranks[idx] - ranks[idx + 1])
        .collect())
}

/// `dim H̃_i(c; field) = nullity ∂_i − rank ∂_{i+1}`; zero above the dimension.
pub fn reduced_betti(c: &SimplicialComplex, i: isize, field: FieldSpec) -> Result<usize> {
    let betti = reduced_betti_numbers(c, field)?;
    if i < -1 {
        return Ok(0);
    }
    Ok(betti.get((i + 1) as usize).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::normalize(facets.iter().map(|f| VertexSet::of(f)), n).unwrap()
    }

    fn hollow_triangle() -> SimplicialComplex {
        cx(3, &[&[1, 2], &[1, 3], &[2, 3]])
    }

    fn fields() -> Vec<FieldSpec> {
        vec![
            FieldSpec::Rational,
            FieldSpec::gf(2).unwrap(),
            FieldSpec::gf(3).unwrap(),
            FieldSpec::gf(5).unwrap(),
        ]
    }

    #[test]
    fn boundary_examples() {
        let d1 = boundary_matrix(&hollow_triangle(), 1).unwrap();
        assert_eq!((d1.nrows(), d1.ncols()), (3, 3));
        for j in 0..3 {
            let col: Vec<i8> = (0..3).map(|i| d1.entry(i, j)).collect();
            assert_eq!(col.iter().filter(|&&x| x == 1).count(), 1);
            assert_eq!(col.iter().filter(|&&x| x == -1).count(), 1);
        }
        assert_eq!(boundary_matrix(&hollow_triangle(), 2).unwrap().ncols(), 0);

        let d2 = boundary_matrix(&SimplicialComplex::simplex(3), 2).unwrap();
        assert_eq!(d2.to_rows(), vec![vec![1], vec![-1], vec![1]]);

        let d0 = boundary_matrix(&cx(3, &[&[1, 2]]), 0).unwrap();
        assert_eq!(d0.row_faces(), &[VertexSet::EMPTY]);
        assert_eq!(d0.to_rows(), vec![vec![1, 1]]);

        assert!(boundary_matrix(&SimplicialComplex::void(2), 0).is_err());
    }

    #[test]
    fn rank_examples() {
        let d1 = boundary_matrix(&hollow_triangle(), 1).unwrap();
        assert_eq!(rank(&d1, FieldSpec::Rational), 2);
        let empty = boundary_matrix(&hollow_triangle(), 2).unwrap();
        assert_eq!(rank(&empty, FieldSpec::Rational), 0);
        let d2 = boundary_matrix(&SimplicialComplex::simplex(3), 2).unwrap();
        assert_eq!(rank(&d2, FieldSpec::gf(2).unwrap()), 1);
    }

    #[test]
    fn betti_examples() {
        let t = hollow_triangle();
        assert_eq!(reduced_betti(&t, 1, FieldSpec::Rational).unwrap(), 1);
        assert_eq!(reduced_betti(&t, 0, FieldSpec::Rational).unwrap(), 0);
        assert_eq!(reduced_betti(&t, -1, FieldSpec::Rational).unwrap(), 0);
        assert_eq!(
            reduced_betti(&SimplicialComplex::irrelevant(3), -1, FieldSpec::Rational).unwrap(),
            1
        );
        assert_eq!(reduced_betti(&t, 5, FieldSpec::Rational).unwrap(), 0);
        assert!(reduced_betti(&SimplicialComplex::void(3), 0, FieldSpec::Rational).is_err());
    }

    #[test]
    fn boundary_squares_to_zero() {
        let c = cx(5, &[&[1, 2, 3, 4], &[2, 3, 5], &[1, 5]]);
        for k in 0..3 {
            let lower = boundary_matrix(&c, k).unwrap();
            let upper = boundary_matrix(&c, k + 1).unwrap();
            let prod = lower.product(&upper).unwrap();
            assert!(prod.iter().flatten().all(|&x| x == 0));
        }
    }

    #[test]
    fn spheres() {
        for k in 1..=5 {
            let sphere = SimplicialComplex::simplex_boundary(k + 1);
            for f in fields() {
                let betti = reduced_betti_numbers(&sphere, f).unwrap();
                for (idx, b) in betti.iter().enumerate() {
                    let i = idx as isize - 1;
                    let expected = usize::from(i == k as isize - 1);
                    assert_eq!(*b, expected, "sphere k={k} i={i} field={f}");
                }
            }
        }
    }

    #[test]
    fn fast_gf2_path_matches_generic() {
        let c = cx(6, &[&[1, 2, 3, 4], &[2, 3, 5, 6], &[1, 5, 6], &[4, 6]]);
        let chains = c.faces_by_dimension();
        let gf2 = FieldSpec::gf(2).unwrap();
        for k in 0..chains.len() - 1 {
            let m = BoundaryMatrix::between(chains[k].clone(), chains[k + 1].clone());
            assert_eq!(boundary_rank_gf2(&chains[k], &chains[k + 1]), rank(&m, gf2));
        }
    }
}
