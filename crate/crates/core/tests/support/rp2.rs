//! Six-vertex real projective plane and an integer Smith normal form.

use acmkit_core::*;

/// Quotient of the icosahedron by the antipodal map.
///
/// Vertices are the cyclic permutations of `(0, ±1, ±φ)`; faces are the triangles
/// of mutually adjacent vertices (edge length 2). Antipodal pairs become one
/// vertex, labelled in order of first appearance.
pub fn antipodal_icosahedron() -> SimplicialComplex {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut points: Vec<[f64; 3]> = Vec::new();
    for a in [1.0, -1.0] {
        for b in [phi, -phi] {
            points.push([0.0, a, b]);
            points.push([a, b, 0.0]);
            points.push([b, 0.0, a]);
        }
    }
    assert_eq!(points.len(), 12);
    let dist2 = |p: &[f64; 3], q: &[f64; 3]| (0..3).map(|i| (p[i] - q[i]).powi(2)).sum::<f64>();
    let adjacent = |i: usize, j: usize| (dist2(&points[i], &points[j]) - 4.0).abs() < 1e-9;

    let mut label = [0usize; 12];
    let mut next = 1;
    for i in 0..12 {
        if label[i] != 0 {
            continue;
        }
        let opposite = (0..12)
            .find(|&j| (0..3).all(|k| (points[j][k] + points[i][k]).abs() < 1e-9))
            .unwrap();
        label[i] = next;
        label[opposite] = next;
        next += 1;
    }

    let mut triangles = Vec::new();
    for i in 0..12 {
        for j in i + 1..12 {
            for k in j + 1..12 {
                if adjacent(i, j) && adjacent(j, k) && adjacent(i, k) {
                    triangles.push(VertexSet::of(&[label[i], label[j], label[k]]));
                }
            }
        }
    }
    assert_eq!(triangles.len(), 20);
    assert!(triangles.iter().all(|t| t.len() == 3));
    SimplicialComplex::normalize(triangles, 6).unwrap()
}

/// Invariant factors of an integer matrix by elementary row and column operations.
pub fn smith_diagonal(mut m: Vec<Vec<i64>>) -> Vec<i64> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block becomes the pivot
        let Some((pr, pc)) = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| m[r][c] != 0)
            .min_by_key(|&(r, c)| m[r][c].abs())
        else {
            break;
        };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        let mut clean = true;
        let (top, bottom) = m.split_at_mut(t + 1);
        let pivot = &top[t];
        for row in bottom {
            let q = row[t] / pivot[t];
            for (x, y) in row[t..].iter_mut().zip(&pivot[t..]) {
                *x -= q * y;
            }
            clean &= row[t] == 0;
        }
        for c in t + 1..cols {
            let q = m[t][c] / m[t][t];
            for row in &mut m[t..] {
                row[c] -= q * row[t];
            }
            clean &= m[t][c] == 0;
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        if let Some(r) = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| m[r][c] % m[t][t] != 0)) {
            let source = m[r].clone();
            for (x, y) in m[t][t..].iter_mut().zip(&source[t..]) {
                *x += y;
            }
            continue;
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}
