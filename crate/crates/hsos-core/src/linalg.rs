//! Exact dense and sparse linear algebra over Q(i).
//!
//! `Echelon` maintains a reduced row echelon form incrementally; it is the
//! workhorse behind graded-piece dimensions, membership tests, span
//! deduplication, and kernel computations. `rank_sparse` handles the large
//! sparse scalar matrices coming from graded Koszul differentials.


use crate::gauss::GaussRat;

/// Incrementally built reduced row echelon form (rows normalized monic,
/// pivot columns cleared above and below). Canonical for the row span.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vec<GaussRat>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Rows in pivot order; a canonical basis of the span.
    pub fn basis(&self) -> &[Vec<GaussRat>] {
        &self.rows
    }

    /// Reduces `v` against the current rows, returning the residual.
    pub fn reduce(&self, mut v: Vec<GaussRat>) -> Vec<GaussRat> {
        assert_eq!(v.len(), self.cols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[GaussRat]) -> bool {
        self.reduce(v.to_vec()).iter().all(GaussRat::is_zero)
    }

    /// Inserts `v` into the span. Returns `true` if the rank grew.
    pub fn insert(&mut self, v: Vec<GaussRat>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for c in v.iter_mut() {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        // clear the new pivot column in existing rows, keeping the form reduced
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        true
    }

    /// A canonical byte key for the row span (RREF rendered entrywise).
    pub fn span_key(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            for c in row {
                s.push_str(&c.to_string());
                s.push(',');
            }
            s.push(';');
        }
        s
    }
}

/// Builds an echelon from rows.
pub fn echelon_from(rows: impl IntoIterator<Item = Vec<GaussRat>>, cols: usize) -> Echelon {
    let mut e = Echelon::new(cols);
    for r in rows {
        e.insert(r);
    }
    e
}

/// Rank of a dense row list.
pub fn rank(rows: &[Vec<GaussRat>], cols: usize) -> usize {
    echelon_from(rows.iter().cloned(), cols).rank()
}

/// Basis of the right kernel `{x : A x = 0}` for a dense row-major matrix.
pub fn kernel_basis(rows: &[Vec<GaussRat>], cols: usize) -> Vec<Vec<GaussRat>> {
    let e = echelon_from(rows.iter().cloned(), cols);
    let mut is_pivot = vec![false; cols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut x = vec![GaussRat::zero(); cols];
        x[free] = GaussRat::one();
        // each pivot row r: x[p_r] = -row[free]
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            x[p] = -&row[free];
        }
        basis.push(x);
    }
    basis
}

/// Solves `A x = b` exactly (any consistent rectangular system); `None` if
/// inconsistent. Free variables are set to zero.
pub fn solve(rows: &[Vec<GaussRat>], b: &[GaussRat]) -> Option<Vec<GaussRat>> {
    assert_eq!(rows.len(), b.len());
    let cols = rows.first().map_or(0, Vec::len);
    // eliminate on the augmented matrix
    let mut e = Echelon::new(cols + 1);
    for (r, rhs) in rows.iter().zip(b) {
        let mut row = r.clone();
        row.push(rhs.clone());
        e.insert(row);
    }
    // inconsistent iff a pivot lands in the augmented column
    if e.pivots.iter().any(|&p| p == cols) {
        return None;
    }
    let mut x = vec![GaussRat::zero(); cols];
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        // with free variables zeroed, x[p] is just the augmented entry
        x[p] = row[cols].clone();
    }
    // RREF may still reference free variables; verify and patch is not
    // needed since free vars are zero and pivot columns are cleared.
    Some(x)
}

/// A sparse column: sorted `(row, coeff)` pairs, no zero coefficients.
pub type SparseVec = Vec<(usize, GaussRat)>;

/// `target -= factor * source`, both sorted sparse vectors.
fn sparse_axpy(target: &SparseVec, factor: &GaussRat, source: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut a, mut b) = (0, 0);
    while a < target.len() || b < source.len() {
        match (target.get(a), source.get(b)) {
            (Some((ra, ca)), Some((rb, cb))) if ra == rb => {
                let v = ca - &(factor * cb);
                if !v.is_zero() {
                    out.push((*ra, v));
                }
                a += 1;
                b += 1;
            }
            (Some((ra, ca)), Some((rb, _))) if ra < rb => {
                out.push((*ra, ca.clone()));
                a += 1;
            }
            (Some(_), Some((rb, cb))) => {
                out.push((*rb, &(-cb) * factor));
                b += 1;
            }
            (Some((ra, ca)), None) => {
                out.push((*ra, ca.clone()));
                a += 1;
            }
            (None, Some((rb, cb))) => {
                out.push((*rb, &(-cb) * factor));
                b += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Rank of a matrix given by sparse columns, by left-looking elimination.
/// Suited to the very sparse scalar matrices of graded differentials.
pub fn rank_sparse(columns: Vec<SparseVec>) -> usize {
    // pivot row -> normalized column with that leading row
    let mut pivots: Vec<(usize, SparseVec)> = Vec::new();
    let mut rank = 0;
    for mut col in columns {
        loop {
            let Some(&(lead_row, ref lead_coeff)) = col.first() else {
                break;
            };
            match pivots.binary_search_by_key(&lead_row, |(r, _)| *r) {
                Ok(k) => {
                    let factor = lead_coeff.clone();
                    col = sparse_axpy(&col, &factor, &pivots[k].1);
                }
                Err(k) => {
                    let inv = lead_coeff.inv().expect("nonzero lead");
                    let normalized: SparseVec = col
                        .iter()
                        .map(|(r, c)| (*r, c * &inv))
                        .collect();
                    pivots.insert(k, (lead_row, normalized));
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gv(vals: &[i64]) -> Vec<GaussRat> {
        vals.iter().map(|&v| GaussRat::from_int(v)).collect()
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new(3);
        assert!(e.insert(gv(&[1, 2, 3])));
        assert!(e.insert(gv(&[0, 1, 1])));
        assert!(!e.insert(gv(&[1, 3, 4])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&gv(&[2, 5, 7])));
        assert!(!e.contains(&gv(&[0, 0, 1])));
    }

    #[test]
    fn span_key_is_basis_independent() {
        let a = echelon_from([gv(&[1, 1, 0]), gv(&[0, 0, 2])], 3);
        let b = echelon_from([gv(&[3, 3, 1]), gv(&[1, 1, 5])], 3);
        assert_eq!(a.span_key(), b.span_key());
        let c = echelon_from([gv(&[1, 1, 0]), gv(&[0, 1, 0])], 3);
        assert_ne!(a.span_key(), c.span_key());
    }

    #[test]
    fn kernel_of_rank_one_map() {
        // A = [1 1 1] has kernel of dimension 2
        let rows = vec![gv(&[1, 1, 1])];
        let k = kernel_basis(&rows, 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            let dot = x.iter().fold(GaussRat::zero(), |acc, c| &acc + c);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solve_small_system() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let rows = vec![gv(&[1, 1]), gv(&[1, -1])];
        let b = gv(&[3, 1]);
        let x = solve(&rows, &b).unwrap();
        assert_eq!(x, gv(&[2, 1]));
        // inconsistent: x + y = 0 and x + y = 1
        assert!(solve(&[gv(&[1, 1]), gv(&[1, 1])], &gv(&[0, 1])).is_none());
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let dense = [
            gv(&[1, 0, 2, 0]),
            gv(&[0, 0, 1, 1]),
            gv(&[1, 0, 3, 1]),
            gv(&[0, 0, 0, 0]),
        ];
        let cols: Vec<SparseVec> = (0..4)
            .map(|c| {
                (0..4)
                    .filter_map(|r| {
                        let v: &GaussRat = &dense[r][c];
                        (!v.is_zero()).then(|| (r, v.clone()))
                    })
                    .collect()
            })
            .collect();
        assert_eq!(rank_sparse(cols), rank(&dense, 4));
    }
}
