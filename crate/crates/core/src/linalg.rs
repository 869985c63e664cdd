//! Sparse exact linear algebra: reduced row echelon form, affine solving,
//! kernels, column spaces, and homology of a composable pair of maps.
//!
//! Pivoting is deterministic: columns are taken in order, and among candidate
//! pivot rows the sparsest (then lowest-index) row wins, so every downstream
//! report is reproducible.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::scalar::{Field, Scalar};

/// Sorted sparse vector: `(index, value)` pairs, no zero entries.
pub type SparseVec = Vec<(u32, Scalar)>;

/// `a + c*b`, all sorted.
pub fn axpy(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    if c.is_zero() || b.is_empty() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ia, va)), Some((ib, vb))) => {
                if ia < ib {
                    out.push((*ia, va.clone()));
                    i += 1;
                } else if ib < ia {
                    out.push((*ib, c.mul(vb)));
                    j += 1;
                } else {
                    let v = va.add(&c.mul(vb));
                    if !v.is_zero() {
                        out.push((*ia, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some((ia, va)), None) => {
                out.push((*ia, va.clone()));
                i += 1;
            }
            (None, Some((ib, vb))) => {
                out.push((*ib, c.mul(vb)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub fn scale_vec(a: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, v)| (*i, c.mul(v))).collect()
}

pub fn add_vec(a: &SparseVec, b: &SparseVec) -> SparseVec {
    let one = if b.is_empty() { return a.clone() } else { b[0].1.field().one() };
    axpy(a, &one, b)
}

pub fn get_entry(a: &SparseVec, i: u32) -> Option<&Scalar> {
    a.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| &a[k].1)
}

/// Accumulator for building sparse vectors out of order.
#[derive(Default)]
pub struct VecBuilder {
    entries: BTreeMap<u32, Scalar>,
}

impl VecBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, idx: u32, v: Scalar) {
        if v.is_zero() {
            return;
        }
        match self.entries.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&v);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn build(self) -> SparseVec {
        self.entries.into_iter().collect()
    }
}

/// Row echelon engine.  Rows are sparse vectors over `0..ncols`.
/// Returns `(reduced rows sorted by pivot, pivot columns, rank)`.
pub fn rref_rows(mut rows: Vec<SparseVec>, ncols: u32) -> (Vec<SparseVec>, Vec<u32>, usize) {
    let mut pivots: Vec<u32> = Vec::new();
    let mut done: Vec<SparseVec> = Vec::new();
    rows.retain(|r| !r.is_empty());
    let mut col = 0u32;
    while col < ncols && !rows.is_empty() {
        // candidates lead with this column
        let mut best: Option<usize> = None;
        for (i, r) in rows.iter().enumerate() {
            if r[0].0 == col {
                let better = match best {
                    None => true,
                    Some(b) => r.len() < rows[b].len(),
                };
                if better {
                    best = Some(i);
                }
            }
        }
        if let Some(b) = best {
            let mut piv = rows.swap_remove(b);
            let lead = piv[0].1.clone();
            if !lead.is_one() {
                let inv = lead.inv().expect("field element");
                piv = scale_vec(&piv, &inv);
            }
            for r in rows.iter_mut() {
                if let Some(c) = get_entry(r, col) {
                    let c = c.neg();
                    *r = axpy(r, &c, &piv);
                }
            }
            for r in done.iter_mut() {
                if let Some(c) = get_entry(r, col) {
                    let c = c.neg();
                    *r = axpy(r, &c, &piv);
                }
            }
            rows.retain(|r| !r.is_empty());
            pivots.push(col);
            done.push(piv);
        }
        col += 1;
    }
    // sort by pivot column
    let mut order: Vec<usize> = (0..done.len()).collect();
    order.sort_by_key(|&i| done[i][0].0);
    let done: Vec<SparseVec> = order.into_iter().map(|i| std::mem::take(&mut done[i])).collect();
    pivots.sort_unstable();
    let rank = pivots.len();
    (done, pivots, rank)
}

/// A sparse matrix with labeled rows and columns, stored by columns.
#[derive(Debug, Clone)]
pub struct SparseMatrix<L: Clone + Ord + std::fmt::Debug> {
    pub row_labels: Vec<L>,
    pub col_labels: Vec<L>,
    /// `cols[j]` holds the nonzero entries of column `j`, indexed by row.
    pub cols: Vec<SparseVec>,
}

impl<L: Clone + Ord + std::fmt::Debug> SparseMatrix<L> {
    pub fn new(row_labels: Vec<L>, col_labels: Vec<L>) -> Self {
        let n = col_labels.len();
        SparseMatrix { row_labels, col_labels, cols: vec![Vec::new(); n] }
    }

    pub fn set(&mut self, row: usize, col: usize, v: Scalar) {
        if v.is_zero() {
            return;
        }
        let c = &mut self.cols[col];
        match c.binary_search_by_key(&(row as u32), |(i, _)| *i) {
            Ok(k) => c[k].1 = v,
            Err(k) => c.insert(k, (row as u32, v)),
        }
    }

    pub fn nrows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_labels.len()
    }

    fn rows(&self) -> Vec<SparseVec> {
        let mut rows: Vec<VecBuilder> = (0..self.nrows()).map(|_| VecBuilder::new()).collect();
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                rows[*i as usize].add(j as u32, v.clone());
            }
        }
        rows.into_iter().map(|b| b.build()).collect()
    }

    fn check_one_field(&self) -> Result<Option<Field>, Error> {
        let mut field: Option<Field> = None;
        for col in &self.cols {
            for (_, v) in col {
                match field {
                    None => field = Some(v.field()),
                    Some(f) => {
                        if f != v.field() {
                            return Err(Error::MixedFields(f.to_string(), v.field().to_string()));
                        }
                    }
                }
            }
        }
        Ok(field)
    }

    /// Reduced row echelon form.  Returns the reduced matrix, the pivot
    /// column indices, and the rank.
    pub fn rref(&self) -> Result<(SparseMatrix<L>, Vec<u32>, usize), Error> {
        self.check_one_field()?;
        let (rows, pivots, rank) = rref_rows(self.rows(), self.ncols() as u32);
        let mut out = SparseMatrix::new(self.row_labels.clone(), self.col_labels.clone());
        for (i, r) in rows.iter().enumerate() {
            for (j, v) in r {
                out.set(i, *j as usize, v.clone());
            }
        }
        Ok((out, pivots, rank))
    }

    /// Basis of the kernel of the column action `x ↦ Σ x_j · col_j`.
    pub fn kernel(&self, field: Field) -> Result<Vec<SparseVec>, Error> {
        self.check_one_field()?;
        Ok(kernel_of_columns(&self.cols, self.ncols() as u32, field))
    }
}

/// Kernel of the linear map sending the `j`-th unknown to `cols[j]`.
pub fn kernel_of_columns(cols: &[SparseVec], ncols: u32, field: Field) -> Vec<SparseVec> {
    // row-reduce the matrix whose (i, j) entry is cols[j][i]
    let mut rows: BTreeMap<u32, VecBuilder> = BTreeMap::new();
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col {
            rows.entry(*i).or_default().add(j as u32, v.clone());
        }
    }
    let rows: Vec<SparseVec> = rows.into_values().map(|b| b.build()).collect();
    let (red, pivots, _) = rref_rows(rows, ncols);
    let pivot_set: std::collections::BTreeSet<u32> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut b = VecBuilder::new();
        for r in &red {
            if let Some(v) = get_entry(r, free) {
                b.add(r[0].0, v.neg());
            }
        }
        b.add(free, field.one());
        basis.push(b.build());
    }
    basis
}

/// Span membership and coordinate queries against a fixed generating set.
/// Internally keeps rref([A | I]) so repeated solves cost one sparse
/// transform application; every answer is verified against the generators.
pub struct SpanSolver {
    field: Field,
    gens: Vec<SparseVec>,
    /// rows of rref([A | I]): (reduced A-part, transform part keyed by row id)
    rows: Vec<(SparseVec, SparseVec)>,
}

impl SpanSolver {
    pub fn new(gens: Vec<SparseVec>, field: Field) -> Self {
        let ngens = gens.len() as u32;
        let mut rows: BTreeMap<u32, VecBuilder> = BTreeMap::new();
        for (j, g) in gens.iter().enumerate() {
            for (i, v) in g {
                rows.entry(*i).or_default().add(j as u32, v.clone());
            }
        }
        let row_ids: Vec<u32> = rows.keys().copied().collect();
        let id_of: BTreeMap<u32, u32> =
            row_ids.iter().enumerate().map(|(k, r)| (*r, k as u32)).collect();
        let one = field.one();
        let mut aug_rows: Vec<SparseVec> = Vec::new();
        for (rid, b) in rows {
            let mut r = b.build();
            r.push((ngens + id_of[&rid], one.clone()));
            aug_rows.push(r);
        }
        let (red, _, _) = rref_rows(aug_rows, ngens + row_ids.len() as u32);
        let rows = red
            .into_iter()
            .map(|r| {
                let split = r.iter().position(|(i, _)| *i >= ngens).unwrap_or(r.len());
                let (a, t) = r.split_at(split);
                let t = t
                    .iter()
                    .map(|(i, v)| (row_ids[(i - ngens) as usize], v.clone()))
                    .collect();
                (a.to_vec(), t)
            })
            .collect();
        SpanSolver { field, gens, rows }
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[SparseVec] {
        &self.gens
    }

    /// Coordinates of `z` over the generators (free variables zero), or
    /// `None` if `z` is not in the span.
    pub fn solve(&self, z: &SparseVec) -> Option<SparseVec> {
        if z.is_empty() {
            return Some(Vec::new());
        }
        let mut coeffs = VecBuilder::new();
        for (a, t) in &self.rows {
            let mut w: Option<Scalar> = None;
            let mut i = 0;
            let mut j = 0;
            while i < t.len() && j < z.len() {
                if t[i].0 < z[j].0 {
                    i += 1;
                } else if z[j].0 < t[i].0 {
                    j += 1;
                } else {
                    let prod = t[i].1.mul(&z[j].1);
                    w = Some(match w {
                        None => prod,
                        Some(acc) => acc.add(&prod),
                    });
                    i += 1;
                    j += 1;
                }
            }
            if let Some(w) = w {
                if !w.is_zero() {
                    match a.first() {
                        Some((piv, _)) => coeffs.add(*piv, w),
                        None => return None,
                    }
                }
            }
        }
        let sol = coeffs.build();
        // exact verification (also rejects z with support outside all gens)
        let mut acc: SparseVec = Vec::new();
        for (j, c) in &sol {
            acc = axpy(&acc, c, &self.gens[*j as usize]);
        }
        if acc == *z {
            Some(sol)
        } else {
            None
        }
    }
}

/// Solve a finite affine system.  `constraints` are rows `(functional, rhs)`
/// over the unknown labels; the solution is exact and deterministic for a
/// given ordering of `unknowns` (free variables are set to zero).
pub fn solve_affine<L: Clone + Ord + std::fmt::Debug>(
    constraints: &[(Vec<(L, Scalar)>, Scalar)],
    unknowns: &[L],
) -> Result<BTreeMap<L, Scalar>, Error> {
    solve_affine_seeded(constraints, unknowns, |_| None)
}

/// Like [`solve_affine`], but free variables may be assigned by `free_choice`
/// (label index → value); `None` keeps the canonical zero.
pub fn solve_affine_seeded<L: Clone + Ord + std::fmt::Debug>(
    constraints: &[(Vec<(L, Scalar)>, Scalar)],
    unknowns: &[L],
    free_choice: impl Fn(usize) -> Option<Scalar>,
) -> Result<BTreeMap<L, Scalar>, Error> {
    let index: BTreeMap<&L, u32> = unknowns.iter().enumerate().map(|(i, l)| (l, i as u32)).collect();
    let n = unknowns.len() as u32;
    let mut field: Option<Field> = None;
    let mut rows: Vec<SparseVec> = Vec::new();
    for (func, rhs) in constraints {
        let mut b = VecBuilder::new();
        for (l, v) in func {
            match field {
                None => field = Some(v.field()),
                Some(f) => {
                    if f != v.field() {
                        return Err(Error::MixedFields(f.to_string(), v.field().to_string()));
                    }
                }
            }
            let i = *index
                .get(l)
                .ok_or_else(|| Error::Other(format!("unknown label {l:?} not declared")))?;
            b.add(i, v.clone());
        }
        if !rhs.is_zero() {
            match field {
                None => field = Some(rhs.field()),
                Some(f) => {
                    if f != rhs.field() {
                        return Err(Error::MixedFields(f.to_string(), rhs.field().to_string()));
                    }
                }
            }
        }
        let mut row = b.build();
        if !rhs.is_zero() {
            row.push((n, rhs.clone()));
        }
        if !row.is_empty() {
            rows.push(row);
        }
    }
    let (red, pivots, _) = rref_rows(rows, n + 1);
    if pivots.contains(&n) {
        // a row reduced to 0 = 1
        return Err(Error::Infeasible(None));
    }
    let field = field.unwrap_or(Field::Rational);
    // assign free variables, then read pivot variables off the reduced rows
    let pivot_set: std::collections::BTreeSet<u32> = pivots.iter().copied().collect();
    let mut assign: Vec<Scalar> = (0..n as usize)
        .map(|i| {
            if pivot_set.contains(&(i as u32)) {
                field.zero()
            } else {
                free_choice(i).unwrap_or_else(|| field.zero())
            }
        })
        .collect();
    for r in red.iter().rev() {
        let (piv, lead) = (r[0].0, &r[0].1);
        debug_assert!(lead.is_one());
        let mut val = field.zero();
        for (j, v) in &r[1..] {
            if *j == n {
                val = val.add(v);
            } else {
                val = val.sub(&v.mul(&assign[*j as usize]));
            }
        }
        assign[piv as usize] = val;
    }
    Ok(unknowns
        .iter()
        .cloned()
        .zip(assign)
        .filter(|(_, v)| !v.is_zero())
        .collect())
}

/// Cycles-mod-boundaries of a composable pair `d_in : U → V`, `d_out : V → W`,
/// presented by explicit representative vectors in `V` together with a
/// projection sending any cycle to its class coordinates.
pub struct PairHomology {
    pub reps: Vec<SparseVec>,
    pub boundary_rank: usize,
    solver: SpanSolver,
    n_boundaries: usize,
}

impl PairHomology {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Class coordinates of a cycle; `None` when `z` is not in the span of
    /// boundaries and representatives (i.e. not a cycle of this slice).
    pub fn project(&self, z: &SparseVec) -> Option<SparseVec> {
        let coords = self.solver.solve(z)?;
        Some(
            coords
                .into_iter()
                .filter_map(|(i, v)| {
                    let i = i as usize;
                    if i >= self.n_boundaries {
                        Some(((i - self.n_boundaries) as u32, v))
                    } else {
                        None
                    }
                })
                .collect(),
        )
    }
}

/// Homology of the pair: checks `d_out ∘ d_in = 0`, computes
/// `ker d_out / im d_in` with chosen representatives.
pub fn homology_of_pair(
    d_in_cols: &[SparseVec],
    d_out_cols: &[SparseVec],
    dim_v: u32,
    field: Field,
    witness: impl Fn(usize) -> String,
) -> Result<PairHomology, Error> {
    // d_out ∘ d_in = 0
    for (j, col) in d_in_cols.iter().enumerate() {
        let mut img = VecBuilder::new();
        for (i, v) in col {
            for (k, w) in &d_out_cols[*i as usize] {
                img.add(*k, v.mul(w));
            }
        }
        if !img.build().is_empty() {
            return Err(Error::NotAComplex { degree: 0, witness: witness(j) });
        }
    }
    let kernel = kernel_of_columns(d_out_cols, dim_v, field);
    // boundaries: independent columns of d_in
    let (_, pivots, rank) = {
        let mut rows: BTreeMap<u32, VecBuilder> = BTreeMap::new();
        for (j, col) in d_in_cols.iter().enumerate() {
            for (i, v) in col {
                rows.entry(*i).or_default().add(j as u32, v.clone());
            }
        }
        let rows: Vec<SparseVec> = rows.into_values().map(|b| b.build()).collect();
        rref_rows(rows, d_in_cols.len() as u32)
    };
    let boundaries: Vec<SparseVec> = pivots.iter().map(|j| d_in_cols[*j as usize].clone()).collect();
    // extend the boundary basis to the kernel by greedy independence
    let mut gens = boundaries.clone();
    let mut reps = Vec::new();
    let mut solver = SpanSolver::new(gens.clone(), field);
    for z in kernel {
        if solver.solve(&z).is_none() {
            gens.push(z.clone());
            reps.push(z);
            solver = SpanSolver::new(gens.clone(), field);
        }
    }
    Ok(PairHomology { reps, boundary_rank: rank, n_boundaries: boundaries.len(), solver })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    #[test]
    fn rref_identity_is_fixed() {
        let mut m = SparseMatrix::new(vec![0usize, 1], vec![0usize, 1]);
        m.set(0, 0, q(1));
        m.set(1, 1, q(1));
        let (r, pivots, rank) = m.rref().unwrap();
        assert_eq!(rank, 2);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r.cols, m.cols);
    }

    #[test]
    fn rref_dependent_rows() {
        // [[1,2],[2,4]] over Q → [[1,2],[0,0]], rank 1
        let mut m = SparseMatrix::new(vec![0usize, 1], vec![0usize, 1]);
        m.set(0, 0, q(1));
        m.set(0, 1, q(2));
        m.set(1, 0, q(2));
        m.set(1, 1, q(4));
        let (r, pivots, rank) = m.rref().unwrap();
        assert_eq!(rank, 1);
        assert_eq!(pivots, vec![0]);
        assert_eq!(get_entry(&r.cols[1], 0), Some(&q(2)));
        assert!(r.cols[0].len() == 1 && r.cols[1].len() == 1);
    }

    #[test]
    fn rref_mod_two() {
        // [[1,1],[1,1]] over F2 → [[1,1],[0,0]], rank 1 (hand elimination mod 2)
        let f2 = Field::Prime(2);
        let mut m = SparseMatrix::new(vec![0usize, 1], vec![0usize, 1]);
        m.set(0, 0, f2.one());
        m.set(0, 1, f2.one());
        m.set(1, 0, f2.one());
        m.set(1, 1, f2.one());
        let (r, pivots, rank) = m.rref().unwrap();
        assert_eq!((pivots, rank), (vec![0], 1));
        assert_eq!(get_entry(&r.cols[1], 0), Some(&f2.one()));
    }

    #[test]
    fn rref_is_idempotent() {
        let mut m = SparseMatrix::new(vec![0usize, 1, 2], vec![0usize, 1, 2, 3]);
        m.set(0, 0, q(2));
        m.set(0, 2, q(1));
        m.set(1, 1, q(3));
        m.set(1, 3, q(5));
        m.set(2, 0, q(4));
        m.set(2, 2, q(2));
        let (r1, _, _) = m.rref().unwrap();
        let (r2, _, _) = r1.rref().unwrap();
        assert_eq!(r1.cols, r2.cols);
    }

    #[test]
    fn rank_nullity() {
        let mut m = SparseMatrix::new(vec![0usize, 1, 2], vec![0usize, 1, 2, 3]);
        m.set(0, 0, q(1));
        m.set(1, 1, q(1));
        m.set(0, 2, q(1));
        m.set(1, 3, q(7));
        let (_, _, rank) = m.rref().unwrap();
        let kernel = m.kernel(Field::Rational).unwrap();
        assert_eq!(rank + kernel.len(), m.ncols());
    }

    #[test]
    fn mixed_fields_rejected() {
        let mut m = SparseMatrix::new(vec![0usize, 1], vec![0usize, 1]);
        m.set(0, 0, q(1));
        m.set(1, 1, Field::Prime(2).one());
        assert!(matches!(m.rref(), Err(Error::MixedFields(..))));
    }

    #[test]
    fn solve_single_assignment() {
        // {x = 1} → x ↦ 1
        let sol = solve_affine(&[(vec![("x", q(1))], q(1))], &["x"]).unwrap();
        assert_eq!(sol.get("x"), Some(&q(1)));
    }

    #[test]
    fn solve_by_substitution() {
        // {x+y = 1, x−y = 1} over Q → x ↦ 1, y ↦ 0
        let rows = vec![
            (vec![("x", q(1)), ("y", q(1))], q(1)),
            (vec![("x", q(1)), ("y", q(-1))], q(1)),
        ];
        let sol = solve_affine(&rows, &["x", "y"]).unwrap();
        assert_eq!(sol.get("x"), Some(&q(1)));
        assert_eq!(sol.get("y"), None); // zero entries dropped
    }

    #[test]
    fn solve_contradiction() {
        let rows = vec![
            (vec![("x", q(1))], q(0)),
            (vec![("x", q(1))], q(1)),
        ];
        assert!(matches!(solve_affine(&rows, &["x"]), Err(Error::Infeasible(_))));
    }

    #[test]
    fn free_variables_default_to_zero() {
        let rows = vec![(vec![("x", q(1)), ("y", q(1))], q(3))];
        let sol = solve_affine(&rows, &["x", "y"]).unwrap();
        assert_eq!(sol.get("x"), Some(&q(3)));
        assert_eq!(sol.get("y"), None);
    }

    #[test]
    fn homology_of_zero_pair() {
        // d_in = 0, d_out = 0 on k² → H of dimension 2
        let h = homology_of_pair(&[], &[Vec::new(), Vec::new()], 2, Field::Rational, |_| String::new()).unwrap();
        assert_eq!(h.dim(), 2);
    }

    #[test]
    fn homology_kills_iso() {
        // d_in = 0, d_out = [1] iso → H = 0
        let h = homology_of_pair(&[], &[vec![(0, q(1))]], 1, Field::Rational, |_| String::new()).unwrap();
        assert_eq!(h.dim(), 0);
    }

    #[test]
    fn homology_mod_two_of_multiplication_by_two() {
        // d_in = [2]: k→k over F2 is the zero map, d_out = 0 → H of dim 1
        let f2 = Field::Prime(2);
        let two = f2.from_i64(2);
        assert!(two.is_zero());
        let d_in: Vec<SparseVec> = vec![Vec::new()];
        let h = homology_of_pair(&d_in, &[Vec::new()], 1, f2, |_| String::new()).unwrap();
        assert_eq!(h.dim(), 1);
    }

    #[test]
    fn not_a_complex_detected() {
        let d_in = vec![vec![(0u32, q(1))]];
        let d_out = vec![vec![(0u32, q(1))]];
        assert!(matches!(
            homology_of_pair(&d_in, &d_out, 1, Field::Rational, |j| format!("e{j}")),
            Err(Error::NotAComplex { .. })
        ));
    }

    #[test]
    fn projection_kills_boundaries_and_fixes_reps() {
        // V = k³, boundaries span e0+e1, d_out = 0
        let d_in = vec![vec![(0u32, q(1)), (1u32, q(1))]];
        let d_out = vec![Vec::new(), Vec::new(), Vec::new()];
        let h = homology_of_pair(&d_in, &d_out, 3, Field::Rational, |_| String::new()).unwrap();
        assert_eq!(h.dim(), 2);
        let b = vec![(0u32, q(1)), (1u32, q(1))];
        assert_eq!(h.project(&b), Some(Vec::new()));
        for (i, rep) in h.reps.iter().enumerate() {
            let p = h.project(rep).unwrap();
            assert_eq!(p, vec![(i as u32, q(1))]);
        }
    }
}
