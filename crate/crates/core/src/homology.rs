//! Homology presentations of complexes on the window, and the maps they
//! induce on homology.
//!
//! A presentation fixes cycle representatives per degree and a projection
//! sending any cycle to class coordinates.  In a window capped at degree `N`
//! homology is reliable only up to `N − 1`, because the kernel in the top
//! degree would need the truncated differential out of it.

use std::sync::Arc;

use crate::dg::Complex;
use crate::error::Error;
use crate::graded::{BasedModule, Element, GradedMap};
use crate::linalg::{homology_of_pair, PairHomology, SparseVec};
use crate::scalar::{Field, Scalar};
use crate::Result;

pub struct HomologyPresentation {
    pub module: Arc<BasedModule>,
    pub field: Field,
    pub reliable: usize,
    levels: Vec<PairHomology>,
}

impl HomologyPresentation {
    pub fn dim(&self, d: usize) -> usize {
        self.levels.get(d).map(|l| l.dim()).unwrap_or(0)
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.reliable).map(|d| self.dim(d)).collect()
    }

    /// Chosen representative cycle of class `(d, k)`.
    pub fn rep(&self, d: usize, k: usize) -> Element {
        Element {
            module: Arc::clone(&self.module),
            degree: d,
            coords: self.levels[d].reps[k].clone(),
        }
    }

    /// Class coordinates of a cycle.
    pub fn project(&self, e: &Element) -> Result<SparseVec> {
        if e.degree > self.reliable {
            return Err(Error::NotACycle(e.degree));
        }
        self.levels[e.degree].project(&e.coords).ok_or(Error::NotACycle(e.degree))
    }
}

/// Degreewise homology of a complex.
pub fn homology(cx: &Complex) -> Result<HomologyPresentation> {
    let module = Arc::clone(&cx.module);
    let reliable = module.window.reliable();
    let mut levels = Vec::with_capacity(reliable + 1);
    for d in 0..=reliable {
        let dim_v = module.dim(d) as u32;
        let d_in: Vec<SparseVec> = if d == 0 {
            Vec::new()
        } else {
            (0..module.dim(d - 1) as u32).map(|i| cx.d.column(d - 1, i).to_vec()).collect()
        };
        let d_out: Vec<SparseVec> = (0..dim_v).map(|i| cx.d.column(d, i).to_vec()).collect();
        let h = homology_of_pair(&d_in, &d_out, dim_v, cx.field, |j| {
            if d == 0 {
                format!("column {j}")
            } else {
                module.label(d - 1, j as u32).to_string()
            }
        })
        .map_err(|e| match e {
            Error::NotAComplex { witness, .. } => Error::NotAComplex { degree: d - 1, witness },
            other => other,
        })?;
        levels.push(h);
    }
    Ok(HomologyPresentation { module, field: cx.field, reliable, levels })
}

/// A degree-0 map between homology presentations, stored as per-degree
/// columns over the class bases.
#[derive(Debug, Clone)]
pub struct TorMap {
    pub src_dims: Vec<usize>,
    pub tgt_dims: Vec<usize>,
    pub reliable: usize,
    /// blocks[d]: one sparse column per source class
    pub blocks: Vec<Vec<SparseVec>>,
    pub field: Field,
}

impl TorMap {
    pub fn identity(hp: &HomologyPresentation) -> TorMap {
        let reliable = hp.reliable;
        let dims = hp.dims();
        let blocks = (0..=reliable)
            .map(|d| (0..dims[d] as u32).map(|i| vec![(i, hp.field.one())]).collect())
            .collect();
        TorMap { src_dims: dims.clone(), tgt_dims: dims, reliable, blocks, field: hp.field }
    }

    pub fn column(&self, d: usize, i: usize) -> &SparseVec {
        &self.blocks[d][i]
    }

    pub fn apply(&self, d: usize, coords: &SparseVec) -> SparseVec {
        let mut acc: SparseVec = Vec::new();
        for (i, c) in coords {
            acc = crate::linalg::axpy(&acc, c, &self.blocks[d][*i as usize]);
        }
        acc
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &TorMap) -> TorMap {
        let reliable = self.reliable.min(other.reliable);
        let mut blocks = Vec::with_capacity(reliable + 1);
        for d in 0..=reliable {
            let cols = (0..self.src_dims[d])
                .map(|i| other.apply(d, &self.blocks[d][i]))
                .collect();
            blocks.push(cols);
        }
        TorMap {
            src_dims: self.src_dims[..=reliable].to_vec(),
            tgt_dims: other.tgt_dims[..=reliable].to_vec(),
            reliable,
            blocks,
            field: self.field,
        }
    }

    pub fn equals(&self, other: &TorMap) -> bool {
        self.reliable == other.reliable && self.blocks == other.blocks
    }

    pub fn is_identity(&self) -> bool {
        for d in 0..=self.reliable {
            if self.src_dims[d] != self.tgt_dims[d] {
                return false;
            }
            for (i, col) in self.blocks[d].iter().enumerate() {
                if col.len() != 1 || col[0].0 != i as u32 || !col[0].1.is_one() {
                    return false;
                }
            }
        }
        true
    }

    /// Exact inverse; fails with the first non-invertible degree.
    pub fn invert(&self) -> Result<TorMap> {
        let mut blocks = Vec::with_capacity(self.reliable + 1);
        for d in 0..=self.reliable {
            let n = self.src_dims[d];
            if self.tgt_dims[d] != n {
                return Err(Error::NotIso(d));
            }
            let inv = invert_columns(&self.blocks[d], n, self.field).ok_or(Error::NotIso(d))?;
            blocks.push(inv);
        }
        Ok(TorMap {
            src_dims: self.tgt_dims.clone(),
            tgt_dims: self.src_dims.clone(),
            reliable: self.reliable,
            blocks,
            field: self.field,
        })
    }
}

fn invert_columns(cols: &[SparseVec], n: usize, field: Field) -> Option<Vec<SparseVec>> {
    // rref of [M | I] over rows
    let mut rows: Vec<SparseVec> = vec![Vec::new(); n];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col {
            rows[*i as usize].push((j as u32, v.clone()));
        }
    }
    for (i, r) in rows.iter_mut().enumerate() {
        r.sort_by_key(|(j, _)| *j);
        r.push((n as u32 + i as u32, field.one()));
    }
    let (red, pivots, rank) = crate::linalg::rref_rows(rows, 2 * n as u32);
    if rank != n || pivots.iter().take(n).ne((0..n as u32).by_ref().collect::<Vec<_>>().iter()) {
        return None;
    }
    // row with pivot j holds the j-th row of M⁻¹ in the augmented part
    let mut inv_cols: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); n];
    for r in red {
        let piv = r[0].0 as usize;
        for (j, v) in &r[1..] {
            let col = (*j as usize) - n;
            inv_cols[col].push((piv as u32, v.clone()));
        }
    }
    for c in &mut inv_cols {
        c.sort_by_key(|(i, _)| *i);
    }
    Some(inv_cols)
}

/// The map induced on homology by a chain map (degree 0); rejects non-chain
/// maps and non-cycle images with witnesses.
pub fn induced_map(
    src: &HomologyPresentation,
    tgt: &HomologyPresentation,
    f: &GradedMap,
    d_src: &GradedMap,
    d_tgt: &GradedMap,
) -> Result<TorMap> {
    debug_assert_eq!(f.degree, 0);
    let lhs = f.then(d_tgt);
    let rhs = d_src.then(f);
    if let Some((deg, i)) = lhs.first_difference(&rhs) {
        return Err(Error::NotAChainMap { degree: deg, witness: f.src.label(deg, i).to_string() });
    }
    let reliable = src.reliable.min(tgt.reliable);
    let mut blocks = Vec::with_capacity(reliable + 1);
    for d in 0..=reliable {
        let mut cols = Vec::with_capacity(src.dim(d));
        for k in 0..src.dim(d) {
            let img = f.apply(&src.rep(d, k));
            cols.push(tgt.project(&img)?);
        }
        blocks.push(cols);
    }
    Ok(TorMap {
        src_dims: src.dims()[..=reliable].to_vec(),
        tgt_dims: tgt.dims()[..=reliable].to_vec(),
        reliable,
        blocks,
        field: src.field,
    })
}

/// Convenience: is the induced map an isomorphism through degree `upto`?
pub fn induced_iso_upto(
    src: &HomologyPresentation,
    tgt: &HomologyPresentation,
    f: &GradedMap,
    d_src: &GradedMap,
    d_tgt: &GradedMap,
    upto: usize,
) -> Result<bool> {
    let m = induced_map(src, tgt, f, d_src, d_tgt)?;
    for d in 0..=upto.min(m.reliable) {
        let n = m.src_dims[d];
        if m.tgt_dims[d] != n {
            return Ok(false);
        }
        if invert_columns(&m.blocks[d], n, m.field).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{Label, Window};

    #[test]
    fn homology_of_small_complex() {
        // 0 → k·a --0--> k·b --iso--> k·c with d(b) = c: H = k·a in degree 0
        let w = Window::plain(2);
        let field = Field::Rational;
        let m = BasedModule::from_labels(
            w,
            [(0, Label::named("a")), (1, Label::named("b")), (2, Label::named("c"))],
        );
        let mut d = GradedMap::zero(&m, &m, 1, field);
        d.set_column(1, 0, vec![(0, field.one())]);
        let cx = Complex::new(Arc::clone(&m), d);
        let h = homology(&cx).unwrap();
        assert_eq!(h.dims(), vec![1, 0]);
        let rep = h.rep(0, 0);
        assert_eq!(h.project(&rep).unwrap(), vec![(0, field.one())]);
    }

    #[test]
    fn inverse_of_induced_identity() {
        let w = Window::plain(2);
        let field = Field::Rational;
        let m = BasedModule::from_labels(w, [(0, Label::named("a")), (1, Label::named("b"))]);
        let cx = Complex::zero_differential(Arc::clone(&m), field);
        let h = homology(&cx).unwrap();
        let id = TorMap::identity(&h);
        assert!(id.is_identity());
        assert!(id.invert().unwrap().is_identity());
        let f = GradedMap::identity(&m, field);
        let ind = induced_map(&h, &h, &f, &cx.d, &cx.d).unwrap();
        assert!(ind.is_identity());
    }

    #[test]
    fn scaled_map_inverts_exactly() {
        let w = Window::plain(2);
        let field = Field::Rational;
        let m = BasedModule::from_labels(w, [(1, Label::named("u")), (1, Label::named("v"))]);
        let cx = Complex::zero_differential(Arc::clone(&m), field);
        let h = homology(&cx).unwrap();
        let mut f = GradedMap::zero(&m, &m, 0, field);
        f.set_column(1, 0, vec![(0, field.from_i64(2)), (1, field.one())]);
        f.set_column(1, 1, vec![(1, field.from_i64(3))]);
        let ind = induced_map(&h, &h, &f, &cx.d, &cx.d).unwrap();
        let inv = ind.invert().unwrap();
        assert!(ind.then(&inv).is_identity());
        assert!(inv.then(&ind).is_identity());
        // a rank-dropping map is rejected with the offending degree
        let mut g = GradedMap::zero(&m, &m, 0, field);
        g.set_column(1, 0, vec![(0, field.one())]);
        g.set_column(1, 1, vec![(0, field.one())]);
        let ind = induced_map(&h, &h, &g, &cx.d, &cx.d).unwrap();
        assert!(matches!(ind.invert(), Err(Error::NotIso(1))));
    }
}
