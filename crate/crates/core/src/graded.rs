//! Based graded modules, graded maps, tensor products, suspension, and the
//! Koszul sign engine.
//!
//! Every structural sign in the crate is produced here, by [`koszul`] (a
//! map or symbol of odd degree moving past a graded element) and
//! [`perm_sign`] (the sign of a permutation of graded tensor factors).
//! Higher layers never write a literal sign of their own.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::linalg::{axpy, SparseVec, VecBuilder};
use crate::scalar::{Field, Scalar};
use crate::Result;

/// `(-1)^{ab}` — the Koszul rule for moving a degree-`a` symbol past a
/// degree-`b` one.
pub fn koszul(a: i64, b: i64) -> i64 {
    if (a & 1) == 1 && (b & 1) == 1 {
        -1
    } else {
        1
    }
}

/// Sign for conjugating a map of the given degree by a (de)suspension: the
/// shift symbol is odd, so this is `(-1)^{|f|}`.
pub fn shift_conjugation_sign(map_degree: i64) -> i64 {
    koszul(map_degree, 1)
}

/// Koszul sign of the permutation placing source factor `perm[k]` at
/// position `k`; `degrees` are the degrees of the source factors.
pub fn perm_sign(degrees: &[i64], perm: &[usize]) -> i64 {
    debug_assert_eq!(degrees.len(), perm.len());
    let mut sign = 1;
    for k in 0..perm.len() {
        for l in (k + 1)..perm.len() {
            if perm[k] > perm[l] {
                sign *= koszul(degrees[perm[k]], degrees[perm[l]]);
            }
        }
    }
    sign
}

/// Truncation window: all modules live in degrees `0..=degree_cap`; the word
/// cap only constrains bar/cobar word construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Window {
    pub degree_cap: usize,
    pub word_cap: Option<usize>,
}

impl Window {
    pub fn new(degree_cap: usize, word_cap: Option<usize>) -> Self {
        Window { degree_cap, word_cap }
    }

    pub fn plain(degree_cap: usize) -> Self {
        Window { degree_cap, word_cap: None }
    }

    pub fn same(&self, other: &Window) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::WindowMismatch)
        }
    }

    /// Homology computed in this window is reliable up to `degree_cap - 1`.
    pub fn reliable(&self) -> usize {
        self.degree_cap.saturating_sub(1)
    }
}

/// Structured basis label.  Labels carry provenance (generator names, tensor
/// words, bar words) so tests can inspect them.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    /// The unit of an algebra, the ground field generator, and the empty word.
    One,
    Named(Arc<str>),
    Pair(Arc<Label>, Arc<Label>),
    Word(Arc<Vec<Label>>),
    Shift(Arc<Label>, i16),
    Class(u32),
}

impl Label {
    pub fn named(s: &str) -> Label {
        Label::Named(Arc::from(s))
    }

    pub fn pair(a: Label, b: Label) -> Label {
        Label::Pair(Arc::new(a), Arc::new(b))
    }

    pub fn word(letters: Vec<Label>) -> Label {
        if letters.is_empty() {
            Label::One
        } else {
            Label::Word(Arc::new(letters))
        }
    }

    /// Letters of a word label; the unit is the empty word.
    pub fn letters(&self) -> &[Label] {
        match self {
            Label::Word(w) => w,
            Label::One => &[],
            _ => std::slice::from_ref(self),
        }
    }

    pub fn shifted(&self, e: i16) -> Label {
        match self {
            Label::Shift(inner, f) if f + e == 0 => (**inner).clone(),
            _ => Label::Shift(Arc::new(self.clone()), e),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::One => write!(f, "1"),
            Label::Named(s) => write!(f, "{s}"),
            Label::Pair(a, b) => {
                let wrap = |l: &Label| matches!(l, Label::Pair(..));
                if wrap(a) {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                write!(f, "⊗")?;
                if wrap(b) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Label::Word(w) => {
                write!(f, "[")?;
                for (i, l) in w.iter().enumerate() {
                    if i > 0 {
                        write!(f, "|")?;
                    }
                    write!(f, "{l}")?;
                }
                write!(f, "]")
            }
            Label::Shift(l, e) => {
                if *e >= 0 {
                    write!(f, "s{}({l})", if *e == 1 { String::new() } else { format!("^{e}") })
                } else {
                    write!(f, "s^{e}({l})")
                }
            }
            Label::Class(i) => write!(f, "class{i}"),
        }
    }
}

/// One graded level of a based module.
#[derive(Debug)]
struct Level {
    labels: Vec<Label>,
    index: HashMap<Label, u32>,
}

impl Level {
    fn new(mut labels: Vec<Label>) -> Level {
        labels.sort();
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i as u32)).collect();
        Level { labels, index }
    }
}

/// A degreewise finite free module with an ordered, labeled basis, restricted
/// to a truncation window.  Basis labels in each degree are sorted, so the
/// ordering (and everything deterministic downstream) is reproducible.
#[derive(Debug)]
pub struct BasedModule {
    pub window: Window,
    levels: Vec<Level>,
}

impl PartialEq for BasedModule {
    fn eq(&self, other: &Self) -> bool {
        self.window == other.window
            && self.levels.len() == other.levels.len()
            && self
                .levels
                .iter()
                .zip(&other.levels)
                .all(|(a, b)| a.labels == b.labels)
    }
}

impl Eq for BasedModule {}

impl BasedModule {
    pub fn from_labels(window: Window, labels: impl IntoIterator<Item = (usize, Label)>) -> Arc<Self> {
        let mut per: Vec<Vec<Label>> = vec![Vec::new(); window.degree_cap + 1];
        for (d, l) in labels {
            if d <= window.degree_cap {
                per[d].push(l);
            }
        }
        let levels: Vec<Level> = per.into_iter().map(Level::new).collect();
        for lv in &levels {
            debug_assert_eq!(lv.labels.len(), lv.index.len(), "duplicate labels in a degree");
        }
        Arc::new(BasedModule { window, levels })
    }

    /// The ground field as a module: one generator `1` in degree 0.
    pub fn ground(window: Window) -> Arc<Self> {
        Self::from_labels(window, [(0, Label::One)])
    }

    pub fn dim(&self, d: usize) -> usize {
        self.levels.get(d).map(|l| l.labels.len()).unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.levels.iter().map(|l| l.labels.len()).sum()
    }

    pub fn labels(&self, d: usize) -> &[Label] {
        self.levels.get(d).map(|l| l.labels.as_slice()).unwrap_or(&[])
    }

    pub fn label(&self, d: usize, i: u32) -> &Label {
        &self.levels[d].labels[i as usize]
    }

    pub fn index_of(&self, d: usize, l: &Label) -> Option<u32> {
        self.levels.get(d).and_then(|lv| lv.index.get(l)).copied()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.window.degree_cap).filter(|d| self.dim(*d) > 0)
    }

    pub fn is_ground(&self) -> bool {
        self.total_dim() == 1 && self.dim(0) == 1 && self.labels(0)[0] == Label::One
    }
}

/// An element of a based module, homogeneous of one degree.
#[derive(Debug, Clone)]
pub struct Element {
    pub module: Arc<BasedModule>,
    pub degree: usize,
    pub coords: SparseVec,
}

impl Element {
    pub fn zero(module: &Arc<BasedModule>, degree: usize) -> Element {
        Element { module: Arc::clone(module), degree, coords: Vec::new() }
    }

    pub fn basis(module: &Arc<BasedModule>, degree: usize, i: u32, field: Field) -> Element {
        Element { module: Arc::clone(module), degree, coords: vec![(i, field.one())] }
    }

    pub fn from_label(module: &Arc<BasedModule>, degree: usize, l: &Label, field: Field) -> Option<Element> {
        module.index_of(degree, l).map(|i| Self::basis(module, degree, i, field))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&self, other: &Element) -> Element {
        debug_assert_eq!(self.degree, other.degree);
        Element {
            module: Arc::clone(&self.module),
            degree: self.degree,
            coords: crate::linalg::add_vec(&self.coords, &other.coords),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element {
            module: Arc::clone(&self.module),
            degree: self.degree,
            coords: crate::linalg::scale_vec(&self.coords, c),
        }
    }

    pub fn scale_sign(&self, s: i64) -> Element {
        if s == 1 {
            self.clone()
        } else {
            Element {
                module: Arc::clone(&self.module),
                degree: self.degree,
                coords: self.coords.iter().map(|(i, v)| (*i, v.neg())).collect(),
            }
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, v) in &self.coords {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}·{}", v, self.module.label(self.degree, *i))?;
        }
        Ok(())
    }
}

fn modules_match(a: &Arc<BasedModule>, b: &Arc<BasedModule>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A degree-homogeneous linear map stored as sparse per-degree blocks.
#[derive(Debug, Clone)]
pub struct GradedMap {
    pub src: Arc<BasedModule>,
    pub tgt: Arc<BasedModule>,
    pub degree: i32,
    pub field: Field,
    /// `blocks[d]`: columns for the sources in degree `d`; an empty vector is
    /// the zero block.
    blocks: Vec<Vec<SparseVec>>,
}

impl GradedMap {
    pub fn zero(src: &Arc<BasedModule>, tgt: &Arc<BasedModule>, degree: i32, field: Field) -> GradedMap {
        let blocks = vec![Vec::new(); src.window.degree_cap + 1];
        GradedMap { src: Arc::clone(src), tgt: Arc::clone(tgt), degree, field, blocks }
    }

    pub fn identity(m: &Arc<BasedModule>, field: Field) -> GradedMap {
        let mut out = Self::zero(m, m, 0, field);
        for d in 0..=m.window.degree_cap {
            let n = m.dim(d);
            if n > 0 {
                out.blocks[d] = (0..n as u32).map(|i| vec![(i, field.one())]).collect();
            }
        }
        out
    }

    /// Build from a function producing each column.
    pub fn from_fn(
        src: &Arc<BasedModule>,
        tgt: &Arc<BasedModule>,
        degree: i32,
        field: Field,
        mut f: impl FnMut(usize, u32) -> SparseVec,
    ) -> GradedMap {
        let mut out = Self::zero(src, tgt, degree, field);
        for d in 0..=src.window.degree_cap {
            let td = d as i64 + degree as i64;
            if td < 0 || td > tgt.window.degree_cap as i64 {
                continue;
            }
            let n = src.dim(d);
            if n == 0 {
                continue;
            }
            let cols: Vec<SparseVec> = (0..n as u32).map(|i| f(d, i)).collect();
            if cols.iter().any(|c| !c.is_empty()) {
                out.blocks[d] = cols;
            }
        }
        out
    }

    pub fn set_column(&mut self, d: usize, i: u32, col: SparseVec) {
        let n = self.src.dim(d);
        if self.blocks[d].is_empty() {
            if col.is_empty() {
                return;
            }
            self.blocks[d] = vec![Vec::new(); n];
        }
        self.blocks[d][i as usize] = col;
    }

    pub fn column(&self, d: usize, i: u32) -> &[(u32, Scalar)] {
        static EMPTY: &[(u32, Scalar)] = &[];
        match self.blocks.get(d) {
            Some(b) if !b.is_empty() => &b[i as usize],
            _ => EMPTY,
        }
    }

    pub fn target_degree(&self, d: usize) -> Option<usize> {
        let td = d as i64 + self.degree as i64;
        if td < 0 || td > self.tgt.window.degree_cap as i64 {
            None
        } else {
            Some(td as usize)
        }
    }

    pub fn apply(&self, e: &Element) -> Element {
        debug_assert!(modules_match(&e.module, &self.src), "element not in source module");
        let td = match self.target_degree(e.degree) {
            Some(td) => td,
            None => return Element::zero(&self.tgt, 0),
        };
        let mut acc: SparseVec = Vec::new();
        for (i, v) in &e.coords {
            acc = axpy(&acc, v, &self.column(e.degree, *i).to_vec());
        }
        Element { module: Arc::clone(&self.tgt), degree: td, coords: acc }
    }

    /// `other ∘ self` (apply `self` first).
    pub fn then(&self, other: &GradedMap) -> GradedMap {
        debug_assert!(modules_match(&self.tgt, &other.src), "composition mismatch");
        let mut out = GradedMap::zero(&self.src, &other.tgt, self.degree + other.degree, self.field);
        for d in 0..=self.src.window.degree_cap {
            let mid = match self.target_degree(d) {
                Some(m) => m,
                None => continue,
            };
            if out.target_degree(d).is_none() {
                continue;
            }
            let n = self.src.dim(d);
            if n == 0 || self.blocks[d].is_empty() {
                continue;
            }
            let mut cols = Vec::with_capacity(n);
            let mut nonzero = false;
            for i in 0..n as u32 {
                let mut acc: SparseVec = Vec::new();
                for (j, v) in self.column(d, i) {
                    acc = axpy(&acc, v, &other.column(mid, *j).to_vec());
                }
                nonzero |= !acc.is_empty();
                cols.push(acc);
            }
            if nonzero {
                out.blocks[d] = cols;
            }
        }
        out
    }

    pub fn add(&self, other: &GradedMap) -> GradedMap {
        debug_assert!(modules_match(&self.src, &other.src) && modules_match(&self.tgt, &other.tgt));
        debug_assert_eq!(self.degree, other.degree);
        let mut out = GradedMap::zero(&self.src, &self.tgt, self.degree, self.field);
        for d in 0..=self.src.window.degree_cap {
            let n = self.src.dim(d);
            if n == 0 {
                continue;
            }
            if self.blocks[d].is_empty() && other.blocks[d].is_empty() {
                continue;
            }
            let mut cols = Vec::with_capacity(n);
            let mut nonzero = false;
            for i in 0..n as u32 {
                let c = crate::linalg::add_vec(&self.column(d, i).to_vec(), &other.column(d, i).to_vec());
                nonzero |= !c.is_empty();
                cols.push(c);
            }
            if nonzero {
                out.blocks[d] = cols;
            }
        }
        out
    }

    pub fn neg(&self) -> GradedMap {
        self.scale_sign(-1)
    }

    pub fn sub(&self, other: &GradedMap) -> GradedMap {
        self.add(&other.neg())
    }

    pub fn scale_sign(&self, s: i64) -> GradedMap {
        match s {
            1 => self.clone(),
            -1 => {
                let mut out = self.clone();
                for b in &mut out.blocks {
                    for c in b {
                        for (_, v) in c {
                            *v = v.neg();
                        }
                    }
                }
                out
            }
            _ => self.scale(&self.field.from_i64(s)),
        }
    }

    pub fn scale(&self, c: &Scalar) -> GradedMap {
        let mut out = self.clone();
        if c.is_zero() {
            return GradedMap::zero(&self.src, &self.tgt, self.degree, self.field);
        }
        for b in &mut out.blocks {
            for col in b {
                for (_, v) in col {
                    *v = v.mul(c);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.iter().all(|c| c.is_empty()))
    }

    /// First basis element on which `self` and `other` differ, scanning
    /// degrees then indices in order.
    pub fn first_difference(&self, other: &GradedMap) -> Option<(usize, u32)> {
        debug_assert_eq!(self.degree, other.degree);
        for d in 0..=self.src.window.degree_cap {
            for i in 0..self.src.dim(d) as u32 {
                if self.column(d, i) != other.column(d, i) {
                    return Some((d, i));
                }
            }
        }
        None
    }

    pub fn equals(&self, other: &GradedMap) -> bool {
        self.degree == other.degree && self.first_difference(other).is_none()
    }

    /// Does this map send every basis element to zero above `max_d`?  Used by
    /// checks that are only meaningful on part of the window.
    pub fn columns(&self) -> impl Iterator<Item = (usize, u32, &SparseVec)> + '_ {
        self.blocks.iter().enumerate().flat_map(|(d, b)| {
            b.iter().enumerate().filter(|(_, c)| !c.is_empty()).map(move |(i, c)| (d, i as u32, c))
        })
    }
}

impl PartialEq for GradedMap {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && modules_match(&self.src, &other.src)
            && modules_match(&self.tgt, &other.tgt)
            && self.equals(other)
    }
}

/// A tensor-product module together with the decomposition tables needed to
/// apply maps factorwise.
#[derive(Debug)]
pub struct TensorModule {
    pub left: Arc<BasedModule>,
    pub right: Arc<BasedModule>,
    pub module: Arc<BasedModule>,
    /// per degree, parallel to `module.labels(d)`: (left degree, left index, right index)
    decomp: Vec<Vec<(usize, u32, u32)>>,
}

impl TensorModule {
    pub fn decompose(&self, d: usize, i: u32) -> (usize, u32, usize, u32) {
        let (ld, li, ri) = self.decomp[d][i as usize];
        (ld, li, d - ld, ri)
    }

    pub fn index_of_pair(&self, ld: usize, li: u32, rd: usize, ri: u32) -> Option<(usize, u32)> {
        let d = ld + rd;
        if d > self.module.window.degree_cap {
            return None;
        }
        let l = Label::Pair(
            Arc::new(self.left.label(ld, li).clone()),
            Arc::new(self.right.label(rd, ri).clone()),
        );
        self.module.index_of(d, &l).map(|i| (d, i))
    }
}

/// Tensor product of based modules; degrees above the window are silently
/// truncated.  Labels are ordered pairs.
pub fn tensor(a: &Arc<BasedModule>, b: &Arc<BasedModule>) -> Result<Arc<TensorModule>> {
    a.window.same(&b.window)?;
    let window = a.window;
    let mut labels: Vec<(usize, Label)> = Vec::new();
    for da in 0..=window.degree_cap {
        for db in 0..=(window.degree_cap - da) {
            for la in a.labels(da) {
                for lb in b.labels(db) {
                    labels.push((da + db, Label::Pair(Arc::new(la.clone()), Arc::new(lb.clone()))));
                }
            }
        }
    }
    let module = BasedModule::from_labels(window, labels);
    let mut decomp: Vec<Vec<(usize, u32, u32)>> = Vec::with_capacity(window.degree_cap + 1);
    for d in 0..=window.degree_cap {
        let mut row = Vec::with_capacity(module.dim(d));
        for l in module.labels(d) {
            let (la, lb) = match l {
                Label::Pair(x, y) => (&**x, &**y),
                _ => unreachable!(),
            };
            let mut found = None;
            for da in 0..=d {
                if let (Some(ia), Some(ib)) = (a.index_of(da, la), b.index_of(d - da, lb)) {
                    found = Some((da, ia, ib));
                    break;
                }
            }
            row.push(found.expect("tensor label decomposes"));
        }
        decomp.push(row);
    }
    Ok(Arc::new(TensorModule { left: Arc::clone(a), right: Arc::clone(b), module, decomp }))
}

/// `(f ⊗ g)(m ⊗ n) = (-1)^{|g||m|} f(m) ⊗ g(n)`.
pub fn tensor_map(f: &GradedMap, g: &GradedMap, src: &TensorModule, tgt: &TensorModule) -> GradedMap {
    debug_assert!(modules_match(&src.left, &f.src) && modules_match(&src.right, &g.src));
    debug_assert!(modules_match(&tgt.left, &f.tgt) && modules_match(&tgt.right, &g.tgt));
    GradedMap::from_fn(
        &src.module,
        &tgt.module,
        f.degree + g.degree,
        f.field,
        |d, i| {
            let (ld, li, rd, ri) = src.decompose(d, i);
            let sign = koszul(g.degree as i64, ld as i64);
            let fcol = f.column(ld, li);
            let gcol = g.column(rd, ri);
            if fcol.is_empty() || gcol.is_empty() {
                return Vec::new();
            }
            let fld = (ld as i64 + f.degree as i64) as usize;
            let grd = (rd as i64 + g.degree as i64) as usize;
            let mut out = VecBuilder::new();
            for (fi, fv) in fcol {
                for (gi, gv) in gcol {
                    if let Some((_, ti)) = tgt.index_of_pair(fld, *fi, grd, *gi) {
                        out.add(ti, fv.mul(gv).scaled(sign));
                    }
                }
            }
            out.build()
        },
    )
}

/// The symmetry `m ⊗ n ↦ (-1)^{|m||n|} n ⊗ m`.
pub fn swap(src: &TensorModule, tgt: &TensorModule, field: Field) -> GradedMap {
    debug_assert!(modules_match(&src.left, &tgt.right) && modules_match(&src.right, &tgt.left));
    GradedMap::from_fn(&src.module, &tgt.module, 0, field, |d, i| {
        let (ld, li, rd, ri) = src.decompose(d, i);
        let sign = koszul(ld as i64, rd as i64);
        match tgt.index_of_pair(rd, ri, ld, li) {
            Some((_, ti)) => vec![(ti, field.from_i64(sign))],
            None => Vec::new(),
        }
    })
}

/// A relabeling isomorphism built from a label transform; carries no signs.
pub fn relabel_iso(
    src: &Arc<BasedModule>,
    tgt: &Arc<BasedModule>,
    field: Field,
    mut f: impl FnMut(&Label) -> Label,
) -> GradedMap {
    GradedMap::from_fn(src, tgt, 0, field, |d, i| {
        let l = f(src.label(d, i));
        match tgt.index_of(d, &l) {
            Some(ti) => vec![(ti, field.one())],
            None => Vec::new(),
        }
    })
}

/// Canonical iso `k ⊗ M ≅ M`.
pub fn unit_left(t: &TensorModule, field: Field) -> GradedMap {
    debug_assert!(t.left.is_ground());
    GradedMap::from_fn(&t.module, &t.right, 0, field, |d, i| {
        let (_, _, rd, ri) = t.decompose(d, i);
        debug_assert_eq!(rd, d);
        vec![(ri, field.one())]
    })
}

/// Canonical iso `M ⊗ k ≅ M`.
pub fn unit_right(t: &TensorModule, field: Field) -> GradedMap {
    debug_assert!(t.right.is_ground());
    GradedMap::from_fn(&t.module, &t.left, 0, field, |d, i| {
        let (ld, li, _, _) = t.decompose(d, i);
        debug_assert_eq!(ld, d);
        vec![(li, field.one())]
    })
}

/// Canonical iso `(A ⊗ B) ⊗ C ≅ A ⊗ (B ⊗ C)` (sign-free relabeling).
pub fn assoc_right(src: &Arc<BasedModule>, tgt: &Arc<BasedModule>, field: Field) -> GradedMap {
    relabel_iso(src, tgt, field, |l| match l {
        Label::Pair(ab, c) => match &**ab {
            Label::Pair(a, b) => Label::Pair(
                Arc::clone(a),
                Arc::new(Label::Pair(Arc::clone(b), Arc::clone(c)))),
            _ => unreachable!("source is not left-associated"),
        },
        _ => unreachable!(),
    })
}

/// Degree shift: relabels the basis with degree moved by `e ∈ {+1, -1}`,
/// returning the shifted module and the structural map `M → M[e]` (the
/// suspension symbol itself; it carries no sign, signs arise on conjugation).
pub fn shift(m: &Arc<BasedModule>, e: i32, field: Field) -> Result<(Arc<BasedModule>, GradedMap)> {
    debug_assert!(e == 1 || e == -1);
    if e == -1 && m.dim(0) > 0 {
        return Err(Error::NegativeDegree(format!(
            "cannot desuspend: degree-0 element {}",
            m.label(0, 0)
        )));
    }
    let mut labels = Vec::new();
    for d in 0..=m.window.degree_cap {
        let nd = d as i64 + e as i64;
        if nd < 0 || nd > m.window.degree_cap as i64 {
            continue;
        }
        for l in m.labels(d) {
            labels.push((nd as usize, l.shifted(e as i16)));
        }
    }
    let shifted = BasedModule::from_labels(m.window, labels);
    let to = GradedMap::from_fn(m, &shifted, e, field, |d, i| {
        let l = m.label(d, i).shifted(e as i16);
        match shifted.index_of((d as i64 + e as i64) as usize, &l) {
            Some(ti) => vec![(ti, field.one())],
            None => Vec::new(),
        }
    });
    Ok((shifted, to))
}

/// Conjugate a self-map by the shift: `f[e] = s f s^{-1}` with the Koszul
/// sign `(-1)^{|f|}` for moving the odd shift symbol past `f`.
pub fn conjugate_by_shift(
    f: &GradedMap,
    to_shifted_src: &GradedMap,
    to_shifted_tgt: &GradedMap,
    inv_shifted_src: &GradedMap,
) -> GradedMap {
    let sign = shift_conjugation_sign(f.degree as i64);
    inv_shifted_src.then(f).then(to_shifted_tgt).scale_sign(sign)
}

/// Inverse of a structural shift map (also sign-free).
pub fn invert_relabel(iso: &GradedMap) -> GradedMap {
    let mut out = GradedMap::zero(&iso.tgt, &iso.src, -iso.degree, iso.field);
    for (d, i, col) in iso.columns() {
        debug_assert_eq!(col.len(), 1);
        let (j, v) = &col[0];
        debug_assert!(v.is_one());
        let td = (d as i64 + iso.degree as i64) as usize;
        out.set_column(td, *j, vec![(i, iso.field.one())]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module(window: Window, gens: &[(usize, &str)]) -> Arc<BasedModule> {
        BasedModule::from_labels(
            window,
            gens.iter().map(|(d, s)| (*d, Label::named(s))).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn koszul_rule() {
        assert_eq!(koszul(0, 5), 1);
        assert_eq!(koszul(1, 1), -1);
        assert_eq!(koszul(2, 3), 1);
        assert_eq!(koszul(3, 3), -1);
    }

    #[test]
    fn permutation_signs() {
        // identity permutation
        assert_eq!(perm_sign(&[1, 1], &[0, 1]), 1);
        // transposition of two odd factors
        assert_eq!(perm_sign(&[1, 1], &[1, 0]), -1);
        // degree (0, d) swap is free
        assert_eq!(perm_sign(&[0, 7], &[1, 0]), 1);
        // (2 3 5 4) pattern below in products::perm tests
        assert_eq!(perm_sign(&[0, 1, 0, 1, 0, 0], &[0, 3, 1, 4, 2, 5]), -1);
    }

    #[test]
    fn tensor_labels_and_truncation() {
        let w = Window::plain(3);
        let a = module(w, &[(0, "1"), (2, "x")]);
        let b = module(w, &[(0, "1"), (2, "y")]);
        let t = tensor(&a, &b).unwrap();
        assert_eq!(t.module.dim(0), 1);
        assert_eq!(t.module.dim(2), 2);
        // degree 4 = x⊗y is silently truncated
        assert_eq!(t.module.dim(3), 0);
        assert_eq!(t.module.total_dim(), 3);
    }

    #[test]
    fn tensor_map_identity_and_koszul_sign() {
        let w = Window::plain(4);
        let a = module(w, &[(1, "a")]);
        let t = tensor(&a, &a).unwrap();
        let field = Field::Rational;
        let id = GradedMap::identity(&a, field);
        let idid = tensor_map(&id, &id, &t, &t);
        assert!(idid.equals(&GradedMap::identity(&t.module, field)));

        // f, g of degree 1 on degree-1 elements: (f⊗g)(m⊗n) = −f(m)⊗g(n)
        let b = module(w, &[(2, "fa")]);
        let f = GradedMap::from_fn(&a, &b, 1, field, |_, _| vec![(0, field.one())]);
        let tb = tensor(&b, &b).unwrap();
        let fg = tensor_map(&f, &f, &t, &tb);
        let e = Element::basis(&t.module, 2, 0, field);
        let out = fg.apply(&e);
        assert_eq!(out.coords, vec![(0, field.from_i64(-1))]);
    }

    #[test]
    fn tensor_map_composition_sign() {
        // (f⊗g)∘(f'⊗g') = (−1)^{|g||f'|}(ff')⊗(gg') on a seeded catalog of maps
        let w = Window::plain(4);
        let field = Field::Rational;
        let m0 = module(w, &[(1, "u"), (2, "v")]);
        let m1 = module(w, &[(2, "p"), (3, "q")]);
        let m2 = module(w, &[(3, "r"), (4, "s")]);
        let mk = |src: &Arc<BasedModule>, tgt: &Arc<BasedModule>, deg: i32, c: i64| {
            GradedMap::from_fn(src, tgt, deg, field, |d, i| {
                let td = (d as i64 + deg as i64) as usize;
                if (tgt.dim(td)) > 0 {
                    vec![(i.min(tgt.dim(td) as u32 - 1), field.from_i64(c + d as i64))]
                } else {
                    Vec::new()
                }
            })
        };
        let fp = mk(&m0, &m1, 1, 2); // f'
        let gp = mk(&m0, &m1, 1, 3); // g'
        let f = mk(&m1, &m2, 1, 5);
        let g = mk(&m1, &m2, 1, 7);
        let t00 = tensor(&m0, &m0).unwrap();
        let t11 = tensor(&m1, &m1).unwrap();
        let t22 = tensor(&m2, &m2).unwrap();
        let lhs = tensor_map(&fp, &gp, &t00, &t11).then(&tensor_map(&f, &g, &t11, &t22));
        let sign = koszul(g.degree as i64, fp.degree as i64);
        let rhs = tensor_map(&fp.then(&f), &gp.then(&g), &t00, &t22).scale_sign(sign);
        assert!(lhs.equals(&rhs));
    }

    #[test]
    fn swap_signs_and_involution() {
        let w = Window::plain(4);
        let field = Field::Rational;
        let a = module(w, &[(0, "1"), (1, "a")]);
        let b = module(w, &[(1, "b"), (2, "c")]);
        let ab = tensor(&a, &b).unwrap();
        let ba = tensor(&b, &a).unwrap();
        let s = swap(&ab, &ba, field);
        let s_back = swap(&ba, &ab, field);
        // degree (0, d): sign +1
        let i = ab.index_of_pair(0, 0, 1, 0).unwrap();
        let e = Element::basis(&ab.module, 1, i.1, field);
        let se = s.apply(&e);
        assert_eq!(se.coords[0].1, field.one());
        // degree (1,1): sign −1
        let i = ab.index_of_pair(1, 0, 1, 0).unwrap();
        let e = Element::basis(&ab.module, 2, i.1, field);
        assert_eq!(s.apply(&e).coords[0].1, field.from_i64(-1));
        // swap ∘ swap = id
        assert!(s.then(&s_back).equals(&GradedMap::identity(&ab.module, field)));
    }

    #[test]
    fn shift_and_unshift() {
        let w = Window::plain(3);
        let field = Field::Rational;
        let m = module(w, &[(1, "x"), (2, "y")]);
        let (down, to_down) = shift(&m, -1, field).unwrap();
        assert_eq!(down.dim(0), 1);
        assert_eq!(down.dim(1), 1);
        // shift then unshift = id
        let (up, to_up) = shift(&down, 1, field).unwrap();
        assert_eq!(&*up, &*m);
        let round = to_down.then(&to_up);
        // maps agree with the identity after matching targets structurally
        let id = GradedMap::identity(&m, field);
        for d in 1..=2usize {
            for i in 0..m.dim(d) as u32 {
                assert_eq!(round.column(d, i), id.column(d, i));
            }
        }
        // desuspending a module with degree-0 generators fails
        let bad = module(w, &[(0, "z")]);
        assert!(matches!(shift(&bad, -1, field), Err(Error::NegativeDegree(_))));
    }

    #[test]
    fn conjugation_sign_for_odd_maps() {
        // moving the shift past a degree-3 element: the conjugated map picks
        // up (−1)^{|f|}; for f = d of degree 1 this is −1
        assert_eq!(shift_conjugation_sign(1), -1);
        assert_eq!(shift_conjugation_sign(2), 1);
        assert_eq!(shift_conjugation_sign(3), -1);
    }

    #[test]
    fn unit_isos() {
        let w = Window::plain(2);
        let field = Field::Rational;
        let k = BasedModule::ground(w);
        let m = module(w, &[(0, "1"), (2, "x")]);
        let km = tensor(&k, &m).unwrap();
        let mk = tensor(&m, &k).unwrap();
        let ul = unit_left(&km, field);
        let ur = unit_right(&mk, field);
        assert!(ul.then(&invert_relabel(&ul)).equals(&GradedMap::identity(&km.module, field)));
        assert!(ur.then(&invert_relabel(&ur)).equals(&GradedMap::identity(&mk.module, field)));
    }
}

/// Restrict a module to a smaller window.  Labels within each surviving
/// degree keep their order, so indices are stable under restriction.
pub fn restrict_module(m: &Arc<BasedModule>, window: Window) -> Arc<BasedModule> {
    debug_assert!(window.degree_cap <= m.window.degree_cap);
    let mut labels = Vec::new();
    for d in 0..=window.degree_cap {
        for l in m.labels(d) {
            labels.push((d, l.clone()));
        }
    }
    BasedModule::from_labels(window, labels)
}

impl GradedMap {
    /// Restrict to smaller-window copies of the source and target modules.
    pub fn restricted(&self, new_src: &Arc<BasedModule>, new_tgt: &Arc<BasedModule>) -> GradedMap {
        GradedMap::from_fn(new_src, new_tgt, self.degree, self.field, |d, i| {
            debug_assert_eq!(new_src.label(d, i), self.src.label(d, i));
            self.column(d, i)
                .iter()
                .filter(|(t, _)| {
                    let td = (d as i64 + self.degree as i64) as usize;
                    (*t as usize) < new_tgt.dim(td)
                })
                .cloned()
                .collect()
        })
    }
}

