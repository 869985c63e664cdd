//! Linear solving for unknown graded maps.
//!
//! All three homotopy notions, the contracting homotopy of the cobar-bar
//! resolution, and the seeded twisting-cochain generator lead to systems that
//! are affine in the unknown map, so they share this machinery: an
//! [`UnknownMap`] enumerates solver variables for the blocks of a map of
//! fixed degree, [`AffElement`] is an element whose coordinates are affine
//! expressions in those variables, and [`MapSolver`] collects equations and
//! hands them to the sparse exact solver.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::dg::{check_dga_homotopy, check_dgc_homotopy, check_tc_homotopy, DgAlgebra, DgCoalgebra};
use crate::error::Error;
use crate::graded::{koszul, BasedModule, Element, GradedMap, TensorModule};
use crate::linalg::{solve_affine_seeded, VecBuilder};
use crate::scalar::{Field, Scalar};
use crate::Result;

/// An unknown graded map of fixed degree; every in-window matrix entry is a
/// solver variable.
pub struct UnknownMap {
    pub src: Arc<BasedModule>,
    pub tgt: Arc<BasedModule>,
    pub degree: i32,
    pub field: Field,
    offsets: Vec<Option<u32>>,
    pub nvars: u32,
}

impl UnknownMap {
    pub fn new(src: &Arc<BasedModule>, tgt: &Arc<BasedModule>, degree: i32, field: Field) -> Self {
        let cap = src.window.degree_cap;
        let mut offsets = vec![None; cap + 1];
        let mut n = 0u32;
        for d in 0..=cap {
            let td = d as i64 + degree as i64;
            if td < 0 || td > tgt.window.degree_cap as i64 {
                continue;
            }
            let block = src.dim(d) as u32 * tgt.dim(td as usize) as u32;
            if block > 0 {
                offsets[d] = Some(n);
                n += block;
            }
        }
        UnknownMap { src: Arc::clone(src), tgt: Arc::clone(tgt), degree, field, offsets, nvars: n }
    }

    pub fn var(&self, d: usize, i: u32, t: u32) -> Option<u32> {
        let off = self.offsets.get(d).copied().flatten()?;
        let td = (d as i64 + self.degree as i64) as usize;
        Some(off + i * self.tgt.dim(td) as u32 + t)
    }

    /// Apply the unknown map to a known element.
    pub fn apply(&self, e: &Element) -> AffElement {
        let td = e.degree as i64 + self.degree as i64;
        if td < 0 || td > self.tgt.window.degree_cap as i64 {
            return AffElement::zero(&self.tgt, 0, self.field);
        }
        let td = td as usize;
        let mut out = AffElement::zero(&self.tgt, td, self.field);
        for (i, c) in &e.coords {
            for t in 0..self.tgt.dim(td) as u32 {
                if let Some(v) = self.var(e.degree, *i, t) {
                    out.slot_mut(t).add_var(v, c.clone());
                }
            }
        }
        out
    }

    /// Build the concrete map from a solved assignment.
    pub fn realize(&self, solution: &BTreeMap<u32, Scalar>) -> GradedMap {
        GradedMap::from_fn(&self.src, &self.tgt, self.degree, self.field, |d, i| {
            let td = (d as i64 + self.degree as i64) as usize;
            let mut col = Vec::new();
            for t in 0..self.tgt.dim(td) as u32 {
                if let Some(v) = self.var(d, i, t) {
                    if let Some(s) = solution.get(&v) {
                        if !s.is_zero() {
                            col.push((t, s.clone()));
                        }
                    }
                }
            }
            col
        })
    }
}

/// An affine expression `constant + Σ coeff · var`.
#[derive(Debug, Clone, Default)]
pub struct LinExpr {
    pub constant: Option<Scalar>,
    pub vars: BTreeMap<u32, Scalar>,
}

impl LinExpr {
    pub fn add_const(&mut self, c: Scalar) {
        if c.is_zero() {
            return;
        }
        self.constant = Some(match self.constant.take() {
            None => c,
            Some(k) => k.add(&c),
        });
    }

    pub fn add_var(&mut self, v: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.vars.entry(v) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.as_ref().map_or(true, |c| c.is_zero()) && self.vars.is_empty()
    }
}

/// A homogeneous element with affine-expression coordinates.
#[derive(Debug, Clone)]
pub struct AffElement {
    pub module: Arc<BasedModule>,
    pub degree: usize,
    pub slots: BTreeMap<u32, LinExpr>,
}

impl AffElement {
    pub fn zero(module: &Arc<BasedModule>, degree: usize, _field: Field) -> AffElement {
        AffElement { module: Arc::clone(module), degree, slots: BTreeMap::new() }
    }

    pub fn from_element(e: &Element) -> AffElement {
        let mut out = AffElement::zero(&e.module, e.degree, Field::Rational);
        for (i, c) in &e.coords {
            out.slot_mut(*i).add_const(c.clone());
        }
        out
    }

    pub fn slot_mut(&mut self, i: u32) -> &mut LinExpr {
        self.slots.entry(i).or_default()
    }

    pub fn add(&mut self, other: &AffElement) {
        if other.slots.is_empty() {
            return;
        }
        if self.slots.is_empty() {
            *self = other.clone();
            return;
        }
        debug_assert_eq!(self.degree, other.degree);
        for (i, e) in &other.slots {
            let s = self.slot_mut(*i);
            if let Some(c) = &e.constant {
                s.add_const(c.clone());
            }
            for (v, c) in &e.vars {
                s.add_var(*v, c.clone());
            }
        }
    }

    pub fn scale_sign(&mut self, sign: i64) {
        if sign == 1 {
            return;
        }
        for e in self.slots.values_mut() {
            if let Some(c) = e.constant.take() {
                e.constant = Some(c.neg());
            }
            for c in e.vars.values_mut() {
                *c = c.neg();
            }
        }
    }

    /// Push through a known map.
    pub fn apply(&self, m: &GradedMap) -> AffElement {
        let td = self.degree as i64 + m.degree as i64;
        if td < 0 || td > m.tgt.window.degree_cap as i64 {
            return AffElement::zero(&m.tgt, 0, m.field);
        }
        let mut out = AffElement::zero(&m.tgt, td as usize, m.field);
        for (i, expr) in &self.slots {
            for (t, c) in m.column(self.degree, *i) {
                let s = out.slot_mut(*t);
                if let Some(k) = &expr.constant {
                    s.add_const(k.mul(c));
                }
                for (v, k) in &expr.vars {
                    s.add_var(*v, k.mul(c));
                }
            }
        }
        out
    }
}

/// `(known ⊗ unknown)` applied to a basis element of `src_sq`, with the
/// Koszul sign for moving the unknown (of its declared degree) past the left
/// factor.
pub fn tensor_known_unknown(
    left: &GradedMap,
    right: &UnknownMap,
    src_sq: &TensorModule,
    tgt_sq: &TensorModule,
    d: usize,
    i: u32,
) -> AffElement {
    let (ld, li, rd, ri) = src_sq.decompose(d, i);
    let out_deg = d as i64 + left.degree as i64 + right.degree as i64;
    if out_deg < 0 || out_deg > tgt_sq.module.window.degree_cap as i64 {
        return AffElement::zero(&tgt_sq.module, 0, left.field);
    }
    let mut out = AffElement::zero(&tgt_sq.module, out_deg as usize, left.field);
    let sign = koszul(right.degree as i64, ld as i64);
    let lcol = left.column(ld, li);
    let rtd = rd as i64 + right.degree as i64;
    if lcol.is_empty() || rtd < 0 || rtd > right.tgt.window.degree_cap as i64 {
        return out;
    }
    let rtd = rtd as usize;
    let ltd = (ld as i64 + left.degree as i64) as usize;
    for (a, c) in lcol {
        for t in 0..right.tgt.dim(rtd) as u32 {
            if let (Some(v), Some((_, pt))) =
                (right.var(rd, ri, t), tgt_sq.index_of_pair(ltd, *a, rtd, t))
            {
                out.slot_mut(pt).add_var(v, c.scaled(sign));
            }
        }
    }
    out
}

/// `(unknown ⊗ known)` applied to a basis element of `src_sq`.
pub fn tensor_unknown_known(
    left: &UnknownMap,
    right: &GradedMap,
    src_sq: &TensorModule,
    tgt_sq: &TensorModule,
    d: usize,
    i: u32,
) -> AffElement {
    let (ld, li, rd, ri) = src_sq.decompose(d, i);
    let out_deg = d as i64 + left.degree as i64 + right.degree as i64;
    if out_deg < 0 || out_deg > tgt_sq.module.window.degree_cap as i64 {
        return AffElement::zero(&tgt_sq.module, 0, right.field);
    }
    let mut out = AffElement::zero(&tgt_sq.module, out_deg as usize, right.field);
    let sign = koszul(right.degree as i64, ld as i64);
    let rcol = right.column(rd, ri);
    let ltd = ld as i64 + left.degree as i64;
    if rcol.is_empty() || ltd < 0 || ltd > left.tgt.window.degree_cap as i64 {
        return out;
    }
    let ltd = ltd as usize;
    let rtd = (rd as i64 + right.degree as i64) as usize;
    for (b, c) in rcol {
        for t in 0..left.tgt.dim(ltd) as u32 {
            if let (Some(v), Some((_, pt))) =
                (left.var(ld, li, t), tgt_sq.index_of_pair(ltd, t, rtd, *b))
            {
                out.slot_mut(pt).add_var(v, c.scaled(sign));
            }
        }
    }
    out
}

type Row = (Vec<(u32, Scalar)>, Scalar);

/// Collects affine equations over one unknown map and solves exactly.
pub struct MapSolver {
    pub unknown: UnknownMap,
    rows: Vec<Row>,
    field: Field,
}

impl MapSolver {
    pub fn new(src: &Arc<BasedModule>, tgt: &Arc<BasedModule>, degree: i32, field: Field) -> Self {
        MapSolver { unknown: UnknownMap::new(src, tgt, degree, field), rows: Vec::new(), field }
    }

    /// Require `aff = rhs` slotwise.
    pub fn require(&mut self, aff: &AffElement, rhs: &Element) {
        let mut rhs_map: BTreeMap<u32, Scalar> = rhs.coords.iter().cloned().collect();
        for (slot, expr) in &aff.slots {
            let mut target = rhs_map.remove(slot).unwrap_or_else(|| self.field.zero());
            if let Some(c) = &expr.constant {
                target = target.sub(c);
            }
            let func: Vec<(u32, Scalar)> = expr.vars.iter().map(|(v, c)| (*v, c.clone())).collect();
            if func.is_empty() {
                if !target.is_zero() {
                    // constant mismatch: record an unsatisfiable row
                    self.rows.push((Vec::new(), target));
                }
            } else {
                self.rows.push((func, target));
            }
        }
        for (_, v) in rhs_map {
            if !v.is_zero() {
                self.rows.push((Vec::new(), v));
            }
        }
    }

    /// Require the unknown to vanish on a given known element.
    pub fn require_zero_on(&mut self, e: &Element) {
        let aff = self.unknown.apply(e);
        let zero = Element::zero(&self.unknown.tgt, aff.degree);
        self.require(&aff, &zero);
    }

    pub fn solve(self) -> Result<GradedMap> {
        self.solve_with_free(|_| None)
    }

    pub fn solve_with_free(self, free: impl Fn(usize) -> Option<Scalar>) -> Result<GradedMap> {
        for (func, rhs) in &self.rows {
            if func.is_empty() && !rhs.is_zero() {
                return Err(Error::Infeasible(Some("constant constraint violated".into())));
            }
        }
        let unknowns: Vec<u32> = (0..self.unknown.nvars).collect();
        let sol = solve_affine_seeded(&self.rows, &unknowns, free)?;
        Ok(self.unknown.realize(&sol))
    }
}

/// Restriction of the hom-differential identities to input degrees where no
/// truncated block is referenced: an identity whose two sides have
/// non-positive degree must not be imposed at the window top.
pub fn top_degree_for_identities(src: &Arc<BasedModule>) -> usize {
    src.window.degree_cap.saturating_sub(1)
}

/// Solve for a DGA homotopy `h : f₀ ≃ f₁`.
pub fn solve_homotopy_dga(
    f0: &GradedMap,
    f1: &GradedMap,
    a_src: &DgAlgebra,
    a_tgt: &DgAlgebra,
) -> Result<GradedMap> {
    let field = f0.field;
    let m = a_src.module();
    let mut solver = MapSolver::new(m, a_tgt.module(), -1, field);
    // h η = 0
    solver.require_zero_on(&a_src.one());
    // ε h = 0 and Dh = f₀ − f₁
    let cap = top_degree_for_identities(m);
    for d in 0..=m.window.degree_cap {
        for i in 0..m.dim(d) as u32 {
            let b = Element::basis(m, d, i, field);
            // ε h = 0
            let aff = solver.unknown.apply(&b).apply(&a_tgt.counit);
            let zero = Element::zero(&a_tgt.ground, aff.degree);
            solver.require(&aff, &zero);
            if d <= cap {
                // d h(b) + h(d b) = (f₀ − f₁)(b)
                let mut lhs = solver.unknown.apply(&b).apply(&a_tgt.cx.d);
                lhs.add(&solver.unknown.apply(&a_src.cx.d.apply(&b)));
                let rhs = f0.apply(&b).add(&f1.apply(&b).scale_sign(-1));
                solver.require(&lhs, &rhs);
            }
        }
    }
    // h μ = μ (f₀ ⊗ h + h ⊗ f₁)
    let sq = &a_src.square;
    for d in 0..=m.window.degree_cap {
        for i in 0..sq.module.dim(d) as u32 {
            let b = Element::basis(&sq.module, d, i, field);
            let lhs = solver.unknown.apply(&a_src.mul.apply(&b));
            let mut rhs = tensor_known_unknown(f0, &solver.unknown, sq, &a_tgt.square, d, i);
            rhs.add(&tensor_unknown_known(&solver.unknown, f1, sq, &a_tgt.square, d, i));
            let mut rhs = rhs.apply(&a_tgt.mul);
            rhs.scale_sign(-1);
            rhs.add(&lhs);
            let zero = Element::zero(a_tgt.module(), rhs.degree);
            solver.require(&rhs, &zero);
        }
    }
    let h = solver.solve().map_err(|_| Error::NoHomotopy { kind: "DGA" })?;
    let rep = check_dga_homotopy(&h, f0, f1, a_src, a_tgt);
    if truncation_aware_pass(&rep, m.window.degree_cap) {
        Ok(h)
    } else {
        Err(Error::NoHomotopy { kind: "DGA" })
    }
}

/// Solve for a DGC homotopy `j : g₀ ≃ g₁`.
pub fn solve_homotopy_dgc(
    g0: &GradedMap,
    g1: &GradedMap,
    c_src: &DgCoalgebra,
    c_tgt: &DgCoalgebra,
) -> Result<GradedMap> {
    let field = g0.field;
    let m = c_src.module();
    let mut solver = MapSolver::new(m, c_tgt.module(), -1, field);
    let one = c_src.coaug.apply(&Element::basis(&c_src.ground, 0, 0, field));
    solver.require_zero_on(&one);
    let cap = top_degree_for_identities(m);
    for d in 0..=m.window.degree_cap {
        for i in 0..m.dim(d) as u32 {
            let b = Element::basis(m, d, i, field);
            let aff = solver.unknown.apply(&b).apply(&c_tgt.counit);
            let zero = Element::zero(&c_tgt.ground, aff.degree);
            solver.require(&aff, &zero);
            if d <= cap {
                let mut lhs = solver.unknown.apply(&b).apply(&c_tgt.cx.d);
                lhs.add(&solver.unknown.apply(&c_src.cx.d.apply(&b)));
                let rhs = g1.apply(&b).add(&g0.apply(&b).scale_sign(-1));
                solver.require(&lhs, &rhs);
            }
            // Δ j(b) − (g₀ ⊗ j + j ⊗ g₁)(Δ b) = 0
            let mut lhs = solver.unknown.apply(&b).apply(&c_tgt.comul);
            let delta = c_src.comul.apply(&b);
            for (pi, c) in &delta.coords {
                let mut t1 = tensor_known_unknown(g0, &solver.unknown, &c_src.square, &c_tgt.square, delta.degree, *pi);
                t1.add(&tensor_unknown_known(&solver.unknown, g1, &c_src.square, &c_tgt.square, delta.degree, *pi));
                scale_aff(&mut t1, c);
                t1.scale_sign(-1);
                lhs.add(&t1);
            }
            let zero = Element::zero(&c_tgt.square.module, lhs.degree);
            solver.require(&lhs, &zero);
        }
    }
    let j = solver.solve().map_err(|_| Error::NoHomotopy { kind: "DGC" })?;
    let rep = check_dgc_homotopy(&j, g0, g1, c_src, c_tgt);
    if truncation_aware_pass(&rep, m.window.degree_cap) {
        Ok(j)
    } else {
        Err(Error::NoHomotopy { kind: "DGC" })
    }
}

/// Solve for a twisting-cochain homotopy `x : t₀ ≃ t₁`.
pub fn solve_homotopy_tc(
    t0: &GradedMap,
    t1: &GradedMap,
    c: &DgCoalgebra,
    a: &DgAlgebra,
) -> Result<GradedMap> {
    let field = t0.field;
    let m = c.module();
    let mut solver = MapSolver::new(m, a.module(), 0, field);
    // x η = η
    let one_c = c.coaug.apply(&Element::basis(&c.ground, 0, 0, field));
    let one_a = a.one();
    let aff = solver.unknown.apply(&one_c);
    solver.require(&aff, &one_a);
    for d in 0..=m.window.degree_cap {
        for i in 0..m.dim(d) as u32 {
            let b = Element::basis(m, d, i, field);
            // ε x = ε
            let aff = solver.unknown.apply(&b).apply(&a.counit);
            let rhs_eps = c.counit.apply(&b);
            solver.require(&aff, &rhs_eps);
            // Dx − t₀∪x + x∪t₁ = 0 (both sides have degree +1, so the
            // identity self-truncates at the window top)
            let mut lhs = solver.unknown.apply(&b).apply(&a.cx.d);
            let mut xd = solver.unknown.apply(&c.cx.d.apply(&b));
            xd.scale_sign(-1);
            lhs.add(&xd);
            let delta = c.comul.apply(&b);
            for (pi, cf) in &delta.coords {
                let mut cup0 = tensor_known_unknown(t0, &solver.unknown, &c.square, &a.square, delta.degree, *pi);
                scale_aff(&mut cup0, cf);
                let mut cup0 = cup0.apply(&a.mul);
                cup0.scale_sign(-1);
                lhs.add(&cup0);
                let mut cup1 = tensor_unknown_known(&solver.unknown, t1, &c.square, &a.square, delta.degree, *pi);
                scale_aff(&mut cup1, cf);
                let cup1 = cup1.apply(&a.mul);
                lhs.add(&cup1);
            }
            let zero = Element::zero(a.module(), lhs.degree);
            solver.require(&lhs, &zero);
        }
    }
    let x = solver.solve().map_err(|_| Error::NoHomotopy { kind: "twisting cochain" })?;
    let rep = check_tc_homotopy(&x, t0, t1, c, a);
    if rep.passed() {
        Ok(x)
    } else {
        Err(Error::NoHomotopy { kind: "twisting cochain" })
    }
}

fn scale_aff(aff: &mut AffElement, c: &Scalar) {
    if c.is_one() {
        return;
    }
    for e in aff.slots.values_mut() {
        if let Some(k) = e.constant.take() {
            let k = k.mul(c);
            if !k.is_zero() {
                e.constant = Some(k);
            }
        }
        for v in e.vars.values_mut() {
            *v = v.mul(c);
        }
    }
}

/// The hom-differential conditions of a homotopy cannot be read at the top
/// window degree (the differential out of it is truncated); accept a report
/// whose only failures mention that degree.
fn truncation_aware_pass(rep: &crate::dg::Report, cap: usize) -> bool {
    rep.checks.iter().all(|c| {
        c.passed() || {
            let marker = format!("(degree {cap})");
            c.name.starts_with('D') && c.failure.as_deref().is_some_and(|f| f.contains(&marker))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::graded::Window;
    use crate::scalar::Field;

    #[test]
    fn equal_endpoints_give_zero_homotopy() {
        let c = Catalog::new(Field::Rational, Window::plain(8));
        let a = c.exterior3();
        let id = GradedMap::identity(a.module(), a.field());
        let h = solve_homotopy_dga(&id, &id, &a, &a).unwrap();
        assert!(h.is_zero());
        assert!(check_dga_homotopy(&h, &id, &id, &a, &a).passed());
    }

    #[test]
    fn nonzero_self_homotopy_checker() {
        // on Λ(x³)⊗k[t²]/t³ the map h(x) = t, h(x⊗t) = t² is a homotopy
        // from the identity to itself
        let cat = Catalog::new(Field::Rational, Window::plain(10));
        let a = cat.tensor_both();
        let field = a.field();
        let m = a.module();
        let x = crate::graded::Label::pair(crate::graded::Label::named("x"), crate::graded::Label::One);
        let t = crate::graded::Label::pair(crate::graded::Label::One, crate::graded::Label::named("t"));
        let t2 = crate::graded::Label::pair(crate::graded::Label::One, crate::graded::Label::named("t^2"));
        let xt = crate::graded::Label::pair(crate::graded::Label::named("x"), crate::graded::Label::named("t"));
        let mut h = GradedMap::zero(m, m, -1, field);
        h.set_column(3, m.index_of(3, &x).unwrap(), vec![(m.index_of(2, &t).unwrap(), field.one())]);
        h.set_column(5, m.index_of(5, &xt).unwrap(), vec![(m.index_of(4, &t2).unwrap(), field.one())]);
        let id = GradedMap::identity(m, field);
        let rep = check_dga_homotopy(&h, &id, &id, &a, &a);
        assert!(rep.passed(), "{rep}");
        // perturbing the multiplicativity clause is caught with a witness
        let mut bad = h.clone();
        bad.set_column(5, m.index_of(5, &xt).unwrap(), vec![(m.index_of(4, &t2).unwrap(), field.from_i64(2))]);
        let rep = check_dga_homotopy(&bad, &id, &id, &a, &a);
        assert!(!rep.passed());
        assert!(rep.first_failure().unwrap().name.contains('μ'));
    }
}
