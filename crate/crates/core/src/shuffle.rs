//! The shuffle maps: the lax monoidal structure map of the bar construction
//! and the lax comonoidal structure map of the cobar construction, both
//! determined by their twisting cochains through the universal properties.

use std::sync::Arc;

use crate::barcobar::{bar_in, cobar_in, corestrict, extend, BarCoalgebra, CobarAlgebra};
use crate::dg::{
    check_dga_map, check_dgc_map, check_twisting_cochain, cup_unit, map_identity_check,
    tensor_algebra, tensor_coalgebra, DgAlgebra, DgCoalgebra, Report,
};
use crate::graded::{tensor, tensor_map, Element, GradedMap, TensorModule, Window};
use crate::linalg::VecBuilder;
use crate::Result;

/// Everything the shuffle maps of a pair of algebras need, built once.
pub struct AlgebraPair {
    pub left: DgAlgebra,
    pub right: DgAlgebra,
    pub tensor_algebra: DgAlgebra,
    pub parts: Arc<TensorModule>,
    pub bar_left: BarCoalgebra,
    pub bar_right: BarCoalgebra,
    pub bar_tensor: BarCoalgebra,
    /// BA₁ ⊗ BA₂ as a DG coalgebra
    pub bars: DgCoalgebra,
    pub bars_parts: Arc<TensorModule>,
}

impl AlgebraPair {
    pub fn new(a1: &DgAlgebra, a2: &DgAlgebra) -> Result<AlgebraPair> {
        Self::new_in(a1, a2, a1.window())
    }

    /// Build with the bar constructions in an explicit window.
    pub fn new_in(a1: &DgAlgebra, a2: &DgAlgebra, window: Window) -> Result<AlgebraPair> {
        let t = tensor_algebra(a1, a2)?;
        let bar_left = bar_in(a1, window)?;
        let bar_right = bar_in(a2, window)?;
        let bar_tensor = bar_in(&t, window)?;
        let bars = tensor_coalgebra(&bar_left.dgc, &bar_right.dgc)?;
        let bars_parts = tensor(bar_left.module(), bar_right.module())?;
        let parts = tensor(a1.module(), a2.module())?;
        Ok(AlgebraPair {
            left: a1.clone(),
            right: a2.clone(),
            tensor_algebra: t,
            parts,
            bar_left,
            bar_right,
            bar_tensor,
            bars,
            bars_parts,
        })
    }

    /// The defining twisting cochain `t^{A₁} ⊗ ηε + ηε ⊗ t^{A₂}` on
    /// `BA₁ ⊗ BA₂`.
    pub fn shuffle_cochain(&self) -> GradedMap {
        let u1 = cup_unit(&self.bar_left.dgc, &self.left);
        let u2 = cup_unit(&self.bar_right.dgc, &self.right);
        let t1 = tensor_map(&self.bar_left.taut, &u2, &self.bars_parts, &self.parts);
        let t2 = tensor_map(&u1, &self.bar_right.taut, &self.bars_parts, &self.parts);
        t1.add(&t2)
    }
}

/// `∇ : BA₁ ⊗ BA₂ → B(A₁ ⊗ A₂)`, the corestriction of the shuffle cochain.
pub fn nabla(p: &AlgebraPair) -> Result<GradedMap> {
    corestrict(&p.shuffle_cochain(), &p.bars, &p.bar_tensor)
}

/// Verify the defining identity `t^{A₁⊗A₂} ∘ ∇ = t^{A₁}⊗ηε + ηε⊗t^{A₂}`,
/// that ∇ is a DGC map, and (if homology is requested elsewhere) leave the
/// quasi-isomorphism claim to the caller.
pub fn check_nabla(p: &AlgebraPair, nabla_map: &GradedMap) -> Report {
    let mut rep = Report::default();
    rep.push(map_identity_check(
        "t^(A⊗A)∘∇ = t⊗ηε + ηε⊗t",
        &nabla_map.then(&p.bar_tensor.taut),
        &p.shuffle_cochain(),
    ));
    rep.push(crate::dg::AxiomCheck {
        name: "shuffle cochain is a twisting cochain".into(),
        failure: check_twisting_cochain(&p.shuffle_cochain(), &p.bars, &p.tensor_algebra)
            .first_failure()
            .map(|c| format!("{}: {}", c.name, c.failure.clone().unwrap_or_default())),
    });
    let mut m = check_dgc_map(nabla_map, &p.bars, &p.bar_tensor.dgc);
    for c in &mut m.checks {
        c.name = format!("∇ {}", c.name);
    }
    rep.merge(m);
    rep
}

/// Everything the cobar shuffle of a pair of coalgebras needs.
pub struct CoalgebraPair {
    pub left: DgCoalgebra,
    pub right: DgCoalgebra,
    pub tensor_coalgebra: DgCoalgebra,
    pub omega_left: CobarAlgebra,
    pub omega_right: CobarAlgebra,
    pub omega_tensor: CobarAlgebra,
    /// ΩC₁ ⊗ ΩC₂ as a DG algebra
    pub omegas: DgAlgebra,
    pub omegas_parts: Arc<TensorModule>,
    pub parts: Arc<TensorModule>,
}

impl CoalgebraPair {
    pub fn new(c1: &DgCoalgebra, c2: &DgCoalgebra) -> Result<CoalgebraPair> {
        Self::new_in(c1, c2, c1.window())
    }

    pub fn new_in(c1: &DgCoalgebra, c2: &DgCoalgebra, window: Window) -> Result<CoalgebraPair> {
        let t = tensor_coalgebra(c1, c2)?;
        let omega_left = cobar_in(c1, window)?;
        let omega_right = cobar_in(c2, window)?;
        let omega_tensor = cobar_in(&t, window)?;
        let omegas = tensor_algebra(&omega_left.dga, &omega_right.dga)?;
        let omegas_parts = tensor(omega_left.module(), omega_right.module())?;
        let parts = tensor(c1.module(), c2.module())?;
        Ok(CoalgebraPair {
            left: c1.clone(),
            right: c2.clone(),
            tensor_coalgebra: t,
            omega_left,
            omega_right,
            omega_tensor,
            omegas,
            omegas_parts,
            parts,
        })
    }

    /// The defining twisting cochain `t_{C₁} ⊗ ηε + ηε ⊗ t_{C₂}` on `C₁ ⊗ C₂`.
    pub fn shuffle_cochain(&self) -> GradedMap {
        let u1 = cup_unit(&self.left, &self.omega_left.dga);
        let u2 = cup_unit(&self.right, &self.omega_right.dga);
        let t1 = tensor_map(&self.omega_left.taut, &u2, &self.parts, &self.omegas_parts);
        let t2 = tensor_map(&u1, &self.omega_right.taut, &self.parts, &self.omegas_parts);
        t1.add(&t2)
    }
}

/// `γ : Ω(C₁ ⊗ C₂) → ΩC₁ ⊗ ΩC₂`, the extension of the shuffle cochain.
pub fn gamma(p: &CoalgebraPair) -> GradedMap {
    extend(&p.shuffle_cochain(), &p.omega_tensor, &p.omegas)
}

/// Verify the defining identity `γ ∘ t_{C₁⊗C₂} = t_{C₁}⊗ηε + ηε⊗t_{C₂}` and
/// that γ is a DGA map.
pub fn check_gamma(p: &CoalgebraPair, gamma_map: &GradedMap) -> Report {
    let mut rep = Report::default();
    rep.push(map_identity_check(
        "γ∘t_(C⊗C) = t⊗ηε + ηε⊗t",
        &p.omega_tensor.taut.then(gamma_map),
        &p.shuffle_cochain(),
    ));
    rep.push(crate::dg::AxiomCheck {
        name: "shuffle cochain is a twisting cochain".into(),
        failure: check_twisting_cochain(&p.shuffle_cochain(), &p.tensor_coalgebra, &p.omegas)
            .first_failure()
            .map(|c| format!("{}: {}", c.name, c.failure.clone().unwrap_or_default())),
    });
    let mut m = check_dga_map(gamma_map, &p.omega_tensor.dga, &p.omegas);
    for c in &mut m.checks {
        c.name = format!("γ {}", c.name);
    }
    rep.merge(m);
    rep
}

/// The shuffle symmetry: in the comultiplication of `b₁ ⊗ b₂`, the two
/// components with factors `(B_m ⊗ k) ⊗ (k ⊗ B_n)` and its swap, pushed
/// through `∇ ⊗ ∇`, give exactly
/// `∇(b₁⊗1)⊗∇(1⊗b₂) + (−1)^{|b₁||b₂|} ∇(1⊗b₂)⊗∇(b₁⊗1)`.
pub fn check_nabla_symmetry(
    p: &AlgebraPair,
    nabla_map: &GradedMap,
    b1: (usize, u32),
    b2: (usize, u32),
) -> Report {
    let field = p.left.field();
    let mut rep = Report::default();
    let m = b1_length(p, b1);
    let n = b2_length(p, b2);
    if m == 0 || n == 0 {
        rep.push(crate::dg::AxiomCheck::pass("symmetry (degenerate factor)"));
        return rep;
    }
    let (d1, i1) = b1;
    let (d2, i2) = b2;
    let deg = d1 + d2;
    if deg > p.bars.window().degree_cap {
        rep.push(crate::dg::AxiomCheck::pass("symmetry (out of window)"));
        return rep;
    }
    let pair = match p.bars_parts.index_of_pair(d1, i1, d2, i2) {
        Some(x) => x,
        None => {
            rep.push(crate::dg::AxiomCheck::pass("symmetry (out of window)"));
            return rep;
        }
    };
    let e = Element::basis(&p.bars.cx.module, pair.0, pair.1, field);
    let delta = p.bars.comul.apply(&e);
    // components with word bi-lengths ((m,0),(0,n)) and ((0,n),(m,0))
    let sq = &p.bars.square;
    let mut selected = VecBuilder::new();
    for (t, v) in &delta.coords {
        let (ld, li, rd, ri) = sq.decompose(delta.degree, *t);
        let (l1, l2) = factor_lengths(p, ld, li);
        let (r1, r2) = factor_lengths(p, rd, ri);
        if (l1 == m && l2 == 0 && r1 == 0 && r2 == n) || (l1 == 0 && l2 == n && r1 == m && r2 == 0) {
            selected.add(*t, v.clone());
        }
    }
    let selected = Element {
        module: Arc::clone(&sq.module),
        degree: delta.degree,
        coords: selected.build(),
    };
    let tgt_sq = tensor(p.bar_tensor.module(), p.bar_tensor.module()).unwrap();
    let nn = tensor_map(nabla_map, nabla_map, sq, &tgt_sq);
    let lhs = nn.apply(&selected);
    // the displayed right-hand side
    let b1e = Element::basis(p.bar_left.module(), d1, i1, field);
    let b2e = Element::basis(p.bar_right.module(), d2, i2, field);
    let one_l = Element::basis(p.bar_left.module(), 0, 0, field);
    let one_r = Element::basis(p.bar_right.module(), 0, 0, field);
    let b1_1 = tensor_elems(&p.bars_parts, &b1e, &one_r, field);
    let one_b2 = tensor_elems(&p.bars_parts, &one_l, &b2e, field);
    let n_b1 = nabla_map.apply(&b1_1);
    let n_b2 = nabla_map.apply(&one_b2);
    let sign = crate::graded::koszul(d1 as i64, d2 as i64);
    let rhs = tensor_elems(&tgt_sq, &n_b1, &n_b2, field)
        .add(&tensor_elems(&tgt_sq, &n_b2, &n_b1, field).scale_sign(sign));
    rep.push(crate::dg::AxiomCheck {
        name: format!(
            "symmetry at ({}, {})",
            p.bar_left.module().label(d1, i1),
            p.bar_right.module().label(d2, i2)
        ),
        failure: if lhs.coords == rhs.coords {
            None
        } else {
            Some(format!("lhs = {lhs}, rhs = {rhs}"))
        },
    });
    rep
}

fn b1_length(p: &AlgebraPair, b: (usize, u32)) -> usize {
    p.bar_left.words.length(b.0, b.1)
}

fn b2_length(p: &AlgebraPair, b: (usize, u32)) -> usize {
    p.bar_right.words.length(b.0, b.1)
}

fn factor_lengths(p: &AlgebraPair, d: usize, i: u32) -> (usize, usize) {
    let (ld, li, rd, ri) = p.bars_parts.decompose(d, i);
    (p.bar_left.words.length(ld, li), p.bar_right.words.length(rd, ri))
}

/// Elementwise tensor `a ⊗ b` (values, not maps: no sign).
pub fn tensor_elems(
    t: &TensorModule,
    a: &Element,
    b: &Element,
    field: crate::scalar::Field,
) -> Element {
    let mut out = VecBuilder::new();
    for (i, u) in &a.coords {
        for (j, v) in &b.coords {
            if let Some((_, k)) = t.index_of_pair(a.degree, *i, b.degree, *j) {
                out.add(k, u.mul(v));
            }
        }
    }
    let _ = field;
    Element {
        module: Arc::clone(&t.module),
        degree: a.degree + b.degree,
        coords: out.build(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::graded::{Label, Window};
    use crate::scalar::Field;

    fn pair(n: usize) -> AlgebraPair {
        let cat = Catalog::new(Field::Rational, Window::new(n, Some(n)));
        AlgebraPair::new(&cat.exterior3(), &cat.truncated23()).unwrap()
    }

    #[test]
    fn nabla_satisfies_its_contract() {
        let p = pair(6);
        let n = nabla(&p).unwrap();
        let rep = check_nabla(&p, &n);
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn nabla_on_unit_factor_is_bar_of_inclusion() {
        // ∇(b⊗1) agrees with the bar of A₁ → A₁⊗A₂, a ↦ a⊗1
        let p = pair(8);
        let field = p.left.field();
        let n = nabla(&p).unwrap();
        let inc = GradedMap::from_fn(p.left.module(), p.tensor_algebra.module(), 0, field, |d, i| {
            let l = Label::pair(p.left.module().label(d, i).clone(), Label::One);
            match p.tensor_algebra.module().index_of(d, &l) {
                Some(t) => vec![(t, field.one())],
                None => Vec::new(),
            }
        });
        let b_inc = crate::barcobar::bar_map(&inc, &p.bar_left, &p.bar_tensor);
        for d in 0..=8usize {
            for i in 0..p.bar_left.module().dim(d) as u32 {
                let b = Element::basis(p.bar_left.module(), d, i, field);
                let one = Element::basis(p.bar_right.module(), 0, 0, field);
                let b1 = tensor_elems(&p.bars_parts, &b, &one, field);
                assert_eq!(n.apply(&b1).coords, b_inc.apply(&b).coords);
            }
        }
    }

    #[test]
    fn nabla_two_letter_formula() {
        // ∇([a]⊗[a']) = [a⊗1|1⊗a'] + (−1)^{(|a|−1)(|a'|−1)}[1⊗a'|a⊗1]
        let p = pair(8);
        let field = p.left.field();
        let n = nabla(&p).unwrap();
        let a = Element::from_label(p.bar_left.module(), 2, &Label::word(vec![Label::named("x")]), field).unwrap();
        let b = Element::from_label(p.bar_right.module(), 1, &Label::word(vec![Label::named("t")]), field).unwrap();
        let ab = tensor_elems(&p.bars_parts, &a, &b, field);
        let img = n.apply(&ab);
        let x1 = Label::pair(Label::named("x"), Label::One);
        let t1 = Label::pair(Label::One, Label::named("t"));
        let w1 = Label::word(vec![x1.clone(), t1.clone()]);
        let w2 = Label::word(vec![t1, x1]);
        let i1 = p.bar_tensor.module().index_of(3, &w1).unwrap();
        let i2 = p.bar_tensor.module().index_of(3, &w2).unwrap();
        // sign: (|x|−1)(|t|−1) = 2·1, so +1
        let mut expect = vec![(i1, field.one()), (i2, field.one())];
        expect.sort_by_key(|(i, _)| *i);
        assert_eq!(img.coords, expect);
    }

    #[test]
    fn gamma_satisfies_its_contract() {
        let cat = Catalog::new(Field::Rational, Window::new(6, Some(6)));
        let b1 = crate::barcobar::bar(&cat.exterior3()).unwrap();
        let b2 = crate::barcobar::bar(&cat.truncated23()).unwrap();
        let p = CoalgebraPair::new(&b1.dgc, &b2.dgc).unwrap();
        let g = gamma(&p);
        let rep = check_gamma(&p, &g);
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn gamma_on_generators() {
        // γ(s(c₁⊗c₂)) = ε(c₂)(sc₁⊗1) + ε(c₁)(1⊗sc₂); both vanish when both
        // factors are in the coideal
        let cat = Catalog::new(Field::Rational, Window::new(6, Some(6)));
        let b1 = crate::barcobar::bar(&cat.exterior3()).unwrap();
        let b2 = crate::barcobar::bar(&cat.truncated23()).unwrap();
        let p = CoalgebraPair::new(&b1.dgc, &b2.dgc).unwrap();
        let g = gamma(&p);
        let field = Field::Rational;
        // c₁ = [x], c₂ = [t]: both reduced, generator must die
        let c1c2 = Label::pair(Label::word(vec![Label::named("x")]), Label::word(vec![Label::named("t")]));
        let gen = Element::from_label(p.omega_tensor.module(), 4, &Label::word(vec![c1c2]), field).unwrap();
        assert!(g.apply(&gen).is_zero());
        // c₁ = [x], c₂ = 1: lands on sc₁ ⊗ 1
        let c11 = Label::pair(Label::word(vec![Label::named("x")]), Label::One);
        let gen = Element::from_label(p.omega_tensor.module(), 3, &Label::word(vec![c11]), field).unwrap();
        let img = g.apply(&gen);
        assert_eq!(img.coords.len(), 1);
        let (k, v) = &img.coords[0];
        assert!(v.is_one());
        let lbl = p.omegas.module().label(3, *k);
        assert_eq!(lbl.to_string(), "[[x]]⊗1");
    }

    #[test]
    fn symmetry_observation_on_basis_pairs() {
        let p = pair(6);
        let n = nabla(&p).unwrap();
        for d1 in 0..=4usize {
            for i1 in 0..p.bar_left.module().dim(d1) as u32 {
                for d2 in 0..=(6 - d1).min(4) {
                    for i2 in 0..p.bar_right.module().dim(d2) as u32 {
                        let rep = check_nabla_symmetry(&p, &n, (d1, i1), (d2, i2));
                        assert!(rep.passed(), "{rep}");
                    }
                }
            }
        }
    }
}
