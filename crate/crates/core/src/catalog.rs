//! The catalog of input algebras: exterior algebras on one generator,
//! truncated polynomial algebras, and their tensor products, described by
//! explicit multiplication tables on a monomial basis.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::dg::{tensor_algebra, Complex, DgAlgebra};
use crate::error::Error;
use crate::graded::{BasedModule, GradedMap, Label, Window};
use crate::linalg::VecBuilder;
use crate::scalar::{Field, Scalar};
use crate::Result;

/// A finite monomial presentation of an augmented DGA.  The unit is always
/// the label `1`; every other monomial is in the augmentation ideal.
#[derive(Debug, Clone)]
pub struct AlgebraSpec {
    pub name: String,
    pub field: Field,
    /// monomials with degrees; the unit is implicit
    pub monomials: Vec<(usize, String)>,
    /// products of non-unit monomials; absent products are zero
    pub products: BTreeMap<(String, String), Vec<(String, i64)>>,
    /// differential on monomials; absent entries are zero
    pub differential: BTreeMap<String, Vec<(String, i64)>>,
}

impl AlgebraSpec {
    /// Realize the spec as a [`DgAlgebra`] on the window.
    pub fn build(&self, window: Window) -> Result<DgAlgebra> {
        let field = self.field;
        let mut labels = vec![(0usize, Label::One)];
        for (d, m) in &self.monomials {
            if *d == 0 {
                return Err(Error::NotSimplyConnected(0));
            }
            labels.push((*d, Label::named(m)));
        }
        let module = BasedModule::from_labels(window, labels);
        let deg_of: BTreeMap<String, usize> = self.monomials.iter().map(|(d, m)| (m.clone(), *d)).collect();
        let find = |name: &str| -> Option<(usize, u32)> {
            let d = *deg_of.get(name)?;
            module.index_of(d, &Label::named(name)).map(|i| (d, i))
        };
        // differential
        let mut d_map = GradedMap::zero(&module, &module, 1, field);
        for (m, img) in &self.differential {
            let (dm, im) = find(m).ok_or_else(|| Error::ConfigError(format!("unknown monomial {m}")))?;
            let mut col = VecBuilder::new();
            for (n, c) in img {
                if let Some((dn, i_n)) = find(n) {
                    if dn != dm + 1 {
                        return Err(Error::ConfigError(format!("d({m}) has wrong degree")));
                    }
                    col.add(i_n, field.from_i64(*c));
                }
            }
            d_map.set_column(dm, im, col.build());
        }
        let cx = Complex::new(Arc::clone(&module), d_map);
        let square = crate::graded::tensor(&module, &module)?;
        // multiplication: unit acts as identity, other products from the table
        let mut mul = GradedMap::zero(&square.module, &module, 0, field);
        for deg in 0..=window.degree_cap {
            for i in 0..square.module.dim(deg) as u32 {
                let (ld, li, rd, ri) = square.decompose(deg, i);
                let ll = square.left.label(ld, li).clone();
                let rl = square.right.label(rd, ri).clone();
                let col = match (&ll, &rl) {
                    (Label::One, _) => vec![(module.index_of(deg, &rl).unwrap(), field.one())],
                    (_, Label::One) => vec![(module.index_of(deg, &ll).unwrap(), field.one())],
                    (Label::Named(a), Label::Named(b)) => {
                        let mut col = VecBuilder::new();
                        if let Some(img) = self.products.get(&(a.to_string(), b.to_string())) {
                            for (n, c) in img {
                                if let Some((dn, i_n)) = find(n) {
                                    debug_assert_eq!(dn, deg);
                                    col.add(i_n, field.from_i64(*c));
                                }
                            }
                        }
                        col.build()
                    }
                    _ => Vec::new(),
                };
                mul.set_column(deg, i, col);
            }
        }
        let ground = BasedModule::ground(window);
        let mut unit = GradedMap::zero(&ground, &module, 0, field);
        unit.set_column(0, 0, vec![(module.index_of(0, &Label::One).unwrap(), field.one())]);
        let mut counit = GradedMap::zero(&module, &ground, 0, field);
        counit.set_column(0, module.index_of(0, &Label::One).unwrap(), vec![(0, field.one())]);
        Ok(DgAlgebra { cx, square, mul, unit, counit, ground })
    }
}

/// Λ(x), exterior on one generator.  The generator degree must be at least 2
/// and, away from characteristic 2, odd.
pub fn make_exterior(gen_degree: usize, field: Field, window: Window) -> Result<DgAlgebra> {
    if gen_degree < 2 || (gen_degree % 2 == 0 && field != Field::Prime(2)) {
        return Err(Error::NotSimplyConnected(gen_degree));
    }
    let spec = AlgebraSpec {
        name: format!("exterior(x{gen_degree})"),
        field,
        monomials: vec![(gen_degree, "x".into())],
        products: BTreeMap::new(),
        differential: BTreeMap::new(),
    };
    spec.build(window)
}

/// k[t]/t^m, truncated polynomial algebra.  The generator degree must be at
/// least 2 and, away from characteristic 2, even.
pub fn make_truncated_poly(gen_degree: usize, power: usize, field: Field, window: Window) -> Result<DgAlgebra> {
    if gen_degree < 2 || power < 2 || (gen_degree % 2 == 1 && field != Field::Prime(2)) {
        return Err(Error::NotSimplyConnected(gen_degree));
    }
    let mono = |i: usize| if i == 1 { "t".to_string() } else { format!("t^{i}") };
    let mut monomials = Vec::new();
    let mut products = BTreeMap::new();
    for i in 1..power {
        monomials.push((gen_degree * i, mono(i)));
    }
    for i in 1..power {
        for j in 1..power {
            if i + j < power {
                products.insert((mono(i), mono(j)), vec![(mono(i + j), 1)]);
            }
        }
    }
    let spec = AlgebraSpec {
        name: format!("truncated(t{gen_degree}, {power})"),
        field,
        monomials,
        products,
        differential: BTreeMap::new(),
    };
    spec.build(window)
}

/// Tensor product of two catalog algebras, with the Koszul-signed table.
pub fn make_tensor(a: &DgAlgebra, b: &DgAlgebra) -> Result<DgAlgebra> {
    tensor_algebra(a, b)
}

/// Is the multiplication graded-commutative (μ ∘ swap = μ)?
pub fn is_commutative(a: &DgAlgebra) -> bool {
    let sw = crate::graded::swap(&a.square, &a.square, a.field());
    sw.then(&a.mul).equals(&a.mul)
}

/// The standard catalog: named algebras over the given field and window.
pub struct Catalog {
    pub field: Field,
    pub window: Window,
}

impl Catalog {
    pub fn new(field: Field, window: Window) -> Catalog {
        Catalog { field, window }
    }

    pub fn exterior3(&self) -> DgAlgebra {
        make_exterior(3, self.field, self.window).expect("catalog exterior")
    }

    pub fn truncated23(&self) -> DgAlgebra {
        make_truncated_poly(2, 3, self.field, self.window).expect("catalog truncated")
    }

    pub fn tensor_both(&self) -> DgAlgebra {
        make_tensor(&self.exterior3(), &self.truncated23()).expect("catalog tensor")
    }

    pub fn by_name(&self, name: &str) -> Result<DgAlgebra> {
        match name {
            "exterior3" | "lambda3" => Ok(self.exterior3()),
            "truncated23" | "trunc23" => Ok(self.truncated23()),
            "tensor" | "exterior3xtruncated23" => Ok(self.tensor_both()),
            other => Err(Error::ConfigError(format!("unknown catalog algebra {other}"))),
        }
    }
}

/// Scalar shorthand used by tests.
pub fn sc(field: Field, n: i64) -> Scalar {
    field.from_i64(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg::{check_dga_map, tensor_algebra};
    use crate::graded::Element;

    #[test]
    fn exterior_is_a_valid_dga() {
        let w = Window::plain(8);
        let a = make_exterior(3, Field::Rational, w).unwrap();
        assert!(a.validate().passed(), "{}", a.validate());
        // basis 1, x; x² = 0
        assert_eq!(a.module().total_dim(), 2);
        let x = Element::from_label(a.module(), 3, &Label::named("x"), a.field()).unwrap();
        assert!(a.mul_elems(&x, &x).is_zero());
    }

    #[test]
    fn exterior_preconditions() {
        let w = Window::plain(6);
        assert!(make_exterior(1, Field::Rational, w).is_err());
        assert!(make_exterior(4, Field::Rational, w).is_err());
        assert!(make_exterior(4, Field::Prime(2), w).is_ok());
    }

    #[test]
    fn truncated_is_a_valid_dga() {
        let w = Window::plain(8);
        let a = make_truncated_poly(2, 3, Field::Prime(2), w).unwrap();
        assert!(a.validate().passed(), "{}", a.validate());
        // basis 1, t, t²; t³ = 0
        assert_eq!(a.module().total_dim(), 3);
        let t = Element::from_label(a.module(), 2, &Label::named("t"), a.field()).unwrap();
        let t2 = a.mul_elems(&t, &t);
        assert_eq!(t2.coords.len(), 1);
        assert!(a.mul_elems(&t, &t2).is_zero());
    }

    #[test]
    fn tensor_catalog_algebra() {
        let w = Window::plain(10);
        let c = Catalog::new(Field::Rational, w);
        let t = c.tensor_both();
        assert!(t.validate().passed(), "{}", t.validate());
        // dimension 6, graded-commutative
        assert_eq!(t.module().total_dim(), 6);
        assert!(is_commutative(&t));
        assert!(is_commutative(&c.exterior3()));
    }

    #[test]
    fn koszul_sign_in_tensor_table() {
        // (x⊗1)·(1⊗t) = x⊗t and (1⊗t)·(x⊗1) = (−1)^{2·3} x⊗t = x⊗t;
        // (x⊗1)·(x⊗1) = 0
        let w = Window::plain(10);
        let c = Catalog::new(Field::Rational, w);
        let a = c.exterior3();
        let b = c.truncated23();
        let t = tensor_algebra(&a, &b).unwrap();
        let field = t.field();
        let x1 = Element::from_label(t.module(), 3, &Label::pair(Label::named("x"), Label::One), field).unwrap();
        let onet = Element::from_label(t.module(), 2, &Label::pair(Label::One, Label::named("t")), field).unwrap();
        let xt = t.mul_elems(&x1, &onet);
        let tx = t.mul_elems(&onet, &x1);
        assert_eq!(xt.coords, tx.coords);
        assert!(t.mul_elems(&x1, &x1).is_zero());
        // ground algebra and mixed-degree products stay associative
        let mu = t.mul_elems(&xt, &onet);
        let mu2 = t.mul_elems(&x1, &t.mul_elems(&onet, &onet));
        assert_eq!(mu.coords, mu2.coords);
    }

    #[test]
    fn ground_algebra_validates() {
        let w = Window::plain(4);
        let k = DgAlgebra::ground_algebra(w, Field::Rational);
        assert!(k.validate().passed());
        let id = GradedMap::identity(k.module(), k.field());
        assert!(check_dga_map(&id, &k, &k).passed());
    }
}
