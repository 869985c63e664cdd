use dgtor::barcobar::*;
use dgtor::catalog::Catalog;
use dgtor::graded::*;
use dgtor::scalar::Field;

fn main() {
    let cat = Catalog::new(Field::Rational, Window::new(6, Some(6)));
    let c = bar(&cat.truncated23()).unwrap();
    let big = c.dgc.window();
    let low = Window::new(5, Some(5));
    let omega = cobar(&c.dgc).unwrap();
    let bar_omega = bar_in(&omega.dga, low).unwrap();
    let c_low = c.dgc.restricted(low);
    let tgt = omega.taut.tgt.clone();
    let taut_low = omega.taut.restricted(&c_low.cx.module, &tgt);
    let unit = corestrict(&taut_low, &c_low, &bar_omega).unwrap();
    let omega_bar_omega = cobar_in(&bar_omega.dgc, big).unwrap();
    let omega_unit = cobar_map(&unit, &omega, &omega_bar_omega);
    let w5 = Label::word(vec![Label::word(vec![Label::named("t"); 5])]);
    let i = omega.module().index_of(6, &w5).unwrap();
    let e = Element::basis(omega.module(), 6, i, Field::Rational);
    let img = omega_unit.apply(&e);
    println!("Omega-eta terms: {} at degree {}", img.coords.len(), img.degree);
    let eps = adjunction_counit(&bar_omega, &omega_bar_omega, &omega.dga);
    let out = eps.apply(&img);
    println!("eps(Omega-eta(w)) = {out}");
}
