//! The bar and cobar constructions, their tautological twisting cochains,
//! the corestriction/extension universal properties, and the adjunction
//! unit and counit.
//!
//! No differential sign is transcribed from anywhere: both differentials are
//! assembled as "tensor differential plus the (co)derivation extending the
//! structure map", with every sign coming from the Koszul engine, and they
//! are gated by `d² = 0` and the twisting-cochain axioms in the tests.

use std::collections::HashMap;
use std::sync::Arc;

use crate::dg::{Complex, DgAlgebra, DgCoalgebra, Report};
use crate::error::Error;
use crate::graded::{
    koszul, shift_conjugation_sign, tensor, BasedModule, Element, GradedMap, Label, TensorModule,
    Window,
};
use crate::homology::{homology, induced_iso_upto};
use crate::linalg::VecBuilder;
use crate::scalar::{Field, Scalar};
use crate::Result;

/// A letter alphabet: positive-degree basis elements, reindexed.
#[derive(Debug, Clone)]
pub struct Alphabet {
    /// (degree in the letter grading, underlying degree, underlying index, label)
    pub letters: Vec<(usize, usize, u32, Label)>,
    index: HashMap<Label, u32>,
}

impl Alphabet {
    fn new(module: &Arc<BasedModule>, shift: i64) -> Alphabet {
        let mut letters = Vec::new();
        for d in 1..=module.window.degree_cap {
            for i in 0..module.dim(d) as u32 {
                let ld = d as i64 + shift;
                if ld >= 0 {
                    letters.push((ld as usize, d, i, module.label(d, i).clone()));
                }
            }
        }
        let index = letters.iter().enumerate().map(|(k, (_, _, _, l))| (l.clone(), k as u32)).collect();
        Alphabet { letters, index }
    }

    pub fn find(&self, l: &Label) -> Option<u32> {
        self.index.get(l).copied()
    }

    pub fn degree(&self, k: u32) -> usize {
        self.letters[k as usize].0
    }
}

/// Enumerate all words over the alphabet within the window, as letter-index
/// sequences, grouped by total degree.
fn enumerate_words(alphabet: &Alphabet, window: Window) -> Vec<Vec<Vec<u32>>> {
    let cap = window.degree_cap;
    let len_cap = window.word_cap.unwrap_or(usize::MAX);
    // words[d] = list of letter sequences of total degree d
    let mut words: Vec<Vec<Vec<u32>>> = vec![Vec::new(); cap + 1];
    words[0].push(Vec::new());
    // grow by appending letters; degree-0 letters are bounded by the length cap
    let mut frontier: Vec<(usize, Vec<u32>)> = vec![(0, Vec::new())];
    while let Some((d, w)) = frontier.pop() {
        if w.len() >= len_cap {
            continue;
        }
        for (k, (ld, _, _, _)) in alphabet.letters.iter().enumerate() {
            let nd = d + ld;
            if nd > cap {
                continue;
            }
            let mut nw = w.clone();
            nw.push(k as u32);
            words[nd].push(nw.clone());
            frontier.push((nd, nw));
        }
    }
    words
}

fn word_label(alphabet: &Alphabet, w: &[u32]) -> Label {
    Label::word(w.iter().map(|k| alphabet.letters[*k as usize].3.clone()).collect())
}

/// Shared structure of bar and cobar word modules.
#[derive(Debug)]
pub struct WordModule {
    pub module: Arc<BasedModule>,
    pub alphabet: Alphabet,
    /// per degree, parallel to labels: letter-index sequences
    decomp: Vec<Vec<Vec<u32>>>,
}

impl WordModule {
    fn build(alphabet: Alphabet, window: Window) -> WordModule {
        let words = enumerate_words(&alphabet, window);
        let mut labels = Vec::new();
        for (d, ws) in words.iter().enumerate() {
            for w in ws {
                labels.push((d, word_label(&alphabet, w)));
            }
        }
        let module = BasedModule::from_labels(window, labels);
        let mut decomp: Vec<Vec<Vec<u32>>> = Vec::with_capacity(window.degree_cap + 1);
        for d in 0..=window.degree_cap {
            let mut row = Vec::with_capacity(module.dim(d));
            for l in module.labels(d) {
                let seq: Vec<u32> = l
                    .letters()
                    .iter()
                    .map(|letter| alphabet.find(letter).expect("word letter in alphabet"))
                    .collect();
                row.push(seq);
            }
            decomp.push(row);
        }
        WordModule { module, alphabet, decomp }
    }

    pub fn word(&self, d: usize, i: u32) -> &[u32] {
        &self.decomp[d][i as usize]
    }

    pub fn length(&self, d: usize, i: u32) -> usize {
        self.word(d, i).len()
    }

    pub fn index_of_word(&self, w: &[u32]) -> Option<(usize, u32)> {
        let d: usize = w.iter().map(|k| self.alphabet.degree(*k)).sum();
        if d > self.module.window.degree_cap {
            return None;
        }
        if let Some(cap) = self.module.window.word_cap {
            if w.len() > cap {
                return None;
            }
        }
        let l = word_label(&self.alphabet, w);
        self.module.index_of(d, &l).map(|i| (d, i))
    }

    pub fn empty_word(&self) -> (usize, u32) {
        (0, self.module.index_of(0, &Label::One).expect("empty word"))
    }
}

/// The bar construction of an augmented DGA: the tensor coalgebra on the
/// desuspended augmentation ideal, with the tautological twisting cochain.
pub struct BarCoalgebra {
    pub dgc: DgCoalgebra,
    pub words: WordModule,
    pub taut: GradedMap,
    pub algebra_module: Arc<BasedModule>,
    /// set when the input is not simply connected, so the word cap truncates
    pub truncation_warning: bool,
}

impl BarCoalgebra {
    pub fn module(&self) -> &Arc<BasedModule> {
        &self.words.module
    }
}

/// Connectedness needed by the bar construction: degree 0 is spanned by the
/// unit, so the augmentation ideal has no degree-0 part.
fn check_connected(module: &Arc<BasedModule>) -> Result<()> {
    if module.dim(0) != 1 {
        return Err(Error::NegativeDegree(format!(
            "augmentation ideal meets degree 0 (degree-0 dimension {})",
            module.dim(0)
        )));
    }
    Ok(())
}

pub fn bar(a: &DgAlgebra) -> Result<BarCoalgebra> {
    bar_in(a, a.window())
}

/// Bar construction with an explicit output window; the input may live in a
/// larger window, which keeps the output exact through its own cap.
pub fn bar_in(a: &DgAlgebra, window: Window) -> Result<BarCoalgebra> {
    check_connected(a.module())?;
    let field = a.field();
    let alphabet = Alphabet::new(a.module(), -1);
    let not_simply_connected = alphabet.letters.iter().any(|(ld, _, _, _)| *ld == 0);
    if not_simply_connected && window.word_cap.is_none() {
        return Err(Error::NegativeDegree(
            "input has degree-1 generators; a finite word cap is required".into(),
        ));
    }
    let words = WordModule::build(alphabet, window);
    let module = Arc::clone(&words.module);

    // differential = tensor differential (letterwise conjugated d) + the
    // coderivation extending bar deletion (letterwise merged multiplication)
    let mut d_map = GradedMap::zero(&module, &module, 1, field);
    for deg in 0..=window.degree_cap {
        for i in 0..module.dim(deg) as u32 {
            let w = words.word(deg, i).to_vec();
            let mut col = VecBuilder::new();
            let mut prefix = 0i64;
            for (slot, k) in w.iter().enumerate() {
                let (ld, ad, ai, _) = words.alphabet.letters[*k as usize].clone();
                // conjugated letter differential: sign (−1)^{|d|} for moving the
                // desuspension past d, times the prefix sign
                let slot_sign = koszul(1, prefix) * shift_conjugation_sign(1);
                for (bi, c) in a.cx.d.column(ad, ai) {
                    let nl = a.module().label(ad + 1, *bi);
                    if let Some(nk) = words.alphabet.find(nl) {
                        let mut nw = w.clone();
                        nw[slot] = nk;
                        if let Some((nd, ni)) = words.index_of_word(&nw) {
                            debug_assert_eq!(nd, deg + 1);
                            col.add(ni, c.scaled(slot_sign));
                        }
                    }
                }
                // deletion: merge letters at (slot, slot+1); the suspension pair
                // contributes (−1)^{letter degree of the first factor}
                if slot + 1 < w.len() {
                    let k2 = w[slot + 1];
                    let (_, bd, bi2, _) = words.alphabet.letters[k2 as usize].clone();
                    let merge_sign = koszul(1, prefix) * koszul(1, ld as i64);
                    if let Some((_, sq_i)) = a.square.index_of_pair(ad, ai, bd, bi2) {
                        for (ci, c) in a.mul.column(ad + bd, sq_i) {
                            let nl = a.module().label(ad + bd, *ci);
                            if let Some(nk) = words.alphabet.find(nl) {
                                let mut nw = w.clone();
                                nw[slot] = nk;
                                nw.remove(slot + 1);
                                if let Some((nd, ni)) = words.index_of_word(&nw) {
                                    debug_assert_eq!(nd, deg + 1);
                                    col.add(ni, c.scaled(merge_sign));
                                }
                            }
                        }
                    }
                }
                prefix += ld as i64;
            }
            d_map.set_column(deg, i, col.build());
        }
    }

    // deconcatenation comultiplication (sign-free)
    let cx = Complex::new(Arc::clone(&module), d_map);
    let square = tensor(&module, &module)?;
    let mut comul = GradedMap::zero(&module, &square.module, 0, field);
    for deg in 0..=window.degree_cap {
        for i in 0..module.dim(deg) as u32 {
            let w = words.word(deg, i).to_vec();
            let mut col = VecBuilder::new();
            for cut in 0..=w.len() {
                let (d1, i1) = match words.index_of_word(&w[..cut]) {
                    Some(x) => x,
                    None => continue,
                };
                let (d2, i2) = match words.index_of_word(&w[cut..]) {
                    Some(x) => x,
                    None => continue,
                };
                if let Some((_, t)) = square.index_of_pair(d1, i1, d2, i2) {
                    col.add(t, field.one());
                }
            }
            comul.set_column(deg, i, col.build());
        }
    }
    let ground = BasedModule::ground(window);
    let (e0, ei) = words.empty_word();
    let mut counit = GradedMap::zero(&module, &ground, 0, field);
    counit.set_column(e0, ei, vec![(0, field.one())]);
    let mut coaug = GradedMap::zero(&ground, &module, 0, field);
    coaug.set_column(0, 0, vec![(ei, field.one())]);
    let dgc = DgCoalgebra { cx, square, comul, counit, coaug, ground };

    // tautological twisting cochain: the structural degree-1 isomorphism on
    // one-letter words, zero elsewhere
    let mut taut = GradedMap::zero(&module, a.module(), 1, field);
    for deg in 0..=window.degree_cap {
        for i in 0..module.dim(deg) as u32 {
            let w = words.word(deg, i);
            if w.len() == 1 {
                let (_, ad, ai, _) = words.alphabet.letters[w[0] as usize].clone();
                debug_assert_eq!(ad, deg + 1);
                taut.set_column(deg, i, vec![(ai, field.one())]);
            }
        }
    }

    Ok(BarCoalgebra {
        dgc,
        words,
        taut,
        algebra_module: Arc::clone(a.module()),
        truncation_warning: not_simply_connected,
    })
}

/// Functoriality of the bar construction: apply a DGA map letterwise.
pub fn bar_map(f: &GradedMap, src: &BarCoalgebra, tgt: &BarCoalgebra) -> GradedMap {
    let field = f.field;
    GradedMap::from_fn(src.module(), tgt.module(), 0, field, |deg, i| {
        let w = src.words.word(deg, i);
        let mut terms: Vec<(Vec<u32>, Scalar)> = vec![(Vec::new(), field.one())];
        for k in w {
            let (_, ad, ai, _) = src.words.alphabet.letters[*k as usize].clone();
            let img = f.column(ad, ai);
            let mut next = Vec::new();
            for (prefix, c) in &terms {
                for (bi, v) in img {
                    let nl = f.tgt.label(ad, *bi);
                    if let Some(nk) = tgt.words.alphabet.find(nl) {
                        let mut nw = prefix.clone();
                        nw.push(nk);
                        next.push((nw, c.mul(v)));
                    }
                }
            }
            terms = next;
        }
        let mut col = VecBuilder::new();
        for (nw, c) in terms {
            if let Some((nd, ni)) = tgt.words.index_of_word(&nw) {
                debug_assert_eq!(nd, deg);
                col.add(ni, c);
            }
        }
        col.build()
    })
}

/// The cobar construction of a connected DGC: the tensor algebra on the
/// suspended coaugmentation coideal.
pub struct CobarAlgebra {
    pub dga: DgAlgebra,
    pub words: WordModule,
    pub taut: GradedMap,
    pub coalgebra_module: Arc<BasedModule>,
}

impl CobarAlgebra {
    pub fn module(&self) -> &Arc<BasedModule> {
        &self.dga.cx.module
    }
}

pub fn cobar(c: &DgCoalgebra) -> Result<CobarAlgebra> {
    cobar_in(c, c.window())
}

/// Cobar construction with an explicit output window.
pub fn cobar_in(c: &DgCoalgebra, window: Window) -> Result<CobarAlgebra> {
    check_connected(c.module())?;
    let field = c.field();
    let alphabet = Alphabet::new(c.module(), 1);
    let words = WordModule::build(alphabet, window);
    let module = Arc::clone(&words.module);
    let reduced = c.reduced_comul();

    // derivation determined on generators by the differential and the reduced
    // comultiplication
    let mut d_map = GradedMap::zero(&module, &module, 1, field);
    for deg in 0..=window.degree_cap {
        for i in 0..module.dim(deg) as u32 {
            let w = words.word(deg, i).to_vec();
            let mut col = VecBuilder::new();
            let mut prefix = 0i64;
            for (slot, k) in w.iter().enumerate() {
                let (ld, cd, ci, _) = words.alphabet.letters[*k as usize].clone();
                let slot_sign = koszul(1, prefix);
                // −s d s⁻¹ on the letter
                let d_sign = slot_sign * shift_conjugation_sign(1);
                for (bi, v) in c.cx.d.column(cd, ci) {
                    let nl = c.module().label(cd + 1, *bi);
                    if let Some(nk) = words.alphabet.find(nl) {
                        let mut nw = w.clone();
                        nw[slot] = nk;
                        if let Some((_, ni)) = words.index_of_word(&nw) {
                            col.add(ni, v.scaled(d_sign));
                        }
                    }
                }
                // (s ⊗ s) Δ̄ s⁻¹ on the letter: sign (−1)^{|c'|} per term
                for (pi, v) in reduced.column(cd, ci) {
                    let (c1d, c1i, c2d, c2i) = c.square.decompose(cd, *pi);
                    let split_sign = slot_sign * koszul(1, c1d as i64);
                    let l1 = c.module().label(c1d, c1i);
                    let l2 = c.module().label(c2d, c2i);
                    if let (Some(k1), Some(k2)) = (words.alphabet.find(l1), words.alphabet.find(l2)) {
                        let mut nw = w.clone();
                        nw[slot] = k1;
                        nw.insert(slot + 1, k2);
                        if let Some((_, ni)) = words.index_of_word(&nw) {
                            col.add(ni, v.scaled(split_sign));
                        }
                    }
                }
                prefix += ld as i64;
            }
            d_map.set_column(deg, i, col.build());
        }
    }

    let cx = Complex::new(Arc::clone(&module), d_map);
    let square = tensor(&module, &module)?;
    // concatenation product (sign-free)
    let mut mul = GradedMap::zero(&square.module, &module, 0, field);
    for deg in 0..=window.degree_cap {
        for i in 0..square.module.dim(deg) as u32 {
            let (d1, i1, d2, i2) = square.decompose(deg, i);
            let mut w = words.word(d1, i1).to_vec();
            w.extend_from_slice(words.word(d2, i2));
            if let Some((nd, ni)) = words.index_of_word(&w) {
                debug_assert_eq!(nd, deg);
                mul.set_column(deg, i, vec![(ni, field.one())]);
            }
        }
    }
    let ground = BasedModule::ground(window);
    let (e0, ei) = words.empty_word();
    let mut unit = GradedMap::zero(&ground, &module, 0, field);
    unit.set_column(0, 0, vec![(ei, field.one())]);
    let mut counit = GradedMap::zero(&module, &ground, 0, field);
    counit.set_column(e0, ei, vec![(0, field.one())]);
    let dga = DgAlgebra { cx, square, mul, unit, counit, ground };

    // tautological twisting cochain: one-letter inclusion of the coideal
    let mut taut = GradedMap::zero(c.module(), &module, 1, field);
    for cd in 1..=window.degree_cap {
        for ci in 0..c.module().dim(cd) as u32 {
            let l = c.module().label(cd, ci);
            if let Some(k) = words.alphabet.find(l) {
                if let Some((nd, ni)) = words.index_of_word(&[k]) {
                    debug_assert_eq!(nd, cd + 1);
                    taut.set_column(cd, ci, vec![(ni, field.one())]);
                }
            }
        }
    }

    Ok(CobarAlgebra { dga, words, taut, coalgebra_module: Arc::clone(c.module()) })
}

/// Functoriality of the cobar construction: apply a DGC map letterwise.
pub fn cobar_map(g: &GradedMap, src: &CobarAlgebra, tgt: &CobarAlgebra) -> GradedMap {
    let field = g.field;
    GradedMap::from_fn(src.module(), tgt.module(), 0, field, |deg, i| {
        let w = src.words.word(deg, i);
        let mut terms: Vec<(Vec<u32>, Scalar)> = vec![(Vec::new(), field.one())];
        for k in w {
            let (_, cd, ci, _) = src.words.alphabet.letters[*k as usize].clone();
            let img = g.column(cd, ci);
            let mut next = Vec::new();
            for (prefix, c) in &terms {
                for (bi, v) in img {
                    let nl = g.tgt.label(cd, *bi);
                    if let Some(nk) = tgt.words.alphabet.find(nl) {
                        let mut nw = prefix.clone();
                        nw.push(nk);
                        next.push((nw, c.mul(v)));
                    }
                }
            }
            terms = next;
        }
        let mut col = VecBuilder::new();
        for (nw, c) in terms {
            if let Some((nd, ni)) = tgt.words.index_of_word(&nw) {
                debug_assert_eq!(nd, deg);
                col.add(ni, c);
            }
        }
        col.build()
    })
}

/// Corestriction: the unique DGC map `g_t : C → BA` with `t^A ∘ g_t = t`,
/// given on the coideal by words of `t`-images along iterated reduced
/// comultiplications (finite by cocompleteness).
pub fn corestrict(t: &GradedMap, c: &DgCoalgebra, target: &BarCoalgebra) -> Result<GradedMap> {
    let field = t.field;
    let reduced = c.reduced_comul();
    let window = target.module().window;
    let cap = window.word_cap.unwrap_or(window.degree_cap);
    let mut out = GradedMap::zero(c.module(), target.module(), 0, field);
    // the coaugmentation goes to the empty word
    let one = c.coaug.apply(&Element::basis(&c.ground, 0, 0, field));
    let (_, ei) = target.words.empty_word();
    for (i, v) in &one.coords {
        out.set_column(0, *i, vec![(ei, v.clone())]);
    }
    for deg in 1..=c.window().degree_cap {
        for i in 0..c.module().dim(deg) as u32 {
            let mut col = VecBuilder::new();
            // stage n holds the terms of the n-fold reduced comultiplication
            let mut terms: Vec<(Vec<(usize, u32)>, Scalar)> = vec![(vec![(deg, i)], field.one())];
            let mut n = 1usize;
            while !terms.is_empty() {
                // letterwise image through desuspension ∘ t (degree 0, no signs)
                for (seq, coeff) in &terms {
                    let mut images: Vec<(Vec<u32>, Scalar)> = vec![(Vec::new(), coeff.clone())];
                    for (cd, ci) in seq {
                        let tcol = t.column(*cd, *ci);
                        let mut next = Vec::new();
                        for (prefix, cc) in &images {
                            for (ai, v) in tcol {
                                let al = t.tgt.label(cd + 1, *ai);
                                if let Some(k) = target.words.alphabet.find(al) {
                                    let mut nw = prefix.clone();
                                    nw.push(k);
                                    next.push((nw, cc.mul(v)));
                                }
                            }
                        }
                        images = next;
                        if images.is_empty() {
                            break;
                        }
                    }
                    for (w, cc) in images {
                        if cc.is_zero() {
                            continue;
                        }
                        if n > cap {
                            return Err(Error::WordCapExceeded {
                                cap,
                                witness: c.module().label(deg, i).to_string(),
                            });
                        }
                        if let Some((nd, ni)) = target.words.index_of_word(&w) {
                            debug_assert_eq!(nd, deg);
                            col.add(ni, cc);
                        }
                    }
                }
                // expand the leftmost factor by the reduced comultiplication
                let mut next_terms: Vec<(Vec<(usize, u32)>, Scalar)> = Vec::new();
                for (seq, coeff) in &terms {
                    let (hd, hi) = seq[0];
                    for (pi, v) in reduced.column(hd, hi) {
                        let (c1d, c1i, c2d, c2i) = c.square.decompose(hd, *pi);
                        let mut nseq = Vec::with_capacity(seq.len() + 1);
                        nseq.push((c1d, c1i));
                        nseq.push((c2d, c2i));
                        nseq.extend_from_slice(&seq[1..]);
                        next_terms.push((nseq, coeff.mul(v)));
                    }
                }
                terms = next_terms;
                n += 1;
                if n > c.window().degree_cap + 2 {
                    return Err(Error::Other(format!(
                        "reduced comultiplication of {} does not exhaust (non-cocomplete input)",
                        c.module().label(deg, i)
                    )));
                }
            }
            out.set_column(deg, i, col.build());
        }
    }
    Ok(out)
}

/// Extension: the unique DGA map `f^t : ΩC → A` with `f^t ∘ t_C = t`,
/// the multiplicative extension of `t` on generators.
pub fn extend(t: &GradedMap, source: &CobarAlgebra, a: &DgAlgebra) -> GradedMap {
    let field = t.field;
    GradedMap::from_fn(source.module(), a.module(), 0, field, |deg, i| {
        let w = source.words.word(deg, i);
        let mut acc = a.one();
        for k in w {
            let (_, cd, ci, _) = source.words.alphabet.letters[*k as usize].clone();
            let img = Element {
                module: Arc::clone(a.module()),
                degree: cd + 1,
                coords: t.column(cd, ci).to_vec(),
            };
            acc = a.mul_elems(&acc, &img);
            if acc.is_zero() {
                break;
            }
        }
        if acc.is_zero() || acc.degree != deg {
            Vec::new()
        } else {
            acc.coords
        }
    })
}

/// The adjunction counit `ε : ΩBA → A`: the extension of the tautological
/// twisting cochain of `BA`.
pub fn adjunction_counit(bar_a: &BarCoalgebra, omega_bar: &CobarAlgebra, a: &DgAlgebra) -> GradedMap {
    extend(&bar_a.taut, omega_bar, a)
}

/// The adjunction unit `η : C → BΩC`: the corestriction of the tautological
/// twisting cochain of `ΩC`.
pub fn adjunction_unit(c: &DgCoalgebra, omega: &CobarAlgebra, bar_omega: &BarCoalgebra) -> Result<GradedMap> {
    corestrict(&omega.taut, c, bar_omega)
}

/// Pieces produced while checking the adjunction on an algebra.
pub struct AdjunctionData {
    pub bar: BarCoalgebra,
    pub omega_bar: CobarAlgebra,
    pub counit: GradedMap,
}

/// Verify `ε∘t_BA = t^A`, that ε is a DGA map, the triangle identity through
/// the bar side, and that `H(ε)` is an isomorphism on the reliable range.
pub fn check_adjunction_algebra(a: &DgAlgebra) -> Result<(Report, AdjunctionData)> {
    let mut rep = Report::default();
    let bar_a = bar(a)?;
    let omega_bar = cobar(&bar_a.dgc)?;
    let counit = adjunction_counit(&bar_a, &omega_bar, a);
    rep.push(crate::dg::map_identity_check(
        "ε∘t_BA = t^A",
        &omega_bar.taut.then(&counit),
        &bar_a.taut,
    ));
    let mut dga_rep = crate::dg::check_dga_map(&counit, &omega_bar.dga, a);
    for c in &mut dga_rep.checks {
        c.name = format!("counit {}", c.name);
    }
    rep.merge(dga_rep);
    let bar_omega_bar = bar(&omega_bar.dga)?;
    let unit_on_bar = adjunction_unit(&bar_a.dgc, &omega_bar, &bar_omega_bar)?;
    let b_counit = bar_map(&counit, &bar_omega_bar, &bar_a);
    rep.push(crate::dg::map_identity_check(
        "Bε∘η_B = id",
        &unit_on_bar.then(&b_counit),
        &GradedMap::identity(bar_a.module(), a.field()),
    ));
    let h_src = homology(&omega_bar.dga.cx)?;
    let h_tgt = homology(&a.cx)?;
    let upto = a.window().reliable();
    let iso = induced_iso_upto(&h_src, &h_tgt, &counit, &omega_bar.dga.cx.d, &a.cx.d, upto)?;
    rep.push(crate::dg::AxiomCheck {
        name: format!("H(ε) iso through degree {upto}"),
        failure: if iso { None } else { Some("induced map not invertible".into()) },
    });
    Ok((rep, AdjunctionData { bar: bar_a, omega_bar, counit }))
}

/// Verify `t^ΩC∘η = t_C`, that η is a DGC map, the triangle identity through
/// the cobar side, and that `H(η)` is an isomorphism on the reliable range.
///
/// The bar of the cobar misses letters at the very top of the window, so it
/// is built one degree lower than the input; the homology claim is made
/// through `cap − 2` of the input, which is exact for what is compared.
pub fn check_adjunction_coalgebra(c: &DgCoalgebra) -> Result<Report> {
    let mut rep = Report::default();
    let big = c.window();
    let low = Window::new(big.degree_cap - 1, big.word_cap.map(|w| w.min(big.degree_cap - 1)));
    let omega = cobar(c)?;
    let bar_omega = bar_in(&omega.dga, low)?;
    let c_low = c.restricted(low);
    let tgt = omega.taut.tgt.clone();
    let taut_low = omega.taut.restricted(&c_low.cx.module, &tgt);
    let unit = corestrict(&taut_low, &c_low, &bar_omega)?;
    rep.push(crate::dg::map_identity_check(
        "t^ΩC∘η = t_C",
        &unit.then(&bar_omega.taut),
        &taut_low,
    ));
    let mut dgc_rep = crate::dg::check_dgc_map(&unit, &c_low, &bar_omega.dgc);
    for ch in &mut dgc_rep.checks {
        ch.name = format!("unit {}", ch.name);
    }
    rep.merge(dgc_rep);
    let omega_bar_omega = cobar_in(&bar_omega.dgc, big)?;
    let omega_unit = cobar_map(&unit, &omega, &omega_bar_omega);
    let counit_on_omega = adjunction_counit(&bar_omega, &omega_bar_omega, &omega.dga);
    rep.push(crate::dg::map_identity_check(
        "ε_Ω∘Ωη = id",
        &omega_unit.then(&counit_on_omega),
        &GradedMap::identity(omega.module(), c.field()),
    ));
    let h_src = homology(&c_low.cx)?;
    let h_tgt = homology(&bar_omega.dgc.cx)?;
    let upto = low.reliable();
    let iso = induced_iso_upto(&h_src, &h_tgt, &unit, &c_low.cx.d, &bar_omega.dgc.cx.d, upto)?;
    rep.push(crate::dg::AxiomCheck {
        name: format!("H(η) iso through degree {upto}"),
        failure: if iso { None } else { Some("induced map not invertible".into()) },
    });
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::dg::check_twisting_cochain;

    fn windowed(n: usize) -> Window {
        Window::new(n, Some(n))
    }

    #[test]
    fn bar_of_ground_is_ground() {
        let k = DgAlgebra::ground_algebra(windowed(6), Field::Rational);
        let b = bar(&k).unwrap();
        assert_eq!(b.module().total_dim(), 1);
        assert!(b.dgc.validate().passed());
    }

    #[test]
    fn bar_of_exterior_word_count() {
        // exactly one word [x|…|x] in each even degree 2n ≤ N
        let c = Catalog::new(Field::Rational, windowed(10));
        let b = bar(&c.exterior3()).unwrap();
        for d in 0..=10usize {
            let expect = usize::from(d % 2 == 0);
            assert_eq!(b.module().dim(d), expect, "degree {d}");
        }
        let rep = b.dgc.validate();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn bar_of_truncated_dimensions() {
        // letters t (degree 1) and t² (degree 3): dims 1,1,1,2,3 in degrees 0..4
        let c = Catalog::new(Field::Rational, windowed(8));
        let b = bar(&c.truncated23()).unwrap();
        let dims: Vec<usize> = (0..=4).map(|d| b.module().dim(d)).collect();
        assert_eq!(dims, vec![1, 1, 1, 2, 3]);
        let rep = b.dgc.validate();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn tautological_cochains_are_twisting_cochains() {
        let cat = Catalog::new(Field::Rational, windowed(8));
        for a in [cat.exterior3(), cat.truncated23(), cat.tensor_both()] {
            let b = bar(&a).unwrap();
            let rep = check_twisting_cochain(&b.taut, &b.dgc, &a);
            assert!(rep.passed(), "t^A:\n{rep}");
            let o = cobar(&b.dgc).unwrap();
            assert!(o.dga.validate().passed());
            let rep = check_twisting_cochain(&o.taut, &b.dgc, &o.dga);
            assert!(rep.passed(), "t_C:\n{rep}");
        }
    }

    #[test]
    fn cup_and_maurer_cartan_values() {
        // (t^A ∪ t^A)([t|t]) = −t², matching Dt^A on the two-letter word
        let cat = Catalog::new(Field::Rational, windowed(8));
        let a = cat.truncated23();
        let b = bar(&a).unwrap();
        let cup = crate::dg::cup(&b.taut, &b.taut, &b.dgc, &a);
        let tt = Element::from_label(
            b.module(),
            2,
            &Label::word(vec![Label::named("t"), Label::named("t")]),
            a.field(),
        )
        .unwrap();
        let img = cup.apply(&tt);
        let t2 = a.module().index_of(4, &Label::named("t^2")).unwrap();
        assert_eq!(img.coords, vec![(t2, a.field().from_i64(-1))]);
        let dt = crate::dg::hom_d(&b.taut, &b.dgc.cx.d, &a.cx.d);
        assert_eq!(dt.apply(&tt).coords, img.coords);
    }

    #[test]
    fn twisting_cochain_mutation_is_caught() {
        // flipping the sign of t^A on a single letter of the tensor algebra
        // breaks the Maurer-Cartan equation on mixed two-letter words
        let cat = Catalog::new(Field::Rational, windowed(8));
        let a = cat.tensor_both();
        let b = bar(&a).unwrap();
        let mut bad = b.taut.clone();
        let x1 = Label::pair(Label::named("x"), Label::One);
        let i = b.module().index_of(2, &Label::word(vec![x1.clone()])).unwrap();
        bad.set_column(
            2,
            i,
            vec![(a.module().index_of(3, &x1).unwrap(), a.field().from_i64(-1))],
        );
        let rep = check_twisting_cochain(&bad, &b.dgc, &a);
        assert!(!rep.passed());
        let witness = rep.first_failure().unwrap().failure.clone().unwrap();
        assert!(witness.contains("x⊗1"), "{witness}");
    }

    #[test]
    fn cobar_of_bar_exterior() {
        let cat = Catalog::new(Field::Rational, windowed(8));
        let a = cat.exterior3();
        let b = bar(&a).unwrap();
        let o = cobar(&b.dgc).unwrap();
        // degree 3 basis: the single word on the letter [x]
        assert_eq!(o.module().dim(3), 1);
        assert_eq!(o.module().label(3, 0).to_string(), "[[x]]");
        assert!(o.dga.cx.validate().is_ok());
    }

    #[test]
    fn corestriction_of_tautological_is_identity() {
        let cat = Catalog::new(Field::Rational, windowed(8));
        let a = cat.truncated23();
        let b = bar(&a).unwrap();
        let g = corestrict(&b.taut, &b.dgc, &b).unwrap();
        assert!(g.equals(&GradedMap::identity(b.module(), a.field())));
    }

    #[test]
    fn corestriction_from_ground() {
        let cat = Catalog::new(Field::Rational, windowed(6));
        let a = cat.exterior3();
        let b = bar(&a).unwrap();
        let k = DgCoalgebra::ground_coalgebra(windowed(6), a.field());
        let t = GradedMap::zero(k.module(), a.module(), 1, a.field());
        let g = corestrict(&t, &k, &b).unwrap();
        // g_t = coaugmentation of BA
        assert!(g.equals(&b.dgc.coaug));
    }

    #[test]
    fn extension_of_tautological_is_identity() {
        let cat = Catalog::new(Field::Rational, windowed(8));
        let a = cat.truncated23();
        let b = bar(&a).unwrap();
        let o = cobar(&b.dgc).unwrap();
        let f = extend(&o.taut, &o, &o.dga);
        assert!(f.equals(&GradedMap::identity(o.module(), a.field())));
    }

    #[test]
    fn counit_values_on_exterior() {
        let cat = Catalog::new(Field::Rational, windowed(8));
        let a = cat.exterior3();
        let b = bar(&a).unwrap();
        let o = cobar(&b.dgc).unwrap();
        let eps = adjunction_counit(&b, &o, &a);
        let sx = Element::from_label(
            o.module(),
            3,
            &Label::word(vec![Label::word(vec![Label::named("x")])]),
            a.field(),
        )
        .unwrap();
        let x = a.module().index_of(3, &Label::named("x")).unwrap();
        assert_eq!(eps.apply(&sx).coords, vec![(x, a.field().one())]);
        let sxx = Element::from_label(
            o.module(),
            5,
            &Label::word(vec![Label::word(vec![Label::named("x"), Label::named("x")])]),
            a.field(),
        )
        .unwrap();
        assert!(eps.apply(&sxx).is_zero());
    }

    #[test]
    fn adjunction_checks_on_catalog() {
        let cat = Catalog::new(Field::Rational, windowed(6));
        let a = cat.exterior3();
        let (rep, data) = check_adjunction_algebra(&a).unwrap();
        assert!(rep.passed(), "{rep}");
        // H(ΩBA) ≅ H(A): dimensions 1,0,0,1,0,0 through degree 5
        let h = homology(&data.omega_bar.dga.cx).unwrap();
        assert_eq!(h.dims(), vec![1, 0, 0, 1, 0, 0]);
        let c = bar(&cat.truncated23()).unwrap();
        let rep = check_adjunction_coalgebra(&c.dgc).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn ground_adjunction_is_trivial() {
        let k = DgAlgebra::ground_algebra(windowed(4), Field::Prime(2));
        let (rep, _) = check_adjunction_algebra(&k).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn degree_one_generators_need_a_word_cap() {
        let spec = crate::catalog::AlgebraSpec {
            name: "deg1".into(),
            field: Field::Rational,
            monomials: vec![(1, "e".into())],
            products: Default::default(),
            differential: Default::default(),
        };
        let a = spec.build(Window::plain(4)).unwrap();
        assert!(matches!(bar(&a), Err(Error::NegativeDegree(_))));
        let a = spec.build(Window::new(4, Some(3))).unwrap();
        let b = bar(&a).unwrap();
        assert!(b.truncation_warning);
        // the degree-0 letter makes words of every length; the cap keeps 4
        assert_eq!(b.module().dim(0), 4);
    }
}
