//! Smash-type presented algebras: words in degree-one generators times a
//! twisted group algebra, with the group part straightened to the right.
//!
//! Elements are finite sums `c · y_w e_f` stored canonically. The group
//! acts on generators through a realization, so straightening moves every
//! `e_f` past the letters at the cost of character values:
//! `e_f y_l = χ_l(f) y_{f·l} e_f`, and group parts multiply through a
//! 2-cocycle: `e_r e_s = ψ(r,s) e_{rs}`. Completion mirrors the free
//! engine but right-hand sides live in the smash algebra.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::grp::{GroupCocycle2, Subgroup, YDRealization};
use crate::ncpoly::{NCPoly, ParamScalar, Word};
use crate::{Error, Result};

/// Shared structure for a smash algebra: generators, the acting group,
/// its cocycle, and the straightening data.
#[derive(Clone, Debug)]
pub struct SmashContext {
    pub real: YDRealization,
    /// Local letter -> rack index.
    pub letters: Vec<usize>,
    /// Display names for the letters, defaulting to `y<rack index>`.
    pub names: Vec<String>,
    /// Group-element indices (into `real.group`) of the acting group F,
    /// sorted ascending; position 0 is the identity.
    pub f_elems: Vec<usize>,
    f_pos: HashMap<usize, usize>,
    /// psi[a][b] over F positions.
    psi: Vec<Vec<BigRational>>,
    mul_f: Vec<Vec<usize>>,
    inv_f: Vec<usize>,
    /// act[f position][local letter] -> local letter.
    act: Vec<Vec<u8>>,
    /// chi[local letter][f position].
    chi: Vec<Vec<BigRational>>,
}

impl SmashContext {
    /// Assemble and validate a context. Requires `letters` to be closed
    /// under the F-action and `psi` to be defined exactly on F.
    pub fn new(
        real: &YDRealization,
        letters: &[usize],
        f: &Subgroup,
        psi: &GroupCocycle2,
    ) -> Result<SmashContext> {
        f.check(&real.group)?;
        psi.check_group_cocycle()?;
        if psi.order() != f.elems.len() {
            return Err(Error::Invalid(format!(
                "cocycle is defined on {} elements but the group has {}",
                psi.order(),
                f.elems.len()
            )));
        }
        let mut f_elems = f.elems.clone();
        f_elems.sort_unstable();
        let f_pos: HashMap<usize, usize> =
            f_elems.iter().enumerate().map(|(p, &g)| (g, p)).collect();
        let mut letter_of_rack: HashMap<usize, u8> = HashMap::new();
        for (l, &i) in letters.iter().enumerate() {
            letter_of_rack.insert(i, l as u8);
        }
        let mut psi_table = vec![vec![BigRational::zero(); f_elems.len()]; f_elems.len()];
        let mut mul_f = vec![vec![0usize; f_elems.len()]; f_elems.len()];
        let mut inv_f = vec![0usize; f_elems.len()];
        for (a, &ga) in f_elems.iter().enumerate() {
            inv_f[a] = f_pos[&real.group.inv(ga)];
            for (b, &gb) in f_elems.iter().enumerate() {
                mul_f[a][b] = *f_pos
                    .get(&real.group.mul(ga, gb))
                    .ok_or_else(|| Error::Invalid("group not closed".into()))?;
                psi_table[a][b] = psi
                    .value(real.group.elem(ga), real.group.elem(gb))?
                    .clone();
                if psi_table[a][b].is_zero() {
                    return Err(Error::Invalid("cocycle value 0 is not invertible".into()));
                }
            }
        }
        let mut act = vec![vec![0u8; letters.len()]; f_elems.len()];
        let mut chi = vec![vec![BigRational::zero(); f_elems.len()]; letters.len()];
        for (p, &g) in f_elems.iter().enumerate() {
            for (l, &i) in letters.iter().enumerate() {
                let img = real.act(g, i);
                let Some(&img_l) = letter_of_rack.get(&img) else {
                    return Err(Error::Invalid(format!(
                        "generator set is not stable: {} moves index {i} outside",
                        real.group.elem(g)
                    )));
                };
                act[p][l] = img_l;
                chi[l][p] = real.chi_val(i, g).clone();
            }
        }
        Ok(SmashContext {
            real: real.clone(),
            letters: letters.to_vec(),
            names: letters.iter().map(|i| format!("y{i}")).collect(),
            f_elems,
            f_pos,
            psi: psi_table,
            mul_f,
            inv_f,
            act,
            chi,
        })
    }

    pub fn group_order(&self) -> usize {
        self.f_elems.len()
    }

    pub fn num_letters(&self) -> usize {
        self.letters.len()
    }

    pub fn identity_pos(&self) -> usize {
        self.f_pos[&self.real.group.identity()]
    }

    /// Position of a group element (index into `real.group`) inside F.
    pub fn pos_of(&self, g: usize) -> Option<usize> {
        self.f_pos.get(&g).copied()
    }

    pub fn psi_val(&self, a: usize, b: usize) -> &BigRational {
        &self.psi[a][b]
    }

    pub fn f_mul(&self, a: usize, b: usize) -> usize {
        self.mul_f[a][b]
    }

    pub fn f_inv(&self, a: usize) -> usize {
        self.inv_f[a]
    }

    /// chi of a local letter at an F position.
    /// The local letter `f · l` for an F-position and a local letter.
    pub fn act_local(&self, fp: usize, l: u8) -> u8 {
        self.act[fp][l as usize]
    }

    pub fn chi_at(&self, l: u8, fp: usize) -> &BigRational {
        &self.chi[l as usize][fp]
    }

    fn act_word(&self, fp: usize, w: &Word) -> (Word, BigRational) {
        let mut coeff = BigRational::one();
        let mut out = Vec::with_capacity(w.len());
        for &l in &w.0 {
            coeff *= &self.chi[l as usize][fp];
            out.push(self.act[fp][l as usize]);
        }
        (Word(out), coeff)
    }

    /// Product of two canonical terms:
    /// `(y_{w1} e_{f1})(y_{w2} e_{f2}) = χ·ψ · y_{w1·(f1·w2)} e_{f1 f2}`.
    pub fn term_mul(
        &self,
        w1: &Word,
        f1: usize,
        w2: &Word,
        f2: usize,
    ) -> (Word, usize, BigRational) {
        let (moved, chi) = self.act_word(f1, w2);
        let coeff = chi * &self.psi[f1][f2];
        (w1.concat(&moved), self.mul_f[f1][f2], coeff)
    }

    pub fn mul(&self, a: &SmashElement, b: &SmashElement) -> SmashElement {
        let mut out = SmashElement::zero();
        for ((w1, f1), c1) in &a.terms {
            for ((w2, f2), c2) in &b.terms {
                let (w, f, r) = self.term_mul(w1, *f1, w2, *f2);
                out.add_term(w, f, &c1.mul(c2).mul_ratio(&r));
            }
        }
        out
    }

    /// `e_f · a · e_{f^{-1}}` — the adjoint action used to close relation
    /// sets under the group.
    pub fn conjugate(&self, fp: usize, a: &SmashElement) -> SmashElement {
        let left = SmashElement::group_term(fp);
        let right = SmashElement::group_term(self.inv_f[fp]);
        self.mul(&self.mul(&left, a), &right)
    }

    /// Lift a parameter-free polynomial in the local letters to a smash
    /// element with identity group part.
    pub fn from_poly(&self, p: &NCPoly) -> SmashElement {
        let id = self.identity_pos();
        let mut out = SmashElement::zero();
        for (w, c) in p.terms() {
            out.add_term(w.clone(), id, c);
        }
        out
    }
}

/// A canonical element: finite sum of `c · y_w e_f` terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SmashElement {
    pub terms: BTreeMap<(Word, usize), ParamScalar>,
}

impl SmashElement {
    pub fn zero() -> Self {
        SmashElement { terms: BTreeMap::new() }
    }

    /// The unit: empty word, identity group part (position 0 is only the
    /// identity when the context says so; use [`SmashContext::identity_pos`]).
    pub fn group_term(fp: usize) -> Self {
        let mut e = SmashElement::zero();
        e.add_term(Word::empty(), fp, &ParamScalar::one());
        e
    }

    pub fn word_term(w: Word, fp: usize) -> Self {
        let mut e = SmashElement::zero();
        e.add_term(w, fp, &ParamScalar::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, w: Word, fp: usize, c: &ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((w, fp)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &SmashElement) {
        for ((w, f), c) in &other.terms {
            self.add_term(w.clone(), *f, c);
        }
    }

    pub fn sub(&self, other: &SmashElement) -> SmashElement {
        let mut out = self.clone();
        for ((w, f), c) in &other.terms {
            out.add_term(w.clone(), *f, &c.neg());
        }
        out
    }

    pub fn scale(&self, c: &ParamScalar) -> SmashElement {
        let mut out = SmashElement::zero();
        for ((w, f), k) in &self.terms {
            out.add_term(w.clone(), *f, &k.mul(c));
        }
        out
    }

    pub fn neg(&self) -> SmashElement {
        self.scale(&ParamScalar::one().neg())
    }

    /// Highest term key (deglex on the word, then group position).
    pub fn leading(&self) -> Option<(&Word, usize, &ParamScalar)> {
        self.terms.iter().next_back().map(|((w, f), c)| (w, *f, c))
    }

    /// Substitute rationals for formal parameters in every coefficient.
    pub fn substitute(&self, bindings: &BTreeMap<String, BigRational>) -> SmashElement {
        let mut out = SmashElement::zero();
        for ((w, f), c) in &self.terms {
            out.add_term(w.clone(), *f, &c.substitute(bindings));
        }
        out
    }

    /// Render with generator and group-element names.
    pub fn display(&self, ctx: &SmashContext) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for ((w, f), c) in self.terms.iter().rev() {
            let mut s = String::new();
            if !c.is_one() || (w.is_empty() && *f == ctx.identity_pos()) {
                s.push_str(&format!("({c})"));
            }
            for &l in &w.0 {
                if !s.is_empty() {
                    s.push(' ');
                }
                s.push_str(&ctx.names[l as usize]);
            }
            if *f != ctx.identity_pos() {
                if !s.is_empty() {
                    s.push(' ');
                }
                s.push_str(&format!("e[{}]", ctx.real.group.elem(ctx.f_elems[*f])));
            }
            if s.is_empty() {
                s.push('1');
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

/// A rewrite rule `y_lhs -> rhs` with `lhs` a pure word and every word of
/// `rhs` strictly smaller.
#[derive(Clone, Debug)]
pub struct SmashRule {
    pub lhs: Word,
    pub rhs: SmashElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Pending {
    deg: u32,
    a: usize,
    b: usize,
    overlap: usize,
}

/// A completed presented algebra of smash type.
#[derive(Clone, Debug)]
pub struct SmashAlgebra {
    pub ctx: SmashContext,
    rules: Vec<SmashRule>,
    /// All critical pairs resolved below the cap.
    pub complete: bool,
    pub degree_cap: u32,
}

fn nf_with(
    ctx: &SmashContext,
    rules: &[SmashRule],
    active: Option<&[bool]>,
    mut p: SmashElement,
) -> SmashElement {
    use std::ops::Bound;
    let id = ctx.identity_pos();
    // Rewriting the largest reducible term only creates strictly smaller
    // terms, so one downward sweep suffices: everything at or above `bound`
    // has already been verified irreducible and never changes again.
    let mut bound: Option<(Word, usize)> = None;
    loop {
        let mut hit: Option<((Word, usize), ParamScalar, usize, usize)> = None;
        {
            let iter: Box<dyn DoubleEndedIterator<Item = (&(Word, usize), &ParamScalar)>> =
                match &bound {
                    None => Box::new(p.terms.iter()),
                    Some(b) => Box::new(
                        p.terms
                            .range::<(Word, usize), _>((Bound::Unbounded, Bound::Excluded(b))),
                    ),
                };
            'scan: for (key, c) in iter.rev() {
                for (ri, rule) in rules.iter().enumerate() {
                    if let Some(flags) = active {
                        if !flags[ri] {
                            continue;
                        }
                    }
                    if let Some(pos) = key.0.find_factor(&rule.lhs) {
                        hit = Some((key.clone(), c.clone(), ri, pos));
                        break 'scan;
                    }
                }
            }
        }
        let Some(((w, f), c, ri, pos)) = hit else { return p };
        let rule = &rules[ri];
        let (pre, post) = w.split_factor(rule.lhs.len(), pos);
        p.add_term(w.clone(), f, &c.neg());
        // c · y_pre · rhs · y_post · e_f
        let left = SmashElement::word_term(pre, id);
        let right = SmashElement::word_term(post, f);
        let repl = ctx.mul(&ctx.mul(&left, &rule.rhs), &right).scale(&c);
        p.add_assign(&repl);
        bound = Some((w, f));
    }
}

fn orient(ctx: &SmashContext, p: SmashElement) -> Result<Option<SmashRule>> {
    if p.is_zero() {
        return Ok(None);
    }
    let (w, f, _) = p.leading().map(|(w, f, c)| (w.clone(), f, c.clone())).unwrap();
    // every term with the leading word must carry the same group part
    let same_word: Vec<usize> = p
        .terms
        .keys()
        .filter(|(tw, _)| *tw == w)
        .map(|(_, tf)| *tf)
        .collect();
    if same_word.len() > 1 {
        return Err(Error::NonUnitLeading(format!(
            "leading word appears with {} group components; cannot orient",
            same_word.len()
        )));
    }
    // right-multiply by e_{f^{-1}} so the leading term has identity group part
    let shifted = ctx.mul(&p, &SmashElement::group_term(ctx.f_inv(f)));
    let id = ctx.identity_pos();
    let c = shifted.terms[&(w.clone(), id)].clone();
    let Some(cinv) = c.inv() else {
        return Err(Error::NonUnitLeading(format!(
            "leading coefficient `{c}` of a relation is not invertible"
        )));
    };
    let monic = shifted.scale(&cinv);
    let rhs = SmashElement::word_term(w.clone(), id).sub(&monic);
    if let Some((rw, _, _)) = rhs.leading() {
        if *rw >= w {
            return Err(Error::Invalid(
                "orientation failed: right-hand side is not smaller".into(),
            ));
        }
    }
    Ok(Some(SmashRule { lhs: w, rhs }))
}

impl SmashAlgebra {
    /// Close `relations` under conjugation by the group, then run
    /// completion with critical pairs in ascending superposition degree.
    pub fn build(
        ctx: SmashContext,
        relations: &[SmashElement],
        degree_cap: u32,
    ) -> Result<SmashAlgebra> {
        let mut worklist: Vec<SmashElement> = Vec::new();
        for r in relations {
            for fp in 0..ctx.group_order() {
                worklist.push(ctx.conjugate(fp, r));
            }
        }
        worklist.reverse();

        let mut rules: Vec<SmashRule> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut heap: BinaryHeap<Reverse<Pending>> = BinaryHeap::new();
        let mut is_complete = false;
        let id = ctx.identity_pos();

        loop {
            while let Some(p) = worklist.pop() {
                let p = nf_with(&ctx, &rules, Some(&active), p);
                let Some(rule) = orient(&ctx, p)? else { continue };
                for i in 0..rules.len() {
                    if active[i] && rules[i].lhs.find_factor(&rule.lhs).is_some() {
                        active[i] = false;
                        let as_elem = SmashElement::word_term(rules[i].lhs.clone(), id)
                            .sub(&rules[i].rhs);
                        worklist.push(as_elem);
                    }
                }
                let n = rules.len();
                for i in 0..n {
                    if !active[i] {
                        continue;
                    }
                    for l in rules[i].lhs.overlaps(&rule.lhs) {
                        let deg = (rules[i].lhs.len() + rule.lhs.len() - l) as u32;
                        heap.push(Reverse(Pending { deg, a: i, b: n, overlap: l }));
                    }
                    for l in rule.lhs.overlaps(&rules[i].lhs) {
                        let deg = (rule.lhs.len() + rules[i].lhs.len() - l) as u32;
                        heap.push(Reverse(Pending { deg, a: n, b: i, overlap: l }));
                    }
                }
                for l in rule.lhs.overlaps(&rule.lhs) {
                    let deg = (2 * rule.lhs.len() - l) as u32;
                    heap.push(Reverse(Pending { deg, a: n, b: n, overlap: l }));
                }
                rules.push(rule);
                active.push(true);
            }

            let pending = loop {
                match heap.pop() {
                    None => break None,
                    Some(Reverse(p)) => {
                        if active[p.a] && active[p.b] {
                            break Some(p);
                        }
                    }
                }
            };
            let Some(p) = pending else {
                is_complete = true;
                break;
            };
            if p.deg > degree_cap {
                break;
            }
            let (la, lb) = (rules[p.a].lhs.clone(), rules[p.b].lhs.clone());
            let c_word = Word::from_slice(&lb.0[p.overlap..]);
            let a_word = Word::from_slice(&la.0[..la.len() - p.overlap]);
            let left = ctx.mul(
                &rules[p.a].rhs.clone(),
                &SmashElement::word_term(c_word, id),
            );
            let right = ctx.mul(
                &SmashElement::word_term(a_word, id),
                &rules[p.b].rhs.clone(),
            );
            worklist.push(left.sub(&right));
        }

        let mut final_rules: Vec<SmashRule> = rules
            .iter()
            .zip(&active)
            .filter(|(_, &a)| a)
            .map(|(r, _)| r.clone())
            .collect();
        final_rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        let snapshot = final_rules.clone();
        for rule in &mut final_rules {
            rule.rhs = nf_with(&ctx, &snapshot, None, rule.rhs.clone());
        }

        Ok(SmashAlgebra {
            ctx,
            rules: final_rules,
            complete: is_complete,
            degree_cap,
        })
    }

    pub fn rules(&self) -> &[SmashRule] {
        &self.rules
    }

    /// Canonical form modulo the rules (the normal form when `complete`).
    pub fn nf(&self, p: &SmashElement) -> SmashElement {
        nf_with(&self.ctx, &self.rules, None, p.clone())
    }

    pub fn is_zero_mod(&self, p: &SmashElement) -> bool {
        self.nf(p).is_zero()
    }

    /// Irreducible words by degree, stopping at the first empty degree.
    /// Requires a confluent system, otherwise counts could be wrong.
    pub fn normal_words(&self) -> Result<Vec<Vec<Word>>> {
        if !self.complete {
            return Err(Error::DegreeCap {
                cap: self.degree_cap,
                detail: "completion did not certify confluence".into(),
            });
        }
        let lhss: Vec<&Word> = self.rules.iter().map(|r| &r.lhs).collect();
        let m = self.ctx.num_letters() as u8;
        let mut levels: Vec<Vec<Word>> = vec![vec![Word::empty()]];
        loop {
            if levels.len() as u32 > self.degree_cap {
                return Err(Error::DegreeCap {
                    cap: self.degree_cap,
                    detail: "normal words do not terminate below the cap".into(),
                });
            }
            let mut next = Vec::new();
            for w in levels.last().unwrap() {
                for l in 0..m {
                    let mut nw = w.clone();
                    nw.push(l);
                    if !lhss.iter().any(|p| nw.ends_with(p)) {
                        next.push(nw);
                    }
                }
            }
            if next.is_empty() {
                return Ok(levels);
            }
            levels.push(next);
        }
    }

    /// Total dimension: normal words times the group order.
    pub fn dim(&self) -> Result<usize> {
        let words: usize = self.normal_words()?.iter().map(|l| l.len()).sum();
        Ok(words * self.ctx.group_order())
    }

    /// The full basis as (word, group position) pairs, degree by degree.
    pub fn basis(&self) -> Result<Vec<(Word, usize)>> {
        let mut out = Vec::new();
        for level in self.normal_words()? {
            for w in level {
                for f in 0..self.ctx.group_order() {
                    out.push((w.clone(), f));
                }
            }
        }
        Ok(out)
    }
}

/// Report of mapping one presented algebra into another: each source
/// relation must reduce to zero in the target (modulo extra ideal
/// generators appended to the target's presentation).
#[derive(Clone, Debug)]
pub struct QuotientMapReport {
    /// Per-relation residues that did not vanish, rendered.
    pub violations: Vec<String>,
    pub passed: bool,
}

/// Check that sending each source generator to `images[l]` and each group
/// element at source position `p` to the target position `group_images[p]`
/// maps every defining relation of the source into the ideal generated by
/// `extra` in the target. Membership is decided by completing the enlarged
/// system `target rules + extra`. Beyond the listed relations, the
/// structural ones are checked too: the group map must be a homomorphism
/// matching the two cocycles, and the straightening relations
/// `e_f y_l = χ_l(f) y_{f·l} e_f` must map into the ideal.
pub fn quotient_map_check(
    source: &SmashAlgebra,
    target: &SmashAlgebra,
    images: &[SmashElement],
    group_images: &[usize],
    extra: &[SmashElement],
    degree_cap: u32,
) -> Result<QuotientMapReport> {
    if images.len() != source.ctx.num_letters() {
        return Err(Error::Invalid(format!(
            "{} generator images needed, {} given",
            source.ctx.num_letters(),
            images.len()
        )));
    }
    if group_images.len() != source.ctx.group_order() {
        return Err(Error::Invalid(format!(
            "{} group images needed, {} given",
            source.ctx.group_order(),
            group_images.len()
        )));
    }
    // enlarged target: original relations plus the extra ideal generators
    let mut relations: Vec<SmashElement> = target
        .rules
        .iter()
        .map(|r| {
            SmashElement::word_term(r.lhs.clone(), target.ctx.identity_pos()).sub(&r.rhs)
        })
        .collect();
    relations.extend_from_slice(extra);
    let enlarged = SmashAlgebra::build(target.ctx.clone(), &relations, degree_cap)?;

    let map = |e: &SmashElement| -> SmashElement {
        let mut out = SmashElement::zero();
        for ((w, f), c) in &e.terms {
            let mut acc = SmashElement::group_term(target.ctx.identity_pos());
            for &l in &w.0 {
                acc = target.ctx.mul(&acc, &images[l as usize]);
            }
            acc = target
                .ctx
                .mul(&acc, &SmashElement::group_term(group_images[*f]));
            out.add_assign(&acc.scale(c));
        }
        out
    };

    let mut violations = Vec::new();
    let mut push_residue = |label: String, residue: SmashElement| {
        if !residue.is_zero() {
            violations.push(format!("{label} -> {}", residue.display(&target.ctx)));
        }
    };

    // group map respects products and the cocycles
    for a in 0..source.ctx.group_order() {
        for b in 0..source.ctx.group_order() {
            let lhs = target.ctx.mul(
                &SmashElement::group_term(group_images[a]),
                &SmashElement::group_term(group_images[b]),
            );
            let rhs = SmashElement::group_term(group_images[source.ctx.f_mul(a, b)])
                .scale(&ParamScalar::from_ratio(source.ctx.psi_val(a, b).clone()));
            push_residue(format!("group pair ({a},{b})"), enlarged.nf(&lhs.sub(&rhs)));
        }
    }

    // straightening relations e_f y_l - chi_l(f) y_{f·l} e_f
    for fp in 0..source.ctx.group_order() {
        for l in 0..source.ctx.num_letters() as u8 {
            let left = target.ctx.mul(
                &SmashElement::group_term(group_images[fp]),
                &images[l as usize],
            );
            // source-side right-hand side chi_l(f) y_{f·l} e_f, then mapped
            let moved = source.ctx.mul(
                &SmashElement::group_term(fp),
                &SmashElement::word_term(Word::gen(l), source.ctx.identity_pos()),
            );
            push_residue(
                format!("straightening (f{fp}, y{l})"),
                enlarged.nf(&left.sub(&map(&moved))),
            );
        }
    }

    for rule in &source.rules {
        let rel = SmashElement::word_term(rule.lhs.clone(), source.ctx.identity_pos())
            .sub(&rule.rhs);
        let residue = enlarged.nf(&map(&rel));
        push_residue(rel.display(&source.ctx), residue);
    }
    Ok(QuotientMapReport { passed: violations.is_empty(), violations })
}

/// The bosonization of a quadratic Nichols-type presentation by a
/// subgroup with a cocycle: generators = the full rack, relations = the
/// quadratic class relations, group part = F twisted by psi.
pub fn bosonize(
    rp: crate::rack::RackPreset,
    cp: crate::rack::CocyclePreset,
    f: &Subgroup,
    psi: &GroupCocycle2,
    degree_cap: u32,
) -> Result<SmashAlgebra> {
    let rack = rp.rack();
    let q = crate::rack::RackCocycle::preset(rp, cp)?;
    let real = YDRealization::standard(rp, cp)?;
    let letters: Vec<usize> = (0..rack.size()).collect();
    let mut ctx = SmashContext::new(&real, &letters, f, psi)?;
    ctx.names = rack.names.iter().map(|n| format!("y{n}")).collect();
    let relations: Vec<SmashElement> = super::nichols::nichols_relations(&rack, &q)
        .iter()
        .map(|p| ctx.from_poly(p))
        .collect();
    SmashAlgebra::build(ctx, &relations, degree_cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rack::{CocyclePreset, RackPreset};

    fn s3_ctx() -> SmashContext {
        let real = YDRealization::standard(RackPreset::O2_3, CocyclePreset::Minus).unwrap();
        let f = Subgroup { elems: (0..6).collect() };
        let psi = GroupCocycle2::trivial(real.group.elems().to_vec());
        SmashContext::new(&real, &[0, 1, 2], &f, &psi).unwrap()
    }

    #[test]
    fn straightening_moves_group_parts_right() {
        let ctx = s3_ctx();
        // e_f y_l = chi_l(f) y_{f·l} e_f for every pair
        for fp in 0..ctx.group_order() {
            for l in 0..3u8 {
                let left = ctx.mul(
                    &SmashElement::group_term(fp),
                    &SmashElement::word_term(Word::gen(l), ctx.identity_pos()),
                );
                let g = ctx.f_elems[fp];
                let moved = ctx.real.act(g, l as usize) as u8;
                let mut expect = SmashElement::zero();
                expect.add_term(
                    Word::gen(moved),
                    fp,
                    &ParamScalar::from_ratio(ctx.real.chi_val(l as usize, g).clone()),
                );
                assert_eq!(left, expect);
            }
        }
    }

    #[test]
    fn multiplication_is_associative_with_nontrivial_cocycle() {
        let real = YDRealization::standard(RackPreset::O2_4, CocyclePreset::Minus).unwrap();
        let f = Subgroup { elems: (0..24).collect() };
        let psi = GroupCocycle2::clifford(4);
        let ctx = SmashContext::new(&real, &[0, 1, 2, 3, 4, 5], &f, &psi).unwrap();
        // pseudo-random but deterministic triples
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let mk = |r: u64| {
                let w = Word(vec![(r % 6) as u8, ((r / 6) % 6) as u8]);
                SmashElement::word_term(w, (r / 36 % 24) as usize)
            };
            let (a, b, c) = (mk(next()), mk(next()), mk(next()));
            assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)));
        }
    }

    #[test]
    fn bosonization_dimensions() {
        let f = Subgroup { elems: (0..6).collect() };
        let real = YDRealization::standard(RackPreset::O2_3, CocyclePreset::Minus).unwrap();
        let psi = GroupCocycle2::trivial(real.group.elems().to_vec());
        let alg = bosonize(RackPreset::O2_3, CocyclePreset::Minus, &f, &psi, 10).unwrap();
        assert!(alg.complete);
        assert_eq!(alg.dim().unwrap(), 72);
        let trivial = Subgroup::trivial();
        let psi1 = GroupCocycle2::trivial(vec![real.group.elem(0).clone()]);
        let small = bosonize(RackPreset::O2_3, CocyclePreset::Minus, &trivial, &psi1, 10).unwrap();
        assert_eq!(small.dim().unwrap(), 12);
    }

    #[test]
    fn conjugation_closure_recovers_missing_relations() {
        // feed one diagonal and one off-diagonal class relation only; the
        // group conjugates generate the rest, so the dimension still
        // closes at 12·6
        let ctx = s3_ctx();
        let rack = RackPreset::O2_3.rack();
        let q = crate::rack::RackCocycle::preset(RackPreset::O2_3, CocyclePreset::Minus).unwrap();
        let all = crate::algebra::nichols::nichols_relations(&rack, &q);
        assert_eq!(all.len(), 5);
        // one square relation (single term) and one mixed-letter relation
        let square = all.iter().find(|p| p.num_terms() == 1).unwrap();
        let mixed = all.iter().find(|p| p.num_terms() > 1).unwrap();
        let partial = [ctx.from_poly(square), ctx.from_poly(mixed)];
        let alg = SmashAlgebra::build(ctx, &partial, 10).unwrap();
        assert_eq!(alg.dim().unwrap(), 72);
    }

    #[test]
    fn orientation_rejects_mixed_group_leading_terms() {
        let ctx = s3_ctx();
        // y_0 e_f - y_0: leading word appears with two group parts
        let mut bad = SmashElement::word_term(Word::gen(0), 3);
        bad.add_term(Word::gen(0), ctx.identity_pos(), &ParamScalar::one().neg());
        assert!(orient(&ctx, bad).is_err());
    }

    #[test]
    fn quotient_identity_map_passes() {
        let f = Subgroup { elems: (0..6).collect() };
        let real = YDRealization::standard(RackPreset::O2_3, CocyclePreset::Minus).unwrap();
        let psi = GroupCocycle2::trivial(real.group.elems().to_vec());
        let alg = bosonize(RackPreset::O2_3, CocyclePreset::Minus, &f, &psi, 10).unwrap();
        let images: Vec<SmashElement> = (0..3u8)
            .map(|l| SmashElement::word_term(Word::gen(l), alg.ctx.identity_pos()))
            .collect();
        let gmap: Vec<usize> = (0..alg.ctx.group_order()).collect();
        let rep = quotient_map_check(&alg, &alg, &images, &gmap, &[], 10).unwrap();
        assert!(rep.passed, "{:?}", rep.violations);
    }
}
