//! The antispherical module of the Hecke algebra attached to a Young subgroup
//! `S_mu`, and its Kazhdan-Lusztig basis.
//!
//! The standard basis `{N_w}` is indexed by the shortest coset representatives
//! `S(mu)`. The polynomials `n(x, y)` expressing the KL basis `{N_y}` in it are the
//! graded decomposition numbers of parabolic category O.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::hecke::KlTable;
use crate::kl_engine::{self, Move, SparseRow, StandardModule};
use crate::laurent::LaurentPoly;
use crate::symgroup::{Composition, CosetData, Permutation};
use crate::{Error, Result};

/// A combination of standard basis elements `N_w`, `w` in `S(mu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntisphericalElt {
    mu: Composition,
    terms: BTreeMap<Permutation, LaurentPoly>,
}

impl AntisphericalElt {
    pub fn zero(mu: &Composition) -> Self {
        AntisphericalElt { mu: mu.clone(), terms: BTreeMap::new() }
    }

    /// `N_w`; fails unless `w` is a shortest coset representative.
    pub fn basis(mu: &Composition, w: Permutation) -> Result<Self> {
        let mut out = Self::zero(mu);
        out.add_term(w, &LaurentPoly::one())?;
        Ok(out)
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Permutation, p: &LaurentPoly) -> Result<()> {
        if w.n() != self.mu.n() {
            return Err(Error::SizeMismatch(w.n(), self.mu.n()));
        }
        if !self.mu.is_coset_rep(&w) {
            return Err(Error::NotACosetRep(w));
        }
        if p.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(w.clone()).or_default();
        *entry += p;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
        Ok(())
    }

    fn add_unchecked(&mut self, w: Permutation, p: &LaurentPoly) {
        let entry = self.terms.entry(w.clone()).or_default();
        *entry += p;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        let mut out = Self::zero(&self.mu);
        for (w, c) in &self.terms {
            out.add_unchecked(w.clone(), &(c * p));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_unchecked(w.clone(), c);
        }
        out
    }

    /// Right action of `H_{s_i} + v` on the standard basis.
    pub fn gen_action(&self, i: usize) -> Result<Self> {
        let mut out = Self::zero(&self.mu);
        for (w, p) in &self.terms {
            let ws = w.mul_gen(i)?;
            if !self.mu.is_coset_rep(&ws) {
                continue;
            }
            out.add_unchecked(ws, p);
            let shift = if w.has_right_descent(i) { -1 } else { 1 };
            out.add_unchecked(w.clone(), &p.shift(shift));
        }
        Ok(out)
    }

    /// Right action of `H_{s_i}` alone: `N_w H_s = -v N_w` when `ws` leaves `S(mu)`.
    pub fn hecke_gen_action(&self, i: usize) -> Result<Self> {
        let mut out = Self::zero(&self.mu);
        let down = LaurentPoly::v_inv() - LaurentPoly::v();
        for (w, p) in &self.terms {
            let ws = w.mul_gen(i)?;
            if !self.mu.is_coset_rep(&ws) {
                out.add_unchecked(w.clone(), &p.shift(1).scale(&BigInt::from(-1)));
            } else {
                out.add_unchecked(ws, p);
                if w.has_right_descent(i) {
                    out.add_unchecked(w.clone(), &(p * &down));
                }
            }
        }
        Ok(out)
    }

    /// Bar involution `sum p_w N_w -> sum bar(p_w) N_e bar(H_w)`.
    pub fn bar(&self) -> Result<Self> {
        let shift = LaurentPoly::v() - LaurentPoly::v_inv();
        let mut out = Self::zero(&self.mu);
        let e = Permutation::identity(self.mu.n());
        for (w, p) in &self.terms {
            let mut acc = Self::zero(&self.mu);
            acc.add_unchecked(e.clone(), &p.bar());
            for i in w.reduced_word() {
                acc = acc.hecke_gen_action(i)?.add(&acc.scale(&shift));
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}

pub fn antispherical_gen_action(a: &AntisphericalElt, i: usize) -> Result<AntisphericalElt> {
    a.gen_action(i)
}

struct Antispherical<'a> {
    cosets: &'a CosetData,
    moves: Vec<Move>,
    gens: usize,
}

impl<'a> Antispherical<'a> {
    fn new(cosets: &'a CosetData) -> Self {
        let n = cosets.mu.n();
        let gens = n - 1;
        let mut moves = Vec::with_capacity(cosets.reps.len() * gens);
        for w in &cosets.reps {
            for i in 1..n {
                let ws = w.mul_gen(i).unwrap();
                moves.push(match cosets.position(&ws) {
                    None => Move::Killed,
                    Some(k) if w.has_right_descent(i) => Move::Down(k),
                    Some(k) => Move::Up(k),
                });
            }
        }
        Antispherical { cosets, moves, gens }
    }
}

impl StandardModule for Antispherical<'_> {
    fn size(&self) -> usize {
        self.cosets.reps.len()
    }

    fn length(&self, j: usize) -> usize {
        self.cosets.reps[j].length()
    }

    fn num_gens(&self) -> usize {
        self.gens
    }

    fn act(&self, j: usize, i: usize) -> Move {
        self.moves[j * self.gens + i - 1]
    }
}

/// Parabolic KL polynomials `n(x, y)` for `x, y` in `S(mu)`, stored by columns `y`
/// using positions in the canonical list of representatives.
#[derive(Debug, Clone)]
pub struct ParabolicKlTable {
    cosets: CosetData,
    rows: Vec<SparseRow>,
}

impl ParabolicKlTable {
    pub fn build(mu: &Composition) -> Self {
        let cosets = CosetData::new(mu);
        let rows = kl_engine::build_rows(&Antispherical::new(&cosets));
        ParabolicKlTable { cosets, rows }
    }

    pub fn from_rows(mu: &Composition, rows: Vec<Vec<(u32, LaurentPoly)>>) -> Result<Self> {
        let cosets = CosetData::new(mu);
        if rows.len() != cosets.reps.len() {
            return Err(Error::CrosscheckFailed(format!(
                "parabolic table for {mu}: expected {} columns, found {}",
                cosets.reps.len(),
                rows.len()
            )));
        }
        for (y, row) in rows.iter().enumerate() {
            let sorted = row.windows(2).all(|p| p[0].0 < p[1].0);
            let unit = kl_engine::lookup(row, y).is_some_and(LaurentPoly::is_one);
            let in_range = row.iter().all(|(x, p)| (*x as usize) < cosets.reps.len() && !p.is_zero());
            if !(sorted && unit && in_range) {
                return Err(Error::CrosscheckFailed(format!("parabolic table for {mu}: bad column {y}")));
            }
        }
        Ok(ParabolicKlTable { cosets, rows })
    }

    pub fn mu(&self) -> &Composition {
        &self.cosets.mu
    }

    pub fn cosets(&self) -> &CosetData {
        &self.cosets
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.cosets.reps
    }

    pub fn rows(&self) -> &[Vec<(u32, LaurentPoly)>] {
        &self.rows
    }

    fn position(&self, w: &Permutation) -> Result<usize> {
        self.cosets.position(w).ok_or_else(|| Error::NotACosetRep(w.clone()))
    }

    pub fn n_id(&self, x: usize, y: usize) -> Option<&LaurentPoly> {
        kl_engine::lookup(&self.rows[y], x)
    }

    /// `n(x, y)`; zero unless `x <= y`.
    pub fn n_poly(&self, x: &Permutation, y: &Permutation) -> Result<LaurentPoly> {
        Ok(self.n_id(self.position(x)?, self.position(y)?).cloned().unwrap_or_default())
    }

    /// The KL basis element `N_y` in the standard basis.
    pub fn element(&self, y: &Permutation) -> Result<AntisphericalElt> {
        let y = self.position(y)?;
        let mut out = AntisphericalElt::zero(self.mu());
        for (x, p) in &self.rows[y] {
            out.add_unchecked(self.cosets.reps[*x as usize].clone(), p);
        }
        Ok(out)
    }

    /// `(n(w, x))_w` over `S(mu)` in canonical order.
    pub fn decomposition_column(&self, x: &Permutation) -> Result<Vec<LaurentPoly>> {
        let x = self.position(x)?;
        Ok(self.column_id(x))
    }

    pub fn column_id(&self, x: usize) -> Vec<LaurentPoly> {
        let mut col = vec![LaurentPoly::zero(); self.cosets.reps.len()];
        for (w, p) in &self.rows[x] {
            col[*w as usize] = p.clone();
        }
        col
    }

    pub fn num_entries(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }
}

pub fn parabolic_kl_table(mu: &Composition) -> ParabolicKlTable {
    ParabolicKlTable::build(mu)
}

pub fn decomposition_columns(table: &ParabolicKlTable, x: &Permutation) -> Result<Vec<LaurentPoly>> {
    table.decomposition_column(x)
}

#[derive(Debug, Clone, Serialize)]
pub struct ProjectionReport {
    pub mu: Composition,
    pub pairs_checked: usize,
}

/// Checks `n(x, y) = sum_{u in S_mu} (-v)^l(u) h(u x, y)`, the image of `C_y`
/// under `H -> N`, `H_u -> (-v)^l(u)` on the Young subgroup.
pub fn projection_crosscheck(kl: &KlTable, table: &ParabolicKlTable) -> Result<ProjectionReport> {
    let mu = table.mu();
    if kl.n() != mu.n() {
        return Err(Error::SizeMismatch(kl.n(), mu.n()));
    }
    let young: Vec<(Permutation, LaurentPoly)> = mu
        .young_subgroup()
        .into_iter()
        .map(|u| {
            let l = u.length() as i32;
            let sign = if l % 2 == 0 { 1 } else { -1 };
            (u, LaurentPoly::monomial(sign, l))
        })
        .collect();
    let reps = table.reps();
    let mut pairs = 0;
    for (yk, y) in reps.iter().enumerate() {
        for (xk, x) in reps.iter().enumerate() {
            let mut projected = LaurentPoly::zero();
            for (u, weight) in &young {
                let ux = u.compose(x)?;
                let h = kl.h(&ux, y)?;
                if !h.is_zero() {
                    projected += &(&h * weight);
                }
            }
            let direct = table.n_id(xk, yk).cloned().unwrap_or_default();
            if projected != direct {
                return Err(Error::CrosscheckFailed(format!(
                    "mu = {mu}, x = {x}, y = {y}: recursion gives {direct}, projection gives {projected}"
                )));
            }
            pairs += 1;
        }
    }
    Ok(ProjectionReport { mu: mu.clone(), pairs_checked: pairs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(x: &[usize]) -> Permutation {
        Permutation::from_oneline(x.to_vec()).unwrap()
    }

    fn mu(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn v() -> LaurentPoly {
        LaurentPoly::v()
    }

    #[test]
    fn action_examples() {
        let m = mu("3");
        let ne = AntisphericalElt::basis(&m, Permutation::identity(3)).unwrap();
        for i in 1..3 {
            assert!(ne.gen_action(i).unwrap().is_zero());
        }
        let m = mu("2,1");
        let s2 = perm(&[1, 3, 2]);
        let got = AntisphericalElt::basis(&m, s2.clone()).unwrap().gen_action(1).unwrap();
        let mut expected = AntisphericalElt::zero(&m);
        expected.add_term(perm(&[3, 1, 2]), &LaurentPoly::one()).unwrap();
        expected.add_term(s2, &v()).unwrap();
        assert_eq!(got, expected);
        assert!(AntisphericalElt::basis(&m, perm(&[2, 1, 3])).is_err());
    }

    #[test]
    fn trivial_subgroup_recovers_the_regular_action() {
        let t = KlTable::build(3).unwrap();
        let m = Composition::ones(3);
        for i in 1..3 {
            let reg = t.regular_model(i).unwrap();
            for (k, w) in t.group().elements().iter().enumerate() {
                let img = AntisphericalElt::basis(&m, w.clone()).unwrap().gen_action(i).unwrap();
                for (j, z) in t.group().elements().iter().enumerate() {
                    assert_eq!(img.coeff(z), reg[(j, k)]);
                }
            }
        }
    }

    #[test]
    fn table_examples() {
        let table = ParabolicKlTable::build(&mu("2,1"));
        let (e, s2, s2s1) = (Permutation::identity(3), perm(&[1, 3, 2]), perm(&[3, 1, 2]));
        assert_eq!(table.n_poly(&e, &s2).unwrap(), v());
        assert_eq!(table.n_poly(&s2, &s2s1).unwrap(), v());
        assert!(table.n_poly(&e, &s2s1).unwrap().is_zero());
        assert_eq!(table.decomposition_column(&s2s1).unwrap(), vec![LaurentPoly::zero(), v(), LaurentPoly::one()]);
        assert_eq!(
            table.decomposition_column(&e).unwrap(),
            vec![LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero()]
        );
        assert!(matches!(table.decomposition_column(&perm(&[2, 1, 3])), Err(Error::NotACosetRep(_))));

        let single = ParabolicKlTable::build(&mu("3"));
        assert_eq!(single.reps(), std::slice::from_ref(&e));
        assert!(single.n_poly(&e, &e).unwrap().is_one());
    }

    #[test]
    fn trivial_subgroup_gives_ordinary_kl() {
        for n in 1..=4 {
            let kl = KlTable::build(n).unwrap();
            let table = ParabolicKlTable::build(&Composition::ones(n));
            assert_eq!(table.rows(), kl.rows());
        }
    }

    #[test]
    fn kl_elements_are_bar_invariant() {
        for n in 1..=4 {
            for m in Composition::all(n) {
                let table = ParabolicKlTable::build(&m);
                for y in table.reps() {
                    let el = table.element(y).unwrap();
                    assert_eq!(el.bar().unwrap(), el, "mu = {m}, y = {y}");
                }
            }
        }
    }

    #[test]
    fn entries_are_normalized_and_nonnegative() {
        for n in 1..=5 {
            for m in Composition::all(n) {
                let table = ParabolicKlTable::build(&m);
                let reps = table.reps();
                for (y, row) in table.rows().iter().enumerate() {
                    for (x, p) in row {
                        let x = *x as usize;
                        assert!(p.has_nonnegative_coeffs());
                        if x == y {
                            assert!(p.is_one());
                        } else {
                            assert!(p.in_v_z_v());
                            assert!(reps[x].bruhat_leq(&reps[y]).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn descents_act_by_quantum_two() {
        for n in 2..=5 {
            for m in Composition::all(n) {
                let table = ParabolicKlTable::build(&m);
                for y in table.reps() {
                    let el = table.element(y).unwrap();
                    for i in y.right_descents() {
                        assert_eq!(el.gen_action(i).unwrap(), el.scale(&LaurentPoly::quantum_two()));
                    }
                }
            }
        }
    }

    #[test]
    fn projection_matches_recursion() {
        for n in 1..=5 {
            let kl = KlTable::build(n).unwrap();
            for m in Composition::all(n) {
                let table = ParabolicKlTable::build(&m);
                let report = projection_crosscheck(&kl, &table).unwrap();
                assert_eq!(report.pairs_checked, table.reps().len().pow(2));
            }
        }
    }

    #[test]
    fn projection_detects_tampering() {
        let kl = KlTable::build(3).unwrap();
        let table = ParabolicKlTable::build(&mu("2,1"));
        let mut rows = table.rows().to_vec();
        rows[1][0].1 = LaurentPoly::monomial(2, 1);
        let bad = ParabolicKlTable::from_rows(&mu("2,1"), rows).unwrap();
        assert!(matches!(projection_crosscheck(&kl, &bad), Err(Error::CrosscheckFailed(_))));
    }

    #[test]
    fn hand_evaluation_of_the_projection() {
        // sum_u (-v)^l(u) h(u, s2) = h(e, s2) - v h(s1, s2) = v
        let kl = KlTable::build(3).unwrap();
        let s1 = perm(&[2, 1, 3]);
        let s2 = perm(&[1, 3, 2]);
        let e = Permutation::identity(3);
        let lhs = kl.h(&e, &s2).unwrap() - v() * kl.h(&s1, &s2).unwrap();
        assert_eq!(lhs, v());
        assert_eq!(ParabolicKlTable::build(&mu("2,1")).n_poly(&e, &s2).unwrap(), lhs);
    }
}
