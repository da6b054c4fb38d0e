//! The Hecke algebra of `S_n` over `Z[v, v^-1]`.
//!
//! Normalization: `H_s^2 = H_e + (v^-1 - v) H_s`, so `H_s` has eigenvalues `v^-1`
//! and `-v`, the Kazhdan-Lusztig generator is `C_s = H_s + v`, and
//! `C_w = sum_x h(x, w) H_x` with `h(x, w) in vZ[v]` for `x < w`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::kl_engine::{self, Move, SparseRow, StandardModule};
use crate::laurent::LaurentPoly;
use crate::matrix::PolyMatrix;
use crate::symgroup::{Permutation, SymmetricGroup};
use crate::{Error, Result};

/// A finite `Z[v, v^-1]`-combination of standard basis elements `H_w`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HeckeElt {
    terms: BTreeMap<Permutation, LaurentPoly>,
}

impl HeckeElt {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `H_w`.
    pub fn basis(w: Permutation) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    pub fn term(w: Permutation, p: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(w, &p);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Permutation, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(p.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += p;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (w, p) in &other.terms {
            out.add_term(w.clone(), p);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElt) -> HeckeElt {
        self.add(&other.scale(&LaurentPoly::from(-1)))
    }

    pub fn scale(&self, p: &LaurentPoly) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &(c * p));
        }
        out
    }

    /// Right multiplication by `H_{s_i}`.
    pub fn mult_by_gen(&self, i: usize) -> Result<HeckeElt> {
        let mut out = HeckeElt::zero();
        let down = LaurentPoly::v_inv() - LaurentPoly::v();
        for (w, p) in &self.terms {
            let ws = w.mul_gen(i)?;
            out.add_term(ws, p);
            if w.has_right_descent(i) {
                out.add_term(w.clone(), &(p * &down));
            }
        }
        Ok(out)
    }

    /// Right multiplication by `H_{s_i} + v`.
    pub fn mult_by_kl_gen(&self, i: usize) -> Result<HeckeElt> {
        Ok(self.mult_by_gen(i)?.add(&self.scale(&LaurentPoly::v())))
    }

    /// The algebra product, expanding `other` along reduced words.
    pub fn mul(&self, other: &HeckeElt) -> Result<HeckeElt> {
        let mut out = HeckeElt::zero();
        for (w, p) in &other.terms {
            let mut acc = self.scale(p);
            for i in w.reduced_word() {
                acc = acc.mult_by_gen(i)?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// The bar involution: `v -> v^-1`, `H_w -> (H_{w^-1})^-1`.
    pub fn bar(&self) -> Result<HeckeElt> {
        let shift = LaurentPoly::v() - LaurentPoly::v_inv();
        let mut out = HeckeElt::zero();
        for (w, p) in &self.terms {
            // bar(H_w) = prod over a reduced word of (H_s + (v - v^-1))
            let mut acc = HeckeElt::term(Permutation::identity(w.n()), p.bar());
            for i in w.reduced_word() {
                acc = acc.mult_by_gen(i)?.add(&acc.scale(&shift));
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}

pub fn bar_element(a: &HeckeElt) -> Result<HeckeElt> {
    a.bar()
}

/// JSON: one-line permutation strings mapped to polynomials.
impl Serialize for HeckeElt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (w, p) in &self.terms {
            map.serialize_entry(&w.key(), p)?;
        }
        map.end()
    }
}

struct RegularModule<'a>(&'a SymmetricGroup);

impl StandardModule for RegularModule<'_> {
    fn size(&self) -> usize {
        self.0.order()
    }

    fn length(&self, j: usize) -> usize {
        self.0.length(j)
    }

    fn num_gens(&self) -> usize {
        self.0.n() - 1
    }

    fn act(&self, j: usize, i: usize) -> Move {
        let js = self.0.mul_gen(j, i);
        if self.0.has_right_descent(j, i) {
            Move::Down(js)
        } else {
            Move::Up(js)
        }
    }
}

/// Kazhdan-Lusztig polynomials `h(x, w)` of `S_n`, stored by columns `w`.
#[derive(Debug, Clone)]
pub struct KlTable {
    group: Arc<SymmetricGroup>,
    rows: Vec<SparseRow>,
}

impl KlTable {
    pub fn build(n: usize) -> Result<Self> {
        Ok(Self::from_group(Arc::new(SymmetricGroup::new(n)?)))
    }

    pub fn from_group(group: Arc<SymmetricGroup>) -> Self {
        let rows = kl_engine::build_rows(&RegularModule(&group));
        KlTable { group, rows }
    }

    /// Reassembles a table from stored columns, checking the normalization.
    pub fn from_rows(group: Arc<SymmetricGroup>, rows: Vec<Vec<(u32, LaurentPoly)>>) -> Result<Self> {
        let bad = |msg: String| Error::CrosscheckFailed(msg);
        if rows.len() != group.order() {
            return Err(bad(format!("expected {} columns, found {}", group.order(), rows.len())));
        }
        for (w, row) in rows.iter().enumerate() {
            if !row.windows(2).all(|p| p[0].0 < p[1].0) {
                return Err(bad(format!("column {w} is not sorted")));
            }
            if kl_engine::lookup(row, w).is_none_or(|p| !p.is_one()) {
                return Err(bad(format!("h(w, w) != 1 for column {w}")));
            }
            if row.iter().any(|(x, p)| *x as usize >= group.order() || p.is_zero()) {
                return Err(bad(format!("column {w} has an invalid entry")));
            }
        }
        Ok(KlTable { group, rows })
    }

    pub fn rows(&self) -> &[Vec<(u32, LaurentPoly)>] {
        &self.rows
    }

    pub fn group(&self) -> &Arc<SymmetricGroup> {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    fn id(&self, w: &Permutation) -> Result<usize> {
        self.group.id(w).ok_or(Error::SizeMismatch(w.n(), self.n()))
    }

    pub fn h_id(&self, x: usize, w: usize) -> Option<&LaurentPoly> {
        kl_engine::lookup(&self.rows[w], x)
    }

    /// `h(x, w)`; zero unless `x <= w`.
    pub fn h(&self, x: &Permutation, w: &Permutation) -> Result<LaurentPoly> {
        Ok(self.h_id(self.id(x)?, self.id(w)?).cloned().unwrap_or_default())
    }

    /// Column `w`: pairs `(x, h(x, w))` for `x <= w`.
    pub fn column(&self, w: usize) -> &[(u32, LaurentPoly)] {
        &self.rows[w]
    }

    /// `mu(x, w)`, extended symmetrically; zero for incomparable or equal elements.
    pub fn mu_id(&self, x: usize, w: usize) -> i64 {
        let (lo, hi) = if self.group.length(x) <= self.group.length(w) { (x, w) } else { (w, x) };
        if lo == hi {
            return 0;
        }
        self.h_id(lo, hi).map_or(0, |p| kl_engine::mu_of(p).to_i64().expect("mu fits in i64"))
    }

    pub fn mu(&self, x: &Permutation, w: &Permutation) -> Result<i64> {
        Ok(self.mu_id(self.id(x)?, self.id(w)?))
    }

    /// `C_w` in the standard basis.
    pub fn kl_element(&self, w: &Permutation) -> Result<HeckeElt> {
        let w = self.id(w)?;
        Ok(self.kl_element_id(w))
    }

    pub fn kl_element_id(&self, w: usize) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (x, p) in &self.rows[w] {
            out.add_term(self.group.elem(*x as usize).clone(), p);
        }
        out
    }

    /// `C_x * (H_{s_i} + v)` in the KL basis, as `(z, coefficient)` sorted by id.
    pub fn kl_product_id(&self, x: usize, i: usize) -> Vec<(usize, LaurentPoly)> {
        let g = &self.group;
        if g.has_right_descent(x, i) {
            return vec![(x, LaurentPoly::quantum_two())];
        }
        let mut out = vec![(g.mul_gen(x, i), LaurentPoly::one())];
        for (z, p) in &self.rows[x] {
            let z = *z as usize;
            if z == x || !g.has_right_descent(z, i) {
                continue;
            }
            let mu = kl_engine::mu_of(p);
            if !mu.is_zero() {
                out.push((z, LaurentPoly::from(mu)));
            }
        }
        out.sort_by_key(|e| e.0);
        out
    }

    pub fn kl_product(&self, x: &Permutation, i: usize) -> Result<BTreeMap<Permutation, LaurentPoly>> {
        self.check_gen(i)?;
        let x = self.id(x)?;
        Ok(self.kl_product_id(x, i).into_iter().map(|(z, p)| (self.group.elem(z).clone(), p)).collect())
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n() {
            return Err(Error::InvalidGenerator { index: i, n: self.n() });
        }
        Ok(())
    }

    /// Matrix of right multiplication by `H_{s_i} + v` on `{H_w}`, columns are images.
    pub fn regular_model(&self, i: usize) -> Result<PolyMatrix> {
        self.check_gen(i)?;
        let g = &self.group;
        let mut m = PolyMatrix::zeros(g.order(), g.order());
        for w in 0..g.order() {
            let ws = g.mul_gen(w, i);
            m[(ws, w)] = LaurentPoly::one();
            m[(w, w)] = if g.has_right_descent(w, i) { LaurentPoly::v_inv() } else { LaurentPoly::v() };
        }
        Ok(m)
    }

    /// Matrix of right multiplication by `H_{s_i} + v` on the KL basis `{C_w}`.
    pub fn kl_model(&self, i: usize) -> Result<PolyMatrix> {
        self.check_gen(i)?;
        let size = self.group.order();
        let mut m = PolyMatrix::zeros(size, size);
        for x in 0..size {
            for (z, p) in self.kl_product_id(x, i) {
                m[(z, x)] = p;
            }
        }
        Ok(m)
    }

    /// Base change matrix with column `w` holding `C_w` in the standard basis.
    pub fn base_change(&self) -> PolyMatrix {
        let size = self.group.order();
        let mut m = PolyMatrix::zeros(size, size);
        for w in 0..size {
            for (x, p) in &self.rows[w] {
                m[(*x as usize, w)] = p.clone();
            }
        }
        m
    }

    /// Number of stored nonzero polynomials.
    pub fn num_entries(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_coefficient(&self) -> BigInt {
        self.rows
            .iter()
            .flat_map(|r| r.iter().flat_map(|(_, p)| p.terms().map(|(_, c)| c.clone())))
            .max()
            .unwrap_or_else(BigInt::one)
    }
}

pub fn kl_table(n: usize) -> Result<KlTable> {
    KlTable::build(n)
}
