//! Frozen tables for one `n`, shared by the Specht models and Gram matrices.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use crate::cells::CellPartition;
use crate::form::GramMatrix;
use crate::hecke::KlTable;
use crate::parabolic::ParabolicKlTable;
use crate::specht::SpechtModel;
use crate::symgroup::{Composition, SymmetricGroup};
use crate::{Error, Result};

#[derive(Debug)]
pub struct Tables {
    pub kl: KlTable,
    pub cells: CellPartition,
    parabolic: Mutex<BTreeMap<Composition, Arc<ParabolicKlTable>>>,
}

impl Tables {
    pub fn build(n: usize) -> Result<Self> {
        Ok(Self::from_kl(KlTable::build(n)?))
    }

    pub fn from_kl(kl: KlTable) -> Self {
        let cells = CellPartition::compute(&kl);
        Tables { kl, cells, parabolic: Mutex::new(BTreeMap::new()) }
    }

    pub fn n(&self) -> usize {
        self.kl.n()
    }

    pub fn group(&self) -> &Arc<SymmetricGroup> {
        self.kl.group()
    }

    fn check(&self, mu: &Composition) -> Result<()> {
        if mu.n() != self.n() {
            return Err(Error::SizeMismatch(mu.n(), self.n()));
        }
        Ok(())
    }

    /// Adds a precomputed parabolic table, e.g. one loaded from a cache.
    pub fn insert_parabolic(&self, table: ParabolicKlTable) -> Result<()> {
        self.check(table.mu())?;
        self.parabolic.lock().expect("table lock").insert(table.mu().clone(), Arc::new(table));
        Ok(())
    }

    /// The parabolic table for `mu`, built on first use.
    pub fn parabolic(&self, mu: &Composition) -> Result<Arc<ParabolicKlTable>> {
        self.check(mu)?;
        if let Some(t) = self.parabolic.lock().expect("table lock").get(mu) {
            return Ok(t.clone());
        }
        let t = Arc::new(ParabolicKlTable::build(mu));
        Ok(self.parabolic.lock().expect("table lock").entry(mu.clone()).or_insert(t).clone())
    }

    pub fn parabolic_tables(&self) -> BTreeMap<Composition, Arc<ParabolicKlTable>> {
        self.parabolic.lock().expect("table lock").clone()
    }

    pub fn specht(&self, mu: &Composition) -> Result<SpechtModel> {
        SpechtModel::build(&self.kl, &self.cells, mu)
    }

    pub fn gram(&self, mu: &Composition) -> Result<(SpechtModel, GramMatrix)> {
        let model = self.specht(mu)?;
        let g = GramMatrix::build(&*self.parabolic(mu)?, &model.basis)?;
        Ok((model, g))
    }
}
