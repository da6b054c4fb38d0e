//! Right Kazhdan-Lusztig cells of `S_n`.
//!
//! The right preorder is generated by the edges `x -> z` whenever `C_z` occurs in
//! `C_x * (H_{s_i} + v)`; right cells are its strongly connected components.
//! RSK is only used as an independent check.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use rayon::prelude::*;
use serde::Serialize;

use crate::hecke::KlTable;
use crate::symgroup::{Composition, CosetData, Permutation, SymmetricGroup};
use crate::tableaux::{rsk, StandardTableau};
use crate::{Error, Result};

/// Adjacency lists of the right preorder graph, indexed by element id.
#[derive(Debug, Clone)]
pub struct PreorderGraph {
    pub edges: Vec<BTreeSet<usize>>,
}

impl PreorderGraph {
    pub fn num_edges(&self) -> usize {
        self.edges.iter().map(BTreeSet::len).sum()
    }

    pub fn has_edge(&self, x: usize, z: usize) -> bool {
        self.edges[x].contains(&z)
    }

    /// Everything reachable from `x`, including `x`.
    pub fn reachable(&self, x: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([x]);
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for &z in &self.edges[y] {
                if seen.insert(z) {
                    stack.push(z);
                }
            }
        }
        seen
    }
}

pub fn right_preorder_graph(table: &KlTable) -> PreorderGraph {
    let g = table.group();
    let edges = (0..g.order())
        .into_par_iter()
        .map(|x| (1..g.n()).flat_map(|i| table.kl_product_id(x, i)).map(|(z, _)| z).filter(|&z| z != x).collect())
        .collect();
    PreorderGraph { edges }
}

/// Partition of `S_n` into right cells, each sorted by id, cells ordered by
/// their minimal element.
#[derive(Debug, Clone)]
pub struct CellPartition {
    group: Arc<SymmetricGroup>,
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TableauComponent {
    /// The insertion tableau.
    P,
    /// The recording tableau.
    Q,
}

#[derive(Debug, Clone, Serialize)]
pub struct RskReport {
    pub n: usize,
    pub component: TableauComponent,
    pub num_cells: usize,
}

impl CellPartition {
    pub fn compute(table: &KlTable) -> Self {
        Self::from_graph(table.group().clone(), &right_preorder_graph(table))
    }

    pub fn from_graph(group: Arc<SymmetricGroup>, graph: &PreorderGraph) -> Self {
        let mut dg: DiGraph<(), ()> = DiGraph::with_capacity(group.order(), graph.num_edges());
        let nodes: Vec<NodeIndex> = (0..group.order()).map(|_| dg.add_node(())).collect();
        for (x, targets) in graph.edges.iter().enumerate() {
            for &z in targets {
                dg.add_edge(nodes[x], nodes[z], ());
            }
        }
        let mut cells: Vec<Vec<usize>> = tarjan_scc(&dg)
            .into_iter()
            .map(|scc| {
                let mut ids: Vec<usize> = scc.into_iter().map(|ix| ix.index()).collect();
                ids.sort_unstable();
                ids
            })
            .collect();
        cells.sort_by_key(|c| c[0]);
        let mut cell_of = vec![0; group.order()];
        for (k, cell) in cells.iter().enumerate() {
            for &x in cell {
                cell_of[x] = k;
            }
        }
        CellPartition { group, cells, cell_of }
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn group(&self) -> &Arc<SymmetricGroup> {
        &self.group
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_of(&self, x: usize) -> usize {
        self.cell_of[x]
    }

    pub fn cell_perms(&self, k: usize) -> Vec<Permutation> {
        self.cells[k].iter().map(|&x| self.group.elem(x).clone()).collect()
    }

    /// Ids of the right cell `R(w_mu)`, after checking it lies inside `S(mu)`.
    pub fn cell_of_wmu_ids(&self, mu: &Composition) -> Result<Vec<usize>> {
        if mu.n() != self.n() {
            return Err(Error::SizeMismatch(mu.n(), self.n()));
        }
        let cd = CosetData::new(mu);
        let w_mu = self.group.id(&cd.w_mu).expect("w_mu lies in S_n");
        let cell = self.cells[self.cell_of[w_mu]].clone();
        if cell.iter().any(|&x| !cd.contains(self.group.elem(x))) {
            return Err(Error::CellEscapesCoset(mu.clone()));
        }
        Ok(cell)
    }

    /// `R(w_mu)` in canonical order.
    pub fn cell_of_wmu(&self, mu: &Composition) -> Result<Vec<Permutation>> {
        Ok(self.cell_of_wmu_ids(mu)?.into_iter().map(|x| self.group.elem(x).clone()).collect())
    }

    /// Determines which RSK tableau is constant on right cells, and checks that
    /// its fibres are exactly the cells.
    pub fn rsk_crosscheck(&self) -> Result<RskReport> {
        let tableaux: Vec<(StandardTableau, StandardTableau)> = self.group.elements().iter().map(rsk).collect();
        let classifies = |pick: &dyn Fn(&(StandardTableau, StandardTableau)) -> &StandardTableau| -> Option<usize> {
            let mut owner: HashMap<&StandardTableau, usize> = HashMap::new();
            for (k, cell) in self.cells.iter().enumerate() {
                let t = pick(&tableaux[cell[0]]);
                if cell.iter().any(|&x| pick(&tableaux[x]) != t) {
                    return Some(k);
                }
                if owner.insert(t, k).is_some() {
                    return Some(k);
                }
            }
            None
        };
        let p_fail = classifies(&|pq| &pq.0);
        if p_fail.is_none() {
            return Ok(RskReport { n: self.n(), component: TableauComponent::P, num_cells: self.num_cells() });
        }
        let q_fail = classifies(&|pq| &pq.1);
        if q_fail.is_none() {
            return Ok(RskReport { n: self.n(), component: TableauComponent::Q, num_cells: self.num_cells() });
        }
        let k = p_fail.unwrap();
        Err(Error::CrosscheckFailed(format!("cell {:?} is not an RSK fibre", self.cell_perms(k))))
    }
}

/// Canonical JSON form: `{"n": .., "cells": [[perm, ..], ..]}`.
#[derive(Debug, Clone, Serialize)]
pub struct CellsJson {
    pub n: usize,
    pub cells: Vec<Vec<Permutation>>,
}

impl From<&CellPartition> for CellsJson {
    fn from(c: &CellPartition) -> Self {
        CellsJson { n: c.n(), cells: (0..c.num_cells()).map(|k| c.cell_perms(k)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{syt_count, Partition};

    fn perm(x: &[usize]) -> Permutation {
        Permutation::from_oneline(x.to_vec()).unwrap()
    }

    #[test]
    fn s2_graph_and_cells() {
        let t = KlTable::build(2).unwrap();
        let graph = right_preorder_graph(&t);
        assert_eq!(graph.edges[0], BTreeSet::from([1]));
        assert!(graph.edges[1].is_empty());
        let cells = CellPartition::compute(&t);
        assert_eq!(cells.cells(), &[vec![0], vec![1]]);
    }

    #[test]
    fn longest_element_is_a_sink() {
        for n in 2..=5 {
            let t = KlTable::build(n).unwrap();
            let graph = right_preorder_graph(&t);
            assert!(graph.edges[t.group().longest()].is_empty());
        }
    }

    #[test]
    fn s3_cells() {
        let t = KlTable::build(3).unwrap();
        let graph = right_preorder_graph(&t);
        let cells = CellPartition::from_graph(t.group().clone(), &graph);
        let mut sizes: Vec<usize> = cells.cells().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 2]);
        // mutual reachability is exactly cell membership
        for x in 0..6 {
            let rx = graph.reachable(x);
            for z in 0..6 {
                let same = rx.contains(&z) && graph.reachable(z).contains(&x);
                assert_eq!(same, cells.cell_of(x) == cells.cell_of(z));
            }
        }
    }

    #[test]
    fn cell_of_wmu_examples() {
        let t = KlTable::build(3).unwrap();
        let cells = CellPartition::compute(&t);
        assert_eq!(cells.cell_of_wmu(&Composition::ones(3)).unwrap(), vec![perm(&[3, 2, 1])]);
        assert_eq!(cells.cell_of_wmu(&"3".parse().unwrap()).unwrap(), vec![Permutation::identity(3)]);
        assert_eq!(cells.cell_of_wmu(&"2,1".parse().unwrap()).unwrap(), vec![perm(&[1, 3, 2]), perm(&[3, 1, 2])]);
        assert!(cells.cell_of_wmu(&"2,2".parse().unwrap()).is_err());
    }

    #[test]
    fn cell_sizes_match_tableau_counts() {
        for n in 1..=5 {
            let t = KlTable::build(n).unwrap();
            let cells = CellPartition::compute(&t);
            let mut sizes: Vec<u64> = cells.cells().iter().map(|c| c.len() as u64).collect();
            sizes.sort_unstable();
            let mut expected: Vec<u64> = Partition::all(n)
                .iter()
                .flat_map(|l| std::iter::repeat_n(syt_count(l), syt_count(l) as usize))
                .collect();
            expected.sort_unstable();
            assert_eq!(sizes, expected, "n = {n}");
        }
    }

    #[test]
    fn rsk_crosscheck_passes() {
        for n in 2..=5 {
            let t = KlTable::build(n).unwrap();
            let report = CellPartition::compute(&t).rsk_crosscheck().unwrap();
            assert_eq!(report.component, TableauComponent::P);
        }
    }

    #[test]
    fn rsk_crosscheck_detects_a_bad_partition() {
        let t = KlTable::build(3).unwrap();
        let mut edges = right_preorder_graph(&t);
        // merge everything into a single cell
        for x in 0..6 {
            edges.edges[x] = (0..6).filter(|&z| z != x).collect();
        }
        let cells = CellPartition::from_graph(t.group().clone(), &edges);
        assert!(matches!(cells.rsk_crosscheck(), Err(Error::CrosscheckFailed(_))));
    }
}
