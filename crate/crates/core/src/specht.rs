//! The cell module on `R(w_mu)`: the Grothendieck-group shadow of the translation
//! functors acting on projective-injective modules in parabolic category O.
//!
//! `T_i` is the matrix of `H_{s_i} + v` on the classes of indecomposable
//! projectives (columns are images). On classes of simples the action is the
//! transpose `S_i = T_i^t`, since the functors are self-adjoint and projectives
//! pair with simples by `<[P(x)], [L(y)]> = delta_xy`.

use std::collections::HashMap;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cells::{CellPartition, PreorderGraph};
use crate::hecke::KlTable;
use crate::laurent::LaurentPoly;
use crate::matrix::PolyMatrix;
use crate::symgroup::{class_representative, Composition, Permutation};
use crate::tableaux::{mn_character, sort_to_partition, syt_count, Partition};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct SpechtModel {
    pub mu: Composition,
    pub lambda_prime: Partition,
    pub basis: Vec<Permutation>,
    basis_ids: Vec<usize>,
    /// `T_1 .. T_{n-1}`.
    pub proj_matrices: Vec<PolyMatrix>,
    /// `S_1 .. S_{n-1}`.
    pub simple_matrices: Vec<PolyMatrix>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Projective,
    Simple,
}

impl SpechtModel {
    pub fn build(kl: &KlTable, cells: &CellPartition, mu: &Composition) -> Result<Self> {
        let basis_ids = cells.cell_of_wmu_ids(mu)?;
        let pos: HashMap<usize, usize> = basis_ids.iter().enumerate().map(|(k, &x)| (x, k)).collect();
        let dim = basis_ids.len();
        let n = mu.n();
        let mut proj = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            let mut t = PolyMatrix::zeros(dim, dim);
            for (col, &x) in basis_ids.iter().enumerate() {
                for (z, p) in kl.kl_product_id(x, i) {
                    if let Some(&row) = pos.get(&z) {
                        t[(row, col)] = p;
                    }
                }
            }
            proj.push(t);
        }
        let simple = proj.iter().map(PolyMatrix::transpose).collect();
        let basis = basis_ids.iter().map(|&x| kl.group().elem(x).clone()).collect();
        Ok(SpechtModel {
            mu: mu.clone(),
            lambda_prime: sort_to_partition(mu).conjugate(),
            basis,
            basis_ids,
            proj_matrices: proj,
            simple_matrices: simple,
        })
    }

    pub fn n(&self) -> usize {
        self.mu.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_ids(&self) -> &[usize] {
        &self.basis_ids
    }

    pub fn position(&self, w: &Permutation) -> Option<usize> {
        self.basis.iter().position(|b| b == w)
    }

    /// `T_i` or `S_i` for a 1-based generator index.
    pub fn matrix(&self, kind: BasisKind, i: usize) -> Result<&PolyMatrix> {
        if i == 0 || i >= self.n() {
            return Err(Error::InvalidGenerator { index: i, n: self.n() });
        }
        Ok(match kind {
            BasisKind::Projective => &self.proj_matrices[i - 1],
            BasisKind::Simple => &self.simple_matrices[i - 1],
        })
    }

    /// `sigma_i = T_i(1) - Id` as integer matrices.
    fn sigmas_at_one(&self) -> Vec<Vec<Vec<i64>>> {
        self.proj_matrices
            .iter()
            .map(|t| {
                t.eval_at_one()
                    .into_iter()
                    .enumerate()
                    .map(|(r, row)| {
                        row.into_iter()
                            .enumerate()
                            .map(|(c, x)| x.to_i64().expect("small entry") - i64::from(r == c))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    /// Trace of `sigma_{word[0]} .. sigma_{word[k-1]}`.
    pub fn trace_of_word_at_one(&self, word: &[usize]) -> i64 {
        let sigmas = self.sigmas_at_one();
        let dim = self.dim();
        let mut acc: Vec<Vec<i64>> = (0..dim).map(|r| (0..dim).map(|c| i64::from(r == c)).collect()).collect();
        for &i in word {
            let s = &sigmas[i - 1];
            acc = (0..dim).map(|r| (0..dim).map(|c| (0..dim).map(|k| acc[r][k] * s[k][c]).sum()).collect()).collect();
        }
        (0..dim).map(|k| acc[k][k]).sum()
    }

    /// Character of the `S_n`-module obtained at `v = 1`, at the given cycle type.
    pub fn character_at_one(&self, cycle_type: &Partition) -> Result<i64> {
        if cycle_type.n() != self.n() {
            return Err(Error::SizeMismatch(cycle_type.n(), self.n()));
        }
        let (_, word) = class_representative(cycle_type);
        Ok(self.trace_of_word_at_one(&word))
    }
}

pub fn build(kl: &KlTable, cells: &CellPartition, mu: &Composition) -> Result<SpechtModel> {
    SpechtModel::build(kl, cells, mu)
}

pub fn character_at_one(model: &SpechtModel, cycle_type: &Partition) -> Result<i64> {
    model.character_at_one(cycle_type)
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationsReport {
    pub mu: Composition,
    pub checks: Vec<RelationCheck>,
    pub all_hold: bool,
}

/// Checks `T_i^2 = (v + v^-1) T_i`, the braid relation for `T_i - v` on adjacent
/// generators, and commutation for distant ones.
pub fn verify_relations(model: &SpechtModel) -> RelationsReport {
    let dim = model.dim();
    let q2 = LaurentPoly::quantum_two();
    let vid = PolyMatrix::scalar(dim, &LaurentPoly::v());
    let t = &model.proj_matrices;
    let h: Vec<PolyMatrix> = t.iter().map(|m| m - &vid).collect();
    let mut checks = Vec::new();
    for (k, m) in t.iter().enumerate() {
        checks.push(RelationCheck { relation: format!("T{0}^2 = (v+v^-1) T{0}", k + 1), holds: m * m == m.scale(&q2) });
    }
    for a in 0..h.len() {
        for b in a + 1..h.len() {
            let holds = if b == a + 1 {
                &(&h[a] * &h[b]) * &h[a] == &(&h[b] * &h[a]) * &h[b]
            } else {
                &h[a] * &h[b] == &h[b] * &h[a]
            };
            let relation = if b == a + 1 {
                format!("braid({}, {})", a + 1, b + 1)
            } else {
                format!("commute({}, {})", a + 1, b + 1)
            };
            checks.push(RelationCheck { relation, holds });
        }
    }
    let all_hold = checks.iter().all(|c| c.holds);
    RelationsReport { mu: model.mu.clone(), checks, all_hold }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentifyReport {
    pub mu: Composition,
    pub lambda_prime: Partition,
    pub dimension: usize,
    /// `(cycle type, character value)` for every class.
    pub characters: Vec<(Partition, i64)>,
}

/// Matches the dimension with the number of standard tableaux of `lambda'` and the
/// `v = 1` character with the Murnaghan-Nakayama character of `lambda'`.
pub fn identify_specht(model: &SpechtModel) -> Result<IdentifyReport> {
    let n = model.n();
    let expected_dim = syt_count(&model.lambda_prime);
    if model.dim() as u64 != expected_dim {
        return Err(Error::IdentificationFailed {
            cycle_type: Partition::ones(n),
            got: model.dim() as i64,
            expected: expected_dim as i64,
        });
    }
    let mut characters = Vec::new();
    for tau in Partition::all(n) {
        let got = model.character_at_one(&tau)?;
        let expected = mn_character(&model.lambda_prime, &tau)?;
        if got != expected {
            return Err(Error::IdentificationFailed { cycle_type: tau, got, expected });
        }
        characters.push((tau, got));
    }
    Ok(IdentifyReport {
        mu: model.mu.clone(),
        lambda_prime: model.lambda_prime.clone(),
        dimension: model.dim(),
        characters,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct WGraphMismatch {
    pub generator: usize,
    pub w: Permutation,
    /// Which restriction of the sum reproduces the transpose column, if any:
    /// `"ascent"` keeps `w'` with `w' s_i > w'`, `"descent"` those with `w' s_i < w'`.
    pub matching_variant: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WGraphReport {
    pub mu: Composition,
    pub columns_checked: usize,
    pub columns_agreeing: usize,
    pub mismatches: Vec<WGraphMismatch>,
}

impl WGraphReport {
    pub fn all_agree(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Recomputes the simple-basis columns from the W-graph formula
///
/// ```text
/// [theta_i L(w)] = 0                                              if w s_i > w
///                = (v + v^-1)[L(w)] + sum_{w' in R} mu(w', w)[L(w')]  if w s_i < w
/// ```
///
/// with `mu` extended symmetrically, and compares them with `S_i = T_i^t`.
pub fn w_graph_crosscheck(kl: &KlTable, model: &SpechtModel) -> WGraphReport {
    let dim = model.dim();
    let ids = model.basis_ids();
    let g = kl.group();
    let mut checked = 0;
    let mut agreeing = 0;
    let mut mismatches = Vec::new();
    for i in 1..model.n() {
        let s = &model.simple_matrices[i - 1];
        for (k, &w) in ids.iter().enumerate() {
            let column = |filter: &dyn Fn(usize) -> bool| -> Vec<LaurentPoly> {
                let mut col = vec![LaurentPoly::zero(); dim];
                if !g.has_right_descent(w, i) {
                    return col;
                }
                col[k] = LaurentPoly::quantum_two();
                for (j, &wp) in ids.iter().enumerate() {
                    if j == k || !filter(wp) {
                        continue;
                    }
                    let mu = kl.mu_id(wp, w);
                    if mu != 0 {
                        col[j] += &LaurentPoly::from(mu);
                    }
                }
                col
            };
            let actual: Vec<LaurentPoly> = (0..dim).map(|r| s[(r, k)].clone()).collect();
            checked += 1;
            if column(&|_| true) == actual {
                agreeing += 1;
                continue;
            }
            let matching_variant = if column(&|wp| !g.has_right_descent(wp, i)) == actual {
                Some("ascent".to_string())
            } else if column(&|wp| g.has_right_descent(wp, i)) == actual {
                Some("descent".to_string())
            } else {
                None
            };
            mismatches.push(WGraphMismatch { generator: i, w: g.elem(w).clone(), matching_variant });
        }
    }
    WGraphReport { mu: model.mu.clone(), columns_checked: checked, columns_agreeing: agreeing, mismatches }
}

#[derive(Debug, Clone, Serialize)]
pub struct TruncationReport {
    pub mu: Composition,
    pub discarded_terms: usize,
    pub all_strictly_below: bool,
}

/// Every KL-product term dropped by restricting to the cell must lie strictly
/// below it in the right preorder.
pub fn truncation_check(kl: &KlTable, graph: &PreorderGraph, model: &SpechtModel) -> TruncationReport {
    let cell: std::collections::BTreeSet<usize> = model.basis_ids().iter().copied().collect();
    let mut discarded = 0;
    let mut ok = true;
    for &x in model.basis_ids() {
        for i in 1..model.n() {
            for (z, _) in kl.kl_product_id(x, i) {
                if cell.contains(&z) {
                    continue;
                }
                discarded += 1;
                if graph.reachable(z).contains(&x) {
                    ok = false;
                }
            }
        }
    }
    TruncationReport { mu: model.mu.clone(), discarded_terms: discarded, all_strictly_below: ok }
}

/// True when `sigma_i = T_i(1) - Id` squares to the identity for every generator.
pub fn sigmas_are_involutions(model: &SpechtModel) -> bool {
    let dim = model.dim();
    model.sigmas_at_one().iter().all(|s| {
        (0..dim).all(|r| {
            (0..dim).all(|c| {
                let x: i64 = (0..dim).map(|k| s[r][k] * s[k][c]).sum();
                x == i64::from(r == c)
            })
        })
    })
}

impl SpechtModel {
    /// Scalar `T_i`, for rank-one models.
    pub fn scalar_action(&self, i: usize) -> Option<LaurentPoly> {
        (self.dim() == 1).then(|| self.proj_matrices[i - 1][(0, 0)].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::right_preorder_graph;

    fn setup(n: usize) -> (KlTable, CellPartition) {
        let kl = KlTable::build(n).unwrap();
        let cells = CellPartition::compute(&kl);
        (kl, cells)
    }

    fn perm(x: &[usize]) -> Permutation {
        Permutation::from_oneline(x.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_sign_models() {
        for n in 2..=4 {
            let (kl, cells) = setup(n);
            let triv = SpechtModel::build(&kl, &cells, &Composition::ones(n)).unwrap();
            assert_eq!(triv.lambda_prime, Partition::row(n));
            let sign = SpechtModel::build(&kl, &cells, &Composition::new(vec![n]).unwrap()).unwrap();
            assert_eq!(sign.lambda_prime, Partition::ones(n));
            for i in 1..n {
                assert_eq!(triv.scalar_action(i), Some(LaurentPoly::quantum_two()));
                assert_eq!(sign.scalar_action(i), Some(LaurentPoly::zero()));
            }
        }
    }

    #[test]
    fn two_one_model() {
        let (kl, cells) = setup(3);
        let m = SpechtModel::build(&kl, &cells, &"2,1".parse().unwrap()).unwrap();
        assert_eq!(m.basis, vec![perm(&[1, 3, 2]), perm(&[3, 1, 2])]);
        let q2 = LaurentPoly::quantum_two();
        let (z, o) = (LaurentPoly::zero(), LaurentPoly::one());
        assert_eq!(
            m.proj_matrices[0],
            PolyMatrix::from_rows(vec![vec![z.clone(), z.clone()], vec![o.clone(), q2.clone()]])
        );
        assert_eq!(
            m.proj_matrices[1],
            PolyMatrix::from_rows(vec![vec![q2.clone(), o.clone()], vec![z.clone(), z.clone()]])
        );
        assert_eq!(m.matrix(BasisKind::Simple, 2).unwrap(), &m.proj_matrices[1].transpose());
        assert!(m.matrix(BasisKind::Simple, 3).is_err());
        let report = verify_relations(&m);
        assert!(report.all_hold);
        assert_eq!(m.character_at_one(&"1,1,1".parse().unwrap()).unwrap(), 2);
        assert_eq!(m.character_at_one(&"2,1".parse().unwrap()).unwrap(), 0);
        assert_eq!(m.character_at_one(&"3".parse().unwrap()).unwrap(), -1);
    }

    #[test]
    fn w_graph_hand_column() {
        let (kl, cells) = setup(3);
        let m = SpechtModel::build(&kl, &cells, &"2,1".parse().unwrap()).unwrap();
        let report = w_graph_crosscheck(&kl, &m);
        assert_eq!(report.columns_checked, 4);
        assert!(report.all_agree(), "{report:?}");
    }

    #[test]
    fn relations_identification_and_truncation_up_to_five() {
        for n in 2..=5 {
            let (kl, cells) = setup(n);
            let graph = right_preorder_graph(&kl);
            for mu in Composition::all(n) {
                let m = SpechtModel::build(&kl, &cells, &mu).unwrap();
                assert!(verify_relations(&m).all_hold, "relations fail for {mu}");
                identify_specht(&m).unwrap();
                assert!(sigmas_are_involutions(&m));
                assert!(truncation_check(&kl, &graph, &m).all_strictly_below);
                for (k, t) in m.proj_matrices.iter().enumerate() {
                    assert_eq!(&m.simple_matrices[k], &t.transpose());
                }
            }
        }
    }

    #[test]
    fn character_is_independent_of_the_word() {
        let (kl, cells) = setup(5);
        for mu in Composition::all(5) {
            let m = SpechtModel::build(&kl, &cells, &mu).unwrap();
            for tau in Partition::all(5) {
                let (w, word) = class_representative(&tau);
                let reversed: Vec<usize> = word.iter().rev().copied().collect();
                assert_eq!(Permutation::from_word(5, &reversed).unwrap().cycle_type(), tau);
                // a second reduced word of the same element via a braid move, when one exists
                let other = w.inverse().reduced_word();
                let a = m.trace_of_word_at_one(&word);
                assert_eq!(a, m.trace_of_word_at_one(&reversed));
                assert_eq!(a, m.trace_of_word_at_one(&other));
            }
        }
    }

    #[test]
    fn identification_failure_is_reported() {
        let (kl, cells) = setup(3);
        let mut m = SpechtModel::build(&kl, &cells, &"2,1".parse().unwrap()).unwrap();
        m.lambda_prime = Partition::ones(3);
        assert!(matches!(identify_specht(&m), Err(Error::IdentificationFailed { .. })));
    }
}
