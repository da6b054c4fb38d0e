//! The graded bilinear form on the cell module, given on projectives by the
//! graded Cartan pairing `G_xy = sum_{w in S(mu)} n(w, x) n(w, y)`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::laurent::{series_expand, LaurentPoly, RationalV};
use crate::matrix::PolyMatrix;
use crate::parabolic::ParabolicKlTable;
use crate::specht::SpechtModel;
use crate::symgroup::{Composition, Permutation};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GramMatrix {
    pub mu: Composition,
    pub basis: Vec<Permutation>,
    pub entries: PolyMatrix,
}

impl GramMatrix {
    /// Pairs the decomposition columns of the basis elements.
    pub fn build(table: &ParabolicKlTable, basis: &[Permutation]) -> Result<Self> {
        let cols = basis.iter().map(|x| table.decomposition_column(x)).collect::<Result<Vec<_>>>()?;
        let d = basis.len();
        let mut entries = PolyMatrix::zeros(d, d);
        for a in 0..d {
            for b in a..d {
                let p: LaurentPoly = cols[a].iter().zip(&cols[b]).map(|(x, y)| x * y).sum();
                entries[(b, a)] = p.clone();
                entries[(a, b)] = p;
            }
        }
        Ok(GramMatrix { mu: table.mu().clone(), basis: basis.to_vec(), entries })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, w: &Permutation) -> Result<usize> {
        self.basis.iter().position(|b| b == w).ok_or_else(|| Error::NotInCell(w.clone()))
    }

    pub fn determinant(&self) -> LaurentPoly {
        self.entries.determinant()
    }

    pub fn at_one(&self) -> Vec<Vec<BigInt>> {
        self.entries.eval_at_one()
    }

    /// Symmetric, `1 + vZ[v]` on the diagonal, `vZ[v]` off it, nonnegative,
    /// and non-degenerate both over `Q(v)` and at `v = 1`.
    pub fn shape_report(&self) -> ShapeReport {
        let d = self.dim();
        let one = LaurentPoly::one();
        let mut diagonal_ok = true;
        let mut off_diagonal_ok = true;
        let mut nonnegative = true;
        for a in 0..d {
            for b in 0..d {
                let p = &self.entries[(a, b)];
                nonnegative &= p.has_nonnegative_coeffs();
                if a == b {
                    diagonal_ok &= (p - &one).in_v_z_v() || p.is_one();
                } else {
                    off_diagonal_ok &= p.is_zero() || p.in_v_z_v();
                }
            }
        }
        let det = self.determinant();
        ShapeReport {
            symmetric: self.entries.is_symmetric(),
            diagonal_ok,
            off_diagonal_ok,
            nonnegative,
            det_nonzero: !det.is_zero(),
            det_at_one: det.eval_at_one().to_string(),
        }
    }
}

pub fn gram(table: &ParabolicKlTable, basis: &[Permutation]) -> Result<GramMatrix> {
    GramMatrix::build(table, basis)
}

#[derive(Debug, Clone, Serialize)]
pub struct ShapeReport {
    pub symmetric: bool,
    pub diagonal_ok: bool,
    pub off_diagonal_ok: bool,
    pub nonnegative: bool,
    pub det_nonzero: bool,
    pub det_at_one: String,
}

impl ShapeReport {
    pub fn passes(&self) -> bool {
        self.symmetric
            && self.diagonal_ok
            && self.off_diagonal_ok
            && self.nonnegative
            && self.det_nonzero
            && self.det_at_one != "0"
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvarianceReport {
    pub mu: Composition,
    /// `T_i^t G = G T_i`, per generator.
    pub adjoint: Vec<bool>,
    /// `(G T_i)_{x,w} = (v + v^-1) G_{x,w}` whenever `x s_i < x` and `w s_i < w`.
    pub descent_entries: Vec<bool>,
}

impl InvarianceReport {
    pub fn passes(&self) -> bool {
        self.adjoint.iter().chain(&self.descent_entries).all(|&b| b)
    }
}

fn check_same_basis(g: &GramMatrix, model: &SpechtModel) -> Result<()> {
    if g.basis != model.basis {
        return Err(Error::CrosscheckFailed(format!("Gram basis and model basis differ for mu = {}", g.mu)));
    }
    Ok(())
}

pub fn invariance_check(g: &GramMatrix, model: &SpechtModel) -> Result<InvarianceReport> {
    check_same_basis(g, model)?;
    let q2 = LaurentPoly::quantum_two();
    let d = g.dim();
    let mut adjoint = Vec::new();
    let mut descent_entries = Vec::new();
    for (k, t) in model.proj_matrices.iter().enumerate() {
        let i = k + 1;
        let gt = &g.entries * t;
        adjoint.push(&t.transpose() * &g.entries == gt);
        let desc: Vec<bool> = g.basis.iter().map(|x| x.has_right_descent(i)).collect();
        let mut ok = true;
        for a in (0..d).filter(|&a| desc[a]) {
            for b in (0..d).filter(|&b| desc[b]) {
                ok &= gt[(a, b)] == &q2 * &g.entries[(a, b)];
            }
        }
        descent_entries.push(ok);
    }
    Ok(InvarianceReport { mu: g.mu.clone(), adjoint, descent_entries })
}

#[derive(Debug, Clone, Serialize)]
pub struct UniquenessReport {
    pub mu: Composition,
    pub unknowns: usize,
    pub rank: usize,
    pub solution_dim: usize,
    pub contains_gram: bool,
}

impl UniquenessReport {
    pub fn passes(&self) -> bool {
        self.solution_dim == 1 && self.contains_gram
    }
}

/// Solves `{B = B^t, T_i^t B = B T_i for all i}` over `Q(v)`.
pub fn uniqueness_check(g: &GramMatrix, model: &SpechtModel) -> Result<UniquenessReport> {
    check_same_basis(g, model)?;
    let d = g.dim();
    // unknown index of the symmetric entry (a, b)
    let var = |a: usize, b: usize| {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        a * d - a * (a + 1) / 2 + b
    };
    let unknowns = d * (d + 1) / 2;
    let mut equations: Vec<Vec<LaurentPoly>> = Vec::new();
    for t in &model.proj_matrices {
        // (T^t B - B T)_{a,b} = sum_k T_{k,a} B_{k,b} - B_{a,k} T_{k,b}
        for a in 0..d {
            for b in 0..d {
                let mut row = vec![LaurentPoly::zero(); unknowns];
                for k in 0..d {
                    row[var(k, b)] += &t[(k, a)];
                    row[var(a, k)] -= &t[(k, b)];
                }
                if row.iter().any(|p| !p.is_zero()) && !equations.contains(&row) {
                    equations.push(row);
                }
            }
        }
    }
    let rank = if equations.is_empty() { 0 } else { PolyMatrix::from_rows(equations.clone()).rank() };
    let mut gvec = vec![LaurentPoly::zero(); unknowns];
    for a in 0..d {
        for b in a..d {
            gvec[var(a, b)] = g.entries[(a, b)].clone();
        }
    }
    let contains_gram =
        equations.iter().all(|row| row.iter().zip(&gvec).map(|(c, x)| c * x).sum::<LaurentPoly>().is_zero());
    Ok(UniquenessReport { mu: g.mu.clone(), unknowns, rank, solution_dim: unknowns - rank, contains_gram })
}

/// Total dimension of `End(P(w))`: the diagonal entry at `v = 1`.
pub fn endo_dim(g: &GramMatrix, w: &Permutation) -> Result<BigInt> {
    let k = g.position(w)?;
    Ok(g.entries[(k, k)].eval_at_one())
}

/// `G^-1` over `Q(v)`.
pub fn gram_inverse(g: &GramMatrix) -> Result<Vec<Vec<RationalV>>> {
    g.entries.inverse()
}

/// Entries of `G^-1` expanded as power series, exact through `v^order`.
pub fn simple_form(g: &GramMatrix, order: i32) -> Result<PolyMatrix> {
    let inv = gram_inverse(g)?;
    let rows = inv
        .iter()
        .map(|row| row.iter().map(|r| series_expand(r, order)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyMatrix::from_rows(rows))
}

/// `simple_form(g, order) * G` agrees with the identity through `v^order`.
pub fn inverse_check(g: &GramMatrix, order: i32) -> Result<bool> {
    let s = simple_form(g, order)?;
    let prod = (&s * &g.entries).map(|p| p.truncate(order));
    Ok(prod == PolyMatrix::identity(g.dim()))
}
