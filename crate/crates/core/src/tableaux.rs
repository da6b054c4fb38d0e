//! Partitions, standard Young tableaux, RSK and irreducible characters of `S_n`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize};

use crate::symgroup::{Composition, Permutation};
use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition { parts: (0..cols).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect() }
    }

    /// All partitions of `n`, in reverse lexicographic order starting with `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Size of the conjugacy class of `S_n` with this cycle type: `n! / z_lambda`.
    pub fn class_size(&self) -> u128 {
        let n = self.n() as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        let mut z: u128 = 1;
        let mut counts: HashMap<usize, u128> = HashMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_default() += 1;
        }
        for (p, m) in counts {
            z *= (p as u128).pow(m as u32) * fact(m);
        }
        fact(n) / z
    }

    /// Sign of a permutation with this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.n() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn sort_to_partition(mu: &Composition) -> Partition {
    Partition::from_unsorted(mu.parts().to_vec())
}

/// Number of standard Young tableaux of shape `lambda`, by the hook length formula.
pub fn syt_count(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::from(1u32);
    for (r, &row) in lambda.parts.iter().enumerate() {
        for c in 0..row {
            let arm = row - c - 1;
            let leg = conj.parts[c] - r - 1;
            hooks *= (arm + leg + 1) as u64;
        }
    }
    let count = factorial(lambda.n()) / hooks;
    count.to_u64().expect("tableau count fits in u64")
}

/// A standard Young tableau stored by rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = StandardTableau { rows };
        if !t.is_standard() {
            return Err(Error::InvalidPartition(format!("not a standard tableau: {:?}", t.rows)));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(|r| r.len()).collect() }
    }

    fn is_standard(&self) -> bool {
        let shape_ok =
            self.rows.iter().all(|r| !r.is_empty()) && self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|p| p[0] < p[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo));
        let mut entries: Vec<usize> = self.rows.iter().flatten().copied().collect();
        entries.sort_unstable();
        let fill_ok = entries.iter().enumerate().all(|(k, &x)| x == k + 1);
        shape_ok && rows_ok && cols_ok && fill_ok
    }
}

/// All standard tableaux of a shape, by placing `n, n-1, ..` in removable corners.
pub fn enumerate_syt(lambda: &Partition) -> Vec<StandardTableau> {
    fn rec(shape: &mut Vec<usize>, rows: &mut Vec<Vec<usize>>, k: usize, out: &mut Vec<StandardTableau>) {
        if k == 0 {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let is_corner = shape[r] > 0 && (r + 1 == shape.len() || shape[r + 1] < shape[r]);
            if !is_corner {
                continue;
            }
            shape[r] -= 1;
            rows[r][shape[r]] = k;
            rec(shape, rows, k - 1, out);
            shape[r] += 1;
        }
    }
    let mut shape = lambda.parts.clone();
    let mut rows: Vec<Vec<usize>> = lambda.parts.iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    rec(&mut shape, &mut rows, lambda.n(), &mut out);
    out.sort();
    out
}

/// Row-insertion RSK of `w(1), .., w(n)`: the insertion tableau `P` and the
/// recording tableau `Q`.
pub fn rsk(w: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, x) in w.oneline().into_iter().enumerate() {
        let mut bump = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![bump]);
                q.push(vec![step + 1]);
                break;
            }
            let pos = p[r].partition_point(|&y| y < bump);
            if pos == p[r].len() {
                p[r].push(bump);
                q[r].push(step + 1);
                break;
            }
            std::mem::swap(&mut p[r][pos], &mut bump);
            r += 1;
        }
    }
    (StandardTableau { rows: p }, StandardTableau { rows: q })
}

/// Irreducible character `chi^lambda` at a permutation of the given cycle type,
/// by the Murnaghan-Nakayama rule.
pub fn mn_character(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    if lambda.n() != cycle_type.n() {
        return Err(Error::SizeMismatch(lambda.n(), cycle_type.n()));
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(&lambda.parts, &cycle_type.parts, &mut memo))
}

fn mn_rec(shape: &[usize], cycles: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return if shape.is_empty() { 1 } else { 0 };
    };
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // beta numbers: distinct, decreasing
    let k = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(j, &p)| p + (k - 1 - j)).collect();
    let mut total = 0;
    for (j, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[j] = b - r;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let new_shape: Vec<usize> = nb.iter().enumerate().map(|(i, &c)| c - (k - 1 - i)).filter(|&p| p > 0).collect();
        total += sign * mn_rec(&new_shape, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Counts standard tableaux by brute enumeration.
pub fn syt_count_by_enumeration(lambda: &Partition) -> u64 {
    enumerate_syt(lambda).len() as u64
}

impl Partition {
    /// `(1, 1, .., 1)`.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The single-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            return Partition::default();
        }
        Partition { parts: vec![n] }
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}
