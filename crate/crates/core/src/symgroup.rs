//! The symmetric group `S_n` in one-line notation.
//!
//! Products follow `(x*y)(k) = x(y(k))`, so right multiplication by `s_i` swaps
//! the entries in positions `i` and `i+1`. Elements are ordered canonically by
//! `(length, one-line notation)`, which refines the Bruhat order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::tableaux::Partition;
use crate::{Error, Result};

/// A permutation of `{1, .., n}` stored as `[w(1), .., w(n)]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    oneline: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { oneline: (1..=n as u8).collect() }
    }

    pub fn from_oneline(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &x in &values {
            if x == 0 || x > n || x > u8::MAX as usize || seen[x] {
                return Err(Error::InvalidPermutation(values));
            }
            seen[x] = true;
        }
        Ok(Permutation { oneline: values.into_iter().map(|x| x as u8).collect() })
    }

    /// The product `s_{word[0]} * s_{word[1]} * ...` in `S_n`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word {
            w = w.mul_gen(i)?;
        }
        Ok(w)
    }

    /// Parses `e`, one-line notation `3,1,2`, or a word such as `s2 s1` / `s2s1`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidPermutation(Vec::new());
        if t == "e" || t.is_empty() {
            return Ok(Self::identity(n));
        }
        if t.starts_with('s') {
            let mut word = Vec::new();
            for tok in t.split(|c: char| c.is_whitespace() || c == '*' || c == '.') {
                for part in tok.split('s').skip(1) {
                    word.push(part.parse::<usize>().map_err(|_| bad())?);
                }
                if !tok.is_empty() && !tok.starts_with('s') {
                    return Err(bad());
                }
            }
            return Self::from_word(n, &word);
        }
        let values = t
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let w = Self::from_oneline(values)?;
        if w.n() != n {
            return Err(Error::SizeMismatch(w.n(), n));
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    /// `w(k)` for `k` in `1..=n`.
    pub fn apply(&self, k: usize) -> usize {
        self.oneline[k - 1] as usize
    }

    pub fn oneline(&self) -> Vec<usize> {
        self.oneline.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(k, &x)| x as usize == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (k, &x) in self.oneline.iter().enumerate() {
            inv[x as usize - 1] = (k + 1) as u8;
        }
        Permutation { oneline: inv }
    }

    /// `(self * other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(Permutation { oneline: other.oneline.iter().map(|&k| self.oneline[k as usize - 1]).collect() })
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n() {
            return Err(Error::InvalidGenerator { index: i, n: self.n() });
        }
        Ok(())
    }

    /// `self * s_i`: swaps positions `i` and `i+1`.
    pub fn mul_gen(&self, i: usize) -> Result<Self> {
        self.check_gen(i)?;
        let mut w = self.clone();
        w.oneline.swap(i - 1, i);
        Ok(w)
    }

    /// `s_i * self`: swaps the values `i` and `i+1`.
    pub fn gen_mul(&self, i: usize) -> Result<Self> {
        self.check_gen(i)?;
        let (a, b) = (i as u8, i as u8 + 1);
        Ok(Permutation {
            oneline: self
                .oneline
                .iter()
                .map(|&x| {
                    if x == a {
                        b
                    } else if x == b {
                        a
                    } else {
                        x
                    }
                })
                .collect(),
        })
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.oneline;
        (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&y| y < w[i]).count()).sum()
    }

    /// `w(i) > w(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.oneline[i - 1] > self.oneline[i]
    }

    /// `w^-1(i) > w^-1(i+1)`: the value `i+1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |x: u8| self.oneline.iter().position(|&y| y == x).unwrap();
        pos(i as u8) > pos(i as u8 + 1)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.has_right_descent(i)).collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.has_left_descent(i)).collect()
    }

    /// A reduced word `[a_1, .., a_k]` with `self = s_{a_1} ... s_{a_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.n()).find(|&i| w.has_right_descent(i)) {
            w.oneline.swap(i - 1, i);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// Bruhat order by the tableau criterion: for every prefix, the sorted values
    /// of `self` are dominated entrywise by those of `w`.
    pub fn bruhat_leq(&self, w: &Permutation) -> Result<bool> {
        if self.n() != w.n() {
            return Err(Error::SizeMismatch(self.n(), w.n()));
        }
        let mut a: Vec<u8> = Vec::with_capacity(self.n());
        let mut b: Vec<u8> = Vec::with_capacity(self.n());
        for k in 0..self.n() {
            let pa = a.partition_point(|&y| y < self.oneline[k]);
            a.insert(pa, self.oneline[k]);
            let pb = b.partition_point(|&y| y < w.oneline[k]);
            b.insert(pb, w.oneline[k]);
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.oneline[k] as usize - 1;
                len += 1;
            }
            parts.push(len);
        }
        Partition::from_unsorted(parts)
    }

    /// Comma-separated one-line notation, used as a JSON map key.
    pub fn key(&self) -> String {
        self.oneline.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.length().cmp(&other.length()))
            .then_with(|| self.oneline.cmp(&other.oneline))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.key())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.oneline.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let values = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_oneline(values).map_err(serde::de::Error::custom)
    }
}

/// An ordered tuple of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?}")));
        }
        Ok(Composition { parts })
    }

    /// `(1, 1, .., 1)`.
    pub fn ones(n: usize) -> Self {
        Composition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Generators `s_j` of the Young subgroup: `1..n` minus the partial sums.
    pub fn generator_indices(&self) -> Vec<usize> {
        let mut cuts = Vec::new();
        let mut acc = 0;
        for p in &self.parts {
            acc += p;
            cuts.push(acc);
        }
        (1..self.n()).filter(|j| !cuts.contains(j)).collect()
    }

    /// Block index of each value `1..=n` (0-based blocks).
    fn block_of_values(&self) -> Vec<usize> {
        self.parts.iter().enumerate().flat_map(|(b, &p)| std::iter::repeat_n(b, p)).collect()
    }

    /// `|S_mu|`, the product of the factorials of the parts.
    pub fn young_order(&self) -> u128 {
        self.parts.iter().map(|&p| (1..=p as u128).product::<u128>()).product()
    }

    /// All compositions of `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Composition> {
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: cur.clone() });
                return;
            }
            for p in 1..=rest {
                cur.push(p);
                rec(rest - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Elements of the Young subgroup `S_mu`, canonically ordered.
    pub fn young_subgroup(&self) -> Vec<Permutation> {
        let n = self.n();
        let mut out = vec![Vec::new()];
        let mut start = 0;
        for &p in &self.parts {
            let block: Vec<u8> = (start as u8 + 1..=(start + p) as u8).collect();
            let perms = permutations_of(&block);
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u8>| {
                    perms.iter().map(move |q| {
                        let mut v = prefix.clone();
                        v.extend_from_slice(q);
                        v
                    })
                })
                .collect();
            start += p;
        }
        let mut elems: Vec<Permutation> = out.into_iter().map(|oneline| Permutation { oneline }).collect();
        debug_assert!(elems.iter().all(|w| w.n() == n));
        elems.sort();
        elems
    }

    pub fn contains(&self, u: &Permutation) -> bool {
        let blocks = self.block_of_values();
        (1..=u.n()).all(|k| blocks[k - 1] == blocks[u.apply(k) - 1])
    }

    /// True when `w` has no left descent inside `S_mu`.
    pub fn is_coset_rep(&self, w: &Permutation) -> bool {
        self.generator_indices().iter().all(|&j| !w.has_left_descent(j))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::InvalidComposition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Composition::new(parts).map_err(serde::de::Error::custom)
    }
}

fn permutations_of(items: &[u8]) -> Vec<Vec<u8>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(k);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Shortest right coset representatives `S(mu)` of `S_mu` in `S_n` and the
/// longest of them, `w_mu`.
#[derive(Clone, Debug, Serialize)]
pub struct CosetData {
    pub mu: Composition,
    pub reps: Vec<Permutation>,
    pub w_mu: Permutation,
}

impl CosetData {
    /// Built directly: a representative is determined by which block each position
    /// draws its value from, with values increasing inside each block.
    pub fn new(mu: &Composition) -> Self {
        let n = mu.n();
        let mut labels: Vec<usize> = mu.block_of_values();
        let mut reps = Vec::new();
        loop {
            let mut next = mu
                .parts
                .iter()
                .scan(0, |acc, &p| {
                    let start = *acc;
                    *acc += p;
                    Some(start as u8 + 1)
                })
                .collect::<Vec<u8>>();
            let oneline: Vec<u8> = labels
                .iter()
                .map(|&b| {
                    let x = next[b];
                    next[b] += 1;
                    x
                })
                .collect();
            reps.push(Permutation { oneline });
            if !next_multiset_permutation(&mut labels) {
                break;
            }
        }
        reps.sort();
        let w_mu = reps.last().cloned().unwrap_or_else(|| Permutation::identity(n));
        CosetData { mu: mu.clone(), reps, w_mu }
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.reps.binary_search(w).is_ok()
    }

    pub fn position(&self, w: &Permutation) -> Option<usize> {
        self.reps.binary_search(w).ok()
    }
}

fn next_multiset_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

pub fn coset_data(mu: &Composition) -> CosetData {
    CosetData::new(mu)
}

/// Factors `w = u * r` with `u` in `S_mu` and `r` a shortest coset representative.
pub fn coset_factorize(w: &Permutation, mu: &Composition) -> Result<(Permutation, Permutation)> {
    if w.n() != mu.n() {
        return Err(Error::SizeMismatch(w.n(), mu.n()));
    }
    let blocks = mu.block_of_values();
    let mut next: Vec<u8> = mu
        .parts
        .iter()
        .scan(0, |acc, &p| {
            let start = *acc;
            *acc += p;
            Some(start as u8 + 1)
        })
        .collect();
    let oneline = w
        .oneline
        .iter()
        .map(|&x| {
            let b = blocks[x as usize - 1];
            let y = next[b];
            next[b] += 1;
            y
        })
        .collect();
    let r = Permutation { oneline };
    let u = w.compose(&r.inverse())?;
    Ok((u, r))
}

/// A permutation of the given cycle type built from consecutive Coxeter
/// elements `s_a s_{a+1} .. s_{a+k-2}`, together with that reduced word.
pub fn class_representative(cycle_type: &Partition) -> (Permutation, Vec<usize>) {
    let n = cycle_type.n();
    let mut word = Vec::new();
    let mut start = 1;
    for &k in cycle_type.parts() {
        word.extend(start..start + k - 1);
        start += k;
    }
    let w = Permutation::from_word(n, &word).expect("generators in range");
    (w, word)
}

/// All of `S_n`, interned with integer ids in canonical order, with
/// multiplication-by-generator tables.
#[derive(Debug)]
pub struct SymmetricGroup {
    n: usize,
    elems: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    lengths: Vec<u32>,
    // right_mul[id * (n - 1) + i - 1] = id of elems[id] * s_i
    right_mul: Vec<u32>,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_bound(n, crate::DEFAULT_MAX_N)
    }

    pub fn with_bound(n: usize, bound: usize) -> Result<Self> {
        if n > bound || n == 0 {
            return Err(Error::BoundExceeded { n, bound });
        }
        let ident: Vec<u8> = (1..=n as u8).collect();
        let mut elems: Vec<Permutation> =
            permutations_of(&ident).into_iter().map(|oneline| Permutation { oneline }).collect();
        elems.sort();
        let index: HashMap<Permutation, usize> = elems.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        let lengths = elems.iter().map(|w| w.length() as u32).collect();
        let gens = n.saturating_sub(1);
        let mut right_mul = Vec::with_capacity(elems.len() * gens);
        for w in &elems {
            for i in 1..n {
                right_mul.push(index[&w.mul_gen(i).unwrap()] as u32);
            }
        }
        Ok(SymmetricGroup { n, elems, index, lengths, right_mul })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elems
    }

    pub fn elem(&self, id: usize) -> &Permutation {
        &self.elems[id]
    }

    pub fn id(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length(&self, id: usize) -> usize {
        self.lengths[id] as usize
    }

    /// Id of `elem(id) * s_i`.
    pub fn mul_gen(&self, id: usize, i: usize) -> usize {
        self.right_mul[id * (self.n - 1) + i - 1] as usize
    }

    pub fn has_right_descent(&self, id: usize, i: usize) -> bool {
        self.elems[id].has_right_descent(i)
    }

    pub fn longest(&self) -> usize {
        self.elems.len() - 1
    }

    pub fn coset_data(&self, mu: &Composition) -> CosetData {
        CosetData::new(mu)
    }
}
