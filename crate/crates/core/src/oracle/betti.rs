use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::rank::{rank_f2, rank_rational, SparseRow};
use super::OracleError;

/// Field used for the homology ranks in Hochster's formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum HomologyField {
    #[default]
    Q,
    F2,
}

/// Graded Betti numbers `beta_{i,j}` of `S/I` over a ring with `nvars`
/// variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub nvars: usize,
    /// Nonzero entries keyed by `(i, j)`; serialized as `[i, j, beta]` triples.
    #[serde(with = "sparse")]
    pub beta: BTreeMap<(usize, usize), u64>,
    pub pd: usize,
    pub depth: usize,
    pub reg: usize,
    pub extremal_corners: Vec<(usize, usize)>,
}

impl BettiTable {
    pub fn from_entries(nvars: usize, beta: BTreeMap<(usize, usize), u64>) -> Self {
        let beta: BTreeMap<_, _> = beta.into_iter().filter(|&(_, b)| b > 0).collect();
        let pd = beta.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let reg = beta.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        let extremal_corners = beta
            .keys()
            .filter(|&&(i, j)| !beta.keys().any(|&(a, b)| (a, b) != (i, j) && a >= i && b - a >= j - i))
            .copied()
            .collect();
        BettiTable { nvars, beta, pd, depth: nvars - pd, reg, extremal_corners }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.beta.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_extremal(&self, i: usize, j: usize) -> bool {
        self.extremal_corners.contains(&(i, j))
    }

    /// Table of `S/(I + I')` for ideals in disjoint sets of variables: the
    /// tensor product of the two minimal resolutions.
    pub fn convolve(&self, other: &BettiTable) -> BettiTable {
        let mut beta = BTreeMap::new();
        for (&(i1, j1), &b1) in &self.beta {
            for (&(i2, j2), &b2) in &other.beta {
                *beta.entry((i1 + i2, j1 + j2)).or_insert(0) += b1 * b2;
            }
        }
        BettiTable::from_entries(self.nvars + other.nvars, beta)
    }

    /// Rows `i = 0..=pd`, columns `j - i = 0..=reg`, in the usual Macaulay2
    /// layout (columns are homological degrees).
    pub fn render(&self) -> String {
        let mut out = String::from("      ");
        for i in 0..=self.pd {
            out.push_str(&format!("{i:>6}"));
        }
        out.push('\n');
        for r in 0..=self.reg {
            out.push_str(&format!("{r:>4}: "));
            for i in 0..=self.pd {
                match self.get(i, i + r) {
                    0 => out.push_str("     ."),
                    b => out.push_str(&format!("{b:>6}")),
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Betti numbers of `S/I` for a squarefree monomial ideal `I` by Hochster's
/// formula `beta_{i,|s|} = sum over s of dim H~_{|s|-i-1}(D|_s)`, where `D` is
/// the Stanley-Reisner complex of `I`.
pub fn betti_table(gens: &[Monomial], nvars: usize, field: HomologyField) -> Result<BettiTable, OracleError> {
    if nvars > 31 {
        return Err(OracleError::LimitExceeded { needed: nvars, limit: 31 });
    }
    let mut masks = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.is_squarefree() {
            return Err(OracleError::NotSquarefree(format!("{g:?}")));
        }
        if g.width() > nvars {
            return Err(OracleError::Invalid(format!("generator {g:?} uses more than {nvars} variables")));
        }
        masks.push(g.support());
    }
    let beta = (0u32..1 << nvars)
        .into_par_iter()
        .filter(|&s| !is_cone(s, &masks))
        .map(|s| restriction_homology(s, &masks, field))
        .fold(BTreeMap::new, |mut acc, (size, h)| {
            for (k, dim) in h {
                let i = (size as isize - k - 1) as usize;
                *acc.entry((i, size)).or_insert(0u64) += dim;
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (key, v) in b {
                *a.entry(key).or_insert(0) += v;
            }
            a
        });
    Ok(BettiTable::from_entries(nvars, beta))
}

/// `D|_s` is a cone when some vertex of `s` lies in no generator inside `s`.
/// The empty set is the exception: its restriction `{∅}` has `H~_{-1} = 1`.
fn is_cone(s: u32, gens: &[u32]) -> bool {
    if s == 0 {
        return false;
    }
    let covered = gens.iter().filter(|&&g| g & !s == 0).fold(0, |acc, &g| acc | g);
    covered != s
}

/// Reduced homology of the restriction to `s`, as `(|s|, [(k, dim H~_k)])`.
fn restriction_homology(s: u32, gens: &[u32], field: HomologyField) -> (usize, Vec<(isize, u64)>) {
    let size = s.count_ones() as usize;
    if s == 0 {
        return (0, vec![(-1, 1)]);
    }
    let inside: Vec<u32> = gens.iter().copied().filter(|&g| g & !s == 0).collect();
    // faces[d] lists faces with d + 1 vertices (d = dimension).
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); size];
    let mut sub = s;
    loop {
        if sub != 0 && inside.iter().all(|&g| g & !sub != 0) {
            faces[sub.count_ones() as usize - 1].push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & s;
    }
    for f in &mut faces {
        f.sort_unstable();
    }
    let index: Vec<HashMap<u32, usize>> =
        faces.iter().map(|fs| fs.iter().enumerate().map(|(k, &f)| (f, k)).collect()).collect();
    // rank of boundary C_d -> C_{d-1}; d = 0 is the augmentation to the empty face.
    let boundary_rank = |d: usize| -> usize {
        if faces[d].is_empty() {
            return 0;
        }
        if d == 0 {
            return 1;
        }
        let rows: Vec<SparseRow> = faces[d]
            .iter()
            .map(|&f| {
                let mut row: SparseRow = Vec::with_capacity(d + 1);
                for (pos, v) in bits(f).enumerate() {
                    let col = index[d - 1][&(f & !(1 << v))];
                    row.push((col, if pos % 2 == 0 { 1 } else { -1 }));
                }
                row.sort_unstable();
                row
            })
            .collect();
        match field {
            HomologyField::Q => rank_rational(&rows),
            HomologyField::F2 => rank_f2(&rows, faces[d - 1].len()),
        }
    };
    let ranks: Vec<usize> = (0..size).map(boundary_rank).collect();
    let mut out = Vec::new();
    for d in 0..size {
        let next = if d + 1 < size { ranks[d + 1] } else { 0 };
        let dim = faces[d].len() - ranks[d] - next;
        if dim > 0 {
            out.push((d as isize, dim as u64));
        }
    }
    // H~_{-1} vanishes for nonempty complexes; an empty complex (no vertex of
    // `s` is a face) has H~_{-1} = 1.
    if faces[0].is_empty() {
        out.push((-1, 1));
    }
    (size, out)
}

mod sparse {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(beta: &BTreeMap<(usize, usize), u64>, s: S) -> Result<S::Ok, S::Error> {
        beta.iter().map(|(&(i, j), &b)| (i, j, b)).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, usize), u64>, D::Error> {
        let v = Vec::<(usize, usize, u64)>::deserialize(d)?;
        Ok(v.into_iter().map(|(i, j, b)| ((i, j), b)).collect())
    }
}

fn bits(mut x: u32) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if x == 0 {
            return None;
        }
        let v = x.trailing_zeros();
        x &= x - 1;
        Some(v)
    })
}
