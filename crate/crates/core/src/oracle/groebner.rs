use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::field::Field;
use super::monomial::{Monomial, TermOrder, MAX_RING_VARS};
use super::poly::Polynomial;
use super::OracleError;

/// Reduced Groebner basis of the ideal generated by `gens` under `order`.
///
/// Pairs are processed smallest lcm first (normal strategy) with the coprime
/// and chain criteria. The result is monic, interreduced and sorted by
/// decreasing leading monomial, so it is unique for the ideal.
pub fn buchberger<F: Field>(gens: &[Polynomial<F>], order: TermOrder) -> Vec<Polynomial<F>> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    for g in gens {
        let g = g.with_order(order).reduce(&basis);
        if !g.is_zero() {
            basis.push(g.monic());
        }
    }
    let mut pending: BTreeSet<PairKey> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert(PairKey::new(&basis, i, j, order));
        }
    }
    while let Some(pair) = pending.pop_first() {
        let (i, j) = (pair.i, pair.j);
        let (li, lj) = (basis[i].lm(), basis[j].lm());
        if li.is_coprime(lj) || chain_criterion(&basis, &pending, i, j, &pair.lcm, order) {
            continue;
        }
        let s = basis[i].s_polynomial(&basis[j]).reduce(&basis);
        if s.is_zero() {
            continue;
        }
        let k = basis.len();
        basis.push(s.monic());
        for i in 0..k {
            pending.insert(PairKey::new(&basis, i, k, order));
        }
    }
    reduce_basis(basis, order)
}

/// A critical pair ordered by lcm degree, then lcm, then indices.
struct PairKey {
    deg: u32,
    lcm: Monomial,
    order: TermOrder,
    i: usize,
    j: usize,
}

impl PairKey {
    fn new<F: Field>(basis: &[Polynomial<F>], i: usize, j: usize, order: TermOrder) -> Self {
        let lcm = basis[i].lm().lcm(basis[j].lm());
        PairKey { deg: lcm.degree(), lcm, order, i, j }
    }
}

impl PartialEq for PairKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for PairKey {}
impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| self.order.cmp(&self.lcm, &other.lcm))
            .then(self.i.cmp(&other.i))
            .then(self.j.cmp(&other.j))
    }
}

/// Skips `(i, j)` when some `k` has leading monomial dividing the lcm and
/// both `(i, k)` and `(j, k)` are already treated.
fn chain_criterion<F: Field>(
    basis: &[Polynomial<F>],
    pending: &BTreeSet<PairKey>,
    i: usize,
    j: usize,
    lcm: &Monomial,
    order: TermOrder,
) -> bool {
    let is_pending = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        pending.contains(&PairKey::new(basis, a, b, order))
    };
    (0..basis.len())
        .filter(|&k| k != i && k != j)
        .any(|k| basis[k].lm().divides(lcm) && !is_pending(i, k) && !is_pending(j, k))
}

fn reduce_basis<F: Field>(basis: Vec<Polynomial<F>>, order: TermOrder) -> Vec<Polynomial<F>> {
    // Minimal: drop elements whose leading monomial another one divides.
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            l != k && h.lm().divides(g.lm()) && (h.lm() != g.lm() || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Polynomial<F>> = (0..minimal.len())
        .map(|k| {
            let others: Vec<_> = minimal.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, h)| h.clone()).collect();
            let lead = Polynomial::monomial(order, *minimal[k].lm(), minimal[k].leading_coefficient().unwrap().clone());
            let tail = minimal[k].sub(&lead).reduce(&others);
            lead.add(&tail).monic()
        })
        .collect();
    out.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    out
}

/// True when every polynomial of `gb` reduces to zero modulo `gb` after any
/// S-pair, i.e. `gb` is a Groebner basis.
pub fn is_groebner_basis<F: Field>(gb: &[Polynomial<F>]) -> bool {
    for j in 0..gb.len() {
        for i in 0..j {
            if !gb[i].s_polynomial(&gb[j]).reduce(gb).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Minimal generators of the leading-term ideal of a Groebner basis,
/// sorted decreasingly under `order`. Every generator must be squarefree.
pub fn initial_ideal<F: Field>(gb: &[Polynomial<F>], order: TermOrder) -> Result<Vec<Monomial>, OracleError> {
    let mut lms: Vec<Monomial> = gb.iter().filter(|g| !g.is_zero()).map(|g| *g.with_order(order).lm()).collect();
    lms.sort_by(|a, b| order.cmp(b, a));
    lms.dedup();
    let minimal: Vec<Monomial> = lms
        .iter()
        .filter(|m| !lms.iter().any(|d| d != *m && d.divides(m)))
        .copied()
        .collect();
    if let Some(bad) = minimal.iter().find(|m| !m.is_squarefree()) {
        return Err(OracleError::NotSquarefree(format!("{bad:?}")));
    }
    Ok(minimal)
}

/// Ideal equality: each generating set reduces to zero modulo a Groebner
/// basis of the other.
pub fn ideal_equal<F: Field>(a: &[Polynomial<F>], b: &[Polynomial<F>]) -> bool {
    let order = TermOrder::DegRevLex;
    let ga = buchberger(a, order);
    let gb = buchberger(b, order);
    a.iter().all(|p| p.with_order(order).reduce(&gb).is_zero()) && b.iter().all(|p| p.with_order(order).reduce(&ga).is_zero())
}

/// Generators of `A ∩ B`: eliminate a new variable `t` from
/// `t·A + (1 - t)·B`. `t` is placed in front of all other variables so that
/// lex eliminates it.
pub fn intersect_ideals<F: Field>(a: &[Polynomial<F>], b: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let order = TermOrder::Lex;
    let width = a.iter().chain(b).map(|p| p.width()).max().unwrap_or(0);
    assert!(width < MAX_RING_VARS, "no room for the elimination variable");
    let t = Polynomial::monomial(order, Monomial::var(0), F::one());
    let one_minus_t = Polynomial::monomial(order, Monomial::ONE, F::one()).sub(&t);
    let lift = |p: &Polynomial<F>| p.with_order(order).map_monomials(|m| m.shifted_up(1));
    let mut gens: Vec<Polynomial<F>> = a.iter().map(|p| t.mul(&lift(p))).collect();
    gens.extend(b.iter().map(|p| one_minus_t.mul(&lift(p))));
    buchberger(&gens, order)
        .into_iter()
        .filter(|g| g.terms().all(|(m, _)| m.exponent(0) == 0))
        .map(|g| g.map_monomials(|m| m.shifted_down(1)))
        .collect()
}
