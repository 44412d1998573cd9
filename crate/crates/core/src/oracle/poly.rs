use std::cmp::Ordering;
use std::fmt;

use super::field::Field;
use super::monomial::{Monomial, TermOrder};

/// A polynomial with terms kept in increasing order, so the leading term is
/// the last one. Zero coefficients never appear.
#[derive(Clone, PartialEq)]
pub struct Polynomial<F: Field> {
    order: TermOrder,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(order: TermOrder) -> Self {
        Polynomial { order, terms: Vec::new() }
    }

    pub fn monomial(order: TermOrder, m: Monomial, c: F) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { order, terms }
    }

    /// Collects like terms and drops zeros.
    pub fn from_terms(order: TermOrder, mut terms: Vec<(Monomial, F)>) -> Self {
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { order, terms: out }
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    /// The same polynomial sorted under another order.
    pub fn with_order(&self, order: TermOrder) -> Self {
        Polynomial::from_terms(order, self.terms.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the leading one down.
    pub fn terms(&self) -> impl Iterator<Item = &(Monomial, F)> {
        self.terms.iter().rev()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&F> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms.last().expect("leading monomial of zero").0
    }

    fn lc(&self) -> &F {
        &self.terms.last().expect("leading coefficient of zero").1
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.order);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a.mul(c))).collect();
        Polynomial { order: self.order, terms }
    }

    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(&F::one(), &Monomial::ONE, other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(&F::one().neg(), &Monomial::ONE, other)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Polynomial::zero(self.order);
        for (m, c) in &other.terms {
            acc = acc.add_scaled(c, m, self);
        }
        acc
    }

    /// `self + c * m * q` by a single merge.
    pub fn add_scaled(&self, c: &F, m: &Monomial, q: &Self) -> Self {
        let ord = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + q.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = q.terms.iter().map(|(qm, qc)| (qm.mul(m), qc.mul(c))).peekable();
        loop {
            let pick = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
            };
            match pick {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (m1, c1) = a.next().unwrap();
                    let (_, c2) = b.next().unwrap();
                    let s = c1.add(&c2);
                    if !s.is_zero() {
                        out.push((*m1, s));
                    }
                }
            }
        }
        Polynomial { order: ord, terms: out }
    }

    /// Remainder of full division by `basis`: no term of the result is
    /// divisible by a leading monomial of `basis`.
    pub fn reduce(&self, basis: &[Polynomial<F>]) -> Self {
        let mut p = self.clone();
        let mut rem: Vec<(Monomial, F)> = Vec::new();
        'outer: while let Some((lm, lc)) = p.terms.last().cloned() {
            for g in basis {
                if let Some(q) = g.lm().quotient_of(&lm) {
                    let c = lc.div(g.lc()).neg();
                    p = p.add_scaled(&c, &q, g);
                    continue 'outer;
                }
            }
            p.terms.pop();
            rem.push((lm, lc));
        }
        rem.reverse();
        Polynomial { order: self.order, terms: rem }
    }

    /// S-polynomial of two nonzero polynomials, normalized by leading
    /// coefficients.
    pub fn s_polynomial(&self, other: &Self) -> Self {
        let l = self.lm().lcm(other.lm());
        let a = self.lm().quotient_of(&l).unwrap();
        let b = other.lm().quotient_of(&l).unwrap();
        let left = Polynomial::zero(self.order).add_scaled(&self.lc().inv(), &a, self);
        left.add_scaled(&other.lc().inv().neg(), &b, other)
    }

    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        Polynomial::from_terms(self.order, self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect())
    }

    /// Largest variable index in use plus one.
    pub fn width(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.width()).max().unwrap_or(0)
    }

    /// Renders with `x_i, y_i` names for a graph on `n` vertices.
    pub fn display(&self, n: usize) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() || m.degree() == 0 {
                s.push_str(&mag.to_string());
                if m.degree() > 0 {
                    s.push('*');
                }
            }
            if m.degree() > 0 {
                s.push_str(&m.display(n));
            }
        }
        s
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{m:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::Q;
    use super::*;

    fn p(terms: &[(&[u8], i64)]) -> Polynomial<Q> {
        Polynomial::from_terms(
            TermOrder::Lex,
            terms.iter().map(|(e, c)| (Monomial::from_exponents(e), Q::from_i64(*c))).collect(),
        )
    }

    #[test]
    fn normalization_and_arithmetic() {
        let a = p(&[(&[1, 0], 2), (&[0, 1], 3), (&[1, 0], -2)]);
        assert_eq!(a, p(&[(&[0, 1], 3)]));
        let b = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let c = p(&[(&[1, 0], 1), (&[0, 1], -1)]);
        // (x + y)(x - y) = x^2 - y^2
        assert_eq!(b.mul(&c), p(&[(&[2, 0], 1), (&[0, 2], -1)]));
        assert!(b.sub(&b).is_zero());
        assert_eq!(*b.lm(), Monomial::from_exponents(&[1, 0]));
    }

    #[test]
    fn division() {
        // x^2 - y^2 mod (x - y) = 0; x^2 mod (x - y) = y^2.
        let g = p(&[(&[1, 0], 1), (&[0, 1], -1)]);
        assert!(p(&[(&[2, 0], 1), (&[0, 2], -1)]).reduce(&[g.clone()]).is_zero());
        assert_eq!(p(&[(&[2, 0], 1)]).reduce(&[g]), p(&[(&[0, 2], 1)]));
    }

    #[test]
    fn s_pair() {
        let f = p(&[(&[1, 1, 0], 1), (&[0, 0, 1], 1)]);
        let g = p(&[(&[1, 0, 0], 2), (&[0, 1, 0], 1)]);
        // lcm x*y: y*f/1 - y*g/2 ... = z - y^2/2
        let s = f.s_polynomial(&g);
        let want = Polynomial::from_terms(
            TermOrder::Lex,
            vec![
                (Monomial::from_exponents(&[0, 0, 1]), Q::one()),
                (Monomial::from_exponents(&[0, 2, 0]), Q::from_i64(-1).div(&Q::from_i64(2))),
            ],
        );
        assert_eq!(s, want);
    }

    #[test]
    fn display() {
        let f = p(&[(&[1, 0, 0, 1], 1), (&[0, 1, 1, 0], -1)]);
        assert_eq!(f.display(2), "x1*y2 - x2*y1");
    }
}
