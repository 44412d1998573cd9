use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Hard cap on ring variables for the fixed-width exponent vector.
pub const MAX_RING_VARS: usize = 32;

/// A monomial `v_0^{e_0} .. v_{31}^{e_31}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exp: [u8; MAX_RING_VARS],
    deg: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exp: [0; MAX_RING_VARS], deg: 0 };

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::ONE;
        m.exp[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_RING_VARS, "too many variables");
        let mut m = Monomial::ONE;
        m.exp[..exps.len()].copy_from_slice(exps);
        m.deg = exps.iter().map(|&e| e as u32).sum();
        m
    }

    /// Product of the variables whose bits are set.
    pub fn from_mask(mask: u32) -> Self {
        let mut m = Monomial::ONE;
        for i in 0..MAX_RING_VARS {
            if mask >> i & 1 == 1 {
                m.exp[i] = 1;
                m.deg += 1;
            }
        }
        m
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u8 {
        self.exp[i]
    }

    pub fn exponents(&self) -> &[u8; MAX_RING_VARS] {
        &self.exp
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    /// Bit `i` set when variable `i` occurs.
    pub fn support(&self) -> u32 {
        let mut s = 0;
        for (i, &e) in self.exp.iter().enumerate() {
            if e > 0 {
                s |= 1 << i;
            }
        }
        s
    }

    pub fn is_squarefree(&self) -> bool {
        self.exp.iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_RING_VARS {
            m.exp[i] = m.exp[i].checked_add(other.exp[i]).expect("exponent overflow");
        }
        m.deg += other.deg;
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exp.iter().zip(&other.exp).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for i in 0..MAX_RING_VARS {
            m.exp[i] -= self.exp[i];
        }
        m.deg -= self.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::ONE;
        for i in 0..MAX_RING_VARS {
            m.exp[i] = self.exp[i].max(other.exp[i]);
            m.deg += m.exp[i] as u32;
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support() & other.support() == 0
    }

    /// Moves variable `i` to `i + k`. Variables pushed past the cap panic.
    pub fn shifted_up(&self, k: usize) -> Monomial {
        let mut m = Monomial::ONE;
        for i in 0..MAX_RING_VARS {
            if self.exp[i] > 0 {
                assert!(i + k < MAX_RING_VARS, "shift exceeds variable cap");
                m.exp[i + k] = self.exp[i];
            }
        }
        m.deg = self.deg;
        m
    }

    /// Moves variable `i` to `i - k`; the first `k` variables must not occur.
    pub fn shifted_down(&self, k: usize) -> Monomial {
        assert!(self.exp[..k].iter().all(|&e| e == 0), "shift would drop a variable");
        let mut m = Monomial::ONE;
        m.exp[..MAX_RING_VARS - k].copy_from_slice(&self.exp[k..]);
        m.deg = self.deg;
        m
    }

    /// Largest index of an occurring variable plus one.
    pub fn width(&self) -> usize {
        self.exp.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }

    /// Renders with `x_1..x_n, y_1..y_n` names for a ring on `2n` variables.
    pub fn display(&self, n: usize) -> String {
        if self.deg == 0 {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = if i < n { format!("x{}", i + 1) } else { format!("y{}", i - n + 1) };
            parts.push(if e == 1 { name } else { format!("{name}^{e}") });
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deg == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "v{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monomial order on the ring variables; index 0 is the largest variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermOrder {
    /// Lexicographic with `v_0 > v_1 > ..`. With variables laid out as
    /// `x_1, .., x_n, y_1, .., y_n` this is the diagonal order under which
    /// binomial edge ideals have squarefree initial ideals.
    Lex,
    DegRevLex,
}

impl TermOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.exp.cmp(&b.exp),
            TermOrder::DegRevLex => a.deg.cmp(&b.deg).then_with(|| {
                for i in (0..MAX_RING_VARS).rev() {
                    if a.exp[i] != b.exp[i] {
                        return b.exp[i].cmp(&a.exp[i]);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::Lex => "diaglex",
            TermOrder::DegRevLex => "degrevlex",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u8]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn arithmetic() {
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 1, 1]);
        assert_eq!(a.mul(&b), m(&[1, 1, 3]));
        assert_eq!(a.lcm(&b), m(&[1, 1, 2]));
        assert!(b.divides(&a.mul(&b)));
        assert_eq!(b.quotient_of(&a.mul(&b)), Some(a));
        assert_eq!(a.quotient_of(&b), None);
        assert!(m(&[1, 0]).is_coprime(&m(&[0, 3])));
        assert!(!a.is_squarefree() && b.is_squarefree());
        assert_eq!(Monomial::from_mask(0b101), m(&[1, 0, 1]));
        assert_eq!(a.shifted_up(1).shifted_down(1), a);
    }

    #[test]
    fn orders() {
        // Lex: v0 beats any power of v1.
        assert_eq!(TermOrder::Lex.cmp(&m(&[1]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(TermOrder::DegRevLex.cmp(&m(&[1]), &m(&[0, 5])), Ordering::Less);
        // Degrevlex tie: v0*v2 < v1^2.
        assert_eq!(TermOrder::DegRevLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(TermOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn naming() {
        // x1*y2 in the ring of a 2-vertex graph.
        assert_eq!(m(&[1, 0, 0, 1]).display(2), "x1*y2");
        assert_eq!(Monomial::ONE.display(2), "1");
    }
}
