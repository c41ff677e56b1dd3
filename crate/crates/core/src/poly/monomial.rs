use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;

use super::VarTable;

/// Product of variables with positive exponents, stored sparsely as
/// `(variable id, exponent)` pairs with strictly increasing ids.
///
/// The empty monomial is the constant `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(u16, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(id: u16, exp: u32) -> Self {
        if exp == 0 {
            return Monomial::one();
        }
        Monomial {
            factors: alloc::vec![(id, exp)],
        }
    }

    /// Builds a monomial from arbitrary pairs; zero exponents are dropped and
    /// repeated ids are combined.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u16, u32)>) -> Self {
        let mut factors: Vec<(u16, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_unstable_by_key(|&(id, _)| id);
        let mut out: Vec<(u16, u32)> = Vec::with_capacity(factors.len());
        for (id, e) in factors {
            match out.last_mut() {
                Some(last) if last.0 == id => last.1 += e,
                _ => out.push((id, e)),
            }
        }
        Monomial { factors: out }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(u16, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, id: u16) -> u32 {
        self.factors
            .binary_search_by_key(&id, |&(v, _)| v)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.factors.iter().all(|&(id, e)| other.exponent(id) >= e)
    }

    /// `self / other`, assuming `other.divides(self)`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(
            self.factors
                .iter()
                .map(|&(id, e)| (id, e - other.exponent(id))),
        )
    }

    /// Splits into the part over the ids selected by `keep` and the rest.
    pub(crate) fn split(&self, keep: impl Fn(u16) -> bool) -> (Monomial, Monomial) {
        let (kept, rest): (Vec<_>, Vec<_>) = self.factors.iter().partition(|&&(id, _)| keep(id));
        (Monomial { factors: kept }, Monomial { factors: rest })
    }

    pub(crate) fn remap(&self, map: &[u16]) -> Monomial {
        Monomial::from_pairs(self.factors.iter().map(|&(id, e)| (map[id as usize], e)))
    }

    /// Text such as `A^2*u^3`, factors ordered by name; `1` for the constant.
    pub fn to_text(&self, vars: &VarTable) -> String {
        if self.is_one() {
            return String::from("1");
        }
        let mut named: Vec<(&str, u32)> = self
            .factors
            .iter()
            .map(|&(id, e)| (vars.name(id), e))
            .collect();
        named.sort_unstable_by(|a, b| a.0.cmp(b.0));
        let mut s = String::new();
        for (i, (name, e)) in named.into_iter().enumerate() {
            if i > 0 {
                s.push('*');
            }
            s.push_str(name);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }
}

/// Graded lexicographic: lower total degree first, then the dense exponent
/// vectors compared at the first differing variable (smaller exponent first).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let by_degree = self.degree().cmp(&other.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(&(ia, ea)), Some(&(ib, eb))) => {
                    if ia == ib {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    } else if ia < ib {
                        // `other` has exponent 0 at `ia`.
                        return Ordering::Greater;
                    } else {
                        return Ordering::Less;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
