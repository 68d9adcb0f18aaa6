//! Sparse multivariate polynomials over an exact field with a weighted grading.
//!
//! Monomials are ordered by weighted graded reverse lexicographic order: first
//! by weighted degree, then the monomial with the smaller exponent in the last
//! variable where the two differ is the larger one.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

/// Variable names, positive integer degrees and the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing<F: Field> {
    names: Vec<String>,
    degrees: Vec<u32>,
    field: F::Desc,
}

pub type RingRef<F> = Arc<PolyRing<F>>;

impl<F: Field> PolyRing<F> {
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = (S, u32)>,
        field: F::Desc,
    ) -> Result<RingRef<F>> {
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        for (n, d) in vars {
            let n = n.into();
            if d == 0 {
                return Err(Error::InvalidDegree {
                    name: n,
                    degree: 0,
                });
            }
            names.push(n);
            degrees.push(d);
        }
        Ok(Arc::new(PolyRing {
            names,
            degrees,
            field,
        }))
    }

    /// Standard-graded ring with variables named `prefix1, prefix2, ...`.
    pub fn standard(prefix: &str, n: usize, field: F::Desc) -> RingRef<F> {
        Self::new((1..=n).map(|i| (format!("{prefix}{i}"), 1)), field)
            .expect("unit degrees are valid")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn field(&self) -> &F::Desc {
        &self.field
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn monomial(&self, exps: Vec<u32>) -> Monomial {
        assert_eq!(exps.len(), self.nvars(), "exponent vector length");
        let degree = exps
            .iter()
            .zip(&self.degrees)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum();
        Monomial { degree, exps }
    }

    pub fn unit_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var_monomial(&self, i: usize) -> Monomial {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.monomial(e)
    }

    /// All monomials of weighted degree `d`, in ascending term order.
    pub fn monomials_of_degree(&self, d: u64) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars()];
        self.fill_degree(0, d, &mut exps, &mut out);
        out.sort();
        out
    }

    fn fill_degree(&self, i: usize, rem: u64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == self.nvars() {
            if rem == 0 {
                out.push(self.monomial(exps.clone()));
            }
            return;
        }
        let w = self.degrees[i] as u64;
        let mut e = 0u64;
        while e * w <= rem {
            exps[i] = e as u32;
            self.fill_degree(i + 1, rem - e * w, exps, out);
            e += 1;
        }
        exps[i] = 0;
    }
}

pub fn same_ring<F: Field>(a: &RingRef<F>, b: &RingRef<F>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Exponent vector with its cached weighted degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u64,
    exps: Vec<u32>,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: vec![0; nvars],
        }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            degree: other.degree - self.degree,
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        })
    }

    /// Least common multiple; `weights` are the ring degrees.
    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum();
        Monomial { degree, exps }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Index of the single variable when this is a pure power `x_i^k`, `k >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }
}

/// Sparse polynomial; no stored zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    ring: RingRef<F>,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &RingRef<F>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &RingRef<F>, c: F) -> Self {
        Self::term(ring, ring.unit_monomial(), c)
    }

    pub fn one(ring: &RingRef<F>) -> Self {
        Self::constant(ring, F::one(ring.field()))
    }

    pub fn var(ring: &RingRef<F>, i: usize) -> Self {
        Self::term(ring, ring.var_monomial(i), F::one(ring.field()))
    }

    pub fn term(ring: &RingRef<F>, m: Monomial, c: F) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(ring: &RingRef<F>, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| F::zero(self.ring.field()))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.leading_term().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&F> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn constant_value(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero(self.ring.field())),
            1 => {
                let (m, c) = self.leading_term().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Common weighted degree of all terms, `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Homogeneity for an arbitrary integer grading of the variables.
    pub fn is_homogeneous_for(&self, weights: &[i64]) -> bool {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(weights));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = F::zero(self.ring.field());
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t = t * x.pow(e as u64);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Variables that occur with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for m in self.terms.keys() {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        (0..used.len()).filter(|&i| used[i]).collect()
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `var_map[i]` of the target ring.
    pub fn rebase(&self, target: &RingRef<F>, var_map: &[usize]) -> Self {
        assert_eq!(var_map.len(), self.ring.nvars());
        Self::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0u32; target.nvars()];
                for (i, &x) in m.exps().iter().enumerate() {
                    e[var_map[i]] += x;
                }
                (target.monomial(e), c.clone())
            }),
        )
    }

    /// Substitutes a polynomial of `target` for every variable.
    pub fn substitute(&self, target: &RingRef<F>, images: &[Polynomial<F>]) -> Self {
        assert_eq!(images.len(), self.ring.nvars());
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (img, &e) in images.iter().zip(m.exps()) {
                if e > 0 {
                    t = &t * &img.pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Maps coefficients into another field over a ring with the same variables.
    pub fn map_coefficients<G: Field>(
        &self,
        target: &RingRef<G>,
        f: impl Fn(&F) -> Option<G>,
    ) -> Result<Polynomial<G>> {
        assert_eq!(target.nvars(), self.ring.nvars());
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let g = f(c).ok_or_else(|| Error::CoefficientNotInField(c.to_string()))?;
            out.add_term(target.monomial(m.exps().to_vec()), g);
        }
        Ok(out)
    }

    pub(crate) fn take_leading(&mut self) -> Option<(Monomial, F)> {
        self.terms.pop_last()
    }
}

fn add_assign_scaled<F: Field>(acc: &mut BTreeMap<Monomial, F>, other: &BTreeMap<Monomial, F>, negate: bool) {
    for (m, c) in other {
        let c = if negate { -c.clone() } else { c.clone() };
        match acc.get_mut(m) {
            Some(e) => {
                let s = e.clone() + c;
                if s.is_zero() {
                    acc.remove(m);
                } else {
                    *e = s;
                }
            }
            None => {
                acc.insert(m.clone(), c);
            }
        }
    }
}

impl<'a, F: Field> Add<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        let mut terms = self.terms.clone();
        add_assign_scaled(&mut terms, &rhs.terms, false);
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl<'a, F: Field> Sub<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        let mut terms = self.terms.clone();
        add_assign_scaled(&mut terms, &rhs.terms, true);
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl<'a, F: Field> Mul<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        let mut terms: BTreeMap<Monomial, F> = BTreeMap::new();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                let prod = c.clone() * d.clone();
                let key = m.mul(n);
                match terms.get_mut(&key) {
                    Some(e) => {
                        let s: F = e.clone() + prod;
                        if s.is_zero() {
                            terms.remove(&key);
                        } else {
                            *e = s;
                        }
                    }
                    None => {
                        if !prod.is_zero() {
                            terms.insert(key, prod);
                        }
                    }
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

pub(crate) fn fmt_monomial(names: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (n, &e) in names.iter().zip(m.exps()) {
        match e {
            0 => {}
            1 => parts.push(n.clone()),
            _ => parts.push(format!("{n}^{e}")),
        }
    }
    parts.join("*")
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let mono = fmt_monomial(&self.ring.names, m);
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            let sign = match (i, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let body = if mono.is_empty() {
                mag
            } else if mag == "1" {
                mono
            } else if mag.contains('/') {
                format!("({mag})*{mono}")
            } else {
                format!("{mag}*{mono}")
            };
            write!(f, "{sign}{body}")?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, RationalField};

    fn ring_xy() -> RingRef<Rational> {
        PolyRing::new([("x", 1), ("y", 1)], RationalField).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_i64(&RationalField, n)
    }

    #[test]
    fn grevlex_order_on_degree_two() {
        let r = PolyRing::<Rational>::new([("x", 1), ("y", 1), ("z", 1)], RationalField).unwrap();
        let m = |e: [u32; 3]| r.monomial(e.to_vec());
        // x^2 > xy > y^2 > xz > yz > z^2
        let order = [
            m([2, 0, 0]),
            m([1, 1, 0]),
            m([0, 2, 0]),
            m([1, 0, 1]),
            m([0, 1, 1]),
            m([0, 0, 2]),
        ];
        for w in order.windows(2) {
            assert!(w[0] > w[1], "{:?} > {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn weighted_degree_dominates() {
        let r = PolyRing::<Rational>::new([("x", 1), ("y", 3)], RationalField).unwrap();
        assert!(r.monomial(vec![0, 1]) > r.monomial(vec![2, 0]));
        assert_eq!(r.monomial(vec![1, 1]).degree(), 4);
    }

    #[test]
    fn monomials_of_degree_counts() {
        let r = PolyRing::<Rational>::new([("x", 1), ("y", 2)], RationalField).unwrap();
        let counts: Vec<usize> = (0..6).map(|d| r.monomials_of_degree(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn arithmetic_and_display() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert!((&p - &p).is_zero());
        assert_eq!(p.homogeneous_degree(), Some(2));
        let inh = &p + &x;
        assert!(!inh.is_homogeneous());
        assert_eq!(inh.eval(&[q(3), q(1)]), q(11));
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(x.scale(&half).to_string(), "(1/2)*x");
    }

    #[test]
    fn zero_degree_variables_are_rejected() {
        assert!(PolyRing::<Rational>::new([("x", 0)], RationalField).is_err());
    }

    #[test]
    fn substitute_and_rebase() {
        let r = ring_xy();
        let s = PolyRing::<Rational>::new([("t", 1)], RationalField).unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = &(&x * &x) + &y;
        let t = Polynomial::var(&s, 0);
        let img = p.substitute(&s, &[t.clone(), &t * &t]);
        assert_eq!(img.to_string(), "2*t^2");
        let big = PolyRing::<Rational>::new([("a", 1), ("x", 1), ("y", 1)], RationalField).unwrap();
        assert_eq!(p.rebase(&big, &[1, 2]).to_string(), "x^2 + y");
    }
}
