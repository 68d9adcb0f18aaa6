//! Buchberger's algorithm, normal forms and ideal queries.
//!
//! Pairs are selected by the normal strategy (smallest lcm first). Pairs with
//! coprime leading monomials and pairs caught by the chain criterion are
//! skipped. The result is the reduced basis, monic, sorted by ascending
//! leading monomial.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{same_ring, Monomial, Polynomial, RingRef};

/// Remainder of `f` after full reduction by `basis`.
pub fn normal_form<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Result<Polynomial<F>> {
    if basis.iter().any(|g| !same_ring(g.ring(), f.ring())) {
        return Err(Error::RingMismatch);
    }
    Ok(reduce(f, basis))
}

fn reduce<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let divisors: Vec<(Monomial, F, Polynomial<F>)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut tail = g.clone();
            let (m, c) = tail.take_leading().unwrap();
            (m, c, tail)
        })
        .collect();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(f.ring());
    while let Some((m, c)) = p.take_leading() {
        match divisors.iter().find(|(lm, _, _)| lm.divides(&m)) {
            Some((lm, lc, tail)) => {
                let q = lm.quotient_of(&m).unwrap();
                let factor = -(c * lc.inv().unwrap());
                p = &p + &tail.mul_term(&q, &factor);
            }
            None => rem.add_term(m, c),
        }
    }
    rem
}

fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let ring = f.ring();
    let (fm, fc) = f.leading_term().unwrap();
    let (gm, gc) = g.leading_term().unwrap();
    let l = fm.lcm(gm, ring.degrees());
    let a = f.mul_term(&fm.quotient_of(&l).unwrap(), &fc.inv().unwrap());
    let b = g.mul_term(&gm.quotient_of(&l).unwrap(), &gc.inv().unwrap());
    &a - &b
}

/// Reduced Groebner basis of the ideal generated by `generators`.
pub fn groebner_basis<F: Field>(generators: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>> {
    let Some(first) = generators.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    if generators.iter().any(|g| !same_ring(g.ring(), &ring)) {
        return Err(Error::RingMismatch);
    }
    Ok(buchberger(&ring, generators))
}

fn buchberger<F: Field>(ring: &RingRef<F>, generators: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let weights = ring.degrees().to_vec();

    for g in generators {
        let h = reduce(g, &basis);
        if h.is_zero() {
            continue;
        }
        if h.leading_monomial().unwrap().is_one() {
            return vec![Polynomial::one(ring)];
        }
        let n = basis.len();
        basis.push(h.monic());
        pending.extend((0..n).map(|i| (i, n)));
    }

    let lcm_of = |basis: &[Polynomial<F>], i: usize, j: usize| {
        basis[i]
            .leading_monomial()
            .unwrap()
            .lcm(basis[j].leading_monomial().unwrap(), &weights)
    };

    while !pending.is_empty() {
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                lcm_of(&basis, a.0, a.1)
                    .cmp(&lcm_of(&basis, b.0, b.1))
                    .then(a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));

        let (mi, mj) = (
            basis[i].leading_monomial().unwrap(),
            basis[j].leading_monomial().unwrap(),
        );
        if mi.coprime(mj) {
            continue;
        }
        let l = mi.lcm(mj, &weights);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        let h = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if h.is_zero() {
            continue;
        }
        if h.leading_monomial().unwrap().is_one() {
            return vec![Polynomial::one(ring)];
        }
        let n = basis.len();
        basis.push(h.monic());
        pending.extend((0..n).map(|k| (k, n)));
    }

    reduce_basis(basis)
}

fn reduce_basis<F: Field>(basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let hm = h.leading_monomial().unwrap();
            k != idx && hm.divides(lm) && (hm != lm || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let mut tail = minimal[idx].clone();
        let (m, c) = tail.take_leading().unwrap();
        let others: Vec<_> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, g)| g.clone())
            .collect();
        let mut g = reduce(&tail, &others);
        g.add_term(m, c);
        reduced.push(g.monic());
    }
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    reduced
}

/// Generators of an ideal with a lazily computed reduced Groebner basis.
#[derive(Debug)]
pub struct Ideal<F: Field> {
    ring: RingRef<F>,
    generators: Vec<Polynomial<F>>,
    basis: OnceLock<Vec<Polynomial<F>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            basis,
        }
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &RingRef<F>, generators: Vec<Polynomial<F>>) -> Result<Self> {
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceLock::new(),
        })
    }

    pub fn zero(ring: &RingRef<F>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            basis: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &[Polynomial<F>] {
        self.basis
            .get_or_init(|| buchberger(&self.ring, &self.generators))
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(reduce(f, self.groebner_basis()))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis()
            .iter()
            .any(|g| g.leading_monomial().is_some_and(|m| m.is_one()))
    }

    /// Same ideal, compared through reduced bases.
    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner_basis() == other.groebner_basis())
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.groebner_basis()
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    /// True iff the leading-term ideal contains a pure power of every variable.
    pub fn is_zero_dimensional(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        let mut seen = vec![false; self.ring.nvars()];
        for m in self.leading_monomials() {
            if let Some(i) = m.pure_power_var() {
                seen[i] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Standard monomials of weighted degree `d`.
    pub fn component_monomials(&self, d: u64) -> Result<Vec<Monomial>> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous {
                what: "modulus".into(),
            });
        }
        let lead = self.leading_monomials();
        Ok(self
            .ring
            .monomials_of_degree(d)
            .into_iter()
            .filter(|m| !lead.iter().any(|l| l.divides(m)))
            .collect())
    }
}

pub fn ideal_membership<F: Field>(f: &Polynomial<F>, ideal: &Ideal<F>) -> Result<bool> {
    ideal.contains(f)
}

pub fn ideal_equal<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<bool> {
    a.equals(b)
}

pub fn is_zero_dimensional<F: Field>(ideal: &Ideal<F>) -> bool {
    ideal.is_zero_dimensional()
}

/// Standard monomials of degree `d` of `ring / modulus`.
pub fn component_monomials<F: Field>(
    ring: &RingRef<F>,
    modulus: &Ideal<F>,
    d: u64,
) -> Result<Vec<Monomial>> {
    if !same_ring(ring, modulus.ring()) {
        return Err(Error::RingMismatch);
    }
    modulus.component_monomials(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, RationalField};
    use crate::poly::PolyRing;

    fn setup() -> (RingRef<Rational>, Polynomial<Rational>, Polynomial<Rational>) {
        let r = PolyRing::new([("x", 1), ("y", 1)], RationalField).unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        (r, x, y)
    }

    #[test]
    fn principal_monomial_ideal() {
        let (r, x, _) = setup();
        let i = Ideal::new(&r, vec![&x * &x]).unwrap();
        assert_eq!(i.groebner_basis(), &[&x * &x]);
        assert!(groebner_basis::<Rational>(&[]).unwrap().is_empty());
    }

    #[test]
    fn normal_form_examples() {
        let (r, x, y) = setup();
        let x2 = &x * &x;
        let basis = vec![x2.clone()];
        assert!(normal_form(&x2, &basis).unwrap().is_zero());
        let f = &(&x2 * &y) + &y;
        assert_eq!(normal_form(&f, &basis).unwrap(), y);
        let other = PolyRing::<Rational>::new([("x", 1)], RationalField).unwrap();
        let z = Polynomial::var(&other, 0);
        assert_eq!(normal_form(&z, &basis), Err(Error::RingMismatch));
        let _ = r;
    }

    #[test]
    fn membership_and_equality() {
        let (r, x, y) = setup();
        let x2 = Ideal::new(&r, vec![&x * &x]).unwrap();
        assert!(x2.contains(&x.pow(3)).unwrap());
        assert!(!x2.contains(&y).unwrap());
        let a = Ideal::new(&r, vec![x.clone()]).unwrap();
        let b = Ideal::new(&r, vec![x.clone(), &x * &x]).unwrap();
        assert!(a.equals(&b).unwrap());
        assert!(!a.equals(&x2).unwrap());
    }

    #[test]
    fn zero_dimensionality() {
        let (r, x, y) = setup();
        assert!(Ideal::new(&r, vec![&x * &x, y.clone()]).unwrap().is_zero_dimensional());
        let x2 = Ideal::new(&r, vec![&x * &x]).unwrap();
        assert!(!x2.is_zero_dimensional());
        let sum = x2.sum(&Ideal::new(&r, vec![y]).unwrap()).unwrap();
        assert!(sum.is_zero_dimensional());
        assert_eq!(sum.component_monomials(1).unwrap().len(), 1);
        assert_eq!(sum.component_monomials(2).unwrap().len(), 0);
    }

    #[test]
    fn component_monomials_of_x2() {
        let (r, x, _) = setup();
        let x2 = Ideal::new(&r, vec![&x * &x]).unwrap();
        let m2 = component_monomials(&r, &x2, 2).unwrap();
        let shown: Vec<String> = m2
            .iter()
            .map(|m| Polynomial::term(&r, m.clone(), Rational::one(&RationalField)).to_string())
            .collect();
        assert_eq!(shown, vec!["y^2", "x*y"]);
        assert_eq!(component_monomials(&r, &x2, 0).unwrap(), vec![r.unit_monomial()]);
        assert_eq!(
            component_monomials(&r, &Ideal::zero(&r), 0).unwrap(),
            vec![r.unit_monomial()]
        );
    }

    #[test]
    fn inhomogeneous_modulus_is_rejected() {
        let (r, x, y) = setup();
        let i = Ideal::new(&r, vec![&(&x * &x) + &y]).unwrap();
        assert!(matches!(
            i.component_monomials(1),
            Err(Error::NotHomogeneous { .. })
        ));
    }

    #[test]
    fn unit_ideal_collapses() {
        let (r, x, _) = setup();
        let one = Polynomial::one(&r);
        let i = Ideal::new(&r, vec![&x - &one, x.clone()]).unwrap();
        assert!(i.is_unit());
        assert_eq!(i.groebner_basis(), &[one]);
    }
}
