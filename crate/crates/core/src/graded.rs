//! Graded presentations, shift types, Hilbert series and Hom degree bookkeeping.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Fp, PrimeField, Rational, RationalField};
use crate::groebner::Ideal;
use crate::parse::SparsePoly;
use crate::poly::{Monomial, PolyRing, Polynomial, RingRef};

/// Base field declared by a presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum BaseField {
    #[default]
    Rational,
    Prime(PrimeField),
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rational => write!(f, "Q"),
            BaseField::Prime(p) => write!(f, "Fp:{}", p.modulus()),
        }
    }
}

/// Something wrong with a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NonPositiveDegree { variable: String, degree: i64 },
    DuplicateVariable { variable: String },
    InhomogeneousRelation { index: usize, relation: String },
    NormalizationNotAVariable { variable: String },
    RelationArity { index: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonPositiveDegree { variable, degree } => {
                write!(f, "variable {variable} has non-positive degree {degree}")
            }
            Violation::DuplicateVariable { variable } => {
                write!(f, "variable {variable} is declared twice")
            }
            Violation::InhomogeneousRelation { index, relation } => {
                write!(f, "relation {} ({relation}) is not homogeneous", index + 1)
            }
            Violation::NormalizationNotAVariable { variable } => {
                write!(f, "normalization variable {variable} is not declared")
            }
            Violation::RelationArity { index } => {
                write!(f, "relation {} uses the wrong number of variables", index + 1)
            }
        }
    }
}

/// Presentation `k[vars] / (relations)` with designated normalization
/// variables `S = k[y_1..y_n]`; the remaining variables are the algebra
/// generators `z_1..z_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    names: Vec<String>,
    degrees: Vec<i64>,
    relations: Vec<SparsePoly>,
    normalization: Vec<String>,
    field: BaseField,
}

impl GradedAlgebra {
    pub fn new(
        vars: &[(&str, i64)],
        relations: Vec<SparsePoly>,
        normalization: &[&str],
    ) -> Self {
        GradedAlgebra {
            names: vars.iter().map(|(n, _)| n.to_string()).collect(),
            degrees: vars.iter().map(|&(_, d)| d).collect(),
            relations,
            normalization: normalization.iter().map(|s| s.to_string()).collect(),
            field: BaseField::Rational,
        }
    }

    /// Parses each relation with [`crate::parse::parse_polynomial`].
    pub fn from_strings(
        vars: &[(&str, i64)],
        relations: &[&str],
        normalization: &[&str],
    ) -> Result<Self> {
        let names: Vec<String> = vars.iter().map(|(n, _)| n.to_string()).collect();
        let rels = relations
            .iter()
            .map(|r| {
                crate::parse::parse_polynomial(r, &names)
                    .map_err(|e| Error::InvalidArgument(format!("relation '{r}': {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(vars, rels, normalization))
    }

    pub fn with_field(mut self, field: BaseField) -> Self {
        self.field = field;
        self
    }

    pub fn field(&self) -> BaseField {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn relations(&self) -> &[SparsePoly] {
        &self.relations
    }

    pub fn normalization_names(&self) -> &[String] {
        &self.normalization
    }

    /// Indices of the normalization variables, in declaration order.
    pub fn normalization_indices(&self) -> Vec<usize> {
        (0..self.names.len())
            .filter(|&i| self.normalization.contains(&self.names[i]))
            .collect()
    }

    /// Indices of the algebra generators `z_i`, in declaration order.
    pub fn generator_indices(&self) -> Vec<usize> {
        (0..self.names.len())
            .filter(|&i| !self.normalization.contains(&self.names[i]))
            .collect()
    }

    pub fn generator_degrees(&self) -> Vec<u32> {
        self.generator_indices()
            .into_iter()
            .map(|i| self.degrees[i] as u32)
            .collect()
    }

    pub fn normalization_degrees(&self) -> Vec<u32> {
        self.normalization_indices()
            .into_iter()
            .map(|i| self.degrees[i] as u32)
            .collect()
    }

    /// Lists every violation; empty means the presentation is valid.
    pub fn validate_presentation(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, (n, &d)) in self.names.iter().zip(&self.degrees).enumerate() {
            if d < 1 {
                out.push(Violation::NonPositiveDegree {
                    variable: n.clone(),
                    degree: d,
                });
            }
            if self.names[..i].contains(n) {
                out.push(Violation::DuplicateVariable { variable: n.clone() });
            }
        }
        for n in &self.normalization {
            if !self.names.contains(n) {
                out.push(Violation::NormalizationNotAVariable { variable: n.clone() });
            }
        }
        for (i, r) in self.relations.iter().enumerate() {
            if r.terms.keys().any(|e| e.len() != self.names.len()) {
                out.push(Violation::RelationArity { index: i });
                continue;
            }
            let degs = r.term_degrees(&self.degrees);
            if degs.windows(2).any(|w| w[0] != w[1]) {
                out.push(Violation::InhomogeneousRelation {
                    index: i,
                    relation: r.render(&self.names),
                });
            }
        }
        out
    }

    fn check_valid(&self) -> Result<()> {
        let v = self.validate_presentation();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidPresentation(v))
        }
    }

    /// Polynomial ring on all variables.
    pub fn full_ring<F: Field>(&self, field: F::Desc) -> Result<RingRef<F>> {
        self.check_valid()?;
        PolyRing::new(
            self.names
                .iter()
                .cloned()
                .zip(self.degrees.iter().map(|&d| d as u32)),
            field,
        )
    }

    /// The normalization ring `S`.
    pub fn normalization_ring<F: Field>(&self, field: F::Desc) -> Result<RingRef<F>> {
        self.check_valid()?;
        PolyRing::new(
            self.normalization_indices()
                .into_iter()
                .map(|i| (self.names[i].clone(), self.degrees[i] as u32)),
            field,
        )
    }

    pub fn relation_polynomials<F: Field>(&self, ring: &RingRef<F>) -> Result<Vec<Polynomial<F>>> {
        let desc = ring.field().clone();
        self.relations
            .iter()
            .map(|r| {
                let mut p = Polynomial::zero(ring);
                for (e, c) in &r.terms {
                    let c = F::from_rational(&desc, c)
                        .ok_or_else(|| Error::CoefficientNotInField(c.to_string()))?;
                    p.add_term(ring.monomial(e.clone()), c);
                }
                Ok(p)
            })
            .collect()
    }

    pub fn relation_ideal<F: Field>(&self, ring: &RingRef<F>) -> Result<Ideal<F>> {
        Ideal::new(ring, self.relation_polynomials(ring)?)
    }

    /// Module-finiteness over `S`: `R / (y_1..y_n) R` is finite dimensional.
    pub fn verify_normalization(&self) -> Result<bool> {
        let ring = self.full_ring::<Rational>(RationalField)?;
        let mut gens = self.relation_polynomials(&ring)?;
        gens.extend(
            self.normalization_indices()
                .into_iter()
                .map(|i| Polynomial::var(&ring, i)),
        );
        Ok(Ideal::new(&ring, gens)?.is_zero_dimensional())
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        let ring = self.full_ring::<Rational>(RationalField)?;
        let ideal = self.relation_ideal(&ring)?;
        let lead = ideal.leading_monomials();
        let exps: Vec<Vec<u32>> = lead.iter().map(|m| m.exps().to_vec()).collect();
        let weights: Vec<u32> = ring.degrees().to_vec();
        let num = monomial_ideal_numerator(&exps, &weights);
        Ok(HilbertSeries {
            numerator: num.into_iter().enumerate().filter(|(_, c)| *c != 0).map(|(i, c)| (i as i64, c)).collect(),
            denominator: weights,
        })
    }

    /// `dim_k R_d` via standard monomials over the rationals.
    pub fn component_dimension(&self, d: u64) -> Result<usize> {
        let ring = self.full_ring::<Rational>(RationalField)?;
        Ok(self.relation_ideal(&ring)?.component_monomials(d)?.len())
    }

    /// Checks the relations at the prime field, for presentations declared over `F_p`.
    pub fn relations_mod_p(&self, p: PrimeField) -> Result<Vec<Polynomial<Fp>>> {
        let ring = self.full_ring::<Fp>(p)?;
        self.relation_polynomials(&ring)
    }
}

// Numerator of the Hilbert series of k[x] / (monomials), as coefficients of t^i.
// N(I + (m)) = N(I) - t^deg(m) N(I : m).
fn monomial_ideal_numerator(gens: &[Vec<u32>], weights: &[u32]) -> Vec<i64> {
    let gens = minimalize(gens);
    let Some((last, rest)) = gens.split_last() else {
        return vec![1];
    };
    let a = monomial_ideal_numerator(rest, weights);
    let colon: Vec<Vec<u32>> = rest
        .iter()
        .map(|g| g.iter().zip(last).map(|(x, y)| x.saturating_sub(*y)).collect())
        .collect();
    let b = monomial_ideal_numerator(&colon, weights);
    let shift: usize = last.iter().zip(weights).map(|(&e, &w)| (e * w) as usize).sum();
    let mut out = a;
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, 0);
    }
    for (i, c) in b.into_iter().enumerate() {
        out[i + shift] -= c;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

fn minimalize(gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let divides = |a: &Vec<u32>, b: &Vec<u32>| a.iter().zip(b).all(|(x, y)| x <= y);
    let mut out: Vec<Vec<u32>> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let redundant = gens
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && divides(h, g) && (h != g || j < i));
        if !redundant {
            out.push(g.clone());
        }
    }
    out
}

/// Graded vector space `V = ⊕ k(-l_q)`, stored as the sorted shifts `l_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ShiftType {
    shifts: Vec<i64>,
}

impl ShiftType {
    pub fn new(shifts: impl IntoIterator<Item = i64>) -> Self {
        let mut shifts: Vec<i64> = shifts.into_iter().collect();
        shifts.sort();
        ShiftType { shifts }
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn dim(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shifts.is_empty()
    }

    /// Every shift increased by `s`.
    pub fn shifted(&self, s: i64) -> ShiftType {
        ShiftType {
            shifts: self.shifts.iter().map(|l| l + s).collect(),
        }
    }
}

impl fmt::Display for ShiftType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.shifts.iter().map(|l| l.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// Required S-degree of entry `(p, q)` of a degree-`e` map `S⊗V -> S⊗W`;
/// `|W|` rows by `|V|` columns. Negative entries force a zero entry.
pub fn hom_entry_degrees(v: &ShiftType, w: &ShiftType, e: i64) -> Vec<Vec<i64>> {
    w.shifts
        .iter()
        .map(|lp| v.shifts.iter().map(|lq| e + lq - lp).collect())
        .collect()
}

/// `numerator / ∏ (1 - t^e)`, kept unreduced. The numerator is a Laurent
/// polynomial so negatively shifted modules are representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    /// exponent -> nonzero coefficient
    numerator: BTreeMap<i64, i64>,
    denominator: Vec<u32>,
}

impl HilbertSeries {
    pub fn new(numerator: impl IntoIterator<Item = (i64, i64)>, denominator: Vec<u32>) -> Self {
        let mut num = BTreeMap::new();
        for (e, c) in numerator {
            *num.entry(e).or_insert(0) += c;
        }
        num.retain(|_, c| *c != 0);
        let mut denominator = denominator;
        denominator.sort();
        HilbertSeries {
            numerator: num,
            denominator,
        }
    }

    pub fn numerator(&self) -> &BTreeMap<i64, i64> {
        &self.numerator
    }

    pub fn denominator(&self) -> &[u32] {
        &self.denominator
    }

    /// Coefficient of `t^i`.
    pub fn coefficient(&self, i: i64) -> i64 {
        let lo = self.numerator.keys().next().copied().unwrap_or(0);
        if i < lo {
            return 0;
        }
        let series = self.expand_range(lo, i);
        *series.last().unwrap()
    }

    /// Coefficients of `t^lo, ..., t^hi`.
    pub fn expand_range(&self, lo: i64, hi: i64) -> Vec<i64> {
        if hi < lo {
            return Vec::new();
        }
        let start = lo.min(self.numerator.keys().next().copied().unwrap_or(lo));
        let len = (hi - start + 1) as usize;
        let mut c = vec![0i64; len];
        for (&e, &v) in &self.numerator {
            if e <= hi {
                c[(e - start) as usize] += v;
            }
        }
        for &e in &self.denominator {
            let e = e as usize;
            for i in e..len {
                c[i] += c[i - e];
            }
        }
        c[(lo - start) as usize..].to_vec()
    }

    /// Coefficients of `t^0, ..., t^max_degree`.
    pub fn expand(&self, max_degree: u64) -> Vec<i64> {
        self.expand_range(0, max_degree as i64)
    }

    /// Equality of the rational functions: `N1 * D2 == N2 * D1`.
    pub fn same_series(&self, other: &HilbertSeries) -> bool {
        let lhs = mul_by_denominator(&self.numerator, &other.denominator);
        let rhs = mul_by_denominator(&other.numerator, &self.denominator);
        lhs == rhs
    }

    /// Polynomial `P` with `P(i) = dim M_i` for all large `i`.
    pub fn hilbert_polynomial(&self) -> Result<HilbertPolynomial> {
        let lo = self.numerator.keys().next().copied().unwrap_or(0);
        let mut num: Vec<i64> = match self.numerator.keys().next_back() {
            None => return Ok(HilbertPolynomial { coeffs: Vec::new() }),
            Some(&hi) => (lo..=hi)
                .map(|e| self.numerator.get(&e).copied().unwrap_or(0))
                .collect(),
        };
        // (1 - t^e) = (1 - t)(1 + t + ... + t^(e-1)); the second factors must divide N
        for &e in &self.denominator {
            if e > 1 {
                num = exact_divide_by_geometric(&num, e as usize)
                    .ok_or(Error::NotEventuallyPolynomial)?;
            }
        }
        let n = self.denominator.len();
        let mut coeffs: Vec<Rational> = Vec::new();
        if n == 0 {
            return Ok(HilbertPolynomial { coeffs });
        }
        // coefficient of t^i in t^k / (1-t)^n is C(i - k + n - 1, n - 1)
        let fact: BigInt = (1..n as i64).map(BigInt::from).product();
        for (off, &c) in num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let k = lo + off as i64;
            let mut poly = vec![<Rational as One>::one()];
            for j in 1..n as i64 {
                // multiply by (i - k + j)
                let root = Rational::from_integer(BigInt::from(j - k));
                let mut next = vec![<Rational as Zero>::zero(); poly.len() + 1];
                for (d, a) in poly.iter().enumerate() {
                    next[d + 1] += a;
                    next[d] += a * &root;
                }
                poly = next;
            }
            let scale = Rational::new(BigInt::from(c), fact.clone());
            if coeffs.len() < poly.len() {
                coeffs.resize(poly.len(), <Rational as Zero>::zero());
            }
            for (d, a) in poly.into_iter().enumerate() {
                coeffs[d] += a * &scale;
            }
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Ok(HilbertPolynomial { coeffs })
    }
}

fn mul_by_denominator(num: &BTreeMap<i64, i64>, den: &[u32]) -> BTreeMap<i64, i64> {
    let mut cur = num.clone();
    for &e in den {
        let mut next = cur.clone();
        for (&k, &v) in &cur {
            *next.entry(k + e as i64).or_insert(0) -= v;
        }
        next.retain(|_, v| *v != 0);
        cur = next;
    }
    cur
}

fn exact_divide_by_geometric(num: &[i64], e: usize) -> Option<Vec<i64>> {
    // divisor 1 + t + ... + t^(e-1), monic of degree e-1
    let d = e - 1;
    if num.len() <= d {
        return num.iter().all(|&c| c == 0).then(Vec::new);
    }
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - d];
    for i in (0..quot.len()).rev() {
        let c = rem[i + d];
        quot[i] = c;
        for j in 0..e {
            rem[i + j] -= c;
        }
    }
    rem.iter().all(|&c| c == 0).then_some(quot)
}

/// Hilbert polynomial with rational coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coeffs: Vec<Rational>,
}

impl HilbertPolynomial {
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, i: i64) -> Rational {
        let x = Rational::from_integer(BigInt::from(i));
        self.coeffs
            .iter()
            .rev()
            .fold(<Rational as Zero>::zero(), |acc, c| acc * &x + c)
    }

    /// The constant value, when the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(<Rational as Zero>::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = PolyRing::<Rational>::new([("i", 1)], RationalField).unwrap();
        let p = Polynomial::from_terms(
            &ring,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| (ring.monomial(vec![d as u32]), c.clone())),
        );
        write!(f, "{p}")
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        if self.numerator.is_empty() {
            num.push('0');
        }
        for (i, (&e, &c)) in self.numerator.iter().enumerate() {
            let sign = match (i, c < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let mag = c.abs();
            let t = match e {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{e}"),
            };
            let body = match (t.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => t,
                (false, _) => format!("{mag}*{t}"),
            };
            num += sign;
            num += &body;
        }
        if self.denominator.is_empty() {
            return write!(f, "{num}");
        }
        if self.numerator.len() > 1 {
            num = format!("({num})");
        }
        let den: Vec<String> = self
            .denominator
            .iter()
            .map(|&e| if e == 1 { "(1 - t)".into() } else { format!("(1 - t^{e})") })
            .collect();
        if den.len() > 1 {
            write!(f, "{num} / ({})", den.join(""))
        } else {
            write!(f, "{num} / {}", den[0])
        }
    }
}

/// Series of `S ⊗ V`: `(Σ t^{l_q}) / ∏ (1 - t^{e_j})`.
pub fn hilbert_series_of_type(s_degrees: &[u32], v: &ShiftType) -> HilbertSeries {
    HilbertSeries::new(v.shifts().iter().map(|&l| (l, 1)), s_degrees.to_vec())
}

pub(crate) fn monomials_of_s<F: Field>(s_ring: &RingRef<F>, degree: i64) -> Vec<Monomial> {
    if degree < 0 {
        Vec::new()
    } else {
        s_ring.monomials_of_degree(degree as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x2() -> GradedAlgebra {
        GradedAlgebra::from_strings(&[("x", 1), ("y", 1)], &["x^2"], &["y"]).unwrap()
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn validation_examples() {
        assert!(x2().validate_presentation().is_empty());
        let bad = GradedAlgebra::from_strings(&[("x", 1), ("y", 1)], &["x^2 + y"], &["y"]).unwrap();
        assert!(matches!(
            bad.validate_presentation()[..],
            [Violation::InhomogeneousRelation { index: 0, .. }]
        ));
        let zero = GradedAlgebra::from_strings(&[("x", 0), ("y", 1)], &[], &["y"]).unwrap();
        assert!(matches!(
            zero.validate_presentation()[..],
            [Violation::NonPositiveDegree { degree: 0, .. }]
        ));
        let missing = GradedAlgebra::from_strings(&[("x", 1)], &[], &["w"]).unwrap();
        assert_eq!(missing.validate_presentation().len(), 1);
    }

    #[test]
    fn normalization_examples() {
        assert!(x2().verify_normalization().unwrap());
        let no_s = GradedAlgebra::from_strings(&[("x", 1), ("y", 1)], &["x^2"], &[]).unwrap();
        assert!(!no_s.verify_normalization().unwrap());
        let ky = GradedAlgebra::from_strings(&[("y", 1)], &[], &["y"]).unwrap();
        assert!(ky.verify_normalization().unwrap());
    }

    #[test]
    fn hilbert_series_examples() {
        let h = x2().hilbert_series().unwrap();
        assert_eq!(h.expand(7), vec![1, 2, 2, 2, 2, 2, 2, 2]);
        let reduced = HilbertSeries::new([(0, 1), (1, 1)], vec![1]);
        assert!(h.same_series(&reduced));
        let ky = GradedAlgebra::from_strings(&[("y", 1)], &[], &["y"]).unwrap();
        assert!(ky.hilbert_series().unwrap().same_series(&HilbertSeries::new([(0, 1)], vec![1])));
        let free = GradedAlgebra::from_strings(&[("x", 1), ("y", 2)], &[], &["x", "y"]).unwrap();
        let hs = free.hilbert_series().unwrap();
        assert_eq!(hs, HilbertSeries::new([(0, 1)], vec![1, 2]));
        assert_eq!(hs.expand(5), vec![1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn hilbert_of_type_and_polynomial() {
        for n in 1..8 {
            let h = hilbert_series_of_type(&[1], &ShiftType::new([1, n]));
            let p = h.hilbert_polynomial().unwrap();
            assert_eq!(p.as_constant(), Some(int(2)), "n = {n}");
        }
        assert!(hilbert_series_of_type(&[1], &ShiftType::default()).expand(4).iter().all(|&c| c == 0));
        let one = hilbert_series_of_type(&[1], &ShiftType::new([0]));
        assert_eq!(one.hilbert_polynomial().unwrap().as_constant(), Some(int(1)));
        let h = x2().hilbert_series().unwrap();
        assert_eq!(h.hilbert_polynomial().unwrap().as_constant(), Some(int(2)));
    }

    #[test]
    fn hilbert_polynomial_of_plane_and_weighted_cases() {
        // k[x,y]: dim = i + 1
        let h = HilbertSeries::new([(0, 1)], vec![1, 1]);
        let p = h.hilbert_polynomial().unwrap();
        assert_eq!(p.coefficients(), &[int(1), int(1)]);
        // 1/(1-t^2) is periodic, not polynomial
        let per = HilbertSeries::new([(0, 1)], vec![2]);
        assert_eq!(per.hilbert_polynomial(), Err(Error::NotEventuallyPolynomial));
        // (1 + t)/(1 - t^2) = 1/(1 - t)
        let q = HilbertSeries::new([(0, 1), (1, 1)], vec![2]);
        assert_eq!(q.hilbert_polynomial().unwrap().as_constant(), Some(int(1)));
    }

    #[test]
    fn negative_shifts_expand() {
        let h = hilbert_series_of_type(&[1], &ShiftType::new([-2, 3]));
        assert_eq!(h.expand_range(-3, 4), vec![0, 1, 1, 1, 1, 1, 2, 2]);
        assert_eq!(h.coefficient(-2), 1);
        assert_eq!(h.hilbert_polynomial().unwrap().as_constant(), Some(int(2)));
    }

    #[test]
    fn hom_entry_degree_examples() {
        let v = ShiftType::new([0, 1]);
        assert_eq!(hom_entry_degrees(&v, &v, 1), vec![vec![1, 2], vec![0, 1]]);
        let w = ShiftType::new([1, 5]);
        assert_eq!(hom_entry_degrees(&w, &w, 1), vec![vec![1, 5], vec![-3, 1]]);
        let u = ShiftType::new([0, 2, 2, 7]);
        let d = hom_entry_degrees(&u, &u, 0);
        assert!((0..4).all(|i| d[i][i] == 0));
    }
}
