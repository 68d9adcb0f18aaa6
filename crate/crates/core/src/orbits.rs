//! Graded Hom components, isomorphism and indecomposability tests, the
//! conjugation action of `G_V` and finite-field orbit censuses.
//!
//! A degree-`e` map `S⊗V -> S⊗W` is a `|W| x |V|` matrix whose `(p, q)` entry
//! is homogeneous of degree `e + l_q(V) - l_p(W)`. It is a module map from
//! `μ` to `ν` iff `α μ(z_i) = ν(z_i) α` for every algebra generator.

use std::collections::{BTreeMap, HashMap};

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{hom_entry_degrees, monomials_of_s, GradedAlgebra, ShiftType};
use crate::groebner::Ideal;
use crate::linalg;
use crate::matrix::PolyMatrix;
use crate::poly::{same_ring, Monomial, PolyRing, Polynomial, RingRef};
use crate::rep::{build_defining_ideal, check_entry_degrees, parameterize, MatrixPoint};

/// Basis dimension up to which invertibility is decided by expanding the
/// generic determinant symbolically.
pub const SYMBOLIC_DET_MAX_DIM: usize = 6;
/// Random trials before falling back to the symbolic determinant.
pub const SAMPLE_TRIALS: usize = 64;
/// Default cap on enumerated candidate tuples.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 10_000_000;
/// Largest group enumerated element by element in a census.
pub const DEFAULT_GROUP_BUDGET: u128 = 100_000;
const SAMPLE_SEED: u64 = 0x5eed_0f15;

/// One free coefficient of a graded map: `monomial` in entry `(row, col)`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Slot {
    row: usize,
    col: usize,
    monomial: Monomial,
}

fn slots<F: Field>(s_ring: &RingRef<F>, v: &ShiftType, w: &ShiftType, e: i64) -> Vec<Slot> {
    let mut out = Vec::new();
    for (p, row) in hom_entry_degrees(v, w, e).iter().enumerate() {
        for (q, &deg) in row.iter().enumerate() {
            for m in monomials_of_s(s_ring, deg) {
                out.push(Slot {
                    row: p,
                    col: q,
                    monomial: m,
                });
            }
        }
    }
    out
}

fn slot_matrix<F: Field>(
    s_ring: &RingRef<F>,
    rows: usize,
    cols: usize,
    slots: &[Slot],
    coeffs: &[F],
) -> PolyMatrix<F> {
    let mut m = PolyMatrix::zero(s_ring, rows, cols);
    for (s, c) in slots.iter().zip(coeffs) {
        let mut e = m.get(s.row, s.col).clone();
        e.add_term(s.monomial.clone(), c.clone());
        m.set(s.row, s.col, e);
    }
    m
}

/// Flattens the coefficients of a list of matrices, keyed by position.
fn coefficient_map<F: Field>(mats: &[PolyMatrix<F>]) -> BTreeMap<(usize, usize, usize, Monomial), F> {
    let mut out = BTreeMap::new();
    for (i, m) in mats.iter().enumerate() {
        for ((p, q), e) in m.entries() {
            for (mono, c) in e.terms() {
                out.insert((i, p, q, mono.clone()), c.clone());
            }
        }
    }
    out
}

/// k-basis of `Hom(μ, ν)_e`.
#[derive(Clone, Debug)]
pub struct HomComponentBasis<F: Field> {
    degree: i64,
    source: ShiftType,
    target: ShiftType,
    basis: Vec<PolyMatrix<F>>,
}

impl<F: Field> HomComponentBasis<F> {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn basis(&self) -> &[PolyMatrix<F>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn source(&self) -> &ShiftType {
        &self.source
    }

    pub fn target(&self) -> &ShiftType {
        &self.target
    }

    /// `Σ c_i basis_i`.
    pub fn combination(&self, coeffs: &[F]) -> PolyMatrix<F> {
        assert_eq!(coeffs.len(), self.basis.len());
        let ring = self.basis[0].ring();
        let mut acc = PolyMatrix::zero(ring, self.target.dim(), self.source.dim());
        for (b, c) in self.basis.iter().zip(coeffs) {
            acc = acc.add(&b.scale(&Polynomial::constant(ring, c.clone())));
        }
        acc
    }

    /// Generic element `Σ c_i basis_i` over `k[c1..cm] ⊗ S`, returned with
    /// that ring; the `c` variables come first.
    pub fn generic_element(&self, s_ring: &RingRef<F>) -> (RingRef<F>, PolyMatrix<F>) {
        let m = self.basis.len();
        let ring = PolyRing::<F>::new(
            (1..=m)
                .map(|i| (format!("c{i}"), 1))
                .chain(s_ring.names().iter().cloned().zip(s_ring.degrees().iter().copied())),
            s_ring.field().clone(),
        )
        .expect("positive degrees");
        let s_map: Vec<usize> = (0..s_ring.nvars()).map(|j| m + j).collect();
        let mut acc = PolyMatrix::zero(&ring, self.target.dim(), self.source.dim());
        for (i, b) in self.basis.iter().enumerate() {
            acc = acc.add(&b.rebase(&ring, &s_map).scale(&Polynomial::var(&ring, i)));
        }
        (ring, acc)
    }
}

/// Basis of the degree-`e` module maps from `mu` to `nu`.
pub fn hom_component<F: Field>(
    mu: &MatrixPoint<F>,
    nu: &MatrixPoint<F>,
    e: i64,
) -> Result<HomComponentBasis<F>> {
    if !same_ring(mu.s_ring(), nu.s_ring()) || mu.generator_degrees() != nu.generator_degrees() {
        return Err(Error::TypeMismatch);
    }
    let s_ring = mu.s_ring();
    let desc = s_ring.field().clone();
    let (v, w) = (mu.shifts(), nu.shifts());
    let slots = slots(s_ring, v, w, e);
    let k = slots.len();

    // column k of the system is the image of the k-th unit map
    let mut rows: BTreeMap<(usize, usize, usize, Monomial), Vec<F>> = BTreeMap::new();
    for (idx, _) in slots.iter().enumerate() {
        let mut unit = vec![F::zero(&desc); k];
        unit[idx] = F::one(&desc);
        let a = slot_matrix(s_ring, w.dim(), v.dim(), &slots, &unit);
        let images: Vec<PolyMatrix<F>> = mu
            .matrices()
            .iter()
            .zip(nu.matrices())
            .map(|(m, n)| a.mul(m).sub(&n.mul(&a)))
            .collect();
        for (key, c) in coefficient_map(&images) {
            rows.entry(key).or_insert_with(|| vec![F::zero(&desc); k])[idx] = c;
        }
    }
    let system: Vec<Vec<F>> = rows.into_values().collect();
    let kernel = linalg::kernel(&system, k, &desc);
    let basis = kernel
        .iter()
        .map(|vec| slot_matrix(s_ring, w.dim(), v.dim(), &slots, vec))
        .collect();
    Ok(HomComponentBasis {
        degree: e,
        source: v.clone(),
        target: w.clone(),
        basis,
    })
}

/// Checks `α μ(z_i) = ν(z_i) α` for every generator.
pub fn intertwines<F: Field>(alpha: &PolyMatrix<F>, mu: &MatrixPoint<F>, nu: &MatrixPoint<F>) -> bool {
    mu.matrices()
        .iter()
        .zip(nu.matrices())
        .all(|(m, n)| alpha.mul(m) == n.mul(alpha))
}

/// How an isomorphism decision was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoEvidence<F: Field> {
    /// The generic determinant is a nonzero polynomial.
    SymbolicNonzero,
    /// The generic determinant is the zero polynomial.
    SymbolicZero,
    /// An invertible module map was found by sampling.
    Witness(PolyMatrix<F>),
    /// The degree-0 hom space is zero.
    NoMaps,
    /// Both modules are zero.
    Empty,
}

impl<F: Field> IsoEvidence<F> {
    pub fn is_isomorphic(&self) -> bool {
        matches!(
            self,
            IsoEvidence::SymbolicNonzero | IsoEvidence::Witness(_) | IsoEvidence::Empty
        )
    }
}

/// Decides isomorphism over the algebraic closure of the base field and
/// reports the evidence.
pub fn isomorphism_evidence<F: Field>(mu: &MatrixPoint<F>, nu: &MatrixPoint<F>) -> Result<IsoEvidence<F>> {
    if mu.shifts() != nu.shifts() {
        return Err(Error::TypeMismatch);
    }
    if mu.dim() == 0 {
        return Ok(IsoEvidence::Empty);
    }
    let hom = hom_component(mu, nu, 0)?;
    if hom.dim() == 0 {
        return Ok(IsoEvidence::NoMaps);
    }
    let desc = mu.s_ring().field().clone();
    let d = mu.dim() as u64;
    let sampling_field_ok = F::size(&desc).map_or(true, |q| q >= 2 * d);
    if hom.dim() > SYMBOLIC_DET_MAX_DIM && sampling_field_ok {
        let mut rng = StdRng::seed_from_u64(SAMPLE_SEED);
        let bound = (1u64 << 20).max(4 * d);
        for _ in 0..SAMPLE_TRIALS {
            let c: Vec<F> = (0..hom.dim()).map(|_| F::random(&desc, &mut rng, bound)).collect();
            let alpha = hom.combination(&c);
            if !alpha.det().is_zero() {
                return Ok(IsoEvidence::Witness(alpha));
            }
        }
    }
    let (_, generic) = hom.generic_element(mu.s_ring());
    Ok(if generic.det().is_zero() {
        IsoEvidence::SymbolicZero
    } else {
        IsoEvidence::SymbolicNonzero
    })
}

/// True iff `Hom(μ, ν)_0` contains an invertible matrix over the algebraic
/// closure of the base field.
pub fn are_isomorphic<F: Field>(mu: &MatrixPoint<F>, nu: &MatrixPoint<F>) -> Result<bool> {
    Ok(isomorphism_evidence(mu, nu)?.is_isomorphic())
}

/// Isomorphism realized by a matrix with entries in a finite base field:
/// searches all of `Hom(μ, ν)_0(F_q)`.
pub fn rational_isomorphism<F: Field>(
    mu: &MatrixPoint<F>,
    nu: &MatrixPoint<F>,
    budget: u128,
) -> Result<Option<PolyMatrix<F>>> {
    if mu.shifts() != nu.shifts() {
        return Err(Error::TypeMismatch);
    }
    let desc = mu.s_ring().field().clone();
    let elems = F::elements(&desc)
        .ok_or_else(|| Error::InvalidArgument("rational isomorphism search needs a finite field".into()))?;
    if mu.dim() == 0 {
        return Ok(Some(PolyMatrix::zero(mu.s_ring(), 0, 0)));
    }
    let hom = hom_component(mu, nu, 0)?;
    let required = (elems.len() as u128).saturating_pow(hom.dim() as u32);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let mut found = None;
    for_each_tuple(&elems, hom.dim(), |c| {
        let alpha = hom.combination(c);
        if !alpha.det().is_zero() {
            found = Some(alpha);
            return false;
        }
        true
    });
    Ok(found)
}

// Lexicographic walk over elems^n; the callback returns false to stop.
fn for_each_tuple<F: Field>(elems: &[F], n: usize, mut f: impl FnMut(&[F]) -> bool) {
    let mut idx = vec![0usize; n];
    let mut cur: Vec<F> = vec![elems[0].clone(); n];
    loop {
        if !f(&cur) {
            return;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < elems.len() {
                cur[i] = elems[idx[i]].clone();
                break;
            }
            idx[i] = 0;
            cur[i] = elems[0].clone();
        }
    }
}

/// True iff the only idempotents of `End(μ)_0` are `0` and the identity,
/// over the algebraic closure of the base field.
pub fn is_indecomposable<F: Field>(mu: &MatrixPoint<F>) -> Result<bool> {
    if mu.dim() == 0 {
        return Ok(false);
    }
    let s_ring = mu.s_ring();
    let desc = s_ring.field().clone();
    let end = hom_component(mu, mu, 0)?;
    let m = end.dim();

    // coordinates of the identity in the basis
    let ident = PolyMatrix::identity(s_ring, mu.dim());
    let basis_coeffs: Vec<BTreeMap<_, F>> = end
        .basis()
        .iter()
        .map(|b| coefficient_map(std::slice::from_ref(b)))
        .collect();
    let target = coefficient_map(std::slice::from_ref(&ident));
    let mut keys: Vec<_> = target.keys().cloned().collect();
    for bc in &basis_coeffs {
        keys.extend(bc.keys().cloned());
    }
    keys.sort();
    keys.dedup();
    let zero = F::zero(&desc);
    let rows: Vec<Vec<F>> = keys
        .iter()
        .map(|k| basis_coeffs.iter().map(|bc| bc.get(k).cloned().unwrap_or_else(|| zero.clone())).collect())
        .collect();
    let rhs: Vec<F> = keys.iter().map(|k| target.get(k).cloned().unwrap_or_else(|| zero.clone())).collect();
    let iota = linalg::solve(&rows, &rhs, m, &desc)
        .ok_or_else(|| Error::Invariant("identity is not an endomorphism".into()))?;

    // idempotency equations e*e = e for the generic endomorphism
    let (_, generic) = end.generic_element(s_ring);
    let eq = generic.mul(&generic).sub(&generic);
    let c_ring = PolyRing::<F>::new(
        (1..=m).map(|i| (format!("c{i}"), 1)).chain(std::iter::once(("t".to_string(), 1))),
        desc.clone(),
    )?;
    let mut gens: Vec<Polynomial<F>> = Vec::new();
    for (_, entry) in eq.entries() {
        let mut by_s: BTreeMap<Vec<u32>, Polynomial<F>> = BTreeMap::new();
        for (mono, c) in entry.terms() {
            let (c_part, s_part) = mono.exps().split_at(m);
            let mut e = c_part.to_vec();
            e.push(0);
            by_s.entry(s_part.to_vec())
                .or_insert_with(|| Polynomial::zero(&c_ring))
                .add_term(c_ring.monomial(e), c.clone());
        }
        gens.extend(by_s.into_values().filter(|p| !p.is_zero()));
    }
    let idem = Ideal::new(&c_ring, gens)?;

    // vanishing ideal of {0, iota}
    let j = iota
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::Invariant("identity has zero coordinates".into()))?;
    let c = |i: usize| Polynomial::var(&c_ring, i);
    let mut points_ideal = vec![&c(j) * &(&c(j) - &Polynomial::constant(&c_ring, iota[j].clone()))];
    let inv_j = iota[j].inv().unwrap();
    for i in (0..m).filter(|&i| i != j) {
        let ratio = iota[i].clone() * inv_j.clone();
        points_ideal.push(&c(i) - &c(j).scale(&ratio));
    }

    // idempotency ideal is contained in the ideal of the two points
    let at_zero = vec![F::zero(&desc); m + 1];
    let mut at_iota = iota.clone();
    at_iota.push(F::zero(&desc));
    for g in idem.generators() {
        if !g.eval(&at_zero).is_zero() || !g.eval(&at_iota).is_zero() {
            return Err(Error::Invariant("0 or identity fails idempotency".into()));
        }
    }

    // each point-ideal generator lies in the radical: 1 in idem + (1 - t f)
    let t = Polynomial::var(&c_ring, m);
    let one = Polynomial::one(&c_ring);
    for f in &points_ideal {
        let rab = Ideal::new(&c_ring, vec![&one - &(&t * f)])?;
        if !idem.sum(&rab)?.is_unit() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Invertible degree-0 endomorphism of `S ⊗ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement<F: Field> {
    shifts: ShiftType,
    matrix: PolyMatrix<F>,
    inverse: PolyMatrix<F>,
}

impl<F: Field> GroupElement<F> {
    pub fn new(shifts: &ShiftType, matrix: PolyMatrix<F>) -> Result<Self> {
        let d = shifts.dim();
        if matrix.rows() != d || matrix.cols() != d {
            return Err(Error::InvalidArgument(format!("group element must be {d}x{d}")));
        }
        check_entry_degrees(0, &matrix, &hom_entry_degrees(shifts, shifts, 0))?;
        let det = matrix
            .det()
            .constant_value()
            .ok_or_else(|| Error::Invariant("degree-0 determinant is not a scalar".into()))?;
        let inv = det.inv().ok_or(Error::NotInvertible)?;
        let ring = matrix.ring().clone();
        let inverse = matrix.adjugate().scale(&Polynomial::constant(&ring, inv));
        Ok(GroupElement {
            shifts: shifts.clone(),
            matrix,
            inverse,
        })
    }

    pub fn identity(s_ring: &RingRef<F>, shifts: &ShiftType) -> Self {
        let m = PolyMatrix::identity(s_ring, shifts.dim());
        GroupElement {
            shifts: shifts.clone(),
            matrix: m.clone(),
            inverse: m,
        }
    }

    pub fn matrix(&self) -> &PolyMatrix<F> {
        &self.matrix
    }

    pub fn inverse(&self) -> &PolyMatrix<F> {
        &self.inverse
    }

    pub fn shifts(&self) -> &ShiftType {
        &self.shifts
    }
}

/// `g μ(z_i) g^{-1}` for every generator.
pub fn conjugate<F: Field>(pt: &MatrixPoint<F>, g: &GroupElement<F>) -> Result<MatrixPoint<F>> {
    if pt.shifts() != g.shifts() {
        return Err(Error::TypeMismatch);
    }
    if !same_ring(pt.s_ring(), g.matrix.ring()) {
        return Err(Error::RingMismatch);
    }
    let mats = pt
        .matrices()
        .iter()
        .map(|m| g.matrix.mul(m).mul(&g.inverse))
        .collect();
    MatrixPoint::new(
        pt.s_ring(),
        pt.shifts().clone(),
        pt.generator_degrees().to_vec(),
        mats,
    )
}

fn finite_elements<F: Field>(desc: &F::Desc) -> Result<Vec<F>> {
    F::elements(desc).ok_or_else(|| Error::InvalidArgument("enumeration needs a finite field".into()))
}

fn degree_zero_candidates(q: u128, n: usize) -> u128 {
    q.saturating_pow(n as u32)
}

/// Every element of `G_V` over a finite field, in lexicographic order of
/// the coefficient vectors.
pub fn group_elements<F: Field>(
    s_ring: &RingRef<F>,
    shifts: &ShiftType,
    budget: u128,
) -> Result<Vec<GroupElement<F>>> {
    let elems = finite_elements::<F>(s_ring.field())?;
    let slots = slots(s_ring, shifts, shifts, 0);
    let required = degree_zero_candidates(elems.len() as u128, slots.len());
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let d = shifts.dim();
    let mut out = Vec::new();
    for_each_tuple(&elems, slots.len(), |c| {
        let m = slot_matrix(s_ring, d, d, &slots, c);
        if let Ok(g) = GroupElement::new(shifts, m) {
            out.push(g);
        }
        true
    });
    Ok(out)
}

/// `|G_V(F_q)|`, counted by enumeration.
pub fn group_order<F: Field>(s_ring: &RingRef<F>, shifts: &ShiftType, budget: u128) -> Result<u64> {
    let elems = finite_elements::<F>(s_ring.field())?;
    let slots = slots(s_ring, shifts, shifts, 0);
    let required = degree_zero_candidates(elems.len() as u128, slots.len());
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let d = shifts.dim();
    let mut count = 0u64;
    for_each_tuple(&elems, slots.len(), |c| {
        let m = slot_matrix(s_ring, d, d, &slots, c);
        if m.det().constant_value().is_some_and(|x| !x.is_zero()) {
            count += 1;
        }
        true
    });
    Ok(count)
}

/// All points of `Rep_S(R, V)` over a finite field, in lexicographic order.
pub fn enumerate_points<F: Field>(
    algebra: &GradedAlgebra,
    shifts: &ShiftType,
    field: F::Desc,
    budget: u128,
) -> Result<Vec<Vec<F>>> {
    let elems = finite_elements::<F>(&field)?;
    let rep = build_defining_ideal::<F>(algebra, shifts, field.clone())?;
    let n = rep.parameter_space().len();
    let required = (elems.len() as u128).saturating_pow(n as u32);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    // generators grouped by the last unknown they involve
    let mut by_last: Vec<Vec<&Polynomial<F>>> = vec![Vec::new(); n];
    for g in rep.generators() {
        match g.support().last() {
            Some(&k) => by_last[k].push(g),
            None => return Ok(Vec::new()),
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![F::zero(&field); n];
    fn walk<F: Field>(
        k: usize,
        cur: &mut Vec<F>,
        elems: &[F],
        by_last: &[Vec<&Polynomial<F>>],
        out: &mut Vec<Vec<F>>,
    ) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for x in elems {
            cur[k] = x.clone();
            if by_last[k].iter().all(|g| g.eval(cur).is_zero()) {
                walk(k + 1, cur, elems, by_last, out);
            }
        }
        cur[k] = elems[0].clone();
    }
    walk(0, &mut cur, &elems, &by_last, &mut out);
    Ok(out)
}

/// Named reference point used to label census orbits.
#[derive(Clone, Debug)]
pub struct NamedModulePoint<F: Field> {
    pub label: String,
    pub point: MatrixPoint<F>,
}

impl<F: Field> NamedModulePoint<F> {
    pub fn shifts(&self) -> &ShiftType {
        self.point.shifts()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusMethod {
    /// Orbits computed by applying every group element.
    GroupAction,
    /// Points clustered by pairwise isomorphism testing.
    IsomorphismClustering,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord<F: Field> {
    pub representative: Vec<F>,
    pub size: usize,
    pub stabilizer_order: Option<u64>,
    pub label: Option<String>,
    /// Index of the isomorphism class (over the algebraic closure).
    pub iso_class: usize,
}

#[derive(Clone, Debug)]
pub struct OrbitCensus<F: Field> {
    pub field_size: u64,
    pub group_order: Option<u64>,
    pub total_points: usize,
    pub method: CensusMethod,
    pub orbits: Vec<OrbitRecord<F>>,
    pub iso_class_count: usize,
}

impl<F: Field> OrbitCensus<F> {
    /// Orbits over the finite field and geometric isomorphism classes differ.
    pub fn diverges(&self) -> bool {
        self.orbits.len() != self.iso_class_count
    }

    /// Re-checks the partition and orbit-stabilizer identities.
    pub fn verify(&self) -> Result<()> {
        let sum: usize = self.orbits.iter().map(|o| o.size).sum();
        if sum != self.total_points {
            return Err(Error::Invariant(format!(
                "orbit sizes sum to {sum}, expected {}",
                self.total_points
            )));
        }
        if let Some(g) = self.group_order {
            for o in &self.orbits {
                let stab = o
                    .stabilizer_order
                    .ok_or_else(|| Error::Invariant("missing stabilizer order".into()))?;
                if o.size as u64 * stab != g {
                    return Err(Error::Invariant(format!(
                        "orbit of size {} with stabilizer {stab} in a group of order {g}",
                        o.size
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Partitions the points into `G_V(F_q)`-orbits.
///
/// The full group is enumerated when it has at most `group_budget`
/// candidate matrices; otherwise points are clustered by [`are_isomorphic`].
/// Representatives are the lexicographically smallest orbit members.
pub fn orbit_partition<F: Field + Ord>(
    points: &[Vec<F>],
    algebra: &GradedAlgebra,
    shifts: &ShiftType,
    field: F::Desc,
    named: &[NamedModulePoint<F>],
    group_budget: u128,
) -> Result<OrbitCensus<F>> {
    let field_size = F::size(&field)
        .ok_or_else(|| Error::InvalidArgument("census needs a finite field".into()))?;
    let ps = parameterize::<F>(algebra, shifts, field)?;
    let mut sorted: Vec<Vec<F>> = points.to_vec();
    sorted.sort();
    sorted.dedup();
    let mpoints: Vec<MatrixPoint<F>> = sorted
        .iter()
        .map(|v| ps.evaluate(v))
        .collect::<Result<_>>()?;

    let group = match group_elements(ps.s_ring(), shifts, group_budget) {
        Ok(g) if g.len() as u128 <= group_budget => Some(g),
        Ok(_) | Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };

    let mut orbit_of: Vec<Option<usize>> = vec![None; sorted.len()];
    let mut records: Vec<OrbitRecord<F>> = Vec::new();
    let method;
    match &group {
        Some(group) => {
            method = CensusMethod::GroupAction;
            let index: HashMap<&Vec<F>, usize> =
                sorted.iter().enumerate().map(|(i, v)| (v, i)).collect();
            for i in 0..sorted.len() {
                if orbit_of[i].is_some() {
                    continue;
                }
                let o = records.len();
                let mut size = 0;
                let mut stab = 0u64;
                for g in group {
                    let img = ps.coordinates(&conjugate(&mpoints[i], g)?)?;
                    let j = *index.get(&img).ok_or_else(|| {
                        Error::Invariant("conjugate of a point is not in the point set".into())
                    })?;
                    if j == i {
                        stab += 1;
                    }
                    match orbit_of[j] {
                        None => {
                            orbit_of[j] = Some(o);
                            size += 1;
                        }
                        Some(x) if x == o => {}
                        Some(_) => return Err(Error::Invariant("orbits overlap".into())),
                    }
                }
                records.push(OrbitRecord {
                    representative: sorted[i].clone(),
                    size,
                    stabilizer_order: Some(stab),
                    label: None,
                    iso_class: 0,
                });
            }
        }
        None => {
            method = CensusMethod::IsomorphismClustering;
            let mut reps: Vec<usize> = Vec::new();
            for i in 0..sorted.len() {
                let mut hit = None;
                for (o, &r) in reps.iter().enumerate() {
                    if are_isomorphic(&mpoints[r], &mpoints[i])? {
                        hit = Some(o);
                        break;
                    }
                }
                match hit {
                    Some(o) => {
                        orbit_of[i] = Some(o);
                        records[o].size += 1;
                    }
                    None => {
                        orbit_of[i] = Some(reps.len());
                        reps.push(i);
                        records.push(OrbitRecord {
                            representative: sorted[i].clone(),
                            size: 1,
                            stabilizer_order: None,
                            label: None,
                            iso_class: 0,
                        });
                    }
                }
            }
        }
    }

    // geometric isomorphism classes of the representatives, and labels
    let rep_points: Vec<MatrixPoint<F>> = records
        .iter()
        .map(|r| ps.evaluate(&r.representative))
        .collect::<Result<_>>()?;
    let mut class_reps: Vec<usize> = Vec::new();
    for (o, p) in rep_points.iter().enumerate() {
        let mut class = None;
        for (c, &r) in class_reps.iter().enumerate() {
            if are_isomorphic(&rep_points[r], p)? {
                class = Some(c);
                break;
            }
        }
        records[o].iso_class = match class {
            Some(c) => c,
            None => {
                class_reps.push(o);
                class_reps.len() - 1
            }
        };
        for n in named {
            if n.point.shifts() == shifts && are_isomorphic(&n.point, p)? {
                records[o].label = Some(n.label.clone());
                break;
            }
        }
    }

    let census = OrbitCensus {
        field_size,
        group_order: group.as_ref().map(|g| g.len() as u64),
        total_points: sorted.len(),
        method,
        orbits: records,
        iso_class_count: class_reps.len(),
    };
    census.verify()?;
    Ok(census)
}
