//! Matrix representations and the defining ideal of the representation variety.
//!
//! A point is one `d x d` matrix over `S` per algebra generator `z_i`, with
//! entry `(p, q)` homogeneous of degree `deg z_i + l_q - l_p`. The
//! normalization variables act as scalars, so they are never parameterized.
//! Matrices act on column vectors: column `q` is the image of the `q`-th
//! basis element of `S ⊗ V`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{hom_entry_degrees, monomials_of_s, GradedAlgebra, ShiftType};
use crate::groebner::Ideal;
use crate::matrix::PolyMatrix;
use crate::poly::{fmt_monomial, same_ring, Monomial, PolyRing, Polynomial, RingRef};

/// Coefficient of `monomial` in entry `(row, col)` of the matrix of
/// algebra generator `generator`. Indices are zero based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Unknown {
    pub generator: usize,
    pub row: usize,
    pub col: usize,
    pub monomial: Monomial,
}

/// Coordinates of the affine space containing the representation variety.
#[derive(Clone, Debug)]
pub struct ParameterSpace<F: Field> {
    generator_names: Vec<String>,
    generator_degrees: Vec<u32>,
    shifts: ShiftType,
    s_ring: RingRef<F>,
    unknowns: Vec<Unknown>,
    unknown_ring: RingRef<F>,
}

impl<F: Field> ParameterSpace<F> {
    pub fn unknowns(&self) -> &[Unknown] {
        &self.unknowns
    }

    pub fn len(&self) -> usize {
        self.unknowns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.unknowns.is_empty()
    }

    pub fn shifts(&self) -> &ShiftType {
        &self.shifts
    }

    pub fn s_ring(&self) -> &RingRef<F> {
        &self.s_ring
    }

    /// Ring `k[u1..uN]` of the unknowns.
    pub fn unknown_ring(&self) -> &RingRef<F> {
        &self.unknown_ring
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generator_degrees(&self) -> &[u32] {
        &self.generator_degrees
    }

    pub fn field(&self) -> &F::Desc {
        self.s_ring.field()
    }

    /// Human-readable provenance, e.g. `x[1,2] * y^2`.
    pub fn describe(&self, k: usize) -> String {
        let u = &self.unknowns[k];
        let entry = format!("{}[{},{}]", self.generator_names[u.generator], u.row + 1, u.col + 1);
        if u.monomial.is_one() {
            entry
        } else {
            format!("{entry} * {}", fmt_monomial(self.s_ring.names(), &u.monomial))
        }
    }

    /// Torus weight `l_p - l_q` of each unknown; every generator of the
    /// defining ideal is homogeneous for it.
    pub fn torus_weights(&self) -> Vec<i64> {
        let l = self.shifts.shifts();
        self.unknowns.iter().map(|u| l[u.row] - l[u.col]).collect()
    }

    /// The concrete point with the given coordinates.
    pub fn evaluate(&self, assignment: &[F]) -> Result<MatrixPoint<F>> {
        if assignment.len() != self.unknowns.len() {
            return Err(Error::MissingAssignment {
                expected: self.unknowns.len(),
                got: assignment.len(),
            });
        }
        let d = self.shifts.dim();
        let mut mats: Vec<PolyMatrix<F>> = (0..self.generator_degrees.len())
            .map(|_| PolyMatrix::zero(&self.s_ring, d, d))
            .collect();
        for (u, c) in self.unknowns.iter().zip(assignment) {
            let m = &mut mats[u.generator];
            let mut e = m.get(u.row, u.col).clone();
            e.add_term(u.monomial.clone(), c.clone());
            m.set(u.row, u.col, e);
        }
        MatrixPoint::new(
            &self.s_ring,
            self.shifts.clone(),
            self.generator_degrees.clone(),
            mats,
        )
    }

    /// Reads the coordinates of conforming matrices.
    pub fn point_from_matrices(&self, matrices: &[PolyMatrix<F>]) -> Result<Vec<F>> {
        if matrices.iter().any(|m| !same_ring(m.ring(), &self.s_ring)) {
            return Err(Error::NotScalar);
        }
        check_shape(&self.shifts, &self.generator_degrees, matrices)?;
        Ok(self
            .unknowns
            .iter()
            .map(|u| matrices[u.generator].get(u.row, u.col).coefficient(&u.monomial))
            .collect())
    }

    pub fn coordinates(&self, pt: &MatrixPoint<F>) -> Result<Vec<F>> {
        if pt.shifts != self.shifts {
            return Err(Error::TypeMismatch);
        }
        self.point_from_matrices(&pt.matrices)
    }

    /// Generic matrices `Σ u_k m_k` over `k[u1..uN] ⊗ S`.
    fn generic_matrices(&self, combined: &RingRef<F>) -> Vec<PolyMatrix<F>> {
        let n = self.unknowns.len();
        let d = self.shifts.dim();
        let s_map: Vec<usize> = (0..self.s_ring.nvars()).map(|j| n + j).collect();
        let one = F::one(self.field());
        let mut mats: Vec<PolyMatrix<F>> = (0..self.generator_degrees.len())
            .map(|_| PolyMatrix::zero(combined, d, d))
            .collect();
        for (k, u) in self.unknowns.iter().enumerate() {
            let mono = Polynomial::term(&self.s_ring, u.monomial.clone(), one.clone())
                .rebase(combined, &s_map);
            let term = &Polynomial::var(combined, k) * &mono;
            let m = &mut mats[u.generator];
            let e = m.get(u.row, u.col) + &term;
            m.set(u.row, u.col, e);
        }
        mats
    }
}

/// Enumerates the unknowns of `Rep_S(R, V)`.
pub fn parameterize<F: Field>(
    algebra: &GradedAlgebra,
    shifts: &ShiftType,
    field: F::Desc,
) -> Result<ParameterSpace<F>> {
    let violations = algebra.validate_presentation();
    if !violations.is_empty() {
        return Err(Error::InvalidPresentation(violations));
    }
    if !algebra.verify_normalization()? {
        return Err(Error::NormalizationUnverified);
    }
    let s_ring = algebra.normalization_ring::<F>(field.clone())?;
    let generator_degrees = algebra.generator_degrees();
    let generator_names = algebra
        .generator_indices()
        .into_iter()
        .map(|i| algebra.names()[i].clone())
        .collect();
    let mut unknowns = Vec::new();
    for (g, &deg) in generator_degrees.iter().enumerate() {
        let degs = hom_entry_degrees(shifts, shifts, deg as i64);
        for (p, row) in degs.iter().enumerate() {
            for (q, &e) in row.iter().enumerate() {
                for m in monomials_of_s(&s_ring, e) {
                    unknowns.push(Unknown {
                        generator: g,
                        row: p,
                        col: q,
                        monomial: m,
                    });
                }
            }
        }
    }
    let unknown_ring = PolyRing::standard("u", unknowns.len(), field);
    Ok(ParameterSpace {
        generator_names,
        generator_degrees,
        shifts: shifts.clone(),
        s_ring,
        unknowns,
        unknown_ring,
    })
}

fn check_shape<F: Field>(
    shifts: &ShiftType,
    gen_degrees: &[u32],
    matrices: &[PolyMatrix<F>],
) -> Result<()> {
    if matrices.len() != gen_degrees.len() {
        return Err(Error::InvalidArgument(format!(
            "expected {} generator matrices, got {}",
            gen_degrees.len(),
            matrices.len()
        )));
    }
    let d = shifts.dim();
    for (g, (m, &deg)) in matrices.iter().zip(gen_degrees).enumerate() {
        if m.rows() != d || m.cols() != d {
            return Err(Error::InvalidArgument(format!(
                "matrix {} is {}x{}, expected {d}x{d}",
                g + 1,
                m.rows(),
                m.cols()
            )));
        }
        let degs = hom_entry_degrees(shifts, shifts, deg as i64);
        check_entry_degrees(g, m, &degs)?;
    }
    Ok(())
}

pub(crate) fn check_entry_degrees<F: Field>(
    generator: usize,
    m: &PolyMatrix<F>,
    degs: &[Vec<i64>],
) -> Result<()> {
    for ((p, q), e) in m.entries() {
        if e.is_zero() {
            continue;
        }
        let want = degs[p][q];
        let ok = want >= 0 && e.homogeneous_degree() == Some(want as u64);
        if !ok {
            return Err(Error::ShapeMismatch {
                generator,
                row: p + 1,
                col: q + 1,
                reason: if want < 0 {
                    format!("must be zero (required degree {want}), found {e}")
                } else {
                    format!("must be homogeneous of degree {want}, found {e}")
                },
            });
        }
    }
    Ok(())
}

/// Images of every relation under `z_i -> matrices[i]`, followed by the
/// commutators `[M_i, M_j]`, `i < j`. `s_map[j]` is the index in the target
/// ring of the `j`-th normalization variable.
fn relation_images<F: Field>(
    algebra: &GradedAlgebra,
    target: &RingRef<F>,
    s_map: &[usize],
    matrices: &[PolyMatrix<F>],
    d: usize,
) -> Result<Vec<PolyMatrix<F>>> {
    let full = algebra.full_ring::<F>(target.field().clone())?;
    let relations = algebra.relation_polynomials(&full)?;
    let gens = algebra.generator_indices();
    let norm = algebra.normalization_indices();
    let mut out = Vec::new();
    for rel in &relations {
        let mut acc = PolyMatrix::zero(target, d, d);
        for (m, c) in rel.terms() {
            let mut y = vec![0u32; target.nvars()];
            for (j, &vi) in norm.iter().enumerate() {
                y[s_map[j]] += m.exps()[vi];
            }
            let scalar = Polynomial::term(target, target.monomial(y), c.clone());
            let mut prod = PolyMatrix::identity(target, d).scale(&scalar);
            for (g, &vi) in gens.iter().enumerate() {
                for _ in 0..m.exps()[vi] {
                    prod = prod.mul(&matrices[g]);
                }
            }
            acc = acc.add(&prod);
        }
        out.push(acc);
    }
    for i in 0..matrices.len() {
        for j in i + 1..matrices.len() {
            out.push(matrices[i].mul(&matrices[j]).sub(&matrices[j].mul(&matrices[i])));
        }
    }
    Ok(out)
}

/// Defining ideal of `Rep_S(R, V)` in the ring of the unknowns.
#[derive(Clone, Debug)]
pub struct RepIdeal<F: Field> {
    params: ParameterSpace<F>,
    ideal: Ideal<F>,
}

impl<F: Field> RepIdeal<F> {
    pub fn parameter_space(&self) -> &ParameterSpace<F> {
        &self.params
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        self.ideal.generators()
    }

    /// Every generator vanishes at the assignment.
    pub fn vanishes_at(&self, assignment: &[F]) -> bool {
        self.generators()
            .iter()
            .all(|g| g.eval(assignment).is_zero())
    }
}

/// Substitutes generic matrices into the relations and commutators and
/// collects the coefficient of every S-monomial of every entry.
pub fn build_defining_ideal<F: Field>(
    algebra: &GradedAlgebra,
    shifts: &ShiftType,
    field: F::Desc,
) -> Result<RepIdeal<F>> {
    let params = parameterize::<F>(algebra, shifts, field.clone())?;
    let n = params.len();
    let s = &params.s_ring;
    let combined = PolyRing::<F>::new(
        (1..=n)
            .map(|i| (format!("u{i}"), 1))
            .chain(s.names().iter().cloned().zip(s.degrees().iter().copied())),
        field,
    )?;
    let generic = params.generic_matrices(&combined);
    let s_map: Vec<usize> = (0..s.nvars()).map(|j| n + j).collect();
    let images = relation_images(algebra, &combined, &s_map, &generic, shifts.dim())?;

    let mut gens: Vec<Polynomial<F>> = Vec::new();
    for img in &images {
        for (_, entry) in img.entries() {
            // split each term into its unknown part and its S part
            let mut by_s: BTreeMap<Vec<u32>, Polynomial<F>> = BTreeMap::new();
            for (m, c) in entry.terms() {
                let (u_part, s_part) = m.exps().split_at(n);
                let slot = by_s
                    .entry(s_part.to_vec())
                    .or_insert_with(|| Polynomial::zero(&params.unknown_ring));
                slot.add_term(params.unknown_ring.monomial(u_part.to_vec()), c.clone());
            }
            for (_, p) in by_s {
                if !p.is_zero() && !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
    }
    let ideal = Ideal::new(&params.unknown_ring, gens)?;
    Ok(RepIdeal { params, ideal })
}

/// A matrix representation: one matrix over `S` per algebra generator.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixPoint<F: Field> {
    s_ring: RingRef<F>,
    shifts: ShiftType,
    generator_degrees: Vec<u32>,
    matrices: Vec<PolyMatrix<F>>,
}

impl<F: Field> MatrixPoint<F> {
    /// Checks the degree shape of every entry.
    pub fn new(
        s_ring: &RingRef<F>,
        shifts: ShiftType,
        generator_degrees: Vec<u32>,
        matrices: Vec<PolyMatrix<F>>,
    ) -> Result<Self> {
        if matrices.iter().any(|m| !same_ring(m.ring(), s_ring)) {
            return Err(Error::NotScalar);
        }
        check_shape(&shifts, &generator_degrees, &matrices)?;
        Ok(MatrixPoint {
            s_ring: s_ring.clone(),
            shifts,
            generator_degrees,
            matrices,
        })
    }

    /// The zero representation of the given type.
    pub fn zero(algebra: &GradedAlgebra, shifts: &ShiftType, field: F::Desc) -> Result<Self> {
        let s_ring = algebra.normalization_ring::<F>(field)?;
        let d = shifts.dim();
        let g = algebra.generator_degrees();
        let mats = g.iter().map(|_| PolyMatrix::zero(&s_ring, d, d)).collect();
        Self::new(&s_ring, shifts.clone(), g, mats)
    }

    pub fn s_ring(&self) -> &RingRef<F> {
        &self.s_ring
    }

    pub fn shifts(&self) -> &ShiftType {
        &self.shifts
    }

    pub fn generator_degrees(&self) -> &[u32] {
        &self.generator_degrees
    }

    pub fn matrices(&self) -> &[PolyMatrix<F>] {
        &self.matrices
    }

    pub fn dim(&self) -> usize {
        self.shifts.dim()
    }

    /// Same matrices with every shift moved by `s`; entry degrees depend only
    /// on differences of shifts, so the point stays conforming.
    pub fn shifted(&self, s: i64) -> Self {
        MatrixPoint {
            shifts: self.shifts.shifted(s),
            ..self.clone()
        }
    }
}

impl<F: Field> fmt::Display for MatrixPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.matrices.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for MatrixPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixPoint{} {}", self.shifts, self)
    }
}

/// True iff every relation and every commutator evaluates to the zero matrix.
pub fn validate_point<F: Field>(
    pt: &MatrixPoint<F>,
    algebra: &GradedAlgebra,
    shifts: &ShiftType,
) -> Result<bool> {
    if &pt.shifts != shifts || pt.generator_degrees != algebra.generator_degrees() {
        return Err(Error::TypeMismatch);
    }
    let s_ring = algebra.normalization_ring::<F>(pt.s_ring.field().clone())?;
    if !same_ring(&s_ring, &pt.s_ring) {
        return Err(Error::RingMismatch);
    }
    check_shape(shifts, &pt.generator_degrees, &pt.matrices)?;
    let s_map: Vec<usize> = (0..s_ring.nvars()).collect();
    let images = relation_images(algebra, &s_ring, &s_map, &pt.matrices, shifts.dim())?;
    Ok(images.iter().all(|m| m.is_zero()))
}
