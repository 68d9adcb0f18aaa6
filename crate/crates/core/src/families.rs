//! Worked examples over `R = k[x, y]/(x^2)` with normalization `S = k[y]`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::{GradedAlgebra, ShiftType};
use crate::matrix::PolyMatrix;
use crate::orbits::NamedModulePoint;
use crate::poly::Polynomial;
use crate::rep::MatrixPoint;

/// `k[x, y]/(x^2)` with `deg x = deg y = 1`, normalized by `k[y]`.
pub fn example_algebra_x2() -> GradedAlgebra {
    GradedAlgebra::from_strings(&[("x", 1), ("y", 1)], &["x^2"], &["y"])
        .expect("x^2 preset is well formed")
}

fn x2_point<F: Field>(field: F::Desc, shifts: ShiftType, entry: Option<(usize, usize, u32)>) -> Result<MatrixPoint<F>> {
    let alg = example_algebra_x2();
    let s = alg.normalization_ring::<F>(field)?;
    let d = shifts.dim();
    let mut m = PolyMatrix::zero(&s, d, d);
    if let Some((r, c, e)) = entry {
        m.set(r, c, Polynomial::var(&s, 0).pow(e));
    }
    MatrixPoint::new(&s, shifts, alg.generator_degrees(), vec![m])
}

/// The free module `R`, on basis `1, x` of degrees `0, 1`.
pub fn module_point_r<F: Field>(field: F::Desc) -> Result<NamedModulePoint<F>> {
    Ok(NamedModulePoint {
        label: "R".into(),
        point: x2_point(field, ShiftType::new([0, 1]), Some((1, 0, 0)))?,
    })
}

/// The ideal `I_n = (x, y^n)`, generated in degrees `1` and `n`.
///
/// `I_0` is the whole ring and is returned as [`module_point_r`].
pub fn module_point_in<F: Field>(n: i64, field: F::Desc) -> Result<NamedModulePoint<F>> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("I_n needs n >= 0, got {n}")));
    }
    if n == 0 {
        return module_point_r(field);
    }
    Ok(NamedModulePoint {
        label: format!("I_{n}"),
        point: x2_point(field, ShiftType::new([1, n]), Some((0, 1, n as u32)))?,
    })
}

/// Zero representation `R/(x) ⊕ R/(x)(-1)` of type `{0,1}`.
pub fn module_point_zero<F: Field>(field: F::Desc) -> Result<NamedModulePoint<F>> {
    Ok(NamedModulePoint {
        label: "R/(x)⊕R/(x)(−1)".into(),
        point: x2_point(field, ShiftType::new([0, 1]), None)?,
    })
}

/// One point from each orbit of `Rep_S(R, {0,1})`.
pub fn three_orbit_representatives<F: Field>(field: F::Desc) -> Result<Vec<NamedModulePoint<F>>> {
    let i2 = module_point_in::<F>(2, field.clone())?;
    Ok(vec![
        module_point_r(field.clone())?,
        NamedModulePoint {
            label: "I_2(1)".into(),
            point: i2.point.shifted(-1),
        },
        module_point_zero(field)?,
    ])
}

/// `max(V) - min(V)`.
pub fn generator_degree_spread(v: &ShiftType) -> Result<i64> {
    match (v.shifts().first(), v.shifts().last()) {
        (Some(lo), Some(hi)) => Ok(hi - lo),
        _ => Err(Error::EmptyType),
    }
}

/// Shifts `V` so its smallest degree is `0`; returns the normalized type
/// and the amount `s` with `V = normalized + s`.
pub fn normalize_shifts(v: &ShiftType) -> Result<(ShiftType, i64)> {
    let s = *v.shifts().first().ok_or(Error::EmptyType)?;
    Ok((v.shifted(-s), s))
}

/// Rank of the module as a free `S`-module.
pub fn rank_over_s<F: Field>(pt: &MatrixPoint<F>) -> usize {
    pt.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, RationalField};
    use crate::rep::validate_point;

    #[test]
    fn ideal_points() {
        let alg = example_algebra_x2();
        let i1 = module_point_in::<Rational>(1, RationalField).unwrap();
        assert_eq!(i1.point.shifts(), &ShiftType::new([1, 1]));
        assert_eq!(i1.point.to_string(), "[0, y; 0, 0]");
        let i3 = module_point_in::<Rational>(3, RationalField).unwrap();
        assert_eq!(i3.point.to_string(), "[0, y^3; 0, 0]");
        assert!(validate_point(&i3.point, &alg, i3.shifts()).unwrap());
        assert_eq!(module_point_in::<Rational>(0, RationalField).unwrap().label, "R");
        assert!(module_point_in::<Rational>(-1, RationalField).is_err());
    }

    #[test]
    fn shift_helpers() {
        assert_eq!(
            normalize_shifts(&ShiftType::new([1, 4])).unwrap(),
            (ShiftType::new([0, 3]), 1)
        );
        assert_eq!(
            normalize_shifts(&ShiftType::new([-2, 3])).unwrap(),
            (ShiftType::new([0, 5]), -2)
        );
        assert_eq!(generator_degree_spread(&ShiftType::new([1, 4])).unwrap(), 3);
        assert_eq!(generator_degree_spread(&ShiftType::default()), Err(Error::EmptyType));
    }

    #[test]
    fn representatives_have_type_zero_one() {
        let reps = three_orbit_representatives::<Rational>(RationalField).unwrap();
        let labels: Vec<&str> = reps.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, ["R", "I_2(1)", "R/(x)⊕R/(x)(−1)"]);
        for r in &reps {
            assert_eq!(r.shifts(), &ShiftType::new([0, 1]));
            assert_eq!(rank_over_s(&r.point), 2);
        }
    }
}
