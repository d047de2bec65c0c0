//! Rational eigenvalues and Fitting splittings of linear operators.
//!
//! Splitting an operator only needs one eigenvalue in the base field, found
//! from the minimal polynomial by the rational root theorem (or exhaustive
//! search over small prime fields), so no polynomial factorization is
//! required.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactlin::{Field, Matrix, Scalar, Subspace};

/// Monic minimal polynomial, coefficients from degree 0 upwards.
pub fn minimal_polynomial(m: &Matrix) -> Vec<Scalar> {
    let n = m.rows();
    let field = m.field();
    let flat = |x: &Matrix| -> Vec<Scalar> {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| x.get(i, j).clone()).collect()
    };
    let mut powers = vec![flat(&Matrix::identity(field, n))];
    let mut cur = Matrix::identity(field, n);
    loop {
        cur = cur.mul(m);
        let v = flat(&cur);
        let basis = Matrix::from_columns(field, n * n, &powers);
        let rhs = Matrix::from_columns(field, n * n, std::slice::from_ref(&v));
        if let Some(x) = basis.solve(&rhs) {
            let mut coeffs: Vec<Scalar> = x.column(0).into_iter().map(|c| -c).collect();
            coeffs.push(field.one());
            return coeffs;
        }
        powers.push(v);
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

fn eval(poly: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in poly.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Roots of `poly` lying in the base field, in a deterministic order. Over
/// the rationals, coefficients whose leading/trailing terms exceed 10^12
/// are not searched (the empty answer then only means "none found").
pub fn roots_in_field(poly: &[Scalar]) -> Vec<Scalar> {
    if poly.is_empty() {
        return vec![];
    }
    let field = poly[0].field();
    match field {
        Field::Prime(p) => {
            if p > 200_000 {
                return vec![];
            }
            (0..p as i64).map(|v| field.from_i64(v)).filter(|x| eval(poly, x).is_zero()).collect()
        }
        Field::Rationals => {
            let rats: Vec<BigRational> = poly
                .iter()
                .map(|c| match c {
                    Scalar::Rational(q) => q.clone(),
                    Scalar::Modular { .. } => unreachable!(),
                })
                .collect();
            let lcm = rats.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let ints: Vec<BigInt> = rats.iter().map(|q| (q * &lcm).to_integer()).collect();
            let mut out = vec![];
            let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
            if low > 0 {
                out.push(field.zero());
            }
            let a0 = ints[low].abs().to_u64();
            let an = ints.last().unwrap().abs().to_u64();
            let (Some(a0), Some(an)) = (a0, an) else { return out };
            if a0 > 1_000_000_000_000 || an > 1_000_000_000_000 {
                return out;
            }
            let mut seen = vec![];
            for p in divisors(a0) {
                for q in divisors(an) {
                    for s in [1i64, -1] {
                        let r = BigRational::new(BigInt::from(p) * s, BigInt::from(q));
                        if seen.contains(&r) {
                            continue;
                        }
                        seen.push(r.clone());
                        let x = Scalar::Rational(r);
                        if eval(poly, &x).is_zero() {
                            out.push(x);
                        }
                    }
                }
            }
            out
        }
    }
}

/// For an operator `phi` on `k^n`, a nontrivial idempotent commuting with
/// `phi` (the projection onto `im ψ^n` along `ker ψ^n`, `ψ = phi - λ`), if
/// `phi` has an eigenvalue `λ` in the base field and is not `λ` plus a
/// nilpotent.
pub fn fitting_projection(phi: &Matrix) -> Option<Matrix> {
    let n = phi.rows();
    let field = phi.field();
    for lambda in roots_in_field(&minimal_polynomial(phi)) {
        let psi = phi.sub(&Matrix::identity(field, n).scale(&lambda));
        let pn = psi.pow(n);
        if pn.is_zero() {
            continue;
        }
        let ker = pn.kernel_basis();
        let im = pn.column_space();
        let t = ker.hstack(&im);
        let tinv = t.inverse()?;
        let mut d = Matrix::zeros(field, n, n);
        for i in ker.cols()..n {
            d.set(i, i, field.one());
        }
        return Some(t.mul(&d).mul(&tinv));
    }
    None
}

/// Deterministic candidate operators drawn from an algebra basis: the
/// basis itself, then pairwise sums, then combinations with small
/// coefficients.
pub fn candidate_combinations(basis: &[Matrix], bound: usize) -> Vec<Matrix> {
    let mut out: Vec<Matrix> = basis.to_vec();
    let k = basis.len();
    for i in 0..k {
        for j in i + 1..k {
            out.push(basis[i].add(&basis[j]));
        }
    }
    if k > 0 {
        let field = basis[0].field();
        for c in 2..=3i64 {
            for i in 0..k {
                for j in 0..k {
                    if i != j {
                        out.push(basis[i].add(&basis[j].scale(&field.from_i64(c))));
                    }
                }
            }
        }
        let mut acc = basis[0].clone();
        for (i, b) in basis.iter().enumerate().skip(1) {
            acc = acc.add(&b.scale(&field.from_i64(i as i64 + 1)));
            out.push(acc.clone());
        }
    }
    out.truncate(bound.max(k));
    out
}

/// Radical of a matrix algebra `E ⊆ End(k^n)` (given by a basis) via the
/// trace form `tr(xy)`. Valid in characteristic 0 or `p > n`. Returned as
/// coordinate vectors (columns) relative to `basis`.
pub fn trace_radical(basis: &[Matrix]) -> Matrix {
    let k = basis.len();
    if k == 0 {
        return Matrix::zeros(Field::Rationals, 0, 0);
    }
    let field = basis[0].field();
    let mut g = Matrix::zeros(field, k, k);
    for i in 0..k {
        for j in i..k {
            let t = trace_of_product(&basis[i], &basis[j]);
            g.set(i, j, t.clone());
            g.set(j, i, t);
        }
    }
    g.kernel_basis()
}

pub fn trace_of_product(x: &Matrix, y: &Matrix) -> Scalar {
    let mut acc = x.field().zero();
    for i in 0..x.rows() {
        for l in 0..x.cols() {
            let a = x.get(i, l);
            if a.is_zero() {
                continue;
            }
            acc += &(a * y.get(l, i));
        }
    }
    acc
}

/// `dim E/rad E` and whether `E/rad E` is commutative, for a matrix
/// algebra given by a basis.
pub fn semisimple_quotient_info(basis: &[Matrix]) -> (usize, bool) {
    let rad = trace_radical(basis);
    let k = basis.len();
    let top = k - rad.cols();
    if top <= 1 {
        return (top, true);
    }
    let n = basis[0].rows();
    let field = basis[0].field();
    let flat = |x: &Matrix| -> Vec<Scalar> {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| x.get(i, j).clone()).collect()
    };
    let rad_mats: Vec<Vec<Scalar>> = rad
        .columns()
        .iter()
        .map(|c| {
            let mut m = Matrix::zeros(field, n, n);
            for (b, coef) in basis.iter().zip(c) {
                m = m.add(&b.scale(coef));
            }
            flat(&m)
        })
        .collect();
    let rad_space = Subspace::span_vectors(field, n * n, &rad_mats);
    let commutative = (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let c = basis[i].mul(&basis[j]).sub(&basis[j].mul(&basis[i]));
            rad_space.contains_vector(&flat(&c))
        })
    });
    (top, commutative)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn minimal_polynomial_of_a_projection() {
        let p = Matrix::from_i64(Q, &[vec![1, 0], vec![0, 0]]);
        let mp = minimal_polynomial(&p);
        // t^2 - t
        assert_eq!(mp, vec![Q.zero(), Q.from_i64(-1), Q.one()]);
    }

    #[test]
    fn rational_roots_found() {
        // (t - 1/2)(t + 3) = t^2 + 5/2 t - 3/2
        let poly = vec![Q.from_ratio(-3, 2).unwrap(), Q.from_ratio(5, 2).unwrap(), Q.one()];
        let roots = roots_in_field(&poly);
        assert!(roots.contains(&Q.from_ratio(1, 2).unwrap()));
        assert!(roots.contains(&Q.from_i64(-3)));
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn irreducible_quadratic_has_no_rational_roots() {
        let poly = vec![Q.from_i64(-2), Q.zero(), Q.one()];
        assert!(roots_in_field(&poly).is_empty());
    }

    #[test]
    fn fitting_splits_diagonalizable() {
        let phi = Matrix::from_i64(Q, &[vec![2, 1], vec![0, 3]]);
        let p = fitting_projection(&phi).unwrap();
        assert_eq!(p.mul(&p), p);
        assert_eq!(p.mul(&phi), phi.mul(&p));
        assert_eq!(p.rank(), 1);
    }

    #[test]
    fn fitting_refuses_scalar_plus_nilpotent() {
        let phi = Matrix::from_i64(Q, &[vec![5, 1], vec![0, 5]]);
        assert!(fitting_projection(&phi).is_none());
    }

    #[test]
    fn trace_radical_of_upper_triangular() {
        let e11 = Matrix::from_i64(Q, &[vec![1, 0], vec![0, 0]]);
        let e22 = Matrix::from_i64(Q, &[vec![0, 0], vec![0, 1]]);
        let e12 = Matrix::from_i64(Q, &[vec![0, 1], vec![0, 0]]);
        let rad = trace_radical(&[e11, e22, e12]);
        assert_eq!(rad.cols(), 1);
        assert!(rad.get(0, 0).is_zero() && rad.get(1, 0).is_zero());
    }
}
