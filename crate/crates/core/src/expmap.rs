//! Floating-point bridge from local triples to global ones through the
//! exponential series, plus the exact nilpotent case.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::triality::{verify_triality, DerivationPair, LocalTriple, TrialityTriple};
use nalgebra::DMatrix;
use std::sync::Arc;

pub const DEFAULT_TERMS: usize = 30;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Real embedding of an exact matrix; fails for 𝔽_p and imaginary quadratic fields.
pub fn embed_matrix(m: &Matrix) -> Result<DMatrix<f64>> {
    let data = m.to_f64().ok_or(Error::FieldNotEmbeddable(m.field()))?;
    Ok(DMatrix::from_row_slice(m.rows(), m.cols(), &data))
}

/// Σ_{n<terms} mⁿ/n!
pub fn exp_series(m: &DMatrix<f64>, terms: usize) -> DMatrix<f64> {
    let n = m.nrows();
    let mut sum = DMatrix::<f64>::zeros(n, n);
    let mut term = DMatrix::<f64>::identity(n, n);
    for k in 0..terms {
        sum += &term;
        term = &term * m / (k as f64 + 1.0);
    }
    sum
}

/// exp(λd) for d with d³ = Δd:
/// 1 + sinh(λ√Δ)/√Δ · d + (cosh(λ√Δ) − 1)/Δ · d², continued to Δ ≤ 0.
pub fn exp_closed_form(d: &DMatrix<f64>, delta: f64, lambda: f64) -> DMatrix<f64> {
    let n = d.nrows();
    let (c1, c2) = if delta > 0.0 {
        let r = delta.sqrt();
        ((lambda * r).sinh() / r, ((lambda * r).cosh() - 1.0) / delta)
    } else if delta < 0.0 {
        let r = (-delta).sqrt();
        ((lambda * r).sin() / r, ((lambda * r).cos() - 1.0) / delta)
    } else {
        (lambda, lambda * lambda / 2.0)
    };
    DMatrix::identity(n, n) + d * c1 + d * d * c2
}

/// Structure constants of an algebra as doubles.
struct FloatTable {
    n: usize,
    c: Vec<f64>,
}

impl FloatTable {
    fn new(alg: &Algebra) -> Result<FloatTable> {
        let c = alg
            .table()
            .iter()
            .map(|s| s.to_f64().ok_or(Error::FieldNotEmbeddable(alg.field())))
            .collect::<Result<_>>()?;
        Ok(FloatTable { n: alg.dim(), c })
    }

    fn mul(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut out = vec![0.0; n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| **v != 0.0) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| **v != 0.0) {
                let base = (i * n + j) * n;
                for (k, o) in out.iter_mut().enumerate() {
                    *o += xi * yj * self.c[base + k];
                }
            }
        }
        out
    }
}

/// max over j and basis pairs of |ξ_j(xy) − (ξ_{j+1}x)(ξ_{j+2}y)|_∞
pub fn global_residual(alg: &Algebra, maps: &[DMatrix<f64>; 3]) -> Result<f64> {
    let ft = FloatTable::new(alg)?;
    let n = alg.dim();
    let col = |m: &DMatrix<f64>, i: usize| -> Vec<f64> { m.column(i).iter().copied().collect() };
    let mut worst = 0.0f64;
    for j in 0..3 {
        for a in 0..n {
            for b in 0..n {
                let prod: Vec<f64> = ft.c[(a * n + b) * n..(a * n + b + 1) * n].to_vec();
                let lhs = &maps[j] * nalgebra::DVector::from_vec(prod);
                let rhs = ft.mul(&col(&maps[(j + 1) % 3], a), &col(&maps[(j + 2) % 3], b));
                for (l, r) in lhs.iter().zip(&rhs) {
                    worst = worst.max((l - r).abs());
                }
            }
        }
    }
    Ok(worst)
}

#[derive(Clone, Debug)]
pub struct ExpReport {
    pub algebra: String,
    pub terms: usize,
    pub tolerance: f64,
    /// max residual of the global relation for the truncated exponentials
    pub residual: f64,
    /// max |series − closed form| over j ∈ {1, 2}, for derivation-pair inputs
    pub closed_form_gap: Option<f64>,
    pub xi: [DMatrix<f64>; 3],
}

impl ExpReport {
    pub fn passed(&self) -> bool {
        self.residual < self.tolerance && self.closed_form_gap.is_none_or(|g| g < self.tolerance)
    }

    pub fn to_report(&self) -> Report {
        let mut rep = Report::new(&self.algebra);
        let tol = self.tolerance;
        rep.check("exp.residual", self.residual < tol, || format!("residual {:e} ≥ {tol:e}", self.residual));
        if let Some(g) = self.closed_form_gap {
            rep.check("exp.closed-form", g < tol, || format!("gap {g:e} ≥ {tol:e}"));
        }
        rep.note(format!("terms = {}, residual = {:e}", self.terms, self.residual));
        if let Some(g) = self.closed_form_gap {
            rep.note(format!("closed-form gap = {g:e}"));
        }
        rep
    }
}

pub fn exp_bridge(t: &LocalTriple, terms: usize, tolerance: f64) -> Result<ExpReport> {
    let alg = t.algebra();
    let mut xi = Vec::with_capacity(3);
    for m in t.maps() {
        xi.push(exp_series(&embed_matrix(m)?, terms));
    }
    let xi: [DMatrix<f64>; 3] = xi.try_into().expect("three maps");
    let residual = global_residual(alg, &xi)?;
    Ok(ExpReport { algebra: alg.name().to_string(), terms, tolerance, residual, closed_form_gap: None, xi })
}

/// Exponentiates the local triple (d₁, d₂, d₃)(x, y) and compares d₁, d₂ with the
/// closed form driven by `delta` (the cubic constant of the pair).
pub fn exp_bridge_pair(
    alg: &Arc<Algebra>,
    dp: &DerivationPair,
    delta: f64,
    terms: usize,
    tolerance: f64,
) -> Result<ExpReport> {
    let [d1, d2, d3] = dp.d.clone();
    let t = crate::triality::verify_local(alg, d1, d2, d3)?;
    let mut rep = exp_bridge(&t, terms, tolerance)?;
    let mut gap = 0.0f64;
    for j in 0..2 {
        let closed = exp_closed_form(&embed_matrix(&dp.d[j])?, delta, 1.0);
        gap = gap.max((&closed - &rep.xi[j]).amax());
    }
    rep.closed_form_gap = Some(gap);
    Ok(rep)
}

/// Exact exponential of a triple of nilpotent maps, certified as a global triple.
/// Returns `None` when some component is not nilpotent.
pub fn exp_nilpotent(t: &LocalTriple) -> Result<Option<TrialityTriple>> {
    let alg = t.algebra();
    let n = alg.dim();
    let f = alg.field();
    let mut out = Vec::with_capacity(3);
    for m in t.maps() {
        let mut sum = alg.identity();
        let mut power = alg.identity();
        let mut fact = f.one();
        let mut k = 1;
        loop {
            power = &power * m;
            if power.is_zero() {
                break;
            }
            if k >= n {
                return Ok(None);
            }
            fact = fact.try_mul(&f.int(k as i64))?;
            sum = &sum + &power.scale(&fact.inv()?);
            k += 1;
        }
        out.push(sum);
    }
    let [a, b, c]: [Matrix; 3] = out.try_into().expect("three maps");
    verify_triality(alg, a, b, c).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::para2;
    use crate::fields::Field;
    use crate::triality::verify_local;

    fn rot(l: i64) -> Matrix {
        Matrix::from_ints(Field::Rationals, &[&[0, -l], &[l, 0]])
    }

    #[test]
    fn zero_triple_gives_identity() {
        let a = Arc::new(para2(Field::Rationals));
        let t = LocalTriple::zero(&a);
        let r = exp_bridge(&t, DEFAULT_TERMS, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(r.residual, 0.0);
        assert!(r.xi[0].is_identity(0.0));
    }

    #[test]
    fn dim2_rotation_residual() {
        let a = Arc::new(para2(Field::Rationals));
        let t = verify_local(&a, rot(1), rot(1), rot(-2)).unwrap();
        let r = exp_bridge(&t, 30, 1e-9).unwrap();
        assert!(r.passed(), "{}", r.residual);
        let r5 = exp_bridge(&t, 5, 1e-9).unwrap();
        assert!(r5.residual > r.residual);
    }

    #[test]
    fn closed_form_matches_rotation() {
        // d = [[0,-1],[1,0]] has d² = −Id, so d³ = −d
        let d = DMatrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]);
        let gap = (exp_closed_form(&d, -1.0, 0.7) - exp_series(&(&d * 0.7), 30)).amax();
        assert!(gap < 1e-12);
    }

    #[test]
    fn finite_field_not_embeddable() {
        let a = Arc::new(para2(Field::prime(5).unwrap()));
        let t = LocalTriple::zero(&a);
        assert!(matches!(exp_bridge(&t, 30, 1e-9), Err(Error::FieldNotEmbeddable(_))));
    }
}
