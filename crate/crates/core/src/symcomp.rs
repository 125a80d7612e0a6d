//! Symmetric composition algebras: Σ-triples and their σ/θ triality triples,
//! the spaces Λ(a) with the local triples D(a,p), and the cubic law of d_j.

use crate::algebra::{Algebra, Element};
use crate::dual::DualMatrix;
use crate::error::{Error, Result};
use crate::fields::Scalar;
use crate::linalg::Matrix;
use crate::report::Report;
use crate::triality::{
    d_map, derivation_pair, idx, trig_mul, verify_local, verify_triality, D3Rule, LocalTriple, TrialityTriple,
};
use rayon::prelude::*;
use std::sync::Arc;

pub use crate::groups::{auto_dim2, brute_force_auto_dim2, brute_force_trig_dim2, enumerate_sigma, enumerate_trig_small, GroupTable};

/// (xy)x = x(yx) = ⟨x|x⟩y with its linearization, the composition law, the
/// associativity of the form and the derived quartic identity.
pub fn is_symmetric_composition(alg: &Algebra) -> Result<Report> {
    let b = alg.form()?;
    let n = alg.dim();
    let mut rep = Report::new(alg.name());
    let ax = alg.check_axioms(&[crate::algebra::Axiom::Nondegenerate]);
    rep.merge(ax);
    let e = |i| alg.basis(i);
    let ip = |x: &Element, y: &Element| crate::algebra::bilinear(b, x, y);

    let w = alg.find_pair(|i, j| {
        let (x, y) = (e(i), e(j));
        let xy = alg.mul_basis(i, j);
        let rhs = y.scale(&ip(&x, &x));
        alg.mul(&xy, &x) == rhs && alg.mul(&x, &alg.mul_basis(j, i)) == rhs
    });
    rep.record("symcomp.flexible-norm", w.map(|p| alg.pair_witness(p)));

    let two = alg.field().int(2);
    let w = alg.find_triple(|i, j, k| {
        let (x, y, z) = (e(i), e(j), e(k));
        let rhs = y.scale(&(&two * &ip(&x, &z)));
        let l1 = &alg.mul(&alg.mul_basis(i, j), &z) + &alg.mul(&alg.mul_basis(k, j), &x);
        let l2 = &alg.mul(&x, &alg.mul_basis(j, k)) + &alg.mul(&z, &alg.mul_basis(j, i));
        l1 == rhs && l2 == rhs
    });
    rep.record("symcomp.flexible-linearized", w.map(|t| alg.triple_witness(t)));

    let w = alg.find_triple(|i, j, k| ip(&alg.mul_basis(i, j), &e(k)) == ip(&e(i), &alg.mul_basis(j, k)));
    rep.record("symcomp.associative-form", w.map(|t| alg.triple_witness(t)));

    // composition, polarized in both slots: ⟨xy|zw⟩ + ⟨zy|xw⟩ = 2⟨x|z⟩⟨y|w⟩
    let quads: Vec<usize> = (0..n * n * n * n).collect();
    let w = quads.par_iter().find_map_first(|&t| {
        let (i, j, k, l) = (t / (n * n * n), (t / (n * n)) % n, (t / n) % n, t % n);
        let lhs = &ip(&alg.mul_basis(i, j), &alg.mul_basis(k, l)) + &ip(&alg.mul_basis(k, j), &alg.mul_basis(i, l));
        let rhs = &two * &(&ip(&e(i), &e(k)) * &ip(&e(j), &e(l)));
        (lhs != rhs).then(|| format!("x = {}, y = {}, z = {}, w = {}", alg.label(i), alg.label(j), alg.label(k), alg.label(l)))
    });
    rep.record("symcomp.composition", w);

    // (xy)(yz) = 2⟨x|yz⟩y − ⟨y|y⟩zx, polarized in y:
    // (xy)(wz) + (xw)(yz) = 2⟨x|wz⟩y + 2⟨x|yz⟩w − 2⟨y|w⟩zx
    let w = quads.par_iter().find_map_first(|&t| {
        let (i, j, k, l) = (t / (n * n * n), (t / (n * n)) % n, (t / n) % n, t % n);
        let (x, y, u) = (e(i), e(j), e(l));
        let lhs = &alg.mul(&alg.mul_basis(i, j), &alg.mul_basis(l, k)) + &alg.mul(&alg.mul_basis(i, l), &alg.mul_basis(j, k));
        let rhs = &(&y.scale(&(&two * &ip(&x, &alg.mul_basis(l, k)))) + &u.scale(&(&two * &ip(&x, &alg.mul_basis(j, k)))))
            - &alg.mul_basis(k, i).scale(&(&two * &ip(&y, &u)));
        (lhs != rhs).then(|| format!("x = {}, y = {}, z = {}, w = {}", alg.label(i), alg.label(j), alg.label(k), alg.label(l)))
    });
    rep.record("symcomp.derived", w);
    Ok(rep)
}

/// Certified (a₁, a₂, a₃) with a_j a_{j+1} = a_{j+2} and ⟨a_j|a_j⟩ = 1.
#[derive(Clone, Debug)]
pub struct SigmaTriple {
    alg: Arc<Algebra>,
    a: [Element; 3],
}

impl PartialEq for SigmaTriple {
    fn eq(&self, o: &SigmaTriple) -> bool {
        self.a == o.a && self.alg.fingerprint() == o.alg.fingerprint()
    }
}

impl SigmaTriple {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    /// a_j, 1-based mod 3.
    pub fn a(&self, j: i64) -> &Element {
        &self.a[idx(j)]
    }

    pub fn elements(&self) -> &[Element; 3] {
        &self.a
    }

    /// (a₂, a₃, a₁)
    pub fn cycled(&self) -> SigmaTriple {
        let [a1, a2, a3] = self.a.clone();
        SigmaTriple { alg: self.alg.clone(), a: [a2, a3, a1] }
    }

    /// σ_j(a) = R(a_{j+1})R(a_{j+2})
    pub fn sigma(&self, j: i64) -> Matrix {
        &self.alg.right_op(self.a(j + 1)) * &self.alg.right_op(self.a(j + 2))
    }

    /// θ_j(a) = L(a_{j+2})L(a_{j+1})
    pub fn theta(&self, j: i64) -> Matrix {
        &self.alg.left_op(self.a(j + 2)) * &self.alg.left_op(self.a(j + 1))
    }
}

fn sigma_witness(alg: &Algebra, a: &[Element; 3]) -> Result<Option<String>> {
    for j in 0..3 {
        if alg.mul(&a[j], &a[(j + 1) % 3]) != a[(j + 2) % 3] {
            return Ok(Some(format!("a{}a{} ≠ a{}", j + 1, (j + 1) % 3 + 1, (j + 2) % 3 + 1)));
        }
    }
    Ok(None)
}

pub fn verify_sigma(alg: &Arc<Algebra>, a1: Element, a2: Element, a3: Element) -> Result<SigmaTriple> {
    let a = [a1, a2, a3];
    for (j, x) in a.iter().enumerate() {
        alg.expect_elem(x)?;
        if !alg.form_eval(x, x)?.is_one() {
            return Err(Error::NormNotOne(format!("a{}", j + 1)));
        }
    }
    if let Some(w) = sigma_witness(alg, &a)? {
        return Err(Error::RelationFails { relation: "Σ chain".into(), witness: w });
    }
    Ok(SigmaTriple { alg: alg.clone(), a })
}

/// (a, b, ab) for unit-norm a, b.
pub fn sigma_from_pair(alg: &Arc<Algebra>, a: &Element, b: &Element) -> Result<SigmaTriple> {
    for (name, x) in [("a", a), ("b", b)] {
        if !alg.form_eval(x, x)?.is_one() {
            return Err(Error::NormNotOne(name.into()));
        }
    }
    verify_sigma(alg, a.clone(), b.clone(), alg.mul(a, b))
}

/// The two triality triples attached to a Σ-triple, with their property report.
#[derive(Clone, Debug)]
pub struct SigmaThetaPair {
    pub sigma: TrialityTriple,
    pub theta: TrialityTriple,
    pub report: Report,
}

pub fn theorem25_triples(s: &SigmaTriple) -> Result<SigmaThetaPair> {
    let alg = &s.alg;
    let b = alg.form()?;
    let sg: [Matrix; 3] = std::array::from_fn(|k| s.sigma(k as i64 + 1));
    let th: [Matrix; 3] = std::array::from_fn(|k| s.theta(k as i64 + 1));
    let sigma = verify_triality(alg, sg[0].clone(), sg[1].clone(), sg[2].clone())?;
    let theta = verify_triality(alg, th[0].clone(), th[1].clone(), th[2].clone())?;
    let mut rep = Report::new(alg.name());
    rep.record("sigma-theta.global", None);
    let (sj, tj) = (|j: i64| &sg[idx(j)], |j: i64| &th[idx(j)]);
    let first = |f: &dyn Fn(i64) -> bool| (1..=3).find(|&j| !f(j)).map(|j| format!("j = {j}"));

    rep.record(
        "sigma-theta.mutual-inverse",
        first(&|j| (sj(j) * tj(j)).is_identity() && (tj(j) * sj(j)).is_identity()),
    );
    rep.record(
        "sigma-theta.cyclic-product",
        first(&|j| {
            (&(sj(j + 2) * sj(j + 1)) * sj(j)).is_identity() && (&(tj(j) * tj(j + 1)) * tj(j + 2)).is_identity()
        }),
    );
    let mut iso = None;
    for j in 1..=3 {
        for m in [sj(j), tj(j)] {
            if let Some(w) = alg.isometry_witness(m)? {
                iso.get_or_insert(format!("j = {j}, {w}"));
            }
        }
    }
    rep.record("sigma-theta.isometry", iso);
    rep.record("sigma-theta.adjoint", first(&|j| &sj(j).transpose() * b == b * tj(j)));
    let two = alg.field().int(2);
    rep.record(
        "sigma-theta.closed-form",
        first(&|j| {
            let (a0, a1, a2) = (s.a(j), s.a(j + 1), s.a(j + 2));
            let sc = &Matrix::outer(alg.field(), &a2.coords, &b.apply(&a1.coords)).scale(&two) - &alg.left_op(a0);
            let tc = &Matrix::outer(alg.field(), &a1.coords, &b.apply(&a2.coords)).scale(&two) - &alg.right_op(a0);
            &sc == sj(j) && &tc == tj(j)
        }),
    );
    rep.record("sigma-theta.square-is-theta", first(&|j| &(sj(j + 2) * sj(j + 1)) == tj(j)));
    rep.record("sigma-theta.action-on-a", first(&|j| &sj(j).act(s.a(j + 1)) == s.a(j + 2)));
    Ok(SigmaThetaPair { sigma, theta, report: rep })
}

/// Σ-triple b_m = g_{m+shift} a_m.
fn shifted_action(g: &TrialityTriple, a: &SigmaTriple, shift: i64) -> Result<SigmaTriple> {
    let b: [Element; 3] = std::array::from_fn(|s| g.g(s as i64 + 1 + shift).act(a.a(s as i64 + 1)));
    let [b1, b2, b3] = b;
    verify_sigma(&a.alg, b1, b2, b3)
}

/// ga ∈ Σ and the twisted conjugation laws for all j, k:
/// g_j θ_k(a) g_{j+1}⁻¹ = θ_k(b) with b_m = g_{m+j−k−1}a_m, and
/// g_j σ_k(a) g_{j+2}⁻¹ = σ_k(b) with b_m = g_{m+j−k+1}a_m.
pub fn conjugation_law(g: &TrialityTriple, a: &SigmaTriple) -> Result<Report> {
    if g.algebra().fingerprint() != a.alg.fingerprint() {
        return Err(Error::AlgebraMismatch);
    }
    let mut rep = Report::new(a.alg.name());
    let orbit = shifted_action(g, a, 0);
    rep.record("sigma.orbit", orbit.as_ref().err().map(|e| e.to_string()));
    let inv: Vec<Matrix> = g.maps().iter().map(|m| m.inverse()).collect::<Result<_>>()?;
    let gi = |j: i64| &inv[idx(j)];
    let (mut wt, mut ws) = (None, None);
    for j in 1..=3i64 {
        for k in 1..=3i64 {
            let bt = shifted_action(g, a, j - k - 1)?;
            if &(g.g(j) * &a.theta(k)) * gi(j + 1) != bt.theta(k) && wt.is_none() {
                wt = Some(format!("j = {j}, k = {k}"));
            }
            let bs = shifted_action(g, a, j - k + 1)?;
            if &(g.g(j) * &a.sigma(k)) * gi(j + 2) != bs.sigma(k) && ws.is_none() {
                ws = Some(format!("j = {j}, k = {k}"));
            }
        }
    }
    rep.record("sigma.conj-theta", wt);
    rep.record("sigma.conj-sigma", ws);
    Ok(rep)
}

/// The j = k specialisation as printed, with (φg)a for θ and (φ²g)a for σ,
/// where (φⁿg)a has components g_{m+n}a_m.
pub fn conjugation_law_printed(g: &TrialityTriple, a: &SigmaTriple) -> Result<Report> {
    let mut rep = Report::new(a.alg.name());
    let inv: Vec<Matrix> = g.maps().iter().map(|m| m.inverse()).collect::<Result<_>>()?;
    let gi = |j: i64| &inv[idx(j)];
    let bt = shifted_action(g, a, 1)?;
    let bs = shifted_action(g, a, 2)?;
    let first = |f: &dyn Fn(i64) -> bool| (1..=3).find(|&j| !f(j)).map(|j| format!("j = {j}"));
    rep.record("sigma.conj-theta-printed", first(&|j| &(g.g(j) * &a.theta(j)) * gi(j + 1) == bt.theta(j)));
    rep.record("sigma.conj-sigma-printed", first(&|j| &(g.g(j) * &a.sigma(j)) * gi(j + 2) == bs.sigma(j)));
    Ok(rep)
}

/// σ(a)θ(b), θ(a)σ(b), σ(a)σ(b)σ(c) and θ(a)θ(b)θ(c), each certified.
pub fn normal_subgroup_generators(a: &SigmaTriple, b: &SigmaTriple, c: &SigmaTriple) -> Result<Vec<TrialityTriple>> {
    let ta = theorem25_triples(a)?;
    let tb = theorem25_triples(b)?;
    let tc = theorem25_triples(c)?;
    Ok(vec![
        trig_mul(&ta.sigma, &tb.theta)?,
        trig_mul(&ta.theta, &tb.sigma)?,
        trig_mul(&trig_mul(&ta.sigma, &tb.sigma)?, &tc.sigma)?,
        trig_mul(&trig_mul(&ta.theta, &tb.theta)?, &tc.theta)?,
    ])
}

/// p ∈ Λ(a) together with q_j = a_{j+1}p_{j+2}.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaVector {
    pub base: SigmaTriple,
    pub p: [Element; 3],
    pub q: [Element; 3],
}

impl LambdaVector {
    pub fn p(&self, j: i64) -> &Element {
        &self.p[idx(j)]
    }

    pub fn q(&self, j: i64) -> &Element {
        &self.q[idx(j)]
    }

    pub fn is_zero(&self) -> bool {
        self.p.iter().all(Element::is_zero)
    }

    /// (a, p) ↦ ((a₂,a₃,a₁), (p₂,p₃,p₁))
    pub fn cycled(&self) -> LambdaVector {
        let [p1, p2, p3] = self.p.clone();
        let [q1, q2, q3] = self.q.clone();
        LambdaVector { base: self.base.cycled(), p: [p2, p3, p1], q: [q2, q3, q1] }
    }
}

/// Checks the defining conditions of Λ(a) and packages p with its q-vector.
pub fn lambda_vector(a: &SigmaTriple, p: [Element; 3]) -> Result<LambdaVector> {
    let alg = &a.alg;
    for x in &p {
        alg.expect_elem(x)?;
    }
    let pj = |j: i64| &p[idx(j)];
    for j in 1..=3i64 {
        if &(&alg.mul(a.a(j), pj(j + 1)) + &alg.mul(pj(j), a.a(j + 1))) != pj(j + 2) {
            return Err(Error::RelationFails { relation: "Λ(a) recursion".into(), witness: format!("j = {j}") });
        }
        if !alg.form_eval(pj(j), a.a(j))?.is_zero() {
            return Err(Error::RelationFails { relation: "Λ(a) orthogonality".into(), witness: format!("j = {j}") });
        }
    }
    let q = std::array::from_fn(|s| {
        let j = s as i64 + 1;
        alg.mul(a.a(j + 1), pj(j + 2))
    });
    Ok(LambdaVector { base: a.clone(), p, q })
}

/// Lemma-level identities relating p and q.
pub fn lambda_report(v: &LambdaVector) -> Result<Report> {
    let a = &v.base;
    let alg = &a.alg;
    let mut rep = Report::new(alg.name());
    let first = |f: &dyn Fn(i64) -> bool| (1..=3).find(|&j| !f(j)).map(|j| format!("j = {j}"));
    rep.record(
        "lambda.relation",
        first(&|j| &(&alg.mul(a.a(j), v.p(j + 1)) + &alg.mul(v.p(j), a.a(j + 1))) == v.p(j + 2)),
    );
    rep.record("lambda.orthogonal", first(&|j| alg.inner(v.p(j), a.a(j)).is_zero()));
    rep.record(
        "lambda.q-forms",
        first(&|j| v.q(j) == &alg.mul(a.a(j + 1), v.p(j + 2)) && v.q(j) == &(v.p(j) - &alg.mul(v.p(j + 1), a.a(j + 2)))),
    );
    rep.record("lambda.q-orthogonal", first(&|j| alg.inner(v.q(j), a.a(j)).is_zero()));
    rep.record(
        "lambda.q-relation",
        first(&|j| &(&alg.mul(a.a(j), v.q(j + 1)) + &alg.mul(v.q(j), a.a(j + 1))) == v.q(j + 2)),
    );
    rep.record(
        "lambda.inverse",
        first(&|j| v.p(j) == &alg.mul(v.q(j + 1), a.a(j + 2)) && v.p(j) == &(v.q(j) - &alg.mul(a.a(j + 1), v.q(j + 2)))),
    );
    Ok(rep)
}

fn lambda_from_pair(a: &SigmaTriple, p1: Element, p2: Element) -> Result<LambdaVector> {
    let p3 = &a.alg.mul(a.a(1), &p2) + &a.alg.mul(&p1, a.a(2));
    lambda_vector(a, [p1, p2, p3])
}

fn check_lemma(v: LambdaVector) -> Result<LambdaVector> {
    let rep = lambda_report(&v)?;
    if let Some(c) = rep.failures().next() {
        return Err(Error::RelationFails { relation: c.id.clone(), witness: c.witness.clone().unwrap_or_default() });
    }
    Ok(v)
}

/// Basis of Λ(a): (p₁, p₂) with ⟨p₁|a₁⟩ = ⟨p₂|a₂⟩ = 0 and p₃ = a₁p₂ + p₁a₂.
pub fn lambda_space(a: &SigmaTriple) -> Result<Vec<LambdaVector>> {
    let alg = &a.alg;
    let (n, f) = (alg.dim(), alg.field());
    let b = alg.form()?;
    let ba1 = b.apply(&a.a(1).coords);
    let ba2 = b.apply(&a.a(2).coords);
    let cons = Matrix::from_fn(f, 2, 2 * n, |r, c| match (r, c < n) {
        (0, true) => ba1[c].clone(),
        (1, false) => ba2[c - n].clone(),
        _ => f.zero(),
    });
    cons.nullspace()
        .into_iter()
        .map(|v| {
            let p1 = Element::new(v[..n].to_vec());
            let p2 = Element::new(v[n..].to_vec());
            check_lemma(lambda_from_pair(a, p1, p2)?)
        })
        .collect()
}

/// Basis of the subspace of Λ(a) with p₃ = 0.
pub fn lambda_space_p3_zero(a: &SigmaTriple) -> Result<Vec<LambdaVector>> {
    let alg = &a.alg;
    let (n, f) = (alg.dim(), alg.field());
    let b = alg.form()?;
    let ba1 = b.apply(&a.a(1).coords);
    let ba2 = b.apply(&a.a(2).coords);
    // p₃ = R(a₂)p₁ + L(a₁)p₂
    let (r2, l1) = (alg.right_op(a.a(2)), alg.left_op(a.a(1)));
    let cons = Matrix::from_fn(f, n + 2, 2 * n, |r, c| match r {
        0 if c < n => ba1[c].clone(),
        1 if c >= n => ba2[c - n].clone(),
        0 | 1 => f.zero(),
        _ if c < n => r2.get(r - 2, c).clone(),
        _ => l1.get(r - 2, c - n).clone(),
    });
    cons.nullspace()
        .into_iter()
        .map(|v| check_lemma(lambda_from_pair(a, Element::new(v[..n].to_vec()), Element::new(v[n..].to_vec()))?))
        .collect()
}

/// D_j(a,p) = R(a_{j+1})L(p_{j+1}) + L(a_j)R(q_j), i.e. x ↦ (p_{j+1}x)a_{j+1} + a_j(xq_j).
pub fn d_matrices(v: &LambdaVector) -> [Matrix; 3] {
    let (a, alg) = (&v.base, &v.base.alg);
    std::array::from_fn(|s| {
        let j = s as i64 + 1;
        &(&alg.right_op(a.a(j + 1)) * &alg.left_op(v.p(j + 1))) + &(&alg.left_op(a.a(j)) * &alg.right_op(v.q(j)))
    })
}

/// The two alternative expressions of D_j(a,p) through rank-two parts.
pub fn d_matrices_alternative(v: &LambdaVector) -> Result<([Matrix; 3], [Matrix; 3])> {
    let (a, alg) = (&v.base, &v.base.alg);
    let b = alg.form()?;
    let f = alg.field();
    let two = f.int(2);
    // 2⟨u|x⟩w − 2⟨w|x⟩u
    let wedge = |w: &Element, u: &Element| {
        (&Matrix::outer(f, &w.coords, &b.apply(&u.coords)) - &Matrix::outer(f, &u.coords, &b.apply(&w.coords))).scale(&two)
    };
    let first = std::array::from_fn(|s| {
        let j = s as i64 + 1;
        &wedge(a.a(j + 2), v.q(j + 2)) + &(&alg.left_op(a.a(j)) * &alg.right_op(v.p(j)))
    });
    let second = std::array::from_fn(|s| {
        let j = s as i64 + 1;
        &wedge(a.a(j + 2), v.p(j + 2)) + &(&alg.right_op(a.a(j + 1)) * &alg.left_op(v.q(j + 1)))
    });
    Ok((first, second))
}

/// D(a,p) certified as a local triple; the alternative forms must agree.
pub fn local_d(v: &LambdaVector) -> Result<LocalTriple> {
    let d = d_matrices(v);
    let (da, db) = d_matrices_alternative(v)?;
    if let Some(j) = (0..3).find(|&j| d[j] != da[j] || d[j] != db[j]) {
        return Err(Error::RelationFails { relation: "D(a,p) forms".into(), witness: format!("j = {}", j + 1) });
    }
    let [d1, d2, d3] = d;
    verify_local(&v.base.alg, d1, d2, d3)
}

/// σ_j(a)θ_j(a + εp) over F[ε]/(ε²), returned per j.
pub fn dual_expansion(v: &LambdaVector) -> [DualMatrix; 3] {
    let (a, alg) = (&v.base, &v.base.alg);
    std::array::from_fn(|s| {
        let j = s as i64 + 1;
        let l = |k: i64| DualMatrix::new(alg.left_op(a.a(k)), alg.left_op(v.p(k)));
        let theta_b = &l(j + 2) * &l(j + 1);
        &DualMatrix::real(a.sigma(j)) * &theta_b
    })
}

/// Locality, agreement of the three forms, φ-cycling and the first-order expansion.
pub fn local_d_report(v: &LambdaVector) -> Result<Report> {
    let alg = &v.base.alg;
    let mut rep = Report::new(alg.name());
    rep.merge(lambda_report(v)?);
    let d = d_matrices(v);
    let (da, db) = d_matrices_alternative(v)?;
    let [d1, d2, d3] = d.clone();
    let local = verify_local(alg, d1, d2, d3);
    rep.record("lambda-d.local", local.as_ref().err().map(|e| e.to_string()));
    let first = |f: &dyn Fn(usize) -> bool| (0..3).find(|&j| !f(j)).map(|j| format!("j = {}", j + 1));
    rep.record("lambda-d.forms-agree", first(&|j| d[j] == da[j] && d[j] == db[j]));
    let shifted = d_matrices(&v.cycled());
    rep.record("lambda-d.phi-shift", first(&|j| shifted[j] == d[(j + 1) % 3]));
    let dual = dual_expansion(v);
    rep.record("lambda-d.dual-check", first(&|j| dual[j].re.is_identity() && dual[j].eps == d[j]));
    Ok(rep)
}

/// D_j(a,p) = d_j(u,v) with u = (p₂ + αa₂)/(2β), v = βa₂, when p₃ = 0.
pub fn express_d_as_standard(v: &LambdaVector, alpha: &Scalar, beta: &Scalar) -> Result<Report> {
    if !v.p(3).is_zero() {
        return Err(Error::PreconditionUnmet("p3 must vanish".into()));
    }
    if beta.is_zero() {
        return Err(Error::ZeroScale);
    }
    let (a, alg) = (&v.base, &v.base.alg);
    let two_beta = beta.try_mul(&alg.field().int(2))?;
    let u = (v.p(2) + &a.a(2).scale(alpha)).scale(&two_beta.inv()?);
    let w = a.a(2).scale(beta);
    let d = d_matrices(v);
    let mut mismatch = None;
    for j in 1..=3i64 {
        if d_map(alg, &D3Rule::SymmetricComposition, j, &u, &w)? != d[idx(j)] {
            mismatch.get_or_insert(format!("j = {j}"));
        }
    }
    let mut rep = Report::new(alg.name());
    rep.record("lambda-d.as-standard", mismatch);
    Ok(rep)
}

/// Δ(x,y) = 4(⟨x|y⟩² − ⟨x|x⟩⟨y|y⟩)
pub fn cubic_delta(alg: &Algebra, x: &Element, y: &Element) -> Result<Scalar> {
    let xy = alg.form_eval(x, y)?;
    let d = &xy.square() - &(&alg.form_eval(x, x)? * &alg.form_eval(y, y)?);
    Ok(&alg.field().int(4) * &d)
}

/// Cubic and quadratic laws of d_j(x,y); the d₃ cube is recorded both as
/// printed (Δ) and with the factor that holds (4Δ).
pub fn cubic_identity(alg: &Algebra, x: &Element, y: &Element) -> Result<Report> {
    let delta = cubic_delta(alg, x, y)?;
    let dp = derivation_pair(alg, x, y, &D3Rule::SymmetricComposition)?;
    let mut rep = Report::new(alg.name());
    let cube = |m: &Matrix| &(m * m) * m;
    let wit = |ok: bool, what: &str| (!ok).then(|| format!("{what}, x = {}, y = {}", alg.show(x), alg.show(y)));
    rep.record("cubic.d1-cube", wit(cube(dp.d(1)) == dp.d(1).scale(&delta), "d1"));
    rep.record("cubic.d2-cube", wit(cube(dp.d(2)) == dp.d(2).scale(&delta), "d2"));
    rep.record("cubic.d3-cube-printed", wit(cube(dp.d(3)) == dp.d(3).scale(&delta), "d3"));
    let four_delta = &alg.field().int(4) * &delta;
    rep.record("cubic.d3-cube-scaled", wit(cube(dp.d(3)) == dp.d(3).scale(&four_delta), "d3"));
    let id = alg.identity().scale(&delta);
    rep.record("cubic.d1-square", wit(dp.d(1) * dp.d(1) == id, "d1"));
    rep.record("cubic.d2-square", wit(dp.d(2) * dp.d(2) == id, "d2"));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{hurwitz, pseudo_octonion, para2, para_hurwitz, CayleyDicksonParams, PseudoOctonionSign};
    use crate::fields::Field;

    fn q() -> Field {
        Field::Rationals
    }

    fn pseudo_octonion_arc() -> Arc<Algebra> {
        Arc::new(pseudo_octonion(Field::quadratic(3).unwrap(), PseudoOctonionSign::Plus).unwrap())
    }

    fn pq() -> Arc<Algebra> {
        Arc::new(para_hurwitz(q(), 4, false).unwrap())
    }

    #[test]
    fn symmetric_composition_cases() {
        for d in [1, 2, 4, 8] {
            let a = para_hurwitz(q(), d, false).unwrap();
            let r = is_symmetric_composition(&a).unwrap();
            assert!(r.all_pass(), "{}", r.to_text());
        }
        let h = hurwitz(q(), &CayleyDicksonParams::standard(q(), 4, false).unwrap()).unwrap();
        let r = is_symmetric_composition(&h).unwrap();
        assert!(!r.passed("symcomp.flexible-norm"));
    }

    #[test]
    fn pseudo_octonion_is_symmetric_composition() {
        let r = is_symmetric_composition(&pseudo_octonion_arc()).unwrap();
        assert!(r.all_pass(), "{}", r.to_text());
    }

    #[test]
    fn sigma_examples() {
        let a = pq();
        let e = a.basis(0);
        let s = sigma_from_pair(&a, &e, &e).unwrap();
        assert_eq!(s.a(3), &e);
        let s = sigma_from_pair(&a, &a.basis(1), &a.basis(2)).unwrap();
        assert_eq!(s.a(3), &-&a.basis(3));
        let two = a.basis(1).scale(&q().int(2));
        assert!(matches!(sigma_from_pair(&a, &two, &e), Err(Error::NormNotOne(_))));
        let o = pseudo_octonion_arc();
        let s = sigma_from_pair(&o, &o.basis(0), &o.basis(1)).unwrap();
        assert_eq!(s.a(3), &o.basis(2));
    }

    #[test]
    fn theorem25_on_quaternion_triple() {
        let a = pq();
        let s = sigma_from_pair(&a, &a.basis(1), &a.basis(2)).unwrap();
        let t = theorem25_triples(&s).unwrap();
        assert!(t.report.all_pass(), "{}", t.report.to_text());
        assert!(trig_mul(&t.sigma, &t.theta).unwrap().is_identity());
        let e = sigma_from_pair(&a, &a.basis(0), &a.basis(0)).unwrap();
        let te = theorem25_triples(&e).unwrap();
        assert!(te.sigma.is_identity() && te.theta.is_identity());
    }

    #[test]
    fn conjugation_law_general_and_printed() {
        let a = pq();
        let s = sigma_from_pair(&a, &a.basis(1), &a.basis(2)).unwrap();
        let b = sigma_from_pair(&a, &a.basis(2), &a.basis(3)).unwrap();
        let g = theorem25_triples(&b).unwrap().sigma;
        let rep = conjugation_law(&g, &s).unwrap();
        assert!(rep.all_pass(), "{}", rep.to_text());
        let k = TrialityTriple::klein(&a, 3);
        assert!(conjugation_law(&k, &s).unwrap().all_pass());
        let id = TrialityTriple::identity(&a);
        assert!(conjugation_law_printed(&id, &s).unwrap().all_pass());
    }

    #[test]
    fn lambda_dimensions_and_d() {
        let a = pq();
        let s = sigma_from_pair(&a, &a.basis(1), &a.basis(2)).unwrap();
        let basis = lambda_space(&s).unwrap();
        assert_eq!(basis.len(), 6);
        for v in &basis {
            let r = local_d_report(v).unwrap();
            assert!(r.all_pass(), "{}", r.to_text());
        }
        let g = Arc::new(crate::constructors::ground(q()));
        let s1 = sigma_from_pair(&g, &g.basis(0), &g.basis(0)).unwrap();
        assert!(lambda_space(&s1).unwrap().is_empty());
    }

    #[test]
    fn d_as_standard_on_quaternions() {
        let a = pq();
        let s = sigma_from_pair(&a, &a.basis(1), &a.basis(2)).unwrap();
        let sub = lambda_space_p3_zero(&s).unwrap();
        assert!(!sub.is_empty());
        for v in &sub {
            for (al, be) in [(0, 1), (2, 3), (-1, -2)] {
                let r = express_d_as_standard(v, &q().int(al), &q().int(be)).unwrap();
                assert!(r.all_pass(), "{}", r.to_text());
            }
        }
    }

    #[test]
    fn pseudo_octonion_worked_instance() {
        let o = pseudo_octonion_arc();
        let s = sigma_from_pair(&o, &o.basis(0), &o.basis(1)).unwrap();
        let p = [o.basis(7), o.basis(7), &o.basis(0) + &o.basis(1)];
        let v = lambda_vector(&s, p).unwrap();
        let r = local_d_report(&v).unwrap();
        assert!(r.all_pass(), "{}", r.to_text());
    }

    #[test]
    fn cubic_on_para2() {
        let a = para2(q());
        let r = cubic_identity(&a, &a.basis(0), &a.basis(1)).unwrap();
        assert_eq!(cubic_delta(&a, &a.basis(0), &a.basis(1)).unwrap(), q().int(-4));
        assert!(r.passed("cubic.d1-square") && r.passed("cubic.d3-cube-scaled"));
    }
}
