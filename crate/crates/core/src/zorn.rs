//! Para-Zorn vector matrices: the scaling families ρ_j(λ), the slot swap π,
//! lifts of double automorphisms of B and the local triple s.
//!
//! Coordinates follow `constructors::para_zorn`: α, x(B), y(B), β.

use crate::algebra::{bilinear, Algebra, Element};
use crate::constructors::{conjugate, para_zorn, ZornCoefficients};
use crate::error::{Error, Result};
use crate::fields::{Field, Scalar};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::triality::{idx, triality_witness, trig_mul, verify_local, verify_triality, LocalTriple, TrialityTriple};
use std::fmt;
use std::sync::Arc;

/// dim B of a para-Zorn algebra, read off its shape and labels. The unital
/// split Zorn algebra shares the labels and is rejected.
pub fn block_dim(alg: &Algebra) -> Result<usize> {
    let n = alg.dim();
    let labels = alg.labels();
    if n < 2 || !n.is_multiple_of(2) || labels[0] != "alpha" || labels[n - 1] != "beta" || alg.unit().is_ok() {
        return Err(Error::PreconditionUnmet(format!("{} is not a para-Zorn algebra", alg.name())));
    }
    Ok((n - 2) / 2)
}

/// [[α, x], [y, β]] with x, y ∈ B.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZornElement {
    pub alpha: Scalar,
    pub x: Vec<Scalar>,
    pub y: Vec<Scalar>,
    pub beta: Scalar,
}

impl ZornElement {
    pub fn from_element(alg: &Algebra, v: &Element) -> Result<ZornElement> {
        let nb = block_dim(alg)?;
        alg.expect_elem(v)?;
        let c = &v.coords;
        Ok(ZornElement {
            alpha: c[0].clone(),
            x: c[1..1 + nb].to_vec(),
            y: c[1 + nb..1 + 2 * nb].to_vec(),
            beta: c[2 * nb + 1].clone(),
        })
    }

    pub fn to_element(&self) -> Element {
        let mut c = vec![self.alpha.clone()];
        c.extend(self.x.iter().cloned());
        c.extend(self.y.iter().cloned());
        c.push(self.beta.clone());
        Element::new(c)
    }

    /// Diagonal element diag(α, β).
    pub fn diagonal(field: Field, nb: usize, alpha: Scalar, beta: Scalar) -> ZornElement {
        ZornElement { alpha, x: vec![field.zero(); nb], y: vec![field.zero(); nb], beta }
    }
}

impl fmt::Display for ZornElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vec = |v: &[Scalar]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ");
        write!(f, "[[{}, ({})], [({}), {}]]", self.alpha, vec(&self.x), vec(&self.y), self.beta)
    }
}

/// diag(a, x·1_B, y·1_B, b)
fn block_diag(nb: usize, a: &Scalar, x: &Scalar, y: &Scalar, b: &Scalar) -> Matrix {
    let mut d = vec![a.clone()];
    d.extend(std::iter::repeat_n(x.clone(), nb));
    d.extend(std::iter::repeat_n(y.clone(), nb));
    d.push(b.clone());
    Matrix::diagonal(a.field(), &d)
}

/// ρ_j(λ) as a matrix; j is taken mod 3.
pub fn rho_map(nb: usize, j: i64, lambda: &Scalar) -> Result<Matrix> {
    if lambda.is_zero() {
        return Err(Error::ZeroScale);
    }
    let f = lambda.field();
    let inv = lambda.inv()?;
    let one = f.one();
    Ok(match idx(j) {
        0 => block_diag(nb, lambda, lambda, &inv, &inv),
        1 => block_diag(nb, lambda, &inv, lambda, &inv),
        _ => block_diag(nb, &inv.square(), &one, &one, &lambda.square()),
    })
}

fn rho_maps(nb: usize, lambda: &Scalar) -> Result<[Matrix; 3]> {
    Ok([rho_map(nb, 1, lambda)?, rho_map(nb, 2, lambda)?, rho_map(nb, 3, lambda)?])
}

fn failing_slot(ok: impl IntoIterator<Item = bool>) -> Option<String> {
    ok.into_iter().position(|b| !b).map(|s| format!("j = {}", s + 1))
}

/// Multiplicative and commutation laws of ρ for one pair (μ, ν).
pub fn rho_laws(alg: &Algebra, mu: &Scalar, nu: &Scalar) -> Result<Report> {
    let nb = block_dim(alg)?;
    let rm = rho_maps(nb, mu)?;
    let rn = rho_maps(nb, nu)?;
    let rmn = rho_maps(nb, &(mu * nu))?;
    let mut report = Report::new(alg.name());
    report.record("zorn.rho-homomorphism", failing_slot((0..3).map(|s| &rm[s] * &rn[s] == rmn[s])));
    let mut bad = None;
    for s in 0..3 {
        for t in 0..3 {
            if bad.is_none() && &rm[s] * &rn[t] != &rn[t] * &rm[s] {
                bad = Some(format!("j = {}, k = {}", s + 1, t + 1));
            }
        }
    }
    report.record("zorn.rho-commute", bad);
    Ok(report)
}

/// ρ(λ) certified in Trig(A), with the group laws at λ.
pub fn zorn_rho(alg: &Arc<Algebra>, lambda: &Scalar) -> Result<(TrialityTriple, Report)> {
    let nb = block_dim(alg)?;
    let maps = rho_maps(nb, lambda)?;
    let f = alg.field();
    let mut report = Report::new(alg.name());
    let triple = verify_triality(alg, maps[0].clone(), maps[1].clone(), maps[2].clone());
    report.record("zorn.rho-global", triple.as_ref().err().map(|e| e.to_string()));
    let triple = triple?;

    let unit = rho_maps(nb, &f.one())?;
    report.record("zorn.rho-unit", failing_slot(unit.iter().map(Matrix::is_identity)));
    report.merge(rho_laws(alg, lambda, lambda)?);
    report.merge(rho_laws(alg, lambda, &lambda.inv()?)?);
    report.check("zorn.rho-product", (&(&maps[0] * &maps[1]) * &maps[2]).is_identity(), || "product ≠ 1".into());
    if alg.has_involution() {
        let inv = rho_maps(nb, &lambda.inv()?)?;
        let ok: Vec<bool> = (0..3)
            .map(|s| {
                let j = s as i64 + 1;
                alg.conjugate_map(&maps[s]).map(|c| c == inv[idx(3 - j)])
            })
            .collect::<Result<_>>()?;
        report.record("zorn.rho-involution", failing_slot(ok));
    }
    Ok((triple, report))
}

/// Diagonal elements e = diag(1, 1), g(λ) = diag(λ, λ⁻¹), h(λ) = diag(λ⁻¹, λ).
pub fn zorn_egh(alg: &Algebra, lambda: &Scalar) -> Result<[Element; 3]> {
    let nb = block_dim(alg)?;
    if lambda.is_zero() {
        return Err(Error::ZeroScale);
    }
    let f = alg.field();
    let inv = lambda.inv()?;
    Ok([
        ZornElement::diagonal(f, nb, f.one(), f.one()).to_element(),
        ZornElement::diagonal(f, nb, lambda.clone(), inv.clone()).to_element(),
        ZornElement::diagonal(f, nb, inv, lambda.clone()).to_element(),
    ])
}

/// Writes ρ_j(λ) as products of two multiplication operators by e, g(λ), h(λ).
/// The right-multiplication factorisation holds with the factors in the order
/// R(h)R(e), R(e)R(g), R(g)R(h); the opposite order is reported separately.
pub fn zorn_operator_factorization(alg: &Arc<Algebra>, lambda: &Scalar) -> Result<Report> {
    let nb = block_dim(alg)?;
    let [e, g, h] = zorn_egh(alg, lambda)?;
    let rho = rho_maps(nb, lambda)?;
    let n = alg.dim();
    let mut report = Report::new(alg.name());

    let mut swap = Matrix::identity(alg.field(), n);
    swap.set(0, 0, alg.field().zero());
    swap.set(n - 1, n - 1, alg.field().zero());
    swap.set(0, n - 1, alg.field().one());
    swap.set(n - 1, 0, alg.field().one());
    let (le, re) = (alg.left_op(&e), alg.right_op(&e));
    report.check("zorn.unit-swap", le == swap && re == swap, || {
        format!("L(e) = swap: {}, R(e) = swap: {}", le == swap, re == swap)
    });

    let rel = [alg.mul(&e, &g) == h, alg.mul(&g, &h) == e, alg.mul(&h, &e) == g];
    report.check("zorn.sigma-like", rel.iter().all(|b| *b), || {
        let names = ["eg = h", "gh = e", "he = g"];
        let bad: Vec<&str> = names.iter().zip(rel).filter(|(_, ok)| !ok).map(|(s, _)| *s).collect();
        format!("fails: {}", bad.join(", "))
    });

    let l = |u: &Element, v: &Element| &alg.left_op(u) * &alg.left_op(v);
    let r = |u: &Element, v: &Element| &alg.right_op(u) * &alg.right_op(v);
    let left = [l(&e, &g), l(&h, &e), l(&g, &h)];
    let right = [r(&h, &e), r(&e, &g), r(&g, &h)];
    let printed = [r(&e, &h), r(&g, &e), r(&h, &g)];
    report.record("zorn.factor-left", failing_slot((0..3).map(|s| left[s] == rho[s])));
    report.record("zorn.factor-right", failing_slot((0..3).map(|s| right[s] == rho[s])));
    report.record("zorn.factor-right-printed", failing_slot((0..3).map(|s| printed[s] == rho[s])));
    Ok(report)
}

/// π swaps the x and y slots.
pub fn pi_map(alg: &Algebra) -> Result<Matrix> {
    let nb = block_dim(alg)?;
    let n = alg.dim();
    let f = alg.field();
    Ok(Matrix::from_fn(f, n, n, |r, c| {
        let hit = match r {
            0 => c == 0,
            _ if r == n - 1 => c == n - 1,
            _ if r <= nb => c == r + nb,
            _ => c + nb == r,
        };
        if hit { f.one() } else { f.zero() }
    }))
}

/// Swaps α ↔ β and x ↔ y together.
pub fn full_swap_map(alg: &Algebra) -> Result<Matrix> {
    let mut p = pi_map(alg)?;
    let n = alg.dim();
    let f = alg.field();
    p.set(0, 0, f.zero());
    p.set(n - 1, n - 1, f.zero());
    p.set(0, n - 1, f.one());
    p.set(n - 1, 0, f.one());
    Ok(p)
}

/// π and its relations at λ. π alone is an automorphism only when B = 0; the
/// map that also swaps α ↔ β is one in general and is certified alongside.
pub fn zorn_pi(alg: &Arc<Algebra>, lambda: &Scalar) -> Result<(Matrix, Report)> {
    let nb = block_dim(alg)?;
    let p = pi_map(alg)?;
    let mut report = Report::new(alg.name());
    report.record("zorn.pi-automorphism-printed", alg.automorphism_witness(&p));
    report.record("zorn.swap-automorphism", alg.automorphism_witness(&full_swap_map(alg)?));
    report.check("zorn.pi-square", (&p * &p).is_identity(), || "π² ≠ 1".into());
    let rho = rho_maps(nb, lambda)?;
    let ok: Vec<bool> = (0..3)
        .map(|s| {
            let j = s as i64 + 1;
            &(&p * &rho[s]) * &p == rho[idx(3 - j)]
        })
        .collect();
    report.record("zorn.pi-conjugation", failing_slot(ok));
    Ok((p, report))
}

/// Closure of {ρ(λ) : λ ∈ F*} under the componentwise product on a finite
/// field, and the same question for the set extended by π₀ = (π, π, π).
pub fn zorn_rho_group(alg: &Arc<Algebra>) -> Result<Report> {
    block_dim(alg)?;
    let f = alg.field();
    let elems = f.elements().ok_or(Error::FieldNotFinite(f))?;
    let mut members = Vec::new();
    for l in elems.iter().filter(|l| !l.is_zero()) {
        members.push(zorn_rho(alg, l)?.0);
    }
    let mut report = Report::new(alg.name());
    let mut bad = None;
    'outer: for g in &members {
        for h in &members {
            let gh = trig_mul(g, h)?;
            if !members.contains(&gh) {
                bad = Some(format!("product of {} and {} leaves the set", g, h));
                break 'outer;
            }
        }
    }
    report.record("zorn.rho-group-closure", bad);

    let p = pi_map(alg)?;
    let pi0 = [p.clone(), p.clone(), p];
    report.record("zorn.pi-group-printed", triality_witness(alg, &pi0).map(|w| format!("π₀ ∉ Trig(A): {w}")));
    Ok(report)
}

/// Double automorphism (ξ, η) of B with the pairing condition.
#[derive(Clone, Debug)]
pub struct DoubleAutomorphism {
    pub xi: Matrix,
    pub eta: Matrix,
    pub report: Report,
}

impl DoubleAutomorphism {
    /// Checks ξ(xy) = (ηx)(ηy), η(xy) = (ξx)(ξy) (vacuous without a product)
    /// and (ξx|ηy) = (x|y) on basis pairs.
    pub fn certify(b: &ZornCoefficients, xi: Matrix, eta: Matrix) -> Result<DoubleAutomorphism> {
        let nb = b.dim();
        for m in [&xi, &eta] {
            if m.rows() != nb || m.cols() != nb {
                return Err(Error::DimensionMismatch { expected: nb, got: m.rows() });
            }
        }
        let mut report = Report::new(b.name.clone());
        if let Some(prod) = &b.product {
            let w = prod
                .find_pair(|i, j| {
                    let (x, y) = (prod.basis(i), prod.basis(j));
                    let xy = prod.mul_basis(i, j);
                    xi.act(&xy) == prod.mul(&eta.act(&x), &eta.act(&y))
                        && eta.act(&xy) == prod.mul(&xi.act(&x), &xi.act(&y))
                })
                .map(|t| prod.pair_witness(t));
            if let Some(w) = w {
                return Err(Error::RelationFails { relation: "double automorphism".into(), witness: w });
            }
        }
        report.record("zorn.double-automorphism", None);
        for i in 0..nb {
            for j in 0..nb {
                let (x, y) = (Element::basis(b.form.field(), nb, i), Element::basis(b.form.field(), nb, j));
                if bilinear(&b.form, &xi.act(&x), &eta.act(&y)) != bilinear(&b.form, &x, &y) {
                    return Err(Error::PairingFails(format!("basis pair ({}, {})", i + 1, j + 1)));
                }
            }
        }
        report.record("zorn.double-pairing", None);
        Ok(DoubleAutomorphism { xi, eta, report })
    }
}

/// P = diag(1, ξ, η, 1), certified as an automorphism of the para-Zorn algebra.
pub fn zorn_double_lift(alg: &Arc<Algebra>, d: &DoubleAutomorphism) -> Result<(Matrix, Report)> {
    let nb = block_dim(alg)?;
    if d.xi.rows() != nb {
        return Err(Error::DimensionMismatch { expected: nb, got: d.xi.rows() });
    }
    let n = alg.dim();
    let f = alg.field();
    let p = Matrix::from_fn(f, n, n, |r, c| {
        if (r == 0 && c == 0) || (r == n - 1 && c == n - 1) {
            f.one()
        } else if (1..=nb).contains(&r) && (1..=nb).contains(&c) {
            d.xi.get(r - 1, c - 1).clone()
        } else if (nb + 1..=2 * nb).contains(&r) && (nb + 1..=2 * nb).contains(&c) {
            d.eta.get(r - 1 - nb, c - 1 - nb).clone()
        } else {
            f.zero()
        }
    });
    let mut report = d.report.clone();
    report.algebra = alg.name().to_string();
    report.record("zorn.double-lift", alg.automorphism_witness(&p));
    Ok((p, report))
}

/// s₁ = diag(1, 1, −1, −1), s₂ = diag(1, −1, 1, −1), s₃ = diag(−2, 0, 0, 2).
pub fn zorn_s_triple(alg: &Arc<Algebra>) -> Result<(LocalTriple, Report)> {
    let nb = block_dim(alg)?;
    let f = alg.field();
    let (one, neg, zero) = (f.one(), f.int(-1), f.zero());
    let s = [
        block_diag(nb, &one, &one, &neg, &neg),
        block_diag(nb, &one, &neg, &one, &neg),
        block_diag(nb, &f.int(-2), &zero, &zero, &f.int(2)),
    ];
    let mut report = Report::new(alg.name());
    let t = verify_local(alg, s[0].clone(), s[1].clone(), s[2].clone());
    report.record("zorn.s-local", t.as_ref().err().map(|e| e.to_string()));
    let t = t?;
    report.check("zorn.s-sum", (&(&s[0] + &s[1]) + &s[2]).is_zero(), || "s₁ + s₂ + s₃ ≠ 0".into());
    let comm = (0..3).all(|a| (0..3).all(|b| s[a].commutator(&s[b]).is_zero()));
    report.check("zorn.s-commute", comm, || "some [s_j, s_k] ≠ 0".into());
    if alg.has_involution() {
        let ok: Vec<bool> = (0..3)
            .map(|k| {
                let j = k as i64 + 1;
                alg.conjugate_map(&s[k]).map(|c| c == -&s[idx(3 - j)])
            })
            .collect::<Result<_>>()?;
        report.record("zorn.s-involution", failing_slot(ok));
    }
    Ok((t, report))
}

/// Checks the conjugate algebra of para_zorn(B, k) against the Zorn product
/// written out directly, and the conjugate triality relation for ρ(λ) there:
/// conj(ρ_j)(x*y) = (ρ_{j+1}x)*(ρ_{j+2}y).
pub fn zorn_conjugate_report(b: &ZornCoefficients, k: &Scalar, lambda: &Scalar) -> Result<Report> {
    let alg = para_zorn(b, k)?;
    let star = conjugate(&alg)?;
    let nb = b.dim();
    let f = alg.field();
    let bar = |v: &[Scalar]| b.involution.apply(v);
    let bmul = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        match &b.product {
            Some(p) => p.mul(&Element::new(u.to_vec()), &Element::new(v.to_vec())).coords,
            None => vec![f.zero(); nb],
        }
    };
    let bform = |u: &[Scalar], v: &[Scalar]| bilinear(&b.form, &Element::new(u.to_vec()), &Element::new(v.to_vec()));
    // X*Y = [[α₁α₂ + (x₁|y₂), conj(α₁x₂ + β₂x₁ + k y₁y₂)], [conj(α₂y₁ + β₁y₂ + k x₁x₂), β₁β₂ + (y₁|x₂)]]
    let standard = |u: &ZornElement, v: &ZornElement| -> ZornElement {
        let yy = bmul(&u.y, &v.y);
        let xx = bmul(&u.x, &v.x);
        let xs: Vec<Scalar> =
            (0..nb).map(|t| &(&(&u.alpha * &v.x[t]) + &(&v.beta * &u.x[t])) + &(k * &yy[t])).collect();
        let ys: Vec<Scalar> =
            (0..nb).map(|t| &(&(&v.alpha * &u.y[t]) + &(&u.beta * &v.y[t])) + &(k * &xx[t])).collect();
        ZornElement {
            alpha: &(&u.alpha * &v.alpha) + &bform(&u.x, &v.y),
            x: bar(&xs),
            y: bar(&ys),
            beta: &(&u.beta * &v.beta) + &bform(&u.y, &v.x),
        }
    };
    let mut report = Report::new(star.name());
    let w = star
        .find_pair(|i, j| {
            let u = ZornElement::from_element(&alg, &alg.basis(i)).unwrap();
            let v = ZornElement::from_element(&alg, &alg.basis(j)).unwrap();
            star.mul_basis(i, j) == standard(&u, &v).to_element()
        })
        .map(|t| star.pair_witness(t));
    report.record("zorn.conjugate-standard", w);

    let rho = rho_maps(nb, lambda)?;
    let conj: Vec<Matrix> = rho.iter().map(|m| star.conjugate_map(m)).collect::<Result<_>>()?;
    let w = (0..3).find_map(|s| {
        star.find_pair(|i, j| {
            let lhs = conj[s].act(&star.mul_basis(i, j));
            lhs == star.mul(&rho[(s + 1) % 3].act(&star.basis(i)), &rho[(s + 2) % 3].act(&star.basis(j)))
        })
        .map(|t| format!("j = {}, {}", s + 1, star.pair_witness(t)))
    });
    report.record("zorn.conjugate-relation", w);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::para2;

    fn q(f: Field, n: i64) -> Scalar {
        f.int(n)
    }

    fn algebras(f: Field) -> Vec<(ZornCoefficients, Arc<Algebra>)> {
        let mut out = Vec::new();
        for b in [ZornCoefficients::plain(f, 0), ZornCoefficients::plain(f, 2), ZornCoefficients::from_algebra(&para2(f)).unwrap()] {
            for k in [1, 2] {
                let a = Arc::new(para_zorn(&b, &f.int(k)).unwrap());
                out.push((b.clone(), a));
            }
        }
        out
    }

    #[test]
    fn rho_family() {
        let f = Field::Rationals;
        for (_, a) in algebras(f) {
            for l in [1, 2, 3, -5] {
                let (t, r) = zorn_rho(&a, &q(f, l)).unwrap();
                assert!(r.all_pass(), "{}", r.to_text());
                assert_eq!(t.is_identity(), l == 1);
            }
            assert_eq!(zorn_rho(&a, &f.zero()).unwrap_err(), Error::ZeroScale);
        }
        let (_, a) = &algebras(f)[2];
        let x = ZornElement {
            alpha: q(f, 3),
            x: vec![q(f, 1), q(f, 2)],
            y: vec![q(f, 4), q(f, -2)],
            beta: q(f, 6),
        };
        let (t, _) = zorn_rho(a, &q(f, 2)).unwrap();
        let img = ZornElement::from_element(a, &t.g(1).act(&x.to_element())).unwrap();
        let half = f.ratio(1, 2).unwrap();
        assert_eq!(img.alpha, q(f, 6));
        assert_eq!(img.x, vec![q(f, 2), q(f, 4)]);
        assert_eq!(img.y, vec![q(f, 2), q(f, -1)]);
        assert_eq!(img.beta, &q(f, 6) * &half);
    }

    #[test]
    fn factorisations() {
        let f = Field::Rationals;
        for (_, a) in algebras(f) {
            let r = zorn_operator_factorization(&a, &q(f, 2)).unwrap();
            assert!(r.passed("zorn.factor-left") && r.passed("zorn.factor-right"), "{}", r.to_text());
            assert!(r.passed("zorn.sigma-like") && r.passed("zorn.unit-swap"));
            assert!(!r.passed("zorn.factor-right-printed"));
            // λ = 1: e = g = h, every factorisation is L(e)² = 1
            let r = zorn_operator_factorization(&a, &f.one()).unwrap();
            assert!(r.passed("zorn.factor-right-printed"));
        }
    }

    #[test]
    fn swap_maps() {
        let f = Field::Rationals;
        for (b, a) in algebras(f) {
            let (p, r) = zorn_pi(&a, &q(f, 2)).unwrap();
            assert!(r.passed("zorn.pi-square") && r.passed("zorn.pi-conjugation"));
            assert!(r.passed("zorn.swap-automorphism"));
            assert_eq!(r.passed("zorn.pi-automorphism-printed"), b.dim() == 0, "{}", r.to_text());
            let d = ZornElement::diagonal(f, b.dim(), q(f, 3), q(f, 7)).to_element();
            assert_eq!(p.act(&d), d);
        }
    }

    #[test]
    fn rho_group_over_f5() {
        let f = Field::prime(5).unwrap();
        for (b, a) in algebras(f) {
            let r = zorn_rho_group(&a).unwrap();
            assert!(r.passed("zorn.rho-group-closure"));
            assert_eq!(r.passed("zorn.pi-group-printed"), b.dim() == 0);
        }
        let (_, a) = &algebras(Field::Rationals)[0];
        assert!(matches!(zorn_rho_group(a), Err(Error::FieldNotFinite(_))));
    }

    #[test]
    fn double_lifts() {
        let f7 = Field::prime(7).unwrap();
        for (b, a) in algebras(f7) {
            let n = b.dim();
            let id = Matrix::identity(f7, n);
            let d = DoubleAutomorphism::certify(&b, id.clone(), id).unwrap();
            let (p, r) = zorn_double_lift(&a, &d).unwrap();
            assert!(p.is_identity() && r.all_pass());
            let w = f7.int(2);
            let d = DoubleAutomorphism::certify(&b, Matrix::scalar(f7, n, &w), Matrix::scalar(f7, n, &w.square())).unwrap();
            let (_, r) = zorn_double_lift(&a, &d).unwrap();
            assert!(r.all_pass(), "{}", r.to_text());
        }
        // ψ = diag(1, −1) on para2 is an isometric automorphism of order 2
        let f = Field::Rationals;
        let b = ZornCoefficients::from_algebra(&para2(f)).unwrap();
        let a = Arc::new(para_zorn(&b, &f.one()).unwrap());
        let psi = Matrix::diagonal(f, &[f.one(), f.int(-1)]);
        let d = DoubleAutomorphism::certify(&b, psi.clone(), psi).unwrap();
        assert!(zorn_double_lift(&a, &d).unwrap().1.all_pass());
        let two = Matrix::scalar(f, 2, &f.int(2));
        let e = DoubleAutomorphism::certify(&ZornCoefficients::plain(f, 2), two.clone(), two).unwrap_err();
        assert!(matches!(e, Error::PairingFails(_)));
    }

    #[test]
    fn s_triple() {
        let f = Field::Rationals;
        for (b, a) in algebras(f) {
            let (t, r) = zorn_s_triple(&a).unwrap();
            assert!(r.all_pass(), "{}", r.to_text());
            let x = ZornElement {
                alpha: q(f, 3),
                x: vec![q(f, 1); b.dim()],
                y: vec![q(f, 2); b.dim()],
                beta: q(f, 5),
            };
            let img = ZornElement::from_element(&a, &t.t(3).act(&x.to_element())).unwrap();
            assert_eq!(img, ZornElement::diagonal(f, b.dim(), q(f, -6), q(f, 10)));
        }
    }

    #[test]
    fn conjugate_algebra() {
        let f = Field::Rationals;
        for (b, _) in algebras(f) {
            for k in [1, 3] {
                let r = zorn_conjugate_report(&b, &f.int(k), &q(f, 2)).unwrap();
                assert!(r.all_pass(), "{}", r.to_text());
            }
        }
    }
}
