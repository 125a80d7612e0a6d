//! Triality on associative involutive algebras.
//!
//! The input is the associative algebra A* (product written x*y: matrices,
//! complex numbers, quaternions). Triples are certified on its conjugate
//! algebra A with xy = conj(x*y) = ȳ*x̄.

use crate::algebra::{Algebra, Element};
use crate::constructors::conjugate;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::triality::{idx, verify_local, verify_triality, LocalTriple, TrialityTriple};
use std::sync::Arc;

fn expect_associative(astar: &Algebra) -> Result<()> {
    match astar.associativity_witness() {
        Some(w) => Err(Error::NotAssociative(w)),
        None => Ok(()),
    }
}

/// (a₁, a₂, a₃) with ā_j*a_j = a_j*ā_j = e in an associative algebra.
#[derive(Clone, Debug)]
pub struct UnitaryTriple {
    astar: Arc<Algebra>,
    a: [Element; 3],
}

impl UnitaryTriple {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.astar
    }

    pub fn a(&self, j: i64) -> &Element {
        &self.a[idx(j)]
    }

    pub fn elements(&self) -> &[Element; 3] {
        &self.a
    }
}

pub fn unitary_triple(astar: &Arc<Algebra>, a1: Element, a2: Element, a3: Element) -> Result<UnitaryTriple> {
    expect_associative(astar)?;
    let e = astar.unit()?.clone();
    astar.involution()?;
    let a = [a1, a2, a3];
    for (s, x) in a.iter().enumerate() {
        astar.expect_elem(x)?;
        let xb = astar.bar(x);
        if astar.mul(&xb, x) != e || astar.mul(x, &xb) != e {
            return Err(Error::NotUnitary(format!("a{} = {}", s + 1, astar.show(x))));
        }
    }
    Ok(UnitaryTriple { astar: astar.clone(), a })
}

/// σ(a) certified on the conjugate algebra, with its report.
#[derive(Clone, Debug)]
pub struct AssocSigma {
    pub conj_alg: Arc<Algebra>,
    pub triple: TrialityTriple,
    pub report: Report,
}

/// x ↦ u*x*v in A*.
fn sandwich(astar: &Algebra, u: &Element, v: &Element) -> Matrix {
    &astar.left_op(u) * &astar.right_op(v)
}

fn first_slot(ok: &[bool; 3]) -> String {
    let j = ok.iter().position(|b| !b).map_or(0, |s| s + 1);
    format!("j = {j}")
}

/// σ_j(a)x = a_j*x*ā_{j+1}, certified in Trig(A).
pub fn assoc_sigma_triple(u: &UnitaryTriple) -> Result<AssocSigma> {
    let astar = &u.astar;
    let alg = Arc::new(conjugate(astar)?);
    let bar = |x: &Element| astar.bar(x);
    let maps: [Matrix; 3] = std::array::from_fn(|s| {
        let j = s as i64 + 1;
        sandwich(astar, u.a(j), &bar(u.a(j + 1)))
    });
    let mut report = Report::new(alg.name());
    report.record("assoc.unitary", None);
    let triple = match verify_triality(&alg, maps[0].clone(), maps[1].clone(), maps[2].clone()) {
        Ok(t) => {
            report.record("assoc.sigma-global", None);
            Some(t)
        }
        Err(e) => {
            report.record("assoc.sigma-global", Some(e.to_string()));
            None
        }
    };

    let inv: [bool; 3] = std::array::from_fn(|s| {
        let j = s as i64 + 1;
        let back = sandwich(astar, &bar(u.a(j)), u.a(j + 1));
        (&maps[s] * &back).is_identity()
    });
    report.check("assoc.sigma-inverse", inv.iter().all(|b| *b), || first_slot(&inv));

    let conj_maps: Vec<Matrix> = maps.iter().map(|m| alg.conjugate_map(m)).collect::<Result<_>>()?;
    let cj: [bool; 3] = std::array::from_fn(|s| {
        let j = s as i64 + 1;
        conj_maps[s] == sandwich(astar, u.a(j + 1), &bar(u.a(j)))
    });
    report.check("assoc.sigma-conjugate", cj.iter().all(|b| *b), || first_slot(&cj));

    // conj(σ_j)(x*y) = (σ_{j+1}x)*(σ_{j+2}y) in A*
    let n = astar.dim();
    let prod = (0..3).find_map(|s| {
        for p in 0..n {
            for q in 0..n {
                let (x, y) = (astar.basis(p), astar.basis(q));
                let lhs = conj_maps[s].act(&astar.mul(&x, &y));
                let rhs = astar.mul(&maps[(s + 1) % 3].act(&x), &maps[(s + 2) % 3].act(&y));
                if lhs != rhs {
                    return Some(format!("j = {}, {}", s + 1, astar.pair_witness((p, q))));
                }
            }
        }
        None
    });
    report.record("assoc.sigma-product", prod);

    let fact: [bool; 3] = std::array::from_fn(|s| {
        let j = s as i64 + 1;
        let left = &alg.left_op(u.a(j + 1)) * &alg.left_op(u.a(j));
        let right = &alg.right_op(&bar(u.a(j))) * &alg.right_op(&bar(u.a(j + 1)));
        left == maps[s] && right == maps[s]
    });
    report.check("assoc.sigma-factorisation", fact.iter().all(|b| *b), || first_slot(&fact));

    report.record("assoc.para-associative", para_associativity_witness(&alg)?);

    if u.a[0] == u.a[1] && u.a[1] == u.a[2] {
        let w = maps.iter().find_map(|m| alg.automorphism_witness(m));
        report.record("assoc.equal-automorphism", w);
    }

    let triple = match triple {
        Some(t) => t,
        None => {
            let w = report.get("assoc.sigma-global").and_then(|c| c.witness.clone()).unwrap_or_default();
            return Err(Error::RelationFails { relation: "global triality".into(), witness: w });
        }
    };
    Ok(AssocSigma { conj_alg: alg, triple, report })
}

/// First basis triple where conj(z)(xy) ≠ (yz)conj(x).
pub fn para_associativity_witness(alg: &Algebra) -> Result<Option<String>> {
    alg.involution()?;
    Ok(alg
        .find_triple(|i, j, k| {
            let (x, y, z) = (alg.basis(i), alg.basis(j), alg.basis(k));
            alg.mul(&alg.bar(&z), &alg.mul(&x, &y)) == alg.mul(&alg.mul(&y, &z), &alg.bar(&x))
        })
        .map(|t| alg.triple_witness(t)))
}

/// (p₁, p₂, p₃) with p̄_j = −p_j.
#[derive(Clone, Debug)]
pub struct SkewTriple {
    astar: Arc<Algebra>,
    p: [Element; 3],
}

impl SkewTriple {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.astar
    }

    pub fn p(&self, j: i64) -> &Element {
        &self.p[idx(j)]
    }
}

pub fn skew_triple(astar: &Arc<Algebra>, p1: Element, p2: Element, p3: Element) -> Result<SkewTriple> {
    expect_associative(astar)?;
    astar.involution()?;
    let p = [p1, p2, p3];
    for (s, x) in p.iter().enumerate() {
        astar.expect_elem(x)?;
        if astar.bar(x) != -x {
            return Err(Error::NotSkew(format!("p{} = {}", s + 1, astar.show(x))));
        }
    }
    Ok(SkewTriple { astar: astar.clone(), p })
}

#[derive(Clone, Debug)]
pub struct AssocLocal {
    pub conj_alg: Arc<Algebra>,
    pub triple: LocalTriple,
    pub report: Report,
}

/// d_j(p)x = p_j*x − x*p_{j+1}, certified as a local triple of A.
pub fn assoc_local_triple(p: &SkewTriple) -> Result<AssocLocal> {
    let astar = &p.astar;
    let alg = Arc::new(conjugate(astar)?);
    let commutator = |u: &Element, v: &Element| &astar.left_op(u) - &astar.right_op(v);
    let maps: [Matrix; 3] = std::array::from_fn(|s| {
        let j = s as i64 + 1;
        commutator(p.p(j), p.p(j + 1))
    });
    let mut report = Report::new(alg.name());
    report.record("assoc.skew", None);
    let triple = verify_local(&alg, maps[0].clone(), maps[1].clone(), maps[2].clone());
    report.record("assoc.local", triple.as_ref().err().map(|e| e.to_string()));
    let triple = triple?;

    let conj_maps: Vec<Matrix> = maps.iter().map(|m| alg.conjugate_map(m)).collect::<Result<_>>()?;
    let cj: [bool; 3] = std::array::from_fn(|s| {
        let j = s as i64 + 1;
        conj_maps[s] == commutator(p.p(j + 1), p.p(j))
    });
    report.check("assoc.local-conjugate", cj.iter().all(|b| *b), || first_slot(&cj));

    // conj(d_j)(x*y) = (d_{j+1}x)*y + x*(d_{j+2}y) in A*
    let n = astar.dim();
    let prod = (0..3).find_map(|s| {
        for a in 0..n {
            for b in 0..n {
                let (x, y) = (astar.basis(a), astar.basis(b));
                let lhs = conj_maps[s].act(&astar.mul(&x, &y));
                let rhs = &astar.mul(&maps[(s + 1) % 3].act(&x), &y) + &astar.mul(&x, &maps[(s + 2) % 3].act(&y));
                if lhs != rhs {
                    return Some(format!("j = {}, {}", s + 1, astar.pair_witness((a, b))));
                }
            }
        }
        None
    });
    report.record("assoc.local-product", prod);

    if p.p[0] == p.p[1] && p.p[1] == p.p[2] {
        report.record("assoc.local-commutator", astar.derivation_witness(&maps[0]));
    }
    Ok(AssocLocal { conj_alg: alg, triple, report })
}

/// a = (e − p)*(e + p)⁻¹ for skew p; the result satisfies ā*a = a*ā = e.
pub fn cayley_transform(astar: &Arc<Algebra>, p: &Element) -> Result<Element> {
    expect_associative(astar)?;
    astar.expect_elem(p)?;
    let e = astar.unit()?.clone();
    if astar.bar(p) != -p {
        return Err(Error::NotSkew(astar.show(p)));
    }
    let plus = &e + p;
    // (e+p)⁻¹ = L(e+p)⁻¹ e; in an associative unital algebra a left inverse is two-sided
    let lp = astar.left_op(&plus);
    if !lp.is_invertible() {
        return Err(Error::NotInvertible(format!("L(e + p) has rank {}", lp.rank())));
    }
    let inv = lp.inverse()?.act(&e);
    let a = astar.mul(&(&e - p), &inv);
    let ab = astar.bar(&a);
    if astar.mul(&ab, &a) != e || astar.mul(&a, &ab) != e {
        return Err(Error::RelationFails { relation: "ā*a = e".into(), witness: astar.show(&a) });
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{hurwitz, matrix_algebra, CayleyDicksonParams};
    use crate::fields::Field;

    fn quaternions() -> Arc<Algebra> {
        let f = Field::Rationals;
        Arc::new(hurwitz(f, &CayleyDicksonParams::standard(f, 4, false).unwrap()).unwrap())
    }

    #[test]
    fn identity_triple() {
        let h = quaternions();
        let e = h.unit().unwrap().clone();
        let u = unitary_triple(&h, e.clone(), e.clone(), e).unwrap();
        let s = assoc_sigma_triple(&u).unwrap();
        assert!(s.triple.is_identity());
        assert!(s.report.all_pass(), "{}", s.report.to_text());
    }

    #[test]
    fn complex_pythagorean_point() {
        let f = Field::Rationals;
        let c = Arc::new(hurwitz(f, &CayleyDicksonParams::standard(f, 2, false).unwrap()).unwrap());
        let a = Element::new(vec![f.ratio(3, 5).unwrap(), f.ratio(4, 5).unwrap()]);
        let b = c.mul(&a, &a);
        let u = unitary_triple(&c, a, b, c.unit().unwrap().clone()).unwrap();
        let s = assoc_sigma_triple(&u).unwrap();
        assert!(!s.triple.is_identity());
        assert!(s.report.all_pass(), "{}", s.report.to_text());
    }

    #[test]
    fn quaternion_ijk() {
        let h = quaternions();
        let u = unitary_triple(&h, h.basis(1), h.basis(2), h.basis(3)).unwrap();
        let s = assoc_sigma_triple(&u).unwrap();
        assert!(s.report.all_pass(), "{}", s.report.to_text());
        // σ₁(a)x = i*x*j⁻¹ with j⁻¹ = j̄
        let x = h.element(&[1, 2, 3, 4]);
        let want = h.mul(&h.mul(&h.basis(1), &x), &h.bar(&h.basis(2)));
        assert_eq!(s.triple.g(1).act(&x), want);

        let p = skew_triple(&h, h.basis(1), h.basis(2), h.basis(3)).unwrap();
        let d = assoc_local_triple(&p).unwrap();
        assert!(d.report.all_pass(), "{}", d.report.to_text());
        let want = &h.mul(&h.basis(1), &x) - &h.mul(&x, &h.basis(2));
        assert_eq!(d.triple.t(1).act(&x), want);
    }

    #[test]
    fn rejects_bad_inputs() {
        let h = quaternions();
        let two = h.element(&[2, 0, 0, 0]);
        assert!(matches!(unitary_triple(&h, two.clone(), two.clone(), two.clone()), Err(Error::NotUnitary(_))));
        assert!(matches!(skew_triple(&h, two.clone(), two.clone(), two), Err(Error::NotSkew(_))));
        let o = Arc::new(crate::constructors::named("hurwitz:8", Field::Rationals).unwrap());
        let e = o.unit().unwrap().clone();
        assert!(matches!(unitary_triple(&o, e.clone(), e.clone(), e), Err(Error::NotAssociative(_))));
    }

    #[test]
    fn matrix_local_triples() {
        let f = Field::Rationals;
        let m = Arc::new(matrix_algebra(f, 2).unwrap());
        let p = m.element(&[0, 1, -1, 0]);
        let t = skew_triple(&m, p.clone(), p.clone(), p.clone()).unwrap();
        let d = assoc_local_triple(&t).unwrap();
        assert!(d.report.passed("assoc.local-commutator"), "{}", d.report.to_text());
        assert!(d.report.all_pass());
        let z = m.zero();
        let zero = assoc_local_triple(&skew_triple(&m, z.clone(), z.clone(), z).unwrap()).unwrap();
        assert!(zero.triple.is_zero());

        let m3 = Arc::new(matrix_algebra(f, 3).unwrap());
        let e12 = m3.element(&[0, 1, 0, -1, 0, 0, 0, 0, 0]);
        let e13 = m3.element(&[0, 0, 1, 0, 0, 0, -1, 0, 0]);
        let e23 = m3.element(&[0, 0, 0, 0, 0, 1, 0, -1, 0]);
        let d = assoc_local_triple(&skew_triple(&m3, e12, e13, e23).unwrap()).unwrap();
        assert!(d.report.all_pass(), "{}", d.report.to_text());
    }

    #[test]
    fn cayley_examples() {
        let f = Field::Rationals;
        let m = Arc::new(matrix_algebra(f, 2).unwrap());
        let a = cayley_transform(&m, &m.element(&[0, 1, -1, 0])).unwrap();
        assert_eq!(a, m.element(&[0, -1, 1, 0]));
        assert_eq!(cayley_transform(&m, &m.zero()).unwrap(), m.unit().unwrap().clone());

        let h = quaternions();
        let a = cayley_transform(&h, &h.basis(1)).unwrap();
        assert_eq!(a, h.element(&[0, -1, 0, 0]));

        // det(I + p) = 1 + 4 = 0 in 𝔽₅
        let f5 = Field::prime(5).unwrap();
        let m5 = Arc::new(matrix_algebra(f5, 2).unwrap());
        let p = m5.element(&[0, 2, -2, 0]);
        assert!(matches!(cayley_transform(&m5, &p), Err(Error::NotInvertible(_))));
    }
}
