//! Finite group tables: Trig(A) for dimensions 1 and 2, Auto of the
//! two-dimensional algebra, and Σ-triples over small prime fields.

use crate::algebra::{Algebra, Element};
use crate::constructors::para2;
use crate::error::{Error, Result};
use crate::fields::{sqrt_in_field, Field, Scalar};
use crate::linalg::Matrix;
use crate::report::Report;
use crate::symcomp::{verify_sigma, SigmaTriple};
use crate::triality::{triality_witness, TrialityTriple};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::HashMap;
use std::sync::Arc;

pub const DEFAULT_MAX_P: u64 = 31;

/// Structure constants and form reduced to residues mod p.
struct FpAlgebra {
    p: u64,
    n: usize,
    c: Vec<u64>,
    b: Vec<u64>,
}

impl FpAlgebra {
    fn new(alg: &Algebra) -> Result<FpAlgebra> {
        let p = match alg.field() {
            Field::Prime(p) => p,
            f => return Err(Error::FieldNotFinite(f)),
        };
        let res = |s: &Scalar| s.residue_value().expect("prime field residue");
        let c = alg.table().iter().map(res).collect();
        let b = match alg.form() {
            Ok(m) => m.entries().iter().map(res).collect(),
            Err(_) => Vec::new(),
        };
        Ok(FpAlgebra { p, n: alg.dim(), c, b })
    }

    fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let n = self.n;
        let mut out = vec![0u64; n];
        for (i, &xi) in x.iter().enumerate().filter(|(_, v)| **v != 0) {
            for (j, &yj) in y.iter().enumerate().filter(|(_, v)| **v != 0) {
                let xy = xi * yj % self.p;
                let base = (i * n + j) * n;
                for (k, o) in out.iter_mut().enumerate() {
                    *o = (*o + xy * self.c[base + k]) % self.p;
                }
            }
        }
        out
    }

    fn form(&self, x: &[u64], y: &[u64]) -> u64 {
        let n = self.n;
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s = (s + x[i] * self.b[i * n + j] % self.p * y[j]) % self.p;
            }
        }
        s
    }

    /// Matrix (column-major) applied to a vector.
    fn apply(&self, cols: &[Vec<u64>], x: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.n];
        for (c, &xc) in cols.iter().zip(x) {
            for (o, v) in out.iter_mut().zip(c) {
                *o = (*o + v * xc) % self.p;
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.n];
        v[i] = 1;
        v
    }

    /// Every vector of F_p^n in lexicographic order.
    fn all_vectors(&self) -> Vec<Vec<u64>> {
        let total = (self.p as usize).pow(self.n as u32);
        (0..total)
            .map(|mut t| {
                let mut v = vec![0u64; self.n];
                for s in (0..self.n).rev() {
                    v[s] = (t % self.p as usize) as u64;
                    t /= self.p as usize;
                }
                v
            })
            .collect()
    }

    fn to_matrix(&self, field: Field, cols: &[Vec<u64>]) -> Matrix {
        Matrix::from_fn(field, self.n, self.n, |r, c| field.int(cols[c][r] as i64))
    }

    fn det2(&self, cols: &[Vec<u64>]) -> u64 {
        (cols[0][0] * cols[1][1] % self.p + self.p - cols[1][0] * cols[0][1] % self.p) % self.p
    }
}

/// Group of tuples of maps under componentwise composition.
#[derive(Clone, Debug, Serialize)]
pub struct GroupTable {
    pub algebra: String,
    pub field: String,
    /// "trig" (triples) or "auto" (single maps)
    pub kind: String,
    #[serde(serialize_with = "ser_members")]
    pub members: Vec<Vec<Matrix>>,
    /// row-major products as member indices; `None` if a product left the set
    pub table: Vec<Option<usize>>,
    pub closed: bool,
    pub table_hash: String,
    pub report: Report,
}

fn ser_members<S: serde::Serializer>(m: &[Vec<Matrix>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<Vec<String>> = m.iter().map(|t| t.iter().map(|x| x.to_string()).collect()).collect();
    v.serialize(s)
}

impl GroupTable {
    fn build(alg: &Algebra, kind: &str, members: Vec<Vec<Matrix>>) -> GroupTable {
        let n = members.len();
        let index: HashMap<&Vec<Matrix>, usize> = members.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let table: Vec<Option<usize>> = (0..n * n)
            .into_par_iter()
            .map(|t| {
                let (a, b) = (&members[t / n], &members[t % n]);
                let prod: Vec<Matrix> = a.iter().zip(b).map(|(x, y)| x * y).collect();
                index.get(&prod).copied()
            })
            .collect();
        let id = members.iter().position(|m| m.iter().all(Matrix::is_identity));
        let closed = id.is_some()
            && table.iter().all(Option::is_some)
            && (0..n).all(|a| (0..n).any(|b| table[a * n + b] == id));
        let mut h = Sha256::new();
        h.update(n.to_le_bytes());
        for t in &table {
            h.update(t.map_or(u64::MAX, |v| v as u64).to_le_bytes());
        }
        let mut report = Report::new(alg.name());
        report.check("group.closure", closed, || format!("{n} members, not closed"));
        GroupTable {
            algebra: alg.name().to_string(),
            field: alg.field().to_string(),
            kind: kind.to_string(),
            members,
            table,
            closed,
            table_hash: hex::encode(h.finalize()),
            report,
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn product(&self, a: usize, b: usize) -> Option<usize> {
        self.table[a * self.order() + b]
    }

    /// Abelian of order 4 with every element squaring to the identity.
    pub fn is_klein_four(&self) -> bool {
        let n = self.order();
        let Some(id) = self.members.iter().position(|m| m.iter().all(Matrix::is_identity)) else {
            return false;
        };
        n == 4
            && self.closed
            && (0..n).all(|a| self.product(a, a) == Some(id))
            && (0..n).all(|a| (0..n).all(|b| self.product(a, b) == self.product(b, a)))
    }

    pub fn triples(&self, alg: &Arc<Algebra>) -> Result<Vec<TrialityTriple>> {
        self.members
            .iter()
            .map(|m| crate::triality::verify_triality(alg, m[0].clone(), m[1].clone(), m[2].clone()))
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} of {} over {}\norder: {}\nclosed: {}\n", self.kind, self.algebra, self.field, self.order(), self.closed);
        for (i, m) in self.members.iter().enumerate() {
            let parts: Vec<String> = m.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("{i:>4}: ({})\n", parts.join(", ")));
        }
        s.push_str(&format!("table sha256: {}\n", self.table_hash));
        s
    }

    pub fn to_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("serializable");
        if let Some(o) = v.as_object_mut() {
            o.remove("table");
            o.insert("order".into(), self.order().into());
        }
        serde_json::to_string_pretty(&v).expect("serializable")
    }
}

fn sign_triple(alg: &Algebra, s: [i64; 3]) -> Vec<Matrix> {
    s.iter().map(|&c| alg.identity().scale(&alg.field().int(c))).collect()
}

fn add_klein_check(alg: &Algebra, g: &mut GroupTable) {
    let all = [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]
        .iter()
        .all(|s| g.members.contains(&sign_triple(alg, *s)));
    g.report.check("group.klein", all, || "a sign triple is missing".into());
}

fn is_para2(alg: &Algebra) -> bool {
    alg.fingerprint() == para2(alg.field()).fingerprint()
}

/// Trig(A) for dim A ∈ {1, 2}. Dimension 1 is exhaustive over F* on finite
/// fields; over infinite fields the isometry law reduces the search to ±1.
/// Dimension 2 (the para-complex algebra) enumerates unit q₁, q₂, q₃ with
/// ⟨q₃|q₁q₂⟩ = 0, builds p_j = −q_{j+1}q_{j+2}, and certifies each triple.
pub fn enumerate_trig_small(alg: &Arc<Algebra>, max_p: u64) -> Result<GroupTable> {
    let f = alg.field();
    if let Field::Prime(p) = f {
        if p > max_p {
            return Err(Error::PreconditionUnmet(format!("p = {p} exceeds the cap {max_p}")));
        }
    }
    match alg.dim() {
        1 => {
            let scalars: Vec<Scalar> = match f.elements() {
                Some(all) => all.into_iter().filter(|s| !s.is_zero()).collect(),
                None => vec![f.one(), f.int(-1)],
            };
            let m = scalars.len();
            let members: Vec<Vec<Matrix>> = (0..m * m * m)
                .into_par_iter()
                .filter_map(|t| {
                    let pick = [t / (m * m), (t / m) % m, t % m];
                    let maps: [Matrix; 3] = pick.map(|i| Matrix::scalar(f, 1, &scalars[i]));
                    triality_witness(alg, &maps).is_none().then(|| maps.to_vec())
                })
                .collect();
            let mut g = GroupTable::build(alg, "trig", members);
            if !f.is_finite() {
                g.report.note("candidates restricted to ±1 by the isometry law");
            }
            add_klein_check(alg, &mut g);
            Ok(g)
        }
        2 => {
            if !f.is_finite() {
                return Err(Error::FieldNotFinite(f));
            }
            if !is_para2(alg) {
                return Err(Error::SuiteInapplicable { suite: "enumerate trig".into(), algebra: alg.name().into() });
            }
            let fa = FpAlgebra::new(alg)?;
            let circle: Vec<Vec<u64>> = fa.all_vectors().into_iter().filter(|v| fa.form(v, v) == 1).collect();
            let c = circle.len();
            let neg = |v: Vec<u64>| -> Vec<u64> { v.into_iter().map(|x| (fa.p - x) % fa.p).collect() };
            let members: Vec<Vec<Matrix>> = (0..c * c * c)
                .into_par_iter()
                .filter_map(|t| {
                    let q = [&circle[t / (c * c)], &circle[(t / c) % c], &circle[t % c]];
                    if fa.form(q[2], &fa.mul(q[0], q[1])) != 0 {
                        return None;
                    }
                    let maps: [Matrix; 3] = std::array::from_fn(|j| {
                        let pj = neg(fa.mul(q[(j + 1) % 3], q[(j + 2) % 3]));
                        fa.to_matrix(f, &[pj, q[j].clone()])
                    });
                    let ok = maps.iter().all(Matrix::is_invertible) && triality_witness(alg, &maps).is_none();
                    ok.then(|| maps.to_vec())
                })
                .collect();
            let mut g = GroupTable::build(alg, "trig", members);
            add_klein_check(alg, &mut g);
            dim2_member_checks(alg, &mut g)?;
            Ok(g)
        }
        d => Err(Error::DimensionMismatch { expected: 2, got: d }),
    }
}

/// Per-member checks on the dim-2 table: unit circle relation, the cubic
/// polynomial in α_j = ⟨e|p_j⟩, and isometry.
fn dim2_member_checks(alg: &Algebra, g: &mut GroupTable) -> Result<()> {
    let f = alg.field();
    let (e, fv) = (alg.basis(0), alg.basis(1));
    let (mut wc, mut wp, mut wi) = (None, None, None);
    for (i, m) in g.members.iter().enumerate() {
        let q: Vec<Element> = m.iter().map(|x| x.act(&fv)).collect();
        let p: Vec<Element> = m.iter().map(|x| x.act(&e)).collect();
        if !alg.form_eval(&q[2], &alg.mul(&q[0], &q[1]))?.is_zero() {
            wc.get_or_insert(format!("member #{i}"));
        }
        let al: Vec<Scalar> = p.iter().map(|pj| alg.inner(&e, pj)).collect();
        let poly = &(&(&f.int(2) * &(&(&al[0] * &al[1]) * &al[2])) - &(&(&al[0].square() + &al[1].square()) + &al[2].square())) + &f.one();
        if !poly.is_zero() {
            wp.get_or_insert(format!("member #{i}"));
        }
        for x in m {
            if let Some(w) = alg.isometry_witness(x)? {
                wi.get_or_insert(format!("member #{i}: {w}"));
            }
        }
    }
    g.report.record("group.dim2-circle", wc);
    g.report.record("group.dim2-polynomial", wp);
    g.report.record("triality.isometry", wi);
    Ok(())
}

/// Every triple in Trig(A) for the dim-2 algebra over F_p, found by running
/// over all invertible g₁, g₂; g₃ is forced by g₃(e) = (g₁e)(g₂e) and
/// g₃(f) = −(g₁e)(g₂f). Independent of the circle parametrization.
pub fn brute_force_trig_dim2(alg: &Algebra) -> Result<Vec<[Matrix; 3]>> {
    if !is_para2(alg) {
        return Err(Error::SuiteInapplicable { suite: "brute force trig".into(), algebra: alg.name().into() });
    }
    let fa = FpAlgebra::new(alg)?;
    let inv = invertible_2x2(&fa);
    let m = inv.len();
    let p = fa.p;
    let (e, fb) = (fa.basis(0), fa.basis(1));
    let mut out: Vec<[Matrix; 3]> = (0..m * m)
        .into_par_iter()
        .filter_map(|t| {
            let (g1, g2) = (&inv[t / m], &inv[t % m]);
            let g3e = fa.mul(&g1[0], &g2[0]);
            let g3f: Vec<u64> = fa.mul(&g1[0], &g2[1]).into_iter().map(|x| (p - x) % p).collect();
            let g3 = vec![g3e, g3f];
            if fa.det2(&g3) == 0 {
                return None;
            }
            let gs = [g1, g2, &g3];
            for j in 0..3 {
                for x in [&e, &fb] {
                    for y in [&e, &fb] {
                        let lhs = fa.apply(gs[j], &fa.mul(x, y));
                        let rhs = fa.mul(&fa.apply(gs[(j + 1) % 3], x), &fa.apply(gs[(j + 2) % 3], y));
                        if lhs != rhs {
                            return None;
                        }
                    }
                }
            }
            Some(gs.map(|g| fa.to_matrix(alg.field(), g)))
        })
        .collect();
    out.sort_by_key(|t| t.iter().map(|m| m.to_string()).collect::<Vec<_>>());
    Ok(out)
}

fn invertible_2x2(fa: &FpAlgebra) -> Vec<Vec<Vec<u64>>> {
    let vs = fa.all_vectors();
    let mut out = Vec::new();
    for a in &vs {
        for b in &vs {
            let cols = vec![a.clone(), b.clone()];
            if fa.det2(&cols) != 0 {
                out.push(cols);
            }
        }
    }
    out
}

/// Auto(A) of the para-complex algebra: {Id, P} without √3 in F, otherwise the
/// six maps generated by the reflection P and the rotation Q of order three.
pub fn auto_dim2(field: Field) -> Result<GroupTable> {
    if field.characteristic() == 2 {
        return Err(Error::PreconditionUnmet("characteristic 2".into()));
    }
    let alg = para2(field);
    let p = Matrix::from_ints(field, &[&[1, 0], &[0, -1]]);
    let id = alg.identity();
    let mut gens = vec![id.clone(), p.clone()];
    let mut rel = None;
    match sqrt_in_field(&field.int(3)).filter(|s| !s.is_zero()) {
        None => {
            if !(&p * &p).is_identity() {
                rel = Some("P² ≠ Id".to_string());
            }
        }
        Some(s3) => {
            let h = field.int(2).inv()?;
            let mh = -&h;
            let hs = &h * &s3;
            let q = Matrix::from_rows(field, vec![vec![mh.clone(), -&hs], vec![hs, mh]])?;
            let q2 = &q * &q;
            gens.extend([q.clone(), q2.clone(), &p * &q, &p * &q2]);
            let checks = [
                ((&p * &p).is_identity(), "P² ≠ Id"),
                ((&q2 * &q).is_identity(), "Q³ ≠ Id"),
                (&(&q * &p) * &q == p, "QPQ ≠ P"),
            ];
            rel = checks.iter().find(|(ok, _)| !ok).map(|(_, w)| w.to_string());
        }
    }
    let mut members: Vec<Vec<Matrix>> = Vec::new();
    for g in gens {
        if !members.iter().any(|m| m[0] == g) {
            members.push(vec![g]);
        }
    }
    let mut t = GroupTable::build(&alg, "auto", members);
    t.report.record("auto.relations", rel);
    let bad = t.members.iter().enumerate().find_map(|(i, m)| alg.automorphism_witness(&m[0]).map(|w| format!("member #{i}: {w}")));
    t.report.record("auto.is-automorphism", bad);
    Ok(t)
}

/// All invertible linear maps of the dim-2 algebra over F_p preserving the
/// product. Scans every nonzero 2×2 matrix, discarding singular ones.
pub fn brute_force_auto_dim2(field: Field) -> Result<Vec<Matrix>> {
    let alg = para2(field);
    let fa = FpAlgebra::new(&alg)?;
    let basis = [fa.basis(0), fa.basis(1)];
    let mut out: Vec<Matrix> = nonzero_2x2(&fa)
        .into_par_iter()
        .filter(|g| fa.det2(g) != 0)
        .filter(|g| {
            basis.iter().all(|x| {
                basis.iter().all(|y| fa.apply(g, &fa.mul(x, y)) == fa.mul(&fa.apply(g, x), &fa.apply(g, y)))
            })
        })
        .map(|g| fa.to_matrix(field, &g))
        .collect();
    out.sort_by_key(|m| m.to_string());
    Ok(out)
}

fn nonzero_2x2(fa: &FpAlgebra) -> Vec<Vec<Vec<u64>>> {
    let vs = fa.all_vectors();
    let mut out = Vec::with_capacity(vs.len() * vs.len());
    for a in &vs {
        for b in &vs {
            if a.iter().chain(b).any(|&x| x != 0) {
                out.push(vec![a.clone(), b.clone()]);
            }
        }
    }
    out
}

/// (nonzero candidates scanned, invertible among them) for the auto search.
pub fn brute_force_counts(field: Field) -> Result<(usize, usize)> {
    let fa = FpAlgebra::new(&para2(field))?;
    let all = nonzero_2x2(&fa);
    let inv = all.iter().filter(|g| fa.det2(g) != 0).count();
    Ok((all.len(), inv))
}

/// Every Σ-triple over F_p: unit a₁, a₂ with a₃ = a₁a₂, each certified.
pub fn enumerate_sigma(alg: &Arc<Algebra>, max_p: u64) -> Result<Vec<SigmaTriple>> {
    let fa = FpAlgebra::new(alg)?;
    if fa.p > max_p {
        return Err(Error::PreconditionUnmet(format!("p = {} exceeds the cap {max_p}", fa.p)));
    }
    if fa.b.is_empty() {
        return Err(Error::FormUndeclared(alg.name().into()));
    }
    let units: Vec<Vec<u64>> = fa.all_vectors().into_par_iter().filter(|v| fa.form(v, v) == 1).collect();
    let u = units.len();
    let f = alg.field();
    let to_el = |v: &[u64]| Element::new(v.iter().map(|&x| f.int(x as i64)).collect());
    (0..u * u)
        .into_par_iter()
        .filter_map(|t| {
            let (a1, a2) = (&units[t / u], &units[t % u]);
            let a3 = fa.mul(a1, a2);
            let chain = fa.mul(a2, &a3) == *a1 && fa.mul(&a3, a1) == *a2 && fa.form(&a3, &a3) == 1;
            chain.then(|| verify_sigma(alg, to_el(a1), to_el(a2), to_el(&a3)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::ground;

    #[test]
    fn dim1_is_klein() {
        for f in [Field::prime(5).unwrap(), Field::Rationals] {
            let a = Arc::new(ground(f));
            let g = enumerate_trig_small(&a, DEFAULT_MAX_P).unwrap();
            assert_eq!(g.order(), 4);
            assert!(g.is_klein_four());
            assert!(g.report.all_pass(), "{}", g.report.to_text());
        }
    }

    #[test]
    fn dim2_f3_matches_brute_force() {
        for p in [3, 5] {
            let f = Field::prime(p).unwrap();
            let a = Arc::new(para2(f));
            let g = enumerate_trig_small(&a, DEFAULT_MAX_P).unwrap();
            assert!(g.report.all_pass(), "{}", g.report.to_text());
            let bf = brute_force_trig_dim2(&a).unwrap();
            let mut ours: Vec<Vec<Matrix>> = g.members.clone();
            let mut theirs: Vec<Vec<Matrix>> = bf.iter().map(|t| t.to_vec()).collect();
            ours.sort_by_key(|t| t.iter().map(|m| m.to_string()).collect::<Vec<_>>());
            theirs.sort_by_key(|t| t.iter().map(|m| m.to_string()).collect::<Vec<_>>());
            assert_eq!(ours, theirs, "p = {p}");
        }
    }

    #[test]
    fn auto_orders() {
        assert_eq!(auto_dim2(Field::Rationals).unwrap().order(), 2);
        let t = auto_dim2(Field::quadratic(3).unwrap()).unwrap();
        assert_eq!(t.order(), 6);
        assert!(t.report.all_pass(), "{}", t.report.to_text());
        let f13 = Field::prime(13).unwrap();
        let t = auto_dim2(f13).unwrap();
        assert_eq!(t.order(), 6);
        let mut ours: Vec<Matrix> = t.members.iter().map(|m| m[0].clone()).collect();
        ours.sort_by_key(|m| m.to_string());
        assert_eq!(ours, brute_force_auto_dim2(f13).unwrap());
        assert_eq!(brute_force_counts(f13).unwrap(), (28_560, 26_208));
    }

    #[test]
    fn sigma_over_f3() {
        let a = Arc::new(crate::constructors::para_hurwitz(Field::prime(3).unwrap(), 4, false).unwrap());
        let all = enumerate_sigma(&a, DEFAULT_MAX_P).unwrap();
        assert!(!all.is_empty());
    }
}
