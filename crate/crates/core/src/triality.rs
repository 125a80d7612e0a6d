//! Global and local triality: triples, the group law, the S₄ action, the
//! d_j(x,y) family and regularity classification.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::fields::Scalar;
use crate::linalg::Matrix;
use crate::report::Report;
pub use crate::expmap::{exp_bridge, exp_bridge_pair, exp_nilpotent, ExpReport};
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// 0-based slot of the 1-based, mod-3 index j (so 0 ≡ 3, 4 ≡ 1).
pub fn idx(j: i64) -> usize {
    (j - 1).rem_euclid(3) as usize
}

fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || a.fingerprint() == b.fingerprint()
}

fn images(alg: &Algebra, m: &Matrix) -> Vec<Element> {
    (0..alg.dim()).map(|i| m.act(&alg.basis(i))).collect()
}

/// First (j, x, y) on basis vectors where g_j(xy) ≠ (g_{j+1}x)(g_{j+2}y).
pub fn triality_witness(alg: &Algebra, maps: &[Matrix; 3]) -> Option<String> {
    let n = alg.dim();
    let img: Vec<Vec<Element>> = maps.iter().map(|m| images(alg, m)).collect();
    (0..3 * n * n)
        .into_par_iter()
        .find_map_first(|t| {
            let (j, a, b) = (t / (n * n), (t / n) % n, t % n);
            let lhs = maps[j].act(&alg.mul_basis(a, b));
            let rhs = alg.mul(&img[(j + 1) % 3][a], &img[(j + 2) % 3][b]);
            (lhs != rhs).then_some((j, a, b))
        })
        .map(|(j, a, b)| format!("j = {}, {}", j + 1, alg.pair_witness((a, b))))
}

/// First (j, x, y) on basis vectors where t_j(xy) ≠ (t_{j+1}x)y + x(t_{j+2}y).
pub fn local_witness(alg: &Algebra, maps: &[Matrix; 3]) -> Option<String> {
    let n = alg.dim();
    let img: Vec<Vec<Element>> = maps.iter().map(|m| images(alg, m)).collect();
    (0..3 * n * n)
        .into_par_iter()
        .find_map_first(|t| {
            let (j, a, b) = (t / (n * n), (t / n) % n, t % n);
            let lhs = maps[j].act(&alg.mul_basis(a, b));
            let rhs = &alg.mul(&img[(j + 1) % 3][a], &alg.basis(b))
                + &alg.mul(&alg.basis(a), &img[(j + 2) % 3][b]);
            (lhs != rhs).then_some((j, a, b))
        })
        .map(|(j, a, b)| format!("j = {}, {}", j + 1, alg.pair_witness((a, b))))
}

/// Certified element of Trig(A).
#[derive(Clone, Debug)]
pub struct TrialityTriple {
    alg: Arc<Algebra>,
    maps: [Matrix; 3],
}

impl PartialEq for TrialityTriple {
    fn eq(&self, o: &TrialityTriple) -> bool {
        self.maps == o.maps && same_algebra(&self.alg, &o.alg)
    }
}

impl TrialityTriple {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    /// g_j for any integer j (mod 3, 1-based).
    pub fn g(&self, j: i64) -> &Matrix {
        &self.maps[idx(j)]
    }

    pub fn maps(&self) -> &[Matrix; 3] {
        &self.maps
    }

    pub fn identity(alg: &Arc<Algebra>) -> TrialityTriple {
        let id = alg.identity();
        TrialityTriple { alg: alg.clone(), maps: [id.clone(), id.clone(), id] }
    }

    /// Sign triples: μ = 0 is the identity, μ = 1, 2, 3 keep g_μ and negate the others.
    pub fn klein(alg: &Arc<Algebra>, mu: usize) -> TrialityTriple {
        let id = alg.identity();
        let neg = -&id;
        let maps = std::array::from_fn(|s| if mu == 0 || s + 1 == mu { id.clone() } else { neg.clone() });
        TrialityTriple { alg: alg.clone(), maps }
    }

    pub fn is_identity(&self) -> bool {
        self.maps.iter().all(Matrix::is_identity)
    }

    /// Re-certifies arbitrary maps as a triple on the same algebra.
    pub fn with_maps(&self, maps: [Matrix; 3]) -> Result<TrialityTriple> {
        let [a, b, c] = maps;
        verify_triality(&self.alg, a, b, c)
    }
}

impl fmt::Display for TrialityTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.maps[0], self.maps[1], self.maps[2])
    }
}

/// Certifies (g1, g2, g3) ∈ Trig(A) on every basis pair.
pub fn verify_triality(alg: &Arc<Algebra>, g1: Matrix, g2: Matrix, g3: Matrix) -> Result<TrialityTriple> {
    let maps = [g1, g2, g3];
    for (s, m) in maps.iter().enumerate() {
        alg.expect_map(m)?;
        if !m.is_invertible() {
            return Err(Error::NotInvertible(format!("g{} has rank {}", s + 1, m.rank())));
        }
    }
    if let Some(w) = triality_witness(alg, &maps) {
        return Err(Error::RelationFails { relation: "global triality".into(), witness: w });
    }
    Ok(TrialityTriple { alg: alg.clone(), maps })
}

pub fn trig_mul(g: &TrialityTriple, h: &TrialityTriple) -> Result<TrialityTriple> {
    if !same_algebra(&g.alg, &h.alg) {
        return Err(Error::AlgebraMismatch);
    }
    let maps = std::array::from_fn(|s| &g.maps[s] * &h.maps[s]);
    g.with_maps(maps)
}

pub fn trig_inv(g: &TrialityTriple) -> Result<TrialityTriple> {
    let mut maps = Vec::with_capacity(3);
    for m in &g.maps {
        maps.push(m.inverse()?);
    }
    let [a, b, c]: [Matrix; 3] = maps.try_into().expect("three maps");
    g.with_maps([a, b, c])
}

/// Generators of the S₄ action on Trig(A).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum S4Gen {
    /// (g1, g2, g3) ↦ (g2, g3, g1)
    Phi,
    /// τ_μ keeps g_μ and negates the other two (μ ∈ 1..=3).
    Tau(u8),
    /// (g1, g2, g3) ↦ (ḡ2, ḡ1, ḡ3)
    Theta,
}

/// Word in the generators; letters act in reading order (leftmost first).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct S4Word(pub Vec<S4Gen>);

impl FromStr for S4Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<S4Word> {
        let mut out = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == '.' || c == ',').filter(|t| !t.is_empty()) {
            let g = match tok {
                "id" => continue,
                "phi" => S4Gen::Phi,
                "theta" => S4Gen::Theta,
                "tau1" => S4Gen::Tau(1),
                "tau2" => S4Gen::Tau(2),
                "tau3" => S4Gen::Tau(3),
                other => return Err(Error::Parse(format!("unknown S4 generator '{other}'"))),
            };
            out.push(g);
        }
        Ok(S4Word(out))
    }
}

impl S4Word {
    pub fn parse(s: &str) -> Result<S4Word> {
        s.parse()
    }
}

fn s4_step(alg: &Algebra, g: S4Gen, maps: [Matrix; 3]) -> Result<[Matrix; 3]> {
    let [g1, g2, g3] = maps;
    Ok(match g {
        S4Gen::Phi => [g2, g3, g1],
        S4Gen::Tau(mu) => {
            let mu = mu as usize;
            if !(1..=3).contains(&mu) {
                return Err(Error::Parse(format!("tau{mu}")));
            }
            let ms = [g1, g2, g3];
            let mut out = ms.clone();
            for (s, m) in ms.into_iter().enumerate() {
                out[s] = if s + 1 == mu { m } else { -m };
            }
            out
        }
        S4Gen::Theta => [alg.conjugate_map(&g2)?, alg.conjugate_map(&g1)?, alg.conjugate_map(&g3)?],
    })
}

/// Applies the word and re-certifies the result.
pub fn s4_act(w: &S4Word, g: &TrialityTriple) -> Result<TrialityTriple> {
    let mut maps = g.maps.clone();
    for &letter in &w.0 {
        maps = s4_step(&g.alg, letter, maps)?;
    }
    g.with_maps(maps)
}

/// Word equivalences of the S₄ presentation, checked as equal actions on `g`.
pub fn s4_relations_report(g: &TrialityTriple) -> Result<Report> {
    let mut rep = Report::new(g.alg.name());
    let mut rels = vec![
        ("phi phi phi", ""),
        ("tau1 tau1", ""),
        ("tau2 tau2", ""),
        ("tau3 tau3", ""),
        ("tau1 tau2 tau3", ""),
        ("tau1 tau2", "tau2 tau1"),
        ("phi tau1 phi phi", "tau2"),
        ("phi tau2 phi phi", "tau3"),
        ("phi tau3 phi phi", "tau1"),
    ];
    if g.alg.has_involution() {
        rels.extend([
            ("theta theta", ""),
            ("phi theta phi", "theta"),
            ("theta tau1 theta", "tau2"),
            ("theta tau2 theta", "tau1"),
            ("theta tau3 theta", "tau3"),
        ]);
    }
    for (lhs, rhs) in rels {
        let l = s4_act(&lhs.parse()?, g)?;
        let r = s4_act(&rhs.parse()?, g)?;
        rep.check("triality.s4-relations", l == r, || format!("{lhs} ≠ {}", if rhs.is_empty() { "id" } else { rhs }));
    }
    Ok(rep)
}

/// Certified element of s∘Lrt(A). `skew` records ⟨t_j x|y⟩ = −⟨x|t_j y⟩ when a form exists.
#[derive(Clone, Debug)]
pub struct LocalTriple {
    alg: Arc<Algebra>,
    maps: [Matrix; 3],
    skew: Option<bool>,
}

impl PartialEq for LocalTriple {
    fn eq(&self, o: &LocalTriple) -> bool {
        self.maps == o.maps && same_algebra(&self.alg, &o.alg)
    }
}

impl LocalTriple {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn t(&self, j: i64) -> &Matrix {
        &self.maps[idx(j)]
    }

    pub fn maps(&self) -> &[Matrix; 3] {
        &self.maps
    }

    pub fn skew(&self) -> Option<bool> {
        self.skew
    }

    pub fn zero(alg: &Arc<Algebra>) -> LocalTriple {
        let z = alg.zero_map();
        LocalTriple { alg: alg.clone(), maps: [z.clone(), z.clone(), z], skew: Some(true) }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }
}

pub fn verify_local(alg: &Arc<Algebra>, t1: Matrix, t2: Matrix, t3: Matrix) -> Result<LocalTriple> {
    let maps = [t1, t2, t3];
    for m in &maps {
        alg.expect_map(m)?;
    }
    if let Some(w) = local_witness(alg, &maps) {
        return Err(Error::RelationFails { relation: "local triality".into(), witness: w });
    }
    let skew = if alg.has_form() {
        let mut ok = true;
        for m in &maps {
            ok &= alg.skew_witness(m)?.is_none();
        }
        Some(ok)
    } else {
        None
    };
    Ok(LocalTriple { alg: alg.clone(), maps, skew })
}

/// t′_j = Σ_k α_{j−k} t_k with `alpha[r]` = α_r (r mod 3).
pub fn alpha_shift(t: &LocalTriple, alpha: &[Scalar; 3]) -> Result<LocalTriple> {
    let maps: [Matrix; 3] = std::array::from_fn(|s| {
        let j = s as i64 + 1;
        (1..=3i64).fold(t.alg.zero_map(), |acc, k| {
            let a = &alpha[(j - k).rem_euclid(3) as usize];
            &acc + &t.t(k).scale(a)
        })
    });
    let [a, b, c] = maps;
    verify_local(&t.alg, a, b, c)
}

pub fn commutator_closure(t: &LocalTriple, u: &LocalTriple) -> Result<LocalTriple> {
    if !same_algebra(&t.alg, &u.alg) {
        return Err(Error::AlgebraMismatch);
    }
    let [a, b, c]: [Matrix; 3] = std::array::from_fn(|s| t.maps[s].commutator(&u.maps[s]));
    verify_local(&t.alg, a, b, c)
}

/// A user-supplied d₃(x, y).
pub type D3Fn = Arc<dyn Fn(&Algebra, &Element, &Element) -> Matrix + Send + Sync>;

/// How d₃(x, y) is defined; the first two members of the family are fixed.
#[derive(Clone)]
pub enum D3Rule {
    /// d₃(x,y)z = 4(⟨x|z⟩y − ⟨y|z⟩x)
    SymmetricComposition,
    /// d₃(x,y) = L(xy), for a Lie bracket product
    LieBracket,
    Zero,
    Custom(D3Fn),
}

impl fmt::Debug for D3Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            D3Rule::SymmetricComposition => write!(f, "SymmetricComposition"),
            D3Rule::LieBracket => write!(f, "LieBracket"),
            D3Rule::Zero => write!(f, "Zero"),
            D3Rule::Custom(_) => write!(f, "Custom"),
        }
    }
}

/// d_j(x, y) as a matrix:
/// d₁ = R(y)L(x) − R(x)L(y), d₂ = L(y)R(x) − L(x)R(y), d₃ per rule.
pub fn d_map(alg: &Algebra, rule: &D3Rule, j: i64, x: &Element, y: &Element) -> Result<Matrix> {
    alg.expect_elem(x)?;
    alg.expect_elem(y)?;
    Ok(match idx(j) {
        0 => &(&alg.right_op(y) * &alg.left_op(x)) - &(&alg.right_op(x) * &alg.left_op(y)),
        1 => &(&alg.left_op(y) * &alg.right_op(x)) - &(&alg.left_op(x) * &alg.right_op(y)),
        _ => match rule {
            D3Rule::SymmetricComposition => {
                let b = alg.form()?;
                let bx = b.apply(&x.coords);
                let by = b.apply(&y.coords);
                let f = alg.field();
                let four = f.int(4);
                (&Matrix::outer(f, &y.coords, &bx) - &Matrix::outer(f, &x.coords, &by)).scale(&four)
            }
            D3Rule::LieBracket => alg.left_op(&alg.mul(x, y)),
            D3Rule::Zero => alg.zero_map(),
            D3Rule::Custom(f) => f(alg, x, y),
        },
    })
}

/// d_j(x, y)w evaluated without forming matrices.
pub fn d_apply(alg: &Algebra, rule: &D3Rule, j: i64, x: &Element, y: &Element, w: &Element) -> Result<Element> {
    Ok(match idx(j) {
        0 => &alg.mul(&alg.mul(x, w), y) - &alg.mul(&alg.mul(y, w), x),
        1 => &alg.mul(y, &alg.mul(w, x)) - &alg.mul(x, &alg.mul(w, y)),
        _ => match rule {
            D3Rule::SymmetricComposition => {
                let four = alg.field().int(4);
                (&y.scale(&alg.form_eval(x, w)?) - &x.scale(&alg.form_eval(y, w)?)).scale(&four)
            }
            D3Rule::LieBracket => alg.mul(&alg.mul(x, y), w),
            D3Rule::Zero => alg.zero(),
            D3Rule::Custom(f) => f(alg, x, y).act(w),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationPair {
    pub x: Element,
    pub y: Element,
    pub d: [Matrix; 3],
}

impl DerivationPair {
    pub fn d(&self, j: i64) -> &Matrix {
        &self.d[idx(j)]
    }
}

/// Builds (d₁, d₂, d₃)(x, y) and checks d₃(y,x) = −d₃(x,y).
pub fn derivation_pair(alg: &Algebra, x: &Element, y: &Element, rule: &D3Rule) -> Result<DerivationPair> {
    let d: [Matrix; 3] = [
        d_map(alg, rule, 1, x, y)?,
        d_map(alg, rule, 2, x, y)?,
        d_map(alg, rule, 3, x, y)?,
    ];
    let swapped = d_map(alg, rule, 3, y, x)?;
    if swapped != -&d[2] {
        return Err(Error::RelationFails {
            relation: "d3 antisymmetry".into(),
            witness: format!("x = {}, y = {}", alg.show(x), alg.show(y)),
        });
    }
    Ok(DerivationPair { x: x.clone(), y: y.clone(), d })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Regularity {
    None,
    Regular,
    PreNormal,
    Normal,
}

/// Basis matrices d_j(e_a, e_b), indexed [j][a*n + b].
fn basis_d_maps(alg: &Algebra, rule: &D3Rule) -> Result<Vec<Vec<Matrix>>> {
    let n = alg.dim();
    let mut out = Vec::with_capacity(3);
    for j in 1..=3 {
        let row: Result<Vec<Matrix>> = (0..n * n)
            .into_par_iter()
            .map(|ab| d_map(alg, rule, j, &alg.basis(ab / n), &alg.basis(ab % n)))
            .collect();
        out.push(row?);
    }
    Ok(out)
}

/// Antisymmetry, regularity, pre-normality and normality on all basis tuples.
pub fn regularity_report(alg: &Algebra, rule: &D3Rule) -> Result<Report> {
    let n = alg.dim();
    let mut rep = Report::new(alg.name());
    let dm = basis_d_maps(alg, rule)?;

    let anti = (0..n * n).find(|&ab| dm[2][ab] != -&dm[2][(ab % n) * n + ab / n]);
    rep.record("triality.d3-antisymmetric", anti.map(|ab| alg.pair_witness((ab / n, ab % n))));

    let regular = (0..n * n).into_par_iter().find_map_first(|ab| {
        let maps = [dm[0][ab].clone(), dm[1][ab].clone(), dm[2][ab].clone()];
        local_witness(alg, &maps).map(|w| format!("d(x,y) with {}: {w}", alg.pair_witness((ab / n, ab % n))))
    });
    rep.record("triality.regular", regular);

    let prenormal = alg.find_triple(|a, b, c| {
        let (x, y, z) = (alg.basis(a), alg.basis(b), alg.basis(c));
        let s = &(&dm[2][a * n + b].act(&z) + &dm[2][b * n + c].act(&x)) + &dm[2][c * n + a].act(&y);
        s.is_zero()
    });
    rep.record("triality.pre-normal", prenormal.map(|t| alg.triple_witness(t)));

    // Q(x,y,z) = d₁(z,xy) + d₂(y,zx) + d₃(x,yz), with bilinear expansion of the
    // product slot over the basis d-maps.
    let combo = |j: usize, first: Option<usize>, v: &Element, second: Option<usize>| -> Matrix {
        let mut m = alg.zero_map();
        for (i, c) in v.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ab = match (first, second) {
                (Some(f), None) => f * n + i,
                (None, Some(s)) => i * n + s,
                _ => unreachable!(),
            };
            m = &m + &dm[j][ab].scale(c);
        }
        m
    };
    let normal = alg.find_triple(|a, b, c| {
        let q = &(&combo(0, Some(c), &alg.mul_basis(a, b), None) + &combo(1, Some(b), &alg.mul_basis(c, a), None))
            + &combo(2, Some(a), &alg.mul_basis(b, c), None);
        q.is_zero()
    });
    rep.record("triality.normal", normal.map(|t| alg.triple_witness(t)));
    Ok(rep)
}

/// Strongest satisfied level among regular ⊂ pre-normal ⊂ normal.
pub fn classify_regularity(alg: &Algebra, rule: &D3Rule) -> Result<Regularity> {
    let rep = regularity_report(alg, rule)?;
    let ok = |id: &str| rep.passed(id);
    Ok(if !(ok("triality.d3-antisymmetric") && ok("triality.regular")) {
        Regularity::None
    } else if !ok("triality.pre-normal") {
        Regularity::Regular
    } else if !ok("triality.normal") {
        Regularity::PreNormal
    } else {
        Regularity::Normal
    })
}

/// Bilinear d_k(u, v) from basis matrices.
fn d_combo(dm: &[Vec<Matrix>], n: usize, k: usize, u: &Element, v: &Element, zero: &Matrix) -> Matrix {
    let mut m = zero.clone();
    for (a, ca) in u.coords.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (b, cb) in v.coords.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            m = &m + &dm[k][a * n + b].scale(&(ca * cb));
        }
    }
    m
}

/// Conjugation and commutator identities of a regular algebra with condition (B) or (C):
/// [t_j, d_k(x,y)], [d_j(u,v), d_k(x,y)] and g_j d_k(x,y) g_j⁻¹, for the given pairs
/// (all basis pairs x < y when `pairs` is `None`).
pub fn verify_prop13(
    alg: &Arc<Algebra>,
    rule: &D3Rule,
    g: &TrialityTriple,
    t: &LocalTriple,
    pairs: Option<&[(Element, Element)]>,
) -> Result<Report> {
    if !same_algebra(alg, &g.alg) || !same_algebra(alg, &t.alg) {
        return Err(Error::AlgebraMismatch);
    }
    let level = classify_regularity(alg, rule)?;
    if level < Regularity::Regular {
        return Err(Error::PreconditionUnmet("algebra is not a regular triality algebra".into()));
    }
    if !(alg.condition_b() || alg.condition_c()) {
        return Err(Error::PreconditionUnmet("neither condition (B) nor (C) holds".into()));
    }
    let n = alg.dim();
    let dm = basis_d_maps(alg, rule)?;
    let zero = alg.zero_map();
    let owned: Vec<(Element, Element)>;
    let pairs = match pairs {
        Some(p) => p,
        None => {
            owned = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .map(|(a, b)| (alg.basis(a), alg.basis(b)))
                .collect();
            &owned
        }
    };
    let ginv: Vec<Matrix> = g.maps.iter().map(|m| m.inverse()).collect::<Result<_>>()?;
    let dk = |k: usize, u: &Element, v: &Element| d_combo(&dm, n, k, u, v, &zero);
    let mut rep = Report::new(alg.name());
    let jk: Vec<(usize, usize)> = (0..3).flat_map(|j| (0..3).map(move |k| (j, k))).collect();

    // [t_j, d_k(x,y)] = d_k(t_{j−k}x, y) + d_k(x, t_{j−k}y)
    let w = pairs.par_iter().enumerate().find_map_first(|(pi, (x, y))| {
        jk.iter().find_map(|&(j, k)| {
            let d = dk(k, x, y);
            let tj = &t.maps[j];
            let s = &t.maps[(j + 3 - k + 2) % 3]; // slot of index (j+1) − (k+1) = j − k
            let lhs = tj.commutator(&d);
            let rhs = &dk(k, &s.act(x), y) + &dk(k, x, &s.act(y));
            (lhs != rhs).then(|| format!("j = {}, k = {}, pair #{pi}", j + 1, k + 1))
        })
    });
    rep.record("triality.prop-local", w);

    // [d_j(u,v), d_k(x,y)] = d_k(d_{j−k}(u,v)x, y) + d_k(x, d_{j−k}(u,v)y)
    let pp: Vec<(usize, usize)> = (0..pairs.len()).flat_map(|a| (0..pairs.len()).map(move |b| (a, b))).collect();
    let w = pp.par_iter().find_map_first(|&(p1, p2)| {
        let (u, v) = &pairs[p1];
        let (x, y) = &pairs[p2];
        let duv: Vec<Matrix> = (0..3).map(|s| dk(s, u, v)).collect();
        jk.iter().find_map(|&(j, k)| {
            let d = dk(k, x, y);
            let s = &duv[(j + 3 - k + 2) % 3];
            let lhs = duv[j].commutator(&d);
            let rhs = &dk(k, &s.act(x), y) + &dk(k, x, &s.act(y));
            (lhs != rhs).then(|| format!("j = {}, k = {}, pairs #{p1}, #{p2}", j + 1, k + 1))
        })
    });
    rep.record("triality.prop-bracket", w);

    // g_j d_k(x,y) g_j⁻¹ = d_k(g_{j−k}x, g_{j−k}y)
    let w = pairs.par_iter().enumerate().find_map_first(|(pi, (x, y))| {
        jk.iter().find_map(|&(j, k)| {
            let s = &g.maps[(j + 3 - k + 2) % 3];
            let lhs = &(&g.maps[j] * &dk(k, x, y)) * &ginv[j];
            let rhs = dk(k, &s.act(x), &s.act(y));
            (lhs != rhs).then(|| format!("j = {}, k = {}, pair #{pi}", j + 1, k + 1))
        })
    });
    rep.record("triality.conj-derivation", w);
    Ok(rep)
}

/// Operator forms of the global and local relations, on the sample elements `xs`.
pub fn operator_identities(
    alg: &Algebra,
    g: Option<&TrialityTriple>,
    t: Option<&LocalTriple>,
    xs: &[Element],
) -> Result<Report> {
    let mut rep = Report::new(alg.name());
    if let Some(t) = t {
        let mut wl = None;
        let mut wr = None;
        for (xi, x) in xs.iter().enumerate() {
            let (l, r) = (alg.left_op(x), alg.right_op(x));
            for j in 1..=3i64 {
                let lhs = t.t(j) * &l;
                let rhs = &(&l * t.t(j + 2)) + &alg.left_op(&t.t(j + 1).act(x));
                if lhs != rhs && wl.is_none() {
                    wl = Some(format!("j = {j}, sample #{xi}"));
                }
                let lhs = t.t(j) * &r;
                let rhs = &(&r * t.t(j + 1)) + &alg.right_op(&t.t(j + 2).act(x));
                if lhs != rhs && wr.is_none() {
                    wr = Some(format!("j = {j}, sample #{xi}"));
                }
            }
        }
        rep.record("triality.op-left", wl);
        rep.record("triality.op-right", wr);
    }
    if let Some(g) = g {
        let ginv: Vec<Matrix> = g.maps.iter().map(|m| m.inverse()).collect::<Result<_>>()?;
        let gi = |j: i64| &ginv[idx(j)];
        let mut w = [None, None, None, None];
        for (xi, x) in xs.iter().enumerate() {
            for (yi, y) in xs.iter().enumerate() {
                for j in 1..=3i64 {
                    let (lx, ry) = (alg.left_op(x), alg.right_op(y));
                    let checks = [
                        g.g(j) * &lx == &alg.left_op(&g.g(j + 1).act(x)) * g.g(j + 2),
                        g.g(j) * &ry == &alg.right_op(&g.g(j + 2).act(y)) * g.g(j + 1),
                        &(&(g.g(j) * &lx) * &ry) * gi(j)
                            == &alg.left_op(&g.g(j + 1).act(x)) * &alg.right_op(&g.g(j + 1).act(y)),
                        &(&(g.g(j) * &ry) * &lx) * gi(j)
                            == &alg.right_op(&g.g(j + 2).act(y)) * &alg.left_op(&g.g(j + 2).act(x)),
                    ];
                    for (s, ok) in checks.iter().enumerate() {
                        if !ok && w[s].is_none() {
                            w[s] = Some(format!("j = {j}, samples #{xi}, #{yi}"));
                        }
                    }
                }
            }
        }
        let [a, b, c, d] = w;
        rep.record("triality.op-global-left", a);
        rep.record("triality.op-global-right", b);
        rep.record("triality.conj-lr", c);
        rep.record("triality.conj-rl", d);
    }
    Ok(rep)
}

/// ⟨g_j x|g_j y⟩ = ⟨x|y⟩ for every component.
pub fn isometry_report(g: &TrialityTriple) -> Result<Report> {
    let mut rep = Report::new(g.alg.name());
    let mut w = None;
    for j in 1..=3 {
        if let Some(x) = g.alg.isometry_witness(g.g(j))? {
            w.get_or_insert(format!("j = {j}, {x}"));
        }
    }
    rep.record("triality.isometry", w);
    Ok(rep)
}
