//! Concrete algebras: Hurwitz (Cayley–Dickson), para-Hurwitz, pseudo-octonion,
//! matrix, split Zorn and para-Zorn, with forms and involutions attached.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::fields::{sqrt_in_field, Field, Scalar};
use crate::gell_mann::{D_TENSOR, F_TENSOR};
use crate::linalg::Matrix;
use num_bigint::BigInt;
use num_rational::BigRational;

/// One-dimensional Fe with ee = e.
pub fn ground(field: Field) -> Algebra {
    Algebra::from_table("ground", field, 1, vec![field.one()])
        .and_then(|a| a.with_form(Matrix::identity(field, 1)))
        .and_then(|a| a.with_involution(Matrix::identity(field, 1)))
        .and_then(|a| a.with_unit(Element::basis(field, 1, 0)))
        .and_then(|a| a.with_labels(vec!["e".into()]))
        .expect("ground algebra is well formed")
}

/// Two-dimensional para-complex algebra: ee = e, ff = −e, ef = fe = −f.
pub fn para2(field: Field) -> Algebra {
    let (o, z, m) = (field.one(), field.zero(), field.int(-1));
    let table = vec![
        o.clone(), z.clone(), // ee = e
        z.clone(), m.clone(), // ef = −f
        z.clone(), m.clone(), // fe = −f
        m.clone(), z.clone(), // ff = −e
    ];
    Algebra::from_table("para2", field, 2, table)
        .and_then(|a| a.with_form(Matrix::identity(field, 2)))
        .and_then(|a| a.with_involution(Matrix::diagonal(field, &[o, m])))
        .and_then(|a| a.with_unit(Element::basis(field, 2, 0)))
        .and_then(|a| a.with_labels(vec!["e".into(), "f".into()]))
        .expect("para2 is well formed")
}

/// Doubling parameters; the all −1 choice gives the division-type forms over ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyDicksonParams {
    pub levels: Vec<Scalar>,
}

impl CayleyDicksonParams {
    /// dim 1, 2, 4 or 8 with every γ = −1, or the last γ = +1 when `split`.
    pub fn standard(field: Field, dim: usize, split: bool) -> Result<CayleyDicksonParams> {
        let n = match dim {
            1 => 0,
            2 => 1,
            4 => 2,
            8 => 3,
            _ => return Err(Error::TooManyLevels(dim.max(1).ilog2() as usize)),
        };
        let mut levels = vec![field.int(-1); n];
        if split {
            if n == 0 {
                return Err(Error::PreconditionUnmet("the ground field has no split form".into()));
            }
            levels[n - 1] = field.one();
        }
        Ok(CayleyDicksonParams { levels })
    }
}

fn hurwitz_labels(dim: usize) -> Vec<String> {
    let base = ["e", "i", "j", "k", "l", "il", "jl", "kl"];
    base[..dim].iter().map(|s| s.to_string()).collect()
}

/// Unital Hurwitz algebra by Cayley–Dickson doubling:
/// (a,b)(c,d) = (ac + γ d̄b, da + bc̄), ⟨(a,b)|(c,d)⟩ = ⟨a|c⟩ − γ⟨b|d⟩, conj (ā, −b).
pub fn hurwitz(field: Field, params: &CayleyDicksonParams) -> Result<Algebra> {
    if params.levels.len() > 3 {
        return Err(Error::TooManyLevels(params.levels.len()));
    }
    if let Some(g) = params.levels.iter().find(|g| g.field() != field) {
        return Err(Error::DescriptorMismatch(field, g.field()));
    }
    if params.levels.iter().any(Scalar::is_zero) {
        return Err(Error::PreconditionUnmet("doubling parameter γ must be nonzero".into()));
    }
    let mut alg = Algebra::from_table("h", field, 1, vec![field.one()])?;
    let mut form = Matrix::identity(field, 1);
    let mut conj = Matrix::identity(field, 1);
    for g in &params.levels {
        let n = alg.dim();
        let m = 2 * n;
        let split = |v: &Element| {
            (Element::new(v.coords[..n].to_vec()), Element::new(v.coords[n..].to_vec()))
        };
        let cur = alg.clone();
        let cj = conj.clone();
        let next = Algebra::from_basis_products("h", field, m, |i, j| {
            let (a, b) = split(&Element::basis(field, m, i));
            let (c, d) = split(&Element::basis(field, m, j));
            let dbar = cj.act(&d);
            let cbar = cj.act(&c);
            let first = &cur.mul(&a, &c) + &cur.mul(&dbar, &b).scale(g);
            let second = &cur.mul(&d, &a) + &cur.mul(&b, &cbar);
            let mut v = first.coords;
            v.extend(second.coords);
            v
        })?;
        let ng = -g;
        form = Matrix::from_fn(field, m, m, |i, j| match (i < n, j < n) {
            (true, true) => form.get(i, j).clone(),
            (false, false) => form.get(i - n, j - n) * &ng,
            _ => field.zero(),
        });
        conj = Matrix::from_fn(field, m, m, |i, j| match (i < n, j < n) {
            (true, true) => conj.get(i, j).clone(),
            (false, false) if i == j => field.int(-1),
            _ => field.zero(),
        });
        alg = next;
    }
    let dim = alg.dim();
    let split = params.levels.iter().any(|g| !(g + &field.one()).is_zero());
    let name = format!("hurwitz:{dim}{}", if split { ":split" } else { "" });
    alg.with_name(name)
        .with_form(form)?
        .with_involution(conj)?
        .with_unit(Element::basis(field, dim, 0))?
        .with_labels(hurwitz_labels(dim))
}

/// Product x*y ↦ conj(x*y) on the same space; form, involution and unit carried over.
pub fn conjugate(a: &Algebra) -> Result<Algebra> {
    let j = a.involution()?.clone();
    let n = a.dim();
    let mut out = Algebra::from_basis_products(format!("conj({})", a.name()), a.field(), n, |i, k| {
        j.act(&a.mul_basis(i, k)).coords
    })?
    .with_involution(j)?
    .with_labels(a.labels().to_vec())?;
    if let Ok(b) = a.form() {
        out = out.with_form(b.clone())?;
    }
    if let Ok(e) = a.unit() {
        out = out.with_unit(e.clone())?;
    }
    Ok(out)
}

/// Para-Hurwitz algebra xy = conj(x*y); the old unit becomes the para-unit.
pub fn para(h: &Algebra) -> Result<Algebra> {
    let p = conjugate(h)?;
    let name = h.name().replacen("hurwitz", "para", 1);
    Ok(p.with_name(name))
}

/// Para-Hurwitz algebra of dimension 1, 2, 4 or 8 with the standard parameters.
pub fn para_hurwitz(field: Field, dim: usize, split: bool) -> Result<Algebra> {
    para(&hurwitz(field, &CayleyDicksonParams::standard(field, dim, split)?)?)
}

fn quad_value(field: Field, sqrt3: &Scalar, r: (i64, i64), s: (i64, i64)) -> Result<Scalar> {
    let r = field.from_rational(&BigRational::new(BigInt::from(r.0), BigInt::from(r.1)))?;
    let s = field.from_rational(&BigRational::new(BigInt::from(s.0), BigInt::from(s.1)))?;
    Ok(&r + &(&s * sqrt3))
}

/// su(3) tensors d and f as 8×8×8 dense arrays over `field` (needs √3 ∈ field).
pub fn gell_mann_tensors(field: Field) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    let s3 = sqrt_in_field(&field.int(3)).ok_or_else(|| Error::SqrtUnavailable(format!("3 in {field}")))?;
    let mut d = vec![field.zero(); 512];
    let mut f = vec![field.zero(); 512];
    for &(a, b, c, rp, rq, sp, sq) in D_TENSOR {
        d[(a * 8 + b) * 8 + c] = quad_value(field, &s3, (rp, rq), (sp, sq))?;
    }
    for &(a, b, c, rp, rq, sp, sq) in F_TENSOR {
        f[(a * 8 + b) * 8 + c] = quad_value(field, &s3, (rp, rq), (sp, sq))?;
    }
    Ok((d, f))
}

/// Which branch of the pseudo-octonion table: e_j e_k = Σ (√3 d_jkl ± f_jkl) e_l.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PseudoOctonionSign {
    Plus,
    Minus,
}

/// Pseudo-octonion algebra in the Gell-Mann basis, orthonormal form,
/// involution negating the antisymmetric directions 2, 5, 7.
pub fn pseudo_octonion(field: Field, sign: PseudoOctonionSign) -> Result<Algebra> {
    let s3 = sqrt_in_field(&field.int(3)).ok_or_else(|| Error::SqrtUnavailable(format!("3 in {field}")))?;
    let (d, f) = gell_mann_tensors(field)?;
    let table: Vec<Scalar> = d
        .iter()
        .zip(&f)
        .map(|(dv, fv)| match sign {
            PseudoOctonionSign::Plus => &(&s3 * dv) + fv,
            PseudoOctonionSign::Minus => &(&s3 * dv) - fv,
        })
        .collect();
    let inv: Vec<Scalar> = [1, -1, 1, 1, -1, 1, -1, 1].iter().map(|&s| field.int(s)).collect();
    let name = match sign {
        PseudoOctonionSign::Plus => "pseudo-octonion",
        PseudoOctonionSign::Minus => "pseudo-octonion:minus",
    };
    Algebra::from_table(name, field, 8, table)?
        .with_form(Matrix::identity(field, 8))?
        .with_involution(Matrix::diagonal(field, &inv))
}

/// M(n, F) with transpose involution and ⟨x|y⟩ = tr(xᵀy); basis E_ij at index i·n + j.
pub fn matrix_algebra(field: Field, n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    let dim = n * n;
    let alg = Algebra::from_basis_products(format!("matrix:{n}"), field, dim, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        let mut v = vec![field.zero(); dim];
        if j == k {
            v[i * n + l] = field.one();
        }
        v
    })?;
    let transpose = Matrix::from_fn(field, dim, dim, |r, c| {
        let (i, j) = (c / n, c % n);
        if r == j * n + i { field.one() } else { field.zero() }
    });
    let mut unit = Element::zero(field, dim);
    for i in 0..n {
        unit.coords[i * n + i] = field.one();
    }
    let labels = (0..dim).map(|a| format!("E{}{}", a / n + 1, a % n + 1)).collect();
    alg.with_form(Matrix::identity(field, dim))?
        .with_involution(transpose)?
        .with_unit(unit)?
        .with_labels(labels)
}

fn cross(field: Field, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let _ = field;
    vec![
        &(&u[1] * &v[2]) - &(&u[2] * &v[1]),
        &(&u[2] * &v[0]) - &(&u[0] * &v[2]),
        &(&u[0] * &v[1]) - &(&u[1] * &v[0]),
    ]
}

fn dot(field: Field, u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter().zip(v).fold(field.zero(), |acc, (a, b)| acc + a * b)
}

/// Split Cayley algebra as Zorn vector matrices, basis α, x₁..x₃, y₁..y₃, β:
/// [[a,x],[y,b]][[a′,x′],[y′,b′]] = [[aa′ + x·y′, ax′ + b′x − y×y′], [a′y + by′ + x×x′, bb′ + y·x′]].
/// Norm αβ − x·y, unit α + β, conjugation [[β,−x],[−y,α]].
pub fn split_zorn(field: Field) -> Result<Algebra> {
    let unpack = |v: &[Scalar]| (v[0].clone(), v[1..4].to_vec(), v[4..7].to_vec(), v[7].clone());
    let alg = Algebra::from_basis_products("zorn", field, 8, |i, j| {
        let e = |k: usize| Element::basis(field, 8, k).coords;
        let (a1, x1, y1, b1) = unpack(&e(i));
        let (a2, x2, y2, b2) = unpack(&e(j));
        let alpha = &(&a1 * &a2) + &dot(field, &x1, &y2);
        let beta = &(&b1 * &b2) + &dot(field, &y1, &x2);
        let yy = cross(field, &y1, &y2);
        let xx = cross(field, &x1, &x2);
        let mut v = vec![alpha];
        for t in 0..3 {
            v.push(&(&(&a1 * &x2[t]) + &(&b2 * &x1[t])) - &yy[t]);
        }
        for t in 0..3 {
            v.push(&(&(&a2 * &y1[t]) + &(&b1 * &y2[t])) + &xx[t]);
        }
        v.push(beta);
        v
    })?;
    let half = field.ratio(1, 2)?;
    let form = Matrix::from_fn(field, 8, 8, |i, j| match (i, j) {
        (0, 7) | (7, 0) => half.clone(),
        (1..=3, 4..=6) if j == i + 3 => -&half,
        (4..=6, 1..=3) if i == j + 3 => -&half,
        _ => field.zero(),
    });
    let conj = Matrix::from_fn(field, 8, 8, |i, j| match (i, j) {
        (0, 7) | (7, 0) => field.one(),
        (1..=6, _) if i == j => field.int(-1),
        _ => field.zero(),
    });
    let mut unit = Element::zero(field, 8);
    unit.coords[0] = field.one();
    unit.coords[7] = field.one();
    let labels = ["alpha", "x1", "x2", "x3", "y1", "y2", "y3", "beta"];
    alg.with_form(form)?
        .with_involution(conj)?
        .with_unit(unit)?
        .with_labels(labels.iter().map(|s| s.to_string()).collect())
}

/// Coefficient space B for a para-Zorn algebra: a bilinear form, an optional
/// product and an involution (identity when B has no product).
#[derive(Clone, Debug)]
pub struct ZornCoefficients {
    pub name: String,
    pub form: Matrix,
    pub product: Option<Algebra>,
    pub involution: Matrix,
}

impl ZornCoefficients {
    /// Plain quadratic space of dimension `n` with orthonormal form.
    pub fn plain(field: Field, n: usize) -> ZornCoefficients {
        ZornCoefficients {
            name: format!("F^{n}"),
            form: Matrix::identity(field, n),
            product: None,
            involution: Matrix::identity(field, n),
        }
    }

    /// Uses an algebra's product, form and involution.
    pub fn from_algebra(b: &Algebra) -> Result<ZornCoefficients> {
        let form = b.form()?.clone();
        let involution = b.involution().cloned().unwrap_or_else(|_| b.identity());
        Ok(ZornCoefficients { name: b.name().to_string(), form, product: Some(b.clone()), involution })
    }

    pub fn dim(&self) -> usize {
        self.form.rows()
    }
}

/// Para-Zorn vector-matrix algebra over B with parameter k; basis α, x(B), y(B), β.
/// Product: [[β₁β₂ + (y₁|x₂), α₁x₂ + β₂x₁ + k y₁y₂], [α₂y₁ + β₁y₂ + k x₁x₂, α₁α₂ + (x₁|y₂)]].
pub fn para_zorn(b: &ZornCoefficients, k: &Scalar) -> Result<Algebra> {
    let field = k.field();
    let nb = b.dim();
    if b.form.field() != field {
        return Err(Error::DescriptorMismatch(field, b.form.field()));
    }
    let n = 2 * nb + 2;
    let bform = |u: &[Scalar], v: &[Scalar]| {
        crate::algebra::bilinear(&b.form, &Element::new(u.to_vec()), &Element::new(v.to_vec()))
    };
    let bmul = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        match &b.product {
            Some(p) => p.mul(&Element::new(u.to_vec()), &Element::new(v.to_vec())).coords,
            None => vec![field.zero(); nb],
        }
    };
    let alg = Algebra::from_basis_products(format!("parazorn({},{k})", b.name), field, n, |i, j| {
        let e1 = Element::basis(field, n, i).coords;
        let e2 = Element::basis(field, n, j).coords;
        let (a1, x1, y1, b1) = (&e1[0], &e1[1..1 + nb], &e1[1 + nb..1 + 2 * nb], &e1[n - 1]);
        let (a2, x2, y2, b2) = (&e2[0], &e2[1..1 + nb], &e2[1 + nb..1 + 2 * nb], &e2[n - 1]);
        let mut v = vec![&(b1 * b2) + &bform(y1, x2)];
        let yy = bmul(y1, y2);
        let xx = bmul(x1, x2);
        for t in 0..nb {
            v.push(&(&(a1 * &x2[t]) + &(b2 * &x1[t])) + &(k * &yy[t]));
        }
        for t in 0..nb {
            v.push(&(&(a2 * &y1[t]) + &(b1 * &y2[t])) + &(k * &xx[t]));
        }
        v.push(&(a1 * a2) + &bform(x1, y2));
        v
    })?;
    let conj = Matrix::from_fn(field, n, n, |i, j| {
        if (i, j) == (0, n - 1) || (i, j) == (n - 1, 0) {
            field.one()
        } else if (1..=nb).contains(&i) && (1..=nb).contains(&j) {
            b.involution.get(i - 1, j - 1).clone()
        } else if (nb + 1..=2 * nb).contains(&i) && (nb + 1..=2 * nb).contains(&j) {
            b.involution.get(i - 1 - nb, j - 1 - nb).clone()
        } else {
            field.zero()
        }
    });
    let mut labels = vec!["alpha".to_string()];
    labels.extend((1..=nb).map(|t| format!("x{t}")));
    labels.extend((1..=nb).map(|t| format!("y{t}")));
    labels.push("beta".into());
    alg.with_involution(conj)?.with_labels(labels)
}

/// Resolves a named algebra: ground, para2, hurwitz:<d>[:split], para:<d>[:split],
/// pseudo-octonion[:minus], matrix:<n>, zorn, parazorn:<bdim>:<k> (or parazorn:para2:<k>).
pub fn named(name: &str, field: Field) -> Result<Algebra> {
    let parts: Vec<&str> = name.split(':').collect();
    let bad = || Error::Parse(format!("unknown algebra '{name}'"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match parts.as_slice() {
        ["ground"] => Ok(ground(field)),
        ["para2"] => Ok(para2(field)),
        ["hurwitz", d] => hurwitz(field, &CayleyDicksonParams::standard(field, num(d)?, false)?),
        ["hurwitz", d, "split"] => hurwitz(field, &CayleyDicksonParams::standard(field, num(d)?, true)?),
        ["para", d] => para_hurwitz(field, num(d)?, false),
        ["para", d, "split"] => para_hurwitz(field, num(d)?, true),
        ["pseudo-octonion"] => pseudo_octonion(field, PseudoOctonionSign::Plus),
        ["pseudo-octonion", "minus"] => pseudo_octonion(field, PseudoOctonionSign::Minus),
        ["matrix", n] => matrix_algebra(field, num(n)?),
        ["zorn"] => split_zorn(field),
        ["parazorn", bd, k] => {
            let k = Scalar::parse(field, k)?;
            let coeffs = match *bd {
                "para2" => ZornCoefficients::from_algebra(&para2(field))?,
                other => ZornCoefficients::plain(field, num(other)?),
            };
            para_zorn(&coeffs, &k)
        }
        _ => Err(bad()),
    }
}
