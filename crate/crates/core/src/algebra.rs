//! Finite-dimensional algebras given by structure constants.

use crate::error::{Error, Result};
use crate::fields::{Field, Scalar};
use crate::linalg::{vis_zero, Matrix};
use crate::report::Report;
use rand::Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};
use std::fmt;
use std::sync::OnceLock;
use std::ops::{Add, Neg, Sub};

/// Coordinate vector of an algebra element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Element {
    pub coords: Vec<Scalar>,
}

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Element {
        Element { coords }
    }

    pub fn zero(field: Field, n: usize) -> Element {
        Element { coords: vec![field.zero(); n] }
    }

    pub fn basis(field: Field, n: usize, i: usize) -> Element {
        let mut e = Element::zero(field, n);
        e.coords[i] = field.one();
        e
    }

    pub fn from_ints(field: Field, v: &[i64]) -> Element {
        Element { coords: v.iter().map(|&x| field.int(x)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        vis_zero(&self.coords)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element { coords: self.coords.iter().map(|x| c * x).collect() }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, o: &Element) -> Element {
        assert_eq!(self.dim(), o.dim(), "element dimension mismatch");
        Element { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, o: Element) -> Element {
        &self + &o
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, o: &Element) -> Element {
        self + &(-o)
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, o: Element) -> Element {
        &self - &o
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { coords: self.coords.iter().map(|x| -x).collect() }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl Matrix {
    /// Applies a linear map to an element.
    pub fn act(&self, x: &Element) -> Element {
        Element::new(self.apply(&x.coords))
    }
}

/// Axiom selectors for [`Algebra::check_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Involutive,
    Nondegenerate,
    ConditionB,
    ConditionC,
}

/// Algebra over a field: structure constants, optional form, involution and
/// distinguished (para-)unit. Immutable once built; basis L/R operators are
/// cached at construction.
#[derive(Clone, Debug)]
pub struct Algebra {
    name: String,
    field: Field,
    dim: usize,
    // table[(i*n + j)*n + k] = c_ijk
    table: Vec<Scalar>,
    // nonzero (k, c_ijk) for each (i, j)
    sparse: Vec<Vec<(usize, Scalar)>>,
    form: Option<Matrix>,
    involution: Option<Matrix>,
    unit: Option<Element>,
    labels: Vec<String>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    fp: OnceLock<String>,
}

impl PartialEq for Algebra {
    fn eq(&self, o: &Algebra) -> bool {
        self.field == o.field
            && self.table == o.table
            && self.form == o.form
            && self.involution == o.involution
            && self.unit == o.unit
    }
}

impl Algebra {
    pub fn from_table(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        table: Vec<Scalar>,
    ) -> Result<Algebra> {
        if dim == 0 {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        if table.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim * dim, got: table.len() });
        }
        if let Some(bad) = table.iter().find(|s| s.field() != field) {
            return Err(Error::DescriptorMismatch(field, bad.field()));
        }
        let n = dim;
        let sparse: Vec<Vec<(usize, Scalar)>> = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter_map(|k| {
                        let c = &table[ij * n + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        // L(e_i)[k][j] = c_ijk, R(e_j)[k][i] = c_ijk
        let left = (0..n)
            .map(|i| Matrix::from_fn(field, n, n, |k, j| table[(i * n + j) * n + k].clone()))
            .collect();
        let right = (0..n)
            .map(|j| Matrix::from_fn(field, n, n, |k, i| table[(i * n + j) * n + k].clone()))
            .collect();
        Ok(Algebra {
            name: name.into(),
            field,
            dim,
            table,
            sparse,
            form: None,
            involution: None,
            unit: None,
            labels: (1..=dim).map(|i| format!("e{i}")).collect(),
            left,
            right,
            fp: OnceLock::new(),
        })
    }

    /// Builds the table from (i, j, k, c_ijk) entries; repeated entries add.
    pub fn from_entries(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Algebra> {
        let mut table = vec![field.zero(); dim * dim * dim];
        for (i, j, k, c) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::DimensionMismatch { expected: dim, got: *i.max(j).max(k) + 1 });
            }
            let idx = (i * dim + j) * dim + k;
            table[idx] = table[idx].try_add(c)?;
        }
        Algebra::from_table(name, field, dim, table)
    }

    /// Builds the table from a bilinear product on basis vectors.
    pub fn from_basis_products(
        name: impl Into<String>,
        field: Field,
        dim: usize,
        mut prod: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<Algebra> {
        let mut table = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = prod(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
                }
                table.extend(v);
            }
        }
        Algebra::from_table(name, field, dim, table)
    }

    pub fn with_form(mut self, b: Matrix) -> Result<Algebra> {
        self.expect_map(&b)?;
        if b != b.transpose() {
            return Err(Error::RelationFails {
                relation: "symmetric form".into(),
                witness: format!("B = {b}"),
            });
        }
        self.form = Some(b);
        self.fp = OnceLock::new();
        Ok(self)
    }

    pub fn with_involution(mut self, j: Matrix) -> Result<Algebra> {
        self.expect_map(&j)?;
        if !(&j * &j).is_identity() {
            return Err(Error::RelationFails {
                relation: "J² = Id".into(),
                witness: format!("J = {j}"),
            });
        }
        self.involution = Some(j);
        self.fp = OnceLock::new();
        Ok(self)
    }

    pub fn with_unit(mut self, e: Element) -> Result<Algebra> {
        self.expect_elem(&e)?;
        self.unit = Some(e);
        self.fp = OnceLock::new();
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Algebra> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Algebra {
        self.name = name.into();
        self
    }

    pub fn without_involution(mut self) -> Algebra {
        self.involution = None;
        self.fp = OnceLock::new();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn structure(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn table(&self) -> &[Scalar] {
        &self.table
    }

    pub fn form(&self) -> Result<&Matrix> {
        self.form.as_ref().ok_or_else(|| Error::FormUndeclared(self.name.clone()))
    }

    pub fn involution(&self) -> Result<&Matrix> {
        self.involution.as_ref().ok_or_else(|| Error::InvolutionUndeclared(self.name.clone()))
    }

    pub fn unit(&self) -> Result<&Element> {
        self.unit.as_ref().ok_or_else(|| Error::UnitUndeclared(self.name.clone()))
    }

    pub fn has_form(&self) -> bool {
        self.form.is_some()
    }

    pub fn has_involution(&self) -> bool {
        self.involution.is_some()
    }

    pub fn expect_elem(&self, x: &Element) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.dim() });
        }
        Ok(())
    }

    pub fn expect_map(&self, m: &Matrix) -> Result<()> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: m.rows().max(m.cols()) });
        }
        Ok(())
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.field, self.dim, i)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.field, self.dim)
    }

    pub fn element(&self, v: &[i64]) -> Element {
        assert_eq!(v.len(), self.dim);
        Element::from_ints(self.field, v)
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.field, self.dim)
    }

    pub fn zero_map(&self) -> Matrix {
        Matrix::zeros(self.field, self.dim, self.dim)
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.expect_elem(x)?;
        self.expect_elem(y)?;
        Ok(self.mul(x, y))
    }

    /// Product without dimension checks beyond debug assertions.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        debug_assert_eq!(x.dim(), self.dim);
        debug_assert_eq!(y.dim(), self.dim);
        let n = self.dim;
        let mut out = vec![self.field.zero(); n];
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let entries = &self.sparse[i * n + j];
                if entries.is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in entries {
                    out[*k] = &out[*k] + &(&c * s);
                }
            }
        }
        Element::new(out)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Element {
        let mut out = self.zero();
        for (k, s) in &self.sparse[i * self.dim + j] {
            out.coords[*k] = s.clone();
        }
        out
    }

    pub fn left_basis(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    pub fn right_basis(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    fn combine(&self, ops: &[Matrix], x: &Element) -> Matrix {
        let mut m = self.zero_map();
        for (c, op) in x.coords.iter().zip(ops) {
            if !c.is_zero() {
                m = &m + &op.scale(c);
            }
        }
        m
    }

    /// L(x): y ↦ xy
    pub fn left_op(&self, x: &Element) -> Matrix {
        self.combine(&self.left, x)
    }

    /// R(x): y ↦ yx
    pub fn right_op(&self, x: &Element) -> Matrix {
        self.combine(&self.right, x)
    }

    pub fn form_eval(&self, x: &Element, y: &Element) -> Result<Scalar> {
        let b = self.form()?;
        self.expect_elem(x)?;
        self.expect_elem(y)?;
        Ok(bilinear(b, x, y))
    }

    /// ⟨x|y⟩; panics if no form is declared.
    pub fn inner(&self, x: &Element, y: &Element) -> Scalar {
        self.form_eval(x, y).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn norm(&self, x: &Element) -> Scalar {
        self.inner(x, x)
    }

    pub fn involute(&self, x: &Element) -> Result<Element> {
        let j = self.involution()?;
        self.expect_elem(x)?;
        Ok(j.act(x))
    }

    /// x̄; panics if no involution is declared.
    pub fn bar(&self, x: &Element) -> Element {
        self.involute(x).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Q̄ = J Q J
    pub fn conjugate_map(&self, q: &Matrix) -> Result<Matrix> {
        let j = self.involution()?;
        self.expect_map(q)?;
        Ok(&(j * q) * j)
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R, bound: i64) -> Element {
        Element::new((0..self.dim).map(|_| random_scalar(self.field, rng, bound)).collect())
    }

    /// Stable hash of field, table, form, involution and unit.
    pub fn fingerprint(&self) -> &str {
        self.fp.get_or_init(|| self.compute_fingerprint())
    }

    fn compute_fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.field.to_string());
        h.update([self.dim as u8]);
        for s in &self.table {
            h.update(s.to_string());
            h.update(b";");
        }
        for m in [&self.form, &self.involution].into_iter().flatten() {
            h.update(b"|");
            h.update(m.to_string());
        }
        if let Some(u) = &self.unit {
            h.update(b"|");
            h.update(u.to_string());
        }
        hex::encode(h.finalize())
    }

    /// Human-readable element: `2*e1 - 1/2*e3`.
    pub fn show(&self, x: &Element) -> String {
        let parts: Vec<String> = x
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("({c})*{}", self.labels[i])
                }
            })
            .collect();
        if parts.is_empty() { "0".into() } else { parts.join(" + ") }
    }

    // Exhaustive basis checks; all return the first failing tuple.

    pub fn find_pair(&self, f: impl Fn(usize, usize) -> bool + Sync) -> Option<(usize, usize)> {
        let n = self.dim;
        (0..n * n).into_par_iter().find_map_first(|t| {
            let (i, j) = (t / n, t % n);
            (!f(i, j)).then_some((i, j))
        })
    }

    pub fn find_triple(
        &self,
        f: impl Fn(usize, usize, usize) -> bool + Sync,
    ) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        (0..n * n * n).into_par_iter().find_map_first(|t| {
            let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
            (!f(i, j, k)).then_some((i, j, k))
        })
    }

    pub fn pair_witness(&self, (i, j): (usize, usize)) -> String {
        format!("x = {}, y = {}", self.labels[i], self.labels[j])
    }

    pub fn triple_witness(&self, (i, j, k): (usize, usize, usize)) -> String {
        format!("x = {}, y = {}, z = {}", self.labels[i], self.labels[j], self.labels[k])
    }

    /// First basis pair where g(xy) ≠ (gx)(gy).
    pub fn automorphism_witness(&self, g: &Matrix) -> Option<String> {
        let images: Vec<Element> = (0..self.dim).map(|i| g.act(&self.basis(i))).collect();
        self.find_pair(|i, j| g.act(&self.mul_basis(i, j)) == self.mul(&images[i], &images[j]))
            .map(|p| self.pair_witness(p))
    }

    /// First basis pair where g(xy) ≠ (gy)(gx).
    pub fn anti_automorphism_witness(&self, g: &Matrix) -> Option<String> {
        let images: Vec<Element> = (0..self.dim).map(|i| g.act(&self.basis(i))).collect();
        self.find_pair(|i, j| g.act(&self.mul_basis(i, j)) == self.mul(&images[j], &images[i]))
            .map(|p| self.pair_witness(p))
    }

    /// First basis pair where d(xy) ≠ (dx)y + x(dy).
    pub fn derivation_witness(&self, d: &Matrix) -> Option<String> {
        let images: Vec<Element> = (0..self.dim).map(|i| d.act(&self.basis(i))).collect();
        self.find_pair(|i, j| {
            let lhs = d.act(&self.mul_basis(i, j));
            let rhs = &self.mul(&images[i], &self.basis(j)) + &self.mul(&self.basis(i), &images[j]);
            lhs == rhs
        })
        .map(|p| self.pair_witness(p))
    }

    /// First basis pair where ⟨gx|gy⟩ ≠ ⟨x|y⟩. Requires a form.
    pub fn isometry_witness(&self, g: &Matrix) -> Result<Option<String>> {
        let b = self.form()?;
        let gtbg = &(&g.transpose() * b) * g;
        Ok(self
            .find_pair(|i, j| gtbg.get(i, j) == b.get(i, j))
            .map(|p| self.pair_witness(p)))
    }

    /// First basis pair where ⟨tx|y⟩ ≠ −⟨x|ty⟩.
    pub fn skew_witness(&self, t: &Matrix) -> Result<Option<String>> {
        let b = self.form()?;
        let m = &(&t.transpose() * b) + &(b * t);
        Ok(self.find_pair(|i, j| m.get(i, j).is_zero()).map(|p| self.pair_witness(p)))
    }

    pub fn associativity_witness(&self) -> Option<String> {
        self.find_triple(|i, j, k| {
            let (x, y, z) = (self.basis(i), self.basis(j), self.basis(k));
            self.mul(&self.mul(&x, &y), &z) == self.mul(&x, &self.mul(&y, &z))
        })
        .map(|t| self.triple_witness(t))
    }

    pub fn alternative_witness(&self) -> Option<String> {
        // linearized: (x,y,z) + (y,x,z) = 0 and (x,y,z) + (x,z,y) = 0
        let assoc = |x: &Element, y: &Element, z: &Element| {
            &self.mul(&self.mul(x, y), z) - &self.mul(x, &self.mul(y, z))
        };
        self.find_triple(|i, j, k| {
            let (x, y, z) = (self.basis(i), self.basis(j), self.basis(k));
            (&assoc(&x, &y, &z) + &assoc(&y, &x, &z)).is_zero()
                && (&assoc(&x, &y, &z) + &assoc(&x, &z, &y)).is_zero()
        })
        .map(|t| self.triple_witness(t))
    }

    pub fn involution_witness(&self) -> Result<Option<String>> {
        let j = self.involution()?;
        if !(j * j).is_identity() {
            return Ok(Some("J² ≠ Id".into()));
        }
        Ok(self.anti_automorphism_witness(j))
    }

    /// rank of span{e_i e_j} = N
    pub fn condition_b(&self) -> bool {
        let n = self.dim;
        let m = Matrix::from_fn(self.field, n * n, n, |r, k| self.table[r * n + k].clone());
        m.rank() == n
    }

    /// L(b) = 0 ⇒ b = 0 and R(b) = 0 ⇒ b = 0.
    pub fn condition_c(&self) -> bool {
        let n = self.dim;
        // L(b) = Σ b_i L(e_i); row (j, k), column i holds c_ijk
        let lsys = Matrix::from_fn(self.field, n * n, n, |r, i| {
            let (j, k) = (r / n, r % n);
            self.structure(i, j, k).clone()
        });
        let rsys = Matrix::from_fn(self.field, n * n, n, |r, j| {
            let (i, k) = (r / n, r % n);
            self.structure(i, j, k).clone()
        });
        lsys.rank() == n && rsys.rank() == n
    }

    pub fn check_axioms(&self, which: &[Axiom]) -> Report {
        let mut rep = Report::new(self.name.clone());
        for ax in which {
            match ax {
                Axiom::Involutive => {
                    let w = match self.involution_witness() {
                        Ok(w) => w,
                        Err(e) => Some(e.to_string()),
                    };
                    rep.record("axiom.involutive", w);
                }
                Axiom::Nondegenerate => {
                    let w = match self.form() {
                        Ok(b) => {
                            let r = b.rank();
                            (r != self.dim).then(|| format!("rank B = {r} < {}", self.dim))
                        }
                        Err(e) => Some(e.to_string()),
                    };
                    rep.record("axiom.nondegenerate", w);
                }
                Axiom::ConditionB => {
                    rep.check("axiom.condition-b", self.condition_b(), || {
                        "products of basis vectors do not span A".into()
                    });
                }
                Axiom::ConditionC => {
                    rep.check("axiom.condition-c", self.condition_c(), || {
                        "nonzero b with L(b) = 0 or R(b) = 0".into()
                    });
                }
            }
        }
        rep
    }
}

/// xᵀ B y
pub fn bilinear(b: &Matrix, x: &Element, y: &Element) -> Scalar {
    let by = b.apply(&y.coords);
    x.coords
        .iter()
        .zip(&by)
        .filter(|(a, _)| !a.is_zero())
        .fold(b.field().zero(), |acc, (a, c)| acc + a * c)
}

/// Random scalar with integer coordinates in [−bound, bound].
pub fn random_scalar<R: Rng>(field: Field, rng: &mut R, bound: i64) -> Scalar {
    match field {
        Field::QuadExt(_) => {
            let a = field.int(rng.random_range(-bound..=bound));
            let b = field.int(rng.random_range(-bound..=bound));
            &a + &(&b * &field.generator().unwrap())
        }
        _ => field.int(rng.random_range(-bound..=bound)),
    }
}
