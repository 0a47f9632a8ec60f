//! Dense complex linear algebra over explicitly labeled finite bases.
//!
//! Every [`StateVector`] and [`LinearOperator`] carries the [`Basis`] it is
//! expressed in, so vectors from a symmetric (occupation) space can never be
//! silently combined with vectors from a tensor-product space of the same
//! dimension.

use std::{collections::HashMap, fmt, sync::Arc};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Absolute tolerance used for every numerical comparison in the crate.
pub const TOL: f64 = 1e-12;

/// Norms below this are treated as exactly zero by [`normalize`].
pub const NULL_NORM: f64 = 1e-14;

/// Separator between factor labels in a product-basis label.
pub const PRODUCT_SEPARATOR: char = '|';

/// How the labels of a [`Basis`] relate to other bases.
#[derive(Clone, Debug, PartialEq)]
pub enum Structure {
    /// No further structure; labels are opaque.
    Atomic,
    /// Ordered tensor product of at least two (non-product) factors, last
    /// factor varying fastest.
    Product(Vec<Basis>),
    /// Occupation-number basis of the symmetric power of a single-particle
    /// basis.
    SymmetricPower { single: Basis, particles: usize },
}

struct BasisInner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    structure: Structure,
}

/// An ordered list of distinct labels; index(label) is a bijection onto
/// `0..len`.
#[derive(Clone)]
pub struct Basis(Arc<BasisInner>);

impl Basis {
    fn build(labels: Vec<String>, structure: Structure) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyBasis);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (k, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), k).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self(Arc::new(BasisInner { labels, index, structure })))
    }

    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::build(labels.into_iter().map(Into::into).collect(), Structure::Atomic)
    }

    /// Occupation basis of `particles` bosons over the modes of `single`.
    ///
    /// The caller supplies the enumeration order; this only records it.
    pub fn symmetric_power<I, S>(single: &Basis, particles: usize, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::build(
            labels.into_iter().map(Into::into).collect(),
            Structure::SymmetricPower { single: single.clone(), particles },
        )
    }

    /// Tensor product of `factors`, flattening nested products.
    pub fn product(factors: &[Basis]) -> Result<Self> {
        let flat: Vec<Basis> = factors
            .iter()
            .flat_map(|f| f.factors().iter().cloned())
            .collect();
        match flat.len() {
            0 => Err(Error::EmptyBasis),
            1 => Ok(flat[0].clone()),
            _ => {
                let mut labels = vec![String::new()];
                for f in flat.iter() {
                    labels = labels
                        .iter()
                        .flat_map(|prefix| {
                            f.labels().iter().map(move |l| {
                                if prefix.is_empty() {
                                    l.clone()
                                } else {
                                    format!("{prefix}{PRODUCT_SEPARATOR}{l}")
                                }
                            })
                        })
                        .collect();
                }
                Self::build(labels, Structure::Product(flat))
            }
        }
    }

    pub fn len(&self) -> usize { self.0.labels.len() }

    pub fn is_empty(&self) -> bool { self.0.labels.is_empty() }

    pub fn labels(&self) -> &[String] { &self.0.labels }

    pub fn label(&self, index: usize) -> &str { &self.0.labels[index] }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.index.get(label).copied()
    }

    pub fn structure(&self) -> &Structure { &self.0.structure }

    /// Tensor factors; a non-product basis is its own single factor.
    pub fn factors(&self) -> &[Basis] {
        match &self.0.structure {
            Structure::Product(f) => f,
            _ => std::slice::from_ref(self),
        }
    }
}

impl PartialEq for Basis {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.labels == other.0.labels && self.0.structure == other.0.structure)
    }
}

impl fmt::Debug for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Basis{:?}", self.0.labels)
    }
}

/// Mixed-radix digits of `index` for factor sizes `dims`.
fn digits(mut index: usize, dims: &[usize], out: &mut [usize]) {
    for (k, &d) in dims.iter().enumerate().rev() {
        out[k] = index % d;
        index /= d;
    }
}

fn undigits<I: Iterator<Item = (usize, usize)>>(pairs: I) -> usize {
    pairs.fold(0, |acc, (digit, dim)| acc * dim + digit)
}

/// Complex amplitude vector over a labeled basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    basis: Basis,
    amps: Vec<C64>,
}

impl StateVector {
    pub fn new(basis: Basis, amps: Vec<C64>) -> Result<Self> {
        if amps.len() != basis.len() {
            return Err(Error::LengthMismatch { expected: basis.len(), found: amps.len() });
        }
        Ok(Self { basis, amps })
    }

    pub fn zeros(basis: Basis) -> Self {
        let amps = vec![C64::new(0.0, 0.0); basis.len()];
        Self { basis, amps }
    }

    pub fn basis_state(basis: Basis, label: &str) -> Result<Self> {
        Self::from_labels(basis, [(label, C64::new(1.0, 0.0))])
    }

    /// Build a vector from `(label, amplitude)` pairs; repeated labels add.
    pub fn from_labels<'a, I>(basis: Basis, terms: I) -> Result<Self>
    where I: IntoIterator<Item = (&'a str, C64)>
    {
        let mut v = Self::zeros(basis);
        for (label, a) in terms {
            let k = v.basis.index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            v.amps[k] += a;
        }
        Ok(v)
    }

    pub fn basis(&self) -> &Basis { &self.basis }

    pub fn amplitudes(&self) -> &[C64] { &self.amps }

    pub fn into_amplitudes(self) -> Vec<C64> { self.amps }

    pub fn amplitude(&self, label: &str) -> Result<C64> {
        self.basis.index_of(label)
            .map(|k| self.amps[k])
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn len(&self) -> usize { self.amps.len() }

    pub fn is_empty(&self) -> bool { self.amps.is_empty() }

    pub fn norm_sqr(&self) -> f64 { self.amps.iter().map(|a| a.norm_sqr()).sum() }

    pub fn norm(&self) -> f64 { self.norm_sqr().sqrt() }

    pub fn is_normalized(&self) -> bool { (self.norm_sqr() - 1.0).abs() <= TOL }

    pub fn scale(&self, c: C64) -> Self {
        Self { basis: self.basis.clone(), amps: self.amps.iter().map(|a| a * c).collect() }
    }

    fn zip_with(&self, other: &Self, ctx: &'static str, f: impl Fn(C64, C64) -> C64)
        -> Result<Self>
    {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(ctx));
        }
        let amps = self.amps.iter().zip(&other.amps).map(|(a, b)| f(*a, *b)).collect();
        Ok(Self { basis: self.basis.clone(), amps })
    }

    pub fn add(&self, other: &Self) -> Result<Self> { self.zip_with(other, "add", |a, b| a + b) }

    pub fn sub(&self, other: &Self) -> Result<Self> { self.zip_with(other, "sub", |a, b| a - b) }

    /// Euclidean distance ‖self − other‖.
    pub fn distance(&self, other: &Self) -> Result<f64> { Ok(self.sub(other)?.norm()) }

    /// min over θ of ‖self − e^{iθ}·other‖.
    pub fn phase_distance(&self, other: &Self) -> Result<f64> {
        let overlap = inner_product(other, self)?;
        let phase = if overlap.norm() > 0.0 { overlap / overlap.norm() } else { C64::new(1.0, 0.0) };
        self.distance(&other.scale(phase))
    }

    /// Largest amplitude modulus, used for entrywise comparisons.
    pub fn max_abs(&self) -> f64 { self.amps.iter().map(|a| a.norm()).fold(0.0, f64::max) }

    /// Re-express a product-basis vector in `target`, whose factors are a
    /// permutation of this vector's factors.
    pub fn reorder(&self, target: &Basis) -> Result<Self> {
        let src = self.basis.factors();
        let dst = target.factors();
        let perm = match_factors(dst, src).filter(|p| p.len() == src.len())
            .ok_or(Error::Structure("reorder"))?;
        let dims: Vec<usize> = src.iter().map(Basis::len).collect();
        let mut d = vec![0; dims.len()];
        let mut out = Self::zeros(target.clone());
        for (k, a) in self.amps.iter().enumerate() {
            digits(k, &dims, &mut d);
            let t = undigits(perm.iter().map(|&p| (d[p], dims[p])));
            out.amps[t] = *a;
        }
        Ok(out)
    }
}

/// For each factor in `wanted`, the position of the equal factor in `have`;
/// `None` if one is missing or two wanted factors would share a position.
fn match_factors(wanted: &[Basis], have: &[Basis]) -> Option<Vec<usize>> {
    let mut used = vec![false; have.len()];
    let mut perm = Vec::with_capacity(wanted.len());
    for w in wanted {
        let pos = have.iter().enumerate().position(|(k, h)| !used[k] && h == w)?;
        used[pos] = true;
        perm.push(pos);
    }
    Some(perm)
}

/// Amplitude of `(i, j)` is `a[i]·b[j]`.
pub fn tensor_product(a: &StateVector, b: &StateVector) -> Result<StateVector> {
    let basis = Basis::product(&[a.basis.clone(), b.basis.clone()])?;
    let amps = a.amps.iter()
        .flat_map(|x| b.amps.iter().map(move |y| x * y))
        .collect();
    StateVector::new(basis, amps)
}

/// ⟨a|b⟩, conjugate-linear in `a`.
pub fn inner_product(a: &StateVector, b: &StateVector) -> Result<C64> {
    if a.basis != b.basis {
        return Err(Error::BasisMismatch("inner product"));
    }
    Ok(a.amps.iter().zip(&b.amps).map(|(x, y)| x.conj() * y).sum())
}

pub fn normalize(v: &StateVector) -> Result<StateVector> {
    let n = v.norm();
    if n <= NULL_NORM {
        return Err(Error::NullState(n));
    }
    Ok(v.scale(C64::new(1.0 / n, 0.0)))
}

/// |⟨a|b⟩|².
pub fn fidelity(a: &StateVector, b: &StateVector) -> Result<f64> {
    Ok(inner_product(a, b)?.norm_sqr())
}

/// Contract `bra` against the tensor factors of `ket` it matches, leaving a
/// vector over the remaining factors (in `ket` order).
///
/// Each factor of `bra` must equal a distinct factor of `ket`.
pub fn partial_inner(bra: &StateVector, ket: &StateVector) -> Result<StateVector> {
    let have = ket.basis.factors();
    let wanted = bra.basis.factors();
    let pos = match_factors(wanted, have).ok_or(Error::Structure("partial inner product"))?;
    let rest: Vec<usize> = (0..have.len()).filter(|k| !pos.contains(k)).collect();
    if rest.is_empty() {
        return Err(Error::Structure("partial inner product"));
    }
    let rest_basis = Basis::product(&rest.iter().map(|&k| have[k].clone()).collect::<Vec<_>>())?;
    let dims: Vec<usize> = have.iter().map(Basis::len).collect();
    let mut d = vec![0; dims.len()];
    let mut out = StateVector::zeros(rest_basis);
    for (k, a) in ket.amps.iter().enumerate() {
        digits(k, &dims, &mut d);
        let b = undigits(pos.iter().map(|&p| (d[p], dims[p])));
        let r = undigits(rest.iter().map(|&p| (d[p], dims[p])));
        out.amps[r] += bra.amps[b].conj() * a;
    }
    Ok(out)
}

/// Dense complex matrix mapping `basis_in` to `basis_out`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearOperator {
    basis_in: Basis,
    basis_out: Basis,
    matrix: DMatrix<C64>,
}

impl LinearOperator {
    pub fn new(basis_in: Basis, basis_out: Basis, matrix: DMatrix<C64>) -> Result<Self> {
        if matrix.nrows() != basis_out.len() || matrix.ncols() != basis_in.len() {
            return Err(Error::ShapeMismatch {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
                expected_rows: basis_out.len(),
                expected_cols: basis_in.len(),
            });
        }
        Ok(Self { basis_in, basis_out, matrix })
    }

    /// Square operator on `basis` from a row-major slice.
    pub fn from_rows(basis: Basis, rows: &[C64]) -> Result<Self> {
        let n = basis.len();
        if rows.len() != n * n {
            return Err(Error::ShapeMismatch {
                rows: rows.len() / n.max(1),
                cols: n,
                expected_rows: n,
                expected_cols: n,
            });
        }
        Self::new(basis.clone(), basis, DMatrix::from_row_slice(n, n, rows))
    }

    pub fn identity(basis: Basis) -> Self {
        let n = basis.len();
        Self { basis_in: basis.clone(), basis_out: basis, matrix: DMatrix::identity(n, n) }
    }

    pub fn zeros(basis: Basis) -> Self {
        let n = basis.len();
        Self { basis_in: basis.clone(), basis_out: basis, matrix: DMatrix::zeros(n, n) }
    }

    pub fn basis_in(&self) -> &Basis { &self.basis_in }

    pub fn basis_out(&self) -> &Basis { &self.basis_out }

    pub fn matrix(&self) -> &DMatrix<C64> { &self.matrix }

    pub fn adjoint(&self) -> Self {
        Self {
            basis_in: self.basis_out.clone(),
            basis_out: self.basis_in.clone(),
            matrix: self.matrix.adjoint(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if other.basis_out != self.basis_in {
            return Err(Error::BasisMismatch("compose"));
        }
        Ok(Self {
            basis_in: other.basis_in.clone(),
            basis_out: self.basis_out.clone(),
            matrix: &self.matrix * &other.matrix,
        })
    }

    fn same_shape(&self, other: &Self, ctx: &'static str) -> Result<()> {
        if self.basis_in != other.basis_in || self.basis_out != other.basis_out {
            return Err(Error::BasisMismatch(ctx));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "operator add")?;
        Ok(Self { matrix: &self.matrix + &other.matrix, ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "operator sub")?;
        Ok(Self { matrix: &self.matrix - &other.matrix, ..self.clone() })
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        Ok(self.sub(other)?.matrix.iter().map(|z| z.norm()).fold(0.0, f64::max))
    }

    pub fn trace(&self) -> C64 { self.matrix.trace() }

    /// Kronecker product; `a` acts on the leading factors.
    pub fn tensor(a: &Self, b: &Self) -> Result<Self> {
        Ok(Self {
            basis_in: Basis::product(&[a.basis_in.clone(), b.basis_in.clone()])?,
            basis_out: Basis::product(&[a.basis_out.clone(), b.basis_out.clone()])?,
            matrix: a.matrix.kronecker(&b.matrix),
        })
    }

    /// max(‖P² − P‖∞, ‖P† − P‖∞), entrywise.
    pub fn projector_residual(&self) -> f64 {
        if self.basis_in != self.basis_out {
            return f64::INFINITY;
        }
        let sq = &self.matrix * &self.matrix - &self.matrix;
        let herm = self.matrix.adjoint() - &self.matrix;
        sq.iter().chain(herm.iter()).map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_projector(&self) -> bool { self.projector_residual() <= TOL }

    /// Number of singular values above `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        self.matrix.clone().singular_values().iter().filter(|s| **s > tol).count()
    }
}

/// |v⟩⟨v| for normalized `v`.
pub fn projector(v: &StateVector) -> Result<LinearOperator> {
    if !v.is_normalized() {
        return Err(Error::NotNormalized(v.norm()));
    }
    let col = DMatrix::from_column_slice(v.len(), 1, &v.amps);
    LinearOperator::new(v.basis.clone(), v.basis.clone(), &col * col.adjoint())
}

pub fn apply(op: &LinearOperator, v: &StateVector) -> Result<StateVector> {
    if op.basis_in != v.basis {
        return Err(Error::BasisMismatch("apply"));
    }
    let x = DMatrix::from_column_slice(v.len(), 1, &v.amps);
    let y = &op.matrix * x;
    StateVector::new(op.basis_out.clone(), y.iter().copied().collect())
}

/// Gram matrix `G[i][j] = ⟨v_i|v_j⟩` as an operator on an index basis.
pub fn gram(vectors: &[StateVector]) -> Result<LinearOperator> {
    let n = vectors.len();
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = inner_product(&vectors[i], &vectors[j])?;
        }
    }
    let basis = Basis::new((0..n).map(|k| k.to_string()))?;
    LinearOperator::new(basis.clone(), basis, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 { C64::new(re, im) }

    fn qubit() -> Basis { Basis::new(["0", "1"]).unwrap() }

    #[test]
    fn basis_rejects_duplicates_and_empty() {
        assert_eq!(Basis::new(["a", "a"]).unwrap_err(), Error::DuplicateLabel("a".into()));
        assert_eq!(Basis::new(Vec::<String>::new()).unwrap_err(), Error::EmptyBasis);
    }

    #[test]
    fn product_labels_are_row_major() {
        let b = Basis::product(&[qubit(), qubit()]).unwrap();
        assert_eq!(b.labels(), ["0|0", "0|1", "1|0", "1|1"]);
        assert_eq!(b.factors().len(), 2);
    }

    #[test]
    fn tensor_of_basis_states() {
        let z = StateVector::basis_state(qubit(), "0").unwrap();
        let t = tensor_product(&z, &z).unwrap();
        assert_eq!(t.amplitude("0|0").unwrap(), c(1.0, 0.0));
        assert!((t.norm() - 1.0).abs() < TOL);
    }

    #[test]
    fn tensor_is_bilinear() {
        let (a, b) = (c(0.6, 0.0), c(0.0, 0.8));
        let v = StateVector::new(qubit(), vec![a, b]).unwrap();
        let one = StateVector::basis_state(qubit(), "1").unwrap();
        let t = tensor_product(&v, &one).unwrap();
        assert_eq!(t.amplitudes(), &[c(0.0, 0.0), a, c(0.0, 0.0), b]);
    }

    #[test]
    fn tensor_of_plus_states_is_uniform() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = StateVector::new(qubit(), vec![c(h, 0.0), c(h, 0.0)]).unwrap();
        let t = tensor_product(&plus, &plus).unwrap();
        // brute-force expansion: every pair (i, j) picks h·h
        for i in 0..2 {
            for j in 0..2 {
                let label = format!("{i}|{j}");
                assert!((t.amplitude(&label).unwrap() - c(h * h, 0.0)).norm() < TOL);
                assert!((t.amplitude(&label).unwrap() - c(0.5, 0.0)).norm() < TOL);
            }
        }
    }

    #[test]
    fn inner_products_of_basis_states() {
        let z = StateVector::basis_state(qubit(), "0").unwrap();
        let o = StateVector::basis_state(qubit(), "1").unwrap();
        assert_eq!(inner_product(&z, &z).unwrap(), c(1.0, 0.0));
        assert_eq!(inner_product(&z, &o).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn inner_product_rejects_basis_mismatch() {
        let z = StateVector::basis_state(qubit(), "0").unwrap();
        let other = StateVector::basis_state(Basis::new(["0", "2"]).unwrap(), "0").unwrap();
        assert_eq!(inner_product(&z, &other).unwrap_err(), Error::BasisMismatch("inner product"));
    }

    #[test]
    fn normalize_cases() {
        let two = StateVector::new(qubit(), vec![c(2.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(normalize(&two).unwrap().amplitudes(), &[c(1.0, 0.0), c(0.0, 0.0)]);
        let sum = StateVector::new(qubit(), vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        let n = normalize(&sum).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((n.amplitudes()[0] - c(h, 0.0)).norm() < TOL);
        assert!((n.amplitudes()[1] - c(h, 0.0)).norm() < TOL);
        assert!(matches!(normalize(&StateVector::zeros(qubit())), Err(Error::NullState(_))));
    }

    #[test]
    fn projector_cases() {
        let z = StateVector::basis_state(qubit(), "0").unwrap();
        let p = projector(&z).unwrap();
        assert_eq!(p.matrix()[(0, 0)], c(1.0, 0.0));
        assert_eq!(p.matrix().iter().filter(|x| x.norm() > 0.0).count(), 1);

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = StateVector::new(qubit(), vec![c(h, 0.0), c(h, 0.0)]).unwrap();
        let p = projector(&plus).unwrap();
        assert!(p.matrix().iter().all(|x| (x - c(0.5, 0.0)).norm() < TOL));
        assert!(p.is_projector());

        let two = StateVector::new(qubit(), vec![c(2.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!(matches!(projector(&two), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn apply_cases() {
        let (a, b) = (c(0.6, 0.0), c(0.0, 0.8));
        let v = StateVector::new(qubit(), vec![a, b]).unwrap();
        assert_eq!(apply(&LinearOperator::identity(qubit()), &v).unwrap(), v);

        let p0 = projector(&StateVector::basis_state(qubit(), "0").unwrap()).unwrap();
        assert_eq!(apply(&p0, &v).unwrap().amplitudes(), &[a, c(0.0, 0.0)]);

        let o = c(0.0, 0.0);
        let l = c(1.0, 0.0);
        let x = LinearOperator::from_rows(qubit(), &[o, l, l, o]).unwrap();
        assert_eq!(apply(&x, &v).unwrap().amplitudes(), &[b, a]);

        let wrong = StateVector::basis_state(Basis::new(["x", "y"]).unwrap(), "x").unwrap();
        assert_eq!(apply(&x, &wrong).unwrap_err(), Error::BasisMismatch("apply"));
    }

    #[test]
    fn reorder_permutes_factors() {
        let a = Basis::new(["a0", "a1"]).unwrap();
        let b = Basis::new(["b0", "b1", "b2"]).unwrap();
        let va = StateVector::new(a.clone(), vec![c(1.0, 0.0), c(2.0, 0.0)]).unwrap();
        let vb = StateVector::new(b.clone(), vec![c(3.0, 0.0), c(5.0, 0.0), c(7.0, 0.0)]).unwrap();
        let ab = tensor_product(&va, &vb).unwrap();
        let ba = tensor_product(&vb, &va).unwrap();
        assert_eq!(ab.reorder(ba.basis()).unwrap(), ba);
    }

    #[test]
    fn partial_inner_on_middle_factor() {
        let a = Basis::new(["a0", "a1"]).unwrap();
        let b = Basis::new(["b0", "b1"]).unwrap();
        let d = Basis::new(["d0", "d1"]).unwrap();
        let va = StateVector::new(a.clone(), vec![c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        let vb = StateVector::basis_state(b.clone(), "b1").unwrap();
        let vd = StateVector::new(d.clone(), vec![c(0.0, 1.0), c(1.0, 0.0)]).unwrap();
        let whole = tensor_product(&tensor_product(&va, &vb).unwrap(), &vd).unwrap();
        let rest = partial_inner(&vb, &whole).unwrap();
        assert_eq!(rest, tensor_product(&va, &vd).unwrap());
    }

    #[test]
    fn rank_of_projector_sum() {
        let b = Basis::new(["0", "1", "2"]).unwrap();
        let p = projector(&StateVector::basis_state(b.clone(), "0").unwrap()).unwrap()
            .add(&projector(&StateVector::basis_state(b, "2").unwrap()).unwrap()).unwrap();
        assert_eq!(p.rank(TOL), 2);
    }
}
