//! Finite-dimensional algebras given by rational structure constants.
//!
//! `e_i · e_j = Σ_k c[i][j][k] e_k`. Identity checks enumerate basis tuples
//! only, which is complete by multilinearity.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{
    axpy, is_zero_vector, kernel_basis, rat, unit_vector, vec_add, zero_vector, Matrix, Rational, Vector,
};
use crate::subspace::{inverse, Subspace};

/// A failing instance of a multilinear identity on basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityWitness {
    pub identity: String,
    pub tuple: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl fmt::Display for IdentityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Vector| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{} fails at {:?}: lhs=({}) rhs=({})", self.identity, self.tuple, show(&self.lhs), show(&self.rhs))
    }
}

/// Result of an identity check: `witness` is the first failure in
/// lexicographic tuple order, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub witness: Option<IdentityWitness>,
}

impl IdentityCheck {
    pub fn pass() -> Self {
        IdentityCheck { holds: true, witness: None }
    }

    pub fn fail(identity: &str, tuple: Vec<usize>, lhs: Vector, rhs: Vector) -> Self {
        IdentityCheck {
            holds: false,
            witness: Some(IdentityWitness { identity: identity.to_string(), tuple, lhs, rhs }),
        }
    }
}

/// Algebra on 𝕂ⁿ with a not necessarily associative bilinear product.
pub struct StructureAlgebra {
    name: String,
    basis_names: Vec<String>,
    dim: usize,
    constants: Vec<Rational>,
    leibniz: OnceLock<bool>,
    lie: OnceLock<bool>,
}

impl Clone for StructureAlgebra {
    fn clone(&self) -> Self {
        StructureAlgebra {
            name: self.name.clone(),
            basis_names: self.basis_names.clone(),
            dim: self.dim,
            constants: self.constants.clone(),
            leibniz: self.leibniz.clone(),
            lie: self.lie.clone(),
        }
    }
}

impl fmt::Debug for StructureAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StructureAlgebra")
            .field("name", &self.name)
            .field("basis", &self.basis_names)
            .field("nonzero_products", &self.nonzero_products().len())
            .finish()
    }
}

/// Equality compares basis labels and structure constants; the display name
/// and cached flags are ignored.
impl PartialEq for StructureAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.basis_names == other.basis_names && self.constants == other.constants
    }
}

impl Eq for StructureAlgebra {}

pub fn default_basis_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl StructureAlgebra {
    /// `constants` is the flattened n×n×n tensor indexed `(i*n + j)*n + k`.
    pub fn new(name: impl Into<String>, basis_names: Vec<String>, constants: Vec<Rational>) -> Result<Self> {
        let n = basis_names.len();
        if constants.len() != n * n * n {
            return Err(Error::DimensionMismatch { expected: n * n * n, found: constants.len() });
        }
        for (i, a) in basis_names.iter().enumerate() {
            if basis_names[..i].contains(a) {
                return Err(Error::InvalidAlgebra(format!("duplicate basis label `{a}`")));
            }
        }
        Ok(StructureAlgebra {
            name: name.into(),
            basis_names,
            dim: n,
            constants,
            leibniz: OnceLock::new(),
            lie: OnceLock::new(),
        })
    }

    /// Builds the algebra from `e_i · e_j` given as coordinate vectors.
    pub fn from_fn<F>(name: impl Into<String>, n: usize, mut product: F) -> Self
    where
        F: FnMut(usize, usize) -> Vector,
    {
        let mut constants = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let v = product(i, j);
                assert_eq!(v.len(), n, "basis product has wrong length");
                constants.extend(v);
            }
        }
        Self::new(name, default_basis_names(n), constants).expect("shape checked above")
    }

    /// Algebra from a sparse list of `(i, j, k, c)` with `c_{ij}^k = c`.
    pub fn from_entries(name: impl Into<String>, n: usize, entries: &[(usize, usize, usize, Rational)]) -> Self {
        let mut constants = zero_vector(n * n * n);
        for (i, j, k, c) in entries {
            constants[(i * n + j) * n + k] += c;
        }
        Self::new(name, default_basis_names(n), constants).expect("shape is n^3")
    }

    pub fn abelian(n: usize) -> Self {
        Self::from_entries(format!("abelian{n}"), n, &[])
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: names.len() });
        }
        let rebuilt = Self::new(self.name.clone(), names, std::mem::take(&mut self.constants))?;
        Ok(rebuilt)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &[Rational] {
        &self.constants
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim;
        &self.constants[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// `(i, j)` pairs with nonzero `e_i · e_j`.
    pub fn nonzero_products(&self) -> Vec<(usize, usize)> {
        let n = self.dim;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !is_zero_vector(self.basis_product(i, j)))
            .collect()
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim, found: v.len() })
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.mul(x, y))
    }

    /// Unchecked product; lengths must equal `dim`.
    pub(crate) fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.basis_product(i, j));
            }
        }
        out
    }

    /// `e_i · y`
    pub(crate) fn mul_basis_left(&self, i: usize, y: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (j, yj) in y.iter().enumerate() {
            axpy(&mut out, yj, self.basis_product(i, j));
        }
        out
    }

    /// `x · e_j`
    pub(crate) fn mul_basis_right(&self, x: &[Rational], j: usize) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            axpy(&mut out, xi, self.basis_product(i, j));
        }
        out
    }

    /// Matrix of λ(x): y ↦ x·y.
    pub fn left_mul(&self, x: &[Rational]) -> Result<Matrix> {
        self.check_len(x)?;
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|j| self.mul_basis_right(x, j)).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn left_mul_basis(&self, i: usize) -> Matrix {
        self.left_mul(&unit_vector(self.dim, i)).expect("unit vector has length dim")
    }

    /// Matrix of y ↦ y·x.
    pub fn right_mul(&self, x: &[Rational]) -> Result<Matrix> {
        self.check_len(x)?;
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|j| self.mul_basis_left(j, x)).collect();
        Matrix::from_columns(n, &cols)
    }

    /// x·(y·z) = (x·y)·z + y·(x·z) on all basis triples.
    pub fn check_leibniz(&self) -> IdentityCheck {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.mul_basis_left(i, self.basis_product(j, k));
                    let a = self.mul_basis_right(self.basis_product(i, j), k);
                    let b = self.mul_basis_left(j, self.basis_product(i, k));
                    let rhs = vec_add(&a, &b);
                    if lhs != rhs {
                        return IdentityCheck::fail("leibniz", vec![i, j, k], lhs, rhs);
                    }
                }
            }
        }
        IdentityCheck::pass()
    }

    pub fn is_leibniz(&self) -> bool {
        *self.leibniz.get_or_init(|| self.check_leibniz().holds)
    }

    /// First `(i, j)` with `c_ij ≠ −c_ji`, as a witness.
    pub fn check_skew(&self) -> IdentityCheck {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                let lhs = self.basis_product(i, j).to_vec();
                let rhs: Vector = self.basis_product(j, i).iter().map(|x| -x).collect();
                if lhs != rhs {
                    return IdentityCheck::fail("skew", vec![i, j], lhs, rhs);
                }
            }
        }
        IdentityCheck::pass()
    }

    /// Skew-symmetry followed by the Leibniz (here: Jacobi) identity.
    pub fn check_lie(&self) -> IdentityCheck {
        let skew = self.check_skew();
        if !skew.holds {
            return skew;
        }
        self.check_leibniz()
    }

    pub fn is_lie(&self) -> bool {
        *self.lie.get_or_init(|| self.check_lie().holds)
    }

    /// ⟦x,y⟧ = ½(x·y − y·x), constant by constant.
    pub fn skew_symmetrize(&self) -> StructureAlgebra {
        let n = self.dim;
        let half = rat(1, 2);
        let mut constants = zero_vector(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.constant(i, j, k) - self.constant(j, i, k);
                    if !c.is_zero() {
                        constants[(i * n + j) * n + k] = &half * c;
                    }
                }
            }
        }
        StructureAlgebra::new(format!("skew({})", self.name), self.basis_names.clone(), constants).expect("same shape")
    }

    /// ½(x·y + y·x)
    pub fn symmetrized_part(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        let a = self.product(x, y)?;
        let b = self.product(y, x)?;
        Ok(vec_add(&a, &b).iter().map(|v| v * rat(1, 2)).collect())
    }

    /// Smallest two-sided ideal containing `generators`.
    pub fn ideal_generated_by(&self, generators: Vec<Vector>) -> Result<Subspace> {
        let n = self.dim;
        let mut ideal = Subspace::span(n, generators)?;
        loop {
            let mut vectors = ideal.basis().to_vec();
            for s in ideal.basis() {
                for i in 0..n {
                    vectors.push(self.mul_basis_left(i, s));
                    vectors.push(self.mul_basis_right(s, i));
                }
            }
            let next = Subspace::span(n, vectors)?;
            if next.dim() == ideal.dim() {
                return Ok(ideal);
            }
            ideal = next;
        }
    }

    /// 𝒥: the ideal generated by all squares. By polarization the squares of
    /// the basis and the symmetric products `e_i·e_j + e_j·e_i` generate it.
    pub fn squares_ideal(&self) -> Subspace {
        let n = self.dim;
        let mut gens = Vec::new();
        for i in 0..n {
            for j in i..n {
                let v = vec_add(self.basis_product(i, j), self.basis_product(j, i));
                if !is_zero_vector(&v) {
                    gens.push(v);
                }
            }
        }
        self.ideal_generated_by(gens).expect("generators have length dim")
    }

    /// ker λ = {x : λ(x) = 0}.
    pub fn kernel_of_lambda(&self) -> Subspace {
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|i| self.left_mul_basis(i).flatten()).collect();
        let stacked = Matrix::from_columns(n * n, &cols).expect("columns have length n^2");
        Subspace::span(n, kernel_basis(&stacked)).expect("kernel vectors have length n")
    }

    /// Two-sided ideal test on basis elements.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.ambient() == self.dim
            && s.basis().iter().all(|v| {
                (0..self.dim).all(|i| s.contains(&self.mul_basis_left(i, v)) && s.contains(&self.mul_basis_right(v, i)))
            })
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.ambient() == self.dim && s.basis().iter().all(|a| s.basis().iter().all(|b| s.contains(&self.mul(a, b))))
    }

    /// 𝒜/ℳ on the non-pivot coordinates of ℳ, with the projection matrix q.
    pub fn quotient(&self, m: &Subspace) -> Result<(StructureAlgebra, Matrix)> {
        if m.ambient() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: m.ambient() });
        }
        if !self.is_ideal(m) {
            return Err(Error::NotAnIdeal(format!("subspace of dimension {} in {}", m.dim(), self.name)));
        }
        let q = m.quotient_map();
        let comp = m.complement_coordinates();
        let k = comp.len();
        let mut constants = Vec::with_capacity(k * k * k);
        for &a in &comp {
            for &b in &comp {
                constants.extend(q.mul_vec(self.basis_product(a, b))?);
            }
        }
        let names = comp.iter().map(|&c| self.basis_names[c].clone()).collect();
        let quotient = StructureAlgebra::new(format!("{}/M", self.name), names, constants)?;
        Ok((quotient, q))
    }

    /// The same product written in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<StructureAlgebra> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.rows() });
        }
        let inv = inverse(p)?.ok_or_else(|| Error::InvalidAlgebra("basis change matrix is singular".into()))?;
        let cols: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
        let mut constants = Vec::with_capacity(n * n * n);
        for a in &cols {
            for b in &cols {
                constants.extend(inv.mul_vec(&self.mul(a, b))?);
            }
        }
        StructureAlgebra::new(self.name.clone(), default_basis_names(n), constants)
    }

    /// Direct sum with another algebra (blocks do not interact).
    pub fn direct_sum(&self, other: &StructureAlgebra) -> StructureAlgebra {
        let (n, m) = (self.dim, other.dim);
        StructureAlgebra::from_fn(format!("{}+{}", self.name, other.name), n + m, |i, j| {
            let mut v = zero_vector(n + m);
            if i < n && j < n {
                v[..n].clone_from_slice(self.basis_product(i, j));
            } else if i >= n && j >= n {
                v[n..].clone_from_slice(other.basis_product(i - n, j - n));
            }
            v
        })
    }

    /// Multiply every structure constant by `c`.
    pub fn scaled(&self, c: &Rational) -> StructureAlgebra {
        let constants = self.constants.iter().map(|x| x * c).collect();
        StructureAlgebra::new(self.name.clone(), self.basis_names.clone(), constants).expect("same shape")
    }
}

/// φ(e_i·e_j) = φ(e_i)·φ(e_j) for all basis pairs; φ has shape dim(b) × dim(a).
pub fn is_homomorphism(a: &StructureAlgebra, b: &StructureAlgebra, phi: &Matrix) -> bool {
    if phi.rows() != b.dim() || phi.cols() != a.dim() {
        return false;
    }
    let images: Vec<Vector> = (0..a.dim()).map(|i| phi.column(i)).collect();
    (0..a.dim()).all(|i| {
        (0..a.dim()).all(|j| {
            let lhs = phi.mul_vec(a.basis_product(i, j)).expect("shape checked");
            lhs == b.mul(&images[i], &images[j])
        })
    })
}

/// Commutator bracket of a family of matrices spanning a Lie subalgebra of
/// gl(n), expressed in that family. Fails if the span is not closed.
pub fn matrix_lie_algebra(name: &str, basis: &[Matrix]) -> Result<StructureAlgebra> {
    let k = basis.len();
    let flat: Vec<Vector> = basis.iter().map(Matrix::flatten).collect();
    let mut constants = Vec::with_capacity(k * k * k);
    for a in basis {
        for b in basis {
            let c = a.commutator(b)?.flatten();
            let coords = crate::subspace::coordinates_in(&flat, &c)?
                .ok_or_else(|| Error::NotLie(format!("{name}: span of matrices is not closed under commutator")))?;
            constants.extend(coords);
        }
    }
    StructureAlgebra::new(name, default_basis_names(k), constants)
}

/// λ(x·y) = [λ(x), λ(y)] on all basis pairs.
pub fn lambda_is_homomorphism(a: &StructureAlgebra) -> bool {
    let n = a.dim();
    let lambdas: Vec<Matrix> = (0..n).map(|i| a.left_mul_basis(i)).collect();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let lhs = a.left_mul(a.basis_product(i, j)).expect("length dim");
            lhs == lambdas[i].commutator(&lambdas[j]).expect("square")
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};
    use proptest::prelude::*;

    fn leibniz2() -> StructureAlgebra {
        StructureAlgebra::from_entries("leibniz2", 2, &[(1, 1, 0, int(1))])
    }

    fn idempotent1() -> StructureAlgebra {
        StructureAlgebra::from_entries("idem", 1, &[(0, 0, 0, int(1))])
    }

    fn so3() -> StructureAlgebra {
        StructureAlgebra::from_entries(
            "so3",
            3,
            &[
                (0, 1, 2, int(1)),
                (1, 0, 2, int(-1)),
                (1, 2, 0, int(1)),
                (2, 1, 0, int(-1)),
                (2, 0, 1, int(1)),
                (0, 2, 1, int(-1)),
            ],
        )
    }

    #[test]
    fn product_examples() {
        let ab = StructureAlgebra::abelian(3);
        assert!(is_zero_vector(&ab.product(&[int(1), int(2), int(3)], &[int(4), int(5), int(6)]).unwrap()));
        let l = leibniz2();
        assert_eq!(l.product(&[int(0), int(1)], &[int(0), int(1)]).unwrap(), vec![int(1), int(0)]);
        let (a, b) = (rat(2, 3), rat(-5, 7));
        let x = vec![a, b.clone()];
        assert_eq!(l.product(&x, &x).unwrap(), vec![&b * &b, int(0)]);
        assert!(matches!(l.product(&[int(1)], &x), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn left_multiplication_examples() {
        assert!(StructureAlgebra::abelian(2).left_mul(&[int(1), int(1)]).unwrap().is_zero());
        let l = leibniz2();
        assert_eq!(l.left_mul_basis(1), Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert!(l.left_mul_basis(0).is_zero());
    }

    #[test]
    fn checker_examples() {
        assert!(StructureAlgebra::abelian(3).check_leibniz().holds);
        assert!(leibniz2().check_leibniz().holds);
        let c = idempotent1().check_leibniz();
        let w = c.witness.unwrap();
        assert_eq!(w.tuple, vec![0, 0, 0]);
        assert_eq!(w.lhs, vec![int(1)]);
        assert_eq!(w.rhs, vec![int(2)]);

        assert!(StructureAlgebra::abelian(2).is_lie());
        assert!(so3().is_lie());
        let l = leibniz2().check_lie();
        assert!(!l.holds);
        assert_eq!(l.witness.unwrap().identity, "skew");
    }

    #[test]
    fn skew_and_symmetric_parts() {
        assert_eq!(so3().skew_symmetrize(), so3());
        assert_eq!(leibniz2().skew_symmetrize(), StructureAlgebra::abelian(2));
        let l = leibniz2();
        assert!(is_zero_vector(&so3().symmetrized_part(&[int(1), int(2), int(0)], &[int(0), int(1), int(1)]).unwrap()));
        assert_eq!(l.symmetrized_part(&[int(0), int(1)], &[int(0), int(1)]).unwrap(), vec![int(1), int(0)]);
        assert!(is_zero_vector(&l.symmetrized_part(&[int(1), int(0)], &[int(0), int(1)]).unwrap()));
    }

    #[test]
    fn ideals_and_kernels() {
        assert_eq!(so3().squares_ideal(), Subspace::zero(3));
        let l = leibniz2();
        let e1 = Subspace::span(2, vec![unit_vector(2, 0)]).unwrap();
        assert_eq!(l.squares_ideal(), e1);
        assert_eq!(StructureAlgebra::abelian(2).kernel_of_lambda(), Subspace::full(2));
        assert_eq!(l.kernel_of_lambda(), e1);

        assert!(l.is_ideal(&Subspace::zero(2)));
        assert!(l.is_ideal(&e1));
        assert!(!l.is_ideal(&Subspace::span(2, vec![unit_vector(2, 1)]).unwrap()));
    }

    #[test]
    fn quotient_examples() {
        let l = leibniz2();
        let (same, q) = l.quotient(&Subspace::zero(2)).unwrap();
        assert_eq!(same, l);
        assert_eq!(q, Matrix::identity(2));

        let e1 = Subspace::span(2, vec![unit_vector(2, 0)]).unwrap();
        let (h, q) = l.quotient(&e1).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(h.is_lie());
        assert_eq!(h.constants(), &[int(0)]);
        assert_eq!(q, Matrix::from_i64(&[&[0, 1]]));

        let e2 = Subspace::span(2, vec![unit_vector(2, 1)]).unwrap();
        assert!(matches!(l.quotient(&e2), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn lambda_homomorphism_matches_leibniz() {
        assert!(lambda_is_homomorphism(&leibniz2()));
        assert!(lambda_is_homomorphism(&so3()));
        assert!(!lambda_is_homomorphism(&idempotent1()));
    }

    #[test]
    fn basis_change_preserves_structure() {
        let p = Matrix::from_i64(&[&[1, 1, 0], &[0, 1, 2], &[1, 0, 1]]);
        let t = so3().change_basis(&p).unwrap();
        assert!(t.is_lie());
        assert!(is_homomorphism(&t, &so3(), &p));
    }

    fn sparse_algebra(n: usize) -> impl Strategy<Value = StructureAlgebra> {
        prop::collection::vec((0..n, 0..n, 0..n, -2i64..=2), 0..6).prop_map(move |e| {
            let e: Vec<_> = e.into_iter().map(|(i, j, k, c)| (i, j, k, int(c))).collect();
            StructureAlgebra::from_entries("random", n, &e)
        })
    }

    proptest! {
        #[test]
        fn lambda_homomorphism_iff_leibniz(a in sparse_algebra(3)) {
            prop_assert_eq!(lambda_is_homomorphism(&a), a.is_leibniz());
        }

        #[test]
        fn leibniz_invariants(a in sparse_algebra(3)) {
            prop_assume!(a.is_leibniz());
            let j = a.squares_ideal();
            let k = a.kernel_of_lambda();
            prop_assert!(j.is_subspace_of(&k));
            let x = vec![int(1), int(-2), rat(1, 3)];
            prop_assert!(a.left_mul(&a.product(&x, &x).unwrap()).unwrap().is_zero());
            prop_assert!(a.quotient(&j).unwrap().0.is_lie());
            prop_assert!(a.quotient(&k).unwrap().0.is_lie());
        }

        #[test]
        fn skew_symmetrize_fixes_exactly_skew(a in sparse_algebra(3)) {
            prop_assert_eq!(a.skew_symmetrize() == a, a.check_skew().holds);
        }
    }
}
