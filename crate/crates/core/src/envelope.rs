//! Enveloping Lie algebras (𝔤 = 𝔥 ⋉ ℰ, 𝔥, f) of Leibniz algebras.
//!
//! 𝔤 coordinates put the 𝔥 block first and the ℰ block second.

use num_traits::One;

use crate::algebra::{matrix_lie_algebra, StructureAlgebra};
use crate::error::{EnvelopeViolation, Error, Result};
use crate::linalg::{rat, unit_vector, vec_add, vec_scale, vec_sub, zero_vector, Matrix, Rational, Vector};
use crate::products::{hemisemidirect, semidirect_lie, ModuleAction};
use crate::subspace::{coordinates_in, Subspace};

/// A validated enveloping triple. `action` is the representation of 𝔥 on
/// the underlying space of ℰ and `f` the dim 𝔥 × dim ℰ matrix of f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeTriple {
    e: StructureAlgebra,
    action: ModuleAction,
    f: Matrix,
    g: StructureAlgebra,
}

/// Choice of the ideal ℳ for [`canonical_envelope_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealChoice {
    Squares,
    Kernel,
    Custom(Subspace),
}

fn check_shapes(e: &StructureAlgebra, action: &ModuleAction, f: &Matrix) -> Result<(), EnvelopeViolation> {
    if action.v_dim() != e.dim() {
        return Err(EnvelopeViolation::Shape(format!(
            "action on dimension {}, E has dimension {}",
            action.v_dim(),
            e.dim()
        )));
    }
    if f.rows() != action.h_dim() || f.cols() != e.dim() {
        return Err(EnvelopeViolation::Shape(format!(
            "f is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            action.h_dim(),
            e.dim()
        )));
    }
    Ok(())
}

fn first_violation(e: &StructureAlgebra, action: &ModuleAction, f: &Matrix) -> Result<(), EnvelopeViolation> {
    check_shapes(e, action, f)?;
    let h = action.h();
    let (n, hd) = (e.dim(), h.dim());

    if let Some(w) = e.check_leibniz().witness {
        return Err(EnvelopeViolation::NotLeibniz { i: w.tuple[0], j: w.tuple[1], k: w.tuple[2] });
    }
    if let Some(w) = h.check_lie().witness {
        return Err(EnvelopeViolation::HNotLie(w.to_string()));
    }
    if !action.is_homomorphism() {
        return Err(EnvelopeViolation::HNotLie("action is not a representation of h".into()));
    }
    for (xi, d) in action.matrices().iter().enumerate() {
        for i in 0..n {
            let dx = d.column(i);
            for j in 0..n {
                let lhs = d.mul_vec(e.basis_product(i, j)).expect("n");
                let rhs = vec_add(&e.mul(&dx, &unit_vector(n, j)), &e.mul(&unit_vector(n, i), &d.column(j)));
                if lhs != rhs {
                    return Err(EnvelopeViolation::NotDerivation { xi, i, j });
                }
            }
        }
    }
    let f_cols: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
    for xi in 0..hd {
        for (i, fx) in f_cols.iter().enumerate() {
            let lhs = h.mul(&unit_vector(hd, xi), fx);
            let rhs = f.mul_vec(&action.matrices()[xi].column(i)).expect("n");
            if lhs != rhs {
                return Err(EnvelopeViolation::NotEquivariant { xi, i });
            }
        }
    }
    for (i, fx) in f_cols.iter().enumerate() {
        let m = action.matrix_of(fx);
        for j in 0..n {
            if m.column(j) != e.basis_product(i, j) {
                return Err(EnvelopeViolation::FactorizationFails { i, j });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = f.mul_vec(e.basis_product(i, j)).expect("n");
            if lhs != h.mul(&f_cols[i], &f_cols[j]) {
                return Err(EnvelopeViolation::NotHomomorphism { i, j });
            }
        }
    }
    let ker_f = Subspace::span(n, crate::linalg::kernel_basis(f)).expect("n");
    if !e.squares_ideal().is_subspace_of(&ker_f) {
        return Err(EnvelopeViolation::SquaresNotInKernel);
    }
    if !ker_f.is_subspace_of(&e.kernel_of_lambda()) {
        return Err(EnvelopeViolation::KernelNotInLambdaKernel);
    }
    Ok(())
}

/// Checks every defining condition of an enveloping triple and returns the
/// first violation.
pub fn validate_envelope(e: StructureAlgebra, action: ModuleAction, f: Matrix) -> Result<EnvelopeTriple> {
    first_violation(&e, &action, &f)?;
    EnvelopeTriple::from_parts_unchecked(e, action, f)
}

impl EnvelopeTriple {
    /// Assembles a triple without checking the envelope conditions (only 𝔥
    /// must be Lie so that 𝔤 exists). Used to test the checkers themselves.
    pub fn from_parts_unchecked(e: StructureAlgebra, action: ModuleAction, f: Matrix) -> Result<Self> {
        check_shapes(&e, &action, &f)?;
        let action = action.with_v_names(e.basis_names().to_vec())?;
        let g = semidirect_lie(&action)?.with_name(format!("env({})", e.name()));
        Ok(EnvelopeTriple { e, action, f, g })
    }

    pub fn e(&self) -> &StructureAlgebra {
        &self.e
    }

    pub fn h(&self) -> &StructureAlgebra {
        self.action.h()
    }

    pub fn action(&self) -> &ModuleAction {
        &self.action
    }

    pub fn f(&self) -> &Matrix {
        &self.f
    }

    pub fn g(&self) -> &StructureAlgebra {
        &self.g
    }

    pub fn h_dim(&self) -> usize {
        self.action.h_dim()
    }

    pub fn e_dim(&self) -> usize {
        self.e.dim()
    }

    /// Re-runs all checks.
    pub fn validate(&self) -> Result<()> {
        first_violation(&self.e, &self.action, &self.f).map_err(Error::from)
    }

    pub fn f_is_surjective(&self) -> bool {
        self.f.rank() == self.h_dim()
    }

    /// Same triple with f replaced, unchecked.
    pub fn with_f_unchecked(&self, f: Matrix) -> Result<Self> {
        Self::from_parts_unchecked(self.e.clone(), self.action.clone(), f)
    }

    /// Same triple with one action matrix replaced by zero, unchecked.
    pub fn with_zeroed_action_unchecked(&self, xi: usize) -> Result<Self> {
        let mut mats = self.action.matrices().to_vec();
        mats[xi] = Matrix::zeros(self.e_dim(), self.e_dim());
        let act = ModuleAction::new_unchecked(self.h().clone(), self.e_dim(), mats)?;
        Self::from_parts_unchecked(self.e.clone(), act, self.f.clone())
    }

    fn embed_h(&self, xi: &[Rational]) -> Vector {
        let mut v = xi.to_vec();
        v.extend(zero_vector(self.e_dim()));
        v
    }

    /// σₛ(x) = (s f(x), x) as a dim 𝔤 × dim ℰ matrix.
    pub fn section_sigma(&self, s: &Rational) -> Matrix {
        let (hd, n) = (self.h_dim(), self.e_dim());
        let mut m = Matrix::zeros(hd + n, n);
        for c in 0..n {
            for r in 0..hd {
                m.set(r, c, s * self.f.get(r, c));
            }
            m.set(hd + c, c, Rational::one());
        }
        m
    }

    pub fn sigma(&self, s: &Rational, x: &[Rational]) -> Result<Vector> {
        self.section_sigma(s).mul_vec(x)
    }

    /// 𝔪ₛ = σₛ(ℰ)
    pub fn m_s(&self, s: &Rational) -> Subspace {
        let sig = self.section_sigma(s);
        Subspace::span(self.g.dim(), (0..self.e_dim()).map(|i| sig.column(i))).expect("g dim")
    }

    pub fn h_subspace(&self) -> Subspace {
        Subspace::span(self.g.dim(), (0..self.h_dim()).map(|i| unit_vector(self.g.dim(), i))).expect("g dim")
    }

    /// Components of [σₛx, σₛy] in 𝔤 = 𝔥 ⊕ 𝔪ₛ: the 𝔪ₛ part as an ℰ-vector
    /// (⟦x,y⟧ₛ) and the 𝔥 part (Δₛ(x,y)).
    pub fn projected_bracket_delta(&self, s: &Rational, x: &[Rational], y: &[Rational]) -> Result<(Vector, Vector)> {
        let b = self.g.product(&self.sigma(s, x)?, &self.sigma(s, y)?)?;
        let hd = self.h_dim();
        let m_part = b[hd..].to_vec();
        let shift = vec_scale(s, &self.f.mul_vec(&m_part)?);
        Ok((m_part, vec_sub(&b[..hd], &shift)))
    }

    /// π_ℰ[σ½ e_i, σ½ e_j] = ⟦e_i, e_j⟧ for every basis pair.
    pub fn recovery_check(&self) -> bool {
        let n = self.e_dim();
        let skew = self.e.skew_symmetrize();
        let half = rat(1, 2);
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (pe, _) = self.projected_bracket_delta(&half, &unit_vector(n, i), &unit_vector(n, j)).expect("n");
                pe == skew.basis_product(i, j)
            })
        })
    }

    /// σ₁ is an injective homomorphism ℰ → 𝔥 ⋉_H ℰ.
    pub fn sigma_one_embed_check(&self) -> bool {
        let n = self.e_dim();
        let hemi = match hemisemidirect(&self.action) {
            Ok(h) => h,
            Err(_) => return false,
        };
        let one = Rational::one();
        let sig = self.section_sigma(&one);
        if sig.rank() != n {
            return false;
        }
        let cols: Vec<Vector> = (0..n).map(|i| sig.column(i)).collect();
        (0..n).all(|i| {
            (0..n).all(|j| hemi.mul(&cols[i], &cols[j]) == sig.mul_vec(self.e.basis_product(i, j)).expect("n"))
        })
    }

    /// [(ξ,0), σₛ(x)] ∈ 𝔪ₛ with ℰ-component ξx, for all basis ξ, x.
    pub fn reductivity_check(&self, s: &Rational) -> bool {
        let (hd, n) = (self.h_dim(), self.e_dim());
        let m = self.m_s(s);
        (0..hd).all(|xi| {
            let h = self.embed_h(&unit_vector(hd, xi));
            (0..n).all(|i| {
                let b = self.g.mul(&h, &self.sigma(s, &unit_vector(n, i)).expect("n"));
                m.contains(&b) && b[hd..] == self.action.matrices()[xi].column(i)[..]
            })
        })
    }

    /// ⟦x,y⟧ₛ = 2s⟦x,y⟧ and Δₛ(x,y) = −s² f(⟦x,y⟧) on all basis pairs.
    pub fn projected_formula_check(&self, s: &Rational) -> bool {
        let n = self.e_dim();
        let skew = self.e.skew_symmetrize();
        let two_s = s * rat(2, 1);
        let neg_s2 = -(s * s);
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (pe, ph) = self.projected_bracket_delta(s, &unit_vector(n, i), &unit_vector(n, j)).expect("n");
                let sk = skew.basis_product(i, j);
                pe == vec_scale(&two_s, sk) && ph == vec_scale(&neg_s2, &self.f.mul_vec(sk).expect("n"))
            })
        })
    }

    /// f(⟦x,y⟧) = [f(x), f(y)] on all basis pairs.
    pub fn f_skew_consistency(&self) -> bool {
        let n = self.e_dim();
        let skew = self.e.skew_symmetrize();
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.f.mul_vec(skew.basis_product(i, j)).expect("n")
                    == self.h().mul(&self.f.column(i), &self.f.column(j))
            })
        })
    }
}

/// The triple of the sandwich theorem: 𝔥 = ℰ/ℳ, f = q, action induced by λ.
pub fn canonical_envelope(e: &StructureAlgebra, m: &Subspace) -> Result<EnvelopeTriple> {
    if let Some(w) = e.check_leibniz().witness {
        return Err(EnvelopeViolation::NotLeibniz { i: w.tuple[0], j: w.tuple[1], k: w.tuple[2] }.into());
    }
    if m.ambient() != e.dim() {
        return Err(Error::DimensionMismatch { expected: e.dim(), found: m.ambient() });
    }
    if !e.is_ideal(m) {
        return Err(Error::NotAnIdeal(format!("given subspace in {}", e.name())));
    }
    if !e.squares_ideal().is_subspace_of(m) {
        return Err(Error::Sandwich("squares ideal is not contained in M".into()));
    }
    if !m.is_subspace_of(&e.kernel_of_lambda()) {
        return Err(Error::Sandwich("M is not contained in ker lambda".into()));
    }
    let (h, q) = e.quotient(m)?;
    let h = h.with_name(format!("{}/M", e.name()));
    let mats = m.complement_coordinates().iter().map(|&c| e.left_mul_basis(c)).collect();
    let action = ModuleAction::new(h, e.dim(), mats)?;
    validate_envelope(e.clone(), action, q)
}

pub fn canonical_envelope_with(e: &StructureAlgebra, ideal: &IdealChoice) -> Result<EnvelopeTriple> {
    match ideal {
        IdealChoice::Squares => canonical_envelope(e, &e.squares_ideal()),
        IdealChoice::Kernel => canonical_envelope(e, &e.kernel_of_lambda()),
        IdealChoice::Custom(m) => canonical_envelope(e, m),
    }
}

/// 𝔥 = λ(ℰ) ⊂ gl(ℰ) acting by matrices, f = λ.
pub fn lambda_envelope(e: &StructureAlgebra) -> Result<EnvelopeTriple> {
    if let Some(w) = e.check_leibniz().witness {
        return Err(EnvelopeViolation::NotLeibniz { i: w.tuple[0], j: w.tuple[1], k: w.tuple[2] }.into());
    }
    let n = e.dim();
    let lambdas: Vec<Matrix> = (0..n).map(|i| e.left_mul_basis(i)).collect();
    let span = Subspace::span(n * n, lambdas.iter().map(Matrix::flatten))?;
    let basis: Vec<Matrix> = span.basis().iter().map(|v| Matrix::from_vec(n, n, v.clone()).expect("n^2")).collect();
    let h = matrix_lie_algebra(&format!("lambda({})", e.name()), &basis)?;
    let flat: Vec<Vector> = span.basis().to_vec();
    let f_cols: Vec<Vector> = lambdas
        .iter()
        .map(|l| coordinates_in(&flat, &l.flatten()).map(|c| c.expect("lambda(e_i) lies in the span")))
        .collect::<Result<_>>()?;
    let f = if basis.is_empty() { Matrix::zeros(0, n) } else { Matrix::from_columns(basis.len(), &f_cols)? };
    let action = ModuleAction::new(h, n, basis)?;
    validate_envelope(e.clone(), action, f)
}

/// For ℰ = 𝔥 ⋉_H V: 𝔥 acts by ad ⊕ ρ and f = π_𝔥.
pub fn hemisemidirect_envelope(act: &ModuleAction) -> Result<EnvelopeTriple> {
    let e = hemisemidirect(act)?;
    let (hd, vd) = (act.h_dim(), act.v_dim());
    let n = hd + vd;
    let h = act.h();
    let mats = (0..hd)
        .map(|i| {
            let mut m = Matrix::zeros(n, n);
            let ad = h.left_mul_basis(i);
            for r in 0..hd {
                for c in 0..hd {
                    m.set(r, c, ad.get(r, c).clone());
                }
            }
            for r in 0..vd {
                for c in 0..vd {
                    m.set(hd + r, hd + c, act.matrices()[i].get(r, c).clone());
                }
            }
            m
        })
        .collect();
    let action = ModuleAction::new(h.clone(), n, mats)?;
    let mut f = Matrix::zeros(hd, n);
    for i in 0..hd {
        f.set(i, i, Rational::one());
    }
    validate_envelope(e, action, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use crate::products::gl_action;

    fn leibniz2() -> StructureAlgebra {
        StructureAlgebra::from_entries("leibniz2", 2, &[(1, 1, 0, int(1))])
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
    fn validation_examples() {
        let t = hemisemidirect_envelope(&gl_action(2)).unwrap();
        assert!(t.validate().is_ok());
        let l = lambda_envelope(&leibniz2()).unwrap();
        assert_eq!(l.h_dim(), 1);

        let e = leibniz2();
        let zero_f = Matrix::zeros(1, 2);
        let act = ModuleAction::new(StructureAlgebra::abelian(1), 2, vec![e.left_mul_basis(1)]).unwrap();
        let err = validate_envelope(e, act, zero_f).unwrap_err();
        assert_eq!(err, Error::Envelope(EnvelopeViolation::FactorizationFails { i: 1, j: 1 }));
    }

    #[test]
    fn canonical_examples() {
        let t = canonical_envelope(&so3(), &Subspace::zero(3)).unwrap();
        assert_eq!(t.h(), &so3());
        assert_eq!(t.f(), &Matrix::identity(3));
        assert_eq!(t.g().dim(), 6);

        let e1 = Subspace::span(2, vec![unit_vector(2, 0)]).unwrap();
        let t = canonical_envelope(&leibniz2(), &e1).unwrap();
        assert_eq!(t.h_dim(), 1);
        assert_eq!(t.g().dim(), 3);
        assert!(t.g().is_lie());

        let e = leibniz2();
        assert!(matches!(canonical_envelope(&e, &Subspace::zero(2)), Err(Error::Sandwich(_))));
        let e2 = Subspace::span(2, vec![unit_vector(2, 1)]).unwrap();
        assert!(matches!(canonical_envelope(&e, &e2), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn canonical_reproduces_hemisemidirect_triple() {
        let hemi = hemisemidirect_envelope(&gl_action(2)).unwrap();
        let can = canonical_envelope_with(hemi.e(), &IdealChoice::Squares).unwrap();
        assert_eq!(can.h().constants(), hemi.h().constants());
        assert_eq!(can.f(), hemi.f());
        assert_eq!(can.action().matrices(), hemi.action().matrices());
        assert_eq!(can.g().constants(), hemi.g().constants());
    }

    #[test]
    fn sections_and_recovery() {
        let t = hemisemidirect_envelope(&gl_action(1)).unwrap();
        // σₛ(ξ,x) = (sξ, ξ, x)
        let s = rat(3, 7);
        assert_eq!(t.sigma(&s, &[int(2), int(5)]).unwrap(), vec![rat(6, 7), int(2), int(5)]);
        assert_eq!(t.m_s(&int(0)), Subspace::span(3, vec![unit_vector(3, 1), unit_vector(3, 2)]).unwrap());
        assert!(t.recovery_check());
        assert!(t.sigma_one_embed_check());
        for s in [int(1), rat(1, 2), int(-2), rat(3, 7)] {
            assert!(t.reductivity_check(&s));
            assert!(t.projected_formula_check(&s));
        }
        let (pe, ph) = t.projected_bracket_delta(&int(0), &[int(1), int(2)], &[int(3), int(4)]).unwrap();
        assert!(crate::linalg::is_zero_vector(&pe) && crate::linalg::is_zero_vector(&ph));

        let bad = t.with_f_unchecked(t.f().scale(&int(2))).unwrap();
        assert!(!bad.recovery_check());
        let bad = t.with_zeroed_action_unchecked(0).unwrap();
        assert!(!bad.sigma_one_embed_check());
    }

    #[test]
    fn delta_is_the_h_component_in_h_plus_m_s() {
        // gl(2) ⋉_H ℝ², x = (E11, 0), y = (E12, 0): ⟦x,y⟧ = (E12, 0), so at
        // s = 1/2 the 𝔪ₛ part is (E12, 0) and Δₛ = −¼ E12.
        let t = hemisemidirect_envelope(&gl_action(2)).unwrap();
        let x = unit_vector(6, 0);
        let y = unit_vector(6, 1);
        let (pe, ph) = t.projected_bracket_delta(&rat(1, 2), &x, &y).unwrap();
        assert_eq!(pe, unit_vector(6, 1));
        assert_eq!(ph, vec![int(0), rat(-1, 4), int(0), int(0)]);
        for s in [int(1), rat(1, 2), int(-2), rat(3, 7)] {
            assert!(t.projected_formula_check(&s));
        }
    }

    #[test]
    fn surjectivity_notice() {
        let t = canonical_envelope(&so3(), &Subspace::zero(3)).unwrap();
        assert!(t.f_is_surjective());
        let e = leibniz2();
        let big =
            ModuleAction::new(StructureAlgebra::abelian(2), 2, vec![e.left_mul_basis(1), Matrix::zeros(2, 2)]).unwrap();
        let f = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let t = validate_envelope(e, big, f).unwrap();
        assert!(!t.f_is_surjective());
    }
}
