//! Semidirect, hemisemidirect and demisemidirect products of a Lie algebra
//! with a module, omni-Lie algebras, and graph criteria for Leibniz algebras.
//!
//! Coordinates on 𝔥 ⊕ V list the 𝔥 block first.

use num_traits::Zero;

use crate::algebra::{default_basis_names, StructureAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{axpy, int, is_zero_vector, rat, vec_scale, zero_vector, Matrix, Rational, Vector};
use crate::subspace::Subspace;

/// A Lie algebra 𝔥 together with a representation on V = 𝕂^vDim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    h: StructureAlgebra,
    matrices: Vec<Matrix>,
    v_dim: usize,
    v_names: Vec<String>,
}

impl ModuleAction {
    /// Validates shapes and that e_i ↦ matrices[i] is a Lie homomorphism.
    pub fn new(h: StructureAlgebra, v_dim: usize, matrices: Vec<Matrix>) -> Result<Self> {
        let act = Self::new_unchecked(h, v_dim, matrices)?;
        if let Some((i, j)) = act.first_homomorphism_failure() {
            return Err(Error::InvalidAction(format!(
                "matrix of [{},{}] is not the commutator of their matrices",
                act.h.basis_names()[i],
                act.h.basis_names()[j]
            )));
        }
        Ok(act)
    }

    /// Checks shapes only. Intended for building deliberately broken data.
    pub fn new_unchecked(h: StructureAlgebra, v_dim: usize, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.len() != h.dim() {
            return Err(Error::DimensionMismatch { expected: h.dim(), found: matrices.len() });
        }
        for m in &matrices {
            if m.rows() != v_dim || m.cols() != v_dim {
                return Err(Error::InvalidAction(format!(
                    "action matrix is {}x{}, expected {v_dim}x{v_dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let v_names = (1..=v_dim).map(|i| format!("v{i}")).collect();
        Ok(ModuleAction { h, matrices, v_dim, v_names })
    }

    /// The zero representation.
    pub fn trivial(h: StructureAlgebra, v_dim: usize) -> Self {
        let matrices = vec![Matrix::zeros(v_dim, v_dim); h.dim()];
        Self::new_unchecked(h, v_dim, matrices).expect("shapes agree")
    }

    /// Left multiplication of a Lie algebra on itself.
    pub fn adjoint(h: StructureAlgebra) -> Self {
        let matrices = (0..h.dim()).map(|i| h.left_mul_basis(i)).collect();
        let names = h.basis_names().to_vec();
        let n = h.dim();
        Self::new_unchecked(h, n, matrices).expect("shapes agree").with_v_names(names).expect("length n")
    }

    pub fn with_v_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.v_dim {
            return Err(Error::DimensionMismatch { expected: self.v_dim, found: names.len() });
        }
        self.v_names = names;
        Ok(self)
    }

    fn first_homomorphism_failure(&self) -> Option<(usize, usize)> {
        let n = self.h.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.matrix_of(self.h.basis_product(i, j));
                let rhs = self.matrices[i].commutator(&self.matrices[j]).expect("square");
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_homomorphism(&self) -> bool {
        self.first_homomorphism_failure().is_none()
    }

    pub fn h(&self) -> &StructureAlgebra {
        &self.h
    }

    pub fn h_dim(&self) -> usize {
        self.h.dim()
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    pub fn v_names(&self) -> &[String] {
        &self.v_names
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// ρ(ξ) for ξ in 𝔥 coordinates.
    pub fn matrix_of(&self, xi: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.v_dim, self.v_dim);
        for (c, a) in xi.iter().zip(&self.matrices) {
            if !c.is_zero() {
                m = &m + &a.scale(c);
            }
        }
        m
    }

    /// ξ·v
    pub fn act(&self, xi: &[Rational], v: &[Rational]) -> Result<Vector> {
        if xi.len() != self.h.dim() {
            return Err(Error::DimensionMismatch { expected: self.h.dim(), found: xi.len() });
        }
        self.matrix_of(xi).mul_vec(v)
    }

    pub fn is_zero(&self) -> bool {
        self.matrices.iter().all(Matrix::is_zero)
    }

    fn require_lie(&self) -> Result<()> {
        let c = self.h.check_lie();
        match c.witness {
            None => Ok(()),
            Some(w) => Err(Error::NotLie(format!("{}: {w}", self.h.name()))),
        }
    }

    /// Basis labels for 𝔥 ⊕ V, prefixed only when the two blocks collide.
    pub fn block_names(&self) -> Vec<String> {
        let hn = self.h.basis_names();
        let clash = hn.iter().any(|a| self.v_names.contains(a));
        if clash {
            hn.iter().map(|a| format!("h.{a}")).chain(self.v_names.iter().map(|a| format!("v.{a}"))).collect()
        } else {
            hn.iter().chain(&self.v_names).cloned().collect()
        }
    }

    /// Constants on 𝔥 ⊕ V with (ξ,x)(η,y) = ([ξ,η], a·ξy + b·ηx).
    fn block_algebra(&self, name: String, a: &Rational, b: &Rational) -> StructureAlgebra {
        let (hd, vd) = (self.h.dim(), self.v_dim);
        let n = hd + vd;
        let algebra = StructureAlgebra::from_fn(name, n, |i, j| {
            let mut out = zero_vector(n);
            if i < hd && j < hd {
                out[..hd].clone_from_slice(self.h.basis_product(i, j));
            } else if i < hd && !a.is_zero() {
                axpy(&mut out[hd..], a, &self.matrices[i].column(j - hd));
            } else if j < hd && !b.is_zero() {
                axpy(&mut out[hd..], b, &self.matrices[j].column(i - hd));
            }
            out
        });
        algebra.with_basis_names(self.block_names()).expect("labels are distinct")
    }
}

/// [(ξ,x),(η,y)] = ([ξ,η], ξy − ηx)
pub fn semidirect_lie(act: &ModuleAction) -> Result<StructureAlgebra> {
    act.require_lie()?;
    Ok(act.block_algebra(format!("{}|x{}", act.h.name(), act.v_dim), &int(1), &int(-1)))
}

/// (ξ,x)·(η,y) = ([ξ,η], ξy)
pub fn hemisemidirect(act: &ModuleAction) -> Result<StructureAlgebra> {
    act.require_lie()?;
    Ok(act.block_algebra(format!("{}|xH{}", act.h.name(), act.v_dim), &int(1), &int(0)))
}

/// ⟦(ξ,x),(η,y)⟧ = ([ξ,η], ½(ξy − ηx))
pub fn demisemidirect(act: &ModuleAction) -> Result<StructureAlgebra> {
    act.require_lie()?;
    Ok(act.block_algebra(format!("{}|xD{}", act.h.name(), act.v_dim), &rat(1, 2), &rat(-1, 2)))
}

/// (ξ,x)∘(η,y) = (0, ½(ξy + ηx))
pub fn circle_product(act: &ModuleAction, a: &[Rational], b: &[Rational]) -> Result<Vector> {
    let (hd, vd) = (act.h_dim(), act.v_dim());
    for v in [a, b] {
        if v.len() != hd + vd {
            return Err(Error::DimensionMismatch { expected: hd + vd, found: v.len() });
        }
    }
    let s = crate::linalg::vec_add(&act.act(&a[..hd], &b[hd..])?, &act.act(&b[..hd], &a[hd..])?);
    let mut out = zero_vector(hd + vd);
    out[hd..].clone_from_slice(&vec_scale(&rat(1, 2), &s));
    Ok(out)
}

/// E_{pq} ↦ index p·d + q.
pub fn gl_index(d: usize, p: usize, q: usize) -> usize {
    p * d + q
}

/// gl(d) with basis E_{pq} in row-major order and the commutator bracket.
pub fn gl(d: usize) -> StructureAlgebra {
    let n = d * d;
    let mut entries = Vec::new();
    for p in 0..d {
        for q in 0..d {
            for r in 0..d {
                for s in 0..d {
                    // [E_pq, E_rs] = δ_qr E_ps − δ_sp E_rq
                    if q == r {
                        entries.push((gl_index(d, p, q), gl_index(d, r, s), gl_index(d, p, s), int(1)));
                    }
                    if s == p {
                        entries.push((gl_index(d, p, q), gl_index(d, r, s), gl_index(d, r, q), int(-1)));
                    }
                }
            }
        }
    }
    let names = (0..d).flat_map(|p| (0..d).map(move |q| format!("E{}{}", p + 1, q + 1))).collect();
    StructureAlgebra::from_entries(format!("gl{d}"), n, &entries).with_basis_names(names).expect("labels are distinct")
}

/// The standard representation of gl(d) on 𝕂^d.
pub fn gl_action(d: usize) -> ModuleAction {
    let matrices = (0..d)
        .flat_map(|p| (0..d).map(move |q| (p, q)))
        .map(|(p, q)| {
            let mut m = Matrix::zeros(d, d);
            m.set(p, q, int(1));
            m
        })
        .collect();
    ModuleAction::new_unchecked(gl(d), d, matrices).expect("shapes agree")
}

/// (gl(d) ⋉_H 𝕂^d, gl(d) ⋉_D 𝕂^d)
pub fn omni_algebras(d: usize) -> Result<(StructureAlgebra, StructureAlgebra)> {
    if d == 0 {
        return Err(Error::InvalidAlgebra("omni algebras need d >= 1".into()));
    }
    let act = gl_action(d);
    let hemi = hemisemidirect(&act)?.with_name(format!("omni-leibniz{d}"));
    let demi = demisemidirect(&act)?.with_name(format!("omni-lie{d}"));
    Ok((hemi, demi))
}

/// Outcome of the graph tests for 𝒢_λ = span{(λ(e_i), e_i)} ⊂ gl(n) ⊕ 𝕂ⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphReport {
    pub graph_closed_under_leibniz: bool,
    pub graph_is_lie_subalgebra: bool,
    pub circle_vanishes_on_graph: bool,
}

/// The graph 𝒢_λ as a subspace of gl(n) ⊕ 𝕂ⁿ (gl block flattened row-major).
pub fn graph_of_lambda(a: &StructureAlgebra) -> Subspace {
    Subspace::span(a.dim() * a.dim() + a.dim(), graph_basis(a)).expect("uniform lengths")
}

fn graph_basis(a: &StructureAlgebra) -> Vec<Vector> {
    let n = a.dim();
    (0..n)
        .map(|i| {
            let mut v = a.left_mul_basis(i).flatten();
            v.extend(crate::linalg::unit_vector(n, i));
            v
        })
        .collect()
}

fn split(v: &[Rational], n: usize) -> (Matrix, Vector) {
    (Matrix::from_vec(n, n, v[..n * n].to_vec()).expect("n^2 entries"), v[n * n..].to_vec())
}

fn join(m: &Matrix, x: Vector) -> Vector {
    let mut v = m.flatten();
    v.extend(x);
    v
}

/// Products of graph basis vectors computed in gl(n) ⊕ 𝕂ⁿ with the
/// hemisemidirect product (`half = false`) or the demisemidirect bracket.
fn graph_products(a: &StructureAlgebra, half: bool) -> Vec<Vec<Vector>> {
    let n = a.dim();
    let basis = graph_basis(a);
    let parts: Vec<(Matrix, Vector)> = basis.iter().map(|g| split(g, n)).collect();
    parts
        .iter()
        .map(|(xi, x)| {
            parts
                .iter()
                .map(|(eta, y)| {
                    let h = xi.commutator(eta).expect("square");
                    let v = if half {
                        let d = crate::linalg::vec_sub(&xi.mul_vec(y).unwrap(), &eta.mul_vec(x).unwrap());
                        vec_scale(&rat(1, 2), &d)
                    } else {
                        xi.mul_vec(y).unwrap()
                    };
                    join(&h, v)
                })
                .collect()
        })
        .collect()
}

/// The product restricted to 𝒢_λ, written in the basis g_i = (λ(e_i), e_i).
/// `None` when 𝒢_λ is not closed.
fn restricted(a: &StructureAlgebra, half: bool) -> Option<StructureAlgebra> {
    let n = a.dim();
    let graph = graph_of_lambda(a);
    let products = graph_products(a, half);
    let mut constants = Vec::with_capacity(n * n * n);
    for row in &products {
        for p in row {
            if !graph.contains(p) {
                return None;
            }
            // π_ℰ is injective on 𝒢_λ and sends g_i to e_i.
            constants.extend(p[n * n..].iter().cloned());
        }
    }
    Some(StructureAlgebra::new(format!("graph({})", a.name()), default_basis_names(n), constants).expect("n^3"))
}

/// 𝒢_λ with the restricted hemisemidirect product, when closed.
pub fn graph_algebra(a: &StructureAlgebra) -> Option<StructureAlgebra> {
    restricted(a, false)
}

pub fn graph_criterion(a: &StructureAlgebra) -> GraphReport {
    let n = a.dim();
    let closed = restricted(a, false).is_some();
    let circle_vanishes = (0..n).all(|i| {
        (i..n).all(|j| {
            is_zero_vector(
                &a.symmetrized_part(&crate::linalg::unit_vector(n, i), &crate::linalg::unit_vector(n, j)).unwrap(),
            )
        })
    });
    let lie_sub = circle_vanishes && restricted(a, true).map(|r| r.check_lie().holds).unwrap_or(false);
    GraphReport {
        graph_closed_under_leibniz: closed,
        graph_is_lie_subalgebra: lie_sub,
        circle_vanishes_on_graph: circle_vanishes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat, unit_vector};

    fn gl1_on_r() -> ModuleAction {
        gl_action(1)
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

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn semidirect_examples() {
        let t = ModuleAction::trivial(StructureAlgebra::abelian(2), 2);
        let s = semidirect_lie(&t).unwrap();
        assert!(s.nonzero_products().is_empty());

        let s = semidirect_lie(&gl1_on_r()).unwrap();
        // [(a,x),(b,y)] = (0, ay − bx)
        assert_eq!(s.product(&v(&[2, 3]), &v(&[5, 7])).unwrap(), v(&[0, 14 - 15]));

        let rot = ModuleAction::adjoint(so3());
        let s = semidirect_lie(&rot).unwrap();
        assert_eq!(s.dim(), 6);
        assert!(s.is_lie());
    }

    #[test]
    fn hemisemidirect_examples() {
        let h = hemisemidirect(&gl1_on_r()).unwrap();
        assert_eq!(h.product(&v(&[2, 3]), &v(&[5, 7])).unwrap(), v(&[0, 14]));

        let z = hemisemidirect(&ModuleAction::trivial(so3(), 2)).unwrap();
        let x = v(&[1, 2, 0, 4, 5]);
        let y = v(&[0, 1, 3, -1, 2]);
        let p = z.product(&x, &y).unwrap();
        assert!(is_zero_vector(&p[3..]));
        assert_eq!(&p[..3], so3().product(&x[..3], &y[..3]).unwrap().as_slice());

        let h2 = hemisemidirect(&gl_action(2)).unwrap();
        assert!(h2.is_leibniz());
        assert!(!h2.is_lie());
    }

    #[test]
    fn demisemidirect_examples() {
        let d = demisemidirect(&gl1_on_r()).unwrap();
        assert_eq!(d.product(&v(&[2, 3]), &v(&[5, 7])).unwrap(), vec![int(0), rat(-1, 2)]);
        let d2 = demisemidirect(&gl_action(2)).unwrap();
        assert!(!d2.check_lie().holds);
        assert_eq!(d2, hemisemidirect(&gl_action(2)).unwrap().skew_symmetrize());
    }

    #[test]
    fn omni_examples() {
        let (_, d1) = omni_algebras(1).unwrap();
        assert_eq!(d1.product(&v(&[2, 3]), &v(&[5, 7])).unwrap(), vec![int(0), rat(-1, 2)]);

        let (h2, d2) = omni_algebras(2).unwrap();
        assert_eq!(h2.dim(), 6);
        let x = unit_vector(6, gl_index(2, 0, 0));
        let mut y = unit_vector(6, gl_index(2, 0, 1));
        y[4] = int(1);
        let mut expect = unit_vector(6, gl_index(2, 0, 1));
        expect[4] = rat(1, 2);
        assert_eq!(d2.product(&x, &y).unwrap(), expect);
        assert!(is_zero_vector(&d2.product(&x, &x).unwrap()));
        assert_eq!(d2.basis_names()[..4], ["E11", "E12", "E21", "E22"]);
        assert!(omni_algebras(0).is_err());
    }

    #[test]
    fn circle_examples() {
        let act = gl1_on_r();
        assert_eq!(circle_product(&act, &v(&[2, 3]), &v(&[5, 7])).unwrap(), vec![int(0), rat(29, 2)]);
        assert_eq!(circle_product(&act, &v(&[2, 3]), &v(&[2, 3])).unwrap(), v(&[0, 6]));
        let t = ModuleAction::trivial(so3(), 3);
        assert!(is_zero_vector(&circle_product(&t, &v(&[1, 1, 1, 1, 1, 1]), &v(&[1, 2, 3, 4, 5, 6])).unwrap()));
    }

    #[test]
    fn graph_examples() {
        let g = graph_criterion(&so3());
        assert!(g.graph_closed_under_leibniz && g.graph_is_lie_subalgebra && g.circle_vanishes_on_graph);

        let l2 = StructureAlgebra::from_entries("l2", 2, &[(1, 1, 0, int(1))]);
        let g = graph_criterion(&l2);
        assert!(g.graph_closed_under_leibniz);
        assert!(!g.graph_is_lie_subalgebra);
        assert!(!g.circle_vanishes_on_graph);
        assert_eq!(graph_algebra(&l2).unwrap(), l2);

        let idem = StructureAlgebra::from_entries("idem", 1, &[(0, 0, 0, int(1))]);
        assert!(!graph_criterion(&idem).graph_closed_under_leibniz);
    }

    #[test]
    fn invalid_action_rejected() {
        let m = vec![Matrix::from_i64(&[&[1, 0], &[0, 0]]), Matrix::from_i64(&[&[0, 1], &[0, 0]]), Matrix::zeros(2, 2)];
        assert!(matches!(ModuleAction::new(so3(), 2, m), Err(Error::InvalidAction(_))));
        let l2 = StructureAlgebra::from_entries("l2", 2, &[(1, 1, 0, int(1))]);
        assert!(matches!(hemisemidirect(&ModuleAction::trivial(l2, 1)), Err(Error::NotLie(_))));
    }
}
