//! Lie–Yamaguti algebras: a skew binary product ⟦·,·⟧ and a ternary product
//! {·,·,·} satisfying LY1–LY6.

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{default_basis_names, matrix_lie_algebra, StructureAlgebra};
use crate::error::{Error, LyEnvelopeViolation, Result};
use crate::linalg::{
    axpy, int, is_zero_vector, rat, unit_vector, vec_add, vec_scale, zero_vector, Matrix, Rational, Vector,
};
use crate::products::ModuleAction;
use crate::subspace::{coordinates_in, Subspace};

/// Default bound on the dimension accepted by the O(n⁶) checks.
pub const DEFAULT_DIM_CAP: usize = 12;

/// `b` is n³ (`⟦e_i,e_j⟧ = Σ_k b[(i·n+j)·n+k] e_k`), `t` is n⁴
/// (`{e_i,e_j,e_k} = Σ_l t[((i·n+j)·n+k)·n+l] e_l`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieYamaguti {
    dim: usize,
    b: Vec<Rational>,
    t: Vec<Rational>,
    // δ(e_i,e_j) as matrices, index i·n+j.
    deltas: Vec<Matrix>,
}

impl LieYamaguti {
    pub fn new(dim: usize, b: Vec<Rational>, t: Vec<Rational>) -> Result<Self> {
        if b.len() != dim.pow(3) {
            return Err(Error::DimensionMismatch { expected: dim.pow(3), found: b.len() });
        }
        if t.len() != dim.pow(4) {
            return Err(Error::DimensionMismatch { expected: dim.pow(4), found: t.len() });
        }
        let n = dim;
        let deltas = (0..n * n)
            .map(|ij| {
                let mut m = Matrix::zeros(n, n);
                for k in 0..n {
                    for l in 0..n {
                        let c = &t[(ij * n + k) * n + l];
                        if !c.is_zero() {
                            m.set(l, k, c.clone());
                        }
                    }
                }
                m
            })
            .collect();
        Ok(LieYamaguti { dim, b, t, deltas })
    }

    /// Sparse constructor: `binary` entries `(i,j,k,c)`, `ternary` entries `(i,j,k,l,c)`.
    pub fn from_entries(
        dim: usize,
        binary: &[(usize, usize, usize, Rational)],
        ternary: &[(usize, usize, usize, usize, Rational)],
    ) -> Result<Self> {
        let n = dim;
        let mut b = zero_vector(n.pow(3));
        for (i, j, k, c) in binary {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::InvalidAlgebra(format!("binary index ({i},{j},{k}) out of range")));
            }
            b[(i * n + j) * n + k] += c;
        }
        let mut t = zero_vector(n.pow(4));
        for (i, j, k, l, c) in ternary {
            if *i >= n || *j >= n || *k >= n || *l >= n {
                return Err(Error::InvalidAlgebra(format!("ternary index ({i},{j},{k},{l}) out of range")));
            }
            t[((i * n + j) * n + k) * n + l] += c;
        }
        Self::new(dim, b, t)
    }

    /// Lie algebra with zero ternary product.
    pub fn from_lie(a: &StructureAlgebra) -> Self {
        Self::new(a.dim(), a.constants().to_vec(), zero_vector(a.dim().pow(4))).expect("shapes")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn binary_constants(&self) -> &[Rational] {
        &self.b
    }

    pub fn ternary_constants(&self) -> &[Rational] {
        &self.t
    }

    pub fn b(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim;
        &self.b[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// The binary product as a structure-constant algebra.
    pub fn binary_algebra(&self) -> StructureAlgebra {
        StructureAlgebra::new("binary", default_basis_names(self.dim), self.b.clone()).expect("n^3")
    }

    /// δ(e_i, e_j): z ↦ {e_i, e_j, z}.
    pub fn delta_basis(&self, i: usize, j: usize) -> &Matrix {
        &self.deltas[i * self.dim + j]
    }

    /// δ(x, y) for arbitrary vectors.
    pub fn delta(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let d = &self.deltas[i * n + j];
                if !d.is_zero() {
                    m = &m + &d.scale(&(xi * yj));
                }
            }
        }
        m
    }

    pub fn binary(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    axpy(&mut out, &(xi * yj), self.b(i, j));
                }
            }
        }
        out
    }

    pub fn ternary(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
        self.delta(x, y).mul_vec(z).expect("length dim")
    }

    fn e(&self, i: usize) -> Vector {
        unit_vector(self.dim, i)
    }
}

/// The first violated axiom, with the failing basis tuple and both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyFailure {
    pub axiom: usize,
    pub tuple: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyReport {
    pub holds: bool,
    pub failure: Option<LyFailure>,
}

fn first_failure<F>(n: usize, check: F) -> Option<(Vec<usize>, Vector, Vector)>
where
    F: Fn(usize) -> Option<(Vec<usize>, Vector, Vector)> + Sync + Send,
{
    // Each worker scans one leading index; the smallest failing index wins.
    (0..n).into_par_iter().map(check).collect::<Vec<_>>().into_iter().flatten().next()
}

fn ly1(l: &LieYamaguti) -> Option<(Vec<usize>, Vector, Vector)> {
    let n = l.dim;
    first_failure(n, |i| {
        (0..n).find_map(|j| {
            let lhs = l.b(i, j).to_vec();
            let rhs: Vector = l.b(j, i).iter().map(|x| -x).collect();
            (lhs != rhs).then(|| (vec![i, j], lhs, rhs))
        })
    })
}

fn ly2(l: &LieYamaguti) -> Option<(Vec<usize>, Vector, Vector)> {
    let n = l.dim;
    first_failure(n, |i| {
        (0..n).find_map(|j| {
            let lhs = l.delta_basis(i, j).flatten();
            let rhs: Vector = l.delta_basis(j, i).flatten().iter().map(|x| -x).collect();
            (lhs != rhs).then(|| (vec![i, j], lhs, rhs))
        })
    })
}

fn ly3(l: &LieYamaguti) -> Option<(Vec<usize>, Vector, Vector)> {
    let n = l.dim;
    first_failure(n, |i| {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (l.e(i), l.e(j), l.e(k));
                let mut sum = zero_vector(n);
                for (a, b, c) in [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)] {
                    sum = vec_add(&sum, &l.binary(&l.binary(a, b), c));
                    sum = vec_add(&sum, &l.ternary(a, b, c));
                }
                if !is_zero_vector(&sum) {
                    return Some((vec![i, j, k], sum, zero_vector(n)));
                }
            }
        }
        None
    })
}

fn ly4(l: &LieYamaguti) -> Option<(Vec<usize>, Vector, Vector)> {
    let n = l.dim;
    first_failure(n, |i| {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (l.e(i), l.e(j), l.e(k));
                let m = &(&l.delta(&l.binary(&x, &y), &z) + &l.delta(&l.binary(&y, &z), &x))
                    + &l.delta(&l.binary(&z, &x), &y);
                if !m.is_zero() {
                    let u = (0..n).find(|&u| !is_zero_vector(&m.column(u))).expect("nonzero matrix");
                    return Some((vec![i, j, k, u], m.column(u), zero_vector(n)));
                }
            }
        }
        None
    })
}

fn ly5(l: &LieYamaguti) -> Option<(Vec<usize>, Vector, Vector)> {
    let n = l.dim;
    first_failure(n, |i| {
        for j in 0..n {
            let d = l.delta_basis(i, j);
            if d.is_zero() {
                continue;
            }
            let cols: Vec<Vector> = (0..n).map(|u| d.column(u)).collect();
            for u in 0..n {
                for v in 0..n {
                    let lhs = d.mul_vec(l.b(u, v)).expect("n");
                    let rhs = vec_add(&l.binary(&cols[u], &l.e(v)), &l.binary(&l.e(u), &cols[v]));
                    if lhs != rhs {
                        return Some((vec![i, j, u, v], lhs, rhs));
                    }
                }
            }
        }
        None
    })
}

fn ly6(l: &LieYamaguti) -> Option<(Vec<usize>, Vector, Vector)> {
    let n = l.dim;
    first_failure(n, |i| {
        for j in 0..n {
            let d = l.delta_basis(i, j);
            if d.is_zero() {
                continue;
            }
            let cols: Vec<Vector> = (0..n).map(|u| d.column(u)).collect();
            for u in 0..n {
                for v in 0..n {
                    let duv = l.delta_basis(u, v);
                    // {x,y,{u,v,w}} − {u,v,{x,y,w}} = {{x,y,u},v,w} + {u,{x,y,v},w}
                    let lhs_m = d.commutator(duv).expect("square");
                    let rhs_m = &l.delta(&cols[u], &l.e(v)) + &l.delta(&l.e(u), &cols[v]);
                    if lhs_m != rhs_m {
                        let w = (0..n).find(|&w| lhs_m.column(w) != rhs_m.column(w)).expect("differ");
                        let lhs = d.mul_vec(&duv.column(w)).expect("n");
                        let rhs = vec_add(&rhs_m.column(w), &duv.mul_vec(&cols[w]).expect("n"));
                        return Some((vec![i, j, u, v, w], lhs, rhs));
                    }
                }
            }
        }
        None
    })
}

type AxiomCheck = fn(&LieYamaguti) -> Option<(Vec<usize>, Vector, Vector)>;

/// Checks LY1–LY6 on all basis tuples and reports the first failing axiom.
pub fn validate_ly(l: &LieYamaguti) -> LyReport {
    let checks: [AxiomCheck; 6] = [ly1, ly2, ly3, ly4, ly5, ly6];
    for (idx, check) in checks.iter().enumerate() {
        if let Some((tuple, lhs, rhs)) = check(l) {
            return LyReport { holds: false, failure: Some(LyFailure { axiom: idx + 1, tuple, lhs, rhs }) };
        }
    }
    LyReport { holds: true, failure: None }
}

/// First failure of each axiom, LY1 first.
pub fn ly_axiom_failures(l: &LieYamaguti) -> [Option<LyFailure>; 6] {
    let checks: [AxiomCheck; 6] = [ly1, ly2, ly3, ly4, ly5, ly6];
    let mut out: [Option<LyFailure>; 6] = Default::default();
    for (idx, check) in checks.iter().enumerate() {
        out[idx] = check(l).map(|(tuple, lhs, rhs)| LyFailure { axiom: idx + 1, tuple, lhs, rhs });
    }
    out
}

/// Per-axiom outcomes, LY1 first.
pub fn ly_axiom_table(l: &LieYamaguti) -> [bool; 6] {
    ly_axiom_failures(l).map(|f| f.is_none())
}

fn require_leibniz(e: &StructureAlgebra) -> Result<()> {
    match e.check_leibniz().witness {
        None => Ok(()),
        Some(w) => Err(Error::NotLeibniz(w.to_string())),
    }
}

/// ⟦·,·⟧ = skew-symmetrization and {x,y,z} = −¼ (x·y)·z.
pub fn ly_from_leibniz(e: &StructureAlgebra) -> Result<LieYamaguti> {
    require_leibniz(e)?;
    ternary_from(e, e)
}

/// The same structure with the ternary written as −¼ ⟦x,y⟧·z.
pub fn ly_from_leibniz_bracket_form(e: &StructureAlgebra) -> Result<LieYamaguti> {
    require_leibniz(e)?;
    ternary_from(e, &e.skew_symmetrize())
}

fn ternary_from(e: &StructureAlgebra, first: &StructureAlgebra) -> Result<LieYamaguti> {
    let n = e.dim();
    let quarter = rat(-1, 4);
    let mut t = Vec::with_capacity(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            let xy = first.basis_product(i, j);
            for k in 0..n {
                t.extend(vec_scale(&quarter, &e.mul_basis_right(xy, k)));
            }
        }
    }
    LieYamaguti::new(n, e.skew_symmetrize().constants().to_vec(), t)
}

/// LY structure on 𝔪 induced by a reductive decomposition 𝔤 = 𝔥 ⊕ 𝔪,
/// written in the given basis of 𝔪.
pub fn ly_from_decomposition(g: &StructureAlgebra, h: &Subspace, m_basis: &[Vector]) -> Result<LieYamaguti> {
    if let Some(w) = g.check_lie().witness {
        return Err(Error::NotLie(w.to_string()));
    }
    let gd = g.dim();
    let m = Subspace::span(gd, m_basis.to_vec())?;
    if m.dim() != m_basis.len() {
        return Err(Error::NotReductive("m basis is not linearly independent".into()));
    }
    if h.ambient() != gd || h.dim() + m.dim() != gd || h.sum(&m)?.dim() != gd {
        return Err(Error::NotReductive("h and m do not form a direct sum decomposition of g".into()));
    }
    if !g.is_subalgebra(h) {
        return Err(Error::NotReductive("h is not a subalgebra".into()));
    }
    for (a, hv) in h.basis().iter().enumerate() {
        for (i, mv) in m_basis.iter().enumerate() {
            if !m.contains(&g.mul(hv, mv)) {
                return Err(Error::NotReductive(format!("[h_{a}, m_{i}] is not in m")));
            }
        }
    }
    let hd = h.dim();
    let n = m_basis.len();
    let family: Vec<Vector> = h.basis().iter().chain(m_basis).cloned().collect();
    let split = |v: &[Rational]| -> (Vector, Vector) {
        let c = coordinates_in(&family, v).expect("length").expect("h + m = g");
        (c[..hd].to_vec(), c[hd..].to_vec())
    };
    let to_g = |hc: &[Rational]| -> Vector {
        let mut v = zero_vector(gd);
        for (c, b) in hc.iter().zip(h.basis()) {
            axpy(&mut v, c, b);
        }
        v
    };
    let mut b = Vec::with_capacity(n.pow(3));
    let mut t = Vec::with_capacity(n.pow(4));
    for x in m_basis {
        for y in m_basis {
            let (dh, bm) = split(&g.mul(x, y));
            b.extend(bm);
            let delta = to_g(&dh);
            for z in m_basis {
                let (_, tm) = split(&g.mul(&delta, z));
                t.extend(tm);
            }
        }
    }
    LieYamaguti::new(n, b, t)
}

/// δ(e_i, e_j) for i < j and the subspace IDer of gl(n) (flattened row-major)
/// they span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerDerivations {
    pub pairs: Vec<(usize, usize)>,
    pub matrices: Vec<Matrix>,
    pub span: Subspace,
}

pub fn inner_derivations(l: &LieYamaguti) -> InnerDerivations {
    let n = l.dim;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let matrices: Vec<Matrix> = pairs.iter().map(|&(i, j)| l.delta_basis(i, j).clone()).collect();
    let span = Subspace::span(n * n, matrices.iter().map(Matrix::flatten)).expect("n^2");
    InnerDerivations { pairs, matrices, span }
}

/// Δ: 𝔪 × 𝔪 → 𝔥 given on basis pairs, `values[i·n + j] = Δ(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaMap {
    pub h_dim: usize,
    pub m_dim: usize,
    pub values: Vec<Vector>,
}

impl DeltaMap {
    pub fn new(h_dim: usize, m_dim: usize, values: Vec<Vector>) -> Result<Self> {
        if values.len() != m_dim * m_dim {
            return Err(Error::DimensionMismatch { expected: m_dim * m_dim, found: values.len() });
        }
        if let Some(v) = values.iter().find(|v| v.len() != h_dim) {
            return Err(Error::DimensionMismatch { expected: h_dim, found: v.len() });
        }
        Ok(DeltaMap { h_dim, m_dim, values })
    }

    pub fn basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.values[i * self.m_dim + j]
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = zero_vector(self.h_dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    axpy(&mut out, &(xi * yj), self.basis(i, j));
                }
            }
        }
        out
    }
}

/// 𝔤 = 𝔥 ⊕ 𝔪 with the 𝔥 block first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyEnvelope {
    pub g: StructureAlgebra,
    pub h_dim: usize,
    pub m_dim: usize,
}

impl LyEnvelope {
    pub fn h_subspace(&self) -> Subspace {
        let gd = self.g.dim();
        Subspace::span(gd, (0..self.h_dim).map(|i| unit_vector(gd, i))).expect("gd")
    }

    pub fn m_basis(&self) -> Vec<Vector> {
        let gd = self.g.dim();
        (self.h_dim..gd).map(|i| unit_vector(gd, i)).collect()
    }

    /// The LY structure induced by the decomposition, in the 𝔪 basis.
    pub fn induced(&self) -> Result<LieYamaguti> {
        ly_from_decomposition(&self.g, &self.h_subspace(), &self.m_basis())
    }
}

fn ly_envelope_violation(l: &LieYamaguti, action: &ModuleAction, delta: &DeltaMap) -> Result<(), LyEnvelopeViolation> {
    let n = l.dim;
    let hd = action.h_dim();
    if action.v_dim() != n || delta.m_dim != n || delta.h_dim != hd {
        return Err(LyEnvelopeViolation::Shape(format!(
            "m has dimension {n}, action on {}, delta {}x{} -> {} with h of dimension {hd}",
            action.v_dim(),
            delta.m_dim,
            delta.m_dim,
            delta.h_dim
        )));
    }
    let h = action.h();
    for (xi, d) in action.matrices().iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let lhs = d.mul_vec(l.b(i, j)).expect("n");
                let rhs = vec_add(&l.binary(&d.column(i), &l.e(j)), &l.binary(&l.e(i), &d.column(j)));
                if lhs != rhs {
                    return Err(LyEnvelopeViolation::BinaryDerivation { xi, i, j });
                }
            }
        }
    }
    for (xi, d) in action.matrices().iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let lhs_m = d.commutator(l.delta_basis(i, j)).expect("square");
                let rhs_m = &l.delta(&d.column(i), &l.e(j)) + &l.delta(&l.e(i), &d.column(j));
                if lhs_m != rhs_m {
                    let k = (0..n).find(|&k| lhs_m.column(k) != rhs_m.column(k)).expect("differ");
                    return Err(LyEnvelopeViolation::TernaryDerivation { xi, i, j, k });
                }
            }
        }
    }
    for i in 0..n {
        for j in i..n {
            let neg: Vector = delta.basis(j, i).iter().map(|x| -x).collect();
            if delta.basis(i, j) != neg.as_slice() {
                return Err(LyEnvelopeViolation::DeltaNotSkew { i, j });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let m = action.matrix_of(delta.basis(i, j));
            if &m != l.delta_basis(i, j) {
                let k = (0..n).find(|&k| m.column(k) != l.delta_basis(i, j).column(k)).expect("differ");
                return Err(LyEnvelopeViolation::Delta1 { i, j, k });
            }
        }
    }
    for xi in 0..hd {
        let d = &action.matrices()[xi];
        for i in 0..n {
            for j in 0..n {
                let lhs = h.mul(&unit_vector(hd, xi), delta.basis(i, j));
                let rhs = vec_add(&delta.eval(&d.column(i), &l.e(j)), &delta.eval(&l.e(i), &d.column(j)));
                if lhs != rhs {
                    return Err(LyEnvelopeViolation::Delta2 { xi, i, j });
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (l.e(i), l.e(j), l.e(k));
                let s = vec_add(
                    &vec_add(&delta.eval(&l.binary(&x, &y), &z), &delta.eval(&l.binary(&y, &z), &x)),
                    &delta.eval(&l.binary(&z, &x), &y),
                );
                if !is_zero_vector(&s) {
                    return Err(LyEnvelopeViolation::Delta3 { i, j, k });
                }
            }
        }
    }
    Ok(())
}

/// [ξ+x, η+y] = ([ξ,η] + Δ(x,y)) + (ξy − ηx + ⟦x,y⟧), after checking the
/// derivation conditions, the three Δ conditions and Jacobi.
pub fn ly_envelope(l: &LieYamaguti, action: &ModuleAction, delta: &DeltaMap) -> Result<LyEnvelope> {
    let h = action.h();
    if let Some(w) = h.check_lie().witness {
        return Err(Error::NotLie(w.to_string()));
    }
    ly_envelope_violation(l, action, delta)?;
    let (hd, n) = (action.h_dim(), l.dim);
    let gd = hd + n;
    let g = StructureAlgebra::from_fn("ly-envelope", gd, |i, j| {
        let mut out = zero_vector(gd);
        match (i < hd, j < hd) {
            (true, true) => out[..hd].clone_from_slice(h.basis_product(i, j)),
            (true, false) => out[hd..].clone_from_slice(&action.matrices()[i].column(j - hd)),
            (false, true) => out[hd..].clone_from_slice(&vec_scale(&int(-1), &action.matrices()[j].column(i - hd))),
            (false, false) => {
                out[..hd].clone_from_slice(delta.basis(i - hd, j - hd));
                out[hd..].clone_from_slice(l.b(i - hd, j - hd));
            }
        }
        out
    });
    if let Some(w) = g.check_lie().witness {
        return Err(LyEnvelopeViolation::Jacobi(w.to_string()).into());
    }
    Ok(LyEnvelope { g, h_dim: hd, m_dim: n })
}

/// The envelope with 𝔥 = IDer(𝔪) acting by its matrices and Δ = δ.
pub fn ly_envelope_default(l: &LieYamaguti, cap: usize) -> Result<LyEnvelope> {
    let n = l.dim;
    if n > cap {
        return Err(Error::DimensionCap { dim: n, cap });
    }
    let ider = inner_derivations(l);
    let basis: Vec<Matrix> =
        ider.span.basis().iter().map(|v| Matrix::from_vec(n, n, v.clone()).expect("n^2")).collect();
    let h = matrix_lie_algebra("IDer", &basis)
        .map_err(|_| LyEnvelopeViolation::Jacobi("IDer is not closed under commutator".into()))?;
    let flat = ider.span.basis().to_vec();
    let values = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            coordinates_in(&flat, &l.delta_basis(i, j).flatten()).map(|c| c.expect("inner derivation lies in IDer"))
        })
        .collect::<Result<Vec<_>>>()?;
    let hd = basis.len();
    let action = ModuleAction::new_unchecked(h, n, basis)?;
    let delta = DeltaMap::new(hd, n, values)?;
    ly_envelope(l, &action, &delta)
}

/// Torsion T = −⟦·,·⟧ and curvature R = −{·,·,·} of the canonical connection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionCurvature {
    pub torsion: Vec<Rational>,
    pub curvature: Vec<Rational>,
}

pub fn torsion_curvature(l: &LieYamaguti) -> TorsionCurvature {
    TorsionCurvature { torsion: l.b.iter().map(|x| -x).collect(), curvature: l.t.iter().map(|x| -x).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

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

    /// {x,y,z} = [[x,y],z] on so(3), with zero binary product.
    fn so3_triple_system() -> LieYamaguti {
        let a = so3();
        let n = 3;
        let mut t = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    t.extend(a.mul_basis_right(a.basis_product(i, j), k));
                }
            }
        }
        LieYamaguti::new(n, zero_vector(27), t).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(validate_ly(&LieYamaguti::from_lie(&so3())).holds);
        assert!(validate_ly(&so3_triple_system()).holds);

        let bad = LieYamaguti::from_entries(
            3,
            &[
                (0, 1, 2, int(1)),
                (1, 0, 2, int(-1)),
                (1, 2, 0, int(1)),
                (2, 1, 0, int(-1)),
                (2, 0, 1, int(1)),
                (0, 2, 1, int(-1)),
            ],
            &[(0, 1, 2, 0, int(1)), (1, 0, 2, 0, int(-1))],
        )
        .unwrap();
        let r = validate_ly(&bad);
        let f = r.failure.unwrap();
        assert_eq!(f.axiom, 3);
        assert_eq!(f.tuple, vec![0, 1, 2]);
        assert_eq!(f.lhs, vec![int(1), int(0), int(0)]);
    }

    #[test]
    fn from_leibniz_examples() {
        let l = ly_from_leibniz(&so3()).unwrap();
        assert_eq!(l.binary_constants(), so3().constants());
        // t_{ijk} = −¼[[e_i,e_j],e_k]; [[e1,e2],e1] = [e3,e1] = e2
        assert_eq!(
            l.ternary(&unit_vector(3, 0), &unit_vector(3, 1), &unit_vector(3, 0)),
            vec![int(0), rat(-1, 4), int(0)]
        );
        assert!(validate_ly(&l).holds);

        let l2 = StructureAlgebra::from_entries("leibniz2", 2, &[(1, 1, 0, int(1))]);
        let y = ly_from_leibniz(&l2).unwrap();
        assert!(y.binary_constants().iter().all(Zero::is_zero));
        assert!(y.ternary_constants().iter().all(Zero::is_zero));

        let idem = StructureAlgebra::from_entries("idem", 1, &[(0, 0, 0, int(1))]);
        assert!(matches!(ly_from_leibniz(&idem), Err(Error::NotLeibniz(_))));
    }

    #[test]
    fn decomposition_examples() {
        let g = so3();
        let h = Subspace::span(3, vec![unit_vector(3, 2)]).unwrap();
        let l = ly_from_decomposition(&g, &h, &[unit_vector(3, 0), unit_vector(3, 1)]).unwrap();
        assert!(is_zero_vector(l.b(0, 1)));
        assert_eq!(l.ternary(&unit_vector(2, 0), &unit_vector(2, 1), &unit_vector(2, 0)), vec![int(0), int(1)]);
        assert!(validate_ly(&l).holds);

        let sum = so3().direct_sum(&so3());
        let h = Subspace::span(6, (0..3).map(|i| unit_vector(6, i))).unwrap();
        let m: Vec<Vector> = (3..6).map(|i| unit_vector(6, i)).collect();
        let l = ly_from_decomposition(&sum, &h, &m).unwrap();
        assert_eq!(l, LieYamaguti::from_lie(&so3()));

        let bad_h = Subspace::span(3, vec![unit_vector(3, 0), unit_vector(3, 1)]).unwrap();
        assert!(matches!(ly_from_decomposition(&g, &bad_h, &[unit_vector(3, 2)]), Err(Error::NotReductive(_))));
    }

    #[test]
    fn inner_derivation_examples() {
        let z = LieYamaguti::from_lie(&so3());
        assert!(inner_derivations(&z).matrices.iter().all(Matrix::is_zero));
        let ts = so3_triple_system();
        let ider = inner_derivations(&ts);
        assert_eq!(ider.pairs[0], (0, 1));
        assert_eq!(ider.matrices[0], so3().left_mul_basis(2));
    }

    #[test]
    fn envelope_round_trip() {
        for l in [LieYamaguti::from_lie(&so3()), so3_triple_system(), ly_from_leibniz(&so3()).unwrap()] {
            let env = ly_envelope_default(&l, DEFAULT_DIM_CAP).unwrap();
            assert!(env.g.is_lie());
            assert_eq!(env.induced().unwrap(), l);
        }
        let l = LieYamaguti::from_lie(&so3());
        let env = ly_envelope_default(&l, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(env.h_dim, 0);
        assert_eq!(env.g, so3());
        assert!(matches!(ly_envelope_default(&l, 2), Err(Error::DimensionCap { dim: 3, cap: 2 })));
    }

    #[test]
    fn envelope_rejects_bad_delta() {
        let l = so3_triple_system();
        let env = ly_envelope_default(&l, DEFAULT_DIM_CAP).unwrap();
        let hd = env.h_dim;
        let ider = inner_derivations(&l);
        let basis: Vec<Matrix> = ider.span.basis().iter().map(|v| Matrix::from_vec(3, 3, v.clone()).unwrap()).collect();
        let h = matrix_lie_algebra("IDer", &basis).unwrap();
        let action = ModuleAction::new(h, 3, basis).unwrap();
        let zero = DeltaMap::new(hd, 3, vec![zero_vector(hd); 9]).unwrap();
        assert!(matches!(
            ly_envelope(&l, &action, &zero),
            Err(Error::LyEnvelope(LyEnvelopeViolation::Delta1 { i: 0, j: 1, .. }))
        ));
    }

    #[test]
    fn torsion_curvature_examples() {
        let tc = torsion_curvature(&LieYamaguti::from_lie(&so3()));
        assert_eq!(tc.torsion, so3().scaled(&int(-1)).constants());
        assert!(tc.curvature.iter().all(Zero::is_zero));
        let l2 = StructureAlgebra::from_entries("leibniz2", 2, &[(1, 1, 0, int(1))]);
        let tc = torsion_curvature(&ly_from_leibniz(&l2).unwrap());
        assert!(tc.torsion.iter().chain(&tc.curvature).all(Zero::is_zero));
    }
}
