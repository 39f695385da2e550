//! The left loops x ⋄ₛ y = x + exp(sλ(x))y on a Leibniz algebra and the
//! canonical connection ∇_X Y = DY·X − s X·Y.

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::StructureAlgebra;
use crate::courant::VectorField;
use crate::envelope::EnvelopeTriple;
use crate::error::{Error, Result};
use crate::linalg::{
    exp_nilpotent, format_rational, nilpotency, to_f64, unit_vector, vec_add, vec_sub, zero_vector, ExpValue,
    FloatMatrix, Matrix, Rational, Vector, DEFAULT_EXP_TOL,
};
use crate::poly::Poly;
use crate::products::ModuleAction;
use crate::sampling::Sampler;
use crate::subspace::Subspace;

/// Default absolute tolerance for float-mode comparisons.
pub const DEFAULT_LOOP_TOL: f64 = 1e-9;

/// Seed of the fixed sample used by the exact-mode nilpotency screen.
const NILPOTENCY_SAMPLE_SEED: u64 = 0x1e1b_2a11;
const NILPOTENCY_SAMPLES: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LoopMode {
    Exact,
    Float { tol: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum LoopValue {
    Exact(Vector),
    Float(Vec<f64>),
}

impl LoopValue {
    pub fn to_strings(&self) -> Vec<String> {
        match self {
            LoopValue::Exact(v) => v.iter().map(format_rational).collect(),
            LoopValue::Float(v) => v.iter().map(|x| format!("{x:e}")).collect(),
        }
    }

    pub fn exact(&self) -> Option<&Vector> {
        match self {
            LoopValue::Exact(v) => Some(v),
            LoopValue::Float(_) => None,
        }
    }

    pub fn float(&self) -> Vec<f64> {
        match self {
            LoopValue::Exact(v) => v.iter().map(to_f64).collect(),
            LoopValue::Float(v) => v.clone(),
        }
    }
}

/// Arithmetic needed by the loop operations, in exact or float form.
trait Backend: Sync {
    type V: Clone + Send + Sync;
    type M: Clone + Send + Sync;
    /// exp(sign · s · λ(x))
    fn exp_lambda(&self, x: &Self::V, sign: i8) -> Result<Self::M>;
    fn apply(&self, m: &Self::M, v: &Self::V) -> Self::V;
    fn matmul(&self, a: &Self::M, b: &Self::M) -> Self::M;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn sub(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn zero(&self) -> Self::V;
    fn close(&self, a: &Self::V, b: &Self::V) -> bool;
    fn lift(&self, v: &[Rational]) -> Self::V;
    fn describe(&self, v: &Self::V) -> String;

    fn product(&self, x: &Self::V, y: &Self::V) -> Result<Self::V> {
        Ok(self.add(x, &self.apply(&self.exp_lambda(x, 1)?, y)))
    }

    fn left_inverse(&self, x: &Self::V) -> Result<Self::V> {
        Ok(self.sub(&self.zero(), &self.apply(&self.exp_lambda(x, -1)?, x)))
    }

    fn left_divide(&self, a: &Self::V, b: &Self::V) -> Result<Self::V> {
        Ok(self.apply(&self.exp_lambda(a, -1)?, &self.sub(b, a)))
    }

    fn inner(&self, a: &Self::V, b: &Self::V) -> Result<Self::M> {
        let ab = self.product(a, b)?;
        let m = self.matmul(&self.exp_lambda(&ab, -1)?, &self.exp_lambda(a, 1)?);
        Ok(self.matmul(&m, &self.exp_lambda(b, 1)?))
    }
}

struct ExactBackend<'a> {
    e: &'a StructureAlgebra,
    s: Rational,
}

impl Backend for ExactBackend<'_> {
    type V = Vector;
    type M = Matrix;

    fn exp_lambda(&self, x: &Vector, sign: i8) -> Result<Matrix> {
        let c = if sign < 0 { -self.s.clone() } else { self.s.clone() };
        exp_nilpotent(&self.e.left_mul(x)?.scale(&c))
    }

    fn apply(&self, m: &Matrix, v: &Vector) -> Vector {
        m.mul_vec(v).expect("square of dim")
    }

    fn matmul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        a.matmul(b).expect("square of dim")
    }

    fn add(&self, a: &Vector, b: &Vector) -> Vector {
        vec_add(a, b)
    }

    fn sub(&self, a: &Vector, b: &Vector) -> Vector {
        vec_sub(a, b)
    }

    fn zero(&self) -> Vector {
        zero_vector(self.e.dim())
    }

    fn close(&self, a: &Vector, b: &Vector) -> bool {
        a == b
    }

    fn lift(&self, v: &[Rational]) -> Vector {
        v.to_vec()
    }

    fn describe(&self, v: &Vector) -> String {
        format!("({})", v.iter().map(format_rational).collect::<Vec<_>>().join(","))
    }
}

struct FloatBackend {
    lambdas: Vec<FloatMatrix>,
    s: f64,
    tol: f64,
    n: usize,
}

impl FloatBackend {
    fn new(e: &StructureAlgebra, s: &Rational, tol: f64) -> Self {
        FloatBackend {
            lambdas: (0..e.dim()).map(|i| e.left_mul_basis(i).to_float()).collect(),
            s: to_f64(s),
            tol,
            n: e.dim(),
        }
    }
}

impl Backend for FloatBackend {
    type V = Vec<f64>;
    type M = FloatMatrix;

    fn exp_lambda(&self, x: &Vec<f64>, sign: i8) -> Result<FloatMatrix> {
        let mut m = FloatMatrix::zeros(self.n, self.n);
        for (c, l) in x.iter().zip(&self.lambdas) {
            if *c != 0.0 {
                m = m.add(&l.scale(*c));
            }
        }
        Ok(m.scale(f64::from(sign) * self.s).exp(DEFAULT_EXP_TOL))
    }

    fn apply(&self, m: &FloatMatrix, v: &Vec<f64>) -> Vec<f64> {
        m.mul_vec(v)
    }

    fn matmul(&self, a: &FloatMatrix, b: &FloatMatrix) -> FloatMatrix {
        a.matmul(b)
    }

    fn add(&self, a: &Vec<f64>, b: &Vec<f64>) -> Vec<f64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn sub(&self, a: &Vec<f64>, b: &Vec<f64>) -> Vec<f64> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    fn zero(&self) -> Vec<f64> {
        vec![0.0; self.n]
    }

    fn close(&self, a: &Vec<f64>, b: &Vec<f64>) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= self.tol)
    }

    fn lift(&self, v: &[Rational]) -> Vec<f64> {
        v.iter().map(to_f64).collect()
    }

    fn describe(&self, v: &Vec<f64>) -> String {
        format!("({})", v.iter().map(|x| format!("{x:e}")).collect::<Vec<_>>().join(","))
    }
}

/// Why exact mode is unavailable, or `Ok` when every λ(x) is nilpotent.
pub fn exact_mode_check(e: &StructureAlgebra) -> Result<()> {
    let n = e.dim();
    let lambdas: Vec<Matrix> = (0..n).map(|i| e.left_mul_basis(i)).collect();
    for l in &lambdas {
        if !nilpotency(l)?.nilpotent {
            return Err(Error::NotNilpotent);
        }
    }
    let mut sampler = Sampler::new(NILPOTENCY_SAMPLE_SEED);
    for _ in 0..NILPOTENCY_SAMPLES {
        if !nilpotency(&e.left_mul(&sampler.vector(n))?)?.nilpotent {
            return Err(Error::NotNilpotent);
        }
    }
    if !associative_envelope_nilpotent(&lambdas) {
        return Err(Error::NotNilpotent);
    }
    Ok(())
}

/// Whether all words of length n in the given n×n matrices vanish.
pub fn associative_envelope_nilpotent(mats: &[Matrix]) -> bool {
    let Some(first) = mats.first() else { return true };
    let n = first.rows();
    let mut words = Subspace::span(n * n, mats.iter().map(Matrix::flatten)).expect("n^2");
    for _ in 1..n.max(1) {
        if words.dim() == 0 {
            return true;
        }
        let next: Vec<Vector> = words
            .basis()
            .iter()
            .flat_map(|w| {
                let w = Matrix::from_vec(n, n, w.clone()).expect("n^2");
                mats.iter().map(move |m| m.matmul(&w).expect("square").flatten())
            })
            .collect();
        words = Subspace::span(n * n, next).expect("n^2");
    }
    words.dim() == 0
}

/// (ℰ, ⋄ₛ) with its evaluation mode.
#[derive(Clone, Debug)]
pub struct LoopContext {
    e: StructureAlgebra,
    s: Rational,
    mode: LoopMode,
}

impl LoopContext {
    /// Exact mode; fails unless left multiplications are nilpotent.
    pub fn exact(e: StructureAlgebra, s: Rational) -> Result<Self> {
        exact_mode_check(&e)?;
        Ok(LoopContext { e, s, mode: LoopMode::Exact })
    }

    pub fn float(e: StructureAlgebra, s: Rational, tol: f64) -> Self {
        LoopContext { e, s, mode: LoopMode::Float { tol } }
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.e
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn mode(&self) -> LoopMode {
        self.mode
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.e.dim() {
            return Err(Error::DimensionMismatch { expected: self.e.dim(), found: v.len() });
        }
        Ok(())
    }

    fn run<FE, FF>(&self, exact: FE, float: FF) -> Result<LoopValue>
    where
        FE: FnOnce(&ExactBackend) -> Result<Vector>,
        FF: FnOnce(&FloatBackend) -> Result<Vec<f64>>,
    {
        match self.mode {
            LoopMode::Exact => exact(&ExactBackend { e: &self.e, s: self.s.clone() }).map(LoopValue::Exact),
            LoopMode::Float { tol } => float(&FloatBackend::new(&self.e, &self.s, tol)).map(LoopValue::Float),
        }
    }

    /// x ⋄ₛ y = x + exp(sλ(x))y
    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Result<LoopValue> {
        self.check_len(x)?;
        self.check_len(y)?;
        self.run(|b| b.product(&b.lift(x), &b.lift(y)), |b| b.product(&b.lift(x), &b.lift(y)))
    }

    /// x′ = −exp(−sλ(x))x
    pub fn left_inverse(&self, x: &[Rational]) -> Result<LoopValue> {
        self.check_len(x)?;
        self.run(|b| b.left_inverse(&b.lift(x)), |b| b.left_inverse(&b.lift(x)))
    }

    /// a\b = exp(−sλ(a))(b − a)
    pub fn left_divide(&self, a: &[Rational], b: &[Rational]) -> Result<LoopValue> {
        self.check_len(a)?;
        self.check_len(b)?;
        self.run(|k| k.left_divide(&k.lift(a), &k.lift(b)), |k| k.left_divide(&k.lift(a), &k.lift(b)))
    }

    /// L(a,b) = exp(−sλ(a⋄b)) exp(sλ(a)) exp(sλ(b))
    pub fn left_inner_mapping(&self, a: &[Rational], b: &[Rational]) -> Result<ExpValue> {
        self.check_len(a)?;
        self.check_len(b)?;
        match self.mode {
            LoopMode::Exact => {
                let k = ExactBackend { e: &self.e, s: self.s.clone() };
                k.inner(&k.lift(a), &k.lift(b)).map(ExpValue::Exact)
            }
            LoopMode::Float { tol } => {
                let k = FloatBackend::new(&self.e, &self.s, tol);
                k.inner(&k.lift(a), &k.lift(b)).map(ExpValue::Float)
            }
        }
    }

    /// a ⋄ (b ⋄ c) = (a ⋄ b) ⋄ L(a,b)c for every basis vector c.
    pub fn inner_mapping_defining_check(&self, a: &[Rational], b: &[Rational]) -> Result<bool> {
        self.check_len(a)?;
        self.check_len(b)?;
        let n = self.e.dim();
        match self.mode {
            LoopMode::Exact => defining_check(&ExactBackend { e: &self.e, s: self.s.clone() }, a, b, n),
            LoopMode::Float { tol } => defining_check(&FloatBackend::new(&self.e, &self.s, tol), a, b, n),
        }
    }
}

fn defining_check<B: Backend>(k: &B, a: &[Rational], b: &[Rational], n: usize) -> Result<bool> {
    let (a, b) = (k.lift(a), k.lift(b));
    let l = k.inner(&a, &b)?;
    let ab = k.product(&a, &b)?;
    for c in 0..n {
        let c = k.lift(&unit_vector(n, c));
        let lhs = k.product(&a, &k.product(&b, &c)?)?;
        let rhs = k.product(&ab, &k.apply(&l, &c))?;
        if !k.close(&lhs, &rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A failed law on one sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopWitness {
    pub property: String,
    pub sample: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopReport {
    pub samples: usize,
    pub identity: bool,
    pub left_loop: bool,
    pub left_inverse_property: bool,
    pub al: bool,
    /// First failure of each failing property, in property order.
    pub witnesses: Vec<LoopWitness>,
}

impl LoopReport {
    pub fn all_pass(&self) -> bool {
        self.identity && self.left_loop && self.left_inverse_property && self.al
    }
}

const PROPERTIES: [&str; 4] = ["identity", "left_loop", "left_inverse_property", "al"];

fn sample_laws<B: Backend>(k: &B, x: &B::V, y: &B::V, a: &B::V, b: &B::V) -> [Option<String>; 4] {
    let fail =
        |law: &str, lhs: &B::V, rhs: &B::V| Some(format!("{law}: lhs={} rhs={}", k.describe(lhs), k.describe(rhs)));
    let err = |law: &str, e: Error| Some(format!("{law}: {e}"));
    let zero = k.zero();

    let identity = (|| {
        let p = match k.product(&zero, x) {
            Ok(p) => p,
            Err(e) => return err("0*x = x", e),
        };
        if !k.close(&p, x) {
            return fail("0*x = x", &p, x);
        }
        let p = match k.product(x, &zero) {
            Ok(p) => p,
            Err(e) => return err("x*0 = x", e),
        };
        if !k.close(&p, x) {
            return fail("x*0 = x", &p, x);
        }
        None
    })();

    let left_loop = {
        let r = (|| -> Result<Option<String>> {
            let d = k.left_divide(a, b)?;
            let p = k.product(a, &d)?;
            if !k.close(&p, b) {
                return Ok(fail("a*(a\\b) = b", &p, b));
            }
            let q = k.left_divide(a, &k.product(a, b)?)?;
            if !k.close(&q, b) {
                return Ok(fail("a\\(a*b) = b", &q, b));
            }
            Ok(None)
        })();
        r.unwrap_or_else(|e| err("left division", e))
    };

    let lip = {
        let r = (|| -> Result<Option<String>> {
            let xi = k.left_inverse(x)?;
            let p = k.product(x, &xi)?;
            if !k.close(&p, &zero) {
                return Ok(fail("x*x' = 0", &p, &zero));
            }
            let p = k.product(&xi, x)?;
            if !k.close(&p, &zero) {
                return Ok(fail("x'*x = 0", &p, &zero));
            }
            let p = k.product(&xi, &k.product(x, y)?)?;
            if !k.close(&p, y) {
                return Ok(fail("x'*(x*y) = y", &p, y));
            }
            let p = k.product(x, &k.product(&xi, y)?)?;
            if !k.close(&p, y) {
                return Ok(fail("x*(x'*y) = y", &p, y));
            }
            Ok(None)
        })();
        r.unwrap_or_else(|e| err("left inverse", e))
    };

    let al = {
        let r = (|| -> Result<Option<String>> {
            let l = k.inner(a, b)?;
            let lhs = k.product(a, &k.product(b, y)?)?;
            let rhs = k.product(&k.product(a, b)?, &k.apply(&l, y))?;
            if !k.close(&lhs, &rhs) {
                return Ok(fail("a*(b*y) = (a*b)*L(a,b)y", &lhs, &rhs));
            }
            let lhs = k.apply(&l, &k.product(x, y)?);
            let rhs = k.product(&k.apply(&l, x), &k.apply(&l, y))?;
            if !k.close(&lhs, &rhs) {
                return Ok(fail("L(a,b)(x*y) = L(a,b)x * L(a,b)y", &lhs, &rhs));
            }
            Ok(None)
        })();
        r.unwrap_or_else(|e| err("inner mapping", e))
    };

    [identity, left_loop, lip, al]
}

fn property_check<B: Backend>(k: &B, n: usize, samples: usize, seed: u64) -> LoopReport {
    let mut sampler = Sampler::new(seed);
    let draws: Vec<[Vector; 4]> =
        (0..samples).map(|_| [sampler.vector(n), sampler.vector(n), sampler.vector(n), sampler.vector(n)]).collect();
    let results: Vec<[Option<String>; 4]> =
        draws.par_iter().map(|[x, y, a, b]| sample_laws(k, &k.lift(x), &k.lift(y), &k.lift(a), &k.lift(b))).collect();
    let mut ok = [true; 4];
    let mut witnesses = Vec::new();
    for (p, name) in PROPERTIES.iter().enumerate() {
        if let Some((sample, detail)) = results.iter().enumerate().find_map(|(i, r)| r[p].clone().map(|d| (i, d))) {
            ok[p] = false;
            witnesses.push(LoopWitness { property: name.to_string(), sample, detail });
        }
    }
    LoopReport { samples, identity: ok[0], left_loop: ok[1], left_inverse_property: ok[2], al: ok[3], witnesses }
}

/// Identity, left division, left inverse property and Aₗ on seeded samples.
pub fn loop_property_check(ctx: &LoopContext, samples: usize, seed: u64) -> LoopReport {
    let n = ctx.e.dim();
    match ctx.mode {
        LoopMode::Exact => property_check(&ExactBackend { e: &ctx.e, s: ctx.s.clone() }, n, samples, seed),
        LoopMode::Float { tol } => property_check(&FloatBackend::new(&ctx.e, &ctx.s, tol), n, samples, seed),
    }
}

/// x ⋄ₛ y computed through an envelope: x + exp(s f(x))·y with f(x) acting on ℰ.
pub fn loop_product_via_envelope(t: &EnvelopeTriple, s: &Rational, x: &[Rational], y: &[Rational]) -> Result<Vector> {
    let fx = t.f().mul_vec(x)?;
    let m = t.action().matrix_of(&fx).scale(s);
    Ok(vec_add(x, &exp_nilpotent(&m)?.mul_vec(y)?))
}

/// (ξ,x) ⋄ₛ (η,y) = (ξ + exp(s ad ξ)η, x + exp(s ρ(ξ))y) on 𝔥 ⋉_H V.
pub fn hemisemidirect_loop_product(act: &ModuleAction, s: &Rational, x: &[Rational], y: &[Rational]) -> Result<Vector> {
    let hd = act.h_dim();
    let n = hd + act.v_dim();
    for v in [x, y] {
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.len() });
        }
    }
    let xi = &x[..hd];
    let ad = act.h().left_mul(xi)?.scale(s);
    let rho = act.matrix_of(xi).scale(s);
    let mut out = vec_add(xi, &exp_nilpotent(&ad)?.mul_vec(&y[..hd])?);
    out.extend(vec_add(&x[hd..], &exp_nilpotent(&rho)?.mul_vec(&y[hd..])?));
    Ok(out)
}

fn require_fields(e: &StructureAlgebra, fields: &[&VectorField]) -> Result<()> {
    for f in fields {
        if f.vars() != e.dim() {
            return Err(Error::DimensionMismatch { expected: e.dim(), found: f.vars() });
        }
    }
    Ok(())
}

/// Pointwise product (X·Y)(x) = X(x)·Y(x) in ℰ.
pub fn pointwise_product(e: &StructureAlgebra, x: &VectorField, y: &VectorField) -> Result<VectorField> {
    require_fields(e, &[x, y])?;
    let n = e.dim();
    let mut out = vec![Poly::zero(n); n];
    for i in 0..n {
        for j in 0..n {
            let xy = &x.components()[i] * &y.components()[j];
            if xy.is_zero() {
                continue;
            }
            for (k, c) in e.basis_product(i, j).iter().enumerate() {
                if !c.is_zero() {
                    out[k] = &out[k] + &xy.scale(c);
                }
            }
        }
    }
    VectorField::new(out)
}

/// (∇_X Y)(x) = DY(x)X(x) − s X(x)·Y(x)
pub fn connection_eval(e: &StructureAlgebra, s: &Rational, x: &VectorField, y: &VectorField) -> Result<VectorField> {
    let flat = y.directional(x)?;
    let prod = pointwise_product(e, x, y)?;
    flat.sub(&prod.scale(s))
}

/// ∇_X Y − ∇_Y X − [X,Y]
pub fn connection_torsion(e: &StructureAlgebra, s: &Rational, x: &VectorField, y: &VectorField) -> Result<VectorField> {
    let a = connection_eval(e, s, x, y)?;
    let b = connection_eval(e, s, y, x)?;
    a.sub(&b)?.sub(&x.bracket(y)?)
}

/// ∇_X ∇_Y Z − ∇_Y ∇_X Z − ∇_{[X,Y]} Z
pub fn connection_curvature(
    e: &StructureAlgebra,
    s: &Rational,
    x: &VectorField,
    y: &VectorField,
    z: &VectorField,
) -> Result<VectorField> {
    let a = connection_eval(e, s, x, &connection_eval(e, s, y, z)?)?;
    let b = connection_eval(e, s, y, &connection_eval(e, s, x, z)?)?;
    let c = connection_eval(e, s, &x.bracket(y)?, z)?;
    a.sub(&b)?.sub(&c)
}

/// Constant field with the given value.
pub fn constant_field(v: &[Rational]) -> VectorField {
    let n = v.len();
    VectorField::new(v.iter().map(|c| Poly::constant(n, c.clone())).collect()).expect("n components in n variables")
}

/// Values of a constant field, or `None` if some component is not constant.
pub fn constant_value(f: &VectorField) -> Option<Vector> {
    f.components().iter().map(|p| if p.degree().unwrap_or(0) == 0 { Some(p.constant_term()) } else { None }).collect()
}

/// Zero in ℰ coordinates.
pub fn is_zero_field(f: &VectorField) -> bool {
    f.components().iter().all(Poly::is_zero)
}
