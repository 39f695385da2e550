//! The standard Courant algebroid TP ⊕ T*P on ℝⁿ with polynomial
//! coefficients: Cartan calculus, Courant and Dorfman brackets, the axiom
//! suite, graph closure, Ω¹/dC∞ representatives and the double semidirect
//! product.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{int, rat, Rational};
use crate::poly::{default_var_names, dot, Poly};
use crate::sampling::Sampler;

fn check_vars(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

fn check_components(comps: &[Poly]) -> Result<()> {
    let n = comps.len();
    for p in comps {
        check_vars(n, p.vars())?;
    }
    Ok(())
}

/// ξ = Σ ξ_i ∂/∂x_i
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorField {
    comps: Vec<Poly>,
}

/// θ = Σ θ_i dx_i
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneForm {
    comps: Vec<Poly>,
}

macro_rules! component_ops {
    ($t:ident) => {
        impl $t {
            pub fn new(comps: Vec<Poly>) -> Result<Self> {
                check_components(&comps)?;
                Ok($t { comps })
            }

            pub fn zero(n: usize) -> Self {
                $t { comps: vec![Poly::zero(n); n] }
            }

            /// The i-th coordinate direction (∂_i or dx_i) with coefficient 1.
            pub fn basis(n: usize, i: usize) -> Self {
                let mut comps = vec![Poly::zero(n); n];
                comps[i] = Poly::one(n);
                $t { comps }
            }

            pub fn vars(&self) -> usize {
                self.comps.len()
            }

            pub fn components(&self) -> &[Poly] {
                &self.comps
            }

            pub fn component(&self, i: usize) -> &Poly {
                &self.comps[i]
            }

            pub fn is_zero(&self) -> bool {
                self.comps.iter().all(Poly::is_zero)
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                check_vars(self.vars(), other.vars())?;
                Ok($t { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect() })
            }

            pub fn sub(&self, other: &Self) -> Result<Self> {
                check_vars(self.vars(), other.vars())?;
                Ok($t { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect() })
            }

            pub fn scale(&self, c: &Rational) -> Self {
                $t { comps: self.comps.iter().map(|p| p.scale(c)).collect() }
            }

            pub fn mul_poly(&self, f: &Poly) -> Self {
                $t { comps: self.comps.iter().map(|p| p * f).collect() }
            }

            pub fn neg(&self) -> Self {
                self.scale(&int(-1))
            }

            fn plus(&self, other: &Self) -> Self {
                $t { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect() }
            }

            fn minus(&self, other: &Self) -> Self {
                $t { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect() }
            }
        }
    };
}

component_ops!(VectorField);
component_ops!(OneForm);

impl VectorField {
    /// ξ(f) = Σ ξ_i ∂_i f
    pub fn apply(&self, f: &Poly) -> Poly {
        let n = self.vars();
        (0..n).fold(Poly::zero(n), |acc, i| &acc + &(&self.comps[i] * &f.derivative(i)))
    }

    /// DY·X, the derivative of `self` along `x`.
    pub fn directional(&self, x: &VectorField) -> Result<VectorField> {
        check_vars(self.vars(), x.vars())?;
        Ok(VectorField { comps: self.comps.iter().map(|c| x.apply(c)).collect() })
    }

    /// [ξ, η]_k = Σ_i (ξ_i ∂_i η_k − η_i ∂_i ξ_k)
    pub fn bracket(&self, other: &VectorField) -> Result<VectorField> {
        check_vars(self.vars(), other.vars())?;
        Ok(vf_bracket(self, other))
    }
}

/// ω = Σ_{i<j} ω_ij dx_i∧dx_j, stored on i < j with ω_ji = −ω_ij.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoForm {
    vars: usize,
    comps: BTreeMap<(usize, usize), Poly>,
}

/// π = Σ_{i<j} π^{ij} ∂_i∧∂_j, stored on i < j with π^{ji} = −π^{ij}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bivector {
    vars: usize,
    comps: BTreeMap<(usize, usize), Poly>,
}

macro_rules! skew_ops {
    ($t:ident) => {
        impl $t {
            pub fn zero(vars: usize) -> Self {
                $t { vars, comps: BTreeMap::new() }
            }

            /// Builds from `(i, j, p)` entries with i ≠ j; (j, i) entries are
            /// folded in with a sign.
            pub fn from_entries(vars: usize, entries: Vec<(usize, usize, Poly)>) -> Result<Self> {
                let mut out = Self::zero(vars);
                for (i, j, p) in entries {
                    check_vars(vars, p.vars())?;
                    if i == j || i >= vars || j >= vars {
                        return Err(Error::InvalidAlgebra(format!("invalid skew index ({i},{j})")));
                    }
                    let (key, p) = if i < j { ((i, j), p) } else { ((j, i), -&p) };
                    let slot = out.comps.entry(key).or_insert_with(|| Poly::zero(vars));
                    *slot = &*slot + &p;
                }
                out.comps.retain(|_, p| !p.is_zero());
                Ok(out)
            }

            pub fn vars(&self) -> usize {
                self.vars
            }

            /// Component with the skew extension.
            pub fn get(&self, i: usize, j: usize) -> Poly {
                match i.cmp(&j) {
                    std::cmp::Ordering::Equal => Poly::zero(self.vars),
                    std::cmp::Ordering::Less => {
                        self.comps.get(&(i, j)).cloned().unwrap_or_else(|| Poly::zero(self.vars))
                    }
                    std::cmp::Ordering::Greater => -&self.get(j, i),
                }
            }

            pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Poly)> {
                self.comps.iter()
            }

            pub fn is_zero(&self) -> bool {
                self.comps.is_empty()
            }
        }
    };
}

skew_ops!(TwoForm);
skew_ops!(Bivector);

/// A section (ξ, θ) of TP ⊕ T*P.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Section {
    pub vf: VectorField,
    pub form: OneForm,
}

impl Section {
    pub fn new(vf: VectorField, form: OneForm) -> Result<Self> {
        check_vars(vf.vars(), form.vars())?;
        Ok(Section { vf, form })
    }

    pub fn zero(n: usize) -> Self {
        Section { vf: VectorField::zero(n), form: OneForm::zero(n) }
    }

    pub fn from_vf(vf: VectorField) -> Self {
        let n = vf.vars();
        Section { vf, form: OneForm::zero(n) }
    }

    pub fn from_form(form: OneForm) -> Self {
        let n = form.vars();
        Section { vf: VectorField::zero(n), form }
    }

    pub fn vars(&self) -> usize {
        self.vf.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.vf.is_zero() && self.form.is_zero()
    }

    pub fn add(&self, other: &Section) -> Result<Section> {
        Ok(Section { vf: self.vf.add(&other.vf)?, form: self.form.add(&other.form)? })
    }

    pub fn sub(&self, other: &Section) -> Result<Section> {
        Ok(Section { vf: self.vf.sub(&other.vf)?, form: self.form.sub(&other.form)? })
    }

    pub fn scale(&self, c: &Rational) -> Section {
        Section { vf: self.vf.scale(c), form: self.form.scale(c) }
    }

    pub fn mul_poly(&self, f: &Poly) -> Section {
        Section { vf: self.vf.mul_poly(f), form: self.form.mul_poly(f) }
    }

    fn plus(&self, other: &Section) -> Section {
        Section { vf: self.vf.plus(&other.vf), form: self.form.plus(&other.form) }
    }

    fn minus(&self, other: &Section) -> Section {
        Section { vf: self.vf.minus(&other.vf), form: self.form.minus(&other.form) }
    }

    /// ρ(x) = ξ
    pub fn anchor(&self) -> &VectorField {
        &self.vf
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_var_names(self.vars());
        let vf: Vec<String> = self.vf.comps.iter().map(|p| p.format_with(&names)).collect();
        let form: Vec<String> = self.form.comps.iter().map(|p| p.format_with(&names)).collect();
        write!(f, "(vf=[{}], form=[{}])", vf.join(", "), form.join(", "))
    }
}

/// (df)_i = ∂f/∂x_i
pub fn d_function(f: &Poly) -> OneForm {
    OneForm { comps: (0..f.vars()).map(|i| f.derivative(i)).collect() }
}

/// (dθ)_ij = ∂_i θ_j − ∂_j θ_i
pub fn d_one_form(theta: &OneForm) -> TwoForm {
    let n = theta.vars();
    let mut comps = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = &theta.comps[j].derivative(i) - &theta.comps[i].derivative(j);
            if !p.is_zero() {
                comps.insert((i, j), p);
            }
        }
    }
    TwoForm { vars: n, comps }
}

/// Coefficients of dω on dx_i∧dx_j∧dx_k for i < j < k.
pub fn d_two_form(omega: &TwoForm) -> BTreeMap<(usize, usize, usize), Poly> {
    let n = omega.vars;
    let mut out = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let p =
                    &(&omega.get(j, k).derivative(i) - &omega.get(i, k).derivative(j)) + &omega.get(i, j).derivative(k);
                if !p.is_zero() {
                    out.insert((i, j, k), p);
                }
            }
        }
    }
    out
}

/// i_ξ θ = Σ ξ_i θ_i
pub fn interior(xi: &VectorField, theta: &OneForm) -> Poly {
    dot(&xi.comps, &theta.comps)
}

/// (i_ξ ω)_j = Σ_i ξ_i ω_ij
pub fn interior2(xi: &VectorField, omega: &TwoForm) -> OneForm {
    let n = xi.vars();
    let comps =
        (0..n).map(|j| (0..n).fold(Poly::zero(n), |acc, i| &acc + &(&xi.comps[i] * &omega.get(i, j)))).collect();
    OneForm { comps }
}

pub fn vf_bracket(a: &VectorField, b: &VectorField) -> VectorField {
    let n = a.vars();
    let comps = (0..n).map(|k| &a.apply(&b.comps[k]) - &b.apply(&a.comps[k])).collect();
    VectorField { comps }
}

/// L_ξ θ = i_ξ dθ + d i_ξ θ
pub fn lie_derivative(xi: &VectorField, theta: &OneForm) -> OneForm {
    interior2(xi, &d_one_form(theta)).plus(&d_function(&interior(xi, theta)))
}

/// (L_ξ θ)_j = Σ_i (ξ_i ∂_i θ_j + θ_i ∂_j ξ_i), the coordinate formula.
pub fn lie_derivative_coordinates(xi: &VectorField, theta: &OneForm) -> OneForm {
    let n = xi.vars();
    let comps = (0..n)
        .map(|j| {
            (0..n).fold(xi.apply(&theta.comps[j]), |acc, i| &acc + &(&theta.comps[i] * &xi.comps[i].derivative(j)))
        })
        .collect();
    OneForm { comps }
}

/// ⟨x, y⟩ = ½(i_ξ1 θ2 + i_ξ2 θ1)
pub fn pairing(x: &Section, y: &Section) -> Poly {
    (&interior(&x.vf, &y.form) + &interior(&y.vf, &x.form)).scale(&rat(1, 2))
}

/// 𝒟f = (0, df)
pub fn d_op(f: &Poly) -> Section {
    Section::from_form(d_function(f))
}

/// ⟦x,y⟧ = ([ξ1,ξ2], L_ξ1 θ2 − L_ξ2 θ1 − ½ d(i_ξ1 θ2 − i_ξ2 θ1))
pub fn courant_bracket(x: &Section, y: &Section) -> Section {
    let vf = vf_bracket(&x.vf, &y.vf);
    let l = lie_derivative(&x.vf, &y.form).minus(&lie_derivative(&y.vf, &x.form));
    let i = &interior(&x.vf, &y.form) - &interior(&y.vf, &x.form);
    Section { vf, form: l.minus(&d_function(&i).scale(&rat(1, 2))) }
}

/// x·y = ([ξ1,ξ2], L_ξ1 θ2 − i_ξ2 dθ1)
pub fn dorfman_product(x: &Section, y: &Section) -> Section {
    let vf = vf_bracket(&x.vf, &y.vf);
    Section { vf, form: lie_derivative(&x.vf, &y.form).minus(&interior2(&y.vf, &d_one_form(&x.form))) }
}

/// T = ⅓ Σ_cyc ⟨⟦x,y⟧, z⟩
pub fn t_function(x: &Section, y: &Section, z: &Section) -> Poly {
    let s = &(&pairing(&courant_bracket(x, y), z) + &pairing(&courant_bracket(y, z), x))
        + &pairing(&courant_bracket(z, x), y);
    s.scale(&rat(1, 3))
}

/// −¼([[ξ1,ξ2],ξ3], L_{[ξ1,ξ2]}θ3 − i_ξ3 d(L_ξ1 θ2 − L_ξ2 θ1))
pub fn courant_ternary(x: &Section, y: &Section, z: &Section) -> Section {
    let b12 = vf_bracket(&x.vf, &y.vf);
    let vf = vf_bracket(&b12, &z.vf);
    let inner = lie_derivative(&x.vf, &y.form).minus(&lie_derivative(&y.vf, &x.form));
    let form = lie_derivative(&b12, &z.form).minus(&interior2(&z.vf, &d_one_form(&inner)));
    Section { vf, form }.scale(&rat(-1, 4))
}

/// (π♯θ)^i = Σ_j π^{ij} θ_j
pub fn sharp(pi: &Bivector, theta: &OneForm) -> VectorField {
    let n = theta.vars();
    let comps =
        (0..n).map(|i| (0..n).fold(Poly::zero(n), |acc, j| &acc + &(&pi.get(i, j) * &theta.comps[j]))).collect();
    VectorField { comps }
}

/// Poincaré homotopy operator based at 0 and the induced representative
/// of θ modulo exact forms.
pub fn homotopy_quotient(theta: &OneForm) -> (OneForm, Poly) {
    let n = theta.vars();
    let mut h = Poly::zero(n);
    for (i, c) in theta.comps.iter().enumerate() {
        let terms = c.terms().map(|(e, k)| {
            let deg: u32 = e.iter().sum();
            let mut m = e.clone();
            m[i] += 1;
            (m, k / int(i64::from(deg) + 1))
        });
        h = &h + &Poly::from_terms(n, terms);
    }
    (theta.minus(&d_function(&h)), h)
}

pub fn quotient_rep(theta: &OneForm) -> OneForm {
    homotopy_quotient(theta).0
}

/// An element ((ξ,[φ]), (η,θ)) of (𝒳 ⋉ Ω¹/dC∞) ⋉ (𝒳 × Ω¹); `phi` is kept
/// as its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleElement {
    pub xi: VectorField,
    pub phi: OneForm,
    pub e: Section,
}

impl DoubleElement {
    pub fn new(xi: VectorField, phi: &OneForm, e: Section) -> Result<Self> {
        check_vars(xi.vars(), phi.vars())?;
        check_vars(xi.vars(), e.vars())?;
        Ok(DoubleElement { xi, phi: quotient_rep(phi), e })
    }

    fn plus(&self, other: &Self) -> Self {
        DoubleElement { xi: self.xi.plus(&other.xi), phi: self.phi.plus(&other.phi), e: self.e.plus(&other.e) }
    }

    pub fn is_zero(&self) -> bool {
        self.xi.is_zero() && self.phi.is_zero() && self.e.is_zero()
    }
}

/// (ξ,[φ])·(η,θ) = ([ξ,η], L_ξ θ − i_η dφ)
pub fn double_action(xi: &VectorField, phi: &OneForm, y: &Section) -> Section {
    Section { vf: vf_bracket(xi, &y.vf), form: lie_derivative(xi, &y.form).minus(&interior2(&y.vf, &d_one_form(phi))) }
}

/// Semidirect bracket on 𝔥 = 𝒳 ⋉ Ω¹/dC∞ and the action on the abelian
/// ideal 𝒳 × Ω¹.
pub fn double_semidirect_bracket(a: &DoubleElement, b: &DoubleElement) -> DoubleElement {
    let xi = vf_bracket(&a.xi, &b.xi);
    let phi = quotient_rep(&lie_derivative(&a.xi, &b.phi).minus(&lie_derivative(&b.xi, &a.phi)));
    let e = double_action(&a.xi, &a.phi, &b.e).minus(&double_action(&b.xi, &b.phi, &a.e));
    DoubleElement { xi, phi, e }
}

/// σₛ(x) = (s f(x), x) with f(ξ,θ) = (ξ, [θ]).
pub fn double_sigma(s: &Rational, x: &Section) -> DoubleElement {
    DoubleElement { xi: x.vf.scale(s), phi: quotient_rep(&x.form.scale(s)), e: x.clone() }
}

/// π_ℰ[σ½ x, σ½ y]
pub fn double_projected_bracket(x: &Section, y: &Section) -> Section {
    let half = rat(1, 2);
    double_semidirect_bracket(&double_sigma(&half, x), &double_sigma(&half, y)).e
}

/// Cyclic Jacobi sum in the double semidirect product.
pub fn double_jacobiator(a: &DoubleElement, b: &DoubleElement, c: &DoubleElement) -> DoubleElement {
    let j1 = double_semidirect_bracket(&double_semidirect_bracket(a, b), c);
    let j2 = double_semidirect_bracket(&double_semidirect_bracket(b, c), a);
    let j3 = double_semidirect_bracket(&double_semidirect_bracket(c, a), b);
    j1.plus(&j2).plus(&j3)
}

/// Random polynomial with at most `max_terms` terms of degree ≤ `max_deg`.
pub fn random_poly(sampler: &mut Sampler, n: usize, max_deg: u32, max_terms: usize) -> Poly {
    let count = sampler.index(max_terms + 1);
    let mut p = Poly::zero(n);
    for _ in 0..count {
        let deg = sampler.index(max_deg as usize + 1);
        let mut e = vec![0u32; n];
        for _ in 0..deg {
            e[sampler.index(n)] += 1;
        }
        p = &p + &Poly::monomial(n, e, sampler.rational());
    }
    p
}

/// Random section: each component has up to two terms of degree ≤ 2.
pub fn random_section(sampler: &mut Sampler, n: usize) -> Section {
    let vf = VectorField { comps: (0..n).map(|_| random_poly(sampler, n, 2, 2)).collect() };
    let form = OneForm { comps: (0..n).map(|_| random_poly(sampler, n, 2, 2)).collect() };
    Section { vf, form }
}

pub fn random_function(sampler: &mut Sampler, n: usize) -> Poly {
    random_poly(sampler, n, 2, 3)
}

/// Outcome of one named identity over all inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CourantCheck {
    pub name: String,
    pub holds: bool,
    pub witness: Option<String>,
}

fn section_eq(name: &str, lhs: &Section, rhs: &Section) -> Option<String> {
    (lhs != rhs).then(|| format!("{name}: lhs={lhs} rhs={rhs}"))
}

fn poly_eq(name: &str, lhs: &Poly, rhs: &Poly) -> Option<String> {
    (lhs != rhs).then(|| format!("{name}: lhs={lhs} rhs={rhs}"))
}

/// One input tuple for the identity suite.
#[derive(Clone, Debug)]
pub struct CourantSample {
    pub x: Section,
    pub y: Section,
    pub z: Section,
    pub f: Poly,
    pub g: Poly,
}

/// Names of the checks run by [`courant_suite`], in report order.
pub const SUITE_CHECKS: [&str; 12] = [
    "axiom1_jacobiator",
    "axiom2_anchor_homomorphism",
    "axiom3_leibniz_rule",
    "axiom4_anchor_of_d",
    "axiom4_pairing_of_d",
    "axiom5_invariance",
    "dorfman_leibniz",
    "dorfman_d_ideal",
    "skew_part_is_courant",
    "symmetric_part_is_d_pairing",
    "ternary_closed_form",
    "cartan_formula",
];

fn run_sample(s: &CourantSample) -> Vec<Option<String>> {
    let (x, y, z, f, g) = (&s.x, &s.y, &s.z, &s.f, &s.g);
    let n = x.vars();
    let b = courant_bracket;

    let jac = b(&b(x, y), z).plus(&b(&b(y, z), x)).plus(&b(&b(z, x), y));
    let axiom1 = section_eq("sum [[x,y],z] = D T(x,y,z)", &jac, &d_op(&t_function(x, y, z)));

    let axiom2 = (vf_bracket(&x.vf, &y.vf) != b(x, y).vf).then(|| "rho[[x,y]] != [rho x, rho y]".to_string());

    let fy = y.mul_poly(f);
    let rhs3 = b(x, y).mul_poly(f).plus(&y.mul_poly(&x.vf.apply(f))).minus(&d_op(f).mul_poly(&pairing(x, y)));
    let axiom3 = section_eq("[[x, f y]] = f[[x,y]] + (rho(x) f) y - <x,y> D f", &b(x, &fy), &rhs3);

    let axiom4a = (!d_op(f).vf.is_zero()).then(|| "rho(D f) != 0".to_string());
    let axiom4b = poly_eq("<D f, D g> = 0", &pairing(&d_op(f), &d_op(g)), &Poly::zero(n));

    let lhs5 = x.vf.apply(&pairing(y, z));
    let rhs5 = &pairing(&b(x, y).plus(&d_op(&pairing(x, y))), z) + &pairing(y, &b(x, z).plus(&d_op(&pairing(x, z))));
    let axiom5 = poly_eq("rho(x)<y,z> = <[[x,y]] + D<x,y>, z> + <y, [[x,z]] + D<x,z>>", &lhs5, &rhs5);

    let d = dorfman_product;
    let leib = section_eq("x.(y.z) = (x.y).z + y.(x.z)", &d(x, &d(y, z)), &d(&d(x, y), z).plus(&d(y, &d(x, z))));

    let df = d_op(f);
    let ideal = section_eq("x.Df = 2 D<x, Df>", &d(x, &df), &d_op(&pairing(x, &df)).scale(&int(2)));

    let skew = section_eq("x.y - y.x = 2[[x,y]]", &d(x, y).minus(&d(y, x)), &b(x, y).scale(&int(2)));
    let sym = section_eq("x.y + y.x = 2 D<x,y>", &d(x, y).plus(&d(y, x)), &d_op(&pairing(x, y)).scale(&int(2)));

    let tern =
        section_eq("ternary closed form = -1/4 (x.y).z", &courant_ternary(x, y, z), &d(&d(x, y), z).scale(&rat(-1, 4)));

    let cartan = (lie_derivative(&x.vf, &y.form) != lie_derivative_coordinates(&x.vf, &y.form))
        .then(|| format!("Cartan and coordinate Lie derivatives differ on x={x}, y={y}"));

    vec![axiom1, axiom2, axiom3, axiom4a, axiom4b, axiom5, leib, ideal, skew, sym, tern, cartan]
}

/// Seeded samples in `n` variables; supplied sections come first as
/// cyclic triples, followed by `samples` random ones.
pub fn suite_samples(
    supplied: &[Section],
    functions: &[Poly],
    n: usize,
    samples: usize,
    seed: u64,
) -> Vec<CourantSample> {
    let mut sampler = Sampler::new(seed);
    let mut out = Vec::new();
    let k = supplied.len();
    for i in 0..k {
        let f = functions.get(i % functions.len().max(1)).cloned().unwrap_or_else(|| random_function(&mut sampler, n));
        let g = functions
            .get((i + 1) % functions.len().max(1))
            .cloned()
            .unwrap_or_else(|| random_function(&mut sampler, n));
        out.push(CourantSample {
            x: supplied[i].clone(),
            y: supplied[(i + 1) % k].clone(),
            z: supplied[(i + 2) % k].clone(),
            f,
            g,
        });
    }
    for _ in 0..samples {
        out.push(CourantSample {
            x: random_section(&mut sampler, n),
            y: random_section(&mut sampler, n),
            z: random_section(&mut sampler, n),
            f: random_function(&mut sampler, n),
            g: random_function(&mut sampler, n),
        });
    }
    out
}

/// Axioms 1–5 and the Dorfman identities on every sample. Each check
/// reports the first failing sample.
pub fn courant_suite(samples: &[CourantSample]) -> Vec<CourantCheck> {
    let results: Vec<Vec<Option<String>>> = samples.par_iter().map(run_sample).collect();
    SUITE_CHECKS
        .iter()
        .enumerate()
        .map(|(c, name)| {
            let witness =
                results.iter().enumerate().find_map(|(i, r)| r[c].clone().map(|w| format!("sample {i}: {w}")));
            CourantCheck { name: name.to_string(), holds: witness.is_none(), witness }
        })
        .collect()
}

/// Axioms 1–5 only.
pub fn axiom_suite(samples: &[CourantSample]) -> Vec<CourantCheck> {
    courant_suite(samples).into_iter().filter(|c| c.name.starts_with("axiom")).collect()
}

/// The Dorfman Leibniz identity together with x·𝒟f = 2𝒟⟨x,𝒟f⟩.
pub fn dorfman_leibniz_check(samples: &[CourantSample]) -> bool {
    courant_suite(samples)
        .iter()
        .filter(|c| c.name == "dorfman_leibniz" || c.name == "dorfman_d_ideal")
        .all(|c| c.holds)
}

/// The structure whose graph is tested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Poisson(Bivector),
    TwoForm(TwoForm),
}

impl GraphKind {
    pub fn vars(&self) -> usize {
        match self {
            GraphKind::Poisson(p) => p.vars(),
            GraphKind::TwoForm(w) => w.vars(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphWitness {
    pub x: Section,
    pub y: Section,
    pub bracket: Section,
    /// The graph point over the relevant component of the bracket.
    pub expected: Section,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphClosureReport {
    pub closed: bool,
    pub pairs_checked: usize,
    pub witness: Option<GraphWitness>,
}

fn graph_point_vf(kind: &GraphKind, vf: &VectorField) -> Section {
    match kind {
        GraphKind::TwoForm(w) => Section { vf: vf.clone(), form: interior2(vf, w) },
        GraphKind::Poisson(_) => unreachable!("Poisson graphs are parametrized by forms"),
    }
}

fn graph_point_form(kind: &GraphKind, form: &OneForm) -> Section {
    match kind {
        GraphKind::Poisson(p) => Section { vf: sharp(p, form), form: form.clone() },
        GraphKind::TwoForm(_) => unreachable!("2-form graphs are parametrized by vector fields"),
    }
}

/// Tests whether the graph of π (points (π♯θ, θ)) or of ω (points (ξ, i_ξω))
/// is closed under the Courant bracket on pairs built from the supplied
/// parameters and `samples` seeded random ones.
pub fn graph_closure_check(
    kind: &GraphKind,
    supplied_forms: &[OneForm],
    supplied_fields: &[VectorField],
    samples: usize,
    seed: u64,
) -> GraphClosureReport {
    let n = kind.vars();
    let mut sampler = Sampler::new(seed);
    let points: Vec<Section> = match kind {
        GraphKind::Poisson(_) => {
            let mut forms = supplied_forms.to_vec();
            for _ in 0..samples {
                forms.push(OneForm { comps: (0..n).map(|_| random_poly(&mut sampler, n, 2, 2)).collect() });
            }
            forms.iter().map(|f| graph_point_form(kind, f)).collect()
        }
        GraphKind::TwoForm(_) => {
            let mut fields = supplied_fields.to_vec();
            for _ in 0..samples {
                fields.push(VectorField { comps: (0..n).map(|_| random_poly(&mut sampler, n, 2, 2)).collect() });
            }
            fields.iter().map(|v| graph_point_vf(kind, v)).collect()
        }
    };
    let pairs: Vec<(usize, usize)> =
        (0..points.len()).flat_map(|i| (i + 1..points.len()).map(move |j| (i, j))).collect();
    let results: Vec<Option<GraphWitness>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (x, y) = (&points[i], &points[j]);
            let br = courant_bracket(x, y);
            let expected = match kind {
                GraphKind::Poisson(_) => graph_point_form(kind, &br.form),
                GraphKind::TwoForm(_) => graph_point_vf(kind, &br.vf),
            };
            (br != expected).then(|| GraphWitness { x: x.clone(), y: y.clone(), bracket: br, expected })
        })
        .collect();
    let witness = results.into_iter().flatten().next();
    GraphClosureReport { closed: witness.is_none(), pairs_checked: pairs.len(), witness }
}

/// [π, π] in components: the cyclic sum Σ_l (π^{li} ∂_l π^{jk} + π^{lj} ∂_l π^{ki} + π^{lk} ∂_l π^{ij}).
pub fn jacobiator_of_bivector(pi: &Bivector) -> BTreeMap<(usize, usize, usize), Poly> {
    let n = pi.vars();
    let mut out = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut s = Poly::zero(n);
                for l in 0..n {
                    s = &s + &(&pi.get(l, i) * &pi.get(j, k).derivative(l));
                    s = &s + &(&pi.get(l, j) * &pi.get(k, i).derivative(l));
                    s = &s + &(&pi.get(l, k) * &pi.get(i, j).derivative(l));
                }
                if !s.is_zero() {
                    out.insert((i, j, k), s);
                }
            }
        }
    }
    out
}
