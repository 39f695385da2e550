//! Named example algebras and seeded random families used by tests, the
//! acceptance suite and the CLI.

use crate::algebra::StructureAlgebra;
use crate::envelope::{canonical_envelope_with, IdealChoice};
use crate::linalg::{int, rat, Matrix, Rational};
use crate::products::{gl_action, hemisemidirect, ModuleAction};
use crate::sampling::Sampler;

/// 2-dim Leibniz algebra with e2·e2 = e1 as its only nonzero product.
pub fn leibniz2() -> StructureAlgebra {
    StructureAlgebra::from_entries("leibniz2", 2, &[(1, 1, 0, int(1))])
}

/// so(3) with [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
pub fn so3() -> StructureAlgebra {
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

/// Defining representation of so(3) on ℝ³.
pub fn so3_action() -> ModuleAction {
    let mats = [
        Matrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]),
        Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]),
        Matrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]),
    ];
    ModuleAction::new(so3(), 3, mats.to_vec()).expect("so(3) acts on R^3")
}

/// Heisenberg algebra with [X,Y] = Z.
pub fn heisenberg() -> StructureAlgebra {
    StructureAlgebra::from_entries("h3", 3, &[(0, 1, 2, int(1)), (1, 0, 2, int(-1))])
        .with_basis_names(vec!["X".into(), "Y".into(), "Z".into()])
        .expect("distinct names")
}

/// h3 acting on ℝ³ by X = E12, Y = E23, Z = E13.
pub fn heisenberg_action() -> ModuleAction {
    let mats = [
        Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]),
        Matrix::from_i64(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]),
        Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]),
    ];
    ModuleAction::new(heisenberg(), 3, mats.to_vec()).expect("h3 acts on R^3")
}

/// aff(1) with [a,b] = b.
pub fn aff1() -> StructureAlgebra {
    StructureAlgebra::from_entries("aff1", 2, &[(0, 1, 1, int(1)), (1, 0, 1, int(-1))])
        .with_basis_names(vec!["a".into(), "b".into()])
        .expect("distinct names")
}

/// aff(1) acting on ℝ by a ↦ 1, b ↦ 0.
pub fn aff1_action() -> ModuleAction {
    let mats = vec![Matrix::from_i64(&[&[1]]), Matrix::from_i64(&[&[0]])];
    ModuleAction::new(aff1(), 1, mats).expect("aff(1) acts on R")
}

fn named(a: StructureAlgebra, name: &str) -> StructureAlgebra {
    a.with_name(name)
}

pub fn hemi_gl(d: usize) -> StructureAlgebra {
    named(hemisemidirect(&gl_action(d)).expect("gl(d) is Lie"), &format!("gl{d}_hemi"))
}

pub fn hemi_aff1() -> StructureAlgebra {
    named(hemisemidirect(&aff1_action()).expect("aff(1) is Lie"), "aff1_hemi")
}

pub fn hemi_so3() -> StructureAlgebra {
    named(hemisemidirect(&so3_action()).expect("so(3) is Lie"), "so3_hemi")
}

pub fn hemi_heisenberg() -> StructureAlgebra {
    named(hemisemidirect(&heisenberg_action()).expect("h3 is Lie"), "h3_hemi")
}

/// Random Leibniz algebra of dimension `n` with c_ij^k = 0 unless
/// k > max(i, j), so every left multiplication is strictly triangular.
/// Draws are repeated until the Leibniz identity holds.
pub fn random_nilpotent_leibniz(n: usize, seed: u64) -> StructureAlgebra {
    let mut sampler = Sampler::new(seed);
    loop {
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in i.max(j) + 1..n {
                    if sampler.chance(0.35) {
                        let c = sampler.rational();
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        let a = StructureAlgebra::from_entries(format!("nil{n}_{seed}"), n, &entries);
        if a.is_leibniz() && !a.nonzero_products().is_empty() {
            return a;
        }
    }
}

/// Random sparse algebra with no identity imposed; mostly non-Leibniz.
pub fn random_sparse_algebra(n: usize, seed: u64) -> StructureAlgebra {
    let mut sampler = Sampler::new(seed);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if sampler.chance(0.25) {
                    entries.push((i, j, k, sampler.rational()));
                }
            }
        }
    }
    StructureAlgebra::from_entries(format!("sparse{n}_{seed}"), n, &entries)
}

/// Random skew algebra; usually fails Jacobi.
pub fn random_skew_algebra(n: usize, seed: u64) -> StructureAlgebra {
    let mut sampler = Sampler::new(seed);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                if sampler.chance(0.4) {
                    let c = sampler.rational();
                    entries.push((j, i, k, -c.clone()));
                    entries.push((i, j, k, c));
                }
            }
        }
    }
    StructureAlgebra::from_entries(format!("skew{n}_{seed}"), n, &entries)
}

/// Random invertible matrix: unit lower triangular times unit upper
/// triangular with small entries.
pub fn random_invertible(n: usize, sampler: &mut Sampler) -> Matrix {
    let mut l = Matrix::identity(n);
    let mut u = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            if i > j {
                l.set(i, j, int(sampler.small_int(-2, 2)));
            } else if i < j {
                u.set(i, j, int(sampler.small_int(-2, 2)));
            }
        }
    }
    l.matmul(&u).expect("square")
}

/// `a` in a random basis; identities are preserved.
pub fn transported(a: &StructureAlgebra, seed: u64) -> StructureAlgebra {
    let mut sampler = Sampler::new(seed);
    let p = random_invertible(a.dim(), &mut sampler);
    a.change_basis(&p).expect("invertible change of basis").with_name(format!("{}_t{seed}", a.name()))
}

/// Leibniz algebras for the recovery, scaling and Lie–Yamaguti criteria.
pub fn leibniz_corpus() -> Vec<StructureAlgebra> {
    let mut out = vec![leibniz2(), hemi_gl(1), hemi_gl(2), hemi_gl(3), hemi_aff1(), hemi_heisenberg(), hemi_so3()];
    let bases = [leibniz2(), hemi_gl(1), hemi_gl(2), hemi_aff1()];
    for b in &bases {
        let t = canonical_envelope_with(b, &IdealChoice::Squares).expect("canonical envelope");
        out.push(t.g().clone().with_name(format!("{}_env", b.name())));
    }
    for (i, n) in [3usize, 3, 4, 4, 5, 5].iter().enumerate() {
        out.push(random_nilpotent_leibniz(*n, 100 + i as u64));
    }
    out
}

/// Fifty seeded algebras: transported corpus members and Lie algebras,
/// random nilpotent Leibniz algebras, random skew and sparse algebras.
pub fn graph_random_family(seed: u64) -> Vec<StructureAlgebra> {
    let base = [leibniz2(), hemi_gl(1), hemi_aff1(), so3(), aff1(), heisenberg(), hemi_heisenberg()];
    let mut out = Vec::new();
    for k in 0..50u64 {
        let s = seed.wrapping_add(k);
        let a = match k % 5 {
            0 | 1 => transported(&base[(k as usize / 5 + k as usize % 5) % base.len()], s),
            2 => random_nilpotent_leibniz(3 + (k as usize % 3), s),
            3 => random_skew_algebra(2 + (k as usize % 3), s),
            _ => random_sparse_algebra(2 + (k as usize % 2), s),
        };
        out.push(a);
    }
    out
}

/// Rational scalings for the s-scaling criterion.
pub fn scaling_values() -> Vec<Rational> {
    vec![int(1), rat(1, 2), int(-2), rat(3, 7)]
}
