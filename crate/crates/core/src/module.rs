//! Graded modules over truncated graded algebras, with optional
//! H-equivariant (module) and H-comodule (Hopf-module) structure.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::gralg::GradedAlgebra;
use crate::hopf::HopfData;
use crate::matrix::Matrix;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A graded module over a [`GradedAlgebra`], realized in internal degrees
/// `0..=bound` with the full action of every algebra basis element.
#[derive(Clone, Debug)]
pub struct GradedModule {
    pub field: Field,
    pub side: Side,
    pub bound: usize,
    pub dims: Vec<usize>,
    pub labels: Vec<Vec<String>>,
    /// `act[adeg][aidx][mdeg]`: matrix `M_mdeg -> M_{mdeg+adeg}` for the
    /// action of the algebra basis element (adeg, aidx); present only for
    /// `mdeg + adeg <= bound`.
    pub act: Vec<Vec<Vec<Matrix>>>,
}

impl GradedModule {
    pub fn dim(&self, d: usize) -> usize {
        if d <= self.bound {
            self.dims[d]
        } else {
            0
        }
    }

    /// Action of a homogeneous algebra element on a homogeneous module
    /// vector; result lives in degree `mdeg + adeg`.
    pub fn act_vec(&self, adeg: usize, avec: &[Scalar], mdeg: usize, mvec: &[Scalar]) -> Vec<Scalar> {
        assert!(mdeg + adeg <= self.bound);
        let f = self.field;
        let mut out = vec![f.zero(); self.dims[mdeg + adeg]];
        for (ai, c) in avec.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let img = self.act[adeg][ai][mdeg].apply(mvec);
            for (k, x) in img.iter().enumerate() {
                out[k] = f.add(&out[k], &f.mul(c, x));
            }
        }
        out
    }

    /// The trivial module: `k` in degree 0, with the algebra acting
    /// through the augmentation functional on the degree-0 component
    /// (and by 0 in positive degrees).
    pub fn trivial(alg: &GradedAlgebra, side: Side, augmentation: &[Scalar]) -> GradedModule {
        let f = alg.field;
        let mut dims = vec![0; alg.bound + 1];
        dims[0] = 1;
        let mut labels = vec![Vec::new(); alg.bound + 1];
        labels[0] = vec!["1".to_string()];
        let mut act = Vec::with_capacity(alg.bound + 1);
        for adeg in 0..=alg.bound {
            let mut per_idx = Vec::with_capacity(alg.dims[adeg]);
            for ai in 0..alg.dims[adeg] {
                let mut per_deg = Vec::new();
                for mdeg in 0..=(alg.bound - adeg) {
                    let mut m = Matrix::zero(f, dims[mdeg + adeg], dims[mdeg]);
                    if adeg == 0 && mdeg == 0 {
                        m.set(0, 0, augmentation[ai].clone());
                    }
                    per_deg.push(m);
                }
                per_idx.push(per_deg);
            }
            act.push(per_idx);
        }
        GradedModule { field: f, side, bound: alg.bound, dims, labels, act }
    }

    /// The regular module: the algebra acting on itself by multiplication
    /// on the chosen side.
    pub fn regular(alg: &GradedAlgebra, side: Side) -> GradedModule {
        let f = alg.field;
        let mut act = Vec::with_capacity(alg.bound + 1);
        for adeg in 0..=alg.bound {
            let mut per_idx = Vec::with_capacity(alg.dims[adeg]);
            for ai in 0..alg.dims[adeg] {
                let mut per_deg = Vec::new();
                for mdeg in 0..=(alg.bound - adeg) {
                    let mut m = Matrix::zero(f, alg.dims[mdeg + adeg], alg.dims[mdeg]);
                    for mi in 0..alg.dims[mdeg] {
                        let prod = match side {
                            Side::Right => alg.mul_basis(mdeg, mi, adeg, ai),
                            Side::Left => alg.mul_basis(adeg, ai, mdeg, mi),
                        };
                        for (k, c) in prod.iter().enumerate() {
                            m.set(k, mi, c.clone());
                        }
                    }
                    per_deg.push(m);
                }
                per_idx.push(per_deg);
            }
            act.push(per_idx);
        }
        GradedModule {
            field: f,
            side,
            bound: alg.bound,
            dims: alg.dims.clone(),
            labels: alg.labels.clone(),
            act,
        }
    }

    /// Checks the unit law and action associativity against the algebra.
    pub fn validate(&self, alg: &GradedAlgebra) -> Result<()> {
        let f = self.field;
        for mdeg in 0..=self.bound {
            for mi in 0..self.dims[mdeg] {
                let mut e = vec![f.zero(); self.dims[mdeg]];
                e[mi] = f.one();
                if self.act_vec(0, &alg.unit, mdeg, &e) != e {
                    return Err(Error::Math(format!(
                        "module unit law fails in degree {mdeg}"
                    )));
                }
            }
        }
        for d1 in 0..=self.bound {
            for d2 in 0..=(self.bound - d1) {
                for mdeg in 0..=(self.bound - d1 - d2) {
                    for i in 0..alg.dims[d1] {
                        for j in 0..alg.dims[d2] {
                            for mi in 0..self.dims[mdeg] {
                                let mut m = vec![f.zero(); self.dims[mdeg]];
                                m[mi] = f.one();
                                let mut ei = vec![f.zero(); alg.dims[d1]];
                                ei[i] = f.one();
                                let mut ej = vec![f.zero(); alg.dims[d2]];
                                ej[j] = f.one();
                                // Right: (m a) a' = m (a a'); left: a (a' m) = (a a') m.
                                let (stepwise, combined) = match self.side {
                                    Side::Right => {
                                        let ma = self.act_vec(d1, &ei, mdeg, &m);
                                        let maa = self.act_vec(d2, &ej, mdeg + d1, &ma);
                                        let prod = alg.mul_vec(d1, &ei, d2, &ej);
                                        (maa, self.act_vec(d1 + d2, &prod, mdeg, &m))
                                    }
                                    Side::Left => {
                                        let am = self.act_vec(d2, &ej, mdeg, &m);
                                        let aam = self.act_vec(d1, &ei, mdeg + d2, &am);
                                        let prod = alg.mul_vec(d1, &ei, d2, &ej);
                                        (aam, self.act_vec(d1 + d2, &prod, mdeg, &m))
                                    }
                                };
                                if stepwise != combined {
                                    return Err(Error::Math(format!(
                                        "module associativity fails at algebra degrees ({d1},{d2}), module degree {mdeg}"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// An A-module with a compatible left H-action — equivalently a module
/// over the smash product A#H without materializing A#H.
#[derive(Clone, Debug)]
pub struct EquivariantModule {
    pub module: GradedModule,
    /// `hmats[h][mdeg]`: action of the Hopf basis element `e_h` on the
    /// degree-`mdeg` component.
    pub hmats: Vec<Vec<Matrix>>,
}

impl EquivariantModule {
    /// `k` with `H` acting through the counit.
    pub fn trivial(alg: &GradedAlgebra, hopf: &HopfData, side: Side, augmentation: &[Scalar]) -> EquivariantModule {
        let module = GradedModule::trivial(alg, side, augmentation);
        let f = alg.field;
        let hmats = (0..hopf.dim)
            .map(|h| {
                module
                    .dims
                    .iter()
                    .map(|&n| Matrix::identity(f, n).scale(&hopf.counit[h]))
                    .collect()
            })
            .collect();
        EquivariantModule { module, hmats }
    }

    /// The algebra itself with a module-algebra action of H.
    pub fn regular(alg: &GradedAlgebra, action: &crate::hopf::ActionData, side: Side) -> EquivariantModule {
        EquivariantModule {
            module: GradedModule::regular(alg, side),
            hmats: action.mats.clone(),
        }
    }

    pub fn h_act(&self, field: &Field, h: &[Scalar], mdeg: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![field.zero(); v.len()];
        for (i, c) in h.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let img = self.hmats[i][mdeg].apply(v);
            for (k, x) in img.iter().enumerate() {
                out[k] = field.add(&out[k], &field.mul(c, x));
            }
        }
        out
    }

    /// Validates that the H-action is a module structure compatible with
    /// the algebra action: `h |> (m a) = sum (h1 |> m)(h2 |> a)` (right
    /// side), resp. `h |> (a m) = sum (h1 |> a)(h2 |> m)` (left side),
    /// where H also acts on the algebra through `action`.
    pub fn validate(&self, alg: &GradedAlgebra, hopf: &HopfData, action: &crate::hopf::ActionData) -> Result<()> {
        let f = self.module.field;
        // H-module axioms degreewise
        for mdeg in 0..=self.module.bound {
            let n = self.module.dims[mdeg];
            let mut unit_act = Matrix::zero(f, n, n);
            for (i, c) in hopf.unit.iter().enumerate() {
                unit_act = unit_act.add(&self.hmats[i][mdeg].scale(c));
            }
            if unit_act != Matrix::identity(f, n) {
                return Err(Error::Math("equivariant module: unit action fails".into()));
            }
            for i in 0..hopf.dim {
                for j in 0..hopf.dim {
                    let composed = self.hmats[i][mdeg].mul(&self.hmats[j][mdeg]);
                    let prod = hopf.mul_vec(&hopf.basis_vec(i), &hopf.basis_vec(j));
                    let mut direct = Matrix::zero(f, n, n);
                    for (k, c) in prod.iter().enumerate() {
                        direct = direct.add(&self.hmats[k][mdeg].scale(c));
                    }
                    if composed != direct {
                        return Err(Error::Math(format!(
                            "equivariant module: H-module axiom fails in degree {mdeg}"
                        )));
                    }
                }
            }
        }
        // compatibility with the algebra action
        for h in 0..hopf.dim {
            let t = hopf.comult_vec(&hopf.basis_vec(h));
            for adeg in 0..=alg.bound {
                for mdeg in 0..=(alg.bound - adeg) {
                    for ai in 0..alg.dims[adeg] {
                        for mi in 0..self.module.dims[mdeg] {
                            let mut a = vec![f.zero(); alg.dims[adeg]];
                            a[ai] = f.one();
                            let mut m = vec![f.zero(); self.module.dims[mdeg]];
                            m[mi] = f.one();
                            let ma = self.module.act_vec(adeg, &a, mdeg, &m);
                            let lhs = self.hmats[h][mdeg + adeg].apply(&ma);
                            let mut rhs = vec![f.zero(); self.module.dims[mdeg + adeg]];
                            for p in 0..hopf.dim {
                                for q in 0..hopf.dim {
                                    let c = t.get(p, q);
                                    if f.is_zero(c) {
                                        continue;
                                    }
                                    let (hm, ha) = match self.module.side {
                                        Side::Right => (
                                            self.hmats[p][mdeg].apply(&m),
                                            action.mats[q][adeg].apply(&a),
                                        ),
                                        Side::Left => (
                                            self.hmats[q][mdeg].apply(&m),
                                            action.mats[p][adeg].apply(&a),
                                        ),
                                    };
                                    let term = self.module.act_vec(adeg, &ha, mdeg, &hm);
                                    for (k, x) in term.iter().enumerate() {
                                        rhs[k] = f.add(&rhs[k], &f.mul(c, x));
                                    }
                                }
                            }
                            if lhs != rhs {
                                return Err(Error::Math(format!(
                                    "equivariant compatibility fails at algebra degree {adeg}, module degree {mdeg}"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A B-module with a compatible left H-coaction (a Hopf module).
#[derive(Clone, Debug)]
pub struct HopfModule {
    pub module: GradedModule,
    /// `comps[h][mdeg]`: `e_h` component of the coaction on degree `mdeg`.
    pub comps: Vec<Vec<Matrix>>,
    /// Set when the module is the regular module B with coaction given by
    /// the coaction of B itself; enables the length-0 resolution path.
    pub is_regular: bool,
}

impl HopfModule {
    /// `k` with the trivial coaction `rho(x) = 1 (x) x`.
    pub fn trivial(alg: &GradedAlgebra, hopf: &HopfData, side: Side, augmentation: &[Scalar]) -> HopfModule {
        let module = GradedModule::trivial(alg, side, augmentation);
        let f = alg.field;
        let comps = (0..hopf.dim)
            .map(|h| {
                module
                    .dims
                    .iter()
                    .map(|&n| Matrix::identity(f, n).scale(&hopf.unit[h]))
                    .collect()
            })
            .collect();
        HopfModule { module, comps, is_regular: false }
    }

    /// B as a module over itself, with its comodule-algebra coaction.
    pub fn regular(alg: &GradedAlgebra, coaction: &crate::hopf::CoactionData, side: Side) -> HopfModule {
        HopfModule {
            module: GradedModule::regular(alg, side),
            comps: coaction.comps.clone(),
            is_regular: true,
        }
    }

    /// Coaction of a homogeneous vector, returned as one module vector
    /// per Hopf basis element.
    pub fn coact(&self, mdeg: usize, v: &[Scalar]) -> Vec<Vec<Scalar>> {
        self.comps.iter().map(|per_h| per_h[mdeg].apply(v)).collect()
    }

    /// Validates comodule axioms and the Hopf-module law
    /// `rho(x b) = rho(x) rho(b)` against B's coaction.
    pub fn validate(&self, alg: &GradedAlgebra, hopf: &HopfData, coaction: &crate::hopf::CoactionData) -> Result<()> {
        let f = self.module.field;
        for mdeg in 0..=self.module.bound {
            let n = self.module.dims[mdeg];
            let mut acc = Matrix::zero(f, n, n);
            for h in 0..hopf.dim {
                acc = acc.add(&self.comps[h][mdeg].scale(&hopf.counit[h]));
            }
            if acc != Matrix::identity(f, n) {
                return Err(Error::Math("Hopf module: counit law fails".into()));
            }
            for i in 0..hopf.dim {
                for j in 0..hopf.dim {
                    let mut lhs = Matrix::zero(f, n, n);
                    for h in 0..hopf.dim {
                        let c = &hopf.comult[h][i][j];
                        if !f.is_zero(c) {
                            lhs = lhs.add(&self.comps[h][mdeg].scale(c));
                        }
                    }
                    let rhs = self.comps[j][mdeg].mul(&self.comps[i][mdeg]);
                    if lhs != rhs {
                        return Err(Error::Math(format!(
                            "Hopf module: coassociativity fails in degree {mdeg}"
                        )));
                    }
                }
            }
        }
        for adeg in 0..=alg.bound {
            for mdeg in 0..=(alg.bound - adeg) {
                for ai in 0..alg.dims[adeg] {
                    for mi in 0..self.module.dims[mdeg] {
                        let mut a = vec![f.zero(); alg.dims[adeg]];
                        a[ai] = f.one();
                        let mut m = vec![f.zero(); self.module.dims[mdeg]];
                        m[mi] = f.one();
                        let ma = self.module.act_vec(adeg, &a, mdeg, &m);
                        for h in 0..hopf.dim {
                            let lhs = self.comps[h][mdeg + adeg].apply(&ma);
                            let mut rhs = vec![f.zero(); self.module.dims[mdeg + adeg]];
                            for p in 0..hopf.dim {
                                for q in 0..hopf.dim {
                                    // e_h component of rho(m) rho(a): the
                                    // H parts multiply (order follows the
                                    // module side).
                                    let (mp, aq, c) = match self.module.side {
                                        Side::Right => (
                                            self.comps[p][mdeg].apply(&m),
                                            coaction.comps[q][adeg].apply(&a),
                                            &hopf.mult[p][q][h],
                                        ),
                                        Side::Left => (
                                            self.comps[q][mdeg].apply(&m),
                                            coaction.comps[p][adeg].apply(&a),
                                            &hopf.mult[p][q][h],
                                        ),
                                    };
                                    if f.is_zero(c) {
                                        continue;
                                    }
                                    let term = self.module.act_vec(adeg, &aq, mdeg, &mp);
                                    for (k, x) in term.iter().enumerate() {
                                        rhs[k] = f.add(&rhs[k], &f.mul(c, x));
                                    }
                                }
                            }
                            if lhs != rhs {
                                return Err(Error::Math(format!(
                                    "Hopf module law fails at algebra degree {adeg}, module degree {mdeg}"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gralg::{Presentation, PresentedAlgebra};

    fn kx(bound: usize) -> GradedAlgebra {
        PresentedAlgebra::build(
            Presentation {
                field: Field::Rationals,
                generators: vec![("x".into(), 1)],
                relations: vec![],
            },
            bound,
        )
        .unwrap()
        .algebra
    }

    #[test]
    fn trivial_module_validates() {
        let a = kx(4);
        let m = GradedModule::trivial(&a, Side::Right, &[a.field.one()]);
        m.validate(&a).unwrap();
        assert_eq!(m.dims, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn regular_module_validates_both_sides() {
        let a = kx(4);
        GradedModule::regular(&a, Side::Right).validate(&a).unwrap();
        GradedModule::regular(&a, Side::Left).validate(&a).unwrap();
    }

    #[test]
    fn regular_action_matches_multiplication() {
        let a = kx(4);
        let m = GradedModule::regular(&a, Side::Right);
        // x^2 . x = x^3
        let f = a.field;
        let img = m.act_vec(1, &[f.one()], 2, &[f.one()]);
        assert_eq!(img, vec![f.one()]);
    }

    #[test]
    fn trivial_equivariant_module_validates() {
        let f = Field::Rationals;
        let a = kx(3);
        let h = HopfData::cyclic_group_algebra(f, 2).unwrap();
        let action = crate::hopf::ActionData::trivial(&h, &a.dims);
        let m = EquivariantModule::trivial(&a, &h, Side::Right, &[f.one()]);
        m.validate(&a, &h, &action).unwrap();
    }

    #[test]
    fn regular_equivariant_module_with_sign_action() {
        let f = Field::Rationals;
        let pres = PresentedAlgebra::build(
            Presentation {
                field: f,
                generators: vec![("x".into(), 1)],
                relations: vec![],
            },
            3,
        )
        .unwrap();
        let h = HopfData::cyclic_group_algebra(f, 2).unwrap();
        let action = crate::hopf::ActionData::extend(
            &h,
            &pres,
            &[vec![vec![f.one()]], vec![vec![f.from_i64(-1)]]],
        )
        .unwrap();
        let m = EquivariantModule::regular(&pres.algebra, &action, Side::Right);
        m.validate(&pres.algebra, &h, &action).unwrap();
    }

    #[test]
    fn regular_hopf_module_validates() {
        let f = Field::prime(7).unwrap();
        let pres = PresentedAlgebra::build(
            Presentation {
                field: f,
                generators: vec![("y".into(), 1)],
                relations: vec![],
            },
            3,
        )
        .unwrap();
        let h = HopfData::cyclic_group_algebra(f, 2).unwrap();
        let mut gen_comps = vec![vec![vec![f.zero()]]; 2];
        gen_comps[1][0][0] = f.one(); // rho(y) = g (x) y
        let co = crate::hopf::CoactionData::extend(&h, &pres, &gen_comps).unwrap();
        let x = HopfModule::regular(&pres.algebra, &co, Side::Right);
        x.validate(&pres.algebra, &h, &co).unwrap();
    }
}
