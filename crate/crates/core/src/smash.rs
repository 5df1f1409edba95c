//! Takeuchi smash products `A # B` twisted by a Hopf action on A and a
//! Hopf coaction on B, smash products of modules, Ore extensions, and the
//! freeness isomorphism.
//!
//! The product is `(a#b)(a'#b') = sum a (b_{-1} |> a') # b_0 b'`, with
//! `rho(b) = sum b_{-1} (x) b_0` the coaction of H on B.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::gralg::{GradedAlgebra, PresentedAlgebra};
use crate::hopf::{ActionData, CoactionData, HopfData};
use crate::matrix::Matrix;
use crate::module::{EquivariantModule, GradedModule, HopfModule, Side};

/// The smash product, with a pair-indexed basis over the factors.
#[derive(Clone, Debug)]
pub struct SmashAlgebra {
    pub a: GradedAlgebra,
    pub b: GradedAlgebra,
    pub hopf: HopfData,
    pub action: ActionData,
    pub coaction: CoactionData,
    /// The smash product as a plain graded algebra.
    pub algebra: GradedAlgebra,
    /// `pairs[d]` lists `(a_degree, a_index, b_index)` in basis order
    /// (A-major: ascending A-degree, then A index, then B index).
    pub pairs: Vec<Vec<(usize, usize, usize)>>,
}

impl SmashAlgebra {
    pub fn build(
        a: GradedAlgebra,
        action: ActionData,
        b: GradedAlgebra,
        coaction: CoactionData,
        hopf: HopfData,
        bound: usize,
    ) -> Result<SmashAlgebra> {
        let f = a.field;
        if b.field != f || hopf.field != f {
            return Err(Error::Input("smash product factors over different fields".into()));
        }
        if bound > a.bound || bound > b.bound {
            return Err(Error::Input("smash bound exceeds a factor's realization bound".into()));
        }
        action.validate(&hopf, &a)?;
        coaction.validate(&hopf, &b)?;

        let mut pairs: Vec<Vec<(usize, usize, usize)>> = Vec::with_capacity(bound + 1);
        for d in 0..=bound {
            let mut list = Vec::new();
            for da in 0..=d {
                let db = d - da;
                for ai in 0..a.dim(da) {
                    for bi in 0..b.dim(db) {
                        list.push((da, ai, bi));
                    }
                }
            }
            pairs.push(list);
        }
        let dims: Vec<usize> = pairs.iter().map(|p| p.len()).collect();
        let labels: Vec<Vec<String>> = (0..=bound)
            .map(|d| {
                pairs[d]
                    .iter()
                    .map(|&(da, ai, bi)| {
                        format!("{}#{}", a.labels[da][ai], b.labels[d - da][bi])
                    })
                    .collect()
            })
            .collect();
        let pos = |d: usize, da: usize, ai: usize, bi: usize| -> usize {
            pairs[d]
                .iter()
                .position(|&t| t == (da, ai, bi))
                .expect("pair index out of range")
        };

        let mut unit = vec![f.zero(); dims[0]];
        for (k, &(_, ai, bi)) in pairs[0].iter().enumerate() {
            unit[k] = f.mul(&a.unit[ai], &b.unit[bi]);
        }

        let mut mult = Vec::with_capacity(bound + 1);
        for d1 in 0..=bound {
            let mut by_d2 = Vec::new();
            for d2 in 0..=bound {
                if d1 + d2 > bound {
                    by_d2.push(Vec::new());
                    continue;
                }
                let mut table = Vec::with_capacity(dims[d1]);
                for &(da, ai, bi) in &pairs[d1] {
                    let db = d1 - da;
                    let mut row = Vec::with_capacity(dims[d2]);
                    for &(ea, aj, bj) in &pairs[d2] {
                        let eb = d2 - ea;
                        let mut out = vec![f.zero(); dims[d1 + d2]];
                        let mut bvec = vec![f.zero(); b.dim(db)];
                        bvec[bi] = f.one();
                        let mut avec2 = vec![f.zero(); a.dim(ea)];
                        avec2[aj] = f.one();
                        let mut avec1 = vec![f.zero(); a.dim(da)];
                        avec1[ai] = f.one();
                        for h in 0..hopf.dim {
                            let b0 = coaction.comps[h][db].apply(&bvec);
                            if b0.iter().all(|c| f.is_zero(c)) {
                                continue;
                            }
                            let ha = action.mats[h][ea].apply(&avec2);
                            if ha.iter().all(|c| f.is_zero(c)) {
                                continue;
                            }
                            let apart = a.mul_vec(da, &avec1, ea, &ha);
                            let mut bvec2 = vec![f.zero(); b.dim(eb)];
                            bvec2[bj] = f.one();
                            let bpart = b.mul_vec(db, &b0, eb, &bvec2);
                            for (ak, ac) in apart.iter().enumerate() {
                                if f.is_zero(ac) {
                                    continue;
                                }
                                for (bk, bc) in bpart.iter().enumerate() {
                                    if f.is_zero(bc) {
                                        continue;
                                    }
                                    let k = pos(d1 + d2, da + ea, ak, bk);
                                    out[k] = f.add(&out[k], &f.mul(ac, bc));
                                }
                            }
                        }
                        row.push(out);
                    }
                    table.push(row);
                }
                by_d2.push(table);
            }
            mult.push(by_d2);
        }

        let algebra = GradedAlgebra { field: f, bound, dims, labels, unit, mult };
        algebra.validate()?;
        Ok(SmashAlgebra { a, b, hopf, action, coaction, algebra, pairs })
    }

    pub fn pair_pos(&self, d: usize, da: usize, ai: usize, bi: usize) -> usize {
        self.pairs[d]
            .iter()
            .position(|&t| t == (da, ai, bi))
            .expect("pair index out of range")
    }

    /// Augmentation of the smash product from augmentations of the
    /// factors' degree-0 parts.
    pub fn augmentation(&self, eps_a: &[Scalar], eps_b: &[Scalar]) -> Vec<Scalar> {
        let f = self.algebra.field;
        self.pairs[0]
            .iter()
            .map(|&(_, ai, bi)| f.mul(&eps_a[ai], &eps_b[bi]))
            .collect()
    }

    /// Checks that multiplication through the twisted-tensor map
    /// `tau(b (x) a) = sum (b_{-1} |> a) (x) b_0` reproduces the stored
    /// structure constants on all basis quadruples.
    pub fn twisted_tensor_check(&self) -> Result<()> {
        let f = self.algebra.field;
        let bound = self.algebra.bound;
        for d1 in 0..=bound {
            for d2 in 0..=(bound - d1) {
                for (i1, &(da, ai, bi)) in self.pairs[d1].iter().enumerate() {
                    let db = d1 - da;
                    for (i2, &(ea, aj, bj)) in self.pairs[d2].iter().enumerate() {
                        let eb = d2 - ea;
                        // tau on (b_i (x) a_j), then multiply a tau_A and tau_B b'.
                        let mut out = vec![f.zero(); self.algebra.dims[d1 + d2]];
                        let mut bvec = vec![f.zero(); self.b.dim(db)];
                        bvec[bi] = f.one();
                        let mut avec2 = vec![f.zero(); self.a.dim(ea)];
                        avec2[aj] = f.one();
                        for h in 0..self.hopf.dim {
                            let b0 = self.coaction.comps[h][db].apply(&bvec);
                            let ha = self.action.mats[h][ea].apply(&avec2);
                            let mut avec1 = vec![f.zero(); self.a.dim(da)];
                            avec1[ai] = f.one();
                            let apart = self.a.mul_vec(da, &avec1, ea, &ha);
                            let mut bvec2 = vec![f.zero(); self.b.dim(eb)];
                            bvec2[bj] = f.one();
                            let bpart = self.b.mul_vec(db, &b0, eb, &bvec2);
                            for (ak, ac) in apart.iter().enumerate() {
                                for (bk, bc) in bpart.iter().enumerate() {
                                    let v = f.mul(ac, bc);
                                    if f.is_zero(&v) {
                                        continue;
                                    }
                                    let k = self.pair_pos(d1 + d2, da + ea, ak, bk);
                                    out[k] = f.add(&out[k], &v);
                                }
                            }
                        }
                        if out != self.algebra.mult[d1][d2][i1][i2] {
                            return Err(Error::Math(format!(
                                "twisted-tensor product disagrees at degrees ({d1},{d2}) indices ({i1},{i2})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Lemma-style freeness isomorphism `phi(a#b) = sum b_0 (x)
    /// (S^{-1}b_{-1} |> a)`: materialized degreewise, checked bijective
    /// and a B-A-bimodule map.
    pub fn freeness_isomorphism(&self) -> Result<()> {
        let f = self.algebra.field;
        let bound = self.algebra.bound;
        // target basis in degree d: (b_degree, b_index, a_index) pairs;
        // use B-major ordering for the tensor B (x) A.
        let tensor_basis = |d: usize| -> Vec<(usize, usize, usize)> {
            let mut out = Vec::new();
            for db in 0..=d {
                for bi in 0..self.b.dim(db) {
                    for ai in 0..self.a.dim(d - db) {
                        out.push((db, bi, ai));
                    }
                }
            }
            out
        };
        let mut phis: Vec<Matrix> = Vec::new();
        for d in 0..=bound {
            let tb = tensor_basis(d);
            let n = self.algebra.dims[d];
            assert_eq!(tb.len(), n);
            let mut phi = Matrix::zero(f, n, n);
            for (col, &(da, ai, bi)) in self.pairs[d].iter().enumerate() {
                let db = d - da;
                let mut bvec = vec![f.zero(); self.b.dim(db)];
                bvec[bi] = f.one();
                let mut avec = vec![f.zero(); self.a.dim(da)];
                avec[ai] = f.one();
                for h in 0..self.hopf.dim {
                    let b0 = self.coaction.comps[h][db].apply(&bvec);
                    let sh = self.hopf.antipode_inv_vec(&self.hopf.basis_vec(h));
                    let sa = self.action.act(&f, &sh, da, &avec);
                    for (bk, bc) in b0.iter().enumerate() {
                        if f.is_zero(bc) {
                            continue;
                        }
                        for (ak, ac) in sa.iter().enumerate() {
                            if f.is_zero(ac) {
                                continue;
                            }
                            let row = tb
                                .iter()
                                .position(|&t| t == (db, bk, ak))
                                .unwrap();
                            phi.set(row, col, f.add(phi.get(row, col), &f.mul(bc, ac)));
                        }
                    }
                }
            }
            if phi.rank() != n {
                return Err(Error::Math(format!(
                    "freeness isomorphism is not bijective in degree {d}"
                )));
            }
            phis.push(phi);
        }
        // bimodule law: phi((1#b') s (a'#1)) = b' phi(s) a' on basis triples.
        for d in 0..=bound {
            for (col, _) in self.pairs[d].iter().enumerate() {
                let mut s = vec![f.zero(); self.algebra.dims[d]];
                s[col] = f.one();
                for db2 in 0..=(bound - d) {
                    for bi2 in 0..self.b.dim(db2) {
                        for da2 in 0..=(bound - d - db2) {
                            for ai2 in 0..self.a.dim(da2) {
                                let total = d + db2 + da2;
                                // left: (1#b') s (a'#1) through smash structure constants
                                let mut left_b = vec![f.zero(); self.algebra.dims[db2]];
                                left_b[self.pair_pos(db2, 0, 0, bi2)] = f.one();
                                let mut right_a = vec![f.zero(); self.algebra.dims[da2]];
                                right_a[self.pair_pos(da2, da2, ai2, 0)] = f.one();
                                let prod = self.algebra.mul_vec(
                                    db2 + d,
                                    &self.algebra.mul_vec(db2, &left_b, d, &s),
                                    da2,
                                    &right_a,
                                );
                                let lhs = phis[total].apply(&prod);
                                // right: b' phi(s) a' componentwise in B (x) A
                                let phi_s = phis[d].apply(&s);
                                let tb_d = tensor_basis(d);
                                let tb_t = tensor_basis(total);
                                let mut rhs = vec![f.zero(); self.algebra.dims[total]];
                                for (r, c) in phi_s.iter().enumerate() {
                                    if f.is_zero(c) {
                                        continue;
                                    }
                                    let (db, bk, ak) = tb_d[r];
                                    let mut bv = vec![f.zero(); self.b.dim(db)];
                                    bv[bk] = f.one();
                                    let mut bv2 = vec![f.zero(); self.b.dim(db2)];
                                    bv2[bi2] = f.one();
                                    let bb = self.b.mul_vec(db2, &bv2, db, &bv);
                                    let mut av = vec![f.zero(); self.a.dim(d - db)];
                                    av[ak] = f.one();
                                    let mut av2 = vec![f.zero(); self.a.dim(da2)];
                                    av2[ai2] = f.one();
                                    let aa = self.a.mul_vec(d - db, &av, da2, &av2);
                                    for (bk2, bc) in bb.iter().enumerate() {
                                        for (ak2, ac) in aa.iter().enumerate() {
                                            let v = f.mul(c, &f.mul(bc, ac));
                                            if f.is_zero(&v) {
                                                continue;
                                            }
                                            let row = tb_t
                                                .iter()
                                                .position(|&t| t == (db + db2, bk2, ak2))
                                                .unwrap();
                                            rhs[row] = f.add(&rhs[row], &v);
                                        }
                                    }
                                }
                                if lhs != rhs {
                                    return Err(Error::Math(format!(
                                        "freeness bimodule law fails at degree {d}, b'-degree {db2}, a'-degree {da2}"
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

/// A Hopf algebra viewed as a graded algebra concentrated in degree 0.
pub fn hopf_as_degree_zero_algebra(hopf: &HopfData, bound: usize) -> GradedAlgebra {
    let f = hopf.field;
    let mut dims = vec![0; bound + 1];
    dims[0] = hopf.dim;
    let mut labels = vec![Vec::new(); bound + 1];
    labels[0] = hopf.labels.clone();
    let mut mult = vec![vec![Vec::new(); bound + 1]; bound + 1];
    mult[0][0] = hopf.mult.clone();
    for d1 in 0..=bound {
        for d2 in 0..=bound {
            if (d1, d2) == (0, 0) || d1 + d2 > bound {
                continue;
            }
            mult[d1][d2] = vec![vec![Vec::new(); dims[d2]]; dims[d1]];
        }
    }
    GradedAlgebra { field: f, bound, dims, labels, unit: hopf.unit.clone(), mult }
}

/// Basis bookkeeping for a tensor-product module `M (x) X`: per degree,
/// entries `(u, m_index, x_index)` with `u` the M-degree.
pub fn tensor_dims(m: &GradedModule, x: &GradedModule, bound: usize) -> Vec<Vec<(usize, usize, usize)>> {
    let mut basis = Vec::with_capacity(bound + 1);
    for e in 0..=bound {
        let mut list = Vec::new();
        for u in 0..=e {
            for mi in 0..m.dim(u) {
                for xi in 0..x.dim(e - u) {
                    list.push((u, mi, xi));
                }
            }
        }
        basis.push(list);
    }
    basis
}

/// Structure (1.4): `(m (x) x)(a#b) = sum m(a # b_{-1}) (x) x b_0` on
/// `M (x) X` with `M` a right A#H-module and `X` a right B Hopf module.
pub fn smash_module_right(
    s: &SmashAlgebra,
    m: &EquivariantModule,
    x: &HopfModule,
) -> Result<GradedModule> {
    let f = s.algebra.field;
    if m.module.side != Side::Right || x.module.side != Side::Right {
        return Err(Error::Input("structure (1.4) needs right modules".into()));
    }
    let bound = s.algebra.bound;
    let basis = tensor_dims(&m.module, &x.module, bound);
    let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
    let labels: Vec<Vec<String>> = basis
        .iter()
        .enumerate()
        .map(|(e, list)| {
            list.iter()
                .map(|&(u, mi, xi)| {
                    format!("{}(x){}", m.module.labels[u][mi], x.module.labels[e - u][xi])
                })
                .collect()
        })
        .collect();
    let mut act = Vec::with_capacity(bound + 1);
    for sdeg in 0..=bound {
        let mut per_idx = Vec::with_capacity(s.algebra.dims[sdeg]);
        for si in 0..s.algebra.dims[sdeg] {
            let (da, ai, bi) = s.pairs[sdeg][si];
            let db = sdeg - da;
            let mut per_deg = Vec::new();
            for mdeg in 0..=(bound - sdeg) {
                let mut mat = Matrix::zero(f, dims[mdeg + sdeg], dims[mdeg]);
                for (col, &(u, mi, xi)) in basis[mdeg].iter().enumerate() {
                    let xdeg = mdeg - u;
                    let mut avec = vec![f.zero(); s.a.dim(da)];
                    avec[ai] = f.one();
                    let mut bvec = vec![f.zero(); s.b.dim(db)];
                    bvec[bi] = f.one();
                    let mut mvec = vec![f.zero(); m.module.dim(u)];
                    mvec[mi] = f.one();
                    let mut xvec = vec![f.zero(); x.module.dim(xdeg)];
                    xvec[xi] = f.one();
                    for h in 0..s.hopf.dim {
                        let b0 = s.coaction.comps[h][db].apply(&bvec);
                        if b0.iter().all(|c| f.is_zero(c)) {
                            continue;
                        }
                        // m (a # e_h) = S^{-1}(e_h) |> (m a)
                        let ma = m.module.act_vec(da, &avec, u, &mvec);
                        let sh = s.hopf.antipode_inv_vec(&s.hopf.basis_vec(h));
                        let mpart = m.h_act(&f, &sh, u + da, &ma);
                        let xb = x.module.act_vec(db, &b0, xdeg, &xvec);
                        for (mk, mc) in mpart.iter().enumerate() {
                            if f.is_zero(mc) {
                                continue;
                            }
                            for (xk, xc) in xb.iter().enumerate() {
                                let v = f.mul(mc, xc);
                                if f.is_zero(&v) {
                                    continue;
                                }
                                let row = basis[mdeg + sdeg]
                                    .iter()
                                    .position(|&p| p == (u + da, mk, xk))
                                    .unwrap();
                                mat.set(row, col, f.add(mat.get(row, col), &v));
                            }
                        }
                    }
                }
                per_deg.push(mat);
            }
            per_idx.push(per_deg);
        }
        act.push(per_idx);
    }
    let module = GradedModule { field: f, side: Side::Right, bound, dims, labels, act };
    module.validate(&s.algebra)?;
    Ok(module)
}

/// Structure (1.3): `(a#b)(m (x) x) = sum a (b_{-1} |> m) (x) b_0 x` on
/// `M (x) X` with `M` a left A#H-module and `X` a plain left B-module.
pub fn smash_module_left(
    s: &SmashAlgebra,
    m: &EquivariantModule,
    x: &GradedModule,
) -> Result<GradedModule> {
    let f = s.algebra.field;
    if m.module.side != Side::Left || x.side != Side::Left {
        return Err(Error::Input("structure (1.3) needs left modules".into()));
    }
    let bound = s.algebra.bound;
    let basis = tensor_dims(&m.module, x, bound);
    let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
    let labels: Vec<Vec<String>> = basis
        .iter()
        .enumerate()
        .map(|(e, list)| {
            list.iter()
                .map(|&(u, mi, xi)| format!("{}(x){}", m.module.labels[u][mi], x.labels[e - u][xi]))
                .collect()
        })
        .collect();
    let mut act = Vec::with_capacity(bound + 1);
    for sdeg in 0..=bound {
        let mut per_idx = Vec::with_capacity(s.algebra.dims[sdeg]);
        for si in 0..s.algebra.dims[sdeg] {
            let (da, ai, bi) = s.pairs[sdeg][si];
            let db = sdeg - da;
            let mut per_deg = Vec::new();
            for mdeg in 0..=(bound - sdeg) {
                let mut mat = Matrix::zero(f, dims[mdeg + sdeg], dims[mdeg]);
                for (col, &(u, mi, xi)) in basis[mdeg].iter().enumerate() {
                    let xdeg = mdeg - u;
                    let mut avec = vec![f.zero(); s.a.dim(da)];
                    avec[ai] = f.one();
                    let mut bvec = vec![f.zero(); s.b.dim(db)];
                    bvec[bi] = f.one();
                    let mut mvec = vec![f.zero(); m.module.dim(u)];
                    mvec[mi] = f.one();
                    let mut xvec = vec![f.zero(); x.dim(xdeg)];
                    xvec[xi] = f.one();
                    for h in 0..s.hopf.dim {
                        let b0 = s.coaction.comps[h][db].apply(&bvec);
                        if b0.iter().all(|c| f.is_zero(c)) {
                            continue;
                        }
                        let hm = m.h_act(&f, &s.hopf.basis_vec(h), u, &mvec);
                        let mpart = m.module.act_vec(da, &avec, u, &hm);
                        let xb = x.act_vec(db, &b0, xdeg, &xvec);
                        for (mk, mc) in mpart.iter().enumerate() {
                            if f.is_zero(mc) {
                                continue;
                            }
                            for (xk, xc) in xb.iter().enumerate() {
                                let v = f.mul(mc, xc);
                                if f.is_zero(&v) {
                                    continue;
                                }
                                let row = basis[mdeg + sdeg]
                                    .iter()
                                    .position(|&p| p == (u + da, mk, xk))
                                    .unwrap();
                                mat.set(row, col, f.add(mat.get(row, col), &v));
                            }
                        }
                    }
                }
                per_deg.push(mat);
            }
            per_idx.push(per_deg);
        }
        act.push(per_idx);
    }
    let module = GradedModule { field: f, side: Side::Left, bound, dims, labels, act };
    module.validate(&s.algebra)?;
    Ok(module)
}

/// Structure (1.5): `(n (x) y)(a#b) = sum n (y_{-1} |> a) (x) y_0 b` on
/// `N (x) Y` with `N` a plain right A-module and `Y` a right B Hopf module.
pub fn smash_module_15(
    s: &SmashAlgebra,
    n: &GradedModule,
    y: &HopfModule,
) -> Result<GradedModule> {
    let f = s.algebra.field;
    if n.side != Side::Right || y.module.side != Side::Right {
        return Err(Error::Input("structure (1.5) needs right modules".into()));
    }
    let bound = s.algebra.bound;
    let basis = tensor_dims(n, &y.module, bound);
    let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
    let labels: Vec<Vec<String>> = basis
        .iter()
        .enumerate()
        .map(|(e, list)| {
            list.iter()
                .map(|&(u, mi, xi)| format!("{}(x){}", n.labels[u][mi], y.module.labels[e - u][xi]))
                .collect()
        })
        .collect();
    let mut act = Vec::with_capacity(bound + 1);
    for sdeg in 0..=bound {
        let mut per_idx = Vec::with_capacity(s.algebra.dims[sdeg]);
        for si in 0..s.algebra.dims[sdeg] {
            let (da, ai, bi) = s.pairs[sdeg][si];
            let db = sdeg - da;
            let mut per_deg = Vec::new();
            for mdeg in 0..=(bound - sdeg) {
                let mut mat = Matrix::zero(f, dims[mdeg + sdeg], dims[mdeg]);
                for (col, &(u, mi, xi)) in basis[mdeg].iter().enumerate() {
                    let ydeg = mdeg - u;
                    let mut avec = vec![f.zero(); s.a.dim(da)];
                    avec[ai] = f.one();
                    let mut bvec = vec![f.zero(); s.b.dim(db)];
                    bvec[bi] = f.one();
                    let mut nvec = vec![f.zero(); n.dim(u)];
                    nvec[mi] = f.one();
                    let mut yvec = vec![f.zero(); y.module.dim(ydeg)];
                    yvec[xi] = f.one();
                    for h in 0..s.hopf.dim {
                        let y0 = y.comps[h][ydeg].apply(&yvec);
                        if y0.iter().all(|c| f.is_zero(c)) {
                            continue;
                        }
                        let ha = s.action.mats[h][da].apply(&avec);
                        let npart = n.act_vec(da, &ha, u, &nvec);
                        let mut bb = vec![f.zero(); s.b.dim(db)];
                        bb[bi] = f.one();
                        let ypart = y.module.act_vec(db, &bb, ydeg, &y0);
                        for (nk, nc) in npart.iter().enumerate() {
                            if f.is_zero(nc) {
                                continue;
                            }
                            for (yk, yc) in ypart.iter().enumerate() {
                                let v = f.mul(nc, yc);
                                if f.is_zero(&v) {
                                    continue;
                                }
                                let row = basis[mdeg + sdeg]
                                    .iter()
                                    .position(|&p| p == (u + da, nk, yk))
                                    .unwrap();
                                mat.set(row, col, f.add(mat.get(row, col), &v));
                            }
                        }
                    }
                }
                per_deg.push(mat);
            }
            per_idx.push(per_deg);
        }
        act.push(per_idx);
    }
    let module = GradedModule { field: f, side: Side::Right, bound, dims, labels, act };
    module.validate(&s.algebra)?;
    Ok(module)
}

/// Structure (1.6): `(a#b)(n (x) y) = sum (S^{-1}(b_{-1} y_{-1}) |> a) n
/// (x) b_0 y_0` with `N` a plain left A-module and `Y` a left B Hopf
/// module.
pub fn smash_module_16(
    s: &SmashAlgebra,
    n: &GradedModule,
    y: &HopfModule,
) -> Result<GradedModule> {
    let f = s.algebra.field;
    if n.side != Side::Left || y.module.side != Side::Left {
        return Err(Error::Input("structure (1.6) needs left modules".into()));
    }
    let bound = s.algebra.bound;
    let basis = tensor_dims(n, &y.module, bound);
    let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
    let labels: Vec<Vec<String>> = basis
        .iter()
        .enumerate()
        .map(|(e, list)| {
            list.iter()
                .map(|&(u, mi, xi)| format!("{}(x){}", n.labels[u][mi], y.module.labels[e - u][xi]))
                .collect()
        })
        .collect();
    let mut act = Vec::with_capacity(bound + 1);
    for sdeg in 0..=bound {
        let mut per_idx = Vec::with_capacity(s.algebra.dims[sdeg]);
        for si in 0..s.algebra.dims[sdeg] {
            let (da, ai, bi) = s.pairs[sdeg][si];
            let db = sdeg - da;
            let mut per_deg = Vec::new();
            for mdeg in 0..=(bound - sdeg) {
                let mut mat = Matrix::zero(f, dims[mdeg + sdeg], dims[mdeg]);
                for (col, &(u, mi, xi)) in basis[mdeg].iter().enumerate() {
                    let ydeg = mdeg - u;
                    let mut avec = vec![f.zero(); s.a.dim(da)];
                    avec[ai] = f.one();
                    let mut bvec = vec![f.zero(); s.b.dim(db)];
                    bvec[bi] = f.one();
                    let mut nvec = vec![f.zero(); n.dim(u)];
                    nvec[mi] = f.one();
                    let mut yvec = vec![f.zero(); y.module.dim(ydeg)];
                    yvec[xi] = f.one();
                    for p in 0..s.hopf.dim {
                        let b0 = s.coaction.comps[p][db].apply(&bvec);
                        if b0.iter().all(|c| f.is_zero(c)) {
                            continue;
                        }
                        for q in 0..s.hopf.dim {
                            let y0 = y.comps[q][ydeg].apply(&yvec);
                            if y0.iter().all(|c| f.is_zero(c)) {
                                continue;
                            }
                            let hprod = s.hopf.mul_vec(&s.hopf.basis_vec(p), &s.hopf.basis_vec(q));
                            let sh = s.hopf.antipode_inv_vec(&hprod);
                            let sa = s.action.act(&f, &sh, da, &avec);
                            let npart = n.act_vec(da, &sa, u, &nvec);
                            let ypart = y.module.act_vec(db, &b0, ydeg, &y0);
                            for (nk, nc) in npart.iter().enumerate() {
                                if f.is_zero(nc) {
                                    continue;
                                }
                                for (yk, yc) in ypart.iter().enumerate() {
                                    let v = f.mul(nc, yc);
                                    if f.is_zero(&v) {
                                        continue;
                                    }
                                    let row = basis[mdeg + sdeg]
                                        .iter()
                                        .position(|&t| t == (u + da, nk, yk))
                                        .unwrap();
                                    mat.set(row, col, f.add(mat.get(row, col), &v));
                                }
                            }
                        }
                    }
                }
                per_deg.push(mat);
            }
            per_idx.push(per_deg);
        }
        act.push(per_idx);
    }
    let module = GradedModule { field: f, side: Side::Left, bound, dims, labels, act };
    module.validate(&s.algebra)?;
    Ok(module)
}

/// An Ore extension `A[x; sigma, delta]` with `x` in degree 1 and
/// commutation rule `x a = sigma(a) x + delta(a)`.
///
/// `sigma` is given by generator images (degree-preserving), `delta` by
/// generator images one degree up; both are extended to all degrees and
/// validated (`sigma` an automorphism, `delta` a `sigma`-derivation).
pub struct OreExtension {
    pub algebra: GradedAlgebra,
    /// `basis[d]` lists `(x_power, a_index)`; the element is `a * x^n`.
    pub basis: Vec<Vec<(usize, usize)>>,
}

pub fn ore_extension(
    a: &PresentedAlgebra,
    sigma_gens: &[Vec<Scalar>],
    delta_gens: &[Vec<Scalar>],
    bound: usize,
) -> Result<OreExtension> {
    let f = a.presentation.field;
    let alg = &a.algebra;
    if bound > alg.bound {
        return Err(Error::Input("ore bound exceeds base realization bound".into()));
    }
    let ngens = a.presentation.generators.len();
    if sigma_gens.len() != ngens || delta_gens.len() != ngens {
        return Err(Error::Input("sigma/delta must be given on every generator".into()));
    }

    // Extend sigma and delta degreewise by induction on basis words.
    let mut sigma: Vec<Matrix> = Vec::with_capacity(bound + 1);
    let mut delta: Vec<Matrix> = Vec::with_capacity(bound); // delta_d: A_d -> A_{d+1}
    sigma.push(Matrix::identity(f, 1));
    for d in 1..=bound {
        let basis = a.basis_words(d);
        let mut sm = Matrix::zero(f, alg.dims[d], alg.dims[d]);
        for (bi, w) in basis.iter().enumerate() {
            let head = w[0];
            let hd = a.presentation.generators[head].1;
            let tail = w[1..].to_vec();
            let (td, tail_coords) = a.word_coords(&tail);
            let s_tail = sigma[td].apply(&tail_coords);
            let img = alg.mul_vec(hd, &sigma_gens[head], td, &s_tail);
            for (k, c) in img.iter().enumerate() {
                sm.set(k, bi, c.clone());
            }
        }
        sigma.push(sm);
    }
    for d in 0..bound {
        if d == 0 {
            delta.push(Matrix::zero(f, alg.dims[1], 1));
            continue;
        }
        let basis = a.basis_words(d);
        let mut dm = Matrix::zero(f, alg.dims[d + 1], alg.dims[d]);
        for (bi, w) in basis.iter().enumerate() {
            let head = w[0];
            let hd = a.presentation.generators[head].1;
            let tail = w[1..].to_vec();
            let (td, tail_coords) = a.word_coords(&tail);
            // delta(g t) = sigma(g) delta(t) + delta(g) t
            let mut img = vec![f.zero(); alg.dims[d + 1]];
            if td + 1 <= bound && td < delta.len() {
                let d_tail = delta[td].apply(&tail_coords);
                let t1 = alg.mul_vec(hd, &sigma_gens[head], td + 1, &d_tail);
                for (k, c) in t1.iter().enumerate() {
                    img[k] = f.add(&img[k], c);
                }
            }
            let t2 = alg.mul_vec(hd + 1, &delta_gens[head], td, &tail_coords);
            for (k, c) in t2.iter().enumerate() {
                img[k] = f.add(&img[k], c);
            }
            for (k, c) in img.iter().enumerate() {
                dm.set(k, bi, c.clone());
            }
        }
        delta.push(dm);
    }

    // Validate: sigma an automorphism, delta a sigma-derivation.
    for d in 1..=bound {
        if sigma[d].rank() != alg.dims[d] {
            return Err(Error::Input(format!("sigma is not invertible in degree {d}")));
        }
    }
    for d1 in 1..=bound {
        for d2 in 1..=(bound - d1) {
            for i in 0..alg.dims[d1] {
                for j in 0..alg.dims[d2] {
                    let mut ei = vec![f.zero(); alg.dims[d1]];
                    ei[i] = f.one();
                    let mut ej = vec![f.zero(); alg.dims[d2]];
                    ej[j] = f.one();
                    let prod = alg.mul_vec(d1, &ei, d2, &ej);
                    let lhs = sigma[d1 + d2].apply(&prod);
                    let rhs = alg.mul_vec(d1, &sigma[d1].apply(&ei), d2, &sigma[d2].apply(&ej));
                    if lhs != rhs {
                        return Err(Error::Input(format!(
                            "sigma is not multiplicative at degrees ({d1},{d2})"
                        )));
                    }
                    if d1 + d2 + 1 <= bound {
                        let dl = delta[d1 + d2].apply(&prod);
                        let mut dr =
                            alg.mul_vec(d1, &sigma[d1].apply(&ei), d2 + 1, &delta[d2].apply(&ej));
                        let t2 = alg.mul_vec(d1 + 1, &delta[d1].apply(&ei), d2, &ej);
                        for (k, c) in t2.iter().enumerate() {
                            dr[k] = f.add(&dr[k], c);
                        }
                        if dl != dr {
                            return Err(Error::Input(format!(
                                "delta is not a sigma-derivation at degrees ({d1},{d2})"
                            )));
                        }
                    }
                }
            }
        }
    }

    // Basis (x_power, a_index), x-power ascending.
    let mut basis: Vec<Vec<(usize, usize)>> = Vec::with_capacity(bound + 1);
    for d in 0..=bound {
        let mut list = Vec::new();
        for n in 0..=d {
            for ai in 0..alg.dims[d - n] {
                list.push((n, ai));
            }
        }
        basis.push(list);
    }
    let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
    let labels: Vec<Vec<String>> = (0..=bound)
        .map(|d| {
            basis[d]
                .iter()
                .map(|&(n, ai)| {
                    let al = &alg.labels[d - n][ai];
                    match n {
                        0 => al.clone(),
                        1 if al == "1" => "x".into(),
                        1 => format!("{al}*x"),
                        _ if al == "1" => format!("x^{n}"),
                        _ => format!("{al}*x^{n}"),
                    }
                })
                .collect()
        })
        .collect();

    // Elements of degree d are stored as one A-coordinate block per
    // x-power. Left multiplication by x: x (a x^n) = sigma(a) x^{n+1} +
    // delta(a) x^n.
    let x_mult = |elt: &[Vec<Scalar>], deg: usize| -> Vec<Vec<Scalar>> {
        // elt[n] has length dims A_{deg-n}; output degree deg+1
        let mut out: Vec<Vec<Scalar>> =
            (0..=(deg + 1)).map(|n| vec![f.zero(); alg.dims[deg + 1 - n]]).collect();
        for (n, block) in elt.iter().enumerate() {
            let ad = deg - n;
            let sb = sigma[ad].apply(block);
            for (k, c) in sb.iter().enumerate() {
                out[n + 1][k] = f.add(&out[n + 1][k], c);
            }
            if ad + 1 <= bound {
                let db = delta[ad].apply(block);
                for (k, c) in db.iter().enumerate() {
                    out[n][k] = f.add(&out[n][k], c);
                }
            }
        }
        out
    };

    let mut mult = Vec::with_capacity(bound + 1);
    for d1 in 0..=bound {
        let mut by_d2 = Vec::new();
        for d2 in 0..=bound {
            if d1 + d2 > bound {
                by_d2.push(Vec::new());
                continue;
            }
            let mut table = Vec::with_capacity(dims[d1]);
            for &(n1, ai1) in &basis[d1] {
                let ad1 = d1 - n1;
                let mut row = Vec::with_capacity(dims[d2]);
                for &(n2, ai2) in &basis[d2] {
                    let ad2 = d2 - n2;
                    // (a1 x^{n1})(a2 x^{n2}) = a1 (x^{n1} a2) x^{n2}
                    let mut elt: Vec<Vec<Scalar>> =
                        (0..=ad2).map(|n| vec![f.zero(); alg.dims[ad2 - n]]).collect();
                    elt[0][ai2] = f.one();
                    let mut deg = ad2;
                    for _ in 0..n1 {
                        elt = x_mult(&elt, deg);
                        deg += 1;
                    }
                    // multiply by a1 on the left, shift powers by n2
                    let mut out = vec![f.zero(); dims[d1 + d2]];
                    let mut a1 = vec![f.zero(); alg.dims[ad1]];
                    a1[ai1] = f.one();
                    for (n, block) in elt.iter().enumerate() {
                        let bd = deg - n;
                        let prod = alg.mul_vec(ad1, &a1, bd, block);
                        for (k, c) in prod.iter().enumerate() {
                            if f.is_zero(c) {
                                continue;
                            }
                            let pos = basis[d1 + d2]
                                .iter()
                                .position(|&t| t == (n + n2, k))
                                .unwrap();
                            out[pos] = f.add(&out[pos], c);
                        }
                    }
                    row.push(out);
                }
                table.push(row);
            }
            by_d2.push(table);
        }
        mult.push(by_d2);
    }

    let mut unit = vec![f.zero(); dims[0]];
    unit[0] = f.one();
    let algebra = GradedAlgebra { field: f, bound, dims, labels, unit, mult };
    algebra.validate()?;
    Ok(OreExtension { algebra, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::gralg::Presentation;

    fn one_var(field: Field, label: &str, bound: usize) -> PresentedAlgebra {
        PresentedAlgebra::build(
            Presentation {
                field,
                generators: vec![(label.to_string(), 1)],
                relations: vec![],
            },
            bound,
        )
        .unwrap()
    }

    fn quantum_plane_smash(field: Field, q: i64, order: usize, bound: usize) -> SmashAlgebra {
        // A = k[x] with g |> x = q x, B = k[y] with rho(y) = g (x) y.
        let h = HopfData::cyclic_group_algebra(field, order).unwrap();
        let a = one_var(field, "x", bound);
        let b = one_var(field, "y", bound);
        let mut gen_images = Vec::new();
        let mut pow = field.one();
        for _ in 0..order {
            gen_images.push(vec![vec![pow.clone()]]);
            pow = field.mul(&pow, &field.from_i64(q));
        }
        let action = ActionData::extend(&h, &a, &gen_images).unwrap();
        let mut gen_comps = vec![vec![vec![field.zero()]]; order];
        gen_comps[1 % order][0][0] = field.one();
        let coaction = CoactionData::extend(&h, &b, &gen_comps).unwrap();
        SmashAlgebra::build(a.algebra, action, b.algebra, coaction, h, bound).unwrap()
    }

    #[test]
    fn trivial_hopf_gives_tensor_product() {
        let f = Field::Rationals;
        let h = HopfData::trivial(f);
        let a = one_var(f, "x", 4).algebra;
        let b = one_var(f, "y", 4).algebra;
        let action = ActionData::trivial(&h, &a.dims);
        let coaction = CoactionData::trivial(&h, &b.dims);
        let s = SmashAlgebra::build(a, action, b, coaction, h, 4).unwrap();
        // k[x,y] dims
        assert_eq!(s.algebra.dims, vec![1, 2, 3, 4, 5]);
        // (1#y)(x#1) = x#y with no twist
        let ypos = s.pair_pos(1, 0, 0, 0);
        let xpos = s.pair_pos(1, 1, 0, 0);
        let prod = &s.algebra.mult[1][1][ypos][xpos];
        let xy = s.pair_pos(2, 1, 0, 0);
        assert_eq!(prod[xy], f.one());
        assert!(prod.iter().enumerate().all(|(k, c)| k == xy || f.is_zero(c)));
    }

    #[test]
    fn quantum_plane_at_minus_one() {
        let f = Field::prime(7).unwrap();
        let s = quantum_plane_smash(f, -1, 2, 4);
        assert_eq!(s.algebra.dims, vec![1, 2, 3, 4, 5]);
        // (1#y)(x#1) = -x#y
        let ypos = s.pair_pos(1, 0, 0, 0);
        let xpos = s.pair_pos(1, 1, 0, 0);
        let prod = &s.algebra.mult[1][1][ypos][xpos];
        let xy = s.pair_pos(2, 1, 0, 0);
        assert_eq!(prod[xy], f.from_i64(-1));
        s.twisted_tensor_check().unwrap();
        s.freeness_isomorphism().unwrap();
    }

    #[test]
    fn skew_group_algebra() {
        // A = k[x], B = H = kC2 in degree 0 with the regular coaction,
        // g |> x = -x.
        let f = Field::Rationals;
        let h = HopfData::cyclic_group_algebra(f, 2).unwrap();
        let a = one_var(f, "x", 3);
        let action = ActionData::extend(&h, &a, &[vec![vec![f.one()]], vec![vec![f.from_i64(-1)]]]).unwrap();
        let b = hopf_as_degree_zero_algebra(&h, 3);
        let coaction = CoactionData::regular(&h, 3);
        let s = SmashAlgebra::build(a.algebra, action, b, coaction, h, 3).unwrap();
        assert_eq!(s.algebra.dims, vec![2, 2, 2, 2]);
        // (1#g)(x#1) = -x#g
        let gpos = s.pair_pos(0, 0, 0, 1);
        let xpos = s.pair_pos(1, 1, 0, 0);
        let prod = &s.algebra.mult[0][1][gpos][xpos];
        let xg = s.pair_pos(1, 1, 0, 1);
        assert_eq!(prod[xg], f.from_i64(-1));
        assert!(prod.iter().enumerate().all(|(k, c)| k == xg || f.is_zero(c)));
        s.twisted_tensor_check().unwrap();
        s.freeness_isomorphism().unwrap();
    }

    #[test]
    fn smash_modules_validate_on_quantum_plane() {
        let f = Field::prime(7).unwrap();
        let s = quantum_plane_smash(f, -1, 2, 3);
        let eps = [f.one()];
        // (1.4) trivial (x) trivial
        let m = EquivariantModule::trivial(&s.a, &s.hopf, Side::Right, &eps);
        let x = HopfModule::trivial(&s.b, &s.hopf, Side::Right, &eps);
        let mx = smash_module_right(&s, &m, &x).unwrap();
        assert_eq!(mx.dims[0], 1);
        // (1.3)
        let ml = EquivariantModule::trivial(&s.a, &s.hopf, Side::Left, &eps);
        let xl = GradedModule::trivial(&s.b, Side::Left, &eps);
        smash_module_left(&s, &ml, &xl).unwrap();
        // (1.5)
        let n = GradedModule::regular(&s.a, Side::Right);
        let yco = {
            // regular module of B = k[y] with its coaction
            HopfModule {
                module: GradedModule::regular(&s.b, Side::Right),
                comps: s.coaction.comps.clone(),
                is_regular: true,
            }
        };
        smash_module_15(&s, &n, &yco).unwrap();
        // (1.6)
        let nl = GradedModule::regular(&s.a, Side::Left);
        let yl = HopfModule {
            module: GradedModule::regular(&s.b, Side::Left),
            comps: s.coaction.comps.clone(),
            is_regular: true,
        };
        smash_module_16(&s, &nl, &yl).unwrap();
    }

    #[test]
    fn smash_module_right_with_regular_hopf_module() {
        // M = k, X = B regular over the skew-group datum: dims follow B.
        let f = Field::Rationals;
        let h = HopfData::cyclic_group_algebra(f, 2).unwrap();
        let a = one_var(f, "x", 3);
        let action = ActionData::extend(&h, &a, &[vec![vec![f.one()]], vec![vec![f.from_i64(-1)]]]).unwrap();
        let b = hopf_as_degree_zero_algebra(&h, 3);
        let coaction = CoactionData::regular(&h, 3);
        let s = SmashAlgebra::build(a.algebra, action, b, coaction, h.clone(), 3).unwrap();
        let m = EquivariantModule::trivial(&s.a, &s.hopf, Side::Right, &[f.one()]);
        let x = HopfModule::regular(&s.b, &s.coaction, Side::Right);
        let mx = smash_module_right(&s, &m, &x).unwrap();
        assert_eq!(mx.dims[0], 2);
    }

    #[test]
    fn ore_commutative_case() {
        let f = Field::Rationals;
        let a = one_var(f, "u", 4);
        let ore = ore_extension(&a, &[vec![f.one()]], &[vec![f.zero()]], 4).unwrap();
        assert_eq!(ore.algebra.dims, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn ore_quantum_plane_q2() {
        let f = Field::prime(7).unwrap();
        let a = one_var(f, "u", 4);
        let sigma = vec![vec![f.from_i64(2)]];
        let delta = vec![vec![f.zero()]];
        let ore = ore_extension(&a, &sigma, &delta, 4).unwrap();
        // x u = 2 u x: basis (power, a index); x is (1, 0) in degree 1,
        // u is (0, 0) in degree 1.
        let xpos = ore.basis[1].iter().position(|&t| t == (1, 0)).unwrap();
        let upos = ore.basis[1].iter().position(|&t| t == (0, 0)).unwrap();
        let prod = &ore.algebra.mult[1][1][xpos][upos];
        let ux = ore.basis[2].iter().position(|&t| t == (1, 0)).unwrap();
        assert_eq!(prod[ux], f.from_i64(2));
    }

    #[test]
    fn ore_jordan_plane_relation() {
        // sigma = id, delta(u) = u^2: x u - u x = u^2.
        let f = Field::Rationals;
        let a = one_var(f, "u", 4);
        let delta = vec![vec![f.one()]];
        let ore = ore_extension(&a, &[vec![f.one()]], &delta, 4).unwrap();
        let xpos = ore.basis[1].iter().position(|&t| t == (1, 0)).unwrap();
        let upos = ore.basis[1].iter().position(|&t| t == (0, 0)).unwrap();
        let xu = &ore.algebra.mult[1][1][xpos][upos];
        let ux = &ore.algebra.mult[1][1][upos][xpos];
        let diff: Vec<Scalar> = xu.iter().zip(ux).map(|(p, q)| f.sub(p, q)).collect();
        let u2pos = ore.basis[2].iter().position(|&t| t == (0, 0)).unwrap();
        assert_eq!(diff[u2pos], f.one());
        assert!(diff.iter().enumerate().all(|(k, c)| k == u2pos || f.is_zero(c)));
    }

    #[test]
    fn ore_matches_smash_cross_check() {
        // sigma(u) = 2u over F7 has order 3; the smash k[u] # k[x] with
        // H = kC3, g |> u = 2u, rho(x) = g (x) x gives the same algebra.
        let f = Field::prime(7).unwrap();
        let a = one_var(f, "u", 4);
        let ore = ore_extension(&a, &[vec![f.from_i64(2)]], &[vec![f.zero()]], 4).unwrap();
        let h = HopfData::cyclic_group_algebra(f, 3).unwrap();
        let gen_images = vec![
            vec![vec![f.one()]],
            vec![vec![f.from_i64(2)]],
            vec![vec![f.from_i64(4)]],
        ];
        let action = ActionData::extend(&h, &a, &gen_images).unwrap();
        let b = one_var(f, "x", 4);
        let mut gen_comps = vec![vec![vec![f.zero()]]; 3];
        gen_comps[1][0][0] = f.one();
        let coaction = CoactionData::extend(&h, &b, &gen_comps).unwrap();
        let s = SmashAlgebra::build(a.algebra.clone(), action, b.algebra, coaction, h, 4).unwrap();
        // Identify ore basis (n, ai) at degree d with smash pair (d-n, ai, 0).
        for d1 in 0..=4usize {
            for d2 in 0..=(4 - d1) {
                for (i1, &(n1, a1)) in ore.basis[d1].iter().enumerate() {
                    for (i2, &(n2, a2)) in ore.basis[d2].iter().enumerate() {
                        let s1 = s.pair_pos(d1, d1 - n1, a1, 0);
                        let s2 = s.pair_pos(d2, d2 - n2, a2, 0);
                        let op = &ore.algebra.mult[d1][d2][i1][i2];
                        let sp = &s.algebra.mult[d1][d2][s1][s2];
                        for (k, &(n, ai)) in ore.basis[d1 + d2].iter().enumerate() {
                            let sk = s.pair_pos(d1 + d2, d1 + d2 - n, ai, 0);
                            assert_eq!(op[k], sp[sk], "mismatch at ({d1},{d2},{i1},{i2})");
                        }
                    }
                }
            }
        }
    }
}
