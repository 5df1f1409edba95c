//! Free resolutions of graded right modules: minimal resolutions over
//! connected algebras, equivariant refinements, comodule resolutions,
//! total resolutions of smash-product modules, and the bar resolution.
//!
//! A level of a resolution is a free right module `F_n = (+)_i g_i A`
//! described by its generator degrees. Differentials are stored on
//! generators only: `d_cols[i]` is the image of `g_i` in the free basis
//! of level `n-1` at internal degree `deg g_i`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::gralg::GradedAlgebra;
use crate::matrix::{Matrix, Span};
use crate::hopf::{ActionData, CoactionData, HopfData};
use crate::module::{EquivariantModule, GradedModule, HopfModule, Side};

/// One free level of a resolution.
#[derive(Clone, Debug)]
pub struct FreeLevel {
    pub gen_degrees: Vec<usize>,
    pub gen_labels: Vec<String>,
    /// Image of each generator in the free basis of the previous level
    /// at the generator's internal degree (empty at level 0).
    pub d_cols: Vec<Vec<Scalar>>,
    /// Generator-level H-action matrices, one per Hopf basis element;
    /// entries mix generators of equal degree only.
    pub hact: Option<Vec<Matrix>>,
    /// Generator-level H-coaction component matrices, one per Hopf basis
    /// element.
    pub coact: Option<Vec<Matrix>>,
}

/// A finite free resolution truncated at homological degree `n_bound`
/// and internal degree `d_bound`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub field: Field,
    pub levels: Vec<FreeLevel>,
    /// Images of the level-0 generators in the module (coordinates in
    /// `M` at the generator's degree).
    pub aug: Vec<Vec<Scalar>>,
    pub minimal: bool,
    /// True when some kernel vanished in every internal degree within
    /// the bound, so the resolution is complete as written.
    pub terminated: bool,
    pub n_bound: usize,
    pub d_bound: usize,
}

/// Basis of the free module on generators of the given degrees at
/// internal degree `e`: pairs `(generator index, algebra basis index)`.
pub fn free_basis(gen_degrees: &[usize], alg: &GradedAlgebra, e: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &g) in gen_degrees.iter().enumerate() {
        if g > e || e - g > alg.bound {
            continue;
        }
        for a in 0..alg.dim(e - g) {
            out.push((i, a));
        }
    }
    out
}

pub fn free_dim(gen_degrees: &[usize], alg: &GradedAlgebra, e: usize) -> usize {
    free_basis(gen_degrees, alg, e).len()
}

/// Right-multiplies a free-module vector at internal degree `e1` by the
/// algebra basis element `(d2, aidx)`.
pub fn free_mul(
    gen_degrees: &[usize],
    alg: &GradedAlgebra,
    e1: usize,
    vec: &[Scalar],
    d2: usize,
    aidx: usize,
) -> Vec<Scalar> {
    let f = alg.field;
    let basis1 = free_basis(gen_degrees, alg, e1);
    let basis2 = free_basis(gen_degrees, alg, e1 + d2);
    let mut pos: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (k, &p) in basis2.iter().enumerate() {
        pos.insert(p, k);
    }
    let mut out = vec![f.zero(); basis2.len()];
    for (k, c) in vec.iter().enumerate() {
        if f.is_zero(c) {
            continue;
        }
        let (i, a1) = basis1[k];
        let da = e1 - gen_degrees[i];
        let prod = &alg.mult[da][d2][a1][aidx];
        for (a2, pc) in prod.iter().enumerate() {
            if f.is_zero(pc) {
                continue;
            }
            let t = pos[&(i, a2)];
            out[t] = f.add(&out[t], &f.mul(c, pc));
        }
    }
    out
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.levels.len() - 1
    }

    /// The matrix of `d_n : F_n(e) -> F_{n-1}(e)` for `n >= 1`.
    pub fn d_matrix(&self, alg: &GradedAlgebra, n: usize, e: usize) -> Matrix {
        let f = self.field;
        let prev = &self.levels[n - 1].gen_degrees;
        let cur = &self.levels[n];
        let basis = free_basis(&cur.gen_degrees, alg, e);
        let mut m = Matrix::zero(f, free_dim(prev, alg, e), basis.len());
        for (col, &(i, aidx)) in basis.iter().enumerate() {
            let g = cur.gen_degrees[i];
            let img = free_mul(prev, alg, g, &cur.d_cols[i], e - g, aidx);
            for (row, c) in img.iter().enumerate() {
                m.set(row, col, c.clone());
            }
        }
        m
    }

    /// The matrix of the augmentation `F_0(e) -> M_e`.
    pub fn aug_matrix(&self, alg: &GradedAlgebra, module: &GradedModule, e: usize) -> Matrix {
        let f = self.field;
        let gens = &self.levels[0].gen_degrees;
        let basis = free_basis(gens, alg, e);
        let mut m = Matrix::zero(f, module.dim(e), basis.len());
        for (col, &(i, aidx)) in basis.iter().enumerate() {
            let g = gens[i];
            let mut avec = vec![f.zero(); alg.dim(e - g)];
            avec[aidx] = f.one();
            let img = module.act_vec(e - g, &avec, g, &self.aug[i]);
            for (row, c) in img.iter().enumerate() {
                m.set(row, col, c.clone());
            }
        }
        m
    }

    /// Checks `d^2 = 0`, `aug . d_1 = 0`, exactness at every interior
    /// level, and the Euler-characteristic identity in every internal
    /// degree where all contributing levels are present.
    pub fn validate(&self, alg: &GradedAlgebra, module: &GradedModule) -> Result<()> {
        let f = self.field;
        for e in 0..=self.d_bound {
            let mut mats: Vec<Matrix> = Vec::with_capacity(self.levels.len());
            mats.push(self.aug_matrix(alg, module, e));
            for n in 1..self.levels.len() {
                mats.push(self.d_matrix(alg, n, e));
            }
            for n in 1..mats.len() {
                let comp = mats[n - 1].mul(&mats[n]);
                if !comp.is_zero() {
                    return Err(Error::Math(format!(
                        "d^2 != 0 at level {n}, internal degree {e}"
                    )));
                }
            }
            // surjectivity of the augmentation
            if mats[0].rank() != module.dim(e) {
                return Err(Error::Math(format!(
                    "augmentation is not surjective in degree {e}"
                )));
            }
            // exactness at interior levels
            for n in 0..mats.len() - 1 {
                let cols = mats[n].cols;
                let ker = cols - mats[n].rank();
                if ker != mats[n + 1].rank() {
                    return Err(Error::Math(format!(
                        "not exact at level {n}, internal degree {e}"
                    )));
                }
            }
            // exactness at the last level when terminated
            if self.terminated {
                let last = mats.len() - 1;
                if mats[last].cols > mats[last].rank() {
                    return Err(Error::Math(format!(
                        "kernel remains at final level, internal degree {e}"
                    )));
                }
            }
            // Euler characteristic
            let complete = self.terminated || e < self.levels.len();
            if complete {
                let mut chi: i64 = 0;
                for (n, level) in self.levels.iter().enumerate() {
                    let d = free_dim(&level.gen_degrees, alg, e) as i64;
                    chi += if n % 2 == 0 { d } else { -d };
                }
                if chi != module.dim(e) as i64 {
                    return Err(Error::Math(format!(
                        "Euler characteristic fails in degree {e}: {chi} != {}",
                        module.dim(e)
                    )));
                }
            }
            let _ = f;
        }
        Ok(())
    }
}

/// Minimal free resolution of a right module over a connected graded
/// algebra, truncated at `(n_bound, d_bound)`. Levels `0..=n_bound+1`
/// are built so that Ext differentials out of level `n_bound` exist.
pub fn minimal_resolution(
    alg: &GradedAlgebra,
    module: &GradedModule,
    n_bound: usize,
    d_bound: usize,
) -> Result<Resolution> {
    let f = alg.field;
    if !alg.is_connected() {
        return Err(Error::Input(
            "minimal resolutions need a connected graded algebra".into(),
        ));
    }
    if module.side != Side::Right {
        return Err(Error::Input("minimal_resolution expects a right module".into()));
    }
    if d_bound > alg.bound || d_bound > module.bound {
        return Err(Error::Input("degree bound exceeds realization bound".into()));
    }

    // Level 0: generators of M, a greedy complement of (M A_+)_e.
    let mut gen_degrees = Vec::new();
    let mut gen_labels = Vec::new();
    let mut aug: Vec<Vec<Scalar>> = Vec::new();
    for e in 0..=d_bound {
        let mut span = Span::empty(f, module.dim(e));
        for j in 1..=e {
            for a in 0..alg.dim(j) {
                let mut avec = vec![f.zero(); alg.dim(j)];
                avec[a] = f.one();
                for mi in 0..module.dim(e - j) {
                    let mut mvec = vec![f.zero(); module.dim(e - j)];
                    mvec[mi] = f.one();
                    span.add(&module.act_vec(j, &avec, e - j, &mvec));
                }
            }
        }
        for mi in 0..module.dim(e) {
            let mut v = vec![f.zero(); module.dim(e)];
            v[mi] = f.one();
            if !span.contains(&v) {
                span.add(&v);
                gen_degrees.push(e);
                gen_labels.push(format!("e0_{}(deg {e})", gen_degrees.len() - 1));
                aug.push(v);
            }
        }
    }
    let levels = vec![FreeLevel {
        gen_degrees,
        gen_labels,
        d_cols: Vec::new(),
        hact: None,
        coact: None,
    }];
    let mut terminated = false;

    let mut res = Resolution {
        field: f,
        levels,
        aug,
        minimal: true,
        terminated: false,
        n_bound,
        d_bound,
    };

    for n in 1..=(n_bound + 1) {
        // kernel of the previous map, degree by degree
        let mut kernels: Vec<Vec<Vec<Scalar>>> = Vec::with_capacity(d_bound + 1);
        let mut any = false;
        for e in 0..=d_bound {
            let m = if n == 1 {
                res.aug_matrix(alg, module, e)
            } else {
                res.d_matrix(alg, n - 1, e)
            };
            let ker = m.kernel_basis();
            if !ker.is_empty() {
                any = true;
            }
            kernels.push(ker);
        }
        if !any {
            terminated = true;
            break;
        }
        // minimal generators of the kernel
        let prev_gens = res.levels[n - 1].gen_degrees.clone();
        let mut gen_degrees = Vec::new();
        let mut gen_labels = Vec::new();
        let mut d_cols = Vec::new();
        for e in 0..=d_bound {
            let dim = free_dim(&prev_gens, alg, e);
            let mut span = Span::empty(f, dim);
            for j in 1..=e {
                for kv in &kernels[e - j] {
                    for a in 0..alg.dim(j) {
                        span.add(&free_mul(&prev_gens, alg, e - j, kv, j, a));
                    }
                }
            }
            for kv in &kernels[e] {
                if !span.contains(kv) {
                    span.add(kv);
                    gen_degrees.push(e);
                    gen_labels.push(format!("e{n}_{}(deg {e})", gen_degrees.len() - 1));
                    d_cols.push(kv.clone());
                }
            }
        }
        res.levels.push(FreeLevel {
            gen_degrees,
            gen_labels,
            d_cols,
            hact: None,
            coact: None,
        });
    }
    res.terminated = terminated;
    Ok(res)
}

/// Full H-action matrix of the Hopf basis element `h` on the free
/// module of a level at internal degree `e`, assembled from the
/// generator-level matrices and the action on the algebra via
/// `h |> (g a) = sum (h_1 |> g)(h_2 |> a)`.
pub fn free_h_action(
    level: &FreeLevel,
    alg: &GradedAlgebra,
    hopf: &HopfData,
    action: &ActionData,
    h: usize,
    e: usize,
) -> Matrix {
    let f = alg.field;
    let hact = level.hact.as_ref().expect("level carries no H-action");
    let basis = free_basis(&level.gen_degrees, alg, e);
    let mut pos: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (k, &p) in basis.iter().enumerate() {
        pos.insert(p, k);
    }
    let mut m = Matrix::zero(f, basis.len(), basis.len());
    for (col, &(i, aidx)) in basis.iter().enumerate() {
        let da = e - level.gen_degrees[i];
        for h1 in 0..hopf.dim {
            for h2 in 0..hopf.dim {
                let c = &hopf.comult[h][h1][h2];
                if f.is_zero(c) {
                    continue;
                }
                let gcol = hact[h1].col(i);
                let mut avec = vec![f.zero(); alg.dim(da)];
                avec[aidx] = f.one();
                let acts = action.mats[h2][da].apply(&avec);
                for (gi, gc) in gcol.iter().enumerate() {
                    if f.is_zero(gc) {
                        continue;
                    }
                    for (ai, ac) in acts.iter().enumerate() {
                        let v = f.mul(c, &f.mul(gc, ac));
                        if f.is_zero(&v) {
                            continue;
                        }
                        let row = pos[&(gi, ai)];
                        m.set(row, col, f.add(m.get(row, col), &v));
                    }
                }
            }
        }
    }
    m
}

/// Full coaction component matrix `C_h` on the free module of a level at
/// internal degree `e`, from generator-level components and the
/// coaction on the algebra via `C_h(g b) = sum mult[p][q][h] C_p(g) C_q(b)`.
pub fn free_h_coaction(
    level: &FreeLevel,
    alg: &GradedAlgebra,
    hopf: &HopfData,
    coaction: &CoactionData,
    h: usize,
    e: usize,
) -> Matrix {
    let f = alg.field;
    let coact = level.coact.as_ref().expect("level carries no coaction");
    let basis = free_basis(&level.gen_degrees, alg, e);
    let mut pos: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (k, &p) in basis.iter().enumerate() {
        pos.insert(p, k);
    }
    let mut m = Matrix::zero(f, basis.len(), basis.len());
    for (col, &(i, aidx)) in basis.iter().enumerate() {
        let db = e - level.gen_degrees[i];
        for p in 0..hopf.dim {
            for q in 0..hopf.dim {
                let c = &hopf.mult[p][q][h];
                if f.is_zero(c) {
                    continue;
                }
                let gcol = coact[p].col(i);
                let mut bvec = vec![f.zero(); alg.dim(db)];
                bvec[aidx] = f.one();
                let cb = coaction.comps[q][db].apply(&bvec);
                for (gi, gc) in gcol.iter().enumerate() {
                    if f.is_zero(gc) {
                        continue;
                    }
                    for (bi, bc) in cb.iter().enumerate() {
                        let v = f.mul(c, &f.mul(gc, bc));
                        if f.is_zero(&v) {
                            continue;
                        }
                        let row = pos[&(gi, bi)];
                        m.set(row, col, f.add(m.get(row, col), &v));
                    }
                }
            }
        }
    }
    m
}

/// Columns of the differential restricted to the generator span
/// (basis entries `(j, unit)` with `gen_degrees[j] == e`), along with
/// the generator indices of those columns.
fn gen_columns(res: &Resolution, alg: &GradedAlgebra, n: usize, e: usize) -> (Matrix, Vec<usize>) {
    let f = res.field;
    let level = &res.levels[n];
    let basis = free_basis(&level.gen_degrees, alg, e);
    let full = res.d_matrix(alg, n, e);
    let mut gens = Vec::new();
    let mut cols = Vec::new();
    for (k, &(i, _)) in basis.iter().enumerate() {
        if level.gen_degrees[i] == e {
            gens.push(i);
            cols.push(full.col(k));
        }
    }
    (Matrix::from_cols(f, full.rows, &cols), gens)
}

/// Refines a minimal resolution of an equivariant module with
/// generator-level H-action matrices so every differential and the
/// augmentation are H-equivariant.
pub fn equivariant_module_resolution(
    alg: &GradedAlgebra,
    hopf: &HopfData,
    action: &ActionData,
    module: &EquivariantModule,
    n_bound: usize,
    d_bound: usize,
) -> Result<Resolution> {
    let f = alg.field;
    let mut res = minimal_resolution(alg, &module.module, n_bound, d_bound)?;
    // Level 0: solve h |>_M aug(g_i) = sum_j c_j aug(g_j) over
    // generators of the same degree.
    let ngen0 = res.levels[0].gen_degrees.len();
    let mut hact0: Vec<Matrix> = (0..hopf.dim).map(|_| Matrix::zero(f, ngen0, ngen0)).collect();
    for h in 0..hopf.dim {
        for i in 0..ngen0 {
            let e = res.levels[0].gen_degrees[i];
            let rhs = module.h_act(&f, &hopf.basis_vec(h), e, &res.aug[i]);
            let peers: Vec<usize> = (0..ngen0)
                .filter(|&j| res.levels[0].gen_degrees[j] == e)
                .collect();
            let cols: Vec<Vec<Scalar>> = peers.iter().map(|&j| res.aug[j].clone()).collect();
            let a = Matrix::from_cols(f, module.module.dim(e), &cols);
            let sol = a.solve(&rhs).ok_or_else(|| {
                Error::Math("equivariant lifting failed at level 0".into())
            })?;
            for (t, &j) in peers.iter().enumerate() {
                hact0[h].set(j, i, sol[t].clone());
            }
        }
    }
    res.levels[0].hact = Some(hact0);
    // Higher levels: solve d(h |> g_i) = h |> (d g_i) with the unknown
    // in the generator span.
    for n in 1..res.levels.len() {
        let ngen = res.levels[n].gen_degrees.len();
        let mut hact: Vec<Matrix> = (0..hopf.dim).map(|_| Matrix::zero(f, ngen, ngen)).collect();
        for i in 0..ngen {
            let e = res.levels[n].gen_degrees[i];
            let (gencols, gens) = gen_columns(&res, alg, n, e);
            for h in 0..hopf.dim {
                let below = free_h_action(&res.levels[n - 1], alg, hopf, action, h, e);
                let rhs = below.apply(&res.levels[n].d_cols[i]);
                let sol = gencols.solve(&rhs).ok_or_else(|| {
                    Error::Math(format!("equivariant lifting failed at level {n}"))
                })?;
                for (t, &j) in gens.iter().enumerate() {
                    hact[h].set(j, i, sol[t].clone());
                }
            }
        }
        res.levels[n].hact = Some(hact);
    }
    validate_level_h_axioms(&res, hopf)?;
    Ok(res)
}

fn validate_level_h_axioms(res: &Resolution, hopf: &HopfData) -> Result<()> {
    let f = res.field;
    for (n, level) in res.levels.iter().enumerate() {
        let hact = level.hact.as_ref().unwrap();
        let ngen = level.gen_degrees.len();
        // unit acts as identity
        let mut unit_mat = Matrix::zero(f, ngen, ngen);
        for (h, c) in hopf.unit.iter().enumerate() {
            unit_mat = unit_mat.add(&hact[h].scale(c));
        }
        if unit_mat != Matrix::identity(f, ngen) {
            return Err(Error::Math(format!("H-unit does not act as identity at level {n}")));
        }
        // (e_p e_q) |> g = e_p |> (e_q |> g)
        for p in 0..hopf.dim {
            for q in 0..hopf.dim {
                let mut lhs = Matrix::zero(f, ngen, ngen);
                for (k, c) in hopf.mult[p][q].iter().enumerate() {
                    if !f.is_zero(c) {
                        lhs = lhs.add(&hact[k].scale(c));
                    }
                }
                let rhs = hact[p].mul(&hact[q]);
                if lhs != rhs {
                    return Err(Error::Math(format!(
                        "H-action is not multiplicative at level {n}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Resolution of a Hopf module over the comodule-side algebra with
/// generator-level coaction components.
///
/// For a connected algebra this is the minimal resolution refined with
/// coaction data; for a non-connected algebra only the regular Hopf
/// module is supported, which is already free (length 0).
pub fn equivariant_comodule_resolution(
    alg: &GradedAlgebra,
    hopf: &HopfData,
    coaction: &CoactionData,
    x: &HopfModule,
    n_bound: usize,
    d_bound: usize,
) -> Result<Resolution> {
    let f = alg.field;
    if !alg.is_connected() {
        if !x.is_regular {
            return Err(Error::Input(
                "comodule resolutions over non-connected algebras support only the regular module".into(),
            ));
        }
        // X = B is free of rank one on a trivial-comodule generator.
        let ngen = 1;
        let mut coact: Vec<Matrix> = Vec::with_capacity(hopf.dim);
        for h in 0..hopf.dim {
            let mut m = Matrix::zero(f, ngen, ngen);
            m.set(0, 0, hopf.unit[h].clone());
            coact.push(m);
        }
        let mut aug0 = vec![f.zero(); x.module.dim(0)];
        for (k, c) in alg.unit.iter().enumerate() {
            aug0[k] = c.clone();
        }
        let res = Resolution {
            field: f,
            levels: vec![FreeLevel {
                gen_degrees: vec![0],
                gen_labels: vec!["e0_0(deg 0)".into()],
                d_cols: Vec::new(),
                hact: None,
                coact: Some(coact),
            }],
            aug: vec![aug0],
            minimal: true,
            terminated: true,
            n_bound,
            d_bound,
        };
        res.validate(alg, &x.module)?;
        return Ok(res);
    }
    let mut res = minimal_resolution(alg, &x.module, n_bound, d_bound)?;
    // Level 0: solve C_h^X(aug(g_i)) = sum_j c_j aug(g_j).
    let ngen0 = res.levels[0].gen_degrees.len();
    let mut coact0: Vec<Matrix> = (0..hopf.dim).map(|_| Matrix::zero(f, ngen0, ngen0)).collect();
    for h in 0..hopf.dim {
        for i in 0..ngen0 {
            let e = res.levels[0].gen_degrees[i];
            let rhs = x.comps[h][e].apply(&res.aug[i]);
            let peers: Vec<usize> = (0..ngen0)
                .filter(|&j| res.levels[0].gen_degrees[j] == e)
                .collect();
            let cols: Vec<Vec<Scalar>> = peers.iter().map(|&j| res.aug[j].clone()).collect();
            let a = Matrix::from_cols(f, x.module.dim(e), &cols);
            let sol = a.solve(&rhs).ok_or_else(|| {
                Error::Math(
                    "comodule generator coaction leaves the generator span at level 0".into(),
                )
            })?;
            for (t, &j) in peers.iter().enumerate() {
                coact0[h].set(j, i, sol[t].clone());
            }
        }
    }
    res.levels[0].coact = Some(coact0);
    for n in 1..res.levels.len() {
        let ngen = res.levels[n].gen_degrees.len();
        let mut coact: Vec<Matrix> = (0..hopf.dim).map(|_| Matrix::zero(f, ngen, ngen)).collect();
        for i in 0..ngen {
            let e = res.levels[n].gen_degrees[i];
            let (gencols, gens) = gen_columns(&res, alg, n, e);
            for h in 0..hopf.dim {
                let below = free_h_coaction(&res.levels[n - 1], alg, hopf, coaction, h, e);
                let rhs = below.apply(&res.levels[n].d_cols[i]);
                let sol = gencols.solve(&rhs).ok_or_else(|| {
                    Error::Math(format!(
                        "comodule generator coaction leaves the generator span at level {n}"
                    ))
                })?;
                for (t, &j) in gens.iter().enumerate() {
                    coact[h].set(j, i, sol[t].clone());
                }
            }
        }
        res.levels[n].coact = Some(coact);
    }
    validate_level_coaction_axioms(&res, hopf)?;
    Ok(res)
}

fn validate_level_coaction_axioms(res: &Resolution, hopf: &HopfData) -> Result<()> {
    let f = res.field;
    for (n, level) in res.levels.iter().enumerate() {
        let coact = level.coact.as_ref().unwrap();
        let ngen = level.gen_degrees.len();
        // counit law: sum_h counit[h] C_h = id
        let mut sum = Matrix::zero(f, ngen, ngen);
        for h in 0..hopf.dim {
            sum = sum.add(&coact[h].scale(&hopf.counit[h]));
        }
        if sum != Matrix::identity(f, ngen) {
            return Err(Error::Math(format!("coaction counit law fails at level {n}")));
        }
        // coassociativity: sum_h comult[h][i][j] C_h = C_j . C_i
        for i in 0..hopf.dim {
            for j in 0..hopf.dim {
                let mut lhs = Matrix::zero(f, ngen, ngen);
                for h in 0..hopf.dim {
                    let c = &hopf.comult[h][i][j];
                    if !f.is_zero(c) {
                        lhs = lhs.add(&coact[h].scale(c));
                    }
                }
                let rhs = coact[j].mul(&coact[i]);
                if lhs != rhs {
                    return Err(Error::Math(format!(
                        "coaction coassociativity fails at level {n}"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// A total resolution of a smash-product module, with block bookkeeping
/// identifying each generator with a pair of factor generators.
#[derive(Clone, Debug)]
pub struct TotalResolution {
    pub resolution: Resolution,
    /// Per level, per generator: `(p, q, i, j)` meaning factor
    /// generators `w_i` of level `p` and `v_j` of level `q`.
    pub blocks: Vec<Vec<(usize, usize, usize, usize)>>,
}

/// Tensor basis of the block `(p, q)` at internal degree `e`: entries
/// `(u, ka, kb)` indexing `F^A_p(u) (x) F^B_q(e-u)`.
pub fn block_tensor_basis(
    gens_a: &[usize],
    gens_b: &[usize],
    a: &GradedAlgebra,
    b: &GradedAlgebra,
    e: usize,
) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for u in 0..=e {
        let na = free_dim(gens_a, a, u);
        let nb = free_dim(gens_b, b, e - u);
        for ka in 0..na {
            for kb in 0..nb {
                out.push((u, ka, kb));
            }
        }
    }
    out
}

/// The freeness matrix of a block: columns are free smash-module
/// coordinates `((i,j), s)` in block-generator order, rows the tensor
/// basis, entries the expansion of `(w_i (x) v_j)(a # b)`.
pub fn block_phi(
    s: &crate::smash::SmashAlgebra,
    level_a: &FreeLevel,
    level_b: &FreeLevel,
    block_gens: &[(usize, usize)],
    e: usize,
) -> Matrix {
    let f = s.algebra.field;
    let tb = block_tensor_basis(&level_a.gen_degrees, &level_b.gen_degrees, &s.a, &s.b, e);
    let mut tpos: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for (k, &p) in tb.iter().enumerate() {
        tpos.insert(p, k);
    }
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for &(i, j) in block_gens {
        let g = level_a.gen_degrees[i] + level_b.gen_degrees[j];
        for &(da, ai, bi) in &s.pairs[e - g] {
            let db = e - g - da;
            let ua = level_a.gen_degrees[i] + da;
            // w_i . a  is the free basis element (i, ai) at degree ua
            let fa_basis = free_basis(&level_a.gen_degrees, &s.a, ua);
            let wa_pos = fa_basis.iter().position(|&t| t == (i, ai)).unwrap();
            let mut col = vec![f.zero(); tb.len()];
            for h in 0..s.hopf.dim {
                // C_h(b) component of the coaction on the chosen b
                let mut bvec = vec![f.zero(); s.b.dim(db)];
                bvec[bi] = f.one();
                let chb = s.coaction.comps[h][db].apply(&bvec);
                if chb.iter().all(|c| f.is_zero(c)) {
                    continue;
                }
                // S^{-1}(e_h) |> (w_i a) in F^A_p(ua)
                let sh = s.hopf.antipode_inv_vec(&s.hopf.basis_vec(h));
                let mut awa = vec![f.zero(); fa_basis.len()];
                for (k, c) in sh.iter().enumerate() {
                    if f.is_zero(c) {
                        continue;
                    }
                    let mat = free_h_action(level_a, &s.a, &s.hopf, &s.action, k, ua);
                    let mcol = mat.col(wa_pos);
                    for (t, mc) in mcol.iter().enumerate() {
                        awa[t] = f.add(&awa[t], &f.mul(c, mc));
                    }
                }
                // v_j . C_h(b) in F^B_q(deg v_j + db)
                let vb_deg = level_b.gen_degrees[j] + db;
                let fb_basis = free_basis(&level_b.gen_degrees, &s.b, vb_deg);
                let mut vcb = vec![f.zero(); fb_basis.len()];
                for (bk, bc) in chb.iter().enumerate() {
                    if f.is_zero(bc) {
                        continue;
                    }
                    let t = fb_basis.iter().position(|&x| x == (j, bk)).unwrap();
                    vcb[t] = f.add(&vcb[t], bc);
                }
                for (ta, ca) in awa.iter().enumerate() {
                    if f.is_zero(ca) {
                        continue;
                    }
                    for (tbk, cb) in vcb.iter().enumerate() {
                        let v = f.mul(ca, cb);
                        if f.is_zero(&v) {
                            continue;
                        }
                        let row = tpos[&(ua, ta, tbk)];
                        col[row] = f.add(&col[row], &v);
                    }
                }
            }
            cols.push(col);
        }
    }
    Matrix::from_cols(f, tb.len(), &cols)
}

/// Builds the total resolution of the smash-product module `M (x) X`
/// from equivariant/comodule resolutions of the factors, with
/// differential `d(w (x) v) = d_A w (x) v + (-1)^p w (x) d_B v`
/// rewritten in free smash-module coordinates.
pub fn total_smash_resolution(
    s: &crate::smash::SmashAlgebra,
    res_a: &Resolution,
    res_b: &Resolution,
    m_mod: &GradedModule,
    x_mod: &GradedModule,
) -> Result<TotalResolution> {
    let f = s.algebra.field;
    let len_a = res_a.levels.len() - 1;
    let len_b = res_b.levels.len() - 1;
    let n_levels = len_a + len_b;
    let n_bound = res_a.n_bound.min(res_b.n_bound);
    let d_bound = res_a.d_bound.min(res_b.d_bound).min(s.algebra.bound);

    // enumerate generators per level
    let mut blocks: Vec<Vec<(usize, usize, usize, usize)>> = Vec::new();
    for n in 0..=n_levels {
        let mut list = Vec::new();
        for p in 0..=n.min(len_a) {
            let q = n - p;
            if q > len_b {
                continue;
            }
            for i in 0..res_a.levels[p].gen_degrees.len() {
                for j in 0..res_b.levels[q].gen_degrees.len() {
                    list.push((p, q, i, j));
                }
            }
        }
        blocks.push(list);
    }

    let gen_degree = |n: usize, t: (usize, usize, usize, usize)| -> usize {
        let (p, q, i, j) = t;
        let _ = n;
        res_a.levels[p].gen_degrees[i] + res_b.levels[q].gen_degrees[j]
    };

    let mut levels: Vec<FreeLevel> = Vec::new();
    let mut aug: Vec<Vec<Scalar>> = Vec::new();
    for n in 0..=n_levels {
        let gen_degrees: Vec<usize> = blocks[n].iter().map(|&t| gen_degree(n, t)).collect();
        let gen_labels: Vec<String> = blocks[n]
            .iter()
            .map(|&(p, q, i, j)| {
                format!(
                    "{}(x){}",
                    res_a.levels[p].gen_labels[i], res_b.levels[q].gen_labels[j]
                )
            })
            .collect();
        let mut d_cols: Vec<Vec<Scalar>> = Vec::new();
        if n > 0 {
            // differential per generator
            let prev_gens: Vec<usize> = blocks[n - 1].iter().map(|&t| gen_degree(n - 1, t)).collect();
            for &(p, q, i, j) in &blocks[n] {
                let g = gen_degree(n, (p, q, i, j));
                let prev_basis = free_basis(&prev_gens, &s.algebra, g);
                let mut col = vec![f.zero(); prev_basis.len()];
                // accumulate a tensor-coordinate vector per target block,
                // then convert with the block freeness matrix
                let mut per_block: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
                if p >= 1 {
                    let tb = block_tensor_basis(
                        &res_a.levels[p - 1].gen_degrees,
                        &res_b.levels[q].gen_degrees,
                        &s.a,
                        &s.b,
                        g,
                    );
                    let mut vec = vec![f.zero(); tb.len()];
                    let dwi = res_a.levels[p].gen_degrees[i];
                    let dvj = res_b.levels[q].gen_degrees[j];
                    let fb = free_basis(&res_b.levels[q].gen_degrees, &s.b, dvj);
                    for (bu, bc) in s.b.unit.iter().enumerate() {
                        if f.is_zero(bc) {
                            continue;
                        }
                        let kb = fb.iter().position(|&t| t == (j, bu)).unwrap();
                        for (ka, c) in res_a.levels[p].d_cols[i].iter().enumerate() {
                            if f.is_zero(c) {
                                continue;
                            }
                            let row = tb.iter().position(|&t| t == (dwi, ka, kb)).unwrap();
                            vec[row] = f.add(&vec[row], &f.mul(c, bc));
                        }
                    }
                    per_block.insert((p - 1, q), vec);
                }
                if q >= 1 {
                    let tb = block_tensor_basis(
                        &res_a.levels[p].gen_degrees,
                        &res_b.levels[q - 1].gen_degrees,
                        &s.a,
                        &s.b,
                        g,
                    );
                    let mut vec = vec![f.zero(); tb.len()];
                    let dwi = res_a.levels[p].gen_degrees[i];
                    let fa = free_basis(&res_a.levels[p].gen_degrees, &s.a, dwi);
                    let sign = if p % 2 == 0 { f.one() } else { f.from_i64(-1) };
                    for (au, ac) in s.a.unit.iter().enumerate() {
                        if f.is_zero(ac) {
                            continue;
                        }
                        let ka = fa.iter().position(|&t| t == (i, au)).unwrap();
                        for (kb, c) in res_b.levels[q].d_cols[j].iter().enumerate() {
                            if f.is_zero(c) {
                                continue;
                            }
                            let row = tb.iter().position(|&t| t == (dwi, ka, kb)).unwrap();
                            vec[row] = f.add(&vec[row], &f.mul(&f.mul(&sign, c), ac));
                        }
                    }
                    per_block.insert((p, q - 1), vec);
                }
                for ((bp, bq), tvec) in per_block {
                    let block_gens: Vec<(usize, usize)> = blocks[n - 1]
                        .iter()
                        .filter(|&&(pp, qq, _, _)| (pp, qq) == (bp, bq))
                        .map(|&(_, _, ii, jj)| (ii, jj))
                        .collect();
                    let phi = block_phi(s, &res_a.levels[bp], &res_b.levels[bq], &block_gens, g);
                    let free_coords = phi.solve(&tvec).ok_or_else(|| {
                        Error::Math(format!(
                            "freeness conversion failed in block ({bp},{bq}) degree {g}"
                        ))
                    })?;
                    // scatter the block free coordinates into the full
                    // previous-level free basis
                    let mut cursor = 0usize;
                    for &(ii, jj) in &block_gens {
                        let gd = res_a.levels[bp].gen_degrees[ii] + res_b.levels[bq].gen_degrees[jj];
                        let gen_global = blocks[n - 1]
                            .iter()
                            .position(|&t| t == (bp, bq, ii, jj))
                            .unwrap();
                        for sp in 0..s.algebra.dims[g - gd] {
                            let c = &free_coords[cursor];
                            cursor += 1;
                            if f.is_zero(c) {
                                continue;
                            }
                            let row = prev_basis
                                .iter()
                                .position(|&t| t == (gen_global, sp))
                                .unwrap();
                            col[row] = f.add(&col[row], c);
                        }
                    }
                }
                d_cols.push(col);
            }
        }
        levels.push(FreeLevel { gen_degrees, gen_labels, d_cols, hact: None, coact: None });
    }

    // augmentation for level 0: aug_A(w_i) (x) aug_B(v_j) in the
    // tensor basis (u, mi, xi) of M (x) X at the generator degree
    let tensor_basis = crate::smash::tensor_dims(m_mod, x_mod, d_bound);
    for &(_, _, i, j) in &blocks[0] {
        let dwi = res_a.levels[0].gen_degrees[i];
        let dvj = res_b.levels[0].gen_degrees[j];
        let g = dwi + dvj;
        let tb = &tensor_basis[g];
        let mut img = vec![f.zero(); tb.len()];
        for (mi, mc) in res_a.aug[i].iter().enumerate() {
            if f.is_zero(mc) {
                continue;
            }
            for (xi, xc) in res_b.aug[j].iter().enumerate() {
                let v = f.mul(mc, xc);
                if f.is_zero(&v) {
                    continue;
                }
                let row = tb.iter().position(|&t| t == (dwi, mi, xi)).unwrap();
                let _ = dvj;
                img[row] = f.add(&img[row], &v);
            }
        }
        aug.push(img);
    }

    let resolution = Resolution {
        field: f,
        levels,
        aug,
        minimal: res_a.minimal && res_b.minimal,
        terminated: res_a.terminated && res_b.terminated,
        n_bound,
        d_bound,
    };
    Ok(TotalResolution { resolution, blocks })
}

/// The normalized bar resolution of the trivial right module `k` over a
/// connected algebra, truncated at `n_levels` homological levels and
/// internal degree `d_bound`. Level `n` is free on tuples
/// `[a_1|...|a_n]` of positive-degree basis elements; the differential
/// merges adjacent entries with alternating signs and pops the last
/// entry into the module coefficient.
pub fn bar_resolution(
    alg: &GradedAlgebra,
    n_levels: usize,
    d_bound: usize,
) -> Result<(Resolution, Vec<Vec<Vec<(usize, usize)>>>)> {
    let f = alg.field;
    if !alg.is_connected() {
        return Err(Error::Input("bar resolution needs a connected algebra".into()));
    }
    if d_bound > alg.bound {
        return Err(Error::Input("degree bound exceeds realization bound".into()));
    }
    // tuples[n] lists the level-n generators as words of (degree, index)
    let mut tuples: Vec<Vec<Vec<(usize, usize)>>> = vec![vec![Vec::new()]];
    for n in 1..=n_levels {
        let mut list = Vec::new();
        for prev in &tuples[n - 1] {
            let used: usize = prev.iter().map(|&(d, _)| d).sum();
            for d in 1..=d_bound.saturating_sub(used) {
                for idx in 0..alg.dim(d) {
                    let mut w = prev.clone();
                    w.push((d, idx));
                    list.push(w);
                }
            }
        }
        tuples.push(list);
    }
    let mut levels: Vec<FreeLevel> = Vec::new();
    for n in 0..=n_levels {
        let gen_degrees: Vec<usize> =
            tuples[n].iter().map(|w| w.iter().map(|&(d, _)| d).sum()).collect();
        let gen_labels: Vec<String> = tuples[n]
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "[]".into()
                } else {
                    format!(
                        "[{}]",
                        w.iter()
                            .map(|&(d, i)| alg.labels[d][i].clone())
                            .collect::<Vec<_>>()
                            .join("|")
                    )
                }
            })
            .collect();
        let mut d_cols: Vec<Vec<Scalar>> = Vec::new();
        if n > 0 {
            let prev_degrees: Vec<usize> =
                tuples[n - 1].iter().map(|w| w.iter().map(|&(d, _)| d).sum()).collect();
            let mut prev_pos: BTreeMap<&[(usize, usize)], usize> = BTreeMap::new();
            for (k, w) in tuples[n - 1].iter().enumerate() {
                prev_pos.insert(w.as_slice(), k);
            }
            for (gi, w) in tuples[n].iter().enumerate() {
                let g = gen_degrees[gi];
                let basis = free_basis(&prev_degrees, alg, g);
                let mut pos: BTreeMap<(usize, usize), usize> = BTreeMap::new();
                for (k, &p) in basis.iter().enumerate() {
                    pos.insert(p, k);
                }
                let mut col = vec![f.zero(); basis.len()];
                // merge faces i = 1..n-1 with sign (-1)^{i-1}
                for i in 0..n.saturating_sub(1) {
                    let (d1, i1) = w[i];
                    let (d2, i2) = w[i + 1];
                    let prod = &alg.mult[d1][d2][i1][i2];
                    let sign = if i % 2 == 0 { f.one() } else { f.from_i64(-1) };
                    for (k, c) in prod.iter().enumerate() {
                        if f.is_zero(c) {
                            continue;
                        }
                        let mut merged = Vec::with_capacity(n - 1);
                        merged.extend_from_slice(&w[..i]);
                        merged.push((d1 + d2, k));
                        merged.extend_from_slice(&w[i + 2..]);
                        if let Some(&t) = prev_pos.get(merged.as_slice()) {
                            // coefficient in A_0
                            let row = pos[&(t, 0)];
                            col[row] = f.add(&col[row], &f.mul(&sign, c));
                        }
                    }
                }
                // pop face with sign (-1)^{n-1}
                let (dn, iin) = w[n - 1];
                let head = &w[..n - 1];
                let sign = if (n - 1) % 2 == 0 { f.one() } else { f.from_i64(-1) };
                if let Some(&t) = prev_pos.get(head) {
                    let row = pos[&(t, iin)];
                    let _ = dn;
                    col[row] = f.add(&col[row], &sign);
                }
                d_cols.push(col);
            }
        }
        levels.push(FreeLevel { gen_degrees, gen_labels, d_cols, hact: None, coact: None });
    }
    let res = Resolution {
        field: f,
        levels,
        aug: vec![vec![f.one()]],
        minimal: false,
        terminated: false,
        n_bound: n_levels.saturating_sub(1),
        d_bound,
    };
    Ok((res, tuples))
}
