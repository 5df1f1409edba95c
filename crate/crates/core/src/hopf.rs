//! Finite-dimensional Hopf algebras, their actions on graded algebras,
//! and comodule-algebra structures.
//!
//! A Hopf algebra is stored by structure constants on a fixed basis:
//! multiplication, unit, comultiplication, counit, antipode and its
//! inverse. Actions and coactions on a presented algebra are specified on
//! generators and extended multiplicatively at the free-algebra level;
//! well-definedness on the quotient is checked by verifying that every
//! defining relation is mapped back into the relation ideal.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::gralg::PresentedAlgebra;
use crate::matrix::{Matrix, Span};

/// A finite-dimensional Hopf algebra by structure constants.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub field: Field,
    pub dim: usize,
    pub labels: Vec<String>,
    /// `mult[i][j]` = coordinates of `e_i e_j`.
    pub mult: Vec<Vec<Vec<Scalar>>>,
    pub unit: Vec<Scalar>,
    /// `comult[i][j][k]` = coefficient of `e_j (x) e_k` in `Delta(e_i)`.
    pub comult: Vec<Vec<Vec<Scalar>>>,
    pub counit: Vec<Scalar>,
    /// Antipode as a matrix acting on coordinate columns.
    pub antipode: Matrix,
    pub antipode_inv: Matrix,
}

impl HopfData {
    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if !f.is_zero(c) {
                        out[k] = f.add(&out[k], &f.mul(&xy, c));
                    }
                }
            }
        }
        out
    }

    /// Comultiplication of an element, as the coefficient matrix
    /// `T[j][k]` of `e_j (x) e_k`.
    pub fn comult_vec(&self, v: &[Scalar]) -> Matrix {
        let f = self.field;
        let mut t = Matrix::zero(f, self.dim, self.dim);
        for (i, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = &self.comult[i][j][k];
                    if !f.is_zero(c) {
                        t.set(j, k, f.add(t.get(j, k), &f.mul(x, c)));
                    }
                }
            }
        }
        t
    }

    pub fn counit_vec(&self, v: &[Scalar]) -> Scalar {
        let f = self.field;
        let mut out = f.zero();
        for (i, x) in v.iter().enumerate() {
            out = f.add(&out, &f.mul(x, &self.counit[i]));
        }
        out
    }

    pub fn antipode_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(v)
    }

    pub fn antipode_inv_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.antipode_inv.apply(v)
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// The group algebra `k[C_n]` of a cyclic group, with its standard
    /// Hopf structure (grouplike basis).
    pub fn cyclic_group_algebra(field: Field, n: usize) -> Result<HopfData> {
        if n == 0 {
            return Err(Error::Input("cyclic group order must be positive".into()));
        }
        let labels = (0..n)
            .map(|i| if i == 0 { "1".to_string() } else if i == 1 { "g".to_string() } else { format!("g^{i}") })
            .collect();
        let zero = || vec![field.zero(); n];
        let e = |i: usize| {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            v
        };
        let mult = (0..n)
            .map(|i| (0..n).map(|j| e((i + j) % n)).collect())
            .collect();
        let comult = (0..n)
            .map(|i| {
                let mut t = vec![zero(); n];
                t[i][i] = field.one();
                t
            })
            .collect();
        let mut antipode = Matrix::zero(field, n, n);
        for i in 0..n {
            antipode.set((n - i) % n, i, field.one());
        }
        Ok(HopfData {
            field,
            dim: n,
            labels,
            mult,
            unit: e(0),
            comult,
            counit: vec![field.one(); n],
            antipode_inv: antipode.clone(),
            antipode,
        })
    }

    /// The trivial Hopf algebra `k`.
    pub fn trivial(field: Field) -> HopfData {
        HopfData::cyclic_group_algebra(field, 1).unwrap()
    }

    /// The group algebra of a finite group given by its multiplication
    /// table (`table[i][j]` = index of `g_i g_j`), with the grouplike
    /// Hopf structure. The table is checked to define a group with
    /// identity at index 0.
    pub fn group_algebra(field: Field, table: &[Vec<usize>], labels: &[&str]) -> Result<HopfData> {
        let n = table.len();
        if n == 0 || labels.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Input("group table must be square with matching labels".into()));
        }
        if table.iter().flatten().any(|&k| k >= n) {
            return Err(Error::Input("group table entry out of range".into()));
        }
        for i in 0..n {
            if table[0][i] != i || table[i][0] != i {
                return Err(Error::Input("group table element 0 is not an identity".into()));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(Error::Input("group table is not associative".into()));
                    }
                }
            }
        }
        let mut inv = vec![None; n];
        for i in 0..n {
            for j in 0..n {
                if table[i][j] == 0 && table[j][i] == 0 {
                    inv[i] = Some(j);
                }
            }
        }
        let inv: Vec<usize> = inv
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Input("group table element has no inverse".into()))?;
        let e = |i: usize| {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            v
        };
        let mult = (0..n).map(|i| (0..n).map(|j| e(table[i][j])).collect()).collect();
        let comult = (0..n)
            .map(|i| {
                let mut t = vec![vec![field.zero(); n]; n];
                t[i][i] = field.one();
                t
            })
            .collect();
        let mut antipode = Matrix::zero(field, n, n);
        for i in 0..n {
            antipode.set(inv[i], i, field.one());
        }
        Ok(HopfData {
            field,
            dim: n,
            labels: labels.iter().map(|s| s.to_string()).collect(),
            mult,
            unit: e(0),
            comult,
            counit: vec![field.one(); n],
            antipode_inv: antipode.clone(),
            antipode,
        })
    }

    /// The group algebra of the symmetric group on three letters,
    /// generated by the transposition `s` and the 3-cycle `r`.
    pub fn symmetric_group_s3(field: Field) -> Result<HopfData> {
        // order: 1, r, r^2, s, sr, sr^2 with r^3 = s^2 = 1, r s = s r^2.
        let perm = |i: usize| -> [usize; 3] {
            let r = |x: usize| [1, 2, 0][x];
            let s = |x: usize| [1, 0, 2][x];
            let mut p = [0, 1, 2];
            let (flips, rots) = (i / 3, i % 3);
            for _ in 0..rots {
                p = [r(p[0]), r(p[1]), r(p[2])];
            }
            if flips == 1 {
                p = [s(p[0]), s(p[1]), s(p[2])];
            }
            p
        };
        let compose = |p: [usize; 3], q: [usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
        let perms: Vec<[usize; 3]> = (0..6).map(perm).collect();
        let table: Vec<Vec<usize>> = (0..6)
            .map(|i| {
                (0..6)
                    .map(|j| {
                        let pq = compose(perms[i], perms[j]);
                        perms.iter().position(|&p| p == pq).unwrap()
                    })
                    .collect()
            })
            .collect();
        HopfData::group_algebra(field, &table, &["1", "r", "r^2", "s", "sr", "sr^2"])
    }

    /// Sweedler's 4-dimensional Hopf algebra, basis `{1, g, x, gx}` with
    /// `g^2 = 1`, `x^2 = 0`, `xg = -gx`. Requires characteristic != 2.
    pub fn sweedler(field: Field) -> Result<HopfData> {
        if field.characteristic() == 2 {
            return Err(Error::Input("Sweedler algebra needs characteristic != 2".into()));
        }
        let f = field;
        let dim = 4;
        let e = |i: usize| {
            let mut v = vec![f.zero(); dim];
            v[i] = f.one();
            v
        };
        let sc = |i: usize, c: i64| {
            let mut v = vec![f.zero(); dim];
            v[i] = f.from_i64(c);
            v
        };
        let zero = vec![f.zero(); dim];
        // rows: left factor 1, g, x, gx; columns: right factor likewise
        let mult = vec![
            vec![e(0), e(1), e(2), e(3)],
            vec![e(1), e(0), e(3), e(2)],
            vec![e(2), sc(3, -1), zero.clone(), zero.clone()],
            vec![e(3), sc(2, -1), zero.clone(), zero.clone()],
        ];
        let mut comult = vec![vec![vec![f.zero(); dim]; dim]; dim];
        comult[0][0][0] = f.one(); // Delta(1) = 1 (x) 1
        comult[1][1][1] = f.one(); // Delta(g) = g (x) g
        comult[2][2][0] = f.one(); // Delta(x) = x (x) 1 + g (x) x
        comult[2][1][2] = f.one();
        comult[3][3][1] = f.one(); // Delta(gx) = gx (x) g + 1 (x) gx
        comult[3][0][3] = f.one();
        let counit = vec![f.one(), f.one(), f.zero(), f.zero()];
        // S(1)=1, S(g)=g, S(x) = -gx, S(gx) = x
        let mut antipode = Matrix::zero(f, dim, dim);
        antipode.set(0, 0, f.one());
        antipode.set(1, 1, f.one());
        antipode.set(3, 2, f.from_i64(-1));
        antipode.set(2, 3, f.one());
        let antipode_inv = antipode.inverse()?;
        Ok(HopfData {
            field: f,
            dim,
            labels: vec!["1".into(), "g".into(), "x".into(), "gx".into()],
            mult,
            unit: e(0),
            comult,
            counit,
            antipode,
            antipode_inv,
        })
    }

    /// Verifies all Hopf axioms on the stored structure constants.
    pub fn validate(&self) -> Result<()> {
        let f = self.field;
        let n = self.dim;
        // unit and associativity
        for i in 0..n {
            let e = self.basis_vec(i);
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                return Err(Error::Math(format!("Hopf unit law fails at basis {i}")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (ei, ej, ek) = (self.basis_vec(i), self.basis_vec(j), self.basis_vec(k));
                    let lhs = self.mul_vec(&self.mul_vec(&ei, &ej), &ek);
                    let rhs = self.mul_vec(&ei, &self.mul_vec(&ej, &ek));
                    if lhs != rhs {
                        return Err(Error::Math(format!(
                            "Hopf associativity fails at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        // coassociativity: coefficient of e_a (x) e_b (x) e_c
        for i in 0..n {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let mut lhs = f.zero();
                        let mut rhs = f.zero();
                        for m in 0..n {
                            lhs = f.add(
                                &lhs,
                                &f.mul(&self.comult[i][m][c], &self.comult[m][a][b]),
                            );
                            rhs = f.add(
                                &rhs,
                                &f.mul(&self.comult[i][a][m], &self.comult[m][b][c]),
                            );
                        }
                        if lhs != rhs {
                            return Err(Error::Math(format!(
                                "coassociativity fails at basis {i}"
                            )));
                        }
                    }
                }
            }
        }
        // counit laws
        for i in 0..n {
            let e = self.basis_vec(i);
            let t = self.comult_vec(&e);
            let mut left = vec![f.zero(); n];
            let mut right = vec![f.zero(); n];
            for j in 0..n {
                for k in 0..n {
                    left[k] = f.add(&left[k], &f.mul(t.get(j, k), &self.counit[j]));
                    right[j] = f.add(&right[j], &f.mul(t.get(j, k), &self.counit[k]));
                }
            }
            if left != e || right != e {
                return Err(Error::Math(format!("counit law fails at basis {i}")));
            }
        }
        // Delta and counit are algebra maps
        for i in 0..n {
            for j in 0..n {
                let prod = self.mul_vec(&self.basis_vec(i), &self.basis_vec(j));
                let lhs = self.comult_vec(&prod);
                let (ti, tj) = (self.comult_vec(&self.basis_vec(i)), self.comult_vec(&self.basis_vec(j)));
                let mut rhs = Matrix::zero(f, n, n);
                for a in 0..n {
                    for b in 0..n {
                        let ca = ti.get(a, b);
                        if f.is_zero(ca) {
                            continue;
                        }
                        for c in 0..n {
                            for d in 0..n {
                                let cb = tj.get(c, d);
                                if f.is_zero(cb) {
                                    continue;
                                }
                                let coeff = f.mul(ca, cb);
                                let left = self.mul_vec(&self.basis_vec(a), &self.basis_vec(c));
                                let right = self.mul_vec(&self.basis_vec(b), &self.basis_vec(d));
                                for (p, lv) in left.iter().enumerate() {
                                    if f.is_zero(lv) {
                                        continue;
                                    }
                                    for (q, rv) in right.iter().enumerate() {
                                        if f.is_zero(rv) {
                                            continue;
                                        }
                                        let add = f.mul(&coeff, &f.mul(lv, rv));
                                        rhs.set(p, q, f.add(rhs.get(p, q), &add));
                                    }
                                }
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Err(Error::Math(format!(
                        "comultiplication is not an algebra map at ({i},{j})"
                    )));
                }
                let ce = f.mul(&self.counit[i], &self.counit[j]);
                if self.counit_vec(&prod) != ce {
                    return Err(Error::Math(format!(
                        "counit is not an algebra map at ({i},{j})"
                    )));
                }
            }
        }
        // antipode axioms: sum S(h1) h2 = eps(h) 1 = sum h1 S(h2)
        for i in 0..n {
            let t = self.comult_vec(&self.basis_vec(i));
            let mut left = vec![f.zero(); n];
            let mut right = vec![f.zero(); n];
            for j in 0..n {
                for k in 0..n {
                    let c = t.get(j, k);
                    if f.is_zero(c) {
                        continue;
                    }
                    let l = self.mul_vec(&self.antipode_vec(&self.basis_vec(j)), &self.basis_vec(k));
                    let r = self.mul_vec(&self.basis_vec(j), &self.antipode_vec(&self.basis_vec(k)));
                    for p in 0..n {
                        left[p] = f.add(&left[p], &f.mul(c, &l[p]));
                        right[p] = f.add(&right[p], &f.mul(c, &r[p]));
                    }
                }
            }
            let target: Vec<Scalar> =
                self.unit.iter().map(|u| f.mul(u, &self.counit[i])).collect();
            if left != target || right != target {
                return Err(Error::Math(format!("antipode axiom fails at basis {i}")));
            }
        }
        // the stored inverse really inverts S
        let comp = self.antipode.mul(&self.antipode_inv);
        if comp != Matrix::identity(f, n) {
            return Err(Error::Math("stored antipode inverse is wrong".into()));
        }
        Ok(())
    }
}

/// An H-module-algebra structure on a graded algebra: for each Hopf basis
/// element, a matrix per internal degree.
#[derive(Clone, Debug)]
pub struct ActionData {
    /// `mats[h][d]`: action of `e_h` on the degree-`d` component.
    pub mats: Vec<Vec<Matrix>>,
}

impl ActionData {
    /// Action of an arbitrary Hopf element on a homogeneous vector.
    pub fn act(&self, field: &Field, h: &[Scalar], d: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![field.zero(); v.len()];
        for (i, c) in h.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let w = self.mats[i][d].apply(v);
            for (k, x) in w.iter().enumerate() {
                out[k] = field.add(&out[k], &field.mul(c, x));
            }
        }
        out
    }

    /// The trivial action `h |> a = eps(h) a` on every degree.
    pub fn trivial(hopf: &HopfData, dims: &[usize]) -> ActionData {
        let f = hopf.field;
        let mats = (0..hopf.dim)
            .map(|h| {
                dims.iter()
                    .map(|&n| Matrix::identity(f, n).scale(&hopf.counit[h]))
                    .collect()
            })
            .collect();
        ActionData { mats }
    }

    /// Extends an action given on generators to the whole presented
    /// algebra, checking well-definedness on the relation ideal and the
    /// module-algebra axioms.
    ///
    /// `gen_images[h][g]` is the image of generator `g` under `e_h`, as a
    /// linear combination of the generators (entries between generators
    /// of different degree must vanish).
    pub fn extend(
        hopf: &HopfData,
        alg: &PresentedAlgebra,
        gen_images: &[Vec<Vec<Scalar>>],
    ) -> Result<ActionData> {
        let f = hopf.field;
        let gens = &alg.presentation.generators;
        if gen_images.len() != hopf.dim {
            return Err(Error::Input("action: one generator map per Hopf basis element required".into()));
        }
        for (h, imgs) in gen_images.iter().enumerate() {
            if imgs.len() != gens.len() {
                return Err(Error::Input("action: image needed for every generator".into()));
            }
            for (g, img) in imgs.iter().enumerate() {
                for (g2, c) in img.iter().enumerate() {
                    if !f.is_zero(c) && gens[g2].1 != gens[g].1 {
                        return Err(Error::Input(format!(
                            "action of basis {h} does not preserve the degree of generator {g}"
                        )));
                    }
                }
            }
        }

        let bound = alg.algebra.bound;
        // Free-level action matrices per degree, built by the recursion
        // h |> (x w) = sum (h1 |> x)(h2 |> w) on leading letters.
        let mut free_words: Vec<Vec<crate::gralg::Word>> = Vec::new();
        let mut free_index: Vec<std::collections::BTreeMap<crate::gralg::Word, usize>> = Vec::new();
        for d in 0..=bound {
            let words = free_monomials(gens, d);
            free_index.push(words.iter().cloned().zip(0..).collect());
            free_words.push(words);
        }
        let mut free_mats: Vec<Vec<Matrix>> = vec![Vec::new(); hopf.dim];
        for d in 0..=bound {
            let words = &free_words[d];
            let nw = words.len();
            let mut per_h: Vec<Matrix> = (0..hopf.dim).map(|_| Matrix::zero(f, nw, nw)).collect();
            for (wi, w) in words.iter().enumerate() {
                if w.is_empty() {
                    // h |> 1 = eps(h) 1
                    for h in 0..hopf.dim {
                        per_h[h].set(0, wi, hopf.counit[h].clone());
                    }
                    continue;
                }
                let head = w[0];
                let tail: crate::gralg::Word = w[1..].to_vec();
                let tail_deg = d - gens[head].1;
                let ti = free_index[tail_deg][&tail];
                for h in 0..hopf.dim {
                    let t = self_comult(hopf, h);
                    for j in 0..hopf.dim {
                        for k in 0..hopf.dim {
                            let c = t.get(j, k);
                            if f.is_zero(c) {
                                continue;
                            }
                            // (e_j |> head) is a combination of generators
                            for (g2, cg) in gen_images[j][head].iter().enumerate() {
                                if f.is_zero(cg) {
                                    continue;
                                }
                                // (e_k |> tail) from the lower-degree matrix
                                let col = free_mats[k][tail_deg].col(ti);
                                for (t2, ct) in col.iter().enumerate() {
                                    if f.is_zero(ct) {
                                        continue;
                                    }
                                    let mut word = vec![g2];
                                    word.extend(free_words[tail_deg][t2].iter().copied());
                                    let target = free_index[d][&word];
                                    let add = f.mul(c, &f.mul(cg, ct));
                                    let cur = per_h[h].get(target, wi).clone();
                                    per_h[h].set(target, wi, f.add(&cur, &add));
                                }
                            }
                        }
                    }
                }
            }
            for h in 0..hopf.dim {
                free_mats[h].push(per_h[h].clone());
            }
        }

        // Well-definedness: every relation must be carried into the ideal.
        for rel in &alg.presentation.relations {
            let d = alg
                .presentation
                .word_degree(&rel.iter().find(|(_, c)| !f.is_zero(c)).unwrap().0);
            let mut v = vec![f.zero(); free_words[d].len()];
            for (w, c) in rel {
                let idx = free_index[d][w];
                v[idx] = f.add(&v[idx], c);
            }
            for h in 0..hopf.dim {
                let img = free_mats[h][d].apply(&v);
                // reduce in the quotient: image of a relation must be 0
                let reduced = reduce_free(alg, d, &img);
                if reduced.iter().any(|c| !f.is_zero(c)) {
                    return Err(Error::Input(format!(
                        "action does not preserve the relation ideal (basis element {})",
                        hopf.labels[h]
                    )));
                }
            }
        }

        // Push down to the quotient basis.
        let mut mats: Vec<Vec<Matrix>> = vec![Vec::new(); hopf.dim];
        for d in 0..=bound {
            let basis = alg.basis_words(d);
            for h in 0..hopf.dim {
                let mut m = Matrix::zero(f, alg.algebra.dims[d], alg.algebra.dims[d]);
                for (bi, w) in basis.iter().enumerate() {
                    let mut v = vec![f.zero(); free_words[d].len()];
                    v[free_index[d][w]] = f.one();
                    let img = free_mats[h][d].apply(&v);
                    let red = reduce_free(alg, d, &img);
                    for (r, c) in red.iter().enumerate() {
                        m.set(r, bi, c.clone());
                    }
                }
                mats[h].push(m);
            }
        }
        let action = ActionData { mats };
        action.validate(hopf, &alg.algebra)?;
        Ok(action)
    }

    /// Checks the module axioms and the module-algebra compatibility
    /// against a graded algebra's structure constants.
    pub fn validate(&self, hopf: &HopfData, alg: &crate::gralg::GradedAlgebra) -> Result<()> {
        let f = hopf.field;
        let bound = alg.bound;
        for d in 0..=bound {
            // 1 |> a = a
            let unit_act = self.act_matrix(&f, &hopf.unit, d, alg.dims[d]);
            if unit_act != Matrix::identity(f, alg.dims[d]) {
                return Err(Error::Math(format!("action unit law fails in degree {d}")));
            }
            // e_i |> (e_j |> a) = (e_i e_j) |> a
            for i in 0..hopf.dim {
                for j in 0..hopf.dim {
                    let composed = self.mats[i][d].mul(&self.mats[j][d]);
                    let prod = hopf.mul_vec(&hopf.basis_vec(i), &hopf.basis_vec(j));
                    let direct = self.act_matrix(&f, &prod, d, alg.dims[d]);
                    if composed != direct {
                        return Err(Error::Math(format!(
                            "action is not a module structure in degree {d}"
                        )));
                    }
                }
            }
        }
        // h |> (a b) = sum (h1 |> a)(h2 |> b)
        for h in 0..hopf.dim {
            let t = hopf.comult_vec(&hopf.basis_vec(h));
            for d1 in 0..=bound {
                for d2 in 0..=(bound - d1) {
                    for i in 0..alg.dims[d1] {
                        for j in 0..alg.dims[d2] {
                            let prod = alg.mul_basis(d1, i, d2, j).to_vec();
                            let lhs = self.mats[h][d1 + d2].apply(&prod);
                            let mut rhs = vec![f.zero(); alg.dims[d1 + d2]];
                            for p in 0..hopf.dim {
                                for q in 0..hopf.dim {
                                    let c = t.get(p, q);
                                    if f.is_zero(c) {
                                        continue;
                                    }
                                    let a1 = self.mats[p][d1].col(i);
                                    let b1 = self.mats[q][d2].col(j);
                                    let m = alg.mul_vec(d1, &a1, d2, &b1);
                                    for (k, x) in m.iter().enumerate() {
                                        rhs[k] = f.add(&rhs[k], &f.mul(c, x));
                                    }
                                }
                            }
                            if lhs != rhs {
                                return Err(Error::Math(format!(
                                    "module-algebra axiom fails at degrees ({d1},{d2})"
                                )));
                            }
                        }
                    }
                }
            }
            // h |> 1 = eps(h) 1
            let one_img = self.mats[h][0].apply(&alg.unit);
            let target: Vec<Scalar> =
                alg.unit.iter().map(|u| f.mul(u, &hopf.counit[h])).collect();
            if one_img != target {
                return Err(Error::Math(format!(
                    "action on the unit fails for basis {}",
                    hopf.labels[h]
                )));
            }
        }
        Ok(())
    }

    fn act_matrix(&self, f: &Field, h: &[Scalar], d: usize, n: usize) -> Matrix {
        let mut m = Matrix::zero(*f, n, n);
        for (i, c) in h.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            m = m.add(&self.mats[i][d].scale(c));
        }
        m
    }
}

/// A left H-comodule-algebra structure: `rho(a) = sum_h e_h (x) C_h(a)`
/// with one component matrix per Hopf basis element and degree.
#[derive(Clone, Debug)]
pub struct CoactionData {
    /// `comps[h][d]`: component `C_h` on the degree-`d` part.
    pub comps: Vec<Vec<Matrix>>,
}

impl CoactionData {
    /// The trivial coaction `rho(a) = 1 (x) a`.
    pub fn trivial(hopf: &HopfData, dims: &[usize]) -> CoactionData {
        let f = hopf.field;
        let comps = (0..hopf.dim)
            .map(|h| {
                dims.iter()
                    .map(|&n| Matrix::identity(f, n).scale(&hopf.unit[h]))
                    .collect()
            })
            .collect();
        CoactionData { comps }
    }

    /// The regular coaction of a Hopf algebra on itself in degree 0:
    /// `rho = Delta` on `B = H` viewed as an algebra concentrated in
    /// degree 0 with basis equal to the Hopf basis.
    pub fn regular(hopf: &HopfData, bound: usize) -> CoactionData {
        let f = hopf.field;
        let mut comps = vec![Vec::new(); hopf.dim];
        for h in 0..hopf.dim {
            let mut m = Matrix::zero(f, hopf.dim, hopf.dim);
            for i in 0..hopf.dim {
                for k in 0..hopf.dim {
                    m.set(k, i, hopf.comult[i][h][k].clone());
                }
            }
            comps[h].push(m);
            for _ in 1..=bound {
                comps[h].push(Matrix::zero(f, 0, 0));
            }
        }
        CoactionData { comps }
    }

    /// Extends a coaction from generator data, mirroring
    /// [`ActionData::extend`]: `gen_comps[h][g]` is the `e_h` component of
    /// `rho(generator g)`, a combination of same-degree generators.
    pub fn extend(
        hopf: &HopfData,
        alg: &PresentedAlgebra,
        gen_comps: &[Vec<Vec<Scalar>>],
    ) -> Result<CoactionData> {
        let f = hopf.field;
        let gens = &alg.presentation.generators;
        if gen_comps.len() != hopf.dim {
            return Err(Error::Input("coaction: one component per Hopf basis element required".into()));
        }
        for comps in gen_comps {
            if comps.len() != gens.len() {
                return Err(Error::Input("coaction: component needed for every generator".into()));
            }
        }
        let bound = alg.algebra.bound;
        let mut free_words: Vec<Vec<crate::gralg::Word>> = Vec::new();
        let mut free_index: Vec<std::collections::BTreeMap<crate::gralg::Word, usize>> = Vec::new();
        for d in 0..=bound {
            let words = free_monomials(gens, d);
            free_index.push(words.iter().cloned().zip(0..).collect());
            free_words.push(words);
        }
        // rho(x w) = rho(x) rho(w) with H-components multiplied in H.
        let mut free_comps: Vec<Vec<Matrix>> = vec![Vec::new(); hopf.dim];
        for d in 0..=bound {
            let words = &free_words[d];
            let nw = words.len();
            let mut per_h: Vec<Matrix> = (0..hopf.dim).map(|_| Matrix::zero(f, nw, nw)).collect();
            for (wi, w) in words.iter().enumerate() {
                if w.is_empty() {
                    for h in 0..hopf.dim {
                        per_h[h].set(0, wi, hopf.unit[h].clone());
                    }
                    continue;
                }
                let head = w[0];
                let tail: crate::gralg::Word = w[1..].to_vec();
                let tail_deg = d - gens[head].1;
                let ti = free_index[tail_deg][&tail];
                for p in 0..hopf.dim {
                    for (g2, cg) in gen_comps[p][head].iter().enumerate() {
                        if f.is_zero(cg) {
                            continue;
                        }
                        for q in 0..hopf.dim {
                            let col = free_comps[q][tail_deg].col(ti);
                            for (t2, ct) in col.iter().enumerate() {
                                if f.is_zero(ct) {
                                    continue;
                                }
                                let coeff = f.mul(cg, ct);
                                let hprod = hopf.mul_vec(&hopf.basis_vec(p), &hopf.basis_vec(q));
                                let mut word = vec![g2];
                                word.extend(free_words[tail_deg][t2].iter().copied());
                                let target = free_index[d][&word];
                                for (h, hc) in hprod.iter().enumerate() {
                                    if f.is_zero(hc) {
                                        continue;
                                    }
                                    let add = f.mul(&coeff, hc);
                                    let cur = per_h[h].get(target, wi).clone();
                                    per_h[h].set(target, wi, f.add(&cur, &add));
                                }
                            }
                        }
                    }
                }
            }
            for h in 0..hopf.dim {
                free_comps[h].push(per_h[h].clone());
            }
        }

        // relations must coact into the ideal componentwise
        for rel in &alg.presentation.relations {
            let d = alg
                .presentation
                .word_degree(&rel.iter().find(|(_, c)| !f.is_zero(c)).unwrap().0);
            let mut v = vec![f.zero(); free_words[d].len()];
            for (w, c) in rel {
                let idx = free_index[d][w];
                v[idx] = f.add(&v[idx], c);
            }
            for h in 0..hopf.dim {
                let img = free_comps[h][d].apply(&v);
                let reduced = reduce_free(alg, d, &img);
                if reduced.iter().any(|c| !f.is_zero(c)) {
                    return Err(Error::Input(format!(
                        "coaction does not preserve the relation ideal (component {})",
                        hopf.labels[h]
                    )));
                }
            }
        }

        let mut comps: Vec<Vec<Matrix>> = vec![Vec::new(); hopf.dim];
        for d in 0..=bound {
            let basis = alg.basis_words(d);
            for h in 0..hopf.dim {
                let mut m = Matrix::zero(f, alg.algebra.dims[d], alg.algebra.dims[d]);
                for (bi, w) in basis.iter().enumerate() {
                    let mut v = vec![f.zero(); free_words[d].len()];
                    v[free_index[d][w]] = f.one();
                    let img = free_comps[h][d].apply(&v);
                    let red = reduce_free(alg, d, &img);
                    for (r, c) in red.iter().enumerate() {
                        m.set(r, bi, c.clone());
                    }
                }
                comps[h].push(m);
            }
        }
        let coaction = CoactionData { comps };
        coaction.validate(hopf, &alg.algebra)?;
        Ok(coaction)
    }

    /// Checks counit, coassociativity and the comodule-algebra axioms.
    pub fn validate(&self, hopf: &HopfData, alg: &crate::gralg::GradedAlgebra) -> Result<()> {
        let f = hopf.field;
        for d in 0..=alg.bound {
            let n = alg.dims[d];
            // counit: sum eps(e_h) C_h = id
            let mut acc = Matrix::zero(f, n, n);
            for h in 0..hopf.dim {
                acc = acc.add(&self.comps[h][d].scale(&hopf.counit[h]));
            }
            if acc != Matrix::identity(f, n) {
                return Err(Error::Math(format!("coaction counit law fails in degree {d}")));
            }
            // coassociativity: sum_h Delta(e_h)_{ij} C_h = C_j o C_i
            for i in 0..hopf.dim {
                for j in 0..hopf.dim {
                    let mut lhs = Matrix::zero(f, n, n);
                    for h in 0..hopf.dim {
                        let c = &hopf.comult[h][i][j];
                        if !f.is_zero(c) {
                            lhs = lhs.add(&self.comps[h][d].scale(c));
                        }
                    }
                    let rhs = self.comps[j][d].mul(&self.comps[i][d]);
                    if lhs != rhs {
                        return Err(Error::Math(format!(
                            "coaction coassociativity fails in degree {d}"
                        )));
                    }
                }
            }
        }
        // algebra map: C_h(ab) = sum_{p,q: e_p e_q ∋ e_h} C_p(a) C_q(b)
        for d1 in 0..=alg.bound {
            for d2 in 0..=(alg.bound - d1) {
                for i in 0..alg.dims[d1] {
                    for j in 0..alg.dims[d2] {
                        let prod = alg.mul_basis(d1, i, d2, j).to_vec();
                        for h in 0..hopf.dim {
                            let lhs = self.comps[h][d1 + d2].apply(&prod);
                            let mut rhs = vec![f.zero(); alg.dims[d1 + d2]];
                            for p in 0..hopf.dim {
                                for q in 0..hopf.dim {
                                    let c = &hopf.mult[p][q][h];
                                    if f.is_zero(c) {
                                        continue;
                                    }
                                    let a1 = self.comps[p][d1].col(i);
                                    let b1 = self.comps[q][d2].col(j);
                                    let m = alg.mul_vec(d1, &a1, d2, &b1);
                                    for (k, x) in m.iter().enumerate() {
                                        rhs[k] = f.add(&rhs[k], &f.mul(c, x));
                                    }
                                }
                            }
                            if lhs != rhs {
                                return Err(Error::Math(format!(
                                    "comodule-algebra axiom fails at degrees ({d1},{d2})"
                                )));
                            }
                        }
                    }
                }
            }
        }
        // rho(1) = 1 (x) 1
        for h in 0..hopf.dim {
            let img = self.comps[h][0].apply(&alg.unit);
            let target: Vec<Scalar> =
                alg.unit.iter().map(|u| f.mul(u, &hopf.unit[h])).collect();
            if img != target {
                return Err(Error::Math("coaction on the unit fails".into()));
            }
        }
        Ok(())
    }
}

/// Smallest subspace containing `vectors` and stable under all component
/// matrices; returns a canonical basis of the closure.
pub fn comodule_closure(
    field: Field,
    dim: usize,
    comps: &[Matrix],
    vectors: &[Vec<Scalar>],
) -> Vec<Vec<Scalar>> {
    let mut current: Vec<Vec<Scalar>> = vectors.to_vec();
    loop {
        let span = Span::new(field, dim, &current);
        let mut added = false;
        let mut next = current.clone();
        for v in &current {
            for c in comps {
                let img = c.apply(v);
                if img.iter().any(|x| !field.is_zero(x)) && !span.contains(&img) {
                    next.push(img);
                    added = true;
                }
            }
        }
        current = next;
        if !added {
            break;
        }
    }
    // canonical basis: rref rows of the span
    let m = if current.is_empty() {
        Matrix::zero(field, 0, dim)
    } else {
        Matrix::from_rows(field, current)
    };
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i)).collect()
}

fn self_comult(hopf: &HopfData, h: usize) -> Matrix {
    hopf.comult_vec(&hopf.basis_vec(h))
}

fn free_monomials(gens: &[(String, usize)], d: usize) -> Vec<crate::gralg::Word> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (g, (_, gd)) in gens.iter().enumerate() {
        if *gd > d {
            continue;
        }
        for tail in free_monomials(gens, d - gd) {
            let mut w = Vec::with_capacity(tail.len() + 1);
            w.push(g);
            w.extend(tail);
            out.push(w);
        }
    }
    out
}

/// Reduces a free-algebra coordinate vector of degree `d` to quotient
/// coordinates, via the presented algebra's normal form on words.
fn reduce_free(alg: &PresentedAlgebra, d: usize, v: &[Scalar]) -> Vec<Scalar> {
    let f = alg.presentation.field;
    let words = free_monomials(&alg.presentation.generators, d);
    let mut out = vec![f.zero(); alg.algebra.dims[d]];
    for (i, c) in v.iter().enumerate() {
        if f.is_zero(c) {
            continue;
        }
        let (_, coords) = alg.word_coords(&words[i]);
        for (k, x) in coords.iter().enumerate() {
            out[k] = f.add(&out[k], &f.mul(c, x));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gralg::{Presentation, PresentedAlgebra};

    #[test]
    fn cyclic_group_algebra_is_hopf() {
        let h = HopfData::cyclic_group_algebra(Field::Rationals, 3).unwrap();
        h.validate().unwrap();
        let h2 = HopfData::cyclic_group_algebra(Field::prime(7).unwrap(), 2).unwrap();
        h2.validate().unwrap();
    }

    #[test]
    fn trivial_hopf_is_hopf() {
        HopfData::trivial(Field::Rationals).validate().unwrap();
    }

    #[test]
    fn sweedler_is_hopf_with_antipode_of_order_four() {
        let h = HopfData::sweedler(Field::Rationals).unwrap();
        h.validate().unwrap();
        let s2 = h.antipode.mul(&h.antipode);
        assert_ne!(s2, Matrix::identity(h.field, 4));
        let s4 = s2.mul(&s2);
        assert_eq!(s4, Matrix::identity(h.field, 4));
    }

    #[test]
    fn sweedler_rejected_in_char_two() {
        assert!(HopfData::sweedler(Field::prime(2).unwrap()).is_err());
    }

    fn kx(field: Field, bound: usize) -> PresentedAlgebra {
        PresentedAlgebra::build(
            Presentation {
                field,
                generators: vec![("x".into(), 1)],
                relations: vec![],
            },
            bound,
        )
        .unwrap()
    }

    #[test]
    fn sign_action_on_polynomial_ring() {
        // C2 acting on k[x] by g |> x = -x: on degree d it is (-1)^d.
        let f = Field::Rationals;
        let h = HopfData::cyclic_group_algebra(f, 2).unwrap();
        let a = kx(f, 4);
        let gen_images = vec![
            vec![vec![f.one()]],        // 1 |> x = x
            vec![vec![f.from_i64(-1)]], // g |> x = -x
        ];
        let act = ActionData::extend(&h, &a, &gen_images).unwrap();
        for d in 0..=4usize {
            let expect = Matrix::identity(f, 1).scale(&f.from_i64(if d % 2 == 0 { 1 } else { -1 }));
            assert_eq!(act.mats[1][d], expect);
        }
    }

    #[test]
    fn action_violating_relations_rejected() {
        // On k[x]/(x^2) the unique degree-1 action g |> x = c x always
        // preserves the ideal; instead break a commutativity relation:
        // k[x,y] with g swapping x and y scaled asymmetrically.
        let f = Field::Rationals;
        let h = HopfData::cyclic_group_algebra(f, 2).unwrap();
        let a = PresentedAlgebra::build(
            Presentation {
                field: f,
                generators: vec![("x".into(), 1), ("y".into(), 1)],
                relations: vec![vec![
                    (vec![0, 1], f.one()),
                    (vec![1, 0], f.from_i64(-2)), // xy = 2 yx
                ]],
            },
            3,
        )
        .unwrap();
        // g |> x = y, g |> y = x: sends xy - 2yx to yx - 2xy, which is
        // not in the ideal (the ideal contains xy - 2yx only).
        let gen_images = vec![
            vec![
                vec![f.one(), f.zero()],
                vec![f.zero(), f.one()],
            ],
            vec![
                vec![f.zero(), f.one()],
                vec![f.one(), f.zero()],
            ],
        ];
        assert!(ActionData::extend(&h, &a, &gen_images).is_err());
    }

    #[test]
    fn grouplike_coaction_on_polynomial_ring() {
        // rho(x) = g (x) x on k[x] with H = kC3: degree-d component sits
        // over g^d.
        let f = Field::prime(7).unwrap();
        let h = HopfData::cyclic_group_algebra(f, 3).unwrap();
        let a = kx(f, 4);
        let mut gen_comps = vec![vec![vec![f.zero()]]; 3];
        gen_comps[1][0][0] = f.one(); // g-component of rho(x) is x
        let co = CoactionData::extend(&h, &a, &gen_comps).unwrap();
        for d in 0..=4usize {
            for hh in 0..3usize {
                let expect = if hh == d % 3 {
                    Matrix::identity(f, 1)
                } else {
                    Matrix::zero(f, 1, 1)
                };
                assert_eq!(co.comps[hh][d], expect, "degree {d} component {hh}");
            }
        }
    }

    #[test]
    fn regular_coaction_validates() {
        let f = Field::Rationals;
        let h = HopfData::cyclic_group_algebra(f, 2).unwrap();
        // B = kC2 as a degree-0 algebra
        let alg = crate::smash::hopf_as_degree_zero_algebra(&h, 3);
        let co = CoactionData::regular(&h, 3);
        co.validate(&h, &alg).unwrap();
    }

    #[test]
    fn closure_of_non_stable_vector() {
        let f = Field::Rationals;
        // swap matrix; starting from e0 the closure is the whole plane
        let swap = Matrix::from_i64_rows(f, &[&[0, 1], &[1, 0]]);
        let closure = comodule_closure(f, 2, &[swap], &[vec![f.one(), f.zero()]]);
        assert_eq!(closure.len(), 2);
    }

    #[test]
    fn s3_group_algebra_validates() {
        let f = Field::Rationals;
        let h = HopfData::symmetric_group_s3(f).unwrap();
        assert_eq!(h.dim, 6);
        h.validate().unwrap();
        // non-abelian: rs != sr
        assert_ne!(h.mult[1][3], h.mult[3][1]);
        // antipode is an involution on a group algebra
        assert_eq!(h.antipode.mul(&h.antipode), Matrix::identity(f, 6));
    }

    #[test]
    fn group_algebra_rejects_broken_table() {
        let f = Field::Rationals;
        // 0 is not an identity
        assert!(HopfData::group_algebra(f, &[vec![1, 0], vec![0, 1]], &["1", "g"]).is_err());
        // non-associative latin-like square
        let t = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]];
        assert!(HopfData::group_algebra(f, &t, &["1", "a", "b"]).is_err());
    }
}
