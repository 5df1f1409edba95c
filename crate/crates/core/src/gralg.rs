//! Graded algebras from finite presentations.
//!
//! An algebra is presented by weighted generators and homogeneous
//! noncommutative relations. Up to a fixed internal degree bound the
//! quotient is realized degree by degree with linear algebra: in each
//! degree the relation ideal is spanned by `u * r * w` over monomials
//! `u, w` and relations `r`, and a canonical monomial basis of the
//! quotient is read off from the reduced row echelon form of that span.
//! The result is a table of structure constants that every later stage
//! (smash products, resolutions, Ext) consumes uniformly.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

/// A word in the free algebra: a sequence of generator indices.
pub type Word = Vec<usize>;

/// A noncommutative polynomial: a list of (word, coefficient) terms.
pub type NcPoly = Vec<(Word, Scalar)>;

/// A finite homogeneous presentation.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub field: Field,
    /// (label, internal degree >= 1) per generator.
    pub generators: Vec<(String, usize)>,
    pub relations: Vec<NcPoly>,
}

impl Presentation {
    pub fn word_degree(&self, w: &Word) -> usize {
        w.iter().map(|&g| self.generators[g].1).sum()
    }

    fn poly_degree(&self, p: &NcPoly) -> Result<usize> {
        let mut deg = None;
        for (w, c) in p {
            if self.field.is_zero(c) {
                continue;
            }
            let d = self.word_degree(w);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => {
                    return Err(Error::Input(
                        "relation is not homogeneous".into(),
                    ))
                }
                _ => {}
            }
        }
        deg.ok_or_else(|| Error::Input("relation is identically zero".into()))
    }
}

/// Per-degree normal-form data for a presented algebra.
#[derive(Clone, Debug)]
struct DegreeData {
    /// All free-algebra monomials of this degree, in lexicographic order.
    monomials: Vec<Word>,
    index: BTreeMap<Word, usize>,
    /// rref of the ideal span in monomial coordinates, with its pivots.
    ideal_rref: Matrix,
    pivots: Vec<usize>,
    /// Monomial indices forming the basis of the quotient (non-pivots).
    basis: Vec<usize>,
    /// Position of each basis monomial within `basis` (inverse map).
    basis_pos: BTreeMap<usize, usize>,
}

impl DegreeData {
    /// Reduces a free-algebra vector to coordinates in the quotient basis.
    fn reduce(&self, field: &Field, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if field.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for j in 0..v.len() {
                v[j] = field.sub(&v[j], &field.mul(&c, self.ideal_rref.get(row, j)));
            }
        }
        self.basis.iter().map(|&m| v[m].clone()).collect()
    }
}

/// A graded algebra truncated at an internal degree bound, given by its
/// dimensions, basis labels, unit, and multiplication table.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub field: Field,
    /// Internal degree bound: components `0..=bound` are stored.
    pub bound: usize,
    pub dims: Vec<usize>,
    pub labels: Vec<Vec<String>>,
    /// Coordinates of 1 in degree 0.
    pub unit: Vec<Scalar>,
    /// `mult[d1][d2][i][j]` = coordinates of `e_i * e_j` in degree
    /// `d1 + d2`, stored only when `d1 + d2 <= bound`.
    pub mult: Vec<Vec<Vec<Vec<Vec<Scalar>>>>>,
}

impl GradedAlgebra {
    pub fn dim(&self, d: usize) -> usize {
        if d <= self.bound {
            self.dims[d]
        } else {
            0
        }
    }

    /// True when the degree-0 part is exactly the ground field.
    pub fn is_connected(&self) -> bool {
        self.dims[0] == 1
    }

    pub fn mul_basis(&self, d1: usize, i: usize, d2: usize, j: usize) -> &[Scalar] {
        &self.mult[d1][d2][i][j]
    }

    /// Product of two homogeneous elements given in coordinates.
    pub fn mul_vec(&self, d1: usize, v1: &[Scalar], d2: usize, v2: &[Scalar]) -> Vec<Scalar> {
        assert!(
            d1 + d2 <= self.bound,
            "product degree {} exceeds bound {}",
            d1 + d2,
            self.bound
        );
        let f = self.field;
        let mut out = vec![f.zero(); self.dims[d1 + d2]];
        for (i, a) in v1.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in v2.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in self.mult[d1][d2][i][j].iter().enumerate() {
                    if !f.is_zero(c) {
                        out[k] = f.add(&out[k], &f.mul(&ab, c));
                    }
                }
            }
        }
        out
    }

    /// Checks unit laws and associativity on all basis triples within the
    /// bound. Intended for constructed algebras and test assertions.
    pub fn validate(&self) -> Result<()> {
        let f = self.field;
        for d in 0..=self.bound {
            for i in 0..self.dims[d] {
                let mut e = vec![f.zero(); self.dims[d]];
                e[i] = f.one();
                let left = self.mul_vec(0, &self.unit, d, &e);
                let right = self.mul_vec(d, &e, 0, &self.unit);
                if left != e || right != e {
                    return Err(Error::Math(format!(
                        "unit law fails on basis element {i} of degree {d}"
                    )));
                }
            }
        }
        for d1 in 0..=self.bound {
            for d2 in 0..=self.bound - d1 {
                for d3 in 0..=self.bound - d1 - d2 {
                    for i in 0..self.dims[d1] {
                        for j in 0..self.dims[d2] {
                            for k in 0..self.dims[d3] {
                                let ij = self.mult[d1][d2][i][j].clone();
                                let jk = self.mult[d2][d3][j][k].clone();
                                let mut ei = vec![f.zero(); self.dims[d1]];
                                ei[i] = f.one();
                                let mut ek = vec![f.zero(); self.dims[d3]];
                                ek[k] = f.one();
                                let lhs = self.mul_vec(d1 + d2, &ij, d3, &ek);
                                let rhs = self.mul_vec(d1, &ei, d2 + d3, &jk);
                                if lhs != rhs {
                                    return Err(Error::Math(format!(
                                        "associativity fails at degrees ({d1},{d2},{d3}) indices ({i},{j},{k})"
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

/// A presented algebra realized up to the bound, remembering enough of the
/// free-algebra picture to evaluate words and extend generator maps.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    pub presentation: Presentation,
    pub algebra: GradedAlgebra,
    degrees: Vec<DegreeData>,
}

fn monomials_of_degree(gens: &[(String, usize)], d: usize) -> Vec<Word> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (g, (_, gd)) in gens.iter().enumerate() {
        if *gd > d {
            continue;
        }
        for tail in monomials_of_degree(gens, d - gd) {
            let mut w = Vec::with_capacity(tail.len() + 1);
            w.push(g);
            w.extend(tail);
            out.push(w);
        }
    }
    out
}

impl PresentedAlgebra {
    pub fn build(presentation: Presentation, bound: usize) -> Result<PresentedAlgebra> {
        let f = presentation.field;
        for (label, deg) in &presentation.generators {
            if *deg == 0 {
                return Err(Error::Input(format!(
                    "generator {label} has degree 0; generators must have positive degree"
                )));
            }
        }
        let rel_degs: Vec<usize> = presentation
            .relations
            .iter()
            .map(|r| presentation.poly_degree(r))
            .collect::<Result<_>>()?;

        let mut degrees = Vec::with_capacity(bound + 1);
        for d in 0..=bound {
            let monomials = monomials_of_degree(&presentation.generators, d);
            let index: BTreeMap<Word, usize> =
                monomials.iter().cloned().zip(0..).collect();
            // Span of the ideal in degree d: u * r * w over all monomials
            // u, w and relations r with matching degrees.
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            for (r, rel) in presentation.relations.iter().enumerate() {
                let rd = rel_degs[r];
                if rd > d {
                    continue;
                }
                for a in 0..=(d - rd) {
                    let b = d - rd - a;
                    for u in monomials_of_degree(&presentation.generators, a) {
                        for w in monomials_of_degree(&presentation.generators, b) {
                            let mut row = vec![f.zero(); monomials.len()];
                            for (word, c) in rel {
                                if f.is_zero(c) {
                                    continue;
                                }
                                let mut full = u.clone();
                                full.extend(word.iter().copied());
                                full.extend(w.iter().copied());
                                let idx = index[&full];
                                row[idx] = f.add(&row[idx], c);
                            }
                            rows.push(row);
                        }
                    }
                }
            }
            let span = if rows.is_empty() {
                Matrix::zero(f, 0, monomials.len())
            } else {
                Matrix::from_rows(f, rows)
            };
            let (ideal_rref, pivots) = span.rref();
            let pivot_set: Vec<bool> = {
                let mut s = vec![false; monomials.len()];
                for &p in &pivots {
                    s[p] = true;
                }
                s
            };
            let basis: Vec<usize> =
                (0..monomials.len()).filter(|&m| !pivot_set[m]).collect();
            let basis_pos = basis.iter().copied().zip(0..).collect();
            degrees.push(DegreeData { monomials, index, ideal_rref, pivots, basis, basis_pos });
        }

        let dims: Vec<usize> = degrees.iter().map(|d| d.basis.len()).collect();
        let labels: Vec<Vec<String>> = degrees
            .iter()
            .map(|dd| {
                dd.basis
                    .iter()
                    .map(|&m| format_word(&presentation, &dd.monomials[m]))
                    .collect()
            })
            .collect();
        if dims[0] != 1 {
            return Err(Error::Input(
                "presentation collapses or enlarges degree 0; relations must have positive degree".into(),
            ));
        }

        let mut mult = Vec::with_capacity(bound + 1);
        for d1 in 0..=bound {
            let mut by_d2 = Vec::new();
            for d2 in 0..=bound {
                if d1 + d2 > bound {
                    by_d2.push(Vec::new());
                    continue;
                }
                let target = &degrees[d1 + d2];
                let mut table = Vec::with_capacity(dims[d1]);
                for &mi in &degrees[d1].basis {
                    let u = &degrees[d1].monomials[mi];
                    let mut row = Vec::with_capacity(dims[d2]);
                    for &mj in &degrees[d2].basis {
                        let w = &degrees[d2].monomials[mj];
                        let mut full = u.clone();
                        full.extend(w.iter().copied());
                        let mut vec = vec![f.zero(); target.monomials.len()];
                        vec[target.index[&full]] = f.one();
                        row.push(target.reduce(&f, &vec));
                    }
                    table.push(row);
                }
                by_d2.push(table);
            }
            mult.push(by_d2);
        }

        let algebra = GradedAlgebra {
            field: f,
            bound,
            dims,
            labels,
            unit: vec![f.one()],
            mult,
        };
        Ok(PresentedAlgebra { presentation, algebra, degrees })
    }

    /// Coordinates of a free-algebra word in the quotient basis.
    pub fn word_coords(&self, w: &Word) -> (usize, Vec<Scalar>) {
        let d = self.presentation.word_degree(w);
        assert!(d <= self.algebra.bound, "word degree {d} exceeds bound");
        let dd = &self.degrees[d];
        let f = self.presentation.field;
        let mut v = vec![f.zero(); dd.monomials.len()];
        v[dd.index[w]] = f.one();
        (d, dd.reduce(&f, &v))
    }

    /// Coordinates of a noncommutative polynomial, which must be
    /// homogeneous.
    pub fn poly_coords(&self, p: &NcPoly) -> Result<(usize, Vec<Scalar>)> {
        let d = self.presentation.poly_degree(p)?;
        if d > self.algebra.bound {
            return Err(Error::Input(format!("polynomial degree {d} exceeds bound")));
        }
        let dd = &self.degrees[d];
        let f = self.presentation.field;
        let mut v = vec![f.zero(); dd.monomials.len()];
        for (w, c) in p {
            let idx = dd.index[w];
            v[idx] = f.add(&v[idx], c);
        }
        Ok((d, dd.reduce(&f, &v)))
    }

    /// The basis monomials (as free words) in a given degree.
    pub fn basis_words(&self, d: usize) -> Vec<Word> {
        self.degrees[d]
            .basis
            .iter()
            .map(|&m| self.degrees[d].monomials[m].clone())
            .collect()
    }

    /// Position of a basis word within the degree-`d` basis, if it is one.
    pub fn basis_word_pos(&self, d: usize, w: &Word) -> Option<usize> {
        let m = *self.degrees[d].index.get(w)?;
        self.degrees[d].basis_pos.get(&m).copied()
    }
}

pub fn format_word(p: &Presentation, w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<(usize, usize)> = Vec::new(); // (generator, run length)
    for &g in w {
        match parts.last_mut() {
            Some((h, n)) if *h == g => *n += 1,
            _ => parts.push((g, 1)),
        }
    }
    parts
        .iter()
        .map(|&(g, n)| {
            let label = &p.generators[g].0;
            if n == 1 {
                label.clone()
            } else {
                format!("{label}^{n}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Convenience: a polynomial ring in one variable `label` of degree 1.
pub fn polynomial_one_var(field: Field, label: &str, bound: usize) -> Result<PresentedAlgebra> {
    PresentedAlgebra::build(
        Presentation {
            field,
            generators: vec![(label.to_string(), 1)],
            relations: vec![],
        },
        bound,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn free_monomial_count() {
        let gens = vec![("x".into(), 1), ("y".into(), 1)];
        assert_eq!(monomials_of_degree(&gens, 3).len(), 8);
        assert_eq!(monomials_of_degree(&gens, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn commutative_polynomial_ring_dims() {
        // k[x,y]: Hilbert series 1/(1-t)^2, so dim in degree d is d+1.
        let f = q();
        let p = Presentation {
            field: f,
            generators: vec![("x".into(), 1), ("y".into(), 1)],
            relations: vec![vec![
                (vec![0, 1], f.one()),
                (vec![1, 0], f.from_i64(-1)),
            ]],
        };
        let a = PresentedAlgebra::build(p, 5).unwrap();
        assert_eq!(a.algebra.dims, vec![1, 2, 3, 4, 5, 6]);
        a.algebra.validate().unwrap();
    }

    #[test]
    fn quantum_plane_dims_and_relation() {
        // yx = q xy with q = 2 over F7 has the same Hilbert series as k[x,y].
        let f = Field::prime(7).unwrap();
        let p = Presentation {
            field: f,
            generators: vec![("x".into(), 1), ("y".into(), 1)],
            relations: vec![vec![
                (vec![1, 0], f.one()),
                (vec![0, 1], f.from_i64(-2)),
            ]],
        };
        let a = PresentedAlgebra::build(p, 4).unwrap();
        assert_eq!(a.algebra.dims, vec![1, 2, 3, 4, 5]);
        // yx and 2*xy agree in the quotient.
        let (d1, yx) = a.word_coords(&vec![1, 0]);
        let (d2, xy) = a.word_coords(&vec![0, 1]);
        assert_eq!((d1, d2), (2, 2));
        let two_xy: Vec<Scalar> = xy.iter().map(|c| f.mul(c, &f.from_i64(2))).collect();
        assert_eq!(yx, two_xy);
        a.algebra.validate().unwrap();
    }

    #[test]
    fn exterior_algebra_dims() {
        // k<x>/(x^2): dims 1,1,0,0,...
        let f = q();
        let p = Presentation {
            field: f,
            generators: vec![("x".into(), 1)],
            relations: vec![vec![(vec![0, 0], f.one())]],
        };
        let a = PresentedAlgebra::build(p, 4).unwrap();
        assert_eq!(a.algebra.dims, vec![1, 1, 0, 0, 0]);
        a.algebra.validate().unwrap();
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let f = q();
        let p = Presentation {
            field: f,
            generators: vec![("x".into(), 1)],
            relations: vec![vec![(vec![0, 0], f.one()), (vec![0], f.one())]],
        };
        assert!(PresentedAlgebra::build(p, 3).is_err());
    }

    #[test]
    fn weighted_generator_degrees() {
        // k[x] with |x| = 2: dims 1,0,1,0,1.
        let f = q();
        let p = Presentation {
            field: f,
            generators: vec![("x".into(), 2)],
            relations: vec![],
        };
        let a = PresentedAlgebra::build(p, 4).unwrap();
        assert_eq!(a.algebra.dims, vec![1, 0, 1, 0, 1]);
    }

    #[test]
    fn word_formatting() {
        let p = Presentation {
            field: q(),
            generators: vec![("x".into(), 1), ("y".into(), 1)],
            relations: vec![],
        };
        assert_eq!(format_word(&p, &vec![]), "1");
        assert_eq!(format_word(&p, &vec![0, 0, 1]), "x^2*y");
    }
}
