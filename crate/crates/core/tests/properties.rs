//! Property tests for the exact linear algebra kernel and the
//! presented-algebra normal forms.

use proptest::prelude::*;

use takeuchi::field::Field;
use takeuchi::gralg::{Presentation, PresentedAlgebra};
use takeuchi::matrix::Matrix;

fn small_matrix(field: Field) -> impl Strategy<Value = Matrix> {
    (1usize..5, 1usize..5).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-6i64..7, r * c).prop_map(move |data| {
            let rows = data
                .chunks(c)
                .map(|row| row.iter().map(|&x| field.from_i64(x)).collect())
                .collect();
            Matrix::from_rows(field, rows)
        })
    })
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::prime(7).unwrap())]
}

proptest! {
    #[test]
    fn rref_preserves_row_space(m in fields().prop_flat_map(small_matrix)) {
        let f = m.field;
        let r = m.rref().0;
        // mutual solve on generators: each row of one lies in the row
        // space of the other.
        let mt = m.transpose();
        let rt = r.transpose();
        for i in 0..r.rows {
            let row = r.row(i);
            if row.iter().all(|c| f.is_zero(c)) {
                continue;
            }
            prop_assert!(mt.solve(&row).is_some(), "rref row {i} left the row space");
        }
        for i in 0..m.rows {
            prop_assert!(rt.solve(&m.row(i)).is_some(), "original row {i} lost by rref");
        }
    }

    #[test]
    fn rref_is_idempotent(m in fields().prop_flat_map(small_matrix)) {
        let r = m.rref().0;
        prop_assert_eq!(r.rref().0, r);
    }

    #[test]
    fn kernel_vectors_are_annihilated_and_independent(m in fields().prop_flat_map(small_matrix)) {
        let f = m.field;
        let kernel = m.kernel_basis();
        for v in &kernel {
            prop_assert!(m.apply(v).iter().all(|c| f.is_zero(c)));
        }
        if !kernel.is_empty() {
            let k = Matrix::from_cols(f, m.cols, &kernel);
            prop_assert_eq!(k.rank(), kernel.len());
        }
        prop_assert_eq!(m.rank() + kernel.len(), m.cols);
    }

    #[test]
    fn solve_is_consistent_on_images(
        m in fields().prop_flat_map(small_matrix),
        xs in proptest::collection::vec(-6i64..7, 4),
    ) {
        let f = m.field;
        let x: Vec<_> = (0..m.cols).map(|j| f.from_i64(xs[j % xs.len()])).collect();
        let b = m.apply(&x);
        let x2 = m.solve(&b);
        prop_assert!(x2.is_some(), "solve failed on an image vector");
        prop_assert_eq!(m.apply(&x2.unwrap()), b);
    }

    #[test]
    fn inverse_is_a_left_inverse(m in fields().prop_flat_map(small_matrix)) {
        if m.rows == m.cols {
            if let Ok(inv) = m.inverse() {
                prop_assert_eq!(inv.mul(&m), Matrix::identity(m.field, m.rows));
            }
        }
    }
}

fn quantum_plane(field: Field, q: i64, bound: usize) -> PresentedAlgebra {
    PresentedAlgebra::build(
        Presentation {
            field,
            generators: vec![("x".into(), 1), ("y".into(), 1)],
            relations: vec![vec![
                (vec![0, 1], field.one()),
                (vec![1, 0], field.from_i64(-q)),
            ]],
        },
        bound,
    )
    .unwrap()
}

proptest! {
    #[test]
    fn normal_form_is_idempotent(word in proptest::collection::vec(0usize..2, 1..5)) {
        // a basis word reduces to itself, so reduction is idempotent on
        // arbitrary words
        let f = Field::prime(7).unwrap();
        let alg = quantum_plane(f, 2, 6);
        let (d, coords) = alg.word_coords(&word);
        let basis = alg.basis_words(d);
        let mut again = vec![f.zero(); coords.len()];
        for (i, c) in coords.iter().enumerate() {
            let (_, nf) = alg.word_coords(&basis[i]);
            for (k, v) in nf.iter().enumerate() {
                again[k] = f.add(&again[k], &f.mul(c, v));
            }
        }
        prop_assert_eq!(again, coords);
    }

    #[test]
    fn free_algebra_counts_words(d in 1usize..6) {
        let f = Field::Rationals;
        let alg = PresentedAlgebra::build(
            Presentation {
                field: f,
                generators: vec![("x".into(), 1), ("y".into(), 1)],
                relations: vec![],
            },
            6,
        )
        .unwrap();
        prop_assert_eq!(alg.algebra.dim(d), 1 << d);
    }
}
