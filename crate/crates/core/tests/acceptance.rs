//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line and enforcing its runtime budget.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use takeuchi::extalg::{bar_ext_oracle, tor_decomposition_check, verify_ext_theorem};
use takeuchi::field::Field;
use takeuchi::gralg::{GradedAlgebra, Presentation, PresentedAlgebra};
use takeuchi::hopf::{ActionData, CoactionData, HopfData};
use takeuchi::matrix::Matrix;
use takeuchi::module::{EquivariantModule, GradedModule, HopfModule, Side};
use takeuchi::regular::{
    as_regular_check, nakayama_smash_check, regularity_smash_check, trivial_right_module,
    RegularityVerdict,
};
use takeuchi::resolve::minimal_resolution;
use takeuchi::smash::{hopf_as_degree_zero_algebra, ore_extension, smash_module_15, smash_module_16, smash_module_left, smash_module_right, SmashAlgebra};

fn one_var(field: Field, label: &str, bound: usize) -> PresentedAlgebra {
    PresentedAlgebra::build(
        Presentation { field, generators: vec![(label.into(), 1)], relations: vec![] },
        bound,
    )
    .unwrap()
}

fn two_var_relation(field: Field, q: i64, bound: usize) -> GradedAlgebra {
    PresentedAlgebra::build(
        Presentation {
            field,
            generators: vec![("x".into(), 1), ("y".into(), 1)],
            relations: vec![vec![(vec![0, 1], field.one()), (vec![1, 0], field.from_i64(-q))]],
        },
        bound,
    )
    .unwrap()
    .algebra
}

fn dual_numbers(field: Field, bound: usize) -> GradedAlgebra {
    PresentedAlgebra::build(
        Presentation {
            field,
            generators: vec![("x".into(), 1)],
            relations: vec![vec![(vec![0, 0], field.one())]],
        },
        bound,
    )
    .unwrap()
    .algebra
}

/// The quantum-plane smash datum: `A = k[x]`, `B = k[y]`, `H = kC_n`
/// acting by `g |> x = q x` and cograding `rho(y) = g (x) y`.
fn quantum_plane_smash(field: Field, q: i64, order: usize, bound: usize) -> SmashAlgebra {
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

fn trivial_smash(field: Field, bound: usize) -> SmashAlgebra {
    let h = HopfData::trivial(field);
    let a = one_var(field, "x", bound);
    let b = one_var(field, "y", bound);
    let action = ActionData::trivial(&h, &a.algebra.dims);
    let coaction = CoactionData::trivial(&h, &b.algebra.dims);
    SmashAlgebra::build(a.algebra, action, b.algebra, coaction, h, bound).unwrap()
}

fn skew_group_smash(field: Field, bound: usize) -> SmashAlgebra {
    let h = HopfData::cyclic_group_algebra(field, 2).unwrap();
    let a = one_var(field, "x", bound);
    let action =
        ActionData::extend(&h, &a, &[vec![vec![field.one()]], vec![vec![field.from_i64(-1)]]])
            .unwrap();
    let b = hopf_as_degree_zero_algebra(&h, bound);
    let coaction = CoactionData::regular(&h, bound);
    SmashAlgebra::build(a.algebra, action, b, coaction, h, bound).unwrap()
}

fn finish(name: &str, start: Instant, budget: Duration, ok: bool, detail: &str) {
    let elapsed = start.elapsed();
    let verdict = if ok && elapsed <= budget { "PASS" } else { "FAIL" };
    println!("[{verdict}] {name}: {detail} ({elapsed:.2?} of {budget:?} budget)");
    assert!(ok, "{name}: {detail}");
    assert!(elapsed <= budget, "{name}: exceeded {budget:?} budget ({elapsed:.2?})");
}

#[test]
fn criterion_1_kunneth_sanity() {
    let start = Instant::now();
    let f = Field::Rationals;
    let s = trivial_smash(f, 6);
    let m = EquivariantModule::trivial(&s.a, &s.hopf, Side::Right, &[f.one()]);
    let x = HopfModule::trivial(&s.b, &s.hopf, Side::Right, &[f.one()]);
    let out = verify_ext_theorem(&s, &m, &x, 3, 6).unwrap();
    let dims: BTreeMap<(usize, i64), usize> =
        out.dim_table.iter().map(|&(n, d, a, _)| ((n, d), a)).collect();
    let expect: BTreeMap<(usize, i64), usize> =
        [((0, 0), 1), ((1, 1), 2), ((2, 2), 1)].into_iter().collect();
    let ok = out.passed() && dims == expect;
    finish(
        "criterion 1 (Kunneth sanity, trivial H)",
        start,
        Duration::from_secs(5),
        ok,
        &format!("dims 1;2;1, phi bijective and multiplicative on {} pairs", out.pairs_checked),
    );
}

#[test]
fn criterion_2_ext_theorem_quantum_plane() {
    let start = Instant::now();
    let f = Field::prime(7).unwrap();
    let s = quantum_plane_smash(f, -1, 2, 6);
    let m = EquivariantModule::trivial(&s.a, &s.hopf, Side::Right, &[f.one()]);
    let x = HopfModule::trivial(&s.b, &s.hopf, Side::Right, &[f.one()]);
    let out = verify_ext_theorem(&s, &m, &x, 3, 6).unwrap();
    let dims: BTreeMap<(usize, i64), usize> =
        out.dim_table.iter().map(|&(n, d, a, _)| ((n, d), a)).collect();
    let expect: BTreeMap<(usize, i64), usize> =
        [((0, 0), 1), ((1, 1), 2), ((2, 2), 1)].into_iter().collect();
    let ok = out.passed() && dims == expect;
    finish(
        "criterion 2 (Ext theorem, quantum plane over F7)",
        start,
        Duration::from_secs(30),
        ok,
        &format!("dims match, phi bijective, multiplicative on {} pairs", out.pairs_checked),
    );
}

#[test]
fn criterion_3_ext_theorem_skew_group() {
    let start = Instant::now();
    let f = Field::Rationals;
    let s = skew_group_smash(f, 6);
    let m = EquivariantModule::trivial(&s.a, &s.hopf, Side::Right, &[f.one()]);
    let x = HopfModule::regular(&s.b, &s.coaction, Side::Right);
    let out = verify_ext_theorem(&s, &m, &x, 3, 6).unwrap();
    let dims: BTreeMap<(usize, i64), usize> =
        out.dim_table.iter().map(|&(n, d, a, _)| ((n, d), a)).collect();
    let expect: BTreeMap<(usize, i64), usize> = [((0, 0), 2), ((1, 1), 2)].into_iter().collect();
    let ok = out.passed() && dims == expect;
    finish(
        "criterion 3 (Ext theorem, skew group datum)",
        start,
        Duration::from_secs(30),
        ok,
        "Ext_{A#B}(k#B, k#B) = Ext_A(k,k) # kC2, dims 2;2",
    );
}

#[test]
fn criterion_4_oracle_equivalence() {
    let start = Instant::now();
    let q = Field::Rationals;
    let f7 = Field::prime(7).unwrap();
    let algebras: Vec<(&str, GradedAlgebra)> = vec![
        ("k[x]", one_var(q, "x", 6).algebra),
        ("k[x,y]", two_var_relation(q, 1, 6)),
        ("quantum plane q=-1", two_var_relation(f7, -1, 6)),
        ("quantum plane q=2", two_var_relation(f7, 2, 6)),
        ("k<x>/(x^2)", dual_numbers(f7, 6)),
    ];
    let mut ok = true;
    let mut pairs = 0;
    let mut detail = String::new();
    for (name, alg) in &algebras {
        let out = bar_ext_oracle(alg, 3, 6).unwrap();
        if !(out.dims_match && out.products_match) {
            ok = false;
            detail.push_str(&format!("{name} disagrees with the cobar oracle; "));
        }
        pairs += out.pairs_checked;
    }
    if detail.is_empty() {
        detail = format!(
            "dims and all {} pairwise products agree with the cobar oracle on 5 algebras",
            pairs
        );
    }
    finish(
        "criterion 4 (minimal vs cobar oracle)",
        start,
        Duration::from_secs(60),
        ok,
        &detail,
    );
}

#[test]
fn criterion_5_regularity_transfer() {
    let start = Instant::now();
    let f = Field::prime(7).unwrap();
    // (a) the quantum-plane datum
    let s = quantum_plane_smash(f, -1, 2, 8);
    let out = regularity_smash_check(&s, 4, 8).unwrap();
    let ok_a = out.passed()
        && out.cert_smash.d == Some(2)
        && out.cert_a.d == Some(1)
        && out.cert_b.d == Some(1)
        && out.cert_smash.as_index == Some(2);
    // (b) the Ore extension k[u][x; sigma], sigma(u) = 2u
    let base = one_var(f, "u", 8);
    let ore = ore_extension(&base, &[vec![f.from_i64(2)]], &[vec![f.zero()]], 8).unwrap();
    let cert = as_regular_check(&ore.algebra, 4, 8).unwrap();
    let ok_b = cert.certified() && cert.d == Some(2) && cert.as_index == Some(2);
    finish(
        "criterion 5 (AS-regularity transfer)",
        start,
        Duration::from_secs(60),
        ok_a && ok_b,
        "quantum-plane datum and Ore extension both certified with d = 2 = 1+1, l = 2",
    );
}

#[test]
fn criterion_6_nakayama_two_routes() {
    let start = Instant::now();
    let f = Field::prime(7).unwrap();
    let qp2 = nakayama_smash_check(&quantum_plane_smash(f, 2, 6, 8), 4, 8).unwrap();
    let qpm1 = nakayama_smash_check(&quantum_plane_smash(f, -1, 2, 8), 4, 8).unwrap();
    let triv = nakayama_smash_check(&trivial_smash(Field::Rationals, 8), 4, 8).unwrap();
    let ok = qp2.matches
        && qpm1.matches
        && triv.matches
        && triv.mu_direct == Matrix::identity(Field::Rationals, 2);
    finish(
        "criterion 6 (two-route Nakayama)",
        start,
        Duration::from_secs(60),
        ok,
        "formula route equals Frobenius route for q = 2, q = -1, and the trivial tensor case",
    );
}

#[test]
fn criterion_7_tor_decomposition() {
    let start = Instant::now();
    let f = Field::prime(7).unwrap();
    let s = quantum_plane_smash(f, -1, 2, 6);
    let m = EquivariantModule::trivial(&s.a, &s.hopf, Side::Right, &[f.one()]);
    let x = HopfModule::trivial(&s.b, &s.hopf, Side::Right, &[f.one()]);
    let n_left = EquivariantModule::trivial(&s.a, &s.hopf, Side::Left, &[f.one()]);
    let y_left = GradedModule::trivial(&s.b, Side::Left, &[f.one()]);
    let out = tor_decomposition_check(&s, &m, &x, &n_left, &y_left, 3, 6).unwrap();
    let ok_trivial = out.dims_match
        && out.total.get(&(0, 0)) == Some(&1)
        && out.total.get(&(1, 1)) == Some(&2)
        && out.total.get(&(2, 2)) == Some(&1);
    // flat factor: N = A kills the higher Tor in the A direction
    let n_flat = EquivariantModule::regular(&s.a, &s.action, Side::Left);
    let flat = tor_decomposition_check(&s, &m, &x, &n_flat, &y_left, 3, 6).unwrap();
    let ok_flat = flat.dims_match && flat.total.keys().all(|&(n, _)| n <= 1);
    finish(
        "criterion 7 (Tor decomposition)",
        start,
        Duration::from_secs(30),
        ok_trivial && ok_flat,
        "trivial-module dims 1;2;1 and the flat-factor case both decompose",
    );
}

#[test]
fn criterion_8_structural_suite() {
    let start = Instant::now();
    let f7 = Field::prime(7).unwrap();
    let q = Field::Rationals;
    let mut ok = true;
    let mut problems = String::new();
    let mut check = |label: &str, r: takeuchi::Result<()>| {
        if let Err(e) = r {
            ok = false;
            problems.push_str(&format!("{label}: {e}; "));
        }
    };

    // associativity and the twisted-tensor law for every smash algebra
    // appearing in criteria 1-7
    let smashes: Vec<(&str, SmashAlgebra)> = vec![
        ("trivial", trivial_smash(q, 6)),
        ("quantum plane q=-1", quantum_plane_smash(f7, -1, 2, 6)),
        ("quantum plane q=2", quantum_plane_smash(f7, 2, 6, 6)),
        ("skew group", skew_group_smash(q, 6)),
    ];
    for (name, s) in &smashes {
        check(&format!("associativity [{name}]"), s.algebra.validate());
        check(&format!("twisted tensor [{name}]"), s.twisted_tensor_check());
        check(&format!("freeness [{name}]"), s.freeness_isomorphism());
    }

    // the four induced module structures on the quantum-plane datum
    let s = &smashes[1].1;
    let m = EquivariantModule::trivial(&s.a, &s.hopf, Side::Right, &[f7.one()]);
    let x = HopfModule::trivial(&s.b, &s.hopf, Side::Right, &[f7.one()]);
    let n = GradedModule::trivial(&s.a, Side::Right, &[f7.one()]);
    let y = HopfModule::trivial(&s.b, &s.hopf, Side::Right, &[f7.one()]);
    check("module (1.4)", smash_module_right(s, &m, &x).and_then(|mm| mm.validate(&s.algebra)));
    let n_left = EquivariantModule::trivial(&s.a, &s.hopf, Side::Left, &[f7.one()]);
    let y_left = GradedModule::trivial(&s.b, Side::Left, &[f7.one()]);
    check("module (1.3)", smash_module_left(s, &n_left, &y_left).and_then(|mm| mm.validate(&s.algebra)));
    check("module (1.5)", smash_module_15(s, &n, &y).and_then(|mm| mm.validate(&s.algebra)));
    let n16 = GradedModule::trivial(&s.a, Side::Left, &[f7.one()]);
    let y16 = HopfModule::trivial(&s.b, &s.hopf, Side::Left, &[f7.one()]);
    check("module (1.6)", smash_module_16(s, &n16, &y16).and_then(|mm| mm.validate(&s.algebra)));

    // Hopf validators
    check("kC2", HopfData::cyclic_group_algebra(q, 2).and_then(|h| h.validate()));
    check("kC3", HopfData::cyclic_group_algebra(q, 3).and_then(|h| h.validate()));
    check("S3", HopfData::symmetric_group_s3(q).and_then(|h| h.validate()));
    let sw = HopfData::sweedler(q).unwrap();
    check("Sweedler", sw.validate());
    let s2 = sw.antipode.mul(&sw.antipode);
    let id4 = Matrix::identity(q, 4);
    check(
        "Sweedler antipode order 4",
        if s2 != id4 && s2.mul(&s2) == id4 {
            Ok(())
        } else {
            Err(takeuchi::Error::Math("S^2 = id or S^4 != id".into()))
        },
    );

    // every resolution: d^2 = 0 and the Euler identity (the skew-group
    // smash is not connected; its resolutions are the equivariant ones
    // validated inside the criterion-3 pipeline)
    for (name, s) in smashes.iter().filter(|(_, s)| s.algebra.is_connected()) {
        let alg = &s.algebra;
        let k_mod = trivial_right_module(alg);
        check(
            &format!("resolution [{name}]"),
            minimal_resolution(alg, &k_mod, 3, 6).and_then(|r| r.validate(alg, &k_mod)),
        );
    }

    if problems.is_empty() {
        problems = "associativity, freeness, module axioms, Hopf axioms and resolutions all hold".into();
    }
    finish(
        "criterion 8 (structural suite)",
        start,
        Duration::from_secs(120),
        ok,
        &problems,
    );
}

#[test]
fn criterion_9_negative_controls() {
    let start = Instant::now();
    let f = Field::prime(7).unwrap();

    // corrupted structure constants
    let mut broken = two_var_relation(f, 2, 6);
    broken.mult[1][1][0][1][0] = f.add(&broken.mult[1][1][0][1][0], &f.one());
    let ok_corrupt = broken.validate().is_err();

    // the C2 swap on the q = 2 plane does not preserve the relation
    let plane = PresentedAlgebra::build(
        Presentation {
            field: f,
            generators: vec![("x".into(), 1), ("y".into(), 1)],
            relations: vec![vec![(vec![0, 1], f.one()), (vec![1, 0], f.from_i64(-2))]],
        },
        6,
    )
    .unwrap();
    let h = HopfData::cyclic_group_algebra(f, 2).unwrap();
    let swap = vec![
        vec![vec![f.one(), f.zero()], vec![f.zero(), f.one()]],
        vec![vec![f.zero(), f.one()], vec![f.one(), f.zero()]],
    ];
    let ok_swap = ActionData::extend(&h, &plane, &swap).is_err();

    // k<x>/(x^2) is not AS-regular
    let cert = as_regular_check(&dual_numbers(f, 6), 4, 6).unwrap();
    let ok_refute = cert.verdict == RegularityVerdict::Refuted;

    finish(
        "criterion 9 (negative controls)",
        start,
        Duration::from_secs(10),
        ok_corrupt && ok_swap && ok_refute,
        "corrupted constants, non-stable swap action, and k<x>/(x^2) all rejected",
    );
}
