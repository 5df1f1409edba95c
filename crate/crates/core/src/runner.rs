//! Builds the entities described by a job and dispatches its command
//! into the computation modules, collecting verdicts into a report.

use std::collections::BTreeMap;
use std::time::Instant;

use serde_json::json;

use crate::error::{Error, Result};
use crate::extalg::{tor_decomposition_check, verify_ext_theorem, ExtComputation};
use crate::field::{Field, Scalar};
use crate::gralg::{GradedAlgebra, Presentation, PresentedAlgebra};
use crate::hopf::{ActionData, CoactionData, HopfData};
use crate::job::{FieldSpec, HopfSpec, JobSpec, ModuleKind};
use crate::module::{EquivariantModule, GradedModule, HopfModule, Side};
use crate::regular::{as_regular_check, nakayama_smash_check, trivial_right_module, RegularityVerdict};
use crate::report::{dims_json, matrix_json, Report, Verdict};
use crate::resolve::minimal_resolution;
use crate::smash::SmashAlgebra;

pub struct Entities {
    pub field: Field,
    pub algebras: BTreeMap<String, PresentedAlgebra>,
    pub hopf: BTreeMap<String, HopfData>,
    pub actions: BTreeMap<String, (String, String, ActionData)>,
    pub coactions: BTreeMap<String, (String, String, CoactionData)>,
    pub smash: Option<SmashAlgebra>,
}

fn parse_scalars(field: &Field, rows: &[Vec<String>]) -> Result<Vec<Vec<Scalar>>> {
    rows.iter()
        .map(|r| r.iter().map(|s| field.parse(s)).collect())
        .collect()
}

pub fn build_entities(job: &JobSpec) -> Result<Entities> {
    let field = match job.field {
        FieldSpec::Rationals => Field::rationals(),
        FieldSpec::Prime { p } => Field::prime(p)?,
    };
    let bound = job.bounds.1;
    let mut algebras = BTreeMap::new();
    for (name, spec) in &job.algebras {
        let relations = spec
            .relations
            .iter()
            .map(|rel| {
                rel.iter()
                    .map(|t| Ok((t.word.clone(), field.parse(&t.coeff)?)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let pres = Presentation {
            field,
            generators: spec.generators.clone(),
            relations,
        };
        let alg = PresentedAlgebra::build(pres, bound)
            .map_err(|e| Error::Input(format!("algebra {name}: {e}")))?;
        algebras.insert(name.clone(), alg);
    }
    let mut hopf = BTreeMap::new();
    for (name, spec) in &job.hopf {
        let h = match spec {
            HopfSpec::Trivial => HopfData::trivial(field),
            HopfSpec::Cyclic { order } => HopfData::cyclic_group_algebra(field, *order)?,
            HopfSpec::SymmetricS3 => HopfData::symmetric_group_s3(field)?,
            HopfSpec::Sweedler => HopfData::sweedler(field)?,
        };
        hopf.insert(name.clone(), h);
    }
    let mut actions = BTreeMap::new();
    for (name, spec) in &job.actions {
        let h = &hopf[&spec.hopf];
        let alg = &algebras[&spec.algebra];
        let data = match &spec.gen_data {
            None => ActionData::trivial(h, &alg.algebra.dims),
            Some(rows) => {
                let images = rows
                    .iter()
                    .map(|per_h| parse_scalars(&field, per_h))
                    .collect::<Result<Vec<_>>>()?;
                ActionData::extend(h, alg, &images)
                    .map_err(|e| Error::Input(format!("action {name}: {e}")))?
            }
        };
        actions.insert(name.clone(), (spec.hopf.clone(), spec.algebra.clone(), data));
    }
    let mut coactions = BTreeMap::new();
    for (name, spec) in &job.coactions {
        let h = &hopf[&spec.hopf];
        let alg = &algebras[&spec.algebra];
        let data = match &spec.gen_data {
            None => CoactionData::trivial(h, &alg.algebra.dims),
            Some(rows) => {
                let comps = rows
                    .iter()
                    .map(|per_h| parse_scalars(&field, per_h))
                    .collect::<Result<Vec<_>>>()?;
                CoactionData::extend(h, alg, &comps)
                    .map_err(|e| Error::Input(format!("coaction {name}: {e}")))?
            }
        };
        coactions.insert(name.clone(), (spec.hopf.clone(), spec.algebra.clone(), data));
    }
    let smash = match &job.smash {
        None => None,
        Some(s) => {
            let a = algebras[&s.a].algebra.clone();
            let b = algebras[&s.b].algebra.clone();
            let h = hopf[&actions[&s.action].0].clone();
            let action = actions[&s.action].2.clone();
            let coaction = coactions[&s.coaction].2.clone();
            Some(
                SmashAlgebra::build(a, action, b, coaction, h, bound)
                    .map_err(|e| Error::Input(format!("smash datum: {e}")))?,
            )
        }
    };
    Ok(Entities {
        field,
        algebras,
        hopf,
        actions,
        coactions,
        smash,
    })
}

/// The algebra a single-algebra command operates on: the named target,
/// or the smash product when a smash datum is the only thing given.
fn target_algebra<'a>(job: &JobSpec, ents: &'a Entities) -> Result<&'a GradedAlgebra> {
    if let Some(t) = &job.target {
        return Ok(&ents.algebras[t].algebra);
    }
    ents.smash
        .as_ref()
        .map(|s| &s.algebra)
        .ok_or_else(|| Error::Input("no target algebra and no smash datum".into()))
}

fn theorem_modules(
    job: &JobSpec,
    s: &SmashAlgebra,
) -> Result<(EquivariantModule, HopfModule)> {
    let f = s.algebra.field;
    let m = match job.module_m {
        ModuleKind::Trivial => EquivariantModule::trivial(&s.a, &s.hopf, Side::Right, &[f.one()]),
        ModuleKind::Regular => EquivariantModule::regular(&s.a, &s.action, Side::Right),
    };
    let x = match job.module_x {
        ModuleKind::Trivial => HopfModule::trivial(&s.b, &s.hopf, Side::Right, &[f.one()]),
        ModuleKind::Regular => HopfModule::regular(&s.b, &s.coaction, Side::Right),
    };
    Ok((m, x))
}

/// Runs a validated job; all command handling is deterministic given
/// the job, apart from the wall-clock fields of the report.
pub fn run(job: &JobSpec) -> Result<Report> {
    let (n_bound, d_bound) = job.bounds;
    let mut report = Report::new(&job.command, job.bounds);
    let t0 = Instant::now();
    let ents = build_entities(job)?;
    report
        .wall_clock_ms
        .insert("build".into(), t0.elapsed().as_millis());

    let t1 = Instant::now();
    match job.command.as_str() {
        "validate" => {
            for (name, alg) in &ents.algebras {
                match alg.algebra.validate() {
                    Ok(()) => report.pass(&format!("algebra:{name}"), "unit and associativity hold"),
                    Err(e) => report.fail(&format!("algebra:{name}"), e.to_string()),
                }
            }
            for (name, h) in &ents.hopf {
                match h.validate() {
                    Ok(()) => report.pass(&format!("hopf:{name}"), "bialgebra and antipode axioms hold"),
                    Err(e) => report.fail(&format!("hopf:{name}"), e.to_string()),
                }
            }
            for (name, (hn, an, data)) in &ents.actions {
                match data.validate(&ents.hopf[hn], &ents.algebras[an].algebra) {
                    Ok(()) => report.pass(&format!("action:{name}"), "module-algebra axioms hold"),
                    Err(e) => report.fail(&format!("action:{name}"), e.to_string()),
                }
            }
            for (name, (hn, an, data)) in &ents.coactions {
                match data.validate(&ents.hopf[hn], &ents.algebras[an].algebra) {
                    Ok(()) => report.pass(&format!("coaction:{name}"), "comodule-algebra axioms hold"),
                    Err(e) => report.fail(&format!("coaction:{name}"), e.to_string()),
                }
            }
            if let Some(s) = &ents.smash {
                match s.twisted_tensor_check() {
                    Ok(()) => report.pass("smash:product", "twisted-tensor multiplication law holds"),
                    Err(e) => report.fail("smash:product", e.to_string()),
                }
                match s.freeness_isomorphism() {
                    Ok(()) => report.pass("smash:freeness", "A # B is free over both factors"),
                    Err(e) => report.fail("smash:freeness", e.to_string()),
                }
            }
        }
        "smash" => {
            let s = ents.smash.as_ref().unwrap();
            match s.algebra.validate() {
                Ok(()) => report.pass("associative", "smash product is associative to the bound"),
                Err(e) => report.fail("associative", e.to_string()),
            }
            match s.freeness_isomorphism() {
                Ok(()) => report.pass("freeness", "A # B is free over both factors"),
                Err(e) => report.fail("freeness", e.to_string()),
            }
            report.table("dims", json!(s.algebra.dims));
        }
        "resolve" => {
            let alg = target_algebra(job, &ents)?;
            let k_mod = trivial_right_module(alg);
            let res = minimal_resolution(alg, &k_mod, n_bound, d_bound)?;
            match res.validate(alg, &k_mod) {
                Ok(()) => report.pass("complex", "d^2 = 0 and the Euler identity hold"),
                Err(e) => report.fail("complex", e.to_string()),
            }
            report.assert(
                "terminated",
                res.terminated,
                if res.terminated {
                    format!("resolution terminates at length {}", res.levels.len() - 1)
                } else {
                    format!("resolution still open at homological bound {n_bound}")
                },
            );
            report.table(
                "generator_degrees",
                json!(res
                    .levels
                    .iter()
                    .map(|l| l.gen_degrees.clone())
                    .collect::<Vec<_>>()),
            );
        }
        "ext" => {
            let alg = target_algebra(job, &ents)?;
            let k_mod = trivial_right_module(alg);
            let res = minimal_resolution(alg, &k_mod, n_bound, d_bound)?;
            let ext = ExtComputation::new(alg, &res, &k_mod, n_bound)?;
            let products = ext.product_table()?;
            report.pass(
                "computed",
                format!(
                    "{} classes, {} products",
                    ext.classes.len(),
                    products.len()
                ),
            );
            report.table("dims", dims_json(&ext.dims()));
        }
        "verify-ext-theorem" => {
            let s = ents.smash.as_ref().unwrap();
            let (m, x) = theorem_modules(job, s)?;
            let out = verify_ext_theorem(s, &m, &x, n_bound, d_bound)?;
            report.assert(
                "dims",
                out.dims_match,
                "bigraded dims of Ext over A#B match the smash of the factors",
            );
            report.assert("phi-bijective", out.phi_bijective, "phi is bijective per bidegree");
            report.assert(
                "phi-multiplicative",
                out.multiplicative,
                format!("checked {} composable pairs", out.pairs_checked),
            );
            report.assert("unit", out.unit_preserved, "phi preserves the unit");
            report.table(
                "dim_table",
                json!(out
                    .dim_table
                    .iter()
                    .map(|&(n, d, l, r)| json!({"n": n, "delta": d, "smash": l, "factors": r}))
                    .collect::<Vec<_>>()),
            );
        }
        "tor-check" => {
            let s = ents.smash.as_ref().unwrap();
            let f = s.algebra.field;
            let (m, x) = theorem_modules(job, s)?;
            let n_left = EquivariantModule::trivial(&s.a, &s.hopf, Side::Left, &[f.one()]);
            let y_left = GradedModule::trivial(&s.b, Side::Left, &[f.one()]);
            let out = tor_decomposition_check(s, &m, &x, &n_left, &y_left, n_bound, d_bound)?;
            report.assert(
                "dims",
                out.dims_match,
                "Tor over A#B matches the product of the factor Tors",
            );
            let tor_json = |dims: &BTreeMap<(usize, usize), usize>| {
                json!(dims
                    .iter()
                    .map(|(&(n, t), &v)| json!({"n": n, "t": t, "dim": v}))
                    .collect::<Vec<_>>())
            };
            report.table("total", tor_json(&out.total));
            report.table("expected", tor_json(&out.expected));
        }
        "as-regular" => {
            let alg = target_algebra(job, &ents)?;
            let cert = as_regular_check(alg, n_bound, d_bound)?;
            let verdict = match cert.verdict {
                RegularityVerdict::Certified => Verdict::Pass,
                RegularityVerdict::Refuted => Verdict::Fail,
                RegularityVerdict::Inconclusive => Verdict::Inconclusive,
            };
            let message = match cert.verdict {
                RegularityVerdict::Certified => format!(
                    "AS-regular within bounds: d = {}, AS-index l = {}",
                    cert.d.unwrap(),
                    cert.as_index.unwrap()
                ),
                RegularityVerdict::Refuted => "Gorenstein condition violated within bounds".into(),
                RegularityVerdict::Inconclusive => "bounds too small to decide".into(),
            };
            report.check("as-regular", verdict, message);
            report.table("ext_dims", dims_json(&cert.ext_dims));
        }
        "nakayama" => {
            let s = ents.smash.as_ref().unwrap();
            let out = nakayama_smash_check(s, n_bound, d_bound)?;
            report.assert(
                "routes-agree",
                out.matches,
                "direct Frobenius route equals the smash formula on degree 1",
            );
            report.assert(
                "degree-one-generated",
                out.degree_one_generated,
                "all three algebras are generated in degree 1 (noetherianity assumed)",
            );
            report.table("mu_direct", matrix_json(&out.mu_direct));
            report.table("mu_formula", matrix_json(&out.mu_formula));
            report.table(
                "hdet",
                json!(out.hdet.iter().map(|c| ents.field.format(c)).collect::<Vec<_>>()),
            );
            report.table(
                "hcodet",
                json!(out.hcodet.iter().map(|c| ents.field.format(c)).collect::<Vec<_>>()),
            );
        }
        other => return Err(Error::Input(format!("unknown command {other:?}"))),
    }
    report
        .wall_clock_ms
        .insert("compute".into(), t1.elapsed().as_millis());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::job::parse_job;

    fn quantum_plane_job(command: &str) -> String {
        format!(
            r#"{{
            "schema": 1,
            "field": {{"kind": "prime", "p": 7}},
            "bounds": [3, 6],
            "command": "{command}",
            "algebras": {{
                "A": {{"generators": [["x", 1]]}},
                "B": {{"generators": [["y", 1]]}}
            }},
            "hopf": {{"H": {{"constructor": "cyclic", "order": 2}}}},
            "actions": {{"act": {{"hopf": "H", "algebra": "A", "gen_data": [[["1"]], [["-1"]]]}}}},
            "coactions": {{"co": {{"hopf": "H", "algebra": "B", "gen_data": [[["0"]], [["1"]]]}}}},
            "smash": {{"a": "A", "action": "act", "b": "B", "coaction": "co"}}
        }}"#
        )
    }

    #[test]
    fn validate_polynomial_job() {
        let job = parse_job(
            r#"{
                "schema": 1,
                "field": {"kind": "prime", "p": 7},
                "bounds": [3, 6],
                "command": "validate",
                "algebras": {"A": {"generators": [["x", 1]]}}
            }"#,
        )
        .unwrap();
        let report = run(&job).unwrap();
        assert!(report.all_pass(), "{}", report.render_text());
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn verify_ext_theorem_job() {
        let job = parse_job(&quantum_plane_job("verify-ext-theorem")).unwrap();
        let report = run(&job).unwrap();
        assert!(report.all_pass(), "{}", report.render_text());
    }

    #[test]
    fn as_regular_refutation_job() {
        let job = parse_job(
            r#"{
                "schema": 1,
                "field": {"kind": "rationals"},
                "bounds": [4, 6],
                "command": "as-regular",
                "algebras": {"A": {"generators": [["x", 1]],
                    "relations": [[{"word": [0, 0], "coeff": "1"}]]}},
                "target": "A"
            }"#,
        )
        .unwrap();
        let report = run(&job).unwrap();
        assert_eq!(report.exit_code(), 1, "{}", report.render_text());
    }

    #[test]
    fn reports_are_deterministic() {
        let job = parse_job(&quantum_plane_job("nakayama")).unwrap();
        let job = JobSpec { bounds: (4, 8), ..job };
        let mut r1 = run(&job).unwrap();
        let mut r2 = run(&job).unwrap();
        r1.wall_clock_ms.clear();
        r2.wall_clock_ms.clear();
        assert_eq!(r1.to_json().unwrap(), r2.to_json().unwrap());
        assert!(r1.all_pass(), "{}", r1.render_text());
    }
}
