mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use psdef::groebner::{
    buchberger_field, buchberger_field_with, is_member, macaulay_oracle_dim, membership_certificate, normal_form,
    standard_monomial_count, verify_certificate, FieldOptions, IdealBasis, IntOptions, Limits, Membership,
};
use psdef::group::{extraspecial_32_plus, class_structure, parse_word, GroupSpec, NamedGroup};
use psdef::liftring::{build_lift_ideal, coeff_certificate, coeff_membership, trace_defect, LiftOptions, WitnessMode};
use psdef::poly::{Integer, ZPoly};
use psdef::psring::{build_psdef_ideal, hilbert_profile, truncated_basis, witness_membership, PsOptions};
use psdef::repcount::{iso_verdict, Family, Verdict, VerdictOptions};
use psdef::verify::{verify_paper, VerifyOptions};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const HILBERT_BUDGET: Duration = Duration::from_secs(15 * 60);
const LIFT_BUDGET: Duration = Duration::from_secs(60 * 60);
const SQUEEZE_BUDGET: Duration = Duration::from_secs(2 * 60);

const RANDOM_ORACLE_INSTANCES: u64 = 200;
const SHUFFLE_INSTANCES: u64 = 50;
const NORMAL_FORM_INSTANCES: u64 = 500;
const CERTIFICATE_INSTANCES: u64 = 20;
const SEED_BASE: u64 = 0x5eed_0000;

enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn extraspecial() -> NamedGroup {
    GroupSpec::from_cli_name("extraspecial32").unwrap().build().unwrap()
}

fn graded_dimensions() -> Result<String, String> {
    let (g, _) = extraspecial_32_plus();
    let t = Instant::now();
    let p = hilbert_profile(&g, 8, &PsOptions::default()).map_err(|e| e.to_string())?;
    let el = t.elapsed();
    ensure(p.dims == [1, 20, 72, 121, 137], format!("dims {:?}", p.dims))?;
    ensure(p.stabilized && p.dims.len() == 5, format!("stabilization at k={}", p.dims.len()))?;
    ensure(el <= HILBERT_BUDGET, format!("took {el:.1?}"))?;
    Ok(format!("dims {:?}, m^5 inside I, {el:.1?}", p.dims))
}

fn hilbert_series() -> Result<String, String> {
    let (g, _) = extraspecial_32_plus();
    let p = hilbert_profile(&g, 8, &PsOptions::default()).map_err(|e| e.to_string())?;
    ensure(p.series == [1, 19, 52, 49, 16], format!("R^ps series {:?}", p.series))?;
    let h = class_structure(&g).abelianization;
    let q = hilbert_profile(&h, 8, &PsOptions::default()).map_err(|e| e.to_string())?;
    ensure(q.series == [1, 19, 51, 49, 16], format!("R_H series {:?}", q.series))?;
    ensure(q.total == Some(136), format!("R_H total {:?}", q.total))?;
    Ok(format!("R^ps {:?}, R_H {:?} (total 136)", p.series, q.series))
}

fn witness() -> Result<String, String> {
    let g = extraspecial();
    let a2 = g.element("a^2").unwrap();
    let got: Vec<Membership> =
        (1..=3).map(|k| witness_membership(&g.group, a2, k, &PsOptions::default()).unwrap()).collect();
    ensure(got == [Membership::Yes, Membership::Yes, Membership::No], format!("{got:?}"))?;
    Ok("T(a^2) in I+m, I+m^2; not in I+m^3".into())
}

fn integer_membership() -> Outcome {
    let g = extraspecial();
    let pres = g.presentation.unwrap();
    let model = build_lift_ideal(&pres, WitnessMode::AsNeeded).unwrap();
    let opts = LiftOptions { limits: Limits::default().with_timeout(LIFT_BUDGET), ..Default::default() };
    let t = Instant::now();
    let mut notes = Vec::new();
    for w in ["a^2", "c^2"] {
        let e = trace_defect(&model, &parse_word(w, &pres.generator_names).unwrap()).unwrap();
        let out = coeff_membership(&model, &e, &opts).unwrap();
        if out.member == Membership::Unknown {
            return Outcome::Skip(format!("resource limit on tr({w}) - 2 with a partial basis of {} elements", out.basis_size));
        }
        if out.member != Membership::Yes {
            return Outcome::Fail(format!("tr({w}) - 2: {}", out.member));
        }
        match coeff_certificate(&model, &e, &opts).unwrap() {
            (Membership::Yes, Some(cert)) if verify_certificate(&cert) => notes.push(format!("tr({w})-2 certified in {} steps", cert.nodes.len())),
            (m, _) => return Outcome::Fail(format!("certificate for tr({w}) - 2: {m}")),
        }
    }
    let el = t.elapsed();
    if el > LIFT_BUDGET {
        return Outcome::Fail(format!("took {el:.1?}"));
    }
    Outcome::Pass(format!("{}, {el:.1?}", notes.join(", ")))
}

fn distinct_verdict() -> Result<String, String> {
    let r = iso_verdict(&extraspecial(), Family::Extraspecial, &VerdictOptions::default()).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::Distinct, format!("{:?}", r.verdict))?;
    let w = r.witness.unwrap();
    Ok(format!("Distinct: T({}) in I+m^3 {}, in lifting ideal {}", w.element, w.ps_member, w.lift_member))
}

fn squeeze() -> Result<String, String> {
    let mut parts = Vec::new();
    for (spec, family, want) in [
        ("abelian:2", Family::Abelian, 3),
        ("abelian:4", Family::Abelian, 10),
        ("abelian:2x2", Family::Abelian, 10),
        ("dihedral:4", Family::Dihedral, 11),
    ] {
        let g = GroupSpec::from_cli_name(spec).unwrap().build().unwrap();
        let t = Instant::now();
        let r = iso_verdict(&g, family, &VerdictOptions::default()).map_err(|e| e.to_string())?;
        let el = t.elapsed();
        let triple = (r.computed_dim, r.upper_bound_d_ps, r.lower_bound_rank);
        ensure(triple == (Some(want), Some(want), Some(want)), format!("{spec}: {triple:?}"))?;
        ensure(r.verdict == Verdict::FreeIsomorphic, format!("{spec}: {:?}", r.verdict))?;
        ensure(el <= SQUEEZE_BUDGET, format!("{spec} took {el:.1?}"))?;
        parts.push(format!("{spec}={want}"));
    }
    Ok(parts.join(", "))
}

fn oracle_equivalence() -> Result<String, String> {
    let mut checked = 0;
    for (name, g) in common::groups_up_to_four() {
        let (_, ideal) = build_psdef_ideal(&g);
        for k in 1..=4 {
            let gb = truncated_basis(&ideal, k, &PsOptions::default()).unwrap();
            let (a, b) = (standard_monomial_count(&gb).unwrap(), macaulay_oracle_dim(&ideal, k).unwrap());
            ensure(a == b, format!("{name} k={k}: {a} vs {b}"))?;
            checked += 1;
        }
    }
    for i in 0..RANDOM_ORACLE_INSTANCES {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED_BASE + i);
        let ideal = common::random_f2_ideal(&mut rng);
        for k in 1..=4 {
            let gb = buchberger_field(&ideal, Some(k));
            let (a, b) = (standard_monomial_count(&gb).unwrap(), macaulay_oracle_dim(&ideal, k).unwrap());
            ensure(a == b, format!("random instance {i} k={k}: {a} vs {b}"))?;
        }
    }
    Ok(format!("{checked} group truncations, {RANDOM_ORACLE_INSTANCES} random ideals at k=1..4"))
}

fn engine_properties() -> Result<String, String> {
    for i in 0..SHUFFLE_INSTANCES {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED_BASE + 1_000 + i);
        let ideal = common::random_f2_ideal(&mut rng);
        for k in [None, Some(4)] {
            let base = buchberger_field(&ideal, k);
            for seed in 0..3 {
                let opts = FieldOptions { shuffle_seed: Some(i * 31 + seed), ..Default::default() };
                let other = buchberger_field_with(&ideal, k, &opts).unwrap();
                ensure(other.basis == base.basis, format!("shuffle instance {i} seed {seed} k={k:?}"))?;
            }
        }
    }
    for i in 0..NORMAL_FORM_INSTANCES {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED_BASE + 2_000 + i);
        let ideal = common::random_f2_ideal(&mut rng);
        let k = if i % 2 == 0 { None } else { Some(5) };
        let gb = buchberger_field(&ideal, k);
        let f = common::random_poly(&mut rng, ideal.ring, 0, 4, 6, &mut common::f2_coeff);
        let nf = normal_form(&f, &gb).unwrap();
        ensure(normal_form(&nf, &gb).unwrap() == nf, format!("normal form not idempotent, instance {i}"))?;
        ensure(is_member(&(&f - &nf), &gb).unwrap() == Membership::Yes, format!("f - NF(f) not a member, instance {i}"))?;
    }
    for i in 0..CERTIFICATE_INSTANCES {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED_BASE + 3_000 + i);
        let ideal: IdealBasis<Integer> = common::random_z_ideal(&mut rng);
        let mut f = ZPoly::zero(ideal.ring);
        for g in &ideal.generators {
            let c: ZPoly = common::random_poly(&mut rng, ideal.ring, 0, 2, 2, &mut common::small_int);
            f = &f + &(&c * g);
        }
        let (m, cert) = membership_certificate(&f, &ideal, &IntOptions::default()).unwrap();
        ensure(m == Membership::Yes, format!("integer instance {i}: {m}"))?;
        ensure(cert.as_ref().is_some_and(verify_certificate), format!("integer instance {i}: certificate rejected"))?;
    }
    Ok(format!(
        "{SHUFFLE_INSTANCES} shuffled instances, {NORMAL_FORM_INSTANCES} reductions, {CERTIFICATE_INSTANCES} integer certificates"
    ))
}

fn determinism() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let opts = VerifyOptions { cache_dir: Some(dir.path().to_path_buf()), ..Default::default() };
    let cold = verify_paper(&opts).map_err(|e| e.to_string())?;
    ensure(cold.overall && cold.skipped == 0, format!("cold run: {} failed, {} skipped", cold.failed, cold.skipped))?;
    let a = verify_paper(&opts).map_err(|e| e.to_string())?.without_timing().to_json();
    let b = verify_paper(&opts).map_err(|e| e.to_string())?.without_timing().to_json();
    ensure(a == b, "warm reports differ")?;
    ensure(a == cold.without_timing().to_json(), "warm report differs from the cold one")?;
    Ok(format!("{} checks, identical JSON across three runs", cold.checks.len()))
}

fn run(n: usize, name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
        Outcome::Fail(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let (tag, detail, ok) = match out {
        Outcome::Pass(d) => ("PASS", d, true),
        Outcome::Skip(d) => ("SKIP", d, true),
        Outcome::Fail(d) => ("FAIL", d, false),
    };
    println!("criterion {n} [{tag}] {name}: {detail} ({:.1?})", t.elapsed());
    ok
}

fn outcome(r: Result<String, String>) -> Outcome {
    match r {
        Ok(d) => Outcome::Pass(d),
        Err(d) => Outcome::Fail(d),
    }
}

fn main() -> ExitCode {
    let results = [
        run(1, "extraspecial graded dimensions", || outcome(graded_dimensions())),
        run(2, "Hilbert series", || outcome(hilbert_series())),
        run(3, "witness membership", || outcome(witness())),
        run(4, "integer membership", integer_membership),
        run(5, "extraspecial verdict", || outcome(distinct_verdict())),
        run(6, "abelian and dihedral squeeze", || outcome(squeeze())),
        run(7, "oracle equivalence", || outcome(oracle_equivalence())),
        run(8, "engine properties", || outcome(engine_properties())),
        run(9, "determinism", || outcome(determinism())),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
