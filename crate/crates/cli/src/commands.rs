//! One function per subcommand; each returns the JSON payload and the text
//! rendering together so the two cannot disagree on a verdict.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::json;

use pgl_spectra::matrixgroups::{
    find_binary_octahedral, find_binary_tetrahedral, omega_bruteforce, FieldCtx, MatrixFamily, ENUMERATION_CAP,
    SEARCH_ATTEMPTS,
};
use pgl_spectra::numtheory::{
    catalan_solutions, factor_partial, ppd_exists_above, ppd_table, primitive_prime_divisors_with, CatalanFamily,
    FactorConfig, Nat, PpdReport,
};
use pgl_spectra::primegraph::{build_graph, components, mu_components, to_dot};
use pgl_spectra::spectra::{
    mu_pgl2, mu_psl2, omega_alternating, omega_metacyclic, omega_symmetric, psi_f4, DEFAULT_PARTITION_CAP,
};
use pgl_spectra::verify::{
    self as lib, check_pgl2_component_structure, table2_lookup, verify_case_factorizations, verify_table1_with, Report,
    COMPONENT_CASES, LEMMA1_DEFAULT_N_MAX,
};
use pgl_spectra::{Error, Result, Spectrum};

use crate::output::{Outcome, Status};
use crate::{family_name, Family, OracleFamily, WitnessGroup};

/// Value bound used by `verify lemma2` and `verify all`.
pub const LEMMA2_DEFAULT_BOUND: u64 = 10_000_000;

fn join<'a>(xs: impl IntoIterator<Item = &'a Nat>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn strings<'a>(xs: impl IntoIterator<Item = &'a Nat>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

fn note_ppd(out: &mut Outcome, r: &PpdReport) {
    if !r.primes_complete {
        out.warn(
            format!("{}^{} - 1: cofactor {} left unfactored, prime list may be partial", r.a, r.n, r.residual),
            Status::Exhausted,
        );
    }
    if r.probabilistic {
        out.warn(format!("{}^{} - 1: some primes are probable primes", r.a, r.n), Status::Ok);
    }
}

pub fn ppd(a: &Nat, n: u32, upto: bool, cfg: &FactorConfig) -> Result<Outcome> {
    if upto {
        let rows = ppd_table(a, n, cfg)?;
        let mut text = String::new();
        for r in &rows {
            let primes: Vec<String> = strings(&r.primitive_primes);
            writeln!(text, "{}     [ {} ]", r.n, primes.join(", ")).unwrap();
        }
        let mut out = Outcome::new(&rows, text);
        for r in &rows {
            note_ppd(&mut out, r);
        }
        Ok(out)
    } else {
        let r = primitive_prime_divisors_with(a, n, cfg)?;
        let text = if r.primitive_primes.is_empty() {
            "none\n".to_string()
        } else {
            format!("{}\n", join(&r.primitive_primes))
        };
        let mut out = Outcome::new(&r, text);
        note_ppd(&mut out, &r);
        Ok(out)
    }
}

pub fn ppd_above(a: &Nat, n: u32, q: u64) -> Result<Outcome> {
    let r = ppd_exists_above(a, n, q)?;
    let verdict = match r.exists_above_threshold() {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    };
    let text = format!(
        "exists: {verdict}\nprimes above {q}: {}\nresidual: {}\n",
        join(r.primitive_primes.iter().filter(|s| **s > Nat::from(q))),
        r.residual
    );
    let mut out = Outcome::new(&r, text);
    if r.probabilistic {
        out.warn(format!("{a}^{n} - 1: some primes are probable primes"), Status::Ok);
    }
    Ok(out)
}

pub fn factor(n: &Nat, cfg: &FactorConfig) -> Result<Outcome> {
    let f = factor_partial(n, cfg)?;
    let mut out = Outcome::new(&f, format!("{f}\n"));
    if !f.complete {
        out.warn(format!("cofactor {} left unfactored within the rho budget", f.cofactor), Status::Exhausted);
    }
    if f.probabilistic {
        out.warn("some factors are probable primes", Status::Ok);
    }
    Ok(out)
}

fn arg<T: std::str::FromStr>(family: Family, name: &str, s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::InvalidInput(format!("{}: bad {name} {s:?}", family_name(family))))
}

/// The spectrum named by a family and its positional arguments.
pub fn build_spectrum(family: Family, args: &[String], cap: Option<u64>) -> Result<Spectrum> {
    let arity = match family {
        Family::Pgl2 | Family::Psl2 => 2,
        Family::Sym | Family::Alt | Family::F4psi => 1,
        Family::Metacyclic => 3,
    };
    if args.len() != arity {
        let usage = match family {
            Family::Pgl2 | Family::Psl2 => "P N",
            Family::Sym | Family::Alt => "N",
            Family::Metacyclic => "M N K",
            Family::F4psi => "E",
        };
        return Err(Error::InvalidInput(format!(
            "{} takes {arity} argument(s): {usage}",
            family_name(family)
        )));
    }
    let partition_cap = cap.map_or(DEFAULT_PARTITION_CAP, |c| c.min(u32::MAX as u64) as u32);
    match family {
        Family::Pgl2 => mu_pgl2(&arg(family, "p", &args[0])?, arg(family, "n", &args[1])?),
        Family::Psl2 => mu_psl2(&arg(family, "p", &args[0])?, arg(family, "n", &args[1])?),
        Family::Sym => omega_symmetric(arg(family, "n", &args[0])?, partition_cap),
        Family::Alt => omega_alternating(arg(family, "n", &args[0])?, partition_cap),
        Family::Metacyclic => omega_metacyclic(
            arg(family, "m", &args[0])?,
            arg(family, "n", &args[1])?,
            arg(family, "k", &args[2])?,
        ),
        Family::F4psi => {
            let e: u32 = arg(family, "e", &args[0])?;
            Spectrum::new(psi_f4(e)?, format!("psi F4(2^{e})"))
        }
    }
}

pub fn spectrum(family: Family, args: &[String], cap: Option<u64>, with_omega: bool) -> Result<Outcome> {
    let s = build_spectrum(family, args, cap)?;
    let text = s.to_text(with_omega)?;
    let mut result = json!({"label": s.label(), "mu": strings(s.mu())});
    if with_omega {
        result["omega"] = json!(strings(&s.omega()?));
    }
    Ok(Outcome::new(result, text))
}

pub fn graph(family: Family, args: &[String], cap: Option<u64>, dot: bool) -> Result<Outcome> {
    let s = build_spectrum(family, args, cap)?;
    let g = build_graph(&s)?;
    let part = components(&g);
    let comps = mu_components(&s, &part)?;
    let edges: Vec<[String; 2]> = g.edges().iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect();
    let mut result = json!({
        "label": s.label(),
        "vertices": strings(g.vertices()),
        "edges": edges,
        "t": part.t(),
        "components": comps,
    });
    let text = if dot {
        let d = to_dot(&g, s.label());
        result["dot"] = json!(d);
        d
    } else {
        let mut t = String::new();
        writeln!(t, "label: {}", s.label()).unwrap();
        writeln!(t, "vertices: {}", join(g.vertices())).unwrap();
        let e: Vec<String> = g.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        writeln!(t, "edges: {}", e.join(" ")).unwrap();
        writeln!(t, "t: {}", part.t()).unwrap();
        for (i, c) in comps.iter().enumerate() {
            writeln!(t, "pi_{}: {} | mu_{}: {}", i + 1, join(&c.primes), i + 1, join(&c.mu)).unwrap();
        }
        t
    };
    Ok(Outcome::new(result, text))
}

pub fn oracle(family: OracleFamily, p: u64, n: u32, cap: Option<u64>) -> Result<Outcome> {
    let ctx = FieldCtx::new(p, n)?;
    let (fam, formula) = match family {
        OracleFamily::Pgl2 => (MatrixFamily::PGL2, mu_pgl2(&Nat::from(p), n)?),
        OracleFamily::Psl2 => (MatrixFamily::PSL2, mu_psl2(&Nat::from(p), n)?),
    };
    let brute = omega_bruteforce(&ctx, fam, cap.unwrap_or(ENUMERATION_CAP))?;
    let brute_omega = brute.omega()?;
    let formula_omega = formula.omega()?;
    let equal = brute_omega == formula_omega;
    let mut text = String::new();
    writeln!(text, "group: {}", brute.label()).unwrap();
    writeln!(text, "brute force mu: {}", join(brute.mu())).unwrap();
    writeln!(text, "formula mu: {}", join(formula.mu())).unwrap();
    writeln!(text, "omega: {}", join(&brute_omega)).unwrap();
    writeln!(text, "equal: {}", if equal { "yes" } else { "NO" }).unwrap();
    let result = json!({
        "group": brute.label(),
        "modulus": ctx.modulus(),
        "brute_force": {"mu": strings(brute.mu()), "omega": strings(&brute_omega)},
        "formula": {"label": formula.label(), "mu": strings(formula.mu()), "omega": strings(&formula_omega)},
        "equal": equal,
    });
    let mut out = Outcome::new(result, text);
    out.fail_if(!equal);
    Ok(out)
}

pub fn catalan(bound: u64) -> Result<Outcome> {
    let sols = catalan_solutions(bound)?;
    let mut text = String::new();
    for s in &sols {
        let family = match s.family {
            CatalanFamily::Mersenne => "mersenne",
            CatalanFamily::Fermat => "fermat",
            CatalanFamily::Exceptional => "exceptional",
            CatalanFamily::Unclassified => "UNCLASSIFIED",
        };
        writeln!(text, "{}^{} = {}^{} + 1  {family}", s.p, s.m, s.q, s.n).unwrap();
    }
    writeln!(text, "{} solutions up to {bound}", sols.len()).unwrap();
    let unclassified = sols.iter().any(|s| s.family == CatalanFamily::Unclassified);
    let mut out = Outcome::new(json!({"bound": bound, "solutions": sols}), text);
    out.fail_if(unclassified);
    Ok(out)
}

fn report_outcome(report: Report) -> Outcome {
    let ok = report.ok();
    let text = report.to_text();
    let mut out = Outcome::new(&report, text);
    out.fail_if(!ok);
    out
}

pub fn verify_table1(cfg: &FactorConfig) -> Result<Outcome> {
    verify_table1_with(cfg).map(report_outcome)
}

pub fn verify_lemma1(n_max: u32) -> Result<Outcome> {
    lib::verify_lemma1(n_max).map(report_outcome)
}

pub fn verify_lemma2(bound: u64) -> Result<Outcome> {
    lib::verify_lemma2(bound).map(report_outcome)
}

pub fn verify_cases() -> Result<Outcome> {
    verify_case_factorizations().map(report_outcome)
}

pub fn verify_pgl2(p: &Nat, n: u32) -> Result<Outcome> {
    check_pgl2_component_structure(p, n).map(report_outcome)
}

pub fn verify_all(cfg: &FactorConfig) -> Result<Outcome> {
    let mut reports = vec![
        verify_table1_with(cfg)?,
        lib::verify_lemma1(LEMMA1_DEFAULT_N_MAX)?,
        lib::verify_lemma2(LEMMA2_DEFAULT_BOUND)?,
        verify_case_factorizations()?,
    ];
    for (p, n) in COMPONENT_CASES {
        reports.push(check_pgl2_component_structure(&Nat::from(p), n)?);
    }
    let passed = reports.iter().filter(|r| r.ok()).count();
    let mut text = String::new();
    for r in &reports {
        text.push_str(&r.to_text());
    }
    writeln!(text, "all: {passed}/{} suites passed", reports.len()).unwrap();
    let ok = passed == reports.len();
    let mut out = Outcome::new(json!({"ok": ok, "reports": reports}), text);
    out.fail_if(!ok);
    Ok(out)
}

pub fn table2(p: &Nat) -> Result<Outcome> {
    let m = table2_lookup(p)?;
    let mut text = String::new();
    writeln!(text, "p = {} = 2^{}.3^{} + 1", m.p, m.alpha, m.beta).unwrap();
    if let (Some(fm), Some(fs)) = (m.fermat_m, m.fermat_s) {
        writeln!(text, "Fermat prime: m = {fm}, s = {fs}").unwrap();
    }
    for g in m.entry.groups {
        if g.condition.is_empty() {
            writeln!(text, "{}", g.name).unwrap();
        } else {
            writeln!(text, "{}  [{}]", g.name, g.condition).unwrap();
        }
    }
    Ok(Outcome::new(&m, text))
}

pub fn witness(group: WitnessGroup, seed: u64) -> Result<Outcome> {
    let (found, name) = match group {
        WitnessGroup::BinaryOctahedral => (find_binary_octahedral(seed)?, "2.S4"),
        WitnessGroup::BinaryTetrahedral => (find_binary_tetrahedral(seed)?, "SL(2,3)"),
    };
    let Some(found) = found else {
        let mut out = Outcome::new(json!(null), format!("no {name} found in {SEARCH_ATTEMPTS} attempts\n"));
        out.warn(format!("search exhausted after {SEARCH_ATTEMPTS} attempts"), Status::Exhausted);
        return Ok(out);
    };
    let s = found.spectrum(name)?;
    let orders: BTreeSet<u64> = found.orders.keys().copied().collect();
    let mut text = String::new();
    writeln!(text, "group: {name} in SL(2,7)").unwrap();
    writeln!(text, "size: {}", found.elements.len()).unwrap();
    let stats: Vec<String> = found.orders.iter().map(|(o, c)| format!("{o}:{c}")).collect();
    writeln!(text, "order counts: {}", stats.join(" ")).unwrap();
    writeln!(text, "mu: {}", join(s.mu())).unwrap();
    let gens: Vec<String> = found
        .generators
        .iter()
        .map(|g| format!("[{} {}; {} {}]", g.a, g.b, g.c, g.d))
        .collect();
    writeln!(text, "generators: {}", gens.join(" ")).unwrap();
    writeln!(text, "attempts: {}", found.attempts).unwrap();
    let result = json!({
        "group": name,
        "size": found.elements.len(),
        "orders": orders,
        "order_counts": found.orders,
        "mu": strings(s.mu()),
        "generators": found.generators,
        "attempts": found.attempts,
        "seed": seed,
    });
    Ok(Outcome::new(result, text))
}
