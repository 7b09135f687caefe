use serde_json::{json, Value};

use paramassoc::catalog::{self, load_eas, load_leas};
use paramassoc::eas::{check_eas, classify, groups, FiniteEas, Table};
use paramassoc::error::{Error, Result};
use paramassoc::freealg::check_phi_associativity;
use paramassoc::leas::{check_leas, dualize, invert_leas, linearize, BraidWitness};
use paramassoc::morphisms::links::{isomorphism_checks, verify_links, RelationSet};
use paramassoc::morphisms::{
    find_indicator_solutions, indicator_scan, named_semigroup, non_indicator_solutions, theta_check, theta_prime_check,
};
use paramassoc::operad::{confluence_check, count_normal_forms_two_param, operad_axiom_check, AsPhi, AsPhiRules, TreeSum};
use paramassoc::scalar::{format_rational, Rational};
use paramassoc::series;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    Error,
}

pub enum Output {
    Json { status: Status, payload: Value, witnesses: Vec<Value> },
    Text(String),
}

impl Output {
    fn ok(payload: Value) -> Self {
        Output::Json { status: Status::Ok, payload, witnesses: Vec::new() }
    }

    /// A failing verdict must carry at least one witness.
    fn verdict(holds: bool, payload: Value, witnesses: Vec<Value>) -> Self {
        let status = if holds { Status::Ok } else { Status::Fail };
        assert!(holds || !witnesses.is_empty(), "a failing result carries a witness");
        Output::Json { status, payload, witnesses }
    }

    pub fn error(msg: String) -> Self {
        Output::Json { status: Status::Error, payload: json!({"message": msg}), witnesses: Vec::new() }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Output::Json { status: Status::Ok, .. } | Output::Text(_) => 0,
            Output::Json { status: Status::Fail, .. } => 1,
            Output::Json { status: Status::Error, .. } => 2,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Output::Text(t) => t.clone(),
            Output::Json { status, payload, witnesses } => {
                let mut v = json!({
                    "status": match status {
                        Status::Ok => "ok",
                        Status::Fail => "fail",
                        Status::Error => "error",
                    },
                    "payload": payload,
                });
                if !witnesses.is_empty() {
                    v["witnesses"] = json!(witnesses);
                }
                format!("{}\n", serde_json::to_string_pretty(&v).expect("plain data serializes"))
            }
        }
    }
}

pub fn error_json(msg: &str) -> String {
    Output::error(msg.to_owned()).render().trim_end().to_owned()
}

fn braid_json(w: &BraidWitness<Rational>) -> Value {
    json!({"row": w.row, "col": w.col, "lhs": format_rational(&w.lhs), "rhs": format_rational(&w.rhs)})
}

fn tree_sum_json(s: &TreeSum<usize, Rational>) -> Value {
    Value::Array(s.iter().map(|(t, c)| json!({"tree": t.to_json(), "coef": format_rational(c)})).collect())
}

pub fn eas_check(src: &str) -> Result<Output> {
    let s = load_eas(src)?;
    let r = check_eas(&s);
    let witnesses = r.failures.iter().map(|f| json!({"axiom": f.axiom, "triple": f.triple})).collect();
    let payload = json!({
        "eas": s.to_json(),
        "is_eas": r.is_eas,
        "nondegenerate": r.nondegenerate,
        "class": catalog::identify_eas(&s),
        "failures": r.failures.len(),
    });
    Ok(Output::verdict(r.is_eas, payload, witnesses))
}

pub fn eas_classify(size: usize, full: bool) -> Result<Output> {
    let c = classify(size, full)?;
    let classes: Vec<Value> = c
        .classes
        .iter()
        .map(|k| {
            json!({
                "name": k.name,
                "nondegenerate": k.nondegenerate,
                "orbit_size": k.orbit_size,
                "representative": k.representative.to_json(),
            })
        })
        .collect();
    let nondegenerate: Vec<&str> =
        c.classes.iter().filter(|k| k.nondegenerate).map(|k| k.name.as_deref().unwrap_or("?")).collect();
    let payload = json!({
        "size": c.size,
        "labeled_solutions": c.labeled_solutions,
        "count": c.classes.len(),
        "nondegenerate": nondegenerate,
        "classes": classes,
    });
    if size == 2 && c.classes.len() != catalog::CLASSIFIED.len() {
        let w = json!({"expected": catalog::CLASSIFIED.len(), "found": c.classes.len()});
        return Ok(Output::verdict(false, payload, vec![w]));
    }
    Ok(Output::ok(payload))
}

pub fn leas_check(src: &str) -> Result<Output> {
    let l = load_leas(src)?;
    let r = check_leas(&l);
    let payload = json!({"name": l.name(), "dim": l.dim(), "holds": r.holds});
    Ok(Output::verdict(r.holds, payload, r.witness.iter().map(braid_json).collect()))
}

pub fn leas_linearize(src: &str) -> Result<Output> {
    let s = load_eas(src)?;
    Ok(Output::ok(linearize::<Rational>(&s)?.to_json()))
}

pub fn leas_dual(src: &str) -> Result<Output> {
    Ok(Output::ok(dualize(&load_leas(src)?).to_json()))
}

pub fn leas_invert(src: &str) -> Result<Output> {
    let l = load_leas(src)?;
    match invert_leas(&l) {
        Ok(inv) => Ok(Output::ok(inv.to_json())),
        Err(Error::NotInvertible { rank, size }) => Ok(Output::verdict(
            false,
            json!({"name": l.name(), "invertible": false}),
            vec![json!({"rank": rank, "size": size})],
        )),
        Err(e) => Err(e),
    }
}

pub fn free_assoc_check(src: &str, max_len: usize) -> Result<Output> {
    if max_len > 5 {
        return Err(Error::SizeLimitExceeded(format!("max-len {max_len} exceeds 5")));
    }
    let l = load_leas(src)?;
    let r = check_phi_associativity(&l, max_len)?;
    let mut payload = r.to_json();
    let witness = payload.as_object_mut().and_then(|o| o.remove("witness"));
    payload["name"] = json!(l.name());
    payload["max_len"] = json!(max_len);
    Ok(Output::verdict(r.holds, payload, witness.into_iter().collect()))
}

pub fn operad_compose(src: &str, arity: usize) -> Result<Output> {
    if !(2..=5).contains(&arity) {
        return Err(Error::SizeLimitExceeded(format!("arity-check must be between 2 and 5, got {arity}")));
    }
    let l = load_leas(src)?;
    let r = operad_axiom_check(&AsPhi::new(&l), arity);
    let payload = json!({"name": l.name(), "max_arity": arity, "holds": r.holds, "checked": r.checked});
    Ok(Output::verdict(r.holds, payload, r.failure.iter().map(|f| json!(f)).collect()))
}

pub fn operad_confluence(src: &str) -> Result<Output> {
    let l = load_leas(src)?;
    if l.dim() > 3 {
        return Err(Error::SizeLimitExceeded(format!("confluence check needs dimension ≤ 3, got {}", l.dim())));
    }
    let r = confluence_check::<Rational, _>(&AsPhiRules::new(&l));
    let payload = json!({
        "name": l.name(),
        "confluent": r.confluent,
        "checked": r.checked,
        "leas_holds": check_leas(&l).holds,
    });
    let witnesses = r
        .witness
        .iter()
        .map(|(t, a, b)| json!({"monomial": t.to_json(), "first": tree_sum_json(a), "second": tree_sum_json(b)}))
        .collect();
    Ok(Output::verdict(r.confluent, payload, witnesses))
}

pub fn operad_count(omega: usize, n: usize, semigroup: Option<&str>) -> Result<Output> {
    let table: Table = match semigroup {
        Some(name) => named_semigroup(name).ok_or_else(|| Error::UnknownName(name.to_owned()))?,
        None if omega >= 1 => groups::cyclic(omega),
        None => return Err(Error::Invalid("omega must be at least 1".into())),
    };
    if table.len() != omega {
        return Err(Error::DimensionMismatch(format!("semigroup has {} elements, omega is {omega}", table.len())));
    }
    if let Some(t) = paramassoc::eas::associativity_failure(&table) {
        return Err(Error::NotAssociative(t.0, t.1, t.2));
    }
    let count = count_normal_forms_two_param(&table, n)?;
    let expected = series::p_recursive(omega as u64, n).values.pop().expect("n ≥ 1");
    let payload = json!({"omega": omega, "n": n, "count": count.to_string(), "p_n": expected.to_string()});
    let holds = count == expected;
    Ok(Output::verdict(holds, payload, if holds { vec![] } else { vec![json!({"count": count.to_string(), "p_n": expected.to_string()})] }))
}

pub fn series_table(omega_max: u64, n_max: usize, tsv: bool) -> Result<Output> {
    if omega_max == 0 || n_max == 0 {
        return Err(Error::Invalid("omega-max and n-max must be positive".into()));
    }
    if omega_max > 100 || n_max > 100 {
        return Err(Error::SizeLimitExceeded("omega-max and n-max are limited to 100".into()));
    }
    if tsv {
        return Ok(Output::Text(series::dimension_tsv(omega_max, n_max)));
    }
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for w in 1..=omega_max {
        let t = series::p_recursive(w, n_max);
        for n in 2..=n_max {
            if &series::p_narayana(w, n)? != t.p(n) {
                mismatches.push(json!({"omega": w, "n": n}));
            }
        }
        rows.push(json!({"omega": w, "p": t.values.iter().map(|v| v.to_string()).collect::<Vec<_>>()}));
    }
    let payload = json!({"omega_max": omega_max, "n_max": n_max, "rows": rows, "narayana_agrees": mismatches.is_empty()});
    Ok(Output::verdict(mismatches.is_empty(), payload, mismatches))
}

pub fn series_poly(n: usize) -> Result<Output> {
    if n > 40 {
        return Err(Error::SizeLimitExceeded(format!("n = {n} exceeds 40")));
    }
    let p = series::p_polynomial(n)?;
    let mut payload = json!({"n": n, "polynomial": series::polynomial_json(&p)});
    if n < 2 {
        return Ok(Output::ok(payload));
    }
    let r = series::check_polynomial_properties(n)?;
    payload["properties"] = r.to_json();
    let failed = r.checks.iter().filter(|c| !c.holds).map(|c| json!({"check": c.name, "detail": c.detail})).collect();
    Ok(Output::verdict(r.holds(), payload, failed))
}

pub fn series_koszul(omega: u64, order: usize) -> Result<Output> {
    if order > 30 {
        return Err(Error::SizeLimitExceeded(format!("order {order} exceeds 30")));
    }
    let r = series::koszul_check(omega, order)?;
    let failed = r.checks.iter().filter(|c| !c.holds).map(|c| json!({"check": c.name, "detail": c.detail})).collect();
    Ok(Output::verdict(r.holds(), json!({"omega": omega, "order": order, "report": r.to_json()}), failed))
}

pub fn assoc_scan(src: &str) -> Result<Output> {
    let (l, labels, patterns) = match load_eas(src) {
        Ok(s) => (linearize::<Rational>(&s)?.with_name(src), s.elements().to_vec(), find_indicator_solutions(&s)?),
        Err(Error::UnknownName(_)) | Err(Error::Parse(_)) => {
            let l = load_leas(src)?;
            let labels = (1..=l.dim()).map(|i| format!("e{i}")).collect();
            let p = indicator_scan(&l)?;
            (l, labels, p)
        }
        Err(e) => return Err(e),
    };
    let d = l.dim();
    let mut payload = json!({
        "name": l.name(),
        "search": "signed indicator patterns λ(1_S − 1_T); other solutions are listed under discoveries",
        "associative": patterns.iter().filter(|p| p.associative).map(|p| p.describe(&labels)).collect::<Vec<_>>(),
        "square_zero": patterns.iter().filter(|p| p.square_zero).map(|p| p.describe(&labels)).collect::<Vec<_>>(),
        "patterns": patterns.iter().map(|p| p.to_json(d, &labels)).collect::<Vec<_>>(),
    });
    if d <= 3 {
        let found = non_indicator_solutions(&l, 2)?;
        payload["discoveries"] = Value::Array(
            found
                .iter()
                .map(|(a, assoc, zero)| {
                    json!({"coeffs": a.iter().map(format_rational).collect::<Vec<_>>(), "associative": assoc, "square_zero": zero})
                })
                .collect(),
        );
    }
    Ok(Output::ok(payload))
}

pub fn morphism_theta(src: &str) -> Result<Output> {
    let s = load_eas(src)?;
    let r = theta_check(&s);
    let mut witnesses: Vec<Value> = Vec::new();
    if let Some(t) = r.arrow_associative {
        witnesses.push(json!({"arrow_not_associative": t}));
    }
    witnesses.extend(
        r.failures.iter().map(|f| json!({"triple": f.triple, "lhs": f.lhs.to_json(), "rhs": f.rhs.to_json()})),
    );
    let payload = json!({
        "holds": r.holds(),
        "checked": r.checked,
        "failures": r.failures.len(),
        "is_eas": check_eas(&s).is_eas,
    });
    Ok(Output::verdict(r.holds(), payload, witnesses))
}

fn load_semigroup(src: &str) -> Result<Table> {
    if let Some(t) = named_semigroup(src) {
        return Ok(t);
    }
    let text = std::fs::read_to_string(src).map_err(|_| Error::UnknownName(src.to_owned()))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{src}: {e}")))?;
    let t = v.get("table").cloned().unwrap_or(v);
    let table: Table = serde_json::from_value(t).map_err(|e| Error::Parse(format!("{src}: {e}")))?;
    FiniteEas::from_tables(table.clone(), table.clone())?;
    Ok(table)
}

pub fn morphism_theta_prime(src: &str) -> Result<Output> {
    let table = load_semigroup(src)?;
    let r = theta_prime_check(&table)?;
    let mut witnesses = Vec::new();
    if let Some(t) = r.failure {
        witnesses.push(json!({"triple": t}));
    }
    if !r.surjective() {
        witnesses.push(json!({"image_rank": r.image_rank, "target_dim": r.target_dim}));
    }
    Ok(Output::verdict(r.holds(), r.to_json(), witnesses))
}

pub fn links_verify(name: &str) -> Result<Output> {
    let reports = verify_links(name)?;
    let mut witnesses: Vec<Value> = reports.iter().filter(|r| !r.holds()).map(|r| r.to_json()).collect();
    let mut payload = json!({"name": name, "claims": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>()});
    let sets: Vec<RelationSet> = reports.iter().map(|r| r.set).collect();
    if sets.iter().any(|s| matches!(s, RelationSet::Diassociative | RelationSet::Triassociative | RelationSet::ComTrias)) {
        let iso = isomorphism_checks()?;
        witnesses.extend(iso.iter().filter(|c| !c.isomorphic).map(|c| json!({"entry": c.entry, "expected": c.expected})));
        payload["isomorphisms"] = Value::Array(
            iso.iter().map(|c| json!({"entry": c.entry, "expected": c.expected, "holds": c.isomorphic})).collect(),
        );
    }
    Ok(Output::verdict(witnesses.is_empty(), payload, witnesses))
}

pub fn catalog_list() -> Output {
    let eas: Vec<Value> = catalog::eas_entries()
        .iter()
        .map(|e| json!({"name": e.name, "aliases": e.aliases, "size": e.eas.len(), "description": e.description}))
        .collect();
    let leas: Vec<Value> = catalog::leas_entries()
        .iter()
        .map(|e| json!({"name": e.name, "dim": e.leas.dim(), "note": e.note}))
        .collect();
    Output::ok(json!({"eas": eas, "leas": leas, "classified": catalog::CLASSIFIED}))
}
