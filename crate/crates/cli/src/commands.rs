use serde_json::{json, Value};

use hcf_core::bvring::make_presentation;
use hcf_core::connes::{classify_monomial, collapse_certificate, e2_from_hh, e2_presented, e2_series, PageWindow};
use hcf_core::crosscheck::{bracket_table, delta_table, hh_count_check, hh_rows, label_classes};
use hcf_core::frobenius::check_frobenius;
use hcf_core::hochschild::BarModel;
use hcf_core::series::{closed_form_series, equal_in_window};
use hcf_core::{make_algebra, ManifoldSpec};

use crate::{AlgebraArgs, CertifyArgs, CliError, Command, E2Args, HhArgs, Report, VerifyArgs};

fn fail(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn to_json(v: &impl serde::Serialize) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(fail)
}

fn opt(v: Option<impl ToString>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn dispatch(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Algebra(a) => algebra(a),
        Command::Hh(a) => hh(a),
        Command::Delta(a) => delta(a),
        Command::Bracket(a) => bracket(a),
        Command::E2(a) => e2(a),
        Command::Certify(a) => certify(a),
        Command::Verify(a) => verify(a),
    }
}

fn algebra(args: &AlgebraArgs) -> Result<Report, CliError> {
    let a = make_algebra(&args.target.manifold);
    let record = a.record();
    let checks = check_frobenius(&a);
    let mut r = Report::new("algebra", args.target.manifold.name(), vec!["check", "passed", "witness"]);
    r.ok = checks.all_pass();
    for c in &checks.checks {
        let witness = c.witness.as_ref().map(|w| format!("{w:?}"));
        r.rows.push(vec![c.name.to_string(), c.passed.to_string(), opt(witness)]);
    }
    r.notes = record.to_text().lines().map(str::to_string).collect();
    r.field("algebra", to_json(&record)?);
    r.field("checks", to_json(&checks.checks)?);
    Ok(r)
}

fn hh(args: &HhArgs) -> Result<Report, CliError> {
    let s = &args.target.manifold;
    let a = make_algebra(s);
    let rows = hh_rows(&mut BarModel::new(&a), &make_presentation(s), args.hdeg_max).map_err(fail)?;
    let check = hh_count_check(&rows);
    let mut r = Report::new("hh", s.name(), vec!["m", "tdeg", "dim", "expected", "labels"]);
    r.ok = check.passed();
    for row in &rows {
        r.rows.push(vec![
            row.m.to_string(),
            row.tdeg.to_string(),
            row.dim.to_string(),
            row.expected.to_string(),
            row.labels.join("; "),
        ]);
    }
    r.notes.extend(check.violations.first().map(|v| format!("first mismatch: {v}")));
    r.field("hdeg_max", args.hdeg_max);
    r.field("rows", to_json(&rows)?);
    Ok(r)
}

fn delta(args: &HhArgs) -> Result<Report, CliError> {
    let s = &args.target.manifold;
    let a = make_algebra(s);
    let mut h = label_classes(BarModel::new(&a), s, args.hdeg_max).map_err(fail)?;
    let rows = delta_table(&mut h).map_err(fail)?;
    let mut r = Report::new("delta", s.name(), vec!["m", "tdeg", "class", "brute_force", "closed_form", "agree"]);
    r.ok = rows.iter().all(|x| x.agree);
    for x in &rows {
        r.rows.push(vec![
            x.m.to_string(),
            x.tdeg.to_string(),
            x.class.clone(),
            x.brute_force.clone(),
            x.closed_form.clone(),
            x.agree.to_string(),
        ]);
    }
    if let Some(x) = rows.iter().find(|x| !x.agree) {
        r.notes.push(format!("first mismatch: Δ({}) = {} vs {}", x.class, x.brute_force, x.closed_form));
    }
    r.field("hdeg_max", args.hdeg_max);
    r.field("rows", to_json(&rows)?);
    Ok(r)
}

fn bracket(args: &AlgebraArgs) -> Result<Report, CliError> {
    let s = &args.target.manifold;
    let a = make_algebra(s);
    // generators live in Hochschild degree <= 2, so brackets land in degree <= 3
    let mut h = label_classes(BarModel::new(&a), s, 3).map_err(fail)?;
    let rows = bracket_table(&mut h).map_err(fail)?;
    let mut r = Report::new("bracket", s.name(), vec!["left", "right", "brute_force", "table", "agree"]);
    r.ok = rows.iter().all(|x| x.agree);
    for x in &rows {
        r.rows.push(vec![
            x.left.clone(),
            x.right.clone(),
            x.brute_force.clone(),
            x.table.clone(),
            x.agree.to_string(),
        ]);
    }
    if let Some(x) = rows.iter().find(|x| !x.agree) {
        r.notes.push(format!("first mismatch: [{}, {}] = {} vs {}", x.left, x.right, x.brute_force, x.table));
    }
    r.field("rows", to_json(&rows)?);
    Ok(r)
}

fn e2(args: &E2Args) -> Result<Report, CliError> {
    let s = &args.target.manifold;
    let ring = make_presentation(s);
    let window = PageWindow::new(args.window.lo, args.window.hi, args.col_cap);
    let page = e2_presented(&ring, window).map_err(fail)?;
    let mut r = Report::new("e2", s.name(), vec!["p", "q", "m", "tdeg", "dim", "labels"]);
    for e in &page.entries {
        r.rows.push(vec![
            e.p.to_string(),
            e.q.to_string(),
            e.m.to_string(),
            e.tdeg.to_string(),
            e.dim.to_string(),
            e.labels.join("; "),
        ]);
    }

    // classification of the column-0 monomials of the window
    let (lo, hi) = (args.window.lo - ring.dim_m, args.window.hi - ring.dim_m);
    let mut classes = Vec::new();
    for x in ring.basis_in_window(lo, hi, args.hdeg_max) {
        let kind = classify_monomial(&ring, &x);
        let image = ring.element_label(&ring.delta(&x));
        r.notes.push(format!("{}: hdeg {}, tdeg {}, Δ = {image}, {kind:?}", ring.label(&x), x.hdeg(), ring.tdeg(&x)));
        classes.push(json!({
            "label": ring.label(&x),
            "hdeg": x.hdeg(),
            "tdeg": ring.tdeg(&x),
            "delta": image,
            "kind": to_json(&kind)?,
        }));
    }
    let series = e2_series(&ring).map_err(fail)?;
    r.notes.push(format!("series: {series}"));

    if args.check {
        let brute = e2_from_hh(&make_algebra(s), window).map_err(fail)?;
        r.ok = brute.triples() == page.triples();
        r.notes.push(format!("brute force ({}): {}", brute.backend, if r.ok { "agrees" } else { "differs" }));
        r.field("brute_force_backend", brute.backend.clone());
        r.field("brute_force_agrees", r.ok);
    }
    r.field("window", to_json(&window)?);
    r.field("page", to_json(&page.entries)?);
    r.field("classification", Value::Array(classes));
    r.field("series", series.to_string());
    Ok(r)
}

fn certify(args: &CertifyArgs) -> Result<Report, CliError> {
    let s = &args.target.manifold;
    if args.l_range.lo < 0 {
        return Err(CliError::Usage(format!("--l-range must be nonnegative, got {}", args.l_range.lo)));
    }
    let c = collapse_certificate(s, args.rmax, args.l_range.lo as u32, args.l_range.hi as u32).map_err(fail)?;
    let mut r = Report::new(
        "certify",
        s.name(),
        vec!["r", "l", "source_hdeg", "target_hdeg", "min_source_tdeg", "max_target_tdeg", "slack", "shift_bound", "holds"],
    );
    r.ok = c.passed;
    for i in &c.instances {
        r.rows.push(vec![
            i.r.to_string(),
            i.l.to_string(),
            i.source_hdeg.to_string(),
            opt(i.target_hdeg),
            opt(i.min_source_tdeg),
            opt(i.max_target_tdeg),
            opt(i.slack),
            i.shift_bound.to_string(),
            i.holds.to_string(),
        ]);
    }
    for w in &c.witnesses {
        r.notes.push(format!(
            "r = {}: (r-1)(2-d-nd) = {}, (2dn-d-2) - r(dn+d-2) = {}, 2-3d = {}",
            w.r, w.even_to_odd, w.odd_to_even, w.slack_at_two
        ));
    }
    r.notes.push(format!("{} instances need the 2r-1 shift", c.needs_shift));
    if !c.witnesses.is_empty() {
        r.notes.push(format!("witnesses match the generic slack: {}", c.witnesses_match));
    }
    r.field("certificate", to_json(&c)?);
    Ok(r)
}

fn verify(args: &VerifyArgs) -> Result<Report, CliError> {
    let s: &ManifoldSpec = &args.target.manifold;
    if args.hi < 0 {
        return Err(CliError::Usage(format!("--hi must be nonnegative, got {}", args.hi)));
    }
    let closed = closed_form_series(s);
    let from_e2 = e2_series(&make_presentation(s)).map_err(fail)?;
    let mismatch = equal_in_window(&closed, &from_e2, 0, args.hi).map_err(fail)?;
    let (left, right) = (closed.expand(0, args.hi).map_err(fail)?, from_e2.expand(0, args.hi).map_err(fail)?);
    let mut r = Report::new("verify", s.name(), vec!["exponent", "closed_form", "e2"]);
    r.ok = mismatch.is_none();
    for (k, (a, b)) in left.iter().zip(&right).enumerate() {
        r.rows.push(vec![k.to_string(), a.to_string(), b.to_string()]);
    }
    r.notes.push(format!("closed form: {closed}"));
    r.notes.push(format!("E2 series: {from_e2}"));
    if let Some(m) = mismatch {
        r.notes.push(format!("first mismatch at t^{}: closed form {}, E2 {}", m.exponent, m.left, m.right));
    }
    let support = closed.check_nonnegative_support().err().map(|e| e.to_string());
    if let Some(e) = &support {
        r.notes.push(format!("closed form: {e}"));
    }
    r.field("hi", args.hi);
    r.field("closed_form", closed.to_string());
    r.field("e2_series", from_e2.to_string());
    r.field("closed_form_coefficients", left);
    r.field("e2_coefficients", right);
    r.field("mismatch", to_json(&mismatch)?);
    r.field("closed_form_support", to_json(&support)?);
    Ok(r)
}
