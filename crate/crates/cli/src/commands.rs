use celltower_core::*;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cli::{Algebra, DecompChoice, EnumTarget, PosetOrder};
use crate::error::CliError;
use crate::json::{class_label, residues_json, ClassJson, ParamsJson, ShapeJson, TableauJson};
use crate::render::{Output, Table};

const DEVIATION: &str = "PAPER-CLAIM-DEVIATION";

pub fn params_validate(v: &ValidatedParams) -> Output {
    let mut t = Table::new(["field", "value"]);
    t.push(["r".to_string(), v.r().to_string()]);
    t.push(["p".to_string(), v.p().to_string()]);
    t.push(["d".to_string(), v.d().to_string()]);
    t.push(["n".to_string(), v.n().to_string()]);
    t.push(["e".to_string(), v.e().to_string()]);
    t.push(["charges".to_string(), format!("{:?}", v.charges())]);
    Output::new(json!({ "valid": true, "params": ParamsJson::from(v) }), t)
}

pub fn enumerate(v: &ValidatedParams, target: EnumTarget) -> Output {
    let shapes = enumerate_multipartitions(v);
    match target {
        EnumTarget::Shapes => {
            let mut t = Table::new(["shape", "standard_tableaux", "reducible"]);
            let items: Vec<Value> = shapes
                .iter()
                .map(|s| {
                    let count = standard_tableau_count(s);
                    t.push([
                        s.to_string(),
                        count.to_string(),
                        is_reducible(s).to_string(),
                    ]);
                    json!({
                        "shape": ShapeJson::from(s),
                        "label": s.to_string(),
                        "standard_tableaux": count as u64,
                        "reducible": is_reducible(s),
                    })
                })
                .collect();
            Output::new(json!({ "params": ParamsJson::from(v), "shapes": items }), t)
        }
        EnumTarget::Tableaux => {
            let mut t = Table::new(["tableau", "residues", "degree", "word"]);
            let mut items = Vec::new();
            for s in &shapes {
                for tab in enumerate_standard_tableaux(s) {
                    let res = residue_sequence(&tab, v);
                    let degree =
                        degree_of_tableau(&tab, v).expect("enumerated tableaux are standard");
                    let (_, word) =
                        permutation_of_tableau(&tab).expect("enumerated tableaux are standard");
                    let res_text: Vec<String> = res.iter().map(|r| r.to_string()).collect();
                    let word_text: Vec<String> = word.iter().map(|k| format!("s{k}")).collect();
                    t.push([
                        tab.to_string(),
                        res_text.join(" "),
                        degree.to_string(),
                        word_text.join(" "),
                    ]);
                    items.push(json!({
                        "tableau": TableauJson::from(&tab),
                        "label": tab.to_string(),
                        "residues": residues_json(&res),
                        "degree": degree,
                        "word": word,
                    }));
                }
            }
            Output::new(
                json!({ "params": ParamsJson::from(v), "tableaux": items }),
                t,
            )
        }
    }
}

fn matrix_output(name: &str, labels: Vec<String>, matrix: Vec<Vec<u8>>, extra: Value) -> Output {
    let mut t = Table::new(std::iter::once(String::new()).chain(labels.iter().cloned()));
    for (label, row) in labels.iter().zip(&matrix) {
        t.push(std::iter::once(label.clone()).chain(row.iter().map(|x| x.to_string())));
    }
    let mut json = json!({ "order": name, "labels": labels, "matrix": matrix });
    if let (Value::Object(dst), Value::Object(src)) = (&mut json, extra) {
        dst.extend(src);
    }
    Output::new(json, t)
}

fn table_matrix(table: &RelationTable) -> Vec<Vec<u8>> {
    (0..table.len())
        .map(|i| (0..table.len()).map(|j| table.get(i, j) as u8).collect())
        .collect()
}

pub fn poset(v: &ValidatedParams, order: PosetOrder) -> Output {
    let (name, labels, table) = match order {
        PosetOrder::Orbit => {
            let classes = orbit_classes(v);
            let table = RelationTable::build(&classes, orbit_leq_p);
            ("orbit", classes.iter().map(class_label).collect(), table)
        }
        _ => {
            let shapes = enumerate_multipartitions(v);
            let (name, table) = match order {
                PosetOrder::Shape => (
                    "shape",
                    RelationTable::build(&shapes, |a, b| shape_leq(ShapeOrder::Shape, a, b)),
                ),
                PosetOrder::ShapePrime => (
                    "shape_prime",
                    RelationTable::build(&shapes, |a, b| shape_leq(ShapeOrder::ShapePrime, a, b)),
                ),
                _ => ("dominance", RelationTable::build(&shapes, dominance_leq)),
            };
            (name, shapes.iter().map(|s| s.to_string()).collect(), table)
        }
    };
    let report = verify_table(&table);
    let extra = json!({
        "poset": report.is_poset(),
        "violations": {
            "reflexivity": report.reflexivity_count,
            "antisymmetry": report.antisymmetry_count,
            "transitivity": report.transitivity_count,
        },
    });
    matrix_output(name, labels, table_matrix(&table), extra)
}

pub fn orbits(v: &ValidatedParams) -> Output {
    let classes = orbit_classes(v);
    let mut t = Table::new(["class", "size", "reducible", "original", "representatives"]);
    for c in &classes {
        let reps: Vec<String> = c.representatives().iter().map(|s| s.to_string()).collect();
        t.push([
            class_label(c),
            c.size().to_string(),
            c.is_reducible().to_string(),
            c.original().map(|s| s.to_string()).unwrap_or_default(),
            reps.join(" "),
        ]);
    }
    let items: Vec<ClassJson> = classes.iter().map(Into::into).collect();
    Output::new(
        json!({ "params": ParamsJson::from(v), "classes": items }),
        t,
    )
}

#[derive(Serialize)]
struct LabelJson {
    label: String,
    shape: ShapeJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    members: Vec<ShapeJson>,
    tableau_count: usize,
    degrees: Vec<i64>,
}

pub fn datum(v: &ValidatedParams, algebra: Algebra) -> Result<Output, CliError> {
    let datum = match algebra {
        Algebra::R1n => build_datum_r1n(v),
        Algebra::Rpn => build_datum_rpn(v),
        Algebra::Skew => quotient_skew_datum(&build_datum_r1n(v), &LayerShift { p: v.p() })?,
    };
    let mut t = Table::new(["label", "tableaux", "degrees"]);
    let labels: Vec<LabelJson> = datum
        .cells
        .iter()
        .map(|c| {
            let degrees: Vec<String> = c.degrees.iter().map(|d| d.to_string()).collect();
            t.push([
                c.label.to_string(),
                c.tableaux.len().to_string(),
                degrees.join(" "),
            ]);
            LabelJson {
                label: c.label.to_string(),
                shape: (&c.label.shape).into(),
                k: c.label.k,
                members: c.members.iter().map(Into::into).collect(),
                tableau_count: c.tableaux.len(),
                degrees: c.degrees.clone(),
            }
        })
        .collect();
    let involution = if datum.involution_is_trivial() {
        json!("trivial")
    } else {
        let map: serde_json::Map<String, Value> = datum
            .involution
            .iter()
            .enumerate()
            .map(|(i, &j)| {
                (
                    datum.cells[i].label.to_string(),
                    json!(datum.cells[j].label.to_string()),
                )
            })
            .collect();
        Value::Object(map)
    };
    let name = match algebra {
        Algebra::R1n => "r1n",
        Algebra::Rpn => "rpn",
        Algebra::Skew => "skew",
    };
    t.push([
        "basis_count".to_string(),
        datum.basis_count().to_string(),
        String::new(),
    ]);
    Ok(Output::new(
        json!({
            "algebra": name,
            "params": ParamsJson::from(v),
            "labels": labels,
            "basis_count": datum.basis_count(),
            "involution": involution,
            "diagnostics": datum.diagnostics,
        }),
        t,
    ))
}

fn decomp_order(choice: DecompChoice) -> DecompOrder {
    match choice {
        DecompChoice::Dominance => DecompOrder::Dominance,
        DecompChoice::Shape => DecompOrder::Shape,
        DecompChoice::ShapePrime => DecompOrder::ShapePrime,
    }
}

pub fn parallel_decomposition(v: &ValidatedParams, order: DecompOrder) -> DecompositionMatrix {
    let ctx = DecompositionContext::new(v, order);
    let n = ctx.len();
    let cells = (0..n * n)
        .into_par_iter()
        .map(|k| ctx.entry(k / n, k % n))
        .collect();
    ctx.assemble(cells)
}

pub fn decomp(v: &ValidatedParams, choice: DecompChoice, witnesses: bool) -> Output {
    let m = parallel_decomposition(v, decomp_order(choice));
    let labels: Vec<String> = m.classes.iter().map(class_label).collect();
    let witness_list: Vec<Value> = m
        .witnesses
        .iter()
        .map(|(&(i, j), t)| {
            json!({ "lambda": labels[i], "mu": labels[j], "tableau": TableauJson::from(t) })
        })
        .collect();
    let mut extra = json!({
        "order_used": m.order_used.name(),
        "identity": m.is_identity(),
        "diagnostics": m.diagnostics,
    });
    if witnesses {
        extra["witnesses"] = Value::Array(witness_list.clone());
    }
    let mut out = matrix_output("decomposition", labels, m.entries.clone(), extra);
    if witnesses {
        out.csv_trailer =
            Some(json!({ "order_used": m.order_used.name(), "witnesses": witness_list }));
    }
    out
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
    pub deviations: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            ..Default::default()
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn deviate(&mut self, what: String) {
        self.deviations.push(format!("{DEVIATION}: {what}"));
    }

    fn finish(mut self) -> Self {
        self.passed = self.failures.is_empty();
        self
    }
}

fn suite_posets(v: &ValidatedParams) -> SuiteResult {
    let mut s = SuiteResult::new("poset-axioms");
    let shapes = enumerate_multipartitions(v);
    for (name, kind) in [
        ("shape", ShapeOrder::Shape),
        ("shape_prime", ShapeOrder::ShapePrime),
    ] {
        let report = verify_poset_axioms(&shapes, |a, b| shape_leq(kind, a, b));
        s.expect(report.is_poset(), || format!("{name} order: {report:?}"));
    }
    let dominance = verify_poset_axioms(&shapes, dominance_leq);
    if !dominance.is_poset() {
        s.deviate(format!(
            "dominance order is not a partial order: {dominance:?}"
        ));
    }
    let classes = orbit_classes(v);
    let orbit = verify_poset_axioms(&classes, orbit_leq_p);
    if v.p() <= 2 {
        s.expect(orbit.is_poset(), || format!("orbit order: {orbit:?}"));
    } else if !orbit.is_poset() {
        s.deviate(format!(
            "orbit order fails antisymmetry on {} pairs",
            orbit.antisymmetry_count
        ));
    }
    s.finish()
}

fn suite_shift(v: &ValidatedParams) -> SuiteResult {
    let mut s = SuiteResult::new("shift-conditions");
    let report = verify_shift_conditions(v);
    for (name, cond) in [
        ("a", &report.condition_a),
        ("b", &report.condition_b),
        ("c", &report.condition_c),
    ] {
        s.checked += cond.checked;
        if !cond.passed() {
            s.failures.push(format!(
                "condition ({name}): {} failures, e.g. {:?}",
                cond.failures,
                cond.witnesses.first()
            ));
        }
    }
    for dev in &report.deviations {
        s.deviate(format!(
            "{:?} x{}, e.g. {:?}",
            dev.kind,
            dev.count,
            dev.witnesses.first()
        ));
    }
    s.finish()
}

fn suite_orbits(v: &ValidatedParams) -> SuiteResult {
    let mut s = SuiteResult::new("orbit-sizes");
    let mut half = Vec::new();
    for c in orbit_classes(v) {
        let predicted = predicted_orbit_size(c.canonical(), v.p());
        s.expect(c.size() == predicted, || {
            format!("{} has size {} not {predicted}", class_label(&c), c.size())
        });
        if c.size() < v.p() {
            half.push(class_label(&c));
        }
    }
    if !half.is_empty() {
        s.deviate(format!(
            "{} orbits of size p/2: {}",
            half.len(),
            half.join(" ")
        ));
    }
    s.finish()
}

fn suite_dimensions(v: &ValidatedParams) -> SuiteResult {
    let mut s = SuiteResult::new("dimensions");
    let (r, n) = (v.r() as u64, v.n() as u64);
    let full = binomial(r, 2) * binomial(2 * n, n) + 2 * r as u128 - (r * r) as u128;
    let r1n = build_datum_r1n(v).basis_count() as u128;
    s.expect(r1n == full, || format!("r1n basis {r1n} vs {full}"));
    let rpn = build_datum_rpn(v).basis_count() as u128;
    let formula = algebra_dim_formula(v);
    if v.p() % 2 == 1 || v.n() % 2 == 1 {
        s.expect(rpn == formula, || {
            format!("rpn basis {rpn} vs formula {formula}")
        });
    } else if rpn != formula {
        s.deviate(format!(
            "rpn basis {rpn}, closed form {formula} (p and n even)"
        ));
    }
    let kernel = kernel_dimension(v);
    let restricted = build_datum_r1n(&v.layer_zero_restriction()).basis_count() as u128;
    s.expect(rpn - kernel == restricted, || {
        format!("{rpn} - {kernel} vs {restricted}")
    });
    for (c, dim) in cell_module_dims(v) {
        let classes = tableau_class_count(&c, v.p());
        let expected = if c.size() == v.p() { dim } else { dim / 2 };
        s.expect(classes == expected, || {
            format!("{}: {classes} tableau classes, dim {dim}", class_label(&c))
        });
    }
    s.finish()
}

fn suite_datum(v: &ValidatedParams) -> SuiteResult {
    let mut s = SuiteResult::new("cell-data");
    let input = build_datum_r1n(v);
    let rpn = build_datum_rpn(v);
    match quotient_skew_datum(&input, &LayerShift { p: v.p() }) {
        Ok(q) => {
            for (name, d) in [("r1n", &input), ("rpn", &rpn), ("skew", &q)] {
                let bad = d.structural_violations();
                s.expect(bad.is_empty(), || format!("{name}: {bad:?}"));
                for diag in &d.diagnostics {
                    if diag.starts_with(DEVIATION) {
                        s.deviations.push(format!("{name}: {diag}"));
                    }
                }
            }
            s.expect(
                q.basis_count() * v.p() as usize == input.basis_count(),
                || {
                    format!(
                        "quotient basis {} times p vs {}",
                        q.basis_count(),
                        input.basis_count()
                    )
                },
            );
            if orbit_classes(v).iter().all(|c| c.size() == v.p()) {
                let cmp = compare_data(&q, &rpn);
                s.expect(cmp.same_cells_and_bases(), || {
                    format!("quotient vs rpn: {:?}", cmp.differences)
                });
            }
        }
        Err(e) => s.expect(false, || e.to_string()),
    }
    s.finish()
}

fn suite_lemmas(v: &ValidatedParams) -> SuiteResult {
    let mut s = SuiteResult::new("residue-lemmas");
    let report = lemma_property_suite(v);
    s.checked = report.pairs_checked;
    s.failures = report.witnesses;
    if report.counterexamples > s.failures.len() {
        s.failures.push(format!(
            "{} counterexamples in total",
            report.counterexamples
        ));
    }
    for w in orthogonality_surrogate(v) {
        s.failures.push(format!("orthogonality: {w}"));
    }
    s.finish()
}

fn suite_decomposition(v: &ValidatedParams) -> SuiteResult {
    let mut s = SuiteResult::new("decomposition");
    let m = parallel_decomposition(v, DecompOrder::default());
    let check = m.check();
    s.checked = m.classes.len().pow(2);
    s.failures = check.problems.clone();
    if !check.passed() && s.failures.is_empty() {
        s.failures.push("matrix check failed".into());
    }
    s.deviations = m.diagnostics;
    s.finish()
}

fn suite_baby(_: &ValidatedParams) -> SuiteResult {
    let mut s = SuiteResult::new("baby-example");
    for m in 1..=4 {
        let report = baby_example_check(m, BabyOrder::Reversed);
        s.expect(report.passed(), || format!("m={m}: {report:?}"));
    }
    s.finish()
}

pub fn verify_all(v: &ValidatedParams) -> (Output, usize) {
    let suites: [fn(&ValidatedParams) -> SuiteResult; 8] = [
        suite_posets,
        suite_shift,
        suite_orbits,
        suite_dimensions,
        suite_datum,
        suite_lemmas,
        suite_decomposition,
        suite_baby,
    ];
    let results: Vec<SuiteResult> = suites.par_iter().map(|f| f(v)).collect();
    let failed = results.iter().filter(|r| !r.passed).count();
    let mut t = Table::new(["status", "suite", "checked", "detail"]);
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        t.push([
            status.to_string(),
            r.name.to_string(),
            r.checked.to_string(),
            r.failures.first().cloned().unwrap_or_default(),
        ]);
        for d in &r.deviations {
            t.push([
                "NOTE".to_string(),
                r.name.to_string(),
                String::new(),
                d.clone(),
            ]);
        }
    }
    let out = Output::new(
        json!({ "params": ParamsJson::from(v), "passed": failed == 0, "suites": results }),
        t,
    );
    (out, failed)
}
