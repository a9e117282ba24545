use num_bigint::BigUint;
use num_traits::Zero;
use repstab::charpoly::{expectation, inner, multiply_via_xk, stable_expectation, stable_inner, CharacterPolynomial};
use repstab::ficombinat::{indicator_oracle, MultiPermutation};
use repstab::modcalc::{
    coinvariants_dim, dual, ind_character, induction_oracle_linear, module_character, tensor, VirtualFreeModule,
};
use repstab::rational::{format_q, Q};
use repstab::stability::{orthonormality_report, stable_decompose};
use repstab::symcore::{decompose, MultiClass, SizeVector};
use repstab::verify::{run_suite, Check};
use repstab::wire;
use repstab::{Cutoffs, Error, Result};
use serde_json::{json, Value};

use crate::operand::{self, AnyDocument, DocValue};
use crate::report::{Outcome, Table};
use crate::{Command, Global, RangeArgs};

/// Groups at most this large are also checked by averaging over every element.
const BRUTE_FORCE_ORDER: u32 = 40_320;

/// Accumulates one check.
struct Tally {
    name: &'static str,
    sizes: Vec<String>,
    comparisons: u64,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            sizes: Vec::new(),
            comparisons: 0,
            failure: None,
        }
    }

    fn check(&mut self, at: String, ok: bool, detail: impl FnOnce() -> String) {
        self.comparisons += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(format!("at {at}: {}", detail()));
        }
        if !self.sizes.contains(&at) {
            self.sizes.push(at);
        }
    }

    fn compare<T: PartialEq + std::fmt::Display>(&mut self, at: String, got: &T, want: &T) {
        self.check(at, got == want, || format!("got {got}, expected {want}"));
    }

    /// `None` when nothing was within reach of the check.
    fn finish(self) -> Option<Check> {
        (self.comparisons > 0).then(|| Check {
            name: self.name.to_string(),
            sizes: self.sizes.join(" "),
            comparisons: self.comparisons,
            passed: self.failure.is_none(),
            failure: self.failure,
        })
    }
}

fn primary(flag: &Option<String>, global: &Global, name: &str) -> Result<String> {
    match (flag, &global.input) {
        (Some(text), _) => Ok(text.clone()),
        (None, Some(path)) => Ok(format!("@{}", path.display())),
        (None, None) => Err(Error::Parse(format!("missing --{name} (or --in <file>)"))),
    }
}

fn sizes_json(d: &SizeVector) -> Value {
    json!(d.coords())
}

/// `a..b` on the diagonal, `(1,1)..(3,3)` as a box, or a `;`-separated list.
fn parse_range(text: &str, arity: usize) -> Result<Vec<SizeVector>> {
    let sizes = match text.split_once("..") {
        Some((lo, hi)) => match (lo.trim().parse::<usize>(), hi.trim().parse::<usize>()) {
            (Ok(lo), Ok(hi)) => (lo..=hi).map(|t| SizeVector::splat(arity, t)).collect(),
            _ => SizeVector::boxed_range(&operand::parse_sizes(lo)?, &operand::parse_sizes(hi)?),
        },
        None => text
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(operand::parse_sizes)
            .collect::<Result<Vec<_>>>()?,
    };
    if sizes.is_empty() {
        return Err(Error::Parse(format!("empty range {text:?}")));
    }
    for d in &sizes {
        if d.arity() != arity {
            return Err(Error::ArityMismatch {
                left: arity,
                right: d.arity(),
            });
        }
    }
    Ok(sizes)
}

fn brute_force_reach(d: &SizeVector, cutoffs: &Cutoffs) -> bool {
    cutoffs.check_oracle(d).is_ok() && d.group_order() <= BigUint::from(BRUTE_FORCE_ORDER)
}

/// Mean of `f` over every element of `S_d̄`.
fn brute_mean(d: &SizeVector, cutoffs: &Cutoffs, f: impl Fn(&MultiClass) -> Q) -> Result<Q> {
    let elements = MultiPermutation::all(d, cutoffs)?;
    let total = elements.iter().fold(Q::zero(), |acc, g| acc + f(&g.cycle_type()));
    Ok(total / Q::from_integer(elements.len().into()))
}

fn poly_table(p: &CharacterPolynomial) -> Table {
    let mut table = Table::new(["term".to_string(), "coeff".to_string()]);
    for (mu, c) in p.terms() {
        table.push([format!("binom(X,{mu})"), format_q(c)]);
    }
    table
}

fn module_table(m: &VirtualFreeModule) -> Table {
    let mut table = Table::new(["degree", "coeff", "class", "value"].map(String::from));
    for s in m.summands() {
        for (class, value) in s.rep.entries() {
            table.push([
                s.degree().to_string(),
                format_q(&s.coeff),
                class.to_string(),
                format_q(&value),
            ]);
        }
    }
    table
}

fn series_table(quantity: &str, values: &[(SizeVector, Q)]) -> Table {
    let mut table =
        Table::new(std::iter::once("quantity".to_string()).chain(values.iter().map(|(d, _)| d.to_string())));
    table.push(std::iter::once(quantity.to_string()).chain(values.iter().map(|(_, v)| format_q(v))));
    table
}

fn series_json(values: &[(SizeVector, Q)]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|(d, v)| json!({ "group": sizes_json(d), "value": format_q(v) }))
            .collect(),
    )
}

/// Runs a command, returning its canonical echo and its outcome.
pub fn execute(command: &Command, global: &Global, cutoffs: &Cutoffs) -> Result<(Value, Outcome)> {
    let (name, args, outcome) = match command {
        Command::Indicator { mu, group } => {
            let mu = operand::parse_class(mu)?;
            let group = operand::parse_sizes(group)?;
            let args = json!({ "mu": mu.to_parts(), "group": sizes_json(&group) });
            ("indicator", args, indicator(&mu, &group, cutoffs)?)
        }
        Command::Multiply { p, q } => {
            let p = operand::parse_poly(&primary(p, global, "p")?)?;
            let q = operand::parse_poly(q)?;
            let args = json!({ "p": p.to_doc_value(), "q": q.to_doc_value() });
            ("multiply", args, multiply(&p, &q)?)
        }
        Command::Inner { p, q, range } => {
            let p = operand::parse_poly(&primary(p, global, "p")?)?;
            let q = operand::parse_poly(q)?;
            let sizes = sizes_of(range, p.arity())?;
            let args = json!({ "p": p.to_doc_value(), "q": q.to_doc_value(), "sizes": sizes_arg(&sizes) });
            ("inner", args, inner_cmd(&p, &q, sizes.as_deref(), cutoffs)?)
        }
        Command::Expect { p, range } => {
            let p = operand::parse_poly(&primary(p, global, "p")?)?;
            let sizes = sizes_of(range, p.arity())?;
            let args = json!({ "p": p.to_doc_value(), "sizes": sizes_arg(&sizes) });
            ("expect", args, expect(&p, sizes.as_deref(), cutoffs)?)
        }
        Command::IndChar { rep } => {
            let chi = operand::parse_rep(&primary(rep, global, "rep")?)?;
            let args = json!({ "rep": chi.to_doc_value() });
            ("ind-char", args, ind_char(&chi, cutoffs)?)
        }
        Command::Tensor { m, n } => {
            let m = operand::parse_module(&primary(m, global, "m")?)?;
            let n = operand::parse_module(n)?;
            let args = json!({ "m": m.to_doc_value(), "n": n.to_doc_value() });
            ("tensor", args, tensor_cmd(&m, &n, cutoffs)?)
        }
        Command::Dual { m } => {
            let m = operand::parse_module(&primary(m, global, "m")?)?;
            let args = json!({ "m": m.to_doc_value() });
            ("dual", args, dual_cmd(&m)?)
        }
        Command::Coinv { m, range } => {
            let m = operand::parse_module(&primary(m, global, "m")?)?;
            let sizes = parse_range(range, m.arity())?;
            let args = json!({ "m": m.to_doc_value(), "sizes": sizes_arg(&Some(sizes.clone())) });
            ("coinv", args, coinv(&m, &sizes, cutoffs)?)
        }
        Command::StableDecompose { m } => {
            let m = operand::parse_module(&primary(m, global, "m")?)?;
            let args = json!({ "m": m.to_doc_value() });
            ("stable-decompose", args, stable_decompose_cmd(&m)?)
        }
        Command::Orthonormality { bound } => {
            let bound = operand::parse_sizes(bound)?;
            let args = json!({ "bound": sizes_json(&bound) });
            ("orthonormality", args, orthonormality(&bound)?)
        }
        Command::Verify { suite } => {
            let args = json!({ "suite": suite.to_string() });
            ("verify", args, verify(*suite, cutoffs)?)
        }
        Command::Canon { doc } => {
            let doc = AnyDocument::parse(&primary(doc, global, "doc")?)?;
            let args = json!({ "doc": doc.to_value() });
            ("canon", args, canon(&doc)?)
        }
    };
    let echo = json!({ "name": name, "args": args, "max_coord": cutoffs.oracle });
    Ok((echo, outcome))
}

fn sizes_of(range: &RangeArgs, arity: usize) -> Result<Option<Vec<SizeVector>>> {
    range.range.as_deref().map(|r| parse_range(r, arity)).transpose()
}

fn sizes_arg(sizes: &Option<Vec<SizeVector>>) -> Value {
    match sizes {
        Some(list) => Value::Array(list.iter().map(sizes_json).collect()),
        None => json!("stable"),
    }
}

fn indicator(mu: &MultiClass, group: &SizeVector, cutoffs: &Cutoffs) -> Result<Outcome> {
    let values = CharacterPolynomial::indicator(mu).eval_on(group)?;
    let mut tally = Tally::new("indicator against orbit-class count");
    if cutoffs.check_oracle(group).is_ok() {
        for (class, value) in values.entries() {
            let count = indicator_oracle(mu, &MultiPermutation::of_class(&class), cutoffs)?;
            tally.compare(group.to_string(), &value, &Q::from_integer(count.into()));
        }
    }
    let checks: Vec<Check> = tally.finish().into_iter().collect();
    let agreement = checks.first().map(|c| c.passed);
    let mut table = Table::new(["class".to_string(), group.to_string()]);
    for (class, value) in values.entries() {
        table.push([class.to_string(), format_q(&value)]);
    }
    Ok(Outcome {
        result: json!({ "values": values.to_doc_value(), "oracle_agreement": agreement }),
        table,
        checks,
    })
}

fn multiply(p: &CharacterPolynomial, q: &CharacterPolynomial) -> Result<Outcome> {
    let product = p.multiply(q)?;
    let mut tally = Tally::new("product against cycle-count polynomial route");
    tally.compare(product.degree().to_string(), &product, &multiply_via_xk(p, q)?);
    Ok(Outcome {
        result: product.to_doc_value(),
        table: poly_table(&product),
        checks: tally.finish().into_iter().collect(),
    })
}

fn inner_cmd(
    p: &CharacterPolynomial,
    q: &CharacterPolynomial,
    sizes: Option<&[SizeVector]>,
    cutoffs: &Cutoffs,
) -> Result<Outcome> {
    match sizes {
        None => {
            let value = stable_inner(p, q)?;
            let from = &p.degree() + &q.degree();
            let mut tally = Tally::new("stable inner product one size further");
            let next = from.plus_each(1);
            tally.compare(next.to_string(), &inner(p, q, &next)?, &value);
            Ok(stable_outcome("inner", value, &from, tally))
        }
        Some(sizes) => {
            let values = sizes
                .iter()
                .map(|d| Ok((d.clone(), inner(p, q, d)?)))
                .collect::<Result<Vec<_>>>()?;
            let mut tally = Tally::new("inner product against averaging over group elements");
            for (d, value) in &values {
                if brute_force_reach(d, cutoffs) {
                    tally.compare(
                        d.to_string(),
                        value,
                        &brute_mean(d, cutoffs, |c| p.eval(c) * q.eval(c))?,
                    );
                }
            }
            Ok(series_outcome("inner", &values, tally))
        }
    }
}

fn expect(p: &CharacterPolynomial, sizes: Option<&[SizeVector]>, cutoffs: &Cutoffs) -> Result<Outcome> {
    match sizes {
        None => {
            let value = stable_expectation(p)?;
            let from = p.degree();
            let mut tally = Tally::new("stable expectation one size further");
            let next = from.plus_each(1);
            tally.compare(next.to_string(), &expectation(p, &next)?, &value);
            Ok(stable_outcome("expectation", value, &from, tally))
        }
        Some(sizes) => {
            let values = sizes
                .iter()
                .map(|d| Ok((d.clone(), expectation(p, d)?)))
                .collect::<Result<Vec<_>>>()?;
            let mut tally = Tally::new("expectation against averaging over group elements");
            for (d, value) in &values {
                if brute_force_reach(d, cutoffs) {
                    tally.compare(d.to_string(), value, &brute_mean(d, cutoffs, |c| p.eval(c))?);
                }
            }
            Ok(series_outcome("expectation", &values, tally))
        }
    }
}

fn stable_outcome(quantity: &str, value: Q, from: &SizeVector, tally: Tally) -> Outcome {
    let mut table = Table::new(["quantity".to_string(), "stable".to_string()]);
    table.push([quantity.to_string(), format_q(&value)]);
    Outcome {
        result: json!({ "stable": format_q(&value), "stable_from": sizes_json(from) }),
        table,
        checks: tally.finish().into_iter().collect(),
    }
}

fn series_outcome(quantity: &str, values: &[(SizeVector, Q)], tally: Tally) -> Outcome {
    Outcome {
        result: json!({ "values": series_json(values) }),
        table: series_table(quantity, values),
        checks: tally.finish().into_iter().collect(),
    }
}

fn ind_char(chi: &repstab::symcore::ClassFunction, cutoffs: &Cutoffs) -> Result<Outcome> {
    let poly = ind_character(chi);
    let mut tally = Tally::new("induced character against orbit counting");
    for k in 0..=2 {
        let d = chi.group().plus_each(k);
        if cutoffs.check_oracle(&d).is_ok() {
            let oracle = induction_oracle_linear(chi, &d, cutoffs)?;
            for ((class, got), want) in poly.eval_on(&d)?.entries().into_iter().zip(oracle.values()) {
                tally.compare(format!("{d}:{class}"), &got, want);
            }
        }
    }
    let mut checks: Vec<Check> = tally.finish().into_iter().collect();
    // Sizes are reported per group, not per class.
    for check in &mut checks {
        let mut groups: Vec<&str> = check.sizes.split(' ').filter_map(|s| s.split(':').next()).collect();
        groups.dedup();
        check.sizes = groups.join(" ");
    }
    Ok(Outcome {
        result: poly.to_doc_value(),
        table: poly_table(&poly),
        checks,
    })
}

fn tensor_cmd(m: &VirtualFreeModule, n: &VirtualFreeModule, cutoffs: &Cutoffs) -> Result<Outcome> {
    let product = tensor(m, n, cutoffs)?;
    let (chi_m, chi_n, chi) = (module_character(m), module_character(n), module_character(&product));
    let mut tally = Tally::new("tensor character against pointwise product");
    let top = &m.degree() + &n.degree();
    for d in [top.clone(), top.plus_each(1)] {
        let want = chi_m.eval_on(&d)?.pointwise_mul(&chi_n.eval_on(&d)?)?;
        let got = chi.eval_on(&d)?;
        tally.check(d.to_string(), got == want, || {
            format!("got {}, expected {}", wire::to_json(&got), wire::to_json(&want))
        });
    }
    Ok(Outcome {
        result: product.to_doc_value(),
        table: module_table(&product),
        checks: tally.finish().into_iter().collect(),
    })
}

fn dual_cmd(m: &VirtualFreeModule) -> Result<Outcome> {
    let out = dual(m);
    let mut tally = Tally::new("double dual");
    tally.compare(m.degree().to_string(), &dual(&out), m);
    Ok(Outcome {
        result: out.to_doc_value(),
        table: module_table(&out),
        checks: tally.finish().into_iter().collect(),
    })
}

fn coinv(m: &VirtualFreeModule, sizes: &[SizeVector], cutoffs: &Cutoffs) -> Result<Outcome> {
    let chi = module_character(m);
    let values = sizes
        .iter()
        .map(|d| Ok((d.clone(), coinvariants_dim(m, d)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut frobenius = Tally::new("coinvariants against mean of the character");
    let mut brute = Tally::new("coinvariants against averaging over group elements");
    for (d, value) in &values {
        frobenius.compare(d.to_string(), value, &expectation(&chi, d)?);
        if brute_force_reach(d, cutoffs) {
            brute.compare(d.to_string(), value, &brute_mean(d, cutoffs, |c| chi.eval(c))?);
        }
    }
    let mut outcome = series_outcome("coinvariants", &values, frobenius);
    outcome.checks.extend(brute.finish());
    Ok(outcome)
}

fn stable_decompose_cmd(m: &VirtualFreeModule) -> Result<Outcome> {
    let out = stable_decompose(m)?;
    let chi = module_character(m);
    let mut tally = Tally::new("decomposition reconstructs the module");
    for k in 0..=2 {
        let d = out.valid_from.plus_each(k);
        let got = out.at(&d)?;
        let want = decompose(&chi.eval_on(&d)?);
        tally.check(d.to_string(), got == want, || format!("got {got:?}, expected {want:?}"));
    }
    let mut table = Table::new(["lambda".to_string(), "mult".to_string()]);
    for (lambda, r) in &out.entries {
        table.push([lambda.to_string(), format_q(r)]);
    }
    Ok(Outcome {
        result: out.to_doc_value(),
        table,
        checks: tally.finish().into_iter().collect(),
    })
}

fn orthonormality(bound: &SizeVector) -> Result<Outcome> {
    let report = orthonormality_report(bound)?;
    let mut tally = Tally::new("Gram matrix is the identity");
    for (i, row) in report.gram.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let want = Q::from_integer(i64::from(i == j).into());
            tally.compare(format!("{bound}"), v, &want);
        }
    }
    let labels: Vec<String> = report.labels.iter().map(ToString::to_string).collect();
    let mut table = Table::new(std::iter::once(String::new()).chain(labels.iter().cloned()));
    for (label, row) in labels.iter().zip(&report.gram) {
        table.push(std::iter::once(label.clone()).chain(row.iter().map(format_q)));
    }
    let result = json!({
        "labels": report.labels.iter().map(MultiClass::to_parts).collect::<Vec<_>>(),
        "gram": report.gram.iter().map(|row| row.iter().map(format_q).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        result,
        table,
        checks: tally.finish().into_iter().collect(),
    })
}

fn verify(suite: repstab::verify::Suite, cutoffs: &Cutoffs) -> Result<Outcome> {
    let certificate = run_suite(suite, cutoffs)?;
    let mut table = Table::new(["check", "sizes", "comparisons", "passed"].map(String::from));
    for c in &certificate.checks {
        table.push([
            c.name.clone(),
            c.sizes.clone(),
            c.comparisons.to_string(),
            c.passed.to_string(),
        ]);
    }
    Ok(Outcome {
        result: json!({ "suite": certificate.suite, "max_coord": certificate.max_coord, "passed": certificate.passed }),
        table,
        checks: certificate.checks,
    })
}

fn canon(doc: &AnyDocument) -> Result<Outcome> {
    let value = doc.to_value();
    let text = value.to_string();
    let mut tally = Tally::new("canonical form is a fixed point");
    tally.compare(
        "document".to_string(),
        &AnyDocument::parse(&text)?.to_value().to_string(),
        &text,
    );
    let mut table = Table::new(["document".to_string()]);
    table.push([text]);
    Ok(Outcome {
        result: value,
        table,
        checks: tally.finish().into_iter().collect(),
    })
}
