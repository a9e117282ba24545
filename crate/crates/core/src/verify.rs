//! Named suites of oracle comparisons, each producing a certificate that
//! lists what was compared, on which sizes, and whether it held.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::charpoly::{indicator_matrix, indicators_up_to, inner, multiply_via_xk, CharacterPolynomial};
use crate::cutoff::Cutoffs;
use crate::error::{Error, Result};
use crate::ficombinat::{
    compose_factored, enumerate_injections, factor_pair, factored_pairs, indicator_oracle, MultiPermutation,
    Permutation,
};
use crate::modcalc::{
    hom_dim, hom_dim_via_coinvariants, ind_character, induction_oracle, module_character, subgroups, tensor_decompose,
    FiniteGSet, GroupElements, VirtualFreeModule,
};
use crate::rational::{format_q, q, Q};
use crate::stability::{orthonormality_report, pad, stable_char_poly, stable_decompose};
use crate::symcore::{
    character_table, class_table, irreducible_character_multi, ClassFunction, MultiClass, Partition, SizeVector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Symcore,
    Ficombinat,
    Charpoly,
    Modcalc,
    Stability,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["symcore", "ficombinat", "charpoly", "modcalc", "stability", "all"];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "symcore" => Suite::Symcore,
            "ficombinat" => Suite::Ficombinat,
            "charpoly" => Suite::Charpoly,
            "modcalc" => Suite::Modcalc,
            "stability" => Suite::Stability,
            "all" => Suite::All,
            other => {
                return Err(Error::Parse(format!(
                    "unknown suite {other:?}; expected one of {:?}",
                    Suite::NAMES
                )))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::Symcore,
            Suite::Ficombinat,
            Suite::Charpoly,
            Suite::Modcalc,
            Suite::Stability,
            Suite::All,
        ]
        .iter()
        .position(|s| s == self)
        .expect("listed");
        write!(f, "{}", Suite::NAMES[i])
    }
}

/// One comparison family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub sizes: String,
    pub comparisons: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub suite: String,
    pub max_coord: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

struct Counter(u64);

impl Counter {
    fn eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, what: impl FnOnce() -> String) -> Result<()> {
        self.0 += 1;
        if got != want {
            return Err(Error::VerificationFailed(format!(
                "{}: got {got:?}, expected {want:?}",
                what()
            )));
        }
        Ok(())
    }
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn run(&mut self, name: &str, sizes: String, body: impl FnOnce(&mut Counter) -> Result<()>) -> Result<()> {
        let mut counter = Counter(0);
        let failure = match body(&mut counter) {
            Ok(()) => None,
            Err(Error::VerificationFailed(msg)) => Some(msg),
            Err(e) => return Err(e),
        };
        self.checks.push(Check {
            name: name.to_string(),
            sizes,
            comparisons: counter.0,
            passed: failure.is_none(),
            failure,
        });
        Ok(())
    }
}

fn sv(v: &[usize]) -> SizeVector {
    SizeVector::new(v.to_vec())
}

/// Runs a suite. Mismatches are recorded as failed checks; a cut-off or
/// input error aborts the run.
pub fn run_suite(suite: Suite, cutoffs: &Cutoffs) -> Result<Certificate> {
    let mut rec = Recorder { checks: Vec::new() };
    let limit = cutoffs.oracle;
    let suites = match suite {
        Suite::All => vec![
            Suite::Symcore,
            Suite::Ficombinat,
            Suite::Charpoly,
            Suite::Modcalc,
            Suite::Stability,
        ],
        s => vec![s],
    };
    for s in suites {
        match s {
            Suite::Symcore => symcore_checks(&mut rec, limit, cutoffs)?,
            Suite::Ficombinat => ficombinat_checks(&mut rec, limit, cutoffs)?,
            Suite::Charpoly => charpoly_checks(&mut rec, limit)?,
            Suite::Modcalc => modcalc_checks(&mut rec, limit, cutoffs)?,
            Suite::Stability => stability_checks(&mut rec, limit)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    let passed = rec.checks.iter().all(|c| c.passed);
    Ok(Certificate {
        suite: suite.to_string(),
        max_coord: limit,
        passed,
        checks: rec.checks,
    })
}

fn symcore_checks(rec: &mut Recorder, limit: usize, cutoffs: &Cutoffs) -> Result<()> {
    rec.run(
        "row orthogonality of character tables",
        format!("S_n, n <= {limit}"),
        |c| {
            for n in 0..=limit {
                let table = character_table(&sv(&[n]));
                let classes = class_table(&sv(&[n]));
                for (i, a) in table.values.iter().enumerate() {
                    for (j, b) in table.values.iter().enumerate() {
                        let total = a
                            .iter()
                            .zip(b)
                            .zip(&classes.sizes)
                            .fold(BigInt::zero(), |acc, ((x, y), s)| acc + x * y * BigInt::from(s.clone()));
                        let want = if i == j {
                            BigInt::from(classes.order.clone())
                        } else {
                            BigInt::zero()
                        };
                        c.eq(total, want, || format!("S_{n} rows {i}, {j}"))?;
                    }
                }
            }
            Ok(())
        },
    )?;
    rec.run(
        "trivial plus standard character counts fixed points",
        format!("S_n, 2 <= n <= {limit}"),
        |c| {
            for n in 2..=limit.min(cutoffs.elements) {
                let triv = Partition::row(n);
                let standard = Partition::new(vec![n - 1, 1])?;
                for p in Permutation::all(n) {
                    let mu = MultiClass::single(p.cycle_type());
                    let value = irreducible_character_multi(&MultiClass::single(triv.clone()), &mu)?
                        + irreducible_character_multi(&MultiClass::single(standard.clone()), &mu)?;
                    let fixed = (0..n).filter(|&i| p.apply(i) == i).count();
                    c.eq(value, BigInt::from(fixed), || format!("{p} in S_{n}"))?;
                }
            }
            Ok(())
        },
    )
}

fn ficombinat_checks(rec: &mut Recorder, limit: usize, cutoffs: &Cutoffs) -> Result<()> {
    rec.run(
        "indicator closed form against exhaustive orbit count",
        format!("S_n, n <= {limit}"),
        |c| {
            for n in 0..=limit {
                for nu in class_table(&sv(&[n])).classes.iter() {
                    let sigma = MultiPermutation::of_class(nu);
                    for mu in indicators_up_to(&sv(&[n.min(4)])) {
                        let oracle = indicator_oracle(&mu, &sigma, cutoffs)?;
                        c.eq(crate::charpoly::eval_indicator(&mu, nu), q(oracle as i64), || {
                            format!("{mu} at {nu}")
                        })?;
                    }
                }
            }
            Ok(())
        },
    )?;
    let top = limit.min(5);
    rec.run(
        "factoring through push-outs is a bijection",
        format!("c1, c2 <= 2, x <= {top}"),
        |c| {
            for c1 in 0..=2 {
                for c2 in 0..=2 {
                    for x in 0..=top {
                        let (c1, c2, x) = (sv(&[c1]), sv(&[c2]), sv(&[x]));
                        let left = enumerate_injections(&c1, &x, cutoffs)?;
                        let right = enumerate_injections(&c2, &x, cutoffs)?;
                        let factored = factored_pairs(&c1, &c2, &x, cutoffs)?;
                        c.eq(factored.len(), left.len() * right.len(), || {
                            format!("sizes at {c1},{c2} -> {x}")
                        })?;
                        for f in &factored {
                            let (f1, f2) = compose_factored(f)?;
                            c.eq(&factor_pair(&f1, &f2)?, f, || "factor after compose".into())?;
                        }
                        for f1 in &left {
                            for f2 in &right {
                                let back = compose_factored(&factor_pair(f1, f2)?)?;
                                c.eq(&back, &(f1.clone(), f2.clone()), || "compose after factor".into())?;
                            }
                        }
                    }
                }
            }
            Ok(())
        },
    )
}

fn charpoly_checks(rec: &mut Recorder, limit: usize) -> Result<()> {
    rec.run(
        "indicator evaluation matrices have full column rank",
        "D <= 4; D <= (2,2)".into(),
        |c| {
            let bounds = SizeVector::boxed_range(&sv(&[0]), &sv(&[4]))
                .into_iter()
                .chain(SizeVector::boxed_range(&sv(&[0, 0]), &sv(&[2, 2])));
            for bound in bounds {
                let m = indicator_matrix(&bound);
                c.eq(m.rank(), m.indicators.len(), || format!("bound {bound}"))?;
            }
            Ok(())
        },
    )?;
    rec.run(
        "solver products agree with the cycle-counter ring",
        "degree <= 2; degree <= (1,1)".into(),
        |c| {
            for bound in [sv(&[2]), sv(&[1, 1])] {
                let basis = indicators_up_to(&bound);
                for a in &basis {
                    for b in &basis {
                        let (pa, pb) = (CharacterPolynomial::indicator(a), CharacterPolynomial::indicator(b));
                        c.eq(pa.multiply(&pb)?, multiply_via_xk(&pa, &pb)?, || format!("{a} * {b}"))?;
                    }
                }
            }
            Ok(())
        },
    )?;
    rec.run(
        "inner products of indicators are constant past deg + deg",
        format!("degree <= 2, n <= {limit}"),
        |c| {
            let basis = indicators_up_to(&sv(&[2]));
            for a in &basis {
                for b in &basis {
                    let (pa, pb) = (CharacterPolynomial::indicator(a), CharacterPolynomial::indicator(b));
                    let start = a.sizes().coords()[0] + b.sizes().coords()[0];
                    let stable = inner(&pa, &pb, &sv(&[start]))?;
                    for n in start..=limit.max(start) {
                        c.eq(inner(&pa, &pb, &sv(&[n]))?, stable.clone(), || {
                            format!("<{a},{b}> at {n}")
                        })?;
                    }
                }
            }
            Ok(())
        },
    )
}

fn modcalc_checks(rec: &mut Recorder, limit: usize, cutoffs: &Cutoffs) -> Result<()> {
    rec.run(
        "induction characters against permutation-set oracle",
        format!("c <= 3, d <= {limit}"),
        |c| {
            for size in 0..=3 {
                let group = sv(&[size]);
                let mut sets = vec![
                    FiniteGSet::point(&group, cutoffs)?,
                    FiniteGSet::regular(&group, cutoffs)?,
                ];
                for h in subgroups(&GroupElements::new(&group, cutoffs)?) {
                    sets.push(FiniteGSet::cosets(&group, &h, cutoffs)?);
                }
                for y in &sets {
                    let poly = ind_character(&y.fixed_point_character());
                    for d in 0..=limit {
                        let d = sv(&[d]);
                        c.eq(poly.eval_on(&d)?, induction_oracle(y, &d, cutoffs)?, || {
                            format!("c {group}, d {d}")
                        })?;
                    }
                }
            }
            Ok(())
        },
    )?;
    rec.run(
        "tensor decomposition character is the pointwise product",
        "c1, c2 <= 2, n <= c1 + c2 + 1".into(),
        |c| {
            for c1 in 0..=2 {
                for c2 in 0..=2 {
                    for v in &character_table(&sv(&[c1])).irreducibles {
                        for w in &character_table(&sv(&[c2])).irreducibles {
                            let (cv, cw) = (ClassFunction::irreducible(v), ClassFunction::irreducible(w));
                            let total = module_character(&tensor_decompose(&cv, &cw, cutoffs)?);
                            let (a, b) = (ind_character(&cv), ind_character(&cw));
                            for n in 0..=c1 + c2 + 1 {
                                for nu in class_table(&sv(&[n])).classes.iter() {
                                    c.eq(total.eval(nu), a.eval(nu) * b.eval(nu), || format!("{v} x {w} at {nu}"))?;
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        },
    )?;
    rec.run(
        "hom dimensions: characters against coinvariants of M* (x) N",
        format!("c <= 2, d <= {limit}"),
        |c| {
            let modules: Vec<VirtualFreeModule> = (0..=2)
                .flat_map(|k| character_table(&sv(&[k])).irreducibles.clone())
                .map(|l| VirtualFreeModule::induced(ClassFunction::irreducible(&l)))
                .collect();
            for m in &modules {
                for n in &modules {
                    for d in 0..=limit {
                        let d = sv(&[d]);
                        c.eq(hom_dim(m, n, &d)?, hom_dim_via_coinvariants(m, n, &d, cutoffs)?, || {
                            format!("{m} / {n} at {d}")
                        })?;
                    }
                }
            }
            Ok(())
        },
    )
}

fn stability_checks(rec: &mut Recorder, limit: usize) -> Result<()> {
    rec.run(
        "stable character polynomials against Murnaghan-Nakayama",
        format!("|lambda| <= 4, d <= max({limit}, s + 3)"),
        |c| {
            for k in 0..=4 {
                for lambda in crate::symcore::partitions_of(k).iter() {
                    let lam = MultiClass::single(lambda.clone());
                    let p = stable_char_poly(&lam)?;
                    let start = k + lambda.first_part();
                    for d in start..=limit.max(start + 3) {
                        let d = sv(&[d]);
                        let padded = pad(&lam, &d)?;
                        for nu in class_table(&d).classes.iter() {
                            let chi = Q::from_integer(irreducible_character_multi(&padded, nu)?);
                            c.eq(p.eval(nu), chi, || format!("P_{lambda} at {nu}"))?;
                        }
                    }
                }
            }
            Ok(())
        },
    )?;
    rec.run(
        "stable Gram matrices are the identity",
        "|lambda| <= 3; |lambda| <= (1,1)".into(),
        |c| {
            for bound in [sv(&[3]), sv(&[1, 1])] {
                let report = orthonormality_report(&bound)?;
                for (i, row) in report.gram.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        let want = q(i64::from(i == j));
                        c.eq(format_q(v), format_q(&want), || {
                            format!("entry {i},{j} at bound {bound}")
                        })?;
                    }
                }
            }
            Ok(())
        },
    )?;
    rec.run(
        "stable decompositions reconstruct irreducible inductions",
        "c <= 3".into(),
        |c| {
            for k in 0..=3 {
                for lambda in &character_table(&sv(&[k])).irreducibles {
                    let m = VirtualFreeModule::induced(ClassFunction::irreducible(lambda));
                    let stable = stable_decompose(&m)?;
                    let natural = stable.entries.values().all(|r| r.is_integer() && *r > Q::zero());
                    c.eq(natural, true, || format!("multiplicities of Ind_{k}({lambda})"))?;
                }
            }
            Ok(())
        },
    )
}
