use num_traits::Zero;

use crate::cutoff::Cutoffs;
use crate::error::{Error, Result};
use crate::ficombinat::{pushout_pairs, Injection, MultiInjection, MultiPermutation, Permutation};
use crate::rational::{q_from_uint, Q};
use crate::symcore::{ClassFunction, SizeVector};

use super::module::VirtualFreeModule;

/// `h` with `σ ∘ r = r ∘ h`, when `σ` maps the image of `r` into itself.
fn restrict(r: &MultiInjection, sigma: &MultiPermutation) -> Option<MultiPermutation> {
    let coords = r
        .coords()
        .iter()
        .zip(sigma.coords())
        .map(|(ri, si): (&Injection, &Permutation)| {
            let images = (0..ri.domain())
                .map(|j| ri.preimage(si.apply(ri.apply(j))))
                .collect::<Option<Vec<_>>>()?;
            Some(Permutation::new(images).expect("restriction of a bijection is a bijection"))
        })
        .collect::<Option<Vec<_>>>()?;
    Some(MultiPermutation::new(coords))
}

/// Character on `S_d̄` of `ℚ[PO_d̄(c̄1, c̄2)] ⊗_{S_c̄1 × S_c̄2} (V ⊗ W)`.
///
/// The right action on the push-out set is free, so the character at `σ` is
/// `1/|S_c̄1||S_c̄2|` times the sum of `χ_V(h1) χ_W(h2)` over pairs
/// `(r1, r2)` whose images `σ` preserves, with `h_i = r_i⁻¹ σ r_i`.
pub fn pushout_character(
    chi_v: &ClassFunction,
    chi_w: &ClassFunction,
    d: &SizeVector,
    cutoffs: &Cutoffs,
) -> Result<ClassFunction> {
    let po = pushout_pairs(chi_v.group(), chi_w.group(), d, cutoffs)?;
    let scale = q_from_uint(&(chi_v.group().group_order() * chi_w.group().group_order()));
    let values = ClassFunction::zero(d)
        .table()
        .classes
        .iter()
        .map(|class| {
            let sigma = MultiPermutation::of_class(class);
            let total = po.pairs().iter().fold(Q::zero(), |acc, (r1, r2)| {
                match (restrict(r1, &sigma), restrict(r2, &sigma)) {
                    (Some(h1), Some(h2)) => {
                        let v = chi_v.value(&h1.cycle_type()).expect("h1 lies in S_c1");
                        let w = chi_w.value(&h2.cycle_type()).expect("h2 lies in S_c2");
                        acc + v * w
                    }
                    _ => acc,
                }
            });
            total / &scale
        })
        .collect();
    ClassFunction::new(d.clone(), values)
}

/// `Ind_c̄1(V) ⊗ Ind_c̄2(W)` as a free module: one summand
/// `Ind_d̄(ℚ[PO_d̄] ⊗ (V ⊗ W))` for each `max(c̄1, c̄2) ≤ d̄ ≤ c̄1 + c̄2`.
pub fn tensor_decompose(chi_v: &ClassFunction, chi_w: &ClassFunction, cutoffs: &Cutoffs) -> Result<VirtualFreeModule> {
    let (c1, c2) = (chi_v.group(), chi_w.group());
    if c1.arity() != c2.arity() {
        return Err(Error::ArityMismatch {
            left: c1.arity(),
            right: c2.arity(),
        });
    }
    cutoffs.check_injections(&(c1 + c2))?;
    let summands = SizeVector::boxed_range(&c1.join(c2), &(c1 + c2))
        .into_iter()
        .map(|d| Ok((Q::from_integer(1.into()), pushout_character(chi_v, chi_w, &d, cutoffs)?)))
        .collect::<Result<Vec<_>>>()?;
    VirtualFreeModule::from_summands(c1.arity(), summands)
}

/// Tensor product of virtual free modules, bilinearly.
pub fn tensor(m: &VirtualFreeModule, n: &VirtualFreeModule, cutoffs: &Cutoffs) -> Result<VirtualFreeModule> {
    if m.arity() != n.arity() {
        return Err(Error::ArityMismatch {
            left: m.arity(),
            right: n.arity(),
        });
    }
    let mut out = VirtualFreeModule::zero(m.arity());
    for a in m.summands() {
        for b in n.summands() {
            let piece = tensor_decompose(&a.rep, &b.rep, cutoffs)?.scale(&(&a.coeff * &b.coeff));
            out = out.sum(&piece)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcalc::module_character;
    use crate::rational::q;

    fn sv(v: &[usize]) -> SizeVector {
        SizeVector::new(v.to_vec())
    }

    #[test]
    fn fixed_points_squared() {
        let c = Cutoffs::default();
        let triv = ClassFunction::trivial(&sv(&[1]));
        let got = tensor_decompose(&triv, &triv, &c).unwrap();
        let want = VirtualFreeModule::induced(triv.clone())
            .sum(&VirtualFreeModule::induced(ClassFunction::regular(&sv(&[2]))))
            .unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn unit_object() {
        let c = Cutoffs::default();
        let unit = ClassFunction::trivial(&sv(&[0]));
        let sign = ClassFunction::sign(&sv(&[2]));
        assert_eq!(
            tensor_decompose(&unit, &sign, &c).unwrap(),
            VirtualFreeModule::induced(sign.clone())
        );
        assert_eq!(
            tensor_decompose(&sign, &unit, &c).unwrap(),
            VirtualFreeModule::induced(sign)
        );
    }

    #[test]
    fn character_is_pointwise_product() {
        let c = Cutoffs::default();
        let x = ClassFunction::trivial(&sv(&[1]));
        let sign = ClassFunction::sign(&sv(&[2]));
        let m = tensor_decompose(&x, &sign, &c).unwrap();
        let degrees: Vec<SizeVector> = m.summands().iter().map(|s| s.degree().clone()).collect();
        assert_eq!(degrees, vec![sv(&[2]), sv(&[3])]);
        let lhs = module_character(&m);
        let rhs = module_character(&VirtualFreeModule::induced(x))
            .multiply(&module_character(&VirtualFreeModule::induced(sign)))
            .unwrap();
        assert_eq!(lhs, rhs);
        for n in 2..=6 {
            for nu in ClassFunction::zero(&sv(&[n])).table().classes.iter() {
                assert_eq!(lhs.eval(nu), rhs.eval(nu));
            }
        }
        assert_ne!(lhs.eval(&crate::symcore::MultiClass::identity(&sv(&[3]))), q(0));
    }
}
