use serde::Serialize;
use serde_json::{json, Value};

use super::{element_json, Certificate, PowerSumSpec, Verdict, Witness};
use crate::error::Result;
use crate::numfield::NFElement;
use crate::unity::{partition_classes, UnityClassPartition};

#[derive(Clone, Debug, Serialize)]
pub struct TermReport {
    pub n: u64,
    #[serde(serialize_with = "ser_element")]
    pub value: NFElement,
    pub integral: bool,
    pub zero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidueReport {
    pub residue: u64,
    /// `Σ_{a in class} λ_a α_a^residue`.
    #[serde(serialize_with = "ser_element")]
    pub class_sum: NFElement,
    pub vanishes: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassStatus {
    /// Every integral nonzero observation falls on a residue where the class sum vanishes.
    Vanishing,
    /// Every member is an algebraic integer.
    Integral,
    /// Integral observations are not explained by vanishing, yet a member is non-integral.
    Discrepancy,
    /// No `m_n` in the window is a nonzero algebraic integer.
    NoIntegralObservations,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub members: Vec<usize>,
    pub residues: Vec<ResidueReport>,
    pub non_integral_members: Vec<usize>,
    pub uncovered: Vec<u64>,
    pub status: ClassStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerSumReport {
    pub terms: Vec<TermReport>,
    pub partition: UnityClassPartition,
    pub classes: Vec<ClassReport>,
    pub verdict: Verdict,
}

fn ser_element<S: serde::Serializer>(x: &NFElement, s: S) -> std::result::Result<S::Ok, S::Error> {
    element_json(x).serialize(s)
}

impl PowerSumReport {
    pub fn zero_indices(&self) -> Vec<u64> {
        self.terms.iter().filter(|t| t.zero).map(|t| t.n).collect()
    }

    pub fn certificate(&self, window: u64) -> Certificate {
        let mut cert = Certificate::new("powersum", self.verdict, (1, window), window);
        for (j, class) in self.classes.iter().enumerate() {
            match class.status {
                ClassStatus::Discrepancy => {
                    for &a in &class.non_integral_members {
                        cert.witnesses.push(Witness::new(
                            a as u64,
                            format!("alpha_{a} in class {} is not an algebraic integer", j + 1),
                        ));
                    }
                }
                ClassStatus::Vanishing => {
                    let residues: Vec<u64> =
                        class.residues.iter().filter(|r| r.vanishes).map(|r| r.residue).collect();
                    cert.witnesses.push(
                        Witness::new(j as u64 + 1, format!("class {:?} vanishes at residues {:?}", class.members, residues))
                            .with_value(json!({"members": class.members, "residues": residues})),
                    );
                }
                _ => {}
            }
        }
        if self.verdict == Verdict::Inconclusive {
            cert.notes.push("no class was settled by the observations in this window".into());
        }
        cert.notes.push("verdicts describe the finite window only".into());
        let details = serde_json::to_value(self).expect("plain data");
        if let Value::Object(map) = details {
            for (k, v) in map {
                if k != "verdict" {
                    cert.detail(&k, v);
                }
            }
        }
        cert
    }
}

/// Scans `m_n` for `n = 1..=window` and analyses each root-of-unity class.
pub fn powersum_window(spec: &PowerSumSpec, window: u64) -> Result<PowerSumReport> {
    let partition = partition_classes(spec.alphas())?;
    let h = partition.effective_torsion;

    let mut powers: Vec<NFElement> = spec.alphas().to_vec();
    let mut terms = Vec::with_capacity(window as usize);
    for n in 1..=window {
        if n > 1 {
            for (p, a) in powers.iter_mut().zip(spec.alphas()) {
                *p = &*p * a;
            }
        }
        let value = spec
            .lambdas()
            .iter()
            .zip(&powers)
            .fold(spec.field().zero(), |acc, (l, p)| &acc + &(l * p));
        let zero = value.is_zero();
        let integral = zero || value.is_algebraic_integer();
        terms.push(TermReport { n, value, integral, zero });
    }

    let mut classes = Vec::with_capacity(partition.classes.len());
    for class in &partition.classes {
        let members = class.indices();
        let residues: Vec<ResidueReport> = (0..h)
            .map(|m| {
                let class_sum = members.iter().fold(spec.field().zero(), |acc, &a| {
                    &acc + &(&spec.lambdas()[a - 1] * &spec.alphas()[a - 1].pow(m))
                });
                let vanishes = class_sum.is_zero();
                ResidueReport { residue: m, class_sum, vanishes }
            })
            .collect();
        let observed: Vec<u64> = terms.iter().filter(|t| t.integral && !t.zero).map(|t| t.n).collect();
        let uncovered: Vec<u64> =
            observed.iter().copied().filter(|n| !residues[(n % h) as usize].vanishes).collect();
        let non_integral_members: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&a| !spec.alphas()[a - 1].is_algebraic_integer())
            .collect();
        let status = if observed.is_empty() {
            ClassStatus::NoIntegralObservations
        } else if uncovered.is_empty() {
            ClassStatus::Vanishing
        } else if non_integral_members.is_empty() {
            ClassStatus::Integral
        } else {
            ClassStatus::Discrepancy
        };
        classes.push(ClassReport { members, residues, non_integral_members, uncovered, status });
    }

    let has = |s: ClassStatus| classes.iter().any(|c| c.status == s);
    let verdict = if has(ClassStatus::Discrepancy) {
        Verdict::FailWitness
    } else if has(ClassStatus::Vanishing) {
        Verdict::VanishingClass
    } else if classes.iter().all(|c| c.status == ClassStatus::Integral) {
        Verdict::Integral
    } else {
        Verdict::Inconclusive
    };
    Ok(PowerSumReport { terms, partition, classes, verdict })
}
