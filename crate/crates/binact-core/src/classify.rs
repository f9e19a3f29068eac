//! Classification of transitive distributive binary actions.
//!
//! Every transitive distributive action is isomorphic to the coset action
//! of the stationary subgroup `H = G_(x0,x0)` of any basepoint: [`classify`]
//! builds that model and the isomorphism `coset ↦ rep(x0, x0)` and verifies,
//! rather than assumes, that the map is well defined on cosets, bijective,
//! and biequivariant, and that `H` is normal. When the action is also
//! effective the subgroup collapses and the model is exactly the conjugate
//! left translation of the group on itself; [`classify_effective`] checks
//! that stronger conclusion entry for entry.

use alloc::vec::Vec;
use core::fmt;

use crate::action::{
    biequivariance_violation, BinaryAction, CosetAction, DistributivityWitness,
    TransitivityWitness,
};
use crate::group::{CosetSpace, SubgroupElems};

/// Errors from classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyError {
    /// The action is not distributive; classification does not apply.
    NotDistributive(DistributivityWitness),
    /// The action is not transitive; classification does not apply.
    NotTransitive(TransitivityWitness),
    /// The action has a nontrivial kernel, so the effective form does not
    /// apply.
    NotEffective { kernel: Vec<usize> },
    /// The basepoint is outside the carrier.
    BasepointOutOfRange { index: usize, size: usize },
    /// Two members of one coset land on different points under
    /// `g ↦ g(x0, x0)`, so the isomorphism is not well defined. Cannot
    /// occur for a distributive transitive action; reported rather than
    /// trusted.
    RepresentativeInconsistency {
        coset: usize,
        rep: usize,
        other: usize,
        rep_value: usize,
        other_value: usize,
    },
    /// A final structural check failed (unreachable; reported rather than
    /// trusted).
    ModelVerification {
        bijective: bool,
        biequivariant: bool,
        subgroup_normal: bool,
    },
    /// The effective model differs from conjugate translation
    /// (unreachable; reported rather than trusted).
    EffectiveModelMismatch,
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::NotDistributive(w) => write!(
                f,
                "action is not distributive: at g={}, h={}, ({}, {}, {}) the sides are {} and {}",
                w.g, w.h, w.x, w.y, w.z, w.lhs, w.rhs
            ),
            ClassifyError::NotTransitive(w) => write!(
                f,
                "action is not transitive: the orbit of {} has {} of the required points",
                w.x,
                w.orbit.len()
            ),
            ClassifyError::NotEffective { kernel } => write!(
                f,
                "action is not effective: {} elements act as the unit",
                kernel.len()
            ),
            ClassifyError::BasepointOutOfRange { index, size } => {
                write!(f, "basepoint {index} outside 0..{size}")
            }
            ClassifyError::RepresentativeInconsistency {
                coset,
                rep,
                other,
                rep_value,
                other_value,
            } => write!(
                f,
                "coset {coset} members {rep} and {other} send the basepoint to \
                 {rep_value} and {other_value}"
            ),
            ClassifyError::ModelVerification {
                bijective,
                biequivariant,
                subgroup_normal,
            } => write!(
                f,
                "model verification failed: bijective={bijective}, \
                 biequivariant={biequivariant}, subgroup normal={subgroup_normal}"
            ),
            ClassifyError::EffectiveModelMismatch => {
                write!(f, "effective model differs from conjugate translation")
            }
        }
    }
}

impl core::error::Error for ClassifyError {}

/// Outcomes of the structural checks run on a finished classification. All
/// fields are true on success; kept explicit so reports can show what was
/// verified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassificationChecks {
    /// The subgroup is the stationary subgroup of the basepoint pair.
    pub subgroup_is_stabilizer: bool,
    /// The stationary subgroup is normal.
    pub subgroup_normal: bool,
    /// `g ↦ g(x0, x0)` is constant on each coset.
    pub iso_well_defined: bool,
    /// The induced map from cosets to the carrier is a bijection.
    pub iso_bijective: bool,
    /// The bijection intertwines the coset action with the given action.
    pub iso_biequivariant: bool,
}

impl ClassificationChecks {
    pub fn all_hold(&self) -> bool {
        self.subgroup_is_stabilizer
            && self.subgroup_normal
            && self.iso_well_defined
            && self.iso_bijective
            && self.iso_biequivariant
    }
}

/// A verified classification: the stationary subgroup of the basepoint, the
/// coset model it induces, and the checked isomorphism onto the original
/// carrier.
#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub basepoint: usize,
    pub subgroup: SubgroupElems,
    pub cosets: CosetSpace,
    pub model: BinaryAction,
    /// `iso[c]` is the carrier point every member of coset `c` sends the
    /// basepoint to.
    pub iso: Vec<usize>,
    pub checks: ClassificationChecks,
}

/// Classifies a distributive transitive action: computes
/// `H = G_(x0,x0)`, builds the coset action of `H`, and verifies that
/// `gH ↦ g(x0, x0)` is a biequivariant bijection.
pub fn classify(action: &BinaryAction, basepoint: usize) -> Result<ClassificationResult, ClassifyError> {
    let n = action.space_size();
    if basepoint >= n {
        return Err(ClassifyError::BasepointOutOfRange {
            index: basepoint,
            size: n,
        });
    }
    if let Some(&w) = action.distributivity().witness() {
        return Err(ClassifyError::NotDistributive(w));
    }
    if let Some(w) = action.transitivity().witness() {
        return Err(ClassifyError::NotTransitive(w.clone()));
    }

    let group = action.group();
    let subgroup = action
        .stabilizer_pair(basepoint, basepoint)
        .expect("basepoint checked in range");
    let subgroup_is_stabilizer = subgroup
        .members()
        .iter()
        .all(|&g| action.at(g, basepoint, basepoint) == basepoint)
        && group
            .elements()
            .filter(|&g| action.at(g, basepoint, basepoint) == basepoint)
            .count()
            == subgroup.len();
    let subgroup_normal = group.is_normal(&subgroup);

    let CosetAction { action: model, cosets } = BinaryAction::coset(group, &subgroup)
        .expect("the stationary subgroup of a distributive action is normal");

    // The candidate isomorphism, verified constant over each coset.
    let mut iso = Vec::with_capacity(cosets.count());
    for c in 0..cosets.count() {
        let rep = cosets.rep(c);
        let value = action.at(rep, basepoint, basepoint);
        for other in cosets.members(c) {
            let other_value = action.at(other, basepoint, basepoint);
            if other_value != value {
                return Err(ClassifyError::RepresentativeInconsistency {
                    coset: c,
                    rep,
                    other,
                    rep_value: value,
                    other_value,
                });
            }
        }
        iso.push(value);
    }
    let iso_well_defined = true;

    let mut hit = alloc::vec![false; n];
    for &v in &iso {
        hit[v] = true;
    }
    let iso_bijective = iso.len() == n && hit.iter().all(|&b| b);

    let iso_biequivariant = match biequivariance_violation(&model, action, &iso) {
        Ok(None) => true,
        Ok(Some(_)) => false,
        Err(_) => false,
    };

    let checks = ClassificationChecks {
        subgroup_is_stabilizer,
        subgroup_normal,
        iso_well_defined,
        iso_bijective,
        iso_biequivariant,
    };
    if !checks.all_hold() {
        return Err(ClassifyError::ModelVerification {
            bijective: iso_bijective,
            biequivariant: iso_biequivariant,
            subgroup_normal,
        });
    }
    Ok(ClassificationResult {
        basepoint,
        subgroup,
        cosets,
        model,
        iso,
        checks,
    })
}

/// Classifies an effective distributive transitive action, asserting the
/// sharper conclusion: the stationary subgroup is trivial and the coset
/// model coincides with conjugate left translation entry for entry.
pub fn classify_effective(
    action: &BinaryAction,
    basepoint: usize,
) -> Result<ClassificationResult, ClassifyError> {
    let kernel = action.kernel();
    if !kernel.is_trivial() {
        return Err(ClassifyError::NotEffective {
            kernel: kernel.members().to_vec(),
        });
    }
    let result = classify(action, basepoint)?;
    if !result.subgroup.is_trivial() {
        return Err(ClassifyError::EffectiveModelMismatch);
    }
    // With a trivial subgroup the cosets are singletons indexed by their
    // least member, i.e. by the elements themselves, so the tables are
    // directly comparable.
    let translation = BinaryAction::conjugate_translation(action.group().clone());
    if result.model != translation {
        return Err(ClassifyError::EffectiveModelMismatch);
    }
    Ok(result)
}

/// Witness that some pair stabilizer differs from the kernel in a
/// transitive distributive action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelStabilizerWitness {
    pub y: usize,
    pub z: usize,
}

/// Outcome of checking that every pair stabilizer equals the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelStabilizerReport {
    pub kernel: Vec<usize>,
    witness: Option<KernelStabilizerWitness>,
}

impl KernelStabilizerReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&KernelStabilizerWitness> {
        self.witness.as_ref()
    }
}

/// For a transitive distributive action, every stationary subgroup
/// `G_(y,z)` equals the kernel. Requires distributivity and transitivity;
/// the sweep over all pairs is reported, not assumed.
pub fn verify_kernel_stabilizer(action: &BinaryAction) -> Result<KernelStabilizerReport, ClassifyError> {
    if let Some(&w) = action.distributivity().witness() {
        return Err(ClassifyError::NotDistributive(w));
    }
    if let Some(w) = action.transitivity().witness() {
        return Err(ClassifyError::NotTransitive(w.clone()));
    }
    let kernel = action.kernel();
    let n = action.space_size();
    for y in 0..n {
        for z in 0..n {
            let stab = action.stabilizer_pair(y, z).expect("in range");
            if stab.members() != kernel.members() {
                return Ok(KernelStabilizerReport {
                    kernel: kernel.members().to_vec(),
                    witness: Some(KernelStabilizerWitness { y, z }),
                });
            }
        }
    }
    Ok(KernelStabilizerReport {
        kernel: kernel.members().to_vec(),
        witness: None,
    })
}
