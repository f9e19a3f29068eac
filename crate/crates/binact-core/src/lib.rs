//! Finite models of binary group actions and their distributivity theory.
//!
//! Everything here is exhaustively checkable. A binary operation on the
//! carrier `{0, .., n-1}` is an n×n lookup table; under the composition
//! `(f g)(x, y) = f(x, g(x, y))` the tables form a monoid whose invertible
//! elements are exactly the tables with bijective rows. A binary action of a
//! finite group feeds group elements into that monoid, and an action is
//! *distributive* when every element distributes over every other:
//! `g(x, h(y, z)) = h(g(x, y), g(x, z))`.
//!
//! The crate provides:
//!
//! * [`binop`]: operation tables, sections, inverses, and enumeration of the
//!   group of invertible operations;
//! * [`group`]: finite groups presented by Cayley tables, with subgroups,
//!   normality, cosets, and quotients;
//! * [`action`]: validated binary actions, kernels, stabilizers,
//!   transitivity, distributivity checks, and the canonical constructions
//!   (trivial, conjugate translation, inverse conjugation, coset);
//! * [`search`]: catalogs of distributive pairs, distributive subsets, and
//!   generated-subgroup closures;
//! * [`classify`]: the coset model of a transitive distributive action and
//!   the checked isomorphism onto it.
//!
//! The crate is `no_std` (with `alloc`); IO and serialization live in the
//! companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod action;
pub mod binop;
pub mod classify;
pub mod group;
pub mod search;

pub use action::{
    biequivariance_violation, distributive_pair_ops, distributive_pair_sections,
    is_biequivariant, mixed_section_pair, ActionError, BiequivarianceWitness, BinaryAction,
    CosetAction, DistributivityReport, DistributivityWitness, PairReport, PairWitness,
    TransitivityReport, TransitivityWitness,
};
pub use binop::{
    enumerate_c2, enumerate_c2_bounded, enumerate_h2, enumerate_h2_bounded, h2_index, h2_size,
    BinOp, FinSet, OpError, Perm, DEFAULT_ENUMERATION_BOUND,
};
pub use classify::{
    classify, classify_effective, verify_kernel_stabilizer, ClassificationChecks,
    ClassificationResult, ClassifyError, KernelStabilizerReport, KernelStabilizerWitness,
};
pub use group::{
    cyclic, dihedral_square, klein_four, named_group, quaternion, symmetric, validate_group,
    CosetSpace, FiniteGroup, GroupError, GroupValidation, SubgroupElems,
    MAX_SUBGROUP_ENUM_ORDER,
};
pub use search::{
    generate_subgroup_closure, mixed_identity_agreement, DistributiveCatalog,
    MixedIdentityAgreement, SearchError, DEFAULT_CLOSURE_CAP,
};
