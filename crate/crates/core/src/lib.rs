//! Exact combinatorial engine for the generalised Temperley-Lieb algebras
//! `TL(r,1,n)` and their fixed-point subalgebras `TL(r,p,n)`.
//!
//! Everything here is pure label arithmetic over 3D multipartitions with at
//! most two single-column components: enumeration of shapes and standard
//! tableaux, the orders used by the cellular structures, the cyclic layer
//! shift and its orbits, symbolic cell data (including the generic
//! shift-automorphism quotient), cell-module dimensions and decomposition
//! matrices.
//!
//! The crate is `no_std` and only needs `alloc`. IO, serialization and the
//! command-line front end live in the companion `celltower` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cellular;
pub mod combinatorics;
pub mod orbits;
pub mod orders;
pub mod params;
pub mod repr;

pub use cellular::{
    baby_example_check, build_datum_r1n, build_datum_rpn, compare_data, quotient_skew_datum,
    tableau_class_representatives, BabyOrder, BabyReport, BasisElement, BasisLabel, Cell,
    CellDatum, CellLabel, CellularError, CycInt, DatumComparison, DatumKind, FormalSum, LayerShift,
    ShiftAutomorphism,
};
pub use combinatorics::{
    binomial, degree_of_tableau, enumerate_multipartitions, enumerate_standard_tableaux,
    garnir_tableaux, initial_tableau, killed_idempotent_pattern, node_order_cmp,
    permutation_of_tableau, residue_of_node, residue_sequence, standard_tableau_count,
    tableau_from_permutation, Column, CombinatoricsError, FloorIndex, Multipartition, Node,
    Permutation, Residue, ResidueSequence, Tableau,
};
pub use orbits::{
    canonical_representative, is_reducible, orbit_classes, original_representative,
    predicted_orbit_size, shift_order_violations, sigma_shape, sigma_tableau, translate_shape,
    translate_tableau, verify_shift_conditions, ConditionResult, Deviation, DeviationKind,
    OrbitClass, OrbitError, ShiftReport,
};
pub use orders::{
    dominance_leq, leq_floor, orbit_leq_p, shape_leq, verify_poset_axioms, verify_table,
    FloorOrder, OrderKind, PosetReport, RelationTable, ShapeOrder,
};
pub use params::{validate_params, AlgebraParams, ParamsError, ValidatedParams, MAX_N};
pub use repr::{
    algebra_dim_formula, cell_module_dims, decomposition_matrix, kernel_dimension,
    lemma_property_suite, lemma_property_suite_with, orthogonality_surrogate, quotient_map_image,
    residue_match_exists, tableau_class_count, DecompOrder, DecompositionContext,
    DecompositionMatrix, LemmaReport, MatrixCheck,
};
