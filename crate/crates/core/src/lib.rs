//! Exact computation of positive quasi-triangular structures on the
//! bicrossproduct Hopf algebras `H(G; G+, G-)` of finite group factorizations,
//! together with their normal forms and the set-theoretical Yang-Baxter
//! solutions they induce.

pub mod catalog;
pub mod cycle;
pub mod double;
pub mod factorization;
pub mod group;
pub mod groupoid;
pub mod hopf;
pub mod qt;
pub mod report;
pub mod tensor;
pub mod twist;
pub mod ybe;

pub use catalog::{catalog_group, labeled_catalog_group, standard_catalog, CatalogError, LabeledGroup};
pub use cycle::{from_cycle_data, to_cycle_data, CycleData, CycleError};
pub use double::{build_double, standard_double_qt};
pub use factorization::{find_factorizations, make_factorization, FactorizationError, UniqueFactorization};
pub use group::{
    enumerate_homomorphisms, enumerate_subgroup_homomorphisms, enumerate_subgroups, is_normal,
    load_group, semidirect_product, FiniteGroup, GroupError, GroupFile, Homomorphism, Subgroup,
};
pub use groupoid::{build_gamma_plus, Bisection, GammaSet, Groupoid, GroupoidError};
pub use hopf::{build_hopf, AxiomReport, HopfData, StructureMap};
pub use qt::{
    bruteforce_oracle, build_r, check_pair_conditions, check_triangular, check_triangular_datum,
    classify, verify_qt, ConditionReport, QtError, QtPair, RCandidate,
};
pub use report::{classify_report, ClassifyReport, ReportError, ReportOptions, StructureRecord};
pub use tensor::{Rational, TensorElement, TensorError};
pub use twist::{build_quasi_iso, make_shift, normalize_qt, NormalForm, QuasiIso, ShiftMap, TwistError};
pub use ybe::{set_solution, SetSolution, YbeError};
