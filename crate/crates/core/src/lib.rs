pub mod arrangement;
pub mod certificate;
pub mod classify;
pub mod clique;
pub mod cohomology;
pub mod error;
pub mod exceptional;
pub mod fan;
pub mod offsets;

pub use certificate::{
    verify_counterexample, Certificate, ClaimRecord, ClaimResult, Method, Verdict, VerifyOptions,
};
pub use classify::{
    cross_validate, enumerate_biacyclic, is_biacyclic, membership, BiacyclicLabel,
    ClassificationTable, CoeffBox, Polarity,
};
pub use cohomology::{
    cohomology, higher_cohomology_vanishes, CohomologyDims, CohomologyWitness, Sign, Signature,
};
pub use error::{Error, Result};
pub use exceptional::{
    compatible, find_sequences, is_strongly_exceptional, CompatibilityGraph, ExtProfile,
};
pub use fan::{CharacterPoint, Divisor, Fan, NamedSurface, PicClass, RayVector};
pub use offsets::{solve_offsets, OffsetSolution, OffsetSolutions};
