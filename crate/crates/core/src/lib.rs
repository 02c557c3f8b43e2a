//! M-eigenvalues, Z-eigenvalues and strong-ellipticity tests for
//! fourth-order elasticity tensors.

pub mod closed_form;
pub mod ellipticity;
pub mod error;
pub mod linalg;
pub mod numeric;
pub mod rng;
pub mod tensor;

pub use closed_form::{
    anisotropy_factor, m_eigenvalues, orthotropic_coupling, orthotropic_theta13_factored,
    orthotropic_theta13_polynomial, transverse_eigenpairs, wave_velocities, z_eigenvalues,
    LabeledEigenvalue, TableRow, TransverseEigenvectorTable,
};
pub use ellipticity::{
    check_class, check_cubic, check_isotropic, check_orthotropic_sufficient, check_tetragonal,
    check_transverse, positive_definite, strong_ellipticity_numeric, Condition, EllipticityVerdict,
    Mode, PDVerdict, Role, Status,
};
pub use error::{Error, Result};
pub use linalg::{symmetric_eigen, SymmetricEigen};
pub use numeric::{
    alternate, m_spectrum, oracle_min_f, oracle_refine, residual, z_residual, z_spectrum, Branch,
    MEigenpair, MSpectrum, OracleResult, SolverConfig, ZEigenpair, ZSpectrum,
};
pub use rng::SplitMix64;
pub use tensor::{
    detect_class, engineering_to_transverse, rotation_from_quaternion, voigt_index, ClassTag,
    Cubic, ElasticityTensor, EngineeringConstants, Isotropic, MandelMatrix, Mat3, Mat6,
    Orthotropic, SymmetryClass, Tetragonal, TransverseIsotropic, Vec3, VoigtMatrix,
};
