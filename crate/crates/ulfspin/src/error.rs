use thiserror::Error;

/// Errors produced by spin-system validation and the simulation operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate nucleus label `{0}`")]
    DuplicateLabel(String),

    #[error("unsupported species `{0}` (supported: H1, F19)")]
    UnsupportedSpecies(String),

    #[error("unknown nucleus label `{0}` in coupling table")]
    UnknownLabel(String),

    #[error("asymmetric coupling {a}-{b}: {va} Hz vs {vb} Hz")]
    AsymmetricCoupling { a: String, b: String, va: f64, vb: f64 },

    #[error("self coupling `{0},{0}` is not allowed")]
    SelfCoupling(String),

    #[error("malformed coupling key `{0}` (expected \"LABEL1,LABEL2\")")]
    MalformedCouplingKey(String),

    #[error("a spin system must have between 1 and {max} spins, got {got}")]
    SpinCountOutOfRange { got: usize, max: usize },

    #[error("spin index {index} out of range for {nspins}-spin system")]
    SpinIndexOutOfRange { index: usize, nspins: usize },

    #[error("combined system would have {0} spins, above the supported maximum of 8")]
    DimensionOverflow(usize),

    #[error("cannot trace out every spin of the system")]
    EmptyRemainder,

    #[error("polarization {value} for `{label}` outside [-1, 1]")]
    PolarizationOutOfRange { label: String, value: f64 },

    #[error("density matrix is not a valid state: {0}")]
    InvalidState(String),

    #[error("spin systems are inconsistent: {0}")]
    SystemMismatch(String),

    #[error("waveform sample {index} is not finite")]
    NonFiniteWaveform { index: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("component spectrum {index} is identically zero")]
    ZeroComponent { index: usize },

    #[error("spectra axes are incompatible: {0}")]
    AxisMismatch(String),

    #[error("failed to parse spin-system config: {0}")]
    ConfigParse(String),

    #[error("unknown preset `{0}` (available: 3fpy, efna, 3fpy-complex, efna-complex, h2)")]
    UnknownPreset(String),
}

pub type Result<T> = std::result::Result<T, Error>;
