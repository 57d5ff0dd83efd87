//! Density-matrix simulator and analysis toolkit for ultralow-field (ULF)
//! NMR of strongly coupled heteronuclear spin-1/2 systems.
//!
//! The crate covers the full pipeline of a SQUID-detected ULF experiment on
//! parahydrogen-hyperpolarized samples:
//!
//! * [`spinsys`] — spin systems (¹H/¹⁹F), product operators and lab-frame
//!   Hamiltonians at arbitrary static field;
//! * [`dynamics`] — density states, unitary evolution, hard and shaped
//!   pulses, eigenbasis decoherence, partial trace and FID acquisition;
//! * [`sabre`] — the five-step SABRE preparation producing hyperpolarized
//!   states for the free substrate, the intact Ir complex and dissolved H₂;
//! * [`sequences`] — FAFOS flip-angle sweeps and COSY with four-step phase
//!   cycling;
//! * [`spectra`] — FFT processing, coherence-order decomposition, aliased
//!   multiple-quantum frequency prediction, peak assignment and composite
//!   spectrum weight fitting;
//! * [`presets`] — the bundled 3FPy and EFNA parameter sets.
//!
//! # Conventions
//!
//! All modules share one set of conventions, fixed once here:
//!
//! * Basis ordering: the tensor-product Zeeman basis with **spin 0 as the
//!   most significant factor**; basis index `b` has spin `i` up when bit
//!   `N-1-i` of `b` is clear.
//! * Hamiltonians carry angular frequency units (rad/s) and are written
//!   with `+2π ν I_z` so that the detected single-quantum ¹H line lands at
//!   `+ν(¹H)`.
//! * The coherence order of a matrix element `ρ_{rs}` is `M_r − M_s`
//!   (row minus column), evaluated per species or in total.
//! * Receiver phases combine FIDs as `Σ_k exp(-i φ_rec,k) · FID_k`.

pub mod dynamics;
pub mod error;
pub mod presets;
pub mod sabre;
pub mod sequences;
pub mod spectra;
pub mod spinsys;

pub use error::{Error, Result};

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex<f64>;

/// Dense complex matrix used for operators, states and propagators.
pub type CMatrix = nalgebra::DMatrix<C64>;
