//! Secure rates for the two-user Gaussian interference channel with nested
//! lattice codes, cooperative jamming and compute-and-forward decoding.

pub mod channel;
pub mod cnf;
pub mod csv;
pub mod error;
pub mod estimate;
pub mod lattice;
pub mod region;
pub mod sim;

pub use channel::{
    classify_regime, symmetric_split, validate_split, ChannelGains, CheckedSplit,
    InterferenceRegime, PowerSplit,
};
pub use cnf::{
    combination_rates, effective_mac, minimize_sigma, CombinationRates, EffectiveMac,
    IntegerCoefficients, Receiver,
};
pub use error::{Error, Result, UserIndex};
pub use lattice::{ChainLevel, LatticeChain, NestedPair, ScalarLattice};
pub use region::{
    scaling_slope, sdof_sweep, search_split, secure_rates, SdofPoint, SecureRatePair, SplitGrid,
    SplitRule, SweepTemplate,
};
pub use sim::{SimConfig, SimReport};
